#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dkl/badlib.hpp"
#include "dkl/domino.hpp"
#include "dkl/klpoly.hpp"

using namespace dkl;

namespace {

const CoxeterSystem d4sys(Family::D, 4);
const CoxeterSystem d5sys(Family::D, 5);
const CoxeterSystem d6sys(Family::D, 6);

DominoTableau make(std::initializer_list<std::pair<int, Domino>> doms) {
  std::map<int, Domino> m;
  for (const auto& [k, d] : doms) m.emplace(k, d);
  return DominoTableau(std::move(m));
}

// T_L(w_6) from the worked six-step construction.
DominoTableau tl_w6() {
  return make({{1, Domino({1, 1}, {2, 1})},
               {2, Domino({3, 1}, {4, 1})},
               {3, Domino({1, 2}, {1, 3})},
               {4, Domino({2, 2}, {3, 2})},
               {5, Domino({1, 4}, {1, 5})},
               {6, Domino({2, 3}, {3, 3})}});
}

}  // namespace

TEST_CASE("shape statistics") {
  Shape j{{4, 2}};
  CHECK(j.rho(1) == 4);
  CHECK(j.rho(2) == 2);
  CHECK(j.rho(3) == 0);
  CHECK(j.kappa(1) == 2);
  CHECK(j.kappa(3) == 1);
  CHECK(j.kappa(5) == 0);
  Shape empty;
  CHECK(empty.rho(1) == 0);
  CHECK(empty.kappa(1) == 0);
  Shape single{{1}};
  CHECK(single.rho(1) == 1);
  CHECK(single.kappa(1) == 1);
  CHECK(rho(tl_w6(), 1) == 5);
  CHECK(kappa(tl_w6(), 1) == 4);
  CHECK(rho(tl_w6(), 9) == 0);
}

TEST_CASE("tableau invariants are enforced") {
  CHECK_THROWS_AS(Domino({1, 1}, {2, 2}), std::invalid_argument);
  // Overlap.
  CHECK_THROWS_AS(make({{1, Domino({1, 1}, {1, 2})}, {2, Domino({1, 2}, {1, 3})}}),
                  std::invalid_argument);
  // Not a Young diagram.
  CHECK_THROWS_AS(make({{1, Domino({2, 1}, {2, 2})}}), std::invalid_argument);
  // Labels must increase along rows.
  CHECK_THROWS_AS(make({{2, Domino({1, 1}, {2, 1})}, {1, Domino({1, 2}, {2, 2})}}),
                  std::invalid_argument);
  CHECK_NOTHROW(validate(tl_w6()));
}

TEST_CASE("shuffle cases") {
  // Diagram with rows (3,1,1,1).
  Shape j{{3, 1, 1, 1}};
  // Beyond the first row: untouched.
  CHECK(shuffle_A(j, Domino({1, 4}, {1, 5})) == Domino({1, 4}, {1, 5}));
  // Fully overlapping the row end: bumped to the next row.
  CHECK(shuffle_A(j, Domino({1, 2}, {1, 3})) == Domino({2, 2}, {2, 3}));
  // Half overlap with equal next row: rotated.
  CHECK(shuffle_A(j, Domino({2, 1}, {2, 2})) == Domino({2, 2}, {3, 2}));
  CHECK_THROWS_AS(shuffle_A(j, Domino({1, 1}, {1, 2})), std::invalid_argument);

  // Worked eight-label example: the displaced 8 lands at (2,4),(2,5).
  DominoTableau t7 = make({{1, Domino({1, 1}, {2, 1})},
                           {2, Domino({3, 1}, {4, 1})},
                           {3, Domino({1, 2}, {1, 3})},
                           {4, Domino({2, 2}, {3, 2})},
                           {5, Domino({1, 4}, {1, 5})},
                           {6, Domino({2, 3}, {3, 3})},
                           {7, Domino({1, 6}, {1, 7})}});
  CHECK(shuffle_A(t7.shape(), Domino({1, 6}, {1, 7})) == Domino({2, 4}, {2, 5}));
}

TEST_CASE("alpha insertion") {
  // Appending a maximal label.
  DominoTableau t6 = make({{1, Domino({1, 1}, {2, 1})},
                           {2, Domino({3, 1}, {4, 1})},
                           {3, Domino({1, 2}, {1, 3})},
                           {4, Domino({2, 2}, {3, 2})},
                           {5, Domino({1, 4}, {1, 5})},
                           {6, Domino({2, 3}, {3, 3})}});
  DominoTableau h = alpha_insert(t6, 7, 1);
  CHECK(h.position(7) == Domino({1, 6}, {1, 7}));
  DominoTableau v = alpha_insert(t6, 7, -1);
  CHECK(v.position(7) == Domino({5, 1}, {6, 1}));

  // Empty tableau.
  DominoTableau e;
  CHECK(alpha_insert(e, 3, 1).position(3) == Domino({1, 1}, {1, 2}));
  CHECK(alpha_insert(e, 3, -1).position(3) == Domino({1, 1}, {2, 1}));

  // Non-maximal insertion displaces the 8 via the shuffle map.
  DominoTableau t8 = make({{1, Domino({1, 1}, {2, 1})},
                           {2, Domino({3, 1}, {4, 1})},
                           {3, Domino({1, 2}, {1, 3})},
                           {4, Domino({2, 2}, {3, 2})},
                           {5, Domino({1, 4}, {1, 5})},
                           {6, Domino({2, 3}, {3, 3})},
                           {8, Domino({1, 6}, {1, 7})}});
  DominoTableau ins = alpha_insert(t8, 7, 1);
  CHECK(ins.position(7) == Domino({1, 6}, {1, 7}));
  CHECK(ins.position(8) == Domino({2, 4}, {2, 5}));
  CHECK_THROWS_AS(alpha_insert(t8, 8, 1), std::invalid_argument);
}

TEST_CASE("delta triples") {
  auto w4 = build_wn(d4sys, 4);
  std::vector<std::array<int, 3>> expect{{1, 1, 1}, {2, 4, -1}, {3, 3, 1}, {4, 2, -1}};
  CHECK(delta(w4) == expect);
  auto e = SignedPermutation::identity(d4sys);
  CHECK(delta(e) == std::vector<std::array<int, 3>>{
                        {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}});
  auto w6 = build_wn(d6sys, 6);
  std::vector<std::array<int, 3>> expect6{{1, 1, -1}, {2, 6, -1}, {3, 3, 1},
                                          {4, 4, -1}, {5, 5, 1},  {6, 2, -1}};
  CHECK(delta(w6) == expect6);
}

TEST_CASE("tableau construction") {
  CHECK(tableau(build_wn(d6sys, 6), Side::Left) == tl_w6());

  // Identity: horizontal dominoes across the first row.
  DominoTableau te = tableau(SignedPermutation::identity(d4sys), Side::Left);
  for (int k = 1; k <= 4; ++k)
    CHECK(te.position(k) == Domino({1, 2 * k - 1}, {1, 2 * k}));

  DominoTableau t4 = tableau(build_wn(d4sys, 4), Side::Left);
  CHECK(t4 == make({{1, Domino({1, 1}, {1, 2})},
                    {2, Domino({2, 1}, {3, 1})},
                    {3, Domino({1, 3}, {1, 4})},
                    {4, Domino({2, 2}, {3, 2})}}));

  // T_R(w) = T_L(w^{-1}).
  GroupTable tbl = GroupTable::enumerate(d4sys, 1000);
  for (uint32_t e = 0; e < tbl.size(); e += 3) {
    SignedPermutation w = tbl.element(e);
    CHECK(tableau(w, Side::Right) == tableau(inverse(w), Side::Left));
  }
}

TEST_CASE("tableau of the longest bad element, general shape") {
  // Two families: rank 0 mod 4 puts label 1 flat in the first row; rank
  // 2 mod 4 stacks labels 1 and 2 in the first column.  Odd labels run
  // along the first row, even labels stand in rows two and three.
  for (int n : {6, 8, 10, 12}) {
    CoxeterSystem dn(Family::D, n);
    std::map<int, Domino> expect;
    if (n % 4 == 0) {
      for (int k = 1; k < n; k += 2)
        expect.emplace(k, Domino({1, k}, {1, k + 1}));
      for (int k = 2, j = 1; k <= n; k += 2, ++j)
        expect.emplace(k, Domino({2, j}, {3, j}));
    } else {
      expect.emplace(1, Domino({1, 1}, {2, 1}));
      expect.emplace(2, Domino({3, 1}, {4, 1}));
      for (int k = 3, c = 2; k < n; k += 2, c += 2)
        expect.emplace(k, Domino({1, c}, {1, c + 1}));
      for (int k = 4, j = 2; k <= n; k += 2, ++j)
        expect.emplace(k, Domino({2, j}, {3, j}));
    }
    CHECK(tableau(build_wn(dn, n), Side::Left) == DominoTableau(std::move(expect)));
  }
}

TEST_CASE("partner dominoes and r-values") {
  DominoTableau t = tl_w6();
  CHECK(p_prime_r(t, 1) == 0);
  CHECK(p_prime_r(t, 2) == 4);
  CHECK(p_prime_r(t, 3) == 0);
  CHECK(p_prime_r(t, 4) == 3);
  CHECK(p_prime_r(t, 5) == 0);
  CHECK(p_prime_r(t, 6) == DominoTableau::kOffDiagram);
  CHECK(p_prime(t, 1) == Domino({1, 1}, {1, 2}));
  CHECK(p_prime(t, 6) == Domino({3, 2}, {3, 3}));
  // Every partner shares exactly the fixed square.
  for (int k : t.labels()) {
    Domino d = t.position(k), p = p_prime(t, k);
    CHECK(d.fixed_square() == p.fixed_square());
    CHECK(d.variable_square() != p.variable_square());
  }
}

TEST_CASE("cycles of the worked tableau") {
  DominoTableau t = tl_w6();
  std::vector<Cycle> cs = cycles(t);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].labels == std::vector<int>{1, 2, 3, 5});
  CHECK(cs[0].open);
  CHECK(cs[1].labels == std::vector<int>{4, 6});
  CHECK_FALSE(cs[1].open);

  DominoTableau single = make({{1, Domino({1, 1}, {1, 2})}});
  auto c1 = cycles(single);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].labels == std::vector<int>{1});
  CHECK(c1[0].open);

  for (int n : {6, 8}) {
    CoxeterSystem dn(Family::D, n);
    DominoTableau tw = tableau(build_wn(dn, n), Side::Left);
    std::vector<int> want{1, 2, 3};
    for (int k = 5; k < n; k += 2) want.push_back(k);
    bool found = false;
    for (const Cycle& c : cycles(tw))
      if (c.labels == want && c.open) found = true;
    CHECK(found);
  }
}

TEST_CASE("moving through cycles") {
  DominoTableau t = tl_w6();
  Cycle c1{{1, 2, 3, 5}, true};
  DominoTableau moved = move_through(t, c1);
  CHECK(moved == make({{1, Domino({1, 1}, {1, 2})},
                       {2, Domino({2, 1}, {3, 1})},
                       {3, Domino({1, 3}, {1, 4})},
                       {4, Domino({2, 2}, {3, 2})},
                       {5, Domino({1, 5}, {1, 6})},
                       {6, Domino({2, 3}, {3, 3})}}));
  CHECK_THROWS_AS(move_through(t, Cycle{{1, 2}, true}), std::invalid_argument);

  // Closed cycles fix the shape; commuting moves agree.
  Cycle c2{{4, 6}, false};
  DominoTableau m2 = move_through(t, c2);
  CHECK(m2.shape() == t.shape());
  CHECK(move_through(moved, c2) == move_through(move_through(t, c2), c1));

  // E(T_L(w_n), C1) = T_L(v_n) for n = 6.
  auto se = special_elements(d6sys);
  CHECK(moved == tableau(*se.vn, Side::Left));
}

TEST_CASE("fixed squares keep their labels under cycle moves") {
  GroupTable tbl = GroupTable::enumerate(d4sys, 1000);
  for (uint32_t e = 0; e < tbl.size(); ++e) {
    DominoTableau t = tableau(tbl.element(e), Side::Left);
    for (const Cycle& c : cycles(t)) {
      DominoTableau m = move_through(t, c);
      for (int k : t.labels())
        CHECK(t.position(k).fixed_square() == m.position(k).fixed_square());
      if (c.open)
        CHECK(m.shape().total() == t.shape().total());
      else
        CHECK(m.shape() == t.shape());
    }
  }
}

TEST_CASE("open cycle moves are reversible and commute (all D4 tableaux)") {
  GroupTable tbl = GroupTable::enumerate(d4sys, 1000);
  for (uint32_t e = 0; e < tbl.size(); ++e) {
    DominoTableau t = tableau(tbl.element(e), Side::Left);
    std::vector<Cycle> cs = cycles(t);
    for (const Cycle& c : cs) {
      if (!c.open) continue;
      DominoTableau m = move_through(t, c);
      bool reversible = false;
      for (const Cycle& c2 : cycles(m))
        if (c2.open && move_through(m, c2) == t) reversible = true;
      CHECK(reversible);
    }
    for (size_t i = 0; i < cs.size(); ++i)
      for (size_t j = i + 1; j < cs.size(); ++j)
        CHECK(move_through(move_through(t, cs[i]), cs[j]) ==
              move_through(move_through(t, cs[j]), cs[i]));
  }
}

TEST_CASE("tableau pairs are injective on D4 and D5") {
  for (const CoxeterSystem& sys : {d4sys, d5sys}) {
    GroupTable tbl = GroupTable::enumerate(sys, 2000);
    std::set<std::string> seen;
    for (uint32_t e = 0; e < tbl.size(); ++e) {
      SignedPermutation w = tbl.element(e);
      std::string key = tableau(w, Side::Left).serialize() + "/" +
                        tableau(w, Side::Right).serialize();
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("tableau cells match mu-graph cells on D4") {
  KLContext ctx(d4sys);
  const GroupTable& tbl = ctx.table();
  std::vector<uint32_t> all(tbl.size());
  for (uint32_t i = 0; i < tbl.size(); ++i) all[i] = i;
  for (CellKind kind : {CellKind::Left, CellKind::Right, CellKind::TwoSided}) {
    CellPartition via_mu = ctx.cells(kind);
    CellPartition via_tab = tableau_cells(tbl, all, kind);
    CHECK(same_blocks(via_mu, via_tab));
  }
}

TEST_CASE("w4 sits with s1s2s4 in one two-sided tableau cell") {
  GroupTable tbl = GroupTable::enumerate(d4sys, 1000);
  std::vector<uint32_t> all(tbl.size());
  for (uint32_t i = 0; i < tbl.size(); ++i) all[i] = i;
  CellPartition two = tableau_cells(tbl, all, CellKind::TwoSided);
  auto se = special_elements(d4sys);
  CHECK(two.same_block(tbl.index_of(se.wn), tbl.index_of(se.xn)));
  // And the worked chain: T_L(s1s2s4) = E(T_L(w_4), C1, C2).
  DominoTableau t = tableau(se.wn, Side::Left);
  DominoTableau target = tableau(se.xn, Side::Left);
  bool reached = false;
  for (const DominoTableau& u : open_move_orbit(t))
    if (u == target) reached = true;
  CHECK(reached);
}

TEST_CASE("serialization forms") {
  DominoTableau t = tableau(build_wn(d4sys, 4), Side::Left);
  CHECK(to_json(t) ==
        "{\"labels\":[{\"k\":1,\"squares\":[[1,1],[1,2]]},"
        "{\"k\":2,\"squares\":[[2,1],[3,1]]},"
        "{\"k\":3,\"squares\":[[1,3],[1,4]]},"
        "{\"k\":4,\"squares\":[[2,2],[3,2]]}]}");
  std::string art = ascii_render(t);
  CHECK(art.find('+') != std::string::npos);
  CHECK(art.find('4') != std::string::npos);
}
