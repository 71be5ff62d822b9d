#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dkl/badlib.hpp"
#include "dkl/fcstar.hpp"
#include "dkl/group_table.hpp"

using namespace dkl;

namespace {

const CoxeterSystem d4(Family::D, 4);
const CoxeterSystem d5(Family::D, 5);
const CoxeterSystem d6(Family::D, 6);
const CoxeterSystem d7(Family::D, 7);
const CoxeterSystem d8(Family::D, 8);

// Reduced-word oracle: does some reduced expression of w end (or begin) in
// two noncommuting generators?
bool ends_oracle(const SignedPermutation& w, Side side) {
  std::set<Word> seen{canonical_word(w)};
  std::vector<Word> queue(seen.begin(), seen.end());
  const CoxeterSystem& sys = w.system();
  while (!queue.empty()) {
    Word cur = queue.back();
    queue.pop_back();
    if (cur.size() >= 2) {
      int a, b;
      if (side == Side::Right) {
        a = cur[cur.size() - 2];
        b = cur[cur.size() - 1];
      } else {
        a = cur[0];
        b = cur[1];
      }
      if (!sys.commute(a, b)) return true;
    }
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (sys.commute(cur[i], cur[i + 1])) {
        Word next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(next).second) queue.push_back(next);
      }
      if (i + 2 < cur.size() && cur[i] == cur[i + 2] &&
          sys.coxeter_m(cur[i], cur[i + 1]) == 3) {
        Word next = cur;  // aba -> bab
        next[i] = cur[i + 1];
        next[i + 1] = cur[i];
        next[i + 2] = cur[i + 1];
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("ends_in_noncommuting window criteria") {
  // Consecutive 321 pattern in the first three entries.
  CHECK(ends_in_noncommuting(parse_window(d7, "2,-3,-6,1,4,-5,-7"), Side::Right));
  CHECK(ends_in_noncommuting(parse_window(d7, "2,-3,1,4,5,-6,7"), Side::Right));
  CHECK_FALSE(ends_in_noncommuting(SignedPermutation::identity(d4), Side::Right));
  CHECK_FALSE(ends_in_noncommuting(SignedPermutation::identity(d4), Side::Left));
  auto w4 = parse_window(d4, "1,-4,3,-2");
  CHECK_FALSE(ends_in_noncommuting(w4, Side::Right));
  CHECK_FALSE(ends_in_noncommuting(w4, Side::Left));
  CHECK_FALSE(ends_oracle(w4, Side::Right));
  CHECK_FALSE(ends_oracle(w4, Side::Left));
}

TEST_CASE("ends_in_noncommuting equals the reduced-word oracle on all of D4") {
  GroupTable tbl = GroupTable::enumerate(d4, 1000);
  for (uint32_t e = 0; e < tbl.size(); ++e) {
    SignedPermutation w = tbl.element(e);
    CHECK(ends_in_noncommuting(w, Side::Right) == ends_oracle(w, Side::Right));
    CHECK(ends_in_noncommuting(w, Side::Left) == ends_oracle(w, Side::Left));
  }
}

TEST_CASE("classification examples") {
  CHECK(classify_bad(from_word(d4, {1, 2, 4})).tag == BadTag::WeaklyBadCommuting);
  CHECK(classify_bad(from_word(d4, {1, 2, 3})).tag == BadTag::NotBad);
  auto c = classify_bad(from_word(d4, {1, 2, 4, 3, 1, 2, 4}));
  CHECK(c.tag == BadTag::Bad);
  CHECK(c.m == 4);
  CHECK(c.u.empty());
  auto c6 = classify_bad(mul_gen(build_wn(d6, 4), 6, Side::Right));
  CHECK(c6.tag == BadTag::Bad);
  CHECK(c6.m == 4);
  CHECK(c6.u == Word{6});
}

TEST_CASE("build_wn windows") {
  CHECK(build_wn(d4, 4).window() == Window{1, -4, 3, -2});
  CHECK(build_wn(d6, 6).window() == Window{-1, -6, 3, -4, 5, -2});
  CHECK(build_wn(d6, 5).window() == Window{1, -4, 3, -2, 5, 6});
  CHECK(build_wn(d8, 8).window() == Window{1, -8, 3, -6, 5, -4, 7, -2});
  CHECK_THROWS_AS(build_wn(d6, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_wn(d6, 7), std::invalid_argument);
}

TEST_CASE("wn_length") {
  CHECK(wn_length(4) == 7);
  CHECK(wn_length(5) == 7);
  CHECK(wn_length(6) == 15);
  CHECK(wn_length(8) == 26);
}

TEST_CASE("wn_reduced_word") {
  Word w4 = wn_reduced_word(4);
  CHECK(w4.size() == 7);
  CHECK(w4 == Word{2, 1, 4, 3, 2, 1, 4});
  CHECK(from_word(d4, w4) == build_wn(d4, 4));
  Word w6 = wn_reduced_word(6);
  CHECK(w6.size() == 15);
  CHECK(from_word(d6, w6) == build_wn(d6, 6));
  CHECK(wn_reduced_word(8).size() == 26);
  CHECK(from_word(d8, wn_reduced_word(8)) == build_wn(d8, 8));
}

TEST_CASE("special elements") {
  auto se4 = special_elements(d4);
  CHECK(se4.wn.window() == Window{1, -4, 3, -2});
  CHECK(se4.xn == from_word(d4, {1, 2, 4}));
  CHECK(se4.xn.window() == Window{-1, -2, 4, 3});
  CHECK_FALSE(se4.vn.has_value());
  CHECK_FALSE(se4.un.has_value());

  auto se6 = special_elements(d6);
  REQUIRE(se6.vn.has_value());
  CHECK(se6.vn->window() == Window{1, -6, 3, -2, 5, 4});
  CHECK_FALSE(se6.un.has_value());

  auto se8 = special_elements(d8);
  REQUIRE(se8.un.has_value());
  CHECK(se8.un->window() == Window{1, -4, 3, -2, 5, 8, 7, 6});
  REQUIRE(se8.vn.has_value());
  CHECK(*se8.vn == mul(from_word(d8, {8, 7, 8}), build_wn(d8, 6)));

  CHECK_THROWS_AS(special_elements(d5), std::invalid_argument);
}

TEST_CASE("x_n is a commuting product and v_n/u_n satisfy their products") {
  auto se6 = special_elements(d6);
  CHECK(is_commuting_product(se6.xn));
  CHECK(*se6.vn == mul(from_word(d6, {6, 5, 6}), build_wn(d6, 4)));
  auto se8 = special_elements(d8);
  CHECK(*se8.un == mul(build_wn(d8, 4), from_word(d8, {8, 7, 8})));
}

TEST_CASE("w_n involution and length, ranks 4..12") {
  for (int n = 4; n <= 12; ++n) {
    CoxeterSystem dn(Family::D, n);
    auto wn = build_wn(dn, n);
    CHECK(mul(wn, wn).is_identity());
    CHECK(inverse(wn) == wn);
    CHECK(length(wn) == wn_length(n));
  }
}

TEST_CASE("enumerate_bad matches brute force on D4, D5, D6") {
  auto brute = [](const CoxeterSystem& sys, size_t cap) {
    GroupTable tbl = GroupTable::enumerate(sys, cap);
    std::set<Window> bad;
    for (uint32_t e = 0; e < tbl.size(); ++e) {
      SignedPermutation w = tbl.element(e);
      if (classify_bad(w).tag == BadTag::Bad) bad.insert(w.window());
    }
    return bad;
  };
  auto from_enum = [](const CoxeterSystem& sys) {
    std::set<Window> out;
    for (const auto& w : enumerate_bad(sys)) out.insert(w.window());
    return out;
  };

  auto b4 = brute(d4, 1000);
  CHECK(b4 == from_enum(d4));
  CHECK(b4 == std::set<Window>{{1, -4, 3, -2}});

  auto b5 = brute(d5, 2000);
  CHECK(b5 == from_enum(d5));
  CHECK(b5 == std::set<Window>{{1, -4, 3, -2, 5}});

  auto b6 = brute(d6, 24000);
  CHECK(b6 == from_enum(d6));
  std::set<Window> expect6{{-1, -6, 3, -4, 5, -2},
                           {1, -4, 3, -2, 5, 6},
                           {1, -4, 3, -2, 6, 5}};
  CHECK(b6 == expect6);
}

TEST_CASE("bad elements are closed under inverse (D4..D6)") {
  for (const CoxeterSystem& sys : {d4, d5, d6}) {
    for (const auto& w : enumerate_bad(sys))
      CHECK(classify_bad(inverse(w)).tag == BadTag::Bad);
  }
}

TEST_CASE("no bad element is fully commutative (ranks up to 8)") {
  for (int n = 4; n <= 8; ++n) {
    CoxeterSystem dn(Family::D, n);
    for (const auto& w : enumerate_bad(dn)) CHECK_FALSE(is_fully_commutative(w));
  }
}

TEST_CASE("all-positive windows are never bad (D4, D5)") {
  for (const CoxeterSystem& sys : {d4, d5}) {
    GroupTable tbl = GroupTable::enumerate(sys, 2000);
    for (uint32_t e = 0; e < tbl.size(); ++e) {
      SignedPermutation w = tbl.element(e);
      bool positive = true;
      for (int v : w.window())
        if (v < 0) positive = false;
      if (positive) CHECK(classify_bad(w).tag != BadTag::Bad);
    }
  }
}
