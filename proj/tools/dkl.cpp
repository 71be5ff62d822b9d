#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "dkl/badlib.hpp"
#include "dkl/domino.hpp"
#include "dkl/fcstar.hpp"
#include "dkl/klpoly.hpp"

using json = nlohmann::json;
using namespace dkl;

namespace {

struct Limits {
  size_t max_elements = 100000;
  size_t max_memo = 50000000;
  int threads = 1;
};

KLOptions to_options(const Limits& lim) {
  KLOptions o;
  o.max_elements = lim.max_elements;
  o.max_memo = lim.max_memo;
  o.cells_max_elements = lim.max_elements;
  return o;
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("DKL_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

/// Accepts named shortcuts (e, w0, wn, xn, vn, un), interval notation,
/// word notation, and window notation.
SignedPermutation parse_element(const CoxeterSystem& sys, const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) throw std::invalid_argument("empty element");
  std::string low;
  for (char c : text) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "e") return SignedPermutation::identity(sys);
  if (low == "w0") return longest_element(sys);
  if (low == "wn") {
    if (sys.family != Family::D)
      throw std::invalid_argument("wn is only defined in type D");
    return build_wn(sys, sys.rank);
  }
  if (low == "xn" || low == "vn" || low == "un") {
    SpecialElements se = special_elements(sys);
    if (low == "xn") return se.xn;
    if (low == "vn") {
      if (!se.vn) throw std::invalid_argument("vn needs rank >= 6");
      return *se.vn;
    }
    if (!se.un) throw std::invalid_argument("un needs rank >= 8");
    return *se.un;
  }
  if (text[0] == '[') {
    Word word;
    for (const auto& iv : parse_intervals(text)) {
      Word part = expand_interval(iv);
      word.insert(word.end(), part.begin(), part.end());
    }
    return from_word(sys, word);
  }
  if (text.find('s') != std::string::npos || text.find('S') != std::string::npos)
    return from_word(sys, parse_word(text));
  return parse_window(sys, text);
}

std::vector<int> genset_vec(GenSet g) { return g.to_vector(); }

json elem_json(const SignedPermutation& w) {
  json j;
  j["group"] = w.system().name();
  j["window"] = w.window();
  j["length"] = length(w);
  j["left_descents"] = genset_vec(descents(w, Side::Left));
  j["right_descents"] = genset_vec(descents(w, Side::Right));
  j["word"] = word_to_string(canonical_word(w));
  return j;
}

CellKind parse_kind(const std::string& k) {
  if (k == "L") return CellKind::Left;
  if (k == "R") return CellKind::Right;
  if (k == "LR") return CellKind::TwoSided;
  throw std::invalid_argument("cell kind must be L, R, or LR");
}

// Blocks as window strings, ordered deterministically.
std::vector<std::vector<std::string>> block_strings(const GroupTable& tbl,
                                                    const CellPartition& part) {
  std::vector<std::vector<std::pair<Window, std::string>>> keyed;
  for (const auto& blk : part.blocks) {
    std::vector<std::pair<Window, std::string>> b;
    for (uint32_t e : blk) {
      SignedPermutation w = tbl.element(e);
      b.emplace_back(w.window(), window_to_string(w));
    }
    std::sort(b.begin(), b.end());
    keyed.push_back(std::move(b));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<std::string>> out;
  for (auto& blk : keyed) {
    std::vector<std::string> b;
    for (auto& [win, str] : blk) b.push_back(std::move(str));
    out.push_back(std::move(b));
  }
  return out;
}

struct Check {
  std::string name;
  bool ok;
};

class Verifier {
 public:
  explicit Verifier(std::ostream& os) : os_(os) {}
  void run(const std::string& name, bool ok) {
    os_ << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) failed_ = true;
  }
  bool failed() const { return failed_; }

 private:
  std::ostream& os_;
  bool failed_ = false;
};

void verify_paper(Verifier& v, int rank, const Limits& lim) {
  if (rank == 4 || rank == 5) {
    CoxeterSystem dn(Family::D, rank);
    CoxeterSystem d4(Family::D, 4);
    KLContext ctx(dn, to_options(lim));
    const GroupTable& tbl = ctx.table();
    SignedPermutation wn = build_wn(dn, rank);
    v.run("length of the longest bad element", length(wn) == wn_length(rank));
    if (rank == 4) {
      auto se = special_elements(d4);
      v.run("mu(x4,w4) = 0", ctx.mu(se.xn, se.wn) == 0);
      const auto& a = ctx.a_values();
      v.run("a(w4) = 3", a[tbl.index_of(se.wn)] == 3);
      v.run("a(s1s2s4) = 3", a[tbl.index_of(se.xn)] == 3);
      v.run("reduced word evaluates to w4",
            from_word(d4, wn_reduced_word(4)) == se.wn &&
                wn_reduced_word(4).size() == 7);
    }
    // Bad elements by scan and by construction.
    std::set<Window> scan;
    for (uint32_t e = 0; e < tbl.size(); ++e)
      if (classify_bad(tbl.element(e)).tag == BadTag::Bad)
        scan.insert(tbl.element(e).window());
    std::set<Window> built;
    for (const auto& w : enumerate_bad(dn)) built.insert(w.window());
    v.run("bad element enumeration matches the scan", scan == built);
    v.run("exactly one bad element", scan.size() == 1 && *scan.begin() == wn.window());
    // Cell routes agree.
    std::vector<uint32_t> all(tbl.size());
    for (uint32_t i = 0; i < tbl.size(); ++i) all[i] = i;
    for (CellKind kind : {CellKind::Left, CellKind::Right, CellKind::TwoSided}) {
      CellPartition via_mu = ctx.cells(kind);
      CellPartition via_tab = tableau_cells(tbl, all, kind, lim.threads);
      std::string kn = kind == CellKind::Left ? "left"
                       : kind == CellKind::Right ? "right"
                                                 : "two-sided";
      v.run("tableau cells match mu-graph cells (" + kn + ")",
            same_blocks(via_mu, via_tab));
    }
    // mu(x,w) in {0,1} for fully commutative x.
    bool all01 = true;
    for (uint32_t w = 0; w < tbl.size(); ++w)
      for (const auto& [z, m] : ctx.mu_set(w))
        if (m != 1 && is_fully_commutative(tbl.element(z))) all01 = false;
    v.run("mu in {0,1} for fully commutative first argument", all01);
    if (rank == 4) {
      auto se = special_elements(d4);
      CellPartition two = ctx.cells(CellKind::TwoSided);
      v.run("w4 and s1s2s4 share a two-sided cell",
            two.same_block(tbl.index_of(se.wn), tbl.index_of(se.xn)));
    }
  } else if (rank == 6) {
    CoxeterSystem d6(Family::D, 6);
    KLContext ctx(d6, to_options(lim));
    const GroupTable& tbl = ctx.table();
    auto se = special_elements(d6);
    v.run("mu(x6,w6) = 1", ctx.mu(se.xn, se.wn) == 1);
    std::set<Window> built;
    for (const auto& w : enumerate_bad(d6)) built.insert(w.window());
    v.run("three bad elements in rank six", built.size() == 3);
    DominoTableau tw = tableau(se.wn, Side::Left);
    bool c1ok = false;
    for (const Cycle& c : cycles(tw))
      if (c.open && c.labels == std::vector<int>{1, 2, 3, 5}) {
        c1ok = move_through(tw, c) == tableau(*se.vn, Side::Left);
      }
    v.run("moving the open cycle reaches the v element", c1ok);
    // Two-sided membership through the tableau route.
    SignedPermutation probe = from_word(d6, {1, 2, 6, 5, 6});
    bool left_chain = false;
    for (const DominoTableau& u : open_move_orbit(tableau(se.wn, Side::Left)))
      if (u == tableau(*se.vn, Side::Left)) left_chain = true;
    bool right_chain = false;
    for (const DominoTableau& u : open_move_orbit(tableau(*se.vn, Side::Right)))
      if (u == tableau(probe, Side::Right)) right_chain = true;
    v.run("w6 joins s1s2s6s5s6 through left/right tableau moves",
          left_chain && right_chain);
    // a(w6) = a(s1s2s6s5s6): the cell partner splits across commuting
    // components {s1},{s2},{s5,s6}, so its a-value is additive over brute
    // forces in the small pieces.
    KLContext a1(CoxeterSystem(Family::A, 1));
    KLContext a2(CoxeterSystem(Family::A, 2));
    long long single = a1.a_values()[a1.table().eval_word({1})];
    long long dihedral = a2.a_values()[a2.table().eval_word({1, 2, 1})];
    v.run("a(w6) = 5 assembled from parabolic brute forces",
          2 * single + dihedral == a_wn(6));
  } else {
    throw std::invalid_argument("verify --suite paper supports ranks 4, 5, 6");
  }
}

void verify_props(Verifier& v, int rank, const Limits& lim) {
  if (rank < 4 || rank > 5)
    throw std::invalid_argument("verify --suite props supports ranks 4 and 5");
  CoxeterSystem dn(Family::D, rank);
  KLContext ctx(dn, to_options(lim));
  const GroupTable& tbl = ctx.table();

  bool lengths = true, desc = true;
  for (uint32_t e = 0; e < tbl.size(); ++e) {
    SignedPermutation w = tbl.element(e);
    if (static_cast<int>(canonical_word(w).size()) != tbl.length(e)) lengths = false;
    if (descents(w, Side::Left) != descents(inverse(w), Side::Right)) desc = false;
  }
  v.run("window lengths match reduced words", lengths);
  v.run("left descents are right descents of the inverse", desc);

  bool star_inv = true, star_fc = true;
  for (uint32_t e = 0; e < tbl.size(); ++e) {
    SignedPermutation w = tbl.element(e);
    bool fc = is_fully_commutative(w);
    for (auto [s, t] : dn.noncommuting_pairs())
      for (Side side : {Side::Left, Side::Right}) {
        auto sw = star(w, {s, t, side});
        if (!sw) continue;
        auto back = star(*sw, {s, t, side});
        if (!back || *back != w) star_inv = false;
        if (fc && !is_fully_commutative(*sw)) star_fc = false;
      }
  }
  v.run("star operations are involutions", star_inv);
  v.run("star operations preserve full commutativity", star_fc);

  bool terminals = true;
  for (uint32_t e = 0; e < tbl.size(); ++e) {
    StarReductionTrace tr = star_reduce(tbl.element(e));
    const SignedPermutation& term = tr.terminal_element();
    switch (tr.terminal) {
      case StarTerminal::CommutingProduct:
        if (!is_commuting_product(term)) terminals = false;
        break;
      case StarTerminal::Bad:
        if (classify_bad(term).tag != BadTag::Bad) terminals = false;
        break;
      case StarTerminal::NoncommutativeDescent:
        if (descent_set_commutative(term, Side::Left) &&
            descent_set_commutative(term, Side::Right))
          terminals = false;
        break;
    }
  }
  v.run("star reduction reaches a valid terminal class", terminals);

  if (rank == 4) {
    bool degree = true, ortho = true;
    for (uint32_t w = 0; w < tbl.size(); ++w)
      for (uint32_t x = 0; x < tbl.size(); ++x) {
        if (!tbl.bruhat_leq(x, w)) continue;
        IntPolynomial p = ctx.kl_poly(x, w);
        if (p.constant_term() != 1) degree = false;
        if (x != w && 2 * p.degree() > tbl.length(w) - tbl.length(x) - 1)
          degree = false;
        if (x != w) {
          IntPolynomial sum;
          for (uint32_t z = 0; z < tbl.size(); ++z) {
            if (!tbl.bruhat_leq(x, z) || !tbl.bruhat_leq(z, w)) continue;
            IntPolynomial term = ctx.inverse_kl(x, z) * ctx.kl_poly(z, w);
            if ((tbl.length(z) - tbl.length(x)) % 2 == 0)
              sum += term;
            else
              sum -= term;
          }
          if (!sum.is_zero()) ortho = false;
        }
      }
    v.run("degree bound and constant term", degree);
    v.run("inverse polynomials satisfy the orthogonality identity", ortho);
  }

  bool tab_valid = true, commuting = true;
  for (uint32_t e = 0; e < tbl.size(); ++e) {
    DominoTableau t = tableau(tbl.element(e), Side::Left);
    try {
      validate(t);
      auto cs = cycles(t);
      for (size_t i = 0; i < cs.size(); ++i) {
        validate(move_through(t, cs[i]));
        for (size_t j = i + 1; j < cs.size(); ++j)
          if (move_through(move_through(t, cs[i]), cs[j]) !=
              move_through(move_through(t, cs[j]), cs[i]))
            commuting = false;
      }
    } catch (const std::exception&) {
      tab_valid = false;
    }
  }
  v.run("tableaux stay valid under construction and moves", tab_valid);
  v.run("cycle moves commute", commuting);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter groups of types A and D: Kazhdan-Lusztig polynomials, "
               "bad elements, domino tableaux, and cells"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  Limits lim;
  app.add_option("--max-elements", lim.max_elements,
                 "group enumeration ceiling (elements)");
  app.add_option("--max-memo", lim.max_memo, "memo table ceiling (entries)");
  int threads_flag = 0;
  app.add_option("--threads", threads_flag,
                 "worker thread cap (default: DKL_THREADS or 1)");

  std::string group, xarg, warg, format = "text", kind = "L", method, side = "L";
  std::string move_arg, classify_arg, suite = "paper";
  bool enumerate_flag = false, cycles_flag = false;
  int rank = 4;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* elem = app.add_subcommand("elem", "normalize and print an element");
  elem->add_option("group", group)->required();
  elem->add_option("element", xarg)->required();
  add_format(elem);

  CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
  kl->add_option("group", group)->required();
  kl->add_option("--x", xarg)->required();
  kl->add_option("--w", warg)->required();
  add_format(kl);

  CLI::App* mu = app.add_subcommand("mu", "top coefficient mu(x,w)");
  mu->add_option("group", group)->required();
  mu->add_option("--x", xarg)->required();
  mu->add_option("--w", warg)->required();
  add_format(mu);

  CLI::App* cells = app.add_subcommand("cells", "cell partition of the whole group");
  cells->add_option("group", group)->required();
  cells->add_option("--method", method, "kl or domino")->default_val("kl");
  cells->add_option("--kind", kind, "L, R, or LR")->default_val("L");
  add_format(cells);

  CLI::App* avalue = app.add_subcommand("a-value", "Lusztig a-value");
  avalue->add_option("group", group)->required();
  avalue->add_option("--w", warg)->default_val("wn");
  avalue->add_option("--method", method, "brute or formula")->default_val("brute");
  add_format(avalue);

  CLI::App* bad = app.add_subcommand("bad", "bad element classification");
  bad->add_option("group", group)->required();
  bad->add_option("--classify", classify_arg, "element to classify");
  bad->add_flag("--enumerate", enumerate_flag, "list all bad elements");
  add_format(bad);

  CLI::App* tab = app.add_subcommand("tableau", "domino tableau of an element");
  tab->add_option("group", group)->required();
  tab->add_option("--w", warg)->required();
  tab->add_option("--side", side, "L or R")->default_val("L");
  tab->add_flag("--cycles", cycles_flag, "list the cycles");
  tab->add_option("--move", move_arg, "labels of a cycle to move through");
  add_format(tab);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "paper or props")
      ->check(CLI::IsMember({"paper", "props"}));
  verify->add_option("--rank", rank, "rank of the type D group")->default_val(4);

  // Let the shared limit/thread flags appear after a subcommand, too.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  lim.threads = resolve_threads(threads_flag);

  try {
    if (*elem) {
      CoxeterSystem sys = CoxeterSystem::parse(group);
      SignedPermutation w = parse_element(sys, xarg);
      if (format == "json")
        std::cout << elem_json(w).dump() << "\n";
      else
        std::cout << window_to_string(w) << "\n";
    } else if (*kl || *mu) {
      CoxeterSystem sys = CoxeterSystem::parse(group);
      KLContext ctx(sys, to_options(lim));
      uint32_t x = ctx.table().index_of(parse_element(sys, xarg));
      uint32_t w = ctx.table().index_of(parse_element(sys, warg));
      if (*kl) {
        IntPolynomial p = ctx.kl_poly(x, w);
        if (format == "json")
          std::cout << json(p.coeffs()).dump() << "\n";
        else
          std::cout << p.to_string() << "\n";
      } else {
        std::cout << ctx.mu(x, w) << "\n";
      }
    } else if (*cells) {
      CoxeterSystem sys = CoxeterSystem::parse(group);
      CellKind ck = parse_kind(kind);
      CellPartition part;
      std::optional<KLContext> ctx;
      std::optional<GroupTable> tbl_only;
      const GroupTable* tbl = nullptr;
      if (method == "domino") {
        tbl_only = GroupTable::enumerate(sys, lim.max_elements);
        tbl = &*tbl_only;
        std::vector<uint32_t> all(tbl->size());
        for (uint32_t i = 0; i < tbl->size(); ++i) all[i] = i;
        part = tableau_cells(*tbl, all, ck, lim.threads);
      } else if (method == "kl") {
        ctx.emplace(sys, to_options(lim));
        tbl = &ctx->table();
        part = ctx->cells(ck, lim.threads);
      } else {
        throw std::invalid_argument("cells method must be kl or domino");
      }
      auto blocks = block_strings(*tbl, part);
      if (format == "json") {
        json j;
        j["group"] = sys.name();
        j["kind"] = kind;
        j["method"] = method;
        j["blocks"] = blocks;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "blocks: " << blocks.size() << "\n";
        for (size_t i = 0; i < blocks.size(); ++i) {
          std::cout << "[" << i << "]";
          for (const auto& w : blocks[i]) std::cout << " " << w;
          std::cout << "\n";
        }
      }
    } else if (*avalue) {
      CoxeterSystem sys = CoxeterSystem::parse(group);
      long long a = 0;
      if (method == "formula") {
        std::string low = trim(warg);
        if (low != "wn")
          throw std::invalid_argument("--method formula applies to --w wn only");
        int n = sys.rank % 2 == 0 ? sys.rank : sys.rank - 1;
        a = a_wn(n);
      } else if (method == "brute") {
        KLContext ctx(sys, to_options(lim));
        a = ctx.a_value_bruteforce(ctx.table().index_of(parse_element(sys, warg)));
      } else {
        throw std::invalid_argument("a-value method must be brute or formula");
      }
      std::cout << a << "\n";
    } else if (*bad) {
      CoxeterSystem sys = CoxeterSystem::parse(group);
      if (enumerate_flag == !classify_arg.empty())
        throw std::invalid_argument("bad needs exactly one of --classify or --enumerate");
      if (enumerate_flag) {
        auto list = enumerate_bad(sys);
        if (format == "json") {
          json j = json::array();
          for (const auto& w : list) j.push_back(window_to_string(w));
          std::cout << j.dump() << "\n";
        } else {
          for (const auto& w : list) std::cout << window_to_string(w) << "\n";
        }
      } else {
        BadClassification c = classify_bad(parse_element(sys, classify_arg));
        std::string tag = c.tag == BadTag::NotBad            ? "NotBad"
                          : c.tag == BadTag::WeaklyBadCommuting ? "WeaklyBadCommuting"
                                                                : "Bad";
        if (format == "json") {
          json j;
          j["tag"] = tag;
          if (c.tag == BadTag::Bad) {
            j["m"] = c.m;
            j["u"] = word_to_string(c.u);
          }
          std::cout << j.dump() << "\n";
        } else {
          std::cout << tag;
          if (c.tag == BadTag::Bad)
            std::cout << " m=" << c.m << " u=" << word_to_string(c.u);
          std::cout << "\n";
        }
      }
    } else if (*tab) {
      CoxeterSystem sys = CoxeterSystem::parse(group);
      SignedPermutation w = parse_element(sys, warg);
      Side s = side == "R" ? Side::Right : Side::Left;
      if (side != "L" && side != "R")
        throw std::invalid_argument("side must be L or R");
      DominoTableau t = tableau(w, s);
      if (!move_arg.empty()) {
        std::vector<int> want;
        std::istringstream is(move_arg);
        std::string tok;
        while (std::getline(is, tok, ',')) want.push_back(std::stoi(trim(tok)));
        std::sort(want.begin(), want.end());
        bool applied = false;
        for (const Cycle& c : cycles(t))
          if (c.labels == want) {
            t = move_through(t, c);
            applied = true;
          }
        if (!applied) throw std::invalid_argument("--move labels are not a cycle");
      }
      if (format == "json")
        std::cout << to_json(t) << "\n";
      else
        std::cout << ascii_render(t);
      if (cycles_flag) {
        int i = 1;
        for (const Cycle& c : cycles(t)) {
          std::cout << "C" << i++ << " = {";
          for (size_t k = 0; k < c.labels.size(); ++k)
            std::cout << (k ? "," : "") << c.labels[k];
          std::cout << "} " << (c.open ? "open" : "closed") << "\n";
        }
      }
    } else if (*verify) {
      Verifier v(std::cout);
      if (suite == "paper")
        verify_paper(v, rank, lim);
      else
        verify_props(v, rank, lim);
      if (v.failed()) {
        std::cout << "verification FAILED\n";
        return 1;
      }
      std::cout << "all checks passed\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
