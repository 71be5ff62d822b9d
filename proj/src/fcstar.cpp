#include "dkl/fcstar.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "dkl/badlib.hpp"

namespace dkl {

namespace {

std::string word_key(const Word& w) {
  std::string k(w.size(), '\0');
  for (size_t i = 0; i < w.size(); ++i) k[i] = static_cast<char>(w[i]);
  return k;
}

bool has_long_braid_factor(const CoxeterSystem& sys, const Word& w) {
  for (size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] == w[i + 2] && sys.coxeter_m(w[i], w[i + 1]) == 3) return true;
  return false;
}

}  // namespace

bool is_fully_commutative(const SignedPermutation& w) {
  const CoxeterSystem& sys = w.system();
  Word start = canonical_word(w);
  if (has_long_braid_factor(sys, start)) return false;
  std::unordered_set<std::string> seen;
  std::vector<Word> queue{start};
  seen.insert(word_key(start));
  while (!queue.empty()) {
    Word cur = std::move(queue.back());
    queue.pop_back();
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!sys.commute(cur[i], cur[i + 1])) continue;
      std::swap(cur[i], cur[i + 1]);
      std::string k = word_key(cur);
      if (seen.insert(k).second) {
        if (has_long_braid_factor(sys, cur)) return false;
        queue.push_back(cur);
      }
      std::swap(cur[i], cur[i + 1]);
    }
  }
  return true;
}

std::optional<SignedPermutation> star(const SignedPermutation& w,
                                      const StarContext& ctx) {
  const CoxeterSystem& sys = w.system();
  if (sys.coxeter_m(ctx.s, ctx.t) != 3)
    throw std::invalid_argument("star context needs a noncommuting pair");
  auto in_domain = [&](const SignedPermutation& x) {
    GenSet d = descents(x, ctx.side);
    return d.contains(ctx.s) != d.contains(ctx.t);
  };
  if (!in_domain(w)) return std::nullopt;
  SignedPermutation a = mul_gen(w, ctx.s, ctx.side);
  if (in_domain(a)) return a;
  SignedPermutation b = mul_gen(w, ctx.t, ctx.side);
  if (in_domain(b)) return b;
  return std::nullopt;  // not reachable for m(s,t) = 3
}

bool descent_set_commutative(const SignedPermutation& w, Side side) {
  std::vector<int> d = descents(w, side).to_vector();
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j)
      if (!w.system().commute(d[i], d[j])) return false;
  return true;
}

bool is_commuting_product(const SignedPermutation& w) {
  GenSet l = descents(w, Side::Left);
  std::vector<int> gens = l.to_vector();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!w.system().commute(gens[i], gens[j])) return false;
  return from_word(w.system(), gens) == w;
}

StarReductionTrace star_reduce(const SignedPermutation& w) {
  StarReductionTrace trace{w, {}, StarTerminal::CommutingProduct};
  SignedPermutation cur = w;
  const auto pairs = w.system().noncommuting_pairs();
  while (true) {
    if (is_commuting_product(cur)) {
      trace.terminal = StarTerminal::CommutingProduct;
      return trace;
    }
    if (w.system().family == Family::D &&
        classify_bad(cur).tag == BadTag::Bad) {
      trace.terminal = StarTerminal::Bad;
      return trace;
    }
    if (!descent_set_commutative(cur, Side::Left) ||
        !descent_set_commutative(cur, Side::Right)) {
      trace.terminal = StarTerminal::NoncommutativeDescent;
      return trace;
    }
    bool moved = false;
    int len = length(cur);
    for (Side side : {Side::Left, Side::Right}) {
      for (const auto& [s, t] : pairs) {
        StarContext ctx{s, t, side};
        auto next = star(cur, ctx);
        if (next && length(*next) == len - 1) {
          trace.steps.push_back({ctx, *next});
          cur = *next;
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
    if (!moved)
      throw std::logic_error("star_reduce: no decreasing move from a non-terminal element");
  }
}

}  // namespace dkl
