#include "dkl/badlib.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dkl/fcstar.hpp"

namespace dkl {

namespace {

void require_type_d(const SignedPermutation& w, const char* who) {
  if (w.system().family != Family::D)
    throw std::invalid_argument(std::string(who) + " expects a type D element");
}

bool triple_is_bad_pattern(int a, int b, int c) {
  // Consecutive patterns 321, 231, 312.
  if (a > b && b > c) return true;
  if (b > a && a > c) return true;
  if (a > c && c > b) return true;
  return false;
}

}  // namespace

bool ends_in_noncommuting(const SignedPermutation& w, Side side) {
  require_type_d(w, "ends_in_noncommuting");
  if (side == Side::Left) return ends_in_noncommuting(inverse(w), Side::Right);
  const Window& v = w.window();
  const int n = static_cast<int>(v.size());
  for (int i = 0; i + 2 < n; ++i)
    if (triple_is_bad_pattern(v[i], v[i + 1], v[i + 2])) return true;
  return -v[0] > v[2];
}

BadClassification classify_bad(const SignedPermutation& w) {
  require_type_d(w, "classify_bad");
  if (ends_in_noncommuting(w, Side::Right) || ends_in_noncommuting(w, Side::Left))
    return {BadTag::NotBad, 0, {}};
  if (is_commuting_product(w)) return {BadTag::WeaklyBadCommuting, 0, {}};

  // Bad: recover w = w_m * u from the window.  m is the last negative
  // position; u is the all-positive commuting remainder.
  const Window& v = w.window();
  const int n = static_cast<int>(v.size());
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (v[i] < 0) m = i + 1;
  SignedPermutation u = mul(build_wn(w.system(), m), w);  // w_m is an involution
  Word uword;
  const Window& uv = u.window();
  for (int j = 2; j <= n; ++j)
    if (uv[j - 2] == j && uv[j - 1] == j - 1) uword.push_back(j);
  if (from_word(w.system(), uword) != u ||
      length(w) != length(build_wn(w.system(), m)) + static_cast<int>(uword.size()))
    throw std::logic_error("classify_bad: decomposition failed");
  return {BadTag::Bad, m, uword};
}

SignedPermutation build_wn(const CoxeterSystem& sys, int m) {
  if (sys.family != Family::D)
    throw std::invalid_argument("build_wn expects a type D system");
  const int n = sys.rank;
  if (m < 4 || m > n) throw std::invalid_argument("build_wn needs 4 <= m <= n");
  Window v(n);
  const bool even = m % 2 == 0;
  const int top = even ? m : m - 1;
  v[0] = ((even ? m / 2 : (m - 1) / 2) % 2 == 0) ? 1 : -1;
  for (int i = 2; i <= n; ++i) {
    if (i > top)
      v[i - 1] = i;
    else if (i % 2 == 1)
      v[i - 1] = i;
    else
      v[i - 1] = -(top + 2 - i);
  }
  return SignedPermutation(sys, std::move(v));
}

long long wn_length(int n) {
  if (n < 4) throw std::invalid_argument("wn_length needs n >= 4");
  if (n % 2 != 0) n -= 1;
  return (3LL * n * n + 2LL * n) / 8;
}

Word wn_reduced_word(int n) {
  if (n < 4) throw std::invalid_argument("wn_reduced_word needs n >= 4");
  const int m = n % 2 == 0 ? n : n - 1;
  const int k = m / 2 - 2;
  Word out;
  for (int i = 1; i <= m / 2; ++i) {
    Word part = expand_interval({2 * i, 0});
    out.insert(out.end(), part.begin(), part.end());
  }
  for (int t = k; t >= 1; --t) {
    Word part = expand_interval({m - t, m - 2 * t});
    out.insert(out.end(), part.begin(), part.end());
  }
  out.push_back(m);  // [m,m]
  return out;
}

SpecialElements special_elements(const CoxeterSystem& sys) {
  if (sys.family != Family::D)
    throw std::invalid_argument("special_elements expects a type D system");
  const int n = sys.rank;
  if (n % 2 != 0)
    throw std::invalid_argument("special_elements needs even rank");
  Word xw{1, 2};
  for (int i = 4; i <= n; i += 2) xw.push_back(i);
  SpecialElements out{build_wn(sys, n), from_word(sys, xw), std::nullopt,
                      std::nullopt};
  if (n >= 6) {
    SignedPermutation v = build_wn(sys, n - 2);
    for (int i : {n, n - 1, n}) v = mul_gen(v, i, Side::Left);
    out.vn = v;
  }
  if (n >= 8) {
    SignedPermutation u = build_wn(sys, n - 4);
    for (int i : {n, n - 1, n}) u = mul_gen(u, i, Side::Right);
    out.un = u;
  }
  return out;
}

std::vector<SignedPermutation> enumerate_bad(const CoxeterSystem& sys) {
  if (sys.family != Family::D)
    throw std::invalid_argument("enumerate_bad expects a type D system");
  const int n = sys.rank;
  std::set<Window> seen;
  std::vector<SignedPermutation> out;
  for (int k = 4; k <= n; k += 2) {
    SignedPermutation base = build_wn(sys, k);
    // Independent subsets of {k+2,...,n}: no two consecutive indices.
    std::vector<std::vector<int>> subsets{{}};
    for (int j = k + 2; j <= n; ++j) {
      size_t count = subsets.size();
      for (size_t idx = 0; idx < count; ++idx) {
        const auto& s = subsets[idx];
        if (!s.empty() && s.back() == j - 1) continue;
        auto ext = s;
        ext.push_back(j);
        subsets.push_back(std::move(ext));
      }
    }
    for (const auto& s : subsets) {
      SignedPermutation w = base;
      for (int j : s) w = mul_gen(w, j, Side::Right);
      if (seen.insert(w.window()).second) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dkl
