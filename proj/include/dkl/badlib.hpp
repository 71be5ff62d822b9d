#pragma once

#include <optional>
#include <vector>

#include "dkl/coxeter.hpp"

namespace dkl {

enum class BadTag { NotBad, WeaklyBadCommuting, Bad };

struct BadClassification {
  BadTag tag = BadTag::NotBad;
  // For Bad: w = w_m * u reduced with u a product of commuting generators
  // supported in {s_{m+2},...,s_n}.
  int m = 0;
  Word u;
};

/// O(n) window test: does w have a reduced expression ending (Right) or
/// beginning (Left) in two noncommuting generators?
bool ends_in_noncommuting(const SignedPermutation& w, Side side);

BadClassification classify_bad(const SignedPermutation& w);

/// The window of w_m inside D_n; odd m gives w_{m-1} padded with fixed
/// points.  Requires 4 <= m <= n.
SignedPermutation build_wn(const CoxeterSystem& sys, int m);

long long wn_length(int n);

/// The interval-notation reduced word for w_n.  Odd n yields the word of
/// w_{n-1}, which represents the same element.
Word wn_reduced_word(int n);

struct SpecialElements {
  SignedPermutation wn;
  SignedPermutation xn;
  std::optional<SignedPermutation> vn;  // n >= 6
  std::optional<SignedPermutation> un;  // n >= 8
};

/// w_n, x_n, v_n, u_n inside D_n for even n >= 4.
SpecialElements special_elements(const CoxeterSystem& sys);

/// All bad elements of W(D_n), generated from the classification and sorted
/// by window.
std::vector<SignedPermutation> enumerate_bad(const CoxeterSystem& sys);

}  // namespace dkl
