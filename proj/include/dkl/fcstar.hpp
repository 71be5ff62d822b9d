#pragma once

#include <optional>
#include <vector>

#include "dkl/coxeter.hpp"

namespace dkl {

/// A noncommuting generator pair {s,t} (m(s,t) = 3) together with the side
/// the star operation acts on.
struct StarContext {
  int s = 0;
  int t = 0;
  Side side = Side::Left;
};

enum class StarTerminal { CommutingProduct, Bad, NoncommutativeDescent };

struct StarStep {
  StarContext ctx;
  SignedPermutation element;
};

struct StarReductionTrace {
  SignedPermutation start;
  std::vector<StarStep> steps;  // each step drops the length by one
  StarTerminal terminal;

  const SignedPermutation& terminal_element() const {
    return steps.empty() ? start : steps.back().element;
  }
};

/// True iff no reduced expression of w contains a long braid factor sts.
/// Searches the commutation class of one reduced word for such a factor.
bool is_fully_commutative(const SignedPermutation& w);

/// The star operation; empty when w is outside the domain D(s,t) on the
/// requested side.  An involution where defined.
std::optional<SignedPermutation> star(const SignedPermutation& w, const StarContext& ctx);

/// Star-reduces w with a deterministic move order (left contexts in
/// ascending pair order first, then right) until one of the three terminal
/// classes is reached.
StarReductionTrace star_reduce(const SignedPermutation& w);

bool is_commuting_product(const SignedPermutation& w);
bool descent_set_commutative(const SignedPermutation& w, Side side);

}  // namespace dkl
