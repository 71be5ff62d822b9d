#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dkl/cells.hpp"
#include "dkl/coxeter.hpp"
#include "dkl/group_table.hpp"

namespace dkl {

/// A square in the quadrant, 1-based; row/column 0 is the boundary used by
/// the N-map.
struct Square {
  int row = 0;
  int col = 0;
  friend bool operator==(const Square& a, const Square& b) {
    return a.row == b.row && a.col == b.col;
  }
  friend bool operator!=(const Square& a, const Square& b) { return !(a == b); }
  friend bool operator<(const Square& a, const Square& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
  /// Fixed squares have even row+col; each domino holds exactly one.
  bool fixed() const { return (row + col) % 2 == 0; }
};

/// Two adjacent squares, stored in sorted order.
struct Domino {
  Square a, b;
  Domino() = default;
  Domino(Square x, Square y);
  bool horizontal() const { return a.row == b.row; }
  bool vertical() const { return a.col == b.col; }
  Square fixed_square() const { return a.fixed() ? a : b; }
  Square variable_square() const { return a.fixed() ? b : a; }
  friend bool operator==(const Domino& x, const Domino& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Domino& x, const Domino& y) { return !(x == y); }
};

/// A Young diagram as its row-length vector.
struct Shape {
  std::vector<int> rows;
  int rho(int i) const;    // boxes in row i
  int kappa(int j) const;  // boxes in column j
  int total() const;
  friend bool operator==(const Shape& a, const Shape& b) { return a.rows == b.rows; }
};

/// A domino tableau: disjoint labeled dominoes tiling a Young diagram with
/// labels increasing along rows and columns.  Immutable after construction.
class DominoTableau {
 public:
  static constexpr int kBoundary = 0;
  static constexpr int kOffDiagram = 1 << 30;

  DominoTableau() = default;
  /// Builds from labeled dominoes and checks all tableau conditions.
  explicit DominoTableau(std::map<int, Domino> dominoes);

  bool empty() const { return doms_.empty(); }
  int size() const { return static_cast<int>(doms_.size()); }
  std::vector<int> labels() const;
  bool has_label(int k) const { return doms_.count(k) > 0; }
  int max_label() const { return doms_.empty() ? 0 : doms_.rbegin()->first; }
  const Domino& position(int k) const;  // P(T,k)
  const std::map<int, Domino>& dominoes() const { return doms_; }
  const Shape& shape() const { return shape_; }

  /// N(T,S): the label at S, 0 on the boundary, "infinity" off the diagram.
  int n_at(Square s) const;

  std::string serialize() const;
  friend bool operator==(const DominoTableau& a, const DominoTableau& b) {
    return a.doms_ == b.doms_;
  }
  friend bool operator!=(const DominoTableau& a, const DominoTableau& b) {
    return !(a == b);
  }

 private:
  std::map<int, Domino> doms_;
  Shape shape_;
  std::map<std::pair<int, int>, int> grid_;
};

/// Row and column lengths of a tableau's shape (0 beyond the diagram).
int rho(const DominoTableau& t, int i);
int kappa(const DominoTableau& t, int j);

/// Checks the four tableau conditions, throwing on violation.
void validate(const DominoTableau& t);

/// Garfinkle's shuffle: relocates a domino overlapping the diagram J so that
/// J union the result is again a Young diagram.
Domino shuffle_A(const Shape& j, const Domino& p);

/// Inserts a new label with orientation eps (+1 horizontal, -1 vertical).
DominoTableau alpha_insert(const DominoTableau& t, int label, int eps);

/// {(i, |w(i)|, sign w(i))} for a type D element.
std::vector<std::array<int, 3>> delta(const SignedPermutation& w);

/// The left (or right) domino tableau of w.
DominoTableau tableau(const SignedPermutation& w, Side side);

/// The partner domino P'(T,k) sharing the fixed square of P(T,k).
Domino p_prime(const DominoTableau& t, int k);
/// The neighbour label r used to choose P'(T,k).
int p_prime_r(const DominoTableau& t, int k);

struct Cycle {
  std::vector<int> labels;  // sorted
  bool open = false;
};

/// The cycle partition of the labels, each flagged open/closed.
std::vector<Cycle> cycles(const DominoTableau& t);

/// E(T,C): replaces D(T,k) by D'(T,k) for k in the cycle.
DominoTableau move_through(const DominoTableau& t, const Cycle& c);

/// All tableaux reachable from t through open-cycle moves (including t).
std::vector<DominoTableau> open_move_orbit(const DominoTableau& t);

/// Canonical representative of the open-cycle-move equivalence class.
std::string equiv_canonical_form(const DominoTableau& t);

/// Cells of the listed elements via tableau equivalence.  Left uses T_L,
/// Right uses T_R; TwoSided joins the two partitions.
CellPartition tableau_cells(const GroupTable& tbl,
                            const std::vector<uint32_t>& elements, CellKind kind,
                            int threads = 1);

std::string to_json(const DominoTableau& t);
std::string ascii_render(const DominoTableau& t);

}  // namespace dkl
