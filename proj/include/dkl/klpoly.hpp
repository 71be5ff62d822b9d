#pragma once

#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "dkl/cells.hpp"
#include "dkl/group_table.hpp"
#include "dkl/hecke.hpp"
#include "dkl/poly.hpp"

namespace dkl {

struct KLOptions {
  size_t max_elements = 100000;          // group enumeration ceiling
  size_t max_memo = 50000000;            // P_{x,w} memo entry ceiling
  size_t a_value_max_elements = 10000;   // brute-force a-value ceiling
  size_t cells_max_elements = 100000;    // cell computation ceiling
};

enum class MuBoundVerdict { MuForcedZero, ParityZero, Inconclusive };
const char* to_string(MuBoundVerdict v);

/// Kazhdan-Lusztig computations over one finite Coxeter group.  Memo tables
/// grow on demand; lookups are guarded, so distinct queries may run from
/// several threads.
class KLContext {
 public:
  explicit KLContext(const CoxeterSystem& sys, KLOptions opts = {});

  const GroupTable& table() const { return tbl_; }
  const CoxeterSystem& system() const { return tbl_.system(); }
  const KLOptions& options() const { return opts_; }

  /// P_{x,w}: zero unless x <= w, P_{w,w} = 1, constant term 1 and degree
  /// <= (l(w)-l(x)-1)/2 for x < w.
  IntPolynomial kl_poly(uint32_t x, uint32_t w) const;
  IntPolynomial kl_poly(const SignedPermutation& x, const SignedPermutation& w) const;

  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; zero when that exponent
  /// is not a non-negative integer.
  long long mu(uint32_t x, uint32_t w) const;
  long long mu(const SignedPermutation& x, const SignedPermutation& w) const;

  /// All z with mu(z,w) != 0, as (z, mu) pairs sorted by z.
  const std::vector<std::pair<uint32_t, long long>>& mu_set(uint32_t w) const;

  /// Inverse polynomial Q_{x,w} from the alternating orthogonality identity.
  IntPolynomial inverse_kl(uint32_t x, uint32_t w) const;

  /// C_w expanded in the T-basis.
  HeckeElement c_basis(uint32_t w) const;

  /// Cell partition of the whole group (or a subset) from the mu-graph.
  /// Graph construction fans out over elements when threads > 1; results
  /// are identical to the serial run.
  CellPartition cells(CellKind kind, int threads = 1) const;
  CellPartition cells(CellKind kind, const std::vector<uint32_t>& elements,
                      int threads = 1) const;

  /// a(z) for every z, via the degrees of the C-basis structure constants
  /// h_{x,y,z} over all x, y.  Guarded by a_value_max_elements.
  const std::vector<long long>& a_values() const;
  long long a_value_bruteforce(uint32_t z) const { return a_values()[z]; }

  size_t memo_size() const;

 private:
  IntPolynomial kl_rec(uint32_t x, uint32_t w) const;
  std::vector<std::pair<uint32_t, long long>> compute_mu_set(uint32_t w) const;
  std::vector<std::pair<uint32_t, uint32_t>> mu_graph_edges(
      const std::vector<uint32_t>& elements, bool right, int threads) const;

  GroupTable tbl_;
  KLOptions opts_;
  // Memo tables are sharded by key so concurrent queries rarely contend.
  static constexpr size_t kShards = 64;
  mutable std::array<std::mutex, kShards> pmx_;
  mutable std::array<std::unordered_map<uint64_t, IntPolynomial>, kShards> pmemo_;
  mutable std::array<std::mutex, kShards> mumx_;
  mutable std::array<
      std::unordered_map<uint32_t,
                         std::unique_ptr<std::vector<std::pair<uint32_t, long long>>>>,
      kShards>
      mumemo_;
  mutable std::atomic<size_t> pmemo_count_{0};
  mutable std::mutex amx_;
  mutable std::vector<long long> avalues_;
};

/// a(w_n) by the closed formula: 3n/4 when n = 0 mod 4, (3n+2)/4 when
/// n = 2 mod 4.  Requires even n >= 4.
long long a_wn(int n);

/// Decides mu(x_n,w_n) = 0 by bound or parity where possible (even n).
MuBoundVerdict mu_upper_bound_check(int n);

}  // namespace dkl
