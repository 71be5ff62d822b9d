#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dkl/coxeter.hpp"

namespace dkl {

/// Thrown when a computation would exceed a configured resource ceiling.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full enumeration of a finite Coxeter group with generator multiplication
/// tables, lengths, descent masks and inverses.  Element indices are stable:
/// index 0 is the identity and elements appear in BFS order from it.
class GroupTable {
 public:
  static GroupTable enumerate(const CoxeterSystem& sys, size_t max_elements);

  const CoxeterSystem& system() const { return sys_; }
  uint32_t size() const { return static_cast<uint32_t>(len_.size()); }
  uint32_t identity() const { return 0; }

  uint32_t rmult(uint32_t e, int i) const { return rmult_[e * rank_ + (i - 1)]; }
  uint32_t lmult(uint32_t e, int i) const { return lmult_[e * rank_ + (i - 1)]; }
  int length(uint32_t e) const { return len_[e]; }
  GenSet ldesc(uint32_t e) const { return GenSet(ldesc_[e]); }
  GenSet rdesc(uint32_t e) const { return GenSet(rdesc_[e]); }
  uint32_t inv(uint32_t e) const { return inv_[e]; }

  SignedPermutation element(uint32_t e) const;
  uint32_t index_of(const SignedPermutation& w) const;
  uint32_t eval_word(const Word& word) const;
  Word canonical_word(uint32_t e) const;

  /// Standard lifting walk; O(length(w)) per query.
  bool bruhat_leq(uint32_t x, uint32_t w) const;
  /// All z covered by w (z < w with length difference one).
  std::vector<uint32_t> coatoms(uint32_t w) const;

 private:
  GroupTable() = default;
  std::string key(const Window& w) const;

  CoxeterSystem sys_;
  int rank_ = 0;
  int wsize_ = 0;
  std::vector<int8_t> windows_;  // wsize_ entries per element
  std::vector<uint32_t> rmult_, lmult_, inv_;
  std::vector<uint16_t> len_;
  std::vector<uint32_t> ldesc_, rdesc_;
  std::unordered_map<std::string, uint32_t> index_;
};

}  // namespace dkl
