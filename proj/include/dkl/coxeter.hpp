#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dkl {

enum class Family : uint8_t { A, D };
enum class Side : uint8_t { Left, Right };

/// Coxeter system of type A_rank or D_rank.  The Coxeter matrix is implied
/// by the family: edges of the graph carry m = 3, non-edges m = 2.
struct CoxeterSystem {
  Family family = Family::D;
  int rank = 4;

  CoxeterSystem() = default;
  CoxeterSystem(Family f, int r);

  /// Size of the one-line window: rank+1 entries for A, rank for D.
  int window_size() const { return family == Family::A ? rank + 1 : rank; }
  bool valid_generator(int i) const { return i >= 1 && i <= rank; }
  int coxeter_m(int s, int t) const;
  bool commute(int s, int t) const { return coxeter_m(s, t) <= 2; }
  std::vector<std::pair<int, int>> noncommuting_pairs() const;

  std::string name() const;  // "D6", "A3"
  static CoxeterSystem parse(const std::string& text);

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const CoxeterSystem& a, const CoxeterSystem& b) {
    return !(a == b);
  }
};

/// Subset of generator indices as a bitmask (bit i-1 for s_i).
struct GenSet {
  uint32_t bits = 0;

  GenSet() = default;
  explicit GenSet(uint32_t b) : bits(b) {}
  static GenSet of(std::initializer_list<int> gens);

  bool contains(int i) const { return bits & (1u << (i - 1)); }
  void add(int i) { bits |= 1u << (i - 1); }
  void remove(int i) { bits &= ~(1u << (i - 1)); }
  bool empty() const { return bits == 0; }
  int size() const { return __builtin_popcount(bits); }
  bool subset_of(const GenSet& o) const { return (bits & ~o.bits) == 0; }
  int min() const;  // smallest member, 0 if empty
  std::vector<int> to_vector() const;

  friend bool operator==(const GenSet& a, const GenSet& b) { return a.bits == b.bits; }
  friend bool operator!=(const GenSet& a, const GenSet& b) { return !(a == b); }
};

using Word = std::vector<int>;
using Window = std::vector<int>;

/// Group element in window (one-line) notation.  For family D the entries
/// are a signed permutation of 1..n with an even number of negatives; for
/// family A all entries are positive.
class SignedPermutation {
 public:
  SignedPermutation(CoxeterSystem sys, Window window);
  static SignedPermutation identity(const CoxeterSystem& sys);

  const CoxeterSystem& system() const { return sys_; }
  const Window& window() const { return win_; }
  /// Image of i (1-based); negative i gives the negated image.
  int image(int i) const { return i > 0 ? win_[i - 1] : -win_[-i - 1]; }
  bool is_identity() const;

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.sys_ == b.sys_ && a.win_ == b.win_;
  }
  friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
    return !(a == b);
  }
  /// Orders by window sequence (within one system).
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    return a.win_ < b.win_;
  }

 private:
  CoxeterSystem sys_;
  Window win_;
};

SignedPermutation mul_gen(const SignedPermutation& w, int i, Side side);
SignedPermutation mul(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation from_word(const CoxeterSystem& sys, const Word& word);
int length(const SignedPermutation& w);
GenSet descents(const SignedPermutation& w, Side side);
SignedPermutation inverse(const SignedPermutation& w);
/// Deterministic reduced word: repeatedly strips the smallest right descent.
Word canonical_word(const SignedPermutation& w);
bool bruhat_leq(const SignedPermutation& x, const SignedPermutation& w);
/// Returns (w^I, w_I) with w = w^I * w_I reduced, w_I in W_I and w^I having
/// no right descent in I.
std::pair<SignedPermutation, SignedPermutation> parabolic_decompose(
    const SignedPermutation& w, GenSet I);
Word expand_interval(const std::pair<int, int>& iv);
/// Embeds A_{n-1} into D_n: same underlying permutation, letters shift by +1.
SignedPermutation iota_embed(const SignedPermutation& w);
SignedPermutation longest_element(const CoxeterSystem& sys);

bool reduced_word_is_valid(const CoxeterSystem& sys, const Word& word);

// Shared text formats.
std::string window_to_string(const SignedPermutation& w);  // "1,-4,3,-2"
SignedPermutation parse_window(const CoxeterSystem& sys, const std::string& text);
std::string word_to_string(const Word& word);  // "s1 s2 s4"
Word parse_word(const std::string& text);
std::vector<std::pair<int, int>> parse_intervals(const std::string& text);  // "[2,0][4,4]"
std::string intervals_to_string(const std::vector<std::pair<int, int>>& ivs);

}  // namespace dkl
