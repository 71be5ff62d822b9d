#include "dkl/group_table.hpp"

#include <algorithm>

namespace dkl {

std::string GroupTable::key(const Window& w) const {
  std::string k(wsize_, '\0');
  for (int i = 0; i < wsize_; ++i) k[i] = static_cast<char>(w[i]);
  return k;
}

GroupTable GroupTable::enumerate(const CoxeterSystem& sys, size_t max_elements) {
  GroupTable t;
  t.sys_ = sys;
  t.rank_ = sys.rank;
  t.wsize_ = sys.window_size();

  std::vector<Window> elems;
  elems.push_back(SignedPermutation::identity(sys).window());
  t.index_.emplace(t.key(elems[0]), 0);

  for (size_t head = 0; head < elems.size(); ++head) {
    SignedPermutation w(sys, elems[head]);
    for (int i = 1; i <= sys.rank; ++i) {
      Window nw = mul_gen(w, i, Side::Right).window();
      std::string k = t.key(nw);
      auto it = t.index_.find(k);
      uint32_t idx;
      if (it == t.index_.end()) {
        if (elems.size() >= max_elements)
          throw ResourceLimitError("group enumeration exceeds element ceiling (" +
                                   std::to_string(max_elements) + ") for " + sys.name());
        idx = static_cast<uint32_t>(elems.size());
        elems.push_back(std::move(nw));
        t.index_.emplace(std::move(k), idx);
      } else {
        idx = it->second;
      }
      t.rmult_.resize(elems.size() * sys.rank, UINT32_MAX);
      t.rmult_[head * sys.rank + (i - 1)] = idx;
    }
  }

  const uint32_t n = static_cast<uint32_t>(elems.size());
  t.windows_.resize(static_cast<size_t>(n) * t.wsize_);
  t.lmult_.resize(static_cast<size_t>(n) * sys.rank);
  t.len_.resize(n);
  t.ldesc_.resize(n);
  t.rdesc_.resize(n);
  t.inv_.resize(n);
  for (uint32_t e = 0; e < n; ++e) {
    for (int i = 0; i < t.wsize_; ++i)
      t.windows_[static_cast<size_t>(e) * t.wsize_ + i] =
          static_cast<int8_t>(elems[e][i]);
    SignedPermutation w(sys, elems[e]);
    t.len_[e] = static_cast<uint16_t>(dkl::length(w));
    t.ldesc_[e] = descents(w, Side::Left).bits;
    t.rdesc_[e] = descents(w, Side::Right).bits;
    t.inv_[e] = t.index_.at(t.key(inverse(w).window()));
    for (int i = 1; i <= sys.rank; ++i)
      t.lmult_[static_cast<size_t>(e) * sys.rank + (i - 1)] =
          t.index_.at(t.key(mul_gen(w, i, Side::Left).window()));
  }
  return t;
}

SignedPermutation GroupTable::element(uint32_t e) const {
  Window w(wsize_);
  for (int i = 0; i < wsize_; ++i)
    w[i] = windows_[static_cast<size_t>(e) * wsize_ + i];
  return SignedPermutation(sys_, std::move(w));
}

uint32_t GroupTable::index_of(const SignedPermutation& w) const {
  if (w.system() != sys_)
    throw std::invalid_argument("element from a different Coxeter system");
  auto it = index_.find(key(w.window()));
  if (it == index_.end()) throw std::invalid_argument("element not in table");
  return it->second;
}

uint32_t GroupTable::eval_word(const Word& word) const {
  uint32_t e = 0;
  for (int i : word) {
    if (!sys_.valid_generator(i))
      throw std::invalid_argument("invalid generator index s" + std::to_string(i));
    e = rmult(e, i);
  }
  return e;
}

Word GroupTable::canonical_word(uint32_t e) const {
  Word out;
  out.reserve(len_[e]);
  while (rdesc_[e] != 0) {
    int s = GenSet(rdesc_[e]).min();
    e = rmult(e, s);
    out.push_back(s);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool GroupTable::bruhat_leq(uint32_t x, uint32_t w) const {
  while (true) {
    if (len_[x] > len_[w]) return false;
    if (x == w) return true;
    if (len_[x] == len_[w]) return false;
    int s = GenSet(ldesc_[w]).min();
    w = lmult(w, s);
    if (GenSet(ldesc_[x]).contains(s)) x = lmult(x, s);
  }
}

std::vector<uint32_t> GroupTable::coatoms(uint32_t w) const {
  Word word = canonical_word(w);
  std::vector<uint32_t> out;
  for (size_t skip = 0; skip < word.size(); ++skip) {
    uint32_t e = 0;
    for (size_t i = 0; i < word.size(); ++i) {
      if (i == skip) continue;
      e = rmult(e, word[i]);
    }
    if (len_[e] + 1 == len_[w]) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dkl
