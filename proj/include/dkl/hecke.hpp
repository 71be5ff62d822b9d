#pragma once

#include <map>

#include "dkl/group_table.hpp"
#include "dkl/poly.hpp"

namespace dkl {

/// Hecke algebra element in the T-basis, coefficients in Z[v,v^-1] with
/// q = v^2.  Zero coefficients are never stored.
class HeckeElement {
 public:
  HeckeElement() = default;
  static HeckeElement t_basis(uint32_t w) {
    HeckeElement h;
    h.coef_.emplace(w, HalfLaurent::term(1, 0));
    return h;
  }

  bool is_zero() const { return coef_.empty(); }
  const std::map<uint32_t, HalfLaurent>& terms() const { return coef_; }
  HalfLaurent coeff(uint32_t w) const {
    auto it = coef_.find(w);
    return it == coef_.end() ? HalfLaurent{} : it->second;
  }

  void add(uint32_t w, const HalfLaurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coef_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coef_.erase(it);
    }
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    for (const auto& [w, c] : o.coef_) add(w, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    for (const auto& [w, c] : o.coef_) add(w, c.scaled(-1));
    return *this;
  }
  HeckeElement scaled(const HalfLaurent& f) const {
    HeckeElement h;
    for (const auto& [w, c] : coef_) h.add(w, c * f);
    return h;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.coef_ == b.coef_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) {
    return !(a == b);
  }

 private:
  std::map<uint32_t, HalfLaurent> coef_;
};

/// a * T_s, using T_w T_s = T_{ws} when the length goes up and the
/// quadratic relation T_s^2 = (q-1)T_s + q otherwise.
HeckeElement hecke_mul_gen(const GroupTable& tbl, const HeckeElement& a, int s);

HeckeElement hecke_mul(const GroupTable& tbl, const HeckeElement& a,
                       const HeckeElement& b);

/// T_w^{-1} in the T-basis.
HeckeElement hecke_t_inverse(const GroupTable& tbl, uint32_t w);

/// The bar involution: v -> v^{-1}, T_w -> T_{w^{-1}}^{-1}.
HeckeElement hecke_iota(const GroupTable& tbl, const HeckeElement& a);

}  // namespace dkl
