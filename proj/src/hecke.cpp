#include "dkl/hecke.hpp"

namespace dkl {

HeckeElement hecke_mul_gen(const GroupTable& tbl, const HeckeElement& a, int s) {
  HeckeElement out;
  const HalfLaurent q_minus_1 = HalfLaurent::term(1, 2) - HalfLaurent::term(1, 0);
  const HalfLaurent q = HalfLaurent::term(1, 2);
  for (const auto& [w, c] : a.terms()) {
    uint32_t ws = tbl.rmult(w, s);
    if (tbl.length(ws) > tbl.length(w)) {
      out.add(ws, c);
    } else {
      out.add(w, c * q_minus_1);
      out.add(ws, c * q);
    }
  }
  return out;
}

HeckeElement hecke_mul(const GroupTable& tbl, const HeckeElement& a,
                       const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [w, c] : b.terms()) {
    HeckeElement part = a;
    for (int s : tbl.canonical_word(w)) part = hecke_mul_gen(tbl, part, s);
    out += part.scaled(c);
  }
  return out;
}

namespace {

// T_s^{-1} = v^{-2} T_s + (v^{-2} - 1) T_e.
HeckeElement gen_inverse(const GroupTable& tbl, int s) {
  HeckeElement f;
  f.add(tbl.rmult(tbl.identity(), s), HalfLaurent::term(1, -2));
  f.add(tbl.identity(), HalfLaurent::term(1, -2) - HalfLaurent::term(1, 0));
  return f;
}

const HeckeElement& t_inverse_memo(const GroupTable& tbl, uint32_t w,
                                   std::map<uint32_t, HeckeElement>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  HeckeElement out;
  if (w == tbl.identity()) {
    out = HeckeElement::t_basis(tbl.identity());
  } else {
    // T_w = T_s T_{sw}, so T_w^{-1} = T_{sw}^{-1} T_s^{-1}.
    int s = tbl.ldesc(w).min();
    out = hecke_mul(tbl, t_inverse_memo(tbl, tbl.lmult(w, s), memo),
                    gen_inverse(tbl, s));
  }
  return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

HeckeElement hecke_t_inverse(const GroupTable& tbl, uint32_t w) {
  std::map<uint32_t, HeckeElement> memo;
  return t_inverse_memo(tbl, w, memo);
}

HeckeElement hecke_iota(const GroupTable& tbl, const HeckeElement& a) {
  std::map<uint32_t, HeckeElement> memo;
  HeckeElement out;
  for (const auto& [w, c] : a.terms())
    out += t_inverse_memo(tbl, tbl.inv(w), memo).scaled(c.bar());
  return out;
}

}  // namespace dkl
