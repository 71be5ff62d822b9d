#include "dkl/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dkl {

IntPolynomial::IntPolynomial(long long constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial IntPolynomial::monomial(long long c, int exp) {
  IntPolynomial p;
  if (c == 0) return p;
  if (exp < 0) throw std::invalid_argument("IntPolynomial: negative exponent");
  p.coeffs_.assign(exp + 1, 0);
  p.coeffs_[exp] = c;
  return p;
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<long long> coeffs) {
  IntPolynomial p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPolynomial::degree() const {
  return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1;
}

long long IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<long long> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial::from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("IntPolynomial::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  IntPolynomial p;
  p.coeffs_.assign(coeffs_.size() + k, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), p.coeffs_.begin() + k);
  return p;
}

IntPolynomial IntPolynomial::scaled(long long c) const {
  if (c == 0) return {};
  IntPolynomial p = *this;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

namespace {

void append_term(std::ostringstream& os, bool first, long long c, int k) {
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  long long m = c < 0 ? -c : c;
  if (k == 0) {
    os << m;
  } else {
    if (m != 1) os << m;
    os << "q";
    if (k != 1) os << "^" << k;
  }
}

}  // namespace

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    if (coeffs_[k] == 0) continue;
    append_term(os, first, coeffs_[k], k);
    first = false;
  }
  return os.str();
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
  std::vector<long long> coeffs;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty polynomial");
  int sign = 1;
  if (text[i] == '-') {
    sign = -1;
    ++i;
  } else if (text[i] == '+') {
    ++i;
  }
  while (true) {
    skip_ws();
    long long mag = 1;
    bool saw_digits = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      mag = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        ++i;
      }
      saw_digits = true;
    }
    skip_ws();
    int exp = 0;
    if (i < text.size() && text[i] == 'q') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw std::invalid_argument("bad exponent in polynomial");
        exp = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          exp = exp * 10 + (text[i] - '0');
          ++i;
        }
      }
    } else if (!saw_digits) {
      throw std::invalid_argument("bad term in polynomial");
    }
    if (static_cast<int>(coeffs.size()) <= exp) coeffs.resize(exp + 1, 0);
    coeffs[exp] += sign * mag;
    skip_ws();
    if (i == text.size()) break;
    if (text[i] == '+') {
      sign = 1;
    } else if (text[i] == '-') {
      sign = -1;
    } else {
      throw std::invalid_argument("unexpected character in polynomial");
    }
    ++i;
  }
  return from_coeffs(std::move(coeffs));
}

HalfLaurent HalfLaurent::term(long long c, int exp) {
  HalfLaurent h;
  if (c != 0) h.terms_.emplace_back(exp, c);
  return h;
}

HalfLaurent HalfLaurent::from_q_poly(const IntPolynomial& p, int dir, int shift) {
  HalfLaurent h;
  if (dir != 1 && dir != -1) throw std::invalid_argument("dir must be +-1");
  for (int k = 0; k <= p.degree(); ++k) {
    long long c = p.coeff(k);
    if (c != 0) h.terms_.emplace_back(2 * dir * k + shift, c);
  }
  std::sort(h.terms_.begin(), h.terms_.end());
  return h;
}

int HalfLaurent::degree() const {
  return terms_.empty() ? kNegInfDegree : terms_.back().first;
}

int HalfLaurent::low_degree() const {
  return terms_.empty() ? kNegInfDegree : terms_.front().first;
}

long long HalfLaurent::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const auto& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

HalfLaurent HalfLaurent::bar() const {
  HalfLaurent h;
  h.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    h.terms_.emplace_back(-it->first, it->second);
  return h;
}

HalfLaurent HalfLaurent::shifted(int k) const {
  HalfLaurent h = *this;
  for (auto& t : h.terms_) t.first += k;
  return h;
}

HalfLaurent HalfLaurent::scaled(long long c) const {
  if (c == 0) return {};
  HalfLaurent h = *this;
  for (auto& t : h.terms_) t.second *= c;
  return h;
}

void HalfLaurent::add_term(int e, long long c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const auto& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {e, c});
  }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string HalfLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long m = c < 0 ? -c : c;
    if (e == 0) {
      os << m;
    } else {
      if (m != 1) os << m;
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace dkl
