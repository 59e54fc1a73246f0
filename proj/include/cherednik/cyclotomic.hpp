#pragma once

#include <algorithm>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cherednik/laurent.hpp"

namespace cherednik {

namespace detail {

using IntPoly = std::vector<long>;  // ascending coefficients

inline IntPoly int_poly_divide(IntPoly a, const IntPoly& b) {
  // b monic; exact division expected
  IntPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    long c = a[k + b.size() - 1];
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  return q;
}

/// Coefficients of the e-th cyclotomic polynomial, ascending.
inline IntPoly cyclotomic_polynomial(int e) {
  IntPoly p(static_cast<std::size_t>(e) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(e)] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) p = int_poly_divide(p, cyclotomic_polynomial(d));
  return p;
}

}  // namespace detail

/// Element of Q(zeta_e) as a polynomial in zeta reduced modulo Phi_e.
/// e = 0 marks a plain rational that adapts to whatever field it meets.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const Rational& r) : coeffs_{r} { trim(); }  // NOLINT
  Cyclotomic(long r) : coeffs_{Rational(r)} { trim(); }   // NOLINT

  /// zeta_e^a.
  static Cyclotomic zeta(int e, int a) {
    if (e < 1) throw std::invalid_argument("cyclotomic order must be positive");
    Cyclotomic z;
    z.set_order(e);
    int k = ((a % e) + e) % e;
    z.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    z.coeffs_[static_cast<std::size_t>(k)] = 1;
    z.reduce();
    return z;
  }

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational number");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    adopt(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator-(Cyclotomic a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic r;
    r.adopt(a);
    r.adopt(b);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.reduce();
    return r;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic divided(const Rational& r) const {
    if (r == 0) throw std::domain_error("division by zero");
    Cyclotomic x = *this;
    for (auto& c : x.coeffs_) c /= r;
    return x;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void set_order(int e) {
    order_ = e;
    modulus_ = std::make_shared<detail::IntPoly>(detail::cyclotomic_polynomial(e));
  }
  void adopt(const Cyclotomic& o) {
    if (o.order_ == 0 || o.order_ == order_) return;
    if (order_ == 0) {
      order_ = o.order_;
      modulus_ = o.modulus_;
      return;
    }
    if (o.is_rational()) return;
    if (is_rational()) {
      order_ = o.order_;
      modulus_ = o.modulus_;
      return;
    }
    throw std::invalid_argument("mixing different cyclotomic fields");
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  void reduce() {
    if (modulus_) {
      const auto& m = *modulus_;
      const std::size_t deg = m.size() - 1;
      for (std::size_t k = coeffs_.size(); k-- > deg;) {
        Rational c = coeffs_[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) coeffs_[k - deg + j] -= c * m[j];
      }
      if (coeffs_.size() > deg) coeffs_.resize(deg);
    }
    trim();
  }

  int order_ = 0;
  std::shared_ptr<const detail::IntPoly> modulus_;
  std::vector<Rational> coeffs_;
};

}  // namespace cherednik
