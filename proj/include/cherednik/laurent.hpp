#pragma once

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "cherednik/errors.hpp"

namespace cherednik {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string t(text);
  if (t.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0)
    throw std::invalid_argument("bad rational '" + t + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

/// Finite Laurent polynomial sum c_e x^e, stored sparsely with no zero
/// coefficients.  Used for q-series (QPoly) and Fock-space coefficients (VPoly).
template <class C>
class Laurent {
 public:
  using Terms = std::map<int, C>;

  Laurent() = default;
  Laurent(const C& c) { add_term(0, c); }  // NOLINT: constants convert
  Laurent(long c) { add_term(0, C(c)); }   // NOLINT

  static Laurent monomial(int e, const C& c = C(1)) {
    Laurent r;
    r.add_term(e, c);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }
  std::size_t term_count() const { return terms_.size(); }

  C coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(int e, const C& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms_ == b.terms_;
  }

  Laurent scaled(const C& c) const {
    Laurent r;
    if (c == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
  }

  Laurent shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// x -> x^{-1}.
  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// x -> x^k.
  Laurent dilated(int k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
  }

  /// Terms with exponent > 0.
  Laurent positive_part() const {
    Laurent r;
    for (auto it = terms_.upper_bound(0); it != terms_.end(); ++it)
      r.terms_.emplace(it->first, it->second);
    return r;
  }

  C eval(const C& x) const {
    C r(0);
    for (const auto& [e, c] : terms_) {
      C p(1);
      if (e >= 0) {
        for (int i = 0; i < e; ++i) p *= x;
      } else {
        if (x == 0) throw std::domain_error("negative power at 0");
        for (int i = 0; i < -e; ++i) p /= x;
      }
      r += c * p;
    }
    return r;
  }

  std::string to_string(char var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      C a = c;
      bool neg = a < 0;
      if (neg) a = -a;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? "-" : "+");
      first = false;
      std::string cs = coeff_string(a);
      if (e == 0) {
        os << cs;
        continue;
      }
      if (cs != "1") os << cs << '*';
      os << var;
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

  /// Parses the text form produced by to_string (spaces allowed).
  static Laurent parse(std::string_view text, char var) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    Laurent r;
    std::size_t i = 0;
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') {
        if (s[j] == '^' && j + 1 < s.size() && s[j + 1] == '-') ++j;
        ++j;
      }
      std::string term = s.substr(i, j - i);
      if (term.empty()) throw std::invalid_argument("bad polynomial '" + s + "'");
      C coef(sign);
      int expo = 0;
      auto star = term.find('*');
      std::string mono = term;
      if (star != std::string::npos) {
        coef *= parse_coeff(term.substr(0, star));
        mono = term.substr(star + 1);
      } else if (term.find(var) == std::string::npos) {
        coef *= parse_coeff(term);
        mono.clear();
      }
      if (!mono.empty()) {
        if (mono[0] != var) throw std::invalid_argument("bad monomial '" + mono + "'");
        expo = 1;
        if (mono.size() > 1) {
          if (mono[1] != '^') throw std::invalid_argument("bad monomial '" + mono + "'");
          expo = std::stoi(mono.substr(2));
        }
      }
      r.add_term(expo, coef);
      i = j;
    }
    return r;
  }

 private:
  static std::string coeff_string(const C& c) {
    std::ostringstream os;
    os << c;
    return os.str();
  }
  static C parse_coeff(const std::string& t) {
    if constexpr (std::is_same_v<C, Rational>) {
      return parse_rational(t);
    } else {
      return C(std::stoll(t));
    }
  }

  Terms terms_;
};

using QPoly = Laurent<Rational>;
using VPoly = Laurent<Rational>;

/// Exact quotient a / b of Laurent polynomials; throws if b does not divide a.
inline QPoly divide_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  QPoly rem = a;
  QPoly quo;
  const int bl = b.max_degree();
  const int bs = b.min_degree();
  const Rational lead = b.coeff(bl);
  while (!rem.is_zero()) {
    if (rem.max_degree() - bl < rem.min_degree() - bs)
      throw std::domain_error("inexact polynomial division");
    int e = rem.max_degree() - bl;
    Rational c = rem.coeff(rem.max_degree()) / lead;
    quo.add_term(e, c);
    rem -= b.shifted(e).scaled(c);
  }
  return quo;
}

/// Product of (1 - q^d) over d in ds.
template <class Range>
QPoly one_minus_q_product(const Range& ds) {
  QPoly r(1L);
  for (int d : ds) r *= QPoly(1L) - QPoly::monomial(d);
  return r;
}

}  // namespace cherednik
