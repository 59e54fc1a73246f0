#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "cherednik/cyclotomic.hpp"

namespace cherednik {

/// Element of Q(zeta_l)[k, k^{-1}], k standing for a transcendental kappa.
/// When kappa is a fixed rational the caller substitutes it, so such values
/// carry only the k^0 term.
class Scalar {
 public:
  using Terms = std::map<int, Cyclotomic>;

  Scalar() = default;
  Scalar(const Rational& r) { add(0, Cyclotomic(r)); }  // NOLINT
  Scalar(long r) { add(0, Cyclotomic(r)); }             // NOLINT
  Scalar(const Cyclotomic& c) { add(0, c); }            // NOLINT

  static Scalar kappa_power(int j, const Cyclotomic& c = Cyclotomic(1L)) {
    Scalar s;
    s.add(j, c);
    return s;
  }
  static Scalar kappa() { return kappa_power(1); }
  static Scalar zeta(int l, int a) { return Scalar(Cyclotomic::zeta(l, a)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Cyclotomic coeff(int j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? Cyclotomic() : it->second;
  }

  /// True when the value is free of kappa and zeta.
  bool is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second.is_rational();
  }
  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("scalar is not rational: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second.rational_value();
  }
  bool is_integer() const {
    return is_rational() && rational_value().get_den() == 1;
  }
  bool kappa_free() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  /// Substitute kappa = value.
  Scalar at_kappa(const Rational& value) const {
    if (value == 0 && !terms_.empty() && terms_.begin()->first < 0)
      throw std::domain_error("negative kappa power at kappa = 0");
    Scalar r;
    for (const auto& [j, c] : terms_) {
      Rational p(1);
      for (int i = 0; i < (j < 0 ? -j : j); ++i) p *= value;
      if (j < 0) p = 1 / p;
      r.add(0, c * Cyclotomic(p));
    }
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    for (const auto& [j, c] : o.terms_) add(j, c);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (const auto& [j, c] : o.terms_) add(j, -c);
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar() - a; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) r.add(i + j, x * y);
    return r;
  }
  Scalar divided(const Rational& d) const {
    Scalar r;
    for (const auto& [j, c] : terms_) r.add(j, c.divided(d));
    return r;
  }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Text form: signed sum of r, r*z^a, r*k^b, r*z^a*k^b, highest k power first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const int j = it->first;
      const auto& cs = it->second.coeffs();
      for (std::size_t a = 0; a < cs.size(); ++a) {
        if (cs[a] == 0) continue;
        Rational r = cs[a];
        bool neg = r < 0;
        if (neg) r = -r;
        if (first)
          os << (neg ? "-" : "");
        else
          os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        if (a > 0) mono += a == 1 ? "z" : "z^" + std::to_string(a);
        if (j != 0) {
          if (!mono.empty()) mono += '*';
          mono += j == 1 ? "k" : "k^" + std::to_string(j);
        }
        if (mono.empty())
          os << r.get_str();
        else if (r == 1)
          os << mono;
        else
          os << r.get_str() << '*' << mono;
      }
    }
    return os.str();
  }

  /// Parses the text form; l is the cyclotomic order for z.
  static Scalar parse(std::string_view text, int l) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    Scalar out;
    std::size_t i = 0;
    while (i < s.size()) {
      Rational sign(1);
      if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -1;
        ++i;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') {
        if (s[j] == '^' && j + 1 < s.size() && s[j + 1] == '-') ++j;
        ++j;
      }
      std::string term = s.substr(i, j - i);
      if (term.empty()) throw std::invalid_argument("bad scalar '" + s + "'");
      Rational r = sign;
      int za = 0, kb = 0;
      std::size_t p = 0;
      while (p <= term.size()) {
        std::size_t q = term.find('*', p);
        if (q == std::string::npos) q = term.size();
        std::string f = term.substr(p, q - p);
        if (f.empty()) throw std::invalid_argument("bad scalar term '" + term + "'");
        if (f[0] == 'z' || f[0] == 'k') {
          int e = 1;
          if (f.size() > 1) {
            if (f[1] != '^') throw std::invalid_argument("bad factor '" + f + "'");
            e = std::stoi(f.substr(2));
          }
          (f[0] == 'z' ? za : kb) += e;
        } else {
          r *= parse_rational(f);
        }
        p = q + 1;
      }
      Cyclotomic c = za == 0 ? Cyclotomic(r) : Cyclotomic::zeta(l, za) * Cyclotomic(r);
      out.add(kb, c);
      i = j;
    }
    return out;
  }

 private:
  void add(int j, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(j);
    if (it == terms_.end()) {
      terms_.emplace(j, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace cherednik
