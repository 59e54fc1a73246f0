#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/partition.hpp"
#include "cherednik/scalar.hpp"

namespace cherednik {

/// Cyclotomic parameter (kappa, s) for G_l(n), with the optional kappa^{-1}
/// offsets m so that s~_r = s_r + kappa^{-1} m_r.  kappa is either a rational
/// number or involves the indeterminate k.
struct ParamKS {
  int l = 1;
  int n = 1;
  Scalar kappa = Scalar::kappa();
  std::vector<Scalar> s;
  std::optional<std::vector<Rational>> m;

  bool symbolic() const { return !kappa.kappa_free(); }

  /// s_i with indices taken mod l, so s_0 = s_l.
  const Scalar& s_at(int i) const {
    int k = ((i % l) + l) % l;
    return s[static_cast<std::size_t>(k == 0 ? l - 1 : k - 1)];
  }

  std::vector<int> integer_charge() const {
    std::vector<int> out;
    for (const auto& x : s) {
      if (!x.is_integer()) throw PreconditionError("charge s must consist of integers");
      out.push_back(static_cast<int>(x.rational_value().get_num().get_si()));
    }
    return out;
  }

  void validate() const {
    if (l < 1) throw PreconditionError("level l must be positive");
    if (n < 0) throw PreconditionError("n must be non-negative");
    if (static_cast<int>(s.size()) != l) throw PreconditionError("charge s must have length l");
    if (m && static_cast<int>(m->size()) != l) throw PreconditionError("m must have length l");
  }
};

inline std::vector<Scalar> to_scalars(const std::vector<int>& v) {
  std::vector<Scalar> out;
  for (int x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline ParamKS make_param(int l, int n, const Scalar& kappa, const std::vector<int>& s) {
  ParamKS p;
  p.l = l;
  p.n = n;
  p.kappa = kappa;
  p.s = to_scalars(s);
  p.validate();
  return p;
}

/// h-coordinates: the pair class H^k_{i,j} with (h_0, h_1) and the class of
/// the H_i with h_j, j = 0..l-1.
struct HParams {
  std::vector<Scalar> pair;
  std::vector<Scalar> coord;
};

// ---------------------------------------------------------------------------

/// eps_i = kappa (s_i - s_{i-1}), 1 <= i <= l-1.
inline Scalar eps_of(const ParamKS& p, int i) {
  if (i < 1 || i > p.l - 1) throw std::out_of_range("eps index must lie in 1..l-1");
  return p.kappa * (p.s_at(i) - p.s_at(i - 1));
}

/// c_0 = -kappa, c_i = -(1 + kappa sum_{j=1}^{l-1} (z^{-ij} - 1)(s_j - s_{j-1})) / 2.
inline std::vector<Scalar> c_of(const ParamKS& p) {
  std::vector<Scalar> c;
  c.push_back(-p.kappa);
  for (int i = 1; i < p.l; ++i) {
    Scalar sum;
    for (int j = 1; j < p.l; ++j)
      sum += (Scalar::zeta(p.l, -i * j) - Scalar(1L)) * (p.s_at(j) - p.s_at(j - 1));
    c.push_back(-(Scalar(1L) + p.kappa * sum).divided(2));
  }
  return c;
}

/// eps_0..eps_{l-1} recovered from c-parameters with h = 1.
inline std::vector<Scalar> eps_from_c(const std::vector<Scalar>& c, int l) {
  std::vector<Scalar> eps(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    Scalar sum;
    for (int j = 1; j < l; ++j)
      sum += c[static_cast<std::size_t>(j)] * Scalar::zeta(l, i == 0 ? 0 : j * i);
    Scalar e = (Scalar(1L) - Scalar(2L) * sum).divided(l);
    if (i == 0) e += c[0] - Scalar(make_rational(1, 2));
    eps[static_cast<std::size_t>(i)] = e;
  }
  return eps;
}

/// h_{pair} = (kappa, 0), h_{H,j} = kappa s_j - j/l.
inline HParams h_of(const ParamKS& p) {
  HParams h;
  h.pair = {p.kappa, Scalar()};
  for (int j = 0; j < p.l; ++j)
    h.coord.push_back(p.kappa * p.s_at(j) - Scalar(make_rational(j, p.l)));
  return h;
}

/// S_l acting on s (and m) by s'_{sigma(i)} = s_i; sigma 0-indexed images.
inline ParamKS sl_act(const std::vector<int>& sigma, const ParamKS& p) {
  if (static_cast<int>(sigma.size()) != p.l) throw std::invalid_argument("permutation of wrong size");
  std::vector<bool> seen(sigma.size(), false);
  for (int x : sigma) {
    if (x < 0 || x >= p.l || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
  ParamKS q = p;
  for (int i = 0; i < p.l; ++i) {
    q.s[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = p.s[static_cast<std::size_t>(i)];
    if (p.m) (*q.m)[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = (*p.m)[static_cast<std::size_t>(i)];
  }
  return q;
}

// ---------------------------------------------------------------------------
// Spherical locus

struct AsphericalCertificate {
  int u = 0, k = 0, m = 0, khat = 0;
};

struct SphericalResult {
  bool spherical = true;
  std::optional<std::pair<long, long>> first_family;  // (a, b)
  std::optional<AsphericalCertificate> second_family;

  std::string to_string() const {
    if (spherical) return "spherical";
    if (first_family)
      return "aspherical a=" + std::to_string(first_family->first) +
             " b=" + std::to_string(first_family->second);
    const auto& c = *second_family;
    return "aspherical u=" + std::to_string(c.u) + " k=" + std::to_string(c.k) +
           " m=" + std::to_string(c.m);
  }
};

namespace detail {

/// k <= u + (sqrt(n + m^2/4) - m/2 - 1) l, decided exactly.
inline bool within_bound(int k, int u, int m, int n, int l) {
  const long y = 2L * (k - u) + static_cast<long>(m) * l + 2L * l;
  if (y <= 0) return true;
  return y * y <= static_cast<long>(l) * l * (4L * n + static_cast<long>(m) * m);
}

}  // namespace detail

/// Tests the aspherical hyperplanes: kappa = a/b with 1 <= a < b <= n, and
/// k - khat = kappa l (s_{u-k} - s_u - m) in the stated ranges.
inline SphericalResult is_spherical(const ParamKS& p) {
  p.validate();
  if (p.kappa.is_zero()) throw PreconditionError("kappa must be nonzero");
  SphericalResult res;
  if (p.kappa.is_rational()) {
    const Rational kv = p.kappa.rational_value();
    for (long b = 2; b <= p.n; ++b)
      for (long a = 1; a < b; ++a)
        if (kv == make_rational(a, b)) {
          res.spherical = false;
          res.first_family = {a, b};
          return res;
        }
  }
  const int l = p.l, n = p.n;
  for (int u = 0; u <= l - 1; ++u)
    for (int m = 1 - n; m <= n - 1; ++m)
      for (int k = 1; detail::within_bound(k, u, m, n, l); ++k) {
        if (k % l == 0) continue;
        int khat = u - (((u - k) % l) + l) % l;  // u+1-l <= khat <= u, khat = k mod l
        Scalar rhs = p.kappa * Scalar(static_cast<long>(l)) *
                     (p.s_at(u - k) - p.s_at(u) - Scalar(static_cast<long>(m)));
        if (rhs == Scalar(static_cast<long>(k - khat))) {
          res.spherical = false;
          res.second_family = AsphericalCertificate{u, k, m, khat};
          return res;
        }
      }
  return res;
}

// ---------------------------------------------------------------------------
// Faithfulness and integral difference

/// kappa not in 1/2 + Z and kappa (s_i - s_j) not in Z for i != j.
inline bool is_faithful(const ParamKS& p) {
  if ((p.kappa - Scalar(make_rational(1, 2))).is_integer()) return false;
  for (int i = 1; i <= p.l; ++i)
    for (int j = i + 1; j <= p.l; ++j)
      if ((p.kappa * (p.s_at(i) - p.s_at(j))).is_integer()) return false;
  return true;
}

/// h_{H,m} - h_{H,m'} - (m - m')/e_H not in Z for every class and m != m'.
inline bool is_faithful_h(const std::vector<std::vector<Scalar>>& classes) {
  for (const auto& h : classes) {
    const int e = static_cast<int>(h.size());
    for (int a = 0; a < e; ++a)
      for (int b = 0; b < e; ++b) {
        if (a == b) continue;
        Scalar d = h[static_cast<std::size_t>(a)] - h[static_cast<std::size_t>(b)] -
                   Scalar(make_rational(a - b, e));
        if (d.is_integer()) return false;
      }
  }
  return true;
}

inline bool is_faithful_h(const HParams& h) { return is_faithful_h(std::vector<std::vector<Scalar>>{h.pair, h.coord}); }

/// kappa' - kappa in Z and kappa' s'_i - kappa s_i in a + Z for a common a.
inline bool integral_difference(const ParamKS& p, const ParamKS& q) {
  if (p.symbolic() != q.symbolic()) throw PreconditionError("parameters use different kappa modes");
  if (p.l != q.l) throw PreconditionError("parameters have different levels");
  if (!(q.kappa - p.kappa).is_integer()) return false;
  const Scalar base = q.kappa * q.s_at(1) - p.kappa * p.s_at(1);
  for (int i = 2; i <= p.l; ++i)
    if (!(q.kappa * q.s_at(i) - p.kappa * p.s_at(i) - base).is_integer()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Equivalence classes and dominant reduction

struct ParamClasses {
  std::vector<std::vector<int>> classes;       // 1-indexed members, ascending
  std::vector<std::vector<long>> offsets;      // integer a relative to the first member
};

/// r ~ r' iff kappa (s~_r - s~_r' - a) in Z for some integer a.  Returns a if so.
inline std::optional<long> class_offset(const Scalar& kappa, const Scalar& a, const Scalar& b) {
  const Scalar x = kappa * (a - b);
  for (const auto& [j, c] : x.terms())
    if (j != 0 && j != 1) return std::nullopt;
  if (!Scalar(x.coeff(0)).is_integer()) return std::nullopt;
  const Scalar lin(x.coeff(1));
  if (!lin.is_integer()) return std::nullopt;
  return lin.rational_value().get_num().get_si();
}

inline ParamClasses param_classes(const Scalar& kappa, const std::vector<Scalar>& stilde) {
  if (kappa.kappa_free()) throw PreconditionError("class reduction needs symbolic kappa");
  ParamClasses out;
  std::vector<bool> done(stilde.size(), false);
  for (std::size_t r = 0; r < stilde.size(); ++r) {
    if (done[r]) continue;
    std::vector<int> cls{static_cast<int>(r) + 1};
    std::vector<long> off{0};
    done[r] = true;
    for (std::size_t q = r + 1; q < stilde.size(); ++q) {
      if (done[q]) continue;
      if (auto a = class_offset(kappa, stilde[q], stilde[r])) {
        cls.push_back(static_cast<int>(q) + 1);
        off.push_back(*a);
        done[q] = true;
      }
    }
    out.classes.push_back(std::move(cls));
    out.offsets.push_back(std::move(off));
  }
  return out;
}

/// s~_r = s_r + kappa^{-1} m_r.
inline std::vector<Scalar> stilde_of(const std::vector<Scalar>& s, const std::vector<Rational>& m) {
  std::vector<Scalar> out;
  for (std::size_t r = 0; r < s.size(); ++r)
    out.push_back(s[r] + Scalar::kappa_power(-1, Cyclotomic(m[r])));
  return out;
}

/// Dominant means m_0 >= m_1 >= ... >= m_{l-1} with m_0 = m_l.
template <class T>
bool is_dominant(const std::vector<T>& m) {
  const std::size_t l = m.size();
  if (l <= 1) return true;
  if (m[l - 1] < m[0]) return false;
  for (std::size_t i = 0; i + 2 < l; ++i)
    if (m[i] < m[i + 1]) return false;
  return true;
}

/// Minimal-length w (0-indexed images) with w(m) dominant, where
/// w(m)_{w(i)} = m_i.  Equal entries keep their relative order.
template <class T>
std::pair<std::vector<int>, std::vector<T>> dominant_reduce(const std::vector<T>& m) {
  const int l = static_cast<int>(m.size());
  std::vector<int> order;  // positions from largest to smallest: l, 1, ..., l-1
  if (l > 0) order.push_back(l - 1);
  for (int i = 0; i + 1 < l; ++i) order.push_back(i);
  std::vector<int> src(static_cast<std::size_t>(l));
  std::iota(src.begin(), src.end(), 0);
  std::stable_sort(src.begin(), src.end(),
                   [&](int a, int b) { return m[static_cast<std::size_t>(b)] < m[static_cast<std::size_t>(a)]; });
  std::vector<int> w(static_cast<std::size_t>(l));
  std::vector<T> wm(static_cast<std::size_t>(l));
  std::size_t i = 0;
  while (i < src.size()) {
    std::size_t j = i;
    while (j < src.size() && m[static_cast<std::size_t>(src[j])] == m[static_cast<std::size_t>(src[i])]) ++j;
    std::vector<int> sources(src.begin() + static_cast<long>(i), src.begin() + static_cast<long>(j));
    std::vector<int> targets(order.begin() + static_cast<long>(i), order.begin() + static_cast<long>(j));
    std::sort(sources.begin(), sources.end());
    std::sort(targets.begin(), targets.end());
    for (std::size_t t = 0; t < sources.size(); ++t) {
      w[static_cast<std::size_t>(sources[t])] = targets[t];
      wm[static_cast<std::size_t>(targets[t])] = m[static_cast<std::size_t>(sources[t])];
    }
    i = j;
  }
  return {w, wm};
}

/// Number of inversions of a permutation given by images.
inline int permutation_length(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& w) {
  std::vector<int> inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
  return inv;
}

// ---------------------------------------------------------------------------
// Star and Hecke specialization

/// s* = (-s_{l-1}, ..., -s_1, -s_l).
template <class T>
std::vector<T> star_params(const std::vector<T>& s) {
  const std::size_t l = s.size();
  std::vector<T> out;
  for (std::size_t j = l - 1; j >= 1; --j) out.push_back(-s[j - 1]);
  if (l >= 1) out.push_back(-s[l - 1]);
  return out;
}

struct HeckeDescriptor {
  std::string q;
  std::vector<std::string> Q;
  bool degenerate = false;
  std::vector<Scalar> s_star;
};

/// q = exp(2 pi i kappa); Q_i = q^{s_i} unless q = 1, when Q_i = s_i.
inline HeckeDescriptor hecke_params(const ParamKS& p) {
  HeckeDescriptor d;
  d.degenerate = p.kappa.is_integer();
  d.q = d.degenerate ? "1" : "exp(2*pi*i*(" + p.kappa.to_string() + "))";
  for (int i = 1; i <= p.l; ++i) {
    const Scalar& si = p.s_at(i);
    d.Q.push_back(d.degenerate ? si.to_string()
                               : "exp(2*pi*i*(" + (p.kappa * si).to_string() + "))");
  }
  d.s_star = star_params(p.s);
  return d;
}

}  // namespace cherednik
