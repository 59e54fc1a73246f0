#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cherednik/laurent.hpp"
#include "cherednik/params.hpp"
#include "cherednik/partition.hpp"

namespace cherednik {

/// Sum of res^s over all boxes, s arbitrary Scalars.
inline Scalar residue_sum(const Multipartition& lam, const std::vector<Scalar>& s) {
  Scalar r;
  for (int m = 1; m <= lam.level(); ++m) {
    const Partition& p = lam[m];
    long contents = 0;
    for (int a = 1; a <= p.length(); ++a)
      for (int b = 1; b <= p.row(a); ++b) contents += b - a;
    r += s[static_cast<std::size_t>(m - 1)] * Scalar(static_cast<long>(p.size())) + Scalar(contents);
  }
  return r;
}

namespace detail {
inline void check_level(const Multipartition& lam, const ParamKS& p) {
  if (lam.level() != p.l) throw std::invalid_argument("level mismatch between multipartition and parameter");
}
inline Scalar charge_sum(const ParamKS& p) {
  Scalar t;
  for (const auto& x : p.s) t += x;
  return t;
}
}  // namespace detail

/// c_lambda = -sum_{r<l} r|l^{(r)}| + kappa l sum res - kappa n sbar + n - n l / 2.
inline Scalar c_function(const Multipartition& lam, const ParamKS& p) {
  detail::check_level(lam, p);
  const long n = lam.size(), l = p.l;
  long w = 0;
  for (int r = 1; r < lam.level(); ++r) w += static_cast<long>(r) * lam[r].size();
  return Scalar(-w) + p.kappa * Scalar(l) * residue_sum(lam, p.s) -
         p.kappa * Scalar(n) * detail::charge_sum(p) + Scalar(make_rational(2 * n - n * l, 2));
}

/// w(tau) = sum_{r<l} r |tau^{(r)}|.
inline int w_statistic(const Multipartition& tau) {
  int w = 0;
  for (int r = 1; r < tau.level(); ++r) w += r * tau[r].size();
  return w;
}

/// fd(tau*) = w(tau) + l sum_r n(tau^{(r)}).
inline int fd(const Multipartition& tau) {
  int t = 0;
  for (const auto& p : tau.components()) t += p.n_statistic();
  return w_statistic(tau) + tau.level() * t;
}

/// f_{tau*}(q) = (q^l)_n q^{w(tau)} prod_r q^{n(tau^{(r)}) l} / H_{tau^{(r)}}(q^l).
inline QPoly fake_degree(const Multipartition& tau) {
  const int l = tau.level(), n = tau.size();
  std::vector<int> top, bottom;
  for (int i = 1; i <= n; ++i) top.push_back(i * l);
  for (const auto& p : tau.components())
    for (int h : hooks(p)) bottom.push_back(h * l);
  QPoly f = divide_exact(one_minus_q_product(top), one_minus_q_product(bottom));
  return f.shifted(fd(tau));
}

/// c-hat from its closed form, cross-checked against c + fd(lambda*).
inline Scalar c_hat(const Multipartition& lam, const ParamKS& p) {
  detail::check_level(lam, p);
  const long n = lam.size(), l = p.l;
  long nsum = 0;
  for (const auto& q : lam.components()) nsum += q.n_statistic();
  Scalar closed = Scalar(l) * p.kappa * residue_sum(lam, p.s) + Scalar(l * nsum) -
                  p.kappa * Scalar(n) * detail::charge_sum(p) + Scalar(make_rational(2 * n - n * l, 2));
  Scalar defined = c_function(lam, p) + Scalar(static_cast<long>(fd(lam)));
  if (!(closed == defined))
    throw InternalError("c-hat closed form " + closed.to_string() + " != c + fd = " + defined.to_string());
  return closed;
}

/// Sum of terms q^gamma num(q) / prod_{d in den} (1 - q^d).
struct GradedCharacter {
  struct Term {
    Scalar gamma;
    QPoly num;
    std::vector<int> den;  // sorted
  };
  std::vector<Term> terms;

  void add(Scalar gamma, QPoly num, std::vector<int> den) {
    if (num.is_zero()) return;
    std::sort(den.begin(), den.end());
    for (auto& t : terms)
      if (t.gamma == gamma && t.den == den) {
        t.num += num;
        terms.erase(std::remove_if(terms.begin(), terms.end(), [](const Term& x) { return x.num.is_zero(); }),
                    terms.end());
        return;
      }
    terms.push_back({std::move(gamma), std::move(num), std::move(den)});
  }
};

/// q^{c-hat} / prod_A (1 - q^{h(A) l}).
inline GradedCharacter chhat_delta(const Multipartition& lam, const ParamKS& p) {
  std::vector<int> den;
  for (const auto& q : lam.components())
    for (int h : hooks(q)) den.push_back(h * p.l);
  GradedCharacter g;
  g.add(c_hat(lam, p), QPoly(1L), den);
  return g;
}

/// q^{c-hat} q^{-fd} f_{lambda*}(q) / prod_{i=1}^n (1 - q^{i l}).
inline GradedCharacter chsph_delta(const Multipartition& lam, const ParamKS& p) {
  std::vector<int> den;
  for (int i = 1; i <= lam.size(); ++i) den.push_back(i * p.l);
  GradedCharacter g;
  g.add(c_hat(lam, p), fake_degree(lam).shifted(-fd(lam)), den);
  return g;
}

/// Equality as sums of q^gamma times rational functions of q.
inline bool equivalent(const GradedCharacter& a, const GradedCharacter& b) {
  struct Coset {
    Scalar base;
    QPoly num_a, den_a = QPoly(1L), num_b, den_b = QPoly(1L);
  };
  std::vector<Coset> cosets;
  auto place = [&](const GradedCharacter::Term& t, bool side_a) {
    for (auto& c : cosets) {
      Scalar d = t.gamma - c.base;
      if (!d.is_integer()) continue;
      const int shift = static_cast<int>(d.rational_value().get_num().get_si());
      QPoly& num = side_a ? c.num_a : c.num_b;
      QPoly& den = side_a ? c.den_a : c.den_b;
      QPoly tden = one_minus_q_product(t.den);
      num = num * tden + t.num.shifted(shift) * den;
      den = den * tden;
      return;
    }
    Coset c{t.gamma, {}, QPoly(1L), {}, QPoly(1L)};
    cosets.push_back(c);
    auto& back = cosets.back();
    (side_a ? back.num_a : back.num_b) = t.num;
    (side_a ? back.den_a : back.den_b) = one_minus_q_product(t.den);
  };
  for (const auto& t : a.terms) place(t, true);
  for (const auto& t : b.terms) place(t, false);
  for (const auto& c : cosets)
    if (!(c.num_a * c.den_b == c.num_b * c.den_a)) return false;
  return true;
}

}  // namespace cherednik
