#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/scalar.hpp"

namespace cherednik {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw std::invalid_argument("not a partition");
      size_ += parts_[i];
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// 1-indexed row length, 0 past the end.
  int row(int a) const { return a >= 1 && a <= length() ? parts_[static_cast<std::size_t>(a - 1)] : 0; }

  Partition transpose() const {
    std::vector<int> t;
    for (int b = 1; b <= row(1); ++b) {
      int h = 0;
      while (row(h + 1) >= b) ++h;
      t.push_back(h);
    }
    return Partition(std::move(t));
  }

  /// n(p) = sum (i-1) p_i.
  int n_statistic() const {
    int r = 0;
    for (int i = 0; i < length(); ++i) r += i * parts_[static_cast<std::size_t>(i)];
    return r;
  }

  /// Content-free column heights, i.e. the transpose as a vector padded to width.
  std::vector<int> columns(int width) const {
    std::vector<int> c(static_cast<std::size_t>(std::max(width, row(1))), 0);
    for (int a = 1; a <= length(); ++a)
      for (int b = 1; b <= row(a); ++b) ++c[static_cast<std::size_t>(b - 1)];
    return c;
  }

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Box (a, b, m): row a, column b, component m, all 1-indexed.
struct Box {
  int a = 1;
  int b = 1;
  int m = 1;
  auto operator<=>(const Box&) const = default;
  std::string to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(m) + ")";
  }
};

/// l-tuple of partitions.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
    for (const auto& p : comps_) size_ += p.size();
  }
  static Multipartition empty(int l) {
    return Multipartition(std::vector<Partition>(static_cast<std::size_t>(l)));
  }

  int level() const { return static_cast<int>(comps_.size()); }
  int size() const { return size_; }
  const std::vector<Partition>& components() const { return comps_; }
  /// 1-indexed component.
  const Partition& operator[](int m) const { return comps_.at(static_cast<std::size_t>(m - 1)); }

  bool contains(const Box& x) const {
    return x.m >= 1 && x.m <= level() && x.a >= 1 && x.b >= 1 && x.b <= (*this)[x.m].row(x.a);
  }

  std::vector<Box> boxes() const {
    std::vector<Box> out;
    for (int m = 1; m <= level(); ++m)
      for (int a = 1; a <= (*this)[m].length(); ++a)
        for (int b = 1; b <= (*this)[m].row(a); ++b) out.push_back({a, b, m});
    return out;
  }

  /// Copy with the given box removed (must be removable) or added (addable).
  Multipartition without(const Box& x) const { return edited(x, -1); }
  Multipartition with(const Box& x) const { return edited(x, +1); }

  auto operator<=>(const Multipartition& o) const { return comps_ <=> o.comps_; }
  bool operator==(const Multipartition& o) const { return comps_ == o.comps_; }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t m = 0; m < comps_.size(); ++m) {
      if (m) os << ',';
      os << '[';
      const auto& p = comps_[m].parts();
      for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
      os << ']';
    }
    os << ']';
    return os.str();
  }

  /// Parses `[[3,1],[4,2]]`.
  static Multipartition parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw std::invalid_argument("bad multipartition '" + s + "'");
    std::vector<Partition> comps;
    std::size_t i = 1;
    while (i + 1 < s.size()) {
      if (s[i] == ',') {
        ++i;
        continue;
      }
      if (s[i] != '[') throw std::invalid_argument("bad multipartition '" + s + "'");
      std::size_t j = s.find(']', i);
      if (j == std::string::npos) throw std::invalid_argument("bad multipartition '" + s + "'");
      std::vector<int> parts;
      std::string body = s.substr(i + 1, j - i - 1);
      std::size_t p = 0;
      while (p < body.size()) {
        std::size_t q = body.find(',', p);
        if (q == std::string::npos) q = body.size();
        parts.push_back(std::stoi(body.substr(p, q - p)));
        p = q + 1;
      }
      comps.emplace_back(std::move(parts));
      i = j + 1;
    }
    if (comps.empty()) throw std::invalid_argument("multipartition needs a component");
    return Multipartition(std::move(comps));
  }

 private:
  Multipartition edited(const Box& x, int delta) const {
    std::vector<Partition> comps = comps_;
    auto parts = comps.at(static_cast<std::size_t>(x.m - 1)).parts();
    if (static_cast<int>(parts.size()) < x.a) parts.resize(static_cast<std::size_t>(x.a), 0);
    int& row = parts[static_cast<std::size_t>(x.a - 1)];
    if ((delta < 0 && row != x.b) || (delta > 0 && row != x.b - 1))
      throw std::invalid_argument("box " + x.to_string() + " is not removable/addable");
    row += delta;
    comps[static_cast<std::size_t>(x.m - 1)] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
  }

  std::vector<Partition> comps_;
  int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Multipartition& l) {
  return os << l.to_string();
}

// ---------------------------------------------------------------------------
// Residues and hooks

/// res^s(a,b,m) = s_m + b - a.
inline int residue(const Box& x, const std::vector<int>& s) {
  if (x.m < 1 || x.m > static_cast<int>(s.size()))
    throw std::invalid_argument("box component outside the charge");
  return s[static_cast<std::size_t>(x.m - 1)] + x.b - x.a;
}

inline Scalar residue(const Box& x, const std::vector<Scalar>& s) {
  if (x.m < 1 || x.m > static_cast<int>(s.size()))
    throw std::invalid_argument("box component outside the charge");
  return s[static_cast<std::size_t>(x.m - 1)] + Scalar(static_cast<long>(x.b - x.a));
}

/// Sorted residue multiset of all boxes of lambda.
inline std::vector<int> residue_multiset(const Multipartition& lam, const std::vector<int>& s) {
  if (lam.level() != static_cast<int>(s.size()))
    throw std::invalid_argument("level mismatch between multipartition and charge");
  std::vector<int> r;
  for (const auto& x : lam.boxes()) r.push_back(residue(x, s));
  std::sort(r.begin(), r.end());
  return r;
}

/// Hook lengths, one per box, in row-major order.
inline std::vector<int> hooks(const Partition& p) {
  std::vector<int> h;
  const Partition t = p.transpose();
  for (int a = 1; a <= p.length(); ++a)
    for (int b = 1; b <= p.row(a); ++b) h.push_back(p.row(a) - b + t.row(b) - a + 1);
  return h;
}

// ---------------------------------------------------------------------------
// Involutions

/// lambda* = ((l^{(l-1)})^t, ..., (l^{(1)})^t, (l^{(l)})^t).
inline Multipartition star(const Multipartition& lam) {
  const int l = lam.level();
  std::vector<Partition> out;
  for (int j = l - 1; j >= 1; --j) out.push_back(lam[j].transpose());
  if (l >= 1) out.push_back(lam[l].transpose());
  return Multipartition(std::move(out));
}

/// Permute components: (w.lambda)^{(i)} = lambda^{(w^{-1}(i))}, w given 0-indexed
/// as images w[i] of position i.
inline Multipartition permute_components(const Multipartition& lam, const std::vector<int>& w) {
  std::vector<Partition> out(static_cast<std::size_t>(lam.level()));
  for (std::size_t i = 0; i < w.size(); ++i)
    out[static_cast<std::size_t>(w[i])] = lam.components()[i];
  return Multipartition(std::move(out));
}

// ---------------------------------------------------------------------------
// Orders

enum class Dominance { Equal, Less, Greater, Incomparable };

inline std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Equal: return "equal";
    case Dominance::Less: return "less-eq";
    case Dominance::Greater: return "greater-eq";
    default: return "incomparable";
  }
}

/// Compares partial sums sum_{i<r}|l^{(i)}| + sum_{j<=t} l^{(r)}_j.
inline Dominance dominance(const Multipartition& lam, const Multipartition& mu) {
  if (lam.level() != mu.level() || lam.size() != mu.size())
    throw std::invalid_argument("dominance needs equal size and level");
  if (lam == mu) return Dominance::Equal;
  const int n = lam.size();
  bool ge = true, le = true;
  int base_l = 0, base_m = 0;
  for (int r = 1; r <= lam.level(); ++r) {
    int sl = base_l, sm = base_m;
    for (int t = 1; t <= n; ++t) {
      sl += lam[r].row(t);
      sm += mu[r].row(t);
      if (sl < sm) ge = false;
      if (sl > sm) le = false;
    }
    base_l = sl;
    base_m = sm;
  }
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

/// lambda strictly dominates mu.
inline bool strictly_dominates(const Multipartition& lam, const Multipartition& mu) {
  return dominance(lam, mu) == Dominance::Greater;
}

/// Column representation: each component's column heights padded to width n.
inline std::vector<int> column_key(const Multipartition& lam) {
  std::vector<int> key;
  const int n = lam.size();
  for (const auto& p : lam.components()) {
    auto c = p.columns(n);
    key.insert(key.end(), c.begin(), c.end());
  }
  return key;
}

/// Lexicographic order on column representations (same size and level).
inline std::strong_ordering lex_compare(const Multipartition& lam, const Multipartition& mu) {
  if (lam.level() != mu.level() || lam.size() != mu.size())
    throw std::invalid_argument("lex_compare needs equal size and level");
  return column_key(lam) <=> column_key(mu);
}

/// Removes the rightmost removable box in the column representation.
inline Multipartition t_of(const Multipartition& lam) {
  if (lam.size() == 0) throw std::invalid_argument("t_of needs a nonempty multipartition");
  for (int m = lam.level(); m >= 1; --m) {
    const Partition& p = lam[m];
    if (p.empty()) continue;
    const int b = p.row(1);
    const int a = p.transpose().row(b);
    return lam.without({a, b, m});
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Addable and removable boxes

enum class BoxKind { Addable, Removable };

struct MarkedBox {
  Box box;
  BoxKind kind;
  bool operator==(const MarkedBox&) const = default;
};

/// "Above" order: earlier component first, then smaller row.
inline bool above(const Box& x, const Box& y) {
  return x.m != y.m ? x.m < y.m : x.a < y.a;
}

/// Addable and removable boxes sorted top to bottom, optionally filtered by residue.
inline std::vector<MarkedBox> addable_removable(const Multipartition& lam, const std::vector<int>& s,
                                                std::optional<int> i = std::nullopt) {
  if (lam.level() != static_cast<int>(s.size()))
    throw std::invalid_argument("level mismatch between multipartition and charge");
  std::vector<MarkedBox> out;
  for (int m = 1; m <= lam.level(); ++m) {
    const Partition& p = lam[m];
    for (int a = 1; a <= p.length() + 1; ++a) {
      const int r = p.row(a);
      if (a == 1 || p.row(a - 1) > r) {
        Box x{a, r + 1, m};
        if (!i || residue(x, s) == *i) out.push_back({x, BoxKind::Addable});
      }
      if (r > 0 && p.row(a + 1) < r) {
        Box x{a, r, m};
        if (!i || residue(x, s) == *i) out.push_back({x, BoxKind::Removable});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MarkedBox& x, const MarkedBox& y) { return above(x.box, y.box); });
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Number of l-multipartitions of n.
inline long long count_multipartitions(int n, int l) {
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = k; j <= n; ++j) p[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(j - k)];
  std::vector<long long> r(static_cast<std::size_t>(n) + 1, 0);
  r[0] = 1;
  for (int c = 0; c < l; ++c) {
    std::vector<long long> nr(static_cast<std::size_t>(n) + 1, 0);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b)
        nr[static_cast<std::size_t>(a + b)] += r[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)];
    r = nr;
  }
  return r[static_cast<std::size_t>(n)];
}

inline constexpr long long kDefaultEnumerationCap = 200000;

/// P_l(n) in ascending column-lexicographic order.
inline std::vector<Multipartition> enumerate_multipartitions(int n, int l,
                                                             long long cap = kDefaultEnumerationCap) {
  if (n < 0 || l < 1) throw std::invalid_argument("enumerate needs n >= 0 and l >= 1");
  if (count_multipartitions(n, l) > cap)
    throw ResourceCapError("|P_" + std::to_string(l) + "(" + std::to_string(n) + ")| exceeds cap " +
                           std::to_string(cap));
  std::vector<std::vector<Partition>> by_size;
  for (int k = 0; k <= n; ++k) by_size.push_back(partitions_of(k));
  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int comp, int left) {
    if (comp == l - 1) {
      for (const auto& p : by_size[static_cast<std::size_t>(left)]) {
        cur.push_back(p);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int k = 0; k <= left; ++k)
      for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
        cur.push_back(p);
        rec(comp + 1, left - k);
        cur.pop_back();
      }
  };
  rec(0, n);
  std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(column_key(out[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Multipartition> sorted;
  sorted.reserve(out.size());
  for (const auto& [k, i] : keyed) sorted.push_back(out[i]);
  return sorted;
}

/// Index of each multipartition in a fixed list.
inline std::map<Multipartition, std::size_t> index_of(const std::vector<Multipartition>& basis) {
  std::map<Multipartition, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

}  // namespace cherednik
