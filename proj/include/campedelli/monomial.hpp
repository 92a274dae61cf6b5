#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace campedelli {

inline constexpr int kMaxVariables = 16;

/// Exponent vector over at most kMaxVariables variables.  Unused trailing
/// slots stay zero, so comparisons never need the variable count.
class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, kMaxVariables>;

  Monomial() = default;
  explicit Monomial(const std::vector<int>& exponents) {
    if (exponents.size() > static_cast<std::size_t>(kMaxVariables)) throw std::invalid_argument("too many variables");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0 || exponents[i] > 0xFFFF) throw std::invalid_argument("exponent out of range");
      set(static_cast<int>(i), static_cast<std::uint16_t>(exponents[i]));
    }
  }

  static Monomial variable(int index, std::uint16_t power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  std::uint16_t operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, std::uint16_t value) {
    const std::size_t k = static_cast<std::size_t>(i);
    degree_ = degree_ - e_[k] + value;
    e_[k] = value;
    if (value != 0) {
      support_ |= 1U << i;
    } else {
      support_ &= ~(1U << i);
    }
  }

  const Exponents& exponents() const { return e_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  /// Degree restricted to the variables in `mask`.
  std::uint32_t degree_in(std::uint32_t mask) const {
    std::uint32_t d = 0;
    for (int i = 0; i < kMaxVariables; ++i) {
      if ((mask >> i) & 1U) d += e_[static_cast<std::size_t>(i)];
    }
    return d;
  }

  bool divides(const Monomial& o) const {
    if ((support_ & ~o.support_) != 0 || degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > o.e_[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      const std::uint32_t s = std::uint32_t{a.e_[i]} + b.e_[i];
      if (s > 0xFFFFU) throw std::overflow_error("monomial exponent overflow");
      r.e_[i] = static_cast<std::uint16_t>(s);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.support_ = a.support_ | b.support_;
    return r;
  }

  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
      if (r.e_[i] != 0) r.support_ |= 1U << i;
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.support_ = a.support_ | b.support_;
    for (auto x : r.e_) r.degree_ += x;
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.support_ = a.support_ & b.support_;
    for (auto x : r.e_) r.degree_ += x;
    return r;
  }

  /// Coprime leading monomials: Buchberger's first criterion.
  static bool coprime(const Monomial& a, const Monomial& b) { return (a.support_ & b.support_) == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : e_) h = (h ^ x) * 1099511628211ULL;
    return h;
  }

 private:
  Exponents e_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { lex, grevlex, deglex, block, weighted };

/// A monomial order.  `block` puts the variables of `mask` first (grevlex
/// inside each block), so that it eliminates them.  `weighted` compares by
/// successive integer weight vectors and breaks ties with grevlex.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder deglex() { return MonomialOrder(OrderKind::deglex); }
  static MonomialOrder block(std::uint32_t eliminated_mask) {
    MonomialOrder o(OrderKind::block);
    o.mask_ = eliminated_mask;
    return o;
  }
  static MonomialOrder weighted(std::vector<std::vector<std::int64_t>> rows) {
    MonomialOrder o(OrderKind::weighted);
    o.rows_ = std::move(rows);
    return o;
  }

  OrderKind kind() const { return kind_; }
  std::uint32_t mask() const { return mask_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  /// True when the order refines total degree.
  bool is_graded() const { return kind_ == OrderKind::grevlex || kind_ == OrderKind::deglex; }

  /// -1, 0, 1 as a is smaller than, equal to, greater than b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::lex:
        return compare_lex(a, b);
      case OrderKind::grevlex:
        return compare_grevlex(a, b);
      case OrderKind::deglex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return compare_lex(a, b);
      case OrderKind::block:
        return compare_block(a, b);
      case OrderKind::weighted:
        return compare_weighted(a, b);
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string to_string() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.mask_ == b.mask_ && a.rows_ == b.rows_;
  }

  static int compare_lex(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVariables; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static int compare_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = kMaxVariables - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }

 private:
  explicit MonomialOrder(OrderKind k) : kind_(k) {}

  static int compare_grevlex_masked(const Monomial& a, const Monomial& b, std::uint32_t mask) {
    const std::uint32_t da = a.degree_in(mask);
    const std::uint32_t db = b.degree_in(mask);
    if (da != db) return da < db ? -1 : 1;
    for (int i = kMaxVariables - 1; i >= 0; --i) {
      if (((mask >> i) & 1U) == 0) continue;
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }

  int compare_block(const Monomial& a, const Monomial& b) const {
    if (int c = compare_grevlex_masked(a, b, mask_); c != 0) return c;
    return compare_grevlex_masked(a, b, ~mask_);
  }

  int compare_weighted(const Monomial& a, const Monomial& b) const {
    for (const auto& row : rows_) {
      std::int64_t wa = 0;
      std::int64_t wb = 0;
      for (std::size_t i = 0; i < row.size(); ++i) {
        wa += row[i] * a[static_cast<int>(i)];
        wb += row[i] * b[static_cast<int>(i)];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
    }
    return compare_grevlex(a, b);
  }

  OrderKind kind_ = OrderKind::grevlex;
  std::uint32_t mask_ = 0;
  std::vector<std::vector<std::int64_t>> rows_;
};

}  // namespace campedelli
