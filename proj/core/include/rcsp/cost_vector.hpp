#pragma once

#include <boost/container/small_vector.hpp>

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>

namespace rcsp {

// Signed exact cost component. Wide enough that any simple-path sum plus any
// finite lower bound stays clear of the sentinels.
using Cost = std::int64_t;

// +inf sentinel: strictly greater than any achievable path cost. Kept well
// below the integer maximum so saturating sums cannot wrap.
inline constexpr Cost kInfCost = std::numeric_limits<Cost>::max() / 4;
// -inf marker, used by the lower-bound phase for unbounded values.
inline constexpr Cost kNegInfCost = -kInfCost;

constexpr bool is_finite(Cost c) { return c > kNegInfCost && c < kInfCost; }

// Addition that absorbs into the sentinels instead of overflowing. Both
// operands are below kInfCost in magnitude, so the raw sum cannot wrap; it
// is clamped back into the sentinel range.
constexpr Cost saturating_add(Cost a, Cost b) {
  if (a >= kInfCost || b >= kInfCost) return kInfCost;
  if (a <= kNegInfCost || b <= kNegInfCost) return kNegInfCost;
  const Cost s = a + b;
  if (s >= kInfCost) return kInfCost;
  if (s <= kNegInfCost) return kNegInfCost;
  return s;
}

// a weakly dominates b: a <= b in every component.
inline bool weakly_dominates(std::span<const Cost> a, std::span<const Cost> b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Lexicographic a <= b. Total order; used to keep closed lists sorted.
inline bool lex_leq(std::span<const Cost> a, std::span<const Cost> b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return true;
}

namespace detail {
using CostBuf = boost::container::small_vector<Cost, 4>;

inline void print_tuple(std::ostream& os, std::span<const Cost> v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    if (v[i] >= kInfCost)
      os << "inf";
    else if (v[i] <= kNegInfCost)
      os << "-inf";
    else
      os << v[i];
  }
  os << ')';
}
}  // namespace detail

// Edge attribute / path cost vector: component 0 is the primary (minimized)
// cost, components 1..d are resource consumptions. Arity is a runtime value,
// fixed per problem and validated where vectors meet.
class CostVector {
 public:
  CostVector() = default;
  CostVector(std::initializer_list<Cost> init) : v_(init) { assert(!v_.empty()); }
  static CostVector zeros(int arity) {
    assert(arity >= 1);
    CostVector c;
    c.v_.assign(static_cast<std::size_t>(arity), 0);
    return c;
  }
  static CostVector from(std::span<const Cost> values) {
    CostVector c;
    c.v_.assign(values.begin(), values.end());
    return c;
  }

  int arity() const { return static_cast<int>(v_.size()); }
  Cost operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  Cost& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
  std::span<const Cost> values() const { return {v_.data(), v_.size()}; }

  CostVector& operator+=(const CostVector& o) {
    assert(arity() == o.arity());
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  friend CostVector operator+(CostVector a, const CostVector& b) { return a += b; }

  bool operator==(const CostVector&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const CostVector& c) {
    detail::print_tuple(os, c.values());
    return os;
  }

 private:
  detail::CostBuf v_;
};

// Cost vector with the primary component dropped. Sufficient for closed-list
// dominance because extraction order already sorts the primary component.
class TruncatedVector {
 public:
  TruncatedVector() = default;
  TruncatedVector(std::initializer_list<Cost> init) : v_(init) {}
  static TruncatedVector from(std::span<const Cost> values) {
    TruncatedVector t;
    t.v_.assign(values.begin(), values.end());
    return t;
  }

  int width() const { return static_cast<int>(v_.size()); }
  Cost operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  std::span<const Cost> values() const { return {v_.data(), v_.size()}; }

  bool operator==(const TruncatedVector&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const TruncatedVector& t) {
    detail::print_tuple(os, t.values());
    return os;
  }

 private:
  detail::CostBuf v_;
};

inline TruncatedVector truncate(const CostVector& c) {
  assert(c.arity() >= 2);
  return TruncatedVector::from(c.values().subspan(1));
}

inline bool weakly_dominates(const CostVector& a, const CostVector& b) {
  return weakly_dominates(a.values(), b.values());
}
inline bool weakly_dominates(const TruncatedVector& a, const TruncatedVector& b) {
  return weakly_dominates(a.values(), b.values());
}
inline bool lex_leq(const CostVector& a, const CostVector& b) {
  return lex_leq(a.values(), b.values());
}
inline bool lex_leq(const TruncatedVector& a, const TruncatedVector& b) {
  return lex_leq(a.values(), b.values());
}

}  // namespace rcsp
