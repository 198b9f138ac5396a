#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "numon/monoid.hpp"

namespace numon {

namespace detail {
/// One reachability bitset over [0, bound]; bit v = "v is a sum of the
/// generator prefix". Packed so closure under "+= generator" can run
/// word-parallel for generators >= 64.
struct BitRow {
  std::vector<std::uint64_t> words;

  bool test(Value v) const noexcept {
    return (words[static_cast<std::size_t>(v) >> 6] >>
            (static_cast<unsigned>(v) & 63u)) &
           1u;
  }
};
}  // namespace detail

/// Exponent vector (a_1, ..., a_k) over the generators of a monoid.
/// Vectors compare lexicographically (std::vector ordering).
using FactorizationVector = std::vector<Value>;

/// |a| = a_1 + ... + a_k.
Value length(const FactorizationVector& a);

/// Coordinate-wise minimum. Raises DimensionMismatch.
FactorizationVector gcd_vec(const FactorizationVector& a,
                            const FactorizationVector& b);

/// d(a, a') = max(|a - gcd|, |a' - gcd|). Symmetric, 0 iff equal.
/// Raises DimensionMismatch.
Value distance(const FactorizationVector& a, const FactorizationVector& b);

/// Streams the factorizations of elements up to a fixed bound.
///
/// Construction precomputes, for every generator prefix <n_1, ..., n_i>, a
/// reachability table over [0, max_value]. The recursion assigns
/// coefficients from the largest generator down and consults the table of
/// the remaining prefix, so a branch is entered only when it leads to at
/// least one factorization. Instances are immutable; visit/collect are safe
/// to call concurrently.
class FactorizationEnumerator {
 public:
  FactorizationEnumerator(NumericalMonoid monoid, Value max_value);

  const NumericalMonoid& monoid() const noexcept { return monoid_; }
  Value max_value() const noexcept { return max_value_; }

  /// Calls `fn` once per factorization of n, in the recursion's own
  /// deterministic order. `fn` returns false to stop early; the return
  /// value is false iff enumeration was stopped.
  bool visit(Value n,
             const std::function<bool(const FactorizationVector&)>& fn) const;

  /// All factorizations of n, sorted lexicographically. Empty when n is
  /// not an element.
  std::vector<FactorizationVector> collect(Value n) const;

  /// |Z(n)|, but stops counting at `cap` (returns cap when there are cap
  /// or more factorizations).
  std::size_t count(Value n, std::size_t cap) const;

 private:
  NumericalMonoid monoid_;
  Value max_value_;
  std::vector<detail::BitRow> prefix_ok_;  // [i]: v in <n_1..n_{i+1}>
};

/// Z_S(n), sorted lexicographically; empty exactly when n is not in S.
std::vector<FactorizationVector> factorizations(const NumericalMonoid& S,
                                                Value n);

}  // namespace numon
