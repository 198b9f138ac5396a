#pragma once

#include <memory>
#include <vector>

#include "numon/checked.hpp"

namespace numon {

/// A numerical monoid S = <n_1, ..., n_k>: an additive submonoid of the
/// non-negative integers with finite complement, held by its unique minimal
/// generating set (sorted ascending). Instances are immutable after
/// construction and cheap to copy; all queries are safe to run concurrently.
class NumericalMonoid {
 public:
  /// Builds the monoid generated by `raw_generators`, reducing the input to
  /// the minimal generating set. Raises EmptyInput, InvalidGenerator (entry
  /// < 1) or NotCofinite (gcd != 1).
  static NumericalMonoid from_generators(std::vector<Value> raw_generators);

  const std::vector<Value>& generators() const noexcept;
  std::size_t generator_count() const noexcept;
  Value smallest_generator() const noexcept;
  Value largest_generator() const noexcept;

  /// Largest integer not in the monoid; -1 for <1> = N.
  Value frobenius() const noexcept;

  /// True iff n is a non-negative integer combination of the generators.
  /// O(1): dense table lookup at desk scale, Apery comparison otherwise.
  bool contains(Value n) const noexcept;

  /// The m smallest monoid elements, one per residue class mod m, sorted
  /// ascending. Raises NotAnElement when m <= 0 or m is not in the monoid.
  std::vector<Value> apery_set(Value m) const;

  /// Apery set of the smallest generator, indexed by residue class.
  const std::vector<Value>& apery_by_residue() const noexcept;

  /// True while the dense membership table is resident (desk-scale monoids).
  bool has_membership_table() const noexcept;

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) {
    return a.generators() == b.generators();
  }

 private:
  struct Data;
  explicit NumericalMonoid(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// Factory matching the library-wide naming for monoid construction.
inline NumericalMonoid new_monoid(std::vector<Value> raw_generators) {
  return NumericalMonoid::from_generators(std::move(raw_generators));
}

/// True iff n is representable as a non-negative combination of `gens`
/// (no cofiniteness assumption; bounded coin-problem table up to n).
bool representable(const std::vector<Value>& gens, Value n);

}  // namespace numon
