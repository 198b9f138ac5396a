#include "numon/factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace numon {

Value length(const FactorizationVector& a) {
  Value sum = 0;
  for (Value v : a) sum += v;
  return sum;
}

FactorizationVector gcd_vec(const FactorizationVector& a,
                            const FactorizationVector& b) {
  if (a.size() != b.size())
    raise(ErrorCode::DimensionMismatch,
          "vectors have " + std::to_string(a.size()) + " and " +
              std::to_string(b.size()) + " coordinates");
  FactorizationVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Value distance(const FactorizationVector& a, const FactorizationVector& b) {
  if (a.size() != b.size())
    raise(ErrorCode::DimensionMismatch,
          "vectors have " + std::to_string(a.size()) + " and " +
              std::to_string(b.size()) + " coordinates");
  Value left = 0, right = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Value g = std::min(a[i], b[i]);
    left += a[i] - g;
    right += b[i] - g;
  }
  return std::max(left, right);
}

namespace {

// Closes `row` under "+ g" within [0, max_value]. Generators below the word
// width carry bits within a word, so those take a scalar ascending scan;
// larger generators combine whole words already finished by this pass,
// which keeps chains of repeated additions intact.
void close_under(detail::BitRow& row, Value g, Value max_value) {
  if (g > max_value) return;
  auto& words = row.words;
  if (g < 64) {
    for (Value v = g; v <= max_value; ++v) {
      if (row.test(v - g))
        words[static_cast<std::size_t>(v) >> 6] |=
            std::uint64_t{1} << (static_cast<unsigned>(v) & 63u);
    }
    return;
  }
  const std::size_t wshift = static_cast<std::size_t>(g) >> 6;
  const unsigned bshift = static_cast<unsigned>(g & 63);
  for (std::size_t w = wshift; w < words.size(); ++w) {
    const std::uint64_t lo = words[w - wshift] << bshift;
    const std::uint64_t hi =
        (bshift != 0 && w > wshift) ? words[w - wshift - 1] >> (64 - bshift)
                                    : 0;
    words[w] |= lo | hi;
  }
}

}  // namespace

FactorizationEnumerator::FactorizationEnumerator(NumericalMonoid monoid,
                                                 Value max_value)
    : monoid_(std::move(monoid)), max_value_(std::max<Value>(max_value, 0)) {
  const auto& gens = monoid_.generators();
  prefix_ok_.reserve(gens.size());
  detail::BitRow reach;
  reach.words.assign(static_cast<std::size_t>(max_value_ >> 6) + 1, 0);
  reach.words[0] = 1;  // the empty sum
  for (Value g : gens) {
    close_under(reach, g, max_value_);
    prefix_ok_.push_back(reach);
  }
}

namespace {

struct EnumFrame {
  const std::vector<Value>& gens;
  const std::vector<detail::BitRow>& prefix_ok;
  const std::function<bool(const FactorizationVector&)>& fn;
  FactorizationVector coeff;

  // Assigns coefficients for generators [0, i]; rest is known to be
  // representable by that prefix, so every branch taken reaches a leaf.
  bool descend(std::size_t i, Value rest) {
    if (i == 0) {
      coeff[0] = rest / gens[0];
      const bool keep = fn(coeff);
      coeff[0] = 0;
      return keep;
    }
    const auto& below = prefix_ok[i - 1];
    for (Value used = 0, count = 0; used <= rest;
         used += gens[i], ++count) {
      const Value rem = rest - used;
      if (below.test(rem)) {
        coeff[i] = count;
        if (!descend(i - 1, rem)) {
          coeff[i] = 0;
          return false;
        }
      }
    }
    coeff[i] = 0;
    return true;
  }
};

}  // namespace

bool FactorizationEnumerator::visit(
    Value n, const std::function<bool(const FactorizationVector&)>& fn) const {
  if (n < 0) return true;
  if (n > max_value_)
    throw std::logic_error("FactorizationEnumerator: value beyond max_value");
  const auto& gens = monoid_.generators();
  if (!prefix_ok_.back().test(n)) return true;
  EnumFrame frame{gens, prefix_ok_, fn, FactorizationVector(gens.size(), 0)};
  return frame.descend(gens.size() - 1, n);
}

std::vector<FactorizationVector> FactorizationEnumerator::collect(
    Value n) const {
  std::vector<FactorizationVector> out;
  visit(n, [&](const FactorizationVector& a) {
    out.push_back(a);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t FactorizationEnumerator::count(Value n, std::size_t cap) const {
  std::size_t seen = 0;
  visit(n, [&](const FactorizationVector&) {
    ++seen;
    return seen < cap;
  });
  return seen;
}

std::vector<FactorizationVector> factorizations(const NumericalMonoid& S,
                                                Value n) {
  if (n < 0) return {};
  return FactorizationEnumerator(S, n).collect(n);
}

}  // namespace numon
