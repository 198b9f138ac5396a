#pragma once

#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "numon/errors.hpp"
#include "numon/monoid.hpp"

namespace testsupport {

// Deterministic corpus of small monoids: embedding dimension up to 4,
// generators up to `max_gen`, pairwise distinct minimal generating sets.
inline std::vector<numon::NumericalMonoid>
random_corpus(std::size_t count, std::uint64_t seed, numon::Value max_gen = 30) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_k(2, 4);
  std::uniform_int_distribution<numon::Value> pick_gen(2, max_gen);

  std::set<std::vector<numon::Value>> seen;
  std::vector<numon::NumericalMonoid> out;
  while (out.size() < count) {
    const int k = pick_k(rng);
    std::vector<numon::Value> gens(static_cast<std::size_t>(k));
    for (auto& g : gens) g = pick_gen(rng);

    numon::Value d = 0;
    for (numon::Value g : gens) d = std::gcd(d, g);
    if (d != 1) continue;

    auto monoid = numon::new_monoid(gens);
    if (seen.insert(monoid.generators()).second) out.push_back(monoid);
  }
  return out;
}

template <typename Fn>
bool raises(Fn&& fn, numon::ErrorCode code, std::string* message = nullptr) {
  try {
    fn();
  } catch (const numon::Error& e) {
    if (message) *message = e.what();
    return e.code() == code;
  }
  return false;
}

}  // namespace testsupport
