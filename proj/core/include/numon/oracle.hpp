#pragma once

#include <vector>

#include "numon/factorization.hpp"

namespace numon {
// Literal transcriptions of the definitions, used by tests and verify_trace
// to guard the optimized paths. Deliberately unoptimized and capped:
// element values <= 100000, factorization sets <= 5000, else CapExceeded.
namespace oracle {

/// Plain bounded recursion over coefficient ranges 0..n/n_i, no pruning.
/// Sorted lexicographically.
std::vector<FactorizationVector> oracle_factorizations(
    const std::vector<Value>& generators, Value n);

/// For N = 0, 1, 2, ...: first N whose distance-<=N graph on Z_S(n) is
/// connected. Raises NotAnElement.
Value oracle_catenary(const NumericalMonoid& S, Value n);

/// Elements up to scan_end whose nabla graph is disconnected, by
/// breadth-first search over factorization vertices.
std::vector<Value> oracle_betti(const NumericalMonoid& S, Value scan_end);

}  // namespace oracle
}  // namespace numon
