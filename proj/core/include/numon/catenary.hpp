#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "numon/factorization.hpp"

namespace numon {

struct CatenaryOptions {
  /// Abort with ExplosionGuard when an element has more factorizations
  /// than this.
  std::size_t factorization_cap = 20000;
  /// Worker threads for windowed sweeps; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// The graph on Z_S(n) whose edges join factorizations with gcd != 0,
/// split into connected components.
struct NablaGraph {
  Value element = 0;
  std::vector<FactorizationVector> vertices;  // lexicographic
  /// Vertex indices per component; indices ascend within a component and
  /// components are ordered by their smallest vertex.
  std::vector<std::vector<std::size_t>> components;

  bool disconnected() const noexcept { return components.size() >= 2; }
};

struct CatenaryEntry {
  Value element = 0;
  Value catenary = 0;
};

/// Per-element catenary degrees over a window of monoid elements.
struct CatenaryProfile {
  NumericalMonoid monoid;
  Value window_end = 0;
  std::vector<CatenaryEntry> entries;  // every monoid element in [0, window_end]
  /// Tail-block heuristic: true when the catenary-value multisets of the
  /// last blocks of n_1 consecutive integers above the Frobenius number
  /// all agree (at least two blocks compared). Not a certificate.
  bool tail_stable = false;
};

struct CatenarySetResult {
  std::vector<Value> values;  // distinct catenary degrees, ascending
  CatenaryProfile profile;
};

/// Bottleneck weight of a minimum spanning tree on the complete distance
/// graph over `vertices`: the least N such that the distance-<=N graph is
/// connected. 0 for fewer than two vertices. Kruskal over edges sorted by
/// (weight, vertex pair), so ties resolve identically across runs.
Value catenary_of_factorizations(
    const std::vector<FactorizationVector>& vertices);

/// c_S(n): least N admitting an N-chain between any two factorizations
/// of n. Raises NotAnElement; ExplosionGuard past the cap.
Value catenary_element(const NumericalMonoid& S, Value n,
                       const CatenaryOptions& options = {});

/// Raises NotAnElement; ExplosionGuard past the cap.
NablaGraph nabla_graph(const NumericalMonoid& S, Value n,
                       const CatenaryOptions& options = {});

/// Inclusive upper bound of the Betti element scan, frobenius + 2*n_k.
Value betti_scan_end(const NumericalMonoid& S);

/// All elements whose nabla graph is disconnected, ascending. Complete:
/// no Betti element can exceed betti_scan_end (see implementation note).
std::vector<Value> betti_elements(const NumericalMonoid& S,
                                  const CatenaryOptions& options = {});

/// c(S) = max of c_S(b) over Betti elements b; 0 when there are none.
Value monoid_catenary(const NumericalMonoid& S,
                      const CatenaryOptions& options = {});

/// Window used by catenary_set when none is given:
/// frobenius + 2*n_k + max(Betti) + n_1.
Value default_window_end(const NumericalMonoid& S,
                         const CatenaryOptions& options = {});

/// Catenary degrees of every monoid element in [0, window_end], plus the
/// distinct value set. Elements are distributed across worker threads;
/// output is deterministic. Raises WindowTooSmall when window_end is given
/// and is <= frobenius.
CatenarySetResult catenary_set(const NumericalMonoid& S,
                               std::optional<Value> window_end = {},
                               const CatenaryOptions& options = {});

}  // namespace numon
