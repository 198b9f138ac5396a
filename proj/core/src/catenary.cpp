#include "numon/catenary.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

namespace numon {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  std::vector<unsigned> rank_;

  explicit UnionFind(std::size_t n) : parent(n), rank_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }
};

std::vector<FactorizationVector> collect_guarded(
    const FactorizationEnumerator& enumerator, Value n, std::size_t cap) {
  std::vector<FactorizationVector> out;
  bool over = false;
  enumerator.visit(n, [&](const FactorizationVector& a) {
    if (out.size() >= cap) {
      over = true;
      return false;
    }
    out.push_back(a);
    return true;
  });
  if (over)
    raise(ErrorCode::ExplosionGuard,
          "element " + std::to_string(n) + " has more than " +
              std::to_string(cap) + " factorizations");
  std::sort(out.begin(), out.end());
  return out;
}

// Components of the gcd-nonzero adjacency. Two factorizations are adjacent
// iff they share a generator slot, so linking every vertex that uses slot g
// to the first vertex using slot g yields exactly the nabla components.
std::vector<std::vector<std::size_t>> nabla_components(
    const std::vector<FactorizationVector>& vertices, std::size_t k) {
  UnionFind uf(vertices.size());
  std::vector<std::size_t> slot_head(k, SIZE_MAX);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (std::size_t g = 0; g < k; ++g) {
      if (vertices[v][g] == 0) continue;
      if (slot_head[g] == SIZE_MAX)
        slot_head[g] = v;
      else
        uf.unite(v, slot_head[g]);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> components;
  components.reserve(by_root.size());
  for (auto& [root, members] : by_root) components.push_back(std::move(members));
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

// Streaming variant: true iff the nabla graph of n is disconnected.
bool nabla_disconnected(const FactorizationEnumerator& enumerator, Value n,
                        std::size_t k) {
  std::vector<std::size_t> slot_head(k, SIZE_MAX);
  UnionFind uf(0);
  std::size_t vertices = 0;
  std::size_t merges = 0;
  enumerator.visit(n, [&](const FactorizationVector& a) {
    const std::size_t v = vertices++;
    uf.parent.push_back(v);
    uf.rank_.push_back(0);
    for (std::size_t g = 0; g < k; ++g) {
      if (a[g] == 0) continue;
      if (slot_head[g] == SIZE_MAX)
        slot_head[g] = v;
      else if (uf.unite(v, slot_head[g]))
        ++merges;
    }
    return true;
  });
  return vertices >= 2 && merges + 1 < vertices;
}

}  // namespace

Value catenary_of_factorizations(
    const std::vector<FactorizationVector>& vertices) {
  const std::size_t m = vertices.size();
  if (m < 2) return 0;
  struct Edge {
    Value weight;
    std::size_t a, b;
  };
  std::vector<Edge> edges;
  edges.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      edges.push_back({distance(vertices[i], vertices[j]), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.weight, x.a, x.b) < std::tie(y.weight, y.a, y.b);
  });
  UnionFind uf(m);
  std::size_t merges = 0;
  Value bottleneck = 0;
  for (const Edge& e : edges) {
    if (uf.unite(e.a, e.b)) {
      bottleneck = e.weight;
      if (++merges == m - 1) break;
    }
  }
  return bottleneck;
}

Value catenary_element(const NumericalMonoid& S, Value n,
                       const CatenaryOptions& options) {
  if (!S.contains(n))
    raise(ErrorCode::NotAnElement,
          std::to_string(n) + " is not an element of the monoid");
  FactorizationEnumerator enumerator(S, n);
  return catenary_of_factorizations(
      collect_guarded(enumerator, n, options.factorization_cap));
}

NablaGraph nabla_graph(const NumericalMonoid& S, Value n,
                       const CatenaryOptions& options) {
  if (!S.contains(n))
    raise(ErrorCode::NotAnElement,
          std::to_string(n) + " is not an element of the monoid");
  NablaGraph graph;
  graph.element = n;
  FactorizationEnumerator enumerator(S, n);
  graph.vertices = collect_guarded(enumerator, n, options.factorization_cap);
  graph.components = nabla_components(graph.vertices, S.generator_count());
  return graph;
}

Value betti_scan_end(const NumericalMonoid& S) {
  return checked_add(S.frobenius(),
                     checked_mul(2, S.largest_generator()));
}

std::vector<Value> betti_elements(const NumericalMonoid& S,
                                  const CatenaryOptions& options) {
  (void)options;
  std::vector<Value> out;
  if (S.generator_count() < 2) return out;
  const auto& gens = S.generators();
  // Scan bound: any n > frobenius + 2*n_k has n - n_i - n_j in S for every
  // pair i, j, so for factorizations a (using n_i) and a' (using n_j) the
  // vector e_i + e_j + z with z in Z(n - n_i - n_j) meets both; the nabla
  // graph is then connected and n cannot be a Betti element. Below
  // n_1 + n_2 every element has a single factorization.
  const Value scan_end = betti_scan_end(S);
  const Value scan_begin = checked_add(gens[0], gens[1]);
  FactorizationEnumerator enumerator(S, scan_end);
  for (Value n = scan_begin; n <= scan_end; ++n) {
    if (!S.contains(n)) continue;
    if (nabla_disconnected(enumerator, n, gens.size())) out.push_back(n);
  }
  return out;
}

Value monoid_catenary(const NumericalMonoid& S,
                      const CatenaryOptions& options) {
  Value best = 0;
  for (Value b : betti_elements(S, options))
    best = std::max(best, catenary_element(S, b, options));
  return best;
}

Value default_window_end(const NumericalMonoid& S,
                         const CatenaryOptions& options) {
  const auto betti = betti_elements(S, options);
  const Value max_betti = betti.empty() ? 0 : betti.back();
  return checked_add(checked_add(betti_scan_end(S), max_betti),
                     S.smallest_generator());
}

namespace {

// Multisets of catenary values over trailing blocks of n_1 consecutive
// integers (one element per residue class, all above the Frobenius number).
bool tail_blocks_stable(const std::vector<CatenaryEntry>& entries,
                        Value window_end, Value frobenius, Value n1) {
  const Value full_blocks = n1 > 0 ? (window_end - frobenius) / n1 : 0;
  const Value want = std::max<Value>(n1, 2);
  const Value blocks = std::min(full_blocks, want);
  if (blocks < 2) return false;
  std::map<Value, Value> catenary_at;
  for (const auto& e : entries) catenary_at[e.element] = e.catenary;
  std::vector<std::vector<Value>> multisets;
  for (Value j = 0; j < blocks; ++j) {
    std::vector<Value> block;
    const Value hi = window_end - j * n1;
    for (Value n = hi - n1 + 1; n <= hi; ++n) block.push_back(catenary_at.at(n));
    std::sort(block.begin(), block.end());
    multisets.push_back(std::move(block));
  }
  for (std::size_t j = 1; j < multisets.size(); ++j)
    if (multisets[j] != multisets[0]) return false;
  return true;
}

}  // namespace

CatenarySetResult catenary_set(const NumericalMonoid& S,
                               std::optional<Value> window_end,
                               const CatenaryOptions& options) {
  if (window_end && *window_end <= S.frobenius())
    raise(ErrorCode::WindowTooSmall,
          "window " + std::to_string(*window_end) +
              " does not reach past the Frobenius number " +
              std::to_string(S.frobenius()));
  const Value window = window_end ? *window_end : default_window_end(S, options);

  std::vector<Value> elements;
  for (Value n = 0; n <= window; ++n)
    if (S.contains(n)) elements.push_back(n);

  FactorizationEnumerator enumerator(S, window);
  std::vector<Value> catenaries(elements.size(), 0);

  unsigned thread_count = options.threads
                              ? options.threads
                              : std::max(1u, std::thread::hardware_concurrency());
  thread_count = static_cast<unsigned>(
      std::min<std::size_t>(thread_count, std::max<std::size_t>(elements.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= elements.size() || failed.load()) return;
      try {
        catenaries[i] = catenary_of_factorizations(
            collect_guarded(enumerator, elements[i], options.factorization_cap));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) std::rethrow_exception(error);

  CatenarySetResult result{{}, CatenaryProfile{S, window, {}, false}};
  result.profile.entries.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    result.profile.entries.push_back({elements[i], catenaries[i]});

  std::vector<Value> values = catenaries;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  result.values = std::move(values);

  result.profile.tail_stable =
      tail_blocks_stable(result.profile.entries, window, S.frobenius(),
                         S.smallest_generator());
  return result;
}

}  // namespace numon
