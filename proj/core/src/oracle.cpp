#include "numon/oracle.hpp"

#include <algorithm>
#include <string>

namespace numon {
namespace oracle {

namespace {

constexpr Value kValueCap = 100000;
constexpr std::size_t kSetCap = 5000;

void check_value_cap(Value n) {
  if (n > kValueCap)
    raise(ErrorCode::CapExceeded,
          "oracle element " + std::to_string(n) + " exceeds the cap " +
              std::to_string(kValueCap));
}

void enumerate(const std::vector<Value>& generators, std::size_t i, Value rest,
               FactorizationVector& coeff,
               std::vector<FactorizationVector>& out) {
  if (i + 1 == generators.size()) {
    if (rest % generators[i] == 0) {
      coeff[i] = rest / generators[i];
      if (out.size() >= kSetCap)
        raise(ErrorCode::CapExceeded,
              "oracle factorization set exceeds the cap " +
                  std::to_string(kSetCap));
      out.push_back(coeff);
    }
    return;
  }
  for (Value a = 0; a * generators[i] <= rest; ++a) {
    coeff[i] = a;
    enumerate(generators, i + 1, rest - a * generators[i], coeff, out);
  }
}

}  // namespace

std::vector<FactorizationVector> oracle_factorizations(
    const std::vector<Value>& generators, Value n) {
  if (n < 0) return {};
  check_value_cap(n);
  std::vector<FactorizationVector> out;
  FactorizationVector coeff(generators.size(), 0);
  enumerate(generators, 0, n, coeff, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Connectivity of the graph on `vertices` whose edges are the pairs
// accepted by `edge`, by breadth-first search from vertex 0.
template <typename EdgeFn>
bool connected(const std::vector<FactorizationVector>& vertices, EdgeFn edge) {
  if (vertices.size() <= 1) return true;
  std::vector<char> seen(vertices.size(), 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.back();
    queue.pop_back();
    for (std::size_t w = 0; w < vertices.size(); ++w) {
      if (seen[w] || !edge(vertices[v], vertices[w])) continue;
      seen[w] = 1;
      ++reached;
      queue.push_back(w);
    }
  }
  return reached == vertices.size();
}

}  // namespace

Value oracle_catenary(const NumericalMonoid& S, Value n) {
  if (!S.contains(n))
    raise(ErrorCode::NotAnElement,
          std::to_string(n) + " is not an element of the monoid");
  check_value_cap(n);
  const auto z = oracle_factorizations(S.generators(), n);
  for (Value cap = 0;; ++cap) {
    if (connected(z, [cap](const FactorizationVector& a,
                           const FactorizationVector& b) {
          return distance(a, b) <= cap;
        }))
      return cap;
  }
}

std::vector<Value> oracle_betti(const NumericalMonoid& S, Value scan_end) {
  check_value_cap(scan_end);
  std::vector<Value> out;
  for (Value n = 0; n <= scan_end; ++n) {
    if (!S.contains(n)) continue;
    const auto z = oracle_factorizations(S.generators(), n);
    if (z.size() < 2) continue;
    if (!connected(z, [](const FactorizationVector& a,
                         const FactorizationVector& b) {
          return length(gcd_vec(a, b)) != 0;
        }))
      out.push_back(n);
  }
  return out;
}

}  // namespace oracle
}  // namespace numon
