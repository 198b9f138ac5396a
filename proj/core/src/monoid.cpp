#include "numon/monoid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

namespace numon {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::NotAnElement: return "NotAnElement";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::NotAGluing: return "NotAGluing";
    case ErrorCode::CatenaryTooSmall: return "CatenaryTooSmall";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotMinimallyGenerated: return "NotMinimallyGenerated";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::BadExplicitB: return "BadExplicitB";
    case ErrorCode::BaseCaseSearchExhausted: return "BaseCaseSearchExhausted";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::CapExceeded: return "CapExceeded";
  }
  return "UnknownError";
}

struct NumericalMonoid::Data {
  std::vector<Value> generators;
  std::vector<Value> apery;  // apery[r] = min element congruent to r mod n_1
  Value frobenius = -1;
  // Dense membership over [0, frobenius + n_k]; empty when that range is
  // too large to tabulate (see kTableLimit).
  std::vector<bool> table;
};

namespace {

// Largest dense membership table we are willing to hold. Beyond this the
// Apery array answers membership in O(1) anyway.
constexpr Value kTableLimit = Value(1) << 26;
// Residue count cap for the Apery shortest-path array.
constexpr Value kAperyLimit = Value(1) << 26;

// Smallest monoid element in each residue class mod n_1, via Dijkstra on
// the residue graph (edge r -> (r + g) mod n_1 of weight g). The shortest
// distance to r is the least sum of generators congruent to r.
std::vector<Value> apery_by_dijkstra(const std::vector<Value>& gens) {
  const Value n1 = gens.front();
  if (n1 > kAperyLimit)
    raise(ErrorCode::CapExceeded,
          "smallest generator too large for Apery preprocessing");
  std::vector<Value> dist(static_cast<std::size_t>(n1),
                          std::numeric_limits<Value>::max());
  using Node = std::pair<Value, Value>;  // (distance, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t j = 1; j < gens.size(); ++j) {
      const Value nd = checked_add(d, gens[j]);
      const Value nr = (r + gens[j]) % n1;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  return dist;
}

// Coin-problem membership table over [0, bound].
std::vector<bool> coin_table(const std::vector<Value>& gens, Value bound) {
  std::vector<bool> table(static_cast<std::size_t>(bound) + 1, false);
  table[0] = true;
  for (Value g : gens) {
    for (Value v = g; v <= bound; ++v) {
      if (table[static_cast<std::size_t>(v - g)])
        table[static_cast<std::size_t>(v)] = true;
    }
  }
  return table;
}

}  // namespace

bool representable(const std::vector<Value>& gens, Value n) {
  if (n < 0) return false;
  if (n == 0) return true;
  if (gens.empty()) return false;
  const auto table = coin_table(gens, n);
  return table[static_cast<std::size_t>(n)];
}

NumericalMonoid NumericalMonoid::from_generators(std::vector<Value> raw) {
  if (raw.empty()) raise(ErrorCode::EmptyInput, "generator list is empty");
  for (Value g : raw) {
    if (g < 1)
      raise(ErrorCode::InvalidGenerator,
            "generator " + std::to_string(g) + " is not a positive integer");
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  Value g = 0;
  for (Value v : raw) g = std::gcd(g, v);
  if (g != 1)
    raise(ErrorCode::NotCofinite,
          "gcd of generators is " + std::to_string(g) +
              "; the complement is infinite");

  if (raw.front() == 1) raw = {1};

  // Reduce to the minimal generating set, dropping redundant generators
  // from largest to smallest. The minimal set is unique, so the order only
  // affects speed.
  std::vector<Value> minimal = raw;
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
    if (minimal.size() == 1) break;
    std::vector<Value> others;
    others.reserve(minimal.size() - 1);
    for (Value v : minimal)
      if (v != *it) others.push_back(v);
    if (representable(others, *it)) minimal = std::move(others);
  }

  auto data = std::make_shared<Data>();
  data->generators = std::move(minimal);
  const auto& gens = data->generators;
  const Value n1 = gens.front();
  const Value nk = gens.back();

  if (n1 == 1) {
    data->apery = {0};
    data->frobenius = -1;
    data->table = {true};
    return NumericalMonoid(std::move(data));
  }

  data->apery = apery_by_dijkstra(gens);
  data->frobenius = *std::max_element(data->apery.begin(), data->apery.end()) - n1;

  // Dense table for O(1) membership at desk scale, built by the coin-problem
  // dynamic program and cross-checked against the Apery view.
  const Value table_end = checked_add(data->frobenius, nk);
  if (table_end <= kTableLimit) {
    data->table = coin_table(gens, table_end);
    Value dp_frobenius = -1;
    for (Value v = table_end; v >= 0; --v) {
      if (!data->table[static_cast<std::size_t>(v)]) {
        dp_frobenius = v;
        break;
      }
    }
    if (dp_frobenius != data->frobenius)
      throw std::logic_error("membership table disagrees with Apery data");
  }

  return NumericalMonoid(std::move(data));
}

NumericalMonoid::NumericalMonoid(std::shared_ptr<const Data> data)
    : data_(std::move(data)) {}

const std::vector<Value>& NumericalMonoid::generators() const noexcept {
  return data_->generators;
}

std::size_t NumericalMonoid::generator_count() const noexcept {
  return data_->generators.size();
}

Value NumericalMonoid::smallest_generator() const noexcept {
  return data_->generators.front();
}

Value NumericalMonoid::largest_generator() const noexcept {
  return data_->generators.back();
}

Value NumericalMonoid::frobenius() const noexcept { return data_->frobenius; }

bool NumericalMonoid::contains(Value n) const noexcept {
  if (n < 0) return false;
  if (n > data_->frobenius) return true;
  if (!data_->table.empty())
    return data_->table[static_cast<std::size_t>(n)];
  const Value n1 = data_->generators.front();
  return n >= data_->apery[static_cast<std::size_t>(n % n1)];
}

const std::vector<Value>& NumericalMonoid::apery_by_residue() const noexcept {
  return data_->apery;
}

bool NumericalMonoid::has_membership_table() const noexcept {
  return !data_->table.empty();
}

std::vector<Value> NumericalMonoid::apery_set(Value m) const {
  if (m <= 0 || !contains(m))
    raise(ErrorCode::NotAnElement,
          std::to_string(m) + " is not a nonzero element of the monoid");
  if (m == data_->generators.front()) {
    std::vector<Value> out = data_->apery;
    std::sort(out.begin(), out.end());
    return out;
  }
  // The minimum of each class mod m lies in [0, frobenius + m]: the run
  // frobenius+1 .. frobenius+m covers every class.
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(m));
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  Value found = 0;
  for (Value n = 0; found < m; ++n) {
    if (!contains(n)) continue;
    const auto r = static_cast<std::size_t>(n % m);
    if (!seen[r]) {
      seen[r] = true;
      out.push_back(n);
      ++found;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace numon
