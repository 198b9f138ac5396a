#include "numon/construction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace numon {

namespace {

std::string join_values(const std::vector<Value>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<Value> sorted_unique(std::vector<Value> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

constexpr Value kShortestLengthTableLimit = Value(1) << 24;

// Least |z| over Z_S(n); -1 when n is not an element. Coin-change table.
Value shortest_length(const NumericalMonoid& S, Value n) {
  if (n < 0 || !S.contains(n)) return -1;
  if (n > kShortestLengthTableLimit)
    raise(ErrorCode::CapExceeded,
          "shortest-factorization table for " + std::to_string(n) +
              " exceeds the size limit");
  constexpr std::uint32_t kUnset = 0xffffffff;
  std::vector<std::uint32_t> best(static_cast<std::size_t>(n) + 1, kUnset);
  best[0] = 0;
  for (Value v = 1; v <= n; ++v) {
    std::uint32_t b = kUnset;
    for (Value g : S.generators()) {
      if (g > v) break;
      const std::uint32_t prev = best[static_cast<std::size_t>(v - g)];
      if (prev != kUnset && prev + 1 < b) b = prev + 1;
    }
    best[static_cast<std::size_t>(v)] = b;
  }
  return best[static_cast<std::size_t>(n)];
}

}  // namespace

Gluing glue(const NumericalMonoid& s1, Value d1, const NumericalMonoid& s2,
            Value d2) {
  if (d1 < 1 || d2 < 1)
    raise(ErrorCode::InvalidGenerator, "gluing scales must be positive");
  const Value d = checked_mul(d1 / std::gcd(d1, d2), d2);
  if (!s1.contains(d) || !s2.contains(d))
    raise(ErrorCode::NotAGluing,
          "lcm(" + std::to_string(d1) + "," + std::to_string(d2) + ") = " +
              std::to_string(d) + " must lie in both monoids");
  std::vector<Value> gens;
  gens.reserve(s1.generator_count() + s2.generator_count());
  for (Value g : s1.generators()) gens.push_back(checked_mul(d1, g));
  for (Value g : s2.generators()) gens.push_back(checked_mul(d2, g));
  return Gluing{GluingSpec{s1, d1, s2, d2, d}, new_monoid(std::move(gens))};
}

AdjoinStep adjoin(const NumericalMonoid& base, Value c, Value b,
                  const CatenaryOptions& options) {
  const Value base_catenary = monoid_catenary(base, options);
  if (c <= base_catenary)
    raise(ErrorCode::CatenaryTooSmall,
          "c = " + std::to_string(c) +
              " must exceed the base catenary degree " +
              std::to_string(base_catenary));
  const auto sweep = catenary_set(base, {}, options);
  AdjoinStep step = adjoin(base, c, b, base_catenary, sweep.values);

  // The result's catenary set is {c} plus the degrees of exactly those base
  // elements m with m - b outside the base (the others fall into the
  // c-branch of the closed form). A small b can erase a degree: base
  // <3,4,5> with c = 5, b = 6 keeps only m in {0,3,4,5,7,8}, so the degree
  // 3 (first attained at m = 9) is gone. Every qualifying m is at most
  // b + frobenius, so the windowed sweep plus a tail scan settles the set
  // exactly.
  std::set<Value> kept{c};
  for (const auto& entry : sweep.profile.entries)
    if (!base.contains(entry.element - b)) kept.insert(entry.catenary);
  const Value tail_end = checked_add(b, base.frobenius());
  for (Value m = sweep.profile.window_end + 1; m <= tail_end; ++m)
    if (base.contains(m) && !base.contains(m - b))
      kept.insert(catenary_element(base, m, options));
  step.claimed_set.assign(kept.begin(), kept.end());
  return step;
}

AdjoinStep adjoin(const NumericalMonoid& base, Value c, Value b,
                  Value base_catenary, std::vector<Value> base_set) {
  if (c <= base_catenary)
    raise(ErrorCode::CatenaryTooSmall,
          "c = " + std::to_string(c) +
              " must exceed the base catenary degree " +
              std::to_string(base_catenary));
  if (b < 1 || !base.contains(b))
    raise(ErrorCode::NotAnElement,
          "b = " + std::to_string(b) + " is not a nonzero element of the base");
  if (std::gcd(b, c) != 1)
    raise(ErrorCode::NotCoprime, "gcd(" + std::to_string(b) + "," +
                                     std::to_string(c) + ") != 1");
  // The catenary degree of cb is max(c, L) where L is the least length of a
  // factorization of b in the base (the lone vertex (0,...,0,c) sits at
  // distance max(c, |z|) from each scaled z). The closed form needs L <= c.
  if (b > checked_mul(c, base.largest_generator()) ||
      shortest_length(base, b) > c)
    raise(ErrorCode::CatenaryTooSmall,
          "c = " + std::to_string(c) +
              " is below the shortest factorization length of b = " +
              std::to_string(b) +
              "; the adjoined monoid would have a larger catenary degree");

  std::vector<Value> gens;
  gens.reserve(base.generator_count() + 1);
  for (Value g : base.generators()) gens.push_back(checked_mul(c, g));
  gens.push_back(b);
  std::sort(gens.begin(), gens.end());

  NumericalMonoid result = new_monoid(gens);
  // The formula also needs the scaled list to be the minimal generating set
  // of the result; the other hypotheses do not force that (base <2,3> with
  // c = 5, b = 2 collapses to <2,15>, whose catenary degree is 15).
  if (result.generators() != gens)
    raise(ErrorCode::NotMinimallyGenerated,
          "<" + join_values(gens) + "> reduces to <" +
              join_values(result.generators()) + ">");

  base_set.push_back(c);
  return AdjoinStep{base,    c,
                    b,       checked_mul(c, b),
                    result,  sorted_unique(std::move(base_set))};
}

namespace {

Value mod_inverse(Value a, Value m) {
  Value old_r = a % m, r = m;
  Value old_s = 1, s = 0;
  while (r != 0) {
    const Value q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return ((old_s % m) + m) % m;
}

}  // namespace

Value adjoined_catenary_element(const AdjoinStep& step, Value n,
                                const CatenaryOptions& options) {
  if (!step.result.contains(n))
    raise(ErrorCode::NotAnElement,
          std::to_string(n) + " is not an element of the adjoined monoid");
  if (n >= step.cb && step.result.contains(n - step.cb)) return step.c;
  // n - cb is not in the result, so every factorization of n shares one
  // last coordinate a, the unique residue with n = a*b (mod c).
  const Value a =
      checked_mul(n % step.c, mod_inverse(step.b % step.c, step.c)) % step.c;
  const Value m = (n - checked_mul(a, step.b)) / step.c;
  return catenary_element(step.base, m, options);
}

std::vector<Value> adjoined_betti(const AdjoinStep& step,
                                  const CatenaryOptions& options) {
  std::vector<Value> out;
  for (Value b : betti_elements(step.base, options))
    out.push_back(checked_mul(step.c, b));
  out.push_back(step.cb);
  return sorted_unique(std::move(out));
}

TargetCheck validate_target(const std::vector<Value>& target) {
  for (Value v : target)
    if (v < 0)
      return {false,
              "entries must be non-negative, found " + std::to_string(v)};
  const bool has_zero =
      std::find(target.begin(), target.end(), Value{0}) != target.end();
  if (!has_zero) return {false, "condition (i): 0 is missing"};
  if (std::find(target.begin(), target.end(), Value{1}) != target.end())
    return {false, "condition (ii): 1 is present"};
  const Value max = *std::max_element(target.begin(), target.end());
  if (max < 3)
    return {false,
            "condition (iii): maximum " + std::to_string(max) + " is below 3"};
  return {true, ""};
}

namespace {

bool realizes_exactly(const NumericalMonoid& candidate,
                      const std::vector<Value>& want,
                      const CatenaryOptions& options) {
  if (monoid_catenary(candidate, options) != want.back()) return false;
  return catenary_set(candidate, {}, options).values == want;
}

// Elements attaining each catenary degree, keyed by degree. A degree
// survives an adjoin with a given b only if one of its witnesses m keeps
// m - b outside the base; realize refuses any b that would erase a degree
// and maps each surviving witness m to c*m in the result.
using WitnessMap = std::map<Value, std::vector<Value>>;

WitnessMap witnesses_from_profile(const CatenaryProfile& profile) {
  WitnessMap out;
  for (const auto& entry : profile.entries)
    out[entry.catenary].push_back(entry.element);
  return out;
}

bool degree_survives(const std::vector<Value>& witnesses,
                     const NumericalMonoid& base, Value b) {
  for (Value w : witnesses)
    if (!base.contains(w - b)) return true;
  return false;
}

bool all_degrees_survive(const WitnessMap& witnesses,
                         const NumericalMonoid& base, Value b) {
  for (const auto& [degree, list] : witnesses)
    if (!degree_survives(list, base, b)) return false;
  return true;
}

WitnessMap transport_witnesses(const WitnessMap& old, const AdjoinStep& step) {
  WitnessMap out;
  for (const auto& [degree, list] : old) {
    auto& fresh = out[degree];
    for (Value w : list)
      if (!step.base.contains(w - step.b))
        fresh.push_back(checked_mul(step.c, w));
  }
  auto& top = out[step.c];
  top.push_back(step.cb);
  for (Value g : step.result.generators())
    top.push_back(checked_add(step.cb, g));
  return out;
}

}  // namespace

NumericalMonoid base_for_two(Value c, const CatenaryOptions& options) {
  NumericalMonoid base = new_monoid({c - 1, c});
  // In <a, b> distinct factorizations of one element differ by multiples of
  // the trade (b, -a), so every multi-factorization element has catenary
  // degree exactly b. Still verified before returning.
  if (!realizes_exactly(base, {0, c}, options))
    raise(ErrorCode::BaseCaseSearchExhausted,
          "<" + join_values(base.generators()) +
              "> failed verification for target {0," + std::to_string(c) +
              "}");
  return base;
}

NumericalMonoid base_for_three(Value c, const CatenaryOptions& options) {
  const std::vector<Value> want{0, 2, c};
  // Candidate family first. It degenerates exactly when c = 2 (mod 3),
  // where gcd(3, c+1, 2c-1) = 3; the search below covers those c.
  if (std::gcd(std::gcd(Value{3}, c + 1), 2 * c - 1) == 1) {
    NumericalMonoid family = new_monoid({3, c + 1, 2 * c - 1});
    if (realizes_exactly(family, want, options)) return family;
  }
  const Value limit = 6 * c;
  for (std::size_t k = 3; k <= 4; ++k) {
    std::vector<Value> gens(k, 0);
    std::optional<NumericalMonoid> hit;
    // Ascending tuples 3 <= g_1 < ... < g_k <= 6c, lexicographic order.
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
      for (Value g = i == 0 ? 3 : gens[i - 1] + 1; g <= limit; ++g) {
        gens[i] = g;
        if (i + 1 < k) {
          if (search(i + 1)) return true;
          continue;
        }
        Value gcd = 0;
        for (Value v : gens) gcd = std::gcd(gcd, v);
        if (gcd != 1) continue;
        NumericalMonoid candidate = new_monoid(gens);
        if (candidate.generators() != gens) continue;
        if (realizes_exactly(candidate, want, options)) {
          hit = candidate;
          return true;
        }
      }
      return false;
    };
    if (search(0)) return *hit;
  }
  raise(ErrorCode::BaseCaseSearchExhausted,
        "no monoid with k <= 4 and generators <= " + std::to_string(limit) +
            " has catenary set {0,2," + std::to_string(c) + "}");
}

RealizationTrace realize(const std::vector<Value>& target, BPolicy policy,
                         const std::vector<Value>& explicit_b,
                         const CatenaryOptions& options) {
  const std::vector<Value> sorted_target = sorted_unique(target);
  const TargetCheck check = validate_target(sorted_target);
  if (!check.ok) raise(ErrorCode::InvalidTarget, check.violation);

  const bool with_two =
      std::find(sorted_target.begin(), sorted_target.end(), Value{2}) !=
      sorted_target.end();
  Value base_c = 0;
  for (Value v : sorted_target)
    if (v >= 3) {
      base_c = v;
      break;
    }

  NumericalMonoid base = with_two ? base_for_three(base_c, options)
                                  : base_for_two(base_c, options);
  std::vector<Value> base_set =
      with_two ? std::vector<Value>{0, 2, base_c} : std::vector<Value>{0, base_c};
  RealizationTrace trace{sorted_target, base, base_set, {}, base, base_set};

  NumericalMonoid current = base;
  Value current_catenary = base_c;
  std::vector<Value> current_set = base_set;
  WitnessMap witnesses =
      witnesses_from_profile(catenary_set(base, {}, options).profile);
  std::size_t consumed_b = 0;

  for (Value c : sorted_target) {
    if (c <= base_c) continue;
    const Value floor = current.largest_generator();
    Value b = 0;
    if (policy == BPolicy::Smallest) {
      // Above c * n_k the least factorization length exceeds c, so the
      // scan has a hard stop.
      const Value scan_end = checked_mul(c, floor);
      for (b = floor + 1;; b = checked_add(b, 1)) {
        if (b > scan_end)
          raise(ErrorCode::CatenaryTooSmall,
                "no b <= " + std::to_string(scan_end) +
                    " works for step c = " + std::to_string(c) +
                    ": each candidate fails coprimality, factorization "
                    "length, or degree survival");
        if (!current.contains(b) || std::gcd(b, c) != 1) continue;
        if (shortest_length(current, b) <= c &&
            all_degrees_survive(witnesses, current, b))
          break;
      }
    } else {
      if (consumed_b >= explicit_b.size())
        raise(ErrorCode::BadExplicitB,
              "b list exhausted before step c = " + std::to_string(c));
      b = explicit_b[consumed_b++];
      if (b <= floor)
        raise(ErrorCode::BadExplicitB,
              "b = " + std::to_string(b) +
                  " must exceed the largest generator " +
                  std::to_string(floor));
      if (!current.contains(b))
        raise(ErrorCode::BadExplicitB,
              "b = " + std::to_string(b) + " is not an element of the monoid");
      if (std::gcd(b, c) != 1)
        raise(ErrorCode::BadExplicitB, "gcd(" + std::to_string(b) + "," +
                                           std::to_string(c) + ") != 1");
      if (b > checked_mul(c, floor) || shortest_length(current, b) > c)
        raise(ErrorCode::BadExplicitB,
              "b = " + std::to_string(b) +
                  " has no factorization of length <= " + std::to_string(c) +
                  ", so the adjoined catenary degree would exceed " +
                  std::to_string(c));
      for (const auto& [degree, list] : witnesses)
        if (!degree_survives(list, current, b))
          raise(ErrorCode::BadExplicitB,
                "b = " + std::to_string(b) + " erases catenary degree " +
                    std::to_string(degree) +
                    " from the set: every witness of it re-enters the "
                    "monoid after subtracting b");
    }
    // Minimal generation cannot fail here: a redundant scaled generator
    // would need a multiple-of-c count of b's worth at most c*n_k < c*b,
    // hence zero b's, contradicting the base's own minimality.
    AdjoinStep step = adjoin(current, c, b, current_catenary, current_set);
    witnesses = transport_witnesses(witnesses, step);
    current = step.result;
    current_catenary = c;
    current_set = step.claimed_set;
    trace.steps.push_back(std::move(step));
  }
  if (policy == BPolicy::Explicit && consumed_b < explicit_b.size())
    raise(ErrorCode::BadExplicitB,
          std::to_string(explicit_b.size() - consumed_b) +
              " unused b values beyond the final step");

  trace.final_monoid = current;
  trace.final_set = current_set;
  return trace;
}

namespace {

void add_check(VerifyReport& report, std::string name, bool pass,
               std::string detail) {
  report.all_pass = report.all_pass && pass;
  report.checks.push_back({std::move(name), pass, std::move(detail)});
}

}  // namespace

VerifyReport verify_trace(const RealizationTrace& trace, Value element_budget,
                          const CatenaryOptions& options) {
  VerifyReport report;

  const auto base_values = catenary_set(trace.base, {}, options).values;
  add_check(report, "base catenary set", base_values == trace.base_set,
            "<" + join_values(trace.base.generators()) + "> -> {" +
                join_values(base_values) + "}");

  // Claimed Betti sets track the construction so no step needs a Betti
  // scan of its (possibly huge) base.
  std::vector<Value> claimed_betti = betti_elements(trace.base, options);

  for (const AdjoinStep& step : trace.steps) {
    const std::string tag = "step c=" + std::to_string(step.c);
    for (Value& v : claimed_betti) v = checked_mul(step.c, v);
    claimed_betti.push_back(step.cb);
    claimed_betti = sorted_unique(std::move(claimed_betti));

    const NumericalMonoid& result = step.result;
    // Branch without touching default_window_end on large monoids: it runs
    // a full Betti scan, and betti_scan_end is a lower bound for it.
    const bool desk_scale =
        betti_scan_end(result) <= element_budget &&
        default_window_end(result, options) <= element_budget;
    if (desk_scale) {
      const auto direct = catenary_set(result, {}, options);
      add_check(report, tag + ": direct catenary set",
                direct.values == step.claimed_set,
                "{" + join_values(direct.values) + "} vs claimed {" +
                    join_values(step.claimed_set) + "}");
      const auto direct_betti = betti_elements(result, options);
      add_check(report, tag + ": Betti elements",
                direct_betti == claimed_betti,
                "[" + join_values(direct_betti) + "] vs claimed [" +
                    join_values(claimed_betti) + "]");
      bool formula_ok = true;
      std::string witness;
      for (const auto& entry : direct.profile.entries) {
        if (adjoined_catenary_element(step, entry.element, options) !=
            entry.catenary) {
          formula_ok = false;
          witness = "mismatch at " + std::to_string(entry.element);
          break;
        }
      }
      add_check(report, tag + ": catenary formula (all window elements)",
                formula_ok, witness);
    } else {
      std::vector<Value> expected_gens;
      for (Value g : step.base.generators())
        expected_gens.push_back(checked_mul(step.c, g));
      expected_gens.push_back(step.b);
      std::sort(expected_gens.begin(), expected_gens.end());
      add_check(report, tag + ": minimal generation",
                result.generators() == expected_gens,
                "<" + join_values(result.generators()) + ">");

      bool betti_ok = true;
      std::string betti_witness;
      for (Value beta : claimed_betti) {
        if (!nabla_graph(result, beta, options).disconnected()) {
          betti_ok = false;
          betti_witness = "nabla connected at " + std::to_string(beta);
          break;
        }
      }
      add_check(report, tag + ": Betti transport (sampled)", betti_ok,
                betti_witness);

      std::vector<Value> samples = result.generators();
      samples.push_back(step.cb);
      for (Value g : result.generators())
        samples.push_back(checked_add(step.cb, g));
      samples.insert(samples.end(), claimed_betti.begin(),
                     claimed_betti.end());
      samples = sorted_unique(std::move(samples));
      bool formula_ok = true;
      std::string witness;
      for (Value n : samples) {
        if (adjoined_catenary_element(step, n, options) !=
            catenary_element(result, n, options)) {
          formula_ok = false;
          witness = "mismatch at " + std::to_string(n);
          break;
        }
      }
      add_check(report, tag + ": catenary formula (sampled)", formula_ok,
                witness);
    }
  }
  return report;
}

}  // namespace numon
