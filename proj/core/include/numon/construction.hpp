#pragma once

#include <string>
#include <vector>

#include "numon/catenary.hpp"

namespace numon {

/// Provenance of a gluing d_1*S_1 + d_2*S_2 with d = lcm(d_1, d_2) in
/// S_1 and S_2.
struct GluingSpec {
  NumericalMonoid s1;
  Value d1 = 1;
  NumericalMonoid s2;
  Value d2 = 1;
  Value d = 1;
};

struct Gluing {
  GluingSpec spec;
  NumericalMonoid result;
};

/// Glues two monoids after checking d = lcm(d1, d2) lies in both. Raises
/// NotAGluing, NotCofinite (combined gcd != 1), InvalidGenerator (d1 or
/// d2 < 1).
Gluing glue(const NumericalMonoid& s1, Value d1, const NumericalMonoid& s2,
            Value d2);

/// One scaled-adjoin step T = <c*n_1, ..., c*n_k, b>, with the validated
/// hypotheses that make the catenary degree of T equal c.
struct AdjoinStep {
  NumericalMonoid base;
  Value c = 0;
  Value b = 0;
  Value cb = 0;
  NumericalMonoid result;
  /// Catenary set claimed for the result: c together with the degrees of
  /// the base elements m having m - b outside the base (only those reach
  /// the base branch of the closed form). A base degree with no such
  /// witness m drops out of the result's set.
  std::vector<Value> claimed_set;
};

/// Validates and performs one adjoin step. Requirements: c exceeds the
/// base's catenary degree (CatenaryTooSmall), b is a nonzero element of the
/// base (NotAnElement), gcd(b, c) = 1 (NotCoprime), and the scaled
/// generator list is the minimal generating set of the result
/// (NotMinimallyGenerated) -- without minimality the catenary formula can
/// fail, e.g. base <2,3>, c = 5, b = 2 collapses to <2,15>.
///
/// The base's catenary degree and catenary set are computed directly and
/// claimed_set is settled exactly (windowed sweep plus a tail scan up to
/// b + frobenius). The overload taking the known values skips all of that
/// and claims base_set with c added verbatim; it is for callers that have
/// already checked every base degree survives the chosen b, as realize
/// does.
AdjoinStep adjoin(const NumericalMonoid& base, Value c, Value b,
                  const CatenaryOptions& options = {});
AdjoinStep adjoin(const NumericalMonoid& base, Value c, Value b,
                  Value base_catenary, std::vector<Value> base_set);

/// Closed-form c_T(n) for an adjoin step: c when n - cb lies in the
/// result; otherwise every factorization of n shares one last coordinate
/// a in [0, c), and the value is the base catenary degree of
/// m = (n - a*b) / c. Raises NotAnElement.
Value adjoined_catenary_element(const AdjoinStep& step, Value n,
                                const CatenaryOptions& options = {});

/// c * Betti(base) together with c*b, sorted.
std::vector<Value> adjoined_betti(const AdjoinStep& step,
                                  const CatenaryOptions& options = {});

struct TargetCheck {
  bool ok = false;
  std::string violation;  // empty when ok
};

/// A finite set is realizable iff it contains 0, omits 1, and has
/// maximum >= 3.
TargetCheck validate_target(const std::vector<Value>& target);

enum class BPolicy { Smallest, Explicit };

/// The constructed realization of a target set: a verified base monoid
/// plus one adjoin step per remaining target value, in increasing order.
struct RealizationTrace {
  std::vector<Value> target;  // sorted, deduplicated
  NumericalMonoid base;
  std::vector<Value> base_set;  // directly computed catenary set of base
  std::vector<AdjoinStep> steps;
  NumericalMonoid final_monoid;
  std::vector<Value> final_set;  // claimed catenary set of final_monoid
};

/// Builds a monoid whose set of catenary degrees is `target`.
///
/// Base cases: {0, c} uses <c-1, c>; {0, 2, c} tries <3, c+1, 2c-1> and
/// falls back to a bounded generator search (k <= 4, generators <= 6c).
/// Either way the base's catenary set is verified by direct computation
/// before any step is taken. Each remaining target value c gets one adjoin
/// with b > n_k, gcd(b, c) = 1, a factorization of b no longer than c, and
/// a surviving witness for every degree already realized: the least such b
/// under BPolicy::Smallest, or the next entry of `explicit_b` (validated
/// against the same predicate, BadExplicitB on failure).
///
/// Raises InvalidTarget, BadExplicitB, BaseCaseSearchExhausted, Overflow.
RealizationTrace realize(const std::vector<Value>& target,
                         BPolicy policy = BPolicy::Smallest,
                         const std::vector<Value>& explicit_b = {},
                         const CatenaryOptions& options = {});

/// Base-case constructors, exposed for tests. Both verify the catenary
/// set of what they return by direct computation.
NumericalMonoid base_for_two(Value c, const CatenaryOptions& options = {});
NumericalMonoid base_for_three(Value c, const CatenaryOptions& options = {});

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
};

/// Cross-checks a trace against direct computation. Steps whose default
/// window fits in `element_budget` get a full windowed catenary-set
/// comparison; larger steps get structural checks: minimal generation,
/// disconnected nabla graphs at every claimed Betti element, and
/// adjoined_catenary_element vs direct catenary on sampled elements.
VerifyReport verify_trace(const RealizationTrace& trace, Value element_budget,
                          const CatenaryOptions& options = {});

}  // namespace numon
