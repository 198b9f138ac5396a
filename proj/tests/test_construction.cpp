#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "numon/catenary.hpp"
#include "numon/construction.hpp"
#include "numon/monoid.hpp"
#include "test_support.hpp"

using namespace numon;
using testsupport::raises;

TEST_CASE("glue examples") {
  // 2<3,5,7> + 9<1> with d = lcm(2,9) = 18
  const auto g = glue(new_monoid({3, 5, 7}), 2, new_monoid({1}), 9);
  CHECK(g.spec.d == 18);
  CHECK(g.spec.d1 == 2);
  CHECK(g.spec.d2 == 9);
  CHECK(g.result.generators() == std::vector<Value>{6, 9, 10, 14});
  CHECK(g.result.frobenius() == 17);

  const auto h = glue(new_monoid({2, 3}), 2, new_monoid({2, 3}), 5);
  CHECK(h.spec.d == 10);
  // 10 = 4 + 6 drops out of the minimal generating set
  CHECK(h.result.generators() == std::vector<Value>{4, 6, 15});
}

TEST_CASE("glue errors") {
  // lcm(1,7) = 7 is not an element of <3,5>
  CHECK(raises([] { glue(new_monoid({3, 5}), 1, new_monoid({3, 5}), 7); },
               ErrorCode::NotAGluing));
  CHECK(raises([] { glue(new_monoid({2, 3}), 0, new_monoid({2, 3}), 5); },
               ErrorCode::InvalidGenerator));
  CHECK(raises([] { glue(new_monoid({2, 3}), -2, new_monoid({2, 3}), 5); },
               ErrorCode::InvalidGenerator));
  // 2<2,3> + 4<2,3> = <4,6,8,12> has gcd 2
  CHECK(raises([] { glue(new_monoid({2, 3}), 2, new_monoid({2, 3}), 4); },
               ErrorCode::NotCofinite));
}

TEST_CASE("gluing catenary bound") {
  // c(T) <= max(c(S1), c(S2), c_T(d)) whenever d lies in T; the gluing
  // above is a strictness witness: c = 3 < max(4, 0, 3)
  const auto g = glue(new_monoid({3, 5, 7}), 2, new_monoid({1}), 9);
  REQUIRE(g.result.contains(g.spec.d));
  CHECK(monoid_catenary(g.result) == 3);
  CHECK(catenary_element(g.result, g.spec.d) == 3);
  CHECK(monoid_catenary(new_monoid({3, 5, 7})) == 4);

  // the same bound over a handful of randomly assembled gluings
  const auto corpus = testsupport::random_corpus(12, 0x5eed0004, 15);
  std::mt19937_64 rng(0x5eed0005);
  std::uniform_int_distribution<Value> pick_d(2, 10);
  int found = 0;
  for (std::size_t i = 0; i + 1 < corpus.size() && found < 6; ++i) {
    const auto& s1 = corpus[i];
    const auto& s2 = corpus[i + 1];
    const Value d1 = pick_d(rng);
    const Value d2 = pick_d(rng);
    try {
      const auto glued = glue(s1, d1, s2, d2);
      if (!glued.result.contains(glued.spec.d)) continue;
      const Value bound =
          std::max({monoid_catenary(s1), monoid_catenary(s2),
                    catenary_element(glued.result, glued.spec.d)});
      CAPTURE(glued.result.generators());
      CHECK(monoid_catenary(glued.result) <= bound);
      ++found;
    } catch (const Error&) {
      continue;  // not a gluing for these d's
    }
  }
  CHECK(found > 0);
}

TEST_CASE("adjoin examples") {
  const auto step = adjoin(new_monoid({3, 8, 13}), 20, 51);
  CHECK(step.c == 20);
  CHECK(step.b == 51);
  CHECK(step.cb == 1020);
  CHECK(step.result.generators() == std::vector<Value>{51, 60, 160, 260});
  CHECK(step.claimed_set == std::vector<Value>{0, 2, 7, 20});
  // the claim is exact here: check against a direct sweep
  CHECK(catenary_set(step.result).values == step.claimed_set);

  // field arithmetic and the known-values overload agree with the full one
  CHECK(step.cb == step.c * step.b);
  const auto quick = adjoin(new_monoid({3, 8, 13}), 20, 51, 7, {0, 2, 7});
  CHECK(quick.result == step.result);
  CHECK(quick.claimed_set == step.claimed_set);

  // a base degree survives only if one of its elements leaves the monoid
  // after subtracting b: with b = 6, every m in <3,4,5> with c(m) = 3 has
  // m - 6 still inside, so degree 3 is erased from the claim
  const auto first = adjoin(new_monoid({3, 4, 5}), 5, 6);
  CHECK(first.result.generators() == std::vector<Value>{6, 15, 20, 25});
  CHECK(first.claimed_set == std::vector<Value>{0, 2, 5});
  CHECK(catenary_set(first.result).values == first.claimed_set);
  // b = 7 keeps it: 9 has catenary degree 3 and 9 - 7 = 2 is a gap
  const auto kept = adjoin(new_monoid({3, 4, 5}), 5, 7);
  CHECK(kept.claimed_set == std::vector<Value>{0, 2, 3, 5});
  CHECK(catenary_set(kept.result).values == kept.claimed_set);

  // chaining onto the eroded monoid carries the loss forward
  const auto second = adjoin(first.result, 6, 31);
  CHECK(second.result.generators() ==
        std::vector<Value>{31, 36, 90, 120, 150});
  CHECK(second.claimed_set == std::vector<Value>{0, 2, 5, 6});
  CHECK(catenary_set(second.result).values == second.claimed_set);
}

TEST_CASE("adjoin validation") {
  const auto s = new_monoid({3, 8, 13});  // c(S) = 7
  CHECK(raises([&] { adjoin(s, 7, 51); }, ErrorCode::CatenaryTooSmall));
  CHECK(raises([&] { adjoin(s, 5, 51); }, ErrorCode::CatenaryTooSmall));
  CHECK(raises([&] { adjoin(s, 20, 10); }, ErrorCode::NotAnElement));
  CHECK(raises([&] { adjoin(s, 20, 0); }, ErrorCode::NotAnElement));
  CHECK(raises([&] { adjoin(s, 20, -4); }, ErrorCode::NotAnElement));
  CHECK(raises([&] { adjoin(new_monoid({2, 3}), 5, 10); },
               ErrorCode::NotCoprime));

  std::string message;
  CHECK(raises([] { adjoin(new_monoid({2, 3}), 5, 2); },
               ErrorCode::NotMinimallyGenerated, &message));
  CHECK(message.find("reduces to") != std::string::npos);

  // b needs a factorization of length <= c, or the top catenary degree of
  // the result overshoots c: <2,3> with c = 4 admits b = 11 (length 4)
  // but not b = 13 (length 5) or b = 99 (length 33)
  const auto boundary = adjoin(new_monoid({2, 3}), 4, 11);
  CHECK(boundary.result.generators() == std::vector<Value>{8, 11, 12});
  CHECK(boundary.claimed_set == std::vector<Value>{0, 3, 4});
  CHECK(catenary_set(boundary.result).values == boundary.claimed_set);
  CHECK(raises([] { adjoin(new_monoid({2, 3}), 4, 13); },
               ErrorCode::CatenaryTooSmall, &message));
  CHECK(message.find("shortest factorization length") != std::string::npos);
  CHECK(raises([] { adjoin(new_monoid({2, 3}), 4, 99); },
               ErrorCode::CatenaryTooSmall));
  // ... and c(<8,12,99>) is indeed larger than 4
  CHECK(monoid_catenary(new_monoid({8, 12, 99})) == 33);

  CHECK(raises([] { adjoin(new_monoid({2, 3}), 4000000000000000001, 5); },
               ErrorCode::Overflow));
  // shortest-length table would exceed its cap
  CHECK(raises([] { adjoin(new_monoid({2, 3}), 8388608, 16777217); },
               ErrorCode::CapExceeded));
}

TEST_CASE("adjoined catenary formula") {
  const auto step = adjoin(new_monoid({3, 8, 13}), 20, 51);

  CHECK(adjoined_catenary_element(step, 1020) == 20);   // cb itself
  CHECK(adjoined_catenary_element(step, 1080) == 20);   // cb + 60
  CHECK(adjoined_catenary_element(step, 51) == 0);      // an atom
  CHECK(adjoined_catenary_element(step, 120) == 0);
  CHECK(adjoined_catenary_element(step, 320) == 2);
  CHECK(adjoined_catenary_element(step, 520) == 7);
  CHECK(raises([&] { adjoined_catenary_element(step, 1); },
               ErrorCode::NotAnElement));
  CHECK(raises([&] { adjoined_catenary_element(step, 1169); },
               ErrorCode::NotAnElement));

  // the formula matches direct computation across the whole Betti window
  for (Value n = 0; n <= betti_scan_end(step.result); ++n) {
    if (!step.result.contains(n)) continue;
    CAPTURE(n);
    CHECK(adjoined_catenary_element(step, n) ==
          catenary_element(step.result, n));
  }
}

TEST_CASE("adjoined betti elements") {
  const auto step = adjoin(new_monoid({2, 3}), 5, 7);
  CHECK(step.result.generators() == std::vector<Value>{7, 10, 15});
  CHECK(adjoined_betti(step) == std::vector<Value>{30, 35});
  CHECK(betti_elements(step.result) == std::vector<Value>{30, 35});
  CHECK(catenary_element(step.result, 35) == 5);
  CHECK(catenary_set(step.result).values == std::vector<Value>{0, 3, 5});

  const auto big = adjoin(new_monoid({3, 8, 13}), 20, 51);
  CHECK(adjoined_betti(big) == std::vector<Value>{320, 420, 520, 1020});
  CHECK(betti_elements(big.result) == adjoined_betti(big));
}

TEST_CASE("validate_target") {
  CHECK(validate_target({0, 3}).ok);
  CHECK(validate_target({0, 2, 7, 20}).ok);
  CHECK(validate_target({3, 0}).ok);  // order does not matter
  CHECK(validate_target({0, 4, 4}).ok);

  auto check = validate_target({});
  CHECK_FALSE(check.ok);
  check = validate_target({2, 3});
  CHECK_FALSE(check.ok);
  CHECK(check.violation.find("0 is missing") != std::string::npos);
  check = validate_target({0, 1, 5});
  CHECK_FALSE(check.ok);
  CHECK(check.violation.find("1 is present") != std::string::npos);
  check = validate_target({0, 2});
  CHECK_FALSE(check.ok);
  CHECK(check.violation.find("below 3") != std::string::npos);
  CHECK_FALSE(validate_target({0}).ok);
  CHECK_FALSE(validate_target({0, -2, 5}).ok);
}

TEST_CASE("base cases") {
  CHECK(base_for_two(3).generators() == std::vector<Value>{2, 3});
  CHECK(base_for_two(7).generators() == std::vector<Value>{6, 7});
  for (Value c = 3; c <= 12; ++c) {
    CAPTURE(c);
    CHECK(catenary_set(base_for_two(c)).values == std::vector<Value>{0, c});
  }

  CHECK(base_for_three(3).generators() == std::vector<Value>{3, 4, 5});
  CHECK(base_for_three(4).generators() == std::vector<Value>{3, 5, 7});
  CHECK(base_for_three(7).generators() == std::vector<Value>{3, 8, 13});
  // c = 2 mod 3 breaks the <3, c+1, 2c-1> family (gcd 3); the fallback
  // search takes over
  CHECK(base_for_three(5).generators() == std::vector<Value>{4, 7, 10});
  CHECK(base_for_three(8).generators() == std::vector<Value>{6, 11, 16});
  CHECK(base_for_three(11).generators() == std::vector<Value>{4, 13, 22});
  for (Value c = 3; c <= 11; ++c) {
    CAPTURE(c);
    CHECK(catenary_set(base_for_three(c)).values ==
          std::vector<Value>{0, 2, c});
  }
}

TEST_CASE("realize") {
  const auto two = realize({0, 3});
  CHECK(two.base.generators() == std::vector<Value>{2, 3});
  CHECK(two.steps.empty());
  CHECK(two.final_monoid == two.base);
  CHECK(two.final_set == std::vector<Value>{0, 3});

  const auto three = realize({0, 2, 7});
  CHECK(three.base.generators() == std::vector<Value>{3, 8, 13});
  CHECK(three.steps.empty());

  const auto chain = realize({6, 0, 2, 3, 5, 5, 6});  // unsorted, duplicates
  CHECK(chain.target == std::vector<Value>{0, 2, 3, 5, 6});
  CHECK(chain.base.generators() == std::vector<Value>{3, 4, 5});
  REQUIRE(chain.steps.size() == 2);
  CHECK(chain.steps[0].c == 5);
  // 6 is skipped: it would erase degree 3 (see the adjoin examples above)
  CHECK(chain.steps[0].b == 7);
  CHECK(chain.steps[1].c == 6);
  CHECK(chain.steps[1].b == 29);
  CHECK(chain.final_monoid.generators() ==
        std::vector<Value>{29, 42, 90, 120, 150});
  CHECK(chain.final_set == std::vector<Value>{0, 2, 3, 5, 6});

  const auto explicit_trace =
      realize({0, 2, 7, 20, 26, 57}, BPolicy::Explicit, {51, 1301, 57001});
  REQUIRE(explicit_trace.steps.size() == 3);
  CHECK(explicit_trace.steps[0].result.generators() ==
        std::vector<Value>{51, 60, 160, 260});
  CHECK(explicit_trace.steps[1].result.generators() ==
        std::vector<Value>{1301, 1326, 1560, 4160, 6760});
  CHECK(explicit_trace.final_monoid.generators() ==
        std::vector<Value>{57001, 74157, 75582, 88920, 237120, 385320});
  CHECK(explicit_trace.final_set == std::vector<Value>{0, 2, 7, 20, 26, 57});
}

TEST_CASE("realize errors") {
  CHECK(raises([] { realize({0, 2}); }, ErrorCode::InvalidTarget));
  CHECK(raises([] { realize({1, 3}); }, ErrorCode::InvalidTarget));
  CHECK(raises([] { realize({}); }, ErrorCode::InvalidTarget));

  // explicit-b validation: list exhausted, b not past the largest
  // generator, b outside the base, shared factor with c, b too long to
  // factor within c, leftovers
  CHECK(raises([] { realize({0, 2, 7, 20}, BPolicy::Explicit, {}); },
               ErrorCode::BadExplicitB));
  CHECK(raises([] { realize({0, 2, 7, 20}, BPolicy::Explicit, {13}); },
               ErrorCode::BadExplicitB));
  CHECK(raises([] { realize({0, 2, 5, 9}, BPolicy::Explicit, {13}); },
               ErrorCode::BadExplicitB));  // 13 is a gap of <4,7,10>
  CHECK(raises([] { realize({0, 2, 7, 20}, BPolicy::Explicit, {16}); },
               ErrorCode::BadExplicitB));  // gcd(16, 20) = 4
  std::string message;
  CHECK(raises([&] { realize({0, 3, 4}, BPolicy::Explicit, {13}); },
               ErrorCode::BadExplicitB, &message));
  CHECK(message.find("no factorization of length") != std::string::npos);
  CHECK(raises([&] { realize({0, 3}, BPolicy::Explicit, {5}); },
               ErrorCode::BadExplicitB, &message));
  CHECK(message.find("unused") != std::string::npos);

  CHECK(raises([] { realize({0, 2, 7, 4000000000000000000}); },
               ErrorCode::Overflow));
}

TEST_CASE("verify_trace") {
  const auto trace = realize({0, 2, 7, 20});
  const auto desk = verify_trace(trace, 3000);
  CHECK(desk.all_pass);
  CHECK(!desk.checks.empty());
  for (const auto& check : desk.checks) {
    CAPTURE(check.name);
    CHECK(check.pass);
  }

  // zero budget forces the structural path; it must still pass
  const auto structural = verify_trace(trace, 0);
  CHECK(structural.all_pass);

  // a tampered claim is caught on both paths
  auto bogus = trace;
  bogus.steps.back().claimed_set.push_back(99);
  bogus.final_set.push_back(99);
  CHECK_FALSE(verify_trace(bogus, 3000).all_pass);

  auto bogus_base = trace;
  bogus_base.base_set = {0, 2, 8};
  CHECK_FALSE(verify_trace(bogus_base, 3000).all_pass);

  // the deep chain verifies structurally well inside a second
  const auto deep =
      realize({0, 2, 7, 20, 26, 57}, BPolicy::Explicit, {51, 1301, 57001});
  CHECK(verify_trace(deep, 3000).all_pass);
}
