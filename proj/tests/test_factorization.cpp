#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "numon/catenary.hpp"
#include "numon/factorization.hpp"
#include "numon/monoid.hpp"
#include "test_support.hpp"

using namespace numon;
using testsupport::raises;

TEST_CASE("length, gcd_vec, distance basics") {
  CHECK(length({}) == 0);
  CHECK(length({3, 0, 2}) == 5);

  CHECK(gcd_vec({3, 1, 0}, {1, 0, 1}) == FactorizationVector{1, 0, 0});
  CHECK(gcd_vec({3, 0}, {0, 2}) == FactorizationVector{0, 0});
  CHECK(gcd_vec({2, 5}, {2, 5}) == FactorizationVector{2, 5});
  CHECK(raises([] { gcd_vec({1, 2}, {1, 2, 3}); }, ErrorCode::DimensionMismatch));

  // 6 = 3*2 = 2*3 in <2,3>: the trade costs max(3, 2) = 3
  CHECK(distance({3, 0}, {0, 2}) == 3);
  CHECK(distance({4, 0, 0}, {0, 1, 1}) == 4);
  CHECK(distance({2, 1}, {2, 1}) == 0);
  CHECK(raises([] { distance({1}, {1, 2}); }, ErrorCode::DimensionMismatch));
}

TEST_CASE("factorization examples") {
  const auto s = new_monoid({3, 8, 13});
  CHECK(factorizations(s, 24) ==
        std::vector<FactorizationVector>{{0, 3, 0}, {1, 1, 1}, {8, 0, 0}});
  CHECK(factorizations(s, 0) == std::vector<FactorizationVector>{{0, 0, 0}});
  CHECK(factorizations(s, 10).empty());   // the Frobenius number
  CHECK(factorizations(s, -7).empty());
  CHECK(factorizations(s, 3) == std::vector<FactorizationVector>{{1, 0, 0}});

  CHECK(factorizations(new_monoid({2, 3}), 6) ==
        std::vector<FactorizationVector>{{0, 2}, {3, 0}});
  CHECK(factorizations(new_monoid({1}), 5) ==
        std::vector<FactorizationVector>{{5}});
}

TEST_CASE("enumerator streaming") {
  const auto s = new_monoid({3, 8, 13});
  const FactorizationEnumerator enumerator(s, 100);

  CHECK(enumerator.max_value() == 100);
  CHECK(enumerator.monoid() == s);

  std::size_t seen = 0;
  const bool finished = enumerator.visit(24, [&](const FactorizationVector&) {
    ++seen;
    return true;
  });
  CHECK(finished);
  CHECK(seen == 3);

  // early stop after the first hit
  seen = 0;
  CHECK_FALSE(enumerator.visit(24, [&](const FactorizationVector&) {
    ++seen;
    return false;
  }));
  CHECK(seen == 1);

  CHECK(enumerator.count(24, 100) == 3);
  CHECK(enumerator.count(24, 2) == 2);  // capped
  CHECK(enumerator.count(10, 100) == 0);
  CHECK(enumerator.visit(-5, [](const FactorizationVector&) { return false; }));
  CHECK_THROWS_AS(enumerator.visit(101, [](const FactorizationVector&) {
    return true;
  }), std::logic_error);

  // collect through the shared enumerator matches the one-shot helper
  for (Value n = 0; n <= 100; ++n) CHECK(enumerator.collect(n) == factorizations(s, n));
}

TEST_CASE("corpus properties") {
  const auto corpus = testsupport::random_corpus(15, 0x5eed0002);
  for (const auto& s : corpus) {
    CAPTURE(s.generators());
    const Value window = s.frobenius() + 2 * s.largest_generator();
    const FactorizationEnumerator enumerator(s, window);
    const auto betti = betti_elements(s);
    const Value first_betti = betti.empty() ? window + 1 : betti.front();

    for (Value n = 0; n <= window; ++n) {
      const auto zs = enumerator.collect(n);

      // nonempty exactly on elements, sorted, and each vector evaluates to n
      CHECK(!zs.empty() == s.contains(n));
      CHECK(std::is_sorted(zs.begin(), zs.end()));
      CHECK(std::set<FactorizationVector>(zs.begin(), zs.end()).size() == zs.size());
      for (const auto& a : zs) {
        Value total = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          CHECK(a[i] >= 0);
          total += a[i] * s.generators()[i];
        }
        CHECK(total == n);
      }

      // below the first Betti element factorizations are unique
      if (n < first_betti && s.contains(n)) CHECK(zs.size() == 1);

      // distance axioms on consecutive pairs, plus the length lower bound
      for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
        const auto& a = zs[i];
        const auto& b = zs[i + 1];
        const Value d = distance(a, b);
        CHECK(d == distance(b, a));
        CHECK(d > 0);
        CHECK(d == std::max(length(a), length(b)) - length(gcd_vec(a, b)));
        CHECK(d >= std::abs(length(a) - length(b)));
        if (i + 2 < zs.size())
          CHECK(distance(a, zs[i + 2]) <= d + distance(b, zs[i + 2]));
      }
    }
  }
}
