#include <doctest.h>

#include "numon/catenary.hpp"
#include "numon/monoid.hpp"
#include "numon/oracle.hpp"
#include "test_support.hpp"

using namespace numon;
using testsupport::raises;

TEST_CASE("oracle factorizations") {
  CHECK(oracle::oracle_factorizations({3, 8, 13}, 24) ==
        std::vector<FactorizationVector>{{0, 3, 0}, {1, 1, 1}, {8, 0, 0}});
  CHECK(oracle::oracle_factorizations({2, 3}, 0) ==
        std::vector<FactorizationVector>{{0, 0}});
  CHECK(oracle::oracle_factorizations({2, 3}, 1).empty());
  CHECK(oracle::oracle_factorizations({2, 3}, -5).empty());
  CHECK(oracle::oracle_factorizations({4, 6}, 10) ==
        std::vector<FactorizationVector>{{1, 1}});
}

TEST_CASE("oracle catenary and betti") {
  CHECK(oracle::oracle_catenary(new_monoid({2, 3}), 6) == 3);
  CHECK(oracle::oracle_catenary(new_monoid({2, 3}), 2) == 0);
  CHECK(oracle::oracle_catenary(new_monoid({3, 5, 7}), 14) == 4);
  CHECK(raises([] { oracle::oracle_catenary(new_monoid({2, 3}), 1); },
               ErrorCode::NotAnElement));

  CHECK(oracle::oracle_betti(new_monoid({2, 3}), 10) == std::vector<Value>{6});
  CHECK(oracle::oracle_betti(new_monoid({3, 5, 7}),
                             betti_scan_end(new_monoid({3, 5, 7}))) ==
        std::vector<Value>{10, 12, 14});
  CHECK(oracle::oracle_betti(new_monoid({2, 3}), 5).empty());
}

TEST_CASE("oracle caps") {
  // values beyond 100000 are out of scope
  CHECK(raises([] { oracle::oracle_factorizations({2, 3}, 100001); },
               ErrorCode::CapExceeded));
  // <2,3> at 50000 has ~8334 factorizations, past the set cap of 5000
  CHECK(raises([] { oracle::oracle_factorizations({2, 3}, 50000); },
               ErrorCode::CapExceeded));
  CHECK(raises([] { oracle::oracle_catenary(new_monoid({2, 3}), 50000); },
               ErrorCode::CapExceeded));
}
