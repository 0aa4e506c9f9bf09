#include "doctest.h"
#include "properties.hpp"

TEST_CASE("randomized properties") {
  for (const auto& p : testing::properties()) {
    SUBCASE(p.name.c_str()) {
      auto r = p.run(20261016u);
      INFO(r.first_failure);
      CHECK(r.cases >= 100);
      CHECK(r.failures == 0);
    }
  }
}
