#pragma once

#include <doctest.h>

#include "support/properties.hpp"

namespace cfgcalc::testing {

inline void check_property(const Property& p, long cases = 300) {
  Rng rng(kSeed);
  for (long i = 0; i < cases; ++i) {
    const std::string failure = p(rng);
    INFO("case " << i);
    REQUIRE(failure.empty());
  }
}

}  // namespace cfgcalc::testing
