#include <doctest.h>

#include <cstdint>

#include "gallai/bigint.hpp"
#include "gallai/rng.hpp"

using gallai::Natural;

TEST_CASE("small values agree with native arithmetic") {
  gallai::SplitMix64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t a = rng.below(1ull << 32);
    const std::uint64_t b = rng.below(1ull << 32);
    CHECK(Natural{a} * Natural{b} == Natural{a * b});
    CHECK((Natural{a} < Natural{b}) == (a < b));
    CHECK(Natural{a}.str() == std::to_string(a));
  }
}

TEST_CASE("powers and ordering beyond 64 bits") {
  CHECK(Natural::pow(2, 100) == Natural::pow(1ull << 50, 2));
  CHECK(Natural::pow(2, 100) > Natural{UINT64_MAX});
  CHECK(Natural::pow(10, 20).str() == "100000000000000000000");
  CHECK(Natural::pow(7, 0) == Natural{1});
  CHECK(Natural::pow(0, 5) == Natural{0});
  CHECK(Natural::pow(0, 0) == Natural{1});
  CHECK(Natural::pow(3, 40).str() == "12157665459056928801");
}

TEST_CASE("theorem-scale comparisons are exact at the boundary") {
  // the product bound is attained with equality on the tight instance;
  // these must not be off by one
  CHECK(Natural::pow(8, 2) == Natural{64});
  CHECK_FALSE(Natural::pow(8, 2) < Natural{64});
  CHECK(Natural::pow(4, 3) >= Natural::pow(8, 2));
  CHECK(Natural::pow(3, 30) < Natural::pow(2, 48));
}

TEST_CASE("binomial coefficients") {
  CHECK(gallai::binomial(0, 0) == 1);
  CHECK(gallai::binomial(4, 2) == 6);
  CHECK(gallai::binomial(63, 31) == 916312070471295267ull);
  CHECK(gallai::binomial(5, 7) == 0);
  CHECK(gallai::binomial(7, 0) == 1);
}
