#include "neville/sampling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using neville::uniform_sample;
using neville::uniform_samples;

TEST_CASE("sequences are deterministic") {
    const auto a = uniform_samples(1, 0.0, 1.0, 3);
    const auto b = uniform_samples(1, 0.0, 1.0, 3);
    CHECK(a == b);
}

TEST_CASE("element i depends only on (seed, i)") {
    const auto whole = uniform_samples(9, -2.0, 3.0, 100);
    for (std::size_t i : {0ul, 17ul, 99ul})
        CHECK(whole[i] == uniform_sample(9, i, -2.0, 3.0));
}

TEST_CASE("different seeds give different streams") {
    CHECK(uniform_samples(1, 0.0, 1.0, 4) != uniform_samples(2, 0.0, 1.0, 4));
}

TEST_CASE("values stay in range and the mean is near the midpoint") {
    const std::size_t n = 10'000;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = uniform_sample(123, i, -1.0, 1.0);
        REQUIRE(x >= -1.0);
        REQUIRE(x < 1.0);
        sum += x;
    }
    CHECK(std::abs(sum / n) < 0.05);
}

TEST_CASE("count zero yields an empty sequence") {
    CHECK(uniform_samples(1, 0.0, 1.0, 0).empty());
}

TEST_CASE("invalid ranges are rejected") {
    CHECK_THROWS_AS(uniform_samples(1, 1.0, 0.0, 3), neville::InvalidRange);
    CHECK_THROWS_AS(uniform_samples(1, 1.0, 1.0, 3), neville::InvalidRange);
}
