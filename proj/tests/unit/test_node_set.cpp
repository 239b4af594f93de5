#include "neville/node_set.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <limits>

using neville::Node;
using neville::NodeSet;
using neville::validate_nodes;

TEST_CASE("well-formed input yields a node set") {
    const NodeSet set = validate_nodes({{0.0, 0.0}, {1.0, 1.0}});
    CHECK(set.degree() == 1);
    CHECK(set.size() == 2);
}

TEST_CASE("input order is preserved") {
    const NodeSet set = validate_nodes({{2.0, 4.0}, {0.0, 0.0}, {1.0, 1.0}});
    CHECK(set[0].x == 2.0);
    CHECK(set[1].x == 0.0);
    CHECK(set[2].x == 1.0);
}

TEST_CASE("duplicate abscissas are rejected") {
    CHECK_THROWS_AS(validate_nodes({{0.0, 0.0}, {0.0, 5.0}}), neville::DuplicateAbscissa);
    // +0.0 and -0.0 compare equal, so they would divide by zero downstream
    CHECK_THROWS_AS(validate_nodes({{-0.0, 1.0}, {0.0, 2.0}}), neville::DuplicateAbscissa);
    // near-duplicates are legitimate (no epsilon heuristic)
    CHECK_NOTHROW(validate_nodes({{0.0, 0.0}, {1e-300, 5.0}}));
}

TEST_CASE("empty input is rejected") {
    CHECK_THROWS_AS(validate_nodes({}), neville::EmptyNodeSet);
}

TEST_CASE("non-finite coordinates are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate_nodes({{nan, 0.0}}), neville::NonFiniteInput);
    CHECK_THROWS_AS(validate_nodes({{0.0, inf}}), neville::NonFiniteInput);
}

TEST_CASE("derivative stack accessors") {
    const neville::DerivativeStack stack{0.5, {2.0, 3.0}};
    CHECK(stack.value() == 2.0);
    CHECK(stack.derivative(1) == 3.0);
    CHECK(stack.derivative(7) == 0.0);
    CHECK(stack.max_order() == 1);
}
