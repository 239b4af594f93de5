#ifndef NEVILLE_NODE_SET_HPP
#define NEVILLE_NODE_SET_HPP

#include "neville/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace neville {

/// One sample point (abscissa, ordinate).
struct Node {
    double x{};
    double y{};
};

/// The N+1 points defining one interpolating polynomial of degree N.
///
/// Invariants enforced on construction: non-empty, all coordinates finite,
/// abscissas pairwise distinct (exact comparison — near-duplicates are
/// legitimate, if ill-conditioned, inputs). Input order is preserved; the
/// recurrence does not require sorted abscissas.
class NodeSet {
public:
    explicit NodeSet(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
        if (nodes_.empty())
            throw EmptyNodeSet{};
        for (const Node& n : nodes_) {
            if (!std::isfinite(n.x))
                throw NonFiniteInput{"node abscissa"};
            if (!std::isfinite(n.y))
                throw NonFiniteInput{"node ordinate"};
        }
        std::vector<double> xs(nodes_.size());
        std::transform(nodes_.begin(), nodes_.end(), xs.begin(),
                       [](const Node& n) { return n.x; });
        std::sort(xs.begin(), xs.end());
        const auto dup = std::adjacent_find(xs.begin(), xs.end());
        if (dup != xs.end())
            throw DuplicateAbscissa{*dup};
    }

    std::size_t size() const noexcept { return nodes_.size(); }
    int degree() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
    const Node& operator[](std::size_t i) const noexcept { return nodes_[i]; }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }

    auto begin() const noexcept { return nodes_.begin(); }
    auto end() const noexcept { return nodes_.end(); }

private:
    std::vector<Node> nodes_;
};

/// Checks the NodeSet invariants and wraps the points. Throws EmptyNodeSet,
/// DuplicateAbscissa or NonFiniteInput.
inline NodeSet validate_nodes(std::vector<Node> nodes) {
    return NodeSet{std::move(nodes)};
}

/// The interpolant and its derivatives evaluated at one abscissa:
/// values[n] is the n-th derivative at `at` (values[0] the plain value).
/// Orders above the source polynomial's degree are exactly zero.
struct DerivativeStack {
    double at{};
    std::vector<double> values;

    double value() const noexcept { return values.front(); }

    /// n-th derivative; orders beyond the stored range are zero.
    double derivative(std::size_t n) const noexcept {
        return n < values.size() ? values[n] : 0.0;
    }

    int max_order() const noexcept { return static_cast<int>(values.size()) - 1; }
};

} // namespace neville

#endif // NEVILLE_NODE_SET_HPP
