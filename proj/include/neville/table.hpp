#ifndef NEVILLE_TABLE_HPP
#define NEVILLE_TABLE_HPP

#include "neville/errors.hpp"
#include "neville/node_set.hpp"
#include "neville/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdlib>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace neville {

/// A consecutive run of table rows used for one local interpolation:
/// indices [first_index, first_index + degree].
struct WindowSpec {
    std::size_t first_index{};
    int degree{};
};

enum class DomainPolicy {
    allow_extrapolation, ///< edge window is used for x outside the table range
    strict               ///< OutOfDomain for x outside the table range
};

/// A sampled function: rows sorted by strictly increasing abscissa.
///
/// Rows are sorted on construction (input order carries no information for
/// interpolation); at least 2 rows, finite values, distinct abscissas.
/// Immutable after construction; concurrent reads are safe.
class TabulatedFunction {
public:
    explicit TabulatedFunction(std::vector<Node> samples, std::string name = {})
        : samples_(std::move(samples)), name_(std::move(name)) {
        if (samples_.size() < 2)
            throw TooFewRows{samples_.size()};
        for (const Node& n : samples_) {
            if (!std::isfinite(n.x) || !std::isfinite(n.y))
                throw NonFiniteInput{"table entry"};
        }
        std::sort(samples_.begin(), samples_.end(),
                  [](const Node& a, const Node& b) { return a.x < b.x; });
        for (std::size_t i = 1; i < samples_.size(); ++i)
            if (samples_[i - 1].x == samples_[i].x)
                throw DuplicateAbscissa{samples_[i].x};
    }

    std::size_t size() const noexcept { return samples_.size(); }
    const std::vector<Node>& samples() const noexcept { return samples_; }
    const Node& operator[](std::size_t i) const noexcept { return samples_[i]; }
    const std::string& name() const noexcept { return name_; }

    double front_x() const noexcept { return samples_.front().x; }
    double back_x() const noexcept { return samples_.back().x; }

    /// Largest |y| over the table; scale reference for tolerances.
    double ordinate_scale() const noexcept {
        double s = 0.0;
        for (const Node& n : samples_)
            s = std::max(s, std::abs(n.y));
        return s;
    }

    std::span<const Node> window(const WindowSpec& w) const noexcept {
        return {samples_.data() + w.first_index, static_cast<std::size_t>(w.degree) + 1};
    }

private:
    std::vector<Node> samples_;
    std::string name_;
};

/// Tabulates f at `count` equidistant abscissas on [a, b]; the first and
/// last abscissas are exactly a and b.
template <std::invocable<double> F>
TabulatedFunction sample_function(F&& f, double a, double b, std::size_t count,
                                  std::string name = {}) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw NonFiniteInput{"sampling range"};
    if (a >= b)
        throw InvalidRange{"need a < b, got [" + std::to_string(a) + ", " + std::to_string(b) + "]"};
    if (count < 2)
        throw InvalidRange{"need at least 2 samples, got " + std::to_string(count)};

    std::vector<Node> rows;
    rows.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        double x = a + (static_cast<double>(k) * (b - a)) / static_cast<double>(count - 1);
        if (k == 0) x = a;
        if (k == count - 1) x = b;
        const double y = f(x);
        if (!std::isfinite(y))
            throw NonFiniteSample{x};
        rows.push_back({x, y});
    }
    return TabulatedFunction{std::move(rows), std::move(name)};
}

namespace detail {

// Parses one table row: two decimal floating-point fields separated by
// whitespace and/or a comma. Returns false for blank/comment lines.
inline bool parse_table_row(const std::string& raw, std::size_t line_no, Node& out) {
    std::string line = raw;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::size_t pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos || line[pos] == '#')
        return false;

    const char* cursor = line.c_str() + pos;
    double fields[2];
    for (double& field : fields) {
        char* end = nullptr;
        field = std::strtod(cursor, &end);
        if (end == cursor)
            throw ParseError{line_no, "expected a number, got '" + std::string(cursor) + "'"};
        if (!std::isfinite(field))
            throw ParseError{line_no, "non-finite value"};
        cursor = end;
    }
    const std::string rest(cursor);
    if (rest.find_first_not_of(" \t\r\n") != std::string::npos)
        throw ParseError{line_no, "trailing content '" + rest + "' after two fields"};
    out = {fields[0], fields[1]};
    return true;
}

} // namespace detail

/// Reads the plain-text table format: one "x y" row per line (whitespace or
/// comma separated), blank lines and lines starting with '#' ignored. Rows
/// are sorted by x on load.
inline TabulatedFunction load_table(std::istream& in, std::string name = {}) {
    std::vector<Node> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        Node node;
        if (detail::parse_table_row(line, line_no, node))
            rows.push_back(node);
    }
    return TabulatedFunction{std::move(rows), std::move(name)};
}

/// Picks the consecutive degree+1 window centered on x: with s = number of
/// table abscissas strictly below x, first_index = s - floor((degree+2)/2)
/// clamped to the valid range. Deterministic; biased one step left for odd
/// degrees; independent of the ordinates; non-decreasing in x.
inline WindowSpec locate_window(const TabulatedFunction& table, double x, int degree) {
    if (!std::isfinite(x))
        throw NonFiniteInput{"window abscissa"};
    if (degree < 1)
        throw InvalidArgument{"window degree must be >= 1"};
    if (static_cast<std::size_t>(degree) + 1 > table.size())
        throw DegreeTooLarge{degree, table.size()};

    const auto& rows = table.samples();
    const auto below = std::lower_bound(rows.begin(), rows.end(), x,
                                        [](const Node& n, double v) { return n.x < v; });
    const long s = below - rows.begin();
    const long first = s - (degree + 2) / 2;
    const long last_valid = static_cast<long>(table.size()) - degree - 1;
    return {static_cast<std::size_t>(std::clamp(first, 0L, last_valid)), degree};
}

/// Evaluates the local interpolant of the chosen degree (window selected by
/// locate_window) and its derivatives at x.
inline DerivativeStack interpolate_at(const TabulatedFunction& table, double x, int degree,
                                      int max_order,
                                      DomainPolicy policy = DomainPolicy::allow_extrapolation) {
    if (!std::isfinite(x))
        throw NonFiniteInput{"evaluation abscissa"};
    if (max_order < 0)
        throw InvalidArgument{"max_order must be >= 0"};
    if (policy == DomainPolicy::strict && (x < table.front_x() || x > table.back_x()))
        throw OutOfDomain{x, table.front_x(), table.back_x()};

    const WindowSpec w = locate_window(table, x, degree);

    DerivativeStack stack;
    stack.at = x;
    stack.values.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
    const int computed = std::min(max_order, degree);
    detail::derivative_sweep(table.window(w), x,
                             std::span<double>(stack.values.data(),
                                               static_cast<std::size_t>(computed) + 1));
    return stack;
}

} // namespace neville

#endif // NEVILLE_TABLE_HPP
