#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace eqset {

/// Dense coordinate vector. All library operations require finite entries.
using Vector = std::vector<double>;

inline constexpr double lp_infinity = std::numeric_limits<double>::infinity();

inline bool is_infinite_exponent(double p) { return std::isinf(p) && p > 0; }

/// Recursive description of a norm: an lp^d leaf, or an lq-sum of sub-spaces.
/// p = infinity is permitted at leaves only; the outer sum exponent q is
/// always finite.
struct SpaceSpec {
    struct Leaf {
        double p;
        int d;
    };
    struct Sum {
        double q;
        std::vector<SpaceSpec> summands;
    };

    std::variant<Leaf, Sum> node;

    static SpaceSpec lp(double p, int d) {
        if (!(p >= 1.0))
            throw std::invalid_argument("SpaceSpec: leaf exponent must satisfy p >= 1");
        if (d < 1)
            throw std::invalid_argument("SpaceSpec: leaf dimension must be positive");
        return SpaceSpec{Leaf{p, d}};
    }

    static SpaceSpec sum(double q, std::vector<SpaceSpec> summands) {
        if (!(q >= 1.0) || is_infinite_exponent(q))
            throw std::invalid_argument("SpaceSpec: sum exponent must be finite and >= 1");
        if (summands.empty())
            throw std::invalid_argument("SpaceSpec: sum needs at least one summand");
        return SpaceSpec{Sum{q, std::move(summands)}};
    }

    bool is_leaf() const { return std::holds_alternative<Leaf>(node); }
    const Leaf& leaf() const { return std::get<Leaf>(node); }
    const Sum& as_sum() const { return std::get<Sum>(node); }

    int total_dim() const {
        if (is_leaf()) return leaf().d;
        int d = 0;
        for (const auto& s : as_sum().summands) d += s.total_dim();
        return d;
    }
};

/// |x|^p with exact branches for the exponents the constructions live at.
inline double pow_abs(double x, double p) {
    const double a = std::fabs(x);
    if (p == 1.0) return a;
    if (p == 2.0) return a * a;
    return std::pow(a, p);
}

namespace detail {

inline void check_entries_finite(const Vector& v) {
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument("vector has a non-finite entry");
}

inline double norm_span(const SpaceSpec& spec, const double* x, int n) {
    if (spec.is_leaf()) {
        const auto& lf = spec.leaf();
        if (is_infinite_exponent(lf.p)) {
            double m = 0.0;
            for (int i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
            return m;
        }
        if (lf.p == 1.0) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += std::fabs(x[i]);
            return s;
        }
        if (lf.p == 2.0) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += x[i] * x[i];
            return std::sqrt(s);
        }
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += pow_abs(x[i], lf.p);
        return std::pow(s, 1.0 / lf.p);
    }
    const auto& sum = spec.as_sum();
    // Norm of the vector of summand norms.
    double acc = 0.0;
    int off = 0;
    for (const auto& part : sum.summands) {
        const int d = part.total_dim();
        const double nrm = norm_span(part, x + off, d);
        if (sum.q == 1.0)
            acc += nrm;
        else if (sum.q == 2.0)
            acc += nrm * nrm;
        else
            acc += pow_abs(nrm, sum.q);
        off += d;
    }
    if (sum.q == 1.0) return acc;
    if (sum.q == 2.0) return std::sqrt(acc);
    return std::pow(acc, 1.0 / sum.q);
}

} // namespace detail

inline double norm(const SpaceSpec& spec, const Vector& v) {
    if (static_cast<int>(v.size()) != spec.total_dim())
        throw std::invalid_argument("norm: vector length " + std::to_string(v.size()) +
                                    " does not match space dimension " +
                                    std::to_string(spec.total_dim()));
    detail::check_entries_finite(v);
    return detail::norm_span(spec, v.data(), static_cast<int>(v.size()));
}

inline Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vector scaled(const Vector& a, double t) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

inline double distance(const SpaceSpec& spec, const Vector& a, const Vector& b) {
    return norm(spec, sub(a, b));
}

/// Full symmetric distance matrix; zero diagonal.
inline std::vector<std::vector<double>> pairwise_distances(const SpaceSpec& spec,
                                                           const std::vector<Vector>& points) {
    const std::size_t n = points.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = distance(spec, points[i], points[j]);
            d[i][j] = v;
            d[j][i] = v;
        }
    return d;
}

inline constexpr double default_distance_tolerance = 1e-10;

/// A certified equilateral set: the measured common distance is the mean of
/// all pairwise distances and max_deviation is the worst |dist - lambda|.
struct EquilateralCertificate {
    std::vector<Vector> points;
    double lambda = 0.0;
    double max_deviation = 0.0;
    double tolerance = default_distance_tolerance;
};

struct EquilateralCheck {
    enum class Status { ok, not_equilateral, degenerate };
    Status status = Status::not_equilateral;
    EquilateralCertificate certificate;

    bool ok() const { return status == Status::ok; }
};

inline EquilateralCheck check_equilateral(const SpaceSpec& spec, const std::vector<Vector>& points,
                                          double tolerance = default_distance_tolerance) {
    if (points.size() < 2)
        throw std::invalid_argument("check_equilateral: need at least two points");
    if (!(tolerance > 0))
        throw std::invalid_argument("check_equilateral: tolerance must be positive");
    const auto d = pairwise_distances(spec, points);
    const std::size_t n = points.size();
    double mean = 0.0;
    double min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            mean += d[i][j];
            min_dist = std::min(min_dist, d[i][j]);
        }
    mean /= static_cast<double>(n * (n - 1) / 2);
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) dev = std::max(dev, std::fabs(d[i][j] - mean));

    EquilateralCheck result;
    result.certificate = EquilateralCertificate{points, mean, dev, tolerance};
    if (min_dist <= tolerance)
        result.status = EquilateralCheck::Status::degenerate;
    else if (dev <= tolerance)
        result.status = EquilateralCheck::Status::ok;
    else
        result.status = EquilateralCheck::Status::not_equilateral;
    return result;
}

} // namespace eqset
