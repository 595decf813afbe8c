#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "eqset/space.hpp"

namespace eqset {

/// Bracketed scalar root finding: bisection with an opportunistic secant
/// step, so termination is guaranteed. Requires f(a)*f(b) <= 0. Returns x
/// with |f(x)| <= tol and the surrounding bracket shrunk below tol.
template <class F>
double bracket_root(F&& f, double a, double b, double tol = 1e-13) {
    if (!(tol > 0)) throw std::invalid_argument("bracket_root: tol must be positive");
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::invalid_argument("bracket_root: no sign change in bracket");

    double best = a;
    double fbest = fa;
    if (std::fabs(fb) < std::fabs(fa)) {
        best = b;
        fbest = fb;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < 300; ++it) {
        const double width = b - a;
        double x = a + 0.5 * width;
        // Secant candidate; accepted only if it lands strictly inside.
        if (fa != fb) {
            const double s = a - fa * (b - a) / (fb - fa);
            if (s > a + 0.01 * width && s < b - 0.01 * width) x = s;
        }
        const double fx = f(x);
        if (std::fabs(fx) < std::fabs(fbest)) {
            best = x;
            fbest = fx;
        }
        if (fx == 0.0) return x;
        if (fa * fx < 0.0) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
        if (b - a <= std::max(tol * 1e-2, 4 * eps * (std::fabs(a) + std::fabs(b))) &&
            std::fabs(fbest) <= tol)
            break;
        if (b - a <= 4 * eps * std::max(1.0, std::fabs(a) + std::fabs(b))) break;
    }
    return best;
}

/// Roots of |x-1|^p + (d-1)|x|^p = 2: the two coordinates by which the
/// standard basis of lp^d extends to a (d+1)-point equilateral set.
/// lambda is the positive root, mu the magnitude of the negative one.
struct BasisExtensionRoots {
    double p = 0.0;
    int d = 0;
    double lambda = 0.0;
    double mu = 0.0;
};

inline double basis_extension_profile(double x, double p, int d) {
    return pow_abs(x - 1.0, p) + (d - 1) * pow_abs(x, p);
}

inline BasisExtensionRoots solve_basis_extension_roots(double p, int d) {
    if (!(p > 1.0) || is_infinite_exponent(p))
        throw std::invalid_argument("solve_basis_extension_roots: need finite p > 1");
    if (d < 3) throw std::invalid_argument("solve_basis_extension_roots: need d >= 3");
    auto g = [&](double x) { return basis_extension_profile(x, p, d) - 2.0; };
    // g(0) = -1, g(1) = d-3 >= 0, g(-1) = 2^p + d - 3 > 0.
    const double lambda = bracket_root(g, 0.0, 1.0, 1e-13);
    const double mu = -bracket_root(g, -1.0, 0.0, 1e-13);
    BasisExtensionRoots roots{p, d, lambda, mu};
    const double separation = std::pow(2.0 / d, 1.0 / p);
    if (!(roots.lambda + roots.mu > separation))
        throw std::runtime_error("solve_basis_extension_roots: root separation bound violated");
    return roots;
}

/// Unit vectors u=(alpha,beta), v=(-beta,alpha) in lp^2 with
/// ||u+v|| = ||u-v|| = lambda, for lambda in [2^{1-1/p}, 2^{1/p}].
struct PlanarPair {
    double p = 0.0;
    double lambda = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    Vector u;
    Vector v;
};

inline double planar_pair_lambda_min(double p) { return std::pow(2.0, 1.0 - 1.0 / p); }
inline double planar_pair_lambda_max(double p) { return std::pow(2.0, 1.0 / p); }

inline PlanarPair solve_planar_pair(double p, double lambda) {
    if (!(p >= 1.0) || !(p <= 2.0))
        throw std::invalid_argument("solve_planar_pair: exponent must lie in [1,2]");
    const double lo = planar_pair_lambda_min(p);
    const double hi = planar_pair_lambda_max(p);
    const double slack = 1e-9;
    if (!(lambda >= lo - slack) || !(lambda <= hi + slack))
        throw std::invalid_argument("solve_planar_pair: lambda outside [2^{1-1/p}, 2^{1/p}]");
    const double target = pow_abs(std::min(std::max(lambda, lo), hi), p);

    auto beta_of = [&](double alpha) { return std::pow(std::max(0.0, 1.0 - pow_abs(alpha, p)), 1.0 / p); };
    auto g = [&](double alpha) {
        const double beta = beta_of(alpha);
        return pow_abs(alpha + beta, p) + pow_abs(alpha - beta, p) - target;
    };
    // g runs from 2 - lambda^p >= 0 at alpha = 0 down to 2^{p-1} - lambda^p <= 0
    // at alpha = 2^{-1/p}.
    const double right = std::pow(2.0, -1.0 / p);
    double alpha;
    if (std::fabs(g(0.0)) <= 1e-15)
        alpha = 0.0;
    else if (std::fabs(g(right)) <= 1e-15)
        alpha = right;
    else
        alpha = bracket_root(g, 0.0, right, 1e-14);

    PlanarPair pair;
    pair.p = p;
    pair.lambda = lambda;
    pair.alpha = alpha;
    pair.beta = beta_of(alpha);
    pair.u = {pair.alpha, pair.beta};
    pair.v = {-pair.beta, pair.alpha};
    return pair;
}

} // namespace eqset
