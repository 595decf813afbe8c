#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <random>
#include <vector>

#include "eqset/space.hpp"

namespace eqset {

// FNV-1a over raw bytes; seeds for multistart searches are derived from the
// problem data so runs are reproducible without global state.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 1469598103934665603ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t hash_double(double x, std::uint64_t h) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof(bits));
    return fnv1a(&bits, sizeof(bits), h);
}

inline std::uint64_t hash_vector(const Vector& v, std::uint64_t h) {
    for (double x : v) h = hash_double(x, h);
    return h;
}

/// Golden-section minimization of f on [a,b].
template <class F>
double golden_section_min(F&& f, double a, double b, int iters = 60) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < iters && b - a > 1e-14 * (1.0 + std::fabs(a) + std::fabs(b)); ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

/// One pass of per-coordinate golden-section line searches.
template <class F>
double coordinate_sweep(F&& f, Vector& x, double span, int iters_per_coord = 40) {
    double fx = f(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        auto line = [&](double t) {
            x[i] = t;
            const double v = f(x);
            x[i] = xi;
            return v;
        };
        const double t = golden_section_min(line, xi - span, xi + span, iters_per_coord);
        x[i] = t;
        const double ft = f(x);
        if (ft <= fx) {
            fx = ft;
        } else {
            x[i] = xi;
        }
    }
    return fx;
}

struct NelderMeadResult {
    Vector x;
    double value = 0.0;
    int evals = 0;
};

template <class F>
NelderMeadResult nelder_mead(F&& f, const Vector& x0, double step, int max_evals, double ftol = 1e-18) {
    const std::size_t n = x0.size();
    std::vector<Vector> simplex(n + 1, x0);
    std::vector<double> val(n + 1);
    int evals = 0;
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    for (std::size_t i = 0; i <= n; ++i) {
        val[i] = f(simplex[i]);
        ++evals;
    }
    std::vector<std::size_t> idx(n + 1);
    while (evals < max_evals) {
        for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
        const std::size_t best = idx[0], worst = idx[n], second = idx[n - 1];
        if (val[worst] - val[best] < ftol) break;

        Vector centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i)
            if (i != worst)
                for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            Vector p(n);
            for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
            return p;
        };
        Vector refl = blend(-1.0);
        double frefl = f(refl);
        ++evals;
        if (frefl < val[best]) {
            Vector exp_ = blend(-2.0);
            double fexp = f(exp_);
            ++evals;
            if (fexp < frefl) {
                simplex[worst] = std::move(exp_);
                val[worst] = fexp;
            } else {
                simplex[worst] = std::move(refl);
                val[worst] = frefl;
            }
        } else if (frefl < val[second]) {
            simplex[worst] = std::move(refl);
            val[worst] = frefl;
        } else {
            Vector contr = blend(frefl < val[worst] ? -0.5 : 0.5);
            double fcontr = f(contr);
            ++evals;
            if (fcontr < std::min(frefl, val[worst])) {
                simplex[worst] = std::move(contr);
                val[worst] = fcontr;
            } else {
                // Shrink toward the best vertex.
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < n; ++k)
                        simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
                    val[i] = f(simplex[i]);
                    ++evals;
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (val[i] < val[best]) best = i;
    return NelderMeadResult{simplex[best], val[best], evals};
}

/// Local minimization used by the point searches: coordinate sweeps with a
/// shrinking span, alternated with short simplex descents in low dimension.
/// Derivative-free because the objectives are non-smooth at p = 1 and p = inf.
template <class F>
std::pair<Vector, double> refine_local(F&& f, Vector x, double initial_span, int max_sweeps,
                                       bool full_precision) {
    double span = initial_span;
    double fx = f(x);
    const bool use_simplex = x.size() <= 16;
    const int line_iters = full_precision ? 44 : 28;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double before = fx;
        fx = coordinate_sweep(f, x, span, line_iters);
        if (use_simplex && sweep % 2 == 1) {
            auto nm = nelder_mead(f, x, span * 0.5, static_cast<int>(30 * x.size()) + 60);
            if (nm.value < fx) {
                x = std::move(nm.x);
                fx = nm.value;
            }
        }
        span *= 0.45;
        const double gain = before - fx;
        if (full_precision) {
            if (span <= 1e-13 && gain < 1e-24) break;
            span = std::max(span, 1e-13);
        } else if (gain < 1e-12 * (1.0 + std::fabs(fx)) && sweep >= 2) {
            break;
        }
    }
    return {std::move(x), fx};
}

} // namespace eqset
