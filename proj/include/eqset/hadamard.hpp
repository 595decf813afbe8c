#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqset/space.hpp"

namespace eqset {

/// +-1 matrix H of order n with H*H^T = n*I, kept in exact integers.
struct HadamardMatrix {
    int order = 0;
    std::vector<std::vector<int>> entries;
};

inline bool verify_hadamard(const std::vector<std::vector<int>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return false;
    for (const auto& row : m) {
        if (row.size() != n) return false;
        for (int e : row)
            if (e != 1 && e != -1) throw std::invalid_argument("verify_hadamard: entries must be +-1");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::int64_t dot = 0;
            for (std::size_t k = 0; k < n; ++k)
                dot += static_cast<std::int64_t>(m[i][k]) * m[j][k];
            const std::int64_t want = (i == j) ? static_cast<std::int64_t>(n) : 0;
            if (dot != want) return false;
        }
    return true;
}

inline bool verify_hadamard(const HadamardMatrix& h) {
    return h.order == static_cast<int>(h.entries.size()) && verify_hadamard(h.entries);
}

inline HadamardMatrix kronecker(const HadamardMatrix& h1, const HadamardMatrix& h2) {
    if (!verify_hadamard(h1) || !verify_hadamard(h2))
        throw std::invalid_argument("kronecker: inputs must be verified Hadamard matrices");
    const int n1 = h1.order, n2 = h2.order;
    HadamardMatrix out;
    out.order = n1 * n2;
    out.entries.assign(out.order, std::vector<int>(out.order));
    for (int i1 = 0; i1 < n1; ++i1)
        for (int i2 = 0; i2 < n2; ++i2)
            for (int j1 = 0; j1 < n1; ++j1)
                for (int j2 = 0; j2 < n2; ++j2)
                    out.entries[i1 * n2 + i2][j1 * n2 + j2] = h1.entries[i1][j1] * h2.entries[i2][j2];
    return out;
}

namespace detail {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

/// Legendre symbols for prime q: chi[a] = +1 residue, -1 non-residue, 0 at 0.
inline std::vector<int> legendre_table(int q) {
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (int x = 1; x < q; ++x) chi[static_cast<std::int64_t>(x) * x % q] = 1;
    return chi;
}

inline HadamardMatrix paley_order(int n) {
    const int q = n - 1;
    if (!is_prime(q) || q % 4 != 3)
        throw std::invalid_argument("paley: order-1 must be a prime congruent to 3 mod 4");
    const auto chi = legendre_table(q);
    // I + C with C the skew conference matrix built from quadratic residues.
    HadamardMatrix h;
    h.order = n;
    h.entries.assign(n, std::vector<int>(n, 1));
    for (int i = 1; i < n; ++i) h.entries[i][0] = -1;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            const int diff = ((i - j) % q + q) % q;
            h.entries[i][j] = (i == j) ? 1 : chi[diff];
        }
    return h;
}

inline std::vector<int> paley_bases(int limit) {
    std::vector<int> bases;
    for (int q = 3; q + 1 <= limit; ++q)
        if (q % 4 == 3 && is_prime(q)) bases.push_back(q + 1);
    return bases;
}

inline bool order_reachable(int n, const std::vector<int>& bases) {
    if (n == 1 || n == 2) return true;
    if (n % 2 != 0) return false;
    for (int b : bases)
        if (n % b == 0 && order_reachable(n / b, bases)) return true;
    return n % 2 == 0 && order_reachable(n / 2, bases);
}

} // namespace detail

enum class HadamardMethod { automatic, sylvester, paley, kronecker_of_halves };

inline HadamardMatrix construct_hadamard(int order, HadamardMethod method = HadamardMethod::automatic);

namespace detail {

inline HadamardMatrix sylvester_order(int n) {
    if (n == 1) return HadamardMatrix{1, {{1}}};
    if (n % 2 != 0) throw std::invalid_argument("sylvester: order must be a power of 2");
    HadamardMatrix h2{2, {{1, 1}, {1, -1}}};
    return kronecker(h2, sylvester_order(n / 2));
}

inline HadamardMatrix auto_order(int n) {
    if (n == 1 || n == 2) return sylvester_order(n);
    if (n % 4 != 0)
        throw std::invalid_argument("construct_hadamard: order must be 1, 2 or divisible by 4");
    if (n > 1000) throw std::invalid_argument("construct_hadamard: automatic search capped at order 1000");
    const auto bases = paley_bases(n);
    for (int b : bases)
        if (n % b == 0 && order_reachable(n / b, bases))
            return kronecker(paley_order(b), auto_order(n / b));
    if (n % 2 == 0 && order_reachable(n / 2, bases))
        return kronecker(sylvester_order(2), auto_order(n / 2));
    throw std::invalid_argument("construct_hadamard: order " + std::to_string(n) +
                                " not reachable from Paley/Sylvester bases");
}

} // namespace detail

inline HadamardMatrix construct_hadamard(int order, HadamardMethod method) {
    if (order < 1) throw std::invalid_argument("construct_hadamard: order must be positive");
    HadamardMatrix h;
    switch (method) {
        case HadamardMethod::sylvester: {
            int n = order;
            while (n > 1 && n % 2 == 0) n /= 2;
            if (n != 1) throw std::invalid_argument("sylvester: order must be a power of 2");
            h = detail::sylvester_order(order);
            break;
        }
        case HadamardMethod::paley:
            h = detail::paley_order(order);
            break;
        case HadamardMethod::kronecker_of_halves: {
            if (order % 2 != 0) throw std::invalid_argument("kronecker: order must be even");
            h = kronecker(construct_hadamard(2), construct_hadamard(order / 2));
            break;
        }
        case HadamardMethod::automatic:
            h = detail::auto_order(order);
            break;
    }
    if (!verify_hadamard(h))
        throw std::runtime_error("construct_hadamard: internal verification failed");
    return h;
}

/// The n rows of a normalised Hadamard matrix with the all-ones first column
/// dropped: n vertices in R^{n-1}, any two differing in exactly n/2
/// coordinates.
struct HadamardSimplex {
    int order = 0;
    std::vector<Vector> vertices;
};

inline HadamardSimplex to_simplex(const HadamardMatrix& h) {
    if (!verify_hadamard(h)) throw std::invalid_argument("to_simplex: input is not Hadamard");
    HadamardSimplex s;
    s.order = h.order;
    s.vertices.reserve(h.order);
    for (const auto& row : h.entries) {
        const int sign = row[0];
        Vector v(h.order - 1);
        for (int j = 1; j < h.order; ++j) v[j - 1] = sign * row[j];
        s.vertices.push_back(std::move(v));
    }
    return s;
}

/// Pairwise distance of simplex vertices in lp^{n-1}: n^{1/p} * 2^{1-1/p}.
inline double simplex_pair_distance(int order, double p) {
    return std::pow(static_cast<double>(order), 1.0 / p) * std::pow(2.0, 1.0 - 1.0 / p);
}

} // namespace eqset
