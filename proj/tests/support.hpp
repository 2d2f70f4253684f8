#pragma once

// Shared random generators for the property-style tests.

#include <random>

#include "satkit/exactpoly.hpp"
#include "satkit/latcone.hpp"
#include "satkit/sphdata.hpp"

namespace satkit::testing {

inline LaurentPoly random_poly(std::mt19937_64& rng, int min_exp = -4, int max_exp = 6, int max_terms = 5,
                               long coeff_bound = 9) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> exps(min_exp, max_exp);
    std::uniform_int_distribution<long> coeffs(-coeff_bound, coeff_bound);
    LaurentPoly p;
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(coeffs(rng), exps(rng));
    return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, int min_exp = -3, int max_exp = 4) {
    for (;;) {
        LaurentPoly p = random_poly(rng, min_exp, max_exp, 4, 6);
        if (!p.is_zero()) return p;
    }
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 7) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// Product of random elementary matrices, rows returned as vectors.
inline std::vector<LatticeVector> random_unimodular(std::mt19937_64& rng, int r, int steps = 6) {
    std::vector<LatticeVector> m(static_cast<std::size_t>(r), LatticeVector(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    if (r < 2) return m;
    std::uniform_int_distribution<int> idx(0, r - 1);
    std::uniform_int_distribution<long> mult(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(idx(rng));
        const auto j = static_cast<std::size_t>(idx(rng));
        if (i == j) continue;
        const long f = mult(rng);
        for (int c = 0; c < r; ++c) m[i][static_cast<std::size_t>(c)] += f * m[j][static_cast<std::size_t>(c)];
    }
    return m;
}

// A valid datum with lattice rank <= 5 and at most 6 colors over A_n, n <= 6.
inline SphericalDatum random_datum(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ndist(1, 6);
    std::uniform_int_distribution<int> rdist(1, 5);
    std::uniform_int_distribution<long> entry(-2, 2);
    std::bernoulli_distribution coin(0.5);
    const int n = ndist(rng);
    const int r = rdist(rng);
    const int k = std::uniform_int_distribution<int>(0, r)(rng);
    auto random_subset = [&](int bound) {
        std::set<int> s;
        while (s.empty()) {
            for (int i = 1; i <= bound; ++i) {
                if (coin(rng)) s.insert(i);
            }
        }
        return s;
    };

    std::vector<SphericalRoot> roots;
    std::vector<LatticeVector> vectors;
    while (static_cast<int>(roots.size()) < k) {
        LatticeVector v(static_cast<std::size_t>(r));
        for (auto& x : v) x = entry(rng);
        auto trial = vectors;
        trial.push_back(v);
        try {
            ValuationCone(r, trial);
        } catch (const InvalidCone&) {
            continue;
        }
        vectors = trial;
        roots.push_back({"s" + std::to_string(roots.size() + 1), v, random_subset(n)});
    }
    std::set<int> support;
    for (const auto& s : roots) support.insert(s.support.begin(), s.support.end());
    std::set<int> s_p;
    for (int i = 1; i <= n; ++i) {
        if (!support.count(i) && coin(rng)) s_p.insert(i);
    }
    std::vector<Color> colors;
    if (!support.empty()) {
        const int m = std::uniform_int_distribution<int>(0, 6)(rng);
        const std::vector<int> sup(support.begin(), support.end());
        for (int c = 0; c < m; ++c) {
            std::set<int> j{sup[std::uniform_int_distribution<std::size_t>(0, sup.size() - 1)(rng)]};
            for (int i = 1; i <= n; ++i) {
                if (!s_p.count(i) && coin(rng)) j.insert(i);
            }
            LatticeVector rho(static_cast<std::size_t>(r));
            for (auto& x : rho) x = entry(rng);
            colors.push_back({"D" + std::to_string(c + 1), j, rho});
        }
    }
    return SphericalDatum("A" + std::to_string(n), r, roots, s_p, colors);
}

}  // namespace satkit::testing
