#pragma once

// Brute-force oracles and deterministic random generators shared by the unit
// and acceptance suites.  Everything here is independent of the kernel paths
// it cross-checks: cone membership is plain divisibility over an exhaustive
// enumeration, complement counts are direct filters.

#include <random>
#include <vector>

#include "janet/complement.hpp"
#include "janet/janet_division.hpp"
#include "janet/pde.hpp"

namespace janet::testing {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

inline MonomialSet random_set(std::mt19937_64& rng, int n, int max_size, int max_deg,
                              bool allow_identity = false) {
    const int count = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_size)));
    MonomialSet out(n);
    int guard = 0;
    while (out.size() < count && ++guard < 4000) {
        std::vector<int> exps(static_cast<std::size_t>(n));
        int total = 0;
        for (int i = 0; i < n; ++i) {
            exps[static_cast<std::size_t>(i)] =
                static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_deg + 1)));
            total += exps[static_cast<std::size_t>(i)];
        }
        if (total > max_deg) continue;
        if (total == 0 && !allow_identity) continue;
        out.insert(Monomial(std::move(exps)));
    }
    return out;
}

/// Monomials of total degree <= d lying in cone(U), by plain divisibility.
inline MonomialSet brute_cone(const MonomialSet& U, int d) {
    MonomialSet out(U.arity());
    for (const Monomial& w : enumerate_up_to(U.arity(), d))
        if (in_cone(U, w)) out.insert(w);
    return out;
}

/// Monomials of total degree <= d in the involutive cone of U.
inline MonomialSet brute_involutive_cone(const MonomialSet& U, int d) {
    const MultTable table = mult_table(U);
    MonomialSet out(U.arity());
    for (const Monomial& w : enumerate_up_to(U.arity(), d))
        if (in_involutive_cone(U, table, w)) out.insert(w);
    return out;
}

/// Number of monomials of degree exactly d outside cone(U).
inline std::uint64_t brute_complement_count(const MonomialSet& U, int d) {
    std::uint64_t count = 0;
    for (const Monomial& w : enumerate_up_to(U.arity(), d))
        if (w.degree() == d && !in_cone(U, w)) ++count;
    return count;
}

inline Rational random_rational(std::mt19937_64& rng) {
    static const int numerators[] = {-3, -2, -1, 1, 2, 3};
    const int num = numerators[draw(rng, 6)];
    const int den = 1 + static_cast<int>(draw(rng, 3));
    return Rational(num, den);
}

inline Monomial random_monomial(std::mt19937_64& rng, int n, int max_deg) {
    for (;;) {
        std::vector<int> exps(static_cast<std::size_t>(n));
        int total = 0;
        for (int i = 0; i < n; ++i) {
            exps[static_cast<std::size_t>(i)] =
                static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_deg + 1)));
            total += exps[static_cast<std::size_t>(i)];
        }
        if (total <= max_deg) return Monomial(std::move(exps));
    }
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int n, int max_deg, int max_terms) {
    Polynomial p(n);
    const int terms = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_terms)));
    for (int t = 0; t < terms; ++t)
        p = p + Polynomial::term(random_monomial(rng, n, max_deg), random_rational(rng));
    return p;
}

/// A random solved system whose lead sets are completed monomial sets, with
/// random strictly-anterior right-hand sides (polynomial coefficients).
inline PdeSystem random_complete_system(std::mt19937_64& rng, const WeightOrder& order,
                                        int max_deg, int coeff_deg = 1) {
    const int n = order.arity();
    const int m = order.unknown_count();
    std::vector<PdeEquation> equations;
    for (int r = 1; r <= m; ++r) {
        const MonomialSet leads = complete(random_set(rng, n, 3, max_deg)).result;
        for (const Monomial& alpha : leads) {
            const DerivativeSymbol lead{r, alpha};
            LinearExpression rhs(n);
            const int count = static_cast<int>(draw(rng, 3));
            for (int k = 0; k < count; ++k) {
                const DerivativeSymbol sym{1 + static_cast<int>(draw(rng, m)),
                                           random_monomial(rng, n, max_deg)};
                if (order.compare(sym, lead) >= 0) continue;
                rhs.terms.push_back(
                    {RationalFunction(random_polynomial(rng, n, coeff_deg, 2)), sym});
            }
            canonicalize_expression(rhs, order);
            equations.push_back({lead, rhs});
        }
    }
    return make_pde_system(n, m, order, std::move(equations));
}

inline LinearExpression random_expression(std::mt19937_64& rng, const PdeSystem& S,
                                          int max_deg) {
    LinearExpression out(S.n);
    const int count = 1 + static_cast<int>(draw(rng, 3));
    for (int k = 0; k < count; ++k)
        out.terms.push_back({RationalFunction(random_polynomial(rng, S.n, 1, 2)),
                             {1 + static_cast<int>(draw(rng, S.m)),
                              random_monomial(rng, S.n, max_deg)}});
    canonicalize_expression(out, S.order);
    return out;
}

}  // namespace janet::testing
