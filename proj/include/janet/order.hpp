#pragma once

#include <vector>

#include "janet/monomial.hpp"

namespace janet {

/// A derivative symbol D^alpha phi^r: multi-index of differentiation plus the
/// 1-based index of the unknown function it applies to.
struct DerivativeSymbol {
    int unknown = 1;
    Monomial alpha;

    bool operator==(const DerivativeSymbol&) const = default;
};

/// Degree-lexicographic comparison on multi-indices (posterior = greater):
/// total degree first, ties broken by the first non-zero difference among
/// a_n - b_n, ..., a_1 - b_1.
inline int cmp_deglex(const Monomial& a, const Monomial& b) { return compare_deglex(a, b); }

/// Total, multiplication-compatible, well-founded order on derivative
/// symbols of m unknowns in n variables.  Symbols compare by total degree,
/// then lexicographically by the weight vector Gamma_k = sum_i alpha_i
/// C[k][i] + W[k][r], then by the deglex tail, then by unknown index.
/// s = 0 levels gives plain deglex extended by the unknown index.
class WeightOrder {
public:
    WeightOrder(int n, int m, std::vector<std::vector<int>> var_weights,
                std::vector<std::vector<int>> unknown_weights);

    static WeightOrder deglex(int n, int m = 1);

    int arity() const { return n_; }
    int unknown_count() const { return m_; }
    int levels() const { return s_; }
    bool is_deglex() const { return s_ == 0; }
    const std::vector<std::vector<int>>& var_weights() const { return var_weights_; }
    const std::vector<std::vector<int>>& unknown_weights() const { return unknown_weights_; }

    /// -1, 0 or +1; +1 means a posterior to b.
    int compare(const DerivativeSymbol& a, const DerivativeSymbol& b) const;
    bool less(const DerivativeSymbol& a, const DerivativeSymbol& b) const {
        return compare(a, b) < 0;
    }

    long long weight_component(const DerivativeSymbol& d, int level) const;

    bool operator==(const WeightOrder&) const = default;

private:
    int n_ = 1;
    int m_ = 1;
    int s_ = 0;
    std::vector<std::vector<int>> var_weights_;      // s x n
    std::vector<std::vector<int>> unknown_weights_;  // s x m
};

/// Exhaustively checks a < b  =>  a + gamma < b + gamma over all symbol pairs
/// and shift monomials of total degree <= bound.
bool is_multiplication_compatible(const WeightOrder& ord, int bound);

}  // namespace janet
