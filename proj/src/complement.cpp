#include "janet/complement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace janet {

namespace {

// Multiplicative variables of a non-empty class with fixed exponent tail
// (alpha_{i+1},...,alpha_n), restricted to positions i+1..n: x_n iff the tail
// attains deg_n of the whole set, x_j iff it attains deg_j of its parent class.
std::vector<int> class_mult_vars(const MonomialSet& U, std::span<const int> tail) {
    const int n = U.arity();
    const int i = n - static_cast<int>(tail.size());
    std::vector<int> vars;
    for (int j = i + 1; j <= n; ++j) {
        const int alpha_j = tail[static_cast<std::size_t>(j - (i + 1))];
        if (j == n) {
            if (alpha_j == deg_i_set(U, n)) vars.push_back(j);
        } else {
            const MonomialSet parent =
                janet_class(U, tail.subspan(static_cast<std::size_t>(j - i)));
            if (alpha_j == deg_i_set(parent, j)) vars.push_back(j);
        }
    }
    return vars;
}

}  // namespace

ComplementSet::ComplementSet(const MonomialSet& U) : completed_(U) {
    if (U.empty()) throw std::invalid_argument("complementary set of an empty set");
    if (!is_complete(completed_)) completed_ = complete(completed_).result;
    const MonomialSet& J = completed_;
    const int n = J.arity();

    // level n: pure powers of x_n at the empty strata
    const int dn = deg_i_set(J, n);
    for (int beta = 0; beta <= dn; ++beta) {
        const int cls[] = {beta};
        if (!janet_class(J, cls).empty()) continue;
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(n - 1)] = beta;
        std::vector<int> cmult;
        for (int j = 1; j < n; ++j) cmult.push_back(j);
        entries_.push_back({Monomial(std::move(e)), n, std::move(cmult)});
    }

    // level i < n: for each occupied tail, the missing x_i strata below its peak
    for (int i = 1; i < n; ++i) {
        std::set<std::vector<int>> tails;
        for (const Monomial& u : J) {
            std::vector<int> tail;
            for (int j = i + 1; j <= n; ++j) tail.push_back(u.deg(j));
            tails.insert(std::move(tail));
        }
        for (const std::vector<int>& tail : tails) {
            const MonomialSet cls = janet_class(J, tail);
            const int peak = deg_i_set(cls, i);
            std::vector<int> extended(tail.size() + 1);
            std::copy(tail.begin(), tail.end(), extended.begin() + 1);
            for (int beta = 0; beta < peak; ++beta) {
                extended[0] = beta;
                if (!janet_class(J, extended).empty()) continue;
                std::vector<int> e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i - 1)] = beta;
                for (int j = i + 1; j <= n; ++j)
                    e[static_cast<std::size_t>(j - 1)] = tail[static_cast<std::size_t>(j - i - 1)];
                std::vector<int> cmult;
                for (int j = 1; j < i; ++j) cmult.push_back(j);
                for (int j : class_mult_vars(J, tail)) cmult.push_back(j);
                entries_.push_back({Monomial(std::move(e)), i, std::move(cmult)});
            }
        }
    }

    std::sort(entries_.begin(), entries_.end(),
              [](const ComplementEntry& a, const ComplementEntry& b) {
                  const int c = compare_deglex(a.monomial, b.monomial);
                  return c != 0 ? c < 0 : a.level < b.level;
              });
}

std::vector<const ComplementEntry*> ComplementSet::covering(const Monomial& w) const {
    std::vector<const ComplementEntry*> hits;
    for (const ComplementEntry& entry : entries_) {
        if (!divides(entry.monomial, w)) continue;
        bool ok = true;
        for (int i = 1; i <= w.arity(); ++i) {
            if (w.deg(i) > entry.monomial.deg(i) &&
                std::find(entry.cmult.begin(), entry.cmult.end(), i) == entry.cmult.end()) {
                ok = false;
                break;
            }
        }
        if (ok) hits.push_back(&entry);
    }
    return hits;
}

ComplementSet complementary_set(const MonomialSet& U) {
    return ComplementSet(U);
}

LocateResult locate(const MonomialSet& U, const Monomial& w) {
    if (U.empty()) throw std::invalid_argument("locate over an empty set");
    const ComplementSet comp(U);
    std::optional<Monomial> divisor;
    for (const Monomial& u : U)
        if (divides(u, w)) { divisor = u; break; }
    const auto hits = comp.covering(w);
    if (divisor && hits.empty()) return InCone{*divisor};
    if (!divisor && hits.size() == 1) return InComplement{*hits.front()};
    throw std::logic_error("cone/complement partition violated");
}

std::uint64_t hilbert_function(const MonomialSet& U, int d) {
    if (U.empty()) throw std::invalid_argument("hilbert_function over an empty set");
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    const ComplementSet comp(U);
    std::uint64_t count = 0;
    for (const ComplementEntry& entry : comp.entries()) {
        const int t = d - entry.monomial.degree();
        if (t < 0) continue;
        const int k = static_cast<int>(entry.cmult.size());
        if (k == 0)
            count += (t == 0) ? 1 : 0;
        else
            count += binomial(k - 1 + t, k - 1);
    }
    return count;
}

}  // namespace janet
