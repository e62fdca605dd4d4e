#include "janet/janet_division.hpp"

#include <algorithm>
#include <stdexcept>

namespace janet {

namespace {

void require_nonempty(const MonomialSet& U, const char* what) {
    if (U.empty()) throw std::invalid_argument(std::string(what) + " requires a non-empty set");
}

// true iff a and b agree on exponent positions from..n
bool tails_equal(const Monomial& a, const Monomial& b, int from) {
    for (int j = from; j <= a.arity(); ++j)
        if (a.deg(j) != b.deg(j)) return false;
    return true;
}

}  // namespace

MultTable::MultTable(MonomialSet set, std::vector<std::uint32_t> masks)
    : set_(std::move(set)), masks_(std::move(masks)) {
    if (static_cast<int>(masks_.size()) != set_.size())
        throw std::invalid_argument("mask count does not match set size");
}

bool MultTable::is_multiplicative(const Monomial& u, int i) const {
    const int idx = set_.index_of(u);
    if (idx < 0) throw std::invalid_argument("monomial is not a member of the table's set");
    if (i < 1 || i > set_.arity()) throw std::out_of_range("variable index out of range");
    return (masks_[static_cast<std::size_t>(idx)] >> (i - 1)) & 1u;
}

std::vector<int> MultTable::multiplicative(const Monomial& u) const {
    std::vector<int> vars;
    for (int i = 1; i <= set_.arity(); ++i)
        if (is_multiplicative(u, i)) vars.push_back(i);
    return vars;
}

std::vector<int> MultTable::non_multiplicative(const Monomial& u) const {
    std::vector<int> vars;
    for (int i = 1; i <= set_.arity(); ++i)
        if (!is_multiplicative(u, i)) vars.push_back(i);
    return vars;
}

MonomialSet janet_class(const MonomialSet& U, std::span<const int> suffix) {
    const int n = U.arity();
    if (static_cast<int>(suffix.size()) > n)
        throw std::invalid_argument("class suffix longer than the arity");
    const int from = n - static_cast<int>(suffix.size()) + 1;
    MonomialSet out(n);
    for (const Monomial& u : U) {
        bool match = true;
        for (int j = from; j <= n; ++j)
            if (u.deg(j) != suffix[static_cast<std::size_t>(j - from)]) { match = false; break; }
        if (match) out.insert(u);
    }
    return out;
}

MultTable mult_table(const MonomialSet& U) {
    require_nonempty(U, "mult_table");
    const int n = U.arity();
    if (n > 32) throw std::invalid_argument("mult_table supports at most 32 variables");
    const int count = U.size();
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(count), 0);

    const int dn = deg_i_set(U, n);
    for (int idx = 0; idx < count; ++idx)
        if (U.at(idx).deg(n) == dn) masks[static_cast<std::size_t>(idx)] |= 1u << (n - 1);

    // For i < n, group members by their exponent tail at positions i+1..n and
    // mark those attaining the maximal deg_i within their class.
    std::vector<int> order(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) order[static_cast<std::size_t>(k)] = k;
    for (int i = n - 1; i >= 1; --i) {
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            for (int j = n; j > i; --j) {
                const int d = U.at(a).deg(j) - U.at(b).deg(j);
                if (d != 0) return d < 0;
            }
            return a < b;
        });
        std::size_t run = 0;
        while (run < order.size()) {
            std::size_t end = run + 1;
            while (end < order.size() &&
                   tails_equal(U.at(order[run]), U.at(order[end]), i + 1))
                ++end;
            int maxdeg = 0;
            for (std::size_t k = run; k < end; ++k)
                maxdeg = std::max(maxdeg, U.at(order[k]).deg(i));
            for (std::size_t k = run; k < end; ++k)
                if (U.at(order[k]).deg(i) == maxdeg)
                    masks[static_cast<std::size_t>(order[k])] |= 1u << (i - 1);
            run = end;
        }
    }
    return MultTable(U, std::move(masks));
}

std::optional<Monomial> janet_divisor(const MonomialSet& U, const MultTable& table,
                                      const Monomial& w) {
    for (int idx = 0; idx < U.size(); ++idx) {
        const Monomial& u = U.at(idx);
        if (!divides(u, w)) continue;
        bool ok = true;
        for (int i = 1; i <= U.arity(); ++i) {
            if (w.deg(i) > u.deg(i) && !((table.mask_at(idx) >> (i - 1)) & 1u)) {
                ok = false;
                break;
            }
        }
        if (ok) return u;
    }
    return std::nullopt;
}

bool in_involutive_cone(const MonomialSet& U, const MultTable& table, const Monomial& w) {
    return janet_divisor(U, table, w).has_value();
}

bool in_cone(const MonomialSet& U, const Monomial& w) {
    for (const Monomial& u : U)
        if (divides(u, w)) return true;
    return false;
}

MonomialSet cone_inductive(const MonomialSet& U, int d) {
    require_nonempty(U, "cone_inductive");
    const int n = U.arity();
    MonomialSet out(n);
    if (n == 1) {
        int lo = U.at(0).deg(1);  // canonical order: first member has least degree
        for (int k = lo; k <= d; ++k) out.insert(Monomial({k}));
        return out;
    }
    const int dn = deg_i_set(U, n);
    // prefix generators per level in the last variable
    std::vector<std::vector<Monomial>> prefixes(static_cast<std::size_t>(dn) + 1);
    for (const Monomial& u : U) {
        std::vector<int> e(u.exponents().begin(), u.exponents().end() - 1);
        prefixes[static_cast<std::size_t>(u.deg(n))].emplace_back(std::move(e));
    }
    for (int k = 0; k <= d; ++k) {
        std::vector<Monomial> gens;
        for (int a = 0; a <= std::min(k, dn); ++a)
            gens.insert(gens.end(), prefixes[static_cast<std::size_t>(a)].begin(),
                        prefixes[static_cast<std::size_t>(a)].end());
        if (gens.empty()) continue;
        MonomialSet slice = cone_inductive(MonomialSet(std::move(gens)), d - k);
        for (const Monomial& p : slice) {
            std::vector<int> e(p.exponents());
            e.push_back(k);
            out.insert(Monomial(std::move(e)));
        }
    }
    return out;
}

bool is_complete(const MonomialSet& U) {
    require_nonempty(U, "is_complete");
    const MultTable table = mult_table(U);
    for (const Monomial& u : U)
        for (int i : table.non_multiplicative(u))
            if (!in_involutive_cone(U, table, u.times_var(i))) return false;
    return true;
}

CompletionTrace complete(const MonomialSet& U) {
    require_nonempty(U, "complete");
    const int n = U.arity();
    long long cap = 10;
    for (int i = 0; i < n; ++i) cap *= U.max_degree() + 1;

    CompletionTrace trace{{}, U};
    long long iterations = 0;
    for (;;) {
        const MultTable table = mult_table(trace.result);
        std::optional<CompletionStep> best;
        for (const Monomial& u : trace.result) {
            for (int i : table.non_multiplicative(u)) {
                const Monomial w = u.times_var(i);
                if (in_involutive_cone(trace.result, table, w)) continue;
                CompletionStep cand{w, u, i};
                if (!best || compare_deglex(cand.added, best->added) < 0 ||
                    (cand.added == best->added &&
                     (compare_deglex(cand.source, best->source) < 0 ||
                      (cand.source == best->source && cand.variable < best->variable))))
                    best = cand;
            }
        }
        if (!best) return trace;
        trace.result.insert(best->added);
        trace.steps.push_back(*best);
        if (++iterations > cap)
            throw std::logic_error("completion iteration cap exceeded");
    }
}

}  // namespace janet
