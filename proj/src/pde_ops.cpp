#include <algorithm>
#include <optional>

#include "janet/pde.hpp"

namespace janet {

namespace {

struct LeadContext {
    std::vector<MonomialSet> leads;               // per unknown, index r-1
    std::vector<std::optional<MultTable>> tables;

    explicit LeadContext(const PdeSystem& S) {
        for (int r = 1; r <= S.m; ++r) {
            leads.push_back(leading_monomials(S, r));
            tables.push_back(leads.back().empty()
                                 ? std::nullopt
                                 : std::optional<MultTable>(mult_table(leads.back())));
        }
    }

    std::optional<Monomial> divisor(const DerivativeSymbol& d) const {
        const auto& U = leads[static_cast<std::size_t>(d.unknown - 1)];
        if (U.empty()) return std::nullopt;
        return janet_divisor(U, *tables[static_cast<std::size_t>(d.unknown - 1)], d.alpha);
    }
};

const PdeEquation& equation_with_lead(const PdeSystem& S, const DerivativeSymbol& lead) {
    for (const PdeEquation& e : S.equations)
        if (e.lead == lead) return e;
    throw std::logic_error("no equation with the requested lead");
}

constexpr long long kReduceCap = 1'000'000;

}  // namespace

LinearExpression j_reduce(const PdeSystem& S, LinearExpression e, RewriteStrategy strategy) {
    const LeadContext ctx(S);
    canonicalize_expression(e, S.order);
    long long steps = 0;
    for (;;) {
        int pick = -1;
        std::optional<Monomial> pick_divisor;
        // terms are sorted descending, so the first reducible term is the
        // greatest and the last one the smallest
        const bool greatest = strategy == RewriteStrategy::GreatestFirst;
        for (int idx = 0; idx < static_cast<int>(e.terms.size()); ++idx) {
            const int at = greatest ? idx : static_cast<int>(e.terms.size()) - 1 - idx;
            if (auto u = ctx.divisor(e.terms[static_cast<std::size_t>(at)].sym)) {
                pick = at;
                pick_divisor = u;
                break;
            }
        }
        if (pick < 0) return e;
        const LinearTerm term = e.terms[static_cast<std::size_t>(pick)];
        const Monomial cofactor = quotient(term.sym.alpha, *pick_divisor);
        const PdeEquation& rule = equation_with_lead(S, {term.sym.unknown, *pick_divisor});
        LinearExpression replacement =
            expr_scale(expr_derive_multi(rule.rhs, cofactor, S.order), term.coeff, S.order);
        e.terms.erase(e.terms.begin() + pick);
        e = expr_add(e, replacement, S.order);
        if (++steps > kReduceCap) throw std::logic_error("reduction step cap exceeded");
    }
}

LinearExpression normal_form(const PdeSystem& S, LinearExpression e, RewriteStrategy strategy) {
    LinearExpression out = j_reduce(S, std::move(e), strategy);
    for (const LinearTerm& t : out.terms)
        if (classify(S, t.sym) == Classification::Principal)
            throw std::invalid_argument(
                "principal symbol without Janet divisor: the system is not complete");
    return out;
}

std::vector<IntegrabilityCondition> integrability_conditions(const PdeSystem& S,
                                                             RewriteStrategy strategy) {
    const LeadContext ctx(S);
    std::vector<IntegrabilityCondition> out;
    for (const PdeEquation& e : S.equations) {
        const int r = e.lead.unknown;
        const auto& table = ctx.tables[static_cast<std::size_t>(r - 1)];
        for (int i : table->non_multiplicative(e.lead.alpha)) {
            const Monomial prolonged = e.lead.alpha.times_var(i);
            const auto divisor = ctx.divisor({r, prolonged});
            if (!divisor)
                throw std::invalid_argument(
                    "system is not complete: prolongation without Janet divisor");
            const PdeEquation& rule = equation_with_lead(S, {r, *divisor});
            const Monomial cofactor = quotient(prolonged, *divisor);
            const LinearExpression direct = expr_derive(e.rhs, i, S.order);
            const LinearExpression via_divisor =
                expr_derive_multi(rule.rhs, cofactor, S.order);
            LinearExpression residual =
                normal_form(S, expr_sub(direct, via_divisor, S.order), strategy);
            const bool trivial = residual.is_zero();
            out.push_back({r, e.lead.alpha, i, std::move(residual), trivial});
        }
    }
    return out;
}

bool is_completely_integrable(const PdeSystem& S) {
    for (const IntegrabilityCondition& c : integrability_conditions(S))
        if (!c.trivial) return false;
    return true;
}

namespace {

// Solve expr = 0 for its greatest symbol.  expr must contain a symbol.
PdeEquation solve_for_greatest(const LinearExpression& expr, const WeightOrder& order) {
    const LinearTerm& top = expr.terms.front();
    LinearExpression rest(expr.constant.arity());
    rest.terms.assign(expr.terms.begin() + 1, expr.terms.end());
    rest.constant = expr.constant;
    const RationalFunction neg_inv =
        RationalFunction::constant(expr.constant.arity(), -1) / top.coeff;
    return PdeEquation{top.sym, expr_scale(rest, neg_inv, order)};
}

}  // namespace

SystemResult autoreduce(const PdeSystem& S) {
    std::vector<PdeEquation> eqs = S.equations;
    long long guard = 0;
    const long long cap = 10000 * (static_cast<long long>(eqs.size()) + 1);

    for (;;) {
        if (++guard > cap) throw std::logic_error("autoreduce iteration cap exceeded");
        int found = -1;
        std::optional<Monomial> found_divisor;
        for (int idx = 0; idx < static_cast<int>(eqs.size()); ++idx) {
            const PdeEquation& e = eqs[static_cast<std::size_t>(idx)];
            MonomialSet others(S.n);
            for (int j = 0; j < static_cast<int>(eqs.size()); ++j)
                if (j != idx && eqs[static_cast<std::size_t>(j)].lead.unknown == e.lead.unknown)
                    others.insert(eqs[static_cast<std::size_t>(j)].lead.alpha);
            if (others.empty()) continue;
            if (auto u = janet_divisor(others, mult_table(others), e.lead.alpha)) {
                found = idx;
                found_divisor = u;
                break;
            }
        }
        if (found < 0) break;

        PdeEquation victim = eqs[static_cast<std::size_t>(found)];
        eqs.erase(eqs.begin() + found);
        const PdeSystem rest = make_pde_system(S.n, S.m, S.order, eqs);
        const PdeEquation& rule =
            equation_with_lead(rest, {victim.lead.unknown, *found_divisor});
        const Monomial cofactor = quotient(victim.lead.alpha, *found_divisor);
        // the victim's lead equals the cofactor prolongation of the rule's
        // lead; the difference of the two right-hand sides must vanish
        LinearExpression gap = expr_sub(expr_derive_multi(rule.rhs, cofactor, S.order),
                                        victim.rhs, S.order);
        gap = j_reduce(rest, std::move(gap));
        if (gap.is_zero()) {
            eqs = rest.equations;
            continue;
        }
        if (gap.terms.empty())
            return Incompatibility{gap, "reduction of a redundant lead left a non-zero constant"};
        eqs = rest.equations;
        eqs.push_back(solve_for_greatest(gap, S.order));
    }

    // right reduction: substitute away every involutively reducible rhs symbol
    PdeSystem sys = make_pde_system(S.n, S.m, S.order, eqs);
    std::vector<PdeEquation> reduced;
    reduced.reserve(sys.equations.size());
    for (const PdeEquation& e : sys.equations)
        reduced.push_back({e.lead, j_reduce(sys, e.rhs)});
    return make_pde_system(S.n, S.m, S.order, std::move(reduced));
}

PdeSystem complete_system(const PdeSystem& S) {
    std::vector<PdeEquation> eqs = S.equations;
    for (int r = 1; r <= S.m; ++r) {
        const MonomialSet leads = leading_monomials(S, r);
        if (leads.empty()) continue;
        const CompletionTrace trace = complete(leads);
        for (const CompletionStep& step : trace.steps) {
            auto it = std::find_if(eqs.begin(), eqs.end(), [&](const PdeEquation& e) {
                return e.lead.unknown == r && e.lead.alpha == step.source;
            });
            if (it == eqs.end()) throw std::logic_error("completion source without equation");
            eqs.push_back(differentiate_equation(*it, step.variable, S.order));
        }
    }
    return make_pde_system(S.n, S.m, S.order, std::move(eqs));
}

namespace {

std::variant<std::vector<PdeEquation>, Incompatibility> solve_raw(
    std::vector<LinearExpression> work, const WeightOrder& order) {
    std::vector<PdeEquation> solved;
    for (LinearExpression& e : work) canonicalize_expression(e, order);
    for (;;) {
        std::erase_if(work, [](const LinearExpression& e) { return e.is_zero(); });
        for (const LinearExpression& e : work)
            if (e.terms.empty())
                return Incompatibility{e, "equation with no derivative terms and non-zero value"};
        if (work.empty()) return solved;
        int best = 0;
        for (int i = 1; i < static_cast<int>(work.size()); ++i)
            if (order.compare(work[static_cast<std::size_t>(i)].terms.front().sym,
                              work[static_cast<std::size_t>(best)].terms.front().sym) > 0)
                best = i;
        const LinearExpression expr = work[static_cast<std::size_t>(best)];
        work.erase(work.begin() + best);
        const PdeEquation eq = solve_for_greatest(expr, order);
        for (LinearExpression& other : work) {
            RationalFunction c(expr.constant.arity());
            for (const LinearTerm& t : other.terms)
                if (t.sym == eq.lead) { c = t.coeff; break; }
            if (c.is_zero()) continue;
            std::erase_if(other.terms, [&](const LinearTerm& t) { return t.sym == eq.lead; });
            other = expr_add(other, expr_scale(eq.rhs, c, order), order);
        }
        solved.push_back(eq);
    }
}

}  // namespace

CanonicalizeOutcome canonicalize(int n, int m, const WeightOrder& order,
                                 std::vector<LinearExpression> raw_equations) {
    const long long raw_count = static_cast<long long>(raw_equations.size());
    auto first = solve_raw(std::move(raw_equations), order);
    if (std::holds_alternative<Incompatibility>(first))
        return {std::get<Incompatibility>(first), 0};
    PdeSystem sys = make_pde_system(n, m, order, std::get<std::vector<PdeEquation>>(first));

    long long cap = raw_count + 1;
    for (int r = 1; r <= m; ++r) {
        const MonomialSet leads = leading_monomials(sys, r);
        long long per = 10;
        const int deg = leads.empty() ? 0 : leads.max_degree();
        for (int i = 0; i < n; ++i) per *= deg + 1;
        cap *= per;
    }

    int rounds = 0;
    for (;;) {
        if (++rounds > cap) throw std::logic_error("canonicalize iteration cap exceeded");
        SystemResult reduced = autoreduce(sys);
        if (std::holds_alternative<Incompatibility>(reduced))
            return {std::get<Incompatibility>(reduced), rounds};
        sys = complete_system(std::get<PdeSystem>(reduced));

        std::vector<LinearExpression> fresh;
        for (const IntegrabilityCondition& c : integrability_conditions(sys))
            if (!c.trivial) fresh.push_back(c.residual);
        if (fresh.empty()) return {sys, rounds};

        auto solved = solve_raw(std::move(fresh), order);
        if (std::holds_alternative<Incompatibility>(solved))
            return {std::get<Incompatibility>(solved), rounds};
        std::vector<PdeEquation> eqs = sys.equations;
        for (PdeEquation& e : std::get<std::vector<PdeEquation>>(solved))
            eqs.push_back(std::move(e));
        sys = make_pde_system(n, m, order, std::move(eqs));
    }
}

}  // namespace janet
