#include <algorithm>
#include <sstream>

#include "janet/pde.hpp"

namespace janet {

namespace {

const Polynomial& rhs_of(const MonomialPdeSystem& S, const Monomial& alpha) {
    for (const auto& [m, f] : S.equations)
        if (m == alpha) return f;
    throw std::logic_error("no equation with the requested multi-index");
}

Rational factorial_of(const Monomial& gamma) {
    Rational f = 1;
    for (int i = 1; i <= gamma.arity(); ++i)
        for (int k = 2; k <= gamma.deg(i); ++k) f *= k;
    return f;
}

}  // namespace

MonomialPdeSystem make_monomial_system(int n,
                                       std::vector<std::pair<Monomial, Polynomial>> equations) {
    if (equations.empty())
        throw std::invalid_argument("a monomial PDE system needs at least one equation");
    for (const auto& [m, f] : equations)
        if (m.arity() != n || f.arity() != n)
            throw std::invalid_argument("equation arity does not match the system");
    std::sort(equations.begin(), equations.end(),
              [](const auto& a, const auto& b) { return deglex_less(a.first, b.first); });
    for (std::size_t i = 1; i < equations.size(); ++i)
        if (equations[i - 1].first == equations[i].first)
            throw std::invalid_argument("duplicate equation multi-indices");
    return MonomialPdeSystem{n, std::move(equations)};
}

MonomialSet leading_monomials(const MonomialPdeSystem& S) {
    MonomialSet out(S.n);
    for (const auto& [m, f] : S.equations) out.insert(m);
    return out;
}

MonomialPdeSystem complete_monomial_system(const MonomialPdeSystem& S) {
    const CompletionTrace trace = complete(leading_monomials(S));
    auto equations = S.equations;
    for (const CompletionStep& step : trace.steps) {
        const Polynomial* source = nullptr;
        for (const auto& [m, f] : equations)
            if (m == step.source) { source = &f; break; }
        if (source == nullptr) throw std::logic_error("completion source without equation");
        equations.emplace_back(step.added, source->derivative(step.variable));
    }
    return make_monomial_system(S.n, std::move(equations));
}

MonomialAnalysis compatibility_conditions_monomial(const MonomialPdeSystem& S) {
    MonomialAnalysis out{S, {}, true};
    if (!is_complete(leading_monomials(S))) out.completed = complete_monomial_system(S);
    const MonomialSet U = leading_monomials(out.completed);
    const MultTable table = mult_table(U);
    for (const auto& [alpha, f] : out.completed.equations) {
        for (int i : table.non_multiplicative(alpha)) {
            const Monomial prolonged = alpha.times_var(i);
            const auto beta = janet_divisor(U, table, prolonged);
            if (!beta) throw std::logic_error("complete set without Janet divisor");
            const Monomial gamma = quotient(prolonged, *beta);
            MonomialCompatibility cond;
            cond.variable = i;
            cond.alpha = alpha;
            cond.beta = *beta;
            cond.gamma = gamma;
            cond.lhs = f.derivative(i);
            cond.rhs = rhs_of(out.completed, *beta).multi_derivative(gamma);
            cond.holds = cond.lhs == cond.rhs;
            if (!cond.holds) out.all_hold = false;
            out.conditions.push_back(std::move(cond));
        }
    }
    return out;
}

std::vector<TemplateSlot> initial_condition_template(const MonomialPdeSystem& S) {
    const MonomialSet U = leading_monomials(S);
    if (!is_complete(U))
        throw std::invalid_argument("initial condition template requires a complete lead set");
    std::vector<TemplateSlot> slots;
    const ComplementSet comp(U);
    for (const ComplementEntry& entry : comp.entries())
        slots.push_back({entry.monomial, entry.cmult});
    return slots;
}

std::vector<std::vector<TemplateSlot>> initial_condition_template(const PdeSystem& S) {
    std::vector<std::vector<TemplateSlot>> out;
    for (int r = 1; r <= S.m; ++r) {
        const MonomialSet leads = leading_monomials(S, r);
        std::vector<TemplateSlot> slots;
        if (leads.empty()) {
            // a free unknown: one slot, every variable multiplicative
            std::vector<int> all;
            for (int i = 1; i <= S.n; ++i) all.push_back(i);
            slots.push_back({Monomial::identity(S.n), std::move(all)});
        } else {
            if (!is_complete(leads))
                throw std::invalid_argument(
                    "initial condition template requires complete lead sets");
            const ComplementSet comp(leads);
            for (const ComplementEntry& entry : comp.entries())
                slots.push_back({entry.monomial, entry.cmult});
        }
        out.push_back(std::move(slots));
    }
    return out;
}

Polynomial solve_series_monomial(const MonomialPdeSystem& S, const InitialData& data, int d) {
    if (d < 0) throw std::invalid_argument("truncation degree must be non-negative");
    const MonomialAnalysis analysis = compatibility_conditions_monomial(S);
    for (const MonomialCompatibility& c : analysis.conditions) {
        if (!c.holds) {
            std::ostringstream msg;
            msg << "compatibility condition fails for the x" << c.variable
                << "-prolongation of the equation at degree " << c.alpha.degree();
            throw CompatibilityFailure(c, msg.str());
        }
    }
    const MonomialPdeSystem& sys = analysis.completed;
    const MonomialSet U = leading_monomials(sys);
    const MultTable table = mult_table(U);
    const std::vector<TemplateSlot> slots = initial_condition_template(sys);

    if (data.size() != slots.size())
        throw std::invalid_argument("initial data does not match the template slots");
    std::vector<const Polynomial*> slot_data(slots.size(), nullptr);
    for (const auto& [beta, poly] : data) {
        bool placed = false;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (slots[k].beta != beta) continue;
            if (!poly.mentions_only(slots[k].cmult))
                throw std::invalid_argument(
                    "initial data polynomial mentions a non-multiplicative variable");
            slot_data[k] = &poly;
            placed = true;
            break;
        }
        if (!placed) throw std::invalid_argument("initial data for a non-existent slot");
    }
    for (const Polynomial* p : slot_data)
        if (p == nullptr) throw std::invalid_argument("missing initial data for a slot");

    const ComplementSet comp(U);
    Polynomial series(S.n);
    for (const Monomial& gamma : enumerate_up_to(S.n, d)) {
        Rational value;
        if (const auto divisor = janet_divisor(U, table, gamma)) {
            const Monomial delta = quotient(gamma, *divisor);
            value = rhs_of(sys, *divisor).multi_derivative(delta).constant_term();
        } else {
            const auto hits = comp.covering(gamma);
            if (hits.size() != 1) throw std::logic_error("cone/complement partition violated");
            const Monomial cofactor = quotient(gamma, hits.front()->monomial);
            std::size_t k = 0;
            while (slots[k].beta != hits.front()->monomial) ++k;
            value = slot_data[k]->multi_derivative(cofactor).constant_term();
        }
        if (value != 0) series = series + Polynomial::term(gamma, value / factorial_of(gamma));
    }
    return series;
}

}  // namespace janet
