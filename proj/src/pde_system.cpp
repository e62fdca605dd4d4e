#include <algorithm>
#include <map>

#include "janet/pde.hpp"

namespace janet {

void canonicalize_expression(LinearExpression& e, const WeightOrder& order) {
    std::sort(e.terms.begin(), e.terms.end(), [&](const LinearTerm& a, const LinearTerm& b) {
        return order.compare(a.sym, b.sym) > 0;
    });
    std::vector<LinearTerm> merged;
    for (LinearTerm& t : e.terms) {
        if (!merged.empty() && merged.back().sym == t.sym) {
            merged.back().coeff = merged.back().coeff + t.coeff;
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else if (!t.coeff.is_zero()) {
            merged.push_back(std::move(t));
        }
    }
    e.terms = std::move(merged);
}

LinearExpression expr_add(const LinearExpression& a, const LinearExpression& b,
                          const WeightOrder& order) {
    LinearExpression out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    out.constant = out.constant + b.constant;
    canonicalize_expression(out, order);
    return out;
}

LinearExpression expr_sub(const LinearExpression& a, const LinearExpression& b,
                          const WeightOrder& order) {
    return expr_add(a, expr_scale(b, RationalFunction::constant(b.constant.arity(), -1), order),
                    order);
}

LinearExpression expr_scale(const LinearExpression& a, const RationalFunction& c,
                            const WeightOrder& order) {
    LinearExpression out(a.constant.arity());
    if (c.is_zero()) return out;
    out.constant = a.constant * c;
    out.terms.reserve(a.terms.size());
    for (const LinearTerm& t : a.terms) out.terms.push_back({t.coeff * c, t.sym});
    canonicalize_expression(out, order);
    return out;
}

LinearExpression expr_derive(const LinearExpression& a, int var, const WeightOrder& order) {
    LinearExpression out(a.constant.arity());
    out.constant = a.constant.derivative(var);
    for (const LinearTerm& t : a.terms) {
        out.terms.push_back({t.coeff.derivative(var), t.sym});
        out.terms.push_back({t.coeff, {t.sym.unknown, t.sym.alpha.times_var(var)}});
    }
    canonicalize_expression(out, order);
    return out;
}

LinearExpression expr_derive_multi(const LinearExpression& a, const Monomial& u,
                                   const WeightOrder& order) {
    LinearExpression out = a;
    for (int i = 1; i <= u.arity(); ++i)
        for (int k = 0; k < u.deg(i); ++k) out = expr_derive(out, i, order);
    return out;
}

PdeSystem make_pde_system(int n, int m, WeightOrder order, std::vector<PdeEquation> equations) {
    if (order.arity() != n || order.unknown_count() != m)
        throw std::invalid_argument("order dimensions do not match the system");
    for (PdeEquation& e : equations) {
        if (e.lead.alpha.arity() != n || e.lead.unknown < 1 || e.lead.unknown > m)
            throw std::invalid_argument("equation lead does not fit the system dimensions");
        canonicalize_expression(e.rhs, order);
        for (const LinearTerm& t : e.rhs.terms) {
            if (t.sym.alpha.arity() != n || t.sym.unknown < 1 || t.sym.unknown > m)
                throw std::invalid_argument("rhs symbol does not fit the system dimensions");
            if (order.compare(t.sym, e.lead) >= 0)
                throw std::invalid_argument("rhs symbol not anterior to its lead");
        }
    }
    std::sort(equations.begin(), equations.end(), [&](const PdeEquation& a, const PdeEquation& b) {
        return order.compare(a.lead, b.lead) > 0;
    });
    for (std::size_t i = 1; i < equations.size(); ++i)
        if (equations[i - 1].lead == equations[i].lead)
            throw std::invalid_argument("duplicate equation leads");
    return PdeSystem{n, m, std::move(order), std::move(equations)};
}

MonomialSet leading_monomials(const PdeSystem& S, int unknown) {
    if (unknown < 1 || unknown > S.m) throw std::invalid_argument("unknown index out of range");
    MonomialSet out(S.n);
    for (const PdeEquation& e : S.equations)
        if (e.lead.unknown == unknown) out.insert(e.lead.alpha);
    return out;
}

Classification classify(const PdeSystem& S, const DerivativeSymbol& d) {
    const MonomialSet leads = leading_monomials(S, d.unknown);
    return in_cone(leads, d.alpha) ? Classification::Principal : Classification::Parametric;
}

bool is_complete_system(const PdeSystem& S) {
    for (int r = 1; r <= S.m; ++r) {
        const MonomialSet leads = leading_monomials(S, r);
        if (!leads.empty() && !is_complete(leads)) return false;
    }
    return true;
}

PdeEquation differentiate_equation(const PdeEquation& e, int var, const WeightOrder& order) {
    return PdeEquation{{e.lead.unknown, e.lead.alpha.times_var(var)},
                       expr_derive(e.rhs, var, order)};
}

}  // namespace janet
