#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "janet/complement.hpp"
#include "janet/janet_division.hpp"
#include "janet/order.hpp"
#include "janet/polynomial.hpp"

namespace janet {

struct LinearTerm {
    RationalFunction coeff;
    DerivativeSymbol sym;

    bool operator==(const LinearTerm&) const = default;
};

/// A linear combination of derivative symbols with rational-function
/// coefficients plus an inhomogeneous part.  Canonical form keeps the terms
/// sorted descending under the governing order with no zero coefficients.
struct LinearExpression {
    std::vector<LinearTerm> terms;
    RationalFunction constant;

    explicit LinearExpression(int arity) : constant(arity) {}
    LinearExpression(std::vector<LinearTerm> t, RationalFunction c)
        : terms(std::move(t)), constant(std::move(c)) {}

    bool is_zero() const { return terms.empty() && constant.is_zero(); }
    bool operator==(const LinearExpression&) const = default;
};

void canonicalize_expression(LinearExpression& e, const WeightOrder& order);
LinearExpression expr_add(const LinearExpression& a, const LinearExpression& b,
                          const WeightOrder& order);
LinearExpression expr_sub(const LinearExpression& a, const LinearExpression& b,
                          const WeightOrder& order);
LinearExpression expr_scale(const LinearExpression& a, const RationalFunction& c,
                            const WeightOrder& order);
/// d/dx_i with the product rule applied to every coefficient.
LinearExpression expr_derive(const LinearExpression& a, int var, const WeightOrder& order);
LinearExpression expr_derive_multi(const LinearExpression& a, const Monomial& u,
                                   const WeightOrder& order);

/// One solved equation D^alpha phi^r = rhs; every rhs symbol is strictly
/// anterior to the lead under the system's order.
struct PdeEquation {
    DerivativeSymbol lead;
    LinearExpression rhs;

    bool operator==(const PdeEquation&) const = default;
};

/// A finite solved-form linear PDE system with pairwise distinct leads.
/// Immutable after construction; operations return new systems.
struct PdeSystem {
    int n = 1;
    int m = 1;
    WeightOrder order;
    std::vector<PdeEquation> equations;  // descending by lead

    bool operator==(const PdeSystem&) const = default;
};

/// Validates and normalizes: canonical rhs, anteriority, distinct leads.
PdeSystem make_pde_system(int n, int m, WeightOrder order, std::vector<PdeEquation> equations);

MonomialSet leading_monomials(const PdeSystem& S, int unknown);

enum class Classification { Principal, Parametric };
Classification classify(const PdeSystem& S, const DerivativeSymbol& d);

/// Complete iff each per-unknown lead set is complete (unknowns without
/// equations are fully parametric and not checked).
bool is_complete_system(const PdeSystem& S);

PdeEquation differentiate_equation(const PdeEquation& e, int var, const WeightOrder& order);

enum class RewriteStrategy { GreatestFirst, SmallestFirst };

/// Rewrites symbols that have a Janet divisor among the leads until none is
/// left; confluent, so the strategy only affects the rewrite sequence.
LinearExpression j_reduce(const PdeSystem& S, LinearExpression e,
                          RewriteStrategy strategy = RewriteStrategy::GreatestFirst);

/// Full normal form on a complete system: no principal symbol remains.
/// Throws if a principal symbol lacks a Janet divisor (incomplete system).
LinearExpression normal_form(const PdeSystem& S, LinearExpression e,
                             RewriteStrategy strategy = RewriteStrategy::GreatestFirst);

struct IntegrabilityCondition {
    int unknown = 1;
    Monomial alpha;     // lead multi-index the condition originates from
    int variable = 0;   // the non-multiplicative variable
    LinearExpression residual;
    bool trivial = false;
};

/// One condition per (lead, non-multiplicative variable): the normal form of
/// the difference between the direct prolongation and the Janet-divisor
/// route.  Zero residuals are included, flagged trivial.
std::vector<IntegrabilityCondition> integrability_conditions(
    const PdeSystem& S, RewriteStrategy strategy = RewriteStrategy::GreatestFirst);

bool is_completely_integrable(const PdeSystem& S);

struct Incompatibility {
    LinearExpression witness;
    std::string note;
};

using SystemResult = std::variant<PdeSystem, Incompatibility>;

/// J-autoreduction: no lead is involutively reducible by the other leads of
/// its unknown, and every rhs is involutively irreducible.  Substitutions
/// preserve the solution constraints; a reduction ending in a non-zero
/// constant equation yields an Incompatibility.
SystemResult autoreduce(const PdeSystem& S);

/// Prolongs equations along the monomial completion trace of every lead set
/// until each one is complete.
PdeSystem complete_system(const PdeSystem& S);

struct CanonicalizeOutcome {
    SystemResult result;
    int rounds = 0;
};

/// Janet's canonicalization loop: solve each raw equation for its
/// posterior-most derivative, substitute, autoreduce, complete, adjoin
/// non-trivial integrability residuals, repeat to a fixed point.
CanonicalizeOutcome canonicalize(int n, int m, const WeightOrder& order,
                                 std::vector<LinearExpression> raw_equations);

/// -------- monomial PDE systems --------

/// Finitely many equations D^alpha phi = f_alpha with polynomial right-hand
/// sides; one unknown.
struct MonomialPdeSystem {
    int n = 1;
    std::vector<std::pair<Monomial, Polynomial>> equations;  // ascending deglex, distinct

    bool operator==(const MonomialPdeSystem&) const = default;
};

MonomialPdeSystem make_monomial_system(int n,
                                       std::vector<std::pair<Monomial, Polynomial>> equations);

MonomialSet leading_monomials(const MonomialPdeSystem& S);

/// Adjoins the derivative equations along the completion trace of lm(S).
MonomialPdeSystem complete_monomial_system(const MonomialPdeSystem& S);

struct MonomialCompatibility {
    int variable = 0;
    Monomial alpha;             // prolonged equation
    Monomial beta;              // Janet divisor of alpha*x_variable
    Monomial gamma;             // cofactor
    Polynomial lhs{1};          // d f_alpha / d x_variable
    Polynomial rhs{1};          // D^gamma f_beta
    bool holds = false;
};

struct MonomialAnalysis {
    MonomialPdeSystem completed;
    std::vector<MonomialCompatibility> conditions;
    bool all_hold = true;
};

/// Completes the system if needed, then checks d f_alpha / d x_i = D^gamma
/// f_beta for every non-multiplicative prolongation.
MonomialAnalysis compatibility_conditions_monomial(const MonomialPdeSystem& S);

struct TemplateSlot {
    Monomial beta;
    std::vector<int> cmult;

    bool operator==(const TemplateSlot&) const = default;
};

/// One slot per complementary monomial of the (complete) lead set.
std::vector<TemplateSlot> initial_condition_template(const MonomialPdeSystem& S);
/// Per-unknown slots; an unknown without equations is fully parametric and
/// gets the single slot (identity, all variables).
std::vector<std::vector<TemplateSlot>> initial_condition_template(const PdeSystem& S);

/// Assignment of a polynomial (in exactly the slot's cmult variables) to
/// each template slot.
using InitialData = std::vector<std::pair<Monomial, Polynomial>>;

class CompatibilityFailure : public std::runtime_error {
public:
    CompatibilityFailure(MonomialCompatibility condition, const std::string& message)
        : std::runtime_error(message), condition_(std::move(condition)) {}
    const MonomialCompatibility& condition() const { return condition_; }

private:
    MonomialCompatibility condition_;
};

/// Truncated Taylor expansion at the origin of the unique solution, to total
/// degree d.  Requires the completed system's compatibility conditions to
/// hold and the data to match the template slot for slot.
Polynomial solve_series_monomial(const MonomialPdeSystem& S, const InitialData& data, int d);

}  // namespace janet
