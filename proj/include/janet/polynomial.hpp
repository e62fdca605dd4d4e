#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "janet/monomial.hpp"

namespace janet {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sparse multivariate polynomial over exact rationals.  Terms are kept in
/// ascending deglex order with no zero coefficients, so equal polynomials
/// are representation-equal.
class Polynomial {
public:
    explicit Polynomial(int arity);
    Polynomial(int arity, const Rational& constant);
    static Polynomial term(Monomial m, const Rational& c);
    static Polynomial variable(int arity, int i);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    /// Greatest term under deglex; polynomial must be non-zero.
    const std::pair<Monomial, Rational>& leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& c) const;

    Polynomial derivative(int i) const;
    Polynomial multi_derivative(const Monomial& u) const;
    /// Substitute 0 for every variable listed in vars.
    Polynomial at_zero(std::span<const int> vars) const;
    /// Drop all terms of total degree > bound.
    Polynomial truncated(int bound) const;
    /// true iff every term's variables lie within vars.
    bool mentions_only(std::span<const int> vars) const;
    int deg_in(int i) const;

    bool operator==(const Polynomial&) const = default;

private:
    void add_term(const Monomial& m, const Rational& c);

    int arity_ = 1;
    std::vector<std::pair<Monomial, Rational>> terms_;
};

/// Monic gcd under deglex (primitive pseudo-remainder sequences, recursing
/// on the highest occurring variable).  gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
/// Quotient f/g for exact multiples; throws if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// A reduced fraction of two polynomials: denominator non-zero and monic,
/// fraction in lowest terms, so equality is syntactic.
class RationalFunction {
public:
    explicit RationalFunction(int arity);
    RationalFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial numerator, Polynomial denominator);
    static RationalFunction constant(int arity, const Rational& c);

    int arity() const { return num_.arity(); }
    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    bool is_constant() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& other) const;
    RationalFunction operator-(const RationalFunction& other) const;
    RationalFunction operator*(const RationalFunction& other) const;
    /// Division by a non-zero rational function.
    RationalFunction operator/(const RationalFunction& other) const;

    RationalFunction derivative(int i) const;
    /// Value at the origin; throws when the denominator vanishes there.
    Rational eval_origin() const;

    bool operator==(const RationalFunction&) const = default;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

}  // namespace janet
