#include "janet/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace janet {

Polynomial::Polynomial(int arity) : arity_(arity) {
    if (arity < 1) throw std::invalid_argument("polynomial arity must be at least 1");
}

Polynomial::Polynomial(int arity, const Rational& constant) : Polynomial(arity) {
    if (constant != 0) terms_.emplace_back(Monomial::identity(arity), constant);
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
    Polynomial p(m.arity());
    if (c != 0) p.terms_.emplace_back(std::move(m), c);
    return p;
}

Polynomial Polynomial::variable(int arity, int i) {
    return term(Monomial::variable(arity, i), 1);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_identity());
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : terms_.back().first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& t, const Monomial& key) {
                                   return deglex_less(t.first, key);
                               });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

Rational Polynomial::constant_term() const {
    return coefficient(Monomial::identity(arity_));
}

const std::pair<Monomial, Rational>& Polynomial::leading() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    return terms_.back();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& t, const Monomial& key) {
                                   return deglex_less(t.first, key);
                               });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.emplace(it, m, c);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    Polynomial out(*this);
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    Polynomial out(*this);
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    std::map<Monomial, Rational, decltype(&deglex_less)> acc(&deglex_less);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) acc[ma * mb] += ca * cb;
    Polynomial out(arity_);
    for (auto& [m, c] : acc)
        if (c != 0) out.terms_.emplace_back(m, std::move(c));
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(arity_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [m, coeff] : out.terms_) coeff *= c;
    return out;
}

Polynomial Polynomial::derivative(int i) const {
    Polynomial out(arity_);
    for (const auto& [m, c] : terms_) {
        const int e = m.deg(i);
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        --exps[static_cast<std::size_t>(i - 1)];
        out.add_term(Monomial(std::move(exps)), c * e);
    }
    return out;
}

Polynomial Polynomial::multi_derivative(const Monomial& u) const {
    Polynomial out(*this);
    for (int i = 1; i <= u.arity(); ++i)
        for (int k = 0; k < u.deg(i); ++k) out = out.derivative(i);
    return out;
}

Polynomial Polynomial::at_zero(std::span<const int> vars) const {
    Polynomial out(arity_);
    for (const auto& [m, c] : terms_) {
        bool keep = true;
        for (int i : vars)
            if (m.deg(i) > 0) { keep = false; break; }
        if (keep) out.add_term(m, c);
    }
    return out;
}

Polynomial Polynomial::truncated(int bound) const {
    Polynomial out(arity_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= bound) out.terms_.emplace_back(m, c);
    return out;
}

bool Polynomial::mentions_only(std::span<const int> vars) const {
    for (const auto& [m, c] : terms_)
        for (int i = 1; i <= arity_; ++i)
            if (m.deg(i) > 0 && std::find(vars.begin(), vars.end(), i) == vars.end())
                return false;
    return true;
}

int Polynomial::deg_in(int i) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg(i));
    return d;
}

namespace {

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.leading().second);
}

// coefficient of x_k^j, as a polynomial with the same arity but x_k erased
Polynomial coeff_in(const Polynomial& p, int k, int j) {
    Polynomial out(p.arity());
    for (const auto& [m, c] : p.terms()) {
        if (m.deg(k) != j) continue;
        std::vector<int> exps = m.exponents();
        exps[static_cast<std::size_t>(k - 1)] = 0;
        out = out + Polynomial::term(Monomial(std::move(exps)), c);
    }
    return out;
}

Polynomial xk_power(int arity, int k, int j) {
    std::vector<int> exps(static_cast<std::size_t>(arity), 0);
    exps[static_cast<std::size_t>(k - 1)] = j;
    return Polynomial::term(Monomial(std::move(exps)), 1);
}

// pseudo-remainder of a by b viewed as univariate in x_k
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int k) {
    const int db = b.deg_in(k);
    const Polynomial lcb = coeff_in(b, k, db);
    while (!a.is_zero() && a.deg_in(k) >= db) {
        const int da = a.deg_in(k);
        const Polynomial lca = coeff_in(a, k, da);
        a = a * lcb - lca * xk_power(a.arity(), k, da - db) * b;
    }
    return a;
}

Polynomial content_in(const Polynomial& p, int k) {
    Polynomial cont(p.arity());
    for (int j = 0; j <= p.deg_in(k); ++j) {
        const Polynomial c = coeff_in(p, k, j);
        if (c.is_zero()) continue;
        cont = poly_gcd(cont, c);
        if (cont.is_constant() && !cont.is_zero()) break;
    }
    return cont;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    int k = 0;
    for (int i = a.arity(); i >= 1; --i)
        if (a.deg_in(i) > 0 || b.deg_in(i) > 0) { k = i; break; }
    if (k == 0) return Polynomial(a.arity(), 1);  // both constant

    const Polynomial cont_a = content_in(a, k);
    const Polynomial cont_b = content_in(b, k);
    Polynomial f = divide_exact(a, cont_a);
    Polynomial g = divide_exact(b, cont_b);
    if (f.deg_in(k) < g.deg_in(k)) std::swap(f, g);
    while (!g.is_zero()) {
        Polynomial r = pseudo_remainder(f, g, k);
        f = std::move(g);
        if (r.is_zero()) {
            g = std::move(r);
        } else {
            g = divide_exact(r, content_in(r, k));
        }
    }
    return make_monic(poly_gcd(cont_a, cont_b) * f);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    Polynomial q(f.arity());
    Polynomial r = f;
    const auto& [gm, gc] = g.leading();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        if (!divides(gm, rm)) throw std::invalid_argument("inexact polynomial division");
        const Polynomial t = Polynomial::term(quotient(rm, gm), rc / gc);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

RationalFunction::RationalFunction(int arity)
    : num_(arity), den_(arity, 1) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(num_.arity(), 1) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.arity() != den_.arity()) throw std::invalid_argument("arity mismatch");
    normalize();
}

RationalFunction RationalFunction::constant(int arity, const Rational& c) {
    return RationalFunction(Polynomial(arity, c));
}

bool RationalFunction::is_polynomial() const {
    return den_ == Polynomial(arity(), 1);
}

bool RationalFunction::is_constant() const {
    return num_.is_constant() && is_polynomial();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(arity(), 1);
        return;
    }
    const Polynomial g = poly_gcd(num_, den_);
    if (!(g.is_constant() && g.constant_term() == 1)) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    const Rational lc = den_.leading().second;
    if (lc != 1) {
        num_ = num_.scaled(Rational(1) / lc);
        den_ = den_.scaled(Rational(1) / lc);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out(*this);
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
    return RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
    return RationalFunction(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
    return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
    if (other.is_zero()) throw std::invalid_argument("division by zero");
    return RationalFunction(num_ * other.den_, den_ * other.num_);
}

RationalFunction RationalFunction::derivative(int i) const {
    return RationalFunction(num_.derivative(i) * den_ - num_ * den_.derivative(i),
                            den_ * den_);
}

Rational RationalFunction::eval_origin() const {
    const Rational d = den_.constant_term();
    if (d == 0) throw std::invalid_argument("pole at the origin");
    return num_.constant_term() / d;
}

}  // namespace janet
