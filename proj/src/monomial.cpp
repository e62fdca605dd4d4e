#include "janet/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace janet {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw std::invalid_argument("monomial arity must be at least 1");
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("monomial exponents must be non-negative");
}

Monomial Monomial::identity(int arity) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(arity), 0));
}

Monomial Monomial::variable(int arity, int i) {
    Monomial m = identity(arity);
    if (i < 1 || i > arity) throw std::out_of_range("variable index out of range");
    m.exps_[static_cast<std::size_t>(i - 1)] = 1;
    return m;
}

int Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

int Monomial::deg(int i) const {
    if (i < 1 || i > arity()) throw std::out_of_range("variable index out of range");
    return exps_[static_cast<std::size_t>(i - 1)];
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (arity() != other.arity()) throw std::invalid_argument("arity mismatch");
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::times_var(int i) const {
    if (i < 1 || i > arity()) throw std::out_of_range("variable index out of range");
    std::vector<int> e(exps_);
    ++e[static_cast<std::size_t>(i - 1)];
    return Monomial(std::move(e));
}

bool divides(const Monomial& u, const Monomial& w) {
    if (u.arity() != w.arity()) throw std::invalid_argument("arity mismatch");
    for (int i = 1; i <= u.arity(); ++i)
        if (u.deg(i) > w.deg(i)) return false;
    return true;
}

Monomial quotient(const Monomial& w, const Monomial& u) {
    if (!divides(u, w)) throw std::invalid_argument("quotient of a non-multiple");
    std::vector<int> e(static_cast<std::size_t>(w.arity()));
    for (int i = 1; i <= w.arity(); ++i)
        e[static_cast<std::size_t>(i - 1)] = w.deg(i) - u.deg(i);
    return Monomial(std::move(e));
}

int compare_deglex(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = a.arity(); i >= 1; --i) {
        const int d = a.deg(i) - b.deg(i);
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
}

bool deglex_less(const Monomial& a, const Monomial& b) {
    return compare_deglex(a, b) < 0;
}

MonomialSet::MonomialSet(int arity) : arity_(arity) {
    if (arity < 1) throw std::invalid_argument("set arity must be at least 1");
}

MonomialSet::MonomialSet(std::vector<Monomial> members) {
    if (members.empty())
        throw std::invalid_argument("cannot infer arity from an empty member list");
    arity_ = members.front().arity();
    members_ = std::move(members);
    for (const Monomial& m : members_)
        if (m.arity() != arity_) throw std::invalid_argument("mixed arities in monomial set");
    std::sort(members_.begin(), members_.end(), deglex_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

MonomialSet::MonomialSet(int arity, std::vector<Monomial> members) : MonomialSet(arity) {
    for (Monomial& m : members) insert(m);
}

bool MonomialSet::contains(const Monomial& m) const {
    return index_of(m) >= 0;
}

int MonomialSet::index_of(const Monomial& m) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), m, deglex_less);
    if (it != members_.end() && *it == m) return static_cast<int>(it - members_.begin());
    return -1;
}

void MonomialSet::insert(const Monomial& m) {
    if (m.arity() != arity_) throw std::invalid_argument("mixed arities in monomial set");
    auto it = std::lower_bound(members_.begin(), members_.end(), m, deglex_less);
    if (it != members_.end() && *it == m) return;
    members_.insert(it, m);
}

MonomialSet MonomialSet::with(const Monomial& m) const {
    MonomialSet copy(*this);
    copy.insert(m);
    return copy;
}

int MonomialSet::max_degree() const {
    if (empty()) throw std::invalid_argument("max_degree of an empty set");
    // canonical order is degree-first, so the last member carries the maximum
    return members_.back().degree();
}

int deg_i_set(const MonomialSet& U, int i) {
    if (U.empty()) throw std::invalid_argument("deg_i of an empty set");
    int best = 0;
    for (const Monomial& u : U) best = std::max(best, u.deg(i));
    return best;
}

namespace {

void enumerate_rec(int n, int d, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.emplace_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur.push_back(e);
        enumerate_rec(n, d - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MonomialSet enumerate_up_to(int n, int d) {
    if (n < 1) throw std::invalid_argument("arity must be at least 1");
    if (d < 0) throw std::invalid_argument("degree bound must be non-negative");
    std::vector<Monomial> all;
    all.reserve(binomial(n + d, n));
    std::vector<int> cur;
    enumerate_rec(n, d, cur, all);
    return MonomialSet(std::move(all));
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

}  // namespace janet
