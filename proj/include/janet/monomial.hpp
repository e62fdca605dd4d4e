#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace janet {

/// A monomial x_1^a1 ... x_n^an stored as its exponent vector.
/// Variable indices are 1-based throughout; exponent position i stores deg_i.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial identity(int arity);
    static Monomial variable(int arity, int i);

    int arity() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    /// deg_i(u), 1 <= i <= arity.
    int deg(int i) const;
    bool is_identity() const { return degree() == 0; }
    const std::vector<int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& other) const;
    Monomial times_var(int i) const;

    bool operator==(const Monomial& other) const = default;

private:
    std::vector<int> exps_;
};

/// true iff u divides w componentwise.
bool divides(const Monomial& u, const Monomial& w);
/// w / u componentwise; u must divide w.
Monomial quotient(const Monomial& w, const Monomial& u);

/// Degree-lexicographic comparison, total degree first, ties broken by the
/// first non-zero difference among a_n - b_n, a_{n-1} - b_{n-1}, ..., a_1 - b_1
/// (positive means a is the larger, "posterior", element).
/// Returns -1, 0 or +1.
int compare_deglex(const Monomial& a, const Monomial& b);
bool deglex_less(const Monomial& a, const Monomial& b);

/// A finite set of distinct monomials of common arity.
/// Iteration order is canonical: ascending deglex.
class MonomialSet {
public:
    explicit MonomialSet(int arity);
    explicit MonomialSet(std::vector<Monomial> members);
    MonomialSet(int arity, std::vector<Monomial> members);

    int arity() const { return arity_; }
    bool empty() const { return members_.empty(); }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<Monomial>& members() const { return members_; }
    const Monomial& at(int idx) const { return members_.at(idx); }

    bool contains(const Monomial& m) const;
    /// Index of m in canonical order, or -1.
    int index_of(const Monomial& m) const;

    void insert(const Monomial& m);
    MonomialSet with(const Monomial& m) const;

    /// Largest total degree over the members; set must be non-empty.
    int max_degree() const;

    bool operator==(const MonomialSet& other) const = default;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    int arity_ = 0;
    std::vector<Monomial> members_;  // ascending deglex, unique
};

/// deg_i(U) = max over u in U of deg_i(u); U must be non-empty.
int deg_i_set(const MonomialSet& U, int i);

/// All C(n+d, n) monomials of arity n and total degree <= d, canonical order.
MonomialSet enumerate_up_to(int n, int d);

/// C(n, k) in exact 64-bit arithmetic (desk-scale arguments).
std::uint64_t binomial(int n, int k);

}  // namespace janet
