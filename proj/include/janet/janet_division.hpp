#pragma once

#include <optional>
#include <vector>

#include "janet/monomial.hpp"

namespace janet {

/// Per-monomial assignment of multiplicative variables relative to a finite
/// set U.  For each u in U the variables {1..n} are partitioned into
/// multiplicative and non-multiplicative ones:
///   x_n is multiplicative for u iff deg_n(u) = deg_n(U);
///   x_i (i < n) is multiplicative for u iff deg_i(u) equals the largest
///   deg_i over the members of U sharing u's exponents in positions i+1..n.
class MultTable {
public:
    MultTable(MonomialSet set, std::vector<std::uint32_t> masks);

    const MonomialSet& set() const { return set_; }
    bool is_multiplicative(const Monomial& u, int i) const;
    std::vector<int> multiplicative(const Monomial& u) const;
    std::vector<int> non_multiplicative(const Monomial& u) const;
    std::uint32_t mask_at(int idx) const { return masks_.at(idx); }

private:
    MonomialSet set_;
    std::vector<std::uint32_t> masks_;  // bit i-1 set iff x_i multiplicative
};

MultTable mult_table(const MonomialSet& U);

/// Members of U whose exponents in positions n-|suffix|+1 .. n equal `suffix`.
/// An empty suffix selects all of U.
MonomialSet janet_class(const MonomialSet& U, std::span<const int> suffix);

/// The unique u in U with w = u*v and v built from multiplicative variables
/// of u, if any.  Involutive cones of distinct members never overlap, so a
/// divisor, when it exists, is unique regardless of completeness.
std::optional<Monomial> janet_divisor(const MonomialSet& U, const MultTable& table,
                                      const Monomial& w);

bool in_involutive_cone(const MonomialSet& U, const MultTable& table, const Monomial& w);
/// Classical membership: some u in U divides w.
bool in_cone(const MonomialSet& U, const Monomial& w);

/// Inductive construction of cone(U) truncated to total degree <= d, built
/// level by level in the last variable from the per-level prefix sets.
MonomialSet cone_inductive(const MonomialSet& U, int d);

/// U is complete iff every product of a member by one of its
/// non-multiplicative variables already has a Janet divisor in U.
bool is_complete(const MonomialSet& U);

struct CompletionStep {
    Monomial added;
    Monomial source;
    int variable = 0;

    bool operator==(const CompletionStep&) const = default;
};

struct CompletionTrace {
    std::vector<CompletionStep> steps;
    MonomialSet result;
};

/// Completion: repeatedly adjoin the deglex-smallest uncovered product
/// u*x_i until the set is complete.  The result contains U and has the same
/// classical cone.  Termination is guarded by an iteration cap of
/// 10*(deg(U)+1)^n; exceeding it raises an internal error.
CompletionTrace complete(const MonomialSet& U);

}  // namespace janet
