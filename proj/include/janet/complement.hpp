#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "janet/janet_division.hpp"
#include "janet/monomial.hpp"

namespace janet {

struct ComplementEntry {
    Monomial monomial;
    int level = 0;               // the unique i with the entry in the level-i stratum
    std::vector<int> cmult;      // multiplicative variables of the entry

    bool operator==(const ComplementEntry&) const = default;
};

/// Complementary monomials of a finite set: finitely many monomials, each
/// with its own multiplicative variables, whose involutive cones partition
/// the complement of cone(U).
///
/// The stratum formulas partition the complement only when the set is
/// complete (for U = {x1, x2^2} the raw formulas would cover x1*x2 twice),
/// so the decomposition is taken over the completion J(U), which has the
/// same cone and hence the same complement.
class ComplementSet {
public:
    explicit ComplementSet(const MonomialSet& U);

    const std::vector<ComplementEntry>& entries() const { return entries_; }
    const MonomialSet& completed_set() const { return completed_; }

    /// Entries whose involutive cone contains w (0 or 1 of them when the
    /// partition invariant holds).
    std::vector<const ComplementEntry*> covering(const Monomial& w) const;

private:
    MonomialSet completed_;
    std::vector<ComplementEntry> entries_;
};

ComplementSet complementary_set(const MonomialSet& U);

struct InCone {
    Monomial divisor;
    bool operator==(const InCone&) const = default;
};
struct InComplement {
    ComplementEntry entry;
    bool operator==(const InComplement&) const = default;
};
using LocateResult = std::variant<InCone, InComplement>;

/// Decide which side of the cone/complement partition w falls on.
/// Raises an internal error if w is covered by both sides or neither
/// (a partition violation, which must never occur).
LocateResult locate(const MonomialSet& U, const Monomial& w);

/// Number of monomials of degree exactly d outside cone(U), computed by
/// summing closed-form counts over the complementary decomposition.
std::uint64_t hilbert_function(const MonomialSet& U, int d);

}  // namespace janet
