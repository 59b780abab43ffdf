#ifndef SHEAFBETTI_BOUNDS_HPP
#define SHEAFBETTI_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sheafbetti/surface.hpp"

namespace sheafbetti {

struct BoundEntry {
    std::string name;
    std::string formula;  // the expression with its numbers substituted
    bool applicable = false;
    std::string note;     // why it (does not) apply
    std::int64_t value = 0;
};

struct BoundReport {
    std::int64_t stack_dim = 0;   // L^2
    std::int64_t scheme_dim = 0;  // L^2 + 1
    std::optional<std::int64_t> rho;
    std::optional<std::int64_t> claimed;  // L^2 - rho
    bool moduli_empty = false;            // L^2 < 0, every bound is vacuous
    std::vector<BoundEntry> entries;
    // Every applicable entry is <= claimed. Empty when there is no claim.
    std::optional<bool> audit;

    const BoundEntry* find(const std::string& name) const;
};

/// Dimension bounds for the loci of sheaves whose support is not integral:
/// reducible supports (L^2 - s_L), multiple supports kC for every k | n,
/// the rank-2 stratum (L^2 + K.L + 1) and the rank >= 3 stratum (L^2 - 7).
/// Requires L effective (DomainError otherwise). chi does not enter the
/// values; it is accepted so callers can pass a full (L, chi) cell.
BoundReport strata_bounds(const Surface& s, const DivisorClass& l, std::int64_t chi);

/// Bounds used when comparing the sheaf stack with the Hilbert scheme
/// stack H^[dtilde], evaluated at the extremal indices (i = 0, 1, k = 1,
/// Delta = -chi0) together with the total bad-locus dimension
/// L^2 - min{rho, -chi0, chi0 - K.L}.
BoundReport hilb_strata_bounds(const Surface& s, const DivisorClass& l, std::int64_t chi0, std::int64_t rho);

// Every applicable strata bound is <= L^2 - rho. Throws InapplicableError
// when the codimension statement (and hence rho) is unavailable.
bool audit_codimension(const Surface& s, const DivisorClass& l, std::int64_t chi);

}  // namespace sheafbetti

#endif  // SHEAFBETTI_BOUNDS_HPP
