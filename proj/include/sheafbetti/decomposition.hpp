#ifndef SHEAFBETTI_DECOMPOSITION_HPP
#define SHEAFBETTI_DECOMPOSITION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sheafbetti/surface.hpp"

namespace sheafbetti {

/// A way of writing L as a sum of at least two effective classes, each
/// strictly between 0 and L. Parts are kept in descending lexicographic
/// order so equal multisets compare equal.
struct Decomposition {
    std::vector<DivisorClass> parts;

    // sum_{i<j} L_i.L_j
    std::int64_t pairwise_sum(const Surface& s) const;
    // sum_k L_k^2
    std::int64_t square_sum(const Surface& s) const;
    std::string to_string() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

using PartFilter = std::function<bool(const DivisorClass&)>;

/// Streams every multiset decomposition of L exactly once.
///
/// Candidate parts are the proper effective subclasses of L accepted by the
/// filter, sorted descending. A decomposition is a non-increasing sequence
/// of candidates; the enumerator walks that tree depth first with an
/// explicit stack, so it holds O(depth) state and yields lazily.
class DecompositionStream {
public:
    // Throws DomainError if L is not effective.
    DecompositionStream(const Surface& s, const DivisorClass& l, PartFilter filter = {});

    // Next decomposition, or nullopt once exhausted.
    std::optional<Decomposition> next();

    const std::vector<DivisorClass>& candidates() const noexcept { return candidates_; }

private:
    bool fits(std::size_t idx) const;
    std::optional<std::size_t> first_fit(std::size_t from) const;

    Surface surface_;
    DivisorClass target_;
    std::vector<DivisorClass> candidates_;
    std::vector<std::size_t> stack_;
    DivisorClass remaining_;
    bool started_ = false;
    bool done_ = false;
};

// Collects the full stream. Convenience for tests and small inputs.
std::vector<Decomposition> decompositions(const Surface& s, const DivisorClass& l, const PartFilter& filter = {});

/// The minimum of sum_{i<j} L_i.L_j over decompositions of L.
///
/// `value` is empty when L admits no decomposition at all; treat that as
/// +infinity (it compares above every integer).
struct SParam {
    std::optional<std::int64_t> value;
    std::optional<Decomposition> witness;

    bool infinite() const noexcept { return !value.has_value(); }
    bool at_least(std::int64_t bound) const noexcept { return infinite() || *value >= bound; }
    std::string to_string() const;
};

// Throws DomainError for non-effective or zero L. Throws InvariantViolation
// if the two objective formulas disagree on any decomposition.
SParam s_param(const Surface& s, const DivisorClass& l);

// Same minimisation, every part required to have an integral member.
// On these surfaces the restricted and unrestricted minima agree; a
// mismatch throws InvariantViolation.
SParam s_param_restricted(const Surface& s, const DivisorClass& l);

// Whether s_L > 0. Expected to hold for every L with an integral member on
// these surfaces. Throws InapplicableError when |L|^int is empty.
bool positivity_check(const Surface& s, const DivisorClass& l);

}  // namespace sheafbetti

#endif  // SHEAFBETTI_DECOMPOSITION_HPP
