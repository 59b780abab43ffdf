#ifndef SHEAFBETTI_MOTIVIC_HPP
#define SHEAFBETTI_MOTIVIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sheafbetti/goettsche.hpp"
#include "sheafbetti/hypotheses.hpp"
#include "sheafbetti/surface.hpp"

namespace sheafbetti {

/// Replacement of chi by an equivalent chi0 in [K.L, 0).
///
/// chi ~ chi' when +-chi = chi' modulo some pairing L^.L; the pairings
/// form the subgroup generated by `modulus` = gcd of L.B over a basis B.
/// Among the legal representatives, chi0 maximises
/// min{rho, -chi0, chi0 - K.L}; ties go to the largest chi0.
struct ChiNormalization {
    std::int64_t chi_in = 0;
    std::int64_t modulus = 0;
    std::int64_t k_dot_l = 0;
    std::int64_t rho = 0;
    std::vector<std::int64_t> candidates;  // descending
    std::int64_t chi0 = 0;
    std::int64_t window_value = 0;
};

// min{rho, -chi0, chi0 - K.L}
std::int64_t window_value(std::int64_t rho, std::int64_t chi0, std::int64_t k_dot_l) noexcept;

// Requires K.L < 0 and rho > 0 (DomainError otherwise). Throws
// InapplicableError("chi_normalization") when no representative exists.
ChiNormalization normalize_chi(const Surface& s, const DivisorClass& l, std::int64_t chi, std::int64_t rho);

struct MotivicShift {
    std::int64_t dtilde = 0;              // L.(L+K)/2 - chi0, colength of the matched ideal sheaves
    std::int64_t shift_m = 0;             // -K.L + 1 + 2 chi0, the power of the Lefschetz class
    std::int64_t scheme_valid_codim = 0;  // L^2 + 1 - window
    std::int64_t valid_degree_min = 0;    // 1 + 2 * scheme_valid_codim
    std::int64_t top_degree = 0;          // 2 (L^2 + 1)
};

// Throws InvariantViolation if 2 m + 4 dtilde != 2 (L^2 + 1) or dtilde < 0.
MotivicShift shift(const Surface& s, const DivisorClass& l, const ChiNormalization& norm);

struct VirtualBettiFlags {
    std::optional<bool> fine_moduli;
    bool smoothness_assumed = true;  // the reflected table presumes a smooth projective moduli space
    bool virtual_only = false;       // numbers are virtual; no fine moduli guarantee
    bool strictly_semistable_note = false;
    RationalityFlag rationality = RationalityFlag::Unknown;
    IrreducibilityReason irreducible = IrreducibilityReason::Unknown;
};

/// Virtual Betti numbers of M^ss(L, chi) on the controlled range of degrees.
///
/// For degrees i >= valid_degree_min, b^v_i(M) = b_{i - 2m}(Hilb^[dtilde]).
/// The reflected table mirrors those through i -> top - i, which is the
/// low-degree presentation valid when M is smooth projective.
struct VirtualBettiReport {
    Surface surface = Surface::projective_plane();
    DivisorClass l;
    std::int64_t chi = 0;
    std::int64_t self_intersection = 0;
    ChiNormalization normalization;
    MotivicShift shift;
    std::map<std::int64_t, BigInt> raw_high;       // degree -> b^v, valid_degree_min .. top
    std::map<std::int64_t, BigInt> reflected_low;  // degree -> b, 0 .. top - valid_degree_min
    VirtualBettiFlags flags;

    std::int64_t reflected_max_degree() const noexcept { return shift.top_degree - shift.valid_degree_min; }

    // nullopt outside the controlled range ("uncontrolled", not zero).
    std::optional<BigInt> high(std::int64_t degree) const;
    std::optional<BigInt> low(std::int64_t degree) const;

    // h^{p,q} = b_{p+q} delta_{p,q} on the controlled ranges.
    std::optional<BigInt> hodge_high(std::int64_t p, std::int64_t q) const;
    std::optional<BigInt> hodge_low(std::int64_t p, std::int64_t q) const;
};

// Throws InapplicableError naming the failed hypothesis when the main
// formula does not apply. `cache` may be shared across threads.
VirtualBettiReport virtual_betti(const Surface& s, const DivisorClass& l, std::int64_t chi, HilbCache* cache = nullptr);

struct ChiComparison {
    bool agree = true;
    std::int64_t common_min_degree = 0;  // compared raw degrees: common_min_degree .. top
    std::optional<std::int64_t> first_divergence;
};

ChiComparison compare_reports(const VirtualBettiReport& a, const VirtualBettiReport& b);

// Runs the pipeline for both chi values and compares the common window.
ChiComparison chi_independence_check(const Surface& s, const DivisorClass& l, std::int64_t chi1, std::int64_t chi2,
                                     HilbCache* cache = nullptr);

}  // namespace sheafbetti

#endif  // SHEAFBETTI_MOTIVIC_HPP
