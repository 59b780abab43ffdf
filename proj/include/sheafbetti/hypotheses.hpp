#ifndef SHEAFBETTI_HYPOTHESES_HPP
#define SHEAFBETTI_HYPOTHESES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sheafbetti/decomposition.hpp"
#include "sheafbetti/surface.hpp"

namespace sheafbetti {

bool is_prime(std::int64_t n) noexcept;

// Which clause guarantees that sheaves with non-integral support have
// positive codimension rho_L. Checked in this order; the first match wins.
enum class CodimensionCondition {
    SmallMultiple,       // n = 1 or 2
    PrimeMultiple,       // n prime, |L'|^int empty or g(L') = 0
    TwicePrimeMultiple,  // n = 2p, both L' and 2L' pass the prime clause
    AmpleTwist,          // an ample H with (H + K).L'' <= 0 on 0 < L'' <= L, (H + K).L < 0
    None,
};

std::string_view to_string(CodimensionCondition c) noexcept;

struct ConditionResult {
    CodimensionCondition condition = CodimensionCondition::None;
    std::string evidence;      // why the chosen clause holds
    std::string failed_check;  // set when condition == None
};

enum class IrreducibilityReason { Primitive, MultipleCriterion, Unknown };
std::string_view to_string(IrreducibilityReason r) noexcept;

enum class RationalityFlag { Rational, StablyRational, Unknown };
std::string_view to_string(RationalityFlag r) noexcept;

// Preconditions for the codimension statement: effective nonzero,
// K-negative, |L|^int nonempty, L^2 >= 0.
ConditionResult codimension_condition(const Surface& s, const DivisorClass& l);

/// rho_L from the surface tables.
///
/// P^2, L = dH: d - 1 when d is p or 2p for a prime p, otherwise 7.
/// F_e, L = a sigma + b f with a > 0 and b > a e: min{b - (a-1)e, a} when a
/// is prime or gcd(a, b) is 1 or 2, otherwise min{7, b - (a-1)e, a}.
/// Throws InapplicableError when no condition holds or L is outside the
/// table's range.
std::int64_t rho(const Surface& s, const DivisorClass& l);

// The table value alone, without checking the hypotheses. nullopt outside
// the table's range.
std::optional<std::int64_t> rho_table(const Surface& s, const DivisorClass& l);

IrreducibilityReason irreducibility_guaranteed(const Surface& s, const DivisorClass& l);

// gcd(d, chi) = 1 on P^2; nullopt (not applicable) on F_e.
std::optional<bool> fine_moduli_flag(const Surface& s, const DivisorClass& l, std::int64_t chi);

RationalityFlag rationality_flag(const Surface& s, const DivisorClass& l, std::int64_t chi);

// Strictly semistable sheaves exist (P^2 with gcd(d, chi) > 1).
bool strictly_semistable_note(const Surface& s, const DivisorClass& l, std::int64_t chi);

struct HypothesisReport {
    Surface surface = Surface::projective_plane();
    DivisorClass l;
    std::optional<std::int64_t> chi;

    bool effective = false;
    bool kx_negative = false;
    bool has_integral = false;
    std::int64_t self_intersection = 0;
    bool moduli_empty = false;  // L^2 < 0
    std::optional<PrimitivePart> primitive;
    std::optional<SParam> s_l;

    DivisorClass l_plus_k;
    // L + K is not a nonzero effective class, so h^0(L + K) = 0 or L + K = 0.
    bool l_plus_k_nonpositive = false;
    std::optional<SParam> s_l_plus_k;  // only when L + K is effective and nonzero

    ConditionResult condition;
    std::optional<std::int64_t> rho;
    bool main_formula_applicable = false;
    IrreducibilityReason irreducible = IrreducibilityReason::Unknown;

    // chi-dependent; absent when no chi was given.
    std::optional<bool> fine_moduli;  // also absent on F_e
    std::optional<RationalityFlag> rationality;
    std::optional<bool> strictly_semistable;

    // First failing check on the way to the main formula, empty if none.
    std::string failed_check;
};

// Runs every check. Never throws on mathematically meaningful input; the
// report records each outcome.
HypothesisReport check_hypotheses(const Surface& s, const DivisorClass& l, std::optional<std::int64_t> chi = {});

// True iff the main formula applies; the full report is written to `report`
// when provided.
bool main_applicable(const Surface& s, const DivisorClass& l, HypothesisReport* report = nullptr);

}  // namespace sheafbetti

#endif  // SHEAFBETTI_HYPOTHESES_HPP
