#include "sheafbetti/hypotheses.hpp"

#include <algorithm>
#include <numeric>

#include "sheafbetti/errors.hpp"

namespace sheafbetti {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::string_view to_string(CodimensionCondition c) noexcept {
    switch (c) {
        case CodimensionCondition::SmallMultiple: return "small_multiple";
        case CodimensionCondition::PrimeMultiple: return "prime_multiple";
        case CodimensionCondition::TwicePrimeMultiple: return "twice_prime_multiple";
        case CodimensionCondition::AmpleTwist: return "ample_twist";
        case CodimensionCondition::None: return "none";
    }
    return "none";
}

std::string_view to_string(IrreducibilityReason r) noexcept {
    switch (r) {
        case IrreducibilityReason::Primitive: return "primitive";
        case IrreducibilityReason::MultipleCriterion: return "multiple_criterion";
        case IrreducibilityReason::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(RationalityFlag r) noexcept {
    switch (r) {
        case RationalityFlag::Rational: return "rational";
        case RationalityFlag::StablyRational: return "stably_rational";
        case RationalityFlag::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// |M|^int empty or g_M = 0.
bool prime_clause_holds(const Surface& s, const DivisorClass& m) {
    return !has_integral_member(s, m) || arithmetic_genus(s, m) == 0;
}

// Non-empty string names the first failed precondition.
std::string failed_precondition(const Surface& s, const DivisorClass& l) {
    if (!is_effective(s, l) || l.is_zero()) return "effective";
    if (!is_kx_negative(s, l)) return "kx_negative";
    if (!has_integral_member(s, l)) return "has_integral";
    if (self_intersection(s, l) < 0) return "nonnegative_square";
    return {};
}

bool ample_twist_exists(const Surface& s, const DivisorClass& l) {
    if (s.kind() == SurfaceKind::ProjectivePlane) return true;
    return l.coords[0] >= 0 && l.coords[1] > 0;
}

}  // namespace

ConditionResult codimension_condition(const Surface& s, const DivisorClass& l) {
    ConditionResult out;
    if (auto failed = failed_precondition(s, l); !failed.empty()) {
        out.failed_check = std::move(failed);
        return out;
    }
    const auto [n, prim] = primitive_part(s, l);
    const auto n_str = std::to_string(n);
    if (n == 1 || n == 2) {
        out.condition = CodimensionCondition::SmallMultiple;
        out.evidence = "n = " + n_str;
        return out;
    }
    if (is_prime(n) && prime_clause_holds(s, prim)) {
        out.condition = CodimensionCondition::PrimeMultiple;
        out.evidence = "n = " + n_str + " prime; L' = (" + prim.to_string() + ") has g = " +
                       std::to_string(arithmetic_genus(s, prim)) +
                       (has_integral_member(s, prim) ? "" : " and no integral member");
        return out;
    }
    if (n % 2 == 0 && is_prime(n / 2) && prime_clause_holds(s, prim) && prime_clause_holds(s, 2 * prim)) {
        out.condition = CodimensionCondition::TwicePrimeMultiple;
        out.evidence = "n = 2*" + std::to_string(n / 2) + "; L' and 2L' pass the prime clause";
        return out;
    }
    if (ample_twist_exists(s, l)) {
        out.condition = CodimensionCondition::AmpleTwist;
        out.evidence = s.kind() == SurfaceKind::ProjectivePlane ? "ample class H, (H + K).L'' < 0"
                                                                : "F_e with a >= 0 and b > 0";
        return out;
    }
    out.failed_check = "codimension_condition";
    return out;
}

std::optional<std::int64_t> rho_table(const Surface& s, const DivisorClass& l) {
    if (s.kind() == SurfaceKind::ProjectivePlane) {
        const auto d = l.coords.at(0);
        if (d <= 0) return std::nullopt;
        if (is_prime(d) || (d % 2 == 0 && is_prime(d / 2))) return d - 1;
        return 7;
    }
    const auto a = l.coords.at(0), b = l.coords.at(1);
    const std::int64_t e = s.e();
    if (a <= 0 || b <= a * e) return std::nullopt;
    const auto base = std::min(b - (a - 1) * e, a);
    const auto g = std::gcd(a, b);
    if (is_prime(a) || g == 1 || g == 2) return base;
    return std::min<std::int64_t>(7, base);
}

std::int64_t rho(const Surface& s, const DivisorClass& l) {
    const auto cond = codimension_condition(s, l);
    if (cond.condition == CodimensionCondition::None) {
        throw InapplicableError(cond.failed_check, "rho: codimension statement does not apply to (" + l.to_string() +
                                                       "), failed check: " + cond.failed_check);
    }
    const auto value = rho_table(s, l);
    if (!value) {
        throw InapplicableError("rho_table_range", "rho: (" + l.to_string() + ") is outside the tabulated range on " +
                                                       s.display_name());
    }
    return *value;
}

IrreducibilityReason irreducibility_guaranteed(const Surface& s, const DivisorClass& l) {
    if (!is_effective(s, l) || l.is_zero()) return IrreducibilityReason::Unknown;
    if (!is_kx_negative(s, l) || !has_integral_member(s, l)) return IrreducibilityReason::Unknown;
    const auto [n, prim] = primitive_part(s, l);
    if (n == 1) return IrreducibilityReason::Primitive;
    if (self_intersection(s, l) < 0) return IrreducibilityReason::Unknown;
    if (n == 2) return IrreducibilityReason::MultipleCriterion;
    if (is_prime(n) && prime_clause_holds(s, prim)) return IrreducibilityReason::MultipleCriterion;
    if (n % 2 == 0 && is_prime(n / 2) && prime_clause_holds(s, prim) && prime_clause_holds(s, 2 * prim))
        return IrreducibilityReason::MultipleCriterion;
    return IrreducibilityReason::Unknown;
}

std::optional<bool> fine_moduli_flag(const Surface& s, const DivisorClass& l, std::int64_t chi) {
    if (s.kind() != SurfaceKind::ProjectivePlane) return std::nullopt;
    return std::gcd(l.coords.at(0), chi) == 1;
}

RationalityFlag rationality_flag(const Surface& s, const DivisorClass& l, std::int64_t chi) {
    if (s.kind() == SurfaceKind::ProjectivePlane) {
        const auto d = l.coords.at(0);
        if (d > 0) {
            const auto r = ((chi % d) + d) % d;
            if (r == 1 % d || r == (d - 1) % d) return RationalityFlag::Rational;
        }
    }
    if (fine_moduli_flag(s, l, chi).value_or(false)) return RationalityFlag::StablyRational;
    return RationalityFlag::Unknown;
}

bool strictly_semistable_note(const Surface& s, const DivisorClass& l, std::int64_t chi) {
    return s.kind() == SurfaceKind::ProjectivePlane && std::gcd(l.coords.at(0), chi) > 1;
}

HypothesisReport check_hypotheses(const Surface& s, const DivisorClass& l, std::optional<std::int64_t> chi) {
    HypothesisReport r;
    r.surface = s;
    r.l = l;
    r.chi = chi;
    r.self_intersection = self_intersection(s, l);
    r.moduli_empty = r.self_intersection < 0;
    r.effective = is_effective(s, l) && !l.is_zero();
    r.l_plus_k = l + s.canonical();
    r.l_plus_k_nonpositive = !(is_effective(s, r.l_plus_k) && !r.l_plus_k.is_zero());

    if (r.effective) {
        r.kx_negative = is_kx_negative(s, l);
        r.has_integral = has_integral_member(s, l);
        r.primitive = primitive_part(s, l);
        r.s_l = s_param(s, l);
    }
    if (!r.l_plus_k_nonpositive) r.s_l_plus_k = s_param(s, r.l_plus_k);

    r.condition = codimension_condition(s, l);
    if (r.condition.condition != CodimensionCondition::None) r.rho = rho_table(s, l);
    r.irreducible = irreducibility_guaranteed(s, l);

    if (r.condition.condition == CodimensionCondition::None) {
        r.failed_check = r.condition.failed_check;
    } else if (!r.rho) {
        r.failed_check = "rho_table_range";
    } else if (!r.l_plus_k_nonpositive && !r.s_l_plus_k->at_least(0)) {
        r.failed_check = "s_l_plus_k_nonnegative";
    }
    r.main_formula_applicable = r.failed_check.empty();

    if (chi) {
        r.fine_moduli = fine_moduli_flag(s, l, *chi);
        r.rationality = rationality_flag(s, l, *chi);
        r.strictly_semistable = strictly_semistable_note(s, l, *chi);
    }
    return r;
}

bool main_applicable(const Surface& s, const DivisorClass& l, HypothesisReport* report) {
    auto r = check_hypotheses(s, l);
    const bool ok = r.main_formula_applicable;
    if (report) *report = std::move(r);
    return ok;
}

}  // namespace sheafbetti
