#include "sheafbetti/motivic.hpp"

#include <algorithm>
#include <numeric>

#include "sheafbetti/errors.hpp"

namespace sheafbetti {

std::int64_t window_value(std::int64_t rho, std::int64_t chi0, std::int64_t k_dot_l) noexcept {
    return std::min({rho, -chi0, chi0 - k_dot_l});
}

ChiNormalization normalize_chi(const Surface& s, const DivisorClass& l, std::int64_t chi, std::int64_t rho) {
    ChiNormalization out;
    out.chi_in = chi;
    out.rho = rho;
    out.k_dot_l = intersect(s, s.canonical(), l);
    if (out.k_dot_l >= 0) throw DomainError("normalize_chi: need K.L < 0, got " + std::to_string(out.k_dot_l));
    if (rho <= 0) throw DomainError("normalize_chi: rho must be positive");

    for (const auto& b : s.basis()) out.modulus = std::gcd(out.modulus, intersect(s, l, b));
    if (out.modulus == 0) throw DomainError("normalize_chi: L pairs to zero with the whole Picard lattice");

    const auto m = out.modulus;
    for (std::int64_t c = -1; c >= out.k_dot_l; --c) {
        if ((c - chi) % m == 0 || (c + chi) % m == 0) out.candidates.push_back(c);
    }
    if (out.candidates.empty()) {
        throw InapplicableError("chi_normalization", "normalize_chi: no chi' ~ " + std::to_string(chi) + " in [" +
                                                         std::to_string(out.k_dot_l) + ", 0)");
    }

    // Candidates are descending, so a strict improvement test keeps the
    // largest chi0 among ties.
    out.chi0 = out.candidates.front();
    out.window_value = window_value(rho, out.chi0, out.k_dot_l);
    for (auto c : out.candidates) {
        const auto w = window_value(rho, c, out.k_dot_l);
        if (w > out.window_value) {
            out.window_value = w;
            out.chi0 = c;
        }
    }
    return out;
}

MotivicShift shift(const Surface& s, const DivisorClass& l, const ChiNormalization& norm) {
    const auto l2 = self_intersection(s, l);
    const auto kl = intersect(s, s.canonical(), l);
    MotivicShift out;
    out.dtilde = (l2 + kl) / 2 - norm.chi0;
    out.shift_m = -kl + 1 + 2 * norm.chi0;
    out.scheme_valid_codim = l2 + 1 - norm.window_value;
    out.valid_degree_min = std::max<std::int64_t>(0, 1 + 2 * out.scheme_valid_codim);
    out.top_degree = 2 * (l2 + 1);
    if (2 * out.shift_m + 4 * out.dtilde != out.top_degree) {
        throw InvariantViolation("shift: 2m + 4 dtilde = " + std::to_string(2 * out.shift_m + 4 * out.dtilde) +
                                 " but 2(L^2 + 1) = " + std::to_string(out.top_degree));
    }
    if (out.dtilde < 0) throw InvariantViolation("shift: negative Hilbert scheme order");
    return out;
}

std::optional<BigInt> VirtualBettiReport::high(std::int64_t degree) const {
    if (auto it = raw_high.find(degree); it != raw_high.end()) return it->second;
    return std::nullopt;
}

std::optional<BigInt> VirtualBettiReport::low(std::int64_t degree) const {
    if (auto it = reflected_low.find(degree); it != reflected_low.end()) return it->second;
    return std::nullopt;
}

std::optional<BigInt> VirtualBettiReport::hodge_high(std::int64_t p, std::int64_t q) const {
    auto b = high(p + q);
    if (!b) return std::nullopt;
    return p == q ? *b : BigInt(0);
}

std::optional<BigInt> VirtualBettiReport::hodge_low(std::int64_t p, std::int64_t q) const {
    if (p < 0 || q < 0) return std::nullopt;
    auto b = low(p + q);
    if (!b) return std::nullopt;
    return p == q ? *b : BigInt(0);
}

VirtualBettiReport virtual_betti(const Surface& s, const DivisorClass& l, std::int64_t chi, HilbCache* cache) {
    const auto hyp = check_hypotheses(s, l, chi);
    if (!hyp.main_formula_applicable) {
        throw InapplicableError(hyp.failed_check, "virtual_betti: main formula does not apply to (" + l.to_string() +
                                                      ") on " + s.display_name() + ": failed " + hyp.failed_check);
    }

    VirtualBettiReport r;
    r.surface = s;
    r.l = l;
    r.chi = chi;
    r.self_intersection = hyp.self_intersection;
    r.normalization = normalize_chi(s, l, chi, *hyp.rho);
    r.shift = shift(s, l, r.normalization);

    const auto n = static_cast<std::size_t>(r.shift.dtilde);
    const auto hilb = cache ? cache->poincare(s, n) : hilb_poincare(s, n);
    const auto top = r.shift.top_degree;
    for (auto i = r.shift.valid_degree_min; i <= top; ++i) {
        r.raw_high[i] = hilb.betti(i - 2 * r.shift.shift_m);
    }
    for (std::int64_t i = 0; i <= top - r.shift.valid_degree_min; ++i) {
        r.reflected_low[i] = r.raw_high.at(top - i);
    }

    r.flags.fine_moduli = hyp.fine_moduli;
    r.flags.strictly_semistable_note = hyp.strictly_semistable.value_or(false);
    r.flags.virtual_only = !hyp.fine_moduli.value_or(false);
    r.flags.rationality = hyp.rationality.value_or(RationalityFlag::Unknown);
    r.flags.irreducible = hyp.irreducible;
    return r;
}

ChiComparison compare_reports(const VirtualBettiReport& a, const VirtualBettiReport& b) {
    ChiComparison out;
    out.common_min_degree = std::max(a.shift.valid_degree_min, b.shift.valid_degree_min);
    const auto top = std::min(a.shift.top_degree, b.shift.top_degree);
    for (auto i = out.common_min_degree; i <= top; ++i) {
        if (a.raw_high.at(i) != b.raw_high.at(i)) {
            out.agree = false;
            out.first_divergence = i;
            break;
        }
    }
    return out;
}

ChiComparison chi_independence_check(const Surface& s, const DivisorClass& l, std::int64_t chi1, std::int64_t chi2,
                                     HilbCache* cache) {
    return compare_reports(virtual_betti(s, l, chi1, cache), virtual_betti(s, l, chi2, cache));
}

}  // namespace sheafbetti
