#include "sheafbetti/bounds.hpp"

#include <algorithm>

#include "sheafbetti/decomposition.hpp"
#include "sheafbetti/errors.hpp"
#include "sheafbetti/hypotheses.hpp"

namespace sheafbetti {

namespace {

std::string num(std::int64_t v) { return v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v); }

BoundEntry entry(std::string name, std::string formula, bool applicable, std::string note, std::int64_t value) {
    return BoundEntry{std::move(name), std::move(formula), applicable, std::move(note), value};
}

}  // namespace

const BoundEntry* BoundReport::find(const std::string& name) const {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const BoundEntry& e) { return e.name == name; });
    return it == entries.end() ? nullptr : &*it;
}

BoundReport strata_bounds(const Surface& s, const DivisorClass& l, std::int64_t /*chi*/) {
    if (!is_effective(s, l) || l.is_zero()) {
        throw DomainError("strata_bounds: class (" + l.to_string() + ") is not effective and nonzero");
    }
    BoundReport r;
    const auto l2 = self_intersection(s, l);
    const auto kl = intersect(s, s.canonical(), l);
    r.stack_dim = l2;
    r.scheme_dim = l2 + 1;
    r.moduli_empty = l2 < 0;

    const auto cond = codimension_condition(s, l);
    if (cond.condition != CodimensionCondition::None) r.rho = rho_table(s, l);
    if (r.rho) r.claimed = l2 - *r.rho;

    const bool kx_neg = is_kx_negative(s, l);
    const auto sl = s_param(s, l);
    {
        const bool ok = kx_neg && !sl.infinite();
        const auto v = sl.infinite() ? l2 : l2 - *sl.value;
        const std::string f = num(l2) + " - s_L = " + num(l2) + " - " + sl.to_string();
        const std::string note =
            !kx_neg ? "L is not K-negative" : (sl.infinite() ? "no decomposition, stratum empty" : "");
        r.entries.push_back(entry("s_bound", f, ok, note, v));
        r.entries.push_back(entry("reducible_support_bound", f, ok, note, v));
    }

    const auto [n, prim] = primitive_part(s, l);
    const bool base_ok = kx_neg && kl < 0 && l2 >= 0;
    for (std::int64_t k = 2; k <= n; ++k) {
        if (n % k != 0) continue;
        const auto part = (n / k) * prim;
        const auto g = arithmetic_genus(s, part);
        const auto ks = std::to_string(k);
        const auto gs = std::to_string(g);
        {
            const auto v = l2 - (k - 1) * l2 / k;
            r.entries.push_back(entry("genus0_bound[k=" + ks + "]",
                                      num(l2) + " - " + std::to_string(k - 1) + "*" + num(l2) + "/" + ks,
                                      base_ok && g == 0, "g(L/" + ks + ") = " + gs, v));
        }
        if (k == 2) {
            const auto v = l2 + kl + 1 + (1 - g);
            r.entries.push_back(entry("half_bound[k=2]", num(l2) + " + " + num(kl) + " + 1 + (1 - " + gs + ")",
                                      base_ok && g > 0, "g(L/2) = " + gs, v));
        }
        {
            const auto v = l2 + kl + 1 + (2 * k - 3) * (1 - g);
            r.entries.push_back(entry("rank1_bound[k=" + ks + "]",
                                      num(l2) + " + " + num(kl) + " + 1 + " + std::to_string(2 * k - 3) + "*(1 - " +
                                          gs + ")",
                                      base_ok && g > 0, "g(L/" + ks + ") = " + gs, v));
        }
    }
    r.entries.push_back(entry("t2_bound", num(l2) + " + " + num(kl) + " + 1", base_ok && n >= 2,
                              n >= 2 ? "non-reduced supports possible" : "L primitive", l2 + kl + 1));
    r.entries.push_back(entry("t3_bound", num(l2) + " - (3^2 - 2)",
                              cond.condition == CodimensionCondition::AmpleTwist,
                              "rank >= 3 stratum, codimension >= n^2 - 2 at n = 3", l2 - 7));

    if (r.claimed) {
        r.audit = std::all_of(r.entries.begin(), r.entries.end(),
                              [&](const BoundEntry& e) { return !e.applicable || e.value <= *r.claimed; });
    }
    return r;
}

BoundReport hilb_strata_bounds(const Surface& s, const DivisorClass& l, std::int64_t chi0, std::int64_t rho) {
    BoundReport r;
    const auto l2 = self_intersection(s, l);
    const auto kl = intersect(s, s.canonical(), l);
    const auto dtilde = (l2 + kl) / 2 - chi0;
    r.stack_dim = l2;
    r.scheme_dim = l2 + 1;
    r.rho = rho;
    r.moduli_empty = l2 < 0;

    for (std::int64_t i : {0, 1}) {
        const auto excess = chi0 - i * kl;
        r.entries.push_back(entry("n_bound[i=" + std::to_string(i) + ",k=1]",
                                  num(l2) + " - (" + num(chi0) + " - " + std::to_string(i) + "*" + num(kl) + ") - 1",
                                  excess >= 0, excess >= 0 ? "" : "chi - i K.L < 0", l2 - excess - 1));
    }
    r.entries.push_back(entry("v_bound[j=0,l=1]", num(l2) + " + " + num(chi0) + " - 1", chi0 < 0,
                              "dual of n_bound", l2 + chi0 - 1));
    r.entries.push_back(entry("hilb_stack_dim", "2*" + std::to_string(dtilde) + " - 1", true, "", 2 * dtilde - 1));

    const auto lk = l + s.canonical();
    const bool lk_positive = is_effective(s, lk) && !lk.is_zero();
    const bool excess_ok = lk_positive && s_param(s, lk).at_least(0);
    r.entries.push_back(entry("hilb_excess_bound[l>0]",
                              "2*" + std::to_string(dtilde) + " - 1 - " + std::to_string(-chi0), excess_ok,
                              lk_positive ? (excess_ok ? "" : "s_{L+K} < 0") : "L + K <= 0, locus empty",
                              2 * dtilde - 1 + chi0));
    const auto h1 = std::min(chi0 - kl, rho);
    r.entries.push_back(entry("hilb_h1_bound",
                              "2*" + std::to_string(dtilde) + " - 1 - min{" + num(chi0 - kl) + ", " + num(rho) + "}",
                              true, "", 2 * dtilde - 1 - h1));
    const auto w = std::min({rho, -chi0, chi0 - kl});
    r.entries.push_back(entry("bad_locus_total", num(l2) + " - min{" + num(rho) + ", " + num(-chi0) + ", " +
                                                     num(chi0 - kl) + "}",
                              true, "", l2 - w));
    return r;
}

bool audit_codimension(const Surface& s, const DivisorClass& l, std::int64_t chi) {
    const auto cond = codimension_condition(s, l);
    if (cond.condition == CodimensionCondition::None) {
        throw InapplicableError(cond.failed_check, "audit_codimension: codimension statement does not apply to (" +
                                                       l.to_string() + "), failed " + cond.failed_check);
    }
    const auto r = strata_bounds(s, l, chi);
    if (!r.audit) {
        throw InapplicableError("rho_table_range",
                                "audit_codimension: (" + l.to_string() + ") is outside the tabulated rho range");
    }
    return *r.audit;
}

}  // namespace sheafbetti
