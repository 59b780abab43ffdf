#include "sheafbetti/decomposition.hpp"

#include <algorithm>
#include <functional>

#include "sheafbetti/errors.hpp"

namespace sheafbetti {

std::int64_t Decomposition::pairwise_sum(const Surface& s) const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) total += intersect(s, parts[i], parts[j]);
    return total;
}

std::int64_t Decomposition::square_sum(const Surface& s) const {
    std::int64_t total = 0;
    for (const auto& p : parts) total += self_intersection(s, p);
    return total;
}

std::string Decomposition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += "(" + parts[i].to_string() + ")";
    }
    return out;
}

DecompositionStream::DecompositionStream(const Surface& s, const DivisorClass& l, PartFilter filter)
    : surface_(s), target_(l), remaining_(l) {
    for (auto& c : sub_effective_classes(s, l)) {
        if (c == l) continue;
        if (filter && !filter(c)) continue;
        candidates_.push_back(std::move(c));
    }
    std::sort(candidates_.begin(), candidates_.end(), std::greater<>{});
}

bool DecompositionStream::fits(std::size_t idx) const {
    return is_effective(surface_, remaining_ - candidates_[idx]);
}

std::optional<std::size_t> DecompositionStream::first_fit(std::size_t from) const {
    for (std::size_t j = from; j < candidates_.size(); ++j)
        if (fits(j)) return j;
    return std::nullopt;
}

std::optional<Decomposition> DecompositionStream::next() {
    if (done_) return std::nullopt;

    // Moves the deepest choice to its next sibling, unwinding exhausted levels.
    auto backtrack = [this] {
        while (!stack_.empty()) {
            const auto j = stack_.back();
            stack_.pop_back();
            remaining_ += candidates_[j];
            if (auto k = first_fit(j + 1)) {
                stack_.push_back(*k);
                remaining_ -= candidates_[*k];
                return true;
            }
        }
        return false;
    };

    if (!started_) {
        started_ = true;
    } else if (!backtrack()) {
        done_ = true;
        return std::nullopt;
    }

    while (true) {
        if (remaining_.is_zero() && !stack_.empty()) {
            Decomposition out;
            out.parts.reserve(stack_.size());
            for (auto j : stack_) out.parts.push_back(candidates_[j]);
            return out;
        }
        if (auto j = first_fit(stack_.empty() ? 0 : stack_.back())) {
            stack_.push_back(*j);
            remaining_ -= candidates_[*j];
            continue;
        }
        if (!backtrack()) {
            done_ = true;
            return std::nullopt;
        }
    }
}

std::vector<Decomposition> decompositions(const Surface& s, const DivisorClass& l, const PartFilter& filter) {
    DecompositionStream stream(s, l, filter);
    std::vector<Decomposition> out;
    while (auto d = stream.next()) out.push_back(std::move(*d));
    return out;
}

std::string SParam::to_string() const { return value ? std::to_string(*value) : std::string("infinite"); }

namespace {

SParam minimise(const Surface& s, const DivisorClass& l, const PartFilter& filter) {
    if (!is_effective(s, l) || l.is_zero()) {
        throw DomainError("s_param: class (" + l.to_string() + ") is not effective and nonzero");
    }
    const auto l2 = self_intersection(s, l);
    SParam best;
    DecompositionStream stream(s, l, filter);
    while (auto d = stream.next()) {
        const auto pairwise = d->pairwise_sum(s);
        const auto via_squares = l2 - d->square_sum(s);
        if (via_squares != 2 * pairwise) {
            throw InvariantViolation("s_param: pairwise sum and square-sum formulas disagree on " + d->to_string());
        }
        if (!best.value || pairwise < *best.value) {
            best.value = pairwise;
            best.witness = std::move(*d);
        }
    }
    return best;
}

}  // namespace

SParam s_param(const Surface& s, const DivisorClass& l) { return minimise(s, l, {}); }

SParam s_param_restricted(const Surface& s, const DivisorClass& l) {
    auto restricted = minimise(s, l, [&s](const DivisorClass& c) { return has_integral_member(s, c); });
    const auto full = s_param(s, l);
    // Every subclass with an integral member has h^0 = chi here (they are
    // all K-negative), so the restricted minimum must coincide.
    if (full.value != restricted.value) {
        throw InvariantViolation("s_param_restricted: restricted minimum " + restricted.to_string() +
                                 " differs from unrestricted " + full.to_string() + " for (" + l.to_string() + ")");
    }
    return restricted;
}

bool positivity_check(const Surface& s, const DivisorClass& l) {
    if (!has_integral_member(s, l)) {
        throw InapplicableError("has_integral", "positivity_check: |L|^int is empty for (" + l.to_string() + ")");
    }
    return s_param(s, l).at_least(1);
}

}  // namespace sheafbetti
