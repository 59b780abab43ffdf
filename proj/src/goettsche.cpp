#include "sheafbetti/goettsche.hpp"

#include <numeric>

#include "sheafbetti/errors.hpp"

namespace sheafbetti {

BigInt PoincarePolynomial::betti(std::ptrdiff_t i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs.size()) return 0;
    return coeffs[static_cast<std::size_t>(i)];
}

BigInt PoincarePolynomial::euler() const {
    BigInt total = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i % 2 == 0)
            total += coeffs[i];
        else
            total -= coeffs[i];
    }
    return total;
}

BigInt PoincarePolynomial::value_at_one() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), BigInt(0));
}

std::string PoincarePolynomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ',';
        out += coeffs[i].str();
    }
    return out;
}

BigInt HodgeNumbers::at(std::ptrdiff_t p, std::ptrdiff_t q) const {
    if (p != q || p < 0 || static_cast<std::size_t>(p) >= diagonal.size()) return 0;
    return diagonal[static_cast<std::size_t>(p)];
}

namespace {

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw DomainError("Hilbert scheme order n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    }
}

struct Factor {
    std::size_t k;
    std::size_t u;
    std::size_t multiplicity;
};

// Factors (1 - z^k t^u)^{-c} with k <= n, three per k.
std::vector<Factor> product_factors(const Surface& s, std::size_t n) {
    const auto b = s.betti();
    std::vector<Factor> out;
    for (std::size_t k = 1; k <= n; ++k) {
        out.push_back({k, 2 * k - 2, static_cast<std::size_t>(b[0])});
        out.push_back({k, 2 * k, static_cast<std::size_t>(b[1])});
        out.push_back({k, 2 * k + 2, static_cast<std::size_t>(b[2])});
    }
    return out;
}

PoincarePolynomial slice_to_poincare(const BiSeries& series, std::size_t m) {
    PoincarePolynomial p;
    p.dim = 2 * m;
    const auto& row = series.slice(m);
    p.coeffs.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(4 * m + 1));
    return p;
}

}  // namespace

BiSeries hilb_generating_series(const Surface& s, std::size_t n, const std::vector<std::size_t>& factor_order) {
    const auto factors = product_factors(s, n);
    auto series = BiSeries::one(n, 4 * n);
    if (factor_order.empty()) {
        for (const auto& f : factors) series.mul_geometric_factor(f.k, f.u, f.multiplicity);
        return series;
    }
    if (factor_order.size() != factors.size()) throw DomainError("hilb_generating_series: bad factor order");
    std::vector<bool> seen(factors.size(), false);
    for (auto idx : factor_order) {
        if (idx >= factors.size() || seen[idx]) throw DomainError("hilb_generating_series: bad factor order");
        seen[idx] = true;
        const auto& f = factors[idx];
        series.mul_geometric_factor(f.k, f.u, f.multiplicity);
    }
    return series;
}

std::vector<PoincarePolynomial> hilb_poincare_upto(const Surface& s, std::size_t n, std::size_t cap) {
    check_cap(n, cap);
    const auto series = hilb_generating_series(s, n);
    std::vector<PoincarePolynomial> out;
    out.reserve(n + 1);
    for (std::size_t m = 0; m <= n; ++m) out.push_back(slice_to_poincare(series, m));
    return out;
}

PoincarePolynomial hilb_poincare(const Surface& s, std::size_t n, std::size_t cap) {
    check_cap(n, cap);
    return slice_to_poincare(hilb_generating_series(s, n), n);
}

BigInt hilb_euler(const Surface& s, std::size_t n, std::size_t cap) {
    check_cap(n, cap);
    const auto b = s.betti();
    const auto euler_x = static_cast<std::size_t>(b[0] + b[1] + b[2]);
    std::vector<BigInt> coeffs(n + 1);
    coeffs[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t pass = 0; pass < euler_x; ++pass)
            for (std::size_t m = k; m <= n; ++m) coeffs[m] += coeffs[m - k];
    return coeffs[n];
}

HodgeNumbers hilb_hodge_diag(const Surface& s, std::size_t n, std::size_t cap) {
    const auto poincare = hilb_poincare(s, n, cap);
    HodgeNumbers h;
    h.dim = poincare.dim;
    for (std::size_t p = 0; p <= poincare.dim; ++p) h.diagonal.push_back(poincare.coeffs[2 * p]);
    return h;
}

PoincarePolynomial HilbCache::poincare(const Surface& s, std::size_t n) {
    const auto key = std::make_pair(s.id(), n);
    {
        std::lock_guard lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    auto value = hilb_poincare(s, n, cap_);
    std::lock_guard lock(mutex_);
    return entries_.emplace(key, std::move(value)).first->second;
}

}  // namespace sheafbetti
