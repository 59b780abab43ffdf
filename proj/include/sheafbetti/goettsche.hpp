#ifndef SHEAFBETTI_GOETTSCHE_HPP
#define SHEAFBETTI_GOETTSCHE_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sheafbetti/powerseries.hpp"
#include "sheafbetti/surface.hpp"

namespace sheafbetti {

inline constexpr std::size_t kDefaultHilbCap = 64;

/// Betti numbers b_0 .. b_{2 dim} of a compact complex space.
struct PoincarePolynomial {
    std::vector<BigInt> coeffs;
    std::size_t dim = 0;

    // b_i, zero outside [0, 2 dim].
    BigInt betti(std::ptrdiff_t i) const;
    // Alternating sum, i.e. the value at t = -1. Equals the value at t = 1
    // here because odd Betti numbers vanish.
    BigInt euler() const;
    BigInt value_at_one() const;
    std::string to_string() const;  // "1,0,2,0,3,0,2,0,1"

    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
};

/// Hodge numbers of Hilb^[n] for the supported surfaces. All classes are of
/// type (p, p), so only the diagonal is stored.
struct HodgeNumbers {
    std::vector<BigInt> diagonal;  // h^{p,p}, p = 0 .. dim
    std::size_t dim = 0;

    BigInt at(std::ptrdiff_t p, std::ptrdiff_t q) const;
};

/// Betti numbers of Hilb^[n](X) as the z^n coefficient of
///   prod_{k>=1} (1 - z^k t^{2k-2})^{-b0} (1 - z^k t^{2k})^{-b2} (1 - z^k t^{2k+2})^{-b4}
/// truncated at z^n, t^{4n}. Throws DomainError when n exceeds `cap`.
PoincarePolynomial hilb_poincare(const Surface& s, std::size_t n, std::size_t cap = kDefaultHilbCap);

// Poincare polynomials for every m in 0..n from one expansion.
std::vector<PoincarePolynomial> hilb_poincare_upto(const Surface& s, std::size_t n,
                                                   std::size_t cap = kDefaultHilbCap);

// The generating product itself, factors applied in the order given by
// `factor_order` (a permutation of 0 .. 3n-1; empty means natural order).
BiSeries hilb_generating_series(const Surface& s, std::size_t n, const std::vector<std::size_t>& factor_order = {});

// Euler number from prod_k (1 - z^k)^{-e(X)}, a univariate expansion that
// does not go through BiSeries.
BigInt hilb_euler(const Surface& s, std::size_t n, std::size_t cap = kDefaultHilbCap);

HodgeNumbers hilb_hodge_diag(const Surface& s, std::size_t n, std::size_t cap = kDefaultHilbCap);

/// Memo of Poincare polynomials keyed by (surface, n). Safe to share
/// between threads; every lookup either finds a finished entry or computes
/// it outside the lock.
class HilbCache {
public:
    explicit HilbCache(std::size_t cap = kDefaultHilbCap) : cap_(cap) {}

    PoincarePolynomial poincare(const Surface& s, std::size_t n);
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
    std::mutex mutex_;
    std::map<std::pair<std::string, std::size_t>, PoincarePolynomial> entries_;
};

}  // namespace sheafbetti

#endif  // SHEAFBETTI_GOETTSCHE_HPP
