#ifndef SHEAFBETTI_POWERSERIES_HPP
#define SHEAFBETTI_POWERSERIES_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sheafbetti {

using BigInt = boost::multiprecision::cpp_int;

/// Truncated power series in (z, t) with exact integer coefficients.
///
/// Stored densely as one t-vector per power of z: z-slices of Hilbert
/// scheme products are dense in t, and the z range is small. Terms with
/// z-exponent above trunc_z or t-exponent above trunc_t are dropped,
/// never wrapped.
class BiSeries {
public:
    BiSeries(std::size_t trunc_z, std::size_t trunc_t);

    static BiSeries zero(std::size_t trunc_z, std::size_t trunc_t) { return BiSeries(trunc_z, trunc_t); }
    static BiSeries one(std::size_t trunc_z, std::size_t trunc_t);

    std::size_t trunc_z() const noexcept { return trunc_z_; }
    std::size_t trunc_t() const noexcept { return trunc_t_; }

    // Zero outside the truncation box.
    const BigInt& coefficient(std::size_t zk, std::size_t tk) const;
    // Throws DomainError outside the truncation box.
    void set(std::size_t zk, std::size_t tk, BigInt value);

    // The z^zk slice as a t-degree-indexed vector of length trunc_t + 1.
    // Throws DomainError when zk > trunc_z.
    const std::vector<BigInt>& slice(std::size_t zk) const;

    BiSeries& operator+=(const BiSeries& other);
    BiSeries& operator-=(const BiSeries& other);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) { return mul(a, b); }

    // Truncated convolution. Throws DomainError on a truncation mismatch.
    static BiSeries mul(const BiSeries& a, const BiSeries& b);

    /// Multiplies in place by (1 - z^k t^u)^(-c), k >= 1, c >= 1.
    ///
    /// Each of the c passes divides by (1 - z^k t^u), i.e. runs the
    /// recurrence A[z][t] += A[z-k][t-u] in increasing z order.
    BiSeries& mul_geometric_factor(std::size_t k, std::size_t u, std::size_t c);

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.trunc_z_ == b.trunc_z_ && a.trunc_t_ == b.trunc_t_ && a.rows_ == b.rows_;
    }

private:
    void require_same_shape(const BiSeries& other, const char* op) const;

    std::size_t trunc_z_;
    std::size_t trunc_t_;
    std::vector<std::vector<BigInt>> rows_;
};

}  // namespace sheafbetti

#endif  // SHEAFBETTI_POWERSERIES_HPP
