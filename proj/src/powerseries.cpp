#include "sheafbetti/powerseries.hpp"

#include <string>

#include "sheafbetti/errors.hpp"

namespace sheafbetti {

namespace {
const BigInt kZero = 0;
}

BiSeries::BiSeries(std::size_t trunc_z, std::size_t trunc_t)
    : trunc_z_(trunc_z), trunc_t_(trunc_t), rows_(trunc_z + 1, std::vector<BigInt>(trunc_t + 1)) {}

BiSeries BiSeries::one(std::size_t trunc_z, std::size_t trunc_t) {
    BiSeries out(trunc_z, trunc_t);
    out.rows_[0][0] = 1;
    return out;
}

const BigInt& BiSeries::coefficient(std::size_t zk, std::size_t tk) const {
    if (zk > trunc_z_ || tk > trunc_t_) return kZero;
    return rows_[zk][tk];
}

void BiSeries::set(std::size_t zk, std::size_t tk, BigInt value) {
    if (zk > trunc_z_ || tk > trunc_t_) {
        throw DomainError("BiSeries::set: (" + std::to_string(zk) + ", " + std::to_string(tk) +
                          ") is outside the truncation box");
    }
    rows_[zk][tk] = std::move(value);
}

const std::vector<BigInt>& BiSeries::slice(std::size_t zk) const {
    if (zk > trunc_z_) {
        throw DomainError("BiSeries::slice: z^" + std::to_string(zk) + " beyond truncation order " +
                          std::to_string(trunc_z_));
    }
    return rows_[zk];
}

void BiSeries::require_same_shape(const BiSeries& other, const char* op) const {
    if (trunc_z_ != other.trunc_z_ || trunc_t_ != other.trunc_t_) {
        throw DomainError(std::string(op) + ": truncation orders differ");
    }
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
    require_same_shape(other, "BiSeries::operator+=");
    for (std::size_t z = 0; z <= trunc_z_; ++z)
        for (std::size_t t = 0; t <= trunc_t_; ++t) rows_[z][t] += other.rows_[z][t];
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& other) {
    require_same_shape(other, "BiSeries::operator-=");
    for (std::size_t z = 0; z <= trunc_z_; ++z)
        for (std::size_t t = 0; t <= trunc_t_; ++t) rows_[z][t] -= other.rows_[z][t];
    return *this;
}

BiSeries BiSeries::mul(const BiSeries& a, const BiSeries& b) {
    a.require_same_shape(b, "BiSeries::mul");
    BiSeries out(a.trunc_z_, a.trunc_t_);
    for (std::size_t za = 0; za <= a.trunc_z_; ++za) {
        for (std::size_t ta = 0; ta <= a.trunc_t_; ++ta) {
            const auto& ca = a.rows_[za][ta];
            if (ca.is_zero()) continue;
            for (std::size_t zb = 0; za + zb <= a.trunc_z_; ++zb) {
                const auto& row_b = b.rows_[zb];
                auto& row_out = out.rows_[za + zb];
                for (std::size_t tb = 0; ta + tb <= a.trunc_t_; ++tb) {
                    if (!row_b[tb].is_zero()) row_out[ta + tb] += ca * row_b[tb];
                }
            }
        }
    }
    return out;
}

BiSeries& BiSeries::mul_geometric_factor(std::size_t k, std::size_t u, std::size_t c) {
    if (k == 0 || c == 0) throw DomainError("mul_geometric_factor: need k >= 1 and c >= 1");
    for (std::size_t pass = 0; pass < c; ++pass) {
        for (std::size_t z = k; z <= trunc_z_; ++z) {
            const auto& src = rows_[z - k];
            auto& dst = rows_[z];
            for (std::size_t t = u; t <= trunc_t_; ++t) {
                if (!src[t - u].is_zero()) dst[t] += src[t - u];
            }
        }
    }
    return *this;
}

}  // namespace sheafbetti
