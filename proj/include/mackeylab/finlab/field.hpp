#pragma once

#include <cstdint>
#include <vector>

#include "mackeylab/numeric.hpp"

namespace mlab::finlab {

// Arithmetic tables for F_q, q = p^f a small prime power. Elements are
// indices 0..q-1; for extension fields the index encodes the polynomial
// sum d_i x^i as sum d_i p^i, so 0 and 1 are the additive and multiplicative
// identities in every representation.
class FqField {
public:
    static const FqField& get(int q);  // cached; throws on unsupported q

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return f_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;

private:
    explicit FqField(int q);
    int q_, p_, f_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

// F_{q^3} as F_q[x]/(cubic), used for the nonsplit torus construction.
// Elements are indices encoding digit vectors base q.
class CubicExtension {
public:
    explicit CubicExtension(int q);
    int q() const { return q_; }
    long long size() const { return static_cast<long long>(q_) * q_ * q_; }
    long long mul(long long a, long long b) const;
    // matrix of multiplication by a on the basis {1, x, x^2}, column major
    // entries as F_q indices
    std::array<uint8_t, 9> mult_matrix(long long a) const;

private:
    const FqField* F_;
    int q_;
    std::array<uint8_t, 3> modulus_;  // x^3 = m2 x^2 + m1 x + m0
};

}  // namespace mlab::finlab
