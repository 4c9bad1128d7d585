#pragma once

#include <map>
#include <vector>

#include "mackeylab/qpoly.hpp"

namespace mlab::finlab {

// Exact arithmetic in Z[zeta_e]. Values are held as sparse combinations of
// e-th roots of unity (exponent -> multiplicity); equality and integrality
// tests reduce to the canonical basis modulo the e-th cyclotomic polynomial.
class CycloContext {
public:
    explicit CycloContext(long long e);

    long long e() const { return e_; }
    int phi_degree() const { return static_cast<int>(phi_.size()) - 1; }

    // x^t modulo Phi_e, small integer coefficients
    const std::vector<long long>& power(long long t) const { return xpow_[t]; }

    // canonical coordinates of a sparse combination sum c_t zeta^t
    std::vector<Int> reduce(const std::map<long long, Int>& sparse) const;

    bool is_integer(const std::map<long long, Int>& sparse, Int* value) const;

    static const CycloContext& get(long long e);  // cached

private:
    long long e_;
    std::vector<long long> phi_;                 // Phi_e coefficients, ascending, monic
    std::vector<std::vector<long long>> xpow_;   // x^t mod Phi_e for 0 <= t < e
};

// Sparse cyclotomic value: list of (exponent mod e, integer multiplicity).
struct CycloValue {
    std::vector<std::pair<long long, long long>> terms;

    static CycloValue integer(long long v)
    {
        CycloValue c;
        if (v) c.terms.push_back({0, v});
        return c;
    }
    CycloValue conj(long long e) const
    {
        CycloValue c;
        for (auto [t, m] : terms) c.terms.push_back({t == 0 ? 0 : e - t, m});
        return c;
    }
};

// accumulate a * conj(b) * weight into 'acc' (exponents mod e)
void accumulate_product(std::map<long long, Int>& acc, const CycloValue& a, const CycloValue& b_conj,
                        const Int& weight, long long e);

}  // namespace mlab::finlab
