#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mackeylab/numeric.hpp"

namespace mlab {

// Integer-coefficient polynomial in the formal residue-cardinality variable q.
// This is the universal value type for degrees, indices and group orders:
// everything stays exact, no floating point anywhere.
class QPoly {
public:
    QPoly() = default;
    QPoly(long long constant);           // NOLINT: implicit by design
    QPoly(const Int& constant);          // NOLINT
    explicit QPoly(std::vector<Int> coeffs);  // ascending degree
    QPoly(std::initializer_list<long long> coeffs);

    static QPoly q();                            // the variable itself
    static QPoly monomial(const Int& c, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Int coeff(int d) const;
    const std::vector<Int>& coeffs() const { return c_; }
    Int leading() const;

    QPoly operator-() const;
    QPoly operator+(const QPoly&) const;
    QPoly operator-(const QPoly&) const;
    QPoly operator*(const QPoly&) const;
    QPoly& operator+=(const QPoly& o) { *this = *this + o; return *this; }
    QPoly& operator-=(const QPoly& o) { *this = *this - o; return *this; }
    QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }
    bool operator==(const QPoly&) const = default;

    QPoly pow(unsigned e) const;
    Int eval(const Int& x) const;

    // Exact division; throws Error if any coefficient step or the final
    // remainder is nonzero.
    QPoly divide_exact(const QPoly& divisor) const;
    std::optional<QPoly> try_divide(const QPoly& divisor) const;

    std::string str() const;         // human readable, e.g. "q^3 + 2*q + 1"
    std::string coeff_list() const;  // "[1,2,0,1]" ascending
    static QPoly parse_coeff_list(const std::string&);

private:
    void normalize();
    std::vector<Int> c_;  // ascending, no trailing zeros
};

}  // namespace mlab
