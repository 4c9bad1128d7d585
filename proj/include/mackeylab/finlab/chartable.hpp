#pragma once

#include <iosfwd>
#include <optional>

#include "mackeylab/finlab/cyclo.hpp"
#include "mackeylab/finlab/group.hpp"

namespace mlab::finlab {

// Exact complex character table of a MatrixGroup, computed by the classical
// modular method: class multiplication matrices, simultaneous eigenvectors
// over F_ell for a prime ell = 1 mod exp(G), then lifting of root-of-unity
// multiplicities by the discrete Fourier sum.
class CharacterTable {
public:
    static CharacterTable dixon(const MatrixGroup& G);

    const MatrixGroup& group() const { return *G_; }
    long long exponent() const { return e_; }
    long long modulus() const { return ell_; }

    int num_chars() const { return static_cast<int>(degrees_.size()); }
    long long degree(int chi) const { return degrees_[chi]; }
    const CycloValue& value(int chi, int cls) const { return values_[chi][cls]; }

    // exact inner product over the full group; characters give integers
    Int inner_product(int chi, int psi) const;
    // exact inner product over a subgroup given by element ids
    Int inner_product_on(int chi, int psi, const std::vector<int>& subgroup) const;

    bool value_is_integer(int chi, int cls, Int* out) const;

    // central character: the exponent t with chi(z) = deg * zeta_e^t, for a
    // central element z
    long long central_exponent(int chi, int z_element) const;

    bool verify_orthogonality() const;  // full row orthogonality, exact
    Int degree_square_sum() const;

    void save(std::ostream& os) const;
    static CharacterTable load(std::istream& is, const MatrixGroup& G);

private:
    CharacterTable() = default;
    const MatrixGroup* G_ = nullptr;
    long long e_ = 1, ell_ = 0;
    std::vector<long long> degrees_;
    std::vector<std::vector<CycloValue>> values_;  // [chi][class]
};

// A class function with exact cyclotomic values; exponents of the terms are
// in zeta_e units for the stated exponent.
struct ClassFunction {
    const MatrixGroup* G = nullptr;
    long long exponent = 1;
    std::vector<CycloValue> values;  // per class
};

ClassFunction as_class_function(const CharacterTable& table, int chi);

// Induced character from a subgroup: sub must be a subgroup of big given by an
// element id map sub_id -> big_id; sigma is a class function on sub. The
// result is expressed over an exponent divisible by sigma's.
ClassFunction induced_character(const MatrixGroup& big, const MatrixGroup& sub,
                                const std::vector<int>& embed, const ClassFunction& sigma);

// <f, chi_i> over big; exact, must be a rational integer.
Int multiplicity(const CharacterTable& table, const ClassFunction& f, int chi);

}  // namespace mlab::finlab
