#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mackeylab/cartan.hpp"
#include "mackeylab/qpoly.hpp"

namespace mlab {

// A root, stored as an integer coefficient vector over the simple roots.
// eval_coeffs is the vector A with alpha(x) = sum_i A[i] x_i for x written
// in the coroot basis; coroot_coords expresses alpha^vee over that basis.
struct Root {
    std::vector<int> simple_coords;
    std::vector<int> eval_coeffs;
    std::vector<int> coroot_coords;
    int height = 0;
    long long length2 = 0;  // squared length in the symmetrized form
    bool positive = false;
    bool is_long = false;
    bool is_short = false;  // both flags set for simply-laced components
    int component = 0;
    int negative_index = -1;
};

class RootDatum {
public:
    explicit RootDatum(const CartanSpec& spec);
    explicit RootDatum(const std::string& spec) : RootDatum(CartanSpec::parse(spec)) {}

    const CartanSpec& spec() const { return spec_; }
    int rank() const { return rank_; }
    int num_components() const { return static_cast<int>(spec_.components.size()); }

    // cartan()[i][j] is the pairing of the j-th simple root with the i-th
    // simple coroot.
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<long long>& symmetrizers() const { return sym_; }

    const std::vector<Root>& roots() const { return roots_; }
    size_t num_roots() const { return roots_.size(); }
    const std::vector<int>& positive_roots() const { return positive_; }
    const std::vector<int>& long_roots() const { return long_; }
    const std::vector<int>& short_roots() const { return short_; }
    int simple_root(int i) const { return simple_[i]; }
    int component_of_simple(int i) const { return simple_component_[i]; }

    int root_index(const std::vector<int>& simple_coords) const;  // -1 if absent
    int negative_of(int root) const { return roots_[root].negative_index; }

    // highest root / highest short root per component (indices into roots())
    const std::vector<int>& highest_roots() const { return highest_; }
    const std::vector<int>& highest_short_roots() const { return highest_short_; }

    // Pairing alpha(x) for x in coroot coordinates.
    Rat pair(int root, const std::vector<Rat>& x) const;
    long long pair_int(int root, const std::vector<int>& x) const;

    // 2*rho(x) where 2*rho is the sum of the positive roots.
    Rat two_rho(const std::vector<Rat>& x) const;

    std::vector<Rat> fundamental_coweight(int i) const;
    // {0} together with omega_i / m_i, the m_i being the highest-root
    // coefficients; standard vertex set of the fundamental alcove for a
    // simply connected split group.
    std::vector<std::vector<Rat>> fundamental_alcove_vertices() const;

private:
    void build_component(char letter, int rank, int offset);
    void generate_roots();

    CartanSpec spec_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<long long> sym_;           // symmetrizer d_i per simple root
    std::vector<int> simple_component_;    // component id per simple index
    std::vector<Root> roots_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> positive_, long_, short_, simple_;
    std::vector<int> highest_, highest_short_;
};

// Finite Weyl group, fully enumerated. Element 0 is the identity. Each element
// carries its action on the coroot lattice, its action on roots as a
// permutation of root indices, a reduced word and the length.
class WeylGroup {
public:
    struct Element {
        std::vector<int> cochar_mat;  // rank x rank, row major: (w x)_i = sum_j M[i][j] x_j
        std::vector<int> root_perm;
        std::vector<int> word;
        int length = 0;
    };

    explicit WeylGroup(const RootDatum& datum, int rank_guard = 6);

    const RootDatum& datum() const { return *datum_; }
    size_t size() const { return elems_.size(); }
    const Element& at(size_t i) const { return elems_[i]; }

    size_t identity() const { return 0; }
    size_t simple_reflection(int i) const { return simple_refl_[i]; }
    size_t reflection_for_root(int root) const;
    size_t mult(size_t a, size_t b) const;  // (ab) acts as a after b
    size_t inverse(size_t a) const;
    size_t coxeter_element() const;  // product of simple reflections in index order

    int apply_to_root(size_t w, int root) const { return elems_[w].root_perm[root]; }
    std::vector<Rat> apply_to_point(size_t w, const std::vector<Rat>& x) const;
    std::vector<int> apply_to_cochar(size_t w, const std::vector<int>& x) const;

    std::vector<std::vector<size_t>> conjugacy_classes() const;

private:
    size_t index_of(const std::vector<int>& mat) const;
    const RootDatum* datum_;
    std::vector<Element> elems_;
    std::map<std::vector<int>, size_t> index_;
    std::vector<size_t> simple_refl_;
};

QPoly poincare_poly(const WeylGroup& W);

// Invariant degrees per Cartan type, from the classical tables; validated
// against the positive root count on every call.
std::vector<int> weyl_degrees(const CartanSpec& spec);

// Order polynomial det(q*I - M_w) of the twisted torus attached to w.
QPoly torus_order_poly(const WeylGroup& W, size_t w);

// prod_i(q^{d_i} - 1) / torus_order_poly(w); exact division required.
QPoly dl_cuspidal_degree_poly(const WeylGroup& W, size_t w);

// q^{|Phi+|} * prod_i (q^{d_i} - 1), the order of the group of F_q-points.
QPoly finite_group_order_poly(const RootDatum& datum);

}  // namespace mlab
