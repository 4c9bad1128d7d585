#pragma once

#include "mackeylab/finlab/chartable.hpp"

namespace mlab::finlab {

// ----- standard subgroups of SL(n,q) as element id lists -----

std::vector<int> upper_unitriangular(const MatrixGroup& G);
std::vector<int> lower_unitriangular(const MatrixGroup& G);
std::vector<int> borel_upper(const MatrixGroup& G);
std::vector<int> borel_lower(const MatrixGroup& G);
std::vector<int> center_elements(const MatrixGroup& G);

// unipotent radicals of the proper standard parabolic subgroups (the Borel
// radical plus, for n = 3, the two maximal-parabolic radicals)
std::vector<std::vector<int>> standard_unipotent_radicals(const MatrixGroup& G);

// full element sets of the standard proper parabolics containing the upper
// Borel (for n = 3: the Borel and both maximal parabolics)
std::vector<std::vector<int>> standard_parabolics(const MatrixGroup& G);

// ----- cuspidality and Deligne-Lusztig identification -----

// chi is cuspidal iff sum over u in U_P of chi(g u) vanishes for every g and
// every proper standard unipotent radical U_P.
bool is_cuspidal(const CharacterTable& table, int chi,
                 const std::vector<std::vector<int>>& radicals);

std::vector<int> cuspidal_characters(const CharacterTable& table,
                                     const std::vector<std::vector<int>>& radicals);

// cuspidal characters whose degree matches the Deligne-Lusztig degree for the
// given torus order polynomial evaluated at q
std::vector<int> identify_dl_cuspidals(const CharacterTable& table,
                                       const std::vector<int>& cuspidals,
                                       const Int& expected_degree);

// Green values: chi on the unipotent classes; all must be rational integers.
std::map<int, Int> green_values(const CharacterTable& table, int chi);

Int green_square_sum(const CharacterTable& table, int chi, const std::vector<int>& unipotent_radical);

// ----- Borel restriction identities -----

// pointwise equality of two characters on B, plus the vanishing of both off
// elements whose semisimple part is central
bool borel_restriction_check(const CharacterTable& table, int chi1, int chi2,
                             const std::vector<int>& borel);

bool vanishes_off_central_semisimple(const CharacterTable& table, int chi,
                                     const std::vector<int>& borel);

Int self_intertwining_on_borel(const CharacterTable& table, int chi,
                               const std::vector<int>& borel);

// central character as the exponent list over the center's elements
std::vector<std::pair<int, long long>> central_character(const CharacterTable& table, int chi);

// ----- torus and parabolic intersections -----

struct TorusIntersectionReport {
    long long torus_order = 0;
    long long expected_order = 0;  // q^2 + q + 1
    bool order_matches = false;
    bool intersections_central = true;      // T cap P inside Z for all standard P
    long long max_intersection_order = 0;   // largest |T cap P|
};

// nonsplit torus of SL(3,q): norm-one multiplications of F_{q^3} acting on a
// 3-dimensional F_q-space
std::vector<int> coxeter_torus_sl3(const MatrixGroup& G);

TorusIntersectionReport coxeter_torus_and_parabolic_intersection(const MatrixGroup& G);

// ----- Heisenberg restriction and opposite-Borel induction (SL(3,q)) -----

struct HeisenbergProfile {
    // per irreducible sigma of U_op: degree, multiplicity in Res tau, and the
    // classification flags
    struct Row {
        long long degree = 0;
        Int mult;
        bool linear_doubly_nontrivial = false;
        bool stone_von_neumann = false;  // degree q, nontrivial central character
    };
    std::vector<Row> rows;
};

HeisenbergProfile heisenberg_restriction_profile(const CharacterTable& table, int chi);

struct BorelOpDecomposition {
    long long q = 0;
    // induced from a doubly nontrivial linear character of U_op
    bool linear_induction_irreducible = false;
    Int linear_induction_norm;
    long long linear_induction_degree = 0;
    // induced from a Stone-von-Neumann character of U_op
    long long heisenberg_constituents = 0;  // distinct irreducibles, multiplicity one each
    bool heisenberg_multiplicity_free = false;
    bool heisenberg_degrees_match = false;  // all of degree q(q-1)
    Int total_degree_check;                 // degree of Ind, equals (q-1)^2 * q
};

BorelOpDecomposition borel_op_induced_decomposition(int q);

}  // namespace mlab::finlab
