#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mackeylab/numeric.hpp"

namespace mlab::finlab {

// Matrices over Z/p^2 (p odd), used for the level-two coset geometry. The
// ambient group SL(3, Z/p^2) is never materialized; only the coset space of
// the segment stabilizer is, via canonical submodule labels.
namespace level2 {

using ModMat = std::array<int, 9>;  // row major, entries mod m

ModMat identity();
ModMat mul(const ModMat& a, const ModMat& b, int m);
int det(const ModMat& a, int m);

// Howell normal form of the row span of a 3x3 matrix over Z/m; the unique
// canonical generating matrix of the row module.
ModMat howell_form(ModMat rows, int m);

struct Report {
    int p = 0;
    long long ambient_order_known = 0;   // p^8 |SL(3,p)|
    long long subgroup_order = 0;        // closure of the generator set
    long long coset_count = 0;           // orbit of the base module under SL(3)
    long long expected_index = 0;        // p (p+1) (p^2+p+1)
    bool index_matches = false;
    bool generators_stabilize = false;   // all generators fix the base module
    bool subgroup_is_full_stabilizer = false;
    long long double_cosets = 0;         // orbits of H on the coset space
};

// Count the double cosets of the segment stabilizer H inside SL(3, Z/p^2).
// H is generated, not enumerated as a congruence set; the index check
// certifies that the generators fill the whole stabilizer.
Report sl3_level2_double_cosets(int p = 3);

// Degenerate variant: acting subgroup = the full group; must give one orbit.
Report sl3_level2_full_group_orbit(int p = 3);

}  // namespace level2

}  // namespace mlab::finlab
