#pragma once

#include <vector>

#include "mackeylab/apartment.hpp"
#include "mackeylab/rootdata.hpp"

namespace mlab {

// Per-root congruence exponents plus a torus filtration level. Encodes the
// subgroup S_{torus_level} * prod_alpha G_alpha(P^{f(alpha)}); containment of
// groups is pointwise >= on exponents and >= on the torus level.
struct ExponentFunction {
    std::string datum_tag;        // Cartan spec string, for mismatch detection
    std::vector<long long> f;     // indexed by root index
    long long torus_level = 0;

    ExponentFunction normalized_torus() const
    {
        ExponentFunction e = *this;
        e.torus_level = 0;
        return e;
    }
};

enum class Flavor { all, longs, shorts };

// Omega_x(A, r) with the constraint set restricted to all, long or short
// roots: { z : |alpha(z - x)| <= r }.
struct PolytopeOmega {
    Point center;
    Rat radius;
    Flavor flavor = Flavor::all;
};

ExponentFunction f_omega_points(const RootDatum& datum, const std::vector<Point>& points);

// Exact maximum of alpha over { u : beta(u) <= r for beta in the flavor set },
// by vertex enumeration over active-constraint subsets.
Rat polytope_max(const RootDatum& datum, const PolytopeOmega& omega, int objective_root);

// All polytope vertices (deduplicated); exposed for the LP cross-checks.
std::vector<Point> polytope_vertices(const RootDatum& datum, const PolytopeOmega& omega);

ExponentFunction f_omega_polytope(const RootDatum& datum, const PolytopeOmega& omega);

// Moy-Prasad exponents ceil(r - alpha(x)); the plus flag selects the strict
// ceiling, giving the G_{x,r+} variant.
ExponentFunction moy_prasad_function(const RootDatum& datum, const Point& x, const Rat& r,
                                     bool plus = false);

bool includes(const ExponentFunction& small, const ExponentFunction& big);

// |super/sub| as a power of q; requires includes(sub, super) and equal torus
// levels.
QPoly index_qpoly(const ExponentFunction& sub, const ExponentFunction& super);

struct GxrOmegaReport {
    bool incl_short = false;  // G_{Omega^s} inside S0 G_{x,r}
    bool incl_long = false;   // S0 G_{x,r} inside G_{Omega^l}
    bool equality = false;    // S0 G_{x,r} equals G_{Omega}
};

GxrOmegaReport verify_gxromega(const RootDatum& datum, const Point& x, const Rat& r);

}  // namespace mlab
