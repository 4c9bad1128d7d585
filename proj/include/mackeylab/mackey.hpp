#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mackeylab/apartment.hpp"
#include "mackeylab/stabilizers.hpp"

namespace mlab {

// Central character data for the residue quotient at a vertex. Either an
// opaque tag compared by equality, or a concrete character of a cyclic center
// Z of order modulus, with exponent in Z/modulus. A Weyl action on concrete
// characters is supplied explicitly as one multiplier per Weyl element;
// absent multipliers mean the trivial action.
struct CentralCharacter {
    bool concrete = false;
    std::string tag;                       // opaque form
    long long modulus = 1;                 // concrete form
    long long exponent = 0;
    std::vector<long long> weyl_multipliers;  // per Weyl element index; empty = trivial

    static CentralCharacter opaque(std::string t)
    {
        CentralCharacter c;
        c.tag = std::move(t);
        return c;
    }
    static CentralCharacter cyclic(long long modulus, long long exponent)
    {
        CentralCharacter c;
        c.concrete = true;
        c.modulus = modulus;
        c.exponent = ((exponent % modulus) + modulus) % modulus;
        return c;
    }
};

struct SupercuspidalDatum {
    Point x;                 // vertex carrying the inducing representation
    size_t torus_w_class;    // Weyl element index labeling the torus twist
    std::string theta_tag;   // label of the inducing torus character
    QPoly degree;            // degree of tau as a polynomial in q
    CentralCharacter central;
    bool dl_flagged = true;  // degree must match the Deligne-Lusztig formula

    static SupercuspidalDatum dl(const WeylGroup& W, const Point& x, size_t w,
                                 CentralCharacter central, std::string theta_tag = "");
};

struct PrincipalSeriesDatum {
    CentralCharacter central_restriction;
    int depth = 0;  // depth-zero only
};

struct XPlusEntry {
    std::vector<int> ell;
    bool interior = false;
};

// All ell in the cocharacter lattice with |ell|_inf <= bound and
// alpha(ell) >= alpha(y - x) for alpha in Phi_x^{lin,+}; interior iff strict.
std::vector<XPlusEntry> xplus_enumerate(const RootDatum& datum, const Point& x, const Point& y,
                                        int bound);

bool xplus_member(const RootDatum& datum, const Point& x, const Point& y,
                  const std::vector<int>& ell);
bool xplus_interior(const RootDatum& datum, const Point& x, const Point& y,
                    const std::vector<int>& ell);

// eta(x - y + ell) = sum over Phi-dagger of (alpha(ell) + ceil(alpha(x-y)) - 1).
Int mackey_eta(const RootDatum& datum, const Point& x, const Point& y,
               const std::vector<int>& ell);

// deg(tau) * q^eta * |G_y / B|; interior ell only, boundary is rejected.
QPoly component_degree(const WeylGroup& W, const Point& x, const Point& y,
                       const std::vector<int>& ell, const QPoly& deg_tau);

// (r0, s0) with r0 = max over Delta_x of beta(x-y+ell) and s0 the floor-max
// over all roots.
std::pair<long long, long long> depth_bounds(const RootDatum& datum, const Point& x,
                                             const Point& y, const std::vector<int>& ell);

// One-sided disjointness certificate: depth intervals do not overlap.
bool disjointness(const RootDatum& datum, const Point& x1, const std::vector<int>& ell1,
                  const Point& x2, const std::vector<int>& ell2, const Point& y);

struct MackeyComponent {
    std::vector<int> ell;
    bool interior = false;
    std::optional<size_t> w_upsilon;  // interior only
    std::optional<QPoly> degree;      // interior only
    long long r0 = 0;
    long long s0 = 0;
};

std::vector<MackeyComponent> mackey_components(const WeylGroup& W, const Point& x, const Point& y,
                                               int bound, const QPoly& deg_tau);

struct CoincidenceRow {
    std::vector<int> ell;
    bool interior = false;
    // "coincide", "non-shared", or "unknown"
    std::string marker;
    std::string reason;
};

struct CoincidenceReport {
    bool same_torus = false;
    bool same_central = false;
    bool torus_parabolic_flag = false;
    std::vector<CoincidenceRow> rows;
};

// Symbolic claims: which Mackey components of the two supercuspidals are
// known to coincide, and which theorem licenses each line.
CoincidenceReport coincidence_report(const WeylGroup& W, const SupercuspidalDatum& tau1,
                                     const SupercuspidalDatum& tau2, const Point& x,
                                     const Point& y, int bound, bool torus_parabolic_flag);

// |G_y/B| * q^{(n-1)|Phi+|}: dimension of the G_{y,n}-fixed subspace of a
// depth-zero principal series.
QPoly ps_fixed_dim(const WeylGroup& W, const PrincipalSeriesDatum& ps, int n);

// deg(tau) * |Z| / (q-1)^rank when the central characters match, else 0.
QPoly intertwining_value(const WeylGroup& W, const QPoly& deg_tau, const QPoly& z_order,
                         bool central_match);

struct CompatibilityResult {
    bool compatible = false;
    std::optional<size_t> witness_w;
};

// Does some Weyl twist of the principal series central datum restrict to the
// cuspidal central character?
CompatibilityResult compatibility_check(const WeylGroup& W, const SupercuspidalDatum& tau,
                                        const PrincipalSeriesDatum& chi);

}  // namespace mlab
