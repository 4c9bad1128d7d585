#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mackeylab/rootdata.hpp"

namespace mlab {

// A point of the apartment, exact rational coordinates in the coroot basis.
using Point = std::vector<Rat>;

Point parse_point(const std::string& text, int rank);  // "1/2,0"
std::string point_str(const Point& x);
Point point_sub(const Point& a, const Point& b);
Point point_add_cochar(const Point& a, const std::vector<int>& ell);

struct AffineRoot {
    int root;   // index into RootDatum::roots()
    int level;  // represents alpha + level
};

// Affine roots vanishing at x, their gradients, and a base of the gradient
// system chosen so that its positive part sits inside Phi+.
struct LocalRootSystem {
    Point x;
    std::vector<AffineRoot> phi_x;
    std::vector<int> lin;       // gradients, root indices
    std::vector<int> lin_plus;  // lin intersect Phi+
    std::vector<int> delta_x;   // indecomposables of lin_plus
};

LocalRootSystem local_root_system(const RootDatum& datum, const Point& x);

bool is_special(const RootDatum& datum, const Point& x);

// x is a vertex iff the gradients vanishing at x span full rank.
bool is_vertex(const RootDatum& datum, const Point& x);

// Upsilon_x = { w in W0 : w D is contained in D_x }
// = { w : w^{-1} beta positive for every beta in Delta_x }.
std::vector<size_t> upsilon(const WeylGroup& W, const Point& x);

// Phi-dagger = { alpha : alpha(ell) > alpha(y - x) }.
std::vector<int> phi_dagger(const RootDatum& datum, const Point& x, const Point& y,
                            const std::vector<int>& ell);

// Element of the affine Weyl group acting as z -> w z + t.
struct AffineElement {
    size_t w;
    std::vector<int> t;
    bool operator==(const AffineElement&) const = default;
    auto operator<=>(const AffineElement&) const = default;
};

AffineElement affine_mult(const WeylGroup& W, const AffineElement& a, const AffineElement& b);
AffineElement affine_inverse(const WeylGroup& W, const AffineElement& a);

// W_x: the image of W_x^lin under w -> t(x - w x) w; translations must land in
// the cocharacter lattice, which holds for any x since reflections through
// affine hyperplanes move x by integer coroot multiples.
std::vector<AffineElement> stabilizer_subgroup(const WeylGroup& W, const Point& x);

// Brute-force double coset oracle for W_y \ W / W_x. Orbits are computed
// exactly (they are finite, of size at most |W_y| * |W_x|); the window only
// bounds which group elements are classified.
class AffineDoubleCosets {
public:
    AffineDoubleCosets(const WeylGroup& W, const Point& x, const Point& y, int window);

    struct ClassInfo {
        AffineElement canonical;           // minimal orbit member
        std::vector<std::vector<int>> xplus_translations;  // pure translations t(l) in the
                                                           // orbit with l in X+_{x,y}
        size_t orbit_size = 0;
    };

    const std::vector<ClassInfo>& classes() const { return classes_; }
    // Class id of an arbitrary element (computes its orbit if new).
    size_t class_of(const AffineElement& u);

private:
    std::set<AffineElement> orbit_of(const AffineElement& u) const;
    bool in_xplus(const std::vector<int>& ell) const;

    const WeylGroup* W_;
    Point x_, y_;
    std::vector<AffineElement> wx_, wy_;
    std::vector<int> lin_plus_;  // Phi_x^{lin,+}
    std::map<AffineElement, size_t> label_;
    std::vector<ClassInfo> classes_;
};

}  // namespace mlab
