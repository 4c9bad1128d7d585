#include "mackeylab/mackey.hpp"

#include <algorithm>

namespace mlab {

SupercuspidalDatum SupercuspidalDatum::dl(const WeylGroup& W, const Point& x, size_t w,
                                          CentralCharacter central, std::string theta_tag)
{
    SupercuspidalDatum tau;
    tau.x = x;
    tau.torus_w_class = w;
    tau.theta_tag = std::move(theta_tag);
    tau.degree = dl_cuspidal_degree_poly(W, w);
    tau.central = std::move(central);
    tau.dl_flagged = true;
    return tau;
}

namespace {

void check_vertex_pair(const RootDatum& datum, const Point& x, const Point& y)
{
    if (!is_vertex(datum, x)) throw Error("x is not a vertex");
    if (!is_vertex(datum, y)) throw Error("y is not a vertex");
    if (!is_special(datum, y)) throw Error("y must be special");
}

}  // namespace

bool xplus_member(const RootDatum& datum, const Point& x, const Point& y,
                  const std::vector<int>& ell)
{
    auto L = local_root_system(datum, x);
    Point ymx = point_sub(y, x);
    for (int r : L.lin_plus)
        if (Rat(datum.pair_int(r, ell)) < datum.pair(r, ymx)) return false;
    return true;
}

bool xplus_interior(const RootDatum& datum, const Point& x, const Point& y,
                    const std::vector<int>& ell)
{
    auto L = local_root_system(datum, x);
    Point ymx = point_sub(y, x);
    for (int r : L.lin_plus)
        if (Rat(datum.pair_int(r, ell)) <= datum.pair(r, ymx)) return false;
    return true;
}

std::vector<XPlusEntry> xplus_enumerate(const RootDatum& datum, const Point& x, const Point& y,
                                        int bound)
{
    check_vertex_pair(datum, x, y);
    auto L = local_root_system(datum, x);
    Point ymx = point_sub(y, x);
    std::vector<XPlusEntry> out;
    int n = datum.rank();
    std::vector<int> ell(n, -bound);
    for (;;) {
        bool member = true, interior = true;
        for (int r : L.lin_plus) {
            Rat lhs(datum.pair_int(r, ell));
            Rat rhs = datum.pair(r, ymx);
            if (lhs < rhs) { member = false; break; }
            if (lhs == rhs) interior = false;
        }
        if (member) out.push_back({ell, interior});
        int i = 0;
        while (i < n && ell[i] == bound) ell[i++] = -bound;
        if (i == n) break;
        ++ell[i];
    }
    std::sort(out.begin(), out.end(),
              [](const XPlusEntry& a, const XPlusEntry& b) { return a.ell < b.ell; });
    return out;
}

Int mackey_eta(const RootDatum& datum, const Point& x, const Point& y,
               const std::vector<int>& ell)
{
    Point xmy = point_sub(x, y);
    Int eta = 0;
    for (int r : phi_dagger(datum, x, y, ell))
        eta += Int(datum.pair_int(r, ell)) + ceil_rat(datum.pair(r, xmy)) - 1;
    return eta;
}

QPoly component_degree(const WeylGroup& W, const Point& x, const Point& y,
                       const std::vector<int>& ell, const QPoly& deg_tau)
{
    const RootDatum& datum = W.datum();
    check_vertex_pair(datum, x, y);
    if (!xplus_member(datum, x, y, ell)) throw Error("ell is outside X+");
    if (!xplus_interior(datum, x, y, ell))
        throw Error("boundary ell: the parabolic-index variant of the degree is out of scope");
    Int eta = mackey_eta(datum, x, y, ell);
    if (eta < 0) throw Error("negative eta; interiority bug");
    if (is_special(datum, x)) {
        // cross check the closed form 2 rho(x - y + ell) - |Phi+|
        Point v = point_sub(point_add_cochar(x, ell), y);
        Rat alt = datum.two_rho(v) - static_cast<long long>(datum.positive_roots().size());
        if (!is_integral(alt) || floor_rat(alt) != eta)
            throw Error("eta route mismatch at a special vertex");
    }
    return deg_tau * QPoly::monomial(1, static_cast<int>(to_ll(eta))) * poincare_poly(W);
}

std::pair<long long, long long> depth_bounds(const RootDatum& datum, const Point& x,
                                             const Point& y, const std::vector<int>& ell)
{
    check_vertex_pair(datum, x, y);
    if (!xplus_member(datum, x, y, ell)) throw Error("ell is outside X+");
    auto L = local_root_system(datum, x);
    Point v = point_sub(point_add_cochar(x, ell), y);
    Rat r0(-1);
    for (int b : L.delta_x) r0 = std::max(r0, datum.pair(b, v));
    if (!is_integral(r0)) throw Error("non-integral depth lower bound");
    long long s0 = 0;
    bool first = true;
    for (size_t r = 0; r < datum.num_roots(); ++r) {
        long long f = to_ll(floor_rat(datum.pair(static_cast<int>(r), v)));
        if (first || f > s0) { s0 = f; first = false; }
    }
    long long r0v = to_ll(floor_rat(r0));
    if (r0v < 0 || s0 < r0v) throw Error("depth bound ordering violated");
    return {r0v, s0};
}

bool disjointness(const RootDatum& datum, const Point& x1, const std::vector<int>& ell1,
                  const Point& x2, const std::vector<int>& ell2, const Point& y)
{
    auto [r1, s1] = depth_bounds(datum, x1, y, ell1);
    auto [r2, s2] = depth_bounds(datum, x2, y, ell2);
    return s1 < r2 || s2 < r1;
}

std::vector<MackeyComponent> mackey_components(const WeylGroup& W, const Point& x, const Point& y,
                                               int bound, const QPoly& deg_tau)
{
    const RootDatum& datum = W.datum();
    auto entries = xplus_enumerate(datum, x, y, bound);
    auto ups = upsilon(W, x);
    std::vector<MackeyComponent> out;
    for (const auto& e : entries) {
        MackeyComponent c;
        c.ell = e.ell;
        c.interior = e.interior;
        auto [r0, s0] = depth_bounds(datum, x, y, e.ell);
        c.r0 = r0;
        c.s0 = s0;
        if (e.interior) {
            c.degree = component_degree(W, x, y, e.ell, deg_tau);
            // unique w in Upsilon_x with ell + x - y in w D
            Point z = point_sub(point_add_cochar(x, e.ell), y);
            std::optional<size_t> found;
            for (size_t w : ups) {
                Point back = W.apply_to_point(W.inverse(w), z);
                bool dominant = true;
                for (int i = 0; i < datum.rank(); ++i)
                    if (datum.pair(datum.simple_root(i), back) <= 0) { dominant = false; break; }
                if (dominant) {
                    if (found) throw Error("interior partition not unique");
                    found = w;
                }
            }
            if (!found) throw Error("interior partition missed an element");
            c.w_upsilon = found;
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

bool central_equal(const CentralCharacter& a, const CentralCharacter& b)
{
    if (a.concrete != b.concrete) throw Error("incomparable central character formats");
    if (a.concrete) return a.modulus == b.modulus && a.exponent == b.exponent;
    return a.tag == b.tag;
}

}  // namespace

CoincidenceReport coincidence_report(const WeylGroup& W, const SupercuspidalDatum& tau1,
                                     const SupercuspidalDatum& tau2, const Point& x,
                                     const Point& y, int bound, bool torus_parabolic_flag)
{
    const RootDatum& datum = W.datum();
    if (tau1.x != x || tau2.x != x) throw Error("both representations must share the vertex x");
    CoincidenceReport rep;
    rep.same_torus = tau1.torus_w_class == tau2.torus_w_class;
    rep.same_central = central_equal(tau1.central, tau2.central);
    rep.torus_parabolic_flag = torus_parabolic_flag;

    bool identical = rep.same_torus && rep.same_central && tau1.theta_tag == tau2.theta_tag;
    Point ymx = point_sub(y, x);
    for (const auto& e : xplus_enumerate(datum, x, y, bound)) {
        CoincidenceRow row;
        row.ell = e.ell;
        row.interior = e.interior;
        bool y_minus_ell_is_x = true;
        for (int i = 0; i < datum.rank(); ++i)
            if (ymx[i] != e.ell[i]) { y_minus_ell_is_x = false; break; }
        if (identical) {
            row.marker = "coincide";
            row.reason = "identical inducing data";
        } else if (rep.same_torus && rep.same_central && torus_parabolic_flag) {
            if (y_minus_ell_is_x) {
                row.marker = "non-shared";
                row.reason = "restriction splits as tau_i plus a common summand";
            } else {
                row.marker = "coincide";
                row.reason = "minisotropic torus meets parabolics only in the center";
            }
        } else if (rep.same_torus && rep.same_central && e.interior) {
            row.marker = "coincide";
            row.reason = "interior components depend only on torus and central character";
        } else {
            row.marker = "unknown";
            row.reason = "";
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

QPoly ps_fixed_dim(const WeylGroup& W, const PrincipalSeriesDatum& ps, int n)
{
    if (ps.depth != 0) throw Error("only depth-zero principal series are supported");
    if (n < 1) throw Error("ps_fixed_dim needs n >= 1");
    int nphi = static_cast<int>(W.datum().positive_roots().size());
    return poincare_poly(W) * QPoly::monomial(1, (n - 1) * nphi);
}

QPoly intertwining_value(const WeylGroup& W, const QPoly& deg_tau, const QPoly& z_order,
                         bool central_match)
{
    if (!central_match) return QPoly();
    QPoly denom = (QPoly::q() - QPoly(1)).pow(static_cast<unsigned>(W.datum().rank()));
    return (deg_tau * z_order).divide_exact(denom);
}

CompatibilityResult compatibility_check(const WeylGroup& W, const SupercuspidalDatum& tau,
                                        const PrincipalSeriesDatum& chi)
{
    const CentralCharacter& a = tau.central;
    const CentralCharacter& b = chi.central_restriction;
    if (a.concrete != b.concrete) throw Error("incomparable central character formats");

    CompatibilityResult res;
    if (!a.concrete) {
        // opaque tags carry a trivial action: equality or nothing
        if (a.tag == b.tag) {
            res.compatible = true;
            res.witness_w = W.identity();
        }
        return res;
    }
    if (a.modulus != b.modulus) throw Error("central characters over different centers");
    if (a.modulus == 1) {
        // trivial center: compatibility always holds
        res.compatible = true;
        res.witness_w = W.identity();
        return res;
    }
    for (size_t w = 0; w < W.size(); ++w) {
        long long mult = 1;
        if (!b.weyl_multipliers.empty()) {
            if (b.weyl_multipliers.size() != W.size())
                throw Error("Weyl action table has the wrong size");
            mult = b.weyl_multipliers[w];
        }
        long long twisted = ((b.exponent * mult) % a.modulus + a.modulus) % a.modulus;
        if (twisted == a.exponent) {
            res.compatible = true;
            res.witness_w = w;
            return res;
        }
    }
    return res;
}

}  // namespace mlab
