#include "mackeylab/stabilizers.hpp"

#include <algorithm>
#include <set>

namespace mlab {

namespace {

std::vector<int> flavor_roots(const RootDatum& datum, Flavor flavor)
{
    switch (flavor) {
        case Flavor::longs: return datum.long_roots();
        case Flavor::shorts: return datum.short_roots();
        default: break;
    }
    std::vector<int> all(datum.num_roots());
    for (size_t i = 0; i < datum.num_roots(); ++i) all[i] = static_cast<int>(i);
    return all;
}

// Solve the k x k rational system A u = b; returns nullopt when singular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> A, std::vector<Rat> b)
{
    int n = static_cast<int>(A.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A[r][col] != 0) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat f = A[r][col] / A[col][col];
            for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> u(n);
    for (int i = 0; i < n; ++i) u[i] = b[i] / A[i][i];
    return u;
}

}  // namespace

ExponentFunction f_omega_points(const RootDatum& datum, const std::vector<Point>& points)
{
    if (points.empty()) throw Error("f_omega_points: empty point set");
    ExponentFunction e;
    e.datum_tag = datum.spec().str();
    e.f.resize(datum.num_roots());
    for (size_t r = 0; r < datum.num_roots(); ++r) {
        bool first = true;
        Int best = 0;
        for (const auto& p : points) {
            Int v = ceil_rat(-datum.pair(static_cast<int>(r), p));
            if (first || v > best) { best = v; first = false; }
        }
        e.f[r] = to_ll(best);
    }
    e.torus_level = 0;
    return e;
}

std::vector<Point> polytope_vertices(const RootDatum& datum, const PolytopeOmega& omega)
{
    if (omega.radius < 0) throw Error("polytope radius must be nonnegative");
    const auto rows = flavor_roots(datum, omega.flavor);
    int n = datum.rank();
    // constraints alpha(u) <= r for alpha in the flavor set (closed under
    // negation, so both sides are present)
    std::vector<Point> verts;
    std::set<Point> seen;
    std::vector<int> idx(n);
    // iterate over size-n subsets of constraints
    std::vector<int> comb(n);
    for (int i = 0; i < n; ++i) comb[i] = i;
    int m = static_cast<int>(rows.size());
    if (m < n) throw Error("flavor set does not span");
    for (;;) {
        std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
        std::vector<Rat> b(n, omega.radius);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A[i][j] = datum.roots()[rows[comb[i]]].eval_coeffs[j];
        if (auto u = solve_square(std::move(A), std::move(b))) {
            bool feasible = true;
            for (int r : rows) {
                Rat v = 0;
                for (int j = 0; j < n; ++j) v += Rat(datum.roots()[r].eval_coeffs[j]) * (*u)[j];
                if (v > omega.radius) { feasible = false; break; }
            }
            if (feasible && seen.insert(*u).second) verts.push_back(*u);
        }
        // next combination
        int i = n - 1;
        while (i >= 0 && comb[i] == m - n + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (verts.empty()) throw Error("polytope vertex enumeration found nothing");
    return verts;
}

Rat polytope_max(const RootDatum& datum, const PolytopeOmega& omega, int objective_root)
{
    auto verts = polytope_vertices(datum, omega);
    bool first = true;
    Rat best = 0;
    for (const auto& u : verts) {
        Rat v = 0;
        for (int j = 0; j < datum.rank(); ++j)
            v += Rat(datum.roots()[objective_root].eval_coeffs[j]) * u[j];
        if (first || v > best) { best = v; first = false; }
    }
    return best;
}

ExponentFunction f_omega_polytope(const RootDatum& datum, const PolytopeOmega& omega)
{
    if (omega.radius < 0) throw Error("polytope radius must be nonnegative");
    ExponentFunction e;
    e.datum_tag = datum.spec().str();
    e.f.resize(datum.num_roots());
    auto verts = polytope_vertices(datum, omega);
    for (size_t r = 0; r < datum.num_roots(); ++r) {
        // m(alpha) = max over the polytope of alpha(x - z) = max alpha(u)
        bool first = true;
        Rat m = 0;
        for (const auto& u : verts) {
            Rat v = 0;
            for (int j = 0; j < datum.rank(); ++j)
                v += Rat(datum.roots()[r].eval_coeffs[j]) * u[j];
            if (first || v > m) { m = v; first = false; }
        }
        e.f[r] = to_ll(ceil_rat(m - datum.pair(static_cast<int>(r), omega.center)));
    }
    e.torus_level = 0;
    return e;
}

ExponentFunction moy_prasad_function(const RootDatum& datum, const Point& x, const Rat& r,
                                     bool plus)
{
    if (r < 0) throw Error("Moy-Prasad depth must be nonnegative");
    ExponentFunction e;
    e.datum_tag = datum.spec().str();
    e.f.resize(datum.num_roots());
    for (size_t i = 0; i < datum.num_roots(); ++i) {
        Rat v = r - datum.pair(static_cast<int>(i), x);
        e.f[i] = to_ll(plus ? ceil_plus(v) : ceil_rat(v));
    }
    e.torus_level = to_ll(plus ? ceil_plus(r) : ceil_rat(r));
    return e;
}

bool includes(const ExponentFunction& small, const ExponentFunction& big)
{
    if (small.datum_tag != big.datum_tag || small.f.size() != big.f.size())
        throw Error("exponent functions over different root data");
    if (small.torus_level < big.torus_level) return false;
    for (size_t i = 0; i < small.f.size(); ++i)
        if (small.f[i] < big.f[i]) return false;
    return true;
}

QPoly index_qpoly(const ExponentFunction& sub, const ExponentFunction& super)
{
    if (!includes(sub, super)) throw Error("index_qpoly: arguments are not nested");
    if (sub.torus_level != super.torus_level)
        throw Error("index_qpoly: unequal torus levels are out of scope");
    long long n = 0;
    for (size_t i = 0; i < sub.f.size(); ++i) n += sub.f[i] - super.f[i];
    return QPoly::monomial(1, static_cast<int>(n));
}

GxrOmegaReport verify_gxromega(const RootDatum& datum, const Point& x, const Rat& r)
{
    if (r <= 0) throw Error("verify_gxromega expects r > 0");
    auto f_s = f_omega_polytope(datum, {x, r, Flavor::shorts});
    auto f_l = f_omega_polytope(datum, {x, r, Flavor::longs});
    auto f_a = f_omega_polytope(datum, {x, r, Flavor::all});
    auto f_mp = moy_prasad_function(datum, x, r).normalized_torus();

    if (f_l.f != f_a.f) throw Error("long-root polytope differs from full polytope");

    GxrOmegaReport rep;
    rep.incl_short = includes(f_s, f_mp);
    rep.incl_long = includes(f_mp, f_l);
    rep.equality = f_mp.f == f_a.f;
    return rep;
}

}  // namespace mlab
