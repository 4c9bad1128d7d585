#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mackeylab/stabilizers.hpp"

using namespace mlab;

namespace {

Point zero(const RootDatum& d) { return Point(d.rank(), Rat(0)); }

// independent reimplementation of the vertex-based LP for the cross check:
// Cramer style solve over every constraint subset, no shared code with the
// library path
Rat brute_force_max(const RootDatum& d, const PolytopeOmega& omega, int obj)
{
    std::vector<int> rows;
    switch (omega.flavor) {
        case Flavor::longs: rows = d.long_roots(); break;
        case Flavor::shorts: rows = d.short_roots(); break;
        default:
            for (size_t i = 0; i < d.num_roots(); ++i) rows.push_back(static_cast<int>(i));
    }
    int n = d.rank();
    REQUIRE(n <= 3);
    auto det3 = [](std::vector<std::vector<Rat>>& m, int k) -> Rat {
        if (k == 1) return m[0][0];
        if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    bool any = false;
    Rat best = 0;
    std::vector<int> pick(n);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) A[i][j] = d.roots()[rows[pick[i]]].eval_coeffs[j];
            Rat D = det3(A, n);
            if (D == 0) return;
            // Cramer: u_j = det(A with column j replaced by r) / det(A)
            std::vector<Rat> u(n);
            for (int j = 0; j < n; ++j) {
                auto Aj = A;
                for (int i = 0; i < n; ++i) Aj[i][j] = omega.radius;
                u[j] = det3(Aj, n) / D;
            }
            for (int r : rows) {
                Rat v = 0;
                for (int j = 0; j < n; ++j) v += Rat(d.roots()[r].eval_coeffs[j]) * u[j];
                if (v > omega.radius) return;
            }
            Rat v = 0;
            for (int j = 0; j < n; ++j) v += Rat(d.roots()[obj].eval_coeffs[j]) * u[j];
            if (!any || v > best) { best = v; any = true; }
            return;
        }
        for (int s = start; s < static_cast<int>(rows.size()); ++s) {
            pick[depth] = s;
            rec(s + 1, depth + 1);
        }
    };
    rec(0, 0);
    REQUIRE(any);
    return best;
}

}  // namespace

TEST_CASE("f_omega on point sets")
{
    RootDatum a2("A2");
    SUBCASE("single origin point")
    {
        auto e = f_omega_points(a2, {zero(a2)});
        for (auto v : e.f) CHECK(v == 0);
    }
    SUBCASE("segment to (alpha+beta)^vee")
    {
        Point tip{Rat(1), Rat(1)};
        auto e = f_omega_points(a2, {zero(a2), tip});
        auto at = [&](std::vector<int> coords) { return e.f[a2.root_index(coords)]; };
        CHECK(at({1, 0}) == 0);
        CHECK(at({0, 1}) == 0);
        CHECK(at({1, 1}) == 0);
        CHECK(at({-1, 0}) == 1);
        CHECK(at({0, -1}) == 1);
        CHECK(at({-1, -1}) == 2);
    }
    SUBCASE("alcove closure gives Iwahori exponents")
    {
        auto e = f_omega_points(a2, a2.fundamental_alcove_vertices());
        for (int r : a2.positive_roots()) {
            CHECK(e.f[r] == 0);
            CHECK(e.f[a2.negative_of(r)] == 1);
        }
    }
    SUBCASE("empty input is an error")
    {
        CHECK_THROWS_AS(f_omega_points(a2, {}), Error);
    }
}

TEST_CASE("interior points force strictly positive shifts")
{
    // x interior of the hull: f(alpha) > -alpha(x), i.e. the 0+ filtration sits inside
    RootDatum a2("A2");
    Point x{Rat(1, 3), Rat(1, 5)};
    std::vector<Point> pts;
    for (int i = 0; i < 2; ++i)
        for (int s : {-1, 1}) {
            Point p = x;
            p[i] += s;
            pts.push_back(p);
        }
    auto e = f_omega_points(a2, pts);
    auto plus = moy_prasad_function(a2, x, 0, true).normalized_torus();
    CHECK(includes(e, plus));
}

TEST_CASE("polytope maxima: LP against brute force and expected values")
{
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), rad_num(1, 5), rad_den(1, 2);
    for (const char* name : {"A2", "C2", "G2", "A1+A1"}) {
        RootDatum d(name);
        for (int iter = 0; iter < 5; ++iter) {
            Point x(d.rank());
            for (auto& c : x) c = Rat(num(rng), den(rng));
            Rat r(rad_num(rng), rad_den(rng));
            for (Flavor fl : {Flavor::all, Flavor::longs, Flavor::shorts}) {
                PolytopeOmega omega{x, r, fl};
                for (size_t a = 0; a < d.num_roots(); ++a) {
                    Rat lp = polytope_max(d, omega, static_cast<int>(a));
                    Rat bf = brute_force_max(d, omega, static_cast<int>(a));
                    CHECK(lp == bf);
                }
            }
        }
    }
}

TEST_CASE("polytope maxima structure per flavor")
{
    Rat r(3, 2);
    SUBCASE("non-G2: m(alpha) = r for every root, flavor all")
    {
        for (const char* name : {"A2", "C2", "B3", "A1+A1"}) {
            RootDatum d(name);
            PolytopeOmega omega{zero(d), r, Flavor::all};
            for (size_t a = 0; a < d.num_roots(); ++a)
                CHECK(polytope_max(d, omega, static_cast<int>(a)) == r);
        }
    }
    SUBCASE("G2 flavor all: long roots reach r, short roots stop at 2r/3")
    {
        RootDatum d("G2");
        PolytopeOmega omega{zero(d), r, Flavor::all};
        for (int a : d.long_roots()) CHECK(polytope_max(d, omega, a) == r);
        for (int a : d.short_roots()) CHECK(polytope_max(d, omega, a) == Rat(2) * r / 3);
    }
    SUBCASE("flavor short: every root reaches at least r")
    {
        for (const char* name : {"C2", "G2", "B3"}) {
            RootDatum d(name);
            PolytopeOmega omega{zero(d), r, Flavor::shorts};
            for (size_t a = 0; a < d.num_roots(); ++a)
                CHECK(polytope_max(d, omega, static_cast<int>(a)) >= r);
        }
    }
    SUBCASE("radius zero degenerates to the center")
    {
        RootDatum d("A2");
        Point x{Rat(1, 2), Rat(1, 3)};
        auto e = f_omega_polytope(d, {x, Rat(0), Flavor::all});
        auto pts = f_omega_points(d, {x});
        CHECK(e.f == pts.f);
    }
}

TEST_CASE("flavor all equals flavor long for the stabilizer exponents")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    for (const char* name : {"A2", "C2", "G2", "B3"}) {
        RootDatum d(name);
        for (int iter = 0; iter < 4; ++iter) {
            Point x(d.rank());
            for (auto& c : x) c = Rat(num(rng), den(rng));
            for (Rat r : {Rat(1, 2), Rat(1), Rat(3, 2)}) {
                auto fa = f_omega_polytope(d, {x, r, Flavor::all});
                auto fl = f_omega_polytope(d, {x, r, Flavor::longs});
                CHECK(fa.f == fl.f);
            }
        }
    }
}

TEST_CASE("moy prasad")
{
    RootDatum a1("A1");
    Point o = zero(a1);
    SUBCASE("r = 0 at the origin")
    {
        auto e = moy_prasad_function(a1, o, 0);
        for (auto v : e.f) CHECK(v == 0);
        CHECK(e.torus_level == 0);
    }
    SUBCASE("r = 1")
    {
        auto e = moy_prasad_function(a1, o, 1);
        CHECK(e.f[a1.simple_root(0)] == 1);
        CHECK(e.f[a1.negative_of(a1.simple_root(0))] == 1);
        CHECK(e.torus_level == 1);
    }
    SUBCASE("0+ gives the pro-unipotent radical exponents")
    {
        auto e = moy_prasad_function(a1, o, 0, true);
        CHECK(e.f[a1.simple_root(0)] == 1);
        CHECK(e.torus_level == 1);
        RootDatum c2("C2");
        Point x{Rat(1, 2), Rat(1, 2)};
        auto ec = moy_prasad_function(c2, x, 0, true);
        for (size_t r = 0; r < c2.num_roots(); ++r) {
            Rat v = -c2.pair(static_cast<int>(r), x);
            CHECK(ec.f[r] == to_ll(ceil_plus(v)));
        }
    }
    SUBCASE("negative r is an error")
    {
        CHECK_THROWS_AS(moy_prasad_function(a1, o, Rat(-1)), Error);
    }
}

TEST_CASE("includes is a partial order and matches filtration monotonicity")
{
    RootDatum a2("A2");
    Point o = zero(a2);
    auto f0 = moy_prasad_function(a2, o, 0);
    auto f1 = moy_prasad_function(a2, o, 1);
    auto f2 = moy_prasad_function(a2, o, 2);
    CHECK(includes(f0, f0));
    CHECK(includes(f1, f0));
    CHECK(includes(f2, f1));
    CHECK(includes(f2, f0));
    CHECK_FALSE(includes(f0, f1));

    // antisymmetry on canonical forms
    CHECK((includes(f1, f0) && includes(f0, f1)) == false);

    // mismatched data
    RootDatum c2("C2");
    auto g = moy_prasad_function(c2, zero(c2), 0);
    CHECK_THROWS_AS(includes(f0, g), Error);
}

TEST_CASE("index polynomials")
{
    RootDatum a2("A2");
    RootDatum a1("A1");
    Point o2 = zero(a2), o1 = zero(a1);
    SUBCASE("equal functions give 1")
    {
        auto f = moy_prasad_function(a2, o2, 1);
        CHECK(index_qpoly(f, f) == QPoly(1));
    }
    SUBCASE("Iwahori inside the segment stabilizer: q")
    {
        auto iw = f_omega_points(a2, a2.fundamental_alcove_vertices());
        auto seg = f_omega_points(a2, {o2, Point{Rat(1), Rat(1)}});
        CHECK(index_qpoly(seg, iw) == QPoly::q());
    }
    SUBCASE("A1 depth 2 inside depth 1, root part")
    {
        auto f1 = moy_prasad_function(a1, o1, 1);
        auto f2 = moy_prasad_function(a1, o1, 2);
        CHECK(index_qpoly(f2.normalized_torus(), f1.normalized_torus()) == QPoly::monomial(1, 2));
        // unequal torus levels rejected
        CHECK_THROWS_AS(index_qpoly(f2, f1), Error);
    }
    SUBCASE("multiplicative along chains")
    {
        auto a = moy_prasad_function(a2, o2, 3).normalized_torus();
        auto b = moy_prasad_function(a2, o2, 2).normalized_torus();
        auto c = moy_prasad_function(a2, o2, 1).normalized_torus();
        CHECK(index_qpoly(a, c) == index_qpoly(a, b) * index_qpoly(b, c));
    }
    SUBCASE("non-nested arguments are an error")
    {
        auto f0 = moy_prasad_function(a2, o2, 0);
        auto f1 = moy_prasad_function(a2, o2, 1);
        CHECK_THROWS_AS(index_qpoly(f0, f1), Error);
    }
}

TEST_CASE("gxromega verification")
{
    SUBCASE("A2 equality at various x and r")
    {
        RootDatum d("A2");
        for (const auto& x : {Point{Rat(0), Rat(0)}, Point{Rat(1, 3), Rat(2, 5)}})
            for (Rat r : {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)}) {
                auto rep = verify_gxromega(d, x, r);
                CHECK(rep.incl_short);
                CHECK(rep.incl_long);
                CHECK(rep.equality);
            }
    }
    SUBCASE("G2: inclusions hold, equality fails somewhere")
    {
        RootDatum d("G2");
        bool found_failure = false;
        for (const auto& x : d.fundamental_alcove_vertices())
            for (Rat r : {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)}) {
                auto rep = verify_gxromega(d, x, r);
                CHECK(rep.incl_short);
                CHECK(rep.incl_long);
                if (!rep.equality) found_failure = true;
            }
        CHECK(found_failure);
    }
    SUBCASE("r must be positive")
    {
        RootDatum d("A2");
        CHECK_THROWS_AS(verify_gxromega(d, Point{Rat(0), Rat(0)}, Rat(0)), Error);
    }
}
