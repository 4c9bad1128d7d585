#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mackeylab/mackey.hpp"

using namespace mlab;

namespace {

Point zero(const RootDatum& d) { return Point(d.rank(), Rat(0)); }

}  // namespace

TEST_CASE("X+ enumeration at a special vertex gives dominant cocharacters")
{
    RootDatum d("A2");
    Point o = zero(d);
    auto entries = xplus_enumerate(d, o, o, 2);
    for (const auto& e : entries) {
        for (int i = 0; i < d.rank(); ++i)
            CHECK(d.pair_int(d.simple_root(i), e.ell) >= 0);
        bool strict = true;
        for (int i = 0; i < d.rank(); ++i)
            strict &= d.pair_int(d.simple_root(i), e.ell) > 0;
        CHECK(e.interior == strict);
    }
    // smallest nonzero interior element is (alpha+beta)^vee = (1,1)
    std::vector<std::vector<int>> interior_nonzero;
    for (const auto& e : entries)
        if (e.interior) interior_nonzero.push_back(e.ell);
    REQUIRE(!interior_nonzero.empty());
    CHECK(std::find(interior_nonzero.begin(), interior_nonzero.end(), std::vector<int>{1, 1}) !=
          interior_nonzero.end());
    bool bound1_has_smaller = false;
    for (const auto& e : xplus_enumerate(d, o, o, 1))
        if (e.interior && e.ell != std::vector<int>{1, 1}) bound1_has_smaller = true;
    CHECK_FALSE(bound1_has_smaller);
}

TEST_CASE("X+ preconditions")
{
    RootDatum d("C2");
    Point o = zero(d);
    Point mid{Rat(1, 2), Rat(1, 2)};
    Point bary{Rat(1, 4), Rat(3, 8)};
    CHECK_NOTHROW(xplus_enumerate(d, mid, o, 1));
    CHECK_THROWS_AS(xplus_enumerate(d, o, mid, 1), Error);   // y not special
    CHECK_THROWS_AS(xplus_enumerate(d, bary, o, 1), Error);  // x not a vertex
}

TEST_CASE("boundary membership")
{
    RootDatum d("A2");
    Point o = zero(d);
    std::vector<int> wall{1, 0};  // alpha(ell)=2, beta(ell)=-1... actually check
    // use ell with some alpha(ell) = 0: (0,0) sits on every wall
    CHECK(xplus_member(d, o, o, {0, 0}));
    CHECK_FALSE(xplus_interior(d, o, o, {0, 0}));
    (void)wall;
}

TEST_CASE("component degree for the base A2 example")
{
    RootDatum d("A2");
    WeylGroup W(d);
    Point o = zero(d);
    QPoly q = QPoly::q();
    QPoly deg_tau = dl_cuspidal_degree_poly(W, W.coxeter_element());
    QPoly deg = component_degree(W, o, o, {1, 1}, deg_tau);
    QPoly expect = q * (q + 1) * (q * q - 1) * (q * q * q - 1);
    CHECK(deg == expect);
    CHECK(deg.eval(3) == 2496);

    // eta = 0 keeps the flag variety factor only
    // ell = 0 is boundary at x = y, so pick the formal check through eta directly
    CHECK(mackey_eta(d, o, o, {1, 1}) == 1);

    // boundary ell rejected
    CHECK_THROWS_AS(component_degree(W, o, o, {0, 0}, deg_tau), Error);
}

TEST_CASE("eta routes agree for special x across a window")
{
    for (const char* name : {"A2", "C2", "A1+A1"}) {
        RootDatum d(name);
        WeylGroup W(d);
        Point o = zero(d);
        for (const auto& e : xplus_enumerate(d, o, o, 2)) {
            if (!e.interior) continue;
            Int eta = mackey_eta(d, o, o, e.ell);
            Point v(d.rank());
            for (int i = 0; i < d.rank(); ++i) v[i] = e.ell[i];
            Rat alt = d.two_rho(v) - static_cast<long long>(d.positive_roots().size());
            CHECK(Rat(eta) == alt);
            // via the library entry point too (internal assertion active)
            CHECK_NOTHROW(component_degree(W, o, o, e.ell, QPoly(1)));
        }
    }
}

TEST_CASE("degree at eta zero is the Poincare polynomial")
{
    // x = y special, formal deg tau = 1: an interior ell with eta = 0 does not
    // exist (eta >= 1 there), so check the formula shape on the smallest ell
    RootDatum d("A2");
    WeylGroup W(d);
    Point o = zero(d);
    QPoly deg = component_degree(W, o, o, {1, 1}, QPoly(1));
    CHECK(deg == QPoly::q() * poincare_poly(W));
}

TEST_CASE("depth bounds")
{
    SUBCASE("A2 base example")
    {
        RootDatum d("A2");
        Point o = zero(d);
        auto [r0, s0] = depth_bounds(d, o, o, {1, 1});
        CHECK(r0 == 1);
        CHECK(s0 == 2);
    }
    SUBCASE("A1: bounds coincide")
    {
        RootDatum d("A1");
        Point o = zero(d);
        for (int k = 0; k <= 3; ++k) {
            auto [r0, s0] = depth_bounds(d, o, o, {k});
            CHECK(r0 == s0);
            CHECK(r0 == d.pair_int(d.simple_root(0), {k}));
        }
    }
    SUBCASE("C2 non-special vertex: bounds coincide since the highest root is simple in Delta_x")
    {
        RootDatum d("C2");
        Point x{Rat(1, 2), Rat(1, 2)};
        Point o = zero(d);
        for (const auto& e : xplus_enumerate(d, x, o, 2)) {
            auto [r0, s0] = depth_bounds(d, x, o, e.ell);
            CHECK(r0 == s0);
        }
    }
    SUBCASE("sandwich and height bound at special x")
    {
        RootDatum d("C2");
        WeylGroup W(d);
        Point o = zero(d);
        int h = d.roots()[d.highest_roots()[0]].height;
        for (const auto& e : xplus_enumerate(d, o, o, 2)) {
            auto [r0, s0] = depth_bounds(d, o, o, e.ell);
            CHECK(r0 <= s0);
            CHECK(r0 >= 0);
            CHECK(s0 <= h * r0);
        }
    }
    SUBCASE("outside X+ rejected")
    {
        RootDatum d("A2");
        Point o = zero(d);
        CHECK_THROWS_AS(depth_bounds(d, o, o, {-1, 0}), Error);
    }
}

TEST_CASE("disjointness certificates")
{
    RootDatum d("A2");
    Point o = zero(d);
    CHECK(disjointness(d, o, {1, 1}, o, {3, 3}, o));          // s0=2 < r0=3
    CHECK_FALSE(disjointness(d, o, {1, 1}, o, {1, 1}, o));    // equal intervals
    // the base component is disjoint from everything except 0, ell, 2 ell
    for (const auto& e : xplus_enumerate(d, o, o, 3)) {
        bool excluded = e.ell == std::vector<int>{0, 0} || e.ell == std::vector<int>{1, 1} ||
                        e.ell == std::vector<int>{2, 2};
        if (!excluded) CHECK(disjointness(d, o, {1, 1}, o, e.ell, o));
    }
}

TEST_CASE("mackey component assembly and the interior partition")
{
    RootDatum d("A2");
    WeylGroup W(d);
    Point o = zero(d);
    QPoly deg_tau = dl_cuspidal_degree_poly(W, W.coxeter_element());
    auto comps = mackey_components(W, o, o, 2, deg_tau);
    for (const auto& c : comps) {
        CHECK(c.r0 <= c.s0);
        if (c.interior) {
            CHECK(c.w_upsilon.has_value());
            CHECK(c.degree.has_value());
        } else {
            CHECK_FALSE(c.degree.has_value());
        }
        if (c.ell == std::vector<int>{0, 0}) {
            CHECK(c.r0 == 0);
            CHECK(c.s0 == 0);
        }
    }
    // partition holds at a non-special vertex as well
    RootDatum c2("C2");
    WeylGroup Wc(c2);
    Point mid{Rat(1, 2), Rat(1, 2)};
    auto comps2 = mackey_components(Wc, mid, zero(c2), 2, QPoly(1));
    size_t interior_count = 0;
    for (const auto& c : comps2)
        if (c.interior) ++interior_count;
    CHECK(interior_count > 0);
}

TEST_CASE("coincidence reports")
{
    RootDatum d("A2");
    WeylGroup W(d);
    Point o = zero(d);
    auto trivial = CentralCharacter::cyclic(1, 0);
    auto tau1 = SupercuspidalDatum::dl(W, o, W.coxeter_element(), trivial, "theta1");
    auto tau2 = SupercuspidalDatum::dl(W, o, W.coxeter_element(), trivial, "theta2");

    SUBCASE("identical inputs coincide everywhere")
    {
        auto rep = coincidence_report(W, tau1, tau1, o, o, 2, false);
        for (const auto& row : rep.rows) CHECK(row.marker == "coincide");
    }
    SUBCASE("same torus and central character, flag set: x = y leaves one non-shared row")
    {
        auto rep = coincidence_report(W, tau1, tau2, o, o, 2, true);
        size_t nonshared = 0;
        for (const auto& row : rep.rows) {
            if (row.marker == "non-shared") {
                ++nonshared;
                CHECK(row.ell == std::vector<int>{0, 0});
            } else {
                CHECK(row.marker == "coincide");
            }
        }
        CHECK(nonshared == 1);
    }
    SUBCASE("flag false: only interior rows are claimed")
    {
        auto rep = coincidence_report(W, tau1, tau2, o, o, 2, false);
        for (const auto& row : rep.rows) {
            if (row.interior) CHECK(row.marker == "coincide");
            else CHECK(row.marker == "unknown");
        }
    }
    SUBCASE("different central characters claim nothing")
    {
        auto b = tau2;
        b.central = CentralCharacter::cyclic(1, 0);
        auto a = tau1;
        a.central = CentralCharacter::opaque("one");
        auto b2 = tau2;
        b2.central = CentralCharacter::opaque("two");
        auto rep = coincidence_report(W, a, b2, o, o, 2, true);
        for (const auto& row : rep.rows) CHECK(row.marker == "unknown");
    }
    SUBCASE("mismatched vertices rejected")
    {
        auto a = tau1;
        a.x = Point{Rat(1), Rat(0)};
        CHECK_THROWS_AS(coincidence_report(W, a, tau2, o, o, 1, false), Error);
    }
}

TEST_CASE("principal series fixed vector dimensions")
{
    RootDatum d("A2");
    WeylGroup W(d);
    PrincipalSeriesDatum ps{CentralCharacter::cyclic(1, 0), 0};
    QPoly q = QPoly::q();
    CHECK(ps_fixed_dim(W, ps, 3) == QPoly::monomial(1, 6) * (q + 1) * (q * q + q + 1));
    CHECK(ps_fixed_dim(W, ps, 1) == poincare_poly(W));
    CHECK(ps_fixed_dim(W, ps, 3).eval(3) == 37908);
    CHECK_THROWS_AS(ps_fixed_dim(W, ps, 0), Error);
}

TEST_CASE("intertwining values")
{
    RootDatum a2("A2");
    WeylGroup W(a2);
    QPoly q = QPoly::q();
    QPoly deg_tau = dl_cuspidal_degree_poly(W, W.coxeter_element());
    CHECK(intertwining_value(W, deg_tau, QPoly(1), true) == q + 1);
    CHECK(intertwining_value(W, deg_tau, QPoly(1), false).is_zero());

    RootDatum a1("A1");
    WeylGroup W1(a1);
    CHECK(intertwining_value(W1, dl_cuspidal_degree_poly(W1, W1.coxeter_element()), QPoly(1),
                             true) == QPoly(1));

    // inexact division surfaces as an error
    CHECK_THROWS_AS(intertwining_value(W, QPoly(1), QPoly(1), true), Error);
}

TEST_CASE("compatibility checks")
{
    RootDatum a2("A2");
    WeylGroup W(a2);
    Point o = zero(a2);
    SUBCASE("trivial center always passes")
    {
        auto tau = SupercuspidalDatum::dl(W, o, W.coxeter_element(), CentralCharacter::cyclic(1, 0));
        PrincipalSeriesDatum chi{CentralCharacter::cyclic(1, 0), 0};
        auto res = compatibility_check(W, tau, chi);
        CHECK(res.compatible);
        CHECK(res.witness_w == W.identity());
    }
    SUBCASE("equal opaque tags pass with the identity witness")
    {
        auto tau = SupercuspidalDatum::dl(W, o, W.coxeter_element(),
                                          CentralCharacter::opaque("omega"));
        PrincipalSeriesDatum chi{CentralCharacter::opaque("omega"), 0};
        CHECK(compatibility_check(W, tau, chi).compatible);
        PrincipalSeriesDatum chi2{CentralCharacter::opaque("other"), 0};
        CHECK_FALSE(compatibility_check(W, tau, chi2).compatible);
    }
    SUBCASE("order-two center with opposite characters and trivial action fails")
    {
        RootDatum a1("A1");
        WeylGroup W1(a1);
        Point o1 = zero(a1);
        auto tau = SupercuspidalDatum::dl(W1, o1, W1.coxeter_element(),
                                          CentralCharacter::cyclic(2, 1));
        PrincipalSeriesDatum chi{CentralCharacter::cyclic(2, 0), 0};
        CHECK_FALSE(compatibility_check(W1, tau, chi).compatible);
        PrincipalSeriesDatum chi_match{CentralCharacter::cyclic(2, 1), 0};
        CHECK(compatibility_check(W1, tau, chi_match).compatible);
    }
    SUBCASE("incomparable formats rejected")
    {
        auto tau = SupercuspidalDatum::dl(W, o, W.coxeter_element(),
                                          CentralCharacter::opaque("omega"));
        PrincipalSeriesDatum chi{CentralCharacter::cyclic(2, 0), 0};
        CHECK_THROWS_AS(compatibility_check(W, tau, chi), Error);
    }
}

TEST_CASE("X+ matches the affine double coset oracle inside the window")
{
    struct Case {
        const char* name;
        Point x;
    };
    std::vector<Case> cases;
    for (const char* name : {"A1", "A2", "C2"}) {
        RootDatum d(name);
        for (const auto& v : d.fundamental_alcove_vertices()) cases.push_back({name, v});
    }
    {
        RootDatum d("A1+A1");
        cases.push_back({"A1+A1", zero(d)});
    }
    for (const auto& c : cases) {
        RootDatum d(c.name);
        WeylGroup W(d);
        Point y = zero(d);
        int bound = d.rank() <= 1 ? 3 : 2;
        AffineDoubleCosets oracle(W, c.x, y, bound);
        // every double coset class meeting the window carries exactly one X+
        // translation representative
        for (const auto& cls : oracle.classes())
            CHECK_MESSAGE(cls.xplus_translations.size() == 1,
                          c.name << " x=" << point_str(c.x));
        // and the enumerated X+ elements hit distinct classes
        std::set<size_t> seen;
        for (const auto& e : xplus_enumerate(d, c.x, y, bound)) {
            size_t id = oracle.class_of({W.identity(), e.ell});
            CHECK(seen.insert(id).second);
        }
    }
}
