#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mackeylab/finlab/group.hpp"

using namespace mlab;
using namespace mlab::finlab;

TEST_CASE("field axioms for the supported q")
{
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11}) {
        const FqField& F = FqField::get(q);
        CHECK(F.q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q; ++c)
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
    CHECK_THROWS_AS(FqField::get(6), Error);
    CHECK_THROWS_AS(FqField::get(12), Error);
}

TEST_CASE("special linear orders")
{
    CHECK(MatrixGroup::special_linear(2, 3).order() == 24);
    CHECK(MatrixGroup::special_linear(2, 5).order() == 120);
    CHECK(MatrixGroup::special_linear(2, 4).order() == 60);
    CHECK(MatrixGroup::special_linear(3, 2).order() == 168);
    CHECK(MatrixGroup::special_linear(3, 3).order() == 5616);
}

TEST_CASE("guards")
{
    CHECK_THROWS_AS(MatrixGroup::special_linear(2, 13), Error);
    CHECK_THROWS_AS(MatrixGroup::special_linear(3, 5), Error);  // needs the flag
    CHECK_THROWS_AS(MatrixGroup::special_linear(4, 2), Error);
}

TEST_CASE("group structure sanity on SL(2,3)")
{
    auto G = MatrixGroup::special_linear(2, 3);
    // closure and inverse consistency on all pairs
    for (int a = 0; a < G.order(); ++a) {
        CHECK(G.mult(a, G.inverse(a)) == G.identity_id());
        CHECK(G.mult(G.identity_id(), a) == a);
    }
    // classes partition the group
    long long total = 0;
    for (int c = 0; c < G.num_classes(); ++c) total += G.class_size(c);
    CHECK(total == G.order());
    CHECK(G.class_of(G.identity_id()) == 0);
    CHECK(G.class_size(0) == 1);
    // class functions are constant on classes: check orders
    for (int c = 0; c < G.num_classes(); ++c) {
        long long o = G.class_order(c);
        // conjugates have the same order; sample via generators
        for (int g : G.generators()) {
            int conj = G.mult(G.mult(g, G.class_rep(c)), G.inverse(g));
            CHECK(G.element_order(conj) == o);
        }
    }
    CHECK(G.exponent() == 12);  // SL(2,3): orders 1,2,3,4,6
}

TEST_CASE("unipotent recognition and Jordan parts")
{
    auto G = MatrixGroup::special_linear(2, 5);
    int count = 0;
    for (int g = 0; g < G.order(); ++g) {
        if (G.is_unipotent(g)) ++count;
        int s = G.semisimple_part(g);
        // s commutes with g and has order prime to p
        CHECK(G.mult(s, g) == G.mult(g, s));
        CHECK(G.element_order(s) % 5 != 0);
        // g s^{-1} is unipotent
        CHECK(G.is_unipotent(G.mult(g, G.inverse(s))));
    }
    // unipotent elements of SL(2,q): q^2 of them (including 1)
    CHECK(count == 25);
}

TEST_CASE("from_predicate and from_generators agree")
{
    const FqField& F = FqField::get(3);
    auto pred = [&](const Mat& m) {
        return m[2] == 0 && F.mul(m[0], m[3]) == 1;  // upper triangular SL(2,3)
    };
    auto B1 = MatrixGroup::from_predicate(2, 3, pred, "B");
    CHECK(B1.order() == 6);
    std::vector<Mat> gens;
    for (int i = 0; i < B1.order(); ++i) gens.push_back(B1.mat(i));
    auto B2 = MatrixGroup::from_generators(2, 3, gens, "B2");
    CHECK(B2.order() == 6);
}

TEST_CASE("cubic extension torus matrices")
{
    for (int q : {2, 3, 4, 5}) {
        CubicExtension E(q);
        // multiplication is associative and the norm-one count is q^2+q+1
        const FqField& F = FqField::get(q);
        long long norm_one = 0;
        for (long long a = 1; a < E.size(); ++a) {
            if (mat_det(F, 3, E.mult_matrix(a)) == 1) ++norm_one;
        }
        CHECK(norm_one == static_cast<long long>(q) * q + q + 1);
        // mult_matrix is a homomorphism on a sample
        for (long long a = 1; a < std::min<long long>(E.size(), 12); ++a)
            for (long long b = 1; b < std::min<long long>(E.size(), 12); ++b) {
                Mat lhs = E.mult_matrix(E.mul(a, b));
                Mat rhs = mat_mul(F, 3, E.mult_matrix(a), E.mult_matrix(b));
                CHECK(lhs == rhs);
            }
    }
}
