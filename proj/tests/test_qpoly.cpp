#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mackeylab/qpoly.hpp"

using mlab::Int;
using mlab::QPoly;

namespace {

QPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> deg(0, 6), coeff(-9, 9);
    std::vector<Int> c(deg(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic and evaluation")
{
    QPoly q = QPoly::q();
    QPoly p = (q + 1) * (q * q + q + 1);
    CHECK(p == QPoly({1, 2, 2, 1}));
    CHECK(p.eval(3) == 52);
    CHECK(p.degree() == 3);
    CHECK((p - p).is_zero());
    CHECK(QPoly({0, 0, 0}).is_zero());
}

TEST_CASE("exact division")
{
    QPoly q = QPoly::q();
    QPoly num = (q - 1) * (q * q - 1) * (q * q + q + 1);
    CHECK(num.divide_exact(q * q + q + 1) == (q - 1) * (q * q - 1));
    CHECK((QPoly({-2, 0, 2})).divide_exact(QPoly({-2, 2})) == q + 1);
    CHECK_THROWS_AS((q * q + 1).divide_exact(q + 1), mlab::Error);
    CHECK_THROWS_AS(q.divide_exact(QPoly()), mlab::Error);
    CHECK(!(q * q).try_divide(q + 1).has_value());
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937 rng(20260809);
    for (int iter = 0; iter < 200; ++iter) {
        QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
        // evaluation is a ring homomorphism
        Int x = iter % 7 - 3;
        CHECK((a * b + c).eval(x) == a.eval(x) * b.eval(x) + c.eval(x));
        // division undoes multiplication
        if (!b.is_zero()) CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("string round trips")
{
    QPoly p({1, -2, 0, 5});
    CHECK(QPoly::parse_coeff_list(p.coeff_list()) == p);
    CHECK(QPoly::parse_coeff_list("[]").is_zero());
    CHECK(p.str() == "5*q^3 - 2*q + 1");
    CHECK(QPoly().str() == "0");
    CHECK_THROWS_AS(QPoly::parse_coeff_list("1,2"), mlab::Error);
}

TEST_CASE("monomials and powers")
{
    CHECK(QPoly::monomial(1, 4).eval(2) == 16);
    CHECK(QPoly({1, 1}).pow(2) == QPoly({1, 2, 1}));
    CHECK(QPoly({1, 1}).pow(0) == QPoly(1));
}
