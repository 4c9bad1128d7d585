#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>

#include "mackeylab/finlab/chartable.hpp"

using namespace mlab;
using namespace mlab::finlab;

namespace {

const MatrixGroup& sl23()
{
    static auto G = MatrixGroup::special_linear(2, 3);
    return G;
}

const CharacterTable& sl23_table()
{
    static auto T = CharacterTable::dixon(sl23());
    return T;
}

}  // namespace

TEST_CASE("cyclotomic context basics")
{
    const auto& ctx = CycloContext::get(12);
    CHECK(ctx.phi_degree() == 4);  // Phi_12 = x^4 - x^2 + 1
    // zeta^0 + zeta^6 = 0 for e = 12
    std::map<long long, Int> acc{{0, Int(1)}, {6, Int(1)}};
    Int v;
    CHECK(ctx.is_integer(acc, &v));
    CHECK(v == 0);
    // sum of all primitive e-th roots equals the Moebius value mu(12) = 0
    std::map<long long, Int> prim;
    for (long long t = 1; t < 12; ++t)
        if (std::gcd(t, 12LL) == 1) prim[t] += 1;
    CHECK(ctx.is_integer(prim, &v));
    CHECK(v == 0);
    // full sum of 12th roots is 0
    std::map<long long, Int> all;
    for (long long t = 0; t < 12; ++t) all[t] += 1;
    CHECK(ctx.is_integer(all, &v));
    CHECK(v == 0);
}

TEST_CASE("SL(2,3) table: seven characters with the binary tetrahedral degrees")
{
    const auto& T = sl23_table();
    CHECK(T.num_chars() == 7);
    std::multiset<long long> degrees;
    for (int i = 0; i < T.num_chars(); ++i) degrees.insert(T.degree(i));
    CHECK(degrees == std::multiset<long long>{1, 1, 1, 2, 2, 2, 3});
    CHECK(T.degree_square_sum() == 24);
    CHECK(T.verify_orthogonality());
}

TEST_CASE("cyclic group fixture: n linear characters with root-of-unity values")
{
    // cyclic of order 4 inside SL(2,5): diag(2, 3) has order 4
    Mat g{};
    g[0] = 2;
    g[3] = 3;
    auto C = MatrixGroup::from_generators(2, 5, {g}, "C4");
    CHECK(C.order() == 4);
    auto T = CharacterTable::dixon(C);
    CHECK(T.num_chars() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(T.degree(i) == 1);
        for (int c = 0; c < 4; ++c) {
            const auto& val = T.value(i, c);
            CHECK(val.terms.size() == 1);
            CHECK(val.terms[0].second == 1);  // a single root of unity
        }
    }
    CHECK(T.verify_orthogonality());
}

TEST_CASE("SL(3,2) degrees")
{
    auto G = MatrixGroup::special_linear(3, 2);
    auto T = CharacterTable::dixon(G);
    std::multiset<long long> degrees;
    for (int i = 0; i < T.num_chars(); ++i) degrees.insert(T.degree(i));
    CHECK(degrees == std::multiset<long long>{1, 3, 3, 6, 7, 8});
    CHECK(T.verify_orthogonality());
}

TEST_CASE("orthogonality and degree sums across small groups")
{
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {2, 7}, {3, 2}}) {
        auto G = MatrixGroup::special_linear(n, q);
        auto T = CharacterTable::dixon(G);
        CHECK(T.degree_square_sum() == G.order());
        CHECK(T.verify_orthogonality());
        CHECK(T.num_chars() == G.num_classes());
    }
}

TEST_CASE("table serialization round trip")
{
    const auto& T = sl23_table();
    std::ostringstream os;
    T.save(os);
    std::istringstream is(os.str());
    auto T2 = CharacterTable::load(is, sl23());
    REQUIRE(T2.num_chars() == T.num_chars());
    for (int i = 0; i < T.num_chars(); ++i) {
        CHECK(T2.degree(i) == T.degree(i));
        for (int c = 0; c < sl23().num_classes(); ++c) {
            CHECK(T2.value(i, c).terms == T.value(i, c).terms);
        }
    }
    CHECK(T2.verify_orthogonality());

    // loading against the wrong group fails
    auto H = MatrixGroup::special_linear(2, 5);
    std::istringstream is2(os.str());
    CHECK_THROWS_AS(CharacterTable::load(is2, H), Error);
}

TEST_CASE("induced characters: regular representation from the trivial subgroup")
{
    // induce the trivial character of the trivial subgroup: the regular
    // character, norm = number of classes... decompose against the table
    const auto& G = sl23();
    auto triv = MatrixGroup::from_generators(2, 3, {mat_identity(2)}, "1");
    CHECK(triv.order() == 1);
    ClassFunction one;
    one.G = &triv;
    one.exponent = 1;
    one.values.push_back(CycloValue::integer(1));
    std::vector<int> embed{G.identity_id()};
    auto reg = induced_character(G, triv, embed, one);
    const auto& T = sl23_table();
    for (int i = 0; i < T.num_chars(); ++i)
        CHECK(multiplicity(T, reg, i) == Int(T.degree(i)));
}

TEST_CASE("restricted inner products")
{
    const auto& G = sl23();
    const auto& T = sl23_table();
    // over the full group as a subgroup list, matches the plain inner product
    std::vector<int> all(G.order());
    for (int i = 0; i < G.order(); ++i) all[i] = i;
    for (int i = 0; i < T.num_chars(); ++i)
        CHECK(T.inner_product_on(i, i, all) == 1);
}
