#include "mackeylab/finlab/sl_lab.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mlab::finlab {

namespace {

bool upper_tri(const Mat& m, int n)
{
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (m[i * n + j]) return false;
    return true;
}

bool lower_tri(const Mat& m, int n)
{
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m[i * n + j]) return false;
    return true;
}

bool unit_diagonal(const Mat& m, int n)
{
    for (int i = 0; i < n; ++i)
        if (m[i * n + i] != 1) return false;
    return true;
}

}  // namespace

std::vector<int> upper_unitriangular(const MatrixGroup& G)
{
    int n = G.n();
    return G.elements_matching([n](const Mat& m) { return upper_tri(m, n) && unit_diagonal(m, n); });
}

std::vector<int> lower_unitriangular(const MatrixGroup& G)
{
    int n = G.n();
    return G.elements_matching([n](const Mat& m) { return lower_tri(m, n) && unit_diagonal(m, n); });
}

std::vector<int> borel_upper(const MatrixGroup& G)
{
    int n = G.n();
    return G.elements_matching([n](const Mat& m) { return upper_tri(m, n); });
}

std::vector<int> borel_lower(const MatrixGroup& G)
{
    int n = G.n();
    return G.elements_matching([n](const Mat& m) { return lower_tri(m, n); });
}

std::vector<int> center_elements(const MatrixGroup& G)
{
    int n = G.n();
    const FqField& F = G.field();
    std::vector<int> out;
    for (int a = 1; a < G.q(); ++a) {
        Mat m{};
        for (int i = 0; i < n; ++i) m[i * n + i] = static_cast<uint8_t>(a);
        uint8_t det = 1;
        for (int i = 0; i < n; ++i) det = F.mul(det, static_cast<uint8_t>(a));
        if (det == 1) {
            int id = G.id_of(m);
            if (id >= 0) out.push_back(id);
        }
    }
    return out;
}

std::vector<std::vector<int>> standard_unipotent_radicals(const MatrixGroup& G)
{
    int n = G.n();
    std::vector<std::vector<int>> out;
    out.push_back(upper_unitriangular(G));
    if (n == 3) {
        // radical of P_alpha: strictly upper entries only in column 3
        out.push_back(G.elements_matching([](const Mat& m) {
            return m[0] == 1 && m[4] == 1 && m[8] == 1 && m[1] == 0 && m[3] == 0 && m[6] == 0 &&
                   m[7] == 0;
        }));
        // radical of P_beta: strictly upper entries only in row 1
        out.push_back(G.elements_matching([](const Mat& m) {
            return m[0] == 1 && m[4] == 1 && m[8] == 1 && m[3] == 0 && m[5] == 0 && m[6] == 0 &&
                   m[7] == 0;
        }));
    }
    return out;
}

std::vector<std::vector<int>> standard_parabolics(const MatrixGroup& G)
{
    int n = G.n();
    std::vector<std::vector<int>> out;
    out.push_back(borel_upper(G));
    if (n == 3) {
        // P_alpha: block pattern rows {1,2} x {1,2}, zero below
        out.push_back(G.elements_matching([](const Mat& m) { return m[6] == 0 && m[7] == 0; }));
        // P_beta: zero in entries (2,1) and (3,1)
        out.push_back(G.elements_matching([](const Mat& m) { return m[3] == 0 && m[6] == 0; }));
    }
    return out;
}

bool is_cuspidal(const CharacterTable& table, int chi,
                 const std::vector<std::vector<int>>& radicals)
{
    const MatrixGroup& G = table.group();
    const auto& ctx = CycloContext::get(table.exponent());
    std::vector<char> seen(G.order());
    for (const auto& U : radicals) {
        // the truncation sum is right-U-invariant, so one g per coset gU
        std::fill(seen.begin(), seen.end(), 0);
        for (long long g = 0; g < G.order(); ++g) {
            if (seen[g]) continue;
            std::map<long long, Int> acc;
            bool all_zero_terms = true;
            for (int u : U) {
                int gu = G.mult(static_cast<int>(g), u);
                seen[gu] = 1;
                const auto& val = table.value(chi, G.class_of(gu));
                all_zero_terms &= val.terms.empty();
                for (auto [t, m] : val.terms) acc[t] += m;
            }
            if (all_zero_terms) continue;
            Int out;
            if (!ctx.is_integer(acc, &out) || out != 0) return false;
        }
    }
    return true;
}

std::vector<int> cuspidal_characters(const CharacterTable& table,
                                     const std::vector<std::vector<int>>& radicals)
{
    std::vector<int> out;
    for (int chi = 0; chi < table.num_chars(); ++chi)
        if (is_cuspidal(table, chi, radicals)) out.push_back(chi);
    return out;
}

std::vector<int> identify_dl_cuspidals(const CharacterTable& table,
                                       const std::vector<int>& cuspidals,
                                       const Int& expected_degree)
{
    std::vector<int> out;
    for (int chi : cuspidals)
        if (Int(table.degree(chi)) == expected_degree) out.push_back(chi);
    return out;
}

std::map<int, Int> green_values(const CharacterTable& table, int chi)
{
    const MatrixGroup& G = table.group();
    std::map<int, Int> out;
    for (int c = 0; c < G.num_classes(); ++c) {
        if (!G.is_unipotent(G.class_rep(c))) continue;
        Int v;
        if (!table.value_is_integer(chi, c, &v))
            throw Error("Green value is not a rational integer");
        out[c] = v;
    }
    return out;
}

Int green_square_sum(const CharacterTable& table, int chi,
                     const std::vector<int>& unipotent_radical)
{
    const MatrixGroup& G = table.group();
    Int s = 0;
    for (int u : unipotent_radical) {
        if (!G.is_unipotent(u)) throw Error("non-unipotent element in the radical");
        Int v;
        if (!table.value_is_integer(chi, G.class_of(u), &v))
            throw Error("Green value is not a rational integer");
        s += v * v;
    }
    return s;
}

bool vanishes_off_central_semisimple(const CharacterTable& table, int chi,
                                     const std::vector<int>& borel)
{
    const MatrixGroup& G = table.group();
    auto center = center_elements(G);
    std::set<int> zset(center.begin(), center.end());
    const auto& ctx = CycloContext::get(table.exponent());
    for (int b : borel) {
        int s = G.semisimple_part(b);
        if (zset.count(s)) continue;
        std::map<long long, Int> acc;
        for (auto [t, m] : table.value(chi, G.class_of(b)).terms) acc[t] += m;
        Int v;
        if (!ctx.is_integer(acc, &v) || v != 0) return false;
    }
    return true;
}

bool borel_restriction_check(const CharacterTable& table, int chi1, int chi2,
                             const std::vector<int>& borel)
{
    const MatrixGroup& G = table.group();
    if (!vanishes_off_central_semisimple(table, chi1, borel) ||
        !vanishes_off_central_semisimple(table, chi2, borel))
        throw Error("cuspidal restriction does not vanish off central semisimple parts");
    const auto& ctx = CycloContext::get(table.exponent());
    for (int b : borel) {
        int c = G.class_of(b);
        std::map<long long, Int> acc;
        for (auto [t, m] : table.value(chi1, c).terms) acc[t] += m;
        for (auto [t, m] : table.value(chi2, c).terms) acc[t] -= m;
        auto red = ctx.reduce(acc);
        for (const auto& v : red)
            if (v != 0) return false;
    }
    return true;
}

Int self_intertwining_on_borel(const CharacterTable& table, int chi,
                               const std::vector<int>& borel)
{
    return table.inner_product_on(chi, chi, borel);
}

std::vector<std::pair<int, long long>> central_character(const CharacterTable& table, int chi)
{
    std::vector<std::pair<int, long long>> out;
    for (int z : center_elements(table.group()))
        out.push_back({z, table.central_exponent(chi, z)});
    return out;
}

std::vector<int> coxeter_torus_sl3(const MatrixGroup& G)
{
    if (G.n() != 3) throw Error("the nonsplit torus construction needs SL(3)");
    CubicExtension E(G.q());
    std::vector<int> out;
    for (long long a = 1; a < E.size(); ++a) {
        Mat m = E.mult_matrix(a);
        if (mat_det(G.field(), 3, m) != 1) continue;
        int id = G.id_of(m);
        if (id < 0) throw Error("torus element missing from the group");
        out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TorusIntersectionReport coxeter_torus_and_parabolic_intersection(const MatrixGroup& G)
{
    TorusIntersectionReport rep;
    auto torus = coxeter_torus_sl3(G);
    long long q = G.q();
    rep.torus_order = static_cast<long long>(torus.size());
    rep.expected_order = q * q + q + 1;
    rep.order_matches = rep.torus_order == rep.expected_order;
    if (!rep.order_matches) throw Error("torus order mismatch; construction bug");

    auto center = center_elements(G);
    std::set<int> zset(center.begin(), center.end());
    std::set<int> tset(torus.begin(), torus.end());
    for (const auto& P : standard_parabolics(G)) {
        long long count = 0;
        bool central = true;
        for (int g : P)
            if (tset.count(g)) {
                ++count;
                central &= zset.count(g) > 0;
            }
        rep.intersections_central &= central;
        rep.max_intersection_order = std::max(rep.max_intersection_order, count);
    }
    return rep;
}

namespace {

// standalone copies of the subgroup as its own group plus the id embedding
struct EmbeddedSubgroup {
    MatrixGroup group;
    std::vector<int> embed;  // sub id -> parent id
};

EmbeddedSubgroup lift_subgroup(const MatrixGroup& parent, const std::vector<int>& ids,
                               const std::string& name)
{
    MatrixGroup sub = MatrixGroup::from_generators(
        parent.n(), parent.q(),
        [&] {
            std::vector<Mat> gens;
            for (int id : ids) gens.push_back(parent.mat(id));
            return gens;
        }(),
        name);
    if (sub.order() != static_cast<long long>(ids.size()))
        throw Error("subgroup closure does not match the element list");
    std::vector<int> embed(sub.order());
    for (long long i = 0; i < sub.order(); ++i) {
        int pid = parent.id_of(sub.mat(static_cast<int>(i)));
        if (pid < 0) throw Error("subgroup element missing from the parent");
        embed[i] = pid;
    }
    return {std::move(sub), std::move(embed)};
}

bool restricted_to_subgroup_trivial(const CharacterTable& usub, int sigma,
                                    const MatrixGroup& U, const std::vector<int>& elements)
{
    // sigma restricted to the listed elements of U equals 1 identically
    for (int id : elements) {
        const auto& val = usub.value(sigma, U.class_of(id));
        if (val.terms.size() != 1 || val.terms[0].first != 0 || val.terms[0].second != 1)
            return false;
    }
    return true;
}

}  // namespace

HeisenbergProfile heisenberg_restriction_profile(const CharacterTable& table, int chi)
{
    const MatrixGroup& G = table.group();
    if (G.n() != 3) throw Error("the Heisenberg profile needs SL(3)");
    long long q = G.q();

    auto uop_ids = lower_unitriangular(G);
    auto sub = lift_subgroup(G, uop_ids, "U_op(" + std::to_string(G.q()) + ")");
    CharacterTable utab = CharacterTable::dixon(sub.group);

    // root subgroups of U_op inside the subgroup's own ids
    auto ids_of = [&](int row, int col) {
        std::vector<int> out;
        for (int t = 1; t < G.q(); ++t) {
            Mat m = mat_identity(3);
            m[row * 3 + col] = static_cast<uint8_t>(t);
            int id = sub.group.id_of(m);
            if (id < 0) throw Error("root subgroup element missing");
            out.push_back(id);
        }
        return out;
    };
    auto neg_alpha = ids_of(1, 0);
    auto neg_beta = ids_of(2, 1);
    auto center = ids_of(2, 0);

    HeisenbergProfile profile;
    for (int s = 0; s < utab.num_chars(); ++s) {
        HeisenbergProfile::Row row;
        row.degree = utab.degree(s);
        // multiplicity of sigma in Res_U chi
        const auto& ctx = CycloContext::get(std::lcm(table.exponent(), utab.exponent()));
        long long e = ctx.e();
        long long sG = e / table.exponent(), sU = e / utab.exponent();
        std::map<long long, Int> acc;
        for (long long u = 0; u < sub.group.order(); ++u) {
            const auto& va = table.value(chi, G.class_of(sub.embed[u]));
            CycloValue vb = utab.value(s, sub.group.class_of(static_cast<int>(u))).conj(utab.exponent());
            for (auto [ta, ma] : va.terms)
                for (auto [tb, mb] : vb.terms)
                    acc[(ta * sG + tb * sU) % e] += Int(ma) * mb;
        }
        Int tot;
        if (!ctx.is_integer(acc, &tot)) throw Error("restriction multiplicity not an integer");
        if (tot % sub.group.order() != 0) throw Error("restriction multiplicity not divisible");
        row.mult = tot / sub.group.order();

        if (row.degree == 1) {
            bool a_triv = restricted_to_subgroup_trivial(utab, s, sub.group, neg_alpha);
            bool b_triv = restricted_to_subgroup_trivial(utab, s, sub.group, neg_beta);
            row.linear_doubly_nontrivial = !a_triv && !b_triv;
        } else if (row.degree == q) {
            bool z_triv = restricted_to_subgroup_trivial(utab, s, sub.group, center);
            row.stone_von_neumann = !z_triv;
        }
        profile.rows.push_back(std::move(row));
    }
    return profile;
}

BorelOpDecomposition borel_op_induced_decomposition(int q)
{
    if (q < 2 || q > 5) throw Error("opposite Borel decomposition supports q in {2,3,4,5}");
    const FqField& F = FqField::get(q);
    // B_op as a standalone group: lower triangular, det 1
    MatrixGroup B = MatrixGroup::from_predicate(
        3, q,
        [&](const Mat& m) {
            return lower_tri(m, 3) &&
                   F.mul(F.mul(m[0], m[4]), m[8]) == 1;
        },
        "B_op(" + std::to_string(q) + ")");
    auto u_ids = lower_unitriangular(B);
    auto sub = lift_subgroup(B, u_ids, "U_op(" + std::to_string(q) + ")");
    CharacterTable btab = CharacterTable::dixon(B);
    CharacterTable utab = CharacterTable::dixon(sub.group);

    auto ids_of = [&](int row, int col) {
        std::vector<int> out;
        for (int t = 1; t < q; ++t) {
            Mat m = mat_identity(3);
            m[row * 3 + col] = static_cast<uint8_t>(t);
            int id = sub.group.id_of(m);
            if (id < 0) throw Error("root subgroup element missing");
            out.push_back(id);
        }
        return out;
    };
    auto neg_alpha = ids_of(1, 0);
    auto neg_beta = ids_of(2, 1);
    auto center = ids_of(2, 0);

    int linear_choice = -1, svn_choice = -1;
    for (int s = 0; s < utab.num_chars(); ++s) {
        if (utab.degree(s) == 1 && linear_choice < 0 &&
            !restricted_to_subgroup_trivial(utab, s, sub.group, neg_alpha) &&
            !restricted_to_subgroup_trivial(utab, s, sub.group, neg_beta))
            linear_choice = s;
        if (utab.degree(s) == q && svn_choice < 0 &&
            !restricted_to_subgroup_trivial(utab, s, sub.group, center))
            svn_choice = s;
    }
    if (linear_choice < 0 || svn_choice < 0)
        throw Error("required characters of the Heisenberg group not found");

    BorelOpDecomposition out;
    out.q = q;

    ClassFunction phi = as_class_function(utab, linear_choice);
    ClassFunction ind_phi = induced_character(B, sub.group, sub.embed, phi);
    // degree of the induced character = value at the identity class
    auto deg_of = [&](const ClassFunction& f) {
        Int v = 0;
        for (auto [t, m] : f.values[0].terms) {
            if (t != 0) throw Error("identity value not rational");
            v += m;
        }
        return v;
    };
    out.linear_induction_degree = to_ll(deg_of(ind_phi));
    Int norm = 0;
    std::vector<Int> mults_phi;
    for (int i = 0; i < btab.num_chars(); ++i) {
        Int m = multiplicity(btab, ind_phi, i);
        norm += m * m;
        mults_phi.push_back(m);
    }
    out.linear_induction_norm = norm;
    out.linear_induction_irreducible = norm == 1 && out.linear_induction_degree ==
                                                        static_cast<long long>(q - 1) * (q - 1);

    ClassFunction h = as_class_function(utab, svn_choice);
    ClassFunction ind_h = induced_character(B, sub.group, sub.embed, h);
    out.total_degree_check = deg_of(ind_h);
    out.heisenberg_constituents = 0;
    out.heisenberg_multiplicity_free = true;
    out.heisenberg_degrees_match = true;
    for (int i = 0; i < btab.num_chars(); ++i) {
        Int m = multiplicity(btab, ind_h, i);
        if (m == 0) continue;
        if (m != 1) out.heisenberg_multiplicity_free = false;
        ++out.heisenberg_constituents;
        if (btab.degree(i) != static_cast<long long>(q) * (q - 1))
            out.heisenberg_degrees_match = false;
    }
    return out;
}

}  // namespace mlab::finlab
