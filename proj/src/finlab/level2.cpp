#include "mackeylab/finlab/level2.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace mlab::finlab::level2 {

namespace {

int norm(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

// extended gcd on plain integers
long long egcd(long long a, long long b, long long& x, long long& y)
{
    if (b == 0) { x = 1; y = 0; return a; }
    long long x1, y1;
    long long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// a unit u mod m with u * a = gcd(a, m) mod m; standard for Z/m canonical forms
int unit_for(int a, int m)
{
    if (a == 0) return 1;
    long long x, y;
    long long g = egcd(a, m, x, y);
    long long u = norm(x, m);
    // adjust u to a unit: u + k*(m/g) stays a preimage; search the coset
    long long step = m / g;
    for (int k = 0; k < g; ++k) {
        long long cand = (u + k * step) % m;
        long long cx, cy;
        if (egcd(cand == 0 ? m : cand, m, cx, cy) == 1 && cand != 0) {
            if (norm(cand * a, m) == norm(g, m)) return static_cast<int>(cand);
        }
    }
    throw Error("no unit lifts the gcd relation");
}

uint64_t encode(const ModMat& a, int m)
{
    uint64_t c = 0;
    for (int i = 8; i >= 0; --i) c = c * m + a[i];
    return c;
}

}  // namespace

ModMat identity()
{
    ModMat m{};
    m[0] = m[4] = m[8] = 1;
    return m;
}

ModMat mul(const ModMat& a, const ModMat& b, int m)
{
    ModMat c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            long long v = a[i * 3 + k];
            if (!v) continue;
            for (int j = 0; j < 3; ++j)
                c[i * 3 + j] = norm(c[i * 3 + j] + v * b[k * 3 + j], m);
        }
    return c;
}

int det(const ModMat& a, int m)
{
    long long d = static_cast<long long>(a[0]) * (static_cast<long long>(a[4]) * a[8] % m -
                                                  static_cast<long long>(a[5]) * a[7] % m) -
                  static_cast<long long>(a[1]) * (static_cast<long long>(a[3]) * a[8] % m -
                                                  static_cast<long long>(a[5]) * a[6] % m) +
                  static_cast<long long>(a[2]) * (static_cast<long long>(a[3]) * a[7] % m -
                                                  static_cast<long long>(a[4]) * a[6] % m);
    return norm(d, m);
}

ModMat howell_form(ModMat rows, int m)
{
    // work on a list of row vectors, possibly growing through saturation
    std::vector<std::array<int, 3>> work;
    for (int i = 0; i < 3; ++i) {
        std::array<int, 3> r{rows[i * 3], rows[i * 3 + 1], rows[i * 3 + 2]};
        if (r[0] || r[1] || r[2]) work.push_back(r);
    }
    std::vector<std::array<int, 3>> result;
    for (int col = 0; col < 3; ++col) {
        // combine all rows with leftmost support at col into one pivot row
        std::vector<std::array<int, 3>> here, rest;
        for (auto& r : work) {
            int lead = 0;
            while (lead < 3 && r[lead] == 0) ++lead;
            (lead == col ? here : rest).push_back(r);
        }
        if (here.empty()) { work = std::move(rest); continue; }
        // reduce pairwise: gcd combination on the leading entries, exact over Z
        while (here.size() > 1) {
            auto a = here.back(); here.pop_back();
            auto& b = here.back();
            long long x, y;
            long long g = egcd(a[col], b[col], x, y);
            std::array<int, 3> comb{};
            for (int j = 0; j < 3; ++j)
                comb[j] = norm(x * a[j] + y * b[j], m);
            // annihilate both originals against the combination
            if (comb[col] == 0) throw Error("howell: combination lost the pivot");
            std::array<int, 3> resid_a{}, resid_b{};
            int fa = static_cast<int>((static_cast<long long>(a[col]) / g) % m);
            int fb = static_cast<int>((static_cast<long long>(b[col]) / g) % m);
            for (int j = 0; j < 3; ++j) {
                resid_a[j] = norm(a[j] - static_cast<long long>(fa) * comb[j], m);
                resid_b[j] = norm(b[j] - static_cast<long long>(fb) * comb[j], m);
            }
            here.back() = comb;
            for (auto& rr : {resid_a, resid_b}) {
                int lead = 0;
                while (lead < 3 && rr[lead] == 0) ++lead;
                if (lead == 3) continue;
                if (lead == col) throw Error("howell: residual kept the pivot");
                rest.push_back(rr);
            }
        }
        auto pivot = here[0];
        // normalize the pivot entry to the gcd with m via a unit
        int u = unit_for(pivot[col], m);
        for (int j = 0; j < 3; ++j) pivot[j] = norm(static_cast<long long>(u) * pivot[j], m);
        // saturation: (m / pivot) * row spans the annihilator shadow
        int g = static_cast<int>(std::gcd(static_cast<long long>(pivot[col]),
                                          static_cast<long long>(m)));
        if (g > 1) {
            std::array<int, 3> shadow{};
            int factor = m / g;
            for (int j = 0; j < 3; ++j) shadow[j] = norm(static_cast<long long>(factor) * pivot[j], m);
            int lead = 0;
            while (lead < 3 && shadow[lead] == 0) ++lead;
            if (lead < 3) {
                if (lead == col) throw Error("howell: shadow kept the pivot");
                rest.push_back(shadow);
            }
        }
        result.push_back(pivot);
        work = std::move(rest);
    }
    // reduce entries above each pivot modulo the pivot; increasing pivot
    // column order keeps earlier reductions intact
    for (size_t i = 0; i < result.size(); ++i) {
        int col = 0;
        while (col < 3 && result[i][col] == 0) ++col;
        int piv = result[i][col];
        for (size_t r = 0; r < i; ++r) {
            int f = result[r][col] / piv;
            for (int j = 0; j < 3; ++j)
                result[r][j] = norm(result[r][j] - static_cast<long long>(f) * result[i][j], m);
        }
    }
    ModMat out{};
    for (size_t i = 0; i < result.size() && i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i * 3 + j] = result[i][j];
    return out;
}

namespace {

std::vector<ModMat> sl3_generators(int m)
{
    std::vector<ModMat> gens;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (int v : {1, m - 1}) {
                ModMat g = identity();
                g[i * 3 + j] = v;
                gens.push_back(g);
            }
        }
    return gens;
}

std::vector<ModMat> stabilizer_generators(int p)
{
    int m = p * p;
    std::vector<ModMat> gens;
    auto elem = [&](int i, int j, int v) {
        ModMat g = identity();
        g[i * 3 + j] = norm(v, m);
        return g;
    };
    // upper elementaries at level zero
    gens.push_back(elem(0, 1, 1));
    gens.push_back(elem(0, 2, 1));
    gens.push_back(elem(1, 2, 1));
    gens.push_back(elem(0, 1, -1));
    gens.push_back(elem(0, 2, -1));
    gens.push_back(elem(1, 2, -1));
    // lower elementaries at level p (entry (3,1) would need level p^2 = 0)
    gens.push_back(elem(1, 0, p));
    gens.push_back(elem(2, 1, p));
    gens.push_back(elem(1, 0, -p));
    gens.push_back(elem(2, 1, -p));
    // diagonal determinant-one units from a generator of (Z/p^2)^*
    int u = 2;
    while (true) {
        // check multiplicative order p(p-1)
        long long ord = 1, cur = u % m;
        while (cur != 1) { cur = cur * u % m; ++ord; }
        if (ord == static_cast<long long>(p) * (p - 1)) break;
        ++u;
    }
    long long uinv = 1;
    while ((uinv * u) % m != 1) ++uinv;
    ModMat d1 = identity();
    d1[0] = u;
    d1[4] = static_cast<int>(uinv);
    ModMat d2 = identity();
    d2[4] = u;
    d2[8] = static_cast<int>(uinv);
    gens.push_back(d1);
    gens.push_back(d2);
    ModMat d1i = identity();
    d1i[0] = static_cast<int>(uinv);
    d1i[4] = u;
    ModMat d2i = identity();
    d2i[4] = static_cast<int>(uinv);
    d2i[8] = u;
    gens.push_back(d1i);
    gens.push_back(d2i);
    return gens;
}

// base module: rows e1 and p*e2 (the lattice chain segment at level two)
ModMat base_module(int p)
{
    ModMat rows{};
    rows[0] = 1;
    rows[4] = p;
    return rows;
}

ModMat act(const ModMat& g, const ModMat& rows, int m)
{
    // module spanned by row vectors v -> v g^T, i.e. columns transform by g
    ModMat gt{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gt[i * 3 + j] = g[j * 3 + i];
    return howell_form(mul(rows, gt, m), m);
}

long long sl3_order(long long q)
{
    return q * q * q * (q * q - 1) * (q * q * q - 1);
}

Report run(int p, bool full_group_acting)
{
    if (p % 2 == 0 || (p - 1) % 3 == 0)
        throw Error("level-two lab needs p odd with 3 not dividing p - 1");
    if (p != 3)
        throw Error("level-two lab guard: the subgroup closure certificate is sized for p = 3");
    int m = p * p;

    Report rep;
    rep.p = p;
    rep.ambient_order_known = 1;
    for (int i = 0; i < 8; ++i) rep.ambient_order_known *= p;
    rep.ambient_order_known *= sl3_order(p);
    rep.expected_index = static_cast<long long>(p) * (p + 1) * (p * p + p + 1);

    auto ggens = sl3_generators(m);
    auto hgens = full_group_acting ? ggens : stabilizer_generators(p);

    // stabilizer generators must fix the base module; the degenerate
    // full-group variant skips the requirement
    ModMat base = howell_form(base_module(p), m);
    rep.generators_stabilize = true;
    for (const auto& g : hgens) {
        if (det(g, m) != 1) throw Error("stabilizer generator has determinant != 1");
        if (act(g, base, m) != base) rep.generators_stabilize = false;
    }
    if (!full_group_acting && !rep.generators_stabilize)
        throw Error("generator set does not stabilize the base module");

    // coset space: orbit of the base module under the full group
    std::unordered_map<uint64_t, int> coset_index;
    std::vector<ModMat> cosets;
    coset_index[encode(base, m)] = 0;
    cosets.push_back(base);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const auto& g : ggens) {
            ModMat nxt = act(g, cosets[cur], m);
            uint64_t code = encode(nxt, m);
            auto [it, fresh] = coset_index.emplace(code, static_cast<int>(cosets.size()));
            if (fresh) {
                cosets.push_back(nxt);
                queue.push_back(static_cast<int>(cosets.size()) - 1);
            }
        }
    }
    rep.coset_count = static_cast<long long>(cosets.size());
    rep.index_matches = rep.coset_count == rep.expected_index;

    // subgroup order by closure of the generated group
    if (full_group_acting) {
        rep.subgroup_order = rep.ambient_order_known;
        rep.subgroup_is_full_stabilizer = false;
    } else {
        std::unordered_set<uint64_t> seen;
        std::deque<ModMat> hqueue;
        ModMat id = identity();
        seen.insert(encode(id, m));
        hqueue.push_back(id);
        while (!hqueue.empty()) {
            ModMat cur = hqueue.front();
            hqueue.pop_front();
            for (const auto& g : hgens) {
                ModMat nxt = mul(cur, g, m);
                if (seen.insert(encode(nxt, m)).second) hqueue.push_back(nxt);
            }
        }
        rep.subgroup_order = static_cast<long long>(seen.size());
        // |G| = |orbit| * |stabilizer|; the generated group sits inside the
        // stabilizer, so equality of orders proves it fills it
        rep.subgroup_is_full_stabilizer =
            rep.coset_count * rep.subgroup_order == rep.ambient_order_known;
        if (!rep.subgroup_is_full_stabilizer)
            throw Error("generator set does not fill the stabilizer; index mismatch");
    }

    // double cosets: orbits of H on the coset space
    std::vector<int> orbit_of(cosets.size(), -1);
    long long orbits = 0;
    for (size_t seed = 0; seed < cosets.size(); ++seed) {
        if (orbit_of[seed] >= 0) continue;
        int label = static_cast<int>(orbits++);
        std::deque<int> oq{static_cast<int>(seed)};
        orbit_of[seed] = label;
        while (!oq.empty()) {
            int cur = oq.front();
            oq.pop_front();
            for (const auto& g : hgens) {
                ModMat nxt = act(g, cosets[cur], m);
                int idx = coset_index.at(encode(nxt, m));
                if (orbit_of[idx] < 0) {
                    orbit_of[idx] = label;
                    oq.push_back(idx);
                }
            }
        }
    }
    rep.double_cosets = orbits;
    return rep;
}

}  // namespace

Report sl3_level2_double_cosets(int p) { return run(p, false); }

Report sl3_level2_full_group_orbit(int p) { return run(p, true); }

}  // namespace mlab::finlab::level2
