#include "mackeylab/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace mlab {

namespace {

// Cartan matrix of one irreducible component, convention C[i][j] = <alpha_j, alpha_i^vee>.
std::vector<std::vector<int>> component_cartan(char letter, int n)
{
    std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    auto chain = [&](int i, int j) { C[i][j] = -1; C[j][i] = -1; };
    switch (letter) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            break;
        case 'B':
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            C[n - 1][n - 2] = -2;
            C[n - 2][n - 1] = -1;
            break;
        case 'C':
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            C[n - 2][n - 1] = -2;
            C[n - 1][n - 2] = -1;
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
            chain(n - 3, n - 1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
            // Zero based: chain 0-2-3-4-..., node 1 attached to node 3.
            chain(0, 2);
            for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
            chain(1, 3);
            break;
        case 'F':
            chain(0, 1);
            chain(2, 3);
            C[1][2] = -1;  // <alpha_3, alpha_2^vee>
            C[2][1] = -2;  // <alpha_2, alpha_3^vee>, alpha_3 short
            break;
        case 'G':
            C[0][1] = -3;  // alpha_1 short, alpha_2 long
            C[1][0] = -1;
            break;
        default:
            throw Error("unsupported Cartan letter");
    }
    return C;
}

}  // namespace

RootDatum::RootDatum(const CartanSpec& spec) : spec_(spec)
{
    spec_.validate();
    rank_ = spec_.total_rank();
    cartan_.assign(rank_, std::vector<int>(rank_, 0));
    sym_.assign(rank_, 1);
    simple_component_.assign(rank_, 0);

    int offset = 0;
    for (size_t c = 0; c < spec_.components.size(); ++c) {
        int n = spec_.components[c].rank;
        auto block = component_cartan(spec_.components[c].letter, n);
        for (int i = 0; i < n; ++i) {
            simple_component_[offset + i] = static_cast<int>(c);
            for (int j = 0; j < n; ++j) cartan_[offset + i][offset + j] = block[i][j];
        }
        // symmetrizers within the component: d_i * C[i][j] = d_j * C[j][i]
        std::vector<Rat> d(n, Rat(0));
        d[0] = 1;
        std::deque<int> queue{0};
        std::vector<bool> seen(n, false);
        seen[0] = true;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (i == j || block[i][j] == 0 || seen[j]) continue;
                d[j] = d[i] * block[i][j] / block[j][i];
                seen[j] = true;
                queue.push_back(j);
            }
        }
        // scale to integers with minimum 1
        Int lcm_den = 1;
        for (auto& v : d) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(v));
        Int gcd_num = 0;
        for (auto& v : d) {
            Rat scaled = v * Rat(lcm_den);
            gcd_num = boost::multiprecision::gcd(gcd_num, boost::multiprecision::numerator(scaled));
        }
        for (int i = 0; i < n; ++i) {
            Rat scaled = d[i] * Rat(lcm_den) / Rat(gcd_num);
            if (!is_integral(scaled) || scaled <= 0) throw Error("symmetrizer computation failed");
            sym_[offset + i] = to_ll(boost::multiprecision::numerator(scaled));
        }
        offset += n;
    }
    generate_roots();
}

void RootDatum::generate_roots()
{
    // reflection closure from the simple roots
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < rank_; ++i) {
        std::vector<int> e(rank_, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
        std::vector<int> m(rank_, 0);
        m[i] = -1;
        seen.insert(m);
        queue.push_back(m);
    }
    while (!queue.empty()) {
        std::vector<int> a = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank_; ++i) {
            long long pairing = 0;
            for (int j = 0; j < rank_; ++j) pairing += static_cast<long long>(cartan_[i][j]) * a[j];
            std::vector<int> b = a;
            b[i] -= static_cast<int>(pairing);
            if (seen.insert(b).second) queue.push_back(b);
        }
    }

    // deterministic order: sort by (height, coords) with positives first
    std::vector<std::vector<int>> all(seen.begin(), seen.end());
    auto height_of = [&](const std::vector<int>& a) {
        int h = 0;
        for (int v : a) h += v;
        return h;
    };
    std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
        int ha = height_of(a), hb = height_of(b);
        bool pa = ha > 0, pb = hb > 0;
        if (pa != pb) return pa > pb;
        if (ha != hb) return pa ? ha < hb : ha > hb;
        return a < b;
    });

    roots_.reserve(all.size());
    for (const auto& a : all) {
        Root r;
        r.simple_coords = a;
        r.height = height_of(a);
        bool nonneg = std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
        bool nonpos = std::all_of(a.begin(), a.end(), [](int v) { return v <= 0; });
        if (!nonneg && !nonpos) throw Error("root with mixed signs; closure bug");
        r.positive = nonneg;
        r.eval_coeffs.assign(rank_, 0);
        for (int i = 0; i < rank_; ++i) {
            long long s = 0;
            for (int j = 0; j < rank_; ++j) s += static_cast<long long>(cartan_[i][j]) * a[j];
            r.eval_coeffs[i] = static_cast<int>(s);
        }
        long long len2 = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                len2 += sym_[i] * cartan_[i][j] * static_cast<long long>(a[i]) * a[j];
        r.length2 = len2;
        int comp = -1;
        for (int i = 0; i < rank_; ++i)
            if (a[i] != 0) { comp = simple_component_[i]; break; }
        r.component = comp;
        // coroot coordinates: alpha^vee = sum_i (a_i d_i / d_alpha) alpha_i^vee
        long long d_alpha = len2 / 2;
        if (len2 % 2 != 0) throw Error("odd root length squared");
        r.coroot_coords.assign(rank_, 0);
        for (int i = 0; i < rank_; ++i) {
            long long num = static_cast<long long>(a[i]) * sym_[i];
            if (num % d_alpha != 0) throw Error("non-integral coroot coordinate");
            r.coroot_coords[i] = static_cast<int>(num / d_alpha);
        }
        index_[a] = static_cast<int>(roots_.size());
        roots_.push_back(std::move(r));
    }

    // long/short per component; simply-laced components get both flags
    std::vector<long long> max_len(spec_.components.size(), 0), min_len(spec_.components.size(), 0);
    for (const auto& r : roots_) {
        auto& mx = max_len[r.component];
        auto& mn = min_len[r.component];
        if (mx == 0 || r.length2 > mx) mx = r.length2;
        if (mn == 0 || r.length2 < mn) mn = r.length2;
    }
    for (size_t i = 0; i < roots_.size(); ++i) {
        Root& r = roots_[i];
        bool laced = max_len[r.component] == min_len[r.component];
        r.is_long = laced || r.length2 == max_len[r.component];
        r.is_short = laced || r.length2 < max_len[r.component];
        r.negative_index = index_.at([&] {
            std::vector<int> m = r.simple_coords;
            for (auto& v : m) v = -v;
            return m;
        }());
        if (r.positive) positive_.push_back(static_cast<int>(i));
        if (r.is_long) long_.push_back(static_cast<int>(i));
        if (r.is_short) short_.push_back(static_cast<int>(i));
    }
    simple_.assign(rank_, -1);
    for (int i = 0; i < rank_; ++i) {
        std::vector<int> e(rank_, 0);
        e[i] = 1;
        simple_[i] = index_.at(e);
    }
    // highest roots by height per component
    highest_.assign(spec_.components.size(), -1);
    highest_short_.assign(spec_.components.size(), -1);
    for (size_t i = 0; i < roots_.size(); ++i) {
        const Root& r = roots_[i];
        if (!r.positive) continue;
        int c = r.component;
        if (highest_[c] < 0 || r.height > roots_[highest_[c]].height) highest_[c] = static_cast<int>(i);
        if (r.is_short && (highest_short_[c] < 0 || r.height > roots_[highest_short_[c]].height))
            highest_short_[c] = static_cast<int>(i);
    }
}

int RootDatum::root_index(const std::vector<int>& simple_coords) const
{
    auto it = index_.find(simple_coords);
    return it == index_.end() ? -1 : it->second;
}

Rat RootDatum::pair(int root, const std::vector<Rat>& x) const
{
    Rat s = 0;
    const auto& ev = roots_[root].eval_coeffs;
    for (int i = 0; i < rank_; ++i) s += Rat(ev[i]) * x[i];
    return s;
}

long long RootDatum::pair_int(int root, const std::vector<int>& x) const
{
    long long s = 0;
    const auto& ev = roots_[root].eval_coeffs;
    for (int i = 0; i < rank_; ++i) s += static_cast<long long>(ev[i]) * x[i];
    return s;
}

Rat RootDatum::two_rho(const std::vector<Rat>& x) const
{
    Rat s = 0;
    for (int r : positive_) s += pair(r, x);
    return s;
}

std::vector<Rat> RootDatum::fundamental_coweight(int target) const
{
    // solve alpha_j(x) = delta_{j,target} by exact Gaussian elimination
    int n = rank_;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, Rat(0)));
    for (int j = 0; j < n; ++j) {
        const auto& ev = roots_[simple_[j]].eval_coeffs;
        for (int i = 0; i < n; ++i) m[j][i] = Rat(ev[i]);
        m[j][n] = (j == target) ? 1 : 0;
    }
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw Error("singular simple-root system");
        std::swap(m[row], m[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (int c2 = col; c2 <= n; ++c2) m[r][c2] -= f * m[row][c2];
        }
        ++row;
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

std::vector<std::vector<Rat>> RootDatum::fundamental_alcove_vertices() const
{
    std::vector<std::vector<Rat>> verts;
    verts.emplace_back(rank_, Rat(0));
    for (int i = 0; i < rank_; ++i) {
        int comp = simple_component_[i];
        int theta = highest_[comp];
        long long m_i = roots_[theta].simple_coords[i];
        auto omega = fundamental_coweight(i);
        for (auto& v : omega) v /= m_i;
        verts.push_back(std::move(omega));
    }
    return verts;
}

// ---------------------------------------------------------------------------

WeylGroup::WeylGroup(const RootDatum& datum, int rank_guard) : datum_(&datum)
{
    int n = datum.rank();
    if (n > rank_guard)
        throw Error("Weyl enumeration guard exceeded: rank " + std::to_string(n) + " > " +
                    std::to_string(rank_guard));

    size_t nr = datum.num_roots();
    // simple reflection matrices on the coroot lattice: (s_i x)_i = x_i - sum_k C[k][i] x_k
    std::vector<Element> gens(n);
    for (int i = 0; i < n; ++i) {
        Element& g = gens[i];
        g.cochar_mat.assign(n * n, 0);
        for (int d = 0; d < n; ++d) g.cochar_mat[d * n + d] = 1;
        for (int k = 0; k < n; ++k) g.cochar_mat[i * n + k] -= datum.cartan()[k][i];
        g.root_perm.resize(nr);
        for (size_t r = 0; r < nr; ++r) {
            const auto& a = datum.roots()[r].simple_coords;
            long long pairing = 0;
            for (int j = 0; j < n; ++j) pairing += static_cast<long long>(datum.cartan()[i][j]) * a[j];
            std::vector<int> b = a;
            b[i] -= static_cast<int>(pairing);
            int idx = datum.root_index(b);
            if (idx < 0) throw Error("reflection left the root set");
            g.root_perm[r] = idx;
        }
        g.word = {i};
    }

    auto mat_mult = [n](const std::vector<int>& A, const std::vector<int>& B) {
        std::vector<int> C(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                int a = A[i * n + k];
                if (!a) continue;
                for (int j = 0; j < n; ++j) C[i * n + j] += a * B[k * n + j];
            }
        return C;
    };

    Element id;
    id.cochar_mat.assign(n * n, 0);
    for (int d = 0; d < n; ++d) id.cochar_mat[d * n + d] = 1;
    id.root_perm.resize(nr);
    for (size_t r = 0; r < nr; ++r) id.root_perm[r] = static_cast<int>(r);
    elems_.push_back(id);
    index_[id.cochar_mat] = 0;

    // BFS by word length produces reduced words
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            Element next;
            next.cochar_mat = mat_mult(gens[i].cochar_mat, elems_[cur].cochar_mat);
            auto it = index_.find(next.cochar_mat);
            if (it != index_.end()) continue;
            next.root_perm.resize(nr);
            for (size_t r = 0; r < nr; ++r) next.root_perm[r] = gens[i].root_perm[elems_[cur].root_perm[r]];
            next.word = elems_[cur].word;
            next.word.insert(next.word.begin(), i);
            index_[next.cochar_mat] = elems_.size();
            queue.push_back(elems_.size());
            elems_.push_back(std::move(next));
        }
    }

    // length = number of positive roots made negative
    for (auto& e : elems_) {
        int len = 0;
        for (int r : datum.positive_roots())
            if (!datum.roots()[e.root_perm[r]].positive) ++len;
        e.length = len;
        if (len != static_cast<int>(e.word.size())) throw Error("non-reduced word in Weyl BFS");
    }

    simple_refl_.resize(n);
    for (int i = 0; i < n; ++i) simple_refl_[i] = index_.at(gens[i].cochar_mat);
}

size_t WeylGroup::index_of(const std::vector<int>& mat) const
{
    auto it = index_.find(mat);
    if (it == index_.end()) throw Error("matrix not in Weyl group");
    return it->second;
}

size_t WeylGroup::mult(size_t a, size_t b) const
{
    int n = datum_->rank();
    const auto& A = elems_[a].cochar_mat;
    const auto& B = elems_[b].cochar_mat;
    std::vector<int> C(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int v = A[i * n + k];
            if (!v) continue;
            for (int j = 0; j < n; ++j) C[i * n + j] += v * B[k * n + j];
        }
    return index_of(C);
}

size_t WeylGroup::inverse(size_t a) const
{
    // finite group: a^{-1} is the last power before the cycle returns to 1
    size_t cur = a, prev = identity();
    while (cur != identity()) {
        prev = cur;
        cur = mult(cur, a);
    }
    return prev;
}

size_t WeylGroup::reflection_for_root(int root) const
{
    // s_alpha: x -> x - alpha(x) alpha^vee
    int n = datum_->rank();
    const Root& r = datum_->roots()[root];
    std::vector<int> M(n * n, 0);
    for (int d = 0; d < n; ++d) M[d * n + d] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i * n + j] -= r.coroot_coords[i] * r.eval_coeffs[j];
    return index_of(M);
}

size_t WeylGroup::coxeter_element() const
{
    size_t w = identity();
    for (int i = 0; i < datum_->rank(); ++i) w = mult(w, simple_reflection(i));
    return w;
}

std::vector<Rat> WeylGroup::apply_to_point(size_t w, const std::vector<Rat>& x) const
{
    int n = datum_->rank();
    const auto& M = elems_[w].cochar_mat;
    std::vector<Rat> y(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (M[i * n + j] != 0) y[i] += Rat(M[i * n + j]) * x[j];
    return y;
}

std::vector<int> WeylGroup::apply_to_cochar(size_t w, const std::vector<int>& x) const
{
    int n = datum_->rank();
    const auto& M = elems_[w].cochar_mat;
    std::vector<int> y(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += M[i * n + j] * x[j];
    return y;
}

std::vector<std::vector<size_t>> WeylGroup::conjugacy_classes() const
{
    std::vector<int> cls(size(), -1);
    std::vector<std::vector<size_t>> out;
    for (size_t g = 0; g < size(); ++g) {
        if (cls[g] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<size_t> members;
        std::deque<size_t> queue{g};
        cls[g] = id;
        while (!queue.empty()) {
            size_t cur = queue.front();
            queue.pop_front();
            members.push_back(cur);
            for (size_t s = 0; s < simple_refl_.size(); ++s) {
                size_t r = simple_refl_[s];
                size_t conj = mult(r, mult(cur, r));  // simple reflections are involutions
                if (cls[conj] < 0) {
                    cls[conj] = id;
                    queue.push_back(conj);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

// ---------------------------------------------------------------------------

QPoly poincare_poly(const WeylGroup& W)
{
    QPoly p;
    for (size_t i = 0; i < W.size(); ++i) p += QPoly::monomial(1, W.at(i).length);
    return p;
}

std::vector<int> weyl_degrees(const CartanSpec& spec)
{
    spec.validate();
    std::vector<int> out;
    for (const auto& c : spec.components) {
        std::vector<int> d;
        switch (c.letter) {
            case 'A':
                for (int i = 2; i <= c.rank + 1; ++i) d.push_back(i);
                break;
            case 'B':
            case 'C':
                for (int i = 1; i <= c.rank; ++i) d.push_back(2 * i);
                break;
            case 'D':
                for (int i = 1; i + 1 <= c.rank; ++i) d.push_back(2 * i);
                d.push_back(c.rank);
                break;
            case 'E':
                if (c.rank == 6) d = {2, 5, 6, 8, 9, 12};
                else if (c.rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
                else d = {2, 8, 12, 14, 18, 20, 24, 30};
                break;
            case 'F': d = {2, 6, 8, 12}; break;
            case 'G': d = {2, 6}; break;
            default: throw Error("unsupported Cartan letter");
        }
        std::sort(d.begin(), d.end());
        out.insert(out.end(), d.begin(), d.end());
    }
    // validation: sum (d_i - 1) equals the positive root count
    RootDatum datum(spec);
    long long s = 0;
    for (int d : out) s += d - 1;
    if (s != static_cast<long long>(datum.positive_roots().size()))
        throw Error("degree table inconsistent with root count for " + spec.str());
    return out;
}

QPoly torus_order_poly(const WeylGroup& W, size_t w)
{
    // char poly of the cocharacter matrix by Newton's identities; exact
    int n = W.datum().rank();
    const auto& M = W.at(w).cochar_mat;
    std::vector<std::vector<Int>> P(n, std::vector<Int>(n * n));  // powers M^1..M^n
    for (int i = 0; i < n * n; ++i) P[0][i] = M[i];
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int s = 0;
                for (int t = 0; t < n; ++t) s += P[k - 1][i * n + t] * M[t * n + j];
                P[k][i * n + j] = s;
            }
    std::vector<Int> trace(n + 1);
    for (int k = 1; k <= n; ++k) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += P[k - 1][i * n + i];
        trace[k] = s;
    }
    std::vector<Rat> e(n + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat s = 0;
        for (int i = 1; i <= k; ++i) {
            Rat term = e[k - i] * Rat(trace[i]);
            if (i % 2 == 0) s -= term; else s += term;
        }
        e[k] = s / k;
    }
    std::vector<Int> coeffs(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rat c = e[k];
        if (k % 2 == 1) c = -c;  // det(qI - M): coefficient of q^{n-k} is (-1)^k e_k
        if (!is_integral(c)) throw Error("characteristic polynomial not integral");
        coeffs[n - k] = boost::multiprecision::numerator(c);
    }
    return QPoly(std::move(coeffs));
}

QPoly dl_cuspidal_degree_poly(const WeylGroup& W, size_t w)
{
    QPoly num(1);
    for (int d : weyl_degrees(W.datum().spec()))
        num *= QPoly::monomial(1, d) - QPoly(1);
    return num.divide_exact(torus_order_poly(W, w));
}

QPoly finite_group_order_poly(const RootDatum& datum)
{
    QPoly p = QPoly::monomial(1, static_cast<int>(datum.positive_roots().size()));
    for (int d : weyl_degrees(datum.spec()))
        p *= QPoly::monomial(1, d) - QPoly(1);
    return p;
}

}  // namespace mlab
