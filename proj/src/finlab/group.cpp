#include "mackeylab/finlab/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mlab::finlab {

Mat mat_identity(int n)
{
    Mat m{};
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

Mat mat_mul(const FqField& F, int n, const Mat& a, const Mat& b)
{
    Mat c{};
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            uint8_t v = a[i * n + k];
            if (!v) continue;
            for (int j = 0; j < n; ++j)
                c[i * n + j] = F.add(c[i * n + j], F.mul(v, b[k * n + j]));
        }
    return c;
}

uint8_t mat_det(const FqField& F, int n, const Mat& a)
{
    if (n == 1) return a[0];
    if (n == 2) return F.sub(F.mul(a[0], a[3]), F.mul(a[1], a[2]));
    uint8_t d = 0;
    d = F.add(d, F.mul(a[0], F.sub(F.mul(a[4], a[8]), F.mul(a[5], a[7]))));
    d = F.sub(d, F.mul(a[1], F.sub(F.mul(a[3], a[8]), F.mul(a[5], a[6])))) ;
    d = F.add(d, F.mul(a[2], F.sub(F.mul(a[3], a[7]), F.mul(a[4], a[6]))));
    return d;
}

Mat mat_inverse(const FqField& F, int n, const Mat& a)
{
    Mat m{};
    if (n == 1) {
        m[0] = F.inv(a[0]);
        return m;
    }
    uint8_t det = mat_det(F, n, a);
    uint8_t dinv = F.inv(det);
    if (n == 2) {
        m[0] = F.mul(dinv, a[3]);
        m[1] = F.mul(dinv, F.neg(a[1]));
        m[2] = F.mul(dinv, F.neg(a[2]));
        m[3] = F.mul(dinv, a[0]);
        return m;
    }
    auto cof = [&](int r0, int c0, int r1, int c1) {
        return F.sub(F.mul(a[r0 * 3 + c0], a[r1 * 3 + c1]), F.mul(a[r0 * 3 + c1], a[r1 * 3 + c0]));
    };
    // adjugate transpose
    m[0] = cof(1, 1, 2, 2); m[1] = F.neg(cof(0, 1, 2, 2)); m[2] = cof(0, 1, 1, 2);
    m[3] = F.neg(cof(1, 0, 2, 2)); m[4] = cof(0, 0, 2, 2); m[5] = F.neg(cof(0, 0, 1, 2));
    m[6] = cof(1, 0, 2, 1); m[7] = F.neg(cof(0, 0, 2, 1)); m[8] = cof(0, 0, 1, 1);
    for (auto& v : m) v = F.mul(v, dinv);
    return m;
}

namespace {

long long code_of(int n, int q, const Mat& m)
{
    long long c = 0;
    for (int i = n * n - 1; i >= 0; --i) c = c * q + m[i];
    return c;
}

}  // namespace

MatrixGroup::MatrixGroup(int n, int q, std::string name)
    : n_(n), q_(q), name_(std::move(name)), F_(&FqField::get(q))
{
    if (n < 1 || n > 3) throw Error("matrix groups support n <= 3");
}

void MatrixGroup::finalize(std::vector<Mat> elems)
{
    elems_ = std::move(elems);
    long long space = 1;
    for (int i = 0; i < n_ * n_; ++i) space *= q_;
    code_to_id_.assign(space, -1);
    for (size_t i = 0; i < elems_.size(); ++i) {
        long long c = code_of(n_, q_, elems_[i]);
        if (code_to_id_[c] != -1) throw Error("duplicate element in group enumeration");
        code_to_id_[c] = static_cast<int32_t>(i);
    }
    identity_ = id_of(mat_identity(n_));
    if (identity_ < 0) throw Error("group does not contain the identity");
    inv_.resize(elems_.size());
    for (size_t i = 0; i < elems_.size(); ++i) {
        Mat m = mat_inverse(*F_, n_, elems_[i]);
        int id = id_of(m);
        if (id < 0) throw Error("group not closed under inversion");
        inv_[i] = id;
    }
    // find a small generating set: greedily close over elements not yet reached
    std::vector<bool> reached(elems_.size(), false);
    reached[identity_] = true;
    size_t covered = 1;
    for (size_t cand = 0; cand < elems_.size() && covered < elems_.size(); ++cand) {
        if (reached[cand]) continue;
        gens_.push_back(static_cast<int>(cand));
        std::deque<int> queue;
        for (size_t i = 0; i < elems_.size(); ++i)
            if (reached[i]) queue.push_back(static_cast<int>(i));
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int g : gens_) {
                int nxt = mult(cur, g);
                if (!reached[nxt]) {
                    reached[nxt] = true;
                    ++covered;
                    queue.push_back(nxt);
                }
            }
        }
    }
    compute_classes();
}

void MatrixGroup::compute_classes()
{
    class_of_.assign(elems_.size(), -1);
    // identity first so its class has index 0
    std::vector<int> order(elems_.size());
    std::iota(order.begin(), order.end(), 0);
    std::swap(order[0], order[identity_]);
    for (int seed : order) {
        if (class_of_[seed] >= 0) continue;
        int cid = static_cast<int>(class_reps_.size());
        class_reps_.push_back(seed);
        long long size = 0;
        std::deque<int> queue{seed};
        class_of_[seed] = cid;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            ++size;
            for (int g : gens_) {
                int conj = mult(mult(g, cur), inv_[g]);
                if (class_of_[conj] < 0) {
                    class_of_[conj] = cid;
                    queue.push_back(conj);
                }
            }
        }
        class_sizes_.push_back(size);
    }
}

int MatrixGroup::id_of(const Mat& m) const
{
    long long c = code_of(n_, q_, m);
    if (c < 0 || c >= static_cast<long long>(code_to_id_.size())) return -1;
    return code_to_id_[c];
}

int MatrixGroup::mult(int a, int b) const
{
    int id = id_of(mat_mul(*F_, n_, elems_[a], elems_[b]));
    if (id < 0) throw Error("group not closed under multiplication");
    return id;
}

int MatrixGroup::power_class(int c, long long t) const
{
    long long m = class_order(c);
    t %= m;
    if (t < 0) t += m;
    int acc = identity_;
    int base = class_reps_[c];
    while (t) {
        if (t & 1) acc = mult(acc, base);
        base = mult(base, base);
        t >>= 1;
    }
    return class_of_[acc];
}

long long MatrixGroup::element_order(int id) const
{
    long long k = 1;
    int cur = id;
    while (cur != identity_) {
        cur = mult(cur, id);
        ++k;
        if (k > order()) throw Error("order computation overflow");
    }
    return k;
}

long long MatrixGroup::exponent() const
{
    long long e = 1;
    for (int c = 0; c < num_classes(); ++c)
        e = std::lcm(e, class_order(c));
    return e;
}

bool MatrixGroup::is_unipotent(int id) const
{
    Mat m = elems_[id];
    for (int i = 0; i < n_; ++i) m[i * n_ + i] = F_->sub(m[i * n_ + i], 1);
    Mat power = m;
    for (int k = 1; k < n_; ++k) power = mat_mul(*F_, n_, power, m);
    return std::all_of(power.begin(), power.begin() + n_ * n_, [](uint8_t v) { return v == 0; });
}

int MatrixGroup::semisimple_part(int id) const
{
    // g = s u with s = g^t, t = 0 mod p^a and 1 mod m', where ord(g) = p^a m'
    long long m = element_order(id);
    long long pa = 1;
    while (m % F_->p() == 0) { pa *= F_->p(); m /= F_->p(); }
    if (pa == 1) return id;
    if (m == 1) return identity_;
    // CRT: t = pa * ((pa)^{-1} mod m) gives t = 0 mod pa, 1 mod m
    long long inv = 1;
    while ((pa * inv) % m != 1) ++inv;
    long long t = pa * inv;
    int acc = identity_, base = id;
    while (t) {
        if (t & 1) acc = mult(acc, base);
        base = mult(base, base);
        t >>= 1;
    }
    return acc;
}

std::vector<int> MatrixGroup::elements_matching(const std::function<bool(const Mat&)>& pred) const
{
    std::vector<int> out;
    for (size_t i = 0; i < elems_.size(); ++i)
        if (pred(elems_[i])) out.push_back(static_cast<int>(i));
    return out;
}

void check_sl_guard(int n, int q, bool enable_big_q)
{
    if (n == 2) {
        if (q > 11) throw Error("SL(2,q) guard: q <= 11");
    } else if (n == 3) {
        if (q > 5 || (q == 5 && !enable_big_q))
            throw Error("SL(3,q) guard: q <= 4, q = 5 behind the big-q flag");
    } else {
        throw Error("only SL(2) and SL(3) are enumerated");
    }
}

MatrixGroup MatrixGroup::special_linear(int n, int q, bool enable_big_q)
{
    check_sl_guard(n, q, enable_big_q);
    const FqField& F = FqField::get(q);
    std::vector<Mat> elems;
    long long space = 1;
    for (int i = 0; i < n * n; ++i) space *= q;
    for (long long code = 0; code < space; ++code) {
        Mat m{};
        long long c = code;
        for (int i = 0; i < n * n; ++i) { m[i] = static_cast<uint8_t>(c % q); c /= q; }
        if (mat_det(F, n, m) == 1) elems.push_back(m);
    }
    MatrixGroup G(n, q, "SL(" + std::to_string(n) + "," + std::to_string(q) + ")");
    G.finalize(std::move(elems));
    // closed-form order check: q^{n(n-1)/2} prod_{i=2..n} (q^i - 1)
    long long expect = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) expect *= q;
    for (int i = 2; i <= n; ++i) {
        long long qi = 1;
        for (int k = 0; k < i; ++k) qi *= q;
        expect *= qi - 1;
    }
    if (G.order() != expect) throw Error("SL enumeration does not match the closed-form order");
    return G;
}

MatrixGroup MatrixGroup::from_predicate(int n, int q, const std::function<bool(const Mat&)>& pred,
                                        std::string name)
{
    std::vector<Mat> elems;
    long long space = 1;
    for (int i = 0; i < n * n; ++i) space *= q;
    for (long long code = 0; code < space; ++code) {
        Mat m{};
        long long c = code;
        for (int i = 0; i < n * n; ++i) { m[i] = static_cast<uint8_t>(c % q); c /= q; }
        if (pred(m)) elems.push_back(m);
    }
    MatrixGroup G(n, q, std::move(name));
    G.finalize(std::move(elems));
    return G;
}

MatrixGroup MatrixGroup::from_generators(int n, int q, const std::vector<Mat>& gens,
                                         std::string name)
{
    const FqField& F = FqField::get(q);
    std::vector<Mat> elems{mat_identity(n)};
    std::unordered_map<long long, int> seen{{code_of(n, q, elems[0]), 0}};
    std::deque<Mat> queue{elems[0]};
    while (!queue.empty()) {
        Mat cur = queue.front();
        queue.pop_front();
        for (const Mat& g : gens) {
            Mat nxt = mat_mul(F, n, cur, g);
            long long c = code_of(n, q, nxt);
            if (seen.emplace(c, static_cast<int>(elems.size())).second) {
                elems.push_back(nxt);
                queue.push_back(nxt);
            }
        }
    }
    std::sort(elems.begin(), elems.end(),
              [&](const Mat& a, const Mat& b) { return code_of(n, q, a) < code_of(n, q, b); });
    MatrixGroup G(n, q, std::move(name));
    G.finalize(std::move(elems));
    return G;
}

}  // namespace mlab::finlab
