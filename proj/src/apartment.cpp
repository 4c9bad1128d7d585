#include "mackeylab/apartment.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace mlab {

Point parse_point(const std::string& text, int rank)
{
    Point p;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw Error("empty coordinate in point '" + text + "'");
        tok = tok.substr(a, b - a + 1);
        size_t slash = tok.find('/');
        try {
            if (slash == std::string::npos) {
                p.emplace_back(Int(tok));
            } else {
                Int num(tok.substr(0, slash));
                Int den(tok.substr(slash + 1));
                if (den == 0) throw Error("zero denominator");
                p.emplace_back(Rat(num, den));
            }
        } catch (const std::exception&) {
            throw Error("bad coordinate '" + tok + "' in point '" + text + "'");
        }
    }
    if (static_cast<int>(p.size()) != rank)
        throw Error("point '" + text + "' has " + std::to_string(p.size()) +
                    " coordinates, expected " + std::to_string(rank));
    return p;
}

std::string point_str(const Point& x)
{
    std::ostringstream os;
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) os << ",";
        os << boost::multiprecision::numerator(x[i]).str();
        if (boost::multiprecision::denominator(x[i]) != 1)
            os << "/" << boost::multiprecision::denominator(x[i]).str();
    }
    return os.str();
}

Point point_sub(const Point& a, const Point& b)
{
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point point_add_cochar(const Point& a, const std::vector<int>& ell)
{
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + ell[i];
    return r;
}

LocalRootSystem local_root_system(const RootDatum& datum, const Point& x)
{
    LocalRootSystem L;
    L.x = x;
    for (size_t r = 0; r < datum.num_roots(); ++r) {
        Rat v = datum.pair(static_cast<int>(r), x);
        if (!is_integral(v)) continue;
        L.phi_x.push_back({static_cast<int>(r), static_cast<int>(-to_ll(floor_rat(v)))});
        L.lin.push_back(static_cast<int>(r));
        if (datum.roots()[r].positive) L.lin_plus.push_back(static_cast<int>(r));
    }
    // Delta_x: elements of lin_plus not expressible as a sum of two of them
    for (int a : L.lin_plus) {
        bool decomposable = false;
        for (int b : L.lin_plus) {
            if (decomposable) break;
            for (int c : L.lin_plus) {
                std::vector<int> sum(datum.rank());
                for (int i = 0; i < datum.rank(); ++i)
                    sum[i] = datum.roots()[b].simple_coords[i] + datum.roots()[c].simple_coords[i];
                if (sum == datum.roots()[a].simple_coords) {
                    decomposable = true;
                    break;
                }
            }
        }
        if (!decomposable) L.delta_x.push_back(a);
    }
    return L;
}

bool is_special(const RootDatum& datum, const Point& x)
{
    for (int r : datum.positive_roots())
        if (!is_integral(datum.pair(r, x))) return false;
    return true;
}

bool is_vertex(const RootDatum& datum, const Point& x)
{
    auto L = local_root_system(datum, x);
    // rank of the gradient set over the rationals
    int n = datum.rank();
    std::vector<std::vector<Rat>> m;
    for (int r : L.lin_plus) {
        std::vector<Rat> row(n);
        for (int i = 0; i < n; ++i) row[i] = datum.roots()[r].simple_coords[i];
        m.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank == n;
}

std::vector<size_t> upsilon(const WeylGroup& W, const Point& x)
{
    const RootDatum& datum = W.datum();
    auto L = local_root_system(datum, x);
    std::vector<size_t> out;
    for (size_t w = 0; w < W.size(); ++w) {
        size_t winv = W.inverse(w);
        bool ok = true;
        for (int beta : L.delta_x)
            if (!datum.roots()[W.apply_to_root(winv, beta)].positive) { ok = false; break; }
        if (ok) out.push_back(w);
    }
    return out;
}

std::vector<int> phi_dagger(const RootDatum& datum, const Point& x, const Point& y,
                            const std::vector<int>& ell)
{
    std::vector<int> out;
    Point ymx = point_sub(y, x);
    for (size_t r = 0; r < datum.num_roots(); ++r)
        if (Rat(datum.pair_int(static_cast<int>(r), ell)) > datum.pair(static_cast<int>(r), ymx))
            out.push_back(static_cast<int>(r));
    return out;
}

AffineElement affine_mult(const WeylGroup& W, const AffineElement& a, const AffineElement& b)
{
    // (a.w, a.t)(b.w, b.t): z -> a.w (b.w z + b.t) + a.t
    std::vector<int> t = W.apply_to_cochar(a.w, b.t);
    for (size_t i = 0; i < t.size(); ++i) t[i] += a.t[i];
    return {W.mult(a.w, b.w), std::move(t)};
}

AffineElement affine_inverse(const WeylGroup& W, const AffineElement& a)
{
    size_t winv = W.inverse(a.w);
    std::vector<int> t = W.apply_to_cochar(winv, a.t);
    for (auto& v : t) v = -v;
    return {winv, std::move(t)};
}

std::vector<AffineElement> stabilizer_subgroup(const WeylGroup& W, const Point& x)
{
    const RootDatum& datum = W.datum();
    auto L = local_root_system(datum, x);
    // W_x^lin: subgroup closure of the reflections in Delta_x
    std::vector<size_t> gens;
    for (int beta : L.delta_x) gens.push_back(W.reflection_for_root(beta));
    std::set<size_t> seen{W.identity()};
    std::deque<size_t> queue{W.identity()};
    while (!queue.empty()) {
        size_t cur = queue.front();
        queue.pop_front();
        for (size_t g : gens) {
            size_t next = W.mult(g, cur);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<AffineElement> out;
    for (size_t w : seen) {
        // translation part x - w x, integral for reflections about affine walls
        Point wx = W.apply_to_point(w, x);
        std::vector<int> t(datum.rank());
        for (int i = 0; i < datum.rank(); ++i) {
            Rat diff = x[i] - wx[i];
            if (!is_integral(diff)) throw Error("stabilizer translation not integral");
            t[i] = static_cast<int>(to_ll(floor_rat(diff)));
        }
        out.push_back({w, std::move(t)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

AffineDoubleCosets::AffineDoubleCosets(const WeylGroup& W, const Point& x, const Point& y,
                                       int window)
    : W_(&W), x_(x), y_(y)
{
    if (window > 6) throw Error("double coset window guard exceeded");
    if (!is_vertex(W.datum(), x) || !is_vertex(W.datum(), y))
        throw Error("double coset oracle requires vertices");
    wx_ = stabilizer_subgroup(W, x);
    wy_ = stabilizer_subgroup(W, y);
    lin_plus_ = local_root_system(W.datum(), x).lin_plus;

    // classify every element with translation within the window
    int n = W.datum().rank();
    std::vector<int> t(n, -window);
    for (;;) {
        for (size_t w = 0; w < W.size(); ++w) class_of({w, t});
        int i = 0;
        while (i < n && t[i] == window) t[i++] = -window;
        if (i == n) break;
        ++t[i];
    }
}

bool AffineDoubleCosets::in_xplus(const std::vector<int>& ell) const
{
    const RootDatum& datum = W_->datum();
    Point ymx = point_sub(y_, x_);
    for (int r : lin_plus_)
        if (Rat(datum.pair_int(r, ell)) < datum.pair(r, ymx)) return false;
    return true;
}

std::set<AffineElement> AffineDoubleCosets::orbit_of(const AffineElement& u) const
{
    std::set<AffineElement> orbit;
    for (const auto& a : wy_)
        for (const auto& b : wx_) orbit.insert(affine_mult(*W_, affine_mult(*W_, a, u), b));
    return orbit;
}

size_t AffineDoubleCosets::class_of(const AffineElement& u)
{
    auto it = label_.find(u);
    if (it != label_.end()) return it->second;
    auto orbit = orbit_of(u);
    size_t id = classes_.size();
    ClassInfo info;
    info.canonical = *orbit.begin();
    info.orbit_size = orbit.size();
    for (const auto& e : orbit) {
        label_[e] = id;
        if (e.w == W_->identity() && in_xplus(e.t)) info.xplus_translations.push_back(e.t);
    }
    std::sort(info.xplus_translations.begin(), info.xplus_translations.end());
    classes_.push_back(std::move(info));
    return id;
}

}  // namespace mlab
