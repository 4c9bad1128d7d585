#include "mackeylab/finlab/chartable.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace mlab::finlab {

namespace {

// ----- arithmetic mod ell (ell < 2^31, products via __int128) -----

long long mulmod(long long a, long long b, long long m)
{
    return static_cast<long long>((static_cast<__int128>(a) * b) % m);
}

long long powmod(long long a, long long e, long long m)
{
    long long r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

long long invmod(long long a, long long m) { return powmod(((a % m) + m) % m, m - 2, m); }

bool is_prime_ll(long long n)
{
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long long> prime_factors(long long n)
{
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

long long primitive_root(long long ell)
{
    auto factors = prime_factors(ell - 1);
    for (long long g = 2; g < ell; ++g) {
        bool ok = true;
        for (long long f : factors)
            if (powmod(g, (ell - 1) / f, ell) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw Error("no primitive root found");
}

long long sqrtmod(long long a, long long ell)
{
    // Tonelli-Shanks; ell odd prime
    a %= ell;
    if (a < 0) a += ell;
    if (a == 0) return 0;
    if (powmod(a, (ell - 1) / 2, ell) != 1) throw Error("not a quadratic residue");
    if (ell % 4 == 3) return powmod(a, (ell + 1) / 4, ell);
    long long q = ell - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    long long z = 2;
    while (powmod(z, (ell - 1) / 2, ell) == 1) ++z;
    long long m = s, c = powmod(z, q, ell), t = powmod(a, q, ell), r = powmod(a, (q + 1) / 2, ell);
    while (t != 1) {
        long long i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, ell); ++i; }
        long long b = powmod(c, 1LL << (m - i - 1), ell);
        m = i;
        c = mulmod(b, b, ell);
        t = mulmod(t, c, ell);
        r = mulmod(r, b, ell);
    }
    return r;
}

using ModMatrix = std::vector<std::vector<long long>>;  // row major

// characteristic polynomial over F_ell by Newton's identities
std::vector<long long> charpoly_mod(const ModMatrix& M, long long ell)
{
    int n = static_cast<int>(M.size());
    std::vector<long long> tr(n + 1, 0);
    ModMatrix cur = M;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            ModMatrix nxt(n, std::vector<long long>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int t = 0; t < n; ++t) {
                    if (!cur[i][t]) continue;
                    for (int j = 0; j < n; ++j)
                        nxt[i][j] = (nxt[i][j] + mulmod(cur[i][t], M[t][j], ell)) % ell;
                }
            cur = std::move(nxt);
        }
        long long s = 0;
        for (int i = 0; i < n; ++i) s = (s + cur[i][i]) % ell;
        tr[k] = s;
    }
    // e_0 = 1; k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    std::vector<long long> e(n + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        long long s = 0;
        for (int i = 1; i <= k; ++i) {
            long long term = mulmod(e[k - i], tr[i], ell);
            s = (i % 2 == 1) ? (s + term) % ell : (s - term % ell + ell) % ell;
        }
        e[k] = mulmod(s, invmod(k, ell), ell);
    }
    // char poly coefficients of x^{n-k}: (-1)^k e_k, ascending order returned
    std::vector<long long> coeffs(n + 1);
    for (int k = 0; k <= n; ++k) {
        long long v = e[k];
        if (k % 2 == 1) v = (ell - v) % ell;
        coeffs[n - k] = v;
    }
    return coeffs;
}

// nullspace basis of a square matrix over F_ell; vectors as columns of the result
std::vector<std::vector<long long>> nullspace_mod(ModMatrix A, long long ell)
{
    int n = static_cast<int>(A.size());
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (A[r][col] % ell != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(A[rank], A[piv]);
        long long inv = invmod(A[rank][col], ell);
        for (int c = 0; c < n; ++c) A[rank][c] = mulmod(A[rank][c], inv, ell);
        for (int r = 0; r < n; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            long long f = A[r][col];
            for (int c = 0; c < n; ++c)
                A[r][c] = ((A[r][c] - mulmod(f, A[rank][c], ell)) % ell + ell) % ell;
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    std::vector<std::vector<long long>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<long long> v(n, 0);
        v[free] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] = (ell - A[r][free] % ell) % ell;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

CharacterTable CharacterTable::dixon(const MatrixGroup& G)
{
    int k = G.num_classes();
    if (k > 64) throw Error("class count guard exceeded");
    long long e = G.exponent();
    long long order = G.order();

    // prime ell = 1 mod e with ell > 2 sqrt(|G|)
    long long ell = e + 1;
    while (!is_prime_ll(ell) || static_cast<__int128>(ell) * ell <= 4 * static_cast<__int128>(order))
        ell += e;

    // class multiplication matrices A_i[j][l] = #{(u,v) in C_i x C_j : uv = rep_l}
    std::vector<ModMatrix> A(k, ModMatrix(k, std::vector<long long>(k, 0)));
    for (int l = 0; l < k; ++l) {
        int zl = G.class_rep(l);
        for (long long g = 0; g < order; ++g) {
            int i = G.class_of(static_cast<int>(g));
            int j = G.class_of(G.mult(G.inverse(static_cast<int>(g)), zl));
            A[i][j][l] += 1;
        }
    }

    // split the full space into common eigenspaces; column-span bases
    std::vector<std::vector<std::vector<long long>>> spaces;
    {
        std::vector<std::vector<long long>> full;
        for (int i = 0; i < k; ++i) {
            std::vector<long long> v(k, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<std::vector<long long>>> next;
        for (auto& B : spaces) {
            int d = static_cast<int>(B.size());
            if (d == 1) {
                next.push_back(std::move(B));
                continue;
            }
            // restriction R of A_i to span(B): A_i * B = B * R, solved by
            // Gaussian elimination on [B | A_i B]
            ModMatrix lhs(k, std::vector<long long>(d + d, 0));
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < d; ++c) lhs[r][c] = B[c][r];
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < d; ++c) {
                    long long s = 0;
                    for (int t = 0; t < k; ++t)
                        if (A[i][r][t] && B[c][t]) s = (s + mulmod(A[i][r][t], B[c][t], ell)) % ell;
                    lhs[r][d + c] = s;
                }
            // eliminate
            int rank = 0;
            std::vector<int> pivots;
            for (int col = 0; col < d && rank < k; ++col) {
                int piv = -1;
                for (int r = rank; r < k; ++r)
                    if (lhs[r][col] != 0) { piv = r; break; }
                if (piv < 0) throw Error("dependent subspace basis");
                std::swap(lhs[rank], lhs[piv]);
                long long inv = invmod(lhs[rank][col], ell);
                for (int c = 0; c < 2 * d; ++c) lhs[rank][c] = mulmod(lhs[rank][c], inv, ell);
                for (int r = 0; r < k; ++r) {
                    if (r == rank || lhs[r][col] == 0) continue;
                    long long f = lhs[r][col];
                    for (int c = 0; c < 2 * d; ++c)
                        lhs[r][c] = ((lhs[r][c] - mulmod(f, lhs[rank][c], ell)) % ell + ell) % ell;
                }
                pivots.push_back(col);
                ++rank;
            }
            ModMatrix R(d, std::vector<long long>(d, 0));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) R[r][c] = lhs[r][d + c];

            // eigenvalues: roots of the characteristic polynomial, found by
            // scanning the candidate values Omega_i = |C_i| chi(g_i)/chi(1)
            auto cp = charpoly_mod(R, ell);
            std::vector<long long> roots;
            for (long long lam = 0; lam < ell; ++lam) {
                long long v = 0;
                for (int c = static_cast<int>(cp.size()) - 1; c >= 0; --c)
                    v = (mulmod(v, lam, ell) + cp[c]) % ell;
                if (v == 0) roots.push_back(lam);
            }
            int split_total = 0;
            for (long long lam : roots) {
                ModMatrix RmL = R;
                for (int t = 0; t < d; ++t) RmL[t][t] = ((RmL[t][t] - lam) % ell + ell) % ell;
                auto null_basis = nullspace_mod(RmL, ell);
                if (null_basis.empty()) continue;
                std::vector<std::vector<long long>> sub;
                for (auto& nv : null_basis) {
                    std::vector<long long> w(k, 0);
                    for (int t = 0; t < d; ++t)
                        if (nv[t])
                            for (int r = 0; r < k; ++r)
                                w[r] = (w[r] + mulmod(nv[t], B[t][r], ell)) % ell;
                    sub.push_back(std::move(w));
                }
                split_total += static_cast<int>(sub.size());
                next.push_back(std::move(sub));
            }
            // the class algebra is semisimple mod ell, so the restriction is
            // diagonalizable and the eigenspaces exhaust the subspace
            if (split_total != d) throw Error("eigen splitting lost dimensions");
        }
        spaces = std::move(next);
    }
    for (auto& B : spaces)
        if (B.size() != 1) throw Error("character eigenspaces failed to split to dimension one");
    if (static_cast<int>(spaces.size()) != k) throw Error("wrong number of eigenvectors");

    CharacterTable T;
    T.G_ = &G;
    T.e_ = e;
    T.ell_ = ell;

    long long z = primitive_root(ell);

    // class sizes and inverse-class map mod ell
    std::vector<long long> csize(k), csize_inv(k);
    for (int c = 0; c < k; ++c) {
        csize[c] = G.class_size(c);
        csize_inv[c] = invmod(csize[c] % ell, ell);
    }

    std::vector<std::pair<long long, std::vector<long long>>> chars;  // (degree, omega)
    for (auto& B : spaces) {
        std::vector<long long> omega = B[0];
        if (omega[0] == 0) throw Error("eigenvector vanishes at the identity class");
        long long scale = invmod(omega[0], ell);
        for (auto& v : omega) v = mulmod(v, scale, ell);
        // 1/chi(1)^2 = (1/|G|) sum omega_i omega_{i*} / |C_i|
        long long s = 0;
        for (int i = 0; i < k; ++i) {
            long long prod = mulmod(omega[i], omega[G.inverse_class(i)], ell);
            s = (s + mulmod(prod, csize_inv[i], ell)) % ell;
        }
        long long deg_sq = mulmod(order % ell, invmod(s, ell), ell);
        long long deg = sqrtmod(deg_sq, ell);
        if (deg > ell - deg) deg = ell - deg;
        if (deg <= 0 || deg * deg > order) throw Error("degree lift out of range");
        chars.push_back({deg, std::move(omega)});
    }
    std::sort(chars.begin(), chars.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Int degsum = 0;
    for (auto& [deg, omega] : chars) degsum += Int(deg) * deg;
    if (degsum != Int(order)) throw Error("degree squares do not sum to the group order");

    // lift values: chi(g) = sum_s mu_s zeta_m^s with
    // mu_s = (1/m) sum_t chi(g^t) lambda^{-st} computed mod ell
    for (auto& [deg, omega] : chars) {
        std::vector<CycloValue> row(k);
        for (int c = 0; c < k; ++c) {
            long long m = G.class_order(c);
            long long lam = powmod(z, (ell - 1) / m, ell);
            long long lam_inv = invmod(lam, ell);
            // chi on powers of the class representative
            std::vector<long long> chi_pow(m);
            for (long long t = 0; t < m; ++t) {
                int pc = G.power_class(c, t);
                chi_pow[t] = mulmod(mulmod(deg % ell, omega[pc], ell), csize_inv[pc], ell);
            }
            long long minv = invmod(m % ell, ell);
            CycloValue val;
            for (long long s = 0; s < m; ++s) {
                long long acc = 0;
                long long lpow = 1;
                long long step = powmod(lam_inv, s, ell);
                for (long long t = 0; t < m; ++t) {
                    acc = (acc + mulmod(chi_pow[t], lpow, ell)) % ell;
                    lpow = mulmod(lpow, step, ell);
                }
                long long mu = mulmod(acc, minv, ell);
                if (mu > deg) throw Error("multiplicity lift out of range");
                if (mu) val.terms.push_back({(s * (e / m)) % e, mu});
            }
            // sanity: multiplicities at the identity sum to the degree
            long long total = 0;
            for (auto [t, mu] : val.terms) total += mu;
            if (total != deg) throw Error("eigenvalue multiplicities do not sum to the degree");
            row[c] = std::move(val);
        }
        T.degrees_.push_back(deg);
        T.values_.push_back(std::move(row));
    }
    return T;
}

Int CharacterTable::inner_product(int chi, int psi) const
{
    const auto& ctx = CycloContext::get(e_);
    std::map<long long, Int> acc;
    for (int c = 0; c < G_->num_classes(); ++c)
        accumulate_product(acc, values_[chi][c], values_[psi][c].conj(e_), Int(G_->class_size(c)),
                           e_);
    Int out;
    if (!ctx.is_integer(acc, &out)) throw Error("character inner product not an integer");
    if (out % G_->order() != 0) throw Error("character inner product not divisible by |G|");
    return out / G_->order();
}

Int CharacterTable::inner_product_on(int chi, int psi, const std::vector<int>& subgroup) const
{
    const auto& ctx = CycloContext::get(e_);
    // group the subgroup elements by class
    std::vector<long long> count(G_->num_classes(), 0);
    for (int g : subgroup) ++count[G_->class_of(g)];
    std::map<long long, Int> acc;
    for (int c = 0; c < G_->num_classes(); ++c)
        if (count[c])
            accumulate_product(acc, values_[chi][c], values_[psi][c].conj(e_), Int(count[c]), e_);
    Int out;
    if (!ctx.is_integer(acc, &out)) throw Error("restricted inner product not an integer");
    Int size(static_cast<long long>(subgroup.size()));
    if (out % size != 0) throw Error("restricted inner product not divisible by |H|");
    return out / size;
}

bool CharacterTable::value_is_integer(int chi, int cls, Int* out) const
{
    const auto& ctx = CycloContext::get(e_);
    std::map<long long, Int> acc;
    for (auto [t, m] : values_[chi][cls].terms) acc[t] += m;
    return ctx.is_integer(acc, out);
}

long long CharacterTable::central_exponent(int chi, int z_element) const
{
    int cls = G_->class_of(z_element);
    if (G_->class_size(cls) != 1) throw Error("element is not central");
    const auto& val = values_[chi][cls];
    // chi(z) = deg * zeta^t: a single term of full multiplicity
    if (val.terms.size() != 1 || val.terms[0].second != degrees_[chi])
        throw Error("central value is not a scalar multiple of the degree");
    return val.terms[0].first;
}

bool CharacterTable::verify_orthogonality() const
{
    for (int i = 0; i < num_chars(); ++i)
        for (int j = i; j < num_chars(); ++j) {
            Int v = inner_product(i, j);
            if (v != (i == j ? 1 : 0)) return false;
        }
    return true;
}

Int CharacterTable::degree_square_sum() const
{
    Int s = 0;
    for (long long d : degrees_) s += Int(d) * d;
    return s;
}

void CharacterTable::save(std::ostream& os) const
{
    os << "mackeylab-chartable 1\n";
    os << "group " << G_->name() << "\n";
    os << "order " << G_->order() << "\n";
    os << "exponent " << e_ << "\n";
    os << "classes " << G_->num_classes() << "\n";
    for (int c = 0; c < G_->num_classes(); ++c) {
        os << "class " << c << " size " << G_->class_size(c) << " order " << G_->class_order(c)
           << "\n";
    }
    os << "chars " << num_chars() << "\n";
    for (int i = 0; i < num_chars(); ++i) {
        os << "char " << degrees_[i] << "\n";
        for (int c = 0; c < G_->num_classes(); ++c) {
            os << "value";
            for (auto [t, m] : values_[i][c].terms) os << " " << t << ":" << m;
            os << "\n";
        }
    }
}

CharacterTable CharacterTable::load(std::istream& is, const MatrixGroup& G)
{
    auto expect = [&](const std::string& want) {
        std::string tok;
        if (!(is >> tok) || tok != want) throw Error("character table parse: expected " + want);
    };
    expect("mackeylab-chartable");
    int version;
    is >> version;
    if (version != 1) throw Error("unsupported character table version");
    expect("group");
    std::string name;
    is >> name;
    if (name != G.name()) throw Error("character table is for group " + name);
    expect("order");
    long long order;
    is >> order;
    if (order != G.order()) throw Error("character table order mismatch");
    expect("exponent");
    CharacterTable T;
    T.G_ = &G;
    is >> T.e_;
    expect("classes");
    int k;
    is >> k;
    if (k != G.num_classes()) throw Error("character table class count mismatch");
    for (int c = 0; c < k; ++c) {
        expect("class");
        int idx;
        long long size, ord;
        is >> idx;
        expect("size");
        is >> size;
        expect("order");
        is >> ord;
        if (idx != c || size != G.class_size(c) || ord != G.class_order(c))
            throw Error("character table class data mismatch");
    }
    expect("chars");
    int nchars;
    is >> nchars;
    is.ignore();
    for (int i = 0; i < nchars; ++i) {
        std::string line;
        std::getline(is, line);
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok != "char") throw Error("character table parse: expected char");
        long long deg;
        ls >> deg;
        T.degrees_.push_back(deg);
        std::vector<CycloValue> row;
        for (int c = 0; c < k; ++c) {
            std::getline(is, line);
            std::istringstream vs(line);
            vs >> tok;
            if (tok != "value") throw Error("character table parse: expected value");
            CycloValue val;
            std::string pair;
            while (vs >> pair) {
                auto colon = pair.find(':');
                if (colon == std::string::npos) throw Error("bad value entry " + pair);
                val.terms.push_back({std::stoll(pair.substr(0, colon)),
                                     std::stoll(pair.substr(colon + 1))});
            }
            row.push_back(std::move(val));
        }
        T.values_.push_back(std::move(row));
    }
    return T;
}

ClassFunction as_class_function(const CharacterTable& table, int chi)
{
    ClassFunction f;
    f.G = &table.group();
    f.exponent = table.exponent();
    for (int c = 0; c < table.group().num_classes(); ++c) f.values.push_back(table.value(chi, c));
    return f;
}

ClassFunction induced_character(const MatrixGroup& big, const MatrixGroup& sub,
                                const std::vector<int>& embed, const ClassFunction& sigma)
{
    if (sigma.G != &sub) throw Error("class function is not over the inducing subgroup");
    // membership map big id -> sub id
    std::vector<int> back(big.order(), -1);
    for (long long s = 0; s < sub.order(); ++s) back[embed[s]] = static_cast<int>(s);

    ClassFunction out;
    out.G = &big;
    out.exponent = std::lcm(sigma.exponent, big.exponent());
    long long scale = out.exponent / sigma.exponent;
    out.values.resize(big.num_classes());
    for (int c = 0; c < big.num_classes(); ++c) {
        int b = big.class_rep(c);
        // (1/|H|) * sum over g in G with g b g^{-1} in H of sigma(g b g^{-1});
        // accumulate integer multiples then divide exactly
        std::map<long long, long long> acc;  // exponent -> multiplicity sum
        for (long long g = 0; g < big.order(); ++g) {
            int conj = big.mult(big.mult(static_cast<int>(g), b), big.inverse(static_cast<int>(g)));
            int sid = back[conj];
            if (sid < 0) continue;
            for (auto [t, m] : sigma.values[sub.class_of(sid)].terms) acc[t * scale] += m;
        }
        CycloValue val;
        for (auto [t, m] : acc) {
            if (m % sub.order() != 0)
                throw Error("induced character value not divisible by |H|");
            long long red = m / sub.order();
            if (red) val.terms.push_back({t, red});
        }
        out.values[c] = std::move(val);
    }
    return out;
}

Int multiplicity(const CharacterTable& table, const ClassFunction& f, int chi)
{
    const MatrixGroup& G = table.group();
    if (f.G != &G) throw Error("class function is over a different group");
    if (f.exponent % table.exponent() != 0)
        throw Error("class function exponent incompatible with the table");
    long long e = f.exponent;
    long long scale = e / table.exponent();
    const auto& ctx = CycloContext::get(e);
    std::map<long long, Int> acc;
    for (int c = 0; c < G.num_classes(); ++c) {
        CycloValue scaled = table.value(chi, c).conj(table.exponent());
        for (auto& [t, m] : scaled.terms) t *= scale;
        accumulate_product(acc, f.values[c], scaled, Int(G.class_size(c)), e);
    }
    Int out;
    if (!ctx.is_integer(acc, &out)) throw Error("multiplicity is not an integer");
    if (out % G.order() != 0) throw Error("multiplicity not divisible by |G|");
    return out / G.order();
}

}  // namespace mlab::finlab
