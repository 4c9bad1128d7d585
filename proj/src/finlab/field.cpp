#include "mackeylab/finlab/field.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace mlab::finlab {

namespace {

bool is_prime(int n)
{
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// irreducible monic polynomials x^f + ... over F_p, low-degree coefficients
// first (constant, linear, ...)
std::vector<int> modulus_for(int p, int f)
{
    if (f == 2) {
        // x^2 + x + 1 over F_2; x^2 + 1 over p = 3 mod 4; x^2 + x + 1 where -3
        // is a non-residue
        if (p == 2) return {1, 1};
        if (p % 4 == 3) return {1, 0};
        if (p == 5) return {1, 1};  // x^2+x+1, roots need -3 square: 2 is not
        throw Error("no quadratic modulus table entry for p=" + std::to_string(p));
    }
    if (f == 3) {
        if (p == 2) return {1, 1, 0};  // x^3 + x + 1
        if (p == 3) return {1, 2, 0};  // x^3 + 2x + 1
        if (p == 5) return {1, 1, 0};  // x^3 + x + 1
        throw Error("no cubic modulus table entry for p=" + std::to_string(p));
    }
    throw Error("unsupported field extension degree");
}

}  // namespace

FqField::FqField(int q) : q_(q)
{
    p_ = 0;
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int n = q, f = 0;
        while (n % p == 0) { n /= p; ++f; }
        if (n == 1) { p_ = p; f_ = f; break; }
        if (q % p == 0) break;
    }
    if (p_ == 0) throw Error("q = " + std::to_string(q) + " is not a prime power");
    if (q_ > 16) throw Error("field tables support q <= 16");

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    if (f_ == 1) {
        for (int a = 0; a < q_; ++a) {
            neg_[a] = static_cast<uint8_t>((q_ - a) % q_);
            for (int b = 0; b < q_; ++b) {
                add_[a * q_ + b] = static_cast<uint8_t>((a + b) % q_);
                mul_[a * q_ + b] = static_cast<uint8_t>((a * b) % q_);
            }
        }
    } else {
        auto mod = modulus_for(p_, f_);
        auto digits = [&](int a) {
            std::vector<int> d(f_);
            for (int i = 0; i < f_; ++i) { d[i] = a % p_; a /= p_; }
            return d;
        };
        auto encode = [&](const std::vector<int>& d) {
            int a = 0;
            for (int i = f_ - 1; i >= 0; --i) a = a * p_ + d[i];
            return a;
        };
        for (int a = 0; a < q_; ++a) {
            auto da = digits(a);
            std::vector<int> nd(f_);
            for (int i = 0; i < f_; ++i) nd[i] = (p_ - da[i]) % p_;
            neg_[a] = static_cast<uint8_t>(encode(nd));
            for (int b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<int> sum(f_);
                for (int i = 0; i < f_; ++i) sum[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = static_cast<uint8_t>(encode(sum));
                // polynomial product reduced by x^f = -mod
                std::vector<int> prod(2 * f_ - 1, 0);
                for (int i = 0; i < f_; ++i)
                    for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (int d = 2 * f_ - 2; d >= f_; --d) {
                    int c = prod[d];
                    if (!c) continue;
                    prod[d] = 0;
                    for (int i = 0; i < f_; ++i)
                        prod[d - f_ + i] = (prod[d - f_ + i] + c * (p_ - mod[i] % p_)) % p_;
                }
                prod.resize(f_);
                mul_[a * q_ + b] = static_cast<uint8_t>(encode(prod));
            }
        }
    }
    // inverses by search; verifies the multiplicative group on the way
    for (int a = 1; a < q_; ++a) {
        int found = 0;
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) { inv_[a] = static_cast<uint8_t>(b); ++found; }
        if (found != 1) throw Error("field construction failed for q=" + std::to_string(q_));
    }
}

uint8_t FqField::inv(uint8_t a) const
{
    if (a == 0) throw Error("division by zero in F_q");
    return inv_[a];
}

const FqField& FqField::get(int q)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FqField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::unique_ptr<FqField>(new FqField(q))).first;
    return *it->second;
}

CubicExtension::CubicExtension(int q) : F_(&FqField::get(q)), q_(q)
{
    // x^3 + c1 x + c0 from the table; stored as x^3 = -c1 x - c0
    std::array<int, 2> tail{};
    if (q == 2) tail = {1, 1};
    else if (q == 3) tail = {1, 2};
    else if (q == 5) tail = {1, 1};
    else if (q == 4) tail = {1, 1};  // x^3 + x + 1 has no root in F_4
    else throw Error("no cubic extension table entry for q=" + std::to_string(q));
    modulus_ = {static_cast<uint8_t>(tail[0]), static_cast<uint8_t>(tail[1]), 0};
    // confirm irreducibility: no root in F_q
    for (int t = 0; t < q_; ++t) {
        uint8_t v = F_->add(F_->mul(F_->mul(t, t), t),
                            F_->add(F_->mul(modulus_[1], t), modulus_[0]));
        if (v == 0) throw Error("cubic modulus has a root; table entry wrong");
    }
}

long long CubicExtension::mul(long long a, long long b) const
{
    std::array<int, 3> da{}, db{};
    for (int i = 0; i < 3; ++i) { da[i] = a % q_; a /= q_; }
    for (int i = 0; i < 3; ++i) { db[i] = b % q_; b /= q_; }
    std::array<uint8_t, 5> prod{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            prod[i + j] = F_->add(prod[i + j], F_->mul(da[i], db[j]));
    // reduce with x^3 = -(c1 x + c0)
    for (int d = 4; d >= 3; --d) {
        uint8_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        prod[d - 3] = F_->add(prod[d - 3], F_->neg(F_->mul(c, modulus_[0])));
        prod[d - 2] = F_->add(prod[d - 2], F_->neg(F_->mul(c, modulus_[1])));
    }
    return (static_cast<long long>(prod[2]) * q_ + prod[1]) * q_ + prod[0];
}

std::array<uint8_t, 9> CubicExtension::mult_matrix(long long a) const
{
    // columns are a * x^j in the basis {1, x, x^2}; row-major output
    std::array<uint8_t, 9> m{};
    long long cur = a;
    for (int j = 0; j < 3; ++j) {
        long long v = cur;
        for (int i = 0; i < 3; ++i) {
            m[i * 3 + j] = static_cast<uint8_t>(v % q_);
            v /= q_;
        }
        if (j < 2) cur = mul(cur, q_);  // multiply by x (index q encodes x)
    }
    return m;
}

}  // namespace mlab::finlab
