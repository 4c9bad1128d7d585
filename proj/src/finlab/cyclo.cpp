#include "mackeylab/finlab/cyclo.hpp"

#include <memory>
#include <mutex>

namespace mlab::finlab {

namespace {

// Phi_e via the recursive quotient of x^e - 1 by the proper cyclotomic factors.
QPoly cyclotomic(long long e, std::map<long long, QPoly>& memo)
{
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    std::vector<Int> xe(e + 1);
    xe[0] = -1;
    xe[e] = 1;
    QPoly num{std::vector<Int>(xe)};
    for (long long d = 1; d < e; ++d)
        if (e % d == 0) num = num.divide_exact(cyclotomic(d, memo));
    memo[e] = num;
    return num;
}

}  // namespace

CycloContext::CycloContext(long long e) : e_(e)
{
    if (e < 1 || e > 1 << 20) throw Error("cyclotomic exponent out of range");
    static std::mutex mu;
    static std::map<long long, QPoly> memo;
    QPoly phi;
    {
        std::lock_guard<std::mutex> lock(mu);
        phi = cyclotomic(e, memo);
    }
    phi_.resize(phi.degree() + 1);
    for (int i = 0; i <= phi.degree(); ++i) phi_[i] = to_ll(phi.coeff(i));
    if (phi_.back() != 1) throw Error("cyclotomic polynomial not monic");

    int d = phi_degree();
    xpow_.assign(e_, {});
    for (long long t = 0; t < e_; ++t) {
        if (t < d) {
            std::vector<long long> v(d, 0);
            v[t] = 1;
            xpow_[t] = std::move(v);
        } else {
            // x * previous, reduced by the monic Phi_e
            std::vector<long long> v(d + 1, 0);
            const auto& prev = xpow_[t - 1];
            for (int i = 0; i < d; ++i) v[i + 1] = prev[i];
            long long lead = v[d];
            if (lead != 0)
                for (int i = 0; i < d; ++i) {
                    v[i] -= lead * phi_[i];
                    if (std::abs(v[i]) > (1LL << 40))
                        throw Error("cyclotomic power table coefficient blowup");
                }
            v.resize(d);
            xpow_[t] = std::move(v);
        }
    }
}

std::vector<Int> CycloContext::reduce(const std::map<long long, Int>& sparse) const
{
    std::vector<Int> out(phi_degree(), Int(0));
    for (const auto& [t, c] : sparse) {
        if (c == 0) continue;
        long long tt = ((t % e_) + e_) % e_;
        const auto& pw = xpow_[tt];
        for (int i = 0; i < phi_degree(); ++i)
            if (pw[i]) out[i] += c * pw[i];
    }
    return out;
}

bool CycloContext::is_integer(const std::map<long long, Int>& sparse, Int* value) const
{
    auto red = reduce(sparse);
    for (size_t i = 1; i < red.size(); ++i)
        if (red[i] != 0) return false;
    if (value) *value = red.empty() ? Int(0) : red[0];
    return true;
}

const CycloContext& CycloContext::get(long long e)
{
    static std::mutex mu;
    static std::map<long long, std::unique_ptr<CycloContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it == cache.end())
        it = cache.emplace(e, std::make_unique<CycloContext>(e)).first;
    return *it->second;
}

void accumulate_product(std::map<long long, Int>& acc, const CycloValue& a, const CycloValue& b_conj,
                        const Int& weight, long long e)
{
    for (auto [ta, ma] : a.terms)
        for (auto [tb, mb] : b_conj.terms) {
            long long t = (ta + tb) % e;
            acc[t] += weight * ma * mb;
        }
}

}  // namespace mlab::finlab
