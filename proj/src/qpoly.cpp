#include "mackeylab/qpoly.hpp"

#include <sstream>

namespace mlab {

QPoly::QPoly(long long constant)
{
    if (constant != 0) c_.push_back(Int(constant));
}

QPoly::QPoly(const Int& constant)
{
    if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(std::initializer_list<long long> coeffs)
{
    for (long long v : coeffs) c_.emplace_back(v);
    normalize();
}

void QPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::q() { return QPoly(std::vector<Int>{Int(0), Int(1)}); }

QPoly QPoly::monomial(const Int& c, int deg)
{
    if (c == 0) return QPoly();
    std::vector<Int> v(deg + 1);
    v[deg] = c;
    return QPoly(std::move(v));
}

Int QPoly::coeff(int d) const
{
    if (d < 0 || d >= static_cast<int>(c_.size())) return Int(0);
    return c_[d];
}

Int QPoly::leading() const
{
    if (c_.empty()) return Int(0);
    return c_.back();
}

QPoly QPoly::operator-() const
{
    QPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const
{
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const
{
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::pow(unsigned e) const
{
    QPoly r(1);
    QPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Int QPoly::eval(const Int& x) const
{
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::optional<QPoly> QPoly::try_divide(const QPoly& d) const
{
    if (d.is_zero()) return std::nullopt;
    QPoly rem = *this;
    std::vector<Int> quot(std::max<int>(degree() - d.degree() + 1, 0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        Int lead = rem.leading();
        if (lead % d.leading() != 0) return std::nullopt;
        Int c = lead / d.leading();
        int shift = rem.degree() - d.degree();
        quot[shift] = c;
        rem = rem - d * QPoly::monomial(c, shift);
    }
    if (!rem.is_zero()) return std::nullopt;
    return QPoly(std::move(quot));
}

QPoly QPoly::divide_exact(const QPoly& d) const
{
    auto r = try_divide(d);
    if (!r) throw Error("inexact polynomial division: (" + str() + ") / (" + d.str() + ")");
    return *r;
}

std::string QPoly::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        Int c = c_[d];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || d == 0) os << a.str();
        if (d > 0) {
            if (a != 1) os << "*";
            os << "q";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

std::string QPoly::coeff_list() const
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].str();
    }
    os << "]";
    return os.str();
}

QPoly QPoly::parse_coeff_list(const std::string& s)
{
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw Error("bad polynomial coefficient list: " + s);
    std::vector<Int> v;
    std::string body = s.substr(1, s.size() - 2);
    if (!body.empty()) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                v.emplace_back(Int(tok));
            } catch (const std::exception&) {
                throw Error("bad polynomial coefficient list: " + s);
            }
        }
    }
    return QPoly(std::move(v));
}

}  // namespace mlab
