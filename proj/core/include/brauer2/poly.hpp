#pragma once

#include "brauer2/errors.hpp"
#include "brauer2/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace brauer2 {

/// Dense univariate polynomial over a field T, lowest degree first.
///
/// T must be default-constructible as zero, constructible from int, and
/// support field arithmetic. The zero polynomial has no coefficients and
/// degree -1; otherwise the leading coefficient is nonzero.
template <class T>
class Poly {
public:
    using coeff_type = T;

    Poly() = default;
    explicit Poly(T c)
    {
        if (!(c == T{}))
            coeffs_.push_back(std::move(c));
    }
    explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly monomial(T c, std::size_t degree)
    {
        if (c == T{})
            return {};
        std::vector<T> v(degree + 1);
        v[degree] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{}; }
    const T& leading() const { return coeffs_.back(); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == T{})
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const T& c)
    {
        if (c == T{})
            return {};
        Poly r = a;
        for (auto& x : r.coeffs_)
            x = x * c;
        r.trim();
        return r;
    }
    friend Poly operator*(const T& c, const Poly& a) { return a * c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Horner evaluation at a point of any ring that accepts T coefficients.
    template <class U>
    U evaluate(const U& point) const
    {
        U acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * point + U(*it);
        return acc;
    }
    T operator()(const T& point) const { return evaluate<T>(point); }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == T{})
            coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b)
{
    if (b.is_zero())
        throw InvalidArgument("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly<T>{}, a};
    std::vector<T> rem = a.coeffs();
    const int db = b.degree();
    const T inv_lead = T(1) / b.leading();
    std::vector<T> quo(static_cast<std::size_t>(a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        const T& top = rem[static_cast<std::size_t>(i)];
        if (top == T{})
            continue;
        T q = top * inv_lead;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = slot - q * b.coeffs()[static_cast<std::size_t>(j)];
        }
        quo[static_cast<std::size_t>(i - db)] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b)
{
    return divmod(a, b).first;
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b)
{
    return divmod(a, b).second;
}

template <class T>
bool divides(const Poly<T>& d, const Poly<T>& a)
{
    return (a % d).is_zero();
}

template <class T>
Poly<T> monic(const Poly<T>& p)
{
    if (p.is_zero())
        return p;
    return p * (T(1) / p.leading());
}

/// Monic gcd; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b)
{
    while (!b.is_zero()) {
        Poly<T> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class T>
struct XgcdResult {
    Poly<T> g, s, t; // g = s*a + t*b, g monic
};

template <class T>
XgcdResult<T> xgcd(const Poly<T>& a, const Poly<T>& b)
{
    Poly<T> r0 = a, r1 = b;
    Poly<T> s0(T(1)), s1, t0, t1(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<T> s2 = s0 - q * s1;
        Poly<T> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    const T inv = T(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

template <class T>
Poly<T> derivative(const Poly<T>& p)
{
    if (p.degree() <= 0)
        return {};
    std::vector<T> v(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i)
        v[static_cast<std::size_t>(i - 1)] = p.coeffs()[static_cast<std::size_t>(i)] * T(i);
    return Poly<T>(std::move(v));
}

template <class T>
Poly<T> pow(Poly<T> base, unsigned e)
{
    Poly<T> acc(T(1));
    while (e > 0) {
        if (e & 1U)
            acc = acc * base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return acc;
}

template <class T>
T pow(T base, unsigned e)
{
    T acc(1);
    while (e > 0) {
        if (e & 1U)
            acc = acc * base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return acc;
}

/// p(q(x)).
template <class T>
Poly<T> compose(const Poly<T>& p, const Poly<T>& q)
{
    Poly<T> acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * q + Poly<T>(*it);
    return acc;
}

/// Resultant over a field, by the Euclidean remainder sequence.
template <class T>
T resultant(Poly<T> a, Poly<T> b)
{
    if (a.is_zero() || b.is_zero())
        return T{};
    T acc(1);
    while (true) {
        const int m = a.degree();
        const int n = b.degree();
        if (n == 0)
            return acc * pow(b.leading(), static_cast<unsigned>(m));
        Poly<T> r = a % b;
        if (r.is_zero())
            return T{};
        const int k = r.degree();
        if ((m * n) % 2 == 1)
            acc = -acc;
        acc = acc * pow(b.leading(), static_cast<unsigned>(m - k));
        a = std::move(b);
        b = std::move(r);
    }
}

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
template <class T>
T discriminant(const Poly<T>& f)
{
    const int n = f.degree();
    if (n < 1)
        throw InvalidArgument("discriminant of a constant");
    T r = resultant(f, derivative(f)) / f.leading();
    if (((n * (n - 1)) / 2) % 2 == 1)
        r = -r;
    return r;
}

/// Yun's algorithm: monic squarefree, pairwise coprime g_i with
/// monic(p) = prod g_i^i. Entries with g_i = 1 are omitted.
template <class T>
std::vector<std::pair<Poly<T>, int>> squarefree_decomposition(const Poly<T>& p)
{
    if (p.is_zero())
        throw InvalidArgument("squarefree decomposition of zero");
    std::vector<std::pair<Poly<T>, int>> out;
    if (p.degree() == 0)
        return out;
    Poly<T> a = monic(p);
    Poly<T> b = derivative(a);
    Poly<T> c = gcd(a, b);
    Poly<T> w = a / c;
    Poly<T> y = b / c;
    Poly<T> z = y - derivative(w);
    int i = 1;
    while (w.degree() > 0) {
        Poly<T> g = gcd(w, z);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        w = w / g;
        y = z / g;
        z = y - derivative(w);
        ++i;
    }
    return out;
}

/// Product of the irreducible factors occurring to odd multiplicity, monic.
template <class T>
Poly<T> odd_part(const Poly<T>& p)
{
    Poly<T> acc(T(1));
    for (const auto& [g, m] : squarefree_decomposition(p))
        if (m % 2 == 1)
            acc = acc * g;
    return acc;
}

/// Product of the distinct irreducible factors of p, monic.
template <class T>
Poly<T> squarefree_part(const Poly<T>& p)
{
    if (p.is_zero())
        throw InvalidArgument("squarefree_part of zero");
    if (p.degree() == 0)
        return Poly<T>(T(1));
    return monic(p / gcd(p, derivative(p)));
}

/// Canonical order: by degree, then coefficients lowest-first.
template <class T>
int canonical_compare(const Poly<T>& a, const Poly<T>& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const int c = canonical_compare(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0)
            return c;
    }
    return 0;
}

template <class T>
struct CanonicalLess {
    bool operator()(const T& a, const T& b) const { return canonical_compare(a, b) < 0; }
};

template <class T>
bool is_atomic(const Poly<T>& p)
{
    return p.degree() <= 0 && (p.is_zero() || is_atomic(p.leading()));
}

/// Renders "3*t^2 - t + 1/2"; compound coefficients are parenthesized.
template <class T>
std::string to_string(const Poly<T>& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const T& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == T{})
            continue;
        std::string cs = to_string(c);
        const bool single_term = is_atomic(c)
            || (cs.find(" + ") == std::string::npos && cs.find(" - ") == std::string::npos
                && cs.find('/') == std::string::npos);
        bool negative = false;
        if (single_term && !cs.empty() && cs[0] == '-') {
            negative = true;
            cs.erase(0, 1);
        }
        if (!single_term)
            cs = "(" + cs + ")";
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono;
        if (i >= 1)
            mono = var + (i > 1 ? "^" + std::to_string(i) : "");
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

} // namespace brauer2
