#include "brauer2/factor.hpp"

#include <cstdint>
#include <random>

namespace brauer2 {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p an odd prime below 2^31. Coefficients lowest first,
// no trailing zeros.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Fp {
    u64 p;

    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 pow(u64 a, u64 e) const
    {
        u64 r = 1;
        a %= p;
        while (e > 0) {
            if (e & 1U)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }

    static void trim(ModPoly& a)
    {
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }

    ModPoly sub(const ModPoly& a, const ModPoly& b) const
    {
        ModPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        trim(r);
        return r;
    }
    ModPoly mul(const ModPoly& a, const ModPoly& b) const
    {
        if (a.empty() || b.empty())
            return {};
        ModPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        trim(r);
        return r;
    }
    ModPoly scale(const ModPoly& a, u64 c) const
    {
        ModPoly r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = mul(a[i], c);
        trim(r);
        return r;
    }
    // Quotient and remainder; b nonzero.
    std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const
    {
        if (a.size() < b.size())
            return {{}, a};
        ModPoly r = a;
        ModPoly q(a.size() - b.size() + 1, 0);
        const u64 il = inv(b.back());
        for (std::size_t i = a.size(); i-- >= b.size();) {
            const u64 c = mul(r[i], il);
            q[i - (b.size() - 1)] = c;
            if (c == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                const std::size_t k = i - (b.size() - 1) + j;
                r[k] = sub(r[k], mul(c, b[j]));
            }
        }
        r.resize(b.size() - 1);
        trim(r);
        trim(q);
        return {q, r};
    }
    ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
    ModPoly monic(const ModPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
    ModPoly gcd(ModPoly a, ModPoly b) const
    {
        while (!b.empty()) {
            ModPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // s with s*a = 1 mod m (a, m coprime).
    ModPoly inverse_mod(const ModPoly& a, const ModPoly& m) const
    {
        ModPoly r0 = m, r1 = rem(a, m);
        ModPoly s0, s1{1};
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            ModPoly s2 = sub(s0, mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant
        return rem(scale(s0, inv(r0[0])), m);
    }
    ModPoly derivative(const ModPoly& a) const
    {
        if (a.size() <= 1)
            return {};
        ModPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i)
            r[i - 1] = mul(a[i], i % p);
        trim(r);
        return r;
    }
    ModPoly powmod(ModPoly base, u64 e, const ModPoly& m) const
    {
        ModPoly r{1};
        base = rem(base, m);
        while (e > 0) {
            if (e & 1U)
                r = rem(mul(r, base), m);
            base = rem(mul(base, base), m);
            e >>= 1U;
        }
        return r;
    }
};

ModPoly reduce_mod(const std::vector<Integer>& a, u64 p)
{
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer c = a[i] % Integer(static_cast<unsigned long>(p));
        if (c < 0)
            c += static_cast<unsigned long>(p);
        r[i] = c.get_ui();
    }
    Fp::trim(r);
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree g whose
// irreducible factors all have degree d.
void equal_degree_split(const Fp& F, const ModPoly& g, std::size_t d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out)
{
    const std::size_t n = g.size() - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    std::uniform_int_distribution<u64> dist(0, F.p - 1);
    while (true) {
        ModPoly a(n);
        for (auto& c : a)
            c = dist(rng);
        Fp::trim(a);
        if (a.size() <= 1)
            continue;
        // a^{(p^d - 1)/2} = (a^{1 + p + ... + p^{d-1}})^{(p-1)/2}
        ModPoly acc = F.rem(a, g);
        ModPoly frob = acc;
        for (std::size_t i = 1; i < d; ++i) {
            frob = F.powmod(frob, F.p, g);
            acc = F.rem(F.mul(acc, frob), g);
        }
        ModPoly b = F.powmod(acc, (F.p - 1) / 2, g);
        b = F.sub(b, ModPoly{1});
        ModPoly h = F.gcd(b, g);
        if (h.size() > 1 && h.size() < g.size()) {
            equal_degree_split(F, h, d, rng, out);
            equal_degree_split(F, F.divmod(g, h).first, d, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<ModPoly> factor_mod_p(const Fp& F, ModPoly f)
{
    std::vector<ModPoly> out;
    std::mt19937_64 rng(0x5eedULL + F.p);
    const ModPoly x{0, 1};
    ModPoly h = x;
    for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
        h = F.powmod(h, F.p, f);
        ModPoly g = F.gcd(F.sub(h, x), f);
        if (g.size() > 1) {
            equal_degree_split(F, g, d, rng, out);
            f = F.divmod(f, g).first;
            h = F.rem(h, f);
        }
    }
    if (f.size() > 1)
        out.push_back(F.monic(f));
    return out;
}

bool is_probable_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers.

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

ZPoly zmod(ZPoly a, const Integer& m)
{
    for (auto& c : a) {
        c %= m;
        if (c < 0)
            c += m;
    }
    trim(a);
    return a;
}

ZPoly symmetric(ZPoly a, const Integer& m)
{
    const Integer half = m / 2;
    for (auto& c : a) {
        c %= m;
        if (c < 0)
            c += m;
        if (c > half)
            c -= m;
    }
    trim(a);
    return a;
}

ZPoly from_mod(const ModPoly& a)
{
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

Integer content(const ZPoly& a)
{
    Integer g = 0;
    for (const auto& c : a)
        g = ::gcd(g, c);
    return g;
}

ZPoly primitive(ZPoly a)
{
    Integer g = content(a);
    if (g != 0)
        for (auto& c : a)
            c /= g;
    if (!a.empty() && a.back() < 0)
        for (auto& c : a)
            c = -c;
    return a;
}

// Lifts monic factors with g = lc(g) * prod factors (mod p) to the same
// relation mod p^k. Linear lifting, one p-adic digit per step.
std::vector<ZPoly> hensel_lift(const ZPoly& g, const std::vector<ModPoly>& factors, const Fp& F,
                               unsigned k)
{
    const std::size_t r = factors.size();
    const Integer lc = g.back();
    const u64 lc_inv = F.inv(reduce_mod({lc}, F.p).at(0));

    ModPoly full{1};
    for (const auto& f : factors)
        full = F.mul(full, f);
    std::vector<ModPoly> cofactor_inverse(r);
    for (std::size_t i = 0; i < r; ++i) {
        ModPoly others = F.divmod(full, factors[i]).first;
        cofactor_inverse[i] = F.inverse_mod(others, factors[i]);
    }

    std::vector<ZPoly> lifted;
    lifted.reserve(r);
    for (const auto& f : factors)
        lifted.push_back(from_mod(f));

    Integer pj = static_cast<unsigned long>(F.p);
    for (unsigned j = 1; j < k; ++j) {
        ZPoly prod{lc};
        for (const auto& f : lifted)
            prod = zmul(prod, f);
        ZPoly diff(std::max(g.size(), prod.size()), Integer(0));
        for (std::size_t i = 0; i < diff.size(); ++i)
            diff[i] = (i < g.size() ? g[i] : Integer(0)) - (i < prod.size() ? prod[i] : Integer(0));
        trim(diff);
        for (auto& c : diff)
            c /= pj; // exact
        ModPoly e = F.scale(reduce_mod(diff, F.p), lc_inv);
        for (std::size_t i = 0; i < r; ++i) {
            ModPoly delta = F.rem(F.mul(e, cofactor_inverse[i]), factors[i]);
            ZPoly d = from_mod(delta);
            if (lifted[i].size() < d.size())
                lifted[i].resize(d.size(), Integer(0));
            for (std::size_t c = 0; c < d.size(); ++c)
                lifted[i][c] += pj * d[c];
        }
        pj *= static_cast<unsigned long>(F.p);
    }
    return lifted;
}

// Exact quotient a / b over Z if it exists.
bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient)
{
    auto [q, r] = divmod(from_integers(a), from_integers(b));
    if (!r.is_zero())
        return false;
    quotient.clear();
    for (const auto& c : q.coeffs()) {
        if (c.get_den() != 1)
            return false;
        quotient.push_back(c.get_num());
    }
    return true;
}

// Irreducible factors of a primitive squarefree integer polynomial with
// positive leading coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& g)
{
    const std::size_t n = g.size() - 1;
    if (n <= 1)
        return {g};

    const ZPoly dg = [&] {
        ZPoly d(n);
        for (std::size_t i = 1; i <= n; ++i)
            d[i - 1] = g[i] * static_cast<unsigned long>(i);
        return d;
    }();

    // Pick the admissible prime (among the first few) with fewest factors.
    u64 best_p = 0;
    std::vector<ModPoly> best;
    int admissible = 0;
    for (u64 p = 3; admissible < 6 && p < (1U << 20); p += 2) {
        if (!is_probable_prime(p))
            continue;
        const Fp F{p};
        ModPoly gp = reduce_mod(g, p);
        if (gp.size() != g.size())
            continue;
        if (F.gcd(gp, reduce_mod(dg, p)).size() > 1)
            continue;
        ++admissible;
        auto fs = factor_mod_p(F, F.monic(gp));
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best = std::move(fs);
        }
        if (best.size() == 1)
            break;
    }
    if (best.size() <= 1)
        return {g};

    // Mignotte: any factor has coefficients bounded by 2^n * ||g||_2.
    Integer norm2_sq = 0;
    for (const auto& c : g)
        norm2_sq += c * c;
    Integer norm2;
    mpz_sqrt(norm2.get_mpz_t(), norm2_sq.get_mpz_t());
    norm2 += 1;
    Integer bound = norm2;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    bound *= abs(g.back());
    bound = 2 * bound + 1;

    unsigned k = 1;
    Integer modulus = static_cast<unsigned long>(best_p);
    while (modulus <= bound) {
        modulus *= static_cast<unsigned long>(best_p);
        ++k;
    }

    const Fp F{best_p};
    std::vector<ZPoly> lifted = hensel_lift(g, best, F, k);

    // Zassenhaus recombination over subsets of increasing size.
    std::vector<ZPoly> result;
    ZPoly rest = g;
    std::vector<ZPoly> pool = lifted;
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            ZPoly cand{rest.back()};
            for (auto i : idx)
                cand = zmod(zmul(cand, pool[i]), modulus);
            cand = primitive(symmetric(cand, modulus));
            ZPoly quotient;
            if (cand.size() > 1 && exact_divide(rest, cand, quotient)) {
                result.push_back(cand);
                rest = primitive(quotient);
                std::vector<ZPoly> remaining;
                for (std::size_t i = 0, w = 0; i < pool.size(); ++i) {
                    if (w < idx.size() && idx[w] == i) {
                        ++w;
                        continue;
                    }
                    remaining.push_back(pool[i]);
                }
                pool = std::move(remaining);
                found = true;
                break;
            }
            // next combination
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == pool.size() - size + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < size; ++i)
                idx[i] = idx[i - 1] + 1;
        }
        if (!found)
            ++size;
    }
    if (rest.size() > 1)
        result.push_back(rest);
    return result;
}

} // namespace

std::vector<Integer> primitive_integer_part(const QPoly& p)
{
    Integer den = 1;
    for (const auto& c : p.coeffs())
        den = lcm(den, Integer(c.get_den()));
    ZPoly z;
    for (const auto& c : p.coeffs())
        z.push_back(c.get_num() * (den / c.get_den()));
    return primitive(z);
}

QPoly from_integers(const std::vector<Integer>& coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs)
        v.emplace_back(c);
    return QPoly(std::move(v));
}

std::vector<Factor> factor_over_rationals(const QPoly& p)
{
    if (p.is_zero())
        throw InvalidArgument("factor_over_rationals: zero polynomial");
    std::vector<Factor> out;
    for (const auto& [g, mult] : squarefree_decomposition(p)) {
        for (const auto& z : factor_squarefree(primitive_integer_part(g)))
            out.push_back({monic(from_integers(z)), mult});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        const int c = canonical_compare(a.factor, b.factor);
        return c != 0 ? c < 0 : a.multiplicity < b.multiplicity;
    });
    return out;
}

bool is_irreducible(const QPoly& p)
{
    if (p.degree() < 1)
        return false;
    auto fs = factor_over_rationals(p);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

QPoly expand(const std::vector<Factor>& factors, const Rational& constant)
{
    QPoly acc(constant);
    for (const auto& f : factors)
        acc = acc * pow(f.factor, static_cast<unsigned>(f.multiplicity));
    return acc;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    QPoly acc(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;)
        acc = acc * QPoly(std::vector<Rational>{-xs[i], Rational(1)}) + QPoly(dd[i]);
    return acc;
}

} // namespace brauer2
