#include "brauer2/rational.hpp"

#include "brauer2/errors.hpp"

namespace brauer2 {

int canonical_compare(const Rational& a, const Rational& b)
{
    const int c = cmp(abs(a), abs(b));
    if (c != 0)
        return c < 0 ? -1 : 1;
    const int d = cmp(a, b);
    return d < 0 ? -1 : (d > 0 ? 1 : 0);
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

// Squarefree part of a positive integer. Trial division removes every prime
// below kTrialBound; a cofactor below kTrialBound^3 has at most two prime
// factors, so it is either a square or squarefree. Larger cofactors are
// kept whole (only reachable with coefficients far beyond desk scale).
constexpr unsigned long kTrialBound = 1UL << 16;

Integer squarefree_positive(Integer n)
{
    Integer result = 1;
    for (unsigned long p = 2; p < kTrialBound; p = (p == 2) ? 3 : p + 2) {
        if (Integer(p) * p > n)
            break;
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e % 2 == 1)
            result *= p;
    }
    if (n > 1 && mpz_perfect_square_p(n.get_mpz_t()) == 0)
        result *= n;
    return result;
}

} // namespace

Integer squarefree_kernel(const Rational& q)
{
    if (sgn(q) == 0)
        throw InvalidArgument("squarefree_kernel of zero");
    Integer n = abs(q.get_num()) * q.get_den();
    Integer s = squarefree_positive(n);
    return sgn(q) < 0 ? Integer(-s) : s;
}

bool is_square(const Rational& q)
{
    if (sgn(q) < 0)
        return false;
    if (sgn(q) == 0)
        return true;
    return mpz_perfect_square_p(q.get_num_mpz_t()) != 0
        && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational exact_sqrt(const Rational& q)
{
    if (!is_square(q))
        throw InvalidArgument("exact_sqrt of a non-square " + q.get_str());
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return Rational(n, d);
}

} // namespace brauer2
