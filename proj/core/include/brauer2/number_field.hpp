#pragma once

#include "brauer2/factor.hpp"
#include "brauer2/poly.hpp"
#include "brauer2/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brauer2 {

/// A simple algebraic extension F[g]/(modulus) of a base field F, with the
/// modulus monic and irreducible over F (not re-verified here).
template <class T>
struct ExtensionField {
    Poly<T> modulus;
    std::string generator;

    int degree() const { return modulus.degree(); }
};

/// Element of an ExtensionField. An element without a field pointer is a
/// constant of the base field; this makes the default value a usable zero
/// for generic code.
template <class T>
class ExtElem {
public:
    using Field = ExtensionField<T>;
    using FieldPtr = std::shared_ptr<const Field>;

    ExtElem() = default;
    ExtElem(int c) : rep_(T(c)) {} // NOLINT(google-explicit-constructor)
    explicit ExtElem(T c) : rep_(std::move(c)) {}
    ExtElem(FieldPtr field, Poly<T> rep) : field_(std::move(field)), rep_(std::move(rep))
    {
        reduce();
    }

    static ExtElem generator(const FieldPtr& field)
    {
        return ExtElem(field, Poly<T>::variable());
    }

    const FieldPtr& field() const { return field_; }
    const Poly<T>& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_base() const { return rep_.degree() <= 0; }
    T base_value() const { return rep_.coeff(0); }

    ExtElem with_field(const FieldPtr& field) const { return ExtElem(field, rep_); }

    ExtElem operator-() const { return ExtElem(field_, -rep_, no_reduce{}); }
    friend ExtElem operator+(const ExtElem& a, const ExtElem& b)
    {
        return ExtElem(pick(a, b), a.rep_ + b.rep_, no_reduce{});
    }
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b)
    {
        return ExtElem(pick(a, b), a.rep_ - b.rep_, no_reduce{});
    }
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b)
    {
        if (a.is_base() || b.is_base())
            return ExtElem(pick(a, b), a.rep_ * b.rep_, no_reduce{});
        return ExtElem(pick(a, b), a.rep_ * b.rep_);
    }
    friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }
    ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
    ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
    ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }

    ExtElem inverse() const
    {
        if (rep_.is_zero())
            throw InvalidArgument("inverse of zero in an algebraic extension");
        if (is_base())
            return ExtElem(field_, Poly<T>(T(1) / rep_.leading()), no_reduce{});
        auto r = xgcd(rep_, field_->modulus);
        if (r.g.degree() != 0)
            throw ZeroDivisor("element is a zero divisor: the modulus is reducible");
        return ExtElem(field_, r.s);
    }

    friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

private:
    struct no_reduce {};
    ExtElem(FieldPtr field, Poly<T> rep, no_reduce) : field_(std::move(field)), rep_(std::move(rep)) {}

    static const FieldPtr& pick(const ExtElem& a, const ExtElem& b)
    {
        return a.field_ ? a.field_ : b.field_;
    }
    void reduce()
    {
        if (field_ && rep_.degree() >= field_->degree())
            rep_ = rep_ % field_->modulus;
    }

    FieldPtr field_;
    Poly<T> rep_;
};

template <class T>
std::string to_string(const ExtElem<T>& e)
{
    const std::string g = e.field() ? e.field()->generator : std::string("g");
    return to_string(e.rep(), g);
}

template <class T>
bool is_atomic(const ExtElem<T>& e)
{
    return is_atomic(e.rep());
}

template <class T>
int canonical_compare(const ExtElem<T>& a, const ExtElem<T>& b)
{
    return canonical_compare(a.rep(), b.rep());
}

using NumberField = ExtensionField<Rational>;
using NumberFieldPtr = std::shared_ptr<const NumberField>;
using NfElem = ExtElem<Rational>;
using NfPoly = Poly<NfElem>;

/// Number field Q[u]/(modulus); modulus is made monic. Irreducibility is
/// checked when `check` is set.
NumberFieldPtr make_number_field(const QPoly& modulus, const std::string& generator = "u",
                                 bool check = true);

/// Embeds a rational polynomial coefficient-wise.
NfPoly to_nf_poly(const QPoly& p, const NumberFieldPtr& field);

/// Norm to Q of a number field element (resultant against the modulus).
Rational norm(const NfElem& e, const NumberFieldPtr& field);

/// Norm to Q[x] of a polynomial over a number field: prod over conjugates.
QPoly norm(const NfPoly& p, const NumberFieldPtr& field);

/// Factorization of a nonzero polynomial over a number field into monic
/// irreducibles with multiplicities (Trager's norm method). Sorted
/// canonically. Degree-1 fields are handled through rational factoring.
std::vector<std::pair<NfPoly, int>> factor_over_number_field(const NfPoly& p,
                                                             const NumberFieldPtr& field);

struct SquareTest {
    bool is_square;
    std::optional<NfElem> witness; // w with w^2 = e when is_square
};

/// Whether e is a square in the field, decided by factoring z^2 - e.
SquareTest is_square_in_number_field(const NfElem& e, const NumberFieldPtr& field);

} // namespace brauer2
