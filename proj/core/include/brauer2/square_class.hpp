#pragma once

#include "brauer2/number_field.hpp"
#include "brauer2/rational_function.hpp"

#include <memory>
#include <optional>
#include <string>

namespace brauer2 {

/// geometric: every nonzero constant counts as a square (constant field
/// treated as algebraically closed). strict: honest arithmetic over Q.
enum class Mode { geometric, strict };

const char* to_string(Mode mode);

/// Function field of a smooth fiber y^2 = f0(x) over a residue field.
struct FiberField {
    NumberFieldPtr residue_field;
    NfPoly f0; // squarefree, degree 4
};
using FiberFieldPtr = std::shared_ptr<const FiberField>;

/// Canonical representative of a class in F^x / F^x2 for F the rationals, a
/// residue number field, K = Q(t), or a fiber function field (elements of
/// kappa(x), which is all the residue computations produce).
///
/// Representatives are squarefree and monic with the constant split off;
/// in geometric mode the constant is dropped. Two classes compare equal iff
/// their normalized representatives agree (for strict number-field
/// constants, iff the ratio is a square).
class SquareClass {
public:
    enum class Ambient { rationals, number_field, function_field, fiber_field };

    static SquareClass of_rational(const Rational& q, Mode mode);
    static SquareClass of_number_field(const NfElem& e, const NumberFieldPtr& field, Mode mode);
    static SquareClass of_function(const RationalFunction& r, Mode mode);
    static SquareClass of_fiber(const NfPoly& g, const FiberFieldPtr& fiber, Mode mode);
    static SquareClass identity_of_fiber(const FiberFieldPtr& fiber, Mode mode);

    Ambient ambient() const { return ambient_; }
    Mode mode() const { return mode_; }

    bool is_identity() const;

    /// Product of classes (multiply representatives, renormalize).
    SquareClass operator*(const SquareClass& other) const;
    friend bool operator==(const SquareClass& a, const SquareClass& b);
    friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }

    const Integer& constant() const { return constant_; }
    const QPoly& poly() const { return poly_; }
    const NfElem& nf_value() const { return nf_value_; }
    const NfPoly& fiber_poly() const { return fiber_poly_; }
    const FiberFieldPtr& fiber() const { return fiber_; }
    const NumberFieldPtr& residue_field() const { return field_; }

    /// Human-readable representative; polynomial representatives are
    /// printed factored ("x*(x - 1)").
    std::string to_string() const;

private:
    SquareClass(Ambient a, Mode m) : ambient_(a), mode_(m) {}
    void normalize_fiber();

    Ambient ambient_;
    Mode mode_;
    Integer constant_ = 1;        // rationals, function_field (strict)
    QPoly poly_{Rational(1)};     // function_field
    NfElem nf_value_{1};          // number_field (strict), fiber constant (strict)
    NfPoly fiber_poly_{NfElem(1)};
    NumberFieldPtr field_;
    FiberFieldPtr fiber_;
};

/// Class of an element of K in the requested mode.
SquareClass square_class(const RationalFunction& r, Mode mode);
/// Class of a nonzero rational.
SquareClass square_class(const Rational& q, Mode mode);

struct KSquareTest {
    bool is_square;
    /// s with s^2 = r (strict) or s^2 = c*r for a constant c (geometric).
    std::optional<RationalFunction> witness;
};

KSquareTest is_square_in_K(const RationalFunction& r, Mode mode);

/// Whether g(x) is a square in kappa(x)[y]/(y^2 - f0).
bool is_square_in_fiber_field(const NfPoly& g, const FiberFieldPtr& fiber, Mode mode);

/// Factored rendering of a polynomial over a residue field ("x*(x - 1)").
std::string factored_string(const NfPoly& p, const NumberFieldPtr& field, const std::string& var);
std::string factored_string(const QPoly& p, const std::string& var);

} // namespace brauer2
