#pragma once

#include "brauer2/number_field.hpp"
#include "brauer2/power_series.hpp"
#include "brauer2/rational_function.hpp"

#include <memory>
#include <string>
#include <vector>

namespace brauer2 {

inline constexpr int kDefaultPrecisionCap = 512;
inline constexpr int kInitialPrecision = 8;

/// A place of K = Q(t): a monic irreducible pi(t), or the place at infinity.
/// The residue field kappa(v) = Q[u]/(pi) is built once per place; at
/// infinity it is Q, presented as Q[u]/(u).
class PlaceK {
public:
    static PlaceK infinity();
    /// pi is made monic and must be irreducible over Q.
    static PlaceK finite(const QPoly& pi);
    /// The degree-1 place t - c.
    static PlaceK at(const Rational& c);

    bool is_infinity() const { return infinite_; }
    const QPoly& poly() const;
    int degree() const { return infinite_ ? 1 : pi_.degree(); }
    const NumberFieldPtr& residue_field() const { return kappa_; }

    /// pi, or 1/t at infinity.
    RationalFunction uniformizer() const;

    /// "(t - 2)", "(t^2 + 1)", "(t)" or "inf".
    std::string to_string() const;

    friend bool operator==(const PlaceK& a, const PlaceK& b)
    {
        return a.infinite_ == b.infinite_ && a.pi_ == b.pi_;
    }
    friend bool operator!=(const PlaceK& a, const PlaceK& b) { return !(a == b); }
    /// Finite places canonically (degree, coefficients), infinity last.
    friend bool operator<(const PlaceK& a, const PlaceK& b);

private:
    PlaceK(bool infinite, QPoly pi, NumberFieldPtr kappa)
        : infinite_(infinite), pi_(std::move(pi)), kappa_(std::move(kappa))
    {
    }

    bool infinite_ = false;
    QPoly pi_;
    NumberFieldPtr kappa_;
};

int valuation_at(const QPoly& p, const PlaceK& v);
int valuation_at(const RationalFunction& r, const PlaceK& v);

/// Residue in kappa(v) of an element of valuation 0.
NfElem reduce_at(const RationalFunction& r, const PlaceK& v);

/// Residue of r * uniformizer^{-v(r)}.
NfElem leading_residue(const RationalFunction& r, const PlaceK& v);

/// Finite places at the zeros of a nonzero polynomial, sorted.
std::vector<PlaceK> zeros_of(const QPoly& p);

/// The finite set S of places excluded from the unramifiedness test. Always
/// contains infinity; kept sorted.
class BadPlaceSet {
public:
    BadPlaceSet();

    void add(const PlaceK& v);
    bool contains(const PlaceK& v) const;
    const std::vector<PlaceK>& places() const { return places_; }
    std::vector<PlaceK> finite_places() const;
    std::size_t size() const { return places_.size(); }

    friend bool operator==(const BadPlaceSet& a, const BadPlaceSet& b)
    {
        return a.places_ == b.places_;
    }

private:
    std::vector<PlaceK> places_;
};

/// Throws DegenerateModel unless deg_x f = 4 and disc_x f != 0.
void validate_model(const KPoly& f);

/// Zeros of disc_x(f) and lc_x(f), poles of the coefficients, and infinity.
BadPlaceSet compute_bad_places(const KPoly& f);

/// Reduction of f at a finite place where its coefficients are integral.
NfPoly reduce_poly_at(const KPoly& f, const PlaceK& v);

using RelElem = ExtElem<NfElem>;
using RelField = ExtensionField<NfElem>;
using RelFieldPtr = std::shared_ptr<const RelField>;
using RelSeries = PowerSeries<RelElem>;

/// Data shared by all points over one good place: f expanded in the local
/// parameter s = t - u (u the generator of kappa), and its reduction.
struct LocalModel {
    KPoly f;
    PlaceK place;
    QPoly denominator;           // common denominator D of f's coefficients
    std::vector<NfPoly> shifted; // (D f)_i (u + s) as polynomials in s
    NfPoly reduction;            // f mod place
    int cap = kDefaultPrecisionCap;
};
using LocalModelPtr = std::shared_ptr<const LocalModel>;

/// Builds the local model; throws BadReduction if f mod t0 drops degree or
/// is inseparable, or if t0 is infinity.
LocalModelPtr local_model(const KPoly& f, const PlaceK& t0, int cap = kDefaultPrecisionCap);

/// A point of Z above a good place: a root of f in kappa(t0)[x]/(g)[[s]].
class LocalPoint {
public:
    LocalPoint(LocalModelPtr model, NfPoly residue_factor, RelFieldPtr point_field, RelSeries root)
        : model_(std::move(model)), factor_(std::move(residue_factor)),
          field_(std::move(point_field)), root_(std::move(root))
    {
    }

    const PlaceK& place() const { return model_->place; }
    const LocalModelPtr& model() const { return model_; }
    const NfPoly& residue_factor() const { return factor_; }
    const RelFieldPtr& point_field() const { return field_; }
    const RelSeries& root() const { return root_; }
    int precision() const { return root_.precision(); }
    /// [kappa(P) : Q] = deg(pi) * deg(g).
    int residue_degree() const { return place().degree() * factor_.degree(); }

    /// Same point, lifted to at least the given precision.
    LocalPoint lifted_to(int precision) const;

private:
    LocalModelPtr model_;
    NfPoly factor_;
    RelFieldPtr field_;
    RelSeries root_;
};

/// The complete fiber Z_{t0}, sorted by residue factor.
std::vector<LocalPoint> local_splitting(const KPoly& f, const PlaceK& t0,
                                        int precision = kInitialPrecision,
                                        int cap = kDefaultPrecisionCap);
/// As above; rejects t0 in S with BadReduction.
std::vector<LocalPoint> local_splitting(const KPoly& f, const PlaceK& t0, const BadPlaceSet& S,
                                        int precision = kInitialPrecision,
                                        int cap = kDefaultPrecisionCap);

/// Order in s of ell(x(s)) for ell = sum c_i alpha^i given as a polynomial
/// in x over K. Re-lifts adaptively up to the model's cap.
int valuation_of_ell_at_point(const KPoly& ell, const LocalPoint& P);

/// Maps a polynomial over Q in t to its expansion in s = t - u over kappa.
NfPoly taylor_shift(const QPoly& p, const NumberFieldPtr& kappa);

} // namespace brauer2
