#pragma once

#include "brauer2/etale.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace brauer2 {

/// Element g + h*y of k(C), with g, h in K(x) stored as num/den pairs of
/// polynomials in x over K.
class CurveFunction {
public:
    CurveFunction(const RationalFunction& c); // NOLINT(google-explicit-constructor)
    explicit CurveFunction(KPoly num, KPoly den = KPoly(RationalFunction(1)));
    CurveFunction(KPoly num, KPoly den, KPoly y_num, KPoly y_den);

    const KPoly& num() const { return num_; }
    const KPoly& den() const { return den_; }
    bool involves_y() const { return !y_num_.is_zero(); }
    bool in_K() const { return !involves_y() && num_.degree() <= 0 && den_.degree() <= 0; }
    bool is_zero() const { return num_.is_zero() && y_num_.is_zero(); }
    /// The value when in_K().
    RationalFunction constant() const;

    std::string to_string() const;

private:
    KPoly num_, den_, y_num_, y_den_;
};

/// The quaternion symbol (a, b)_2 over K or over k(C).
class QuaternionSymbol {
public:
    enum class Ambient { K, curve };

    QuaternionSymbol(RationalFunction a, RationalFunction b);
    QuaternionSymbol(CurveFunction a, CurveFunction b);

    Ambient ambient() const { return ambient_; }
    const CurveFunction& a() const { return a_; }
    const CurveFunction& b() const { return b_; }
    std::string to_string() const;

private:
    CurveFunction a_, b_;
    Ambient ambient_;
};

using SymbolSum = std::vector<QuaternionSymbol>;

std::string to_string(const SymbolSum& s);

/// Class of (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)} in kappa(v)^x / kappa(v)^x2.
SquareClass tame_residue(const QuaternionSymbol& s, const PlaceK& v, Mode mode);

/// Places of K where (a, b) over K can have a nontrivial residue.
std::vector<PlaceK> residue_support(const QuaternionSymbol& s);

/// Product over all places of the residue norms down to Q; the identity
/// class is Weil reciprocity.
SquareClass reciprocity_product(const QuaternionSymbol& s, Mode mode);

/// sum_i (d_i, x - alpha_i), dropping d_i = 1; the element is converted to
/// Split form (NotSplit if f does not split).
SymbolSum split_h_expansion(const EtaleElement& e, const EtaleAlgebra& L);
SymbolSum split_h_expansion(const KernelClass& c, const EtaleAlgebra& L);

struct ResidueEntry {
    std::string place;
    SquareClass residue;
    std::string note;
};

struct ResidueCertificate {
    std::vector<ResidueEntry> entries;
    bool unramified = true; // unramified at every checked place
    std::vector<std::string> ramified_at() const;
};

/// The Br C audit: x - alpha has even valuation along every horizontal
/// place (f'(alpha) invertible in L) and the residue at the points at
/// infinity, the class of norm(ell)^{-1}, is trivial.
ResidueCertificate verify_in_Br_C(const KernelClass& c, const EtaleAlgebra& L);

/// The fiber X_{t0}: y^2 = f(x, t0) over kappa(t0).
FiberFieldPtr fiber_at(const EtaleAlgebra& L, const PlaceK& t0);

/// Class of prod_j g_j^{v_j mod 2} over the points above t0, t0 not in S.
SquareClass vertical_residue_of_h(const EtaleElement& e, const EtaleAlgebra& L,
                                  const BadPlaceSet& S, const PlaceK& t0, Mode mode);
SquareClass vertical_residue_of_h(const KernelClass& c, const EtaleAlgebra& L,
                                  const BadPlaceSet& S, const PlaceK& t0);

/// Residue of a y-free symbol sum along the fibers over the given places.
/// Valuations on K(x) are Gauss valuations at t0.
ResidueCertificate residue_profile(const SymbolSum& s, const std::vector<PlaceK>& places,
                                   const EtaleAlgebra& L, Mode mode);

/// h(ell) with lazily computed vertical residues (write-once cache).
class CorClass {
public:
    CorClass(KernelClass ell, EtaleAlgebraPtr L, BadPlaceSet S)
        : ell_(std::move(ell)), L_(std::move(L)), S_(std::move(S))
    {
    }
    CorClass(const CorClass&) = delete;
    CorClass& operator=(const CorClass&) = delete;

    const KernelClass& ell() const { return ell_; }
    SquareClass vertical_residue(const PlaceK& t0) const;

    /// Residues at the given places, as a certificate.
    ResidueCertificate profile(const std::vector<PlaceK>& places) const;

private:
    KernelClass ell_;
    EtaleAlgebraPtr L_;
    BadPlaceSet S_;
    mutable std::mutex mutex_;
    mutable std::map<PlaceK, SquareClass> cache_;
};

enum class Verdict { pass, fail, error };
const char* to_string(Verdict v);

struct FilterRow {
    std::string candidate;
    Verdict verdict = Verdict::error;
    std::optional<PlaceK> place;           // FAIL: the good place
    std::optional<SquareClass> residue;    // FAIL: vertical residue there
    std::vector<PointValuation> valuations; // FAIL: valuations above place
    bool reverified = false;               // FAIL: residue confirmed non-square
    std::optional<ErrorKind> error_kind;
    std::string message;
};

/// Splits candidates into PASS (S-unramified: the necessary condition for
/// h(ell) in Br X holds) and FAIL (with a re-verified vertical residue).
/// Per-candidate errors are reported as ERROR rows; the batch continues.
/// Rows keep the input order for any thread count.
std::vector<FilterRow> br_X_filter(const std::vector<EtaleElement>& candidates,
                                   const EtaleAlgebra& L, const BadPlaceSet& S, Mode mode,
                                   unsigned threads = 1);

} // namespace brauer2
