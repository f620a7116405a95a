#pragma once

#include "brauer2/places.hpp"
#include "brauer2/square_class.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace brauer2 {

/// Roots of f in K = Q(t), sorted canonically. Found by lifting the roots
/// of f at a good integer place far enough to pin down a polynomial of
/// bounded degree, then checking it exactly.
std::vector<RationalFunction> roots_in_K(const KPoly& f);

/// Whether f has a root in K (strict) or in Qbar(t) (geometric).
bool has_rational_root(const KPoly& f, Mode mode = Mode::geometric);

/// L = K[alpha]/(f) for a quartic f with nonzero discriminant.
class EtaleAlgebra {
public:
    explicit EtaleAlgebra(KPoly f, int precision_cap = kDefaultPrecisionCap);

    const KPoly& f() const { return f_; }
    const KPoly& monic_f() const { return monic_; }
    int precision_cap() const { return cap_; }

    bool is_split() const { return roots_.size() == 4; }
    /// Roots alpha_1..alpha_4 in canonical order; throws NotSplit.
    const std::vector<RationalFunction>& roots() const;

    /// Cached local_splitting at a good place (thread-safe).
    const std::vector<LocalPoint>& local_points(const PlaceK& t0) const;

private:
    KPoly f_;
    KPoly monic_;
    int cap_;
    std::vector<RationalFunction> roots_;
    mutable std::shared_mutex cache_mutex_;
    mutable std::map<PlaceK, std::vector<LocalPoint>> cache_;
};
using EtaleAlgebraPtr = std::shared_ptr<const EtaleAlgebra>;

/// Element of L: General c0 + c1 A + c2 A^2 + c3 A^3, or Split (d1..d4)
/// relative to the canonical root order.
class EtaleElement {
public:
    enum class Form { general, split };

    EtaleElement() : EtaleElement(general({RationalFunction(1), {}, {}, {}})) {}
    static EtaleElement general(const std::array<RationalFunction, 4>& c);
    static EtaleElement split(const std::array<RationalFunction, 4>& d);
    /// Reduces p modulo f.
    static EtaleElement from_poly(const KPoly& p, const EtaleAlgebra& L);
    static EtaleElement constant(const RationalFunction& m);

    Form form() const { return form_; }
    bool is_split() const { return form_ == Form::split; }
    const std::array<RationalFunction, 4>& values() const { return v_; }
    const RationalFunction& operator[](std::size_t i) const { return v_[i]; }
    /// General form as a polynomial in x (throws for Split).
    KPoly as_poly() const;

    std::string to_string() const;

    friend bool operator==(const EtaleElement& a, const EtaleElement& b)
    {
        return a.form_ == b.form_ && a.v_ == b.v_;
    }
    friend bool operator!=(const EtaleElement& a, const EtaleElement& b) { return !(a == b); }

private:
    EtaleElement(Form form, std::array<RationalFunction, 4> v) : form_(form), v_(std::move(v)) {}

    Form form_;
    std::array<RationalFunction, 4> v_;
};

EtaleElement to_general(const EtaleElement& e, const EtaleAlgebra& L);
/// Throws NotSplit unless L is split.
EtaleElement to_split(const EtaleElement& e, const EtaleAlgebra& L);

EtaleElement multiply(const EtaleElement& a, const EtaleElement& b, const EtaleAlgebra& L);
/// Throws ZeroDivisor for non-invertible elements.
EtaleElement inverse(const EtaleElement& a, const EtaleAlgebra& L);
EtaleElement power(const EtaleElement& a, int n, const EtaleAlgebra& L);
EtaleElement scale(const EtaleElement& a, const RationalFunction& m);

/// Whether some component of e vanishes.
bool is_zero_divisor(const EtaleElement& e, const EtaleAlgebra& L);

/// N_{L/K}(e) = Res_x(f, e) / lc(f)^{deg e}; throws ZeroDivisor if zero.
RationalFunction norm(const EtaleElement& e, const EtaleAlgebra& L);

/// Normalized representative of a class in ker N. The representative is
/// c * ell * m * mu^2 for the input ell, with c = 1 in strict mode and c a
/// constant of L in geometric mode.
class KernelClass {
public:
    KernelClass(EtaleElement rep, Mode mode, RationalFunction scale, EtaleElement root)
        : rep_(std::move(rep)), mode_(mode), scale_(std::move(scale)), root_(std::move(root))
    {
    }

    const EtaleElement& representative() const { return rep_; }
    Mode mode() const { return mode_; }
    const RationalFunction& scale() const { return scale_; }
    const EtaleElement& root() const { return root_; }
    bool is_identity() const;
    std::string to_string() const { return rep_.to_string(); }

    friend bool operator==(const KernelClass& a, const KernelClass& b)
    {
        return a.mode_ == b.mode_ && a.rep_ == b.rep_;
    }

private:
    EtaleElement rep_;
    Mode mode_;
    RationalFunction scale_;
    EtaleElement root_;
};

struct KernelTest {
    bool in_kernel;
    std::optional<KernelClass> kernel_class; // when in_kernel
    std::optional<SquareClass> witness;      // class of the norm otherwise
};

KernelTest in_kernel_of_norm(const EtaleElement& e, const EtaleAlgebra& L, Mode mode);

/// As in_kernel_of_norm, throwing InvalidArgument outside the kernel.
KernelClass make_kernel_class(const EtaleElement& e, const EtaleAlgebra& L, Mode mode);

struct AffinePoint {
    RationalFunction x, y;
};

struct AffineDivisor {
    std::vector<std::pair<AffinePoint, int>> terms;
};

/// Class of prod (x_i - alpha)^{n_i}. Throws InvalidDivisor if a point is
/// off the curve, has y = 0, or the multiplicities have odd sum.
KernelClass x_minus_alpha(const AffineDivisor& D, const EtaleAlgebra& L, Mode mode);

/// Valuations of e at the points of Z over a good place t0, in the order of
/// L.local_points(t0).
std::vector<int> valuations_above(const EtaleElement& e, const EtaleAlgebra& L, const PlaceK& t0);

/// Finite places outside S where some point valuation of e can be nonzero.
std::vector<PlaceK> candidate_places(const EtaleElement& e, const EtaleAlgebra& L,
                                     const BadPlaceSet& S);

struct PointValuation {
    std::string point; // residue factor, or root index for Split form
    int valuation;
};

struct UnramifiedWitness {
    PlaceK place;
    std::vector<PointValuation> valuations;
    std::size_t odd_point;  // index with odd valuation
    std::size_t even_point; // index with even valuation
};

struct UnramifiedTest {
    bool unramified;
    std::optional<UnramifiedWitness> witness;
    std::vector<PlaceK> checked; // candidate places examined
};

UnramifiedTest is_S_unramified(const EtaleElement& e, const EtaleAlgebra& L, const BadPlaceSet& S);
UnramifiedTest is_S_unramified(const KernelClass& c, const EtaleAlgebra& L, const BadPlaceSet& S);

} // namespace brauer2
