#pragma once

#include "brauer2/errors.hpp"
#include "brauer2/poly.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace brauer2 {

/// Truncated Laurent series s^offset * (c_0 + c_1 s + ...) known modulo
/// s^precision, precision = offset + number of stored coefficients.
///
/// A series whose known coefficients all vanish has no determined order;
/// order() returns nullopt rather than pretending the order is the offset.
template <class T>
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<T> coeffs, int offset = 0)
        : offset_(offset), coeffs_(std::move(coeffs))
    {
    }

    static PowerSeries from_poly(const Poly<T>& p, int precision)
    {
        std::vector<T> v(static_cast<std::size_t>(std::max(precision, 0)));
        for (std::size_t i = 0; i < v.size() && i < p.coeffs().size(); ++i)
            v[i] = p.coeffs()[i];
        return PowerSeries(std::move(v), 0);
    }

    int offset() const { return offset_; }
    int precision() const { return offset_ + static_cast<int>(coeffs_.size()); }

    /// Coefficient of s^k; zero below the offset. k must be below precision().
    T coeff(int k) const
    {
        if (k < offset_)
            return T{};
        if (k >= precision())
            throw PrecisionCap("series coefficient beyond the known precision");
        return coeffs_[static_cast<std::size_t>(k - offset_)];
    }

    std::optional<int> order() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!(coeffs_[i] == T{}))
                return offset_ + static_cast<int>(i);
        return std::nullopt;
    }
    bool is_undetermined() const { return !order().has_value(); }

    PowerSeries truncated(int precision) const
    {
        PowerSeries r = *this;
        const int keep = std::max(precision - offset_, 0);
        if (static_cast<int>(r.coeffs_.size()) > keep)
            r.coeffs_.resize(static_cast<std::size_t>(keep));
        return r;
    }

    /// Pads with zero coefficients (used when the tail is known to vanish
    /// or is about to be corrected, as in Newton iteration).
    PowerSeries padded(int precision) const
    {
        PowerSeries r = *this;
        const int keep = std::max(precision - offset_, 0);
        if (static_cast<int>(r.coeffs_.size()) < keep)
            r.coeffs_.resize(static_cast<std::size_t>(keep));
        return r;
    }

    /// Drops leading zero coefficients into the offset.
    PowerSeries normalized() const
    {
        auto o = order();
        if (!o)
            return *this;
        PowerSeries r;
        r.offset_ = *o;
        r.coeffs_.assign(coeffs_.begin() + (*o - offset_), coeffs_.end());
        return r;
    }

    PowerSeries operator-() const
    {
        PowerSeries r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
    {
        return combine(a, b, false);
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
    {
        return combine(a, b, true);
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
    {
        const int offset = a.offset_ + b.offset_;
        const int precision = std::min(a.precision() + b.offset_, b.precision() + a.offset_);
        const int n = std::max(precision - offset, 0);
        std::vector<T> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n && i < static_cast<int>(a.coeffs_.size()); ++i) {
            const T& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (ai == T{})
                continue;
            for (int j = 0; i + j < n && j < static_cast<int>(b.coeffs_.size()); ++j)
                v[static_cast<std::size_t>(i + j)] =
                    v[static_cast<std::size_t>(i + j)] + ai * b.coeffs_[static_cast<std::size_t>(j)];
        }
        return PowerSeries(std::move(v), offset);
    }

    /// Inverse of a series with determined order; the result has offset
    /// -order and the same relative precision.
    PowerSeries inverse() const
    {
        const PowerSeries u = normalized();
        if (u.is_undetermined())
            throw PrecisionCap("cannot invert a series with undetermined order");
        const std::size_t n = u.coeffs_.size();
        std::vector<T> v(n);
        const T inv0 = T(1) / u.coeffs_[0];
        v[0] = inv0;
        for (std::size_t k = 1; k < n; ++k) {
            T acc{};
            for (std::size_t i = 1; i <= k; ++i)
                acc = acc + u.coeffs_[i] * v[k - i];
            v[k] = -(acc * inv0);
        }
        return PowerSeries(std::move(v), -u.offset_);
    }

private:
    static PowerSeries combine(const PowerSeries& a, const PowerSeries& b, bool subtract)
    {
        const int offset = std::min(a.offset_, b.offset_);
        const int precision = std::min(a.precision(), b.precision());
        std::vector<T> v(static_cast<std::size_t>(std::max(precision - offset, 0)));
        for (int k = offset; k < precision; ++k) {
            T x = a.coeff(k);
            T y = b.coeff(k);
            v[static_cast<std::size_t>(k - offset)] = subtract ? x - y : x + y;
        }
        return PowerSeries(std::move(v), offset);
    }

    int offset_ = 0;
    std::vector<T> coeffs_;
};

/// Evaluates sum_i coeffs[i] * x^i with series coefficients (Horner).
template <class T>
PowerSeries<T> evaluate_series(const std::vector<PowerSeries<T>>& coeffs, const PowerSeries<T>& x)
{
    if (coeffs.empty())
        return PowerSeries<T>(std::vector<T>(static_cast<std::size_t>(x.precision())), 0);
    PowerSeries<T> acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;)
        acc = acc * x + coeffs[i];
    return acc;
}

} // namespace brauer2
