#pragma once

#include "seqlat/bigint.hpp"
#include "seqlat/errors.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace seqlat {

/// A formal power series truncated at a fixed order N: exactly the
/// coefficients of x^0 .. x^N, all exact integers. Values are immutable;
/// every operation returns a new series. Binary operations truncate to the
/// minimum order of their inputs.
class TruncatedSeries {
public:
    // Pads with zeros when coeffs is shorter than order+1, truncates when longer.
    TruncatedSeries(std::vector<Int> coeffs, std::size_t order);

    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries one(std::size_t order);
    /// The monomial x, at the given order (order >= 1).
    static TruncatedSeries x(std::size_t order);
    /// 1 - x, the geometric-series denominator.
    static TruncatedSeries one_minus_x(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }

    /// [x^n] operator. Throws OrderExceeded for n > order().
    const Int& coeff(std::size_t n) const;

    std::span<const Int> coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Int> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at min(a.order, b.order).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse at s.order; requires |constant term| == 1.
/// Throws NonUnitConstantTerm otherwise.
TruncatedSeries reciprocal(const TruncatedSeries& s);

/// m-fold product by binary exponentiation; pow(s, 0) == one.
TruncatedSeries pow(const TruncatedSeries& s, unsigned long m);

/// outer(inner(x)); inner must have constant term 0.
/// Throws InnerConstantTermNonzero otherwise.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// s(x^m) truncated at `order`; throws InsufficientSourceOrder when
/// m * s.order < order.
TruncatedSeries substitute_power(const TruncatedSeries& s, unsigned long m,
                                 std::size_t order);

/// Multiply by x^j; the order grows by j.
TruncatedSeries shift(const TruncatedSeries& s, std::size_t j);

/// Coefficient n of the result is the sum of s.coeffs[0..n]; equivalent to
/// multiplying by 1/(1-x).
TruncatedSeries partial_sum(const TruncatedSeries& s);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

} // namespace seqlat
