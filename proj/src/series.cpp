#include "seqlat/series.hpp"

#include <algorithm>
#include <utility>

namespace seqlat {

TruncatedSeries::TruncatedSeries(std::vector<Int> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries({}, order);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    return TruncatedSeries({Int(1)}, order);
}

TruncatedSeries TruncatedSeries::x(std::size_t order) {
    return TruncatedSeries({Int(0), Int(1)}, order);
}

TruncatedSeries TruncatedSeries::one_minus_x(std::size_t order) {
    return TruncatedSeries({Int(1), Int(-1)}, order);
}

const Int& TruncatedSeries::coeff(std::size_t n) const {
    if (n >= coeffs_.size())
        throw OrderExceeded("coeff index " + std::to_string(n) +
                            " exceeds series order " + std::to_string(order()));
    return coeffs_[n];
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Int> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeff(k) + b.coeff(k);
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Int> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeff(k) - b.coeff(k);
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Int> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const Int& ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            // c[i+j] += a[i] * b[j], in place
            mpz_addmul(c[i + j].get_mpz_t(), ai.get_mpz_t(), b.coeff(j).get_mpz_t());
        }
    }
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
    const Int& c0 = s.coeff(0);
    if (c0 != 1 && c0 != -1) throw NonUnitConstantTerm();
    const std::size_t n = s.order();
    std::vector<Int> r(n + 1);
    r[0] = c0;  // 1/(+-1) = +-1
    Int acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t i = 1; i <= k; ++i)
            mpz_addmul(acc.get_mpz_t(), s.coeff(i).get_mpz_t(), r[k - i].get_mpz_t());
        r[k] = -c0 * acc;
    }
    return TruncatedSeries(std::move(r), n);
}

TruncatedSeries pow(const TruncatedSeries& s, unsigned long m) {
    TruncatedSeries result = TruncatedSeries::one(s.order());
    TruncatedSeries base = s;
    while (m > 0) {
        if (m & 1) result = mul(result, base);
        m >>= 1;
        if (m > 0) base = mul(base, base);
    }
    return result;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner.coeff(0) != 0) throw InnerConstantTermNonzero();
    const std::size_t n = std::min(outer.order(), inner.order());
    // Horner over truncated products; inner has valuation >= 1, so the
    // truncation at order n is exact for the composite.
    TruncatedSeries acc({outer.coeff(outer.order())}, n);
    for (std::size_t k = outer.order(); k-- > 0;) {
        acc = mul(acc, inner);
        acc = add(acc, TruncatedSeries({outer.coeff(k)}, n));
    }
    return acc;
}

TruncatedSeries substitute_power(const TruncatedSeries& s, unsigned long m,
                                 std::size_t order) {
    if (m == 0 || order / m > s.order()) throw InsufficientSourceOrder();
    std::vector<Int> c(order + 1);
    for (std::size_t k = 0; k * m <= order; ++k) c[k * m] = s.coeff(k);
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries shift(const TruncatedSeries& s, std::size_t j) {
    std::vector<Int> c(s.order() + j + 1);
    for (std::size_t k = 0; k <= s.order(); ++k) c[k + j] = s.coeff(k);
    return TruncatedSeries(std::move(c), s.order() + j);
}

TruncatedSeries partial_sum(const TruncatedSeries& s) {
    std::vector<Int> c(s.order() + 1);
    Int running(0);
    for (std::size_t k = 0; k <= s.order(); ++k) {
        running += s.coeff(k);
        c[k] = running;
    }
    return TruncatedSeries(std::move(c), s.order());
}

} // namespace seqlat
