#include "seqlat/kernels.hpp"

namespace seqlat {

TruncatedSeries catalan_series(std::size_t order) {
    std::vector<Int> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 0; n + 1 <= order; ++n) {
        Int& next = c[n + 1];
        for (std::size_t i = 0; i <= n; ++i)
            mpz_addmul(next.get_mpz_t(), c[i].get_mpz_t(), c[n - i].get_mpz_t());
    }
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries schroeder_series(std::size_t order) {
    std::vector<Int> s(order + 1);
    s[0] = 1;
    for (std::size_t n = 0; n + 1 <= order; ++n) {
        Int& next = s[n + 1];
        next = s[n];
        for (std::size_t i = 0; i <= n; ++i)
            mpz_addmul(next.get_mpz_t(), s[i].get_mpz_t(), s[n - i].get_mpz_t());
    }
    return TruncatedSeries(std::move(s), order);
}

namespace {

TruncatedSeries f_star_from(const TruncatedSeries& c, const TruncatedSeries& s) {
    const std::size_t n = c.order();
    return reciprocal(TruncatedSeries::one(n) - shift(c + s, 1));
}

TruncatedSeries f_from(const TruncatedSeries& c, const TruncatedSeries& s) {
    const std::size_t n = c.order();
    const auto one = TruncatedSeries::one(n);
    auto via_sum = reciprocal(one - shift(c + s + one, 1));
    auto via_product = s * reciprocal(one - shift(c * s, 1));
    if (via_sum != via_product)
        throw Error("internal inconsistency: the two algebraic forms of F disagree");
    return via_sum;
}

} // namespace

TruncatedSeries f_star_series(std::size_t order) {
    return f_star_from(catalan_series(order), schroeder_series(order));
}

TruncatedSeries f_series(std::size_t order) {
    return f_from(catalan_series(order), schroeder_series(order));
}

KernelSet::KernelSet(std::size_t order)
    : catalan_(catalan_series(order)),
      schroeder_(schroeder_series(order)),
      f_(f_from(catalan_, schroeder_)),
      f_star_(f_star_from(catalan_, schroeder_)) {}

Int point_count(LatticeVariant variant, long x, long y, const KernelSet& kernels) {
    if (x < 0 || y < 0) throw DomainError("point_count requires nonnegative coordinates");
    const long low = std::min(x, y);
    if (static_cast<std::size_t>(low) > kernels.order())
        throw OrderExceeded("point_count: kernel order too small for target point");
    const TruncatedSeries& diag = kernels.diagonal(variant);
    if (x >= y)
        return mul(diag, pow(kernels.catalan(), static_cast<unsigned long>(x - y))).coeff(y);
    return mul(diag, pow(kernels.schroeder(), static_cast<unsigned long>(y - x))).coeff(x);
}

namespace {

Int triangular_count(const TruncatedSeries& kernel, long n, long k) {
    if (k < 0 || n < k) throw DomainError("lattice count requires n >= k >= 0");
    if (static_cast<std::size_t>(k) > kernel.order())
        throw OrderExceeded("lattice count: kernel order too small");
    return pow(kernel, static_cast<unsigned long>(n - k + 1)).coeff(k);
}

} // namespace

Int catalan_lattice_count(long n, long k, const KernelSet& kernels) {
    return triangular_count(kernels.catalan(), n, k);
}

Int schroeder_lattice_count(long n, long k, const KernelSet& kernels) {
    return triangular_count(kernels.schroeder(), n, k);
}

Int subdiagonal_count(PathFamily family, long n, long k, const KernelSet& kernels) {
    if (k < 0 || n < k) throw DomainError("subdiagonal_count requires n >= k >= 0");
    const TruncatedSeries& kernel =
        family == PathFamily::Catalan ? kernels.catalan() : kernels.schroeder();
    if (n == k) {
        if (n == 0) throw DomainError("subdiagonal_count requires n >= 1 on the diagonal");
        return kernel.coeff(static_cast<std::size_t>(n - 1));
    }
    return pow(kernel, static_cast<unsigned long>(n - k)).coeff(k);
}

} // namespace seqlat
