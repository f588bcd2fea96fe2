#pragma once

#include "seqlat/series.hpp"

namespace seqlat {

/// The two full-quadrant lattices: CS allows diagonal steps on the line
/// y = x, CS_STAR does not.
enum class LatticeVariant { CS, CS_STAR };

enum class PathFamily { Catalan, Schroeder };

/// Catalan numbers C_0..C_N via the quadratic recurrence
/// C_{n+1} = sum_{i<=n} C_i * C_{n-i}.
TruncatedSeries catalan_series(std::size_t order);

/// Large Schroeder numbers via S_{n+1} = S_n + sum_{i<=n} S_i * S_{n-i}.
TruncatedSeries schroeder_series(std::size_t order);

/// Diagonal path counts of the CS_STAR lattice: 1 / (1 - x*(C+S)).
TruncatedSeries f_star_series(std::size_t order);

/// Diagonal path counts of the CS lattice, computed by both algebraic
/// forms 1/(1 - x*(C+S+1)) and S/(1 - x*C*S); they must agree.
TruncatedSeries f_series(std::size_t order);

/// The four kernel series at a common order, built once and shared by all
/// downstream sequence computations. Immutable after construction.
class KernelSet {
public:
    explicit KernelSet(std::size_t order);

    std::size_t order() const { return catalan_.order(); }
    const TruncatedSeries& catalan() const { return catalan_; }
    const TruncatedSeries& schroeder() const { return schroeder_; }
    const TruncatedSeries& f() const { return f_; }
    const TruncatedSeries& f_star() const { return f_star_; }

    const TruncatedSeries& diagonal(LatticeVariant v) const {
        return v == LatticeVariant::CS ? f_ : f_star_;
    }

private:
    TruncatedSeries catalan_, schroeder_, f_, f_star_;
};

/// Exact number of paths (0,0) -> (x,y) in the chosen lattice:
/// [t^y] F*C^(x-y) for x >= y, [t^x] F*S^(y-x) for x <= y (F* for CS_STAR).
/// Requires kernels.order() >= min(x, y).
Int point_count(LatticeVariant variant, long x, long y, const KernelSet& kernels);

/// Paths (0,0) -> (n,k) in the triangular Catalan lattice: [x^k] C^(n-k+1).
Int catalan_lattice_count(long n, long k, const KernelSet& kernels);

/// Paths (0,0) -> (n,k) in the triangular Schroeder lattice: [x^k] S^(n-k+1).
Int schroeder_lattice_count(long n, long k, const KernelSet& kernels);

/// Paths (0,0) -> (n,k) touching y = x only at their endpoints:
/// [x^(n-1)] of C or S when n == k, [x^k] of C^(n-k) or S^(n-k) when n > k.
Int subdiagonal_count(PathFamily family, long n, long k, const KernelSet& kernels);

} // namespace seqlat
