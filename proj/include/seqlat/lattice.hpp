#pragma once

#include "seqlat/bigint.hpp"
#include "seqlat/errors.hpp"

#include <cstddef>
#include <vector>

namespace seqlat {

// Formula-free ground truth: the lattices are described purely by step
// rules and counted by dynamic programming, so a bug in the generating
// function layer cannot be mirrored here.

enum class DiagonalPolicy {
    Never,               // L_C: no (1,1) steps at all
    StrictlyAbove,       // L*_CS: D from (x,y) only when y > x
    AboveOrOn,           // L_CS: D from (x,y) when y >= x
    EverywhereInDomain,  // L_S: D wherever the target stays in the domain
};

enum class LatticeDomain {
    FullQuadrant,
    LowerTriangle,  // y <= x
};

enum class RegionFilter {
    None,
    // Path may touch y = x only at its endpoints.
    AvoidDiagonalInterior,
};

struct LatticeRule {
    DiagonalPolicy diagonal = DiagonalPolicy::Never;
    LatticeDomain domain = LatticeDomain::FullQuadrant;
    RegionFilter filter = RegionFilter::None;

    bool operator==(const LatticeRule&) const = default;
};

constexpr LatticeRule catalan_lattice() {
    return {DiagonalPolicy::Never, LatticeDomain::LowerTriangle};
}
constexpr LatticeRule schroeder_lattice() {
    return {DiagonalPolicy::EverywhereInDomain, LatticeDomain::LowerTriangle};
}
constexpr LatticeRule cs_lattice() {
    return {DiagonalPolicy::AboveOrOn, LatticeDomain::FullQuadrant};
}
constexpr LatticeRule cs_star_lattice() {
    return {DiagonalPolicy::StrictlyAbove, LatticeDomain::FullQuadrant};
}

bool in_domain(LatticeDomain domain, long x, long y);

/// Whether a D step from (from_x, from_y) to (from_x+1, from_y+1) is
/// admissible under the rule. The starting point must lie in the domain.
bool diagonal_step_allowed(const LatticeRule& rule, long from_x, long from_y);

/// DP table of exact path counts from the origin to every point of the
/// rectangle [0, width-1] x [0, height-1].
class GridCounts {
public:
    GridCounts(std::size_t width, std::size_t height)
        : width_(width), height_(height), counts_(width * height) {}

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }

    /// Count at (x, y); zero for points outside the table or the domain.
    const Int& at(long x, long y) const {
        static const Int kZero(0);
        if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= width_ ||
            static_cast<std::size_t>(y) >= height_)
            return kZero;
        return counts_[static_cast<std::size_t>(x) * height_ + static_cast<std::size_t>(y)];
    }

    Int& cell(std::size_t x, std::size_t y) { return counts_[x * height_ + y]; }

private:
    std::size_t width_, height_;
    std::vector<Int> counts_;
};

/// Full DP table up to (max_x, max_y). When the rule carries
/// AvoidDiagonalInterior, diagonal states other than (0,0) and
/// (max_x, max_y) are assigned zero.
GridCounts grid_counts(const LatticeRule& rule, std::size_t max_x, std::size_t max_y);

/// Path count (0,0) -> (x,y); zero outside the domain or for negative
/// coordinates.
Int count(const LatticeRule& rule, long x, long y);

/// Paths (0,0) -> (n,k) touching y = x only at their endpoints; the rule
/// must have a LowerTriangle domain and n >= k >= 0.
Int count_avoiding_diagonal(const LatticeRule& rule, long n, long k);

} // namespace seqlat
