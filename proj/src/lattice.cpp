#include "seqlat/lattice.hpp"

namespace seqlat {

bool in_domain(LatticeDomain domain, long x, long y) {
    if (x < 0 || y < 0) return false;
    if (domain == LatticeDomain::LowerTriangle) return y <= x;
    return true;
}

bool diagonal_step_allowed(const LatticeRule& rule, long from_x, long from_y) {
    switch (rule.diagonal) {
        case DiagonalPolicy::Never:
            return false;
        case DiagonalPolicy::StrictlyAbove:
            return from_y > from_x;
        case DiagonalPolicy::AboveOrOn:
            return from_y >= from_x;
        case DiagonalPolicy::EverywhereInDomain:
            return in_domain(rule.domain, from_x + 1, from_y + 1);
    }
    return false;
}

GridCounts grid_counts(const LatticeRule& rule, std::size_t max_x, std::size_t max_y) {
    GridCounts g(max_x + 1, max_y + 1);
    for (std::size_t x = 0; x <= max_x; ++x) {
        for (std::size_t y = 0; y <= max_y; ++y) {
            const long lx = static_cast<long>(x), ly = static_cast<long>(y);
            if (!in_domain(rule.domain, lx, ly)) continue;
            if (x == 0 && y == 0) {
                g.cell(0, 0) = 1;
                continue;
            }
            Int& c = g.cell(x, y);
            if (x > 0 && in_domain(rule.domain, lx - 1, ly)) c += g.at(lx - 1, ly);
            if (y > 0 && in_domain(rule.domain, lx, ly - 1)) c += g.at(lx, ly - 1);
            // Under the avoid-diagonal filter a D step leaving the diagonal
            // would travel along y = x, so it is excluded as well.
            const bool d_runs_on_diagonal =
                rule.filter == RegionFilter::AvoidDiagonalInterior && lx - 1 == ly - 1;
            if (x > 0 && y > 0 && !d_runs_on_diagonal &&
                in_domain(rule.domain, lx - 1, ly - 1) &&
                diagonal_step_allowed(rule, lx - 1, ly - 1))
                c += g.at(lx - 1, ly - 1);
            if (rule.filter == RegionFilter::AvoidDiagonalInterior && x == y &&
                !(x == max_x && y == max_y))
                c = 0;  // interior diagonal state, forbidden
        }
    }
    return g;
}

Int count(const LatticeRule& rule, long x, long y) {
    if (!in_domain(rule.domain, x, y)) return Int(0);
    return grid_counts(rule, static_cast<std::size_t>(x), static_cast<std::size_t>(y)).at(x, y);
}

Int count_avoiding_diagonal(const LatticeRule& rule, long n, long k) {
    if (rule.domain != LatticeDomain::LowerTriangle)
        throw DomainError("count_avoiding_diagonal requires a lower-triangle lattice");
    if (k < 0 || n < k) throw DomainError("count_avoiding_diagonal requires n >= k >= 0");
    LatticeRule restricted = rule;
    restricted.filter = RegionFilter::AvoidDiagonalInterior;
    return grid_counts(restricted, static_cast<std::size_t>(n), static_cast<std::size_t>(k)).at(n, k);
}

} // namespace seqlat
