#include "seqlat/catalog.hpp"

#include "seqlat/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace seqlat {

namespace {

LatticeRule rule_of(LatticeVariant v) {
    return v == LatticeVariant::CS ? cs_lattice() : cs_star_lattice();
}

// 1/(1 - t) for t with valuation >= 1.
TruncatedSeries geometric(const TruncatedSeries& t) {
    return reciprocal(TruncatedSeries::one(t.order()) - t);
}

// The diagonal kernel with x -> x^m, at the kernel order.
TruncatedSeries sub(const TruncatedSeries& s, unsigned long m, std::size_t order) {
    return substitute_power(s, m, order);
}

using Recipe = std::function<TruncatedSeries(const KernelSet&)>;
using DpTerms = std::function<std::vector<Int>(std::size_t)>;

// --- generating-function recipes, parametrized by lattice variant ---

Recipe recipe_diagonal(LatticeVariant v) {
    return [v](const KernelSet& k) { return k.diagonal(v); };
}

// x^j * F * S^p : paths ending at (n-j, n+j) resp. (n-j, n+j-1).
Recipe recipe_shifted(LatticeVariant v, std::size_t j, unsigned long p) {
    return [v, j, p](const KernelSet& k) {
        return shift(k.diagonal(v) * pow(k.schroeder(), p), j);
    };
}

// F(x^2) * (1 + x*S(x^2)) : paths to (floor(n/2), ceil(n/2)).
Recipe recipe_half(LatticeVariant v) {
    return [v](const KernelSet& k) {
        const std::size_t n = k.order();
        auto x_s2 = shift(sub(k.schroeder(), 2, n), 1);
        return sub(k.diagonal(v), 2, n) * (TruncatedSeries::one(n) + x_s2);
    };
}

// F(x^2) * (1/(1 - x*S(x^2)) + 1/(1 - x*C(x^2)) - 1) : antidiagonal totals.
Recipe recipe_antidiagonal(LatticeVariant v) {
    return [v](const KernelSet& k) {
        const std::size_t n = k.order();
        auto blend = geometric(shift(sub(k.schroeder(), 2, n), 1)) +
                     geometric(shift(sub(k.catalan(), 2, n), 1)) -
                     TruncatedSeries::one(n);
        return sub(k.diagonal(v), 2, n) * blend;
    };
}

// F(x^2) / (1 - x*S(x^2)) : the above-diagonal half of the antidiagonal.
Recipe recipe_half_antidiagonal(LatticeVariant v) {
    return [v](const KernelSet& k) {
        const std::size_t n = k.order();
        return sub(k.diagonal(v), 2, n) *
               geometric(shift(sub(k.schroeder(), 2, n), 1));
    };
}

Recipe recipe_prefix_sums(LatticeVariant v) {
    return [inner = recipe_antidiagonal(v)](const KernelSet& k) {
        return partial_sum(inner(k));
    };
}

// F(x^3) * (1/(1 - x*S(x^3)) + 1/(1 - x^2*C(x^3)) - 1) : totals over (i, n-2i).
Recipe recipe_stride3(LatticeVariant v) {
    return [v](const KernelSet& k) {
        const std::size_t n = k.order();
        auto blend = geometric(shift(sub(k.schroeder(), 3, n), 1)) +
                     geometric(shift(sub(k.catalan(), 3, n), 2)) -
                     TruncatedSeries::one(n);
        return sub(k.diagonal(v), 3, n) * blend;
    };
}

// --- DP-oracle evaluations of the same sequences ---

DpTerms dp_diagonal(LatticeRule rule) {
    return [rule](std::size_t count) {
        auto g = grid_counts(rule, count, count);
        std::vector<Int> t;
        for (std::size_t n = 0; n < count; ++n) t.push_back(g.at(n, n));
        return t;
    };
}

// Targets (n - dx, n + dy) for n = first, first+1, ...
DpTerms dp_offset_diagonal(LatticeRule rule, long dx, long dy, long first) {
    return [=](std::size_t count) {
        const std::size_t side = count + static_cast<std::size_t>(first + dy) + 2;
        auto g = grid_counts(rule, side, side);
        std::vector<Int> t;
        for (long n = first; t.size() < count; ++n) t.push_back(g.at(n - dx, n + dy));
        return t;
    };
}

DpTerms dp_half(LatticeRule rule) {
    return [rule](std::size_t count) {
        auto g = grid_counts(rule, count / 2 + 1, count / 2 + 1);
        std::vector<Int> t;
        for (long n = 0; t.size() < count; ++n) t.push_back(g.at(n / 2, (n + 1) / 2));
        return t;
    };
}

DpTerms dp_antidiagonal(LatticeRule rule, bool upper_half_only, bool prefix_sums) {
    return [=](std::size_t count) {
        auto g = grid_counts(rule, count, count);
        std::vector<Int> t;
        Int running(0);
        for (long n = 0; t.size() < count; ++n) {
            Int total(0);
            const long top = upper_half_only ? n / 2 : n;
            for (long i = 0; i <= top; ++i) total += g.at(i, n - i);
            running += total;
            t.push_back(prefix_sums ? running : total);
        }
        return t;
    };
}

DpTerms dp_stride3(LatticeRule rule) {
    return [rule](std::size_t count) {
        auto g = grid_counts(rule, count, count);
        std::vector<Int> t;
        for (long n = 0; t.size() < count; ++n) {
            Int total(0);
            for (long i = 0; 2 * i <= n; ++i) total += g.at(i, n - 2 * i);
            t.push_back(total);
        }
        return t;
    };
}

// Triangle linearized row by row.
DpTerms dp_triangle(LatticeRule rule) {
    return [rule](std::size_t count) {
        std::size_t rows = 1;
        while (rows * (rows + 1) / 2 < count) ++rows;
        auto g = grid_counts(rule, rows, rows);
        std::vector<Int> t;
        for (std::size_t n = 0; t.size() < count; ++n)
            for (std::size_t k = 0; k <= n && t.size() < count; ++k)
                t.push_back(g.at(static_cast<long>(k), static_cast<long>(n - k)));
        return t;
    };
}

std::vector<SequenceDescriptor> build_registry() {
    std::vector<SequenceDescriptor> r;

    r.push_back({"A000108", LatticeVariant::CS_STAR, SequenceKind::Linear, 0,
                 "Catalan numbers (Dyck paths in the triangular lattice)",
                 [](const KernelSet& k) { return k.catalan(); },
                 dp_diagonal(catalan_lattice())});
    r.push_back({"A006318", LatticeVariant::CS_STAR, SequenceKind::Linear, 0,
                 "large Schroeder numbers (Schroeder paths in the triangular lattice)",
                 [](const KernelSet& k) { return k.schroeder(); },
                 dp_diagonal(schroeder_lattice())});

    struct Family {
        LatticeVariant variant;
        int base;  // A-number of the triangle member
    };
    for (const Family fam : {Family{LatticeVariant::CS_STAR, 26769},
                             Family{LatticeVariant::CS, 26780}}) {
        const LatticeVariant v = fam.variant;
        const LatticeRule rule = rule_of(v);
        const char* which = v == LatticeVariant::CS ? "L_CS" : "L*_CS";
        auto id = [&](int delta) {
            return "A0" + std::to_string(fam.base + delta);
        };
        r.push_back({id(0), v, SequenceKind::Triangle, 0,
                     std::string("triangle of path counts to (k, n-k) in ") + which,
                     nullptr, dp_triangle(rule)});
        r.push_back({id(1), v, SequenceKind::Linear, 0,
                     std::string("paths to (n, n) in ") + which,
                     recipe_diagonal(v), dp_diagonal(rule)});
        r.push_back({id(2), v, SequenceKind::Linear, 1,
                     std::string("paths to (n-1, n+1) in ") + which,
                     recipe_shifted(v, 1, 2), dp_offset_diagonal(rule, 1, 1, 1)});
        r.push_back({id(3), v, SequenceKind::Linear, 2,
                     std::string("paths to (n-2, n+2) in ") + which,
                     recipe_shifted(v, 2, 4), dp_offset_diagonal(rule, 2, 2, 2)});
        r.push_back({id(4), v, SequenceKind::Linear, 1,
                     std::string("paths to (n-1, n) in ") + which,
                     recipe_shifted(v, 1, 1), dp_offset_diagonal(rule, 1, 0, 1)});
        r.push_back({id(5), v, SequenceKind::Linear, 2,
                     std::string("paths to (n-2, n+1) in ") + which,
                     recipe_shifted(v, 2, 3), dp_offset_diagonal(rule, 2, 1, 2)});
        r.push_back({id(6), v, SequenceKind::Linear, 0,
                     std::string("paths to (floor(n/2), ceil(n/2)) in ") + which,
                     recipe_half(v), dp_half(rule)});
        r.push_back({id(7), v, SequenceKind::Linear, 0,
                     std::string("antidiagonal path totals in ") + which,
                     recipe_antidiagonal(v), dp_antidiagonal(rule, false, false)});
        r.push_back({id(8), v, SequenceKind::Linear, 0,
                     std::string("above-diagonal half of antidiagonal totals in ") + which,
                     recipe_half_antidiagonal(v), dp_antidiagonal(rule, true, false)});
        r.push_back({id(9), v, SequenceKind::Linear, 0,
                     std::string("prefix sums of antidiagonal totals in ") + which,
                     recipe_prefix_sums(v), dp_antidiagonal(rule, false, true)});
        r.push_back({id(10), v, SequenceKind::Linear, 0,
                     std::string("totals of paths to (i, n-2i) in ") + which,
                     recipe_stride3(v), dp_stride3(rule)});
    }

    std::sort(r.begin(), r.end(),
              [](const SequenceDescriptor& a, const SequenceDescriptor& b) {
                  return a.id < b.id;
              });
    return r;
}

const std::vector<SequenceDescriptor>& registry() {
    static const std::vector<SequenceDescriptor> r = build_registry();
    return r;
}

std::size_t rows_needed(std::size_t count) {
    std::size_t rows = 1;
    while (rows * (rows + 1) / 2 < count) ++rows;
    return rows;
}

} // namespace

const SequenceDescriptor& descriptor(const std::string& id) {
    for (const auto& d : registry())
        if (d.id == id) return d;
    throw UnknownSequence(id);
}

std::vector<std::string> all_ids() {
    std::vector<std::string> ids;
    for (const auto& d : registry()) ids.push_back(d.id);
    return ids;
}

std::vector<Int> terms(const std::string& id, std::size_t count) {
    const auto& d = descriptor(id);
    if (d.kind == SequenceKind::Triangle) {
        const std::size_t rows = rows_needed(count);
        KernelSet kernels(rows + 1);
        std::vector<Int> t;
        for (std::size_t n = 0; t.size() < count; ++n)
            for (std::size_t k = 0; k <= n && t.size() < count; ++k)
                t.push_back(point_count(d.lattice, static_cast<long>(k),
                                        static_cast<long>(n - k), kernels));
        return t;
    }
    // Safe overestimate of the order needed under x -> x^3 substitution and
    // the recipes' leading x^2 shifts.
    const std::size_t order = count + static_cast<std::size_t>(d.lead_offset) + 3;
    KernelSet kernels(order);
    const TruncatedSeries s = d.recipe(kernels);
    std::vector<Int> t;
    for (std::size_t i = 0; i < count; ++i)
        t.push_back(s.coeff(static_cast<std::size_t>(d.lead_offset) + i));
    return t;
}

std::vector<Int> oracle_terms(const std::string& id, std::size_t count) {
    return descriptor(id).dp_terms(count);
}

std::vector<Int> triangle_row(const std::string& id, std::size_t n) {
    const auto& d = descriptor(id);
    if (d.kind != SequenceKind::Triangle)
        throw WrongKind(id + " is not a triangle sequence");
    KernelSet kernels(n + 1);
    std::vector<Int> row;
    for (std::size_t k = 0; k <= n; ++k)
        row.push_back(point_count(d.lattice, static_cast<long>(k),
                                  static_cast<long>(n - k), kernels));
    return row;
}

} // namespace seqlat
