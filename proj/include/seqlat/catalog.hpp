#pragma once

#include "seqlat/kernels.hpp"

#include <functional>
#include <string>
#include <vector>

namespace seqlat {

enum class SequenceKind { Linear, Triangle };

/// Binds an OEIS id to its generating-function recipe, its lattice, and the
/// index of its first OEIS term. For linear sequences the recipe produces a
/// series whose coefficients from lead_offset on are the terms; triangles
/// are evaluated pointwise instead.
struct SequenceDescriptor {
    std::string id;
    LatticeVariant lattice;
    SequenceKind kind;
    long lead_offset;
    std::string description;
    // Linear only: the series whose coefficients carry the terms.
    std::function<TruncatedSeries(const KernelSet&)> recipe;
    // Independent evaluation by lattice DP, bypassing the series layer.
    std::function<std::vector<Int>(std::size_t count)> dp_terms;
};

/// Registry lookup; throws UnknownSequence for anything outside the
/// 22 ids A026769..A026790 plus the A000108 / A006318 baselines.
const SequenceDescriptor& descriptor(const std::string& id);

/// All registered ids in ascending order.
std::vector<std::string> all_ids();

/// First `count` terms starting at lead_offset, computed from the
/// generating-function recipe. Triangles are linearized row by row.
std::vector<Int> terms(const std::string& id, std::size_t count);

/// Same terms computed by the DP oracle instead of the recipe.
std::vector<Int> oracle_terms(const std::string& id, std::size_t count);

/// Row n of a triangle sequence: point counts at (k, n-k) for k = 0..n.
/// Throws WrongKind for linear ids.
std::vector<Int> triangle_row(const std::string& id, std::size_t n);

} // namespace seqlat
