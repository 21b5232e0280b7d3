#pragma once

// Conversions between public polynomial/vector types and engine vectors.

#include "engine.hpp"
#include "kmu/module.hpp"
#include "kmu/polynomial.hpp"

namespace kmu::detail {

Vec to_vec(const Polynomial& p, const ModuleOrder& ord, std::uint32_t comp);
Vec to_vec(const ModuleVector& v, const ModuleOrder& ord, std::uint32_t offset);
Vec unit_vec(const ModuleOrder& ord, std::uint32_t comp);
/// Entries for components [lo, hi) of v.
ModuleVector from_vec(const Vec& v, const RingPtr& ring, std::size_t lo, std::size_t hi);
Polynomial poly_from_vec(const Vec& v, const RingPtr& ring);

/// Degree used to twist the tracking component of a column: the homogeneous
/// degree when there is one, else the largest term degree, 0 for zero.
int column_degree(const FreeModule& F, const ModuleVector& v);

}  // namespace kmu::detail
