#pragma once

#include <vector>

#include "kmu/resolution.hpp"

namespace kmu::detail {

/// Graded free resolution of A/I from a Schreyer frame, pruned to a minimal
/// one. `first` must be a minimal generating set of the homogeneous ideal I;
/// the first differential keeps these columns in the given order.
FreeResolution schreyer_resolution(const Ideal& I, const std::vector<Polynomial>& first);

}  // namespace kmu::detail
