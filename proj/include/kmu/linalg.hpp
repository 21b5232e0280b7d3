#pragma once

// Exact linear algebra over the coefficient field: incremental sparse row
// echelon (graded-piece ranks) and dense row reduction (small solves).

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kmu/scalar.hpp"

namespace kmu {

/// (column, value) pairs, strictly increasing column, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

class RowEchelon {
 public:
  explicit RowEchelon(Field field) : field_(std::move(field)) {}

  /// Reduce against the stored pivots; the zero row means dependent.
  SparseRow reduce(SparseRow row) const;
  /// Adds the row if independent; returns whether it was.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  Field field_;
  std::map<std::size_t, SparseRow> pivots_;  // keyed by leading column, monic
};

using Matrix = std::vector<std::vector<Scalar>>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

/// Solution set of A x = b: a particular solution plus a nullspace basis.
struct AffineSolution {
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
};
std::optional<AffineSolution> solve(const Matrix& a, const std::vector<Scalar>& b, std::size_t ncols,
                                    const Field& field);

}  // namespace kmu
