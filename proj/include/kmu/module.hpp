#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "kmu/polynomial.hpp"

namespace kmu {

/// Graded free module ⊕ A(-twists[c]): basis vector e_c sits in degree twists[c].
struct FreeModule {
  RingPtr ring;
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
};

/// Element Σ entries[c]·e_c of a free module.
struct ModuleVector {
  std::vector<Polynomial> entries;

  bool is_zero() const;
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

ModuleVector zero_vector(const FreeModule& F);
ModuleVector unit_vector(const FreeModule& F, std::size_t c);

/// deg(entries[c]) + twists[c], common to all nonzero entries; nullopt if the
/// vector is not homogeneous. Throws on the zero vector.
std::optional<int> homogeneous_degree(const FreeModule& F, const ModuleVector& v);

/// Σ coeffs[j]·columns[j].
ModuleVector combine(const FreeModule& F, std::span<const ModuleVector> columns, std::span<const Polynomial> coeffs);

/// Generators of the kernel of A^r → F, e_j ↦ columns[j]. `source` has
/// twists = degrees of the columns.
struct SyzygyBasis {
  FreeModule source;
  std::vector<ModuleVector> generators;
};

/// Generators of the kernel of the map given by `columns` (Schreyer: one
/// syzygy per S-pair of a tracked Gröbner basis of the image; not minimal).
SyzygyBasis syzygies(const FreeModule& target, std::span<const ModuleVector> columns);

/// Indices of a minimal generating subset (homogeneous columns, positively
/// graded ring), ascending.
std::vector<std::size_t> minimal_generator_indices(const FreeModule& F, std::span<const ModuleVector> columns);

/// Membership and cofactor lifting into the submodule spanned by `columns`.
/// Precomputes one tracked Gröbner basis and reuses it for every query.
class SubmoduleLifter {
 public:
  SubmoduleLifter(FreeModule target, std::vector<ModuleVector> columns);
  ~SubmoduleLifter();
  SubmoduleLifter(SubmoduleLifter&&) noexcept;
  SubmoduleLifter& operator=(SubmoduleLifter&&) noexcept;

  /// c with v = Σ c_j columns[j], or nullopt if v is not in the span.
  std::optional<std::vector<Polynomial>> lift(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Every element of `small` lies in the span of `big`.
bool module_contains(const FreeModule& F, std::span<const ModuleVector> big, std::span<const ModuleVector> small);

}  // namespace kmu
