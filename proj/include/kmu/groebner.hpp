#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmu/polynomial.hpp"

namespace kmu {

/// Ideal given by generators, with a write-once cached reduced Gröbner basis
/// under the ring's monomial order. Zero generators are dropped on construction.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : Ideal(std::move(ring), {}) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  /// Reduced, monic, sorted ascending by lead term.
  const std::vector<Polynomial>& groebner_basis() const;
  Polynomial normal_form(const Polynomial& f) const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_homogeneous() const;

  /// Same generators, re-expressed in `target` (e.g. another monomial order).
  Ideal map_to(const RingPtr& target, std::span<const int> var_map) const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Remainder of f on division by the reduced basis of I.
Polynomial normal_form(const Polynomial& f, const Ideal& I);
/// Reduced Gröbner basis of the generators under the ring's order.
std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators);

bool is_member(const Polynomial& f, const Ideal& I);
/// small ⊆ big.
bool contains(const Ideal& big, const Ideal& small);
/// Equality of reduced bases (same ring and order).
bool equal(const Ideal& a, const Ideal& b);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
/// (I : g) = {f : fg ∈ I}, eliminating the first component of the module
/// spanned by (f_i, 0) and (g, 1).
Ideal ideal_quotient(const Ideal& I, const Polynomial& g);
/// (I : G) = ∩ (I : g) over the generators g of G.
Ideal ideal_quotient(const Ideal& I, const Ideal& G);

/// I ∩ k[remaining variables], returned as an ideal of the subring that keeps
/// the other variables in their original order.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& front_vars);

/// (I : f) = I. Throws on f = 0.
bool is_nonzerodivisor(const Polynomial& f, const Ideal& I);

/// Cofactors c with f = Σ c_i g_i, or nullopt when f ∉ (g).
std::optional<std::vector<Polynomial>> lift(const Polynomial& f, std::span<const Polynomial> generators);

/// Indices of a minimal generating subset of `candidates` modulo `background`
/// (graded, homogeneous input). Candidates are scanned in degree order, ties
/// in listed order; the returned indices are ascending.
std::vector<std::size_t> minimal_generator_indices(const RingPtr& ring, std::span<const Polynomial> candidates,
                                                   std::span<const Polynomial> background = {});
/// Minimal generating subset of I's generators (original order kept).
Ideal minimalize(const Ideal& I);

}  // namespace kmu
