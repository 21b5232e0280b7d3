#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmu/groebner.hpp"
#include "kmu/module.hpp"

namespace kmu {

/// 0 <- A/I <- F_0 <- F_1 <- ... <- F_len, with F_0 = A.
/// maps[i] holds the columns of d_{i+1} : F_{i+1} -> F_i.
struct FreeResolution {
  RingPtr ring;
  std::vector<FreeModule> modules;
  std::vector<std::vector<ModuleVector>> maps;

  std::size_t length() const { return maps.size(); }
  std::vector<std::size_t> ranks() const;
};

/// b_{i,j}: number of generators of F_i in degree j.
struct BettiTable {
  std::vector<std::map<int, int>> steps;

  int at(std::size_t i, int j) const;
  std::vector<int> totals() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

BettiTable betti_table(const FreeResolution& res);

/// Minimal graded free resolution of A/I. The first differential uses a
/// minimal subset of I's generators in their listed order.
FreeResolution minimal_free_resolution(const Ideal& I);

/// d_i ∘ d_{i+1} = 0 at every step.
bool is_complex(const FreeResolution& res);
/// Columns of d_{i+1} generate the syzygies of d_i, and d_1 generates I.
bool is_exact(const FreeResolution& res, const Ideal& I);
/// No nonzero constant entries.
bool is_minimal(const FreeResolution& res);

/// Krull dimension of A/I from the lead-term ideal. Throws on the unit ideal.
std::size_t krull_dimension(const Ideal& I);
std::size_t codim(const Ideal& I);

struct GorensteinWitness {
  bool gorenstein = false;
  std::size_t codim = 0;
  std::size_t projective_dimension = 0;
  BettiTable betti;
  std::string reason;  // empty when gorenstein
};

/// pd = codim and last rank 1. Throws on unit or zero ideals.
GorensteinWitness is_gorenstein_quotient(const Ideal& I);
GorensteinWitness gorenstein_witness(const FreeResolution& res, const Ideal& I);

/// k with ω = O(k): top twist minus the sum of the weights.
int canonical_degree(const Ideal& I);
int canonical_degree(const FreeResolution& res);

/// phi[i]: images of the basis of L_i, as vectors of M_i.
struct ChainMap {
  std::vector<std::vector<ModuleVector>> phi;
};

/// Lift the identity of A to a map of complexes L -> M, given that L resolves
/// A/I_X, M resolves A/I_D and I_X ⊆ I_D.
ChainMap lift_chain_map(const FreeResolution& L, const FreeResolution& M);
/// φ_{i-1} ∘ d^L_i = d^M_i ∘ φ_i for all i.
bool commutes(const FreeResolution& L, const FreeResolution& M, const ChainMap& phi);

/// Numerators g_i (reduced modulo I_X) of the map f_i ↦ g_i read off the tail
/// of the chain map, aligned with `f`. Requires length(M) = length(L) + 1 and
/// rank-1 tails.
std::vector<Polynomial> dual_tail(const FreeResolution& L, const FreeResolution& M, const ChainMap& phi,
                                  const Ideal& IX, std::span<const Polynomial> f);

}  // namespace kmu
