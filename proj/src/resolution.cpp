#include "kmu/resolution.hpp"

#include <algorithm>
#include <functional>

#include "kmu/error.hpp"
#include "schreyer.hpp"

namespace kmu {

namespace {

FreeModule module_at(const FreeResolution& res, std::size_t i) {
  if (i < res.modules.size()) return res.modules[i];
  return FreeModule{res.ring, {}};
}

const std::vector<ModuleVector>& map_at(const FreeResolution& res, std::size_t i) {
  static const std::vector<ModuleVector> none;
  return i < res.maps.size() ? res.maps[i] : none;
}

std::vector<Polynomial> first_entries(const std::vector<ModuleVector>& cols) {
  std::vector<Polynomial> out;
  for (const auto& c : cols) out.push_back(c.entries.at(0));
  return out;
}

/// Smallest set of variables meeting every support mask (iterative deepening).
bool hitting_set(const std::vector<std::uint32_t>& masks, std::uint32_t chosen, std::size_t budget) {
  for (std::uint32_t m : masks) {
    if (m & chosen) continue;
    if (budget == 0) return false;
    for (std::uint32_t bits = m; bits; bits &= bits - 1) {
      const std::uint32_t v = bits & (~bits + 1);
      if (hitting_set(masks, chosen | v, budget - 1)) return true;
    }
    return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> FreeResolution::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& m : modules) out.push_back(m.rank());
  return out;
}

int BettiTable::at(std::size_t i, int j) const {
  if (i >= steps.size()) return 0;
  auto it = steps[i].find(j);
  return it == steps[i].end() ? 0 : it->second;
}

std::vector<int> BettiTable::totals() const {
  std::vector<int> out;
  for (const auto& s : steps) {
    int t = 0;
    for (const auto& [deg, n] : s) t += n;
    out.push_back(t);
  }
  return out;
}

BettiTable betti_table(const FreeResolution& res) {
  BettiTable b;
  for (const auto& F : res.modules) {
    std::map<int, int> row;
    for (int t : F.twists) ++row[t];
    b.steps.push_back(std::move(row));
  }
  return b;
}

FreeResolution minimal_free_resolution(const Ideal& I) {
  const RingPtr& ring = I.ring();
  if (!ring->positively_graded()) throw MathError("resolution refused: ring has a weight-0 variable (affine mode)");
  for (const auto& g : I.generators())
    if (!g.is_homogeneous()) throw MathError("resolution needs homogeneous generators: " + to_string(g));
  if (I.is_unit()) throw MathError("resolution of the unit ideal");

  FreeResolution res;
  res.ring = ring;
  res.modules.push_back(FreeModule{ring, {0}});
  if (I.is_zero()) return res;

  std::vector<Polynomial> first;
  for (auto i : minimal_generator_indices(ring, I.generators())) first.push_back(I.generators()[i]);
  res = detail::schreyer_resolution(I, first);
  if (res.length() > ring->arity()) throw InternalError("resolution longer than the number of variables");
  if (!is_minimal(res)) throw InternalError("minimal resolution has a unit entry");
  return res;
}

bool is_complex(const FreeResolution& res) {
  for (std::size_t i = 1; i < res.maps.size(); ++i)
    for (const auto& c : res.maps[i])
      if (!combine(res.modules[i - 1], res.maps[i - 1], c.entries).is_zero()) return false;
  return true;
}

bool is_exact(const FreeResolution& res, const Ideal& I) {
  if (!equal(Ideal(res.ring, first_entries(map_at(res, 0))), I)) return false;
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    SyzygyBasis syz = syzygies(res.modules[i], res.maps[i]);
    if (i + 1 == res.maps.size()) {
      if (!syz.generators.empty()) return false;
      continue;
    }
    if (!module_contains(res.modules[i + 1], res.maps[i + 1], syz.generators)) return false;
  }
  return is_complex(res);
}

bool is_minimal(const FreeResolution& res) {
  for (const auto& cols : res.maps)
    for (const auto& c : cols)
      for (const auto& e : c.entries)
        if (e.is_unit()) return false;
  return true;
}

std::size_t krull_dimension(const Ideal& I) {
  const std::size_t n = I.ring()->arity();
  if (I.is_zero()) return n;
  if (I.is_unit()) throw MathError("dimension of the unit ideal");
  std::vector<std::uint32_t> masks;
  for (const auto& g : I.groebner_basis()) masks.push_back(g.lead_monomial().support());
  for (std::size_t k = 0; k <= n; ++k)
    if (hitting_set(masks, 0, k)) return n - k;
  throw InternalError("no hitting set for lead-term supports");
}

std::size_t codim(const Ideal& I) { return I.ring()->arity() - krull_dimension(I); }

GorensteinWitness gorenstein_witness(const FreeResolution& res, const Ideal& I) {
  GorensteinWitness w;
  w.codim = codim(I);
  w.projective_dimension = res.length();
  w.betti = betti_table(res);
  const std::size_t last = res.modules.back().rank();
  if (w.projective_dimension != w.codim)
    w.reason = "projective dimension " + std::to_string(w.projective_dimension) + " != codimension " +
               std::to_string(w.codim);
  else if (last != 1)
    w.reason = "last free module has rank " + std::to_string(last);
  w.gorenstein = w.reason.empty();
  return w;
}

GorensteinWitness is_gorenstein_quotient(const Ideal& I) {
  if (I.is_zero()) throw MathError("Gorenstein test on the zero ideal");
  if (I.is_unit()) throw MathError("Gorenstein test on the unit ideal");
  return gorenstein_witness(minimal_free_resolution(I), I);
}

int canonical_degree(const FreeResolution& res) {
  const FreeModule& last = res.modules.back();
  if (last.rank() != 1) throw MathError("canonical degree needs a rank-1 last step, found rank " +
                                        std::to_string(last.rank()));
  return last.twists[0] - res.ring->weight_sum();
}

int canonical_degree(const Ideal& I) { return canonical_degree(minimal_free_resolution(I)); }

ChainMap lift_chain_map(const FreeResolution& L, const FreeResolution& M) {
  if (!same_ring(L.ring, M.ring)) throw MathError("ring mismatch");
  Ideal IX(L.ring, first_entries(map_at(L, 0)));
  Ideal ID(M.ring, first_entries(map_at(M, 0)));
  for (const auto& f : IX.generators())
    if (!is_member(f, ID)) throw HypothesisError("inclusion", to_string(f) + " is not in I_D");

  ChainMap cm;
  cm.phi.push_back({ModuleVector{{Polynomial::constant(L.ring, 1)}}});
  for (std::size_t i = 1; i <= L.length(); ++i) {
    const FreeModule target = module_at(M, i - 1);
    std::vector<ModuleVector> step;
    if (i > M.length()) {
      for (std::size_t k = 0; k < L.modules[i].rank(); ++k) step.push_back(ModuleVector{});
      cm.phi.push_back(std::move(step));
      continue;
    }
    SubmoduleLifter lifter(target, map_at(M, i - 1));
    for (const auto& col : L.maps[i - 1]) {
      ModuleVector v = combine(target, cm.phi[i - 1], col.entries);
      auto c = lifter.lift(v);
      if (!c) throw InternalError("chain map lift failed at step " + std::to_string(i));
      step.push_back(ModuleVector{std::move(*c)});
    }
    cm.phi.push_back(std::move(step));
  }
  return cm;
}

bool commutes(const FreeResolution& L, const FreeResolution& M, const ChainMap& phi) {
  if (phi.phi.size() != L.length() + 1) return false;
  for (std::size_t i = 1; i <= L.length(); ++i) {
    const FreeModule target = module_at(M, i - 1);
    for (std::size_t k = 0; k < L.maps[i - 1].size(); ++k) {
      ModuleVector lhs = combine(target, phi.phi[i - 1], L.maps[i - 1][k].entries);
      ModuleVector rhs = i <= M.length() ? combine(target, M.maps[i - 1], phi.phi[i][k].entries) : zero_vector(target);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

std::vector<Polynomial> dual_tail(const FreeResolution& L, const FreeResolution& M, const ChainMap& phi,
                                  const Ideal& IX, std::span<const Polynomial> f) {
  const std::size_t d = L.length();
  if (M.length() != d + 1)
    throw MathError("dual tail needs length(M) = length(L) + 1, found " + std::to_string(M.length()) + " and " +
                    std::to_string(d));
  if (L.modules[d].rank() != 1 || M.modules[d + 1].rank() != 1)
    throw MathError("dual tail needs rank-1 tails");
  if (phi.phi.size() != d + 1) throw MathError("chain map does not match the resolution length");

  const ModuleVector& v = phi.phi[d][0];
  const ModuleVector& e = M.maps[d][0];
  std::vector<Polynomial> out;
  for (const auto& fi : f) {
    auto c = lift(fi, e.entries);
    if (!c) throw HypothesisError("Gorenstein D", "last differential of the resolution of D does not generate I_D");
    Polynomial g(L.ring);
    for (std::size_t j = 0; j < c->size(); ++j)
      if (!(*c)[j].is_zero()) g += (*c)[j] * v.entries[j];
    out.push_back(IX.normal_form(g));
  }
  return out;
}

}  // namespace kmu
