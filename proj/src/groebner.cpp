#include "kmu/groebner.hpp"

#include <algorithm>
#include <mutex>

#include "convert.hpp"
#include "engine.hpp"
#include "kmu/error.hpp"
#include "kmu/module.hpp"

namespace kmu {

using detail::ModuleOrder;
using detail::Vec;

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Polynomial> basis;
  std::unique_ptr<detail::Engine> engine;
};

namespace {

void require_same(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw MathError("ring mismatch");
}

std::vector<Polynomial> run_buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                       std::unique_ptr<detail::Engine>* keep) {
  ModuleOrder ord(ring, {0});
  std::vector<Vec> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) {
    require_same(g.ring(), ring);
    vs.push_back(detail::to_vec(g, ord, 0));
  }
  detail::Engine engine(ord);
  engine.run(vs);
  std::vector<Vec> reduced = engine.reduced_basis();
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (const auto& v : reduced) out.push_back(detail::poly_from_vec(v, ring));
  if (keep) {
    *keep = std::make_unique<detail::Engine>(ord);
    (*keep)->load(std::move(reduced));
  }
  return out;
}

FreeModule rank_one(const RingPtr& ring) { return FreeModule{ring, {0}}; }

std::vector<ModuleVector> as_columns(std::span<const Polynomial> ps) {
  std::vector<ModuleVector> cols;
  cols.reserve(ps.size());
  for (const auto& p : ps) cols.push_back(ModuleVector{{p}});
  return cols;
}

/// Generators of {h : (0, h) in M}, where M in A^2 is spanned by the given pairs.
/// The first component is eliminated first; `twist` is the degree shift of the second.
std::vector<Polynomial> second_component(const RingPtr& ring,
                                         const std::vector<std::pair<Polynomial, Polynomial>>& pairs, int twist) {
  ModuleOrder ord(ring, {0, twist}, 1);
  std::vector<Vec> gens;
  gens.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    Vec v = detail::to_vec(a, ord, 0);
    Vec u = detail::to_vec(b, ord, 1);
    v.insert(v.end(), u.begin(), u.end());
    ord.sort(v);
    if (!v.empty()) gens.push_back(std::move(v));
  }
  detail::Engine engine(ord);
  engine.run(gens);
  std::vector<Polynomial> out;
  for (const Vec& v : engine.reduced_basis())
    if (v.front().comp == 1) out.push_back(detail::poly_from_vec(v, ring));
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same(g.ring(), ring_);
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = run_buchberger(ring_, gens_, &cache_->engine); });
  return cache_->basis;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  require_same(f.ring(), ring_);
  groebner_basis();
  const ModuleOrder& ord = cache_->engine->order();
  return detail::poly_from_vec(cache_->engine->reduce(detail::to_vec(f, ord, 0)), ring_);
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_unit();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal Ideal::map_to(const RingPtr& target, std::span<const int> var_map) const {
  std::vector<Polynomial> mapped;
  mapped.reserve(gens_.size());
  for (const auto& g : gens_) mapped.push_back(g.map_to(target, var_map));
  return Ideal(target, std::move(mapped));
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) { return I.normal_form(f); }

std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators) {
  return run_buchberger(ring, generators, nullptr);
}

bool is_member(const Polynomial& f, const Ideal& I) { return I.normal_form(f).is_zero(); }

bool contains(const Ideal& big, const Ideal& small) {
  require_same(big.ring(), small.ring());
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& g) { return is_member(g, big); });
}

bool equal(const Ideal& a, const Ideal& b) {
  require_same(a.ring(), b.ring());
  return a.groebner_basis() == b.groebner_basis();
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  for (const auto& f : a.generators()) pairs.emplace_back(f, f);
  for (const auto& g : b.generators()) pairs.emplace_back(g, Polynomial(a.ring()));
  return Ideal(a.ring(), second_component(a.ring(), pairs, 0));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& g) {
  require_same(I.ring(), g.ring());
  if (g.is_zero()) throw MathError("quotient by the zero polynomial");
  if (I.is_zero()) return Ideal(I.ring());
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  for (const auto& f : I.generators()) pairs.emplace_back(f, Polynomial(I.ring()));
  pairs.emplace_back(g, Polynomial::constant(I.ring(), 1));
  const int twist = detail::column_degree(rank_one(I.ring()), ModuleVector{{g}});
  return Ideal(I.ring(), second_component(I.ring(), pairs, twist));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& G) {
  require_same(I.ring(), G.ring());
  if (G.is_zero()) return Ideal(I.ring(), {Polynomial::constant(I.ring(), 1)});
  std::optional<Ideal> acc;
  for (const auto& g : G.generators()) {
    Ideal q = ideal_quotient(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& front_vars) {
  const Ring& r = *I.ring();
  std::vector<bool> is_front(r.arity(), false);
  for (const auto& name : front_vars) {
    auto idx = r.index_of(name);
    if (!idx) throw MathError("unknown variable '" + name + "'");
    is_front[*idx] = true;
  }
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<int> to_perm(r.arity());
  std::vector<int> back(r.arity(), -1);
  for (std::size_t pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < r.arity(); ++i)
      if (is_front[i] == (pass == 0)) {
        to_perm[i] = static_cast<int>(names.size());
        names.push_back(r.names()[i]);
        weights.push_back(r.weights()[i]);
      }
  const std::size_t nfront = static_cast<std::size_t>(std::count(is_front.begin(), is_front.end(), true));
  RingPtr perm = make_ring(names, weights, r.field(), MonomialOrder::elimination(nfront));

  std::vector<std::string> sub_names(names.begin() + static_cast<long>(nfront), names.end());
  std::vector<int> sub_weights(weights.begin() + static_cast<long>(nfront), weights.end());
  RingPtr sub = make_ring(sub_names, sub_weights, r.field());
  std::vector<int> down(r.arity(), -1);
  for (std::size_t i = nfront; i < names.size(); ++i) down[i] = static_cast<int>(i - nfront);

  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.map_to(perm, to_perm));
  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(perm, gens)) {
    bool uses_front = false;
    for (std::size_t v = 0; v < nfront && !uses_front; ++v) uses_front = g.involves(v);
    if (!uses_front) kept.push_back(g.map_to(sub, down));
  }
  return Ideal(sub, std::move(kept));
}

bool is_nonzerodivisor(const Polynomial& f, const Ideal& I) {
  require_same(f.ring(), I.ring());
  if (f.is_zero()) throw MathError("zero is a zero divisor");
  if (I.is_zero()) return true;
  return contains(I, ideal_quotient(I, f));
}

std::optional<std::vector<Polynomial>> lift(const Polynomial& f, std::span<const Polynomial> generators) {
  const RingPtr& ring = f.ring();
  for (const auto& g : generators) require_same(g.ring(), ring);
  SubmoduleLifter lifter(rank_one(ring), as_columns(generators));
  return lifter.lift(ModuleVector{{f}});
}

std::vector<std::size_t> minimal_generator_indices(const RingPtr& ring, std::span<const Polynomial> candidates,
                                                   std::span<const Polynomial> background) {
  if (!ring->positively_graded()) throw MathError("minimal generators need a positively graded ring");
  ModuleOrder ord(ring, {0});
  std::vector<Vec> vs;
  std::vector<bool> bg;
  for (const auto& b : background) {
    require_same(b.ring(), ring);
    vs.push_back(detail::to_vec(b, ord, 0));
    bg.push_back(true);
  }
  for (const auto& c : candidates) {
    require_same(c.ring(), ring);
    if (!c.is_homogeneous()) throw MathError("minimal generators need homogeneous input: " + to_string(c));
    vs.push_back(detail::to_vec(c, ord, 0));
    bg.push_back(false);
  }
  int top = std::numeric_limits<int>::min();
  for (std::size_t i = background.size(); i < vs.size(); ++i)
    if (!vs[i].empty()) top = std::max(top, detail::max_degree(vs[i]));
  detail::Engine engine(ord);
  auto used = engine.run(vs, bg, top);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (used[background.size() + i]) out.push_back(i);
  return out;
}

Ideal minimalize(const Ideal& I) {
  auto idx = minimal_generator_indices(I.ring(), I.generators());
  std::vector<Polynomial> gens;
  for (auto i : idx) gens.push_back(I.generators()[i]);
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace kmu
