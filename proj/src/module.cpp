#include "kmu/module.hpp"

#include <algorithm>

#include "convert.hpp"
#include "engine.hpp"
#include "kmu/error.hpp"

namespace kmu {

namespace detail {

Vec to_vec(const Polynomial& p, const ModuleOrder& ord, std::uint32_t comp) {
  Vec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.coef, t.mono, comp, ord.term_degree(t.mono, comp)});
  ord.sort(v);
  return v;
}

Vec to_vec(const ModuleVector& mv, const ModuleOrder& ord, std::uint32_t offset) {
  Vec v;
  for (std::size_t c = 0; c < mv.entries.size(); ++c) {
    const auto comp = static_cast<std::uint32_t>(c + offset);
    for (const auto& t : mv.entries[c].terms()) v.push_back({t.coef, t.mono, comp, ord.term_degree(t.mono, comp)});
  }
  ord.sort(v);
  return v;
}

Vec unit_vec(const ModuleOrder& ord, std::uint32_t comp) {
  Monomial one(ord.ring().arity());
  return {VTerm{Scalar::one(ord.ring().field()), one, comp, ord.twists()[comp]}};
}

ModuleVector from_vec(const Vec& v, const RingPtr& ring, std::size_t lo, std::size_t hi) {
  std::vector<std::vector<Term>> parts(hi - lo);
  for (const auto& t : v) {
    if (t.comp < lo || t.comp >= hi) throw InternalError("vector component outside requested range");
    parts[t.comp - lo].push_back({t.coef, t.mono});
  }
  ModuleVector out;
  out.entries.reserve(parts.size());
  for (auto& p : parts) out.entries.emplace_back(ring, std::move(p));
  return out;
}

Polynomial poly_from_vec(const Vec& v, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.coef, t.mono});
  return Polynomial(ring, std::move(terms));
}

int column_degree(const FreeModule& F, const ModuleVector& v) {
  if (v.is_zero()) return 0;
  if (auto d = homogeneous_degree(F, v)) return *d;
  int best = std::numeric_limits<int>::min();
  for (std::size_t c = 0; c < v.entries.size(); ++c)
    for (const auto& t : v.entries[c].terms()) best = std::max(best, F.ring->wdeg(t.mono) + F.twists[c]);
  return best;
}

}  // namespace detail

using detail::ModuleOrder;
using detail::Vec;

namespace {

void check_vector(const FreeModule& F, const ModuleVector& v) {
  if (v.entries.size() != F.rank()) throw MathError("vector length does not match module rank");
  for (const auto& p : v.entries)
    if (!same_ring(p.ring(), F.ring)) throw MathError("ring mismatch");
}

/// Extended order on F ⊕ A^r with F's components eliminated first.
ModuleOrder tracking_order(const FreeModule& F, std::span<const ModuleVector> columns) {
  std::vector<int> twists = F.twists;
  for (const auto& c : columns) twists.push_back(detail::column_degree(F, c));
  return ModuleOrder(F.ring, std::move(twists), F.rank() == 0 ? 0 : F.rank());
}

std::vector<Vec> tracking_generators(const FreeModule& F, std::span<const ModuleVector> columns,
                                     const ModuleOrder& ord) {
  std::vector<Vec> gens;
  gens.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Vec v = detail::to_vec(columns[j], ord, 0);
    Vec u = detail::unit_vec(ord, static_cast<std::uint32_t>(F.rank() + j));
    v.insert(v.end(), u.begin(), u.end());
    ord.sort(v);
    gens.push_back(std::move(v));
  }
  return gens;
}

}  // namespace

bool ModuleVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ModuleVector zero_vector(const FreeModule& F) {
  ModuleVector v;
  v.entries.assign(F.rank(), Polynomial(F.ring));
  return v;
}

ModuleVector unit_vector(const FreeModule& F, std::size_t c) {
  ModuleVector v = zero_vector(F);
  v.entries.at(c) = Polynomial::constant(F.ring, 1);
  return v;
}

std::optional<int> homogeneous_degree(const FreeModule& F, const ModuleVector& v) {
  check_vector(F, v);
  std::optional<int> deg;
  for (std::size_t c = 0; c < v.entries.size(); ++c) {
    if (v.entries[c].is_zero()) continue;
    auto d = v.entries[c].homogeneous_degree();
    if (!d) return std::nullopt;
    const int total = *d + F.twists[c];
    if (deg && *deg != total) return std::nullopt;
    deg = total;
  }
  if (!deg) throw MathError("zero vector has no degree");
  return deg;
}

ModuleVector combine(const FreeModule& F, std::span<const ModuleVector> columns, std::span<const Polynomial> coeffs) {
  if (columns.size() != coeffs.size()) throw MathError("coefficient count does not match column count");
  ModuleVector out = zero_vector(F);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    check_vector(F, columns[j]);
    for (std::size_t c = 0; c < F.rank(); ++c)
      if (!columns[j].entries[c].is_zero()) out.entries[c] += coeffs[j] * columns[j].entries[c];
  }
  return out;
}

SyzygyBasis syzygies(const FreeModule& target, std::span<const ModuleVector> columns) {
  for (const auto& c : columns) check_vector(target, c);
  SyzygyBasis result;
  result.source.ring = target.ring;
  for (const auto& c : columns) result.source.twists.push_back(detail::column_degree(target, c));
  if (columns.empty()) return result;

  ModuleOrder ord = tracking_order(target, columns);
  const std::size_t n = target.rank();
  detail::Engine engine(ord);
  engine.set_syzygy_block(n);
  engine.run(tracking_generators(target, columns, ord));
  for (const Vec& v : engine.syzygies())
    result.generators.push_back(detail::from_vec(v, target.ring, n, n + columns.size()));
  return result;
}

std::vector<std::size_t> minimal_generator_indices(const FreeModule& F, std::span<const ModuleVector> columns) {
  if (!F.ring->positively_graded()) throw MathError("minimal generators need a positively graded ring");
  ModuleOrder ord(F.ring, F.twists);
  std::vector<Vec> gens;
  for (const auto& c : columns) {
    check_vector(F, c);
    if (!c.is_zero() && !homogeneous_degree(F, c)) throw MathError("minimal generators need homogeneous input");
    gens.push_back(detail::to_vec(c, ord, 0));
  }
  int top = std::numeric_limits<int>::min();
  for (const auto& g : gens)
    if (!g.empty()) top = std::max(top, detail::max_degree(g));
  detail::Engine engine(ord);
  auto used = engine.run(gens, {}, top);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back(i);
  return out;
}

struct SubmoduleLifter::Impl {
  FreeModule target;
  std::size_t ncols;
  detail::Engine engine;
};

SubmoduleLifter::SubmoduleLifter(FreeModule target, std::vector<ModuleVector> columns) {
  for (const auto& c : columns) check_vector(target, c);
  ModuleOrder ord = tracking_order(target, columns);
  detail::Engine engine(ord);
  engine.set_syzygy_block(target.rank());
  engine.run(tracking_generators(target, columns, ord));
  impl_ = std::make_unique<Impl>(Impl{std::move(target), columns.size(), std::move(engine)});
}

SubmoduleLifter::~SubmoduleLifter() = default;
SubmoduleLifter::SubmoduleLifter(SubmoduleLifter&&) noexcept = default;
SubmoduleLifter& SubmoduleLifter::operator=(SubmoduleLifter&&) noexcept = default;

std::optional<std::vector<Polynomial>> SubmoduleLifter::lift(const ModuleVector& v) const {
  check_vector(impl_->target, v);
  const std::size_t n = impl_->target.rank();
  if (impl_->ncols == 0) {
    if (!v.is_zero()) return std::nullopt;
    return std::vector<Polynomial>{};
  }
  Vec p = detail::to_vec(v, impl_->engine.order(), 0);
  Vec r = impl_->engine.reduce(std::move(p), n);
  if (!r.empty() && r.front().comp < n) return std::nullopt;
  ModuleVector t = detail::from_vec(r, impl_->target.ring, n, n + impl_->ncols);
  for (auto& e : t.entries) e = -e;
  return std::move(t.entries);
}

bool SubmoduleLifter::contains(const ModuleVector& v) const { return lift(v).has_value(); }

bool module_contains(const FreeModule& F, std::span<const ModuleVector> big, std::span<const ModuleVector> small) {
  ModuleOrder ord(F.ring, F.twists);
  std::vector<Vec> gens;
  for (const auto& c : big) {
    check_vector(F, c);
    gens.push_back(detail::to_vec(c, ord, 0));
  }
  detail::Engine engine(ord);
  engine.run(gens);
  for (const auto& v : small) {
    check_vector(F, v);
    if (!engine.reduce(detail::to_vec(v, ord, 0)).empty()) return false;
  }
  return true;
}

}  // namespace kmu
