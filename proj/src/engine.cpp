#include "engine.hpp"

#include <algorithm>
#include <numeric>

#include "kmu/error.hpp"

namespace kmu::detail {

ModuleOrder::ModuleOrder(RingPtr ring, std::vector<int> twists, std::size_t elim)
    : ring_(std::move(ring)), twists_(std::move(twists)), elim_(elim) {
  degree_first_ = ring_->order().kind == kmu::MonomialOrder::Kind::WeightedGrevlex;
  if (elim_ > twists_.size()) throw InternalError("elimination block exceeds module rank");
}

int ModuleOrder::compare(const VTerm& a, const VTerm& b) const {
  if (elim_ != 0) {
    const bool ta = a.comp >= elim_, tb = b.comp >= elim_;
    if (ta != tb) return ta ? -1 : 1;
  }
  if (degree_first_ && a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  int c = ring_->compare_unchecked(a.mono, b.mono);
  if (c != 0) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

void ModuleOrder::sort(Vec& v) const {
  std::sort(v.begin(), v.end(), [this](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
}

Vec sub_mul(const ModuleOrder& ord, const Vec& a, std::size_t from, const Scalar& c, const Monomial& m, const Vec& b,
            std::size_t skip) {
  const int dm = ord.ring().wdeg(m);
  Vec out;
  out.reserve(a.size() - from + b.size() - skip);
  std::size_t i = from, j = skip;
  VTerm scratch{Scalar(), Monomial(), 0, 0};
  while (i < a.size() && j < b.size()) {
    scratch.mono = b[j].mono * m;
    scratch.comp = b[j].comp;
    scratch.deg = b[j].deg + dm;
    int cmp = ord.compare(a[i], scratch);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      scratch.coef = -(c * b[j].coef);
      out.push_back(scratch);
      ++j;
    } else {
      Scalar s = a[i].coef - c * b[j].coef;
      if (!s.is_zero()) out.push_back({std::move(s), a[i].mono, a[i].comp, a[i].deg});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({-(c * b[j].coef), b[j].mono * m, b[j].comp, b[j].deg + dm});
  return out;
}

void make_monic(Vec& v) {
  if (v.empty() || v.front().coef.is_one()) return;
  Scalar inv = v.front().coef.inverse();
  for (auto& t : v) t.coef *= inv;
}

int max_degree(const Vec& v) {
  int d = std::numeric_limits<int>::min();
  for (const auto& t : v) d = std::max(d, t.deg);
  return d;
}

int Engine::find_reducer(const VTerm& t) const {
  const std::uint32_t supp = t.mono.support();
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Element& e = basis_[k];
    const VTerm& lt = e.v.front();
    if (lt.comp != t.comp || (e.support & ~supp) != 0) continue;
    if (lt.mono.divides(t.mono)) return static_cast<int>(k);
  }
  return -1;
}

Vec Engine::reduce(Vec p, std::size_t stop_block) const {
  Vec result;
  std::size_t head = 0;
  while (head < p.size()) {
    const VTerm& t = p[head];
    int k = t.comp >= stop_block ? -1 : find_reducer(t);
    if (k < 0) {
      result.push_back(std::move(p[head]));
      ++head;
      continue;
    }
    const Vec& g = basis_[static_cast<std::size_t>(k)].v;
    Monomial q = t.mono.quotient(g.front().mono);
    Scalar c = t.coef;
    p = sub_mul(ord_, p, head + 1, c, q, g, 1);
    head = 0;
  }
  return result;
}

void Engine::insert(Vec v, int sugar) {
  make_monic(v);
  const std::size_t t = basis_.size();
  const Monomial& lh = v.front().mono;
  const std::uint32_t comp = v.front().comp;
  const Ring& ring = ord_.ring();
  const bool product_criterion = ord_.rank() == 1;

  // Gebauer-Moeller: drop old pairs made superfluous by the new element.
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    if (it->comp == comp && lh.divides(it->lcm) && !(basis_[it->i].v.front().mono.lcm(lh) == it->lcm) &&
        !(basis_[it->j].v.front().mono.lcm(lh) == it->lcm))
      it = pairs_.erase(it);
    else
      ++it;
  }

  std::vector<Pair> fresh;
  const int dh = ring.wdeg(lh);
  for (std::size_t i = 0; i < t; ++i) {
    const Element& e = basis_[i];
    if (e.redundant || e.v.front().comp != comp) continue;
    const Monomial& li = e.v.front().mono;
    Monomial l = li.lcm(lh);
    const int dl = ring.wdeg(l);
    int s = std::max(e.sugar + dl - ring.wdeg(li), sugar + dl - dh);
    fresh.push_back({s, i, t, l, comp});
  }

  std::vector<bool> keep(fresh.size(), true);
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = 0; b < fresh.size(); ++b)
      if (a != b && fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
        keep[a] = false;
        break;
      }
  std::vector<bool> done(fresh.size(), false);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a] || done[a]) continue;
    bool coprime = false;
    for (std::size_t b = a; b < fresh.size(); ++b) {
      if (!keep[b] || !(fresh[b].lcm == fresh[a].lcm)) continue;
      done[b] = true;
      const Monomial& li = basis_[fresh[b].i].v.front().mono;
      if (product_criterion && li * lh == fresh[b].lcm) coprime = true;
      if (b != a) keep[b] = false;
    }
    if (coprime) keep[a] = false;
  }
  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (keep[a]) pairs_.insert(fresh[a]);

  for (std::size_t i = 0; i < t; ++i) {
    Element& e = basis_[i];
    if (!e.redundant && e.v.front().comp == comp && lh.divides(e.v.front().mono)) e.redundant = true;
  }
  basis_.push_back({std::move(v), sugar, lh.support(), false});
}

void Engine::process_pair(const Pair& p) {
  const Vec& gi = basis_[p.i].v;
  const Vec& gj = basis_[p.j].v;
  Monomial mi = p.lcm.quotient(gi.front().mono);
  Monomial mj = p.lcm.quotient(gj.front().mono);
  const int dmi = ord_.ring().wdeg(mi);
  Vec a;
  a.reserve(gi.size());
  for (const auto& t : gi) a.push_back({t.coef, t.mono * mi, t.comp, t.deg + dmi});
  Vec s = sub_mul(ord_, a, 1, Scalar::one(ord_.ring().field()), mj, gj, 1);
  Vec r = reduce(std::move(s));
  if (r.empty()) return;
  if (r.front().comp >= syz_block_)
    syzygies_.push_back(std::move(r));
  else
    insert(std::move(r), p.sugar);
}

std::vector<bool> Engine::run(const std::vector<Vec>& gens, const std::vector<bool>& background, int max_degree_bound) {
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> gdeg(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) gdeg[i] = gens[i].empty() ? 0 : max_degree(gens[i]);
  // Background generators first within a degree.
  auto is_bg = [&](std::size_t i) { return i < background.size() && background[i]; };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (gdeg[a] != gdeg[b]) return gdeg[a] < gdeg[b];
    return is_bg(a) && !is_bg(b);
  });

  std::vector<bool> contributed(gens.size(), false);
  std::size_t next = 0;
  const int inf = std::numeric_limits<int>::max();
  for (;;) {
    while (next < order.size() && gens[order[next]].empty()) ++next;
    const int gd = next < order.size() ? gdeg[order[next]] : inf;
    const int pd = pairs_.empty() ? inf : pairs_.begin()->sugar;
    if (gd == inf && (pd == inf || pd > max_degree_bound)) break;
    if (pd <= gd && pd <= max_degree_bound) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      process_pair(p);
    } else {
      const std::size_t idx = order[next++];
      Vec v = gens[idx];
      ord_.sort(v);
      Vec r = reduce(std::move(v));
      if (!r.empty() && r.front().comp >= syz_block_) {
        syzygies_.push_back(std::move(r));
      } else if (!r.empty()) {
        contributed[idx] = true;
        insert(std::move(r), gdeg[idx]);
      }
    }
  }
  return contributed;
}

void Engine::load(std::vector<Vec> basis) {
  for (auto& v : basis) {
    if (v.empty()) continue;
    make_monic(v);
    const std::uint32_t supp = v.front().mono.support();
    basis_.push_back({std::move(v), 0, supp, false});
  }
}

std::vector<Vec> Engine::reduced_basis() const {
  std::vector<Vec> out;
  for (const auto& e : basis_) {
    if (e.redundant) continue;
    Vec tail(e.v.begin() + 1, e.v.end());
    Vec r = reduce(std::move(tail));
    Vec full;
    full.reserve(r.size() + 1);
    full.push_back(e.v.front());
    for (auto& t : r) full.push_back(std::move(t));
    out.push_back(std::move(full));
  }
  std::sort(out.begin(), out.end(), [this](const Vec& a, const Vec& b) { return ord_.compare(a.front(), b.front()) < 0; });
  return out;
}

}  // namespace kmu::detail
