#include "schreyer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kmu/error.hpp"

namespace kmu::detail {

namespace {

struct STerm {
  Scalar coef;
  Monomial mono;   // coefficient of the basis vector
  Monomial total;  // mono times the total lead monomial of the basis vector
  std::uint32_t comp;
};
using SVec = std::vector<STerm>;

/// Basis of one free module F_i of the frame.
struct Level {
  std::vector<Monomial> total;  // total lead monomial of e_k
  std::vector<int> twist;
  std::vector<SVec> image;      // d(e_k) in F_{i-1}; empty for F_0
};

/// Induced order on F_i: total monomial first, then smaller index is larger.
struct SchreyerOrder {
  const Ring* ring;
  int compare(const STerm& a, const STerm& b) const {
    int c = ring->compare_unchecked(a.total, b.total);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
  void sort(SVec& v) const {
    std::sort(v.begin(), v.end(), [this](const STerm& a, const STerm& b) { return compare(a, b) > 0; });
  }
};

bool lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

/// a[from..] - c * m * b[1..]
SVec sub_mul(const SchreyerOrder& ord, SVec&& a, std::size_t from, const Scalar& c, const Monomial& m, const SVec& b) {
  SVec out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 1;
  STerm scratch{Scalar(), Monomial(), Monomial(), 0};
  while (i < a.size() && j < b.size()) {
    scratch.mono = b[j].mono * m;
    scratch.total = b[j].total * m;
    scratch.comp = b[j].comp;
    int cmp = ord.compare(a[i], scratch);
    if (cmp > 0) {
      out.push_back(std::move(a[i++]));
    } else if (cmp < 0) {
      scratch.coef = -(c * b[j].coef);
      out.push_back(scratch);
      ++j;
    } else {
      a[i].coef -= c * b[j].coef;
      if (!a[i].coef.is_zero()) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back({-(c * b[j].coef), b[j].mono * m, b[j].total * m, b[j].comp});
  return out;
}

SVec scaled(const SVec& v, const Scalar& c, const Monomial& m) {
  SVec out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back({c * t.coef, t.mono * m, t.total * m, t.comp});
  return out;
}

/// Next frame level: one Schreyer syzygy per minimal lead term.
Level next_level(const Ring& ring, const Level& cur) {
  const SchreyerOrder lower{&ring};
  const std::size_t n = cur.image.size();
  std::map<std::uint32_t, std::vector<std::size_t>> by_comp;
  for (std::size_t k = 0; k < n; ++k) by_comp[cur.image[k].front().comp].push_back(k);

  struct Pending {
    std::size_t a, b;
    Monomial ua;
  };
  std::vector<Pending> pending;
  for (std::size_t a = 0; a < n; ++a) {
    const STerm& la = cur.image[a].front();
    std::vector<Pending> cands;
    for (std::size_t b : by_comp[la.comp]) {
      if (b <= a) continue;
      const Monomial& mb = cur.image[b].front().mono;
      cands.push_back({a, b, la.mono.lcm(mb).quotient(la.mono)});
    }
    for (std::size_t x = 0; x < cands.size(); ++x) {
      bool keep = true;
      for (std::size_t y = 0; y < cands.size() && keep; ++y) {
        if (x == y || !cands[y].ua.divides(cands[x].ua)) continue;
        if (!(cands[y].ua == cands[x].ua) || y < x) keep = false;
      }
      if (keep) pending.push_back(cands[x]);
    }
  }

  const Field field = ring.field();
  Level next;
  for (const auto& p : pending) {
    const SVec& ea = cur.image[p.a];
    const SVec& eb = cur.image[p.b];
    const Monomial ub = ea.front().mono.lcm(eb.front().mono).quotient(eb.front().mono);
    const Scalar lambda = ea.front().coef / eb.front().coef;
    SVec s = sub_mul(lower, scaled(ea, Scalar::one(field), p.ua), 1, lambda, ub, eb);

    SVec syz;
    syz.push_back({Scalar::one(field), p.ua, p.ua * cur.total[p.a], static_cast<std::uint32_t>(p.a)});
    syz.push_back({-lambda, ub, ub * cur.total[p.b], static_cast<std::uint32_t>(p.b)});
    while (!s.empty()) {
      const STerm& lead = s.front();
      std::size_t k = n;
      for (std::size_t cand : by_comp[lead.comp])
        if (cur.image[cand].front().mono.divides(lead.mono)) {
          k = cand;
          break;
        }
      if (k == n) throw InternalError("Schreyer frame: S-vector does not reduce to zero");
      const STerm& lk = cur.image[k].front();
      Monomial q = lead.mono.quotient(lk.mono);
      Scalar c = lead.coef / lk.coef;
      syz.push_back({-c, q, q * cur.total[k], static_cast<std::uint32_t>(k)});
      s = sub_mul(lower, std::move(s), 1, c, q, cur.image[k]);
    }
    const SchreyerOrder upper{&ring};
    upper.sort(syz);
    SVec merged;
    for (auto& t : syz) {
      if (!merged.empty() && merged.back().comp == t.comp && merged.back().mono == t.mono) {
        merged.back().coef += t.coef;
        if (merged.back().coef.is_zero()) merged.pop_back();
      } else {
        merged.push_back(std::move(t));
      }
    }
    next.total.push_back(p.ua * cur.total[p.a]);
    next.twist.push_back(cur.twist[p.a] + ring.wdeg(p.ua));
    next.image.push_back(std::move(merged));
  }
  return next;
}

/// Reorder a level so that elements sharing a lead component are consecutive
/// and lex-descending in their lead monomials (this bounds the frame length).
void normalize_order(Level& lv) {
  const std::size_t n = lv.image.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    const STerm& a = lv.image[x].front();
    const STerm& b = lv.image[y].front();
    if (a.comp != b.comp) return a.comp < b.comp;
    return lex_greater(a.mono, b.mono);
  });
  Level out;
  for (std::size_t k : perm) {
    out.total.push_back(lv.total[k]);
    out.twist.push_back(lv.twist[k]);
    out.image.push_back(std::move(lv.image[k]));
  }
  lv = std::move(out);
}

using Column = std::map<std::uint32_t, Polynomial>;

Column to_column(const SVec& v, const RingPtr& ring) {
  std::map<std::uint32_t, std::vector<Term>> parts;
  for (const auto& t : v) parts[t.comp].push_back({t.coef, t.mono});
  Column col;
  for (auto& [c, terms] : parts) {
    Polynomial p(ring, std::move(terms));
    if (!p.is_zero()) col.emplace(c, std::move(p));
  }
  return col;
}

/// Live part of the frame during pruning: maps[i] = columns of d_{i+1}.
struct Complex {
  std::vector<std::vector<bool>> alive;  // per module
  std::vector<std::vector<Column>> maps;
};

/// Split off A e_b -> A e_a where d_{i+1}[a][b] is a unit.
void prune(Complex& cx, std::size_t i, std::uint32_t a, std::uint32_t b) {
  auto& cols = cx.maps[i];
  const Polynomial& unit = cols[b].at(a);
  const Scalar cinv = unit.terms().front().coef.inverse();
  const Column colb = cols[b];
  for (std::size_t y = 0; y < cols.size(); ++y) {
    if (y == b || !cx.alive[i + 1][y]) continue;
    auto it = cols[y].find(a);
    if (it == cols[y].end()) continue;
    const Polynomial factor = cinv * it->second;
    for (const auto& [r, e] : colb) {
      auto at = cols[y].find(r);
      Polynomial upd = at != cols[y].end() ? at->second - factor * e : -(factor * e);
      if (upd.is_zero())
        cols[y].erase(r);
      else
        cols[y].insert_or_assign(r, std::move(upd));
    }
  }
  cols[b].clear();
  cx.alive[i + 1][b] = false;
  cx.alive[i][a] = false;
  if (i + 1 < cx.maps.size())
    for (auto& col : cx.maps[i + 1]) col.erase(b);
  if (i > 0) cx.maps[i - 1][a].clear();
}

}  // namespace

FreeResolution schreyer_resolution(const Ideal& I, const std::vector<Polynomial>& first) {
  const RingPtr& ring = I.ring();
  const Ring& r = *ring;
  const std::size_t nfirst = first.size();

  Level base;
  base.total.push_back(Monomial(r.arity()));
  base.twist.push_back(0);
  base.image.emplace_back();

  // Level 1: the given generators followed by a Gröbner basis; the union is
  // again a Gröbner basis, and pruning later removes the extra columns.
  Level l1;
  std::vector<bool> given;
  auto add = [&](const Polynomial& g, bool is_given) {
    SVec v;
    for (const auto& t : g.terms()) v.push_back({t.coef, t.mono, t.mono, 0});
    l1.total.push_back(v.front().mono);
    l1.twist.push_back(*g.homogeneous_degree());
    l1.image.push_back(std::move(v));
    given.push_back(is_given);
  };
  for (const auto& g : first) add(g, true);
  for (const auto& g : I.groebner_basis()) add(g, false);

  // Order level 1 without losing track of the given generators.
  std::vector<std::size_t> perm(l1.image.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return lex_greater(l1.image[x].front().mono, l1.image[y].front().mono);
  });
  {
    Level sorted;
    std::vector<bool> sgiven;
    for (std::size_t k : perm) {
      sorted.total.push_back(l1.total[k]);
      sorted.twist.push_back(l1.twist[k]);
      sorted.image.push_back(std::move(l1.image[k]));
      sgiven.push_back(given[k]);
    }
    l1 = std::move(sorted);
    given = std::move(sgiven);
  }
  std::vector<std::size_t> given_slot(nfirst);  // input position -> level-1 index
  for (std::size_t k = 0; k < perm.size(); ++k)
    if (perm[k] < nfirst) given_slot[perm[k]] = k;

  std::vector<Level> frame;
  frame.push_back(std::move(base));
  frame.push_back(std::move(l1));
  while (!frame.back().image.empty()) {
    if (frame.size() > r.arity() + 2) throw InternalError("Schreyer frame longer than the number of variables");
    Level nx = next_level(r, frame.back());
    if (nx.image.empty()) break;
    normalize_order(nx);
    frame.push_back(std::move(nx));
  }

  Complex cx;
  for (const auto& lv : frame) cx.alive.emplace_back(lv.twist.size(), true);
  for (std::size_t i = 1; i < frame.size(); ++i) {
    std::vector<Column> cols;
    for (const auto& v : frame[i].image) cols.push_back(to_column(v, ring));
    cx.maps.push_back(std::move(cols));
  }

  // Prune unit entries. In d_2 only rows of extra Gröbner elements are used as
  // pivots, so the given generators survive as the columns of d_1.
  for (std::size_t i = 1; i < cx.maps.size(); ++i) {
    bool again = true;
    while (again) {
      again = false;
      auto& cols = cx.maps[i];
      for (std::uint32_t b = 0; b < cols.size() && !again; ++b) {
        if (!cx.alive[i + 1][b]) continue;
        for (const auto& [a, e] : cols[b]) {
          if (!e.is_unit() || (i == 1 && given[a])) continue;
          prune(cx, i, a, b);
          again = true;
          break;
        }
      }
    }
  }
  for (std::size_t k = 0; k < given.size(); ++k)
    if (!given[k] && cx.alive[1][k]) throw InternalError("Schreyer pruning left a non-minimal generator");

  // Renumber: level 1 in the order of `first`, higher levels by degree.
  std::vector<std::vector<std::uint32_t>> order(frame.size());
  order[0] = {0};
  for (std::size_t j = 0; j < nfirst; ++j) order[1].push_back(static_cast<std::uint32_t>(given_slot[j]));
  for (std::size_t i = 2; i < frame.size(); ++i) {
    for (std::uint32_t k = 0; k < frame[i].twist.size(); ++k)
      if (cx.alive[i][k]) order[i].push_back(k);
    std::stable_sort(order[i].begin(), order[i].end(),
                     [&](std::uint32_t x, std::uint32_t y) { return frame[i].twist[x] < frame[i].twist[y]; });
  }

  FreeResolution res;
  res.ring = ring;
  res.modules.push_back(FreeModule{ring, {0}});
  for (std::size_t i = 1; i < frame.size() && !order[i].empty(); ++i) {
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t x = 0; x < order[i - 1].size(); ++x) row_of[order[i - 1][x]] = x;
    FreeModule F{ring, {}};
    std::vector<ModuleVector> cols;
    for (std::uint32_t k : order[i]) {
      F.twists.push_back(frame[i].twist[k]);
      ModuleVector v = zero_vector(res.modules.back());
      for (const auto& [a, e] : cx.maps[i - 1][k]) v.entries[row_of.at(a)] = e;
      cols.push_back(std::move(v));
    }
    if (i == 1)
      for (std::size_t j = 0; j < nfirst; ++j) cols[j] = ModuleVector{{first[j]}};
    res.modules.push_back(std::move(F));
    res.maps.push_back(std::move(cols));
  }
  return res;
}

}  // namespace kmu::detail
