#include "kmu/ring.hpp"

#include <algorithm>
#include <set>

#include "kmu/error.hpp"

namespace kmu {

Monomial::Monomial(std::size_t arity) {
  if (arity > kMaxVars) throw MathError("too many variables (max " + std::to_string(kMaxVars) + ")");
  n_ = static_cast<std::uint8_t>(arity);
}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

void Monomial::set(std::size_t i, int e) {
  if (e < 0 || e > 0xffff) throw MathError("exponent out of range");
  exp_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i]) return false;
  return true;
}

int Monomial::total_degree() const {
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += exp_[i];
  return d;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i]) mask |= 1u << i;
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  return r;
}

Monomial Monomial::quotient(const Monomial& d) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - d.exp_[i]);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) throw MathError("monomial arity mismatch");
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    unsigned e = unsigned{a.exp_[i]} + b.exp_[i];
    if (e > 0xffff) throw MathError("exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.n_; ++i)
    if (a.exp_[i] != b.exp_[i]) return false;
  return true;
}

Ring::Ring(std::vector<std::string> names, std::vector<int> weights, Field field, MonomialOrder order)
    : names_(std::move(names)), weights_(std::move(weights)), field_(field), order_(order) {
  if (names_.size() != weights_.size()) throw MathError("one weight per variable required");
  if (names_.size() > kMaxVars) throw MathError("too many variables (max " + std::to_string(kMaxVars) + ")");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!seen.insert(names_[i]).second) throw MathError("duplicate variable name '" + names_[i] + "'");
    if (weights_[i] < 0) throw MathError("negative weight for '" + names_[i] + "'");
    if (weights_[i] == 0) has_zero_weight_ = true;
  }
  if (order_.kind == MonomialOrder::Kind::BlockElimination && order_.block > names_.size())
    throw MathError("elimination block larger than the ring");
}

int Ring::weight_sum() const {
  int s = 0;
  for (int w : weights_) s += w;
  return s;
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

int Ring::wdeg(const Monomial& m) const {
  if (m.size() != arity()) throw MathError("monomial arity does not match ring");
  int d = 0;
  for (std::size_t i = 0; i < arity(); ++i) d += m[i] * weights_[i];
  return d;
}

Monomial Ring::variable(std::size_t i) const {
  Monomial m(arity());
  m.set(i, 1);
  return m;
}

int Ring::grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i] * weights_[i];
    db += b[i] * weights_[i];
  }
  if (da != db) return da > db ? 1 : -1;
  if (has_zero_weight_) {
    int ta = 0, tb = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      ta += a[i];
      tb += b[i];
    }
    if (ta != tb) return ta > tb ? 1 : -1;
  }
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int Ring::compare_unchecked(const Monomial& a, const Monomial& b) const {
  if (order_.kind == MonomialOrder::Kind::WeightedGrevlex) return grevlex_range(a, b, 0, arity());
  int c = grevlex_range(a, b, 0, order_.block);
  if (c != 0) return c;
  return grevlex_range(a, b, order_.block, arity());
}

Cmp Ring::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != arity() || b.size() != arity()) throw MathError("monomial arity does not match ring");
  return static_cast<Cmp>(compare_unchecked(a, b));
}

bool operator==(const Ring& a, const Ring& b) {
  return a.names_ == b.names_ && a.weights_ == b.weights_ && a.field_ == b.field_ && a.order_ == b.order_;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights, Field field, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(weights), field, order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

RingPtr extend_ring(const RingPtr& ring, const std::string& name, int weight) {
  if (ring->index_of(name)) throw MathError("variable '" + name + "' already in ring");
  auto names = ring->names();
  auto weights = ring->weights();
  names.push_back(name);
  weights.push_back(weight);
  return make_ring(std::move(names), std::move(weights), ring->field(), ring->order());
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return make_ring(ring->names(), ring->weights(), ring->field(), order);
}

RingPtr with_field(const RingPtr& ring, Field field) {
  return make_ring(ring->names(), ring->weights(), field, ring->order());
}

namespace {

void enumerate(const Ring& ring, int degree, std::size_t var, Monomial& cur, std::vector<Monomial>& out) {
  if (var == ring.arity()) {
    if (degree == 0) out.push_back(cur);
    return;
  }
  const int w = ring.weights()[var];
  for (int e = 0; e * w <= degree; ++e) {
    cur.set(var, static_cast<std::uint16_t>(e));
    enumerate(ring, degree - e * w, var + 1, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, int d) {
  if (!ring.positively_graded()) throw MathError("monomial enumeration needs positive weights");
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(ring.arity());
  enumerate(ring, d, 0, cur, out);
  return out;
}

}  // namespace kmu
