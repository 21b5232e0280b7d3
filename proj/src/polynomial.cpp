#include "kmu/polynomial.hpp"

#include <algorithm>

#include "kmu/error.hpp"

namespace kmu {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const Ring& r = *ring_;
  for (const auto& t : terms)
    if (t.mono.size() != r.arity()) throw MathError("monomial arity does not match ring");
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare_unchecked(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef += t.coef;
      if (terms_.back().coef.is_zero()) terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Monomial one(ring->arity());
  return monomial(std::move(ring), c, one);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Scalar s(ring->field(), c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->arity()) throw MathError("variable index out of range");
  Monomial m = ring->variable(i);
  Scalar one = Scalar::one(ring->field());
  return monomial(std::move(ring), one, m);
}

Polynomial Polynomial::monomial(RingPtr ring, const Scalar& c, const Monomial& m) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->arity()) throw MathError("monomial arity does not match ring");
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty()) throw MathError("zero polynomial has no lead term");
  return terms_.front();
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) throw MathError("zero polynomial has no degree");
  int d = ring_->wdeg(terms_.front().mono);
  for (const auto& t : terms_)
    if (ring_->wdeg(t.mono) != d) return std::nullopt;
  return d;
}

int Polynomial::max_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, ring_->wdeg(t.mono));
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw MathError("ring mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  const Ring& r = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = r.compare_unchecked(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coef + o.terms_[j].coef;
      if (!s.is_zero()) out.push_back({std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.coef * t.coef, s.mono * t.mono});
  return Polynomial(a.ring_, std::move(prod));
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  Polynomial r(p.ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(p.terms_.size());
  for (const auto& t : p.terms_) r.terms_.push_back({c * t.coef, t.mono});
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  return true;
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({c * t.coef, t.mono * m});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return lead_coef().inverse() * *this;
}

Polynomial Polynomial::normalized() const {
  if (is_zero() || !ring_->field().is_rational()) return monic();
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    const mpq_class& q = t.coef.rational();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  if (sgn(lead_coef().rational()) < 0) scale = -scale;
  return Scalar(scale) * *this;
}

Polynomial Polynomial::map_to(const RingPtr& target, std::span<const int> var_map) const {
  if (var_map.size() != ring_->arity()) throw MathError("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] < 0) throw MathError("polynomial involves a variable that is not mapped");
      m.set(static_cast<std::size_t>(var_map[i]), t.mono[i]);
    }
    Scalar c = t.coef;
    if (!(c.field() == target->field())) {
      if (!c.is_rational()) throw MathError("cannot lift F_p coefficients");
      const mpq_class& q = c.rational();
      c = Scalar(target->field(), q.get_num()) / Scalar(target->field(), q.get_den());
    }
    out.push_back({std::move(c), m});
  }
  return Polynomial(target, std::move(out));
}

Polynomial embed(const Polynomial& p, const RingPtr& larger) {
  const RingPtr& small = p.ring();
  if (larger->arity() < small->arity()) throw MathError("embedding target is smaller");
  for (std::size_t i = 0; i < small->arity(); ++i)
    if (small->names()[i] != larger->names()[i]) throw MathError("embedding target does not extend the ring");
  std::vector<int> map(small->arity());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  return p.map_to(larger, map);
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.names()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    const bool negative = t.coef.sign() < 0;
    Scalar mag = negative ? -t.coef : t.coef;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (t.mono.is_one()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += to_string(t.mono, *p.ring());
    }
  }
  return out;
}

}  // namespace kmu
