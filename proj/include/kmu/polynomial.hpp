#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmu/ring.hpp"
#include "kmu/scalar.hpp"

namespace kmu {

struct Term {
  Scalar coef;
  Monomial mono;
};

/// Polynomial in canonical form: nonzero coefficients, distinct monomials,
/// terms strictly descending under the ring's order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges equal monomials and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Scalar& c, const Monomial& m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  const Term& lead_term() const;
  const Monomial& lead_monomial() const { return lead_term().mono; }
  const Scalar& lead_coef() const { return lead_term().coef; }

  /// Common weighted degree of all terms; nullopt if not homogeneous.
  /// Throws MathError on the zero polynomial.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  /// Largest weighted degree of a term (0 for the zero polynomial).
  int max_degree() const;

  bool involves(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial mul_term(const Scalar& c, const Monomial& m) const;
  /// Divide by the leading coefficient.
  Polynomial monic() const;
  /// Over QQ: integer, content-free, positive leading coefficient. Over F_p: monic.
  Polynomial normalized() const;

  /// Re-express in another ring. var_map[i] is the target index of variable i,
  /// or -1 when variable i must not occur.
  Polynomial map_to(const RingPtr& target, std::span<const int> var_map) const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Embed into a ring that extends `p.ring()` by trailing variables.
Polynomial embed(const Polynomial& p, const RingPtr& larger);

/// Human/parser-compatible text, e.g. "x^2*y - 3/2*z + 1". Zero prints as "0".
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m, const Ring& ring);

/// Weighted degree of a monomial in a ring (arity checked).
inline int wdeg(const Monomial& m, const Ring& r) { return r.wdeg(m); }

}  // namespace kmu
