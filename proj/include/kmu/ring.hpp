#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmu/scalar.hpp"

namespace kmu {

inline constexpr std::size_t kMaxVars = 32;

/// Dense exponent vector. Arity is carried so mismatches can be detected.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);

  bool is_one() const;
  int total_degree() const;
  /// Bit i set iff variable i occurs (first 32 variables).
  std::uint32_t support() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Requires *this divisible by d.
  Monomial quotient(const Monomial& d) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint8_t n_ = 0;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Weighted graded reverse lex, or a two-block elimination order whose front
/// block [0, block) is compared first (each block by weighted grevlex).
struct MonomialOrder {
  enum class Kind { WeightedGrevlex, BlockElimination };
  Kind kind = Kind::WeightedGrevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder elimination(std::size_t front) { return {Kind::BlockElimination, front}; }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Weighted polynomial ring k[x_1..x_n] with a fixed monomial order.
///
/// Weights are non-negative; weight 0 only occurs for the adjoined variable
/// of an affine-mode unprojection. Rings with a weight-0 variable break ties
/// in weighted degree by ordinary degree so the order stays a well-order.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<int> weights, Field field,
       MonomialOrder order = MonomialOrder::grevlex());

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  bool positively_graded() const { return !has_zero_weight_; }
  int weight_sum() const;

  std::optional<std::size_t> index_of(const std::string& name) const;

  int wdeg(const Monomial& m) const;
  Cmp compare(const Monomial& a, const Monomial& b) const;
  /// Like compare, but assumes arities already checked.
  int compare_unchecked(const Monomial& a, const Monomial& b) const;

  Monomial variable(std::size_t i) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  std::vector<std::string> names_;
  std::vector<int> weights_;
  Field field_;
  MonomialOrder order_;
  bool has_zero_weight_ = false;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights, Field field = Field::rationals(),
                  MonomialOrder order = MonomialOrder::grevlex());

/// Pointer-equal or structurally equal.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Append a variable. Weight 0 is allowed (affine mode).
RingPtr extend_ring(const RingPtr& ring, const std::string& name, int weight);
RingPtr with_order(const RingPtr& ring, MonomialOrder order);
RingPtr with_field(const RingPtr& ring, Field field);

/// All monomials of weighted degree d (weight-0 variables must not occur).
std::vector<Monomial> monomials_of_degree(const Ring& ring, int d);

}  // namespace kmu
