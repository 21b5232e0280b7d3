#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace kmu {

/// Coefficient field descriptor: the rationals, or F_p for a prime p.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  /// "QQ" or "fp:<p>".
  std::string to_string() const;
  /// Accepts "q", "QQ", "fp:<p>" and "fp" (default prime).
  static Field parse(const std::string& text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Element of a prime field, always reduced to [0, p).
struct ModP {
  std::uint32_t value;
  std::uint32_t modulus;
};

/// Exact field element. Rationals are kept in lowest terms by GMP.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpz_class& value);
  explicit Scalar(mpq_class value) : v_(std::move(value)) { std::get<mpq_class>(v_).canonicalize(); }

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<ModP>(v_).value; }
  /// Representative in (-p/2, p/2] for display.
  long symmetric_residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Sign of a rational; for F_p elements, sign of the symmetric residue.
  int sign() const;
  std::string to_string() const;

 private:
  std::variant<mpq_class, ModP> v_;
};

}  // namespace kmu
