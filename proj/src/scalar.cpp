#include "kmu/scalar.hpp"

#include <stdexcept>

#include "kmu/error.hpp"

namespace kmu {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

const ModP& as_mod(const std::variant<mpq_class, ModP>& v) { return std::get<ModP>(v); }

void check_same(const ModP& a, const ModP& b) {
  if (a.modulus != b.modulus) throw MathError("scalar field mismatch");
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31)) throw std::invalid_argument("not a supported prime: " + std::to_string(p));
  return Field(p);
}

std::string Field::to_string() const { return is_rational() ? "QQ" : "fp:" + std::to_string(p_); }

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "QQ") return rationals();
  if (text == "fp") return prime(kDefaultPrime);
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw std::invalid_argument("bad field: " + text);
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw std::invalid_argument("bad field: " + text);
}

Scalar::Scalar(const Field& field, long value) {
  if (field.is_rational())
    v_ = mpq_class(value);
  else
    v_ = ModP{reduce(value, field.characteristic()), field.characteristic()};
}

Scalar::Scalar(const Field& field, const mpz_class& value) {
  if (field.is_rational()) {
    v_ = mpq_class(value);
  } else {
    mpz_class r = value % field.characteristic();
    if (r < 0) r += field.characteristic();
    v_ = ModP{static_cast<std::uint32_t>(r.get_ui()), field.characteristic()};
  }
}

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(as_mod(v_).modulus);
}

bool Scalar::is_zero() const {
  if (is_rational()) return sgn(rational()) == 0;
  return as_mod(v_).value == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  return as_mod(v_).value == 1;
}

long Scalar::symmetric_residue() const {
  const ModP& m = as_mod(v_);
  long v = m.value;
  if (v > static_cast<long>(m.modulus / 2)) v -= m.modulus;
  return v;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (is_rational()) {
    std::get<mpq_class>(r.v_) = -rational();
  } else {
    ModP& m = std::get<ModP>(r.v_);
    m.value = m.value == 0 ? 0 : m.modulus - m.value;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<mpq_class>(v_) += o.rational();
  } else if (!is_rational() && !o.is_rational()) {
    ModP& a = std::get<ModP>(v_);
    const ModP& b = as_mod(o.v_);
    check_same(a, b);
    std::uint64_t s = static_cast<std::uint64_t>(a.value) + b.value;
    a.value = static_cast<std::uint32_t>(s % a.modulus);
  } else {
    throw MathError("scalar field mismatch");
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<mpq_class>(v_) *= o.rational();
  } else if (!is_rational() && !o.is_rational()) {
    ModP& a = std::get<ModP>(v_);
    const ModP& b = as_mod(o.v_);
    check_same(a, b);
    a.value = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % a.modulus);
  } else {
    throw MathError("scalar field mismatch");
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  if (is_rational()) return Scalar(mpq_class(1) / rational());
  const ModP& m = as_mod(v_);
  Scalar r = *this;
  std::get<ModP>(r.v_).value = inverse_mod(m.value, m.modulus);
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  const ModP& x = as_mod(a.v_);
  const ModP& y = as_mod(b.v_);
  return x.modulus == y.modulus && x.value == y.value;
}

int Scalar::sign() const {
  if (is_rational()) return sgn(rational());
  long v = symmetric_residue();
  return (v > 0) - (v < 0);
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(symmetric_residue());
}

}  // namespace kmu
