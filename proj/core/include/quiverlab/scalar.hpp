#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quiverlab {

/// Exact rational number. Values whose numerator and denominator fit in
/// 64 bits are stored inline; anything larger spills into a GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string to_string() const;
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b);

 private:
  void assign(const mpq_class& q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Element of the base field: either a rational, or a residue modulo a prime.
///
/// A rational scalar carries no field tag of its own, so integer literals
/// written in generic code (0, 1, -1) combine with residues by reduction
/// modulo the residue's prime.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational q) : q_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  static Scalar residue(long long value, std::uint32_t prime);

  bool is_zero() const noexcept { return modulus_ == 0 ? q_.is_zero() : r_ == 0; }
  bool is_one() const noexcept { return modulus_ == 0 ? q_.is_one() : r_ == 1; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  const Rational& rational() const { return q_; }
  std::int64_t residue_value() const noexcept { return r_; }
  std::string to_string() const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Reinterprets a rational scalar modulo `prime` (identity on residues).
  Scalar reduced(std::uint32_t prime) const;

 private:
  Rational q_;
  std::int64_t r_ = 0;
  std::uint32_t modulus_ = 0;
};

/// Field descriptor: characteristic 0 means the rationals, otherwise F_p.
struct Field {
  std::uint32_t characteristic = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return characteristic == 0; }
  Scalar zero() const { return from_integer(0); }
  Scalar one() const { return from_integer(1); }
  Scalar from_integer(long long n) const;
  Scalar from_rational(const Rational& q) const;
  Scalar random(std::mt19937_64& rng, int bound = 3) const;
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;
};

}  // namespace quiverlab
