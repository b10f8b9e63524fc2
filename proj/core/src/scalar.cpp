#include "quiverlab/scalar.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "quiverlab/error.hpp"

namespace quiverlab {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) { return x >= kMin64 && x <= kMax64; }

mpz_class mpz_from_i128(i128 x) {
  bool neg = x < 0;
  u128 u = neg ? static_cast<u128>(-(x + 1)) + 1
                            : static_cast<u128>(x);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::int64_t mod_normalize(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::uint32_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAdmissible: return "NonAdmissible";
    case ErrorKind::InhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::MalformedRelator: return "MalformedRelator";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotASubmodule: return "NotASubmodule";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::PathInIdeal: return "PathInIdeal";
    case ErrorKind::FinitePdimArrow: return "FinitePdimArrow";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long long n) : num_(n), den_(1) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (fits64(n) && fits64(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    assign(q);
  }
}

Rational::Rational(const mpq_class& q) { assign(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(q);
    num_ = 0;
    den_ = 1;
  }
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty number");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0);
    if (!ok) throw Error(ErrorKind::Parse, "malformed number '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "malformed number '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::operator-() const {
  if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) return Rational(-to_mpq());
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (rhs.num_ == 0) return *this;
    if (den_ == 1 && rhs.den_ == 1) {
      i128 n = static_cast<i128>(num_) + rhs.num_;
      if (fits64(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    i128 a = num_, b = den_, c = rhs.num_, d = rhs.den_;
    i128 g1 = gcd128(a, d), g2 = gcd128(c, b);
    a /= g1;
    d /= g1;
    c /= g2;
    b /= g2;
    i128 n = a * c, den = b * d;
    if (fits64(n) && fits64(den)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(den);
      return *this;
    }
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (!rhs.big_ && rhs.num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  assign(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

// ------------------------------------------------------------------ Scalar

Scalar Scalar::residue(long long value, std::uint32_t prime) {
  Scalar s;
  s.modulus_ = prime;
  s.r_ = mod_normalize(value, prime);
  return s;
}

Scalar Scalar::reduced(std::uint32_t prime) const {
  if (modulus_ != 0) {
    if (modulus_ != prime) throw Error(ErrorKind::FieldMismatch, "scalars from different prime fields");
    return *this;
  }
  mpz_class n = q_.numerator() % prime;
  mpz_class d = q_.denominator() % prime;
  if (n < 0) n += prime;
  if (d == 0)
    throw Error(ErrorKind::DivisionByZero,
                "rational " + q_.to_string() + " has no residue modulo " + std::to_string(prime));
  std::int64_t dn = d.get_si();
  std::int64_t inv = mod_pow(dn, prime - 2, prime);
  return residue(n.get_si() * inv % prime, prime);
}

std::string Scalar::to_string() const {
  return modulus_ == 0 ? q_.to_string() : std::to_string(r_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (modulus_ == 0) return Scalar(Rational(1) / q_);
  return residue(mod_pow(r_, modulus_ - 2, modulus_), modulus_);
}

Scalar Scalar::operator-() const {
  if (modulus_ == 0) return Scalar(-q_);
  return residue(-r_, modulus_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (modulus_ == 0 && rhs.modulus_ == 0) {
    q_ += rhs.q_;
    return *this;
  }
  std::uint32_t p = modulus_ != 0 ? modulus_ : rhs.modulus_;
  Scalar a = reduced(p), b = rhs.reduced(p);
  *this = residue((a.r_ + b.r_) % p, p);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (modulus_ == 0 && rhs.modulus_ == 0) {
    q_ *= rhs.q_;
    return *this;
  }
  std::uint32_t p = modulus_ != 0 ? modulus_ : rhs.modulus_;
  Scalar a = reduced(p), b = rhs.reduced(p);
  *this = residue(a.r_ * b.r_ % p, p);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == 0 && b.modulus_ == 0) return a.q_ == b.q_;
  std::uint32_t p = a.modulus_ != 0 ? a.modulus_ : b.modulus_;
  return a.reduced(p).r_ == b.reduced(p).r_;
}

// ------------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31))
    throw Error(ErrorKind::InvalidArgument, "field characteristic must be a prime below 2^31, got " +
                                                std::to_string(p));
  return Field{p};
}

Scalar Field::from_integer(long long n) const {
  return characteristic == 0 ? Scalar(n) : Scalar::residue(n, characteristic);
}

Scalar Field::from_rational(const Rational& q) const {
  return characteristic == 0 ? Scalar(q) : Scalar(q).reduced(characteristic);
}

Scalar Field::random(std::mt19937_64& rng, int bound) const {
  if (characteristic != 0) {
    std::uniform_int_distribution<long long> dist(0, characteristic - 1);
    return Scalar::residue(dist(rng), characteristic);
  }
  std::uniform_int_distribution<long long> dist(-bound, bound);
  return Scalar(dist(rng));
}

std::string Field::to_string() const {
  return characteristic == 0 ? "Q" : "F " + std::to_string(characteristic);
}

}  // namespace quiverlab
