#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "hh1/errors.hpp"

namespace hh1 {

// Exact rational with an int64 fast path; escalates to GMP on overflow.
// Invariant: den > 0 and gcd(|num|, den) = 1 in both representations.
class Rat {
 public:
  Rat() : n_(0), d_(1) {}
  Rat(long long n) : n_(n), d_(1) {}
  Rat(long long n, long long d);
  explicit Rat(const mpq_class& q) { assign_mpq(q); }

  Rat(const Rat& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rat(Rat&&) noexcept = default;
  Rat& operator=(const Rat& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rat& operator=(Rat&&) noexcept = default;

  bool is_zero() const { return big_ ? sgn(*big_) == 0 : n_ == 0; }
  bool is_one() const { return big_ ? (*big_ == 1) : (n_ == 1 && d_ == 1); }
  int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;  // throws Error on division by zero
  Rat inverse() const;

  bool operator==(const Rat& o) const;
  bool operator!=(const Rat& o) const { return !(*this == o); }
  // numeric order
  bool operator<(const Rat& o) const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string str() const;

  // true if the value is a square in Q; outputs the positive square root
  bool sqrt_if_square(Rat& out) const;

 private:
  long long n_, d_;                  // valid iff !big_
  std::unique_ptr<mpq_class> big_;   // set => value stored here

  void assign_mpq(const mpq_class& q);
  static Rat make(const mpq_class& q) {
    Rat r;
    r.assign_mpq(q);
    return r;
  }
  friend struct RatOps;
};

// Scalar of an exact field: Q (p == 0) or F_p (p prime).
// Elements of different fields never mix; operations throw FieldMismatch.
class FieldElem {
 public:
  FieldElem() : p_(0), res_(0) {}

  static FieldElem rational(Rat v) {
    FieldElem e;
    e.p_ = 0;
    e.q_ = std::move(v);
    return e;
  }
  static FieldElem mod_p(std::uint64_t p, std::uint64_t residue) {
    FieldElem e;
    e.p_ = p;
    e.res_ = residue % p;
    return e;
  }

  std::uint64_t characteristic() const { return p_; }
  bool is_rational_kind() const { return p_ == 0; }

  bool is_zero() const { return p_ ? res_ == 0 : q_.is_zero(); }
  bool is_one() const { return p_ ? res_ == 1 % p_ : q_.is_one(); }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  const Rat& rat() const { return q_; }
  std::uint64_t residue() const { return res_; }

  std::string str() const;

 private:
  std::uint64_t p_;
  std::uint64_t res_ = 0;
  Rat q_;

  void check_same(const FieldElem& o) const {
    if (p_ != o.p_) throw FieldMismatch();
  }
};

// Field descriptor. Prime fields are primality-checked at construction.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);  // throws BadField if p is not prime

  std::uint64_t characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }

  FieldElem zero() const { return p_ ? FieldElem::mod_p(p_, 0) : FieldElem::rational(Rat(0)); }
  FieldElem one() const { return p_ ? FieldElem::mod_p(p_, 1) : FieldElem::rational(Rat(1)); }
  FieldElem from_int(long long v) const;
  FieldElem from_rat(const Rat& v) const;  // F_p: num * den^{-1} mod p; throws if den = 0 mod p

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string str() const { return p_ ? "F " + std::to_string(p_) : "Q"; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

// order: F_p by residue, Q numerically (canonical order for eigenvalue lists)
bool field_less(const FieldElem& a, const FieldElem& b);

}  // namespace hh1
