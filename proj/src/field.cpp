#include "hh1/field.hpp"

#include <cstdlib>

namespace hh1 {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr long long kI64Max = 0x7fffffffffffffffLL;

bool fits_i64(i128 v) { return v >= -(i128)kI64Max && v <= (i128)kI64Max; }

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 m = neg ? (u128)(-v) : (u128)v;
  mpz_class hi((unsigned long)(m >> 64));
  mpz_class out = (hi << 64) + mpz_class((unsigned long)(m & 0xffffffffffffffffULL));
  return neg ? mpz_class(-out) : out;
}

mpq_class mpq_from_i128_pair(i128 n, i128 d) {
  mpq_class q(mpz_from_i128(n));
  q /= mpq_class(mpz_from_i128(d));
  return q;  // mpq_class division canonicalizes
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (std::uint64_t)(((u128)a * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Rat

Rat::Rat(long long n, long long d) {
  if (d == 0) throw Error("rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  i128 g = gcd128(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  if (fits_i64(nn) && fits_i64(dd)) {
    n_ = (long long)nn;
    d_ = (long long)dd;
  } else {
    n_ = 0;
    d_ = 1;
    big_ = std::make_unique<mpq_class>(mpq_from_i128_pair(nn, dd));
  }
}

void Rat::assign_mpq(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    n_ = c.get_num().get_si();
    d_ = c.get_den().get_si();
    big_.reset();
  } else {
    n_ = 0;
    d_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(c));
  }
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  mpq_class q((long)n_, (long)d_);
  q.canonicalize();
  return q;
}

mpz_class Rat::numerator() const { return big_ ? big_->get_num() : mpz_class((long)n_); }
mpz_class Rat::denominator() const { return big_ ? big_->get_den() : mpz_class((long)d_); }

Rat Rat::operator-() const {
  if (big_) return make(mpq_class(-*big_));
  Rat r;
  r.n_ = -n_;
  r.d_ = d_;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  if (!big_ && !o.big_) {
    i128 n = (i128)n_ * o.d_ + (i128)o.n_ * d_;
    i128 d = (i128)d_ * o.d_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits_i64(n) && fits_i64(d)) {
      Rat r;
      r.n_ = (long long)n;
      r.d_ = (long long)d;
      return r;
    }
    return make(mpq_from_i128_pair(n, d));
  }
  return make(to_mpq() + o.to_mpq());
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::operator*(const Rat& o) const {
  if (!big_ && !o.big_) {
    // cross-reduce before multiplying so almost all small products stay small
    i128 g1 = gcd128(n_, o.d_), g2 = gcd128(o.n_, d_);
    i128 n = ((i128)n_ / g1) * ((i128)o.n_ / (g2 ? g2 : 1));
    i128 d = ((i128)d_ / (g2 ? g2 : 1)) * ((i128)o.d_ / g1);
    if (n == 0) return Rat();
    if (fits_i64(n) && fits_i64(d)) {
      Rat r;
      r.n_ = (long long)n;
      r.d_ = (long long)d;
      return r;
    }
    return make(mpq_from_i128_pair(n, d));
  }
  return make(to_mpq() * o.to_mpq());
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (!big_) {
    Rat r;
    if (n_ > 0) {
      r.n_ = d_;
      r.d_ = n_;
    } else {
      r.n_ = -d_;
      r.d_ = -n_;
    }
    return r;
  }
  return make(mpq_class(1 / *big_));
}

Rat Rat::operator/(const Rat& o) const { return *this * o.inverse(); }

bool Rat::operator==(const Rat& o) const {
  if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;
  return to_mpq() == o.to_mpq();
}

bool Rat::operator<(const Rat& o) const {
  if (!big_ && !o.big_) return (i128)n_ * o.d_ < (i128)o.n_ * d_;
  return to_mpq() < o.to_mpq();
}

std::string Rat::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

bool Rat::sqrt_if_square(Rat& out) const {
  if (sign() < 0) return false;
  if (is_zero()) {
    out = Rat(0);
    return true;
  }
  mpz_class n = numerator(), d = denominator();
  mpz_class sn, sd, rem;
  mpz_sqrtrem(sn.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return false;
  mpz_sqrtrem(sd.get_mpz_t(), rem.get_mpz_t(), d.get_mpz_t());
  if (rem != 0) return false;
  out = Rat(mpq_class(sn, sd));
  return true;
}

// ---------------------------------------------------------------- FieldElem

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  if (p_) {
    std::uint64_t s = res_ + o.res_;
    if (s >= p_) s -= p_;
    return mod_p(p_, s);
  }
  return rational(q_ + o.q_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  if (p_) {
    std::uint64_t s = res_ >= o.res_ ? res_ - o.res_ : res_ + p_ - o.res_;
    return mod_p(p_, s);
  }
  return rational(q_ - o.q_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  if (p_) return mod_p(p_, mulmod_u64(res_, o.res_, p_));
  return rational(q_ * o.q_);
}

FieldElem FieldElem::operator-() const {
  if (p_) return mod_p(p_, res_ ? p_ - res_ : 0);
  return rational(-q_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (p_) return mod_p(p_, powmod_u64(res_, p_ - 2, p_));
  return rational(q_.inverse());
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(o);
  return *this * o.inverse();
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same(o);
  if (p_) return res_ == o.res_;
  return q_ == o.q_;
}

std::string FieldElem::str() const { return p_ ? std::to_string(res_) : q_.str(); }

// ---------------------------------------------------------------- Field

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw BadField(std::to_string(p) + " is not prime");
  return Field(p);
}

FieldElem Field::from_int(long long v) const {
  if (!p_) return FieldElem::rational(Rat(v));
  long long m = v % (long long)p_;
  if (m < 0) m += (long long)p_;
  return FieldElem::mod_p(p_, (std::uint64_t)m);
}

FieldElem Field::from_rat(const Rat& v) const {
  if (!p_) return FieldElem::rational(v);
  mpz_class n = v.numerator(), d = v.denominator();
  mpz_class pz((unsigned long)p_);
  mpz_class nr = n % pz, dr = d % pz;
  if (nr < 0) nr += pz;
  if (dr < 0) dr += pz;
  std::uint64_t den = dr.get_ui();
  if (den == 0) throw BadField("coefficient denominator vanishes mod " + std::to_string(p_));
  std::uint64_t num = nr.get_ui();
  return FieldElem::mod_p(p_, mulmod_u64(num, powmod_u64(den, p_ - 2, p_), p_));
}

bool field_less(const FieldElem& a, const FieldElem& b) {
  if (a.characteristic()) return a.residue() < b.residue();
  return a.rat() < b.rat();
}

}  // namespace hh1
