#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylab {

// Error hierarchy used across the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two values from different coefficient fields (or rings of different
// dimension) were combined.
struct MismatchError : Error {
  using Error::Error;
};

// A stated mathematical fact failed on a concrete instance. Anything that
// throws this indicates a bug in the library, never bad user input.
struct SoundnessError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

enum class FieldKind { Rationals, GaussianRationals, PrimeField };

// Exact coefficient field: Q, Q(i), or F_p with p prime.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec gaussian_rationals() {
    return FieldSpec(FieldKind::GaussianRationals, 0);
  }
  static FieldSpec prime_field(unsigned long p);

  FieldKind kind() const { return kind_; }
  unsigned long prime() const { return p_; }

  // 0 for Q and Q(i), p for F_p.
  unsigned long characteristic() const {
    return kind_ == FieldKind::PrimeField ? p_ : 0;
  }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  // "q", "qi", or "fp:<p>"; inverse of parse().
  std::string name() const;
  static FieldSpec parse(const std::string& name);

 private:
  FieldSpec(FieldKind kind, unsigned long p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  unsigned long p_;
};

// An element of an exact coefficient field. Rationals are kept in lowest
// terms with positive denominator (GMP canonical form); Q(i) values are a
// pair of such rationals; F_p residues are reduced to 0..p-1.
class Scalar {
 public:
  explicit Scalar(FieldSpec field);  // zero of the field

  static Scalar zero(FieldSpec field) { return Scalar(field); }
  static Scalar one(FieldSpec field) { return from_integer(field, 1); }
  static Scalar from_integer(FieldSpec field, long v);
  static Scalar from_integer(FieldSpec field, const mpz_class& v);
  static Scalar from_rational(FieldSpec field, const mpz_class& num,
                              const mpz_class& den);
  // a + b*i over Q(i).
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar imaginary_unit(FieldSpec field);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Total order on values of one field; used only for canonical sorting.
  int compare(const Scalar& o) const;

  // Accessors for the active representation.
  const mpq_class& real_part() const { return re_; }
  const mpq_class& imag_part() const { return im_; }
  const mpz_class& residue() const { return residue_; }

  // Unambiguous single-token-ish rendering: "3/2", "1+2i", "4". The
  // expression formatter in parse.hpp handles grammar-safe output.
  std::string str() const;

 private:
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  mpq_class re_, im_;   // Rationals / GaussianRationals
  mpz_class residue_;   // PrimeField, in [0, p)
};

Scalar operator*(long a, const Scalar& b);

}  // namespace weylab
