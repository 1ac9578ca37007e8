#include "weylab/scalar.hpp"

#include <utility>

namespace weylab {

FieldSpec FieldSpec::prime_field(unsigned long p) {
  mpz_class pz(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 32) == 0) {
    throw DomainError("prime_field: " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "q";
    case FieldKind::GaussianRationals:
      return "qi";
    case FieldKind::PrimeField:
      return "fp:" + std::to_string(p_);
  }
  return "?";
}

FieldSpec FieldSpec::parse(const std::string& name) {
  if (name == "q") return rationals();
  if (name == "qi") return gaussian_rationals();
  if (name.rfind("fp:", 0) == 0) {
    const std::string digits = name.substr(3);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("bad field name: " + name);
    }
    return prime_field(std::stoul(digits));
  }
  throw DomainError("bad field name: " + name + " (expected q, qi or fp:<p>)");
}

Scalar::Scalar(FieldSpec field) : field_(field), re_(0), im_(0), residue_(0) {}

Scalar Scalar::from_integer(FieldSpec field, long v) {
  return from_integer(field, mpz_class(v));
}

Scalar Scalar::from_integer(FieldSpec field, const mpz_class& v) {
  Scalar s(field);
  if (field.kind() == FieldKind::PrimeField) {
    mpz_class p(field.prime());
    mpz_mod(s.residue_.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  } else {
    s.re_ = v;
  }
  return s;
}

Scalar Scalar::from_rational(FieldSpec field, const mpz_class& num,
                             const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  if (field.kind() == FieldKind::PrimeField) {
    return from_integer(field, num) / from_integer(field, den);
  }
  Scalar s(field);
  s.re_ = mpq_class(num, den);
  s.re_.canonicalize();
  return s;
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  Scalar s(FieldSpec::gaussian_rationals());
  s.re_ = re;
  s.im_ = im;
  return s;
}

Scalar Scalar::imaginary_unit(FieldSpec field) {
  if (field.kind() != FieldKind::GaussianRationals) {
    throw DomainError("imaginary unit only exists over qi");
  }
  return gaussian(0, 1);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw MismatchError("scalar field mismatch: " + field_.name() + " vs " +
                        o.field_.name());
  }
}

bool Scalar::is_zero() const {
  if (field_.kind() == FieldKind::PrimeField) return residue_ == 0;
  return re_ == 0 && im_ == 0;
}

bool Scalar::is_one() const {
  if (field_.kind() == FieldKind::PrimeField) return residue_ == 1;
  return re_ == 1 && im_ == 0;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r(field_);
  if (field_.kind() == FieldKind::PrimeField) {
    r.residue_ = (residue_ + o.residue_) % field_.prime();
  } else {
    r.re_ = re_ + o.re_;
    r.im_ = im_ + o.im_;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.kind() == FieldKind::PrimeField) {
    if (residue_ != 0) r.residue_ = field_.prime() - residue_;
  } else {
    r.re_ = -re_;
    r.im_ = -im_;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r(field_);
  switch (field_.kind()) {
    case FieldKind::PrimeField:
      r.residue_ = (residue_ * o.residue_) % field_.prime();
      break;
    case FieldKind::Rationals:
      r.re_ = re_ * o.re_;
      break;
    case FieldKind::GaussianRationals:
      r.re_ = re_ * o.re_ - im_ * o.im_;
      r.im_ = re_ * o.im_ + im_ * o.re_;
      break;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar r(field_);
  switch (field_.kind()) {
    case FieldKind::PrimeField: {
      mpz_class p(field_.prime());
      if (mpz_invert(r.residue_.get_mpz_t(), residue_.get_mpz_t(),
                     p.get_mpz_t()) == 0) {
        throw DomainError("no modular inverse");  // unreachable for prime p
      }
      break;
    }
    case FieldKind::Rationals:
      r.re_ = 1 / re_;
      break;
    case FieldKind::GaussianRationals: {
      // 1/(a+bi) = (a-bi)/(a^2+b^2); the norm vanishes only at 0 over Q.
      mpq_class norm = re_ * re_ + im_ * im_;
      r.re_ = re_ / norm;
      r.im_ = -im_ / norm;
      break;
    }
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_.kind() == FieldKind::PrimeField) return residue_ == o.residue_;
  return re_ == o.re_ && im_ == o.im_;
}

int Scalar::compare(const Scalar& o) const {
  check_same_field(o);
  if (field_.kind() == FieldKind::PrimeField) {
    return cmp(residue_, o.residue_);
  }
  if (int c = cmp(re_, o.re_)) return c;
  return cmp(im_, o.im_);
}

std::string Scalar::str() const {
  switch (field_.kind()) {
    case FieldKind::PrimeField:
      return residue_.get_str();
    case FieldKind::Rationals:
      return re_.get_str();
    case FieldKind::GaussianRationals: {
      if (im_ == 0) return re_.get_str();
      std::string imag =
          (im_ == 1 ? "i" : im_ == -1 ? "-i" : im_.get_str() + "i");
      if (re_ == 0) return imag;
      return re_.get_str() + (im_ > 0 ? "+" : "") + imag;
    }
  }
  return "?";
}

Scalar operator*(long a, const Scalar& b) {
  return Scalar::from_integer(b.field(), a) * b;
}

}  // namespace weylab
