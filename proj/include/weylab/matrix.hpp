#pragma once

#include <vector>

#include "weylab/scalar.hpp"

namespace weylab {

struct SingularMatrixError : Error {
  using Error::Error;
};

// Small dense square matrix over an exact field. Only what linear changes
// of variables need: construction, multiplication, exact inverse.
class ScalarMatrix {
 public:
  ScalarMatrix(unsigned dim, FieldSpec field)
      : dim_(dim), field_(field), data_(dim * dim, Scalar::zero(field)) {}

  static ScalarMatrix identity(unsigned dim, FieldSpec field);

  unsigned dim() const { return dim_; }
  FieldSpec field() const { return field_; }

  Scalar& at(unsigned row, unsigned col) { return data_[row * dim_ + col]; }
  const Scalar& at(unsigned row, unsigned col) const {
    return data_[row * dim_ + col];
  }

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  bool operator==(const ScalarMatrix& o) const;

  // Gauss-Jordan with exact division; throws SingularMatrixError.
  ScalarMatrix inverse() const;
  bool invertible() const;

  ScalarMatrix transpose() const;

 private:
  unsigned dim_;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

}  // namespace weylab
