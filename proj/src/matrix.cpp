#include "weylab/matrix.hpp"

#include <utility>

namespace weylab {

ScalarMatrix ScalarMatrix::identity(unsigned dim, FieldSpec field) {
  ScalarMatrix m(dim, field);
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (dim_ != o.dim_ || field_ != o.field_) {
    throw MismatchError("matrix dimension/field mismatch");
  }
  ScalarMatrix r(dim_, field_);
  for (unsigned i = 0; i < dim_; ++i) {
    for (unsigned k = 0; k < dim_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (unsigned j = 0; j < dim_; ++j) {
        r.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  }
  return r;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
  return dim_ == o.dim_ && field_ == o.field_ && data_ == o.data_;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix r(dim_, field_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ScalarMatrix ScalarMatrix::inverse() const {
  ScalarMatrix a(*this);
  ScalarMatrix inv = identity(dim_, field_);
  for (unsigned col = 0; col < dim_; ++col) {
    unsigned pivot = col;
    while (pivot < dim_ && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == dim_) throw SingularMatrixError("singular matrix");
    if (pivot != col) {
      for (unsigned j = 0; j < dim_; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Scalar scale = a.at(col, col).inverse();
    for (unsigned j = 0; j < dim_; ++j) {
      a.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (unsigned row = 0; row < dim_; ++row) {
      if (row == col || a.at(row, col).is_zero()) continue;
      Scalar factor = a.at(row, col);
      for (unsigned j = 0; j < dim_; ++j) {
        a.at(row, j) -= factor * a.at(col, j);
        inv.at(row, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool ScalarMatrix::invertible() const {
  try {
    inverse();
    return true;
  } catch (const SingularMatrixError&) {
    return false;
  }
}

}  // namespace weylab
