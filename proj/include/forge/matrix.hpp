#pragma once

#include <vector>

#include "forge/ring.hpp"

namespace forge {

/// Dense square matrix over a RingElem ring; the carrier for Suslin
/// matrices, group generators and Clifford images. Immutable in spirit:
/// operations return fresh values, set() is only used while assembling.
class MatrixR {
 public:
  MatrixR(Ring ring, int dim);
  static MatrixR identity(const Ring& ring, int dim);
  static MatrixR scalar_matrix(const RingElem& diag, int dim);

  int dim() const { return dim_; }
  const Ring& ring() const { return ring_; }

  const RingElem& at(int row, int col) const {
    return entries_[static_cast<size_t>(row) * dim_ + col];
  }
  void set(int row, int col, RingElem value);

  MatrixR operator+(const MatrixR& o) const;
  MatrixR operator-(const MatrixR& o) const;
  MatrixR operator*(const MatrixR& o) const;
  MatrixR operator-() const;
  MatrixR transpose() const;
  MatrixR scaled(const RingElem& s) const;

  bool operator==(const MatrixR& o) const;
  bool operator!=(const MatrixR& o) const { return !(*this == o); }
  bool is_zero() const;

  /// [[a, b], [c, d]] from four equally sized blocks.
  static MatrixR from_blocks(const MatrixR& a, const MatrixR& b,
                             const MatrixR& c, const MatrixR& d);
  MatrixR block(int row0, int col0, int size) const;

  void canonical_bytes(std::string& out) const;
  std::string to_string() const;

 private:
  Ring ring_;
  int dim_;
  std::vector<RingElem> entries_;
};

/// Division-free determinant: cofactor expansion (subset DP) up to dim 8,
/// Berkowitz beyond. Both are valid over rings with zero divisors.
RingElem det(const MatrixR& m);
RingElem det_cofactor(const MatrixR& m);
RingElem det_berkowitz(const MatrixR& m);

std::vector<RingElem> row_times_matrix(const std::vector<RingElem>& row,
                                       const MatrixR& m);

}  // namespace forge
