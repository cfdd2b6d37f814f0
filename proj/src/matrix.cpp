#include "forge/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace forge {

MatrixR::MatrixR(Ring ring, int dim) : ring_(std::move(ring)), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  entries_.assign(static_cast<size_t>(dim) * dim, RingElem::zero(ring_));
}

MatrixR MatrixR::identity(const Ring& ring, int dim) {
  MatrixR m(ring, dim);
  RingElem one = RingElem::one(ring);
  for (int i = 0; i < dim; i++) m.set(i, i, one);
  return m;
}

MatrixR MatrixR::scalar_matrix(const RingElem& diag, int dim) {
  MatrixR m(diag.ring(), dim);
  for (int i = 0; i < dim; i++) m.set(i, i, diag);
  return m;
}

void MatrixR::set(int row, int col, RingElem value) {
  if (value.ring() != ring_) throw_ring_mismatch("matrix set");
  entries_[static_cast<size_t>(row) * dim_ + col] = std::move(value);
}

namespace {

void require_compatible(const MatrixR& a, const MatrixR& b, const char* where) {
  if (a.ring() != b.ring()) throw_ring_mismatch(where);
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

}  // namespace

MatrixR MatrixR::operator+(const MatrixR& o) const {
  require_compatible(*this, o, "matrix add");
  MatrixR out(ring_, dim_);
  for (int i = 0; i < dim_; i++)
    for (int j = 0; j < dim_; j++) out.set(i, j, at(i, j) + o.at(i, j));
  return out;
}

MatrixR MatrixR::operator-(const MatrixR& o) const {
  require_compatible(*this, o, "matrix sub");
  MatrixR out(ring_, dim_);
  for (int i = 0; i < dim_; i++)
    for (int j = 0; j < dim_; j++) out.set(i, j, at(i, j) - o.at(i, j));
  return out;
}

MatrixR MatrixR::operator-() const {
  MatrixR out(ring_, dim_);
  for (int i = 0; i < dim_; i++)
    for (int j = 0; j < dim_; j++) out.set(i, j, -at(i, j));
  return out;
}

MatrixR MatrixR::operator*(const MatrixR& o) const {
  require_compatible(*this, o, "matrix mul");
  MatrixR out(ring_, dim_);
  for (int i = 0; i < dim_; i++) {
    for (int j = 0; j < dim_; j++) {
      RingElem acc = RingElem::zero(ring_);
      for (int k = 0; k < dim_; k++) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        acc = acc + at(i, k) * o.at(k, j);
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

MatrixR MatrixR::transpose() const {
  MatrixR out(ring_, dim_);
  for (int i = 0; i < dim_; i++)
    for (int j = 0; j < dim_; j++) out.set(j, i, at(i, j));
  return out;
}

MatrixR MatrixR::scaled(const RingElem& s) const {
  if (s.ring() != ring_) throw_ring_mismatch("matrix scale");
  MatrixR out(ring_, dim_);
  for (int i = 0; i < dim_; i++)
    for (int j = 0; j < dim_; j++) out.set(i, j, at(i, j) * s);
  return out;
}

bool MatrixR::operator==(const MatrixR& o) const {
  return ring_ == o.ring_ && dim_ == o.dim_ && entries_ == o.entries_;
}

bool MatrixR::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

MatrixR MatrixR::from_blocks(const MatrixR& a, const MatrixR& b,
                             const MatrixR& c, const MatrixR& d) {
  require_compatible(a, b, "from_blocks");
  require_compatible(a, c, "from_blocks");
  require_compatible(a, d, "from_blocks");
  const int h = a.dim();
  MatrixR out(a.ring(), 2 * h);
  for (int i = 0; i < h; i++) {
    for (int j = 0; j < h; j++) {
      out.set(i, j, a.at(i, j));
      out.set(i, j + h, b.at(i, j));
      out.set(i + h, j, c.at(i, j));
      out.set(i + h, j + h, d.at(i, j));
    }
  }
  return out;
}

MatrixR MatrixR::block(int row0, int col0, int size) const {
  if (row0 + size > dim_ || col0 + size > dim_)
    throw std::invalid_argument("block: out of range");
  MatrixR out(ring_, size);
  for (int i = 0; i < size; i++)
    for (int j = 0; j < size; j++) out.set(i, j, at(row0 + i, col0 + j));
  return out;
}

void MatrixR::canonical_bytes(std::string& out) const {
  for (const auto& e : entries_) e.canonical_bytes(out);
}

std::string MatrixR::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; i++) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < dim_; j++) os << at(i, j).to_string() << (j + 1 < dim_ ? ", " : "");
    os << (i + 1 < dim_ ? "\n" : "]");
  }
  return os.str();
}

RingElem det_cofactor(const MatrixR& m) {
  const int n = m.dim();
  if (n > 8) throw std::invalid_argument("det_cofactor: dim > 8");
  const Ring& r = m.ring();
  // f[S] = signed minor over the first popcount(S) rows and column set S.
  std::vector<RingElem> f(size_t(1) << n, RingElem::zero(r));
  f[0] = RingElem::one(r);
  for (std::uint32_t mask = 1; mask < (1u << n); mask++) {
    int row = __builtin_popcount(mask) - 1;
    RingElem acc = RingElem::zero(r);
    int seen = 0;
    for (int col = 0; col < n; col++) {
      if (!(mask & (1u << col))) continue;
      const RingElem& a = m.at(row, col);
      if (!a.is_zero()) {
        RingElem term = a * f[mask ^ (1u << col)];
        acc = (seen % 2 == 0) ? acc + term : acc - term;
      }
      seen++;
    }
    f[mask] = std::move(acc);
  }
  return f[(size_t(1) << n) - 1];
}

RingElem det_berkowitz(const MatrixR& m) {
  const int n = m.dim();
  const Ring& r = m.ring();
  const RingElem one = RingElem::one(r);

  // Characteristic polynomial coefficients via iterated Toeplitz products
  // over trailing principal submatrices: no divisions, so the result is
  // exact over rings with zero divisors.
  std::vector<RingElem> coeffs = {one, -m.at(n - 1, n - 1)};
  for (int size = 2; size <= n; size++) {
    // Bottom-right size x size submatrix partitioned as [[a, R], [C, A]],
    // where A is the previous (size-1) x (size-1) submatrix.
    const int base = n - size;
    const int k = size - 1;
    std::vector<RingElem> row(k), col(k);
    for (int i = 0; i < k; i++) {
      row[i] = m.at(base, base + 1 + i);
      col[i] = m.at(base + 1 + i, base);
    }
    // toeplitz column: (1, -a, -R C, -R A C, -R A^2 C, ...)
    std::vector<RingElem> tcol;
    tcol.push_back(one);
    tcol.push_back(-m.at(base, base));
    std::vector<RingElem> vec = col;
    for (int p = 0; p + 2 <= size; p++) {
      RingElem dotv = RingElem::zero(r);
      for (int i = 0; i < k; i++) dotv = dotv + row[i] * vec[i];
      tcol.push_back(-dotv);
      if (p + 3 > size) break;
      std::vector<RingElem> next(k, RingElem::zero(r));
      for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++)
          next[i] = next[i] + m.at(base + 1 + i, base + 1 + j) * vec[j];
      vec = std::move(next);
    }
    // coeffs <- T * coeffs, T lower-triangular Toeplitz of tcol.
    std::vector<RingElem> out(size + 1, RingElem::zero(r));
    for (size_t i = 0; i < out.size(); i++)
      for (size_t j = 0; j < coeffs.size() && j <= i; j++)
        if (i - j < tcol.size()) out[i] = out[i] + tcol[i - j] * coeffs[j];
    coeffs = std::move(out);
  }
  // det = (-1)^n * p(0)
  RingElem p0 = coeffs.back();
  return (n % 2 == 0) ? p0 : -p0;
}

RingElem det(const MatrixR& m) {
  return m.dim() <= 8 ? det_cofactor(m) : det_berkowitz(m);
}

std::vector<RingElem> row_times_matrix(const std::vector<RingElem>& row,
                                       const MatrixR& m) {
  if (static_cast<int>(row.size()) != m.dim())
    throw std::invalid_argument("row_times_matrix: length mismatch");
  std::vector<RingElem> out(row.size(), RingElem::zero(m.ring()));
  for (int j = 0; j < m.dim(); j++) {
    RingElem acc = RingElem::zero(m.ring());
    for (int i = 0; i < m.dim(); i++) {
      if (row[i].is_zero() || m.at(i, j).is_zero()) continue;
      acc = acc + row[i] * m.at(i, j);
    }
    out[j] = std::move(acc);
  }
  return out;
}

}  // namespace forge
