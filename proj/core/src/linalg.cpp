#include "transvect/linalg.hpp"

#include <algorithm>

namespace transvect {

namespace {

void check_same(const Field& a, const Field& b) {
  if (a != b) fail(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}

// In-place elimination over GF(2) with rows packed into 64-bit words.
Rref rref_gf2(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::uint64_t> r(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j)) r[i] |= std::uint64_t{1} << j;
  std::vector<std::size_t> piv;
  std::size_t top = 0;
  for (std::size_t c = 0; c < n && top < m; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t s = top;
    while (s < m && !(r[s] & bit)) ++s;
    if (s == m) continue;
    std::swap(r[s], r[top]);
    for (std::size_t i = 0; i < m; ++i)
      if (i != top && (r[i] & bit)) r[i] ^= r[top];
    piv.push_back(c);
    ++top;
  }
  Matrix out(a.field(), m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = (r[i] >> j) & 1;
  return {std::move(out), std::move(piv)};
}

Rref rref_generic(const Matrix& a) {
  const Field& F = a.field();
  Matrix m = a;
  std::vector<std::size_t> piv;
  std::size_t top = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && top < rows; ++c) {
    std::size_t s = top;
    while (s < rows && m(s, c) == 0) ++s;
    if (s == rows) continue;
    if (s != top)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(s, j), m(top, j));
    const Elem iv = F.inv(m(top, c));
    for (std::size_t j = c; j < cols; ++j) m(top, j) = F.mul(m(top, j), iv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == top || m(i, c) == 0) continue;
      const Elem factor = F.neg(m(i, c));
      for (std::size_t j = c; j < cols; ++j) m(i, j) = F.add(m(i, j), F.mul(factor, m(top, j)));
    }
    piv.push_back(c);
    ++top;
  }
  return {std::move(m), std::move(piv)};
}

}  // namespace

Elem pair(const Covector& phi, const Vector& v) {
  if (phi.size() != v.size()) fail(ErrorCode::DimensionMismatch, "pairing sizes differ");
  const Field& F = v.field();
  Elem s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (phi[i] && v[i]) s = F.add(s, F.mul(phi[i], v[i]));
  return s;
}

template <class Tag>
BasicVector<Tag> operator+(const BasicVector<Tag>& a, const BasicVector<Tag>& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector sizes differ");
  BasicVector<Tag> r(a.field(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.field().add(a[i], b[i]);
  return r;
}

template <class Tag>
BasicVector<Tag> operator-(const BasicVector<Tag>& a, const BasicVector<Tag>& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector sizes differ");
  BasicVector<Tag> r(a.field(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.field().sub(a[i], b[i]);
  return r;
}

template <class Tag>
BasicVector<Tag> scaled(const BasicVector<Tag>& a, Elem c) {
  BasicVector<Tag> r(a.field(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.field().mul(a[i], c);
  return r;
}

template <class Tag>
BasicVector<Tag> normalized(const BasicVector<Tag>& a) {
  std::size_t i = a.first_nonzero();
  if (i == a.size()) return a;
  return scaled(a, a.field().inv(a[i]));
}

template Vector operator+(const Vector&, const Vector&);
template Covector operator+(const Covector&, const Covector&);
template Vector operator-(const Vector&, const Vector&);
template Covector operator-(const Covector&, const Covector&);
template Vector scaled(const Vector&, Elem);
template Covector scaled(const Covector&, Elem);
template Vector normalized(const Vector&);
template Covector normalized(const Covector&);

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), d_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), d_(std::move(data)) {
  if (d_.size() != rows * cols) fail(ErrorCode::DimensionMismatch, "matrix data size");
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] >= field.order()) fail(ErrorCode::BadParameters, "entry out of range");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Vector Matrix::column_vector(std::size_t j) const {
  Vector v(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row_as_vector(std::size_t i) const {
  return Vector(field_, std::vector<Elem>(row(i).begin(), row(i).end()));
}

Covector Matrix::row_as_covector(std::size_t i) const {
  return Covector(field_, std::vector<Elem>(row(i).begin(), row(i).end()));
}

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_same(a.field(), b.field());
  if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matmul shapes");
  const Field& F = a.field();
  Matrix c(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j)) c(i, j) = F.add(c(i, j), F.mul(x, b(k, j)));
    }
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "add shapes");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "sub shapes");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shapes");
  const Field& F = a.field();
  Vector r(F, a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) && v[j]) s = F.add(s, F.mul(a(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

Covector operator*(const Covector& phi, const Matrix& a) {
  if (a.rows() != phi.size()) fail(ErrorCode::DimensionMismatch, "covector-matrix shapes");
  const Field& F = a.field();
  Covector r(F, a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Elem s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, j) && phi[i]) s = F.add(s, F.mul(phi[i], a(i, j)));
    r[j] = s;
  }
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix map_entries(const Matrix& a, Elem (Field::*fn)(Elem) const) {
  Matrix t = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(i, j) = (a.field().*fn)(a(i, j));
  return t;
}

Matrix outer(const Vector& v, const Covector& phi) {
  const Field& F = v.field();
  Matrix m(F, v.size(), phi.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < phi.size(); ++j) m(i, j) = F.mul(v[i], phi[j]);
  return m;
}

Rref rref(const Matrix& a) {
  if (a.field().valid() && a.field().order() == 2 && a.cols() <= 64) return rref_gf2(a);
  return rref_generic(a);
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Elem det(const Matrix& a) {
  if (!a.square()) fail(ErrorCode::DimensionMismatch, "det of non-square matrix");
  const Field& F = a.field();
  Matrix m = a;
  const std::size_t n = m.rows();
  Elem d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t s = c;
    while (s < n && m(s, c) == 0) ++s;
    if (s == n) return 0;
    if (s != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(s, j), m(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, m(c, c));
    const Elem iv = F.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Elem factor = F.neg(F.mul(m(i, c), iv));
      for (std::size_t j = c; j < n; ++j) m(i, j) = F.add(m(i, j), F.mul(factor, m(c, j)));
    }
  }
  return d;
}

Matrix matinv(const Matrix& a) {
  if (!a.square()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref_generic(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) fail(ErrorCode::Singular, "matrix is singular");
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

Subspace::Subspace(Field field, std::size_t ambient) : n_(ambient), basis_(std::move(field), 0, ambient) {}

Subspace Subspace::whole(const Field& field, std::size_t n) { return span(Matrix::identity(field, n)); }

Subspace Subspace::span(const Matrix& rows) {
  Rref r = rref(rows);
  Subspace s(rows.field(), rows.cols());
  const std::size_t k = r.pivots.size();
  Matrix b(rows.field(), k, rows.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = r.reduced(i, j);
  s.basis_ = std::move(b);
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Elem> Subspace::basis_row(std::size_t i) const {
  auto r = basis_.row(i);
  return {r.begin(), r.end()};
}

std::vector<Elem> Subspace::reduce(std::span<const Elem> x) const {
  if (x.size() != n_) fail(ErrorCode::DimensionMismatch, "reduce size");
  const Field& F = field();
  std::vector<Elem> r(x.begin(), x.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (!c) continue;
    const Elem nc = F.neg(c);
    for (std::size_t j = pivots_[i]; j < n_; ++j)
      if (basis_(i, j)) r[j] = F.add(r[j], F.mul(nc, basis_(i, j)));
  }
  return r;
}

bool Subspace::contains(std::span<const Elem> x) const {
  auto r = reduce(x);
  return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::vector<Elem> Subspace::coordinates(std::span<const Elem> x) const {
  if (!contains(x)) fail(ErrorCode::NoSolution, "vector outside subspace");
  std::vector<Elem> c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = x[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (n_ != other.n_) fail(ErrorCode::DimensionMismatch, "subspace ambient differs");
  Matrix m(field(), dim() + other.dim(), n_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = basis_(i, j);
  for (std::size_t i = 0; i < other.dim(); ++i)
    for (std::size_t j = 0; j < n_; ++j) m(dim() + i, j) = other.basis_(i, j);
  return span(m);
}

Subspace Subspace::perp() const { return kernel(basis_); }

Subspace Subspace::intersect(const Subspace& other) const {
  if (n_ != other.n_) fail(ErrorCode::DimensionMismatch, "subspace ambient differs");
  // Stack the constraints of both and take the common solutions.
  Subspace a = perp(), b = other.perp();
  return a.sum(b).perp();
}

std::vector<Elem> Subspace::least_nonzero() const {
  if (dim() == 0) fail(ErrorCode::NotFound, "zero subspace");
  Matrix rev(field(), dim(), n_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < n_; ++j) rev(i, j) = basis_(i, n_ - 1 - j);
  Rref r = rref(rev);
  const std::size_t last = r.pivots.size() - 1;
  std::vector<Elem> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = r.reduced(last, n_ - 1 - j);
  return out;
}

std::vector<Elem> Subspace::element(std::uint64_t code) const {
  const Field& F = field();
  const std::uint64_t q = F.order();
  std::vector<Elem> out(n_, 0);
  for (std::size_t i = 0; i < dim() && code; ++i) {
    const Elem c = static_cast<Elem>(code % q);
    code /= q;
    if (!c) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (basis_(i, j)) out[j] = F.add(out[j], F.mul(c, basis_(i, j)));
  }
  return out;
}

Subspace kernel(const Matrix& a) {
  Rref r = rref(a);
  const Field& F = a.field();
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Elem>> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = F.neg(r.reduced(i, free));
    gens.push_back(std::move(x));
  }
  Matrix m(F, gens.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gens[i][j];
  return Subspace::span(m);
}

Subspace image(const Matrix& a) { return Subspace::span(transpose(a)); }

Solution solve(const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "solve rhs size");
  const std::size_t n = a.cols();
  Matrix aug(a.field(), a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == n) fail(ErrorCode::NoSolution, "inconsistent system");
  std::vector<Elem> x(n, 0);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, n);
  return {std::move(x), kernel(a)};
}

std::uint64_t vector_code(std::span<const Elem> x, std::uint64_t q) {
  std::uint64_t c = 0;
  for (std::size_t i = x.size(); i-- > 0;) c = c * q + x[i];
  return c;
}

std::vector<Elem> vector_from_code(std::uint64_t code, std::size_t n, std::uint64_t q) {
  std::vector<Elem> x(n);
  for (auto& e : x) {
    e = static_cast<Elem>(code % q);
    code /= q;
  }
  return x;
}

}  // namespace transvect
