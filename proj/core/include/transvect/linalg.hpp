#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "transvect/gf.hpp"

namespace transvect {

// Column vectors and row covectors share storage but are kept apart by type.
template <class Tag>
class BasicVector {
 public:
  BasicVector() = default;
  BasicVector(Field field, std::size_t n) : field_(std::move(field)), e_(n, 0) {}
  BasicVector(Field field, std::vector<Elem> entries) : field_(std::move(field)), e_(std::move(entries)) {}

  static BasicVector unit(const Field& field, std::size_t n, std::size_t i) {
    BasicVector v(field, n);
    v.e_.at(i) = 1;
    return v;
  }

  const Field& field() const { return field_; }
  std::size_t size() const { return e_.size(); }
  Elem operator[](std::size_t i) const { return e_[i]; }
  Elem& operator[](std::size_t i) { return e_[i]; }
  std::span<const Elem> entries() const { return e_; }
  const std::vector<Elem>& values() const { return e_; }
  std::vector<Elem>& values() { return e_; }

  bool is_zero() const {
    for (Elem x : e_)
      if (x) return false;
    return true;
  }
  std::size_t first_nonzero() const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i]) return i;
    return e_.size();
  }

  bool operator==(const BasicVector& o) const { return e_ == o.e_; }
  bool operator!=(const BasicVector& o) const { return e_ != o.e_; }
  bool operator<(const BasicVector& o) const { return e_ < o.e_; }

 private:
  Field field_;
  std::vector<Elem> e_;
};

struct VectorTag {};
struct CovectorTag {};
using Vector = BasicVector<VectorTag>;
using Covector = BasicVector<CovectorTag>;

// phi(v)
Elem pair(const Covector& phi, const Vector& v);

template <class Tag>
BasicVector<Tag> operator+(const BasicVector<Tag>& a, const BasicVector<Tag>& b);
template <class Tag>
BasicVector<Tag> operator-(const BasicVector<Tag>& a, const BasicVector<Tag>& b);
template <class Tag>
BasicVector<Tag> scaled(const BasicVector<Tag>& a, Elem c);
// Leading nonzero entry becomes 1. Zero stays zero.
template <class Tag>
BasicVector<Tag> normalized(const BasicVector<Tag>& a);

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data);
  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows);
  template <class Tag>
  static Matrix from_vectors(const Field& field, std::size_t n, const std::vector<BasicVector<Tag>>& rows) {
    Matrix m(field, rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {d_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) { return {d_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& data() const { return d_; }

  Vector column_vector(std::size_t j) const;
  Vector row_as_vector(std::size_t i) const;
  Covector row_as_covector(std::size_t i) const;

  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> d_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Covector operator*(const Covector& phi, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix map_entries(const Matrix& a, Elem (Field::*fn)(Elem) const);
Matrix outer(const Vector& v, const Covector& phi);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& a);
std::size_t rank(const Matrix& a);
Elem det(const Matrix& a);
Matrix matinv(const Matrix& a);

// Subspace of K^n kept as the nonzero rows of a reduced row echelon basis,
// so equality is structural. Used for vectors and covectors alike.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient);
  static Subspace whole(const Field& field, std::size_t n);
  static Subspace span(const Matrix& rows);
  template <class Tag>
  static Subspace span(const Field& field, std::size_t n, const std::vector<BasicVector<Tag>>& gens) {
    return span(Matrix::from_vectors(field, n, gens));
  }

  const Field& field() const { return basis_.field(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return n_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Elem> basis_row(std::size_t i) const;

  bool contains(std::span<const Elem> x) const;
  template <class Tag>
  bool contains(const BasicVector<Tag>& x) const { return contains(x.entries()); }
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Annihilator under the coordinate pairing sum x_i y_i.
  Subspace perp() const;

  // Canonical coset representative of x modulo this subspace.
  std::vector<Elem> reduce(std::span<const Elem> x) const;
  // Coefficients of x in basis(); NoSolution if x is outside.
  std::vector<Elem> coordinates(std::span<const Elem> x) const;
  // Smallest nonzero member under the integer code sum x_i q^(i-1).
  std::vector<Elem> least_nonzero() const;
  // Member with coefficient digits of code in base q over basis().
  std::vector<Elem> element(std::uint64_t code) const;

  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// {x : a x = 0}
Subspace kernel(const Matrix& a);
// Column space of a.
Subspace image(const Matrix& a);

struct Solution {
  std::vector<Elem> x;
  Subspace kernel;
};
// a x = b; NoSolution when inconsistent.
Solution solve(const Matrix& a, std::span<const Elem> b);

// Integer code of a coordinate tuple, first coordinate least significant.
std::uint64_t vector_code(std::span<const Elem> x, std::uint64_t q);
std::vector<Elem> vector_from_code(std::uint64_t code, std::size_t n, std::uint64_t q);

}  // namespace transvect
