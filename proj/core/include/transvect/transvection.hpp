#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "transvect/linalg.hpp"

namespace transvect {

// A letter of a word over a generating list: T[index] or its inverse.
struct Letter {
  std::uint32_t index = 0;
  bool inverse = false;
  bool operator==(const Letter& o) const = default;
};
using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
// Serialized form: index for T[i], -(index + 1) for the inverse.
std::int64_t letter_code(Letter l);
Letter letter_from_code(std::int64_t code);

// t = 1 + v (x) phi with phi(v) = 0, scaled so the first nonzero entry of v is 1.
class Transvection {
 public:
  Transvection() = default;
  Transvection(Vector v, Covector phi);
  static Transvection from_matrix(const Matrix& m);

  const Field& field() const { return v_.field(); }
  std::size_t dimension() const { return v_.size(); }
  const Vector& v() const { return v_; }
  const Covector& phi() const { return phi_; }

  Matrix matrix() const;
  Vector apply(const Vector& x) const;
  Vector apply_inverse(const Vector& x) const;
  // psi o t
  Covector pull_back(const Covector& psi) const;
  Transvection inverse() const;
  // g t g^-1
  Transvection conjugate(const Matrix& g) const;
  Transvection conjugate(const Matrix& g, const Matrix& g_inv) const;

  bool operator==(const Transvection& o) const { return v_ == o.v_ && phi_ == o.phi_; }
  bool operator!=(const Transvection& o) const { return !(*this == o); }
  bool operator<(const Transvection& o) const {
    if (v_ != o.v_) return v_ < o.v_;
    return phi_ < o.phi_;
  }

 private:
  Vector v_;
  Covector phi_;
};

bool is_transvection_matrix(const Matrix& m);
Matrix evaluate(const Word& w, std::span<const Transvection> gens);
Matrix evaluate(const Word& w, std::span<const Matrix> gens);
std::vector<Matrix> matrices(std::span<const Transvection> ts);

enum class FullFieldKind { Linear, Unitary3, Symplectic, Orthogonal };

struct FullFieldSet {
  std::vector<Transvection> generators;
  // Cycle (vertex order) whose weight is `weight`.
  std::vector<std::size_t> cycle;
  Elem weight = 0;
  Elem epsilon = 0;  // unitary scalar with involution(eps) = -eps
};

// Small transvection sets whose cycle weights generate the whole field.
FullFieldSet standard_full_field_set(FullFieldKind kind, std::size_t n, const Field& field);

// x_{i,i+1}(1), x_{i+1,i}(1) and x_{12}(lambda): generates SL_n(q).
std::vector<Transvection> elementary_generators(std::size_t n, const Field& field);

}  // namespace transvect
