#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "transvect/tgraph.hpp"

namespace transvect {

enum class Twist { Identity, Involution };
const char* to_string(Twist t);

// f(x, y) = sum x_i G_ij tw(y_j). Detected forms are antisymmetric-hermitian:
// f(x, y) = -tw(f(y, x)), alternating when p = 2 and the twist is trivial.
class SesquiForm {
 public:
  SesquiForm() = default;
  SesquiForm(Matrix gram, Twist twist);

  const Matrix& gram() const { return gram_; }
  Twist twist() const { return twist_; }
  const Field& field() const { return gram_.field(); }
  std::size_t dimension() const { return gram_.rows(); }

  Elem tw(Elem x) const { return twist_ == Twist::Identity ? x : field().involution(x); }
  Elem evaluate(const Vector& x, const Vector& y) const;
  // v* = f(., v)
  Covector dual(const Vector& v) const;
  bool preserved_by(const Matrix& g) const;
  bool nondegenerate() const;
  bool antisymmetric_hermitian() const;
  // A scalar e with tw(e) = -e; e * f is hermitian (or symmetric). 1 in characteristic 2.
  Elem hermitian_scalar() const;

 private:
  Matrix gram_;
  Twist twist_ = Twist::Identity;
};

struct FormDetection {
  std::optional<SesquiForm> form;
  std::optional<CycleRecord> obstruction;
  std::size_t cycle_bound = 0;        // 2D + 1
  std::size_t cycles_checked = 0;
  bool cycle_sweep_complete = false;  // every cycle up to the bound was inspected
  std::vector<Elem> scalars;          // lambda_t with v_t* = lambda_t phi_t
};

// Invariant antisymmetric-hermitian form of an irreducible set, or a cycle
// of length at most 2D+1 that rules one out.
FormDetection detect_invariant_form(const TransvectionGraph& g, Twist twist, const Budgets& budgets = {});

// Q(x) = sum_{i <= j} C_ij x_i x_j with C upper triangular.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(Matrix coeffs);

  const Matrix& coefficients() const { return c_; }
  const Field& field() const { return c_.field(); }
  std::size_t dimension() const { return c_.rows(); }

  Elem evaluate(const Vector& x) const;
  Elem polar(const Vector& x, const Vector& y) const;
  SesquiForm polarization() const;
  bool preserved_by(const Matrix& g) const;
  // +1 or -1 for a nondegenerate form in even dimension.
  int witt_sign() const;

 private:
  Matrix c_;
};

struct QuadraticDetection {
  std::optional<QuadraticForm> form;
  std::optional<std::size_t> violating;  // index of t with Q(v_t) != 1
  std::vector<Vector> vectors;           // v_t with t = 1 + v_t (x) v_t*
};

// The unique v (up to sign) with t = 1 + v (x) f(., v); NotInvariantForm if
// phi_t is not proportional to f(., v_t).
Vector form_vector(const Transvection& t, const SesquiForm& f);

QuadraticDetection recover_quadratic(const TransvectionGraph& g, const SesquiForm& f);

class RelationForm {
 public:
  RelationForm(std::vector<Vector> vectors, SesquiForm f);
  static RelationForm from_transvections(const std::vector<Transvection>& ts, const SesquiForm& f);

  const std::vector<Vector>& vectors() const { return v_; }
  Elem tilde_q(std::span<const Elem> lambda) const;
  Elem tilde_f(std::span<const Elem> lambda, std::span<const Elem> mu) const;
  // sum lambda_t v_t = 0 implies tilde_q(lambda) = 0.
  bool relation_check(std::span<const Elem> lambda) const;

 private:
  void check(std::span<const Elem> lambda) const;
  std::vector<Vector> v_;
  SesquiForm f_;
};

enum class ClassicalKind { Linear, Symplectic, Unitary, Orthogonal };
const char* to_string(ClassicalKind k);

struct TransvectiveContext {
  ClassicalKind kind = ClassicalKind::Linear;
  std::optional<SesquiForm> form;
  std::optional<QuadraticForm> quadratic;
};

bool is_transvective(const Vector& v, const TransvectiveContext& ctx);

struct Fixup {
  std::size_t i = 0, j = 0;
  Elem lambda = 0, mu = 0;
  Vector result;  // v - lambda parts[i] - mu parts[j]
};
Fixup transvective_fixup(const Vector& v, const std::vector<Vector>& parts, const TransvectiveContext& ctx);
// Nonzero transvective parts (at most four) summing to v.
std::vector<Vector> transvective_split(const Vector& v, const std::vector<Vector>& basis,
                                       const TransvectiveContext& ctx);
Vector solve_q_on_affine(const QuadraticForm& q, const Vector& w, const Subspace& h, Elem c,
                         std::uint64_t seed = 1);

SesquiForm standard_symplectic_form(const Field& field, std::size_t n);
SesquiForm standard_unitary_form(const Field& field, std::size_t n);
QuadraticForm standard_quadratic_form(const Field& field, std::size_t n, int sign);
// All transvections preserving f (symplectic or unitary).
std::vector<Transvection> form_transvections(const SesquiForm& f);
// All transvections preserving Q (characteristic 2).
std::vector<Transvection> quadratic_transvections(const QuadraticForm& q);

}  // namespace transvect
