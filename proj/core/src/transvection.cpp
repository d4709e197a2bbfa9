#include "transvect/transvection.hpp"

#include <algorithm>

namespace transvect {

Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l.inverse = !l.inverse;
  return r;
}

std::int64_t letter_code(Letter l) {
  return l.inverse ? -static_cast<std::int64_t>(l.index) - 1 : static_cast<std::int64_t>(l.index);
}

Letter letter_from_code(std::int64_t code) {
  if (code >= 0) return {static_cast<std::uint32_t>(code), false};
  return {static_cast<std::uint32_t>(-code - 1), true};
}

Transvection::Transvection(Vector v, Covector phi) {
  if (v.size() != phi.size()) fail(ErrorCode::DimensionMismatch, "v and phi differ in size");
  if (v.field() != phi.field()) fail(ErrorCode::FieldMismatch, "v and phi over different fields");
  if (v.is_zero() || phi.is_zero()) fail(ErrorCode::ZeroVector, "transvection needs nonzero v and phi");
  if (pair(phi, v) != 0) fail(ErrorCode::NotIsotropic, "phi(v) != 0");
  const Field& F = v.field();
  const Elem lead = v[v.first_nonzero()];
  v_ = scaled(v, F.inv(lead));
  phi_ = scaled(phi, lead);
}

Transvection Transvection::from_matrix(const Matrix& m) {
  if (!m.square()) fail(ErrorCode::DimensionMismatch, "transvection matrix must be square");
  const Field& F = m.field();
  const std::size_t n = m.rows();
  if (det(m) != 1) fail(ErrorCode::NotTransvection, "determinant is not 1");
  Matrix d = m - Matrix::identity(F, n);
  if (rank(d) != 1) fail(ErrorCode::NotTransvection, "rank(M - I) != 1");
  std::size_t r = 0;
  while (r < n && std::all_of(d.row(r).begin(), d.row(r).end(), [](Elem e) { return e == 0; })) ++r;
  Covector phi = d.row_as_covector(r);
  const std::size_t c = phi.first_nonzero();
  Vector v(F, n);
  const Elem iv = F.inv(phi[c]);
  for (std::size_t i = 0; i < n; ++i) v[i] = F.mul(d(i, c), iv);
  if (pair(phi, v) != 0) fail(ErrorCode::NotTransvection, "M - I is not nilpotent");
  return Transvection(std::move(v), std::move(phi));
}

Matrix Transvection::matrix() const { return Matrix::identity(field(), dimension()) + outer(v_, phi_); }

Vector Transvection::apply(const Vector& x) const {
  const Elem c = pair(phi_, x);
  if (!c) return x;
  return x + scaled(v_, c);
}

Vector Transvection::apply_inverse(const Vector& x) const {
  const Elem c = pair(phi_, x);
  if (!c) return x;
  return x - scaled(v_, c);
}

Covector Transvection::pull_back(const Covector& psi) const {
  const Elem c = pair(psi, v_);
  if (!c) return psi;
  return psi + scaled(phi_, c);
}

Transvection Transvection::inverse() const {
  Transvection t;
  t.v_ = v_;
  t.phi_ = scaled(phi_, field().neg(1));
  return t;
}

Transvection Transvection::conjugate(const Matrix& g) const { return conjugate(g, matinv(g)); }

Transvection Transvection::conjugate(const Matrix& g, const Matrix& g_inv) const {
  return Transvection(g * v_, phi_ * g_inv);
}

bool is_transvection_matrix(const Matrix& m) {
  if (!m.square()) return false;
  Matrix d = m - Matrix::identity(m.field(), m.rows());
  if (rank(d) != 1) return false;
  return det(m) == 1;
}

Matrix evaluate(const Word& w, std::span<const Transvection> gens) {
  if (gens.empty()) fail(ErrorCode::BadParameters, "empty generator list");
  Matrix r = Matrix::identity(gens[0].field(), gens[0].dimension());
  for (const auto& l : w) {
    if (l.index >= gens.size()) fail(ErrorCode::IndexMismatch, "letter out of range");
    r = r * (l.inverse ? gens[l.index].inverse().matrix() : gens[l.index].matrix());
  }
  return r;
}

Matrix evaluate(const Word& w, std::span<const Matrix> gens) {
  if (gens.empty()) fail(ErrorCode::BadParameters, "empty generator list");
  Matrix r = Matrix::identity(gens[0].field(), gens[0].rows());
  for (const auto& l : w) {
    if (l.index >= gens.size()) fail(ErrorCode::IndexMismatch, "letter out of range");
    r = r * (l.inverse ? matinv(gens[l.index]) : gens[l.index]);
  }
  return r;
}

std::vector<Matrix> matrices(std::span<const Transvection> ts) {
  std::vector<Matrix> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(t.matrix());
  return out;
}

namespace {

Vector vec(const Field& F, std::size_t n, std::initializer_list<std::pair<std::size_t, Elem>> entries) {
  Vector v(F, n);
  for (auto [i, x] : entries) v[i] = x;
  return v;
}

Covector covec(const Field& F, std::size_t n, std::initializer_list<std::pair<std::size_t, Elem>> entries) {
  Covector v(F, n);
  for (auto [i, x] : entries) v[i] = x;
  return v;
}

}  // namespace

FullFieldSet standard_full_field_set(FullFieldKind kind, std::size_t n, const Field& F) {
  const Elem lambda = F.primitive_element();
  FullFieldSet out;
  switch (kind) {
    case FullFieldKind::Linear:
    case FullFieldKind::Symplectic: {
      if (n < 2) fail(ErrorCode::UnsupportedKind, "need dimension >= 2");
      out.generators.emplace_back(vec(F, n, {{0, 1}}), covec(F, n, {{1, lambda}}));
      out.generators.emplace_back(vec(F, n, {{1, 1}}), covec(F, n, {{0, 1}}));
      out.cycle = {0, 1};
      out.weight = lambda;
      return out;
    }
    case FullFieldKind::Unitary3: {
      if (n < 3) fail(ErrorCode::UnsupportedKind, "unitary set needs dimension >= 3");
      if (!F.has_involution()) fail(ErrorCode::UnsupportedKind, "field has no involution");
      const std::uint64_t q = F.order();
      Elem eps = 0;
      for (Elem e = 1; e < q; ++e)
        if (F.involution(e) == F.neg(e)) {
          eps = e;
          break;
        }
      if (!eps) fail(ErrorCode::UnsupportedKind, "no scalar with involution(e) = -e");
      const Elem ie = F.inv(eps);
      const Elem a = F.mul(F.mul(F.mul(ie, ie), ie), lambda);  // eps^-3 lambda
      const Elem target = F.neg(F.trace_half(a));
      Elem z = q;
      for (Elem c = 0; c < q; ++c)
        if (F.mul(c, F.involution(c)) == target) {
          z = c;
          break;
        }
      if (z == q) fail(ErrorCode::UnsupportedKind, "no singular completion");
      // f(x, y) = x1 y2^t + x2 y1^t + x3 y3^t; v* = f(., v).
      auto star = [&](const Vector& v) {
        Covector c(F, n);
        c[0] = F.involution(v[1]);
        c[1] = F.involution(v[0]);
        c[2] = F.involution(v[2]);
        return c;
      };
      Vector v1 = vec(F, n, {{0, 1}});
      Vector v2 = vec(F, n, {{1, 1}});
      Vector v3 = vec(F, n, {{0, a}, {1, 1}, {2, z}});
      for (const Vector* v : {&v1, &v2, &v3}) out.generators.emplace_back(scaled(*v, eps), star(*v));
      out.cycle = {0, 1, 2};
      out.weight = lambda;
      out.epsilon = eps;
      return out;
    }
    case FullFieldKind::Orthogonal: {
      if (F.characteristic() != 2) fail(ErrorCode::UnsupportedKind, "orthogonal set needs characteristic 2");
      if (n < 4) fail(ErrorCode::UnsupportedKind, "orthogonal set needs dimension >= 4");
      // Q = x1x2 + x3x4, f(x, y) = x1y2 + x2y1 + x3y4 + x4y3.
      Vector u = vec(F, n, {{0, 1}, {1, 1}});
      Vector v = vec(F, n, {{0, lambda}, {2, 1}, {3, 1}});
      auto star = [&](const Vector& x) {
        Covector c(F, n);
        c[0] = x[1];
        c[1] = x[0];
        c[2] = x[3];
        c[3] = x[2];
        return c;
      };
      out.generators.emplace_back(u, star(u));
      out.generators.emplace_back(v, star(v));
      out.cycle = {0, 1};
      out.weight = F.mul(lambda, lambda);
      return out;
    }
  }
  fail(ErrorCode::UnsupportedKind, "unknown kind");
}

std::vector<Transvection> elementary_generators(std::size_t n, const Field& F) {
  if (n < 2) fail(ErrorCode::BadParameters, "need dimension >= 2");
  std::vector<Transvection> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out.emplace_back(Vector::unit(F, n, i), Covector::unit(F, n, i + 1));
    out.emplace_back(Vector::unit(F, n, i + 1), Covector::unit(F, n, i));
  }
  if (F.order() > 2) {
    Covector c(F, n);
    c[1] = F.primitive_element();
    out.emplace_back(Vector::unit(F, n, 0), c);
  }
  return out;
}

}  // namespace transvect
