#include "transvect/forms.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace transvect {

const char* to_string(Twist t) { return t == Twist::Identity ? "identity" : "involution"; }

const char* to_string(ClassicalKind k) {
  switch (k) {
    case ClassicalKind::Linear: return "linear";
    case ClassicalKind::Symplectic: return "symplectic";
    case ClassicalKind::Unitary: return "unitary";
    case ClassicalKind::Orthogonal: return "orthogonal";
  }
  return "unknown";
}

SesquiForm::SesquiForm(Matrix gram, Twist twist) : gram_(std::move(gram)), twist_(twist) {
  if (!gram_.square()) fail(ErrorCode::DimensionMismatch, "Gram matrix must be square");
  if (twist_ == Twist::Involution && !gram_.field().has_involution())
    fail(ErrorCode::NoInvolution, "field " + gram_.field().name() + " has no involution");
}

Elem SesquiForm::evaluate(const Vector& x, const Vector& y) const {
  const Field& F = field();
  const std::size_t n = dimension();
  Elem s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!y[j]) continue;
    Elem col = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] && gram_(i, j)) col = F.add(col, F.mul(x[i], gram_(i, j)));
    s = F.add(s, F.mul(col, tw(y[j])));
  }
  return s;
}

Covector SesquiForm::dual(const Vector& v) const {
  const Field& F = field();
  const std::size_t n = dimension();
  Covector c(F, n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem s = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (gram_(i, j) && v[j]) s = F.add(s, F.mul(gram_(i, j), tw(v[j])));
    c[i] = s;
  }
  return c;
}

bool SesquiForm::preserved_by(const Matrix& g) const {
  Matrix tg = twist_ == Twist::Identity ? g : map_entries(g, &Field::involution);
  return transpose(g) * gram_ * tg == gram_;
}

bool SesquiForm::nondegenerate() const { return rank(gram_) == dimension(); }

bool SesquiForm::antisymmetric_hermitian() const {
  const Field& F = field();
  const std::size_t n = dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (F.add(gram_(i, j), tw(gram_(j, i))) != 0) return false;
  if (F.characteristic() == 2 && twist_ == Twist::Identity)
    for (std::size_t i = 0; i < n; ++i)
      if (gram_(i, i)) return false;
  return true;
}

Elem SesquiForm::hermitian_scalar() const {
  const Field& F = field();
  if (F.characteristic() == 2) return 1;
  for (Elem e = 1; e < F.order(); ++e)
    if (tw(e) == F.neg(e)) return e;
  fail(ErrorCode::NotFound, "no scalar with tw(e) = -e");
}

namespace {

CycleRecord closed_walk(const TransvectionGraph& g, std::vector<std::size_t> walk) {
  auto c = canonical_rotation(std::move(walk));
  return {c, walk_weight(g, c)};
}

Elem cycle_defect(const TransvectionGraph& g, const std::vector<std::size_t>& c, Twist twist) {
  return twist == Twist::Identity ? symplectic_defect(g, c) : unitary_defect(g, c);
}

// Closed walk 0 ->(tree) t -> s ->(shortest) 0, and 0 ->(tree) s ->(shortest) 0.
std::vector<CycleRecord> tree_cycles(const TransvectionGraph& g, std::size_t t, std::size_t s) {
  auto out_t = shortest_path(g, 0, t);
  auto out_s = shortest_path(g, 0, s);
  auto back = shortest_path(g, s, 0);
  std::vector<CycleRecord> res;
  std::vector<std::size_t> a = out_t;
  a.insert(a.end(), back.begin(), back.end());
  a.pop_back();
  res.push_back(closed_walk(g, a));
  if (s != 0) {
    std::vector<std::size_t> b = out_s;
    b.insert(b.end(), back.begin() + 1, back.end());
    b.pop_back();
    res.push_back(closed_walk(g, b));
  }
  return res;
}

}  // namespace

FormDetection detect_invariant_form(const TransvectionGraph& g, Twist twist, const Budgets& budgets) {
  const Field& F = g.field();
  if (twist == Twist::Involution && !F.has_involution())
    fail(ErrorCode::NoInvolution, "field " + F.name() + " has no involution");
  if (!is_irreducible(g).irreducible) fail(ErrorCode::NotIrreducible, "form detection needs an irreducible set");
  FormDetection out;
  const std::size_t D = *directed_diameter(g);
  out.cycle_bound = 2 * D + 1;
  const std::size_t sweep = std::min<std::size_t>(out.cycle_bound, 8);
  try {
    for_each_cycle(g, sweep, budgets.walks, [&](const CycleRecord& c) {
      ++out.cycles_checked;
      if (cycle_defect(g, c.vertices, twist) != 0) {
        out.obstruction = c;
        return false;
      }
      return true;
    });
    out.cycle_sweep_complete = sweep == out.cycle_bound && !out.obstruction;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
  }
  if (out.obstruction) return out;

  auto tw = [&](Elem x) { return twist == Twist::Identity ? x : F.involution(x); };
  auto report = [&](std::size_t t, std::size_t s) {
    for (auto& c : tree_cycles(g, t, s))
      if (cycle_defect(g, c.vertices, twist) != 0) {
        out.obstruction = c;
        return;
      }
    throw std::logic_error("inconsistent scalars without a non-conforming tree cycle");
  };

  // lambda_t phi_t(v_s) + lambda_s tw(phi_s(v_t)) = 0, propagated along the BFS tree.
  const std::size_t k = g.size();
  std::vector<Elem> lambda(k, 0);
  lambda[0] = 1;
  std::vector<bool> done(k, false);
  done[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t t = queue.front();
    queue.pop_front();
    for (auto s : g.successors(t)) {
      if (done[s]) continue;
      if (g.pairing(s, t) == 0) {
        report(t, s);
        return out;
      }
      lambda[s] = F.neg(F.div(F.mul(lambda[t], g.pairing(t, s)), tw(g.pairing(s, t))));
      done[s] = true;
      queue.push_back(s);
    }
  }
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t s = 0; s < k; ++s) {
      Elem lhs = F.add(F.mul(lambda[t], g.pairing(t, s)), F.mul(lambda[s], tw(g.pairing(s, t))));
      if (lhs == 0) continue;
      if (g.pairing(t, s)) report(t, s);
      else report(s, t);
      return out;
    }

  // v_t* = lambda_t phi_t extended semilinearly from a basis of v_t's.
  const std::size_t n = g.dimension();
  std::vector<std::size_t> basis;
  {
    Subspace acc(F, n);
    for (std::size_t t = 0; t < k && basis.size() < n; ++t) {
      if (acc.contains(g.vertex(t).v())) continue;
      basis.push_back(t);
      acc = acc.sum(Subspace::span(Matrix::from_rows(F, {g.vertex(t).v().values()})));
    }
  }
  Matrix P(F, n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < n; ++i) P(i, b) = g.vertex(basis[b]).v()[i];
  Matrix Pinv = matinv(P);
  Matrix gram(F, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // e_j = sum_b Pinv(b, j) v_b
    for (std::size_t b = 0; b < n; ++b) {
      const Elem x = Pinv(b, j);
      if (!x) continue;
      const Elem c = F.mul(tw(x), lambda[basis[b]]);
      const Covector& phi = g.vertex(basis[b]).phi();
      for (std::size_t i = 0; i < n; ++i) gram(i, j) = F.add(gram(i, j), F.mul(c, phi[i]));
    }
  }
  SesquiForm f(gram, twist);
  if (!f.antisymmetric_hermitian() || !f.nondegenerate())
    throw std::logic_error("constructed Gram matrix is not antisymmetric-hermitian");
  for (const auto& t : g.vertices())
    if (!f.preserved_by(t.matrix())) throw std::logic_error("constructed form is not invariant");
  out.form = f;
  out.scalars = lambda;
  return out;
}

QuadraticForm::QuadraticForm(Matrix coeffs) : c_(std::move(coeffs)) {
  if (!c_.square()) fail(ErrorCode::DimensionMismatch, "quadratic coefficients must be square");
  for (std::size_t i = 0; i < c_.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (c_(i, j)) fail(ErrorCode::BadParameters, "quadratic coefficients must be upper triangular");
}

Elem QuadraticForm::evaluate(const Vector& x) const {
  const Field& F = field();
  const std::size_t n = dimension();
  Elem s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = i; j < n; ++j)
      if (c_(i, j) && x[j]) s = F.add(s, F.mul(c_(i, j), F.mul(x[i], x[j])));
  }
  return s;
}

Elem QuadraticForm::polar(const Vector& x, const Vector& y) const {
  const Field& F = field();
  return F.sub(F.sub(evaluate(x + y), evaluate(x)), evaluate(y));
}

SesquiForm QuadraticForm::polarization() const { return SesquiForm(c_ + transpose(c_), Twist::Identity); }

bool QuadraticForm::preserved_by(const Matrix& g) const {
  // Q o g = Q iff the polar forms agree and Q(g e_i) = Q(e_i) for every i.
  if (!polarization().preserved_by(g)) return false;
  const std::size_t n = dimension();
  for (std::size_t i = 0; i < n; ++i)
    if (evaluate(g.column_vector(i)) != c_(i, i)) return false;
  return true;
}

int QuadraticForm::witt_sign() const {
  const Field& F = field();
  const std::size_t n = dimension();
  if (n % 2) fail(ErrorCode::BadParameters, "Witt sign needs even dimension");
  SesquiForm f = polarization();
  if (!f.nondegenerate()) fail(ErrorCode::Singular, "polar form is degenerate");
  if (F.characteristic() != 2) {
    // Count singular vectors: (q^m - e)(q^(m-1) + e) nonzero ones for sign e.
    std::uint64_t total = ipow(F.order(), static_cast<std::uint32_t>(n));
    if (total > (1u << 22)) fail(ErrorCode::CapExceeded, "Witt sign by counting exceeds budget");
    std::uint64_t singular = 0;
    for (std::uint64_t code = 1; code < total; ++code)
      if (evaluate(Vector(F, vector_from_code(code, n, F.order()))) == 0) ++singular;
    const std::uint64_t q = F.order();
    const std::uint32_t m = static_cast<std::uint32_t>(n / 2);
    return singular == (ipow(q, m) - 1) * (ipow(q, m - 1) + 1) ? 1 : -1;
  }
  // Arf invariant over a symplectic basis.
  std::vector<Vector> rest;
  for (std::size_t i = 0; i < n; ++i) rest.push_back(Vector::unit(F, n, i));
  Elem arf = 0;
  while (!rest.empty()) {
    Vector a = rest.front();
    rest.erase(rest.begin());
    std::size_t bi = 0;
    while (bi < rest.size() && f.evaluate(a, rest[bi]) == 0) ++bi;
    if (bi == rest.size()) throw std::logic_error("degenerate polar form in Arf computation");
    Vector b = scaled(rest[bi], F.inv(f.evaluate(a, rest[bi])));
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(bi));
    for (auto& x : rest) x = x - scaled(a, f.evaluate(x, b)) + scaled(b, f.evaluate(x, a));
    arf = F.add(arf, F.mul(evaluate(a), evaluate(b)));
  }
  return F.absolute_trace(arf) == 0 ? 1 : -1;
}

Vector form_vector(const Transvection& t, const SesquiForm& f) {
  const Field& F = f.field();
  if (f.twist() != Twist::Identity || F.characteristic() != 2)
    fail(ErrorCode::WrongCharacteristic, "form vectors need an alternating form in characteristic 2");
  Covector vs = f.dual(t.v());
  const std::size_t i = vs.first_nonzero();
  if (i == vs.size()) fail(ErrorCode::NotInvariantForm, "v_t lies in the radical");
  const Elem c = F.div(t.phi()[i], vs[i]);
  if (scaled(vs, c) != t.phi()) fail(ErrorCode::NotInvariantForm, "phi_t is not proportional to f(., v_t)");
  return scaled(t.v(), F.sqrt2(c));
}

QuadraticDetection recover_quadratic(const TransvectionGraph& g, const SesquiForm& f) {
  const Field& F = g.field();
  if (F.characteristic() != 2) fail(ErrorCode::WrongCharacteristic, "quadratic recovery needs characteristic 2");
  if (f.twist() != Twist::Identity || !f.antisymmetric_hermitian())
    fail(ErrorCode::NotInvariantForm, "form is not alternating");
  for (const auto& t : g.vertices())
    if (!f.preserved_by(t.matrix())) fail(ErrorCode::NotInvariantForm, "form is not invariant");
  if (!is_irreducible(g).irreducible) fail(ErrorCode::NotIrreducible, "quadratic recovery needs an irreducible set");
  const std::size_t n = g.dimension();
  QuadraticDetection out;
  for (const auto& t : g.vertices()) out.vectors.push_back(form_vector(t, f));

  std::vector<std::size_t> basis;
  Subspace acc(F, n);
  for (std::size_t t = 0; t < out.vectors.size() && basis.size() < n; ++t) {
    if (acc.contains(out.vectors[t])) continue;
    basis.push_back(t);
    acc = acc.sum(Subspace::span(Matrix::from_rows(F, {out.vectors[t].values()})));
  }
  // Diagonal d_i from Q(b) = sum d_i b_i^2 + sum_{i<j} G_ij b_i b_j = 1.
  const Matrix& G = f.gram();
  Matrix M(F, n, n);
  std::vector<Elem> rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector& b = out.vectors[basis[k]];
    Elem off = 0;
    for (std::size_t i = 0; i < n; ++i) {
      M(k, i) = F.mul(b[i], b[i]);
      for (std::size_t j = i + 1; j < n; ++j) off = F.add(off, F.mul(G(i, j), F.mul(b[i], b[j])));
    }
    rhs[k] = F.sub(1, off);
  }
  Solution d = solve(M, rhs);
  Matrix C(F, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    C(i, i) = d.x[i];
    for (std::size_t j = i + 1; j < n; ++j) C(i, j) = G(i, j);
  }
  QuadraticForm q(C);
  for (std::size_t t = 0; t < out.vectors.size(); ++t)
    if (q.evaluate(out.vectors[t]) != 1) {
      out.violating = t;
      return out;
    }
  out.form = q;
  return out;
}

RelationForm::RelationForm(std::vector<Vector> vectors, SesquiForm f) : v_(std::move(vectors)), f_(std::move(f)) {}

RelationForm RelationForm::from_transvections(const std::vector<Transvection>& ts, const SesquiForm& f) {
  std::vector<Vector> vs;
  for (const auto& t : ts) vs.push_back(form_vector(t, f));
  return RelationForm(std::move(vs), f);
}

void RelationForm::check(std::span<const Elem> lambda) const {
  if (lambda.size() != v_.size()) fail(ErrorCode::IndexMismatch, "coefficient count differs from T");
}

Elem RelationForm::tilde_q(std::span<const Elem> lambda) const {
  check(lambda);
  const Field& F = f_.field();
  Elem s = 0;
  for (std::size_t t = 0; t < v_.size(); ++t) {
    s = F.add(s, F.mul(lambda[t], lambda[t]));
    for (std::size_t u = t + 1; u < v_.size(); ++u)
      s = F.add(s, F.mul(F.mul(lambda[t], lambda[u]), f_.evaluate(v_[t], v_[u])));
  }
  return s;
}

Elem RelationForm::tilde_f(std::span<const Elem> lambda, std::span<const Elem> mu) const {
  check(lambda);
  check(mu);
  const Field& F = f_.field();
  Elem s = 0;
  for (std::size_t t = 0; t < v_.size(); ++t)
    for (std::size_t u = 0; u < v_.size(); ++u)
      if (lambda[t] && mu[u]) s = F.add(s, F.mul(F.mul(lambda[t], mu[u]), f_.evaluate(v_[t], v_[u])));
  return s;
}

bool RelationForm::relation_check(std::span<const Elem> lambda) const {
  check(lambda);
  const Field& F = f_.field();
  Vector sum(F, f_.dimension());
  for (std::size_t t = 0; t < v_.size(); ++t) sum = sum + scaled(v_[t], lambda[t]);
  if (!sum.is_zero()) return true;
  return tilde_q(lambda) == 0;
}

namespace {

const SesquiForm& need_form(const TransvectiveContext& ctx) {
  if (!ctx.form) fail(ErrorCode::MissingForm, std::string(to_string(ctx.kind)) + " kind needs a form");
  return *ctx.form;
}

const QuadraticForm& need_quadratic(const TransvectiveContext& ctx) {
  if (!ctx.quadratic) fail(ErrorCode::MissingForm, "orthogonal kind needs a quadratic form");
  return *ctx.quadratic;
}

}  // namespace

bool is_transvective(const Vector& v, const TransvectiveContext& ctx) {
  if (v.is_zero()) return false;
  switch (ctx.kind) {
    case ClassicalKind::Linear:
    case ClassicalKind::Symplectic:
      return true;
    case ClassicalKind::Unitary:
      return need_form(ctx).evaluate(v, v) == 0;
    case ClassicalKind::Orthogonal:
      return need_quadratic(ctx).evaluate(v) != 0;
  }
  return false;
}

Fixup transvective_fixup(const Vector& v, const std::vector<Vector>& parts, const TransvectiveContext& ctx) {
  if (parts.empty()) fail(ErrorCode::BadParameters, "fixup needs at least one part");
  for (const auto& p : parts)
    if (!is_transvective(p, ctx)) fail(ErrorCode::BadParameters, "parts must be transvective");
  Fixup out{0, 0, 0, 0, v};
  if (is_transvective(v, ctx)) return out;
  const Field& F = v.field();
  const std::uint64_t q = F.order();
  switch (ctx.kind) {
    case ClassicalKind::Linear:
    case ClassicalKind::Symplectic:
      fail(ErrorCode::ZeroVector, "zero vector cannot be corrected");
    case ClassicalKind::Unitary: {
      const SesquiForm& f = need_form(ctx);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (f.evaluate(parts[i], v) == 0) continue;
        for (Elem l = 1; l < q; ++l) {
          Vector w = v - scaled(parts[i], l);
          if (is_transvective(w, ctx)) return {i, i, l, 0, w};
        }
      }
      break;
    }
    case ClassicalKind::Orthogonal: {
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (Elem l = 1; l < q; ++l) {
          Vector w = v - scaled(parts[i], l);
          if (is_transvective(w, ctx)) return {i, i, l, 0, w};
        }
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
          Vector w = v - parts[i] - parts[j];
          if (is_transvective(w, ctx)) return {i, j, 1, 1, w};
        }
      break;
    }
  }
  fail(ErrorCode::NoWitness, "no correction among the given parts");
}

std::vector<Vector> transvective_split(const Vector& v, const std::vector<Vector>& basis,
                                       const TransvectiveContext& ctx) {
  const Field& F = v.field();
  const std::size_t n = v.size();
  if (basis.size() != n) fail(ErrorCode::DimensionMismatch, "basis size differs from dimension");
  for (const auto& b : basis)
    if (!is_transvective(b, ctx)) fail(ErrorCode::BadParameters, "basis vectors must be transvective");
  if (!is_transvective(v, ctx) && v.is_zero()) fail(ErrorCode::ZeroVector, "cannot split the zero vector");
  Matrix B(F, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) B(i, j) = basis[j][i];
  if (rank(B) != n) fail(ErrorCode::Singular, "basis is not a basis");
  auto coords = [&](const Vector& x) { return solve(B, x.entries()).x; };
  auto terms = [&](const Vector& x) {
    auto c = coords(x);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i)
      if (c[i]) out.push_back(scaled(basis[i], c[i]));
    return out;
  };
  auto support = terms(v);
  const std::size_t k = support.size();
  const std::size_t half = (k + 1) / 2;
  std::vector<Vector> first(support.begin(), support.begin() + static_cast<std::ptrdiff_t>(half));
  Vector u1(F, n), u2(F, n);
  for (std::size_t i = 0; i < k; ++i) (i < half ? u1 : u2) = (i < half ? u1 : u2) + support[i];

  std::vector<Vector> out;
  Fixup f1 = transvective_fixup(u1, first, ctx);
  out.push_back(f1.result);
  Vector moved = scaled(first[f1.i], f1.lambda);
  if (f1.j != f1.i || f1.mu) moved = moved + scaled(first[f1.j], f1.mu);
  u2 = u2 + moved;
  if (!u2.is_zero()) {
    auto second = terms(u2);
    Fixup f2 = transvective_fixup(u2, second, ctx);
    out.push_back(f2.result);
    out.push_back(scaled(second[f2.i], f2.lambda));
    if (f2.j != f2.i || f2.mu) out.push_back(scaled(second[f2.j], f2.mu));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Vector& x) { return x.is_zero(); }), out.end());
  return out;
}

Vector solve_q_on_affine(const QuadraticForm& q, const Vector& w, const Subspace& h, Elem c, std::uint64_t seed) {
  const Field& F = q.field();
  const std::size_t n = q.dimension();
  if (h.ambient() != n || w.size() != n) fail(ErrorCode::DimensionMismatch, "affine subspace dimension");
  if (h.dim() + 2 != n) fail(ErrorCode::BadParameters, "subspace must have codimension 2");
  const std::uint64_t qq = F.order();
  std::uint64_t points = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    points *= qq;
    if (points > (std::uint64_t{1} << 20)) {
      exhaustive = false;
      break;
    }
  }
  if (exhaustive) {
    for (std::uint64_t code = 0; code < points; ++code) {
      Vector x = w + Vector(F, h.element(code));
      if (q.evaluate(x) == c) return x;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, qq - 1);
    for (int trial = 0; trial < 1'000'000; ++trial) {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < h.dim(); ++i) code = code * qq + pick(rng);
      Vector x = w + Vector(F, h.element(code));
      if (q.evaluate(x) == c) return x;
    }
  }
  fail(ErrorCode::NotFound, "no point of w + H takes the requested value");
}

SesquiForm standard_symplectic_form(const Field& F, std::size_t n) {
  if (n % 2) fail(ErrorCode::BadParameters, "symplectic form needs even dimension");
  Matrix g(F, n, n);
  for (std::size_t i = 0; i < n; i += 2) {
    g(i, i + 1) = 1;
    g(i + 1, i) = F.neg(1);
  }
  return SesquiForm(g, Twist::Identity);
}

SesquiForm standard_unitary_form(const Field& F, std::size_t n) {
  if (!F.has_involution()) fail(ErrorCode::NoInvolution, "unitary form needs an involution");
  Matrix h(F, n, n);
  for (std::size_t i = 0; i + 1 < n; i += 2) h(i, i + 1) = h(i + 1, i) = 1;
  if (n % 2) h(n - 1, n - 1) = 1;
  Elem eps = 1;
  if (F.characteristic() != 2)
    for (Elem e = 1; e < F.order(); ++e)
      if (F.involution(e) == F.neg(e)) {
        eps = e;
        break;
      }
  Matrix g(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = F.mul(eps, h(i, j));
  return SesquiForm(g, Twist::Involution);
}

QuadraticForm standard_quadratic_form(const Field& F, std::size_t n, int sign) {
  if (n % 2 || n == 0) fail(ErrorCode::BadParameters, "quadratic form needs positive even dimension");
  Matrix c(F, n, n);
  for (std::size_t i = 0; i < n; i += 2) c(i, i + 1) = 1;
  if (sign < 0) {
    // x^2 + xy + a y^2 anisotropic on the last pair.
    Elem a = 0;
    for (Elem e = 1; e < F.order(); ++e) {
      bool has_root = false;
      for (Elem x = 0; x < F.order() && !has_root; ++x)
        if (F.add(F.add(F.mul(x, x), x), e) == 0) has_root = true;
      if (!has_root) {
        a = e;
        break;
      }
    }
    c(n - 2, n - 2) = 1;
    c(n - 1, n - 1) = a;
  }
  return QuadraticForm(c);
}

std::vector<Transvection> form_transvections(const SesquiForm& f) {
  const Field& F = f.field();
  const std::size_t n = f.dimension();
  const std::uint64_t total = ipow(F.order(), static_cast<std::uint32_t>(n));
  if (total > (std::uint64_t{1} << 22)) fail(ErrorCode::CapExceeded, "too many vectors to list transvections");
  std::vector<Transvection> out;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vector v(F, vector_from_code(code, n, F.order()));
    if (v[v.first_nonzero()] != 1) continue;
    if (f.evaluate(v, v) != 0) continue;
    Covector vs = f.dual(v);
    for (Elem c = 1; c < F.order(); ++c) {
      if (f.tw(c) != c) continue;
      out.emplace_back(v, scaled(vs, c));
    }
  }
  return out;
}

std::vector<Transvection> quadratic_transvections(const QuadraticForm& q) {
  const Field& F = q.field();
  if (F.characteristic() != 2) fail(ErrorCode::WrongCharacteristic, "orthogonal transvections need characteristic 2");
  const std::size_t n = q.dimension();
  const std::uint64_t total = ipow(F.order(), static_cast<std::uint32_t>(n));
  if (total > (std::uint64_t{1} << 22)) fail(ErrorCode::CapExceeded, "too many vectors to list transvections");
  SesquiForm f = q.polarization();
  std::vector<Transvection> out;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vector v(F, vector_from_code(code, n, F.order()));
    if (v[v.first_nonzero()] != 1) continue;
    const Elem qv = q.evaluate(v);
    if (!qv) continue;
    out.emplace_back(v, scaled(f.dual(v), F.inv(qv)));
  }
  return out;
}

}  // namespace transvect
