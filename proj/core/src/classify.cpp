#include "transvect/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

namespace transvect {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kOrder3A6 = 1080;
constexpr std::uint64_t kOrderSL25 = 120;
// 3 * |U4(3)|; U4(3) = POmega6-(3)
constexpr std::uint64_t kOrder3POmega = 3ull * 3265920ull;

struct Checked {
  u128 v = 1;
  bool overflow = false;
  Checked& operator*=(u128 x) {
    if (overflow) return *this;
    if (x != 0 && v > ~std::uint64_t{0} / x) overflow = true;
    else v *= x;
    return *this;
  }
};

u128 upow(u128 b, std::uint64_t e) {
  Checked c;
  for (std::uint64_t i = 0; i < e; ++i) c *= b;
  return c.overflow ? u128(1) << 100 : c.v;
}

std::optional<std::uint64_t> try_order(const GroupTypeTag& tag, std::size_t n, std::uint64_t q) {
  Checked c;
  auto mul = [&](u128 x) {
    if (x > ~std::uint64_t{0}) c.overflow = true;
    c *= x;
  };
  auto fact = [&](std::size_t k) {
    for (std::size_t i = 2; i <= k; ++i) mul(i);
  };
  switch (tag.kind) {
    case TagKind::Linear:
      mul(upow(q, n * (n - 1) / 2));
      for (std::size_t i = 2; i <= n; ++i) mul(upow(q, i) - 1);
      break;
    case TagKind::Unitary: {
      std::uint64_t q0 = 1;
      while (q0 * q0 < q) ++q0;
      if (q0 * q0 != q) fail(ErrorCode::BadParameters, "unitary order needs a square field order");
      mul(upow(q0, n * (n - 1) / 2));
      for (std::size_t i = 2; i <= n; ++i) mul(i % 2 ? upow(q0, i) + 1 : upow(q0, i) - 1);
      break;
    }
    case TagKind::Symplectic: {
      if (n % 2) fail(ErrorCode::BadParameters, "symplectic order needs even dimension");
      const std::size_t m = n / 2;
      mul(upow(q, m * m));
      for (std::size_t i = 1; i <= m; ++i) mul(upow(q, 2 * i) - 1);
      break;
    }
    case TagKind::OrthogonalPlus:
    case TagKind::OrthogonalMinus: {
      if (n % 2) fail(ErrorCode::BadParameters, "orthogonal order needs even dimension");
      const std::size_t m = n / 2;
      mul(2);
      mul(upow(q, m * (m - 1)));
      mul(tag.kind == TagKind::OrthogonalPlus ? upow(q, m) - 1 : upow(q, m) + 1);
      for (std::size_t i = 1; i < m; ++i) mul(upow(q, 2 * i) - 1);
      break;
    }
    case TagKind::Monomial:
      mul(upow(tag.a, n - 1));
      fact(n);
      break;
    case TagKind::SymmetricOdd:
      fact(n + 1);
      break;
    case TagKind::SymmetricEven:
      fact(n + 2);
      break;
    default:
      fail(ErrorCode::UnsupportedTag, "no order formula for " + to_string(tag));
  }
  if (c.overflow) return std::nullopt;
  return static_cast<std::uint64_t>(c.v);
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    if (r > ~std::uint64_t{0} / i) return ~std::uint64_t{0};
    r *= i;
  }
  return r;
}

std::vector<Matrix> matrices_of(const std::vector<Transvection>& t) {
  std::vector<Matrix> out;
  out.reserve(t.size());
  for (const auto& x : t) out.push_back(x.matrix());
  return out;
}

// Leading-1 representatives of projective points, with a lookup by vector code.
struct ProjectiveSpace {
  Field F;
  std::size_t n = 0;
  std::vector<std::uint64_t> codes;
  std::unordered_map<std::uint64_t, std::uint32_t> index;

  ProjectiveSpace(const Field& field, std::size_t dim, const Budgets& budgets) : F(field), n(dim) {
    const std::uint64_t q = F.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= q;
      if (total > budgets.projective)
        fail(ErrorCode::CapExceeded, "projective space exceeds budget of " + std::to_string(budgets.projective));
    }
    // first nonzero coordinate is 1: coordinate i is 1, coordinates below i are 0
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t low = 1;
      for (std::size_t j = 0; j <= i; ++j) low *= (j == i ? 1 : q);
      std::uint64_t rest = 1;
      for (std::size_t j = i + 1; j < n; ++j) rest *= q;
      for (std::uint64_t r = 0; r < rest; ++r) codes.push_back(low + r * low * q);
    }
    std::sort(codes.begin(), codes.end());
    index.reserve(codes.size() * 2);
    for (std::uint32_t i = 0; i < codes.size(); ++i) index.emplace(codes[i], i);
  }

  Vector point(std::uint32_t i) const { return Vector(F, vector_from_code(codes[i], n, F.order())); }
  std::uint32_t locate(const Vector& x) const { return index.at(vector_code(normalized(x).entries(), F.order())); }
};

// Orbits of <gens> on a finite set, given the action as a successor function.
template <class Act>
std::vector<std::vector<std::uint32_t>> orbits(std::size_t size, std::size_t ngens, Act act) {
  std::vector<std::uint32_t> seen(size, 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < size; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> orb{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < orb.size(); ++h)
      for (std::size_t g = 0; g < ngens; ++g) {
        const std::uint32_t y = act(g, orb[h]);
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

void check_square(const std::vector<Matrix>& gens) {
  if (gens.empty()) fail(ErrorCode::DimensionMismatch, "no generators");
  for (const auto& g : gens)
    if (!g.square() || g.rows() != gens[0].rows() || g.field() != gens[0].field())
      fail(ErrorCode::DimensionMismatch, "generators must be square matrices of one size over one field");
}

void require_irreducible(const std::vector<Matrix>& gens, const Budgets& budgets) {
  std::vector<Transvection> ts;
  bool all = true;
  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    if (!is_transvection_matrix(g)) {
      all = false;
      break;
    }
    ts.push_back(Transvection::from_matrix(g));
  }
  if (all) {
    if (ts.empty() || !is_irreducible(TransvectionGraph(ts)).irreducible)
      fail(ErrorCode::NotIrreducible, "generators leave a proper subspace invariant");
    return;
  }
  // General matrices: every point must generate the whole space.
  const Field& F = gens[0].field();
  const std::size_t n = gens[0].rows();
  ProjectiveSpace P(F, n, budgets);
  for (std::uint32_t i = 0; i < P.codes.size(); ++i) {
    std::vector<Vector> basis{P.point(i)};
    Subspace s = Subspace::span(F, n, basis);
    for (std::size_t h = 0; h < basis.size() && s.dim() < n; ++h)
      for (const auto& g : gens) {
        Vector y = g * basis[h];
        if (!s.contains(y)) {
          basis.push_back(y);
          s = Subspace::span(F, n, basis);
        }
      }
    if (s.dim() < n) fail(ErrorCode::NotIrreducible, "generators leave a proper subspace invariant");
  }
}

std::uint32_t element_order(const Field& F, Elem x) {
  const std::uint64_t q1 = F.order() - 1;
  std::uint64_t best = q1;
  for (std::uint64_t d = 1; d * d <= q1; ++d) {
    if (q1 % d) continue;
    if (d < best && F.pow(x, d) == 1) best = d;
    const std::uint64_t e = q1 / d;
    if (e < best && F.pow(x, e) == 1) best = e;
  }
  return static_cast<std::uint32_t>(best);
}

bool is_classical(TagKind k) {
  return k == TagKind::Linear || k == TagKind::Unitary || k == TagKind::Symplectic ||
         k == TagKind::OrthogonalPlus || k == TagKind::OrthogonalMinus;
}

}  // namespace

std::string to_string(const GroupTypeTag& tag) {
  switch (tag.kind) {
    case TagKind::Linear: return "Linear";
    case TagKind::Unitary: return "Unitary";
    case TagKind::Symplectic: return "Symplectic";
    case TagKind::OrthogonalPlus: return "OrthogonalPlus";
    case TagKind::OrthogonalMinus: return "OrthogonalMinus";
    case TagKind::Monomial: return "Monomial(" + std::to_string(tag.a) + ")";
    case TagKind::SymmetricOdd: return "SymmetricOdd";
    case TagKind::SymmetricEven: return "SymmetricEven";
    case TagKind::Exceptional: return "Exceptional(" + tag.label + ")";
    case TagKind::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

GroupTypeTag parse_tag(std::string_view s) {
  static const std::pair<const char*, TagKind> plain[] = {
      {"Linear", TagKind::Linear},
      {"Unitary", TagKind::Unitary},
      {"Symplectic", TagKind::Symplectic},
      {"OrthogonalPlus", TagKind::OrthogonalPlus},
      {"OrthogonalMinus", TagKind::OrthogonalMinus},
      {"SymmetricOdd", TagKind::SymmetricOdd},
      {"SymmetricEven", TagKind::SymmetricEven},
      {"Undetermined", TagKind::Undetermined},
  };
  for (const auto& [name, kind] : plain)
    if (s == name) return {kind, 0, {}};
  auto inner = [&](std::string_view head) -> std::optional<std::string_view> {
    if (s.size() > head.size() + 2 && s.substr(0, head.size()) == head && s[head.size()] == '(' && s.back() == ')')
      return s.substr(head.size() + 1, s.size() - head.size() - 2);
    return std::nullopt;
  };
  if (auto a = inner("Monomial")) {
    std::uint32_t v = 0;
    for (char ch : *a) {
      if (ch < '0' || ch > '9') fail(ErrorCode::ParseError, "bad monomial parameter: " + std::string(s));
      v = v * 10 + static_cast<std::uint32_t>(ch - '0');
    }
    return {TagKind::Monomial, v, {}};
  }
  if (auto l = inner("Exceptional")) return {TagKind::Exceptional, 0, std::string(*l)};
  fail(ErrorCode::ParseError, "unknown group type: " + std::string(s));
}

std::uint64_t order_formula(const GroupTypeTag& tag, std::size_t n, std::uint64_t q) {
  if (n == 0) fail(ErrorCode::BadParameters, "dimension must be positive");
  auto o = try_order(tag, n, q);
  if (!o) fail(ErrorCode::CapExceeded, "group order exceeds 64 bits");
  return *o;
}

CayleyExploration enumerate_group(const std::vector<Matrix>& gens, std::uint64_t cap) {
  check_square(gens);
  ExploreOptions opts;
  opts.cap = cap;
  return CayleyExploration::explore(gens, opts);
}

std::vector<Transvection> build_monomial_group(std::size_t n, std::uint32_t a, const Field& F) {
  if (F.characteristic() != 2) fail(ErrorCode::BadParameters, "monomial groups need characteristic 2");
  if (a < 3 || a % 2 == 0 || (F.order() - 1) % a) fail(ErrorCode::BadParameters, "a must be odd, > 1 and divide q-1");
  if (n < 2) fail(ErrorCode::BadParameters, "dimension must be at least 2");
  const Elem zeta = F.pow(F.primitive_element(), (F.order() - 1) / a);
  std::vector<Transvection> out;
  // [[0, x^-1], [x, 0]] on axes (i, j) is 1 + (e_i + x e_j) (x) (e_i* + x^-1 e_j*)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Elem x = 1;
      for (std::uint32_t k = 0; k < a; ++k, x = F.mul(x, zeta)) {
        Vector v(F, n);
        Covector phi(F, n);
        v[i] = 1;
        v[j] = x;
        phi[i] = 1;
        phi[j] = F.inv(x);
        out.emplace_back(v, phi);
      }
    }
  return out;
}

SymmetricRep::SymmetricRep(std::size_t m) : m_(m) {
  if (m < 3) fail(ErrorCode::BadParameters, "symmetric representation needs m >= 3");
  const Field F = Field::create(2, 1);
  std::vector<Transvection> swaps;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Vector v(F, m);
    Covector phi(F, m);
    v[i] = v[i + 1] = 1;
    phi[i] = phi[i + 1] = 1;
    swaps.emplace_back(v, phi);
  }
  section_ = restrict_to_section(TransvectionGraph(swaps));
  gens_ = section_.projected();
}

Matrix SymmetricRep::rho(const std::vector<std::size_t>& perm) const {
  if (perm.size() != m_) fail(ErrorCode::DimensionMismatch, "permutation has the wrong degree");
  const Field F = Field::create(2, 1);
  Matrix p(F, m_, m_);
  std::vector<bool> hit(m_, false);
  for (std::size_t i = 0; i < m_; ++i) {
    if (perm[i] >= m_ || hit[perm[i]]) fail(ErrorCode::BadParameters, "not a permutation");
    hit[perm[i]] = true;
    p(perm[i], i) = 1;
  }
  return section_.project_matrix(p);
}

std::vector<Transvection> build_symmetric_rep(std::size_t m) {
  if (m < 5) fail(ErrorCode::BadParameters, "symmetric representation needs m >= 5");
  return SymmetricRep(m).generators();
}

namespace {

// Order of <gens>, exploring a small generating subset and adding generators only when missing.
std::optional<std::uint64_t> generated_order(const std::vector<Matrix>& gens, std::uint64_t cap) {
  std::vector<Matrix> sub(gens.begin(), gens.begin() + std::min(gens.size(), gens[0].rows()));
  std::vector<bool> used(gens.size(), false);
  for (std::size_t i = 0; i < sub.size(); ++i) used[i] = true;
  for (;;) {
    ExploreOptions eo;
    eo.cap = cap;
    eo.allow_partial = true;
    auto e = CayleyExploration::explore(sub, eo);
    if (!e.complete()) return std::nullopt;
    std::optional<std::size_t> missing;
    for (std::size_t i = 0; i < gens.size() && !missing; ++i)
      if (!used[i] && !e.index_of(gens[i])) missing = i;
    if (!missing) return e.size();
    used[*missing] = true;
    sub.push_back(gens[*missing]);
  }
}

std::vector<std::vector<Vector>> spanning_orbits(const std::vector<Matrix>& gens, std::size_t size,
                                                 const Budgets& budgets) {
  const Field& F = gens[0].field();
  const std::size_t n = gens[0].rows();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= F.order();
    if (total > budgets.projective) fail(ErrorCode::CapExceeded, "vector space exceeds projective budget");
  }
  auto orbs = orbits(total, gens.size(), [&](std::size_t g, std::uint32_t x) {
    Vector v(F, vector_from_code(x, n, F.order()));
    return static_cast<std::uint32_t>(vector_code((gens[g] * v).entries(), F.order()));
  });
  std::vector<std::vector<Vector>> out;
  for (const auto& o : orbs) {
    if (o.size() != size || o[0] == 0) continue;
    std::vector<Vector> vs;
    for (auto c : o) vs.emplace_back(F, vector_from_code(c, n, F.order()));
    if (Subspace::span(F, n, vs).dim() == n) out.push_back(std::move(vs));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Vector>> detect_symmetric_type(const std::vector<Matrix>& gens, const Budgets& budgets) {
  check_square(gens);
  if (gens[0].field().order() != 2) fail(ErrorCode::WrongField, "symmetric type is defined over GF(2)");
  require_irreducible(gens, budgets);
  auto found = spanning_orbits(gens, gens[0].rows() + 1, budgets);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::optional<MonomialStructure> detect_monomial_structure(const std::vector<Matrix>& gens, const Budgets& budgets) {
  check_square(gens);
  require_irreducible(gens, budgets);
  const Field& F = gens[0].field();
  const std::size_t n = gens[0].rows();
  ProjectiveSpace P(F, n, budgets);
  auto orbs = orbits(P.codes.size(), gens.size(),
                     [&](std::size_t g, std::uint32_t x) { return P.locate(gens[g] * P.point(x)); });
  // Orbits small enough to be part of a line set, with independent points.
  std::vector<const std::vector<std::uint32_t>*> small;
  for (const auto& o : orbs) {
    if (o.size() > n) continue;
    std::vector<Vector> vs;
    for (auto i : o) vs.push_back(P.point(i));
    if (Subspace::span(F, n, vs).dim() == o.size()) small.push_back(&o);
  }
  std::optional<std::vector<std::uint32_t>> chosen;
  std::vector<std::uint32_t> cur;
  std::uint64_t steps = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    if (chosen) return;
    if (++steps > budgets.walks) fail(ErrorCode::CapExceeded, "monomial search exceeds walk budget");
    if (cur.size() == n) {
      chosen = cur;
      return;
    }
    for (std::size_t k = from; k < small.size() && !chosen; ++k) {
      if (cur.size() + small[k]->size() > n) continue;
      const std::size_t mark = cur.size();
      cur.insert(cur.end(), small[k]->begin(), small[k]->end());
      std::vector<Vector> vs;
      for (auto i : cur) vs.push_back(P.point(i));
      if (Subspace::span(F, n, vs).dim() == cur.size()) dfs(k + 1);
      cur.resize(mark);
    }
  };
  dfs(0);
  if (!chosen) return std::nullopt;

  std::sort(chosen->begin(), chosen->end());
  MonomialStructure ms;
  std::map<std::uint32_t, std::size_t> line_of;
  for (auto i : *chosen) {
    line_of[i] = ms.lines.size();
    ms.lines.push_back(P.point(i));
  }
  // g b_i = c b_pi(i); rescale along a spanning tree so tree edges carry 1,
  // then a is the order of the group generated by the remaining scalars.
  struct Edge {
    std::size_t to;
    Elem c;
  };
  std::vector<std::vector<Edge>> act(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& g : gens) {
      Vector y = g * ms.lines[i];
      const std::size_t j = line_of.at(P.locate(y));
      act[i].push_back({j, y[y.first_nonzero()]});
    }
  std::vector<Elem> s(n, 0);
  s[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& e : act[i])
      if (!s[e.to]) {
        s[e.to] = F.mul(s[i], e.c);
        queue.push_back(e.to);
      }
  }
  std::uint64_t a = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : act[i]) {
      const Elem c = F.div(F.mul(s[i], e.c), s[e.to]);
      a = std::lcm(a, std::uint64_t{element_order(F, c)});
    }
  ms.a = static_cast<std::uint32_t>(a);
  return ms;
}

std::vector<Transvection> conjugate_closure(const std::vector<Transvection>& t, std::size_t cap) {
  std::vector<Matrix> m, minv;
  for (const auto& x : t) {
    m.push_back(x.matrix());
    minv.push_back(x.inverse().matrix());
  }
  std::set<Transvection> seen(t.begin(), t.end());
  std::vector<Transvection> out;
  for (const auto& x : t)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  for (std::size_t h = 0; h < out.size(); ++h)
    for (std::size_t k = 0; k < t.size(); ++k)
      for (int side = 0; side < 2; ++side) {
        Transvection y = side ? out[h].conjugate(minv[k], m[k]) : out[h].conjugate(m[k], minv[k]);
        if (!seen.insert(y).second) continue;
        if (out.size() == cap) fail(ErrorCode::CapExceeded, "conjugacy class exceeds " + std::to_string(cap));
        out.push_back(std::move(y));
      }
  return out;
}

SubfieldDescent descend_to_subfield(const TransvectionGraph& g, std::uint32_t d) {
  const Field& F = g.field();
  const std::uint32_t f = F.degree(), p = F.characteristic();
  if (d == 0 || f % d) fail(ErrorCode::BadParameters, "subfield degree must divide the field degree");
  if (!strongly_connected(g)) fail(ErrorCode::NotStronglyConnected, "descent needs a strongly connected graph");
  const std::size_t k = g.size(), n = g.dimension();

  // c_s with v'_s = c_s v_s and phi'_t = c_t^-1 phi_t; out-tree edges pair to 1.
  std::vector<Elem> c(k, 0);
  c[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t t = queue.front();
    queue.pop_front();
    for (auto s : g.successors(t))
      if (!c[s]) {
        c[s] = F.div(c[t], g.pairing(t, s));
        queue.push_back(s);
      }
  }
  std::vector<Vector> vs;
  std::vector<Covector> phis;
  for (std::size_t t = 0; t < k; ++t) {
    vs.push_back(scaled(g.vertex(t).v(), c[t]));
    phis.push_back(scaled(g.vertex(t).phi(), F.inv(c[t])));
  }
  std::vector<Vector> basis;
  for (const auto& v : vs) {
    auto trial = basis;
    trial.push_back(v);
    if (Subspace::span(F, n, trial).dim() == trial.size()) basis = std::move(trial);
    if (basis.size() == n) break;
  }
  if (basis.size() != n) fail(ErrorCode::NotIrreducible, "vectors do not span");
  Matrix P = transpose(Matrix::from_vectors(F, n, basis));
  Matrix Pinv = matinv(P);

  // Embed GF(p^d) through a root of its modulus.
  Field small = Field::create(p, d);
  const std::uint64_t qd = small.order();
  const Elem gamma = F.pow(F.primitive_element(), (F.order() - 1) / (qd - 1));
  // Candidates: 0 (the modulus x of a prime field) and the nonzero elements of GF(p^d).
  Elem beta = 0;
  bool found = false;
  Elem x = 0;
  for (std::uint64_t i = 0; i < qd && !found; ++i, x = i == 1 ? 1 : F.mul(x, gamma)) {
    Elem acc = 0;
    const auto& m = small.modulus();
    for (std::size_t j = m.size(); j-- > 0;) acc = F.add(F.mul(acc, x), F.from_int(m[j]));
    if (acc == 0) {
      beta = x;
      found = true;
    }
  }
  if (!found) fail(ErrorCode::WrongField, "subfield modulus has no root");
  std::unordered_map<Elem, Elem> to_small;
  for (std::uint64_t e = 0; e < qd; ++e) {
    auto dg = small.digits(static_cast<Elem>(e));
    Elem img = 0, pw = 1;
    for (auto digit : dg) {
      img = F.add(img, F.mul(F.from_int(digit), pw));
      pw = F.mul(pw, beta);
    }
    to_small.emplace(img, static_cast<Elem>(e));
  }
  auto down = [&](Elem e) {
    auto it = to_small.find(e);
    if (it == to_small.end()) fail(ErrorCode::WrongField, "entry outside the subfield");
    return it->second;
  };

  SubfieldDescent out{{}, P};
  for (std::size_t t = 0; t < k; ++t) {
    Vector nv = Pinv * vs[t];
    Covector nphi = phis[t] * P;
    Vector sv(small, n);
    Covector sphi(small, n);
    for (std::size_t i = 0; i < n; ++i) {
      sv[i] = down(nv[i]);
      sphi[i] = down(nphi[i]);
    }
    out.generators.emplace_back(sv, sphi);
  }
  return out;
}

bool ClassificationReport::matches(const GroupTypeTag& t) const {
  return tag == t || std::find(equivalent_tags.begin(), equivalent_tags.end(), t) != equivalent_tags.end();
}

ClassificationReport classify(const std::vector<Transvection>& t, const ClassifyOptions& opts) {
  if (t.empty()) fail(ErrorCode::DimensionMismatch, "empty transvection list");
  TransvectionGraph g(t);
  auto irr = is_irreducible(g);
  if (!irr.irreducible)
    fail(ErrorCode::NotIrreducible, std::string("input is reducible: ") + to_string(irr.failed));
  const Field F = g.field();
  const std::size_t n = g.dimension();
  const std::uint64_t q = F.order();
  const Budgets& budgets = opts.budgets;

  ClassificationReport r;
  r.dimension = n;
  r.field = F;
  r.ambient_degree = F.degree();

  TransvectionGraph work = g;
  bool dense = false;
  if (opts.densify) {
    try {
      auto d = densify(g, budgets);
      work = TransvectionGraph(d.elements);
      dense = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      r.notes.push_back("densify skipped: projective budget");
    }
  }
  r.dense_size = work.size();

  auto df = defining_field(work, dense, budgets);
  if (df.degree < F.degree()) {
    auto sub = descend_to_subfield(g, df.degree);
    ClassificationReport inner = classify(sub.generators, opts);
    inner.subfield = true;
    inner.ambient_degree = F.degree();
    inner.notes.insert(inner.notes.begin(), "conjugate into a subfield subgroup over " + inner.field.name());
    return inner;
  }
  r.field_degree = df.degree;
  r.field_status = df.status;

  auto sym = detect_invariant_form(work, Twist::Identity, budgets);
  if (sym.form) r.symplectic_form = sym.form;
  else r.non_symplectic_cycle = sym.obstruction;

  const auto mats = matrices_of(t);
  GroupTypeTag cand{TagKind::Linear, 0, {}};
  if (r.symplectic_form) {
    cand = {TagKind::Symplectic, 0, {}};
    if (F.characteristic() == 2) {
      auto qd = recover_quadratic(work, *r.symplectic_form);
      if (qd.form) {
        r.quadratic_form = qd.form;
        cand = {qd.form->witt_sign() > 0 ? TagKind::OrthogonalPlus : TagKind::OrthogonalMinus, 0, {}};
      }
    }
    if (q == 2) {
      try {
        r.symmetric_set = detect_symmetric_type(mats, budgets);
        if (r.symmetric_set) cand = {TagKind::SymmetricOdd, 0, {}};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
        r.notes.push_back("symmetric detection skipped: projective budget");
      }
    }
  } else {
    if (F.degree() % 2 == 0) {
      auto uni = detect_invariant_form(work, Twist::Involution, budgets);
      if (uni.form) {
        r.unitary_form = uni.form;
        cand = {TagKind::Unitary, 0, {}};
      } else {
        r.non_unitary_cycle = uni.obstruction;
      }
    }
    if (F.characteristic() == 2) {
      try {
        r.monomial = detect_monomial_structure(mats, budgets);
        if (r.monomial && r.monomial->a > 1) {
          if (r.unitary_form) r.notes.push_back("unitary form and monomial structure both found; monomial kept");
          cand = {TagKind::Monomial, r.monomial->a, {}};
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
        r.notes.push_back("monomial detection skipped: projective budget");
      }
    }
  }
  r.tag = cand;
  r.formula_order = try_order(cand, n, q);

  if (opts.cross_check_order) {
    std::optional<std::uint64_t> cap;
    if (r.formula_order && *r.formula_order <= budgets.elements) cap = *r.formula_order;
    else if (q == 2 && r.symplectic_form && factorial(n + 2) <= budgets.elements) cap = factorial(n + 2);
    else if (n == 6 && q == 4 && kOrder3POmega <= budgets.elements) cap = kOrder3POmega;
    if (cap) {
      r.enumerated_order = generated_order(mats, *cap);
    }
    if (!r.enumerated_order) r.notes.push_back("order not cross-checked within the element budget");
  }

  const std::optional<std::uint64_t> o = r.enumerated_order;
  if (o && o != r.formula_order) {
    if (q == 2 && r.symplectic_form && *o == factorial(n + 2)) r.tag = {TagKind::SymmetricEven, 0, {}};
    else if (n == 2 && q == 9 && *o == kOrderSL25) r.tag = {TagKind::Exceptional, 0, "SL2(5)"};
    else if (n == 3 && q == 4 && *o == kOrder3A6) r.tag = {TagKind::Exceptional, 0, "3.A6"};
    else if (n == 6 && q == 4 && *o == kOrder3POmega) {
      r.tag = {TagKind::Exceptional, 0, "3.POmega6-(3)"};
      r.notes.push_back("3.POmega6-(3) matched by dimension, field and the order of 3.U4(3)");
    } else {
      r.tag = {TagKind::Undetermined, 0, {}};
      r.notes.push_back("enumerated order " + std::to_string(*o) + " does not match " + to_string(cand));
    }
    r.formula_order = (r.tag.kind == TagKind::Exceptional || r.tag.kind == TagKind::Undetermined)
                          ? std::nullopt
                          : try_order(r.tag, n, q);
  }

  // In dimension 2 the form types that fill SL2 are named Linear.
  if (n == 2 && (r.tag.kind == TagKind::Symplectic || r.tag.kind == TagKind::OrthogonalPlus ||
                 r.tag.kind == TagKind::OrthogonalMinus || r.tag.kind == TagKind::SymmetricOdd)) {
    const auto sl = try_order({TagKind::Linear, 0, {}}, 2, q);
    if ((o ? o : r.formula_order) == sl) {
      r.tag = {TagKind::Linear, 0, {}};
      r.formula_order = sl;
    }
  }

  // Coincidences: other tags naming the same group.
  if (r.tag.kind != TagKind::Exceptional && r.tag.kind != TagKind::Undetermined) {
    const std::optional<std::uint64_t> order = o ? o : r.formula_order;
    auto consider = [&](GroupTypeTag alt, bool plausible) {
      if (!plausible || alt == r.tag || !order) return;
      if (try_order(alt, n, q) == order) r.equivalent_tags.push_back(alt);
    };
    const bool even = n % 2 == 0;
    consider({TagKind::Linear, 0, {}}, n == 2);
    consider({TagKind::Symplectic, 0, {}}, even && r.symplectic_form.has_value());
    const int sign = r.quadratic_form && even ? r.quadratic_form->witt_sign() : 0;
    consider({TagKind::OrthogonalPlus, 0, {}}, sign > 0);
    consider({TagKind::OrthogonalMinus, 0, {}}, sign < 0);
    consider({TagKind::SymmetricOdd, 0, {}}, q == 2 && r.symmetric_set.has_value());
    consider({TagKind::SymmetricEven, 0, {}}, q == 2 && r.symplectic_form.has_value());
  }
  return r;
}

ClassificationReport classify_section(const std::vector<Transvection>& t, const ClassifyOptions& opts) {
  TransvectionGraph g(t);
  if (!strongly_connected(g)) fail(ErrorCode::NotStronglyConnected, "section needs a strongly connected set");
  auto sec = restrict_to_section(g);
  if (sec.dimension() == 0) fail(ErrorCode::NotIrreducible, "section is zero");
  return classify(sec.projected(), opts);
}

namespace {

std::vector<std::size_t> index_of_elements(const std::vector<Transvection>& all, const std::vector<Transvection>& sub) {
  std::map<Transvection, std::size_t> pos;
  for (std::size_t i = 0; i < all.size(); ++i) pos.emplace(all[i], i);
  std::vector<std::size_t> out;
  for (const auto& x : sub) out.push_back(pos.at(x));
  return out;
}

}  // namespace

Certificate certify(const std::vector<Transvection>& t, const CertifyOptions& opts) {
  const ClassificationReport rep = classify(t, opts.classify);
  if (!is_classical(rep.tag.kind))
    fail(ErrorCode::UnsupportedTag, "certificates cover classical types, got " + to_string(rep.tag));

  TransvectionGraph g(t);
  auto dense = densify(g, opts.classify.budgets);
  const auto& td = dense.elements;
  TransvectionGraph gd(td);

  std::set<std::size_t> pick;
  Certificate cert;
  cert.tag = rep.tag;
  cert.field_degree = rep.field_degree;

  std::vector<CycleRecord> wit = defining_field(gd, true, opts.classify.budgets).witnesses;
  for (const auto& c : wit) pick.insert(c.vertices.begin(), c.vertices.end());

  auto short_cycle = [&](auto defect) -> std::optional<CycleRecord> {
    std::optional<CycleRecord> hit;
    for_each_cycle(gd, 5, opts.classify.budgets.walks, [&](const CycleRecord& c) {
      if (defect(gd, c.vertices) == 0) return true;
      hit = c;
      return false;
    });
    return hit;
  };
  std::optional<CycleRecord> nonsym, nonuni;
  if (!rep.symplectic_form) {
    nonsym = short_cycle(symplectic_defect);
    if (!nonsym) nonsym = detect_invariant_form(gd, Twist::Identity, opts.classify.budgets).obstruction;
    if (nonsym) pick.insert(nonsym->vertices.begin(), nonsym->vertices.end());
  }
  if (!rep.unitary_form && !rep.subfield && gd.field().degree() % 2 == 0) {
    nonuni = short_cycle(unitary_defect);
    if (nonuni) pick.insert(nonuni->vertices.begin(), nonuni->vertices.end());
  }
  if (pick.empty()) pick.insert(0);

  const bool with_form = rep.symplectic_form || rep.unitary_form;
  // Indices into td; elements of T come first there, so they serve as exclusion material.
  std::vector<std::size_t> base(pick.begin(), pick.end());
  for (;;) {
    std::vector<Transvection> t0;
    for (auto i : base) t0.push_back(td[i]);
    auto cu = connect_up(td, t0, with_form);
    auto wk = winkle(td, cu.elements);
    const auto& elems = wk.elements;
    if (elems.size() > opts.max_size)
      fail(ErrorCode::CapExceeded, "certificate exceeds " + std::to_string(opts.max_size) + " elements");
    bool ok = false;
    try {
      auto sub = classify_section(elems, opts.classify);
      ok = rep.matches(sub.tag) && sub.field_degree == rep.field_degree;
      if (ok && rep.enumerated_order && sub.enumerated_order) ok = rep.enumerated_order == sub.enumerated_order;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CapExceeded) throw;
    }
    if (ok) {
      cert.elements = elems;
      cert.connect_up_added = cu.added.size();
      cert.winkle_added = wk.added.size();
      break;
    }
    // Grow by the first dense element not yet used; T itself comes first.
    std::size_t i = 0;
    while (i < td.size() && std::find(base.begin(), base.end(), i) != base.end()) ++i;
    if (i == td.size()) fail(ErrorCode::NoWitness, "no certificate found");
    base.push_back(i);
  }

  auto idx = index_of_elements(td, cert.elements);
  for (auto i : idx) cert.words.push_back(dense.words[i]);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t j = 0; j < idx.size(); ++j) local.emplace(idx[j], j);
  auto remap = [&](const CycleRecord& c) {
    CycleRecord out{{}, c.weight};
    for (auto v : c.vertices) out.vertices.push_back(local.at(v));
    return out;
  };
  for (const auto& c : wit) cert.field_witnesses.push_back(remap(c));
  if (nonsym) cert.non_symplectic_cycle = remap(*nonsym);
  if (nonuni) cert.non_unitary_cycle = remap(*nonuni);

  // Post-verification on random strongly connected supersets from the conjugates of T.
  if (opts.post_checks) {
    auto pool = conjugate_closure(t, 4096);
    std::mt19937_64 rng(opts.seed);
    ClassifyOptions light = opts.classify;
    light.budgets.elements = std::min<std::uint64_t>(light.budgets.elements, 200'000);
    std::size_t attempts = 0;
    while (cert.post_checks < opts.post_checks && attempts < 20 * opts.post_checks) {
      ++attempts;
      std::vector<Transvection> t1 = cert.elements;
      std::uniform_int_distribution<std::size_t> count(0, std::min<std::size_t>(pool.size(), 2 * t.front().dimension()));
      std::uniform_int_distribution<std::size_t> which(0, pool.size() - 1);
      for (std::size_t k = count(rng); k > 0; --k) {
        const auto& y = pool[which(rng)];
        if (std::find(t1.begin(), t1.end(), y) == t1.end()) t1.push_back(y);
      }
      if (!strongly_connected(TransvectionGraph(t1))) continue;
      ++cert.post_checks;
      try {
        auto sub = classify_section(t1, light);
        if (!(rep.matches(sub.tag) && sub.field_degree == rep.field_degree)) ++cert.post_check_failures;
      } catch (const Error&) {
        ++cert.post_check_failures;
      }
    }
  }
  return cert;
}

}  // namespace transvect
