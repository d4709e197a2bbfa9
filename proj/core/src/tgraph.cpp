#include "transvect/tgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace transvect {

TransvectionGraph::TransvectionGraph(std::vector<Transvection> vertices) : verts_(std::move(vertices)) {
  if (verts_.empty()) fail(ErrorCode::BadParameters, "empty transvection list");
  field_ = verts_[0].field();
  n_ = verts_[0].dimension();
  for (const auto& t : verts_) {
    if (t.field() != field_) fail(ErrorCode::FieldMismatch, "mixed fields in transvection list");
    if (t.dimension() != n_) fail(ErrorCode::DimensionMismatch, "mixed dimensions in transvection list");
  }
  const std::size_t k = verts_.size();
  pairing_.assign(k * k, 0);
  succ_.assign(k, {});
  pred_.assign(k, {});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem x = pair(verts_[i].phi(), verts_[j].v());
      pairing_[i * k + j] = x;
      if (x) {
        succ_[i].push_back(j);
        pred_[j].push_back(i);
      }
    }
}

Subspace TransvectionGraph::span_v() const {
  Matrix m(field_, verts_.size(), n_);
  for (std::size_t i = 0; i < verts_.size(); ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = verts_[i].v()[j];
  return Subspace::span(m);
}

Subspace TransvectionGraph::span_phi() const {
  Matrix m(field_, verts_.size(), n_);
  for (std::size_t i = 0; i < verts_.size(); ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = verts_[i].phi()[j];
  return Subspace::span(m);
}

SccResult strongly_connected_components(const TransvectionGraph& g) {
  // Iterative Tarjan.
  const std::size_t k = g.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(k, unset), low(k, 0), comp(k, unset);
  std::vector<bool> on_stack(k, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  std::size_t counter = 0;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // vertex, next successor slot
  for (std::size_t root = 0; root < k; ++root) {
    if (index[root] != unset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [u, slot] = call.back();
      const auto& succ = g.successors(u);
      if (slot < succ.size()) {
        std::size_t w = succ[slot++];
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        std::vector<std::size_t> c;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          c.push_back(w);
        } while (w != u);
        std::sort(c.begin(), c.end());
        comps.push_back(std::move(c));
      }
      std::size_t done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  SccResult r;
  r.component_of.assign(k, 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) r.component_of[v] = c;
  r.components = std::move(comps);
  return r;
}

bool strongly_connected(const TransvectionGraph& g) { return strongly_connected_components(g).components.size() == 1; }

namespace {

std::vector<std::size_t> bfs_dist(const TransvectionGraph& g, std::size_t src, bool reverse,
                                  std::vector<std::size_t>* parent = nullptr) {
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> d(g.size(), inf);
  if (parent) parent->assign(g.size(), inf);
  std::deque<std::size_t> queue{src};
  d[src] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (auto w : reverse ? g.predecessors(u) : g.successors(u)) {
      if (d[w] != inf) continue;
      d[w] = d[u] + 1;
      if (parent) (*parent)[w] = u;
      queue.push_back(w);
    }
  }
  return d;
}

}  // namespace

std::optional<std::size_t> directed_diameter(const TransvectionGraph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    auto d = bfs_dist(g, s, false);
    for (auto x : d) {
      if (x == static_cast<std::size_t>(-1)) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

std::vector<std::size_t> shortest_path(const TransvectionGraph& g, std::size_t a, std::size_t b) {
  std::vector<std::size_t> parent;
  auto d = bfs_dist(g, a, false, &parent);
  if (d[b] == static_cast<std::size_t>(-1)) return {};
  std::vector<std::size_t> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

const char* to_string(IrreducibleFailure f) {
  switch (f) {
    case IrreducibleFailure::None: return "none";
    case IrreducibleFailure::SpanV: return "V(T) != V";
    case IrreducibleFailure::SpanPhi: return "V*(T) != V*";
    case IrreducibleFailure::NotStronglyConnected: return "graph not strongly connected";
  }
  return "unknown";
}

IrreducibilityReport is_irreducible(const TransvectionGraph& g) {
  IrreducibilityReport r;
  const std::size_t n = g.dimension();
  Subspace sv = g.span_v();
  if (sv.dim() != n) {
    r.failed = IrreducibleFailure::SpanV;
    r.witness = sv;  // [V, G]
    return r;
  }
  Subspace sp = g.span_phi();
  if (sp.dim() != n) {
    r.failed = IrreducibleFailure::SpanPhi;
    r.witness = sp.perp();  // V^G
    return r;
  }
  auto scc = strongly_connected_components(g);
  if (scc.components.size() != 1) {
    r.failed = IrreducibleFailure::NotStronglyConnected;
    // First component (by smallest member) with no incoming edge from outside.
    for (const auto& comp : scc.components) {
      const std::size_t c = scc.component_of[comp[0]];
      bool incoming = false;
      for (auto s : comp)
        for (auto t : g.predecessors(s))
          if (scc.component_of[t] != c) incoming = true;
      if (incoming) continue;
      r.source_component = comp;
      std::vector<Vector> vs;
      for (auto s : comp) vs.push_back(g.vertex(s).v());
      r.witness = Subspace::span(g.field(), n, vs);
      break;
    }
    return r;
  }
  r.irreducible = true;
  return r;
}

Elem walk_weight(const TransvectionGraph& g, const std::vector<std::size_t>& c) {
  const Field& F = g.field();
  Elem w = 1;
  for (std::size_t i = 0; i < c.size(); ++i) w = F.mul(w, g.pairing(c[i], c[(i + 1) % c.size()]));
  return w;
}

Elem reverse_weight(const TransvectionGraph& g, const std::vector<std::size_t>& c) {
  const Field& F = g.field();
  Elem w = 1;
  for (std::size_t i = 0; i < c.size(); ++i) w = F.mul(w, g.pairing(c[(i + 1) % c.size()], c[i]));
  return w;
}

Elem symplectic_defect(const TransvectionGraph& g, const std::vector<std::size_t>& c) {
  const Field& F = g.field();
  Elem r = reverse_weight(g, c);
  if (c.size() % 2 == 1) r = F.neg(r);
  return F.sub(walk_weight(g, c), r);
}

Elem unitary_defect(const TransvectionGraph& g, const std::vector<std::size_t>& c) {
  const Field& F = g.field();
  Elem r = F.involution(reverse_weight(g, c));
  if (c.size() % 2 == 1) r = F.neg(r);
  return F.sub(walk_weight(g, c), r);
}

std::vector<std::size_t> canonical_rotation(std::vector<std::size_t> c) {
  std::vector<std::size_t> best = c;
  for (std::size_t r = 1; r < c.size(); ++r) {
    std::rotate(c.begin(), c.begin() + 1, c.end());
    if (c < best) best = c;
  }
  return best;
}

namespace {

bool is_canonical(const std::vector<std::size_t>& p) {
  const std::size_t k = p.size();
  for (std::size_t r = 1; r < k; ++r) {
    if (p[r] != p[0]) continue;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t a = p[(r + i) % k], b = p[i];
      if (a < b) return false;
      if (a > b) break;
    }
  }
  return true;
}

}  // namespace

void for_each_cycle(const TransvectionGraph& g, std::size_t max_len, std::uint64_t budget,
                    const std::function<bool(const CycleRecord&)>& visit) {
  if (max_len > 8) fail(ErrorCode::BadParameters, "cycle length is capped at 8");
  std::uint64_t steps = 0;
  std::vector<std::size_t> path;
  bool stop = false;
  // Depth-first search for walks of exactly len vertices starting at their minimum.
  std::function<void(std::size_t)> dfs = [&](std::size_t len) {
    const std::size_t u = path.back();
    const std::size_t s = path[0];
    if (path.size() == len) {
      if (!g.edge(u, s) || !is_canonical(path)) return;
      CycleRecord rec{path, walk_weight(g, path)};
      if (!visit(rec)) stop = true;
      return;
    }
    for (auto w : g.successors(u)) {
      if (w < s) continue;
      if (++steps > budget) fail(ErrorCode::CapExceeded, "cycle enumeration budget exhausted");
      path.push_back(w);
      dfs(len);
      path.pop_back();
      if (stop) return;
    }
  };
  for (std::size_t len = 2; len <= max_len && !stop; ++len)
    for (std::size_t s = 0; s < g.size() && !stop; ++s) {
      path.assign(1, s);
      dfs(len);
    }
}

std::vector<CycleRecord> cycles_up_to(const TransvectionGraph& g, std::size_t max_len, std::uint64_t budget) {
  std::vector<CycleRecord> out;
  for_each_cycle(g, max_len, budget, [&](const CycleRecord& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

const char* to_string(FieldStatus s) {
  switch (s) {
    case FieldStatus::DenseL5: return "dense-L5";
    case FieldStatus::Stabilized: return "stabilized";
    case FieldStatus::CapLimited: return "cap-limited";
    case FieldStatus::Exact: return "exact";
  }
  return "unknown";
}

namespace {

// Keeps witnesses whose weights enlarge the generated subfield.
struct FieldAccumulator {
  const Field& F;
  std::vector<Elem> gens;
  std::uint32_t degree = 1;
  std::vector<CycleRecord> witnesses;

  bool offer(const CycleRecord& c) {
    if (F.in_subfield(c.weight, degree)) return false;
    gens.push_back(c.weight);
    degree = F.subfield_degree(gens);
    witnesses.push_back(c);
    return true;
  }
};

}  // namespace

DefiningField trace_field_exact(const TransvectionGraph& g) {
  if (!strongly_connected(g)) fail(ErrorCode::NotStronglyConnected, "exact trace field needs a strongly connected graph");
  const Field& F = g.field();
  const std::size_t k = g.size();
  std::vector<std::size_t> out_parent, in_parent;
  bfs_dist(g, 0, false, &out_parent);
  bfs_dist(g, 0, true, &in_parent);
  // Scale c_s so that every out-tree edge pairs to 1: pairing'(t, s) = c_t^-1 c_s pairing(t, s).
  std::vector<Elem> c(k, 0);
  c[0] = 1;
  {
    std::vector<std::size_t> order;
    auto d = bfs_dist(g, 0, false);
    order.resize(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return d[a] < d[b]; });
    for (auto s : order) {
      if (s == 0) continue;
      const std::size_t t = out_parent[s];
      c[s] = F.div(c[t], g.pairing(t, s));
    }
  }
  auto out_path = [&](std::size_t s) {
    std::vector<std::size_t> p{s};
    while (p.back() != 0) p.push_back(out_parent[p.back()]);
    std::reverse(p.begin(), p.end());
    return p;  // 0 ... s
  };
  auto in_path = [&](std::size_t s) {
    std::vector<std::size_t> p{s};
    while (p.back() != 0) p.push_back(in_parent[p.back()]);
    return p;  // s ... 0
  };
  auto closed = [&](std::vector<std::size_t> walk) {
    walk.pop_back();  // drop the repeated root
    auto canon = canonical_rotation(walk);
    return CycleRecord{canon, walk_weight(g, canon)};
  };
  FieldAccumulator acc{F, {}, 1, {}};
  for (std::size_t t = 0; t < k; ++t)
    for (auto s : g.successors(t)) {
      const Elem x = F.mul(F.div(c[s], c[t]), g.pairing(t, s));
      if (F.in_subfield(x, acc.degree)) continue;
      auto a = out_path(t);
      auto back = in_path(s);
      a.insert(a.end(), back.begin(), back.end());
      acc.offer(closed(a));
      if (s != 0) {
        auto b = out_path(s);
        b.insert(b.end(), back.begin() + 1, back.end());
        acc.offer(closed(b));
      }
      // The pair of cycles pins x, so the accumulated degree must cover it.
      std::vector<Elem> with = acc.gens;
      with.push_back(x);
      acc.degree = std::max(acc.degree, F.subfield_degree(with));
    }
  return {acc.degree, FieldStatus::Exact, acc.witnesses};
}

DefiningField defining_field(const TransvectionGraph& g, bool dense_hint, const Budgets& budgets) {
  const Field& F = g.field();
  FieldAccumulator acc{F, {}, 1, {}};
  DefiningField out;
  try {
    if (dense_hint) {
      for_each_cycle(g, 5, budgets.walks, [&](const CycleRecord& c) {
        acc.offer(c);
        return acc.degree < F.degree();
      });
      out.status = FieldStatus::DenseL5;
    } else {
      std::uint32_t prev = 0;
      std::size_t stable = 0;
      out.status = FieldStatus::CapLimited;
      for (std::size_t len = 2; len <= 8; ++len) {
        for_each_cycle(g, len, budgets.walks, [&](const CycleRecord& c) {
          if (c.vertices.size() == len) acc.offer(c);
          return true;
        });
        stable = acc.degree == prev ? stable + 1 : 1;
        prev = acc.degree;
        if (stable >= 3 || acc.degree == F.degree()) {
          out.status = FieldStatus::Stabilized;
          break;
        }
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    out.status = FieldStatus::CapLimited;
  }
  out.degree = acc.degree;
  out.witnesses = acc.witnesses;
  // Never report a field smaller than the exact trace field.
  if (strongly_connected(g)) {
    DefiningField exact = trace_field_exact(g);
    if (exact.degree > out.degree) {
      out.degree = exact.degree;
      out.status = FieldStatus::Exact;
      out.witnesses = exact.witnesses;
    }
  }
  return out;
}

namespace {

std::uint64_t vector_count(const Field& F, std::size_t n, const Budgets& budgets) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= F.order();
    if (total > budgets.projective)
      fail(ErrorCode::CapExceeded, "projective sweep exceeds budget of " + std::to_string(budgets.projective));
  }
  return total;
}

bool leading_one(const std::vector<Elem>& x) {
  for (Elem e : x)
    if (e) return e == 1;
  return false;
}

// span{v_t : phi_t(x) != 0} over the graph's vertices
Subspace support_span(const TransvectionGraph& g, const Vector& x) {
  std::vector<Vector> vs;
  for (std::size_t t = 0; t < g.size(); ++t)
    if (pair(g.vertex(t).phi(), x)) vs.push_back(g.vertex(t).v());
  return Subspace::span(g.field(), g.dimension(), vs);
}

}  // namespace

DensityReport is_dense(const TransvectionGraph& g, const Budgets& budgets) {
  // (v, phi) is covered iff phi misses span{v_t : phi_t(v) != 0}; so T is
  // dense iff that span is all of V for every projective v.
  const Field& F = g.field();
  const std::size_t n = g.dimension();
  const std::uint64_t total = vector_count(F, n, budgets);
  DensityReport r;
  for (std::uint64_t code = 1; code < total; ++code) {
    auto x = vector_from_code(code, n, F.order());
    if (!leading_one(x)) continue;
    Vector v(F, x);
    Subspace s = support_span(g, v);
    if (s.dim() == n) continue;
    Covector phi(F, s.perp().least_nonzero());
    r.counterexample = std::make_pair(v, normalized(phi));
    return r;
  }
  r.dense = true;
  return r;
}

ShortenedPath shorten_path(const TransvectionGraph& g, const Covector& phi, const Vector& v) {
  const std::size_t k = g.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(k, unset);
  std::vector<bool> seen(k, false);
  std::deque<std::size_t> queue;
  for (std::size_t t = 0; t < k; ++t)
    if (pair(phi, g.vertex(t).v())) {
      seen[t] = true;
      queue.push_back(t);
    }
  std::size_t hit = unset;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    if (pair(g.vertex(u).phi(), v)) {
      hit = u;
      break;
    }
    for (auto w : g.successors(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (hit == unset) fail(ErrorCode::NotIrreducible, "no path from phi to v in the transvection graph");
  std::vector<std::size_t> path{hit};
  while (parent[path.back()] != unset) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());

  const std::size_t m = path.size();
  Vector nv = g.vertex(path[m - 1]).v();
  Covector nphi = g.vertex(path[m - 1]).phi();
  for (std::size_t i = m - 1; i-- > 0;) {
    nv = g.vertex(path[i]).apply(nv);
    nphi = g.vertex(path[i]).inverse().pull_back(nphi);
  }
  ShortenedPath out{Transvection(nv, nphi), {}, path};
  for (std::size_t i = 0; i + 1 < m; ++i) out.word.push_back({static_cast<std::uint32_t>(path[i]), false});
  out.word.push_back({static_cast<std::uint32_t>(path[m - 1]), false});
  for (std::size_t i = m - 1; i-- > 0;) out.word.push_back({static_cast<std::uint32_t>(path[i]), true});
  return out;
}

DensifyResult densify(const TransvectionGraph& g, const Budgets& budgets) {
  if (!is_irreducible(g).irreducible) fail(ErrorCode::NotIrreducible, "densify needs an irreducible set");
  const Field& F = g.field();
  const std::size_t n = g.dimension();
  const std::uint64_t total = vector_count(F, n, budgets);
  DensifyResult out;
  for (std::size_t t = 0; t < g.size(); ++t) {
    if (std::find(out.elements.begin(), out.elements.end(), g.vertex(t)) != out.elements.end()) continue;
    out.elements.push_back(g.vertex(t));
    out.words.push_back({{static_cast<std::uint32_t>(t), false}});
  }
  for (std::uint64_t code = 1; code < total; ++code) {
    auto x = vector_from_code(code, n, F.order());
    if (!leading_one(x)) continue;
    Vector v(F, x);
    for (;;) {
      std::vector<Vector> vs;
      for (const auto& t : out.elements)
        if (pair(t.phi(), v)) vs.push_back(t.v());
      Subspace s = Subspace::span(F, n, vs);
      if (s.dim() == n) break;
      Covector phi(F, s.perp().least_nonzero());
      ShortenedPath sp = shorten_path(g, phi, v);
      out.elements.push_back(sp.t);
      out.words.push_back(sp.word);
    }
  }
  return out;
}

ConnectUpResult connect_up(const std::vector<Transvection>& dense, const std::vector<Transvection>& t0,
                           bool with_form) {
  TransvectionGraph g0(t0);
  auto scc = strongly_connected_components(g0);
  ConnectUpResult out;
  out.elements = t0;
  const std::size_t k = scc.components.size();
  for (const auto& c : scc.components) out.representatives.push_back(c[0]);
  if (k == 1) return out;
  const std::size_t links = with_form ? k - 1 : k;
  for (std::size_t i = 0; i < links; ++i) {
    const Transvection& a = t0[out.representatives[i]];
    const Transvection& b = t0[out.representatives[(i + 1) % k]];
    std::size_t found = dense.size();
    for (std::size_t j = 0; j < dense.size(); ++j)
      if (pair(a.phi(), dense[j].v()) && pair(dense[j].phi(), b.v())) {
        found = j;
        break;
      }
    if (found == dense.size()) fail(ErrorCode::NotDense, "no dense witness linking components");
    if (std::find(out.elements.begin(), out.elements.end(), dense[found]) == out.elements.end()) {
      out.elements.push_back(dense[found]);
      out.added.push_back(found);
    }
  }
  return out;
}

DegeneracyKernels degeneracy_kernels(const TransvectionGraph& g) {
  Subspace sv = g.span_v(), sp = g.span_phi();
  return {sv.intersect(sp.perp()), sv.perp().intersect(sp)};
}

std::size_t defect(const TransvectionGraph& g) {
  auto k = degeneracy_kernels(g);
  return std::min(k.left.dim(), k.right.dim());
}

bool weakly_nondegenerate(const TransvectionGraph& g) { return defect(g) == 0; }

WinkleResult winkle(const std::vector<Transvection>& dense, const std::vector<Transvection>& t0) {
  TransvectionGraph g(t0);
  if (!strongly_connected(g)) fail(ErrorCode::NotStronglyConnected, "winkle needs a strongly connected start");
  WinkleResult out;
  out.elements = t0;
  out.initial_defect = defect(g);
  const Field& F = g.field();
  for (;;) {
    auto ker = degeneracy_kernels(g);
    if (ker.left.dim() == 0 || ker.right.dim() == 0) break;
    Vector u(F, ker.left.least_nonzero());
    Covector psi(F, ker.right.least_nonzero());
    std::size_t found = dense.size();
    for (std::size_t j = 0; j < dense.size(); ++j)
      if (pair(psi, dense[j].v()) && pair(dense[j].phi(), u)) {
        found = j;
        break;
      }
    if (found == dense.size()) fail(ErrorCode::NotDense, "no dense witness for winkle step");
    out.elements.push_back(dense[found]);
    out.added.push_back(found);
    g = TransvectionGraph(out.elements);
  }
  return out;
}

std::vector<Elem> SectionRestriction::coordinates(const Vector& x) const {
  Solution s = solve(solver_, x.entries());
  return std::vector<Elem>(s.x.begin(), s.x.begin() + complement_.rows());
}

Matrix SectionRestriction::project_matrix(const Matrix& g) const {
  const std::size_t r = complement_.rows();
  Matrix out(g.field(), r, r);
  for (std::size_t j = 0; j < r; ++j) {
    Vector c = complement_.row_as_vector(j);
    auto y = coordinates(g * c);
    for (std::size_t i = 0; i < r; ++i) out(i, j) = y[i];
  }
  return out;
}

SectionRestriction restrict_to_section(const TransvectionGraph& g) {
  if (!strongly_connected(g)) fail(ErrorCode::NotStronglyConnected, "section restriction needs a strongly connected graph");
  const Field& F = g.field();
  const std::size_t n = g.dimension();
  SectionRestriction s;
  s.upper_ = g.span_v();
  s.lower_ = s.upper_.intersect(g.span_phi().perp());
  Subspace acc = s.lower_;
  std::vector<std::vector<Elem>> comp;
  for (std::size_t i = 0; i < s.upper_.dim(); ++i) {
    auto row = s.upper_.basis_row(i);
    if (acc.contains(row)) continue;
    comp.push_back(row);
    acc = acc.sum(Subspace::span(Matrix::from_rows(F, {row})));
  }
  const std::size_t r = comp.size();
  s.complement_ = Matrix(F, r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) s.complement_(i, j) = comp[i][j];
  const std::size_t w = s.lower_.dim();
  s.solver_ = Matrix(F, n, r + w);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) s.solver_(i, j) = comp[j][i];
  for (std::size_t j = 0; j < w; ++j)
    for (std::size_t i = 0; i < n; ++i) s.solver_(i, r + j) = s.lower_.basis()(j, i);
  if (r == 0) return s;
  for (const auto& t : g.vertices()) {
    Vector vb(F, s.coordinates(t.v()));
    Covector pb(F, r);
    for (std::size_t i = 0; i < r; ++i) pb[i] = pair(t.phi(), s.complement_.row_as_vector(i));
    s.projected_.emplace_back(std::move(vb), std::move(pb));
  }
  return s;
}

}  // namespace transvect
