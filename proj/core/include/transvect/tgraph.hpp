#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "transvect/transvection.hpp"

namespace transvect {

// Directed graph on a transvection list: i -> j iff phi_i(v_j) != 0.
class TransvectionGraph {
 public:
  TransvectionGraph() = default;
  explicit TransvectionGraph(std::vector<Transvection> vertices);

  std::size_t size() const { return verts_.size(); }
  std::size_t dimension() const { return n_; }
  const Field& field() const { return field_; }
  const Transvection& vertex(std::size_t i) const { return verts_[i]; }
  const std::vector<Transvection>& vertices() const { return verts_; }

  Elem pairing(std::size_t i, std::size_t j) const { return pairing_[i * verts_.size() + j]; }
  bool edge(std::size_t i, std::size_t j) const { return pairing(i, j) != 0; }
  const std::vector<std::size_t>& successors(std::size_t i) const { return succ_[i]; }
  const std::vector<std::size_t>& predecessors(std::size_t i) const { return pred_[i]; }

  // V(T) and V*(T)
  Subspace span_v() const;
  Subspace span_phi() const;

 private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<Transvection> verts_;
  std::vector<Elem> pairing_;
  std::vector<std::vector<std::size_t>> succ_, pred_;
};

struct SccResult {
  // Components ordered by smallest member; members ascending.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
};

SccResult strongly_connected_components(const TransvectionGraph& g);
bool strongly_connected(const TransvectionGraph& g);
// Largest shortest-path distance; nullopt when not strongly connected.
std::optional<std::size_t> directed_diameter(const TransvectionGraph& g);
// Shortest path from a to b (both ends included); empty if unreachable.
std::vector<std::size_t> shortest_path(const TransvectionGraph& g, std::size_t a, std::size_t b);

enum class IrreducibleFailure { None, SpanV, SpanPhi, NotStronglyConnected };
const char* to_string(IrreducibleFailure f);

struct IrreducibilityReport {
  bool irreducible = false;
  IrreducibleFailure failed = IrreducibleFailure::None;
  // A proper nonzero invariant subspace when reducible.
  Subspace witness;
  // For NotStronglyConnected: a component with no incoming edges.
  std::vector<std::size_t> source_component;
};

IrreducibilityReport is_irreducible(const TransvectionGraph& g);

struct CycleRecord {
  std::vector<std::size_t> vertices;
  Elem weight = 0;
};

Elem walk_weight(const TransvectionGraph& g, const std::vector<std::size_t>& cycle);
Elem reverse_weight(const TransvectionGraph& g, const std::vector<std::size_t>& cycle);
// w(c) - (-1)^k w(reverse c)
Elem symplectic_defect(const TransvectionGraph& g, const std::vector<std::size_t>& cycle);
// w(c) - (-1)^k involution(w(reverse c))
Elem unitary_defect(const TransvectionGraph& g, const std::vector<std::size_t>& cycle);
// Rotation of a closed walk that is lexicographically least.
std::vector<std::size_t> canonical_rotation(std::vector<std::size_t> cycle);

// Visits closed walks of length 2..max_len with nonzero weight, one per
// rotation class, by length and then lexicographically. The visitor returns
// false to stop. budget bounds the number of partial walks explored.
void for_each_cycle(const TransvectionGraph& g, std::size_t max_len, std::uint64_t budget,
                    const std::function<bool(const CycleRecord&)>& visit);
std::vector<CycleRecord> cycles_up_to(const TransvectionGraph& g, std::size_t max_len,
                                      std::uint64_t budget = 1'000'000);

enum class FieldStatus { DenseL5, Stabilized, CapLimited, Exact };
const char* to_string(FieldStatus s);

struct DefiningField {
  std::uint32_t degree = 1;
  FieldStatus status = FieldStatus::Exact;
  std::vector<CycleRecord> witnesses;
};

DefiningField defining_field(const TransvectionGraph& g, bool dense_hint, const Budgets& budgets = {});
// Field of cycle weights computed from tree-normalized pairings; needs a
// strongly connected graph. Witness cycles have length at most 2D+1.
DefiningField trace_field_exact(const TransvectionGraph& g);

struct DensityReport {
  bool dense = false;
  std::optional<std::pair<Vector, Covector>> counterexample;
};
DensityReport is_dense(const TransvectionGraph& g, const Budgets& budgets = {});

struct ShortenedPath {
  Transvection t;
  Word word;
  std::vector<std::size_t> path;
};
ShortenedPath shorten_path(const TransvectionGraph& g, const Covector& phi, const Vector& v);

struct DensifyResult {
  std::vector<Transvection> elements;
  std::vector<Word> words;  // words over the input list
};
DensifyResult densify(const TransvectionGraph& g, const Budgets& budgets = {});

struct ConnectUpResult {
  std::vector<Transvection> elements;
  std::vector<std::size_t> representatives;  // indices into T0
  std::vector<std::size_t> added;            // indices into T_dense
};
ConnectUpResult connect_up(const std::vector<Transvection>& dense, const std::vector<Transvection>& t0,
                           bool with_form);

struct DegeneracyKernels {
  Subspace left;   // V(T) ∩ V*(T)^perp, inside V
  Subspace right;  // V(T)^perp ∩ V*(T), inside V*
};
DegeneracyKernels degeneracy_kernels(const TransvectionGraph& g);
std::size_t defect(const TransvectionGraph& g);
bool weakly_nondegenerate(const TransvectionGraph& g);

struct WinkleResult {
  std::vector<Transvection> elements;
  std::vector<std::size_t> added;  // indices into T_dense
  std::size_t initial_defect = 0;
};
WinkleResult winkle(const std::vector<Transvection>& dense, const std::vector<Transvection>& t0);

// Action on U/W with U = V(T) and W = V(T) ∩ V*(T)^perp.
class SectionRestriction {
 public:
  const Subspace& upper() const { return upper_; }
  const Subspace& lower() const { return lower_; }
  std::size_t dimension() const { return complement_.rows(); }
  // Rows c_i of a complement of W in U; the section basis is their image.
  const Matrix& complement() const { return complement_; }
  const std::vector<Transvection>& projected() const { return projected_; }

  std::vector<Elem> coordinates(const Vector& x) const;
  // Induced action of g (which must preserve U and W) on U/W.
  Matrix project_matrix(const Matrix& g) const;

 private:
  friend SectionRestriction restrict_to_section(const TransvectionGraph& g);
  Subspace upper_, lower_;
  Matrix complement_;
  Matrix solver_;  // columns: complement then W basis
  std::vector<Transvection> projected_;
};

SectionRestriction restrict_to_section(const TransvectionGraph& g);

}  // namespace transvect
