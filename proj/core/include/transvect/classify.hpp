#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transvect/cayley.hpp"
#include "transvect/forms.hpp"

namespace transvect {

enum class TagKind {
  Linear,
  Unitary,
  Symplectic,
  OrthogonalPlus,
  OrthogonalMinus,
  Monomial,
  SymmetricOdd,
  SymmetricEven,
  Exceptional,
  Undetermined,
};

struct GroupTypeTag {
  TagKind kind = TagKind::Undetermined;
  std::uint32_t a = 0;  // Monomial(a)
  std::string label;    // Exceptional(label)
  bool operator==(const GroupTypeTag& o) const { return kind == o.kind && a == o.a && label == o.label; }
};

std::string to_string(const GroupTypeTag& tag);
GroupTypeTag parse_tag(std::string_view text);

// Order of the tagged group acting on K^n, K = GF(q). For Unitary, q = q0^2.
std::uint64_t order_formula(const GroupTypeTag& tag, std::size_t n, std::uint64_t q);

CayleyExploration enumerate_group(const std::vector<Matrix>& gens, std::uint64_t cap = 10'000'000);

// 2x2 blocks [[0, x^-1], [x, 0]] on every pair of axes, x an a-th root of unity.
std::vector<Transvection> build_monomial_group(std::size_t n, std::uint32_t a, const Field& field);

// S_m acting on H/(l ∩ H) over GF(2): H the sum-zero hyperplane, l = <(1,...,1)>.
class SymmetricRep {
 public:
  explicit SymmetricRep(std::size_t m);
  std::size_t degree() const { return m_; }
  std::size_t dimension() const { return section_.dimension(); }
  // Images of the transpositions (i, i+1).
  const std::vector<Transvection>& generators() const { return gens_; }
  // perm maps i to perm[i] (0-based).
  Matrix rho(const std::vector<std::size_t>& perm) const;

 private:
  std::size_t m_;
  SectionRestriction section_;
  std::vector<Transvection> gens_;
};

std::vector<Transvection> build_symmetric_rep(std::size_t m);

// Spanning orbit of size n + 1 on nonzero vectors of GF(2)^n.
std::optional<std::vector<Vector>> detect_symmetric_type(const std::vector<Matrix>& gens,
                                                         const Budgets& budgets = {});

struct MonomialStructure {
  std::vector<Vector> lines;  // one spanning vector per permuted line
  std::uint32_t a = 1;
};
std::optional<MonomialStructure> detect_monomial_structure(const std::vector<Matrix>& gens,
                                                           const Budgets& budgets = {});

// All conjugates of T under <T>, bounded by cap.
std::vector<Transvection> conjugate_closure(const std::vector<Transvection>& t, std::size_t cap = 4096);

struct SubfieldDescent {
  std::vector<Transvection> generators;  // over the smaller field
  Matrix basis;                          // columns: new basis in the old coordinates
};
// Rewrites a strongly connected set over the subfield GF(p^d) that contains its cycle weights.
SubfieldDescent descend_to_subfield(const TransvectionGraph& g, std::uint32_t d);

struct ClassifyOptions {
  Budgets budgets;
  bool cross_check_order = true;
  bool densify = true;
};

struct ClassificationReport {
  GroupTypeTag tag;
  std::vector<GroupTypeTag> equivalent_tags;  // same group under a coincidence
  std::size_t dimension = 0;
  Field field;                    // the defining field
  std::uint32_t field_degree = 1; // over GF(p)
  std::uint32_t ambient_degree = 1;
  FieldStatus field_status = FieldStatus::Exact;
  bool subfield = false;
  std::optional<SesquiForm> symplectic_form;
  std::optional<SesquiForm> unitary_form;
  std::optional<QuadraticForm> quadratic_form;
  std::optional<std::vector<Vector>> symmetric_set;
  std::optional<MonomialStructure> monomial;
  std::optional<CycleRecord> non_symplectic_cycle;
  std::optional<CycleRecord> non_unitary_cycle;
  std::optional<std::uint64_t> formula_order;
  std::optional<std::uint64_t> enumerated_order;
  std::size_t dense_size = 0;
  std::vector<std::string> notes;

  bool matches(const GroupTypeTag& t) const;
};

ClassificationReport classify(const std::vector<Transvection>& t, const ClassifyOptions& opts = {});

struct Certificate {
  std::vector<Transvection> elements;  // T0
  std::vector<Word> words;             // over the input list
  GroupTypeTag tag;
  std::uint32_t field_degree = 1;
  std::vector<CycleRecord> field_witnesses;  // vertex indices into elements
  std::optional<CycleRecord> non_symplectic_cycle;
  std::optional<CycleRecord> non_unitary_cycle;
  std::size_t connect_up_added = 0;
  std::size_t winkle_added = 0;
  std::size_t post_checks = 0;
  std::size_t post_check_failures = 0;
};

struct CertifyOptions {
  ClassifyOptions classify;
  std::size_t max_size = 128;
  std::size_t post_checks = 100;
  std::uint64_t seed = 1;
};

Certificate certify(const std::vector<Transvection>& t, const CertifyOptions& opts = {});

// Classifies the section of a strongly connected superset of T0.
ClassificationReport classify_section(const std::vector<Transvection>& t, const ClassifyOptions& opts = {});

}  // namespace transvect
