#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace transvect;

namespace {

const Field F2 = Field::create(2, 1);

std::vector<Transvection> lift(const std::vector<Transvection>& t, const Field& F) {
  std::vector<Transvection> out;
  for (const auto& x : t) out.emplace_back(Vector(F, x.v().values()), Covector(F, x.phi().values()));
  return out;
}

GroupTypeTag tag(TagKind k, std::uint32_t a = 0) { return GroupTypeTag{k, a, ""}; }

std::uint64_t factorial(std::size_t m) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= m; ++i) r *= i;
  return r;
}

// Spanning orbits of size n + 1, by brute force over all nonzero vectors.
std::size_t spanning_orbit_count(const std::vector<Matrix>& gens, std::size_t n) {
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> seen(total, false);
  std::size_t count = 0;
  for (std::uint64_t c = 1; c < total; ++c) {
    if (seen[c]) continue;
    std::vector<std::uint64_t> orbit{c};
    seen[c] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : gens) {
        Vector x = g * Vector(F2, vector_from_code(orbit[i], n, 2));
        const auto code = vector_code(x.entries(), 2);
        if (!seen[code]) seen[code] = true, orbit.push_back(code);
      }
    if (orbit.size() != n + 1) continue;
    std::vector<Vector> vs;
    for (auto o : orbit) vs.emplace_back(F2, vector_from_code(o, n, 2));
    if (rank(Matrix::from_vectors(F2, n, vs)) == n) ++count;
  }
  return count;
}

}  // namespace

TEST(Tags, RoundTripAndFormulas) {
  for (const auto& t : {tag(TagKind::Linear), tag(TagKind::Unitary), tag(TagKind::Symplectic),
                        tag(TagKind::OrthogonalPlus), tag(TagKind::OrthogonalMinus), tag(TagKind::Monomial, 5),
                        tag(TagKind::SymmetricOdd), tag(TagKind::SymmetricEven), tag(TagKind::Undetermined),
                        GroupTypeTag{TagKind::Exceptional, 0, "SL2(5)"}})
    EXPECT_EQ(parse_tag(to_string(t)), t) << to_string(t);
  EXPECT_THROW(parse_tag("Bogus"), Error);
  EXPECT_EQ(order_formula(tag(TagKind::Linear), 2, 2), 6u);
  EXPECT_EQ(order_formula(tag(TagKind::Linear), 3, 3), 5616u);
  EXPECT_EQ(order_formula(tag(TagKind::Symplectic), 4, 2), 720u);
  EXPECT_EQ(order_formula(tag(TagKind::Symplectic), 6, 2), 1451520u);
  EXPECT_EQ(order_formula(tag(TagKind::Monomial, 3), 2, 4), 6u);
  EXPECT_EQ(order_formula(tag(TagKind::Unitary), 3, 9), 6048u);
  EXPECT_EQ(order_formula(tag(TagKind::Unitary), 4, 4), 25920u);
  EXPECT_EQ(order_formula(tag(TagKind::OrthogonalPlus), 4, 2), 72u);
  EXPECT_EQ(order_formula(tag(TagKind::OrthogonalMinus), 4, 2), 120u);
  EXPECT_EQ(order_formula(tag(TagKind::OrthogonalPlus), 6, 2), 40320u);
  EXPECT_EQ(order_formula(tag(TagKind::SymmetricOdd), 4, 2), 120u);
  EXPECT_EQ(order_formula(tag(TagKind::SymmetricEven), 4, 2), 720u);
  EXPECT_THROW(order_formula(tag(TagKind::Undetermined), 2, 2), Error);
}

TEST(Enumerate, Examples) {
  auto e = enumerate_group({Matrix::from_rows(F2, {{1, 1}, {0, 1}}), Matrix::from_rows(F2, {{1, 0}, {1, 1}})});
  EXPECT_EQ(e.order(), 6u);
  EXPECT_EQ(enumerate_group({Matrix::identity(F2, 3)}).order(), 1u);
  EXPECT_EQ(enumerate_group(matrices(build_symmetric_rep(6))).order(), 720u);
}

TEST(Enumerate, OrderFormulaCrossCheck) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field F = q == 4 ? Field::create(2, 2) : Field::create(q, 1);
    EXPECT_EQ(enumerate_group(matrices(elementary_generators(2, F))).order(), order_formula(tag(TagKind::Linear), 2, q));
  }
  for (std::uint32_t q : {2u, 3u})
    EXPECT_EQ(enumerate_group(matrices(elementary_generators(3, Field::create(q, 1)))).order(),
              order_formula(tag(TagKind::Linear), 3, q));
  EXPECT_EQ(enumerate_group(matrices(form_transvections(standard_symplectic_form(F2, 4)))).order(),
            order_formula(tag(TagKind::Symplectic), 4, 2));
  const Field F9 = Field::create(3, 2);
  EXPECT_EQ(enumerate_group(matrices(form_transvections(standard_unitary_form(F9, 3)))).order(),
            order_formula(tag(TagKind::Unitary), 3, 9));
  for (std::size_t m = 5; m <= 8; ++m) {
    const std::size_t n = m - (m % 2 ? 1 : 2);
    EXPECT_EQ(enumerate_group(matrices(build_symmetric_rep(m))).order(),
              order_formula(tag(m % 2 ? TagKind::SymmetricOdd : TagKind::SymmetricEven), n, 2));
  }
  EXPECT_EQ(enumerate_group(matrices(build_monomial_group(3, 3, Field::create(2, 2)))).order(),
            order_formula(tag(TagKind::Monomial, 3), 3, 4));
  EXPECT_EQ(enumerate_group(matrices(build_monomial_group(2, 3, Field::create(2, 2)))).order(),
            order_formula(tag(TagKind::Monomial, 3), 2, 4));
}

TEST(Builders, SymmetricRep) {
  auto s6 = build_symmetric_rep(6);
  EXPECT_EQ(s6.size(), 5u);
  EXPECT_EQ(s6[0].dimension(), 4u);
  auto s5 = build_symmetric_rep(5);
  EXPECT_EQ(s5[0].dimension(), 4u);
  EXPECT_EQ(enumerate_group(matrices(s5)).order(), 120u);
  EXPECT_THROW(build_symmetric_rep(4), Error);
}

TEST(Builders, Monomial) {
  const Field F4 = Field::create(2, 2);
  auto m = build_monomial_group(2, 3, F4);
  for (const auto& t : m) {
    Matrix a = t.matrix();
    EXPECT_EQ(a(0, 0), 0u);
    EXPECT_EQ(a(1, 1), 0u);
    EXPECT_EQ(F4.mul(a(0, 1), a(1, 0)), 1u);
    EXPECT_EQ(F4.pow(a(1, 0), 3), 1u);
  }
  EXPECT_THROW(build_monomial_group(2, 2, F4), Error);
  EXPECT_THROW(build_monomial_group(2, 5, F4), Error);
  EXPECT_THROW(build_monomial_group(2, 3, Field::create(7, 1)), Error);
}

TEST(SymmetricRep, TranspositionsAreExactlyTheTransvections) {
  for (std::size_t m : {5u, 6u, 7u}) {
    SymmetricRep rep(m);
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t transpositions = 0;
    do {
      std::size_t moved = 0;
      for (std::size_t i = 0; i < m; ++i) moved += perm[i] != i;
      const bool is_transposition = moved == 2;
      ASSERT_EQ(is_transvection_matrix(rep.rho(perm)), is_transposition);
      transpositions += is_transposition;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(transpositions, m * (m - 1) / 2);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      std::vector<std::size_t> p(m);
      std::iota(p.begin(), p.end(), 0);
      std::swap(p[i], p[i + 1]);
      EXPECT_EQ(rep.rho(p), rep.generators()[i].matrix());
    }
  }
}

TEST(SymmetricRep, Homomorphism) {
  SymmetricRep rep(7);
  std::mt19937_64 rng(113);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::size_t> a(7), b(7), ab(7);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    for (std::size_t j = 0; j < 7; ++j) ab[j] = a[b[j]];
    EXPECT_EQ(rep.rho(ab), rep.rho(a) * rep.rho(b));
  }
}

TEST(DetectSymmetric, ExamplesAndUniqueness) {
  for (std::size_t m = 5; m <= 8; ++m) {
    auto gens = matrices(build_symmetric_rep(m));
    const std::size_t n = gens[0].rows();
    auto b = detect_symmetric_type(gens);
    if (m % 2 == 0) {
      // even m: the images of the e_i form an orbit of size n + 2
      EXPECT_FALSE(b.has_value()) << m;
      EXPECT_EQ(spanning_orbit_count(gens, n), 0u) << m;
      continue;
    }
    ASSERT_TRUE(b.has_value()) << m;
    EXPECT_EQ(b->size(), n + 1);
    EXPECT_EQ(rank(Matrix::from_vectors(F2, n, *b)), n);
    std::set<Vector> bs(b->begin(), b->end());
    for (const auto& g : gens)
      for (const auto& x : *b) EXPECT_TRUE(bs.count(g * x));
    EXPECT_EQ(spanning_orbit_count(gens, n), 1u) << m;
  }
  EXPECT_FALSE(detect_symmetric_type(matrices(form_transvections(standard_symplectic_form(F2, 4)))).has_value());
  EXPECT_THROW(detect_symmetric_type({Matrix::from_rows(F2, {{1, 1}, {0, 1}})}), Error);
  EXPECT_THROW(detect_symmetric_type(matrices(elementary_generators(2, Field::create(3, 1)))), Error);
}

TEST(DetectMonomial, Examples) {
  const Field F4 = Field::create(2, 2);
  auto m = detect_monomial_structure(matrices(build_monomial_group(2, 3, F4)));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->a, 3u);
  ASSERT_EQ(m->lines.size(), 2u);
  std::set<Vector> lines;
  for (const auto& v : m->lines) lines.insert(normalized(v));
  EXPECT_EQ(lines, (std::set<Vector>{Vector::unit(F4, 2, 0), Vector::unit(F4, 2, 1)}));
  EXPECT_FALSE(detect_monomial_structure(matrices(form_transvections(standard_symplectic_form(F4, 2)))).has_value());
  EXPECT_THROW(detect_monomial_structure({Matrix::from_rows(F4, {{1, 1}, {0, 1}})}), Error);
  auto m4 = detect_monomial_structure(matrices(build_monomial_group(4, 5, Field::create(2, 4))));
  ASSERT_TRUE(m4.has_value());
  EXPECT_EQ(m4->a, 5u);
  EXPECT_EQ(m4->lines.size(), 4u);
}

TEST(Closure, ConjugateClosure) {
  std::vector<Transvection> pair{Transvection(Vector::unit(F2, 2, 0), Covector::unit(F2, 2, 1)),
                                 Transvection(Vector::unit(F2, 2, 1), Covector::unit(F2, 2, 0))};
  auto c = conjugate_closure(pair);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], pair[0]);
  EXPECT_EQ(conjugate_closure(build_symmetric_rep(6)).size(), 15u);
  EXPECT_THROW(conjugate_closure(build_symmetric_rep(6), 10), Error);
}

TEST(Descent, SubfieldRewrite) {
  const Field F4 = Field::create(2, 2);
  std::mt19937_64 rng(127);
  auto base = build_symmetric_rep(6);
  Matrix h = Matrix::identity(F4, 4);
  for (int i = 0; i < 6; ++i) h = h * oracle::random_transvection(F4, 4, rng).matrix();
  std::vector<Transvection> conj;
  for (const auto& t : lift(base, F4)) conj.push_back(t.conjugate(h));
  TransvectionGraph g(conj);
  auto d = descend_to_subfield(g, 1);
  ASSERT_EQ(d.generators.size(), conj.size());
  EXPECT_EQ(d.generators[0].field(), F2);
  TransvectionGraph gd(d.generators);
  for (const auto& c : cycles_up_to(g, 4)) EXPECT_EQ(walk_weight(gd, c.vertices), c.weight);
  EXPECT_EQ(enumerate_group(matrices(d.generators)).order(), 720u);
  Matrix binv = matinv(d.basis);
  for (std::size_t i = 0; i < conj.size(); ++i)
    EXPECT_EQ(binv * conj[i].matrix() * d.basis, lift({d.generators[i]}, F4)[0].matrix());
}

TEST(Classify, Examples) {
  auto sp = classify(form_transvections(standard_symplectic_form(F2, 4)));
  EXPECT_EQ(sp.tag, tag(TagKind::Symplectic));
  EXPECT_EQ(sp.field_degree, 1u);
  EXPECT_EQ(sp.enumerated_order, 720u);
  EXPECT_TRUE(sp.matches(tag(TagKind::SymmetricEven)));

  auto s7 = classify(build_symmetric_rep(7));
  EXPECT_EQ(s7.tag, tag(TagKind::SymmetricOdd));
  EXPECT_EQ(s7.enumerated_order, 5040u);
  EXPECT_TRUE(s7.symmetric_set.has_value());

  auto s5 = classify(build_symmetric_rep(5));
  EXPECT_TRUE(s5.matches(tag(TagKind::SymmetricOdd)));
  EXPECT_TRUE(s5.matches(tag(TagKind::OrthogonalMinus)));

  const Field F4 = Field::create(2, 2);
  auto lin = classify(elementary_generators(2, F4));
  EXPECT_EQ(lin.tag, tag(TagKind::Linear));
  EXPECT_EQ(lin.field_degree, 2u);
  EXPECT_EQ(lin.enumerated_order, 60u);

  auto sl3 = classify(elementary_generators(3, Field::create(3, 1)));
  EXPECT_EQ(sl3.tag, tag(TagKind::Linear));
  EXPECT_TRUE(sl3.non_symplectic_cycle.has_value());

  auto mono = classify(build_monomial_group(3, 3, F4));
  EXPECT_EQ(mono.tag, tag(TagKind::Monomial, 3));
  EXPECT_EQ(mono.enumerated_order, 54u);

  auto su = classify(form_transvections(standard_unitary_form(Field::create(3, 2), 3)));
  EXPECT_EQ(su.tag, tag(TagKind::Unitary));
  EXPECT_EQ(su.enumerated_order, 6048u);
  EXPECT_TRUE(su.unitary_form.has_value());

  auto Q = standard_quadratic_form(F2, 6, 1);
  auto o6 = classify(quadratic_transvections(Q));
  EXPECT_TRUE(o6.matches(tag(TagKind::OrthogonalPlus)));
  EXPECT_EQ(o6.enumerated_order, 40320u);
  ASSERT_TRUE(o6.quadratic_form.has_value());
  EXPECT_EQ(o6.quadratic_form->witt_sign(), 1);
}

TEST(Classify, Subfield) {
  const Field F4 = Field::create(2, 2);
  auto r = classify(lift(build_symmetric_rep(6), F4));
  EXPECT_TRUE(r.subfield);
  EXPECT_EQ(r.field_degree, 1u);
  EXPECT_EQ(r.ambient_degree, 2u);
  EXPECT_TRUE(r.matches(tag(TagKind::Symplectic)));
  EXPECT_EQ(r.enumerated_order, 720u);
}

TEST(Classify, ExceptionalSL25InSL29) {
  const Field F9 = Field::create(3, 2);
  std::mt19937_64 rng(131);
  bool found = false;
  for (int attempt = 0; attempt < 400 && !found; ++attempt) {
    std::vector<Transvection> t{oracle::random_transvection(F9, 2, rng), oracle::random_transvection(F9, 2, rng)};
    if (!is_irreducible(TransvectionGraph(t)).irreducible) continue;
    if (enumerate_group(matrices(t)).order() != 120) continue;
    found = true;
    auto r = classify(t);
    EXPECT_EQ(r.tag.kind, TagKind::Exceptional);
    EXPECT_EQ(r.tag.label, "SL2(5)");
  }
  EXPECT_TRUE(found);
}

TEST(Classify, Errors) {
  try {
    classify({Transvection(Vector::unit(F2, 2, 0), Covector::unit(F2, 2, 1))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIrreducible);
  }
  ClassifyOptions tight;
  tight.budgets.elements = 100;
  auto r = classify(form_transvections(standard_symplectic_form(F2, 4)), tight);
  EXPECT_EQ(r.tag, tag(TagKind::Symplectic));
  EXPECT_FALSE(r.enumerated_order.has_value());
}

TEST(Classify, RandomSetsAgreeWithOrder) {
  std::mt19937_64 rng(137);
  for (const auto& F : {Field::create(2, 1), Field::create(3, 1), Field::create(2, 2)})
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t n = 2 + rng() % 2;
      auto t = oracle::random_irreducible(F, n, rng);
      auto r = classify(t);
      ASSERT_TRUE(r.enumerated_order.has_value());
      EXPECT_EQ(*r.enumerated_order, oracle::naive_group_order(oracle::mats(t)));
      if (r.tag.kind != TagKind::Exceptional && r.tag.kind != TagKind::Undetermined) {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < r.field_degree; ++i) q *= F.characteristic();
        EXPECT_EQ(order_formula(r.tag, n, q), *r.enumerated_order) << to_string(r.tag);
      }
    }
}

TEST(Certify, Sp4AndWordReplay) {
  auto t = build_symmetric_rep(6);
  auto c = certify(t);
  EXPECT_TRUE(c.tag == tag(TagKind::Symplectic) || c.tag == tag(TagKind::SymmetricEven));
  EXPECT_LE(c.elements.size(), 128u);
  ASSERT_EQ(c.words.size(), c.elements.size());
  for (std::size_t i = 0; i < c.elements.size(); ++i)
    EXPECT_EQ(evaluate(c.words[i], std::span<const Transvection>(t)), c.elements[i].matrix());
  EXPECT_EQ(c.post_checks, 100u);
  EXPECT_EQ(c.post_check_failures, 0u);
  auto sec = classify_section(c.elements);
  EXPECT_TRUE(sec.matches(c.tag));
}

TEST(Certify, FieldWitnessOutsidePrimeField) {
  const Field F4 = Field::create(2, 2);
  auto t = form_transvections(standard_symplectic_form(F4, 2));
  CertifyOptions opts;
  opts.post_checks = 20;
  auto c = certify(t, opts);
  EXPECT_EQ(c.tag, tag(TagKind::Linear));
  EXPECT_EQ(c.field_degree, 2u);
  bool outside = false;
  for (const auto& w : c.field_witnesses) outside |= F4.subfield_degree(w.weight) == 2;
  EXPECT_TRUE(outside);
  EXPECT_EQ(c.post_check_failures, 0u);
}

TEST(Certify, RejectsNonClassical) {
  try {
    certify(build_symmetric_rep(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedTag);
  }
}
