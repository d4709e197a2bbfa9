#include <gtest/gtest.h>

#include "oracles.hpp"
#include "transvect/gf.hpp"

using namespace transvect;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmall = {
    {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}};

}  // namespace

TEST(Field, ModulusExamples) {
  EXPECT_EQ(Field::create(2, 1).modulus(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(Field::create(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(Field::create(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, ModulusIsSmallestIrreducible) {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 8}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    EXPECT_EQ(Field::create(p, f).modulus(), oracle::smallest_irreducible(p, f)) << p << "^" << f;
  }
}

TEST(Field, Deterministic) {
  EXPECT_EQ(Field::create(2, 4), Field::create(2, 4));
  EXPECT_EQ(Field::parse("2^4"), Field::create(2, 4));
  EXPECT_EQ(Field::parse("9"), Field::create(3, 2));
  EXPECT_EQ(Field::parse("7"), Field::create(7, 1));
}

TEST(Field, Errors) {
  EXPECT_THROW(Field::create(4, 1), Error);
  EXPECT_THROW(Field::create(2, 0), Error);
  try {
    Field::create(6, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
  try {
    Field::create(3, 21);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooLarge);
  }
  EXPECT_THROW(Field::parse("x^2"), Error);
  const Field F = Field::create(3, 1);
  try {
    F.inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(Field, ArithmeticExamples) {
  const Field F4 = Field::create(2, 2);
  const Elem w = 2;
  EXPECT_EQ(F4.mul(w, F4.add(w, 1)), 1u);
  for (Elem x = 0; x < 4; ++x) EXPECT_EQ(F4.add(x, 0), x);
  EXPECT_EQ(Field::create(3, 1).inv(2), 2u);
}

TEST(Field, MultiplicationMatchesPolynomialOracle) {
  for (auto [p, f] : kSmall) {
    const Field F = Field::create(p, f);
    oracle::PolyField P(F);
    for (Elem a = 0; a < F.order(); ++a)
      for (Elem b = 0; b < F.order(); ++b) {
        ASSERT_EQ(F.mul(a, b), P.mul(a, b)) << F.name() << " " << a << "*" << b;
        ASSERT_EQ(F.add(a, b), P.add(a, b)) << F.name();
      }
  }
  // table-free path
  const Field big = Field::create(3, 13);
  oracle::PolyField P(big);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Elem a = rng() % big.order(), b = rng() % big.order();
    ASSERT_EQ(big.mul(a, b), P.mul(a, b));
  }
}

TEST(Field, AxiomsExhaustive) {
  for (auto [p, f] : kSmall) {
    const Field F = Field::create(p, f);
    const Elem q = static_cast<Elem>(F.order());
    for (Elem a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), 0u);
      EXPECT_EQ(F.sub(a, a), 0u);
      if (a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
      if (a) EXPECT_EQ(F.div(a, a), 1u);
      EXPECT_EQ(F.pow(a, F.order()), a);
      for (Elem b = 0; b < q; ++b) {
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        for (Elem c = 0; c < q; c += (q > 8 ? 3 : 1)) {
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST(Field, FieldElementOperators) {
  const Field F = Field::create(2, 2);
  FieldElement w(F, 2), one(F, 1);
  EXPECT_EQ((w * (w + one)).value(), 1u);
  EXPECT_EQ((w / w).value(), 1u);
  EXPECT_EQ(w.inv().value(), 3u);
  EXPECT_EQ(w.pow(3).value(), 1u);
  EXPECT_EQ((-w).value(), 2u);
  FieldElement other(Field::create(3, 1), 1);
  try {
    (void)(w + other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  EXPECT_THROW(FieldElement(F, 4), Error);
  EXPECT_EQ(FieldElement::from_digits(F, std::vector<std::uint32_t>{0, 1}).value(), 2u);
  EXPECT_EQ(w.digits(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Field, InvolutionExamples) {
  const Field F4 = Field::create(2, 2);
  EXPECT_EQ(frobenius_involution(FieldElement(F4, 2)).value(), 3u);
  EXPECT_EQ(frobenius_involution(FieldElement(F4, 1)).value(), 1u);
  const Field F9 = Field::create(3, 2);
  for (Elem x = 0; x < 9; ++x) EXPECT_EQ(F9.involution(F9.involution(x)), x);
  try {
    Field::create(2, 3).involution(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoInvolution);
  }
}

TEST(Field, InvolutionIsAutomorphismFixingHalfField) {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 4}, {5, 2}}) {
    const Field F = Field::create(p, f);
    std::size_t fixed = 0;
    for (Elem a = 0; a < F.order(); ++a) {
      if (F.involution(a) == a) {
        ++fixed;
        EXPECT_TRUE(F.in_subfield(a, f / 2));
      }
      for (Elem b = 0; b < F.order(); ++b) {
        ASSERT_EQ(F.involution(F.mul(a, b)), F.mul(F.involution(a), F.involution(b)));
        ASSERT_EQ(F.involution(F.add(a, b)), F.add(F.involution(a), F.involution(b)));
      }
    }
    EXPECT_EQ(fixed * fixed, F.order());
  }
}

TEST(Field, TraceToHalfField) {
  const Field F4 = Field::create(2, 2);
  EXPECT_EQ(trace_to_index2_subfield(FieldElement(F4, 2)).value(), 1u);
  EXPECT_EQ(trace_to_index2_subfield(FieldElement(F4, 0)).value(), 0u);
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 4}, {5, 2}, {7, 2}, {3, 4}}) {
    const Field F = Field::create(p, f);
    std::set<Elem> image;
    for (Elem a = 0; a < F.order(); ++a) {
      const Elem t = F.trace_half(a);
      EXPECT_EQ(F.involution(t), t);
      image.insert(t);
    }
    std::size_t fixed = 0;
    for (Elem a = 0; a < F.order(); ++a) fixed += F.involution(a) == a;
    EXPECT_EQ(image.size(), fixed) << F.name();
  }
}

TEST(Field, NormsCoverFixedField) {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 4}, {5, 2}}) {
    const Field F = Field::create(p, f);
    std::set<Elem> norms, fixed;
    for (Elem z = 0; z < F.order(); ++z) {
      norms.insert(F.mul(z, F.involution(z)));
      if (F.involution(z) == z) fixed.insert(z);
    }
    EXPECT_EQ(norms, fixed) << F.name();
  }
}

TEST(Field, SubfieldGenerated) {
  const Field F4 = Field::create(2, 2);
  std::vector<FieldElement> xs{FieldElement(F4, 0), FieldElement(F4, 1)};
  EXPECT_EQ(subfield_generated(xs), 1u);
  xs = {FieldElement(F4, 2)};
  EXPECT_EQ(subfield_generated(xs), 2u);
  const Field F16 = Field::create(2, 4);
  const Elem g = F16.primitive_element();
  xs = {FieldElement(F16, F16.pow(g, 5))};
  EXPECT_EQ(subfield_generated(xs), 2u);
}

TEST(Field, SubfieldDegreeMatchesMinimalPolynomialRoots) {
  // degree of x = size of its Frobenius orbit
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 6}, {2, 4}, {3, 2}, {2, 3}, {5, 2}, {3, 3}}) {
    const Field F = Field::create(p, f);
    for (Elem x = 0; x < F.order(); ++x) {
      std::set<Elem> orbit{x};
      for (Elem y = F.frobenius(x); y != x; y = F.frobenius(y)) orbit.insert(y);
      ASSERT_EQ(F.subfield_degree(x), orbit.size()) << F.name() << " " << x;
    }
  }
}

TEST(Field, PrimitiveElement) {
  EXPECT_EQ(primitive_element(Field::create(2, 1)).value(), 1u);
  EXPECT_EQ(primitive_element(Field::create(2, 2)).value(), 2u);
  EXPECT_EQ(primitive_element(Field::create(5, 1)).value(), 2u);
  for (auto [p, f] : kSmall) {
    const Field F = Field::create(p, f);
    const Elem g = F.primitive_element();
    std::set<Elem> powers;
    Elem x = 1;
    for (std::uint64_t i = 0; i + 1 < F.order(); ++i, x = F.mul(x, g)) powers.insert(x);
    EXPECT_EQ(powers.size(), F.order() - 1) << F.name();
    // smallest generator
    for (Elem c = 1; c < g; ++c) {
      std::set<Elem> ps;
      Elem y = 1;
      for (std::uint64_t i = 0; i + 1 < F.order(); ++i, y = F.mul(y, c)) ps.insert(y);
      EXPECT_LT(ps.size(), F.order() - 1);
    }
  }
}

TEST(Field, Char2Helpers) {
  const Field F = Field::create(2, 3);
  for (Elem a = 0; a < 8; ++a) EXPECT_EQ(F.mul(F.sqrt2(a), F.sqrt2(a)), a);
  std::size_t zero_trace = 0;
  for (Elem a = 0; a < 8; ++a) {
    const Elem t = F.absolute_trace(a);
    EXPECT_LE(t, 1u);
    zero_trace += t == 0;
  }
  EXPECT_EQ(zero_trace, 4u);
}

TEST(Field, DigitsRoundTrip) {
  const Field F = Field::create(3, 3);
  for (Elem a = 0; a < F.order(); ++a) EXPECT_EQ(F.from_digits(F.digits(a)), a);
  EXPECT_EQ(F.from_int(-1), 2u);
}
