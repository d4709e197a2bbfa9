#pragma once

// Brute-force reference implementations used only by the tests. They avoid
// the library's algorithms (rref, graph criteria, Cayley engine) and work
// directly on element codes.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "transvect/classify.hpp"

namespace oracle {

using namespace transvect;

// Schoolbook polynomial arithmetic modulo a given monic modulus.
struct PolyField {
  std::uint32_t p = 2, f = 1;
  std::vector<std::uint32_t> modulus;  // little-endian, size f+1

  explicit PolyField(const Field& F);
  std::vector<std::uint32_t> digits(std::uint64_t code) const;
  std::uint64_t code(const std::vector<std::uint32_t>& d) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
};

// Monic irreducible polynomials of degree f over GF(p), smallest integer code first.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t f);

// Matrix product by the definition.
Matrix naive_mul(const Matrix& a, const Matrix& b);

// True when some nonzero proper subspace is invariant: closes every nonzero
// vector under addition and the generators.
bool has_invariant_subspace(const std::vector<Matrix>& gens);

// Dimension of the space of grams G with g^T G tw(g) = G for all generators.
std::size_t invariant_form_space_dim(const std::vector<Matrix>& gens, Twist twist);

// |<gens>| by closing a std::set of matrices.
std::uint64_t naive_group_order(const std::vector<Matrix>& gens, std::uint64_t cap = 2'000'000);
std::set<std::vector<Elem>> naive_group(const std::vector<Matrix>& gens, std::uint64_t cap = 2'000'000);

// Smallest subfield containing the traces of every group element.
std::uint32_t trace_field_by_enumeration(const std::vector<Matrix>& gens);

// Cayley diameter of the permutation group generated by gens (images of 0..n-1).
std::size_t permutation_diameter(const std::vector<std::vector<std::size_t>>& gens);

// Number of invertible n x n matrices over GF(2) preserving Q (n <= 4).
std::uint64_t count_preserving_gf2(const QuadraticForm& q);

Transvection random_transvection(const Field& F, std::size_t n, std::mt19937_64& rng);
std::vector<Transvection> random_set(const Field& F, std::size_t n, std::size_t k, std::mt19937_64& rng);
// Draws random sets until one is irreducible.
std::vector<Transvection> random_irreducible(const Field& F, std::size_t n, std::mt19937_64& rng);
// Random irreducible subset of a pool.
std::optional<std::vector<Transvection>> random_irreducible_subset(const std::vector<Transvection>& pool,
                                                                   std::size_t k, std::mt19937_64& rng,
                                                                   int attempts = 200);

std::vector<Matrix> mats(const std::vector<Transvection>& t);

}  // namespace oracle
