#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "transvect/error.hpp"

namespace transvect {

// Raw field element: the integer sum(d_i * p^i) of its polynomial-basis
// digits. Containers store Elem; arithmetic goes through a Field.
using Elem = std::uint32_t;

namespace detail {
struct FieldData;
}

class Field {
 public:
  Field() = default;

  // GF(p^f) with the smallest monic irreducible modulus (by integer code).
  static Field create(std::uint32_t p, std::uint32_t f);
  // Accepts "p^f" or a prime power "q".
  static Field parse(std::string_view text);

  bool valid() const { return data_ != nullptr; }
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint64_t order() const;
  const std::vector<std::uint32_t>& modulus() const;
  std::string name() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;

  Elem frobenius(Elem a) const;  // a^p
  bool has_involution() const;
  Elem involution(Elem a) const;  // a^(p^(f/2)); NoInvolution if f is odd
  Elem trace_half(Elem a) const;  // a + involution(a)
  Elem absolute_trace(Elem a) const;
  Elem sqrt2(Elem a) const;  // unique square root in characteristic 2

  // Degree over GF(p) of the subfield generated by a.
  std::uint32_t subfield_degree(Elem a) const;
  std::uint32_t subfield_degree(std::span<const Elem> xs) const;
  bool in_subfield(Elem a, std::uint32_t d) const;

  Elem primitive_element() const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> d) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

std::uint64_t ipow(std::uint64_t base, std::uint32_t e);
bool is_prime(std::uint64_t n);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field field, Elem value);
  static FieldElement from_digits(const Field& field, std::span<const std::uint32_t> d);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<std::uint32_t> digits() const { return field_.digits(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void check(const FieldElement& o) const;
  Field field_;
  Elem value_ = 0;
};

FieldElement frobenius_involution(const FieldElement& x);
FieldElement trace_to_index2_subfield(const FieldElement& x);
std::uint32_t subfield_generated(std::span<const FieldElement> xs);
FieldElement primitive_element(const Field& field);

}  // namespace transvect
