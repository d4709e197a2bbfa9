#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "transvect/linalg.hpp"

namespace transvect {

// n x n matrices packed row-major, ceil(log2 q) bits per entry, little-endian
// into bytes. The packed bytes are the canonical element key.
class MatrixCodec {
 public:
  MatrixCodec() = default;
  MatrixCodec(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t dimension() const { return n_; }
  std::size_t key_bytes() const { return bytes_; }
  std::size_t bits_per_entry() const { return bits_; }

  void encode(const Matrix& m, std::uint8_t* out) const;
  std::string encode(const Matrix& m) const;
  Matrix decode(const std::uint8_t* key) const;
  void decode_entries(const std::uint8_t* key, Elem* out) const;
  void encode_entries(const Elem* in, std::uint8_t* out) const;

 private:
  Field field_;
  std::size_t n_ = 0, bits_ = 0, bytes_ = 0;
};

// Right multiplication of packed elements by a fixed generator list.
class ProductKernel {
 public:
  virtual ~ProductKernel() = default;
  virtual void multiply(const std::uint8_t* in, std::size_t gen, std::uint8_t* out) const = 0;
  virtual bool is_transvection(const std::uint8_t* key) const = 0;
  static std::unique_ptr<ProductKernel> create(const MatrixCodec& codec, const std::vector<Matrix>& gens);
};

// Insert-only hash set of fixed-size keys; indices follow insertion order.
class ElementStore {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  explicit ElementStore(std::size_t key_bytes = 1);

  std::size_t size() const { return count_; }
  std::size_t key_bytes() const { return kb_; }
  const std::uint8_t* key(std::size_t i) const { return keys_.data() + i * kb_; }
  std::size_t find(const std::uint8_t* key) const;
  std::pair<std::size_t, bool> insert(const std::uint8_t* key);

 private:
  std::uint64_t hash(const std::uint8_t* key) const;
  void grow();
  std::size_t kb_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> keys_;
  std::vector<std::uint32_t> table_;  // slot -> index + 1, 0 empty
  std::uint64_t mask_ = 0;
};

}  // namespace transvect
