#include "transvect/group_store.hpp"

#include <bit>
#include <cstring>

namespace transvect {

MatrixCodec::MatrixCodec(Field field, std::size_t n) : field_(std::move(field)), n_(n) {
  bits_ = static_cast<std::size_t>(std::bit_width(field_.order() - 1));
  if (bits_ == 0) bits_ = 1;
  bytes_ = (n_ * n_ * bits_ + 7) / 8;
}

void MatrixCodec::encode_entries(const Elem* in, std::uint8_t* out) const {
  std::memset(out, 0, bytes_);
  std::size_t bit = 0;
  for (std::size_t e = 0; e < n_ * n_; ++e) {
    std::uint64_t v = in[e];
    for (std::size_t b = 0; b < bits_; ++b, ++bit)
      if ((v >> b) & 1) out[bit >> 3] |= static_cast<std::uint8_t>(1u << (bit & 7));
  }
}

void MatrixCodec::decode_entries(const std::uint8_t* key, Elem* out) const {
  std::size_t bit = 0;
  for (std::size_t e = 0; e < n_ * n_; ++e) {
    Elem v = 0;
    for (std::size_t b = 0; b < bits_; ++b, ++bit)
      if ((key[bit >> 3] >> (bit & 7)) & 1) v |= Elem{1} << b;
    out[e] = v;
  }
}

void MatrixCodec::encode(const Matrix& m, std::uint8_t* out) const {
  if (m.rows() != n_ || m.cols() != n_) fail(ErrorCode::DimensionMismatch, "codec dimension");
  encode_entries(m.data().data(), out);
}

std::string MatrixCodec::encode(const Matrix& m) const {
  std::string s(bytes_, '\0');
  encode(m, reinterpret_cast<std::uint8_t*>(s.data()));
  return s;
}

Matrix MatrixCodec::decode(const std::uint8_t* key) const {
  std::vector<Elem> d(n_ * n_);
  decode_entries(key, d.data());
  return Matrix(field_, n_, n_, std::move(d));
}

namespace {

// GF(2) with n*n <= 64: the whole matrix is one 64-bit word, row i in bits [i n, i n + n).
class Gf2Kernel final : public ProductKernel {
 public:
  Gf2Kernel(const MatrixCodec& codec, const std::vector<Matrix>& gens) : n_(codec.dimension()), bytes_(codec.key_bytes()) {
    row_mask_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    for (const auto& g : gens) {
      std::vector<std::uint64_t> rows(n_, 0);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          if (g(i, j)) rows[i] |= std::uint64_t{1} << j;
      gens_.push_back(std::move(rows));
    }
  }
  void multiply(const std::uint8_t* in, std::size_t gen, std::uint8_t* out) const override {
    std::uint64_t a = load(in), c = 0;
    const auto& g = gens_[gen];
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t r = (a >> (i * n_)) & row_mask_, acc = 0;
      while (r) {
        acc ^= g[static_cast<std::size_t>(std::countr_zero(r))];
        r &= r - 1;
      }
      c |= acc << (i * n_);
    }
    std::memcpy(out, &c, bytes_);
  }
  bool is_transvection(const std::uint8_t* key) const override {
    // m - 1 = v (x) phi: nonzero rows all equal phi, and phi(v) = 0
    std::uint64_t a = load(key), seen = 0, v = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t r = ((a >> (i * n_)) & row_mask_) ^ (std::uint64_t{1} << i);
      if (!r) continue;
      if (seen && r != seen) return false;
      seen = r;
      v |= std::uint64_t{1} << i;
    }
    return seen != 0 && std::popcount(seen & v) % 2 == 0;
  }

 private:
  std::uint64_t load(const std::uint8_t* in) const {
    std::uint64_t a = 0;
    std::memcpy(&a, in, bytes_);
    return a;
  }
  std::size_t n_, bytes_;
  std::uint64_t row_mask_;
  std::vector<std::vector<std::uint64_t>> gens_;
};

class GenericKernel final : public ProductKernel {
 public:
  GenericKernel(const MatrixCodec& codec, const std::vector<Matrix>& gens) : codec_(codec), n_(codec.dimension()) {
    for (const auto& g : gens) gens_.push_back(g.data());
  }
  void multiply(const std::uint8_t* in, std::size_t gen, std::uint8_t* out) const override {
    thread_local std::vector<Elem> a, c;
    a.resize(n_ * n_);
    c.assign(n_ * n_, 0);
    codec_.decode_entries(in, a.data());
    const Field& F = codec_.field();
    const auto& g = gens_[gen];
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const Elem x = a[i * n_ + k];
        if (!x) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          const Elem y = g[k * n_ + j];
          if (y) c[i * n_ + j] = F.add(c[i * n_ + j], F.mul(x, y));
        }
      }
    codec_.encode_entries(c.data(), out);
  }
  bool is_transvection(const std::uint8_t* key) const override {
    Matrix m = codec_.decode(key);
    return is_transvection_matrix_local(m);
  }

 private:
  static bool is_transvection_matrix_local(const Matrix& m) {
    Matrix d = m - Matrix::identity(m.field(), m.rows());
    return rank(d) == 1 && det(m) == 1;
  }
  MatrixCodec codec_;
  std::size_t n_;
  std::vector<std::vector<Elem>> gens_;
};

}  // namespace

std::unique_ptr<ProductKernel> ProductKernel::create(const MatrixCodec& codec, const std::vector<Matrix>& gens) {
  if (codec.field().order() == 2 && codec.dimension() * codec.dimension() <= 64)
    return std::make_unique<Gf2Kernel>(codec, gens);
  return std::make_unique<GenericKernel>(codec, gens);
}

ElementStore::ElementStore(std::size_t key_bytes) : kb_(key_bytes) {
  table_.assign(1024, 0);
  mask_ = table_.size() - 1;
}

std::uint64_t ElementStore::hash(const std::uint8_t* key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  std::size_t i = 0;
  for (; i + 8 <= kb_; i += 8) {
    std::uint64_t w;
    std::memcpy(&w, key + i, 8);
    h = (h ^ w) * 0xbf58476d1ce4e5b9ull;
    h ^= h >> 31;
  }
  if (i < kb_) {
    std::uint64_t w = 0;
    std::memcpy(&w, key + i, kb_ - i);
    h = (h ^ w) * 0xbf58476d1ce4e5b9ull;
    h ^= h >> 31;
  }
  h *= 0x94d049bb133111ebull;
  return h ^ (h >> 29);
}

std::size_t ElementStore::find(const std::uint8_t* key) const {
  for (std::uint64_t s = hash(key) & mask_;; s = (s + 1) & mask_) {
    const std::uint32_t slot = table_[s];
    if (!slot) return npos;
    if (std::memcmp(this->key(slot - 1), key, kb_) == 0) return slot - 1;
  }
}

std::pair<std::size_t, bool> ElementStore::insert(const std::uint8_t* key) {
  if ((count_ + 1) * 2 > table_.size()) grow();
  std::uint64_t s = hash(key) & mask_;
  for (;; s = (s + 1) & mask_) {
    const std::uint32_t slot = table_[s];
    if (!slot) break;
    if (std::memcmp(this->key(slot - 1), key, kb_) == 0) return {slot - 1, false};
  }
  keys_.insert(keys_.end(), key, key + kb_);
  table_[s] = static_cast<std::uint32_t>(++count_);
  return {count_ - 1, true};
}

void ElementStore::grow() {
  std::vector<std::uint32_t> old(table_.size() * 2, 0);
  old.swap(table_);
  mask_ = table_.size() - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::uint64_t s = hash(key(i)) & mask_;
    while (table_[s]) s = (s + 1) & mask_;
    table_[s] = static_cast<std::uint32_t>(i + 1);
  }
}

}  // namespace transvect
