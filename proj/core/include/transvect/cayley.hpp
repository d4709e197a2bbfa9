#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "transvect/group_store.hpp"
#include "transvect/transvection.hpp"

namespace transvect {

struct ExploreOptions {
  std::uint64_t cap = 10'000'000;
  std::optional<std::size_t> max_radius;
  bool allow_partial = false;  // stop at the cap instead of raising CapExceeded
  unsigned threads = 0;        // 0: hardware concurrency
};

// Breadth-first exploration of the Cayley graph of <X> with respect to
// X ∪ X^-1 (right multiplication). Expansion of each layer is sharded over
// threads; merging runs in frontier order so results are deterministic.
class CayleyExploration {
 public:
  struct Generator {
    Matrix matrix;
    Letter letter;  // refers to the original list X
  };

  static CayleyExploration explore(const std::vector<Matrix>& gens, const ExploreOptions& opts = {});

  bool complete() const { return complete_; }
  std::size_t size() const { return store_.size(); }
  std::uint64_t order() const;
  std::size_t radius() const { return radius_; }
  std::size_t diameter() const;
  const std::vector<std::uint64_t>& histogram() const { return histogram_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const MatrixCodec& codec() const { return codec_; }

  std::optional<std::size_t> index_of(const Matrix& g) const;
  Matrix element(std::size_t i) const { return codec_.decode(store_.key(i)); }
  const std::uint8_t* key(std::size_t i) const { return store_.key(i); }
  std::size_t distance_of(std::size_t i) const { return dist_[i]; }
  std::size_t distance(const Matrix& g) const;
  Word word_of(std::size_t i) const;
  Word word(const Matrix& g) const;
  bool is_transvection(std::size_t i) const { return kernel_->is_transvection(store_.key(i)); }

 private:
  MatrixCodec codec_;
  std::vector<Generator> gens_;
  std::shared_ptr<ProductKernel> kernel_;
  ElementStore store_;
  std::vector<std::uint16_t> dist_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint16_t> parent_gen_;
  std::vector<std::uint64_t> histogram_;
  std::size_t radius_ = 0;
  bool complete_ = false;
};

CayleyExploration bfs_explore(const std::vector<Matrix>& gens, std::uint64_t cap = 10'000'000);
// Replays the recorded word and checks it evaluates to g.
Word word_recover(const CayleyExploration& e, const Matrix& g);

struct TransvectionBall {
  std::vector<Transvection> elements;
  std::vector<Word> words;  // over T
  std::vector<std::size_t> lengths;
};
TransvectionBall transvection_ball(const std::vector<Transvection>& t, std::size_t r, std::uint64_t cap = 10'000'000);

struct LengthProfile {
  std::size_t max_length = 0;
  std::vector<std::uint64_t> histogram;
  std::size_t transvection_count = 0;
  std::uint64_t order = 0;
};
// Word lengths in G over the set of all transvections of G.
LengthProfile transvection_length_profile(const std::vector<Matrix>& gens, std::uint64_t cap = 10'000'000);

struct BidirectionalResult {
  std::size_t distance = 0;
  Word word;
};
BidirectionalResult bidirectional_distance(const std::vector<Matrix>& gens, const Matrix& g,
                                           std::uint64_t cap = 10'000'000);

}  // namespace transvect
