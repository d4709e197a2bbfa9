#include "transvect/cayley.hpp"

#include <algorithm>
#include <thread>

namespace transvect {

namespace {

constexpr std::uint32_t no_parent = 0xffffffffu;
constexpr std::size_t block_size = 1 << 14;

std::vector<CayleyExploration::Generator> symmetric_generators(const std::vector<Matrix>& gens) {
  if (gens.empty()) fail(ErrorCode::BadParameters, "empty generating set");
  const Field& F = gens[0].field();
  const std::size_t n = gens[0].rows();
  for (const auto& g : gens) {
    if (g.field() != F) fail(ErrorCode::FieldMismatch, "generators over different fields");
    if (!g.square() || g.rows() != n) fail(ErrorCode::DimensionMismatch, "generators differ in shape");
  }
  std::vector<CayleyExploration::Generator> out;
  auto add = [&](const Matrix& m, Letter l) {
    if (m.is_identity()) return;
    for (const auto& g : out)
      if (g.matrix == m) return;
    out.push_back({m, l});
  };
  for (std::size_t i = 0; i < gens.size(); ++i) add(gens[i], {static_cast<std::uint32_t>(i), false});
  for (std::size_t i = 0; i < gens.size(); ++i) add(matinv(gens[i]), {static_cast<std::uint32_t>(i), true});
  return out;
}

}  // namespace

CayleyExploration CayleyExploration::explore(const std::vector<Matrix>& gens, const ExploreOptions& opts) {
  CayleyExploration e;
  e.gens_ = symmetric_generators(gens);
  const Field& F = gens[0].field();
  const std::size_t n = gens[0].rows();
  e.codec_ = MatrixCodec(F, n);
  std::vector<Matrix> mats;
  for (const auto& g : e.gens_) mats.push_back(g.matrix);
  e.kernel_ = ProductKernel::create(e.codec_, mats);
  const std::size_t kb = e.codec_.key_bytes();
  const std::size_t k = e.gens_.size();
  e.store_ = ElementStore(kb);

  std::vector<std::uint8_t> id(kb);
  e.codec_.encode(Matrix::identity(F, n), id.data());
  e.store_.insert(id.data());
  e.dist_.push_back(0);
  e.parent_.push_back(no_parent);
  e.parent_gen_.push_back(0);
  e.histogram_.push_back(1);

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::uint8_t> products;
  std::vector<std::uint8_t> known;
  std::size_t begin = 0, end = 1;
  if (k == 0) {
    e.complete_ = true;
    return e;
  }
  while (begin < end) {
    if (opts.max_radius && e.radius_ >= *opts.max_radius) return e;
    for (std::size_t b0 = begin; b0 < end; b0 += block_size) {
      const std::size_t b1 = std::min(end, b0 + block_size);
      const std::size_t count = (b1 - b0) * k;
      products.resize(count * kb);
      known.assign(count, 0);
      auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t x = lo; x < hi; ++x)
          for (std::size_t g = 0; g < k; ++g) {
            const std::size_t slot = (x - b0) * k + g;
            std::uint8_t* out = products.data() + slot * kb;
            e.kernel_->multiply(e.store_.key(x), g, out);
            known[slot] = e.store_.find(out) != ElementStore::npos;
          }
      };
      const std::size_t span = b1 - b0;
      if (threads > 1 && span >= 1024) {
        std::vector<std::thread> pool;
        const std::size_t chunk = (span + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
          const std::size_t lo = b0 + t * chunk, hi = std::min(b1, lo + chunk);
          if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
      } else {
        work(b0, b1);
      }
      for (std::size_t slot = 0; slot < count; ++slot) {
        if (known[slot]) continue;
        const std::uint8_t* key = products.data() + slot * kb;
        if (e.store_.size() >= opts.cap && e.store_.find(key) == ElementStore::npos) {
          if (opts.allow_partial) return e;
          fail(ErrorCode::CapExceeded, "group exceeds " + std::to_string(opts.cap) + " elements (radius " +
                                           std::to_string(e.radius_) + " reached)");
        }
        auto [idx, fresh] = e.store_.insert(key);
        if (!fresh) continue;
        e.dist_.push_back(static_cast<std::uint16_t>(e.radius_ + 1));
        e.parent_.push_back(static_cast<std::uint32_t>(b0 + slot / k));
        e.parent_gen_.push_back(static_cast<std::uint16_t>(slot % k));
      }
    }
    begin = end;
    end = e.store_.size();
    if (begin == end) break;
    e.histogram_.push_back(end - begin);
    ++e.radius_;
  }
  e.complete_ = true;
  return e;
}

std::uint64_t CayleyExploration::order() const {
  if (!complete_) fail(ErrorCode::CapExceeded, "exploration is incomplete");
  return store_.size();
}

std::size_t CayleyExploration::diameter() const {
  if (!complete_) fail(ErrorCode::CapExceeded, "exploration is incomplete");
  return radius_;
}

std::optional<std::size_t> CayleyExploration::index_of(const Matrix& g) const {
  if (g.field() != codec_.field() || g.rows() != codec_.dimension() || g.cols() != codec_.dimension())
    fail(ErrorCode::DimensionMismatch, "element shape differs from the group");
  std::vector<std::uint8_t> key(codec_.key_bytes());
  codec_.encode(g, key.data());
  std::size_t i = store_.find(key.data());
  if (i == ElementStore::npos) return std::nullopt;
  return i;
}

std::size_t CayleyExploration::distance(const Matrix& g) const {
  auto i = index_of(g);
  if (!i) fail(ErrorCode::NotExplored, "element not reached by the exploration");
  return dist_[*i];
}

Word CayleyExploration::word_of(std::size_t i) const {
  Word w;
  while (parent_[i] != no_parent) {
    w.push_back(gens_[parent_gen_[i]].letter);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Word CayleyExploration::word(const Matrix& g) const {
  auto i = index_of(g);
  if (!i) fail(ErrorCode::NotExplored, "element not reached by the exploration");
  return word_of(*i);
}

CayleyExploration bfs_explore(const std::vector<Matrix>& gens, std::uint64_t cap) {
  ExploreOptions o;
  o.cap = cap;
  return CayleyExploration::explore(gens, o);
}

namespace {

Matrix replay(const std::vector<CayleyExploration::Generator>& gens, const Word& w, const Field& F, std::size_t n) {
  Matrix r = Matrix::identity(F, n);
  for (const auto& l : w) {
    const CayleyExploration::Generator* hit = nullptr;
    for (const auto& g : gens)
      if (g.letter == l) hit = &g;
    if (hit) {
      r = r * hit->matrix;
      continue;
    }
    Letter flip{l.index, !l.inverse};
    for (const auto& g : gens)
      if (g.letter == flip) hit = &g;
    if (!hit) fail(ErrorCode::IndexMismatch, "letter does not name a generator");
    r = r * matinv(hit->matrix);
  }
  return r;
}

}  // namespace

Word word_recover(const CayleyExploration& e, const Matrix& g) {
  Word w = e.word(g);
  if (replay(e.generators(), w, e.codec().field(), e.codec().dimension()) != g)
    throw std::logic_error("recorded word does not evaluate to the element");
  return w;
}

TransvectionBall transvection_ball(const std::vector<Transvection>& t, std::size_t r, std::uint64_t cap) {
  ExploreOptions o;
  o.cap = cap;
  o.max_radius = r;
  auto e = CayleyExploration::explore(matrices(t), o);
  TransvectionBall out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e.distance_of(i) > r || !e.is_transvection(i)) continue;
    out.elements.push_back(Transvection::from_matrix(e.element(i)));
    out.words.push_back(e.word_of(i));
    out.lengths.push_back(e.distance_of(i));
  }
  return out;
}

LengthProfile transvection_length_profile(const std::vector<Matrix>& gens, std::uint64_t cap) {
  auto e = bfs_explore(gens, cap);
  std::vector<Matrix> tv;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e.is_transvection(i)) tv.push_back(e.element(i));
  LengthProfile out;
  out.transvection_count = tv.size();
  out.order = e.order();
  if (tv.empty()) return out;
  auto p = bfs_explore(tv, cap);
  out.max_length = p.diameter();
  out.histogram = p.histogram();
  return out;
}

BidirectionalResult bidirectional_distance(const std::vector<Matrix>& gens, const Matrix& g, std::uint64_t cap) {
  auto sym = symmetric_generators(gens);
  const Field& F = gens[0].field();
  const std::size_t n = gens[0].rows();
  MatrixCodec codec(F, n);
  std::vector<Matrix> mats;
  for (const auto& s : sym) mats.push_back(s.matrix);
  auto kernel = ProductKernel::create(codec, mats);
  const std::size_t kb = codec.key_bytes();

  struct Side {
    ElementStore store;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint16_t> gen, dist;
    std::size_t begin = 0, end = 1, radius = 0;
  };
  Side fw{ElementStore(kb), {no_parent}, {0}, {0}}, bw{ElementStore(kb), {no_parent}, {0}, {0}};
  std::vector<std::uint8_t> key(kb);
  codec.encode(Matrix::identity(F, n), key.data());
  fw.store.insert(key.data());
  codec.encode(g, key.data());
  bw.store.insert(key.data());

  auto path = [&](const Side& s, std::size_t i) {
    Word w;
    while (s.parent[i] != no_parent) {
      w.push_back(sym[s.gen[i]].letter);
      i = s.parent[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  auto finish = [&](std::size_t fi, std::size_t bi) {
    BidirectionalResult r;
    r.distance = fw.dist[fi] + bw.dist[bi];
    r.word = path(fw, fi);
    Word back = path(bw, bi);
    for (auto it = back.rbegin(); it != back.rend(); ++it) r.word.push_back({it->index, !it->inverse});
    return r;
  };
  if (std::size_t hit = bw.store.find(fw.store.key(0)); hit != ElementStore::npos) return finish(0, hit);

  std::vector<std::uint8_t> out(kb);
  for (;;) {
    Side& s = (fw.end - fw.begin) <= (bw.end - bw.begin) ? fw : bw;
    Side& other = &s == &fw ? bw : fw;
    if (s.begin == s.end) fail(ErrorCode::NotFound, "element is not in the group");
    std::size_t best = static_cast<std::size_t>(-1), bf = 0, bb = 0;
    for (std::size_t x = s.begin; x < s.end; ++x)
      for (std::size_t gi = 0; gi < sym.size(); ++gi) {
        kernel->multiply(s.store.key(x), gi, out.data());
        auto [idx, fresh] = s.store.insert(out.data());
        if (!fresh) continue;
        s.parent.push_back(static_cast<std::uint32_t>(x));
        s.gen.push_back(static_cast<std::uint16_t>(gi));
        s.dist.push_back(static_cast<std::uint16_t>(s.radius + 1));
        if (fw.store.size() + bw.store.size() > cap)
          fail(ErrorCode::CapExceeded, "bidirectional search exceeds " + std::to_string(cap) + " elements");
        std::size_t o = other.store.find(out.data());
        if (o == ElementStore::npos) continue;
        std::size_t total = s.radius + 1 + other.dist[o];
        if (total < best) {
          best = total;
          bf = &s == &fw ? idx : o;
          bb = &s == &fw ? o : idx;
        }
      }
    s.begin = s.end;
    s.end = s.store.size();
    ++s.radius;
    if (best != static_cast<std::size_t>(-1)) return finish(bf, bb);
  }
}

}  // namespace transvect
