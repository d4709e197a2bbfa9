#include "transvect/gf.hpp"

#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

namespace transvect {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t f = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // little-endian, monic, size f+1
  std::array<std::uint64_t, 17> ppow{};
  Elem generator = 0;

  bool tables = false;
  std::vector<Elem> exp;  // size 2(q-1)
  std::vector<std::uint32_t> log;
  std::vector<Elem> add_table;  // q*q for small odd-characteristic fields
  std::vector<Elem> neg_table;

  using Digits = std::array<std::uint32_t, 16>;

  void split(Elem a, Digits& d) const {
    std::uint64_t x = a;
    for (std::uint32_t i = 0; i < f; ++i) {
      d[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
  }
  Elem join(const Digits& d) const {
    std::uint64_t x = 0;
    for (std::uint32_t i = f; i-- > 0;) x = x * p + d[i];
    return static_cast<Elem>(x);
  }

  Elem add_generic(Elem a, Elem b) const {
    if (p == 2) return a ^ b;
    if (f == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p);
    Digits da, db;
    split(a, da);
    split(b, db);
    for (std::uint32_t i = 0; i < f; ++i) da[i] = static_cast<std::uint32_t>((std::uint64_t{da[i]} + db[i]) % p);
    return join(da);
  }
  Elem neg_generic(Elem a) const {
    if (p == 2) return a;
    if (f == 1) return a == 0 ? 0 : p - a;
    Digits d;
    split(a, d);
    for (std::uint32_t i = 0; i < f; ++i) d[i] = d[i] == 0 ? 0 : p - d[i];
    return join(d);
  }
  Elem mul_generic(Elem a, Elem b) const {
    if (f == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p);
    Digits da, db;
    split(a, da);
    split(b, db);
    std::array<std::uint64_t, 32> c{};
    for (std::uint32_t i = 0; i < f; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < f; ++j) c[i + j] = (c[i + j] + std::uint64_t{da[i]} * db[j]) % p;
    }
    for (std::uint32_t k = 2 * f - 1; k-- > f;) {
      std::uint64_t lead = c[k];
      if (lead == 0) continue;
      c[k] = 0;
      for (std::uint32_t i = 0; i < f; ++i) {
        // subtract lead * modulus[i] * x^(k-f+i)
        std::uint64_t t = (lead * modulus[i]) % p;
        c[k - f + i] = (c[k - f + i] + p - t) % p;
      }
    }
    Digits out;
    for (std::uint32_t i = 0; i < f; ++i) out[i] = static_cast<std::uint32_t>(c[i]);
    return join(out);
  }
  Elem pow_generic(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_generic(r, a);
      a = mul_generic(a, a);
      e >>= 1;
    }
    return r;
  }

  Elem add(Elem a, Elem b) const {
    if (p == 2) return a ^ b;
    if (!add_table.empty()) return add_table[std::size_t{a} * q + b];
    return add_generic(a, b);
  }
  Elem neg(Elem a) const {
    if (!neg_table.empty()) return neg_table[a];
    return neg_generic(a);
  }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (tables) return exp[log[a] + log[b]];
    return mul_generic(a, b);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (tables) return exp[(std::uint64_t{log[a]} * (e % (q - 1))) % (q - 1)];
    return pow_generic(a, e);
  }
};

}  // namespace detail

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      std::uint64_t t = (lead * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& m, std::uint32_t p) {
  const std::uint32_t f = static_cast<std::uint32_t>(m.size() - 1);
  if (f <= 1) return true;
  for (std::uint32_t d = 1; d <= f / 2; ++d) {
    std::uint64_t count = ipow(p, d);
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1);
      std::uint64_t x = c;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[d] = 1;
      if (poly_mod(m, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::shared_ptr<const detail::FieldData> build(std::uint32_t p, std::uint32_t f) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->f = f;
  d->q = ipow(p, f);
  for (std::uint32_t i = 0; i <= f; ++i) d->ppow[i] = ipow(p, i);

  const std::uint64_t count = ipow(p, f);
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly m(f + 1);
    std::uint64_t x = c;
    for (std::uint32_t i = 0; i < f; ++i) {
      m[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    m[f] = 1;
    if (irreducible(m, p)) {
      d->modulus = m;
      break;
    }
  }

  const std::uint64_t q = d->q;
  if (q == 2) {
    d->generator = 1;
  } else {
    auto factors = prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
      bool ok = true;
      for (auto r : factors) {
        if (d->pow_generic(static_cast<Elem>(g), (q - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        d->generator = static_cast<Elem>(g);
        break;
      }
    }
  }

  if (q <= (1u << 20)) {
    d->tables = true;
    d->exp.assign(2 * (q - 1) + 1, 0);
    d->log.assign(q, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      d->exp[i] = x;
      d->exp[i + q - 1] = x;
      d->log[x] = static_cast<std::uint32_t>(i);
      x = d->mul_generic(x, d->generator);
    }
    if (p != 2 && q <= 256) {
      d->add_table.resize(q * q);
      d->neg_table.resize(q);
      for (Elem a = 0; a < q; ++a) {
        d->neg_table[a] = d->neg_generic(a);
        for (Elem b = 0; b < q; ++b) d->add_table[a * q + b] = d->add_generic(a, b);
      }
    }
  }
  return d;
}

}  // namespace

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::create(std::uint32_t p, std::uint32_t f) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (f == 0) fail(ErrorCode::BadParameters, "field degree must be positive");
  if (f > 16) fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(f) + " exceeds 16");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q >= (std::uint64_t{1} << 32))
      fail(ErrorCode::DegreeTooLarge, "field order exceeds 2^32");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, f}];
  if (!slot) slot = build(p, f);
  return Field(slot);
}

Field Field::parse(std::string_view text) {
  auto number = [&](std::string_view s) -> std::uint64_t {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty())
      fail(ErrorCode::ParseError, "bad field '" + std::string(text) + "'");
    return v;
  };
  auto caret = text.find('^');
  if (caret != std::string_view::npos) {
    auto p = number(text.substr(0, caret));
    auto f = number(text.substr(caret + 1));
    if (p > 0xffffffffu || f > 64) fail(ErrorCode::DegreeTooLarge, std::string(text));
    return create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(f));
  }
  auto q = number(text);
  if (q < 2) fail(ErrorCode::NotPrime, std::string(text));
  auto factors = prime_factors(q);
  if (factors.size() != 1) fail(ErrorCode::NotPrime, std::string(text) + " is not a prime power");
  std::uint32_t f = 0;
  for (std::uint64_t x = q; x > 1; x /= factors[0]) ++f;
  return create(static_cast<std::uint32_t>(factors[0]), f);
}

std::uint32_t Field::characteristic() const { return data_->p; }
std::uint32_t Field::degree() const { return data_->f; }
std::uint64_t Field::order() const { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }
std::string Field::name() const { return std::to_string(data_->p) + "^" + std::to_string(data_->f); }

Elem Field::from_int(std::int64_t v) const {
  std::int64_t p = data_->p;
  return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::add(Elem a, Elem b) const { return data_->add(a, b); }
Elem Field::sub(Elem a, Elem b) const { return data_->add(a, data_->neg(b)); }
Elem Field::neg(Elem a) const { return data_->neg(a); }
Elem Field::mul(Elem a, Elem b) const { return data_->mul(a, b); }

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (data_->tables) return data_->exp[(data_->q - 1 - data_->log[a]) % (data_->q - 1)];
  return data_->pow_generic(a, data_->q - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }
Elem Field::pow(Elem a, std::uint64_t e) const { return data_->pow(a, e); }
Elem Field::frobenius(Elem a) const { return data_->pow(a, data_->p); }

bool Field::has_involution() const { return data_->f % 2 == 0; }

Elem Field::involution(Elem a) const {
  if (!has_involution()) fail(ErrorCode::NoInvolution, "GF(" + name() + ") has odd degree");
  return data_->pow(a, data_->ppow[data_->f / 2]);
}

Elem Field::trace_half(Elem a) const { return add(a, involution(a)); }

Elem Field::absolute_trace(Elem a) const {
  Elem s = 0, x = a;
  for (std::uint32_t i = 0; i < data_->f; ++i) {
    s = add(s, x);
    x = frobenius(x);
  }
  return s;
}

Elem Field::sqrt2(Elem a) const {
  if (data_->p != 2) fail(ErrorCode::WrongCharacteristic, "sqrt2 needs characteristic 2");
  return data_->pow(a, data_->q / 2);
}

bool Field::in_subfield(Elem a, std::uint32_t d) const {
  return data_->pow(a, data_->ppow[d]) == a;
}

std::uint32_t Field::subfield_degree(Elem a) const {
  for (std::uint32_t d = 1; d <= data_->f; ++d)
    if (data_->f % d == 0 && in_subfield(a, d)) return d;
  return data_->f;
}

std::uint32_t Field::subfield_degree(std::span<const Elem> xs) const {
  std::uint32_t l = 1;
  for (Elem x : xs) l = std::lcm(l, subfield_degree(x));
  return l;
}

Elem Field::primitive_element() const { return data_->generator; }

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> out(data_->f);
  std::uint64_t x = a;
  for (auto& d : out) {
    d = static_cast<std::uint32_t>(x % data_->p);
    x /= data_->p;
  }
  return out;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() > data_->f) fail(ErrorCode::BadParameters, "too many digits");
  std::uint64_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= data_->p) fail(ErrorCode::BadParameters, "digit out of range");
    x = x * data_->p + d[i];
  }
  return static_cast<Elem>(x);
}

bool Field::operator==(const Field& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return data_->p == other.data_->p && data_->f == other.data_->f;
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_.order()) fail(ErrorCode::BadParameters, "element out of range");
}

FieldElement FieldElement::from_digits(const Field& field, std::span<const std::uint32_t> d) {
  return FieldElement(field, field.from_digits(d));
}

void FieldElement::check(const FieldElement& o) const {
  if (field_ != o.field_) fail(ErrorCode::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {field_, field_.add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {field_, field_.sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {field_, field_.mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return {field_, field_.div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && value_ == o.value_;
}

FieldElement frobenius_involution(const FieldElement& x) {
  return {x.field(), x.field().involution(x.value())};
}

FieldElement trace_to_index2_subfield(const FieldElement& x) {
  return {x.field(), x.field().trace_half(x.value())};
}

std::uint32_t subfield_generated(std::span<const FieldElement> xs) {
  if (xs.empty()) return 1;
  std::vector<Elem> raw;
  for (const auto& x : xs) {
    if (x.field() != xs[0].field()) fail(ErrorCode::FieldMismatch, "mixed fields");
    raw.push_back(x.value());
  }
  return xs[0].field().subfield_degree(raw);
}

FieldElement primitive_element(const Field& field) { return {field, field.primitive_element()}; }

}  // namespace transvect
