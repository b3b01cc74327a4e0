#pragma once

// Exact coefficient fields: GF(2), GF(p) for small odd primes, and checked
// 64-bit rationals. Every algebra routine in this library is a template over
// one of the three field policies below; FieldSpec is the runtime tag used at
// the serialization boundary.

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace mac {

/// Thrown when an internal consistency check fails (a bug, not bad input).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class FieldKind { gf2, gfp, rational };

struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint32_t modulus = 0;  // only meaningful for gfp

  static FieldSpec gf2() { return {FieldKind::gf2, 2}; }
  static FieldSpec rational() { return {FieldKind::rational, 0}; }
  static FieldSpec gfp(std::uint32_t p);

  /// "gf2", "gf7", "rational"
  std::string name() const {
    switch (kind) {
      case FieldKind::gf2: return "gf2";
      case FieldKind::gfp: return "gf" + std::to_string(modulus);
      case FieldKind::rational: return "rational";
    }
    return "?";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline FieldSpec FieldSpec::gfp(std::uint32_t p) {
  if (p == 2) return gf2();
  if (p < 3 || p > (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("field modulus must be a prime in [2, 2^31], got " +
                                std::to_string(p));
  }
  return {FieldKind::gfp, p};
}

// ---------------------------------------------------------------------------
// Rational: lowest terms, positive denominator, int64 storage with __int128
// intermediates. Anything that does not fit back into int64 throws.
// ---------------------------------------------------------------------------

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  Rational operator-() const { return make(-static_cast<__int128>(num_), den_); }
  Rational inverse() const {
    if (num_ == 0) throw std::domain_error("inverse of zero");
    return make(den_, num_);
  }
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rational parse(std::string_view text);

 private:
  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = INT64_MIN + 1;  // keep negation safe
    constexpr __int128 hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

namespace detail {
inline std::int64_t parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  __int128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    }
    v = v * 10 + (s[i] - '0');
    if (v > INT64_MAX) throw std::overflow_error("number out of range '" + std::string(s) + "'");
  }
  return static_cast<std::int64_t>(neg ? -v : v);
}
}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_int(text));
  return Rational(detail::parse_int(text.substr(0, slash)),
                  detail::parse_int(text.substr(slash + 1)));
}

// ---------------------------------------------------------------------------
// Field policies. All share the interface
//   zero one from_int add sub neg mul inv is_zero to_string parse random spec
// ---------------------------------------------------------------------------

struct Gf2Field {
  using value_type = std::uint8_t;

  FieldSpec spec() const { return FieldSpec::gf2(); }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return static_cast<value_type>(v & 1); }
  value_type add(value_type a, value_type b) const { return a ^ b; }
  value_type sub(value_type a, value_type b) const { return a ^ b; }
  value_type neg(value_type a) const { return a; }
  value_type mul(value_type a, value_type b) const { return a & b; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1;
  }
  bool is_zero(value_type a) const { return a == 0; }
  std::string to_string(value_type a) const { return a ? "1" : "0"; }
  value_type parse(std::string_view s) const { return from_int(detail::parse_int(s)); }
  template <class Rng>
  value_type random(Rng& rng) const {
    return static_cast<value_type>(rng() & 1);
  }
};

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(FieldSpec::gfp(p).modulus) {
    if (p_ == 2) throw std::invalid_argument("use Gf2Field for characteristic 2");
  }

  std::uint32_t modulus() const { return p_; }
  FieldSpec spec() const { return {FieldKind::gfp, p_}; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  bool is_zero(value_type a) const { return a == 0; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view s) const {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return from_int(detail::parse_int(s));
    return mul(from_int(detail::parse_int(s.substr(0, slash))),
               inv(from_int(detail::parse_int(s.substr(slash + 1)))));
  }
  template <class Rng>
  value_type random(Rng& rng) const {
    return static_cast<value_type>(rng() % p_);
  }

 private:
  std::uint32_t p_;
};

struct RationalField {
  using value_type = Rational;

  FieldSpec spec() const { return FieldSpec::rational(); }
  value_type zero() const { return {}; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return a.inverse(); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  std::string to_string(const value_type& a) const { return a.to_string(); }
  value_type parse(std::string_view s) const { return Rational::parse(s); }
  /// Small numerators over denominators 1 or 2; enough to exercise signs and
  /// division without blowing through int64 in long products.
  template <class Rng>
  value_type random(Rng& rng) const {
    auto n = static_cast<std::int64_t>(rng() % 7) - 3;
    auto d = static_cast<std::int64_t>(rng() % 2) + 1;
    return Rational(n, d);
  }
};

/// Sign (+1 / -1) as a field element.
template <class F>
typename F::value_type signed_one(const F& field, int sign) {
  return sign >= 0 ? field.one() : field.neg(field.one());
}

/// Calls fn with the field policy object matching spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  switch (spec.kind) {
    case FieldKind::gf2: return fn(Gf2Field{});
    case FieldKind::gfp: return fn(PrimeField(spec.modulus));
    case FieldKind::rational: break;
  }
  return fn(RationalField{});
}

/// Parses "gf2", "gf<p>", "gfp" + modulus, or "rational".
inline FieldSpec parse_field(std::string_view name, std::uint32_t modulus = 0) {
  if (name == "gf2") return FieldSpec::gf2();
  if (name == "rational" || name == "q") return FieldSpec::rational();
  if (name == "gfp") {
    if (modulus == 0) throw std::invalid_argument("field gfp needs a modulus (--p N)");
    return FieldSpec::gfp(modulus);
  }
  if (name.size() > 2 && name.substr(0, 2) == "gf") {
    auto p = detail::parse_int(name.substr(2));
    if (p <= 0 || p > (std::int64_t{1} << 31)) throw std::invalid_argument("bad field modulus");
    return FieldSpec::gfp(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown field '" + std::string(name) + "'");
}

}  // namespace mac
