#pragma once

// Exact scalar fields: prime fields F_p and the rationals.
//
// Every algorithm in catrep is a template over one of these field types. A
// field object is a small value (the prime, or the rational growth guard) and
// is copied into every matrix it produced.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace catrep {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a rational numerator or denominator exceeds the configured bit bound.
class RationalGrowthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrimeField {
 public:
  using Element = std::uint32_t;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "fp:" + std::to_string(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  // x <- x - c*y, the inner loop of every elimination.
  void sub_mul(Element& x, Element c, Element y) const { x = sub(x, mul(c, y)); }

  Element from_int(long long v) const;
  Element from_rational(const mpq_class& q) const;
  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_ = 2;
};

class RationalField {
 public:
  using Element = mpq_class;

  /// max_bits == 0 disables the growth guard.
  explicit RationalField(std::size_t max_bits = 0) : max_bits_(max_bits) {}

  std::size_t max_bits() const { return max_bits_; }
  std::string name() const { return "q"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return guarded(a + b); }
  Element sub(const Element& a, const Element& b) const { return guarded(a - b); }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return guarded(a * b); }
  Element inv(const Element& a) const;
  void sub_mul(Element& x, const Element& c, const Element& y) const {
    x -= c * y;
    check(x);
  }

  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element from_rational(const mpq_class& q) const { return guarded(q); }
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField& a, const RationalField& b) {
    return a.max_bits_ == b.max_bits_;
  }

 private:
  Element guarded(Element v) const {
    check(v);
    return v;
  }
  void check(const Element& v) const {
    if (max_bits_ == 0) return;
    if (mpz_sizeinbase(v.get_num_mpz_t(), 2) > max_bits_ ||
        mpz_sizeinbase(v.get_den_mpz_t(), 2) > max_bits_)
      throw RationalGrowthError("rational entry exceeds " + std::to_string(max_bits_) +
                                " bits; raise CATREP_RATIONAL_BITS or use a prime field");
  }

  std::size_t max_bits_ = 0;
};

bool is_prime(std::uint64_t n);

/// Parsed "q" or "fp:<prime>".
struct FieldSpec {
  bool rational = true;
  std::uint32_t prime = 0;
  std::size_t rational_bits = 0;

  static FieldSpec parse(std::string_view text);
  std::string to_string() const;
};

/// Environment variable consulted for the rational bit bound.
inline constexpr const char* kRationalBitsEnv = "CATREP_RATIONAL_BITS";
std::size_t rational_bits_from_env(std::size_t fallback = 0);

/// Calls fn with a concrete field object selected by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.rational) return fn(RationalField(spec.rational_bits));
  return fn(PrimeField(spec.prime));
}

/// Parses an integer or fraction "a/b" (optionally signed).
mpq_class parse_rational(std::string_view text);

}  // namespace catrep
