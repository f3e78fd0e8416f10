#include "catrep/field.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace catrep {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw FieldError("prime must be below 2^31");
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw FieldError("division by zero in " + name());
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<Element>(m);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0)
    throw FieldError("denominator of " + q.get_str() + " vanishes in " + name());
  if (num < 0) num += p_;
  return mul(static_cast<Element>(num.get_ui()), inv(static_cast<Element>(den.get_ui())));
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw FieldError("division by zero in q");
  return guarded(Element(1) / a);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  FieldSpec spec;
  if (text == "q" || text == "Q") {
    spec.rational = true;
    spec.rational_bits = rational_bits_from_env();
    return spec;
  }
  constexpr std::string_view prefix = "fp:";
  if (text.substr(0, prefix.size()) != prefix)
    throw FieldError("field must be 'q' or 'fp:<prime>', got '" + std::string(text) + "'");
  auto digits = text.substr(prefix.size());
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw FieldError("malformed prime in '" + std::string(text) + "'");
  if (p >= (1ull << 31) || !is_prime(p))
    throw FieldError(std::to_string(p) + " is not a prime below 2^31");
  spec.rational = false;
  spec.prime = static_cast<std::uint32_t>(p);
  return spec;
}

std::string FieldSpec::to_string() const {
  return rational ? std::string("q") : "fp:" + std::to_string(prime);
}

std::size_t rational_bits_from_env(std::size_t fallback) {
  const char* v = std::getenv(kRationalBitsEnv);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  unsigned long long bits = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') throw FieldError(std::string(kRationalBitsEnv) + " must be an integer");
  return static_cast<std::size_t>(bits);
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw FieldError("empty coefficient");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw FieldError("malformed coefficient '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/')
      throw FieldError("malformed coefficient '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos && (slash + 1 == s.size() || s.find('/', slash + 1) != std::string::npos))
    throw FieldError("malformed coefficient '" + std::string(text) + "'");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw FieldError("malformed coefficient '" + std::string(text) + "'");
  if (q.get_den() == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace catrep
