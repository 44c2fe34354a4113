#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace novikov {

enum class DomainTag { Integers, Rationals, PrimeField };

// A coefficient domain S: the integers, the rationals, or a prime field
// GF(p).  Elements of every domain are carried as mpq_class values; for
// Integers the denominator is always 1, for PrimeField the value is the
// canonical residue in [0, p).  All arithmetic is exact.
class Domain {
public:
  static Domain integers();
  static Domain rationals();
  // Throws validation_error unless p is a prime >= 2.
  static Domain prime_field(const mpz_class& p);

  DomainTag tag() const { return tag_; }
  // Only meaningful for PrimeField.
  const mpz_class& prime() const { return prime_; }

  bool operator==(const Domain& other) const {
    return tag_ == other.tag_ && prime_ == other.prime_;
  }
  bool operator!=(const Domain& other) const { return !(*this == other); }

  // Brings an arbitrary rational into this domain. Throws domain_error if
  // the value does not lie in the domain (non-integer for Integers, or a
  // denominator divisible by p for PrimeField).
  mpq_class canonical(const mpq_class& x) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;

  bool is_zero(const mpq_class& a) const { return a == 0; }
  // Multiplicative units: {+1,-1} in Z, all nonzero values in Q and GF(p).
  bool is_unit(const mpq_class& a) const;

  // Exact quotient a/b, or nullopt when b == 0 or b does not divide a.
  std::optional<mpq_class> divide_exact(const mpq_class& a,
                                        const mpq_class& b) const;

  mpq_class from_int(long v) const;

  // Accepts "-12", and for Rationals also "3/4". Throws parse_error on
  // anything else.
  mpq_class parse_element(const std::string& text) const;
  std::string element_to_string(const mpq_class& a) const;

  // "Z", "Q", or "GF(p)".
  std::string to_string() const;
  static Domain parse(const std::string& text);

private:
  Domain(DomainTag tag, mpz_class prime) : tag_(tag), prime_(std::move(prime)) {}

  DomainTag tag_;
  mpz_class prime_;  // 0 unless PrimeField
};

}  // namespace novikov
