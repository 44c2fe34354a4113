#include "novikov/domain.hpp"

#include <cctype>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

// Residue of z in [0, p).
mpz_class mod_p(const mpz_class& z, const mpz_class& p) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
  return r;
}

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Domain Domain::integers() { return Domain(DomainTag::Integers, 0); }

Domain Domain::rationals() { return Domain(DomainTag::Rationals, 0); }

Domain Domain::prime_field(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw validation_error("modulus must be prime, got " + p.get_str());
  return Domain(DomainTag::PrimeField, p);
}

mpq_class Domain::canonical(const mpq_class& x) const {
  switch (tag_) {
    case DomainTag::Integers:
      if (x.get_den() != 1)
        throw domain_error("value " + x.get_str() + " is not an integer");
      return x;
    case DomainTag::Rationals:
      return x;
    case DomainTag::PrimeField: {
      // x = n/d with gcd(n,d) = 1; needs d invertible mod p.
      mpz_class den = mod_p(x.get_den(), prime_);
      if (den == 0)
        throw domain_error("value " + x.get_str() +
                           " has no image in GF(" + prime_.get_str() + ")");
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), prime_.get_mpz_t());
      return mpq_class(mod_p(x.get_num() * inv, prime_));
    }
  }
  throw error("internal: bad domain tag");
}

mpq_class Domain::add(const mpq_class& a, const mpq_class& b) const {
  mpq_class s = a + b;
  return tag_ == DomainTag::PrimeField ? canonical(s) : s;
}

mpq_class Domain::sub(const mpq_class& a, const mpq_class& b) const {
  mpq_class s = a - b;
  return tag_ == DomainTag::PrimeField ? canonical(s) : s;
}

mpq_class Domain::mul(const mpq_class& a, const mpq_class& b) const {
  mpq_class s = a * b;
  return tag_ == DomainTag::PrimeField ? canonical(s) : s;
}

mpq_class Domain::neg(const mpq_class& a) const {
  mpq_class s = -a;
  return tag_ == DomainTag::PrimeField ? canonical(s) : s;
}

bool Domain::is_unit(const mpq_class& a) const {
  switch (tag_) {
    case DomainTag::Integers:
      return a == 1 || a == -1;
    case DomainTag::Rationals:
    case DomainTag::PrimeField:
      return a != 0;
  }
  return false;
}

std::optional<mpq_class> Domain::divide_exact(const mpq_class& a,
                                              const mpq_class& b) const {
  if (b == 0) return std::nullopt;
  switch (tag_) {
    case DomainTag::Integers: {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_num().get_mpz_t(),
                  b.get_num().get_mpz_t());
      if (r != 0) return std::nullopt;
      return mpq_class(q);
    }
    case DomainTag::Rationals:
      return mpq_class(a / b);
    case DomainTag::PrimeField: {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), b.get_num().get_mpz_t(), prime_.get_mpz_t());
      return mpq_class(mod_p(a.get_num() * inv, prime_));
    }
  }
  return std::nullopt;
}

mpq_class Domain::from_int(long v) const {
  mpq_class x(v);
  return tag_ == DomainTag::PrimeField ? canonical(x) : x;
}

mpq_class Domain::parse_element(const std::string& text) const {
  if (tag_ == DomainTag::Rationals) {
    std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
      std::string num = text.substr(0, slash), den = text.substr(slash + 1);
      if (!looks_like_integer(num) || !looks_like_integer(den) ||
          den[0] == '-')
        throw parse_error("bad rational literal '" + text + "'");
      mpz_class num_z(num), den_z(den);
      if (den_z == 0) throw parse_error("zero denominator in '" + text + "'");
      mpq_class q{num_z, den_z};
      q.canonicalize();
      return q;
    }
  }
  if (!looks_like_integer(text))
    throw parse_error("bad " + to_string() + " literal '" + text + "'");
  mpq_class x{mpz_class(text)};
  return tag_ == DomainTag::PrimeField ? canonical(x) : x;
}

std::string Domain::element_to_string(const mpq_class& a) const {
  if (tag_ == DomainTag::Rationals && a.get_den() != 1)
    return a.get_num().get_str() + "/" + a.get_den().get_str();
  return a.get_num().get_str();
}

std::string Domain::to_string() const {
  switch (tag_) {
    case DomainTag::Integers: return "Z";
    case DomainTag::Rationals: return "Q";
    case DomainTag::PrimeField: return "GF(" + prime_.get_str() + ")";
  }
  return "?";
}

Domain Domain::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string inner = text.substr(3, text.size() - 4);
    if (!looks_like_integer(inner) || inner[0] == '-')
      throw parse_error("bad modulus in domain tag '" + text + "'");
    try {
      return prime_field(mpz_class(inner));
    } catch (const validation_error& e) {
      throw parse_error(e.what());
    }
  }
  throw parse_error("unknown domain tag '" + text + "' (expected Z, Q, or GF(p))");
}

}  // namespace novikov
