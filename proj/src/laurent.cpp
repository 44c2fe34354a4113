#include "novikov/laurent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "novikov/errors.hpp"

namespace novikov {

int exponent_compare(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw structural_error("exponent rank mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw structural_error("exponent overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw structural_error("exponent overflow");
  return r;
}

void require_compatible(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank())
    throw structural_error("group rank mismatch: " + std::to_string(a.rank()) +
                           " vs " + std::to_string(b.rank()));
  if (a.domain() != b.domain())
    throw structural_error("coefficient domain mismatch: " +
                           a.domain().to_string() + " vs " +
                           b.domain().to_string());
}

}  // namespace

Exponent exponent_add(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw structural_error("exponent rank mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Exponent exponent_sub(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw structural_error("exponent rank mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

bool Character::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

mpq_class pairing(const Character& xi, const Exponent& e) {
  if (xi.coords.size() != e.size())
    throw structural_error("character rank mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) acc += xi.coords[i] * mpq_class(static_cast<long>(e[i]));
  }
  return acc;
}

LaurentPoly::LaurentPoly(Domain domain, int rank)
    : domain_(std::move(domain)), rank_(rank) {
  if (rank < 0) throw structural_error("negative group rank");
}

LaurentPoly LaurentPoly::zero(Domain domain, int rank) {
  return LaurentPoly(std::move(domain), rank);
}

LaurentPoly LaurentPoly::constant(Domain domain, int rank, const mpq_class& c) {
  return monomial(std::move(domain), rank, Exponent(rank, 0), c);
}

LaurentPoly LaurentPoly::monomial(Domain domain, int rank, Exponent e,
                                  const mpq_class& c) {
  LaurentPoly p(std::move(domain), rank);
  if (static_cast<int>(e.size()) != rank)
    throw structural_error("exponent rank mismatch");
  mpq_class cc = p.domain_.canonical(c);
  if (!p.domain_.is_zero(cc)) p.terms_.push_back({std::move(e), std::move(cc)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(
    Domain domain, int rank,
    const std::vector<std::pair<Exponent, mpq_class>>& raw) {
  LaurentPoly p(domain, rank);
  std::map<Exponent, mpq_class> acc;
  for (const auto& [e, c] : raw) {
    if (static_cast<int>(e.size()) != rank)
      throw structural_error("exponent rank mismatch");
    auto it = acc.find(e);
    if (it == acc.end())
      acc.emplace(e, c);
    else
      it->second += c;
  }
  for (auto& [e, c] : acc) {
    mpq_class cc = domain.canonical(c);
    if (!domain.is_zero(cc)) p.terms_.push_back({e, std::move(cc)});
  }
  return p;  // std::map iterates exponents in ascending lex order already
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(domain_, rank_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exp, domain_.neg(t.coeff)});
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_compatible(*this, other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    int cmp;
    if (i == terms_.size())
      cmp = 1;
    else if (j == other.terms_.size())
      cmp = -1;
    else
      cmp = exponent_compare(terms_[i].exp, other.terms_[j].exp);
    if (cmp < 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (cmp > 0) {
      merged.push_back(other.terms_[j++]);
    } else {
      mpq_class c = domain_.add(terms_[i].coeff, other.terms_[j].coeff);
      if (!domain_.is_zero(c)) merged.push_back({terms_[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  *this += -other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_compatible(a, b);
  std::map<Exponent, mpq_class> acc;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Exponent e = exponent_add(ta.exp, tb.exp);
      mpq_class prod = ta.coeff * tb.coeff;
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(std::move(e), std::move(prod));
      else
        it->second += prod;
    }
  }
  LaurentPoly r(a.domain_, a.rank_);
  for (auto& [e, c] : acc) {
    mpq_class cc = a.domain_.canonical(c);
    if (!a.domain_.is_zero(cc)) r.terms_.push_back({e, std::move(cc)});
  }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  return domain_ == other.domain_ && rank_ == other.rank_ &&
         terms_ == other.terms_;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  require_compatible(p, q);
  if (q.is_zero()) throw domain_error("exact_divide by the zero polynomial");
  const int rank = p.rank();
  LaurentPoly quot(p.domain(), rank);
  if (p.is_zero()) return quot;

  // Any exact quotient u with p = u*q has, in each coordinate k,
  // min_k(p) = min_k(u) + min_k(q) and max_k(p) = max_k(u) + max_k(q),
  // so every exponent of u lies in the box [min(p)-min(q), max(p)-max(q)].
  Exponent lo(rank), hi(rank);
  for (int k = 0; k < rank; ++k) {
    std::int64_t plo = std::numeric_limits<std::int64_t>::max(), phi = std::numeric_limits<std::int64_t>::min();
    std::int64_t qlo = plo, qhi = phi;
    for (const auto& t : p.terms()) {
      plo = std::min(plo, t.exp[k]);
      phi = std::max(phi, t.exp[k]);
    }
    for (const auto& t : q.terms()) {
      qlo = std::min(qlo, t.exp[k]);
      qhi = std::max(qhi, t.exp[k]);
    }
    lo[k] = checked_sub(plo, qlo);
    hi[k] = checked_sub(phi, qhi);
    if (lo[k] > hi[k])
      throw domain_error("exact_divide: " + to_string(q) +
                         " does not divide " + to_string(p));
  }

  auto in_box = [&](const Exponent& e) {
    for (int k = 0; k < rank; ++k)
      if (e[k] < lo[k] || e[k] > hi[k]) return false;
    return true;
  };

  // Cancel lex-leading terms; the leading exponent of the remainder drops
  // strictly each round while the candidate quotient exponent must stay in
  // the finite box, so this terminates.
  LaurentPoly rem = p;
  const LaurentPoly::Term& qlead = q.terms().back();
  while (!rem.is_zero()) {
    const LaurentPoly::Term& rlead = rem.terms().back();
    Exponent e = exponent_sub(rlead.exp, qlead.exp);
    auto c = p.domain().divide_exact(rlead.coeff, qlead.coeff);
    if (!in_box(e) || !c)
      throw domain_error("exact_divide: " + to_string(q) +
                         " does not divide " + to_string(p));
    LaurentPoly mono = LaurentPoly::monomial(p.domain(), rank, e, *c);
    quot += mono;
    rem -= mono * q;
  }
  return quot;
}

mpq_class leading_value(const LaurentPoly& p, const Character& xi) {
  if (p.is_zero())
    throw domain_error("leading data of the zero polynomial is undefined");
  if (xi.rank() != p.rank()) throw structural_error("character rank mismatch");
  bool first = true;
  mpq_class best;
  for (const auto& t : p.terms()) {
    mpq_class v = pairing(xi, t.exp);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

LaurentPoly leading_part(const LaurentPoly& p, const Character& xi) {
  mpq_class best = leading_value(p, xi);
  LaurentPoly r(p.domain(), p.rank());
  std::vector<std::pair<Exponent, mpq_class>> keep;
  for (const auto& t : p.terms())
    if (pairing(xi, t.exp) == best) keep.emplace_back(t.exp, t.coeff);
  return LaurentPoly::from_terms(p.domain(), p.rank(), keep);
}

bool in_novikov_units(const LaurentPoly& p, const Character& xi) {
  if (p.is_zero()) return false;
  LaurentPoly lead = leading_part(p, xi);
  return lead.term_count() == 1 && p.domain().is_unit(lead.terms()[0].coeff);
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Print in descending lex order so the leading term comes first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    mpq_class c = it->coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t k = 0; k < it->exp.size(); ++k) {
      if (it->exp[k] == 0) continue;
      if (any_var) vars << " ";
      any_var = true;
      vars << "x" << (k + 1);
      if (it->exp[k] != 1) vars << "^" << it->exp[k];
    }
    if (!any_var) {
      out << p.domain().element_to_string(c);
    } else {
      if (c != 1) out << p.domain().element_to_string(c) << " ";
      out << vars.str();
    }
  }
  return out.str();
}

std::string to_string(const Character& xi) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < xi.coords.size(); ++i) {
    if (i) out << ",";
    mpq_class c = xi.coords[i];
    if (c.get_den() == 1)
      out << c.get_num().get_str();
    else
      out << c.get_num().get_str() << "/" << c.get_den().get_str();
  }
  out << ")";
  return out.str();
}

}  // namespace novikov
