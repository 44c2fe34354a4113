#include "novikov/fox.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "novikov/errors.hpp"

namespace novikov {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

GroupRingElem GroupRingElem::from_terms(
    std::vector<std::pair<mpz_class, Word>> raw) {
  std::map<Word, mpz_class> acc;
  for (auto& [c, w] : raw) acc[free_reduce(std::move(w))] += c;
  GroupRingElem out;
  for (auto& [w, c] : acc)
    if (c != 0) out.terms.emplace_back(c, w);
  return out;
}

namespace {

void check_letters(const Word& w, int generator_count) {
  for (int letter : w) {
    int idx = letter > 0 ? letter : -letter;
    if (idx < 1 || idx > generator_count)
      throw structural_error("word letter " + std::to_string(letter) +
                             " is outside the generator range 1.." +
                             std::to_string(generator_count));
  }
}

}  // namespace

GroupRingElem fox_derivative(const Word& w, int generator,
                             int generator_count) {
  if (generator < 1 || generator > generator_count)
    throw structural_error("no generator " + std::to_string(generator));
  check_letters(w, generator_count);
  std::vector<std::pair<mpz_class, Word>> raw;
  Word prefix;
  for (int letter : w) {
    if (letter == generator) raw.emplace_back(1, prefix);
    prefix.push_back(letter);
    if (letter == -generator) raw.emplace_back(-1, prefix);
  }
  return GroupRingElem::from_terms(std::move(raw));
}

// ---------------------------------------------------------------------------
// Presentations.

namespace {

// Shared evaluation context: validates nothing itself, just lifts words to
// matrices with the generator inverses computed once.
class PushForward {
public:
  explicit PushForward(const TwistedPresentation& p) : p_(p) {
    inverses_.reserve(p.alpha.size());
    for (const auto& a : p.alpha) inverses_.push_back(invert_constant_matrix(a));
  }

  // alpha(w) as a k x k matrix of constants.
  PolyMatrix constant_matrix(const Word& w) const {
    PolyMatrix acc = PolyMatrix::identity(p_.domain, 0, p_.k);
    for (int letter : w)
      acc = acc.multiply(letter > 0 ? p_.alpha[letter - 1]
                                    : inverses_[-letter - 1]);
    return acc;
  }

  Exponent weight(const Word& w) const {
    Exponent e(p_.gamma_rank, 0);
    for (int letter : w) {
      const auto& psi = p_.psi[(letter > 0 ? letter : -letter) - 1];
      for (int j = 0; j < p_.gamma_rank; ++j)
        e[j] += letter > 0 ? psi[j] : -psi[j];
    }
    return e;
  }

  // alpha(w) * t^{psi(w)} over S[Gamma].
  PolyMatrix matrix(const Word& w) const {
    PolyMatrix consts = constant_matrix(w);
    Exponent e = weight(w);
    PolyMatrix out(p_.domain, p_.gamma_rank, p_.k, p_.k);
    for (int i = 0; i < p_.k; ++i)
      for (int j = 0; j < p_.k; ++j) {
        const LaurentPoly& c = consts.at(i, j);
        if (!c.is_zero())
          out.set(i, j, LaurentPoly::monomial(p_.domain, p_.gamma_rank, e,
                                              c.terms()[0].coeff));
      }
    return out;
  }

  PolyMatrix matrix(const GroupRingElem& s) const {
    PolyMatrix acc(p_.domain, p_.gamma_rank, p_.k, p_.k);
    for (const auto& [c, w] : s.terms) {
      PolyMatrix m = matrix(w);
      for (int i = 0; i < p_.k; ++i)
        for (int j = 0; j < p_.k; ++j) {
          const LaurentPoly& e = m.at(i, j);
          if (!e.is_zero())
            acc.set(i, j,
                    acc.at(i, j) +
                        e * LaurentPoly::constant(p_.domain, p_.gamma_rank,
                                                  mpq_class(c)));
        }
    }
    return acc;
  }

private:
  const TwistedPresentation& p_;
  std::vector<PolyMatrix> inverses_;
};

void validate_shapes(const TwistedPresentation& p) {
  if (p.generators < 0) throw structural_error("negative generator count");
  if (p.k < 1) throw structural_error("representation dimension must be >= 1");
  if (p.gamma_rank < 0) throw structural_error("negative group rank");
  if (static_cast<int>(p.psi.size()) != p.generators)
    throw structural_error("expected " + std::to_string(p.generators) +
                           " weight vectors, got " + std::to_string(p.psi.size()));
  for (const auto& w : p.psi)
    if (static_cast<int>(w.size()) != p.gamma_rank)
      throw structural_error("weight vector length mismatch");
  if (static_cast<int>(p.alpha.size()) != p.generators)
    throw structural_error("expected " + std::to_string(p.generators) +
                           " representation matrices, got " +
                           std::to_string(p.alpha.size()));
  for (int i = 0; i < p.generators; ++i) {
    const PolyMatrix& a = p.alpha[i];
    if (a.rows() != p.k || a.cols() != p.k || a.rank() != 0 ||
        a.domain() != p.domain)
      throw structural_error("representation matrix for generator " +
                             std::to_string(i + 1) + " is not " +
                             std::to_string(p.k) + "x" + std::to_string(p.k) +
                             " over " + p.domain.to_string());
  }
  for (const auto& r : p.relators) check_letters(r, p.generators);
}

}  // namespace

mpz_class psi_image_index(const TwistedPresentation& p) {
  validate_shapes(p);
  const int g = p.generators, r = p.gamma_rank;
  if (r == 0) return 1;
  // gcd of the r x r minors of the g x r weight matrix; 0 when the weights
  // do not span a finite-index subgroup.
  PolyMatrix w(Domain::integers(), 0, g, r);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < r; ++j)
      w.set(i, j, LaurentPoly::constant(Domain::integers(), 0,
                                        mpq_class(static_cast<long>(p.psi[i][j]))));
  mpz_class gcd = 0;
  std::vector<int> cols(r);
  for (int j = 0; j < r; ++j) cols[j] = j;
  std::vector<int> rows(r);
  if (g < r) return 0;
  for (int j = 0; j < r; ++j) rows[j] = j;
  for (;;) {
    LaurentPoly det = determinant(w.select(rows, cols));
    if (!det.is_zero()) {
      mpz_class v = abs(det.terms()[0].coeff.get_num());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
    }
    // Next r-subset of the g rows.
    int i = r - 1;
    while (i >= 0 && rows[i] == g - r + i) --i;
    if (i < 0) break;
    ++rows[i];
    for (int j = i + 1; j < r; ++j) rows[j] = rows[j - 1] + 1;
  }
  return gcd;
}

void validate_presentation(const TwistedPresentation& p) {
  validate_shapes(p);
  // Generator matrices must be invertible; PushForward computes the
  // inverses and throws domain_error otherwise.
  try {
    PushForward push(p);

    for (std::size_t j = 0; j < p.relators.size(); ++j) {
      Exponent weight = push.weight(p.relators[j]);
      for (auto v : weight)
        if (v != 0)
          throw validation_error("relator " + std::to_string(j + 1) +
                                 " has nonzero weight");
      if (!(push.constant_matrix(p.relators[j]) ==
            PolyMatrix::identity(p.domain, 0, p.k)))
        throw validation_error("relator " + std::to_string(j + 1) +
                               " does not act as the identity");
    }
  } catch (const domain_error& e) {
    throw validation_error(e.what());
  }

  if (p.gamma_rank > 0 && psi_image_index(p) == 0)
    throw validation_error(
        "generator weights do not span a finite-index subgroup of the "
        "free abelian group");
}

PolyMatrix push_forward(const Word& w, const TwistedPresentation& p) {
  validate_shapes(p);
  check_letters(w, p.generators);
  return PushForward(p).matrix(w);
}

PolyMatrix push_forward(const GroupRingElem& s, const TwistedPresentation& p) {
  validate_shapes(p);
  for (const auto& [c, w] : s.terms) check_letters(w, p.generators);
  return PushForward(p).matrix(s);
}

BasedChainComplex presentation_complex(const TwistedPresentation& p) {
  validate_presentation(p);
  PushForward push(p);
  const int g = p.generators, h = static_cast<int>(p.relators.size()), k = p.k;

  BasedChainComplex c;
  c.domain = p.domain;
  c.gamma_rank = p.gamma_rank;
  c.dims = {k, g * k};
  if (h > 0) c.dims.push_back(h * k);

  PolyMatrix ident = PolyMatrix::identity(p.domain, p.gamma_rank, k);
  PolyMatrix a0(p.domain, p.gamma_rank, g * k, k);
  for (int i = 0; i < g; ++i) {
    PolyMatrix block = push.matrix(Word{i + 1}).add(ident.negate());
    for (int r = 0; r < k; ++r)
      for (int col = 0; col < k; ++col)
        a0.set(i * k + r, col, block.at(r, col));
  }
  c.boundaries.push_back(std::move(a0));

  if (h > 0) {
    PolyMatrix a1(p.domain, p.gamma_rank, h * k, g * k);
    for (int j = 0; j < h; ++j)
      for (int i = 0; i < g; ++i) {
        PolyMatrix block =
            push.matrix(fox_derivative(p.relators[j], i + 1, g));
        for (int r = 0; r < k; ++r)
          for (int col = 0; col < k; ++col)
            a1.set(j * k + r, i * k + col, block.at(r, col));
      }
    c.boundaries.push_back(std::move(a1));
  }

  if (auto defect = validate_complex(c))
    throw error("internal: presentation complex is invalid: " + *defect);
  return c;
}

}  // namespace novikov
