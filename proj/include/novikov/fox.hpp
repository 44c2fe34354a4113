#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "novikov/complex.hpp"

namespace novikov {

// A word in a free group: nonzero signed 1-based generator indices, so
// {2, -1} means x2 * x1^{-1}.
using Word = std::vector<int>;

// Cancels adjacent inverse pairs until none remain.
Word free_reduce(Word w);
Word invert_word(const Word& w);

// An integer linear combination of free-group words, the ambient ring of
// Fox derivatives.  Words are free-reduced, distinct, and sorted; the
// coefficients are nonzero.
struct GroupRingElem {
  std::vector<std::pair<mpz_class, Word>> terms;

  static GroupRingElem from_terms(std::vector<std::pair<mpz_class, Word>> raw);
  bool operator==(const GroupRingElem& other) const { return terms == other.terms; }
};

// The free derivative with respect to the given generator, built by one
// pass over the word: an occurrence of x at position i contributes the
// prefix before it, an occurrence of x^{-1} contributes minus the prefix
// including it.
GroupRingElem fox_derivative(const Word& w, int generator, int generator_count);

// A finitely presented group with a weight map to Gamma and a k-dimensional
// representation over S:
//   psi[i]   = the weight of generator i in Z^gamma_rank,
//   alpha[i] = the k x k invertible matrix over S for generator i.
// Each relator must have weight zero and act as the identity matrix, so the
// induced map on the group ring is well defined.
struct TwistedPresentation {
  Domain domain = Domain::integers();
  int gamma_rank = 0;
  int generators = 0;
  int k = 1;
  std::vector<Word> relators;
  std::vector<std::vector<std::int64_t>> psi;
  std::vector<PolyMatrix> alpha;
};

// Throws validation_error (or structural_error for shape problems) on the
// first defect; see the checks listed on TwistedPresentation.
void validate_presentation(const TwistedPresentation& p);

// Index of the subgroup of Gamma generated by the psi values: the gcd of
// the maximal minors of the weight matrix.  validate_presentation rejects
// presentations whose weights do not span a finite-index subgroup.
mpz_class psi_image_index(const TwistedPresentation& p);

// The multiplicative extension u |-> alpha(u) * t^{psi(u)} applied to a
// word, and its linear extension to group-ring elements; values are k x k
// matrices over S[Gamma].
PolyMatrix push_forward(const Word& w, const TwistedPresentation& p);
PolyMatrix push_forward(const GroupRingElem& s, const TwistedPresentation& p);

// The twisted chain complex of the presentation 2-complex, with dimensions
// (k, generators*k, relators*k): the degree-1 boundary stacks the blocks
// push_forward(x_i) - I and the degree-2 boundary is the Fox Jacobian
// pushed forward blockwise.  The fundamental identity of the free
// derivative makes the boundaries compose to zero.
BasedChainComplex presentation_complex(const TwistedPresentation& p);

}  // namespace novikov
