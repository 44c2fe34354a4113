#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "novikov/matrix.hpp"

namespace novikov {

// A based finite free chain complex over S[Gamma].  dims[i] is the number
// of basis elements of C_i; boundaries[i] is the matrix of the boundary map
// C_{i+1} -> C_i (so it has dims[i+1] rows and dims[i] columns, acting on
// row vectors from the right).
struct BasedChainComplex {
  Domain domain = Domain::integers();
  int gamma_rank = 0;
  std::vector<int> dims;
  std::vector<PolyMatrix> boundaries;

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
};

// First structural or compositional defect, or nullopt when the data is a
// genuine chain complex: shapes line up, entries live in the right ring,
// and consecutive boundaries compose to zero.
std::optional<std::string> validate_complex(const BasedChainComplex& c);
// Throws validation_error with the defect message.
void require_valid(const BasedChainComplex& c);

// Sorted list of basis indices.
using IndexSet = std::vector<int>;

// A chain of basis subsets alpha = (alpha_0, ..., alpha_m) with alpha_0
// empty and |alpha_{i+1}| = dims[i] - |alpha_i|; the final subset must
// exhaust the top degree.  These index the square submatrices whose
// simultaneous invertibility certifies acyclicity.
struct TauChain {
  std::vector<IndexSet> alpha;
};

struct EnumerationLimits {
  std::uint64_t tau_chain_cap = 1'000'000;
  int jobs = 1;
};

// The subset sizes forced by the dimension vector, or nullopt when no chain
// of subsets is possible (a size leaves [0, dims[i]], or the top degree is
// not exhausted).
std::optional<std::vector<int>> tau_sizes(const std::vector<int>& dims);

// Number of chains: the product of binomial(dims[i], size_i).
mpz_class tau_chain_count(const BasedChainComplex& c);

// All chains in lexicographic order (alpha_1 varies slowest).  Throws
// resource_error when the count exceeds limits.tau_chain_cap.
std::vector<TauChain> enumerate_tau_chains(const BasedChainComplex& c,
                                           const EnumerationLimits& limits = {});

// The square submatrix of boundaries[level] with rows alpha_{level+1} and
// the columns NOT in alpha_level.
PolyMatrix tau_submatrix(const BasedChainComplex& c, int level,
                         const IndexSet& rows, const IndexSet& excluded_cols);

// Decides whether homology with rational Novikov coefficients vanishes at
// one character, by scanning chains for one whose submatrix determinants
// all become units.  Memoizes determinants across calls so repeated probes
// of the same complex stay cheap.
class TauChainOracle {
public:
  explicit TauChainOracle(BasedChainComplex c, EnumerationLimits limits = {});
  bool vanishes_at(const Character& xi) const;
  const BasedChainComplex& complex() const { return complex_; }

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  BasedChainComplex complex_;
};

bool vanishes_at(const BasedChainComplex& c, const Character& xi,
                 const EnumerationLimits& limits = {});

// The full vanishing locus as an integral subset: the union over chains of
// the intersection over levels of the submatrix invertibility cones.
// Deterministic for any limits.jobs.
IntegralSubset vanishing_set(const BasedChainComplex& c,
                             const EnumerationLimits& limits = {});

// Betti numbers over the fraction field of S[Gamma] (which localization
// does not change): b_i = dims[i] - rank A_{i-1} - rank A_i.
std::vector<int> betti_numbers(const BasedChainComplex& c);

// Alternating dimension sum; no validation required.
long long euler_characteristic(const BasedChainComplex& c);

// Degreewise direct sum with block-diagonal boundaries.
BasedChainComplex direct_sum(const BasedChainComplex& a,
                             const BasedChainComplex& b);

// The algebraic mapping torus of a self-map phi of a complex over S
// (gamma_rank 0): the cone of (id - t*phi) over S[Z].  Degree i of the
// result is D_{i-1} (+) D_i and the boundary is the block matrix
// [-d_{i-1}, I - t*phi_i; 0, d_i].  phi must be a chain map and each
// phi_i invertible over S.
BasedChainComplex mapping_torus(const BasedChainComplex& fiber,
                                const std::vector<PolyMatrix>& monodromy);

struct PositivityVerdict {
  bool vanishes = false;
  // Nonempty exactly when vanishes is false: an integral character that is
  // positive on every meridian yet keeps homology alive.
  std::vector<mpz_class> witness;
};

// Checks vanishing over the open cone where all meridians are positive:
// intersects that cone with the complement of the vanishing set and hunts
// for an integral point.  A found witness is re-verified against the
// chain-scanning oracle before being reported.
PositivityVerdict verify_positive_vanishing(
    const BasedChainComplex& c,
    const std::vector<std::vector<std::int64_t>>& meridians,
    const EnumerationLimits& limits = {});

}  // namespace novikov
