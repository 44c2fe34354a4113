#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "novikov/laurent.hpp"

namespace novikov {

// A half-space of Hom(Gamma, R) = R^r cut out by a homogeneous integer
// linear form: {xi : f.xi > 0} (strict) or {xi : f.xi >= 0}.  Forms are
// normalized by dividing out the gcd of the entries; the sign is preserved.
class HalfSpace {
public:
  HalfSpace(std::vector<mpz_class> form, bool strict);

  const std::vector<mpz_class>& form() const { return form_; }
  bool strict() const { return strict_; }
  int rank() const { return static_cast<int>(form_.size()); }

  bool satisfied_by(const Character& xi) const;
  // {f > 0} <-> {-f >= 0} complement pair.
  HalfSpace negated() const;

  bool is_zero_form() const;

  // Total order used for canonical sorting: form entries lexicographically,
  // then strict before non-strict.
  static int compare(const HalfSpace& a, const HalfSpace& b);
  bool operator==(const HalfSpace& b) const { return compare(*this, b) == 0; }
  bool operator<(const HalfSpace& b) const { return compare(*this, b) < 0; }

private:
  std::vector<mpz_class> form_;
  bool strict_;
};

// Finite intersection of half-spaces.  Constraints are kept sorted and
// deduplicated; a redundant non-strict copy of a strict constraint is
// dropped, as is the trivially true non-strict zero form.
class IntegralCone {
public:
  IntegralCone(int rank, std::vector<HalfSpace> constraints);
  static IntegralCone whole_space(int rank);

  int rank() const { return rank_; }
  const std::vector<HalfSpace>& constraints() const { return constraints_; }
  bool is_whole_space() const { return constraints_.empty(); }

  bool contains(const Character& xi) const;

  static int compare(const IntegralCone& a, const IntegralCone& b);
  bool operator==(const IntegralCone& b) const { return compare(*this, b) == 0; }
  bool operator<(const IntegralCone& b) const { return compare(*this, b) < 0; }

private:
  int rank_;
  std::vector<HalfSpace> constraints_;
};

// Finite union of cones.  The canonical form sorts the cones and removes
// duplicates; emptiness of members is the caller's business except where an
// operation documents pruning.
class IntegralSubset {
public:
  static IntegralSubset empty_set(int rank);
  static IntegralSubset whole_space(int rank);
  static IntegralSubset of(IntegralCone cone);
  IntegralSubset(int rank, std::vector<IntegralCone> cones);

  int rank() const { return rank_; }
  const std::vector<IntegralCone>& cones() const { return cones_; }

private:
  int rank_;
  std::vector<IntegralCone> cones_;
};

// Membership test by direct evaluation of the constraints.
bool contains_point(const IntegralSubset& s, const Character& xi);
bool contains_point(const IntegralCone& c, const Character& xi);

// Exact emptiness decision by Fourier-Motzkin elimination.
bool cone_is_empty(const IntegralCone& c);

// Boolean algebra on integral subsets.  Results are exact; intersect and
// union prune cones that Fourier-Motzkin certifies empty.
IntegralSubset subset_complement(const IntegralSubset& s);
IntegralSubset subset_intersect(const IntegralSubset& a, const IntegralSubset& b);
IntegralSubset subset_union(const IntegralSubset& a, const IntegralSubset& b);
bool subset_is_empty(const IntegralSubset& s);

// A point of s with integer coordinates, when s is nonempty: found by
// Fourier-Motzkin back-substitution and cleared to the integer lattice
// (valid because all constraints are homogeneous).  nullopt iff s is empty.
std::optional<std::vector<mpz_class>> lattice_point(const IntegralSubset& s);

// Semantic equality: mutual containment via complements.
bool subset_equivalent(const IntegralSubset& a, const IntegralSubset& b);

Character character_from_integers(const std::vector<mpz_class>& v);

std::string to_string(const HalfSpace& h);
std::string to_string(const IntegralCone& c);

namespace detail {
// Emptiness decision with a caller-chosen variable elimination order, used
// to cross-check order independence.  `order` must be a permutation of
// {0,...,rank-1}.
bool cone_is_empty_with_order(const IntegralCone& c, const std::vector<int>& order);
}  // namespace detail

}  // namespace novikov
