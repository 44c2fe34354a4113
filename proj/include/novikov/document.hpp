#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novikov/complex.hpp"
#include "novikov/fox.hpp"

namespace novikov {

// Fiber data for an algebraic fibration over the circle: a chain complex
// over S (group rank 0) plus one monodromy matrix per degree.
struct MappingTorusData {
  std::vector<int> fiber_dims;
  std::vector<PolyMatrix> fiber_boundaries;
  std::vector<PolyMatrix> monodromy;
};

// One parsed problem: a coefficient domain, the free-abelian group rank,
// exactly one payload, and optional meridian / query-point decorations.
// Exactly one of the three payload members is engaged.
struct ProblemDocument {
  Domain domain = Domain::integers();
  int gamma_rank = 0;
  std::optional<BasedChainComplex> complex;
  std::optional<TwistedPresentation> presentation;
  std::optional<MappingTorusData> torus;
  std::vector<std::vector<std::int64_t>> meridians;
  std::vector<Character> query_points;
};

// Parses the JSON problem format (grammar in docs/format.md).  Every shape
// problem raises parse_error carrying the offending field path; deeper
// semantic checks (boundary composition, relator identities, chain-map
// conditions) belong to the evaluation layer.  Relator words are freely
// reduced on ingestion.
ProblemDocument parse_document(const std::string& text);

// Canonical form: fixed key order, polynomial terms in ascending exponent
// order, coefficients as strings, two-space indentation, trailing newline.
// parse_document(serialize_document(d)) reproduces d, and serializing a
// parsed canonical text is the identity on bytes.
std::string serialize_document(const ProblemDocument& doc);

}  // namespace novikov
