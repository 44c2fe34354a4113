#include "novikov/commands.hpp"

#include <string>

#include "novikov/cones.hpp"
#include "novikov/errors.hpp"

namespace novikov {

namespace {

BasedChainComplex fiber_complex(const MappingTorusData& t, const Domain& d) {
  BasedChainComplex fiber;
  fiber.domain = d;
  fiber.gamma_rank = 0;
  fiber.dims = t.fiber_dims;
  fiber.boundaries = t.fiber_boundaries;
  return fiber;
}

// Every payload resolves to the complex the commands operate on.
BasedChainComplex complex_of(const ProblemDocument& doc) {
  if (doc.complex) {
    require_valid(*doc.complex);
    return *doc.complex;
  }
  if (doc.presentation) return presentation_complex(*doc.presentation);
  return mapping_torus(fiber_complex(*doc.torus, doc.domain), doc.torus->monodromy);
}

std::string render_character(const Character& xi) {
  std::string out = "(";
  for (std::size_t i = 0; i < xi.coords.size(); ++i) {
    if (i) out += ", ";
    out += Domain::rationals().element_to_string(xi.coords[i]);
  }
  return out + ")";
}

std::string render_witness(const std::vector<mpz_class>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i].get_str();
  }
  return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string execute_command(const std::string& command,
                            const ProblemDocument& doc,
                            const CommandOptions& options) {
  EnumerationLimits limits;
  limits.tau_chain_cap = options.tau_chain_cap;
  limits.jobs = options.jobs;

  if (command == "fox" || command == "torus") {
    ProblemDocument out;
    out.domain = doc.domain;
    out.gamma_rank = doc.gamma_rank;
    out.meridians = doc.meridians;
    out.query_points = doc.query_points;
    if (command == "fox") {
      if (!doc.presentation)
        throw validation_error("the fox command needs a presentation payload");
      out.complex = presentation_complex(*doc.presentation);
    } else {
      if (!doc.torus)
        throw validation_error(
            "the torus command needs a mapping_torus payload");
      out.complex = mapping_torus(fiber_complex(*doc.torus, doc.domain),
                                  doc.torus->monodromy);
    }
    return serialize_document(out);
  }

  BasedChainComplex c = complex_of(doc);

  if (command == "euler")
    return "euler: " + std::to_string(euler_characteristic(c)) + "\n";

  if (command == "betti") {
    std::string out = "betti:";
    for (int b : betti_numbers(c)) out += " " + std::to_string(b);
    return out + "\n";
  }

  if (command == "vanish") {
    IntegralSubset vs = vanishing_set(c, limits);
    std::string out = "cones: " + std::to_string(vs.cones().size()) + "\n";
    for (const IntegralCone& cone : vs.cones())
      out += "cone: " + to_string(cone) + "\n";
    return out;
  }

  if (command == "check") {
    std::vector<Character> points = doc.query_points;
    points.insert(points.end(), options.extra_points.begin(),
                  options.extra_points.end());
    for (const Character& xi : points)
      if (xi.rank() != c.gamma_rank)
        throw validation_error("query point " + render_character(xi) +
                               " has " + std::to_string(xi.rank()) +
                               " coordinates, expected " +
                               std::to_string(c.gamma_rank));
    IntegralSubset vs = vanishing_set(c, limits);
    TauChainOracle oracle(c, limits);
    std::string out = "points: " + std::to_string(points.size()) + "\n";
    for (const Character& xi : points) {
      bool by_cones = contains_point(vs, xi);
      bool by_oracle = oracle.vanishes_at(xi);
      out += "point " + render_character(xi) + ": cone-set=" +
             yes_no(by_cones) + " oracle=" + yes_no(by_oracle) +
             (by_cones == by_oracle ? " agree" : " DISAGREE") + "\n";
    }
    return out;
  }

  if (command == "positive") {
    PositivityVerdict verdict =
        verify_positive_vanishing(c, doc.meridians, limits);
    if (verdict.vanishes) return "verdict: Vanishes\n";
    return "verdict: Witness " + render_witness(verdict.witness) + "\n";
  }

  throw validation_error("unknown command '" + command + "'");
}

}  // namespace novikov
