#include "novikov/document.hpp"

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <utility>

#include <json.hpp>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw parse_error("at " + path + ": " + msg);
}

std::string item(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& as_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

const json& require_key(const json& obj, const std::string& path,
                        const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known) fail(path, "unknown key \"" + it.key() + "\"");
  }
}

long long as_integer(const json& j, const std::string& path,
                     long long lo = std::numeric_limits<std::int64_t>::min(),
                     long long hi = std::numeric_limits<std::int64_t>::max()) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi)
    fail(path, "value " + std::to_string(v) + " is outside [" +
                   std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

mpq_class parse_coefficient(const json& j, const Domain& d,
                            const std::string& path) {
  try {
    if (j.is_number_integer())
      return d.canonical(mpq_class(static_cast<long>(j.get<long long>())));
    if (j.is_string()) return d.parse_element(j.get<std::string>());
  } catch (const error& e) {
    fail(path, e.what());
  }
  fail(path, "coefficient must be a string or an integer");
}

LaurentPoly parse_poly(const json& j, const Domain& d, int rank,
                       const std::string& path) {
  as_array(j, path);
  std::vector<std::pair<Exponent, mpq_class>> raw;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tpath = item(path, i);
    const json& term = as_object(j[i], tpath);
    reject_unknown_keys(term, tpath, {"c", "e"});
    mpq_class c = parse_coefficient(require_key(term, tpath, "c"), d,
                                    tpath + ".c");
    const json& exps = as_array(require_key(term, tpath, "e"), tpath + ".e");
    if (static_cast<int>(exps.size()) != rank)
      fail(tpath + ".e", "expected " + std::to_string(rank) +
                             " exponents, got " + std::to_string(exps.size()));
    Exponent e;
    for (std::size_t k = 0; k < exps.size(); ++k)
      e.push_back(as_integer(exps[k], item(tpath + ".e", k)));
    raw.emplace_back(std::move(e), std::move(c));
  }
  return LaurentPoly::from_terms(d, rank, raw);
}

PolyMatrix parse_matrix(const json& j, const Domain& d, int rank, int rows,
                        int cols, const std::string& path,
                        const std::string& name) {
  as_array(j, path);
  if (static_cast<int>(j.size()) != rows)
    fail(path, name + " must have " + std::to_string(rows) + " rows, got " +
                   std::to_string(j.size()));
  PolyMatrix m(d, rank, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::string rpath = item(path, i);
    const json& row = as_array(j[i], rpath);
    if (static_cast<int>(row.size()) != cols)
      fail(rpath, name + " must have " + std::to_string(cols) +
                      " columns, got " + std::to_string(row.size()));
    for (int k = 0; k < cols; ++k)
      m.set(i, k, parse_poly(row[k], d, rank, item(rpath, k)));
  }
  return m;
}

std::vector<int> parse_dims(const json& j, const std::string& path) {
  as_array(j, path);
  if (j.empty()) fail(path, "needs at least one degree");
  std::vector<int> dims;
  for (std::size_t i = 0; i < j.size(); ++i)
    dims.push_back(
        static_cast<int>(as_integer(j[i], item(path, i), 0, 1'000'000)));
  return dims;
}

BasedChainComplex parse_complex(const json& j, const Domain& d, int rank) {
  const std::string path = "$.complex";
  as_object(j, path);
  reject_unknown_keys(j, path, {"dims", "boundaries"});
  BasedChainComplex c;
  c.domain = d;
  c.gamma_rank = rank;
  c.dims = parse_dims(require_key(j, path, "dims"), path + ".dims");
  const json& bs =
      as_array(require_key(j, path, "boundaries"), path + ".boundaries");
  if (bs.size() + 1 != c.dims.size())
    fail(path + ".boundaries",
         "expected " + std::to_string(c.dims.size() - 1) +
             " boundary matrices, got " + std::to_string(bs.size()));
  for (std::size_t i = 0; i < bs.size(); ++i)
    c.boundaries.push_back(parse_matrix(
        bs[i], d, rank, c.dims[i + 1], c.dims[i], item(path + ".boundaries", i),
        "boundary matrix " + std::to_string(i)));
  return c;
}

TwistedPresentation parse_presentation(const json& j, const Domain& d,
                                       int rank) {
  const std::string path = "$.presentation";
  as_object(j, path);
  reject_unknown_keys(j, path, {"generators", "k", "relators", "psi", "alpha"});
  TwistedPresentation p;
  p.domain = d;
  p.gamma_rank = rank;
  p.generators = static_cast<int>(
      as_integer(require_key(j, path, "generators"), path + ".generators", 0,
                 4096));
  p.k = static_cast<int>(
      as_integer(require_key(j, path, "k"), path + ".k", 1, 4096));

  const json& rels =
      as_array(require_key(j, path, "relators"), path + ".relators");
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string rpath = item(path + ".relators", i);
    const json& rj = as_array(rels[i], rpath);
    Word w;
    for (std::size_t k = 0; k < rj.size(); ++k) {
      long long letter = as_integer(rj[k], item(rpath, k));
      if (letter == 0 || letter > p.generators || letter < -p.generators)
        fail(item(rpath, k), "letter " + std::to_string(letter) +
                                 " is outside the generator range 1.." +
                                 std::to_string(p.generators));
      w.push_back(static_cast<int>(letter));
    }
    p.relators.push_back(free_reduce(std::move(w)));
  }

  const json& psi = as_array(require_key(j, path, "psi"), path + ".psi");
  if (static_cast<int>(psi.size()) != p.generators)
    fail(path + ".psi", "expected " + std::to_string(p.generators) +
                            " weight vectors, got " +
                            std::to_string(psi.size()));
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const std::string wpath = item(path + ".psi", i);
    const json& wj = as_array(psi[i], wpath);
    if (static_cast<int>(wj.size()) != rank)
      fail(wpath, "expected " + std::to_string(rank) + " weights, got " +
                      std::to_string(wj.size()));
    std::vector<std::int64_t> weights;
    for (std::size_t k = 0; k < wj.size(); ++k)
      weights.push_back(as_integer(wj[k], item(wpath, k)));
    p.psi.push_back(std::move(weights));
  }

  const json& alpha = as_array(require_key(j, path, "alpha"), path + ".alpha");
  if (static_cast<int>(alpha.size()) != p.generators)
    fail(path + ".alpha", "expected " + std::to_string(p.generators) +
                              " representation matrices, got " +
                              std::to_string(alpha.size()));
  for (std::size_t i = 0; i < alpha.size(); ++i)
    p.alpha.push_back(parse_matrix(
        alpha[i], d, 0, p.k, p.k, item(path + ".alpha", i),
        "representation matrix " + std::to_string(i + 1)));
  return p;
}

MappingTorusData parse_torus(const json& j, const Domain& d, int rank) {
  const std::string path = "$.mapping_torus";
  if (rank != 1)
    fail(path, "mapping-torus documents use gamma_rank 1, got " +
                   std::to_string(rank));
  as_object(j, path);
  reject_unknown_keys(j, path, {"fiber_dims", "fiber_boundaries", "monodromy"});
  MappingTorusData t;
  t.fiber_dims =
      parse_dims(require_key(j, path, "fiber_dims"), path + ".fiber_dims");
  const json& bs = as_array(require_key(j, path, "fiber_boundaries"),
                            path + ".fiber_boundaries");
  if (bs.size() + 1 != t.fiber_dims.size())
    fail(path + ".fiber_boundaries",
         "expected " + std::to_string(t.fiber_dims.size() - 1) +
             " boundary matrices, got " + std::to_string(bs.size()));
  for (std::size_t i = 0; i < bs.size(); ++i)
    t.fiber_boundaries.push_back(
        parse_matrix(bs[i], d, 0, t.fiber_dims[i + 1], t.fiber_dims[i],
                     item(path + ".fiber_boundaries", i),
                     "fiber boundary matrix " + std::to_string(i)));
  const json& mono =
      as_array(require_key(j, path, "monodromy"), path + ".monodromy");
  if (mono.size() != t.fiber_dims.size())
    fail(path + ".monodromy", "expected " +
                                  std::to_string(t.fiber_dims.size()) +
                                  " monodromy matrices, got " +
                                  std::to_string(mono.size()));
  for (std::size_t i = 0; i < mono.size(); ++i)
    t.monodromy.push_back(parse_matrix(
        mono[i], d, 0, t.fiber_dims[i], t.fiber_dims[i],
        item(path + ".monodromy", i),
        "monodromy matrix " + std::to_string(i)));
  return t;
}

json poly_json(const LaurentPoly& p, const Domain& d) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json term;
    term["c"] = d.element_to_string(t.coeff);
    term["e"] = t.exp;
    terms.push_back(std::move(term));
  }
  return terms;
}

json matrix_json(const PolyMatrix& m, const Domain& d) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(poly_json(m.at(i, j), d));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ProblemDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed document: ") + e.what());
  }
  const std::string root = "$";
  as_object(j, root);
  reject_unknown_keys(j, root,
                      {"domain", "gamma_rank", "complex", "presentation",
                       "mapping_torus", "meridians", "query_points"});

  ProblemDocument doc;
  const json& domain = require_key(j, root, "domain");
  if (!domain.is_string()) fail("$.domain", "expected a string");
  try {
    doc.domain = Domain::parse(domain.get<std::string>());
  } catch (const parse_error& e) {
    fail("$.domain", e.what());
  }
  doc.gamma_rank = static_cast<int>(as_integer(
      require_key(j, root, "gamma_rank"), "$.gamma_rank", 0, 1024));

  int payloads = static_cast<int>(j.count("complex") + j.count("presentation") +
                                  j.count("mapping_torus"));
  if (payloads != 1)
    fail(root,
         "expected exactly one of \"complex\", \"presentation\", "
         "\"mapping_torus\", got " +
             std::to_string(payloads));
  if (j.contains("complex"))
    doc.complex = parse_complex(j["complex"], doc.domain, doc.gamma_rank);
  else if (j.contains("presentation"))
    doc.presentation =
        parse_presentation(j["presentation"], doc.domain, doc.gamma_rank);
  else
    doc.torus = parse_torus(j["mapping_torus"], doc.domain, doc.gamma_rank);

  if (j.contains("meridians")) {
    const json& ms = as_array(j["meridians"], "$.meridians");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const std::string mpath = item("$.meridians", i);
      const json& mj = as_array(ms[i], mpath);
      if (static_cast<int>(mj.size()) != doc.gamma_rank)
        fail(mpath, "expected " + std::to_string(doc.gamma_rank) +
                        " coordinates, got " + std::to_string(mj.size()));
      std::vector<std::int64_t> m;
      for (std::size_t k = 0; k < mj.size(); ++k)
        m.push_back(as_integer(mj[k], item(mpath, k)));
      doc.meridians.push_back(std::move(m));
    }
  }

  if (j.contains("query_points")) {
    const json& pts = as_array(j["query_points"], "$.query_points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string ppath = item("$.query_points", i);
      const json& pj = as_array(pts[i], ppath);
      if (static_cast<int>(pj.size()) != doc.gamma_rank)
        fail(ppath, "expected " + std::to_string(doc.gamma_rank) +
                        " coordinates, got " + std::to_string(pj.size()));
      Character xi;
      for (std::size_t k = 0; k < pj.size(); ++k) {
        const json& coord = pj[k];
        if (coord.is_number_integer())
          xi.coords.emplace_back(
              static_cast<long>(as_integer(coord, item(ppath, k))));
        else if (coord.is_string())
          try {
            xi.coords.push_back(
                Domain::rationals().parse_element(coord.get<std::string>()));
          } catch (const error& e) {
            fail(item(ppath, k), e.what());
          }
        else
          fail(item(ppath, k), "expected a rational as a string or integer");
      }
      doc.query_points.push_back(std::move(xi));
    }
  }
  return doc;
}

std::string serialize_document(const ProblemDocument& doc) {
  json j;
  j["domain"] = doc.domain.to_string();
  j["gamma_rank"] = doc.gamma_rank;

  if (doc.complex) {
    json c;
    c["dims"] = doc.complex->dims;
    json bs = json::array();
    for (const auto& b : doc.complex->boundaries)
      bs.push_back(matrix_json(b, doc.domain));
    c["boundaries"] = std::move(bs);
    j["complex"] = std::move(c);
  } else if (doc.presentation) {
    const TwistedPresentation& p = *doc.presentation;
    json pj;
    pj["generators"] = p.generators;
    pj["k"] = p.k;
    pj["relators"] = p.relators;
    pj["psi"] = p.psi;
    json alpha = json::array();
    for (const auto& a : p.alpha) alpha.push_back(matrix_json(a, doc.domain));
    pj["alpha"] = std::move(alpha);
    j["presentation"] = std::move(pj);
  } else if (doc.torus) {
    const MappingTorusData& t = *doc.torus;
    json tj;
    tj["fiber_dims"] = t.fiber_dims;
    json bs = json::array();
    for (const auto& b : t.fiber_boundaries)
      bs.push_back(matrix_json(b, doc.domain));
    tj["fiber_boundaries"] = std::move(bs);
    json mono = json::array();
    for (const auto& m : t.monodromy) mono.push_back(matrix_json(m, doc.domain));
    tj["monodromy"] = std::move(mono);
    j["mapping_torus"] = std::move(tj);
  } else {
    throw structural_error("document has no payload");
  }

  if (!doc.meridians.empty()) j["meridians"] = doc.meridians;
  if (!doc.query_points.empty()) {
    json pts = json::array();
    for (const Character& xi : doc.query_points) {
      json pt = json::array();
      for (const mpq_class& q : xi.coords)
        pt.push_back(Domain::rationals().element_to_string(q));
      pts.push_back(std::move(pt));
    }
    j["query_points"] = std::move(pts);
  }
  return j.dump(2) + "\n";
}

}  // namespace novikov
