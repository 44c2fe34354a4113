#include "novikov/cones.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

void normalize_form(std::vector<mpz_class>& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : f) c /= g;
}

mpq_class evaluate_form(const std::vector<mpz_class>& f, const Character& xi) {
  if (f.size() != xi.coords.size())
    throw structural_error("character rank mismatch");
  mpq_class v = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) v += mpq_class(f[i]) * xi.coords[i];
  return v;
}

// Sort, drop trivially true rows, and keep only the strict representative
// when a form appears with both strictness flags.  Returns true if a
// contradictory row (0 > 0) is present.
bool canonicalize_rows(std::vector<HalfSpace>& rows) {
  bool contradiction = false;
  std::vector<HalfSpace> out;
  std::sort(rows.begin(), rows.end());
  for (const auto& r : rows) {
    if (r.is_zero_form()) {
      if (r.strict()) contradiction = true;
      continue;
    }
    if (!out.empty() && out.back().form() == r.form()) continue;  // strict sorts first
    out.push_back(r);
  }
  rows = std::move(out);
  return contradiction;
}

// One Fourier-Motzkin step: eliminate variable k from `rows`.  Positive
// multiples keep the inequality direction; the combined row is strict when
// either parent is strict.
std::vector<HalfSpace> eliminate_variable(const std::vector<HalfSpace>& rows, int k) {
  std::vector<const HalfSpace*> pos, neg;
  std::vector<HalfSpace> out;
  for (const auto& r : rows) {
    int sgn = mpz_sgn(r.form()[k].get_mpz_t());
    if (sgn == 0)
      out.push_back(r);
    else if (sgn > 0)
      pos.push_back(&r);
    else
      neg.push_back(&r);
  }
  for (const HalfSpace* p : pos)
    for (const HalfSpace* n : neg) {
      const auto& pf = p->form();
      const auto& nf = n->form();
      std::vector<mpz_class> f(pf.size());
      for (std::size_t j = 0; j < f.size(); ++j)
        f[j] = pf[j] * (-nf[k]) + nf[j] * pf[k];
      out.emplace_back(std::move(f), p->strict() || n->strict());
    }
  return out;
}

struct Elimination {
  bool empty = false;
  // stages[k] holds the rows before variable k is eliminated; rows in
  // stages[k] only involve variables >= k.  stages.size() == rank + 1.
  std::vector<std::vector<HalfSpace>> stages;
};

Elimination run_elimination(const IntegralCone& cone) {
  Elimination el;
  std::vector<HalfSpace> rows = cone.constraints();
  if (canonicalize_rows(rows)) {
    el.empty = true;
    return el;
  }
  el.stages.push_back(rows);
  for (int k = 0; k < cone.rank(); ++k) {
    rows = eliminate_variable(rows, k);
    if (canonicalize_rows(rows)) {
      el.empty = true;
      return el;
    }
    el.stages.push_back(rows);
  }
  return el;
}

mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

mpz_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

}  // namespace

HalfSpace::HalfSpace(std::vector<mpz_class> form, bool strict)
    : form_(std::move(form)), strict_(strict) {
  normalize_form(form_);
}

bool HalfSpace::satisfied_by(const Character& xi) const {
  mpq_class v = evaluate_form(form_, xi);
  return strict_ ? v > 0 : v >= 0;
}

HalfSpace HalfSpace::negated() const {
  std::vector<mpz_class> f(form_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = -form_[i];
  return HalfSpace(std::move(f), !strict_);
}

bool HalfSpace::is_zero_form() const {
  for (const auto& c : form_)
    if (c != 0) return false;
  return true;
}

int HalfSpace::compare(const HalfSpace& a, const HalfSpace& b) {
  if (a.form_.size() != b.form_.size())
    return a.form_.size() < b.form_.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.form_.size(); ++i) {
    int c = cmp(a.form_[i], b.form_[i]);
    if (c != 0) return c;
  }
  if (a.strict_ == b.strict_) return 0;
  return a.strict_ ? -1 : 1;  // strict sorts first
}

IntegralCone::IntegralCone(int rank, std::vector<HalfSpace> constraints)
    : rank_(rank) {
  if (rank < 0) throw structural_error("negative rank");
  for (const auto& h : constraints)
    if (h.rank() != rank)
      throw structural_error("half-space rank mismatch: " +
                             std::to_string(h.rank()) + " vs " +
                             std::to_string(rank));
  // Keep contradictory zero rows so emptiness stays detectable; drop only
  // the trivially true non-strict zero form.
  std::vector<HalfSpace> kept;
  for (auto& h : constraints)
    if (!(h.is_zero_form() && !h.strict())) kept.push_back(std::move(h));
  std::sort(kept.begin(), kept.end());
  constraints_.clear();
  for (const auto& h : kept) {
    if (!constraints_.empty() && constraints_.back().form() == h.form()) continue;
    constraints_.push_back(h);
  }
}

IntegralCone IntegralCone::whole_space(int rank) {
  return IntegralCone(rank, {});
}

bool IntegralCone::contains(const Character& xi) const {
  if (xi.rank() != rank_) throw structural_error("character rank mismatch");
  for (const auto& h : constraints_)
    if (!h.satisfied_by(xi)) return false;
  return true;
}

int IntegralCone::compare(const IntegralCone& a, const IntegralCone& b) {
  if (a.constraints_.size() != b.constraints_.size())
    return a.constraints_.size() < b.constraints_.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.constraints_.size(); ++i) {
    int c = HalfSpace::compare(a.constraints_[i], b.constraints_[i]);
    if (c != 0) return c;
  }
  return 0;
}

IntegralSubset IntegralSubset::empty_set(int rank) {
  return IntegralSubset(rank, {});
}

IntegralSubset IntegralSubset::whole_space(int rank) {
  return IntegralSubset(rank, {IntegralCone::whole_space(rank)});
}

IntegralSubset IntegralSubset::of(IntegralCone cone) {
  int rank = cone.rank();
  return IntegralSubset(rank, {std::move(cone)});
}

IntegralSubset::IntegralSubset(int rank, std::vector<IntegralCone> cones)
    : rank_(rank) {
  if (rank < 0) throw structural_error("negative rank");
  for (const auto& c : cones)
    if (c.rank() != rank) throw structural_error("cone rank mismatch");
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  cones_ = std::move(cones);
}

bool contains_point(const IntegralCone& c, const Character& xi) {
  return c.contains(xi);
}

bool contains_point(const IntegralSubset& s, const Character& xi) {
  if (xi.rank() != s.rank()) throw structural_error("character rank mismatch");
  for (const auto& c : s.cones())
    if (c.contains(xi)) return true;
  return false;
}

bool cone_is_empty(const IntegralCone& c) {
  return run_elimination(c).empty;
}

namespace detail {

bool cone_is_empty_with_order(const IntegralCone& c, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != c.rank())
    throw structural_error("elimination order must cover every variable");
  std::vector<HalfSpace> rows = c.constraints();
  if (canonicalize_rows(rows)) return true;
  for (int k : order) {
    if (k < 0 || k >= c.rank())
      throw structural_error("elimination order index out of range");
    rows = eliminate_variable(rows, k);
    if (canonicalize_rows(rows)) return true;
  }
  return false;
}

}  // namespace detail

IntegralSubset subset_intersect(const IntegralSubset& a, const IntegralSubset& b) {
  if (a.rank() != b.rank()) throw structural_error("subset rank mismatch");
  std::vector<IntegralCone> cones;
  for (const auto& ca : a.cones())
    for (const auto& cb : b.cones()) {
      std::vector<HalfSpace> merged = ca.constraints();
      merged.insert(merged.end(), cb.constraints().begin(), cb.constraints().end());
      IntegralCone cone(a.rank(), std::move(merged));
      if (!cone_is_empty(cone)) cones.push_back(std::move(cone));
    }
  return IntegralSubset(a.rank(), std::move(cones));
}

IntegralSubset subset_union(const IntegralSubset& a, const IntegralSubset& b) {
  if (a.rank() != b.rank()) throw structural_error("subset rank mismatch");
  std::vector<IntegralCone> cones;
  for (const auto& c : a.cones())
    if (!cone_is_empty(c)) cones.push_back(c);
  for (const auto& c : b.cones())
    if (!cone_is_empty(c)) cones.push_back(c);
  return IntegralSubset(a.rank(), std::move(cones));
}

IntegralSubset subset_complement(const IntegralSubset& s) {
  // De Morgan: the complement of a union of cones is the intersection of
  // the unions of the negated half-spaces.
  IntegralSubset result = IntegralSubset::whole_space(s.rank());
  for (const auto& cone : s.cones()) {
    std::vector<IntegralCone> pieces;
    for (const auto& h : cone.constraints())
      pieces.emplace_back(s.rank(), std::vector<HalfSpace>{h.negated()});
    result = subset_intersect(result, IntegralSubset(s.rank(), std::move(pieces)));
  }
  return result;
}

bool subset_is_empty(const IntegralSubset& s) {
  for (const auto& c : s.cones())
    if (!cone_is_empty(c)) return false;
  return true;
}

Character character_from_integers(const std::vector<mpz_class>& v) {
  Character xi;
  xi.coords.reserve(v.size());
  for (const auto& z : v) xi.coords.emplace_back(z);
  return xi;
}

std::optional<std::vector<mpz_class>> lattice_point(const IntegralSubset& s) {
  for (const auto& cone : s.cones()) {
    Elimination el = run_elimination(cone);
    if (el.empty) continue;

    const int rank = cone.rank();
    std::vector<mpq_class> x(rank, 0);
    for (int k = rank - 1; k >= 0; --k) {
      bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
      mpq_class lo, hi;
      for (const auto& row : el.stages[k]) {
        const auto& f = row.form();
        if (f[k] == 0) continue;
        mpq_class rest = 0;
        for (int j = k + 1; j < rank; ++j)
          if (f[j] != 0) rest += mpq_class(f[j]) * x[j];
        mpq_class bound = -rest / mpq_class(f[k]);
        if (f[k] > 0) {
          // f[k]*x_k + rest (>|>=) 0  <=>  x_k (>|>=) bound
          if (!has_lo || bound > lo) {
            lo = bound;
            lo_strict = row.strict();
            has_lo = true;
          } else if (bound == lo && row.strict()) {
            lo_strict = true;
          }
        } else {
          if (!has_hi || bound < hi) {
            hi = bound;
            hi_strict = row.strict();
            has_hi = true;
          } else if (bound == hi && row.strict()) {
            hi_strict = true;
          }
        }
      }
      if (has_lo && has_hi) {
        // Feasibility of the projection guarantees a nonempty interval.
        if (lo == hi)
          x[k] = lo;
        else
          x[k] = (lo + hi) / 2;
      } else if (has_lo) {
        x[k] = lo_strict ? mpq_class(floor_q(lo) + 1) : mpq_class(ceil_q(lo));
      } else if (has_hi) {
        x[k] = hi_strict ? mpq_class(ceil_q(hi) - 1) : mpq_class(floor_q(hi));
      } else {
        x[k] = 0;
      }
    }

    // Clear denominators; homogeneity keeps scaled points in the cone.
    mpz_class scale = 1;
    for (const auto& c : x)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> result(rank);
    Character check;
    check.coords.resize(rank);
    for (int k = 0; k < rank; ++k) {
      mpq_class scaled = x[k] * mpq_class(scale);
      result[k] = scaled.get_num();
      check.coords[k] = scaled;
    }
    if (!cone.contains(check))
      throw error("internal: back-substitution produced a point outside its cone");
    return result;
  }
  return std::nullopt;
}

bool subset_equivalent(const IntegralSubset& a, const IntegralSubset& b) {
  return subset_is_empty(subset_intersect(a, subset_complement(b))) &&
         subset_is_empty(subset_intersect(b, subset_complement(a)));
}

std::string to_string(const HalfSpace& h) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < h.rank(); ++i) {
    if (i) out << ",";
    out << h.form()[i].get_str();
  }
  out << ")" << (h.strict() ? " > 0" : " >= 0");
  return out.str();
}

std::string to_string(const IntegralCone& c) {
  if (c.is_whole_space()) return "all";
  std::ostringstream out;
  for (std::size_t i = 0; i < c.constraints().size(); ++i) {
    if (i) out << " & ";
    out << to_string(c.constraints()[i]);
  }
  return out.str();
}

}  // namespace novikov
