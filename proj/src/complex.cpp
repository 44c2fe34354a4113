#include "novikov/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

// Next size-k subset of {0,...,n-1} in lexicographic order; false when
// `c` was the last one.
bool next_combination(IndexSet& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

IndexSet first_combination(int k) {
  IndexSet c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

// Streams the chains in lexicographic order (alpha_1 slowest) without
// materializing them.
class ChainCursor {
public:
  ChainCursor(const std::vector<int>& dims, const std::vector<int>& sizes)
      : dims_(dims) {
    current_.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i)
      current_.push_back(first_combination(sizes[i]));
    done_ = false;
  }

  // Copies the current chain into `out` with its running index; advances.
  bool next(TauChain& out, std::uint64_t& index) {
    if (done_) return false;
    out.alpha = current_;
    index = count_++;
    int lvl = static_cast<int>(current_.size()) - 1;
    for (; lvl >= 1; --lvl) {
      if (next_combination(current_[lvl], dims_[lvl])) break;
      current_[lvl] = first_combination(static_cast<int>(current_[lvl].size()));
    }
    if (lvl < 1) done_ = true;
    return true;
  }

private:
  std::vector<int> dims_;
  std::vector<IndexSet> current_;
  bool done_;
  std::uint64_t count_ = 0;
};

mpz_class chain_count_from_sizes(const std::vector<int>& dims,
                                 const std::vector<int>& sizes) {
  mpz_class total = 1;
  for (std::size_t i = 1; i < dims.size(); ++i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), dims[i], sizes[i]);
    total *= b;
  }
  return total;
}

void check_cap(const mpz_class& count, std::uint64_t cap) {
  if (count > mpz_class(static_cast<unsigned long>(cap)))
    throw resource_error("chain enumeration needs " + count.get_str() +
                         " chains, above the cap of " + std::to_string(cap));
}

using DetKey = std::tuple<int, IndexSet, IndexSet>;

LaurentPoly tau_determinant(const BasedChainComplex& c, int level,
                            const IndexSet& rows, const IndexSet& excluded) {
  return determinant(tau_submatrix(c, level, rows, excluded));
}

}  // namespace

std::optional<std::string> validate_complex(const BasedChainComplex& c) {
  if (c.dims.empty()) return "complex has no degrees";
  if (c.gamma_rank < 0) return "negative group rank";
  for (std::size_t i = 0; i < c.dims.size(); ++i)
    if (c.dims[i] < 0)
      return "negative dimension at degree " + std::to_string(i);
  if (c.boundaries.size() + 1 != c.dims.size())
    return "expected " + std::to_string(c.dims.size() - 1) +
           " boundary matrices, got " + std::to_string(c.boundaries.size());
  for (std::size_t i = 0; i < c.boundaries.size(); ++i) {
    const PolyMatrix& a = c.boundaries[i];
    if (a.rows() != c.dims[i + 1] || a.cols() != c.dims[i])
      return "boundary matrix " + std::to_string(i) + " has shape " +
             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
             ", expected " + std::to_string(c.dims[i + 1]) + "x" +
             std::to_string(c.dims[i]);
    if (a.domain() != c.domain)
      return "boundary matrix " + std::to_string(i) + " is over " +
             a.domain().to_string() + ", expected " + c.domain.to_string();
    if (a.rank() != c.gamma_rank)
      return "boundary matrix " + std::to_string(i) + " has group rank " +
             std::to_string(a.rank()) + ", expected " +
             std::to_string(c.gamma_rank);
  }
  for (std::size_t i = 0; i + 1 < c.boundaries.size(); ++i) {
    if (!c.boundaries[i + 1].multiply(c.boundaries[i]).is_zero())
      return "boundary composition at degree " + std::to_string(i + 2) +
             " is nonzero";
  }
  return std::nullopt;
}

void require_valid(const BasedChainComplex& c) {
  if (auto defect = validate_complex(c)) throw validation_error(*defect);
}

std::optional<std::vector<int>> tau_sizes(const std::vector<int>& dims) {
  const int m = static_cast<int>(dims.size()) - 1;
  std::vector<int> sizes(dims.size());
  sizes[0] = 0;
  for (int i = 0; i < m; ++i) {
    sizes[i + 1] = dims[i] - sizes[i];
    if (sizes[i + 1] < 0 || sizes[i + 1] > dims[i + 1]) return std::nullopt;
  }
  // The top subset must use the whole basis: chopping the complex off at
  // degree m leaves nothing above to absorb the leftover columns.
  if (sizes[m] != dims[m]) return std::nullopt;
  return sizes;
}

mpz_class tau_chain_count(const BasedChainComplex& c) {
  auto sizes = tau_sizes(c.dims);
  if (!sizes) return 0;
  return chain_count_from_sizes(c.dims, *sizes);
}

std::vector<TauChain> enumerate_tau_chains(const BasedChainComplex& c,
                                           const EnumerationLimits& limits) {
  auto sizes = tau_sizes(c.dims);
  std::vector<TauChain> out;
  if (!sizes) return out;
  check_cap(chain_count_from_sizes(c.dims, *sizes), limits.tau_chain_cap);
  ChainCursor cursor(c.dims, *sizes);
  TauChain chain;
  std::uint64_t idx;
  while (cursor.next(chain, idx)) out.push_back(chain);
  return out;
}

PolyMatrix tau_submatrix(const BasedChainComplex& c, int level,
                         const IndexSet& rows, const IndexSet& excluded_cols) {
  if (level < 0 || level >= static_cast<int>(c.boundaries.size()))
    throw structural_error("boundary level out of range");
  const PolyMatrix& a = c.boundaries[level];
  std::vector<bool> drop(a.cols(), false);
  for (int j : excluded_cols) {
    if (j < 0 || j >= a.cols())
      throw structural_error("excluded column out of range");
    drop[j] = true;
  }
  std::vector<int> cols;
  cols.reserve(a.cols());
  for (int j = 0; j < a.cols(); ++j)
    if (!drop[j]) cols.push_back(j);
  return a.select(rows, cols);
}

// ---------------------------------------------------------------------------
// Vanishing decisions.

struct TauChainOracle::Impl {
  EnumerationLimits limits;
  std::vector<int> sizes;
  bool has_chains = false;
  mutable std::map<DetKey, LaurentPoly> dets;
  mutable std::mutex mutex;
};

TauChainOracle::TauChainOracle(BasedChainComplex c, EnumerationLimits limits)
    : impl_(std::make_shared<Impl>()), complex_(std::move(c)) {
  require_valid(complex_);
  impl_->limits = limits;
  auto sizes = tau_sizes(complex_.dims);
  if (sizes) {
    check_cap(chain_count_from_sizes(complex_.dims, *sizes),
              limits.tau_chain_cap);
    impl_->sizes = *sizes;
    impl_->has_chains = true;
  }
}

bool TauChainOracle::vanishes_at(const Character& xi) const {
  if (xi.rank() != complex_.gamma_rank)
    throw structural_error("character rank mismatch");
  if (!impl_->has_chains) return false;
  const int m = complex_.top_degree();
  ChainCursor cursor(complex_.dims, impl_->sizes);
  TauChain chain;
  std::uint64_t idx;
  while (cursor.next(chain, idx)) {
    bool all_units = true;
    for (int level = 0; level < m && all_units; ++level) {
      DetKey key{level, chain.alpha[level + 1], chain.alpha[level]};
      const LaurentPoly* det = nullptr;
      {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        auto it = impl_->dets.find(key);
        if (it != impl_->dets.end()) det = &it->second;
      }
      LaurentPoly computed = LaurentPoly::zero(complex_.domain, complex_.gamma_rank);
      if (!det) {
        computed = tau_determinant(complex_, level, chain.alpha[level + 1],
                                   chain.alpha[level]);
        std::lock_guard<std::mutex> lock(impl_->mutex);
        det = &impl_->dets.emplace(key, std::move(computed)).first->second;
      }
      if (!in_novikov_units(*det, xi)) all_units = false;
    }
    if (all_units) return true;
  }
  return false;
}

bool vanishes_at(const BasedChainComplex& c, const Character& xi,
                 const EnumerationLimits& limits) {
  return TauChainOracle(c, limits).vanishes_at(xi);
}

IntegralSubset vanishing_set(const BasedChainComplex& c,
                             const EnumerationLimits& limits) {
  require_valid(c);
  const int rank = c.gamma_rank;
  const int m = c.top_degree();
  auto sizes = tau_sizes(c.dims);
  if (!sizes) return IntegralSubset::empty_set(rank);
  check_cap(chain_count_from_sizes(c.dims, *sizes), limits.tau_chain_cap);

  ChainCursor cursor(c.dims, *sizes);
  std::mutex cursor_mutex;

  std::map<DetKey, IntegralSubset> cones_cache;
  std::mutex cache_mutex;

  // (chain index, that chain's contribution) pairs, merged by index after
  // the workers drain the cursor so the result is schedule-independent.
  std::vector<std::pair<std::uint64_t, std::vector<IntegralCone>>> found;
  std::mutex found_mutex;

  auto level_cones = [&](int level, const IndexSet& rows,
                         const IndexSet& excluded) {
    DetKey key{level, rows, excluded};
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      auto it = cones_cache.find(key);
      if (it != cones_cache.end()) return it->second;
    }
    // Compute outside the lock; a duplicated computation is harmless.
    IntegralSubset cones =
        invertibility_cones(tau_determinant(c, level, rows, excluded));
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cones_cache.emplace(key, std::move(cones)).first->second;
  };

  auto worker = [&]() {
    for (;;) {
      TauChain chain;
      std::uint64_t idx;
      {
        std::lock_guard<std::mutex> lock(cursor_mutex);
        if (!cursor.next(chain, idx)) return;
      }
      std::vector<IntegralSubset> levels;
      levels.reserve(m);
      for (int level = 0; level < m; ++level)
        levels.push_back(
            level_cones(level, chain.alpha[level + 1], chain.alpha[level]));
      // Intersect the tightest unions first to fail fast.
      std::sort(levels.begin(), levels.end(),
                [](const IntegralSubset& a, const IntegralSubset& b) {
                  return a.cones().size() < b.cones().size();
                });
      IntegralSubset acc = IntegralSubset::whole_space(rank);
      for (const auto& s : levels) {
        acc = subset_intersect(acc, s);
        if (acc.cones().empty()) break;
      }
      if (!acc.cones().empty()) {
        std::lock_guard<std::mutex> lock(found_mutex);
        found.emplace_back(idx, acc.cones());
      }
    }
  };

  const int jobs = std::max(1, limits.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<IntegralCone> all;
  for (auto& [idx, cones] : found)
    for (auto& cone : cones) all.push_back(std::move(cone));
  // Contributions are already pruned, so assembling the union directly is
  // the same as folding subset_union.
  return IntegralSubset(rank, std::move(all));
}

// ---------------------------------------------------------------------------
// Classical invariants.

std::vector<int> betti_numbers(const BasedChainComplex& c) {
  require_valid(c);
  const int m = c.top_degree();
  std::vector<int> ranks(m + 2, 0);  // ranks[i+1] = rank of boundaries[i]
  for (int i = 0; i < m; ++i)
    ranks[i + 1] = rank_over_fraction_field(c.boundaries[i]);
  std::vector<int> betti(m + 1);
  for (int i = 0; i <= m; ++i) {
    betti[i] = c.dims[i] - ranks[i] - ranks[i + 1];
    if (betti[i] < 0)
      throw error("internal: negative betti number at degree " +
                  std::to_string(i));
  }
  return betti;
}

long long euler_characteristic(const BasedChainComplex& c) {
  long long chi = 0;
  for (std::size_t i = 0; i < c.dims.size(); ++i)
    chi += (i % 2 == 0) ? c.dims[i] : -c.dims[i];
  return chi;
}

// ---------------------------------------------------------------------------
// Builders.

BasedChainComplex direct_sum(const BasedChainComplex& a,
                             const BasedChainComplex& b) {
  if (a.domain != b.domain || a.gamma_rank != b.gamma_rank)
    throw structural_error("direct sum of complexes over different rings");
  BasedChainComplex out;
  out.domain = a.domain;
  out.gamma_rank = a.gamma_rank;
  const std::size_t degrees = std::max(a.dims.size(), b.dims.size());
  auto dim_of = [](const BasedChainComplex& c, std::size_t i) {
    return i < c.dims.size() ? c.dims[i] : 0;
  };
  for (std::size_t i = 0; i < degrees; ++i)
    out.dims.push_back(dim_of(a, i) + dim_of(b, i));
  for (std::size_t i = 0; i + 1 < degrees; ++i) {
    PolyMatrix block(out.domain, out.gamma_rank, out.dims[i + 1], out.dims[i]);
    const int arows = dim_of(a, i + 1), acols = dim_of(a, i);
    if (i + 1 < a.dims.size())
      for (int r = 0; r < arows; ++r)
        for (int col = 0; col < acols; ++col)
          block.set(r, col, a.boundaries[i].at(r, col));
    if (i + 1 < b.dims.size())
      for (int r = 0; r < dim_of(b, i + 1); ++r)
        for (int col = 0; col < dim_of(b, i); ++col)
          block.set(arows + r, acols + col, b.boundaries[i].at(r, col));
    out.boundaries.push_back(std::move(block));
  }
  return out;
}

BasedChainComplex mapping_torus(const BasedChainComplex& fiber,
                                const std::vector<PolyMatrix>& monodromy) {
  if (fiber.gamma_rank != 0)
    throw structural_error(
        "mapping torus needs a fiber over S itself (group rank 0)");
  require_valid(fiber);
  const int m = fiber.top_degree();
  if (monodromy.size() != fiber.dims.size())
    throw structural_error("expected " + std::to_string(fiber.dims.size()) +
                           " monodromy matrices, got " +
                           std::to_string(monodromy.size()));
  for (int i = 0; i <= m; ++i) {
    const PolyMatrix& phi = monodromy[i];
    if (phi.rows() != fiber.dims[i] || phi.cols() != fiber.dims[i])
      throw structural_error("monodromy at degree " + std::to_string(i) +
                             " is not square of size " +
                             std::to_string(fiber.dims[i]));
    if (phi.domain() != fiber.domain || phi.rank() != 0)
      throw structural_error("monodromy at degree " + std::to_string(i) +
                             " lives in the wrong ring");
    LaurentPoly det = determinant(phi);
    if (det.is_zero() || !fiber.domain.is_unit(det.terms()[0].coeff))
      throw validation_error("monodromy at degree " + std::to_string(i) +
                             " is not invertible over " +
                             fiber.domain.to_string());
  }
  for (int i = 0; i < m; ++i) {
    if (!(monodromy[i + 1].multiply(fiber.boundaries[i]) ==
          fiber.boundaries[i].multiply(monodromy[i])))
      throw validation_error("monodromy does not commute with the boundary at degree " +
                             std::to_string(i + 1));
  }

  const Domain& S = fiber.domain;
  auto fd = [&](int i) { return (i >= 0 && i <= m) ? fiber.dims[i] : 0; };
  // Lift a constant of S to c * t^e in S[Z].
  auto lift = [&](const LaurentPoly& p, long e) {
    if (p.is_zero()) return LaurentPoly::zero(S, 1);
    return LaurentPoly::monomial(S, 1, Exponent{e}, p.terms()[0].coeff);
  };

  BasedChainComplex out;
  out.domain = S;
  out.gamma_rank = 1;
  for (int i = 0; i <= m + 1; ++i) out.dims.push_back(fd(i - 1) + fd(i));
  for (int i = 0; i <= m; ++i) {
    // Rows: D_i then D_{i+1}; columns: D_{i-1} then D_i.
    PolyMatrix a(S, 1, out.dims[i + 1], out.dims[i]);
    if (i >= 1) {
      const PolyMatrix& d = fiber.boundaries[i - 1];
      for (int r = 0; r < fd(i); ++r)
        for (int col = 0; col < fd(i - 1); ++col)
          a.set(r, col, -lift(d.at(r, col), 0));
    }
    const PolyMatrix& phi = monodromy[i];
    for (int r = 0; r < fd(i); ++r)
      for (int col = 0; col < fd(i); ++col) {
        LaurentPoly entry = -lift(phi.at(r, col), 1);  // -t*phi
        if (r == col) entry += LaurentPoly::constant(S, 1, 1);
        a.set(r, fd(i - 1) + col, std::move(entry));
      }
    if (i < m) {
      const PolyMatrix& d = fiber.boundaries[i];
      for (int r = 0; r < fd(i + 1); ++r)
        for (int col = 0; col < fd(i); ++col)
          a.set(fd(i) + r, fd(i - 1) + col, lift(d.at(r, col), 0));
    }
    out.boundaries.push_back(std::move(a));
  }
  if (auto defect = validate_complex(out))
    throw error("internal: mapping torus is not a complex: " + *defect);
  return out;
}

// ---------------------------------------------------------------------------
// Positivity.

PositivityVerdict verify_positive_vanishing(
    const BasedChainComplex& c,
    const std::vector<std::vector<std::int64_t>>& meridians,
    const EnumerationLimits& limits) {
  require_valid(c);
  if (meridians.empty())
    throw structural_error("at least one meridian is required");
  std::vector<HalfSpace> positive;
  for (const auto& mu : meridians) {
    if (static_cast<int>(mu.size()) != c.gamma_rank)
      throw structural_error("meridian rank mismatch");
    std::vector<mpz_class> form;
    form.reserve(mu.size());
    for (auto v : mu) form.emplace_back(static_cast<long>(v));
    positive.emplace_back(std::move(form), true);
  }
  IntegralSubset positive_cone =
      IntegralSubset::of(IntegralCone(c.gamma_rank, std::move(positive)));

  IntegralSubset alive = subset_complement(vanishing_set(c, limits));
  IntegralSubset bad = subset_intersect(positive_cone, alive);
  auto point = lattice_point(bad);
  if (!point) return {true, {}};

  // Double-check the witness along the independent chain-scanning route.
  Character xi = character_from_integers(*point);
  if (!contains_point(bad, xi))
    throw error("internal: witness fell outside its subset");
  if (TauChainOracle(c, limits).vanishes_at(xi))
    throw error("internal: witness disagreement between cone set and chain scan");
  return {false, *point};
}

}  // namespace novikov
