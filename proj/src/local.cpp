#include "liftcode/local.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liftcode {

namespace {

// Solve A x = rhs over the field elements appearing in A (Gaussian
// elimination, free variables set to zero). Returns false if inconsistent.
bool solve_linear(const FieldCtx& ctx, std::vector<std::vector<uint32_t>>& a,
                  std::vector<uint32_t>& rhs, std::vector<uint32_t>& x) {
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    const uint32_t d = ctx.inv(a[r][c]);
    for (size_t j = c; j < cols; ++j) a[r][j] = ctx.mul(a[r][j], d);
    rhs[r] = ctx.mul(rhs[r], d);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const uint32_t f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = ctx.sub(a[i][j], ctx.mul(f, a[r][j]));
      rhs[i] = ctx.sub(rhs[i], ctx.mul(f, rhs[r]));
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return false;
  x.assign(cols, 0);
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return true;
}

// Polynomial division n / e over F_Q; returns nullopt unless exact.
std::optional<std::vector<uint32_t>> poly_divide_exact(const FieldCtx& ctx,
                                                       std::vector<uint32_t> n,
                                                       const std::vector<uint32_t>& e) {
  while (!n.empty() && n.back() == 0) n.pop_back();
  std::vector<uint32_t> den = e;
  while (!den.empty() && den.back() == 0) den.pop_back();
  if (den.empty()) return std::nullopt;
  if (n.empty()) return std::vector<uint32_t>{};
  if (n.size() < den.size()) return std::nullopt;
  std::vector<uint32_t> quot(n.size() - den.size() + 1, 0);
  const uint32_t lead_inv = ctx.inv(den.back());
  for (size_t i = quot.size(); i-- > 0;) {
    const uint32_t c = ctx.mul(n[i + den.size() - 1], lead_inv);
    quot[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j)
      n[i + j] = ctx.sub(n[i + j], ctx.mul(c, den[j]));
  }
  for (uint32_t v : n)
    if (v != 0) return std::nullopt;
  return quot;
}

}  // namespace

uint32_t eval_poly_at(const FieldCtxPtr& ctx, const std::vector<uint32_t>& coeffs, uint32_t x) {
  uint32_t acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = ctx->add(ctx->mul(acc, x), coeffs[i]);
  return acc;
}

std::optional<std::vector<uint32_t>> rs_decode_points(const FieldCtxPtr& ctx,
                                                      const std::vector<uint32_t>& xs,
                                                      const std::vector<uint32_t>& ys,
                                                      uint32_t degree_bound, uint32_t max_errors) {
  if (xs.size() != ys.size()) throw UsageError("evaluation points and values length mismatch");
  const size_t npts = xs.size();
  const uint32_t e = max_errors;
  const uint32_t d = degree_bound;
  if (npts < static_cast<size_t>(d) + 1 + 2 * e)
    throw UsageError("not enough points for unique decoding at this radius");

  // Berlekamp-Welch: find E monic of degree e and N of degree <= e + d with
  // N(x) = y E(x) at every point. Unknowns: e coefficients of E (below the
  // monic leader) then e + d + 1 coefficients of N.
  const size_t unknowns = e + (e + d + 1);
  std::vector<std::vector<uint32_t>> a(npts, std::vector<uint32_t>(unknowns, 0));
  std::vector<uint32_t> rhs(npts, 0);
  for (size_t i = 0; i < npts; ++i) {
    const uint32_t x = xs[i];
    const uint32_t y = ys[i];
    uint32_t xp = 1;
    for (uint32_t j = 0; j < e; ++j) {
      a[i][j] = ctx->neg(ctx->mul(y, xp));  // -y x^j from E's unknown part
      xp = ctx->mul(xp, x);
    }
    rhs[i] = ctx->mul(y, xp);  // y x^e from the monic leader
    xp = 1;
    for (uint32_t j = 0; j <= e + d; ++j) {
      a[i][e + j] = xp;
      xp = ctx->mul(xp, x);
    }
  }
  std::vector<uint32_t> sol;
  if (!solve_linear(*ctx, a, rhs, sol)) return std::nullopt;

  std::vector<uint32_t> epoly(sol.begin(), sol.begin() + e);
  epoly.push_back(1);  // monic
  std::vector<uint32_t> npoly(sol.begin() + e, sol.end());

  auto g = poly_divide_exact(*ctx, npoly, epoly);
  if (!g.has_value()) return std::nullopt;
  if (g->size() > static_cast<size_t>(d) + 1) return std::nullopt;
  g->resize(d + 1, 0);

  // Agreement gate: never return a polynomial outside the stated radius.
  uint32_t disagreements = 0;
  for (size_t i = 0; i < npts; ++i)
    if (eval_poly_at(ctx, *g, xs[i]) != ys[i]) ++disagreements;
  if (disagreements > e) return std::nullopt;
  return g;
}

std::optional<std::vector<uint32_t>> rs_decode(const FieldCtxPtr& ctx,
                                               const std::vector<uint32_t>& values,
                                               uint32_t degree_bound) {
  const uint32_t Q = ctx->order();
  if (values.size() != Q) throw UsageError("received word must have length Q");
  if (degree_bound >= Q - 1) throw UsageError("degree bound must satisfy d <= Q-2");
  const uint32_t e = (Q - degree_bound - 1) / 2;
  std::vector<uint32_t> xs(Q);
  for (uint32_t i = 0; i < Q; ++i) xs[i] = i;
  return rs_decode_points(ctx, xs, values, degree_bound, e);
}

std::optional<uint32_t> correct_on_subspace(const Oracle& f, const AffineSubspace& V,
                                            const LiftedCode& code) {
  const auto& ctx = code.ctx();
  const BasisInfo& basis = code.base_basis();
  const size_t dim = basis.rows.size();
  auto idx = V.point_indices();  // parameter 0 maps to the base point
  // interpolation constraints at the Q^t - 1 off-base parameters
  std::vector<std::vector<uint32_t>> a(idx.size() - 1, std::vector<uint32_t>(dim, 0));
  std::vector<uint32_t> rhs(idx.size() - 1, 0);
  for (size_t u = 1; u < idx.size(); ++u) {
    for (size_t j = 0; j < dim; ++j) a[u - 1][j] = basis.rows[j][u];
    rhs[u - 1] = f.query(idx[u]);
  }
  std::vector<uint32_t> sol;
  if (!solve_linear(*ctx, a, rhs, sol)) return std::nullopt;
  uint32_t value = 0;
  for (size_t j = 0; j < dim; ++j)
    if (sol[j] != 0) value = ctx->add(value, ctx->mul(sol[j], basis.rows[j][0]));
  return value;
}

CorrectorReport correct_generic(const Oracle& f, const Point& x, const LiftedCode& code,
                                SplitRng& rng, int max_attempts) {
  const auto& ctx = code.ctx();
  const int t = code.t();
  const uint64_t per_attempt = domain_size(*ctx, t) - 1;

  CorrectorReport report;
  report.queries_per_attempt = per_attempt;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    ++report.attempts;
    AffineSubspace V = random_subspace_through(ctx, x, t, rng);
    auto value = correct_on_subspace(f, V, code);
    report.queries += per_attempt;
    if (!value.has_value()) continue;  // infeasible system: resample subspace
    report.ok = true;
    report.value = *value;
    return report;
  }
  return report;
}

CorrectorReport correct_rs_lifted(const Oracle& f, const Point& x, const LiftedCode& code,
                                  SplitRng& rng) {
  const auto& ctx = code.ctx();
  if (code.base().checker != CheckerKind::kMaxDegree)
    throw UsageError("line corrector requires a degree-bounded univariate base");
  const uint32_t Q = ctx->order();
  const uint32_t d = code.base().degree_bound;
  const int m = code.m();

  Point slope(m);
  for (auto& c : slope) c = static_cast<uint32_t>(rng.below(Q));

  // h(t) = f(x + t b) for every t; the t = 0 value is the untrusted symbol
  // itself and is excluded from decoding.
  CorrectorReport report;
  report.attempts = 1;
  std::vector<uint32_t> xs, ys;
  xs.reserve(Q - 1);
  ys.reserve(Q - 1);
  Point pt(m);
  for (uint32_t tval = 0; tval < Q; ++tval) {
    for (int j = 0; j < m; ++j) pt[j] = ctx->add(x[j], ctx->mul(tval, slope[j]));
    uint32_t v = f.query(pack_point(*ctx, pt));
    if (tval != 0) {
      xs.push_back(tval);
      ys.push_back(v);
    }
  }
  report.queries = Q;
  report.queries_per_attempt = Q;

  const uint32_t e = (Q - 2 - d) / 2;  // punctured-line unique radius
  auto g = rs_decode_points(ctx, xs, ys, d, e);
  if (!g.has_value()) return report;
  report.ok = true;
  report.value = (*g)[0];  // g(0)
  return report;
}

TestReport test_local(const Oracle& f, const LiftedCode& code, SplitRng& rng) {
  const auto& ctx = code.ctx();
  const int m = code.m();
  const int t = code.t();
  const uint32_t Q = ctx->order();

  Point base(m);
  for (auto& c : base) c = static_cast<uint32_t>(rng.below(Q));
  AffineSubspace V = random_subspace_through(ctx, base, t, rng);

  auto idx = V.point_indices();
  std::vector<uint32_t> vals(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) vals[i] = f.query(idx[i]);

  TestReport report;
  report.queries = idx.size();
  report.accept = code.base().contains_values(vals);
  return report;
}

std::vector<uint64_t> corrupt_table(FuncTable& f, uint64_t errors, SplitRng& rng) {
  const auto& ctx = *f.ctx();
  const auto& elems = ctx.subfield_elements(f.value_order());
  if (elems.size() < 2) throw UsageError("value field too small to corrupt");
  auto positions = rng.sample_distinct(f.size(), errors);
  for (uint64_t pos : positions) {
    uint32_t delta = elems[1 + rng.below(elems.size() - 1)];  // nonzero
    f.set(pos, ctx.add(f.at(pos), delta));
  }
  return positions;
}

const char* scenario_name(Scenario sc) {
  switch (sc) {
    case Scenario::kCorrectGeneric: return "correct_generic";
    case Scenario::kCorrectRs: return "correct_rs";
    case Scenario::kTestCodeword: return "test_codeword";
    case Scenario::kTestFlip: return "test_flip";
    case Scenario::kTestRandom: return "test_random";
  }
  return "unknown";
}

std::pair<double, double> wilson_ci(uint64_t successes, uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

// One trial; returns (success, per-attempt queries).
std::pair<bool, uint64_t> run_trial(const LiftedCode& code, Scenario sc, const McConfig& cfg,
                                    uint64_t trial) {
  SplitRng rng = SplitRng::for_stream(cfg.seed, trial);
  const auto& ctx = code.ctx();
  const uint64_t n = code.length();

  if (sc == Scenario::kTestRandom) {
    // arbitrary received word over the ambient field
    FuncTable f(ctx, code.m(), ctx->order());
    for (uint64_t i = 0; i < n; ++i) f.set(i, static_cast<uint32_t>(rng.below(ctx->order())));
    Oracle oracle(f);
    auto rep = test_local(oracle, code, rng);
    return {!rep.accept, rep.queries};
  }

  FuncTable codeword = code.encode(code.random_message(rng));

  switch (sc) {
    case Scenario::kTestCodeword: {
      Oracle oracle(codeword);
      auto rep = test_local(oracle, code, rng);
      return {rep.accept, rep.queries};
    }
    case Scenario::kTestFlip: {
      FuncTable corrupted = codeword;
      corrupt_table(corrupted, 1, rng);
      Oracle oracle(corrupted);
      auto rep = test_local(oracle, code, rng);
      return {!rep.accept, rep.queries};
    }
    case Scenario::kCorrectGeneric:
    case Scenario::kCorrectRs: {
      FuncTable corrupted = codeword;
      auto positions = corrupt_table(corrupted, cfg.errors, rng);
      uint64_t target_idx;
      if (cfg.target == TargetMode::kCorruptedPoint && !positions.empty()) {
        target_idx = positions[rng.below(positions.size())];
      } else {
        target_idx = rng.below(n);
      }
      Point target = unpack_point(*ctx, code.m(), target_idx);
      Oracle oracle(corrupted);
      CorrectorReport rep = sc == Scenario::kCorrectGeneric
                                ? correct_generic(oracle, target, code, rng)
                                : correct_rs_lifted(oracle, target, code, rng);
      bool success = rep.ok && rep.value == codeword.at(target_idx);
      return {success, rep.queries_per_attempt};
    }
    default:
      throw UsageError("unknown scenario");
  }
}

}  // namespace

McReport monte_carlo(const LiftedCode& code, Scenario sc, const McConfig& cfg) {
  McReport report;
  report.scenario = scenario_name(sc);
  report.trials = cfg.trials;
  report.seed = cfg.seed;
  report.errors = cfg.errors;
  if (cfg.trials == 0) return report;

  code.degree_set();  // materialize shared caches before the parallel region
  if (sc == Scenario::kCorrectGeneric) code.base_basis();

  uint64_t successes = 0;
  uint64_t queries_max = 0;
  const int64_t trials = static_cast<int64_t>(cfg.trials);
  if (cfg.exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : successes) \
    reduction(max : queries_max)
    for (int64_t i = 0; i < trials; ++i) {
      auto [ok, queries] = run_trial(code, sc, cfg, static_cast<uint64_t>(i));
      successes += ok ? 1 : 0;
      queries_max = std::max(queries_max, queries);
    }
  } else {
    for (int64_t i = 0; i < trials; ++i) {
      auto [ok, queries] = run_trial(code, sc, cfg, static_cast<uint64_t>(i));
      successes += ok ? 1 : 0;
      queries_max = std::max(queries_max, queries);
    }
  }
  report.successes = successes;
  report.frequency = static_cast<double>(successes) / static_cast<double>(cfg.trials);
  auto [lo, hi] = wilson_ci(successes, cfg.trials);
  report.ci_lo = lo;
  report.ci_hi = hi;
  report.queries_max = queries_max;
  return report;
}

}  // namespace liftcode
