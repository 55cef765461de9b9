#include "liftcode/analysis.hpp"

#include <algorithm>
#include <array>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liftcode {

namespace {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

uint64_t checked_pow(uint64_t base, uint64_t exp, uint64_t limit) {
  // returns min(base^exp, limit+1) without overflow
  uint64_t r = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (r > limit / base + 1) return limit + 1;
    r *= base;
    if (r > limit) return limit + 1;
  }
  return r;
}

// Packed-bit minimum weight over all nonzero F_2-combinations of the rows,
// by Gray-code enumeration. If `pair_with_ones` the all-ones function is in
// the code but excluded from `rows`; each state then also accounts for its
// complement, halving the enumeration.
uint64_t min_weight_gray_f2(const std::vector<std::vector<uint64_t>>& rows, uint64_t length,
                            bool pair_with_ones, Exec exec) {
  const size_t k = rows.size();
  const size_t words = rows.empty() ? 0 : rows[0].size();
  const uint64_t total = 1ull << k;
  uint64_t best = length;  // weight of the all-ones codeword when paired

  int nchunks = exec == Exec::kParallel ? max_threads() : 1;
  if (static_cast<uint64_t>(nchunks) > total) nchunks = 1;
  std::vector<uint64_t> chunk_best(nchunks, best);

#pragma omp parallel for schedule(static) num_threads(nchunks) if (nchunks > 1)
  for (int chunk = 0; chunk < nchunks; ++chunk) {
    const uint64_t a = total / nchunks * chunk;
    const uint64_t b = chunk + 1 == nchunks ? total : total / nchunks * (chunk + 1);
    uint64_t local = length;

    if (words == 1) {
      // whole codeword in one machine word
      uint64_t cw = 0;
      const uint64_t ga = a ^ (a >> 1);
      for (size_t j = 0; j < k; ++j)
        if (ga >> j & 1) cw ^= rows[j][0];
      if (a != 0) {
        uint64_t w = static_cast<uint64_t>(__builtin_popcountll(cw));
        if (pair_with_ones) w = std::min(w, length - w);
        local = std::min(local, w);
      }
      std::array<uint64_t, 64> flat{};
      for (size_t j = 0; j < k; ++j) flat[j] = rows[j][0];
      const uint64_t* row0 = flat.data();
      if (pair_with_ones) {
        for (uint64_t i = a + 1; i < b; ++i) {
          cw ^= row0[__builtin_ctzll(i)];
          uint64_t w = static_cast<uint64_t>(__builtin_popcountll(cw));
          uint64_t wc = length - w;
          w = w < wc ? w : wc;
          local = w < local ? w : local;
        }
      } else {
        for (uint64_t i = a + 1; i < b; ++i) {
          cw ^= row0[__builtin_ctzll(i)];
          uint64_t w = static_cast<uint64_t>(__builtin_popcountll(cw));
          local = w < local ? w : local;
        }
      }
    } else {
      std::vector<uint64_t> cw(words, 0);
      const uint64_t ga = a ^ (a >> 1);
      for (size_t j = 0; j < k; ++j)
        if (ga >> j & 1)
          for (size_t t = 0; t < words; ++t) cw[t] ^= rows[j][t];
      auto weight = [&]() {
        uint64_t w = 0;
        for (uint64_t word : cw) w += static_cast<uint64_t>(__builtin_popcountll(word));
        return w;
      };
      if (a != 0) {
        uint64_t w = weight();
        if (pair_with_ones) w = std::min(w, length - w);
        local = std::min(local, w);
      }
      for (uint64_t i = a + 1; i < b; ++i) {
        const auto& row = rows[__builtin_ctzll(i)];
        for (size_t t = 0; t < words; ++t) cw[t] ^= row[t];
        uint64_t w = weight();
        if (pair_with_ones) w = std::min(w, length - w);
        if (w < local) local = w;
      }
    }
    chunk_best[chunk] = local;
  }
  for (uint64_t w : chunk_best) best = std::min(best, w);
  return best;
}

// Generic odometer enumeration for value fields larger than F_2. Kept
// simple; callers keep these instances small.
uint64_t min_weight_odometer(const FieldCtx& ctx, const std::vector<std::vector<uint32_t>>& rows,
                             uint32_t value_order) {
  const size_t k = rows.size();
  const uint64_t n = rows.empty() ? 0 : rows[0].size();
  const auto& elems = ctx.subfield_elements(value_order);
  const uint32_t q = static_cast<uint32_t>(elems.size());

  // scaled rows for the digit steps: v -> v+1 and q-1 -> 0
  std::vector<std::vector<std::vector<uint32_t>>> scaled(k);
  std::vector<uint32_t> deltas(q);
  for (uint32_t v = 0; v + 1 < q; ++v) deltas[v] = ctx.sub(elems[v + 1], elems[v]);
  deltas[q - 1] = ctx.sub(elems[0], elems[q - 1]);
  for (size_t r = 0; r < k; ++r) {
    scaled[r].resize(q);
    for (uint32_t v = 0; v < q; ++v) {
      scaled[r][v].resize(n);
      for (uint64_t i = 0; i < n; ++i) scaled[r][v][i] = ctx.mul(deltas[v], rows[r][i]);
    }
  }

  std::vector<uint32_t> digits(k, 0);
  std::vector<uint32_t> cw(n, 0);
  int64_t weight = 0;
  uint64_t best = UINT64_MAX;
  auto apply = [&](const std::vector<uint32_t>& srow) {
    for (uint64_t i = 0; i < n; ++i) {
      if (srow[i] == 0) continue;
      uint32_t old = cw[i];
      uint32_t nw = ctx.add(old, srow[i]);
      cw[i] = nw;
      weight += (nw != 0) - (old != 0);
    }
  };
  for (;;) {
    int pos = static_cast<int>(k) - 1;
    for (;;) {
      apply(scaled[pos][digits[pos]]);
      if (++digits[pos] < q) break;
      digits[pos] = 0;
      if (--pos < 0) return best;  // odometer wrapped; enumeration complete
    }
    best = std::min<uint64_t>(best, static_cast<uint64_t>(weight));
  }
}

MinDistanceResult min_distance_core(const FieldCtxPtr& ctx, const DegreeSet& D,
                                    uint32_t value_order, uint64_t enum_limit, Exec exec) {
  MinDistanceResult res;
  BasisInfo basis = code_basis_tables(ctx, D, value_order);
  const size_t dim = basis.rows.size();
  res.dim = dim;
  res.length = domain_size(*ctx, D.m());
  if (dim == 0) {
    res.trivial = true;
    res.delta = make_rational(0, 1);
    return res;
  }
  const auto& elems = ctx->subfield_elements(value_order);
  const uint64_t q = elems.size();
  const uint64_t messages = checked_pow(q, dim, enum_limit);
  if (messages > enum_limit)
    throw GuardError(
        "codeword enumeration would exceed the guard (" + std::to_string(enum_limit) +
            " messages); raise the limit explicitly or use the Monte-Carlo estimator",
        enum_limit, messages);
  res.messages_enumerated = messages - 1;

  uint64_t best;
  if (value_order == 2) {
    // pair states with their complements when the constant function is in
    // the code (its basis row is the all-ones table, orbit rep 0)
    bool pair_with_ones = !basis.rows.empty() && basis.row_orbit_rep[0] == 0;
    std::vector<std::vector<uint64_t>> packed;
    const size_t words = (res.length + 63) / 64;
    for (size_t r = pair_with_ones ? 1 : 0; r < dim; ++r) {
      std::vector<uint64_t> row(words, 0);
      for (uint64_t i = 0; i < res.length; ++i)
        if (basis.rows[r][i] != 0) row[i / 64] |= 1ull << (i % 64);
      packed.push_back(std::move(row));
    }
    if (packed.empty()) {
      best = res.length;  // constants only
    } else {
      best = min_weight_gray_f2(packed, res.length, pair_with_ones, exec);
    }
  } else {
    best = min_weight_odometer(*ctx, basis.rows, value_order);
  }
  res.min_weight = best;
  res.delta = make_rational(static_cast<int64_t>(best), static_cast<int64_t>(res.length));
  return res;
}

}  // namespace

MinDistanceResult min_distance_exhaustive(const FieldCtxPtr& ctx, const DegreeSet& D,
                                          uint32_t value_order, uint64_t enum_limit, Exec exec) {
  return min_distance_core(ctx, D, value_order, enum_limit, exec);
}

MinDistanceResult min_distance_exhaustive(const BaseCode& base, uint64_t enum_limit, Exec exec) {
  return min_distance_core(base.ctx, base.degrees, base.value_order, enum_limit, exec);
}

MinDistanceResult min_distance_exhaustive(const LiftedCode& code, uint64_t enum_limit, Exec exec) {
  return min_distance_core(code.ctx(), code.degree_set(), code.value_order(), enum_limit, exec);
}

DistanceCheck verify_distance_theorem(const BaseCode& base, int m, uint64_t enum_limit,
                                      Exec exec) {
  DistanceCheck check;
  for (uint64_t d : base.degrees.packed_list())
    check.base_degrees.push_back(static_cast<uint32_t>(d));

  const uint32_t Q = base.ctx->order();
  auto base_res = min_distance_exhaustive(base, enum_limit, exec);
  LiftedCode lifted(base, m);
  auto lift_res = min_distance_exhaustive(lifted, enum_limit, exec);

  check.base_dim = base_res.dim;
  check.lift_dim = lift_res.dim;
  check.delta_base = base_res.delta;
  check.delta_lift = lift_res.delta;
  if (base_res.trivial || lift_res.trivial) {
    check.degenerate = true;
    return check;
  }

  const __int128 wF = base_res.min_weight;
  const __int128 NF = base_res.length;  // Q^t
  const __int128 wL = lift_res.min_weight;
  const __int128 NL = lift_res.length;  // Q^m

  // delta(L) <= delta(F)
  check.part1_ok = wL * NF <= wF * NL;
  // delta(L) >= delta(F) - Q^-t
  check.part2_ok = wL * NF >= (wF - 1) * NL;
  // delta(L) > delta(F) - (1-delta(F))/(Q^t-1); the underlying averaging
  // step is an equality exactly when delta(F) = 1 (constants-like codes),
  // where both sides equal 1.
  if (wF == NF) {
    check.general_lower_ok = wL == NL;
  } else {
    check.general_lower_ok = wL * (NF - 1) > (wF - 1) * NL;
  }
  // domain fields F_2, F_3: nontrivial distance is preserved
  check.small_field_applicable = (Q == 2 || Q == 3) && wF > 1;
  if (check.small_field_applicable) check.small_field_ok = wL * NF >= wF * NL;
  // proper affine-invariant codes have at least two nonzero points per
  // nonzero codeword
  bool base_proper = base_res.dim < static_cast<size_t>(base_res.length);
  bool lift_proper = lift_res.dim < static_cast<size_t>(lift_res.length);
  check.distance_simple_ok =
      (!base_proper || base_res.min_weight >= 2) && (!lift_proper || lift_res.min_weight >= 2);
  return check;
}

std::vector<std::vector<uint32_t>> valid_univariate_degree_sets(const FieldCtxPtr& ctx) {
  const uint32_t Q = ctx->order();
  const uint32_t q = ctx->q();
  const uint32_t p = ctx->p();

  DegreeSet all = DegreeSet::full(Q, q, 1);
  auto orbits = all.orbit_decomposition();
  const size_t norb = orbits.size();
  std::vector<std::vector<uint32_t>> out;
  for (uint64_t pick = 1; pick + 1 < (1ull << norb); ++pick) {  // skip empty and full
    DegreeSet D(Q, q, 1);
    for (size_t i = 0; i < norb; ++i)
      if (pick >> i & 1)
        for (uint64_t mem : orbits[i].members) D.insert(mem);
    if (!D.p_shadow_closed(p)) continue;
    std::vector<uint32_t> degs;
    for (uint64_t d : D.packed_list()) degs.push_back(static_cast<uint32_t>(d));
    out.push_back(std::move(degs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DistanceCheck> distance_sweep(const FieldCtxPtr& ctx, int m, uint64_t enum_limit,
                                          Exec exec) {
  std::vector<DistanceCheck> checks;
  for (const auto& degs : valid_univariate_degree_sets(ctx)) {
    BaseCode base{ctx, 1, ctx->q(), DegreeSet::of_scalars(ctx->order(), ctx->q(), degs),
                  CheckerKind::kNone, 0};
    checks.push_back(verify_distance_theorem(base, m, enum_limit, exec));
  }
  return checks;
}

OracleReport oracle_equivalence_exhaustive(const LiftedCode& code, uint64_t guard, Exec exec) {
  OracleReport report;
  const auto& ctx = code.ctx();
  const uint64_t n = code.length();
  const auto& elems = ctx->subfield_elements(code.value_order());
  const uint64_t q = elems.size();
  const uint64_t total = checked_pow(q, n, guard);
  if (total > guard)
    throw GuardError("function-space enumeration exceeds the guard; use sampled mode", guard,
                     total);
  report.functions_checked = total;

  code.degree_set();
  code.subspace_point_indices();

  uint64_t by_restriction = 0, by_degrees = 0;
  int64_t first_mismatch = -1;

  const int64_t count = static_cast<int64_t>(total);
#pragma omp parallel if (exec == Exec::kParallel)
  {
    uint64_t local_r = 0, local_d = 0;
    int64_t local_mismatch = -1;
    FuncTable f(ctx, code.m(), code.value_order());
#pragma omp for schedule(dynamic, 1024) nowait
    for (int64_t fi = 0; fi < count; ++fi) {
      uint64_t rest = static_cast<uint64_t>(fi);
      for (uint64_t i = 0; i < n; ++i) {
        f.set(i, elems[rest % q]);
        rest /= q;
      }
      const bool r = code.member_by_restriction(f);
      const bool d = code.member_by_degrees(f);
      local_r += r;
      local_d += d;
      if (r != d && (local_mismatch < 0 || fi < local_mismatch)) local_mismatch = fi;
    }
#pragma omp critical
    {
      by_restriction += local_r;
      by_degrees += local_d;
      if (local_mismatch >= 0 && (first_mismatch < 0 || local_mismatch < first_mismatch))
        first_mismatch = local_mismatch;
    }
  }
  report.members_by_restriction = by_restriction;
  report.members_by_degrees = by_degrees;
  report.first_mismatch = first_mismatch;
  report.equal = first_mismatch < 0;
  return report;
}

OracleReport oracle_equivalence_sampled(const LiftedCode& code, uint64_t member_samples,
                                        uint64_t random_samples, uint64_t seed) {
  OracleReport report;
  const auto& ctx = code.ctx();
  const uint64_t n = code.length();
  const auto& elems = ctx->subfield_elements(code.value_order());
  SplitRng rng(seed);

  for (uint64_t i = 0; i < member_samples; ++i) {
    FuncTable f = code.encode(code.random_message(rng));
    const bool r = code.member_by_restriction(f);
    const bool d = code.member_by_degrees(f);
    ++report.functions_checked;
    report.members_by_restriction += r;
    report.members_by_degrees += d;
    if (r != d || !r) {
      report.equal = false;
      if (report.first_mismatch < 0) report.first_mismatch = static_cast<int64_t>(i);
    }
  }
  for (uint64_t i = 0; i < random_samples; ++i) {
    FuncTable f(ctx, code.m(), code.value_order());
    for (uint64_t j = 0; j < n; ++j)
      f.set(j, elems[rng.below(elems.size())]);
    const bool r = code.member_by_restriction(f);
    const bool d = code.member_by_degrees(f);
    ++report.functions_checked;
    report.members_by_restriction += r;
    report.members_by_degrees += d;
    if (r != d) {
      report.equal = false;
      if (report.first_mismatch < 0)
        report.first_mismatch = static_cast<int64_t>(member_samples + i);
    }
  }
  return report;
}

AffineClosureReport verify_affine_closure(const LiftedCode& code, uint64_t guard, Exec exec) {
  AffineClosureReport report;
  const auto& ctx = code.ctx();
  const int m = code.m();
  const uint32_t Q = ctx->order();
  const uint64_t n = code.length();

  const auto& elems = ctx->subfield_elements(code.value_order());
  const uint64_t q = elems.size();
  const uint64_t codewords = checked_pow(q, code.dimension(), guard);
  if (codewords > guard || codewords * n > (1ull << 26))
    throw GuardError("affine closure scan exceeds the guard", guard, codewords);
  const uint64_t total_maps = checked_pow(Q, static_cast<uint64_t>(m) * m + m, guard);
  if (total_maps > guard)
    throw GuardError("affine map enumeration exceeds the guard", guard, total_maps);

  // materialize every codeword once
  BasisInfo basis = code_basis_tables(ctx, code.degree_set(), code.value_order());
  const size_t dim = basis.rows.size();
  std::vector<std::vector<uint32_t>> words;
  words.reserve(codewords);
  {
    std::vector<uint32_t> digits(dim, 0);
    std::vector<uint32_t> cw(n, 0);
    words.push_back(cw);
    for (uint64_t msg = 1; msg < codewords; ++msg) {
      size_t pos = dim;
      while (pos-- > 0) {
        // advance digit, rebuild incremental sum
        if (++digits[pos] < q) break;
        digits[pos] = 0;
      }
      for (uint64_t i = 0; i < n; ++i) {
        uint32_t acc = 0;
        for (size_t r = 0; r < dim; ++r)
          if (digits[r] != 0 && basis.rows[r][i] != 0)
            acc = ctx->add(acc, ctx->mul(elems[digits[r]], basis.rows[r][i]));
        cw[i] = acc;
      }
      words.push_back(cw);
    }
  }
  report.codewords = codewords;
  report.maps_checked = total_maps;
  const auto& D = code.degree_set();

  uint64_t violations = 0;
  const int64_t map_count = static_cast<int64_t>(total_maps);
#pragma omp parallel if (exec == Exec::kParallel) reduction(+ : violations)
  {
    std::vector<uint32_t> sigma(n);
    FuncTable composed(ctx, m, code.value_order());
#pragma omp for schedule(dynamic, 16)
    for (int64_t mi = 0; mi < map_count; ++mi) {
      // decode the map: m*m matrix digits then m translation digits
      uint64_t rest = static_cast<uint64_t>(mi);
      std::vector<uint32_t> mat(static_cast<size_t>(m) * m);
      Point trans(m);
      for (auto& v : mat) {
        v = static_cast<uint32_t>(rest % Q);
        rest /= Q;
      }
      for (auto& v : trans) {
        v = static_cast<uint32_t>(rest % Q);
        rest /= Q;
      }
      AffineMap A(ctx, m, mat, trans);
      for (uint64_t x = 0; x < n; ++x)
        sigma[x] = static_cast<uint32_t>(pack_point(*ctx, A.apply(unpack_point(*ctx, m, x))));
      for (const auto& cw : words) {
        for (uint64_t x = 0; x < n; ++x) composed.set(x, cw[sigma[x]]);
        auto coeffs = coefficients_dense(composed);
        for (uint64_t d = 0; d < coeffs.size(); ++d) {
          if (coeffs[d] != 0 && !D.contains(d)) {
            ++violations;
            break;
          }
        }
      }
    }
  }
  report.violations = violations;
  return report;
}

// ---------------------------------------------------------------------------
// Nikodym sets
// ---------------------------------------------------------------------------

namespace {

FieldCtxPtr ctx_for_order(uint32_t q) {
  for (uint32_t p : {2u, 3u, 5u}) {
    if (q % p == 0) {
      int s = 0;
      uint32_t v = 1;
      while (v < q) {
        v *= p;
        ++s;
      }
      if (v != q) break;
      return field_ctx(p, s, 1);
    }
  }
  throw UsageError("unsupported field order " + std::to_string(q));
}

// One representative per projective direction (first nonzero coordinate 1).
std::vector<Point> projective_directions(const FieldCtx& ctx, int m) {
  std::vector<Point> dirs;
  const uint64_t n = domain_size(ctx, m);
  for (uint64_t i = 1; i < n; ++i) {
    Point y = unpack_point(ctx, m, i);
    int lead = 0;
    while (y[lead] == 0) ++lead;
    if (y[lead] == 1) dirs.push_back(std::move(y));
  }
  return dirs;
}

bool nikodym_with_dirs(const FieldCtx& ctx, const PointSet& S, const std::vector<Point>& dirs) {
  const uint64_t n = domain_size(ctx, S.m);
  const uint32_t q = ctx.order();
  for (uint64_t xi = 0; xi < n; ++xi) {
    Point x = unpack_point(ctx, S.m, xi);
    bool covered = false;
    for (const auto& y : dirs) {
      bool all_in = true;
      for (uint32_t t = 1; t < q && all_in; ++t) {
        uint64_t idx = 0;
        for (int j = 0; j < S.m; ++j) idx = idx * q + ctx.add(x[j], ctx.mul(t, y[j]));
        all_in = S.contains(idx);
      }
      if (all_in) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

PointSet PointSet::empty(uint32_t q, int m) {
  PointSet S;
  S.q = q;
  S.m = m;
  uint64_t n = 1;
  for (int i = 0; i < m; ++i) n *= q;
  S.mask.assign(n, 0);
  return S;
}

PointSet PointSet::full(uint32_t q, int m) {
  PointSet S = empty(q, m);
  std::fill(S.mask.begin(), S.mask.end(), 1);
  S.count = S.mask.size();
  return S;
}

PointSet PointSet::of_points(uint32_t q, int m, const std::vector<uint64_t>& points) {
  PointSet S = empty(q, m);
  for (uint64_t p : points) S.insert(p);
  return S;
}

void PointSet::insert(uint64_t packed) {
  if (packed >= mask.size()) throw UsageError("point out of range");
  if (!mask[packed]) {
    mask[packed] = 1;
    ++count;
  }
}

void PointSet::erase(uint64_t packed) {
  if (packed >= mask.size()) throw UsageError("point out of range");
  if (mask[packed]) {
    mask[packed] = 0;
    --count;
  }
}

std::vector<uint64_t> PointSet::points() const {
  std::vector<uint64_t> out;
  for (uint64_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

bool is_nikodym(const PointSet& S) {
  auto ctx = ctx_for_order(S.q);
  return nikodym_with_dirs(*ctx, S, projective_directions(*ctx, S.m));
}

bool is_nikodym_reference(const PointSet& S) {
  auto ctx = ctx_for_order(S.q);
  // all nonzero directions, no projective dedup
  std::vector<Point> dirs;
  const uint64_t n = domain_size(*ctx, S.m);
  for (uint64_t i = 1; i < n; ++i) dirs.push_back(unpack_point(*ctx, S.m, i));
  return nikodym_with_dirs(*ctx, S, dirs);
}

uint64_t nikodym_lower_bound(uint32_t q, int m) {
  auto ctx = ctx_for_order(q);
  std::vector<uint32_t> degs(q - 1);
  for (uint32_t i = 0; i + 1 < q; ++i) degs[i] = i;
  DegreeSet D = DegreeSet::of_scalars(q, q, degs);
  return dimension(lift_degree_set_univariate(D, m));
}

NikodymScanResult nikodym_scan_subsets(uint32_t q, int m, int subset_size, Exec exec) {
  NikodymScanResult res;
  auto ctx = ctx_for_order(q);
  const uint64_t n = domain_size(*ctx, m);
  auto dirs = projective_directions(*ctx, m);

  uint64_t checked = 0, found = 0;
  const int64_t first_max = static_cast<int64_t>(n) - subset_size + 1;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::kParallel) \
    reduction(+ : checked, found)
  for (int64_t first = 0; first < first_max; ++first) {
    std::vector<uint64_t> comb(subset_size);
    comb[0] = static_cast<uint64_t>(first);
    // initialize remaining positions to the smallest combination
    for (int i = 1; i < subset_size; ++i) comb[i] = comb[0] + i;
    PointSet S = PointSet::empty(q, m);
    for (uint64_t c : comb) S.insert(c);
    for (;;) {
      ++checked;
      if (nikodym_with_dirs(*ctx, S, dirs)) ++found;
      // next combination with comb[0] fixed
      int i = subset_size - 1;
      while (i >= 1 && comb[i] == n - subset_size + i) --i;
      if (i < 1) break;
      S.erase(comb[i]);
      ++comb[i];
      S.insert(comb[i]);
      for (int j = i + 1; j < subset_size; ++j) {
        S.erase(comb[j]);
        comb[j] = comb[i] + (j - i);
        S.insert(comb[j]);
      }
    }
  }
  res.subsets_checked = checked;
  res.nikodym_found = found;
  return res;
}

PointSet greedy_minimal_nikodym(uint32_t q, int m) {
  auto ctx = ctx_for_order(q);
  auto dirs = projective_directions(*ctx, m);
  PointSet S = PointSet::full(q, m);
  for (uint64_t i = 0; i < S.mask.size(); ++i) {
    S.erase(i);
    if (!nikodym_with_dirs(*ctx, S, dirs)) S.insert(i);
  }
  return S;
}

}  // namespace liftcode
