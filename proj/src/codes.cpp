#include "liftcode/codes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

namespace liftcode {

bool BaseCode::contains_values(const std::vector<uint32_t>& values) const {
  for (uint32_t v : values)
    if (!ctx->is_in_subfield(v, value_order)) return false;
  auto coeffs = coefficients_dense(FuncTable(ctx, t, ctx->order(), values));
  for (uint64_t d = 0; d < coeffs.size(); ++d)
    if (coeffs[d] != 0 && !degrees.contains(d)) return false;
  return true;
}

bool BaseCode::contains(const FuncTable& f) const {
  if (f.ctx().get() != ctx.get() || f.m() != t) throw UsageError("domain shape mismatch");
  return contains_values(f.values());
}

bool BaseCode::direct_check_values(const std::vector<uint32_t>& values) const {
  switch (checker) {
    case CheckerKind::kSumZero: {
      uint32_t acc = 0;
      for (uint32_t v : values) acc = ctx->add(acc, v);
      return acc == 0;
    }
    case CheckerKind::kMaxDegree: {
      auto coeffs = coefficients_dense(FuncTable(ctx, t, ctx->order(), values));
      for (uint64_t d = degree_bound + 1; d < coeffs.size(); ++d)
        if (coeffs[d] != 0) return false;
      return true;
    }
    case CheckerKind::kNone:
    default:
      throw UsageError("base code has no direct checker");
  }
}

bool BaseCode::direct_check(const FuncTable& f) const { return direct_check_values(f.values()); }

BaseCode base_parity_univariate(FieldCtxPtr ctx) {
  const uint32_t Q = ctx->order();
  const uint32_t q = ctx->q();
  std::vector<uint32_t> degs(Q - 1);
  std::iota(degs.begin(), degs.end(), 0);
  BaseCode code{std::move(ctx), 1, q, DegreeSet::of_scalars(Q, q, degs), CheckerKind::kSumZero, 0};
  return code;
}

BaseCode base_parity_multivariate(FieldCtxPtr ctx, int t) {
  if (t < 1) throw UsageError("base arity must be positive");
  const uint32_t Q = ctx->order();
  const uint32_t q = ctx->q();
  DegreeSet D = DegreeSet::full(Q, q, t);
  // remove only the all-(Q-1) corner
  DegreeSet out(Q, q, t);
  uint64_t corner = 0;
  for (int i = 0; i < t; ++i) corner = corner * Q + (Q - 1);
  for (uint64_t d = 0; d < D.domain(); ++d)
    if (d != corner) out.insert(d);
  BaseCode code{std::move(ctx), t, q, std::move(out), CheckerKind::kSumZero, 0};
  return code;
}

BaseCode base_reed_solomon(FieldCtxPtr ctx, uint32_t d) {
  const uint32_t Q = ctx->order();
  if (d >= Q - 1) throw UsageError("Reed-Solomon degree bound must satisfy d <= Q-2");
  std::vector<uint32_t> degs(d + 1);
  std::iota(degs.begin(), degs.end(), 0);
  BaseCode code{std::move(ctx), 1, Q, DegreeSet::of_scalars(Q, Q, degs), CheckerKind::kMaxDegree, d};
  return code;
}

BasisInfo code_basis_tables(const FieldCtxPtr& ctx, const DegreeSet& D, uint32_t value_order) {
  BasisInfo out;
  const uint32_t Q = ctx->order();
  const int arity = D.m();
  const uint64_t n = domain_size(*ctx, arity);
  for (const auto& orbit : D.orbit_decomposition()) {
    uint64_t subfield = 1;
    for (int i = 0; i < orbit.size; ++i) subfield *= value_order;
    const uint32_t qb = static_cast<uint32_t>(subfield);
    // gamma generates F_{q^b}; its powers 1, gamma, ..., gamma^(b-1) form an
    // F_q-basis of the coefficient subfield.
    const uint32_t gamma =
        qb == Q ? ctx->primitive_element() : ctx->pow(ctx->primitive_element(), (Q - 1) / (qb - 1));
    DegreeVec d = D.unpack(orbit.rep);
    uint32_t coeff = 1;
    for (int j = 0; j < orbit.size; ++j) {
      std::vector<uint32_t> row(n);
      for (uint64_t x = 0; x < n; ++x) {
        Point pt = unpack_point(*ctx, arity, x);
        uint32_t mono = coeff;
        for (int i = 0; i < arity && mono != 0; ++i) mono = ctx->mul(mono, ctx->pow(pt[i], d[i]));
        row[x] = ctx->trace_to(mono, value_order);
      }
      out.rows.push_back(std::move(row));
      out.row_orbit_rep.push_back(orbit.rep);
      coeff = ctx->mul(coeff, gamma);
    }
  }
  return out;
}

struct LiftedCode::Cache {
  std::once_flag deg_once;
  std::optional<DegreeSet> degrees;
  std::vector<OrbitInfo> orbits;

  std::once_flag sub_once;
  std::vector<AffineSubspace> subspaces;
  std::vector<std::vector<uint64_t>> subspace_indices;

  std::once_flag basis_once;
  BasisInfo base_basis;
};

LiftedCode::LiftedCode(BaseCode base, int m)
    : base_(std::move(base)), m_(m), cache_(std::make_shared<Cache>()) {
  if (m_ < base_.t) throw UsageError("lift dimension must be at least the base arity");
}

uint64_t LiftedCode::length() const { return domain_size(*ctx(), m_); }

const DegreeSet& LiftedCode::degree_set() const {
  std::call_once(cache_->deg_once, [this] {
    DegreeSet lifted = base_.t == 1 ? lift_degree_set_univariate(base_.degrees, m_)
                                    : lift_degree_set_multivariate(base_.degrees, m_);
    cache_->orbits.clear();
    for (const auto& orbit : lifted.orbit_decomposition()) {
      uint64_t qb = 1;
      for (int i = 0; i < orbit.size; ++i) qb *= base_.value_order;
      cache_->orbits.push_back({orbit.rep, orbit.size, static_cast<uint32_t>(qb)});
    }
    cache_->degrees = std::move(lifted);
  });
  return *cache_->degrees;
}

const std::vector<LiftedCode::OrbitInfo>& LiftedCode::orbits() const {
  degree_set();
  return cache_->orbits;
}

const std::vector<AffineSubspace>& LiftedCode::subspaces() const {
  std::call_once(cache_->sub_once, [this] {
    cache_->subspaces = all_affine_subspaces(ctx(), m_, base_.t);
    cache_->subspace_indices.reserve(cache_->subspaces.size());
    for (const auto& V : cache_->subspaces)
      cache_->subspace_indices.push_back(V.point_indices());
  });
  return cache_->subspaces;
}

const std::vector<std::vector<uint64_t>>& LiftedCode::subspace_point_indices() const {
  subspaces();
  return cache_->subspace_indices;
}

const BasisInfo& LiftedCode::base_basis() const {
  std::call_once(cache_->basis_once, [this] {
    cache_->base_basis = code_basis_tables(ctx(), base_.degrees, base_.value_order);
  });
  return cache_->base_basis;
}

bool LiftedCode::member_by_degrees(const FuncTable& f) const {
  if (f.ctx().get() != ctx().get() || f.m() != m_) throw UsageError("domain shape mismatch");
  for (uint32_t v : f.values())
    if (!ctx()->is_in_subfield(v, base_.value_order)) return false;
  const auto& D = degree_set();
  auto coeffs = coefficients_dense(f);
  for (uint64_t d = 0; d < coeffs.size(); ++d)
    if (coeffs[d] != 0 && !D.contains(d)) return false;
  return true;
}

bool LiftedCode::member_by_restriction(const FuncTable& f) const {
  if (f.ctx().get() != ctx().get() || f.m() != m_) throw UsageError("domain shape mismatch");
  const auto& indices = subspace_point_indices();
  std::vector<uint32_t> vals;
  for (const auto& idx : indices) {
    vals.clear();
    vals.reserve(idx.size());
    for (uint64_t i : idx) vals.push_back(f.at(i));
    if (!base_.contains_values(vals)) return false;
  }
  return true;
}

FuncTable LiftedCode::encode(const std::vector<uint32_t>& orbit_coeffs) const {
  const auto& orbs = orbits();
  if (orbit_coeffs.size() != orbs.size())
    throw UsageError("message must supply one coefficient per orbit");
  for (size_t i = 0; i < orbs.size(); ++i)
    if (!ctx()->is_in_subfield(orbit_coeffs[i], orbs[i].coeff_field_order))
      throw UsageError("coefficient outside its orbit subfield");

  const auto& D = degree_set();
  FuncTable f(ctx(), m_, base_.value_order);
  const uint64_t n = f.size();
  for (uint64_t x = 0; x < n; ++x) {
    Point pt = unpack_point(*ctx(), m_, x);
    uint32_t acc = 0;
    for (size_t i = 0; i < orbs.size(); ++i) {
      if (orbit_coeffs[i] == 0) continue;
      DegreeVec d = D.unpack(orbs[i].rep);
      uint32_t mono = orbit_coeffs[i];
      for (int j = 0; j < m_ && mono != 0; ++j) mono = ctx()->mul(mono, ctx()->pow(pt[j], d[j]));
      // the value c * x^d lies in the orbit's coefficient subfield
      acc = ctx()->add(acc, ctx()->trace_to(mono, base_.value_order));
    }
    f.set(x, acc);
  }
  return f;
}

std::vector<uint32_t> LiftedCode::random_message(SplitRng& rng) const {
  const auto& orbs = orbits();
  std::vector<uint32_t> msg(orbs.size());
  for (size_t i = 0; i < orbs.size(); ++i) {
    const auto& elems = ctx()->subfield_elements(orbs[i].coeff_field_order);
    msg[i] = elems[rng.below(elems.size())];
  }
  return msg;
}

bool member(const FuncTable& f, const LiftedCode& code, MemberMode mode) {
  return mode == MemberMode::kByDegrees ? code.member_by_degrees(f)
                                        : code.member_by_restriction(f);
}

Rational make_rational(int64_t num, int64_t den) {
  if (den == 0) throw UsageError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

int rational_cmp(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

namespace {

int ceil_log2(uint64_t v) {
  int l = 0;
  uint64_t x = 1;
  while (x < v) {
    x <<= 1;
    ++l;
  }
  return l;
}

int ceil_log_base(uint64_t v, uint32_t base) {
  int l = 0;
  uint64_t x = 1;
  while (x < v) {
    x *= base;
    ++l;
  }
  return l;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::pair<ConstructionParams, LiftedCode> construct_one(const ConstructInputs& in) {
  if (!in.k.has_value() || !in.m.has_value())
    throw ParamError("inputs", "theorem 1 requires k and m");
  const uint64_t k = *in.k;
  if (k < 2 || (k & (k - 1)) != 0)
    throw ParamError("k = 2^t", "locality parameter k must be a power of 2, k >= 2");
  const int ell = ceil_log2(k);
  const int m = *in.m;
  if (m < 1) throw ParamError("m >= 1", "lift dimension must be positive");

  auto ctx = field_ctx(2, 1, ell);
  ConstructionParams params;
  params.theorem = 1;
  params.p = 2;
  params.q = 2;
  params.Q = static_cast<uint32_t>(k);
  params.ell = ell;
  params.t = 1;
  params.m = m;
  params.N = ipow(k, m);
  params.locality = k - 1;
  params.correction_radius = make_rational(1, 3 * static_cast<int64_t>(k));
  params.claimed_dim_bound = make_rational(binomial(m, static_cast<int>(k) - 2), 1);
  params.claimed_dim_note = "dim >= C(m, Q-2)";
  double denom = std::pow(static_cast<double>(k), static_cast<double>(k) - 2);
  for (uint64_t i = 2; i <= k; ++i) denom *= static_cast<double>(i);
  params.c_k = 1.0 / denom;
  return {params, LiftedCode(base_parity_univariate(ctx), m)};
}

std::pair<ConstructionParams, LiftedCode> construct_two(const ConstructInputs& in) {
  const uint32_t p = in.p.value_or(2);
  int m;
  if (in.m.has_value()) {
    m = *in.m;
  } else if (in.eps.has_value()) {
    m = static_cast<int>(std::ceil(1.0 / *in.eps));
  } else {
    throw ParamError("inputs", "theorem 2 requires m or eps");
  }
  if (m < 1) throw ParamError("m >= 1", "lift dimension must be positive");
  int ell;
  if (in.ell.has_value()) {
    ell = *in.ell;
  } else if (in.N0.has_value()) {
    ell = std::max(1, (ceil_log_base(*in.N0, p) + m - 1) / m);  // smallest ell with p^(m ell) >= N0
  } else {
    throw ParamError("inputs", "theorem 2 requires ell or N0");
  }
  if (ell < 1) throw ParamError("ell >= 1", "extension degree must be positive");

  auto ctx = field_ctx(p, 1, ell);
  ConstructionParams params;
  params.theorem = 2;
  params.p = p;
  params.q = p;
  params.Q = ctx->order();
  params.ell = ell;
  params.t = 1;
  params.m = m;
  params.N = domain_size(*ctx, m);
  params.locality = params.Q - 1;
  params.correction_radius = make_rational(1, 3 * static_cast<int64_t>(params.Q));
  params.eps = in.eps.value_or(1.0 / m);
  const int td = 1 + ceil_log_base(m, p);  // digit positions per block
  params.eps_prime = 1.0 / (static_cast<double>(m) * td * std::pow(p, static_cast<double>(m) * td));
  params.claimed_dim_note = "asymptotic: dim >= N - N^(1-eps'); checked by exact enumeration";
  return {params, LiftedCode(base_parity_univariate(ctx), m)};
}

std::pair<ConstructionParams, LiftedCode> construct_three(const ConstructInputs& in) {
  int ell;
  if (in.ell.has_value()) {
    ell = *in.ell;
  } else if (in.eps.has_value()) {
    ell = ceil_log2(static_cast<uint64_t>(std::ceil(1.0 / *in.eps)));
  } else {
    throw ParamError("inputs", "theorem 3 requires ell or eps");
  }
  if (ell < 1) throw ParamError("ell >= 1", "extension degree must be positive");
  if (!in.m.has_value()) throw ParamError("inputs", "theorem 3 requires m");
  const int m = *in.m;
  if (m < 2) throw ParamError("m >= 2", "theorem 3 needs t = m-1 >= 1");

  auto ctx = field_ctx(2, 1, ell);
  ConstructionParams params;
  params.theorem = 3;
  params.p = 2;
  params.q = 2;
  params.Q = ctx->order();
  params.ell = ell;
  params.t = m - 1;
  params.m = m;
  params.N = domain_size(*ctx, m);
  params.locality = domain_size(*ctx, params.t);
  params.correction_radius = make_rational(1, 3 * static_cast<int64_t>(params.locality));
  params.eps = in.eps.value_or(std::pow(2.0, -ell));
  const int64_t dim = static_cast<int64_t>(ipow(2, m * ell)) -
                      static_cast<int64_t>(ipow(static_cast<uint64_t>(m) + 1, ell));
  params.claimed_dim_bound = make_rational(dim, 1);
  params.claimed_dim_note = "dim = 2^(m ell) - (m+1)^ell, exact";
  return {params, LiftedCode(base_parity_multivariate(ctx, params.t), m)};
}

std::pair<ConstructionParams, LiftedCode> construct_four(const ConstructInputs& in) {
  int m;
  if (in.m.has_value()) {
    m = *in.m;
  } else if (in.delta.has_value()) {
    m = static_cast<int>(std::ceil(1.0 / *in.delta));
  } else {
    throw ParamError("inputs", "theorem 4 requires m or delta");
  }
  if (m < 1) throw ParamError("m >= 1", "lift dimension must be positive");
  const int b = 1 + ceil_log2(static_cast<uint64_t>(m));

  int c;
  if (in.c.has_value()) {
    c = *in.c;
  } else if (in.eps.has_value()) {
    c = static_cast<int>(
        std::ceil(b * std::pow(2.0, b * m) * std::log2(1.0 / *in.eps)));
  } else {
    throw ParamError("inputs", "theorem 4 requires c or eps");
  }
  if (c < 1) throw ParamError("c >= 1", "error exponent must be positive");

  int s;
  if (in.s.has_value()) {
    s = *in.s;
  } else if (in.N0.has_value() && in.delta.has_value()) {
    s = std::max(1, ceil_log2(static_cast<uint64_t>(
                        std::ceil(std::pow(static_cast<double>(*in.N0), *in.delta)))));
  } else {
    throw ParamError("inputs", "theorem 4 requires s or (N0 and delta)");
  }
  if (c > s)
    throw ParamError("c <= s", "degree (1 - 2^-c) Q is not an integer unless c <= s; got c=" +
                                   std::to_string(c) + ", s=" + std::to_string(s));

  auto ctx = field_ctx(2, s, 1);
  const uint32_t Q = ctx->order();
  const int64_t d = static_cast<int64_t>(Q) - (1ll << (s - c));

  ConstructionParams params;
  params.theorem = 4;
  params.p = 2;
  params.q = Q;
  params.Q = Q;
  params.s = s;
  params.t = 1;
  params.m = m;
  params.N = domain_size(*ctx, m);
  params.locality = Q;
  params.b = b;
  params.c = c;
  params.gamma = std::pow(2.0, -c);
  params.tau = params.gamma / 6.0;
  params.rs_degree = d;
  params.correction_radius = make_rational(1, 6ll * (1ll << c));
  params.eps = in.eps.value_or(std::exp(-static_cast<double>(c) / (b * std::pow(2.0, b * m))));
  params.delta = in.delta.value_or(1.0 / m);
  if (m == 2) {
    // dim >= ((4^c - (5/4) 3^c + 1/4) / 4^c) * N
    int64_t p4 = 1, p3 = 1;
    for (int i = 0; i < c; ++i) {
      p4 *= 4;
      p3 *= 3;
    }
    params.claimed_dim_bound =
        make_rational(static_cast<int64_t>(params.N) * (4 * p4 - 5 * p3 + 1), 4 * p4);
    params.claimed_dim_note = "dim >= ((4^c - (5/4)3^c + 1/4)/4^c) N";
  } else {
    params.claimed_dim_note = "asymptotic: dim >= (1 - eps) N";
  }
  return {params, LiftedCode(base_reed_solomon(ctx, static_cast<uint32_t>(d)), m)};
}

}  // namespace

std::pair<ConstructionParams, LiftedCode> construct(const ConstructInputs& in) {
  switch (in.theorem) {
    case 1:
      return construct_one(in);
    case 2:
      return construct_two(in);
    case 3:
      return construct_three(in);
    case 4:
      return construct_four(in);
    default:
      throw ParamError("theorem in 1..4", "unknown construction id");
  }
}

}  // namespace liftcode
