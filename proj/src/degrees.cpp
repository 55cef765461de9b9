#include "liftcode/degrees.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liftcode {

bool p_shadow_leq(uint64_t e, uint64_t d, uint32_t p) {
  if (p == 2) return (e & ~d) == 0;
  while (e != 0) {
    if (e % p > d % p) return false;
    e /= p;
    d /= p;
  }
  return true;
}

bool p_shadow_leq(const DegreeVec& e, const DegreeVec& d, uint32_t p) {
  if (e.size() != d.size()) throw UsageError("shadow comparison shape mismatch");
  for (size_t i = 0; i < e.size(); ++i)
    if (!p_shadow_leq(e[i], d[i], p)) return false;
  return true;
}

std::vector<uint32_t> shadow_enumerate(uint32_t d, uint32_t p) {
  std::vector<uint32_t> out{0};
  uint32_t place = 1;
  while (d != 0) {
    const uint32_t digit = d % p;
    if (digit != 0) {
      const size_t base = out.size();
      out.reserve(base * (digit + 1));
      for (uint32_t v = 1; v <= digit; ++v)
        for (size_t i = 0; i < base; ++i) out.push_back(out[i] + v * place);
    }
    d /= p;
    place *= p;
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t shadow_count(uint32_t d, uint32_t p) {
  uint64_t n = 1;
  while (d != 0) {
    n *= d % p + 1;
    d /= p;
  }
  return n;
}

bool multinomial_nonzero_mod_p(uint32_t d, const std::vector<uint32_t>& e, uint32_t p) {
  uint64_t sum = 0;
  for (uint32_t v : e) sum += v;
  if (sum > d) throw UsageError("multinomial requires sum(e) <= d");
  uint32_t rem = d;
  for (uint32_t v : e) {
    if (!p_shadow_leq(v, rem, p)) return false;  // Lucas on C(rem, v)
    rem -= v;
  }
  return true;
}

namespace {

bool vector_shadow_definitional(const std::vector<uint32_t>& e, uint32_t d, uint32_t p) {
  // Quantify over all sub-shadows f <=_p e; early exit on first violation.
  std::vector<std::vector<uint32_t>> shadows(e.size());
  for (size_t i = 0; i < e.size(); ++i) {
    if (!p_shadow_leq(e[i], d, p)) return false;  // f = unit vector at i
    shadows[i] = shadow_enumerate(e[i], p);
  }
  std::vector<size_t> pos(e.size(), 0);
  for (;;) {
    uint64_t sum = 0;
    for (size_t i = 0; i < e.size(); ++i) sum += shadows[i][pos[i]];
    if (!p_shadow_leq(sum, d, p)) return false;
    size_t k = 0;
    while (k < e.size() && ++pos[k] == shadows[k].size()) pos[k++] = 0;
    if (k == e.size()) return true;
  }
}

bool vector_shadow_fast(const std::vector<uint32_t>& e, uint32_t d, uint32_t p) {
  uint64_t sum = 0;
  for (uint32_t v : e) sum += v;
  if (sum > d) return false;
  return multinomial_nonzero_mod_p(d, e, p);
}

}  // namespace

bool shadow_equivalence_holds(uint32_t p, uint32_t d_limit, int max_len) {
  for (uint32_t d = 0; d < d_limit; ++d) {
    for (int len = 1; len <= max_len; ++len) {
      std::vector<uint32_t> e(len, 0);
      for (;;) {
        if (vector_shadow_definitional(e, d, p) != vector_shadow_fast(e, d, p)) return false;
        int k = 0;
        while (k < len && ++e[k] > d) e[k++] = 0;
        if (k == len) break;
      }
    }
  }
  return true;
}

bool shadow_fast_path_enabled(uint32_t p) {
  // One-time gate per characteristic; the full-size sweep lives in the test
  // suite, this keeps the runtime check affordable.
  static std::once_flag once[3];
  static bool enabled[3];
  int slot = p == 2 ? 0 : p == 3 ? 1 : 2;
  std::call_once(once[slot], [&] {
    uint32_t limit = p == 2 ? 32 : p == 3 ? 27 : 25;
    enabled[slot] = shadow_equivalence_holds(p, limit, 3);
  });
  return enabled[slot];
}

bool vector_shadow_leq(const std::vector<uint32_t>& e, uint32_t d, uint32_t p, ShadowCheck mode) {
  switch (mode) {
    case ShadowCheck::kDefinitional:
      return vector_shadow_definitional(e, d, p);
    case ShadowCheck::kFast:
      return vector_shadow_fast(e, d, p);
    case ShadowCheck::kAuto:
    default:
      return shadow_fast_path_enabled(p) ? vector_shadow_fast(e, d, p)
                                         : vector_shadow_definitional(e, d, p);
  }
}

DegreeSet::DegreeSet(uint32_t Q, uint32_t q, int m) : Q_(Q), q_(q), m_(m), count_(0) {
  if (m < 1) throw UsageError("degree set arity must be positive");
  uint64_t n = 1;
  for (int i = 0; i < m; ++i) {
    n *= Q;
    if (n > (1ull << 24)) throw GuardError("degree set domain limited to Q^m <= 2^24", 1ull << 24, n);
  }
  mask_.assign(n, 0);
}

DegreeSet DegreeSet::full(uint32_t Q, uint32_t q, int m) {
  DegreeSet D(Q, q, m);
  std::fill(D.mask_.begin(), D.mask_.end(), 1);
  D.count_ = D.mask_.size();
  return D;
}

DegreeSet DegreeSet::of_scalars(uint32_t Q, uint32_t q, const std::vector<uint32_t>& degrees) {
  DegreeSet D(Q, q, 1);
  for (uint32_t d : degrees) D.insert(d);
  return D;
}

void DegreeSet::insert(uint64_t packed) {
  if (packed >= mask_.size()) throw UsageError("degree out of range");
  if (!mask_[packed]) {
    mask_[packed] = 1;
    ++count_;
  }
}

std::vector<uint64_t> DegreeSet::packed_list() const {
  std::vector<uint64_t> out;
  out.reserve(count_);
  for (uint64_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(i);
  return out;
}

DegreeVec DegreeSet::unpack(uint64_t packed) const {
  DegreeVec d(m_);
  for (int i = m_; i-- > 0;) {
    d[i] = static_cast<uint32_t>(packed % Q_);
    packed /= Q_;
  }
  return d;
}

uint64_t DegreeSet::pack(const DegreeVec& d) const {
  if (static_cast<int>(d.size()) != m_) throw UsageError("degree vector arity mismatch");
  uint64_t idx = 0;
  for (uint32_t v : d) {
    if (v >= Q_) throw UsageError("degree out of range");
    idx = idx * Q_ + v;
  }
  return idx;
}

uint64_t q_shift_once(uint64_t packed, uint32_t q, uint32_t Q, int m) {
  uint64_t out = 0;
  uint64_t place = 1;
  for (int i = 1; i < m; ++i) place *= Q;
  for (int i = 0; i < m; ++i) {
    uint32_t d = static_cast<uint32_t>(packed / place % Q);
    out += static_cast<uint64_t>(modstar(static_cast<uint64_t>(q) * d, Q)) * place;
    place /= Q;
    if (place == 0) break;
  }
  return out;
}

ShiftOrbit q_shift_orbit(uint64_t packed, uint32_t q, uint32_t Q, int m) {
  ShiftOrbit orbit;
  uint64_t cur = packed;
  do {
    orbit.members.push_back(cur);
    cur = q_shift_once(cur, q, Q, m);
  } while (cur != packed);
  orbit.size = static_cast<int>(orbit.members.size());
  std::sort(orbit.members.begin(), orbit.members.end());
  return orbit;
}

bool DegreeSet::q_shift_closed() const {
  for (uint64_t d = 0; d < mask_.size(); ++d) {
    if (!mask_[d]) continue;
    if (!mask_[q_shift_once(d, q_, Q_, m_)]) return false;
  }
  return true;
}

bool DegreeSet::p_shadow_closed(uint32_t p) const {
  std::vector<std::vector<uint32_t>> shadows;
  for (uint64_t packed = 0; packed < mask_.size(); ++packed) {
    if (!mask_[packed]) continue;
    DegreeVec d = unpack(packed);
    // product of scalar shadows, coordinatewise
    std::vector<std::vector<uint32_t>> per(m_);
    for (int i = 0; i < m_; ++i) per[i] = shadow_enumerate(d[i], p);
    std::vector<size_t> pos(m_, 0);
    for (;;) {
      uint64_t idx = 0;
      for (int i = 0; i < m_; ++i) idx = idx * Q_ + per[i][pos[i]];
      if (!mask_[idx]) return false;
      int k = m_ - 1;
      while (k >= 0 && ++pos[k] == per[k].size()) pos[k--] = 0;
      if (k < 0) break;
    }
  }
  return true;
}

std::vector<DegreeSet::Orbit> DegreeSet::orbit_decomposition() const {
  std::vector<Orbit> orbits;
  std::vector<uint8_t> seen(mask_.size(), 0);
  for (uint64_t d = 0; d < mask_.size(); ++d) {
    if (!mask_[d] || seen[d]) continue;
    auto orb = q_shift_orbit(d, q_, Q_, m_);
    for (uint64_t mem : orb.members) {
      if (mem >= mask_.size() || !mask_[mem])
        throw UsageError("orbit decomposition requires a q-shift closed set");
      seen[mem] = 1;
    }
    orbits.push_back({orb.members.front(), orb.members, orb.size});
  }
  return orbits;
}

size_t dimension(const DegreeSet& D) {
  if (!D.q_shift_closed())
    throw UsageError("dimension is defined for q-shift closed degree sets only");
  return D.count();
}

namespace {

// Membership predicate for the univariate lift: every shadow of every
// coordinate, summed, reduced modstar Q, must land in D.
class UnivariateLiftPredicate {
 public:
  UnivariateLiftPredicate(const DegreeSet& D, int m, uint32_t p)
      : D_(D), Q_(D.Q()), m_(m), p_(p) {
    shadows_.resize(Q_);
    for (uint32_t v = 0; v < Q_; ++v) shadows_[v] = shadow_enumerate(v, p);
    // modstar lookup for sums up to m*(Q-1)
    mod_.resize(static_cast<size_t>(m) * (Q_ - 1) + 1);
    for (size_t s = 0; s < mod_.size(); ++s) mod_[s] = modstar(s, Q_);
  }

  bool operator()(uint64_t packed) const {
    std::array<const std::vector<uint32_t>*, 16> lists{};
    uint64_t rest = packed;
    for (int i = m_; i-- > 0;) {
      lists[i] = &shadows_[rest % Q_];
      rest /= Q_;
    }
    return walk(lists.data(), 0, 0);
  }

 private:
  bool walk(const std::vector<uint32_t>* const* lists, int depth, uint64_t sum) const {
    if (depth == m_) return D_.contains(mod_[sum]);
    for (uint32_t e : *lists[depth])
      if (!walk(lists, depth + 1, sum + e)) return false;
    return true;
  }

  const DegreeSet& D_;
  uint32_t Q_;
  int m_;
  uint32_t p_;
  std::vector<std::vector<uint32_t>> shadows_;
  std::vector<uint32_t> mod_;
};

// Rows usable at a coordinate with value v: all t-vectors e <=_p v.
std::vector<std::vector<uint32_t>> valid_rows(uint32_t v, int t, uint32_t p) {
  std::vector<std::vector<uint32_t>> rows;
  auto scal = shadow_enumerate(v, p);
  std::vector<size_t> pos(t, 0);
  std::vector<uint32_t> e(t);
  for (;;) {
    for (int i = 0; i < t; ++i) e[i] = scal[pos[i]];
    if (vector_shadow_leq(e, v, p)) rows.push_back(e);
    int k = t - 1;
    while (k >= 0 && ++pos[k] == scal.size()) pos[k--] = 0;
    if (k < 0) break;
  }
  return rows;
}

class MultivariateLiftPredicate {
 public:
  MultivariateLiftPredicate(const DegreeSet& D, int m, uint32_t p)
      : D_(D), Q_(D.Q()), t_(D.m()), m_(m) {
    rows_.resize(Q_);
    for (uint32_t v = 0; v < Q_; ++v) rows_[v] = valid_rows(v, t_, p);
  }

  bool operator()(uint64_t packed) const {
    std::array<uint32_t, 16> d{};
    uint64_t rest = packed;
    for (int i = m_; i-- > 0;) {
      d[i] = static_cast<uint32_t>(rest % Q_);
      rest /= Q_;
    }
    std::vector<uint32_t> colsum(t_, 0);
    return walk(d.data(), 0, colsum);
  }

 private:
  bool walk(const uint32_t* d, int depth, std::vector<uint32_t>& colsum) const {
    if (depth == m_) {
      uint64_t idx = 0;
      for (int j = 0; j < t_; ++j) idx = idx * Q_ + modstar(colsum[j], Q_);
      return D_.contains(idx);
    }
    for (const auto& row : rows_[d[depth]]) {
      for (int j = 0; j < t_; ++j) colsum[j] += row[j];
      bool ok = walk(d, depth + 1, colsum);
      for (int j = 0; j < t_; ++j) colsum[j] -= row[j];
      if (!ok) return false;
    }
    return true;
  }

  const DegreeSet& D_;
  uint32_t Q_;
  int t_, m_;
  std::vector<std::vector<std::vector<uint32_t>>> rows_;
};

template <typename Predicate>
DegreeSet lift_with(const DegreeSet& D, int m, Exec exec, const Predicate& pred) {
  DegreeSet out(D.Q(), D.q(), m);
  const uint64_t n = out.domain();

  // Orbit pruning: when the base set is q-shift closed, membership in the
  // lift is orbit-invariant, so one representative per orbit suffices.
  const bool prune = D.q_shift_closed();

  std::vector<uint64_t> reps;
  std::vector<std::vector<uint64_t>> orbit_members;
  if (prune) {
    std::vector<uint8_t> seen(n, 0);
    for (uint64_t d = 0; d < n; ++d) {
      if (seen[d]) continue;
      auto orb = q_shift_orbit(d, D.q(), D.Q(), m);
      for (uint64_t mem : orb.members) seen[mem] = 1;
      reps.push_back(d);
      orbit_members.push_back(std::move(orb.members));
    }
  } else {
    reps.resize(n);
    for (uint64_t d = 0; d < n; ++d) reps[d] = d;
  }

  std::vector<uint8_t> verdict(reps.size(), 0);
  const int64_t count = static_cast<int64_t>(reps.size());
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (int64_t i = 0; i < count; ++i) verdict[i] = pred(reps[i]) ? 1 : 0;
  } else {
    for (int64_t i = 0; i < count; ++i) verdict[i] = pred(reps[i]) ? 1 : 0;
  }

  for (size_t i = 0; i < reps.size(); ++i) {
    if (!verdict[i]) continue;
    if (prune) {
      for (uint64_t mem : orbit_members[i]) out.insert(mem);
    } else {
      out.insert(reps[i]);
    }
  }
  return out;
}

}  // namespace

DegreeSet lift_degree_set_univariate(const DegreeSet& D, int m, Exec exec) {
  if (D.m() != 1) throw UsageError("base degree set must be univariate");
  if (m < 1) throw UsageError("lift dimension must be positive");
  if (m > 16) throw UsageError("lift dimension limited to m <= 16");
  uint32_t p = 2;
  for (uint32_t c : {2u, 3u, 5u})
    if (D.Q() % c == 0) p = c;
  UnivariateLiftPredicate pred(D, m, p);
  return lift_with(D, m, exec, pred);
}

DegreeSet lift_degree_set_multivariate(const DegreeSet& D, int m, Exec exec) {
  const int t = D.m();
  if (t > m) throw UsageError("lift dimension must be at least the base arity");
  if (m > 16) throw UsageError("lift dimension limited to m <= 16");
  uint32_t p = 2;
  for (uint32_t c : {2u, 3u, 5u})
    if (D.Q() % c == 0) p = c;
  MultivariateLiftPredicate pred(D, m, p);
  return lift_with(D, m, exec, pred);
}

}  // namespace liftcode
