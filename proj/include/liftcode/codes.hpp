#ifndef LIFTCODE_CODES_HPP_
#define LIFTCODE_CODES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liftcode/degrees.hpp"
#include "liftcode/rng.hpp"
#include "liftcode/space.hpp"

namespace liftcode {

// Optional membership checker evaluated directly on the value table,
// independent of the degree-set route.
enum class CheckerKind { kNone, kSumZero, kMaxDegree };

// A t-variate affine-invariant base code over F_Q with values in the
// subfield of order value_order, described by its degree set.
struct BaseCode {
  FieldCtxPtr ctx;
  int t = 1;
  uint32_t value_order = 2;
  DegreeSet degrees;
  CheckerKind checker = CheckerKind::kNone;
  uint32_t degree_bound = 0;  // for kMaxDegree

  uint32_t Q() const { return ctx->order(); }

  // Canonical membership: declared values inside the value field and
  // support contained in the degree set.
  bool contains(const FuncTable& f) const;
  bool contains_values(const std::vector<uint32_t>& values) const;

  bool has_checker() const { return checker != CheckerKind::kNone; }
  bool direct_check(const FuncTable& f) const;
  bool direct_check_values(const std::vector<uint32_t>& values) const;
};

// {f : F_Q -> F_q | sum_x f(x) = 0}; degree set {0..Q-2}.
BaseCode base_parity_univariate(FieldCtxPtr ctx);
// {f : F_Q^t -> F_q | sum_x f(x) = 0}; degree set misses only (Q-1,...,Q-1).
BaseCode base_parity_multivariate(FieldCtxPtr ctx, int t);
// {f : F_Q -> F_Q | deg f <= d}, 0 <= d <= Q-2.
BaseCode base_reed_solomon(FieldCtxPtr ctx, uint32_t d);

// F_q-basis of Fam(D): one row per (orbit representative, subfield basis
// power). Rows are dense value tables over F_Q^arity, in deterministic
// (orbit rep, power) order. This is the encoding layout.
struct BasisInfo {
  std::vector<std::vector<uint32_t>> rows;
  std::vector<uint64_t> row_orbit_rep;  // parallel to rows
};
BasisInfo code_basis_tables(const FieldCtxPtr& ctx, const DegreeSet& D, uint32_t value_order);

// The m-dimensional lift of a base code: functions whose restriction to
// every t-dimensional affine subspace lies in the base. The lifted degree
// set is materialized lazily; copies share the cache.
class LiftedCode {
 public:
  LiftedCode(BaseCode base, int m);

  const BaseCode& base() const { return base_; }
  const FieldCtxPtr& ctx() const { return base_.ctx; }
  int t() const { return base_.t; }
  int m() const { return m_; }
  uint32_t value_order() const { return base_.value_order; }
  uint64_t length() const;  // Q^m

  const DegreeSet& degree_set() const;
  size_t dimension() const { return degree_set().count(); }

  struct OrbitInfo {
    uint64_t rep;
    int size;                    // b(d)
    uint32_t coeff_field_order;  // q^b
  };
  const std::vector<OrbitInfo>& orbits() const;

  bool member_by_degrees(const FuncTable& f) const;
  bool member_by_restriction(const FuncTable& f) const;

  // One coefficient per orbit (in orbits() order), each in its orbit's
  // coefficient subfield F_{q^b}. Injective; the image is exactly the code.
  FuncTable encode(const std::vector<uint32_t>& orbit_coeffs) const;

  std::vector<uint32_t> random_message(SplitRng& rng) const;

  // All t-dimensional affine subspaces (cached) and their point indices.
  const std::vector<AffineSubspace>& subspaces() const;
  const std::vector<std::vector<uint64_t>>& subspace_point_indices() const;

  // F_q-basis of the base code (cached); used by the generic corrector.
  const BasisInfo& base_basis() const;

 private:
  struct Cache;
  BaseCode base_;
  int m_;
  std::shared_ptr<Cache> cache_;
};

enum class MemberMode { kByDegrees, kByRestriction };
bool member(const FuncTable& f, const LiftedCode& code, MemberMode mode);

struct Rational {
  int64_t num = 0;
  int64_t den = 1;
  double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};
Rational make_rational(int64_t num, int64_t den);
int rational_cmp(const Rational& a, const Rational& b);  // sign of a - b

// Derived parameters for the four constructions.
struct ConstructionParams {
  int theorem = 0;
  uint32_t p = 2;
  uint32_t q = 2;      // value field order
  uint32_t Q = 2;      // domain field order
  int ell = 0;         // log_p Q for the parity constructions
  int s = 0;           // log_2 Q for the Reed-Solomon construction
  int t = 1;
  int m = 1;
  uint64_t N = 0;      // Q^m
  uint64_t locality = 0;
  Rational correction_radius{0, 1};
  int b = 0;           // 1 + ceil(log2 m)
  int c = 0;
  double gamma = 0.0;
  double tau = 0.0;
  int64_t rs_degree = -1;  // d = (1 - 2^-c) Q
  Rational claimed_dim_bound{0, 1};  // absolute count; 0/1 when only asymptotic
  std::string claimed_dim_note;
  double c_k = 0.0;        // constant-locality construction constant
  double eps = 0.0;
  double delta = 0.0;
  double eps_prime = 0.0;
};

struct ConstructInputs {
  int theorem = 0;
  std::optional<uint64_t> k;      // theorem 1: locality+1 = Q
  std::optional<int> m;
  std::optional<double> eps;
  std::optional<uint32_t> p;      // theorem 2
  std::optional<uint64_t> N0;
  std::optional<int> ell;         // parity constructions override
  std::optional<int> c;           // theorem 4 override
  std::optional<int> s;           // theorem 4 override
  std::optional<double> delta;    // theorem 4
};

std::pair<ConstructionParams, LiftedCode> construct(const ConstructInputs& in);

}  // namespace liftcode

#endif  // LIFTCODE_CODES_HPP_
