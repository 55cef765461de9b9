#ifndef LIFTCODE_ANALYSIS_HPP_
#define LIFTCODE_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "liftcode/codes.hpp"

namespace liftcode {

// ---------------------------------------------------------------------------
// Exhaustive minimum distance
// ---------------------------------------------------------------------------

struct MinDistanceResult {
  uint64_t min_weight = 0;
  uint64_t length = 0;
  size_t dim = 0;
  Rational delta{0, 1};           // min_weight / length
  uint64_t messages_enumerated = 0;
  bool trivial = false;           // no nonzero codewords
};

// Exact normalized minimum nonzero weight by enumeration of all nonzero
// messages. Guarded: q^dim <= enum_limit; exceeding it throws a GuardError
// suggesting Monte-Carlo mode. enum_limit may only be raised explicitly.
MinDistanceResult min_distance_exhaustive(const FieldCtxPtr& ctx, const DegreeSet& D,
                                          uint32_t value_order,
                                          uint64_t enum_limit = 1ull << 24,
                                          Exec exec = Exec::kParallel);
MinDistanceResult min_distance_exhaustive(const BaseCode& base,
                                          uint64_t enum_limit = 1ull << 24,
                                          Exec exec = Exec::kParallel);
MinDistanceResult min_distance_exhaustive(const LiftedCode& code,
                                          uint64_t enum_limit = 1ull << 24,
                                          Exec exec = Exec::kParallel);

// ---------------------------------------------------------------------------
// Distance theorem verification
// ---------------------------------------------------------------------------

struct DistanceCheck {
  std::vector<uint32_t> base_degrees;  // scalar degree set of the base
  Rational delta_base{0, 1};
  Rational delta_lift{0, 1};
  size_t base_dim = 0;
  size_t lift_dim = 0;
  bool degenerate = false;   // one side has no nonzero codewords; checks vacuous
  bool part1_ok = true;      // delta(L) <= delta(F)
  bool part2_ok = true;      // delta(L) >= delta(F) - Q^-t
  bool general_lower_ok = true;  // delta(L) > delta(F) - (1-delta(F))/(Q^t-1),
                                 // with equality allowed exactly when delta(F)=1
  bool small_field_applicable = false;  // Q in {2,3} and delta(F) > Q^-t
  bool small_field_ok = true;           // delta(L) >= delta(F)
  bool distance_simple_ok = true;       // proper codes: delta >= 2 Q^-m
  bool all_ok() const {
    return part1_ok && part2_ok && general_lower_ok && small_field_ok && distance_simple_ok;
  }
};

DistanceCheck verify_distance_theorem(const BaseCode& base, int m,
                                      uint64_t enum_limit = 1ull << 24,
                                      Exec exec = Exec::kParallel);

// Sweep over every valid univariate base degree set for this field tower:
// q-shift closed and p-shadow closed (the degree sets of affine-invariant
// codes), proper and nonempty.
std::vector<DistanceCheck> distance_sweep(const FieldCtxPtr& ctx, int m,
                                          uint64_t enum_limit = 1ull << 24,
                                          Exec exec = Exec::kParallel);

// Valid base degree sets as used by the sweep.
std::vector<std::vector<uint32_t>> valid_univariate_degree_sets(const FieldCtxPtr& ctx);

// ---------------------------------------------------------------------------
// Lift-vs-restriction master oracle
// ---------------------------------------------------------------------------

struct OracleReport {
  bool equal = true;
  uint64_t functions_checked = 0;
  uint64_t members_by_restriction = 0;
  uint64_t members_by_degrees = 0;
  int64_t first_mismatch = -1;  // function index, -1 if none
};

// Exhaustive scan over all q^(Q^m) value-field functions; guarded.
OracleReport oracle_equivalence_exhaustive(const LiftedCode& code,
                                           uint64_t guard = 1ull << 20,
                                           Exec exec = Exec::kParallel);

// Sampled mode: random codewords must pass by_restriction; random tables
// must agree between the two membership routes.
OracleReport oracle_equivalence_sampled(const LiftedCode& code, uint64_t member_samples,
                                        uint64_t random_samples, uint64_t seed);

// ---------------------------------------------------------------------------
// Affine closure
// ---------------------------------------------------------------------------

struct AffineClosureReport {
  uint64_t maps_checked = 0;
  uint64_t codewords = 0;
  uint64_t violations = 0;
};

// Checks f o A in code for every affine map A (all Q^(m^2+m), including
// singular ones) and every codeword f. Guarded by q^dim and map count.
AffineClosureReport verify_affine_closure(const LiftedCode& code,
                                          uint64_t guard = 1ull << 24,
                                          Exec exec = Exec::kParallel);

// ---------------------------------------------------------------------------
// Nikodym sets
// ---------------------------------------------------------------------------

struct PointSet {
  uint32_t q = 2;
  int m = 1;
  std::vector<uint8_t> mask;  // indexed by packed point
  uint64_t count = 0;

  static PointSet empty(uint32_t q, int m);
  static PointSet full(uint32_t q, int m);
  static PointSet of_points(uint32_t q, int m, const std::vector<uint64_t>& points);
  void insert(uint64_t packed);
  void erase(uint64_t packed);
  bool contains(uint64_t packed) const { return mask[packed] != 0; }
  std::vector<uint64_t> points() const;
};

// Every point has a punctured line through it fully inside S. One direction
// per projective class suffices; the reference form scans every nonzero y.
bool is_nikodym(const PointSet& S);
bool is_nikodym_reference(const PointSet& S);

// dim Lift_m({0..q-2}) over F_q: the lower bound on Nikodym set sizes given
// by the lift of the degree-(q-2) univariate family.
uint64_t nikodym_lower_bound(uint32_t q, int m);

struct NikodymScanResult {
  uint64_t subsets_checked = 0;
  uint64_t nikodym_found = 0;
};

// Scans every subset of the given size for the Nikodym property.
NikodymScanResult nikodym_scan_subsets(uint32_t q, int m, int subset_size,
                                       Exec exec = Exec::kParallel);

// Greedily removes points (in index order) while the set stays Nikodym.
PointSet greedy_minimal_nikodym(uint32_t q, int m);

}  // namespace liftcode

#endif  // LIFTCODE_ANALYSIS_HPP_
