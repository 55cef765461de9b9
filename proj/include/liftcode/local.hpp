#ifndef LIFTCODE_LOCAL_HPP_
#define LIFTCODE_LOCAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftcode/codes.hpp"
#include "liftcode/rng.hpp"

namespace liftcode {

// Query-counted oracle access to a received word. The counter increments
// exactly once per query; deterministic replay under a fixed seed.
class Oracle {
 public:
  explicit Oracle(const FuncTable& f) : f_(&f) {}

  uint32_t query(uint64_t idx) const {
    ++queries_;
    return f_->at(idx);
  }
  uint64_t queries() const { return queries_; }
  void reset_queries() const { queries_ = 0; }

  const FuncTable& table() const { return *f_; }

 private:
  const FuncTable* f_;
  mutable uint64_t queries_ = 0;
};

// Berlekamp-Welch unique decoding at the given evaluation points.
// Returns the coefficients (little-endian, length degree_bound+1) of the
// unique polynomial of degree <= degree_bound disagreeing with ys in at
// most max_errors positions, or nullopt. The returned polynomial never
// disagrees in more than max_errors positions.
std::optional<std::vector<uint32_t>> rs_decode_points(const FieldCtxPtr& ctx,
                                                      const std::vector<uint32_t>& xs,
                                                      const std::vector<uint32_t>& ys,
                                                      uint32_t degree_bound, uint32_t max_errors);

// Full-length decoder: values indexed by field element, radius
// floor((Q - d - 1)/2).
std::optional<std::vector<uint32_t>> rs_decode(const FieldCtxPtr& ctx,
                                               const std::vector<uint32_t>& values,
                                               uint32_t degree_bound);

uint32_t eval_poly_at(const FieldCtxPtr& ctx, const std::vector<uint32_t>& coeffs, uint32_t x);

struct CorrectorReport {
  bool ok = false;
  uint32_t value = 0;
  uint64_t queries = 0;           // total across attempts
  uint64_t queries_per_attempt = 0;
  int attempts = 0;
};

// Generic lifted-code corrector: sample a random t-dimensional subspace
// through x, read the Q^t - 1 off-base points, solve for the unique base
// codeword agreeing there, return its value at the base parameter.
// Retries on an infeasible system up to max_attempts (the probabilistic
// guarantee is per single attempt).
CorrectorReport correct_generic(const Oracle& f, const Point& x, const LiftedCode& code,
                                SplitRng& rng, int max_attempts = 3);

// Single solve on an explicit subspace whose base point is the target.
// When f is clean off the base point, the result equals the true base
// codeword's value there. Nullopt if the interpolation system is
// infeasible.
std::optional<uint32_t> correct_on_subspace(const Oracle& f, const AffineSubspace& V,
                                            const LiftedCode& code);

// Reed-Solomon line corrector for lifts of degree-bounded univariate codes:
// read the whole random line through x (Q queries), decode the punctured
// part (the base point is untrusted), output the decoded value at x.
// Single-shot; decode failure is reported, not retried.
CorrectorReport correct_rs_lifted(const Oracle& f, const Point& x, const LiftedCode& code,
                                  SplitRng& rng);

struct TestReport {
  bool accept = false;
  uint64_t queries = 0;
};

// One-sided local tester: sample one uniformly random t-dimensional affine
// subspace, query all Q^t points, accept iff the restriction is in the base.
TestReport test_local(const Oracle& f, const LiftedCode& code, SplitRng& rng);

enum class Scenario { kCorrectGeneric, kCorrectRs, kTestCodeword, kTestFlip, kTestRandom };
enum class TargetMode { kCorruptedPoint, kRandomPoint };

const char* scenario_name(Scenario sc);

struct McConfig {
  uint64_t trials = 0;
  uint64_t errors = 0;
  uint64_t seed = 0;
  TargetMode target = TargetMode::kRandomPoint;
  Exec exec = Exec::kParallel;
};

struct McReport {
  std::string scenario;
  uint64_t trials = 0;
  uint64_t successes = 0;  // corrections / accepts / rejections, per scenario
  double frequency = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  uint64_t queries_max = 0;
  uint64_t seed = 0;
  uint64_t errors = 0;
};

// Seeded experiment harness. Trials draw independent RNG streams derived
// from (seed, trial), so results do not depend on the execution schedule.
// "success" means: value recovered (correctors), accept (kTestCodeword),
// reject (kTestFlip / kTestRandom).
McReport monte_carlo(const LiftedCode& code, Scenario sc, const McConfig& cfg);

// Corrupts `errors` distinct positions, each by adding a uniformly random
// nonzero value-field element. Returns the corrupted positions.
std::vector<uint64_t> corrupt_table(FuncTable& f, uint64_t errors, SplitRng& rng);

// Wilson 95% score interval.
std::pair<double, double> wilson_ci(uint64_t successes, uint64_t trials);

}  // namespace liftcode

#endif  // LIFTCODE_LOCAL_HPP_
