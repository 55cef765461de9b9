#ifndef LIFTCODE_DEGREES_HPP_
#define LIFTCODE_DEGREES_HPP_

#include <cstdint>
#include <vector>

#include "liftcode/errors.hpp"
#include "liftcode/space.hpp"

namespace liftcode {

enum class Exec { kSerial, kParallel };

// Exponent reduction respecting x^Q = x: 0 -> 0, otherwise the
// representative of a mod Q-1 in {1..Q-1}.
inline uint32_t modstar(uint64_t a, uint32_t Q) {
  if (a == 0) return 0;
  uint32_t r = static_cast<uint32_t>(a % (Q - 1));
  return r == 0 ? Q - 1 : r;
}

// Digitwise dominance in base p.
bool p_shadow_leq(uint64_t e, uint64_t d, uint32_t p);
bool p_shadow_leq(const DegreeVec& e, const DegreeVec& d, uint32_t p);

// All e with e <=_p d, ascending. Exactly prod_j (d^(j)+1) values.
std::vector<uint32_t> shadow_enumerate(uint32_t d, uint32_t p);
uint64_t shadow_count(uint32_t d, uint32_t p);

enum class ShadowCheck {
  kDefinitional,  // quantify over all sub-shadows
  kFast,          // no-carry multinomial criterion (gated)
  kAuto,          // fast if the per-characteristic gate test passed
};

// Vector-to-scalar shadow relation: e <=_p d iff every f <=_p e has
// sum(f) <=_p d. The fast path requires sum(e) <= d and that the
// multinomial coefficient (d; e) does not vanish mod p; it is used only
// after the equivalence gate for this characteristic has passed.
bool vector_shadow_leq(const std::vector<uint32_t>& e, uint32_t d, uint32_t p,
                       ShadowCheck mode = ShadowCheck::kAuto);

// (d; e_1..e_t) mod p != 0, via the chained-binomial factorization with
// Lucas' theorem per factor. Requires sum(e) <= d.
bool multinomial_nonzero_mod_p(uint32_t d, const std::vector<uint32_t>& e, uint32_t p);

// Result of the one-time fast-path gate for characteristic p (cached).
bool shadow_fast_path_enabled(uint32_t p);

// Exhaustive equivalence sweep used by the gate and by the property test:
// returns true iff definitional == fast on all e in {0..d}^len, d < d_limit.
bool shadow_equivalence_holds(uint32_t p, uint32_t d_limit, int max_len);

// A set of degree vectors in {0..Q-1}^m with q-shift-orbit structure.
// Stored as a dense membership mask indexed by packed degree, so iteration
// order is lexicographic.
class DegreeSet {
 public:
  DegreeSet(uint32_t Q, uint32_t q, int m);
  static DegreeSet full(uint32_t Q, uint32_t q, int m);
  static DegreeSet of_scalars(uint32_t Q, uint32_t q, const std::vector<uint32_t>& degrees);

  uint32_t Q() const { return Q_; }
  uint32_t q() const { return q_; }
  int m() const { return m_; }
  uint64_t domain() const { return mask_.size(); }
  size_t count() const { return count_; }

  bool contains(uint64_t packed) const { return mask_[packed] != 0; }
  void insert(uint64_t packed);
  const std::vector<uint8_t>& mask() const { return mask_; }

  std::vector<uint64_t> packed_list() const;  // ascending == lexicographic
  DegreeVec unpack(uint64_t packed) const;
  uint64_t pack(const DegreeVec& d) const;

  bool q_shift_closed() const;
  bool p_shadow_closed(uint32_t p) const;

  struct Orbit {
    uint64_t rep;                   // lexicographically least member
    std::vector<uint64_t> members;  // ascending
    int size;
  };
  std::vector<Orbit> orbit_decomposition() const;

  bool operator==(const DegreeSet& o) const {
    return Q_ == o.Q_ && m_ == o.m_ && mask_ == o.mask_;
  }

 private:
  uint32_t Q_, q_;
  int m_;
  std::vector<uint8_t> mask_;
  size_t count_;
};

// Coordinatewise d -> q*d modstar Q orbit of a packed degree vector.
struct ShiftOrbit {
  std::vector<uint64_t> members;  // ascending
  int size;
};
ShiftOrbit q_shift_orbit(uint64_t packed, uint32_t q, uint32_t Q, int m);
uint64_t q_shift_once(uint64_t packed, uint32_t q, uint32_t Q, int m);

// Lifted degree set of a univariate base set: all d in {0..Q-1}^m such that
// every e <=_p d has sum(e) modstar Q in D. Orbit pruning is applied when D
// is q-shift closed (membership is then orbit-invariant).
DegreeSet lift_degree_set_univariate(const DegreeSet& D, int m, Exec exec = Exec::kParallel);

// Multivariate lift: all d such that every matrix E with row i <=_p d_i
// (vector shadow sense) has the column-sum vector, reduced modstar Q,
// inside D.
DegreeSet lift_degree_set_multivariate(const DegreeSet& D, int m, Exec exec = Exec::kParallel);

// |D| with the q-shift closure precondition enforced.
size_t dimension(const DegreeSet& D);

}  // namespace liftcode

#endif  // LIFTCODE_DEGREES_HPP_
