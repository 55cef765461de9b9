#ifndef LIFTCODE_GF_HPP_
#define LIFTCODE_GF_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "liftcode/errors.hpp"

namespace liftcode {

// Arithmetic context for the field tower F_p <= F_q <= F_Q with q = p^s and
// Q = q^n = p^(s*n). Elements are indices in [0, Q); the base-p digits of an
// index are the coefficients (little-endian) of the element's polynomial
// representation modulo a fixed irreducible of degree s*n over F_p.
//
// Immutable after construction; all operations are pure and safe to share
// across threads. Multiplication runs on log/antilog tables over a verified
// primitive element, so construction is limited to Q <= 2^16.
class FieldCtx {
 public:
  FieldCtx(uint32_t p, int s, int n);

  uint32_t p() const { return p_; }
  int s() const { return s_; }
  int n() const { return n_; }
  int ext_degree() const { return k_; }      // s*n
  uint32_t q() const { return q_; }          // p^s
  uint32_t order() const { return Q_; }      // p^(s*n)
  uint32_t primitive_element() const { return generator_; }
  const std::vector<uint32_t>& irreducible() const { return irreducible_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    return add_digits(a, b);
  }
  uint32_t neg(uint32_t a) const { return p_ == 2 ? a : neg_[a]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw FieldDomainError("inverse of zero");
    return exp_[Q_ - 1 - log_[a]];
  }
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  // x^e with the exponent reduced mod Q-1 for nonzero x; 0^0 = 1, 0^e = 0.
  uint32_t pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    uint64_t r = (log_[a] * (e % (Q_ - 1))) % (Q_ - 1);
    return exp_[r];
  }

  // Trace onto the subfield of order q' = p^j (j must divide s*n):
  // Tr(x) = x + x^q' + ... + x^(q'^(k/j - 1)). Result satisfies r^q' = r.
  uint32_t trace_to(uint32_t x, uint32_t subfield_order) const {
    return trace_tables_[divisor_slot(subfield_order)][x];
  }

  bool is_in_subfield(uint32_t x, uint32_t subfield_order) const {
    return subfield_masks_[divisor_slot(subfield_order)][x] != 0;
  }

  // All elements x with x^q' = x, in index order (zero first).
  const std::vector<uint32_t>& subfield_elements(uint32_t subfield_order) const {
    return subfield_elems_[divisor_slot(subfield_order)];
  }

  bool is_subfield_order(uint32_t subfield_order) const;

  // Little-endian base-p digit codecs ("01" over F_4 is the element x).
  std::string to_digits(uint32_t x) const;
  uint32_t from_digits(const std::string& digits) const;

  // Interpolation support: coeffs = Vinv * values and values = V * coeffs
  // where V[i][j] = elem_i^j. Built lazily, guarded at Q <= 1024.
  const std::vector<uint32_t>& vandermonde() const;
  const std::vector<uint32_t>& vandermonde_inverse() const;

 private:
  uint32_t add_digits(uint32_t a, uint32_t b) const;
  int divisor_slot(uint32_t subfield_order) const;
  void build_interp() const;

  uint32_t p_;
  int s_, n_, k_;
  uint32_t q_, Q_;
  std::vector<uint32_t> irreducible_;  // little-endian digits, monic, deg k
  uint32_t generator_;

  std::vector<uint32_t> exp_;  // size 2(Q-1), exp_[i] = g^i
  std::vector<uint32_t> log_;  // log_[0] unused
  std::vector<uint32_t> neg_;

  std::vector<int> divisors_;  // divisors j of k, ascending
  std::vector<std::vector<uint8_t>> subfield_masks_;
  std::vector<std::vector<uint32_t>> subfield_elems_;
  std::vector<std::vector<uint32_t>> trace_tables_;

  mutable std::once_flag interp_once_;
  mutable std::vector<uint32_t> vand_;
  mutable std::vector<uint32_t> vand_inv_;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// Shared, cached contexts. `field_ctx(p, s, n)` is the general entry point;
// `field_ctx_for_spec("2^4", s)` resolves a "p^k" specification string
// against the built-in irreducible table and splits the tower at s.
FieldCtxPtr field_ctx(uint32_t p, int s, int n);
std::pair<uint32_t, int> parse_field_spec(const std::string& spec);  // (p, k)

// A field element bound to its context. Thin wrapper over the index API;
// mixing elements from different contexts is a usage error.
class FieldElement {
 public:
  FieldElement(FieldCtxPtr ctx, uint32_t idx) : ctx_(std::move(ctx)), idx_(idx) {}

  uint32_t index() const { return idx_; }
  const FieldCtxPtr& ctx() const { return ctx_; }
  std::vector<uint32_t> coefficients() const;

  FieldElement operator+(const FieldElement& o) const { return bin(o, ctx_->add(idx_, o.idx_)); }
  FieldElement operator-(const FieldElement& o) const { return bin(o, ctx_->sub(idx_, o.idx_)); }
  FieldElement operator*(const FieldElement& o) const { return bin(o, ctx_->mul(idx_, o.idx_)); }
  FieldElement operator/(const FieldElement& o) const { return bin(o, ctx_->div(idx_, o.idx_)); }
  FieldElement inverse() const { return {ctx_, ctx_->inv(idx_)}; }
  FieldElement pow(uint64_t e) const { return {ctx_, ctx_->pow(idx_, e)}; }
  bool operator==(const FieldElement& o) const { return idx_ == o.idx_ && ctx_.get() == o.ctx_.get(); }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  FieldElement bin(const FieldElement& o, uint32_t r) const {
    if (ctx_.get() != o.ctx_.get())
      throw UsageError("field elements from different contexts");
    return {ctx_, r};
  }
  FieldCtxPtr ctx_;
  uint32_t idx_;
};

// Exposed for tests: trial-division irreducibility over F_p
// (divisors of degree <= deg/2), little-endian monic digit vectors.
bool poly_is_irreducible(const std::vector<uint32_t>& poly, uint32_t p);

}  // namespace liftcode

#endif  // LIFTCODE_GF_HPP_
