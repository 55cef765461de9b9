#ifndef LIFTCODE_SPACE_HPP_
#define LIFTCODE_SPACE_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "liftcode/gf.hpp"
#include "liftcode/rng.hpp"

namespace liftcode {

using Point = std::vector<uint32_t>;        // coordinates in F_Q^m
using DegreeVec = std::vector<uint32_t>;    // exponent vector in {0..Q-1}^m

// Canonical domain ordering: index = ((x_1*Q + x_2)*Q + ...)*Q + x_m,
// i.e. row-major with the first coordinate most significant. Degree vectors
// are packed the same way, so packed order equals lexicographic order.
uint64_t pack_point(const FieldCtx& ctx, const Point& x);
Point unpack_point(const FieldCtx& ctx, int m, uint64_t idx);

uint64_t domain_size(const FieldCtx& ctx, int m);

// A function F_Q^m -> F_{value_order} stored as a dense evaluation table.
// Values are F_Q element indices that must lie in the declared value
// subfield. Immutable by convention once filled; operations below are pure.
class FuncTable {
 public:
  FuncTable(FieldCtxPtr ctx, int m, uint32_t value_order);
  FuncTable(FieldCtxPtr ctx, int m, uint32_t value_order, std::vector<uint32_t> values);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int m() const { return m_; }
  uint32_t value_order() const { return value_order_; }
  uint64_t size() const { return values_.size(); }
  const std::vector<uint32_t>& values() const { return values_; }
  std::vector<uint32_t>& mutable_values() { return values_; }

  uint32_t at(uint64_t idx) const { return values_[idx]; }
  uint32_t at(const Point& x) const { return values_[pack_point(*ctx_, x)]; }
  void set(uint64_t idx, uint32_t v) { values_[idx] = v; }

  // True if every stored value lies in the declared value subfield.
  bool values_in_declared_field() const;

  uint64_t weight() const;  // number of nonzero positions

  bool operator==(const FuncTable& o) const {
    return ctx_.get() == o.ctx_.get() && m_ == o.m_ && values_ == o.values_;
  }

 private:
  FieldCtxPtr ctx_;
  int m_;
  uint32_t value_order_;
  std::vector<uint32_t> values_;
};

// Affine map x -> M*x + b on F_Q^m. The invertibility flag is computed from
// the rank of M at construction.
class AffineMap {
 public:
  AffineMap(FieldCtxPtr ctx, int m, std::vector<uint32_t> matrix, Point translation);

  int m() const { return m_; }
  bool invertible() const { return invertible_; }
  const std::vector<uint32_t>& matrix() const { return matrix_; }
  const Point& translation() const { return translation_; }
  Point apply(const Point& x) const;

 private:
  FieldCtxPtr ctx_;
  int m_;
  std::vector<uint32_t> matrix_;  // row-major m x m
  Point translation_;
  bool invertible_;
};

// A t-dimensional affine subspace of F_Q^m: base point plus an ordered,
// linearly independent basis. The canonical parameterization used by
// restrictions is u -> base + sum u_i basis_i. For affine-invariant families
// the choice of parameterization is immaterial; we fix this one.
class AffineSubspace {
 public:
  AffineSubspace(FieldCtxPtr ctx, Point base, std::vector<Point> basis);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int m() const { return static_cast<int>(base_.size()); }
  int t() const { return static_cast<int>(basis_.size()); }
  const Point& base() const { return base_; }
  const std::vector<Point>& basis() const { return basis_; }

  Point point_at(const Point& u) const;  // base + sum u_i basis_i

  // Domain indices of all Q^t subspace points, in parameter order.
  std::vector<uint64_t> point_indices() const;

 private:
  FieldCtxPtr ctx_;
  Point base_;
  std::vector<Point> basis_;
};

// Rank of a set of vectors over F_Q (Gaussian elimination).
int rank_of(const FieldCtx& ctx, std::vector<Point> rows);

// f restricted to V, as a table over F_Q^t under the canonical isomorphism.
FuncTable restrict_to(const FuncTable& f, const AffineSubspace& V);

// The unique coefficient representation with per-variable degree < Q,
// computed by per-axis interpolation against the inverse Vandermonde.
// Returns only the nonzero coefficients, keyed by packed degree.
std::map<uint64_t, uint32_t> coefficients(const FuncTable& f);

// Dense variant of the above (length Q^m, indexed by packed degree).
std::vector<uint32_t> coefficients_dense(const FuncTable& f);

// Pointwise evaluation of a coefficient map; left inverse of coefficients().
FuncTable evaluate_poly(const std::map<uint64_t, uint32_t>& coeffs, FieldCtxPtr ctx, int m,
                        uint32_t value_order);
FuncTable evaluate_poly_dense(const std::vector<uint32_t>& coeffs, FieldCtxPtr ctx, int m,
                              uint32_t value_order);

// Packed degrees with nonzero coefficient.
std::vector<uint64_t> support(const FuncTable& f);

// x -> Tr_{Q -> value_order}(lambda * x^d).
FuncTable monomial_trace_function(FieldCtxPtr ctx, uint32_t lambda, const DegreeVec& d,
                                  uint32_t value_order);

// Uniformly random t-dimensional subspace through x (basis sampled by
// rejection until linearly independent).
AffineSubspace random_subspace_through(FieldCtxPtr ctx, const Point& x, int t, SplitRng& rng);

FuncTable compose_affine(const FuncTable& f, const AffineMap& A);

// Every t-dimensional affine subspace of F_Q^m, each exactly once, in a
// deterministic order. Bases are reduced row-echelon canonical; base points
// are the lexicographically least point of each coset.
std::vector<AffineSubspace> all_affine_subspaces(FieldCtxPtr ctx, int m, int t);

// Image subspace A(V) for invertible A.
AffineSubspace map_subspace(const AffineMap& A, const AffineSubspace& V);

}  // namespace liftcode

#endif  // LIFTCODE_SPACE_HPP_
