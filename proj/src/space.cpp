#include "liftcode/space.hpp"

#include <algorithm>
#include <set>

namespace liftcode {

uint64_t pack_point(const FieldCtx& ctx, const Point& x) {
  uint64_t idx = 0;
  for (uint32_t c : x) idx = idx * ctx.order() + c;
  return idx;
}

Point unpack_point(const FieldCtx& ctx, int m, uint64_t idx) {
  Point x(m);
  for (int i = m; i-- > 0;) {
    x[i] = static_cast<uint32_t>(idx % ctx.order());
    idx /= ctx.order();
  }
  return x;
}

uint64_t domain_size(const FieldCtx& ctx, int m) {
  uint64_t n = 1;
  for (int i = 0; i < m; ++i) n *= ctx.order();
  return n;
}

FuncTable::FuncTable(FieldCtxPtr ctx, int m, uint32_t value_order)
    : ctx_(std::move(ctx)), m_(m), value_order_(value_order) {
  if (m < 1) throw UsageError("function arity must be positive");
  if (!ctx_->is_subfield_order(value_order_))
    throw UsageError("value field must be a subfield of F_Q");
  values_.assign(domain_size(*ctx_, m), 0);
}

FuncTable::FuncTable(FieldCtxPtr ctx, int m, uint32_t value_order, std::vector<uint32_t> values)
    : FuncTable(std::move(ctx), m, value_order) {
  if (values.size() != values_.size())
    throw UsageError("value vector must have length Q^m");
  values_ = std::move(values);
}

bool FuncTable::values_in_declared_field() const {
  for (uint32_t v : values_)
    if (!ctx_->is_in_subfield(v, value_order_)) return false;
  return true;
}

uint64_t FuncTable::weight() const {
  uint64_t w = 0;
  for (uint32_t v : values_) w += (v != 0);
  return w;
}

int rank_of(const FieldCtx& ctx, std::vector<Point> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    uint32_t d = ctx.inv(rows[rank][c]);
    for (int j = 0; j < cols; ++j) rows[rank][j] = ctx.mul(rows[rank][j], d);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      uint32_t f = rows[r][c];
      for (int j = 0; j < cols; ++j)
        rows[r][j] = ctx.sub(rows[r][j], ctx.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

AffineMap::AffineMap(FieldCtxPtr ctx, int m, std::vector<uint32_t> matrix, Point translation)
    : ctx_(std::move(ctx)), m_(m), matrix_(std::move(matrix)), translation_(std::move(translation)) {
  if (matrix_.size() != static_cast<size_t>(m_) * m_ || translation_.size() != static_cast<size_t>(m_))
    throw UsageError("affine map shape mismatch");
  std::vector<Point> rows(m_);
  for (int i = 0; i < m_; ++i)
    rows[i] = Point(matrix_.begin() + static_cast<size_t>(i) * m_,
                    matrix_.begin() + static_cast<size_t>(i + 1) * m_);
  invertible_ = rank_of(*ctx_, rows) == m_;
}

Point AffineMap::apply(const Point& x) const {
  if (x.size() != static_cast<size_t>(m_)) throw UsageError("point dimension mismatch");
  Point y(m_);
  for (int i = 0; i < m_; ++i) {
    uint32_t acc = translation_[i];
    for (int j = 0; j < m_; ++j)
      acc = ctx_->add(acc, ctx_->mul(matrix_[static_cast<size_t>(i) * m_ + j], x[j]));
    y[i] = acc;
  }
  return y;
}

AffineSubspace::AffineSubspace(FieldCtxPtr ctx, Point base, std::vector<Point> basis)
    : ctx_(std::move(ctx)), base_(std::move(base)), basis_(std::move(basis)) {
  const int m = static_cast<int>(base_.size());
  if (static_cast<int>(basis_.size()) > m)
    throw UsageError("subspace dimension exceeds ambient dimension");
  for (const auto& b : basis_)
    if (b.size() != base_.size()) throw UsageError("basis vector dimension mismatch");
  if (rank_of(*ctx_, basis_) != static_cast<int>(basis_.size()))
    throw UsageError("subspace basis is rank deficient");
}

Point AffineSubspace::point_at(const Point& u) const {
  if (u.size() != basis_.size()) throw UsageError("parameter dimension mismatch");
  Point x = base_;
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (u[i] == 0) continue;
    for (size_t j = 0; j < x.size(); ++j)
      x[j] = ctx_->add(x[j], ctx_->mul(u[i], basis_[i][j]));
  }
  return x;
}

std::vector<uint64_t> AffineSubspace::point_indices() const {
  const uint32_t Q = ctx_->order();
  const uint64_t n = domain_size(*ctx_, t());
  std::vector<uint64_t> idx(n);
  Point u(t(), 0);
  for (uint64_t i = 0; i < n; ++i) {
    idx[i] = pack_point(*ctx_, point_at(u));
    // odometer over parameters, last coordinate fastest
    for (int k = t(); k-- > 0;) {
      if (++u[k] < Q) break;
      u[k] = 0;
    }
  }
  return idx;
}

FuncTable restrict_to(const FuncTable& f, const AffineSubspace& V) {
  if (V.m() != f.m() || V.ctx().get() != f.ctx().get())
    throw UsageError("subspace does not live in the function's domain");
  FuncTable g(f.ctx(), V.t(), f.value_order());
  auto idx = V.point_indices();
  for (uint64_t i = 0; i < idx.size(); ++i) g.set(i, f.at(idx[i]));
  return g;
}

namespace {

// Apply M (Q x Q, row-major) along one axis of a dense Q^m block.
void transform_axis(const FieldCtx& ctx, std::vector<uint32_t>& data, int m, int axis,
                    const std::vector<uint32_t>& M) {
  const uint32_t Q = ctx.order();
  uint64_t stride = 1;
  for (int i = m - 1; i > axis; --i) stride *= Q;
  const uint64_t block = stride * Q;
  const uint64_t total = data.size();
  std::vector<uint32_t> line(Q), out(Q);
  for (uint64_t start = 0; start < total; start += block) {
    for (uint64_t off = 0; off < stride; ++off) {
      for (uint32_t i = 0; i < Q; ++i) line[i] = data[start + off + i * stride];
      for (uint32_t i = 0; i < Q; ++i) {
        uint32_t acc = 0;
        const uint32_t* row = &M[static_cast<size_t>(i) * Q];
        for (uint32_t j = 0; j < Q; ++j)
          if (line[j] != 0 && row[j] != 0) acc = ctx.add(acc, ctx.mul(row[j], line[j]));
        out[i] = acc;
      }
      for (uint32_t i = 0; i < Q; ++i) data[start + off + i * stride] = out[i];
    }
  }
}

}  // namespace

std::vector<uint32_t> coefficients_dense(const FuncTable& f) {
  const auto& ctx = *f.ctx();
  std::vector<uint32_t> data = f.values();
  const auto& Vinv = ctx.vandermonde_inverse();
  for (int axis = 0; axis < f.m(); ++axis) transform_axis(ctx, data, f.m(), axis, Vinv);
  return data;
}

std::map<uint64_t, uint32_t> coefficients(const FuncTable& f) {
  auto dense = coefficients_dense(f);
  std::map<uint64_t, uint32_t> out;
  for (uint64_t d = 0; d < dense.size(); ++d)
    if (dense[d] != 0) out[d] = dense[d];
  return out;
}

FuncTable evaluate_poly_dense(const std::vector<uint32_t>& coeffs, FieldCtxPtr ctx, int m,
                              uint32_t value_order) {
  if (coeffs.size() != domain_size(*ctx, m))
    throw UsageError("dense coefficient block must have length Q^m");
  std::vector<uint32_t> data = coeffs;
  const auto& V = ctx->vandermonde();
  for (int axis = 0; axis < m; ++axis) transform_axis(*ctx, data, m, axis, V);
  return FuncTable(std::move(ctx), m, value_order, std::move(data));
}

FuncTable evaluate_poly(const std::map<uint64_t, uint32_t>& coeffs, FieldCtxPtr ctx, int m,
                        uint32_t value_order) {
  const uint64_t n = domain_size(*ctx, m);
  std::vector<uint32_t> dense(n, 0);
  for (const auto& [deg, c] : coeffs) {
    if (deg >= n) throw UsageError("degree vector out of range");
    dense[deg] = c;
  }
  return evaluate_poly_dense(dense, std::move(ctx), m, value_order);
}

std::vector<uint64_t> support(const FuncTable& f) {
  std::vector<uint64_t> out;
  auto dense = coefficients_dense(f);
  for (uint64_t d = 0; d < dense.size(); ++d)
    if (dense[d] != 0) out.push_back(d);
  return out;
}

FuncTable monomial_trace_function(FieldCtxPtr ctx, uint32_t lambda, const DegreeVec& d,
                                  uint32_t value_order) {
  const int m = static_cast<int>(d.size());
  for (uint32_t di : d)
    if (di >= ctx->order()) throw UsageError("degree out of range");
  FuncTable f(ctx, m, value_order);
  const uint64_t n = f.size();
  for (uint64_t i = 0; i < n; ++i) {
    Point x = unpack_point(*ctx, m, i);
    uint32_t mono = lambda;
    for (int j = 0; j < m && mono != 0; ++j) mono = ctx->mul(mono, ctx->pow(x[j], d[j]));
    f.set(i, ctx->trace_to(mono, value_order));
  }
  return f;
}

AffineSubspace random_subspace_through(FieldCtxPtr ctx, const Point& x, int t, SplitRng& rng) {
  const int m = static_cast<int>(x.size());
  if (t > m) throw UsageError("subspace dimension exceeds ambient dimension");
  const uint32_t Q = ctx->order();
  for (;;) {
    std::vector<Point> basis(t, Point(m));
    for (auto& b : basis)
      for (auto& c : b) c = static_cast<uint32_t>(rng.below(Q));
    if (rank_of(*ctx, basis) == t) return AffineSubspace(ctx, x, std::move(basis));
  }
}

FuncTable compose_affine(const FuncTable& f, const AffineMap& A) {
  if (A.m() != f.m()) throw UsageError("affine map dimension mismatch");
  FuncTable g(f.ctx(), f.m(), f.value_order());
  const uint64_t n = f.size();
  for (uint64_t i = 0; i < n; ++i) {
    Point x = unpack_point(*f.ctx(), f.m(), i);
    g.set(i, f.at(A.apply(x)));
  }
  return g;
}

namespace {

// Reduced row echelon form over F_Q; rows are returned sorted so that equal
// row spaces produce identical vectors.
std::vector<Point> rref(const FieldCtx& ctx, std::vector<Point> rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    uint32_t d = ctx.inv(rows[rank][c]);
    for (int j = 0; j < cols; ++j) rows[rank][j] = ctx.mul(rows[rank][j], d);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      uint32_t f = rows[r][c];
      for (int j = 0; j < cols; ++j)
        rows[r][j] = ctx.sub(rows[r][j], ctx.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

std::vector<AffineSubspace> all_affine_subspaces(FieldCtxPtr ctx, int m, int t) {
  if (t < 1 || t > m) throw UsageError("subspace dimension out of range");
  const uint64_t n = domain_size(*ctx, m);

  // Enumerate direction spaces once via RREF canonicalization of all
  // independent t-tuples. Desk-scale only; guarded by the domain size.
  if (n > (1u << 22)) throw GuardError("subspace enumeration limited to Q^m <= 2^22", 1u << 22, n);

  std::set<std::vector<Point>> dir_spaces;
  std::vector<uint64_t> tuple(t);
  // odometer over t nonzero vector indices
  const uint64_t npts = n;
  std::vector<Point> vecs(t, Point(m));
  auto rec = [&](auto&& self, int depth, uint64_t start) -> void {
    if (depth == t) {
      std::vector<Point> basis = vecs;
      if (rank_of(*ctx, basis) != t) return;
      dir_spaces.insert(rref(*ctx, basis));
      return;
    }
    for (uint64_t v = start; v < npts; ++v) {
      vecs[depth] = unpack_point(*ctx, m, v);
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 1);  // skip the zero vector

  std::vector<AffineSubspace> out;
  std::vector<uint8_t> covered(n);
  for (const auto& basis : dir_spaces) {
    std::fill(covered.begin(), covered.end(), 0);
    for (uint64_t base = 0; base < n; ++base) {
      if (covered[base]) continue;
      Point b = unpack_point(*ctx, m, base);
      AffineSubspace V(ctx, b, basis);
      for (uint64_t off : V.point_indices()) covered[off] = 1;
      out.push_back(std::move(V));
    }
  }
  return out;
}

AffineSubspace map_subspace(const AffineMap& A, const AffineSubspace& V) {
  if (!A.invertible()) throw UsageError("subspace image requires an invertible map");
  Point base = A.apply(V.base());
  std::vector<Point> basis;
  const auto& ctx = *V.ctx();
  Point zero(V.m(), 0);
  for (const auto& b : V.basis()) {
    // linear part only: A(b) - A(0)
    Point img = A.apply(b);
    Point org = A.apply(zero);
    Point lin(V.m());
    for (int j = 0; j < V.m(); ++j) lin[j] = ctx.sub(img[j], org[j]);
    basis.push_back(std::move(lin));
  }
  return AffineSubspace(V.ctx(), std::move(base), std::move(basis));
}

}  // namespace liftcode
