#include "liftcode/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace liftcode {
namespace {

// Built-in monic irreducibles over F_p (little-endian digits), one per
// supported extension degree. Each entry is re-verified by trial division
// when a context is constructed.
const std::map<std::pair<uint32_t, int>, std::vector<uint32_t>>& poly_table() {
  static const std::map<std::pair<uint32_t, int>, std::vector<uint32_t>> table = {
      {{2, 1}, {0, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{2, 10}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 12}, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 13}, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 14}, {1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
      {{2, 15}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 16}, {1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
      {{3, 1}, {0, 1}},
      {{3, 2}, {1, 0, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 1, 0, 0, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 1, 0, 0, 0, 0, 1}},
      {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
      {{3, 8}, {2, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{3, 9}, {1, 0, 0, 0, 0, 0, 2, 1, 0, 1}},
      {{3, 10}, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {{5, 1}, {0, 1}},
      {{5, 2}, {2, 0, 1}},
      {{5, 3}, {1, 1, 0, 1}},
      {{5, 4}, {1, 0, 1, 1, 1}},
      {{5, 5}, {1, 0, 0, 0, 4, 1}},
      {{5, 6}, {2, 1, 0, 0, 0, 0, 1}},
  };
  return table;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Polynomial helpers over F_p, little-endian digit vectors.

std::vector<uint32_t> poly_mod(std::vector<uint32_t> r, const std::vector<uint32_t>& div,
                               uint32_t p) {
  const size_t d = div.size() - 1;
  while (r.size() > d) {
    uint32_t lead = r.back();
    if (lead != 0) {
      // div is monic
      size_t shift = r.size() - div.size();
      for (size_t i = 0; i < div.size(); ++i) {
        uint32_t v = r[shift + i] + (p - lead * div[i] % p) % p;
        r[shift + i] = v % p;
      }
    }
    r.pop_back();
  }
  return r;
}

std::vector<uint32_t> poly_mulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                  const std::vector<uint32_t>& mod, uint32_t p) {
  std::vector<uint32_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  auto r = poly_mod(std::move(prod), mod, p);
  r.resize(mod.size() - 1, 0);
  return r;
}

std::vector<uint32_t> digits_of(uint64_t idx, uint32_t p, int k) {
  std::vector<uint32_t> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = static_cast<uint32_t>(idx % p);
    idx /= p;
  }
  return d;
}

uint32_t index_of(const std::vector<uint32_t>& digits, uint32_t p) {
  uint64_t idx = 0;
  for (size_t i = digits.size(); i-- > 0;) idx = idx * p + digits[i];
  return static_cast<uint32_t>(idx);
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> f;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

bool poly_is_irreducible(const std::vector<uint32_t>& poly, uint32_t p) {
  const int k = static_cast<int>(poly.size()) - 1;
  if (k < 1 || poly.back() != 1) return false;
  if (k == 1) return true;
  // trial division against every monic polynomial of degree <= k/2
  for (int d = 1; d <= k / 2; ++d) {
    const uint64_t count = ipow(p, d);
    for (uint64_t c = 0; c < count; ++c) {
      std::vector<uint32_t> div = digits_of(c, p, d);
      div.push_back(1);
      auto r = poly_mod(poly, div, p);
      bool zero = std::all_of(r.begin(), r.end(), [](uint32_t v) { return v == 0; });
      if (zero) return false;
    }
  }
  return true;
}

FieldCtx::FieldCtx(uint32_t p, int s, int n) : p_(p), s_(s), n_(n), k_(s * n) {
  if (p != 2 && p != 3 && p != 5) throw UsageError("unsupported characteristic (p in {2,3,5})");
  if (s < 1 || n < 1) throw UsageError("extension degrees must be positive");
  auto it = poly_table().find({p, k_});
  if (it == poly_table().end())
    throw UsageError("no built-in irreducible for p=" + std::to_string(p) +
                     ", degree " + std::to_string(k_));
  irreducible_ = it->second;
  if (!poly_is_irreducible(irreducible_, p))
    throw FieldDomainError("built-in polynomial failed irreducibility check");

  uint64_t Q64 = ipow(p, k_);
  if (Q64 > (1u << 16)) throw GuardError("field too large for table arithmetic", 1u << 16, Q64);
  Q_ = static_cast<uint32_t>(Q64);
  q_ = static_cast<uint32_t>(ipow(p, s));

  neg_.resize(Q_);
  for (uint32_t a = 0; a < Q_; ++a) {
    auto d = digits_of(a, p_, k_);
    for (auto& v : d) v = (p_ - v) % p_;
    neg_[a] = index_of(d, p_);
  }

  // Find a primitive element: order Q-1 checked against the prime
  // factorization of Q-1 using plain polynomial arithmetic, then freeze
  // log/antilog tables on it.
  auto poly_pow = [&](const std::vector<uint32_t>& base, uint64_t e) {
    std::vector<uint32_t> acc(k_, 0);
    acc[0] = 1;
    std::vector<uint32_t> b = base;
    while (e) {
      if (e & 1) acc = poly_mulmod(acc, b, irreducible_, p_);
      b = poly_mulmod(b, b, irreducible_, p_);
      e >>= 1;
    }
    return acc;
  };
  const auto factors = prime_factors(Q_ - 1);
  generator_ = 0;
  for (uint32_t cand = 2; cand < Q_ && generator_ == 0; ++cand) {
    if (Q_ == 2) { generator_ = 1; break; }
    auto poly = digits_of(cand, p_, k_);
    bool primitive = true;
    for (uint32_t f : factors) {
      auto r = poly_pow(poly, (Q_ - 1) / f);
      if (index_of(r, p_) == 1) { primitive = false; break; }
    }
    if (primitive) generator_ = cand;
  }
  if (Q_ > 2 && generator_ == 0) throw FieldDomainError("no primitive element found");

  exp_.assign(2 * (Q_ - 1), 0);
  log_.assign(Q_, 0);
  std::vector<uint32_t> cur(k_, 0);
  cur[0] = 1;
  auto gen_poly = digits_of(generator_, p_, k_);
  for (uint32_t i = 0; i < Q_ - 1; ++i) {
    uint32_t e = index_of(cur, p_);
    exp_[i] = e;
    exp_[i + (Q_ - 1)] = e;
    log_[e] = i;
    cur = poly_mulmod(cur, gen_poly, irreducible_, p_);
  }
  if (index_of(cur, p_) != 1)
    throw FieldDomainError("primitive element does not have order Q-1");

  // Subfield machinery for every divisor of k.
  for (int j = 1; j <= k_; ++j)
    if (k_ % j == 0) divisors_.push_back(j);
  subfield_masks_.resize(divisors_.size());
  subfield_elems_.resize(divisors_.size());
  trace_tables_.resize(divisors_.size());
  for (size_t slot = 0; slot < divisors_.size(); ++slot) {
    const int j = divisors_[slot];
    const uint32_t qp = static_cast<uint32_t>(ipow(p_, j));
    auto& mask = subfield_masks_[slot];
    auto& elems = subfield_elems_[slot];
    auto& tr = trace_tables_[slot];
    mask.assign(Q_, 0);
    tr.assign(Q_, 0);
    for (uint32_t x = 0; x < Q_; ++x) {
      if (pow(x, qp) == x) {
        mask[x] = 1;
        elems.push_back(x);
      }
      uint32_t acc = 0;
      uint64_t e = 1;
      for (int i = 0; i < k_ / j; ++i) {
        acc = add(acc, pow(x, e));
        e *= qp;
      }
      tr[x] = acc;
    }
  }
}

uint32_t FieldCtx::add_digits(uint32_t a, uint32_t b) const {
  uint32_t out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += mult * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

bool FieldCtx::is_subfield_order(uint32_t subfield_order) const {
  for (int j : divisors_)
    if (ipow(p_, j) == subfield_order) return true;
  return false;
}

int FieldCtx::divisor_slot(uint32_t subfield_order) const {
  for (size_t slot = 0; slot < divisors_.size(); ++slot)
    if (ipow(p_, divisors_[slot]) == subfield_order) return static_cast<int>(slot);
  throw UsageError("order " + std::to_string(subfield_order) + " is not a subfield of F_" +
                   std::to_string(Q_));
}

std::string FieldCtx::to_digits(uint32_t x) const {
  std::string out;
  out.reserve(k_);
  for (int i = 0; i < k_; ++i) {
    out.push_back(static_cast<char>('0' + x % p_));
    x /= p_;
  }
  return out;
}

uint32_t FieldCtx::from_digits(const std::string& digits) const {
  if (static_cast<int>(digits.size()) != k_)
    throw UsageError("element digit string must have length " + std::to_string(k_));
  uint64_t idx = 0;
  for (size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < '0' || digits[i] >= static_cast<char>('0' + p_))
      throw UsageError("digit out of range for characteristic " + std::to_string(p_));
    idx = idx * p_ + static_cast<uint32_t>(digits[i] - '0');
  }
  return static_cast<uint32_t>(idx);
}

void FieldCtx::build_interp() const {
  if (Q_ > 1024) throw GuardError("interpolation tables limited to Q <= 1024", 1024, Q_);
  vand_.assign(static_cast<size_t>(Q_) * Q_, 0);
  for (uint32_t i = 0; i < Q_; ++i)
    for (uint32_t j = 0; j < Q_; ++j) vand_[static_cast<size_t>(i) * Q_ + j] = pow(i, j);

  // Gauss-Jordan inversion of the Vandermonde matrix.
  std::vector<uint32_t> a = vand_;
  std::vector<uint32_t> inv(static_cast<size_t>(Q_) * Q_, 0);
  for (uint32_t i = 0; i < Q_; ++i) inv[static_cast<size_t>(i) * Q_ + i] = 1;
  for (uint32_t col = 0; col < Q_; ++col) {
    uint32_t piv = col;
    while (piv < Q_ && a[static_cast<size_t>(piv) * Q_ + col] == 0) ++piv;
    if (piv == Q_) throw FieldDomainError("singular Vandermonde matrix");
    if (piv != col) {
      for (uint32_t j = 0; j < Q_; ++j) {
        std::swap(a[static_cast<size_t>(piv) * Q_ + j], a[static_cast<size_t>(col) * Q_ + j]);
        std::swap(inv[static_cast<size_t>(piv) * Q_ + j], inv[static_cast<size_t>(col) * Q_ + j]);
      }
    }
    uint32_t d = this->inv(a[static_cast<size_t>(col) * Q_ + col]);
    for (uint32_t j = 0; j < Q_; ++j) {
      a[static_cast<size_t>(col) * Q_ + j] = mul(a[static_cast<size_t>(col) * Q_ + j], d);
      inv[static_cast<size_t>(col) * Q_ + j] = mul(inv[static_cast<size_t>(col) * Q_ + j], d);
    }
    for (uint32_t r = 0; r < Q_; ++r) {
      if (r == col) continue;
      uint32_t f = a[static_cast<size_t>(r) * Q_ + col];
      if (f == 0) continue;
      for (uint32_t j = 0; j < Q_; ++j) {
        a[static_cast<size_t>(r) * Q_ + j] =
            sub(a[static_cast<size_t>(r) * Q_ + j], mul(f, a[static_cast<size_t>(col) * Q_ + j]));
        inv[static_cast<size_t>(r) * Q_ + j] =
            sub(inv[static_cast<size_t>(r) * Q_ + j], mul(f, inv[static_cast<size_t>(col) * Q_ + j]));
      }
    }
  }
  vand_inv_ = std::move(inv);
}

const std::vector<uint32_t>& FieldCtx::vandermonde() const {
  std::call_once(interp_once_, [this] { build_interp(); });
  return vand_;
}

const std::vector<uint32_t>& FieldCtx::vandermonde_inverse() const {
  std::call_once(interp_once_, [this] { build_interp(); });
  return vand_inv_;
}

std::vector<uint32_t> FieldElement::coefficients() const {
  std::vector<uint32_t> d(ctx_->ext_degree());
  uint32_t x = idx_;
  for (auto& v : d) {
    v = x % ctx_->p();
    x /= ctx_->p();
  }
  return d;
}

FieldCtxPtr field_ctx(uint32_t p, int s, int n) {
  static std::mutex mu;
  static std::map<std::tuple<uint32_t, int, int>, FieldCtxPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, s, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const FieldCtx>(p, s, n);
  cache[key] = ctx;
  return ctx;
}

std::pair<uint32_t, int> parse_field_spec(const std::string& spec) {
  auto caret = spec.find('^');
  try {
    if (caret == std::string::npos) {
      // a plain prime power like "4" is not accepted; sizes are "p^k"
      unsigned long v = std::stoul(spec);
      return {static_cast<uint32_t>(v), 1};
    }
    unsigned long p = std::stoul(spec.substr(0, caret));
    unsigned long k = std::stoul(spec.substr(caret + 1));
    return {static_cast<uint32_t>(p), static_cast<int>(k)};
  } catch (const std::exception&) {
    throw UsageError("malformed field spec '" + spec + "' (expected p^k)");
  }
}

}  // namespace liftcode
