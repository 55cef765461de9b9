#include <doctest.h>

#include <set>

#include "liftcode/analysis.hpp"
#include "liftcode/codes.hpp"

using namespace liftcode;

namespace {

// All value-field functions on the code's domain, as tables.
std::vector<FuncTable> all_functions(const FieldCtxPtr& ctx, int m, uint32_t value_order) {
  const auto& elems = ctx->subfield_elements(value_order);
  const uint64_t n = domain_size(*ctx, m);
  uint64_t total = 1;
  for (uint64_t i = 0; i < n; ++i) total *= elems.size();
  std::vector<FuncTable> out;
  out.reserve(total);
  for (uint64_t fi = 0; fi < total; ++fi) {
    FuncTable f(ctx, m, value_order);
    uint64_t rest = fi;
    for (uint64_t i = 0; i < n; ++i) {
      f.set(i, elems[rest % elems.size()]);
      rest /= elems.size();
    }
    out.push_back(std::move(f));
  }
  return out;
}

// All codewords through encode, by enumerating every message.
std::vector<FuncTable> all_codewords(const LiftedCode& code) {
  const auto& orbs = code.orbits();
  std::vector<std::vector<uint32_t>> coeff_choices;
  for (const auto& o : orbs)
    coeff_choices.push_back(code.ctx()->subfield_elements(o.coeff_field_order));
  std::vector<FuncTable> out;
  std::vector<size_t> pos(orbs.size(), 0);
  for (;;) {
    std::vector<uint32_t> msg(orbs.size());
    for (size_t i = 0; i < orbs.size(); ++i) msg[i] = coeff_choices[i][pos[i]];
    out.push_back(code.encode(msg));
    size_t k = 0;
    while (k < orbs.size() && ++pos[k] == coeff_choices[k].size()) pos[k++] = 0;
    if (k == orbs.size()) break;
    if (orbs.empty()) break;
  }
  return out;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("parity base over F_2 is the constants code, checked against all 4 functions") {
  auto f2 = field_ctx(2, 1, 1);
  BaseCode base = base_parity_univariate(f2);
  CHECK(base.degrees.packed_list() == std::vector<uint64_t>{0});
  for (const auto& f : all_functions(f2, 1, 2)) {
    uint32_t sum = f2->add(f.at(uint64_t{0}), f.at(uint64_t{1}));
    CHECK(base.contains(f) == (sum == 0));
    CHECK(base.direct_check(f) == (sum == 0));
  }
}

TEST_CASE("parity base degree sets: {0..Q-2}") {
  auto f4 = field_ctx(2, 1, 2);
  CHECK(base_parity_univariate(f4).degrees.packed_list() == std::vector<uint64_t>{0, 1, 2});
  auto f8 = field_ctx(2, 1, 3);
  CHECK(base_parity_univariate(f8).degrees.count() == 7);
}

TEST_CASE("parity membership agrees with the sum checker exhaustively at Q <= 8") {
  for (auto ctx : {field_ctx(2, 1, 2), field_ctx(2, 1, 3)}) {
    BaseCode base = base_parity_univariate(ctx);
    size_t members = 0;
    for (const auto& f : all_functions(ctx, 1, 2)) {
      CHECK(base.contains(f) == base.direct_check(f));
      members += base.contains(f);
    }
    CHECK(members == (1u << base.degrees.count()));
  }
}

TEST_CASE("multivariate parity base") {
  auto f4 = field_ctx(2, 1, 2);
  BaseCode base = base_parity_multivariate(f4, 2);
  CHECK(base.degrees.count() == 15);  // all but (Q-1, Q-1)
  CHECK_FALSE(base.degrees.contains(3 * 4 + 3));

  // t = 1 reduces to the univariate parity code
  BaseCode uni = base_parity_multivariate(f4, 1);
  CHECK(uni.degrees == base_parity_univariate(f4).degrees);

  // membership agrees with the direct sum checker on random functions
  SplitRng rng(21);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    FuncTable f(f4, 2, 2);
    for (uint64_t i = 0; i < 16; ++i) f.set(i, static_cast<uint32_t>(rng.below(2)));
    CHECK(base.contains(f) == base.direct_check(f));
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("Reed-Solomon base") {
  auto f16 = field_ctx(2, 4, 1);
  BaseCode rs = base_reed_solomon(f16, 12);
  CHECK(rs.degrees.count() == 13);
  CHECK(rs.value_order == 16);
  CHECK_THROWS_AS(base_reed_solomon(f16, 15), UsageError);

  BaseCode consts = base_reed_solomon(f16, 0);
  for (uint32_t c : {0u, 5u}) {
    FuncTable f(f16, 1, 16, std::vector<uint32_t>(16, c));
    CHECK(consts.contains(f));
    CHECK(consts.direct_check(f));
  }
  FuncTable id(f16, 1, 16);
  for (uint32_t x = 0; x < 16; ++x) id.set(x, x);
  CHECK_FALSE(consts.contains(id));
  CHECK_FALSE(consts.direct_check(id));
}

TEST_CASE("lift with m = t is the base code") {
  auto f4 = field_ctx(2, 1, 2);
  LiftedCode same(base_parity_univariate(f4), 1);
  CHECK(same.degree_set() == base_parity_univariate(f4).degrees);
  LiftedCode plane(base_parity_multivariate(f4, 2), 2);
  CHECK(plane.degree_set() == base_parity_multivariate(f4, 2).degrees);
  CHECK_THROWS_AS(LiftedCode(base_parity_multivariate(f4, 2), 1), UsageError);
}

TEST_CASE("lifted parity dimensions") {
  auto f4 = field_ctx(2, 1, 2);
  CHECK(LiftedCode(base_parity_univariate(f4), 2).dimension() == 7);
  CHECK(LiftedCode(base_parity_multivariate(f4, 2), 3).dimension() == 48);
}

TEST_CASE("member: zero function, monomial traces, both modes") {
  auto f4 = field_ctx(2, 1, 2);
  LiftedCode code(base_parity_univariate(f4), 2);
  FuncTable zero(f4, 2, 2);
  CHECK(member(zero, code, MemberMode::kByDegrees));
  CHECK(member(zero, code, MemberMode::kByRestriction));

  // every monomial trace with degree in the lifted set is a codeword
  for (uint64_t packed : code.degree_set().packed_list()) {
    DegreeVec d = code.degree_set().unpack(packed);
    for (uint32_t lambda = 0; lambda < 4; ++lambda) {
      FuncTable f = monomial_trace_function(f4, lambda, d, 2);
      CHECK(member(f, code, MemberMode::kByDegrees));
      CHECK(member(f, code, MemberMode::kByRestriction));
    }
  }
  // and one outside the set is not
  FuncTable bad = monomial_trace_function(f4, 1, {1, 2}, 2);
  CHECK_FALSE(member(bad, code, MemberMode::kByDegrees));
  CHECK_FALSE(member(bad, code, MemberMode::kByRestriction));
}

TEST_CASE("mode agreement on random tables and codewords at Q=8, m=2") {
  auto f8 = field_ctx(2, 1, 3);
  LiftedCode code(base_parity_univariate(f8), 2);
  SplitRng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    FuncTable f(f8, 2, 2);
    for (uint64_t i = 0; i < 64; ++i) f.set(i, static_cast<uint32_t>(rng.below(2)));
    CHECK(code.member_by_degrees(f) == code.member_by_restriction(f));
  }
  for (int trial = 0; trial < 50; ++trial) {
    FuncTable cw = code.encode(code.random_message(rng));
    CHECK(code.member_by_degrees(cw));
    CHECK(code.member_by_restriction(cw));
  }
}

TEST_CASE("mode agreement at the multivariate base (Q=4, t=2, m=3), sampled") {
  auto f4 = field_ctx(2, 1, 2);
  LiftedCode code(base_parity_multivariate(f4, 2), 3);
  SplitRng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    FuncTable f(f4, 3, 2);
    for (uint64_t i = 0; i < 64; ++i) f.set(i, static_cast<uint32_t>(rng.below(2)));
    CHECK(code.member_by_degrees(f) == code.member_by_restriction(f));
  }
  for (int trial = 0; trial < 50; ++trial) {
    FuncTable cw = code.encode(code.random_message(rng));
    CHECK(code.member_by_degrees(cw));
    CHECK(code.member_by_restriction(cw));
  }
}

TEST_CASE("every codeword restriction passes the base's direct checker") {
  auto f4 = field_ctx(2, 1, 2);
  LiftedCode code(base_parity_univariate(f4), 2);
  for (const auto& cw : all_codewords(code))
    for (const auto& V : code.subspaces()) CHECK(code.base().direct_check(restrict_to(cw, V)));
}

TEST_CASE("encode: zero message, trace layout, injectivity") {
  auto f4 = field_ctx(2, 1, 2);
  LiftedCode uni(base_parity_univariate(f4), 1);
  const auto& orbs = uni.orbits();
  CHECK(orbs.size() == 2);  // {0} and {1,2}
  CHECK(orbs[0].rep == 0);
  CHECK(orbs[0].coeff_field_order == 2);
  CHECK(orbs[1].rep == 1);
  CHECK(orbs[1].coeff_field_order == 4);

  CHECK(uni.encode({0, 0}).weight() == 0);

  // single orbit {1,2} with coefficient w encodes to Tr(w x); compare against
  // a direct trace computation
  FuncTable g = uni.encode({0, 2});
  for (uint32_t x = 0; x < 4; ++x) CHECK(g.at(x) == f4->trace_to(f4->mul(2, x), 2));

  // coefficient outside its orbit subfield: the {0} orbit takes F_2 only
  CHECK_THROWS_AS(uni.encode({2, 0}), UsageError);
  CHECK_THROWS_AS(uni.encode({1}), UsageError);

  LiftedCode code(base_parity_univariate(f4), 2);
  auto words = all_codewords(code);
  CHECK(words.size() == 128);  // q^dim messages
  std::set<std::vector<uint32_t>> distinct;
  for (const auto& w : words) {
    CHECK(code.member_by_degrees(w));
    distinct.insert(w.values());
  }
  CHECK(distinct.size() == 128);  // injective
}

TEST_CASE("dimension equals log_q of the codeword count at Q=4, m=2") {
  auto f4 = field_ctx(2, 1, 2);
  LiftedCode code(base_parity_univariate(f4), 2);
  CHECK((1ull << code.dimension()) == all_codewords(code).size());
}

TEST_CASE("affine permutation invariance at Q=4, m=2 (sampled maps, all codewords)") {
  auto f4 = field_ctx(2, 1, 2);
  LiftedCode code(base_parity_univariate(f4), 2);
  auto words = all_codewords(code);
  SplitRng rng(51);
  int tested = 0;
  while (tested < 40) {
    std::vector<uint32_t> mat(4);
    Point trans(2);
    for (auto& v : mat) v = static_cast<uint32_t>(rng.below(4));
    for (auto& v : trans) v = static_cast<uint32_t>(rng.below(4));
    AffineMap A(f4, 2, mat, trans);
    if (!A.invertible()) continue;
    ++tested;
    for (const auto& w : words) CHECK(code.member_by_degrees(compose_affine(w, A)));
  }
}

TEST_CASE("construct theorem 1: k=4, m=5") {
  ConstructInputs in;
  in.theorem = 1;
  in.k = 4;
  in.m = 5;
  auto [params, code] = construct(in);
  CHECK(params.Q == 4);
  CHECK(params.N == 1024);
  CHECK(params.locality == 3);
  CHECK(params.claimed_dim_bound.num == 10);  // C(5, 2)
  CHECK(code.dimension() == 31);
  CHECK(code.dimension() >= 10);
  CHECK(params.c_k == doctest::Approx(1.0 / 384));  // 1 / (4^2 * 4!)
  in.k = 5;
  CHECK_THROWS_AS(construct(in), ParamError);
}

TEST_CASE("construct theorem 2: explicit overrides and derivations") {
  ConstructInputs in;
  in.theorem = 2;
  in.p = 3;
  in.ell = 2;
  in.m = 2;
  auto [params, code] = construct(in);
  CHECK(params.Q == 9);
  CHECK(params.q == 3);
  CHECK(params.N == 81);
  CHECK(params.locality == 8);
  CHECK(code.dimension() > 0);

  // derivation path: eps and N0
  ConstructInputs derived;
  derived.theorem = 2;
  derived.p = 2;
  derived.eps = 0.5;  // m = 2
  derived.N0 = 64;    // smallest ell with 2^(2 ell) >= 64 is 3
  auto [p2, c2] = construct(derived);
  CHECK(p2.m == 2);
  CHECK(p2.Q == 8);
  CHECK(p2.N == 64);
}

TEST_CASE("construct theorem 3: eps=1/4, m=3") {
  ConstructInputs in;
  in.theorem = 3;
  in.eps = 0.25;
  in.m = 3;
  auto [params, code] = construct(in);
  CHECK(params.ell == 2);
  CHECK(params.Q == 4);
  CHECK(params.t == 2);
  CHECK(params.N == 64);
  CHECK(params.claimed_dim_bound.num == 48);  // 2^6 - 4^2, exact
  CHECK(code.dimension() == 48);
  in.m = 1;
  CHECK_THROWS_AS(construct(in), ParamError);
}

TEST_CASE("construct theorem 4: desk-scale c=2, m=2, Q=16") {
  ConstructInputs in;
  in.theorem = 4;
  in.c = 2;
  in.s = 4;
  in.m = 2;
  auto [params, code] = construct(in);
  CHECK(params.Q == 16);
  CHECK(params.rs_degree == 12);  // (1 - 2^-2) * 16
  CHECK(params.gamma == doctest::Approx(0.25));
  CHECK(params.tau == doctest::Approx(1.0 / 24));
  CHECK(params.locality == 16);
  CHECK(params.N == 256);
  CHECK(params.claimed_dim_bound.num == 80);  // (5/16) * 256
  CHECK(params.claimed_dim_bound.den == 1);
  CHECK(code.dimension() == 109);
  CHECK(code.dimension() >= 80);
}

TEST_CASE("construct theorem 4: infeasible c > s names the constraint") {
  ConstructInputs in;
  in.theorem = 4;
  in.c = 7;
  in.s = 6;
  in.m = 2;
  try {
    construct(in);
    CHECK(false);
  } catch (const ParamError& e) {
    CHECK(e.constraint == "c <= s");
  }
}

TEST_CASE("rational helpers") {
  Rational r = make_rational(20, 64);
  CHECK(r.num == 5);
  CHECK(r.den == 16);
  CHECK(rational_cmp(make_rational(3, 8), make_rational(1, 2)) < 0);
  CHECK(rational_cmp(make_rational(1, 2), make_rational(2, 4)) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), UsageError);
}

}  // TEST_SUITE
