#include <doctest.h>

#include <set>

#include "liftcode/analysis.hpp"
#include "liftcode/local.hpp"

using namespace liftcode;

namespace {

// Independent minimum-weight oracle: enumerate every message through the
// public encoder, one full codeword at a time.
uint64_t naive_min_weight(const LiftedCode& code) {
  const auto& orbs = code.orbits();
  std::vector<std::vector<uint32_t>> choices;
  for (const auto& o : orbs)
    choices.push_back(code.ctx()->subfield_elements(o.coeff_field_order));
  std::vector<size_t> pos(orbs.size(), 0);
  uint64_t best = UINT64_MAX;
  for (;;) {
    size_t k = 0;
    while (k < orbs.size() && ++pos[k] == choices[k].size()) pos[k++] = 0;
    if (k == orbs.size()) break;
    std::vector<uint32_t> msg(orbs.size());
    for (size_t i = 0; i < orbs.size(); ++i) msg[i] = choices[i][pos[i]];
    best = std::min(best, code.encode(msg).weight());
  }
  return best;
}

LiftedCode lifted_parity(uint32_t p, int s, int n, int m) {
  return LiftedCode(base_parity_univariate(field_ctx(p, s, n)), m);
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("base {0,1,2} over F_4 -> F_2 has distance exactly 1/2") {
  auto f4 = field_ctx(2, 1, 2);
  BaseCode base = base_parity_univariate(f4);
  auto res = min_distance_exhaustive(base);
  CHECK(res.min_weight == 2);
  CHECK(res.length == 4);
  CHECK(res.delta.num == 1);
  CHECK(res.delta.den == 2);
}

TEST_CASE("its 2-lift has distance exactly 3/8 (128 codewords x 16 points)") {
  LiftedCode code = lifted_parity(2, 1, 2, 2);
  auto res = min_distance_exhaustive(code);
  CHECK(res.dim == 7);
  CHECK(res.min_weight == 6);
  CHECK(res.delta.num == 3);
  CHECK(res.delta.den == 8);
  CHECK(res.min_weight == naive_min_weight(code));
}

TEST_CASE("gray-code enumeration matches the naive oracle on assorted codes") {
  // binary value fields, single- and multi-word lengths
  CHECK(min_distance_exhaustive(lifted_parity(2, 1, 2, 3)).min_weight ==
        naive_min_weight(lifted_parity(2, 1, 2, 3)));
  CHECK(min_distance_exhaustive(lifted_parity(2, 1, 3, 2)).min_weight == 10);

  // a base without the constant function (no complement pairing)
  auto f4 = field_ctx(2, 1, 2);
  BaseCode no_const{f4, 1, 2, DegreeSet::of_scalars(4, 2, {1, 2, 3}), CheckerKind::kNone, 0};
  LiftedCode code(no_const, 1);
  CHECK(min_distance_exhaustive(code).min_weight == naive_min_weight(code));

  // odometer path over F3 and F4 value fields
  auto f3 = field_ctx(3, 1, 1);
  BaseCode affine3{f3, 1, 3, DegreeSet::of_scalars(3, 3, {0, 1}), CheckerKind::kNone, 0};
  LiftedCode lifted3(affine3, 2);
  auto res3 = min_distance_exhaustive(lifted3);
  CHECK(res3.min_weight == naive_min_weight(lifted3));
  CHECK(res3.delta.num == 2);  // affine functions on F_3^2 vanish on a line
  CHECK(res3.delta.den == 3);

  auto f4full = field_ctx(2, 2, 1);
  LiftedCode rs_lift(base_reed_solomon(f4full, 2), 2);
  CHECK(min_distance_exhaustive(rs_lift).min_weight == naive_min_weight(rs_lift));
}

TEST_CASE("serial and parallel enumeration agree") {
  LiftedCode code = lifted_parity(2, 1, 2, 3);
  CHECK(min_distance_exhaustive(code, 1ull << 24, Exec::kSerial).min_weight ==
        min_distance_exhaustive(code, 1ull << 24, Exec::kParallel).min_weight);
}

TEST_CASE("nontrivial affine-invariant codes have delta >= 2 Q^-m") {
  for (auto code : {lifted_parity(2, 1, 2, 2), lifted_parity(2, 1, 3, 2),
                    LiftedCode(base_reed_solomon(field_ctx(2, 4, 1), 12), 1)}) {
    auto res = min_distance_exhaustive(code, 1ull << 24);
    CHECK(res.min_weight >= 2);
  }
}

TEST_CASE("enumeration guard trips with a Monte-Carlo suggestion") {
  LiftedCode big = lifted_parity(2, 1, 3, 2);  // dim 37
  try {
    min_distance_exhaustive(big);  // default guard 2^24
    CHECK(false);
  } catch (const GuardError& e) {
    CHECK(std::string(e.what()).find("Monte-Carlo") != std::string::npos);
  }
}

TEST_CASE("distance theorem on the full base is degenerate but consistent") {
  auto f4 = field_ctx(2, 1, 2);
  BaseCode full{f4, 1, 2, DegreeSet::full(4, 2, 1), CheckerKind::kNone, 0};
  auto check = verify_distance_theorem(full, 2);
  CHECK_FALSE(check.degenerate);
  CHECK(check.delta_base.num * 4 == check.delta_base.den);       // 1/Q
  CHECK(check.delta_lift.num * 16 == check.delta_lift.den);      // Q^-m
  CHECK(check.part1_ok);
  CHECK(check.part2_ok);
  CHECK(check.general_lower_ok);
}

TEST_CASE("distance theorem on the paper's F_4 counterexample") {
  auto f4 = field_ctx(2, 1, 2);
  auto check = verify_distance_theorem(base_parity_univariate(f4), 2);
  CHECK(check.delta_base.num == 1);
  CHECK(check.delta_base.den == 2);
  CHECK(check.delta_lift.num == 3);
  CHECK(check.delta_lift.den == 8);
  CHECK(check.part1_ok);          // 3/8 <= 1/2
  CHECK(check.general_lower_ok);  // 3/8 > 1/2 - (1/2)/3 = 1/3
  CHECK_FALSE(check.small_field_applicable);  // Q = 4 is not in {2,3}
  CHECK(check.all_ok());
}

TEST_CASE("constants base: the averaging bound holds with equality at delta = 1") {
  auto f4 = field_ctx(2, 1, 2);
  BaseCode consts{f4, 1, 2, DegreeSet::of_scalars(4, 2, {0}), CheckerKind::kNone, 0};
  auto check = verify_distance_theorem(consts, 2);
  CHECK(check.delta_base.num == 1);
  CHECK(check.delta_base.den == 1);
  CHECK(check.delta_lift.num == 1);
  CHECK(check.delta_lift.den == 1);
  CHECK(check.all_ok());
}

TEST_CASE("valid degree sets are exactly those with affine-invariant families") {
  // Independent oracle: Fam(D) is affine-invariant iff composing its basis
  // functions with every univariate affine map stays inside Fam(D).
  for (auto ctx : {field_ctx(2, 1, 2), field_ctx(2, 1, 3)}) {
    const uint32_t Q = ctx->order();
    DegreeSet all = DegreeSet::full(Q, 2, 1);
    std::set<std::vector<uint32_t>> valid(
        [&] {
          auto v = valid_univariate_degree_sets(ctx);
          return std::set<std::vector<uint32_t>>(v.begin(), v.end());
        }());
    auto orbits = all.orbit_decomposition();
    for (uint64_t pick = 1; pick + 1 < (1ull << orbits.size()); ++pick) {
      DegreeSet D(Q, 2, 1);
      std::vector<uint32_t> degs;
      for (size_t i = 0; i < orbits.size(); ++i)
        if (pick >> i & 1)
          for (uint64_t mem : orbits[i].members) {
            D.insert(mem);
            degs.push_back(static_cast<uint32_t>(mem));
          }
      std::sort(degs.begin(), degs.end());

      bool invariant = true;
      BasisInfo basis = code_basis_tables(ctx, D, 2);
      for (const auto& row : basis.rows) {
        FuncTable f(ctx, 1, 2, row);
        for (uint32_t aa = 0; aa < Q && invariant; ++aa) {
          for (uint32_t bb = 0; bb < Q && invariant; ++bb) {
            AffineMap A(ctx, 1, {aa}, {bb});
            FuncTable composed = compose_affine(f, A);
            auto coeffs = coefficients_dense(composed);
            for (uint64_t d = 0; d < Q; ++d)
              if (coeffs[d] != 0 && !D.contains(d)) invariant = false;
          }
        }
        if (!invariant) break;
      }
      CHECK(invariant == (valid.count(degs) == 1));
    }
  }
}

TEST_CASE("distance sweep at Q=4: both valid proper sets pass") {
  auto f4 = field_ctx(2, 1, 2);
  auto sets = valid_univariate_degree_sets(f4);
  CHECK(sets == std::vector<std::vector<uint32_t>>{{0}, {0, 1, 2}});
  auto checks = distance_sweep(f4, 2);
  CHECK(checks.size() == 2);
  for (const auto& c : checks) {
    CHECK_FALSE(c.degenerate);
    CHECK(c.all_ok());
  }
}

TEST_CASE("distance sweep exercises the small-field case at Q=2 and Q=3") {
  auto f2 = field_ctx(2, 1, 1);
  auto checks2 = distance_sweep(f2, 3);
  REQUIRE(checks2.size() == 1);  // D = {0}
  CHECK(checks2[0].small_field_applicable);
  CHECK(checks2[0].all_ok());

  auto f3 = field_ctx(3, 1, 1);
  auto sets3 = valid_univariate_degree_sets(f3);
  CHECK(sets3 == std::vector<std::vector<uint32_t>>{{0}, {0, 1}});
  for (const auto& c : distance_sweep(f3, 2)) {
    CHECK(c.all_ok());
    if (c.base_degrees.size() == 2) {
      CHECK(c.small_field_applicable);  // delta = 2/3 > 1/3
      CHECK(c.small_field_ok);
    }
  }
}

TEST_CASE("oracle equivalence, exhaustive at Q=2, m=2") {
  auto rep = oracle_equivalence_exhaustive(lifted_parity(2, 1, 1, 2));
  CHECK(rep.equal);
  CHECK(rep.functions_checked == 16);
  CHECK(rep.members_by_degrees == 2);  // constants
  CHECK(rep.members_by_restriction == 2);
}

TEST_CASE("oracle equivalence guard") {
  CHECK_THROWS_AS(oracle_equivalence_exhaustive(lifted_parity(2, 1, 3, 2)), GuardError);
}

TEST_CASE("oracle equivalence, sampled, multivariate base") {
  LiftedCode code(base_parity_multivariate(field_ctx(2, 1, 2), 2), 3);
  auto rep = oracle_equivalence_sampled(code, 200, 200, 7);
  CHECK(rep.equal);
  CHECK(rep.functions_checked == 400);
}

TEST_CASE("affine closure: singular projections keep codewords inside") {
  auto f4 = field_ctx(2, 1, 2);
  LiftedCode code = lifted_parity(2, 1, 2, 2);
  AffineMap proj(f4, 2, {1, 0, 0, 0}, {0, 0});  // (x, y) -> (x, 0)
  CHECK_FALSE(proj.invertible());
  SplitRng rng(61);
  for (int trial = 0; trial < 64; ++trial) {
    FuncTable cw = code.encode(code.random_message(rng));
    CHECK(code.member_by_degrees(compose_affine(cw, proj)));
  }
}

TEST_CASE("affine closure scan at Q=2, m=2: all 64 maps, all codewords") {
  auto rep = verify_affine_closure(lifted_parity(2, 1, 1, 2));
  CHECK(rep.maps_checked == 64);
  CHECK(rep.codewords == 2);
  CHECK(rep.violations == 0);
}

TEST_CASE("nikodym basics") {
  CHECK(is_nikodym(PointSet::full(4, 2)));
  CHECK_FALSE(is_nikodym(PointSet::empty(4, 2)));
  CHECK(is_nikodym_reference(PointSet::full(4, 2)));
  CHECK_FALSE(is_nikodym_reference(PointSet::empty(4, 2)));
}

TEST_CASE("nikodym bound examples") {
  CHECK(nikodym_lower_bound(2, 2) == 1);
  CHECK(nikodym_lower_bound(4, 2) == 7);
}

TEST_CASE("projective-direction check agrees with the all-directions reference") {
  SplitRng rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    PointSet S = PointSet::empty(4, 2);
    uint64_t size = rng.below(17);
    for (uint64_t p : rng.sample_distinct(16, size)) S.insert(p);
    CHECK(is_nikodym(S) == is_nikodym_reference(S));
  }
}

TEST_CASE("supersets of Nikodym sets are Nikodym") {
  SplitRng rng(73);
  PointSet S = greedy_minimal_nikodym(4, 2);
  CHECK(is_nikodym(S));
  CHECK(S.count >= nikodym_lower_bound(4, 2));
  for (int extra = 0; extra < 5; ++extra) {
    PointSet T = S;
    for (uint64_t p : rng.sample_distinct(16, extra)) T.insert(p);
    CHECK(is_nikodym(T));
  }
}

TEST_CASE("a greedily found 6-point removal leaves a 10-point set; both checks agree") {
  // complement of a fixed 6-point set in F_4^2
  PointSet S = PointSet::full(4, 2);
  for (uint64_t p : {0ull, 1ull, 2ull, 3ull, 4ull, 8ull}) S.erase(p);
  CHECK(S.count == 10);
  CHECK(is_nikodym(S) == is_nikodym_reference(S));
}

TEST_CASE("subset scan at q=2, m=2 counts Nikodym sets correctly") {
  // |S| = 1 can never cover its own point's punctured line
  auto res1 = nikodym_scan_subsets(2, 2, 1);
  CHECK(res1.subsets_checked == 4);
  CHECK(res1.nikodym_found == 0);
  // every 2-subset works over F_2^2: some other point lies on a line
  auto res2 = nikodym_scan_subsets(2, 2, 2);
  CHECK(res2.subsets_checked == 6);
  CHECK(res2.nikodym_found == 6);
  // cross-check a small scan against direct enumeration at q=4
  auto res3 = nikodym_scan_subsets(4, 2, 2, Exec::kSerial);
  CHECK(res3.subsets_checked == 120);
  CHECK(res3.nikodym_found == 0);  // bound is 7
  CHECK(nikodym_scan_subsets(4, 2, 2, Exec::kParallel).nikodym_found == 0);
}

TEST_CASE("greedy minimal sets stay above the dimension bound") {
  for (uint32_t q : {2u, 4u}) {
    PointSet S = greedy_minimal_nikodym(q, 2);
    CHECK(is_nikodym_reference(S));
    CHECK(S.count >= nikodym_lower_bound(q, 2));
  }
}

}  // TEST_SUITE
