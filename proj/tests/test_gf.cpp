#include <doctest.h>

#include <map>
#include <set>

#include "liftcode/gf.hpp"

using namespace liftcode;

TEST_SUITE("gf") {

TEST_CASE("F4 multiplication: w * w = w + 1") {
  auto f4 = field_ctx(2, 1, 2);
  // indices: 0, 1, w = x (index 2), w^2 = x+1 (index 3)
  CHECK(f4->mul(2, 2) == 3);
  CHECK(f4->mul(2, 3) == 1);  // w * w^2 = w^3 = 1
}

TEST_CASE("multiplicative identity") {
  for (auto [p, s, n] : {std::tuple{2u, 1, 3}, {3u, 1, 2}, {5u, 1, 1}, {2u, 2, 2}}) {
    auto ctx = field_ctx(p, s, n);
    for (uint32_t a = 0; a < ctx->order(); ++a) CHECK(ctx->mul(a, 1) == a);
  }
}

TEST_CASE("a * inv(a) = 1 exhaustively over F_8") {
  auto f8 = field_ctx(2, 1, 3);
  for (uint32_t a = 1; a < 8; ++a) CHECK(f8->mul(a, f8->inv(a)) == 1);
}

TEST_CASE("inversion of zero is a domain error") {
  auto f4 = field_ctx(2, 1, 2);
  CHECK_THROWS_AS(f4->inv(0), FieldDomainError);
}

TEST_CASE("mismatched element contexts are a usage error") {
  FieldElement a(field_ctx(2, 1, 2), 1);
  FieldElement b(field_ctx(2, 1, 3), 1);
  CHECK_THROWS_AS(a + b, UsageError);
}

TEST_CASE("pow reduces exponents mod Q-1 and handles zero") {
  auto f8 = field_ctx(2, 1, 3);
  for (uint32_t a = 1; a < 8; ++a) {
    CHECK(f8->pow(a, 7) == 1);
    CHECK(f8->pow(a, 9) == f8->pow(a, 2));
  }
  CHECK(f8->pow(0, 0) == 1);
  CHECK(f8->pow(0, 5) == 0);
}

TEST_CASE("trace F4 -> F2 values") {
  auto f4 = field_ctx(2, 1, 2);
  CHECK(f4->trace_to(0, 2) == 0);
  CHECK(f4->trace_to(1, 2) == 0);  // 1 + 1 = 0
  CHECK(f4->trace_to(2, 2) == 1);  // w + w^2 = 1
  CHECK(f4->trace_to(3, 2) == 1);
}

TEST_CASE("trace lands in the target subfield and is F_q'-linear, surjective") {
  for (auto [p, s, n] : {std::tuple{2u, 1, 4}, {2u, 2, 2}, {3u, 1, 2}}) {
    auto ctx = field_ctx(p, s, n);
    const uint32_t q = ctx->q();
    std::set<uint32_t> image;
    for (uint32_t x = 0; x < ctx->order(); ++x) {
      uint32_t t = ctx->trace_to(x, q);
      CHECK(ctx->is_in_subfield(t, q));
      image.insert(t);
    }
    CHECK(image.size() == q);  // surjective
    for (uint32_t x = 0; x < ctx->order(); ++x)
      for (uint32_t y = 0; y < ctx->order(); ++y)
        CHECK(ctx->trace_to(ctx->add(x, y), q) ==
              ctx->add(ctx->trace_to(x, q), ctx->trace_to(y, q)));
  }
}

TEST_CASE("trace is (Q/q')-to-one onto the subfield") {
  auto ctx = field_ctx(2, 1, 4);  // F_16
  for (uint32_t sub : {2u, 4u}) {
    std::map<uint32_t, int> counts;
    for (uint32_t x = 0; x < 16; ++x) ++counts[ctx->trace_to(x, sub)];
    CHECK(counts.size() == sub);
    for (auto [val, cnt] : counts) {
      CHECK(ctx->is_in_subfield(val, sub));
      CHECK(cnt == static_cast<int>(16 / sub));
    }
  }
}

TEST_CASE("trace transitivity through middle subfields") {
  for (auto [p, s, n] : {std::tuple{2u, 1, 4}, {2u, 1, 6}, {3u, 1, 2}}) {
    auto ctx = field_ctx(p, s, n);
    const int k = ctx->ext_degree();
    for (int j = 2; j < k; ++j) {
      if (k % j != 0) continue;
      uint32_t mid = 1;
      for (int i = 0; i < j; ++i) mid *= p;
      for (uint32_t x = 0; x < ctx->order(); ++x)
        CHECK(ctx->trace_to(ctx->trace_to(x, mid), p) == ctx->trace_to(x, p));
    }
  }
}

TEST_CASE("Frobenius: (a+b)^p = a^p + b^p exhaustively at Q <= 64") {
  for (auto [p, s, n] : {std::tuple{2u, 1, 2}, {2u, 1, 3}, {2u, 2, 1}, {2u, 1, 6},
                         {3u, 1, 2}, {5u, 1, 2}}) {
    auto ctx = field_ctx(p, s, n);
    for (uint32_t a = 0; a < ctx->order(); ++a)
      for (uint32_t b = 0; b < ctx->order(); ++b)
        CHECK(ctx->pow(ctx->add(a, b), p) == ctx->add(ctx->pow(a, p), ctx->pow(b, p)));
  }
}

TEST_CASE("subfield membership") {
  auto f4 = field_ctx(2, 1, 2);
  CHECK(f4->is_in_subfield(0, 2));
  CHECK(f4->is_in_subfield(1, 2));
  CHECK_FALSE(f4->is_in_subfield(2, 2));  // w^2 = w + 1 != w
  for (uint32_t x = 0; x < 4; ++x) CHECK(f4->is_in_subfield(x, 4));
  CHECK_THROWS_AS(f4->is_in_subfield(0, 3), UsageError);
  CHECK(f4->subfield_elements(2) == std::vector<uint32_t>{0, 1});
}

TEST_CASE("built-in irreducibles pass trial division; reducibles fail") {
  CHECK(poly_is_irreducible({1, 1, 1}, 2));        // x^2+x+1
  CHECK(poly_is_irreducible({1, 1, 0, 0, 1}, 2));  // x^4+x+1
  CHECK(poly_is_irreducible({1, 0, 1}, 3));        // x^2+1 over F_3
  CHECK_FALSE(poly_is_irreducible({1, 0, 1}, 2));  // x^2+1 = (x+1)^2 over F_2
  CHECK_FALSE(poly_is_irreducible({0, 0, 1}, 2));  // x^2
  CHECK_FALSE(poly_is_irreducible({2, 0, 1}, 3));  // x^2+2 = (x+1)(x+2) over F_3
}

TEST_CASE("primitive element has multiplicative order Q - 1") {
  for (auto [p, s, n] : {std::tuple{2u, 1, 4}, {3u, 1, 2}, {5u, 1, 2}, {2u, 2, 2}}) {
    auto ctx = field_ctx(p, s, n);
    const uint32_t g = ctx->primitive_element();
    std::set<uint32_t> seen;
    uint32_t cur = 1;
    for (uint32_t i = 0; i + 1 < ctx->order(); ++i) {
      seen.insert(cur);
      cur = ctx->mul(cur, g);
    }
    CHECK(cur == 1);
    CHECK(seen.size() == ctx->order() - 1);
  }
}

TEST_CASE("digit string codec round trip") {
  auto f9 = field_ctx(3, 1, 2);
  for (uint32_t x = 0; x < 9; ++x) CHECK(f9->from_digits(f9->to_digits(x)) == x);
  CHECK(f9->to_digits(5) == "21");  // 5 = 2 + 1*3, little-endian
  CHECK_THROWS_AS(f9->from_digits("3"), UsageError);
  CHECK_THROWS_AS(f9->from_digits("311"), UsageError);
}

TEST_CASE("field spec parsing") {
  auto [p, k] = parse_field_spec("2^4");
  CHECK(p == 2);
  CHECK(k == 4);
  CHECK_THROWS_AS(parse_field_spec("abc"), UsageError);
}

TEST_CASE("unsupported towers are rejected") {
  CHECK_THROWS_AS(field_ctx(7, 1, 1), UsageError);
  CHECK_THROWS_AS(field_ctx(2, 1, 17), UsageError);
  CHECK_THROWS_AS(field_ctx(3, 1, 11), UsageError);
}

}  // TEST_SUITE
