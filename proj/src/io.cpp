#include "liftcode/io.hpp"

#include <sstream>

namespace liftcode {

Json to_json(const Rational& r) {
  return Json{{"num", r.num}, {"den", r.den}, {"value", r.as_double()}};
}

Json table_to_json(const FuncTable& f) {
  const auto& ctx = *f.ctx();
  Json values = Json::array();
  for (uint32_t v : f.values()) values.push_back(ctx.to_digits(v));
  return Json{{"p", ctx.p()},
              {"s", ctx.s()},
              {"n", ctx.n()},
              {"m", f.m()},
              {"value_field", f.value_order()},
              {"values", values}};
}

FuncTable table_from_json(const Json& j) {
  auto ctx = field_ctx(j.at("p").get<uint32_t>(), j.at("s").get<int>(), j.at("n").get<int>());
  const int m = j.at("m").get<int>();
  const uint32_t value_order = j.at("value_field").get<uint32_t>();
  std::vector<uint32_t> values;
  for (const auto& v : j.at("values")) values.push_back(ctx->from_digits(v.get<std::string>()));
  return FuncTable(ctx, m, value_order, std::move(values));
}

Json degree_set_to_json(const DegreeSet& D) {
  Json degs = Json::array();
  for (uint64_t packed : D.packed_list()) {
    Json vec = Json::array();
    for (uint32_t v : D.unpack(packed)) vec.push_back(v);
    degs.push_back(vec);
  }
  return Json{{"Q", D.Q()}, {"q", D.q()}, {"m", D.m()}, {"degrees", degs}};
}

DegreeSet degree_set_from_json(const Json& j) {
  DegreeSet D(j.at("Q").get<uint32_t>(), j.at("q").get<uint32_t>(), j.at("m").get<int>());
  for (const auto& vec : j.at("degrees")) {
    DegreeVec d;
    for (const auto& v : vec) d.push_back(v.get<uint32_t>());
    D.insert(D.pack(d));
  }
  return D;
}

Json params_to_json(const ConstructionParams& p) {
  Json j{{"theorem", p.theorem},
         {"p", p.p},
         {"q", p.q},
         {"Q", p.Q},
         {"t", p.t},
         {"m", p.m},
         {"N", p.N},
         {"locality", p.locality},
         {"correction_radius", to_json(p.correction_radius)},
         {"claimed_dim_note", p.claimed_dim_note}};
  if (p.ell > 0) j["ell"] = p.ell;
  if (p.s > 0) j["s"] = p.s;
  if (p.claimed_dim_bound.num > 0) j["claimed_dim_bound"] = to_json(p.claimed_dim_bound);
  if (p.theorem == 4) {
    j["b"] = p.b;
    j["c"] = p.c;
    j["gamma"] = p.gamma;
    j["tau"] = p.tau;
    j["d"] = p.rs_degree;
  }
  if (p.theorem == 1) j["c_k"] = p.c_k;
  if (p.eps > 0) j["eps"] = p.eps;
  if (p.delta > 0) j["delta"] = p.delta;
  if (p.eps_prime > 0) j["eps_prime"] = p.eps_prime;
  return j;
}

Json code_descriptor(const ConstructionParams& p, const LiftedCode& code, bool with_degrees) {
  Json j = params_to_json(p);
  j["dim"] = code.dimension();
  if (with_degrees) j["D"] = degree_set_to_json(code.degree_set())["degrees"];
  return j;
}

Json mc_report_to_json(const McReport& r) {
  return Json{{"scenario", r.scenario},
              {"trials", r.trials},
              {"successes", r.successes},
              {"frequency", r.frequency},
              {"ci95", Json::array({r.ci_lo, r.ci_hi})},
              {"queries_max", r.queries_max},
              {"seed", r.seed},
              {"errors", r.errors}};
}

Json min_distance_to_json(const MinDistanceResult& r) {
  return Json{{"min_weight", r.min_weight},
              {"length", r.length},
              {"dim", r.dim},
              {"delta", to_json(r.delta)},
              {"messages_enumerated", r.messages_enumerated},
              {"trivial", r.trivial}};
}

Json distance_check_to_json(const DistanceCheck& c) {
  return Json{{"base_degrees", c.base_degrees},
              {"delta_base", to_json(c.delta_base)},
              {"delta_lift", to_json(c.delta_lift)},
              {"base_dim", c.base_dim},
              {"lift_dim", c.lift_dim},
              {"degenerate", c.degenerate},
              {"part1_ok", c.part1_ok},
              {"part2_ok", c.part2_ok},
              {"general_lower_ok", c.general_lower_ok},
              {"small_field_applicable", c.small_field_applicable},
              {"small_field_ok", c.small_field_ok},
              {"distance_simple_ok", c.distance_simple_ok}};
}

Json oracle_report_to_json(const OracleReport& r) {
  return Json{{"equal", r.equal},
              {"functions_checked", r.functions_checked},
              {"codewords", r.members_by_degrees},
              {"members_by_restriction", r.members_by_restriction},
              {"first_mismatch", r.first_mismatch}};
}

Json affine_closure_to_json(const AffineClosureReport& r) {
  return Json{{"maps_checked", r.maps_checked},
              {"codewords", r.codewords},
              {"violations", r.violations}};
}

Json nikodym_scan_to_json(const NikodymScanResult& r) {
  return Json{{"subsets_checked", r.subsets_checked}, {"nikodym_found", r.nikodym_found}};
}

std::vector<uint32_t> parse_message(const FieldCtx& ctx, const std::string& text) {
  std::vector<uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ctx.from_digits(item));
  return out;
}

}  // namespace liftcode
