/*
 * Copyright 2026 The c2pencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli/commands.hpp"

#include <map>
#include <set>

#include "c2pencil/random.hpp"
#include "cli/criteria.hpp"

namespace c2pencil::cli {

namespace {

const FieldSpec* override_field(const JobConfig& cfg) {
  return cfg.field ? &parse_field(Json(*cfg.field), "--field") : nullptr;
}

struct Loaded {
  PencilInput input;
  Json source;  // description of where the pencil came from
};

Loaded load_pencil(const JobConfig& cfg) {
  Loaded out;
  if (cfg.random_m) {
    if (!cfg.field) throw Error(ErrorKind::InvalidInput, "--random needs --field");
    const FieldSpec& f = *override_field(cfg);
    Sampler s(cfg.seed);
    auto nf = s.normal_form(f, *cfg.random_m);
    out.source = Json{{"random", {{"M", *cfg.random_m}, {"seed", cfg.seed}, {"disguised", cfg.disguise}}}};
    if (cfg.disguise) {
      out.input.pencil = disguise(nf.pencil(), s).pencil;
    } else {
      out.input.normal_form = std::move(nf);
    }
    return out;
  }
  if (cfg.input.empty()) throw Error(ErrorKind::InvalidInput, "no input given (path, inline JSON, '-' or --random)");
  out.input = parse_pencil(load_json(cfg.input), override_field(cfg));
  out.source = Json{{"input", cfg.input.front() == '{' ? "inline" : cfg.input}};
  return out;
}

PencilNormalForm normal_form_of(const PencilInput& in, bool allow_extend) {
  return in.normal_form ? *in.normal_form : normalize_pencil(*in.pencil, allow_extend);
}

Json roots_json(const BinaryFormRoots& r) {
  Json j = Json::array();
  for (const auto& root : r.roots) j.push_back(Json{{"point", to_json(root.point)}, {"multiplicity", root.multiplicity}});
  return j;
}

Json normal_form_json(const PencilNormalForm& nf) {
  Json j{{"field", nf.field().str()}, {"M", nf.M()}, {"pairs", pairs_json(nf)}};
  if (!nf.extension().is_identity()) j["extension_degree"] = nf.extension().degree();
  return j;
}

Json verdict_json(const LiftVerdict& v) {
  Json j{{"status", to_string(v.status)}, {"description", v.describe()}};
  if (v.status == LiftStatus::FailsDeterminant) {
    j["witness"] = {{"i", v.i}, {"det", v.value->hex()}, {"required", v.required->hex()}};
  } else if (v.status == LiftStatus::FailsPairProduct) {
    j["witness"] = {{"j", v.j}, {"i", v.i}, {"k", v.k}, {"value_i", v.value->hex()}, {"value_k", v.required->hex()}};
  }
  return j;
}

Json autrep_json(const AutRep& ar) {
  Json coeffs = Json::array();
  for (const auto& [a, b] : ar.coeffs) coeffs.push_back(Json::array({a.hex(), b.hex()}));
  return Json{{"S", to_json(ar.S)}, {"tau", ar.tau}, {"coefficients", coeffs},
              {"pushforward", to_json(ar.pushforward.canonical())}};
}

Json lift_data_json(const LiftData& ld) {
  return Json{{"matrix", to_json(ld.representative)},
              {"tau", ld.tau},
              {"lambdas", to_json(ld.lambdas)},
              {"det", ld.det.hex()}};
}

Json component_group_json(const ComponentGroupReport& r) {
  Json kernel = Json::array();
  for (const auto& k : r.kernel) kernel.push_back(to_json(k.S));
  Json table = Json::array();
  for (const auto& e : r.stabilizer) {
    Json row = lift_data_json(e.data);
    row["verdict"] = verdict_json(e.verdict);
    if (e.lift) row["lift"] = autrep_json(*e.lift);
    table.push_back(std::move(row));
  }
  return Json{{"order", r.order},
              {"kernel_generators", kernel},
              {"stabilizer", table},
              {"liftable", r.liftable_count()},
              {"lift_field", r.extension.to().str()},
              {"lifts_over_extension", r.lifts_over_extension()}};
}

// ---------------------------------------------------------------------------

Json cmd_pfaffian(const JobConfig& cfg) {
  const Loaded l = load_pencil(cfg);
  const Pencil p = l.input.as_pencil();
  const BinaryForm pf = pfaffian_form(p);
  const bool squarefree = squarefree_check(pf);
  const unsigned degree = splitting_degree(pf);
  Json r{{"source", l.source},
         {"field", p.field().str()},
         {"M", p.M()},
         {"coefficients", to_json(pf)},
         {"coefficient_convention", "coefficient j multiplies s^(M+1-j) t^j in Pf(s A_f + t A_g)"},
         {"squarefree", squarefree},
         {"splitting_degree", degree}};
  BinaryFormRoots zeros = binary_form_roots(pf);
  BinaryFormRoots points = pfaffian_points(p);
  std::string over = p.field().str();
  if (!zeros.split && cfg.allow_extend) {
    const Embedding e = extend_field(p.field(), degree);
    zeros = binary_form_roots(embed(e, pf));
    points = pfaffian_points(embed(e, p));
    over = e.to().str();
  }
  r["roots_field"] = over;
  r["zeros"] = roots_json(zeros);
  r["singular_points"] = roots_json(points);
  r["split"] = zeros.split;
  return r;
}

Json cmd_normalize(const JobConfig& cfg) {
  const Loaded l = load_pencil(cfg);
  const PencilNormalForm nf = normalize_pencil(l.input.as_pencil(), cfg.allow_extend);
  Json r = normal_form_json(nf);
  r["source"] = l.source;
  r["P"] = to_json(nf.P());
  r["B"] = to_json(nf.B());
  r["points"] = Json::array();
  for (const auto& p : nf.points()) r["points"].push_back(to_json(p));
  r["f"] = to_json(nf.f());
  r["g"] = to_json(nf.g());
  return r;
}

Json cmd_singular(const JobConfig& cfg) {
  const Loaded l = load_pencil(cfg);
  const Pencil p = l.input.as_pencil();
  const SingularLocusReport rep = singular_members(p, cfg.allow_extend);
  Json members = Json::array();
  for (const auto& m : rep.members)
    members.push_back(Json{{"point", to_json(m.point)},
                           {"member", to_json(m.member)},
                           {"kernel_plane", Json::array({to_json(m.plane[0]), to_json(m.plane[1])})}});
  Json r{{"source", l.source}, {"field", rep.extension.to().str()}, {"members", members}};
  const PencilNormalForm nf = normal_form_of(l.input, cfg.allow_extend);
  Json comps = Json::array();
  for (const auto& c : singular_locus(nf).components)
    comps.push_back(Json{{"index", c.index}, {"x_var", c.x_var}, {"y_var", c.y_var}, {"equations", c.equations},
                         {"image", to_json(nf.points().at(c.index))}});
  r["normal_form"] = normal_form_json(nf);
  r["components"] = comps;
  return r;
}

Json cmd_aut(const JobConfig& cfg) {
  const Loaded l = load_pencil(cfg);
  const PencilNormalForm nf = normal_form_of(l.input, cfg.allow_extend);
  const TangentSpace ts = tangent_space(nf);
  Json r{{"source", l.source}, {"normal_form", normal_form_json(nf)}};
  r["tangent_space"] = {{"dimension", ts.dimension()},
                        {"automorphism_tangent_dimension", ts.dimension() - 1},
                        {"block_scalar", ts.block_scalar},
                        {"gamma_zero", ts.gamma_zero}};
  if (!cfg.truncate.empty()) {
    Json counts = Json::array();
    for (unsigned n : cfg.truncate) {
      const unsigned d = cfg.truncate_degree ? cfg.truncate_degree : nf.field().degree();
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < nf.M() * (n / 2); ++i) expected <<= d;
      counts.push_back(Json{{"n", n},
                            {"coefficient_field_degree", d},
                            {"count", aut0_count_truncated(nf, n, cfg.budget, cfg.truncate_degree)},
                            {"expected", expected}});
    }
    r["truncated_counts"] = counts;
  }
  r["component_group"] = component_group_json(component_group(nf));
  return r;
}

Json cmd_liftcheck(const JobConfig& cfg) {
  const Loaded l = load_pencil(cfg);
  const PencilNormalForm nf = normal_form_of(l.input, cfg.allow_extend);
  Matrix a(nf.field(), 2, 2);
  if (cfg.matrix) {
    a = parse_matrix_text(nf.field(), *cfg.matrix);
  } else {
    const Json doc = cfg.input.empty() ? Json{} : load_json(cfg.input);
    if (!doc.contains("A")) throw Error(ErrorKind::InvalidInput, "liftcheck needs --matrix or an \"A\" entry");
    a = parse_matrix(nf.field(), doc["A"], "$.A");
  }
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::InvalidInput, "the element must be a 2x2 matrix");
  const LiftData ld = lift_scalars(a, nf);
  const LiftVerdict v = lift_check(ld, nf);
  Json r{{"source", l.source}, {"normal_form", normal_form_json(nf)}};
  r["lift_data"] = lift_data_json(ld);
  r["verdict"] = verdict_json(v);
  if (v.passes()) {
    try {
      r["lift"] = autrep_json(construct_lift(ld, nf));
      r["lift_field"] = nf.field().str();
    } catch (const FieldTooSmall&) {
      const Embedding e = extend_field(nf.field(), 2);
      const auto big = nf.embedded(e);
      r["lift"] = autrep_json(construct_lift(lift_scalars(embed(e, a), big), big));
      r["lift_field"] = e.to().str();
    }
  }
  return r;
}

Json cmd_oracle(const JobConfig& cfg) {
  const Loaded l = load_pencil(cfg);
  const PencilNormalForm nf = normal_form_of(l.input, cfg.allow_extend);
  const ComponentGroupReport group = component_group(nf);
  const PencilNormalForm over = group.lifts_over_extension() ? nf.embedded(group.extension) : nf;
  const OracleResult oracle = structured_oracle(over, cfg.budget);
  const auto closure = group_closure(group.generators(), 1u << 22);
  std::set<std::vector<std::uint64_t>> from_group, from_oracle;
  auto key = [](const Matrix& m) {
    std::vector<std::uint64_t> k;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j).bits());
    return k;
  };
  for (const auto& m : closure) from_group.insert(key(m));
  Json autos = Json::array();
  for (const auto& ar : oracle.automorphisms) {
    from_oracle.insert(key(ar.S));
    autos.push_back(autrep_json(ar));
  }
  std::size_t only_oracle = 0, only_group = 0;
  for (const auto& k : from_oracle) only_oracle += !from_group.count(k);
  for (const auto& k : from_group) only_group += !from_oracle.count(k);
  return Json{{"source", l.source},
              {"normal_form", normal_form_json(nf)},
              {"search_field", over.field().str()},
              {"completeness", OracleResult::kCompleteness},
              {"evaluations", oracle.evaluations},
              {"naive_candidate_space", oracle.naive_space},
              {"count", oracle.automorphisms.size()},
              {"component_group_order", group.order},
              {"agree", only_oracle == 0 && only_group == 0},
              {"only_in_oracle", only_oracle},
              {"only_in_component_group", only_group},
              {"automorphisms", autos}};
}

CommandResult cmd_selfcheck(const JobConfig& cfg) {
  Json items = Json::array();
  bool ok = true;
  auto add = [&](const CriterionResult& r) {
    ok = ok && r.passed;
    items.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  };
  for (unsigned m : {1u, 2u, 3u, 4u, 8u}) add(check_field_axioms(FieldSpec::canonical(m), cfg.seed));
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2 is reducible.
  if (cfg.inject_fault) add(check_field_axioms(FieldSpec::unchecked(4, 0x15), cfg.seed));
  for (const auto& c : acceptance_criteria()) add(run_criterion(c, cfg.seed));
  return CommandResult{Json{{"seed", cfg.seed}, {"fault_injected", cfg.inject_fault}, {"passed", ok}, {"items", items}},
                       ok ? 0 : exit_code_for(ErrorKind::VerificationFailure)};
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::FieldMismatch:
    case ErrorKind::DivisionByZero:
    case ErrorKind::NotInStabilizer:
      return 2;
    case ErrorKind::NotSmooth: return 3;
    case ErrorKind::RepeatedPfaffianRoots: return 4;
    case ErrorKind::FieldTooSmall: return 5;
    case ErrorKind::BudgetExceeded: return 6;
    case ErrorKind::VerificationFailure: return 7;
  }
  return 7;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"pfaffian", "normalize", "singular", "aut",
                                                 "liftcheck", "oracle", "selfcheck"};
  return names;
}

CommandResult run_command(const JobConfig& cfg) {
  Json config{{"command", cfg.command}, {"allow_extend", cfg.allow_extend}, {"budget", cfg.budget}, {"seed", cfg.seed}};
  if (cfg.field) config["field"] = *cfg.field;
  try {
    if (cfg.budget == 0) throw Error(ErrorKind::InvalidInput, "--budget must be positive");
    CommandResult result;
    if (cfg.command == "pfaffian") result.report = cmd_pfaffian(cfg);
    else if (cfg.command == "normalize") result.report = cmd_normalize(cfg);
    else if (cfg.command == "singular") result.report = cmd_singular(cfg);
    else if (cfg.command == "aut") result.report = cmd_aut(cfg);
    else if (cfg.command == "liftcheck") result.report = cmd_liftcheck(cfg);
    else if (cfg.command == "oracle") result.report = cmd_oracle(cfg);
    else if (cfg.command == "selfcheck") result = cmd_selfcheck(cfg);
    else throw Error(ErrorKind::InvalidInput, "unknown command '" + cfg.command + "'");
    Json out{{"config", config}};
    out.update(result.report);
    result.report = std::move(out);
    return result;
  } catch (const FieldTooSmall& e) {
    return {Json{{"config", config},
                 {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}, {"required_degree", e.required_degree()}}}},
            exit_code_for(e.kind())};
  } catch (const Error& e) {
    return {Json{{"config", config}, {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}},
            exit_code_for(e.kind())};
  }
}

}  // namespace c2pencil::cli
