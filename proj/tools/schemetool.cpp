// Copyright 2026 The schemetool authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "schemes/closure.hpp"
#include "schemes/configuration.hpp"
#include "schemes/equivalenced.hpp"
#include "schemes/idempotents.hpp"
#include "schemes/json_io.hpp"
#include "schemes/terwilliger.hpp"
#include "schemes/wreath.hpp"

namespace {

using namespace schemes;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

// Scheme spec grammar:
//   trivial | z2 | z4 | k4 | z7 | z13
//   catalog:<name>            (any prefix before "catalog:" is ignored)
//   one_class:<n>
//   cayley:<n>:<c1,c2>|<c3>...
//   <path.json>
SchemeHandle parse_scheme_spec(const std::string& spec) {
  if (auto pos = spec.find("catalog:"); pos != std::string::npos) {
    return catalog_scheme(spec.substr(pos + 8));
  }
  if (spec.rfind("one_class:", 0) == 0) {
    return one_class_scheme(std::stoi(spec.substr(10)));
  }
  if (spec.rfind("cayley:", 0) == 0) {
    std::string rest = spec.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw SchemeError(ErrorCode::BadInput, "cayley:<n>:<classes> expected");
    }
    int n = std::stoi(rest.substr(0, colon));
    std::vector<std::vector<int>> classes;
    std::stringstream body(rest.substr(colon + 1));
    std::string chunk;
    while (std::getline(body, chunk, '|')) {
      std::vector<int> cls;
      std::stringstream cs(chunk);
      std::string item;
      while (std::getline(cs, item, ',')) {
        if (!item.empty()) cls.push_back(std::stoi(item));
      }
      classes.push_back(std::move(cls));
    }
    return cayley_scheme(n, classes);
  }
  for (const char* name : {"trivial", "z2", "z4", "k4", "z7", "z13"}) {
    if (spec == name) return catalog_scheme(name);
  }
  if (!std::filesystem::exists(spec)) {
    throw SchemeError(ErrorCode::BadInput,
                      "file not found (and not a catalog spec): " + spec);
  }
  return as_scheme(configuration_from_json(load_json_file(spec)));
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    save_json_file(out_path, j);
  }
}

bool is_verification_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPartition:
    case ErrorCode::NotTransposeClosed:
    case ErrorCode::DiagonalNotUnionOfColors:
    case ErrorCode::IntersectionNumbersNotConstant:
    case ErrorCode::PatternViolation:
    case ErrorCode::WellOrderingFailed:
    case ErrorCode::NoneFound:
    case ErrorCode::IdealViolation:
    case ErrorCode::ExtractionUnstable:
    case ErrorCode::TooFewPoints:
      return true;
    default:
      return false;
  }
}

struct Options {
  std::string s_spec, t_spec, input, out;
  int x0 = 0, y0 = 0;
  bool x0_set = false;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::int64_t k = 3;
};

int run_gen(const Options& opt) {
  emit(configuration_to_json(parse_scheme_spec(opt.input).cc), opt.out);
  return kExitPass;
}

int run_validate(const Options& opt) {
  nlohmann::json rep{{"schema_version", 1}, {"file", opt.input}};
  try {
    CoherentConfiguration cc =
        configuration_from_json(load_json_file(opt.input));
    rep["valid"] = true;
    rep["n"] = cc.n;
    rep["rank"] = cc.rank;
    rep["homogeneous"] = cc.is_scheme();
    rep["fibers"] = cc.fibers();
    emit(rep, opt.out);
    return kExitPass;
  } catch (const SchemeError& e) {
    if (!is_verification_failure(e.code())) throw;
    rep["valid"] = false;
    rep["error"] = error_name(e.code());
    rep["detail"] = e.what();
    emit(rep, opt.out);
    return kExitVerificationFailure;
  }
}

int run_closure(const Options& opt) {
  IntMatrix init = color_matrix_from_json(load_json_file(opt.input));
  ClosureResult res = coherent_closure(init);
  nlohmann::json j = configuration_to_json(res.cc);
  j["parent_color"] = res.parent_color;
  emit(j, opt.out);
  return kExitPass;
}

int run_wreath(const Options& opt) {
  WreathScheme w =
      wreath_product(parse_scheme_spec(opt.s_spec), parse_scheme_spec(opt.t_spec));
  nlohmann::json maps{{"schema_version", 1},
                      {"tilde_map", w.tilde_map},
                      {"bar_map", w.bar_map},
                      {"nx", w.nx()},
                      {"ny", w.ny()},
                      {"point_order", "x*ny+y"}};
  if (opt.out.empty()) {
    emit(nlohmann::json{{"scheme", configuration_to_json(w.product.cc)},
                        {"maps", maps}},
         "");
  } else {
    save_json_file(opt.out, configuration_to_json(w.product.cc));
    save_json_file(opt.out + ".maps.json", maps);
  }
  return kExitPass;
}

int run_terwilliger(const Options& opt) {
  SchemeHandle s = parse_scheme_spec(opt.s_spec);
  std::vector<int> points;
  if (opt.x0_set) {
    points.push_back(opt.x0);
  } else {
    for (int x = 0; x < s.n(); ++x) points.push_back(x);
  }
  nlohmann::json rows = nlohmann::json::array();
  std::cout << "scheme\tpoint\tdim_T\trank_ext\tequal\n";
  for (int x : points) {
    TerwilligerContext ctx = terwilliger_algebra(s, x);
    ExtensionEqualityReport eq = verify_extension_equality(ctx);
    std::cout << opt.s_spec << "\t" << x << "\t" << eq.dim_terwilliger << "\t"
              << eq.extension_rank << "\t" << (eq.equal ? "yes" : "no")
              << "\n";
    rows.push_back({{"point", x},
                    {"dim_terwilliger", eq.dim_terwilliger},
                    {"extension_rank", eq.extension_rank},
                    {"equal", eq.equal},
                    {"containment_residual",
                     canonical_round(ctx.containment_residual)}});
  }
  if (!opt.out.empty()) {
    save_json_file(opt.out, nlohmann::json{{"schema_version", 1},
                                           {"scheme", opt.s_spec},
                                           {"table", rows}});
  }
  return kExitPass;
}

int run_equiv(const Options& opt) {
  SchemeHandle t = parse_scheme_spec(opt.t_spec);
  bool ok = is_k_equivalenced(t, opt.k);
  nlohmann::json rep{{"schema_version", 1},
                     {"scheme", opt.t_spec},
                     {"k", opt.k},
                     {"k_equivalenced", ok}};
  if (ok && opt.k == 3) {
    ProductPatternReport pat = verify_product_patterns(t);
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& e : pat.cases) {
      cases.push_back({{"u", e.u}, {"v", e.v}, {"case", pattern_name(e.pattern)}});
    }
    rep["product_patterns"] = cases;
  }
  emit(rep, opt.out);
  if (!ok) {
    std::cerr << "not " << opt.k << "-equivalenced\n";
    return kExitVerificationFailure;
  }
  return kExitPass;
}

int run_wellorder(const Options& opt) {
  SchemeHandle t = parse_scheme_spec(opt.t_spec);
  WellOrderedExtension wo = well_order(t, opt.y0);
  nlohmann::json triples = nlohmann::json::array();
  for (int c : wo.chain) {
    triples.push_back({{"color", c},
                       {"ordered_points",
                        std::vector<int>{wo.triple[c][0], wo.triple[c][1],
                                         wo.triple[c][2]}}});
  }
  emit(nlohmann::json{{"schema_version", 1},
                      {"scheme", opt.t_spec},
                      {"y0", opt.y0},
                      {"chain", wo.chain},
                      {"chain_colors", wo.chain_color},
                      {"triples", triples},
                      {"permutation", wo.permutation},
                      {"extension_rank", wo.extension.cc.rank}},
       opt.out);
  return kExitPass;
}

int run_verify(const Options& opt) {
  Tolerances tol;
  tol.cert = opt.tol;
  DecompositionReport rep =
      theorem_decomposition(parse_scheme_spec(opt.s_spec),
                            parse_scheme_spec(opt.t_spec), opt.x0, opt.y0,
                            opt.seed, tol);
  rep.s_label = opt.s_spec;
  rep.t_label = opt.t_spec;
  emit(decomposition_report_to_json(rep), opt.out);
  return rep.pass ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"association schemes, wreath products and Terwilliger-algebra "
               "idempotent verification"};
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand("gen", "generate a scheme file");
  gen->add_option("spec", opt.input, "catalog/cayley/one_class spec")->required();
  gen->add_option("-o,--out", opt.out, "output path");

  auto* validate = app.add_subcommand("validate", "validate a scheme file");
  validate->add_option("file", opt.input)->required();
  validate->add_option("-o,--out", opt.out);

  auto* closurecmd = app.add_subcommand("closure", "coherent closure of a color partition");
  closurecmd->add_option("file", opt.input)->required();
  closurecmd->add_option("-o,--out", opt.out);

  auto* wreathcmd = app.add_subcommand("wreath", "wreath product of two schemes");
  wreathcmd->add_option("--s", opt.s_spec)->required();
  wreathcmd->add_option("--t", opt.t_spec)->required();
  wreathcmd->add_option("-o,--out", opt.out);

  auto* terw = app.add_subcommand("terwilliger", "Terwilliger dimension table");
  terw->add_option("--s", opt.s_spec)->required();
  auto* x0opt = terw->add_option("--x0", opt.x0, "base point (default: all)");
  terw->add_option("-o,--out", opt.out);

  auto* equiv = app.add_subcommand("equiv", "k-equivalenced test and product patterns");
  equiv->add_option("--t", opt.t_spec)->required();
  equiv->add_option("--k", opt.k)->default_val(3);
  equiv->add_option("-o,--out", opt.out);

  auto* wellordercmd = app.add_subcommand("wellorder", "well-ordering of a one-point extension");
  wellordercmd->add_option("--t", opt.t_spec)->required();
  wellordercmd->add_option("--y0", opt.y0)->default_val(0);
  wellordercmd->add_option("-o,--out", opt.out);

  auto* verify = app.add_subcommand("verify", "verify the idempotent decomposition of T(S wr T)");
  verify->add_option("--s", opt.s_spec)->required();
  verify->add_option("--t", opt.t_spec)->required();
  verify->add_option("--x0", opt.x0)->default_val(0);
  verify->add_option("--y0", opt.y0)->default_val(0);
  verify->add_option("--seed", opt.seed)->default_val(1);
  verify->add_option("--tol", opt.tol)->default_val(1e-8);
  verify->add_option("-o,--out", opt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }
  opt.x0_set = x0opt->count() > 0;

  try {
    if (*gen) return run_gen(opt);
    if (*validate) return run_validate(opt);
    if (*closurecmd) return run_closure(opt);
    if (*wreathcmd) return run_wreath(opt);
    if (*terw) return run_terwilliger(opt);
    if (*equiv) return run_equiv(opt);
    if (*wellordercmd) return run_wellorder(opt);
    if (*verify) return run_verify(opt);
  } catch (const SchemeError& e) {
    std::cerr << e.what() << "\n";
    return is_verification_failure(e.code()) ? kExitVerificationFailure
                                             : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
