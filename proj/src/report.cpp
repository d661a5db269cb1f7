#include "gnorm/report.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "gnorm/closure.hpp"
#include "gnorm/normalizer.hpp"
#include "gnorm/towers.hpp"

namespace gnorm {

namespace {

void render_json(std::ostringstream& os, const nlohmann::json& j, const std::string& key,
                 int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      render_json(os, it.value(), it.key(), key.empty() ? indent : indent + 2);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    os << pad << key << ":\n";
    for (const auto& e : j) os << pad << "  - " << e.dump() << "\n";
  } else {
    os << pad << key << ": " << j.dump() << "\n";
  }
}

nlohmann::json checks_to_json(const CheckReport& rep) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Check& c : rep.checks) {
    nlohmann::json e{{"name", c.name}, {"ok", c.ok}};
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(e);
  }
  return arr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const GroupHom& need_hom(const GroupSpecDoc& doc, const std::string& name) {
  const auto* hd = doc.find_hom(name);
  if (!hd) throw Error(Errc::invalid_argument, "no hom named '" + name + "' in document");
  return hd->hom;
}

ClosureStrategy parse_strategy(const std::string& s) {
  if (s == "auto") return ClosureStrategy::automatic;
  if (s == "tc") return ClosureStrategy::generic_tc;
  if (s == "surjective") return ClosureStrategy::surjective;
  if (s == "abelian") return ClosureStrategy::abelian;
  throw Error(Errc::invalid_argument, "unknown strategy '" + s + "'");
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat fmt) {
  if (fmt == ReportFormat::json) return r.body.dump(2) + "\n";
  std::ostringstream os;
  os << r.command_echo << "\n";
  render_json(os, r.body, "", 0);
  return os.str();
}

CheckReport verify_hom(const GroupHom& phi, int max_cosets) {
  CheckReport rep;
  ClosureResult cr = free_normal_closure(phi, ClosureStrategy::automatic, max_cosets);
  CheckReport closure_rep = closure_structure_checks(cr);
  for (const Check& c : closure_rep.checks) rep.add("closure/" + c.name, c.ok, c.note);

  // fast-path/generic agreement whenever a fast path produced the result and
  // the generic enumeration stays within budget
  if (cr.strategy != ClosureStrategy::generic_tc) {
    bool agree = true;
    std::string note;
    try {
      ClosureResult tc = free_normal_closure(phi, ClosureStrategy::generic_tc, max_cosets);
      GroupHom u = universal_morphism(tc, cr.c_phi, cr.phi_hat);
      GroupHom v = universal_morphism(cr, tc.c_phi, tc.phi_hat);
      for (int x = 0; x < tc.cl->order && agree; ++x) agree = v(u(x)) == x;
      for (int x = 0; x < cr.cl->order && agree; ++x) agree = u(v(x)) == x;
    } catch (const Error& e) {
      if (e.code() == Errc::budget_exceeded || e.code() == Errc::enumeration_overflow)
        note = std::string("generic path skipped: ") + e.what();
      else
        throw;
    }
    rep.add("closure/fast-path-agrees-with-generic", agree, note);
  }

  try {
    NormalizerResult nr = injective_normalizer(phi);
    CheckReport diag = normalizer_diagnostics(nr);
    for (const Check& c : diag.checks) rep.add("normalizer/" + c.name, c.ok, c.note);
    rep.add("normalizer/phi-tilde-normal-map", validate_normal_map(nr.phi_tilde).ok());

    SectionResult sr = detect_normal_structure(phi);
    bool consistent = true;
    if (sr.found) consistent = validate_normal_map(*sr.induced).ok();
    rep.add("detect/induced-structure-valid", consistent,
            sr.found ? "" : "no normal structure on phi");
  } catch (const Error& e) {
    if (e.code() == Errc::budget_exceeded)
      rep.add("normalizer/skipped", true, e.what());
    else
      throw;
  }
  return rep;
}

namespace {

nlohmann::json closure_body(const ClosureResult& cr) {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = "closure";
  j["strategy"] = to_string(cr.strategy);
  j["gamma_order"] = cr.gamma->order;
  j["target_order"] = cr.target->order;
  j["cl_order"] = cr.cl->order;
  j["image_order"] = hom_image(cr.phi_hat.n).order();
  j["kernel_order"] = cr.kernel.order();
  j["kernel"] = abelian_invariants(subgroup_as_group(cr.kernel).group);
  j["center_order"] = center(cr.cl).order();
  j["abelianization"] = abelian_invariants(abelianization(cr.cl).group);
  return j;
}

int run_dispatch(const std::vector<std::string>& argv, Report& report) {
  CLI::App app{"finite-group normal closures and injective normalizers"};
  app.require_subcommand(1);

  std::string file, hom_name, strategy = "auto", json_path;
  int max_cosets = 200000, max_steps = -1;

  auto add_common = [&](CLI::App* cmd, bool hom_required) {
    cmd->add_option("file", file, "group/hom document")->required();
    auto* h = cmd->add_option("--hom", hom_name, "homomorphism name");
    if (hom_required) h->required();
    cmd->add_option("--max-cosets", max_cosets, "coset enumeration budget");
    cmd->add_option("--json", json_path, "write the JSON body to a file");
  };

  auto* c_closure = app.add_subcommand("closure", "free normal closure of a hom");
  add_common(c_closure, true);
  c_closure->add_option("--strategy", strategy, "auto|tc|surjective|abelian");

  auto* c_norm = app.add_subcommand("normalizer", "injective normalizer of a hom");
  add_common(c_norm, true);

  std::string tower_kind;
  auto* c_tower = app.add_subcommand("tower", "iterated closures or normalizers");
  c_tower->add_option("kind", tower_kind, "closure|normalizer")->required();
  add_common(c_tower, true);
  c_tower->add_option("--max-steps", max_steps, "tower step budget");

  auto* c_schur = app.add_subcommand("schur", "relative multiplier: ker(phi_hat)");
  add_common(c_schur, true);

  auto* c_detect = app.add_subcommand("detect-normal", "is phi a normal map?");
  add_common(c_detect, true);

  auto* c_verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(c_verify, false);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  app.parse(args);

  GroupSpecDoc doc = parse_spec(read_file(file));
  nlohmann::json j;

  if (c_closure->parsed()) {
    ClosureResult cr =
        free_normal_closure(need_hom(doc, hom_name), parse_strategy(strategy), max_cosets);
    j = closure_body(cr);
    j["hom"] = hom_name;
  } else if (c_norm->parsed()) {
    NormalizerResult nr = injective_normalizer(need_hom(doc, hom_name));
    j["schema"] = 1;
    j["command"] = "normalizer";
    j["hom"] = hom_name;
    j["n_order"] = nr.N->order;
    j["aut_gamma_order"] = nr.aut_gamma.group->order;
    j["p_image_order"] = hom_image(nr.p_phi).order();
    j["p_kernel_order"] = hom_kernel(nr.p_phi).order();
    j["phi_tilde_kernel_order"] = hom_kernel(nr.phi_tilde.n).order();
  } else if (c_tower->parsed()) {
    const GroupHom& phi = need_hom(doc, hom_name);
    TowerTrace trace;
    if (tower_kind == "closure")
      trace = closures_tower(phi, max_steps > 0 ? max_steps : 16, max_cosets);
    else if (tower_kind == "normalizer")
      trace = normalizers_tower(phi, max_steps > 0 ? max_steps : 32);
    else
      throw Error(Errc::invalid_argument, "tower kind must be closure or normalizer");
    j["schema"] = 1;
    j["command"] = "tower";
    j["kind"] = tower_kind;
    j["hom"] = hom_name;
    nlohmann::json orders = nlohmann::json::array();
    for (const TowerStage& s : trace.stages) orders.push_back(s.group->order);
    j["stage_orders"] = orders;
    j["steps_run"] = trace.steps_run;
    if (trace.stabilized_at)
      j["stabilized_at"] = *trace.stabilized_at;
    else
      j["stabilized_at"] = nullptr;
    if (trace.bound_check) {
      j["bound"] = {{"value", trace.bound_check->bound_value},
                    {"max_stage_order", trace.bound_check->max_stage_order},
                    {"satisfied", trace.bound_check->satisfied}};
      if (trace.bound_check->bound) {
        j["bound"]["f_ceiling"] = trace.bound_check->bound->ceiling;
        j["bound"]["least_prime"] = trace.bound_check->bound->p;
      }
    }
    if (trace.error) j["error"] = *trace.error;
    bool stage_checks_ok = true;
    for (const TowerStage& s : trace.stages) stage_checks_ok &= s.checks.ok();
    j["stage_checks_ok"] = stage_checks_ok;
    if (trace.error) return 2;
    if (!stage_checks_ok) return 1;
  } else if (c_schur->parsed()) {
    SchurResult sr = relative_schur_multiplier(need_hom(doc, hom_name), max_cosets);
    j["schema"] = 1;
    j["command"] = "schur";
    j["hom"] = hom_name;
    j["kernel"] = sr.abelian_invariants;
    j["kernel_order"] = sr.kernel_group->order;
  } else if (c_detect->parsed()) {
    SectionResult sr = detect_normal_structure(need_hom(doc, hom_name));
    j["schema"] = 1;
    j["command"] = "detect-normal";
    j["hom"] = hom_name;
    j["found"] = sr.found;
    if (sr.found) j["induced_action_valid"] = validate_normal_map(*sr.induced).ok();
  } else if (c_verify->parsed()) {
    CheckReport all;
    std::vector<std::string> hom_names;
    if (!hom_name.empty()) {
      hom_names.push_back(hom_name);
    } else {
      for (const auto& hd : doc.homs) hom_names.push_back(hd.name);
    }
    for (const std::string& hn : hom_names) {
      CheckReport rep = verify_hom(need_hom(doc, hn), max_cosets);
      for (const Check& c : rep.checks) all.add(hn + "/" + c.name, c.ok, c.note);
    }
    j["schema"] = 1;
    j["command"] = "verify";
    j["n_checks"] = all.checks.size();
    j["n_failed"] = all.failed();
    j["checks"] = checks_to_json(all);
    report.body = j;
    if (!json_path.empty()) std::ofstream(json_path) << j.dump(2) << "\n";
    return all.ok() ? 0 : 1;
  }

  report.body = j;
  if (!json_path.empty()) std::ofstream(json_path) << j.dump(2) << "\n";
  return 0;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
  CommandResult result;
  std::string echo = "gnorm";
  for (const std::string& a : argv) echo += " " + a;
  result.report.command_echo = echo;
  try {
    result.exit_code = run_dispatch(argv, result.report);
  } catch (const CLI::ParseError& e) {
    result.report.body = {{"schema", 1}, {"error", e.what()}};
    result.exit_code = 3;
  } catch (const Error& e) {
    result.report.body = {{"schema", 1}, {"error", e.what()}};
    switch (e.code()) {
      case Errc::budget_exceeded:
      case Errc::enumeration_overflow:
        result.exit_code = 2;
        break;
      case Errc::precondition_failed:
        result.exit_code = 3;
        break;
      case Errc::invalid_argument:
        result.exit_code = 3;
        break;
    }
  } catch (const std::exception& e) {
    result.report.body = {{"schema", 1}, {"error", e.what()}};
    result.exit_code = 1;
  }
  return result;
}

}  // namespace gnorm
