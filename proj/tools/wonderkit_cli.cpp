#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wonderkit/casebook.hpp"
#include "wonderkit/errors.hpp"
#include "wonderkit/isotropic.hpp"
#include "wonderkit/json_io.hpp"
#include "wonderkit/lattice.hpp"
#include "wonderkit/polyhedra.hpp"
#include "wonderkit/rootsys.hpp"
#include "wonderkit/spherical.hpp"
#include "wonderkit/toric.hpp"

namespace {

using namespace wk;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string output;
  bool json = false;

  std::string type;
  std::string to_basis;
  std::string from_basis = "ambient";
  std::string vector;

  std::string input;
  std::string ray;

  int rank = 0;
  std::string source_path;
  std::string target_path;

  int n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  std::string case_id;
  bool all = false;
  bool verbose = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidInput("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

QVec parse_vector_flag(const std::string& text, const std::string& flag) {
  QVec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError(flag + ": " + e.what());
    }
  }
  if (v.empty()) throw ParseError(flag + ": expected comma-separated rationals");
  return v;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int rank_for_type_c(const Options& o) {
  if (!o.type.empty()) {
    const TypeLabel t = TypeLabel::parse(o.type);
    if (t.family != Family::C) throw InvalidInput("--type: this subcommand needs type C_n, got " + t.str());
    if (o.rank != 0 && o.rank != t.rank) throw InvalidInput("--rank disagrees with --type");
    return t.rank;
  }
  if (o.rank == 0) throw InvalidInput("need --type C<n> or --rank <n>");
  TypeLabel::validate(Family::C, o.rank);
  return o.rank;
}

int cmd_root_system(const Options& o, std::ostream& out) {
  RootSystemPtr rs;
  if (!o.input.empty()) rs = root_system_from_json(read_json_file(o.input));
  else if (!o.type.empty()) rs = build_root_system(o.type);
  else throw InvalidInput("need --type <T> or --input <root-system.json>");
  const Integer index = weight_root_index(*rs);

  Json j = to_json(*rs);
  j["lattice_index"] = index.fits_slong_p() ? Json(index.get_si()) : Json(index.get_str());
  if (o.json) {
    out << dump(j);
    return kExitOk;
  }
  out << "type: " << rs->type().str() << "\n";
  out << "rank: " << rs->rank() << "  ambient dimension: " << rs->ambient_dim() << "\n";
  out << "cartan matrix:\n";
  for (const auto& row : rs->cartan()) {
    out << " ";
    for (int x : row) out << " " << x;
    out << "\n";
  }
  out << "simple roots:\n";
  for (int i = 0; i < rs->rank(); ++i) out << "  alpha_" << i + 1 << " = " << to_string(rs->simple_root(i)) << "\n";
  const auto& pos = rs->positive_root_coords();
  out << "positive roots (" << pos.size() << "), simple-root coordinates:\n";
  for (const auto& c : pos) {
    out << "  (";
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << c[i];
    out << ")  " << to_string(rs->ambient_from_simple_coords(c)) << "\n";
  }
  out << "highest root: " << to_string(rs->ambient_from_simple_coords(pos.back())) << "\n";
  out << "rho: " << to_string(rs->rho()) << "\n";
  out << "weyl group order: " << weyl_order(*rs).get_str() << "\n";
  out << "weight/root lattice index: " << index.get_str() << "\n";
  return kExitOk;
}

int cmd_weights(const Options& o, std::ostream& out) {
  const RootSystemPtr rs = build_root_system(o.type);
  const Basis target = parse_basis(o.to_basis);

  if (!o.vector.empty()) {
    const LatticeVector v = make_vector(rs, parse_basis(o.from_basis), parse_vector_flag(o.vector, "--vector"));
    const LatticeVector w = to_basis(v, target);
    if (o.json) {
      Json j;
      j["type"] = rs->type().str();
      j["from"] = to_string(v.basis);
      j["to"] = to_string(target);
      j["input"] = to_json(v.coords);
      j["output"] = to_json(w.coords);
      out << dump(j);
    } else {
      out << to_string(w.coords) << "\n";
    }
    return kExitOk;
  }

  const std::vector<std::pair<Basis, std::string>> sources = {
      {Basis::simple_root, "alpha"},
      {Basis::fund_weight, "omega"},
      {Basis::simple_coroot, "alpha_vee"},
      {Basis::fund_coweight, "omega_vee"},
  };
  Json table = Json::object();
  std::ostringstream text;
  text << "type " << rs->type().str() << ", coordinates in the " << to_string(target) << " basis\n";
  for (const auto& [basis, name] : sources) {
    Json rows = Json::array();
    for (int i = 0; i < rs->rank(); ++i) {
      QVec unit(static_cast<std::size_t>(rs->rank()), Rational(0));
      unit[static_cast<std::size_t>(i)] = 1;
      const std::string label = name + "_" + std::to_string(i + 1);
      try {
        const LatticeVector w = to_basis(make_vector(rs, basis, unit), target);
        rows.push_back(to_json(w.coords));
        text << "  " << label << " = " << to_string(w.coords) << "\n";
      } catch (const InvalidInput&) {
        rows.push_back(nullptr);
        text << "  " << label << " = (outside the span)\n";
      }
    }
    table[to_string(basis)] = rows;
  }
  if (o.json) {
    Json j;
    j["type"] = rs->type().str();
    j["to"] = to_string(target);
    j["table"] = table;
    out << dump(j);
  } else {
    out << text.str();
  }
  return kExitOk;
}

Fan load_fan(const Options& o) {
  if (!o.input.empty()) return fan_from_json(read_json_file(o.input));
  if (!o.type.empty()) return weyl_chamber_fan(*build_root_system(o.type));
  throw InvalidInput("need --input <fan.json> or --type <T>");
}

int cmd_fan_build(const Options& o, std::ostream& out) {
  out << dump(to_json(load_fan(o)));
  return kExitOk;
}

int cmd_fan_subdivide(const Options& o, std::ostream& out) {
  const Fan f = load_fan(o);
  out << dump(to_json(star_subdivision(f, parse_vector_flag(o.ray, "--ray"))));
  return kExitOk;
}

int cmd_fan_check(const Options& o, std::ostream& out) {
  const Fan f = load_fan(o);
  const bool complete = is_complete(f);
  const bool smooth = is_smooth(f);
  std::optional<long> picard;
  if (complete && smooth) {
    // Picard group of a smooth complete toric variety is free of rank #rays - dim.
    picard = static_cast<long>(f.rays().size()) - static_cast<long>(f.lattice().rank());
  }
  if (o.json) {
    Json j;
    j["ambient_dim"] = f.ambient_dim();
    j["rays"] = f.rays().size();
    j["maximal_cones"] = f.maximal_cones().size();
    j["complete"] = complete;
    j["smooth"] = smooth;
    j["picard"] = picard ? Json(*picard) : Json(nullptr);
    out << dump(j);
  } else {
    out << "rays=" << f.rays().size() << "\n";
    out << "maximal_cones=" << f.maximal_cones().size() << "\n";
    out << "complete=" << yes_no(complete) << "\n";
    out << "smooth=" << yes_no(smooth) << "\n";
    out << "picard=" << (picard ? std::to_string(*picard) : "n/a") << "\n";
  }
  return kExitOk;
}

void emit_colored_fan(const Options& o, const ColoredFan& f, std::ostream& out) {
  if (o.json) {
    out << dump(to_json(f));
    return;
  }
  out << "colored fan in dimension " << f.dim() << ", " << f.cones().size() << " colored cones\n";
  for (const auto& c : f.cones()) out << "  " << to_string(c) << "\n";
  out << "complete embedding: " << yes_no(is_complete_embedding(f)) << "\n";
}

int cmd_spherical_wonderful(const Options& o, std::ostream& out) {
  if (o.type.empty()) throw InvalidInput("need --type <T>");
  emit_colored_fan(o, wonderful_colored_fan(*build_root_system(o.type)), out);
  return kExitOk;
}

int cmd_spherical_zfan(const Options& o, std::ostream& out) {
  emit_colored_fan(o, z_colored_fan(rank_for_type_c(o)), out);
  return kExitOk;
}

int cmd_spherical_chain(const Options& o, std::ostream& out) {
  const auto fans = blowup_chain_fans(rank_for_type_c(o));
  if (o.json) {
    Json arr = Json::array();
    for (const auto& f : fans) arr.push_back(to_json(f));
    out << dump(arr);
    return kExitOk;
  }
  for (std::size_t i = 0; i < fans.size(); ++i) {
    out << "step " << i << ": ";
    emit_colored_fan(o, fans[i], out);
  }
  return kExitOk;
}

int cmd_spherical_extend(const Options& o, std::ostream& out) {
  struct Row {
    std::string label;
    ExtensionDecision decision;
  };
  std::vector<Row> rows;
  if (!o.source_path.empty() || !o.target_path.empty()) {
    if (o.source_path.empty() || o.target_path.empty()) throw InvalidInput("--source and --target go together");
    const ColoredFan s = colored_fan_from_json(read_json_file(o.source_path));
    const ColoredFan t = colored_fan_from_json(read_json_file(o.target_path));
    if (s.dim() != t.dim()) throw InvalidInput("source and target fans have different dimensions");
    rows.push_back({"source -> target", extension_decision(s, t, QMat::identity(s.dim()), {})});
  } else {
    const int n = rank_for_type_c(o);
    const ColoredFan x = wonderful_colored_fan(*build_root_system(TypeLabel{Family::C, n}));
    const ColoredFan z = z_colored_fan(n);
    const QMat id = QMat::identity(static_cast<std::size_t>(n));
    rows.push_back({"X -> Z", extension_decision(x, z, id, {})});
    rows.push_back({"Z -> X", extension_decision(z, x, id, {})});
    const auto chain = blowup_chain_fans(n);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      rows.push_back({"step " + std::to_string(i + 1) + " -> step " + std::to_string(i),
                      extension_decision(chain[i + 1], chain[i], id, {})});
  }
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["map"] = r.label;
      j["extends"] = r.decision.extends;
      j["obstruction"] = r.decision.obstruction;
      arr.push_back(j);
    }
    out << dump(arr);
  } else {
    for (const auto& r : rows) {
      out << r.label << ": " << (r.decision.extends ? "extends" : "does not extend");
      if (!r.decision.extends && !r.decision.obstruction.empty()) out << " (" << r.decision.obstruction << ")";
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_orbits(const Options& o, std::ostream& out, FormKind kind) {
  if (o.n < 1) throw InvalidInput("--n must be at least 1");
  const bool lg = kind == FormKind::symplectic;
  std::vector<OrbitDimensions> table;
  for (int k = 0; k <= o.n; ++k) table.push_back(lg ? lg_orbit_data(o.n, k) : og_orbit_data(o.n, k));

  std::vector<SampleReport> reports;
  if (o.samples > 0) {
    const DoubledSpace space = lg ? DoubledSpace::symplectic(o.n) : DoubledSpace::orthogonal(o.n);
    reports.push_back(equal_intersection_check(space, o.samples, o.seed));
    if (lg) reports.push_back(tau_fixed_locus_check(space, o.samples, o.seed));
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.violations == 0;

  if (o.json) {
    Json j;
    j["grassmannian"] = lg ? "LG" : "OG";
    j["n"] = o.n;
    Json rows = Json::array();
    for (const auto& d : table) rows.push_back(to_json(d));
    j["orbits"] = rows;
    Json checks = Json::array();
    for (const auto& r : reports) checks.push_back(to_json(r));
    j["checks"] = checks;
    out << dump(j);
  } else {
    out << (lg ? "LG" : "OG") << " orbits for n=" << o.n << "\n";
    out << "  k  dim  codim  base  fiber\n";
    for (const auto& d : table)
      out << "  " << d.k << "  " << d.total << "  " << d.codim << "  " << d.base << "  " << d.fiber << "\n";
    for (const auto& r : reports) {
      out << (r.violations == 0 ? "PASS " : "FAIL ") << r.lemma << " on " << r.space << ": " << r.samples
          << " samples, " << r.violations << " violations, seed " << r.seed << ", strata";
      for (const auto& [k, count] : r.strata) out << " k=" << k << ":" << count;
      out << "\n";
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<CaseReport> reports;
  if (!o.case_id.empty()) reports.push_back(run_case(o.case_id, o.seed));
  else reports = run_all(o.seed);

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();

  if (o.json) {
    if (!o.case_id.empty()) {
      out << dump(to_json(reports.front()));
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << dump(arr);
    }
  } else if (!o.case_id.empty() || o.verbose) {
    for (const auto& r : reports) out << to_text(r);
  } else {
    // One line per case; failing cases also list their checks.
    for (const auto& r : reports) {
      if (r.pass()) {
        out << "PASS " << r.case_id << ": " << r.statement << "\n";
      } else {
        out << to_text(r);
      }
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for root systems, toric and colored fans, and isotropic orbit checks"};
  app.require_subcommand(1);
  Options o;
  int status = kExitOk;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write the report to this file instead of stdout");
  };
  auto add_json = [&](CLI::App* sub) { return sub->add_flag("--json", o.json, "Emit JSON"); };

  std::function<int(std::ostream&)> action;

  auto* rs_cmd = app.add_subcommand("root-system", "Roots, highest root, rho, Cartan matrix, Weyl group order");
  auto* rs_type = rs_cmd->add_option("--type", o.type, "Type label, e.g. G2 or E8");
  auto* rs_input = rs_cmd->add_option("--input", o.input, "Root system JSON to re-import")->check(CLI::ExistingFile);
  rs_type->excludes(rs_input);
  add_json(rs_cmd);
  add_output(rs_cmd);
  rs_cmd->callback([&] { action = [&](std::ostream& out) { return cmd_root_system(o, out); }; });

  auto* w_cmd = app.add_subcommand("weights", "Basis-change tables");
  w_cmd->add_option("--type", o.type, "Type label")->required();
  w_cmd->add_option("--to", o.to_basis, "ambient|simple_root|fund_weight|simple_coroot|fund_coweight")->required();
  auto* w_vec = w_cmd->add_option("--vector", o.vector, "Convert one vector, comma-separated rationals");
  w_cmd->add_option("--from", o.from_basis, "Basis of --vector (default ambient)")->needs(w_vec);
  add_json(w_cmd);
  add_output(w_cmd);
  w_cmd->callback([&] { action = [&](std::ostream& out) { return cmd_weights(o, out); }; });

  auto* fan_cmd = app.add_subcommand("fan", "Fan construction, subdivision and checks");
  fan_cmd->require_subcommand(1);
  auto add_fan_source = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", o.input, "Fan JSON")->check(CLI::ExistingFile);
    auto* ty = sub->add_option("--type", o.type, "Weyl chamber fan of this type");
    in->excludes(ty);
  };
  auto* fan_build = fan_cmd->add_subcommand("build", "Emit the canonical fan JSON");
  add_fan_source(fan_build);
  add_output(fan_build);
  fan_build->callback([&] { action = [&](std::ostream& out) { return cmd_fan_build(o, out); }; });
  auto* fan_sub = fan_cmd->add_subcommand("subdivide", "Star subdivision at a ray");
  add_fan_source(fan_sub);
  fan_sub->add_option("--ray", o.ray, "Ray, comma-separated rationals")->required();
  add_output(fan_sub);
  fan_sub->callback([&] { action = [&](std::ostream& out) { return cmd_fan_subdivide(o, out); }; });
  auto* fan_check = fan_cmd->add_subcommand("check", "Completeness, smoothness and Picard number");
  add_fan_source(fan_check);
  add_json(fan_check);
  add_output(fan_check);
  fan_check->callback([&] { action = [&](std::ostream& out) { return cmd_fan_check(o, out); }; });

  auto* sph_cmd = app.add_subcommand("spherical", "Colored fans and extension decisions");
  sph_cmd->require_subcommand(1);
  auto add_type_rank = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Type label");
    sub->add_option("--rank", o.rank, "Rank n of type C_n")->check(CLI::PositiveNumber);
  };
  auto* sph_w = sph_cmd->add_subcommand("wonderful", "Colored fan of the wonderful compactification");
  sph_w->add_option("--type", o.type, "Type label")->required();
  add_json(sph_w);
  add_output(sph_w);
  sph_w->callback([&] { action = [&](std::ostream& out) { return cmd_spherical_wonderful(o, out); }; });
  auto* sph_z = sph_cmd->add_subcommand("z-fan", "Colored fan of the type C_n embedding Z");
  add_type_rank(sph_z);
  add_json(sph_z);
  add_output(sph_z);
  sph_z->callback([&] { action = [&](std::ostream& out) { return cmd_spherical_zfan(o, out); }; });
  auto* sph_c = sph_cmd->add_subcommand("chain", "Colored fans of the blowup chain in type C_n");
  add_type_rank(sph_c);
  add_json(sph_c);
  add_output(sph_c);
  sph_c->callback([&] { action = [&](std::ostream& out) { return cmd_spherical_chain(o, out); }; });
  auto* sph_e = sph_cmd->add_subcommand("extend", "Whether the identity extends to a morphism");
  add_type_rank(sph_e);
  sph_e->add_option("--source", o.source_path, "Source colored fan JSON")->check(CLI::ExistingFile);
  sph_e->add_option("--target", o.target_path, "Target colored fan JSON")->check(CLI::ExistingFile);
  add_json(sph_e);
  add_output(sph_e);
  sph_e->callback([&] { action = [&](std::ostream& out) { return cmd_spherical_extend(o, out); }; });

  auto* orb_cmd = app.add_subcommand("orbits", "Orbit dimensions and sampled intersection checks");
  orb_cmd->require_subcommand(1);
  for (auto [name, kind] : {std::pair{"lg", FormKind::symplectic}, std::pair{"og", FormKind::orthogonal}}) {
    auto* sub = orb_cmd->add_subcommand(name, kind == FormKind::symplectic ? "Lagrangian Grassmannian"
                                                                           : "Orthogonal Grassmannian");
    sub->add_option("--n", o.n, "n")->required()->check(CLI::Range(1, 12));
    auto* samples = sub->add_option("--samples", o.samples, "Number of random subspaces to test");
    sub->add_option("--seed", o.seed, "Sampling seed")->needs(samples);
    add_json(sub);
    add_output(sub);
    const FormKind k = kind;
    sub->callback([&, k] { action = [&, k](std::ostream& out) { return cmd_orbits(o, out, k); }; });
  }

  auto* ver_cmd = app.add_subcommand("verify", "Run casebook cases");
  auto* ver_case = ver_cmd->add_option("--case", o.case_id, "Case id");
  auto* ver_all = ver_cmd->add_flag("--all", o.all, "Run every case (default)");
  ver_case->excludes(ver_all);
  auto* ver_json = add_json(ver_cmd);
  ver_cmd->add_flag("--verbose", o.verbose, "List every check in text mode")->excludes(ver_json);
  ver_cmd->add_option("--seed", o.seed, "Seed for sampled cases");
  add_output(ver_cmd);
  ver_cmd->callback([&] { action = [&](std::ostream& out) { return cmd_verify(o, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Output out(o.output);
    status = action(out.stream());
    out.stream().flush();
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return status;
}
