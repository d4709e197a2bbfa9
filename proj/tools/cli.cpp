#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace transvect::cli {

namespace {

using io::json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

json subspace_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(io::to_json(s.basis().row(i)));
  return rows;
}

json cycle_entry(const TransvectionGraph& g, const CycleRecord& c) {
  json e = io::to_json(c);
  e["d_s"] = symplectic_defect(g, c.vertices);
  e["d_theta"] = g.field().has_involution() ? json(unitary_defect(g, c.vertices)) : json(nullptr);
  return e;
}

json form_entry(const FormDetection& d) {
  if (d.form) return json{{"gram", io::to_json(d.form->gram())}};
  json e{{"cycle_bound", d.cycle_bound}, {"cycles_checked", d.cycles_checked}};
  e["obstruction_cycle"] = d.obstruction ? io::to_json(*d.obstruction) : json(nullptr);
  return e;
}

json analyze(const JobConfig& job) {
  auto file = io::read_generators(job.input);
  TransvectionGraph g(file.generators);
  auto scc = strongly_connected_components(g);
  auto irr = is_irreducible(g);
  json out;
  out["size"] = g.size();
  out["dimension"] = g.dimension();
  out["scc_count"] = scc.components.size();
  out["irreducible"] = irr.irreducible;
  out["failed_condition"] = irr.irreducible ? json(nullptr) : json(to_string(irr.failed));
  if (!irr.irreducible) out["invariant_subspace"] = subspace_json(irr.witness);
  out["defect"] = defect(g);
  auto diam = directed_diameter(g);
  out["graph_diameter"] = diam ? json(*diam) : json(nullptr);
  if (strongly_connected(g)) {
    bool dense = false;
    try {
      dense = is_dense(g, job.budgets).dense;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
    }
    auto df = defining_field(g, dense, job.budgets);
    out["dense"] = dense;
    out["defining_field_degree"] = df.degree;
    out["defining_field_status"] = to_string(df.status);
  } else {
    out["defining_field_degree"] = nullptr;
  }
  json cycles = json::array();
  bool truncated = false;
  try {
    for (const auto& c : cycles_up_to(g, 5, job.budgets.walks)) cycles.push_back(cycle_entry(g, c));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    truncated = true;
  }
  out["cycles"] = cycles;
  out["cycles_truncated"] = truncated;

  if (job.forms) {
    json forms;
    if (!irr.irreducible) {
      forms = json{{"error", "forms need an irreducible set"}};
    } else {
      auto sym = detect_invariant_form(g, Twist::Identity, job.budgets);
      forms["symplectic"] = form_entry(sym);
      forms["unitary"] = g.field().has_involution()
                             ? form_entry(detect_invariant_form(g, Twist::Involution, job.budgets))
                             : json(nullptr);
      if (sym.form && g.field().characteristic() == 2) {
        auto qd = recover_quadratic(g, *sym.form);
        if (qd.form) forms["quadratic"] = json{{"coeffs", io::to_json(qd.form->coefficients())},
                                               {"witt_sign", qd.form->witt_sign()}};
        else forms["quadratic"] = json{{"violating_t", qd.violating ? json(*qd.violating) : json(nullptr)}};
      } else {
        forms["quadratic"] = nullptr;
      }
    }
    out["forms"] = forms;
  }
  return out;
}

ClassifyOptions classify_options(const JobConfig& job) {
  ClassifyOptions o;
  o.budgets = job.budgets;
  return o;
}

std::vector<Matrix> generator_matrices(const io::GeneratorFile& f) {
  return matrices(std::span<const Transvection>(f.generators));
}

json diameter(const JobConfig& job) {
  auto file = io::read_generators(job.input);
  auto gens = generator_matrices(file);
  json out;
  if (job.profile == "transvections") {
    auto p = transvection_length_profile(gens, job.budgets.elements);
    out["order"] = p.order;
    out["diameter"] = p.max_length;
    out["histogram"] = p.histogram;
    out["transvection_count"] = p.transvection_count;
  } else if (job.profile == "full") {
    ExploreOptions eo;
    eo.cap = job.budgets.elements;
    auto e = CayleyExploration::explore(gens, eo);
    out["order"] = e.order();
    out["diameter"] = e.diameter();
    out["histogram"] = e.histogram();
    if (!job.witness.empty()) {
      Matrix g = io::parse_matrix(file.field, io::parse_json_text(job.witness, "--witness"));
      Word w = word_recover(e, g);
      out["witness"] = json{{"distance", w.size()}, {"word", io::to_json(w)}};
    }
  } else {
    fail(ErrorCode::ParseError, "--profile must be transvections or full");
  }
  return out;
}

json gen(const JobConfig& job) {
  const std::string k = lower(job.kind);
  io::GeneratorFile out;
  auto field = [&] {
    if (job.field.empty()) fail(ErrorCode::ParseError, "--field is required for this kind");
    return Field::parse(job.field);
  };
  if (k == "symmetric") {
    out.field = Field::create(2, 1);
    out.generators = build_symmetric_rep(job.m);
  } else {
    out.field = field();
    const Field& F = out.field;
    if (k == "sl") out.generators = standard_full_field_set(FullFieldKind::Linear, job.dim, F).generators;
    else if (k == "su") out.generators = standard_full_field_set(FullFieldKind::Unitary3, job.dim, F).generators;
    else if (k == "sp") out.generators = standard_full_field_set(FullFieldKind::Symplectic, job.dim, F).generators;
    else if (k == "o") out.generators = standard_full_field_set(FullFieldKind::Orthogonal, job.dim, F).generators;
    else if (k == "elementary") out.generators = elementary_generators(job.dim, F);
    else if (k == "monomial") out.generators = build_monomial_group(job.dim, job.a, F);
    else if (k == "sp-all") out.generators = form_transvections(standard_symplectic_form(F, job.dim));
    else if (k == "su-all") out.generators = form_transvections(standard_unitary_form(F, job.dim));
    else if (k == "o+-all") out.generators = quadratic_transvections(standard_quadratic_form(F, job.dim, +1));
    else if (k == "o--all") out.generators = quadratic_transvections(standard_quadratic_form(F, job.dim, -1));
    else fail(ErrorCode::ParseError, "unknown --kind " + job.kind);
  }
  return io::generators_json(out);
}

ClassicalKind classical_kind(const std::string& s) {
  const std::string k = lower(s);
  if (k == "linear") return ClassicalKind::Linear;
  if (k == "symplectic") return ClassicalKind::Symplectic;
  if (k == "unitary") return ClassicalKind::Unitary;
  if (k == "orthogonal") return ClassicalKind::Orthogonal;
  fail(ErrorCode::ParseError, "--kind must be linear, symplectic, unitary or orthogonal");
}

json decompose(const JobConfig& job) {
  if (!job.matrix.empty()) {
    auto file = io::read_generators(job.input);
    Matrix g = io::parse_matrix(file.field, io::parse_json_text(job.matrix, "--matrix"));
    ExploreOptions eo;
    eo.cap = job.budgets.elements;
    auto e = CayleyExploration::explore(generator_matrices(file), eo);
    Word w = word_recover(e, g);
    return json{{"distance", w.size()}, {"word", io::to_json(w)}};
  }
  if (job.vector.empty()) fail(ErrorCode::ParseError, "decompose needs --matrix or --vector");
  const Field F = Field::parse(job.field);
  Vector v = io::parse_vector(F, io::parse_json_text(job.vector, "--vector"));
  const std::size_t n = v.size();
  TransvectiveContext ctx;
  ctx.kind = classical_kind(job.kind);
  std::vector<Transvection> pool;
  switch (ctx.kind) {
    case ClassicalKind::Linear:
      break;
    case ClassicalKind::Symplectic:
      ctx.form = standard_symplectic_form(F, n);
      break;
    case ClassicalKind::Unitary:
      ctx.form = standard_unitary_form(F, n);
      pool = form_transvections(*ctx.form);
      break;
    case ClassicalKind::Orthogonal:
      ctx.quadratic = standard_quadratic_form(F, n, +1);
      ctx.form = ctx.quadratic->polarization();
      pool = quadratic_transvections(*ctx.quadratic);
      break;
  }
  // Transvective basis: the standard basis, or independent centres of the group's transvections.
  std::vector<Vector> basis;
  if (pool.empty()) {
    for (std::size_t i = 0; i < n; ++i) basis.push_back(Vector::unit(F, n, i));
  } else {
    for (const auto& t : pool) {
      auto trial = basis;
      trial.push_back(t.v());
      if (Subspace::span(F, n, trial).dim() == trial.size()) basis = std::move(trial);
      if (basis.size() == n) break;
    }
  }
  auto parts = transvective_split(v, basis, ctx);
  json ps = json::array();
  for (const auto& p : parts) ps.push_back(io::to_json(p.entries()));
  json bs = json::array();
  for (const auto& b : basis) bs.push_back(io::to_json(b.entries()));
  return json{{"basis", bs}, {"parts", ps}};
}

std::string field_of_input(const JobConfig& job) {
  if (!job.field.empty()) return job.field;
  if (job.input.empty()) return "";
  try {
    return io::read_generators(job.input).field.name();
  } catch (const Error&) {
    return "";
  }
}

std::string histogram_csv(const json& hist) {
  std::string s = "distance,count\n";
  for (std::size_t i = 0; i < hist.size(); ++i) s += std::to_string(i) + "," + hist[i].dump() + "\n";
  return s;
}

}  // namespace

json run(const JobConfig& job) {
  if (job.budgets.walks == 0 || job.budgets.projective == 0 || job.budgets.elements == 0)
    fail(ErrorCode::BadParameters, "budgets must be positive");
  if (job.command == "analyze") return analyze(job);
  if (job.command == "classify") {
    auto file = io::read_generators(job.input);
    return io::to_json(classify(file.generators, classify_options(job)));
  }
  if (job.command == "certify") {
    auto file = io::read_generators(job.input);
    CertifyOptions o;
    o.classify = classify_options(job);
    o.post_checks = job.post_checks;
    o.seed = job.seed;
    return io::to_json(certify(file.generators, o));
  }
  if (job.command == "diameter") return diameter(job);
  if (job.command == "gen") return gen(job);
  if (job.command == "decompose") return decompose(job);
  fail(ErrorCode::ParseError, "unknown command " + job.command);
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  JobConfig job;
  if (const char* env = std::getenv("TRANSVECT_BUDGET_ELEMENTS")) {
    try {
      job.budgets.elements = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: TRANSVECT_BUDGET_ELEMENTS is not a number\n";
      return 1;
    }
  }

  CLI::App app{"Transvection group toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(TRANSVECT_VERSION));

  auto common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", job.input, "Generator file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", job.output, "Write the report here instead of stdout");
    sub->add_option("--budget-elements", job.budgets.elements, "Element budget for enumeration");
    sub->add_option("--budget-projective", job.budgets.projective, "Budget for vector and projective sweeps");
    sub->add_option("--budget-walks", job.budgets.walks, "Budget for cycle enumeration");
    sub->add_option("--seed", job.seed, "Seed for randomized steps");
    sub->add_flag("--reproducible", job.reproducible, "Report wall time as 0 for byte-identical output");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Graph, irreducibility, field and cycle report");
  common(analyze_cmd, true);
  analyze_cmd->add_flag("--forms", job.forms, "Also detect invariant forms");

  auto* classify_cmd = app.add_subcommand("classify", "Group type classification");
  common(classify_cmd, true);

  auto* certify_cmd = app.add_subcommand("certify", "Small certifying subset with words");
  common(certify_cmd, true);
  certify_cmd->add_option("--post-checks", job.post_checks, "Random supersets checked after assembly");

  auto* diameter_cmd = app.add_subcommand("diameter", "Cayley graph diameter by breadth-first search");
  common(diameter_cmd, false);
  diameter_cmd->add_option("--gens", job.input, "Generator file (JSON)")->required()->check(CLI::ExistingFile);
  diameter_cmd->add_option("--cap", job.budgets.elements, "Element cap");
  diameter_cmd->add_option("--profile", job.profile, "full: over the generators; transvections: over G ∩ T")
      ->check(CLI::IsMember({"full", "transvections"}));
  diameter_cmd->add_option("--witness", job.witness, "JSON matrix whose word to report");
  diameter_cmd->add_option("--format", job.format, "json or csv (histogram only)")->check(CLI::IsMember({"json", "csv"}));

  auto* gen_cmd = app.add_subcommand("gen", "Emit a standard generator file");
  common(gen_cmd, false);
  gen_cmd->add_option("--kind", job.kind,
                      "sl | su | sp | o | elementary | monomial | symmetric | sp-all | su-all | o+-all | o--all")
      ->required();
  gen_cmd->add_option("--field", job.field, "Field as p^f");
  gen_cmd->add_option("--dim", job.dim, "Dimension");
  gen_cmd->add_option("--a", job.a, "Monomial root order");
  gen_cmd->add_option("--m", job.m, "Symmetric degree");

  auto* decompose_cmd = app.add_subcommand("decompose", "Word for a matrix, or transvective split of a vector");
  common(decompose_cmd, false);
  decompose_cmd->add_option("--gens", job.input, "Generator file (with --matrix)")->check(CLI::ExistingFile);
  decompose_cmd->add_option("--matrix", job.matrix, "JSON matrix to write as a word");
  decompose_cmd->add_option("--vector", job.vector, "JSON vector to split");
  decompose_cmd->add_option("--kind", job.kind, "linear | symplectic | unitary | orthogonal");
  decompose_cmd->add_option("--field", job.field, "Field as p^f (with --vector)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  for (auto* sub : app.get_subcommands()) job.command = sub->get_name();

  const auto start = std::chrono::steady_clock::now();
  try {
    json result = run(job);
    std::string text;
    if (job.command == "gen") {
      text = result.dump(2) + "\n";
    } else if (job.command == "diameter" && job.format == "csv") {
      text = histogram_csv(result["histogram"]);
    } else {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      json report{{"tool", "transvect"},
                  {"version", TRANSVECT_VERSION},
                  {"command", job.command},
                  {"field", field_of_input(job)},
                  {"budgets",
                   {{"walks", job.budgets.walks},
                    {"projective", job.budgets.projective},
                    {"elements", job.budgets.elements}}},
                  {"seed", job.seed},
                  {"wall_time_ms", job.reproducible ? 0 : ms.count()},
                  {"result", result}};
      text = report.dump(2) + "\n";
    }
    if (job.output.empty()) {
      out << text;
    } else {
      std::ofstream f(job.output);
      if (!f) fail(ErrorCode::ParseError, "cannot write " + job.output);
      f << text;
    }
    return 0;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::CapExceeded ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace transvect::cli
