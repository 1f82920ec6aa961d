#include "nglie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>

#include "nglie/laws.hpp"

namespace nglie {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kSpecViolation = 2;
constexpr int kUsage = 3;
constexpr int kIo = 4;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

int cmd_construct(const std::string& spec_path, std::ostream& out) {
  LoadedSpec s = load_spec_file(spec_path);
  out << describe_loaded(s);
  auto violations = validate_loaded(s);
  if (violations.empty()) {
    out << "valid\n";
    return kOk;
  }
  for (const auto& v : violations)
    out << "violation " << v.code << ": " << v.detail << "\n";
  return kSpecViolation;
}

/// Matrix literal: '@path' naming a JSON array of rows of entry expressions.
WeylMatrix load_matrix_arg(const LoadedSpec& s, const std::string& arg) {
  Json j = read_json_file(arg.substr(1));
  if (!j.is_array()) throw ParseError("matrix file must be an array of rows");
  int n = static_cast<int>(j.size());
  WeylMatrix m = matrix_zero(s.witt, n);
  for (int i = 0; i < n; i++) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw ParseError("matrix file must be square");
    for (int c = 0; c < n; c++)
      m.at(i, c) = parse_weyl_op(s.witt, j[i][c].get<std::string>());
  }
  return m;
}

std::string matrix_json(const WeylMatrix& m) {
  Json j = Json::array();
  for (int i = 0; i < m.size; i++) {
    Json row = Json::array();
    for (int c = 0; c < m.size; c++) row.push_back(render_weyl(m.at(i, c)));
    j.push_back(row);
  }
  return j.dump();
}

int cmd_bracket(const std::string& spec_path, const std::string& e1,
                const std::string& e2, std::ostream& out) {
  LoadedSpec s = load_spec_file(spec_path);
  auto violations = validate_loaded(s);
  if (!violations.empty()) {
    for (const auto& v : violations)
      out << "violation " << v.code << ": " << v.detail << "\n";
    return kSpecViolation;
  }
  switch (s.kind) {
    case FamilyKind::Witt:
    case FamilyKind::S: {
      WittElem a = parse_witt_elem(s.witt, e1);
      WittElem b = parse_witt_elem(s.witt, e2);
      out << render_witt(witt_bracket(a, b)) << "\n";
      return kOk;
    }
    case FamilyKind::Block1: {
      AlgElem a = parse_alg_elem(s.b1->alg, e1);
      AlgElem b = parse_alg_elem(s.b1->alg, e2);
      out << render_elem(quotient_class1(*s.b1, bracket_class1(*s.b1, a, b)))
          << "\n";
      return kOk;
    }
    case FamilyKind::Block2: {
      AlgElem a = parse_alg_elem(s.b2->alg, e1);
      AlgElem b = parse_alg_elem(s.b2->alg, e2);
      out << render_elem(quotient_class2(*s.b2, bracket_class2(*s.b2, a, b)))
          << "\n";
      return kOk;
    }
    case FamilyKind::Block3: {
      SuperElem a = parse_super_elem(*s.b3, e1);
      SuperElem b = parse_super_elem(*s.b3, e2);
      out << render_super(quotient_class3(*s.b3, super_bracket(*s.b3, a, b)))
          << "\n";
      return kOk;
    }
    case FamilyKind::Ham: {
      AlgElem a = parse_alg_elem(s.ham->alg, e1);
      AlgElem b = parse_alg_elem(s.ham->alg, e2);
      out << render_elem(ham_quotient(ham_bracket(*s.ham, a, b))) << "\n";
      return kOk;
    }
    case FamilyKind::Contact: {
      AlgElem a = parse_alg_elem(s.contact->alg, e1);
      AlgElem b = parse_alg_elem(s.contact->alg, e2);
      out << render_elem(contact_bracket(*s.contact, a, b)) << "\n";
      return kOk;
    }
    default: {
      // Matrix families: '@file' arguments bracket whole matrices (the sl
      // result is reduced modulo scalar matrices); bare expressions bracket
      // single operators.
      if (!e1.empty() && e1[0] == '@') {
        WeylMatrix a = load_matrix_arg(s, e1);
        WeylMatrix b = load_matrix_arg(s, e2);
        WeylMatrix r = matrix_bracket(a, b);
        if (s.kind == FamilyKind::WeylSl) r = sl_rep(r);
        out << matrix_json(r) << "\n";
        return kOk;
      }
      WeylOp a = parse_weyl_op(s.witt, e1);
      WeylOp b = parse_weyl_op(s.witt, e2);
      out << render_weyl(weyl_sub(weyl_mul(a, b), weyl_mul(b, a))) << "\n";
      return kOk;
    }
  }
}

int cmd_verify(const std::string& spec_path, const std::string& law,
               const TrialConfig& cfg, const std::string& out_path,
               std::ostream& out) {
  LoadedSpec s = load_spec_file(spec_path);
  auto violations = validate_loaded(s);
  if (!violations.empty()) {
    for (const auto& v : violations)
      out << "violation " << v.code << ": " << v.detail << "\n";
    return kSpecViolation;
  }
  Report rep = run_family_law(s, law, cfg);
  std::string text = rep.to_json();
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      out << "cannot write '" << out_path << "'\n";
      return kIo;
    }
    f << text << "\n";
  }
  out << text << "\n";
  return rep.passed ? kOk : kVerifyFail;
}

int cmd_export_sc(const std::string& spec_path, const WindowDesc& w,
                  const std::string& out_path, std::ostream& out) {
  LoadedSpec s = load_spec_file(spec_path);
  auto violations = validate_loaded(s);
  if (!violations.empty()) {
    for (const auto& v : violations)
      out << "violation " << v.code << ": " << v.detail << "\n";
    return kSpecViolation;
  }
  std::string text = export_structure_constants(s, w);
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    out << "cannot write '" << out_path << "'\n";
    return kIo;
  }
  f << text;
  f.close();
  if (!f) {
    out << "write failure on '" << out_path << "'\n";
    return kIo;
  }
  out << "wrote " << out_path << " (" << text.size() << " bytes)\n";
  return kOk;
}

int cmd_iso_act(const std::string& g_path, const std::string& gamma_path,
                const std::string& gamma2_path, std::ostream& out) {
  Json gj = read_json_file(g_path);
  if (!gj.contains("l2") || !gj.contains("l3") || !gj.contains("matrix"))
    throw ParseError("g file needs 'l2', 'l3' and 'matrix'");
  int l2 = gj.at("l2").get<int>();
  int l3 = gj.at("l3").get<int>();
  RatMat m;
  for (const auto& row : gj.at("matrix")) {
    RatVec r;
    for (const auto& x : row) r.push_back(rat_parse(x.get<std::string>()));
    m.push_back(std::move(r));
  }
  BlockMatrix g;
  try {
    g = g_check(m, l2, l3);
  } catch (const std::invalid_argument& e) {
    out << "invalid g: " << e.what() << "\n";
    return kSpecViolation;
  }

  auto load_lattice = [&](const std::string& path) {
    Json j = read_json_file(path);
    if (!j.contains("generators")) throw ParseError("lattice file needs 'generators'");
    std::vector<RatVec> gens;
    for (const auto& row : j.at("generators")) {
      RatVec r;
      for (const auto& x : row) r.push_back(rat_parse(x.get<std::string>()));
      gens.push_back(std::move(r));
    }
    int dim = j.contains("dim") ? j.at("dim").get<int>()
                                : (gens.empty() ? l2 + l3
                                                : static_cast<int>(gens[0].size()));
    return Lattice::from_generators(std::move(gens), dim);
  };
  Lattice gamma = load_lattice(gamma_path);
  Lattice image = g_act_lattice(g, gamma);
  out << "g(Gamma) canonical: " << lattice_canonical_str(image) << "\n";
  if (!gamma2_path.empty()) {
    Lattice gamma2 = load_lattice(gamma2_path);
    bool eq = lattice_equal(image, gamma2);
    out << "Gamma' canonical: " << lattice_canonical_str(gamma2) << "\n";
    out << (eq ? "equal\n" : "not equal\n");
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact constructions and property checks for nongraded"
               " infinite-dimensional Lie (super)algebras"};
  app.require_subcommand(1);

  std::string spec_path, expr1, expr2, law, out_path;
  std::string g_path, gamma_path, gamma2_path;
  TrialConfig cfg;
  WindowDesc window;

  auto* construct = app.add_subcommand("construct", "validate a spec file");
  construct->add_option("spec", spec_path)->required();

  auto* bracket = app.add_subcommand("bracket", "bracket two elements");
  bracket->add_option("spec", spec_path)->required();
  bracket->add_option("expr1", expr1)->required();
  bracket->add_option("expr2", expr2)->required();

  auto* verify = app.add_subcommand("verify", "run a verification law");
  verify->add_option("spec", spec_path)->required();
  verify->add_option("--law", law)->required();
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--trials", cfg.trials);
  verify->add_option("--max-terms", cfg.budget.max_terms);
  verify->add_option("--nat-bound", cfg.budget.max_nat);
  verify->add_option("--gen-bound", cfg.budget.gen_bound);
  verify->add_option("--coeff-bound", cfg.budget.coeff_bound);
  verify->add_option("--out", out_path);

  auto* exportsc = app.add_subcommand("export-sc", "export structure constants");
  exportsc->add_option("spec", spec_path)->required();
  exportsc->add_option("--gen-bound", window.gen_bound);
  exportsc->add_option("--nat-bound", window.nat_bound);
  exportsc->add_option("--out", out_path)->required();

  auto* iso = app.add_subcommand("iso-act", "apply a block matrix to a lattice");
  iso->add_option("g", g_path)->required();
  iso->add_option("gamma", gamma_path)->required();
  iso->add_option("gamma2", gamma2_path);

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(spec_path, out);
    if (*bracket) return cmd_bracket(spec_path, expr1, expr2, out);
    if (*verify) return cmd_verify(spec_path, law, cfg, out_path, out);
    if (*exportsc) return cmd_export_sc(spec_path, window, out_path, out);
    if (*iso) return cmd_iso_act(g_path, gamma_path, gamma2_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "spec violation: " << e.what() << "\n";
    return kSpecViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace nglie
