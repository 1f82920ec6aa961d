#include "nglie/specfile.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace nglie {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg); }

Rat get_rat(const Json& j, const std::string& what) {
  if (!j.is_string()) bad(what + " must be a rational string");
  return rat_parse(j.get<std::string>());
}

RatVec get_ratvec(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array of rational strings");
  RatVec v;
  for (const auto& x : j) v.push_back(get_rat(x, what));
  return v;
}

Lattice get_lattice(const Json& j, int dim, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array of generator rows");
  std::vector<RatVec> gens;
  for (const auto& row : j) gens.push_back(get_ratvec(row, what));
  return Lattice::from_generators(std::move(gens), dim);
}

JFlag get_jflag(const Json& j) {
  if (!j.is_string()) bad("J flags must be \"nat\" or \"zero\"");
  std::string s = j.get<std::string>();
  if (s == "nat") return JFlag::Nat;
  if (s == "zero") return JFlag::Zero;
  bad("J flags must be \"nat\" or \"zero\"");
}

std::vector<JFlag> get_jflags(const Json& j, int n, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    bad(what + " must list " + std::to_string(n) + " J flags");
  std::vector<JFlag> v;
  for (const auto& x : j) v.push_back(get_jflag(x));
  return v;
}

int get_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<int>();
}

int get_int_or(const Json& j, const std::string& key, int dflt) {
  if (!j.contains(key)) return dflt;
  return get_int(j.at(key), key);
}

std::vector<std::vector<int>> get_exp_list(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array of exponent rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) bad(what + " rows must be integer arrays");
    std::vector<int> r;
    for (const auto& x : row) r.push_back(get_int(x, what));
    out.push_back(std::move(r));
  }
  return out;
}

Lattice z_lattice(int dim) {
  std::vector<RatVec> gens;
  for (int i = 0; i < dim; i++) {
    RatVec u = vec_zero(dim);
    u[i] = 1;
    gens.push_back(std::move(u));
  }
  return Lattice::from_generators(std::move(gens), dim);
}

FamilyKind family_kind(const std::string& name) {
  if (name == "witt") return FamilyKind::Witt;
  if (name == "s") return FamilyKind::S;
  if (name == "block1") return FamilyKind::Block1;
  if (name == "block2") return FamilyKind::Block2;
  if (name == "block3") return FamilyKind::Block3;
  if (name == "ham") return FamilyKind::Ham;
  if (name == "contact") return FamilyKind::Contact;
  if (name == "weyl-gl") return FamilyKind::WeylGl;
  if (name == "weyl-sl") return FamilyKind::WeylSl;
  if (name == "weyl-o") return FamilyKind::WeylO;
  if (name == "weyl-sp") return FamilyKind::WeylSp;
  bad("unknown family '" + name + "'");
}

LoadedSpec load_preset(FamilyKind kind, const std::string& preset, const Json& params) {
  LoadedSpec s;
  s.kind = kind;
  auto param = [&](const char* key, int dflt) {
    return params.is_object() ? get_int_or(params, key, dflt) : dflt;
  };
  if (preset == "example-2-19") {
    if (kind != FamilyKind::Witt) bad("preset example-2-19 belongs to family witt");
    int k = param("k", 2);
    if (k < 1) bad("k must be positive");
    s.witt = witt_spec(0, k, 0, z_lattice(k));
    s.summary = preset + " k=" + std::to_string(k);
  } else if (preset == "example-3-1") {
    if (kind != FamilyKind::Block1) bad("preset example-3-1 belongs to family block1");
    int m = param("m", 2);
    s.b1 = block1_example_3_1(m);
    s.summary = preset + " m=" + std::to_string(m);
  } else if (preset == "example-3-2") {
    if (kind != FamilyKind::Block2) bad("preset example-3-2 belongs to family block2");
    int m = param("m", 1), n = param("n", 1);
    s.b2 = block2_example_3_2(m, n);
    s.summary = preset + " m=" + std::to_string(m) + " n=" + std::to_string(n);
  } else if (preset == "example-3-3") {
    if (kind != FamilyKind::Block3) bad("preset example-3-3 belongs to family block3");
    int k = param("k", 2), m = param("m", 1), n = param("n", 1);
    s.b3 = block3_example_3_3(k, m, n);
    s.summary = preset + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                " n=" + std::to_string(n);
  } else if (preset == "super-virasoro") {
    if (kind != FamilyKind::Block3) bad("preset super-virasoro belongs to family block3");
    s.b3 = block3_super_virasoro();
    s.summary = preset;
  } else if (preset == "classical-ham") {
    if (kind != FamilyKind::Ham) bad("preset classical-ham belongs to family ham");
    int k = param("k", 2);
    s.ham = ham_classical(k);
    s.summary = preset + " k=" + std::to_string(k);
  } else if (preset == "classical-contact") {
    if (kind != FamilyKind::Contact) bad("preset classical-contact belongs to family contact");
    int k = param("k", 1);
    s.contact = contact_classical(k);
    s.summary = preset + " k=" + std::to_string(k);
  } else {
    bad("unknown preset '" + preset + "'");
  }
  return s;
}

WittPtr witt_from_json(const Json& j) {
  int l1 = get_int_or(j, "l1", 0);
  int l2 = get_int_or(j, "l2", 0);
  int l3 = get_int_or(j, "l3", 0);
  Lattice gamma = j.contains("gamma_generators")
                      ? get_lattice(j.at("gamma_generators"), l2 + l3,
                                    "gamma_generators")
                      : Lattice::from_generators({}, l2 + l3);
  return witt_spec(l1, l2, l3, std::move(gamma));
}

}  // namespace

LoadedSpec load_spec_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family")) bad("missing 'family' key");
  std::string fam = j.at("family").is_string() ? j.at("family").get<std::string>()
                                               : (bad("'family' must be a string"), "");
  FamilyKind kind = family_kind(fam);

  static const std::set<std::string> structural = {
      "l1",   "l2",    "l3",    "gamma_generators",  "J",     "rho",
      "kappa", "k",    "k1",    "gamma0_generators", "gamma1_generators",
      "phi",  "sigma", "sigma0", "ell_prime",        "ideal_m", "ideal_n",
      "matrix_size"};
  if (j.contains("preset")) {
    for (const auto& key : structural)
      if (j.contains(key))
        bad("a spec carries either a preset or explicit keys, not both");
    LoadedSpec s = load_preset(kind, j.at("preset").get<std::string>(),
                               j.contains("preset_params") ? j.at("preset_params") : Json());
    s.family = fam;
    return s;
  }

  LoadedSpec s;
  s.kind = kind;
  s.family = fam;
  s.summary = "explicit";
  switch (kind) {
    case FamilyKind::Witt:
      s.witt = witt_from_json(j);
      break;
    case FamilyKind::S: {
      s.witt = witt_from_json(j);
      if (!j.contains("rho")) bad("family s needs 'rho'");
      s.rho = get_ratvec(j.at("rho"), "rho");
      if (static_cast<int>(s.rho.size()) != s.witt->l2 + s.witt->l3)
        bad("rho must have dimension l2+l3");
      break;
    }
    case FamilyKind::Block1: {
      Lattice gamma = get_lattice(j.at("gamma_generators"), 2, "gamma_generators");
      auto jf = get_jflags(j.at("J"), 2, "J");
      s.b1 = block1_spec(std::move(gamma), jf[0], jf[1]);
      break;
    }
    case FamilyKind::Block2: {
      Lattice gamma = get_lattice(j.at("gamma_generators"), 4, "gamma_generators");
      auto jf = get_jflags(j.at("J"), 4, "J");
      RatVec kappa = get_ratvec(j.at("kappa"), "kappa");
      s.b2 = block2_spec(std::move(gamma), jf, std::move(kappa));
      break;
    }
    case FamilyKind::Block3: {
      Lattice gamma = get_lattice(j.at("gamma_generators"), 2, "gamma_generators");
      auto jf = get_jflags(j.at("J"), 2, "J");
      RatVec kappa = get_ratvec(j.at("kappa"), "kappa");
      s.b3 = block3_spec(std::move(gamma), jf[0], jf[1], std::move(kappa));
      break;
    }
    case FamilyKind::Ham: {
      int k = get_int(j.at("k"), "k");
      int k1 = get_int_or(j, "k1", 0);
      Json g0 = j.contains("gamma0_generators") ? j.at("gamma0_generators") : Json::array();
      int d0 = 0;
      for (const auto& row : g0) d0 = std::max(d0, static_cast<int>(row.size()));
      Lattice gamma0 = get_lattice(g0, d0, "gamma0_generators");
      Lattice gamma1 = j.contains("gamma1_generators")
                           ? get_lattice(j.at("gamma1_generators"), 2 * k,
                                         "gamma1_generators")
                           : Lattice::from_generators({}, 2 * k);
      auto jf = get_jflags(j.at("J"), 2 * k, "J");
      RatMat phi;
      if (j.contains("phi")) {
        for (const auto& row : j.at("phi")) phi.push_back(get_ratvec(row, "phi"));
      } else {
        phi.assign(d0 + 2 * k, RatVec(d0 + 2 * k, Rat(0)));
      }
      std::vector<RatVec> sigma;
      if (j.contains("sigma"))
        for (const auto& row : j.at("sigma")) sigma.push_back(get_ratvec(row, "sigma"));
      s.ham = ham_spec(k, k1, std::move(gamma0), std::move(gamma1), jf,
                       std::move(phi), std::move(sigma));
      break;
    }
    case FamilyKind::Contact: {
      int k = get_int(j.at("k"), "k");
      Lattice gamma0 = j.contains("gamma0_generators")
                           ? get_lattice(j.at("gamma0_generators"), 1,
                                         "gamma0_generators")
                           : Lattice::from_generators({}, 1);
      Lattice gamma1 = j.contains("gamma1_generators")
                           ? get_lattice(j.at("gamma1_generators"), 2 * k,
                                         "gamma1_generators")
                           : Lattice::from_generators({}, 2 * k);
      auto jf = get_jflags(j.at("J"), 2 * k + 1, "J");
      Rat sigma0 = j.contains("sigma0") ? get_rat(j.at("sigma0"), "sigma0") : Rat(0);
      std::optional<std::vector<RatVec>> sig;
      if (j.contains("sigma")) {
        std::vector<RatVec> rows;
        for (const auto& row : j.at("sigma")) rows.push_back(get_ratvec(row, "sigma"));
        sig = std::move(rows);
      }
      s.contact = contact_spec(k, std::move(gamma0), std::move(gamma1), jf,
                               std::move(sigma0), std::move(sig));
      break;
    }
    case FamilyKind::WeylGl:
    case FamilyKind::WeylSl:
    case FamilyKind::WeylO:
    case FamilyKind::WeylSp: {
      s.witt = witt_from_json(j);
      s.ell_prime = get_int_or(j, "ell_prime", 0);
      if (kind == FamilyKind::WeylSl) {
        s.matrix_size = get_int_or(j, "matrix_size", 2);
      } else {
        if (!j.contains("ideal_m") || !j.contains("ideal_n"))
          bad("matrix families over ideals need 'ideal_m' and 'ideal_n'");
        auto m = get_exp_list(j.at("ideal_m"), "ideal_m");
        auto n = get_exp_list(j.at("ideal_n"), "ideal_n");
        s.pattern = make_pattern(s.ell_prime, std::move(m), std::move(n), *s.witt);
        s.matrix_size = (kind == FamilyKind::WeylSp) ? 2 * s.pattern->k()
                                                     : s.pattern->k();
      }
      break;
    }
  }
  return s;
}

LoadedSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_spec_text(buf.str());
}

std::vector<Violation> validate_loaded(const LoadedSpec& s) {
  switch (s.kind) {
    case FamilyKind::Witt:
      return spec_validate(*s.witt->alg);
    case FamilyKind::S: {
      auto out = spec_validate(*s.witt->alg);
      if (!s.witt->gamma.contains(s.rho))
        out.push_back({"2.32", "rho lies outside Gamma"});
      return out;
    }
    case FamilyKind::Block1:
      return spec_validate(*s.b1->alg);
    case FamilyKind::Block2:
      return spec_validate(*s.b2->alg);
    case FamilyKind::Block3:
      return spec_validate(*s.b3->alg);
    case FamilyKind::Ham:
      return ham_validate(*s.ham);
    case FamilyKind::Contact:
      return contact_validate(*s.contact);
    case FamilyKind::WeylGl:
    case FamilyKind::WeylSl:
    case FamilyKind::WeylO:
    case FamilyKind::WeylSp:
      return spec_validate(*s.witt->alg);
  }
  return {};
}

std::string lattice_canonical_str(const Lattice& l) {
  std::ostringstream os;
  os << "denom=" << l.denom().get_str() << " rows=[";
  for (std::size_t i = 0; i < l.hnf().size(); i++) {
    if (i) os << ";";
    os << "(";
    for (std::size_t c = 0; c < l.hnf()[i].size(); c++) {
      if (c) os << ",";
      os << l.hnf()[i][c].get_str();
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

std::string describe_loaded(const LoadedSpec& s) {
  std::ostringstream os;
  os << "family " << s.family;
  if (!s.summary.empty()) os << " (" << s.summary << ")";
  os << "\n";
  auto alg_line = [&](const SpecPtr& a) {
    os << "coordinates: d0=" << a->d0 << " d=" << a->d << "\n";
    os << "Gamma canonical: " << lattice_canonical_str(a->gamma) << "\n";
  };
  switch (s.kind) {
    case FamilyKind::Witt:
    case FamilyKind::S:
      os << "l1=" << s.witt->l1 << " l2=" << s.witt->l2 << " l3=" << s.witt->l3
         << "\n";
      os << "Gamma canonical: " << lattice_canonical_str(s.witt->gamma) << "\n";
      if (s.kind == FamilyKind::S) os << "rho: " << vec_str(s.rho) << "\n";
      break;
    case FamilyKind::Block1:
      alg_line(s.b1->alg);
      os << "sigma1 in Gamma: " << (s.b1->sigma1_in_gamma ? "yes" : "no")
         << ", sigma2 in Gamma: " << (s.b1->sigma2_in_gamma ? "yes" : "no") << "\n";
      break;
    case FamilyKind::Block2:
      alg_line(s.b2->alg);
      os << "kappa: " << vec_str(s.b2->kappa) << " sigma: " << vec_str(s.b2->sigma)
         << " rho: " << vec_str(s.b2->rho) << "\n";
      break;
    case FamilyKind::Block3:
      alg_line(s.b3->alg);
      os << "kappa: " << vec_str(s.b3->kappa) << "\n";
      break;
    case FamilyKind::Ham:
      os << "k=" << s.ham->k << " k1=" << s.ham->k1 << " d0=" << s.ham->d0 << "\n";
      os << "Gamma0 canonical: " << lattice_canonical_str(s.ham->gamma0) << "\n";
      os << "Gamma1 canonical: " << lattice_canonical_str(s.ham->gamma1) << "\n";
      break;
    case FamilyKind::Contact:
      os << "k=" << s.contact->k << "\n";
      os << "Gamma0 canonical: " << lattice_canonical_str(s.contact->gamma0) << "\n";
      os << "Gamma1 canonical: " << lattice_canonical_str(s.contact->gamma1) << "\n";
      break;
    case FamilyKind::WeylGl:
    case FamilyKind::WeylSl:
    case FamilyKind::WeylO:
    case FamilyKind::WeylSp:
      os << "l1=" << s.witt->l1 << " l2=" << s.witt->l2 << " l3=" << s.witt->l3
         << " ell_prime=" << s.ell_prime << " matrix_size=" << s.matrix_size << "\n";
      os << "Gamma canonical: " << lattice_canonical_str(s.witt->gamma) << "\n";
      break;
  }
  return os.str();
}

}  // namespace nglie
