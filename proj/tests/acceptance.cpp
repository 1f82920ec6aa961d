// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, fixed seeds. The final criterion re-runs everything and
// compares the transcripts byte for byte.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nglie/cli.hpp"
#include "nglie/laws.hpp"

using namespace nglie;

namespace {

struct Outcome {
  int id;
  std::string title;
  bool passed;
  std::vector<std::string> notes;
};

Budget acc_budget() {
  Budget b;
  b.max_terms = 6;
  b.max_nat = 3;
  b.gen_bound = 3;
  b.coeff_bound = 5;
  return b;
}

TrialConfig cfg_of(std::uint64_t seed, int trials, Budget b) {
  TrialConfig c;
  c.seed = seed;
  c.trials = trials;
  c.budget = b;
  return c;
}

Lattice z_lattice(int dim) {
  std::vector<RatVec> gens;
  for (int i = 0; i < dim; i++) {
    RatVec u = vec_zero(dim);
    u[i] = 1;
    gens.push_back(u);
  }
  return Lattice::from_generators(gens, dim);
}

LoadedSpec wrap_witt(WittPtr w, const std::string& summary) {
  LoadedSpec s;
  s.kind = FamilyKind::Witt;
  s.family = "witt";
  s.summary = summary;
  s.witt = std::move(w);
  return s;
}

LoadedSpec wrap_s(WittPtr w, RatVec rho, const std::string& summary) {
  LoadedSpec s;
  s.kind = FamilyKind::S;
  s.family = "s";
  s.summary = summary;
  s.witt = std::move(w);
  s.rho = std::move(rho);
  return s;
}

LoadedSpec wrap_block1(BlockISpec b, const std::string& summary) {
  LoadedSpec s;
  s.kind = FamilyKind::Block1;
  s.family = "block1";
  s.summary = summary;
  s.b1 = std::move(b);
  return s;
}

LoadedSpec wrap_block2(BlockIISpec b, const std::string& summary) {
  LoadedSpec s;
  s.kind = FamilyKind::Block2;
  s.family = "block2";
  s.summary = summary;
  s.b2 = std::move(b);
  return s;
}

LoadedSpec wrap_block3(SuperSpec b, const std::string& summary) {
  LoadedSpec s;
  s.kind = FamilyKind::Block3;
  s.family = "block3";
  s.summary = summary;
  s.b3 = std::move(b);
  return s;
}

LoadedSpec wrap_ham(HamSpec h, const std::string& summary) {
  LoadedSpec s;
  s.kind = FamilyKind::Ham;
  s.family = "ham";
  s.summary = summary;
  s.ham = std::move(h);
  return s;
}

LoadedSpec wrap_contact(ContactSpec c, const std::string& summary) {
  LoadedSpec s;
  s.kind = FamilyKind::Contact;
  s.family = "contact";
  s.summary = summary;
  s.contact = std::move(c);
  return s;
}

LoadedSpec wrap_weyl(FamilyKind kind, const std::string& family, WittPtr w,
                     int ell_prime, std::optional<IdealPattern> pat, int size,
                     const std::string& summary) {
  LoadedSpec s;
  s.kind = kind;
  s.family = family;
  s.summary = summary;
  s.witt = std::move(w);
  s.ell_prime = ell_prime;
  s.pattern = std::move(pat);
  s.matrix_size = size;
  return s;
}

class Suite {
 public:
  explicit Suite(std::string& transcript) : transcript_(transcript) {}

  /// Runs one law, appends the report to the transcript, returns pass.
  bool law(Outcome& o, const LoadedSpec& spec, const std::string& law,
           const TrialConfig& cfg, bool expect_pass = true) {
    Report r = run_family_law(spec, law, cfg);
    transcript_ += r.to_json();
    transcript_ += "\n";
    bool ok = (r.passed == expect_pass);
    o.notes.push_back(spec.family + ":" + spec.summary + " " + law + " -> " +
                      (r.passed ? "pass" : "fail") +
                      (ok ? "" : " (unexpected)"));
    return ok;
  }

  std::string& transcript() { return transcript_; }

 private:
  std::string& transcript_;
};

// --- criterion implementations -------------------------------------------

Outcome criterion1(Suite& st) {
  Outcome o{1, "Lie axioms (skew + Jacobi, 200 seeded trials per family)", true, {}};
  Budget b = acc_budget();
  TrialConfig cfg = cfg_of(101, 200, b);

  LoadedSpec witt219 = wrap_witt(witt_spec(0, 2, 0, z_lattice(2)), "example-2-19 k=2");
  o.passed &= st.law(o, witt219, "skew", cfg);
  o.passed &= st.law(o, witt219, "jacobi", cfg);

  // S-twisted family with a seeded random rho in Gamma.
  {
    WittPtr w = witt_spec(1, 1, 1, z_lattice(2));
    Rng rng(512);
    RatVec rho = {Rat(rng.range(-3, 3)), Rat(rng.range(-3, 3))};
    LoadedSpec stw = wrap_s(w, rho, "l=(1,1,1) rho=" + vec_str(rho));
    o.passed &= st.law(o, stw, "skew", cfg);
    o.passed &= st.law(o, stw, "jacobi", cfg);
  }

  LoadedSpec b1 = wrap_block1(block1_example_3_1(2), "example-3-1 m=2");
  o.passed &= st.law(o, b1, "skew", cfg);
  o.passed &= st.law(o, b1, "jacobi", cfg);

  LoadedSpec b2 = wrap_block2(block2_example_3_2(1, 1), "example-3-2 m=1 n=1");
  o.passed &= st.law(o, b2, "skew", cfg);
  o.passed &= st.law(o, b2, "jacobi", cfg);

  LoadedSpec hamc = wrap_ham(ham_classical(2), "classical k=2");
  o.passed &= st.law(o, hamc, "skew", cfg);
  o.passed &= st.law(o, hamc, "jacobi", cfg);

  // The stated nonclassical shape: k = 1, k1 = 1, rank-one external block,
  // nonzero phi, required to pass validation. No such data exists: with
  // k = k1 = 1 every internal direction with a nontrivial projection is
  // forced into the radical of phi (condition 4.17), which kills every
  // pairing a rank-one external block could use for condition 4.15. The
  // candidate is validated here so the rejection is on record.
  {
    HamSpec cand = ham_nonclassical_k1_candidate();
    auto viol = ham_validate(cand);
    bool validated = viol.empty();
    std::string codes;
    for (const auto& v : viol) codes += v.code + " ";
    st.transcript() += "ham-k1-candidate violations: " + codes + "\n";
    o.notes.push_back("ham nonclassical k=1 candidate: validator rejects it"
                      " (codes: " + codes + ") - the stated configuration is"
                      " unsatisfiable; see NOTES in README");
    if (!validated) o.passed = false;
  }

  // Supplementary nonclassical data (k=2, k1=1, rank-one external block,
  // nonzero phi) demonstrating the twisted machinery on a valid spec.
  {
    HamSpec sup = ham_nonclassical();
    if (!ham_validate(sup).empty()) {
      o.passed = false;
      o.notes.push_back("supplementary nonclassical spec failed validation");
    } else {
      LoadedSpec hs = wrap_ham(sup, "nonclassical k=2 k1=1 rank-1 Gamma0");
      st.law(o, hs, "skew", cfg);
      st.law(o, hs, "jacobi", cfg);
    }
  }

  LoadedSpec cc = wrap_contact(contact_classical(1), "classical k=1");
  o.passed &= st.law(o, cc, "skew", cfg);
  o.passed &= st.law(o, cc, "jacobi", cfg);
  LoadedSpec ct = wrap_contact(contact_twisted(), "twisted k=1");
  o.passed &= st.law(o, ct, "skew", cfg);
  o.passed &= st.law(o, ct, "jacobi", cfg);
  return o;
}

Outcome criterion2(Suite& st) {
  Outcome o{2, "Super axioms (graded Jacobi, 200 trials)", true, {}};
  TrialConfig cfg = cfg_of(202, 200, acc_budget());
  LoadedSpec ex33 = wrap_block3(block3_example_3_3(2, 1, 1), "example-3-3 k=2 m=1 n=1");
  o.passed &= st.law(o, ex33, "super-jacobi", cfg);
  LoadedSpec sv = wrap_block3(block3_super_virasoro(), "super-virasoro");
  o.passed &= st.law(o, sv, "super-jacobi", cfg);
  return o;
}

Outcome criterion3(Suite& st) {
  Outcome o{3, "Super-Virasoro structure constants on [-5,5]", true, {}};
  SuperSpec s = block3_super_virasoro();
  auto L = [&](int m) { return super_even(group_elem(s.alg, {rat(m), rat(0)})); };
  auto G = [&](int r) { return super_odd(group_elem(s.alg, {rat(r), rat(0)})); };
  int checked = 0;
  for (int m = -5; m <= 5 && o.passed; m++)
    for (int n = -5; n <= 5 && o.passed; n++) {
      SuperElem lhs = super_bracket(s, L(m), L(n));
      AlgElem expect =
          scalar_mul(rat(n - m), group_elem(s.alg, {rat(m + n), rat(0)}));
      if (!elem_is_zero(lhs.odd) || !elem_eq(lhs.even, expect)) o.passed = false;
      checked++;
    }
  for (int m = -5; m <= 5 && o.passed; m++)
    for (int r = -5; r <= 5 && o.passed; r++) {
      SuperElem lhs = super_bracket(s, L(m), G(r));
      AlgElem expect = scalar_mul(rat(2 * r + 1 - m, 2),
                                  group_elem(s.alg, {rat(m + r), rat(0)}));
      if (!elem_is_zero(lhs.even) || !elem_eq(lhs.odd, expect)) o.passed = false;
      checked++;
    }
  st.transcript() += "super-virasoro table checked pairs: " +
                     std::to_string(checked) + " ok=" +
                     (o.passed ? "1" : "0") + "\n";
  o.notes.push_back("checked " + std::to_string(checked) +
                    " bracket values against the closed forms");
  return o;
}

Outcome criterion4(Suite& st) {
  Outcome o{4, "Centrality over windows of at least 200 monomials", true, {}};

  auto record = [&](const std::string& name, const WindowCheck& wc, size_t n) {
    st.transcript() += "centrality " + name + ": " + wc.detail + "\n";
    o.notes.push_back(name + " window=" + std::to_string(n) + " " +
                      (wc.passed ? "pass" : "fail"));
    if (!wc.passed || n < 200) o.passed = false;
  };

  {
    BlockISpec s = block1_example_3_1(2);
    auto mons = monomial_window(s.alg, 3, 2);
    std::vector<AlgElem> window;
    for (const auto& m : mons) window.push_back(monomial_elem(s.alg, m));
    AlgElem cand = group_elem(s.alg, {rat(0), rat(1)});
    WindowCheck wc = window_centrality<AlgElem>(
        window, cand,
        [&](const AlgElem& a, const AlgElem& b) { return bracket_class1(s, a, b); },
        [](const AlgElem& a) { return elem_is_zero(a); });
    record("block1 sigma1", wc, window.size());
  }
  {
    BlockIISpec s = block2_example_3_2(1, 1);
    auto mons = monomial_window(s.alg, 1, 1);
    std::vector<AlgElem> window;
    for (const auto& m : mons) window.push_back(monomial_elem(s.alg, m));
    AlgElem cand = group_elem(s.alg, s.sigma);
    WindowCheck wc = window_centrality<AlgElem>(
        window, cand,
        [&](const AlgElem& a, const AlgElem& b) { return bracket_class2(s, a, b); },
        [](const AlgElem& a) { return elem_is_zero(a); });
    record("block2 sigma", wc, window.size());
  }
  {
    SuperSpec s = block3_example_3_3(2, 1, 1);
    auto mons = monomial_window(s.alg, 3, 2);
    std::vector<SuperElem> window;
    for (const auto& m : mons) {
      window.push_back(super_even(monomial_elem(s.alg, m)));
      window.push_back(super_odd(monomial_elem(s.alg, m)));
    }
    SuperElem cand = super_even(group_elem(s.alg, {rat(0), rat(1)}));
    WindowCheck wc = window_centrality<SuperElem>(
        window, cand,
        [&](const SuperElem& a, const SuperElem& b) { return super_bracket(s, a, b); },
        [](const SuperElem& a) { return super_is_zero(a); });
    record("block3 (sigma1)_even", wc, window.size());
  }
  {
    HamSpec s = ham_classical(2);
    auto mons = monomial_window(s.alg, 0, 3);
    std::vector<AlgElem> window;
    for (const auto& m : mons) window.push_back(monomial_elem(s.alg, m));
    WindowCheck wc = window_centrality<AlgElem>(
        window, elem_one(s.alg),
        [&](const AlgElem& a, const AlgElem& b) { return ham_bracket(s, a, b); },
        [](const AlgElem& a) { return elem_is_zero(a); });
    record("ham 1_A", wc, window.size());
  }
  return o;
}

Outcome criterion5(Suite& st) {
  Outcome o{5, "Poisson compatibility (200 trials) with the recorded negative control",
            true, {}};
  TrialConfig cfg = cfg_of(505, 200, acc_budget());
  LoadedSpec hamc = wrap_ham(ham_classical(2), "classical k=2");
  o.passed &= st.law(o, hamc, "leibniz", cfg);
  // The second spec is the valid nonclassical substitute (the stated k=1
  // shape admits no valid spec; see criterion 1).
  LoadedSpec hamn = wrap_ham(ham_nonclassical(), "nonclassical k=2 substitute");
  o.passed &= st.law(o, hamn, "leibniz", cfg);
  // Negative control: the Class I bracket is not a Poisson structure.
  LoadedSpec b1 = wrap_block1(block1_example_3_1(2), "example-3-1 m=2");
  Report neg = run_family_law(b1, "leibniz", cfg);
  st.transcript() += neg.to_json() + "\n";
  bool control = !neg.passed && !neg.witness.residual.empty();
  o.notes.push_back(std::string("block1 leibniz negative control -> ") +
                    (neg.passed ? "unexpected pass" : "fails with witness"));
  o.passed &= control;
  return o;
}

Outcome criterion6(Suite& st) {
  Outcome o{6, "Divergence identity and twisted divergence-free closure", true, {}};
  TrialConfig cfg = cfg_of(606, 200, acc_budget());
  WittPtr w = witt_spec(1, 1, 1, z_lattice(2));
  LoadedSpec witt = wrap_witt(w, "l=(1,1,1)");
  o.passed &= st.law(o, witt, "divergence", cfg);
  LoadedSpec s0 = wrap_s(w, {rat(0), rat(0)}, "rho=0");
  o.passed &= st.law(o, s0, "closure", cfg);
  LoadedSpec s1 = wrap_s(w, {rat(2), rat(-1)}, "rho=(2,-1)");
  o.passed &= st.law(o, s1, "closure", cfg);
  return o;
}

WittPtr weyl_base() { return witt_spec(2, 1, 0, Lattice::from_generators({{rat(1)}}, 1)); }

IdealPattern weyl_pattern(const WittPtr& w) {
  return make_pattern(1, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, *w);
}

Outcome criterion7(Suite& st) {
  Outcome o{7, "Operator algebra core (relations, action oracle, associativity)",
            true, {}};
  Budget b = acc_budget();
  b.max_terms = 4;
  WittPtr w = weyl_base();
  LoadedSpec gl = wrap_weyl(FamilyKind::WeylGl, "weyl-gl", w, 1, weyl_pattern(w), 2,
                            "l=(2,1,0)");
  o.passed &= st.law(o, gl, "relations", cfg_of(707, 1, b));
  o.passed &= st.law(o, gl, "composition", cfg_of(708, 200, b));
  Budget ba = b;
  ba.max_nat = 2;  // keeps triple products desk-sized
  o.passed &= st.law(o, gl, "assoc", cfg_of(709, 100, ba));
  o.passed &= st.law(o, gl, "commutant", cfg_of(710, 100, ba));
  return o;
}

Outcome criterion8(Suite& st) {
  Outcome o{8, "Involutions (tau for three splits, star, signed transport)", true, {}};
  Budget b = acc_budget();
  b.max_terms = 4;
  b.max_nat = 2;
  WittPtr w = weyl_base();
  for (int lp : {0, 1, 2}) {
    LoadedSpec sl = wrap_weyl(FamilyKind::WeylSl, "weyl-sl", w, lp, {}, 2,
                              "ell_prime=" + std::to_string(lp));
    o.passed &= st.law(o, sl, "involution-tau", cfg_of(808 + lp, 200, b));
  }
  Budget bm = b;
  bm.max_terms = 3;
  bm.max_nat = 1;
  LoadedSpec gl = wrap_weyl(FamilyKind::WeylGl, "weyl-gl", w, 1, weyl_pattern(w), 2,
                            "k=2 pattern");
  o.passed &= st.law(o, gl, "involution-star", cfg_of(812, 100, bm));
  o.passed &= st.law(o, gl, "involution-rho", cfg_of(813, 100, bm));
  return o;
}

Outcome criterion9(Suite& st) {
  Outcome o{9, "Matrix closures (gl, o, sp) and the sl representative", true, {}};
  Budget b = acc_budget();
  b.max_terms = 3;
  b.max_nat = 1;
  WittPtr w = weyl_base();
  IdealPattern pat = weyl_pattern(w);
  LoadedSpec gl = wrap_weyl(FamilyKind::WeylGl, "weyl-gl", w, 1, pat, 2, "k=2");
  o.passed &= st.law(o, gl, "closure", cfg_of(909, 100, b));
  LoadedSpec wo = wrap_weyl(FamilyKind::WeylO, "weyl-o", w, 1, pat, 2, "k=2");
  o.passed &= st.law(o, wo, "closure", cfg_of(910, 100, b));
  LoadedSpec sp = wrap_weyl(FamilyKind::WeylSp, "weyl-sp", w, 1, pat, 4, "4x4");
  o.passed &= st.law(o, sp, "closure", cfg_of(911, 100, b));
  LoadedSpec sl = wrap_weyl(FamilyKind::WeylSl, "weyl-sl", w, 1, {}, 2, "k=2");
  o.passed &= st.law(o, sl, "sl-welldef", cfg_of(912, 100, b));
  return o;
}

Outcome criterion10(Suite& st) {
  Outcome o{10, "Regression control: verbatim Class II transcription", true, {}};
  TrialConfig cfg = cfg_of(1010, 200, acc_budget());
  LoadedSpec b2 = wrap_block2(block2_example_3_2(1, 1), "example-3-2 m=1 n=1");
  Report lit = run_family_law(b2, "skew-literal", cfg);
  st.transcript() += lit.to_json() + "\n";
  // Required outcome: a stored witness against the alternating law. The
  // verbatim trailing products repeat u in every slot, hence cancel in a
  // commutative algebra; the transcription collapses to its leading part and
  // stays alternating, so no witness can exist. Recorded as an honest
  // failure of this criterion; see NOTES in the README.
  bool witness_found = !lit.passed && !lit.witness.residual.empty();
  o.notes.push_back(std::string("verbatim-form skew check -> ") +
                    (lit.passed ? "pass (no witness exists: the repeated-slot"
                                  " products cancel identically)"
                                : "fail with witness"));
  Report corrected = run_family_law(b2, "skew", cfg);
  st.transcript() += corrected.to_json() + "\n";
  o.notes.push_back(std::string("skew form -> ") +
                    (corrected.passed ? "pass" : "fail"));
  o.passed = witness_found && corrected.passed;
  return o;
}

Outcome criterion11(Suite& st) {
  Outcome o{11, "Finite-window derived-span structure", true, {}};
  // Class I over the rank-one row Z(0,1): the only bracket-closed window
  // shape; everything commutes, so the span is empty, leakage-free, and the
  // two central directions stay outside.
  {
    Lattice gamma = Lattice::from_generators({{rat(0), rat(1)}}, 2);
    BlockISpec s = block1_spec(gamma, JFlag::Zero, JFlag::Zero);
    WindowCheck wc = derived_window_block1(s, 4);
    st.transcript() += "derived-window block1: " + wc.detail + "\n";
    o.notes.push_back("block1 Z(0,1): " + wc.detail);
    o.passed &= wc.passed && wc.leakage_free;
  }
  // Class III over Z^2 with kappa = (0,1): the reachable odd span must
  // consist of every window degree except ((0,3)-kappa)/2 = (0,1).
  {
    Lattice z2 = z_lattice(2);
    SuperSpec s = block3_spec(z2, JFlag::Zero, JFlag::Zero, {rat(0), rat(1)});
    WindowCheck wc = derived_window_block3(s, 3);
    st.transcript() += "derived-window block3: " + wc.detail + "\n";
    o.notes.push_back("block3 Z^2 kappa=(0,1): " + wc.detail);
    o.passed &= wc.passed;
  }
  return o;
}

Outcome criterion12(Suite& st) {
  Outcome o{12, "Isomorphism action on lattices", true, {}};
  // CLI surface: g = [[2,0],[0,1]] maps Z^2 onto (1/2)Z x Z.
  {
    std::string gp = "/tmp/nglie_acc_g.json";
    std::string l1 = "/tmp/nglie_acc_gamma.json";
    std::string l2 = "/tmp/nglie_acc_gamma2.json";
    std::ofstream(gp) << R"({"l2":1,"l3":1,"matrix":[["2","0"],["0","1"]]})";
    std::ofstream(l1) << R"({"dim":2,"generators":[["1","0"],["0","1"]]})";
    std::ofstream(l2) << R"({"dim":2,"generators":[["1/2","0"],["0","1"]]})";
    std::ostringstream out, err;
    int code = run_cli({"iso-act", gp, l1, l2}, out, err);
    st.transcript() += out.str();
    bool ok = code == 0 && out.str().find("\nequal") != std::string::npos;
    o.notes.push_back(std::string("cli iso-act Z^2 -> (1/2)Z x Z: ") +
                      (ok ? "equal" : "mismatch"));
    o.passed &= ok;
    std::remove(gp.c_str());
    std::remove(l1.c_str());
    std::remove(l2.c_str());
  }
  // Composition law on 50 random triples.
  {
    Rng rng(1212);
    int okcount = 0;
    for (int t = 0; t < 50; t++) {
      auto draw = [&](int l2, int l3) {
        int n = l2 + l3;
        while (true) {
          RatMat m(n, RatVec(n, Rat(0)));
          for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) {
              if (i < l2 && j >= l2) continue;
              m[i][j] = Rat(rng.range(-3, 3));
            }
          try {
            return g_check(m, l2, l3);
          } catch (const std::invalid_argument&) {
          }
        }
      };
      BlockMatrix g = draw(1, 1), h = draw(1, 1);
      std::vector<RatVec> gens;
      for (int i = 0; i < 2; i++) {
        RatVec v = {Rat(rng.range(-2, 2)), Rat(rng.range(-2, 2))};
        if (vec_is_zero(v)) v = {rat(1), rat(0)};
        gens.push_back(v);
      }
      gens.push_back({rat(1), rat(0)});
      gens.push_back({rat(0), rat(1)});
      Lattice l = Lattice::from_generators(gens, 2);
      Lattice lhs = g_act_lattice(g, g_act_lattice(h, l));
      Lattice rhs = g_act_lattice(g_check(mat_mul(g.entries, h.entries), 1, 1), l);
      if (lattice_equal(lhs, rhs)) okcount++;
    }
    st.transcript() += "iso composition ok " + std::to_string(okcount) + "/50\n";
    o.notes.push_back("composition law on 50 random triples: " +
                      std::to_string(okcount) + "/50");
    o.passed &= okcount == 50;
  }
  return o;
}

void run_exports(std::string& transcript) {
  {
    WittPtr w = witt_spec(0, 0, 1, Lattice::from_generators({{rat(1)}}, 1));
    LoadedSpec s = wrap_witt(w, "l3=1");
    WindowDesc d;
    d.gen_bound = 2;
    d.nat_bound = 0;
    transcript += export_structure_constants(s, d);
    transcript += "\n";
  }
  {
    LoadedSpec s = wrap_block1(
        block1_spec(Lattice::from_generators({{rat(1), rat(0)}}, 2), JFlag::Zero,
                    JFlag::Zero),
        "witt-row");
    WindowDesc d;
    d.gen_bound = 2;
    d.nat_bound = 0;
    transcript += export_structure_constants(s, d);
    transcript += "\n";
  }
}

std::vector<Outcome> run_criteria(std::string& transcript,
                                  std::vector<long>* millis = nullptr) {
  Suite st(transcript);
  std::vector<Outcome> res;
  using CriterionFn = Outcome (*)(Suite&);
  CriterionFn fns[] = {criterion1, criterion2, criterion3, criterion4,
                       criterion5, criterion6, criterion7, criterion8,
                       criterion9, criterion10, criterion11, criterion12};
  for (auto* fn : fns) {
    auto t0 = std::chrono::steady_clock::now();
    res.push_back(fn(st));
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (millis) millis->push_back(dt);
  }
  run_exports(transcript);
  return res;
}

}  // namespace

int main() {
  std::string t1, t2;
  std::vector<long> millis;
  std::vector<Outcome> first = run_criteria(t1, &millis);
  std::vector<Outcome> second = run_criteria(t2);

  bool all = true;
  for (std::size_t i = 0; i < first.size(); i++) {
    const Outcome& o = first[i];
    std::cout << "criterion " << o.id << ": " << (o.passed ? "PASS" : "FAIL")
              << " - " << o.title << " [" << millis[i] / 1000.0 << " s]\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    all &= o.passed;
  }

  bool det = (t1 == t2);
  for (std::size_t i = 0; i < first.size(); i++)
    det &= first[i].passed == second[i].passed;
  std::cout << "criterion 13: " << (det ? "PASS" : "FAIL")
            << " - Determinism (re-run transcripts byte-identical, "
            << t1.size() << " bytes)\n";
  all &= det;

  std::cout << (all ? "ALL CRITERIA PASSED\n"
                    : "SOME CRITERIA FAILED (see NOTES in README)\n");
  return all ? 0 : 1;
}
