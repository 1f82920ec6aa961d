#include "nglie/laws.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace nglie {

using Json = nlohmann::ordered_json;

namespace {

LawOps<AlgElem> alg_ops(SpecPtr spec,
                        std::function<AlgElem(const AlgElem&, const AlgElem&)> bracket,
                        const Budget& budget) {
  LawOps<AlgElem> ops;
  ops.sample = [spec, budget](Rng& rng) { return random_elem(spec, budget, rng); };
  ops.bracket = std::move(bracket);
  ops.is_zero = [](const AlgElem& a) { return elem_is_zero(a); };
  ops.render = [](const AlgElem& a) { return render_elem(a); };
  ops.count = [](const AlgElem& a) { return term_count(a); };
  ops.drop = [](const AlgElem& a, std::size_t i) { return drop_term(a, i); };
  return ops;
}

LawOps<WittElem> witt_ops(WittPtr spec, const Budget& budget) {
  LawOps<WittElem> ops;
  ops.sample = [spec, budget](Rng& rng) { return random_witt(spec, budget, rng); };
  ops.bracket = [](const WittElem& a, const WittElem& b) { return witt_bracket(a, b); };
  ops.is_zero = [](const WittElem& a) { return witt_is_zero(a); };
  ops.render = [](const WittElem& a) { return render_witt(a); };
  ops.count = [](const WittElem& a) { return witt_term_count(a); };
  ops.drop = [](const WittElem& a, std::size_t i) { return witt_drop_term(a, i); };
  return ops;
}

LawOps<WeylOp> weyl_ops(WittPtr spec, const Budget& budget) {
  LawOps<WeylOp> ops;
  ops.sample = [spec, budget](Rng& rng) { return random_weyl(spec, budget, rng); };
  ops.bracket = [](const WeylOp& a, const WeylOp& b) {
    return weyl_sub(weyl_mul(a, b), weyl_mul(b, a));
  };
  ops.is_zero = [](const WeylOp& a) { return weyl_is_zero(a); };
  ops.render = [](const WeylOp& a) { return render_weyl(a); };
  ops.count = [](const WeylOp& a) { return weyl_term_count(a); };
  ops.drop = [](const WeylOp& a, std::size_t i) { return weyl_drop_term(a, i); };
  return ops;
}

LawOps<WeylMatrix> matrix_ops(std::function<WeylMatrix(Rng&)> sample) {
  LawOps<WeylMatrix> ops;
  ops.sample = std::move(sample);
  ops.bracket = [](const WeylMatrix& a, const WeylMatrix& b) {
    return matrix_bracket(a, b);
  };
  ops.is_zero = [](const WeylMatrix& a) { return matrix_is_zero(a); };
  ops.render = [](const WeylMatrix& a) { return render_matrix(a); };
  ops.count = [](const WeylMatrix& a) { return matrix_term_count(a); };
  ops.drop = [](const WeylMatrix& a, std::size_t i) { return matrix_drop_term(a, i); };
  return ops;
}

const std::function<AlgElem(const AlgElem&, const AlgElem&)> kElemAdd =
    [](const AlgElem& a, const AlgElem& b) { return elem_add(a, b); };
const std::function<AlgElem(const AlgElem&, const AlgElem&)> kElemSub =
    [](const AlgElem& a, const AlgElem& b) { return elem_sub(a, b); };
const std::function<AlgElem(const AlgElem&, const AlgElem&)> kElemMul =
    [](const AlgElem& a, const AlgElem& b) { return elem_mul(a, b); };

Report simple_report(const std::string& law, const std::string& family,
                     const TrialConfig& cfg) {
  Report r;
  r.law = law;
  r.family = family;
  r.config = cfg;
  return r;
}

/// div[w1,w2] = w1(div w2) - w2(div w1).
Report divergence_law(const std::string& family, const TrialConfig& cfg,
                      std::function<WittElem(Rng&)> sample) {
  Report rep = simple_report("divergence", family, cfg);
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, t);
    WittElem a = sample(rng), b = sample(rng);
    AlgElem lhs = divergence(witt_bracket(a, b));
    AlgElem rhs = elem_sub(witt_apply(a, divergence(b)), witt_apply(b, divergence(a)));
    rep.trials_run = t + 1;
    if (!elem_eq(lhs, rhs)) {
      rep.passed = false;
      rep.witness.trial = t;
      rep.witness.inputs = {render_witt(a), render_witt(b)};
      rep.witness.residual = render_elem(elem_sub(lhs, rhs));
      return rep;
    }
  }
  return rep;
}

/// apply([w1,w2], u) = apply(w1, apply(w2,u)) - apply(w2, apply(w1,u)).
Report witt_composition_law(const std::string& family, WittPtr spec,
                            const TrialConfig& cfg) {
  Report rep = simple_report("composition", family, cfg);
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, t);
    WittElem a = random_witt(spec, cfg.budget, rng);
    WittElem b = random_witt(spec, cfg.budget, rng);
    AlgElem u = random_elem(spec->alg, cfg.budget, rng);
    AlgElem lhs = witt_apply(witt_bracket(a, b), u);
    AlgElem rhs = elem_sub(witt_apply(a, witt_apply(b, u)),
                           witt_apply(b, witt_apply(a, u)));
    rep.trials_run = t + 1;
    if (!elem_eq(lhs, rhs)) {
      rep.passed = false;
      rep.witness.trial = t;
      rep.witness.inputs = {render_witt(a), render_witt(b), render_elem(u)};
      rep.witness.residual = render_elem(elem_sub(lhs, rhs));
      return rep;
    }
  }
  return rep;
}

/// Defining relations of the operator algebra, checked as stored values.
Report weyl_relations_law(const std::string& family, WittPtr spec,
                          const TrialConfig& cfg) {
  Report rep = simple_report("relations", family, cfg);
  int l = spec->ell();
  int checks = 0;
  for (int i = 1; i <= l; i++)
    for (int j = 1; j <= l; j++) {
      WeylOp ti = weyl_t(spec, i), tj = weyl_t(spec, j);
      WeylOp di = weyl_d(spec, i), dj = weyl_d(spec, j);
      WeylOp r1 = weyl_sub(weyl_mul(ti, tj), weyl_mul(tj, ti));
      WeylOp r2 = weyl_sub(weyl_mul(di, dj), weyl_mul(dj, di));
      WeylOp r3 = weyl_sub(weyl_mul(di, tj), weyl_mul(tj, di));
      if (i == j) r3 = weyl_sub(r3, weyl_one(spec));
      checks++;
      if (!weyl_is_zero(r1) || !weyl_is_zero(r2) || !weyl_is_zero(r3)) {
        rep.passed = false;
        rep.witness.trial = checks;
        rep.witness.inputs = {"t" + std::to_string(i), "t" + std::to_string(j)};
        rep.witness.residual = render_weyl(weyl_is_zero(r1) ? (weyl_is_zero(r2) ? r3 : r2) : r1);
        rep.trials_run = checks;
        return rep;
      }
    }
  rep.trials_run = checks;
  return rep;
}

Report weyl_composition_law(const std::string& family, WittPtr spec,
                            const TrialConfig& cfg) {
  Report rep = simple_report("composition", family, cfg);
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, t);
    WeylOp a = random_weyl(spec, cfg.budget, rng);
    WeylOp b = random_weyl(spec, cfg.budget, rng);
    AlgElem u = random_elem(spec->alg, cfg.budget, rng);
    AlgElem lhs = weyl_apply(weyl_mul(a, b), u);
    AlgElem rhs = weyl_apply(a, weyl_apply(b, u));
    rep.trials_run = t + 1;
    if (!elem_eq(lhs, rhs)) {
      rep.passed = false;
      rep.witness.trial = t;
      rep.witness.inputs = {render_weyl(a), render_weyl(b), render_elem(u)};
      rep.witness.residual = render_elem(elem_sub(lhs, rhs));
      return rep;
    }
  }
  return rep;
}

Report weyl_assoc_law(const std::string& family, WittPtr spec, const TrialConfig& cfg) {
  Report rep = simple_report("assoc", family, cfg);
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, t);
    WeylOp a = random_weyl(spec, cfg.budget, rng);
    WeylOp b = random_weyl(spec, cfg.budget, rng);
    WeylOp c = random_weyl(spec, cfg.budget, rng);
    WeylOp res = weyl_sub(weyl_mul(weyl_mul(a, b), c), weyl_mul(a, weyl_mul(b, c)));
    rep.trials_run = t + 1;
    if (!weyl_is_zero(res)) {
      rep.passed = false;
      rep.witness.trial = t;
      rep.witness.inputs = {render_weyl(a), render_weyl(b), render_weyl(c)};
      rep.witness.residual = render_weyl(res);
      return rep;
    }
  }
  return rep;
}

Report weyl_commutant_law(const std::string& family, WittPtr spec, int ell_prime,
                          const TrialConfig& cfg) {
  Report rep = simple_report("commutant", family, cfg);
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, t);
    WeylOp head = random_weyl_head(spec, ell_prime, cfg.budget, rng);
    WeylOp tail = random_weyl_tail(spec, ell_prime, cfg.budget, rng);
    WeylOp res = weyl_sub(weyl_mul(head, tail), weyl_mul(tail, head));
    rep.trials_run = t + 1;
    if (!weyl_is_zero(res)) {
      rep.passed = false;
      rep.witness.trial = t;
      rep.witness.inputs = {render_weyl(head), render_weyl(tail)};
      rep.witness.residual = render_weyl(res);
      return rep;
    }
  }
  return rep;
}

Report rho_involution_law(const std::string& family, WittPtr spec,
                          const IdealPattern& pat, const TrialConfig& cfg) {
  Report rep = simple_report("involution-rho", family, cfg);
  int k = pat.k();
  auto dtil = [&](const std::vector<int>& exps) {
    std::vector<int> full(spec->ell(), 0);
    for (std::size_t t = 0; t < exps.size(); t++) full[pat.ell_prime + t] = exps[t];
    Monomial one{vec_zero(spec->alg->gdim()), std::vector<int>(spec->ell(), 0)};
    return weyl_term(spec, std::move(one), std::move(full));
  };
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, t);
    int i = 1 + t % k, j = 1 + (t / k) % k, p = 1 + (t / (k * k)) % k;
    Budget small = cfg.budget;
    small.max_terms = std::max(1, cfg.budget.max_terms / 2);
    WeylOp r1 = random_weyl(spec, small, rng);
    WeylOp r2 = random_weyl(spec, small, rng);
    WeylOp a = weyl_mul(weyl_mul(dtil(pat.n[i - 1]), r1), dtil(pat.m[j - 1]));
    WeylOp b = weyl_mul(weyl_mul(dtil(pat.n[j - 1]), r2), dtil(pat.m[p - 1]));
    WeylOp round = rho_signed(rho_signed(a, i, j, pat), j, i, pat);
    WeylOp res = weyl_sub(round, a);
    if (weyl_is_zero(res)) {
      // rho(ab) = rho(b) rho(a) across composable slots.
      WeylOp lhs = rho_signed(weyl_mul(a, b), i, p, pat);
      WeylOp rhs = weyl_mul(rho_signed(b, j, p, pat), rho_signed(a, i, j, pat));
      res = weyl_sub(lhs, rhs);
    }
    rep.trials_run = t + 1;
    if (!weyl_is_zero(res)) {
      rep.passed = false;
      rep.witness.trial = t;
      rep.witness.inputs = {render_weyl(a), render_weyl(b)};
      rep.witness.residual = render_weyl(res);
      return rep;
    }
  }
  return rep;
}

Report sl_welldef_law(const std::string& family, WittPtr spec, int size,
                      const TrialConfig& cfg) {
  Report rep = simple_report("sl-welldef", family, cfg);
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, t);
    WeylMatrix a = random_matrix(spec, size, cfg.budget, rng);
    WeylMatrix b = random_matrix(spec, size, cfg.budget, rng);
    Rat c = rng.rat_nonzero(cfg.budget.coeff_bound);
    WeylMatrix shifted = matrix_add(a, matrix_scale(c, matrix_identity(spec, size)));
    WeylMatrix r1 = matrix_sub(sl_rep(shifted), sl_rep(a));
    WeylMatrix r2 = matrix_sub(sl_rep(matrix_bracket(shifted, b)),
                               sl_rep(matrix_bracket(a, b)));
    rep.trials_run = t + 1;
    if (!matrix_is_zero(r1) || !matrix_is_zero(r2)) {
      rep.passed = false;
      rep.witness.trial = t;
      rep.witness.inputs = {render_matrix(a), render_matrix(b), rat_str(c)};
      rep.witness.residual = render_matrix(matrix_is_zero(r1) ? r2 : r1);
      return rep;
    }
  }
  return rep;
}

SuperElem super_b_filter(const SuperSpec& s, SuperElem x) {
  if (!b1_member(s, x.odd)) {
    RatVec excluded = {(Rat(0) - s.kappa[0]) / 2, (Rat(3) - s.kappa[1]) / 2};
    Monomial target{excluded, std::vector<int>(s.alg->d, 0)};
    x.odd.terms.erase(target);
  }
  return x;
}

}  // namespace

std::vector<Monomial> monomial_window(const SpecPtr& spec, int gen_bound,
                                      int nat_bound) {
  std::vector<RatVec> basis = spec->gamma.basis();
  std::vector<Monomial> out;
  std::vector<int> nat_coords;
  for (int p = 0; p < spec->d; p++)
    if (spec->j[p] == JFlag::Nat) nat_coords.push_back(p);

  std::vector<int> coeff(basis.size(), -gen_bound);
  bool more_coeff = true;
  while (more_coeff) {
    RatVec gamma = vec_zero(spec->gdim());
    for (std::size_t i = 0; i < basis.size(); i++)
      if (coeff[i] != 0) gamma = vec_add(gamma, vec_scale(Rat(coeff[i]), basis[i]));

    std::vector<int> iexp(spec->d, 0);
    std::vector<int> nat(nat_coords.size(), 0);
    bool more_nat = true;
    while (more_nat) {
      for (std::size_t q = 0; q < nat_coords.size(); q++)
        iexp[nat_coords[q]] = nat[q];
      out.push_back(Monomial{gamma, iexp});
      more_nat = false;
      for (std::size_t q = 0; q < nat.size(); q++) {
        if (nat[q] < nat_bound) {
          nat[q]++;
          std::fill(nat.begin(), nat.begin() + q, 0);
          more_nat = true;
          break;
        }
      }
    }
    more_coeff = false;
    for (std::size_t i = 0; i < coeff.size(); i++) {
      if (coeff[i] < gen_bound) {
        coeff[i]++;
        std::fill(coeff.begin(), coeff.begin() + i, -gen_bound);
        more_coeff = true;
        break;
      }
    }
  }
  return out;
}

WindowCheck derived_window_block1(const BlockISpec& s, int bound) {
  std::vector<Monomial> mons = monomial_window(s.alg, bound, 0);
  std::map<Monomial, std::size_t, MonomialLess> index;
  for (std::size_t i = 0; i < mons.size(); i++) index[mons[i]] = i;

  WindowOps<AlgElem> w;
  for (const auto& m : mons) w.basis.push_back(monomial_elem(s.alg, m));
  w.bracket = [&](const AlgElem& a, const AlgElem& b) {
    return quotient_class1(s, bracket_class1(s, a, b));
  };
  w.project = [&](const AlgElem& a) {
    std::vector<Rat> coords(mons.size(), Rat(0));
    bool leaked = false;
    for (const auto& [m, c] : a.terms) {
      auto it = index.find(m);
      if (it == index.end())
        leaked = true;
      else
        coords[it->second] = c;
    }
    return std::make_pair(coords, leaked);
  };
  SpanResult span = derived_window<AlgElem>(w);

  WindowCheck out;
  out.leakage_free = span.leakage_free();
  auto unit_of = [&](const RatVec& gamma) {
    std::vector<Rat> coords(mons.size(), Rat(0));
    Monomial m{gamma, std::vector<int>(s.alg->d, 0)};
    auto it = index.find(m);
    if (it == index.end()) return std::make_pair(false, coords);
    coords[it->second] = 1;
    return std::make_pair(true, coords);
  };
  auto [have1, u1] = unit_of({Rat(0), Rat(1)});
  auto [have2, u2] = unit_of({Rat(0), Rat(2)});
  bool excluded1 = !have1 || !span.in_span(u1);
  bool excluded2 = !have2 || !span.in_span(u2);
  out.passed = out.leakage_free && excluded1 && excluded2;
  out.detail = "window=" + std::to_string(mons.size()) +
               " derived_dim=" + std::to_string(span.dim()) +
               " leakage_pairs=" + std::to_string(span.leakage_pairs) +
               " sigma1_excluded=" + (excluded1 ? "yes" : "no") +
               " sigma2_excluded=" + (excluded2 ? "yes" : "no");
  return out;
}

WindowCheck derived_window_block3(const SuperSpec& s, int bound) {
  std::vector<Monomial> mons = monomial_window(s.alg, bound, 0);
  std::map<Monomial, std::size_t, MonomialLess> index;
  for (std::size_t i = 0; i < mons.size(); i++) index[mons[i]] = i;

  RatMat reduced;
  int leakage = 0;
  for (const auto& me : mons)
    for (const auto& mo : mons) {
      SuperElem br = super_bracket(s, super_even(monomial_elem(s.alg, me)),
                                   super_odd(monomial_elem(s.alg, mo)));
      std::vector<Rat> coords(mons.size(), Rat(0));
      bool leaked = !elem_is_zero(br.even);
      for (const auto& [m, c] : br.odd.terms) {
        auto it = index.find(m);
        if (it == index.end())
          leaked = true;
        else
          coords[it->second] = c;
      }
      if (leaked) leakage++;
      span_add(reduced, std::move(coords));
    }

  SpanResult span;
  span.reduced = std::move(reduced);
  RatVec excluded = {(Rat(0) - s.kappa[0]) / 2, (Rat(3) - s.kappa[1]) / 2};
  bool ok = true;
  std::string bad;
  for (std::size_t i = 0; i < mons.size(); i++) {
    std::vector<Rat> unit(mons.size(), Rat(0));
    unit[i] = 1;
    bool reached = span.in_span(unit);
    bool should = !(mons[i].gamma == excluded);
    if (reached != should) {
      ok = false;
      bad = render_elem(monomial_elem(s.alg, mons[i]));
      break;
    }
  }
  WindowCheck out;
  out.leakage_free = leakage == 0;
  out.passed = ok;
  out.detail = "window=" + std::to_string(mons.size()) +
               " odd_derived_dim=" + std::to_string(span.dim()) +
               " leaking_pairs=" + std::to_string(leakage) +
               (ok ? " exclusion reproduced exactly"
                   : " mismatch at " + bad);
  return out;
}

std::vector<std::string> laws_for(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Witt:
      return {"skew", "jacobi", "divergence", "composition"};
    case FamilyKind::S:
      return {"skew", "jacobi", "divergence", "closure"};
    case FamilyKind::Block1:
      return {"skew", "jacobi", "centrality", "leibniz", "derived-window"};
    case FamilyKind::Block2:
      return {"skew", "jacobi", "centrality", "skew-literal"};
    case FamilyKind::Block3:
      return {"graded-skew", "super-jacobi", "centrality", "closure",
              "derived-window"};
    case FamilyKind::Ham:
      return {"skew", "jacobi", "centrality", "leibniz"};
    case FamilyKind::Contact:
      return {"skew", "jacobi"};
    case FamilyKind::WeylGl:
      return {"relations", "assoc", "composition", "commutant",
              "involution-tau", "involution-star", "involution-rho", "closure"};
    case FamilyKind::WeylSl:
      return {"relations", "assoc", "composition", "commutant",
              "involution-tau", "sl-welldef"};
    case FamilyKind::WeylO:
      return {"relations", "assoc", "composition", "commutant",
              "involution-tau", "involution-star", "involution-rho", "closure"};
    case FamilyKind::WeylSp:
      return {"relations", "assoc", "composition", "commutant",
              "involution-tau", "closure"};
  }
  return {};
}

Report run_family_law(const LoadedSpec& s, const std::string& law,
                      const TrialConfig& cfg) {
  auto known = laws_for(s.kind);
  if (std::find(known.begin(), known.end(), law) == known.end())
    throw ParseError("law '" + law + "' is not applicable to family " + s.family);
  const std::string& fam = s.summary.empty() ? s.family : s.family + ":" + s.summary;

  switch (s.kind) {
    case FamilyKind::Witt: {
      auto ops = witt_ops(s.witt, cfg.budget);
      auto add = [](const WittElem& a, const WittElem& b) { return witt_add(a, b); };
      if (law == "skew") return check_skew<WittElem>(fam, ops, add, cfg);
      if (law == "jacobi") return check_jacobi<WittElem>(fam, ops, add, cfg);
      if (law == "divergence")
        return divergence_law(fam, cfg, ops.sample);
      return witt_composition_law(fam, s.witt, cfg);
    }
    case FamilyKind::S: {
      WittPtr spec = s.witt;
      RatVec rho = s.rho;
      auto ops = witt_ops(spec, cfg.budget);
      ops.sample = [spec, rho, cfg](Rng& rng) {
        return s_random(spec, rho, cfg.budget, rng);
      };
      auto add = [](const WittElem& a, const WittElem& b) { return witt_add(a, b); };
      if (law == "skew") return check_skew<WittElem>(fam, ops, add, cfg);
      if (law == "jacobi") return check_jacobi<WittElem>(fam, ops, add, cfg);
      if (law == "divergence") return divergence_law(fam, cfg, ops.sample);
      auto member = [spec, rho](const WittElem& w) { return s_member(w, rho); };
      return check_closure<WittElem>(fam, ops, member, cfg);
    }
    case FamilyKind::Block1: {
      const BlockISpec& b = *s.b1;
      auto bracket = [b](const AlgElem& u, const AlgElem& v) {
        return bracket_class1(b, u, v);
      };
      auto ops = alg_ops(b.alg, bracket, cfg.budget);
      if (law == "skew") return check_skew<AlgElem>(fam, ops, kElemAdd, cfg);
      if (law == "jacobi") return check_jacobi<AlgElem>(fam, ops, kElemAdd, cfg);
      if (law == "centrality") {
        AlgElem cand = b.sigma1_in_gamma
                           ? group_elem(b.alg, {Rat(0), Rat(1)})
                           : elem_zero(b.alg);
        return check_centrality<AlgElem>(fam, cand, ops, cfg);
      }
      if (law == "leibniz")
        return check_leibniz<AlgElem>(fam, ops, kElemMul, kElemSub, cfg);
      WindowCheck wc = derived_window_block1(b, 4);
      Report rep = simple_report("derived-window", fam, cfg);
      rep.passed = wc.passed;
      rep.trials_run = 1;
      if (!wc.passed) rep.witness.residual = wc.detail;
      return rep;
    }
    case FamilyKind::Block2: {
      const BlockIISpec& b = *s.b2;
      auto bracket = [b](const AlgElem& u, const AlgElem& v) {
        return bracket_class2(b, u, v);
      };
      auto ops = alg_ops(b.alg, bracket, cfg.budget);
      if (law == "skew") return check_skew<AlgElem>(fam, ops, kElemAdd, cfg);
      if (law == "jacobi") return check_jacobi<AlgElem>(fam, ops, kElemAdd, cfg);
      if (law == "centrality")
        return check_centrality<AlgElem>(fam, group_elem(b.alg, b.sigma), ops, cfg);
      // skew of the verbatim transcription
      auto literal = [b](const AlgElem& u, const AlgElem& v) {
        return bracket_class2_literal(b, u, v);
      };
      auto lops = alg_ops(b.alg, literal, cfg.budget);
      Report rep = check_skew<AlgElem>(fam, lops, kElemAdd, cfg);
      rep.law = "skew-literal";
      return rep;
    }
    case FamilyKind::Block3: {
      const SuperSpec& b = *s.b3;
      if (law == "graded-skew") return check_graded_skew(fam, b, cfg);
      if (law == "super-jacobi") return check_super_jacobi(fam, b, cfg);
      LawOps<SuperElem> ops;
      ops.sample = [b, cfg](Rng& rng) { return random_super(b, cfg.budget, rng); };
      ops.bracket = [b](const SuperElem& x, const SuperElem& y) {
        return super_bracket(b, x, y);
      };
      ops.is_zero = [](const SuperElem& x) { return super_is_zero(x); };
      ops.render = [](const SuperElem& x) { return render_super(x); };
      ops.count = [](const SuperElem& x) { return super_term_count(x); };
      ops.drop = [](const SuperElem& x, std::size_t i) { return super_drop_term(x, i); };
      if (law == "centrality") {
        SuperElem cand = b.sigma1_in_gamma
                             ? super_even(group_elem(b.alg, {Rat(0), Rat(1)}))
                             : super_zero(b);
        return check_centrality<SuperElem>(fam, cand, ops, cfg);
      }
      if (law == "closure") {
        ops.sample = [b, cfg](Rng& rng) {
          return super_b_filter(b, random_super(b, cfg.budget, rng));
        };
        auto member = [b](const SuperElem& x) { return b1_member(b, x.odd); };
        return check_closure<SuperElem>(fam, ops, member, cfg);
      }
      WindowCheck wc = derived_window_block3(b, 3);
      Report rep = simple_report("derived-window", fam, cfg);
      rep.passed = wc.passed;
      rep.trials_run = 1;
      if (!wc.passed) rep.witness.residual = wc.detail;
      return rep;
    }
    case FamilyKind::Ham: {
      const HamSpec& h = *s.ham;
      auto bracket = [&h](const AlgElem& u, const AlgElem& v) {
        return ham_bracket(h, u, v);
      };
      auto ops = alg_ops(h.alg, bracket, cfg.budget);
      if (law == "skew") return check_skew<AlgElem>(fam, ops, kElemAdd, cfg);
      if (law == "jacobi") return check_jacobi<AlgElem>(fam, ops, kElemAdd, cfg);
      if (law == "centrality")
        return check_centrality<AlgElem>(fam, elem_one(h.alg), ops, cfg);
      return check_leibniz<AlgElem>(fam, ops, kElemMul, kElemSub, cfg);
    }
    case FamilyKind::Contact: {
      const ContactSpec& c = *s.contact;
      auto bracket = [&c](const AlgElem& u, const AlgElem& v) {
        return contact_bracket(c, u, v);
      };
      auto ops = alg_ops(c.alg, bracket, cfg.budget);
      if (law == "skew") return check_skew<AlgElem>(fam, ops, kElemAdd, cfg);
      return check_jacobi<AlgElem>(fam, ops, kElemAdd, cfg);
    }
    case FamilyKind::WeylGl:
    case FamilyKind::WeylSl:
    case FamilyKind::WeylO:
    case FamilyKind::WeylSp: {
      WittPtr spec = s.witt;
      if (law == "relations") return weyl_relations_law(fam, spec, cfg);
      if (law == "assoc") return weyl_assoc_law(fam, spec, cfg);
      if (law == "composition") return weyl_composition_law(fam, spec, cfg);
      if (law == "commutant")
        return weyl_commutant_law(fam, spec, s.ell_prime, cfg);
      if (law == "involution-tau") {
        auto ops = weyl_ops(spec, cfg.budget);
        int lp = s.ell_prime;
        auto map = [spec, lp](const WeylOp& a) { return tau(a, lp); };
        auto mul = [](const WeylOp& a, const WeylOp& b) { return weyl_mul(a, b); };
        auto sub = [](const WeylOp& a, const WeylOp& b) { return weyl_sub(a, b); };
        return check_involution<WeylOp>(fam, ops, map, mul, sub, cfg);
      }
      if (law == "sl-welldef")
        return sl_welldef_law(fam, spec, s.matrix_size, cfg);
      const IdealPattern& pat = *s.pattern;
      if (law == "involution-rho") return rho_involution_law(fam, spec, pat, cfg);
      if (law == "involution-star") {
        auto sample = [spec, pat, cfg](Rng& rng) {
          return random_gl_member(spec, pat, cfg.budget, rng);
        };
        auto ops = matrix_ops(sample);
        auto map = [pat](const WeylMatrix& a) { return star(a, pat); };
        auto mul = [](const WeylMatrix& a, const WeylMatrix& b) {
          return matrix_mul(a, b);
        };
        auto sub = [](const WeylMatrix& a, const WeylMatrix& b) {
          return matrix_sub(a, b);
        };
        return check_involution<WeylMatrix>(fam, ops, map, mul, sub, cfg);
      }
      // closure
      if (s.kind == FamilyKind::WeylGl) {
        auto sample = [spec, pat, cfg](Rng& rng) {
          return random_gl_member(spec, pat, cfg.budget, rng);
        };
        auto ops = matrix_ops(sample);
        auto member = [pat](const WeylMatrix& a) { return gl_member(a, pat); };
        return check_closure<WeylMatrix>(fam, ops, member, cfg);
      }
      if (s.kind == FamilyKind::WeylO) {
        auto sample = [spec, pat, cfg](Rng& rng) {
          return o_project(random_gl_member(spec, pat, cfg.budget, rng), pat);
        };
        auto ops = matrix_ops(sample);
        auto member = [pat](const WeylMatrix& a) { return o_member(a, pat); };
        return check_closure<WeylMatrix>(fam, ops, member, cfg);
      }
      auto sample = [spec, pat, cfg](Rng& rng) {
        return sp_project(random_sp_shape(spec, pat, cfg.budget, rng), pat);
      };
      auto ops = matrix_ops(sample);
      auto member = [pat](const WeylMatrix& a) { return sp_member(a, pat); };
      return check_closure<WeylMatrix>(fam, ops, member, cfg);
    }
  }
  throw ParseError("unreachable law dispatch");
}

std::string export_structure_constants(const LoadedSpec& s, const WindowDesc& w) {
  struct BasisElem {
    Monomial mon;
    int slot = 0;    // D slot for witt/s (1-based), 0 otherwise
    int parity = 0;  // 1 = odd (block3)
    std::string descr;
  };
  std::vector<BasisElem> basis;
  SpecPtr alg;

  auto build_monomials = [&](const SpecPtr& spec) {
    return monomial_window(spec, w.gen_bound, w.nat_bound);
  };

  std::map<std::string, std::size_t> index;  // descriptor -> index

  switch (s.kind) {
    case FamilyKind::Witt:
    case FamilyKind::S: {
      alg = s.witt->alg;
      auto mons = build_monomials(alg);
      for (const auto& m : mons)
        for (int p = 1; p <= s.witt->ell(); p++) {
          BasisElem b;
          b.mon = m;
          b.slot = p;
          WittElem e = witt_term(s.witt, p, monomial_elem(alg, m));
          b.descr = render_witt(e);
          basis.push_back(std::move(b));
        }
      break;
    }
    case FamilyKind::Block3: {
      alg = s.b3->alg;
      auto mons = build_monomials(alg);
      for (const auto& m : mons)
        for (int par = 0; par <= 1; par++) {
          BasisElem b;
          b.mon = m;
          b.parity = par;
          AlgElem e = monomial_elem(alg, m);
          b.descr = render_super(par ? super_odd(e) : super_even(e));
          basis.push_back(std::move(b));
        }
      break;
    }
    default: {
      alg = s.b1 ? s.b1->alg
                 : s.b2 ? s.b2->alg
                        : s.ham ? s.ham->alg
                                : s.contact ? s.contact->alg : nullptr;
      if (!alg) throw ParseError("structure constants are not exported for this family");
      for (const auto& m : build_monomials(alg)) {
        BasisElem b;
        b.mon = m;
        b.descr = render_elem(monomial_elem(alg, m));
        basis.push_back(std::move(b));
      }
      break;
    }
  }
  for (std::size_t i = 0; i < basis.size(); i++) index[basis[i].descr] = i;

  auto expand_alg = [&](const AlgElem& e, int slot, int parity,
                        std::vector<std::pair<std::size_t, Rat>>& terms,
                        std::vector<std::string>& outside) {
    for (const auto& [m, c] : e.terms) {
      std::string d;
      if (s.kind == FamilyKind::Witt || s.kind == FamilyKind::S) {
        d = render_witt(witt_term(s.witt, slot, monomial_elem(alg, m)));
      } else if (s.kind == FamilyKind::Block3) {
        AlgElem one = monomial_elem(alg, m);
        d = render_super(parity ? super_odd(one) : super_even(one));
      } else {
        d = render_elem(monomial_elem(alg, m));
      }
      auto it = index.find(d);
      if (it == index.end())
        outside.push_back(render_elem(monomial_elem(alg, m, c)));
      else
        terms.push_back({it->second, c});
    }
  };

  auto bracket_of = [&](std::size_t i, std::size_t j,
                        std::vector<std::pair<std::size_t, Rat>>& terms,
                        std::vector<std::string>& outside) {
    const BasisElem& A = basis[i];
    const BasisElem& B = basis[j];
    switch (s.kind) {
      case FamilyKind::Witt:
      case FamilyKind::S: {
        WittElem a = witt_term(s.witt, A.slot, monomial_elem(alg, A.mon));
        WittElem b = witt_term(s.witt, B.slot, monomial_elem(alg, B.mon));
        WittElem r = witt_bracket(a, b);
        for (int p = 1; p <= s.witt->ell(); p++)
          expand_alg(r.u[p - 1], p, 0, terms, outside);
        break;
      }
      case FamilyKind::Block1: {
        AlgElem r = quotient_class1(
            *s.b1, bracket_class1(*s.b1, monomial_elem(alg, A.mon),
                                  monomial_elem(alg, B.mon)));
        expand_alg(r, 0, 0, terms, outside);
        break;
      }
      case FamilyKind::Block2: {
        AlgElem r = quotient_class2(
            *s.b2, bracket_class2(*s.b2, monomial_elem(alg, A.mon),
                                  monomial_elem(alg, B.mon)));
        expand_alg(r, 0, 0, terms, outside);
        break;
      }
      case FamilyKind::Block3: {
        AlgElem ea = monomial_elem(alg, A.mon);
        AlgElem eb = monomial_elem(alg, B.mon);
        SuperElem r = super_bracket(*s.b3,
                                    A.parity ? super_odd(ea) : super_even(ea),
                                    B.parity ? super_odd(eb) : super_even(eb));
        r = quotient_class3(*s.b3, r);
        expand_alg(r.even, 0, 0, terms, outside);
        expand_alg(r.odd, 0, 1, terms, outside);
        break;
      }
      case FamilyKind::Ham: {
        AlgElem r = ham_quotient(ham_bracket(*s.ham, monomial_elem(alg, A.mon),
                                             monomial_elem(alg, B.mon)));
        expand_alg(r, 0, 0, terms, outside);
        break;
      }
      case FamilyKind::Contact: {
        AlgElem r = contact_bracket(*s.contact, monomial_elem(alg, A.mon),
                                    monomial_elem(alg, B.mon));
        expand_alg(r, 0, 0, terms, outside);
        break;
      }
      default:
        throw ParseError("structure constants are not exported for this family");
    }
  };

  Json out;
  out["family"] = s.family;
  out["window"]["generator_coeff_bound"] = w.gen_bound;
  out["window"]["nat_bound"] = w.nat_bound;
  Json jb = Json::array();
  for (const auto& b : basis) jb.push_back(b.descr);
  out["basis"] = jb;
  Json brackets = Json::array();
  Json leakage = Json::array();
  for (std::size_t i = 0; i < basis.size(); i++)
    for (std::size_t j = 0; j < basis.size(); j++) {
      if (i == j && s.kind != FamilyKind::Block3) continue;
      std::vector<std::pair<std::size_t, Rat>> terms;
      std::vector<std::string> outside;
      bracket_of(i, j, terms, outside);
      if (!terms.empty()) {
        Json e;
        e["i"] = i;
        e["j"] = j;
        Json ts = Json::array();
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [k, c] : terms) {
          Json t;
          t["k"] = k;
          t["coeff"] = rat_str(c);
          ts.push_back(t);
        }
        e["terms"] = ts;
        brackets.push_back(e);
      }
      if (!outside.empty()) {
        Json e;
        e["i"] = i;
        e["j"] = j;
        e["outside"] = outside;
        leakage.push_back(e);
      }
    }
  out["brackets"] = brackets;
  out["leakage"] = leakage;
  return out.dump();
}

}  // namespace nglie
