#include "nglie/verify.hpp"

#include <json.hpp>

namespace nglie {

using Json = nlohmann::ordered_json;

std::string budget_json(const Budget& b) {
  Json j;
  j["max_terms"] = b.max_terms;
  j["max_nat_exponent"] = b.max_nat;
  j["generator_coeff_bound"] = b.gen_bound;
  j["coeff_bound"] = b.coeff_bound;
  return j.dump();
}

std::string Report::to_json() const {
  Json j;
  j["law"] = law;
  j["family"] = family;
  j["config"]["seed"] = config.seed;
  j["config"]["trials"] = config.trials;
  j["config"]["budget"] = Json::parse(budget_json(config.budget));
  j["passed"] = passed;
  j["trials_run"] = trials_run;
  if (!passed) {
    Json w;
    w["trial"] = witness.trial;
    w["inputs"] = witness.inputs;
    w["residual"] = witness.residual;
    j["witness"] = w;
  }
  return j.dump();
}

bool span_add(RatMat& reduced, std::vector<Rat> v) {
  for (const auto& row : reduced) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) p++;
    if (p >= v.size()) continue;
    if (v[p] == 0) continue;
    Rat f = v[p];
    for (std::size_t j = 0; j < v.size(); j++) v[j] -= f * row[j];
  }
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) p++;
  if (p == v.size()) return false;
  Rat lead = v[p];
  for (auto& x : v) x /= lead;
  for (auto& row : reduced) {
    if (row[p] == 0) continue;
    Rat f = row[p];
    for (std::size_t j = 0; j < row.size(); j++) row[j] -= f * v[j];
  }
  reduced.push_back(std::move(v));
  return true;
}

namespace {

struct HomogeneousTriple {
  std::vector<AlgElem> val;  // underlying elements
  std::vector<int> par;      // 0 even, 1 odd
};

SuperElem as_super(const AlgElem& v, int parity) {
  return parity == 0 ? super_even(v) : super_odd(v);
}

SuperElem graded_jacobi_residual(const SuperSpec& s, const HomogeneousTriple& t) {
  auto br = [&](const SuperElem& a, const SuperElem& b) {
    return super_bracket(s, a, b);
  };
  SuperElem x = as_super(t.val[0], t.par[0]);
  SuperElem y = as_super(t.val[1], t.par[1]);
  SuperElem z = as_super(t.val[2], t.par[2]);
  auto sign = [](int a, int b) { return (a * b) % 2 ? Rat(-1) : Rat(1); };
  SuperElem r = super_scale(sign(t.par[0], t.par[2]), br(br(x, y), z));
  r = super_add(r, super_scale(sign(t.par[1], t.par[0]), br(br(y, z), x)));
  r = super_add(r, super_scale(sign(t.par[2], t.par[1]), br(br(z, x), y)));
  return r;
}

}  // namespace

Report check_super_jacobi(const std::string& family, const SuperSpec& s,
                          const TrialConfig& cfg) {
  Report rep;
  rep.law = "super-jacobi";
  rep.family = family;
  rep.config = cfg;
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, static_cast<std::uint64_t>(t));
    HomogeneousTriple tri;
    for (int i = 0; i < 3; i++) {
      // Sweep all eight parity patterns; trial index selects the pattern so
      // odd-odd-odd triples are exercised explicitly.
      tri.par.push_back((t >> i) & 1);
      tri.val.push_back(random_elem(s.alg, cfg.budget, rng));
    }
    SuperElem res = graded_jacobi_residual(s, tri);
    rep.trials_run = t + 1;
    if (!super_is_zero(res)) {
      rep.passed = false;
      // Greedy single-term minimisation on the three inputs.
      bool shrunk = true;
      while (shrunk) {
        shrunk = false;
        for (int which = 0; which < 3 && !shrunk; which++) {
          std::size_t n = tri.val[which].terms.size();
          for (std::size_t i = 0; i < n; i++) {
            HomogeneousTriple trial = tri;
            trial.val[which] = drop_term(tri.val[which], i);
            if (!super_is_zero(graded_jacobi_residual(s, trial))) {
              tri = std::move(trial);
              shrunk = true;
              break;
            }
          }
        }
      }
      rep.witness.trial = t;
      for (int i = 0; i < 3; i++)
        rep.witness.inputs.push_back(render_super(as_super(tri.val[i], tri.par[i])));
      rep.witness.residual = render_super(graded_jacobi_residual(s, tri));
      return rep;
    }
  }
  return rep;
}

Report check_graded_skew(const std::string& family, const SuperSpec& s,
                         const TrialConfig& cfg) {
  Report rep;
  rep.law = "graded-skew";
  rep.family = family;
  rep.config = cfg;
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, static_cast<std::uint64_t>(t));
    int pa = (t >> 0) & 1, pb = (t >> 1) & 1;
    AlgElem a = random_elem(s.alg, cfg.budget, rng);
    AlgElem b = random_elem(s.alg, cfg.budget, rng);
    SuperElem x = as_super(a, pa), y = as_super(b, pb);
    Rat sign = (pa * pb) % 2 ? Rat(-1) : Rat(1);
    SuperElem res = super_add(super_bracket(s, x, y),
                              super_scale(sign, super_bracket(s, y, x)));
    rep.trials_run = t + 1;
    if (!super_is_zero(res)) {
      rep.passed = false;
      rep.witness.trial = t;
      rep.witness.inputs = {render_super(x), render_super(y)};
      rep.witness.residual = render_super(res);
      return rep;
    }
  }
  return rep;
}

bool SpanResult::in_span(const std::vector<Rat>& coords) const {
  std::vector<Rat> v = coords;
  for (const auto& row : reduced) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) p++;
    if (p >= v.size()) continue;
    if (v[p] == 0) continue;
    Rat f = v[p];
    for (std::size_t j = 0; j < v.size(); j++) v[j] -= f * row[j];
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace nglie
