#pragma once

#include <functional>
#include <string>

#include "nglie/block.hpp"

namespace nglie {

struct TrialConfig {
  std::uint64_t seed = 1;
  int trials = 200;
  Budget budget;
};

struct Witness {
  int trial = -1;
  std::vector<std::string> inputs;
  std::string residual;
};

struct Report {
  std::string law;
  std::string family;
  TrialConfig config;
  bool passed = true;
  int trials_run = 0;
  Witness witness;  // meaningful only when !passed

  std::string to_json() const;
};

/// Element-type-generic operation bundle. `sample` must be deterministic in
/// the supplied stream; `drop`/`count` drive greedy witness minimisation.
template <class E>
struct LawOps {
  std::function<E(Rng&)> sample;
  std::function<E(const E&, const E&)> bracket;
  std::function<bool(const E&)> is_zero;
  std::function<std::string(const E&)> render;
  std::function<std::size_t(const E&)> count;
  std::function<E(const E&, std::size_t)> drop;
};

namespace detail {

/// Greedy minimisation: keep removing single terms from any input while the
/// residual stays nonzero.
template <class E>
void minimise(const LawOps<E>& ops,
              const std::function<E(const std::vector<E>&)>& residual,
              std::vector<E>& inputs) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t which = 0; which < inputs.size(); which++) {
      std::size_t n = ops.count(inputs[which]);
      for (std::size_t t = 0; t < n; t++) {
        std::vector<E> trial = inputs;
        trial[which] = ops.drop(inputs[which], t);
        if (!ops.is_zero(residual(trial))) {
          inputs = std::move(trial);
          shrunk = true;
          break;
        }
      }
      if (shrunk) break;
    }
  }
}

template <class E>
Report run_law(const std::string& law, const std::string& family,
               const LawOps<E>& ops, const TrialConfig& cfg, int arity,
               const std::function<E(const std::vector<E>&)>& residual) {
  Report rep;
  rep.law = law;
  rep.family = family;
  rep.config = cfg;
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, static_cast<std::uint64_t>(t));
    std::vector<E> inputs;
    inputs.reserve(arity);
    for (int i = 0; i < arity; i++) inputs.push_back(ops.sample(rng));
    E res = residual(inputs);
    rep.trials_run = t + 1;
    if (!ops.is_zero(res)) {
      rep.passed = false;
      minimise(ops, residual, inputs);
      rep.witness.trial = t;
      for (const auto& e : inputs) rep.witness.inputs.push_back(ops.render(e));
      rep.witness.residual = ops.render(residual(inputs));
      return rep;
    }
  }
  return rep;
}

}  // namespace detail

/// [a,b] + [b,a] = 0.
template <class E>
Report check_skew(const std::string& family, const LawOps<E>& ops,
                  const std::function<E(const E&, const E&)>& add,
                  const TrialConfig& cfg) {
  auto residual = [&](const std::vector<E>& in) {
    return add(ops.bracket(in[0], in[1]), ops.bracket(in[1], in[0]));
  };
  return detail::run_law<E>("skew", family, ops, cfg, 2, residual);
}

/// [[a,b],c] + [[b,c],a] + [[c,a],b] = 0.
template <class E>
Report check_jacobi(const std::string& family, const LawOps<E>& ops,
                    const std::function<E(const E&, const E&)>& add,
                    const TrialConfig& cfg) {
  auto residual = [&](const std::vector<E>& in) {
    E r = add(ops.bracket(ops.bracket(in[0], in[1]), in[2]),
              ops.bracket(ops.bracket(in[1], in[2]), in[0]));
    return add(r, ops.bracket(ops.bracket(in[2], in[0]), in[1]));
  };
  return detail::run_law<E>("jacobi", family, ops, cfg, 3, residual);
}

/// bracket(candidate, sample) = 0 for every trial.
template <class E>
Report check_centrality(const std::string& family, const E& candidate,
                        const LawOps<E>& ops, const TrialConfig& cfg) {
  auto residual = [&](const std::vector<E>& in) {
    return ops.bracket(candidate, in[0]);
  };
  return detail::run_law<E>("centrality", family, ops, cfg, 1, residual);
}

/// [u, v*w] = [u,v]*w + v*[u,w].
template <class E>
Report check_leibniz(const std::string& family, const LawOps<E>& ops,
                     const std::function<E(const E&, const E&)>& mul,
                     const std::function<E(const E&, const E&)>& sub,
                     const TrialConfig& cfg) {
  auto residual = [&](const std::vector<E>& in) {
    E lhs = ops.bracket(in[0], mul(in[1], in[2]));
    E rhs = sub(sub(lhs, mul(ops.bracket(in[0], in[1]), in[2])),
                mul(in[1], ops.bracket(in[0], in[2])));
    return rhs;
  };
  return detail::run_law<E>("leibniz", family, ops, cfg, 3, residual);
}

/// membership(bracket(a,b)) per trial; reports the offending pair.
template <class E>
Report check_closure(const std::string& family, const LawOps<E>& ops,
                     const std::function<bool(const E&)>& member,
                     const TrialConfig& cfg) {
  Report rep;
  rep.law = "closure";
  rep.family = family;
  rep.config = cfg;
  for (int t = 0; t < cfg.trials; t++) {
    Rng rng = Rng::split(cfg.seed, static_cast<std::uint64_t>(t));
    E a = ops.sample(rng);
    E b = ops.sample(rng);
    rep.trials_run = t + 1;
    if (!member(ops.bracket(a, b))) {
      rep.passed = false;
      rep.witness.trial = t;
      rep.witness.inputs = {ops.render(a), ops.render(b)};
      rep.witness.residual = ops.render(ops.bracket(a, b));
      return rep;
    }
  }
  return rep;
}

/// map(map(a)) = a and map(a*b) = map(b)*map(a).
template <class E>
Report check_involution(const std::string& family, const LawOps<E>& ops,
                        const std::function<E(const E&)>& map,
                        const std::function<E(const E&, const E&)>& mul,
                        const std::function<E(const E&, const E&)>& sub,
                        const TrialConfig& cfg) {
  auto residual = [&](const std::vector<E>& in) {
    E r1 = sub(map(map(in[0])), in[0]);
    if (!ops.is_zero(r1)) return r1;
    return sub(map(mul(in[0], in[1])), mul(map(in[1]), map(in[0])));
  };
  return detail::run_law<E>("involution", family, ops, cfg, 2, residual);
}

/// Exact span computations over a finite monomial window. `project` returns
/// coordinates over the window together with a flag marking terms that fell
/// outside.
template <class E>
struct WindowOps {
  std::vector<E> basis;
  std::function<E(const E&, const E&)> bracket;
  std::function<std::pair<std::vector<Rat>, bool>(const E&)> project;
};

struct SpanResult {
  RatMat reduced;            // row-reduced basis of the reached span
  int leakage_pairs = 0;     // bracket pairs with out-of-window terms
  bool leakage_free() const { return leakage_pairs == 0; }
  int dim() const { return static_cast<int>(reduced.size()); }
  bool in_span(const std::vector<Rat>& coords) const;
};

/// Appends `coords` to the reduced basis when independent; true if the rank
/// grew.
bool span_add(RatMat& reduced, std::vector<Rat> coords);

/// Row-reduced basis of Span{[b_i, b_j]} intersected with the window span.
template <class E>
SpanResult derived_window(const WindowOps<E>& w) {
  SpanResult res;
  for (std::size_t i = 0; i < w.basis.size(); i++)
    for (std::size_t j = i; j < w.basis.size(); j++) {
      auto [coords, leaked] = w.project(w.bracket(w.basis[i], w.basis[j]));
      if (leaked) res.leakage_pairs++;
      span_add(res.reduced, std::move(coords));
    }
  return res;
}

struct ProbeResult {
  int dim_reached = 0;
  int window_dim = 0;
  int iterations = 0;
  int leakage_count = 0;
  bool heuristic = true;  // evidence only, never a proof
};

/// Grows the span of iterated brackets of `seed` against the window basis.
template <class E>
ProbeResult ideal_probe(const WindowOps<E>& w, const E& seed, int depth) {
  ProbeResult res;
  res.window_dim = static_cast<int>(w.basis.size());
  RatMat reduced;
  std::vector<E> reps;
  auto [c0, leak0] = w.project(seed);
  if (leak0) res.leakage_count++;
  if (span_add(reduced, std::move(c0))) reps.push_back(seed);
  for (int it = 0; it < depth; it++) {
    res.iterations = it + 1;
    bool grew = false;
    std::vector<E> frontier = reps;
    for (const auto& b : w.basis)
      for (const auto& r : frontier) {
        E e = w.bracket(b, r);
        auto [coords, leaked] = w.project(e);
        if (leaked) res.leakage_count++;
        if (span_add(reduced, std::move(coords))) {
          reps.push_back(std::move(e));
          grew = true;
        }
      }
    if (!grew) break;
  }
  res.dim_reached = static_cast<int>(reduced.size());
  return res;
}

std::string budget_json(const Budget& b);

/// Graded Jacobi on random homogeneous triples:
///   (-1)^{|X||Z|}[[X,Y],Z] + (-1)^{|Y||X|}[[Y,Z],X] + (-1)^{|Z||Y|}[[Z,X],Y] = 0.
Report check_super_jacobi(const std::string& family, const SuperSpec& s,
                          const TrialConfig& cfg);

/// [X,Y] = -(-1)^{|X||Y|}[Y,X] on random homogeneous pairs.
Report check_graded_skew(const std::string& family, const SuperSpec& s,
                         const TrialConfig& cfg);

}  // namespace nglie
