#pragma once

#include "nglie/specfile.hpp"
#include "nglie/verify.hpp"

namespace nglie {

/// Laws runnable against a loaded family. Unknown or inapplicable law names
/// raise ParseError.
Report run_family_law(const LoadedSpec& s, const std::string& law,
                      const TrialConfig& cfg);

std::vector<std::string> laws_for(FamilyKind kind);

struct WindowDesc {
  int gen_bound = 2;
  int nat_bound = 1;
};

/// Structure-constant export over a finite window; byte-deterministic JSON.
std::string export_structure_constants(const LoadedSpec& s, const WindowDesc& w);

struct WindowCheck {
  bool passed = false;
  bool leakage_free = false;
  std::string detail;
};

/// Derived-span membership over a window of group monomials with
/// |coefficients| <= bound: the two central directions must stay outside the
/// span of quotient brackets.
WindowCheck derived_window_block1(const BlockISpec& s, int bound);

/// Reachable odd span of even-with-odd brackets must consist of every window
/// monomial except ((0,3)-kappa)/2.
WindowCheck derived_window_block3(const SuperSpec& s, int bound);

/// Centrality of `candidate` against every monomial of the window.
template <class E, class Bracket, class IsZero>
WindowCheck window_centrality(const std::vector<E>& window, const E& candidate,
                              Bracket bracket, IsZero is_zero) {
  WindowCheck r;
  r.leakage_free = true;
  for (const auto& b : window)
    if (!is_zero(bracket(candidate, b))) {
      r.passed = false;
      r.detail = "nonzero bracket against a window element";
      return r;
    }
  r.passed = true;
  r.detail = "bracket vanished on all " + std::to_string(window.size()) +
             " window elements";
  return r;
}

/// All group-window monomials with small coefficients over the canonical
/// basis, semigroup exponents bounded by nat_bound.
std::vector<Monomial> monomial_window(const SpecPtr& spec, int gen_bound,
                                      int nat_bound);

}  // namespace nglie
