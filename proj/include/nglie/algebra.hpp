#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nglie/lattice.hpp"

namespace nglie {

enum class JFlag { Nat, Zero };

/// Derivation coordinates carrying the Euler weight: u1 counts group
/// exponents, u2 counts semigroup exponents. Indices are 1-based over 1..d.
struct EulerSets {
  std::vector<int> u1;
  std::vector<int> u2;
};

/// Commutative algebra with basis x^{gamma, i}: gamma ranges over a lattice
/// in Q^{d0+d} and i over products of N or {0} in d slots. The first d0
/// group coordinates are external: no derivation reads them. Derivation
/// coordinate p (1-based) reads group coordinate d0+p.
struct AlgebraSpec {
  int d = 0;
  int d0 = 0;
  Lattice gamma;
  std::vector<JFlag> j;
  std::optional<EulerSets> euler;
  /// Coordinates where a trivial X_p(gamma) + J_p is tolerated (the rank-one
  /// degenerations used by the Block and super families).
  std::set<int> relaxed;
  bool need_nondegenerate = false;

  int gdim() const { return d0 + d; }
};

using SpecPtr = std::shared_ptr<const AlgebraSpec>;

struct Violation {
  std::string code;
  std::string detail;
};

/// Diagnostic validation; an empty result means the spec is admissible.
std::vector<Violation> spec_validate(const AlgebraSpec& s);

SpecPtr make_spec(AlgebraSpec s);

struct Monomial {
  RatVec gamma;          // size d0+d
  std::vector<int> iexp; // size d, nonnegative
};

bool operator==(const Monomial& a, const Monomial& b);

/// Lexicographic on (gamma, iexp); total order used for canonical storage,
/// rendering and exports.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct AlgElem {
  SpecPtr spec;
  std::map<Monomial, Rat, MonomialLess> terms;
};

/// Validates lattice membership and the J_p = {0} exponent constraint.
Monomial make_monomial(const AlgebraSpec& s, RatVec gamma, std::vector<int> iexp);

AlgElem elem_zero(SpecPtr s);
AlgElem elem_one(SpecPtr s);
AlgElem monomial_elem(SpecPtr s, Monomial m, Rat c = Rat(1));
/// x^{gamma, 0}; gamma must lie in the lattice.
AlgElem group_elem(SpecPtr s, const RatVec& gamma, Rat c = Rat(1));
/// t_p = x^{0, 1_[p]} (requires J_p = N).
AlgElem t_gen(SpecPtr s, int p);

bool elem_is_zero(const AlgElem& a);
bool elem_eq(const AlgElem& a, const AlgElem& b);
AlgElem elem_add(const AlgElem& a, const AlgElem& b);
AlgElem elem_sub(const AlgElem& a, const AlgElem& b);
AlgElem scalar_mul(const Rat& c, const AlgElem& a);
AlgElem elem_mul(const AlgElem& a, const AlgElem& b);

/// d_p(x^{gamma,i}) = gamma_p x^{gamma,i} + i_p x^{gamma,i-1_[p]}, the second
/// term dropped when i_p = 0.
AlgElem derive(int p, const AlgElem& a);
/// (d_p + c)(a), the shifted derivations of the Class II bracket.
AlgElem derive_shifted(int p, const Rat& c, const AlgElem& a);
/// Euler-type derivation weighted by the spec's euler sets.
AlgElem euler_derive(const AlgElem& a);

std::size_t term_count(const AlgElem& a);
AlgElem drop_term(const AlgElem& a, std::size_t index);

struct Budget {
  int max_terms = 6;
  int max_nat = 3;
  int gen_bound = 3;
  int coeff_bound = 5;
};

/// Reproducible sample: group parts are small integer combinations of the
/// lattice generators, so membership holds by construction.
AlgElem random_elem(SpecPtr s, const Budget& b, Rng& rng);

/// Canonical text form; see the expression grammar in the README.
std::string render_elem(const AlgElem& a);

void check_same_spec(const SpecPtr& a, const SpecPtr& b);

}  // namespace nglie
