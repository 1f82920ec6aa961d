#pragma once

#include "nglie/algebra.hpp"

namespace nglie {

/// Rank-two algebra with bracket
///   [u,v] = d1(u)d2(v) - d2(u)d1(v) + u d1(v) - d1(u)v
/// and central element x^{(0,1),0} when (0,1) lies in the lattice.
struct BlockISpec {
  SpecPtr alg;  // d = 2, d0 = 0
  bool sigma1_in_gamma = false;
  bool sigma2_in_gamma = false;
};

/// `relax_witt_row` tolerates the rank-one degeneration with coordinate 2
/// fully trivial (the embedded Witt/Virasoro row used by tests and the CLI).
BlockISpec block1_spec(Lattice gamma, JFlag j1, JFlag j2, bool relax_witt_row = true);

AlgElem bracket_class1(const BlockISpec& s, const AlgElem& u, const AlgElem& v);
/// Canonical representative modulo F x^{(0,1),0}.
AlgElem quotient_class1(const BlockISpec& s, const AlgElem& a);

/// Rank-four algebra twisted by kappa with (k1,k2,0,0) and (0,0,k3,k4)
/// nonzero lattice elements.
struct BlockIISpec {
  SpecPtr alg;  // d = 4, d0 = 0
  RatVec kappa;
  RatVec sigma;  // (0,0,-k3,-k4)
  RatVec rho;    // (k1,k2,-2k3,-2k4)
};

BlockIISpec block2_spec(Lattice gamma, std::vector<JFlag> j, RatVec kappa);

/// Skew form: the trailing shifted-derivation products pair u with v.
AlgElem bracket_class2(const BlockIISpec& s, const AlgElem& u, const AlgElem& v);
/// Verbatim transcription with u in all four trailing slots. Kept as the
/// regression control; the trailing products cancel in a commutative
/// algebra, so this reduces to the x^kappa part alone.
AlgElem bracket_class2_literal(const BlockIISpec& s, const AlgElem& u, const AlgElem& v);
AlgElem quotient_class2(const BlockIISpec& s, const AlgElem& a);

/// Z2-graded double of the Class I algebra, twisted by kappa in Gamma.
/// Coordinate 2 may be fully trivial here.
struct SuperSpec {
  SpecPtr alg;  // d = 2, d0 = 0
  RatVec kappa;
  bool sigma1_in_gamma = false;
};

SuperSpec block3_spec(Lattice gamma, JFlag j1, JFlag j2, RatVec kappa);

struct SuperElem {
  AlgElem even;
  AlgElem odd;
};

SuperElem super_zero(const SuperSpec& s);
SuperElem super_even(AlgElem u);
SuperElem super_odd(AlgElem u);
bool super_is_zero(const SuperElem& x);
bool super_eq(const SuperElem& a, const SuperElem& b);
SuperElem super_add(const SuperElem& a, const SuperElem& b);
SuperElem super_sub(const SuperElem& a, const SuperElem& b);
SuperElem super_scale(const Rat& c, const SuperElem& a);

SuperElem super_bracket(const SuperSpec& s, const SuperElem& x, const SuperElem& y);

/// Odd-part membership in the derived sub-superalgebra: with J nontrivial
/// every element qualifies; with J = {0} the single group exponent
/// ((0,3)-kappa)/2 is excluded.
bool b1_member(const SuperSpec& s, const AlgElem& odd);
SuperElem quotient_class3(const SuperSpec& s, const SuperElem& x);

std::size_t super_term_count(const SuperElem& x);
SuperElem super_drop_term(const SuperElem& x, std::size_t index);
SuperElem random_super(const SuperSpec& s, const Budget& b, Rng& rng);
std::string render_super(const SuperElem& x);

/// Named configurations.
BlockISpec block1_example_3_1(int m);
BlockIISpec block2_example_3_2(int m, int n);
SuperSpec block3_example_3_3(int k, int m, int n);
SuperSpec block3_super_virasoro();

}  // namespace nglie
