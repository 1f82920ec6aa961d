#pragma once

#include "nglie/algebra.hpp"

namespace nglie {

/// Hamiltonian-type data. Group degrees live in Q^{d0+2k}: the first d0
/// coordinates carry the external block Gamma0, the remaining 2k carry
/// Gamma1 and the derivations pair coordinate p with k+p. phi is a global
/// skew rational matrix; sigma[p-1] twists the p-th symplectic pair.
struct HamSpec {
  int k = 0;
  int k1 = 0;
  int d0 = 0;
  Lattice gamma0;  // dim d0
  Lattice gamma1;  // dim 2k
  SpecPtr alg;     // d = 2k, d0 external coordinates
  RatMat phi;      // (d0+2k) x (d0+2k)
  std::vector<RatVec> sigma;  // k entries, dim d0+2k
  std::vector<int> mho;       // 1-based indices into 1..2k
};

HamSpec ham_spec(int k, int k1, Lattice gamma0, Lattice gamma1,
                 std::vector<JFlag> j, RatMat phi, std::vector<RatVec> sigma);

/// Exact checks of the side conditions; codes identify the violated
/// condition ("4.13" .. "4.18", "4.5", "skew").
std::vector<Violation> ham_validate(const HamSpec& s);

Rat phi_form(const HamSpec& s, const RatVec& a, const RatVec& b);

AlgElem ham_bracket(const HamSpec& s, const AlgElem& u, const AlgElem& v);
/// Canonical representative modulo F 1_A.
AlgElem ham_quotient(const AlgElem& a);

HamSpec ham_classical(int k);
/// k = 2, k1 = 1, rank-one external block, nonzero phi; passes validation.
HamSpec ham_nonclassical();
/// The k = 1, k1 = 1, rank-one external block configuration; retained to
/// demonstrate that validation necessarily rejects it (conditions 4.15 and
/// 4.17 cannot hold together in this shape).
HamSpec ham_nonclassical_k1_candidate();
/// Split form: phi pairs the external block symplectically and restricts to
/// the standard pairing on the internal block.
HamSpec ham_split_form();

/// Contact-type data over 2k+1 coordinates indexed 0..2k externally
/// (internal derivation coordinates 1..2k+1). Gamma = Gamma0 x Gamma1 with
/// Gamma0 in Q and Gamma1 in Q^{2k}.
struct ContactSpec {
  int k = 0;
  Lattice gamma0;  // dim 1
  Lattice gamma1;  // dim 2k
  SpecPtr alg;     // d = 2k+1, d0 = 0, euler sets filled in
  Rat sigma0;      // multiple of the coordinate-0 unit
  std::vector<RatVec> sigma;  // k entries, dim 2k+1 (internal layout)
  std::vector<int> mho1, mho2;  // partition of 1..2k (external indexing)
};

/// `sigma_override`, when supplied, is validated against the forced values
/// instead of being derived from Gamma1.
ContactSpec contact_spec(int k, Lattice gamma0, Lattice gamma1,
                         std::vector<JFlag> j, Rat sigma0,
                         std::optional<std::vector<RatVec>> sigma_override = {});

std::vector<Violation> contact_validate(const ContactSpec& s);

AlgElem contact_bracket(const ContactSpec& s, const AlgElem& u, const AlgElem& v);

ContactSpec contact_classical(int k);
/// k = 1 with Gamma1 = Z x {0} and twisted sigma_0, sigma_1 = -1_[1].
ContactSpec contact_twisted();

}  // namespace nglie
