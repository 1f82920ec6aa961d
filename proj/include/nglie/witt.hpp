#pragma once

#include "nglie/algebra.hpp"

namespace nglie {

/// First-order operator family over A(l1,l2,l3;Gamma). The unified layout
/// embeds Gamma in Q^l by zero-padding the first l1 coordinates and sets
/// J = (N,...,N,{0},...,{0}) with l1+l2 copies of N, so the d_p of the
/// algebra module reproduce the three kinds of coordinate derivations.
struct WittSpec {
  int l1 = 0, l2 = 0, l3 = 0;
  Lattice gamma;  // in Q^{l2+l3}
  SpecPtr alg;    // d = l1+l2+l3, d0 = 0

  int ell() const { return l1 + l2 + l3; }
};

using WittPtr = std::shared_ptr<const WittSpec>;

/// Throws on an inadmissible shape (l = 0, degenerate Gamma, dimension
/// mismatch).
WittPtr witt_spec(int l1, int l2, int l3, Lattice gamma);

/// Pads a vector of Q^{l2+l3} into the unified Q^l layout.
RatVec witt_pad(const WittSpec& s, const RatVec& v);

struct WittElem {
  WittPtr spec;
  std::vector<AlgElem> u;  // coefficient of D[p] at index p-1
};

WittElem witt_zero(WittPtr s);
WittElem witt_term(WittPtr s, int p, AlgElem coeff);
bool witt_is_zero(const WittElem& w);
bool witt_eq(const WittElem& a, const WittElem& b);
WittElem witt_add(const WittElem& a, const WittElem& b);
WittElem witt_sub(const WittElem& a, const WittElem& b);
WittElem witt_scale(const Rat& c, const WittElem& a);
/// Multiplication by an algebra element (module structure).
WittElem witt_mul_elem(const AlgElem& a, const WittElem& w);

AlgElem witt_apply(const WittElem& w, const AlgElem& a);
WittElem witt_bracket(const WittElem& a, const WittElem& b);
AlgElem divergence(const WittElem& w);

/// Membership in x^rho * S(l1,l2,l3;Gamma); rho must lie in Gamma.
bool s_member(const WittElem& w, const RatVec& rho);
/// Member of x^rho * S by construction: x^rho(d_q(u) D_p - d_p(u) D_q).
WittElem s_random(WittPtr s, const RatVec& rho, const Budget& b, Rng& rng);

std::size_t witt_term_count(const WittElem& w);
WittElem witt_drop_term(const WittElem& w, std::size_t index);
WittElem random_witt(WittPtr s, const Budget& b, Rng& rng);

std::string render_witt(const WittElem& w);

}  // namespace nglie
