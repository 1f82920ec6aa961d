#pragma once

#include <optional>

#include "nglie/witt.hpp"

namespace nglie {

/// Normal-ordered term key of the operator algebra A . F[d_1..d_l]: the
/// algebra monomial stands left of the derivation power d^{dexp}.
struct WeylKey {
  Monomial mon;
  std::vector<int> dexp;  // size l
};

bool operator==(const WeylKey& a, const WeylKey& b);

struct WeylKeyLess {
  bool operator()(const WeylKey& a, const WeylKey& b) const;
};

struct WeylOp {
  WittPtr spec;
  std::map<WeylKey, Rat, WeylKeyLess> terms;
};

WeylOp weyl_zero(WittPtr s);
WeylOp weyl_one(WittPtr s);
WeylOp weyl_from_elem(const AlgElem& a, WittPtr s);
/// t_p as an operator (multiplication by t_p).
WeylOp weyl_t(WittPtr s, int p);
/// d_p as an operator.
WeylOp weyl_d(WittPtr s, int p);
WeylOp weyl_term(WittPtr s, Monomial m, std::vector<int> dexp, Rat c = Rat(1));

bool weyl_is_zero(const WeylOp& a);
bool weyl_eq(const WeylOp& a, const WeylOp& b);
WeylOp weyl_add(const WeylOp& a, const WeylOp& b);
WeylOp weyl_sub(const WeylOp& a, const WeylOp& b);
WeylOp weyl_scale(const Rat& c, const WeylOp& a);

/// Normal-ordered product via the multi-Leibniz rule
///   (u d^m)(v d^n) = sum_{k<=m} prod_p C(m_p,k_p) u d^k(v) d^{m-k+n}.
WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);

/// Action on the base algebra; weyl_apply(weyl_mul(a,b), u) composes.
AlgElem weyl_apply(const WeylOp& a, const AlgElem& u);

/// Involutive anti-automorphism swapping t and d on the first ell_prime
/// coordinates and negating the remaining derivations:
///   tau(u tbar^{m'} dbar^{m''} dtil^{n}) = (-dtil)^{n} . u tbar^{m''} dbar^{m'}.
WeylOp tau(const WeylOp& a, int ell_prime);

/// Quotient q with dtil^{left_n} q dtil^{right_m} = a, if one exists.
/// left_n/right_m index the trailing l - ell_prime coordinates. Right
/// division subtracts exponents; left division peels strata of descending
/// total dtil-degree, subtracting the Leibniz corrections each time.
std::optional<WeylOp> weyl_divide(const WeylOp& a, const std::vector<int>& left_n,
                                  const std::vector<int>& right_m, int ell_prime);

std::size_t weyl_term_count(const WeylOp& a);
WeylOp weyl_drop_term(const WeylOp& a, std::size_t index);
WeylOp random_weyl(WittPtr s, const Budget& b, Rng& rng);
/// Sample from the subalgebra generated by x^gamma, the trailing t's and
/// the trailing d's (commutant of the leading block).
WeylOp random_weyl_tail(WittPtr s, int ell_prime, const Budget& b, Rng& rng);
/// Sample from the subalgebra spanned by leading t and d powers.
WeylOp random_weyl_head(WittPtr s, int ell_prime, const Budget& b, Rng& rng);

std::string render_weyl(const WeylOp& a);

}  // namespace nglie
