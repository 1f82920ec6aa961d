#pragma once

#include "nglie/weyl.hpp"

namespace nglie {

struct WeylMatrix {
  WittPtr spec;
  int size = 0;
  std::vector<WeylOp> e;  // row-major, size*size entries

  const WeylOp& at(int i, int j) const { return e[i * size + j]; }
  WeylOp& at(int i, int j) { return e[i * size + j]; }
};

/// Principal derivation-monomial ideal pattern: slot (i,j) collects the
/// operators of the form dtil^{n_i} A dtil^{m_j}. The parity of
/// |m_i| + |n_i| must be constant across i.
struct IdealPattern {
  int ell_prime = 0;
  std::vector<std::vector<int>> m;  // k entries, each of size l - ell_prime
  std::vector<std::vector<int>> n;

  int k() const { return static_cast<int>(m.size()); }
};

/// Throws when the parity condition fails or shapes disagree.
IdealPattern make_pattern(int ell_prime, std::vector<std::vector<int>> m,
                          std::vector<std::vector<int>> n, const WittSpec& s);

WeylMatrix matrix_zero(WittPtr s, int size);
WeylMatrix matrix_identity(WittPtr s, int size);
bool matrix_is_zero(const WeylMatrix& a);
bool matrix_eq(const WeylMatrix& a, const WeylMatrix& b);
WeylMatrix matrix_add(const WeylMatrix& a, const WeylMatrix& b);
WeylMatrix matrix_sub(const WeylMatrix& a, const WeylMatrix& b);
WeylMatrix matrix_scale(const Rat& c, const WeylMatrix& a);
WeylMatrix matrix_mul(const WeylMatrix& a, const WeylMatrix& b);
WeylMatrix matrix_bracket(const WeylMatrix& a, const WeylMatrix& b);

/// Canonical representative modulo F I_k: subtracts (scalar part of the
/// trace)/k times the identity.
WeylMatrix sl_rep(const WeylMatrix& a);

bool gl_member(const WeylMatrix& a, const IdealPattern& p);

/// Signed slot transport: for a = dtil^{n_i} r dtil^{m_j} returns
/// (-1)^{|n_i|+|m_j|} dtil^{n_j} tau(r) dtil^{m_i}. Indices are 1-based.
WeylOp rho_signed(const WeylOp& a, int i, int j, const IdealPattern& p);

/// Entry (i,j) of star(A) is rho applied to entry (j,i).
WeylMatrix star(const WeylMatrix& a, const IdealPattern& p);

WeylMatrix o_project(const WeylMatrix& a, const IdealPattern& p);
bool o_member(const WeylMatrix& a, const IdealPattern& p);

/// 2k x 2k pattern where entry (i,j) uses slot (i mod k, j mod k).
bool sp_shape_member(const WeylMatrix& a, const IdealPattern& p);
WeylMatrix sp_rho(const WeylMatrix& a, const IdealPattern& p);
WeylMatrix sp_project(const WeylMatrix& a, const IdealPattern& p);
bool sp_member(const WeylMatrix& a, const IdealPattern& p);

std::size_t matrix_term_count(const WeylMatrix& a);
WeylMatrix matrix_drop_term(const WeylMatrix& a, std::size_t index);
/// Entry (i,j) sampled inside slot (i,j) of the pattern.
WeylMatrix random_gl_member(WittPtr s, const IdealPattern& p, const Budget& b, Rng& rng);
/// Matrix over the full algebra (no pattern constraint).
WeylMatrix random_matrix(WittPtr s, int size, const Budget& b, Rng& rng);
/// Random element of the sp shape (entries follow the mod-k pattern).
WeylMatrix random_sp_shape(WittPtr s, const IdealPattern& p, const Budget& b, Rng& rng);

std::string render_matrix(const WeylMatrix& a);

}  // namespace nglie
