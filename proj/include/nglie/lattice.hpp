#pragma once

#include <vector>

#include "nglie/rational.hpp"

namespace nglie {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_neg(const RatVec& a);
RatVec vec_scale(const Rat& c, const RatVec& a);
bool vec_is_zero(const RatVec& a);
RatVec vec_zero(int dim);
std::string vec_str(const RatVec& a);

RatMat mat_identity(int n);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_row_mul(const RatVec& v, const RatMat& m);
/// Inverse by Gauss-Jordan elimination; throws std::domain_error on a
/// singular input.
RatMat mat_inverse(const RatMat& m);
int mat_rank(RatMat m);
bool mat_is_skew(const RatMat& m);

/// Row-style Hermite normal form of the integer row span: pivots positive,
/// entries above each pivot reduced into [0, pivot), zero rows dropped.
/// The result depends only on the lattice generated by the input rows.
IntMat hnf_rows(IntMat m);

/// Finitely generated additive subgroup of Q^dim. The canonical form is the
/// pair (hnf, denom): denom is minimal with denom*L contained in Z^dim and
/// hnf is the Hermite basis of denom*L, so two generator lists span the same
/// subgroup exactly when their canonical forms coincide.
class Lattice {
 public:
  Lattice() = default;
  static Lattice from_generators(std::vector<RatVec> gens, int dim);

  int dim() const { return dim_; }
  const std::vector<RatVec>& generators() const { return gens_; }
  const IntMat& hnf() const { return hnf_; }
  const Int& denom() const { return denom_; }
  int rank() const { return static_cast<int>(hnf_.size()); }
  bool nondegenerate() const { return rank() == dim_; }

  bool contains(const RatVec& v) const;
  /// Q-basis of the generated subgroup (Hermite rows divided by denom).
  std::vector<RatVec> basis() const;
  /// True iff the line Q*dir meets the lattice outside the origin.
  bool meets_line(const RatVec& dir) const;

 private:
  int dim_ = 0;
  std::vector<RatVec> gens_;
  IntMat hnf_;
  Int denom_ = 1;
};

bool lattice_equal(const Lattice& a, const Lattice& b);

/// Direct sum embedding: places a's coordinates first, then b's.
Lattice lattice_direct_sum(const Lattice& a, const Lattice& b);

/// Block lower-triangular rational matrix acting on row vectors from the
/// right by its inverse. The top-right l2 x l3 block must vanish and both
/// diagonal blocks must be invertible.
struct BlockMatrix {
  int l2 = 0;
  int l3 = 0;
  RatMat entries;  // (l2+l3) x (l2+l3)
};

/// Validates membership; throws std::invalid_argument with the violated
/// condition otherwise.
BlockMatrix g_check(const RatMat& m, int l2, int l3);

RatVec g_act_vector(const BlockMatrix& g, const RatVec& v);
Lattice g_act_lattice(const BlockMatrix& g, const Lattice& l);

}  // namespace nglie
