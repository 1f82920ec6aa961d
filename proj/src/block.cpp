#include "nglie/block.hpp"

#include <stdexcept>

namespace nglie {

static RatVec sigma1_vec() { return {Rat(0), Rat(1)}; }
static RatVec sigma2_vec() { return {Rat(0), Rat(2)}; }

BlockISpec block1_spec(Lattice gamma, JFlag j1, JFlag j2, bool relax_witt_row) {
  if (gamma.dim() != 2) throw std::invalid_argument("Gamma must live in Q^2");
  AlgebraSpec a;
  a.d = 2;
  a.d0 = 0;
  a.gamma = gamma;
  a.j = {j1, j2};
  if (relax_witt_row) a.relaxed = {1, 2};
  BlockISpec s;
  s.alg = make_spec(std::move(a));
  s.sigma1_in_gamma = gamma.contains(sigma1_vec());
  s.sigma2_in_gamma = gamma.contains(sigma2_vec());
  return s;
}

AlgElem bracket_class1(const BlockISpec& s, const AlgElem& u, const AlgElem& v) {
  check_same_spec(s.alg, u.spec);
  check_same_spec(s.alg, v.spec);
  AlgElem d1u = derive(1, u), d2u = derive(2, u);
  AlgElem d1v = derive(1, v), d2v = derive(2, v);
  AlgElem r = elem_sub(elem_mul(d1u, d2v), elem_mul(d2u, d1v));
  r = elem_add(r, elem_mul(u, d1v));
  r = elem_sub(r, elem_mul(d1u, v));
  return r;
}

static AlgElem kill_group_coeff(const AlgElem& a, const RatVec& gamma) {
  AlgElem r = a;
  Monomial target{gamma, std::vector<int>(a.spec->d, 0)};
  r.terms.erase(target);
  return r;
}

AlgElem quotient_class1(const BlockISpec& s, const AlgElem& a) {
  if (!s.sigma1_in_gamma) return a;
  return kill_group_coeff(a, sigma1_vec());
}

BlockIISpec block2_spec(Lattice gamma, std::vector<JFlag> j, RatVec kappa) {
  if (gamma.dim() != 4) throw std::invalid_argument("Gamma must live in Q^4");
  if (j.size() != 4) throw std::invalid_argument("need four J flags");
  if (kappa.size() != 4) throw std::invalid_argument("kappa must have four entries");
  for (int i = 0; i < 4; i++) {
    RatVec unit = vec_zero(4);
    unit[i] = 1;
    if (!gamma.contains(unit))
      throw std::invalid_argument("Gamma must contain Z^4");
  }
  RatVec head = {kappa[0], kappa[1], Rat(0), Rat(0)};
  RatVec tail = {Rat(0), Rat(0), kappa[2], kappa[3]};
  if (vec_is_zero(head) || vec_is_zero(tail))
    throw std::invalid_argument("kappa halves must be nonzero");
  if (!gamma.contains(head) || !gamma.contains(tail))
    throw std::invalid_argument("kappa halves must lie in Gamma");
  AlgebraSpec a;
  a.d = 4;
  a.d0 = 0;
  a.gamma = gamma;
  a.j = std::move(j);
  BlockIISpec s;
  s.alg = make_spec(std::move(a));
  s.kappa = kappa;
  s.sigma = {Rat(0), Rat(0), -kappa[2], -kappa[3]};
  s.rho = {kappa[0], kappa[1], Rat(-2) * kappa[2], Rat(-2) * kappa[3]};
  return s;
}

AlgElem bracket_class2(const BlockIISpec& s, const AlgElem& u, const AlgElem& v) {
  check_same_spec(s.alg, u.spec);
  check_same_spec(s.alg, v.spec);
  AlgElem xk = group_elem(s.alg, s.kappa);
  AlgElem head = elem_sub(elem_mul(derive(1, u), derive(2, v)),
                          elem_mul(derive(2, u), derive(1, v)));
  AlgElem d3u = derive_shifted(3, s.kappa[2], u);
  AlgElem d4u = derive_shifted(4, s.kappa[3], u);
  AlgElem d3v = derive_shifted(3, s.kappa[2], v);
  AlgElem d4v = derive_shifted(4, s.kappa[3], v);
  AlgElem tail = elem_sub(elem_mul(d3u, d4v), elem_mul(d4u, d3v));
  return elem_add(elem_mul(xk, head), tail);
}

AlgElem bracket_class2_literal(const BlockIISpec& s, const AlgElem& u, const AlgElem& v) {
  check_same_spec(s.alg, u.spec);
  check_same_spec(s.alg, v.spec);
  AlgElem xk = group_elem(s.alg, s.kappa);
  AlgElem head = elem_sub(elem_mul(derive(1, u), derive(2, v)),
                          elem_mul(derive(2, u), derive(1, v)));
  AlgElem d3u = derive_shifted(3, s.kappa[2], u);
  AlgElem d4u = derive_shifted(4, s.kappa[3], u);
  AlgElem tail = elem_sub(elem_mul(d3u, d4u), elem_mul(d4u, d3u));
  return elem_add(elem_mul(xk, head), tail);
}

AlgElem quotient_class2(const BlockIISpec& s, const AlgElem& a) {
  return kill_group_coeff(a, s.sigma);
}

SuperSpec block3_spec(Lattice gamma, JFlag j1, JFlag j2, RatVec kappa) {
  if (gamma.dim() != 2) throw std::invalid_argument("Gamma must live in Q^2");
  if (!gamma.contains(kappa)) throw std::invalid_argument("kappa must lie in Gamma");
  AlgebraSpec a;
  a.d = 2;
  a.d0 = 0;
  a.gamma = gamma;
  a.j = {j1, j2};
  a.relaxed = {2};
  SuperSpec s;
  s.alg = make_spec(std::move(a));
  s.kappa = std::move(kappa);
  s.sigma1_in_gamma = gamma.contains(sigma1_vec());
  return s;
}

SuperElem super_zero(const SuperSpec& s) {
  return SuperElem{elem_zero(s.alg), elem_zero(s.alg)};
}

SuperElem super_even(AlgElem u) {
  AlgElem z = elem_zero(u.spec);
  return SuperElem{std::move(u), std::move(z)};
}

SuperElem super_odd(AlgElem u) {
  AlgElem z = elem_zero(u.spec);
  return SuperElem{std::move(z), std::move(u)};
}

bool super_is_zero(const SuperElem& x) {
  return elem_is_zero(x.even) && elem_is_zero(x.odd);
}

bool super_eq(const SuperElem& a, const SuperElem& b) {
  return elem_eq(a.even, b.even) && elem_eq(a.odd, b.odd);
}

SuperElem super_add(const SuperElem& a, const SuperElem& b) {
  return SuperElem{elem_add(a.even, b.even), elem_add(a.odd, b.odd)};
}

SuperElem super_sub(const SuperElem& a, const SuperElem& b) {
  return SuperElem{elem_sub(a.even, b.even), elem_sub(a.odd, b.odd)};
}

SuperElem super_scale(const Rat& c, const SuperElem& a) {
  return SuperElem{scalar_mul(c, a.even), scalar_mul(c, a.odd)};
}

/// Even-odd part: d1(u)(d2(v) + (k2-1)v/2) + (u - d2(u))(d1(v) + k1 v/2).
static AlgElem even_odd_bracket(const SuperSpec& s, const AlgElem& u, const AlgElem& v) {
  Rat half_k2 = (s.kappa[1] - 1) / 2;
  Rat half_k1 = s.kappa[0] / 2;
  AlgElem left = elem_mul(derive(1, u),
                          elem_add(derive(2, v), scalar_mul(half_k2, v)));
  AlgElem right = elem_mul(elem_sub(u, derive(2, u)),
                           elem_add(derive(1, v), scalar_mul(half_k1, v)));
  return elem_add(left, right);
}

SuperElem super_bracket(const SuperSpec& s, const SuperElem& x, const SuperElem& y) {
  check_same_spec(s.alg, x.even.spec);
  check_same_spec(s.alg, y.even.spec);
  // Even-even is the Class I bracket; odd-odd is symmetric multiplication
  // by x^kappa; odd-even follows from graded skewness.
  BlockISpec b1{s.alg, false, false};
  AlgElem even = bracket_class1(b1, x.even, y.even);
  even = elem_add(even, elem_mul(group_elem(s.alg, s.kappa),
                                 elem_mul(x.odd, y.odd)));
  AlgElem odd = even_odd_bracket(s, x.even, y.odd);
  odd = elem_sub(odd, even_odd_bracket(s, y.even, x.odd));
  return SuperElem{std::move(even), std::move(odd)};
}

bool b1_member(const SuperSpec& s, const AlgElem& odd) {
  bool j_trivial = true;
  for (auto f : s.alg->j)
    if (f == JFlag::Nat) j_trivial = false;
  if (!j_trivial) return true;
  RatVec excluded = {(Rat(0) - s.kappa[0]) / 2, (Rat(3) - s.kappa[1]) / 2};
  for (const auto& [m, c] : odd.terms) {
    (void)c;
    if (m.gamma == excluded) return false;
  }
  return true;
}

SuperElem quotient_class3(const SuperSpec& s, const SuperElem& x) {
  if (!s.sigma1_in_gamma) return x;
  SuperElem r = x;
  Monomial target{sigma1_vec(), std::vector<int>(s.alg->d, 0)};
  r.even.terms.erase(target);
  return r;
}

std::size_t super_term_count(const SuperElem& x) {
  return x.even.terms.size() + x.odd.terms.size();
}

SuperElem super_drop_term(const SuperElem& x, std::size_t index) {
  SuperElem r = x;
  if (index < r.even.terms.size()) {
    r.even = drop_term(r.even, index);
    return r;
  }
  index -= r.even.terms.size();
  r.odd = drop_term(r.odd, index);
  return r;
}

SuperElem random_super(const SuperSpec& s, const Budget& b, Rng& rng) {
  Budget per = b;
  per.max_terms = std::max(1, b.max_terms / 2);
  return SuperElem{random_elem(s.alg, per, rng), random_elem(s.alg, per, rng)};
}

std::string render_super(const SuperElem& x) {
  std::string even = elem_is_zero(x.even) ? "" : render_elem(x.even);
  std::string odd = elem_is_zero(x.odd) ? "" : render_elem(x.odd);
  return "even{" + even + "} odd{" + odd + "}";
}

BlockISpec block1_example_3_1(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  std::vector<RatVec> gens = {
      {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1, m), Rat(1, m)}};
  for (auto& g : gens)
    for (auto& q : g) q.canonicalize();
  return block1_spec(Lattice::from_generators(gens, 2), JFlag::Nat, JFlag::Nat);
}

BlockIISpec block2_example_3_2(int m, int n) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (n == 0) throw std::invalid_argument("n must be nonzero");
  std::vector<RatVec> gens;
  for (int i = 0; i < 4; i++) {
    RatVec u = vec_zero(4);
    u[i] = 1;
    gens.push_back(u);
  }
  RatVec diag(4, Rat(1, m));
  for (auto& q : diag) q.canonicalize();
  gens.push_back(diag);
  RatVec kappa(4, Rat(n));
  return block2_spec(Lattice::from_generators(gens, 4),
                     std::vector<JFlag>(4, JFlag::Nat), kappa);
}

SuperSpec block3_example_3_3(int k, int m, int n) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<RatVec> gens = {
      {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1, k), Rat(1, k)}};
  for (auto& g : gens)
    for (auto& q : g) q.canonicalize();
  return block3_spec(Lattice::from_generators(gens, 2), JFlag::Nat, JFlag::Nat,
                     {Rat(m), Rat(n)});
}

SuperSpec block3_super_virasoro() {
  Lattice gamma = Lattice::from_generators({{Rat(1), Rat(0)}}, 2);
  return block3_spec(gamma, JFlag::Zero, JFlag::Zero, {Rat(1), Rat(0)});
}

}  // namespace nglie
