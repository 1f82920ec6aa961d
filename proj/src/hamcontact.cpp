#include "nglie/hamcontact.hpp"

#include <sstream>
#include <stdexcept>

namespace nglie {

/// Basis of {x in Z^n : A x = 0} via the Hermite form of [A^T | I].
static IntMat int_kernel(const IntMat& a, int n) {
  int m = static_cast<int>(a.size());
  IntMat rows;
  for (int i = 0; i < n; i++) {
    IntVec row(m + n, Int(0));
    for (int q = 0; q < m; q++) row[q] = a[q][i];
    row[m + i] = 1;
    rows.push_back(std::move(row));
  }
  IntMat h = hnf_rows(std::move(rows));
  IntMat kernel;
  for (const auto& row : h) {
    bool zero_head = true;
    for (int q = 0; q < m; q++)
      if (row[q] != 0) zero_head = false;
    if (!zero_head) continue;
    IntVec x(row.begin() + m, row.end());
    kernel.push_back(std::move(x));
  }
  return kernel;
}

static bool x_nontrivial(const Lattice& l, int coord) {
  for (const auto& g : l.generators())
    if (g[coord] != 0) return true;
  return false;
}

Rat phi_form(const HamSpec& s, const RatVec& a, const RatVec& b) {
  RatVec ab = mat_row_mul(a, s.phi);
  Rat r(0);
  for (std::size_t i = 0; i < ab.size(); i++) r += ab[i] * b[i];
  return r;
}

HamSpec ham_spec(int k, int k1, Lattice gamma0, Lattice gamma1,
                 std::vector<JFlag> j, RatMat phi, std::vector<RatVec> sigma) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k1 < 0 || k1 > k) throw std::invalid_argument("k1 must lie in 0..k");
  if (gamma1.dim() != 2 * k)
    throw std::invalid_argument("Gamma1 must live in Q^{2k}");
  if (static_cast<int>(j.size()) != 2 * k)
    throw std::invalid_argument("need 2k J flags");
  int full = gamma0.dim() + 2 * k;
  if (static_cast<int>(phi.size()) != full)
    throw std::invalid_argument("phi has the wrong shape");
  for (const auto& row : phi)
    if (static_cast<int>(row.size()) != full)
      throw std::invalid_argument("phi has the wrong shape");
  if (sigma.empty()) sigma.assign(k, vec_zero(full));
  if (static_cast<int>(sigma.size()) != k)
    throw std::invalid_argument("need k sigma vectors");
  for (const auto& v : sigma)
    if (static_cast<int>(v.size()) != full)
      throw std::invalid_argument("sigma vector has the wrong dimension");

  HamSpec s;
  s.k = k;
  s.k1 = k1;
  s.d0 = gamma0.dim();
  s.gamma0 = std::move(gamma0);
  s.gamma1 = std::move(gamma1);
  s.phi = std::move(phi);
  s.sigma = std::move(sigma);
  for (int p = 1; p <= k; p++)
    if (x_nontrivial(s.gamma1, p - 1) && x_nontrivial(s.gamma1, k + p - 1)) {
      s.mho.push_back(p);
      s.mho.push_back(k + p);
    }
  AlgebraSpec a;
  a.d = 2 * k;
  a.d0 = s.d0;
  a.gamma = lattice_direct_sum(s.gamma0, s.gamma1);
  a.j = std::move(j);
  s.alg = make_spec(std::move(a));
  return s;
}

std::vector<Violation> ham_validate(const HamSpec& s) {
  std::vector<Violation> out;
  const int k = s.k, k1 = s.k1, d0 = s.d0;

  if (!mat_is_skew(s.phi)) out.push_back({"skew", "phi is not skew-symmetric"});
  for (auto v : spec_validate(*s.alg))
    out.push_back({v.code == "3.5" ? "4.5" : v.code, v.detail});

  for (int p = 1; p <= k1; p++)
    if (!x_nontrivial(s.gamma1, p - 1) && !x_nontrivial(s.gamma1, k + p - 1))
      out.push_back({"4.13", "pair " + std::to_string(p) +
                                 " is fully trivial inside the k1 range"});

  auto unit_full = [&](int p) {  // 1-based Gamma1 coordinate -> padded unit
    RatVec u = vec_zero(d0 + 2 * k);
    u[d0 + p - 1] = 1;
    return u;
  };
  auto unit_g1 = [&](int p) {
    RatVec u = vec_zero(2 * k);
    u[p - 1] = 1;
    return u;
  };
  auto in_radical = [&](const RatVec& v) {
    for (const auto& g : s.alg->gamma.generators())
      if (phi_form(s, v, g) != 0) return false;
    return true;
  };

  // (4.16): untwisted coordinates with nontrivial projection must contain
  // their unit vector.
  for (int p = 1; p <= 2 * k; p++) {
    bool untwisted = (p > k1 && p <= k) || (p > k + k1);
    if (untwisted && x_nontrivial(s.gamma1, p - 1) &&
        !s.gamma1.contains(unit_g1(p)))
      out.push_back({"4.16", "unit vector of coordinate " + std::to_string(p) +
                                 " is missing from Gamma1"});
  }
  // (4.17): twisted coordinates with nontrivial projection must have their
  // unit vector inside the radical of phi.
  for (int p = 1; p <= 2 * k; p++) {
    bool twisted = (p <= k1) || (p > k && p <= k + k1);
    if (twisted && x_nontrivial(s.gamma1, p - 1)) {
      if (!s.gamma1.contains(unit_g1(p)))
        out.push_back({"4.17", "unit vector of coordinate " + std::to_string(p) +
                                   " is missing from Gamma1"});
      else if (!in_radical(unit_full(p)))
        out.push_back({"4.17", "unit vector of coordinate " + std::to_string(p) +
                                   " is not in the radical of phi"});
    }
  }
  // (4.18): sigma_p nonzero in the radical, supported on {p, k+p}, inside
  // Gamma, for p <= k1; zero beyond.
  for (int p = 1; p <= k; p++) {
    const RatVec& sp = s.sigma[p - 1];
    if (p > k1) {
      if (!vec_is_zero(sp))
        out.push_back({"4.18", "sigma_" + std::to_string(p) +
                                   " must vanish beyond k1"});
      continue;
    }
    if (vec_is_zero(sp)) {
      out.push_back({"4.18", "sigma_" + std::to_string(p) + " must be nonzero"});
      continue;
    }
    bool support_ok = true;
    for (int c = 0; c < d0 + 2 * k; c++)
      if (sp[c] != 0 && c != d0 + p - 1 && c != d0 + k + p - 1) support_ok = false;
    if (!support_ok)
      out.push_back({"4.18", "sigma_" + std::to_string(p) +
                                 " must be supported on its symplectic pair"});
    if (!s.alg->gamma.contains(sp))
      out.push_back({"4.18", "sigma_" + std::to_string(p) + " lies outside Gamma"});
    else if (!in_radical(sp))
      out.push_back({"4.18", "sigma_" + std::to_string(p) +
                                 " is not in the radical of phi"});
  }

  // (4.15): no nonzero external vector pairs trivially with the sublattice
  // whose mho coordinates vanish. Over Q this is a rank condition: clearing
  // denominators moves any rational annihilator into Gamma0, so the group
  // statement and the Q-span statement agree.
  {
    std::vector<RatVec> b1 = s.gamma1.basis();
    int r1 = static_cast<int>(b1.size());
    IntMat constr;
    for (int q : s.mho) {
      RatVec row(r1);
      Int scale = 1;
      for (int i = 0; i < r1; i++) {
        row[i] = b1[i][q - 1];
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                row[i].get_den().get_mpz_t());
      }
      IntVec irow(r1);
      for (int i = 0; i < r1; i++) {
        Rat scaled = row[i] * scale;
        irow[i] = scaled.get_num();
      }
      constr.push_back(std::move(irow));
    }
    IntMat kernel = int_kernel(constr, r1);
    std::vector<RatVec> gprime;
    for (const auto& g : s.gamma0.basis()) {
      RatVec v = g;
      v.resize(d0 + 2 * k, Rat(0));
      gprime.push_back(std::move(v));
    }
    for (const auto& c : kernel) {
      RatVec v = vec_zero(2 * k);
      for (int i = 0; i < r1; i++)
        if (c[i] != 0) v = vec_add(v, vec_scale(Rat(c[i]), b1[i]));
      RatVec full = vec_zero(d0);
      full.insert(full.end(), v.begin(), v.end());
      gprime.push_back(std::move(full));
    }
    std::vector<RatVec> g0 = s.gamma0.basis();
    int r0 = static_cast<int>(g0.size());
    RatMat pairing;
    for (int i = 0; i < r0; i++) {
      RatVec full = g0[i];
      full.resize(d0 + 2 * k, Rat(0));
      RatVec row;
      for (const auto& b : gprime) row.push_back(phi_form(s, full, b));
      pairing.push_back(std::move(row));
    }
    if (mat_rank(pairing) != r0)
      out.push_back({"4.15", "a nonzero external vector annihilates the"
                             " constrained sublattice under phi"});
  }
  return out;
}

AlgElem ham_bracket(const HamSpec& s, const AlgElem& u, const AlgElem& v) {
  check_same_spec(s.alg, u.spec);
  check_same_spec(s.alg, v.spec);
  const int k = s.k, k1 = s.k1, d0 = s.d0;
  AlgElem r = elem_zero(s.alg);
  for (int p = 1; p <= k; p++) {
    AlgElem part = elem_sub(elem_mul(derive(p, u), derive(k + p, v)),
                            elem_mul(derive(k + p, u), derive(p, v)));
    if (elem_is_zero(part)) continue;
    r = elem_add(r, elem_mul(group_elem(s.alg, s.sigma[p - 1]), part));
  }
  // Scalar part: theta(alpha, beta) u v, defined monomial-wise because the
  // weight depends on the group degrees of both factors.
  for (const auto& [ma, ca] : u.terms)
    for (const auto& [mb, cb] : v.terms) {
      Rat theta = phi_form(s, ma.gamma, mb.gamma);
      for (int p = k1 + 1; p <= k; p++) {
        theta -= ma.gamma[d0 + p - 1] * mb.gamma[d0 + k + p - 1];
        theta += ma.gamma[d0 + k + p - 1] * mb.gamma[d0 + p - 1];
      }
      if (theta == 0) continue;
      Monomial m;
      m.gamma = vec_add(ma.gamma, mb.gamma);
      m.iexp.resize(ma.iexp.size());
      for (std::size_t i = 0; i < m.iexp.size(); i++)
        m.iexp[i] = ma.iexp[i] + mb.iexp[i];
      AlgElem t = monomial_elem(s.alg, std::move(m), ca * cb * theta);
      r = elem_add(r, t);
    }
  return r;
}

AlgElem ham_quotient(const AlgElem& a) {
  AlgElem r = a;
  Monomial one{vec_zero(a.spec->gdim()), std::vector<int>(a.spec->d, 0)};
  r.terms.erase(one);
  return r;
}

HamSpec ham_classical(int k) {
  Lattice g0 = Lattice::from_generators({}, 0);
  Lattice g1 = Lattice::from_generators({}, 2 * k);
  RatMat phi(2 * k, RatVec(2 * k, Rat(0)));
  return ham_spec(k, 0, g0, g1, std::vector<JFlag>(2 * k, JFlag::Nat), phi, {});
}

HamSpec ham_nonclassical() {
  int k = 2;
  Lattice g0 = Lattice::from_generators({{Rat(1)}}, 1);
  std::vector<RatVec> g1gens = {{Rat(1), Rat(0), Rat(0), Rat(0)},
                                {Rat(0), Rat(1), Rat(0), Rat(0)}};
  Lattice g1 = Lattice::from_generators(g1gens, 4);
  RatMat phi(5, RatVec(5, Rat(0)));
  phi[0][2] = 1;
  phi[2][0] = -1;
  std::vector<RatVec> sigma(2, vec_zero(5));
  sigma[0][1] = -1;  // -1_[1] in the padded layout
  return ham_spec(k, 1, g0, g1,
                  {JFlag::Zero, JFlag::Zero, JFlag::Nat, JFlag::Nat}, phi, sigma);
}

HamSpec ham_nonclassical_k1_candidate() {
  int k = 1;
  Lattice g0 = Lattice::from_generators({{Rat(1)}}, 1);
  Lattice g1 = Lattice::from_generators({{Rat(1), Rat(0)}}, 2);
  RatMat phi(3, RatVec(3, Rat(0)));
  phi[0][1] = 1;
  phi[1][0] = -1;
  std::vector<RatVec> sigma(1, vec_zero(3));
  sigma[0][1] = -1;
  return ham_spec(k, 1, g0, g1, {JFlag::Zero, JFlag::Nat}, phi, sigma);
}

HamSpec ham_split_form() {
  int k = 1;
  Lattice g0 = Lattice::from_generators({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  Lattice g1 = Lattice::from_generators({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  RatMat phi(4, RatVec(4, Rat(0)));
  phi[0][1] = 1;
  phi[1][0] = -1;
  phi[2][3] = 1;
  phi[3][2] = -1;
  return ham_spec(k, 0, g0, g1, {JFlag::Zero, JFlag::Zero}, phi, {});
}

ContactSpec contact_spec(int k, Lattice gamma0, Lattice gamma1,
                         std::vector<JFlag> j, Rat sigma0,
                         std::optional<std::vector<RatVec>> sigma_override) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (gamma0.dim() != 1) throw std::invalid_argument("Gamma0 must live in Q");
  if (gamma1.dim() != 2 * k)
    throw std::invalid_argument("Gamma1 must live in Q^{2k}");
  if (static_cast<int>(j.size()) != 2 * k + 1)
    throw std::invalid_argument("need 2k+1 J flags");

  ContactSpec s;
  s.k = k;
  s.gamma0 = std::move(gamma0);
  s.gamma1 = std::move(gamma1);
  s.sigma0 = std::move(sigma0);
  for (int p = 1; p <= 2 * k; p++)
    (x_nontrivial(s.gamma1, p - 1) ? s.mho1 : s.mho2).push_back(p);

  auto unit = [&](int p, Rat c) {  // external coordinate p in 0..2k
    RatVec v = vec_zero(2 * k + 1);
    v[p] = std::move(c);
    return v;
  };
  if (sigma_override) {
    if (static_cast<int>(sigma_override->size()) != k)
      throw std::invalid_argument("need k sigma vectors");
    s.sigma = *sigma_override;
  } else {
    for (int p = 1; p <= k; p++) {
      bool a = x_nontrivial(s.gamma1, p - 1);
      bool b = x_nontrivial(s.gamma1, k + p - 1);
      RatVec sp = vec_zero(2 * k + 1);
      if (a) sp = vec_add(sp, unit(p, Rat(-1)));
      if (b) sp = vec_add(sp, unit(k + p, Rat(-1)));
      s.sigma.push_back(std::move(sp));
    }
  }

  AlgebraSpec a;
  a.d = 2 * k + 1;
  a.d0 = 0;
  a.gamma = lattice_direct_sum(s.gamma0, s.gamma1);
  a.j = std::move(j);
  EulerSets e;
  for (int p : s.mho1) e.u1.push_back(p + 1);
  for (int p : s.mho2) e.u2.push_back(p + 1);
  a.euler = std::move(e);
  s.alg = make_spec(std::move(a));
  return s;
}

std::vector<Violation> contact_validate(const ContactSpec& s) {
  std::vector<Violation> out;
  const int k = s.k;

  bool g0_trivial = s.gamma0.rank() == 0;
  if (g0_trivial && s.alg->j[0] == JFlag::Zero)
    out.push_back({"4.28", "coordinate 0 is fully trivial"});
  for (auto v : spec_validate(*s.alg))
    out.push_back({v.code == "3.5" ? "4.28" : v.code, v.detail});
  for (int p : s.mho2)
    if (s.alg->j[p] == JFlag::Zero)
      out.push_back({"4.28", "coordinate " + std::to_string(p) +
                                 " needs J_p = N"});

  auto unit = [&](int p, Rat c) {
    RatVec v = vec_zero(2 * k + 1);
    v[p] = std::move(c);
    return v;
  };
  for (int p = 1; p <= k; p++) {
    bool a = x_nontrivial(s.gamma1, p - 1);
    bool b = x_nontrivial(s.gamma1, k + p - 1);
    const RatVec& sp = s.sigma[p - 1];
    if (a && !b) {
      if (sp != unit(p, Rat(-1)))
        out.push_back({"4.37", "sigma_" + std::to_string(p) +
                                   " must equal -1_[" + std::to_string(p) + "]"});
      else if (!s.alg->gamma.contains(sp))
        out.push_back({"4.37", "sigma_" + std::to_string(p) + " lies outside Gamma"});
    } else if (!a && b) {
      if (sp != unit(k + p, Rat(-1)))
        out.push_back({"4.38", "sigma_" + std::to_string(p) + " must equal -1_[" +
                                   std::to_string(k + p) + "]"});
      else if (!s.alg->gamma.contains(sp))
        out.push_back({"4.38", "sigma_" + std::to_string(p) + " lies outside Gamma"});
    } else if (a && b) {
      RatVec expect = vec_add(unit(p, Rat(-1)), unit(k + p, Rat(-1)));
      if (sp != expect)
        out.push_back({"4.39", "sigma_" + std::to_string(p) +
                                   " must equal -1_[p]-1_[k+p]"});
      else if (!s.alg->gamma.contains(sp))
        out.push_back({"4.39", "sigma_" + std::to_string(p) + " lies outside Gamma"});
      if (!s.alg->gamma.meets_line(unit(p, Rat(1))))
        out.push_back({"4.39", "Gamma misses the coordinate line " +
                                   std::to_string(p)});
      if (!s.alg->gamma.meets_line(unit(k + p, Rat(1))))
        out.push_back({"4.39", "Gamma misses the coordinate line " +
                                   std::to_string(k + p)});
    } else {
      if (!vec_is_zero(sp))
        out.push_back({"4.42", "sigma_" + std::to_string(p) + " must vanish"});
    }
  }
  if (!s.gamma0.contains({s.sigma0}))
    out.push_back({"4.42", "sigma_0 lies outside Gamma0"});
  return out;
}

AlgElem contact_bracket(const ContactSpec& s, const AlgElem& u, const AlgElem& v) {
  check_same_spec(s.alg, u.spec);
  check_same_spec(s.alg, v.spec);
  const int k = s.k;
  auto two_minus_euler = [&](const AlgElem& w) {
    return elem_sub(scalar_mul(Rat(2), w), euler_derive(w));
  };
  AlgElem core = elem_sub(elem_mul(derive(1, u), two_minus_euler(v)),
                          elem_mul(two_minus_euler(u), derive(1, v)));
  RatVec s0 = vec_zero(2 * k + 1);
  s0[0] = s.sigma0;
  AlgElem r = elem_mul(group_elem(s.alg, s0), core);
  for (int p = 1; p <= k; p++) {
    AlgElem part = elem_sub(elem_mul(derive(p + 1, u), derive(k + p + 1, v)),
                            elem_mul(derive(k + p + 1, u), derive(p + 1, v)));
    if (elem_is_zero(part)) continue;
    r = elem_add(r, elem_mul(group_elem(s.alg, s.sigma[p - 1]), part));
  }
  return r;
}

ContactSpec contact_classical(int k) {
  Lattice g0 = Lattice::from_generators({}, 1);
  Lattice g1 = Lattice::from_generators({}, 2 * k);
  return contact_spec(k, g0, g1, std::vector<JFlag>(2 * k + 1, JFlag::Nat), Rat(0));
}

ContactSpec contact_twisted() {
  Lattice g0 = Lattice::from_generators({{Rat(1)}}, 1);
  Lattice g1 = Lattice::from_generators({{Rat(1), Rat(0)}}, 2);
  return contact_spec(1, g0, g1, {JFlag::Nat, JFlag::Zero, JFlag::Nat}, Rat(-1));
}

}  // namespace nglie
