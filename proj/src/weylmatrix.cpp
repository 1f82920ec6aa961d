#include "nglie/weylmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace nglie {

IdealPattern make_pattern(int ell_prime, std::vector<std::vector<int>> m,
                          std::vector<std::vector<int>> n, const WittSpec& s) {
  if (ell_prime < 0 || ell_prime > s.l1)
    throw std::invalid_argument("ell_prime must lie in 0..l1");
  if (m.empty() || m.size() != n.size())
    throw std::invalid_argument("pattern needs matching m and n lists");
  int tail = s.ell() - ell_prime;
  auto total = [](const std::vector<int>& v) {
    int t = 0;
    for (int x : v) {
      if (x < 0) throw std::invalid_argument("negative pattern exponent");
      t += x;
    }
    return t;
  };
  int parity = -1;
  for (std::size_t i = 0; i < m.size(); i++) {
    if (static_cast<int>(m[i].size()) != tail ||
        static_cast<int>(n[i].size()) != tail)
      throw std::invalid_argument("pattern exponent has wrong dimension");
    int par = (total(m[i]) + total(n[i])) % 2;
    if (parity < 0) parity = par;
    if (par != parity)
      throw std::invalid_argument("pattern parity condition fails");
  }
  return IdealPattern{ell_prime, std::move(m), std::move(n)};
}

static void check_same(const WeylMatrix& a, const WeylMatrix& b) {
  if (a.size != b.size) throw std::invalid_argument("size mismatch");
  if (a.spec != b.spec && (!a.spec || !b.spec))
    throw std::invalid_argument("spec mismatch");
}

WeylMatrix matrix_zero(WittPtr s, int size) {
  WeylMatrix a;
  a.size = size;
  a.e.assign(size * size, weyl_zero(s));
  a.spec = std::move(s);
  return a;
}

WeylMatrix matrix_identity(WittPtr s, int size) {
  WeylMatrix a = matrix_zero(s, size);
  for (int i = 0; i < size; i++) a.at(i, i) = weyl_one(a.spec);
  return a;
}

bool matrix_is_zero(const WeylMatrix& a) {
  for (const auto& x : a.e)
    if (!weyl_is_zero(x)) return false;
  return true;
}

bool matrix_eq(const WeylMatrix& a, const WeylMatrix& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.e.size(); i++)
    if (!weyl_eq(a.e[i], b.e[i])) return false;
  return true;
}

WeylMatrix matrix_add(const WeylMatrix& a, const WeylMatrix& b) {
  check_same(a, b);
  WeylMatrix r = a;
  for (std::size_t i = 0; i < a.e.size(); i++) r.e[i] = weyl_add(a.e[i], b.e[i]);
  return r;
}

WeylMatrix matrix_sub(const WeylMatrix& a, const WeylMatrix& b) {
  check_same(a, b);
  WeylMatrix r = a;
  for (std::size_t i = 0; i < a.e.size(); i++) r.e[i] = weyl_sub(a.e[i], b.e[i]);
  return r;
}

WeylMatrix matrix_scale(const Rat& c, const WeylMatrix& a) {
  WeylMatrix r = a;
  for (auto& x : r.e) x = weyl_scale(c, x);
  return r;
}

WeylMatrix matrix_mul(const WeylMatrix& a, const WeylMatrix& b) {
  check_same(a, b);
  WeylMatrix r = matrix_zero(a.spec, a.size);
  for (int i = 0; i < a.size; i++)
    for (int j = 0; j < a.size; j++) {
      WeylOp acc = weyl_zero(a.spec);
      for (int l = 0; l < a.size; l++) {
        if (weyl_is_zero(a.at(i, l)) || weyl_is_zero(b.at(l, j))) continue;
        acc = weyl_add(acc, weyl_mul(a.at(i, l), b.at(l, j)));
      }
      r.at(i, j) = std::move(acc);
    }
  return r;
}

WeylMatrix matrix_bracket(const WeylMatrix& a, const WeylMatrix& b) {
  return matrix_sub(matrix_mul(a, b), matrix_mul(b, a));
}

WeylMatrix sl_rep(const WeylMatrix& a) {
  WeylOp trace = weyl_zero(a.spec);
  for (int i = 0; i < a.size; i++) trace = weyl_add(trace, a.at(i, i));
  WeylKey one{Monomial{vec_zero(a.spec->alg->gdim()),
                       std::vector<int>(a.spec->ell(), 0)},
              std::vector<int>(a.spec->ell(), 0)};
  auto it = trace.terms.find(one);
  if (it == trace.terms.end()) return a;
  Rat c = it->second / a.size;
  return matrix_sub(a, matrix_scale(c, matrix_identity(a.spec, a.size)));
}

bool gl_member(const WeylMatrix& a, const IdealPattern& p) {
  if (a.size != p.k()) throw std::invalid_argument("size mismatch");
  for (int i = 0; i < a.size; i++)
    for (int j = 0; j < a.size; j++)
      if (!weyl_divide(a.at(i, j), p.n[i], p.m[j], p.ell_prime)) return false;
  return true;
}

WeylOp rho_signed(const WeylOp& a, int i, int j, const IdealPattern& p) {
  auto core = weyl_divide(a, p.n[i - 1], p.m[j - 1], p.ell_prime);
  if (!core) throw std::invalid_argument("operator not in the ideal slot");
  int sign_total = 0;
  for (int v : p.n[i - 1]) sign_total += v;
  for (int v : p.m[j - 1]) sign_total += v;
  WeylOp r = tau(*core, p.ell_prime);
  const WittSpec& s = *a.spec;
  int tail = s.ell() - p.ell_prime;
  auto dtil = [&](const std::vector<int>& exps) {
    std::vector<int> full(s.ell(), 0);
    for (int t = 0; t < tail; t++) full[p.ell_prime + t] = exps[t];
    Monomial one{vec_zero(s.alg->gdim()), std::vector<int>(s.ell(), 0)};
    return weyl_term(a.spec, std::move(one), std::move(full));
  };
  r = weyl_mul(dtil(p.n[j - 1]), r);
  r = weyl_mul(r, dtil(p.m[i - 1]));
  if (sign_total % 2 != 0) r = weyl_scale(Rat(-1), r);
  return r;
}

WeylMatrix star(const WeylMatrix& a, const IdealPattern& p) {
  if (a.size != p.k()) throw std::invalid_argument("size mismatch");
  WeylMatrix r = matrix_zero(a.spec, a.size);
  for (int i = 0; i < a.size; i++)
    for (int j = 0; j < a.size; j++)
      r.at(i, j) = rho_signed(a.at(j, i), j + 1, i + 1, p);
  return r;
}

WeylMatrix o_project(const WeylMatrix& a, const IdealPattern& p) {
  return matrix_scale(Rat(1, 2), matrix_sub(a, star(a, p)));
}

bool o_member(const WeylMatrix& a, const IdealPattern& p) {
  return matrix_is_zero(matrix_add(star(a, p), a));
}

static int pat_index(int i, int k) { return i % k; }  // 0-based row/col

bool sp_shape_member(const WeylMatrix& a, const IdealPattern& p) {
  int k = p.k();
  if (a.size != 2 * k) throw std::invalid_argument("size must be 2k");
  for (int i = 0; i < a.size; i++)
    for (int j = 0; j < a.size; j++)
      if (!weyl_divide(a.at(i, j), p.n[pat_index(i, k)], p.m[pat_index(j, k)],
                       p.ell_prime))
        return false;
  return true;
}

/// star on the 2k x 2k shape, slots indexed mod k.
static WeylMatrix star_2k(const WeylMatrix& a, const IdealPattern& p) {
  int k = p.k();
  WeylMatrix r = matrix_zero(a.spec, a.size);
  for (int i = 0; i < a.size; i++)
    for (int j = 0; j < a.size; j++)
      r.at(i, j) =
          rho_signed(a.at(j, i), pat_index(j, k) + 1, pat_index(i, k) + 1, p);
  return r;
}

WeylMatrix sp_rho(const WeylMatrix& a, const IdealPattern& p) {
  int k = p.k();
  if (a.size != 2 * k) throw std::invalid_argument("size must be 2k");
  WeylMatrix st = star_2k(a, p);
  // -S A* S with S = [[0, I],[-I, 0]] is a signed block swap:
  // [[B11, -B10],[-B01, B00]] for A* = [[B00, B01],[B10, B11]].
  WeylMatrix r = matrix_zero(a.spec, a.size);
  for (int bi = 0; bi < 2; bi++)
    for (int bj = 0; bj < 2; bj++)
      for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++) {
          const WeylOp& src = st.at((1 - bi) * k + i, (1 - bj) * k + j);
          Rat sgn = (bi == 0 ? Rat(1) : Rat(-1)) * (bj == 1 ? Rat(1) : Rat(-1));
          r.at(bi * k + i, bj * k + j) = weyl_scale(-sgn, src);
        }
  return r;
}

WeylMatrix sp_project(const WeylMatrix& a, const IdealPattern& p) {
  return matrix_scale(Rat(1, 2), matrix_sub(a, sp_rho(a, p)));
}

bool sp_member(const WeylMatrix& a, const IdealPattern& p) {
  return matrix_is_zero(matrix_add(sp_rho(a, p), a));
}

std::size_t matrix_term_count(const WeylMatrix& a) {
  std::size_t n = 0;
  for (const auto& x : a.e) n += x.terms.size();
  return n;
}

WeylMatrix matrix_drop_term(const WeylMatrix& a, std::size_t index) {
  WeylMatrix r = a;
  for (auto& x : r.e) {
    if (index < x.terms.size()) {
      x = weyl_drop_term(x, index);
      return r;
    }
    index -= x.terms.size();
  }
  throw std::out_of_range("term index out of range");
}

WeylMatrix random_gl_member(WittPtr s, const IdealPattern& p, const Budget& b,
                            Rng& rng) {
  int k = p.k();
  WeylMatrix a = matrix_zero(s, k);
  const WittSpec& ws = *s;
  int tail = ws.ell() - p.ell_prime;
  auto dtil = [&](const std::vector<int>& exps) {
    std::vector<int> full(ws.ell(), 0);
    for (int t = 0; t < tail; t++) full[p.ell_prime + t] = exps[t];
    Monomial one{vec_zero(ws.alg->gdim()), std::vector<int>(ws.ell(), 0)};
    return weyl_term(s, std::move(one), std::move(full));
  };
  Budget per = b;
  per.max_terms = std::max(1, b.max_terms / 3);
  for (int i = 0; i < k; i++)
    for (int j = 0; j < k; j++) {
      WeylOp core = random_weyl(s, per, rng);
      a.at(i, j) = weyl_mul(weyl_mul(dtil(p.n[i]), core), dtil(p.m[j]));
    }
  return a;
}

WeylMatrix random_matrix(WittPtr s, int size, const Budget& b, Rng& rng) {
  WeylMatrix a = matrix_zero(std::move(s), size);
  Budget per = b;
  per.max_terms = std::max(1, b.max_terms / 3);
  for (auto& x : a.e) x = random_weyl(a.spec, per, rng);
  return a;
}

WeylMatrix random_sp_shape(WittPtr s, const IdealPattern& p, const Budget& b,
                           Rng& rng) {
  int k = p.k();
  WeylMatrix a = matrix_zero(s, 2 * k);
  const WittSpec& ws = *s;
  int tail = ws.ell() - p.ell_prime;
  auto dtil = [&](const std::vector<int>& exps) {
    std::vector<int> full(ws.ell(), 0);
    for (int t = 0; t < tail; t++) full[p.ell_prime + t] = exps[t];
    Monomial one{vec_zero(ws.alg->gdim()), std::vector<int>(ws.ell(), 0)};
    return weyl_term(s, std::move(one), std::move(full));
  };
  Budget per = b;
  per.max_terms = std::max(1, b.max_terms / 3);
  for (int i = 0; i < 2 * k; i++)
    for (int j = 0; j < 2 * k; j++) {
      WeylOp core = random_weyl(s, per, rng);
      a.at(i, j) = weyl_mul(
          weyl_mul(dtil(p.n[pat_index(i, k)]), core), dtil(p.m[pat_index(j, k)]));
    }
  return a;
}

std::string render_matrix(const WeylMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < a.size; i++) {
    if (i) os << "; ";
    for (int j = 0; j < a.size; j++) {
      if (j) os << ", ";
      os << render_weyl(a.at(i, j));
    }
  }
  os << "]";
  return os.str();
}

}  // namespace nglie
