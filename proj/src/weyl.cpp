#include "nglie/weyl.hpp"
#include <algorithm>

#include <sstream>
#include <stdexcept>

namespace nglie {

bool operator==(const WeylKey& a, const WeylKey& b) {
  return a.mon == b.mon && a.dexp == b.dexp;
}

bool WeylKeyLess::operator()(const WeylKey& a, const WeylKey& b) const {
  MonomialLess less;
  if (less(a.mon, b.mon)) return true;
  if (less(b.mon, a.mon)) return false;
  return a.dexp < b.dexp;
}

static void check_same(const WeylOp& a, const WeylOp& b) {
  if (a.spec != b.spec) {
    if (!a.spec || !b.spec || a.spec->l1 != b.spec->l1 ||
        a.spec->l2 != b.spec->l2 || a.spec->l3 != b.spec->l3 ||
        !lattice_equal(a.spec->gamma, b.spec->gamma))
      throw std::invalid_argument("spec mismatch");
  }
}

WeylOp weyl_zero(WittPtr s) { return WeylOp{std::move(s), {}}; }

WeylOp weyl_one(WittPtr s) {
  WeylOp r{s, {}};
  Monomial one{vec_zero(s->alg->gdim()), std::vector<int>(s->ell(), 0)};
  r.terms[WeylKey{std::move(one), std::vector<int>(s->ell(), 0)}] = 1;
  return r;
}

WeylOp weyl_from_elem(const AlgElem& a, WittPtr s) {
  check_same_spec(s->alg, a.spec);
  WeylOp r{std::move(s), {}};
  for (const auto& [m, c] : a.terms)
    r.terms[WeylKey{m, std::vector<int>(a.spec->d, 0)}] = c;
  return r;
}

WeylOp weyl_t(WittPtr s, int p) { return weyl_from_elem(t_gen(s->alg, p), s); }

WeylOp weyl_d(WittPtr s, int p) {
  if (p < 1 || p > s->ell()) throw std::out_of_range("derivation out of range");
  WeylOp r{s, {}};
  Monomial one{vec_zero(s->alg->gdim()), std::vector<int>(s->ell(), 0)};
  std::vector<int> e(s->ell(), 0);
  e[p - 1] = 1;
  r.terms[WeylKey{std::move(one), std::move(e)}] = 1;
  return r;
}

WeylOp weyl_term(WittPtr s, Monomial m, std::vector<int> dexp, Rat c) {
  if (static_cast<int>(dexp.size()) != s->ell())
    throw std::invalid_argument("derivation exponent has wrong dimension");
  for (int v : dexp)
    if (v < 0) throw std::invalid_argument("negative derivation exponent");
  WeylOp r{std::move(s), {}};
  if (c != 0) r.terms[WeylKey{std::move(m), std::move(dexp)}] = std::move(c);
  return r;
}

bool weyl_is_zero(const WeylOp& a) { return a.terms.empty(); }

bool weyl_eq(const WeylOp& a, const WeylOp& b) {
  check_same(a, b);
  return a.terms == b.terms;
}

static void add_term(WeylOp& r, const WeylKey& k, const Rat& c) {
  if (c == 0) return;
  auto it = r.terms.find(k);
  if (it == r.terms.end()) {
    r.terms.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) r.terms.erase(it);
  }
}

WeylOp weyl_add(const WeylOp& a, const WeylOp& b) {
  check_same(a, b);
  WeylOp r = a;
  for (const auto& [k, c] : b.terms) add_term(r, k, c);
  return r;
}

WeylOp weyl_sub(const WeylOp& a, const WeylOp& b) {
  check_same(a, b);
  WeylOp r = a;
  for (const auto& [k, c] : b.terms) add_term(r, k, -c);
  return r;
}

WeylOp weyl_scale(const Rat& c, const WeylOp& a) {
  WeylOp r{a.spec, {}};
  if (c == 0) return r;
  for (const auto& [k, x] : a.terms) r.terms[k] = c * x;
  return r;
}

static Rat binom(int n, int k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) {
  check_same(a, b);
  const int l = a.spec->ell();
  const SpecPtr& alg = a.spec->alg;
  std::vector<std::pair<WeylKey, Rat>> prods;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      struct Piece {
        std::vector<int> k;
        Rat coef;
        AlgElem val;
      };
      std::vector<Piece> pieces;
      pieces.push_back({std::vector<int>(l, 0), Rat(1), monomial_elem(alg, kb.mon)});
      for (int p = 0; p < l; p++) {
        if (ka.dexp[p] == 0) continue;
        std::vector<Piece> next;
        for (auto& piece : pieces) {
          AlgElem dval = piece.val;
          for (int kp = 0; kp <= ka.dexp[p]; kp++) {
            if (elem_is_zero(dval)) break;
            Piece q;
            q.k = piece.k;
            q.k[p] = kp;
            q.coef = piece.coef * binom(ka.dexp[p], kp);
            q.val = dval;
            next.push_back(std::move(q));
            if (kp < ka.dexp[p]) dval = derive(p + 1, dval);
          }
        }
        pieces = std::move(next);
      }
      AlgElem left = monomial_elem(alg, ka.mon);
      for (const auto& piece : pieces) {
        AlgElem prod = elem_mul(left, piece.val);
        std::vector<int> e(l);
        for (int p = 0; p < l; p++) e[p] = ka.dexp[p] - piece.k[p] + kb.dexp[p];
        for (const auto& [m, c] : prod.terms)
          prods.emplace_back(WeylKey{m, e}, ca * cb * piece.coef * c);
      }
    }
  WeylKeyLess less;
  std::sort(prods.begin(), prods.end(),
            [&](const auto& x, const auto& y) { return less(x.first, y.first); });
  WeylOp r{a.spec, {}};
  std::size_t i = 0;
  while (i < prods.size()) {
    Rat c = std::move(prods[i].second);
    std::size_t j = i + 1;
    while (j < prods.size() && prods[j].first == prods[i].first)
      c += prods[j++].second;
    if (c != 0) r.terms.emplace_hint(r.terms.end(), std::move(prods[i].first),
                                     std::move(c));
    i = j;
  }
  return r;
}

AlgElem weyl_apply(const WeylOp& a, const AlgElem& u) {
  check_same_spec(a.spec->alg, u.spec);
  AlgElem r = elem_zero(u.spec);
  for (const auto& [k, c] : a.terms) {
    AlgElem v = u;
    for (int p = 0; p < a.spec->ell() && !elem_is_zero(v); p++)
      for (int n = 0; n < k.dexp[p]; n++) v = derive(p + 1, v);
    if (elem_is_zero(v)) continue;
    r = elem_add(r, scalar_mul(c, elem_mul(monomial_elem(u.spec, k.mon), v)));
  }
  return r;
}

WeylOp tau(const WeylOp& a, int ell_prime) {
  const WittSpec& s = *a.spec;
  if (ell_prime < 0 || ell_prime > s.l1)
    throw std::out_of_range("ell_prime must lie in 0..l1");
  const int l = s.ell();
  WeylOp r = weyl_zero(a.spec);
  for (const auto& [k, c] : a.terms) {
    // Split: leading t-exponents m', leading d-exponents m'', trailing
    // derivations n; the A' part keeps gamma and the trailing t-exponents.
    Monomial base = k.mon;
    std::vector<int> base_d(l, 0);
    int tilde_total = 0;
    for (int p = 0; p < ell_prime; p++) {
      base.iexp[p] = k.dexp[p];   // tbar^{m''}
      base_d[p] = k.mon.iexp[p];  // dbar^{m'}
    }
    std::vector<int> tilde(l, 0);
    for (int p = ell_prime; p < l; p++) {
      tilde[p] = k.dexp[p];
      tilde_total += k.dexp[p];
    }
    Rat sign = (tilde_total % 2 == 0) ? Rat(1) : Rat(-1);
    WeylOp piece = weyl_term(a.spec, std::move(base), std::move(base_d), sign * c);
    if (tilde_total > 0) {
      Monomial one{vec_zero(s.alg->gdim()), std::vector<int>(l, 0)};
      WeylOp dtil = weyl_term(a.spec, std::move(one), std::move(tilde));
      piece = weyl_mul(dtil, piece);
    }
    r = weyl_add(r, piece);
  }
  return r;
}

std::optional<WeylOp> weyl_divide(const WeylOp& a, const std::vector<int>& left_n,
                                  const std::vector<int>& right_m, int ell_prime) {
  const WittSpec& s = *a.spec;
  if (ell_prime < 0 || ell_prime > s.l1)
    throw std::out_of_range("ell_prime must lie in 0..l1");
  const int l = s.ell();
  const int tail = l - ell_prime;
  if (static_cast<int>(left_n.size()) != tail ||
      static_cast<int>(right_m.size()) != tail)
    throw std::invalid_argument("divisor exponent has wrong dimension");

  // Right division: right multiplication only shifts derivation exponents.
  WeylOp cur = weyl_zero(a.spec);
  for (const auto& [k, c] : a.terms) {
    WeylKey nk = k;
    for (int i = 0; i < tail; i++) {
      if (nk.dexp[ell_prime + i] < right_m[i]) return std::nullopt;
      nk.dexp[ell_prime + i] -= right_m[i];
    }
    cur.terms[nk] = c;
  }

  int n_total = 0;
  for (int v : left_n) n_total += v;
  if (n_total == 0) return cur;

  std::vector<int> n_full(l, 0);
  for (int i = 0; i < tail; i++) n_full[ell_prime + i] = left_n[i];
  Monomial one{vec_zero(s.alg->gdim()), std::vector<int>(l, 0)};
  WeylOp dtil = weyl_term(a.spec, std::move(one), n_full);

  auto tilde_degree = [&](const WeylKey& k) {
    int d = 0;
    for (int i = 0; i < tail; i++) d += k.dexp[ell_prime + i];
    return d;
  };

  WeylOp quot = weyl_zero(a.spec);
  while (!weyl_is_zero(cur)) {
    int top = 0;
    for (const auto& [k, c] : cur.terms) top = std::max(top, tilde_degree(k));
    if (top < n_total) return std::nullopt;
    WeylOp stratum = weyl_zero(a.spec);
    for (const auto& [k, c] : cur.terms) {
      if (tilde_degree(k) != top) continue;
      WeylKey nk = k;
      for (int i = 0; i < tail; i++) {
        if (nk.dexp[ell_prime + i] < left_n[i]) return std::nullopt;
        nk.dexp[ell_prime + i] -= left_n[i];
      }
      stratum.terms[nk] = c;
    }
    quot = weyl_add(quot, stratum);
    cur = weyl_sub(cur, weyl_mul(dtil, stratum));
  }
  return quot;
}

std::size_t weyl_term_count(const WeylOp& a) { return a.terms.size(); }

WeylOp weyl_drop_term(const WeylOp& a, std::size_t index) {
  WeylOp r = a;
  auto it = r.terms.begin();
  std::advance(it, index);
  r.terms.erase(it);
  return r;
}

WeylOp random_weyl(WittPtr s, const Budget& b, Rng& rng) {
  WeylOp r{s, {}};
  const auto& basis = s->alg->gamma.generators();
  for (int t = 0; t < b.max_terms; t++) {
    RatVec gamma = vec_zero(s->alg->gdim());
    for (const auto& g : basis) {
      long c = rng.range(-b.gen_bound, b.gen_bound);
      if (c != 0) gamma = vec_add(gamma, vec_scale(Rat(c), g));
    }
    std::vector<int> i(s->ell(), 0), e(s->ell(), 0);
    for (int p = 0; p < s->ell(); p++) {
      if (s->alg->j[p] == JFlag::Nat) i[p] = static_cast<int>(rng.range(0, b.max_nat));
      e[p] = static_cast<int>(rng.range(0, b.max_nat));
    }
    add_term(r, WeylKey{Monomial{std::move(gamma), std::move(i)}, std::move(e)},
             rng.rat_nonzero(b.coeff_bound));
  }
  return r;
}

WeylOp random_weyl_tail(WittPtr s, int ell_prime, const Budget& b, Rng& rng) {
  WeylOp r{s, {}};
  const auto& basis = s->alg->gamma.generators();
  for (int t = 0; t < std::max(1, b.max_terms / 2); t++) {
    RatVec gamma = vec_zero(s->alg->gdim());
    for (const auto& g : basis) {
      long c = rng.range(-b.gen_bound, b.gen_bound);
      if (c != 0) gamma = vec_add(gamma, vec_scale(Rat(c), g));
    }
    std::vector<int> i(s->ell(), 0), e(s->ell(), 0);
    for (int p = ell_prime; p < s->ell(); p++) {
      if (s->alg->j[p] == JFlag::Nat) i[p] = static_cast<int>(rng.range(0, b.max_nat));
      e[p] = static_cast<int>(rng.range(0, b.max_nat));
    }
    add_term(r, WeylKey{Monomial{std::move(gamma), std::move(i)}, std::move(e)},
             rng.rat_nonzero(b.coeff_bound));
  }
  return r;
}

WeylOp random_weyl_head(WittPtr s, int ell_prime, const Budget& b, Rng& rng) {
  WeylOp r{s, {}};
  for (int t = 0; t < std::max(1, b.max_terms / 2); t++) {
    std::vector<int> i(s->ell(), 0), e(s->ell(), 0);
    for (int p = 0; p < ell_prime; p++) {
      i[p] = static_cast<int>(rng.range(0, b.max_nat));
      e[p] = static_cast<int>(rng.range(0, b.max_nat));
    }
    add_term(r, WeylKey{Monomial{vec_zero(s->alg->gdim()), std::move(i)}, std::move(e)},
             rng.rat_nonzero(b.coeff_bound));
  }
  return r;
}

std::string render_weyl(const WeylOp& a) {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a.terms) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      os << render_elem(monomial_elem(a.spec->alg, k.mon, c));
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ")
         << render_elem(monomial_elem(a.spec->alg, k.mon, mag));
    }
    bool has_d = false;
    for (int v : k.dexp)
      if (v) has_d = true;
    if (has_d) {
      os << "*P[";
      for (int p = 0; p < a.spec->ell(); p++) {
        if (p) os << ",";
        os << k.dexp[p];
      }
      os << "]";
    }
  }
  return os.str();
}

}  // namespace nglie
