#include "nglie/witt.hpp"

#include <sstream>
#include <stdexcept>

namespace nglie {

WittPtr witt_spec(int l1, int l2, int l3, Lattice gamma) {
  if (l1 < 0 || l2 < 0 || l3 < 0 || l1 + l2 + l3 == 0)
    throw std::invalid_argument("need l1+l2+l3 > 0");
  if (gamma.dim() != l2 + l3)
    throw std::invalid_argument("Gamma must live in Q^{l2+l3}");
  if (l2 + l3 > 0 && !gamma.nondegenerate())
    throw std::invalid_argument("Gamma must be nondegenerate");
  if (l2 + l3 == 0 && gamma.rank() != 0)
    throw std::invalid_argument("Gamma must be {0} when l2+l3 = 0");

  int l = l1 + l2 + l3;
  AlgebraSpec a;
  a.d = l;
  a.d0 = 0;
  std::vector<RatVec> padded;
  for (const auto& g : gamma.generators()) {
    RatVec v = vec_zero(l1);
    v.insert(v.end(), g.begin(), g.end());
    padded.push_back(std::move(v));
  }
  a.gamma = Lattice::from_generators(std::move(padded), l);
  a.j.assign(l, JFlag::Zero);
  for (int p = 0; p < l1 + l2; p++) a.j[p] = JFlag::Nat;

  auto ws = std::make_shared<WittSpec>();
  ws->l1 = l1;
  ws->l2 = l2;
  ws->l3 = l3;
  ws->gamma = std::move(gamma);
  ws->alg = make_spec(std::move(a));
  return ws;
}

RatVec witt_pad(const WittSpec& s, const RatVec& v) {
  if (static_cast<int>(v.size()) != s.l2 + s.l3)
    throw std::invalid_argument("dimension mismatch");
  RatVec r = vec_zero(s.l1);
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

static void check_same_witt(const WittElem& a, const WittElem& b) {
  if (a.spec != b.spec) {
    if (!a.spec || !b.spec || a.spec->l1 != b.spec->l1 ||
        a.spec->l2 != b.spec->l2 || a.spec->l3 != b.spec->l3 ||
        !lattice_equal(a.spec->gamma, b.spec->gamma))
      throw std::invalid_argument("spec mismatch");
  }
}

WittElem witt_zero(WittPtr s) {
  WittElem w;
  w.u.assign(s->ell(), elem_zero(s->alg));
  w.spec = std::move(s);
  return w;
}

WittElem witt_term(WittPtr s, int p, AlgElem coeff) {
  if (p < 1 || p > s->ell()) throw std::out_of_range("D index out of range");
  WittElem w = witt_zero(std::move(s));
  w.u[p - 1] = std::move(coeff);
  return w;
}

bool witt_is_zero(const WittElem& w) {
  for (const auto& c : w.u)
    if (!elem_is_zero(c)) return false;
  return true;
}

bool witt_eq(const WittElem& a, const WittElem& b) {
  check_same_witt(a, b);
  for (int p = 0; p < a.spec->ell(); p++)
    if (!elem_eq(a.u[p], b.u[p])) return false;
  return true;
}

WittElem witt_add(const WittElem& a, const WittElem& b) {
  check_same_witt(a, b);
  WittElem r = a;
  for (int p = 0; p < a.spec->ell(); p++) r.u[p] = elem_add(a.u[p], b.u[p]);
  return r;
}

WittElem witt_sub(const WittElem& a, const WittElem& b) {
  check_same_witt(a, b);
  WittElem r = a;
  for (int p = 0; p < a.spec->ell(); p++) r.u[p] = elem_sub(a.u[p], b.u[p]);
  return r;
}

WittElem witt_scale(const Rat& c, const WittElem& a) {
  WittElem r = a;
  for (auto& x : r.u) x = scalar_mul(c, x);
  return r;
}

WittElem witt_mul_elem(const AlgElem& a, const WittElem& w) {
  WittElem r = w;
  for (auto& x : r.u) x = elem_mul(a, x);
  return r;
}

AlgElem witt_apply(const WittElem& w, const AlgElem& a) {
  check_same_spec(w.spec->alg, a.spec);
  AlgElem r = elem_zero(a.spec);
  for (int p = 0; p < w.spec->ell(); p++) {
    if (elem_is_zero(w.u[p])) continue;
    r = elem_add(r, elem_mul(w.u[p], derive(p + 1, a)));
  }
  return r;
}

WittElem witt_bracket(const WittElem& a, const WittElem& b) {
  check_same_witt(a, b);
  // The d_p commute, so the bracket acts coefficient-wise:
  // [sum u_p D_p, sum v_q D_q] = sum_q (sum_p u_p d_p(v_q) - v_p d_p(u_q)) D_q.
  WittElem r = witt_zero(a.spec);
  int l = a.spec->ell();
  for (int q = 0; q < l; q++) {
    AlgElem acc = elem_zero(a.spec->alg);
    for (int p = 0; p < l; p++) {
      if (!elem_is_zero(a.u[p]))
        acc = elem_add(acc, elem_mul(a.u[p], derive(p + 1, b.u[q])));
      if (!elem_is_zero(b.u[p]))
        acc = elem_sub(acc, elem_mul(b.u[p], derive(p + 1, a.u[q])));
    }
    r.u[q] = std::move(acc);
  }
  return r;
}

AlgElem divergence(const WittElem& w) {
  AlgElem r = elem_zero(w.spec->alg);
  for (int p = 0; p < w.spec->ell(); p++)
    r = elem_add(r, derive(p + 1, w.u[p]));
  return r;
}

bool s_member(const WittElem& w, const RatVec& rho) {
  const WittSpec& s = *w.spec;
  if (!s.gamma.contains(rho)) throw std::invalid_argument("rho outside Gamma");
  AlgElem shift = group_elem(s.alg, witt_pad(s, vec_neg(rho)));
  return elem_is_zero(divergence(witt_mul_elem(shift, w)));
}

WittElem s_random(WittPtr s, const RatVec& rho, const Budget& b, Rng& rng) {
  if (s->ell() < 2) throw std::invalid_argument("need at least two coordinates");
  if (!s->gamma.contains(rho)) throw std::invalid_argument("rho outside Gamma");
  AlgElem u = random_elem(s->alg, b, rng);
  int p = static_cast<int>(rng.range(1, s->ell()));
  int q = static_cast<int>(rng.range(1, s->ell() - 1));
  if (q >= p) q++;
  WittElem w = witt_add(witt_term(s, p, derive(q, u)),
                        witt_term(s, q, scalar_mul(Rat(-1), derive(p, u))));
  AlgElem shift = group_elem(s->alg, witt_pad(*s, rho));
  return witt_mul_elem(shift, w);
}

std::size_t witt_term_count(const WittElem& w) {
  std::size_t n = 0;
  for (const auto& c : w.u) n += c.terms.size();
  return n;
}

WittElem witt_drop_term(const WittElem& w, std::size_t index) {
  WittElem r = w;
  for (auto& c : r.u) {
    if (index < c.terms.size()) {
      c = drop_term(c, index);
      return r;
    }
    index -= c.terms.size();
  }
  throw std::out_of_range("term index out of range");
}

WittElem random_witt(WittPtr s, const Budget& b, Rng& rng) {
  WittElem w = witt_zero(s);
  Budget per = b;
  per.max_terms = std::max(1, b.max_terms / 2);
  int slots = std::max(1, std::min(2, s->ell()));
  for (int n = 0; n < slots; n++) {
    int p = static_cast<int>(rng.range(1, s->ell()));
    w.u[p - 1] = elem_add(w.u[p - 1], random_elem(s->alg, per, rng));
  }
  return w;
}

std::string render_witt(const WittElem& w) {
  if (witt_is_zero(w)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = 0; p < w.spec->ell(); p++) {
    const AlgElem& c = w.u[p];
    for (const auto& [m, coeff] : c.terms) {
      if (first) {
        os << render_elem(monomial_elem(c.spec, m, coeff));
        first = false;
      } else {
        Rat mag = coeff < 0 ? Rat(-coeff) : coeff;
        os << (coeff < 0 ? " - " : " + ")
           << render_elem(monomial_elem(c.spec, m, mag));
      }
      os << "*D[" << (p + 1) << "]";
    }
  }
  return os.str();
}

}  // namespace nglie
