#include "nglie/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nglie {

std::vector<Violation> spec_validate(const AlgebraSpec& s) {
  std::vector<Violation> out;
  if (s.d < 0 || s.d0 < 0) out.push_back({"spec", "negative coordinate count"});
  if (static_cast<int>(s.j.size()) != s.d)
    out.push_back({"spec", "J flag count does not match d"});
  if (s.gamma.dim() != s.gdim())
    out.push_back({"spec", "lattice dimension does not match d0+d"});
  if (!out.empty()) return out;

  for (int p = 1; p <= s.d; p++) {
    if (s.j[p - 1] == JFlag::Nat) continue;
    bool x_trivial = true;
    for (const auto& g : s.gamma.generators())
      if (g[s.d0 + p - 1] != 0) {
        x_trivial = false;
        break;
      }
    if (x_trivial && !s.relaxed.count(p))
      out.push_back({"3.5", "coordinate " + std::to_string(p) +
                                ": X_p(Gamma) and J_p are both trivial"});
  }
  if (s.need_nondegenerate && !s.gamma.nondegenerate())
    out.push_back({"2.10", "group is degenerate in its ambient space"});
  if (s.euler) {
    std::set<int> seen;
    for (int p : s.euler->u1) {
      if (p < 1 || p > s.d) out.push_back({"4.40", "euler set index out of range"});
      seen.insert(p);
    }
    for (int p : s.euler->u2) {
      if (p < 1 || p > s.d) out.push_back({"4.40", "euler set index out of range"});
      if (seen.count(p))
        out.push_back({"4.40", "euler sets are not disjoint"});
    }
  }
  return out;
}

SpecPtr make_spec(AlgebraSpec s) {
  return std::make_shared<const AlgebraSpec>(std::move(s));
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.gamma == b.gamma && a.iexp == b.iexp;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  for (std::size_t i = 0; i < a.gamma.size() && i < b.gamma.size(); i++) {
    int c = cmp(a.gamma[i], b.gamma[i]);
    if (c != 0) return c < 0;
  }
  if (a.gamma.size() != b.gamma.size()) return a.gamma.size() < b.gamma.size();
  return a.iexp < b.iexp;
}

Monomial make_monomial(const AlgebraSpec& s, RatVec gamma, std::vector<int> iexp) {
  if (static_cast<int>(gamma.size()) != s.gdim())
    throw std::invalid_argument("group exponent has wrong dimension");
  if (static_cast<int>(iexp.size()) != s.d)
    throw std::invalid_argument("semigroup exponent has wrong dimension");
  for (int p = 0; p < s.d; p++) {
    if (iexp[p] < 0) throw std::invalid_argument("negative semigroup exponent");
    if (iexp[p] > 0 && s.j[p] == JFlag::Zero)
      throw std::invalid_argument("nonzero exponent at a J_p = {0} coordinate");
  }
  if (!s.gamma.contains(gamma))
    throw std::invalid_argument("group exponent outside the lattice");
  return Monomial{std::move(gamma), std::move(iexp)};
}

void check_same_spec(const SpecPtr& a, const SpecPtr& b) {
  if (a == b) return;
  if (!a || !b) throw std::invalid_argument("spec mismatch: missing spec");
  if (a->d == b->d && a->d0 == b->d0 && a->j == b->j &&
      lattice_equal(a->gamma, b->gamma))
    return;
  throw std::invalid_argument("spec mismatch");
}

AlgElem elem_zero(SpecPtr s) { return AlgElem{std::move(s), {}}; }

AlgElem elem_one(SpecPtr s) {
  AlgElem e{s, {}};
  e.terms[Monomial{vec_zero(s->gdim()), std::vector<int>(s->d, 0)}] = 1;
  return e;
}

AlgElem monomial_elem(SpecPtr s, Monomial m, Rat c) {
  AlgElem e{std::move(s), {}};
  if (c != 0) e.terms[std::move(m)] = std::move(c);
  return e;
}

AlgElem group_elem(SpecPtr s, const RatVec& gamma, Rat c) {
  Monomial m = make_monomial(*s, gamma, std::vector<int>(s->d, 0));
  return monomial_elem(std::move(s), std::move(m), std::move(c));
}

AlgElem t_gen(SpecPtr s, int p) {
  if (p < 1 || p > s->d) throw std::out_of_range("coordinate out of range");
  std::vector<int> i(s->d, 0);
  i[p - 1] = 1;
  Monomial m = make_monomial(*s, vec_zero(s->gdim()), std::move(i));
  return monomial_elem(std::move(s), std::move(m));
}

bool elem_is_zero(const AlgElem& a) { return a.terms.empty(); }

bool elem_eq(const AlgElem& a, const AlgElem& b) {
  check_same_spec(a.spec, b.spec);
  return a.terms == b.terms;
}

static void add_term(AlgElem& e, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = e.terms.find(m);
  if (it == e.terms.end()) {
    e.terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) e.terms.erase(it);
  }
}

AlgElem elem_add(const AlgElem& a, const AlgElem& b) {
  check_same_spec(a.spec, b.spec);
  AlgElem r = a;
  for (const auto& [m, c] : b.terms) add_term(r, m, c);
  return r;
}

AlgElem elem_sub(const AlgElem& a, const AlgElem& b) {
  check_same_spec(a.spec, b.spec);
  AlgElem r = a;
  for (const auto& [m, c] : b.terms) add_term(r, m, -c);
  return r;
}

AlgElem scalar_mul(const Rat& c, const AlgElem& a) {
  AlgElem r{a.spec, {}};
  if (c == 0) return r;
  for (const auto& [m, x] : a.terms) r.terms[m] = c * x;
  return r;
}

AlgElem elem_mul(const AlgElem& a, const AlgElem& b) {
  check_same_spec(a.spec, b.spec);
  // Collect all pairwise products, sort once, then fold equal keys into the
  // ordered map with an end hint; far cheaper than tree inserts per pair.
  std::vector<std::pair<Monomial, Rat>> prods;
  prods.reserve(a.terms.size() * b.terms.size());
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Monomial m;
      m.gamma = vec_add(ma.gamma, mb.gamma);
      m.iexp.resize(ma.iexp.size());
      for (std::size_t i = 0; i < m.iexp.size(); i++)
        m.iexp[i] = ma.iexp[i] + mb.iexp[i];
      prods.emplace_back(std::move(m), ca * cb);
    }
  MonomialLess less;
  std::sort(prods.begin(), prods.end(),
            [&](const auto& x, const auto& y) { return less(x.first, y.first); });
  AlgElem r{a.spec, {}};
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

AlgElem derive(int p, const AlgElem& a) {
  const AlgebraSpec& s = *a.spec;
  if (p < 1 || p > s.d) throw std::out_of_range("derivation index out of range");
  AlgElem r{a.spec, {}};
  for (const auto& [m, c] : a.terms) {
    const Rat& gp = m.gamma[s.d0 + p - 1];
    if (gp != 0) add_term(r, m, c * gp);
    int ip = m.iexp[p - 1];
    if (ip > 0) {
      Monomial low = m;
      low.iexp[p - 1] = ip - 1;
      add_term(r, low, c * ip);
    }
  }
  return r;
}

AlgElem derive_shifted(int p, const Rat& c, const AlgElem& a) {
  return elem_add(derive(p, a), scalar_mul(c, a));
}

AlgElem euler_derive(const AlgElem& a) {
  const AlgebraSpec& s = *a.spec;
  if (!s.euler) throw std::invalid_argument("spec carries no euler sets");
  AlgElem r{a.spec, {}};
  for (const auto& [m, c] : a.terms) {
    Rat w(0);
    for (int p : s.euler->u1) w += m.gamma[s.d0 + p - 1];
    for (int q : s.euler->u2) w += m.iexp[q - 1];
    if (w != 0) add_term(r, m, c * w);
  }
  return r;
}

std::size_t term_count(const AlgElem& a) { return a.terms.size(); }

AlgElem drop_term(const AlgElem& a, std::size_t index) {
  AlgElem r = a;
  auto it = r.terms.begin();
  std::advance(it, index);
  r.terms.erase(it);
  return r;
}

AlgElem random_elem(SpecPtr s, const Budget& b, Rng& rng) {
  AlgElem r{s, {}};
  const auto& basis = s->gamma.generators();
  for (int t = 0; t < b.max_terms; t++) {
    RatVec gamma = vec_zero(s->gdim());
    for (const auto& g : basis) {
      long c = rng.range(-b.gen_bound, b.gen_bound);
      if (c != 0) gamma = vec_add(gamma, vec_scale(Rat(c), g));
    }
    std::vector<int> i(s->d, 0);
    for (int p = 0; p < s->d; p++)
      if (s->j[p] == JFlag::Nat) i[p] = static_cast<int>(rng.range(0, b.max_nat));
    add_term(r, Monomial{std::move(gamma), std::move(i)}, rng.rat_nonzero(b.coeff_bound));
  }
  return r;
}

static std::string render_term(const AlgebraSpec& s, const Monomial& m, const Rat& c) {
  std::ostringstream os;
  os << rat_str(c);
  if (s.gdim() > 0 && !vec_is_zero(m.gamma)) {
    os << "*x[";
    for (int i = 0; i < s.gdim(); i++) {
      if (i) os << ",";
      os << rat_str(m.gamma[i]);
    }
    os << "]";
  }
  bool has_i = false;
  for (int v : m.iexp)
    if (v) has_i = true;
  if (has_i) {
    os << "*t[";
    for (int i = 0; i < s.d; i++) {
      if (i) os << ",";
      os << m.iexp[i];
    }
    os << "]";
  }
  return os.str();
}

std::string render_elem(const AlgElem& a) {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms) {
    if (first) {
      os << render_term(*a.spec, m, c);
      first = false;
    } else if (c < 0) {
      os << " - " << render_term(*a.spec, m, -c);
    } else {
      os << " + " << render_term(*a.spec, m, c);
    }
  }
  return os.str();
}

}  // namespace nglie
