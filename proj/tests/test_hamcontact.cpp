#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nglie/hamcontact.hpp"

using namespace nglie;

static bool has_code(const std::vector<Violation>& v, const std::string& code) {
  for (const auto& x : v)
    if (x.code == code) return true;
  return false;
}

TEST_CASE("classical data validates") {
  HamSpec s = ham_classical(2);
  CHECK(ham_validate(s).empty());
}

TEST_CASE("skewness of phi is enforced") {
  HamSpec s = ham_classical(1);
  s.phi[0][1] = 1;  // not mirrored
  auto v = ham_validate(s);
  CHECK(has_code(v, "skew"));
}

TEST_CASE("twisted pairs need a nonzero sigma") {
  HamSpec s = ham_nonclassical();
  s.sigma[0] = vec_zero(5);
  auto v = ham_validate(s);
  CHECK(has_code(v, "4.18"));
}

TEST_CASE("the k=1 rank-one external candidate is structurally impossible") {
  // With k = k1 = 1 every nontrivial internal direction is forced into the
  // radical, so a rank-one external block can never pair nontrivially: the
  // radical condition and the nondegeneracy condition exclude each other.
  HamSpec s = ham_nonclassical_k1_candidate();
  auto v = ham_validate(s);
  CHECK_FALSE(v.empty());
  CHECK((has_code(v, "4.17") || has_code(v, "4.15")));
  bool radical_conflict = has_code(v, "4.17") || has_code(v, "4.18");
  CHECK(radical_conflict);
}

TEST_CASE("the k=2 nonclassical spec validates and satisfies the axioms") {
  HamSpec s = ham_nonclassical();
  CHECK(ham_validate(s).empty());
  Budget budget;
  budget.max_terms = 3;
  for (int t = 0; t < 20; t++) {
    Rng rng = Rng::split(67, t);
    AlgElem u = random_elem(s.alg, budget, rng);
    AlgElem v = random_elem(s.alg, budget, rng);
    AlgElem w = random_elem(s.alg, budget, rng);
    CHECK(elem_is_zero(elem_add(ham_bracket(s, u, v), ham_bracket(s, v, u))));
    AlgElem jac = elem_add(
        elem_add(ham_bracket(s, ham_bracket(s, u, v), w),
                 ham_bracket(s, ham_bracket(s, v, w), u)),
        ham_bracket(s, ham_bracket(s, w, u), v));
    CHECK(elem_is_zero(jac));
    // Poisson compatibility
    AlgElem lhs = ham_bracket(s, u, elem_mul(v, w));
    AlgElem rhs = elem_add(elem_mul(ham_bracket(s, u, v), w),
                           elem_mul(v, ham_bracket(s, u, w)));
    CHECK(elem_eq(lhs, rhs));
  }
}

TEST_CASE("split-form data validates and the scalar part reduces") {
  HamSpec s = ham_split_form();
  CHECK(ham_validate(s).empty());
  // With the internal block paired standardly and k1 = 0, the scalar term
  // reduces to the external pairing alone.
  AlgElem a = group_elem(s.alg, {rat(1), rat(0), rat(0), rat(0)});
  AlgElem b = group_elem(s.alg, {rat(0), rat(1), rat(0), rat(0)});
  AlgElem br = ham_bracket(s, a, b);
  CHECK(elem_eq(br, group_elem(s.alg, {rat(1), rat(1), rat(0), rat(0)})));
  Budget budget;
  budget.max_terms = 3;
  for (int t = 0; t < 15; t++) {
    Rng rng = Rng::split(71, t);
    AlgElem u = random_elem(s.alg, budget, rng);
    AlgElem v = random_elem(s.alg, budget, rng);
    AlgElem w = random_elem(s.alg, budget, rng);
    AlgElem jac = elem_add(
        elem_add(ham_bracket(s, ham_bracket(s, u, v), w),
                 ham_bracket(s, ham_bracket(s, v, w), u)),
        ham_bracket(s, ham_bracket(s, w, u), v));
    CHECK(elem_is_zero(jac));
  }
}

TEST_CASE("classical bracket values") {
  HamSpec s = ham_classical(1);
  AlgElem t1 = t_gen(s.alg, 1), t2 = t_gen(s.alg, 2);
  CHECK(elem_eq(ham_bracket(s, t1, t2), elem_one(s.alg)));
  CHECK(elem_is_zero(ham_bracket(s, elem_one(s.alg), t2)));
  CHECK(elem_is_zero(ham_quotient(ham_bracket(s, t1, t2))));

  HamSpec s2 = ham_classical(2);
  AlgElem a = t_gen(s2.alg, 1), b = t_gen(s2.alg, 3);
  CHECK(elem_eq(ham_bracket(s2, a, b), elem_one(s2.alg)));
  CHECK(elem_is_zero(ham_bracket(s2, t_gen(s2.alg, 1), t_gen(s2.alg, 2))));
}

TEST_CASE("hamiltonian degree compatibility") {
  HamSpec s = ham_nonclassical();
  Budget budget;
  budget.max_terms = 1;
  for (int t = 0; t < 20; t++) {
    Rng rng = Rng::split(73, t);
    AlgElem u = random_elem(s.alg, budget, rng);
    AlgElem v = random_elem(s.alg, budget, rng);
    if (elem_is_zero(u) || elem_is_zero(v)) continue;
    RatVec du = u.terms.begin()->first.gamma;
    RatVec dv = v.terms.begin()->first.gamma;
    AlgElem br = ham_bracket(s, u, v);
    RatVec plain = vec_add(du, dv);
    for (const auto& [m, c] : br.terms) {
      bool match = m.gamma == plain;
      for (int p = 0; p < s.k && !match; p++)
        match = m.gamma == vec_add(plain, s.sigma[p]);
      CHECK(match);
    }
  }
}

TEST_CASE("poisson law in the classical case") {
  HamSpec s = ham_classical(2);
  Budget budget;
  budget.max_terms = 3;
  for (int t = 0; t < 20; t++) {
    Rng rng = Rng::split(79, t);
    AlgElem u = random_elem(s.alg, budget, rng);
    AlgElem v = random_elem(s.alg, budget, rng);
    AlgElem w = random_elem(s.alg, budget, rng);
    AlgElem lhs = ham_bracket(s, u, elem_mul(v, w));
    AlgElem rhs = elem_add(elem_mul(ham_bracket(s, u, v), w),
                           elem_mul(v, ham_bracket(s, u, w)));
    CHECK(elem_eq(lhs, rhs));
    // w = 1 degenerates to the bracket itself
    CHECK(elem_eq(ham_bracket(s, u, elem_mul(v, elem_one(s.alg))),
                  ham_bracket(s, u, v)));
  }
}

TEST_CASE("contact validation") {
  ContactSpec c = contact_classical(1);
  CHECK(contact_validate(c).empty());

  ContactSpec tw = contact_twisted();
  CHECK(contact_validate(tw).empty());

  // Forced sigma_1 shape: overriding it trips the first trichotomy case.
  std::vector<RatVec> wrong = {vec_zero(3)};
  ContactSpec bad = contact_spec(1, tw.gamma0, tw.gamma1,
                                 {JFlag::Nat, JFlag::Zero, JFlag::Nat}, rat(-1),
                                 wrong);
  CHECK(has_code(contact_validate(bad), "4.37"));

  // A coordinate with trivial projection must keep J = N.
  ContactSpec bad2 = contact_spec(1, tw.gamma0, tw.gamma1,
                                  {JFlag::Nat, JFlag::Zero, JFlag::Zero}, rat(-1));
  CHECK(has_code(contact_validate(bad2), "4.28"));
}

TEST_CASE("contact bracket values in the classical case") {
  ContactSpec c = contact_classical(1);
  SpecPtr a = c.alg;
  AlgElem t0 = t_gen(a, 1), t1 = t_gen(a, 2), t2 = t_gen(a, 3);
  CHECK(elem_eq(contact_bracket(c, t0, t1), t1));
  CHECK(elem_is_zero(contact_bracket(c, t0, elem_mul(t1, t2))));
  CHECK(elem_is_zero(contact_bracket(c, t0, t0)));
  // the symplectic pair
  CHECK(elem_eq(contact_bracket(c, t1, t2), elem_one(a)));
}

TEST_CASE("contact axioms on both data sets") {
  Budget budget;
  budget.max_terms = 3;
  for (ContactSpec c : {contact_classical(1), contact_twisted()}) {
    REQUIRE(contact_validate(c).empty());
    for (int t = 0; t < 15; t++) {
      Rng rng = Rng::split(83, t);
      AlgElem u = random_elem(c.alg, budget, rng);
      AlgElem v = random_elem(c.alg, budget, rng);
      AlgElem w = random_elem(c.alg, budget, rng);
      CHECK(elem_is_zero(elem_add(contact_bracket(c, u, v), contact_bracket(c, v, u))));
      AlgElem jac = elem_add(
          elem_add(contact_bracket(c, contact_bracket(c, u, v), w),
                   contact_bracket(c, contact_bracket(c, v, w), u)),
          contact_bracket(c, contact_bracket(c, w, u), v));
      CHECK(elem_is_zero(jac));
    }
  }
}
