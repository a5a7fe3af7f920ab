#include <gtest/gtest.h>

#include <random>

#include "opsucc/catalog.hpp"
#include "opsucc/io.hpp"
#include "opsucc/rota_baxter.hpp"

using namespace opsucc;

namespace {

Tree L(int i) { return Tree::leaf(i); }
Tree N(const std::string& g, const Tree& a, const Tree& b) {
  return Tree::node(g, a, b);
}
RBTerm rl(int i) { return RBTerm::leaf(i); }
RBTerm rp(const RBTerm& t) { return RBTerm::P(t); }
RBTerm ro(const std::string& g, const RBTerm& a, const RBTerm& b) {
  return RBTerm::op(g, a, b);
}

// random term with <= 5 leaves, P sprinkled on subterms
RBTerm random_rb_term(std::mt19937& rng, int leaves, int* next_label) {
  auto wrap = [&](RBTerm t) {
    while (rng() % 3 == 0) t = rp(t);
    return t;
  };
  if (leaves == 1) return wrap(rl((*next_label)++));
  int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(leaves - 1));
  RBTerm a = random_rb_term(rng, left, next_label);
  RBTerm b = random_rb_term(rng, leaves - left, next_label);
  std::string gen = rng() % 2 ? "w" : "v";
  return wrap(ro(gen, a, b));
}

}  // namespace

TEST(Embed, BiRules) {
  EXPECT_EQ(embed_bi(TreeSum(N("w<", L(1), L(2)))),
            RBSum(ro("w", rl(1), rp(rl(2)))));
  EXPECT_EQ(embed_bi(TreeSum(N("w>", L(1), L(2)))),
            RBSum(ro("w", rp(rl(1)), rl(2))));
  // nested: the bisuccessor image of w(n(x,y),z) at x
  TreeSum s = bisuccessor(N("w", N("n", L(1), L(2)), L(3)), 1);
  EXPECT_EQ(embed_bi(s), RBSum(ro("w", ro("n", rl(1), rp(rl(2))), rp(rl(3)))));
  EXPECT_THROW(embed_bi(TreeSum(N("w.", L(1), L(2)))), std::invalid_argument);
  EXPECT_THROW(embed_bi(TreeSum(N("w<<", L(1), L(2)))), std::invalid_argument);
}

TEST(Embed, TriRules) {
  EXPECT_EQ(embed_tri(TreeSum(N("w.", L(1), L(2)))), RBSum(ro("w", rl(1), rl(2))));
  RBSum h = embed_tri(hat(N("w", L(1), L(2))));
  RBSum want = RBSum(ro("w", rl(1), rp(rl(2)))) + RBSum(ro("w", rp(rl(1)), rl(2))) +
               RBSum(ro("w", rl(1), rl(2)));
  EXPECT_EQ(h, want);
  // the running 4-leaf example at J = {1,3}: P on leaves 2 and 4 only
  Tree t = N("w2", N("w1", L(1), L(2)), N("w3", L(3), L(4)));
  EXPECT_EQ(embed_tri(trisuccessor(t, {1, 3})),
            RBSum(ro("w2", ro("w1", rl(1), rp(rl(2))),
                     ro("w3", rl(3), rp(rl(4))))));
}

TEST(ComposePPowers, Patterns) {
  Tree t = N("w", L(1), L(2));
  EXPECT_TRUE(compose_P_powers(t, {1}) == ro("w", rl(1), rp(rl(2))));
  EXPECT_TRUE(compose_P_powers(t, {1, 2}) == ro("w", rl(1), rl(2)));
  EXPECT_TRUE(compose_P_powers(t, {}) == ro("w", rp(rl(1)), rp(rl(2))));
  EXPECT_THROW(compose_P_powers(t, {7}), std::invalid_argument);
}

TEST(NormalForm, RewriteRule) {
  RBTerm redex = ro("w", rp(rl(1)), rp(rl(2)));
  RBSum w0 = rb_normal_form(redex, Weight::Zero);
  EXPECT_EQ(w0, RBSum(rp(ro("w", rp(rl(1)), rl(2)))) +
                    RBSum(rp(ro("w", rl(1), rp(rl(2))))));
  RBSum w1 = rb_normal_form(redex, Weight::One);
  EXPECT_EQ(w1, w0 + RBSum(rp(ro("w", rl(1), rl(2)))));

  RBTerm fixed = ro("w", rl(1), rp(rl(2)));
  EXPECT_EQ(rb_normal_form(fixed, Weight::Zero), RBSum(fixed));
}

TEST(NormalForm, BaseCongruenceExactly) {
  // P(xi(tilde(w))) and w composed with P at both leaves share a normal form
  Tree t = N("w", L(1), L(2));
  RBSum lhs = rb_normal_form(apply_P(embed_bi(tilde(t))), Weight::Zero);
  RBSum rhs = rb_normal_form(compose_P_powers(t, {}), Weight::Zero);
  EXPECT_EQ(lhs, rhs);
  RBSum lhs1 = rb_normal_form(apply_P(embed_tri(hat(t))), Weight::One);
  RBSum rhs1 = rb_normal_form(compose_P_powers(t, {}), Weight::One);
  EXPECT_EQ(lhs1, rhs1);
}

TEST(NormalForm, TerminatesOnFullyWrappedTrees) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& t : enumerate_basis(n, {"w"}, OperadMode::Nonsymmetric)) {
      RBSum nf = rb_normal_form(compose_P_powers(t, {}), Weight::One);
      for (const auto& [term, c] : nf.terms()) EXPECT_TRUE(term.is_p());
    }
  }
}

TEST(NormalForm, StrategyIndependence) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    int leaves = 1 + static_cast<int>(rng() % 5u);
    int label = 1;
    RBTerm t = random_rb_term(rng, leaves, &label);
    for (Weight w : {Weight::Zero, Weight::One}) {
      RBSum inner = rb_normal_form(t, w, RewriteStrategy::InnermostLeftmost);
      RBSum outer = rb_normal_form(t, w, RewriteStrategy::OutermostLeftmost);
      EXPECT_EQ(inner, outer) << "trial " << trial;
    }
  }
}

TEST(NormalForm, Linearity) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int label = 1;
    RBTerm a = random_rb_term(rng, 3, &label);
    label = 1;
    RBTerm b = random_rb_term(rng, 4, &label);
    RBSum s = RBSum(a, Rational(2, 3)) + RBSum(b, Rational(-5));
    RBSum direct = rb_normal_form(s, Weight::One);
    RBSum split = Rational(2, 3) * rb_normal_form(a, Weight::One) +
                  Rational(-5) * rb_normal_form(b, Weight::One);
    EXPECT_EQ(direct, split);
  }
}

TEST(VerifySuccessorRB, CatalogFamilies) {
  for (const char* name : {"Ass", "Lie", "Poisson"}) {
    Report rep = verify_successor_rb(catalog(name), SuccessorKind::Bi);
    EXPECT_TRUE(rep.pass()) << name << "\n" << rep.to_text();
    for (const auto& c : rep.checks) EXPECT_EQ(c.detail, "level=monomial");
  }
  for (const char* name : {"Ass", "Lie"}) {
    Report rep = verify_successor_rb(catalog(name), SuccessorKind::Tri);
    EXPECT_TRUE(rep.pass()) << name << "\n" << rep.to_text();
  }
}

TEST(RBTermJson, WireFormat) {
  RBTerm t = rp(ro("mu", rl(1), rp(rl(2))));
  nlohmann::json j = rbterm_to_json(t);
  EXPECT_EQ(j.dump(), "[\"P\",[\"mu\",1,[\"P\",2]]]");
  EXPECT_TRUE(rbterm_from_json(j) == t);
  EXPECT_THROW(rbterm_from_json(nlohmann::json::parse("[\"P\",1,2]")),
               std::invalid_argument);
}

TEST(VerifySuccessorRB, NonsymmetricToo) {
  EXPECT_TRUE(verify_successor_rb(catalog("Ass_ns"), SuccessorKind::Bi).pass());
  EXPECT_TRUE(verify_successor_rb(catalog("Ass_ns"), SuccessorKind::Tri).pass());
}
