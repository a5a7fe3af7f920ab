// Acceptance suite: one pass/fail line per criterion, exact rational
// comparisons throughout (tolerance zero). Exit status 0 iff all pass.

#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "opsucc/catalog.hpp"
#include "opsucc/io.hpp"
#include "opsucc/matrix_alg.hpp"
#include "opsucc/rota_baxter.hpp"
#include "opsucc/symmetry.hpp"

using namespace opsucc;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& fn) {
  bool ok = false;
  std::string note;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    note = std::string("  [exception: ") + e.what() + "]";
  }
  std::cout << (ok ? "PASS  " : "FAIL  ") << name << note << std::endl;
  if (!ok) ++failures;
}

bool golden(const std::string& derived_name, const std::string& source_expr) {
  Presentation target = catalog(derived_name);
  Presentation computed = resolve_operad_expr(source_expr);
  Report rep = equivalent(target, computed, target.maps.at(source_expr));
  if (!rep.pass()) std::cout << rep.to_text();
  return rep.pass();
}

Tree L(int i) { return Tree::leaf(i); }

}  // namespace

int main() {
  // 1. the bisuccessor of the nonsymmetric associative operad is Dend
  criterion("01 Su(Ass_ns) = Dend (nonsymmetric, arity 3)",
            [] { return golden("Dend", "Su(Ass_ns)"); });

  // 2. the trisuccessor of Ass_ns spans dimension 7 and obeys the bridges
  criterion("02 TSu(Ass_ns): relation span dim 7 + tri-to-bi bridges", [] {
    Presentation tri = resolve_operad_expr("TSu(Ass_ns)");
    bool dim_ok = sn_closure_span(tri, 3).dimension() == 7;
    bool bridges = check_su_tsu_bridges(catalog("Ass_ns")).pass();
    return dim_ok && bridges;
  });

  // 3. the symmetric golden equivalences
  criterion("03a Su(Comm) = Zinbiel", [] { return golden("Zinbiel", "Su(Comm)"); });
  criterion("03b Su(Lie) = PreLie_R", [] { return golden("PreLie_R", "Su(Lie)"); });
  criterion("03c TSu(Lie) = PostLie", [] { return golden("PostLie", "TSu(Lie)"); });
  criterion("03d TSu(Lie): seven displayed relation lines, verbatim", [] {
    Presentation lie = catalog("Lie");
    const TreeSum& jac = lie.relations[0];
    S2Action A = successor_action(lie.generators, lie.action, SuccessorKind::Tri);
    auto P = [&](const TreeSum& a, const TreeSum& b) {
      return canonical_node("b<", a, b, A);
    };
    auto D = [&](const TreeSum& a, const TreeSum& b) {
      return canonical_node("b.", a, b, A);
    };
    TreeSum x((L(1))), y((L(2))), z((L(3)));
    std::vector<std::pair<std::set<int>, TreeSum>> lines = {
        {{1}, P(P(x, y), z) - P(P(x, z), y) - P(x, P(y, z) - P(z, y) + D(y, z))},
        {{2}, -(P(P(y, x), z)) - P(y, -(P(x, z)) + P(z, x) + D(z, x)) + P(P(y, z), x)},
        {{3}, -(P(z, -(P(y, x)) + P(x, y) + D(x, y))) + P(P(z, x), y) - P(P(z, y), x)},
        {{1, 2}, P(D(x, y), z) - D(P(x, z), y) - D(x, P(y, z))},
        // the (y.z)<x monomial carries +1 here: the -1 variant falls outside
        // the PostLie relation span
        {{2, 3}, -(D(P(y, x), z)) - D(y, P(z, x)) + P(D(y, z), x)},
        {{1, 3}, -(D(z, P(x, y))) + P(D(z, x), y) - D(P(z, y), x)},
        {{1, 2, 3}, D(D(x, y), z) + D(D(z, x), y) + D(D(y, z), x)},
    };
    for (const auto& [J, want] : lines)
      if (!(trisuccessor(jac, J) == want)) return false;
    return true;
  });
  criterion("03e TSu(Comm) = ComTriDend",
            [] { return golden("ComTriDend", "TSu(Comm)"); });
  criterion("03f Su(Poisson) = PrePoisson",
            [] { return golden("PrePoisson", "Su(Poisson)"); });
  criterion("03g TSu(Poisson) = PostPoisson",
            [] { return golden("PostPoisson", "TSu(Poisson)"); });

  // 4. the Jordan family
  criterion("04a Su(Jordan) = PreJordan (arity 4)",
            [] { return golden("PreJordan", "Su(Jordan)"); });
  criterion("04b Su^2(Jordan) matches the displayed six-relation block",
            [] { return golden("Su2Jordan", "Su(Su(Jordan))"); });
  criterion("04c TSu(Jordan) matches the displayed seven-relation block",
            [] { return golden("TSuJordan", "TSu(Jordan)"); });

  // 5. the left pre-Lie ladder
  criterion("05a Su(PreLie_L) = LDend", [] { return golden("LDend", "Su(PreLie_L)"); });
  criterion("05b Su(LDend) = LQuad", [] { return golden("LQuad", "Su(LDend)"); });

  // 6. alternative, Leibniz, and the trisuccessor of right pre-Lie
  criterion("06a Su(Alter) = PreAlter", [] { return golden("PreAlter", "Su(Alter)"); });
  criterion("06b TSu(Alter) matches the displayed ten-relation block",
            [] { return golden("TSuAlter", "TSu(Alter)"); });
  criterion("06c Su(Leibniz) matches the displayed block",
            [] { return golden("SuLeibniz", "Su(Leibniz)"); });
  criterion("06d TSu(Leibniz) matches the displayed block",
            [] { return golden("TSuLeibniz", "TSu(Leibniz)"); });
  criterion("06e TSu(PreLie_R) matches the displayed five-relation block",
            [] { return golden("TSuPreLie", "TSu(PreLie_R)"); });

  // 7. sum identities, exhaustively for <= 5 leaves over <= 2 generators
  criterion("07 sum of split successors = tilde resp. hat (<= 5 leaves)", [] {
    for (int g = 1; g <= 2; ++g) {
      std::vector<std::string> gens{"m", "n"};
      gens.resize(g);
      for (int n = 2; n <= 5; ++n)
        for (const auto& t : enumerate_basis(n, gens, OperadMode::Symmetric)) {
          TreeSum su, tsu;
          for (int x : t.leaves()) su += bisuccessor(t, x);
          for (const auto& J : leaf_subsets(leaf_set(t))) tsu += trisuccessor(t, J);
          if (!(su == tilde(t)) || !(tsu == hat(t))) return false;
        }
    }
    return true;
  });

  // 8. equivariance of both successors, exhaustively for n <= 4
  criterion("08 equivariance under the right S_n-action (n <= 4)", [] {
    S2Action base;
    base.set("m", GeneratorSum("m'"));
    base.set("m'", GeneratorSum("m"));
    std::vector<std::string> gens{"m", "m'"};
    S2Action bi = successor_action(gens, base, SuccessorKind::Bi);
    S2Action tri = successor_action(gens, base, SuccessorKind::Tri);
    for (int n = 2; n <= 4; ++n) {
      auto perms = Perm::all(n);
      for (const auto& t : enumerate_basis(n, gens, OperadMode::Symmetric))
        for (const auto& sg : perms) {
          TreeSum ts = apply_perm(TreeSum(t), sg, base);
          Perm inv = sg.inverse();
          for (int x : t.leaves())
            if (!(bisuccessor(ts, inv(x)) == apply_perm(bisuccessor(t, x), sg, bi)))
              return false;
          for (const auto& J : leaf_subsets(leaf_set(t))) {
            std::set<int> Ji;
            for (int x : J) Ji.insert(inv(x));
            if (!(trisuccessor(ts, Ji) == apply_perm(trisuccessor(t, J), sg, tri)))
              return false;
          }
        }
    }
    return true;
  });

  // 9. the inductive definition agrees with the path description
  criterion("09 inductive vs path successor agreement (<= 5 leaves)", [] {
    for (int n = 2; n <= 5; ++n)
      for (const auto& t : enumerate_basis(n, {"m", "n"}, OperadMode::Symmetric)) {
        for (int x : t.leaves())
          if (!(bisuccessor(t, x) == bisuccessor_inductive(t, x))) return false;
        for (const auto& J : leaf_subsets(leaf_set(t)))
          if (!(trisuccessor(t, J) == trisuccessor_inductive(t, J))) return false;
      }
    return true;
  });

  // 10. star and dot morphism checks across the base catalog
  criterion("10 star/dot morphisms for every catalog base operad", [] {
    for (const char* name : {"Comm", "Ass", "Lie", "Poisson", "Jordan",
                             "Leibniz", "Alter", "PreLie_R", "PreLie_L"}) {
      Presentation p = catalog(name);
      if (!check_star_morphism(p, SuccessorKind::Bi).pass()) return false;
      if (!check_star_morphism(p, SuccessorKind::Tri).pass()) return false;
      if (!check_dot_morphism(p).pass()) return false;
    }
    return true;
  });

  // 11. the successor commutes with regularization on Ass_ns (arities <= 3)
  criterion("11 Su and Reg commute on Ass_ns", [] {
    Presentation su_reg =
        successor_presentation(regularize(catalog("Ass_ns")), SuccessorKind::Bi);
    Presentation reg_su =
        regularize(successor_presentation(catalog("Ass_ns"), SuccessorKind::Bi));
    GeneratorMap f{{"m<", GeneratorSum("m<")},
                   {"m>", GeneratorSum("m>")},
                   {"m'<", GeneratorSum("m>'")},
                   {"m'>", GeneratorSum("m<'")}};
    return equivalent(su_reg, reg_su, f).pass();
  });

  // 12. successor spans do not depend on the generator basis scaling
  criterion("12 basis independence: Lie on {mu} vs {2 mu}", [] {
    Presentation lie = catalog("Lie");
    Presentation scaled = lie;
    scaled.name = "LieScaled";
    scaled.relations = {Rational(1, 4) * lie.relations[0]};
    for (SuccessorKind kind : {SuccessorKind::Bi, SuccessorKind::Tri}) {
      Presentation a = successor_presentation(lie, kind);
      Presentation b = successor_presentation(scaled, kind);
      GeneratorMap twice;
      for (const auto& g : b.generators) twice[g] = GeneratorSum(g, Rational(2));
      if (!equivalent(b, a, twice).pass()) return false;
    }
    return true;
  });

  // 13. Rota-Baxter congruences, per monomial
  criterion("13 successor-to-Rota-Baxter congruences (weights 0 and 1)", [] {
    for (const char* name : {"Ass", "Lie", "Poisson"}) {
      Report rep = verify_successor_rb(catalog(name), SuccessorKind::Bi);
      if (!rep.pass()) return false;
      for (const auto& c : rep.checks)
        if (c.detail != "level=monomial") return false;
    }
    for (const char* name : {"Ass", "Lie"}) {
      Report rep = verify_successor_rb(catalog(name), SuccessorKind::Tri);
      if (!rep.pass()) return false;
      for (const auto& c : rep.checks)
        if (c.detail != "level=monomial") return false;
    }
    return true;
  });

  // 14. rewrite strategy independence on seeded random terms
  criterion("14 RB rewriting: innermost vs outermost on 500 random terms", [] {
    std::mt19937 rng(2024);
    std::function<RBTerm(int, int*)> gen = [&](int leaves, int* label) -> RBTerm {
      auto wrap = [&](RBTerm t) {
        while (rng() % 3 == 0) t = RBTerm::P(t);
        return t;
      };
      if (leaves == 1) return wrap(RBTerm::leaf((*label)++));
      int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(leaves - 1));
      RBTerm a = gen(left, label);
      RBTerm b = gen(leaves - left, label);
      return wrap(RBTerm::op(rng() % 2 ? "w" : "v", a, b));
    };
    for (int trial = 0; trial < 500; ++trial) {
      int leaves = 1 + static_cast<int>(rng() % 5u);
      int label = 1;
      RBTerm t = gen(leaves, &label);
      for (Weight w : {Weight::Zero, Weight::One}) {
        if (!(rb_normal_form(t, w, RewriteStrategy::InnermostLeftmost) ==
              rb_normal_form(t, w, RewriteStrategy::OutermostLeftmost)))
          return false;
      }
    }
    return true;
  });

  // 15. decoration-permutation symmetries of iterated successors
  criterion("15a quadri transpose: (Ass, bi, 2, (12))", [] {
    return verify_automorphism(catalog("Ass"), SuccessorKind::Bi, 2,
                               Perm::from_cycles("(12)", 2))
        .pass();
  });
  criterion("15b ennea transpose: (Ass, tri, 2, (12)) with the 9-op table", [] {
    Perm s = Perm::from_cycles("(12)", 2);
    if (phi_sigma_id("m<.", s) != "m.<" || phi_sigma_id("m>.", s) != "m.>" ||
        phi_sigma_id("m..", s) != "m.." || phi_sigma_id("m<>", s) != "m><" ||
        phi_sigma_id("m<<", s) != "m<<" || phi_sigma_id("m>>", s) != "m>>")
      return false;
    return verify_automorphism(catalog("Ass"), SuccessorKind::Tri, 2, s).pass();
  });
  criterion("15c Jordan involution: (Jordan, bi, 2, (12))", [] {
    return verify_automorphism(catalog("Jordan"), SuccessorKind::Bi, 2,
                               Perm::from_cycles("(12)", 2))
        .pass();
  });
  criterion("15d full S_3 on (Ass, bi, 3) + group law for n <= 3", [] {
    for (const auto& s : Perm::all(3))
      if (!verify_automorphism(catalog("Ass"), SuccessorKind::Bi, 3, s).pass())
        return false;
    for (int n = 1; n <= 3; ++n)
      if (!group_morphism_check(catalog("Ass"), SuccessorKind::Bi, n).pass())
        return false;
    return true;
  });

  // 16. matrices over the 2-dim Zinbiel algebra
  criterion("16 matrices over Zinbiel: dendriform relations + transpose law", [] {
    FiniteAlgebra a = zinbiel_algebra_2d();
    if (!algebra_relation_check(a, catalog("Zinbiel"), 100, 0).pass()) return false;
    std::map<std::string, std::string> ops{{"l", "z"}, {"r", "z'"}};
    for (std::size_t size : {2u, 3u}) {
      if (!matrix_relation_check(catalog("Dend"), a, ops, size, 100, 0).pass())
        return false;
      if (!transpose_law_check(a, {{"z", "z'"}}, size, 100, 0).pass())
        return false;
    }
    return true;
  });

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
