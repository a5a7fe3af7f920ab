#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "opsucc/successor.hpp"

namespace opsucc {

namespace catdsl {

inline TreeSum lf(int i) { return TreeSum(Tree::leaf(i)); }

// Bilinear graft without canonicalization, for nonsymmetric relations.
inline TreeSum ns_node(const std::string& g, const TreeSum& a, const TreeSum& b) {
  TreeSum out;
  for (const auto& [lt, lc] : a.terms())
    for (const auto& [rt, rc] : b.terms()) out.add(Tree::node(g, lt, rt), lc * rc);
  return out;
}

inline void free_pair(Presentation& p, const std::string& g) {
  p.generators.push_back(g);
  p.generators.push_back(g + "'");
  p.action.set(g, GeneratorSum(g + "'"));
  p.action.set(g + "'", GeneratorSum(g));
}

inline void symmetric_gen(Presentation& p, const std::string& g) {
  p.generators.push_back(g);
  p.action.set(g, GeneratorSum(g));
}

inline void skew_gen(Presentation& p, const std::string& g) {
  p.generators.push_back(g);
  p.action.set(g, GeneratorSum(g, Rational(-1)));
}

}  // namespace catdsl

namespace catalog_detail {

using catdsl::lf;
using catdsl::ns_node;

inline Presentation make_comm() {
  Presentation p;
  p.name = "Comm";
  catdsl::symmetric_gen(p, "m");
  auto M = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("m", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {M(M(x, y), z) - M(x, M(y, z))};
  return p;
}

// Reg(Ass_ns): the regular-representation generators m, m' of the v-table.
inline Presentation make_ass() {
  Presentation p;
  p.name = "Ass";
  catdsl::free_pair(p, "m");
  auto M = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("m", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {M(M(x, y), z) - M(x, M(y, z))};
  return p;
}

inline Presentation make_lie() {
  Presentation p;
  p.name = "Lie";
  catdsl::skew_gen(p, "b");
  auto B = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("b", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  // v1 + v5 + v9
  p.relations = {B(B(x, y), z) + B(B(z, x), y) + B(B(y, z), x)};
  return p;
}

inline Presentation make_ass_ns() {
  Presentation p;
  p.name = "Ass_ns";
  p.mode = OperadMode::Nonsymmetric;
  p.generators = {"m"};
  auto M = [](const TreeSum& a, const TreeSum& b) { return ns_node("m", a, b); };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {M(M(x, y), z) - M(x, M(y, z))};
  return p;
}

inline Presentation make_dend() {
  Presentation p;
  p.name = "Dend";
  p.mode = OperadMode::Nonsymmetric;
  p.generators = {"l", "r"};
  auto L = [](const TreeSum& a, const TreeSum& b) { return ns_node("l", a, b); };
  auto R = [](const TreeSum& a, const TreeSum& b) { return ns_node("r", a, b); };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      L(L(x, y), z) - L(x, L(y, z) + R(y, z)),
      L(R(x, y), z) - R(x, L(y, z)),
      R(L(x, y) + R(x, y), z) - R(x, R(y, z)),
  };
  p.maps["Su(Ass_ns)"] = {{"l", GeneratorSum("m<")}, {"r", GeneratorSum("m>")}};
  return p;
}

inline Presentation make_zinbiel() {
  Presentation p;
  p.name = "Zinbiel";
  catdsl::free_pair(p, "z");
  auto Z = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("z", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {Z(Z(x, y) + Z(y, x), z) - Z(x, Z(y, z))};
  p.maps["Su(Comm)"] = {{"z", GeneratorSum("m>")}, {"z'", GeneratorSum("m<")}};
  return p;
}

inline Presentation make_prelie_r() {
  Presentation p;
  p.name = "PreLie_R";
  catdsl::free_pair(p, "p");
  auto P = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("p", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {P(P(x, y), z) - P(x, P(y, z)) - P(P(x, z), y) + P(x, P(z, y))};
  p.maps["Su(Lie)"] = {{"p", GeneratorSum("b<")},
                       {"p'", GeneratorSum("b>", Rational(-1))}};
  return p;
}

inline Presentation make_prelie_l() {
  Presentation p;
  p.name = "PreLie_L";
  catdsl::free_pair(p, "p");
  auto P = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("p", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {P(P(x, y), z) - P(x, P(y, z)) - P(P(y, x), z) + P(y, P(x, z))};
  return p;
}

inline Presentation make_poisson() {
  Presentation p;
  p.name = "Poisson";
  catdsl::skew_gen(p, "b");
  catdsl::symmetric_gen(p, "c");
  auto B = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("b", a, b, p.action);
  };
  auto C = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("c", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      B(B(x, y), z) + B(B(z, x), y) + B(B(y, z), x),
      C(C(x, y), z) - C(x, C(y, z)),
      B(x, C(y, z)) - C(B(x, y), z) - C(y, B(x, z)),
  };
  return p;
}

inline Presentation make_prepoisson() {
  Presentation p;
  p.name = "PrePoisson";
  catdsl::free_pair(p, "s");  // left Zinbiel product *
  catdsl::free_pair(p, "p");  // left pre-Lie product .
  auto S = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("s", a, b, p.action);
  };
  auto P = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("p", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      S(S(x, y) + S(y, x), z) - S(x, S(y, z)),
      P(P(x, y), z) - P(x, P(y, z)) - P(P(y, x), z) + P(y, P(x, z)),
      S(P(x, y) - P(y, x), z) - P(x, S(y, z)) + S(y, P(x, z)),
      P(S(x, y) + S(y, x), z) - S(x, P(y, z)) - S(y, P(x, z)),
  };
  p.maps["Su(Poisson)"] = {{"s", GeneratorSum("c>")},
                           {"s'", GeneratorSum("c<")},
                           {"p", GeneratorSum("b>", Rational(-1))},
                           {"p'", GeneratorSum("b<")}};
  return p;
}

inline Presentation make_comtridend() {
  Presentation p;
  p.name = "ComTriDend";
  catdsl::free_pair(p, "l");   // the one-sided product
  catdsl::symmetric_gen(p, "d");  // the commutative associative product
  auto L = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("l", a, b, p.action);
  };
  auto D = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("d", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      L(L(x, y), z) - L(x, L(y, z) + L(z, y) + D(y, z)),
      L(D(x, y), z) - D(x, L(y, z)),
      D(D(x, y), z) - D(x, D(y, z)),
  };
  p.maps["TSu(Comm)"] = {{"l", GeneratorSum("m<")},
                         {"l'", GeneratorSum("m>")},
                         {"d", GeneratorSum("m.")}};
  return p;
}

inline Presentation make_postlie() {
  Presentation p;
  p.name = "PostLie";
  catdsl::free_pair(p, "o");
  catdsl::skew_gen(p, "b");
  auto O = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("o", a, b, p.action);
  };
  auto B = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("b", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      B(B(x, y), z) + B(B(z, x), y) + B(B(y, z), x),
      O(O(x, y), z) - O(x, O(y, z)) - O(O(x, z), y) + O(x, O(z, y)) -
          O(x, B(y, z)),
      O(B(x, y), z) - B(O(x, z), y) - B(x, O(y, z)),
  };
  p.maps["TSu(Lie)"] = {{"o", GeneratorSum("b<")},
                        {"o'", GeneratorSum("b>", Rational(-1))},
                        {"b", GeneratorSum("b.")}};
  return p;
}

inline Presentation make_jordan() {
  Presentation p;
  p.name = "Jordan";
  catdsl::symmetric_gen(p, "j");
  auto J = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("j", a, b, p.action);
  };
  // variables x, y, u, z in order of first appearance
  TreeSum x = lf(1), y = lf(2), u = lf(3), z = lf(4);
  p.relations = {J(J(J(x, y), u), z) + J(J(J(y, z), u), x) + J(J(J(z, x), u), y) -
                 J(J(x, y), J(u, z)) - J(J(y, z), J(u, x)) -
                 J(J(z, x), J(u, y))};
  return p;
}

inline Presentation make_prejordan() {
  Presentation p;
  p.name = "PreJordan";
  catdsl::free_pair(p, "q");
  auto Q = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("q", a, b, p.action);
  };
  auto OD = [&](const TreeSum& a, const TreeSum& b) { return Q(a, b) + Q(b, a); };
  TreeSum x = lf(1), y = lf(2), z = lf(3), u = lf(4);
  TreeSum rhs = Q(z, Q(OD(x, y), u)) + Q(x, Q(OD(y, z), u)) + Q(y, Q(OD(z, x), u));
  p.relations = {
      Q(OD(x, y), Q(z, u)) + Q(OD(y, z), Q(x, u)) + Q(OD(z, x), Q(y, u)) - rhs,
      Q(x, Q(y, Q(z, u))) + Q(z, Q(y, Q(x, u))) + Q(OD(OD(x, z), y), u) - rhs,
  };
  p.maps["Su(Jordan)"] = {{"q", GeneratorSum("j>")}, {"q'", GeneratorSum("j<")}};
  return p;
}

// The displayed presentation of the double bisuccessor of Jordan.
inline Presentation make_su2jordan() {
  Presentation p;
  p.name = "Su2Jordan";
  catdsl::free_pair(p, "l");
  catdsl::free_pair(p, "r");
  auto L = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("l", a, b, p.action);
  };
  auto R = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("r", a, b, p.action);
  };
  auto DOT = [&](const TreeSum& a, const TreeSum& b) { return L(a, b) + R(a, b); };
  auto CIR = [&](const TreeSum& a, const TreeSum& b) {
    return DOT(a, b) + DOT(b, a);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3), u = lf(4);
  p.relations = {
      L(L(x, y) + R(y, x), DOT(z, u)) + R(CIR(y, z), L(x, u)) +
          L(R(z, x) + L(x, z), DOT(y, u)) - R(z, L(L(x, y) + R(y, x), u)) -
          L(x, DOT(CIR(y, z), u)) - R(y, L(R(z, x) + L(x, z), u)),
      R(CIR(x, y), R(z, u)) + R(CIR(y, z), R(x, u)) + R(CIR(z, x), R(y, u)) -
          R(z, R(CIR(x, y), u)) - R(x, R(CIR(y, z), u)) - R(y, R(CIR(z, x), u)),
      L(x, DOT(y, DOT(z, u))) + R(z, R(y, L(x, u))) +
          L(L(L(x, z) + R(z, x), y) + R(y, L(x, z) + R(z, x)), u) -
          R(z, L(L(x, y) + R(y, x), u)) - L(x, DOT(CIR(y, z), u)) -
          R(y, L(R(z, x) + L(x, z), u)),
      R(x, L(y, DOT(z, u))) + R(z, L(y, DOT(x, u))) +
          L(R(CIR(x, z), y) + L(y, CIR(x, z)), u) -
          R(z, L(R(x, y) + L(y, x), u)) - R(x, L(L(y, z) + R(z, y), u)) -
          L(y, DOT(CIR(z, x), u)),
      R(x, R(y, L(z, u))) + L(z, DOT(y, DOT(x, u))) +
          L(L(R(x, z) + L(z, x), y) + R(y, R(x, z) + L(z, x)), u) -
          L(z, DOT(CIR(x, y), u)) - R(x, L(R(y, z) + L(z, y), u)) -
          R(y, L(L(z, x) + R(x, z), u)),
      R(x, R(y, R(z, u))) + R(z, R(y, R(x, u))) + R(CIR(CIR(x, z), y), u) -
          R(z, R(CIR(x, y), u)) - R(x, R(CIR(y, z), u)) - R(y, R(CIR(z, x), u)),
  };
  p.maps["Su(Su(Jordan))"] = {{"l", GeneratorSum("j><")},
                              {"l'", GeneratorSum("j<>")},
                              {"r", GeneratorSum("j>>")},
                              {"r'", GeneratorSum("j<<")}};
  return p;
}

// The displayed presentation of the trisuccessor of Jordan.
inline Presentation make_tsujordan() {
  Presentation p;
  p.name = "TSuJordan";
  catdsl::free_pair(p, "l");
  catdsl::symmetric_gen(p, "d");
  auto L = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("l", a, b, p.action);
  };
  auto D = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("d", a, b, p.action);
  };
  auto ST = [&](const TreeSum& a, const TreeSum& b) {
    return L(a, b) + L(b, a) + D(a, b);
  };
  // variables x, y, u, z in order of first appearance
  TreeSum x = lf(1), y = lf(2), u = lf(3), z = lf(4);
  p.relations = {
      L(L(L(x, y), u), z) + L(x, ST(ST(y, z), u)) + L(L(L(x, z), u), y) -
          L(L(x, y), ST(u, z)) - L(L(x, u), ST(y, z)) - L(L(x, z), ST(u, y)),
      // middle right-hand monomial reads (u<x)<(y*z); a (u<z) variant would
      // repeat z and drop x, breaking local homogeneity
      L(L(u, ST(x, y)), z) + L(L(u, ST(y, z)), x) + L(L(u, ST(z, x)), y) -
          L(L(u, z), ST(x, y)) - L(L(u, x), ST(y, z)) - L(L(u, y), ST(z, x)),
      L(L(D(x, y), u), z) + D(L(L(y, z), u), x) + D(L(L(x, z), u), y) -
          L(D(x, y), ST(u, z)) - D(L(y, z), L(x, u)) - D(L(x, z), L(y, u)),
      L(D(L(x, y), u), z) + D(L(u, ST(y, z)), x) + L(D(L(x, z), u), y) -
          D(L(x, y), L(u, z)) - L(D(u, x), ST(y, z)) - D(L(x, z), L(u, y)),
      D(L(D(x, y), u), z) + D(L(D(y, z), u), x) + D(L(D(z, x), u), y) -
          D(D(x, y), L(z, u)) - D(D(y, z), L(x, u)) - D(D(z, x), L(y, u)),
      L(D(D(x, y), u), z) + D(D(L(y, z), u), x) + D(D(L(x, z), u), y) -
          D(D(x, y), L(u, z)) - D(L(y, z), D(u, x)) - D(L(x, z), D(u, y)),
      D(D(D(x, y), u), z) + D(D(D(y, z), u), x) + D(D(D(z, x), u), y) -
          D(D(x, y), D(u, z)) - D(D(y, z), D(u, x)) - D(D(z, x), D(u, y)),
  };
  p.maps["TSu(Jordan)"] = {{"l", GeneratorSum("j<")},
                           {"l'", GeneratorSum("j>")},
                           {"d", GeneratorSum("j.")}};
  return p;
}

inline Presentation make_ldend() {
  Presentation p;
  p.name = "LDend";
  catdsl::free_pair(p, "l");
  catdsl::free_pair(p, "r");
  auto L = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("l", a, b, p.action);
  };
  auto R = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("r", a, b, p.action);
  };
  auto DOT = [&](const TreeSum& a, const TreeSum& b) { return L(a, b) + R(a, b); };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      L(L(x, y), z) + R(y, L(x, z)) - L(x, DOT(y, z)) - L(R(y, x), z),
      R(DOT(x, y), z) + R(y, R(x, z)) - R(x, R(y, z)) - R(DOT(y, x), z),
  };
  p.maps["Su(PreLie_L)"] = {{"l", GeneratorSum("p<")},
                            {"l'", GeneratorSum("p'>")},
                            {"r", GeneratorSum("p>")},
                            {"r'", GeneratorSum("p'<")}};
  return p;
}

inline Presentation make_lquad() {
  Presentation p;
  p.name = "LQuad";
  catdsl::free_pair(p, "nw");
  catdsl::free_pair(p, "ne");
  catdsl::free_pair(p, "sw");
  catdsl::free_pair(p, "se");
  auto NW = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("nw", a, b, p.action);
  };
  auto NE = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("ne", a, b, p.action);
  };
  auto SW = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("sw", a, b, p.action);
  };
  auto SE = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("se", a, b, p.action);
  };
  auto ALL = [&](const TreeSum& a, const TreeSum& b) {
    return NE(a, b) + NW(a, b) + SW(a, b) + SE(a, b);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      SE(x, NW(y, z)) - NW(SE(x, y), z) - NW(y, ALL(x, z)) + NW(NW(y, x), z),
      SE(x, NE(y, z)) - NE(SE(x, y) + SW(x, y), z) - NE(y, SE(x, z) + NE(x, z)) +
          NE(NE(y, x) + NW(y, x), z),
      SE(x, SW(y, z)) - SW(SE(x, y) + NE(x, y), z) - SW(y, SE(x, z) + SW(x, z)) +
          SW(SW(y, x) + NW(y, x), z),
      NE(x, SW(y, z) + NW(y, z)) - NW(NE(x, y), z) - SW(y, NE(x, z) + NW(x, z)) +
          NW(SW(y, x), z),
      SE(x, SE(y, z)) - SE(ALL(x, y), z) - SE(y, SE(x, z)) + SE(ALL(y, x), z),
  };
  p.maps["Su(LDend)"] = {{"nw", GeneratorSum("l<")},  {"nw'", GeneratorSum("l'>")},
                         {"ne", GeneratorSum("l>")},  {"ne'", GeneratorSum("l'<")},
                         {"sw", GeneratorSum("r<")},  {"sw'", GeneratorSum("r'>")},
                         {"se", GeneratorSum("r>")},  {"se'", GeneratorSum("r'<")}};
  return p;
}

inline Presentation make_alter() {
  Presentation p;
  p.name = "Alter";
  catdsl::free_pair(p, "a");
  auto A = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("a", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      A(A(x, y), z) + A(A(y, x), z) - A(x, A(y, z)) - A(y, A(x, z)),
      A(A(x, y), z) + A(A(x, z), y) - A(x, A(y, z)) - A(x, A(z, y)),
  };
  return p;
}

inline Presentation make_prealter() {
  Presentation p;
  p.name = "PreAlter";
  catdsl::free_pair(p, "l");
  catdsl::free_pair(p, "r");
  auto L = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("l", a, b, p.action);
  };
  auto R = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("r", a, b, p.action);
  };
  auto C = [&](const TreeSum& a, const TreeSum& b) { return L(a, b) + R(a, b); };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      R(C(x, y) + C(y, x), z) - R(x, R(y, z)) - R(y, R(x, z)),
      L(R(x, z), y) + L(L(z, x), y) - R(x, L(z, y)) - L(z, C(x, y)),
      R(C(y, x), z) + L(R(y, z), x) - R(y, R(x, z)) - R(y, L(z, x)),
      L(L(z, x), y) + L(L(z, y), x) - L(z, C(x, y) + C(y, x)),
  };
  p.maps["Su(Alter)"] = {{"l", GeneratorSum("a<")},
                         {"l'", GeneratorSum("a'>")},
                         {"r", GeneratorSum("a>")},
                         {"r'", GeneratorSum("a'<")}};
  return p;
}

inline Presentation make_tsualter() {
  Presentation p;
  p.name = "TSuAlter";
  catdsl::free_pair(p, "l");
  catdsl::free_pair(p, "r");
  catdsl::free_pair(p, "d");
  auto L = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("l", a, b, p.action);
  };
  auto R = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("r", a, b, p.action);
  };
  auto D = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("d", a, b, p.action);
  };
  auto S = [&](const TreeSum& a, const TreeSum& b) {
    return L(a, b) + R(a, b) + D(a, b);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      R(S(x, y) + S(y, x), z) - R(x, R(y, z)) - R(y, R(x, z)),
      L(R(x, z), y) + L(L(z, x), y) - R(x, L(z, y)) - L(z, S(x, y)),
      R(S(y, x), z) + L(R(y, z), x) - R(y, R(x, z)) - R(y, L(z, x)),
      L(L(z, x), y) + L(L(z, y), x) - L(z, S(x, y) + S(y, x)),
      L(D(x, y), z) + L(D(y, x), z) - D(x, L(y, z)) - D(y, L(x, z)),
      D(L(x, y), z) + D(R(y, x), z) - D(x, R(y, z)) - R(y, D(x, z)),
      L(D(x, y), z) + D(L(x, z), y) - D(x, L(y, z)) - D(x, R(z, y)),
      D(R(x, y), z) + D(R(x, z), y) - R(x, D(y, z)) - R(x, D(z, y)),
      D(D(x, y), z) + D(D(y, x), z) - D(x, D(y, z)) - D(y, D(x, z)),
      D(D(x, y), z) + D(D(x, z), y) - D(x, D(y, z)) - D(x, D(z, y)),
  };
  p.maps["TSu(Alter)"] = {{"l", GeneratorSum("a<")}, {"l'", GeneratorSum("a'>")},
                          {"r", GeneratorSum("a>")}, {"r'", GeneratorSum("a'<")},
                          {"d", GeneratorSum("a.")}, {"d'", GeneratorSum("a'.")}};
  return p;
}

inline Presentation make_leibniz() {
  Presentation p;
  p.name = "Leibniz";
  catdsl::free_pair(p, "lb");
  auto B = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("lb", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {B(B(x, y), z) - B(B(x, z), y) - B(x, B(y, z))};
  return p;
}

inline Presentation make_suleibniz() {
  Presentation p;
  p.name = "SuLeibniz";
  catdsl::free_pair(p, "l");
  catdsl::free_pair(p, "r");
  auto L = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("l", a, b, p.action);
  };
  auto R = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("r", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      L(L(x, y), z) - L(L(x, z), y) - L(x, R(y, z) + L(y, z)),
      L(R(x, y), z) - R(R(x, z) + L(x, z), y) - R(x, L(y, z)),
      R(R(x, y) + L(x, y), z) - L(R(x, z), y) - R(x, R(y, z)),
  };
  p.maps["Su(Leibniz)"] = {{"l", GeneratorSum("lb<")},
                           {"l'", GeneratorSum("lb'>")},
                           {"r", GeneratorSum("lb>")},
                           {"r'", GeneratorSum("lb'<")}};
  return p;
}

inline Presentation make_tsuleibniz() {
  Presentation p;
  p.name = "TSuLeibniz";
  catdsl::free_pair(p, "l");
  catdsl::free_pair(p, "r");
  catdsl::free_pair(p, "d");
  auto L = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("l", a, b, p.action);
  };
  auto R = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("r", a, b, p.action);
  };
  auto D = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("d", a, b, p.action);
  };
  auto S = [&](const TreeSum& a, const TreeSum& b) {
    return L(a, b) + R(a, b) + D(a, b);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      L(L(x, y), z) - L(L(x, z), y) - L(x, S(y, z)),
      L(R(x, y), z) - R(S(x, z), y) - R(x, L(y, z)),
      R(S(x, y), z) - L(R(x, z), y) - R(x, R(y, z)),
      L(D(x, y), z) - D(L(x, z), y) - D(x, L(y, z)),
      D(L(x, y), z) - L(D(x, z), y) - D(x, R(y, z)),
      D(R(x, y), z) - D(R(x, z), y) - R(x, D(y, z)),
      D(D(x, y), z) - D(D(x, z), y) - D(x, D(y, z)),
  };
  p.maps["TSu(Leibniz)"] = {{"l", GeneratorSum("lb<")}, {"l'", GeneratorSum("lb'>")},
                            {"r", GeneratorSum("lb>")}, {"r'", GeneratorSum("lb'<")},
                            {"d", GeneratorSum("lb.")}, {"d'", GeneratorSum("lb'.")}};
  return p;
}

// The displayed trisuccessor of the right pre-Lie operad.
inline Presentation make_tsuprelie() {
  Presentation p;
  p.name = "TSuPreLie";
  catdsl::free_pair(p, "l");
  catdsl::free_pair(p, "r");
  catdsl::free_pair(p, "d");
  auto L = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("l", a, b, p.action);
  };
  auto R = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("r", a, b, p.action);
  };
  auto D = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("d", a, b, p.action);
  };
  auto S = [&](const TreeSum& a, const TreeSum& b) {
    return L(a, b) + R(a, b) + D(a, b);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      L(L(x, y), z) - L(x, S(y, z)) - L(L(x, z), y) + L(x, S(z, y)),
      L(R(x, y), z) - R(x, L(y, z)) - R(S(x, z), y) + R(x, R(z, y)),
      L(D(x, y), z) - D(x, L(y, z)) - D(L(x, z), y) + D(x, R(z, y)),
      D(R(x, y), z) - R(x, D(y, z)) - D(R(x, z), y) + R(x, D(z, y)),
      D(D(x, y), z) - D(x, D(y, z)) - D(D(x, z), y) + D(x, D(z, y)),
  };
  p.maps["TSu(PreLie_R)"] = {{"l", GeneratorSum("p<")}, {"l'", GeneratorSum("p'>")},
                             {"r", GeneratorSum("p>")}, {"r'", GeneratorSum("p'<")},
                             {"d", GeneratorSum("p.")}, {"d'", GeneratorSum("p'.")}};
  // the same operad arises as the bisuccessor of PostLie
  p.maps["Su(PostLie)"] = {{"l", GeneratorSum("o<")},
                           {"l'", GeneratorSum("o'>")},
                           {"r", GeneratorSum("o'<", Rational(-1))},
                           {"r'", GeneratorSum("o>", Rational(-1))},
                           {"d", GeneratorSum("b<")},
                           {"d'", GeneratorSum("b>", Rational(-1))}};
  return p;
}

inline Presentation make_postpoisson() {
  Presentation p;
  p.name = "PostPoisson";
  catdsl::skew_gen(p, "b");       // the bracket
  catdsl::free_pair(p, "o");      // the post-Lie product (left flavor)
  catdsl::symmetric_gen(p, "c");  // the commutative tridendriform dot
  catdsl::free_pair(p, "s");      // the one-sided tridendriform product
  auto B = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("b", a, b, p.action);
  };
  auto O = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("o", a, b, p.action);
  };
  auto C = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("c", a, b, p.action);
  };
  auto S = [&](const TreeSum& a, const TreeSum& b) {
    return canonical_node("s", a, b, p.action);
  };
  TreeSum x = lf(1), y = lf(2), z = lf(3);
  p.relations = {
      // left post-Lie for (b, o)
      B(B(x, y), z) + B(B(z, x), y) + B(B(y, z), x),
      O(O(x, y), z) - O(x, O(y, z)) - O(O(y, x), z) + O(y, O(x, z)) +
          O(B(x, y), z),
      O(x, B(y, z)) - B(O(x, y), z) - B(y, O(x, z)),
      // commutative tridendriform for (c, s), one-sided product on the left
      S(z, S(y, x)) - S(S(z, y), x) - S(S(y, z), x) - S(C(y, z), x),
      S(z, C(x, y)) - C(x, S(z, y)),
      C(C(x, y), z) - C(x, C(y, z)),
      // the compatibilities
      B(x, C(y, z)) - C(B(x, y), z) - C(y, B(x, z)),
      B(x, S(z, y)) - S(z, B(x, y)) + C(y, O(z, x)),
      O(x, C(y, z)) - C(O(x, y), z) - C(y, O(x, z)),
      O(S(y, z) + S(z, y) + C(y, z), x) - S(z, O(y, x)) - S(y, O(z, x)),
      O(x, S(z, y)) - S(z, O(x, y)) - S(O(x, z) - O(z, x) + B(x, z), y),
  };
  p.maps["TSu(Poisson)"] = {{"b", GeneratorSum("b.")},
                            {"o", GeneratorSum("b>")},
                            {"o'", GeneratorSum("b<", Rational(-1))},
                            {"c", GeneratorSum("c.")},
                            {"s", GeneratorSum("c>")},
                            {"s'", GeneratorSum("c<")}};
  return p;
}

}  // namespace catalog_detail

inline const std::map<std::string, Presentation (*)()>& catalog_builders() {
  static const std::map<std::string, Presentation (*)()> builders = {
      {"Comm", catalog_detail::make_comm},
      {"Ass", catalog_detail::make_ass},
      {"Lie", catalog_detail::make_lie},
      {"Ass_ns", catalog_detail::make_ass_ns},
      {"Dend", catalog_detail::make_dend},
      {"Zinbiel", catalog_detail::make_zinbiel},
      {"PreLie_R", catalog_detail::make_prelie_r},
      {"PreLie_L", catalog_detail::make_prelie_l},
      {"Poisson", catalog_detail::make_poisson},
      {"PrePoisson", catalog_detail::make_prepoisson},
      {"ComTriDend", catalog_detail::make_comtridend},
      {"PostLie", catalog_detail::make_postlie},
      {"Jordan", catalog_detail::make_jordan},
      {"PreJordan", catalog_detail::make_prejordan},
      {"Su2Jordan", catalog_detail::make_su2jordan},
      {"TSuJordan", catalog_detail::make_tsujordan},
      {"LDend", catalog_detail::make_ldend},
      {"LQuad", catalog_detail::make_lquad},
      {"Alter", catalog_detail::make_alter},
      {"PreAlter", catalog_detail::make_prealter},
      {"TSuAlter", catalog_detail::make_tsualter},
      {"Leibniz", catalog_detail::make_leibniz},
      {"SuLeibniz", catalog_detail::make_suleibniz},
      {"TSuLeibniz", catalog_detail::make_tsuleibniz},
      {"TSuPreLie", catalog_detail::make_tsuprelie},
      {"PostPoisson", catalog_detail::make_postpoisson},
  };
  return builders;
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [n, b] : catalog_builders()) out.push_back(n);
  return out;
}

inline Presentation catalog(const std::string& name) {
  auto it = catalog_builders().find(name);
  if (it == catalog_builders().end()) {
    std::string msg = "unknown catalog entry '" + name + "'; available:";
    for (const auto& n : catalog_names()) msg += " " + n;
    throw std::invalid_argument(msg);
  }
  return it->second();
}

// The 12 canonical arity-3 monomials over a regular generator pair mu, mu'.
inline Tree standard_v(int i, const std::string& mu) {
  if (i < 1 || i > 12) throw std::invalid_argument("standard_v: index 1..12");
  S2Action action;
  action.set(mu, GeneratorSum(mu + "'"));
  action.set(mu + "'", GeneratorSum(mu));
  auto W = [&](int a, int b) { return Tree::node(mu, Tree::leaf(a), Tree::leaf(b)); };
  auto T = [&](const Tree& l, int b) { return Tree::node(mu, l, Tree::leaf(b)); };
  auto U = [&](int a, const Tree& r) { return Tree::node(mu, Tree::leaf(a), r); };
  Tree raw = Tree::leaf(1);
  switch (i) {
    case 1: raw = T(W(1, 2), 3); break;   // (xy)z
    case 2: raw = U(1, W(2, 3)); break;   // x(yz)
    case 3: raw = U(1, W(3, 2)); break;   // x(zy)
    case 4: raw = T(W(1, 3), 2); break;   // (xz)y
    case 5: raw = T(W(3, 1), 2); break;   // (zx)y
    case 6: raw = U(3, W(1, 2)); break;   // z(xy)
    case 7: raw = U(3, W(2, 1)); break;   // z(yx)
    case 8: raw = T(W(3, 2), 1); break;   // (zy)x
    case 9: raw = T(W(2, 3), 1); break;   // (yz)x
    case 10: raw = U(2, W(3, 1)); break;  // y(zx)
    case 11: raw = U(2, W(1, 3)); break;  // y(xz)
    case 12: raw = T(W(2, 1), 3); break;  // (yx)z
  }
  TreeSum c = canonicalize(raw, action);
  if (c.term_count() != 1 || !(c.terms().begin()->second == Rational(1)))
    throw std::logic_error("standard_v: non-canonical expansion");
  return c.terms().begin()->first;
}

// Parses "Name", "Su(...)", "TSu(...)", "Reg(...)" into a presentation.
inline Presentation resolve_operad_expr(const std::string& expr) {
  auto strip = [](const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  std::string e = strip(expr);
  for (const char* head : {"Su", "TSu", "Reg"}) {
    std::string h = head;
    if (e.size() > h.size() + 1 && e.compare(0, h.size(), h) == 0 &&
        e[h.size()] == '(' && e.back() == ')') {
      Presentation inner =
          resolve_operad_expr(e.substr(h.size() + 1, e.size() - h.size() - 2));
      if (h == "Su") return successor_presentation(inner, SuccessorKind::Bi);
      if (h == "TSu") return successor_presentation(inner, SuccessorKind::Tri);
      return regularize(inner);
    }
  }
  return catalog(e);
}

}  // namespace opsucc
