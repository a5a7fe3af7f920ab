#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "opsucc/linalg.hpp"
#include "opsucc/report.hpp"
#include "opsucc/tree.hpp"

namespace opsucc {

// Linear map between generator spaces: source id -> combination of target ids.
using GeneratorMap = std::map<std::string, GeneratorSum>;

// A binary operad given by generators and relations. The generators list is
// the k-linear basis of the generating space; the (12)-action is declared for
// every generator in symmetric mode (a free operation symbol contributes two
// ids g and g' swapped by the action).
struct Presentation {
  std::string name;
  OperadMode mode = OperadMode::Symmetric;
  std::vector<std::string> generators;
  S2Action action;
  std::vector<TreeSum> relations;
  // For catalog entries derived from a successor: maps keyed by the source
  // expression (e.g. "Su(Comm)"), mapping this entry's generators into it.
  std::map<std::string, GeneratorMap> maps;

  bool symmetric() const { return mode == OperadMode::Symmetric; }
  bool declares(const std::string& gen) const {
    return std::find(generators.begin(), generators.end(), gen) != generators.end();
  }
};

inline std::set<int> leaf_set(const Tree& t) {
  return std::set<int>(t.leaves().begin(), t.leaves().end());
}

// Arity of a relation; throws unless all monomials share one leaf set.
inline int relation_arity(const TreeSum& r) {
  if (r.zero()) throw std::invalid_argument("empty relation");
  auto first = leaf_set(r.terms().begin()->first);
  for (const auto& [t, c] : r.terms())
    if (leaf_set(t) != first)
      throw std::invalid_argument("relation is not locally homogeneous");
  return static_cast<int>(first.size());
}

inline Report validate(const Presentation& p) {
  Report rep;
  rep.command = "validate";
  rep.inputs["name"] = p.name;

  bool gens_ok = !p.generators.empty() &&
                 std::set<std::string>(p.generators.begin(), p.generators.end())
                         .size() == p.generators.size();
  rep.add("generators declared and unique", gens_ok);

  if (p.symmetric()) {
    bool total = true, closed = true;
    for (const auto& g : p.generators) {
      if (!p.action.defines(g)) { total = false; continue; }
      for (const auto& [g2, c] : p.action(g).terms())
        if (!p.declares(g2)) closed = false;
    }
    rep.add("(12)-action defined on every generator", total);
    rep.add("(12)-action lands in declared generators", closed);
    rep.add("(12)-action is an involution", total && closed && p.action.is_involution());
  } else {
    rep.add("nonsymmetric presentation carries no (12)-action", p.action.empty());
  }

  for (std::size_t s = 0; s < p.relations.size(); ++s) {
    const auto& r = p.relations[s];
    std::string tag = "relation " + std::to_string(s + 1);
    if (r.zero()) {
      rep.add(tag + ": nonzero", false);
      continue;
    }
    auto first = leaf_set(r.terms().begin()->first);
    bool homogeneous = true, labels_ok = true, canon = true, declared = true;
    for (const auto& [t, c] : r.terms()) {
      auto ls = leaf_set(t);
      if (ls != first) homogeneous = false;
      int n = t.arity();
      std::set<int> expect;
      for (int i = 1; i <= n; ++i) expect.insert(i);
      if (ls != expect) labels_ok = false;
      if (p.symmetric()) {
        if (!is_canonical(t)) canon = false;
      } else {
        std::vector<int> want(t.leaves().size());
        std::iota(want.begin(), want.end(), 1);
        if (t.leaves() != want) canon = false;
      }
      for (const auto& g : t.vertex_gens())
        if (!p.declares(g)) declared = false;
    }
    rep.add(tag + ": locally homogeneous", homogeneous);
    rep.add(tag + ": leaf labels are {1..n}", labels_ok);
    rep.add(tag + ": monomials canonical", canon);
    rep.add(tag + ": generators declared", declared);
  }
  return rep;
}

inline std::set<int> relation_arities(const Presentation& p) {
  std::set<int> out;
  for (const auto& r : p.relations) out.insert(relation_arity(r));
  return out;
}

// The S-module generated by the arity-n relations, as a span over the
// canonical monomial basis. Nonsymmetric mode skips the group closure.
inline SpanBasis<Tree> sn_closure_span(const Presentation& p, int n,
                                       int limit = 6) {
  BasisIndex<Tree> index(enumerate_basis(n, p.generators, p.mode, limit));
  SpanBasis<Tree> span(index);
  std::vector<Perm> perms;
  if (p.symmetric()) perms = Perm::all(n);
  for (const auto& r : p.relations) {
    if (relation_arity(r) != n) continue;
    if (p.symmetric()) {
      for (const auto& s : perms) span.insert(apply_perm(r, s, p.action));
    } else {
      span.insert(r);
    }
  }
  return span;
}

inline GeneratorSum map_generators(const GeneratorMap& f, const GeneratorSum& v) {
  GeneratorSum out;
  for (const auto& [g, c] : v.terms()) {
    auto it = f.find(g);
    if (it == f.end())
      throw std::invalid_argument("generator map: unmapped generator '" + g + "'");
    for (const auto& [g2, c2] : it->second.terms()) out.add(g2, c * c2);
  }
  return out;
}

inline TreeSum map_tree(const Tree& t, const GeneratorMap& f,
                        const S2Action& target_action) {
  if (t.is_leaf()) return TreeSum(t);
  TreeSum l = map_tree(t.left(), f, target_action);
  TreeSum r = map_tree(t.right(), f, target_action);
  auto it = f.find(t.gen());
  if (it == f.end())
    throw std::invalid_argument("generator map: unmapped generator '" + t.gen() + "'");
  TreeSum out;
  for (const auto& [g2, c2] : it->second.terms())
    out += c2 * canonical_node(g2, l, r, target_action);
  return out;
}

inline TreeSum map_tree_sum(const TreeSum& s, const GeneratorMap& f,
                            const S2Action& target_action) {
  TreeSum out;
  for (const auto& [t, c] : s.terms()) out += c * map_tree(t, f, target_action);
  return out;
}

// Checks map(g^(12)) = map(g)^(12) for every source generator.
inline bool equivariant(const GeneratorMap& f, const S2Action& source,
                        const S2Action& target) {
  for (const auto& [g, img] : f)
    if (!(map_generators(f, source(g)) == target.apply(img))) return false;
  return true;
}

// Every relation with vertex labels pushed through f, expanded multilinearly
// and canonicalized in the target.
inline std::vector<TreeSum> map_relations(const Presentation& p,
                                          const GeneratorMap& f,
                                          const S2Action& target_action) {
  if (p.symmetric() && !equivariant(f, p.action, target_action))
    throw std::invalid_argument("generator map is not S2-equivariant");
  std::vector<TreeSum> out;
  out.reserve(p.relations.size());
  for (const auto& r : p.relations)
    out.push_back(map_tree_sum(r, f, target_action));
  return out;
}

// Relation S-modules agree inside the same free operad after identifying
// generators along f. For quotient presentations this is operad equality.
inline Report equivalent(const Presentation& p, const Presentation& q,
                         const GeneratorMap& f, int limit = 6) {
  Report rep;
  rep.command = "equiv";
  rep.inputs["from"] = p.name;
  rep.inputs["to"] = q.name;

  if (p.mode != q.mode)
    throw std::invalid_argument("equivalent: mode mismatch");

  // f must be defined on all of p's generators and land in q's
  for (const auto& g : p.generators)
    if (!f.count(g))
      throw std::invalid_argument("equivalent: unmapped generator '" + g + "'");
  for (const auto& [g, img] : f)
    for (const auto& [g2, c] : img.terms())
      if (!q.declares(g2))
        throw std::invalid_argument("equivalent: image generator '" + g2 +
                                    "' not declared by " + q.name);

  // invertibility as a linear map between the generator spaces
  bool square = p.generators.size() == q.generators.size();
  std::vector<GeneratorSum> images;
  for (const auto& g : p.generators) images.push_back(f.at(g));
  std::vector<std::string> qgens = q.generators;
  std::sort(qgens.begin(), qgens.end());
  auto image_span = span_of(images, BasisIndex<std::string>(qgens));
  bool invertible = square && image_span.dimension() == q.generators.size();
  rep.add("generator map is invertible", invertible);
  if (!invertible) return rep;

  if (p.symmetric()) {
    bool eq = equivariant(f, p.action, q.action);
    rep.add("generator map is S2-equivariant", eq);
    if (!eq) return rep;
  }

  Presentation mapped = q;
  mapped.name = p.name + " via map";
  mapped.relations = map_relations(p, f, q.action);

  std::set<int> arities = relation_arities(p);
  for (int n : relation_arities(q)) arities.insert(n);
  for (int n : arities) {
    auto a = sn_closure_span(mapped, n, limit);
    auto b = sn_closure_span(q, n, limit);
    Check& c = rep.add("relation spans agree", span_equal(a, b));
    c.arity = n;
    c.dim_left = static_cast<long>(a.dimension());
    c.dim_right = static_cast<long>(b.dimension());
  }
  return rep;
}

// Symmetric presentation with components P_n (x) k[S_n]: the generator basis
// doubles (g and g' = g^(12)) and the relations are read with the identity
// leaf labeling; the S_n closure supplies the rest.
inline Presentation regularize(const Presentation& p) {
  if (p.symmetric())
    throw std::invalid_argument("regularize: input is already symmetric");
  Presentation out;
  out.name = "Reg(" + p.name + ")";
  out.mode = OperadMode::Symmetric;
  for (const auto& g : p.generators) {
    out.generators.push_back(g);
    out.generators.push_back(g + "'");
    out.action.set(g, GeneratorSum(g + "'"));
    out.action.set(g + "'", GeneratorSum(g));
  }
  out.relations = p.relations;  // ns monomials are already min-leaf oriented
  return out;
}

}  // namespace opsucc
