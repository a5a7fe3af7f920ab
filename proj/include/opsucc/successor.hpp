#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "opsucc/presentation.hpp"

namespace opsucc {

enum class Decoration { Prec, Succ, Dot };
enum class SuccessorKind { Bi, Tri };

inline char decoration_suffix(Decoration d) {
  switch (d) {
    case Decoration::Prec: return '<';
    case Decoration::Succ: return '>';
    case Decoration::Dot: return '.';
  }
  throw std::logic_error("bad decoration");
}

inline Decoration swap_decoration(Decoration d) {
  switch (d) {
    case Decoration::Prec: return Decoration::Succ;
    case Decoration::Succ: return Decoration::Prec;
    case Decoration::Dot: return Decoration::Dot;
  }
  throw std::logic_error("bad decoration");
}

inline const std::vector<Decoration>& decorations_of(SuccessorKind kind) {
  static const std::vector<Decoration> bi{Decoration::Prec, Decoration::Succ};
  static const std::vector<Decoration> tri{Decoration::Prec, Decoration::Succ,
                                           Decoration::Dot};
  return kind == SuccessorKind::Bi ? bi : tri;
}

// A base generator with the tuple of decorations accumulated by iterated
// successor applications; serialized as baseId + one suffix char per level.
struct DecoratedGenerator {
  std::string base;
  std::vector<Decoration> decorations;

  std::string id() const {
    std::string out = base;
    for (Decoration d : decorations) out += decoration_suffix(d);
    return out;
  }

  bool operator==(const DecoratedGenerator&) const = default;
};

inline DecoratedGenerator parse_decorated(const std::string& id) {
  std::size_t end = id.size();
  while (end > 0 && (id[end - 1] == '<' || id[end - 1] == '>' || id[end - 1] == '.'))
    --end;
  DecoratedGenerator g;
  g.base = id.substr(0, end);
  if (g.base.empty())
    throw std::invalid_argument("generator id '" + id + "' has no base");
  for (std::size_t i = end; i < id.size(); ++i)
    g.decorations.push_back(id[i] == '<'   ? Decoration::Prec
                            : id[i] == '>' ? Decoration::Succ
                                           : Decoration::Dot);
  return g;
}

namespace detail {

// Sum over a fresh decoration appended to every vertex of t.
inline TreeSum star_expand(const Tree& t, const std::vector<Decoration>& decos) {
  if (t.is_leaf()) return TreeSum(t);
  TreeSum l = star_expand(t.left(), decos);
  TreeSum r = star_expand(t.right(), decos);
  TreeSum out;
  for (Decoration d : decos) {
    std::string g = t.gen() + decoration_suffix(d);
    for (const auto& [lt, lc] : l.terms())
      for (const auto& [rt, rc] : r.terms()) out.add(Tree::node(g, lt, rt), lc * rc);
  }
  return out;
}

// Rebuilds t decorating each vertex: a fixed decoration where `fixed` maps the
// vertex position (L/R prefix), a star sum elsewhere.
inline TreeSum relabel_with(const Tree& t,
                            const std::map<std::string, Decoration>& fixed,
                            const std::vector<Decoration>& star,
                            const std::string& pos) {
  if (t.is_leaf()) return TreeSum(t);
  TreeSum l = relabel_with(t.left(), fixed, star, pos + "L");
  TreeSum r = relabel_with(t.right(), fixed, star, pos + "R");
  TreeSum out;
  auto emit = [&](Decoration d) {
    std::string g = t.gen() + decoration_suffix(d);
    for (const auto& [lt, lc] : l.terms())
      for (const auto& [rt, rc] : r.terms()) out.add(Tree::node(g, lt, rt), lc * rc);
  };
  auto it = fixed.find(pos);
  if (it != fixed.end()) {
    emit(it->second);
  } else {
    for (Decoration d : star) emit(d);
  }
  return out;
}

}  // namespace detail

// Every vertex label replaced by its 2-term star sum (3-term for hat).
inline TreeSum tilde(const Tree& t) {
  return detail::star_expand(t, decorations_of(SuccessorKind::Bi));
}
inline TreeSum hat(const Tree& t) {
  return detail::star_expand(t, decorations_of(SuccessorKind::Tri));
}

// Path description: vertices on the root-to-x path take the turn decoration,
// all other vertices take the star expansion.
inline TreeSum bisuccessor(const Tree& t, int x) {
  std::map<std::string, Decoration> fixed;
  for (const PathStep& s : path_to_leaf(t, x))
    fixed[s.vertex] =
        s.turn == Turn::Left ? Decoration::Prec : Decoration::Succ;
  return detail::relabel_with(t, fixed, decorations_of(SuccessorKind::Bi), "");
}

// Vertices met by the root-to-J paths take Prec / Succ / Dot according to
// whether all paths turn left, all turn right, or they split.
inline TreeSum trisuccessor(const Tree& t, const std::set<int>& J) {
  if (J.empty()) throw std::invalid_argument("trisuccessor: empty leaf set J");
  std::map<std::string, std::set<Turn>> turns;
  for (int x : J)
    for (const PathStep& s : path_to_leaf(t, x)) turns[s.vertex].insert(s.turn);
  std::map<std::string, Decoration> fixed;
  for (const auto& [pos, ts] : turns)
    fixed[pos] = ts.size() == 2                  ? Decoration::Dot
                 : *ts.begin() == Turn::Left     ? Decoration::Prec
                                                 : Decoration::Succ;
  return detail::relabel_with(t, fixed, decorations_of(SuccessorKind::Tri), "");
}

// Inductive forms, used as cross-checking oracles for the two above.
inline TreeSum bisuccessor_inductive(const Tree& t, int x) {
  if (t.is_leaf()) {
    if (t.label() != x) throw std::invalid_argument("absent leaf label");
    return TreeSum(t);
  }
  auto [l, g, r] = decompose(t);
  bool on_left = l.has_leaf(x);
  TreeSum ls = on_left ? bisuccessor_inductive(l, x) : tilde(l);
  TreeSum rs = on_left ? tilde(r) : bisuccessor_inductive(r, x);
  std::string g2 =
      g + decoration_suffix(on_left ? Decoration::Prec : Decoration::Succ);
  TreeSum out;
  for (const auto& [lt, lc] : ls.terms())
    for (const auto& [rt, rc] : rs.terms()) out.add(Tree::node(g2, lt, rt), lc * rc);
  return out;
}

inline TreeSum trisuccessor_inductive(const Tree& t, const std::set<int>& J) {
  if (J.empty()) throw std::invalid_argument("trisuccessor: empty leaf set J");
  for (int x : J)
    if (!t.has_leaf(x)) throw std::invalid_argument("trisuccessor: stray label");
  if (t.is_leaf()) return TreeSum(t);
  auto [l, g, r] = decompose(t);
  std::set<int> JL, JR;
  for (int x : J) (l.has_leaf(x) ? JL : JR).insert(x);
  TreeSum ls, rs;
  Decoration d;
  if (JR.empty()) {
    d = Decoration::Prec;
    ls = trisuccessor_inductive(l, JL);
    rs = hat(r);
  } else if (JL.empty()) {
    d = Decoration::Succ;
    ls = hat(l);
    rs = trisuccessor_inductive(r, JR);
  } else {
    d = Decoration::Dot;
    ls = trisuccessor_inductive(l, JL);
    rs = trisuccessor_inductive(r, JR);
  }
  std::string g2 = g + decoration_suffix(d);
  TreeSum out;
  for (const auto& [lt, lc] : ls.terms())
    for (const auto& [rt, rc] : rs.terms()) out.add(Tree::node(g2, lt, rt), lc * rc);
  return out;
}

inline TreeSum bisuccessor(const TreeSum& s, int x) {
  TreeSum out;
  for (const auto& [t, c] : s.terms()) out += c * bisuccessor(t, x);
  return out;
}

inline TreeSum trisuccessor(const TreeSum& s, const std::set<int>& J) {
  TreeSum out;
  for (const auto& [t, c] : s.terms()) out += c * trisuccessor(t, J);
  return out;
}

// Nonempty subsets of the sorted labels in binary-counter order.
inline std::vector<std::set<int>> leaf_subsets(const std::set<int>& labels) {
  std::vector<int> sorted(labels.begin(), labels.end());
  std::vector<std::set<int>> out;
  for (int mask = 1; mask < (1 << sorted.size()); ++mask) {
    std::set<int> J;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (mask >> i & 1) J.insert(sorted[i]);
    out.push_back(std::move(J));
  }
  return out;
}

inline S2Action successor_action(const std::vector<std::string>& gens,
                                 const S2Action& action, SuccessorKind kind) {
  S2Action out;
  for (const auto& g : gens)
    for (Decoration d : decorations_of(kind)) {
      GeneratorSum img;
      for (const auto& [g2, c] : action(g).terms())
        img.add(g2 + decoration_suffix(swap_decoration(d)), c);
      out.set(g + decoration_suffix(d), std::move(img));
    }
  return out;
}

inline Presentation successor_presentation(const Presentation& p,
                                           SuccessorKind kind) {
  Presentation out;
  out.name = (kind == SuccessorKind::Bi ? "Su(" : "TSu(") + p.name + ")";
  out.mode = p.mode;
  for (const auto& g : p.generators)
    for (Decoration d : decorations_of(kind))
      out.generators.push_back(g + decoration_suffix(d));
  if (p.symmetric())
    out.action = successor_action(p.generators, p.action, kind);
  for (const auto& r : p.relations) {
    relation_arity(r);  // throws on a non-homogeneous relation
    auto labels = leaf_set(r.terms().begin()->first);
    if (kind == SuccessorKind::Bi) {
      for (int x : labels) out.relations.push_back(bisuccessor(r, x));
    } else {
      for (const auto& J : leaf_subsets(labels))
        out.relations.push_back(trisuccessor(r, J));
    }
  }
  return out;
}

inline Presentation iterate(const Presentation& p, SuccessorKind kind, int n,
                            std::size_t generator_cap = 1024) {
  if (n < 1) throw std::invalid_argument("iterate: n >= 1");
  std::size_t k = kind == SuccessorKind::Bi ? 2 : 3;
  std::size_t projected = p.generators.size();
  for (int i = 0; i < n; ++i) {
    projected *= k;
    if (projected > generator_cap)
      throw std::invalid_argument("iterate: generator blow-up exceeds cap");
  }
  Presentation out = p;
  for (int i = 0; i < n; ++i) out = successor_presentation(out, kind);
  return out;
}

namespace detail {

// Vertex-wise relabeling g -> image(g), multilinear; shapes and leaves are
// untouched so canonical monomials stay canonical.
inline TreeSum map_vertices(const Tree& t,
                            const std::map<std::string, GeneratorSum>& f) {
  if (t.is_leaf()) return TreeSum(t);
  TreeSum l = map_vertices(t.left(), f);
  TreeSum r = map_vertices(t.right(), f);
  auto it = f.find(t.gen());
  if (it == f.end())
    throw std::invalid_argument("unmapped generator '" + t.gen() + "'");
  TreeSum out;
  for (const auto& [g2, c2] : it->second.terms())
    for (const auto& [lt, lc] : l.terms())
      for (const auto& [rt, rc] : r.terms())
        out.add(Tree::node(g2, lt, rt), c2 * lc * rc);
  return out;
}

inline TreeSum map_vertices(const TreeSum& s,
                            const std::map<std::string, GeneratorSum>& f) {
  TreeSum out;
  for (const auto& [t, c] : s.terms()) out += c * map_vertices(t, f);
  return out;
}

inline GeneratorMap star_map(const std::vector<std::string>& gens,
                             SuccessorKind kind) {
  GeneratorMap f;
  for (const auto& g : gens) {
    GeneratorSum img;
    for (Decoration d : decorations_of(kind)) img.add(g + decoration_suffix(d), 1);
    f[g] = img;
  }
  return f;
}

}  // namespace detail

// The map g -> (g,*) sends every relation of p into the successor relation
// S-module; the image equals the sum of the per-leaf successors exactly.
inline Report check_star_morphism(const Presentation& p, SuccessorKind kind,
                                  int limit = 6) {
  Report rep;
  rep.command = "check-star-morphism";
  rep.inputs["name"] = p.name;
  rep.inputs["kind"] = kind == SuccessorKind::Bi ? "bi" : "tri";
  Presentation q = successor_presentation(p, kind);
  GeneratorMap star = detail::star_map(p.generators, kind);
  std::map<int, SpanBasis<Tree>> spans;
  for (std::size_t s = 0; s < p.relations.size(); ++s) {
    const auto& r = p.relations[s];
    int n = relation_arity(r);
    auto labels = leaf_set(r.terms().begin()->first);
    TreeSum image = detail::map_vertices(r, star);
    TreeSum split_sum;
    if (kind == SuccessorKind::Bi) {
      for (int x : labels) split_sum += bisuccessor(r, x);
    } else {
      for (const auto& J : leaf_subsets(labels)) split_sum += trisuccessor(r, J);
    }
    bool identity_ok = image == split_sum;
    if (!spans.count(n)) spans.emplace(n, sn_closure_span(q, n, limit));
    bool member = in_span(image, spans.at(n));
    Check& c = rep.add("relation " + std::to_string(s + 1) + ": star image",
                       identity_ok && member,
                       identity_ok ? "" : "image differs from the split sum");
    c.arity = n;
  }
  return rep;
}

// The map g -> (g,.) into the trisuccessor; the image of a relation equals
// its trisuccessor with respect to the full leaf set.
inline Report check_dot_morphism(const Presentation& p, int limit = 6) {
  Report rep;
  rep.command = "check-dot-morphism";
  rep.inputs["name"] = p.name;
  Presentation q = successor_presentation(p, SuccessorKind::Tri);
  GeneratorMap dot;
  for (const auto& g : p.generators)
    dot[g] = GeneratorSum(g + decoration_suffix(Decoration::Dot));
  std::map<int, SpanBasis<Tree>> spans;
  for (std::size_t s = 0; s < p.relations.size(); ++s) {
    const auto& r = p.relations[s];
    int n = relation_arity(r);
    auto labels = leaf_set(r.terms().begin()->first);
    TreeSum image = detail::map_vertices(r, dot);
    bool identity_ok = image == trisuccessor(r, labels);
    if (!spans.count(n)) spans.emplace(n, sn_closure_span(q, n, limit));
    bool member = in_span(image, spans.at(n));
    Check& c = rep.add("relation " + std::to_string(s + 1) + ": dot image",
                       identity_ok && member,
                       identity_ok ? "" : "image differs from the full-set trisuccessor");
    c.arity = n;
  }
  return rep;
}

// The trisuccessor-to-bisuccessor map (g,.) -> 0: singleton trisuccessors fall
// onto bisuccessors (per monomial) and larger J are killed outright.
inline Report check_su_tsu_bridges(const Presentation& p) {
  Report rep;
  rep.command = "check-su-tsu-bridges";
  rep.inputs["name"] = p.name;
  GeneratorMap kill;
  for (const auto& g : p.generators) {
    kill[g + "<"] = GeneratorSum(g + "<");
    kill[g + ">"] = GeneratorSum(g + ">");
    kill[g + "."] = GeneratorSum();  // zero
  }
  for (std::size_t s = 0; s < p.relations.size(); ++s) {
    const auto& r = p.relations[s];
    auto labels = leaf_set(r.terms().begin()->first);
    std::string tag = "relation " + std::to_string(s + 1);
    bool singles = true, larger = true, monomial = true;
    for (int x : labels) {
      if (!(detail::map_vertices(trisuccessor(r, {x}), kill) == bisuccessor(r, x)))
        singles = false;
      for (const auto& [t, c] : r.terms())
        if (!(detail::map_vertices(trisuccessor(t, {x}), kill) == bisuccessor(t, x)))
          monomial = false;
    }
    for (const auto& J : leaf_subsets(labels)) {
      if (J.size() < 2) continue;
      if (!detail::map_vertices(trisuccessor(r, J), kill).zero()) larger = false;
    }
    rep.add(tag + ": dot-killed singleton trisuccessors are bisuccessors", singles);
    rep.add(tag + ": per-monomial singleton identity", monomial);
    rep.add(tag + ": dot-killed |J|>1 trisuccessors vanish", larger);
  }
  return rep;
}

}  // namespace opsucc
