#pragma once

#include <map>
#include <string>
#include <vector>

#include "opsucc/successor.hpp"

namespace opsucc {

// Permutation of the decoration-tuple positions of an n-fold successor.
struct DecorationPermutation {
  Perm sigma;
  SuccessorKind kind;
};

// Position i receives the decoration from position sigma^{-1}(i), so that
// phi composes covariantly: phi_s . phi_t = phi_{s t}.
inline DecoratedGenerator phi_sigma(const DecoratedGenerator& g, const Perm& sigma) {
  if (static_cast<int>(g.decorations.size()) != sigma.size())
    throw std::invalid_argument("phi_sigma: decoration tuple length mismatch");
  DecoratedGenerator out;
  out.base = g.base;
  Perm inv = sigma.inverse();
  out.decorations.resize(g.decorations.size());
  for (int i = 1; i <= sigma.size(); ++i)
    out.decorations[i - 1] = g.decorations[inv(i) - 1];
  return out;
}

inline std::string phi_sigma_id(const std::string& id, const Perm& sigma) {
  return phi_sigma(parse_decorated(id), sigma).id();
}

namespace detail {

inline GeneratorMap phi_sigma_map(const std::vector<std::string>& gens,
                                  const Perm& sigma) {
  GeneratorMap f;
  for (const auto& g : gens) f[g] = GeneratorSum(phi_sigma_id(g, sigma));
  return f;
}

}  // namespace detail

// Relation-space preservation of the decoration permutation on the n-fold
// successor: every relation's image stays in the relation S-module, and
// sigma^{-1} provides the inverse map.
inline Report verify_automorphism(const Presentation& base, SuccessorKind kind,
                                  int n, const Perm& sigma, int limit = 6) {
  Report rep;
  rep.command = "check-symmetry";
  rep.inputs["name"] = base.name;
  rep.inputs["kind"] = kind == SuccessorKind::Bi ? "bi" : "tri";
  rep.inputs["n"] = n;
  rep.inputs["perm"] = sigma.to_string();
  if (sigma.size() != n)
    throw std::invalid_argument("verify_automorphism: permutation degree != n");

  Presentation q = iterate(base, kind, n);
  GeneratorMap f = detail::phi_sigma_map(q.generators, sigma);

  bool inverse_ok = true;
  for (const auto& g : q.generators)
    if (phi_sigma_id(phi_sigma_id(g, sigma), sigma.inverse()) != g)
      inverse_ok = false;
  rep.add("sigma^{-1} inverts the generator map", inverse_ok);

  std::map<int, SpanBasis<Tree>> spans;
  for (std::size_t s = 0; s < q.relations.size(); ++s) {
    const auto& r = q.relations[s];
    int arity = relation_arity(r);
    if (!spans.count(arity))
      spans.emplace(arity, sn_closure_span(q, arity, limit));
    TreeSum image = detail::map_vertices(r, f);
    Check& c = rep.add("relation " + std::to_string(s + 1) +
                           ": image in relation span",
                       in_span(image, spans.at(arity)));
    c.arity = arity;
  }
  return rep;
}

// phi_s phi_t = phi_{s t} on every generator of the n-fold successor.
inline Report group_morphism_check(const Presentation& base, SuccessorKind kind,
                                   int n) {
  if (n > 3)
    throw std::invalid_argument("group_morphism_check: n <= 3 (resource guard)");
  Report rep;
  rep.command = "check-symmetry-group";
  rep.inputs["name"] = base.name;
  rep.inputs["kind"] = kind == SuccessorKind::Bi ? "bi" : "tri";
  rep.inputs["n"] = n;
  Presentation q = iterate(base, kind, n);
  bool ok = true;
  for (const auto& s : Perm::all(n))
    for (const auto& t : Perm::all(n))
      for (const auto& g : q.generators)
        if (phi_sigma_id(phi_sigma_id(g, t), s) != phi_sigma_id(g, s * t))
          ok = false;
  rep.add("phi_s phi_t = phi_{st} on all generators", ok);
  return rep;
}

}  // namespace opsucc
