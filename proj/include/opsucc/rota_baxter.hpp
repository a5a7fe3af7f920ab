#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "opsucc/linalg.hpp"
#include "opsucc/successor.hpp"

namespace opsucc {

// Term in the free operad on the binary generators plus a unary symbol P.
class RBTerm {
  enum class Kind { Leaf, P, Op };
  struct Node {
    Kind kind;
    int label = 0;
    std::string gen;
    std::shared_ptr<const Node> a, b;
  };

 public:
  static RBTerm leaf(int label) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Leaf;
    n->label = label;
    return RBTerm(std::move(n));
  }
  static RBTerm P(const RBTerm& child) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::P;
    n->a = child.p_;
    return RBTerm(std::move(n));
  }
  static RBTerm op(const std::string& gen, const RBTerm& l, const RBTerm& r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Op;
    n->gen = gen;
    n->a = l.p_;
    n->b = r.p_;
    return RBTerm(std::move(n));
  }

  bool is_leaf() const { return p_->kind == Kind::Leaf; }
  bool is_p() const { return p_->kind == Kind::P; }
  bool is_op() const { return p_->kind == Kind::Op; }
  int label() const { return p_->label; }
  const std::string& gen() const { return p_->gen; }
  RBTerm child() const { return RBTerm(p_->a); }  // P node
  RBTerm left() const { return RBTerm(p_->a); }
  RBTerm right() const { return RBTerm(p_->b); }

  int arity() const {
    if (is_leaf()) return 1;
    if (is_p()) return child().arity();
    return left().arity() + right().arity();
  }

  friend int rb_compare(const RBTerm& x, const RBTerm& y) {
    if (x.p_->kind != y.p_->kind)
      return x.p_->kind < y.p_->kind ? -1 : 1;
    switch (x.p_->kind) {
      case Kind::Leaf:
        return x.p_->label == y.p_->label ? 0
               : x.p_->label < y.p_->label ? -1 : 1;
      case Kind::P:
        return rb_compare(x.child(), y.child());
      case Kind::Op: {
        if (x.p_->gen != y.p_->gen) return x.p_->gen < y.p_->gen ? -1 : 1;
        int c = rb_compare(x.left(), y.left());
        return c != 0 ? c : rb_compare(x.right(), y.right());
      }
    }
    return 0;
  }
  friend bool operator<(const RBTerm& x, const RBTerm& y) {
    return rb_compare(x, y) < 0;
  }
  friend bool operator==(const RBTerm& x, const RBTerm& y) {
    return rb_compare(x, y) == 0;
  }

 private:
  explicit RBTerm(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

using RBSum = FormalSum<RBTerm>;

enum class Weight { Zero, One };
enum class RewriteStrategy { InnermostLeftmost, OutermostLeftmost };

namespace rb_detail {

inline RBTerm embed_tree(const Tree& t, bool allow_dot) {
  if (t.is_leaf()) return RBTerm::leaf(t.label());
  DecoratedGenerator g = parse_decorated(t.gen());
  if (g.decorations.size() != 1)
    throw std::invalid_argument("embed: expected a single decoration on '" +
                                t.gen() + "'");
  RBTerm a = embed_tree(t.left(), allow_dot);
  RBTerm b = embed_tree(t.right(), allow_dot);
  switch (g.decorations[0]) {
    case Decoration::Prec: return RBTerm::op(g.base, a, RBTerm::P(b));
    case Decoration::Succ: return RBTerm::op(g.base, RBTerm::P(a), b);
    case Decoration::Dot:
      if (!allow_dot)
        throw std::invalid_argument("embed_bi: dot decoration present");
      return RBTerm::op(g.base, a, b);
  }
  throw std::logic_error("bad decoration");
}

inline RBSum embed(const TreeSum& s, bool allow_dot) {
  RBSum out;
  for (const auto& [t, c] : s.terms()) out.add(embed_tree(t, allow_dot), c);
  return out;
}

}  // namespace rb_detail

// (w,<)(a,b) -> w(a, P b);  (w,>)(a,b) -> w(P a, b).
inline RBSum embed_bi(const TreeSum& s) { return rb_detail::embed(s, false); }

// As embed_bi plus (w,.)(a,b) -> w(a, b).
inline RBSum embed_tri(const TreeSum& s) { return rb_detail::embed(s, true); }

// t with every leaf outside J wrapped in P (empty J wraps them all).
inline RBTerm compose_P_powers(const Tree& t, const std::set<int>& J) {
  for (int x : J)
    if (!t.has_leaf(x))
      throw std::invalid_argument("compose_P_powers: stray label");
  struct Rec {
    const std::set<int>& J;
    RBTerm operator()(const Tree& t) const {
      if (t.is_leaf()) {
        RBTerm l = RBTerm::leaf(t.label());
        return J.count(t.label()) ? l : RBTerm::P(l);
      }
      return RBTerm::op(t.gen(), (*this)(t.left()), (*this)(t.right()));
    }
  };
  return Rec{J}(t);
}

namespace rb_detail {

// w(P a, P b) -> P(w(P a, b)) + P(w(a, P b)) [ + P(w(a, b)) at weight one ].
inline std::vector<RBTerm> expand_redex(const RBTerm& t, Weight w) {
  RBTerm a = t.left().child(), b = t.right().child();
  std::vector<RBTerm> out{
      RBTerm::P(RBTerm::op(t.gen(), RBTerm::P(a), b)),
      RBTerm::P(RBTerm::op(t.gen(), a, RBTerm::P(b))),
  };
  if (w == Weight::One) out.push_back(RBTerm::P(RBTerm::op(t.gen(), a, b)));
  return out;
}

// Rewrites the single redex selected by the strategy; nullopt in normal form.
inline std::optional<std::vector<RBTerm>> step(const RBTerm& t, Weight w,
                                               RewriteStrategy s) {
  if (t.is_leaf()) return std::nullopt;
  if (t.is_p()) {
    auto r = step(t.child(), w, s);
    if (!r) return std::nullopt;
    std::vector<RBTerm> out;
    for (const auto& u : *r) out.push_back(RBTerm::P(u));
    return out;
  }
  bool redex = t.left().is_p() && t.right().is_p();
  if (s == RewriteStrategy::OutermostLeftmost && redex) return expand_redex(t, w);
  if (auto r = step(t.left(), w, s)) {
    std::vector<RBTerm> out;
    for (const auto& u : *r) out.push_back(RBTerm::op(t.gen(), u, t.right()));
    return out;
  }
  if (auto r = step(t.right(), w, s)) {
    std::vector<RBTerm> out;
    for (const auto& u : *r) out.push_back(RBTerm::op(t.gen(), t.left(), u));
    return out;
  }
  if (redex) return expand_redex(t, w);
  return std::nullopt;
}

}  // namespace rb_detail

// Rewrites until no vertex has both children P-rooted. Each step moves a P
// strictly closer to the root, so the rewriting terminates.
inline RBSum rb_normal_form(
    const RBSum& s, Weight w,
    RewriteStrategy strategy = RewriteStrategy::InnermostLeftmost,
    std::size_t step_cap = 1000000) {
  RBSum out;
  std::vector<std::pair<RBTerm, Rational>> work(s.terms().begin(),
                                                s.terms().end());
  std::size_t steps = 0;
  while (!work.empty()) {
    auto [t, c] = work.back();
    work.pop_back();
    auto r = rb_detail::step(t, w, strategy);
    if (!r) {
      out.add(t, c);
      continue;
    }
    if (++steps > step_cap)
      throw std::runtime_error("rb_normal_form: step cap exceeded");
    for (const auto& u : *r) work.emplace_back(u, c);
  }
  return out;
}

inline RBSum rb_normal_form(const RBTerm& t, Weight w,
                            RewriteStrategy strategy =
                                RewriteStrategy::InnermostLeftmost) {
  return rb_normal_form(RBSum(t), w, strategy);
}

inline RBSum apply_P(const RBSum& s) {
  RBSum out;
  for (const auto& [t, c] : s.terms()) out.add(RBTerm::P(t), c);
  return out;
}

// Per-monomial congruence certificates for the morphism from the successor
// operad into the Rota-Baxter operad (weight 0 for bi, weight 1 for tri):
//   (i)  nf(P(embed(expansion(t)))) = nf(t with all leaves P-wrapped)
//   (ii) nf(embed(split_{x or J}(t))) = nf(t composed with P off x resp. J)
// If some monomial fails, the relation is retried against the span of the
// RB-normalized P-decorated relation translates.
inline Report verify_successor_rb(const Presentation& p, SuccessorKind kind) {
  Weight w = kind == SuccessorKind::Bi ? Weight::Zero : Weight::One;
  Report rep;
  rep.command = "check-rb";
  rep.inputs["name"] = p.name;
  rep.inputs["kind"] = kind == SuccessorKind::Bi ? "bi" : "tri";
  rep.inputs["weight"] = w == Weight::Zero ? 0 : 1;

  auto embed = [&](const TreeSum& s) {
    return kind == SuccessorKind::Bi ? embed_bi(s) : embed_tri(s);
  };
  auto expansion = [&](const Tree& t) {
    return kind == SuccessorKind::Bi ? tilde(t) : hat(t);
  };

  for (std::size_t s = 0; s < p.relations.size(); ++s) {
    const auto& r = p.relations[s];
    int n = relation_arity(r);
    auto labels = leaf_set(r.terms().begin()->first);
    std::string tag = "relation " + std::to_string(s + 1);

    bool monomial_ok = true;
    for (const auto& [t, c] : r.terms()) {
      RBSum lhs = rb_normal_form(apply_P(embed(expansion(t))), w);
      RBSum rhs = rb_normal_form(compose_P_powers(t, {}), w);
      if (!(lhs == rhs)) monomial_ok = false;
      if (kind == SuccessorKind::Bi) {
        for (int x : labels) {
          RBSum a = rb_normal_form(embed(bisuccessor(t, x)), w);
          RBSum b = rb_normal_form(compose_P_powers(t, {x}), w);
          if (!(a == b)) monomial_ok = false;
        }
      } else {
        for (const auto& J : leaf_subsets(labels)) {
          RBSum a = rb_normal_form(embed(trisuccessor(t, J)), w);
          RBSum b = rb_normal_form(compose_P_powers(t, J), w);
          if (!(a == b)) monomial_ok = false;
        }
      }
    }
    if (monomial_ok) {
      Check& c = rep.add(tag + ": per-monomial congruences", true, "level=monomial");
      c.arity = n;
      continue;
    }

    // Fallback: compare modulo the relation ideal as seen through P-patterns.
    std::vector<RBSum> ideal;
    std::vector<Perm> perms =
        p.symmetric() ? Perm::all(n) : std::vector<Perm>{Perm::identity(n)};
    for (const auto& rho : p.relations) {
      if (relation_arity(rho) != n) continue;
      for (const auto& sg : perms) {
        TreeSum translate =
            p.symmetric() ? apply_perm(rho, sg, p.action) : rho;
        auto tl = leaf_set(translate.terms().begin()->first);
        std::vector<std::set<int>> patterns = leaf_subsets(tl);
        patterns.push_back({});
        for (const auto& K : patterns) {
          RBSum vec;
          for (const auto& [t, c] : translate.terms())
            vec += c * rb_normal_form(compose_P_powers(t, K), w);
          ideal.push_back(vec);
          ideal.push_back(rb_normal_form(apply_P(vec), w));
        }
      }
    }
    bool relation_ok = true;
    auto check_residual = [&](const RBSum& residual) {
      if (residual.zero()) return true;
      std::vector<RBSum> all = ideal;
      all.push_back(residual);
      auto span = span_of(ideal, BasisIndex<RBTerm>::covering(all));
      return in_span(residual, span);
    };
    {
      RBSum residual;
      for (const auto& [t, c] : r.terms())
        residual += c * (rb_normal_form(apply_P(embed(expansion(t))), w) -
                         rb_normal_form(compose_P_powers(t, {}), w));
      if (!check_residual(residual)) relation_ok = false;
    }
    if (kind == SuccessorKind::Bi) {
      for (int x : labels) {
        RBSum residual;
        for (const auto& [t, c] : r.terms())
          residual += c * (rb_normal_form(embed(bisuccessor(t, x)), w) -
                           rb_normal_form(compose_P_powers(t, {x}), w));
        if (!check_residual(residual)) relation_ok = false;
      }
    } else {
      for (const auto& J : leaf_subsets(labels)) {
        RBSum residual;
        for (const auto& [t, c] : r.terms())
          residual += c * (rb_normal_form(embed(trisuccessor(t, J)), w) -
                           rb_normal_form(compose_P_powers(t, J), w));
        if (!check_residual(residual)) relation_ok = false;
      }
    }
    Check& c = rep.add(tag + ": per-monomial congruences", relation_ok,
                       relation_ok ? "level=relation" : "failed at both levels");
    c.arity = n;
  }
  return rep;
}

}  // namespace opsucc
