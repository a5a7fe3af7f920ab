#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "opsucc/formal_sum.hpp"

namespace opsucc {

// A k-linear combination of generator ids.
using GeneratorSum = FormalSum<std::string>;

// Image of each generator id under the transposition (12).
class S2Action {
 public:
  S2Action() = default;

  void set(const std::string& gen, GeneratorSum image) {
    table_[gen] = std::move(image);
  }

  bool defines(const std::string& gen) const { return table_.count(gen) > 0; }
  bool empty() const { return table_.empty(); }

  const GeneratorSum& operator()(const std::string& gen) const {
    auto it = table_.find(gen);
    if (it == table_.end())
      throw std::invalid_argument("no (12)-action defined for generator '" + gen + "'");
    return it->second;
  }

  GeneratorSum apply(const GeneratorSum& v) const {
    GeneratorSum out;
    for (const auto& [g, c] : v.terms())
      for (const auto& [g2, c2] : (*this)(g).terms()) out.add(g2, c * c2);
    return out;
  }

  bool is_involution() const {
    for (const auto& [g, img] : table_)
      if (!(apply(img) == GeneratorSum(g))) return false;
    return true;
  }

  const std::map<std::string, GeneratorSum>& table() const { return table_; }

 private:
  std::map<std::string, GeneratorSum> table_;
};

// Leaf-labeled, vertex-decorated planar binary tree. Immutable and cheaply
// copyable; per-node caches carry the data the total order compares.
class Tree {
  struct Node {
    int label = 0;  // > 0 for a leaf
    std::string gen;
    std::shared_ptr<const Node> l, r;
    std::string shape;               // preorder code: 'N' internal, 'L' leaf
    std::vector<std::string> gens;   // vertex generators in preorder
    std::vector<int> leaves;         // leaf labels left to right
    int min_leaf = 0;
  };

 public:
  static Tree leaf(int label) {
    if (label <= 0) throw std::invalid_argument("leaf labels are positive");
    auto n = std::make_shared<Node>();
    n->label = label;
    n->shape = "L";
    n->leaves = {label};
    n->min_leaf = label;
    return Tree(std::move(n));
  }

  // Grafting; leaf-label sets must be disjoint.
  static Tree node(const std::string& gen, const Tree& l, const Tree& r) {
    std::set<int> seen(l.p_->leaves.begin(), l.p_->leaves.end());
    for (int x : r.p_->leaves)
      if (!seen.insert(x).second)
        throw std::invalid_argument("graft: overlapping leaf labels");
    auto n = std::make_shared<Node>();
    n->gen = gen;
    n->l = l.p_;
    n->r = r.p_;
    n->shape = "N" + l.p_->shape + r.p_->shape;
    n->gens.reserve(1 + l.p_->gens.size() + r.p_->gens.size());
    n->gens.push_back(gen);
    n->gens.insert(n->gens.end(), l.p_->gens.begin(), l.p_->gens.end());
    n->gens.insert(n->gens.end(), r.p_->gens.begin(), r.p_->gens.end());
    n->leaves.reserve(l.p_->leaves.size() + r.p_->leaves.size());
    n->leaves = l.p_->leaves;
    n->leaves.insert(n->leaves.end(), r.p_->leaves.begin(), r.p_->leaves.end());
    n->min_leaf = std::min(l.p_->min_leaf, r.p_->min_leaf);
    return Tree(std::move(n));
  }

  bool is_leaf() const { return p_->label > 0; }
  int label() const {
    if (!is_leaf()) throw std::logic_error("label() on internal node");
    return p_->label;
  }
  const std::string& gen() const {
    if (is_leaf()) throw std::logic_error("gen() on leaf");
    return p_->gen;
  }
  Tree left() const {
    if (is_leaf()) throw std::logic_error("left() on leaf");
    return Tree(p_->l);
  }
  Tree right() const {
    if (is_leaf()) throw std::logic_error("right() on leaf");
    return Tree(p_->r);
  }

  int arity() const { return static_cast<int>(p_->leaves.size()); }
  int min_leaf() const { return p_->min_leaf; }
  const std::vector<int>& leaves() const { return p_->leaves; }
  const std::vector<std::string>& vertex_gens() const { return p_->gens; }
  const std::string& shape() const { return p_->shape; }

  bool has_leaf(int x) const {
    return std::find(p_->leaves.begin(), p_->leaves.end(), x) != p_->leaves.end();
  }

  // Total order: shape code, then vertex generators in preorder, then leaf
  // labels left to right. Keeps reduced row echelon forms canonical.
  friend bool operator<(const Tree& a, const Tree& b) {
    if (a.p_->shape != b.p_->shape) return a.p_->shape < b.p_->shape;
    if (a.p_->gens != b.p_->gens) return a.p_->gens < b.p_->gens;
    return a.p_->leaves < b.p_->leaves;
  }
  friend bool operator==(const Tree& a, const Tree& b) {
    return a.p_->shape == b.p_->shape && a.p_->gens == b.p_->gens &&
           a.p_->leaves == b.p_->leaves;
  }

 private:
  explicit Tree(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

using TreeSum = FormalSum<Tree>;

enum class OperadMode { Symmetric, Nonsymmetric };

enum class Turn { Left, Right };

// A root-to-leaf path step: the vertex (as the L/R prefix that reaches it,
// "" for the root) and the side the path descends into.
struct PathStep {
  std::string vertex;
  Turn turn;
  bool operator==(const PathStep&) const = default;
};

inline Tree graft(const Tree& l, const Tree& r, const std::string& gen) {
  return Tree::node(gen, l, r);
}

inline std::tuple<Tree, std::string, Tree> decompose(const Tree& t) {
  if (t.is_leaf()) throw std::invalid_argument("decompose: single leaf");
  return {t.left(), t.gen(), t.right()};
}

inline std::vector<PathStep> path_to_leaf(const Tree& t, int x) {
  if (!t.has_leaf(x)) throw std::invalid_argument("path_to_leaf: absent leaf label");
  std::vector<PathStep> out;
  Tree cur = t;
  std::string pos;
  while (!cur.is_leaf()) {
    bool left_side = cur.left().has_leaf(x);
    out.push_back({pos, left_side ? Turn::Left : Turn::Right});
    pos += left_side ? 'L' : 'R';
    cur = left_side ? cur.left() : cur.right();
  }
  return out;
}

// Grafts two already-canonical sums along gen, restoring the min-leaf
// orientation at the new vertex (children swap through the (12)-action).
inline TreeSum canonical_node(const std::string& gen, const TreeSum& ls,
                              const TreeSum& rs, const S2Action& action) {
  TreeSum out;
  for (const auto& [lt, lc] : ls.terms())
    for (const auto& [rt, rc] : rs.terms()) {
      Rational c = lc * rc;
      if (lt.min_leaf() < rt.min_leaf()) {
        out.add(Tree::node(gen, lt, rt), c);
      } else {
        for (const auto& [g2, c2] : action(gen).terms())
          out.add(Tree::node(g2, rt, lt), c * c2);
      }
    }
  return out;
}

inline TreeSum canonicalize(const Tree& raw, const S2Action& action) {
  if (raw.is_leaf()) return TreeSum(raw);
  return canonical_node(raw.gen(), canonicalize(raw.left(), action),
                        canonicalize(raw.right(), action), action);
}

inline TreeSum canonicalize(const TreeSum& raw, const S2Action& action) {
  TreeSum out;
  for (const auto& [t, c] : raw.terms()) out += c * canonicalize(t, action);
  return out;
}

inline bool is_canonical(const Tree& t) {
  if (t.is_leaf()) return true;
  return t.left().min_leaf() < t.right().min_leaf() && is_canonical(t.left()) &&
         is_canonical(t.right());
}

// Permutation of {1..n}; composition is (s*t)(i) = s(t(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<int> sorted = img_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
      if (sorted[i] != i + 1) throw std::invalid_argument("not a permutation");
  }

  static Perm identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(i - 1); }

  Perm inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 1; i <= size(); ++i) v[(*this)(i)-1] = i;
    return Perm(std::move(v));
  }

  friend Perm operator*(const Perm& s, const Perm& t) {
    if (s.size() != t.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(s.img_.size());
    for (int i = 1; i <= s.size(); ++i) v[i - 1] = s(t(i));
    return Perm(std::move(v));
  }

  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  static std::vector<Perm> all(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
      out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  // Cycle notation, e.g. "(12)", "(123)", "(12)(34)"; "()" is the identity.
  static Perm from_cycles(const std::string& text, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
      if (text[i] != '(') throw std::invalid_argument("bad cycle notation: " + text);
      ++i;
      std::vector<int> cyc;
      while (i < text.size() && text[i] != ')') {
        if (text[i] < '1' || text[i] > '9')
          throw std::invalid_argument("bad cycle notation: " + text);
        int p = text[i] - '0';
        if (p > n) throw std::invalid_argument("cycle point exceeds degree");
        cyc.push_back(p);
        ++i;
      }
      if (i == text.size()) throw std::invalid_argument("unterminated cycle");
      ++i;  // ')'
      for (std::size_t j = 0; j + 1 < cyc.size(); ++j) v[cyc[j] - 1] = cyc[j + 1];
      if (cyc.size() > 1) v[cyc.back() - 1] = cyc.front();
    }
    return Perm(std::move(v));
  }

  std::string to_string() const {
    std::string out;
    std::vector<bool> done(img_.size(), false);
    for (int i = 1; i <= size(); ++i) {
      if (done[i - 1] || (*this)(i) == i) continue;
      out += '(';
      int j = i;
      do {
        out += std::to_string(j);
        done[j - 1] = true;
        j = (*this)(j);
      } while (j != i);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<int> img_;
};

inline Tree relabel_leaves(const Tree& t, const Perm& inv) {
  if (t.is_leaf()) return Tree::leaf(inv(t.label()));
  return Tree::node(t.gen(), relabel_leaves(t.left(), inv),
                    relabel_leaves(t.right(), inv));
}

// Right S_n-action: leaf x is relabeled sigma^{-1}(x), then the result is
// canonicalized again.
inline TreeSum apply_perm(const TreeSum& s, const Perm& sigma,
                          const S2Action& action) {
  Perm inv = sigma.inverse();
  TreeSum out;
  for (const auto& [t, c] : s.terms()) {
    if (t.arity() != sigma.size())
      throw std::invalid_argument("apply_perm: arity mismatch");
    out += c * canonicalize(relabel_leaves(t, inv), action);
  }
  return out;
}

namespace detail {

inline void enumerate_sym(const std::vector<int>& labels,
                          const std::vector<std::string>& gens,
                          std::vector<Tree>& out) {
  if (labels.size() == 1) {
    out.push_back(Tree::leaf(labels[0]));
    return;
  }
  // the minimum label lives in the left subtree
  std::vector<int> rest(labels.begin() + 1, labels.end());
  int m = static_cast<int>(rest.size());
  for (int mask = 0; mask < (1 << m) - 1; ++mask) {
    std::vector<int> ls{labels[0]}, rs;
    for (int i = 0; i < m; ++i) (mask >> i & 1 ? ls : rs).push_back(rest[i]);
    std::vector<Tree> lefts, rights;
    enumerate_sym(ls, gens, lefts);
    enumerate_sym(rs, gens, rights);
    for (const auto& g : gens)
      for (const auto& l : lefts)
        for (const auto& r : rights) out.push_back(Tree::node(g, l, r));
  }
}

inline void enumerate_ns(int lo, int hi, const std::vector<std::string>& gens,
                         std::vector<Tree>& out) {
  if (lo == hi) {
    out.push_back(Tree::leaf(lo));
    return;
  }
  for (int k = lo; k < hi; ++k) {
    std::vector<Tree> lefts, rights;
    enumerate_ns(lo, k, gens, lefts);
    enumerate_ns(k + 1, hi, gens, rights);
    for (const auto& g : gens)
      for (const auto& l : lefts)
        for (const auto& r : rights) out.push_back(Tree::node(g, l, r));
  }
}

}  // namespace detail

// All canonical monomials of the given arity, sorted by the total order.
inline std::vector<Tree> enumerate_basis(int arity,
                                         const std::vector<std::string>& gens,
                                         OperadMode mode, int limit = 6) {
  if (arity < 1) throw std::invalid_argument("enumerate_basis: arity >= 1");
  if (arity > limit)
    throw std::invalid_argument("enumerate_basis: arity " + std::to_string(arity) +
                                " exceeds the configured limit " +
                                std::to_string(limit));
  std::vector<Tree> out;
  if (mode == OperadMode::Symmetric) {
    std::vector<int> labels(arity);
    std::iota(labels.begin(), labels.end(), 1);
    detail::enumerate_sym(labels, gens, out);
  } else {
    detail::enumerate_ns(1, arity, gens, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace opsucc
