#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "opsucc/presentation.hpp"

namespace opsucc {

using AlgElement = std::vector<Rational>;

// Structure-constant algebra: e_i op e_j = sum_k c[i][j][k] e_k. No axioms
// are assumed at construction; they are checked, not presumed.
struct FiniteAlgebra {
  std::size_t dim = 0;
  std::map<std::string, std::vector<Rational>> ops;  // dense d*d*d tensors

  void set_constant(const std::string& op, std::size_t i, std::size_t j,
                    std::size_t k, const Rational& c) {
    auto& t = ops[op];
    if (t.empty()) t.assign(dim * dim * dim, Rational(0));
    t.at((i * dim + j) * dim + k) = c;
  }

  bool has_op(const std::string& op) const { return ops.count(op) > 0; }

  AlgElement apply(const std::string& op, const AlgElement& a,
                   const AlgElement& b) const {
    auto it = ops.find(op);
    if (it == ops.end())
      throw std::invalid_argument("algebra has no operation '" + op + "'");
    const auto& t = it->second;
    AlgElement out(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[j] == 0) continue;
        Rational f = a[i] * b[j];
        for (std::size_t k = 0; k < dim; ++k) {
          const Rational& c = t[(i * dim + j) * dim + k];
          if (c != 0) out[k] += f * c;
        }
      }
    }
    return out;
  }

  AlgElement zero() const { return AlgElement(dim, Rational(0)); }
};

inline bool is_zero(const AlgElement& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

// The 2-dimensional Zinbiel algebra e1.e1 = e2 (all other products zero),
// with ops "z" and its flip "z'".
inline FiniteAlgebra zinbiel_algebra_2d() {
  FiniteAlgebra a;
  a.dim = 2;
  a.set_constant("z", 0, 0, 1, Rational(1));
  a.set_constant("z'", 0, 0, 1, Rational(1));
  return a;
}

// Deterministic small-integer sampling; avoids std::uniform_int_distribution
// so reports are byte-identical across platforms.
inline int sample_int(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

inline AlgElement random_element(const FiniteAlgebra& a, std::mt19937& rng) {
  AlgElement v(a.dim);
  for (auto& c : v) c = Rational(sample_int(rng, -2, 2));
  return v;
}

inline AlgElement eval_tree(const Tree& t, const FiniteAlgebra& a,
                            const std::vector<AlgElement>& args) {
  if (t.is_leaf()) return args.at(t.label() - 1);
  return a.apply(t.gen(), eval_tree(t.left(), a, args),
                 eval_tree(t.right(), a, args));
}

inline AlgElement eval_sum(const TreeSum& s, const FiniteAlgebra& a,
                           const std::vector<AlgElement>& args) {
  AlgElement out = a.zero();
  for (const auto& [t, c] : s.terms()) {
    AlgElement v = eval_tree(t, a, args);
    for (std::size_t i = 0; i < a.dim; ++i) out[i] += c * v[i];
  }
  return out;
}

inline std::string element_to_string(const AlgElement& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + rational_to_string(v[i]);
  return out + ")";
}

// Every relation of p evaluates to zero on seeded random tuples. Exact
// arithmetic: a failure is a real counterexample, a pass is evidence.
inline Report algebra_relation_check(const FiniteAlgebra& a,
                                     const Presentation& p, int trials,
                                     unsigned seed) {
  Report rep;
  rep.command = "check-algebra";
  rep.inputs["name"] = p.name;
  rep.inputs["trials"] = trials;
  rep.inputs["seed"] = seed;
  for (const auto& g : p.generators)
    if (!a.has_op(g)) {
      rep.add("operations cover the generators", false, "missing '" + g + "'");
      return rep;
    }
  std::mt19937 rng(seed);
  for (std::size_t s = 0; s < p.relations.size(); ++s) {
    const auto& r = p.relations[s];
    int n = relation_arity(r);
    bool ok = true;
    std::string witness;
    for (int trial = 0; trial < trials && ok; ++trial) {
      std::vector<AlgElement> args;
      for (int i = 0; i < n; ++i) args.push_back(random_element(a, rng));
      AlgElement v = eval_sum(r, a, args);
      if (!is_zero(v)) {
        ok = false;
        witness = "trial " + std::to_string(trial) + " -> " + element_to_string(v);
      }
    }
    Check& c = rep.add("relation " + std::to_string(s + 1) + " vanishes", ok,
                       witness);
    c.arity = n;
  }
  return rep;
}

struct MatrixOverAlgebra {
  std::size_t n = 0;
  const FiniteAlgebra* alg = nullptr;
  std::vector<AlgElement> entries;  // row-major n*n

  static MatrixOverAlgebra zero(std::size_t n, const FiniteAlgebra& a) {
    MatrixOverAlgebra m;
    m.n = n;
    m.alg = &a;
    m.entries.assign(n * n, a.zero());
    return m;
  }

  AlgElement& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const AlgElement& at(std::size_t i, std::size_t j) const {
    return entries[i * n + j];
  }

  bool operator==(const MatrixOverAlgebra& o) const {
    return n == o.n && entries == o.entries;
  }
};

inline MatrixOverAlgebra random_matrix(std::size_t n, const FiniteAlgebra& a,
                                       std::mt19937& rng) {
  MatrixOverAlgebra m = MatrixOverAlgebra::zero(n, a);
  for (auto& e : m.entries) e = random_element(a, rng);
  return m;
}

inline MatrixOverAlgebra transpose(const MatrixOverAlgebra& m) {
  MatrixOverAlgebra out = MatrixOverAlgebra::zero(m.n, *m.alg);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

// (M op N)_{i,j} = sum_l op_A(M_{i,l}, N_{l,j}).
inline MatrixOverAlgebra matrix_op(const std::string& op,
                                   const MatrixOverAlgebra& m,
                                   const MatrixOverAlgebra& nn) {
  if (m.n != nn.n || m.alg != nn.alg)
    throw std::invalid_argument("matrix_op: size/algebra mismatch");
  const FiniteAlgebra& a = *m.alg;
  MatrixOverAlgebra out = MatrixOverAlgebra::zero(m.n, a);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) {
      AlgElement acc = a.zero();
      for (std::size_t l = 0; l < m.n; ++l) {
        AlgElement v = a.apply(op, m.at(i, l), nn.at(l, j));
        for (std::size_t k = 0; k < a.dim; ++k) acc[k] += v[k];
      }
      out.at(i, j) = acc;
    }
  return out;
}

inline MatrixOverAlgebra eval_tree_matrix(
    const Tree& t, const std::map<std::string, std::string>& op_map,
    const std::vector<MatrixOverAlgebra>& args) {
  if (t.is_leaf()) return args.at(t.label() - 1);
  auto it = op_map.find(t.gen());
  if (it == op_map.end())
    throw std::invalid_argument("op map misses generator '" + t.gen() + "'");
  return matrix_op(it->second, eval_tree_matrix(t.left(), op_map, args),
                   eval_tree_matrix(t.right(), op_map, args));
}

inline bool is_zero(const MatrixOverAlgebra& m) {
  for (const auto& e : m.entries)
    if (!is_zero(e)) return false;
  return true;
}

// Relations of a nonsymmetric presentation evaluate to the zero matrix on
// seeded random matrices, through op_map: generator -> algebra operation.
inline Report matrix_relation_check(const Presentation& p_ns,
                                    const FiniteAlgebra& a,
                                    const std::map<std::string, std::string>& op_map,
                                    std::size_t size, int trials,
                                    unsigned seed) {
  if (p_ns.symmetric())
    throw std::invalid_argument("matrix_relation_check: presentation must be nonsymmetric");
  Report rep;
  rep.command = "check-matrix";
  rep.inputs["name"] = p_ns.name;
  rep.inputs["size"] = size;
  rep.inputs["trials"] = trials;
  rep.inputs["seed"] = seed;
  std::mt19937 rng(seed);
  for (std::size_t s = 0; s < p_ns.relations.size(); ++s) {
    const auto& r = p_ns.relations[s];
    int n = relation_arity(r);
    bool ok = true;
    std::string witness;
    for (int trial = 0; trial < trials && ok; ++trial) {
      std::vector<MatrixOverAlgebra> args;
      for (int i = 0; i < n; ++i) args.push_back(random_matrix(size, a, rng));
      MatrixOverAlgebra acc = MatrixOverAlgebra::zero(size, a);
      for (const auto& [t, c] : r.terms()) {
        MatrixOverAlgebra v = eval_tree_matrix(t, op_map, args);
        for (std::size_t e = 0; e < acc.entries.size(); ++e)
          for (std::size_t k = 0; k < a.dim; ++k)
            acc.entries[e][k] += c * v.entries[e][k];
      }
      if (!is_zero(acc)) {
        ok = false;
        witness = "trial " + std::to_string(trial);
      }
    }
    Check& c = rep.add("relation " + std::to_string(s + 1) +
                           " vanishes on matrices",
                       ok, witness);
    c.arity = n;
  }
  return rep;
}

// t(M op N) = tN op' tM for each listed operation pair, both ways.
inline Report transpose_law_check(
    const FiniteAlgebra& a,
    const std::vector<std::pair<std::string, std::string>>& pairs,
    std::size_t size, int trials, unsigned seed) {
  Report rep;
  rep.command = "check-transpose";
  rep.inputs["size"] = size;
  rep.inputs["trials"] = trials;
  rep.inputs["seed"] = seed;
  std::mt19937 rng(seed);
  for (const auto& [opA, opB] : pairs) {
    bool ok = true;
    std::string witness;
    for (int trial = 0; trial < trials && ok; ++trial) {
      MatrixOverAlgebra m = random_matrix(size, a, rng);
      MatrixOverAlgebra nn = random_matrix(size, a, rng);
      if (!(transpose(matrix_op(opA, m, nn)) ==
            matrix_op(opB, transpose(nn), transpose(m))) ||
          !(transpose(matrix_op(opB, m, nn)) ==
            matrix_op(opA, transpose(nn), transpose(m)))) {
        ok = false;
        witness = "trial " + std::to_string(trial);
      }
    }
    rep.add("transpose law for (" + opA + ", " + opB + ")", ok, witness);
  }
  return rep;
}

}  // namespace opsucc
