#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "opsucc/matrix_alg.hpp"
#include "opsucc/presentation.hpp"
#include "opsucc/rota_baxter.hpp"
#include "opsucc/successor.hpp"

namespace opsucc {

// Trees serialize as nested arrays: a leaf is an integer, a node is
// [genId, left, right], e.g. ["mu", ["mu", 1, 2], 3].
inline nlohmann::json tree_to_json(const Tree& t) {
  if (t.is_leaf()) return t.label();
  return nlohmann::json::array(
      {t.gen(), tree_to_json(t.left()), tree_to_json(t.right())});
}

inline Tree tree_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Tree::leaf(j.get<int>());
  if (!j.is_array() || j.size() != 3 || !j[0].is_string())
    throw std::invalid_argument("bad tree: expected integer or [gen, left, right]");
  return Tree::node(j[0].get<std::string>(), tree_from_json(j[1]),
                    tree_from_json(j[2]));
}

inline nlohmann::json generator_sum_to_json(const GeneratorSum& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [g, c] : v.terms())
    arr.push_back({{"gen", g}, {"coeff", rational_to_string(c)}});
  return arr;
}

inline GeneratorSum generator_sum_from_json(const nlohmann::json& j) {
  GeneratorSum out;
  for (const auto& e : j)
    out.add(e.at("gen").get<std::string>(),
            rational_from_string(e.at("coeff").get<std::string>()));
  return out;
}

inline nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["name"] = p.name;
  j["symmetric"] = p.symmetric();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : p.generators) gens.push_back({{"id", g}});
  j["generators"] = gens;
  if (p.symmetric()) {
    nlohmann::json act = nlohmann::json::object();
    for (const auto& g : p.generators)
      act[g] = generator_sum_to_json(p.action(g));
    j["s2_action"] = act;
  }
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relations) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [t, c] : r.terms())
      terms.push_back(
          {{"coeff", rational_to_string(c)}, {"tree", tree_to_json(t)}});
    rels.push_back({{"terms", terms}});
  }
  j["relations"] = rels;
  if (!p.maps.empty()) {
    nlohmann::json maps = nlohmann::json::object();
    for (const auto& [target, f] : p.maps) {
      nlohmann::json fm = nlohmann::json::object();
      for (const auto& [g, img] : f) fm[g] = generator_sum_to_json(img);
      maps[target] = fm;
    }
    j["maps"] = maps;
  }
  return j;
}

inline Presentation presentation_from_json(const nlohmann::json& j) {
  Presentation p;
  p.name = j.at("name").get<std::string>();
  p.mode = j.at("symmetric").get<bool>() ? OperadMode::Symmetric
                                         : OperadMode::Nonsymmetric;
  for (const auto& g : j.at("generators"))
    p.generators.push_back(g.at("id").get<std::string>());
  if (p.symmetric()) {
    const auto& act = j.at("s2_action");
    for (auto it = act.begin(); it != act.end(); ++it)
      p.action.set(it.key(), generator_sum_from_json(it.value()));
  }
  for (const auto& r : j.at("relations")) {
    TreeSum sum;
    for (const auto& term : r.at("terms"))
      sum.add(tree_from_json(term.at("tree")),
              rational_from_string(term.at("coeff").get<std::string>()));
    p.relations.push_back(std::move(sum));
  }
  if (j.contains("maps")) {
    for (auto it = j.at("maps").begin(); it != j.at("maps").end(); ++it) {
      GeneratorMap f;
      for (auto g = it.value().begin(); g != it.value().end(); ++g)
        f[g.key()] = generator_sum_from_json(g.value());
      p.maps[it.key()] = std::move(f);
    }
  }
  return p;
}

// Rota-Baxter terms serialize with "P" as a unary head:
// ["P", ["mu", 1, ["P", 2]]].
inline nlohmann::json rbterm_to_json(const RBTerm& t) {
  if (t.is_leaf()) return t.label();
  if (t.is_p()) return nlohmann::json::array({"P", rbterm_to_json(t.child())});
  return nlohmann::json::array(
      {t.gen(), rbterm_to_json(t.left()), rbterm_to_json(t.right())});
}

inline RBTerm rbterm_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return RBTerm::leaf(j.get<int>());
  if (j.is_array() && j.size() == 2 && j[0] == "P")
    return RBTerm::P(rbterm_from_json(j[1]));
  if (j.is_array() && j.size() == 3 && j[0].is_string() && j[0] != "P")
    return RBTerm::op(j[0].get<std::string>(), rbterm_from_json(j[1]),
                      rbterm_from_json(j[2]));
  throw std::invalid_argument("bad Rota-Baxter term");
}

// Algebra file format: {"dimension": d, "operations": {opId: [[i,j,k,"c"],..]}}
// listing the nonzero structure constants e_i op e_j = sum_k c e_k.
inline FiniteAlgebra algebra_from_json(const nlohmann::json& j) {
  FiniteAlgebra a;
  a.dim = j.at("dimension").get<std::size_t>();
  const auto& ops = j.at("operations");
  for (auto it = ops.begin(); it != ops.end(); ++it) {
    a.ops[it.key()].assign(a.dim * a.dim * a.dim, Rational(0));
    for (const auto& e : it.value())
      a.set_constant(it.key(), e.at(0).get<std::size_t>(),
                     e.at(1).get<std::size_t>(), e.at(2).get<std::size_t>(),
                     rational_from_string(e.at(3).get<std::string>()));
  }
  return a;
}

inline nlohmann::json algebra_to_json(const FiniteAlgebra& a) {
  nlohmann::json ops = nlohmann::json::object();
  for (const auto& [op, t] : a.ops) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t k = 0; k < a.dim; ++k) {
          const Rational& c = t[(i * a.dim + j) * a.dim + k];
          if (c != 0)
            entries.push_back({i, j, k, rational_to_string(c)});
        }
    ops[op] = entries;
  }
  return nlohmann::json{{"dimension", a.dim}, {"operations", ops}};
}

// --- human-readable printing ------------------------------------------------

inline std::string variable_name(int label) {
  static const char* names[] = {"x", "y", "z", "u", "v", "w"};
  if (label >= 1 && label <= 6) return names[label - 1];
  return "x" + std::to_string(label);
}

inline std::string decoration_glyph(Decoration d) {
  switch (d) {
    case Decoration::Prec: return "≺";  // ≺
    case Decoration::Succ: return "≻";  // ≻
    case Decoration::Dot: return "·";   // ·
  }
  return "?";
}

// Operation display: the decoration glyphs, prefixed by the base id whenever
// the context has more than one base symbol.
inline std::string op_display(const std::string& gen, bool single_base) {
  DecoratedGenerator g = parse_decorated(gen);
  std::string out;
  if (!single_base || g.decorations.empty()) out = g.base;
  for (Decoration d : g.decorations) out += decoration_glyph(d);
  return out;
}

inline bool has_single_base(const std::vector<std::string>& gens) {
  std::set<std::string> bases;
  for (const auto& g : gens) bases.insert(parse_decorated(g).base);
  return bases.size() == 1;
}

inline std::string pretty_tree(const Tree& t, bool single_base) {
  if (t.is_leaf()) return variable_name(t.label());
  return "(" + pretty_tree(t.left(), single_base) + " " +
         op_display(t.gen(), single_base) + " " +
         pretty_tree(t.right(), single_base) + ")";
}

inline std::string pretty_sum(const TreeSum& s, bool single_base) {
  if (s.zero()) return "0";
  std::string out;
  for (const auto& [t, c] : s.terms()) {
    std::string mono = pretty_tree(t, single_base);
    if (out.empty()) {
      if (c == 1) out = mono;
      else if (c == -1) out = "- " + mono;
      else out = rational_to_string(c) + " " + mono;
    } else {
      if (c == 1) out += " + " + mono;
      else if (c == -1) out += " - " + mono;
      else if (c > 0) out += " + " + rational_to_string(c) + " " + mono;
      else out += " - " + rational_to_string(-c) + " " + mono;
    }
  }
  return out;
}

inline std::string pretty_presentation(const Presentation& p) {
  bool single = has_single_base(p.generators);
  std::string out = p.name + " (" +
                    (p.symmetric() ? "symmetric" : "nonsymmetric") + ")\n";
  out += "generators:";
  for (const auto& g : p.generators) out += " " + g;
  out += "\n";
  if (p.symmetric()) {
    for (const auto& g : p.generators) {
      out += "  " + g + "^(12) = ";
      GeneratorSum img = p.action(g);
      bool first = true;
      if (img.zero()) out += "0";
      for (const auto& [g2, c] : img.terms()) {
        std::string coeff = c == 1 ? "" : (c == -1 ? "-" : rational_to_string(c) + " ");
        out += (first ? "" : " + ") + coeff + g2;
        first = false;
      }
      out += "\n";
    }
  }
  out += "relations:\n";
  for (const auto& r : p.relations)
    out += "  " + pretty_sum(r, single) + " = 0\n";
  return out;
}

}  // namespace opsucc
