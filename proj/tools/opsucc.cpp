#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "opsucc/catalog.hpp"
#include "opsucc/io.hpp"
#include "opsucc/matrix_alg.hpp"
#include "opsucc/rota_baxter.hpp"
#include "opsucc/symmetry.hpp"

namespace {

using namespace opsucc;

Presentation load_operand(const std::string& name_or_file) {
  // catalog names (and successor expressions) resolve before file paths
  try {
    return resolve_operad_expr(name_or_file);
  } catch (const std::invalid_argument&) {
  }
  std::ifstream in(name_or_file);
  if (!in)
    throw std::invalid_argument("no catalog entry or readable file named '" +
                                name_or_file + "'");
  nlohmann::json j;
  in >> j;
  return presentation_from_json(j);
}

void emit(const nlohmann::json& j, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_file);
    out << j.dump(2) << "\n";
  }
}

int finish(const Report& rep, bool json, const std::string& out_file) {
  if (json)
    emit(rep.to_json(), out_file);
  else if (out_file.empty())
    std::cout << rep.to_text();
  else
    std::ofstream(out_file) << rep.to_text();
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"successor calculus for binary operads"};
  app.require_subcommand(1);

  std::string operand, out_file, from_expr, to_name, map_file, perm_text = "(12)";
  std::string kind_text = "bi";
  int power = 1, weight = -1, size = 2, trials = 100, max_arity = 6;
  unsigned seed = 0;
  bool json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "machine-readable report");
    cmd->add_option("-o,--output", out_file, "write output to a file");
    cmd->add_option("--max-arity", max_arity, "basis enumeration limit")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* show = app.add_subcommand("show", "print a presentation");
  show->add_option("operand", operand, "catalog name or file")->required();
  add_common(show);

  CLI::App* succ = app.add_subcommand("succ", "compute a successor presentation");
  succ->add_option("operand", operand, "catalog name or file")->required();
  succ->add_option("--kind", kind_text, "bi|tri")->check(CLI::IsMember({"bi", "tri"}));
  succ->add_option("--n", power, "iteration count")->check(CLI::PositiveNumber);
  add_common(succ);

  CLI::App* equiv = app.add_subcommand("equiv", "check a presentation equivalence");
  equiv->add_option("--from", from_expr, "operad expression, e.g. Su(Comm)")->required();
  equiv->add_option("--to", to_name, "catalog name or file")->required();
  equiv->add_option("--map", map_file, "generator map file (JSON)");
  add_common(equiv);

  CLI::App* rb = app.add_subcommand("check-rb", "verify the Rota-Baxter congruences");
  rb->add_option("operand", operand, "catalog name or file")->required();
  rb->add_option("--kind", kind_text, "bi|tri")->check(CLI::IsMember({"bi", "tri"}));
  rb->add_option("--weight", weight, "0|1 (implied by --kind)");
  add_common(rb);

  CLI::App* sym = app.add_subcommand("check-symmetry",
                                     "verify decoration-permutation symmetry");
  sym->add_option("operand", operand, "catalog name or file")->required();
  sym->add_option("--kind", kind_text, "bi|tri")->check(CLI::IsMember({"bi", "tri"}));
  sym->add_option("--n", power, "iteration count")->check(CLI::PositiveNumber);
  sym->add_option("--perm", perm_text, "cycle notation, e.g. \"(12)\"");
  add_common(sym);

  CLI::App* mat = app.add_subcommand("check-matrix",
                                     "matrix-algebra checks over a coefficient algebra");
  mat->add_option("operand", operand, "algebra file (default: built-in 2-dim Zinbiel)");
  mat->add_option("--size", size, "matrix size")->check(CLI::PositiveNumber);
  mat->add_option("--trials", trials, "seeded random trials")->check(CLI::PositiveNumber);
  mat->add_option("--seed", seed, "random seed");
  add_common(mat);

  CLI::App* props = app.add_subcommand("props", "run the property suites");
  props->add_option("operand", operand, "catalog name or file");
  add_common(props);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    SuccessorKind kind = kind_text == "tri" ? SuccessorKind::Tri : SuccessorKind::Bi;

    if (show->parsed()) {
      Presentation p = load_operand(operand);
      Report v = validate(p);
      if (!v.pass()) {
        std::cerr << v.to_text();
        return 1;
      }
      if (json || !out_file.empty())
        emit(presentation_to_json(p), out_file);
      else
        std::cout << pretty_presentation(p);
      return 0;
    }

    if (succ->parsed()) {
      Presentation p = load_operand(operand);
      Presentation q = iterate(p, kind, power);
      if (json || !out_file.empty())
        emit(presentation_to_json(q), out_file);
      else
        std::cout << pretty_presentation(q);
      return 0;
    }

    if (equiv->parsed()) {
      Presentation from = load_operand(from_expr);
      Presentation to = load_operand(to_name);
      GeneratorMap f;
      if (!map_file.empty()) {
        std::ifstream in(map_file);
        if (!in) throw std::invalid_argument("cannot read map file " + map_file);
        nlohmann::json j;
        in >> j;
        for (auto it = j.begin(); it != j.end(); ++it)
          f[it.key()] = generator_sum_from_json(it.value());
      } else {
        auto it = to.maps.find(from.name);
        if (it == to.maps.end())
          throw std::invalid_argument("no stored generator map from '" +
                                      to.name + "' into '" + from.name +
                                      "'; pass --map");
        f = it->second;
      }
      Report rep = equivalent(to, from, f, max_arity);
      rep.inputs = {{"from", from.name}, {"to", to.name}};
      return finish(rep, json, out_file);
    }

    if (rb->parsed()) {
      Presentation p = load_operand(operand);
      int implied = kind == SuccessorKind::Bi ? 0 : 1;
      if (weight >= 0 && weight != implied)
        throw std::invalid_argument("--weight disagrees with --kind");
      return finish(verify_successor_rb(p, kind), json, out_file);
    }

    if (sym->parsed()) {
      Presentation p = load_operand(operand);
      Perm sigma = Perm::from_cycles(perm_text, power);
      Report rep = verify_automorphism(p, kind, power, sigma, max_arity);
      if (power <= 3) rep.merge(group_morphism_check(p, kind, power));
      return finish(rep, json, out_file);
    }

    if (mat->parsed()) {
      FiniteAlgebra a;
      if (operand.empty()) {
        a = zinbiel_algebra_2d();
      } else {
        std::ifstream in(operand);
        if (!in) throw std::invalid_argument("cannot read algebra file " + operand);
        nlohmann::json j;
        in >> j;
        a = algebra_from_json(j);
      }
      Report rep = algebra_relation_check(a, catalog("Zinbiel"), trials, seed);
      rep.merge(matrix_relation_check(catalog("Dend"), a,
                                      {{"l", "z"}, {"r", "z'"}}, size, trials,
                                      seed));
      rep.merge(transpose_law_check(a, {{"z", "z'"}}, size, trials, seed));
      rep.command = "check-matrix";
      rep.inputs = {{"size", size}, {"trials", trials}, {"seed", seed}};
      return finish(rep, json, out_file);
    }

    if (props->parsed()) {
      Report rep;
      rep.command = "props";
      // generic suites over one- and two-generator alphabets
      S2Action free2;
      free2.set("f", GeneratorSum("f'"));
      free2.set("f'", GeneratorSum("f"));
      std::vector<std::string> gens{"f", "f'"};
      bool sum_bi = true, sum_tri = true, agree = true;
      for (int n = 2; n <= 4; ++n) {
        for (const auto& t : enumerate_basis(n, gens, OperadMode::Symmetric)) {
          TreeSum su, tsu;
          for (int x : t.leaves()) {
            su += bisuccessor(t, x);
            if (!(bisuccessor(t, x) == bisuccessor_inductive(t, x))) agree = false;
          }
          for (const auto& J : leaf_subsets(leaf_set(t))) {
            tsu += trisuccessor(t, J);
            if (!(trisuccessor(t, J) == trisuccessor_inductive(t, J))) agree = false;
          }
          if (!(su == tilde(t))) sum_bi = false;
          if (!(tsu == hat(t))) sum_tri = false;
        }
      }
      rep.add("sum of bisuccessors equals the tilde expansion", sum_bi);
      rep.add("sum of trisuccessors equals the hat expansion", sum_tri);
      rep.add("path and inductive successors agree", agree);
      if (!operand.empty()) {
        Presentation p = load_operand(operand);
        rep.merge(validate(p));
        rep.merge(check_star_morphism(p, SuccessorKind::Bi, max_arity));
        if (p.symmetric()) {
          rep.merge(check_star_morphism(p, SuccessorKind::Tri, max_arity));
          rep.merge(check_dot_morphism(p, max_arity));
          rep.merge(check_su_tsu_bridges(p));
        }
        rep.inputs["name"] = p.name;
      }
      return finish(rep, json, out_file);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
