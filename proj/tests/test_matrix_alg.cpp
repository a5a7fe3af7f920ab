#include <gtest/gtest.h>

#include "opsucc/catalog.hpp"
#include "opsucc/io.hpp"
#include "opsucc/matrix_alg.hpp"

using namespace opsucc;

namespace {

FiniteAlgebra commutative_2d() {
  // e1 e1 = e2, symmetric, associative (all products with e2 vanish)
  FiniteAlgebra a;
  a.dim = 2;
  a.set_constant("m", 0, 0, 1, Rational(1));
  a.set_constant("m'", 0, 0, 1, Rational(1));
  return a;
}

MatrixOverAlgebra scale(const Rational& c, MatrixOverAlgebra m) {
  for (auto& e : m.entries)
    for (auto& x : e) x *= c;
  return m;
}

MatrixOverAlgebra add(const MatrixOverAlgebra& a, const MatrixOverAlgebra& b) {
  MatrixOverAlgebra out = a;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    for (std::size_t k = 0; k < a.entries[i].size(); ++k)
      out.entries[i][k] += b.entries[i][k];
  return out;
}

}  // namespace

TEST(AlgebraCheck, ZeroAlgebraPassesEverything) {
  FiniteAlgebra zero;
  zero.dim = 1;
  for (const char* op : {"z", "z'"}) zero.ops[op].assign(1, Rational(0));
  EXPECT_TRUE(algebra_relation_check(zero, catalog("Zinbiel"), 20, 1).pass());
}

TEST(AlgebraCheck, ZinbielTwoDim) {
  Report rep = algebra_relation_check(zinbiel_algebra_2d(), catalog("Zinbiel"), 100, 0);
  EXPECT_TRUE(rep.pass()) << rep.to_text();
}

TEST(AlgebraCheck, CommutativeAssociativePassesAss) {
  Report rep = algebra_relation_check(commutative_2d(), catalog("Ass"), 100, 0);
  EXPECT_TRUE(rep.pass()) << rep.to_text();
}

TEST(AlgebraCheck, BrokenConstantFailsWithWitness) {
  FiniteAlgebra a;
  a.dim = 2;
  a.set_constant("z", 0, 0, 0, Rational(1));  // e1 e1 = e1 is not Zinbiel
  a.set_constant("z'", 0, 0, 0, Rational(1));
  Report rep = algebra_relation_check(a, catalog("Zinbiel"), 50, 3);
  EXPECT_FALSE(rep.pass());
  bool witnessed = false;
  for (const auto& c : rep.checks)
    if (!c.pass && !c.detail.empty()) witnessed = true;
  EXPECT_TRUE(witnessed);
}

TEST(AlgebraCheck, MissingOperationReported) {
  FiniteAlgebra a;
  a.dim = 1;
  a.ops["z"].assign(1, Rational(0));
  EXPECT_FALSE(algebra_relation_check(a, catalog("Zinbiel"), 5, 0).pass());
}

TEST(MatrixOp, SizeOneIsTheAlgebraOperation) {
  FiniteAlgebra a = zinbiel_algebra_2d();
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    MatrixOverAlgebra m = random_matrix(1, a, rng), n = random_matrix(1, a, rng);
    EXPECT_EQ(matrix_op("z", m, n).at(0, 0), a.apply("z", m.at(0, 0), n.at(0, 0)));
  }
}

TEST(MatrixOp, ZinbielLeftAndRightFormulas) {
  FiniteAlgebra a = zinbiel_algebra_2d();
  std::mt19937 rng(11);
  MatrixOverAlgebra m = random_matrix(3, a, rng), n = random_matrix(3, a, rng);
  MatrixOverAlgebra left = matrix_op("z", m, n);    // sum of M_il . N_lj
  MatrixOverAlgebra right = matrix_op("z'", m, n);  // sum of N_lj . M_il
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      AlgElement wl = a.zero(), wr = a.zero();
      for (std::size_t l = 0; l < 3; ++l) {
        AlgElement vl = a.apply("z", m.at(i, l), n.at(l, j));
        AlgElement vr = a.apply("z", n.at(l, j), m.at(i, l));
        for (std::size_t k = 0; k < a.dim; ++k) {
          wl[k] += vl[k];
          wr[k] += vr[k];
        }
      }
      EXPECT_EQ(left.at(i, j), wl);
      EXPECT_EQ(right.at(i, j), wr);
    }
}

TEST(MatrixOp, Bilinear) {
  FiniteAlgebra a = zinbiel_algebra_2d();
  std::mt19937 rng(13);
  MatrixOverAlgebra m1 = random_matrix(2, a, rng), m2 = random_matrix(2, a, rng),
                    n = random_matrix(2, a, rng);
  Rational c(3, 2);
  EXPECT_EQ(matrix_op("z", add(scale(c, m1), m2), n),
            add(scale(c, matrix_op("z", m1, n)), matrix_op("z", m2, n)));
  EXPECT_EQ(matrix_op("z", n, add(scale(c, m1), m2)),
            add(scale(c, matrix_op("z", n, m1)), matrix_op("z", n, m2)));
}

TEST(MatrixRelations, DendriformOverZinbiel) {
  FiniteAlgebra a = zinbiel_algebra_2d();
  std::map<std::string, std::string> ops{{"l", "z"}, {"r", "z'"}};
  for (std::size_t size : {2u, 3u}) {
    Report rep = matrix_relation_check(catalog("Dend"), a, ops, size, 100, 0);
    EXPECT_TRUE(rep.pass()) << "size " << size << "\n" << rep.to_text();
  }
}

TEST(MatrixRelations, TrivialAndCommutativeAssociative) {
  FiniteAlgebra trivial;
  trivial.dim = 1;
  trivial.ops["m"].assign(1, Rational(0));
  EXPECT_TRUE(matrix_relation_check(catalog("Ass_ns"), trivial, {{"m", "m"}}, 3,
                                    20, 0)
                  .pass());
  EXPECT_TRUE(matrix_relation_check(catalog("Ass_ns"), commutative_2d(),
                                    {{"m", "m"}}, 2, 100, 0)
                  .pass());
  EXPECT_THROW(matrix_relation_check(catalog("Ass"), commutative_2d(),
                                     {{"m", "m"}, {"m'", "m'"}}, 2, 5, 0),
               std::invalid_argument);
}

TEST(TransposeLaw, ZinbielPairs) {
  FiniteAlgebra a = zinbiel_algebra_2d();
  for (std::size_t size : {2u, 3u}) {
    Report rep = transpose_law_check(a, {{"z", "z'"}}, size, 100, 0);
    EXPECT_TRUE(rep.pass()) << rep.to_text();
  }
  // zero matrices: both sides vanish
  MatrixOverAlgebra z = MatrixOverAlgebra::zero(2, a);
  EXPECT_EQ(transpose(matrix_op("z", z, z)), matrix_op("z'", z, z));
}

TEST(MatrixRelations, SizeOneReducesToAlgebraCheck) {
  FiniteAlgebra a = zinbiel_algebra_2d();
  std::map<std::string, std::string> ops{{"l", "z"}, {"r", "z'"}};
  EXPECT_TRUE(matrix_relation_check(catalog("Dend"), a, ops, 1, 100, 0).pass());
  EXPECT_TRUE(algebra_relation_check(a, catalog("Zinbiel"), 100, 0).pass());
}

TEST(AlgebraJson, RoundTrip) {
  FiniteAlgebra a = zinbiel_algebra_2d();
  nlohmann::json j = algebra_to_json(a);
  FiniteAlgebra b = algebra_from_json(j);
  EXPECT_EQ(b.dim, a.dim);
  EXPECT_EQ(b.ops, a.ops);
  EXPECT_EQ(algebra_to_json(b).dump(), j.dump());
  EXPECT_TRUE(algebra_relation_check(b, catalog("Zinbiel"), 50, 0).pass());
}

// Evaluating a 3-leaf monomial through nested matrix operations agrees with
// the direct double-sum against the composite algebra operation.
TEST(Compositionality, ThreeLeafMonomials) {
  FiniteAlgebra a = zinbiel_algebra_2d();
  std::map<std::string, std::string> ops{{"l", "z"}, {"r", "z'"}};
  std::mt19937 rng(17);
  for (const auto& t : enumerate_basis(3, {"l", "r"}, OperadMode::Nonsymmetric)) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<MatrixOverAlgebra> ms;
      for (int i = 0; i < 3; ++i) ms.push_back(random_matrix(2, a, rng));
      MatrixOverAlgebra nested = eval_tree_matrix(t, ops, ms);
      // direct: entry (i,j) = sum_{k1,k2} composite(M1_{i,k1}, M2_{k1,k2}, M3_{k2,j})
      FiniteAlgebra renamed = a;
      renamed.ops["l"] = a.ops.at("z");
      renamed.ops["r"] = a.ops.at("z'");
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          AlgElement acc = a.zero();
          for (std::size_t k1 = 0; k1 < 2; ++k1)
            for (std::size_t k2 = 0; k2 < 2; ++k2) {
              AlgElement v = eval_tree(
                  t, renamed,
                  {ms[0].at(i, k1), ms[1].at(k1, k2), ms[2].at(k2, j)});
              for (std::size_t k = 0; k < a.dim; ++k) acc[k] += v[k];
            }
          EXPECT_EQ(nested.at(i, j), acc);
        }
    }
  }
}
