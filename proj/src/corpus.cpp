#include "envlab/corpus.hpp"

namespace envlab::corpus {

using BL = LieAlgebra::BracketLine;

LieAlgebra abelian(int n) {
  return LieAlgebra(n, {}, "abelian" + std::to_string(n));
}

LieAlgebra heisenberg3() {
  return LieAlgebra(3, {BL{0, 1, {{2, Rational(1)}}}}, "heisenberg3");
}

LieAlgebra solvable2() {
  return LieAlgebra(2, {BL{0, 1, {{1, Rational(1)}}}}, "solvable2", {"X", "Y"});
}

LieAlgebra sl2() {
  return LieAlgebra(3,
                    {
                        BL{0, 1, {{1, Rational(2)}}},    // [h,e] = 2e
                        BL{0, 2, {{2, Rational(-2)}}},   // [h,f] = -2f
                        BL{1, 2, {{0, Rational(1)}}},    // [e,f] = h
                    },
                    "sl2", {"h", "e", "f"});
}

LieAlgebra favre7() {
  std::vector<BL> b;
  for (int i = 2; i <= 6; ++i)
    b.push_back(BL{0, i - 1, {{i, Rational(1)}}});  // [X1,Xi] = X_{i+1}
  b.push_back(BL{1, 2, {{5, Rational(-1)}}});       // [X2,X3] = -X6
  b.push_back(BL{2, 3, {{6, Rational(1)}}});        // [X3,X4] = X7
  b.push_back(BL{1, 3, {{6, Rational(-1)}}});       // [X2,X4] = -X7
  b.push_back(BL{1, 4, {{6, Rational(-1)}}});       // [X2,X5] = -X7
  return LieAlgebra(7, b, "favre7",
                    {"X1", "X2", "X3", "X4", "X5", "X6", "X7"});
}

WeightStructure h3_grading() { return {WeightKind::Grading, {1, 1, 2}}; }

WeightStructure favre7_filtration() {
  return {WeightKind::Filtration, {1, 1, 2, 3, 4, 5, 6}};
}

WeightStructure trivial_grading(int n) {
  return {WeightKind::Grading, std::vector<int>(n, 1)};
}

}  // namespace envlab::corpus
