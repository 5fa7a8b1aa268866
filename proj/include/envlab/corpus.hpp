#ifndef ENVLAB_CORPUS_HPP
#define ENVLAB_CORPUS_HPP

#include "envlab/lie_algebra.hpp"

namespace envlab::corpus {

/// Abelian algebra of dimension n, trivial weights (1,...,1).
LieAlgebra abelian(int n);

/// Heisenberg: [e1,e2] = e3; graded by (1,1,2).
LieAlgebra heisenberg3();

/// Two-dimensional solvable algebra [X,Y] = Y.
LieAlgebra solvable2();

/// sl2 with basis h,e,f: [h,e]=2e, [h,f]=-2f, [e,f]=h.
LieAlgebra sl2();

/// Favre's 7-dimensional nilpotent algebra:
///   [X1,Xi] = X_{i+1} (i=2..6), [X2,X3] = -X6,
///   [X3,X4] = X7, [X2,X4] = [X2,X5] = -X7.
/// Filtered by (1,1,2,3,4,5,6); admits no positive grading.
LieAlgebra favre7();

WeightStructure h3_grading();       // grading (1,1,2)
WeightStructure favre7_filtration();  // filtration (1,1,2,3,4,5,6)
WeightStructure trivial_grading(int n);  // grading (1,...,1)

}  // namespace envlab::corpus

#endif
