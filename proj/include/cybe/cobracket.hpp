#pragma once

#include <vector>

#include "cybe/tensor.hpp"

namespace cybe {

// Basis action x_i . T for x.(a (x) b) = [x,a] (x) b + a (x) [x,b].
Tensor2 basis_action(const LieAlgebra& algebra, int i, const Tensor2& t);

// Cobracket Delta_r stored on basis vectors:
// Delta_r(e_i) = sum_ab k_ab ([e_i,e_a] (x) e_b + e_a (x) [e_i,e_b]).
struct Cobracket {
  std::vector<Tensor2> images;
};

Cobracket cobracket(const LieAlgebra& algebra, const Tensor2& r);

struct AxiomReport {
  bool cocycle = false;          // Delta[x,y] = x.Delta(y) - y.Delta(x)
  bool co_antisymmetry = false;  // tau(Delta(e_i)) = -Delta(e_i)
  bool co_jacobi = false;        // (id + xi + xi^2)(Delta (x) id)Delta = 0
  bool cybe = false;             // residual of r vanishes
  bool bialgebra() const { return cocycle && co_antisymmetry && co_jacobi; }
};

// Definitional verification of the Lie-bialgebra axioms for (L, Delta_r),
// independent of any closed-form predicate.
AxiomReport check_axioms(const LieAlgebra& algebra, const Tensor2& r);

}  // namespace cybe
