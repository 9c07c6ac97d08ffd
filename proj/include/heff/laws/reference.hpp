#pragma once

#include "heff/handler.hpp"
#include "heff/laws/specialized.hpp"

namespace heff::laws {

// Reference recursion schemes over the specialized trees, kept independent of
// the generic fold so the handler-equivalence theorems compare two distinct
// pipelines.

// fold_Alg gen alg (Var x) = gen x
// fold_Alg gen alg (Op op) = alg (fmap (fold_Alg gen alg) op)
struct AlgRefAlgebra {
  std::function<Value(const ValueFn& k)> get;                  // Get (s -> b)
  std::function<Value(const Value& s, const Value& k)> put;    // Put s b
  std::function<Value()> fail;
  std::function<Value(const Value& p, const Value& q)> or_;
};
Value fold_alg_ref(const ValueFn& gen, const AlgRefAlgebra& alg, const SAlgP& t);

// fold_Sc with endo-algebra = base algebra and return_E = eta (the same
// restriction the equivalence theorem assumes).
struct ScRefAlgebra {
  ValueFn eta;                                                // return_E
  std::function<Value(const SSc& node, const Value& body)> enter;  // enter_E, body already folded
};
Value fold_sc_ref(const ValueFn& gen, const ScRefAlgebra& alg, const SScP& t);

// fold_Par gen alg (For iters k) =
//   h_For alg (fmap (fold_Par (h_Var alg) alg) iters) (fold_Par gen alg . k)
struct ParRefAlgebra {
  ValueFn h_var;                                                        // eta
  std::function<Value(const VList& iters, const ValueFn& k)> h_for;     // folded branches, folded k
};
Value fold_par_ref(const ValueFn& gen, const ParRefAlgebra& alg, const SParP& t);

}  // namespace heff::laws
