#pragma once

#include <functional>
#include <string>

#include "heff/computation.hpp"

namespace heff {

// A fold target: a pointed semantic carrier.
//   eta       :: a -> g a         the carrier's designated unit
//   generator :: a -> g b         leaf interpretation for the outer fold
//   algebra   :: k g (g x) -> g x node interpretation; receives the node with
//                                 every continuation/inner slot already
//                                 interpreted into the carrier. The same
//                                 algebra serves the outer fold and the
//                                 inner-computation fold.
struct Handler {
  std::string name;
  ValueFn eta;
  ValueFn generator;
  std::function<Value(const Op&)> algebra;
};

// fold gen alg (Var x) = gen x
// fold gen alg (Op t)  = alg (map_inner fold2 (map_continuation (fold gen alg) t))
Value fold(const Handler& h, const Computation& m);

// fold2 (Var x) = eta x
// fold2 (Op t)  = alg (map_inner fold2 (map_continuation fold2 t))
Value fold2(const Handler& h, const Computation& m);

// Extracts the value of a fully interpreted residual computation. Throws
// UnhandledEffectError naming the leftover kind if effects remain.
Value run_closed(const Computation& m, std::string_view who = "run_closed");

}  // namespace heff
