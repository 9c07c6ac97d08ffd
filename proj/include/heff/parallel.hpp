#pragma once

#include <vector>

#include "heff/algebraic.hpp"

namespace heff {

// K^Par: For (rho (f b)) (rho b -> a) — an ordered collection of inner
// computations over one erased branch type, and a continuation taking the
// collected branch values. rho is fixed to ordered collections.
class KParNode : public Op {
public:
  KParNode(VList iters, ValueFn k) : iters_(std::move(iters)), k_(std::move(k)) {}

  std::string_view kind() const override { return "par"; }
  std::string describe() const override { return "par.for"; }

  // hmap k (For iters c) = For (fmap k iters) c
  OpPtr map_inner(const ValueFn& t) const override;
  OpPtr map_continuation(const ValueFn& f) const override;

  const VList& iters() const { return iters_; }
  const ValueFn& k() const { return k_; }

private:
  VList iters_;  // inner computations (or carriers, once interpreted)
  ValueFn k_;    // VList of branch values -> result position
};

namespace par {
// One For node whose continuation returns the collected results.
Computation for_(const std::vector<Computation>& iters);
}  // namespace par

// h_Accum over Accum (+sigma) and For. Residual computation of (m, a): each
// branch's accumulation is collected and folded in iteration order, prepended
// to the continuation's accumulation.
//
// With parallel_branches set, closed branches are evaluated on a thread pool;
// the result is observationally identical and the flag is off by default.
Computation h_accum(const Computation& m, const Monoid& monoid, bool parallel_branches = false);
VPair run_accum(const Computation& m, const Monoid& monoid, bool parallel_branches = false);

}  // namespace heff
