#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "heff/value.hpp"

namespace heff {

class Op;
using OpPtr = std::shared_ptr<const Op>;

// An effectful computation: either a pure leaf carrying one value, or an
// effect node. Immutable and cheap to copy; safe to share across threads.
class Computation {
public:
  static Computation pure(Value v);
  static Computation op(OpPtr node);

  bool is_pure() const { return rep_->node == nullptr; }
  const Value& value() const;
  const Op& node() const;
  const OpPtr& node_ptr() const;

private:
  struct Rep {
    Value val;
    OpPtr node;
  };
  explicit Computation(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// An effect node. Each effect kind supplies the two slot rewrites of the
// higher-order functor contract:
//   map_continuation touches only the positions the node's result type
//   occupies (post-composition for function slots, direct rewrite otherwise);
//   map_inner uniformly rewrites the internal-computation slots.
// The two act on disjoint slots; for kinds whose result positions sit inside
// the internal computation (scoped, writer, bracketing) map_continuation
// grafts into the inner tree's leaf values.
class Op {
public:
  virtual ~Op() = default;

  // Effect kind identifier ("alg", "sc", "par", "write", "lat", "res", "exc", "co").
  virtual std::string_view kind() const = 0;
  // kind plus the specific operation, for error messages.
  virtual std::string describe() const { return std::string(kind()); }

  virtual OpPtr map_continuation(const ValueFn& f) const = 0;
  virtual OpPtr map_inner(const ValueFn& t) const = 0;
};

Computation pure(Value v);
Computation op(OpPtr node);

// Monadic sequencing by structural grafting: leaves become k(v); nodes get k
// pushed into continuation slots (eager over the node just rebuilt, lazy
// inside function-valued slots). Guarded by the recursion limit below.
Computation bind(const Computation& m, const std::function<Computation(const Value&)>& k);

// bind with the value discarded ("m1 >> m2").
Computation seq(const Computation& a, const Computation& b);

// Functorial map: rewrites every leaf value by f, leaving the effect
// structure alone. f may map into a semantic carrier, not just values.
Computation fmap(const ValueFn& f, const Computation& m);

// Recursion-depth guard shared by bind/fmap/fold. Deeply left-nested binds
// (and folds of the chains they build) are the real hazard; exceeding the
// limit raises RecursionLimitError instead of exhausting the stack.
std::size_t recursion_limit();
void set_recursion_limit(std::size_t limit);

namespace detail {
struct DepthGuard {
  DepthGuard();
  ~DepthGuard();
};
}  // namespace detail

// Registered effect kinds with their slot schemas (documentation of what the
// erased slots hold; consulted by diagnostics and the law suite).
struct EffectKindInfo {
  std::string id;
  std::string slot_schema;
};
const std::vector<EffectKindInfo>& effect_kinds();

}  // namespace heff
