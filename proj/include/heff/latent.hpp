#pragma once

#include <optional>
#include <vector>

#include "heff/scoped.hpp"

namespace heff {

// --- K^Lat ------------------------------------------------------------------
//
// Node (zeta p c) (l ()) (forall x. c x -> l () -> f (l x)) (l p -> a):
// an operation with a result tag p and a subcomputation arity tag c, the
// latent state, a subcomputation interpreter, and a continuation. The latent
// functor l is fixed to the identity wrapper; the slots keep their l-typed
// shape but carry the underlying values directly.

// Operation of a latent signature. Arity: NoSub has no subcomputation
// selectors, OneSub exactly one (selector 0).
class LatOp {
public:
  virtual ~LatOp() = default;
  virtual std::string_view name() const = 0;
  virtual int arity() const = 0;  // number of valid selectors
};
using LatOpPtr = std::shared_ptr<const LatOp>;

// Thunking: Thunk defers an operation (result tag Ptr, OneSub); Force runs it
// (result tag v, NoSub).
struct ThunkOp final : LatOp {
  std::string_view name() const override { return "thunking.thunk"; }
  int arity() const override { return 1; }
};
struct ForceOp final : LatOp {
  explicit ForceOp(std::int64_t p) : ptr(p) {}
  std::string_view name() const override { return "thunking.force"; }
  int arity() const override { return 0; }
  std::int64_t ptr;
};

// (selector, latent state) -> inner computation producing an l-wrapped value.
using LatSubFn = std::function<Value(int, const Value&)>;

class KLatNode : public Op {
public:
  KLatNode(LatOpPtr op, Value l, LatSubFn st, ValueFn k)
      : op_(std::move(op)), l_(std::move(l)), st_(std::move(st)), k_(std::move(k)) {}

  std::string_view kind() const override { return "lat"; }
  std::string describe() const override { return "lat." + std::string(op_->name()); }

  // hmap t (Node sub l st c) = Node sub l (fmap t . st) c
  OpPtr map_inner(const ValueFn& t) const override;
  OpPtr map_continuation(const ValueFn& f) const override;

  const LatOp& op() const { return *op_; }
  const LatOpPtr& op_ptr() const { return op_; }
  const Value& latent_state() const { return l_; }
  const LatSubFn& st() const { return st_; }
  const ValueFn& k() const { return k_; }

private:
  LatOpPtr op_;
  Value l_;
  LatSubFn st_;
  ValueFn k_;
};

namespace lat {
// thunk body: yields a store pointer; the body is deferred.
Computation thunk(const Computation& body);
// force p: yields the thunk's value; out-of-range pointers raise
// EvalError("dangling thunk pointer").
Computation force_(std::int64_t p);
}  // namespace lat

// --- Semantic domain ---------------------------------------------------------

struct LazyResult;

// A store entry: a suspended subcomputation interpreter (applied to the
// forcing node's latent state) or a memoized value.
struct ThunkEntry {
  std::function<Value(const Value& l)> suspended;  // l -> carrier
  std::optional<Value> memo;
  bool memoized() const { return memo.has_value(); }
};
using ThunkStore = std::vector<ThunkEntry>;

// StateL ((s, th), result): final state, thunk store and program result.
struct LazyResult {
  Value state;
  ThunkStore store;
  Value result;
};

// Lazily-indexed environment entry: evaluation (and bounds checking) deferred
// until the entry is demanded, mirroring call-by-need environments.
class LazyCell {
public:
  explicit LazyCell(std::function<Value()> compute) : compute_(std::move(compute)) {}
  const Value& force() const;

private:
  std::function<Value()> compute_;
  mutable std::optional<Value> memo_;
};
using LazyCellPtr = std::shared_ptr<LazyCell>;

// Environments are lists of entries; an entry is a ground value or a LazyCell.
Value env_entry(const Value& env, std::int64_t index);  // deferred env !! index
Value force_entry(const Value& entry);

// --- Lambda-calculus values and constructors ----------------------------------

// data V = Val Int | Abs (Expr V V)
struct Vnum {
  std::int64_t n;
};
struct Vabs {
  Computation body;
};

namespace lam {
Computation var_(std::int64_t x);                       // ask >>= \nv -> local [nv !! x] (force 0)
Computation abs_(const Computation& body);              // return (Abs body)
Computation app(const Computation& e1, const Computation& e2);
}  // namespace lam

// --- Handlers -----------------------------------------------------------------

// Call-by-need with memoization: Thunk defers (the store grows by one
// suspended entry), Force evaluates at most once and memoizes in place.
LazyResult h_lazy(const Computation& m, const Value& s0, const Value& nv0, const ThunkStore& th0);

// Call-by-value: Thunk evaluates immediately and stores the value; Force on a
// suspended entry raises EvalError("unevaluated thunk in eager mode").
LazyResult h_eager(const Computation& m, const Value& s0, const Value& nv0, const ThunkStore& th0);

std::string render_store(const ThunkStore& th);  // "[Left <thunk>,Right 5]"
std::string render_v(const Value& v);            // Val n -> "n", Abs -> "<abs>"

}  // namespace heff
