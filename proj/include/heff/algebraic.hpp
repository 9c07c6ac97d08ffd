#pragma once

#include <memory>

#include "heff/handler.hpp"
#include "heff/monoid.hpp"

namespace heff {

// Payload of an algebraic effect node: continuation slots only, never an
// inner computation. map rewrites exactly those slots (direct slots by
// application, function slots by post-composition).
class AlgOp {
public:
  virtual ~AlgOp() = default;
  virtual std::string_view name() const = 0;
  virtual std::shared_ptr<const AlgOp> map(const ValueFn& f) const = 0;
};
using AlgOpPtr = std::shared_ptr<const AlgOp>;

class KAlgNode : public Op {
public:
  explicit KAlgNode(AlgOpPtr op) : op_(std::move(op)) {}

  std::string_view kind() const override { return "alg"; }
  std::string describe() const override { return "alg." + std::string(op_->name()); }

  OpPtr map_continuation(const ValueFn& f) const override {
    return std::make_shared<KAlgNode>(op_->map(f));
  }
  // hmap k (Op x) = Op x
  OpPtr map_inner(const ValueFn&) const override { return std::make_shared<KAlgNode>(op_); }

  const AlgOp& op() const { return *op_; }
  const AlgOpPtr& op_ptr() const { return op_; }

private:
  AlgOpPtr op_;
};

Computation alg_op(AlgOpPtr op);

// --- State s ------------------------------------------------------------
// data State s a = Get (s -> a) | Put s a

struct GetOp final : AlgOp {
  explicit GetOp(ValueFn k) : k(std::move(k)) {}
  std::string_view name() const override { return "state.get"; }
  AlgOpPtr map(const ValueFn& f) const override;
  ValueFn k;
};

struct PutOp final : AlgOp {
  PutOp(Value s, Value k) : s(std::move(s)), k(std::move(k)) {}
  std::string_view name() const override { return "state.put"; }
  AlgOpPtr map(const ValueFn& f) const override;
  Value s;
  Value k;
};

namespace state {
Computation get();          // Op (Get return)
Computation put(Value s);   // Op (Put s (return ()))
}  // namespace state

// h_State: state-passing interpretation; unknown algebraic ops are forwarded
// with the current state threaded. Result: residual computation of (a, s).
Computation h_state(const Computation& m, const Value& s0);
// Convenience for programs with no effects left after h_state.
VPair run_state(const Computation& m, const Value& s0);

// --- Choice -------------------------------------------------------------
// data Choice a = Fail | Or a a

struct FailOp final : AlgOp {
  std::string_view name() const override { return "choice.fail"; }
  AlgOpPtr map(const ValueFn&) const override;
};

struct OrOp final : AlgOp {
  OrOp(Value p, Value q) : p(std::move(p)), q(std::move(q)) {}
  std::string_view name() const override { return "choice.or"; }
  AlgOpPtr map(const ValueFn& f) const override;
  Value p;
  Value q;
};

namespace nd {
Computation fail_();
Computation or_(const Computation& p, const Computation& q);
}  // namespace nd

// h_ND: all results, depth-first left-to-right. Residual computation of [a].
Computation h_nd(const Computation& m);
VList run_nd(const Computation& m);

// --- Accum m ------------------------------------------------------------
// data Accum m a = Accum m a

struct AccumOp final : AlgOp {
  AccumOp(Value m, Value k) : m(std::move(m)), k(std::move(k)) {}
  std::string_view name() const override { return "accum.accum"; }
  AlgOpPtr map(const ValueFn& f) const override;
  Value m;
  Value k;
};

namespace acc {
Computation accum(Value m);
}

// --- Tell w -------------------------------------------------------------
// data Tell w a = Tell w a

struct TellOp final : AlgOp {
  TellOp(Value w, Value k) : w(std::move(w)), k(std::move(k)) {}
  std::string_view name() const override { return "tell.tell"; }
  AlgOpPtr map(const ValueFn& f) const override;
  Value w;
  Value k;
};

namespace wr {
Computation tell(Value w);
}

// --- Ask (reader's algebraic half) ---------------------------------------

struct AskOp final : AlgOp {
  explicit AskOp(ValueFn k) : k(std::move(k)) {}
  std::string_view name() const override { return "ask.ask"; }
  AlgOpPtr map(const ValueFn& f) const override;
  ValueFn k;
};

namespace reader {
Computation ask();
}

}  // namespace heff
