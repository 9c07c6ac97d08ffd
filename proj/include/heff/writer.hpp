#pragma once

#include "heff/algebraic.hpp"

namespace heff {

// Decoration of a writer node's result: the inner computation produces a
// decorated continuation seed.
//   Listen w = ((->) w)        log fed to the seed
//   Pass w   = ((,) (w -> w))  modifier applied to the continuation's log
// Unknown decorations are forwarded by h_write.
class WriteDecor {
public:
  virtual ~WriteDecor() = default;
  virtual std::string_view name() const = 0;
  // Rewrites the continuation-seed positions inside the decoration.
  virtual std::shared_ptr<const WriteDecor> map(const ValueFn& f) const = 0;
};
using WriteDecorPtr = std::shared_ptr<const WriteDecor>;

class ListenDecor final : public WriteDecor {
public:
  explicit ListenDecor(ValueFn fn) : fn_(std::move(fn)) {}
  std::string_view name() const override { return "listen"; }
  WriteDecorPtr map(const ValueFn& f) const override;
  const ValueFn& fn() const { return fn_; }

private:
  ValueFn fn_;  // w -> continuation seed
};

class PassDecor final : public WriteDecor {
public:
  PassDecor(ValueFn wfn, Value seed) : wfn_(std::move(wfn)), seed_(std::move(seed)) {}
  std::string_view name() const override { return "pass"; }
  WriteDecorPtr map(const ValueFn& f) const override;
  const ValueFn& wfn() const { return wfn_; }
  const Value& seed() const { return seed_; }

private:
  ValueFn wfn_;  // w -> w
  Value seed_;   // continuation seed
};

// K^Write: Exec (f (phi a)) — an inner computation whose leaf values are
// decorations; the node's result positions sit inside those decorations.
class KWriteNode : public Op {
public:
  explicit KWriteNode(Value body) : body_(std::move(body)) {}

  std::string_view kind() const override { return "write"; }
  std::string describe() const override { return "write.exec"; }

  OpPtr map_continuation(const ValueFn& f) const override;
  OpPtr map_inner(const ValueFn& t) const override;

  const Value& body() const { return body_; }

private:
  Value body_;
};

namespace wr {

// listen body: runs body; the continuation receives (value, log-of-body).
Computation listen(const Computation& body);

// pass body: body produces (value, modifier); the modifier is applied to the
// log of the computation's continuation.
Computation pass(const Computation& body);

// reset = pass (return ((), const eps))
Computation reset(const Monoid& w);

}  // namespace wr

// h_Write over Tell + Listen/Pass (+ forwarded algebraic ops and
// decorations). Residual computation of (a, w).
Computation h_write(const Computation& m, const Monoid& w);
VPair run_write(const Computation& m, const Monoid& w);

namespace detail_write {
// Clause bodies shared with the censor handler.
Value tell_clause(const TellOp& t, const Monoid& w);
Value exec_clause(const KWriteNode& n, const Monoid& w);
}  // namespace detail_write

}  // namespace heff
