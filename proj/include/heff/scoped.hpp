#pragma once

#include "heff/writer.hpp"

namespace heff {

// Scope payload of a K^Sc node. The single slot holds the scope body: an
// inner computation whose leaf values are the continuation computations
// (gamma (f a) nesting).
class ScopeOp {
public:
  virtual ~ScopeOp() = default;
  virtual std::string_view name() const = 0;
  virtual const Value& body() const = 0;
  virtual std::shared_ptr<const ScopeOp> with_body(Value body) const = 0;
};
using ScopeOpPtr = std::shared_ptr<const ScopeOp>;

class OnceOp final : public ScopeOp {
public:
  explicit OnceOp(Value body) : body_(std::move(body)) {}
  std::string_view name() const override { return "once"; }
  const Value& body() const override { return body_; }
  ScopeOpPtr with_body(Value body) const override { return std::make_shared<OnceOp>(std::move(body)); }

private:
  Value body_;
};

class LocalOp final : public ScopeOp {
public:
  LocalOp(Value env, Value body) : env_(std::move(env)), body_(std::move(body)) {}
  std::string_view name() const override { return "local"; }
  const Value& body() const override { return body_; }
  ScopeOpPtr with_body(Value body) const override {
    return std::make_shared<LocalOp>(env_, std::move(body));
  }
  const Value& env() const { return env_; }

private:
  Value env_;
  Value body_;
};

class CensorOp final : public ScopeOp {
public:
  CensorOp(ValueFn wfn, Value body) : wfn_(std::move(wfn)), body_(std::move(body)) {}
  std::string_view name() const override { return "censor"; }
  const Value& body() const override { return body_; }
  ScopeOpPtr with_body(Value body) const override {
    return std::make_shared<CensorOp>(wfn_, std::move(body));
  }
  const ValueFn& wfn() const { return wfn_; }

private:
  ValueFn wfn_;
  Value body_;
};

class KScNode : public Op {
public:
  explicit KScNode(ScopeOpPtr sc) : sc_(std::move(sc)) {}

  std::string_view kind() const override { return "sc"; }
  std::string describe() const override { return "sc." + std::string(sc_->name()); }

  // Enter (fmap (fmap f) sc): graft f over the body's leaf values.
  OpPtr map_continuation(const ValueFn& f) const override;
  // Enter (fmap t sc): interpret the body itself.
  OpPtr map_inner(const ValueFn& t) const override;

  const ScopeOp& scope() const { return *sc_; }
  const ScopeOpPtr& scope_ptr() const { return sc_; }

private:
  ScopeOpPtr sc_;
};

namespace scope {

// once body: only the first result of the nondeterministic body survives;
// the continuation runs on it.
Computation once(const Computation& body);

// local env body: body runs with the environment replaced by env; the
// continuation sees the original environment again.
Computation local(Value env, const Computation& body);

// censor_scoped f body: the log modifier f, as a scoped effect.
Computation censor_scoped(const ValueFn& wfn, const Computation& body);

}  // namespace scope

// h_Once over Choice (+sigma) and Once (+gamma). Residual computation of [a].
// once over a scope with no results raises EvalError("once: empty scope").
Computation h_once(const Computation& m);
VList run_once(const Computation& m);

// h_Censor over Tell (+sigma), Censor (+gamma) and Listen/Pass (+phi).
// Residual computation of (a, w).
Computation h_censor(const Computation& m, const Monoid& w);
VPair run_censor(const Computation& m, const Monoid& w);

}  // namespace heff
