#pragma once

#include <functional>

#include "heff/computation.hpp"

namespace heff {

// Binary coproduct of effect signatures. n-ary composition right-nests:
// A + (B + C) with injections inl(a), inr(inl(b)), inr(inr(c)).
class CoproductNode : public Op {
public:
  CoproductNode(bool left, OpPtr inner) : left_(left), inner_(std::move(inner)) {}

  std::string_view kind() const override { return "co"; }
  std::string describe() const override { return (left_ ? "co.in(" : "co.out(") + inner_->describe() + ")"; }

  OpPtr map_continuation(const ValueFn& f) const override;
  OpPtr map_inner(const ValueFn& t) const override;

  bool left() const { return left_; }
  const OpPtr& inner() const { return inner_; }

private:
  bool left_;
  OpPtr inner_;
};

OpPtr inl(OpPtr node);
OpPtr inr(OpPtr node);

// The separator: dispatches an algebra over a coproduct node by side.
// Exhaustive over {left, right}; anything that is not a coproduct node is a
// caller error and throws.
std::function<Value(const Op&)> case_split(std::function<Value(const Op&)> l,
                                           std::function<Value(const Op&)> r);

// Unwraps any nesting of coproduct injections around a node. Handlers
// dispatch on the underlying effect kind, so explicitly injected programs and
// bare ones interpret identically.
const Op& strip_coproduct(const Op& n);

}  // namespace heff
