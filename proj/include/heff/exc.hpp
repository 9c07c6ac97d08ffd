#pragma once

#include "heff/handler.hpp"

namespace heff {
namespace exc {

// data Exc f r = Throw | forall a. Catch (f a) (Maybe a -> r)
class ThrowNode : public Op {
public:
  std::string_view kind() const override { return "exc"; }
  std::string describe() const override { return "exc.throw"; }
  OpPtr map_continuation(const ValueFn&) const override;
  OpPtr map_inner(const ValueFn&) const override;
};

class CatchNode : public Op {
public:
  CatchNode(Value body, ValueFn k) : body_(std::move(body)), k_(std::move(k)) {}
  std::string_view kind() const override { return "exc"; }
  std::string describe() const override { return "exc.catch"; }
  OpPtr map_continuation(const ValueFn& f) const override;
  OpPtr map_inner(const ValueFn& t) const override;

  const Value& body() const { return body_; }
  const ValueFn& k() const { return k_; }

private:
  Value body_;  // inner computation (erased result type)
  ValueFn k_;   // VOpt -> continuation
};

Computation throw_();

// catch_'s continuation receives Nothing when the inner computation threw,
// Just v otherwise.
Computation catch_(const Computation& inner, const std::function<Computation(const VOpt&)>& k);

// h_Exc = fold Just alg; alg Throw = Nothing, alg (Catch c k) = k c
VOpt h_exc(const Computation& m);

}  // namespace exc
}  // namespace heff
