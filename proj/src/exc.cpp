#include "heff/exc.hpp"

namespace heff {
namespace exc {

OpPtr ThrowNode::map_continuation(const ValueFn&) const { return std::make_shared<ThrowNode>(); }
OpPtr ThrowNode::map_inner(const ValueFn&) const { return std::make_shared<ThrowNode>(); }

OpPtr CatchNode::map_continuation(const ValueFn& f) const {
  ValueFn k = k_;
  return std::make_shared<CatchNode>(body_, [f, k](const Value& mb) { return f(k(mb)); });
}

OpPtr CatchNode::map_inner(const ValueFn& t) const {
  return std::make_shared<CatchNode>(t(body_), k_);
}

Computation throw_() { return op(std::make_shared<ThrowNode>()); }

Computation catch_(const Computation& inner, const std::function<Computation(const VOpt&)>& k) {
  return op(std::make_shared<CatchNode>(Value::of(inner), [k](const Value& mb) {
    return Value::of(k(mb.as<VOpt>("exc.catch continuation input")));
  }));
}

VOpt h_exc(const Computation& m) {
  Handler h;
  h.name = "h_exc";
  h.eta = [](const Value& v) { return some(v); };
  h.generator = h.eta;
  h.algebra = [&h](const Op& n) -> Value {
    if (dynamic_cast<const ThrowNode*>(&n)) return none();
    if (const auto* c = dynamic_cast<const CatchNode*>(&n)) return c->k()(c->body());
    throw UnhandledEffectError(n.describe(), h.name);
  };
  return fold(h, m).as<VOpt>("h_exc result");
}

}  // namespace exc
}  // namespace heff
