#include "heff/computation.hpp"

namespace heff {

namespace {
thread_local std::size_t g_depth = 0;
std::size_t g_limit = 100000;  // documented default; see README
}  // namespace

std::size_t recursion_limit() { return g_limit; }
void set_recursion_limit(std::size_t limit) { g_limit = limit; }

namespace detail {
DepthGuard::DepthGuard() {
  if (++g_depth > g_limit) {
    --g_depth;
    throw RecursionLimitError("recursion limit (" + std::to_string(g_limit) +
                              ") exceeded while traversing a computation");
  }
}
DepthGuard::~DepthGuard() { --g_depth; }
}  // namespace detail

Computation Computation::pure(Value v) {
  return Computation(std::make_shared<const Rep>(Rep{std::move(v), nullptr}));
}

Computation Computation::op(OpPtr node) {
  return Computation(std::make_shared<const Rep>(Rep{Value(), std::move(node)}));
}

const Value& Computation::value() const {
  if (rep_->node) throw Error("value() on an effect node (" + rep_->node->describe() + ")");
  return rep_->val;
}

const Op& Computation::node() const {
  if (!rep_->node) throw Error("node() on a pure computation");
  return *rep_->node;
}

const OpPtr& Computation::node_ptr() const {
  if (!rep_->node) throw Error("node_ptr() on a pure computation");
  return rep_->node;
}

Computation pure(Value v) { return Computation::pure(std::move(v)); }
Computation op(OpPtr node) { return Computation::op(std::move(node)); }

Computation bind(const Computation& m, const std::function<Computation(const Value&)>& k) {
  detail::DepthGuard guard;
  if (m.is_pure()) return k(m.value());
  return Computation::op(m.node().map_continuation(
      [k](const Value& c) { return Value::of(bind(c.as<Computation>("bind continuation slot"), k)); }));
}

Computation seq(const Computation& a, const Computation& b) {
  return bind(a, [b](const Value&) { return b; });
}

Computation fmap(const ValueFn& f, const Computation& m) {
  return bind(m, [f](const Value& v) { return Computation::pure(f(v)); });
}

const std::vector<EffectKindInfo>& effect_kinds() {
  static const std::vector<EffectKindInfo> kinds = {
      {"alg", "operation payload with continuation slots only; no inner-computation slots"},
      {"sc", "scope payload; one inner computation whose leaf values are continuation computations"},
      {"par", "ordered inner computations sharing one erased branch type; continuation takes the "
              "collected branch values"},
      {"write", "one inner computation whose leaf values are decorations (log-reader function, "
                "modifier/seed pair, or a forwarded decoration)"},
      {"lat", "operation with result tag and subcomputation arity; latent state; subcomputation "
              "interpreter over (selector, latent state); continuation from decorated result"},
      {"res", "one inner computation producing a (release, use) pair of computations; continuations "
              "live in the use side's leaves"},
      {"exc", "throw (no slots) or catch (inner computation plus continuation from optional value)"},
      {"co", "left/right injection around a summand node"},
  };
  return kinds;
}

}  // namespace heff
