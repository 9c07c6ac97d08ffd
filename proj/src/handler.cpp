#include "heff/handler.hpp"

namespace heff {

Value fold(const Handler& h, const Computation& m) {
  detail::DepthGuard guard;
  if (m.is_pure()) return h.generator(m.value());
  OpPtr mapped = m.node().map_continuation(
      [&h](const Value& c) { return fold(h, c.as<Computation>("fold continuation slot")); });
  OpPtr interpreted =
      mapped->map_inner([&h](const Value& c) { return fold2(h, c.as<Computation>("fold inner slot")); });
  return h.algebra(*interpreted);
}

Value fold2(const Handler& h, const Computation& m) {
  detail::DepthGuard guard;
  if (m.is_pure()) return h.eta(m.value());
  OpPtr mapped = m.node().map_continuation(
      [&h](const Value& c) { return fold2(h, c.as<Computation>("fold2 continuation slot")); });
  OpPtr interpreted =
      mapped->map_inner([&h](const Value& c) { return fold2(h, c.as<Computation>("fold2 inner slot")); });
  return h.algebra(*interpreted);
}

Value run_closed(const Computation& m, std::string_view who) {
  if (!m.is_pure()) throw UnhandledEffectError(m.node().describe(), who);
  return m.value();
}

}  // namespace heff
