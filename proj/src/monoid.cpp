#include "heff/monoid.hpp"

#include <map>
#include <mutex>

namespace heff {

const Monoid& text_concat() {
  static const Monoid m{
      "text-concat", from_string(""),
      [](const Value& a, const Value& b) {
        return from_string(a.as<std::string>("text-concat lhs") + b.as<std::string>("text-concat rhs"));
      }};
  return m;
}

const Monoid& int_sum() {
  static const Monoid m{
      "int-sum", from_int(0),
      [](const Value& a, const Value& b) {
        return from_int(a.as<std::int64_t>("int-sum lhs") + b.as<std::int64_t>("int-sum rhs"));
      }};
  return m;
}

namespace {
std::map<std::string, Monoid>& registry() {
  static std::map<std::string, Monoid> r{{"text-concat", text_concat()}, {"int-sum", int_sum()}};
  return r;
}
std::mutex g_mutex;
}  // namespace

void register_monoid(Monoid m) {
  std::lock_guard<std::mutex> lock(g_mutex);
  registry()[m.id] = std::move(m);
}

const Monoid& find_monoid(const std::string& id) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = registry().find(id);
  if (it == registry().end()) throw Error("no registered monoid '" + id + "'");
  return it->second;
}

}  // namespace heff
