#include "heff/laws/tabulated.hpp"

namespace heff::laws {

namespace {
DomPtr make_dom(std::string id, VList values) {
  return std::make_shared<const Dom>(Dom{std::move(id), std::move(values)});
}
}  // namespace

DomPtr dom_ints() {
  static const DomPtr d = make_dom("ints", {from_int(0), from_int(1), from_int(2), from_int(3)});
  return d;
}

DomPtr dom_ints2() {
  static const DomPtr d = make_dom("ints2", {from_int(0), from_int(1)});
  return d;
}

DomPtr dom_bools() {
  static const DomPtr d = make_dom("bools", {from_bool(false), from_bool(true)});
  return d;
}

DomPtr dom_maybe() {
  static const DomPtr d =
      make_dom("maybe", {none(), some(from_int(0)), some(from_int(1)), some(from_int(2))});
  return d;
}

DomPtr dom_unit() {
  static const DomPtr d = make_dom("unit", {unit()});
  return d;
}

DomPtr dom_vectors(const DomPtr& base, std::size_t len) {
  VList values;
  if (len == 0) {
    values.push_back(list(VList{}));
  } else {
    DomPtr shorter = dom_vectors(base, len - 1);
    for (const Value& prefix : shorter->values) {
      for (const Value& last : base->values) {
        VList xs = prefix.as<VList>();
        xs.push_back(last);
        values.push_back(list(std::move(xs)));
      }
    }
  }
  return make_dom(base->id + "^" + std::to_string(len), std::move(values));
}

std::size_t dom_index(const Dom& dom, const Value& v) {
  for (std::size_t i = 0; i < dom.values.size(); ++i)
    if (deep_equal(dom.values[i], v)) return i;
  throw TagError("value " + render(v) + " outside table domain '" + dom.id + "'");
}

Value Table::apply(const Value& in) const { return out.at(dom_index(*dom, in)); }

ValueFn Table::fn() const {
  Table t = *this;
  return [t](const Value& in) { return t.apply(in); };
}

}  // namespace heff::laws
