#pragma once

#include <functional>
#include <string>

#include "heff/value.hpp"

namespace heff {

// (carrier, <>, eps) with associativity and unit laws. Log and accumulator
// domains are erased; the monoid supplies the combine and the identity.
struct Monoid {
  std::string id;
  Value eps;
  std::function<Value(const Value&, const Value&)> combine;
};

const Monoid& text_concat();  // eps = ""
const Monoid& int_sum();      // eps = 0

void register_monoid(Monoid m);
const Monoid& find_monoid(const std::string& id);

}  // namespace heff
