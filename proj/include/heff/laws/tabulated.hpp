#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "heff/value.hpp"

namespace heff::laws {

// An enumerated slot domain. Continuation slots in law-test trees are finite
// lookup tables over these domains, making extensional equality decidable.
struct Dom {
  std::string id;
  VList values;
};
using DomPtr = std::shared_ptr<const Dom>;

DomPtr dom_ints();    // 0..3
DomPtr dom_ints2();   // 0..1
DomPtr dom_bools();   // False, True
DomPtr dom_maybe();   // Nothing, Just 0..2
DomPtr dom_unit();    // ()

// All collections of the given length over base (len <= 2 keeps sizes <= 4).
DomPtr dom_vectors(const DomPtr& base, std::size_t len);

// A total finite mapping: out[i] corresponds to dom->values[i]. Applying a
// table at a value outside its domain throws; tabulation stays faithful by
// construction.
struct Table {
  DomPtr dom;
  std::vector<Value> out;

  Value apply(const Value& in) const;
  ValueFn fn() const;  // the table as an opaque function
};

std::size_t dom_index(const Dom& dom, const Value& v);

}  // namespace heff::laws
