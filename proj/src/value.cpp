#include "heff/value.hpp"

#include <cxxabi.h>

#include <cstdlib>
#include <sstream>

namespace heff {

namespace detail {
std::string demangle(const char* name) {
  int status = 0;
  char* out = abi::__cxa_demangle(name, nullptr, nullptr, &status);
  if (status != 0 || out == nullptr) return name;
  std::string s(out);
  std::free(out);
  return s;
}
}  // namespace detail

Value::Value() : payload_(Unit{}) {}

bool deep_equal(const Value& a, const Value& b) {
  if (a.as_if<Unit>()) return b.as_if<Unit>() != nullptr;
  if (const auto* x = a.as_if<bool>()) {
    const auto* y = b.as_if<bool>();
    return y && *x == *y;
  }
  if (const auto* x = a.as_if<std::int64_t>()) {
    const auto* y = b.as_if<std::int64_t>();
    return y && *x == *y;
  }
  if (const auto* x = a.as_if<std::string>()) {
    const auto* y = b.as_if<std::string>();
    return y && *x == *y;
  }
  if (const auto* x = a.as_if<VChar>()) {
    const auto* y = b.as_if<VChar>();
    return y && x->c == y->c;
  }
  if (const auto* x = a.as_if<VPair>()) {
    const auto* y = b.as_if<VPair>();
    return y && deep_equal(x->first, y->first) && deep_equal(x->second, y->second);
  }
  if (const auto* x = a.as_if<VList>()) {
    const auto* y = b.as_if<VList>();
    if (!y || x->size() != y->size()) return false;
    for (std::size_t i = 0; i < x->size(); ++i)
      if (!deep_equal((*x)[i], (*y)[i])) return false;
    return true;
  }
  if (const auto* x = a.as_if<VOpt>()) {
    const auto* y = b.as_if<VOpt>();
    if (!y) return false;
    if (x->v.has_value() != y->v.has_value()) return false;
    return !x->v.has_value() || deep_equal(*x->v, *y->v);
  }
  throw TagError("deep_equal over non-ground value of tag " + a.tag());
}

namespace {
void escape_into(std::ostream& os, const std::string& s) {
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default: os << c;
    }
  }
}
}  // namespace

std::string render(const Value& v) {
  std::ostringstream os;
  if (v.as_if<Unit>()) {
    os << "()";
  } else if (const auto* b = v.as_if<bool>()) {
    os << (*b ? "True" : "False");
  } else if (const auto* n = v.as_if<std::int64_t>()) {
    os << *n;
  } else if (const auto* s = v.as_if<std::string>()) {
    os << '"';
    escape_into(os, *s);
    os << '"';
  } else if (const auto* c = v.as_if<VChar>()) {
    os << '\'' << c->c << '\'';
  } else if (const auto* p = v.as_if<VPair>()) {
    os << '(' << render(p->first) << ',' << render(p->second) << ')';
  } else if (const auto* xs = v.as_if<VList>()) {
    os << '[';
    for (std::size_t i = 0; i < xs->size(); ++i) {
      if (i) os << ',';
      os << render((*xs)[i]);
    }
    os << ']';
  } else if (const auto* o = v.as_if<VOpt>()) {
    if (o->v)
      os << "Just " << render(*o->v);
    else
      os << "Nothing";
  } else {
    os << '<' << v.tag() << '>';
  }
  return os.str();
}

}  // namespace heff
