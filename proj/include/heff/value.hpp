#pragma once

#include <any>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heff {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when an erased value is read at the wrong type. Never silent
// corruption: the message names the expected type, the actual tag and the
// slot/kind context the caller supplied.
class TagError : public Error {
public:
  using Error::Error;
};

class RecursionLimitError : public Error {
public:
  using Error::Error;
};

class UnhandledEffectError : public Error {
public:
  UnhandledEffectError(std::string_view kind, std::string_view handler)
      : Error("unhandled effect kind '" + std::string(kind) + "' reached handler '" +
              std::string(handler) + "'"),
        kind_(kind) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

// Runtime failures of the interpreted programs themselves (empty once-scope,
// dangling thunk pointer, unbound variable, ...).
class EvalError : public Error {
public:
  using Error::Error;
};

namespace detail {
std::string demangle(const char* name);
}

// A dynamically tagged value. Continuations and effect payload slots are
// universally quantified in the underlying theory; Value is the erased stand-in.
// Reading at the wrong type throws TagError.
class Value {
public:
  Value();  // unit

  template <class T>
  static Value of(T v) {
    Value out;
    out.payload_ = std::move(v);
    return out;
  }

  template <class T>
  const T& as(std::string_view context = {}) const {
    if (const T* p = std::any_cast<T>(&payload_)) return *p;
    throw TagError("value tag mismatch" + (context.empty() ? std::string() : " at " + std::string(context)) +
                   ": expected " + detail::demangle(typeid(T).name()) + ", got " + tag());
  }

  template <class T>
  const T* as_if() const noexcept {
    return std::any_cast<T>(&payload_);
  }

  std::string tag() const { return detail::demangle(payload_.type().name()); }

private:
  std::any payload_;
};

using ValueFn = std::function<Value(const Value&)>;

// Ground data constructors shared across effect families.
struct Unit {};
struct VPair {
  Value first;
  Value second;
};
using VList = std::vector<Value>;
struct VOpt {
  std::optional<Value> v;
};
struct VChar {
  char c;
};

inline Value unit() { return Value::of(Unit{}); }
inline Value from_int(std::int64_t n) { return Value::of(n); }
inline Value from_bool(bool b) { return Value::of(b); }
inline Value from_string(std::string s) { return Value::of(std::move(s)); }
inline Value from_char(char c) { return Value::of(VChar{c}); }
inline Value pair(Value a, Value b) { return Value::of(VPair{std::move(a), std::move(b)}); }
inline Value list(VList xs) { return Value::of(std::move(xs)); }
inline Value some(Value v) { return Value::of(VOpt{std::move(v)}); }
inline Value none() { return Value::of(VOpt{}); }

// Deep equality over ground data (unit, bool, int, string, char, pair, list,
// optional). Function-valued or computation-valued payloads are not ground;
// comparing them throws.
bool deep_equal(const Value& a, const Value& b);

// show-style rendering: pairs "(a,b)", lists "[x,y]", optionals "Just v" /
// "Nothing", strings quoted, chars single-quoted.
std::string render(const Value& v);

}  // namespace heff
