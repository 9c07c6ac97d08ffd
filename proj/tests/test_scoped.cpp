#include <doctest.h>

#include "heff/scoped.hpp"

using namespace heff;

namespace {

const Monoid& W = text_concat();

Computation reti(std::int64_t n) { return pure(from_int(n)); }

// or (return 1) (return 5) continued with \x -> or (return x) (return (x+1))
Computation branch_then_widen(bool with_once) {
  Computation head = nd::or_(reti(1), reti(5));
  Computation scoped = with_once ? scope::once(head) : head;
  return bind(scoped, [](const Value& x) {
    return nd::or_(pure(x), reti(x.as<std::int64_t>() + 1));
  });
}

ValueFn uppercase() {
  return [](const Value& w) {
    std::string s = w.as<std::string>();
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return from_string(s);
  };
}

}  // namespace

TEST_CASE("once keeps only the first result of its scope") {
  REQUIRE(render(Value::of(run_once(branch_then_widen(true)))) == "[1,2]");
  REQUIRE(render(Value::of(run_once(branch_then_widen(false)))) == "[1,2,5,6]");
}

TEST_CASE("once over a pure scope is that value") {
  Computation m = bind(scope::once(reti(7)), [](const Value& x) { return pure(x); });
  VList out = run_once(m);
  REQUIRE(out.size() == 1);
  REQUIRE(deep_equal(out[0], from_int(7)));
}

TEST_CASE("once over an all-fail scope is a defined error") {
  REQUIRE_THROWS_AS(run_once(scope::once(nd::fail_())), EvalError);
}

TEST_CASE("once is idempotent observationally") {
  Computation base = nd::or_(reti(1), nd::or_(reti(2), reti(3)));
  Computation one = bind(scope::once(base), [](const Value& x) {
    return nd::or_(pure(x), reti(x.as<std::int64_t>() + 10));
  });
  Computation two = bind(scope::once(scope::once(base)), [](const Value& x) {
    return nd::or_(pure(x), reti(x.as<std::int64_t>() + 10));
  });
  REQUIRE(deep_equal(Value::of(run_once(one)), Value::of(run_once(two))));
}

TEST_CASE("h_once without once agrees with h_nd") {
  Computation trees[] = {
      nd::or_(reti(1), nd::or_(reti(2), nd::fail_())),
      nd::or_(nd::fail_(), nd::or_(reti(9), reti(4))),
      bind(nd::or_(reti(1), reti(2)), [](const Value& x) {
        return nd::or_(pure(x), reti(x.as<std::int64_t>() * 3));
      }),
  };
  for (const Computation& m : trees)
    REQUIRE(deep_equal(Value::of(run_once(m)), Value::of(run_nd(m))));
}

TEST_CASE("censor: the worked reset example") {
  // tell "post" >> censor (const eps) (return ()) >> tell "pre"
  Computation reset_c = scope::censor_scoped([](const Value&) { return from_string(""); },
                                             pure(unit()));
  Computation m = seq(wr::tell(from_string("post")), seq(reset_c, wr::tell(from_string("pre"))));
  VPair out = run_censor(m, W);
  REQUIRE(render(pair(out.first, out.second)) == "((),\"post\")");
}

TEST_CASE("censor applies its modifier to the continuation's log") {
  // The modifier hits the log of the rest of the program, and the scope
  // body's own log is dropped; hand-running the algebra on
  // censor uppercase (tell "ab") gives ((), "") since nothing follows.
  VPair alone = run_censor(scope::censor_scoped(uppercase(), wr::tell(from_string("ab"))), W);
  REQUIRE(deep_equal(alone.first, unit()));
  REQUIRE(deep_equal(alone.second, from_string("")));

  Computation m = seq(scope::censor_scoped(uppercase(), pure(unit())), wr::tell(from_string("ab")));
  VPair with_rest = run_censor(m, W);
  REQUIRE(deep_equal(with_rest.second, from_string("AB")));
}

TEST_CASE("censor over a pure value with the identity modifier is transparent") {
  ValueFn ident = [](const Value& w) { return w; };
  Computation m = seq(scope::censor_scoped(ident, pure(unit())), wr::tell(from_string("xy")));
  VPair out = run_censor(m, W);
  REQUIRE(deep_equal(out.second, from_string("xy")));
  VPair plain = run_censor(wr::tell(from_string("xy")), W);
  REQUIRE(deep_equal(plain.second, out.second));
}

TEST_CASE("nested censors: the inner modifier's output is dropped by the outer") {
  // Hand-running the algebra: the outer clause binds (mx, _) <- k, so the
  // inner censor's modified log lands in the discarded position and only the
  // outer modifier reaches the surviving continuation log.
  ValueFn add_a = [](const Value& w) { return from_string(w.as<std::string>() + "a"); };
  ValueFn add_b = [](const Value& w) { return from_string(w.as<std::string>() + "b"); };

  Computation nested = seq(
      scope::censor_scoped(add_a, scope::censor_scoped(add_b, pure(unit()))),
      wr::tell(from_string("w")));
  Computation outer_only = seq(scope::censor_scoped(add_a, pure(unit())), wr::tell(from_string("w")));
  VPair lhs = run_censor(nested, W);
  VPair rhs = run_censor(outer_only, W);
  REQUIRE(deep_equal(lhs.second, from_string("wa")));
  REQUIRE(deep_equal(lhs.second, rhs.second));
}

TEST_CASE("reset via pass and censor agree on the worked example") {
  Computation via_pass = seq(wr::tell(from_string("post")),
                             seq(wr::reset(W), wr::tell(from_string("pre"))));
  Computation via_censor =
      seq(wr::tell(from_string("post")),
          seq(scope::censor_scoped([](const Value&) { return from_string(""); }, pure(unit())),
              wr::tell(from_string("pre"))));
  VPair a = run_censor(via_pass, W);
  VPair b = run_censor(via_censor, W);
  REQUIRE(deep_equal(a.first, b.first));
  REQUIRE(deep_equal(a.second, b.second));
  REQUIRE(deep_equal(a.second, from_string("post")));
}

TEST_CASE("h_once forwards unknown scoped effects by redistributing results") {
  // once (or 1 2) >>= \x -> censor-scoped id (return x), handled by h_once
  // then by h_censor: the censor scope survives h_once as a forwarded node.
  ValueFn ident = [](const Value& w) { return w; };
  Computation m = bind(scope::once(nd::or_(reti(1), reti(2))), [ident](const Value& x) {
    return scope::censor_scoped(ident, pure(x));
  });
  Computation residual = h_once(m);
  VPair out = run_censor(residual, W);
  REQUIRE(render(pair(out.first, out.second)) == "([1],\"\")");
}

TEST_CASE("nested censor composition under both handlers stays consistent") {
  ValueFn ident = [](const Value& w) { return w; };
  Computation m = seq(scope::censor_scoped(ident, pure(unit())), wr::tell(from_string("z")));
  VPair direct = run_censor(m, W);
  REQUIRE(deep_equal(direct.second, from_string("z")));
}
