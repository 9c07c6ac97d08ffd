#include <doctest.h>
#include <pthread.h>

#include "heff/algebraic.hpp"
#include "heff/coproduct.hpp"
#include "heff/exc.hpp"
#include "heff/handler.hpp"

using namespace heff;

namespace {

Computation show_int(const Value& v) {
  return pure(from_string(std::to_string(v.as<std::int64_t>())));
}

// prog x = catch (if x >= 0 then return x else throw) k
//   where k Nothing  = return "Too small"
//         k (Just v) = return (show v)
Computation prog_exc(std::int64_t x) {
  Computation inner = x >= 0 ? pure(from_int(x)) : exc::throw_();
  return exc::catch_(inner, [](const VOpt& mb) {
    if (!mb.v) return pure(from_string("Too small"));
    return show_int(*mb.v);
  });
}

}  // namespace

TEST_CASE("pure folds through the generator") {
  Handler h;
  h.name = "wrap";
  h.eta = [](const Value& v) { return some(v); };
  h.generator = h.eta;
  h.algebra = [](const Op& n) -> Value { throw UnhandledEffectError(n.describe(), "wrap"); };
  for (std::int64_t i = -50; i < 50; ++i) {
    Value out = fold(h, pure(from_int(i)));
    REQUIRE(deep_equal(out.as<VOpt>().v.value(), from_int(i)));
  }
}

TEST_CASE("bind: left identity on leaves") {
  Computation m = bind(pure(from_int(3)), [](const Value& v) {
    return pure(from_int(v.as<std::int64_t>() + 1));
  });
  REQUIRE(m.is_pure());
  REQUIRE(deep_equal(m.value(), from_int(4)));

  Computation s = bind(pure(from_string("x")), [](const Value& v) { return pure(v); });
  REQUIRE(deep_equal(s.value(), from_string("x")));
}

TEST_CASE("exceptions: catch feeds Nothing on throw, Just otherwise") {
  VOpt pos = exc::h_exc(prog_exc(5));
  REQUIRE(pos.v.has_value());
  REQUIRE(deep_equal(*pos.v, from_string("5")));

  VOpt neg = exc::h_exc(prog_exc(-5));
  REQUIRE(neg.v.has_value());
  REQUIRE(deep_equal(*neg.v, from_string("Too small")));

  VOpt plain = exc::h_exc(pure(from_int(9)));
  REQUIRE(deep_equal(*plain.v, from_int(9)));
}

TEST_CASE("catch over a pure inner computation passes Just") {
  Computation m = exc::catch_(pure(from_int(7)), [](const VOpt& mb) {
    REQUIRE(mb.v.has_value());
    return pure(*mb.v);
  });
  REQUIRE(deep_equal(*exc::h_exc(m).v, from_int(7)));
}

TEST_CASE("unhandled effect names the kind") {
  Computation m = state::get();
  try {
    exc::h_exc(m);
    FAIL("expected UnhandledEffectError");
  } catch (const UnhandledEffectError& e) {
    REQUIRE(std::string(e.what()).find("alg.state.get") != std::string::npos);
  }
}

TEST_CASE("coproduct: case_split dispatches on injection and round-trips") {
  OpPtr fail_node = std::make_shared<KAlgNode>(std::make_shared<FailOp>());
  auto l = [](const Op& n) { return from_string("L:" + n.describe()); };
  auto r = [](const Op& n) { return from_string("R:" + n.describe()); };
  auto split = case_split(l, r);

  REQUIRE(deep_equal(split(*inl(fail_node)), from_string("L:alg.choice.fail")));
  REQUIRE(deep_equal(split(*inr(fail_node)), from_string("R:alg.choice.fail")));

  // Nested, three summands right-nested: A + (B + C).
  auto tag = [](const std::string& s) {
    return [s](const Op&) { return from_string(s); };
  };
  auto nested = case_split(tag("A"), case_split(tag("B"), tag("C")));
  REQUIRE(deep_equal(nested(*inl(fail_node)), from_string("A")));
  REQUIRE(deep_equal(nested(*inr(inl(fail_node))), from_string("B")));
  REQUIRE(deep_equal(nested(*inr(inr(fail_node))), from_string("C")));

  REQUIRE_THROWS_AS(split(*fail_node), Error);
  REQUIRE(&strip_coproduct(*inr(inl(fail_node))) == fail_node.get());
}

TEST_CASE("coproduct-wrapped programs interpret like bare ones") {
  Computation wrapped = op(inl(std::make_shared<KAlgNode>(std::make_shared<OrOp>(
      Value::of(pure(from_int(1))), Value::of(pure(from_int(2)))))));
  VList out = run_nd(wrapped);
  REQUIRE(out.size() == 2);
  REQUIRE(deep_equal(out[0], from_int(1)));
  REQUIRE(deep_equal(out[1], from_int(2)));
}

TEST_CASE("recursion guard raises a defined error instead of overflowing") {
  std::size_t saved = recursion_limit();
  set_recursion_limit(2000);
  Computation chain = pure(unit());
  for (int i = 0; i < 3000; ++i)
    chain = op(std::make_shared<KAlgNode>(std::make_shared<PutOp>(from_int(i), Value::of(chain))));
  REQUIRE_THROWS_AS(bind(chain, [](const Value&) { return pure(unit()); }), RecursionLimitError);
  set_recursion_limit(saved);
}

namespace {
void* default_limit_probe(void*) {
  // A chain deeper than the default limit: the guard must fire before the
  // machine stack gives out.
  Computation chain = Computation::pure(unit());
  for (std::size_t i = 0; i < recursion_limit() + 10; ++i)
    chain = op(std::make_shared<KAlgNode>(std::make_shared<PutOp>(from_int(0), Value::of(chain))));
  bool guarded = false;
  try {
    bind(chain, [](const Value&) { return pure(unit()); });
  } catch (const RecursionLimitError&) {
    guarded = true;
  }
  auto* out = new bool(guarded);
  // Leave the chain to be destroyed here, on the big stack.
  chain = Computation::pure(unit());
  return out;
}
}  // namespace

TEST_CASE("default recursion limit trips before the stack does") {
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, 512u * 1024u * 1024u);
  pthread_t thread;
  REQUIRE(pthread_create(&thread, &attr, default_limit_probe, nullptr) == 0);
  void* result = nullptr;
  pthread_join(thread, &result);
  pthread_attr_destroy(&attr);
  bool* guarded = static_cast<bool*>(result);
  REQUIRE(guarded != nullptr);
  CHECK(*guarded);
  delete guarded;
}

TEST_CASE("value: tag mismatch is a defined error naming the context") {
  Value v = from_int(3);
  try {
    v.as<std::string>("alg.state.put slot s");
    FAIL("expected TagError");
  } catch (const TagError& e) {
    std::string msg = e.what();
    REQUIRE(msg.find("alg.state.put slot s") != std::string::npos);
  }
}

TEST_CASE("render follows the printed conventions") {
  REQUIRE(render(pair(from_int(5), from_int(1))) == "(5,1)");
  REQUIRE(render(pair(unit(), from_string("post"))) == "((),\"post\")");
  REQUIRE(render(list(VList{from_int(1), from_int(2), from_int(3)})) == "[1,2,3]");
  REQUIRE(render(some(from_string("5"))) == "Just \"5\"");
  REQUIRE(render(none()) == "Nothing");
  REQUIRE(render(pair(from_char('H'), from_char('E'))) == "('H','E')");
}

TEST_CASE("effect kind registry lists every built-in kind") {
  const auto& kinds = effect_kinds();
  std::vector<std::string> ids;
  for (const auto& k : kinds) ids.push_back(k.id);
  for (const char* want : {"alg", "sc", "par", "write", "lat", "res", "exc", "co"})
    REQUIRE(std::find(ids.begin(), ids.end(), want) != ids.end());
}
