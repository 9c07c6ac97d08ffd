#include <doctest.h>

#include "heff/writer.hpp"

using namespace heff;

namespace {
const Monoid& W = text_concat();

Computation tellv(const char* s) { return wr::tell(from_string(s)); }
}  // namespace

TEST_CASE("writer: resetting the log") {
  // tell "post" >> reset >> tell "pre"  ==>  ((), "post")
  Computation m = seq(tellv("post"), seq(wr::reset(W), tellv("pre")));
  VPair out = run_write(m, W);
  REQUIRE(render(pair(out.first, out.second)) == "((),\"post\")");
}

TEST_CASE("writer: generator pairs the value with eps") {
  VPair out = run_write(pure(from_int(7)), W);
  REQUIRE(deep_equal(out.first, from_int(7)));
  REQUIRE(deep_equal(out.second, from_string("")));
}

TEST_CASE("writer: tells concatenate left to right") {
  VPair out = run_write(seq(tellv("a"), tellv("b")), W);
  REQUIRE(deep_equal(out.second, from_string("ab")));
}

TEST_CASE("writer: log homomorphism for tell-only programs") {
  auto tells = [](std::initializer_list<const char*> xs) {
    Computation m = pure(unit());
    for (auto it = std::rbegin(xs); it != std::rend(xs); ++it) m = seq(wr::tell(from_string(*it)), m);
    return m;
  };
  Computation m1 = tells({"a", "b"});
  Computation m2 = tells({"c", "d", "e"});
  VPair whole = run_write(seq(m1, m2), W);
  VPair l1 = run_write(m1, W);
  VPair l2 = run_write(m2, W);
  REQUIRE(deep_equal(whole.second, W.combine(l1.second, l2.second)));
}

TEST_CASE("writer: listen sees eps when nothing was told inside") {
  // listen (return 3) >>= \(x, w) -> tell w >> return x
  Computation m = bind(wr::listen(pure(from_int(3))), [](const Value& xw) {
    const VPair& p = xw.as<VPair>();
    return seq(wr::tell(p.second), pure(p.first));
  });
  VPair out = run_write(m, W);
  REQUIRE(deep_equal(out.first, from_int(3)));
  REQUIRE(deep_equal(out.second, from_string("")));
}

TEST_CASE("writer: listen feeds the body's log to the continuation") {
  Computation m = bind(wr::listen(seq(tellv("in"), pure(from_int(1)))), [](const Value& xw) {
    const VPair& p = xw.as<VPair>();
    return pure(p.second);
  });
  VPair out = run_write(m, W);
  REQUIRE(deep_equal(out.first, from_string("in")));
}

TEST_CASE("writer: pass with the identity modifier is pure") {
  ValueFn ident = [](const Value& w) { return w; };
  Computation m = seq(wr::pass(pure(pair(from_int(5), Value::of(ident)))), tellv("x"));
  VPair out = run_write(m, W);
  REQUIRE(deep_equal(out.second, from_string("x")));

  Computation m2 = wr::pass(pure(pair(from_int(5), Value::of(ident))));
  VPair out2 = run_write(m2, W);
  REQUIRE(deep_equal(out2.first, from_int(5)));
  REQUIRE(deep_equal(out2.second, from_string("")));
}

TEST_CASE("writer: pass applies its modifier to the continuation's log") {
  ValueFn upper = [](const Value& w) {
    std::string s = w.as<std::string>();
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return from_string(s);
  };
  Computation m = seq(tellv("keep"),
                      seq(wr::pass(pure(pair(unit(), Value::of(upper)))), tellv("rest")));
  VPair out = run_write(m, W);
  REQUIRE(deep_equal(out.second, from_string("keepREST")));
}

namespace {
// A decoration h_write does not know: exercises the forwarding clause.
class MarkDecor final : public WriteDecor {
public:
  explicit MarkDecor(Value seed) : seed_(std::move(seed)) {}
  std::string_view name() const override { return "mark"; }
  WriteDecorPtr map(const ValueFn& f) const override {
    return std::make_shared<MarkDecor>(f(seed_));
  }
  const Value& seed() const { return seed_; }

private:
  Value seed_;
};
}  // namespace

TEST_CASE("writer: unknown decorations are forwarded as exec nodes with pure bodies") {
  WriteDecorPtr d = std::make_shared<MarkDecor>(Value::of(pure(from_int(1))));
  Computation m = op(std::make_shared<KWriteNode>(Value::of(pure(Value::of(d)))));
  Computation residual = h_write(m, W);
  REQUIRE(!residual.is_pure());
  const auto* node = dynamic_cast<const KWriteNode*>(&residual.node());
  REQUIRE(node != nullptr);
  Computation body = node->body().as<Computation>();
  REQUIRE(body.is_pure());
  const auto* fwd = dynamic_cast<const MarkDecor*>(body.value().as<WriteDecorPtr>().get());
  REQUIRE(fwd != nullptr);
}
