#include "heff/writer.hpp"

#include "heff/coproduct.hpp"

namespace heff {

WriteDecorPtr ListenDecor::map(const ValueFn& f) const {
  ValueFn fn = fn_;
  return std::make_shared<ListenDecor>([f, fn](const Value& w) { return f(fn(w)); });
}

WriteDecorPtr PassDecor::map(const ValueFn& f) const {
  return std::make_shared<PassDecor>(wfn_, f(seed_));
}

OpPtr KWriteNode::map_continuation(const ValueFn& f) const {
  Computation body = body_.as<Computation>("write.exec body");
  Computation mapped = fmap(
      [f](const Value& decor) {
        return Value::of(decor.as<WriteDecorPtr>("write.exec decoration")->map(f));
      },
      body);
  return std::make_shared<KWriteNode>(Value::of(mapped));
}

OpPtr KWriteNode::map_inner(const ValueFn& t) const {
  return std::make_shared<KWriteNode>(t(body_));
}

namespace wr {

Computation listen(const Computation& body) {
  Computation decorated = fmap(
      [](const Value& x) {
        WriteDecorPtr d = std::make_shared<ListenDecor>(
            [x](const Value& w) { return Value::of(pure(pair(x, w))); });
        return Value::of(d);
      },
      body);
  return op(std::make_shared<KWriteNode>(Value::of(decorated)));
}

Computation pass(const Computation& body) {
  Computation decorated = fmap(
      [](const Value& xs) {
        const VPair& p = xs.as<VPair>("pass body result");
        WriteDecorPtr d = std::make_shared<PassDecor>(p.second.as<ValueFn>("pass modifier"),
                                                      Value::of(pure(p.first)));
        return Value::of(d);
      },
      body);
  return op(std::make_shared<KWriteNode>(Value::of(decorated)));
}

Computation reset(const Monoid& w) {
  Value eps = w.eps;
  return pass(pure(pair(unit(), Value::of(ValueFn([eps](const Value&) { return eps; })))));
}

}  // namespace wr

namespace detail_write {

namespace {
Computation carrier_comp(const Value& v, const char* what) { return v.as<Computation>(what); }
}  // namespace

// alg_Tell (Tell w k) = do (x, w') <- k; return (x, w <> w')
Value tell_clause(const TellOp& t, const Monoid& w) {
  Value told = t.w;
  auto combine = w.combine;
  return Value::of(bind(carrier_comp(t.k, "tell continuation"), [told, combine](const Value& res) {
    const VPair& p = res.as<VPair>("tell continuation result");
    return pure(pair(p.first, combine(told, p.second)));
  }));
}

// alg_Write (Exec k) = k >>= \case
//   (f, w)        -> f w
//   ((f, mx), _)  -> fmap (fmap f) mx
//   (op, _)       -> Op (Exec (return op))
Value exec_clause(const KWriteNode& n, const Monoid&) {
  Computation k = carrier_comp(n.body(), "write.exec interpreted body");
  return Value::of(bind(k, [](const Value& res) -> Computation {
    const VPair& p = res.as<VPair>("write.exec body result");
    const WriteDecorPtr& decor = p.first.as<WriteDecorPtr>("write.exec decoration");
    const Value& body_log = p.second;
    if (const auto* l = dynamic_cast<const ListenDecor*>(decor.get()))
      return l->fn()(body_log).as<Computation>("listen continuation");
    if (const auto* ps = dynamic_cast<const PassDecor*>(decor.get())) {
      ValueFn wfn = ps->wfn();
      Computation rest = ps->seed().as<Computation>("pass continuation");
      return fmap(
          [wfn](const Value& xw) {
            const VPair& q = xw.as<VPair>("pass continuation result");
            return pair(q.first, wfn(q.second));
          },
          rest);
    }
    // Unknown decoration: rewrap with a pure body.
    return op(std::make_shared<KWriteNode>(Value::of(pure(p.first))));
  }));
}

}  // namespace detail_write

Computation h_write(const Computation& m, const Monoid& w) {
  Handler h;
  h.name = "h_write";
  Value eps = w.eps;
  h.eta = [eps](const Value& x) { return Value::of(pure(pair(x, eps))); };
  h.generator = h.eta;
  h.algebra = [&h, &w](const Op& raw) -> Value {
    const Op& n = strip_coproduct(raw);
    if (const auto* a = dynamic_cast<const KAlgNode*>(&n)) {
      if (const auto* t = dynamic_cast<const TellOp*>(a->op_ptr().get()))
        return detail_write::tell_clause(*t, w);
      return Value::of(op(std::make_shared<KAlgNode>(a->op_ptr())));  // fwd = Op . Op
    }
    if (const auto* e = dynamic_cast<const KWriteNode*>(&n)) return detail_write::exec_clause(*e, w);
    throw UnhandledEffectError(n.describe(), h.name);
  };
  return fold(h, m).as<Computation>("h_write result");
}

VPair run_write(const Computation& m, const Monoid& w) {
  return run_closed(h_write(m, w), "run_write").as<VPair>("run_write result");
}

}  // namespace heff
