#include "heff/scoped.hpp"

#include "heff/coproduct.hpp"

namespace heff {

OpPtr KScNode::map_continuation(const ValueFn& f) const {
  Computation body = sc_->body().as<Computation>("sc body");
  return std::make_shared<KScNode>(sc_->with_body(Value::of(fmap(f, body))));
}

OpPtr KScNode::map_inner(const ValueFn& t) const {
  return std::make_shared<KScNode>(sc_->with_body(t(sc_->body())));
}

namespace scope {

namespace {
// Wrap each result of the body as a pure continuation computation, giving the
// gamma (f (f a)) shape the scoped node expects.
Value wrapped_body(const Computation& body) {
  return Value::of(fmap([](const Value& x) { return Value::of(pure(x)); }, body));
}
}  // namespace

Computation once(const Computation& body) {
  return op(std::make_shared<KScNode>(std::make_shared<OnceOp>(wrapped_body(body))));
}

Computation local(Value env, const Computation& body) {
  return op(std::make_shared<KScNode>(std::make_shared<LocalOp>(std::move(env), wrapped_body(body))));
}

Computation censor_scoped(const ValueFn& wfn, const Computation& body) {
  return op(std::make_shared<KScNode>(std::make_shared<CensorOp>(wfn, wrapped_body(body))));
}

}  // namespace scope

// --- h_Once ----------------------------------------------------------------

namespace {

Computation sc_carrier(const Value& v, const char* what) { return v.as<Computation>(what); }

// lift_Once = foldr (\x xs -> (++) <$> x <*> xs) (return [])
Computation lift_once(const VList& parts) {
  Computation acc = pure(list(VList{}));
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    Computation x = it->as<Computation>("once forwarding part");
    Computation rest = acc;
    acc = bind(x, [rest](const Value& xs) {
      return bind(rest, [xs](const Value& ys) {
        VList out = xs.as<VList>("once forwarding left");
        const VList& more = ys.as<VList>("once forwarding right");
        out.insert(out.end(), more.begin(), more.end());
        return pure(list(std::move(out)));
      });
    });
  }
  return acc;
}

}  // namespace

Computation h_once(const Computation& m) {
  Handler h;
  h.name = "h_once";
  h.eta = [](const Value& x) { return Value::of(pure(list(VList{x}))); };
  h.generator = h.eta;
  h.algebra = [&h](const Op& raw) -> Value {
    const Op& n = strip_coproduct(raw);
    if (const auto* a = dynamic_cast<const KAlgNode*>(&n)) {
      if (dynamic_cast<const FailOp*>(a->op_ptr().get())) return Value::of(pure(list(VList{})));
      if (const auto* o = dynamic_cast<const OrOp*>(a->op_ptr().get())) {
        Computation p = sc_carrier(o->p, "or left");
        Computation q = sc_carrier(o->q, "or right");
        return Value::of(bind(p, [q](const Value& xs) {
          return bind(q, [xs](const Value& ys) {
            VList out = xs.as<VList>("or left results");
            const VList& more = ys.as<VList>("or right results");
            out.insert(out.end(), more.begin(), more.end());
            return pure(list(std::move(out)));
          });
        }));
      }
      return Value::of(op(std::make_shared<KAlgNode>(a->op_ptr())));  // fwd_Choice
    }
    if (const auto* s = dynamic_cast<const KScNode*>(&n)) {
      Computation y = sc_carrier(s->scope().body(), "once scope body");
      if (dynamic_cast<const OnceOp*>(s->scope_ptr().get())) {
        // alg_Once (Once y) = join (fmap head y)
        return Value::of(bind(y, [](const Value& results) {
          const VList& xs = results.as<VList>("once scope results");
          if (xs.empty()) throw EvalError("once: empty scope");
          return xs.front().as<Computation>("once first result");
        }));
      }
      // fwd_Once = Op . Enter . fmap (fmap lift_Once)
      Computation redistributed = fmap(
          [](const Value& lv) { return Value::of(lift_once(lv.as<VList>("forwarded scope results"))); },
          y);
      return Value::of(op(std::make_shared<KScNode>(s->scope_ptr()->with_body(Value::of(redistributed)))));
    }
    throw UnhandledEffectError(n.describe(), h.name);
  };
  return fold(h, m).as<Computation>("h_once result");
}

VList run_once(const Computation& m) {
  return run_closed(h_once(m), "run_once").as<VList>("run_once result");
}

// --- h_Censor ----------------------------------------------------------------

Computation h_censor(const Computation& m, const Monoid& w) {
  Handler h;
  h.name = "h_censor";
  Value eps = w.eps;
  h.eta = [eps](const Value& x) { return Value::of(pure(pair(x, eps))); };
  h.generator = h.eta;
  h.algebra = [&h, &w](const Op& raw) -> Value {
    const Op& n = strip_coproduct(raw);
    if (const auto* a = dynamic_cast<const KAlgNode*>(&n)) {
      if (const auto* t = dynamic_cast<const TellOp*>(a->op_ptr().get()))
        return detail_write::tell_clause(*t, w);
      return Value::of(op(std::make_shared<KAlgNode>(a->op_ptr())));
    }
    if (const auto* s = dynamic_cast<const KScNode*>(&n)) {
      Computation y = s->scope().body().as<Computation>("censor scope body");
      if (const auto* c = dynamic_cast<const CensorOp*>(s->scope_ptr().get())) {
        // alg_Censor (Censor f k) = do (mx, _) <- k; (x, w) <- mx; return (x, f w)
        ValueFn wfn = c->wfn();
        return Value::of(bind(y, [wfn](const Value& res) {
          const VPair& p = res.as<VPair>("censor scope result");
          Computation mx = p.first.as<Computation>("censor continuation");
          return bind(mx, [wfn](const Value& xw) {
            const VPair& q = xw.as<VPair>("censor continuation result");
            return pure(pair(q.first, wfn(q.second)));
          });
        }));
      }
      // fwd_Censor = Op . Enter . fmap (fmap fst)
      Computation dropped = fmap(
          [](const Value& res) { return res.as<VPair>("forwarded scope result").first; }, y);
      return Value::of(op(std::make_shared<KScNode>(s->scope_ptr()->with_body(Value::of(dropped)))));
    }
    if (const auto* e = dynamic_cast<const KWriteNode*>(&n)) return detail_write::exec_clause(*e, w);
    throw UnhandledEffectError(n.describe(), h.name);
  };
  return fold(h, m).as<Computation>("h_censor result");
}

VPair run_censor(const Computation& m, const Monoid& w) {
  return run_closed(h_censor(m, w), "run_censor").as<VPair>("run_censor result");
}

}  // namespace heff
