#include "heff/parallel.hpp"

#include <future>

#include "heff/coproduct.hpp"

namespace heff {

OpPtr KParNode::map_inner(const ValueFn& t) const {
  VList mapped;
  mapped.reserve(iters_.size());
  for (const Value& it : iters_) mapped.push_back(t(it));
  return std::make_shared<KParNode>(std::move(mapped), k_);
}

OpPtr KParNode::map_continuation(const ValueFn& f) const {
  ValueFn k = k_;
  return std::make_shared<KParNode>(iters_, [f, k](const Value& vs) { return f(k(vs)); });
}

namespace par {
Computation for_(const std::vector<Computation>& iters) {
  VList erased;
  erased.reserve(iters.size());
  for (const Computation& c : iters) erased.push_back(Value::of(c));
  return op(std::make_shared<KParNode>(std::move(erased),
                                       [](const Value& vs) { return Value::of(pure(vs)); }));
}
}  // namespace par

namespace {

Computation accum_carrier(const Value& v, const char* what) { return v.as<Computation>(what); }

// sequence iters, collecting (m_i, b_i) pairs in iteration order. Captures go
// by value and calls stay re-entrant: a stored continuation may run more than
// once and long after the caller returned.
Computation sequence_branches(const VList& iters, std::size_t i, const VList& acc) {
  if (i == iters.size()) return pure(list(acc));
  Computation branch = accum_carrier(iters[i], "for branch");
  return bind(branch, [iters, i, acc](const Value& mx) {
    VList next = acc;
    next.push_back(mx);
    return sequence_branches(iters, i + 1, next);
  });
}

}  // namespace

Computation h_accum(const Computation& m, const Monoid& monoid, bool parallel_branches) {
  Handler h;
  h.name = "h_accum";
  Value eps = monoid.eps;
  h.eta = [eps](const Value& x) { return Value::of(pure(pair(eps, x))); };
  h.generator = h.eta;
  h.algebra = [&h, &monoid, parallel_branches](const Op& raw) -> Value {
    const Op& n = strip_coproduct(raw);
    if (const auto* a = dynamic_cast<const KAlgNode*>(&n)) {
      if (const auto* ac = dynamic_cast<const AccumOp*>(a->op_ptr().get())) {
        // alg_Accum (Accum m' k) = fmap (\(m, x) -> (m' <> m, x)) k
        Value m1 = ac->m;
        auto combine = monoid.combine;
        return Value::of(fmap(
            [m1, combine](const Value& mx) {
              const VPair& p = mx.as<VPair>("accum continuation result");
              return pair(combine(m1, p.first), p.second);
            },
            accum_carrier(ac->k, "accum continuation")));
      }
      return Value::of(op(std::make_shared<KAlgNode>(a->op_ptr())));  // fwd = Op . Op
    }
    if (const auto* f = dynamic_cast<const KParNode*>(&n)) {
      // alg_Par (For iters k) = do (ms, xs) <- fmap unzip (sequence iters)
      //                            fmap (\(m, x) -> (foldr (<>) m ms, x)) (k xs)
      VList iters = f->iters();
      if (parallel_branches) {
        // Branches are isolated by construction; closed ones may be evaluated
        // concurrently. Any branch with residual effects falls back to the
        // sequential bind chain.
        bool all_closed = true;
        for (const Value& it : iters)
          if (!accum_carrier(it, "for branch").is_pure()) all_closed = false;
        if (all_closed) {
          std::vector<std::future<Value>> futures;
          futures.reserve(iters.size());
          for (const Value& it : iters)
            futures.push_back(std::async(std::launch::async, [it] {
              return accum_carrier(it, "for branch").value();
            }));
          VList results;
          results.reserve(futures.size());
          for (auto& fu : futures) results.push_back(fu.get());
          iters.clear();
          for (Value& r : results) iters.push_back(Value::of(pure(std::move(r))));
        }
      }
      ValueFn k = f->k();
      auto combine = monoid.combine;
      return Value::of(bind(sequence_branches(iters, 0, VList{}), [k, combine](const Value& pairs) -> Computation {
        VList ms, xs;
        for (const Value& mx : pairs.as<VList>("for branch results")) {
          const VPair& p = mx.as<VPair>("for branch result");
          ms.push_back(p.first);
          xs.push_back(p.second);
        }
        Computation rest = k(list(std::move(xs))).as<Computation>("for continuation");
        return fmap(
            [ms, combine](const Value& mx) {
              const VPair& p = mx.as<VPair>("for continuation result");
              Value total = p.first;
              for (auto it = ms.rbegin(); it != ms.rend(); ++it) total = combine(*it, total);
              return pair(total, p.second);
            },
            rest);
      }));
    }
    throw UnhandledEffectError(n.describe(), h.name);
  };
  return fold(h, m).as<Computation>("h_accum result");
}

VPair run_accum(const Computation& m, const Monoid& monoid, bool parallel_branches) {
  return run_closed(h_accum(m, monoid, parallel_branches), "run_accum")
      .as<VPair>("run_accum result");
}

}  // namespace heff
