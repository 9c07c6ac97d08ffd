#include "heff/laws/generators.hpp"

#include "heff/algebraic.hpp"
#include "heff/bracket.hpp"
#include "heff/latent.hpp"
#include "heff/parallel.hpp"
#include "heff/scoped.hpp"
#include "heff/writer.hpp"

namespace heff::laws {

namespace {

using LeafGen = std::function<Value(Rng&)>;

bool go_deeper(Rng& rng, int depth) {
  if (depth <= 0) return false;
  return std::uniform_int_distribution<int>(0, 2)(rng) != 0;  // geometric-ish
}

int coin(Rng& rng) { return std::uniform_int_distribution<int>(0, 1)(rng); }

std::int64_t small_int(Rng& rng) { return std::uniform_int_distribution<std::int64_t>(0, 3)(rng); }

Table gen_table(Rng& rng, const DomPtr& dom, const std::function<Value(Rng&)>& entry) {
  Table t{dom, {}};
  t.out.reserve(dom->values.size());
  for (std::size_t i = 0; i < dom->values.size(); ++i) t.out.push_back(entry(rng));
  return t;
}

Table gen_wfn(Rng& rng) {
  return gen_table(rng, dom_ints(), [](Rng& r) { return from_int(small_int(r)); });
}

}  // namespace

Value gen_ground(Rng& rng) {
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
    return from_bool(coin(rng) == 1);
  return from_int(small_int(rng));
}

// --- specialized generators -------------------------------------------------

SAlgP gen_salg(Rng& rng, int depth) {
  if (!go_deeper(rng, depth)) return salg_leaf(gen_ground(rng));
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      return salg_get(gen_table(rng, dom_ints(), [depth](Rng& r) {
        return Value::of(gen_salg(r, depth - 1));
      }));
    case 1: return salg_put(from_int(small_int(rng)), gen_salg(rng, depth - 1));
    case 2: return salg_fail();
    default: return salg_or(gen_salg(rng, depth - 1), gen_salg(rng, depth - 1));
  }
}

SAlgP gen_salg_state(Rng& rng, int depth) {
  if (!go_deeper(rng, depth)) return salg_leaf(from_int(small_int(rng)));
  if (coin(rng) == 0)
    return salg_get(gen_table(rng, dom_ints(), [depth](Rng& r) {
      return Value::of(gen_salg_state(r, depth - 1));
    }));
  return salg_put(from_int(small_int(rng)), gen_salg_state(rng, depth - 1));
}

SAlgP gen_salg_choice(Rng& rng, int depth) {
  if (!go_deeper(rng, depth)) return salg_leaf(from_int(small_int(rng)));
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) return salg_fail();
  return salg_or(gen_salg_choice(rng, depth - 1), gen_salg_choice(rng, depth - 1));
}

namespace {
SScP gen_ssc_tree(Rng& rng, int depth, const LeafGen& leaf) {
  if (!go_deeper(rng, depth)) return ssc_leaf(leaf(rng));
  LeafGen cont = [depth, leaf](Rng& r) { return Value::of(gen_ssc_tree(r, depth - 1, leaf)); };
  SScP body = gen_ssc_tree(rng, depth - 1, cont);
  if (coin(rng) == 0) return ssc_once(body);
  return ssc_censor(gen_wfn(rng), body);
}

SParP gen_spar_tree(Rng& rng, int depth, const LeafGen& leaf) {
  if (!go_deeper(rng, depth)) return spar_leaf(leaf(rng));
  std::size_t width = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  LeafGen branch_leaf = [](Rng& r) {
    return from_int(std::uniform_int_distribution<std::int64_t>(0, 1)(r));
  };
  std::vector<SParP> iters;
  for (std::size_t i = 0; i < width; ++i) iters.push_back(gen_spar_tree(rng, depth - 1, branch_leaf));
  Table k = gen_table(rng, dom_vectors(dom_ints2(), width), [depth, leaf](Rng& r) {
    return Value::of(gen_spar_tree(r, depth - 1, leaf));
  });
  return spar_for(std::move(iters), std::move(k));
}

SWriteP gen_swrite_tree(Rng& rng, int depth, const LeafGen& leaf) {
  if (!go_deeper(rng, depth)) return swrite_leaf(leaf(rng));
  LeafGen decor = [depth, leaf](Rng& r) -> Value {
    auto d = std::make_shared<SWDecor>();
    if (coin(r) == 0) {
      d->tag = SWDecor::Tag::Listen;
      d->listen_k = gen_table(r, dom_ints2(), [depth, leaf](Rng& r2) {
        return Value::of(gen_swrite_tree(r2, depth - 1, leaf));
      });
    } else {
      d->tag = SWDecor::Tag::Pass;
      d->pass_wfn = gen_wfn(r);
      d->pass_seed = gen_swrite_tree(r, depth - 1, leaf);
    }
    return Value::of(SWDecorP(d));
  };
  return swrite_exec(gen_swrite_tree(rng, depth - 1, decor));
}

SResP gen_sres_tree(Rng& rng, int depth, const LeafGen& leaf) {
  if (!go_deeper(rng, depth)) return sres_leaf(leaf(rng));
  LeafGen pair_leaf = [depth, leaf](Rng& r) -> Value {
    LeafGen unit_leaf = [](Rng&) { return unit(); };
    SResP rel = gen_sres_tree(r, depth - 1, unit_leaf);
    SResP use = gen_sres_tree(r, depth - 1, leaf);
    return pair(Value::of(rel), Value::of(use));
  };
  return sres_bracket(gen_sres_tree(rng, depth - 1, pair_leaf));
}
}  // namespace

SScP gen_ssc(Rng& rng, int depth) { return gen_ssc_tree(rng, depth, gen_ground); }
SParP gen_spar(Rng& rng, int depth) { return gen_spar_tree(rng, depth, gen_ground); }
SWriteP gen_swrite(Rng& rng, int depth) { return gen_swrite_tree(rng, depth, gen_ground); }
SResP gen_sres(Rng& rng, int depth) { return gen_sres_tree(rng, depth, gen_ground); }

SLatP gen_slat(Rng& rng, int depth) {
  if (!go_deeper(rng, depth)) return slat_leaf(from_int(small_int(rng)));
  Table k = gen_table(rng, dom_ints(), [depth](Rng& r) { return Value::of(gen_slat(r, depth - 1)); });
  if (coin(rng) == 0) return slat_thunk(gen_slat(rng, depth - 1), std::move(k));
  return slat_force(small_int(rng), std::move(k));
}

// --- generic-side generators ---------------------------------------------------
//
// Built straight from the node constructors (no specialized trees, no isos);
// table-backed slots keep them comparable.

namespace {

Computation gen_galg_tree(Rng& rng, int depth, const LeafGen& leaf) {
  if (!go_deeper(rng, depth)) return pure(leaf(rng));
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: {
      Table k = gen_table(rng, dom_ints(), [depth, leaf](Rng& r) {
        return Value::of(gen_galg_tree(r, depth - 1, leaf));
      });
      return alg_op(std::make_shared<GetOp>(k.fn()));
    }
    case 1:
      return alg_op(std::make_shared<PutOp>(from_int(small_int(rng)),
                                            Value::of(gen_galg_tree(rng, depth - 1, leaf))));
    case 2: return alg_op(std::make_shared<FailOp>());
    default:
      return alg_op(std::make_shared<OrOp>(Value::of(gen_galg_tree(rng, depth - 1, leaf)),
                                           Value::of(gen_galg_tree(rng, depth - 1, leaf))));
  }
}

Computation gen_gsc_tree(Rng& rng, int depth, const LeafGen& leaf) {
  if (!go_deeper(rng, depth)) return pure(leaf(rng));
  LeafGen cont = [depth, leaf](Rng& r) { return Value::of(gen_gsc_tree(r, depth - 1, leaf)); };
  Computation body = gen_gsc_tree(rng, depth - 1, cont);
  if (coin(rng) == 0)
    return op(std::make_shared<KScNode>(std::make_shared<OnceOp>(Value::of(body))));
  return op(std::make_shared<KScNode>(
      std::make_shared<CensorOp>(gen_wfn(rng).fn(), Value::of(body))));
}

Computation gen_gpar_tree(Rng& rng, int depth, const LeafGen& leaf) {
  if (!go_deeper(rng, depth)) return pure(leaf(rng));
  std::size_t width = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  LeafGen branch_leaf = [](Rng& r) {
    return from_int(std::uniform_int_distribution<std::int64_t>(0, 1)(r));
  };
  VList iters;
  for (std::size_t i = 0; i < width; ++i)
    iters.push_back(Value::of(gen_gpar_tree(rng, depth - 1, branch_leaf)));
  Table k = gen_table(rng, dom_vectors(dom_ints2(), width), [depth, leaf](Rng& r) {
    return Value::of(gen_gpar_tree(r, depth - 1, leaf));
  });
  return op(std::make_shared<KParNode>(std::move(iters), k.fn()));
}

Computation gen_gwrite_tree(Rng& rng, int depth, const LeafGen& leaf) {
  if (!go_deeper(rng, depth)) return pure(leaf(rng));
  LeafGen decor = [depth, leaf](Rng& r) -> Value {
    if (coin(r) == 0) {
      Table k = gen_table(r, dom_ints2(), [depth, leaf](Rng& r2) {
        return Value::of(gen_gwrite_tree(r2, depth - 1, leaf));
      });
      WriteDecorPtr d = std::make_shared<ListenDecor>(k.fn());
      return Value::of(d);
    }
    WriteDecorPtr d = std::make_shared<PassDecor>(
        gen_wfn(r).fn(), Value::of(gen_gwrite_tree(r, depth - 1, leaf)));
    return Value::of(d);
  };
  return op(std::make_shared<KWriteNode>(Value::of(gen_gwrite_tree(rng, depth - 1, decor))));
}

Computation gen_glat_tree(Rng& rng, int depth, const LeafGen& leaf) {
  if (!go_deeper(rng, depth)) return pure(leaf(rng));
  Table k = gen_table(rng, dom_ints(), [depth, leaf](Rng& r) {
    return Value::of(gen_glat_tree(r, depth - 1, leaf));
  });
  ValueFn kf = k.fn();
  if (coin(rng) == 0) {
    Computation sub = gen_glat_tree(rng, depth - 1, [](Rng& r) { return from_int(small_int(r)); });
    return op(std::make_shared<KLatNode>(
        std::make_shared<ThunkOp>(), unit(),
        [sub](int sel, const Value&) -> Value {
          if (sel != 0) throw EvalError("thunk: no such subcomputation selector");
          return Value::of(sub);
        },
        kf));
  }
  return op(std::make_shared<KLatNode>(
      std::make_shared<ForceOp>(small_int(rng)), unit(),
      [](int, const Value&) -> Value { throw EvalError("force: no subcomputations"); }, kf));
}

Computation gen_gres_tree(Rng& rng, int depth, const LeafGen& leaf) {
  if (!go_deeper(rng, depth)) return pure(leaf(rng));
  LeafGen pair_leaf = [depth, leaf](Rng& r) -> Value {
    LeafGen unit_leaf = [](Rng&) { return unit(); };
    Computation rel = gen_gres_tree(r, depth - 1, unit_leaf);
    // Canonical shape: the use side returns its continuation computation.
    Computation use_cont = gen_gres_tree(r, depth - 1, leaf);
    return pair(Value::of(rel), Value::of(pure(Value::of(use_cont))));
  };
  return op(std::make_shared<KResNode>(Value::of(gen_gres_tree(rng, depth - 1, pair_leaf))));
}

}  // namespace

Computation gen_comp_alg(Rng& rng, int depth) { return gen_galg_tree(rng, depth, gen_ground); }
Computation gen_comp_sc(Rng& rng, int depth) { return gen_gsc_tree(rng, depth, gen_ground); }
Computation gen_comp_par(Rng& rng, int depth) { return gen_gpar_tree(rng, depth, gen_ground); }
Computation gen_comp_write(Rng& rng, int depth) { return gen_gwrite_tree(rng, depth, gen_ground); }
Computation gen_comp_lat(Rng& rng, int depth) { return gen_glat_tree(rng, depth, gen_ground); }
Computation gen_comp_res(Rng& rng, int depth) { return gen_gres_tree(rng, depth, gen_ground); }

}  // namespace heff::laws
