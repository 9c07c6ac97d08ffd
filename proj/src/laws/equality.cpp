#include "heff/laws/equality.hpp"

#include "heff/algebraic.hpp"
#include "heff/bracket.hpp"
#include "heff/latent.hpp"
#include "heff/parallel.hpp"
#include "heff/scoped.hpp"
#include "heff/writer.hpp"

namespace heff::laws {

namespace {

using Diff = std::optional<std::string>;

Diff mismatch(const std::string& path, const std::string& why) { return path + ": " + why; }

Diff diff_ground(const Value& a, const Value& b, const std::string& path) {
  if (deep_equal(a, b)) return std::nullopt;
  return mismatch(path, "values " + render(a) + " vs " + render(b));
}

Diff diff_table(const Table& a, const Table& b, const std::string& path,
                const std::function<Diff(const Value&, const Value&, const std::string&)>& entry) {
  if (a.dom->id != b.dom->id) return mismatch(path, "domains " + a.dom->id + " vs " + b.dom->id);
  for (std::size_t i = 0; i < a.dom->values.size(); ++i) {
    Diff d = entry(a.out[i], b.out[i], path + "(" + render(a.dom->values[i]) + ")");
    if (d) return d;
  }
  return std::nullopt;
}

}  // namespace

// --- specialized-side -------------------------------------------------------

namespace {
Diff diff_salg_at(const SAlgP& a, const SAlgP& b, const std::string& path) {
  if (a->tag != b->tag) return mismatch(path, "different node tags");
  switch (a->tag) {
    case SAlg::Tag::Leaf: return diff_ground(a->v, b->v, path + ".leaf");
    case SAlg::Tag::Get:
      return diff_table(a->k, b->k, path + ".get", [](const Value& x, const Value& y, const std::string& p) {
        return diff_salg_at(x.as<SAlgP>(), y.as<SAlgP>(), p);
      });
    case SAlg::Tag::Put: {
      if (Diff d = diff_ground(a->v, b->v, path + ".put.s")) return d;
      return diff_salg_at(a->a, b->a, path + ".put.k");
    }
    case SAlg::Tag::Fail: return std::nullopt;
    case SAlg::Tag::Or: {
      if (Diff d = diff_salg_at(a->a, b->a, path + ".or.p")) return d;
      return diff_salg_at(a->b, b->b, path + ".or.q");
    }
  }
  return std::nullopt;
}

Diff diff_ssc_at(const SScP& a, const SScP& b, int depth, const std::string& path) {
  if (a->tag != b->tag) return mismatch(path, "different node tags");
  if (a->tag == SSc::Tag::Leaf) {
    if (depth == 0) return diff_ground(a->v, b->v, path + ".leaf");
    return diff_ssc_at(a->v.as<SScP>(), b->v.as<SScP>(), depth - 1, path + ".leaf");
  }
  if (a->tag == SSc::Tag::Censor) {
    if (Diff d = diff_table(a->wfn, b->wfn, path + ".censor.wfn",
                            [](const Value& x, const Value& y, const std::string& p) {
                              return diff_ground(x, y, p);
                            }))
      return d;
  }
  return diff_ssc_at(a->body, b->body, depth + 1, path + "." + (a->tag == SSc::Tag::Once ? "once" : "censor") + ".body");
}

Diff diff_spar_at(const SParP& a, const SParP& b, const std::string& path) {
  if (a->tag != b->tag) return mismatch(path, "different node tags");
  if (a->tag == SPar::Tag::Leaf) return diff_ground(a->v, b->v, path + ".leaf");
  if (a->iters.size() != b->iters.size()) return mismatch(path, "different branch counts");
  for (std::size_t i = 0; i < a->iters.size(); ++i)
    if (Diff d = diff_spar_at(a->iters[i], b->iters[i], path + ".for.iter" + std::to_string(i)))
      return d;
  return diff_table(a->k, b->k, path + ".for.k",
                    [](const Value& x, const Value& y, const std::string& p) {
                      return diff_spar_at(x.as<SParP>(), y.as<SParP>(), p);
                    });
}

Diff diff_swdecor(const SWDecorP& a, const SWDecorP& b, int depth, const std::string& path);

Diff diff_swrite_at(const SWriteP& a, const SWriteP& b, int depth, const std::string& path) {
  if (a->tag != b->tag) return mismatch(path, "different node tags");
  if (a->tag == SWrite::Tag::Leaf) {
    if (depth == 0) return diff_ground(a->v, b->v, path + ".leaf");
    return diff_swdecor(a->v.as<SWDecorP>(), b->v.as<SWDecorP>(), depth - 1, path + ".leaf");
  }
  return diff_swrite_at(a->body, b->body, depth + 1, path + ".exec.body");
}

Diff diff_swdecor(const SWDecorP& a, const SWDecorP& b, int depth, const std::string& path) {
  if (a->tag != b->tag) return mismatch(path, "different decoration tags");
  if (a->tag == SWDecor::Tag::Listen)
    return diff_table(a->listen_k, b->listen_k, path + ".listen",
                      [depth](const Value& x, const Value& y, const std::string& p) {
                        return diff_swrite_at(x.as<SWriteP>(), y.as<SWriteP>(), depth, p);
                      });
  if (Diff d = diff_table(a->pass_wfn, b->pass_wfn, path + ".pass.wfn",
                          [](const Value& x, const Value& y, const std::string& p) {
                            return diff_ground(x, y, p);
                          }))
    return d;
  return diff_swrite_at(a->pass_seed, b->pass_seed, depth, path + ".pass.seed");
}

Diff diff_slat_at(const SLatP& a, const SLatP& b, const std::string& path) {
  if (a->tag != b->tag) return mismatch(path, "different node tags");
  if (a->tag == SLat::Tag::Leaf) return diff_ground(a->v, b->v, path + ".leaf");
  if (a->is_thunk != b->is_thunk) return mismatch(path, "thunk vs force");
  if (!a->is_thunk && a->force_ptr != b->force_ptr) return mismatch(path, "different force pointers");
  if (Diff d = diff_ground(a->l, b->l, path + ".l")) return d;
  if (a->is_thunk)
    if (Diff d = diff_slat_at(a->st_one, b->st_one, path + ".st(One,())")) return d;
  return diff_table(a->k, b->k, path + ".k",
                    [](const Value& x, const Value& y, const std::string& p) {
                      return diff_slat_at(x.as<SLatP>(), y.as<SLatP>(), p);
                    });
}

Diff diff_sres_at(const SResP& a, const SResP& b, int depth, const std::string& path) {
  if (a->tag != b->tag) return mismatch(path, "different node tags");
  if (a->tag == SRes::Tag::Leaf) {
    if (depth == 0) return diff_ground(a->v, b->v, path + ".leaf");
    const VPair& pa = a->v.as<VPair>();
    const VPair& pb = b->v.as<VPair>();
    if (Diff d = diff_sres_at(pa.first.as<SResP>(), pb.first.as<SResP>(), 0, path + ".rel")) return d;
    return diff_sres_at(pa.second.as<SResP>(), pb.second.as<SResP>(), depth - 1, path + ".use");
  }
  return diff_sres_at(a->body, b->body, depth + 1, path + ".bracket.body");
}
}  // namespace

Diff diff_salg(const SAlgP& a, const SAlgP& b) { return diff_salg_at(a, b, "root"); }
Diff diff_ssc(const SScP& a, const SScP& b) { return diff_ssc_at(a, b, 0, "root"); }
Diff diff_spar(const SParP& a, const SParP& b) { return diff_spar_at(a, b, "root"); }
Diff diff_swrite(const SWriteP& a, const SWriteP& b) { return diff_swrite_at(a, b, 0, "root"); }
Diff diff_slat(const SLatP& a, const SLatP& b) { return diff_slat_at(a, b, "root"); }
Diff diff_sres(const SResP& a, const SResP& b) { return diff_sres_at(a, b, 0, "root"); }

// --- generic-side -------------------------------------------------------------
//
// Element descriptors track what a tree's leaf values hold; nesting composes
// differently per instance (a scope body's leaves hold computations, a writer
// body's hold decorations whose seeds are computations, a bracket body's hold
// release/use pairs of computations).

namespace {

struct Elem;
using ElemPtr = std::shared_ptr<const Elem>;
struct Elem {
  enum class Tag { Ground, Comp, ResPair, Decor } tag;
  ElemPtr inner;
};

ElemPtr elem_ground() {
  static const ElemPtr e = std::make_shared<const Elem>(Elem{Elem::Tag::Ground, nullptr});
  return e;
}
ElemPtr elem_comp(ElemPtr inner) {
  return std::make_shared<const Elem>(Elem{Elem::Tag::Comp, std::move(inner)});
}
ElemPtr elem_respair(ElemPtr inner) {
  return std::make_shared<const Elem>(Elem{Elem::Tag::ResPair, std::move(inner)});
}
ElemPtr elem_decor(ElemPtr inner) {
  return std::make_shared<const Elem>(Elem{Elem::Tag::Decor, std::move(inner)});
}

Diff diff_comp_at(const Computation& a, const Computation& b, const ElemPtr& elem,
                  const std::string& path);

Diff diff_elem(const Value& a, const Value& b, const ElemPtr& elem, const std::string& path) {
  switch (elem->tag) {
    case Elem::Tag::Ground: return diff_ground(a, b, path);
    case Elem::Tag::Comp:
      return diff_comp_at(a.as<Computation>("nested leaf"), b.as<Computation>("nested leaf"),
                          elem->inner, path + ".leaf");
    case Elem::Tag::ResPair: {
      const VPair& pa = a.as<VPair>("bracket pair");
      const VPair& pb = b.as<VPair>("bracket pair");
      if (Diff d = diff_comp_at(pa.first.as<Computation>(), pb.first.as<Computation>(), elem_ground(),
                                path + ".rel"))
        return d;
      // The use side is a computation returning continuation computations.
      return diff_comp_at(pa.second.as<Computation>(), pb.second.as<Computation>(),
                          elem_comp(elem->inner), path + ".use");
    }
    case Elem::Tag::Decor: {
      const WriteDecorPtr& da = a.as<WriteDecorPtr>("writer decoration");
      const WriteDecorPtr& db = b.as<WriteDecorPtr>("writer decoration");
      const auto* la = dynamic_cast<const ListenDecor*>(da.get());
      const auto* lb = dynamic_cast<const ListenDecor*>(db.get());
      if ((la != nullptr) != (lb != nullptr)) return mismatch(path, "different decoration tags");
      if (la) {
        for (const Value& w : dom_ints2()->values) {
          Diff d = diff_comp_at(la->fn()(w).as<Computation>(), lb->fn()(w).as<Computation>(),
                                elem->inner, path + ".listen(" + render(w) + ")");
          if (d) return d;
        }
        return std::nullopt;
      }
      const auto* pa = dynamic_cast<const PassDecor*>(da.get());
      const auto* pb = dynamic_cast<const PassDecor*>(db.get());
      if (!pa || !pb) return mismatch(path, "unknown decoration");
      for (const Value& w : dom_ints()->values)
        if (Diff d = diff_ground(pa->wfn()(w), pb->wfn()(w), path + ".pass.wfn(" + render(w) + ")"))
          return d;
      return diff_comp_at(pa->seed().as<Computation>(), pb->seed().as<Computation>(), elem->inner,
                          path + ".pass.seed");
    }
  }
  return std::nullopt;
}

Diff diff_comp_at(const Computation& a, const Computation& b, const ElemPtr& elem,
                  const std::string& path) {
  if (a.is_pure() != b.is_pure())
    return mismatch(path, a.is_pure() ? "leaf vs node" : "node vs leaf");
  if (a.is_pure()) return diff_elem(a.value(), b.value(), elem, path);

  const Op& na = a.node();
  const Op& nb = b.node();
  if (na.describe() != nb.describe())
    return mismatch(path, "nodes " + na.describe() + " vs " + nb.describe());

  if (const auto* x = dynamic_cast<const KAlgNode*>(&na)) {
    const auto* y = dynamic_cast<const KAlgNode*>(&nb);
    if (const auto* gx = dynamic_cast<const GetOp*>(x->op_ptr().get())) {
      const auto* gy = dynamic_cast<const GetOp*>(y->op_ptr().get());
      for (const Value& s : dom_ints()->values) {
        Diff d = diff_comp_at(gx->k(s).as<Computation>(), gy->k(s).as<Computation>(), elem,
                              path + ".get(" + render(s) + ")");
        if (d) return d;
      }
      return std::nullopt;
    }
    if (const auto* px = dynamic_cast<const PutOp*>(x->op_ptr().get())) {
      const auto* py = dynamic_cast<const PutOp*>(y->op_ptr().get());
      if (Diff d = diff_ground(px->s, py->s, path + ".put.s")) return d;
      return diff_comp_at(px->k.as<Computation>(), py->k.as<Computation>(), elem, path + ".put.k");
    }
    if (dynamic_cast<const FailOp*>(x->op_ptr().get())) return std::nullopt;
    if (const auto* ox = dynamic_cast<const OrOp*>(x->op_ptr().get())) {
      const auto* oy = dynamic_cast<const OrOp*>(y->op_ptr().get());
      if (Diff d = diff_comp_at(ox->p.as<Computation>(), oy->p.as<Computation>(), elem, path + ".or.p"))
        return d;
      return diff_comp_at(ox->q.as<Computation>(), oy->q.as<Computation>(), elem, path + ".or.q");
    }
    return mismatch(path, "unknown algebraic payload " + na.describe());
  }

  if (const auto* x = dynamic_cast<const KScNode*>(&na)) {
    const auto* y = dynamic_cast<const KScNode*>(&nb);
    if (const auto* cx = dynamic_cast<const CensorOp*>(&x->scope())) {
      const auto* cy = dynamic_cast<const CensorOp*>(&y->scope());
      for (const Value& w : dom_ints()->values)
        if (Diff d = diff_ground(cx->wfn()(w), cy->wfn()(w), path + ".censor.wfn(" + render(w) + ")"))
          return d;
    }
    return diff_comp_at(x->scope().body().as<Computation>(), y->scope().body().as<Computation>(),
                        elem_comp(elem), path + ".scope.body");
  }

  if (const auto* x = dynamic_cast<const KParNode*>(&na)) {
    const auto* y = dynamic_cast<const KParNode*>(&nb);
    if (x->iters().size() != y->iters().size()) return mismatch(path, "different branch counts");
    for (std::size_t i = 0; i < x->iters().size(); ++i) {
      Diff d = diff_comp_at(x->iters()[i].as<Computation>(), y->iters()[i].as<Computation>(),
                            elem_ground(), path + ".for.iter" + std::to_string(i));
      if (d) return d;
    }
    DomPtr vecs = dom_vectors(dom_ints2(), x->iters().size());
    for (const Value& vs : vecs->values) {
      Diff d = diff_comp_at(x->k()(vs).as<Computation>(), y->k()(vs).as<Computation>(), elem,
                            path + ".for.k(" + render(vs) + ")");
      if (d) return d;
    }
    return std::nullopt;
  }

  if (const auto* x = dynamic_cast<const KWriteNode*>(&na)) {
    const auto* y = dynamic_cast<const KWriteNode*>(&nb);
    return diff_comp_at(x->body().as<Computation>(), y->body().as<Computation>(), elem_decor(elem),
                        path + ".exec.body");
  }

  if (const auto* x = dynamic_cast<const KLatNode*>(&na)) {
    const auto* y = dynamic_cast<const KLatNode*>(&nb);
    const auto* fx = dynamic_cast<const ForceOp*>(x->op_ptr().get());
    const auto* fy = dynamic_cast<const ForceOp*>(y->op_ptr().get());
    if ((fx != nullptr) != (fy != nullptr)) return mismatch(path, "thunk vs force");
    if (fx && fx->ptr != fy->ptr) return mismatch(path, "different force pointers");
    if (Diff d = diff_ground(x->latent_state(), y->latent_state(), path + ".l")) return d;
    if (!fx) {
      Diff d = diff_comp_at(x->st()(0, unit()).as<Computation>(),
                            y->st()(0, unit()).as<Computation>(), elem_ground(), path + ".st(One,())");
      if (d) return d;
    }
    for (const Value& p : dom_ints()->values) {
      Diff d = diff_comp_at(x->k()(p).as<Computation>(), y->k()(p).as<Computation>(), elem,
                            path + ".k(" + render(p) + ")");
      if (d) return d;
    }
    return std::nullopt;
  }

  if (const auto* x = dynamic_cast<const KResNode*>(&na)) {
    const auto* y = dynamic_cast<const KResNode*>(&nb);
    return diff_comp_at(x->body().as<Computation>(), y->body().as<Computation>(), elem_respair(elem),
                        path + ".bracket.body");
  }

  return mismatch(path, "unsupported node kind " + na.describe());
}

}  // namespace

Diff diff_comp(Instance, const Computation& a, const Computation& b) {
  return diff_comp_at(a, b, elem_ground(), "root");
}

}  // namespace heff::laws
