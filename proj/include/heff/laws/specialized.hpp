#pragma once

#include <memory>

#include "heff/laws/tabulated.hpp"

namespace heff::laws {

// Direct encodings of the six specialized free monads, with continuation
// slots stored as lookup tables so trees compare structurally. Table outputs
// and tree-valued leaf payloads are Value-erased subtrees of the same type.

// --- Free over an algebraic signature (State + Choice) ----------------------
struct SAlg;
using SAlgP = std::shared_ptr<const SAlg>;
struct SAlg {
  enum class Tag { Leaf, Get, Put, Fail, Or } tag;
  Value v;     // Leaf value, Put state
  Table k;     // Get: state -> SAlgP
  SAlgP a, b;  // Put continuation; Or branches
};
SAlgP salg_leaf(Value v);
SAlgP salg_get(Table k);
SAlgP salg_put(Value s, SAlgP k);
SAlgP salg_fail();
SAlgP salg_or(SAlgP p, SAlgP q);

// --- Free_Sc over Once + Censor ----------------------------------------------
// Enter bodies are trees whose leaf values hold the continuation subtrees.
struct SSc;
using SScP = std::shared_ptr<const SSc>;
struct SSc {
  enum class Tag { Leaf, Once, Censor } tag;
  Value v;    // Leaf value
  Table wfn;  // Censor: w -> w over dom_ints
  SScP body;  // scope body (leaves hold Value::of(SScP))
};
SScP ssc_leaf(Value v);
SScP ssc_once(SScP body);
SScP ssc_censor(Table wfn, SScP body);
// Rewrites the tree's leaf values (the functor action of Free_Sc).
SScP ssc_fmap(const ValueFn& f, const SScP& t);

// --- Free_Par -----------------------------------------------------------------
struct SPar;
using SParP = std::shared_ptr<const SPar>;
struct SPar {
  enum class Tag { Leaf, For } tag;
  Value v;                  // Leaf value
  std::vector<SParP> iters; // branch computations (leaves over dom_ints2)
  Table k;                  // collected branch values -> SParP
};
SParP spar_leaf(Value v);
SParP spar_for(std::vector<SParP> iters, Table k);

// --- Free_Write over Listen + Pass ---------------------------------------------
struct SWrite;
using SWriteP = std::shared_ptr<const SWrite>;
struct SWDecor {
  enum class Tag { Listen, Pass } tag;
  Table listen_k;   // w -> SWriteP (dom_ints)
  Table pass_wfn;   // w -> w (dom_ints)
  SWriteP pass_seed;
};
using SWDecorP = std::shared_ptr<const SWDecor>;
struct SWrite {
  enum class Tag { Leaf, Exec } tag;
  Value v;       // Leaf value
  SWriteP body;  // Exec body (leaves hold Value::of(SWDecorP))
};
SWriteP swrite_leaf(Value v);
SWriteP swrite_exec(SWriteP body);
SWriteP swrite_fmap(const ValueFn& f, const SWriteP& t);

// --- Free_Lat over Thunking -----------------------------------------------------
struct SLat;
using SLatP = std::shared_ptr<const SLat>;
struct SLat {
  enum class Tag { Leaf, Node } tag;
  Value v;                 // Leaf value
  bool is_thunk = false;   // Node: Thunk or Force
  std::int64_t force_ptr = 0;
  Value l;                 // latent state (unit; the generic slot shape)
  SLatP st_one;            // Thunk's single subcomputation; null for Force
  Table k;                 // continuation (dom_ints) -> SLatP
};
SLatP slat_leaf(Value v);
SLatP slat_thunk(SLatP st_one, Table k);
SLatP slat_force(std::int64_t ptr, Table k);

// --- Free_Res --------------------------------------------------------------------
struct SRes;
using SResP = std::shared_ptr<const SRes>;
struct SRes {
  enum class Tag { Leaf, Bracket } tag;
  Value v;     // Leaf value
  SResP body;  // leaves hold Value::of(VPair{Value::of(SResP rel), Value::of(SResP use)})
};
SResP sres_leaf(Value v);
SResP sres_bracket(SResP body);
SResP sres_fmap(const ValueFn& f, const SResP& t);

}  // namespace heff::laws
