#pragma once

#include <random>

#include "heff/computation.hpp"

#include "heff/laws/specialized.hpp"

namespace heff::laws {

using Rng = std::mt19937_64;

// Geometric depth distribution capped at 4; continuation-table domains of
// size <= 4 drawn from the small universes; seeds fixed per suite run.

SAlgP gen_salg(Rng& rng, int depth);
SScP gen_ssc(Rng& rng, int depth);
SParP gen_spar(Rng& rng, int depth);
SWriteP gen_swrite(Rng& rng, int depth);
SLatP gen_slat(Rng& rng, int depth);
SResP gen_sres(Rng& rng, int depth);

// Generic-side trees built directly from the node constructors (independent
// of the specialized encodings and the isos). Bracket use-slots are generated
// in the canonical pure-continuation form.
Computation gen_comp_alg(Rng& rng, int depth);
Computation gen_comp_sc(Rng& rng, int depth);
Computation gen_comp_par(Rng& rng, int depth);
Computation gen_comp_write(Rng& rng, int depth);
Computation gen_comp_lat(Rng& rng, int depth);
Computation gen_comp_res(Rng& rng, int depth);

// State-only and choice-only specialized trees (handler-equivalence inputs).
SAlgP gen_salg_state(Rng& rng, int depth);
SAlgP gen_salg_choice(Rng& rng, int depth);

Value gen_ground(Rng& rng);  // a value from the small universe

}  // namespace heff::laws
