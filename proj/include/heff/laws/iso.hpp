#pragma once

#include <optional>

#include "heff/computation.hpp"
#include "heff/laws/specialized.hpp"

namespace heff::laws {

// The per-instance isomorphism witnesses between each specialized free monad
// and the generic computation tree over the corresponding signature. iso2 on
// a computation of the wrong shape throws TagError.

Computation iso1_alg(const SAlgP& t);
SAlgP iso2_alg(const Computation& m);

Computation iso1_sc(const SScP& t);
SScP iso2_sc(const Computation& m);

Computation iso1_par(const SParP& t);
SParP iso2_par(const Computation& m);

Computation iso1_write(const SWriteP& t);
SWriteP iso2_write(const Computation& m);

Computation iso1_lat(const SLatP& t);
SLatP iso2_lat(const Computation& m);

Computation iso1_res(const SResP& t);
SResP iso2_res(const Computation& m);

enum class Instance { Alg, Sc, Par, Write, Lat, Res };
std::string_view instance_name(Instance i);

}  // namespace heff::laws
