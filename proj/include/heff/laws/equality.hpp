#pragma once

#include <optional>
#include <string>

#include "heff/laws/iso.hpp"

namespace heff::laws {

// Tabulated structural equality: function-valued slots are compared by
// exhaustive application over their documented domains (tabulation is
// faithful, so this decides equality). Returns the path of the first
// mismatching subtree, or nullopt when equal.

std::optional<std::string> diff_salg(const SAlgP& a, const SAlgP& b);
std::optional<std::string> diff_ssc(const SScP& a, const SScP& b);
std::optional<std::string> diff_spar(const SParP& a, const SParP& b);
std::optional<std::string> diff_swrite(const SWriteP& a, const SWriteP& b);
std::optional<std::string> diff_slat(const SLatP& a, const SLatP& b);
std::optional<std::string> diff_sres(const SResP& a, const SResP& b);

// Generic-side equality per instance (leaves hold ground values at the top;
// nested positions follow each instance's slot schema).
std::optional<std::string> diff_comp(Instance inst, const Computation& a, const Computation& b);

}  // namespace heff::laws
