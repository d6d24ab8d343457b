#pragma once

// Shell-friendly text forms. Spaces: lp:<p>:<n> (p may be "inf"),
// hilbert:<n>, weighted:<file.json>. Elements: "[c1,...,cn];alpha".

#include <string>
#include <string_view>

#include "order_unit.hpp"

namespace spinx {

// Throws Parse for malformed text and InvalidSpace for bad parameters.
Space parse_space(std::string_view text);
OrderElement parse_element(const Space& space, std::string_view text);

// Strict decimal parse of the whole string.
double parse_real(std::string_view text);

}  // namespace spinx
