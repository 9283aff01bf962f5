#pragma once

/**
 * Text grammar for events, lowest precedence first:
 *
 *     or      := and ('|' and)*
 *     and     := unary ('&' unary)*
 *     unary   := '!' unary | primary
 *     primary := atom | '(' or ')'
 *     atom    := 'p' digits
 *
 * so "!p0 & p1 | p2" parses as ((!p0) & p1) | p2.  Whitespace is free.
 */

#include <string_view>

#include "ontoprob/prob_core.hpp"
#include "ontoprob/tfu_algebra.hpp"

namespace ontoprob {

// Full Boolean grammar; throws std::invalid_argument on malformed text.
Event parse_event(std::string_view text);

// Restricted form for relative events: a '&'-conjunction of possibly
// negated atoms, e.g. "p0 & !p2".  No '|' and no nested negation.
RelEvent parse_rel_event(std::string_view text);

}  // namespace ontoprob
