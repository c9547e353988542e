#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qm/config.hpp"
#include "qm/symbol_pattern.hpp"

namespace qm {

/// Evaluates one expression against an instance and returns the printed
/// result. Grammar:
///   reduce W | len W | pattern W | eq W, W | cw P, G | hw P, G |
///   cover T, P | abelian [W]
/// A word W is a sequence of letters (A:3 B:1, or t T a:2) and family
/// references w<i> or w<i>^<n>; "e" is the empty word. Two arguments are
/// separated by a comma, or given as exactly two tokens. Arguments of cover
/// may also be symbol strings such as 1!2@. Throws ParseError with the
/// offending position.
std::string evaluate(const Instance& inst, std::string_view expression);

}  // namespace qm
