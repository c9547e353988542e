#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qm {

/// Syllable classes used by the word-family arguments: a1, a1^-1, a2, a2^-1
/// for amalgams; t, t^-1 for HNN extensions.
enum class Symbol : std::uint8_t { kOne, kOneBar, kTwo, kTwoBar, kPlus, kMinus };

/// Rendering: 1 ! 2 @ + -
char symbol_char(Symbol s);
Symbol symbol_from_char(char c);
/// The symbol of the inverse letter (1 <-> !, 2 <-> @, + <-> -).
Symbol bar(Symbol s);

struct SymbolPattern {
  std::vector<Symbol> symbols;

  std::size_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }
  std::string to_string() const;
  /// Pattern of the inverse word: reversed and barred.
  SymbolPattern inverse() const;
  SymbolPattern power(int n) const;
  /// Parses the rendering produced by to_string(); whitespace is ignored.
  static SymbolPattern parse(std::string_view text);

  friend bool operator==(const SymbolPattern&, const SymbolPattern&) = default;
};

/// Sequence of t-signs of an HNN word.
using TPattern = SymbolPattern;

}  // namespace qm
