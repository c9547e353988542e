#include "qm/symbol_pattern.hpp"

#include <algorithm>
#include <cctype>

#include "qm/error.hpp"

namespace qm {

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::kOne: return '1';
    case Symbol::kOneBar: return '!';
    case Symbol::kTwo: return '2';
    case Symbol::kTwoBar: return '@';
    case Symbol::kPlus: return '+';
    case Symbol::kMinus: return '-';
  }
  return '?';
}

Symbol symbol_from_char(char c) {
  switch (c) {
    case '1': return Symbol::kOne;
    case '!': return Symbol::kOneBar;
    case '2': return Symbol::kTwo;
    case '@': return Symbol::kTwoBar;
    case '+': return Symbol::kPlus;
    case '-': return Symbol::kMinus;
    default: throw ParseError(std::string("unknown pattern symbol '") + c + "'", 0);
  }
}

Symbol bar(Symbol s) {
  switch (s) {
    case Symbol::kOne: return Symbol::kOneBar;
    case Symbol::kOneBar: return Symbol::kOne;
    case Symbol::kTwo: return Symbol::kTwoBar;
    case Symbol::kTwoBar: return Symbol::kTwo;
    case Symbol::kPlus: return Symbol::kMinus;
    case Symbol::kMinus: return Symbol::kPlus;
  }
  return s;
}

std::string SymbolPattern::to_string() const {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(symbol_char(s));
  return out;
}

SymbolPattern SymbolPattern::inverse() const {
  SymbolPattern out{{symbols.rbegin(), symbols.rend()}};
  for (auto& s : out.symbols) s = bar(s);
  return out;
}

SymbolPattern SymbolPattern::power(int n) const {
  SymbolPattern out;
  out.symbols.reserve(symbols.size() * static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) out.symbols.insert(out.symbols.end(), symbols.begin(), symbols.end());
  return out;
}

SymbolPattern SymbolPattern::parse(std::string_view text) {
  SymbolPattern out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    try {
      out.symbols.push_back(symbol_from_char(text[i]));
    } catch (const ParseError&) {
      throw ParseError(std::string("unknown pattern symbol '") + text[i] + "'", i);
    }
  }
  return out;
}

}  // namespace qm
