#include "qm/eval.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "qm/error.hpp"
#include "qm/families.hpp"
#include "qm/quasimorphism.hpp"

namespace qm {

namespace {

struct Token {
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    } else if (s[i] == ',') {
      out.push_back({",", i++});
    } else {
      const std::size_t start = i;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',') ++i;
      out.push_back({std::string(s.substr(start, i - start)), start});
    }
  }
  return out;
}

using Group = std::vector<Token>;

/// Splits argument tokens into the requested number of arguments.
std::vector<Group> split_args(const std::vector<Token>& toks, std::size_t end_pos, int want) {
  std::vector<Group> groups(1);
  for (const auto& t : toks) {
    if (t.text == ",") {
      if (groups.back().empty()) throw ParseError("empty argument before ','", t.pos);
      groups.emplace_back();
    } else {
      groups.back().push_back(t);
    }
  }
  if (groups.size() > 1 && groups.back().empty()) throw ParseError("empty argument after ','", end_pos);
  if (groups.size() == 1 && groups[0].empty()) groups.clear();
  if (want == 2 && groups.size() == 1) {
    if (groups[0].size() != 2)
      throw ParseError("expected two arguments: separate them with ',' or give exactly two tokens",
                       groups[0].empty() ? end_pos : groups[0].front().pos);
    groups = {{groups[0][0]}, {groups[0][1]}};
  }
  if (static_cast<int>(groups.size()) != want) {
    const std::size_t at = static_cast<int>(groups.size()) > want ? groups[want].front().pos : end_pos;
    throw ParseError("expected " + std::to_string(want) + " argument(s), got " + std::to_string(groups.size()), at);
  }
  return groups;
}

/// A family reference w<i> or w<i>^<n>; returns false if tok is not one.
bool family_ref(const Token& tok, int& index, int& exponent) {
  const std::string& s = tok.text;
  if (s.size() < 2 || s[0] != 'w' || !std::isdigit(static_cast<unsigned char>(s[1]))) return false;
  std::size_t i = 1;
  index = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    index = index * 10 + (s[i] - '0');
    if (index > 1000) throw ParseError("family index too large", tok.pos + 1);
    ++i;
  }
  exponent = 1;
  if (i == s.size()) return true;
  if (s[i] != '^') throw ParseError("expected '^' after family index", tok.pos + i);
  ++i;
  const std::size_t start = i;
  if (i < s.size() && s[i] == '-') ++i;
  if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("expected exponent", tok.pos + i);
  long long e = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    e = e * 10 + (s[i] - '0');
    if (e > 1000) throw ParseError("exponent too large", tok.pos + start);
    ++i;
  }
  if (i != s.size()) throw ParseError("unexpected character in family reference", tok.pos + i);
  exponent = static_cast<int>(s[start] == '-' ? -e : e);
  return true;
}

template <class M>
struct Expr {
  typename M::Word word;
  std::optional<SymbolPattern> symbols;  // set when every term is a family reference
};

template <class Model, class FamilyWord, class FamilySymbols>
Expr<Model> parse_expr(const Model& m, const Group& g, FamilyWord&& fam_word, FamilySymbols&& fam_symbols) {
  Expr<Model> out;
  out.symbols = SymbolPattern{};
  for (const auto& tok : g) {
    int index = 0, exponent = 1;
    if (tok.text == "e") continue;
    if (family_ref(tok, index, exponent)) {
      typename Model::Word w;
      SymbolPattern sym;
      try {
        w = fam_word(index);
        sym = fam_symbols(index);
      } catch (const CapExceeded& e) {
        throw ParseError(e.what(), tok.pos);
      }
      const auto wp = power(m, w, exponent);
      out.word.insert(out.word.end(), wp.begin(), wp.end());
      const auto sp = exponent < 0 ? sym.inverse().power(-exponent) : sym.power(exponent);
      if (out.symbols) out.symbols->symbols.insert(out.symbols->symbols.end(), sp.symbols.begin(), sp.symbols.end());
      continue;
    }
    typename Model::Word letters;
    try {
      letters = m.parse(tok.text);
    } catch (const ParseError& e) {
      throw ParseError("invalid letter '" + tok.text + "'", tok.pos + e.position());
    } catch (const ValidationError& e) {
      throw ParseError(std::string("invalid letter '") + tok.text + "': " + e.what(), tok.pos);
    }
    out.word.insert(out.word.end(), letters.begin(), letters.end());
    out.symbols.reset();
  }
  return out;
}

bool symbol_string(const Group& g) {
  for (const auto& t : g)
    for (char c : t.text)
      if (std::string_view("12!@+-").find(c) == std::string_view::npos) return false;
  return !g.empty();
}

std::string cover_text(const CoverReport& rep) {
  std::ostringstream os;
  const auto offsets = rep.verdicts.size();
  if (offsets == 0) return "probe longer than text";
  if (rep.cannot_cover()) {
    os << "cannot cover (" << rep.refuted_count() << "/" << offsets << " offsets refuted)";
  } else {
    for (const auto& v : rep.verdicts)
      if (!v.refuted()) {
        os << "may cover (" << rep.refuted_count() << "/" << offsets << " offsets refuted; offset " << v.offset
           << " not refuted)";
        break;
      }
  }
  return os.str();
}

std::string render(const std::vector<mpz_class>& coords) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].get_str();
  os << ')';
  return os.str();
}

template <class Model, class In>
std::string run(const Model& m, const In& in, const std::vector<Token>& toks, std::size_t end_pos) {
  const std::string cmd = toks.front().text;
  const std::vector<Token> rest(toks.begin() + 1, toks.end());
  auto fam_word = [&](int i) {
    if constexpr (std::is_same_v<Model, AmalgamPresentation>)
      return build_wi_amalgam(in.family, i);
    else
      return build_wi_hnn(in.family, i);
  };
  auto fam_symbols = [&](int i) {
    if constexpr (std::is_same_v<Model, AmalgamPresentation>)
      return family_pattern(in.family, i);
    else
      return m.t_pattern(build_wi_hnn(in.family, i));
  };
  auto expr = [&](const Group& g) { return parse_expr(m, g, fam_word, fam_symbols); };
  auto symbols_of = [&](const Group& g) -> SymbolPattern {
    if (symbol_string(g)) {
      std::string s;
      for (const auto& t : g) s += t.text;
      return SymbolPattern::parse(s);
    }
    const auto e = expr(g);
    if constexpr (std::is_same_v<Model, AmalgamPresentation>) {
      if (e.symbols) return *e.symbols;
      return symbol_pattern(in.family, e.word);
    } else {
      return m.t_pattern(e.word);
    }
  };
  auto show = [&](const typename Model::Word& w) { return w.empty() ? std::string("e") : m.format(w); };

  if (cmd == "reduce") {
    const auto e = expr(split_args(rest, end_pos, 1)[0]);
    if constexpr (std::is_same_v<Model, AmalgamPresentation>)
      return show(m.reduce(e.word));
    else
      return show(m.britton_reduce(e.word));
  }
  if (cmd == "len") return std::to_string(m.length(m.element(expr(split_args(rest, end_pos, 1)[0]).word)));
  if (cmd == "eq") {
    const auto args = split_args(rest, end_pos, 2);
    return m.equals(expr(args[0]).word, expr(args[1]).word) ? "true" : "false";
  }
  if (cmd == "cw" || cmd == "hw") {
    const auto args = split_args(rest, end_pos, 2);
    const Pattern pat(m, expr(args[0]).word);
    const auto g = m.element(expr(args[1]).word);
    return std::to_string(cmd == "cw" ? c_w(m, g, pat) : h_w(m, g, pat));
  }
  if (cmd == "pattern") return symbols_of(split_args(rest, end_pos, 1)[0]).to_string();
  if (cmd == "cover") {
    const auto args = split_args(rest, end_pos, 2);
    return cover_text(cover_refute(symbols_of(args[0]), symbols_of(args[1])));
  }
  if (cmd == "abelian") {
    if (rest.empty()) return m.abelianization().invariants().to_string();
    const auto w = expr(split_args(rest, end_pos, 1)[0]).word;
    const auto coords = m.abelianization().coordinates(m.abelian_image(w));
    return m.in_commutator_subgroup(w) ? "0" : render(coords);
  }
  throw ParseError("unknown command '" + cmd + "'", toks.front().pos);
}

}  // namespace

std::string evaluate(const Instance& inst, std::string_view expression) {
  const auto toks = tokenize(expression);
  if (toks.empty()) throw ParseError("empty expression", 0);
  return std::visit([&](const auto& in) { return run(in.presentation, in, toks, expression.size()); }, inst.model);
}

}  // namespace qm
