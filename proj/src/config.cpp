#include "qm/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <queue>

#include "qm/error.hpp"

namespace qm {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) {
      pos_ = start;
      fail("expected integer");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

FiniteGroup group_spec(Cursor& cur) {
  if (cur.accept("cyclic:")) {
    const auto at = cur.pos();
    const long long n = cur.integer();
    if (n < 1 || n > 1024) throw ParseError("cyclic order must be in [1, 1024]", at);
    return FiniteGroup::cyclic(static_cast<int>(n));
  }
  if (cur.accept("product:")) {
    cur.expect("[");
    std::vector<FiniteGroup> factors;
    if (!cur.accept("]")) {
      do factors.push_back(group_spec(cur));
      while (cur.accept(","));
      cur.expect("]");
    }
    return FiniteGroup::direct_product(factors);
  }
  if (cur.accept("table:")) {
    cur.expect("[");
    std::vector<std::vector<int>> rows;
    do {
      cur.expect("[");
      std::vector<int> row;
      do row.push_back(static_cast<int>(cur.integer()));
      while (cur.accept(","));
      cur.expect("]");
      rows.push_back(std::move(row));
    } while (cur.accept(","));
    cur.expect("]");
    return FiniteGroup::from_table(rows);
  }
  cur.fail("expected cyclic:, product: or table:");
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view text) {
  Cursor cur(text);
  FiniteGroup g = group_spec(cur);
  if (!cur.done()) cur.fail("trailing input in group spec");
  return g;
}

std::vector<std::pair<Elem, Elem>> parse_map_spec(std::string_view text) {
  Cursor cur(text);
  cur.expect("map:");
  cur.expect("{");
  std::vector<std::pair<Elem, Elem>> out;
  if (!cur.accept("}")) {
    do {
      const auto x = static_cast<Elem>(cur.integer());
      if (!cur.accept("->")) cur.expect("→");
      const auto y = static_cast<Elem>(cur.integer());
      out.emplace_back(x, y);
    } while (cur.accept(","));
    cur.expect("}");
  }
  if (!cur.done()) cur.fail("trailing input in map spec");
  return out;
}

std::vector<Elem> extend_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                      const std::vector<std::pair<Elem, Elem>>& generator_images) {
  for (auto [s, t] : generator_images) {
    if (!source.contains(s)) throw ValidationError("map source " + std::to_string(s) + " is not a group element");
    if (!target.contains(t)) throw ValidationError("map target " + std::to_string(t) + " is not a group element");
    const int os = source.element_order(s), ot = target.element_order(t);
    if (os % ot != 0)
      throw ValidationError(std::to_string(t) + " has order " + std::to_string(ot) + ", not dividing the order " +
                            std::to_string(os) + " of " + std::to_string(s) + ": not a homomorphism");
  }
  std::vector<Elem> image(source.order(), -1);
  image[0] = 0;
  std::queue<Elem> todo;
  todo.push(0);
  while (!todo.empty()) {
    const Elem x = todo.front();
    todo.pop();
    for (auto [s, t] : generator_images) {
      const Elem y = source.mul(x, s);
      const Elem fy = target.mul(image[x], t);
      if (image[y] < 0) {
        image[y] = fy;
        todo.push(y);
      } else if (image[y] != fy) {
        throw ValidationError("not a homomorphism: element " + std::to_string(y) + " would map to both " +
                              std::to_string(image[y]) + " and " + std::to_string(fy));
      }
    }
  }
  for (Elem x = 0; x < source.order(); ++x)
    if (image[x] < 0)
      throw ValidationError("map does not determine the image of " + std::to_string(x) +
                            "; listed elements must generate the source");
  return image;
}

Caps parse_caps(const nlohmann::json& doc, Caps base) {
  if (doc.is_null()) return base;
  if (!doc.is_object()) throw ValidationError("caps must be an object");
  auto get = [&](const char* key, auto& field) {
    if (doc.contains(key)) field = doc.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("max_index", base.max_index);
  get("value_max_i", base.value_max_i);
  get("max_n", base.max_n);
  get("radius", base.radius);
  get("cross_max_n", base.cross_max_n);
  get("word_radius", base.word_radius);
  get("ball_radius", base.ball_radius);
  get("britton_samples", base.britton_samples);
  get("oracle_radius", base.oracle_radius);
  get("pattern_max_len", base.pattern_max_len);
  get("samples", base.samples);
  get("random_pairs", base.random_pairs);
  get("max_len", base.max_len);
  get("seed", base.seed);
  get("orbit_cap", base.orbit_cap);
  get("node_cap", base.node_cap);
  return base;
}

nlohmann::json caps_to_json(const Caps& c) {
  return {{"max_index", c.max_index},     {"value_max_i", c.value_max_i},
          {"max_n", c.max_n},             {"radius", c.radius},
          {"cross_max_n", c.cross_max_n}, {"word_radius", c.word_radius},
          {"ball_radius", c.ball_radius}, {"britton_samples", c.britton_samples},
          {"oracle_radius", c.oracle_radius},
          {"pattern_max_len", c.pattern_max_len}, {"samples", c.samples},
          {"random_pairs", c.random_pairs}, {"max_len", c.max_len},
          {"seed", c.seed},               {"orbit_cap", c.orbit_cap},
          {"node_cap", c.node_cap}};
}

namespace {

const nlohmann::json& field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string text_field(const nlohmann::json& doc, const char* key) {
  const auto& v = field(doc, key);
  if (!v.is_string()) throw ValidationError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Embedding embedding_field(const nlohmann::json& doc, const char* key, const FiniteGroup& source,
                          const FiniteGroup& target) {
  try {
    return Embedding(source, target, extend_homomorphism(source, target, parse_map_spec(text_field(doc, key))));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(key) + ": " + e.what());
  }
}

}  // namespace

Instance load_instance(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("instance config must be a JSON object");
  const std::string kind = text_field(doc, "kind");
  const std::string name = doc.value("name", std::string("custom"));
  const Caps caps = parse_caps(doc.value("caps", nlohmann::json()));
  const auto& fam = field(doc, "family");
  if (kind == "amalgam") {
    const FiniteGroup a = parse_group_spec(text_field(doc, "A"));
    const FiniteGroup b = parse_group_spec(text_field(doc, "B"));
    const FiniteGroup c = parse_group_spec(text_field(doc, "C"));
    AmalgamPresentation p(a, b, embedding_field(doc, "iotaA", c, a), embedding_field(doc, "iotaB", c, b));
    AmalgamFamilyParams params{field(fam, "a1").get<Elem>(), field(fam, "a2").get<Elem>(),
                               field(fam, "b").get<Elem>(), caps.max_index};
    AmalgamFamily f = validate_amalgam_params(p, params);
    return Instance{name, caps, AmalgamInstance{std::move(p), f}, doc};
  }
  if (kind == "hnn") {
    const FiniteGroup a = parse_group_spec(text_field(doc, "A"));
    const auto& c_doc = field(doc, "C");
    if (!c_doc.is_array()) throw ValidationError("field 'C' must be an element list of A");
    const Subgroup c(a, c_doc.get<std::vector<Elem>>());
    const FiniteGroup c_group = induced_group(a, c);
    // Map keys are elements of A lying in C; re-index them into c_group.
    std::vector<std::pair<Elem, Elem>> gens;
    for (auto [x, y] : parse_map_spec(text_field(doc, "phi"))) {
      const int k = c.index_of(x);
      if (k < 0) throw ValidationError("phi: " + std::to_string(x) + " is not in C");
      gens.emplace_back(k, y);
    }
    std::vector<Elem> phi_on_c;
    try {
      phi_on_c = extend_homomorphism(c_group, a, gens);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("phi: ") + e.what());
    }
    HnnPresentation p = HnnPresentation::from_subgroup(a, c, phi_on_c);
    HnnFamilyParams params{field(fam, "g").get<Elem>(), field(fam, "h").get<Elem>(), caps.max_index};
    HnnFamily f = validate_hnn_params(p, params);
    return Instance{name, caps, HnnInstance{std::move(p), f}, doc};
  }
  throw ValidationError("kind must be 'amalgam' or 'hnn', got '" + kind + "'");
}

Instance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path.string(), e.byte);
  }
  return load_instance(doc);
}

std::vector<std::string> builtin_names() { return {"psl2z", "sl2z", "klein-hnn"}; }

nlohmann::json builtin_config(std::string_view name) {
  if (name == "psl2z")
    return {{"name", "psl2z"},       {"kind", "amalgam"},    {"A", "cyclic:3"},
            {"B", "cyclic:2"},       {"C", "cyclic:1"},      {"iotaA", "map:{}"},
            {"iotaB", "map:{}"},     {"family", {{"a1", 1}, {"a2", 2}, {"b", 1}}},
            {"expect", {{"abelianization", "Z6"}}}};
  if (name == "sl2z")
    return {{"name", "sl2z"},        {"kind", "amalgam"},    {"A", "cyclic:6"},
            {"B", "cyclic:4"},       {"C", "cyclic:2"},      {"iotaA", "map:{1->3}"},
            {"iotaB", "map:{1->2}"}, {"family", {{"a1", 1}, {"a2", 2}, {"b", 1}}},
            {"expect", {{"abelianization", "Z12"}}}};
  if (name == "klein-hnn")
    return {{"name", "klein-hnn"},
            {"kind", "hnn"},
            {"A", "product:[cyclic:2,cyclic:2]"},
            {"C", {0, 1}},
            {"phi", "map:{1->2}"},
            {"family", {{"g", 2}, {"h", 1}}},
            {"caps", {{"oracle_radius", 3}}},
            {"expect", {{"abelianization", "Z2 + Z"}}}};
  throw ValidationError("unknown built-in instance '" + std::string(name) + "'");
}

Instance builtin_instance(std::string_view name) { return load_instance(builtin_config(name)); }

}  // namespace qm
