#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qm/amalgam.hpp"
#include "qm/families.hpp"
#include "qm/finite_group.hpp"
#include "qm/hnn.hpp"

namespace qm {

/// Parses `cyclic:n`, `product:[spec,...]` or `table:[[...],...]`.
FiniteGroup parse_group_spec(std::string_view text);

/// Parses `map:{x->y,...}` into (source, target) pairs. Identity entries may
/// be omitted.
std::vector<std::pair<Elem, Elem>> parse_map_spec(std::string_view text);

/// Extends generator images to a homomorphism source -> target. Throws
/// ValidationError if the images are inconsistent or do not generate.
std::vector<Elem> extend_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                      const std::vector<std::pair<Elem, Elem>>& generator_images);

/// Run sizes for the verification suites.
struct Caps {
  int max_index = kDefaultMaxIndex;  // pattern-level checks (pure string work)
  int value_max_i = 1;               // h/c value checks
  int max_n = 3;
  int radius = 3;          // exhaustive defect radius
  int cross_max_n = 2;     // n range for h_{w_j}(w_i^n), j > i
  int word_radius = 5;     // exhaustive word length for word-level checks
  int ball_radius = 4;     // Cayley ball radius for geodesic length checks
  int oracle_radius = 4;   // |g| bound for the oracle comparison
  int pattern_max_len = 4;
  long long samples = 1000;  // Lipschitz / symmetry / splitting samples
  long long britton_samples = 500;
  long long random_pairs = 10000;
  int max_len = 50;
  std::uint64_t seed = 42;
  long long orbit_cap = 1 << 20;
  long long node_cap = 2'000'000;
};

struct AmalgamInstance {
  AmalgamPresentation presentation;
  AmalgamFamily family;
};

struct HnnInstance {
  HnnPresentation presentation;
  HnnFamily family;
};

struct Instance {
  std::string name;
  Caps caps;
  std::variant<AmalgamInstance, HnnInstance> model;
  nlohmann::json source;

  bool is_amalgam() const { return model.index() == 0; }
};

/// Instance document:
///   {"name": "...", "kind": "amalgam",
///    "A": "<group>", "B": "<group>", "C": "<group>",
///    "iotaA": "map:{...}", "iotaB": "map:{...}",
///    "family": {"a1": 1, "a2": 2, "b": 1}, "caps": {...}}
///   {"name": "...", "kind": "hnn", "A": "<group>", "C": [elements of A],
///    "phi": "map:{...}", "family": {"g": 2, "h": 1}, "caps": {...}}
/// Maps list generator images; they are extended to homomorphisms.
Instance load_instance(const nlohmann::json& doc);
Instance load_instance_file(const std::filesystem::path& path);

std::vector<std::string> builtin_names();
nlohmann::json builtin_config(std::string_view name);
Instance builtin_instance(std::string_view name);

Caps parse_caps(const nlohmann::json& doc, Caps base = {});
nlohmann::json caps_to_json(const Caps& caps);

}  // namespace qm
