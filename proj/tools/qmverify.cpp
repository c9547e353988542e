// qmverify: verification harness for counting quasimorphisms on amalgamated
// free products and HNN extensions of finite groups.
//
// Exit codes: 0 success, 1 a check failed, 2 bad input or configuration.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qm/config.hpp"
#include "qm/defect.hpp"
#include "qm/error.hpp"
#include "qm/eval.hpp"
#include "qm/families.hpp"
#include "qm/suites.hpp"

namespace {

using namespace qm;

struct Common {
  std::string instance = "psl2z";
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string out;
};

Instance load(const Common& c) {
  Instance inst = c.config.empty() ? builtin_instance(c.instance) : load_instance_file(c.config);
  if (c.seed) inst.caps.seed = *c.seed;
  return inst;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ValidationError("cannot write " + c.out);
  f << text;
}

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("--instance", c.instance, "built-in instance: psl2z, sl2z, klein-hnn");
  cmd->add_option("--config", c.config, "instance config file (JSON); overrides --instance");
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out, "write output to this file");
}

template <class Model, class In>
typename Model::Word pattern_word(const Model& m, const In& in, const std::string& spec) {
  // Family words are named w<i>; anything else is a literal word.
  if (spec.size() >= 2 && spec[0] == 'w' && spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int i = std::stoi(spec.substr(1));
    if constexpr (std::is_same_v<Model, AmalgamPresentation>)
      return build_wi_amalgam(in.family, i);
    else
      return build_wi_hnn(in.family, i);
  }
  return m.parse(spec);
}

nlohmann::json defect_json(const DefectReport& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (auto [k, v] : r.histogram) hist[std::to_string(k)] = v;
  nlohmann::json out{{"pattern", r.pattern_id}, {"strategy", r.strategy}, {"seed", r.seed},
                     {"samples", r.samples},    {"observed_max", r.observed_max}, {"bound", r.bound},
                     {"passed", r.passed()},    {"histogram", hist}};
  if (r.witness) out["witness"] = {r.witness->first, r.witness->second};
  return out;
}

nlohmann::json cover_json(const CoverReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& v : r.verdicts) {
    nlohmann::json row{{"offset", v.offset}, {"refuting_index", v.refuting_index}};
    if (v.refuted())
      row["pair"] = std::string{symbol_char(*v.text_symbol)} + symbol_char(*v.probe_symbol);
    rows.push_back(row);
  }
  return {{"text", r.text.to_string()},
          {"probe", r.probe.to_string()},
          {"cannot_cover", r.cannot_cover()},
          {"refuted", r.refuted_count()},
          {"offsets", r.verdicts.size()},
          {"verdicts", rows}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting quasimorphisms on amalgams and HNN extensions of finite groups"};
  app.require_subcommand(1);

  Common verify_c, defect_c, eval_c, family_c, cover_c;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, verify_c, "json");
  std::vector<std::string> suites;
  bool all = false, timing = false;
  std::optional<int> max_i, max_n, radius, max_index;
  std::optional<long long> samples;
  verify->add_option("--suite", suites, "suite to run (repeatable)");
  verify->add_flag("--all", all, "run every suite that applies to the instance");
  verify->add_option("--max-i", max_i, "largest family index for value checks");
  verify->add_option("--max-n", max_n, "largest power n");
  verify->add_option("--max-index", max_index, "largest family index for pattern checks");
  verify->add_option("--radius", radius, "exhaustive radius (defect balls and word enumerations)");
  verify->add_option("--samples", samples, "sampled pairs per property");
  verify->add_flag("--timing", timing, "include wall-clock time in the report");

  auto* defect = app.add_subcommand("defect", "scan |delta h_w| over pairs of elements");
  add_common(defect, defect_c, "csv");
  std::string word = "w0";
  std::optional<int> ex_radius;
  std::optional<long long> random_count;
  int max_len = 50;
  bool serial = false;
  defect->add_option("--word", word, "pattern: family word w<i> or a literal word");
  defect->add_option("--exhaustive-radius", ex_radius, "all pairs with |x|, |y| <= radius");
  defect->add_option("--random", random_count, "number of random pairs");
  defect->add_option("--max-len", max_len, "maximum random word length");
  defect->add_flag("--serial", serial, "use the serial reference scan");

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  add_common(eval, eval_c, "csv");
  std::vector<std::string> expression;
  eval->add_option("expression", expression, "e.g. \"hw w0 w0^2\"")->required();

  auto* family = app.add_subcommand("family", "describe a family word");
  add_common(family, family_c, "json");
  int index = 0, power_n = 1;
  bool print_word = false;
  family->add_option("--index", index, "family index i");
  family->add_option("--n", power_n, "power of w_i");
  family->add_flag("--word", print_word, "include the full word");

  auto* cover = app.add_subcommand("cover", "covering refutation of W_i^2 against W_i^-1");
  add_common(cover, cover_c, "csv");
  int cover_index = 0;
  std::string text_pat, probe_pat;
  cover->add_option("--index", cover_index, "family index i");
  cover->add_option("--text", text_pat, "text symbol pattern, e.g. 1!2@");
  cover->add_option("--probe", probe_pat, "probe symbol pattern");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      Instance inst = load(verify_c);
      if (max_i) inst.caps.value_max_i = *max_i;
      if (max_n) inst.caps.max_n = *max_n;
      if (max_index) inst.caps.max_index = *max_index;
      if (radius) {
        inst.caps.radius = *radius;
        inst.caps.word_radius = *radius;
      }
      if (samples) inst.caps.samples = *samples;
      if (all) suites = applicable_suites(inst);
      if (suites.empty()) throw ValidationError("select suites with --suite or --all");
      const SuiteReport rep = run_suites(inst, suites);
      std::ostringstream os;
      if (verify_c.format == "json")
        os << rep.to_json(timing).dump(2) << '\n';
      else
        rep.write_csv(os);
      emit(verify_c, os.str());
      std::cerr << rep.records.size() - rep.failures() << "/" << rep.records.size() << " checks passed\n";
      return rep.passed() ? 0 : 1;
    }
    if (*defect) {
      const Instance inst = load(defect_c);
      DefectStrategy strategy = ExhaustiveStrategy{inst.caps.radius};
      if (ex_radius && random_count) throw ValidationError("choose one of --exhaustive-radius and --random");
      if (ex_radius) strategy = ExhaustiveStrategy{*ex_radius};
      if (random_count) strategy = RandomStrategy{*random_count, max_len, inst.caps.seed};
      const auto exec = serial ? Execution::kSerial : Execution::kParallel;
      const DefectReport rep = std::visit(
          [&](const auto& in) {
            const auto& m = in.presentation;
            const Pattern pat(m, pattern_word(m, in, word));
            return defect_scan(m, pat, strategy, exec, word);
          },
          inst.model);
      std::ostringstream os;
      if (defect_c.format == "json")
        os << defect_json(rep).dump(2) << '\n';
      else
        rep.write_csv(os);
      emit(defect_c, os.str());
      return rep.passed() ? 0 : 1;
    }
    if (*eval) {
      const Instance inst = load(eval_c);
      std::string expr;
      for (const auto& part : expression) expr += (expr.empty() ? "" : " ") + part;
      emit(eval_c, evaluate(inst, expr) + "\n");
      return 0;
    }
    if (*family) {
      const Instance inst = load(family_c);
      const nlohmann::json info = std::visit(
          [&](const auto& in) {
            const auto& m = in.presentation;
            const auto w = pattern_word(m, in, "w" + std::to_string(index));
            const auto wn = power(m, w, power_n);
            SymbolPattern sym;
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, AmalgamPresentation>)
              sym = family_pattern(in.family, index);
            else
              sym = m.t_pattern(w);
            sym = power_n < 0 ? sym.inverse().power(-power_n) : sym.power(power_n);
            nlohmann::json j{{"index", index},
                             {"n", power_n},
                             {"length", wn.size()},
                             {"reduced", m.is_reduced(wn)},
                             {"geodesic_length", m.length(m.element(wn))},
                             {"pattern", sym.to_string()},
                             {"max_run", consecutive_run_bound(sym)},
                             {"in_commutator_subgroup", m.in_commutator_subgroup(wn)},
                             {"commutator_certificate", commutator_certificate_check(m, in.family, index)}};
            if (print_word) j["word"] = m.format(wn);
            return j;
          },
          inst.model);
      std::ostringstream os;
      if (family_c.format == "json") {
        os << info.dump(2) << '\n';
      } else {
        std::string header, values;
        for (const auto& [k, v] : info.items()) {
          if (!header.empty()) header += ',', values += ',';
          header += k;
          values += v.is_string() ? v.get<std::string>() : v.dump();
        }
        os << header << '\n' << values << '\n';
      }
      emit(family_c, os.str());
      return 0;
    }
    if (*cover) {
      const Instance inst = load(cover_c);
      SymbolPattern text, probe;
      if (!text_pat.empty() || !probe_pat.empty()) {
        if (text_pat.empty() || probe_pat.empty()) throw ValidationError("--text and --probe go together");
        text = SymbolPattern::parse(text_pat);
        probe = SymbolPattern::parse(probe_pat);
      } else {
        const auto& in = std::get<AmalgamInstance>(inst.model);
        const auto wi = family_pattern(in.family, cover_index);
        text = wi.power(2);
        probe = wi.inverse();
      }
      const CoverReport rep = cover_refute(text, probe);
      std::ostringstream os;
      if (cover_c.format == "json")
        os << cover_json(rep).dump(2) << '\n';
      else
        rep.write_csv(os);
      emit(cover_c, os.str());
      std::cerr << (rep.cannot_cover() ? "cannot cover" : "may cover") << " (" << rep.refuted_count() << "/"
                << rep.verdicts.size() << " offsets refuted)\n";
      return 0;
    }
  } catch (const std::bad_variant_access&) {
    std::cerr << "error: this command needs an amalgam instance\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
