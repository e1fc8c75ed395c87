// Command-line front end for the typicality reasoner.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptl/enumeration.hpp"
#include "ptl/errors.hpp"
#include "ptl/kb_file.hpp"
#include "ptl/lm_engine.hpp"
#include "ptl/normal_form.hpp"
#include "ptl/parser.hpp"
#include "ptl/postulates.hpp"
#include "ptl/pt_engine.hpp"
#include "ptl/theory.hpp"

namespace {

using namespace ptl;

struct GlobalOptions {
  std::string vocab_spec;
  bool json = false;
  bool trace = false;
  std::size_t max_atoms = 3;

  EnumerationLimits limits() const { return {max_atoms}; }
};

std::vector<std::string> split_names(const std::string& spec) {
  std::vector<std::string> names;
  std::string current;
  for (char c : spec) {
    if (c == ' ' || c == ',' || c == '\t') {
      if (!current.empty()) names.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) names.push_back(std::move(current));
  return names;
}

Vocabulary resolve(const GlobalOptions& global, KbFile& file,
                   const std::set<std::string>& query_atoms) {
  if (!global.vocab_spec.empty()) file.declared_vocab = split_names(global.vocab_spec);
  return resolve_vocabulary(file, query_atoms);
}

void warn_if_large(const GlobalOptions& global) {
  if (global.max_atoms >= 4)
    std::cerr << "warning: enumeration over " << global.max_atoms
              << " atoms is astronomically large; expect exhaustive modes not to finish\n";
}

nlohmann::json kb_json(const KnowledgeBase& kb) {
  nlohmann::json j = nlohmann::json::array();
  for (const Formula& f : kb) j.push_back(render(f));
  return j;
}

void print_trace(std::ostream& os, const LmTrace& trace) {
  for (const LmTraceEntry& e : trace.entries) {
    const Vocabulary& vocab = e.interpretation.vocab();
    os << "iteration " << e.iteration << ": S" << e.iteration << " = "
       << vocab.set_string(e.satisfying_set) << ", evaluated against:\n";
    print_layer_table(os, e.interpretation);
  }
}

void print_model_set(std::ostream& os, const std::vector<RankedInterpretation>& models) {
  os << models.size() << (models.size() == 1 ? " minimal model:\n" : " minimal models:\n");
  for (std::size_t i = 0; i < models.size(); ++i) {
    os << "model " << i + 1 << ":\n";
    print_layer_table(os, models[i]);
  }
}

int run_entails(const GlobalOptions& global, const std::string& kb_path,
                const std::string& formula_text, EntailmentMode mode) {
  warn_if_large(global);
  KbFile file = load_kb_file(kb_path);
  Formula query = parse(formula_text);
  Vocabulary vocab = resolve(global, file, query.atoms());
  KnowledgeBase kb = file.kb();
  EnumerationLimits limits = global.limits();

  bool entailed = entails(kb, mode, query, vocab, limits);

  nlohmann::json j;
  j["command"] = "entails";
  j["kb"] = kb_json(kb);
  j["vocab"] = vocab.names();
  j["mode"] = mode_name(mode);
  j["query"] = render(query);
  j["entailed"] = entailed;

  std::optional<LmResult> lm;
  std::vector<RankedInterpretation> family;
  std::optional<RankedInterpretation> counter;

  if (mode == EntailmentMode::Ranked) {
    if (!entailed) counter = find_counter_model(kb, query, vocab, limits);
  } else {
    family = deciding_models(kb, mode, vocab, limits);
    if (mode == EntailmentMode::LM && global.trace) lm = lm_minimal(kb, vocab);
    if (!entailed)
      for (const RankedInterpretation& r : family)
        if (!satisfies(r, query)) {
          counter = r;
          break;
        }
  }

  if (!family.empty()) {
    j["models"] = nlohmann::json::array();
    for (const RankedInterpretation& r : family) j["models"].push_back(r.to_json());
  }
  j["counter_model"] = counter ? counter->to_json() : nlohmann::json(nullptr);
  if (lm) j["trace"] = lm->trace.to_json();

  if (global.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (entailed ? "YES" : "NO") << "\n";
    if (mode == EntailmentMode::Ranked) {
      if (entailed)
        std::cout << "every ranked model of the base satisfies the query\n";
      else if (counter) {
        std::cout << "counter-model:\n";
        print_layer_table(std::cout, *counter);
      }
    } else if (counter) {
      std::cout << "counter-model among the deciding family:\n";
      print_layer_table(std::cout, *counter);
    } else {
      std::cout << "deciding ";
      print_model_set(std::cout, family);
    }
    if (lm) print_trace(std::cout, lm->trace);
  }
  return entailed ? 0 : 1;
}

int run_model(const GlobalOptions& global, const std::string& kb_path, EntailmentMode mode) {
  warn_if_large(global);
  KbFile file = load_kb_file(kb_path);
  Vocabulary vocab = resolve(global, file, {});
  KnowledgeBase kb = file.kb();
  EnumerationLimits limits = global.limits();

  nlohmann::json j;
  j["command"] = "model";
  j["kb"] = kb_json(kb);
  j["vocab"] = vocab.names();
  j["mode"] = mode_name(mode);

  if (mode == EntailmentMode::Ranked)
    throw UnsupportedCombinationError("the ranked model family is the whole model set; "
                                      "pick lm, pt, or ptp");

  if (mode == EntailmentMode::LM) {
    LmResult result = lm_minimal(kb, vocab);
    j["models"] = nlohmann::json::array({result.model.to_json()});
    if (global.trace) j["trace"] = result.trace.to_json();
    if (global.json) {
      std::cout << j.dump(2) << "\n";
    } else {
      print_layer_table(std::cout, result.model);
      if (global.trace) print_trace(std::cout, result.trace);
    }
    return 0;
  }

  std::vector<RankedInterpretation> models = mode == EntailmentMode::PT
                                                 ? pt_minimal_models(kb, vocab, limits)
                                                 : ptprime_minimal_models(kb, vocab, limits);
  j["models"] = nlohmann::json::array();
  for (const RankedInterpretation& r : models) j["models"].push_back(r.to_json());
  if (global.json)
    std::cout << j.dump(2) << "\n";
  else
    print_model_set(std::cout, models);
  return 0;
}

int run_normal_form(const GlobalOptions& global, const std::string& formula_text) {
  Formula f = parse(formula_text);
  std::vector<NormalFormSentence> sentences = to_normal_form(f);
  if (global.json) {
    nlohmann::json j;
    j["command"] = "normal-form";
    j["input"] = render(f);
    j["sentences"] = nlohmann::json::array();
    for (const NormalFormSentence& s : sentences) j["sentences"].push_back(s.to_string());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const NormalFormSentence& s : sentences) std::cout << s.to_string() << "\n";
  }
  return 0;
}

int run_check_postulates(const GlobalOptions& global, const std::string& kb_path,
                         EntailmentMode mode, const std::string& queries) {
  warn_if_large(global);
  KbFile file = load_kb_file(kb_path);
  Vocabulary vocab = resolve(global, file, {});
  KnowledgeBase kb = file.kb();

  PostulateOptions options;
  options.domain = queries == "subformulas" ? QueryDomain::Subformulas : QueryDomain::Canonical;
  options.limits = global.limits();

  constexpr PostulateId all[] = {PostulateId::P1, PostulateId::P2,      PostulateId::P3,
                                 PostulateId::P4, PostulateId::P5,      PostulateId::P5Prime,
                                 PostulateId::P6, PostulateId::P7,      PostulateId::P8,
                                 PostulateId::P9, PostulateId::P9Prime, PostulateId::P10};

  nlohmann::json j;
  j["command"] = "check-postulates";
  j["kb"] = kb_json(kb);
  j["vocab"] = vocab.names();
  j["mode"] = mode_name(mode);
  j["queries"] = queries;
  j["verdicts"] = nlohmann::json::array();

  struct Row {
    std::string name;
    std::string status;
    std::string note;
  };
  std::vector<Row> rows;

  for (PostulateId id : all) {
    try {
      PostulateVerdict v = check_postulate(id, mode, {kb}, vocab, options);
      j["verdicts"].push_back(v.to_json());
      Row row{postulate_name(id), "", ""};
      switch (v.status) {
        case PostulateVerdict::Status::Holds: row.status = "holds"; break;
        case PostulateVerdict::Status::Fails: row.status = "FAILS"; break;
        case PostulateVerdict::Status::NotConfirmed: row.status = "not confirmed"; break;
      }
      if (v.witness) {
        for (std::size_t i = 0; i < v.witness->formulas.size(); ++i)
          row.note += (i ? ", " : "") + render(v.witness->formulas[i]);
        if (!v.witness->note.empty()) row.note += " (" + v.witness->note + ")";
      } else if (!v.detail.empty()) {
        row.note = v.detail;
      }
      rows.push_back(std::move(row));
    } catch (const UnsupportedCombinationError& e) {
      j["verdicts"].push_back({{"postulate", postulate_name(id)},
                               {"mode", mode_name(mode)},
                               {"status", "not-applicable"},
                               {"detail", e.what()}});
      rows.push_back({postulate_name(id), "not applicable", e.what()});
    }
  }

  if (global.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::size_t width = 0;
  for (const Row& row : rows) width = std::max(width, row.name.size());
  for (const Row& row : rows) {
    std::cout << row.name << std::string(width - row.name.size() + 2, ' ') << row.status;
    if (!row.note.empty()) std::cout << "  -- " << row.note;
    std::cout << "\n";
  }
  return 0;
}

int run_impossibility_demo(const GlobalOptions& global) {
  ImpossibilityReport report = impossibility_demo();
  if (global.json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    report.print(std::cout);
  return 0;
}

int run_count(const GlobalOptions& global, std::size_t atoms) {
  std::vector<std::string> names;
  if (!global.vocab_spec.empty()) {
    names = split_names(global.vocab_spec);
  } else {
    const char* pool[] = {"a", "b", "c", "d", "e", "f"};
    if (atoms == 0 || atoms > std::size(pool))
      throw PtlError("--atoms must be between 1 and " + std::to_string(std::size(pool)));
    names.assign(pool, pool + atoms);
  }
  Vocabulary vocab(names);
  warn_if_large(global);
  std::uint64_t count = count_interpretations(vocab, global.limits());
  if (global.json) {
    nlohmann::json j;
    j["command"] = "count-interpretations";
    j["vocab"] = vocab.names();
    j["count"] = count;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << count << " ranked interpretations over " << vocab.size()
              << (vocab.size() == 1 ? " atom (" : " atoms (") << vocab.universe_size()
              << " valuations)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reasoner for propositional logic with a typicality operator"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--vocab", global.vocab_spec,
                 "fix the vocabulary and its bit order, e.g. \"f p r\" (default: inferred)");
  app.add_flag("--json", global.json, "machine-readable output");
  app.add_flag("--trace", global.trace, "include the fixed-point trace (lm mode)");
  app.add_option("--max-atoms", global.max_atoms, "enumeration bound (default 3, hard cap 4)")
      ->check(CLI::Range(std::size_t{1}, kEnumerationHardCap));

  const std::map<std::string, EntailmentMode> mode_map = {
      {"ranked", EntailmentMode::Ranked},
      {"lm", EntailmentMode::LM},
      {"pt", EntailmentMode::PT},
      {"ptp", EntailmentMode::PTPrime}};

  int exit_code = 0;

  std::string kb_path;
  std::string formula_text;
  EntailmentMode mode = EntailmentMode::LM;
  std::string queries = "canonical";
  std::size_t atoms = 2;

  CLI::App* entails_cmd = app.add_subcommand("entails", "decide entailment of a formula");
  entails_cmd->fallthrough();
  entails_cmd->add_option("--kb", kb_path, "knowledge-base file")->required();
  entails_cmd->add_option("--mode", mode, "ranked|lm|pt|ptp (default lm)")
      ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));
  entails_cmd->add_option("formula", formula_text, "query formula")->required();
  entails_cmd->callback(
      [&] { exit_code = run_entails(global, kb_path, formula_text, mode); });

  CLI::App* model_cmd = app.add_subcommand("model", "print the deciding model(s)");
  model_cmd->fallthrough();
  model_cmd->add_option("--kb", kb_path, "knowledge-base file")->required();
  model_cmd->add_option("--mode", mode, "lm|pt|ptp (default lm)")
      ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));
  model_cmd->callback([&] { exit_code = run_model(global, kb_path, mode); });

  CLI::App* nf_cmd = app.add_subcommand("normal-form", "rewrite a sentence into normal form");
  nf_cmd->fallthrough();
  nf_cmd->add_option("formula", formula_text, "sentence to rewrite")->required();
  nf_cmd->callback([&] { exit_code = run_normal_form(global, formula_text); });

  CLI::App* post_cmd = app.add_subcommand("check-postulates", "postulate report for a base");
  post_cmd->fallthrough();
  post_cmd->add_option("--kb", kb_path, "knowledge-base file")->required();
  post_cmd->add_option("--mode", mode, "ranked|lm|pt|ptp (default lm)")
      ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));
  post_cmd->add_option("--queries", queries, "canonical|subformulas (default canonical)")
      ->check(CLI::IsMember({"canonical", "subformulas"}));
  post_cmd->callback(
      [&] { exit_code = run_check_postulates(global, kb_path, mode, queries); });

  CLI::App* imp_cmd =
      app.add_subcommand("impossibility-demo", "the six-postulate impossibility walkthrough");
  imp_cmd->fallthrough();
  imp_cmd->callback([&] { exit_code = run_impossibility_demo(global); });

  CLI::App* count_cmd =
      app.add_subcommand("count-interpretations", "count ranked interpretations");
  count_cmd->fallthrough();
  count_cmd->add_option("--atoms", atoms, "vocabulary size (default 2)");
  count_cmd->callback([&] { exit_code = run_count(global, atoms); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ptl::PtlError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
