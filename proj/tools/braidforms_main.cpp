#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidforms/brick.hpp"
#include "braidforms/classify.hpp"
#include "braidforms/enumerate.hpp"
#include "braidforms/form.hpp"

using namespace braidforms;
using nlohmann::json;

namespace {

int hard_cap() {
  if (const char* env = std::getenv("BRAIDFORMS_HARD_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 16;
}

// "2..4" or "3".
bool parse_range(const std::string& text, int& lo, int& hi) {
  std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (...) {
    return false;
  }
  return lo >= 2 && hi >= lo;
}

int cmd_form(const std::string& word_text, bool as_json) {
  BraidWord w = parse(word_text);
  LinkingGraph g = linking_graph(w);
  SymForm m = symmetrized_form(g);
  BigInt det = determinant(m);
  Inertia in = signature(m);
  if (as_json) {
    json rows = json::array();
    for (int i = 0; i < m.dim; ++i) {
      json row = json::array();
      for (int j = 0; j < m.dim; ++j) row.push_back(m.at(i, j));
      rows.push_back(std::move(row));
    }
    json bricks_json = json::array();
    for (const Brick& b : g.vertices)
      bricks_json.push_back({{"column", b.column}, {"start", b.start}, {"end", b.end}});
    json edges = json::array();
    for (auto [i, j] : g.edges) edges.push_back({i, j});
    json out = {{"word", render(w)},
                {"dim", m.dim},
                {"matrix", std::move(rows)},
                {"bricks", std::move(bricks_json)},
                {"edges", std::move(edges)},
                {"det", det.str()},
                {"signature", {in.n_plus, in.n_zero, in.n_minus}}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(m);
    std::cout << "det = " << det << "\n";
    std::cout << "inertia = (" << in.n_plus << ", " << in.n_zero << ", " << in.n_minus << ")\n";
    std::cout << "linking graph (brick: neighbours)\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
      const Brick& b = g.vertices[v];
      std::cout << v << " [col " << b.column << " (" << b.start << "," << b.end << ")]:";
      for (int u : g.adjacency[v]) std::cout << " " << u;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_classify(const std::string& word_text, const SearchBudget& budget, bool pretty) {
  BraidWord w = parse(word_text);
  ClassifyOptions opts;
  opts.budget = budget;
  Classification cls = classify(w, opts);
  json j = to_json(cls);
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
  return 0;
}

int cmd_minor(const std::string& word_text, const SearchBudget& budget, bool pretty) {
  BraidWord w = parse(word_text);
  auto wit = find_minor(w, budget);
  json j;
  if (wit) {
    j = to_json(*wit);
    j["replay_ok"] = replay_witness(w, *wit);
  } else {
    j = {{"witness", nullptr}, {"reason", "none within budget"}};
  }
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
  return 0;
}

int cmd_enumerate(EnumSpec spec, const SearchBudget& budget, bool pretty) {
  spec.budget = budget;
  ClassifyOptions opts;
  opts.budget = budget;
  WitnessMemo memo;
  opts.memo = &memo;
  enumerate_words(spec, [&](const BraidWord& w) {
    json j = to_json(classify(w, opts));
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
  });
  return 0;
}

int cmd_verify(EnumSpec spec, const SearchBudget& budget, bool pretty) {
  spec.budget = budget;
  VerifyReport rep = run_verify(spec);
  json j = to_json(rep);
  j["spec"] = to_json(spec);
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
  if (rep.contradiction > 0 || rep.replay_failures > 0 || rep.min4_pd_exceptions > 0) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive braid links: symmetrised Seifert forms, Dynkin types, forbidden minors"};
  app.require_subcommand(1);

  std::string word_text;
  bool pretty = false, as_json = false;
  SearchBudget budget;
  int budget_depth = budget.max_depth;
  long budget_states = budget.max_states;
  int allow_stab = 1;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-depth", budget_depth, "max moves per witness search");
    sub->add_option("--budget-states", budget_states, "max states per witness search");
    sub->add_option("--allow-stabilize", allow_stab, "permit Markov stabilizations (0/1)");
  };

  auto* form_cmd = app.add_subcommand("form", "print the symmetrised Seifert form");
  form_cmd->add_option("word", word_text, "braid word")->required();
  form_cmd->add_flag("--json", as_json, "machine readable output");

  auto* classify_cmd = app.add_subcommand("classify", "classify the closure");
  classify_cmd->add_option("word", word_text, "braid word")->required();
  classify_cmd->add_flag("--pretty", pretty, "indent JSON");
  add_budget(classify_cmd);

  auto* minor_cmd = app.add_subcommand("minor", "search for a forbidden-minor witness");
  minor_cmd->add_option("word", word_text, "braid word")->required();
  minor_cmd->add_flag("--pretty", pretty, "indent JSON");
  add_budget(minor_cmd);

  std::string strands_text = "2..3";
  int max_len = 8, min_len = 0, workers = 1;
  bool no_dedup = false, no_witness = false, min4 = false;

  auto add_enum = [&](CLI::App* sub) {
    sub->add_option("--strands", strands_text, "strand range, e.g. 2..4");
    sub->add_option("--max-len", max_len, "maximum word length")->required();
    sub->add_option("--min-len", min_len, "minimum word length");
    sub->add_flag("--no-dedup", no_dedup, "process every word, not one per rotation class");
    sub->add_option("--workers", workers, "worker threads");
    sub->add_flag("--pretty", pretty, "indent JSON");
  };

  auto* enum_cmd = app.add_subcommand("enumerate", "classify every enumerated word (JSON lines)");
  add_enum(enum_cmd);
  add_budget(enum_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "enumeration harness for the two theorems");
  add_enum(verify_cmd);
  add_budget(verify_cmd);
  verify_cmd->add_flag("--no-witness-search", no_witness, "skip the minor search");
  verify_cmd->add_flag("--min4-scan", min4,
                       "only hunt positive-definite prime factors on >= 4 strands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  budget.max_depth = budget_depth;
  budget.max_states = budget_states;
  budget.allow_stabilize = allow_stab != 0;

  try {
    if (form_cmd->parsed()) return cmd_form(word_text, as_json);
    if (classify_cmd->parsed()) return cmd_classify(word_text, budget, pretty);
    if (minor_cmd->parsed()) return cmd_minor(word_text, budget, pretty);

    EnumSpec spec;
    if (!parse_range(strands_text, spec.strands_lo, spec.strands_hi)) {
      std::cerr << "error: bad --strands range '" << strands_text << "'\n";
      return 1;
    }
    spec.hard_cap = hard_cap();
    if (max_len > spec.hard_cap) {
      std::cerr << "error: --max-len " << max_len << " exceeds hard cap " << spec.hard_cap
                << " (override with BRAIDFORMS_HARD_CAP)\n";
      return 1;
    }
    spec.len_lo = min_len;
    spec.len_hi = max_len;
    spec.dedup = !no_dedup;
    spec.workers = workers;
    spec.mode = min4 ? VerifyMode::Min4Scan
                     : (no_witness ? VerifyMode::NoWitness : VerifyMode::Full);
    if (enum_cmd->parsed()) return cmd_enumerate(spec, budget, pretty);
    return cmd_verify(spec, budget, pretty);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
