// Command-line front end: validate, sample, construct, tree, stats.
// Exit status: 0 ok, 2 input or parse error, 3 semantic precondition failure.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ctcg/control_expr.hpp"
#include "ctcg/derivation_tree.hpp"
#include "ctcg/geffert.hpp"
#include "ctcg/grammar_io.hpp"
#include "ctcg/regulation.hpp"

namespace {

using namespace ctcg;

constexpr int exit_input = 2;
constexpr int exit_semantic = 3;

struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Manifest {
  std::vector<std::pair<std::string, std::string>> entries;

  template <typename T>
  void add(std::string key, const T& value) {
    std::ostringstream ss;
    ss << std::boolalpha << value;
    entries.emplace_back(std::move(key), ss.str());
  }

  std::string text(std::string_view prefix) const {
    std::string out;
    for (const auto& [k, v] : entries) out += std::string(prefix) + k + ": " + v + "\n";
    return out;
  }
};

long elapsed_ms(std::chrono::steady_clock::time_point since) {
  return static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - since).count());
}

Ctcg make_ctcg(const Grammar& g, const ControlLanguage& c) {
  try {
    return Ctcg(g, c);
  } catch (const GrammarError& e) {
    throw SemanticError(e.what());
  }
}

Mode mode_from(const std::string& text) {
  auto m = parse_mode(text);
  if (!m) throw std::invalid_argument("unknown mode: " + text);
  return *m;
}

void require_positive(std::initializer_list<std::pair<const char*, long>> bounds) {
  for (auto [name, v] : bounds)
    if (v <= 0) throw std::invalid_argument(std::string("--") + name + " must be positive");
}

std::string format_split(const BlockSplit& s) {
  auto blocks = [](const std::vector<Word>& bs) {
    if (bs.empty()) return std::string("eps");
    std::string out;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (i) out += '|';
      out += format_word(bs[i], true);
    }
    return out;
  };
  return "u=" + blocks(s.u) + " v=" + blocks(s.v);
}

int cmd_validate(const std::string& path, bool gnf) {
  Grammar g = load_grammar(path);
  std::cout << "classification: " << to_string(g.kind()) << "\n";
  std::cout << "nonterminals: " << g.nonterminals().size() << "\n";
  std::cout << "terminals: " << g.terminals().size() << "\n";
  std::cout << "productions: " << g.productions().size() << "\n";
  if (!gnf) return 0;
  auto report = validate_gnf(g);
  std::cout << "gnf: " << (report.valid ? "yes" : "no") << "\n";
  for (const auto& p : report.problems) std::cout << "problem: " << p << "\n";
  for (std::size_t i = 0; i < report.productions.size(); ++i) {
    const auto& tag = report.productions[i];
    const auto& p = g.productions()[i];
    std::cout << tag.label << ": " << format_word(p.lhs) << " -> " << format_word(p.rhs) << "  ";
    if (!tag.form) {
      std::cout << "invalid: " << tag.problem << "\n";
      continue;
    }
    std::cout << form_tag(*tag.form);
    for (const auto& s : tag.splits) std::cout << "  " << format_split(s);
    std::cout << "\n";
  }
  return report.valid ? 0 : exit_semantic;
}

int cmd_sample(const std::string& grammar_path, const std::string& control_path, const std::string& mode_text,
               long max_len, long max_depth, long max_width) {
  require_positive({{"max-len", max_len}, {"max-depth", max_depth}, {"max-width", max_width}});
  Mode mode = mode_from(mode_text);
  Grammar g = load_grammar(grammar_path);
  ControlLanguage c = load_control(control_path);
  Ctcg h = make_ctcg(g, c);

  auto t0 = std::chrono::steady_clock::now();
  SampleBounds bounds{static_cast<std::size_t>(max_len), static_cast<std::size_t>(max_depth),
                      static_cast<std::size_t>(max_width)};
  auto result = language_sample(h, mode, bounds);
  bool compact = single_char_names(g.terminals());
  for (const auto& w : result.words) std::cout << format_word(w, compact) << "\n";

  Manifest m;
  m.add("command", "sample");
  m.add("grammar", grammar_path);
  m.add("control", control_path);
  m.add("mode", to_string(mode));
  m.add("max_len", max_len);
  m.add("max_depth", max_depth);
  m.add("max_width", max_width);
  m.add("words", result.words.size());
  m.add("truncated", result.truncated);
  m.add("states", result.states);
  m.add("wall_time_ms", elapsed_ms(t0));
  std::cout << m.text("# ");
  return 0;
}

int cmd_construct(const std::string& path, const std::string& control_text, const std::string& out_dir) {
  ControlChoice choice;
  if (control_text == "eufreg") {
    choice = ControlChoice::eufreg;
  } else if (control_text == "union-free") {
    choice = ControlChoice::union_free;
  } else {
    throw std::invalid_argument("--control must be eufreg or union-free");
  }
  Grammar g = load_grammar(path);
  auto report = validate_gnf(g);
  if (!report.valid) {
    std::cerr << "error: not in Geffert normal form\n";
    for (const auto& p : report.problems) std::cerr << "  " << p << "\n";
    for (const auto& t : report.productions)
      if (!t.form) std::cerr << "  " << t.label << ": " << t.problem << "\n";
    return exit_semantic;
  }
  auto out = construct_ctcg(GeffertGrammar(g));
  auto rep = complexity_report(out, choice);

  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  fs::path dir(out_dir);
  write_text_file(dir / "core.grammar", format_grammar(out.core));
  write_text_file(dir / "control_eufreg.ctl", format_expr(out.r) + "\n");
  write_text_file(dir / "control_union_free.ctl", format_expr(out.r_hat) + "\n");
  write_text_file(dir / "control.ctl",
                  format_expr(choice == ControlChoice::eufreg ? out.r : out.r_hat) + "\n");
  write_text_file(dir / "control_grammar.grammar", format_grammar(out.control_grammar));

  Manifest m;
  m.add("command", "construct");
  m.add("input", path);
  m.add("control", to_string(choice));
  m.add("core_nonterminals", rep.core_nonterminals);
  m.add("control_nonterminals", rep.control_nonterminals);
  m.add("total_nonterminals", rep.total);
  m.add("stars", rep.stars);
  m.add("concats", rep.concats);
  m.add("union_free", rep.union_free);
  m.add("p_gen", out.partition.gen.size());
  m.add("p_gen_prime", out.partition.gen_prime.size());
  m.add("p_act", out.partition.act.size());
  m.add("p_pro", out.partition.pro.size());
  m.add("p_era", out.partition.era.size());
  m.add("files", "core.grammar control.ctl control_eufreg.ctl control_union_free.ctl control_grammar.grammar");
  write_text_file(dir / "manifest.txt", m.text(""));
  std::cout << m.text("");
  return 0;
}

int cmd_tree(const std::string& grammar_path, const std::string& control_path, const std::string& word_text,
             const std::string& mode_text, long max_depth, long max_width, const std::string& dot_path) {
  require_positive({{"max-depth", max_depth}, {"max-width", max_width}});
  Mode mode = mode_from(mode_text);
  Grammar g = load_grammar(grammar_path);
  Ctcg h = make_ctcg(g, load_control(control_path));
  Word w = tokenize_word(word_text, g.terminals());

  SampleOptions options;
  options.target = w;
  SampleBounds bounds{w.size(), static_cast<std::size_t>(max_depth), static_cast<std::size_t>(max_width)};
  auto result = language_sample(h, mode, bounds, options);
  const DerivationTree* t = result.witness(w);
  if (!t) {
    std::cout << "none within bounds\n";
    std::cout << "# truncated: " << std::boolalpha << result.truncated << "\n";
    return 0;
  }
  auto a = anatomy(*t, g);
  std::cout << to_bracket(*t) << "\n";
  std::cout << "depth: " << depth(*t) << "\n";
  std::cout << "m: " << a.m << "\n";
  std::cout << "n: " << a.n << "\n";
  std::cout << "kind: " << to_string(a.kind) << "\n";
  auto dot = to_dot(*t, g, true);
  if (dot_path.empty()) return 0;
  if (dot_path == "-") {
    std::cout << dot;
  } else {
    write_text_file(dot_path, dot);
  }
  return 0;
}

int cmd_stats(const std::string& grammar_path, const std::string& control_path) {
  if (grammar_path.empty() && control_path.empty())
    throw std::invalid_argument("stats needs --grammar and/or --control");
  if (!grammar_path.empty()) {
    Grammar g = load_grammar(grammar_path);
    std::cout << "classification: " << to_string(g.kind()) << "\n";
    std::cout << "nonterminals: " << g.nonterminals().size() << "\n";
    std::cout << "terminals: " << g.terminals().size() << "\n";
    std::cout << "productions: " << g.productions().size() << "\n";
  }
  if (!control_path.empty()) {
    auto c = load_control(control_path);
    OpCounts total;
    for (const auto& e : c.alternatives) {
      auto k = op_counts(e);
      total.stars += k.stars;
      total.concats += k.concats;
    }
    std::cout << "alternatives: " << c.alternatives.size() << "\n";
    std::cout << "union_free: " << std::boolalpha << is_union_free(c) << "\n";
    std::cout << "stars: " << total.stars << "\n";
    std::cout << "concats: " << total.concats << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-controlled and conclusive tree-controlled grammar toolkit"};
  app.require_subcommand(1);

  std::string grammar, control, mode, word, dot, out_dir, control_kind;
  long max_len = 0, max_depth = 0, max_width = 0;
  bool gnf = false;

  auto* validate = app.add_subcommand("validate", "parse and classify a grammar");
  validate->add_option("grammar", grammar, "grammar file")->required();
  validate->add_flag("--gnf", gnf, "check Geffert normal form");

  auto* sample = app.add_subcommand("sample", "bounded sample of a regulated language");
  sample->add_option("grammar", grammar, "core grammar file")->required();
  sample->add_option("control", control, "control expression file")->required();
  sample->add_option("--mode", mode, "tcg | c | sc | lc")->required();
  sample->add_option("--max-len", max_len, "longest word")->required();
  sample->add_option("--max-depth", max_depth, "deepest tree")->required();
  sample->add_option("--max-width", max_width, "longest level word")->required();

  auto* construct = app.add_subcommand("construct", "build the CTCG for a Geffert normal form grammar");
  construct->add_option("grammar", grammar, "grammar in Geffert normal form")->required();
  construct->add_option("--control", control_kind, "eufreg | union-free")->required();
  construct->add_option("--out-dir", out_dir, "output directory")->required();

  auto* tree = app.add_subcommand("tree", "first accepting derivation tree for a word");
  tree->add_option("grammar", grammar, "core grammar file")->required();
  tree->add_option("control", control, "control expression file")->required();
  tree->add_option("word", word, "terminal word, eps for the empty word")->required();
  tree->add_option("--mode", mode, "tcg | c | sc | lc")->required();
  tree->add_option("--max-depth", max_depth, "deepest tree")->required();
  tree->add_option("--max-width", max_width, "longest level word")->required();
  tree->add_option("--dot", dot, "write DOT with anatomy overlay here (- for stdout)");

  auto* stats = app.add_subcommand("stats", "sizes and operator counts");
  stats->add_option("--grammar", grammar, "grammar file");
  stats->add_option("--control", control, "control expression file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*validate) return cmd_validate(grammar, gnf);
    if (*sample) return cmd_sample(grammar, control, mode, max_len, max_depth, max_width);
    if (*construct) return cmd_construct(grammar, control_kind, out_dir);
    if (*tree) return cmd_tree(grammar, control, word, mode, max_depth, max_width, dot);
    if (*stats) return cmd_stats(grammar, control);
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_semantic;
  } catch (const GnfError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_semantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
