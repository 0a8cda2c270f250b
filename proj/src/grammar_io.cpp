#include "ctcg/grammar_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace ctcg {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t column_of(std::string_view line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.data()) + 1;
}

struct LineParser {
  std::size_t number;
  std::string_view line;

  [[noreturn]] void fail(std::string_view at, const std::string& message) const {
    throw ParseError(number, at.data() ? column_of(line, at) : 1, message);
  }

  Symbol symbol(std::string_view token) const {
    if (!valid_symbol_name(token)) fail(token, "invalid symbol name '" + std::string(token) + "'");
    return Symbol::named(token);
  }

  std::vector<Symbol> list(std::string_view body) const {
    std::vector<Symbol> out;
    std::size_t i = 0;
    while (i <= body.size()) {
      auto j = body.find(',', i);
      if (j == std::string_view::npos) j = body.size();
      auto item = trim(body.substr(i, j - i));
      // a comma separated item may still hold several space separated names
      std::size_t k = 0;
      while (k < item.size()) {
        auto e = item.find_first_of(" \t", k);
        if (e == std::string_view::npos) e = item.size();
        if (e > k) out.push_back(symbol(item.substr(k, e - k)));
        k = e + 1;
      }
      i = j + 1;
    }
    return out;
  }

  Word word(std::string_view side) const {
    Word w;
    std::vector<std::string_view> tokens;
    std::size_t k = 0;
    while (k < side.size()) {
      auto b = side.find_first_not_of(" \t", k);
      if (b == std::string_view::npos) break;
      auto e = side.find_first_of(" \t", b);
      if (e == std::string_view::npos) e = side.size();
      tokens.push_back(side.substr(b, e - b));
      k = e;
    }
    if (tokens.size() == 1 && tokens[0] == "eps") return w;
    for (auto t : tokens) {
      if (t == "eps") fail(t, "eps must stand alone");
      w.push_back(symbol(t));
    }
    return w;
  }
};

}  // namespace

Grammar parse_grammar(std::string_view text) {
  std::optional<std::vector<Symbol>> nonterminals, terminals;
  std::optional<Symbol> start;
  std::size_t terminals_line = 0;
  bool in_rules = false;
  std::vector<Production> productions;
  std::map<std::size_t, std::size_t> rule_line;  // production index -> line

  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++number;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    LineParser lp{number, raw};

    auto header = [&](std::string_view key) -> std::optional<std::string_view> {
      if (line.substr(0, key.size()) == key && line.size() > key.size() && line[key.size()] == ':')
        return line.substr(key.size() + 1);
      return std::nullopt;
    };

    if (!in_rules) {
      if (auto body = header("nonterminals")) {
        nonterminals = lp.list(*body);
      } else if (auto body = header("terminals")) {
        terminals = lp.list(*body);
        terminals_line = number;
      } else if (auto body = header("start")) {
        auto name = trim(*body);
        if (name.empty()) lp.fail(line, "missing start symbol");
        start = lp.symbol(name);
      } else if (line == "rules:") {
        in_rules = true;
      } else {
        lp.fail(line, "expected nonterminals:, terminals:, start: or rules:");
      }
      continue;
    }

    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) lp.fail(line, "expected '->'");
    std::string_view left = line.substr(0, arrow);
    std::string label;
    if (auto colon = left.find(':'); colon != std::string_view::npos) {
      label = std::string(trim(left.substr(0, colon)));
      if (label.empty()) lp.fail(left, "empty label");
      left = left.substr(colon + 1);
    }
    Word lhs = lp.word(left);
    if (lhs.empty()) lp.fail(left, "empty left-hand side");
    Word rhs = lp.word(line.substr(arrow + 2));
    rule_line[productions.size()] = number;
    productions.push_back({std::move(label), std::move(lhs), std::move(rhs)});
  }

  if (!nonterminals) throw ParseError(number, 1, "missing nonterminals: line");
  if (!terminals) throw ParseError(number, 1, "missing terminals: line");
  if (!start) throw ParseError(number, 1, "missing start: line");
  if (!in_rules) throw ParseError(number, 1, "missing rules: section");

  try {
    return Grammar(SymbolSet(nonterminals->begin(), nonterminals->end()),
                   SymbolSet(terminals->begin(), terminals->end()), productions, *start);
  } catch (const GrammarError& e) {
    std::size_t line = terminals_line;
    if (!e.label().empty()) {
      for (std::size_t i = 0; i < productions.size(); ++i) {
        std::string label = productions[i].label.empty() ? "p" + std::to_string(i + 1)
                                                         : productions[i].label;
        if (label == e.label()) line = rule_line[i];
      }
    }
    throw ParseError(line, 1, e.what());
  }
}

Grammar load_grammar(const std::filesystem::path& path) { return parse_grammar(read_text_file(path)); }

std::string format_grammar(const Grammar& g) {
  auto join = [](const SymbolSet& set) {
    std::string out;
    for (Symbol s : sorted_by_name(set)) {
      if (!out.empty()) out += ", ";
      out += s.name();
    }
    return out;
  };
  std::ostringstream out;
  out << "nonterminals: " << join(g.nonterminals()) << '\n';
  out << "terminals: " << join(g.terminals()) << '\n';
  out << "start: " << g.start().name() << '\n';
  out << "rules:\n";
  for (const auto& p : g.productions())
    out << p.label << ": " << format_word(p.lhs) << " -> " << format_word(p.rhs) << '\n';
  return out.str();
}

}  // namespace ctcg
