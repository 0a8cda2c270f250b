#include "ctcg/symbol.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ctcg {

namespace {

class Interner {
 public:
  Interner() { names_.emplace_back("<none>"); }

  std::uint32_t intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  // deque keeps references stable across growth
  const std::string& name(std::uint32_t id) {
    std::lock_guard lock(mutex_);
    return names_.at(id);
  }

 private:
  std::mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Symbol Symbol::named(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty symbol name");
  return Symbol(interner().intern(name));
}

const std::string& Symbol::name() const { return interner().name(id_); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Symbol s : w) {
    h ^= s.id();
    h *= 1099511628211ull;
  }
  return h;
}

bool name_less(Symbol a, Symbol b) { return a.name() < b.name(); }

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return name_less(a[i], b[i]);
  }
  return false;
}

Word parse_word(std::string_view text) {
  Word w;
  auto parts = split_ws(text);
  if (parts.size() == 1 && parts[0] == "eps") return w;
  for (auto p : parts) w.push_back(Symbol::named(p));
  return w;
}

Word tokenize_word(std::string_view text, const SymbolSet& alphabet) {
  auto parts = split_ws(text);
  if (parts.empty() || (parts.size() == 1 && parts[0] == "eps")) return {};
  if (parts.size() > 1) {
    Word w;
    for (auto p : parts) {
      Symbol s = Symbol::named(p);
      if (!alphabet.contains(s))
        throw std::invalid_argument("unknown symbol: " + std::string(p));
      w.push_back(s);
    }
    return w;
  }
  std::string_view t = parts[0];
  std::vector<Symbol> by_length(alphabet.begin(), alphabet.end());
  std::sort(by_length.begin(), by_length.end(), [](Symbol a, Symbol b) {
    return a.name().size() > b.name().size();
  });
  // back[i] holds the symbol ending a tokenization of t[0, i)
  std::vector<int> back(t.size() + 1, -2);
  std::vector<Symbol> via(t.size() + 1);
  back[0] = -1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (back[i] == -2) continue;
    for (Symbol s : by_length) {
      const auto& n = s.name();
      if (t.substr(i, n.size()) == n && back[i + n.size()] == -2) {
        back[i + n.size()] = static_cast<int>(i);
        via[i + n.size()] = s;
      }
    }
  }
  if (back[t.size()] == -2)
    throw std::invalid_argument("cannot split '" + std::string(t) + "' into alphabet symbols");
  Word w;
  for (int i = static_cast<int>(t.size()); i > 0; i = back[i]) w.push_back(via[i]);
  std::reverse(w.begin(), w.end());
  return w;
}

std::string format_word(const Word& w, bool compact) {
  if (w.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !compact) out += ' ';
    out += w[i].name();
  }
  return out;
}

bool single_char_names(const SymbolSet& symbols) {
  return std::all_of(symbols.begin(), symbols.end(),
                     [](Symbol s) { return s.name().size() == 1; });
}

bool valid_symbol_name(std::string_view name) {
  if (name.empty() || name == "eps" || name == "empty") return false;
  if (name.find("->") != std::string_view::npos) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return is_space(c) || std::string_view("[]()*\"#,:|").find(c) != std::string_view::npos;
  });
}

std::vector<Symbol> sorted_by_name(const SymbolSet& symbols) {
  std::vector<Symbol> out(symbols.begin(), symbols.end());
  std::sort(out.begin(), out.end(), name_less);
  return out;
}

}  // namespace ctcg
