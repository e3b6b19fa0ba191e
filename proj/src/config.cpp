#include "cfgcalc/grammar/config.hpp"

#include <string>

#include "cfgcalc/algebra/expression.hpp"
#include "cfgcalc/algebra/multipoly.hpp"
#include "cfgcalc/grammar/rule_parser.hpp"

namespace cfgcalc::grammar {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<NamedGrammar> parse_grammar_config(std::string_view text) {
  std::vector<NamedGrammar> out;
  std::vector<std::size_t> first_line;  // file line of each section body start
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      if (!out.empty()) out.back().rules += '\n';
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("unterminated section header", line_no, 1);
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (name.empty()) throw ParseError("empty section name", line_no, 1);
      for (const auto& g : out)
        if (g.name == name) throw ParseError("duplicate grammar '" + name + "'", line_no, 1);
      out.push_back({name, {}, "from config"});
      first_line.push_back(line_no + 1);
      continue;
    }
    if (out.empty()) throw ParseError("rule outside of a [section]", line_no, 1);
    out.back().rules += std::string(raw) + '\n';
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    try {
      parse_grammar(out[i].rules);
    } catch (const ParseError& e) {
      throw ParseError("in grammar '" + out[i].name + "': " + e.message(),
                       e.line() + first_line[i] - 1, e.column());
    }
  }
  return out;
}

Grammar config_grammar(const std::vector<NamedGrammar>& config, std::string_view name) {
  for (const auto& g : config)
    if (g.name == name) return parse_grammar(g.rules);
  throw std::invalid_argument("no grammar named '" + std::string(name) + "' in config");
}

}  // namespace cfgcalc::grammar
