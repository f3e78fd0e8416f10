#include "catrep/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace catrep {

int Presentation::max_generator_degree() const {
  int out = -1;
  for (const auto& g : generators) out = std::max(out, g.degree);
  return out;
}

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

class LineCursor {
 public:
  explicit LineCursor(const Line& line) : line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_.number, pos_ + 1, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError(line_.number, pos + 1, what);
  }
  std::size_t pos() const { return pos_; }
  void skip_spaces() {
    while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
  }
  bool done() {
    skip_spaces();
    return pos_ == line_.text.size();
  }
  bool accept(char c) {
    skip_spaces();
    if (pos_ < line_.text.size() && line_.text[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  /// Run of characters not in the stop set.
  std::string token(std::string_view stops = " \t") {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < line_.text.size() && stops.find(line_.text[pos_]) == std::string_view::npos) ++pos_;
    if (start == pos_) fail("expected a token");
    return line_.text.substr(start, pos_ - start);
  }
  int integer() {
    skip_spaces();
    auto start = pos_;
    auto tok = token(" \t:");
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      fail_at(start, "expected a nonnegative integer, got '" + tok + "'");
    }
  }
  void rest_empty() {
    if (!done()) fail("unexpected trailing text");
  }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') out.push_back({number, line});
    start = end + 1;
  }
  return out;
}

PresentationTerm parse_term(LineCursor& c, const Category& cat, const std::map<std::string, std::size_t>& gens,
                            const std::vector<PresentationGenerator>& generators) {
  c.skip_spaces();
  auto start = c.pos();
  auto text = c.token(" \t+");
  // Leading '+' signs belong to the separator, so a coefficient may only start with '-' or a digit.
  PresentationTerm term;
  auto star = text.find('*');
  std::string morphism_text = text;
  term.coefficient = 1;
  if (star != std::string::npos) {
    try {
      term.coefficient = parse_rational(text.substr(0, star));
    } catch (const FieldError& e) {
      c.fail_at(start, e.what());
    }
    morphism_text = text.substr(star + 1);
  }
  auto at = morphism_text.find('@');
  if (at == std::string::npos) c.fail_at(start, "term must look like <coeff>*<morphism>@<generator>");
  auto gen_name = morphism_text.substr(at + 1);
  auto it = gens.find(gen_name);
  if (it == gens.end()) c.fail_at(start, "unknown generator '" + gen_name + "'");
  term.generator = it->second;
  try {
    term.morphism = parse_morphism(morphism_text.substr(0, at), cat);
  } catch (const CategoryError& e) {
    c.fail_at(start + (star == std::string::npos ? 0 : star + 1), e.what());
  }
  if (static_cast<int>(term.morphism.source) != generators[term.generator].degree)
    c.fail_at(start, "morphism source " + std::to_string(term.morphism.source) + " differs from the degree of '" +
                         gen_name + "'");
  return term;
}

}  // namespace

Presentation parse_presentation(std::string_view text, const PresentationOverrides& overrides) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty presentation");
  {
    LineCursor c(lines[0]);
    if (c.token() != "catrep-presentation") c.fail_at(0, "missing 'catrep-presentation' header");
    auto version = c.integer();
    if (version != 1) c.fail("unsupported presentation version " + std::to_string(version));
    c.rest_empty();
  }

  std::optional<Kind> kind;
  std::optional<std::string> group;
  std::optional<FieldSpec> field;
  std::optional<int> horizon;
  std::size_t i = 1;
  for (; i < lines.size(); ++i) {
    LineCursor c(lines[i]);
    auto key = c.token();
    if (key == "gen" || key == "rel") break;
    auto value_pos = (c.skip_spaces(), c.pos());
    if (key == "category") {
      auto v = c.token();
      try {
        kind = parse_kind(v);
      } catch (const CategoryError& e) {
        c.fail_at(value_pos, e.what());
      }
    } else if (key == "group") {
      group = c.token();
    } else if (key == "field") {
      auto v = c.token();
      try {
        field = FieldSpec::parse(v);
      } catch (const FieldError& e) {
        c.fail_at(value_pos, e.what());
      }
    } else if (key == "horizon") {
      horizon = c.integer();
    } else {
      c.fail_at(0, "unknown header key '" + key + "'");
    }
    c.rest_empty();
  }
  if (overrides.kind) kind = overrides.kind;
  if (overrides.group) group = overrides.group;
  if (overrides.field) field = overrides.field;
  if (overrides.horizon) horizon = overrides.horizon;
  const std::size_t header_line = lines[0].number;
  if (!kind) throw ParseError(header_line, 1, "no category given (header 'category' or --cat)");
  bool needs_group = *kind == Kind::FI_G || *kind == Kind::OI_G;
  if (needs_group && !group) throw ParseError(header_line, 1, kind_name(*kind) + " needs a group");
  if (!needs_group) group.reset();

  Presentation p;
  try {
    p.category = Category(*kind, group ? std::optional<Group>(Group::parse(*group)) : std::nullopt);
  } catch (const CategoryError& e) {
    throw ParseError(header_line, 1, e.what());
  }
  p.field = field;
  p.horizon = horizon;

  std::map<std::string, std::size_t> gens;
  for (; i < lines.size(); ++i) {
    LineCursor c(lines[i]);
    auto key = c.token();
    if (key == "gen") {
      c.skip_spaces();
      auto name_pos = c.pos();
      auto name = c.token();
      if (name.find_first_of("@*+:") != std::string::npos) c.fail_at(name_pos, "generator names may not contain @*+:");
      if (gens.count(name)) c.fail_at(name_pos, "duplicate generator '" + name + "'");
      c.skip_spaces();
      auto kw_pos = c.pos();
      if (c.token() != "deg") c.fail_at(kw_pos, "expected 'deg'");
      int d = c.integer();
      c.rest_empty();
      gens[name] = p.generators.size();
      p.generators.push_back({name, d});
    } else if (key == "rel") {
      PresentationRelation r;
      r.degree = c.integer();
      c.expect(':');
      do {
        auto term_pos = (c.skip_spaces(), c.pos());
        auto term = parse_term(c, p.category, gens, p.generators);
        if (static_cast<int>(term.morphism.target) != r.degree)
          c.fail_at(term_pos, "term target " + std::to_string(term.morphism.target) + " differs from relation degree " +
                                  std::to_string(r.degree));
        r.terms.push_back(std::move(term));
      } while (c.accept('+'));
      c.rest_empty();
      p.relations.push_back(std::move(r));
    } else if (key == "category" || key == "group" || key == "field" || key == "horizon") {
      c.fail_at(0, "header key '" + key + "' after generators or relations");
    } else {
      c.fail_at(0, "unknown line type '" + key + "'");
    }
  }
  return p;
}

Presentation read_presentation(const std::string& path, const PresentationOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str(), overrides);
}

Presentation normalized(const Presentation& p) {
  Presentation out = p;
  for (auto& r : out.relations) {
    std::map<std::pair<std::size_t, std::size_t>, PresentationTerm> merged;
    for (const auto& t : r.terms) {
      auto key = std::make_pair(t.generator, p.category.index_of(t.morphism));
      auto it = merged.find(key);
      if (it == merged.end())
        merged.emplace(key, t);
      else
        it->second.coefficient += t.coefficient;
    }
    r.terms.clear();
    for (auto& [key, t] : merged)
      if (sgn(t.coefficient) != 0) r.terms.push_back(t);
  }
  // A relation whose terms cancel imposes nothing.
  std::erase_if(out.relations, [](const PresentationRelation& r) { return r.terms.empty(); });
  return out;
}

std::string write_presentation(const Presentation& raw) {
  auto p = normalized(raw);
  std::ostringstream out;
  out << "catrep-presentation 1\n";
  out << "category " << p.category.name() << "\n";
  if (p.category.group()) out << "group " << p.category.group()->spec() << "\n";
  if (p.field) out << "field " << p.field->to_string() << "\n";
  if (p.horizon) out << "horizon " << *p.horizon << "\n";
  for (const auto& g : p.generators) out << "gen " << g.name << " deg " << g.degree << "\n";
  for (const auto& r : p.relations) {
    out << "rel " << r.degree << ":";
    for (std::size_t k = 0; k < r.terms.size(); ++k) {
      const auto& t = r.terms[k];
      out << (k ? " + " : " ") << t.coefficient.get_str() << "*" << encode(t.morphism, p.category) << "@"
          << p.generators[t.generator].name;
    }
    out << "\n";
  }
  return out.str();
}

Presentation free_presentation(const Category& cat, const std::vector<int>& degrees) {
  Presentation p;
  p.category = cat;
  for (std::size_t j = 0; j < degrees.size(); ++j) p.generators.push_back({"g" + std::to_string(j + 1), degrees[j]});
  return p;
}

}  // namespace catrep
