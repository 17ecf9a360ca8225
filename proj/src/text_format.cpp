#include "conlat/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "conlat/error.hpp"

namespace conlat {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back(Token{std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void syntax(const Line& line, std::size_t column, const std::string& msg) {
  throw SyntaxError(line.number, column, msg);
}

[[noreturn]] void syntax_end(const Line& line, const std::string& msg) {
  const Token& last = line.tokens.back();
  syntax(line, last.column + last.text.size(), msg);
}

std::size_t parse_arity(const Line& line, const Token& tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    syntax(line, tok.column, "arity must be a non-negative integer, got '" + tok.text + "'");
  return value;
}

}  // namespace

RawAlgebra parse_algebra_text(std::string_view text) {
  const auto lines = tokenize(text);
  RawAlgebra raw;
  bool have_header = false, have_elements = false;
  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& line = lines[i];
    const auto& t = line.tokens;
    const std::string& kw = t[0].text;
    if (!have_header) {
      if (kw != "algebra") syntax(line, t[0].column, "expected 'algebra <name>'");
      if (t.size() != 2) syntax(line, t.size() < 2 ? t[0].column : t[2].column,
                                "expected 'algebra <name>'");
      raw.name = t[1].text;
      have_header = true;
      ++i;
      continue;
    }
    if (kw == "elements") {
      if (have_elements) syntax(line, t[0].column, "duplicate 'elements' line");
      if (t.size() < 2) syntax_end(line, "'elements' needs at least one label");
      for (std::size_t k = 1; k < t.size(); ++k) raw.labels.push_back(t[k].text);
      have_elements = true;
      ++i;
      continue;
    }
    if (kw != "op") syntax(line, t[0].column, "unexpected '" + kw + "'");
    if (!have_elements) syntax(line, t[0].column, "'op' before 'elements'");
    if (t.size() != 3) syntax(line, t[0].column, "expected 'op <name> <arity>'");
    RawOperation op;
    op.name = t[1].text;
    op.arity = parse_arity(line, t[2]);
    ++i;

    if (i < lines.size() && lines[i].tokens[0].text == "table") {
      const Line& tl = lines[i];
      if (tl.tokens.size() != 1) syntax(tl, tl.tokens[1].column, "'table' takes no arguments");
      if (op.arity != 2) syntax(tl, tl.tokens[0].column, "'table' is only allowed for binary operations");
      ++i;
      const std::size_t n = raw.labels.size();
      for (std::size_t r = 0; r < n; ++r, ++i) {
        if (i >= lines.size()) {
          const Line& last = lines.back();
          syntax(Line{last.number + 1, {}}, 1,
                 "table of '" + op.name + "' needs " + std::to_string(n) + " rows");
        }
        const Line& row = lines[i];
        if (row.tokens.size() != n) {
          const std::size_t col = row.tokens.size() > n ? row.tokens[n].column
                                                        : row.tokens.back().column +
                                                              row.tokens.back().text.size();
          syntax(row, col, "table row has " + std::to_string(row.tokens.size()) +
                               " entries, expected " + std::to_string(n));
        }
        for (std::size_t c = 0; c < n; ++c)
          op.rows.push_back({{raw.labels[r], raw.labels[c]}, row.tokens[c].text});
      }
    } else {
      while (i < lines.size()) {
        const Line& row = lines[i];
        const auto& rt = row.tokens;
        if (rt[0].text == "op" || rt[0].text == "elements" || rt[0].text == "algebra") break;
        std::size_t arrow = rt.size();
        for (std::size_t k = 0; k < rt.size(); ++k)
          if (rt[k].text == "->") {
            arrow = k;
            break;
          }
        if (arrow == rt.size()) syntax(row, rt[0].column, "expected '<args> -> <result>'");
        if (arrow + 2 != rt.size())
          syntax(row, arrow + 1 < rt.size() ? rt[arrow + 1].column : rt[arrow].column,
                 "expected exactly one result after '->'");
        RawOperation::Row r;
        for (std::size_t k = 0; k < arrow; ++k) r.args.push_back(rt[k].text);
        r.result = rt[arrow + 1].text;
        op.rows.push_back(std::move(r));
        ++i;
      }
    }
    raw.ops.push_back(std::move(op));
  }
  if (!have_header) throw SyntaxError(1, 1, "missing 'algebra <name>' header");
  if (!have_elements) throw SyntaxError(lines.back().number, 1, "missing 'elements' line");
  return raw;
}

FiniteAlgebra parse_algebra(std::string_view text) {
  return validate_algebra(parse_algebra_text(text));
}

std::string emit_algebra(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name() << "\nelements";
  for (const auto& l : a.labels()) out << ' ' << l;
  out << '\n';
  const std::size_t n = a.size();
  for (const Operation& op : a.ops()) {
    out << "op " << op.name << ' ' << op.arity << '\n';
    if (op.arity == 2) {
      out << "table\n";
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
          out << (c ? " " : "") << a.label(op.table[r * n + c]);
        out << '\n';
      }
      continue;
    }
    std::vector<Element> args(op.arity);
    for (std::size_t t = 0; t < op.table.size(); ++t) {
      decode_tuple(t, n, args);
      for (Element x : args) out << a.label(x) << ' ';
      out << "-> " << a.label(op.table[t]) << '\n';
    }
  }
  return out.str();
}

RawMorphism parse_morphism_text(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw SyntaxError(1, 1, "missing 'morphism <name> : <A> -> <B>' header");
  RawMorphism raw;
  const Line& head = lines[0];
  const auto& h = head.tokens;
  if (h[0].text != "morphism") syntax(head, h[0].column, "expected 'morphism <name> : <A> -> <B>'");
  if (h.size() != 6 || h[2].text != ":" || h[4].text != "->")
    syntax(head, h.size() > 1 ? h[1].column : h[0].column,
           "expected 'morphism <name> : <A> -> <B>'");
  raw.name = h[1].text;
  raw.source = h[3].text;
  raw.target = h[5].text;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto& t = line.tokens;
    if (t[0].text != "map") syntax(line, t[0].column, "expected 'map <x> -> <y>'");
    if (t.size() != 4 || t[2].text != "->")
      syntax(line, t.size() > 1 ? t[1].column : t[0].column, "expected 'map <x> -> <y>'");
    raw.map.emplace_back(t[1].text, t[3].text);
  }
  return raw;
}

Morphism parse_morphism(std::string_view text, const FiniteAlgebra& src,
                        const FiniteAlgebra& tgt) {
  RawMorphism raw = parse_morphism_text(text);
  if (raw.source != src.name())
    throw Error(ErrorCode::UnknownAlgebra, "morphism '" + raw.name + "' expects source '" +
                                               raw.source + "', got '" + src.name() + "'");
  if (raw.target != tgt.name())
    throw Error(ErrorCode::UnknownAlgebra, "morphism '" + raw.name + "' expects target '" +
                                               raw.target + "', got '" + tgt.name() + "'");
  return validate_morphism(raw.name, src, tgt, raw.map);
}

std::string emit_morphism(const Morphism& f) {
  std::string out = "morphism " + f.name() + " : " + f.source().name() + " -> " +
                    f.target().name() + "\n";
  for (Element x = 0; x < f.source().size(); ++x)
    out += "map " + f.source().label(x) + " -> " + f.target().label(f(x)) + "\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteAlgebra load_algebra(const std::filesystem::path& path) {
  return parse_algebra(read_file(path));
}

}  // namespace conlat
