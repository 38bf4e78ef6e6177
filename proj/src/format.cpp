#include "osg/format.hpp"

#include <sstream>

namespace osg {

namespace {

  struct Line {
    std::size_t              number;
    std::vector<std::string> tokens;
  };

  std::vector<std::string> tokenize(std::string_view text, std::size_t lineno) {
    std::vector<std::string> out;
    std::size_t              i = 0;
    while (i < text.size()) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t'
             && text[j] != '\r') {
        unsigned char d = static_cast<unsigned char>(text[j]);
        if (d < 0x21 || d > 0x7e) {
          throw ParseError(lineno, "non-ASCII or control character in label");
        }
        ++j;
      }
      out.emplace_back(text.substr(i, j - i));
      i = j;
    }
    return out;
  }

  std::vector<Line> significant_lines(std::string_view text,
                                      std::size_t      first_line) {
    std::vector<Line> lines;
    std::size_t       lineno = first_line;
    std::size_t       pos    = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view raw  = text.substr(pos, end - pos);
      std::size_t      hash = raw.find('#');
      if (hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      auto tokens = tokenize(raw, lineno);
      if (!tokens.empty()) {
        lines.push_back({lineno, std::move(tokens)});
      }
      ++lineno;
      if (end == text.size()) {
        break;
      }
      pos = end + 1;
    }
    return lines;
  }

  RawStructure parse_document(std::string_view text, std::size_t first_line) {
    auto lines = significant_lines(text, first_line);
    if (lines.empty()) {
      throw ParseError(first_line, "empty document");
    }
    std::size_t i = 0;
    {
      const auto& header = lines[i++];
      if (header.tokens.size() != 2 || header.tokens[0] != "osg") {
        throw ParseError(header.number, "expected header 'osg 1'");
      }
      if (header.tokens[1] != "1") {
        throw ParseError(header.number,
                         "unsupported format version '" + header.tokens[1] + "'");
      }
    }
    RawStructure raw;
    if (i >= lines.size() || lines[i].tokens[0] != "elements") {
      throw ParseError(i < lines.size() ? lines[i].number : lines.back().number,
                       "expected 'elements' line");
    }
    raw.names.assign(lines[i].tokens.begin() + 1, lines[i].tokens.end());
    if (raw.names.empty()) {
      throw ParseError(lines[i].number, "'elements' lists no labels");
    }
    ++i;
    if (i >= lines.size() || lines[i].tokens != std::vector<std::string>{"table"}) {
      throw ParseError(i < lines.size() ? lines[i].number : lines.back().number,
                       "expected 'table' line");
    }
    ++i;
    for (std::size_t row = 0; row < raw.names.size(); ++row, ++i) {
      if (i >= lines.size()) {
        throw ParseError(lines.back().number,
                         "table ends after " + std::to_string(row) + " of "
                             + std::to_string(raw.names.size()) + " rows");
      }
      raw.mul.push_back(lines[i].tokens);
    }
    if (i == lines.size()) {
      return raw;
    }
    if (lines[i].tokens != std::vector<std::string>{"order"}) {
      throw ParseError(lines[i].number,
                       "expected 'order' section, found '" + lines[i].tokens[0]
                           + "'");
    }
    for (++i; i < lines.size(); ++i) {
      if (lines[i].tokens.size() != 2) {
        throw ParseError(lines[i].number, "order line must be '<x> <y>'");
      }
      raw.order_pairs.emplace_back(lines[i].tokens[0], lines[i].tokens[1]);
    }
    return raw;
  }

}  // namespace

RawStructure parse_osg(std::string_view text) {
  return parse_document(text, 1);
}

std::vector<RawStructure> parse_osg_stream(std::string_view text) {
  std::vector<RawStructure> out;
  std::size_t               pos = 0, start = 0, lineno = 1, start_line = 1;
  auto flush = [&](std::size_t end) {
    auto chunk = text.substr(start, end - start);
    if (!significant_lines(chunk, start_line).empty()) {
      out.push_back(parse_document(chunk, start_line));
    }
  };
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line == "---") {
      flush(pos);
      start      = end + 1 > text.size() ? text.size() : end + 1;
      start_line = lineno + 1;
    }
    ++lineno;
    if (end == text.size()) {
      break;
    }
    pos = end + 1;
  }
  flush(text.size());
  return out;
}

std::string emit_osg(const OrderedSemigroup& s) {
  const std::size_t  n = s.size();
  std::ostringstream out;
  out << "osg 1\nelements";
  for (const auto& name : s.names()) {
    out << ' ' << name;
  }
  out << "\ntable\n";
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      out << (y ? " " : "") << s.name(s.mul(x, y));
    }
    out << '\n';
  }
  out << "order\n";
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b || !s.leq(a, b)) {
        continue;
      }
      bool covered = true;
      for (Element c = 0; c < n && covered; ++c) {
        if (c != a && c != b && s.leq(a, c) && s.leq(c, b)) {
          covered = false;
        }
      }
      if (covered) {
        out << s.name(a) << ' ' << s.name(b) << '\n';
      }
    }
  }
  return out.str();
}

std::string emit_osg_stream(const std::vector<OrderedSemigroup>& structures) {
  std::string out;
  for (std::size_t i = 0; i < structures.size(); ++i) {
    if (i) {
      out += "---\n";
    }
    out += emit_osg(structures[i]);
  }
  return out;
}

}  // namespace osg
