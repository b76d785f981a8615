#include "agwb/table_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "agwb/errors.hpp"

namespace agwb {

  namespace {

    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    struct Line {
      std::string_view text;
      std::size_t      number;  // 1-based
    };

    // Splits text into lines, dropping blank and comment lines.
    class LineReader {
     public:
      explicit LineReader(std::string_view text) : _text(text) {}

      std::optional<Line> next() {
        while (_pos < _text.size()) {
          auto end = _text.find('\n', _pos);
          if (end == std::string_view::npos) {
            end = _text.size();
          }
          std::string_view line = _text.substr(_pos, end - _pos);
          if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
          }
          _pos = end + 1;
          ++_number;
          auto first = line.find_first_not_of(" \t");
          if (first == std::string_view::npos || line[first] == '#') {
            continue;
          }
          return Line{line, _number};
        }
        return std::nullopt;
      }

      std::size_t last_line() const noexcept {
        return _number;
      }

     private:
      std::string_view _text;
      std::size_t      _pos = 0;
      std::size_t      _number = 0;
    };

    std::vector<Token> tokenize(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
          ++i;
        }
        if (i == line.size()) {
          break;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
          ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
      }
      return out;
    }

    std::size_t to_number(Token const& tok, std::size_t line) {
      std::size_t value = 0;
      auto const* first = tok.text.data();
      auto const* last = first + tok.text.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw ParseError(line,
                         tok.column,
                         "expected a non-negative decimal integer, got '"
                             + std::string(tok.text) + "'");
      }
      return value;
    }

    // Reads one table starting at the next content line; nullopt at end of
    // input.
    std::optional<CayleyTable> read_one(LineReader& reader) {
      auto header = reader.next();
      if (!header) {
        return std::nullopt;
      }
      auto tokens = tokenize(header->text);
      if (tokens.size() != 1) {
        throw ParseError(header->number,
                         tokens.size() > 1 ? tokens[1].column : 1,
                         "header must be a single integer (the order)");
      }
      std::size_t n = to_number(tokens[0], header->number);
      if (n == 0 || n > max_order) {
        throw ParseError(header->number,
                         tokens[0].column,
                         "order must be in [1, " + std::to_string(max_order)
                             + "], got " + std::to_string(n));
      }
      std::vector<std::uint8_t> entries;
      entries.reserve(n * n);
      for (std::size_t row = 0; row < n; ++row) {
        auto line = reader.next();
        if (!line) {
          throw ParseError(reader.last_line() + 1,
                           1,
                           "expected " + std::to_string(n) + " rows, got "
                               + std::to_string(row));
        }
        auto cells = tokenize(line->text);
        if (cells.size() != n) {
          std::size_t col = cells.size() > n ? cells[n].column
                                             : line->text.size() + 1;
          throw ParseError(line->number,
                           col,
                           "row " + std::to_string(row) + " has "
                               + std::to_string(cells.size())
                               + " entries, expected " + std::to_string(n));
        }
        for (auto const& cell : cells) {
          std::size_t x = to_number(cell, line->number);
          if (x >= n) {
            throw ParseError(line->number,
                             cell.column,
                             "entry " + std::to_string(x)
                                 + " is not an element of a magma of order "
                                 + std::to_string(n));
          }
          entries.push_back(static_cast<std::uint8_t>(x));
        }
      }
      return CayleyTable(n, std::move(entries));
    }

  }  // namespace

  CayleyTable parse_table(std::string_view text) {
    LineReader reader(text);
    auto       t = read_one(reader);
    if (!t) {
      throw ParseError(reader.last_line() + 1, 1, "missing order header");
    }
    if (auto extra = reader.next()) {
      throw ParseError(extra->number, 1, "unexpected content after table");
    }
    return *t;
  }

  std::vector<CayleyTable> parse_tables(std::string_view text) {
    LineReader               reader(text);
    std::vector<CayleyTable> out;
    while (auto t = read_one(reader)) {
      out.push_back(std::move(*t));
    }
    return out;
  }

  std::string serialize_table(CayleyTable const& t, std::string_view comment) {
    std::string out;
    while (!comment.empty()) {
      auto end = comment.find('\n');
      out += "# ";
      out += comment.substr(0, end);
      out += '\n';
      if (end == std::string_view::npos) {
        break;
      }
      comment.remove_prefix(end + 1);
    }
    std::size_t const n = t.order();
    out += std::to_string(n);
    out += '\n';
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (b != 0) {
          out += ' ';
        }
        out += std::to_string(t(a, b));
      }
      out += '\n';
    }
    return out;
  }

  CayleyTable read_table_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
  }

}  // namespace agwb
