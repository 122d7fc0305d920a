#include <cctype>
#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ppc/digraph.hpp"
#include "ppc/error.hpp"

namespace ppc {

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset,
                          const std::string& message) {
  auto pos = position_of(text, offset);
  throw ParseError(pos.line, pos.column, message);
}

std::string encode_json(const Digraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.size();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

std::string encode_edgelist(const Digraph& g) {
  std::ostringstream out;
  out << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string encode_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 0; v < g.size(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

Vertex json_vertex(const nlohmann::json& value, std::string_view text) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0 ||
      value.get<std::uint64_t>() > std::numeric_limits<Vertex>::max()) {
    fail_at(text, 0, "edge endpoints must be non-negative integers");
  }
  return value.get<Vertex>();
}

Digraph decode_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    fail_at(text, offset, "malformed JSON");
  }
  if (!doc.is_object()) fail_at(text, 0, "expected a JSON object");
  auto n_it = doc.find("n");
  if (n_it == doc.end() || !n_it->is_number_integer() || n_it->get<std::int64_t>() < 0)
    fail_at(text, 0, "field \"n\" must be a non-negative integer");
  auto e_it = doc.find("edges");
  if (e_it == doc.end() || !e_it->is_array())
    fail_at(text, 0, "field \"edges\" must be an array");

  std::vector<Edge> edges;
  edges.reserve(e_it->size());
  for (const auto& pair : *e_it) {
    if (!pair.is_array() || pair.size() != 2)
      fail_at(text, 0, "each edge must be a two-element array");
    edges.emplace_back(json_vertex(pair[0], text), json_vertex(pair[1], text));
  }
  return Digraph(n_it->get<std::size_t>(), std::move(edges));
}

class EdgeListReader {
 public:
  explicit EdgeListReader(std::string_view text) : text_(text) {}

  Digraph read() {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    while (next_line()) {
      std::vector<std::pair<std::uint64_t, std::size_t>> numbers;
      read_numbers(numbers);
      if (numbers.empty()) continue;
      if (!n) {
        if (numbers.size() != 1)
          fail_at(text_, numbers[1].second, "first line must hold only the vertex count");
        n = numbers[0].first;
        continue;
      }
      if (numbers.size() != 2)
        fail_at(text_, numbers[0].second, "expected an edge \"u v\"");
      if (numbers[0].first > std::numeric_limits<Vertex>::max() ||
          numbers[1].first > std::numeric_limits<Vertex>::max()) {
        throw Error(ErrorKind::EndpointOutOfRange, "edge endpoint too large");
      }
      edges.emplace_back(static_cast<Vertex>(numbers[0].first),
                         static_cast<Vertex>(numbers[1].first));
    }
    if (!n) fail_at(text_, text_.size(), "missing vertex count");
    return Digraph(*n, std::move(edges));
  }

 private:
  bool next_line() {
    if (cursor_ >= text_.size()) return false;
    line_begin_ = cursor_;
    auto end = text_.find('\n', cursor_);
    line_end_ = end == std::string_view::npos ? text_.size() : end;
    cursor_ = line_end_ + 1;
    auto hash = text_.substr(line_begin_, line_end_ - line_begin_).find('#');
    if (hash != std::string_view::npos) line_end_ = line_begin_ + hash;
    return true;
  }

  void read_numbers(std::vector<std::pair<std::uint64_t, std::size_t>>& numbers) {
    std::size_t i = line_begin_;
    while (i < line_end_) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + i, text_.data() + line_end_, value);
      std::size_t consumed = static_cast<std::size_t>(ptr - (text_.data() + i));
      if (ec != std::errc() || consumed == 0) fail_at(text_, i, "expected a non-negative integer");
      std::size_t after = i + consumed;
      if (after < line_end_ && !std::isspace(static_cast<unsigned char>(text_[after])))
        fail_at(text_, after, "unexpected character");
      numbers.emplace_back(value, i);
      i = after;
    }
  }

  std::string_view text_;
  std::size_t cursor_ = 0;
  std::size_t line_begin_ = 0;
  std::size_t line_end_ = 0;
};

}  // namespace

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "edgelist") return Format::EdgeList;
  if (name == "dot") return Format::Dot;
  return std::nullopt;
}

std::string encode(const Digraph& g, Format format) {
  switch (format) {
    case Format::Json: return encode_json(g);
    case Format::EdgeList: return encode_edgelist(g);
    case Format::Dot: return encode_dot(g);
  }
  return {};
}

Digraph decode(std::string_view text, Format format) {
  switch (format) {
    case Format::Json: return decode_json(text);
    case Format::EdgeList: return EdgeListReader(text).read();
    case Format::Dot: break;
  }
  throw Error(ErrorKind::FormatUnsupported, "DOT is an export-only format");
}

Digraph decode_auto(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return decode(text, c == '{' ? Format::Json : Format::EdgeList);
  }
  return decode(text, Format::EdgeList);
}

}  // namespace ppc
