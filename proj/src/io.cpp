#include "csr/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace csr {

SyntaxError::SyntaxError(std::string message, std::size_t line,
                         std::size_t column)
    : std::runtime_error("SyntaxError at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    auto raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() &&
             (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) {
        ++i;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r') {
        ++i;
      }
      if (i > start) {
        line.tokens.push_back({std::string(raw.substr(start, i - start)),
                               start + 1});
      }
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
    if (end == text.size()) {
      break;
    }
    pos = end + 1;
  }
  return lines;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return next_ == lines_.size(); }
  const Line& peek() const { return lines_.at(next_); }
  const Line& take() {
    if (done()) {
      throw SyntaxError("unexpected end of input", last_line() + 1, 1);
    }
    return lines_[next_++];
  }
  std::size_t last_line() const {
    return lines_.empty() ? 0 : lines_.back().number;
  }

  // A line whose first token is keyword, with exactly `arity` more tokens.
  const Line& expect(std::string_view keyword, std::size_t arity) {
    if (done()) {
      throw SyntaxError("expected '" + std::string(keyword) + "'",
                        last_line() + 1, 1);
    }
    const Line& line = take();
    if (line.tokens[0].text != keyword) {
      throw SyntaxError("expected '" + std::string(keyword) + "', found '" +
                            line.tokens[0].text + "'",
                        line.number, line.tokens[0].column);
    }
    if (line.tokens.size() != arity + 1) {
      throw SyntaxError("'" + std::string(keyword) + "' takes " +
                            std::to_string(arity) + " argument(s)",
                        line.number, line.tokens[0].column);
    }
    return line;
  }

  bool at(std::string_view keyword) const {
    return !done() && peek().tokens[0].text == keyword;
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

std::size_t parse_index(const Token& t, std::size_t line) {
  std::size_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw SyntaxError("expected a non-negative integer, found '" + t.text + "'",
                      line, t.column);
  }
  return value;
}

std::vector<Elem> parse_table(Cursor& cursor, std::string_view keyword,
                              std::size_t n) {
  cursor.expect(keyword, 0);
  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    if (cursor.done() || cursor.peek().tokens[0].text == "mul" ||
        cursor.peek().tokens[0].text == "hom") {
      std::size_t line = cursor.done() ? cursor.last_line() + 1
                                       : cursor.peek().number;
      throw SyntaxError("table '" + std::string(keyword) + "' has " +
                            std::to_string(row) + " rows, expected " +
                            std::to_string(n),
                        line, 1);
    }
    const Line& line = cursor.take();
    if (line.tokens.size() != n) {
      throw SyntaxError("table '" + std::string(keyword) + "' row has " +
                            std::to_string(line.tokens.size()) +
                            " entries, expected " + std::to_string(n),
                        line.number, line.tokens[0].column);
    }
    for (const auto& t : line.tokens) {
      auto v = parse_index(t, line.number);
      if (v >= n) {
        throw SyntaxError("entry " + t.text + " outside the carrier", line.number,
                          t.column);
      }
      table.push_back(static_cast<Elem>(v));
    }
  }
  return table;
}

FiniteSemiring parse_semiring_block(Cursor& cursor) {
  const Line& header = cursor.expect("semiring", 1);
  std::string name = header.tokens[1].text;
  const Line& order_line = cursor.expect("order", 1);
  auto n = parse_index(order_line.tokens[1], order_line.number);
  if (n == 0) {
    throw SyntaxError("order must be positive", order_line.number,
                      order_line.tokens[1].column);
  }
  auto add = parse_table(cursor, "add", n);
  auto mul = parse_table(cursor, "mul", n);
  return FiniteSemiring::make(n, std::move(add), std::move(mul),
                              std::move(name));
}

MapSpec parse_map_block(Cursor& cursor) {
  const Line& header = cursor.expect("hom", 3);
  if (header.tokens[2].text != "->") {
    throw SyntaxError("expected 'hom SRC -> DST'", header.number,
                      header.tokens[2].column);
  }
  MapSpec spec{header.tokens[1].text, header.tokens[3].text, {}};
  std::vector<std::optional<Elem>> images;
  std::size_t last_line = header.number;
  while (!cursor.done() && !cursor.at("hom") && !cursor.at("semiring") &&
         !cursor.at("base")) {
    const Line& line = cursor.take();
    last_line = line.number;
    if (line.tokens.size() != 3 || line.tokens[1].text != "->") {
      throw SyntaxError("expected 'i -> j'", line.number,
                        line.tokens[0].column);
    }
    auto i = parse_index(line.tokens[0], line.number);
    auto j = parse_index(line.tokens[2], line.number);
    if (i >= images.size()) {
      images.resize(i + 1);
    }
    if (images[i]) {
      throw SyntaxError("element " + std::to_string(i) + " mapped twice",
                        line.number, line.tokens[0].column);
    }
    images[i] = static_cast<Elem>(j);
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) {
      throw SyntaxError("element " + std::to_string(i) + " has no image",
                        last_line, 1);
    }
    spec.images.push_back(*images[i]);
  }
  return spec;
}

void expect_end(const Cursor& cursor) {
  if (!cursor.done()) {
    const auto& line = cursor.peek();
    throw SyntaxError("unexpected '" + line.tokens[0].text + "'", line.number,
                      line.tokens[0].column);
  }
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ParsedAlgebra parse_algebra_file(std::string_view text,
                                 const std::filesystem::path& base_dir) {
  Cursor cursor(tokenize(text));
  if (!cursor.at("base")) {
    auto a = parse_semiring_block(cursor);
    expect_end(cursor);
    return a;
  }
  const Line& base_line = cursor.expect("base", 1);
  std::optional<BaseSemiring> base;
  if (base_line.tokens[1].text == "naturals") {
    base = BaseSemiring(Naturals{});
  } else {
    auto path = base_dir / base_line.tokens[1].text;
    auto parsed = load_algebra_file(path);
    if (!std::holds_alternative<FiniteSemiring>(parsed)) {
      throw SyntaxError("base file must hold a plain semiring",
                        base_line.number, base_line.tokens[1].column);
    }
    base = BaseSemiring(std::get<FiniteSemiring>(parsed));
  }
  auto algebra = parse_semiring_block(cursor);
  std::optional<std::vector<Elem>> structure;
  if (cursor.at("hom")) {
    auto spec = parse_map_block(cursor);
    if (base->is_naturals()) {
      throw SyntaxError("no structure map may be given over the naturals",
                        cursor.last_line(), 1);
    }
    auto f = resolve_map(spec, base->finite(), algebra);
    structure = std::vector<Elem>(f.map().begin(), f.map().end());
  }
  expect_end(cursor);
  return validate_salgebra(*base, algebra, std::move(structure));
}

ParsedAlgebra load_algebra_file(const std::filesystem::path& path) {
  return parse_algebra_file(read_text_file(path), path.parent_path());
}

SAlgebra as_salgebra(const ParsedAlgebra& parsed) {
  if (const auto* a = std::get_if<FiniteSemiring>(&parsed)) {
    return over_naturals(*a);
  }
  return std::get<SAlgebra>(parsed);
}

const FiniteSemiring& algebra_of(const ParsedAlgebra& parsed) {
  if (const auto* a = std::get_if<FiniteSemiring>(&parsed)) {
    return *a;
  }
  return std::get<SAlgebra>(parsed).algebra();
}

MapSpec parse_map_file(std::string_view text) {
  Cursor cursor(tokenize(text));
  auto spec = parse_map_block(cursor);
  expect_end(cursor);
  return spec;
}

MapSpec load_map_file(const std::filesystem::path& path) {
  return parse_map_file(read_text_file(path));
}

Homomorphism resolve_map(const MapSpec& spec, const FiniteSemiring& source,
                         const FiniteSemiring& target) {
  auto check_name = [](const std::string& given, const FiniteSemiring& a,
                       const char* role) {
    if (!given.empty() && !a.name().empty() && given != a.name()) {
      throw std::invalid_argument(std::string("map ") + role + " is '" +
                                  given + "' but the algebra is '" + a.name() +
                                  "'");
    }
  };
  check_name(spec.source_name, source, "source");
  check_name(spec.target_name, target, "target");
  if (spec.images.size() != source.order()) {
    throw std::invalid_argument("map gives " +
                                std::to_string(spec.images.size()) +
                                " images for a source of order " +
                                std::to_string(source.order()));
  }
  for (Elem v : spec.images) {
    if (v >= target.order()) {
      throw std::invalid_argument("map image " + std::to_string(v) +
                                  " outside the target carrier");
    }
  }
  return validate_hom(spec.images, source, target);
}

Diagram parse_diagram_file(std::string_view text,
                           const std::filesystem::path& base_dir) {
  Cursor cursor(tokenize(text));
  Diagram d;
  while (cursor.at("object")) {
    const Line& line = cursor.expect("object", 1);
    d.objects.push_back(
        as_salgebra(load_algebra_file(base_dir / line.tokens[1].text)));
  }
  while (cursor.at("arrow")) {
    const Line& line = cursor.expect("arrow", 3);
    auto i = parse_index(line.tokens[1], line.number);
    auto j = parse_index(line.tokens[2], line.number);
    if (i >= d.objects.size() || j >= d.objects.size()) {
      throw SyntaxError("arrow endpoint out of range", line.number,
                        line.tokens[1].column);
    }
    auto spec = load_map_file(base_dir / line.tokens[3].text);
    d.arrows.push_back({i, j,
                        resolve_map(spec, d.objects[i].algebra(),
                                    d.objects[j].algebra())});
  }
  expect_end(cursor);
  return d;
}

Diagram load_diagram_file(const std::filesystem::path& path) {
  return parse_diagram_file(read_text_file(path), path.parent_path());
}

std::string write_algebra(const FiniteSemiring& a) {
  std::ostringstream out;
  out << "semiring " << (a.name().empty() ? "A" : a.name()) << "\n";
  out << "order " << a.order() << "\n";
  auto table = [&](const char* keyword, std::span<const Elem> t) {
    out << keyword << "\n";
    for (std::size_t i = 0; i < a.order(); ++i) {
      for (std::size_t j = 0; j < a.order(); ++j) {
        out << (j > 0 ? " " : "") << t[i * a.order() + j];
      }
      out << "\n";
    }
  };
  table("add", a.add_table());
  table("mul", a.mul_table());
  return out.str();
}

std::string write_map(const Homomorphism& f) {
  auto name = [](const FiniteSemiring& a) {
    return a.name().empty() ? std::string("A") : a.name();
  };
  std::ostringstream out;
  out << "hom " << name(f.source()) << " -> " << name(f.target()) << "\n";
  for (Elem i = 0; i < f.source().order(); ++i) {
    out << i << " -> " << f(i) << "\n";
  }
  return out.str();
}

}  // namespace csr
