#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csr/colimits.hpp"
#include "csr/finite_semiring.hpp"
#include "csr/homomorphism.hpp"
#include "csr/salgebra.hpp"

namespace csr {

// Line-oriented text formats. `#` starts a comment; blank lines are
// ignored.
//
//   semiring NAME          hom SRC -> DST       object FILE
//   order N                0 -> 0               arrow I J MAPFILE
//   add                    1 -> 1
//   <N rows of N ints>     ...
//   mul
//   <N rows of N ints>
//
// An S-algebra file starts with `base naturals` or `base FILE`, then an
// algebra block, then optionally a map block for the structure map.

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

using ParsedAlgebra = std::variant<FiniteSemiring, SAlgebra>;

// Relative `base FILE` paths are resolved against base_dir. Throws
// SyntaxError, ValidationError, NotAHomomorphism, or std::runtime_error
// for unreadable files.
ParsedAlgebra parse_algebra_file(std::string_view text,
                                 const std::filesystem::path& base_dir = {});
ParsedAlgebra load_algebra_file(const std::filesystem::path& path);

// A plain semiring is taken over the naturals.
SAlgebra as_salgebra(const ParsedAlgebra& parsed);
const FiniteSemiring& algebra_of(const ParsedAlgebra& parsed);

struct MapSpec {
  std::string source_name;
  std::string target_name;
  std::vector<Elem> images;
};

MapSpec parse_map_file(std::string_view text);
MapSpec load_map_file(const std::filesystem::path& path);

// Checks that the names match the algebras (when both are named) and
// validates the map.
Homomorphism resolve_map(const MapSpec& spec, const FiniteSemiring& source,
                         const FiniteSemiring& target);

Diagram parse_diagram_file(std::string_view text,
                           const std::filesystem::path& base_dir = {});
Diagram load_diagram_file(const std::filesystem::path& path);

std::string write_algebra(const FiniteSemiring& a);
std::string write_map(const Homomorphism& f);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace csr
