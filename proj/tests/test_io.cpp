#include <doctest.h>

#include "csr/builtins.hpp"
#include "csr/congruence.hpp"
#include "csr/io.hpp"

using namespace csr;

namespace {

const std::filesystem::path data_dir = CSR_DATA_DIR;

}  // namespace

TEST_CASE("fixture files parse to the built-in tables") {
  for (const auto& a : builtins::all()) {
    std::string file = a.name();
    for (auto& c : file) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    auto parsed = load_algebra_file(data_dir / (file + ".alg"));
    REQUIRE(std::holds_alternative<FiniteSemiring>(parsed));
    CHECK(std::get<FiniteSemiring>(parsed) == a);
    CHECK(std::get<FiniteSemiring>(parsed).name() == a.name());
  }
}

TEST_CASE("write_algebra round-trips") {
  for (const auto& a : builtins::all()) {
    auto text = write_algebra(a);
    auto back = std::get<FiniteSemiring>(parse_algebra_file(text));
    CHECK(back == a);
    CHECK(back.name() == a.name());
  }
}

TEST_CASE("comments and blank lines are ignored") {
  auto parsed = parse_algebra_file(
      "# header\n\nsemiring Z2   # trailing\norder 2\nadd\n 0 1\n1 0\n\nmul\n0 0\n0 1\n");
  CHECK(std::get<FiniteSemiring>(parsed) == builtins::z2());
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_algebra_file("semiring X\norder 2\nadd\n0 1\n1 0 1\nmul\n0 0\n0 1\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 1);
  }
  try {
    parse_algebra_file("semiring X\norder 2\nadd\n0 1\n1 2\nmul\n0 0\n0 1\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_algebra_file("semiring X\norder two\n"), SyntaxError);
  CHECK_THROWS_AS(parse_algebra_file("semiring X\norder 2\nadd\n0 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_algebra_file("order 2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_algebra_file(write_algebra(builtins::z2()) + "extra\n"),
                  SyntaxError);
  CHECK_THROWS_AS(load_algebra_file(data_dir / "nonsquare.alg"), SyntaxError);
}

TEST_CASE("axiom violations surface as ValidationError") {
  try {
    load_algebra_file(data_dir / "z2_bad_absorption.alg");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.report().contains(Axiom::AbsorptionFails));
  }
}

TEST_CASE("S-algebra files") {
  auto parsed = load_algebra_file(data_dir / "d4_over_z2.salg");
  REQUIRE(std::holds_alternative<SAlgebra>(parsed));
  const auto& s = std::get<SAlgebra>(parsed);
  CHECK(s.base().finite() == builtins::z2());
  CHECK(s.algebra() == builtins::d4());
  CHECK_THROWS_AS(load_algebra_file(data_dir / "bool_over_z2.salg"), NotAHomomorphism);

  auto nat = parse_algebra_file("base naturals\n" + write_algebra(builtins::c3()));
  CHECK(std::get<SAlgebra>(nat).base().is_naturals());
  CHECK_THROWS_AS(parse_algebra_file("base naturals\n" + write_algebra(builtins::z2()) +
                                     "hom N -> Z2\n0 -> 0\n1 -> 1\n"),
                  SyntaxError);
  CHECK(as_salgebra(builtins::z2()).base().is_naturals());
}

TEST_CASE("map files") {
  auto spec = load_map_file(data_dir / "d4_to_z2.map");
  CHECK(spec.source_name == "D4");
  CHECK(spec.target_name == "Z2");
  CHECK(spec.images == std::vector<Elem>{0, 1, 0, 1});
  auto h = resolve_map(spec, builtins::d4(), builtins::z2());
  CHECK(h.is_surjective());
  CHECK_THROWS_AS(resolve_map(spec, builtins::d4(), builtins::boole()),
                  std::invalid_argument);
  CHECK_THROWS_AS(resolve_map(spec,
                              direct_product(builtins::boole(), builtins::z2())
                                  .algebra.renamed("D4"),
                              builtins::z2()),
                  NotAHomomorphism);
  CHECK_THROWS_AS(parse_map_file("hom A -> B\n0 -> 0\n0 -> 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_map_file("hom A -> B\n1 -> 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_map_file("hom A B\n"), SyntaxError);
  auto text = write_map(h);
  CHECK(parse_map_file(text).images == spec.images);
}

TEST_CASE("diagram files") {
  auto d = load_diagram_file(data_dir / "c3_pair.diag");
  CHECK(d.objects.size() == 2);
  CHECK(d.arrows.size() == 2);
  CHECK(d.arrows[1].map.map()[2] == 1);
  auto empty = load_diagram_file(data_dir / "empty.diag");
  CHECK(empty.objects.empty());
  CHECK_THROWS_AS(parse_diagram_file("object c3.alg\narrow 0 3 x.map\n", data_dir),
                  SyntaxError);
  CHECK_THROWS_AS(load_diagram_file(data_dir / "missing.diag"), std::runtime_error);
}
