#include "csr/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csr/catalog.hpp"
#include "csr/colimits.hpp"
#include "csr/io.hpp"
#include "csr/isomorphism.hpp"
#include "csr/report.hpp"

namespace csr {

namespace {

enum class Format { text, tsv };

// Input the command cannot use; exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParsedAlgebra load_input(const std::string& path) {
  try {
    return load_algebra_file(path);
  } catch (const ValidationError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const NotAHomomorphism& e) {
    throw InputError(path + ": structure map: " + e.what());
  }
}

Homomorphism load_hom(const std::string& path, const FiniteSemiring& source,
                      const FiniteSemiring& target) {
  try {
    return resolve_map(load_map_file(path), source, target);
  } catch (const NotAHomomorphism& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string show_members(const std::vector<Elem>& members) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    out << (i > 0 ? "," : "") << members[i];
  }
  out << "}";
  return out.str();
}

int cmd_validate(const std::string& path, std::ostream& out) {
  try {
    auto parsed = load_algebra_file(path);
    const auto& a = algebra_of(parsed);
    out << "valid: " << a.name() << " (order " << a.order() << ")";
    if (const auto* s = std::get_if<SAlgebra>(&parsed)) {
      out << " over " << s->base().name();
    }
    out << "\n";
    return 0;
  } catch (const ValidationError& e) {
    out << "invalid: " << e.report().describe() << "\n";
    return 1;
  } catch (const NotAHomomorphism& e) {
    out << "invalid: structure map is " << e.what() << "\n";
    return 1;
  }
}

int cmd_classify(const std::string& path, Format format, std::ostream& out) {
  auto parsed = load_input(path);
  auto sa = as_salgebra(parsed);
  const auto& a = sa.algebra();
  auto flags = classify(a);
  bool over = is_over_initial(sa);
  if (format == Format::tsv) {
    out << "name\torder\tflags\tover_initial\n"
        << a.name() << "\t" << a.order() << "\t" << flags.to_string() << "\t"
        << (over ? "yes" : "no") << "\n";
  } else {
    out << a.name() << " (order " << a.order() << "): " << flags.to_string()
        << "\nover initial object: " << (over ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_coreflect(const std::string& path, std::ostream& out) {
  auto sa = as_salgebra(load_input(path));
  auto c = coreflect(sa);
  out << "# A' = " << show_members(c.subset.members()) << " in "
      << sa.algebra().name() << "\n"
      << write_algebra(c.algebra.algebra()) << "\n"
      << write_map(c.inclusion);
  return 0;
}

int cmd_initial(const std::optional<std::string>& base_path, std::ostream& out) {
  std::optional<BaseSemiring> base;
  if (base_path) {
    auto parsed = load_input(*base_path);
    if (!std::holds_alternative<FiniteSemiring>(parsed)) {
      throw InputError(*base_path + ": base must be a plain semiring");
    }
    base = BaseSemiring(std::get<FiniteSemiring>(parsed));
  } else {
    base = BaseSemiring(Naturals{});
  }
  auto init = initial_object(*base);
  out << "# initial object over " << base->name() << "\n"
      << write_algebra(init.algebra.algebra());
  if (init.projection) {
    out << "\n" << write_map(*init.projection);
  }
  return 0;
}

void print_coproduct(const TensorQuotient& t, std::ostream& out) {
  out << "# coproduct at bound " << t.bound << "\n";
  for (std::size_t i = 0; i < t.representatives.size(); ++i) {
    out << "# " << i << " = " << t.representatives[i].to_string() << "\n";
  }
  out << write_algebra(t.algebra()) << "\n"
      << write_map(t.left_injection) << "\n"
      << write_map(t.right_injection);
}

int cmd_coproduct(const std::string& a, const std::string& b, std::ostream& out) {
  auto x = as_salgebra(load_input(a));
  auto y = as_salgebra(load_input(b));
  print_coproduct(tensor_coproduct(x, y), out);
  return 0;
}

int cmd_coeq(const std::vector<std::string>& files, std::ostream& out) {
  auto a = algebra_of(load_input(files[0]));
  auto b = algebra_of(load_input(files[1]));
  auto f = load_hom(files[2], a, b);
  auto g = load_hom(files[3], a, b);
  auto q = coequalizer(f, g);
  out << "# coequalizer\n" << write_algebra(q.algebra) << "\n"
      << write_map(q.projection);
  return 0;
}

int cmd_pushout(const std::vector<std::string>& files, std::ostream& out) {
  auto z = algebra_of(load_input(files[0]));
  auto a = as_salgebra(load_input(files[1]));
  auto b = as_salgebra(load_input(files[2]));
  auto f = load_hom(files[3], z, a.algebra());
  auto g = load_hom(files[4], z, b.algebra());
  auto p = pushout(a, b, f, g);
  out << "# pushout\n" << write_algebra(p.algebra) << "\n"
      << write_map(p.left_leg) << "\n"
      << write_map(p.right_leg);
  return 0;
}

int cmd_colimit(const std::string& path, std::ostream& out) {
  Diagram d;
  try {
    d = load_diagram_file(path);
  } catch (const ValidationError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const NotAHomomorphism& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  auto c = colimit_diagram(d);
  out << "# colimit of " << d.objects.size() << " objects and "
      << d.arrows.size() << " arrows\n"
      << write_algebra(c.algebra);
  for (const auto& leg : c.legs) {
    out << "\n" << write_map(leg);
  }
  return 0;
}

void print_catalog(const Catalog& c, Format format, std::ostream& out) {
  if (format == Format::tsv) {
    out << "name\torder\tflags\ttables\n";
    for (const auto& e : c.entries()) {
      out << e.algebra.name() << "\t" << e.algebra.order() << "\t"
          << e.flags.to_string() << "\t" << compact(e.algebra) << "\n";
    }
    return;
  }
  for (const auto& e : c.entries()) {
    out << e.algebra.name() << "  " << e.flags.to_string() << "  "
        << compact(e.algebra) << "\n";
  }
  out << c.size() << " semirings\n";
}

int cmd_enumerate(std::size_t n, Format format, Exec exec, std::ostream& out) {
  print_catalog(enumerate_semirings(n, exec), format, out);
  return 0;
}

int cmd_check(const std::string& suite, const std::optional<std::string>& flag,
              std::optional<std::size_t> max_order, Format format, Exec exec,
              std::ostream& out) {
  SuiteOptions options;
  options.exec = exec;
  Report report;
  if (suite == "coreflection") {
    auto k = max_order.value_or(default_max_enumeration_order);
    options.partner_order = std::min<std::size_t>(3, k);
    report = verify_coreflection_suite(enumerate_up_to(k, exec), options);
  } else if (suite == "closure") {
    if (!flag) {
      throw CLI::ValidationError("check closure", "requires a FLAG");
    }
    Flag f = parse_flag(*flag);
    auto k = max_order.value_or(3);
    options.partner_order = k;
    report = verify_closure_suite(enumerate_up_to(k, exec), f, options);
  } else if (suite == "section3") {
    if (flag) {
      throw CLI::ValidationError("check section3", "takes no FLAG");
    }
    auto k = max_order.value_or(default_max_enumeration_order);
    report = verify_specialization_suite(enumerate_up_to(k, exec), options);
  } else {
    throw CLI::ValidationError("check", "unknown suite '" + suite + "'");
  }
  out << (format == Format::tsv ? report.to_tsv() : report.to_text());
  return report.ok() ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Finite commutative semirings: validation, coreflection, colimits"};
  app.name("semiring");
  app.require_subcommand(1);

  std::string format_name = "text";
  bool serial = false;

  std::string file_a;
  std::string file_b;
  std::vector<std::string> files;
  std::optional<std::string> base_path;
  bool naturals = false;
  std::size_t order = 0;
  std::string suite;
  std::optional<std::string> flag;
  std::optional<std::size_t> max_order;

  auto* validate = app.add_subcommand("validate", "Check the semiring axioms");
  validate->add_option("FILE", file_a)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Print variety flags");
  classify_cmd->add_option("FILE", file_a)->required();
  auto* coreflect_cmd =
      app.add_subcommand("coreflect", "Largest subalgebra with 1+2x=1, x^2=x");
  coreflect_cmd->add_option("FILE", file_a)->required();
  auto* initial = app.add_subcommand("initial", "Initial object over a base");
  auto* base_opt = initial->add_option("BASEFILE", base_path);
  auto* nat_opt = initial->add_flag("--naturals", naturals, "Base is the naturals");
  base_opt->excludes(nat_opt);
  initial->require_option(1);
  auto* coproduct = app.add_subcommand("coproduct", "Binary coproduct");
  coproduct->add_option("FILES", files)->required()->expected(2);
  auto* coeq = app.add_subcommand("coeq", "Coequalizer of two maps A -> B");
  coeq->add_option("FILES", files)->required()->expected(4);
  auto* push = app.add_subcommand("pushout", "Pushout of A <- Z -> B");
  push->add_option("FILES", files)->required()->expected(5);
  auto* colimit = app.add_subcommand("colimit", "Colimit of a finite diagram");
  colimit->add_option("DIAGRAMFILE", file_a)->required();
  auto* enumerate = app.add_subcommand("enumerate", "All semirings of order N");
  enumerate->add_option("N", order)->required();
  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("SUITE", suite)
      ->required()
      ->check(CLI::IsMember({"coreflection", "closure", "section3"}));
  check->add_option("FLAG", flag);
  check->add_option("--max-order", max_order, "Largest catalog order");
  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "tsv"}));
    sub->add_flag("--serial", serial, "Run kernels on one thread");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const Format format = format_name == "tsv" ? Format::tsv : Format::text;
  const Exec exec = serial ? Exec::serial : Exec::parallel;
  try {
    if (validate->parsed()) {
      return cmd_validate(file_a, out);
    }
    if (classify_cmd->parsed()) {
      return cmd_classify(file_a, format, out);
    }
    if (coreflect_cmd->parsed()) {
      return cmd_coreflect(file_a, out);
    }
    if (initial->parsed()) {
      return cmd_initial(base_path, out);
    }
    if (coproduct->parsed()) {
      return cmd_coproduct(files[0], files[1], out);
    }
    if (coeq->parsed()) {
      return cmd_coeq(files, out);
    }
    if (push->parsed()) {
      return cmd_pushout(files, out);
    }
    if (colimit->parsed()) {
      return cmd_colimit(file_a, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(order, format, exec, out);
    }
    if (check->parsed()) {
      return cmd_check(suite, flag, max_order, format, exec, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const EmptyDiagram& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const BaseMismatch& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const OrderTooLarge& e) {
    err << "OrderTooLarge: " << e.what() << " (set SEMIRING_MAX_ORDER)\n";
    return 2;
  } catch (const NotOverInitial& e) {
    err << "NotOverInitial: " << e.what() << "\n";
    return 1;
  } catch (const BoundUnstable& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const IllDefined& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace csr
