#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "csr/catalog.hpp"
#include "csr/parallel.hpp"
#include "csr/salgebra.hpp"

namespace csr {

enum class Status { pass, fail, skip };

std::string_view to_string(Status s);

struct Check {
  std::string id;
  Status status = Status::pass;
  // Required for FAIL; the reason for SKIP; optional detail for PASS.
  std::string witness;
};

struct Summary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  Summary summary() const;
  bool ok() const { return summary().failed == 0; }

  void pass(std::string id, std::string detail = {});
  void fail(std::string id, std::string witness);
  void skip(std::string id, std::string reason);
  void append(const Report& other);

  // One line per check then a summary line.
  std::string to_text() const;
  // Header "suite\tid\tstatus\twitness", one row per check, tabs and
  // newlines in fields escaped.
  std::string to_tsv() const;
};

struct SuiteOptions {
  Exec exec = Exec::parallel;
  // Couniversality partners and closure pairs are drawn from entries of at
  // most this order.
  std::size_t partner_order = 3;
  // Cocone targets for the coproduct universal property.
  std::size_t cocone_order = 4;
};

// For every entry over the initial object: the star subset contains 1 and
// is closed under +, * and the scalar action; the coreflector is
// idempotent; Hom(B, A') -> Hom(B, A) is a bijection for every CSRstar
// entry B of order at most partner_order. Entries not over the initial object are skipped.
Report verify_coreflection_suite(const Catalog& catalog,
                                 const SuiteOptions& options = {});

// For every ordered pair of flagged entries of order at most
// partner_order: the tensor coproduct is bound-stable and carries the
// flag; where homomorphisms A -> B exist, a coequalizer of the first two
// and the pushout of (id_A, h) are checked too.
Report verify_closure_suite(const Catalog& catalog, Flag flag,
                            const SuiteOptions& options = {});

// CRings2 entries: star subset = {a | 2a = 0, a^2 = a} and the coreflection
// is BRings. AICSR entries: star subset = {a | 1+a = 1, a^2 = a} and the
// coreflection is DLat. Entries in neither class are skipped.
Report verify_specialization_suite(const Catalog& catalog,
                                   const SuiteOptions& options = {});

// For the coproduct of every ordered pair of CSRstar entries of order at
// most partner_order and every cocone into an entry of order at most
// cocone_order: copair exists, validates, commutes with the injections and
// is the only mediating homomorphism.
Report verify_coproduct_universality(const Catalog& catalog,
                                     const SuiteOptions& options = {});

}  // namespace csr
