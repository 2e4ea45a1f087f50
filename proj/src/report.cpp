#include "csr/report.hpp"

#include <sstream>

namespace csr {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::skip:
      return "SKIP";
  }
  return "?";
}

Summary Report::summary() const {
  Summary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::pass:
        ++s.passed;
        break;
      case Status::fail:
        ++s.failed;
        break;
      case Status::skip:
        ++s.skipped;
        break;
    }
  }
  return s;
}

void Report::pass(std::string id, std::string detail) {
  checks.push_back({std::move(id), Status::pass, std::move(detail)});
}

void Report::fail(std::string id, std::string witness) {
  if (witness.empty()) {
    witness = "(no witness recorded)";
  }
  checks.push_back({std::move(id), Status::fail, std::move(witness)});
}

void Report::skip(std::string id, std::string reason) {
  checks.push_back({std::move(id), Status::skip, std::move(reason)});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << to_string(c.status) << "  " << c.id;
    if (!c.witness.empty()) {
      out << "  " << c.witness;
    }
    out << "\n";
  }
  auto s = summary();
  out << suite << ": " << s.passed << " passed, " << s.failed << " failed, "
      << s.skipped << " skipped\n";
  return out.str();
}

namespace {

std::string escape(const std::string& field) {
  std::string out;
  for (char ch : field) {
    switch (ch) {
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

}  // namespace

std::string Report::to_tsv() const {
  std::ostringstream out;
  out << "suite\tid\tstatus\twitness\n";
  for (const auto& c : checks) {
    out << escape(suite) << "\t" << escape(c.id) << "\t" << to_string(c.status)
        << "\t" << escape(c.witness) << "\n";
  }
  return out.str();
}

}  // namespace csr
