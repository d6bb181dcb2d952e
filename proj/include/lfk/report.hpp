// Verdicts returned by the checking operations.
#pragma once

#include "lfk/gauss_rat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lfk {

enum class Status { PASS, FAIL, ERROR };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::ERROR: return "ERROR";
  }
  return "ERROR";
}

struct Clause {
  std::string name;
  Status status = Status::PASS;
  /// Canonical print of the nonzero object disproving the clause.
  std::string witness;
  std::string note;
  /// Informational clauses are reported but do not affect the verdict.
  bool informational = false;
};

struct Report {
  std::vector<Clause> clauses;
  /// Named results (canonical prints), e.g. {"theta", "..."}.
  std::vector<std::pair<std::string, std::string>> values;
  std::string message;

  Report& check(std::string name, bool ok, std::string witness = {}, std::string note = {}) {
    clauses.push_back(Clause{std::move(name), ok ? Status::PASS : Status::FAIL,
                             ok ? std::string() : std::move(witness), std::move(note), false});
    return *this;
  }
  Report& info(std::string name, bool ok, std::string note = {}) {
    clauses.push_back(Clause{std::move(name), ok ? Status::PASS : Status::FAIL, {}, std::move(note), true});
    return *this;
  }
  Report& value(std::string name, std::string text) {
    values.emplace_back(std::move(name), std::move(text));
    return *this;
  }
  /// Appends another report's clauses and values, prefixing clause names.
  Report& merge(const Report& other, const std::string& prefix = {}) {
    for (auto c : other.clauses) {
      if (!prefix.empty()) c.name = prefix + "." + c.name;
      clauses.push_back(std::move(c));
    }
    values.insert(values.end(), other.values.begin(), other.values.end());
    return *this;
  }

  bool passed() const {
    for (const auto& c : clauses)
      if (!c.informational && c.status != Status::PASS) return false;
    return true;
  }
  Status verdict() const { return passed() ? Status::PASS : Status::FAIL; }

  /// Witness of the first failing clause (empty when passing).
  std::string witness() const {
    for (const auto& c : clauses)
      if (!c.informational && c.status != Status::PASS) return c.witness;
    return {};
  }
  const std::string* find_value(const std::string& name) const {
    for (const auto& [k, v] : values)
      if (k == name) return &v;
    return nullptr;
  }
};

/// A precondition failed and a concrete nonzero object shows why
/// (e.g. the difference f - conj(f) for a non-real input).
class WitnessError : public DomainError {
 public:
  WitnessError(const std::string& what, std::string witness)
      : DomainError(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace lfk
