#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ciflie/cifset.hpp"
#include "ciflie/theorems.hpp"

namespace ciflie {

/// Version string compiled into the library.
const char* tool_version();

/// Common header of every JSON report.
struct ReportContext {
  std::string command;
  std::string input_digest;  // fnv1a_hex of the input file
};

struct ComputeReport {
  std::string operation;
  std::string space;
  CIFSet result;
  std::optional<bool> oracle_agrees;  // set by compute bracket --oracle
};

struct CheckReport {
  std::string property;
  std::string subject;
  std::optional<std::string> other;
  PredicateReport outcome;
};

struct VerifyReport {
  std::string space;
  std::uint64_t seed;
  int chain_length;
  TheoremReport theorem;
};

/// Rows {vector, mem, non} in code order; rationals as "num/den" strings.
std::string cifset_json(const CIFSet& set);

/// Deterministic JSON documents with a fixed key order, newline terminated.
std::string emit_json(const ReportContext& ctx, const ComputeReport& report);
std::string emit_json(const ReportContext& ctx, const CheckReport& report);
std::string emit_json(const ReportContext& ctx, const VerifyReport& report);

}  // namespace ciflie
