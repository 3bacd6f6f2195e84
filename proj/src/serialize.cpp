#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ciflie/report.hpp"
#include "ciflie/workspace.hpp"

namespace ciflie {

namespace {

using Json = nlohmann::ordered_json;

std::string degree_tokens(const CIFDegree& d) {
  return to_string(d.mem().r()) + " " + to_string(d.mem().w()) + " " + to_string(d.non().r()) + " " +
         to_string(d.non().w());
}

std::string coords(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

// Most frequent degree among nonzero vectors; ties go to the earliest vector.
CIFDegree most_frequent(const CIFSet& set) {
  std::vector<std::pair<CIFDegree, std::size_t>> counts;
  for (Code x = 1; x < set.size(); ++x) {
    auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == set.at_code(x); });
    if (it == counts.end()) {
      counts.emplace_back(set.at_code(x), 1);
    } else {
      ++it->second;
    }
  }
  if (counts.empty()) return CIFDegree::trivial();
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json degree_json(const Degree& d) { return Json::array({to_string(d.r()), to_string(d.w())}); }

Json set_rows(const CIFSet& set) {
  Json rows = Json::array();
  for (Code x = 0; x < set.size(); ++x) {
    Json row;
    row["vector"] = vector_json(set.space().decode(x));
    row["mem"] = degree_json(set.mem(x));
    row["non"] = degree_json(set.non(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json header(const ReportContext& ctx) {
  Json j;
  j["tool"] = "ciflie";
  j["version"] = tool_version();
  j["command"] = ctx.command;
  j["input_digest"] = ctx.input_digest;
  return j;
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

const char* tool_version() { return CIFLIE_VERSION; }

std::string serialize_cifset(const std::string& name, const std::string& space, const CIFSet& set) {
  std::ostringstream os;
  const CIFDegree fallback = most_frequent(set);
  os << "cifset " << name << " on " << space << " default " << degree_tokens(fallback) << "\n";
  for (Code x = 1; x < set.size(); ++x) {
    if (set.at_code(x) == fallback) continue;
    os << "entry " << name << " " << coords(set.space().decode(x)) << " deg " << degree_tokens(set.at_code(x))
       << "\n";
  }
  return os.str();
}

std::string serialize(const Workspace& ws) {
  std::ostringstream os;
  os << "field " << ws.field.modulus() << "\n";
  for (const auto& s : ws.spaces) {
    const auto& alg = *s.algebra;
    os << "space " << s.name << " dim " << alg.dim() << " parity";
    for (Parity p : alg.parities()) os << " " << static_cast<int>(p);
    os << "\n";
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      for (std::size_t j = i; j < alg.dim(); ++j) {
        if (alg.structure(i, j).is_zero()) continue;
        os << "bracket " << s.name << " " << i + 1 << " " << j + 1 << " -> " << coords(alg.structure(i, j)) << "\n";
      }
    }
  }
  for (const auto& s : ws.sets) os << serialize_cifset(s.name, s.space, s.set);
  for (const auto& m : ws.maps) {
    os << "map " << m.name << " " << m.source << " -> " << m.target << " kind "
       << (m.map.kind() == MapKind::anti_homomorphism ? "anti" : "plain") << " rows";
    for (const auto& img : m.map.images()) os << " " << coords(img) << " /";
    os << "\n";
  }
  return os.str();
}

std::string cifset_json(const CIFSet& set) { return set_rows(set).dump(2) + "\n"; }

std::string emit_json(const ReportContext& ctx, const ComputeReport& report) {
  Json j = header(ctx);
  j["operation"] = report.operation;
  j["space"] = report.space;
  if (report.oracle_agrees) j["oracle_agrees"] = *report.oracle_agrees;
  j["notes"] = report.result.notes();
  j["result"] = set_rows(report.result);
  return finish(j);
}

std::string emit_json(const ReportContext& ctx, const CheckReport& report) {
  Json j = header(ctx);
  j["property"] = report.property;
  j["subject"] = report.subject;
  j["other"] = report.other ? Json(*report.other) : Json(nullptr);
  j["holds"] = report.outcome.holds;
  j["clause"] = report.outcome.clause;
  Json witness = Json::array();
  for (const auto& v : report.outcome.witness) witness.push_back(vector_json(v));
  j["witness"] = std::move(witness);
  j["scalar"] = report.outcome.scalar ? Json(*report.outcome.scalar) : Json(nullptr);
  return finish(j);
}

std::string emit_json(const ReportContext& ctx, const VerifyReport& report) {
  const auto& t = report.theorem;
  Json j = header(ctx);
  j["theorem"] = t.theorem_id;
  j["space"] = report.space;
  j["seed"] = report.seed;
  j["chain_length"] = report.chain_length;
  j["trials"] = t.trials;
  j["specified"] = t.specified;
  j["passed"] = t.passed();
  Json failures = Json::array();
  for (const auto& f : t.failures) {
    Json row;
    row["seed"] = f.seed;
    row["digest"] = f.digest;
    row["witness"] = f.witness;
    failures.push_back(std::move(row));
  }
  j["failures"] = std::move(failures);
  j["notes"] = t.notes;
  return finish(j);
}

}  // namespace ciflie
