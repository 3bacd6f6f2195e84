#include "ciflie/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "ciflie/bracket.hpp"
#include "ciflie/error.hpp"
#include "ciflie/report.hpp"
#include "ciflie/workspace.hpp"

namespace ciflie {

namespace {

// Raised for a well-formed command line that names something the file lacks.
struct UsageError : Error {
  using Error::Error;
};

struct Loaded {
  Workspace ws;
  std::string digest;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return {parse_spec(text), fnv1a_hex(text)};
  } catch (const ParseError& e) {
    throw Error(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
  }
}

const NamedSet& need_set(const Workspace& ws, const std::string& name, const char* flag) {
  if (name.empty()) throw UsageError(std::string(flag) + " is required");
  const NamedSet* s = ws.find_set(name);
  if (!s) throw UsageError("no cifset named '" + name + "'");
  return *s;
}

const NamedMap& need_map(const Workspace& ws, const std::string& name, const char* flag) {
  if (name.empty()) throw UsageError(std::string(flag) + " is required");
  const NamedMap* m = ws.find_map(name);
  if (!m) throw UsageError("no map named '" + name + "'");
  return *m;
}

std::string paint(const CliOptions& opts, bool good, const std::string& text) {
  if (!opts.color) return text;
  return (good ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
}

struct CheckArgs {
  std::string property, file, name, with, format = "text";
};

struct ComputeArgs {
  std::string op, file, left, right, map, format = "text", out;
  std::optional<long long> alpha;
  bool oracle = false;
};

struct VerifyArgs {
  std::string theorem, file, space, format = "text";
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  int chain_length = 3;
};

int do_validate(const std::string& file, std::ostream& out) {
  const Loaded l = load(file);
  out << "ok: field " << l.ws.field.modulus() << ", " << l.ws.spaces.size() << " space(s), " << l.ws.sets.size()
      << " cifset(s), " << l.ws.maps.size() << " map(s)\n";
  return kExitOk;
}

int do_check(const CheckArgs& a, std::ostream& out, const CliOptions& opts) {
  const Loaded l = load(a.file);
  CheckReport r{a.property, a.name, std::nullopt, {}};
  if (!a.with.empty()) r.other = a.with;

  if (a.property == "anti-hom") {
    const NamedMap& m = need_map(l.ws, a.name, "--name");
    const GradedMap anti(m.map.source_ptr(), m.map.target_ptr(), m.map.images(), MapKind::anti_homomorphism);
    const auto v = validate_map(anti);
    if (!v.ok()) {
      const auto& first = v.report.violations.front();
      r.outcome.holds = false;
      r.outcome.clause = to_string(first.axiom) + ": " + first.message;
      for (std::size_t i : first.witness) r.outcome.witness.push_back(anti.source().basis(i));
    } else if (!v.surjective) {
      r.outcome.holds = false;
      r.outcome.clause = "not surjective";
    }
  } else {
    const NamedSet& s = need_set(l.ws, a.name, "--name");
    const NamedSet* w = a.with.empty() ? nullptr : &need_set(l.ws, a.with, "--with");
    if (a.property == "subspace") {
      r.outcome = is_cif_subspace(s.set);
    } else if (a.property == "ideal") {
      r.outcome = is_cif_ideal(s.set);
    } else if (a.property == "graded") {
      r.outcome = is_z2_graded(s.set);
    } else if (a.property == "homogeneous") {
      r.outcome = w ? pair_homogeneous(s.set, w->set) : is_homogeneous(s.set);
    } else {  // direct-sum
      if (!w) throw UsageError("direct-sum needs --with");
      if (!is_direct_sum(s.set, w->set)) {
        r.outcome.holds = false;
        r.outcome.clause = "the intersection is not trivial";
      }
    }
  }

  if (a.format == "json") {
    out << emit_json({"check", l.digest}, r);
  } else {
    out << a.property << " " << a.name << (r.other ? " with " + *r.other : "") << ": "
        << paint(opts, r.outcome.holds, r.outcome.holds ? "holds" : "FAILS") << "\n";
    if (!r.outcome.holds) out << "  " << r.outcome.describe() << "\n";
  }
  return r.outcome.holds ? kExitOk : kExitProperty;
}

int do_compute(const ComputeArgs& a, std::ostream& out, const CliOptions& opts) {
  if (a.oracle && a.op != "bracket") throw UsageError("--oracle applies to bracket only");
  const Loaded l = load(a.file);
  const NamedSet& left = need_set(l.ws, a.left, "--left");
  const auto right = [&]() -> const NamedSet& { return need_set(l.ws, a.right, "--right"); };
  const auto map = [&]() -> const NamedMap& { return need_map(l.ws, a.map, "--map"); };

  std::optional<CIFSet> result;
  std::optional<bool> agrees;
  if (a.op == "sum") {
    result = cif_sum(left.set, right().set);
  } else if (a.op == "intersection") {
    result = intersection(left.set, right().set);
  } else if (a.op == "scalar") {
    if (!a.alpha) throw UsageError("scalar needs --alpha");
    result = scalar_action(left.set.space().field().reduce(*a.alpha), left.set);
  } else if (a.op == "bracket") {
    result = bracket_product(left.set, right().set);
    if (a.oracle) agrees = *result == bracket_product_oracle(left.set, right().set);
  } else if (a.op == "image") {
    result = image(map().map, left.set);
  } else {  // preimage
    result = preimage(map().map, left.set);
  }

  const std::string space = l.ws.space_name(result->space_ptr()).value_or("?");
  const ComputeReport report{a.op, space, *result, agrees};
  std::ostringstream text;
  if (a.format == "json") {
    text << emit_json({"compute", l.digest}, report);
  } else {
    text << "# ciflie " << tool_version() << " compute " << a.op << ", input " << l.digest << "\n";
    for (const auto& n : result->notes()) text << "# note: " << n << "\n";
    if (agrees) text << "# oracle: " << paint(opts, *agrees, *agrees ? "agrees" : "DISAGREES") << "\n";
    text << serialize_cifset("result", space, *result);
  }

  if (a.out.empty()) {
    out << text.str();
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f || !(f << text.str())) throw Error("cannot write '" + a.out + "'");
  }
  return agrees.value_or(true) ? kExitOk : kExitProperty;
}

int do_verify(const VerifyArgs& a, std::ostream& out, const CliOptions& opts) {
  if (!is_known_theorem(a.theorem)) throw UsageError("unknown theorem id '" + a.theorem + "'");
  const Loaded l = load(a.file);
  if (l.ws.spaces.empty()) throw Error(a.file + ": no space declared");
  const NamedSpace* space = a.space.empty() ? &l.ws.spaces.front() : l.ws.find_space(a.space);
  if (!space) throw UsageError("no space named '" + a.space + "'");

  const GenConfig cfg = make_config(space->algebra, a.seed, a.chain_length);
  const VerifyReport report{space->name, a.seed, a.chain_length, check_theorem(a.theorem, cfg, a.trials)};
  const auto& t = report.theorem;

  if (a.format == "json") {
    out << emit_json({"verify", l.digest}, report);
  } else {
    const std::string verdict = !t.specified ? "unspecified" : t.passed() ? "pass" : "FAIL";
    out << t.theorem_id << ": " << paint(opts, t.passed(), verdict) << " (" << t.trials << " trials, seed " << a.seed
        << ", space " << space->name << ")\n";
    for (const auto& f : t.failures) out << "  seed " << f.seed << " [" << f.digest << "] " << f.witness << "\n";
    for (const auto& n : t.notes) out << "  " << n << "\n";
  }
  return t.passed() ? kExitOk : kExitProperty;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err, const CliOptions& opts) {
  CLI::App app{"Complex intuitionistic fuzzy sets over finite Lie superalgebras", "ciflie"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Load a spec file and run every semantic check");
  validate->add_option("file", validate_file)->required();

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "Test a structural property of a named set or map");
  check->add_option("property", ck.property)
      ->required()
      ->check(CLI::IsMember({"subspace", "ideal", "graded", "homogeneous", "direct-sum", "anti-hom"}));
  check->add_option("file", ck.file)->required();
  check->add_option("--name", ck.name)->required();
  check->add_option("--with", ck.with);
  check->add_option("--format", ck.format)->check(CLI::IsMember({"text", "json"}));

  ComputeArgs cp;
  auto* compute = app.add_subcommand("compute", "Compute a set-level operation");
  compute->add_option("operation", cp.op)
      ->required()
      ->check(CLI::IsMember({"sum", "scalar", "bracket", "image", "preimage", "intersection"}));
  compute->add_option("file", cp.file)->required();
  compute->add_option("--left", cp.left)->required();
  compute->add_option("--right", cp.right);
  compute->add_option("--alpha", cp.alpha);
  compute->add_option("--map", cp.map);
  compute->add_flag("--oracle", cp.oracle, "Cross-check bracket against the fixed-point oracle");
  compute->add_option("--format", cp.format)->check(CLI::IsMember({"text", "json"}));
  compute->add_option("--out", cp.out);

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run a catalog claim on seeded random inputs");
  verify->add_option("theorem", vf.theorem)->required();
  verify->add_option("file", vf.file)->required();
  verify->add_option("--trials", vf.trials)->check(CLI::Range(std::size_t{1}, std::size_t{1'000'000}));
  verify->add_option("--seed", vf.seed);
  verify->add_option("--space", vf.space);
  verify->add_option("--chain-length", vf.chain_length)->check(CLI::Range(2, 4));
  verify->add_option("--format", vf.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv_store{"ciflie"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*validate) return do_validate(validate_file, out);
    if (*check) return do_check(ck, out, opts);
    if (*compute) return do_compute(cp, out, opts);
    return do_verify(vf, out, opts);
  } catch (const UsageError& e) {
    err << "ciflie: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ciflie: " << e.what() << "\n";
    return kExitLoad;
  }
}

}  // namespace ciflie
