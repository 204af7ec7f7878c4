#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "jetlift/io.hpp"
#include "jetlift/oracle.hpp"
#include "jetlift/verifier.hpp"

namespace jetlift::cli {

namespace {

struct CommandConfig {
  unsigned r = 0;
  std::size_t k = 0;
  unsigned s = 0;
  std::string in_path;
  std::string out_path;
  std::string dump_path;
  std::uint64_t seed = 20061;
  std::size_t witnesses = 10;
  std::size_t max_unknowns = 20000;
  bool compare = false;
  bool check_z = false;
  bool json = false;
  bool all_slots = false;
};

void add_params(CLI::App* cmd, CommandConfig& cfg, bool required) {
  auto* r = cmd->add_option("-r", cfg.r, "truncation order r");
  auto* k = cmd->add_option("-k", cfg.k, "number of variables k");
  auto* s = cmd->add_option("-s", cfg.s, "arity s");
  for (auto* opt : {r, k, s}) {
    opt->check(CLI::NonNegativeNumber);
    if (required) opt->required();
  }
}

std::string verdict(bool ok) { return ok ? "ok" : "fail"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw StructuralError("cannot write " + path);
  file << text;
}

int cmd_dim(const CommandConfig& cfg, std::ostream& out) {
  const LiftParams params(cfg.r, cfg.k, cfg.s);
  const Integer dim = dimension(params);
  std::optional<std::size_t> z_count;
  if (cfg.check_z) z_count = enumerate_Z(params).size();
  if (cfg.json) {
    io::json j = {{"r", cfg.r}, {"k", cfg.k}, {"s", cfg.s}};
    if (dim.fits_ulong_p()) {
      j["dimension"] = dim.get_ui();
    } else {
      j["dimension"] = dim.get_str();
    }
    if (z_count) j["z_count"] = *z_count;
    out << j.dump() << '\n';
  } else {
    out << dim.get_str();
    if (z_count) out << " z_count=" << *z_count;
    out << '\n';
  }
  if (z_count && Integer(*z_count) != dim) return kMismatch;
  return kOk;
}

int cmd_zset(const CommandConfig& cfg, std::ostream& out) {
  const LiftParams params(cfg.r, cfg.k, cfg.s);
  io::json list = io::json::array();
  for (const auto& z : enumerate_Z(params)) {
    io::json tuple = io::json::array();
    for (auto axis : z.i) tuple.push_back(axis);
    list.push_back({{"i", tuple}, {"alpha", io::to_json(z.alpha)}});
  }
  out << list.dump() << '\n';
  return kOk;
}

std::string summary_line(const VerificationReport& report) {
  std::string line = "verify:";
  for (const auto& c : report.checks()) {
    line += " " + c.name + "=" + verdict(c.failed == 0);
  }
  return line;
}

int cmd_construct(const CommandConfig& cfg, bool have_params, std::ostream& out,
                  std::ostream& err) {
  std::optional<CoefficientAssignment> assignment;
  if (!cfg.in_path.empty()) {
    assignment = io::assignment_from_json(io::read_json_file(cfg.in_path));
  } else if (have_params) {
    std::mt19937_64 rng(cfg.seed);
    assignment = CoefficientAssignment::random(LiftParams(cfg.r, cfg.k, cfg.s), rng);
  } else {
    err << "construct: give --in PATH or -r/-k/-s\n";
    return kUsage;
  }

  const LiftTable table = construct(*assignment);
  VerifyOptions options;
  options.max_witnesses = cfg.witnesses;
  options.all_slots = cfg.all_slots;
  const VerificationReport report = verify_all(table, options);

  const std::string text = io::to_json(table).dump(1) + "\n";
  std::ostream& summary = cfg.out_path.empty() ? err : out;
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    write_text(cfg.out_path, text);
  }
  summary << summary_line(report) << '\n';
  if (!report.passed()) {
    summary << io::to_json(report).dump(1) << '\n';
    return kMismatch;
  }
  return kOk;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.in_path.empty()) {
    err << "verify: --in PATH is required\n";
    return kUsage;
  }
  const LiftTable table = io::table_from_json(io::read_json_file(cfg.in_path));
  VerifyOptions options;
  options.max_witnesses = cfg.witnesses;
  options.all_slots = cfg.all_slots;
  const VerificationReport report = verify_all(table, options);
  const std::string text = io::to_json(report).dump(1) + "\n";
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    write_text(cfg.out_path, text);
  }
  out << summary_line(report) << '\n';
  return report.passed() ? kOk : kMismatch;
}

int cmd_oracle(const CommandConfig& cfg, std::ostream& out) {
  const LiftParams params(cfg.r, cfg.k, cfg.s);
  OracleOptions options;
  options.max_unknowns = cfg.max_unknowns;
  const ConstraintSystem system = build_constraints(params, options);
  if (!cfg.dump_path.empty()) {
    std::ofstream file(cfg.dump_path);
    if (!file) throw StructuralError("cannot write " + cfg.dump_path);
    write_matrix_market(file, system);
  }
  const Nullspace null = nullspace(system);
  const Integer formula = dimension(params);
  const IsoCheck iso = check_iso(system, null.basis);
  bool ok = Integer(null.dimension) == formula && iso.ok;
  out << "nullspace=" << null.dimension << " formula=" << formula.get_str()
      << " iso=" << verdict(iso.ok);
  std::optional<VerificationReport> comparison;
  if (cfg.compare) {
    comparison = compare_with_construction(system, null, cfg.witnesses);
    ok = ok && comparison->passed();
    out << " compare=" << verdict(comparison->passed());
  }
  out << '\n';
  if (comparison && !comparison->passed()) out << io::to_json(*comparison).dump(1) << '\n';
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew-symmetric Leibniz maps on the jet algebra D^r_k", "jetlift"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto* dim = app.add_subcommand("dim", "closed-form dimension");
  add_params(dim, cfg, true);
  dim->add_flag("--check-z", cfg.check_z, "also count the index set Z");
  dim->add_flag("--json", cfg.json, "print JSON");

  auto* zset = app.add_subcommand("zset", "list the index set Z as JSON");
  add_params(zset, cfg, true);

  auto* build = app.add_subcommand("construct", "build a lift table and verify it");
  add_params(build, cfg, false);
  build->add_option("--in", cfg.in_path, "coefficient assignment JSON");
  build->add_option("--out", cfg.out_path, "where to write the lift table JSON");
  build->add_option("--seed", cfg.seed, "seed for a random assignment");
  build->add_option("--witnesses", cfg.witnesses, "failure witnesses to keep");
  build->add_flag("--all-slots", cfg.all_slots, "check the Leibniz rule in every slot");

  auto* verify = app.add_subcommand("verify", "verify a lift table JSON");
  verify->add_option("--in", cfg.in_path, "lift table JSON");
  verify->add_option("--out", cfg.out_path, "where to write the report JSON");
  verify->add_option("--witnesses", cfg.witnesses, "failure witnesses to keep");
  verify->add_flag("--all-slots", cfg.all_slots, "check the Leibniz rule in every slot");

  auto* oracle = app.add_subcommand("oracle", "brute-force nullspace cross-check");
  add_params(oracle, cfg, true);
  oracle->add_option("--max-unknowns", cfg.max_unknowns, "size guard");
  oracle->add_flag("--compare", cfg.compare, "compare against the construction");
  oracle->add_option("--witnesses", cfg.witnesses, "failure witnesses to keep");
  oracle->add_option("--dump", cfg.dump_path, "write the constraint matrix");

  std::vector<std::string> argv_store{"jetlift"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (dim->parsed()) return cmd_dim(cfg, out);
    if (zset->parsed()) return cmd_zset(cfg, out);
    if (build->parsed()) {
      const bool have_params = build->count("-r") && build->count("-k") && build->count("-s");
      return cmd_construct(cfg, have_params, out, err);
    }
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace jetlift::cli
