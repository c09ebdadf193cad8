// liectl: command-line front end.
//
// Exit codes: 0 success, 1 decomposition residual above tolerance,
// 2 parse/schema error, 3 invariant violation.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <CLI11.hpp>

#include "liectl/io.hpp"
#include "liectl/liectl.hpp"

namespace {

using liectl::ComplexMatrix;
using liectl::Error;
using liectl::ErrorKind;
using liectl::io::json;

constexpr int kExitOk = 0;
constexpr int kExitResidual = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

struct Context {
  std::string command;
  std::uint64_t seed = 42;
  std::string output;
  std::string inputs;  // concatenated bytes of every input file, in order
  json tolerances = json::object();

  std::string load(const std::string& path) {
    std::string text = liectl::io::read_file(path);
    inputs += text;
    return text;
  }

  json load_json(const std::string& path) { return liectl::io::parse_json_text(load(path), path); }

  json header() const {
    return json{{"tool", "liectl"},     {"version", liectl::kVersion},        {"command", command},
                {"seed", seed},         {"tolerances", tolerances}, {"input_digest", "sha256:" + sha256_hex(inputs)}};
  }

  void emit(const std::string& text) const {
    if (output.empty() || output == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + output + "'");
    out << text;
  }

  void emit(json doc) const { emit(doc.dump(2) + "\n"); }

  /// Metadata as leading comment lines, then the CSV body.
  void emit_csv(const std::string& body) const {
    const json meta = header();
    std::string head;
    for (const auto& [key, value] : meta.items()) head += "# " + key + ": " + value.dump() + "\n";
    emit(head + body);
  }
};

json matrices_to_json(const std::vector<ComplexMatrix>& ms) {
  json arr = json::array();
  for (const auto& m : ms) arr.push_back(liectl::io::to_json(m));
  return arr;
}

int run_analyze(Context& ctx, const std::string& input) {
  ctx.tolerances = {{"rank", liectl::kDefaultRankTol}, {"generator", liectl::kGeneratorTol}};
  const liectl::ControlSystem sys = liectl::io::parse_system(ctx.load_json(input));
  const auto r = liectl::controllability_report(sys);
  json doc = ctx.header();
  doc["report"] = {{"n", sys.n},
                   {"control_dim", r.control_dim},
                   {"full_dim", r.full_dim},
                   {"ambient_dim", r.ambient_dim},
                   {"driftless_controllable", r.driftless_controllable},
                   {"controllable_with_drift", r.controllable_with_drift},
                   {"drift_needed", r.drift_needed},
                   {"has_drift", r.has_drift},
                   {"distribution", matrices_to_json(r.distribution)},
                   {"drift_anchor", liectl::io::to_json(r.drift_anchor)}};
  ctx.emit(std::move(doc));
  return kExitOk;
}

int run_decompose(Context& ctx, const std::string& input, const std::string& family, double tol) {
  ctx.tolerances = {{"residual", tol}};
  const ComplexMatrix g = liectl::io::parse_matrix(ctx.load_json(input), "matrix");
  json doc = ctx.header();
  doc["family"] = family;
  double residual = 0.0;
  if (family == "su2" || family == "sun") {
    liectl::KAKFactors f;
    if (family == "su2") {
      f = liectl::kak_su2(g);
    } else {
      f = liectl::kak_sun(g, liectl::build_su_n(static_cast<int>(g.rows())));
    }
    residual = f.residual;
    doc["factors"] = {{"k1", liectl::io::to_json(f.k1)},
                      {"a", liectl::io::to_json(f.a)},
                      {"k2", liectl::io::to_json(f.k2)},
                      {"h_log", liectl::io::to_json(f.h_log)}};
    if (!f.angles.empty()) doc["factors"]["angles"] = {{"alpha", f.angles[0]}, {"beta", f.angles[1]}, {"gamma", f.angles[2]}};
  } else {
    if (g.rows() < 3) throw Error(ErrorKind::DimensionMismatch, "so_n1 decomposition needs a matrix of size >= 3");
    const auto f = liectl::verify_kp_decomposition(g, liectl::build_so_n1(static_cast<int>(g.rows() - 1)));
    residual = f.residual;
    doc["factors"] = {{"k", liectl::io::to_json(f.k)}, {"y", liectl::io::to_json(f.y)},
                      {"k_defect", f.k_defect}, {"y_defect", f.y_defect}};
  }
  doc["residual"] = residual;
  doc["pass"] = residual <= tol;
  ctx.emit(std::move(doc));
  return residual <= tol ? kExitOk : kExitResidual;
}

liectl::CartanPair pair_from(const json& spec) {
  const json& fam = liectl::io::field(spec, "family", "geodesic");
  if (!fam.is_string()) throw Error(ErrorKind::Parse, "geodesic.family: expected a string");
  auto size = [&] {
    const json& n = liectl::io::field(spec, "n", "geodesic");
    if (!n.is_number_integer() || n.get<int>() < 2) throw Error(ErrorKind::Parse, "geodesic.n: expected integer >= 2");
    return n.get<int>();
  };
  if (fam == "su2") return liectl::su2_pauli_pair();
  if (fam == "sun") return liectl::build_su_n(size());
  if (fam == "so_n1") return liectl::build_so_n1(size());
  throw Error(ErrorKind::Parse, "geodesic.family: expected su2, sun or so_n1");
}

int run_geodesic(Context& ctx, const std::string& input, double horizon, int steps) {
  ctx.tolerances = {{"spec", liectl::kSpecTol}};
  const json spec_json = ctx.load_json(input);
  liectl::CartanPair pair = pair_from(spec_json);
  const auto n = pair.ambient_n();
  auto it = spec_json.find("x0");
  liectl::GeodesicSpec spec{
      (it == spec_json.end() || it->is_null()) ? liectl::identity(n) : liectl::io::parse_matrix(*it, "geodesic.x0"),
      liectl::io::parse_matrix(liectl::io::field(spec_json, "a_k", "geodesic"), "geodesic.a_k"),
      liectl::io::parse_matrix(liectl::io::field(spec_json, "a_p", "geodesic"), "geodesic.a_p"), std::move(pair)};
  const auto traj = liectl::sample_geodesic(spec, horizon, steps);
  ctx.emit_csv(liectl::io::trajectory_csv(traj));
  return kExitOk;
}

int run_simulate(Context& ctx, const std::string& input, const std::string& law_path, double dt) {
  ctx.tolerances = {{"generator", liectl::kGeneratorTol}, {"dt", dt}};
  const auto sys = liectl::io::parse_system(ctx.load_json(input));
  const auto law = liectl::io::parse_law(ctx.load_json(law_path));
  ctx.emit_csv(liectl::io::trajectory_csv(liectl::simulate(sys, law, dt)));
  return kExitOk;
}

int run_mintime(Context& ctx, const std::string& input, const std::string& target_path, double eps, int budget,
                const liectl::MinTimeOptions& opt) {
  ctx.tolerances = {{"eps", eps}};
  const auto sys = liectl::io::parse_system(ctx.load_json(input));
  const ComplexMatrix target = liectl::io::parse_matrix(ctx.load_json(target_path), "target");
  const auto r = liectl::min_time_estimate(sys, target, eps, budget, ctx.seed, opt);
  json doc = ctx.header();
  doc["budget"] = budget;
  doc["workers"] = opt.workers;
  doc["max_horizon"] = opt.max_horizon;
  doc["result"] = {{"reached", r.reached},
                   {"t_est", r.reached ? json(r.t_est) : json(nullptr)},
                   {"achieved_error", r.achieved_error},
                   {"simulations", r.simulations}};
  ctx.emit(std::move(doc));
  return kExitOk;
}

int run_verify_paper(Context& ctx) {
  const auto report = liectl::verify_paper();
  json entries = json::array();
  for (const auto& e : report.entries) {
    json item{{"section", e.section}, {"formula", e.formula}, {"oracle", e.oracle},   {"literal", e.literal},
              {"deviation", e.deviation}, {"tol", e.tol},     {"verdict", e.verdict}};
    if (!e.note.empty()) item["note"] = e.note;
    entries.push_back(std::move(item));
  }
  json doc = ctx.header();
  doc["deviations"] = report.deviations();
  doc["entries"] = std::move(entries);
  ctx.emit(std::move(doc));
  return kExitOk;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LIECTL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "LIECTL_SEED: expected a non-negative integer");
    }
  }
  return 42;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bilinear control, Cartan decompositions and k+p geodesics on matrix Lie groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", liectl::kVersion);

  Context ctx;
  std::uint64_t seed = 0;
  std::string input, law_path, target_path, family = "su2";
  double tol = 1e-8, dt = 0.01, eps = 1e-3, horizon = 1.0;
  int steps = 100, budget = 20000;
  liectl::MinTimeOptions mt;

  auto common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("--input", input, "input JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--output", ctx.output, "output file (default stdout)");
    sub->add_option("--seed", seed, "random seed (default 42, or LIECTL_SEED)");
  };

  auto* analyze = app.add_subcommand("analyze", "controllability report for a system file");
  common(analyze, true);

  auto* decompose = app.add_subcommand("decompose", "KAK / KP factors of a group element");
  common(decompose, true);
  decompose->add_option("--family", family, "su2 | sun | so_n1")->check(CLI::IsMember({"su2", "sun", "so_n1"}));
  decompose->add_option("--tol", tol, "residual tolerance for exit status");

  auto* geodesic = app.add_subcommand("geodesic", "sample a k+p geodesic to CSV");
  common(geodesic, true);
  geodesic->add_option("--horizon", horizon, "final time")->check(CLI::PositiveNumber);
  geodesic->add_option("--steps", steps, "grid intervals")->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "propagate a system under a piecewise-constant law to CSV");
  common(simulate, true);
  simulate->add_option("--law", law_path, "law JSON file")->required()->check(CLI::ExistingFile);
  simulate->add_option("--dt", dt, "output sampling step")->check(CLI::PositiveNumber);

  auto* mintime = app.add_subcommand("mintime", "heuristic upper bound on the time to reach a target");
  common(mintime, true);
  mintime->add_option("--target", target_path, "target matrix JSON file")->required()->check(CLI::ExistingFile);
  mintime->add_option("--eps", eps, "target accuracy (Frobenius)")->check(CLI::PositiveNumber);
  mintime->add_option("--budget", budget, "maximum propagator evaluations")->check(CLI::PositiveNumber);
  mintime->add_option("--workers", mt.workers, "parallel shooting workers")->check(CLI::PositiveNumber);
  mintime->add_option("--horizon", mt.max_horizon, "largest horizon tried")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-paper", "literal-versus-oracle report for the published formulas");
  common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    ctx.command = sub->get_name();
    ctx.seed = sub->count("--seed") > 0 ? seed : default_seed();
    if (sub == analyze) return run_analyze(ctx, input);
    if (sub == decompose) return run_decompose(ctx, input, family, tol);
    if (sub == geodesic) return run_geodesic(ctx, input, horizon, steps);
    if (sub == simulate) return run_simulate(ctx, input, law_path, dt);
    if (sub == mintime) return run_mintime(ctx, input, target_path, eps, budget, mt);
    return run_verify_paper(ctx);
  } catch (const Error& e) {
    std::cerr << "liectl: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? kExitParse : kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "liectl: " << e.what() << "\n";
    return kExitInvariant;
  }
}
