// shelfpack: solve, verify, generate and draw shelf disk packings.
//
// Exit codes: 0 success, 1 placement rejected, 2 parse error, 3 precondition
// violation (wrong backend, oracle limit, invalid 3-partition, ...).

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "shelfpack/geometry.hpp"
#include "shelfpack/greedy.hpp"
#include "shelfpack/hardness.hpp"
#include "shelfpack/io.hpp"
#include "shelfpack/linear.hpp"
#include "shelfpack/oracle.hpp"
#include "shelfpack/svg.hpp"

namespace sp = shelfpack;

namespace {

constexpr int kRejected = 1;
constexpr int kParseError = 2;
constexpr int kPrecondition = 3;

struct SolveOptions {
  std::string input;
  std::string mode = "auto";
  std::string backend = "float";
  std::size_t max_n = 10;
  unsigned threads = 1;
  bool radii = false;
  std::string out;
};

template <sp::Scalar T>
int solve_with(std::vector<sp::Disk<T>> disks, const SolveOptions& opt) {
  using Traits = sp::ScalarTraits<T>;
  std::string method;
  sp::Placement<T> placement;

  const bool linear = disks.size() == 1 || sp::is_linear_case(disks);
  if (opt.mode == "linear" || (opt.mode == "auto" && linear)) {
    if (!linear) throw sp::PreconditionError("--mode linear: instance is not a linear case");
    placement = sp::solve_linear(disks).placement;
    method = "exact (linear case)";
  } else if (opt.mode == "greedy" || opt.mode == "auto") {
    placement = sp::greedy_solve(disks).placement;
    method = "greedy (4/3-approximation)";
  } else {
    sp::OracleConfig config;
    config.max_n = opt.max_n;
    config.threads = opt.threads;
    placement = sp::exact_solve(disks, config).placement;
    method = "exact (oracle)";
  }

  const auto cert = sp::approximation_certificate(placement, std::span<const sp::Disk<T>>(disks));
  std::vector<std::string> summary = {
      "mode: " + method,
      std::string("backend: ") + Traits::name,
      "disks: " + std::to_string(disks.size()),
      "span: " + Traits::to_display(cert.span),
      "lower_bound: " + Traits::to_display(cert.lower_bound),
      "ratio: " + Traits::to_display(cert.ratio),
  };
  if constexpr (Traits::backend == sp::Backend::exact) {
    summary.back() += " (~" + sp::format_plain(Traits::to_double(cert.ratio)) + ")";
  }

  if (opt.out.empty()) {
    std::cout << sp::io::format_placement(placement, summary);
  } else {
    sp::io::write_file(opt.out, sp::io::format_placement(placement));
    for (const auto& line : summary) std::cout << line << '\n';
  }
  return 0;
}

int run_solve(const SolveOptions& opt) {
  const auto file = sp::io::parse_instance(sp::io::read_file(opt.input));
  if (opt.radii) {
    if (opt.backend == "exact") throw sp::PreconditionError("--radii requires the float backend");
    return solve_with(sp::io::to_disks_from_radii(file), opt);
  }
  if (opt.backend == "exact") {
    if (file.kind == sp::io::FileKind::decimal) {
      throw sp::PreconditionError("--backend exact needs rational or integer literals");
    }
    return solve_with(sp::io::to_disks<sp::Rational>(file), opt);
  }
  return solve_with(sp::io::to_disks<double>(file), opt);
}

template <sp::Scalar T>
int verify_with(const sp::io::PlacementFile& file, const std::optional<std::string>& tolerance) {
  using Traits = sp::ScalarTraits<T>;
  const auto placement = sp::io::to_placement<T>(file);
  const T tol = tolerance ? Traits::from_literal(*tolerance) : Traits::default_tolerance();
  const auto result = sp::verify(placement, tol);
  const auto& r = result.report;
  std::cout << (result.accepted ? "accepted" : "rejected") << '\n';
  if (result.violation) {
    const auto& v = *result.violation;
    std::cout << "violation: " << v.left_disk_id.str() << ' ' << v.right_disk_id.str()
              << " required " << Traits::to_display(v.required) << " actual "
              << Traits::to_display(v.actual) << " deficit " << Traits::to_display(v.deficit)
              << '\n';
  }
  std::cout << "left_wall: " << Traits::to_display(r.left_wall) << " (" << r.left_disk_id.str()
            << ")\n"
            << "right_wall: " << Traits::to_display(r.right_wall) << " ("
            << r.right_disk_id.str() << ")\n"
            << "span: " << Traits::to_display(r.span) << " (" << Traits::name << ")\n";
  return result.accepted ? 0 : kRejected;
}

int run_verify(const std::string& path, const std::optional<std::string>& tolerance) {
  const auto file = sp::io::parse_placement(sp::io::read_file(path));
  if (file.kind == sp::io::FileKind::exact) {
    if (tolerance && sp::parse_double(*tolerance) != 0) {
      throw sp::PreconditionError("exact placements are verified with tolerance 0");
    }
    return verify_with<sp::Rational>(file, std::nullopt);
  }
  return verify_with<double>(file, tolerance);
}

struct GenhardOptions {
  std::string input;
  std::string out;
  std::string sidecar;
  std::string certificate;
  std::string certificate_out;
  std::string integer_radii;
};

int run_genhard(const GenhardOptions& opt) {
  const auto source = sp::io::parse_three_partition(sp::io::read_file(opt.input));
  if (auto v = sp::hardness::validate_3partition(source); !v) {
    throw sp::PreconditionError("invalid 3-partition instance: " + v.message);
  }
  const auto hi = sp::hardness::build_instance(source);
  sp::io::write_file(opt.out, sp::io::format_instance(std::span<const sp::Disk<sp::Rational>>(hi.disks)));
  const std::string sidecar = opt.sidecar.empty() ? opt.out + ".json" : opt.sidecar;
  sp::io::write_file(sidecar, sp::io::format_sidecar(hi));
  std::cout << "disks: " << hi.disks.size() << "\n"
            << "budget: " << hi.budget.str() << "\n"
            << "instance: " << opt.out << "\n"
            << "sidecar: " << sidecar << "\n";

  if (!opt.integer_radii.empty()) {
    sp::io::write_file(opt.integer_radii,
                       sp::io::format_integer_radii(sp::hardness::integer_radii(hi)));
    std::cout << "integer_radii: " << opt.integer_radii << "\n";
  }
  if (!opt.certificate.empty()) {
    const auto groups = sp::io::parse_groups(sp::io::read_file(opt.certificate));
    const auto placement = sp::hardness::build_certificate(hi, groups);
    const auto check = sp::verify(placement, sp::Rational(0));
    if (!check.accepted || check.report.span != hi.budget) {
      throw std::logic_error("certificate construction failed verification");
    }
    const std::string path =
        opt.certificate_out.empty() ? opt.out + ".certificate" : opt.certificate_out;
    sp::io::write_file(path, sp::io::format_placement(placement));
    std::cout << "certificate: " << path << " (span " << check.report.span.str()
              << ", verified exactly)\n";
  }
  return 0;
}

int run_render(const std::string& input, const std::string& out, double scale) {
  if (!(scale > 0)) throw sp::PreconditionError("--scale must be positive");
  const auto file = sp::io::parse_placement(sp::io::read_file(input));
  const std::string svg = file.kind == sp::io::FileKind::exact
                              ? sp::svg::render(sp::io::to_placement<sp::Rational>(file), scale)
                              : sp::svg::render(sp::io::to_placement<double>(file), scale);
  if (out.empty()) {
    std::cout << svg;
  } else {
    sp::io::write_file(out, svg);
  }
  return 0;
}

int run_identities() {
  const auto report = sp::hardness::reduction_identity_suite();
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.expression << " = "
              << sp::format_plain(c.value.convert_to<double>()) << ' '
              << sp::hardness::to_string(c.relation) << ' ' << c.bound.str() << '\n';
  }
  std::cout << report.checks.size() - report.failures().size() << "/" << report.checks.size()
            << " checks passed\n";
  return report.all_passed() ? 0 : kRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shelf disk packing: solvers, verifier, hardness instances, rendering"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Place the disks of an instance file");
  solve_cmd->add_option("instance", solve.input, "Instance file")->required();
  solve_cmd->add_option("--mode", solve.mode, "Solver")
      ->check(CLI::IsMember({"auto", "linear", "greedy", "exact"}));
  solve_cmd->add_option("--backend", solve.backend, "Numeric backend")
      ->check(CLI::IsMember({"exact", "float"}));
  solve_cmd->add_option("--max-n", solve.max_n, "Disk limit for --mode exact");
  solve_cmd->add_option("--threads", solve.threads, "Oracle worker threads");
  solve_cmd->add_flag("--radii", solve.radii, "Size column holds radii (float backend)");
  solve_cmd->add_option("--out", solve.out, "Placement output (default: stdout)");

  std::string verify_input;
  std::optional<std::string> tolerance;
  auto* verify_cmd = app.add_subcommand("verify", "Check a placement for overlaps");
  verify_cmd->add_option("placement", verify_input, "Placement file")->required();
  verify_cmd->add_option("--tolerance", tolerance, "Relative tolerance (float files)");

  GenhardOptions gen;
  auto* gen_cmd = app.add_subcommand("genhard", "Build the disk family for a 3-Partition instance");
  gen_cmd->add_option("partition", gen.input, "File: m B then 3m integers")->required();
  gen_cmd->add_option("--out", gen.out, "Instance output")->required();
  gen_cmd->add_option("--sidecar", gen.sidecar, "Role/budget sidecar (default <out>.json)");
  gen_cmd->add_option("--certificate", gen.certificate, "Groups file: m lines of 3 indices");
  gen_cmd->add_option("--certificate-out", gen.certificate_out,
                      "Certificate placement (default <out>.certificate)");
  gen_cmd->add_option("--integer-radii", gen.integer_radii, "Also write integer radii");

  std::string render_input;
  std::string render_out;
  double scale = 40.0;
  auto* render_cmd = app.add_subcommand("render", "Draw a placement as SVG");
  render_cmd->add_option("placement", render_input, "Placement file")->required();
  render_cmd->add_option("--out", render_out, "SVG output (default: stdout)");
  render_cmd->add_option("--scale", scale, "Pixels per unit length");

  app.add_subcommand("identities", "Run the reduction's exact identity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*verify_cmd) return run_verify(verify_input, tolerance);
    if (*gen_cmd) return run_genhard(gen);
    if (*render_cmd) return run_render(render_input, render_out, scale);
    return run_identities();
  } catch (const sp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const sp::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const sp::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}
