#include "sections/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "sections/errors.hpp"
#include "sections/parallel.hpp"
#include "sections/radius.hpp"
#include "sections/report.hpp"
#include "sections/svg.hpp"
#include "sections/verify.hpp"
#include "sections/zoo.hpp"

namespace sections::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  file << text;
  if (!file) {
    throw IoError("write to '" + path + "' failed");
  }
}

std::string dump_report(const VerificationReport& rep) {
  return to_json(ReportFile{kSchemaVersion, rep, iso8601_now()}).dump(2) + "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw IoError("cannot open '" + path + "'");
  }
  try {
    return json::parse(file);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

unsigned resolve_threads(unsigned requested) {
  return requested == 0 ? default_threads() : requested;
}

struct VerifyArgs {
  std::string out;
  double tol = kDefaultRadiusTol;
  std::size_t count = 200;
  std::size_t atoms = 3;
  int n_max = 20;
  std::uint64_t seed = 7;
  unsigned threads = 0;
};

struct RadiusArgs {
  std::string function = "f0";
  std::string criterion = "re-deriv";
  std::string spec_file;
  std::size_t index = 0;
  std::size_t section = 2;
  std::size_t order = kDefaultSynthesisOrder;
  double tol = kDefaultRadiusTol;
};

struct SampleArgs {
  std::string out;
  std::size_t count = 10;
  std::size_t atoms = 3;
  std::size_t order = kDefaultSynthesisOrder;
  std::uint64_t seed = 7;
};

struct PlotArgs {
  std::string map = "cube-kernel";
  std::vector<double> radii{1.0 / 3.0, 0.5, 0.75, 0.8};
  std::string out = ".";
  std::size_t samples = 2048;
};

struct ScanArgs {
  std::string target;
  std::string out;
  std::size_t count = 500;
  std::size_t atoms = 3;
  std::string sections;
  std::uint64_t seed = 11;
  double tol = kDefaultRadiusTol;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  opt.count = a.count;
  opt.atom_count = a.atoms;
  opt.n_max = a.n_max;
  opt.seed = a.seed;
  opt.tol = a.tol;
  opt.threads = resolve_threads(a.threads);
  const auto rep = full_verification(opt);
  emit(a.out, dump_report(rep), out);
  for (const auto& item : rep.items) {
    if (!item.pass) {
      err << "FAIL " << item.name << ": computed " << item.computed << "\n";
    }
  }
  return rep.passed() ? kOk : kCheckFailed;
}

Criterion parse_criterion(const std::string& name) {
  if (name == "re-deriv") return Criterion::ReDeriv;
  if (name == "convex") return Criterion::Convexity;
  if (name == "starlike") return Criterion::Starlikeness;
  if (name == "local-univalence") return Criterion::LocalUnivalence;
  throw UsageError("unknown criterion '" + name + "'");
}

HerglotzSpec load_spec(const std::string& path, std::size_t index) {
  const json j = read_json_file(path);
  if (j.contains("specs")) {
    const auto& specs = j.at("specs");
    if (index >= specs.size()) {
      throw UsageError("--index " + std::to_string(index) + " out of range");
    }
    return spec_from_json(specs.at(index));
  }
  return spec_from_json(j);
}

int cmd_radius(const RadiusArgs& a, std::ostream& out) {
  if (a.section < 1) {
    throw UsageError("--section must be >= 1");
  }
  TruncatedSeries f;
  if (a.function == "f0") {
    f = f0(a.section);
  } else if (a.function == "koebe") {
    f = koebe(a.section);
  } else if (a.function == "half-plane") {
    f = half_plane(a.section);
  } else if (a.function == "spec-file") {
    if (a.spec_file.empty()) {
      throw UsageError("--function spec-file needs --spec-file");
    }
    f = synthesize_F(load_spec(a.spec_file, a.index), std::max(a.order, a.section));
  } else {
    throw UsageError("unknown function '" + a.function + "'");
  }
  const auto res = criterion_radius(section(f, a.section), parse_criterion(a.criterion), a.tol);
  json j;
  j["radius"] = res.radius;
  j["witness_theta"] = res.witness.argmin_theta;
  j["clamped"] = res.clamped;
  out << j.dump() << "\n";
  return kOk;
}

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  json specs = json::array();
  for (const auto& spec : sample_specs(a.count, a.atoms, a.seed)) {
    json js = to_json(spec);
    json coeffs = json::array();
    for (const auto& c : synthesize_F(spec, a.order).coeffs()) {
      coeffs.push_back({c.real(), c.imag()});
    }
    js["coefficients"] = std::move(coeffs);
    specs.push_back(std::move(js));
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["seed"] = a.seed;
  j["generator_name"] = std::string(kGeneratorName);
  j["order"] = a.order;
  j["specs"] = std::move(specs);
  emit(a.out, j.dump(2) + "\n", out);
  return kOk;
}

int cmd_plot(const PlotArgs& a, std::ostream& out) {
  if (a.map != "cube-kernel") {
    throw UsageError("unknown map '" + a.map + "' (supported: cube-kernel)");
  }
  for (double r : a.radii) {
    if (!(r > 0.0 && r < 1.0)) {
      throw DomainError("plot radius must lie in (0, 1)");
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(a.out, ec);
  if (ec) {
    throw IoError("cannot create '" + a.out + "': " + ec.message());
  }
  json files = json::array();
  for (double r : a.radii) {
    char name[64];
    std::snprintf(name, sizeof name, "cube_kernel_r%.4f.svg", r);
    const auto path = (std::filesystem::path(a.out) / name).string();
    char title[64];
    std::snprintf(title, sizeof title, "H(|z| < %.4g), H(z) = 1/(1-z)^3", r);
    emit(path, render_curve_svg(figure1_curves(r, a.samples), title), out);
    files.push_back(path);
  }
  out << json{{"files", files}}.dump() << "\n";
  return kOk;
}

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  ScanResult res;
  if (a.target == "conjecture2") {
    const auto [lo, hi] = parse_range(a.sections.empty() ? "2..30" : a.sections);
    SuiteOptions opt;
    opt.count = a.count;
    opt.atom_count = a.atoms;
    opt.n_min = lo;
    opt.n_max = hi;
    opt.seed = a.seed;
    opt.tol = a.tol;
    opt.threads = resolve_threads(a.threads);
    res = conjecture2_scan(opt);
  } else if (a.target == "classical") {
    const auto [lo, hi] = parse_range(a.sections.empty() ? "5..40" : a.sections);
    res = classical_radius_scan(lo, hi, a.tol, resolve_threads(a.threads));
    res.report.seed = a.seed;
  } else {
    throw UsageError("unknown target '" + a.target + "'");
  }
  emit(a.out, dump_report(res.report), out);
  if (res.candidates > 0) {
    err << res.candidates << " candidate counterexample(s); witness recorded in the report\n";
    return kCandidate;
  }
  return kOk;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw std::invalid_argument("range must look like a..b");
  }
  std::size_t used_a = 0, used_b = 0;
  const std::string sa = text.substr(0, dots);
  const std::string sb = text.substr(dots + 2);
  const int a = std::stoi(sa, &used_a);
  const int b = std::stoi(sb, &used_b);
  if (used_a != sa.size() || used_b != sb.size() || b < a) {
    throw std::invalid_argument("range must look like a..b with a <= b");
  }
  return {a, b};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radius problems for sections of analytic functions"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Reproduce the proof constants and run the randomized suite");
  verify->add_option("--out", va.out, "Report path (stdout if omitted)");
  verify->add_option("--tol", va.tol, "Bisection tolerance in r")->check(CLI::Range(1e-12, 1e-3));
  verify->add_option("--count", va.count, "Sampled members of F")->check(CLI::PositiveNumber);
  verify->add_option("--atoms", va.atoms, "Atoms per Herglotz spec")->check(CLI::PositiveNumber);
  verify->add_option("--nmax", va.n_max, "Largest section index")->check(CLI::Range(2, 1000));
  verify->add_option("--seed", va.seed, "RNG seed");
  verify->add_option("--threads", va.threads, "Worker threads (0 = all cores)");

  RadiusArgs ra;
  auto* radius = app.add_subcommand("radius", "Radius of a criterion for one section");
  radius->add_option("--function", ra.function, "f0 | koebe | half-plane | spec-file")
      ->check(CLI::IsMember({"f0", "koebe", "half-plane", "spec-file"}));
  radius->add_option("--section", ra.section, "Section index n")->check(CLI::PositiveNumber);
  radius->add_option("--criterion", ra.criterion, "re-deriv | convex | starlike | local-univalence")
      ->check(CLI::IsMember({"re-deriv", "convex", "starlike", "local-univalence"}));
  radius->add_option("--spec-file", ra.spec_file, "Herglotz spec JSON (single spec or sample output)");
  radius->add_option("--index", ra.index, "Spec index inside a sample file");
  radius->add_option("--order", ra.order, "Synthesis order for spec files")->check(CLI::PositiveNumber);
  radius->add_option("--tol", ra.tol, "Bisection tolerance")->check(CLI::Range(1e-12, 1e-3));

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Sample members of F and print their coefficients");
  sample->add_option("--out", sa.out, "Output path (stdout if omitted)");
  sample->add_option("--count", sa.count, "Number of specs")->check(CLI::PositiveNumber);
  sample->add_option("--atoms", sa.atoms, "Atoms per spec")->check(CLI::PositiveNumber);
  sample->add_option("--order", sa.order, "Series order")->check(CLI::PositiveNumber);
  sample->add_option("--seed", sa.seed, "RNG seed");

  PlotArgs pa;
  auto* plot = app.add_subcommand("plot", "SVG boundary curves of H(|z| < r)");
  plot->add_option("--map", pa.map, "Map to draw (cube-kernel)");
  plot->add_option("--r", pa.radii, "Comma-separated radii in (0,1)")->delimiter(',');
  plot->add_option("--out", pa.out, "Output directory");
  plot->add_option("--samples", pa.samples, "Curve samples")->check(CLI::Range(2, 1 << 22));

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "Scan starlikeness radii (conjecture2 | classical)");
  scan->add_option("--target", sc.target, "conjecture2 | classical")
      ->required()
      ->check(CLI::IsMember({"conjecture2", "classical"}));
  scan->add_option("--out", sc.out, "Report path (stdout if omitted)");
  scan->add_option("--count", sc.count, "Sampled members of F")->check(CLI::PositiveNumber);
  scan->add_option("--atoms", sc.atoms, "Atoms per spec")->check(CLI::PositiveNumber);
  scan->add_option("--sections", sc.sections, "Inclusive section range a..b");
  scan->add_option("--seed", sc.seed, "RNG seed");
  scan->add_option("--tol", sc.tol, "Bisection tolerance")->check(CLI::Range(1e-12, 1e-3));
  scan->add_option("--threads", sc.threads, "Worker threads (0 = all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(va, out, err);
    if (radius->parsed()) return cmd_radius(ra, out);
    if (sample->parsed()) return cmd_sample(sa, out);
    if (plot->parsed()) return cmd_plot(pa, out);
    if (scan->parsed()) return cmd_scan(sc, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    // UsageError, ValidationError, DegenerateInputError and bad ranges.
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    // DomainError, InsufficientOrderError.
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace sections::cli
