#include "spectral/cli.hpp"

#include "spectral/errors.hpp"
#include "spectral/json_io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace spectral::cli {

namespace {

using io::json;

constexpr std::array<const char*, 12> kVerbs{"normalize",      "zeros",     "verify-spectrum", "verify-tiling",
                                             "ap-extend",      "rank",      "discover-period", "density",
                                             "decompose",      "search",    "crosscheck",      "plot-data"};

struct Options {
  std::string domain;
  std::string spectrum;
  std::string points;
  std::vector<std::string> range;
  std::vector<std::string> windows;
  std::string a = "0";
  std::string d;
  std::int64_t d_max = 1;
  std::int64_t denom = 0;
  std::uint64_t budget = 5'000'000;
  double tol = 1e-9;
  std::size_t samples = 1001;
  unsigned workers = 1;
  bool paranoid = false;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

IntervalUnion load_domain(const Options& o) {
  if (o.domain.empty()) throw InputError("--domain is required");
  return io::domain_from_json(read_json(o.domain));
}

PeriodicSet load_spectrum(const Options& o) {
  if (o.spectrum.empty()) throw InputError("--spectrum is required");
  return io::periodic_set_from_json(read_json(o.spectrum));
}

Rational parse_rational_flag(const std::string& s, const char* flag) {
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument&) {
    throw InputError(std::string(flag) + " expects a rational, got '" + s + "'");
  }
}

std::pair<Rational, Rational> rational_range(const Options& o) {
  if (o.range.size() != 2) throw InputError("--range LO HI is required");
  return {parse_rational_flag(o.range[0], "--range"), parse_rational_flag(o.range[1], "--range")};
}

std::pair<double, double> real_range(const Options& o) {
  if (o.range.size() != 2) throw InputError("--range LO HI is required");
  try {
    return {std::stod(o.range[0]), std::stod(o.range[1])};
  } catch (const std::exception&) {
    // accept rational literals too
    return {parse_rational_flag(o.range[0], "--range").to_double(), parse_rational_flag(o.range[1], "--range").to_double()};
  }
}

// Points from --points, or a spectrum sampled over --range.
DiscreteSampleSet load_points(const Options& o) {
  if (!o.points.empty()) return io::sample_set_from_json(read_json(o.points));
  if (!o.spectrum.empty()) {
    auto [lo, hi] = rational_range(o);
    return load_spectrum(o).sample(lo, hi);
  }
  throw InputError("--points or --spectrum with --range is required");
}

std::vector<Rational> window_lengths(const Options& o) {
  if (o.windows.empty()) throw InputError("--window is required");
  std::vector<Rational> out;
  for (const auto& w : o.windows) out.push_back(parse_rational_flag(w, "--window"));
  return out;
}

std::int64_t integer_d(const Options& o) {
  const Rational d = parse_rational_flag(o.d, "--d");
  if (!d.is_integer()) throw InputError("--d must be an integer here");
  return to_int64(d.numerator());
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int dispatch(const std::string& verb, const Options& o, std::ostream& out) {
  if (verb == "normalize") {
    const auto nd = normalize_domain(load_domain(o));
    emit(out, {{"domain", io::to_json(nd.domain)}, {"map", io::to_json(nd.map)}, {"measure", io::to_json(measure(nd.domain))}, {"method", "exact"}});
    return kExitOk;
  }
  if (verb == "zeros") {
    const auto omega = load_domain(o);
    auto [lo, hi] = real_range(o);
    const auto zs = scan_zeros_numeric(from_domain(omega), lo, hi, o.tol);
    emit(out, {{"zeros", zs}, {"range", {lo, hi}}, {"tol", o.tol}, {"method", "numeric"}});
    return kExitOk;
  }
  if (verb == "verify-spectrum") {
    const auto v = verify_spectrum(load_domain(o), load_spectrum(o), o.paranoid);
    emit(out, io::to_json(v));
    return v.is_spectrum ? kExitOk : kExitRefuted;
  }
  if (verb == "verify-tiling") {
    const auto omega = load_domain(o);
    const std::int64_t d = integer_d(o);
    const bool tiles = verify_tiling(omega, d);
    emit(out, {{"d", d}, {"tiles", tiles}, {"multiplicity", io::to_json(fold_multiplicity(omega, Rational(d)))}, {"method", "exact"}});
    return tiles ? kExitOk : kExitRefuted;
  }
  if (verb == "ap-extend") {
    const auto omega = load_domain(o);
    const auto v = extend_ap_in_spectrum(omega, load_points(o), parse_rational_flag(o.a, "--a"), parse_rational_flag(o.d, "--d"));
    emit(out, io::to_json(v));
    return v.full_ap_in_zeroset ? kExitOk : kExitRefuted;
  }
  if (verb == "rank") {
    emit(out, io::to_json(rank_span(load_domain(o), load_points(o))));
    return kExitOk;
  }
  if (verb == "discover-period") {
    const auto omega = load_domain(o);
    const auto pts = load_points(o);
    const auto cands = discover_period(omega, pts, window_lengths(o));
    json arr = json::array();
    for (const auto& c : cands) arr.push_back(io::to_json(c));
    emit(out, {{"candidates", arr}, {"gap_alphabet", io::to_json(gap_alphabet(pts))}, {"method", "exact"}});
    return cands.empty() ? kExitRefuted : kExitOk;
  }
  if (verb == "density") {
    const auto pts = load_points(o);
    std::vector<DensityReport> reps;
    for (const auto& r : window_lengths(o)) reps.push_back(landau_counts(pts, r));
    io::write_density_csv(out, reps);
    return kExitOk;
  }
  if (verb == "decompose") {
    emit(out, io::to_json(decompose(load_domain(o), integer_d(o))));
    return kExitOk;
  }
  if (verb == "search") {
    SearchConfig cfg;
    cfg.d_max = o.d_max;
    cfg.denominator = o.denom;
    cfg.node_budget = o.budget;
    cfg.workers = o.workers;
    cfg.paranoid = o.paranoid;
    const auto res = search_spectra(load_domain(o), cfg);
    emit(out, io::to_json(res));
    if (res.budget_exhausted) return kExitBudget;
    return res.spectra.empty() ? kExitRefuted : kExitOk;
  }
  if (verb == "crosscheck") {
    SearchConfig cfg;
    cfg.denominator = o.denom;
    cfg.node_budget = o.budget;
    cfg.workers = o.workers;
    cfg.paranoid = o.paranoid;
    emit(out, io::to_json(fuglede_crosscheck(load_domain(o), o.d_max, cfg)));
    return kExitOk;
  }
  if (verb == "plot-data") {
    auto [lo, hi] = real_range(o);
    write_plot_csv(out, load_domain(o), lo, hi, o.samples);
    return kExitOk;
  }
  throw std::logic_error("unhandled verb " + verb);
}

unsigned default_workers() {
  if (const char* env = std::getenv("SPECTRAL_WORKBENCH_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || std::find(kVerbs.begin(), kVerbs.end(), args.front()) == kVerbs.end()) {
    err << "usage: spectral-workbench <verb> [options]\nverbs:";
    for (const char* v : kVerbs) err << ' ' << v;
    err << '\n';
    if (!args.empty() && (args.front() == "--help" || args.front() == "-h")) return kExitOk;
    return kExitUsage;
  }
  const std::string verb = args.front();

  Options o;
  o.workers = default_workers();
  CLI::App app{"Exact workbench for spectral interval unions", "spectral-workbench " + verb};
  app.add_option("--domain", o.domain, "domain JSON file");
  app.add_option("--spectrum", o.spectrum, "periodic set JSON file");
  app.add_option("--points", o.points, "point list JSON file");
  app.add_option("--range", o.range, "LO HI")->expected(2)->allow_extra_args(false);
  app.add_option("--window", o.windows, "window length (repeatable)")->take_all();
  app.add_option("--a", o.a, "progression start");
  app.add_option("--d", o.d, "period / progression step");
  app.add_option("--d-max", o.d_max, "largest period searched");
  app.add_option("--denom", o.denom, "offset grid denominator (0: automatic)");
  app.add_option("--budget", o.budget, "search node budget");
  app.add_option("--tol", o.tol, "numeric zero tolerance");
  app.add_option("--samples", o.samples, "plot rows");
  app.add_option("--workers", o.workers, "worker threads");
  app.add_flag("--paranoid", o.paranoid, "check shifts up to |k| <= 50");

  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());  // CLI11 consumes from the back
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << verb << ": " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return dispatch(verb, o, out);
  } catch (const InputError& e) {
    err << verb << ": " << e.what() << '\n';
    return kExitDataError;
  } catch (const io::SchemaError& e) {
    err << verb << ": malformed input: " << e.what() << '\n';
    return kExitDataError;
  } catch (const PreconditionError& e) {
    emit(out, {{"error", e.what()}, {"witness", e.witness()}, {"verb", verb}});
    return kExitRefuted;
  } catch (const std::invalid_argument& e) {
    emit(out, {{"error", e.what()}, {"witness", nullptr}, {"verb", verb}});
    return kExitRefuted;
  }
}

}  // namespace spectral::cli
