#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lmm/classical.hpp"
#include "lmm/error.hpp"
#include "lmm/fuzz.hpp"
#include "lmm/image_io.hpp"
#include "lmm/logarithmic.hpp"
#include "lmm/selftest.hpp"
#include "sf_spec.hpp"

namespace lmm::cli {

namespace fs = std::filesystem;
using logarithmic::Impl;

namespace {

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

SfSpec sf_or_usage(const std::string& text) {
  try {
    return parse_sf_spec(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Impl impl_of(const std::string& name) {
  if (name == "direct") return Impl::direct;
  if (name == "iso") return Impl::isomorphism;
  throw UsageError("unknown impl '" + name + "' (direct or iso)");
}

GreyScale scale_or_usage(double M) {
  try {
    return GreyScale{M};
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

using MorphFn = std::function<Image(const Image&)>;

MorphFn select_operator(const std::string& op, const std::string& mode, Impl impl,
                        const StructuringFunction& b) {
  if (mode == "classical") {
    if (op == "erode") return [&b](const Image& f) { return classical::erode(f, b); };
    if (op == "dilate") return [&b](const Image& f) { return classical::dilate(f, b); };
    if (op == "open") return [&b](const Image& f) { return classical::open(f, b); };
    if (op == "close") return [&b](const Image& f) { return classical::close(f, b); };
    if (op == "gradient") return [&b](const Image& f) { return classical::gradient(f, b); };
  } else if (mode == "log") {
    if (op == "erode") return [&b, impl](const Image& f) { return logarithmic::erode(f, b, impl); };
    if (op == "dilate") return [&b, impl](const Image& f) { return logarithmic::dilate(f, b, impl); };
    if (op == "open") return [&b, impl](const Image& f) { return logarithmic::open(f, b, impl); };
    if (op == "close") return [&b, impl](const Image& f) { return logarithmic::close(f, b, impl); };
    if (op == "gradient") {
      return [&b, impl](const Image& f) { return logarithmic::gradient(f, b, impl); };
    }
  } else {
    throw UsageError("unknown mode '" + mode + "' (classical or log)");
  }
  throw UsageError("unknown op '" + op + "'");
}

SfKind kind_of(const std::string& mode) {
  return mode == "classical" ? SfKind::additive : SfKind::logarithmic;
}

void ensure_dir(const fs::path& dir) {
  if (!dir.empty()) fs::create_directories(dir);
}

// Simulated 8-bit acquisition: round half-up and clip to [0, M - 1].
Image quantize(const Image& img) {
  Image out = img;
  const double top = img.scale().M() - 1.0;
  for (double& v : out.pixels()) v = std::clamp(std::floor(v + 0.5), 0.0, top);
  return out;
}

double mean(const Image& img) {
  double s = 0.0;
  for (double v : img.pixels()) s += v;
  return s / static_cast<double>(img.size());
}

template <typename Fn>
double best_ms(int repeat, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int cmd_morph(const MorphOptions& o, std::ostream& out) {
  const GreyScale scale = scale_or_usage(o.M);
  const Impl impl = impl_of(o.impl);
  const StructuringFunction b = make_sf(sf_or_usage(o.sf), kind_of(o.mode), scale);
  const MorphFn op = select_operator(o.op, o.mode, impl, b);

  Image f = io::load_image(o.input, scale);
  if (o.complement) f = complement(f);
  Image result = op(f);
  // Gradients are reported on the complement as is; the other operators are
  // wrapped as (psi(f^c))^c.
  if (o.complement && o.op != "gradient") result = complement(result);

  out << "min=" << fmt9(result.min()) << " max=" << fmt9(result.max()) << '\n';

  if (o.rescale) result = rescale_for_display(result);
  fs::path target = o.output;
  if (target.empty()) {
    ensure_dir(o.out_dir);
    target = o.out_dir / (o.input.stem().string() + "_" + o.op + "_" + o.mode +
                          o.input.extension().string());
  }
  if (!io::encodable_8bit(result)) {
    throw PreconditionError("result leaves the 8-bit range [min=" + fmt9(result.min()) +
                            ", max=" + fmt9(result.max()) + "]; pass --rescale");
  }
  io::save_image(result, target);
  return kExitOk;
}

int cmd_simulate_fig1(const Fig1Options& o, std::ostream& out) {
  const GreyScale scale = scale_or_usage(o.M);
  const Impl impl = impl_of(o.impl);
  if (o.length < 16) throw UsageError("--length must be >= 16");
  ensure_dir(o.out_dir);

  const Image f = synth_two_peaks_signal(o.length, {}, scale);
  const StructuringFunction additive = hemisphere_sf(o.radius, o.amplitude, SfKind::additive, scale);
  const StructuringFunction logarithmic =
      hemisphere_sf(o.radius, o.amplitude, SfKind::logarithmic, scale);

  io::write_signal_csv(f, o.out_dir / "fig1_signal.csv");

  out << std::left << std::setw(10) << "operator" << std::setw(11) << "mode" << std::setw(16)
      << "min" << "max" << '\n';
  for (const std::string op : {"erode", "dilate", "open", "close"}) {
    for (const std::string mode : {"classical", "log"}) {
      const auto& b = mode == "classical" ? additive : logarithmic;
      const Image r = select_operator(op, mode, impl, b)(f);
      io::write_signal_csv(r, o.out_dir / ("fig1_" + op + "_" + mode + ".csv"));
      out << std::setw(10) << op << std::setw(11) << mode << std::setw(16) << fmt9(r.min())
          << fmt9(r.max()) << '\n';
    }
  }
  return kExitOk;
}

ExposureScores run_exposure_study(const ExposureOptions& o) {
  const GreyScale scale = scale_or_usage(o.M);
  const Impl impl = impl_of(o.impl);
  const SfSpec spec = sf_or_usage(o.sf);
  if (!(o.c < scale.M())) throw PreconditionError("darkening constant c must be < M");
  const StructuringFunction additive = make_sf(spec, SfKind::additive, scale);
  const StructuringFunction logarithmic = make_sf(spec, SfKind::logarithmic, scale);

  const Image bright = io::load_image(o.input, scale);
  // Operators run on complements, where 0 is white and darkening is a LIP
  // addition of c. The dark acquisition is simulated there.
  const Image bright_c = complement(bright);
  Image dark_c = exposure_change(bright_c, o.c);
  if (o.quantize) dark_c = quantize(dark_c);

  const Image grad_classical = rescale_for_display(classical::gradient(bright_c, additive));
  const Image grad_log = rescale_for_display(logarithmic::gradient(bright_c, logarithmic, impl));
  const Image dark_classical = rescale_for_display(classical::gradient(dark_c, additive));
  const Image dark_log = rescale_for_display(logarithmic::gradient(dark_c, logarithmic, impl));

  ExposureScores scores;
  scores.classical = pearson_correlation(grad_classical, dark_classical);
  scores.logarithmic = pearson_correlation(grad_log, dark_log);

  ensure_dir(o.out_dir);
  const std::string stem = o.input.stem().string();
  const auto save = [&](const Image& img, const std::string& name) {
    const fs::path p = o.out_dir / (name + ".png");
    io::save_image(img, p);
    scores.files.push_back(p);
  };
  save(grad_classical, stem + "_gradient_classical");
  save(grad_log, stem + "_gradient_log");
  save(dark_classical, stem + "_dark_gradient_classical");
  save(dark_log, stem + "_dark_gradient_log");

  const fs::path report_path = o.out_dir / (stem + "_exposure_report.txt");
  std::ofstream report(report_path, std::ios::binary);
  if (!report) throw FormatError("cannot write '" + report_path.string() + "'");
  report << "input=" << o.input.string() << '\n'
         << "M=" << fmt9(scale.M()) << " c=" << fmt9(o.c) << " sf=" << to_string(spec)
         << " impl=" << o.impl << " quantize=" << (o.quantize ? "8bit" : "none") << '\n'
         << "mean_bright=" << fmt9(mean(bright))
         << " mean_dark=" << fmt9(scale.M() - 1.0 - mean(dark_c)) << '\n'
         << "stability classical=" << fmt9(scores.classical) << '\n'
         << "stability log=" << fmt9(scores.logarithmic) << '\n';
  if (!report) throw FormatError("cannot write '" + report_path.string() + "'");
  scores.files.push_back(report_path);
  return scores;
}

int cmd_exposure_study(const ExposureOptions& o, std::ostream& out) {
  const ExposureScores s = run_exposure_study(o);
  out << "stability classical=" << fmt9(s.classical) << '\n'
      << "stability log=" << fmt9(s.logarithmic) << '\n';
  for (const auto& p : s.files) out << "wrote " << p.string() << '\n';
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed, double effort, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_selftest({seed, effort});
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(40) << r.name
        << " max_error=" << std::setw(14) << fmt9(r.max_error) << " cases=" << r.cases;
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    out << '\n';
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << (ok ? "all properties hold" : "PROPERTY FAILURE") << " (seed=" << seed
      << ", " << std::setprecision(3) << secs << " s)\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  const GreyScale scale = scale_or_usage(o.M);
  if (o.size < 1 || o.repeat < 1) throw UsageError("--size and --repeat must be positive");
  const SfSpec spec = sf_or_usage(o.sf);
  const StructuringFunction additive = make_sf(spec, SfKind::additive, scale);
  const StructuringFunction logarithmic = make_sf(spec, SfKind::logarithmic, scale);
  fuzz::Rng rng(o.seed);
  const Image f = fuzz::integer_image(rng, o.size, o.size, 0, 255, scale);

  Image a = f, b = f;
  const double t_direct = best_ms(o.repeat, [&] { a = logarithmic::dilate(f, logarithmic, Impl::direct); });
  const double t_iso = best_ms(o.repeat, [&] { b = logarithmic::dilate(f, logarithmic, Impl::isomorphism); });
  const double log_diff = max_abs_diff(a, b);
  const double t_ref = best_ms(o.repeat, [&] { a = classical::reference::dilate(f, additive); });
  const double t_opt = best_ms(o.repeat, [&] { b = classical::dilate(f, additive); });
  const bool kernels_equal = a == b;

  out << "image " << o.size << "x" << o.size << ", sf " << to_string(spec) << " ("
      << logarithmic.size() << " offsets), best of " << o.repeat << '\n'
      << std::fixed << std::setprecision(3)
      << "log dilate   direct       " << t_direct << " ms\n"
      << "log dilate   isomorphism  " << t_iso << " ms  (x" << t_direct / t_iso
      << ", max diff " << std::defaultfloat << std::setprecision(3) << log_diff << ")\n"
      << std::fixed << std::setprecision(3)
      << "dilate       reference    " << t_ref << " ms\n"
      << "dilate       optimized    " << t_opt << " ms  (x" << t_ref / t_opt
      << (kernels_equal ? ", bit-identical" : ", MISMATCH") << ")\n";
  return kernels_equal ? kExitOk : kExitFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic and classical grey-level mathematical morphology"};
  app.name(args.empty() ? "lmm" : fs::path(args.front()).filename().string());
  app.require_subcommand(1);

  MorphOptions morph;
  auto* morph_cmd = app.add_subcommand("morph", "Apply one morphological operator to an image");
  morph_cmd->add_option("--op", morph.op, "Operator")
      ->check(CLI::IsMember({"erode", "dilate", "open", "close", "gradient"}))
      ->capture_default_str();
  morph_cmd->add_option("--mode", morph.mode, "classical or log")
      ->check(CLI::IsMember({"classical", "log"}))
      ->capture_default_str();
  morph_cmd->add_option("--impl", morph.impl, "Logarithmic implementation")
      ->check(CLI::IsMember({"direct", "iso"}))
      ->capture_default_str();
  morph_cmd->add_option("--sf", morph.sf, "hemisphere:r=<f>[,a=<f>] or flat:r=<f>")
      ->capture_default_str();
  morph_cmd->add_flag("--complement", morph.complement, "Process the complement M-1-f");
  morph_cmd->add_flag("--rescale", morph.rescale, "Min-max rescale to [0,255] before saving");
  morph_cmd->add_option("--M", morph.M, "Grey scale upper bound")->capture_default_str();
  morph_cmd->add_option("--out-dir", morph.out_dir, "Directory for default output names")
      ->capture_default_str();
  morph_cmd->add_option("input", morph.input, "Input image (.pgm or .png)")->required();
  morph_cmd->add_option("output", morph.output, "Output image (.pgm or .png)");

  Fig1Options fig1;
  auto* fig1_cmd =
      app.add_subcommand("simulate-fig1", "Compare classical and logarithmic operators on a 1-D signal");
  fig1_cmd->add_option("--out-dir", fig1.out_dir)->capture_default_str();
  fig1_cmd->add_option("--M", fig1.M)->capture_default_str();
  fig1_cmd->add_option("--length", fig1.length)->capture_default_str();
  fig1_cmd->add_option("--radius", fig1.radius, "Hemisphere radius (samples)")->capture_default_str();
  fig1_cmd->add_option("--amplitude", fig1.amplitude, "Hemisphere amplitude (grey levels)")
      ->capture_default_str();
  fig1_cmd->add_option("--impl", fig1.impl)->check(CLI::IsMember({"direct", "iso"}))->capture_default_str();

  ExposureOptions exposure;
  auto* exposure_cmd = app.add_subcommand(
      "exposure-study", "Gradient stability of a simulated dark exposure, classical vs logarithmic");
  exposure_cmd->add_option("input", exposure.input, "Bright input image")->required();
  exposure_cmd->add_option("--c", exposure.c, "LIP darkening constant (< M)")->capture_default_str();
  exposure_cmd->add_option("--sf", exposure.sf)->capture_default_str();
  exposure_cmd->add_option("--impl", exposure.impl)
      ->check(CLI::IsMember({"direct", "iso"}))
      ->capture_default_str();
  exposure_cmd->add_option("--M", exposure.M)->capture_default_str();
  exposure_cmd->add_flag("--quantize", exposure.quantize,
                         "Round the simulated dark acquisition to 8 bits");
  exposure_cmd->add_option("--out-dir", exposure.out_dir)->capture_default_str();

  std::uint64_t seed = SelftestOptions{}.seed;
  double effort = 1.0;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suite");
  selftest_cmd->add_option("--seed", seed)->capture_default_str();
  selftest_cmd->add_option("--effort", effort, "Scale factor on fuzz case counts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time direct vs isomorphism and reference vs optimized kernels");
  bench_cmd->add_option("--size", bench.size)->capture_default_str();
  bench_cmd->add_option("--sf", bench.sf)->capture_default_str();
  bench_cmd->add_option("--repeat", bench.repeat)->capture_default_str();
  bench_cmd->add_option("--M", bench.M)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();

  std::vector<char*> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"lmm"} : args;
  for (auto& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*morph_cmd) return cmd_morph(morph, out);
    if (*fig1_cmd) return cmd_simulate_fig1(fig1, out);
    if (*exposure_cmd) return cmd_exposure_study(exposure, out);
    if (*selftest_cmd) return cmd_selftest(seed, effort, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lmm::cli
