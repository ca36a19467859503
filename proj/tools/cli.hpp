#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmm::cli {

/// Bad command-line usage (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< property or precondition failure, I/O error
inline constexpr int kExitUsage = 2;

struct MorphOptions {
  std::string op = "dilate";     ///< erode | dilate | open | close | gradient
  std::string mode = "log";      ///< classical | log
  std::string impl = "iso";      ///< direct | iso
  std::string sf = "hemisphere:r=2";
  bool complement = false;
  bool rescale = false;
  double M = 256.0;
  std::filesystem::path input;
  std::filesystem::path output;  ///< empty: <out_dir>/<stem>_<op>_<mode><ext>
  std::filesystem::path out_dir = ".";
};

struct Fig1Options {
  std::filesystem::path out_dir = ".";
  double M = 256.0;
  int length = 512;
  double radius = 20.0;
  double amplitude = 64.0;
  std::string impl = "iso";
};

struct ExposureOptions {
  std::filesystem::path input;
  double c = 192.0;
  std::string sf = "hemisphere:r=2";
  std::string impl = "iso";
  double M = 256.0;
  bool quantize = false;
  std::filesystem::path out_dir = ".";
};

struct ExposureScores {
  double classical = 0.0;
  double logarithmic = 0.0;
  std::vector<std::filesystem::path> files;  ///< 4 gradient images, then the report
};

struct BenchOptions {
  int size = 256;
  std::string sf = "hemisphere:r=5,a=40";
  int repeat = 3;
  double M = 256.0;
  std::uint64_t seed = 1;
};

int cmd_morph(const MorphOptions& options, std::ostream& out);
int cmd_simulate_fig1(const Fig1Options& options, std::ostream& out);
int cmd_exposure_study(const ExposureOptions& options, std::ostream& out);
int cmd_selftest(std::uint64_t seed, double effort, std::ostream& out);
int cmd_bench(const BenchOptions& options, std::ostream& out);

/// Computes the exposure study and writes its files; cmd_exposure_study
/// prints the result.
ExposureScores run_exposure_study(const ExposureOptions& options);

/// Full command-line entry point: parses argv, dispatches, maps exceptions
/// to exit codes 0 / 1 / 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lmm::cli
