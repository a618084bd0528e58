// Copyright 2026 The PROSE Denoiser Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "prose/cli.hpp"
#include "prose/error.hpp"
#include "prose/verification.hpp"

namespace prose::cli {

namespace {

// Raised for bad option values found after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct ConfigFlags {
  pipeline::DenoiserConfig config;
  std::size_t init_frames = config.init_noise_frames;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags,
                      std::string& config_path) {
  auto& c = flags.config;
  cmd->add_option("--sample-rate", c.sample_rate, "Sample rate in Hz")
      ->capture_default_str();
  cmd->add_option("--frame-ms", c.frame_ms, "Frame length in ms")
      ->capture_default_str();
  cmd->add_option("--overlap,--overlap-fraction", c.overlap_fraction,
                  "Overlap between frames, in [0, 1)")
      ->capture_default_str();
  cmd->add_option("--alpha", c.alpha, "Over-subtraction factor")
      ->capture_default_str();
  cmd->add_option("--beta", c.beta, "SNR recursion smoothing")
      ->capture_default_str();
  cmd->add_option("--eta", c.eta, "Noise variance smoothing")
      ->capture_default_str();
  cmd->add_option("--init-frames,--init-noise-frames", flags.init_frames,
                  "Leading frames used to initialise the noise estimate")
      ->capture_default_str();
  cmd->add_option("--vad-threshold", c.vad_threshold, "VAD decision threshold")
      ->capture_default_str();
  cmd->add_option("--vad-hangover", c.vad_hangover,
                  "Frames of H1 kept after speech ends")
      ->capture_default_str();
  cmd->add_option("--config", config_path,
                  "File of key=value lines naming any of these flags; "
                  "flags given on the command line take precedence");
}

// Expands a subcommand's --config file into --key=value arguments placed
// right after the subcommand name. Keys may use '_' for '-'.
std::vector<std::string> splice_config(std::vector<std::string> args) {
  std::size_t at = args.size();
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      at = i;
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      at = i;
      args.erase(args.begin() + i);
      break;
    }
  }
  if (at == args.size() && path.empty()) return args;

  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::FileError& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> flags;
  for (const auto& item : items) {
    if (!item.parents.empty()) {
      throw UsageError("config sections are not supported: " + item.fullname());
    }
    std::string name = item.name;
    std::replace(name.begin(), name.end(), '_', '-');
    std::string value;
    for (const auto& input : item.inputs) {
      value += (value.empty() ? "" : ",") + input;
    }
    flags.push_back("--" + name + "=" + value);
  }
  const auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) {
    return !a.empty() && a[0] != '-';
  });
  const auto insert_at = sub == args.end() ? args.begin() : sub + 1;
  args.insert(insert_at, flags.begin(), flags.end());
  return args;
}

pipeline::DenoiserConfig finish_config(const ConfigFlags& flags) {
  pipeline::DenoiserConfig c = flags.config;
  c.init_noise_frames = flags.init_frames;
  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return c;
}

ShrinkageKind kind_or_throw(const std::string& name) {
  const auto kind = parse_kind(name);
  if (!kind) throw UsageError("unknown kind '" + name + "'");
  return *kind;
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) throw Error("cannot write " + path);
}

int run_verify(const verify::VerifyOptions& opts, std::ostream& out) {
  const std::vector<verify::CheckRow> rows = verify::run_verification(opts);
  out << std::left << std::setw(34) << "name" << std::right << std::setw(16)
      << "lhs" << std::setw(16) << "rhs" << std::setw(14) << "tolerance"
      << "  pass\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(34) << r.name << std::right
        << std::setprecision(8) << std::setw(16) << r.lhs << std::setw(16)
        << r.rhs << std::setprecision(4) << std::setw(14) << r.tolerance
        << "  " << (r.pass ? "yes" : "NO") << '\n';
  }
  const bool ok = verify::all_pass(rows);
  out << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Risk-optimal DCT shrinkage speech denoiser", "prose"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  // denoise
  CLI::App* denoise = app.add_subcommand("denoise", "Denoise a WAV file");
  std::string in_path;
  std::string out_path;
  std::string kind_name_flag = "mse";
  ConfigFlags denoise_flags;
  std::string config_path;
  denoise->add_option("--in", in_path, "Noisy input WAV")->required();
  denoise->add_option("--out", out_path, "Denoised output WAV")->required();
  denoise->add_option("--kind", kind_name_flag, "Distortion measure")
      ->capture_default_str();
  add_config_flags(denoise, denoise_flags, config_path);

  // evaluate
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Mix, denoise and score over SNRs and kinds");
  std::string clean_path;
  std::string noise_path;
  std::vector<double> snr_list;
  std::vector<std::string> kind_list;
  std::string eval_csv;
  std::size_t seeds = 1;
  ConfigFlags eval_flags;
  evaluate->add_option("--clean", clean_path, "Clean WAV")->required();
  evaluate->add_option("--noise", noise_path, "Noise WAV")->required();
  evaluate->add_option("--snr-list", snr_list, "Input SNRs in dB")
      ->required()
      ->delimiter(',');
  evaluate->add_option("--kinds", kind_list, "Measures, or 'all'")
      ->required()
      ->delimiter(',');
  evaluate->add_option("--out-csv", eval_csv, "CSV path (stdout if omitted)");
  evaluate->add_option("--seeds", seeds, "Noise realisations, seeds 1..N")
      ->capture_default_str();
  add_config_flags(evaluate, eval_flags, config_path);

  // curves
  CLI::App* curves = app.add_subcommand("curves", "Tabulate gain curves");
  std::string range_text = "-10:40:0.5";
  double curves_alpha = 1.0;
  std::string curves_csv_path;
  curves->add_option("--xi-db-range", range_text, "min:max:step in dB")
      ->capture_default_str();
  curves->add_option("--alpha", curves_alpha, "Over-subtraction factor")
      ->capture_default_str();
  curves->add_option("--out-csv", curves_csv_path,
                     "CSV path (stdout if omitted)");

  // verify
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the risk-estimation check suite");
  verify::VerifyOptions verify_opts;
  verify_cmd->add_option("--samples", verify_opts.samples, "Monte Carlo draws")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_opts.seed, "Base seed")
      ->capture_default_str();
  verify_cmd->add_option("--grid-step", verify_opts.grid_step,
                         "Oracle grid spacing")
      ->capture_default_str();

  std::vector<std::string> expanded;
  try {
    expanded = splice_config(args);
  } catch (const UsageError& e) {
    err << "prose: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<const char*> argv{"prose"};
  for (const auto& a : expanded) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (denoise->parsed()) {
      pipeline::DenoiserConfig config = finish_config(denoise_flags);
      config.kind = kind_or_throw(kind_name_flag);
      const pipeline::DenoiseSummary summary =
          pipeline::denoise_file(in_path, out_path, config);
      out << summary.to_json() << '\n';
      return kExitOk;
    }
    if (evaluate->parsed()) {
      EvaluateOptions opts;
      opts.clean = clean_path;
      opts.noise = noise_path;
      opts.snr_list = snr_list;
      opts.seeds = seeds;
      opts.config = finish_config(eval_flags);
      if (seeds == 0) throw UsageError("--seeds must be >= 1");
      for (const std::string& k : kind_list) {
        if (k == "all") {
          opts.kinds.assign(kAllShrinkageKinds.begin(),
                            kAllShrinkageKinds.end());
        } else {
          opts.kinds.push_back(kind_or_throw(k));
        }
      }
      write_text(eval_csv, evaluate_csv(opts), out);
      return kExitOk;
    }
    if (curves->parsed()) {
      DbRange range;
      try {
        range = parse_db_range(range_text);
      } catch (const ParameterError& e) {
        throw UsageError(e.what());
      }
      if (!(curves_alpha > 0.0)) throw UsageError("--alpha must be > 0");
      write_text(curves_csv_path, curves_csv(range, curves_alpha), out);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (verify_opts.samples == 0) throw UsageError("--samples must be > 0");
      if (!(verify_opts.grid_step > 0.0 &&
            verify_opts.grid_step <= risk::kMaxGridStep)) {
        throw UsageError("--grid-step must lie in (0, 0.1]");
      }
      return run_verify(verify_opts, out);
    }
  } catch (const UsageError& e) {
    err << "prose: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "prose: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace prose::cli
