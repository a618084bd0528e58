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
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <system_error>

#include "../parallel.hpp"
#include "prose/audio_io.hpp"
#include "prose/cli.hpp"
#include "prose/error.hpp"
#include "prose/metrics.hpp"
#include "prose/shrinkage.hpp"

namespace prose::cli {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double parse_number(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ParameterError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

// RFC 4180 quoting for the file column.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

audio::AudioBuffer load(const std::filesystem::path& path,
                        std::uint32_t sample_rate) {
  audio::AudioBuffer buf = audio::read_wav(path);
  if (buf.sample_rate != sample_rate) {
    throw ConfigError(path.string() + ": sample rate " +
                      std::to_string(buf.sample_rate) + " Hz, expected " +
                      std::to_string(sample_rate) + " Hz");
  }
  return buf;
}

}  // namespace

std::string evaluate_csv(const EvaluateOptions& opts) {
  if (opts.snr_list.empty()) throw ParameterError("empty SNR list");
  if (opts.kinds.empty()) throw ParameterError("empty kind list");
  if (opts.seeds == 0) throw ParameterError("seeds must be >= 1");
  opts.config.validate();

  const audio::AudioBuffer clean = load(opts.clean, opts.config.sample_rate);
  const audio::AudioBuffer noise = load(opts.noise, opts.config.sample_rate);

  std::vector<double> snrs = opts.snr_list;
  std::sort(snrs.begin(), snrs.end());
  snrs.erase(std::unique(snrs.begin(), snrs.end()), snrs.end());
  std::vector<ShrinkageKind> kinds = opts.kinds;
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

  // One mixture per (snr, seed), shared by every kind.
  const std::size_t mixes = snrs.size() * opts.seeds;
  const std::vector<audio::Mixture> mixtures =
      detail::parallel_map<audio::Mixture>(mixes, [&](std::size_t m) {
        return audio::mix_at_snr(clean, noise, snrs[m / opts.seeds],
                                 1 + m % opts.seeds);
      });

  const std::size_t jobs = mixes * kinds.size();
  const std::vector<metrics::GainReport> reports =
      detail::parallel_map<metrics::GainReport>(jobs, [&](std::size_t j) {
        const std::size_t m = j / kinds.size();
        pipeline::DenoiserConfig config = opts.config;
        config.kind = kinds[j % kinds.size()];
        const std::vector<double>& noisy = mixtures[m].noisy.samples;
        return metrics::gain_report(clean.samples, noisy,
                                    pipeline::denoise(noisy, config));
      });

  std::string csv =
      "file,kind,alpha,input_snr_db,seeds,mean_input_snr_db,"
      "mean_output_snr_db,mean_snr_gain_db,mean_input_ssnr_db,"
      "mean_output_ssnr_db,mean_ssnr_gain_db\n";
  const std::string file = csv_field(opts.clean.filename().string());
  const double n = static_cast<double>(opts.seeds);
  for (std::size_t s = 0; s < snrs.size(); ++s) {
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      metrics::GainReport sum;
      for (std::size_t seed = 0; seed < opts.seeds; ++seed) {
        const metrics::GainReport& r =
            reports[(s * opts.seeds + seed) * kinds.size() + k];
        sum.input_snr_db += r.input_snr_db;
        sum.output_snr_db += r.output_snr_db;
        sum.snr_gain_db += r.snr_gain_db;
        sum.input_ssnr_db += r.input_ssnr_db;
        sum.output_ssnr_db += r.output_ssnr_db;
        sum.ssnr_gain_db += r.ssnr_gain_db;
      }
      csv += file + ',' + std::string(kind_name(kinds[k])) + ',' +
             fixed(opts.config.alpha, 4) + ',' + fixed(snrs[s], 2) + ',' +
             std::to_string(opts.seeds) + ',' +
             fixed(sum.input_snr_db / n, 4) + ',' +
             fixed(sum.output_snr_db / n, 4) + ',' +
             fixed(sum.snr_gain_db / n, 4) + ',' +
             fixed(sum.input_ssnr_db / n, 4) + ',' +
             fixed(sum.output_ssnr_db / n, 4) + ',' +
             fixed(sum.ssnr_gain_db / n, 4) + '\n';
    }
  }
  return csv;
}

std::size_t DbRange::count() const {
  return static_cast<std::size_t>(
             std::floor((max_db - min_db) / step_db + 1e-9)) + 1;
}

DbRange parse_db_range(std::string_view text) {
  const std::size_t first = text.find(':');
  const std::size_t second =
      first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos ||
      text.find(':', second + 1) != std::string_view::npos) {
    throw ParameterError("expected min:max:step, got '" + std::string(text) +
                         "'");
  }
  DbRange r;
  r.min_db = parse_number(text.substr(0, first));
  r.max_db = parse_number(text.substr(first + 1, second - first - 1));
  r.step_db = parse_number(text.substr(second + 1));
  if (!(r.step_db > 0.0)) throw ParameterError("step must be > 0");
  if (r.max_db < r.min_db) throw ParameterError("max is below min");
  return r;
}

std::string curves_csv(const DbRange& range, double alpha) {
  std::string csv = "xi_db";
  for (ShrinkageKind kind : kAllShrinkageKinds) {
    csv += ',';
    csv += kind_name(kind);
  }
  csv += '\n';
  const std::size_t rows = range.count();
  for (std::size_t i = 0; i < rows; ++i) {
    const double db = range.at(i);
    const double xi = std::pow(10.0, db / 10.0);
    csv += fixed(db, 4);
    for (ShrinkageKind kind : kAllShrinkageKinds) {
      csv += ',' + fixed(shrinkage::gain(kind, {xi, alpha}), 9);
    }
    csv += '\n';
  }
  return csv;
}

}  // namespace prose::cli
