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

// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails. Usage: prose_acceptance [work_dir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "prose/audio_io.hpp"
#include "prose/cli.hpp"
#include "prose/dsp.hpp"
#include "prose/random.hpp"
#include "prose/shrinkage.hpp"
#include "prose/verification.hpp"
#include "support/signals.hpp"

namespace {

using prose::ShrinkageKind;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double time_limit_s;  // <= 0: none
  std::function<Verdict()> run;
};

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

Verdict from_rows(const std::vector<prose::verify::CheckRow>& rows) {
  std::size_t failed = 0;
  std::string first;
  for (const auto& r : rows) {
    if (!r.pass) {
      if (failed++ == 0) first = r.name;
    }
  }
  Verdict v{failed == 0, std::to_string(rows.size() - failed) + "/" +
                             std::to_string(rows.size()) + " checks"};
  if (failed) v.detail += ", first failure: " + first;
  return v;
}

Verdict point_values() {
  struct Point {
    ShrinkageKind kind;
    double value;
  };
  const Point points[] = {
      {ShrinkageKind::kIs, 0.874126},     {ShrinkageKind::kWe, 0.851789},
      {ShrinkageKind::kWcosh, 0.675737},  {ShrinkageKind::kIsII, 0.735215},
      {ShrinkageKind::kCosh, 0.980581},   {ShrinkageKind::kLogMse, 1.0},
      {ShrinkageKind::kMse, 0.9}};
  double worst = 0.0;
  for (const auto& p : points) {
    worst = std::max(worst,
                     std::abs(prose::shrinkage::gain(p.kind, {10.0, 1.0}) - p.value));
  }
  double worst_high = 0.0;
  for (ShrinkageKind k : prose::kAllShrinkageKinds) {
    worst_high = std::max(worst_high,
                          std::abs(prose::shrinkage::gain(k, {1e9, 1.0}) - 1.0));
  }
  return {worst <= 1e-6 && worst_high <= 1e-6,
          "max |gain(10) - ref| = " + fmt("%.2e", worst) +
              ", max |gain(1e9) - 1| = " + fmt("%.2e", worst_high)};
}

Verdict dsp_round_trip() {
  using namespace prose::dsp;
  prose::Rng rng(17);
  // DCT against the direct sum.
  double dct_err = 0.0;
  for (std::size_t n = 1; n <= 64; ++n) {
    std::vector<double> x(n);
    for (double& v : x) v = rng.normal();
    const DctFrame f = dct_forward(x);
    for (std::size_t k = 0; k < n; ++k) {
      long double acc = 0.0L;
      for (std::size_t i = 0; i < n; ++i) {
        acc += x[i] * std::cos(std::numbers::pi_v<long double> *
                               (i + 0.5L) * k / n);
      }
      const double ref =
          std::sqrt((k == 0 ? 1.0 : 2.0) / n) * static_cast<double>(acc);
      dct_err = std::max(dct_err, std::abs(f.coeffs[k] - ref));
    }
  }
  // Parseval on a frame of the pipeline size.
  std::vector<double> x(320);
  for (double& v : x) v = rng.normal();
  const DctFrame f = dct_forward(x);
  double ex = 0.0, ec = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    ex += x[i] * x[i];
    ec += f.coeffs[i] * f.coeffs[i];
  }
  const double parseval = std::abs(ec - ex) / ex;
  // Analysis/synthesis identity on the interior.
  std::vector<double> s(24000);
  for (double& v : s) v = rng.normal();
  const FrameGrid grid = make_frame_grid(s.size(), 320, 80);
  const auto window = window_coefficients(320);
  const Dct dct(320);
  const auto frames = analyze(s, grid, window, dct);
  std::vector<std::vector<double>> time(frames.size(), std::vector<double>(320));
  for (std::size_t i = 0; i < frames.size(); ++i) dct.inverse(frames[i].coeffs, time[i]);
  const auto y = overlap_add(time, grid, window);
  double err = 0.0, peak = 0.0;
  for (std::size_t i = 320; i + 320 < s.size(); ++i) {
    err = std::max(err, std::abs(y[i] - s[i]));
    peak = std::max(peak, std::abs(s[i]));
  }
  const double round_trip = err / peak;
  return {dct_err <= 1e-9 && parseval <= 1e-9 && round_trip <= 1e-6,
          "naive DCT err " + fmt("%.1e", dct_err) + ", Parseval rel " +
              fmt("%.1e", parseval) + ", round-trip rel " +
              fmt("%.1e", round_trip)};
}

struct Fixture {
  std::filesystem::path clean;
  std::filesystem::path noise;
};

Fixture write_fixture(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  Fixture f{dir / "voiced_clean.wav", dir / "white_noise.wav"};
  prose::audio::write_wav(f.clean, {prose::testing::voiced_signal(3.0, 8000), 8000});
  prose::audio::write_wav(f.noise, prose::audio::generate_white_noise(40000, 0.25, 2026));
  return f;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

std::vector<std::string> evaluate_args(const Fixture& f, const std::string& csv) {
  return {"evaluate", "--clean", f.clean.string(), "--noise", f.noise.string(),
          "--snr-list", "5,10,15", "--kinds", "all", "--seeds", "3",
          "--out-csv", csv};
}

Verdict end_to_end(const Fixture& f, const std::filesystem::path& dir) {
  const std::string csv_path = (dir / "end_to_end.csv").string();
  std::ostringstream out, err;
  if (prose::cli::run(evaluate_args(f, csv_path), out, err) != 0) {
    return {false, "evaluate failed: " + err.str()};
  }
  std::ifstream in(csv_path);
  std::string line;
  std::getline(in, line);
  std::size_t rows = 0;
  std::size_t bad = 0;
  double worst_snr = 1e9, worst_ssnr = 1e9;
  std::string perceptual;
  while (std::getline(in, line)) {
    const auto cols = split(line, ',');
    const double snr_gain = std::stod(cols[7]);
    const double ssnr_gain = std::stod(cols[10]);
    ++rows;
    worst_snr = std::min(worst_snr, snr_gain);
    worst_ssnr = std::min(worst_ssnr, ssnr_gain);
    if (!(snr_gain > 0.0 && ssnr_gain > 0.0)) ++bad;
    if (cols[1] != "mse" && std::stod(cols[3]) >= 10.0) {
      perceptual += " " + cols[1] + "@" + cols[3].substr(0, 2) + "=" + cols[10];
    }
  }
  std::printf("      perceptual SSNR gains (dB):%s\n", perceptual.c_str());
  return {rows == 21 && bad == 0,
          std::to_string(rows) + " rows, min SNR gain " + fmt("%.2f", worst_snr) +
              " dB, min SSNR gain " + fmt("%.2f", worst_ssnr) + " dB, csv " +
              csv_path};
}

Verdict determinism(const Fixture& f, const std::filesystem::path& dir) {
  std::string bytes[2];
  for (int i = 0; i < 2; ++i) {
    const auto path = dir / ("determinism_" + std::to_string(i) + ".csv");
    std::ostringstream out, err;
    if (prose::cli::run(evaluate_args(f, path.string()), out, err) != 0) {
      return {false, "evaluate failed: " + err.str()};
    }
    std::ifstream in(path, std::ios::binary);
    bytes[i].assign(std::istreambuf_iterator<char>(in), {});
  }
  return {!bytes[0].empty() && bytes[0] == bytes[1],
          std::to_string(bytes[0].size()) + " bytes per run"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir =
      argc > 1 ? std::filesystem::path(argv[1])
               : std::filesystem::temp_directory_path() / "prose_acceptance";
  const prose::verify::VerifyOptions opts;  // 1e6 samples, grid 1e-4, c = 5
  Fixture fixture;

  const std::vector<Criterion> criteria = {
      {"Stein identities (first order and orders 1-4, sigma 0.5/1/2, c=5, 1e6 draws)", 30.0,
       [&] { return from_rows(prose::verify::stein_rows(opts)); }},
      {"KKT oracle equivalence (7 measures x 200 scenes, grid 1e-4)", 60.0,
       [&] { return from_rows(prose::verify::oracle_rows(opts)); }},
      {"Unbiasedness of risk estimates on high-SNR scenes (1e6 draws)", 120.0,
       [&] { return from_rows(prose::verify::unbiasedness_rows(opts)); }},
      {"Shrinkage point values at xi=10 and asymptote at xi=1e9", 0.0, point_values},
      {"High-SNR event Prob{|W|<|X|} = 1 over 1e6 draws", 0.0,
       [&] { return from_rows(prose::verify::event_rows(opts)); }},
      {"DSP round-trip, Parseval and naive DCT oracle", 0.0, dsp_round_trip},
      {"End-to-end SNR and SSNR gains > 0 at 5/10/15 dB for all measures", 60.0,
       [&] {
         fixture = write_fixture(dir);
         return end_to_end(fixture, dir);
       }},
      {"Determinism of evaluate CSV output", 0.0,
       [&] { return determinism(fixture, dir); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && secs > c.time_limit_s) {
      v.pass = false;
      v.detail += ", over time limit " + fmt("%.0f", c.time_limit_s) + " s";
    }
    if (!v.pass) ++failures;
    std::printf("%s  %s [%s; %.2f s]\n", v.pass ? "PASS" : "FAIL",
                c.name.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
