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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "prose/audio_io.hpp"
#include "prose/cli.hpp"
#include "prose/error.hpp"
#include "prose/shrinkage.hpp"
#include "support/signals.hpp"

namespace prose::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliFiles : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = testing::scratch_dir("cli");
    audio::write_wav(dir_ / "clean.wav",
                     {testing::voiced_signal(1.5, 8000), 8000});
    audio::write_wav(dir_ / "noise.wav",
                     audio::generate_white_noise(16000, 0.2, 99));
  }
  static std::string path(const char* name) { return (dir_ / name).string(); }
  static inline std::filesystem::path dir_;
};

TEST(Usage, NoSubcommandOrUnknownFlag) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"curves", "--bogus", "1"}).code, kExitUsage);
}

TEST(Usage, HelpForEverySubcommand) {
  for (const char* cmd : {"denoise", "evaluate", "curves", "verify"}) {
    const Outcome o = invoke({cmd, "--help"});
    EXPECT_EQ(o.code, kExitOk) << cmd;
    EXPECT_NE(o.out.find("--"), std::string::npos) << cmd;
  }
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Usage, DenoiseMissingInput) {
  EXPECT_EQ(invoke({"denoise", "--out", "/tmp/x.wav"}).code, kExitUsage);
}

TEST(Usage, VerifyZeroSamples) {
  EXPECT_EQ(invoke({"verify", "--samples", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--grid-step", "0.5"}).code, kExitUsage);
}

TEST(Curves, GridCardinalityAndColumns) {
  const Outcome o = invoke({"curves", "--xi-db-range=-10:40:0.5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto rows = lines(o.out);
  ASSERT_EQ(rows.size(), 102u);  // header + 101
  EXPECT_EQ(rows[0], "xi_db,mse,we,log_mse,is,is_ii,cosh,wcosh");
  EXPECT_EQ(fields(rows[1])[0], "-10.0000");
  EXPECT_EQ(fields(rows[101])[0], "40.0000");
}

TEST(Curves, TenDbRowMatchesGains) {
  const Outcome o = invoke({"curves", "--xi-db-range", "10:10:1"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto rows = lines(o.out);
  ASSERT_EQ(rows.size(), 2u);
  const auto f = fields(rows[1]);
  const double expected[] = {0.9, 0.851789, 1.0, 0.874126, 0.735215, 0.980581,
                             0.675737};
  for (std::size_t k = 0; k < 7; ++k) {
    EXPECT_NEAR(std::stod(f[k + 1]), expected[k], 1e-6) << k;
  }
}

TEST(Curves, LastRowsApproachOne) {
  const Outcome o = invoke({"curves", "--xi-db-range", "80:90:5"});
  const auto f = fields(lines(o.out).back());
  for (std::size_t k = 1; k < f.size(); ++k) EXPECT_NEAR(std::stod(f[k]), 1.0, 1e-6);
}

TEST(Curves, AlphaShiftsTheCurve) {
  const DbRange r = parse_db_range("0:0:1");
  const auto f = fields(lines(curves_csv(r, 2.0)).back());
  EXPECT_NEAR(std::stod(f[1]), 0.0, 1e-12);  // MSE at xi = 1, alpha = 2
}

TEST(Curves, BadRange) {
  EXPECT_EQ(invoke({"curves", "--xi-db-range", "1:2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"curves", "--xi-db-range", "5:1:1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"curves", "--xi-db-range", "0:1:0"}).code, kExitUsage);
  EXPECT_THROW(parse_db_range("a:b:c"), ParameterError);
  EXPECT_EQ(parse_db_range("-10:40:0.5").count(), 101u);
}

TEST_F(CliFiles, DenoiseWritesOutputAndSummary) {
  const std::string out = path("den.wav");
  const Outcome o = invoke({"denoise", "--in", path("clean.wav"), "--out", out,
                            "--kind", "cosh", "--alpha", "1.5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("\"kind\":\"cosh\""), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(out));
}

TEST_F(CliFiles, DenoiseRuntimeFailures) {
  EXPECT_EQ(invoke({"denoise", "--in", path("missing.wav"), "--out",
                    path("never.wav")}).code,
            kExitFailure);
  EXPECT_FALSE(std::filesystem::exists(path("never.wav")));
  EXPECT_EQ(invoke({"denoise", "--in", path("clean.wav"), "--out",
                    path("x.wav"), "--kind", "wiener"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"denoise", "--in", path("clean.wav"), "--out",
                    path("x.wav"), "--overlap", "1"}).code,
            kExitUsage);
}

TEST_F(CliFiles, ConfigFileSetsFlags) {
  {
    std::ofstream cfg(path("good.cfg"));
    cfg << "alpha=1.25\nframe-ms=20\ninit-frames=5\nvad-hangover=0\n";
  }
  const Outcome ok = invoke({"denoise", "--in", path("clean.wav"), "--out",
                             path("cfg.wav"), "--config", path("good.cfg")});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;

  {
    std::ofstream cfg(path("bad.cfg"));
    cfg << "alpha=1.25\nloudness=11\n";
  }
  const Outcome bad = invoke({"denoise", "--in", path("clean.wav"), "--out",
                              path("cfg2.wav"), "--config", path("bad.cfg")});
  EXPECT_EQ(bad.code, kExitUsage);
}

TEST_F(CliFiles, EvaluateCardinality) {
  const Outcome one = invoke({"evaluate", "--clean", path("clean.wav"), "--noise",
                              path("noise.wav"), "--snr-list", "10", "--kinds",
                              "mse", "--seeds", "1"});
  ASSERT_EQ(one.code, kExitOk) << one.err;
  auto rows = lines(one.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(fields(rows[0]).size(), 11u);
  EXPECT_EQ(fields(rows[1])[0], "clean.wav");
  EXPECT_EQ(fields(rows[1])[1], "mse");

  const Outcome all = invoke({"evaluate", "--clean", path("clean.wav"), "--noise",
                              path("noise.wav"), "--snr-list", "15,5", "--kinds",
                              "all", "--out-csv", path("all.csv")});
  ASSERT_EQ(all.code, kExitOk) << all.err;
  rows = lines(slurp(path("all.csv")));
  ASSERT_EQ(rows.size(), 15u);
  EXPECT_EQ(fields(rows[1])[3], "5.00");
  EXPECT_EQ(fields(rows[14])[3], "15.00");
  EXPECT_EQ(fields(rows[7])[1], "wcosh");
}

TEST_F(CliFiles, EvaluateRejectsBadKindsAndSeeds) {
  EXPECT_EQ(invoke({"evaluate", "--clean", path("clean.wav"), "--noise",
                    path("noise.wav"), "--snr-list", "10", "--kinds", "xyz"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"evaluate", "--clean", path("clean.wav"), "--noise",
                    path("noise.wav"), "--snr-list", "10", "--kinds", "mse",
                    "--seeds", "0"}).code,
            kExitUsage);
}

TEST(Verify, SmallRunPassesAndCoarseGridStillPasses) {
  const Outcome o = invoke({"verify", "--samples", "20000", "--seed", "3"});
  EXPECT_EQ(o.code, kExitOk) << o.out;
  EXPECT_NE(o.out.find("oracle wcosh"), std::string::npos);
  const Outcome coarse =
      invoke({"verify", "--samples", "20000", "--grid-step", "0.1"});
  EXPECT_EQ(coarse.code, kExitOk) << coarse.out;
}

}  // namespace
}  // namespace prose::cli
