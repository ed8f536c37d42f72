// Copyright 2026 The Shellgen Authors.
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
#include <set>
#include <sstream>

#include "shellgen/dataset.hpp"
#include "shellgen/hash.hpp"

using namespace shellgen;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() / (std::string("shellgen_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  [[nodiscard]] const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

RunConfig small_config(const fs::path& out) {
  RunConfig c;
  c.num_shells = 3;
  c.num_scenes = 2;
  c.instances_per_scene = 3;
  c.samples_per_half = 16;
  c.image_width = c.image_height = 64;
  c.focal_length_px = 64;
  c.out_dir = out;
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ConfigError config_error(std::string_view text) {
  try {
    (void)parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "no ConfigError for: " << text;
  return ConfigError("", "");
}

}  // namespace

TEST(DeriveSeed, Basics) {
  EXPECT_EQ(derive_seed(0, "shell", 0), derive_seed(0, "shell", 0));
  EXPECT_NE(derive_seed(0, "shell", 0), derive_seed(0, "shell", 1));
  EXPECT_NE(derive_seed(0, "shell", 0), derive_seed(0, "scene", 0));
  EXPECT_NE(derive_seed(0, "shell", 0), derive_seed(1, "shell", 0));
}

TEST(Config, EmptyIsDefaults) {
  const RunConfig c = parse_config("");
  EXPECT_EQ(c.shell.mu1, 150.0);
  EXPECT_EQ(c.shell.sigma2, 15.0);
  EXPECT_EQ(c.shell.alpha_min, 15);
  EXPECT_EQ(c.shell.alpha_max, 20);
  EXPECT_EQ(c.scene.scale_percent.lo, 25.0);
  EXPECT_EQ(c.scene.scale_percent.hi, 30.0);
  EXPECT_EQ(c.num_shells, 100);
  EXPECT_EQ(c.num_scenes, 10);
  EXPECT_EQ(format_config(c), format_config(RunConfig{}));
}

TEST(Config, ParsesValuesAndComments) {
  const RunConfig c = parse_config(
      "# header comment\n"
      "  mu1 = 75.5   # trailing comment\n"
      "\n"
      "alpha_min=10\r\n"
      "alpha_max = 12\n"
      "out_dir = some/place\n"
      "master_seed = 18446744073709551615\n");
  EXPECT_EQ(c.shell.mu1, 75.5);
  EXPECT_EQ(c.shell.alpha_min, 10);
  EXPECT_EQ(c.shell.alpha_max, 12);
  EXPECT_EQ(c.out_dir, fs::path("some/place"));
  EXPECT_EQ(c.master_seed, 18446744073709551615ULL);
}

TEST(Config, FormatRoundTrips) {
  RunConfig c;
  c.shell.sigma1 = 1.0 / 3.0;
  c.scene.yaw = {0.1, 0.2};
  c.light_direction = {0.0, 0.6, 0.8};
  c.master_seed = 12345678901234ULL;
  const RunConfig back = parse_config(format_config(c));
  EXPECT_EQ(format_config(back), format_config(c));
  EXPECT_EQ(back.shell.sigma1, c.shell.sigma1);
  EXPECT_EQ(params_hash(back), params_hash(c));
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_EQ(config_error("bogus = 1").field(), "bogus");
  EXPECT_EQ(config_error("mu1 = abc").field(), "mu1");
  EXPECT_EQ(config_error("mu1 = 1\nmu1 = 2").field(), "mu1");
  EXPECT_EQ(config_error("num_shells = 0").field(), "num_shells");
  EXPECT_EQ(config_error("r = 1.5").field(), "r");
  EXPECT_EQ(config_error("alpha_min = 5\nalpha_max = 4").field(), "alpha_max");
  EXPECT_EQ(config_error("scale_min = 40\nscale_max = 30").field(), "scale_min");
  EXPECT_EQ(config_error("workers = 0").field(), "workers");
  EXPECT_EQ(config_error("instances_per_scene = 0").field(), "instances_per_scene");
  EXPECT_EQ(config_error("extent_y_min = 60").field(), "extent_y_min");
  EXPECT_EQ(config_error("mu1 = inf").field(), "mu1");
  EXPECT_EQ(config_error("just words").field(), "line 1");
}

TEST(Config, LoadMissingFileIsIoError) {
  EXPECT_THROW((void)load_config("/nonexistent/shellgen.cfg"), IoError);
}

TEST(ParamsHash, IgnoresWorkersAndOutDir) {
  RunConfig a, b;
  b.workers = 8;
  b.out_dir = "elsewhere";
  EXPECT_EQ(params_hash(a), params_hash(b));
  b.shell.mu2 = 151;
  EXPECT_NE(params_hash(a), params_hash(b));
}

TEST(Manifest, WriteReadRoundTrip) {
  const std::vector<ManifestRecord> records{
      {ArtifactKind::shell, "shells/shell_00000.obj", 1, 0xabcdefULL, 0x0123456789abcdefULL},
      {ArtifactKind::mask, "scenes/scene_00000_mask.pgm", 18446744073709551615ULL, 2, 3}};
  std::stringstream io;
  write_manifest(records, io);
  const std::string text = io.str();
  EXPECT_EQ(text.rfind("# ", 0), 0u);
  EXPECT_NE(text.find("shell\tshells/shell_00000.obj\t1\t0000000000abcdef\t0123456789abcdef\n"), std::string::npos);
  EXPECT_EQ(read_manifest(io), records);
  std::istringstream bad("# a\n# b\nshell\tx\t1\t2\n");
  EXPECT_THROW((void)read_manifest(bad), std::runtime_error);
}

TEST(RunGenerate, SingleShellSingleScene) {
  TempDir tmp;
  RunConfig c = small_config(tmp.path());
  c.num_shells = 1;
  c.num_scenes = 1;
  const GenerateResult r = run_generate(c);
  std::multiset<ArtifactKind> kinds;
  for (const auto& rec : r.manifest) kinds.insert(rec.kind);
  EXPECT_EQ(kinds.count(ArtifactKind::shell), 1u);
  EXPECT_EQ(kinds.count(ArtifactKind::mask), 1u);
  EXPECT_EQ(kinds.count(ArtifactKind::preview), 1u);
  EXPECT_EQ(kinds.count(ArtifactKind::scene), 1u);
  EXPECT_TRUE(fs::exists(tmp.path() / "shells/shell_00000.obj"));
  EXPECT_TRUE(fs::exists(tmp.path() / "scenes/scene_00000_mask.pgm"));
}

TEST(RunGenerate, ManifestComplete) {
  TempDir tmp;
  const RunConfig c = small_config(tmp.path());
  const GenerateResult r = run_generate(c);
  ASSERT_EQ(r.manifest.size(), 3u + 3u * 2u);
  std::ifstream in(tmp.path() / kManifestFile);
  const auto records = read_manifest(in);
  EXPECT_EQ(records, r.manifest);
  std::set<std::string> paths;
  for (const auto& rec : records) {
    EXPECT_TRUE(paths.insert(rec.path).second) << rec.path;
    EXPECT_EQ(rec.content_hash, fnv1a64(slurp(tmp.path() / rec.path)));
    EXPECT_EQ(rec.params_hash, params_hash(c));
  }
  std::size_t on_disk = 0;
  for (const auto& e : fs::recursive_directory_iterator(tmp.path())) on_disk += e.is_regular_file();
  EXPECT_EQ(on_disk, records.size() + 1);
  // Sorted by kind, then index.
  for (std::size_t i = 1; i < records.size(); ++i) {
    EXPECT_LE(static_cast<int>(records[i - 1].kind), static_cast<int>(records[i].kind));
    if (records[i - 1].kind == records[i].kind) EXPECT_LT(records[i - 1].path, records[i].path);
  }
  EXPECT_TRUE(verify_manifest(tmp.path()).empty());
}

TEST(RunGenerate, SeedsAreDerived) {
  TempDir tmp;
  RunConfig c = small_config(tmp.path());
  c.master_seed = 77;
  const GenerateResult r = run_generate(c);
  EXPECT_EQ(r.manifest[0].seed, derive_seed(77, "shell", 0));
  EXPECT_EQ(r.manifest[2].seed, derive_seed(77, "shell", 2));
  EXPECT_EQ(r.manifest[3].seed, derive_seed(77, "scene", 0));
}

TEST(RunGenerate, WorkerCountInvariant) {
  TempDir a, b;
  RunConfig c = small_config(a.path());
  c.workers = 1;
  const GenerateResult one = run_generate(c);
  c.out_dir = b.path();
  c.workers = 8;
  const GenerateResult eight = run_generate(c);
  EXPECT_EQ(one.manifest, eight.manifest);
  EXPECT_EQ(one.stats, eight.stats);
  EXPECT_EQ(slurp(a.path() / kManifestFile), slurp(b.path() / kManifestFile));
}

TEST(RunGenerate, SeedChangesOutput) {
  TempDir a, b;
  RunConfig c = small_config(a.path());
  const auto first = run_generate(c).manifest;
  c.out_dir = b.path();
  c.master_seed = 1;
  const auto second = run_generate(c).manifest;
  EXPECT_NE(first[0].content_hash, second[0].content_hash);
}

TEST(RunGenerate, UnwritableOutputIsIoError) {
  TempDir tmp;
  std::ofstream(tmp.path() / "blocker") << "x";
  EXPECT_THROW((void)run_generate(small_config(tmp.path() / "blocker" / "out")), IoError);
}

TEST(VerifyManifest, DetectsTampering) {
  TempDir tmp;
  (void)run_generate(small_config(tmp.path()));
  {
    std::ofstream f(tmp.path() / "scenes/scene_00001_preview.pgm", std::ios::app | std::ios::binary);
    f << 'x';
  }
  fs::remove(tmp.path() / "shells/shell_00002.obj");
  const auto problems = verify_manifest(tmp.path());
  EXPECT_EQ(problems.size(), 2u);
}

TEST(Sweep, ParseValues) {
  const auto v = parse_sweep_values("50, 100,1e2,-3");
  ASSERT_EQ(v.size(), 4u);
  EXPECT_FALSE(v[0].is_range);
  EXPECT_EQ(v[2].lo, 100.0);
  EXPECT_EQ(v[3].lo, -3.0);
  const auto r = parse_sweep_values("10-15,30-35");
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(r[0].is_range);
  EXPECT_EQ(r[1].lo, 30.0);
  EXPECT_EQ(r[1].hi, 35.0);
  EXPECT_EQ(r[0].label(), "10-15");
  EXPECT_THROW((void)parse_sweep_values("1,,2"), ConfigError);
  EXPECT_THROW((void)parse_sweep_values("20-10"), ConfigError);
  EXPECT_THROW((void)parse_sweep_values("x"), ConfigError);
}

TEST(Sweep, ApplyValue) {
  const RunConfig base;
  EXPECT_EQ(apply_sweep_value(base, "sigma1", {50, 50, false}).shell.sigma1, 50.0);
  const RunConfig alpha = apply_sweep_value(base, "alpha", {10, 15, true});
  EXPECT_EQ(alpha.shell.alpha_min, 10);
  EXPECT_EQ(alpha.shell.alpha_max, 15);
  EXPECT_EQ(apply_sweep_value(base, "scale", {10, 15, true}).scene.scale_percent.hi, 15.0);
  EXPECT_THROW((void)apply_sweep_value(base, "gamma", {1, 1, false}), ConfigError);
  EXPECT_THROW((void)apply_sweep_value(base, "mu1", {1, 2, true}), ConfigError);
  EXPECT_THROW((void)apply_sweep_value(base, "alpha", {10.5, 12, true}), ConfigError);
  try {
    (void)apply_sweep_value(base, "gamma", {1, 1, false});
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "gamma");
  }
}

TEST(Ablation, SingleDefaultValueMatchesGenerate) {
  TempDir tmp;
  const RunConfig c = small_config(tmp.path());
  const GenerateResult g = run_generate(c);
  const AblationReport r = run_ablation(c, {"sigma1", {{150, 150, false}}});
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].stats, g.stats);
}

TEST(Ablation, ReportTable) {
  const RunConfig c = small_config("unused");
  const AblationReport r = run_ablation(c, {"scale", parse_sweep_values("10-15,30-35")});
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_LT(r.rows[0].stats.mean_foreground_fraction, r.rows[1].stats.mean_foreground_fraction);
  EXPECT_EQ(r.rows[0].stats.mean_ring_roughness, r.rows[1].stats.mean_ring_roughness);
  std::ostringstream out;
  write_ablation_report(r, out);
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::string> first_cells;
  int lines = 0;
  while (std::getline(in, line)) {
    std::size_t tabs = 0;
    for (char ch : line) tabs += ch == '\t';
    if (lines >= 1) EXPECT_EQ(tabs, 2u) << line;
    first_cells.push_back(line.substr(0, line.find('\t')));
    ++lines;
  }
  EXPECT_EQ(lines, 6);
  EXPECT_EQ(first_cells[1], "value");
  EXPECT_EQ(first_cells[2], "mean_ring_roughness");
}

TEST(ParallelFor, CoversEveryIndexAndRethrows) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 7, [&](std::size_t i) { hits[i]++; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(50, 4, [](std::size_t i) { if (i == 17) throw std::runtime_error("x"); }),
               std::runtime_error);
}
