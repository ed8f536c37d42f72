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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "shellgen/camera.hpp"
#include "shellgen/mesh.hpp"
#include "shellgen/raster.hpp"
#include "shellgen/scene.hpp"
#include "shellgen/shell_model.hpp"

namespace shellgen {

/// Invalid configuration; `field()` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Output could not be written or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  ShellParams shell;  // shell.seed is replaced per shell by derive_seed
  std::size_t samples_per_half = 64;
  SceneParams scene;
  int image_width = 256;
  int image_height = 256;
  double focal_length_px = 256.0;
  Eigen::Vector3d light_direction = Eigen::Vector3d(0.3, -0.2, 0.93);
  int num_shells = 100;
  int num_scenes = 10;
  int instances_per_scene = 10;
  std::filesystem::path out_dir = "out";
  std::uint64_t master_seed = 0;
  int workers = 1;

  /// Top-down camera whose view is the placement extent.
  [[nodiscard]] Camera camera() const;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Parses `key = value` lines; '#' starts a comment, blank lines are ignored,
/// every key is optional. Unknown keys and unparsable values raise ConfigError.
[[nodiscard]] RunConfig parse_config(std::string_view text);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);

/// Every configuration key with its current value, one per line, in a fixed
/// order. Round-trips through parse_config.
[[nodiscard]] std::string format_config(const RunConfig& config);

/// Hash of everything that influences output bytes (excludes out_dir and workers).
[[nodiscard]] std::uint64_t params_hash(const RunConfig& config);

enum class ArtifactKind { shell, scene, mask, preview };

[[nodiscard]] std::string_view to_string(ArtifactKind kind);

struct ManifestRecord {
  ArtifactKind kind = ArtifactKind::shell;
  std::string path;  // relative to the output directory, '/' separated
  std::uint64_t seed = 0;
  std::uint64_t params_hash = 0;
  std::uint64_t content_hash = 0;  // FNV-1a 64 of the file bytes

  bool operator==(const ManifestRecord&) const = default;
};

/// Lines: "kind<TAB>path<TAB>seed<TAB>params_hash<TAB>content_hash", seed in
/// decimal, hashes as 16 lowercase hex digits, after a two-line '#' header.
/// Records are sorted by kind (shell, scene, mask, preview) then index.
void write_manifest(const std::vector<ManifestRecord>& records, std::ostream& out);
[[nodiscard]] std::vector<ManifestRecord> read_manifest(std::istream& in);

inline constexpr std::string_view kManifestFile = "manifest.tsv";

/// Aggregate geometry and coverage statistics of one batch.
struct BatchStats {
  double mean_ring_roughness = 0.0;   // over every ring of every shell
  double mean_mesh_volume = 0.0;      // model units cubed
  double mean_foreground_fraction = 0.0;
  double mean_visible_instances = 0.0;  // instances with at least one labelled pixel

  bool operator==(const BatchStats&) const = default;
};

/// In-memory result of generating one batch.
struct Batch {
  std::vector<std::uint64_t> shell_seeds;
  std::vector<ShellMesh> shells;
  std::vector<double> shell_roughness;  // mean ring roughness per shell
  std::vector<std::uint64_t> scene_seeds;
  std::vector<Scene> scenes;
  std::vector<MaskImage> masks;
  std::vector<GrayImage> previews;
  BatchStats stats;
};

/// Generates shells and scenes (no files). Result is independent of config.workers.
[[nodiscard]] Batch generate_batch(const RunConfig& config);

struct GenerateResult {
  std::vector<ManifestRecord> manifest;
  BatchStats stats;
};

/// Writes shells/shell_NNNNN.obj, scenes/scene_NNNNN_{poses.txt,mask.pgm,preview.pgm}
/// and manifest.tsv under config.out_dir. Throws IoError if output cannot be written.
GenerateResult run_generate(const RunConfig& config);

/// Rejects missing files and hash mismatches; returns a list of problems (empty when clean).
[[nodiscard]] std::vector<std::string> verify_manifest(const std::filesystem::path& out_dir);

/// One swept value: either a scalar or a [lo, hi] range.
struct SweepValue {
  double lo = 0.0;
  double hi = 0.0;
  bool is_range = false;

  [[nodiscard]] std::string label() const;
};

struct SweepSpec {
  std::string parameter;  // mu1 | mu2 | sigma1 | sigma2 | alpha | scale
  std::vector<SweepValue> values;
};

/// Parses a comma-separated list such as "50,100,150" or "10-15,15-20".
[[nodiscard]] std::vector<SweepValue> parse_sweep_values(std::string_view text);

/// Copy of `config` with one parameter set to `value`. Throws ConfigError for
/// an unknown parameter or a value of the wrong shape.
[[nodiscard]] RunConfig apply_sweep_value(const RunConfig& config, std::string_view parameter,
                                          const SweepValue& value);

struct AblationRow {
  SweepValue value;
  BatchStats stats;
};

struct AblationReport {
  std::string parameter;
  std::vector<AblationRow> rows;
};

/// Varies one parameter at a time, holding everything else at `config`.
[[nodiscard]] AblationReport run_ablation(const RunConfig& config, const SweepSpec& sweep);

/// Tab-separated table: statistics as rows, swept values as columns.
void write_ablation_report(const AblationReport& report, std::ostream& out);

/// Runs fn(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace shellgen
