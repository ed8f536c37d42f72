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

// shellgen: batch generation of shell meshes and segmentation masks.
//
//   shellgen generate --config <path> [--seed N] [--workers N] [--out DIR]
//   shellgen ablate   --config <path> --param <name> --values <list> [--report FILE]
//   shellgen validate <file.obj | file.pgm | output-dir>
//
// Exit codes: 0 success, 1 I/O failure, 2 configuration error, 3 validation failed.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "shellgen/dataset.hpp"
#include "shellgen/mesh.hpp"
#include "shellgen/metrics.hpp"
#include "shellgen/raster.hpp"

namespace fs = std::filesystem;
using namespace shellgen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInvalid = 3;

RunConfig config_from(const std::string& path) {
  return path.empty() ? RunConfig{} : load_config(path);
}

int cmd_generate(const std::string& config_path, std::optional<std::uint64_t> seed,
                 std::optional<int> workers, std::optional<std::string> out) {
  RunConfig config = config_from(config_path);
  if (seed) config.master_seed = *seed;
  if (workers) config.workers = *workers;
  if (out) config.out_dir = *out;
  config.validate();
  const GenerateResult result = run_generate(config);
  std::cout << "wrote " << result.manifest.size() << " artifacts to " << config.out_dir.string() << '\n'
            << "mean_ring_roughness " << format_g9(result.stats.mean_ring_roughness) << '\n'
            << "mean_mesh_volume " << format_g9(result.stats.mean_mesh_volume) << '\n'
            << "mean_foreground_fraction " << format_g9(result.stats.mean_foreground_fraction) << '\n'
            << "mean_visible_instances " << format_g9(result.stats.mean_visible_instances) << '\n';
  return kExitOk;
}

int cmd_ablate(const std::string& config_path, const std::string& param, const std::string& values,
               const std::string& report_path) {
  const RunConfig config = config_from(config_path);
  const AblationReport report = run_ablation(config, {param, parse_sweep_values(values)});
  write_ablation_report(report, std::cout);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw IoError("cannot open " + report_path + " for writing");
    write_ablation_report(report, out);
    if (!out.flush()) throw IoError("failed writing " + report_path);
  }
  return kExitOk;
}

int cmd_validate(const fs::path& path) {
  if (fs::is_directory(path)) {
    const auto problems = verify_manifest(path);
    for (const auto& p : problems) std::cout << p << '\n';
    std::cout << (problems.empty() ? "manifest ok\n" : "manifest invalid\n");
    return problems.empty() ? kExitOk : kExitInvalid;
  }
  const std::string ext = path.extension().string();
  if (ext == ".obj") {
    const MeshReport report = validate_mesh(read_obj(path));
    std::cout << report.describe() << '\n' << (report.valid() ? "mesh ok\n" : "mesh invalid\n");
    return report.valid() ? kExitOk : kExitInvalid;
  }
  if (ext == ".pgm") {
    const PgmImage pgm = read_pgm(path);
    std::cout << "PGM " << pgm.width << 'x' << pgm.height << " maxval " << pgm.maxval << '\n';
    if (pgm.maxval == 65535) {
      const MaskImage mask = mask_from_pgm(pgm);
      const auto counts = instance_pixel_counts(mask);
      std::cout << "instances " << counts.size() << " foreground_fraction "
                << format_g9(foreground_fraction(mask)) << '\n';
    }
    std::cout << "pgm ok\n";
    return kExitOk;
  }
  std::cerr << "validate: unsupported file type '" << ext << "'\n";
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Procedural shell meshes and segmentation-mask datasets"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> out_dir;
  auto* generate = app.add_subcommand("generate", "Generate shells, scenes, masks and a manifest");
  generate->add_option("--config", config_path, "key = value configuration file");
  generate->add_option("--seed", seed, "Master seed (overrides the config)");
  generate->add_option("--workers", workers, "Worker threads (overrides the config)");
  generate->add_option("--out", out_dir, "Output directory (overrides the config)");

  std::string param;
  std::string values;
  std::string report_path;
  auto* ablate = app.add_subcommand("ablate", "Sweep one parameter and report batch statistics");
  ablate->add_option("--config", config_path, "key = value configuration file");
  ablate->add_option("--param", param, "mu1 | mu2 | sigma1 | sigma2 | alpha | scale")->required();
  ablate->add_option("--values", values, "Comma-separated values, ranges as lo-hi")->required();
  ablate->add_option("--report", report_path, "Also write the report table to this file");

  std::string target;
  auto* validate = app.add_subcommand("validate", "Check an OBJ mesh, a PGM image or an output directory");
  validate->add_option("path", target, "File or output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*generate) return cmd_generate(config_path, seed, workers, out_dir);
    if (*ablate) return cmd_ablate(config_path, param, values, report_path);
    if (*validate) return cmd_validate(target);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
