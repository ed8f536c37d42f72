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

#include "shellgen/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <system_error>
#include <thread>

#include "shellgen/hash.hpp"
#include "shellgen/metrics.hpp"

namespace shellgen {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Configuration

Camera RunConfig::camera() const {
  return top_down_camera(scene.extent, scene.ground_z, image_width, image_height, focal_length_px);
}

void RunConfig::validate() const {
  try {
    shell.validate();
    SceneParams s = scene;
    s.instance_count = instances_per_scene;
    s.validate();
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    const auto colon = what.find(':');
    if (colon == std::string::npos) throw ConfigError("config", what);
    // Scene fields that map onto a pair of configuration keys.
    static const std::map<std::string, std::string, std::less<>> kKeyOf{
        {"instance_count", "instances_per_scene"}, {"scale_percent", "scale_min"},
        {"yaw", "yaw_min"}, {"pitch", "pitch_min"}, {"roll", "roll_min"}, {"extent_x", "extent_x_min"}, {"extent_y", "extent_y_min"}};
    std::string field = what.substr(0, colon);
    if (const auto it = kKeyOf.find(field); it != kKeyOf.end()) field = it->second;
    throw ConfigError(std::move(field), what.substr(colon + 2));
  }
  if (samples_per_half < 8) throw ConfigError("samples_per_half", "must be >= 8");
  if (image_width < 1) throw ConfigError("image_width", "must be >= 1");
  if (image_height < 1) throw ConfigError("image_height", "must be >= 1");
  if (!(focal_length_px > 0.0)) throw ConfigError("focal_length_px", "must be > 0");
  if (!(light_direction.norm() > 0.0)) throw ConfigError("light", "must be non-zero");
  if (num_shells < 1) throw ConfigError("num_shells", "must be >= 1");
  if (num_scenes < 1) throw ConfigError("num_scenes", "must be >= 1");
  if (instances_per_scene < 1) throw ConfigError("instances_per_scene", "must be >= 1");
  if (instances_per_scene > 65535) throw ConfigError("instances_per_scene", "must be <= 65535");
  if (workers < 1) throw ConfigError("workers", "must be >= 1");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ConfigError(std::string(key), "cannot parse '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view key, std::string_view text) { return parse_number<int>(key, text); }
double parse_real(std::string_view key, std::string_view text) {
  const double v = parse_number<double>(key, text);
  if (!std::isfinite(v)) throw ConfigError(std::string(key), "must be finite");
  return v;
}

// Shortest text that parses back to the same double.
std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

// Keys in the order format_config writes them.
struct Field {
  std::string_view key;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> t;
    auto add_real = [&t](std::string_view key, auto access) {
      t.push_back({key,
                   [key, access](RunConfig& c, std::string_view v) { access(c) = parse_real(key, v); },
                   [access](const RunConfig& c) { return shortest(access(c)); }});
    };
    auto add_int = [&t](std::string_view key, auto access) {
      t.push_back({key,
                   [key, access](RunConfig& c, std::string_view v) { access(c) = parse_int(key, v); },
                   [access](const RunConfig& c) {
                     return std::to_string(access(c));
                   }});
    };
    add_real("mu1", [](auto& c) -> auto& { return c.shell.mu1; });
    add_real("mu2", [](auto& c) -> auto& { return c.shell.mu2; });
    add_real("sigma1", [](auto& c) -> auto& { return c.shell.sigma1; });
    add_real("sigma2", [](auto& c) -> auto& { return c.shell.sigma2; });
    add_int("alpha_min", [](auto& c) -> auto& { return c.shell.alpha_min; });
    add_int("alpha_max", [](auto& c) -> auto& { return c.shell.alpha_max; });
    add_real("r", [](auto& c) -> auto& { return c.shell.r; });
    add_real("d", [](auto& c) -> auto& { return c.shell.d; });
    add_real("noise_scale", [](auto& c) -> auto& { return c.shell.noise_scale; });
    t.push_back({"samples_per_half",
                 [](RunConfig& c, std::string_view v) {
                   const int n = parse_int("samples_per_half", v);
                   if (n < 0) throw ConfigError("samples_per_half", "must be >= 8");
                   c.samples_per_half = static_cast<std::size_t>(n);
                 },
                 [](const RunConfig& c) { return std::to_string(c.samples_per_half); }});
    add_real("scale_min", [](auto& c) -> auto& { return c.scene.scale_percent.lo; });
    add_real("scale_max", [](auto& c) -> auto& { return c.scene.scale_percent.hi; });
    add_real("yaw_min", [](auto& c) -> auto& { return c.scene.yaw.lo; });
    add_real("yaw_max", [](auto& c) -> auto& { return c.scene.yaw.hi; });
    add_real("pitch_min", [](auto& c) -> auto& { return c.scene.pitch.lo; });
    add_real("pitch_max", [](auto& c) -> auto& { return c.scene.pitch.hi; });
    add_real("roll_min", [](auto& c) -> auto& { return c.scene.roll.lo; });
    add_real("roll_max", [](auto& c) -> auto& { return c.scene.roll.hi; });
    add_real("max_overlap_fraction", [](auto& c) -> auto& { return c.scene.max_overlap_fraction; });
    add_real("extent_x_min", [](auto& c) -> auto& { return c.scene.extent.x_min; });
    add_real("extent_x_max", [](auto& c) -> auto& { return c.scene.extent.x_max; });
    add_real("extent_y_min", [](auto& c) -> auto& { return c.scene.extent.y_min; });
    add_real("extent_y_max", [](auto& c) -> auto& { return c.scene.extent.y_max; });
    add_real("ground_z", [](auto& c) -> auto& { return c.scene.ground_z; });
    add_int("image_width", [](auto& c) -> auto& { return c.image_width; });
    add_int("image_height", [](auto& c) -> auto& { return c.image_height; });
    add_real("focal_length_px", [](auto& c) -> auto& { return c.focal_length_px; });
    add_real("light_x", [](auto& c) -> auto& { return c.light_direction.x(); });
    add_real("light_y", [](auto& c) -> auto& { return c.light_direction.y(); });
    add_real("light_z", [](auto& c) -> auto& { return c.light_direction.z(); });
    add_int("num_shells", [](auto& c) -> auto& { return c.num_shells; });
    add_int("num_scenes", [](auto& c) -> auto& { return c.num_scenes; });
    add_int("instances_per_scene", [](auto& c) -> auto& { return c.instances_per_scene; });
    t.push_back({"master_seed",
                 [](RunConfig& c, std::string_view v) {
                   c.master_seed = parse_number<std::uint64_t>("master_seed", v);
                 },
                 [](const RunConfig& c) { return std::to_string(c.master_seed); }});
    add_int("workers", [](auto& c) -> auto& { return c.workers; });
    t.push_back({"out_dir",
                 [](RunConfig& c, std::string_view v) {
                   if (v.empty()) throw ConfigError("out_dir", "must not be empty");
                   c.out_dir = fs::path(std::string(v));
                 },
                 [](const RunConfig& c) { return c.out_dir.generic_string(); }});
    return t;
  }();
  return table;
}

// Keys that do not affect output bytes.
bool is_output_neutral(std::string_view key) { return key == "workers" || key == "out_dir"; }

}  // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::map<std::string, std::size_t, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto& table = fields();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Field& f) { return f.key == key; });
    if (it == table.end()) throw ConfigError(std::string(key), "unknown key");
    if (!seen.emplace(std::string(key), line_no).second) throw ConfigError(std::string(key), "duplicate key");
    it->set(config, value);
  }
  config.validate();
  return config;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_config(const RunConfig& config) {
  std::string out;
  for (const Field& f : fields()) {
    out += std::string(f.key) + " = " + f.get(config) + '\n';
  }
  return out;
}

std::uint64_t params_hash(const RunConfig& config) {
  Fnv1a64 h;
  for (const Field& f : fields()) {
    if (is_output_neutral(f.key)) continue;
    h.update(f.key);
    h.update("=");
    h.update(f.get(config));
    h.update("\n");
  }
  return h.digest();
}

// ---------------------------------------------------------------------------
// Manifest

std::string_view to_string(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::shell: return "shell";
    case ArtifactKind::scene: return "scene";
    case ArtifactKind::mask: return "mask";
    case ArtifactKind::preview: return "preview";
  }
  return "unknown";
}

namespace {

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

ArtifactKind kind_from_string(std::string_view s) {
  for (ArtifactKind k : {ArtifactKind::shell, ArtifactKind::scene, ArtifactKind::mask, ArtifactKind::preview}) {
    if (to_string(k) == s) return k;
  }
  throw std::runtime_error("unknown artifact kind '" + std::string(s) + "'");
}

std::uint64_t hash_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  Fnv1a64 h;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    const auto n = static_cast<std::size_t>(in.gcount());
    h.update(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(buf), n));
  }
  return h.digest();
}

}  // namespace

void write_manifest(const std::vector<ManifestRecord>& records, std::ostream& out) {
  out << "# shellgen manifest v1\n# kind\tpath\tseed\tparams_hash\tcontent_hash\n";
  for (const ManifestRecord& r : records) {
    out << to_string(r.kind) << '\t' << r.path << '\t' << r.seed << '\t' << hex16(r.params_hash) << '\t'
        << hex16(r.content_hash) << '\n';
  }
}

std::vector<ManifestRecord> read_manifest(std::istream& in) {
  std::vector<ManifestRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '\t') {
        cols.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (cols.size() != 5) throw std::runtime_error("manifest line needs 5 tab-separated fields");
    ManifestRecord r;
    r.kind = kind_from_string(cols[0]);
    r.path = cols[1];
    r.seed = std::stoull(cols[2]);
    r.params_hash = std::stoull(cols[3], nullptr, 16);
    r.content_hash = std::stoull(cols[4], nullptr, 16);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<std::string> verify_manifest(const fs::path& out_dir) {
  std::ifstream in(out_dir / kManifestFile, std::ios::binary);
  if (!in) throw IoError("cannot read " + (out_dir / kManifestFile).string());
  std::vector<std::string> problems;
  std::map<std::string, int> seen;
  for (const ManifestRecord& r : read_manifest(in)) {
    if (++seen[r.path] > 1) problems.push_back("duplicate entry " + r.path);
    const fs::path file = out_dir / r.path;
    if (!fs::exists(file)) {
      problems.push_back("missing " + r.path);
      continue;
    }
    if (hash_file(file) != r.content_hash) problems.push_back("hash mismatch " + r.path);
  }
  return problems;
}

// ---------------------------------------------------------------------------
// Batch generation

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(threads, count); ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

Batch generate_batch(const RunConfig& config) {
  config.validate();
  Batch batch;
  const auto n_shells = static_cast<std::size_t>(config.num_shells);
  const auto n_scenes = static_cast<std::size_t>(config.num_scenes);
  batch.shell_seeds.resize(n_shells);
  batch.shells.resize(n_shells);
  batch.shell_roughness.resize(n_shells);
  std::vector<std::size_t> ring_counts(n_shells);
  std::vector<double> roughness_sums(n_shells);
  const BaseOutline outline = canonical_base_outline();

  parallel_for(n_shells, config.workers, [&](std::size_t i) {
    ShellParams params = config.shell;
    params.seed = derive_seed(config.master_seed, "shell", i);
    batch.shell_seeds[i] = params.seed;
    const auto rings = generate_shell(outline, params, config.samples_per_half);
    double sum = 0.0;
    for (const LayerRing& ring : rings) sum += ring_roughness(ring);
    roughness_sums[i] = sum;
    ring_counts[i] = rings.size();
    batch.shell_roughness[i] = sum / static_cast<double>(rings.size());
    batch.shells[i] = stitch_rings(rings);
  });

  std::vector<std::shared_ptr<const ShellMesh>> pool;
  pool.reserve(n_shells);
  for (const ShellMesh& m : batch.shells) pool.push_back(std::make_shared<const ShellMesh>(m));

  SceneParams scene_params = config.scene;
  scene_params.instance_count = config.instances_per_scene;
  const Camera camera = config.camera();
  batch.scene_seeds.resize(n_scenes);
  batch.scenes.resize(n_scenes);
  batch.masks.resize(n_scenes);
  batch.previews.resize(n_scenes);
  parallel_for(n_scenes, config.workers, [&](std::size_t j) {
    const std::uint64_t seed = derive_seed(config.master_seed, "scene", j);
    batch.scene_seeds[j] = seed;
    batch.scenes[j] = compose_scene(pool, scene_params, camera, seed);
    batch.masks[j] = rasterize(batch.scenes[j], camera);
    batch.previews[j] = shade_preview(batch.scenes[j], camera, config.light_direction);
  });

  // Reductions run serially in index order so sums are reproducible.
  double rough = 0.0;
  std::size_t rings = 0;
  double volume = 0.0;
  for (std::size_t i = 0; i < n_shells; ++i) {
    rough += roughness_sums[i];
    rings += ring_counts[i];
    volume += signed_volume(batch.shells[i]);
  }
  double fg = 0.0;
  double visible = 0.0;
  for (const MaskImage& mask : batch.masks) {
    fg += foreground_fraction(mask);
    visible += static_cast<double>(instance_pixel_counts(mask).size());
  }
  batch.stats.mean_ring_roughness = rough / static_cast<double>(rings);
  batch.stats.mean_mesh_volume = volume / static_cast<double>(n_shells);
  batch.stats.mean_foreground_fraction = fg / static_cast<double>(n_scenes);
  batch.stats.mean_visible_instances = visible / static_cast<double>(n_scenes);
  return batch;
}

namespace {

std::string indexed(std::string_view stem, std::size_t i, std::string_view suffix) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%05zu", i);
  return std::string(stem) + buf + std::string(suffix);
}

template <typename Writer>
ManifestRecord emit(const fs::path& root, const std::string& rel, ArtifactKind kind, std::uint64_t seed,
                    std::uint64_t phash, Writer&& writer) {
  std::ostringstream bytes;
  writer(bytes);
  const std::string data = std::move(bytes).str();
  const fs::path file = root / rel;
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot open " + file.string() + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw IoError("failed writing " + file.string());
  return {kind, rel, seed, phash, fnv1a64(data)};
}

}  // namespace

GenerateResult run_generate(const RunConfig& config) {
  config.validate();
  const fs::path root = config.out_dir;
  std::error_code ec;
  fs::create_directories(root / "shells", ec);
  if (!ec) fs::create_directories(root / "scenes", ec);
  if (ec) throw IoError("cannot create output directory " + root.string() + ": " + ec.message());

  const Batch batch = generate_batch(config);
  const std::uint64_t phash = params_hash(config);
  const std::size_t n_shells = batch.shells.size();
  const std::size_t n_scenes = batch.scenes.size();

  std::vector<ManifestRecord> shells(n_shells);
  std::vector<ManifestRecord> poses(n_scenes), masks(n_scenes), previews(n_scenes);
  parallel_for(n_shells, config.workers, [&](std::size_t i) {
    shells[i] = emit(root, indexed("shells/shell_", i, ".obj"), ArtifactKind::shell, batch.shell_seeds[i],
                     phash, [&](std::ostream& o) { export_obj(batch.shells[i], o); });
  });
  parallel_for(n_scenes, config.workers, [&](std::size_t j) {
    const std::uint64_t seed = batch.scene_seeds[j];
    poses[j] = emit(root, indexed("scenes/scene_", j, "_poses.txt"), ArtifactKind::scene, seed, phash,
                    [&](std::ostream& o) { write_poses(batch.scenes[j], o); });
    masks[j] = emit(root, indexed("scenes/scene_", j, "_mask.pgm"), ArtifactKind::mask, seed, phash,
                    [&](std::ostream& o) { write_mask_pgm(batch.masks[j], o); });
    previews[j] = emit(root, indexed("scenes/scene_", j, "_preview.pgm"), ArtifactKind::preview, seed,
                       phash, [&](std::ostream& o) { write_gray_pgm(batch.previews[j], o); });
  });

  GenerateResult result;
  result.stats = batch.stats;
  for (auto* group : {&shells, &poses, &masks, &previews}) {
    result.manifest.insert(result.manifest.end(), group->begin(), group->end());
  }
  std::ostringstream manifest;
  write_manifest(result.manifest, manifest);
  const std::string text = std::move(manifest).str();
  std::ofstream out(root / kManifestFile, std::ios::binary);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("failed writing " + (root / kManifestFile).string());
  return result;
}

// ---------------------------------------------------------------------------
// Ablation

std::string SweepValue::label() const {
  return is_range ? format_g9(lo) + "-" + format_g9(hi) : format_g9(lo);
}

std::vector<SweepValue> parse_sweep_values(std::string_view text) {
  std::vector<SweepValue> values;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (item.empty()) throw ConfigError("values", "empty item in value list");
    SweepValue v;
    // A '-' after the first character separates a range; a leading '-' is a sign.
    const auto dash = item.find('-', 1);
    if (dash != std::string_view::npos && item[dash - 1] != 'e' && item[dash - 1] != 'E') {
      v.is_range = true;
      v.lo = parse_real("values", trim(item.substr(0, dash)));
      v.hi = parse_real("values", trim(item.substr(dash + 1)));
      if (v.lo > v.hi) throw ConfigError("values", "range '" + std::string(item) + "' has lo > hi");
    } else {
      v.lo = v.hi = parse_real("values", item);
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return values;
}

RunConfig apply_sweep_value(const RunConfig& config, std::string_view parameter, const SweepValue& value) {
  RunConfig out = config;
  auto scalar = [&](double& field) {
    if (value.is_range) throw ConfigError(std::string(parameter), "expects a single value, got a range");
    field = value.lo;
  };
  if (parameter == "mu1") {
    scalar(out.shell.mu1);
  } else if (parameter == "mu2") {
    scalar(out.shell.mu2);
  } else if (parameter == "sigma1") {
    scalar(out.shell.sigma1);
  } else if (parameter == "sigma2") {
    scalar(out.shell.sigma2);
  } else if (parameter == "alpha") {
    if (value.lo != std::floor(value.lo) || value.hi != std::floor(value.hi)) {
      throw ConfigError("alpha", "layer counts must be integers");
    }
    out.shell.alpha_min = static_cast<int>(value.lo);
    out.shell.alpha_max = static_cast<int>(value.hi);
  } else if (parameter == "scale") {
    out.scene.scale_percent = {value.lo, value.hi};
  } else {
    throw ConfigError(std::string(parameter),
                      "unknown ablation parameter (expected mu1, mu2, sigma1, sigma2, alpha or scale)");
  }
  out.validate();
  return out;
}

AblationReport run_ablation(const RunConfig& config, const SweepSpec& sweep) {
  if (sweep.values.empty()) throw ConfigError("values", "no values to sweep");
  AblationReport report;
  report.parameter = sweep.parameter;
  std::vector<RunConfig> configs;
  for (const SweepValue& v : sweep.values) configs.push_back(apply_sweep_value(config, sweep.parameter, v));
  for (std::size_t i = 0; i < configs.size(); ++i) {
    report.rows.push_back({sweep.values[i], generate_batch(configs[i]).stats});
  }
  return report;
}

void write_ablation_report(const AblationReport& report, std::ostream& out) {
  auto row = [&](std::string_view name, auto get) {
    out << name;
    for (const AblationRow& r : report.rows) out << '\t' << get(r);
    out << '\n';
  };
  out << "parameter\t" << report.parameter << '\n';
  row("value", [](const AblationRow& r) { return r.value.label(); });
  row("mean_ring_roughness", [](const AblationRow& r) { return format_g9(r.stats.mean_ring_roughness); });
  row("mean_mesh_volume", [](const AblationRow& r) { return format_g9(r.stats.mean_mesh_volume); });
  row("mean_foreground_fraction",
      [](const AblationRow& r) { return format_g9(r.stats.mean_foreground_fraction); });
  row("mean_visible_instances", [](const AblationRow& r) { return format_g9(r.stats.mean_visible_instances); });
}

}  // namespace shellgen
