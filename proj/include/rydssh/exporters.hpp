#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ryd {

// Run provenance embedded in every output file. CSVs carry it as leading
// comment lines; JSON outputs carry it under "manifest".
struct Manifest {
  std::string command;
  std::string config_name;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string version;
  std::string rng = "splitmix64";
  std::vector<std::string> outputs;
  double wall_time_s = 0.0;
};

nlohmann::json manifest_json(const Manifest& m);

// Shortest round-trip decimal formatting, deterministic across runs.
std::string fmt_double(double v);

// CSV writer with atomic publish (temp file + rename). Header layout:
//   # command=..., # config=<name>, # config_hash=..., # seed=...,
//   # rng=..., # version=...
// then the column row.
class CsvFile {
 public:
  CsvFile(std::string path, const Manifest& m, const std::vector<std::string>& columns);
  ~CsvFile();
  CsvFile(const CsvFile&) = delete;
  CsvFile& operator=(const CsvFile&) = delete;

  void row(const std::vector<std::string>& cells);
  void row(std::initializer_list<double> cells);
  void close();  // rename into place; safe to call once, implied by destructor

 private:
  std::string path_, tmp_path_;
  std::string buffer_;
  std::size_t n_cols_ = 0;
  bool closed_ = false;
};

void write_json_atomic(const std::string& path, const nlohmann::json& j);
void write_manifest(const std::string& dir, const Manifest& m);
void ensure_dir(const std::string& dir);

}  // namespace ryd
