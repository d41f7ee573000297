#include "rydssh/exporters.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rydssh/errors.hpp"

namespace fs = std::filesystem;

namespace ryd {

nlohmann::json manifest_json(const Manifest& m) {
  nlohmann::json j;
  j["command"] = m.command;
  j["config"] = m.config_name;
  j["config_hash"] = m.config_hash;
  j["seed"] = m.seed;
  j["version"] = m.version;
  j["rng"] = m.rng;
  if (!m.outputs.empty()) j["outputs"] = m.outputs;
  if (m.wall_time_s > 0) j["wall_time_s"] = m.wall_time_s;
  return j;
}

std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

void publish(const std::string& tmp, const std::string& path, const std::string& contents) {
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open for writing: " + tmp);
    out << contents;
    out.flush();
    if (!out) throw io_error("write failed: " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw io_error("rename " + tmp + " -> " + path + ": " + ec.message());
}

}  // namespace

CsvFile::CsvFile(std::string path, const Manifest& m, const std::vector<std::string>& columns)
    : path_(std::move(path)), tmp_path_(path_ + ".tmp"), n_cols_(columns.size()) {
  buffer_ += "# command=" + m.command + "\n";
  buffer_ += "# config=" + m.config_name + "\n";
  buffer_ += "# config_hash=" + m.config_hash + "\n";
  buffer_ += "# seed=" + std::to_string(m.seed) + "\n";
  buffer_ += "# rng=" + m.rng + "\n";
  buffer_ += "# version=" + m.version + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += columns[i];
  }
  buffer_ += '\n';
}

CsvFile::~CsvFile() {
  try {
    close();
  } catch (...) {
    // destructors must not throw; an explicit close() reports failures
  }
}

void CsvFile::row(const std::vector<std::string>& cells) {
  if (cells.size() != n_cols_) throw io_error("csv row width mismatch: " + path_);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += cells[i];
  }
  buffer_ += '\n';
}

void CsvFile::row(std::initializer_list<double> cells) {
  std::vector<std::string> s;
  s.reserve(cells.size());
  for (double v : cells) s.push_back(fmt_double(v));
  row(s);
}

void CsvFile::close() {
  if (closed_) return;
  closed_ = true;
  publish(tmp_path_, path_, buffer_);
}

void write_json_atomic(const std::string& path, const nlohmann::json& j) {
  publish(path + ".tmp", path, j.dump(2) + "\n");
}

void write_manifest(const std::string& dir, const Manifest& m) {
  write_json_atomic((fs::path(dir) / "manifest.json").string(), manifest_json(m));
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw io_error("cannot create directory " + dir + ": " + ec.message());
}

}  // namespace ryd
