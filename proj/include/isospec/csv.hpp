#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace isospec {

// 17 significant digits: decimal text round-trips the exact double.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Write whole file atomically: temp file in the same directory, then rename.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) buf_ << ',';
      buf_ << header[i];
    }
    buf_ << '\n';
  }

  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) buf_ << ',';
      buf_ << fmt17(values[i]);
    }
    buf_ << '\n';
  }

  void raw_row(const std::string& line) { buf_ << line << '\n'; }

  std::string str() const { return buf_.str(); }
  void save(const std::filesystem::path& path) const { write_file_atomic(path, buf_.str()); }

 private:
  std::ostringstream buf_;
};

}  // namespace isospec
