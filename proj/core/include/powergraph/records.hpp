#pragma once

#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "powergraph/config.hpp"

namespace powergraph {

using FieldValue = std::variant<std::int64_t, double, bool, std::string>;

/// One row of Monte Carlo output. `fields` keeps insertion order, which is
/// the column order on disk.
struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<std::pair<std::string, FieldValue>> fields;
  double wall_ms = 0.0;  // written only when timing output is requested

  void set(std::string name, FieldValue value);
  const FieldValue* find(std::string_view name) const;
  std::int64_t get_int(std::string_view name) const;
  double get_double(std::string_view name) const;  // ints widen
  bool get_bool(std::string_view name) const;

  friend bool operator==(const TrialRecord& a, const TrialRecord& b) {
    return a.trial == b.trial && a.seed == b.seed && a.config_hash == b.config_hash &&
           a.fields == b.fields;
  }
};

std::string format_field(const FieldValue& v);

/// Append-only writer. The header (column names and config hash) goes out
/// on open; each record is flushed as it is written.
class RecordSink {
 public:
  /// Empty path writes nowhere. Throws IoError when the file cannot be opened.
  RecordSink(const std::string& path, RecordFormat format, std::string kind,
             std::string config_hash, std::vector<std::string> columns,
             bool timing = false);
  /// Writes to a caller-owned stream.
  RecordSink(std::ostream& out, RecordFormat format, std::string kind,
             std::string config_hash, std::vector<std::string> columns,
             bool timing = false);

  void write(const TrialRecord& rec);
  std::size_t written() const noexcept { return written_; }

 private:
  void header();

  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
  RecordFormat format_;
  std::string kind_;
  std::string hash_;
  std::vector<std::string> columns_;
  bool timing_;
  std::size_t written_ = 0;
};

/// Writes a whole record stream; an empty stream yields a header-only file.
void emit(const std::vector<TrialRecord>& records, RecordFormat format,
          const std::string& path, const std::string& kind,
          const std::string& config_hash, const std::vector<std::string>& columns);

struct RecordFile {
  std::string kind;
  std::string config_hash;
  std::vector<std::string> columns;
  std::vector<TrialRecord> records;
};

/// Reads a file written in the jsonl format.
RecordFile read_jsonl(std::istream& in);
RecordFile read_jsonl(const std::string& path);

}  // namespace powergraph
