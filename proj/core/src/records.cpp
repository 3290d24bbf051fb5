#include "powergraph/records.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "powergraph/error.hpp"

namespace powergraph {

using ojson = nlohmann::ordered_json;

void TrialRecord::set(std::string name, FieldValue value) {
  for (auto& [k, v] : fields) {
    if (k == name) {
      v = std::move(value);
      return;
    }
  }
  fields.emplace_back(std::move(name), std::move(value));
}

const FieldValue* TrialRecord::find(std::string_view name) const {
  for (const auto& [k, v] : fields) {
    if (k == name) return &v;
  }
  return nullptr;
}

std::int64_t TrialRecord::get_int(std::string_view name) const {
  const auto* v = find(name);
  if (!v) throw std::out_of_range("no field '" + std::string(name) + "'");
  if (const auto* i = std::get_if<std::int64_t>(v)) return *i;
  if (const auto* b = std::get_if<bool>(v)) return *b ? 1 : 0;
  throw std::invalid_argument("field '" + std::string(name) + "' is not an integer");
}

double TrialRecord::get_double(std::string_view name) const {
  const auto* v = find(name);
  if (!v) throw std::out_of_range("no field '" + std::string(name) + "'");
  if (const auto* x = std::get_if<double>(v)) return *x;
  if (const auto* i = std::get_if<std::int64_t>(v)) return static_cast<double>(*i);
  throw std::invalid_argument("field '" + std::string(name) + "' is not numeric");
}

bool TrialRecord::get_bool(std::string_view name) const {
  const auto* v = find(name);
  if (!v) throw std::out_of_range("no field '" + std::string(name) + "'");
  if (const auto* b = std::get_if<bool>(v)) return *b;
  throw std::invalid_argument("field '" + std::string(name) + "' is not a boolean");
}

namespace {

std::string double_text(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

ojson to_json_value(const FieldValue& v) {
  return std::visit([](const auto& x) { return ojson(x); }, v);
}

FieldValue from_json_value(const ojson& j) {
  switch (j.type()) {
    case ojson::value_t::boolean:
      return j.get<bool>();
    case ojson::value_t::number_integer:
    case ojson::value_t::number_unsigned:
      return j.get<std::int64_t>();
    case ojson::value_t::number_float:
      return j.get<double>();
    case ojson::value_t::string:
      return j.get<std::string>();
    default:
      throw IoError("unsupported record value " + j.dump());
  }
}

}  // namespace

std::string format_field(const FieldValue& v) {
  struct Visitor {
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(double x) const { return double_text(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& x) const { return x; }
  };
  return std::visit(Visitor{}, v);
}

RecordSink::RecordSink(const std::string& path, RecordFormat format, std::string kind,
                       std::string config_hash, std::vector<std::string> columns,
                       bool timing)
    : format_(format),
      kind_(std::move(kind)),
      hash_(std::move(config_hash)),
      columns_(std::move(columns)),
      timing_(timing) {
  if (!path.empty()) {
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    out_ = file_.get();
  }
  header();
}

RecordSink::RecordSink(std::ostream& out, RecordFormat format, std::string kind,
                       std::string config_hash, std::vector<std::string> columns,
                       bool timing)
    : out_(&out),
      format_(format),
      kind_(std::move(kind)),
      hash_(std::move(config_hash)),
      columns_(std::move(columns)),
      timing_(timing) {
  header();
}

void RecordSink::header() {
  if (!out_) return;
  if (format_ == RecordFormat::Csv) {
    *out_ << "trial,seed,config_hash";
    for (const auto& c : columns_) *out_ << ',' << c;
    if (timing_) *out_ << ",wall_ms";
    *out_ << '\n';
  } else {
    ojson h;
    h["kind"] = kind_;
    h["config_hash"] = hash_;
    h["columns"] = columns_;
    *out_ << h.dump() << '\n';
  }
  out_->flush();
  if (!*out_) throw IoError("write failed");
}

void RecordSink::write(const TrialRecord& rec) {
  ++written_;
  if (!out_) return;
  if (format_ == RecordFormat::Csv) {
    *out_ << rec.trial << ',' << rec.seed << ',' << rec.config_hash;
    for (const auto& c : columns_) {
      *out_ << ',';
      if (const auto* v = rec.find(c)) *out_ << format_field(*v);
    }
    if (timing_) *out_ << ',' << double_text(rec.wall_ms);
    *out_ << '\n';
  } else {
    ojson j;
    j["trial"] = rec.trial;
    j["seed"] = rec.seed;
    j["config_hash"] = rec.config_hash;
    for (const auto& c : columns_) {
      if (const auto* v = rec.find(c)) j[c] = to_json_value(*v);
    }
    if (timing_) j["wall_ms"] = rec.wall_ms;
    *out_ << j.dump() << '\n';
  }
  out_->flush();
  if (!*out_) throw IoError("write failed");
}

void emit(const std::vector<TrialRecord>& records, RecordFormat format,
          const std::string& path, const std::string& kind,
          const std::string& config_hash, const std::vector<std::string>& columns) {
  RecordSink sink(path, format, kind, config_hash, columns);
  for (const auto& r : records) sink.write(r);
}

RecordFile read_jsonl(std::istream& in) {
  RecordFile file;
  std::string line;
  bool have_header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ojson j;
    try {
      j = ojson::parse(line);
    } catch (const ojson::parse_error& e) {
      throw IoError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!have_header) {
      if (!j.contains("columns")) throw IoError("missing jsonl header");
      file.kind = j.value("kind", "");
      file.config_hash = j.value("config_hash", "");
      file.columns = j["columns"].get<std::vector<std::string>>();
      have_header = true;
      continue;
    }
    TrialRecord rec;
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& key = it.key();
      if (key == "trial") {
        rec.trial = it->get<std::uint64_t>();
      } else if (key == "seed") {
        rec.seed = it->get<std::uint64_t>();
      } else if (key == "config_hash") {
        rec.config_hash = it->get<std::string>();
      } else if (key == "wall_ms") {
        rec.wall_ms = it->get<double>();
      } else {
        rec.fields.emplace_back(key, from_json_value(*it));
      }
    }
    file.records.push_back(std::move(rec));
  }
  if (!have_header) throw IoError("empty record file");
  return file;
}

RecordFile read_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_jsonl(in);
}

}  // namespace powergraph
