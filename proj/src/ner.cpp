#include "respeak/ner.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "respeak/error.hpp"

namespace respeak {

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_count(const std::string& field, std::size_t line_no, const char* name) {
  std::size_t v = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (field.empty() || ec != std::errc() || ptr != end) {
    parse_fail(line_no, std::string(name) + " is not a non-negative integer: '" + field + "'");
  }
  return v;
}

double parse_real(const std::string& field, std::size_t line_no, const char* name) {
  double v = 0.0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (field.empty() || ec != std::errc() || ptr != end) {
    parse_fail(line_no, std::string(name) + " is not a number: '" + field + "'");
  }
  return v;
}

}  // namespace

double NerRecord::edition_total() const noexcept {
  double e = 0.0;
  for (const auto& err : edition_errors) {
    e += static_cast<double>(err.count) * severity_weight(err.severity);
  }
  return e;
}

void NerRecord::validate() const {
  if (tokens == 0) throw Error(ErrorCode::InvalidRecord, "NER record with N = 0");
  if (recognition_errors < 0.0) {
    throw Error(ErrorCode::InvalidRecord, "negative recognition error count");
  }
  if (edition_total() + recognition_errors > static_cast<double>(tokens)) {
    throw Error(ErrorCode::InvalidRecord, "E + R exceeds N");
  }
}

double ner_accuracy(const NerRecord& record) {
  record.validate();
  const double n = static_cast<double>(record.tokens);
  return (n - record.edition_total() - record.recognition_errors) / n * 100.0;
}

double reduction_rate(std::size_t original_length, std::size_t subtitle_length) {
  if (original_length == 0) {
    throw Error(ErrorCode::InvalidInput, "reduction rate of an empty original");
  }
  const double o = static_cast<double>(original_length);
  return (o - static_cast<double>(subtitle_length)) / o * 100.0;
}

std::vector<NerRecord> parse_ner_annotations(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim(line).empty()) {
      header = split_csv(line);
      break;
    }
  }
  if (header.empty()) parse_fail(line_no == 0 ? 1 : line_no, "missing header row");

  const bool has_id = lower(header.front()) == "id";
  const std::size_t base = has_id ? 1 : 0;
  const std::size_t width = header.size() - base;
  if (width != 5 && width != 7) {
    parse_fail(line_no, "expected columns N,minor,standard,serious,R[,original,subtitle]");
  }
  // A numeric first field means the header row was left out.
  if (!header[base].empty() && std::isdigit(static_cast<unsigned char>(header[base].front()))) {
    parse_fail(line_no, "header row required");
  }

  std::vector<NerRecord> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != header.size()) {
      parse_fail(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                              std::to_string(f.size()));
    }
    NerRecord r;
    if (has_id) r.id = f[0];
    r.tokens = parse_count(f[base], line_no, "N");
    r.edition_errors = {
        {ErrorSeverity::Minor, parse_count(f[base + 1], line_no, "minor")},
        {ErrorSeverity::Standard, parse_count(f[base + 2], line_no, "standard")},
        {ErrorSeverity::Serious, parse_count(f[base + 3], line_no, "serious")},
    };
    r.recognition_errors = parse_real(f[base + 4], line_no, "R");
    if (width == 7) {
      r.original_length = parse_count(f[base + 5], line_no, "original");
      r.subtitle_length = parse_count(f[base + 6], line_no, "subtitle");
    }
    try {
      r.validate();
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidRecord, "line " + std::to_string(line_no) + ": " + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<NerRecord> parse_ner_annotation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return parse_ner_annotations(in);
}

}  // namespace respeak
