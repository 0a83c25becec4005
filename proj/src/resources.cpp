#include "respeak/resources.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "respeak/error.hpp"
#include "respeak/textcore.hpp"

namespace respeak {

namespace {

struct Entry {
  std::size_t line_no;
  std::string head;
  std::vector<std::string> values;
};

bool skip_line(const std::string& line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string::npos || line[first] == '#';
}

std::vector<std::string> split_words(const std::string& s, bool lowercase) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(normalize_word(w, lowercase));
  return out;
}

// Parses `head<TAB>v1 v2 ...` lines.
std::vector<Entry> read_tab_entries(std::istream& in, bool lowercase, const char* what) {
  std::vector<Entry> out;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_line(line)) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::ParseError, std::string(what) + " line " + std::to_string(line_no) +
                                             ": expected word<TAB>values");
    }
    auto head = split_words(line.substr(0, tab), lowercase);
    if (head.size() != 1) {
      throw Error(ErrorCode::ParseError, std::string(what) + " line " + std::to_string(line_no) +
                                             ": expected exactly one headword");
    }
    auto values = split_words(line.substr(tab + 1), lowercase);
    if (values.empty()) {
      throw Error(ErrorCode::ParseError,
                  std::string(what) + " line " + std::to_string(line_no) + ": no values");
    }
    out.push_back({line_no, std::move(head.front()), std::move(values)});
  }
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return in;
}

}  // namespace

bool LanguageResources::are_synonyms(const std::string& a, const std::string& b) const {
  auto it = synonyms.find(a);
  return it != synonyms.end() && it->second.contains(b);
}

std::set<std::string> LanguageResources::stems_of(const std::string& word) const {
  auto it = stems.find(word);
  if (it == stems.end()) return {word};
  return it->second;
}

bool LanguageResources::share_stem(const std::string& a, const std::string& b) const {
  const auto sa = stems_of(a);
  const auto sb = stems_of(b);
  return std::any_of(sa.begin(), sa.end(), [&](const auto& s) { return sb.contains(s); });
}

void LanguageResources::add_synonym_pair(const std::string& a, const std::string& b) {
  if (a == b) return;
  synonyms[a].insert(b);
  synonyms[b].insert(a);
}

void load_synonyms(std::istream& in, LanguageResources& into, bool lowercase) {
  for (const auto& e : read_tab_entries(in, lowercase, "synonyms")) {
    for (const auto& v : e.values) into.add_synonym_pair(e.head, v);
  }
}

void load_stems(std::istream& in, LanguageResources& into, bool lowercase) {
  for (auto& e : read_tab_entries(in, lowercase, "stems")) {
    into.stems[e.head].insert(e.values.begin(), e.values.end());
  }
}

void load_function_words(std::istream& in, LanguageResources& into, bool lowercase) {
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_line(line)) continue;
    const auto words = split_words(line, lowercase);
    if (words.size() != 1) {
      throw Error(ErrorCode::ParseError,
                  "function words line " + std::to_string(line_no) + ": expected one word");
    }
    into.function_words.insert(words.front());
  }
}

void load_synonyms_file(const std::string& path, LanguageResources& into, bool lowercase) {
  auto in = open(path);
  load_synonyms(in, into, lowercase);
}

void load_stems_file(const std::string& path, LanguageResources& into, bool lowercase) {
  auto in = open(path);
  load_stems(in, into, lowercase);
}

void load_function_words_file(const std::string& path, LanguageResources& into, bool lowercase) {
  auto in = open(path);
  load_function_words(in, into, lowercase);
}

}  // namespace respeak
