#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>

namespace respeak {

/// Synonym dictionary, multi-stem table and function-word list shared by
/// METEOR(-PL) and EBLEU. Immutable once loaded.
///
/// File formats (UTF-8, `#` lines are comments, blank lines ignored):
///   synonyms        word<TAB>syn1 syn2 ...
///   stems           word<TAB>stem1 stem2 ...
///   function words  one word per line
struct LanguageResources {
  std::map<std::string, std::set<std::string>> synonyms;
  std::map<std::string, std::set<std::string>> stems;
  std::set<std::string> function_words;
  double function_word_weight = 0.2;

  bool empty() const noexcept {
    return synonyms.empty() && stems.empty() && function_words.empty();
  }

  bool are_synonyms(const std::string& a, const std::string& b) const;

  /// Listed stems of `word`, or `{word}` when the word has no entry.
  std::set<std::string> stems_of(const std::string& word) const;

  bool share_stem(const std::string& a, const std::string& b) const;

  bool is_function_word(const std::string& word) const {
    return function_words.contains(word);
  }

  /// Adds a→b and b→a.
  void add_synonym_pair(const std::string& a, const std::string& b);
};

/// The loaders NFC-normalize every entry and lowercase it when `lowercase`
/// is set, so entries compare equal to tokenizer output.
void load_synonyms(std::istream& in, LanguageResources& into, bool lowercase = true);
void load_stems(std::istream& in, LanguageResources& into, bool lowercase = true);
void load_function_words(std::istream& in, LanguageResources& into, bool lowercase = true);

void load_synonyms_file(const std::string& path, LanguageResources& into, bool lowercase = true);
void load_stems_file(const std::string& path, LanguageResources& into, bool lowercase = true);
void load_function_words_file(const std::string& path, LanguageResources& into,
                              bool lowercase = true);

}  // namespace respeak
