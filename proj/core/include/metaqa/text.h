#ifndef METAQA_TEXT_H_
#define METAQA_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace metaqa {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Lowercased word tokens: runs of letters, digits, apostrophes and hyphens.
std::vector<std::string> words(std::string_view s);

// Bundled English function-word list. Interrogative words are deliberately
// absent so that "Where is Boston?" keeps two content words.
bool is_stopword(std::string_view lowercase_word);
const std::vector<std::string>& stopword_list();

bool is_punctuation_tag(std::string_view pos);
bool is_noun_tag(std::string_view pos);
bool is_verb_tag(std::string_view pos);
bool is_wh_tag(std::string_view pos);

// Character-level Levenshtein distance.
int edit_distance(std::string_view a, std::string_view b);

// Capitalizes / lowercases the first ASCII letter.
std::string capitalize_first(std::string s);
std::string lowercase_first(std::string s);

}  // namespace metaqa

#endif  // METAQA_TEXT_H_
