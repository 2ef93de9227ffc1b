#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kgsynth {

/// Lowercase ASCII copy of `s`.
std::string casefold(std::string_view s);

/// Trim leading/trailing whitespace and collapse internal runs to one space.
std::string collapse_whitespace(std::string_view s);

/// Canonical match key for entity names: trim, collapse whitespace, casefold.
std::string normalize_name(std::string_view name);

/// Word tokens: maximal runs of ASCII alphanumerics, casefolded.
/// Whitespace and punctuation act as separators and are dropped.
std::vector<std::string> tokenize_words(std::string_view s);

/// Token count under the pipeline tokenizer.
int count_tokens(std::string_view s);

/// Split text into sentences at [.?!] boundaries followed by whitespace and
/// an uppercase letter, digit, or opening quote. An abbreviation stoplist and
/// single-letter initials suppress false boundaries. Sentences are trimmed.
std::vector<std::string> split_sentences(std::string_view text);

/// F1 of clipped unigram overlap between two token multisets.
double clipped_token_f1(const std::vector<std::string>& reference,
                        const std::vector<std::string>& candidate);

/// Count of clipped unigram overlap (sum over tokens of min count).
int clipped_overlap(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// ROUGE-1 F1 over casefolded word tokens. Returns 0 when either side is empty.
double rouge1_f1(std::string_view reference, std::string_view candidate);

/// Normalization for answer-style comparisons: casefold, strip punctuation,
/// collapse whitespace. Articles are removed only when `strip_articles`.
std::string normalize_answer(std::string_view s, bool strip_articles);

} // namespace kgsynth
