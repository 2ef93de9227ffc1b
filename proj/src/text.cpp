#include "kgsynth/text.hpp"

#include "kgsynth/error.hpp"
#include "kgsynth/ids.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace kgsynth {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidEntity: return "invalid-entity";
        case ErrorKind::NotFound: return "not-found";
        case ErrorKind::EmptyInput: return "empty-input";
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::InvalidQuery: return "invalid-query";
        case ErrorKind::ParseFailure: return "extraction-parse";
        case ErrorKind::Transport: return "transport";
        case ErrorKind::Service: return "service";
        case ErrorKind::CorruptStore: return "corrupt-store";
        case ErrorKind::VersionMismatch: return "versioned-load";
        case ErrorKind::Decomposition: return "decomposition";
        case ErrorKind::Generation: return "generation";
        case ErrorKind::DocumentFailed: return "document-failed";
        case ErrorKind::FrozenGraph: return "frozen-graph";
    }
    return "unknown";
}

std::string hex64(std::uint64_t value) {
    static const char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

namespace {
constexpr char kIdSep = '\x1f';
}

std::string chunk_id_for(const std::string& doc_id, int index) {
    return "c" + hex64(fnv1a64(doc_id + kIdSep + std::to_string(index)));
}

std::string entity_id_for(const std::string& normalized_name) {
    return "e" + hex64(fnv1a64(normalized_name));
}

std::string proposition_id_for(const std::string& chunk_id, int ordinal) {
    return "p" + hex64(fnv1a64(chunk_id + kIdSep + std::to_string(ordinal)));
}

std::string quadruplet_id_for(const std::string& chunk_id, int ordinal) {
    return "q" + hex64(fnv1a64(chunk_id + kIdSep + std::to_string(ordinal)));
}

std::string casefold(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = true; // leading whitespace is dropped
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out.push_back(' ');
            out.push_back(static_cast<char>(c));
            in_space = false;
        }
    }
    return out;
}

std::string normalize_name(std::string_view name) {
    return casefold(collapse_whitespace(name));
}

std::vector<std::string> tokenize_words(std::string_view s) {
    std::vector<std::string> tokens;
    std::string cur;
    for (unsigned char c : s) {
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

int count_tokens(std::string_view s) {
    int n = 0;
    bool in_token = false;
    for (unsigned char c : s) {
        if (std::isalnum(c)) {
            if (!in_token) ++n;
            in_token = true;
        } else {
            in_token = false;
        }
    }
    return n;
}

namespace {

const std::unordered_set<std::string>& abbreviation_stoplist() {
    static const std::unordered_set<std::string> abbrevs = {
        "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "etc",
        "inc", "ltd", "co", "corp", "fig", "no", "dept", "univ", "est",
        "approx", "al", "eg", "ie", "jan", "feb", "mar", "apr", "jun",
        "jul", "aug", "sep", "sept", "oct", "nov", "dec",
    };
    return abbrevs;
}

bool is_open_quote(unsigned char c) {
    return c == '"' || c == '\'' || c == '(' || c == '[';
}

bool is_close_quote(unsigned char c) {
    return c == '"' || c == '\'' || c == ')' || c == ']';
}

// Word immediately preceding position `pos` (alphanumeric run), casefolded.
std::string word_before(std::string_view text, size_t pos) {
    size_t end = pos;
    size_t begin = end;
    while (begin > 0 && std::isalnum(static_cast<unsigned char>(text[begin - 1]))) --begin;
    std::string w(text.substr(begin, end - begin));
    return casefold(w);
}

} // namespace

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    size_t start = 0;
    const size_t n = text.size();

    auto flush = [&](size_t end) {
        std::string s = collapse_whitespace(text.substr(start, end - start));
        if (!s.empty()) sentences.push_back(std::move(s));
        start = end;
    };

    for (size_t i = 0; i < n; ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c != '.' && c != '?' && c != '!') continue;

        // Consume the whole terminator run (e.g. "?!", "...").
        size_t term_end = i;
        while (term_end + 1 < n) {
            unsigned char t = static_cast<unsigned char>(text[term_end + 1]);
            if (t == '.' || t == '?' || t == '!') ++term_end;
            else break;
        }

        if (c == '.' && term_end == i) {
            std::string prev = word_before(text, i);
            if (abbreviation_stoplist().count(prev) > 0) { i = term_end; continue; }
            // Single-letter initials: "George W. Bush".
            if (prev.size() == 1 && std::isalpha(static_cast<unsigned char>(prev[0]))) {
                i = term_end;
                continue;
            }
        }

        size_t j = term_end + 1;
        while (j < n && is_close_quote(static_cast<unsigned char>(text[j]))) ++j;
        if (j >= n) { flush(n); i = n; break; }
        if (!std::isspace(static_cast<unsigned char>(text[j]))) { i = term_end; continue; }
        size_t k = j;
        while (k < n && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        if (k >= n) { flush(n); i = n; break; }
        unsigned char next = static_cast<unsigned char>(text[k]);
        if (std::isupper(next) || std::isdigit(next) || is_open_quote(next)) {
            flush(k);
            i = k - 1;
        } else {
            i = term_end;
        }
    }
    if (start < n) flush(n);
    return sentences;
}

int clipped_overlap(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::unordered_map<std::string, int> counts;
    for (const auto& t : a) counts[t]++;
    int overlap = 0;
    for (const auto& t : b) {
        auto it = counts.find(t);
        if (it != counts.end() && it->second > 0) {
            ++overlap;
            --it->second;
        }
    }
    return overlap;
}

double clipped_token_f1(const std::vector<std::string>& reference,
                        const std::vector<std::string>& candidate) {
    if (reference.empty() || candidate.empty()) return 0.0;
    const int overlap = clipped_overlap(reference, candidate);
    if (overlap == 0) return 0.0;
    const double precision = static_cast<double>(overlap) / static_cast<double>(candidate.size());
    const double recall = static_cast<double>(overlap) / static_cast<double>(reference.size());
    return 2.0 * precision * recall / (precision + recall);
}

double rouge1_f1(std::string_view reference, std::string_view candidate) {
    return clipped_token_f1(tokenize_words(reference), tokenize_words(candidate));
}

std::string normalize_answer(std::string_view s, bool strip_articles) {
    auto tokens = tokenize_words(s);
    std::string out;
    for (const auto& t : tokens) {
        if (strip_articles && (t == "a" || t == "an" || t == "the")) continue;
        if (!out.empty()) out.push_back(' ');
        out += t;
    }
    return out;
}

} // namespace kgsynth
