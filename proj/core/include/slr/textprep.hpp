#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "slr/corpus.hpp"
#include "slr/stemmer.hpp"

namespace slr::textprep {

using Tokens = std::vector<std::string>;

enum class StopwordKind { Standard, Custom };

struct StopwordSet {
  std::unordered_set<std::string> terms;
  StopwordKind kind = StopwordKind::Standard;

  bool contains(std::string_view token) const { return terms.contains(std::string(token)); }
};

/// Parses a one-term-per-line list; '#' starts a comment, blank lines are ignored.
/// Entries must be lowercase without whitespace (Error(BadConfig) otherwise).
/// For custom sets every entry's stem is added too, so entries that are not
/// stemmer fixpoints still match stemmed tokens.
StopwordSet parse_stopwords(std::string_view text, StopwordKind kind);
StopwordSet load_stopwords(const std::filesystem::path& path, StopwordKind kind);

/// Bundled lists compiled into the library.
const StopwordSet& builtin_standard_stopwords();
const StopwordSet& builtin_custom_stopwords();
std::string_view builtin_standard_stopwords_text();
std::string_view builtin_custom_stopwords_text();

/// Lowercases, replaces every non-letter with a space and splits on whitespace.
Tokens normalize_text(std::string_view raw);

/// Order-preserving filter.
Tokens remove_stopwords(const Tokens& tokens, const StopwordSet& set);

struct TokenizedDoc {
  std::string id;
  Tokens tokens;

  bool operator==(const TokenizedDoc&) const = default;
};

/// normalize -> standard stopwords -> stem -> custom stopwords.
Tokens preprocess_text(std::string_view raw, const StopwordSet& standard,
                       const StopwordSet& custom);

TokenizedDoc preprocess(const corpus::Document& d, const StopwordSet& standard,
                        const StopwordSet& custom);

struct PreprocessResult {
  std::vector<TokenizedDoc> docs;     // non-empty results, corpus order
  std::vector<std::string> empty_ids;  // documents with nothing left
};

PreprocessResult preprocess_corpus(const corpus::Corpus& c, const StopwordSet& standard,
                                   const StopwordSet& custom);

}  // namespace slr::textprep
