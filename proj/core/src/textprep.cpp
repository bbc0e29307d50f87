#include "slr/textprep.hpp"

#include "slr/error.hpp"
#include "slr/fileio.hpp"
#include "slr/text.hpp"
#include "builtin_stopwords.hpp"

namespace slr::textprep {

StopwordSet parse_stopwords(std::string_view text, StopwordKind kind) {
  StopwordSet set;
  set.kind = kind;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = slr::text::trim(line);
    if (line.empty()) continue;
    const std::string term(line);
    if (term.find_first_of(" \t") != std::string::npos || slr::text::fold_case(term) != term) {
      throw Error(ErrorKind::BadConfig,
                  "stopword on line " + std::to_string(line_no) + " is not a lowercase single token");
    }
    set.terms.insert(term);
    if (kind == StopwordKind::Custom) set.terms.insert(stem(term));
  }
  return set;
}

StopwordSet load_stopwords(const std::filesystem::path& path, StopwordKind kind) {
  return parse_stopwords(read_file(path), kind);
}

std::string_view builtin_standard_stopwords_text() { return detail::kStandardStopwords; }
std::string_view builtin_custom_stopwords_text() { return detail::kCustomStopwords; }

const StopwordSet& builtin_standard_stopwords() {
  static const StopwordSet set =
      parse_stopwords(builtin_standard_stopwords_text(), StopwordKind::Standard);
  return set;
}

const StopwordSet& builtin_custom_stopwords() {
  static const StopwordSet set =
      parse_stopwords(builtin_custom_stopwords_text(), StopwordKind::Custom);
  return set;
}

Tokens normalize_text(std::string_view raw) {
  Tokens tokens;
  std::string current;
  for (char32_t cp : slr::text::decode_utf8(raw)) {
    if (slr::text::is_letter(cp)) {
      slr::text::append_utf8(current, slr::text::fold_case(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

Tokens remove_stopwords(const Tokens& tokens, const StopwordSet& set) {
  Tokens out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!set.contains(t)) out.push_back(t);
  }
  return out;
}

Tokens preprocess_text(std::string_view raw, const StopwordSet& standard,
                       const StopwordSet& custom) {
  Tokens tokens = remove_stopwords(normalize_text(raw), standard);
  for (auto& t : tokens) t = stem(t);
  return remove_stopwords(tokens, custom);
}

TokenizedDoc preprocess(const corpus::Document& d, const StopwordSet& standard,
                        const StopwordSet& custom) {
  return {d.id, preprocess_text(d.abstract, standard, custom)};
}

PreprocessResult preprocess_corpus(const corpus::Corpus& c, const StopwordSet& standard,
                                   const StopwordSet& custom) {
  PreprocessResult result;
  for (const auto& d : c.documents) {
    auto td = preprocess(d, standard, custom);
    if (td.tokens.empty()) {
      result.empty_ids.push_back(td.id);
    } else {
      result.docs.push_back(std::move(td));
    }
  }
  return result;
}

}  // namespace slr::textprep
