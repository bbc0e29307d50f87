#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "slr/textprep.hpp"

namespace slr::dtm {

struct Vocabulary {
  std::unordered_map<std::string, std::uint32_t> term_to_index;
  std::vector<std::string> index_to_term;

  std::size_t size() const { return index_to_term.size(); }
};

struct Entry {
  std::uint32_t term = 0;
  std::uint32_t count = 0;

  bool operator==(const Entry&) const = default;
};

/// Sparse document-term counts. Rows are sorted by term index.
struct DocTermMatrix {
  std::vector<std::string> doc_ids;
  std::vector<std::vector<Entry>> rows;
  std::vector<std::uint32_t> lengths;
  std::vector<std::string> vocabulary;  // index -> term
  std::vector<std::string> excluded_ids;  // no in-vocabulary tokens

  std::size_t num_docs() const { return rows.size(); }
  std::size_t num_terms() const { return vocabulary.size(); }
  std::uint64_t total_tokens() const;
  bool operator==(const DocTermMatrix&) const = default;
};

/// Terms with corpus frequency >= min_count, indexed by (frequency desc, term asc).
/// Throws Error(EmptyVocabulary) when nothing qualifies, Error(BadConfig) if min_count < 1.
Vocabulary build_vocabulary(const std::vector<textprep::TokenizedDoc>& docs, int min_count = 1);

/// Out-of-vocabulary tokens are dropped; documents left empty go to excluded_ids.
DocTermMatrix build_matrix(const std::vector<textprep::TokenizedDoc>& docs, const Vocabulary& v);

/// Corpus-wide term frequencies (index aligned with vocabulary).
std::vector<std::uint64_t> term_frequencies(const DocTermMatrix& m);

}  // namespace slr::dtm
