#include "slr/dtm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "slr/error.hpp"

namespace slr::dtm {

std::uint64_t DocTermMatrix::total_tokens() const {
  return std::accumulate(lengths.begin(), lengths.end(), std::uint64_t{0});
}

Vocabulary build_vocabulary(const std::vector<textprep::TokenizedDoc>& docs, int min_count) {
  if (min_count < 1) throw Error(ErrorKind::BadConfig, "min_count must be >= 1");
  std::unordered_map<std::string, std::uint64_t> freq;
  for (const auto& d : docs) {
    for (const auto& t : d.tokens) ++freq[t];
  }
  std::vector<std::pair<std::string, std::uint64_t>> kept;
  for (auto& [term, n] : freq) {
    if (n >= static_cast<std::uint64_t>(min_count)) kept.emplace_back(term, n);
  }
  if (kept.empty()) throw Error(ErrorKind::EmptyVocabulary, "no term reaches min_count");
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  Vocabulary v;
  v.index_to_term.reserve(kept.size());
  for (auto& [term, n] : kept) {
    v.term_to_index.emplace(term, static_cast<std::uint32_t>(v.index_to_term.size()));
    v.index_to_term.push_back(std::move(term));
  }
  return v;
}

DocTermMatrix build_matrix(const std::vector<textprep::TokenizedDoc>& docs, const Vocabulary& v) {
  DocTermMatrix m;
  m.vocabulary = v.index_to_term;
  for (const auto& d : docs) {
    std::map<std::uint32_t, std::uint32_t> counts;
    for (const auto& t : d.tokens) {
      auto it = v.term_to_index.find(t);
      if (it != v.term_to_index.end()) ++counts[it->second];
    }
    if (counts.empty()) {
      m.excluded_ids.push_back(d.id);
      continue;
    }
    std::vector<Entry> row;
    row.reserve(counts.size());
    std::uint32_t length = 0;
    for (auto [term, n] : counts) {
      row.push_back({term, n});
      length += n;
    }
    m.doc_ids.push_back(d.id);
    m.rows.push_back(std::move(row));
    m.lengths.push_back(length);
  }
  return m;
}

std::vector<std::uint64_t> term_frequencies(const DocTermMatrix& m) {
  std::vector<std::uint64_t> freq(m.num_terms(), 0);
  for (const auto& row : m.rows) {
    for (const auto& e : row) freq[e.term] += e.count;
  }
  return freq;
}

}  // namespace slr::dtm
