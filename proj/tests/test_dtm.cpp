#include "slr/dtm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "test_util.hpp"

namespace slr::dtm {
namespace {

using textprep::TokenizedDoc;

std::vector<TokenizedDoc> docs_of(std::vector<std::vector<std::string>> tokens) {
  std::vector<TokenizedDoc> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) out.push_back({"d" + std::to_string(i), tokens[i]});
  return out;
}

std::vector<TokenizedDoc> random_docs(std::mt19937_64& rng, std::size_t n, std::size_t alphabet) {
  std::vector<TokenizedDoc> docs(n);
  for (std::size_t d = 0; d < n; ++d) {
    docs[d].id = "doc" + std::to_string(d);
    for (std::size_t i = 0, len = rng() % 15; i < len; ++i) {
      // skewed draw so frequencies differ
      const std::size_t a = std::min(rng() % alphabet, rng() % alphabet);
      docs[d].tokens.push_back("w" + std::to_string(a));
    }
  }
  return docs;
}

TEST(Vocabulary, FrequencyThenLexicographicOrder) {
  const auto docs = docs_of({{"a", "b"}, {"b", "c"}});
  const auto v = build_vocabulary(docs, 1);
  EXPECT_EQ(v.index_to_term, (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(v.size(), 3u);
  for (std::uint32_t i = 0; i < v.size(); ++i) EXPECT_EQ(v.term_to_index.at(v.index_to_term[i]), i);
  EXPECT_EQ(build_vocabulary(docs, 2).index_to_term, std::vector<std::string>{"b"});
}

TEST(Vocabulary, Errors) {
  EXPECT_SLR_ERROR(build_vocabulary(docs_of({{"a"}}), 2), ErrorKind::EmptyVocabulary);
  EXPECT_SLR_ERROR(build_vocabulary({}, 1), ErrorKind::EmptyVocabulary);
  EXPECT_SLR_ERROR(build_vocabulary(docs_of({{"a"}}), 0), ErrorKind::BadConfig);
}

TEST(Vocabulary, MembershipMatchesBruteForce) {
  std::mt19937_64 rng(50);
  const auto docs = random_docs(rng, 50, 40);
  for (int min_count : {1, 2, 3, 5, 8}) {
    std::map<std::string, int> freq;
    for (const auto& d : docs)
      for (const auto& t : d.tokens) ++freq[t];
    std::vector<std::string> expected;
    for (const auto& [t, n] : freq)
      if (n >= min_count) expected.push_back(t);
    auto got = build_vocabulary(docs, min_count).index_to_term;
    // frequency order is non-increasing
    for (std::size_t i = 1; i < got.size(); ++i) EXPECT_GE(freq[got[i - 1]], freq[got[i]]);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << "min_count " << min_count;
  }
}

TEST(Matrix, Examples) {
  Vocabulary v = build_vocabulary(docs_of({{"b", "b", "a"}}), 1);
  const auto m = build_matrix(docs_of({{"b", "b", "a"}, {"zzz", "yyy"}}), v);
  ASSERT_EQ(m.num_docs(), 1u);
  EXPECT_EQ(m.rows[0], (std::vector<Entry>{{v.term_to_index.at("b"), 2}, {v.term_to_index.at("a"), 1}}));
  EXPECT_EQ(m.lengths[0], 3u);
  EXPECT_EQ(m.doc_ids, std::vector<std::string>{"d0"});
  EXPECT_EQ(m.excluded_ids, std::vector<std::string>{"d1"});
  EXPECT_EQ(m.vocabulary, v.index_to_term);
  EXPECT_EQ(m.total_tokens(), 3u);
  EXPECT_EQ(term_frequencies(m), (std::vector<std::uint64_t>{2, 1}));
}

TEST(Matrix, EqualsDenseCountTable) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 20; ++trial) {
    const auto docs = random_docs(rng, 20, 12);
    const auto v = build_vocabulary(docs, 1 + static_cast<int>(rng() % 3));
    const auto m = build_matrix(docs, v);

    std::vector<std::vector<std::uint32_t>> dense;
    std::vector<std::string> ids, excluded;
    std::uint64_t in_vocab = 0;
    for (const auto& d : docs) {
      std::vector<std::uint32_t> row(v.size(), 0);
      bool any = false;
      for (const auto& t : d.tokens) {
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (v.index_to_term[j] == t) {
            ++row[j];
            any = true;
            ++in_vocab;
          }
        }
      }
      if (any) {
        dense.push_back(row);
        ids.push_back(d.id);
      } else {
        excluded.push_back(d.id);
      }
    }
    EXPECT_EQ(m.doc_ids, ids);
    EXPECT_EQ(m.excluded_ids, excluded);
    EXPECT_EQ(m.total_tokens(), in_vocab);
    ASSERT_EQ(m.num_docs(), dense.size());
    for (std::size_t d = 0; d < dense.size(); ++d) {
      std::vector<std::uint32_t> expanded(v.size(), 0);
      std::uint32_t sum = 0;
      for (std::size_t i = 0; i < m.rows[d].size(); ++i) {
        const auto& e = m.rows[d][i];
        EXPECT_GE(e.count, 1u);
        ASSERT_LT(e.term, v.size());
        if (i > 0) {
          EXPECT_LT(m.rows[d][i - 1].term, e.term);
        }
        expanded[e.term] = e.count;
        sum += e.count;
      }
      EXPECT_EQ(expanded, dense[d]);
      EXPECT_EQ(sum, m.lengths[d]);
      EXPECT_GE(m.lengths[d], 1u);
    }
  }
}

TEST(Matrix, RoundTripToMultisets) {
  std::mt19937_64 rng(21);
  const auto docs = random_docs(rng, 30, 10);
  const auto m = build_matrix(docs, build_vocabulary(docs, 1));
  std::size_t r = 0;
  for (const auto& d : docs) {
    if (d.tokens.empty()) continue;
    std::vector<std::string> expanded;
    for (const auto& e : m.rows[r])
      for (std::uint32_t c = 0; c < e.count; ++c) expanded.push_back(m.vocabulary[e.term]);
    auto original = d.tokens;
    std::sort(original.begin(), original.end());
    std::sort(expanded.begin(), expanded.end());
    EXPECT_EQ(expanded, original);
    ++r;
  }
  EXPECT_EQ(r, m.num_docs());
}

}  // namespace
}  // namespace slr::dtm
