#include "slr/corpus.hpp"

#include <gtest/gtest.h>

#include <random>

#include "slr/csv.hpp"
#include "slr/fileio.hpp"
#include "test_util.hpp"

namespace slr::corpus {
namespace {

const std::string kHeader = "Authors,Title,Year,Source title,Cited by,Abstract\n";

std::string row(const std::string& title, const std::string& year, const std::string& source,
                const std::string& cites, const std::string& abstract) {
  return csv::format_row({"X", title, year, source, cites, abstract}) + "\n";
}

Document doc(std::optional<int> year, std::int64_t cites, std::set<std::string> areas = {},
             std::string abstract = "text") {
  Document d;
  d.year = year;
  d.citations = cites;
  d.subject_areas = std::move(areas);
  d.abstract = std::move(abstract);
  return d;
}

TEST(ParseBibCsv, HeaderOnlyGivesEmptyCorpus) {
  const auto c = parse_bib_csv_text(kHeader);
  EXPECT_TRUE(c.documents.empty());
  EXPECT_EQ(c.provenance.counts.at("rows"), 0);
  EXPECT_TRUE(c.provenance.warnings.empty());
}

TEST(ParseBibCsv, EmptyCitationsDefaultToZeroWithWarning) {
  const std::string text = kHeader + row("A", "2020", "J1", "5", "first") +
                           row("B", "2021", "J1", "", "second") + row("C", "2019", "J2", "12", "third");
  const auto c = parse_bib_csv_text(text);
  ASSERT_EQ(c.documents.size(), 3u);
  EXPECT_EQ(c.documents[0].citations, 5);
  EXPECT_EQ(c.documents[1].citations, 0);
  EXPECT_EQ(c.documents[2].citations, 12);
  ASSERT_EQ(c.provenance.warnings.size(), 1u);
  EXPECT_NE(c.provenance.warnings[0].find("row 2"), std::string::npos);
  EXPECT_NE(c.provenance.warnings[0].find("citations"), std::string::npos);
  EXPECT_EQ(c.provenance.counts.at("citations_defaulted"), 1);
}

TEST(ParseBibCsv, FieldsAndYearHandling) {
  const std::string text = kHeader + row("T1", "2020", "Computers in Industry", "3", "abs, with comma") +
                           row("T2", "n.d.", "J", "1", "x") + row("T3", "1850", "J", "-4", "y");
  const auto c = parse_bib_csv_text(text, {}, "export.csv");
  ASSERT_EQ(c.documents.size(), 3u);
  EXPECT_EQ(c.documents[0].title, "T1");
  EXPECT_EQ(c.documents[0].year, 2020);
  EXPECT_EQ(c.documents[0].source, "Computers in Industry");
  EXPECT_EQ(c.documents[0].abstract, "abs, with comma");
  EXPECT_FALSE(c.documents[1].year.has_value());
  EXPECT_FALSE(c.documents[2].year.has_value());  // outside the plausible range
  EXPECT_EQ(c.documents[2].citations, 0);         // negative counts are not valid
  EXPECT_EQ(c.provenance.counts.at("year_missing"), 2);
  EXPECT_EQ(c.provenance.input_file, "export.csv");
  EXPECT_EQ(c.provenance.warnings.size(), 3u);
}

TEST(ParseBibCsv, ConfigurableColumnsAndRange) {
  const std::string text = "TI,AB,PY,SO,TC\nt,a,1985,s,2\n";
  IngestOptions opt;
  opt.columns = {"TI", "AB", "PY", "TC", "SO"};
  opt.min_year = 1980;
  const auto c = parse_bib_csv_text(text, opt);
  ASSERT_EQ(c.documents.size(), 1u);
  EXPECT_EQ(c.documents[0].year, 1985);
  EXPECT_EQ(c.documents[0].citations, 2);
  EXPECT_SLR_ERROR(parse_bib_csv_text(text), ErrorKind::MissingColumn);
}

TEST(ParseBibCsv, Errors) {
  EXPECT_SLR_ERROR(parse_bib_csv_text("Title,Year\nx,2020\n"), ErrorKind::MissingColumn);
  EXPECT_SLR_ERROR(parse_bib_csv_text(kHeader + "X,t,2020,s,1\n"), ErrorKind::MalformedCsv);
  EXPECT_SLR_ERROR(parse_bib_csv_text(kHeader + "X,\"t,2020,s,1,a\n"), ErrorKind::MalformedCsv);
  EXPECT_SLR_ERROR(parse_bib_csv_text(""), ErrorKind::MalformedCsv);
  EXPECT_SLR_ERROR(parse_bib_csv("/nonexistent/file.csv"), ErrorKind::IoError);
}

TEST(ParseBibCsv, IdsUniqueAndDeterministic) {
  // Duplicate titles and years still get distinct ids through the row index.
  const std::string text = kHeader + row("Same", "2020", "J", "1", "a") + row("Same", "2020", "J", "1", "a");
  const auto a = parse_bib_csv_text(text);
  const auto b = parse_bib_csv_text(text);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.documents[0].id, a.documents[1].id);
  EXPECT_EQ(a.documents[0].id, make_document_id(0, "Same", 2020));
  EXPECT_EQ(a.documents[0].id.substr(0, 8), "r000000-");
  EXPECT_NE(make_document_id(0, "Same", 2020), make_document_id(0, "Same", 2021));
  EXPECT_NE(make_document_id(0, "Same", 2020), make_document_id(0, "Same", std::nullopt));
}

TEST(ParseBibCsv, ReadsFromFile) {
  testing::TempDir dir("corpus");
  const auto p = dir.path() / "in.csv";
  const std::string text = kHeader + row("A", "2020", "J", "1", "x");
  write_file(p, text);
  const auto c = parse_bib_csv(p);
  EXPECT_EQ(c.documents.size(), 1u);
  EXPECT_EQ(c.provenance.input_file, "in.csv");
  EXPECT_EQ(c.provenance.input_sha256.size(), 64u);
}

TEST(DropMissingAbstracts, WhitespaceOnlyRemoved) {
  Corpus c;
  for (const char* a : {"one", "  \t ", "two", "\n", "three"}) c.documents.push_back(doc(2020, 0, {}, a));
  const auto out = drop_missing_abstracts(c);
  ASSERT_EQ(out.documents.size(), 3u);
  EXPECT_EQ(out.documents[0].abstract, "one");
  EXPECT_EQ(out.documents[2].abstract, "three");
  EXPECT_EQ(out.provenance.counts.at("abstract_filter_before"), 5);
  EXPECT_EQ(out.provenance.counts.at("abstract_filter_after"), 3);
}

TEST(DropMissingAbstracts, AllPresentIsIdentity) {
  Corpus c;
  for (int i = 0; i < 4; ++i) c.documents.push_back(doc(2018 + i, i, {}, "abstract " + std::to_string(i)));
  EXPECT_EQ(drop_missing_abstracts(c).documents, c.documents);
}

TEST(DropMissingAbstracts, ConservationOnRandomCorpora) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Corpus c;
    std::size_t blank = 0;
    const std::size_t n = rng() % 30;
    for (std::size_t i = 0; i < n; ++i) {
      const bool is_blank = rng() % 3 == 0;
      blank += is_blank;
      c.documents.push_back(doc(2020, 0, {}, is_blank ? std::string(rng() % 3, ' ') : "x"));
    }
    EXPECT_EQ(drop_missing_abstracts(c).documents.size() + blank, c.documents.size());
  }
}

TEST(AreaMapping, ParseAndMerge) {
  const auto m = parse_area_mapping_text(
      "source,area_code\nComputers in Industry,COMP\ncomputers  in industry,ENGI\nOther,BUSI\nEmpty,\n");
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries.at("computers in industry"), (std::set<std::string>{"COMP", "ENGI"}));

  Corpus c;
  c.documents.push_back(doc(2020, 1));
  c.documents.back().source = "COMPUTERS IN  INDUSTRY";
  c.documents.push_back(doc(2020, 2));
  c.documents.back().source = "Computers in Industry";
  c.documents.push_back(doc(2020, 3));
  c.documents.back().source = "Unknown Journal";
  const auto out = merge_subject_areas(c, m);
  EXPECT_EQ(out.documents[0].subject_areas, (std::set<std::string>{"COMP", "ENGI"}));
  EXPECT_EQ(out.documents[1].subject_areas, out.documents[0].subject_areas);
  EXPECT_TRUE(out.documents[2].subject_areas.empty());
  EXPECT_EQ(out.provenance.counts.at("area_unmatched"), 1);
  ASSERT_EQ(out.provenance.warnings.size(), 1u);
  EXPECT_NE(out.provenance.warnings[0].find('1'), std::string::npos);
}

TEST(AreaMapping, EmptyMappingClearsAreasOnly) {
  Corpus c;
  c.documents.push_back(doc(2020, 4, {"COMP"}));
  c.documents.back().source = "J";
  const auto out = merge_subject_areas(c, AreaMapping{});
  EXPECT_TRUE(out.documents[0].subject_areas.empty());
  EXPECT_EQ(out.documents[0].citations, 4);
  EXPECT_EQ(out.documents[0].source, "J");
}

TEST(AreaMapping, Errors) {
  EXPECT_SLR_ERROR(parse_area_mapping_text("journal,code\nx,y\n"), ErrorKind::MissingColumn);
  EXPECT_SLR_ERROR(parse_area_mapping_text("source,area_code\nx\n"), ErrorKind::MalformedCsv);
  EXPECT_TRUE(parse_area_mapping_text("").entries.empty());
}

TEST(YearlySeries, Examples) {
  EXPECT_TRUE(yearly_series(Corpus{}).empty());
  Corpus c;
  for (int cites : {1, 2, 3}) c.documents.push_back(doc(2021, cites));
  const auto ys = yearly_series(c);
  ASSERT_EQ(ys.size(), 1u);
  EXPECT_EQ(ys.at(2021), (Tally{3, 6}));
}

TEST(YearlySeries, TenDocHandTally) {
  Corpus c;
  const std::vector<std::pair<std::optional<int>, int>> rows{
      {2018, 4}, {2019, 0}, {2019, 7}, {2020, 1}, {std::nullopt, 50},
      {2021, 2}, {2021, 2}, {2023, 10}, {2023, 0}, {2023, 5}};
  for (auto [y, k] : rows) c.documents.push_back(doc(y, k));
  const std::map<int, Tally> expected{{2018, {1, 4}}, {2019, {2, 7}}, {2020, {1, 1}},
                                      {2021, {2, 4}},  {2023, {3, 15}}};
  EXPECT_EQ(yearly_series(c), expected);
}

TEST(SubjectAreaTally, MultiCountAndOrder) {
  Corpus c;
  c.documents.push_back(doc(2020, 4, {"COMP", "BUSI"}));
  auto t = subject_area_tally(c);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], (std::pair<std::string, Tally>{"BUSI", {1, 4}}));
  EXPECT_EQ(t[1], (std::pair<std::string, Tally>{"COMP", {1, 4}}));

  c.documents.push_back(doc(2020, 1, {"COMP"}));
  t = subject_area_tally(c);
  EXPECT_EQ(t[0].first, "COMP");
  EXPECT_EQ(t[0].second, (Tally{2, 5}));
}

TEST(SubjectAreaTally, SixDocBruteForce) {
  Corpus c;
  c.documents.push_back(doc(2020, 3, {"COMP", "ENGI"}));
  c.documents.push_back(doc(2021, 0, {"BUSI"}));
  c.documents.push_back(doc(2019, 8, {"COMP"}));
  c.documents.push_back(doc(2022, 1, {}));
  c.documents.push_back(doc(2020, 5, {"MEDI", "COMP", "BUSI"}));
  c.documents.push_back(doc(std::nullopt, 2, {"ENGI"}));
  std::map<std::string, Tally> oracle;
  for (const auto& d : c.documents)
    for (const auto& a : d.subject_areas) {
      ++oracle[a].papers;
      oracle[a].citations += d.citations;
    }
  const auto t = subject_area_tally(c);
  ASSERT_EQ(t.size(), oracle.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t[i].second, oracle.at(t[i].first));
    if (i > 0) {
      EXPECT_GE(t[i - 1].second.papers, t[i].second.papers);
      if (t[i - 1].second.papers == t[i].second.papers) {
        EXPECT_LT(t[i - 1].first, t[i].first);
      }
    }
  }
}

TEST(CorpusInvariants, TallySums) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> areas{"COMP", "BUSI", "ENGI", "MEDI", "DECI"};
  for (int trial = 0; trial < 100; ++trial) {
    Corpus c;
    std::int64_t area_total = 0;
    std::int64_t year_valid = 0, year_cites = 0;
    for (std::size_t i = 0, n = rng() % 40; i < n; ++i) {
      std::set<std::string> s;
      for (const auto& a : areas)
        if (rng() % 3 == 0) s.insert(a);
      std::optional<int> y;
      if (rng() % 5 != 0) y = 2015 + static_cast<int>(rng() % 9);
      const auto cites = static_cast<std::int64_t>(rng() % 100);
      area_total += static_cast<std::int64_t>(s.size());
      if (y) {
        ++year_valid;
        year_cites += cites;
      }
      c.documents.push_back(doc(y, cites, s));
    }
    std::int64_t papers = 0;
    for (const auto& [a, t] : subject_area_tally(c)) papers += t.papers;
    EXPECT_EQ(papers, area_total);
    std::int64_t yp = 0, yc = 0;
    for (const auto& [y, t] : yearly_series(c)) {
      yp += t.papers;
      yc += t.citations;
    }
    EXPECT_EQ(yp, year_valid);
    EXPECT_EQ(yc, year_cites);
  }
}

}  // namespace
}  // namespace slr::corpus
