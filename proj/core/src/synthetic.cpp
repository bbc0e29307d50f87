#include "slr/synthetic.hpp"

#include <algorithm>
#include <array>

#include "slr/csv.hpp"
#include "slr/error.hpp"
#include "slr/random.hpp"

namespace slr::synthetic {

PlantedCorpus make_planted_corpus(const PlantedOptions& o, const std::vector<std::string>& vocabulary) {
  if (o.topics < 1 || o.support_size < 1 || o.docs < 0 || o.mean_length - o.length_jitter < 1 ||
      o.length_jitter < 0 || o.purity < 0.0 || o.purity > 1.0) {
    throw Error(ErrorKind::BadConfig, "invalid planted corpus options");
  }
  const auto total_terms = static_cast<std::size_t>(o.topics * o.support_size);
  if (!vocabulary.empty() && vocabulary.size() != total_terms) {
    throw Error(ErrorKind::BadConfig, "vocabulary must hold topics * support_size words");
  }
  if (!o.topic_weights.empty() && o.topic_weights.size() != static_cast<std::size_t>(o.topics)) {
    throw Error(ErrorKind::BadConfig, "topic_weights must have one entry per topic");
  }
  double weight_total = 0.0;
  for (double w : o.topic_weights) {
    if (!(w >= 0.0)) throw Error(ErrorKind::BadConfig, "topic weights must be non-negative");
    weight_total += w;
  }
  if (!o.topic_weights.empty() && !(weight_total > 0.0)) {
    throw Error(ErrorKind::BadConfig, "topic weights sum to zero");
  }
  PlantedCorpus out;
  out.supports.resize(o.topics);
  for (int k = 0; k < o.topics; ++k) {
    for (int j = 0; j < o.support_size; ++j) {
      const auto idx = static_cast<std::size_t>(k * o.support_size + j);
      out.supports[k].push_back(vocabulary.empty()
                                    ? "t" + std::to_string(k) + "w" + std::to_string(j)
                                    : vocabulary[idx]);
    }
  }

  Rng rng(o.seed);
  for (int d = 0; d < o.docs; ++d) {
    int topic = d % o.topics;
    if (!o.topic_weights.empty()) {
      double u = rng.uniform() * weight_total;
      topic = o.topics - 1;
      for (int k = 0; k < o.topics; ++k) {
        if (u < o.topic_weights[k]) {
          topic = k;
          break;
        }
        u -= o.topic_weights[k];
      }
    }
    const auto len = static_cast<int>(o.mean_length - o.length_jitter +
                                      static_cast<int>(rng.below(2 * o.length_jitter + 1)));
    textprep::TokenizedDoc doc;
    char id[32];
    std::snprintf(id, sizeof id, "p%05d", d);
    doc.id = id;
    for (int i = 0; i < len; ++i) {
      int k = topic;
      if (o.purity < 1.0 && rng.uniform() >= o.purity) k = static_cast<int>(rng.below(o.topics));
      doc.tokens.push_back(out.supports[k][rng.below(o.support_size)]);
    }
    out.docs.push_back(std::move(doc));
    out.doc_topic.push_back(topic);
  }
  return out;
}

const std::vector<std::string>& fixture_words() {
  static const std::vector<std::string> words{
      "hospital", "patient",  "nurse",     "clinic",   "surgery",    "pharmacy",
      "invoice",  "ledger",   "audit",     "banking",  "payroll",    "tax",
      "factory",  "assembly", "welding",   "machining", "warehouse", "inventory",
      "student",  "teacher",  "classroom", "exam",     "curriculum", "lecture",
      "grid",     "turbine",  "solar",     "battery",  "voltage",    "pipeline"};
  return words;
}

namespace {

constexpr std::array<const char*, 6> kSources{
    "Computers in Industry",        "Journal of Health Informatics",
    "Accounting Systems Review",    "International Journal of Production Research",
    "Computers  and  Education",    "Energy Automation Letters"};

constexpr std::array<const char*, 12> kAreaMap{
    "Computers in Industry",   "COMP", "Computers in Industry",   "ENGI",
    "Journal of Health Informatics", "MEDI", "Accounting Systems Review", "BUSI",
    "International Journal of Production Research", "ENGI",
    "International Journal of Production Research", "BUSI"};

}  // namespace

BibFixture make_bib_fixture(const PlantedOptions& options, int blank_abstracts) {
  const auto& words = fixture_words();
  const auto needed = static_cast<std::size_t>(std::max(options.topics, 0) * std::max(options.support_size, 0));
  if (needed > words.size()) {
    throw Error(ErrorKind::BadConfig, "the fixture has " + std::to_string(words.size()) + " words");
  }
  BibFixture f;
  f.planted = make_planted_corpus(options, {words.begin(), words.begin() + static_cast<std::ptrdiff_t>(needed)});
  Rng rng(options.seed ^ 0x9e3779b97f4a7c15ULL);

  f.csv = csv::format_row({"Authors", "Title", "Year", "Source title", "Cited by", "Abstract", "EID"});
  f.csv += "\n";
  double max_weight = 0.0;
  for (double w : options.topic_weights) max_weight = std::max(max_weight, w);
  // Larger planted topics draw more citations, so interest and impact agree.
  auto citation_range = [&](int topic) -> std::uint64_t {
    if (topic < 0 || max_weight == 0.0) return 60;
    return 20 + static_cast<std::uint64_t>(60.0 * options.topic_weights[topic] / max_weight);
  };
  auto row = [&](std::size_t n, const std::string& abstract, int topic) {
    const int year = 2015 + static_cast<int>(rng.below(9));
    const std::string cited = rng.below(10) == 0 ? "" : std::to_string(rng.below(citation_range(topic)));
    const char* source = kSources[rng.below(kSources.size())];
    const std::string title = "Study " + std::to_string(n + 1) + " of process automation";
    f.csv += csv::format_row({"Author, A.", title, std::to_string(year), source, cited, abstract,
                              "2-s2.0-" + std::to_string(1000000 + n)});
    f.csv += "\n";
  };

  std::size_t n = 0;
  for (const auto& doc : f.planted.docs) {
    std::string abstract = "In " + std::to_string(2000 + rng.below(30)) + ", the";
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
      abstract += ' ';
      abstract += doc.tokens[i];
      if (i % 9 == 8) abstract += i % 2 == 0 ? ", and" : ". It was";
    }
    abstract += " (" + std::to_string(rng.below(500)) + "; " + std::to_string(rng.below(100)) + ".5%).";
    row(n, abstract, f.planted.doc_topic[n]);
    ++n;
  }
  for (int b = 0; b < blank_abstracts; ++b) {
    row(n, b % 2 == 0 ? "" : "   ", -1);
    ++n;
  }

  f.area_map = "source,area_code\n";
  for (std::size_t i = 0; i < kAreaMap.size(); i += 2) {
    f.area_map += csv::format_row({kAreaMap[i], kAreaMap[i + 1]}) + "\n";
  }
  return f;
}

}  // namespace slr::synthetic
