#include "slr/stemmer.hpp"

#include <array>
#include <utility>

namespace slr::textprep {

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_vowel_wxy(char c) { return is_vowel(c) || c == 'w' || c == 'x' || c == 'Y'; }

bool is_valid_li(char c) {
  switch (c) {
    case 'c': case 'd': case 'e': case 'g': case 'h':
    case 'k': case 'm': case 'n': case 'r': case 't':
      return true;
    default:
      return false;
  }
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         std::string_view(s).substr(s.size() - suffix.size()) == suffix;
}

/// Position after the first non-vowel that follows a vowel, searching from `from`.
std::size_t region_start(const std::string& s, std::size_t from) {
  std::size_t i = from;
  while (i < s.size() && !is_vowel(s[i])) ++i;
  while (i < s.size() && is_vowel(s[i])) ++i;
  return i < s.size() ? i + 1 : s.size();
}

/// Short syllable ending at `end` (exclusive).
bool short_syllable(const std::string& s, std::size_t end) {
  if (end >= 3 && !is_vowel_wxy(s[end - 1]) && is_vowel(s[end - 2]) && !is_vowel(s[end - 3])) {
    return true;
  }
  return end == 2 && !is_vowel(s[1]) && is_vowel(s[0]);
}

bool has_vowel(const std::string& s, std::size_t end) {
  for (std::size_t i = 0; i < end; ++i) {
    if (is_vowel(s[i])) return true;
  }
  return false;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
  int action;  // 0 replace, 1 delete-if-condition (step specific)
};

/// Longest rule whose suffix ends `s`; nullptr if none.
template <std::size_t N>
const Rule* longest_match(const std::string& s, const std::array<Rule, N>& rules) {
  const Rule* best = nullptr;
  for (const auto& r : rules) {
    if (ends_with(s, r.suffix) && (!best || r.suffix.size() > best->suffix.size())) best = &r;
  }
  return best;
}

void replace_tail(std::string& s, std::size_t suffix_len, std::string_view repl) {
  s.resize(s.size() - suffix_len);
  s.append(repl);
}

struct Regions {
  std::size_t p1;
  std::size_t p2;
};

Regions mark_regions(const std::string& s) {
  std::size_t p1 = std::string::npos;
  for (std::string_view prefix : {"gener", "commun", "arsen"}) {
    if (s.starts_with(prefix)) {
      p1 = prefix.size();
      break;
    }
  }
  if (p1 == std::string::npos) p1 = region_start(s, 0);
  return {p1, region_start(s, p1)};
}

const std::string* exception1(std::string_view w) {
  static const std::array<std::pair<std::string_view, std::string>, 18> table{{
      {"skis", "ski"},     {"skies", "sky"},     {"dying", "die"},   {"lying", "lie"},
      {"tying", "tie"},    {"idly", "idl"},      {"gently", "gentl"}, {"ugly", "ugli"},
      {"early", "earli"},  {"only", "onli"},     {"singly", "singl"}, {"sky", "sky"},
      {"news", "news"},    {"howe", "howe"},     {"atlas", "atlas"}, {"cosmos", "cosmos"},
      {"bias", "bias"},    {"andes", "andes"},
  }};
  for (const auto& [word, out] : table) {
    if (word == w) return &out;
  }
  return nullptr;
}

bool exception2(const std::string& s) {
  for (std::string_view w :
       {"inning", "outing", "canning", "herring", "earring", "proceed", "exceed", "succeed"}) {
    if (s == w) return true;
  }
  return false;
}

void step_1a(std::string& s) {
  if (ends_with(s, "'s'")) {
    s.resize(s.size() - 3);
  } else if (ends_with(s, "'s")) {
    s.resize(s.size() - 2);
  } else if (ends_with(s, "'")) {
    s.resize(s.size() - 1);
  }
  if (ends_with(s, "sses")) {
    replace_tail(s, 4, "ss");
  } else if (ends_with(s, "ied") || ends_with(s, "ies")) {
    replace_tail(s, 3, s.size() > 4 ? "i" : "ie");
  } else if (ends_with(s, "ss") || ends_with(s, "us")) {
    // unchanged
  } else if (ends_with(s, "s")) {
    if (s.size() >= 2 && has_vowel(s, s.size() - 2)) s.pop_back();
  }
}

void step_1b(std::string& s, const Regions& r) {
  static constexpr std::array<Rule, 6> rules{{
      {"eed", "ee", 0}, {"eedly", "ee", 0}, {"ed", "", 1},
      {"edly", "", 1},  {"ing", "", 1},      {"ingly", "", 1},
  }};
  const Rule* m = longest_match(s, rules);
  if (!m) return;
  const std::size_t start = s.size() - m->suffix.size();
  if (m->action == 0) {
    if (start >= r.p1) replace_tail(s, m->suffix.size(), m->replacement);
    return;
  }
  if (!has_vowel(s, start)) return;
  s.resize(start);
  if (ends_with(s, "at") || ends_with(s, "bl") || ends_with(s, "iz")) {
    s.push_back('e');
    return;
  }
  for (std::string_view dbl : {"bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt"}) {
    if (ends_with(s, dbl)) {
      s.pop_back();
      return;
    }
  }
  if (s.size() == r.p1 && short_syllable(s, s.size())) s.push_back('e');
}

void step_1c(std::string& s) {
  if (s.size() < 3) return;
  const char last = s.back();
  if ((last == 'y' || last == 'Y') && !is_vowel(s[s.size() - 2])) s.back() = 'i';
}

void step_2(std::string& s, const Regions& r) {
  static constexpr std::array<Rule, 24> rules{{
      {"tional", "tion", 0},  {"enci", "ence", 0},   {"anci", "ance", 0},
      {"abli", "able", 0},    {"entli", "ent", 0},   {"izer", "ize", 0},
      {"ization", "ize", 0},  {"ational", "ate", 0}, {"ation", "ate", 0},
      {"ator", "ate", 0},     {"alism", "al", 0},    {"aliti", "al", 0},
      {"alli", "al", 0},      {"fulness", "ful", 0}, {"ousli", "ous", 0},
      {"ousness", "ous", 0},  {"iveness", "ive", 0}, {"iviti", "ive", 0},
      {"biliti", "ble", 0},   {"bli", "ble", 0},     {"ogi", "og", 2},
      {"fulli", "ful", 0},    {"lessli", "less", 0}, {"li", "", 3},
  }};
  const Rule* m = longest_match(s, rules);
  if (!m) return;
  const std::size_t start = s.size() - m->suffix.size();
  if (start < r.p1) return;
  if (m->action == 2) {
    if (start == 0 || s[start - 1] != 'l') return;
  } else if (m->action == 3) {
    if (start == 0 || !is_valid_li(s[start - 1])) return;
  }
  replace_tail(s, m->suffix.size(), m->replacement);
}

void step_3(std::string& s, const Regions& r) {
  static constexpr std::array<Rule, 9> rules{{
      {"tional", "tion", 0}, {"ational", "ate", 0}, {"alize", "al", 0},
      {"icate", "ic", 0},    {"iciti", "ic", 0},    {"ical", "ic", 0},
      {"ful", "", 0},        {"ness", "", 0},       {"ative", "", 2},
  }};
  const Rule* m = longest_match(s, rules);
  if (!m) return;
  const std::size_t start = s.size() - m->suffix.size();
  if (start < r.p1) return;
  if (m->action == 2 && start < r.p2) return;
  replace_tail(s, m->suffix.size(), m->replacement);
}

void step_4(std::string& s, const Regions& r) {
  static constexpr std::array<Rule, 18> rules{{
      {"al", "", 0},   {"ance", "", 0}, {"ence", "", 0}, {"er", "", 0},    {"ic", "", 0},
      {"able", "", 0}, {"ible", "", 0}, {"ant", "", 0},  {"ement", "", 0}, {"ment", "", 0},
      {"ent", "", 0},  {"ism", "", 0},  {"ate", "", 0},  {"iti", "", 0},   {"ous", "", 0},
      {"ive", "", 0},  {"ize", "", 0},  {"ion", "", 2},
  }};
  const Rule* m = longest_match(s, rules);
  if (!m) return;
  const std::size_t start = s.size() - m->suffix.size();
  if (start < r.p2) return;
  if (m->action == 2 && (start == 0 || (s[start - 1] != 's' && s[start - 1] != 't'))) return;
  s.resize(start);
}

void step_5(std::string& s, const Regions& r) {
  if (s.empty()) return;
  const std::size_t start = s.size() - 1;
  if (s.back() == 'e') {
    if (start >= r.p2 || (start >= r.p1 && !short_syllable(s, start))) s.pop_back();
  } else if (s.back() == 'l') {
    if (start >= r.p2 && start > 0 && s[start - 1] == 'l') s.pop_back();
  }
}

}  // namespace

std::string stem(std::string_view word) {
  if (const auto* ex = exception1(word)) return *ex;
  if (word.size() < 3) return std::string(word);

  std::string s(word);
  if (s.front() == '\'') s.erase(0, 1);
  bool y_found = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'y' && (i == 0 || is_vowel(s[i - 1]))) {
      s[i] = 'Y';
      y_found = true;
    }
  }
  const Regions regions = mark_regions(s);

  step_1a(s);
  if (!exception2(s)) {
    step_1b(s, regions);
    step_1c(s);
    step_2(s, regions);
    step_3(s, regions);
    step_4(s, regions);
    step_5(s, regions);
  }
  if (y_found) {
    for (auto& c : s) {
      if (c == 'Y') c = 'y';
    }
  }
  return s;
}

}  // namespace slr::textprep
