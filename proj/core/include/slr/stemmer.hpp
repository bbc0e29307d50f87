#pragma once

#include <string>
#include <string_view>

namespace slr::textprep {

/// Snowball English ("Porter2") stemmer, matching libstemmer/SnowballC 2.x.
/// Input is expected lowercase; words shorter than three bytes are returned
/// unchanged. Non-ASCII bytes are treated as consonants.
std::string stem(std::string_view word);

}  // namespace slr::textprep
