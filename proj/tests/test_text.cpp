#include "slr/text.hpp"

#include <gtest/gtest.h>

#include "slr/fileio.hpp"
#include "test_util.hpp"

namespace slr::text {
namespace {

TEST(Sha256, KnownDigests) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Utf8, RoundTrip) {
  const std::string s = "na\xC3\xAFve \xCE\xA3\xCF\x8C \xD0\x96 \xF0\x9F\x98\x80";
  EXPECT_EQ(encode_utf8(decode_utf8(s)), s);
  const auto cps = decode_utf8(s);
  EXPECT_EQ(cps[2], U'ï');
  EXPECT_EQ(cps.back(), U'\U0001F600');
}

TEST(Utf8, InvalidBytesBecomeReplacement) {
  EXPECT_EQ(decode_utf8("a\xFF" "b"), std::u32string({U'a', 0xFFFD, U'b'}));
  // overlong encoding of '/' and a truncated sequence
  EXPECT_EQ(decode_utf8("\xC0\xAF").front(), char32_t{0xFFFD});
  EXPECT_EQ(decode_utf8("\xE2\x82").front(), char32_t{0xFFFD});
}

TEST(Letters, Classification) {
  EXPECT_TRUE(is_letter(U'a'));
  EXPECT_TRUE(is_letter(U'Z'));
  EXPECT_TRUE(is_letter(U'é'));
  EXPECT_TRUE(is_letter(U'Σ'));
  EXPECT_TRUE(is_letter(U'Ж'));
  EXPECT_FALSE(is_letter(U'3'));
  EXPECT_FALSE(is_letter(U'-'));
  EXPECT_FALSE(is_letter(U'×'));  // multiplication sign
  EXPECT_FALSE(is_letter(U'中'));  // CJK is outside the tables
}

TEST(FoldCase, LatinGreekCyrillic) {
  EXPECT_EQ(fold_case("Robotic PROCESS"), "robotic process");
  EXPECT_EQ(fold_case("\xC3\x89T\xC3\x89"), "\xC3\xA9t\xC3\xA9");          // ÉTÉ
  EXPECT_EQ(fold_case("\xCE\xA3\xCE\x9F"), "\xCF\x83\xCE\xBF");            // ΣΟ
  EXPECT_EQ(fold_case("\xD0\x96\xD0\x81"), "\xD0\xB6\xD1\x91");            // ЖЁ
  EXPECT_EQ(fold_case("123 !?"), "123 !?");
}

TEST(Whitespace, TrimAndCollapse) {
  EXPECT_EQ(trim("  a b \t\n"), "a b");
  EXPECT_EQ(trim("   "), "");
  EXPECT_EQ(collapse_whitespace("  Computers \t in\n\nIndustry "), "Computers in Industry");
  EXPECT_EQ(collapse_whitespace("a\xC2\xA0\xC2\xA0" "b"), "a b");  // no-break spaces
  EXPECT_EQ(collapse_whitespace(""), "");
}

TEST(FileIo, WriteReadAndMissing) {
  testing::TempDir dir("fileio");
  const auto p = dir.path() / "sub" / "x.txt";
  std::filesystem::create_directories(p.parent_path());
  write_file(p, "hello\n");
  EXPECT_EQ(read_file(p), "hello\n");
  write_file(p, "replaced");
  EXPECT_EQ(read_file(p), "replaced");
  EXPECT_SLR_ERROR(read_file(dir.path() / "nope.txt"), ErrorKind::IoError);
  // parent "directory" is a regular file
  EXPECT_SLR_ERROR(write_file(p / "x.txt", "x"), ErrorKind::IoError);
}

TEST(Error, MessageCarriesKind) {
  const Error e(ErrorKind::MissingColumn, "Title");
  EXPECT_EQ(e.kind(), ErrorKind::MissingColumn);
  EXPECT_NE(std::string(e.what()).find("Title"), std::string::npos);
  EXPECT_FALSE(to_string(ErrorKind::SvdFailure).empty());
}

}  // namespace
}  // namespace slr::text
