#include "slr/fileio.hpp"

#include <fstream>
#include <sstream>

#include "slr/error.hpp"

namespace slr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingColumn: return "MissingColumn";
    case ErrorKind::MalformedCsv: return "MalformedCsv";
    case ErrorKind::EmptyVocabulary: return "EmptyVocabulary";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NumericalError: return "NumericalError";
    case ErrorKind::SvdFailure: return "SvdFailure";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::MissingArtifact: return "MissingArtifact";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "read failed for " + path.string());
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot rename into " + path.string() + ": " + ec.message());
}

}  // namespace slr
