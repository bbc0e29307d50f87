// Regenerates data/fixtures/: a Scopus-style export around a planted
// 5-topic corpus plus its source -> subject-area map.
#include <cstdio>
#include <cstdlib>
#include <filesystem>

#include "slr/error.hpp"
#include "slr/fileio.hpp"
#include "slr/synthetic.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data/fixtures";
  try {
    std::filesystem::create_directories(dir);
    slr::synthetic::PlantedOptions o;
    o.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7;
    o.topic_weights = {0.3, 0.25, 0.2, 0.15, 0.1};
    const auto f = slr::synthetic::make_bib_fixture(o);
    slr::write_file(dir / "synthetic_scopus.csv", f.csv);
    slr::write_file(dir / "synthetic_areas.csv", f.area_map);
  } catch (const slr::Error& e) {
    std::fprintf(stderr, "make_fixture: %s\n", e.what());
    return 1;
  }
  return 0;
}
