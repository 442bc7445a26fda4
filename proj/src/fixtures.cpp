#include <cstdlib>
#include <filesystem>

#include "fixture_data.hpp"
#include "hgg/certify.hpp"
#include "hgg/error.hpp"

namespace hgg {

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < detail::kFixtureCount; ++i) names.emplace_back(detail::kFixtureTexts[i].name);
  return names;
}

Certificate load_fixture(const std::string& name) {
  for (std::size_t i = 0; i < detail::kFixtureCount; ++i) {
    if (name != detail::kFixtureTexts[i].name) continue;
    if (const char* dir = std::getenv("HGG_FIXTURE_DIR"); dir && *dir)
      return load_certificate(std::filesystem::path(dir) / (name + ".cert"));
    return parse_certificate(detail::kFixtureTexts[i].text);
  }
  throw UnknownLabel("no fixture named '" + name + "'");
}

std::vector<Certificate> builtin_fixtures() {
  return {load_fixture("C-1"), load_fixture("C-10"), load_fixture("C-42"), load_fixture("C-59")};
}

}  // namespace hgg
