#pragma once

#include <cstddef>

namespace hgg::detail {

struct FixtureText {
  const char* name;
  const char* text;
};

// Generated at configure time from fixtures/*.cert.
extern const FixtureText kFixtureTexts[];
extern const std::size_t kFixtureCount;

}  // namespace hgg::detail
