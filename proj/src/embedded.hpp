#pragma once

#include <cstddef>

namespace pentaca::embedded {

struct File {
  const char* name;
  const char* text;
};

extern const char* const rules_text;
extern const File scenario_files[];
extern const std::size_t scenario_file_count;

} // namespace pentaca::embedded
