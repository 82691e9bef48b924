#pragma once

#include <string_view>
#include <vector>

namespace qcss::golden {

struct Entry {
    std::string_view filename;
    std::string_view document;
};

/// The transcribed worked-example corpus shipped under data/golden/.
const std::vector<Entry>& corpus();

std::string_view q16_interleaved();
std::string_view thm41_n9();
std::string_view thm42_n9();

}  // namespace qcss::golden
