#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "multiassoc/fan.hpp"

namespace multiassoc {

// MULTIASSOC_GOLDEN_DIR in the environment overrides the compiled-in location.
std::filesystem::path golden_dir();

struct BoxedCell {
    int row = 0;     // 1-based
    int column = 0;  // 1-based coordinate
    long value = 0;
};

struct GoldenMatrix {
    std::vector<int> letters;
    std::vector<std::vector<long>> rows;
    std::vector<BoxedCell> boxed;
};
GoldenMatrix load_golden_matrix(const std::string& id);

struct GoldenStats {
    std::vector<FanStats> columns;  // one per n, starting at n = 1
    std::vector<std::string> ridge_ratio;
    std::vector<std::string> cone_ratio;
};
GoldenStats load_golden_stats(const std::string& id);

}  // namespace multiassoc
