#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace multiassoc {

enum class Tier { Quick, Desk, Full };
Tier parse_tier(std::string_view text);
std::string to_string(Tier t);
int tier_max_n(Tier t);  // 4, 5, 8

struct NRange {
    int lo = 1;
    int hi = 1;
};
// "5" or "1..5"
NRange parse_n_range(std::string_view text);

struct CellCheck {
    std::string cell;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ReproduceReport {
    std::string id;
    std::vector<CellCheck> cells;
    std::vector<std::string> notes;
    bool passed() const;
    std::size_t failures() const;
};

const std::vector<std::string>& reproducible_ids();
// throws std::invalid_argument on unknown ids and std::out_of_range on unsupported n
ReproduceReport reproduce(const std::string& id, std::optional<NRange> range, Tier tier, int threads = 1);
void write_report(std::ostream& out, const ReproduceReport& report);

}  // namespace multiassoc
