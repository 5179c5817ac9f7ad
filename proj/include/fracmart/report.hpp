#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace fracmart::report {

inline constexpr const char* kVersion = "fracmart 1.0.0";

// Deterministic float formatting for CSV cells: same double, same bytes.
std::string fmt(double v);

class Csv {
public:
    explicit Csv(std::vector<std::string> columns);
    void add_row(std::vector<std::string> cells);
    std::string str() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

// UTC timestamp for run metadata; FRACMART_TIMESTAMP overrides it so that
// replayed runs can produce identical JSON summaries.
std::string timestamp();

// Run metadata block shared by every JSON summary.
nlohmann::json run_meta(std::uint64_t seed);

void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace fracmart::report
