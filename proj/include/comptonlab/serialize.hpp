#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "comptonlab/format.hpp"
#include "comptonlab/sweep.hpp"

namespace comptonlab {

// A flat, ordered result row for single-shot computations.
struct ScalarRecord {
    std::map<std::string, std::string> metadata;
    std::vector<std::pair<std::string, std::string>> fields;

    void add(std::string name, double value) {
        fields.emplace_back(std::move(name), format_sig9(value));
    }
    void add_text(std::string name, std::string value) {
        fields.emplace_back(std::move(name), std::move(value));
    }
};

// CSV: UTF-8, comma separated, one header row, LF line endings, no trailing
// separator. JSON: a single {metadata, axes, values} object with numbers as
// plain decimal literals.
void write_grid_csv(std::ostream& os, const SweepGrid& grid);
void write_grid_json(std::ostream& os, const SweepGrid& grid);

void write_fig3_csv(std::ostream& os, const Fig3Panel& panel);
void write_fig3_json(std::ostream& os, const Fig3Panel& panel);

void write_record_csv(std::ostream& os, const ScalarRecord& record);
void write_record_json(std::ostream& os, const ScalarRecord& record);

/// FNV-1a 64-bit hash; used for the reproduction manifest.
std::uint64_t fnv1a64(std::string_view bytes);

/// Lowercase 16-digit hex of fnv1a64.
std::string fnv1a64_hex(std::string_view bytes);

} // namespace comptonlab
