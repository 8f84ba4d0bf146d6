#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace redei {

// One verified claim instance. The string fields carry already-rendered
// values so JSON and CSV agree byte for byte across runs.
struct VerificationRecord {
    std::string theorem;
    std::uint32_t p = 0;
    std::string params;
    std::string claimed;
    std::string observed;
    bool passed = false;
    std::string witness;
    std::uint64_t elapsed_ms = 0;
    // Orders records numerically (theorem, p, grid position) regardless of
    // which worker produced them; not serialized.
    std::vector<std::uint64_t> sort_key;
};

// "[2,5]" canonical rendering for set-valued fields.
std::string render_set(const std::vector<std::uint32_t>& s);

void sort_records(std::vector<VerificationRecord>& records);

// Array of objects with stable field order.
std::string render_json(const std::vector<VerificationRecord>& records);

// Fixed header theorem,p,params,claimed,observed,passed,witness,elapsed_ms;
// fields quoted per RFC 4180 when they contain commas or quotes.
std::string render_csv(const std::vector<VerificationRecord>& records);

std::string render_report(const std::vector<VerificationRecord>& records,
                          const std::string& format);

// Writes atomically-ish (truncate + write + flush); throws IoError.
void write_text_file(const std::string& path, const std::string& content);

} // namespace redei
