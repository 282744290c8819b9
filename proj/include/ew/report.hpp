#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "ew/verifier.hpp"

namespace ew {

using Json = nlohmann::ordered_json;

Json to_json(const PairOutcome& p, const RootSystem& rs);
Json to_json(const VerificationReport& r, const RootSystem& rs, bool with_elapsed = true);

/// One line per field, for humans.
std::string report_text(const VerificationReport& r, const RootSystem& rs);
/// Header line plus one data line.
std::string report_csv(const VerificationReport& r);

/// Completed enumeration units of an interrupted run.
struct Checkpoint {
    std::string factor;    // FactorType::name()
    std::string strategy;  // "rescaled" or "literal"
    double elapsed_ms = 0;
    std::map<std::size_t, Tally> units;
};

/// Written to a temporary file and renamed over `path`.
void write_checkpoint(const std::string& path, const Checkpoint& c);
/// nullopt if the file does not exist. Throws std::runtime_error if unreadable.
std::optional<Checkpoint> read_checkpoint(const std::string& path);

}  // namespace ew
