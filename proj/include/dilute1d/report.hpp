#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dilute1d/ed_oracle.hpp"
#include "dilute1d/lieb_liniger.hpp"
#include "dilute1d/scattering.hpp"
#include "dilute1d/trial_states.hpp"
#include "dilute1d/validator.hpp"

namespace dilute1d {

using Cell = std::variant<double, long long, std::string>;

/// Rectangular result set written as CSV or as a JSON array of objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// %.17g, with nan/inf spelled the JSON-friendly way.
std::string format_number(double x);

std::string to_csv(const Table& t);
nlohmann::json to_json(const Table& t);

nlohmann::json to_json(const ScatteringResult& r, int samples = 0);
nlohmann::json to_json(const LLGroundState& s, bool with_density = false);
nlohmann::json to_json(const SpectralResult& r);
nlohmann::json to_json(const TrialState& t, const TrialEnergy& e);
nlohmann::json to_json(const Envelope& e);
nlohmann::json to_json(const ExpansionReport& r);
nlohmann::json to_json(const RobinsonCheck& r);

/// Writes `text` to `path`, creating parent directories. Throws IoError with
/// the system message on failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace dilute1d
