#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "sievebound/empirical.hpp"

namespace sievebound {

// JSON schema: {x, X, N (decimal string), counts, S, remainder: {sum, mean, max}}.
inline nlohmann::json to_json(const EmpiricalReport& report) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [r, c] : report.counts) counts[std::to_string(r)] = c;
    return nlohmann::json{
        {"x", report.x},
        {"X", report.set_size},
        {"N", report.n_max.get_str()},
        {"counts", counts},
        {"S", report.weighted_s},
        {"remainder",
         {{"sum", report.remainder_sum},
          {"mean", report.remainder_mean},
          {"max", report.remainder_max}}},
    };
}

// CSV: one row per r with its almost-prime count.
inline std::string counts_csv(const EmpiricalReport& report) {
    std::ostringstream out;
    out << "r,count\n";
    for (const auto& [r, c] : report.counts) out << r << "," << c << "\n";
    return out.str();
}

}  // namespace sievebound
