#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "wick/chart.hpp"
#include "wick/chart_map.hpp"
#include "wick/momentum.hpp"

namespace wick {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; syntax errors become InputError with line and column.
Json read_json_file(const std::string& path);

/// {"dimension", "order"?, "u": [[..order 0..], [..order 1..]], "corrections": [{"order", "u", "v"?}], "v"?}.
/// "order" defaults to the highest order with data.
Chart chart_from_json(const Json& j);
/// {"hol": [...], "antihol": [...]}; the dimension is the length of "hol".
VectorField field_from_json(const Json& j);
/// {"hol": [...], "inverse": [...]}.
ChartMap map_from_json(const Json& j);
/// {"dim", "structure": [[i, j, k, "c"], ...], "fields": [...]}, indices 1-based,
/// each entry setting c^i_{jk}. Unlisted constants are zero.
LieAction action_from_json(const Json& j);

Chart load_chart(const std::string& path);
VectorField load_field(const std::string& path);
ChartMap load_map(const std::string& path);
LieAction load_action(const std::string& path);

/// One expression string per order.
Json series_json(const FormalFunction& f);
Json scalar_series_json(const ScalarSeries& s);
Json check_json(const CheckReport& r);
std::string render(const ScalarSeries& s);

}  // namespace wick
