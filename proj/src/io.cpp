#include "wick/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wick/error.hpp"
#include "wick/expression.hpp"

namespace wick {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

RationalFunction expr(const Json& j, int n, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected an expression string");
  try {
    return parse_expression(j.get<std::string>(), n);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<RationalFunction> expr_list(const Json& j, int n, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of expressions");
  std::vector<RationalFunction> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(expr(j[k], n, where + "[" + std::to_string(k) + "]"));
  return out;
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<int>();
}

void put(std::vector<Tuple>& data, int order, Tuple t) {
  if (static_cast<int>(data.size()) <= order) data.resize(static_cast<std::size_t>(order) + 1);
  data[static_cast<std::size_t>(order)] = std::move(t);
}

template <class F>
auto with_file(const std::string& path, F&& f) {
  const Json j = read_json_file(path);
  try {
    return f(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": JSON syntax error at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

Chart chart_from_json(const Json& j) {
  const int n = integer(member(j, "dimension", "chart"), "chart.dimension");
  if (n < 1 || n > kMaxDim) throw InputError("chart.dimension must be between 1 and 4");
  std::vector<Tuple> u, v;
  bool has_v = false;
  int top = 0;
  auto tuples = [&](const Json& arr, std::vector<Tuple>& dst, const std::string& where) {
    if (!arr.is_array()) throw InputError(where + ": expected an array of per-order tuples");
    for (std::size_t s = 0; s < arr.size(); ++s) {
      put(dst, static_cast<int>(s), expr_list(arr[s], n, where + "[" + std::to_string(s) + "]"));
      top = std::max(top, static_cast<int>(s));
    }
  };
  tuples(member(j, "u", "chart"), u, "chart.u");
  if (j.contains("v") && !j.at("v").is_null()) {
    has_v = true;
    tuples(j.at("v"), v, "chart.v");
  }
  if (j.contains("corrections")) {
    const Json& cs = j.at("corrections");
    if (!cs.is_array()) throw InputError("chart.corrections: expected an array");
    for (std::size_t q = 0; q < cs.size(); ++q) {
      const std::string where = "chart.corrections[" + std::to_string(q) + "]";
      const int s = integer(member(cs[q], "order", where), where + ".order");
      if (s < 1) throw InputError(where + ".order must be at least 1");
      top = std::max(top, s);
      put(u, s, expr_list(member(cs[q], "u", where), n, where + ".u"));
      if (cs[q].contains("v")) {
        has_v = true;
        put(v, s, expr_list(cs[q].at("v"), n, where + ".v"));
      }
    }
  }
  // Gaps between stored orders are zero tuples.
  for (auto* data : {&u, &v})
    for (auto& t : *data)
      if (t.empty()) t = Tuple(static_cast<std::size_t>(n));
  const int order = j.contains("order") ? integer(j.at("order"), "chart.order") : top;
  if (has_v && v.empty()) v.emplace_back(static_cast<std::size_t>(n));
  return Chart(n, order, std::move(u), has_v ? std::optional(std::move(v)) : std::nullopt);
}

VectorField field_from_json(const Json& j) {
  const Json& hol = member(j, "hol", "field");
  if (!hol.is_array() || hol.empty()) throw InputError("field.hol: expected a non-empty array");
  const int n = static_cast<int>(hol.size());
  auto h = expr_list(hol, n, "field.hol");
  auto a = expr_list(member(j, "antihol", "field"), n, "field.antihol");
  if (a.size() != h.size()) throw InputError("field: hol and antihol have different lengths");
  return VectorField(std::move(h), std::move(a));
}

ChartMap map_from_json(const Json& j) {
  const Json& hol = member(j, "hol", "map");
  if (!hol.is_array() || hol.empty()) throw InputError("map.hol: expected a non-empty array");
  const int n = static_cast<int>(hol.size());
  return ChartMap(expr_list(hol, n, "map.hol"), expr_list(member(j, "inverse", "map"), n, "map.inverse"));
}

LieAction action_from_json(const Json& j) {
  const int m = integer(member(j, "dim", "action"), "action.dim");
  const Json& fs = member(j, "fields", "action");
  if (!fs.is_array() || static_cast<int>(fs.size()) != m)
    throw InputError("action.fields: expected " + std::to_string(m) + " fields");
  std::vector<VectorField> fields;
  for (std::size_t q = 0; q < fs.size(); ++q) {
    try {
      fields.push_back(field_from_json(fs[q]));
    } catch (const InputError& e) {
      throw InputError("action.fields[" + std::to_string(q) + "]: " + e.what());
    }
  }
  const auto mm = static_cast<std::size_t>(m);
  std::vector s(mm, std::vector(mm, std::vector<Scalar>(mm)));
  if (j.contains("structure")) {
    const Json& st = j.at("structure");
    if (!st.is_array()) throw InputError("action.structure: expected an array");
    for (std::size_t q = 0; q < st.size(); ++q) {
      const std::string where = "action.structure[" + std::to_string(q) + "]";
      const Json& e = st[q];
      if (!e.is_array() || e.size() != 4) throw InputError(where + ": expected [i, j, k, \"c\"]");
      int idx[3];
      for (int t = 0; t < 3; ++t) {
        idx[t] = integer(e[t], where);
        if (idx[t] < 1 || idx[t] > m) throw InputError(where + ": index out of range");
      }
      const RationalFunction c = e[3].is_number_integer() ? RationalFunction(e[3].get<long>()) : expr(e[3], 1, where);
      if (!c.is_constant()) throw InputError(where + ": structure constant must be a number");
      s[idx[0] - 1][idx[1] - 1][idx[2] - 1] = c.num().constant_value();
    }
  }
  return LieAction(std::move(fields), std::move(s));
}

Chart load_chart(const std::string& path) {
  return with_file(path, [](const Json& j) { return chart_from_json(j); });
}
VectorField load_field(const std::string& path) {
  return with_file(path, [](const Json& j) { return field_from_json(j); });
}
ChartMap load_map(const std::string& path) {
  return with_file(path, [](const Json& j) { return map_from_json(j); });
}
LieAction load_action(const std::string& path) {
  return with_file(path, [](const Json& j) { return action_from_json(j); });
}

Json series_json(const FormalFunction& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(c.to_string());
  return a;
}

Json scalar_series_json(const ScalarSeries& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(c.to_string());
  return a;
}

Json check_json(const CheckReport& r) {
  Json j = {{"name", r.name}, {"holds", r.holds}, {"cases", r.cases}};
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

std::string render(const ScalarSeries& s) {
  FormalFunction f(s.order());
  for (int k = 0; k <= s.order(); ++k) f[k] = RationalFunction(s[k]);
  return to_string(f);
}

}  // namespace wick
