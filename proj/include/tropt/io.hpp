#pragma once

// JSON encoding of semifield data. The zero element is written as the
// string "-inf" (null is accepted on input); exact rationals that are not
// integers travel as "a/b" strings so that nothing is rounded.

#include <algorithm>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "tropt/schedule.hpp"

namespace tropt::io {

using json = nlohmann::json;

json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& doc);
/// Pretty form with two-space indent and a trailing newline.
std::string dump(const json& doc);

// -- scalars ------------------------------------------------------------------

template <class S>
S scalar_from_json(const json& j, const std::string& where = "value") {
  using V = typename S::value_type;
  const std::string zero = S::policy_type::zero_text();
  auto fail = [&](const std::string& why) -> S {
    throw Error(Errc::ParseError, where + ": " + why + " (got " + j.dump() + ")");
  };
  if (j.is_null()) return S::zero();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == zero) return S::zero();
    Rational r;
    try {
      r = parse_rational(s);
    } catch (const Error&) {
      return fail("expected a number, \"a/b\" or \"" + zero + "\"");
    }
    return S(NumericTraits<V>::from_rational(r));
  }
  if (j.is_number_integer()) return S(NumericTraits<V>::from_rational(Rational(j.get<std::int64_t>())));
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if constexpr (NumericTraits<V>::exact) {
      return S(rational_from_double(d));
    } else {
      return S(d);
    }
  }
  return fail("expected a number, \"a/b\" or \"" + zero + "\"");
}

template <class S>
json to_json(const S& s)
  requires is_scalar_v<S>
{
  using V = typename S::value_type;
  if (s.is_zero()) return S::policy_type::zero_text();
  if constexpr (NumericTraits<V>::exact) {
    const auto& v = s.value();
    if (v.denominator() == 1) return v.numerator();
    return NumericTraits<V>::to_string(v);
  } else {
    return s.value();
  }
}

// -- vectors and matrices -----------------------------------------------------

template <class S>
Vector<S> vector_from_json(const json& j, const std::string& where = "vector") {
  if (!j.is_array()) throw Error(Errc::ParseError, where + ": expected an array");
  Vector<S> v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[i] = scalar_from_json<S>(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

template <class S, bool Row>
json to_json(const BasicVector<S, Row>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

/// {"rows": r, "cols": c, "data": [[...], ...]}; a bare array of rows is also accepted.
template <class S>
Matrix<S> matrix_from_json(const json& j, const std::string& where = "matrix") {
  const json* data = &j;
  std::optional<std::size_t> rows, cols;
  if (j.is_object()) {
    if (!j.contains("data")) throw Error(Errc::ParseError, where + ": missing \"data\"");
    data = &j.at("data");
    if (j.contains("rows")) rows = j.at("rows").get<std::size_t>();
    if (j.contains("cols")) cols = j.at("cols").get<std::size_t>();
  }
  if (!data->is_array()) throw Error(Errc::ParseError, where + ": \"data\" must be an array of rows");
  const std::size_t r = data->size();
  const std::size_t c = r ? (*data)[0].size() : cols.value_or(0);
  if (rows && *rows != r) {
    throw Error(Errc::ParseError, where + ": \"rows\" is " + std::to_string(*rows) + " but data has " +
                                      std::to_string(r));
  }
  if (cols && *cols != c) {
    throw Error(Errc::ParseError, where + ": \"cols\" is " + std::to_string(*cols) + " but data has " +
                                      std::to_string(c));
  }
  Matrix<S> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const json& row = (*data)[i];
    if (!row.is_array() || row.size() != c) {
      throw Error(Errc::ParseError, where + ": row " + std::to_string(i) + " must have " +
                                        std::to_string(c) + " entries");
    }
    for (std::size_t k = 0; k < c; ++k) {
      m(i, k) = scalar_from_json<S>(row[k], where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
  }
  return m;
}

template <class S>
json to_json(const Matrix<S>& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) data.push_back(to_json(m.row(i)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

template <class T>
json to_json(const std::vector<T>& items) {
  json out = json::array();
  for (const auto& x : items) out.push_back(to_json(x));
  return out;
}

// -- problems -----------------------------------------------------------------

namespace detail {

inline bool present(const json& j, const char* key) { return j.contains(key) && !j.at(key).is_null(); }

}  // namespace detail

template <class S>
OptProblem<S> problem_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "problem file must hold a JSON object");
  for (const auto& [key, _] : j.items()) {
    static const char* known[] = {"kind", "A", "B", "p", "q", "g", "h", "r"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw Error(Errc::ParseError, "unknown problem field \"" + key + "\"");
    }
  }
  if (!detail::present(j, "kind")) throw Error(Errc::ParseError, "problem is missing \"kind\"");
  if (!detail::present(j, "A")) throw Error(Errc::ParseError, "problem is missing \"A\"");
  OptProblem<S> pr;
  pr.kind = parse_kind(j.at("kind").get<std::string>());
  pr.a = matrix_from_json<S>(j.at("A"), "A");
  if (detail::present(j, "B")) pr.b = matrix_from_json<S>(j.at("B"), "B");
  if (detail::present(j, "p")) pr.p = vector_from_json<S>(j.at("p"), "p");
  if (detail::present(j, "q")) pr.q = vector_from_json<S>(j.at("q"), "q");
  if (detail::present(j, "g")) pr.g = vector_from_json<S>(j.at("g"), "g");
  if (detail::present(j, "h")) pr.h = vector_from_json<S>(j.at("h"), "h");
  if (detail::present(j, "r")) pr.r = scalar_from_json<S>(j.at("r"), "r");
  return pr;
}

template <class S>
json to_json(const OptProblem<S>& pr) {
  json out{{"kind", std::string(kind_name(pr.kind))}, {"A", to_json(pr.a)}};
  auto opt = [&](const char* key, const auto& v) { out[key] = v ? to_json(*v) : json(nullptr); };
  opt("B", pr.b);
  opt("p", pr.p);
  opt("q", pr.q);
  opt("g", pr.g);
  opt("h", pr.h);
  opt("r", pr.r);
  return out;
}

template <class S>
json to_json(const SolutionSet<S>& set) {
  return json{{"generator", to_json(set.generator)},
              {"lowerU", to_json(set.lower)},
              {"upperU", set.upper ? to_json(*set.upper) : json(nullptr)}};
}

template <class S>
json to_json(const OptResult<S>& res) {
  return json{{"minimum", to_json(res.minimum)},
              {"solutions", to_json(res.solutions)},
              {"x", to_json(res.canonical)},
              {"unique", res.solutions.unique()},
              {"warnings", res.warnings}};
}

template <class S>
json to_json(const GeneralTerms<S>& t) {
  return json{{"traceSum", to_json(t.trace_sum)},
              {"hgSum", to_json(t.hg_sum)},
              {"mixedSum", to_json(t.mixed_sum)},
              {"qpSum", to_json(t.qp_sum)},
              {"r", to_json(t.r)}};
}

// -- schedules ----------------------------------------------------------------

template <class S>
ScheduleSpec<S> schedule_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "schedule file must hold a JSON object");
  static const char* required[] = {"startFinish", "startStart", "earliestStart",
                                   "latestStart", "windowLower", "windowUpper"};
  for (const char* key : required) {
    if (!j.contains(key)) throw Error(Errc::ParseError, std::string("schedule is missing \"") + key + "\"");
  }
  ScheduleSpec<S> spec;
  if (j.contains("activities")) spec.activities = j.at("activities").get<std::vector<std::string>>();
  spec.start_finish = matrix_from_json<S>(j.at("startFinish"), "startFinish");
  spec.start_start = matrix_from_json<S>(j.at("startStart"), "startStart");
  spec.earliest_start = vector_from_json<S>(j.at("earliestStart"), "earliestStart");
  spec.latest_start = vector_from_json<S>(j.at("latestStart"), "latestStart");
  spec.window_lower = vector_from_json<S>(j.at("windowLower"), "windowLower");
  spec.window_upper = vector_from_json<S>(j.at("windowUpper"), "windowUpper");
  return spec;
}

template <class S>
json to_json(const ScheduleSpec<S>& spec) {
  return json{{"activities", spec.activities},
              {"startFinish", to_json(spec.start_finish)},
              {"startStart", to_json(spec.start_start)},
              {"earliestStart", to_json(spec.earliest_start)},
              {"latestStart", to_json(spec.latest_start)},
              {"windowLower", to_json(spec.window_lower)},
              {"windowUpper", to_json(spec.window_upper)}};
}

template <class S>
json to_json(const SumFamilies<S>& f) {
  return json{{"S", to_json(f.s)}, {"T", to_json(f.t)}};
}

template <class S>
json to_json(const ScheduleLedger<S>& led) {
  return json{{"powersA", to_json(led.a_powers)},
              {"powersB", to_json(led.b_powers)},
              {"TrB", to_json(led.tr_b)},
              {"Bstar", to_json(led.b_star)},
              {"hBstar", to_json(led.h_b_star)},
              {"hBstarG", to_json(led.h_b_star_g)},
              {"S", to_json(led.families.s)},
              {"T", to_json(led.families.t)},
              {"hT", to_json(led.h_t)},
              {"qS", to_json(led.q_s)},
              {"hTg", to_json(led.h_t_g)},
              {"hTp", to_json(led.h_t_p)},
              {"qSg", to_json(led.q_s_g)},
              {"qSp", to_json(led.q_s_p)},
              {"sums",
               {{"traceS", to_json(led.trace_sum)},
                {"hTg", to_json(led.hg_sum)},
                {"qSg", to_json(led.qg_sum)},
                {"hTp", to_json(led.hp_sum)},
                {"qSp", to_json(led.qp_sum)}}},
              {"thetaInvQA", to_json(led.theta_q_a)},
              {"upperRow", to_json(led.upper_row)},
              {"closureBase", to_json(led.closure_base)}};
}

template <class S>
json to_json(const SolutionLine<S>& line) {
  return json{{"direction", to_json(line.direction)},
              {"coefficients", to_json(line.coefficients)},
              {"interval", json::array({to_json(line.v_lower), to_json(line.v_upper)})}};
}

template <class S>
json schedule_result_to_json(const ScheduleSpec<S>& spec, const ScheduleResult<S>& res,
                             bool intermediates, double eps = kDefaultEps) {
  json critical = json::array();
  for (std::size_t i : res.critical) {
    critical.push_back(spec.activities.empty() ? json(i) : json(spec.activities[i]));
  }
  const auto line = collapse_solution_line(res, eps);
  json out{{"theta", to_json(res.theta)},
           {"x", to_json(res.initiation)},
           {"completion", to_json(res.completion)},
           {"adjustedStart", to_json(res.adjusted_start)},
           {"adjustedFinish", to_json(res.adjusted_finish)},
           {"flowTimes", to_json(res.flow_times)},
           {"critical", std::move(critical)},
           {"activities", spec.activities},
           {"solutions", to_json(res.solutions)},
           {"unique", res.solutions.unique(eps)},
           {"line", line ? to_json(*line) : json(nullptr)},
           {"warnings", res.warnings}};
  if (intermediates) out["intermediates"] = to_json(res.ledger);
  return out;
}

}  // namespace tropt::io
