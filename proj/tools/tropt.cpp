// tropt: command-line front end for the tropical solvers.
//
//   tropt solve       problem.json
//   tropt schedule    schedule.json
//   tropt solve-ineq  system.json     {"A": matrix, "b": vector|null, "d": vector|null}
//   tropt eig         matrix.json
//   tropt star        matrix.json
//   tropt verify      problem-or-schedule.json --x '[2,3,1]'
//
// Exit status: 0 success, 1 input error, 2 infeasible instance.

#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tropt/io.hpp"

namespace {

using tropt::Error;
using tropt::io::json;
namespace io = tropt::io;

struct Options {
  std::string input;
  std::string output;
  std::string point;
  bool exact = false;
  bool intermediates = false;
  bool summary = false;
  double eps = tropt::kDefaultEps;
};

bool is_schedule(const json& doc) { return doc.is_object() && doc.contains("startFinish"); }

template <class S>
json family_intermediates(const tropt::Matrix<S>& a, const tropt::Matrix<S>& b) {
  const auto f = tropt::sum_families(a, b);
  return json{{"S", io::to_json(f.s)},
              {"T", io::to_json(f.t)},
              {"Bstar", io::to_json(tropt::kleene_star(b))},
              {"TrB", io::to_json(tropt::big_tr(b))}};
}

template <class S>
json run_solve(const json& doc, const Options& opt) {
  const auto pr = io::problem_from_json<S>(doc);
  const auto res = tropt::solve(pr, opt.eps);
  json out = io::to_json(res);
  out["kind"] = std::string(tropt::kind_name(pr.kind));
  if (opt.intermediates) {
    json inter{{"spectralRadius", io::to_json(tropt::spectral_radius(pr.a))},
               {"powersA", io::to_json(tropt::power_sequence(pr.a, pr.dim()))}};
    if (pr.b) inter.update(family_intermediates(pr.a, *pr.b));
    if (pr.kind == tropt::ProblemKind::General) {
      const std::size_t n = pr.dim();
      const tropt::Vector<S> zero(n);
      inter["terms"] = io::to_json(tropt::general_terms(
          pr.a, *pr.b, pr.p.value_or(zero), conj(*pr.q), pr.g.value_or(zero), conj(*pr.h),
          pr.r.value_or(S::zero())));
    }
    out["intermediates"] = std::move(inter);
  }
  return out;
}

template <class S>
void print_summary(const tropt::ScheduleSpec<S>& spec, const tropt::ScheduleResult<S>& res) {
  std::cerr << "theta = " << res.theta << "\n";
  std::cerr << std::left << std::setw(14) << "activity" << std::setw(12) << "start" << std::setw(12) << "finish"
            << "flow\n";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const std::string name = spec.activities.empty() ? std::to_string(i + 1) : spec.activities[i];
    const bool critical =
        std::find(res.critical.begin(), res.critical.end(), i) != res.critical.end();
    std::cerr << std::setw(14) << name << std::setw(12) << res.adjusted_start[i].to_string() << std::setw(12)
              << res.adjusted_finish[i].to_string() << res.flow_times[i] << (critical ? "  *" : "") << "\n";
  }
  std::cerr << "(* attains the maximum flow time)\n";
}

template <class S>
json run_schedule(const json& doc, const Options& opt) {
  const auto spec = io::schedule_from_json<S>(doc);
  const auto res = tropt::solve_schedule(spec, opt.eps);
  if (opt.summary) print_summary(spec, res);
  return io::schedule_result_to_json(spec, res, opt.intermediates, opt.eps);
}

template <class S>
json run_solve_ineq(const json& doc, const Options& opt) {
  if (!doc.is_object() || !doc.contains("A")) {
    throw Error(tropt::Errc::ParseError, "system file needs \"A\" and at least one of \"b\", \"d\"");
  }
  const auto a = io::matrix_from_json<S>(doc.at("A"), "A");
  const bool has_b = io::detail::present(doc, "b");
  const bool has_d = io::detail::present(doc, "d");
  if (has_b && has_d) {
    const auto set = tropt::solve_combined(a, io::vector_from_json<S>(doc.at("b"), "b"),
                                           io::vector_from_json<S>(doc.at("d"), "d"), opt.eps);
    return json{{"form", "Ax + b <= x, x <= d"}, {"solutions", io::to_json(set)},
                {"x", io::to_json(set.representative())}};
  }
  if (has_b) {
    const auto set = tropt::solve_fixpoint_lower(a, io::vector_from_json<S>(doc.at("b"), "b"), opt.eps);
    return json{{"form", "Ax + b <= x"}, {"solutions", io::to_json(set)},
                {"x", io::to_json(set.representative())}};
  }
  if (has_d) {
    const auto x = tropt::solve_upper_bounded(a, io::vector_from_json<S>(doc.at("d"), "d"));
    return json{{"form", "Ax <= d"}, {"xMax", io::to_json(x)}};
  }
  throw Error(tropt::Errc::ParseError, "system file needs at least one of \"b\", \"d\"");
}

template <class S>
tropt::Matrix<S> read_matrix(const json& doc) {
  return io::matrix_from_json<S>(doc.is_object() && doc.contains("A") ? doc.at("A") : doc);
}

template <class S>
json run_eig(const json& doc, const Options&) {
  const auto a = read_matrix<S>(doc);
  const S lambda = tropt::spectral_radius(a);
  json out{{"spectralRadius", io::to_json(lambda)}};
  out["eigenvector"] = lambda.is_zero() ? json(nullptr) : io::to_json(tropt::eigenvector(a));
  return out;
}

template <class S>
json run_star(const json& doc, const Options&) {
  const auto a = read_matrix<S>(doc);
  const S tr = tropt::big_tr(a);
  json out{{"star", io::to_json(tropt::kleene_star(a))}, {"Tr", io::to_json(tr)}};
  out["warnings"] = json::array();
  if (!(tr <= S::one())) {
    out["warnings"].push_back("Tr = " + tr.to_string() +
                              " exceeds one: the star is the truncated sum I + ... + A^(n-1)");
  }
  return out;
}

template <class S>
json run_verify(const json& doc, const Options& opt) {
  if (opt.point.empty()) throw Error(tropt::Errc::ParseError, "verify needs --x");
  json xj;
  try {
    xj = json::parse(opt.point);
  } catch (const json::parse_error& e) {
    throw Error(tropt::Errc::ParseError, std::string("--x: ") + e.what());
  }
  const auto x = io::vector_from_json<S>(xj, "x");
  tropt::OptProblem<S> pr;
  tropt::OptResult<S> res;
  if (is_schedule(doc)) {
    const auto spec = io::schedule_from_json<S>(doc);
    const auto sched = tropt::solve_schedule(spec, opt.eps);
    pr = tropt::build_problem(spec);
    res = tropt::OptResult<S>{sched.theta, sched.solutions, sched.initiation, sched.warnings};
  } else {
    pr = io::problem_from_json<S>(doc);
    res = tropt::solve(pr, opt.eps);
  }
  const auto v = tropt::verify_solution(pr, res, x, opt.eps);
  json out{{"ok", v.ok()},
           {"status", std::string(tropt::verify_status_name(v.status))},
           {"detail", v.detail},
           {"minimum", io::to_json(res.minimum)}};
  if (x.size() == pr.dim() && x.regular()) out["objective"] = io::to_json(tropt::objective_value(pr, x));
  return out;
}

template <class S>
json dispatch(const std::string& cmd, const json& doc, const Options& opt) {
  if (cmd == "solve") return run_solve<S>(doc, opt);
  if (cmd == "schedule") return run_schedule<S>(doc, opt);
  if (cmd == "solve-ineq") return run_solve_ineq<S>(doc, opt);
  if (cmd == "eig") return run_eig<S>(doc, opt);
  if (cmd == "star") return run_star<S>(doc, opt);
  return run_verify<S>(doc, opt);
}

void emit(const json& doc, const Options& opt) {
  if (opt.output.empty()) {
    std::cout << io::dump(doc);
  } else {
    io::write_file(opt.output, doc);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical (max-plus) optimization solvers"};
  app.require_subcommand(1);
  Options opt;
  const char* names[][2] = {
      {"solve", "Solve an optimization problem file"},
      {"schedule", "Solve a project-scheduling file"},
      {"solve-ineq", "Solve a linear inequality system"},
      {"eig", "Spectral radius and an eigenvector of a matrix"},
      {"star", "Kleene star of a matrix"},
      {"verify", "Check a candidate point against the solved problem"},
  };
  for (const auto& [name, help] : names) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "Input JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", opt.output, "Write the JSON result here instead of stdout");
    sub->add_flag("--exact", opt.exact, "Exact rational arithmetic");
    sub->add_option("--eps", opt.eps, "Float-mode tolerance")->check(CLI::NonNegativeNumber);
    sub->add_flag("--emit-intermediates", opt.intermediates, "Include every intermediate quantity");
    if (std::string(name) == "schedule") {
      sub->add_flag("--summary", opt.summary, "Print a per-activity table to stderr");
    }
    if (std::string(name) == "verify") {
      sub->add_option("--x", opt.point, "Candidate point as a JSON array")->required();
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const json doc = io::read_file(opt.input);
    const json out = opt.exact ? dispatch<tropt::MaxPlusQ>(cmd, doc, opt)
                               : dispatch<tropt::MaxPlusD>(cmd, doc, opt);
    emit(out, opt);
    return 0;
  } catch (const Error& e) {
    std::cerr << "tropt " << cmd << ": " << e.what() << "\n";
    std::cout << io::dump(json{{"error", std::string(tropt::errc_name(e.code()))},
                               {"message", e.what()}});
    return tropt::is_infeasibility(e.code()) ? 2 : 1;
  } catch (const json::exception& e) {
    std::cerr << "tropt " << cmd << ": malformed input: " << e.what() << "\n";
    return 1;
  }
}
