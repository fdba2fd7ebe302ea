#include "tropt/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace tropt::oracle {

namespace {

// Scaled integer value; kNeg encodes the zero element.
using Int = std::int64_t;
constexpr Int kNeg = std::numeric_limits<Int>::min();

Int add_or_neg(Int a, Int b) { return (a == kNeg || b == kNeg) ? kNeg : a + b; }

struct Scaled {
  Rational step;

  Int operator()(const Q& v, const char* what) const {
    if (v.is_zero()) return kNeg;
    const Rational s = v.value() / step;
    if (s.denominator() != 1) {
      throw Error(Errc::InvalidGrid, std::string(what) + " = " + v.to_string() +
                                         " is not a multiple of the grid step " +
                                         NumericTraits<Rational>::to_string(step));
    }
    return s.numerator();
  }

  std::vector<Int> mat(const std::optional<Matrix<Q>>& m, std::size_t n, const char* what) const {
    std::vector<Int> out(n * n, kNeg);
    if (!m) return out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = (*this)((*m)(i, j), what);
    return out;
  }

  std::vector<Int> vec(const std::optional<Vector<Q>>& v, std::size_t n, const char* what) const {
    std::vector<Int> out(n, kNeg);
    if (!v) return out;
    for (std::size_t i = 0; i < n; ++i) out[i] = (*this)((*v)[i], what);
    return out;
  }

  Int floor_div(const Rational& v) const {
    const Rational s = v / step;
    Int q = s.numerator() / s.denominator();
    if (s.numerator() % s.denominator() != 0 && s < Rational(0)) --q;
    return q;
  }
  Int ceil_div(const Rational& v) const { return -floor_div(-v); }
};

struct Box {
  std::vector<Int> lo, hi;
};

Box make_box(std::size_t n, const Scaled& sc, const std::optional<Vector<Q>>& g,
             const std::optional<Vector<Q>>& h, const GridSpec& grid) {
  Box box{std::vector<Int>(n), std::vector<Int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const bool has_g = g && !(*g)[i].is_zero();
    const bool has_h = h && !(*h)[i].is_zero();
    Int lo = 0, hi = 0;
    if (!(has_g && has_h)) {
      if (!grid.center || grid.center->size() != n || (*grid.center)[i].is_zero()) {
        throw Error(Errc::InvalidGrid, "coordinate " + std::to_string(i) +
                                           " is unbounded and no regular center was given");
      }
      const Rational c = (*grid.center)[i].value();
      lo = sc.ceil_div(c - grid.radius);
      hi = sc.floor_div(c + grid.radius);
    }
    if (has_g) lo = has_h ? sc((*g)[i], "g") : std::max(lo, sc((*g)[i], "g"));
    if (has_h) hi = has_g ? sc((*h)[i], "h") : std::min(hi, sc((*h)[i], "h"));
    if (hi < lo) throw Error(Errc::NoFeasiblePoint, "empty search range for coordinate " + std::to_string(i));
    box.lo[i] = lo;
    box.hi[i] = hi;
  }
  return box;
}

GridResult run_grid(std::size_t n, const Scaled& sc, const Box& box, const GridSpec& grid,
                    const std::function<bool(const std::vector<Int>&)>& feasible,
                    const std::function<Int(const std::vector<Int>&)>& objective) {
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<long double>(box.hi[i] - box.lo[i] + 1);
  if (total > static_cast<long double>(grid.max_points)) {
    throw Error(Errc::GridTooLarge, "grid holds " + std::to_string(static_cast<double>(total)) +
                                        " points, limit " + std::to_string(grid.max_points));
  }
  GridResult res;
  std::vector<Int> x = box.lo;
  std::vector<Int> best;
  Int best_val = kNeg;
  bool found = false;
  for (;;) {
    ++res.points;
    if (feasible(x)) {
      ++res.feasible;
      const Int v = objective(x);
      if (!found || v < best_val) {
        found = true;
        best_val = v;
        best = x;
      }
    }
    // odometer, last coordinate fastest
    std::size_t i = n;
    while (i > 0 && x[i - 1] == box.hi[i - 1]) {
      x[i - 1] = box.lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++x[i - 1];
  }
  if (!found) throw Error(Errc::NoFeasiblePoint, "no feasible lattice point in the search box");
  auto unscale = [&](Int v) { return v == kNeg ? Q::zero() : Q(Rational(v) * sc.step); };
  res.minimum = unscale(best_val);
  res.argmin = Vector<Q>(n);
  for (std::size_t i = 0; i < n; ++i) res.argmin[i] = unscale(best[i]);
  return res;
}

Rational resolve_step(std::size_t n, const GridSpec& grid) {
  const Rational step = grid.step.value_or(default_step(n));
  if (step <= Rational(0)) throw Error(Errc::InvalidGrid, "grid step must be positive");
  return step;
}

}  // namespace

Rational default_step(std::size_t n) {
  Int l = 1;
  for (Int k = 2; k <= static_cast<Int>(n) + 1; ++k) l = std::lcm(l, k);
  return Rational(1, l);
}

GridResult grid_minimize(const OptProblem<Q>& pr, const GridSpec& grid) {
  validate(pr);
  const std::size_t n = pr.dim();
  const Scaled sc{resolve_step(n, grid)};
  const auto a = sc.mat(pr.a, n, "A");
  const auto b = sc.mat(pr.b, n, "B");
  const auto p = sc.vec(pr.p, n, "p");
  const auto q = sc.vec(pr.q, n, "q");
  const auto g = sc.vec(pr.g, n, "g");
  const auto h = sc.vec(pr.h, n, "h");
  const Int r = pr.r ? sc(*pr.r, "r") : kNeg;
  const Box box = make_box(n, sc, pr.g, pr.h, grid);

  auto feasible = [&](const std::vector<Int>& x) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] != kNeg && x[i] < g[i]) return false;
      if (h[i] != kNeg && x[i] > h[i]) return false;
      for (std::size_t j = 0; j < n; ++j) {
        const Int bij = b[i * n + j];
        if (bij != kNeg && bij + x[j] > x[i]) return false;
      }
    }
    return true;
  };
  auto objective = [&](const std::vector<Int>& x) {
    Int v = r;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Int aij = a[i * n + j];
        if (aij != kNeg) v = std::max(v, aij + x[j] - x[i]);
      }
      if (p[i] != kNeg) v = std::max(v, p[i] - x[i]);
      if (q[i] != kNeg) v = std::max(v, x[i] - q[i]);
    }
    return v;
  };
  return run_grid(n, sc, box, grid, feasible, objective);
}

GridResult grid_minimize_schedule(const ScheduleSpec<Q>& spec, const GridSpec& grid) {
  validate_schedule(spec);
  const std::size_t n = spec.size();
  const Scaled sc{resolve_step(n, grid)};
  const auto a = sc.mat(spec.start_finish, n, "startFinish");
  const auto b = sc.mat(spec.start_start, n, "startStart");
  const auto g = sc.vec(spec.earliest_start, n, "earliestStart");
  const auto h = sc.vec(spec.latest_start, n, "latestStart");
  const auto lo_w = sc.vec(spec.window_lower, n, "windowLower");
  const auto hi_w = sc.vec(spec.window_upper, n, "windowUpper");
  const Box box = make_box(n, sc, spec.earliest_start, spec.latest_start, grid);

  auto feasible = [&](const std::vector<Int>& x) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] != kNeg && x[i] < g[i]) return false;
      if (x[i] > h[i]) return false;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[i * n + j] != kNeg && b[i * n + j] + x[j] > x[i]) return false;
      }
    }
    return true;
  };
  auto objective = [&](const std::vector<Int>& x) {
    Int worst = kNeg;
    for (std::size_t i = 0; i < n; ++i) {
      Int finish = hi_w[i];
      for (std::size_t j = 0; j < n; ++j) finish = std::max(finish, add_or_neg(a[i * n + j], x[j]));
      const Int start = std::min(x[i], lo_w[i]);
      worst = std::max(worst, finish - start);
    }
    return worst;
  };
  return run_grid(n, sc, box, grid, feasible, objective);
}

Q schedule_objective(const ScheduleSpec<Q>& spec, const Vector<Q>& x) {
  const std::size_t n = spec.size();
  if (x.size() != n || !x.regular()) throw Error(Errc::NotRegularVector, "x must be regular");
  Rational worst;
  for (std::size_t i = 0; i < n; ++i) {
    Rational finish = spec.window_upper[i].value();
    for (std::size_t j = 0; j < n; ++j) {
      const Q& aij = spec.start_finish(i, j);
      if (!aij.is_zero()) finish = std::max(finish, aij.value() + x[j].value());
    }
    const Rational start = std::min(x[i].value(), spec.window_lower[i].value());
    worst = i == 0 ? finish - start : std::max(worst, finish - start);
  }
  return Q(worst);
}

namespace {

struct Cycle {
  Rational mean;
  std::vector<std::size_t> nodes;
};

// Every elementary cycle, each listed once from its smallest node.
std::vector<Cycle> elementary_cycles(const Matrix<Q>& a) {
  detail::require_square(a, "cycle enumeration");
  const std::size_t n = a.rows();
  if (n > 8) throw Error(Errc::TooLarge, "cycle enumeration is limited to n <= 8");
  std::vector<Cycle> out;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t, Rational)> dfs = [&](std::size_t start, std::size_t v,
                                                                    Rational weight) {
    for (std::size_t w = start; w < n; ++w) {
      if (a(v, w).is_zero()) continue;
      const Rational next = weight + a(v, w).value();
      if (w == start) {
        out.push_back({next / static_cast<Int>(path.size()), path});
      } else if (!on_path[w]) {
        on_path[w] = true;
        path.push_back(w);
        dfs(start, w, next);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(s, s, Rational(0));
    on_path[s] = false;
  }
  return out;
}

// Plain triple-loop products, kept apart from the library's operators.
Matrix<Q> naive_mul(const Matrix<Q>& x, const Matrix<Q>& y) {
  const std::size_t n = x.rows();
  Matrix<Q> out(n, y.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) {
      std::optional<Rational> best;
      for (std::size_t k = 0; k < x.cols(); ++k) {
        if (x(i, k).is_zero() || y(k, j).is_zero()) continue;
        const Rational v = x(i, k).value() + y(k, j).value();
        if (!best || v > *best) best = v;
      }
      if (best) out(i, j) = Q(*best);
    }
  return out;
}

Matrix<Q> naive_identity(std::size_t n) {
  Matrix<Q> out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Q(Rational(0));
  return out;
}

Matrix<Q> naive_pow(const Matrix<Q>& x, std::size_t m) {
  Matrix<Q> out = naive_identity(x.rows());
  for (std::size_t i = 0; i < m; ++i) out = naive_mul(out, x);
  return out;
}

void naive_accumulate(Matrix<Q>& acc, const Matrix<Q>& x) {
  for (std::size_t i = 0; i < acc.rows(); ++i)
    for (std::size_t j = 0; j < acc.cols(); ++j) {
      if (x(i, j).is_zero()) continue;
      if (acc(i, j).is_zero() || acc(i, j).value() < x(i, j).value()) acc(i, j) = x(i, j);
    }
}

// Calls f on every (len)-tuple of nonnegative integers with sum <= budget.
void compositions(std::size_t len, std::size_t budget,
                  const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> e(len, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos == len) {
      f(e);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      e[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, budget);
}

void check_families(const Matrix<Q>& a, const Matrix<Q>& b) {
  detail::require_square(a, "A");
  detail::require(b.rows() == a.rows() && b.cols() == a.cols(), Errc::ShapeMismatch,
                  "A and B must be square of the same order");
  if (a.rows() > 5) throw Error(Errc::TooLarge, "literal enumeration is limited to n <= 5");
}

}  // namespace

Q cycle_mean_radius(const Matrix<Q>& a) {
  Q best = Q::zero();
  for (const auto& c : elementary_cycles(a)) best += Q(c.mean);
  return best;
}

std::vector<std::size_t> critical_nodes(const Matrix<Q>& a) {
  const auto cycles = elementary_cycles(a);
  const Q radius = cycle_mean_radius(a);
  std::vector<bool> mark(a.rows(), false);
  for (const auto& c : cycles) {
    if (Q(c.mean) == radius) {
      for (std::size_t v : c.nodes) mark[v] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mark.size(); ++i)
    if (mark[i]) out.push_back(i);
  return out;
}

Matrix<Q> enumerate_s(const Matrix<Q>& a, const Matrix<Q>& b, std::size_t k) {
  check_families(a, b);
  const std::size_t n = a.rows();
  if (k > n) throw Error(Errc::IndexOutOfRange, "S_k needs k <= n");
  if (k == 0) return naive_identity(n);
  Matrix<Q> acc(n, n);
  compositions(k, n - k, [&](const std::vector<std::size_t>& e) {
    Matrix<Q> w = naive_identity(n);
    for (std::size_t idx = 0; idx < k; ++idx) w = naive_mul(naive_mul(w, a), naive_pow(b, e[idx]));
    naive_accumulate(acc, w);
  });
  return acc;
}

Matrix<Q> enumerate_t(const Matrix<Q>& a, const Matrix<Q>& b, std::size_t k) {
  check_families(a, b);
  const std::size_t n = a.rows();
  if (k + 1 > n) throw Error(Errc::IndexOutOfRange, "T_k needs k <= n - 1");
  Matrix<Q> acc(n, n);
  compositions(k + 1, n - k - 1, [&](const std::vector<std::size_t>& e) {
    Matrix<Q> w = naive_pow(b, e[0]);
    for (std::size_t idx = 1; idx <= k; ++idx) w = naive_mul(naive_mul(w, a), naive_pow(b, e[idx]));
    naive_accumulate(acc, w);
  });
  return acc;
}

Matrix<Q> closure_floyd_warshall(const Matrix<Q>& a) {
  detail::require_square(a, "closure");
  const std::size_t n = a.rows();
  Matrix<Q> d = a;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (d(i, k).is_zero() || d(k, j).is_zero()) continue;
        const Rational via = d(i, k).value() + d(k, j).value();
        if (d(i, j).is_zero() || d(i, j).value() < via) d(i, j) = Q(via);
      }
  for (std::size_t i = 0; i < n; ++i) {
    if (!d(i, i).is_zero() && d(i, i).value() > Rational(0)) {
      throw Error(Errc::NoRegularSolution, "positive cycle through node " + std::to_string(i));
    }
    d(i, i) = Q(Rational(0));
  }
  return d;
}

// -- random instances -------------------------------------------------------

namespace {

Q draw(std::mt19937_64& rng, const RandomOptions& opt, bool allow_zero) {
  if (allow_zero && std::bernoulli_distribution(opt.zero_probability)(rng)) return Q::zero();
  return Q(Rational(std::uniform_int_distribution<int>(opt.lo, opt.hi)(rng)));
}

Rational value_or_min(const Q& v, Rational fallback) { return v.is_zero() ? fallback : v.value(); }

}  // namespace

Matrix<Q> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        const RandomOptions& opt) {
  Matrix<Q> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = draw(rng, opt, true);
  return m;
}

Vector<Q> random_vector(std::mt19937_64& rng, std::size_t n, const RandomOptions& opt, bool regular) {
  Vector<Q> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = draw(rng, opt, !regular);
  return v;
}

Matrix<Q> random_bounded_cycles(std::mt19937_64& rng, std::size_t n, const RandomOptions& opt) {
  Matrix<Q> b = random_matrix(rng, n, n, opt);
  std::uniform_int_distribution<std::size_t> pick(0, n * n - 1);
  while (cycle_mean_radius(b) > Q::one()) {
    const std::size_t idx = pick(rng);
    b(idx / n, idx % n) = Q::zero();
  }
  return b;
}

Matrix<Q> random_column_regular(std::mt19937_64& rng, std::size_t n, const RandomOptions& opt) {
  Matrix<Q> a = random_matrix(rng, n, n, opt);
  std::uniform_int_distribution<std::size_t> row(0, n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (a.column(j).nonzero()) continue;
    a(row(rng), j) = draw(rng, opt, false);
  }
  return a;
}

namespace {

// Matrix with at least one cycle, so its spectral radius is nonzero.
Matrix<Q> random_cyclic(std::mt19937_64& rng, std::size_t n, const RandomOptions& opt) {
  Matrix<Q> a = random_column_regular(rng, n, opt);
  if (cycle_mean_radius(a).is_zero()) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    a(i, i) = draw(rng, opt, false);
  }
  return a;
}

// Raises h until h >= B* g, which makes h⁻B*g <= 1.
void lift_upper(Vector<Q>& h, const Matrix<Q>& b_star, const Vector<Q>& g) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    Q need = Q::zero();
    for (std::size_t j = 0; j < g.size(); ++j) need += b_star(i, j) * g[j];
    if (!need.is_zero()) h[i] = Q(std::max(h[i].value(), value_or_min(need, h[i].value())));
  }
}

}  // namespace

OptProblem<Q> random_problem(std::mt19937_64& rng, ProblemKind kind, std::size_t n,
                             const RandomOptions& opt) {
  OptProblem<Q> pr;
  pr.kind = kind;
  pr.a = random_cyclic(rng, n, opt);
  const bool uses_b = kind == ProblemKind::LinearConstrained || kind == ProblemKind::General ||
                      kind == ProblemKind::FixpointConstrained;
  const bool uses_pqr = kind != ProblemKind::Basic && kind != ProblemKind::LinearConstrained;
  const bool uses_g = kind == ProblemKind::LinearConstrained || kind == ProblemKind::General ||
                      kind == ProblemKind::BoxConstrained;
  const bool uses_h = kind == ProblemKind::General || kind == ProblemKind::BoxConstrained;
  if (uses_b) pr.b = random_bounded_cycles(rng, n, opt);
  if (uses_pqr) {
    pr.p = random_vector(rng, n, opt);
    pr.q = random_vector(rng, n, opt, true);
    pr.r = draw(rng, opt, true);
  }
  if (uses_g) pr.g = random_vector(rng, n, opt);
  if (uses_h) {
    pr.h = random_vector(rng, n, opt, true);
    lift_upper(*pr.h, pr.b ? closure_floyd_warshall(*pr.b) : naive_identity(n), *pr.g);
  }
  return pr;
}

ScheduleSpec<Q> random_schedule(std::mt19937_64& rng, std::size_t n, const RandomOptions& opt) {
  ScheduleSpec<Q> spec;
  for (std::size_t i = 0; i < n; ++i) spec.activities.push_back("a" + std::to_string(i + 1));
  spec.start_finish = random_column_regular(rng, n, opt);
  spec.start_start = random_bounded_cycles(rng, n, opt);
  spec.earliest_start = random_vector(rng, n, opt);
  spec.latest_start = random_vector(rng, n, opt, true);
  lift_upper(spec.latest_start, closure_floyd_warshall(spec.start_start), spec.earliest_start);
  spec.window_lower = random_vector(rng, n, opt, true);
  spec.window_upper = random_vector(rng, n, opt, true);
  return spec;
}

}  // namespace tropt::oracle
