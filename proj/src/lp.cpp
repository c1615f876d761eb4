#include "linfiso/lp.hpp"

#include <sstream>

#include "linfiso/error.hpp"

namespace linfiso::lp {

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

std::size_t Problem::add_variable(const Rational& cost, Bound bound) {
  objective.push_back(cost);
  bounds.push_back(std::move(bound));
  for (auto& r : rows) r.coeffs.emplace_back(0);
  return objective.size() - 1;
}

void Problem::add_row(VectorQ coeffs, Sense sense, Rational rhs) {
  if (coeffs.size() != num_vars())
    throw Error(ErrorCode::model, "row has " + std::to_string(coeffs.size()) +
                                      " coefficients, expected " + std::to_string(num_vars()));
  rows.push_back(Row{std::move(coeffs), sense, std::move(rhs)});
}

void Problem::validate() const {
  if (bounds.size() != objective.size())
    throw Error(ErrorCode::model, "bounds and objective disagree on the variable count");
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].coeffs.size() != objective.size())
      throw Error(ErrorCode::model, "row " + std::to_string(r + 1) + " has the wrong length");
  for (std::size_t j = 0; j < bounds.size(); ++j)
    if (bounds[j].lower && bounds[j].upper && *bounds[j].lower > *bounds[j].upper)
      throw Error(ErrorCode::model, "variable " + std::to_string(j + 1) + " has lower > upper");
}

namespace {

// How an original variable is expressed through nonnegative standard columns:
//   x = offset + sign * x_plus              (one finite bound)
//   x = x_plus - x_minus                     (free)
struct VarMap {
  std::size_t plus = 0;
  std::optional<std::size_t> minus;
  Rational offset;
  int sign = 1;
};

enum class ColumnKind { structural, slack, artificial };

// Dense tableau for  min c^T x, A x = b, x >= 0, b >= 0. The last entry of
// every row holds the right-hand side; `cost_row` holds reduced costs and
// -objective in the same layout.
class Simplex {
 public:
  explicit Simplex(const Problem& problem) : problem_(problem) { build(); }

  Solution run();
  std::string dump() const;

 private:
  void build();
  std::size_t add_column(ColumnKind kind, Rational cost);
  void price(const VectorQ& costs);
  void pivot(std::size_t row, std::size_t col);
  // Bland's rule. Returns false when optimal; sets `unbounded_col` when the
  // entering column has no positive entry.
  bool iterate(std::optional<std::size_t>& unbounded_col);
  void drive_out_artificials();
  VectorQ std_duals(const VectorQ& costs) const;
  VectorQ map_duals(const VectorQ& std) const;
  VectorQ original_point(const VectorQ& std_values) const;
  VectorQ basic_solution() const;

  const Problem& problem_;
  std::vector<VarMap> vars_;
  std::vector<ColumnKind> kinds_;
  VectorQ phase2_costs_;
  std::vector<VectorQ> rows_;          // coefficients, resized after columns settle
  std::vector<int> row_sign_;          // std row = sign * original row
  std::vector<std::size_t> origin_;    // original row index, or npos for bound rows
  std::vector<std::size_t> init_col_;  // identity column of the starting basis
  std::vector<std::size_t> basis_;
  VectorQ cost_row_;
  bool barred_artificials_ = false;
  std::size_t pivots_ = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

std::size_t Simplex::add_column(ColumnKind kind, Rational cost) {
  kinds_.push_back(kind);
  phase2_costs_.push_back(std::move(cost));
  return kinds_.size() - 1;
}

void Simplex::build() {
  problem_.validate();
  const std::size_t nv = problem_.num_vars();

  // Structural columns.
  vars_.resize(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    const Bound& b = problem_.bounds[j];
    const Rational& c = problem_.objective[j];
    VarMap& v = vars_[j];
    if (b.lower) {
      v.offset = *b.lower;
      v.plus = add_column(ColumnKind::structural, c);
    } else if (b.upper) {
      v.offset = *b.upper;
      v.sign = -1;
      v.plus = add_column(ColumnKind::structural, -c);
    } else {
      v.plus = add_column(ColumnKind::structural, c);
      v.minus = add_column(ColumnKind::structural, -c);
    }
  }

  // Row data in terms of structural columns, before slacks/artificials.
  struct PendingRow {
    VectorQ coeffs;  // indexed by column, grown later
    Rational rhs;
    int sign;
    std::size_t origin;
    bool needs_slack;
  };
  std::vector<PendingRow> pending;
  for (std::size_t r = 0; r < problem_.rows.size(); ++r) {
    const Row& row = problem_.rows[r];
    PendingRow p{VectorQ(kinds_.size()), row.rhs, 1, r, row.sense != Sense::eq};
    for (std::size_t j = 0; j < nv; ++j) {
      const Rational& a = row.coeffs[j];
      if (a == 0) continue;
      const VarMap& v = vars_[j];
      p.rhs -= a * v.offset;
      p.coeffs[v.plus] += v.sign * a;
      if (v.minus) p.coeffs[*v.minus] -= a;
    }
    if (row.sense == Sense::ge) {
      for (auto& x : p.coeffs) x = -x;
      p.rhs = -p.rhs;
      p.sign = -1;
    }
    pending.push_back(std::move(p));
  }
  for (std::size_t j = 0; j < nv; ++j) {
    const Bound& b = problem_.bounds[j];
    if (!(b.lower && b.upper)) continue;
    PendingRow p{VectorQ(kinds_.size()), *b.upper - *b.lower, 1, npos, true};
    p.coeffs[vars_[j].plus] = 1;
    pending.push_back(std::move(p));
  }

  // Slacks, then sign normalization, then artificials where no slack can
  // start in the basis.
  std::vector<std::optional<std::size_t>> slack_of(pending.size());
  for (std::size_t r = 0; r < pending.size(); ++r)
    if (pending[r].needs_slack) slack_of[r] = add_column(ColumnKind::slack, 0);

  std::vector<int> slack_coeff(pending.size(), 1);
  for (std::size_t r = 0; r < pending.size(); ++r) {
    if (pending[r].rhs >= 0) continue;
    for (auto& x : pending[r].coeffs) x = -x;
    pending[r].rhs = -pending[r].rhs;
    pending[r].sign = -pending[r].sign;
    slack_coeff[r] = -1;
  }

  init_col_.assign(pending.size(), npos);
  for (std::size_t r = 0; r < pending.size(); ++r) {
    if (slack_of[r] && slack_coeff[r] == 1)
      init_col_[r] = *slack_of[r];
    else
      init_col_[r] = add_column(ColumnKind::artificial, 0);
  }

  const std::size_t ncols = kinds_.size();
  rows_.assign(pending.size(), VectorQ(ncols + 1));
  for (std::size_t r = 0; r < pending.size(); ++r) {
    VectorQ& t = rows_[r];
    for (std::size_t j = 0; j < pending[r].coeffs.size(); ++j) t[j] = pending[r].coeffs[j];
    if (slack_of[r]) t[*slack_of[r]] = slack_coeff[r];
    if (kinds_[init_col_[r]] == ColumnKind::artificial) t[init_col_[r]] = 1;
    t[ncols] = pending[r].rhs;
    row_sign_.push_back(pending[r].sign);
    origin_.push_back(pending[r].origin);
  }
  basis_ = init_col_;
}

void Simplex::price(const VectorQ& costs) {
  const std::size_t ncols = kinds_.size();
  cost_row_.assign(ncols + 1, 0);
  for (std::size_t j = 0; j < ncols; ++j) cost_row_[j] = costs[j];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& cb = costs[basis_[r]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= ncols; ++j)
      if (rows_[r][j] != 0) cost_row_[j] -= cb * rows_[r][j];
  }
}

void Simplex::pivot(std::size_t row, std::size_t col) {
  ++pivots_;
  VectorQ& p = rows_[row];
  const Rational inv = 1 / p[col];
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] == 0) continue;
    p[j] *= inv;
    support.push_back(j);
  }
  auto eliminate = [&](VectorQ& t) {
    if (t[col] == 0) return;
    const Rational factor = t[col];
    for (std::size_t j : support) t[j] -= factor * p[j];
  };
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (r != row) eliminate(rows_[r]);
  eliminate(cost_row_);
  basis_[row] = col;
}

bool Simplex::iterate(std::optional<std::size_t>& unbounded_col) {
  const std::size_t ncols = kinds_.size();
  std::size_t entering = npos;
  for (std::size_t j = 0; j < ncols; ++j) {
    if (barred_artificials_ && kinds_[j] == ColumnKind::artificial) continue;
    if (cost_row_[j] < 0) {
      entering = j;
      break;
    }
  }
  if (entering == npos) return false;

  std::size_t leaving = npos;
  Rational best_ratio;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& a = rows_[r][entering];
    if (a <= 0) continue;
    Rational ratio = rows_[r][ncols] / a;
    if (leaving == npos || ratio < best_ratio ||
        (ratio == best_ratio && basis_[r] < basis_[leaving])) {
      leaving = r;
      best_ratio = std::move(ratio);
    }
  }
  if (leaving == npos) {
    unbounded_col = entering;
    return false;
  }
  pivot(leaving, entering);
  return true;
}

void Simplex::drive_out_artificials() {
  const std::size_t ncols = kinds_.size();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (kinds_[basis_[r]] != ColumnKind::artificial) continue;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (kinds_[j] != ColumnKind::artificial && rows_[r][j] != 0) {
        pivot(r, j);
        break;
      }
    }
    // Otherwise the row is redundant; its artificial stays basic at zero and
    // no non-artificial column can ever pivot on it.
  }
}

VectorQ Simplex::std_duals(const VectorQ& costs) const {
  VectorQ y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) y[r] = costs[init_col_[r]] - cost_row_[init_col_[r]];
  return y;
}

VectorQ Simplex::map_duals(const VectorQ& std) const {
  VectorQ y(problem_.rows.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (origin_[r] != npos) y[origin_[r]] = row_sign_[r] * std[r];
  return y;
}

VectorQ Simplex::basic_solution() const {
  VectorQ x(kinds_.size());
  const std::size_t ncols = kinds_.size();
  for (std::size_t r = 0; r < rows_.size(); ++r) x[basis_[r]] = rows_[r][ncols];
  return x;
}

VectorQ Simplex::original_point(const VectorQ& std_values) const {
  VectorQ x(vars_.size());
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    const VarMap& v = vars_[j];
    x[j] = v.offset + v.sign * std_values[v.plus];
    if (v.minus) x[j] -= std_values[*v.minus];
  }
  return x;
}

Solution Simplex::run() {
  Solution sol;
  const std::size_t ncols = kinds_.size();

  VectorQ phase1_costs(ncols);
  bool any_artificial = false;
  for (std::size_t j = 0; j < ncols; ++j)
    if (kinds_[j] == ColumnKind::artificial) {
      phase1_costs[j] = 1;
      any_artificial = true;
    }

  std::optional<std::size_t> unbounded;
  if (any_artificial) {
    price(phase1_costs);
    while (iterate(unbounded)) {
    }
    // Phase one is bounded below by zero, so `unbounded` cannot be set here.
    if (-cost_row_[ncols] > 0) {
      sol.status = Status::infeasible;
      sol.duals = map_duals(std_duals(phase1_costs));
      sol.pivots = pivots_;
      return sol;
    }
    drive_out_artificials();
  }

  barred_artificials_ = true;
  price(phase2_costs_);
  while (iterate(unbounded)) {
  }

  const VectorQ x_std = basic_solution();
  sol.primal = original_point(x_std);
  sol.objective = 0;
  for (std::size_t j = 0; j < sol.primal.size(); ++j)
    sol.objective += problem_.objective[j] * sol.primal[j];
  sol.pivots = pivots_;

  if (unbounded) {
    sol.status = Status::unbounded;
    VectorQ dir(ncols);
    dir[*unbounded] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) dir[basis_[r]] = -rows_[r][*unbounded];
    sol.ray.assign(vars_.size(), 0);
    for (std::size_t j = 0; j < vars_.size(); ++j) {
      const VarMap& v = vars_[j];
      sol.ray[j] = v.sign * dir[v.plus];
      if (v.minus) sol.ray[j] -= dir[*v.minus];
    }
    return sol;
  }

  sol.status = Status::optimal;
  sol.duals = map_duals(std_duals(phase2_costs_));
  return sol;
}

std::string Simplex::dump() const {
  std::ostringstream os;
  const std::size_t ncols = kinds_.size();
  os << "columns:";
  for (std::size_t j = 0; j < ncols; ++j)
    os << ' '
       << (kinds_[j] == ColumnKind::structural ? 'x' : kinds_[j] == ColumnKind::slack ? 's' : 'a')
       << j;
  os << "\n";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    os << "basis " << basis_[r] << " |";
    for (std::size_t j = 0; j < ncols; ++j) os << ' ' << rows_[r][j].get_str();
    os << " | " << rows_[r][ncols].get_str() << "\n";
  }
  os << "reduced |";
  for (std::size_t j = 0; j < ncols; ++j) os << ' ' << cost_row_[j].get_str();
  os << " | " << Rational(-cost_row_[ncols]).get_str() << "\n";
  return os.str();
}

Rational row_activity(const Row& row, const VectorQ& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (row.coeffs[j] != 0) s += row.coeffs[j] * x[j];
  return s;
}

bool primal_feasible(const Problem& p, const VectorQ& x) {
  if (x.size() != p.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (p.bounds[j].lower && x[j] < *p.bounds[j].lower) return false;
    if (p.bounds[j].upper && x[j] > *p.bounds[j].upper) return false;
  }
  for (const Row& row : p.rows) {
    const Rational a = row_activity(row, x);
    if (row.sense == Sense::le && a > row.rhs) return false;
    if (row.sense == Sense::ge && a < row.rhs) return false;
    if (row.sense == Sense::eq && a != row.rhs) return false;
  }
  return true;
}

// Dual objective for duals y against cost vector c; nullopt if y violates a
// sign condition or a reduced cost points at an infinite bound.
std::optional<Rational> dual_objective(const Problem& p, const VectorQ& c, const VectorQ& y) {
  if (y.size() != p.rows.size()) return std::nullopt;
  Rational value = 0;
  VectorQ d(c);
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    const Row& row = p.rows[r];
    if (row.sense == Sense::le && y[r] > 0) return std::nullopt;
    if (row.sense == Sense::ge && y[r] < 0) return std::nullopt;
    if (y[r] == 0) continue;
    value += row.rhs * y[r];
    for (std::size_t j = 0; j < d.size(); ++j)
      if (row.coeffs[j] != 0) d[j] -= row.coeffs[j] * y[r];
  }
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] > 0) {
      if (!p.bounds[j].lower) return std::nullopt;
      value += d[j] * *p.bounds[j].lower;
    } else if (d[j] < 0) {
      if (!p.bounds[j].upper) return std::nullopt;
      value += d[j] * *p.bounds[j].upper;
    }
  }
  return value;
}

}  // namespace

Solution solve(const Problem& problem) {
  Simplex simplex(problem);
  return simplex.run();
}

std::string debug_tableau(const Problem& problem) {
  Simplex simplex(problem);
  simplex.run();
  return simplex.dump();
}

bool verify_certificate(const Problem& problem, const Solution& solution) {
  try {
    problem.validate();
  } catch (const Error&) {
    return false;
  }
  switch (solution.status) {
    case Status::optimal: {
      if (!primal_feasible(problem, solution.primal)) return false;
      Rational primal_value = 0;
      for (std::size_t j = 0; j < solution.primal.size(); ++j)
        primal_value += problem.objective[j] * solution.primal[j];
      if (primal_value != solution.objective) return false;
      auto dual_value = dual_objective(problem, problem.objective, solution.duals);
      return dual_value && *dual_value == primal_value;
    }
    case Status::infeasible: {
      auto farkas = dual_objective(problem, VectorQ(problem.num_vars()), solution.duals);
      return farkas && *farkas > 0;
    }
    case Status::unbounded: {
      if (!primal_feasible(problem, solution.primal)) return false;
      const VectorQ& ray = solution.ray;
      if (ray.size() != problem.num_vars()) return false;
      Rational slope = 0;
      for (std::size_t j = 0; j < ray.size(); ++j) {
        if (problem.bounds[j].lower && ray[j] < 0) return false;
        if (problem.bounds[j].upper && ray[j] > 0) return false;
        slope += problem.objective[j] * ray[j];
      }
      if (slope >= 0) return false;
      for (const Row& row : problem.rows) {
        const Rational a = row_activity(row, ray);
        if (row.sense == Sense::le && a > 0) return false;
        if (row.sense == Sense::ge && a < 0) return false;
        if (row.sense == Sense::eq && a != 0) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace linfiso::lp
