#include "whm/lp.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "whm/error.hpp"

namespace whm {

namespace {

// Dictionary:  x_basic[i] = rhs[i] - sum_j coef[i][j] * x_nonbasic[j]
//              z          = value  + sum_j obj[j]     * x_nonbasic[j]
class Dictionary {
 public:
  Dictionary(std::vector<std::vector<Rational>> coef, std::vector<Rational> rhs,
             std::vector<std::size_t> basic, std::vector<std::size_t> nonbasic)
      : coef_(std::move(coef)), rhs_(std::move(rhs)), basic_(std::move(basic)),
        nonbasic_(std::move(nonbasic)) {}

  std::size_t rows() const { return basic_.size(); }
  std::size_t cols() const { return nonbasic_.size(); }

  void set_objective(std::vector<Rational> obj, Rational value) {
    obj_ = std::move(obj);
    value_ = std::move(value);
  }

  // Runs Bland's rule to optimality. False when unbounded.
  bool optimize(std::size_t& pivots) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(obj_[j]) > 0 && (!enter || nonbasic_[j] < nonbasic_[*enter])) enter = j;
      }
      if (!enter) return true;
      auto leave = ratio_test(*enter);
      if (!leave) return false;
      pivot(*leave, *enter);
      ++pivots;
    }
  }

  std::optional<std::size_t> ratio_test(std::size_t e) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (sgn(coef_[i][e]) <= 0) continue;
      Rational ratio = rhs_[i] / coef_[i][e];
      if (!best || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[*best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t e) {
    const Rational p = coef_[r][e];
    auto& row = coef_[r];
    rhs_[r] /= p;
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j != e) row[j] /= p;
    }
    row[e] = Rational(1) / p;

    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || sgn(coef_[i][e]) == 0) continue;
      const Rational f = coef_[i][e];
      auto& other = coef_[i];
      rhs_[i] -= f * rhs_[r];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (j != e && sgn(row[j]) != 0) other[j] -= f * row[j];
      }
      other[e] = -f * row[e];
    }
    if (sgn(obj_[e]) != 0) {
      const Rational f = obj_[e];
      value_ += f * rhs_[r];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (j != e && sgn(row[j]) != 0) obj_[j] -= f * row[j];
      }
      obj_[e] = -f * row[e];
    }
    std::swap(basic_[r], nonbasic_[e]);
  }

  const Rational& value() const { return value_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  const std::vector<std::size_t>& basic() const { return basic_; }
  const std::vector<std::size_t>& nonbasic() const { return nonbasic_; }
  std::vector<std::vector<Rational>>& coef() { return coef_; }
  std::vector<std::size_t>& nonbasic_mut() { return nonbasic_; }

 private:
  std::vector<std::vector<Rational>> coef_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<Rational> obj_;
  Rational value_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const std::size_t m = problem.b.size();
  const std::size_t n = problem.c.size();
  if (problem.a.size() != m) throw Error(ErrorKind::LpInternal, "constraint row count mismatch");
  for (const auto& row : problem.a) {
    if (row.size() != n) throw Error(ErrorKind::LpInternal, "constraint column count mismatch");
  }

  // Variable ids: 0..n-1 structural, n..n+m-1 slacks, n+m auxiliary.
  const std::size_t aux = n + m;
  const bool need_phase1 =
      std::any_of(problem.b.begin(), problem.b.end(), [](const Rational& v) { return sgn(v) < 0; });

  std::vector<std::vector<Rational>> coef = problem.a;
  std::vector<std::size_t> basic(m), nonbasic(n);
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
  if (need_phase1) {
    for (auto& row : coef) row.push_back(-1);
    nonbasic.push_back(aux);
  }
  Dictionary dict(std::move(coef), problem.b, std::move(basic), std::move(nonbasic));

  LpSolution sol;
  if (need_phase1) {
    // maximize -x_aux; first pivot brings x_aux in on the most negative row.
    std::vector<Rational> w(n + 1, 0);
    w[n] = -1;
    dict.set_objective(std::move(w), 0);
    std::size_t worst = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (problem.b[i] < problem.b[worst]) worst = i;
    }
    dict.pivot(worst, n);
    ++sol.pivots;
    if (!dict.optimize(sol.pivots)) throw Error(ErrorKind::LpInternal, "phase 1 unbounded");
    if (sgn(dict.value()) < 0) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Drive x_aux out of the basis if it is still there (at value 0).
    for (std::size_t i = 0; i < dict.rows(); ++i) {
      if (dict.basic()[i] != aux) continue;
      for (std::size_t j = 0; j < dict.cols(); ++j) {
        if (sgn(dict.coef()[i][j]) != 0) {
          dict.pivot(i, j);
          ++sol.pivots;
          break;
        }
      }
    }
    // Drop the auxiliary column.
    const auto& nb = dict.nonbasic();
    const std::size_t col = std::find(nb.begin(), nb.end(), aux) - nb.begin();
    for (auto& row : dict.coef()) row.erase(row.begin() + col);
    dict.nonbasic_mut().erase(dict.nonbasic_mut().begin() + col);
  }

  // Express the original objective over the current nonbasic variables.
  std::vector<Rational> obj(dict.cols(), 0);
  Rational value = 0;
  std::vector<std::optional<std::size_t>> row_of(n + m + 1);
  for (std::size_t i = 0; i < dict.rows(); ++i) row_of[dict.basic()[i]] = i;
  for (std::size_t j = 0; j < dict.cols(); ++j) {
    if (dict.nonbasic()[j] < n) obj[j] += problem.c[dict.nonbasic()[j]];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!row_of[v] || sgn(problem.c[v]) == 0) continue;
    const std::size_t i = *row_of[v];
    value += problem.c[v] * dict.rhs()[i];
    for (std::size_t j = 0; j < dict.cols(); ++j) obj[j] -= problem.c[v] * dict.coef()[i][j];
  }
  dict.set_objective(std::move(obj), std::move(value));

  if (!dict.optimize(sol.pivots)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  sol.status = LpStatus::Optimal;
  sol.value = dict.value();
  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < dict.rows(); ++i) {
    if (dict.basic()[i] < n) sol.x[dict.basic()[i]] = dict.rhs()[i];
  }
  return sol;
}

}  // namespace whm
