/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 cliquepart contributors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "core/lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "core/common.hpp"

namespace cliquepart {

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kRatioTol = 1e-10;
constexpr int64_t kMaxIterations = 1'000'000;
constexpr int kRefactorPeriod = 512;
constexpr int kDegenerateStreakLimit = 40;

// Revised simplex working state. Variable indices 0..n-1 are structural,
// n..n+m-1 are slacks.
class Simplex {
 public:
  explicit Simplex(const LpProblem& p) : p_(p) {
    m_ = static_cast<int>(p.rows.size());
    n_ = static_cast<int>(p.objective.size());
    // Columns in flat CSC form; pricing walks contiguous memory.
    std::vector<int> counts(n_, 0);
    for (int r = 0; r < m_; ++r)
      for (auto [j, a] : p.rows[r].coeffs)
        if (a != 0.0) ++counts[j];
    col_start_.assign(n_ + 1, 0);
    for (int j = 0; j < n_; ++j) col_start_[j + 1] = col_start_[j] + counts[j];
    col_row_.resize(col_start_[n_]);
    col_val_.resize(col_start_[n_]);
    col_norm_.assign(n_ + m_, 1.0);
    std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
    for (int r = 0; r < m_; ++r)
      for (auto [j, a] : p.rows[r].coeffs)
        if (a != 0.0) {
          col_row_[fill[j]] = r;
          col_val_[fill[j]] = a;
          ++fill[j];
          col_norm_[j] += a * a;
        }

    lower_ = p.lower;
    upper_ = p.upper;
    lower_.resize(n_ + m_, 0.0);
    upper_.resize(n_ + m_, kInf);
    for (int j = n_; j < n_ + m_; ++j) {
      lower_[j] = 0.0;
      upper_[j] = kInf;
    }

    basis_.resize(m_);
    for (int r = 0; r < m_; ++r) basis_[r] = n_ + r;
    basic_pos_.assign(n_ + m_, -1);
    for (int r = 0; r < m_; ++r) basic_pos_[basis_[r]] = r;
    at_upper_.assign(n_ + m_, false);

    binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
    for (int r = 0; r < m_; ++r) binv_[idx(r, r)] = 1.0;
    recompute_basics();
  }

  LpSolution run() {
    LpSolution sol;
    // With slacks basic, feasibility of the start point only needs the
    // basic slack values to be within bounds.
    for (int r = 0; r < m_; ++r)
      if (x_basic_[r] < -kLpTol) {
        sol.status = LpStatus::kInfeasible;
        return sol;
      }

    int degenerate_streak = 0;
    bool bland = false;
    for (int64_t iter = 0; iter < kMaxIterations; ++iter) {
      if (iter > 0 && iter % kRefactorPeriod == 0 && !refactorize()) {
        sol.status = LpStatus::kFailure;
        return sol;
      }
      int entering = price(bland);
      if (entering < 0) return extract();

      const std::vector<double>& dir = ftran(entering);
      bool rising = !at_upper_[entering];

      // Ratio test; `leaving` = basic position, or -2 for a bound flip.
      double step = upper_[entering] >= kInf
                        ? kInf
                        : upper_[entering] - lower_[entering];
      int leaving = step < kInf ? -2 : -1;
      for (int r = 0; r < m_; ++r) {
        double d = rising ? dir[r] : -dir[r];
        double limit;
        if (d > kPivotTol)
          limit = (x_basic_[r] - lower_[basis_[r]]) / d;
        else if (d < -kPivotTol && upper_[basis_[r]] < kInf)
          limit = (upper_[basis_[r]] - x_basic_[r]) / (-d);
        else
          continue;
        if (limit < step - kRatioTol ||
            (leaving >= 0 && limit < step + kRatioTol &&
             basis_[r] < basis_[leaving])) {
          step = limit;
          leaving = r;
        }
      }
      if (leaving == -1) {
        sol.status = LpStatus::kUnbounded;
        return sol;
      }
      step = std::max(step, 0.0);

      if (step < kRatioTol) ++degenerate_streak;
      else degenerate_streak = 0;
      if (degenerate_streak > kDegenerateStreakLimit) bland = true;

      if (leaving == -2) {
        at_upper_[entering] = !at_upper_[entering];
        double delta = rising ? step : -step;
        for (int r = 0; r < m_; ++r) x_basic_[r] -= delta * dir[r];
        continue;
      }
      pivot(entering, leaving, step, rising, dir);
    }
    sol.status = LpStatus::kFailure;
    return sol;
  }

 private:
  size_t idx(int r, int c) const {
    return static_cast<size_t>(r) * static_cast<size_t>(m_) +
           static_cast<size_t>(c);
  }

  double obj(int j) const { return j < n_ ? p_.objective[j] : 0.0; }

  // B^-1 * A_j for a structural or slack column, into a scratch buffer.
  const std::vector<double>& ftran(int j) {
    ftran_.assign(m_, 0.0);
    if (j >= n_) {
      int r = j - n_;
      for (int i = 0; i < m_; ++i) ftran_[i] = binv_[idx(i, r)];
      return ftran_;
    }
    for (int t = col_start_[j]; t < col_start_[j + 1]; ++t) {
      int r = col_row_[t];
      double a = col_val_[t];
      for (int i = 0; i < m_; ++i) ftran_[i] += binv_[idx(i, r)] * a;
    }
    return ftran_;
  }

  // y = c_B^T B^-1, into a scratch buffer.
  void duals() {
    y_.assign(m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      double c = obj(basis_[r]);
      if (c == 0.0) continue;
      for (int i = 0; i < m_; ++i) y_[i] += c * binv_[idx(r, i)];
    }
  }

  double reduced_cost(int j) const {
    double d = obj(j);
    if (j >= n_) return d - y_[j - n_];
    for (int t = col_start_[j]; t < col_start_[j + 1]; ++t)
      d -= y_[col_row_[t]] * col_val_[t];
    return d;
  }

  // Entering column index or -1 when optimal. Nonbasic-at-lower wants d > 0,
  // nonbasic-at-upper wants d < 0.
  int price(bool bland) {
    duals();
    int best = -1;
    double best_score = kLpTol;
    for (int j = 0; j < n_ + m_; ++j) {
      if (basic_pos_[j] >= 0) continue;
      double d = reduced_cost(j);
      double score = at_upper_[j] ? -d : d;
      if (score <= kLpTol) continue;
      if (bland) return j;
      // Static steepest-edge approximation: normalizing by the column norm
      // roughly halves the iteration count on the penalty LPs.
      score /= std::sqrt(col_norm_[j]);
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  void pivot(int entering, int leaving, double step, bool rising,
             const std::vector<double>& dir) {
    int out_var = basis_[leaving];
    double d = rising ? dir[leaving] : -dir[leaving];
    // The leaving variable hits the bound the direction pushed it toward.
    at_upper_[out_var] = d < 0;

    double delta = rising ? step : -step;
    for (int r = 0; r < m_; ++r) x_basic_[r] -= delta * dir[r];
    double entering_value =
        (rising ? lower_[entering] : upper_[entering]) + delta;

    double piv = dir[leaving];
    for (int c = 0; c < m_; ++c) binv_[idx(leaving, c)] /= piv;
    for (int r = 0; r < m_; ++r) {
      if (r == leaving || dir[r] == 0.0) continue;
      double f = dir[r];
      for (int c = 0; c < m_; ++c) binv_[idx(r, c)] -= f * binv_[idx(leaving, c)];
    }

    basic_pos_[out_var] = -1;
    basis_[leaving] = entering;
    basic_pos_[entering] = leaving;
    x_basic_[leaving] = entering_value;
  }

  double nonbasic_value(int j) const {
    return at_upper_[j] && upper_[j] < kInf ? upper_[j] : lower_[j];
  }

  void recompute_basics() {
    std::vector<double> rhs(m_);
    for (int r = 0; r < m_; ++r) rhs[r] = p_.rows[r].rhs;
    for (int j = 0; j < n_; ++j) {
      if (basic_pos_[j] >= 0) continue;
      double v = nonbasic_value(j);
      if (v == 0.0) continue;
      for (int t = col_start_[j]; t < col_start_[j + 1]; ++t)
        rhs[col_row_[t]] -= col_val_[t] * v;
    }
    // Nonbasic slacks sit at 0 and do not contribute.
    x_basic_.assign(m_, 0.0);
    for (int r = 0; r < m_; ++r)
      for (int c = 0; c < m_; ++c) x_basic_[r] += binv_[idx(r, c)] * rhs[c];
  }

  // Rebuilds B^-1 from scratch by Gauss-Jordan with partial pivoting.
  bool refactorize() {
    std::vector<double> b(static_cast<size_t>(m_) * m_, 0.0);
    for (int pos = 0; pos < m_; ++pos) {
      int j = basis_[pos];
      if (j >= n_) b[idx(j - n_, pos)] = 1.0;
      else
        for (int t = col_start_[j]; t < col_start_[j + 1]; ++t)
          b[idx(col_row_[t], pos)] = col_val_[t];
    }
    std::vector<double> inv(static_cast<size_t>(m_) * m_, 0.0);
    for (int r = 0; r < m_; ++r) inv[idx(r, r)] = 1.0;
    for (int c = 0; c < m_; ++c) {
      int piv = c;
      for (int r = c + 1; r < m_; ++r)
        if (std::fabs(b[idx(r, c)]) > std::fabs(b[idx(piv, c)])) piv = r;
      if (std::fabs(b[idx(piv, c)]) < kPivotTol) return false;
      if (piv != c)
        for (int k = 0; k < m_; ++k) {
          std::swap(b[idx(piv, k)], b[idx(c, k)]);
          std::swap(inv[idx(piv, k)], inv[idx(c, k)]);
        }
      double s = b[idx(c, c)];
      for (int k = 0; k < m_; ++k) {
        b[idx(c, k)] /= s;
        inv[idx(c, k)] /= s;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == c) continue;
        double f = b[idx(r, c)];
        if (f == 0.0) continue;
        for (int k = 0; k < m_; ++k) {
          b[idx(r, k)] -= f * b[idx(c, k)];
          inv[idx(r, k)] -= f * inv[idx(c, k)];
        }
      }
    }
    binv_ = std::move(inv);
    recompute_basics();
    return true;
  }

  LpSolution extract() {
    LpSolution sol;
    sol.assignment.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j)
      sol.assignment[j] = basic_pos_[j] >= 0 ? x_basic_[basic_pos_[j]]
                                             : nonbasic_value(j);
    for (int j = 0; j < n_; ++j) {
      double lo = lower_[j], hi = upper_[j];
      sol.assignment[j] = std::clamp(sol.assignment[j], lo, std::min(hi, kInf));
      if (std::fabs(sol.assignment[j]) < kFeasEps) sol.assignment[j] = 0.0;
    }
    sol.value = 0.0;
    for (int j = 0; j < n_; ++j) sol.value += p_.objective[j] * sol.assignment[j];
    sol.status = LpStatus::kOptimal;
    return sol;
  }

  const LpProblem& p_;
  int m_ = 0, n_ = 0;
  std::vector<int> col_start_, col_row_;
  std::vector<double> col_val_;
  std::vector<double> y_, ftran_;
  std::vector<double> col_norm_;  // 1 + ||A_j||^2
  std::vector<double> lower_, upper_;
  std::vector<int> basis_;
  std::vector<int> basic_pos_;
  std::vector<bool> at_upper_;
  std::vector<double> binv_;
  std::vector<double> x_basic_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  int n = static_cast<int>(problem.objective.size());
  if (static_cast<int>(problem.lower.size()) != n ||
      static_cast<int>(problem.upper.size()) != n)
    throw Error("LP bounds do not match variable count");

  if (problem.rows.empty()) {
    // No constraints: each variable goes to whichever bound its objective
    // prefers.
    LpSolution sol;
    sol.assignment.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
      double c = problem.objective[j];
      if (c > 0 && problem.upper[j] >= kInf) {
        sol.status = LpStatus::kUnbounded;
        return sol;
      }
      sol.assignment[j] = c > 0 ? problem.upper[j] : problem.lower[j];
      sol.value += c * sol.assignment[j];
    }
    sol.status = LpStatus::kOptimal;
    return sol;
  }
  return Simplex(problem).run();
}

std::string dump_lp(const LpProblem& problem) {
  std::ostringstream out;
  auto write_terms = [&](const std::vector<std::pair<int, double>>& terms) {
    bool first = true;
    for (auto [j, a] : terms) {
      if (!first) out << " + ";
      out << format_double(a) << " x" << j;
      first = false;
    }
    if (first) out << "0";
  };
  std::vector<std::pair<int, double>> obj;
  for (size_t j = 0; j < problem.objective.size(); ++j)
    if (problem.objective[j] != 0.0)
      obj.push_back({static_cast<int>(j), problem.objective[j]});
  out << "max: ";
  write_terms(obj);
  out << "\n";
  for (size_t r = 0; r < problem.rows.size(); ++r) {
    out << 'r' << r << ": ";
    write_terms(problem.rows[r].coeffs);
    out << " <= " << format_double(problem.rows[r].rhs) << "\n";
  }
  out << "bounds:\n";
  for (size_t j = 0; j < problem.objective.size(); ++j)
    out << format_double(problem.lower[j]) << " <= x" << j << " <= "
        << (problem.upper[j] >= kInf ? "inf" : format_double(problem.upper[j]))
        << "\n";
  return out.str();
}

PenaltyLp build_penalty_lp(const WeightedGraph& graph,
                           const std::vector<Subnetwork>& subnetworks,
                           const EdgeFixations& fixations) {
  PenaltyLp lp;
  for (const Subnetwork& s : subnetworks) {
    bool valid = true;
    for (const SubnetworkEdge& e : s.edges) {
      EdgeState state = fixations.get(e.u, e.v);
      // A fixation against the reduced sign means the edge's full weight is
      // already charged to the base penalty; the subnetwork no longer
      // penalizes anything on its own.
      if ((state == EdgeState::kIncluded && e.reduced < 0) ||
          (state == EdgeState::kExcluded && e.reduced > 0)) {
        valid = false;
        break;
      }
    }
    if (valid) lp.columns.push_back(s);
  }

  std::map<std::pair<int, int>, int> row_of;
  int ncols = static_cast<int>(lp.columns.size());
  lp.problem.objective.resize(ncols);
  lp.problem.lower.assign(ncols, 0.0);
  lp.problem.upper.assign(ncols, kInf);
  for (int j = 0; j < ncols; ++j) {
    const Subnetwork& s = lp.columns[j];
    lp.problem.objective[j] = s.penalty;
    for (const SubnetworkEdge& e : s.edges) {
      if (!fixations.is_free(e.u, e.v)) continue;  // matching fixation: no cap
      auto key = std::minmax(e.u, e.v);
      auto [it, inserted] = row_of.try_emplace({key.first, key.second}, 0);
      if (inserted) {
        it->second = static_cast<int>(lp.problem.rows.size());
        LpRow row;
        row.rhs = std::fabs(graph.weight(e.u, e.v));
        lp.problem.rows.push_back(std::move(row));
        lp.row_edges.push_back({key.first, key.second});
      }
      lp.problem.rows[it->second].coeffs.push_back({j, std::fabs(e.reduced)});
    }
  }
  return lp;
}

namespace {

int pair_index(int n, int i, int j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

LpProblem build_relaxed_ilp(const WeightedGraph& graph, int node_cap) {
  int n = graph.node_count();
  if (n > node_cap)
    throw SizeError("relaxed ILP limited to " + std::to_string(node_cap) +
                    " nodes (3 * C(n,3) rows)");
  LpProblem p;
  int nvars = n * (n - 1) / 2;
  p.objective.resize(nvars);
  p.lower.assign(nvars, 0.0);
  p.upper.assign(nvars, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      p.objective[pair_index(n, i, j)] = graph.weight(i, j);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int ij = pair_index(n, i, j);
        int jk = pair_index(n, j, k);
        int ik = pair_index(n, i, k);
        p.rows.push_back({{{ij, 1.0}, {jk, 1.0}, {ik, -1.0}}, 1.0});
        p.rows.push_back({{{ij, 1.0}, {jk, -1.0}, {ik, 1.0}}, 1.0});
        p.rows.push_back({{{ij, -1.0}, {jk, 1.0}, {ik, 1.0}}, 1.0});
      }
  return p;
}

double relaxed_upper_bound(const WeightedGraph& graph, int node_cap) {
  LpSolution sol = solve_lp(build_relaxed_ilp(graph, node_cap));
  if (sol.status != LpStatus::kOptimal)
    throw Error("relaxed ILP solve failed");
  return sol.value + graph.loop_offset();
}

}  // namespace cliquepart
