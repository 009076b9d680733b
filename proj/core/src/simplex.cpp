#include "kal/error.hpp"
#include "kal/solvers.hpp"

namespace kal {

namespace {

// Dense two-phase tableau. Columns are [structural | slack/surplus |
// artificial | rhs]; two objective rows (phase 1 and phase 2) are carried
// through every pivot so phase 2 starts with correct reduced costs.
class Tableau {
public:
  Tableau(std::size_t n_vars, const std::vector<SimplexRow>& rows, const Objective& c)
      : n_(n_vars), m_(rows.size()) {
    for (const auto& r : rows) {
      if (r.coeffs.size() != n_vars) throw ParamError("simplex: row arity mismatch");
    }
    // Column layout.
    std::size_t next_col = n_;
    std::vector<std::size_t> slack_col(m_, SIZE_MAX), art_col(m_, SIZE_MAX);
    std::vector<bool> flipped(m_, false), needs_art(m_, false);
    for (std::size_t r = 0; r < m_; ++r) {
      flipped[r] = rows[r].rhs.sign() < 0;
      const bool ge = rows[r].sense == RowSense::LessEq && flipped[r];
      const bool le = rows[r].sense == RowSense::LessEq && !flipped[r];
      if (le || ge) slack_col[r] = next_col++;
      needs_art[r] = !le;
      (void)ge;
    }
    art_begin_ = next_col;
    for (std::size_t r = 0; r < m_; ++r) {
      if (needs_art[r]) art_col[r] = next_col++;
    }
    cols_ = next_col;

    tab_.assign(m_, std::vector<Rational>(cols_ + 1));
    basis_.assign(m_, 0);
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational sign = flipped[r] ? Rational(-1) : Rational(1);
      for (std::size_t j = 0; j < n_; ++j) tab_[r][j] = sign * rows[r].coeffs[j];
      tab_[r][cols_] = sign * rows[r].rhs;
      if (slack_col[r] != SIZE_MAX) tab_[r][slack_col[r]] = flipped[r] ? Rational(-1) : Rational(1);
      if (art_col[r] != SIZE_MAX) tab_[r][art_col[r]] = Rational(1);
      basis_[r] = needs_art[r] ? art_col[r] : slack_col[r];
    }

    // Phase-2 reduced costs: initial basis has zero phase-2 cost.
    z2_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) z2_[j] = c.coeffs[j];

    // Phase-1 reduced costs for max(−Σ artificials): fold the artificial
    // rows into the objective so basic artificial columns read zero.
    z1_.assign(cols_ + 1, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      if (!needs_art[r]) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (j < art_begin_) z1_[j] += tab_[r][j];
      }
      z1_[cols_] += tab_[r][cols_];
    }
    has_artificials_ = art_begin_ < cols_;
  }

  LpResult solve(const Objective& c) {
    if (has_artificials_) {
      run_phase(z1_, /*allow_artificial_entering=*/false);
      if (!z1_[cols_].is_zero()) {
        return {LpStatus::Infeasible, Rational(0), Point{}};
      }
      evict_artificials();
    }
    if (!run_phase(z2_, /*allow_artificial_entering=*/false)) {
      return {LpStatus::Unbounded, Rational(0), Point{}};
    }
    LpResult res;
    res.status = LpStatus::Optimal;
    res.x.coords.assign(n_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) res.x.coords[basis_[r]] = tab_[r][cols_];
    }
    res.value = dot(c, res.x);
    return res;
  }

private:
  // Bland's rule; returns false on unbounded direction.
  bool run_phase(std::vector<Rational>& z, bool allow_artificial_entering) {
    for (;;) {
      std::size_t enter = SIZE_MAX;
      const std::size_t limit = allow_artificial_entering ? cols_ : art_begin_;
      for (std::size_t j = 0; j < limit; ++j) {
        if (z[j].sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == SIZE_MAX) return true;

      std::size_t leave = SIZE_MAX;
      Rational best_ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (tab_[r][enter].sign() <= 0) continue;
        Rational ratio = tab_[r][cols_] / tab_[r][enter];
        if (leave == SIZE_MAX || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == SIZE_MAX) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    auto& row = tab_[r];
    const Rational inv = Rational(1) / row[e];
    for (auto& v : row) {
      if (!v.is_zero()) v *= inv;
    }
    row[e] = Rational(1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      eliminate(tab_[i], row, e);
    }
    eliminate(z1_, row, e);
    eliminate(z2_, row, e);
    basis_[r] = e;
  }

  static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& pivot_row,
                        std::size_t e) {
    if (target[e].is_zero()) return;
    const Rational factor = target[e];
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (!pivot_row[j].is_zero()) target[j] -= factor * pivot_row[j];
    }
    target[e] = Rational(0);
  }

  // Pivots zero-level artificials out of the basis; rows that cannot be
  // pivoted are redundant and get blanked.
  void evict_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < art_begin_) continue;
      std::size_t e = SIZE_MAX;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (!tab_[r][j].is_zero()) {
          e = j;
          break;
        }
      }
      if (e != SIZE_MAX) {
        pivot(r, e);
      } else {
        for (auto& v : tab_[r]) v = Rational(0);
      }
    }
  }

  std::size_t n_, m_, cols_ = 0, art_begin_ = 0;
  bool has_artificials_ = false;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> z1_, z2_;
  std::vector<std::size_t> basis_;
};

} // namespace

LpResult simplex_max(std::size_t n_vars, const std::vector<SimplexRow>& rows, const Objective& c) {
  if (c.dim() != n_vars) throw ParamError("simplex: objective dimension mismatch");
  Tableau t(n_vars, rows, c);
  return t.solve(c);
}

namespace {

SolveResult to_solve_result(const LpResult& lp, const char* what) {
  if (lp.status == LpStatus::Infeasible) throw SolveError(std::string(what) + ": infeasible");
  if (lp.status == LpStatus::Unbounded) throw SolveError(std::string(what) + ": unbounded");
  SolveResult res;
  res.value = lp.value;
  res.argmax = lp.x;
  res.method = SolveMethod::Simplex;
  return res;
}

} // namespace

SolveResult lp_max(const DownMonotoneSystem& sys, const Objective& c) {
  require_valid(sys);
  std::vector<SimplexRow> rows;
  rows.reserve(sys.rows.size() + sys.n_vars);
  for (const auto& r : sys.rows) rows.push_back({r.coeffs, r.rhs, RowSense::LessEq});
  for (std::size_t i = 0; i < sys.n_vars; ++i) {
    SimplexRow box;
    box.coeffs.assign(sys.n_vars, Rational(0));
    box.coeffs[i] = Rational(1);
    box.rhs = Rational(1);
    rows.push_back(std::move(box));
  }
  return to_solve_result(simplex_max(sys.n_vars, rows, c), "lp_max");
}

SolveResult lp_max(const LinearSystem& sys, const Objective& c) {
  std::vector<SimplexRow> rows;
  rows.reserve(sys.rows.size());
  for (const auto& r : sys.rows) rows.push_back({r.coeffs, r.rhs, RowSense::LessEq});
  return to_solve_result(simplex_max(sys.n_vars, rows, c), "lp_max");
}

} // namespace kal
