//! Self-contained linear-programming subsystem: a bounded-variable
//! two-phase primal simplex with a dense basis inverse and sparse
//! constraint columns.
//!
//! Problems are small (a few hundred rows after the daily scheduling
//! decomposition), so determinism and zero external dependencies are
//! worth more than state-of-the-art speed. Pivoting is deterministic:
//! most-negative reduced cost, ties by lowest variable index, with
//! Bland's rule engaged after 10*(m+n) degenerate pivots.

use serde::Serialize;
use thiserror::Error;

/// Feasibility tolerance, scaled by (1 + ||b||_inf).
pub const FEAS_TOL: f64 = 1e-8;
/// Reduced-cost (optimality) tolerance.
pub const OPT_TOL: f64 = 1e-9;

const REFACTOR_EVERY: usize = 128;

#[derive(Debug, Error, PartialEq)]
pub enum LpError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("variable {0} has lower bound above upper bound")]
    BadBounds(usize),
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

/// `min c.x  s.t.  A_eq x = b_eq,  A_in x <= b_in,  lower <= x <= upper`.
/// Infinite bounds are expressed with `f64::NEG_INFINITY` / `f64::INFINITY`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    pub c: Vec<f64>,
    pub a_eq: Vec<Vec<f64>>,
    pub b_eq: Vec<f64>,
    pub a_in: Vec<Vec<f64>>,
    pub b_in: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    /// Optional variable names for diagnostics and dumps.
    pub names: Vec<String>,
}

impl LpProblem {
    pub fn n_vars(&self) -> usize {
        self.c.len()
    }

    fn validate(&self) -> Result<(), LpError> {
        let n = self.n_vars();
        if self.lower.len() != n || self.upper.len() != n {
            return Err(LpError::DimensionMismatch("bounds".into()));
        }
        if self.a_eq.len() != self.b_eq.len() || self.a_in.len() != self.b_in.len() {
            return Err(LpError::DimensionMismatch("rhs".into()));
        }
        for row in self.a_eq.iter().chain(&self.a_in) {
            if row.len() != n {
                return Err(LpError::DimensionMismatch("row".into()));
            }
        }
        if !self.names.is_empty() && self.names.len() != n {
            return Err(LpError::DimensionMismatch("names".into()));
        }
        for j in 0..n {
            if self.lower[j] > self.upper[j] {
                return Err(LpError::BadBounds(j));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Empty unless status is Optimal.
    pub x: Vec<f64>,
    pub objective: f64,
}

/// Worst-case violations of a candidate point against a problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport {
    pub max_eq_residual: f64,
    pub max_in_violation: f64,
    pub max_bound_violation: f64,
}

impl ResidualReport {
    pub fn within(&self, tol: f64) -> bool {
        self.max_eq_residual <= tol
            && self.max_in_violation <= tol
            && self.max_bound_violation <= tol
    }
}

pub fn check_solution(p: &LpProblem, x: &[f64]) -> Result<ResidualReport, LpError> {
    p.validate()?;
    if x.len() != p.n_vars() {
        return Err(LpError::DimensionMismatch("x".into()));
    }
    let dot = |row: &[f64]| row.iter().zip(x).map(|(a, v)| a * v).sum::<f64>();
    let max_eq_residual = p
        .a_eq
        .iter()
        .zip(&p.b_eq)
        .map(|(row, b)| (dot(row) - b).abs())
        .fold(0.0, f64::max);
    let max_in_violation = p
        .a_in
        .iter()
        .zip(&p.b_in)
        .map(|(row, b)| (dot(row) - b).max(0.0))
        .fold(0.0, f64::max);
    let max_bound_violation = (0..x.len())
        .map(|j| (p.lower[j] - x[j]).max(x[j] - p.upper[j]).max(0.0))
        .fold(0.0, f64::max);
    Ok(ResidualReport { max_eq_residual, max_in_violation, max_bound_violation })
}

/// Line-oriented dump (objective, constraints, bounds) with 12
/// significant digits, for cross-checking with external solvers.
pub fn dump_lp(p: &LpProblem) -> String {
    let name = |j: usize| -> String {
        if p.names.is_empty() { format!("x{j}") } else { p.names[j].clone() }
    };
    let term = |row: &[f64]| -> String {
        row.iter()
            .enumerate()
            .filter(|(_, &a)| a != 0.0)
            .map(|(j, &a)| format!("{:+.12e} {}", a, name(j)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    out.push_str("minimize\n  ");
    out.push_str(&term(&p.c));
    out.push_str("\nsubject to\n");
    for (row, b) in p.a_eq.iter().zip(&p.b_eq) {
        out.push_str(&format!("  {} = {:.12e}\n", term(row), b));
    }
    for (row, b) in p.a_in.iter().zip(&p.b_in) {
        out.push_str(&format!("  {} <= {:.12e}\n", term(row), b));
    }
    out.push_str("bounds\n");
    for j in 0..p.n_vars() {
        out.push_str(&format!("  {:.12e} <= {} <= {:.12e}\n", p.lower[j], name(j), p.upper[j]));
    }
    out
}

/// Where a nonbasic variable currently rests.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum NonbasicAt {
    Lower,
    Upper,
    /// Free variable parked at zero.
    Zero,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VarState {
    Basic(usize),
    Nonbasic(NonbasicAt),
}

struct Simplex {
    /// Sparse columns of the row-extended system [A | I_slack].
    cols: Vec<Vec<(usize, f64)>>,
    lower: Vec<f64>,
    upper: Vec<f64>,
    b: Vec<f64>,
    m: usize,
    n_total: usize,
    /// Basic variable per row.
    basis: Vec<usize>,
    state: Vec<VarState>,
    /// Dense row-major basis inverse.
    binv: Vec<f64>,
    x: Vec<f64>,
    feas_tol: f64,
}

enum StepOutcome {
    Optimal,
    Unbounded,
    Pivoted { degenerate: bool },
}

impl Simplex {
    fn column_times(&self, j: usize, scale: f64, out: &mut [f64]) {
        for &(i, a) in &self.cols[j] {
            out[i] += scale * a;
        }
    }

    /// d = B^-1 * A_j
    fn ftran(&self, j: usize) -> Vec<f64> {
        let mut d = vec![0.0; self.m];
        for &(i, a) in &self.cols[j] {
            for r in 0..self.m {
                d[r] += self.binv[r * self.m + i] * a;
            }
        }
        d
    }

    /// y = c_B * B^-1
    fn btran(&self, cost: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.m];
        for (r, &bi) in self.basis.iter().enumerate() {
            let cb = cost[bi];
            if cb != 0.0 {
                for i in 0..self.m {
                    y[i] += cb * self.binv[r * self.m + i];
                }
            }
        }
        y
    }

    fn reduced_cost(&self, cost: &[f64], y: &[f64], j: usize) -> f64 {
        let mut d = cost[j];
        for &(i, a) in &self.cols[j] {
            d -= y[i] * a;
        }
        d
    }

    /// Rebuild B^-1 from scratch by Gauss-Jordan with partial pivoting,
    /// then recompute the basic values from the nonbasic rest points.
    fn refactorize(&mut self) -> Result<(), LpError> {
        let m = self.m;
        let mut aug = vec![0.0; m * 2 * m];
        for (r, &bi) in self.basis.iter().enumerate() {
            for &(i, a) in &self.cols[bi] {
                aug[i * 2 * m + r] = a;
            }
        }
        for i in 0..m {
            aug[i * 2 * m + m + i] = 1.0;
        }
        for col in 0..m {
            let pivot_row = (col..m)
                .max_by(|&a, &b| {
                    aug[a * 2 * m + col]
                        .abs()
                        .partial_cmp(&aug[b * 2 * m + col].abs())
                        .unwrap()
                })
                .unwrap();
            let pv = aug[pivot_row * 2 * m + col];
            if pv.abs() < 1e-12 {
                return Err(LpError::NumericalFailure("singular basis".into()));
            }
            if pivot_row != col {
                for k in 0..2 * m {
                    aug.swap(pivot_row * 2 * m + k, col * 2 * m + k);
                }
            }
            let inv = 1.0 / aug[col * 2 * m + col];
            for k in 0..2 * m {
                aug[col * 2 * m + k] *= inv;
            }
            for r in 0..m {
                if r == col {
                    continue;
                }
                let f = aug[r * 2 * m + col];
                if f != 0.0 {
                    for k in 0..2 * m {
                        aug[r * 2 * m + k] -= f * aug[col * 2 * m + k];
                    }
                }
            }
        }
        for r in 0..m {
            for i in 0..m {
                self.binv[r * m + i] = aug[r * 2 * m + m + i];
            }
        }
        // x_B = B^-1 (b - A_N x_N)
        let mut rhs = self.b.clone();
        for j in 0..self.n_total {
            if matches!(self.state[j], VarState::Nonbasic(_)) && self.x[j] != 0.0 {
                self.column_times(j, -self.x[j], &mut rhs);
            }
        }
        for (r, &bi) in self.basis.iter().enumerate() {
            let mut v = 0.0;
            for i in 0..m {
                v += self.binv[r * m + i] * rhs[i];
            }
            self.x[bi] = v;
        }
        Ok(())
    }

    /// One simplex iteration on the given cost vector.
    fn step(&mut self, cost: &[f64], bland: bool) -> Result<StepOutcome, LpError> {
        let y = self.btran(cost);

        // entering variable
        let mut enter: Option<(usize, f64, f64)> = None; // (var, reduced cost, direction sign)
        for j in 0..self.n_total {
            let at = match self.state[j] {
                VarState::Basic(_) => continue,
                VarState::Nonbasic(at) => at,
            };
            let d = self.reduced_cost(cost, &y, j);
            let sigma = match at {
                NonbasicAt::Lower if d < -OPT_TOL => 1.0,
                NonbasicAt::Upper if d > OPT_TOL => -1.0,
                NonbasicAt::Zero if d.abs() > OPT_TOL => -d.signum(),
                _ => continue,
            };
            let rate = -sigma * d; // positive improvement rate
            if bland {
                enter = Some((j, d, sigma));
                break;
            }
            if enter.is_none_or(|(_, bd, bs)| rate > -bs * bd) {
                enter = Some((j, d, sigma));
            }
        }
        let Some((q, _, sigma)) = enter else {
            return Ok(StepOutcome::Optimal);
        };

        // ratio test: t >= 0 along x_q moving by sigma
        let d = self.ftran(q);
        let mut t_limit = f64::INFINITY;
        let mut leave: Option<usize> = None; // row index
        for (r, &bi) in self.basis.iter().enumerate() {
            let dir = sigma * d[r]; // x_bi changes by -t*dir
            let t_r = if dir > 1e-10 {
                if self.lower[bi] == f64::NEG_INFINITY {
                    continue;
                }
                (self.x[bi] - self.lower[bi]) / dir
            } else if dir < -1e-10 {
                if self.upper[bi] == f64::INFINITY {
                    continue;
                }
                (self.x[bi] - self.upper[bi]) / dir
            } else {
                continue;
            };
            let t_r = t_r.max(0.0);
            let better = match leave {
                None => t_r < t_limit,
                Some(cur) => {
                    t_r < t_limit - 1e-12
                        || (t_r < t_limit + 1e-12 && bi < self.basis[cur])
                }
            };
            if better {
                t_limit = t_r.min(t_limit);
                leave = Some(r);
            }
        }
        // bound flip of the entering variable itself
        let span = self.upper[q] - self.lower[q];
        let flip = span.is_finite() && span < t_limit - 1e-12;

        if flip {
            let t = span;
            for (r, &bi) in self.basis.iter().enumerate() {
                self.x[bi] -= t * sigma * d[r];
            }
            self.x[q] += t * sigma;
            self.state[q] = VarState::Nonbasic(if sigma > 0.0 {
                NonbasicAt::Upper
            } else {
                NonbasicAt::Lower
            });
            return Ok(StepOutcome::Pivoted { degenerate: t < 1e-12 });
        }

        let Some(r) = leave else {
            return Ok(StepOutcome::Unbounded);
        };
        let t = t_limit;
        let leaving = self.basis[r];
        for (row, &bi) in self.basis.iter().enumerate() {
            self.x[bi] -= t * sigma * d[row];
        }
        self.x[q] += t * sigma;
        // pin the leaving variable exactly on the bound it hit
        let dir = sigma * d[r];
        let at = if dir > 0.0 {
            self.x[leaving] = self.lower[leaving];
            NonbasicAt::Lower
        } else {
            self.x[leaving] = self.upper[leaving];
            NonbasicAt::Upper
        };
        self.state[leaving] = VarState::Nonbasic(at);
        self.state[q] = VarState::Basic(r);
        self.basis[r] = q;

        // eta update of B^-1: row r scaled, others eliminated
        let m = self.m;
        let piv = d[r];
        if piv.abs() < 1e-11 {
            return Err(LpError::NumericalFailure("tiny pivot".into()));
        }
        let inv = 1.0 / piv;
        for i in 0..m {
            self.binv[r * m + i] *= inv;
        }
        for row in 0..m {
            if row == r || d[row] == 0.0 {
                continue;
            }
            let f = d[row];
            for i in 0..m {
                self.binv[row * m + i] -= f * self.binv[r * m + i];
            }
        }
        Ok(StepOutcome::Pivoted { degenerate: t < 1e-12 })
    }

    fn optimize(&mut self, cost: &[f64]) -> Result<LpStatus, LpError> {
        let bland_after = 10 * (self.m + self.n_total);
        let mut degenerate_streak = 0usize;
        let mut pivots = 0usize;
        let iteration_cap = 50 * (self.m + self.n_total) + 1000;
        for _ in 0..iteration_cap {
            let bland = degenerate_streak > bland_after;
            match self.step(cost, bland)? {
                StepOutcome::Optimal => return Ok(LpStatus::Optimal),
                StepOutcome::Unbounded => return Ok(LpStatus::Unbounded),
                StepOutcome::Pivoted { degenerate } => {
                    degenerate_streak = if degenerate { degenerate_streak + 1 } else { 0 };
                    pivots += 1;
                    if pivots.is_multiple_of(REFACTOR_EVERY) {
                        self.refactorize()?;
                    }
                }
            }
        }
        Err(LpError::NumericalFailure("iteration limit exceeded".into()))
    }
}

pub fn solve_lp(p: &LpProblem) -> Result<LpSolution, LpError> {
    p.validate()?;
    let n = p.n_vars();
    let m = p.a_eq.len() + p.a_in.len();
    let b_scale = 1.0
        + p.b_eq
            .iter()
            .chain(&p.b_in)
            .map(|v| v.abs())
            .fold(0.0, f64::max);
    let feas_tol = FEAS_TOL * b_scale;

    if m == 0 {
        // pure box problem: each variable sits at its cheapest bound
        let mut x = vec![0.0; n];
        for j in 0..n {
            x[j] = if p.c[j] > 0.0 {
                p.lower[j]
            } else if p.c[j] < 0.0 {
                p.upper[j]
            } else if p.lower[j].is_finite() {
                p.lower[j]
            } else {
                p.upper[j].min(0.0).max(p.lower[j])
            };
            if !x[j].is_finite() {
                return Ok(LpSolution {
                    status: LpStatus::Unbounded,
                    x: vec![],
                    objective: f64::NEG_INFINITY,
                });
            }
        }
        let objective = p.c.iter().zip(&x).map(|(c, v)| c * v).sum();
        return Ok(LpSolution { status: LpStatus::Optimal, x, objective });
    }

    // Extended system: structural vars, then one slack per row
    // (equality slacks fixed at zero), then artificials as needed.
    let n_slack = m;
    let mut cols: Vec<Vec<(usize, f64)>> = Vec::with_capacity(n + n_slack);
    for j in 0..n {
        let mut col = Vec::new();
        for (i, row) in p.a_eq.iter().enumerate() {
            if row[j] != 0.0 {
                col.push((i, row[j]));
            }
        }
        for (i, row) in p.a_in.iter().enumerate() {
            if row[j] != 0.0 {
                col.push((p.a_eq.len() + i, row[j]));
            }
        }
        cols.push(col);
    }
    let mut lower = p.lower.clone();
    let mut upper = p.upper.clone();
    for i in 0..m {
        cols.push(vec![(i, 1.0)]);
        if i < p.a_eq.len() {
            lower.push(0.0);
            upper.push(0.0);
        } else {
            lower.push(0.0);
            upper.push(f64::INFINITY);
        }
    }
    let b: Vec<f64> = p.b_eq.iter().chain(&p.b_in).copied().collect();

    // nonbasic rest points for structural variables
    let mut x = vec![0.0; n + n_slack];
    let mut state = Vec::with_capacity(n + n_slack);
    for j in 0..n {
        let (v, at) = if lower[j].is_finite() {
            (lower[j], NonbasicAt::Lower)
        } else if upper[j].is_finite() {
            (upper[j], NonbasicAt::Upper)
        } else {
            (0.0, NonbasicAt::Zero)
        };
        x[j] = v;
        state.push(VarState::Nonbasic(at));
    }

    // residual the slack of each row must absorb
    let mut resid = b.clone();
    for j in 0..n {
        if x[j] != 0.0 {
            for &(i, a) in &cols[j] {
                resid[i] -= a * x[j];
            }
        }
    }

    // first pass: slack states in index order; rows whose slack cannot
    // absorb the residual are noted for artificials
    let mut basis = Vec::with_capacity(m);
    let mut needs_artificial = Vec::new();
    for i in 0..m {
        let s = n + i;
        if resid[i] >= lower[s] - feas_tol && resid[i] <= upper[s] + feas_tol {
            x[s] = resid[i].clamp(lower[s], upper[s]);
            state.push(VarState::Basic(i));
            basis.push(s);
        } else {
            // park the slack at its nearest bound; an artificial will
            // carry the remaining gap
            let park = if resid[i] < lower[s] { lower[s] } else { upper[s] };
            x[s] = park;
            state.push(VarState::Nonbasic(if park == lower[s] {
                NonbasicAt::Lower
            } else {
                NonbasicAt::Upper
            }));
            needs_artificial.push((i, resid[i] - park));
            basis.push(usize::MAX); // patched below
        }
    }
    // second pass: append the artificial columns after all slacks so
    // column, bound, value, and state indices stay aligned
    let mut artificials = Vec::new();
    for &(i, gap) in &needs_artificial {
        let a = cols.len();
        cols.push(vec![(i, gap.signum())]);
        lower.push(0.0);
        upper.push(f64::INFINITY);
        x.push(gap.abs());
        state.push(VarState::Basic(i));
        basis[i] = a;
        artificials.push(a);
    }

    let n_total = cols.len();
    let mut sx = Simplex {
        cols,
        lower,
        upper,
        b,
        m,
        n_total,
        basis,
        state,
        binv: {
            let mut id = vec![0.0; m * m];
            for i in 0..m {
                id[i * m + i] = 1.0;
            }
            id
        },
        x,
        feas_tol,
    };
    // artificial columns carry the residual's sign, so the starting
    // basis is not the identity; build its inverse explicitly
    sx.refactorize()?;

    // phase 1: minimize the artificial sum
    if !artificials.is_empty() {
        let mut c1 = vec![0.0; n_total];
        for &a in &artificials {
            c1[a] = 1.0;
        }
        match sx.optimize(&c1)? {
            LpStatus::Optimal => {}
            _ => return Err(LpError::NumericalFailure("phase 1 unbounded".into())),
        }
        let infeas: f64 = artificials.iter().map(|&a| sx.x[a]).sum();
        if infeas > sx.feas_tol {
            return Ok(LpSolution { status: LpStatus::Infeasible, x: vec![], objective: 0.0 });
        }
        // freeze artificials at zero so phase 2 cannot reuse them
        for &a in &artificials {
            sx.lower[a] = 0.0;
            sx.upper[a] = 0.0;
            if let VarState::Nonbasic(_) = sx.state[a] {
                sx.x[a] = 0.0;
                sx.state[a] = VarState::Nonbasic(NonbasicAt::Lower);
            }
        }
    }

    // phase 2
    let mut c2 = vec![0.0; n_total];
    c2[..n].copy_from_slice(&p.c);
    let status = sx.optimize(&c2)?;
    if status == LpStatus::Unbounded {
        return Ok(LpSolution {
            status: LpStatus::Unbounded,
            x: vec![],
            objective: f64::NEG_INFINITY,
        });
    }

    sx.refactorize()?;
    let solution: Vec<f64> = sx.x[..n].to_vec();
    let report = check_solution(p, &solution)?;
    if !report.within(sx.feas_tol.max(1e-7)) {
        return Err(LpError::NumericalFailure(format!(
            "residuals out of tolerance: {report:?}"
        )));
    }
    let objective = p.c.iter().zip(&solution).map(|(c, v)| c * v).sum();
    Ok(LpSolution { status: LpStatus::Optimal, x: solution, objective })
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;

    /// Gaussian elimination for the small square systems of the vertex
    /// enumeration oracle. Returns None if singular.
    pub fn solve_square(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
        let n = b.len();
        let mut m: Vec<Vec<f64>> = a
            .iter()
            .zip(b)
            .map(|(row, &rhs)| {
                let mut r = row.clone();
                r.push(rhs);
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).max_by(|&i, &j| {
                m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap()
            })?;
            if m[piv][col].abs() < 1e-10 {
                return None;
            }
            m.swap(col, piv);
            let inv = 1.0 / m[col][col];
            for k in col..=n {
                m[col][k] *= inv;
            }
            for r in 0..n {
                if r != col && m[r][col] != 0.0 {
                    let f = m[r][col];
                    for k in col..=n {
                        m[r][k] -= f * m[col][k];
                    }
                }
            }
        }
        Some(m.iter().map(|row| row[n]).collect())
    }

    /// Brute-force optimum by enumerating all basic feasible points:
    /// every choice of n active constraints among equalities,
    /// inequalities-at-equality, and bounds-at-equality.
    pub fn vertex_enumerate(p: &LpProblem) -> Option<(f64, Vec<f64>)> {
        let n = p.n_vars();
        // candidate active rows: (coefficients, rhs)
        let mut cands: Vec<(Vec<f64>, f64, bool)> = Vec::new(); // bool: mandatory
        for (row, &b) in p.a_eq.iter().zip(&p.b_eq) {
            cands.push((row.clone(), b, true));
        }
        for (row, &b) in p.a_in.iter().zip(&p.b_in) {
            cands.push((row.clone(), b, false));
        }
        for j in 0..n {
            for bound in [p.lower[j], p.upper[j]] {
                if bound.is_finite() {
                    let mut row = vec![0.0; n];
                    row[j] = 1.0;
                    cands.push((row, bound, false));
                }
            }
        }
        let total = cands.len();
        assert!(total <= 24, "oracle limited to small fixtures");
        let mut best: Option<(f64, Vec<f64>)> = None;
        // choose n of `total` via bitmask
        for mask in 0u32..(1 << total) {
            if mask.count_ones() as usize != n {
                continue;
            }
            if cands.iter().enumerate().any(|(i, c)| c.2 && mask & (1 << i) == 0) {
                continue;
            }
            let chosen: Vec<usize> =
                (0..total).filter(|&i| mask & (1 << i) != 0).collect();
            let a: Vec<Vec<f64>> = chosen.iter().map(|&i| cands[i].0.clone()).collect();
            let b: Vec<f64> = chosen.iter().map(|&i| cands[i].1).collect();
            let Some(x) = solve_square(&a, &b) else { continue };
            let report = check_solution(p, &x).unwrap();
            if !report.within(1e-7) {
                continue;
            }
            let obj: f64 = p.c.iter().zip(&x).map(|(c, v)| c * v).sum();
            if best.as_ref().is_none_or(|(bo, _)| obj < *bo) {
                best = Some((obj, x));
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::testutil::*;
    use super::*;

    fn boxed(c: Vec<f64>, lower: Vec<f64>, upper: Vec<f64>) -> LpProblem {
        LpProblem {
            c,
            a_eq: vec![],
            b_eq: vec![],
            a_in: vec![],
            b_in: vec![],
            lower,
            upper,
            names: vec![],
        }
    }

    #[test]
    fn min_x_above_three() {
        // min x s.t. x >= 3
        let p = boxed(vec![1.0], vec![3.0], vec![f64::INFINITY]);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective - 3.0).abs() < 1e-9);
        assert!((s.x[0] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn contradictory_bound_and_row_infeasible() {
        // min -x s.t. x <= 0 (row), x >= 1 (bound)
        let p = LpProblem {
            c: vec![-1.0],
            a_eq: vec![],
            b_eq: vec![],
            a_in: vec![vec![1.0]],
            b_in: vec![0.0],
            lower: vec![1.0],
            upper: vec![f64::INFINITY],
            names: vec![],
        };
        assert_eq!(solve_lp(&p).unwrap().status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let p = LpProblem {
            c: vec![-1.0, 0.0],
            a_eq: vec![],
            b_eq: vec![],
            a_in: vec![vec![-1.0, 1.0]],
            b_in: vec![1.0],
            lower: vec![0.0, 0.0],
            upper: vec![f64::INFINITY, f64::INFINITY],
            names: vec![],
        };
        assert_eq!(solve_lp(&p).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn equality_system_solved() {
        // min x+y s.t. x + y = 4, x - y = 2 -> x=3, y=1
        let p = LpProblem {
            c: vec![1.0, 1.0],
            a_eq: vec![vec![1.0, 1.0], vec![1.0, -1.0]],
            b_eq: vec![4.0, 2.0],
            a_in: vec![],
            b_in: vec![],
            lower: vec![0.0, 0.0],
            upper: vec![f64::INFINITY, f64::INFINITY],
            names: vec![],
        };
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.x[0] - 3.0).abs() < 1e-9);
        assert!((s.x[1] - 1.0).abs() < 1e-9);
    }

    fn toy_fixture_set() -> Vec<LpProblem> {
        vec![
            // classic 2-var production LP
            LpProblem {
                c: vec![-3.0, -5.0],
                a_eq: vec![],
                b_eq: vec![],
                a_in: vec![vec![1.0, 0.0], vec![0.0, 2.0], vec![3.0, 2.0]],
                b_in: vec![4.0, 12.0, 18.0],
                lower: vec![0.0, 0.0],
                upper: vec![10.0, 10.0],
                names: vec![],
            },
            // 3 vars, 2 constraints, mixed signs
            LpProblem {
                c: vec![1.0, -2.0, 0.5],
                a_eq: vec![vec![1.0, 1.0, 1.0]],
                b_eq: vec![5.0],
                a_in: vec![vec![1.0, -1.0, 2.0]],
                b_in: vec![3.0],
                lower: vec![0.0, 0.0, 0.0],
                upper: vec![4.0, 4.0, 4.0],
                names: vec![],
            },
            // degenerate corner
            LpProblem {
                c: vec![-1.0, -1.0],
                a_eq: vec![],
                b_eq: vec![],
                a_in: vec![vec![1.0, 1.0], vec![1.0, 1.0], vec![1.0, 0.0]],
                b_in: vec![2.0, 2.0, 1.0],
                lower: vec![0.0, 0.0],
                upper: vec![5.0, 5.0],
                names: vec![],
            },
            // bounded-variable emphasis: optimum at an upper bound
            LpProblem {
                c: vec![-1.0, 2.0, -0.5, 1.0],
                a_eq: vec![],
                b_eq: vec![],
                a_in: vec![vec![1.0, 1.0, 1.0, 1.0], vec![2.0, -1.0, 0.0, 1.0]],
                b_in: vec![6.0, 4.0],
                lower: vec![0.0, 0.5, 0.0, 0.0],
                upper: vec![2.0, 3.0, 2.5, 1.0],
                names: vec![],
            },
        ]
    }

    #[test]
    fn fixtures_match_vertex_enumeration() {
        for (idx, p) in toy_fixture_set().iter().enumerate() {
            let s = solve_lp(p).unwrap();
            assert_eq!(s.status, LpStatus::Optimal, "fixture {idx}");
            let (oracle_obj, _) = vertex_enumerate(p).expect("oracle found a vertex");
            let scale = 1.0 + oracle_obj.abs();
            assert!(
                (s.objective - oracle_obj).abs() <= 1e-9 * scale,
                "fixture {idx}: simplex {} vs oracle {}",
                s.objective,
                oracle_obj
            );
        }
    }

    #[test]
    fn weak_duality_spot_check() {
        // every sampled feasible point must cost at least the optimum
        for p in toy_fixture_set() {
            let s = solve_lp(&p).unwrap();
            let n = p.n_vars();
            let mut seed = 0x9e3779b97f4a7c15u64;
            let mut uniform = || {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (seed >> 11) as f64 / (1u64 << 53) as f64
            };
            let mut tested = 0;
            for _ in 0..1000 {
                let x: Vec<f64> = (0..n)
                    .map(|j| p.lower[j] + uniform() * (p.upper[j] - p.lower[j]).min(10.0))
                    .collect();
                if !check_solution(&p, &x).unwrap().within(1e-9) {
                    continue;
                }
                tested += 1;
                let obj: f64 = p.c.iter().zip(&x).map(|(c, v)| c * v).sum();
                assert!(obj >= s.objective - 1e-7);
            }
            // inequality-only fixtures admit plenty of feasible samples
            if p.a_eq.is_empty() {
                assert!(tested > 0);
            }
        }
    }

    #[test]
    fn determinism_bitwise() {
        for p in toy_fixture_set() {
            let a = solve_lp(&p).unwrap();
            let b = solve_lp(&p).unwrap();
            assert_eq!(a.x, b.x);
            assert!(a.objective.to_bits() == b.objective.to_bits());
        }
    }

    #[test]
    fn solutions_pass_residual_check() {
        for p in toy_fixture_set() {
            let s = solve_lp(&p).unwrap();
            let report = check_solution(&p, &s.x).unwrap();
            assert!(report.within(1e-8 * (1.0 + 20.0)));
        }
    }

    #[test]
    fn bound_violation_reported_exactly() {
        let p = boxed(vec![1.0], vec![0.0], vec![1.0]);
        let report = check_solution(&p, &[1.5]).unwrap();
        assert_eq!(report.max_bound_violation, 0.5);
        assert_eq!(report.max_eq_residual, 0.0);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let p = boxed(vec![1.0], vec![0.0], vec![1.0]);
        assert!(matches!(
            check_solution(&p, &[1.0, 2.0]),
            Err(LpError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn dump_round_trips_the_shape() {
        let p = toy_fixture_set().remove(0);
        let text = dump_lp(&p);
        assert!(text.contains("minimize"));
        assert!(text.contains("subject to"));
        assert_eq!(text.matches("<=").count(), 3 + 2 * p.n_vars());
    }

    #[test]
    fn free_variable_handled() {
        // min y s.t. y >= x - 2, y >= -x; x free -> optimum y = -1 at x = 1
        let p = LpProblem {
            c: vec![0.0, 1.0],
            a_eq: vec![],
            b_eq: vec![],
            a_in: vec![vec![1.0, -1.0], vec![-1.0, -1.0]],
            b_in: vec![2.0, 0.0],
            lower: vec![f64::NEG_INFINITY, f64::NEG_INFINITY],
            upper: vec![f64::INFINITY, f64::INFINITY],
            names: vec![],
        };
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective + 1.0).abs() < 1e-8, "objective {}", s.objective);
    }
}
