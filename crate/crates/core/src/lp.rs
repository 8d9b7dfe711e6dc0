//! Exact linear programming over an ordered field.
//!
//! Two-phase dense simplex with Bland's rule, so it terminates on every
//! input. Every pivot is exact and the pivot rule is fixed, making the
//! solver deterministic. Outcomes carry certificates: a primal solution
//! when optimal, an improving feasible ray when unbounded, and a Farkas
//! witness when infeasible.

use crate::error::{Error, Result};
use crate::scalar::{Extended, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub relation: Relation,
    pub rhs: T,
}

impl<T> Constraint<T> {
    pub fn new(coeffs: Vec<T>, relation: Relation, rhs: T) -> Self {
        Constraint { coeffs, relation, rhs }
    }
}

/// Per-variable bounds; `None` means unbounded on that side.
#[derive(Clone, Debug)]
pub struct Bounds<T> {
    pub lower: Option<T>,
    pub upper: Option<T>,
}

impl<T: Scalar> Bounds<T> {
    pub fn nonneg() -> Self {
        Bounds { lower: Some(T::zero()), upper: None }
    }

    pub fn free() -> Self {
        Bounds { lower: None, upper: None }
    }

    pub fn at_least(l: T) -> Self {
        Bounds { lower: Some(l), upper: None }
    }

    pub fn interval(l: T, u: T) -> Self {
        Bounds { lower: Some(l), upper: Some(u) }
    }
}

#[derive(Clone, Debug)]
pub struct LinearProgram<T> {
    sense: Sense,
    objective: Vec<T>,
    constraints: Vec<Constraint<T>>,
    bounds: Vec<Bounds<T>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

/// Infeasibility witness over the original program: multipliers for the
/// constraint rows and for the variable bounds. Validity (checked by
/// [`LinearProgram::verify_farkas`]): row multipliers are `>= 0` for `Le`
/// rows, `<= 0` for `Ge` rows, free for `Eq`; bound multipliers are
/// non-negative and only touch bounds that exist; the aggregated
/// inequality has a zero coefficient vector and a strictly negative
/// right-hand side, so no point can satisfy all constraints.
#[derive(Clone, Debug)]
pub struct FarkasWitness<T> {
    pub row_multipliers: Vec<T>,
    pub lower_multipliers: Vec<T>,
    pub upper_multipliers: Vec<T>,
}

#[derive(Clone, Debug)]
pub enum Certificate<T> {
    /// Feasible direction that strictly improves the objective forever.
    Ray(Vec<T>),
    Farkas(FarkasWitness<T>),
}

#[derive(Clone, Debug)]
pub struct LpOutcome<T> {
    pub status: LpStatus,
    pub value: Extended<T>,
    pub solution: Option<Vec<T>>,
    pub certificate: Option<Certificate<T>>,
}

impl<T: Scalar> LinearProgram<T> {
    pub fn new(
        sense: Sense,
        objective: Vec<T>,
        constraints: Vec<Constraint<T>>,
        bounds: Vec<Bounds<T>>,
    ) -> Result<Self> {
        let n = objective.len();
        if n == 0 {
            return Err(Error::invalid("linear program", "no variables"));
        }
        if bounds.len() != n {
            return Err(Error::invalid(
                "linear program",
                format!("{} bounds for {} variables", bounds.len(), n),
            ));
        }
        for (i, c) in constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(Error::invalid(
                    "linear program",
                    format!("constraint {i} has {} coefficients, expected {n}", c.coeffs.len()),
                ));
            }
        }
        for (j, b) in bounds.iter().enumerate() {
            if let (Some(l), Some(u)) = (&b.lower, &b.upper) {
                if l > u {
                    return Err(Error::invalid(
                        "linear program",
                        format!("variable {j} has lower bound {l} above upper bound {u}"),
                    ));
                }
            }
        }
        Ok(LinearProgram { sense, objective, constraints, bounds })
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn objective_value(&self, x: &[T]) -> T {
        dot(&self.objective, x)
    }

    /// Exact feasibility check of a candidate point.
    pub fn is_feasible(&self, x: &[T]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        for c in &self.constraints {
            let lhs = dot(&c.coeffs, x);
            let ok = match c.relation {
                Relation::Le => lhs <= c.rhs,
                Relation::Eq => lhs == c.rhs,
                Relation::Ge => lhs >= c.rhs,
            };
            if !ok {
                return false;
            }
        }
        for (xj, b) in x.iter().zip(&self.bounds) {
            if b.lower.as_ref().is_some_and(|l| xj < l) {
                return false;
            }
            if b.upper.as_ref().is_some_and(|u| xj > u) {
                return false;
            }
        }
        true
    }

    /// Checks that `ray` preserves feasibility and strictly improves the
    /// objective in the optimization direction.
    pub fn verify_ray(&self, ray: &[T]) -> bool {
        if ray.len() != self.num_vars() || ray.iter().all(|r| r.is_zero()) {
            return false;
        }
        for c in &self.constraints {
            let drift = dot(&c.coeffs, ray);
            let ok = match c.relation {
                Relation::Le => !drift.is_positive(),
                Relation::Eq => drift.is_zero(),
                Relation::Ge => !drift.is_negative(),
            };
            if !ok {
                return false;
            }
        }
        for (rj, b) in ray.iter().zip(&self.bounds) {
            if b.lower.is_some() && rj.is_negative() {
                return false;
            }
            if b.upper.is_some() && rj.is_positive() {
                return false;
            }
        }
        let gain = dot(&self.objective, ray);
        match self.sense {
            Sense::Maximize => gain.is_positive(),
            Sense::Minimize => gain.is_negative(),
        }
    }

    /// Checks a Farkas witness against the original program.
    pub fn verify_farkas(&self, w: &FarkasWitness<T>) -> bool {
        let n = self.num_vars();
        if w.row_multipliers.len() != self.constraints.len()
            || w.lower_multipliers.len() != n
            || w.upper_multipliers.len() != n
        {
            return false;
        }
        for (c, y) in self.constraints.iter().zip(&w.row_multipliers) {
            let ok = match c.relation {
                Relation::Le => !y.is_negative(),
                Relation::Ge => !y.is_positive(),
                Relation::Eq => true,
            };
            if !ok {
                return false;
            }
        }
        let mut value = T::zero();
        for (c, y) in self.constraints.iter().zip(&w.row_multipliers) {
            value = value + y.clone() * c.rhs.clone();
        }
        for j in 0..n {
            let lam = &w.lower_multipliers[j];
            let mu = &w.upper_multipliers[j];
            if lam.is_negative() || mu.is_negative() {
                return false;
            }
            let mut d = T::zero();
            for (c, y) in self.constraints.iter().zip(&w.row_multipliers) {
                d = d + y.clone() * c.coeffs[j].clone();
            }
            if d - lam.clone() + mu.clone() != T::zero() {
                return false;
            }
            match (&self.bounds[j].lower, lam.is_zero()) {
                (None, false) => return false,
                (Some(l), _) => value = value - lam.clone() * l.clone(),
                (None, true) => {}
            }
            match (&self.bounds[j].upper, mu.is_zero()) {
                (None, false) => return false,
                (Some(u), _) => value = value + mu.clone() * u.clone(),
                (None, true) => {}
            }
        }
        value.is_negative()
    }

    /// Solves the program exactly.
    pub fn solve(&self) -> LpOutcome<T> {
        Solver::new(self).run()
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// How an original variable was rewritten into non-negative solver
/// variables.
#[derive(Clone, Debug)]
enum VarMap<T> {
    /// `x = offset + y`, `y >= 0`.
    Shift { col: usize, offset: T },
    /// `x = offset - y`, `y >= 0`.
    Flip { col: usize, offset: T },
    /// `x = y_pos - y_neg`.
    Split { pos: usize, neg: usize },
}

/// Provenance of a standardized row.
#[derive(Clone, Copy, Debug)]
enum RowOrigin {
    Constraint(usize),
    /// Bound row `y <= upper - lower` for a doubly bounded variable.
    UpperBound,
}

struct Solver<'a, T> {
    lp: &'a LinearProgram<T>,
    var_maps: Vec<VarMap<T>>,
    row_origin: Vec<RowOrigin>,
    row_flip: Vec<bool>,
    rows: Vec<Vec<T>>, // m x (ncols + 1), the last column is the rhs
    basis: Vec<usize>,
    n_struct: usize, // structural columns (vars + slacks); artificials follow
    ncols: usize,
    cost1: Vec<T>, // phase-1 reduced costs (maximize -sum of artificials)
    cost1_val: T,  // current phase-1 objective value
    cost2: Vec<T>, // phase-2 reduced costs (internal max objective)
}

impl<'a, T: Scalar> Solver<'a, T> {
    fn new(lp: &'a LinearProgram<T>) -> Self {
        let n = lp.num_vars();
        let internal_obj: Vec<T> = match lp.sense {
            Sense::Maximize => lp.objective.clone(),
            Sense::Minimize => lp.objective.iter().map(|c| -c.clone()).collect(),
        };

        // Variable rewrites.
        let mut var_maps: Vec<VarMap<T>> = Vec::with_capacity(n);
        let mut nv = 0usize;
        let mut bound_rows: Vec<(usize, T)> = Vec::new(); // (column, range)
        for b in &lp.bounds {
            match (&b.lower, &b.upper) {
                (Some(l), upper) => {
                    let col = nv;
                    nv += 1;
                    if let Some(u) = upper {
                        bound_rows.push((col, u.clone() - l.clone()));
                    }
                    var_maps.push(VarMap::Shift { col, offset: l.clone() });
                }
                (None, Some(u)) => {
                    let col = nv;
                    nv += 1;
                    var_maps.push(VarMap::Flip { col, offset: u.clone() });
                }
                (None, None) => {
                    var_maps.push(VarMap::Split { pos: nv, neg: nv + 1 });
                    nv += 2;
                }
            }
        }

        let m = lp.constraints.len() + bound_rows.len();
        let n_slack =
            lp.constraints.iter().filter(|c| c.relation != Relation::Eq).count() + bound_rows.len();
        let n_struct = nv + n_slack;
        let ncols = n_struct + m;

        let mut rows: Vec<Vec<T>> = Vec::with_capacity(m);
        let mut row_origin = Vec::with_capacity(m);
        let mut next_slack = nv;

        for (i, c) in lp.constraints.iter().enumerate() {
            let mut row = vec![T::zero(); ncols + 1];
            let mut rhs = c.rhs.clone();
            for (j, a) in c.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                match &var_maps[j] {
                    VarMap::Shift { col, offset } => {
                        row[*col] = row[*col].clone() + a.clone();
                        rhs = rhs - a.clone() * offset.clone();
                    }
                    VarMap::Flip { col, offset } => {
                        row[*col] = row[*col].clone() - a.clone();
                        rhs = rhs - a.clone() * offset.clone();
                    }
                    VarMap::Split { pos, neg } => {
                        row[*pos] = row[*pos].clone() + a.clone();
                        row[*neg] = row[*neg].clone() - a.clone();
                    }
                }
            }
            match c.relation {
                Relation::Le => {
                    row[next_slack] = T::one();
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -T::one();
                    next_slack += 1;
                }
                Relation::Eq => {}
            }
            row[ncols] = rhs;
            rows.push(row);
            row_origin.push(RowOrigin::Constraint(i));
        }
        for (col, range) in &bound_rows {
            let mut row = vec![T::zero(); ncols + 1];
            row[*col] = T::one();
            row[next_slack] = T::one();
            next_slack += 1;
            row[ncols] = range.clone();
            rows.push(row);
            row_origin.push(RowOrigin::UpperBound);
        }
        debug_assert_eq!(next_slack, n_struct);

        // Normalize to non-negative right-hand sides.
        let mut row_flip = Vec::with_capacity(m);
        for row in rows.iter_mut() {
            if row[ncols].is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
                row_flip.push(true);
            } else {
                row_flip.push(false);
            }
        }

        // Artificial identity and initial basis.
        let mut basis = Vec::with_capacity(m);
        for (r, row) in rows.iter_mut().enumerate() {
            row[n_struct + r] = T::one();
            basis.push(n_struct + r);
        }

        // Phase-1 reduced costs: with the all-artificial basis, the
        // reduced cost of a structural column is its column sum.
        let mut cost1 = vec![T::zero(); ncols];
        let mut cost1_val = T::zero();
        for row in &rows {
            for (j, c1) in cost1.iter_mut().enumerate().take(n_struct) {
                *c1 = c1.clone() + row[j].clone();
            }
            cost1_val = cost1_val - row[ncols].clone();
        }

        // Phase-2 reduced costs start as the internal objective
        // (artificials cost nothing, so no basis correction is needed).
        let mut cost2 = vec![T::zero(); ncols];
        for (j, map) in var_maps.iter().enumerate() {
            let c = internal_obj[j].clone();
            if c.is_zero() {
                continue;
            }
            match map {
                VarMap::Shift { col, .. } => cost2[*col] = cost2[*col].clone() + c,
                VarMap::Flip { col, .. } => cost2[*col] = cost2[*col].clone() - c,
                VarMap::Split { pos, neg } => {
                    cost2[*pos] = cost2[*pos].clone() + c.clone();
                    cost2[*neg] = cost2[*neg].clone() - c;
                }
            }
        }

        Solver {
            lp,
            var_maps,
            row_origin,
            row_flip,
            rows,
            basis,
            n_struct,
            ncols,
            cost1,
            cost1_val,
            cost2,
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let piv = self.rows[r][c].clone();
        debug_assert!(!piv.is_zero());
        for v in self.rows[r].iter_mut() {
            *v = v.clone() / piv.clone();
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for row in self.rows.iter_mut() {
            if row.is_empty() || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
        for cost in [&mut self.cost1, &mut self.cost2] {
            if cost[c].is_zero() {
                continue;
            }
            let factor = cost[c].clone();
            for (v, p) in cost.iter_mut().zip(&pivot_row) {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Bland's rule simplex on the selected cost row. Returns the entering
    /// column when the objective is unbounded above.
    fn simplex(&mut self, phase1: bool) -> Option<usize> {
        loop {
            let cost = if phase1 { &self.cost1 } else { &self.cost2 };
            let entering = (0..self.n_struct).find(|&j| cost[j].is_positive());
            let Some(c) = entering else { return None };
            let mut best: Option<(usize, T)> = None;
            for r in 0..self.rows.len() {
                if !self.rows[r][c].is_positive() {
                    continue;
                }
                let ratio = self.rows[r][self.ncols].clone() / self.rows[r][c].clone();
                best = match best {
                    None => Some((r, ratio)),
                    Some((br, bratio)) => {
                        if ratio < bratio || (ratio == bratio && self.basis[r] < self.basis[br]) {
                            Some((r, ratio))
                        } else {
                            Some((br, bratio))
                        }
                    }
                };
            }
            let Some((r, step)) = best else { return Some(c) };
            if phase1 {
                let gain = self.cost1[c].clone();
                self.cost1_val = self.cost1_val.clone() + gain * step;
            }
            self.pivot(r, c);
        }
    }

    fn run(mut self) -> LpOutcome<T> {
        // Phase 1: feasibility.
        let unbounded = self.simplex(true);
        debug_assert!(unbounded.is_none(), "phase 1 is bounded by construction");
        if self.cost1_val.is_negative() {
            let witness = self.farkas_witness();
            assert!(self.lp.verify_farkas(&witness), "invalid Farkas certificate");
            let value = if self.lp.sense == Sense::Maximize {
                Extended::MinusInf
            } else {
                Extended::PlusInf
            };
            return LpOutcome {
                status: LpStatus::Infeasible,
                value,
                solution: None,
                certificate: Some(Certificate::Farkas(witness)),
            };
        }

        // Drive artificial variables out of the basis; rows that cannot
        // release theirs are redundant and dropped.
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] < self.n_struct {
                r += 1;
                continue;
            }
            debug_assert!(self.rows[r][self.ncols].is_zero());
            match (0..self.n_struct).find(|&j| !self.rows[r][j].is_zero()) {
                Some(c) => {
                    self.pivot(r, c);
                    r += 1;
                }
                None => {
                    self.rows.swap_remove(r);
                    self.basis.swap_remove(r);
                }
            }
        }

        // Phase 2: optimize the real objective.
        if let Some(c) = self.simplex(false) {
            let ray = self.extract_ray(c);
            assert!(self.lp.verify_ray(&ray), "invalid unboundedness ray");
            let value = if self.lp.sense == Sense::Maximize {
                Extended::PlusInf
            } else {
                Extended::MinusInf
            };
            return LpOutcome {
                status: LpStatus::Unbounded,
                value,
                solution: None,
                certificate: Some(Certificate::Ray(ray)),
            };
        }

        let x = self.extract_solution();
        assert!(self.lp.is_feasible(&x), "optimal point violates a constraint");
        let value = self.lp.objective_value(&x);
        LpOutcome {
            status: LpStatus::Optimal,
            value: Extended::Finite(value),
            solution: Some(x),
            certificate: None,
        }
    }

    fn std_value(&self, col: usize) -> T {
        self.basis
            .iter()
            .position(|&b| b == col)
            .map(|r| self.rows[r][self.ncols].clone())
            .unwrap_or_else(T::zero)
    }

    fn extract_solution(&self) -> Vec<T> {
        self.var_maps
            .iter()
            .map(|map| match map {
                VarMap::Shift { col, offset } => self.std_value(*col) + offset.clone(),
                VarMap::Flip { col, offset } => offset.clone() - self.std_value(*col),
                VarMap::Split { pos, neg } => self.std_value(*pos) - self.std_value(*neg),
            })
            .collect()
    }

    /// Feasible improving direction built from an entering column whose
    /// tableau entries are all non-positive.
    fn extract_ray(&self, c: usize) -> Vec<T> {
        let mut dir = vec![T::zero(); self.ncols];
        dir[c] = T::one();
        for (r, &b) in self.basis.iter().enumerate() {
            dir[b] = -self.rows[r][c].clone();
        }
        self.var_maps
            .iter()
            .map(|map| match map {
                VarMap::Shift { col, .. } => dir[*col].clone(),
                VarMap::Flip { col, .. } => -dir[*col].clone(),
                VarMap::Split { pos, neg } => dir[*pos].clone() - dir[*neg].clone(),
            })
            .collect()
    }

    /// Farkas witness from the phase-1 duals. The artificial block of the
    /// final tableau is the basis inverse, so the dual vector is read off
    /// directly.
    fn farkas_witness(&self) -> FarkasWitness<T> {
        let m = self.rows.len();
        let mut y_std = vec![T::zero(); m];
        for (k, y) in y_std.iter_mut().enumerate() {
            for (r, &b) in self.basis.iter().enumerate() {
                if b >= self.n_struct {
                    *y = y.clone() - self.rows[r][self.n_struct + k].clone();
                }
            }
        }

        let n = self.lp.num_vars();
        let mut row_multipliers = vec![T::zero(); self.lp.constraints.len()];
        let mut upper_row_mult: Vec<T> = Vec::new();
        for (k, origin) in self.row_origin.iter().enumerate() {
            let signed = if self.row_flip[k] { -y_std[k].clone() } else { y_std[k].clone() };
            match origin {
                RowOrigin::Constraint(i) => row_multipliers[*i] = signed,
                RowOrigin::UpperBound => upper_row_mult.push(signed),
            }
        }

        let mut lower_multipliers = vec![T::zero(); n];
        let mut upper_multipliers = vec![T::zero(); n];
        let mut ub_iter = upper_row_mult.into_iter();
        for (j, map) in self.var_maps.iter().enumerate() {
            let mut d = T::zero();
            for (c, y) in self.lp.constraints.iter().zip(&row_multipliers) {
                d = d + y.clone() * c.coeffs[j].clone();
            }
            match map {
                VarMap::Shift { .. } => {
                    let w_u = if self.lp.bounds[j].upper.is_some() {
                        ub_iter.next().expect("one bound row per doubly bounded variable")
                    } else {
                        T::zero()
                    };
                    lower_multipliers[j] = d + w_u.clone();
                    upper_multipliers[j] = w_u;
                }
                VarMap::Flip { .. } => {
                    upper_multipliers[j] = -d;
                }
                VarMap::Split { .. } => {}
            }
        }

        FarkasWitness { row_multipliers, lower_multipliers, upper_multipliers }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::Q;

    fn q(n: i64, d: i64) -> Q {
        ratio(n, d)
    }

    #[test]
    fn single_constraint_optimum() {
        // max x s.t. x <= 3/10, x >= 0
        let lp = LinearProgram::new(
            Sense::Maximize,
            vec![int::<Q>(1)],
            vec![Constraint::new(vec![int(1)], Relation::Le, q(3, 10))],
            vec![Bounds::nonneg()],
        )
        .unwrap();
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, Extended::Finite(q(3, 10)));
        assert_eq!(out.solution.unwrap(), vec![q(3, 10)]);
    }

    #[test]
    fn unbounded_with_ray() {
        // max x s.t. x >= 0
        let lp =
            LinearProgram::new(Sense::Maximize, vec![int::<Q>(1)], vec![], vec![Bounds::nonneg()])
                .unwrap();
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Unbounded);
        assert_eq!(out.value, Extended::PlusInf);
        match out.certificate {
            Some(Certificate::Ray(ray)) => assert!(lp.verify_ray(&ray)),
            other => panic!("expected ray, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_with_farkas() {
        // max 0 s.t. x <= -1, x >= 0
        let lp = LinearProgram::new(
            Sense::Maximize,
            vec![int::<Q>(0)],
            vec![Constraint::new(vec![int(1)], Relation::Le, int(-1))],
            vec![Bounds::nonneg()],
        )
        .unwrap();
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Infeasible);
        assert_eq!(out.value, Extended::MinusInf);
        match out.certificate {
            Some(Certificate::Farkas(w)) => assert!(lp.verify_farkas(&w)),
            other => panic!("expected Farkas witness, got {other:?}"),
        }
    }

    #[test]
    fn mixed_relations_and_free_variables() {
        // min x + y s.t. x + y >= 2, x - y = 1, x >= 0, y free
        let lp = LinearProgram::new(
            Sense::Minimize,
            vec![int::<Q>(1), int(1)],
            vec![
                Constraint::new(vec![int(1), int(1)], Relation::Ge, int(2)),
                Constraint::new(vec![int(1), int(-1)], Relation::Eq, int(1)),
            ],
            vec![Bounds::nonneg(), Bounds::free()],
        )
        .unwrap();
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, Extended::Finite(int(2)));
        assert_eq!(out.solution.unwrap(), vec![q(3, 2), q(1, 2)]);
    }

    #[test]
    fn doubly_bounded_variables() {
        // max 3t - v s.t. t + v >= 1, t in [0,1], v in [-2,5]
        let lp = LinearProgram::new(
            Sense::Maximize,
            vec![int::<Q>(3), int(-1)],
            vec![Constraint::new(vec![int(1), int(1)], Relation::Ge, int(1))],
            vec![Bounds::interval(int(0), int(1)), Bounds::interval(int(-2), int(5))],
        )
        .unwrap();
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, Extended::Finite(int(3)));
        assert_eq!(out.solution.unwrap(), vec![int(1), int(0)]);
    }

    #[test]
    fn infeasible_through_bounds() {
        // x <= -1 with x in [0, 3] is infeasible purely via bounds
        let lp = LinearProgram::new(
            Sense::Minimize,
            vec![int::<Q>(1)],
            vec![Constraint::new(vec![int(1)], Relation::Le, int(-1))],
            vec![Bounds::interval(int(0), int(3))],
        )
        .unwrap();
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Infeasible);
        assert_eq!(out.value, Extended::PlusInf);
        match out.certificate {
            Some(Certificate::Farkas(w)) => assert!(lp.verify_farkas(&w)),
            other => panic!("expected Farkas witness, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_program_terminates() {
        let lp = LinearProgram::new(
            Sense::Maximize,
            vec![int::<Q>(1), int(1), int(1)],
            vec![
                Constraint::new(vec![int(1), int(0), int(0)], Relation::Le, int(0)),
                Constraint::new(vec![int(1), int(1), int(0)], Relation::Le, int(0)),
                Constraint::new(vec![int(1), int(1), int(1)], Relation::Le, int(0)),
                Constraint::new(vec![int(-1), int(-1), int(-1)], Relation::Le, int(0)),
            ],
            vec![Bounds::free(), Bounds::free(), Bounds::free()],
        )
        .unwrap();
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, Extended::Finite(int(0)));
    }

    #[test]
    fn dimension_mismatch_is_a_construction_error() {
        let bad = LinearProgram::new(
            Sense::Maximize,
            vec![int::<Q>(1), int(2)],
            vec![Constraint::new(vec![int(1)], Relation::Le, int(1))],
            vec![Bounds::nonneg(), Bounds::nonneg()],
        );
        assert!(bad.is_err());
        let bad_bounds = LinearProgram::new(
            Sense::Maximize,
            vec![int::<Q>(1)],
            vec![],
            vec![Bounds::interval(int(2), int(1))],
        );
        assert!(bad_bounds.is_err());
    }
}
