//! Natural extensions of lower prevision assessments.
//!
//! The coherent (`E`), 2-coherent (`E2`), convex (`Ec`) and 2-convex
//! (`E2c`) natural extensions of an unconditional assessment are the
//! suprema of the price sets of the corresponding gain conditions; on
//! finite spaces they are linear programs (or, for the two-term variants,
//! one-dimensional concave maximizations and plain scans). For a lower
//! probability on the powerset of a partition, `E2` and `E2c` collapse to
//! closed-form scans over events; each paper variant of those formulas is
//! computed and cross-checked. Subspace domains (a linear span of gambles
//! priced by an envelope of probabilities) get the direct sup-over-
//! dominated-gambles form and its 2-convex counterpart.

use crate::consistency::{
    check_1asl, check_2coherent_powerset, check_2convex, check_asl, gain_table,
};
use crate::error::{Error, Result};
use crate::gamble::{Assessment, Gamble};
use crate::lp::{Bounds, Certificate, Constraint, LinearProgram, LpStatus, Relation, Sense};
use crate::powerset::{Pmf, PowersetLowerProbability};
use crate::scalar::{Extended, Scalar};
use crate::space::{AtomSet, Event};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtensionKind {
    E,
    E2,
    Ec,
    E2c,
    Choquet,
    GnLower,
    GnUpper,
}

impl ExtensionKind {
    pub fn label(self) -> &'static str {
        match self {
            ExtensionKind::E => "E",
            ExtensionKind::E2 => "E2",
            ExtensionKind::Ec => "Ec",
            ExtensionKind::E2c => "E2c",
            ExtensionKind::Choquet => "C",
            ExtensionKind::GnLower => "GN-lower",
            ExtensionKind::GnUpper => "GN-upper",
        }
    }
}

/// What attains (or approaches) the supremum.
#[derive(Clone, Debug)]
pub enum Achiever<T> {
    /// Coefficients `s_i`, indexed like the assessment items.
    Coefficients(Vec<T>),
    /// Unbounded direction in the coefficient space; the value is `+inf`.
    Ray(Vec<T>),
    /// A single item with its optimal scale (two-term extensions).
    ItemScale { item: usize, scale: T },
    /// A single item (2-convex direct form).
    Item(usize),
    /// An event achieving a closed-form supremum, with the optimal scale
    /// where one is attached to it.
    Event { event: Event, scale: Option<T> },
    /// Coefficients on the basis gambles of a subspace domain.
    Basis(Vec<T>),
}

#[derive(Clone, Debug)]
pub struct ExtensionResult<T> {
    pub kind: ExtensionKind,
    pub value: Extended<T>,
    pub achiever: Option<Achiever<T>>,
}

fn require_unconditional<T: Scalar>(a: &Assessment<T>, what: &'static str) -> Result<()> {
    if a.is_unconditional() {
        Ok(())
    } else {
        Err(Error::UnsupportedDomain(what))
    }
}

/// The coherent natural extension `E(Z)`: the optimum of
/// `max t  s.t.  t <= Z(w) - sum_i s_i (X_i(w) - P_i),  s >= 0`.
/// Unbounded exactly when the assessment incurs sure loss; the improving
/// ray is reported as the achiever then.
pub fn e_lp<T: Scalar>(a: &Assessment<T>, z: &Gamble<T>) -> Result<ExtensionResult<T>> {
    extension_lp(a, z, false)
}

/// The convex natural extension `Ec(Z)`: as [`e_lp`] with the buying
/// coefficients constrained to the simplex. Always finite on finite
/// domains.
pub fn ec_lp<T: Scalar>(a: &Assessment<T>, z: &Gamble<T>) -> Result<ExtensionResult<T>> {
    extension_lp(a, z, true)
}

fn extension_lp<T: Scalar>(
    a: &Assessment<T>,
    z: &Gamble<T>,
    simplex: bool,
) -> Result<ExtensionResult<T>> {
    let kind = if simplex { ExtensionKind::Ec } else { ExtensionKind::E };
    require_unconditional(a, kind.label())?;
    crate::space::check_same_universe(a.universe(), z.universe());
    let gains = gain_table(a);
    let n = a.len();
    let n_worlds = a.universe().size();
    // Variables [t, s_1..s_n]: max t, t + sum_i s_i g_i(w) <= z(w).
    let mut constraints: Vec<Constraint<T>> = (0..n_worlds)
        .map(|w| {
            let mut coeffs = vec![T::one()];
            coeffs.extend((0..n).map(|i| gains[i][w].clone()));
            Constraint::new(coeffs, Relation::Le, z.value(w).clone())
        })
        .collect();
    if simplex {
        let mut coeffs = vec![T::zero()];
        coeffs.extend(std::iter::repeat_n(T::one(), n));
        constraints.push(Constraint::new(coeffs, Relation::Eq, T::one()));
    }
    let mut objective = vec![T::one()];
    objective.extend(std::iter::repeat_n(T::zero(), n));
    let mut bounds = vec![Bounds::free()];
    bounds.extend(std::iter::repeat_n(Bounds::nonneg(), n));
    let lp = LinearProgram::new(Sense::Maximize, objective, constraints, bounds)?;
    let out = lp.solve();
    match out.status {
        LpStatus::Optimal => {
            let solution = out.solution.expect("optimal outcome has a solution");
            Ok(ExtensionResult {
                kind,
                value: Extended::Finite(solution[0].clone()),
                achiever: Some(Achiever::Coefficients(solution[1..].to_vec())),
            })
        }
        LpStatus::Unbounded => {
            let ray = match out.certificate {
                Some(Certificate::Ray(r)) => r,
                _ => unreachable!("unbounded outcome carries a ray"),
            };
            Ok(ExtensionResult {
                kind,
                value: Extended::PlusInf,
                achiever: Some(Achiever::Ray(ray[1..].to_vec())),
            })
        }
        LpStatus::Infeasible => unreachable!("feasible at s = 0, t = inf Z - ..."),
    }
}

/// The 2-coherent natural extension `E2(Z)`: per item, the inner problem
/// `sup_{s >= 0} min_w (Z(w) - s (X(w) - P))` is a concave piecewise
/// linear maximization solved exactly by breakpoint enumeration; the
/// result is the maximum over items. `+inf` exactly when some item prices
/// a gamble above its supremum.
pub fn e2_lp<T: Scalar>(a: &Assessment<T>, z: &Gamble<T>) -> Result<ExtensionResult<T>> {
    require_unconditional(a, "E2")?;
    crate::space::check_same_universe(a.universe(), z.universe());
    let gains = gain_table(a);
    let n_worlds = a.universe().size();

    let mut best: Option<(T, usize, T)> = None; // (value, item, scale)
    for (i, g) in gains.iter().enumerate() {
        if g.iter().all(|c| c.is_negative()) {
            // The gain stays below every world value; scaling it up pushes
            // the minimum without bound.
            let mut ray = vec![T::zero(); a.len()];
            ray[i] = T::one();
            return Ok(ExtensionResult {
                kind: ExtensionKind::E2,
                value: Extended::PlusInf,
                achiever: Some(Achiever::Ray(ray)),
            });
        }
        let eval = |s: &T| -> T {
            (0..n_worlds)
                .map(|w| z.value(w).clone() - s.clone() * g[w].clone())
                .min()
                .expect("universe is non-empty")
        };
        let mut candidates: Vec<T> = vec![T::zero()];
        for w1 in 0..n_worlds {
            for w2 in (w1 + 1)..n_worlds {
                if g[w1] == g[w2] {
                    continue;
                }
                let s = (z.value(w1).clone() - z.value(w2).clone())
                    / (g[w1].clone() - g[w2].clone());
                if s.is_positive() {
                    candidates.push(s);
                }
            }
        }
        for s in candidates {
            let v = eval(&s);
            let better = match &best {
                None => true,
                Some((bv, _, _)) => v > *bv,
            };
            if better {
                best = Some((v, i, s));
            }
        }
    }
    let (value, item, scale) = best.expect("assessment is non-empty");
    Ok(ExtensionResult {
        kind: ExtensionKind::E2,
        value: Extended::Finite(value),
        achiever: Some(Achiever::ItemScale { item, scale }),
    })
}

/// The 2-convex natural extension `E2c(Z)`: the exact maximum over items
/// of `P(X) + inf(Z - X)`. Always finite on finite domains.
pub fn e2c_direct<T: Scalar>(a: &Assessment<T>, z: &Gamble<T>) -> Result<ExtensionResult<T>> {
    require_unconditional(a, "E2c")?;
    crate::space::check_same_universe(a.universe(), z.universe());
    let mut best: Option<(T, usize)> = None;
    for i in 0..a.len() {
        let (cg, p) = a.item(i);
        let v = p.clone() + z.sub(cg.gamble()).inf();
        if best.as_ref().is_none_or(|(bv, _)| v > *bv) {
            best = Some((v, i));
        }
    }
    let (value, item) = best.expect("assessment is non-empty");
    Ok(ExtensionResult {
        kind: ExtensionKind::E2c,
        value: Extended::Finite(value),
        achiever: Some(Achiever::Item(item)),
    })
}

/// Per-atom view of a measurable gamble plus the quantities the closed
/// forms consume.
struct MeasurableView<T> {
    atom_values: Vec<T>,
    inf: T,
}

impl<T: Scalar> MeasurableView<T> {
    fn new(lpr: &PowersetLowerProbability<T>, z: &Gamble<T>) -> Result<Self> {
        let atom_values = z.atom_values(lpr.partition())?;
        let inf = atom_values.iter().min().expect("partition has atoms").clone();
        Ok(MeasurableView { inf, atom_values })
    }

    fn cond_inf(&self, set: AtomSet) -> T {
        set.atoms().map(|i| self.atom_values[i].clone()).min().expect("set is non-empty")
    }

    /// Atom set of `(Z >= level)`.
    fn decumulative(&self, level: &T) -> AtomSet {
        let mut mask = 0u32;
        for (i, v) in self.atom_values.iter().enumerate() {
            if v >= level {
                mask |= 1 << i;
            }
        }
        AtomSet(mask)
    }
}

/// Scans proper events in canonical order, keeping the best value under
/// strict improvement, so ties resolve to the canonically first event.
struct CanonicalBest<T> {
    best: Option<(T, AtomSet, Option<T>)>,
}

impl<T: Scalar> CanonicalBest<T> {
    fn new() -> Self {
        CanonicalBest { best: None }
    }

    fn offer(&mut self, value: T, set: AtomSet, scale: Option<T>) {
        if self.best.as_ref().is_none_or(|(bv, _, _)| value > *bv) {
            self.best = Some((value, set, scale));
        }
    }
}

/// `E2` of a powerset lower probability on a measurable gamble, by the
/// two closed forms: a scan over all proper events `E` with
/// `inf(Z|E) > inf(Z|~E)` of `inf(Z|E) lpr(E) + inf(Z|~E) (1 - lpr(E))`,
/// and the reduced scan over decumulative events `F_z = (Z >= z)` for `z`
/// in the level set. Both are computed and must agree; the common value
/// is returned with the canonically first achieving event.
pub fn e2_powerset<T: Scalar>(
    lpr: &PowersetLowerProbability<T>,
    z: &Gamble<T>,
) -> Result<ExtensionResult<T>> {
    if !check_2coherent_powerset(lpr).holds {
        return Err(Error::Precondition(
            "E2 closed forms need a 2-coherent powerset lower probability".into(),
        ));
    }
    let p = lpr.partition();
    let view = MeasurableView::new(lpr, z)?;

    let term = |set: AtomSet| -> Option<(T, T)> {
        let comp = p.complement(set);
        let inf_e = view.cond_inf(set);
        let inf_comp = view.cond_inf(comp);
        if inf_e <= inf_comp {
            return None;
        }
        let lp_e = lpr.value(set).clone();
        let value =
            inf_e.clone() * lp_e.clone() + inf_comp.clone() * (T::one() - lp_e);
        Some((value, inf_e - inf_comp))
    };

    // Full scan over the canonical event order.
    let mut sets: Vec<AtomSet> = p.proper_sets().collect();
    sets.sort_by(|a, b| p.canonical_cmp(*a, *b));
    let mut full = CanonicalBest::new();
    full.offer(view.inf.clone(), p.full_set(), None);
    let mut levels: Vec<T> = Vec::new();
    for set in sets {
        if let Some((value, scale)) = term(set) {
            levels.push(view.cond_inf(set));
            full.offer(value, set, Some(scale));
        }
    }
    let (value, set, scale) = full.best.expect("the sure event always contributes");

    // Reduced scan over decumulative representatives.
    levels.sort();
    levels.dedup();
    let mut reduced = view.inf.clone();
    for level in levels {
        let f = view.decumulative(&level);
        if f.is_empty() || f == p.full_set() {
            continue;
        }
        if let Some((v, _)) = term(f) {
            if v > reduced {
                reduced = v;
            }
        }
    }
    if reduced != value {
        return Err(Error::Internal(format!(
            "E2 closed forms disagree: full scan {value}, decumulative scan {reduced}"
        )));
    }

    Ok(ExtensionResult {
        kind: ExtensionKind::E2,
        value: Extended::Finite(value),
        achiever: Some(Achiever::Event { event: p.event_of(set), scale }),
    })
}

/// `E2c` of a powerset lower probability on a measurable gamble, by the
/// three closed forms: the scan of `lpr(E) + min(inf(Z|E) - 1, inf(Z|~E))`
/// over proper events with `inf(Z|E) > inf(Z|~E) - 1`, its reduction to
/// decumulative events, and the truncated form built from
/// `F_(inf Z + 1)`. All three must agree.
pub fn e2c_powerset<T: Scalar>(
    lpr: &PowersetLowerProbability<T>,
    z: &Gamble<T>,
) -> Result<ExtensionResult<T>> {
    let p = lpr.partition();
    if !lpr.value(AtomSet(0)).is_zero()
        || *lpr.value(p.full_set()) != T::one()
        || !check_2convex(&lpr.to_assessment()).holds
    {
        return Err(Error::Precondition(
            "E2c closed forms need a centered 2-convex powerset lower probability".into(),
        ));
    }
    let view = MeasurableView::new(lpr, z)?;

    let term = |set: AtomSet| -> Option<T> {
        let comp = p.complement(set);
        let inf_e = view.cond_inf(set);
        let inf_comp = view.cond_inf(comp);
        if inf_e <= inf_comp.clone() - T::one() {
            return None;
        }
        let m = std::cmp::min(inf_e - T::one(), inf_comp);
        Some(lpr.value(set).clone() + m)
    };

    let mut sets: Vec<AtomSet> = p.proper_sets().collect();
    sets.sort_by(|a, b| p.canonical_cmp(*a, *b));
    let mut full = CanonicalBest::new();
    full.offer(view.inf.clone(), p.full_set(), None);
    let mut levels: Vec<T> = Vec::new();
    for set in sets {
        if let Some(value) = term(set) {
            levels.push(view.cond_inf(set));
            full.offer(value, set, None);
        }
    }
    let (value, set, _) = full.best.clone().expect("the sure event always contributes");

    levels.sort();
    levels.dedup();
    let mut reduced = view.inf.clone();
    for level in &levels {
        let f = view.decumulative(level);
        if f.is_empty() || f == p.full_set() {
            continue;
        }
        if let Some(v) = term(f) {
            if v > reduced {
                reduced = v;
            }
        }
    }
    if reduced != value {
        return Err(Error::Internal(format!(
            "E2c closed forms disagree: full scan {value}, decumulative scan {reduced}"
        )));
    }

    // Truncated form: levels below inf Z + 1 contribute
    // lpr(F_z) + inf(Z|F_z) - 1; everything above collapses into
    // lpr(F_(inf Z + 1)) + inf Z.
    let cutoff = view.inf.clone() + T::one();
    let mut truncated = lpr.value(view.decumulative(&cutoff)).clone() + view.inf.clone();
    for level in &levels {
        if *level >= cutoff {
            continue;
        }
        let f = view.decumulative(level);
        let v = lpr.value(f).clone() + view.cond_inf(f) - T::one();
        if v > truncated {
            truncated = v;
        }
    }
    if truncated != value {
        return Err(Error::Internal(format!(
            "E2c closed forms disagree: full scan {value}, truncated form {truncated}"
        )));
    }

    Ok(ExtensionResult {
        kind: ExtensionKind::E2c,
        value: Extended::Finite(value),
        achiever: Some(Achiever::Event { event: p.event_of(set), scale: None }),
    })
}

/// A linear span of measurable gambles priced by the lower envelope of
/// finitely many probabilities; the setting where all four natural
/// extensions coincide.
#[derive(Clone)]
pub struct SubspaceDomain<T> {
    basis: Vec<Gamble<T>>,
    pmfs: Vec<Pmf<T>>,
    basis_atom_values: Vec<Vec<T>>,
}

impl<T: Scalar> SubspaceDomain<T> {
    pub fn new(basis: Vec<Gamble<T>>, pmfs: Vec<Pmf<T>>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::invalid("subspace domain", "empty basis"));
        }
        let partition = match pmfs.first() {
            Some(p) => p.partition().clone(),
            None => return Err(Error::invalid("subspace domain", "no envelope probabilities")),
        };
        if pmfs.iter().any(|p| p.partition() != &partition) {
            return Err(Error::UniverseMismatch);
        }
        let basis_atom_values = basis
            .iter()
            .map(|g| g.atom_values(&partition))
            .collect::<Result<Vec<Vec<T>>>>()?;
        if rank(&basis_atom_values) != basis.len() {
            return Err(Error::invalid("subspace domain", "basis is linearly dependent"));
        }
        if !spans_constants(&basis_atom_values) {
            return Err(Error::invalid("subspace domain", "span does not contain the constants"));
        }
        Ok(SubspaceDomain { basis, pmfs, basis_atom_values })
    }

    pub fn basis(&self) -> &[Gamble<T>] {
        &self.basis
    }

    pub fn pmfs(&self) -> &[Pmf<T>] {
        &self.pmfs
    }

    fn universe(&self) -> &crate::space::Universe {
        self.basis[0].universe()
    }

    /// `P_j(B_k)` for each pmf j and basis gamble k.
    fn price_matrix(&self) -> Vec<Vec<T>> {
        self.pmfs
            .iter()
            .map(|pmf| {
                self.basis_atom_values
                    .iter()
                    .map(|vals| {
                        vals.iter()
                            .enumerate()
                            .fold(T::zero(), |acc, (i, v)| acc + v.clone() * pmf.weight(i).clone())
                    })
                    .collect()
            })
            .collect()
    }
}

fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        let inv = m[rank][col].clone();
        for v in m[rank].iter_mut() {
            *v = v.clone() / inv.clone();
        }
        let base = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, b) in row.iter_mut().zip(&base) {
                *v = v.clone() - f.clone() * b.clone();
            }
        }
        rank += 1;
    }
    rank
}

fn spans_constants<T: Scalar>(rows: &[Vec<T>]) -> bool {
    let ncols = rows.first().map_or(0, Vec::len);
    let ones = vec![T::one(); ncols];
    let mut with = rows.to_vec();
    with.push(ones);
    rank(&with) == rank(rows)
}

/// The natural extension on a subspace domain:
/// `sup { min_j P_j(Y) : Y <= Z, Y in span }` as a single program.
pub fn e_subspace<T: Scalar>(d: &SubspaceDomain<T>, z: &Gamble<T>) -> Result<ExtensionResult<T>> {
    crate::space::check_same_universe(d.universe(), z.universe());
    let k = d.basis.len();
    let prices = d.price_matrix();
    let n_worlds = d.universe().size();
    // Variables [t, c_1..c_k]: max t
    //   t - sum_k c_k P_j(B_k) <= 0      for every pmf j
    //   sum_k c_k B_k(w)       <= Z(w)   for every world w
    let mut constraints: Vec<Constraint<T>> = prices
        .iter()
        .map(|row| {
            let mut coeffs = vec![T::one()];
            coeffs.extend(row.iter().map(|p| -p.clone()));
            Constraint::new(coeffs, Relation::Le, T::zero())
        })
        .collect();
    for w in 0..n_worlds {
        let mut coeffs = vec![T::zero()];
        coeffs.extend(d.basis.iter().map(|g| g.value(w).clone()));
        constraints.push(Constraint::new(coeffs, Relation::Le, z.value(w).clone()));
    }
    let mut objective = vec![T::one()];
    objective.extend(std::iter::repeat_n(T::zero(), k));
    let bounds = vec![Bounds::free(); k + 1];
    let lp = LinearProgram::new(Sense::Maximize, objective, constraints, bounds)?;
    let out = lp.solve();
    debug_assert_eq!(out.status, LpStatus::Optimal, "dominated-gamble program is bounded");
    let solution = out.solution.expect("optimal outcome has a solution");
    Ok(ExtensionResult {
        kind: ExtensionKind::E,
        value: Extended::Finite(solution[0].clone()),
        achiever: Some(Achiever::Basis(solution[1..].to_vec())),
    })
}

/// The 2-convex natural extension on a subspace domain with the zero
/// gamble adjoined (a no-op on a linear span):
/// `sup_Y [ min_j P_j(Y) + inf(Z - Y) ]`.
pub fn e2c_plus_subspace<T: Scalar>(
    d: &SubspaceDomain<T>,
    z: &Gamble<T>,
) -> Result<ExtensionResult<T>> {
    crate::space::check_same_universe(d.universe(), z.universe());
    let k = d.basis.len();
    let prices = d.price_matrix();
    let n_worlds = d.universe().size();
    // Variables [t, u, c_1..c_k]: max t + u
    //   t - sum_k c_k P_j(B_k)  <= 0      for every pmf j
    //   u + sum_k c_k B_k(w)    <= Z(w)   for every world w
    let mut constraints: Vec<Constraint<T>> = prices
        .iter()
        .map(|row| {
            let mut coeffs = vec![T::one(), T::zero()];
            coeffs.extend(row.iter().map(|p| -p.clone()));
            Constraint::new(coeffs, Relation::Le, T::zero())
        })
        .collect();
    for w in 0..n_worlds {
        let mut coeffs = vec![T::zero(), T::one()];
        coeffs.extend(d.basis.iter().map(|g| g.value(w).clone()));
        constraints.push(Constraint::new(coeffs, Relation::Le, z.value(w).clone()));
    }
    let mut objective = vec![T::one(), T::one()];
    objective.extend(std::iter::repeat_n(T::zero(), k));
    let bounds = vec![Bounds::free(); k + 2];
    let lp = LinearProgram::new(Sense::Maximize, objective, constraints, bounds)?;
    let out = lp.solve();
    debug_assert_eq!(out.status, LpStatus::Optimal, "two-term subspace program is bounded");
    let solution = out.solution.expect("optimal outcome has a solution");
    Ok(ExtensionResult {
        kind: ExtensionKind::E2c,
        value: Extended::Finite(solution[0].clone() + solution[1].clone()),
        achiever: Some(Achiever::Basis(solution[2..].to_vec())),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Finiteness {
    Finite,
    Infinite,
}

/// Which natural extensions are finite on every gamble, classified by the
/// avoiding-sure-loss family alone. On finite domains the convex and
/// 2-convex extensions are always finite.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FinitenessReport {
    pub e: Finiteness,
    pub e2: Finiteness,
    pub ec: Finiteness,
    pub e2c: Finiteness,
}

pub fn finiteness_report<T: Scalar>(a: &Assessment<T>) -> Result<FinitenessReport> {
    let asl = check_asl(a)?.holds;
    let one_asl = check_1asl(a)?.holds;
    let fin = |ok: bool| if ok { Finiteness::Finite } else { Finiteness::Infinite };
    Ok(FinitenessReport {
        e: fin(asl),
        e2: fin(one_asl),
        ec: Finiteness::Finite,
        e2c: Finiteness::Finite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, parse_rational, ratio};
    use crate::space::{Partition, Universe};
    use crate::Q;

    fn dec(s: &str) -> Q {
        parse_rational(s).unwrap()
    }

    fn two_point_universe() -> (Universe, Gamble<Q>) {
        let u = Universe::new(["lo", "hi"]).unwrap();
        let x = Gamble::new(u.clone(), vec![int(0), int(1)]).unwrap();
        (u, x)
    }

    #[test]
    fn doubling_a_single_assessment() {
        // lpr(X) = 2/5 on a two-valued X: E(2X) = E2(2X) = 4/5 while
        // Ec(2X) = E2c(2X) = 2/5.
        let (_, x) = two_point_universe();
        let v = ratio::<Q>(2, 5);
        let a = Assessment::unconditional(vec![(x.clone(), v.clone())]).unwrap();
        let z = x.scale(&int(2));
        assert_eq!(e_lp(&a, &z).unwrap().value, Extended::Finite(ratio(4, 5)));
        assert_eq!(e2_lp(&a, &z).unwrap().value, Extended::Finite(ratio(4, 5)));
        assert_eq!(ec_lp(&a, &z).unwrap().value, Extended::Finite(v.clone()));
        assert_eq!(e2c_direct(&a, &z).unwrap().value, Extended::Finite(v));
    }

    #[test]
    fn example_5_2_closed_forms() {
        let lpr = crate::testutil::four_atom_example();
        let u = lpr.partition().universe().clone();
        let z = Gamble::new(u.clone(), vec![int(-1), int(0), int(1), int(3)]).unwrap();
        let e2 = e2_powerset(&lpr, &z).unwrap();
        assert_eq!(e2.value, Extended::Finite(int(0)));
        match e2.achiever {
            Some(Achiever::Event { event, .. }) => {
                assert_eq!(event, u.event(&["c", "d"]).unwrap());
            }
            other => panic!("expected event achiever, got {other:?}"),
        }
        let e2c = e2c_powerset(&lpr, &z).unwrap();
        assert_eq!(e2c.value, Extended::Finite(dec("-0.3")));
        // the paper's LP forms agree on the full assessment
        let a = lpr.to_assessment();
        assert_eq!(e2_lp(&a, &z).unwrap().value, Extended::Finite(int(0)));
        assert_eq!(e2c_direct(&a, &z).unwrap().value, Extended::Finite(dec("-0.3")));
    }

    #[test]
    fn constant_gambles_collapse_to_their_value() {
        let lpr = crate::testutil::four_atom_example();
        let u = lpr.partition().universe().clone();
        let z = Gamble::constant(&u, dec("7"));
        assert_eq!(e2_powerset(&lpr, &z).unwrap().value, Extended::Finite(dec("7")));
        assert_eq!(e2c_powerset(&lpr, &z).unwrap().value, Extended::Finite(dec("7")));
    }

    #[test]
    fn closed_forms_enforce_preconditions() {
        let (u, x) = two_point_universe();
        let p = Partition::discrete(&u).unwrap();
        // not even monotone
        let bad = PowersetLowerProbability::new(
            p,
            vec![dec("0"), dec("0.9"), dec("0.2"), dec("1")],
        )
        .unwrap();
        assert!(matches!(e2_powerset(&bad, &x), Err(Error::Precondition(_))));
        // non-measurable gamble
        let lpr = crate::testutil::four_atom_example();
        let coarse = Partition::new(
            lpr.partition().universe().clone(),
            vec![
                lpr.partition().universe().event(&["a", "b"]).unwrap(),
                lpr.partition().universe().event(&["c", "d"]).unwrap(),
            ],
        )
        .unwrap();
        let lpr2 = PowersetLowerProbability::<Q>::from_fn(coarse.clone(), |s| {
            if s == coarse.full_set() {
                int(1)
            } else {
                int(0)
            }
        });
        let skew =
            Gamble::new(coarse.universe().clone(), vec![int(0), int(1), int(2), int(3)]).unwrap();
        assert!(matches!(e2_powerset(&lpr2, &skew), Err(Error::NotMeasurable(_))));
    }

    #[test]
    fn sure_loss_blows_up_the_coherent_extension() {
        // lpr(atom) = 1/3 + 1/10 on three atoms: not ASL, so E(0) = +inf,
        // while E2(0) = 0 and Ec(0) = 1/10.
        let u = Universe::new(["w1", "w2", "w3"]).unwrap();
        let price: Q = ratio::<Q>(1, 3) + ratio::<Q>(1, 10);
        let items: Vec<(Gamble<Q>, Q)> = (0..3)
            .map(|i| {
                let e = u.event(&[format!("w{}", i + 1)]).unwrap();
                (Gamble::indicator(&e), price.clone())
            })
            .collect();
        let a = Assessment::unconditional(items).unwrap();
        let zero = Gamble::zero(&u);
        let e = e_lp(&a, &zero).unwrap();
        assert_eq!(e.value, Extended::PlusInf);
        assert!(matches!(e.achiever, Some(Achiever::Ray(_))));
        assert_eq!(e2_lp(&a, &zero).unwrap().value, Extended::Finite(int(0)));
        assert_eq!(ec_lp(&a, &zero).unwrap().value, Extended::Finite(ratio(1, 10)));
        let report = finiteness_report(&a).unwrap();
        assert_eq!(report.e, Finiteness::Infinite);
        assert_eq!(report.e2, Finiteness::Finite);
        assert_eq!(report.ec, Finiteness::Finite);
        assert_eq!(report.e2c, Finiteness::Finite);
    }

    #[test]
    fn subspace_requires_independent_basis_spanning_constants() {
        let u = Universe::new(["w1", "w2"]).unwrap();
        let p = Partition::discrete(&u).unwrap();
        let pmf = Pmf::new(p.clone(), vec![ratio::<Q>(1, 2), ratio(1, 2)]).unwrap();
        let ones = Gamble::constant(&u, int::<Q>(1));
        let dup = Gamble::constant(&u, int::<Q>(2));
        assert!(SubspaceDomain::new(vec![ones.clone(), dup], vec![pmf.clone()]).is_err());
        let skew = Gamble::new(u.clone(), vec![int(1), int(0)]).unwrap();
        assert!(SubspaceDomain::new(vec![skew.clone()], vec![pmf.clone()]).is_err());
        assert!(SubspaceDomain::new(vec![ones, skew], vec![pmf]).is_ok());
    }

    #[test]
    fn trivial_subspace_values() {
        let u = Universe::new(["w1", "w2", "w3"]).unwrap();
        let p = Partition::discrete(&u).unwrap();
        let pmf1 = Pmf::new(p.clone(), vec![dec("0.3"), dec("0.4"), dec("0.3")]).unwrap();
        let pmf2 = Pmf::new(p.clone(), vec![dec("0.1"), dec("0.7"), dec("0.2")]).unwrap();
        let z = Gamble::new(u.clone(), vec![int(2), int(3), int(0)]).unwrap();
        // basis = {1}: constants below Z
        let ones = Gamble::constant(&u, int::<Q>(1));
        let d = SubspaceDomain::new(vec![ones.clone()], vec![pmf1.clone(), pmf2.clone()]).unwrap();
        assert_eq!(e_subspace(&d, &z).unwrap().value, Extended::Finite(int(0)));
        assert_eq!(e2c_plus_subspace(&d, &z).unwrap().value, Extended::Finite(int(0)));
        // full basis: Y = Z is feasible and optimal, value = min_j P_j(Z)
        let e1 = Gamble::indicator(&u.event(&["w1"]).unwrap());
        let e2 = Gamble::indicator(&u.event(&["w2"]).unwrap());
        let d =
            SubspaceDomain::new(vec![ones.clone(), e1, e2], vec![pmf1.clone(), pmf2.clone()])
                .unwrap();
        let expected = std::cmp::min(pmf1.expectation(&z).unwrap(), pmf2.expectation(&z).unwrap());
        assert_eq!(e_subspace(&d, &z).unwrap().value, Extended::Finite(expected.clone()));
        assert_eq!(e2c_plus_subspace(&d, &z).unwrap().value, Extended::Finite(expected));
        // basis = {1, I_(w1|w2)} on the Table-1 envelope: value 7/5
        let i12 = Gamble::indicator(&u.event(&["w1", "w2"]).unwrap());
        let d = SubspaceDomain::new(vec![ones, i12], vec![pmf1, pmf2]).unwrap();
        assert_eq!(e_subspace(&d, &z).unwrap().value, Extended::Finite(ratio(7, 5)));
        assert_eq!(e2c_plus_subspace(&d, &z).unwrap().value, Extended::Finite(ratio(7, 5)));
    }
}
