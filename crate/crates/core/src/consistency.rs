//! Consistency checks for lower prevision assessments: coherence,
//! 2-coherence, convexity, 2-convexity, the avoiding-sure-loss family,
//! and the structural criteria used on powerset lower probabilities.
//!
//! Every check decides a gain condition: for admissible coefficients
//! `s_0, ..., s_m >= 0` and items `X_i|B_i` of the assessment, the gain
//!
//! ```text
//! G = sum_i s_i B_i (X_i - P(X_i|B_i)) - s_0 B_0 (X_0 - P(X_0|B_0))
//! ```
//!
//! must have `sup { G | S(s) } >= 0`, where `S(s)` is the union of the
//! conditioning events with non-zero coefficient. The variants differ in
//! how many terms are allowed and how the coefficients are constrained.
//! A failed check carries a [`GainWitness`] that replays to a strictly
//! negative conditional supremum.

use crate::error::{Error, Result};
use crate::gamble::{Assessment, ConditionalGamble};
use crate::lp::{Bounds, Constraint, LinearProgram, LpStatus, Relation, Sense};
use crate::powerset::{Pmf, PowersetLowerProbability};
use crate::scalar::{ratio, Extended, Scalar};
use crate::space::Event;

/// Outcome of a consistency check.
#[derive(Clone, Debug)]
pub struct ConsistencyVerdict<T> {
    pub holds: bool,
    pub witness: Option<GainWitness<T>>,
}

impl<T: Scalar> ConsistencyVerdict<T> {
    fn pass() -> Self {
        ConsistencyVerdict { holds: true, witness: None }
    }

    fn fail(witness: GainWitness<T>) -> Self {
        debug_assert!(witness.supremum.is_negative());
        ConsistencyVerdict { holds: false, witness: Some(witness) }
    }
}

/// A violating gain: coefficients for bought items (the positive terms)
/// and at most one sold item (the negated term), with the conditional
/// supremum they achieve.
#[derive(Clone, Debug)]
pub struct GainWitness<T> {
    /// `(item index, s_i)` pairs with `s_i > 0`.
    pub bought: Vec<(usize, T)>,
    /// `(item index, s_0)` with `s_0 > 0`, if a term is sold.
    pub sold: Option<(usize, T)>,
    /// `sup { G | S(s) }`; strictly negative for a valid witness.
    pub supremum: T,
}

impl<T: Scalar> GainWitness<T> {
    /// Recomputes `sup { G | S(s) }` over the assessment. Returns `None`
    /// when every coefficient is zero (`S(s)` empty, condition vacuous).
    pub fn replay(&self, a: &Assessment<T>) -> Option<T> {
        let universe = a.universe();
        let mut union = universe.empty_event();
        for (i, s) in &self.bought {
            if !s.is_zero() {
                union = union.union(a.item(*i).0.conditioning());
            }
        }
        if let Some((i, s)) = &self.sold {
            if !s.is_zero() {
                union = union.union(a.item(*i).0.conditioning());
            }
        }
        if union.is_empty() {
            return None;
        }
        union
            .world_indices()
            .map(|w| {
                let mut g = T::zero();
                for (i, s) in &self.bought {
                    g = g + s.clone() * elementary_gain(a, *i, w);
                }
                if let Some((i, s)) = &self.sold {
                    g = g - s.clone() * elementary_gain(a, *i, w);
                }
                g
            })
            .max()
    }
}

/// `I_B(w) * (X(w) - P(X|B))` for item `i` at world `w`.
fn elementary_gain<T: Scalar>(a: &Assessment<T>, i: usize, w: usize) -> T {
    let (cg, p) = a.item(i);
    if cg.conditioning().contains(w) {
        cg.gamble().value(w).clone() - p.clone()
    } else {
        T::zero()
    }
}

pub(crate) fn gain_table<T: Scalar>(a: &Assessment<T>) -> Vec<Vec<T>> {
    let n_worlds = a.universe().size();
    (0..a.len()).map(|i| (0..n_worlds).map(|w| elementary_gain(a, i, w)).collect()).collect()
}

fn require_unconditional<T: Scalar>(a: &Assessment<T>, what: &'static str) -> Result<()> {
    if a.is_unconditional() {
        Ok(())
    } else {
        Err(Error::UnsupportedDomain(what))
    }
}

/// 2-convexity: for every ordered pair, the unit-coefficient gain
/// `B_1(X_1 - P_1) - B_0(X_0 - P_0)` has a non-negative supremum over
/// `B_0 v B_1`.
pub fn check_2convex<T: Scalar>(a: &Assessment<T>) -> ConsistencyVerdict<T> {
    for i0 in 0..a.len() {
        for i1 in 0..a.len() {
            let witness = GainWitness {
                bought: vec![(i1, T::one())],
                sold: Some((i0, T::one())),
                supremum: T::zero(),
            };
            let sup = witness.replay(a).expect("conditioning events are non-empty");
            if sup.is_negative() {
                return ConsistencyVerdict::fail(GainWitness { supremum: sup, ..witness });
            }
        }
    }
    ConsistencyVerdict::pass()
}

/// 2-coherence of a single ordered pair `(sold, bought)`, split into the
/// three coefficient regimes: only the bought coefficient positive, only
/// the sold one, or both (normalized to `s_0 + s_1 = 1`, which is lossless
/// because the gain condition is invariant under positive scaling).
pub fn check_2coherent_pair<T: Scalar>(
    a: &Assessment<T>,
    sold: usize,
    bought: usize,
) -> ConsistencyVerdict<T> {
    if let Some(w) = bought_only_violation(a, bought) {
        return ConsistencyVerdict::fail(w);
    }
    if let Some(w) = sold_only_violation(a, sold) {
        return ConsistencyVerdict::fail(w);
    }
    if let Some(w) = mixed_pair_violation(a, sold, bought) {
        return ConsistencyVerdict::fail(w);
    }
    ConsistencyVerdict::pass()
}

fn bought_only_violation<T: Scalar>(a: &Assessment<T>, i: usize) -> Option<GainWitness<T>> {
    let witness =
        GainWitness { bought: vec![(i, T::one())], sold: None, supremum: T::zero() };
    let sup = witness.replay(a).expect("conditioning event is non-empty");
    sup.is_negative().then(|| GainWitness { supremum: sup, ..witness })
}

fn sold_only_violation<T: Scalar>(a: &Assessment<T>, i: usize) -> Option<GainWitness<T>> {
    let witness = GainWitness { bought: vec![], sold: Some((i, T::one())), supremum: T::zero() };
    let sup = witness.replay(a).expect("conditioning event is non-empty");
    sup.is_negative().then(|| GainWitness { supremum: sup, ..witness })
}

/// Both coefficients positive: minimize over `t in [0,1]` the supremum of
/// `t B_1(X_1-P_1) - (1-t) B_0(X_0-P_0)` over `B_0 v B_1`. The supremum
/// union is fixed here, so the whole regime is one two-variable program.
fn mixed_pair_violation<T: Scalar>(
    a: &Assessment<T>,
    sold: usize,
    bought: usize,
) -> Option<GainWitness<T>> {
    let union = a.item(sold).0.conditioning().union(a.item(bought).0.conditioning());
    let worlds: Vec<usize> = union.world_indices().collect();
    // min v  s.t.  v - t*(c1_w + c0_w) >= -c0_w  for all w;  t in [0,1]
    let constraints = worlds
        .iter()
        .map(|&w| {
            let c1 = elementary_gain(a, bought, w);
            let c0 = elementary_gain(a, sold, w);
            Constraint::new(vec![T::one(), -(c1 + c0.clone())], Relation::Ge, -c0)
        })
        .collect();
    let lp = LinearProgram::new(
        Sense::Minimize,
        vec![T::one(), T::zero()],
        constraints,
        vec![Bounds::free(), Bounds::interval(T::zero(), T::one())],
    )
    .expect("pair program is well-formed");
    let out = lp.solve();
    debug_assert_eq!(out.status, LpStatus::Optimal, "pair program is bounded and feasible");
    let solution = out.solution?;
    if !solution[0].is_negative() {
        return None;
    }
    // The minimizer may sit on an endpoint where a coefficient vanishes
    // and the conditional supremum would be taken over a smaller union;
    // walk inward until the gain is negative with both coefficients
    // positive (continuity of the union supremum guarantees success).
    let mut t = solution[1].clone();
    let half = ratio::<T>(1, 2);
    if t.is_zero() || t == T::one() {
        let target = t.clone();
        t = half.clone();
        loop {
            let sup = pair_union_sup(a, sold, bought, &t, &worlds);
            if sup.is_negative() {
                break;
            }
            t = half.clone() * (t + target.clone());
        }
    }
    let witness = GainWitness {
        bought: vec![(bought, t.clone())],
        sold: Some((sold, T::one() - t)),
        supremum: T::zero(),
    };
    let sup = witness.replay(a).expect("union is non-empty");
    debug_assert!(sup.is_negative());
    Some(GainWitness { supremum: sup, ..witness })
}

fn pair_union_sup<T: Scalar>(
    a: &Assessment<T>,
    sold: usize,
    bought: usize,
    t: &T,
    worlds: &[usize],
) -> T {
    worlds
        .iter()
        .map(|&w| {
            t.clone() * elementary_gain(a, bought, w)
                - (T::one() - t.clone()) * elementary_gain(a, sold, w)
        })
        .max()
        .expect("union is non-empty")
}

/// 2-coherence: every ordered pair of items passes
/// [`check_2coherent_pair`]. Works for conditional assessments.
pub fn check_2coherent<T: Scalar>(a: &Assessment<T>) -> ConsistencyVerdict<T> {
    for i in 0..a.len() {
        if let Some(w) = bought_only_violation(a, i) {
            return ConsistencyVerdict::fail(w);
        }
        if let Some(w) = sold_only_violation(a, i) {
            return ConsistencyVerdict::fail(w);
        }
    }
    for i0 in 0..a.len() {
        for i1 in 0..a.len() {
            if let Some(w) = mixed_pair_violation(a, i0, i1) {
                return ConsistencyVerdict::fail(w);
            }
        }
    }
    ConsistencyVerdict::pass()
}

/// Coherence (unconditional): for every sold item `X_0`, the program
/// `min_{s >= 0} sup_w [ sum_i s_i (X_i - P_i) - (X_0 - P_0) ]` has a
/// non-negative optimum. Fixing `s_0 = 1` is lossless by positive
/// scaling, and a sure loss with `s_0 = 0` makes the program unbounded
/// below, which counts as a violation with the ray as witness.
pub fn check_coherent<T: Scalar>(a: &Assessment<T>) -> Result<ConsistencyVerdict<T>> {
    require_unconditional(a, "coherence check")?;
    let gains = gain_table(a);
    for i0 in 0..a.len() {
        if let Some(w) = sold_lp_violation(a, &gains, i0, false)? {
            return Ok(ConsistencyVerdict::fail(w));
        }
    }
    Ok(ConsistencyVerdict::pass())
}

/// Convexity (unconditional): coherence with the buying coefficients
/// constrained to the simplex `sum_i s_i = 1`.
pub fn check_convex<T: Scalar>(a: &Assessment<T>) -> Result<ConsistencyVerdict<T>> {
    require_unconditional(a, "convexity check")?;
    let gains = gain_table(a);
    for i0 in 0..a.len() {
        if let Some(w) = sold_lp_violation(a, &gains, i0, true)? {
            return Ok(ConsistencyVerdict::fail(w));
        }
    }
    Ok(ConsistencyVerdict::pass())
}

fn sold_lp_violation<T: Scalar>(
    a: &Assessment<T>,
    gains: &[Vec<T>],
    i0: usize,
    simplex: bool,
) -> Result<Option<GainWitness<T>>> {
    let n = a.len();
    let n_worlds = a.universe().size();
    // Variables: [v, s_1..s_n]; min v s.t. v - sum_i s_i g_i(w) >= -g_0(w).
    let mut constraints: Vec<Constraint<T>> = (0..n_worlds)
        .map(|w| {
            let mut coeffs = vec![T::one()];
            coeffs.extend((0..n).map(|i| -gains[i][w].clone()));
            Constraint::new(coeffs, Relation::Ge, -gains[i0][w].clone())
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
    let lp = LinearProgram::new(Sense::Minimize, objective, constraints, bounds)?;
    let out = lp.solve();
    match out.status {
        LpStatus::Optimal => {
            let solution = out.solution.expect("optimal outcome has a solution");
            if !solution[0].is_negative() {
                return Ok(None);
            }
            let bought: Vec<(usize, T)> = solution[1..]
                .iter()
                .enumerate()
                .filter(|(_, s)| s.is_positive())
                .map(|(i, s)| (i, s.clone()))
                .collect();
            let witness =
                GainWitness { bought, sold: Some((i0, T::one())), supremum: T::zero() };
            let sup = witness.replay(a).expect("sold coefficient is positive");
            debug_assert_eq!(sup, solution[0]);
            Ok(Some(GainWitness { supremum: sup, ..witness }))
        }
        LpStatus::Unbounded => {
            // The ray is a pure buying direction with a sure loss.
            let ray = match out.certificate {
                Some(crate::lp::Certificate::Ray(r)) => r,
                _ => unreachable!("unbounded outcome carries a ray"),
            };
            let bought: Vec<(usize, T)> = ray[1..]
                .iter()
                .enumerate()
                .filter(|(_, s)| s.is_positive())
                .map(|(i, s)| (i, s.clone()))
                .collect();
            debug_assert!(!bought.is_empty());
            let witness = GainWitness { bought, sold: None, supremum: T::zero() };
            let sup = witness.replay(a).expect("some coefficient is positive");
            debug_assert!(sup.is_negative());
            Ok(Some(GainWitness { supremum: sup, ..witness }))
        }
        LpStatus::Infeasible => unreachable!("program is feasible at s = 0"),
    }
}

/// Avoiding sure loss: `min_{s in simplex} sup_w sum_i s_i (X_i - P_i)`
/// must be non-negative. Restricting to the simplex is lossless because
/// the gain condition is invariant under positive scaling.
pub fn check_asl<T: Scalar>(a: &Assessment<T>) -> Result<ConsistencyVerdict<T>> {
    let value = asl_value(a)?;
    if value.supremum.is_negative() {
        Ok(ConsistencyVerdict::fail(value))
    } else {
        Ok(ConsistencyVerdict::pass())
    }
}

/// The exact greatest `k` such that every convex combination of
/// elementary gains has supremum at least `k` (always finite on finite
/// domains, making the avoiding-unbounded-sure-loss check trivially true;
/// the value is the payload).
pub fn ausl_bound<T: Scalar>(a: &Assessment<T>) -> Result<Extended<T>> {
    Ok(Extended::Finite(asl_value(a)?.supremum))
}

/// Greatest valid `k` for the one-term variant: `min_i sup(X_i - P_i)`.
pub fn one_ausl_bound<T: Scalar>(a: &Assessment<T>) -> Result<Extended<T>> {
    require_unconditional(a, "1-AUSL bound")?;
    let bound = (0..a.len())
        .map(|i| {
            let (cg, p) = a.item(i);
            cg.gamble().sup() - p.clone()
        })
        .min()
        .expect("assessment is non-empty");
    Ok(Extended::Finite(bound))
}

fn asl_value<T: Scalar>(a: &Assessment<T>) -> Result<GainWitness<T>> {
    require_unconditional(a, "avoiding-sure-loss check")?;
    let gains = gain_table(a);
    let n = a.len();
    let n_worlds = a.universe().size();
    let mut constraints: Vec<Constraint<T>> = (0..n_worlds)
        .map(|w| {
            let mut coeffs = vec![T::one()];
            coeffs.extend((0..n).map(|i| -gains[i][w].clone()));
            Constraint::new(coeffs, Relation::Ge, T::zero())
        })
        .collect();
    let mut coeffs = vec![T::zero()];
    coeffs.extend(std::iter::repeat_n(T::one(), n));
    constraints.push(Constraint::new(coeffs, Relation::Eq, T::one()));
    let mut objective = vec![T::one()];
    objective.extend(std::iter::repeat_n(T::zero(), n));
    let mut bounds = vec![Bounds::free()];
    bounds.extend(std::iter::repeat_n(Bounds::nonneg(), n));
    let lp = LinearProgram::new(Sense::Minimize, objective, constraints, bounds)?;
    let out = lp.solve();
    debug_assert_eq!(out.status, LpStatus::Optimal, "simplex domain is compact");
    let solution = out.solution.expect("optimal outcome has a solution");
    let bought: Vec<(usize, T)> = solution[1..]
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_positive())
        .map(|(i, s)| (i, s.clone()))
        .collect();
    let witness = GainWitness { bought, sold: None, supremum: T::zero() };
    let sup = witness.replay(a).expect("simplex coefficients are not all zero");
    debug_assert_eq!(sup, solution[0]);
    Ok(GainWitness { supremum: sup, ..witness })
}

/// 1-avoiding sure loss: `P(X) <= sup X` for every item.
pub fn check_1asl<T: Scalar>(a: &Assessment<T>) -> Result<ConsistencyVerdict<T>> {
    require_unconditional(a, "1-avoiding-sure-loss check")?;
    for i in 0..a.len() {
        if let Some(w) = bought_only_violation(a, i) {
            return Ok(ConsistencyVerdict::fail(w));
        }
    }
    Ok(ConsistencyVerdict::pass())
}

/// The powerset 2-coherence criterion: monotone under implication,
/// `lpr(A) + lpr(complement A) <= 1`, `lpr(empty) = 0`, `lpr(full) = 1`.
///
/// Witness indices refer to the full powerset assessment
/// ([`PowersetLowerProbability::to_assessment`]), whose item `k` is the
/// event with atom mask `k`. A conjugacy violation is witnessed by buying
/// both an event and its complement, a two-term sure loss.
pub fn check_2coherent_powerset<T: Scalar>(
    lpr: &PowersetLowerProbability<T>,
) -> ConsistencyVerdict<T> {
    let p = lpr.partition();
    let assessment = lpr.to_assessment();
    let fail = |witness: GainWitness<T>| {
        let sup = witness.replay(&assessment).expect("witness has a positive coefficient");
        debug_assert!(sup.is_negative());
        ConsistencyVerdict::fail(GainWitness { supremum: sup, ..witness })
    };

    let empty = 0usize;
    let full = p.full_set().0 as usize;
    let v_empty = lpr.value(crate::space::AtomSet(0)).clone();
    if !v_empty.is_zero() {
        let witness = if v_empty.is_positive() {
            GainWitness { bought: vec![(empty, T::one())], sold: None, supremum: T::zero() }
        } else {
            GainWitness { bought: vec![], sold: Some((empty, T::one())), supremum: T::zero() }
        };
        return fail(witness);
    }
    let v_full = lpr.value(p.full_set()).clone();
    if v_full != T::one() {
        let witness = if v_full > T::one() {
            GainWitness { bought: vec![(full, T::one())], sold: None, supremum: T::zero() }
        } else {
            GainWitness { bought: vec![], sold: Some((full, T::one())), supremum: T::zero() }
        };
        return fail(witness);
    }
    // Monotonicity: adding one atom never decreases the value.
    for set in p.all_sets() {
        for atom in 0..p.atom_count() {
            if set.contains(atom) {
                continue;
            }
            let bigger = set.union(crate::space::AtomSet(1 << atom));
            if lpr.value(set) > lpr.value(bigger) {
                return fail(GainWitness {
                    bought: vec![(set.0 as usize, T::one())],
                    sold: Some((bigger.0 as usize, T::one())),
                    supremum: T::zero(),
                });
            }
        }
    }
    // Conjugacy: lpr(A) + lpr(complement A) <= 1.
    for set in p.all_sets() {
        let comp = p.complement(set);
        if set.0 > comp.0 {
            continue;
        }
        if lpr.value(set).clone() + lpr.value(comp).clone() > T::one() {
            return fail(GainWitness {
                bought: vec![(set.0 as usize, T::one()), (comp.0 as usize, T::one())],
                sold: None,
                supremum: T::zero(),
            });
        }
    }
    ConsistencyVerdict::pass()
}

/// A 2-monotonicity (supermodularity) violation. Unlike the other
/// verdicts this is purely structural: failing it does not by itself
/// exhibit any negative gain.
#[derive(Clone, Debug)]
pub struct TwoMonotoneVerdict<T> {
    pub holds: bool,
    pub witness: Option<TwoMonotoneWitness<T>>,
}

#[derive(Clone, Debug)]
pub struct TwoMonotoneWitness<T> {
    pub a: Event,
    pub b: Event,
    /// `lpr(A v B) + lpr(A ^ B) - lpr(A) - lpr(B)`, strictly negative.
    pub deficit: T,
}

/// 2-monotonicity: `lpr(A v B) + lpr(A ^ B) >= lpr(A) + lpr(B)` for every
/// pair of measurable events.
pub fn check_2monotone<T: Scalar>(lpr: &PowersetLowerProbability<T>) -> TwoMonotoneVerdict<T> {
    let p = lpr.partition();
    for a in p.all_sets() {
        for b in p.all_sets() {
            if a.0 > b.0 {
                continue;
            }
            let deficit = lpr.value(a.union(b)).clone() + lpr.value(a.intersection(b)).clone()
                - lpr.value(a).clone()
                - lpr.value(b).clone();
            if deficit.is_negative() {
                return TwoMonotoneVerdict {
                    holds: false,
                    witness: Some(TwoMonotoneWitness {
                        a: p.event_of(a),
                        b: p.event_of(b),
                        deficit,
                    }),
                };
            }
        }
    }
    TwoMonotoneVerdict { holds: true, witness: None }
}

/// The envelope construction `lpr(X) = min_j (P_j(X) + alpha_j)`; with all
/// shifts zero this is the lower envelope, which is always coherent, and
/// with `min_j alpha_j = 0` it is centered convex.
pub fn envelope_assessment<T: Scalar>(
    pmfs: &[Pmf<T>],
    alphas: &[T],
    domain: &[ConditionalGamble<T>],
) -> Result<Assessment<T>> {
    if pmfs.is_empty() {
        return Err(Error::invalid("envelope", "no probabilities"));
    }
    if pmfs.len() != alphas.len() {
        return Err(Error::invalid(
            "envelope",
            format!("{} probabilities but {} shifts", pmfs.len(), alphas.len()),
        ));
    }
    if alphas.iter().min() != Some(&T::zero()) {
        return Err(Error::Precondition(
            "centered envelope requires the smallest shift to be 0".into(),
        ));
    }
    if domain.is_empty() {
        return Err(Error::invalid("envelope", "empty domain"));
    }
    let mut items = Vec::with_capacity(domain.len());
    for cg in domain {
        if !cg.is_unconditional() {
            return Err(Error::UnsupportedDomain("envelope construction"));
        }
        let value = pmfs
            .iter()
            .zip(alphas)
            .map(|(pmf, alpha)| Ok(pmf.expectation(cg.gamble())? + alpha.clone()))
            .collect::<Result<Vec<T>>>()?
            .into_iter()
            .min()
            .unwrap();
        items.push((cg.clone(), value));
    }
    Assessment::new(items)
}

/// Convenience used by tests and the report code: the vacuous lower
/// probability's assessment passes every check.
pub fn is_vacuous<T: Scalar>(lpr: &PowersetLowerProbability<T>) -> bool {
    let p = lpr.partition();
    p.all_sets().all(|s| {
        let expected = if s == p.full_set() { T::one() } else { T::zero() };
        *lpr.value(s) == expected
    })
}
