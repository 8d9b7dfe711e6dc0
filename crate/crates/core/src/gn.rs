//! The Goodman-Nguyen relation on conditional events, inner and outer
//! conditional events w.r.t. a partition, and the lower/upper
//! GN-extensions of a full conditional lower probability.
//!
//! The universe may be strictly finer than the partition: that is what
//! makes a conditional event `C|D` genuinely non-measurable and the
//! inner/outer approximations informative. For a 2-coherent (or centered
//! 2-convex) assignment on all measurable conditional events, the lower
//! GN-extension is the corresponding natural extension, and an added
//! assessment value is consistent exactly when it lies between the lower
//! and upper GN-extensions.

use std::fmt;

use crate::error::{Error, Result};
use crate::gamble::{Assessment, ConditionalGamble, Gamble};
use crate::powerset::Pmf;
use crate::scalar::Scalar;
use crate::space::{check_same_universe, AtomSet, Event, Partition};

/// A conditional event `C|D` with non-empty conditioning event.
#[derive(Clone, PartialEq, Eq)]
pub struct ConditionalEvent {
    antecedent: Event,
    conditioning: Event,
}

impl ConditionalEvent {
    pub fn new(antecedent: Event, conditioning: Event) -> Result<Self> {
        check_same_universe(antecedent.universe(), conditioning.universe());
        if conditioning.is_empty() {
            return Err(Error::EmptyConditioning);
        }
        Ok(ConditionalEvent { antecedent, conditioning })
    }

    pub fn antecedent(&self) -> &Event {
        &self.antecedent
    }

    pub fn conditioning(&self) -> &Event {
        &self.conditioning
    }

    /// `C ^ D`: the part of the antecedent that can actually happen.
    pub fn positive_part(&self) -> Event {
        self.antecedent.intersection(&self.conditioning)
    }

    /// `~C ^ D`: the part of the conditioning event where `C` fails.
    pub fn negative_part(&self) -> Event {
        self.antecedent.complement().intersection(&self.conditioning)
    }

    /// Non-trivial: `C ^ D` is neither empty nor all of `D`.
    pub fn is_nontrivial(&self) -> bool {
        let pos = self.positive_part();
        !pos.is_empty() && pos != self.conditioning
    }

    pub fn require_nontrivial(&self) -> Result<()> {
        if self.is_nontrivial() {
            Ok(())
        } else {
            Err(Error::Degenerate(format!("conditional event {self} is trivial")))
        }
    }
}

impl fmt::Display for ConditionalEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.antecedent, self.conditioning)
    }
}

impl fmt::Debug for ConditionalEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The Goodman-Nguyen relation: `A|B <= C|D` iff `A^B => C^D` and
/// `~C^D => ~A^B`.
pub fn gn_leq(a: &ConditionalEvent, b: &ConditionalEvent) -> bool {
    a.positive_part().is_subset_of(&b.positive_part())
        && b.negative_part().is_subset_of(&a.negative_part())
}

/// Union of the atoms contained in the event.
pub fn inner_event(event: &Event, p: &Partition) -> Event {
    check_same_universe(event.universe(), p.universe());
    let mut result = p.universe().empty_event();
    for i in 0..p.atom_count() {
        let atom = p.atom_event(i);
        if atom.is_subset_of(event) {
            result = result.union(&atom);
        }
    }
    result
}

/// Union of the atoms intersecting the event.
pub fn outer_event(event: &Event, p: &Partition) -> Event {
    check_same_universe(event.universe(), p.universe());
    let mut result = p.universe().empty_event();
    for i in 0..p.atom_count() {
        let atom = p.atom_event(i);
        if !atom.intersection(event).is_empty() {
            result = result.union(&atom);
        }
    }
    result
}

/// The inner conditional event
/// `(C|D)_* = (C^D)_* | [ (C^D)_* v (~C^D)^* ]`: the greatest measurable
/// conditional event GN-below `C|D`.
pub fn inner_conditional(cd: &ConditionalEvent, p: &Partition) -> Result<ConditionalEvent> {
    cd.require_nontrivial()?;
    let pos = inner_event(&cd.positive_part(), p);
    let neg = outer_event(&cd.negative_part(), p);
    let conditioning = pos.union(&neg);
    if conditioning.is_empty() {
        return Err(Error::Degenerate(format!(
            "inner conditional of {cd} has an empty conditioning event (inner {pos}, outer {neg})"
        )));
    }
    ConditionalEvent::new(pos, conditioning)
}

/// The outer conditional event
/// `(C|D)^* = (C^D)^* | [ (C^D)^* v (~C^D)_* ]`: the least measurable
/// conditional event GN-above `C|D`.
pub fn outer_conditional(cd: &ConditionalEvent, p: &Partition) -> Result<ConditionalEvent> {
    cd.require_nontrivial()?;
    let pos = outer_event(&cd.positive_part(), p);
    let neg = inner_event(&cd.negative_part(), p);
    let conditioning = pos.union(&neg);
    if conditioning.is_empty() {
        return Err(Error::Degenerate(format!(
            "outer conditional of {cd} has an empty conditioning event (outer {pos}, inner {neg})"
        )));
    }
    ConditionalEvent::new(pos, conditioning)
}

/// A lower probability on every measurable conditional event of a
/// partition: a total map on `{ A|B : A, B unions of atoms, B nonempty }`
/// with values in `[0, 1]`. Keys are canonicalized to `(A ^ B, B)`.
#[derive(Clone)]
pub struct FullConditionalAssessment<T> {
    partition: Partition,
    // indexed by antecedent_mask * 2^atoms + conditioning_mask, antecedent
    // a subset of the conditioning event; unused slots are None
    values: Vec<Option<T>>,
}

impl<T: Scalar> FullConditionalAssessment<T> {
    pub fn from_fn(partition: Partition, f: impl Fn(AtomSet, AtomSet) -> T) -> Result<Self> {
        let n = partition.event_count();
        let mut values = vec![None; n * n];
        for b in 1..n as u32 {
            let bset = AtomSet(b);
            let mut a = b;
            loop {
                // iterate the subsets of b
                let aset = AtomSet(a);
                values[a as usize * n + b as usize] = Some(f(aset, bset));
                if a == 0 {
                    break;
                }
                a = (a - 1) & b;
            }
        }
        let out = FullConditionalAssessment { partition, values };
        out.validate()?;
        Ok(out)
    }

    /// Builds from explicit (antecedent, conditioning, value) triples;
    /// antecedents are clipped to the conditioning event, conflicting
    /// duplicates are rejected, and totality is enforced.
    pub fn from_triples(partition: Partition, triples: Vec<(Event, Event, T)>) -> Result<Self> {
        let n = partition.event_count();
        let mut values: Vec<Option<T>> = vec![None; n * n];
        for (a, b, v) in triples {
            let aset = partition
                .atom_set_of(&a.intersection(&b))
                .ok_or_else(|| Error::NotMeasurable(format!("event {a} straddles atoms")))?;
            let bset = partition
                .atom_set_of(&b)
                .ok_or_else(|| Error::NotMeasurable(format!("event {b} straddles atoms")))?;
            if bset.is_empty() {
                return Err(Error::EmptyConditioning);
            }
            let slot = &mut values[aset.0 as usize * n + bset.0 as usize];
            match slot {
                Some(existing) if *existing != v => {
                    return Err(Error::invalid(
                        "full conditional assessment",
                        format!("conflicting values for {}|{}", partition.event_of(aset), b),
                    ))
                }
                _ => *slot = Some(v),
            }
        }
        let out = FullConditionalAssessment { partition, values };
        out.validate_total()?;
        out.validate()?;
        Ok(out)
    }

    /// The conditional envelope `min_j P_j(A ^ B) / P_j(B)` of strictly
    /// positive probabilities; coherent by construction.
    pub fn from_pmf_envelope(pmfs: &[Pmf<T>]) -> Result<Self> {
        let first = pmfs
            .first()
            .ok_or_else(|| Error::invalid("full conditional assessment", "no probabilities"))?;
        let partition = first.partition().clone();
        for pmf in pmfs {
            if pmf.partition() != &partition {
                return Err(Error::UniverseMismatch);
            }
            if !pmf.is_strictly_positive() {
                return Err(Error::Precondition(
                    "conditional envelope needs strictly positive probabilities".into(),
                ));
            }
        }
        FullConditionalAssessment::from_fn(partition, |a, b| {
            pmfs.iter()
                .map(|pmf| pmf.event_probability(a) / pmf.event_probability(b))
                .min()
                .expect("probability list is non-empty")
        })
    }

    fn validate_total(&self) -> Result<()> {
        let n = self.partition.event_count();
        for b in 1..n as u32 {
            let mut a = b;
            loop {
                if self.values[a as usize * n + b as usize].is_none() {
                    return Err(Error::invalid(
                        "full conditional assessment",
                        format!(
                            "missing value for {}|{}",
                            self.partition.event_of(AtomSet(a)),
                            self.partition.event_of(AtomSet(b))
                        ),
                    ));
                }
                if a == 0 {
                    break;
                }
                a = (a - 1) & b;
            }
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        for v in self.values.iter().flatten() {
            if v.is_negative() || *v > T::one() {
                return Err(Error::invalid(
                    "full conditional assessment",
                    format!("value {v} outside [0, 1]"),
                ));
            }
        }
        Ok(())
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Value at a measurable conditional event.
    pub fn value(&self, cd: &ConditionalEvent) -> Result<&T> {
        let n = self.partition.event_count();
        let aset = self.partition.atom_set_of(&cd.positive_part()).ok_or_else(|| {
            Error::NotMeasurable(format!("antecedent of {cd} straddles atoms"))
        })?;
        let bset = self
            .partition
            .atom_set_of(cd.conditioning())
            .ok_or_else(|| Error::NotMeasurable(format!("conditioning of {cd} straddles atoms")))?;
        self.values[aset.0 as usize * n + bset.0 as usize]
            .as_ref()
            .ok_or_else(|| Error::Internal("totality invariant broken".into()))
    }

    /// All measurable conditional events, canonicalized.
    pub fn domain(&self) -> Vec<ConditionalEvent> {
        let n = self.partition.event_count();
        let mut out = Vec::new();
        for b in 1..n as u32 {
            let mut a = b;
            loop {
                out.push(
                    ConditionalEvent::new(
                        self.partition.event_of(AtomSet(a)),
                        self.partition.event_of(AtomSet(b)),
                    )
                    .expect("conditioning event is non-empty"),
                );
                if a == 0 {
                    break;
                }
                a = (a - 1) & b;
            }
        }
        out
    }

    /// The assessment with one conditional indicator item per measurable
    /// conditional event, suitable for the consistency checkers.
    pub fn to_assessment(&self) -> Assessment<T> {
        let items = self
            .domain()
            .into_iter()
            .map(|cd| {
                let v = self.value(&cd).expect("domain events are assessed").clone();
                let gamble = Gamble::indicator(&cd.positive_part());
                (
                    ConditionalGamble::new(gamble, cd.conditioning().clone())
                        .expect("conditioning event is non-empty"),
                    v,
                )
            })
            .collect();
        Assessment::new(items).expect("full conditional domain is non-empty")
    }
}

/// The lower GN-extension: the assignment's value at the inner
/// conditional event. For 2-coherent (resp. centered 2-convex)
/// assignments this is the 2-coherent (2-convex) natural extension.
pub fn gn_lower_extension<T: Scalar>(
    f: &FullConditionalAssessment<T>,
    cd: &ConditionalEvent,
) -> Result<T> {
    let inner = inner_conditional(cd, f.partition())?;
    Ok(f.value(&inner)?.clone())
}

/// The upper GN-extension: the value at the outer conditional event.
pub fn gn_upper_extension<T: Scalar>(
    f: &FullConditionalAssessment<T>,
    cd: &ConditionalEvent,
) -> Result<T> {
    let outer = outer_conditional(cd, f.partition())?;
    Ok(f.value(&outer)?.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::space::Universe;
    use crate::testutil::dec;
    use crate::Q;

    /// Universe of four worlds, partitioned into {w1}, {w2}, {w3, w4}.
    fn split_partition() -> Partition {
        let u = Universe::new(["w1", "w2", "w3", "w4"]).unwrap();
        Partition::new(
            u.clone(),
            vec![
                u.event(&["w1"]).unwrap(),
                u.event(&["w2"]).unwrap(),
                u.event(&["w3", "w4"]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn inner_outer_events() {
        let p = split_partition();
        let u = p.universe().clone();
        // measurable events are fixed points
        let m = u.event(&["w1", "w3", "w4"]).unwrap();
        assert_eq!(inner_event(&m, &p), m);
        assert_eq!(outer_event(&m, &p), m);
        // a single world inside the two-world atom
        let w3 = u.event(&["w3"]).unwrap();
        assert_eq!(inner_event(&w3, &p), u.empty_event());
        assert_eq!(outer_event(&w3, &p), u.event(&["w3", "w4"]).unwrap());
        // straddling two atoms, covering one fully
        let e = u.event(&["w1", "w3"]).unwrap();
        assert_eq!(inner_event(&e, &p), u.event(&["w1"]).unwrap());
        assert_eq!(outer_event(&e, &p), u.event(&["w1", "w3", "w4"]).unwrap());
    }

    #[test]
    fn gn_relation_basics() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let ce = |a: &[&str], b: &[&str]| {
            ConditionalEvent::new(u.event(a).unwrap(), u.event(b).unwrap()).unwrap()
        };
        // reflexive
        let x = ce(&["a"], &["a", "b"]);
        assert!(gn_leq(&x, &x));
        // a|(a v b)  <=  (a v c)|(a v b v c)
        let y = ce(&["a", "c"], &["a", "b", "c"]);
        assert!(gn_leq(&x, &y));
        assert!(!gn_leq(&y, &x));
        // both inclusions vacuous
        let empty_pos = ce(&[], &["a"]);
        let empty_neg = ce(&["b"], &["b"]);
        assert!(gn_leq(&empty_pos, &empty_neg));
    }

    #[test]
    fn measurable_conditionals_are_fixed_points() {
        let p = split_partition();
        let u = p.universe().clone();
        let cd = ConditionalEvent::new(
            u.event(&["w1"]).unwrap(),
            u.event(&["w1", "w3", "w4"]).unwrap(),
        )
        .unwrap();
        assert_eq!(inner_conditional(&cd, &p).unwrap(), cd);
        assert_eq!(outer_conditional(&cd, &p).unwrap(), cd);
    }

    #[test]
    fn straddling_conditional() {
        let p = split_partition();
        let u = p.universe().clone();
        // C = {w3}, D = {w2, w3}: C^D = {w3} (inner empty, outer the big
        // atom), ~C^D = {w2}.
        let cd =
            ConditionalEvent::new(u.event(&["w3"]).unwrap(), u.event(&["w2", "w3"]).unwrap())
                .unwrap();
        let inner = inner_conditional(&cd, &p).unwrap();
        assert_eq!(inner.antecedent(), &u.empty_event());
        assert_eq!(inner.conditioning(), &u.event(&["w2"]).unwrap());
        let outer = outer_conditional(&cd, &p).unwrap();
        assert_eq!(outer.antecedent(), &u.event(&["w3", "w4"]).unwrap());
        assert_eq!(outer.conditioning(), &u.event(&["w2", "w3", "w4"]).unwrap());
    }

    #[test]
    fn trivial_queries_are_rejected() {
        let p = split_partition();
        let u = p.universe().clone();
        let trivial =
            ConditionalEvent::new(u.event(&["w1"]).unwrap(), u.event(&["w1"]).unwrap()).unwrap();
        assert!(matches!(inner_conditional(&trivial, &p), Err(Error::Degenerate(_))));
    }

    #[test]
    fn envelope_extension_restricts_to_the_assessment() {
        let p = split_partition();
        let u = p.universe().clone();
        let pmf1 = Pmf::new(p.clone(), vec![dec("0.2"), dec("0.3"), dec("0.5")]).unwrap();
        let pmf2 = Pmf::new(p.clone(), vec![dec("0.4"), dec("0.4"), dec("0.2")]).unwrap();
        let f = FullConditionalAssessment::from_pmf_envelope(&[pmf1, pmf2]).unwrap();
        // measurable conditional events extend to their own value
        let cd = ConditionalEvent::new(
            u.event(&["w1"]).unwrap(),
            u.event(&["w1", "w2"]).unwrap(),
        )
        .unwrap();
        let assessed = f.value(&cd).unwrap().clone();
        assert_eq!(assessed, ratio::<Q>(2, 5)); // min(0.2/0.5, 0.4/0.8)
        assert_eq!(gn_lower_extension(&f, &cd).unwrap(), assessed);
        assert_eq!(gn_upper_extension(&f, &cd).unwrap(), assessed);
        // non-measurable: lower <= upper
        let cd = ConditionalEvent::new(
            u.event(&["w3"]).unwrap(),
            u.event(&["w2", "w3"]).unwrap(),
        )
        .unwrap();
        let lo = gn_lower_extension(&f, &cd).unwrap();
        let hi = gn_upper_extension(&f, &cd).unwrap();
        assert!(lo <= hi);
    }

    #[test]
    fn partial_assessments_are_rejected() {
        let p = split_partition();
        let u = p.universe().clone();
        let triples = vec![(
            u.event(&["w1"]).unwrap(),
            u.event(&["w1", "w2"]).unwrap(),
            dec("0.5"),
        )];
        assert!(FullConditionalAssessment::from_triples(p, triples).is_err());
    }
}
