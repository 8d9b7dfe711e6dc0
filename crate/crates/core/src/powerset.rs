//! Lower probabilities on the powerset of a partition, and probability
//! mass functions used to build envelope models.

use std::fmt;

use crate::error::{Error, Result};
use crate::gamble::{Assessment, Gamble};
use crate::scalar::{int, Scalar};
use crate::space::{check_same_universe, AtomSet, Event, Partition};

/// A lower probability defined on every event of `A(P)` (the atom-unions
/// of a partition). Raw container: no consistency is assumed at
/// construction, so that the consistency checkers can reject bad inputs.
#[derive(Clone, PartialEq, Eq)]
pub struct PowersetLowerProbability<T> {
    partition: Partition,
    values: Vec<T>,
}

impl<T: Scalar> PowersetLowerProbability<T> {
    /// `values[set.0]` is the lower probability of the atom union `set`.
    pub fn new(partition: Partition, values: Vec<T>) -> Result<Self> {
        if values.len() != partition.event_count() {
            return Err(Error::invalid(
                "powerset lower probability",
                format!(
                    "{} values for {} measurable events",
                    values.len(),
                    partition.event_count()
                ),
            ));
        }
        Ok(PowersetLowerProbability { partition, values })
    }

    pub fn from_fn(partition: Partition, f: impl Fn(AtomSet) -> T) -> Self {
        let values = (0..partition.event_count() as u32).map(|m| f(AtomSet(m))).collect();
        PowersetLowerProbability { partition, values }
    }

    /// Builds the assignment from (event, value) pairs over world names;
    /// must cover all measurable events exactly once.
    pub fn from_event_values(partition: Partition, pairs: Vec<(Event, T)>) -> Result<Self> {
        let mut values: Vec<Option<T>> = vec![None; partition.event_count()];
        for (event, v) in pairs {
            let set = partition.atom_set_of(&event).ok_or_else(|| {
                Error::NotMeasurable(format!("event {event} straddles atoms"))
            })?;
            if values[set.0 as usize].is_some() {
                return Err(Error::invalid(
                    "powerset lower probability",
                    format!("event {event} assigned twice"),
                ));
            }
            values[set.0 as usize] = Some(v);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(m, v)| {
                v.ok_or_else(|| {
                    Error::invalid(
                        "powerset lower probability",
                        format!("no value for event {}", partition.event_of(AtomSet(m as u32))),
                    )
                })
            })
            .collect::<Result<Vec<T>>>()?;
        Ok(PowersetLowerProbability { partition, values })
    }

    /// Lower envelope of precise probabilities: `lpr(A) = min_j P_j(A)`.
    pub fn lower_envelope(pmfs: &[Pmf<T>]) -> Result<Self> {
        let first = pmfs.first().ok_or_else(|| {
            Error::invalid("powerset lower probability", "empty list of probabilities")
        })?;
        let partition = first.partition().clone();
        for p in pmfs {
            if p.partition() != &partition {
                return Err(Error::UniverseMismatch);
            }
        }
        Ok(PowersetLowerProbability::from_fn(partition, |set| {
            pmfs.iter().map(|p| p.event_probability(set)).min().unwrap()
        }))
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn value(&self, set: AtomSet) -> &T {
        &self.values[set.0 as usize]
    }

    pub fn value_of_event(&self, event: &Event) -> Result<&T> {
        let set = self
            .partition
            .atom_set_of(event)
            .ok_or_else(|| Error::NotMeasurable(format!("event {event} straddles atoms")))?;
        Ok(self.value(set))
    }

    /// Conjugate upper probability `1 - lpr(complement)`.
    pub fn conjugate_upper(&self, event: &Event) -> Result<T> {
        let set = self
            .partition
            .atom_set_of(event)
            .ok_or_else(|| Error::NotMeasurable(format!("event {event} straddles atoms")))?;
        Ok(self.conjugate_upper_set(set))
    }

    pub fn conjugate_upper_set(&self, set: AtomSet) -> T {
        T::one() - self.value(self.partition.complement(set)).clone()
    }

    /// The full assessment: one unconditional item per measurable event.
    pub fn to_assessment(&self) -> Assessment<T> {
        let items = self
            .partition
            .all_sets()
            .map(|set| {
                let event = self.partition.event_of(set);
                (Gamble::indicator(&event), self.value(set).clone())
            })
            .collect();
        Assessment::unconditional(items).expect("powerset assessment is non-empty")
    }
}

impl<T: Scalar> fmt::Debug for PowersetLowerProbability<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PowersetLowerProbability[")?;
        for set in self.partition.all_sets() {
            writeln!(f, "  {} -> {}", self.partition.event_of(set), self.value(set))?;
        }
        write!(f, "]")
    }
}

/// A probability mass function on the atoms of a partition.
#[derive(Clone, PartialEq, Eq)]
pub struct Pmf<T> {
    partition: Partition,
    weights: Vec<T>,
}

impl<T: Scalar> Pmf<T> {
    pub fn new(partition: Partition, weights: Vec<T>) -> Result<Self> {
        if weights.len() != partition.atom_count() {
            return Err(Error::invalid(
                "pmf",
                format!("{} weights for {} atoms", weights.len(), partition.atom_count()),
            ));
        }
        if weights.iter().any(|w| w.is_negative()) {
            return Err(Error::invalid("pmf", "negative weight"));
        }
        let total = weights.iter().fold(T::zero(), |acc, w| acc + w.clone());
        if total != T::one() {
            return Err(Error::invalid("pmf", format!("weights sum to {total}, not 1")));
        }
        Ok(Pmf { partition, weights })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn weight(&self, atom: usize) -> &T {
        &self.weights[atom]
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.weights.iter().all(|w| w.is_positive())
    }

    pub fn event_probability(&self, set: AtomSet) -> T {
        set.atoms().fold(T::zero(), |acc, i| acc + self.weights[i].clone())
    }

    pub fn event_probability_of(&self, event: &Event) -> Result<T> {
        let set = self
            .partition
            .atom_set_of(event)
            .ok_or_else(|| Error::NotMeasurable(format!("event {event} straddles atoms")))?;
        Ok(self.event_probability(set))
    }

    /// Expectation of an atom-measurable gamble.
    pub fn expectation(&self, gamble: &Gamble<T>) -> Result<T> {
        check_same_universe(self.partition.universe(), gamble.universe());
        let values = gamble.atom_values(&self.partition)?;
        Ok(values
            .into_iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (v, w)| acc + v * w.clone()))
    }
}

impl<T: Scalar> fmt::Debug for Pmf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pmf(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", self.partition.atom_event(i), w)?;
        }
        write!(f, ")")
    }
}

/// The vacuous lower probability: 0 everywhere except the full event.
pub fn vacuous<T: Scalar>(partition: &Partition) -> PowersetLowerProbability<T> {
    let full = partition.full_set();
    PowersetLowerProbability::from_fn(partition.clone(), |set| {
        if set == full {
            int(1)
        } else {
            int(0)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, parse_rational, ratio};
    use crate::space::Universe;
    use crate::Q;

    fn table_1() -> (Partition, Vec<Pmf<Q>>, PowersetLowerProbability<Q>) {
        let u = Universe::new(["w1", "w2", "w3"]).unwrap();
        let p = Partition::discrete(&u).unwrap();
        let dec = |s: &str| parse_rational::<Q>(s).unwrap();
        let p1 = Pmf::new(p.clone(), vec![dec("0.3"), dec("0.4"), dec("0.3")]).unwrap();
        let p2 = Pmf::new(p.clone(), vec![dec("0.1"), dec("0.7"), dec("0.2")]).unwrap();
        let lpr = PowersetLowerProbability::lower_envelope(&[p1.clone(), p2.clone()]).unwrap();
        (p, vec![p1, p2], lpr)
    }

    #[test]
    fn table_1_envelope_values() {
        let (p, _, lpr) = table_1();
        let u = p.universe().clone();
        let val = |names: &[&str]| lpr.value_of_event(&u.event(names).unwrap()).unwrap().clone();
        assert_eq!(val(&["w1"]), ratio::<Q>(1, 10));
        assert_eq!(val(&["w2"]), ratio::<Q>(2, 5));
        assert_eq!(val(&["w3"]), ratio::<Q>(1, 5));
        assert_eq!(val(&["w1", "w2"]), ratio::<Q>(7, 10));
        assert_eq!(val(&["w1", "w3"]), ratio::<Q>(3, 10));
        assert_eq!(val(&["w2", "w3"]), ratio::<Q>(7, 10));
    }

    #[test]
    fn conjugate_upper_values() {
        let (p, _, lpr) = table_1();
        let u = p.universe().clone();
        // 1 - lpr(w1|w2) = 0.3
        let w3 = u.event(&["w3"]).unwrap();
        assert_eq!(lpr.conjugate_upper(&w3).unwrap(), ratio::<Q>(3, 10));
        assert_eq!(lpr.conjugate_upper(&u.full_event()).unwrap(), int::<Q>(1));
        assert_eq!(lpr.conjugate_upper(&u.empty_event()).unwrap(), int::<Q>(0));
        // conjugating twice returns the original value
        for set in p.all_sets() {
            let back = int::<Q>(1) - lpr.conjugate_upper_set(p.complement(set));
            assert_eq!(back, *lpr.value(set));
        }
    }

    #[test]
    fn pmf_validation() {
        let u = Universe::new(["x", "y"]).unwrap();
        let p = Partition::discrete(&u).unwrap();
        assert!(Pmf::new(p.clone(), vec![ratio::<Q>(1, 2), ratio(1, 3)]).is_err());
        assert!(Pmf::new(p.clone(), vec![ratio::<Q>(3, 2), ratio(-1, 2)]).is_err());
        let ok = Pmf::new(p, vec![ratio::<Q>(1, 3), ratio(2, 3)]).unwrap();
        let g = Gamble::new(u.clone(), vec![int(3), int(-3)]).unwrap();
        assert_eq!(ok.expectation(&g).unwrap(), int::<Q>(-1));
    }

    #[test]
    fn totality_is_enforced() {
        let u = Universe::new(["x", "y"]).unwrap();
        let p = Partition::discrete(&u).unwrap();
        let pairs = vec![(u.event(&["x"]).unwrap(), ratio::<Q>(1, 2))];
        assert!(PowersetLowerProbability::from_event_values(p, pairs).is_err());
    }
}
