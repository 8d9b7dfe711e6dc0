//! Gambles (bounded random variables on a finite universe), conditional
//! gambles, and assessments.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};
use crate::space::{check_same_universe, Event, Partition, Universe};

/// A total map from worlds to scalar values.
#[derive(Clone, PartialEq, Eq)]
pub struct Gamble<T> {
    universe: Universe,
    values: Vec<T>,
}

impl<T: Scalar> Gamble<T> {
    pub fn new(universe: Universe, values: Vec<T>) -> Result<Self> {
        if values.len() != universe.size() {
            return Err(Error::invalid(
                "gamble",
                format!("{} values for {} worlds", values.len(), universe.size()),
            ));
        }
        Ok(Gamble { universe, values })
    }

    /// Builds a gamble from (world name, value) pairs; every world must be
    /// assigned exactly once.
    pub fn from_pairs<S: AsRef<str>>(universe: &Universe, pairs: &[(S, T)]) -> Result<Self> {
        let mut values: Vec<Option<T>> = vec![None; universe.size()];
        for (name, v) in pairs {
            let idx = universe.world_index(name.as_ref()).ok_or_else(|| {
                Error::invalid("gamble", format!("unknown world {:?}", name.as_ref()))
            })?;
            if values[idx].is_some() {
                return Err(Error::invalid(
                    "gamble",
                    format!("world {:?} assigned twice", name.as_ref()),
                ));
            }
            values[idx] = Some(v.clone());
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    Error::invalid("gamble", format!("world {:?} missing", universe.world_name(i)))
                })
            })
            .collect::<Result<Vec<T>>>()?;
        Ok(Gamble { universe: universe.clone(), values })
    }

    pub fn constant(universe: &Universe, value: T) -> Self {
        Gamble { universe: universe.clone(), values: vec![value; universe.size()] }
    }

    pub fn zero(universe: &Universe) -> Self {
        Gamble::constant(universe, T::zero())
    }

    pub fn indicator(event: &Event) -> Self {
        let universe = event.universe().clone();
        let values =
            (0..universe.size()).map(|i| if event.contains(i) { T::one() } else { T::zero() }).collect();
        Gamble { universe, values }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn value(&self, world: usize) -> &T {
        &self.values[world]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn inf(&self) -> T {
        self.values.iter().min().expect("universe is non-empty").clone()
    }

    pub fn sup(&self) -> T {
        self.values.iter().max().expect("universe is non-empty").clone()
    }

    /// Minimum of the gamble over the worlds of `event` (attained, since
    /// the universe is finite). The event must be non-empty.
    pub fn conditional_inf(&self, event: &Event) -> Result<T> {
        check_same_universe(&self.universe, event.universe());
        if event.is_empty() {
            return Err(Error::EmptyConditioning);
        }
        Ok(event.world_indices().map(|i| &self.values[i]).min().unwrap().clone())
    }

    /// Maximum of the gamble over the worlds of `event`.
    pub fn conditional_sup(&self, event: &Event) -> Result<T> {
        check_same_universe(&self.universe, event.universe());
        if event.is_empty() {
            return Err(Error::EmptyConditioning);
        }
        Ok(event.world_indices().map(|i| &self.values[i]).max().unwrap().clone())
    }

    /// The decumulative event `(Z >= z)`.
    pub fn decumulative_event(&self, level: &T) -> Event {
        let mut mask = 0u64;
        for (i, v) in self.values.iter().enumerate() {
            if v >= level {
                mask |= 1 << i;
            }
        }
        self.universe.event_from_mask(mask)
    }

    /// True if the gamble is constant on every atom of the partition.
    pub fn is_measurable(&self, partition: &Partition) -> bool {
        self.atom_values(partition).is_ok()
    }

    /// The per-atom values of an atom-measurable gamble.
    pub fn atom_values(&self, partition: &Partition) -> Result<Vec<T>> {
        check_same_universe(&self.universe, partition.universe());
        let mut out = Vec::with_capacity(partition.atom_count());
        for i in 0..partition.atom_count() {
            let atom = partition.atom_event(i);
            let mut worlds = atom.world_indices();
            let first = self.values[worlds.next().unwrap()].clone();
            for w in worlds {
                if self.values[w] != first {
                    return Err(Error::NotMeasurable(format!(
                        "gamble is not constant on atom {atom}"
                    )));
                }
            }
            out.push(first);
        }
        Ok(out)
    }

    pub fn distinct_sorted_values(&self) -> Vec<T> {
        let mut vals = self.values.clone();
        vals.sort();
        vals.dedup();
        vals
    }

    pub fn add(&self, other: &Gamble<T>) -> Gamble<T> {
        check_same_universe(&self.universe, &other.universe);
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b.clone()).collect();
        Gamble { universe: self.universe.clone(), values }
    }

    pub fn sub(&self, other: &Gamble<T>) -> Gamble<T> {
        check_same_universe(&self.universe, &other.universe);
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.clone() - b.clone()).collect();
        Gamble { universe: self.universe.clone(), values }
    }

    pub fn scale(&self, factor: &T) -> Gamble<T> {
        let values = self.values.iter().map(|v| v.clone() * factor.clone()).collect();
        Gamble { universe: self.universe.clone(), values }
    }

    pub fn add_constant(&self, c: &T) -> Gamble<T> {
        let values = self.values.iter().map(|v| v.clone() + c.clone()).collect();
        Gamble { universe: self.universe.clone(), values }
    }

    pub fn neg(&self) -> Gamble<T> {
        self.scale(&-T::one())
    }

    pub fn leq(&self, other: &Gamble<T>) -> bool {
        check_same_universe(&self.universe, &other.universe);
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

impl<T: Scalar> fmt::Debug for Gamble<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", self.universe.world_name(i), v)?;
        }
        write!(f, ")")
    }
}

/// A gamble together with a non-empty conditioning event.
#[derive(Clone, PartialEq, Eq)]
pub struct ConditionalGamble<T> {
    gamble: Gamble<T>,
    conditioning: Event,
}

impl<T: Scalar> ConditionalGamble<T> {
    pub fn new(gamble: Gamble<T>, conditioning: Event) -> Result<Self> {
        check_same_universe(gamble.universe(), conditioning.universe());
        if conditioning.is_empty() {
            return Err(Error::EmptyConditioning);
        }
        Ok(ConditionalGamble { gamble, conditioning })
    }

    pub fn unconditional(gamble: Gamble<T>) -> Self {
        let conditioning = gamble.universe().full_event();
        ConditionalGamble { gamble, conditioning }
    }

    pub fn gamble(&self) -> &Gamble<T> {
        &self.gamble
    }

    pub fn conditioning(&self) -> &Event {
        &self.conditioning
    }

    pub fn is_unconditional(&self) -> bool {
        self.conditioning.is_full()
    }

    pub fn universe(&self) -> &Universe {
        self.gamble.universe()
    }
}

impl<T: Scalar> fmt::Debug for ConditionalGamble<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unconditional() {
            write!(f, "{:?}", self.gamble)
        } else {
            write!(f, "{:?}|{}", self.gamble, self.conditioning)
        }
    }
}

/// A finite list of (conditional gamble, lower value) pairs: the object
/// every consistency check and extension consumes.
#[derive(Clone)]
pub struct Assessment<T> {
    items: Vec<(ConditionalGamble<T>, T)>,
}

impl<T: Scalar> Assessment<T> {
    pub fn new(items: Vec<(ConditionalGamble<T>, T)>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::invalid("assessment", "no items"));
        }
        let universe = items[0].0.universe().clone();
        let mut kept: Vec<(ConditionalGamble<T>, T)> = Vec::with_capacity(items.len());
        for (cg, value) in items {
            if cg.universe() != &universe {
                return Err(Error::UniverseMismatch);
            }
            match kept.iter().find(|(other, _)| *other == cg) {
                Some((_, existing)) if *existing == value => continue,
                Some((other, existing)) => {
                    return Err(Error::invalid(
                        "assessment",
                        format!("conflicting values {existing} and {value} for {other:?}"),
                    ))
                }
                None => kept.push((cg, value)),
            }
        }
        Ok(Assessment { items: kept })
    }

    /// Assessment of unconditional gambles.
    pub fn unconditional(items: Vec<(Gamble<T>, T)>) -> Result<Self> {
        Assessment::new(
            items.into_iter().map(|(g, v)| (ConditionalGamble::unconditional(g), v)).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn universe(&self) -> &Universe {
        self.items[0].0.universe()
    }

    pub fn item(&self, index: usize) -> (&ConditionalGamble<T>, &T) {
        let (cg, v) = &self.items[index];
        (cg, v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ConditionalGamble<T>, &T)> {
        self.items.iter().map(|(cg, v)| (cg, v))
    }

    pub fn is_unconditional(&self) -> bool {
        self.items.iter().all(|(cg, _)| cg.is_unconditional())
    }

    /// Appends one more item, keeping the construction invariants.
    pub fn augmented(&self, cg: ConditionalGamble<T>, value: T) -> Result<Self> {
        let mut items = self.items.clone();
        items.push((cg, value));
        Assessment::new(items)
    }
}

impl<T: Scalar> fmt::Debug for Assessment<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Assessment[")?;
        for (cg, v) in &self.items {
            writeln!(f, "  {cg:?} -> {v}")?;
        }
        write!(f, "]")
    }
}

/// Convenience: the constant-one gamble.
pub fn one<T: Scalar>(universe: &Universe) -> Gamble<T> {
    Gamble::constant(universe, int(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::Q;

    fn example_5_2() -> (Universe, Gamble<Q>) {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let z = Gamble::new(u.clone(), vec![int(-1), int(0), int(1), int(3)]).unwrap();
        (u, z)
    }

    #[test]
    fn conditional_inf_on_example_values() {
        let (u, z) = example_5_2();
        let cd = u.event(&["c", "d"]).unwrap();
        assert_eq!(z.conditional_inf(&cd).unwrap(), int::<Q>(1));
        assert_eq!(z.conditional_inf(&u.full_event()).unwrap(), z.inf());
        let constant = Gamble::constant(&u, int::<Q>(5));
        assert_eq!(constant.conditional_inf(&cd).unwrap(), int::<Q>(5));
        assert!(z.conditional_inf(&u.empty_event()).is_err());
    }

    #[test]
    fn decumulative_events() {
        let (u, z) = example_5_2();
        assert_eq!(z.decumulative_event(&int(0)), u.event(&["b", "c", "d"]).unwrap());
        assert_eq!(z.decumulative_event(&z.inf()), u.full_event());
        let above = z.sup() + int::<Q>(1);
        assert_eq!(z.decumulative_event(&above), u.empty_event());
    }

    #[test]
    fn decumulative_event_is_antitone() {
        let (_, z) = example_5_2();
        let lo = ratio::<Q>(-1, 2);
        let hi = ratio::<Q>(5, 2);
        assert!(z.decumulative_event(&hi).is_subset_of(&z.decumulative_event(&lo)));
    }

    #[test]
    fn measurability() {
        let (u, z) = example_5_2();
        let p = Partition::new(
            u.clone(),
            vec![u.event(&["a", "b"]).unwrap(), u.event(&["c", "d"]).unwrap()],
        )
        .unwrap();
        assert!(!z.is_measurable(&p));
        let w = Gamble::new(u.clone(), vec![int::<Q>(1), int(1), int(7), int(7)]).unwrap();
        assert_eq!(w.atom_values(&p).unwrap(), vec![int::<Q>(1), int(7)]);
    }

    #[test]
    fn assessment_rejects_conflicts() {
        let (u, z) = example_5_2();
        let bad = Assessment::unconditional(vec![
            (z.clone(), int::<Q>(0)),
            (z.clone(), int::<Q>(1)),
        ]);
        assert!(bad.is_err());
        let dedup = Assessment::unconditional(vec![
            (z.clone(), int::<Q>(0)),
            (z.clone(), int::<Q>(0)),
        ])
        .unwrap();
        assert_eq!(dedup.len(), 1);
        assert!(Assessment::<Q>::new(vec![]).is_err());
        let _ = u;
    }
}
