//! Possibility spaces: universes of worlds, events, and partitions.
//!
//! A [`Universe`] is an ordered finite set of named worlds. An [`Event`] is
//! a subset of one universe, stored as a bitmask. A [`Partition`] groups
//! the worlds of a universe into pairwise-disjoint, jointly-exhaustive
//! atoms; events that are unions of atoms are the *measurable* ones, and
//! are identified by an atom bitmask ([`AtomSet`]).
//!
//! Events carry their universe; combining events from different universes
//! is a hard error (panic), never an implicit union.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

const MAX_WORLDS: usize = 64;
const MAX_ATOMS: usize = 16;

/// An ordered finite set of distinct world identifiers.
#[derive(Clone)]
pub struct Universe {
    worlds: Arc<Vec<String>>,
}

impl Universe {
    pub fn new<I, S>(worlds: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let worlds: Vec<String> = worlds.into_iter().map(Into::into).collect();
        if worlds.is_empty() {
            return Err(Error::invalid("universe", "no worlds"));
        }
        if worlds.len() > MAX_WORLDS {
            return Err(Error::invalid(
                "universe",
                format!("{} worlds exceed the supported maximum of {MAX_WORLDS}", worlds.len()),
            ));
        }
        for (i, w) in worlds.iter().enumerate() {
            if worlds[..i].contains(w) {
                return Err(Error::invalid("universe", format!("duplicate world {w:?}")));
            }
        }
        Ok(Universe { worlds: Arc::new(worlds) })
    }

    pub fn size(&self) -> usize {
        self.worlds.len()
    }

    pub fn world_name(&self, index: usize) -> &str {
        &self.worlds[index]
    }

    pub fn world_index(&self, name: &str) -> Option<usize> {
        self.worlds.iter().position(|w| w == name)
    }

    pub fn world_names(&self) -> impl Iterator<Item = &str> {
        self.worlds.iter().map(String::as_str)
    }

    /// Event containing the named worlds.
    pub fn event<S: AsRef<str>>(&self, names: &[S]) -> Result<Event> {
        let mut mask = 0u64;
        for n in names {
            let idx = self.world_index(n.as_ref()).ok_or_else(|| {
                Error::invalid("event", format!("unknown world {:?}", n.as_ref()))
            })?;
            mask |= 1 << idx;
        }
        Ok(Event { universe: self.clone(), mask })
    }

    pub fn empty_event(&self) -> Event {
        Event { universe: self.clone(), mask: 0 }
    }

    pub fn full_event(&self) -> Event {
        Event { universe: self.clone(), mask: self.full_mask() }
    }

    pub fn event_from_mask(&self, mask: u64) -> Event {
        assert_eq!(mask & !self.full_mask(), 0, "mask exceeds universe");
        Event { universe: self.clone(), mask }
    }

    fn full_mask(&self) -> u64 {
        if self.size() == MAX_WORLDS {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.worlds, &other.worlds) || self.worlds == other.worlds
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe{:?}", self.worlds)
    }
}

pub(crate) fn check_same_universe(a: &Universe, b: &Universe) {
    assert!(a == b, "universe mismatch: values from different universes combined");
}

/// A subset of the worlds of one universe.
#[derive(Clone, PartialEq, Eq)]
pub struct Event {
    universe: Universe,
    mask: u64,
}

impl Event {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == self.universe.full_mask()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, world: usize) -> bool {
        self.mask & (1 << world) != 0
    }

    pub fn world_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe.size()).filter(|i| self.contains(*i))
    }

    pub fn world_names(&self) -> Vec<&str> {
        self.world_indices().map(|i| self.universe.world_name(i)).collect()
    }

    pub fn complement(&self) -> Event {
        Event {
            universe: self.universe.clone(),
            mask: !self.mask & self.universe.full_mask(),
        }
    }

    pub fn union(&self, other: &Event) -> Event {
        check_same_universe(&self.universe, &other.universe);
        Event { universe: self.universe.clone(), mask: self.mask | other.mask }
    }

    pub fn intersection(&self, other: &Event) -> Event {
        check_same_universe(&self.universe, &other.universe);
        Event { universe: self.universe.clone(), mask: self.mask & other.mask }
    }

    pub fn is_subset_of(&self, other: &Event) -> bool {
        check_same_universe(&self.universe, &other.universe);
        self.mask & !other.mask == 0
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{}", self.world_names().join("|"))
    }
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A set of atoms of a partition, identifying a measurable event.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AtomSet(pub u32);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn contains(self, atom: usize) -> bool {
        self.0 & (1 << atom) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn atoms(self) -> impl Iterator<Item = usize> {
        (0..u32::BITS as usize).filter(move |i| self.contains(*i))
    }

    pub fn union(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 | other.0)
    }

    pub fn intersection(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & other.0)
    }
}

/// A grouping of a universe's worlds into disjoint, exhaustive atoms.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    universe: Universe,
    atoms: Vec<u64>,
}

impl Partition {
    pub fn new(universe: Universe, atoms: Vec<Event>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::invalid("partition", "no atoms"));
        }
        if atoms.len() > MAX_ATOMS {
            return Err(Error::invalid(
                "partition",
                format!("{} atoms exceed the supported maximum of {MAX_ATOMS}", atoms.len()),
            ));
        }
        let mut covered = 0u64;
        let mut masks = Vec::with_capacity(atoms.len());
        for atom in &atoms {
            if atom.universe() != &universe {
                return Err(Error::UniverseMismatch);
            }
            if atom.is_empty() {
                return Err(Error::invalid("partition", "empty atom"));
            }
            if covered & atom.mask() != 0 {
                return Err(Error::invalid("partition", format!("overlapping atom {atom}")));
            }
            covered |= atom.mask();
            masks.push(atom.mask());
        }
        if covered != universe.full_mask() {
            return Err(Error::invalid("partition", "atoms do not cover the universe"));
        }
        Ok(Partition { universe, atoms: masks })
    }

    /// The discrete partition: each world is its own atom.
    pub fn discrete(universe: &Universe) -> Result<Self> {
        let atoms = (0..universe.size()).map(|i| universe.event_from_mask(1 << i)).collect();
        Partition::new(universe.clone(), atoms)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atom_event(&self, index: usize) -> Event {
        self.universe.event_from_mask(self.atoms[index])
    }

    /// Number of measurable events (2^atoms).
    pub fn event_count(&self) -> usize {
        1 << self.atom_count()
    }

    pub fn full_set(&self) -> AtomSet {
        AtomSet((self.event_count() - 1) as u32)
    }

    pub fn complement(&self, set: AtomSet) -> AtomSet {
        AtomSet(!set.0 & self.full_set().0)
    }

    pub fn event_of(&self, set: AtomSet) -> Event {
        let mut mask = 0u64;
        for atom in set.atoms() {
            mask |= self.atoms[atom];
        }
        self.universe.event_from_mask(mask)
    }

    /// The atom set of a measurable event, or `None` if it straddles atoms.
    pub fn atom_set_of(&self, event: &Event) -> Option<AtomSet> {
        check_same_universe(&self.universe, event.universe());
        let mut set = AtomSet::EMPTY;
        let mut covered = 0u64;
        for (i, atom) in self.atoms.iter().enumerate() {
            if atom & event.mask() != 0 {
                if atom & !event.mask() != 0 {
                    return None;
                }
                set = set.union(AtomSet(1 << i));
                covered |= atom;
            }
        }
        debug_assert_eq!(covered, event.mask());
        Some(set)
    }

    pub fn is_measurable(&self, event: &Event) -> bool {
        self.atom_set_of(event).is_some()
    }

    /// All measurable events, as atom sets, in ascending mask order.
    pub fn all_sets(&self) -> impl Iterator<Item = AtomSet> {
        (0..self.event_count() as u32).map(AtomSet)
    }

    /// Proper measurable events: all except the empty and the full one.
    pub fn proper_sets(&self) -> impl Iterator<Item = AtomSet> + '_ {
        self.all_sets().filter(|s| !s.is_empty() && *s != self.full_set())
    }

    /// Canonical event order used to break ties reproducibly: by
    /// cardinality (number of atoms) first, then lexicographically on the
    /// ascending list of atom indices.
    pub fn canonical_cmp(&self, a: AtomSet, b: AtomSet) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            let mut xs = a.atoms();
            let mut ys = b.atoms();
            loop {
                match (xs.next(), ys.next()) {
                    (Some(x), Some(y)) if x == y => continue,
                    (Some(x), Some(y)) => return x.cmp(&y),
                    (None, None) => return Ordering::Equal,
                    (None, _) => return Ordering::Less,
                    (_, None) => return Ordering::Greater,
                }
            }
        })
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms: Vec<String> =
            (0..self.atom_count()).map(|i| self.atom_event(i).to_string()).collect();
        write!(f, "Partition[{}]", atoms.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> Universe {
        Universe::new(["a", "b", "c", "d"]).unwrap()
    }

    #[test]
    fn universe_rejects_duplicates_and_empty() {
        assert!(Universe::new(["a", "a"]).is_err());
        assert!(Universe::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn event_algebra() {
        let u = abcd();
        let ab = u.event(&["a", "b"]).unwrap();
        let bc = u.event(&["b", "c"]).unwrap();
        assert_eq!(ab.union(&bc), u.event(&["a", "b", "c"]).unwrap());
        assert_eq!(ab.intersection(&bc), u.event(&["b"]).unwrap());
        assert_eq!(ab.complement(), u.event(&["c", "d"]).unwrap());
        assert!(u.event(&["b"]).unwrap().is_subset_of(&ab));
        assert!(u.event(&["z"]).is_err());
    }

    #[test]
    #[should_panic(expected = "universe mismatch")]
    fn cross_universe_union_is_a_hard_error() {
        let u = abcd();
        let v = Universe::new(["x", "y"]).unwrap();
        let _ = u.event(&["a"]).unwrap().union(&v.event(&["x"]).unwrap());
    }

    #[test]
    fn partition_validation() {
        let u = abcd();
        let ok = Partition::new(
            u.clone(),
            vec![u.event(&["a"]).unwrap(), u.event(&["b"]).unwrap(), u.event(&["c", "d"]).unwrap()],
        );
        assert!(ok.is_ok());
        // overlapping
        assert!(Partition::new(
            u.clone(),
            vec![u.event(&["a", "b"]).unwrap(), u.event(&["b", "c", "d"]).unwrap()]
        )
        .is_err());
        // not exhaustive
        assert!(Partition::new(u.clone(), vec![u.event(&["a"]).unwrap()]).is_err());
    }

    #[test]
    fn measurability_and_atom_sets() {
        let u = abcd();
        let p = Partition::new(
            u.clone(),
            vec![u.event(&["a"]).unwrap(), u.event(&["b"]).unwrap(), u.event(&["c", "d"]).unwrap()],
        )
        .unwrap();
        let cd = u.event(&["c", "d"]).unwrap();
        assert_eq!(p.atom_set_of(&cd), Some(AtomSet(0b100)));
        let c = u.event(&["c"]).unwrap();
        assert_eq!(p.atom_set_of(&c), None);
        assert_eq!(p.event_of(AtomSet(0b101)), u.event(&["a", "c", "d"]).unwrap());
        assert_eq!(p.complement(AtomSet(0b101)), AtomSet(0b010));
    }

    #[test]
    fn canonical_order_is_cardinality_then_lex() {
        let u = abcd();
        let p = Partition::discrete(&u).unwrap();
        let mut sets: Vec<AtomSet> = p.all_sets().collect();
        sets.sort_by(|x, y| p.canonical_cmp(*x, *y));
        let names: Vec<String> = sets.iter().map(|s| p.event_of(*s).to_string()).collect();
        assert_eq!(
            names,
            vec![
                "{}", "a", "b", "c", "d", "a|b", "a|c", "a|d", "b|c", "b|d", "c|d", "a|b|c",
                "a|b|d", "a|c|d", "b|c|d", "a|b|c|d"
            ]
        );
    }
}
