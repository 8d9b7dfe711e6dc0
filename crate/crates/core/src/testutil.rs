//! Shared fixtures for the unit tests: the running paper-scale examples.

use crate::powerset::{Pmf, PowersetLowerProbability};
use crate::scalar::parse_rational;
use crate::space::{Partition, Universe};
use crate::Q;

pub(crate) fn dec(s: &str) -> Q {
    parse_rational(s).unwrap()
}

/// Four atoms a..d with the 16-value assignment that is 2-coherent but
/// not coherent; the companion gamble is Z = (-1, 0, 1, 3).
pub(crate) fn four_atom_example() -> PowersetLowerProbability<Q> {
    let u = Universe::new(["a", "b", "c", "d"]).unwrap();
    let p = Partition::discrete(&u).unwrap();
    let pairs = [
        ("", "0"),
        ("a", "0.2"),
        ("b", "0"),
        ("c", "0.3"),
        ("d", "0.1"),
        ("ab", "0.3"),
        ("ac", "0.5"),
        ("ad", "0.4"),
        ("bc", "0.5"),
        ("bd", "0.3"),
        ("cd", "0.5"),
        ("abc", "0.6"),
        ("abd", "0.7"),
        ("acd", "0.7"),
        ("bcd", "0.7"),
        ("abcd", "1"),
    ];
    let pairs = pairs
        .iter()
        .map(|(worlds, v)| {
            let names: Vec<String> = worlds.chars().map(|c| c.to_string()).collect();
            (u.event(&names).unwrap(), dec(v))
        })
        .collect();
    PowersetLowerProbability::from_event_values(p, pairs).unwrap()
}

/// Three singleton atoms with the envelope of (0.3, 0.4, 0.3) and
/// (0.1, 0.7, 0.2): coherent and 2-monotone.
pub(crate) fn three_atom_envelope() -> (Partition, Vec<Pmf<Q>>, PowersetLowerProbability<Q>) {
    let u = Universe::new(["w1", "w2", "w3"]).unwrap();
    let p = Partition::discrete(&u).unwrap();
    let p1 = Pmf::new(p.clone(), vec![dec("0.3"), dec("0.4"), dec("0.3")]).unwrap();
    let p2 = Pmf::new(p.clone(), vec![dec("0.1"), dec("0.7"), dec("0.2")]).unwrap();
    let lpr = PowersetLowerProbability::lower_envelope(&[p1.clone(), p2.clone()]).unwrap();
    (p, vec![p1, p2], lpr)
}
