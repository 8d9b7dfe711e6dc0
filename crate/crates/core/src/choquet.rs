//! Choquet integration of simple gambles against a capacity, and the
//! Choquet integral extension of a powerset lower probability.
//!
//! On a finite partition every measurable gamble is simple, so the
//! integral is the telescoping sum over the sorted distinct values
//! `x_1 + sum_{i>=2} (x_i - x_{i-1}) mu(X >= x_i)`. Two further forms are
//! implemented and cross-checked: the layer form
//! `inf X + integral of mu(X >= x) over [inf X, sup X]` (a finite sum of
//! segment lengths times plateau values), and the defining split
//! `int_0^inf mu(X+ >= x) dx - int_0^inf conj(mu)(X- >= x) dx`, both exact
//! because the integrands are step functions with rational breakpoints.

use crate::consistency::check_2coherent_powerset;
use crate::error::{Error, Result};
use crate::gamble::Gamble;
use crate::powerset::PowersetLowerProbability;
use crate::scalar::Scalar;
use crate::space::{check_same_universe, AtomSet, Partition};

/// A monotone normalised set function on the measurable events of a
/// partition; monotonicity and normalisation are checked eagerly.
#[derive(Clone)]
pub struct Capacity<T> {
    values: PowersetLowerProbability<T>,
}

impl<T: Scalar> Capacity<T> {
    pub fn new(values: PowersetLowerProbability<T>) -> Result<Self> {
        let p = values.partition();
        if !values.value(AtomSet(0)).is_zero() {
            return Err(Error::invalid("capacity", "value of the empty event is not 0"));
        }
        if *values.value(p.full_set()) != T::one() {
            return Err(Error::invalid("capacity", "value of the full event is not 1"));
        }
        for set in p.all_sets() {
            for atom in 0..p.atom_count() {
                if set.contains(atom) {
                    continue;
                }
                let bigger = set.union(AtomSet(1 << atom));
                if values.value(set) > values.value(bigger) {
                    return Err(Error::invalid(
                        "capacity",
                        format!(
                            "not monotone: value({}) > value({})",
                            p.event_of(set),
                            p.event_of(bigger)
                        ),
                    ));
                }
            }
        }
        Ok(Capacity { values })
    }

    pub fn partition(&self) -> &Partition {
        self.values.partition()
    }

    pub fn value(&self, set: AtomSet) -> &T {
        self.values.value(set)
    }

    pub fn as_lower_probability(&self) -> &PowersetLowerProbability<T> {
        &self.values
    }

    /// The conjugate capacity `conj(mu)(A) = 1 - mu(complement A)`; again
    /// monotone and normalised.
    pub fn conjugate(&self) -> Capacity<T> {
        let p = self.partition().clone();
        let conj = PowersetLowerProbability::from_fn(p, |set| self.values.conjugate_upper_set(set));
        Capacity::new(conj).expect("conjugate of a capacity is a capacity")
    }
}

/// Sorted distinct per-atom values paired with their decumulative sets.
fn layers<T: Scalar>(mu: &Capacity<T>, x: &Gamble<T>) -> Result<Vec<(T, AtomSet)>> {
    let atom_values = x.atom_values(mu.partition())?;
    let mut distinct = atom_values.clone();
    distinct.sort();
    distinct.dedup();
    Ok(distinct
        .into_iter()
        .map(|level| {
            let mut mask = 0u32;
            for (i, v) in atom_values.iter().enumerate() {
                if *v >= level {
                    mask |= 1 << i;
                }
            }
            (level, AtomSet(mask))
        })
        .collect())
}

/// The Choquet integral of a measurable (hence simple) gamble:
/// `x_1 + sum_{i>=2} (x_i - x_{i-1}) mu(X >= x_i)`, exact. The layer form
/// is computed alongside and must agree.
pub fn choquet_integral<T: Scalar>(mu: &Capacity<T>, x: &Gamble<T>) -> Result<T> {
    check_same_universe(mu.partition().universe(), x.universe());
    let layers = layers(mu, x)?;
    let mut iter = layers.iter();
    let (x1, _) = iter.next().expect("partition has atoms");
    let mut total = x1.clone();
    let mut prev = x1.clone();
    for (xi, set) in iter {
        total = total + (xi.clone() - prev.clone()) * mu.value(*set).clone();
        prev = xi.clone();
    }
    let layered = choquet_integral_layer(mu, x)?;
    if layered != total {
        return Err(Error::Internal(format!(
            "Choquet forms disagree: telescoping {total}, layer {layered}"
        )));
    }
    Ok(total)
}

/// The layer form `inf X + integral over [inf X, sup X] of mu(X >= x)`:
/// the integrand is a right-continuous step function equal to
/// `mu(X >= x_i)` on `(x_(i-1), x_i]`, so the integral is a finite sum.
pub fn choquet_integral_layer<T: Scalar>(mu: &Capacity<T>, x: &Gamble<T>) -> Result<T> {
    let layers = layers(mu, x)?;
    let mut iter = layers.iter();
    let (x1, _) = iter.next().expect("partition has atoms");
    let mut total = x1.clone();
    let mut prev = x1.clone();
    for (xi, set) in iter {
        total = total + mu.value(*set).clone() * (xi.clone() - prev.clone());
        prev = xi.clone();
    }
    Ok(total)
}

/// The defining form, split at zero:
/// `int_0^inf mu(X+ >= t) dt - int_0^inf conj(mu)(X- >= t) dt`.
/// For t > 0, `(X+ >= t) = (X >= t)` and `(X- >= t) = (X <= -t)`; both
/// integrands are step functions with breakpoints at the gamble's values,
/// so the generalized Riemann integrals collapse to exact finite sums.
pub fn choquet_integral_defining<T: Scalar>(mu: &Capacity<T>, x: &Gamble<T>) -> Result<T> {
    let atom_values = x.atom_values(mu.partition())?;
    let conj = mu.conjugate();

    let decumulative = |level: &T| -> AtomSet {
        let mut mask = 0u32;
        for (i, v) in atom_values.iter().enumerate() {
            if v >= level {
                mask |= 1 << i;
            }
        }
        AtomSet(mask)
    };

    // Positive part: breakpoints are the positive values of X.
    let mut pos_levels: Vec<T> = atom_values.iter().filter(|v| v.is_positive()).cloned().collect();
    pos_levels.sort();
    pos_levels.dedup();
    let mut positive = T::zero();
    let mut prev = T::zero();
    for level in pos_levels {
        // on (prev, level] the integrand is mu(X >= level)
        positive = positive + (level.clone() - prev) * mu.value(decumulative(&level)).clone();
        prev = level;
    }

    // Negative part against the conjugate: (X- >= t) = (X <= -level).
    let complement_of_strict_above = |level: &T| -> AtomSet {
        let mut mask = 0u32;
        for (i, v) in atom_values.iter().enumerate() {
            if v <= level {
                mask |= 1 << i;
            }
        }
        AtomSet(mask)
    };
    let mut neg_levels: Vec<T> =
        atom_values.iter().filter(|v| v.is_negative()).map(|v| -v.clone()).collect();
    neg_levels.sort();
    neg_levels.dedup();
    let mut negative = T::zero();
    let mut prev = T::zero();
    for level in neg_levels {
        let set = complement_of_strict_above(&-level.clone());
        negative = negative + (level.clone() - prev) * conj.value(set).clone();
        prev = level;
    }

    Ok(positive - negative)
}

/// Which guarantee the Choquet extension of a given assignment carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChoquetGuarantee {
    /// The assignment passes the powerset 2-coherence criterion, so the
    /// extension is 2-coherent on all measurable gambles.
    TwoCoherent,
    /// Merely a normalised capacity: the extension is still 2-convex.
    TwoConvex,
}

/// The Choquet integral extension `X -> (C) int X d(lpr)`; agrees with
/// the assignment on indicators.
#[derive(Clone)]
pub struct ChoquetExtension<T> {
    capacity: Capacity<T>,
    guarantee: ChoquetGuarantee,
}

pub fn choquet_extension<T: Scalar>(
    lpr: &PowersetLowerProbability<T>,
) -> Result<ChoquetExtension<T>> {
    let guarantee = if check_2coherent_powerset(lpr).holds {
        ChoquetGuarantee::TwoCoherent
    } else {
        ChoquetGuarantee::TwoConvex
    };
    let capacity = Capacity::new(lpr.clone())?;
    Ok(ChoquetExtension { capacity, guarantee })
}

impl<T: Scalar> ChoquetExtension<T> {
    pub fn guarantee(&self) -> ChoquetGuarantee {
        self.guarantee
    }

    pub fn capacity(&self) -> &Capacity<T> {
        &self.capacity
    }

    pub fn evaluate(&self, x: &Gamble<T>) -> Result<T> {
        choquet_integral(&self.capacity, x)
    }
}

/// No crossing pair of worlds: there are no `w1, w2` with
/// `X(w1) < X(w2)` and `Y(w1) > Y(w2)`.
pub fn comonotone<T: Scalar>(x: &Gamble<T>, y: &Gamble<T>) -> bool {
    check_same_universe(x.universe(), y.universe());
    let n = x.universe().size();
    for w1 in 0..n {
        for w2 in 0..n {
            if x.value(w1) < x.value(w2) && y.value(w1) > y.value(w2) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::testutil::{dec, four_atom_example, three_atom_envelope};
    use crate::Q;

    #[test]
    fn three_atom_integral() {
        let (p, _, lpr) = three_atom_envelope();
        let mu = Capacity::new(lpr).unwrap();
        let u = p.universe().clone();
        let x = Gamble::new(u, vec![int::<Q>(2), int(3), int(0)]).unwrap();
        // 0 + 2 lpr(X>=2) + 1 lpr(X>=3) = 2(0.7) + 0.4
        assert_eq!(choquet_integral(&mu, &x).unwrap(), ratio::<Q>(9, 5));
        assert_eq!(choquet_integral_defining(&mu, &x).unwrap(), ratio::<Q>(9, 5));
    }

    #[test]
    fn four_atom_integral() {
        let lpr = four_atom_example();
        let u = lpr.partition().universe().clone();
        let mu = Capacity::new(lpr).unwrap();
        let z = Gamble::new(u, vec![int::<Q>(-1), int(0), int(1), int(3)]).unwrap();
        // -1 + lpr(b|c|d) + lpr(c|d) + 2 lpr(d) = -1 + 0.7 + 0.5 + 0.2
        assert_eq!(choquet_integral(&mu, &z).unwrap(), dec("0.4"));
        assert_eq!(choquet_integral_defining(&mu, &z).unwrap(), dec("0.4"));
    }

    #[test]
    fn indicators_return_the_capacity() {
        let lpr = four_atom_example();
        let ext = choquet_extension(&lpr).unwrap();
        assert_eq!(ext.guarantee(), ChoquetGuarantee::TwoCoherent);
        let p = lpr.partition().clone();
        for set in p.all_sets() {
            let indicator = Gamble::indicator(&p.event_of(set));
            assert_eq!(ext.evaluate(&indicator).unwrap(), *lpr.value(set));
        }
    }

    #[test]
    fn capacity_construction_rejects_bad_inputs() {
        let (p, _, lpr) = three_atom_envelope();
        assert!(Capacity::new(lpr).is_ok());
        let not_monotone = PowersetLowerProbability::<Q>::from_fn(p.clone(), |set| {
            if set == p.full_set() {
                int(1)
            } else if set.len() == 1 {
                dec("0.5")
            } else {
                int(0)
            }
        });
        assert!(Capacity::new(not_monotone).is_err());
        let not_normalised =
            PowersetLowerProbability::<Q>::from_fn(p.clone(), |set| {
                if set == p.full_set() {
                    dec("0.9")
                } else {
                    int(0)
                }
            });
        assert!(Capacity::new(not_normalised).is_err());
    }

    #[test]
    fn comonotonicity() {
        let u = crate::space::Universe::new(["w1", "w2"]).unwrap();
        let x = Gamble::new(u.clone(), vec![int::<Q>(0), int(1)]).unwrap();
        let y = Gamble::new(u.clone(), vec![int::<Q>(1), int(0)]).unwrap();
        assert!(!comonotone(&x, &y));
        assert!(comonotone(&x, &x));
        let c = Gamble::constant(&u, int::<Q>(4));
        assert!(comonotone(&c, &y));
        // a common monotone transform keeps comonotonicity
        let x2 = Gamble::new(u, vec![int::<Q>(0), int(1)]).unwrap();
        assert!(comonotone(&x, &x2));
    }
}
