//! Verified composition chains.

use std::fmt;

use crate::error::{Error, Result};
use crate::upoly::Poly;

/// Values that compose under `∘`.
pub trait Compose: Clone + PartialEq {
    /// `self ∘ inner`.
    fn compose_with(&self, inner: &Self) -> Self;
}

impl Compose for Poly {
    fn compose_with(&self, inner: &Self) -> Self {
        self.compose(inner)
    }
}

/// A target together with factors `f_m, ..., f_1` (outermost first) whose composition equals it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition<P> {
    target: P,
    factors: Vec<P>,
}

impl<P: Compose> Decomposition<P> {
    /// Checks that the factors compose to `target`.
    pub fn new(target: P, factors: Vec<P>) -> Result<Self> {
        if factors.is_empty() || compose_all(&factors) != target {
            return Err(Error::NotADecomposition);
        }
        Ok(Decomposition { target, factors })
    }

    /// The one-factor decomposition `(f)`.
    pub fn trivial(target: P) -> Self {
        Decomposition {
            factors: vec![target.clone()],
            target,
        }
    }

    pub fn target(&self) -> &P {
        &self.target
    }

    /// Factors, outermost first.
    pub fn factors(&self) -> &[P] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<P> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The innermost factor.
    pub fn innermost(&self) -> &P {
        self.factors.last().expect("decompositions are nonempty")
    }
}

/// Composes `f_m ∘ ... ∘ f_1` given outermost first.
pub fn compose_all<P: Compose>(factors: &[P]) -> P {
    let mut it = factors.iter().rev();
    let first = it.next().expect("at least one factor").clone();
    it.fold(first, |acc, f| f.compose_with(&acc))
}

impl<P: fmt::Display> fmt::Display for Decomposition<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" o ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn construction_checks_composition() {
        let f7 = Field::prime(7).unwrap();
        let g = Poly::parse(&f7, "x^2").unwrap();
        let h = Poly::parse(&f7, "x^3+x").unwrap();
        let f = g.compose(&h);
        let d = Decomposition::new(f.clone(), vec![g.clone(), h.clone()]).unwrap();
        assert_eq!(d.to_string(), "x^2 o x^3+x");
        assert_eq!(
            Decomposition::new(f, vec![h, g]).unwrap_err(),
            Error::NotADecomposition
        );
    }
}
