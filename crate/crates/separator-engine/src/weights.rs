use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::SeparatorError;

/// Nonnegative rational vertex weights summing to one. Vertices without an entry weigh zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAssignment {
    weights: BTreeMap<usize, BigRational>,
}

impl WeightAssignment {
    pub fn new(entries: impl IntoIterator<Item = (usize, BigRational)>) -> Result<Self, SeparatorError> {
        let mut weights = BTreeMap::new();
        for (v, w) in entries {
            if w.is_negative() {
                return Err(SeparatorError::BadWeights(format!("vertex {v} has negative weight")));
            }
            if !w.is_zero() {
                *weights.entry(v).or_insert_with(BigRational::zero) += w;
            }
        }
        let total: BigRational = weights.values().sum();
        if !total.is_one() {
            return Err(SeparatorError::BadWeights(format!("weights sum to {total}")));
        }
        Ok(WeightAssignment { weights })
    }

    /// Weight `1/|set|` on every vertex of `set`.
    pub fn uniform(set: &[usize]) -> Result<Self, SeparatorError> {
        if set.is_empty() {
            return Err(SeparatorError::BadWeights("uniform weights on an empty set".into()));
        }
        let share = BigRational::new(BigInt::one(), BigInt::from(set.len()));
        Self::new(set.iter().map(|&v| (v, share.clone())))
    }

    pub fn weight(&self, v: usize) -> BigRational {
        self.weights.get(&v).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total(&self, verts: impl IntoIterator<Item = usize>) -> BigRational {
        verts.into_iter().filter_map(|v| self.weights.get(&v)).sum()
    }

    pub fn max_weight(&self) -> BigRational {
        self.weights.values().max().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Every weight is at most `beta`.
    pub fn is_proper(&self, beta: &BigRational) -> bool {
        self.weights.values().all(|w| w <= beta)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.weights.keys().copied()
    }
}

pub(crate) fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
