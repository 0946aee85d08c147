//! Exact rank of sparse rational systems.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type SparseRow = BTreeMap<usize, BigRational>;

/// Row echelon form built one row at a time. Every stored row has leading
/// coefficient 1 and a leading column no other stored row shares.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored rows; keeps it if something survives.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, value)) = row.iter().next() else {
                return false;
            };
            let value = value.clone();
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    for (&c, v) in pivot {
                        let entry = row.entry(c).or_insert_with(BigRational::zero);
                        *entry -= &value * v;
                        if entry.is_zero() {
                            row.remove(&c);
                        }
                    }
                }
                None => {
                    let inv = BigRational::one() / value;
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    pub fn insert_integer_row(&mut self, row: &BTreeMap<usize, i64>) -> bool {
        self.insert(
            row.iter()
                .filter(|(_, &v)| v != 0)
                .map(|(&c, &v)| (c, BigRational::from_integer(BigInt::from(v))))
                .collect(),
        )
    }
}

/// Rank of a set of integer rows.
pub fn integer_rank<'a>(rows: impl IntoIterator<Item = &'a BTreeMap<usize, i64>>) -> usize {
    let mut e = Echelon::new();
    for row in rows {
        e.insert_integer_row(row);
    }
    e.rank()
}
