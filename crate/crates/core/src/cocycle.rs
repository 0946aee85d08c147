//! Finite multiplication tables and 2-cocycles over them.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Unit-modulus tolerance for scalar cocycles.
const SCALAR_TOL: f64 = 1e-9;

/// Multiplication table of a finite group whose elements are labelled by
/// permutations (for a quotient, by coset representatives). Index 0 is the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct CayleyTable {
    pub elements: Vec<Permutation>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl CayleyTable {
    pub fn of_group(group: &PermGroup) -> Self {
        let n = group.order();
        let mul = (0..n).map(|a| (0..n).map(|b| group.mul_index(a, b)).collect()).collect();
        let inv = group
            .elements()
            .iter()
            .map(|g| group.index_of(&g.inverse()).expect("closed"))
            .collect();
        CayleyTable {
            elements: group.elements().to_vec(),
            mul,
            inv,
        }
    }

    /// Validates a table: closed, identity at index 0, associative, with inverses.
    pub fn from_parts(elements: Vec<Permutation>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        if n == 0 || mul.len() != n || mul.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Precondition("multiplication table is not square over its elements".into()));
        }
        if (0..n).any(|a| mul[0][a] != a || mul[a][0] != a) {
            return Err(Error::Precondition("index 0 is not the identity".into()));
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| mul[a][b] == 0) {
                Some(b) if mul[b][a] == 0 => inv[a] = b,
                _ => return Err(Error::Precondition(format!("element {a} has no two-sided inverse"))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::Precondition(format!("multiplication fails associativity at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(CayleyTable { elements, mul, inv })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `a x a^-1`.
    pub fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(a, x), self.inv(a))
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.iter().position(|e| e == p)
    }
}

/// Values of a 2-cocycle.
#[derive(Clone, Debug, PartialEq)]
pub enum CocycleValues {
    /// Unit-modulus scalars with the trivial action.
    Scalar(Vec<Vec<Complex64>>),
    /// Values in a finite group, with `action[g]` the automorphism `α_g` given as
    /// a map on element indices of `values`.
    Group {
        values: CayleyTable,
        table: Vec<Vec<usize>>,
        action: Vec<Vec<usize>>,
    },
}

/// A cocycle action `(α, ω)` of a finite group `Γ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle2 {
    pub acting: CayleyTable,
    pub values: CocycleValues,
}

/// Which defining relation failed, and where. Indices are into `Γ`
/// (and for the action relation, the last index is a value-group element).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CocycleViolation {
    /// 1: `α_1 = id`; 2: `α_g α_h = Ad(ω_{g,h}) α_{gh}`; 3: the cocycle identity.
    pub item: u8,
    pub witness: Vec<usize>,
}

impl fmt::Display for CocycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.item {
            1 => "alpha_1 is not the identity",
            2 => "alpha_g alpha_h differs from Ad(omega_gh) alpha_gh",
            _ => "cocycle identity fails",
        };
        write!(f, "{what} at {:?}", self.witness)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CocycleReport {
    pub holds: bool,
    /// The least failing witness, ordered by relation then indices.
    pub violation: Option<CocycleViolation>,
}

impl Cocycle2 {
    pub fn scalar(acting: CayleyTable, table: Vec<Vec<Complex64>>) -> Result<Self> {
        let c = Cocycle2 {
            acting,
            values: CocycleValues::Scalar(table),
        };
        c.check_shape()?;
        Ok(c)
    }

    pub fn group_valued(
        acting: CayleyTable,
        values: CayleyTable,
        table: Vec<Vec<usize>>,
        action: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let c = Cocycle2 {
            acting,
            values: CocycleValues::Group { values, table, action },
        };
        c.check_shape()?;
        Ok(c)
    }

    /// The trivial cocycle `ω ≡ 1` for an action.
    pub fn trivial(acting: CayleyTable, values: CayleyTable, action: Vec<Vec<usize>>) -> Result<Self> {
        let n = acting.order();
        Self::group_valued(acting, values, vec![vec![0; n]; n], action)
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.acting.order();
        let square = |rows: usize, cols: &dyn Fn(usize) -> usize| rows == n && (0..n).all(|r| cols(r) == n);
        match &self.values {
            CocycleValues::Scalar(t) => {
                if !square(t.len(), &|r| t[r].len()) {
                    return Err(Error::Precondition("cocycle table is not |Γ|×|Γ|".into()));
                }
                if let Some(v) = t.iter().flatten().find(|v| (v.norm() - 1.0).abs() > SCALAR_TOL || !v.is_finite()) {
                    return Err(Error::Precondition(format!("scalar cocycle value {v} is not unitary")));
                }
            }
            CocycleValues::Group { values, table, action } => {
                let m = values.order();
                if !square(table.len(), &|r| table[r].len()) || table.iter().flatten().any(|&v| v >= m) {
                    return Err(Error::Precondition("cocycle table is not |Γ|×|Γ| over the value group".into()));
                }
                if action.len() != n {
                    return Err(Error::Precondition("one automorphism per element of Γ is required".into()));
                }
                for (g, a) in action.iter().enumerate() {
                    let mut seen = vec![false; m];
                    if a.len() != m || a.iter().any(|&x| x >= m || std::mem::replace(&mut seen[x], true)) {
                        return Err(Error::Precondition(format!("alpha_{g} is not a bijection")));
                    }
                    for x in 0..m {
                        for y in 0..m {
                            if a[values.mul(x, y)] != values.mul(a[x], a[y]) {
                                return Err(Error::Precondition(format!("alpha_{g} is not multiplicative")));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn quotient_order(&self) -> usize {
        self.acting.order()
    }

    /// Checks the three defining relations of a cocycle action exhaustively.
    pub fn verify(&self) -> CocycleReport {
        let violation = self.first_violation();
        CocycleReport {
            holds: violation.is_none(),
            violation,
        }
    }

    fn first_violation(&self) -> Option<CocycleViolation> {
        let n = self.acting.order();
        let gm = |a, b| self.acting.mul(a, b);
        let fail = |item, witness: Vec<usize>| Some(CocycleViolation { item, witness });
        match &self.values {
            CocycleValues::Scalar(w) => {
                let close = |a: Complex64, b: Complex64| (a - b).norm() <= SCALAR_TOL;
                for g in 0..n {
                    for h in 0..n {
                        for k in 0..n {
                            if !close(w[h][k] * w[g][gm(h, k)], w[g][h] * w[gm(g, h)][k]) {
                                return fail(3, vec![g, h, k]);
                            }
                        }
                    }
                }
            }
            CocycleValues::Group { values, table: w, action: alpha } => {
                let m = values.order();
                if let Some(x) = (0..m).find(|&x| alpha[0][x] != x) {
                    return fail(1, vec![0, x]);
                }
                for g in 0..n {
                    for h in 0..n {
                        let gh = gm(g, h);
                        for x in 0..m {
                            if alpha[g][alpha[h][x]] != values.conj(w[g][h], alpha[gh][x]) {
                                return fail(2, vec![g, h, x]);
                            }
                        }
                    }
                }
                for g in 0..n {
                    for h in 0..n {
                        for k in 0..n {
                            let lhs = values.mul(alpha[g][w[h][k]], w[g][gm(h, k)]);
                            let rhs = values.mul(w[g][h], w[gm(g, h)][k]);
                            if lhs != rhs {
                                return fail(3, vec![g, h, k]);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_normalized(&self) -> bool {
        let n = self.acting.order();
        match &self.values {
            CocycleValues::Scalar(w) => {
                let one = Complex64::new(1.0, 0.0);
                (0..n).all(|g| (w[0][g] - one).norm() <= SCALAR_TOL && (w[g][0] - one).norm() <= SCALAR_TOL)
            }
            CocycleValues::Group { table: w, .. } => (0..n).all(|g| w[0][g] == 0 && w[g][0] == 0),
        }
    }

    /// Serializes a group-valued cocycle as `{"quotient_order", "values": [[i, j, "element"]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.acting.order();
        let values: Vec<serde_json::Value> = match &self.values {
            CocycleValues::Scalar(w) => (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| serde_json::json!([i, j, [w[i][j].re, w[i][j].im]]))
                .collect(),
            CocycleValues::Group { values, table, .. } => (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| serde_json::json!([i, j, values.elements[table[i][j]].to_string()]))
                .collect(),
        };
        serde_json::json!({ "quotient_order": n, "values": values })
    }
}

/// Replaces `ω_{g,h}` by `ω_{1,1}^-1 ω_{g,h}`. The input must be a cocycle; the
/// output is checked to be a normalized cocycle.
pub fn normalize_cocycle(c: &Cocycle2) -> Result<Cocycle2> {
    if let Some(v) = c.verify().violation {
        return Err(Error::Precondition(format!("input is not a cocycle: {v}")));
    }
    let values = match &c.values {
        CocycleValues::Scalar(w) => {
            let s = w[0][0].conj();
            CocycleValues::Scalar(w.iter().map(|r| r.iter().map(|v| s * v).collect()).collect())
        }
        CocycleValues::Group { values, table, action } => {
            let s = values.inv(table[0][0]);
            CocycleValues::Group {
                values: values.clone(),
                table: table.iter().map(|r| r.iter().map(|&v| values.mul(s, v)).collect()).collect(),
                action: action.clone(),
            }
        }
    };
    let out = Cocycle2 {
        acting: c.acting.clone(),
        values,
    };
    if let Some(v) = out.verify().violation {
        return Err(Error::InvariantViolation(format!("normalized table is not a cocycle: {v}")));
    }
    if !out.is_normalized() {
        return Err(Error::InvariantViolation("normalization left a nontrivial identity row or column".into()));
    }
    Ok(out)
}
