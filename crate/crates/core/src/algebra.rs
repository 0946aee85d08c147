//! Finitely supported elements of a complex group algebra, and square matrices over them.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::perm::Permutation;

/// `Σ c_g u_g` with finitely many nonzero `c_g`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq)]
pub struct GroupAlgebraElement {
    coeffs: BTreeMap<Permutation, Complex64>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unitary `u_g`.
    pub fn basis(g: Permutation) -> Self {
        Self::term(g, Complex64::new(1.0, 0.0))
    }

    pub fn term(g: Permutation, c: Complex64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != Complex64::new(0.0, 0.0) {
            coeffs.insert(g, c);
        }
        GroupAlgebraElement { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Permutation, Complex64)>) -> Self {
        let mut x = Self::zero();
        for (g, c) in terms {
            x.add_term(g, c);
        }
        x
    }

    pub fn add_term(&mut self, g: Permutation, c: Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        match self.coeffs.entry(g) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == zero {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if c != zero {
                    v.insert(c);
                }
            }
        }
    }

    pub fn coeff(&self, g: &Permutation) -> Complex64 {
        self.coeffs.get(g).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Complex64)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Normalized trace: the coefficient of the identity.
    pub fn trace(&self) -> Complex64 {
        self.coeffs
            .iter()
            .find(|(g, _)| g.is_identity())
            .map(|(_, c)| *c)
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// `‖x‖₂² = Σ |c_g|²`.
    pub fn norm2_sq(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm_sqr()).sum()
    }

    /// `x* = Σ conj(c_g) u_{g^-1}`.
    pub fn star(&self) -> Self {
        GroupAlgebraElement {
            coeffs: self.coeffs.iter().map(|(g, c)| (g.inverse(), c.conj())).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(g, c)| (g.clone(), c * s)))
    }

    /// Keeps only the terms whose group element satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Permutation) -> bool) -> Self {
        GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(g, _)| keep(g))
                .map(|(g, c)| (g.clone(), *c))
                .collect(),
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .all(|g| (self.coeff(g) - other.coeff(g)).norm() <= tol)
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (g, c) in &rhs.coeffs {
            out.add_term(g.clone(), *c);
        }
        out
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (g, c) in &rhs.coeffs {
            out.add_term(g.clone(), -c);
        }
        out
    }
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &rhs.coeffs {
                out.add_term(a * b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (g, c)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})u{g}")?;
        }
        Ok(())
    }
}

/// A square matrix with group-algebra entries, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMatrix {
    dim: usize,
    entries: Vec<GroupAlgebraElement>,
}

impl AlgebraMatrix {
    pub fn zeros(dim: usize) -> Self {
        AlgebraMatrix {
            dim,
            entries: vec![GroupAlgebraElement::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize, degree: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, GroupAlgebraElement::basis(Permutation::identity(degree)));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupAlgebraElement {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: GroupAlgebraElement) {
        self.entries[i * self.dim + j] = x;
    }

    /// Conjugate transpose with `*` applied entrywise.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(j, i, self.get(i, j).star());
            }
        }
        m
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Positions of nonzero entries, row-major.
    pub fn nonzero_pattern(&self) -> Vec<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.get(i, j).is_zero())
            .collect()
    }
}

impl Mul for &AlgebraMatrix {
    type Output = AlgebraMatrix;

    fn mul(self, rhs: &AlgebraMatrix) -> AlgebraMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = AlgebraMatrix::zeros(n);
        for i in 0..n {
            for m in 0..n {
                let a = self.get(i, m);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(m, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let sum = out.get(i, j) + &prod;
                    out.set(i, j, sum);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> GroupAlgebraElement {
        GroupAlgebraElement::basis(Permutation::parse_cycles(s, 3).unwrap())
    }

    #[test]
    fn trace_and_norm() {
        let x = &(&u("()") + &u("(0 1)")) + &u("(0 2)").scale(Complex64::new(0.0, 2.0));
        assert_eq!(x.trace(), Complex64::new(1.0, 0.0));
        assert_eq!(x.norm2_sq(), 6.0);
        assert_eq!(u("()").trace(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn unitaries_multiply_like_the_group() {
        assert_eq!(&u("(0 1)") * &u("(0 2)"), u("(0 2 1)"));
        assert_eq!(&u("(0 1 2)") * &u("(0 1 2)").star(), u("()"));
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = &u("(0 1)") - &u("(0 1)");
        assert!(x.is_zero());
    }

    #[test]
    fn star_is_antimultiplicative() {
        let a = &u("(0 1)") + &u("(0 1 2)").scale(Complex64::new(2.0, 1.0));
        let b = &u("(1 2)") + &u("()").scale(Complex64::new(0.0, -3.0));
        assert_eq!((&a * &b).star(), &b.star() * &a.star());
    }
}
