//! Induced standard homomorphisms `Ind_K^G(π_{γ,ρ})`, where
//! `π_{γ,ρ}(k) = v_{γ(k)} ⊗ ρ(k)`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::algebra::{AlgebraMatrix, GroupAlgebraElement};
use crate::error::{Error, Result};
use crate::group::{extend_on_generators, GroupHomomorphism, PermGroup};
use crate::perm::Permutation;

/// Tolerance for unitarity and multiplicativity of numerical representations.
const REP_TOL: f64 = 1e-9;

/// A unitary matrix representation, stored per element.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub group: PermGroup,
    pub degree: usize,
    images: Vec<DMatrix<Complex64>>,
}

impl MatrixRep {
    pub fn trivial(group: &PermGroup) -> Self {
        MatrixRep {
            group: group.clone(),
            degree: 1,
            images: vec![DMatrix::identity(1, 1); group.order()],
        }
    }

    /// Extends unitary generator images, checking the relations on every Cayley edge.
    pub fn from_generator_images(group: &PermGroup, gen_images: &[DMatrix<Complex64>]) -> Result<Self> {
        if gen_images.len() != group.generators().len() {
            return Err(Error::Precondition("one matrix per generator is required".into()));
        }
        let degree = gen_images.first().map_or(1, |m| m.nrows());
        for m in gen_images {
            if m.nrows() != degree || m.ncols() != degree {
                return Err(Error::Precondition("generator matrices must be square of equal size".into()));
            }
            let defect = (m * m.adjoint() - DMatrix::identity(degree, degree)).camax();
            if defect > REP_TOL {
                return Err(Error::Precondition(format!("generator matrix is not unitary (defect {defect:e})")));
            }
        }
        let images = extend_on_generators(
            group,
            gen_images,
            DMatrix::identity(degree, degree),
            |a, b| a * b,
            |a, b| (a - b).camax() <= REP_TOL,
        )
        .ok_or_else(|| Error::Precondition("generator matrices do not define a representation".into()))?;
        Ok(MatrixRep {
            group: group.clone(),
            degree,
            images,
        })
    }

    /// A one-dimensional representation from its values on the generators.
    pub fn from_scalar_images(group: &PermGroup, values: &[Complex64]) -> Result<Self> {
        let m: Vec<_> = values.iter().map(|&v| DMatrix::from_element(1, 1, v)).collect();
        Self::from_generator_images(group, &m)
    }

    pub fn apply(&self, g: &Permutation) -> &DMatrix<Complex64> {
        &self.images[self.group.index_of(g).expect("element of the group")]
    }
}

/// `Ind_K^G(π_{γ,ρ})` with a section `χ` of the left cosets `gK`, `χ(K) = e`.
#[derive(Clone, Debug)]
pub struct InducedHomomorphism {
    pub group: PermGroup,
    pub gamma: GroupHomomorphism,
    pub rho: MatrixRep,
    /// `χ(g_c K)`, one per left coset; entry 0 is the identity.
    pub section: Vec<Permutation>,
    coset_of: Vec<usize>,
}

impl InducedHomomorphism {
    /// Uses the simplest element of each left coset as its section value.
    pub fn new(group: &PermGroup, gamma: &GroupHomomorphism, rho: &MatrixRep) -> Result<Self> {
        let k = &gamma.domain;
        k.ensure_subgroup_of(group, "induction")?;
        let mut seen = vec![false; group.order()];
        let mut section = Vec::new();
        for (x, g) in group.elements().iter().enumerate() {
            if seen[x] {
                continue;
            }
            let block: Vec<Permutation> = k.elements().iter().map(|h| g * h).collect();
            for b in &block {
                seen[group.index_of(b).expect("closed")] = true;
            }
            section.push(block.into_iter().min_by(|a, b| a.cmp_simplest(b)).expect("nonempty"));
        }
        section.sort_by(|a, b| a.cmp_simplest(b));
        Self::with_section(group, gamma, rho, section)
    }

    pub fn with_section(group: &PermGroup, gamma: &GroupHomomorphism, rho: &MatrixRep, section: Vec<Permutation>) -> Result<Self> {
        let k = &gamma.domain;
        k.ensure_subgroup_of(group, "induction")?;
        if rho.group != *k {
            return Err(Error::Precondition("rho must be a representation of K".into()));
        }
        if !gamma.is_injective() {
            return Err(Error::Precondition("gamma must be injective".into()));
        }
        if section.first().is_none_or(|e| !e.is_identity()) {
            return Err(Error::Precondition("the section must send K to the identity".into()));
        }
        let mut coset_of = vec![usize::MAX; group.order()];
        for (c, s) in section.iter().enumerate() {
            if !group.contains(s) {
                return Err(Error::Precondition(format!("section value {s} is not in G")));
            }
            for h in k.elements() {
                let x = group.index_of(&(s * h)).expect("closed");
                if coset_of[x] != usize::MAX {
                    return Err(Error::Precondition(format!("section values {} and {s} share a coset", section[coset_of[x]])));
                }
                coset_of[x] = c;
            }
        }
        if coset_of.contains(&usize::MAX) {
            return Err(Error::Precondition("the section misses a coset".into()));
        }
        Ok(InducedHomomorphism {
            group: group.clone(),
            gamma: gamma.clone(),
            rho: rho.clone(),
            section,
            coset_of,
        })
    }

    pub fn coset_count(&self) -> usize {
        self.section.len()
    }

    pub fn dim(&self) -> usize {
        self.coset_count() * self.rho.degree
    }

    fn coset(&self, g: &Permutation) -> usize {
        self.coset_of[self.group.index_of(g).expect("element of G")]
    }

    /// `c(g, hK) = χ(ghK)^-1 g χ(hK)`, an element of `K`.
    pub fn cocycle(&self, g: &Permutation, c: usize) -> Permutation {
        let target = self.coset(&(g * &self.section[c]));
        &(&self.section[target].inverse() * g) * &self.section[c]
    }

    /// The block matrix `Ind(g)`, rows and columns indexed by `coset · s + a`.
    pub fn evaluate(&self, g: &Permutation) -> Result<AlgebraMatrix> {
        if !self.group.contains(g) {
            return Err(Error::Precondition(format!("{g} is not in G")));
        }
        let s = self.rho.degree;
        let mut m = AlgebraMatrix::zeros(self.dim());
        for c in 0..self.coset_count() {
            let row = self.coset(&(g * &self.section[c]));
            let k = self.cocycle(g, c);
            let v = self.gamma.apply(&k);
            let r = self.rho.apply(&k);
            for a in 0..s {
                for b in 0..s {
                    m.set(row * s + a, c * s + b, GroupAlgebraElement::term(v.clone(), r[(a, b)]));
                }
            }
        }
        Ok(m)
    }

    /// Checks `Ind(e) = 1`, `Ind(g) Ind(h) = Ind(gh)` and `Ind(g) Ind(g)^* = 1` on generators.
    pub fn verify(&self) -> Result<InducedReport> {
        let degree = self.gamma.codomain.degree();
        let one = AlgebraMatrix::identity(self.dim(), degree);
        let identity_ok = self.evaluate(self.group.identity())?.approx_eq(&one, REP_TOL);
        let gens = self.group.generators();
        let mut multiplicative = true;
        let mut unitary = true;
        for g in gens {
            let mg = self.evaluate(g)?;
            unitary &= (&mg * &mg.adjoint()).approx_eq(&one, REP_TOL);
            for h in gens {
                let lhs = &mg * &self.evaluate(h)?;
                multiplicative &= lhs.approx_eq(&self.evaluate(&(g * h))?, REP_TOL);
            }
        }
        Ok(InducedReport {
            identity_ok,
            multiplicative,
            unitary,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct InducedReport {
    pub identity_ok: bool,
    pub multiplicative: bool,
    pub unitary: bool,
}

impl InducedReport {
    pub fn holds(&self) -> bool {
        self.identity_ok && self.multiplicative && self.unitary
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::from_cycles(3, &["(0 1)", "(0 1 2)"])
    }

    #[test]
    fn no_induction_gives_the_regular_unitary() {
        let g = s3();
        let ind = InducedHomomorphism::new(&g, &GroupHomomorphism::inclusion(&g, &g).unwrap(), &MatrixRep::trivial(&g)).unwrap();
        assert_eq!(ind.dim(), 1);
        let p = Permutation::parse_cycles("(0 1 2)", 3).unwrap();
        assert_eq!(ind.evaluate(&p).unwrap().get(0, 0), &GroupAlgebraElement::basis(p));
        assert!(ind.verify().unwrap().holds());
    }

    #[test]
    fn a3_in_s3_swaps_cosets() {
        let g = s3();
        let a3 = PermGroup::from_cycles(3, &["(0 1 2)"]);
        let gamma = GroupHomomorphism::inclusion(&a3, &g).unwrap();
        let ind = InducedHomomorphism::new(&g, &gamma, &MatrixRep::trivial(&a3)).unwrap();
        assert_eq!(ind.dim(), 2);
        let t = Permutation::parse_cycles("(0 1)", 3).unwrap();
        let m = ind.evaluate(&t).unwrap();
        assert_eq!(m.nonzero_pattern(), vec![(0, 1), (1, 0)]);
        for c in 0..2 {
            assert!(a3.contains(&ind.cocycle(&t, c)));
        }
        assert!(ind.verify().unwrap().holds());
    }

    #[test]
    fn sign_character_of_a_cyclic_subgroup() {
        let g = s3();
        let k = PermGroup::from_cycles(3, &["(0 1)"]);
        let gamma = GroupHomomorphism::inclusion(&k, &g).unwrap();
        let sign = MatrixRep::from_generator_images(&k, &[DMatrix::from_element(1, 1, Complex64::new(-1.0, 0.0))]).unwrap();
        let ind = InducedHomomorphism::new(&g, &gamma, &sign).unwrap();
        assert_eq!(ind.dim(), 3);
        assert!(ind.verify().unwrap().holds());
    }

    #[test]
    fn bad_sections_and_reps_are_rejected() {
        let g = s3();
        let a3 = PermGroup::from_cycles(3, &["(0 1 2)"]);
        let gamma = GroupHomomorphism::inclusion(&a3, &g).unwrap();
        let rho = MatrixRep::trivial(&a3);
        let p = |s: &str| Permutation::parse_cycles(s, 3).unwrap();
        assert!(InducedHomomorphism::with_section(&g, &gamma, &rho, vec![p("()"), p("(0 1 2)")]).is_err());
        assert!(InducedHomomorphism::with_section(&g, &gamma, &rho, vec![p("(0 1)"), p("()")]).is_err());
        let not_a_rep = MatrixRep::from_generator_images(&a3, &[DMatrix::from_element(1, 1, Complex64::new(-1.0, 0.0))]);
        assert!(not_a_rep.is_err());
    }
}
