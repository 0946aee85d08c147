//! Conditional expectations, the Pimsner–Popa expansion and the amplified maps `Θ^(k)`
//! for a group inclusion `L(H) ⊂ L(G)`.
//!
//! The coset representatives `u_{g_i}` form a Pimsner–Popa basis. Entries of `Θ^(k)`
//! are computed twice: by the literal nested conditional expectations, and by the
//! closed coset formula. The scalars `t^{k/2}` and the Jones projections cancel in
//! the closed form, so entries are kept unscaled.

use crate::algebra::{AlgebraMatrix, GroupAlgebraElement};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{CosetData, GroupAction, PermGroup};
use crate::perm::Permutation;

/// `E_H(x)`: keeps the coefficients of `x` supported in `H`.
pub fn conditional_expectation(
    x: &GroupAlgebraElement,
    group: &PermGroup,
    subgroup: &PermGroup,
) -> Result<GroupAlgebraElement> {
    subgroup.ensure_subgroup_of(group, "conditional expectation")?;
    if let Some(g) = x.support().find(|g| !group.contains(g)) {
        return Err(Error::Precondition(format!("{g} is not an element of the ambient group")));
    }
    Ok(x.filter(|g| subgroup.contains(g)))
}

/// The coefficients `E_H(x u_{g_i}^*)`, one per coset representative.
pub fn pimsner_popa_expand(x: &GroupAlgebraElement, cosets: &CosetData) -> Result<Vec<GroupAlgebraElement>> {
    cosets
        .reps
        .iter()
        .map(|g| {
            let shifted = x * &GroupAlgebraElement::basis(g.inverse());
            conditional_expectation(&shifted, &cosets.group, &cosets.subgroup)
        })
        .collect()
}

/// `Σ_i c_i u_{g_i}`.
pub fn pimsner_popa_reassemble(coeffs: &[GroupAlgebraElement], cosets: &CosetData) -> GroupAlgebraElement {
    coeffs
        .iter()
        .zip(&cosets.reps)
        .fold(GroupAlgebraElement::zero(), |acc, (c, g)| {
            &acc + &(c * &GroupAlgebraElement::basis(g.clone()))
        })
}

/// Index data for `Θ^(k)`: tuples in `I^k`, ordered lexicographically with the
/// first coordinate most significant.
#[derive(Clone, Debug)]
pub struct ThetaMap {
    pub cosets: CosetData,
    pub k: usize,
    products: Vec<Permutation>,
}

impl ThetaMap {
    pub fn new(cosets: &CosetData, k: usize, cfg: &Config) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("tuple length must be at least 1".into()));
        }
        if k > cfg.theta_k_cap {
            return Err(Error::CapExceeded {
                what: "tuple length k",
                limit: cfg.theta_k_cap,
                actual: k,
            });
        }
        let t = cosets.index();
        let count = t.checked_pow(k as u32).ok_or(Error::CapExceeded {
            what: "tuple count",
            limit: usize::MAX,
            actual: usize::MAX,
        })?;
        let mut map = ThetaMap {
            cosets: cosets.clone(),
            k,
            products: Vec::with_capacity(count),
        };
        for idx in 0..count {
            let tuple = map.tuple(idx);
            map.products.push(map.product_of(&tuple, 0));
        }
        Ok(map)
    }

    pub fn index(&self) -> usize {
        self.cosets.index()
    }

    pub fn tuple_count(&self) -> usize {
        self.products.len()
    }

    pub fn tuple(&self, idx: usize) -> Vec<usize> {
        let t = self.index();
        let mut out = vec![0; self.k];
        let mut rest = idx;
        for slot in out.iter_mut().rev() {
            *slot = rest % t;
            rest /= t;
        }
        out
    }

    pub fn tuple_index(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.k || tuple.iter().any(|&i| i >= self.index()) {
            return Err(Error::Precondition(format!(
                "tuple {tuple:?} is not in I^{} with |I| = {}",
                self.k,
                self.index()
            )));
        }
        Ok(tuple.iter().fold(0, |acc, &i| acc * self.index() + i))
    }

    /// `g_{i_l} g_{i_{l+1}} ⋯ g_{i_k}` (0-based `l`).
    fn product_of(&self, tuple: &[usize], from: usize) -> Permutation {
        tuple[from..]
            .iter()
            .fold(Permutation::identity(self.cosets.group.degree()), |acc, &i| {
                &acc * &self.cosets.reps[i]
            })
    }

    /// `g_i = g_{i_1} ⋯ g_{i_k}`.
    pub fn product(&self, idx: usize) -> &Permutation {
        &self.products[idx]
    }

    fn check_element(&self, g: &Permutation) -> Result<()> {
        if self.cosets.group.contains(g) {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{g} is not an element of G")))
        }
    }

    /// `E_H(u_{g_{i_1}} E_H(⋯ E_H(u_{g_{i_k}} u_g u_{g_{j_k}}^*) ⋯) u_{g_{j_1}}^*)`.
    pub fn nested_entry(&self, g: &Permutation, i: usize, j: usize) -> GroupAlgebraElement {
        let ti = self.tuple(i);
        let tj = self.tuple(j);
        let h = &self.cosets.subgroup;
        let mut y = GroupAlgebraElement::basis(g.clone());
        for l in (0..self.k).rev() {
            let left = GroupAlgebraElement::basis(self.cosets.reps[ti[l]].clone());
            let right = GroupAlgebraElement::basis(self.cosets.reps[tj[l]].clone()).star();
            y = (&(&left * &y) * &right).filter(|x| h.contains(x));
        }
        y
    }

    /// `u_{g_i g g_j^-1}` if `g_{i_l..k} g ∈ H g_{j_l..k}` for every `l`, else 0.
    pub fn closed_entry(&self, g: &Permutation, i: usize, j: usize) -> GroupAlgebraElement {
        let ti = self.tuple(i);
        let tj = self.tuple(j);
        let h = &self.cosets.subgroup;
        for l in 0..self.k {
            let lhs = &self.product_of(&ti, l) * g;
            let w = &lhs * &self.product_of(&tj, l).inverse();
            if !h.contains(&w) {
                return GroupAlgebraElement::zero();
            }
        }
        GroupAlgebraElement::basis(&(self.product(i) * g) * &self.product(j).inverse())
    }

    /// `Θ^(k)_{ij}(u_g)`, computed both ways; disagreement is an invariant violation.
    pub fn entry(&self, g: &Permutation, i: usize, j: usize) -> Result<GroupAlgebraElement> {
        self.check_element(g)?;
        let nested = self.nested_entry(g, i, j);
        let closed = self.closed_entry(g, i, j);
        if nested != closed {
            return Err(Error::InvariantViolation(format!(
                "Θ entry ({i},{j}) at {g}: nested form {nested:?} differs from closed form {closed:?}"
            )));
        }
        Ok(closed)
    }

    /// The tuple `i` with `g_{j_l..k} g^-1 ∈ H g_{i_l..k}` for all `l`.
    pub fn act(&self, g: &Permutation, j: usize) -> Result<usize> {
        self.check_element(g)?;
        let tj = self.tuple(j);
        let ginv = g.inverse();
        let degree = self.cosets.group.degree();
        let mut ti = vec![0; self.k];
        // suffix product of the tuple being built, g_{i_{l+1}} ⋯ g_{i_k}
        let mut suffix = Permutation::identity(degree);
        for l in (0..self.k).rev() {
            let lhs = &self.product_of(&tj, l) * &ginv;
            ti[l] = self.cosets.coset_index(&(&lhs * &suffix.inverse()));
            suffix = &self.cosets.reps[ti[l]] * &suffix;
        }
        // Every level condition must hold for the tuple just built.
        let h = &self.cosets.subgroup;
        for l in 0..self.k {
            let lhs = &self.product_of(&tj, l) * &ginv;
            if !h.contains(&(&lhs * &self.product_of(&ti, l).inverse())) {
                return Err(Error::InvariantViolation(format!(
                    "tuple action of {g} on {tj:?} is not well defined at level {l}"
                )));
            }
        }
        self.tuple_index(&ti)
    }

    /// The action of `G` on `I^k` as a verified group action.
    pub fn tuple_action(&self) -> Result<GroupAction> {
        GroupAction::from_fn(&self.cosets.group, self.tuple_count(), |g| {
            let images = (0..self.tuple_count())
                .map(|j| self.act(g, j))
                .collect::<Result<Vec<_>>>()?;
            Permutation::from_images(images)
                .map_err(|_| Error::InvariantViolation(format!("tuple action of {g} is not a bijection")))
        })
    }

    /// The full matrix `Θ^(k)(u_g)`.
    pub fn matrix(&self, g: &Permutation) -> Result<AlgebraMatrix> {
        let n = self.tuple_count();
        let mut m = AlgebraMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.entry(g, i, j)?);
            }
        }
        Ok(m)
    }
}

/// `Θ^(k)_{ij}(u_g)` for 0-based tuples `i`, `j` of equal length `k`.
pub fn theta_entry(
    g: &Permutation,
    i: &[usize],
    j: &[usize],
    cosets: &CosetData,
    cfg: &Config,
) -> Result<GroupAlgebraElement> {
    if i.len() != j.len() {
        return Err(Error::Precondition("tuples must have equal length".into()));
    }
    let map = ThetaMap::new(cosets, i.len(), cfg)?;
    map.entry(g, map.tuple_index(i)?, map.tuple_index(j)?)
}

/// `g · j` for a 0-based tuple `j`.
pub fn action_on_tuples(g: &Permutation, j: &[usize], cosets: &CosetData, cfg: &Config) -> Result<Vec<usize>> {
    let map = ThetaMap::new(cosets, j.len(), cfg)?;
    Ok(map.tuple(map.act(g, map.tuple_index(j)?)?))
}
