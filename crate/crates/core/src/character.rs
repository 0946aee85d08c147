//! Complex characters of finite permutation groups.
//!
//! Character tables come from the class algebra: the class sums span the centre
//! of the group algebra, and in the orthonormal basis `C_j / sqrt|C_j|` left
//! multiplication by `C_j` is a normal operator with adjoint `C_{j^-1}`. A generic
//! Hermitian combination of these operators has simple spectrum, and each
//! eigenvector is proportional to `conj(χ(g_j)) sqrt|C_j|` for one irreducible `χ`.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{GroupAction, PermGroup};
use crate::perm::Permutation;

/// Conjugacy classes of a group.
#[derive(Debug)]
pub struct ConjClasses {
    pub group: PermGroup,
    /// Each representative is the smallest element of its class; the identity class is first.
    pub reps: Vec<Permutation>,
    pub sizes: Vec<usize>,
    class_of: Vec<usize>,
    inverse: Vec<usize>,
}

impl ConjClasses {
    pub fn new(group: &PermGroup) -> Arc<Self> {
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(group.elements()[x].clone());
            class_of[x] = c;
            let mut size = 1;
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                let ey = &group.elements()[y];
                for s in group.generators() {
                    let z = group.index_of(&s.conjugate(ey)).expect("closed");
                    if class_of[z] == usize::MAX {
                        class_of[z] = c;
                        size += 1;
                        queue.push_back(z);
                    }
                }
            }
            sizes.push(size);
        }
        let inverse = reps
            .iter()
            .map(|r| class_of[group.index_of(&r.inverse()).expect("closed")])
            .collect();
        Arc::new(ConjClasses {
            group: group.clone(),
            reps,
            sizes,
            class_of,
            inverse,
        })
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of(&self, g: &Permutation) -> usize {
        self.class_of[self.group.index_of(g).expect("element of the group")]
    }

    pub fn class_of_index(&self, element_index: usize) -> usize {
        self.class_of[element_index]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse[c]
    }

    fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || (self.group == other.group && self.reps == other.reps)
    }
}

/// A function constant on conjugacy classes, stored one value per class.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    pub classes: Arc<ConjClasses>,
    pub values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn new(classes: &Arc<ConjClasses>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != classes.count() {
            return Err(Error::Precondition(format!(
                "{} values for {} classes",
                values.len(),
                classes.count()
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::Precondition("class function values must be finite".into()));
        }
        Ok(ClassFunction {
            classes: classes.clone(),
            values,
        })
    }

    pub fn trivial(classes: &Arc<ConjClasses>) -> Self {
        ClassFunction {
            classes: classes.clone(),
            values: vec![Complex64::new(1.0, 0.0); classes.count()],
        }
    }

    pub fn value_at(&self, g: &Permutation) -> Complex64 {
        self.values[self.classes.class_of(g)]
    }

    /// Value at the identity.
    pub fn degree(&self) -> Complex64 {
        self.values[0]
    }

    pub fn group(&self) -> &PermGroup {
        &self.classes.group
    }

    /// True if every value is within `tol` of the corresponding value of `other`.
    pub fn approx_eq(&self, other: &ClassFunction, tol: f64) -> bool {
        self.classes.same_as(&other.classes)
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if !self.classes.same_as(&other.classes) {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }
}

/// `(1/|G|) Σ_classes |C| χ(C) conj(ψ(C))`.
pub fn inner_product(chi: &ClassFunction, psi: &ClassFunction) -> Result<Complex64> {
    if !chi.classes.same_as(&psi.classes) {
        return Err(Error::GroupMismatch);
    }
    let order = chi.classes.group.order() as f64;
    let sum: Complex64 = chi
        .values
        .iter()
        .zip(&psi.values)
        .zip(&chi.classes.sizes)
        .map(|((a, b), &s)| a * b.conj() * s as f64)
        .sum();
    Ok(sum / order)
}

/// Rounds a value that must be a nonnegative integer, failing if it is more than
/// `tol` away from one.
pub fn round_multiplicity(value: Complex64, tol: f64) -> Result<u32> {
    let r = value.re.round();
    let residual = (value - Complex64::new(r, 0.0)).norm();
    if residual > tol || r < 0.0 {
        return Err(Error::NumericalDegeneracy {
            message: format!("multiplicity {value} is not a nonnegative integer"),
            residual,
        });
    }
    Ok(r as u32)
}

/// `⟨χ, ψ⟩` for characters, rounded to a nonnegative integer.
pub fn multiplicity(chi: &ClassFunction, psi: &ClassFunction, tol: f64) -> Result<u32> {
    round_multiplicity(inner_product(chi, psi)?, tol)
}

/// Restriction of a class function on `G` to the subgroup whose classes are `sub`.
pub fn restrict(chi: &ClassFunction, sub: &Arc<ConjClasses>) -> Result<ClassFunction> {
    sub.group.ensure_subgroup_of(chi.group(), "restriction")?;
    Ok(ClassFunction {
        classes: sub.clone(),
        values: sub.reps.iter().map(|h| chi.value_at(h)).collect(),
    })
}

/// Frobenius induction: `Ind χ(g) = (1/|H|) Σ_{x∈G, x g x^-1 ∈ H} χ(x g x^-1)`.
pub fn induce(chi: &ClassFunction, classes: &Arc<ConjClasses>) -> Result<ClassFunction> {
    let sub = chi.group();
    sub.ensure_subgroup_of(&classes.group, "induction")?;
    let h = sub.order() as f64;
    let values = classes
        .reps
        .iter()
        .map(|g| {
            let sum: Complex64 = classes
                .group
                .elements()
                .iter()
                .map(|x| x.conjugate(g))
                .filter(|y| sub.contains(y))
                .map(|y| chi.value_at(&y))
                .sum();
            sum / h
        })
        .collect();
    Ok(ClassFunction {
        classes: classes.clone(),
        values,
    })
}

/// Fixed-point count of an action, as a class function.
pub fn permutation_character(classes: &Arc<ConjClasses>, action: &GroupAction) -> Result<ClassFunction> {
    if action.group != classes.group {
        return Err(Error::GroupMismatch);
    }
    Ok(ClassFunction {
        classes: classes.clone(),
        values: classes
            .reps
            .iter()
            .map(|g| Complex64::new(action.fixed_points(g) as f64, 0.0))
            .collect(),
    })
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Arc<ConjClasses>,
    /// Sorted by degree, then by real parts in descending lexicographic order
    /// (so the trivial character is first), then by imaginary parts.
    pub irreducibles: Vec<ClassFunction>,
    pub degrees: Vec<u32>,
}

const MAX_ATTEMPTS: u64 = 8;

impl CharacterTable {
    pub fn compute(group: &PermGroup, cfg: &Config) -> Result<Self> {
        Self::from_classes(&ConjClasses::new(group), cfg)
    }

    pub fn from_classes(classes: &Arc<ConjClasses>, cfg: &Config) -> Result<Self> {
        let r = classes.count();
        if r > cfg.class_cap {
            return Err(Error::CapExceeded {
                what: "conjugacy class count",
                limit: cfg.class_cap,
                actual: r,
            });
        }
        let ops = class_operators(classes);
        let mut best_residual = f64::INFINITY;
        for attempt in 0..MAX_ATTEMPTS {
            match Self::attempt(classes, &ops, attempt, cfg) {
                Ok(table) => return Ok(table),
                Err(Error::NumericalDegeneracy { residual, .. }) => {
                    best_residual = best_residual.min(residual);
                }
                Err(e) => return Err(e),
            }
        }
        Err(Error::NumericalDegeneracy {
            message: format!("character table of a group of order {} did not separate", classes.group.order()),
            residual: best_residual,
        })
    }

    fn attempt(classes: &Arc<ConjClasses>, ops: &[DMatrix<Complex64>], seed: u64, cfg: &Config) -> Result<Self> {
        let r = classes.count();
        let order = classes.group.order() as f64;
        let mut rng = StdRng::seed_from_u64(0x5f3759df ^ seed);
        let mut a = DMatrix::<Complex64>::zeros(r, r);
        for (j, op) in ops.iter().enumerate() {
            let adj = &ops[classes.inverse_class(j)];
            let re: f64 = rng.gen_range(-1.0..1.0);
            let im: f64 = rng.gen_range(-1.0..1.0);
            let scale = 1.0 / classes.sizes[j] as f64;
            a += (op + adj) * Complex64::new(re * scale, 0.0);
            a += (op - adj) * Complex64::new(0.0, im * scale);
        }
        let a = (&a + a.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = a.symmetric_eigen();

        let mut evs: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        evs.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
        let spread = evs.last().copied().unwrap_or(0.0) - evs.first().copied().unwrap_or(0.0);
        let min_gap = evs.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        if r > 1 && min_gap < 1e-7 * (1.0 + spread) {
            return Err(Error::NumericalDegeneracy {
                message: "class-algebra eigenvalues are not separated".into(),
                residual: min_gap,
            });
        }

        let mut chars = Vec::with_capacity(r);
        let mut degrees = Vec::with_capacity(r);
        for col in 0..r {
            let v = eig.eigenvectors.column(col);
            let v0 = v[0];
            if v0.norm() < 1e-12 {
                return Err(Error::NumericalDegeneracy {
                    message: "eigenvector vanishes on the identity class".into(),
                    residual: v0.norm(),
                });
            }
            // χ(g_c)/χ(1) = conj(v_c / v_0) / sqrt|C_c|
            let ratios: Vec<Complex64> = (0..r)
                .map(|c| (v[c] / v0).conj() / (classes.sizes[c] as f64).sqrt())
                .collect();
            let weight: f64 = ratios
                .iter()
                .zip(&classes.sizes)
                .map(|(x, &s)| x.norm_sqr() * s as f64)
                .sum();
            let d = (order / weight).sqrt();
            let rd = d.round();
            if (d - rd).abs() > cfg.tol_mult || rd < 1.0 {
                return Err(Error::NumericalDegeneracy {
                    message: format!("degree {d} is not a positive integer"),
                    residual: (d - rd).abs(),
                });
            }
            degrees.push(rd as u32);
            chars.push(ClassFunction {
                classes: classes.clone(),
                values: ratios.iter().map(|x| x * rd).collect(),
            });
        }

        let mut rows: Vec<(u32, ClassFunction)> = degrees.into_iter().zip(chars).collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| cmp_values(&a.1.values, &b.1.values)));
        let table = CharacterTable {
            classes: classes.clone(),
            degrees: rows.iter().map(|r| r.0).collect(),
            irreducibles: rows.into_iter().map(|r| r.1).collect(),
        };
        let residual = table.orthonormality_residual();
        if residual > cfg.tol_char {
            return Err(Error::NumericalDegeneracy {
                message: "character table fails row orthonormality".into(),
                residual,
            });
        }
        let sum_sq: u64 = table.degrees.iter().map(|&d| (d as u64) * (d as u64)).sum();
        if sum_sq != classes.group.order() as u64 {
            return Err(Error::NumericalDegeneracy {
                message: format!("sum of squared degrees {sum_sq} differs from the group order"),
                residual: (sum_sq as f64 - order).abs(),
            });
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn group(&self) -> &PermGroup {
        &self.classes.group
    }

    /// Largest deviation of `⟨χ_a, χ_b⟩` from `δ_ab`.
    pub fn orthonormality_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (a, x) in self.irreducibles.iter().enumerate() {
            for (b, y) in self.irreducibles.iter().enumerate() {
                let ip = inner_product(x, y).expect("same classes");
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((ip - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }

    /// Largest deviation of the column relations
    /// `Σ_χ χ(g_a) conj(χ(g_b)) = δ_ab |G| / |C_a|`.
    pub fn column_orthogonality_residual(&self) -> f64 {
        let r = self.classes.count();
        let order = self.group().order() as f64;
        let mut worst: f64 = 0.0;
        for a in 0..r {
            for b in 0..r {
                let s: Complex64 = self
                    .irreducibles
                    .iter()
                    .map(|chi| chi.values[a] * chi.values[b].conj())
                    .sum();
                let target = if a == b { order / self.classes.sizes[a] as f64 } else { 0.0 };
                worst = worst.max((s - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }

    /// Multiplicities of each irreducible in `chi`.
    pub fn decompose(&self, chi: &ClassFunction, tol: f64) -> Result<Vec<u32>> {
        self.irreducibles.iter().map(|x| multiplicity(chi, x, tol)).collect()
    }

    pub fn to_json(&self) -> CharacterTableJson {
        CharacterTableJson {
            group_order: self.group().order(),
            classes: self
                .classes
                .reps
                .iter()
                .zip(&self.classes.sizes)
                .map(|(r, &s)| ClassJson {
                    representative: r.to_string(),
                    size: s,
                })
                .collect(),
            degrees: self.degrees.clone(),
            table: self
                .irreducibles
                .iter()
                .map(|chi| chi.values.iter().map(|v| [clean(v.re), clean(v.im)]).collect())
                .collect(),
        }
    }
}

/// Rounds away floating noise below 1e-12 so emitted tables are stable.
fn clean(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn cmp_values(a: &[Complex64], b: &[Complex64]) -> Ordering {
    let key = |x: f64| (x * 1e6).round() as i64;
    for (x, y) in a.iter().zip(b) {
        match key(y.re).cmp(&key(x.re)) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    for (x, y) in a.iter().zip(b) {
        match key(y.im).cmp(&key(x.im)) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// Left multiplication by each class sum, in the orthonormal basis `C_i / sqrt|C_i|`.
fn class_operators(classes: &ConjClasses) -> Vec<DMatrix<Complex64>> {
    let g = &classes.group;
    let r = classes.count();
    // counts[j][i][k] = #{x ∈ C_i : g_k x^-1 ∈ C_j}, the coefficient of C_k in C_j C_i
    let mut counts = vec![vec![vec![0usize; r]; r]; r];
    for (k, gk) in classes.reps.iter().enumerate() {
        for (xi, x) in g.elements().iter().enumerate() {
            let y = gk * &x.inverse();
            let j = classes.class_of(&y);
            let i = classes.class_of_index(xi);
            counts[j][i][k] += 1;
        }
    }
    (0..r)
        .map(|j| {
            DMatrix::from_fn(r, r, |k, i| {
                let scale = (classes.sizes[k] as f64 / classes.sizes[i] as f64).sqrt();
                Complex64::new(counts[j][i][k] as f64 * scale, 0.0)
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassJson {
    pub representative: String,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterTableJson {
    pub group_order: usize,
    pub classes: Vec<ClassJson>,
    pub degrees: Vec<u32>,
    pub table: Vec<Vec<[f64; 2]>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::CosetData;

    fn cfg() -> Config {
        Config::default()
    }

    fn s3() -> PermGroup {
        PermGroup::from_cycles(3, &["(0 1)", "(0 1 2)"])
    }

    /// Independent oracle: Burnside's count of irreducible degrees via the
    /// number of classes and Σ d² = |G|, enumerating all nondecreasing degree
    /// sequences with d_1 = 1 whose squares sum to |G| and that divide |G|.
    fn degree_candidates(order: usize, classes: usize) -> Vec<Vec<u32>> {
        fn rec(left: usize, slots: usize, min: u32, order: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if slots == 0 {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let mut d = min;
            while (d as usize) * (d as usize) <= left {
                if order.is_multiple_of(d as usize) {
                    cur.push(d);
                    rec(left - (d * d) as usize, slots - 1, d, order, cur, out);
                    cur.pop();
                }
                d += 1;
            }
        }
        let mut out = Vec::new();
        let mut cur = vec![1];
        rec(order - 1, classes - 1, 1, order, &mut cur, &mut out);
        out
    }

    #[test]
    fn burnside_oracle_pins_small_tables() {
        // S3: 3 classes -> {1,1,2} is the only candidate.
        assert_eq!(degree_candidates(6, 3), vec![vec![1, 1, 2]]);
        // A4: 4 classes and abelianization of order 3 forces three linear characters.
        assert_eq!(degree_candidates(12, 4), vec![vec![1, 1, 1, 3]]);
    }

    #[test]
    fn s3_table() {
        let t = CharacterTable::compute(&s3(), &cfg()).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
        let triv = &t.irreducibles[0];
        assert!(triv.values.iter().all(|v| (v - 1.0).norm() < 1e-9));
        assert!(t.orthonormality_residual() < 1e-9);
        assert!(t.column_orthogonality_residual() < 1e-9);
    }

    #[test]
    fn cyclic_four_has_fourth_roots() {
        let z4 = PermGroup::from_cycles(4, &["(0 1 2 3)"]);
        let t = CharacterTable::compute(&z4, &cfg()).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 1, 1]);
        for chi in &t.irreducibles {
            for v in &chi.values {
                assert!((v.powi(4) - 1.0).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn a4_and_s4_tables() {
        let a4 = PermGroup::from_cycles(4, &["(0 1 2)", "(0 1)(2 3)"]);
        assert_eq!(CharacterTable::compute(&a4, &cfg()).unwrap().degrees, vec![1, 1, 1, 3]);
        let s4 = PermGroup::from_cycles(4, &["(0 1)", "(0 1 2 3)"]);
        assert_eq!(CharacterTable::compute(&s4, &cfg()).unwrap().degrees, vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn class_cap_is_enforced() {
        let z4 = PermGroup::from_cycles(4, &["(0 1 2 3)"]);
        let tight = Config { class_cap: 3, ..cfg() };
        assert!(matches!(CharacterTable::compute(&z4, &tight), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn restriction_examples() {
        let g = s3();
        let t = CharacterTable::compute(&g, &cfg()).unwrap();
        let sgn = &t.irreducibles[1];
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        let hc = ConjClasses::new(&h);
        let res = restrict(sgn, &hc).unwrap();
        assert!((res.values[0] - 1.0).norm() < 1e-9);
        assert!((res.values[1] + 1.0).norm() < 1e-9);

        let triv_group = PermGroup::trivial(3);
        let tc = ConjClasses::new(&triv_group);
        let std = &t.irreducibles[2];
        assert!((restrict(std, &tc).unwrap().values[0] - 2.0).norm() < 1e-9);

        let a3 = PermGroup::from_cycles(3, &["(0 1 2)"]);
        let ta3 = CharacterTable::compute(&a3, &cfg()).unwrap();
        let res = restrict(std, &ta3.classes).unwrap();
        assert_eq!(ta3.decompose(&res, 1e-6).unwrap(), vec![0, 1, 1]);

        let z3 = PermGroup::from_cycles(3, &["(0 1 2)"]);
        assert!(restrict(sgn, &ConjClasses::new(&PermGroup::from_cycles(4, &["(0 3)"]))).is_err());
        let _ = z3;
    }

    #[test]
    fn induction_examples() {
        let g = s3();
        let gc = ConjClasses::new(&g);
        let t = CharacterTable::from_classes(&gc, &cfg()).unwrap();
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        let hc = ConjClasses::new(&h);
        let ind = induce(&ClassFunction::trivial(&hc), &gc).unwrap();
        assert_eq!(t.decompose(&ind, 1e-6).unwrap(), vec![1, 0, 1]);
        assert!((ind.degree() - 3.0).norm() < 1e-12);

        let self_ind = induce(&ClassFunction::trivial(&gc), &gc).unwrap();
        assert!(self_ind.approx_eq(&ClassFunction::trivial(&gc), 1e-12));

        let e = PermGroup::trivial(3);
        let reg = induce(&ClassFunction::trivial(&ConjClasses::new(&e)), &gc).unwrap();
        assert_eq!(t.decompose(&reg, 1e-6).unwrap(), vec![1, 1, 2]);
    }

    #[test]
    fn inner_product_examples_and_mismatch() {
        let g = s3();
        let t = CharacterTable::compute(&g, &cfg()).unwrap();
        let triv = &t.irreducibles[0];
        assert_eq!(multiplicity(triv, triv, 1e-6).unwrap(), 1);
        assert_eq!(multiplicity(&t.irreducibles[2], &t.irreducibles[2], 1e-6).unwrap(), 1);
        let other = ClassFunction::trivial(&ConjClasses::new(&PermGroup::from_cycles(3, &["(0 1 2)"])));
        assert!(matches!(inner_product(triv, &other), Err(Error::GroupMismatch)));
    }

    #[test]
    fn permutation_characters() {
        let g = s3();
        let gc = ConjClasses::new(&g);
        let natural = GroupAction::from_fn(&g, 3, |x| Ok(x.clone())).unwrap();
        let pc = permutation_character(&gc, &natural).unwrap();
        // classes: identity, 3-cycles or transpositions in rep order; compare by rep
        for (r, v) in gc.reps.iter().zip(&pc.values) {
            let expect = match r.support_size() {
                0 => 3.0,
                2 => 1.0,
                _ => 0.0,
            };
            assert_eq!(v.re, expect);
        }

        let whole = CosetData::new(&g, &g).unwrap();
        let one_point = GroupAction::on_right_cosets(&whole).unwrap();
        let pc = permutation_character(&gc, &one_point).unwrap();
        assert!(pc.approx_eq(&ClassFunction::trivial(&gc), 0.0));

        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        let cosets = CosetData::new(&g, &h).unwrap();
        let pc = permutation_character(&gc, &GroupAction::on_right_cosets(&cosets).unwrap()).unwrap();
        let ind = induce(&ClassFunction::trivial(&ConjClasses::new(&h)), &gc).unwrap();
        for (a, b) in pc.values.iter().zip(&ind.values) {
            assert_eq!(a.re, b.re.round());
            assert!((a - b).norm() < 1e-12);
        }
    }
}
