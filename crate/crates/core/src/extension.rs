//! Extensions of a centreless group by a subgroup of its outer automorphisms, and
//! the crossed-product decomposition over a normal subgroup.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::aut::{automorphism_group, conjugation, AutData};
use crate::cocycle::{CayleyTable, Cocycle2, CocycleReport, CocycleValues};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{GroupHomomorphism, PermGroup};
use crate::perm::Permutation;

/// The group `H` of automorphisms of `G` lying over `Γ₀ ≤ Out(G)`, with lifts and
/// the `G`-valued cocycle `φ_{k1} φ_{k2} = Ad(g_{k1,k2}) φ_{k1 k2}`.
#[derive(Clone, Debug)]
pub struct ExtensionResult {
    pub base: PermGroup,
    /// Out coset indices making up `Γ₀`, identity first.
    pub quotient: Vec<usize>,
    /// `H`, acting on the element indices of `G`.
    pub realized: PermGroup,
    /// `g ↦ Ad(g)`.
    pub embedding: GroupHomomorphism,
    /// `φ_k`, one per element of `Γ₀`.
    pub lifts: Vec<Permutation>,
    pub cocycle: Cocycle2,
    pub index: usize,
    pub outerness: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtensionJson {
    pub order: usize,
    pub base_order: usize,
    pub index: usize,
    pub out_cosets: Vec<usize>,
    pub lifts: Vec<String>,
    pub fingerprint: BTreeMap<usize, usize>,
    pub outerness: bool,
    pub cocycle_holds: bool,
    pub cocycle: serde_json::Value,
}

impl ExtensionResult {
    pub fn fingerprint(&self) -> BTreeMap<usize, usize> {
        self.realized.order_histogram()
    }

    pub fn to_json(&self) -> ExtensionJson {
        ExtensionJson {
            order: self.realized.order(),
            base_order: self.base.order(),
            index: self.index,
            out_cosets: self.quotient.clone(),
            lifts: self.lifts.iter().map(|p| p.to_string()).collect(),
            fingerprint: self.fingerprint(),
            outerness: self.outerness,
            cocycle_holds: self.cocycle.verify().holds,
            cocycle: self.cocycle.to_json(),
        }
    }

    /// `Γ₀` as a multiplication table on indices into `quotient`.
    pub fn quotient_table(&self) -> &CayleyTable {
        &self.cocycle.acting
    }
}

/// Closes the given Out coset indices under multiplication; identity first, then ascending.
fn out_subgroup(aut: &AutData, generators: &[usize]) -> Result<Vec<usize>> {
    if let Some(&bad) = generators.iter().find(|&&k| k >= aut.out_order()) {
        return Err(Error::Precondition(format!(
            "Out coset {bad} does not exist; |Out(G)| = {}",
            aut.out_order()
        )));
    }
    let mut set = BTreeSet::from([0]);
    let mut frontier = vec![0];
    while let Some(a) = frontier.pop() {
        for &g in generators {
            let b = aut.out_mul(a, g);
            if set.insert(b) {
                frontier.push(b);
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Builds the extension with lifts `φ_k` given explicitly, one automorphism per
/// element of `Γ₀` (in the order of `quotient`).
pub fn extension_with_lifts(aut: &AutData, quotient: Vec<usize>, lifts: Vec<Permutation>) -> Result<ExtensionResult> {
    let base = aut.base.clone();
    let n = base.order();
    if aut.inner.order() != n {
        return Err(Error::Precondition(format!(
            "G has a centre of order {}; the extension needs Z(G) = 1",
            n / aut.inner.order()
        )));
    }
    if lifts.len() != quotient.len() {
        return Err(Error::Precondition("one lift per element of the quotient is required".into()));
    }
    for (k, phi) in quotient.iter().zip(&lifts) {
        if !aut.aut.contains(phi) || aut.out_coset(phi) != *k {
            return Err(Error::Precondition(format!("{phi} is not an automorphism in Out coset {k}")));
        }
    }
    let position: HashMap<usize, usize> = quotient.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let q = quotient.len();
    let mut mul = vec![vec![0; q]; q];
    for a in 0..q {
        for b in 0..q {
            let c = aut.out_mul(quotient[a], quotient[b]);
            mul[a][b] = *position
                .get(&c)
                .ok_or_else(|| Error::Precondition("the Out cosets do not form a subgroup".into()))?;
        }
    }
    let acting = CayleyTable::from_parts(quotient.iter().map(|&k| aut.out_reps[k].clone()).collect(), mul)?;

    // H: the preimage of Γ₀.
    let elems: Vec<Permutation> = aut
        .aut
        .elements()
        .iter()
        .filter(|a| position.contains_key(&aut.out_coset(a)))
        .cloned()
        .collect();
    let realized = aut.aut.subgroup_from_elements(elems)?;
    if realized.order() != n * q {
        return Err(Error::InvariantViolation(format!(
            "|H| = {} but |G|·|Γ₀| = {}",
            realized.order(),
            n * q
        )));
    }
    let embed_images: Vec<Permutation> = base.generators().iter().map(|g| conjugation(&base, g)).collect();
    let embedding = GroupHomomorphism::from_generator_images(&base, &realized, &embed_images)?;
    if !embedding.is_injective() {
        return Err(Error::InvariantViolation("g ↦ Ad(g) is not injective".into()));
    }

    // Ad(g) → g
    let inner_to_element: HashMap<Permutation, usize> =
        (0..n).map(|x| (embedding.apply(&base.elements()[x]).clone(), x)).collect();
    let mut table = vec![vec![0; q]; q];
    for a in 0..q {
        for b in 0..q {
            let c = acting.mul(a, b);
            let ad = &(&lifts[a] * &lifts[b]) * &lifts[c].inverse();
            table[a][b] = *inner_to_element
                .get(&ad)
                .ok_or_else(|| Error::InvariantViolation("φ_a φ_b φ_ab^-1 is not inner".into()))?;
        }
    }
    let action: Vec<Vec<usize>> = lifts.iter().map(|p| p.images().to_vec()).collect();
    let cocycle = Cocycle2::group_valued(acting, CayleyTable::of_group(&base), table, action)?;
    let outerness = outerness_holds(&realized, &embedding)?;
    Ok(ExtensionResult {
        base,
        quotient,
        realized,
        embedding,
        lifts,
        cocycle,
        index: q,
        outerness,
    })
}

/// For every `h ∈ H` outside the image of `G`, conjugation by `h` restricted to
/// the image of `G` is not conjugation by an element of that image.
fn outerness_holds(realized: &PermGroup, embedding: &GroupHomomorphism) -> Result<bool> {
    let image = embedding.image()?;
    // Conjugation on the image is determined by its values on generators.
    let gens: Vec<&Permutation> = embedding.domain.generators().iter().map(|g| embedding.apply(g)).collect();
    for h in realized.elements() {
        if image.contains(h) {
            continue;
        }
        let restricted: Vec<Permutation> = gens.iter().map(|x| h.conjugate(x)).collect();
        let inner = image
            .elements()
            .iter()
            .any(|i| gens.iter().zip(&restricted).all(|(x, hx)| &i.conjugate(x) == hx));
        if inner {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `extension_with_lifts` with the least automorphism of each coset as its lift.
pub fn extension_from_out(group: &PermGroup, out_generators: &[usize], cfg: &Config) -> Result<ExtensionResult> {
    let aut = automorphism_group(group, cfg)?;
    extension_from_aut(&aut, out_generators)
}

pub fn extension_from_aut(aut: &AutData, out_generators: &[usize]) -> Result<ExtensionResult> {
    let quotient = out_subgroup(aut, out_generators)?;
    let lifts = quotient.iter().map(|&k| aut.out_reps[k].clone()).collect();
    extension_with_lifts(aut, quotient, lifts)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubfactorReport {
    pub index: usize,
    pub outerness: bool,
    pub crossed_relations: bool,
}

/// Checks `v_a v_b = ω_{a,b} v_{ab}` and `v_a u_x v_a^* = u_{α_a(x)}` for generators
/// `x` of `G`, with `u_x ↦ Ad(x)` and `v_a ↦ φ_a` inside `H`.
pub fn crossed_relations_hold(ext: &ExtensionResult) -> bool {
    let q = ext.lifts.len();
    let base = &ext.base;
    let u = |x: usize| ext.embedding.apply(&base.elements()[x]).clone();
    let CocycleValues::Group { table, action, .. } = &ext.cocycle.values else {
        return false;
    };
    let acting = &ext.cocycle.acting;
    for a in 0..q {
        for b in 0..q {
            let lhs = &ext.lifts[a] * &ext.lifts[b];
            let rhs = &u(table[a][b]) * &ext.lifts[acting.mul(a, b)];
            if lhs != rhs {
                return false;
            }
        }
        for g in base.generators() {
            let x = base.index_of(g).expect("generator");
            let lhs = ext.lifts[a].conjugate(&u(x));
            if lhs != u(action[a][x]) {
                return false;
            }
        }
    }
    true
}

pub fn subfactor_report_from_out(group: &PermGroup, out_generators: &[usize], cfg: &Config) -> Result<SubfactorReport> {
    let ext = extension_from_out(group, out_generators, cfg)?;
    Ok(SubfactorReport {
        index: ext.index,
        outerness: ext.outerness,
        crossed_relations: ext.cocycle.verify().holds && crossed_relations_hold(&ext),
    })
}

/// How coset representatives of `K` are picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepRule {
    /// Fewest moved points, then cycle notation.
    Simplest,
    /// Largest image sequence, except the identity for `K` itself.
    Maximal,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossedProductReport {
    pub holds: bool,
    pub pairs_checked: usize,
    pub bijective: bool,
    pub restriction_ok: bool,
    pub cocycle: CocycleReport,
    /// First failing pair of symbols `(a, i)`, `(b, j)` in the order checked.
    pub witness: Option<String>,
}

/// Models `L(G) = L(K) ⋊_{α,ω} G/K` on symbols `(a, Kg̃_j)` and checks that
/// `(a, j) ↦ u_{a g̃_j}` is multiplicative on every pair of basis symbols and that
/// symbols over `H_mid/K` fill out exactly `H_mid`.
pub fn crossed_product_check(group: &PermGroup, normal: &PermGroup, middle: &PermGroup, rule: RepRule) -> Result<CrossedProductReport> {
    middle.ensure_subgroup_of(group, "crossed product (H in G)")?;
    normal.ensure_subgroup_of(middle, "crossed product (K in H)")?;
    if !normal.is_normal_in(group) {
        return Err(Error::Precondition("K is not normal in G".into()));
    }
    // Cosets of K in G, those inside H_mid first.
    let mut seen: HashMap<Permutation, usize> = HashMap::new();
    let mut blocks: Vec<Vec<Permutation>> = Vec::new();
    for inside in [true, false] {
        for g in group.elements() {
            if middle.contains(g) != inside || seen.contains_key(g) {
                continue;
            }
            let block: Vec<Permutation> = normal.elements().iter().map(|k| k * g).collect();
            for x in &block {
                seen.insert(x.clone(), blocks.len());
            }
            blocks.push(block);
        }
    }
    let inside_count = middle.order() / normal.order();
    let reps: Vec<Permutation> = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| match rule {
            _ if i == 0 => Permutation::identity(group.degree()),
            RepRule::Simplest => b.iter().min_by(|x, y| x.cmp_simplest(y)).expect("nonempty").clone(),
            RepRule::Maximal => b.iter().max().expect("nonempty").clone(),
        })
        .collect();
    let q = reps.len();
    let coset = |g: &Permutation| seen[g];
    let mut mul = vec![vec![0; q]; q];
    let mut omega = vec![vec![Permutation::identity(group.degree()); q]; q];
    for i in 0..q {
        for j in 0..q {
            let p = &reps[i] * &reps[j];
            let k = coset(&p);
            mul[i][j] = k;
            omega[i][j] = &p * &reps[k].inverse();
        }
    }
    let acting = CayleyTable::from_parts(reps.clone(), mul.clone())?;
    let values = CayleyTable::of_group(normal);
    let idx = |p: &Permutation| normal.index_of(p).expect("element of K");
    let table = omega.iter().map(|r| r.iter().map(idx).collect()).collect();
    let action = reps
        .iter()
        .map(|r| normal.elements().iter().map(|k| idx(&r.conjugate(k))).collect())
        .collect();
    let cocycle = Cocycle2::group_valued(acting, values, table, action)?.verify();

    let symbol = |a: &Permutation, j: usize| a * &reps[j];
    let images: BTreeSet<Permutation> = (0..q)
        .flat_map(|j| normal.elements().iter().map(move |a| (a, j)))
        .map(|(a, j)| symbol(a, j))
        .collect();
    let bijective = images.len() == group.order();
    let restricted: BTreeSet<Permutation> = (0..inside_count)
        .flat_map(|j| normal.elements().iter().map(move |a| (a, j)))
        .map(|(a, j)| symbol(a, j))
        .collect();
    let restriction_ok = restricted.len() == middle.order() && restricted.iter().all(|h| middle.contains(h));

    let mut witness = None;
    let mut pairs = 0;
    'outer: for i in 0..q {
        for a in normal.elements() {
            for j in 0..q {
                for b in normal.elements() {
                    pairs += 1;
                    // (a, i)(b, j) = (a · g̃_i b g̃_i^-1 · ω_ij, ij)
                    let c = &(a * &reps[i].conjugate(b)) * &omega[i][j];
                    if !normal.contains(&c) || symbol(&c, mul[i][j]) != &symbol(a, i) * &symbol(b, j) {
                        witness = Some(format!("({a}, {i}) * ({b}, {j})"));
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(CrossedProductReport {
        holds: witness.is_none() && bijective && restriction_ok && cocycle.holds,
        pairs_checked: pairs,
        bijective,
        restriction_ok,
        cocycle,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::normalize_cocycle;

    fn a4() -> PermGroup {
        PermGroup::from_cycles(4, &["(0 1 2)", "(0 1)(2 3)"])
    }

    #[test]
    fn a4_extends_to_an_s4_fingerprint() {
        let ext = extension_from_out(&a4(), &[1], &Config::default()).unwrap();
        assert_eq!(ext.realized.order(), 24);
        assert_eq!(ext.index, 2);
        let hist: Vec<_> = ext.fingerprint().into_iter().collect();
        assert_eq!(hist, vec![(1, 1), (2, 9), (3, 8), (4, 6)]);
        assert!(ext.outerness);
        assert!(ext.cocycle.verify().holds);
        assert!(ext.cocycle.is_normalized());
        assert!(crossed_relations_hold(&ext));
        for (k, phi) in ext.lifts.iter().enumerate() {
            for g in ext.base.elements() {
                let x = ext.base.index_of(g).unwrap();
                let lhs = phi.conjugate(ext.embedding.apply(g));
                assert_eq!(&lhs, ext.embedding.apply(&ext.base.elements()[phi.apply(x)]), "lift {k}");
            }
        }
    }

    #[test]
    fn trivial_quotient() {
        let s3 = PermGroup::from_cycles(3, &["(0 1)", "(0 1 2)"]);
        let r = subfactor_report_from_out(&s3, &[], &Config::default()).unwrap();
        assert_eq!(
            r,
            SubfactorReport {
                index: 1,
                outerness: true,
                crossed_relations: true
            }
        );
    }

    #[test]
    fn swap_on_a_direct_square_is_outer() {
        let g = PermGroup::from_cycles(8, &["(0 1 2 3)", "(0 1)", "(4 5 6 7)", "(4 5)"]);
        let cfg = Config {
            aut_cap: 576,
            ..Config::default()
        };
        let aut = automorphism_group(&g, &cfg).unwrap();
        assert_eq!((aut.aut.order(), aut.out_order()), (1152, 2));
        let ext = extension_from_aut(&aut, &[1]).unwrap();
        assert_eq!(ext.index, 2);
        assert!(ext.outerness);
        assert!(ext.cocycle.verify().holds && crossed_relations_hold(&ext));
    }

    #[test]
    fn centre_is_rejected() {
        let z3 = PermGroup::from_cycles(3, &["(0 1 2)"]);
        let err = extension_from_out(&z3, &[1], &Config::default()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn lifts_with_nontrivial_identity_lift_are_not_normalized() {
        let aut = automorphism_group(&a4(), &Config::default()).unwrap();
        let ad = aut.inner_of(&Permutation::parse_cycles("(0 1 2)", 4).unwrap());
        let lifts = vec![ad.clone(), &ad * &aut.out_reps[1]];
        let skewed = extension_with_lifts(&aut, vec![0, 1], lifts).unwrap();
        let report = skewed.cocycle.verify();
        assert_eq!(report.violation.unwrap().item, 1);
        // Corrected lifts give a normalized cocycle that normalization leaves alone.
        let fixed = extension_from_aut(&aut, &[1]).unwrap();
        assert!(fixed.cocycle.is_normalized());
        assert_eq!(normalize_cocycle(&fixed.cocycle).unwrap(), fixed.cocycle);
    }

    #[test]
    fn crossed_product_s3_over_a3() {
        let s3 = PermGroup::from_cycles(3, &["(0 1)", "(0 1 2)"]);
        let a3 = PermGroup::from_cycles(3, &["(0 1 2)"]);
        for rule in [RepRule::Simplest, RepRule::Maximal] {
            let r = crossed_product_check(&s3, &a3, &a3, rule).unwrap();
            assert!(r.holds, "{rule:?}: {r:?}");
            assert_eq!(r.pairs_checked, 36);
        }
        let r = crossed_product_check(&s3, &s3, &s3, RepRule::Simplest).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn crossed_product_needs_normality() {
        let s3 = PermGroup::from_cycles(3, &["(0 1)", "(0 1 2)"]);
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        assert_eq!(crossed_product_check(&s3, &h, &h, RepRule::Simplest).unwrap_err().exit_code(), 3);
    }
}
