//! Permutational wreath products and the wreath-like conditions.

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{GroupAction, GroupHomomorphism, PermGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct WreathProduct {
    pub group: PermGroup,
    /// `A_i`, the copy of `A` on block `i`.
    pub base_copies: Vec<PermGroup>,
    /// The quotient map onto `B`.
    pub kappa: GroupHomomorphism,
}

/// `A ≀_I B` acting on `|I|` blocks of `deg(A)` points. When `B` does not act
/// faithfully on `I`, `B` is also recorded on `deg(B)` extra points so that the
/// quotient map stays well defined.
pub fn wreath_product(a: &PermGroup, action: &GroupAction, cfg: &Config) -> Result<WreathProduct> {
    let b = &action.group;
    let blocks = action.set_size;
    let d = a.degree();
    let tail = if action.is_faithful() { 0 } else { b.degree() };
    let degree = blocks * d + tail;

    let place = |i: usize, p: &Permutation| {
        let mut images: Vec<usize> = (0..degree).collect();
        for x in 0..d {
            images[i * d + x] = i * d + p.apply(x);
        }
        Permutation::from_images(images).expect("block permutation")
    };
    let lift = |s: &Permutation| {
        let act = action.image(s);
        let mut images = Vec::with_capacity(degree);
        for i in 0..blocks {
            for x in 0..d {
                images.push(act.apply(i) * d + x);
            }
        }
        images.extend((0..tail).map(|x| blocks * d + s.apply(x)));
        Permutation::from_images(images).expect("block permutation")
    };

    let mut gens = Vec::new();
    let mut kappa_images = Vec::new();
    for i in 0..blocks {
        for g in a.generators() {
            gens.push(place(i, g));
            kappa_images.push(b.identity().clone());
        }
    }
    for s in b.generators() {
        gens.push(lift(s));
        kappa_images.push(s.clone());
    }
    let group = PermGroup::generate(degree, gens.clone(), cfg)?;
    let base_copies = (0..blocks)
        .map(|i| PermGroup::generate(degree, a.generators().iter().map(|g| place(i, g)).collect(), cfg))
        .collect::<Result<Vec<_>>>()?;
    // `generate` may reorder nothing, but the homomorphism is defined on `group`'s own generators.
    let kappa = homomorphism_on(&group, b, &gens, &kappa_images)?;
    Ok(WreathProduct {
        group,
        base_copies,
        kappa,
    })
}

fn homomorphism_on(
    group: &PermGroup,
    target: &PermGroup,
    gens: &[Permutation],
    images: &[Permutation],
) -> Result<GroupHomomorphism> {
    let by_gen: Vec<Permutation> = group
        .generators()
        .iter()
        .map(|g| {
            gens.iter()
                .position(|x| x == g)
                .map(|i| images[i].clone())
                .ok_or_else(|| Error::InvariantViolation(format!("generator {g} was not supplied")))
        })
        .collect::<Result<_>>()?;
    GroupHomomorphism::from_generator_images(group, target, &by_gen)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WreathViolation {
    pub condition: String,
    pub element: String,
    pub copy: usize,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WreathReport {
    pub holds: bool,
    pub violation: Option<WreathViolation>,
}

/// Checks that the copies commute pairwise, generate their direct sum, that the
/// sum is the kernel of `κ`, and that `g A_i g^-1 = A_{κ(g)·i}` for every `g`.
pub fn verify_wreath_like(
    group: &PermGroup,
    copies: &[PermGroup],
    kappa: &GroupHomomorphism,
    action: &GroupAction,
    cfg: &Config,
) -> Result<WreathReport> {
    if kappa.domain != *group || kappa.codomain != action.group {
        return Err(Error::GroupMismatch);
    }
    if action.set_size != copies.len() {
        return Err(Error::Precondition(format!(
            "{} copies for an index set of size {}",
            copies.len(),
            action.set_size
        )));
    }
    for c in copies {
        c.ensure_subgroup_of(group, "wreath-like copy")?;
    }
    if kappa.image()?.order() != action.group.order() {
        return Err(Error::Precondition("kappa is not surjective".into()));
    }
    let fail = |condition: &str, element: &Permutation, copy: usize, witness: String| {
        Ok(WreathReport {
            holds: false,
            violation: Some(WreathViolation {
                condition: condition.into(),
                element: element.to_string(),
                copy,
                witness,
            }),
        })
    };
    let id = group.identity();
    for (i, ci) in copies.iter().enumerate() {
        for (j, cj) in copies.iter().enumerate().skip(i + 1) {
            for x in ci.elements() {
                if let Some(y) = cj.elements().iter().find(|y| x * *y != *y * x) {
                    return fail("copies commute", x, i, format!("does not commute with {y} in copy {j}"));
                }
            }
        }
    }
    let mut gens = Vec::new();
    for c in copies {
        gens.extend(c.generators().iter().cloned());
    }
    let sum = PermGroup::generate(group.degree(), gens, cfg)?;
    let product: usize = copies.iter().map(|c| c.order()).product();
    if sum.order() != product {
        return fail(
            "direct sum",
            id,
            0,
            format!("copies generate a group of order {} instead of {product}", sum.order()),
        );
    }
    let kernel: Vec<&Permutation> = group.elements().iter().filter(|g| kappa.apply(g).is_identity()).collect();
    if kernel.len() != sum.order() || kernel.iter().any(|g| !sum.contains(g)) {
        return fail("kernel of kappa", id, 0, format!("kernel has order {}", kernel.len()));
    }
    for g in group.elements() {
        let target = action.image(kappa.apply(g));
        for (i, ci) in copies.iter().enumerate() {
            let dest = &copies[target.apply(i)];
            if let Some(a) = ci.elements().iter().find(|a| !dest.contains(&g.conjugate(a))) {
                return fail("conjugation follows kappa", g, i, a.to_string());
            }
        }
    }
    Ok(WreathReport {
        holds: true,
        violation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> PermGroup {
        let c = format!("({})", (0..n).map(|i| i.to_string()).collect::<Vec<_>>().join(" "));
        PermGroup::from_cycles(n, &[c.as_str()])
    }

    fn regular(b: &PermGroup) -> GroupAction {
        GroupAction::from_fn(b, b.degree(), |g| Ok(g.clone())).unwrap()
    }

    #[test]
    fn z2_wr_z3() {
        let b = cyclic(3);
        let act = regular(&b);
        let w = wreath_product(&cyclic(2), &act, &Config::default()).unwrap();
        assert_eq!(w.group.order(), 24);
        assert_eq!(w.group.degree(), 6);
        let r = verify_wreath_like(&w.group, &w.base_copies, &w.kappa, &act, &Config::default()).unwrap();
        assert!(r.holds, "{r:?}");

        let mut swapped = w.base_copies.clone();
        swapped.swap(0, 1);
        let r = verify_wreath_like(&w.group, &swapped, &w.kappa, &act, &Config::default()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.violation.unwrap().condition, "conjugation follows kappa");
    }

    #[test]
    fn z2_wr_z2_is_dihedral() {
        let b = cyclic(2);
        let w = wreath_product(&cyclic(2), &regular(&b), &Config::default()).unwrap();
        assert_eq!((w.group.order(), w.group.exponent()), (8, 4));
    }

    #[test]
    fn trivial_base_recovers_b() {
        let s3 = PermGroup::from_cycles(3, &["(0 1)", "(0 1 2)"]);
        let w = wreath_product(&PermGroup::trivial(1), &regular(&s3), &Config::default()).unwrap();
        assert_eq!(w.group.order(), 6);
        // A non-faithful action still gives a copy of B.
        let point = GroupAction::from_fn(&s3, 1, |_| Ok(Permutation::identity(1))).unwrap();
        let w = wreath_product(&PermGroup::trivial(1), &point, &Config::default()).unwrap();
        assert_eq!(w.group.order(), 6);
        assert!(w.kappa.is_injective());
    }

    #[test]
    fn s4_over_v4_with_one_copy() {
        let s4 = PermGroup::from_cycles(4, &["(0 1)", "(0 1 2 3)"]);
        let v4 = PermGroup::from_cycles(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        let s3 = PermGroup::from_cycles(3, &["(0 1)", "(0 1 2)"]);
        // S4 permutes the three pair partitions {01|23, 02|13, 03|12}.
        let partition = |g: &Permutation| {
            let pairs = [(0, 1), (0, 2), (0, 3)];
            let which = |(a, b): (usize, usize)| {
                let (x, y) = (g.apply(a), g.apply(b));
                let lo = if x == 0 || y == 0 { x.max(y) } else { 6 - x - y };
                lo - 1
            };
            Permutation::from_images(pairs.iter().map(|&p| which(p)).collect()).unwrap()
        };
        let kappa =
            GroupHomomorphism::from_generator_images(&s4, &s3, &s4.generators().iter().map(partition).collect::<Vec<_>>())
                .unwrap();
        let point = GroupAction::from_fn(&s3, 1, |_| Ok(Permutation::identity(1))).unwrap();
        let r = verify_wreath_like(&s4, &[v4], &kappa, &point, &Config::default()).unwrap();
        assert!(r.holds, "{r:?}");
    }
}
