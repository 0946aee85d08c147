//! Automorphism groups realized as permutations of a group's element list.

use crate::character::ConjClasses;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{extend_on_generators, PermGroup};
use crate::perm::Permutation;

/// `Aut(G)` acting on the element indices of `G`, with `Inn(G)` and the cosets of
/// `Inn(G)` that make up `Out(G)`.
#[derive(Clone, Debug)]
pub struct AutData {
    pub base: PermGroup,
    pub aut: PermGroup,
    pub inner: PermGroup,
    /// Lexicographically least automorphism of each `Inn(G)` coset; identity first.
    pub out_reps: Vec<Permutation>,
    /// Out coset of every element of `aut`, by element index.
    out_of: Vec<usize>,
}

impl AutData {
    pub fn out_order(&self) -> usize {
        self.out_reps.len()
    }

    pub fn out_coset(&self, a: &Permutation) -> usize {
        self.out_of[self.aut.index_of(a).expect("automorphism")]
    }

    /// Multiplication of `Out(G)` in terms of coset indices.
    pub fn out_mul(&self, a: usize, b: usize) -> usize {
        self.out_coset(&(&self.out_reps[a] * &self.out_reps[b]))
    }

    /// `Ad(g)` as a permutation of element indices.
    pub fn inner_of(&self, g: &Permutation) -> Permutation {
        conjugation(&self.base, g)
    }
}

/// `x ↦ g x g^-1` on element indices.
pub fn conjugation(group: &PermGroup, g: &Permutation) -> Permutation {
    let images = group
        .elements()
        .iter()
        .map(|x| group.index_of(&g.conjugate(x)).expect("closed"))
        .collect();
    Permutation::from_images(images).expect("conjugation is bijective")
}

/// Drops generators already generated by the earlier ones.
fn irredundant_generators(group: &PermGroup, cfg: &Config) -> Result<Vec<Permutation>> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermGroup::trivial(group.degree());
    for g in group.generators() {
        if !current.contains(g) {
            gens.push(g.clone());
            current = PermGroup::generate(group.degree(), gens.clone(), cfg)?;
        }
    }
    Ok(gens)
}

/// Searches generator images among elements with the same order and class size,
/// pruning on the orders of pairwise products, then extends along the Cayley graph.
pub fn automorphism_group(group: &PermGroup, cfg: &Config) -> Result<AutData> {
    let n = group.order();
    if n > cfg.aut_cap {
        return Err(Error::CapExceeded {
            what: "group order for automorphism search",
            limit: cfg.aut_cap,
            actual: n,
        });
    }
    let gens = irredundant_generators(group, cfg)?;
    let base = PermGroup::generate(group.degree(), gens.clone(), cfg)?;
    let classes = ConjClasses::new(&base);
    let size_of = |g: &Permutation| classes.sizes[classes.class_of(g)];
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|s| {
            (0..n)
                .filter(|&x| {
                    let e = &base.elements()[x];
                    e.order() == s.order() && size_of(e) == size_of(s)
                })
                .collect()
        })
        .collect();
    let pair_orders: Vec<Vec<usize>> = gens
        .iter()
        .map(|a| gens.iter().map(|b| (a * b).order()).collect())
        .collect();

    let mut found: Vec<Permutation> = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    search(&base, &candidates, &pair_orders, &mut choice, 0, &mut found);

    let inner_elems: Vec<Permutation> = base.elements().iter().map(|g| conjugation(&base, g)).collect();
    let aut = PermGroup::from_closed_elements(n, found)?;
    let inner = aut.subgroup_from_elements({
        let mut v = inner_elems;
        v.sort();
        v.dedup();
        v
    })?;
    if !inner.is_normal_in(&aut) {
        return Err(Error::InvariantViolation("Inn(G) is not normal in Aut(G)".into()));
    }
    let mut out_of = vec![usize::MAX; aut.order()];
    let mut out_reps = Vec::new();
    // Elements are sorted, so the first unassigned element is the least of its coset.
    for x in 0..aut.order() {
        if out_of[x] != usize::MAX {
            continue;
        }
        let a = &aut.elements()[x];
        for i in inner.elements() {
            out_of[aut.index_of(&(i * a)).expect("closed")] = out_reps.len();
        }
        out_reps.push(a.clone());
    }
    Ok(AutData {
        base,
        aut,
        inner,
        out_reps,
        out_of,
    })
}

fn search(
    base: &PermGroup,
    candidates: &[Vec<usize>],
    pair_orders: &[Vec<usize>],
    choice: &mut Vec<usize>,
    depth: usize,
    found: &mut Vec<Permutation>,
) {
    let elems = base.elements();
    if depth == candidates.len() {
        let images: Vec<usize> = choice.clone();
        let map = extend_on_generators(base, &images, 0, |a, b| base.mul_index(*a, *b), |a, b| a == b);
        if let Some(map) = map {
            if let Ok(p) = Permutation::from_images(map) {
                found.push(p);
            }
        }
        return;
    }
    for &c in &candidates[depth] {
        let ok = (0..depth).all(|d| {
            (&elems[choice[d]] * &elems[c]).order() == pair_orders[d][depth]
                && (&elems[c] * &elems[choice[d]]).order() == pair_orders[depth][d]
        }) && (&elems[c] * &elems[c]).order() == pair_orders[depth][depth];
        if ok {
            choice[depth] = c;
            search(base, candidates, pair_orders, choice, depth + 1, found);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(g: &PermGroup) -> (usize, usize, usize) {
        let a = automorphism_group(g, &Config::default()).unwrap();
        (a.aut.order(), a.inner.order(), a.out_order())
    }

    #[test]
    fn small_automorphism_groups() {
        let a4 = PermGroup::from_cycles(4, &["(0 1 2)", "(0 1)(2 3)"]);
        assert_eq!(orders(&a4), (24, 12, 2));
        let s3 = PermGroup::from_cycles(3, &["(0 1)", "(0 1 2)"]);
        assert_eq!(orders(&s3), (6, 6, 1));
        let z3 = PermGroup::from_cycles(3, &["(0 1 2)"]);
        assert_eq!(orders(&z3), (2, 1, 2));
    }

    #[test]
    fn automorphisms_preserve_orders_and_inner_matches_centre() {
        let d4 = PermGroup::from_cycles(4, &["(0 1 2 3)", "(0 2)"]);
        let a = automorphism_group(&d4, &Config::default()).unwrap();
        assert_eq!(a.inner.order() * d4.centre().unwrap().order(), d4.order());
        for phi in a.aut.elements() {
            for (x, e) in a.base.elements().iter().enumerate() {
                assert_eq!(a.base.elements()[phi.apply(x)].order(), e.order());
            }
        }
        assert!(a.out_reps[0].is_identity());
    }

    #[test]
    fn cap_is_enforced() {
        let s4 = PermGroup::from_cycles(4, &["(0 1)", "(0 1 2 3)"]);
        let cfg = Config {
            aut_cap: 10,
            ..Config::default()
        };
        assert_eq!(automorphism_group(&s4, &cfg).unwrap_err().exit_code(), 4);
    }
}
