//! Finite permutation groups with full element enumeration, cosets and double cosets.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::perm::Permutation;

struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    /// Sorted lexicographically by image sequence; the identity comes first.
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

/// A finite permutation group. Cloning is cheap.
#[derive(Clone)]
pub struct PermGroup(Arc<GroupData>);

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.0.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.degree() == other.degree() && self.0.elements == other.0.elements)
    }
}

impl Eq for PermGroup {}

/// Closure of `gens` under multiplication, as an unsorted list.
fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    let mut order = vec![id.clone()];
    seen.insert(id, ());
    let mut at = 0;
    while at < order.len() {
        let x = order[at].clone();
        at += 1;
        for s in gens {
            let y = &x * s;
            if !seen.contains_key(&y) {
                if order.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "group order",
                        limit: cap,
                        actual: order.len() + 1,
                    });
                }
                seen.insert(y.clone(), ());
                order.push(y);
            }
        }
    }
    Ok(order)
}

impl PermGroup {
    fn from_parts(degree: usize, generators: Vec<Permutation>, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PermGroup(Arc::new(GroupData {
            degree,
            generators,
            elements,
            index,
        }))
    }

    /// Enumerates the group generated by `gens`.
    pub fn generate(degree: usize, gens: Vec<Permutation>, cfg: &Config) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.degree() != degree {
                return Err(Error::Precondition(format!(
                    "generator {i} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let elements = closure(degree, &gens, cfg.order_cap)?;
        Ok(Self::from_parts(degree, gens, elements))
    }

    /// Convenience constructor from cycle strings; panics on malformed input.
    /// Intended for tests and built-in corpora.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Self {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree).expect("valid cycle string"))
            .collect();
        Self::generate(degree, gens, &Config::default()).expect("group within default caps")
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    /// Builds a group from a set of elements already known to be closed. A small
    /// generating set is chosen greedily in element order.
    pub fn from_closed_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let mut sorted = elements;
        sorted.sort();
        sorted.dedup();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current: HashMap<Permutation, ()> = HashMap::new();
        current.insert(Permutation::identity(degree), ());
        for x in &sorted {
            if current.contains_key(x) {
                continue;
            }
            gens.push(x.clone());
            let c = closure(degree, &gens, sorted.len() + 1)
                .map_err(|_| Error::InvariantViolation("element set is not closed".into()))?;
            current = c.into_iter().map(|p| (p, ())).collect();
        }
        if current.len() != sorted.len() {
            return Err(Error::InvariantViolation("element set is not closed".into()));
        }
        Ok(Self::from_parts(degree, gens, sorted))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.0.elements
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn identity(&self) -> &Permutation {
        &self.0.elements[0]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.0.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.0.index.contains_key(p)
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let p = &self.0.elements[a] * &self.0.elements[b];
        self.0.index[&p]
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.elements().iter().all(|x| other.contains(x))
    }

    /// Errors with [`Error::NotSubgroup`] unless `self <= other`.
    pub fn ensure_subgroup_of(&self, other: &PermGroup, what: &str) -> Result<()> {
        if self.is_subgroup_of(other) {
            Ok(())
        } else {
            Err(Error::NotSubgroup(format!(
                "{what}: group of order {} (degree {}) is not contained in group of order {} (degree {})",
                self.order(),
                self.degree(),
                other.order(),
                other.degree()
            )))
        }
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators()
                .iter()
                .all(|g| self.generators().iter().all(|h| self.contains(&g.conjugate(h))))
    }

    pub fn subgroup_from_elements(&self, elements: Vec<Permutation>) -> Result<PermGroup> {
        PermGroup::from_closed_elements(self.degree(), elements)
    }

    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        let elems = self
            .elements()
            .iter()
            .filter(|x| other.contains(x))
            .cloned()
            .collect();
        self.subgroup_from_elements(elems)
    }

    pub fn centre(&self) -> Result<PermGroup> {
        let elems = self
            .elements()
            .iter()
            .filter(|z| self.generators().iter().all(|g| g * z == *z * g))
            .cloned()
            .collect();
        self.subgroup_from_elements(elems)
    }

    /// Histogram element order -> number of elements.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for x in self.elements() {
            *h.entry(x.order()).or_insert(0) += 1;
        }
        h
    }

    pub fn exponent(&self) -> usize {
        self.order_histogram()
            .keys()
            .fold(1, |acc, &o| acc / gcd(acc, o) * o)
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec {
            degree: self.degree(),
            generators: Some(self.generators().to_vec()),
            generators_cycles: None,
        }
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// JSON ingestion format for groups.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Permutation>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators_cycles: Option<Vec<String>>,
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("{e} (line {}, column {})", e.line(), e.column()))
        })
    }

    pub fn build(&self, cfg: &Config) -> Result<PermGroup> {
        let mut gens = Vec::new();
        if let Some(images) = &self.generators {
            for (i, g) in images.iter().enumerate() {
                if g.degree() != self.degree {
                    return Err(Error::Parse(format!(
                        "generator {i} has {} images, expected {}",
                        g.degree(),
                        self.degree
                    )));
                }
                gens.push(g.clone());
            }
        }
        if let Some(cycles) = &self.generators_cycles {
            for (i, s) in cycles.iter().enumerate() {
                let g = Permutation::parse_cycles(s, self.degree).map_err(|e| match e {
                    Error::Parse(m) => Error::Parse(format!("generator {i}: {m}")),
                    other => other,
                })?;
                gens.push(g);
            }
        }
        PermGroup::generate(self.degree, gens, cfg)
    }
}

/// Parses and builds a group file. Errors in a cycle string also name the line it is on.
pub fn parse_group_json(text: &str, cfg: &Config) -> Result<PermGroup> {
    let spec = GroupSpec::from_json(text)?;
    spec.build(cfg).map_err(|e| match (&e, &spec.generators_cycles) {
        (Error::Parse(m), Some(cycles)) => {
            let line = cycles
                .iter()
                .find(|c| m.contains(&format!("{c:?}")))
                .and_then(|c| text.lines().position(|l| l.contains(&format!("{c:?}"))));
            match line {
                Some(l) => Error::Parse(format!("line {}: {m}", l + 1)),
                None => e,
            }
        }
        _ => e,
    })
}

fn pick_simplest<'a>(it: impl Iterator<Item = &'a Permutation>) -> Permutation {
    it.min_by(|a, b| a.cmp_simplest(b)).expect("nonempty").clone()
}

/// Right cosets `H g_i` of `H` in `G`.
#[derive(Clone, Debug)]
pub struct CosetData {
    pub group: PermGroup,
    pub subgroup: PermGroup,
    /// `reps[0]` is the identity.
    pub reps: Vec<Permutation>,
    /// Coset index of every element of `group`, by element index.
    coset_of: Vec<usize>,
}

impl CosetData {
    /// Builds the right cosets. Representatives are the simplest element of each
    /// coset (fewest moved points, then cycle notation); cosets are ordered by
    /// their representatives with the identity coset first.
    pub fn new(group: &PermGroup, subgroup: &PermGroup) -> Result<Self> {
        subgroup.ensure_subgroup_of(group, "right cosets")?;
        let n = group.order();
        let mut raw = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if raw[x] != usize::MAX {
                continue;
            }
            let g = &group.elements()[x];
            let mut block = Vec::with_capacity(subgroup.order());
            for h in subgroup.elements() {
                let y = group.index_of(&(h * g)).expect("closed");
                raw[y] = blocks.len();
                block.push(y);
            }
            blocks.push(block);
        }
        let mut order: Vec<(Permutation, usize)> = blocks
            .iter()
            .enumerate()
            .map(|(b, block)| (pick_simplest(block.iter().map(|&y| &group.elements()[y])), b))
            .collect();
        order.sort_by(|a, b| a.0.cmp_simplest(&b.0));
        let mut relabel = vec![0; blocks.len()];
        for (new, (_, old)) in order.iter().enumerate() {
            relabel[*old] = new;
        }
        let coset_of = raw.iter().map(|&b| relabel[b]).collect();
        let reps = order.into_iter().map(|(p, _)| p).collect::<Vec<_>>();
        debug_assert!(reps[0].is_identity());
        Ok(CosetData {
            group: group.clone(),
            subgroup: subgroup.clone(),
            reps,
            coset_of,
        })
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// Index `i` with `g ∈ H g_i`.
    pub fn coset_index(&self, g: &Permutation) -> usize {
        self.coset_of[self.group.index_of(g).expect("element of the ambient group")]
    }

    pub fn coset_index_by_element(&self, element_index: usize) -> usize {
        self.coset_of[element_index]
    }
}

/// Double cosets `H g_i H` with stabilizers `K_i = H ∩ g_i^-1 H g_i`.
#[derive(Clone, Debug)]
pub struct DoubleCosetData {
    pub reps: Vec<Permutation>,
    pub stabilizers: Vec<PermGroup>,
    pub sizes: Vec<usize>,
}

impl DoubleCosetData {
    pub fn new(group: &PermGroup, subgroup: &PermGroup) -> Result<Self> {
        subgroup.ensure_subgroup_of(group, "double cosets")?;
        let n = group.order();
        let mut assigned = vec![false; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let g = &group.elements()[x];
            let mut block = Vec::new();
            for h1 in subgroup.elements() {
                let h1g = h1 * g;
                for h2 in subgroup.elements() {
                    let y = group.index_of(&(&h1g * h2)).expect("closed");
                    if !assigned[y] {
                        assigned[y] = true;
                        block.push(y);
                    }
                }
            }
            blocks.push(block);
        }
        let mut reps: Vec<(Permutation, usize)> = blocks
            .iter()
            .map(|b| (pick_simplest(b.iter().map(|&y| &group.elements()[y])), b.len()))
            .collect();
        reps.sort_by(|a, b| a.0.cmp_simplest(&b.0));
        let mut stabilizers = Vec::with_capacity(reps.len());
        for (r, _) in &reps {
            let elems = subgroup
                .elements()
                .iter()
                .filter(|h| subgroup.contains(&r.conjugate(h)))
                .cloned()
                .collect();
            stabilizers.push(subgroup.subgroup_from_elements(elems)?);
        }
        Ok(DoubleCosetData {
            sizes: reps.iter().map(|r| r.1).collect(),
            reps: reps.into_iter().map(|r| r.0).collect(),
            stabilizers,
        })
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }
}

/// `K = ∩_i g_i^-1 H g_i`, the largest normal subgroup of `G` inside `H`.
pub fn normal_core(group: &PermGroup, subgroup: &PermGroup) -> Result<PermGroup> {
    let cosets = CosetData::new(group, subgroup)?;
    let elems = subgroup
        .elements()
        .iter()
        .filter(|h| cosets.reps.iter().all(|g| subgroup.contains(&g.conjugate(h))))
        .cloned()
        .collect();
    let core = subgroup.subgroup_from_elements(elems)?;
    if !core.is_normal_in(group) {
        return Err(Error::InvariantViolation("normal core is not normal".into()));
    }
    Ok(core)
}

/// Extends generator images to a map on all elements along the Cayley graph,
/// checking consistency on every edge. Returns `None` if the assignment does not
/// define a homomorphism.
pub(crate) fn extend_on_generators<T: Clone>(
    group: &PermGroup,
    gen_images: &[T],
    identity: T,
    mul: impl Fn(&T, &T) -> T,
    eq: impl Fn(&T, &T) -> bool,
) -> Option<Vec<T>> {
    assert_eq!(gen_images.len(), group.generators().len());
    let n = group.order();
    let mut images: Vec<Option<T>> = vec![None; n];
    images[0] = Some(identity.clone());
    let mut queue = VecDeque::from([0usize]);
    let gens: Vec<usize> = group
        .generators()
        .iter()
        .map(|g| group.index_of(g).expect("generator is an element"))
        .collect();
    while let Some(x) = queue.pop_front() {
        let ix = images[x].clone().expect("visited");
        for (s, &gi) in gens.iter().enumerate() {
            let y = group.mul_index(x, gi);
            let iy = mul(&ix, &gen_images[s]);
            match &images[y] {
                Some(prev) => {
                    if !eq(prev, &iy) {
                        return None;
                    }
                }
                None => {
                    images[y] = Some(iy);
                    queue.push_back(y);
                }
            }
        }
    }
    if !eq(images[0].as_ref().expect("identity"), &identity) {
        return None;
    }
    images.into_iter().collect()
}

/// A left action of a group on `{0, .., set_size-1}`, stored per element.
#[derive(Clone, Debug)]
pub struct GroupAction {
    pub group: PermGroup,
    pub set_size: usize,
    images: Vec<Permutation>,
}

impl GroupAction {
    /// Extends the images of the group's generators, verifying the result is an action.
    pub fn from_generator_images(group: &PermGroup, set_size: usize, gen_images: &[Permutation]) -> Result<Self> {
        if gen_images.len() != group.generators().len() {
            return Err(Error::InvalidAction(format!(
                "{} generator images for {} generators",
                gen_images.len(),
                group.generators().len()
            )));
        }
        if gen_images.iter().any(|p| p.degree() != set_size) {
            return Err(Error::InvalidAction(format!("images must act on {set_size} points")));
        }
        let images = extend_on_generators(
            group,
            gen_images,
            Permutation::identity(set_size),
            |a, b| a * b,
            |a, b| a == b,
        )
        .ok_or_else(|| Error::InvalidAction("generator images do not define a homomorphism".into()))?;
        Ok(GroupAction {
            group: group.clone(),
            set_size,
            images,
        })
    }

    /// Builds an action from a function on elements and verifies
    /// `act(x s) = act(x) act(s)` for every element `x` and generator `s`.
    pub fn from_fn(group: &PermGroup, set_size: usize, f: impl Fn(&Permutation) -> Result<Permutation>) -> Result<Self> {
        let images = group.elements().iter().map(&f).collect::<Result<Vec<_>>>()?;
        if images.iter().any(|p| p.degree() != set_size) {
            return Err(Error::InvalidAction(format!("images must act on {set_size} points")));
        }
        if !images[0].is_identity() {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for s in group.generators() {
            let si = group.index_of(s).expect("generator");
            for x in 0..group.order() {
                let xs = group.mul_index(x, si);
                if images[xs] != &images[x] * &images[si] {
                    return Err(Error::InvalidAction(format!(
                        "act({} * {}) differs from the product of the actions",
                        group.elements()[x], s
                    )));
                }
            }
        }
        Ok(GroupAction {
            group: group.clone(),
            set_size,
            images,
        })
    }

    /// `g · (H x) = H x g^-1` on right cosets.
    pub fn on_right_cosets(cosets: &CosetData) -> Result<Self> {
        GroupAction::from_fn(&cosets.group, cosets.index(), |g| {
            let ginv = g.inverse();
            let images = cosets
                .reps
                .iter()
                .map(|r| cosets.coset_index(&(r * &ginv)))
                .collect();
            Permutation::from_images(images)
        })
    }

    pub fn image(&self, g: &Permutation) -> &Permutation {
        &self.images[self.group.index_of(g).expect("element of the acting group")]
    }

    pub fn image_by_index(&self, element_index: usize) -> &Permutation {
        &self.images[element_index]
    }

    pub fn fixed_points(&self, g: &Permutation) -> usize {
        let p = self.image(g);
        (0..self.set_size).filter(|&x| p.apply(x) == x).count()
    }

    /// Restricts to a subgroup.
    pub fn restrict(&self, subgroup: &PermGroup) -> Result<Self> {
        subgroup.ensure_subgroup_of(&self.group, "restricted action")?;
        Ok(GroupAction {
            group: subgroup.clone(),
            set_size: self.set_size,
            images: subgroup.elements().iter().map(|h| self.image(h).clone()).collect(),
        })
    }

    pub fn is_faithful(&self) -> bool {
        self.images.iter().skip(1).all(|p| !p.is_identity())
    }

    /// Orbit representatives (the smallest point of each orbit), ascending.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        let mut seen = vec![false; self.set_size];
        let mut reps = Vec::new();
        for x in 0..self.set_size {
            if seen[x] {
                continue;
            }
            reps.push(x);
            for p in &self.images {
                seen[p.apply(x)] = true;
            }
        }
        reps
    }

    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        let elems = self
            .group
            .elements()
            .iter()
            .zip(&self.images)
            .filter(|(_, p)| p.apply(point) == point)
            .map(|(g, _)| g.clone())
            .collect();
        self.group.subgroup_from_elements(elems)
    }
}

/// A homomorphism between permutation groups, stored per element of the domain.
#[derive(Clone, Debug)]
pub struct GroupHomomorphism {
    pub domain: PermGroup,
    pub codomain: PermGroup,
    images: Vec<Permutation>,
}

impl GroupHomomorphism {
    pub fn from_generator_images(domain: &PermGroup, codomain: &PermGroup, gen_images: &[Permutation]) -> Result<Self> {
        if gen_images.len() != domain.generators().len() {
            return Err(Error::Precondition(format!(
                "{} generator images for {} generators",
                gen_images.len(),
                domain.generators().len()
            )));
        }
        for (i, p) in gen_images.iter().enumerate() {
            if !codomain.contains(p) {
                return Err(Error::Precondition(format!("image of generator {i} ({p}) is not in the codomain")));
            }
        }
        let images = extend_on_generators(
            domain,
            gen_images,
            codomain.identity().clone(),
            |a, b| a * b,
            |a, b| a == b,
        )
        .ok_or_else(|| Error::Precondition("generator images do not define a homomorphism".into()))?;
        Ok(GroupHomomorphism {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images,
        })
    }

    /// Inclusion of a subgroup.
    pub fn inclusion(sub: &PermGroup, group: &PermGroup) -> Result<Self> {
        sub.ensure_subgroup_of(group, "inclusion")?;
        Ok(GroupHomomorphism {
            domain: sub.clone(),
            codomain: group.clone(),
            images: sub.elements().to_vec(),
        })
    }

    pub fn apply(&self, g: &Permutation) -> &Permutation {
        &self.images[self.domain.index_of(g).expect("element of the domain")]
    }

    pub fn is_injective(&self) -> bool {
        self.images.iter().skip(1).all(|p| !p.is_identity())
    }

    pub fn image(&self) -> Result<PermGroup> {
        let mut elems = self.images.clone();
        elems.sort();
        elems.dedup();
        self.codomain.subgroup_from_elements(elems)
    }
}

/// Compares two permutations by the representative ordering used for cosets.
pub fn simplest_order(a: &Permutation, b: &Permutation) -> Ordering {
    a.cmp_simplest(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::from_cycles(3, &["(0 1)", "(0 1 2)"])
    }

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn generation_orders() {
        assert_eq!(s3().order(), 6);
        assert_eq!(PermGroup::from_cycles(1, &[]).order(), 1);
        let wreath = PermGroup::from_cycles(6, &["(0 1)", "(2 3)", "(4 5)", "(0 2 4)(1 3 5)"]);
        assert_eq!(wreath.order(), 24);
    }

    #[test]
    fn generation_respects_cap() {
        let cfg = Config {
            order_cap: 100,
            ..Config::default()
        };
        let gens = vec![p("(0 1)", 5), p("(0 1 2 3 4)", 5)];
        assert!(matches!(
            PermGroup::generate(5, gens, &cfg),
            Err(Error::CapExceeded { .. })
        ));
        let bad = vec![p("(0 1)", 4)];
        assert!(PermGroup::generate(3, bad, &cfg).is_err());
    }

    #[test]
    fn group_axioms_hold() {
        let g = PermGroup::from_cycles(4, &["(0 1)", "(0 1 2 3)"]);
        assert!(g.identity().is_identity());
        for x in g.elements() {
            assert!(g.contains(&x.inverse()));
            for y in g.elements() {
                assert!(g.contains(&(x * y)));
            }
        }
        assert_eq!(24 % g.order(), 0);
    }

    #[test]
    fn right_cosets_of_transposition_in_s3() {
        let g = s3();
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        let c = CosetData::new(&g, &h).unwrap();
        assert_eq!(c.index(), 3);
        assert_eq!(c.reps, vec![p("()", 3), p("(0 2)", 3), p("(1 2)", 3)]);
        assert_eq!(c.coset_index(&p("(0 2 1)", 3)), 1);
        assert_eq!(c.coset_index(&p("(0 1 2)", 3)), 2);
        let full = CosetData::new(&g, &g).unwrap();
        assert_eq!(full.index(), 1);
        assert!(full.reps[0].is_identity());
    }

    #[test]
    fn double_cosets() {
        let g = s3();
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        let d = DoubleCosetData::new(&g, &h).unwrap();
        assert_eq!(d.count(), 2);
        assert_eq!(d.sizes, vec![2, 4]);
        assert_eq!(d.stabilizers[0], h);
        assert_eq!(d.stabilizers[1].order(), 1);

        let a3 = PermGroup::from_cycles(3, &["(0 1 2)"]);
        let d = DoubleCosetData::new(&g, &a3).unwrap();
        assert_eq!(d.sizes, vec![3, 3]);
        assert!(d.stabilizers.iter().all(|k| *k == a3));

        let d = DoubleCosetData::new(&g, &g).unwrap();
        assert_eq!(d.count(), 1);
        assert_eq!(d.stabilizers[0], g);
    }

    #[test]
    fn normal_cores() {
        let g = s3();
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        assert_eq!(normal_core(&g, &h).unwrap().order(), 1);
        let a3 = PermGroup::from_cycles(3, &["(0 1 2)"]);
        assert_eq!(normal_core(&g, &a3).unwrap(), a3);
        let wreath = PermGroup::from_cycles(6, &["(0 1)", "(2 3)", "(4 5)", "(0 2 4)(1 3 5)"]);
        let base = PermGroup::from_cycles(6, &["(0 1)", "(2 3)", "(4 5)"]);
        assert_eq!(normal_core(&wreath, &base).unwrap(), base);
    }

    #[test]
    fn subgroup_violation_is_reported() {
        let g = PermGroup::from_cycles(3, &["(0 1 2)"]);
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        assert!(matches!(CosetData::new(&g, &h), Err(Error::NotSubgroup(_))));
        assert!(matches!(normal_core(&g, &h), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn coset_action_is_right_multiplication() {
        let g = s3();
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        let c = CosetData::new(&g, &h).unwrap();
        let act = GroupAction::on_right_cosets(&c).unwrap();
        assert_eq!(act.image(&p("(0 1)", 3)), &p("(1 2)", 3));
        assert_eq!(act.orbit_representatives(), vec![0]);
        assert_eq!(act.stabilizer(0).unwrap(), h);
    }

    #[test]
    fn bad_action_is_rejected() {
        let g = s3();
        // (0 1) -> identity, (0 1 2) -> 3-cycle is not a homomorphism on S3.
        let imgs = vec![Permutation::identity(3), p("(0 1 2)", 3)];
        let gens_order: Vec<_> = g.generators().to_vec();
        assert_eq!(gens_order.len(), 2);
        assert!(GroupAction::from_generator_images(&g, 3, &imgs).is_err());
    }

    #[test]
    fn group_json_formats() {
        let cfg = Config::default();
        let a = parse_group_json(r#"{"degree": 3, "generators": [[1,0,2],[1,2,0]]}"#, &cfg).unwrap();
        let b = parse_group_json(r#"{"degree": 3, "generators_cycles": ["(0 1)", "(0 1 2)"]}"#, &cfg).unwrap();
        assert_eq!(a, b);
        let again = serde_json::to_string(&a.to_spec()).unwrap();
        assert_eq!(parse_group_json(&again, &cfg).unwrap(), a);
        assert!(parse_group_json(r#"{"degree": 3, "generators": [[0,0,2]]}"#, &cfg).is_err());
        assert!(parse_group_json(r#"{"degree": 3, "generators_cycles": ["(0 1"]}"#, &cfg).is_err());
    }
}
