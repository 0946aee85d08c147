//! Invariant suites over a corpus of inclusions, and the individual checks they run.
//!
//! Every check returns an [`Outcome`]. Errors raised inside a check count as failures.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::algebra::GroupAlgebraElement;
use crate::character::{induce, inner_product, multiplicity, restrict, CharacterTable};
use crate::cocycle::{normalize_cocycle, CayleyTable, Cocycle2, CocycleValues};
use crate::config::Config;
use crate::corpus::{default_corpus, load_corpus_dir, named_group, CorpusPair};
use crate::error::{Error, Result};
use crate::extension::{crossed_product_check, crossed_relations_hold, extension_from_out, RepRule};
use crate::group::{normal_core, CosetData, DoubleCosetData, GroupAction, GroupHomomorphism, PermGroup};
use crate::index::{
    commutant_bound_check, index_chain_check, jones_spectrum_query, local_index_combine, virtual_index, SpectrumKind,
    VirtualEmbeddingSpec, VirtualPart,
};
use crate::induced::{InducedHomomorphism, MatrixRep};
use crate::perm::Permutation;
use crate::subfactor::{
    brute_force_commutant_dim, dual_principal_graph, pimsner_popa_expand, pimsner_popa_reassemble, principal_graph,
    relative_commutant_dim, Side, ThetaMap,
};

const SEED: u64 = 0x5eed_0f5f;

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    /// Not applicable under the current caps.
    Skip(String),
    Fail(String),
}

impl Outcome {
    fn check(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(witness())
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theta,
    Graphs,
    Cocycles,
    Extensions,
    Arithmetic,
    All,
}

impl Suite {
    const PARTS: [Suite; 5] = [Suite::Theta, Suite::Graphs, Suite::Cocycles, Suite::Extensions, Suite::Arithmetic];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theta" => Suite::Theta,
            "graphs" => Suite::Graphs,
            "cocycles" => Suite::Cocycles,
            "extensions" => Suite::Extensions,
            "arithmetic" => Suite::Arithmetic,
            "all" => Suite::All,
            other => {
                return Err(Error::Parse(format!(
                    "unknown suite {other:?}; expected theta, graphs, cocycles, extensions, arithmetic or all"
                )))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub inputs: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub cases_run: usize,
    pub skipped: Vec<String>,
    pub failures: Vec<Failure>,
    pub wall_time_secs: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

struct Runner {
    cases: usize,
    skipped: Vec<String>,
    failures: Vec<Failure>,
}

impl Runner {
    fn case(&mut self, id: String, inputs: &str, f: impl FnOnce() -> Result<Outcome>) {
        self.cases += 1;
        match f() {
            Ok(Outcome::Pass) => {}
            Ok(Outcome::Skip(reason)) => self.skipped.push(format!("{id}: {reason}")),
            Ok(Outcome::Fail(witness)) => self.failures.push(Failure {
                case: id,
                inputs: inputs.into(),
                witness,
            }),
            Err(e) => self.failures.push(Failure {
                case: id,
                inputs: inputs.into(),
                witness: format!("error (exit {}): {e}", e.exit_code()),
            }),
        }
    }
}

/// Runs a suite on the default corpus.
pub fn run_suite(suite: Suite, cfg: &Config) -> Result<VerifyReport> {
    Ok(run_suite_on(suite, &default_corpus(cfg)?, cfg))
}

/// Runs a suite on the pair files of a directory. Files that fail to load are
/// reported as failures under their file name.
pub fn run_suite_on_dir(suite: Suite, dir: &Path, cfg: &Config) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut pairs = Vec::new();
    let mut load_failures = Vec::new();
    for (file, loaded) in load_corpus_dir(dir, cfg)? {
        match loaded {
            Ok(p) => pairs.push(p),
            Err(e) => load_failures.push(Failure {
                case: format!("load/{file}"),
                inputs: file,
                witness: format!("error (exit {}): {e}", e.exit_code()),
            }),
        }
    }
    let mut report = run_suite_on(suite, &pairs, cfg);
    report.cases_run += load_failures.len();
    report.failures.extend(load_failures);
    report.failures.sort_by(|a, b| a.case.cmp(&b.case));
    report.wall_time_secs = start.elapsed().as_secs_f64();
    Ok(report)
}

pub fn run_suite_on(suite: Suite, pairs: &[CorpusPair], cfg: &Config) -> VerifyReport {
    let start = Instant::now();
    let mut runner = Runner {
        cases: 0,
        skipped: Vec::new(),
        failures: Vec::new(),
    };
    let parts: Vec<Suite> = if suite == Suite::All { Suite::PARTS.to_vec() } else { vec![suite] };
    for part in parts {
        match part {
            Suite::Theta => theta_suite(&mut runner, pairs, cfg),
            Suite::Graphs => graph_suite(&mut runner, pairs, cfg),
            Suite::Cocycles => cocycle_suite(&mut runner, cfg),
            Suite::Extensions => extension_suite(&mut runner, pairs, cfg),
            Suite::Arithmetic => arithmetic_suite(&mut runner, pairs, cfg),
            Suite::All => unreachable!(),
        }
    }
    runner.failures.sort_by(|a, b| a.case.cmp(&b.case));
    VerifyReport {
        suite,
        cases_run: runner.cases,
        skipped: runner.skipped,
        failures: runner.failures,
        wall_time_secs: start.elapsed().as_secs_f64(),
    }
}

fn theta_suite(r: &mut Runner, pairs: &[CorpusPair], cfg: &Config) {
    for p in pairs {
        for k in 1..=2 {
            r.case(format!("theta/{}/k{k}/consistency", p.name), &p.name, || theta_consistency(p, k, 50, cfg));
            r.case(format!("theta/{}/k{k}/homomorphism", p.name), &p.name, || theta_homomorphism(p, k, 10, cfg));
        }
        r.case(format!("theta/{}/k2/action-composition", p.name), &p.name, || {
            tuple_action_composition(p, 2, 200, cfg)
        });
        r.case(format!("theta/{}/k1/right-cosets", p.name), &p.name, || tuple_action_is_coset_action(p, cfg));
        r.case(format!("theta/{}/pimsner-popa", p.name), &p.name, || pimsner_popa_reassembly(p, 100));
    }
}

fn graph_suite(r: &mut Runner, pairs: &[CorpusPair], cfg: &Config) {
    r.case("graphs/S3>S2/a5".into(), "S3>S2", || a5_example(cfg));
    for p in pairs {
        r.case(format!("graphs/{}/double-cosets", p.name), &p.name, || double_coset_sizes(p));
        r.case(format!("graphs/{}/norms", p.name), &p.name, || graph_norms(p, cfg));
        r.case(format!("graphs/{}/character-laws", p.name), &p.name, || {
            let g = character_table_laws(&p.group, cfg)?;
            if g.is_fail() {
                return Ok(g);
            }
            character_table_laws(&p.subgroup, cfg)
        });
        r.case(format!("graphs/{}/frobenius", p.name), &p.name, || frobenius_reciprocity(p, cfg));
        for k in 1..=2 {
            for side in [Side::InG, Side::InH] {
                r.case(format!("graphs/{}/commutant/k{k}/{side:?}", p.name), &p.name, || {
                    commutant_agreement(p, k, side, cfg)
                });
            }
        }
        r.case(format!("graphs/{}/commutant-bound", p.name), &p.name, || {
            let dim = relative_commutant_dim(&p.group, &p.subgroup, &p.subgroup, 1, Side::InH, cfg)?;
            let idx = (p.group.order() / p.subgroup.order()) as f64;
            Ok(Outcome::check(commutant_bound_check(dim as u64, idx), || {
                format!("dim {dim} exceeds index {idx} + 1")
            }))
        });
    }
}

fn cocycle_suite(r: &mut Runner, cfg: &Config) {
    r.case("cocycles/trivial".into(), "S3 by Z2", || {
        let c = conjugation_cocycle()?;
        Ok(Outcome::check(c.verify().holds && c.is_normalized() && normalize_cocycle(&c)? == c, || {
            "trivial cocycle rejected or altered".into()
        }))
    });
    r.case("cocycles/perturbed".into(), "S3 by Z2", || {
        let mut c = conjugation_cocycle()?;
        if let CocycleValues::Group { table, values, .. } = &mut c.values {
            table[1][1] = values.order() - 1;
        }
        let report = c.verify();
        Ok(Outcome::check(!report.holds && report.violation.is_some(), || {
            "perturbed cocycle accepted".into()
        }))
    });
    r.case("cocycles/scalar-constant".into(), "Z4", || {
        let z4 = CayleyTable::of_group(&PermGroup::generate(4, vec![Permutation::parse_cycles("(0 1 2 3)", 4)?], cfg)?);
        let c = Cocycle2::scalar(z4, vec![vec![Complex64::from_polar(1.0, 1.1); 4]; 4])?;
        let n = normalize_cocycle(&c)?;
        let ok = match &n.values {
            CocycleValues::Scalar(w) => w.iter().flatten().all(|v| (v - Complex64::new(1.0, 0.0)).norm() < 1e-12),
            _ => false,
        };
        Ok(Outcome::check(ok, || "constant scalar cocycle did not normalize to 1".into()))
    });
    for (name, out) in [("A4", vec![1]), ("S3", vec![])] {
        r.case(format!("cocycles/extension/{name}"), name, || {
            let ext = extension_from_out(&named_group(name, cfg)?, &out, cfg)?;
            let report = ext.cocycle.verify();
            let normalized = normalize_cocycle(&ext.cocycle)?;
            Ok(Outcome::check(report.holds && normalized.is_normalized(), || format!("{report:?}")))
        });
    }
}

fn extension_suite(r: &mut Runner, pairs: &[CorpusPair], cfg: &Config) {
    r.case("extensions/A4".into(), "A4, Out(A4)", || a4_extension(cfg));
    r.case("extensions/S3-trivial".into(), "S3, 1", || {
        let ext = extension_from_out(&named_group("S3", cfg)?, &[], cfg)?;
        Ok(Outcome::check(ext.realized.order() == 6 && ext.index == 1 && ext.outerness, || {
            format!("order {}, index {}", ext.realized.order(), ext.index)
        }))
    });
    for p in pairs {
        r.case(format!("extensions/{}/crossed-product", p.name), &p.name, || {
            let core = normal_core(&p.group, &p.subgroup)?;
            crossed_product_both_rules(&p.group, &core, &p.subgroup)
        });
    }
    r.case("extensions/S3>A3>A3/crossed-product".into(), "S3, A3, A3", || {
        let a3 = named_group("A3", cfg)?;
        crossed_product_both_rules(&named_group("S3", cfg)?, &a3, &a3)
    });
    r.case("extensions/Z2wrZ3>base/crossed-product".into(), "Z2wrZ3, base, base", || {
        let base = named_group("Z2^3", cfg)?;
        crossed_product_both_rules(&named_group("Z2wrZ3", cfg)?, &base, &base)
    });
}

fn arithmetic_suite(r: &mut Runner, pairs: &[CorpusPair], cfg: &Config) {
    r.case("arithmetic/spectrum".into(), "1, 2, 3, 3.5, 4.7", || spectrum_examples(cfg.tol_spectrum));
    r.case("arithmetic/virtual-index".into(), "three listed specs", virtual_index_examples);
    r.case("arithmetic/local-index".into(), "three partitions", || {
        let q = |a, b| Rational64::new(a, b);
        let got = [
            local_index_combine(&[(q(1, 2), 2.0), (q(1, 2), 2.0)])?,
            local_index_combine(&[(q(1, 1), 2.5)])?,
            local_index_combine(&[(q(1, 3), 1.0), (q(2, 3), 2.0)])?,
        ];
        Ok(Outcome::check(got == [8.0, 2.5, 6.0], || format!("{got:?}")))
    });
    for p in pairs {
        r.case(format!("arithmetic/{}/chains", p.name), &p.name, || index_chains(p));
    }
    r.case("arithmetic/induced/S3>A3".into(), "S3, A3, inclusion, trivial", || {
        let g = named_group("S3", cfg)?;
        let k = named_group("A3", cfg)?;
        induced_check(&g, &k)
    });
}

// ---- individual checks ----

fn sample_elements(group: &PermGroup, count: usize, rng: &mut StdRng) -> Vec<Permutation> {
    (0..count)
        .map(|_| group.elements()[rng.gen_range(0..group.order())].clone())
        .collect()
}

/// Both forms of `Θ^(k)_{ij}(u_g)` agree, the entry is a single unitary or zero,
/// and it is nonzero exactly when `i = g · j`.
pub fn theta_consistency(p: &CorpusPair, k: usize, samples: usize, cfg: &Config) -> Result<Outcome> {
    let theta = ThetaMap::new(&CosetData::new(&p.group, &p.subgroup)?, k, cfg)?;
    let mut rng = StdRng::seed_from_u64(SEED ^ k as u64);
    let n = theta.tuple_count();
    for g in sample_elements(&p.group, samples, &mut rng) {
        for j in 0..n {
            let image = theta.act(&g, j)?;
            for i in 0..n {
                let nested = theta.nested_entry(&g, i, j);
                let closed = theta.closed_entry(&g, i, j);
                if nested != closed {
                    return Ok(Outcome::Fail(format!("g={g} i={:?} j={:?}: {nested:?} vs {closed:?}", theta.tuple(i), theta.tuple(j))));
                }
                let expected_nonzero = i == image;
                let unit = closed.len() == 1 && closed.terms().all(|(_, c)| *c == Complex64::new(1.0, 0.0));
                if (expected_nonzero && !unit) || (!expected_nonzero && !closed.is_zero()) {
                    return Ok(Outcome::Fail(format!(
                        "g={g} i={:?} j={:?}: pattern disagrees with the tuple action",
                        theta.tuple(i),
                        theta.tuple(j)
                    )));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

/// `Θ(u_g) Θ(u_h) = Θ(u_{gh})` exactly on sampled pairs.
pub fn theta_homomorphism(p: &CorpusPair, k: usize, samples: usize, cfg: &Config) -> Result<Outcome> {
    let theta = ThetaMap::new(&CosetData::new(&p.group, &p.subgroup)?, k, cfg)?;
    let mut rng = StdRng::seed_from_u64(SEED ^ 0x100 ^ k as u64);
    let gs = sample_elements(&p.group, samples, &mut rng);
    let hs = sample_elements(&p.group, samples, &mut rng);
    for (g, h) in gs.iter().zip(&hs) {
        let lhs = &theta.matrix(g)? * &theta.matrix(h)?;
        if lhs != theta.matrix(&(g * h))? {
            return Ok(Outcome::Fail(format!("Θ({g})Θ({h}) differs from Θ({})", g * h)));
        }
    }
    Ok(Outcome::Pass)
}

/// `(gh)·j = g·(h·j)` on random triples.
pub fn tuple_action_composition(p: &CorpusPair, k: usize, triples: usize, cfg: &Config) -> Result<Outcome> {
    let theta = ThetaMap::new(&CosetData::new(&p.group, &p.subgroup)?, k, cfg)?;
    let mut rng = StdRng::seed_from_u64(SEED ^ 0x200);
    for _ in 0..triples {
        let g = &p.group.elements()[rng.gen_range(0..p.group.order())];
        let h = &p.group.elements()[rng.gen_range(0..p.group.order())];
        let j = rng.gen_range(0..theta.tuple_count());
        let lhs = theta.act(&(g * h), j)?;
        let rhs = theta.act(g, theta.act(h, j)?)?;
        if lhs != rhs {
            return Ok(Outcome::Fail(format!("g={g} h={h} j={:?}", theta.tuple(j))));
        }
    }
    Ok(Outcome::Pass)
}

/// For `k = 1` the tuple action is `g · Hx = H x g^-1`.
pub fn tuple_action_is_coset_action(p: &CorpusPair, cfg: &Config) -> Result<Outcome> {
    let cosets = CosetData::new(&p.group, &p.subgroup)?;
    let tuples = ThetaMap::new(&cosets, 1, cfg)?.tuple_action()?;
    let right = GroupAction::on_right_cosets(&cosets)?;
    for g in p.group.elements() {
        if tuples.image(g) != right.image(g) {
            return Ok(Outcome::Fail(format!("g={g}: {} vs {}", tuples.image(g), right.image(g))));
        }
    }
    Ok(Outcome::Pass)
}

/// A random element with small integer coefficients, so reassembly is exact.
pub fn random_algebra_element(group: &PermGroup, rng: &mut StdRng) -> GroupAlgebraElement {
    let terms = rng.gen_range(0..=group.order().min(12));
    GroupAlgebraElement::from_terms((0..terms).map(|_| {
        let g = group.elements()[rng.gen_range(0..group.order())].clone();
        (g, Complex64::new(rng.gen_range(-5..=5) as f64, rng.gen_range(-5..=5) as f64))
    }))
}

/// `x = Σ_i E_H(x u_{g_i}^*) u_{g_i}` exactly.
pub fn pimsner_popa_reassembly(p: &CorpusPair, count: usize) -> Result<Outcome> {
    let cosets = CosetData::new(&p.group, &p.subgroup)?;
    let mut rng = StdRng::seed_from_u64(SEED ^ 0x300);
    for _ in 0..count {
        let x = random_algebra_element(&p.group, &mut rng);
        let back = pimsner_popa_reassemble(&pimsner_popa_expand(&x, &cosets)?, &cosets);
        if back != x {
            return Ok(Outcome::Fail(format!("{x:?} reassembled to {back:?}")));
        }
    }
    Ok(Outcome::Pass)
}

pub fn double_coset_sizes(p: &CorpusPair) -> Result<Outcome> {
    let dc = DoubleCosetData::new(&p.group, &p.subgroup)?;
    let h = p.subgroup.order();
    let sizes_ok = dc.sizes.iter().zip(&dc.stabilizers).all(|(&s, k)| s == h * (h / k.order()));
    let total: usize = dc.sizes.iter().sum();
    Ok(Outcome::check(sizes_ok && total == p.group.order() && dc.reps[0].is_identity(), || {
        format!("sizes {:?} sum to {total}", dc.sizes)
    }))
}

/// Both graphs have norm² equal to the index. They must also be connected.
pub fn graph_norms(p: &CorpusPair, cfg: &Config) -> Result<Outcome> {
    let index = (p.group.order() / p.subgroup.order()) as f64;
    for (which, graph) in [
        ("principal", principal_graph(&p.group, &p.subgroup, cfg)?),
        ("dual", dual_principal_graph(&p.group, &p.subgroup, cfg)?),
    ] {
        if (graph.norm_squared - index).abs() > cfg.tol_norm {
            return Ok(Outcome::Fail(format!("{which} norm² {} vs index {index}", graph.norm_squared)));
        }
        if !graph.is_connected() {
            return Ok(Outcome::Fail(format!("{which} graph is disconnected")));
        }
        if jones_spectrum_query(graph.norm_squared, cfg.tol_norm)?.kind == SpectrumKind::NotInSpectrum {
            return Ok(Outcome::Fail(format!("{which} norm² {} is outside the spectrum", graph.norm_squared)));
        }
    }
    Ok(Outcome::Pass)
}

/// Both graphs of `S3 > ⟨(0 1)⟩` are the path with five vertices listed in order.
pub fn a5_example(cfg: &Config) -> Result<Outcome> {
    let g = named_group("S3", cfg)?;
    let h = PermGroup::generate(3, vec![Permutation::parse_cycles("(0 1)", 3)?], cfg)?;
    let pg = principal_graph(&g, &h, cfg)?;
    let labels = |v: &[crate::subfactor::GraphVertex]| v.iter().map(|x| x.label.clone()).collect::<Vec<_>>();
    let principal_ok = labels(&pg.even) == ["K1.0", "K1.1", "K2.0"]
        && labels(&pg.odd) == ["H.0", "H.1"]
        && pg.edges == vec![(0, 0, 1), (1, 1, 1), (2, 0, 1), (2, 1, 1)];
    let dg = dual_principal_graph(&g, &h, &cfg.clone())?;
    // triv_G – triv_H – std – sgn_H – sgn_G
    let dual_ok = dg.vertex_count() == 5
        && dg.edge_count() == 4
        && dg.edges.iter().all(|&(_, _, m)| m == 1)
        && dg.multiplicity("G.0", "H.0") == 1
        && dg.multiplicity("G.2", "H.0") == 1
        && dg.multiplicity("G.2", "H.1") == 1
        && dg.multiplicity("G.1", "H.1") == 1
        && dg.even[2].degree == 2;
    Ok(Outcome::check(principal_ok && dual_ok, || {
        format!("principal {:?}, dual {:?}", pg.edges, dg.edges)
    }))
}

/// Orthonormality within `tol_char` and `Σ d² = |G|`.
pub fn character_table_laws(group: &PermGroup, cfg: &Config) -> Result<Outcome> {
    let t = CharacterTable::compute(group, cfg)?;
    let rows = t.orthonormality_residual();
    let cols = t.column_orthogonality_residual();
    let sum: u64 = t.degrees.iter().map(|&d| (d as u64).pow(2)).sum();
    Ok(Outcome::check(rows <= cfg.tol_char && cols <= cfg.tol_char && sum == group.order() as u64, || {
        format!("row residual {rows:e}, column residual {cols:e}, Σd² = {sum}")
    }))
}

/// `⟨Ind χ, ψ⟩_G = ⟨χ, Res ψ⟩_H` for all irreducible pairs, after rounding.
pub fn frobenius_reciprocity(p: &CorpusPair, cfg: &Config) -> Result<Outcome> {
    let tg = CharacterTable::compute(&p.group, cfg)?;
    let th = CharacterTable::compute(&p.subgroup, cfg)?;
    for (a, chi) in th.irreducibles.iter().enumerate() {
        let ind = induce(chi, &tg.classes)?;
        for (b, psi) in tg.irreducibles.iter().enumerate() {
            let lhs = multiplicity(&ind, psi, cfg.tol_mult)?;
            let rhs = multiplicity(chi, &restrict(psi, &th.classes)?, cfg.tol_mult)?;
            if lhs != rhs {
                return Ok(Outcome::Fail(format!("H irrep {a}, G irrep {b}: {lhs} vs {rhs}")));
            }
        }
        let _ = inner_product(&ind, &ind)?;
    }
    Ok(Outcome::Pass)
}

/// Character route against the brute-force oracle, with `G₀` ranging over `H` and `G`.
pub fn commutant_agreement(p: &CorpusPair, k: usize, side: Side, cfg: &Config) -> Result<Outcome> {
    for g0 in [&p.subgroup, &p.group] {
        let by_chars = relative_commutant_dim(&p.group, g0, &p.subgroup, k, side, cfg)?;
        let oracle = match brute_force_commutant_dim(&p.group, g0, &p.subgroup, k, side, cfg) {
            Err(Error::CapExceeded { .. }) => return Ok(Outcome::Skip("oracle cap".into())),
            other => other?,
        };
        if by_chars != oracle {
            return Ok(Outcome::Fail(format!(
                "G0 of order {}: characters give {by_chars}, oracle gives {oracle}",
                g0.order()
            )));
        }
    }
    Ok(Outcome::Pass)
}

fn conjugation_cocycle() -> Result<Cocycle2> {
    let s3 = PermGroup::generate(3, vec![Permutation::parse_cycles("(0 1)", 3)?, Permutation::parse_cycles("(0 1 2)", 3)?], &Config::default())?;
    let v = CayleyTable::of_group(&s3);
    let t = v.index_of(&Permutation::parse_cycles("(0 1)", 3)?).expect("element");
    let z2 = CayleyTable::of_group(&PermGroup::generate(2, vec![Permutation::parse_cycles("(0 1)", 2)?], &Config::default())?);
    let id: Vec<usize> = (0..v.order()).collect();
    let ad: Vec<usize> = (0..v.order()).map(|x| v.conj(t, x)).collect();
    Cocycle2::trivial(z2, v, vec![id, ad])
}

/// The extension of `A4` by `Out(A4)`.
pub fn a4_extension(cfg: &Config) -> Result<Outcome> {
    let ext = extension_from_out(&named_group("A4", cfg)?, &[1], cfg)?;
    let hist: Vec<(usize, usize)> = ext.fingerprint().into_iter().collect();
    let image = ext.embedding.image()?;
    // 1 → G → H → Γ₀ → 1: the image is normal, injective, of the right index,
    // and the lifts hit distinct cosets of it.
    let exact = ext.embedding.is_injective()
        && image.is_normal_in(&ext.realized)
        && ext.realized.order() == image.order() * ext.index
        && ext.lifts.iter().enumerate().all(|(a, x)| {
            ext.lifts[..a].iter().all(|y| !image.contains(&(&y.inverse() * x)))
        });
    let crossed = crossed_product_check(&ext.realized, &image, &image, RepRule::Simplest)?;
    let crossed_full = crossed_product_check(&ext.realized, &image, &ext.realized, RepRule::Maximal)?;
    let ok = ext.realized.order() == 24
        && ext.index == 2
        && hist == [(1, 1), (2, 9), (3, 8), (4, 6)]
        && ext.outerness
        && ext.cocycle.verify().holds
        && crossed_relations_hold(&ext)
        && exact
        && crossed.holds
        && crossed_full.holds;
    Ok(Outcome::check(ok, || {
        format!(
            "order {}, index {}, histogram {hist:?}, outer {}, crossed {}/{}",
            ext.realized.order(),
            ext.index,
            ext.outerness,
            crossed.holds,
            crossed_full.holds
        )
    }))
}

pub fn crossed_product_both_rules(group: &PermGroup, normal: &PermGroup, middle: &PermGroup) -> Result<Outcome> {
    for rule in [RepRule::Simplest, RepRule::Maximal] {
        let r = crossed_product_check(group, normal, middle, rule)?;
        let expected_pairs = group.order() * group.order();
        if !r.holds || r.pairs_checked != expected_pairs {
            return Ok(Outcome::Fail(format!("{rule:?}: {r:?}")));
        }
    }
    Ok(Outcome::Pass)
}

pub fn spectrum_examples(tol: f64) -> Result<Outcome> {
    let expect = [
        (1.0, SpectrumKind::Discrete { n: 3 }),
        (2.0, SpectrumKind::Discrete { n: 4 }),
        (3.0, SpectrumKind::Discrete { n: 6 }),
        (3.5, SpectrumKind::NotInSpectrum),
        (4.7, SpectrumKind::Continuous),
    ];
    for (x, kind) in expect {
        let got = jones_spectrum_query(x, tol)?.kind;
        if got != kind {
            return Ok(Outcome::Fail(format!("{x}: {got:?}, expected {kind:?}")));
        }
    }
    Ok(Outcome::Pass)
}

pub fn virtual_index_examples() -> Result<Outcome> {
    let spec = |t, parts: &[(u64, u64, u64)]| VirtualEmbeddingSpec {
        t,
        parts: parts
            .iter()
            .map(|&(s, index_g_k, index_h_gamma_k)| VirtualPart {
                s,
                index_g_k,
                index_h_gamma_k,
            })
            .collect(),
    };
    let got = [
        virtual_index(&spec(1, &[(1, 1, 1)]))?,
        virtual_index(&spec(2, &[(1, 2, 5)]))?,
        virtual_index(&spec(3, &[(1, 1, 2), (1, 2, 3)]))?,
    ];
    let rejected = matches!(virtual_index(&spec(4, &[(1, 2, 5)])), Err(Error::ConstraintViolated(_)));
    Ok(Outcome::check(got == [1, 10, 15] && rejected, || format!("{got:?}, rejected {rejected}")))
}

/// `L(K) ⊂ L(H) ⊂ L(G)` for `K` the normal core and the trivial subgroup.
pub fn index_chains(p: &CorpusPair) -> Result<Outcome> {
    let core = normal_core(&p.group, &p.subgroup)?;
    for k in [core, PermGroup::trivial(p.group.degree())] {
        let (g, h, kk) = (p.group.order(), p.subgroup.order(), k.order());
        let (mn, mr, rn) = ((g / kk) as f64, (g / h) as f64, (h / kk) as f64);
        if mn != mr * rn || !index_chain_check(mn, mr, rn) {
            return Ok(Outcome::Fail(format!("chain ({mn}, {mr}, {rn})")));
        }
    }
    Ok(Outcome::Pass)
}

/// `Ind_K^G` of the inclusion with the trivial representation.
pub fn induced_check(group: &PermGroup, k: &PermGroup) -> Result<Outcome> {
    let gamma = GroupHomomorphism::inclusion(k, group)?;
    let ind = InducedHomomorphism::new(group, &gamma, &MatrixRep::trivial(k))?;
    let report = ind.verify()?;
    Ok(Outcome::check(report.holds(), || format!("{report:?}")))
}
