//! Principal and dual principal graphs of `L(H) ⊂ L(G)`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::character::{multiplicity, restrict, CharacterTable};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{DoubleCosetData, PermGroup};

/// Power-iteration stopping rule for graph norms.
const NORM_CONVERGENCE: f64 = 1e-12;
const NORM_MAX_ITERATIONS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphVertex {
    pub label: String,
    /// 0 for `G`; `i` for the stabilizer `K_i` (so `K_1 = H`); 0 for `H` on the odd side.
    pub group_index: usize,
    /// Position of the irreducible in its character table.
    pub irrep_index: usize,
    pub degree: u32,
}

/// A connected bipartite graph with edge multiplicities.
///
/// Both trivial-character vertices are recorded: `designated` is the even one,
/// `designated_odd` the odd one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BipartiteMultiGraph {
    pub even: Vec<GraphVertex>,
    pub odd: Vec<GraphVertex>,
    /// `(even index, odd index, multiplicity)`, sorted, multiplicities positive.
    pub edges: Vec<(usize, usize, u32)>,
    pub designated: String,
    pub designated_odd: String,
    pub norm_squared: f64,
}

impl BipartiteMultiGraph {
    /// Keeps the connected component of `even[designated]` and computes its norm.
    fn component(
        even: Vec<GraphVertex>,
        odd: Vec<GraphVertex>,
        edges: BTreeMap<(usize, usize), u32>,
        designated: usize,
        designated_odd: usize,
    ) -> Result<Self> {
        let mut even_adj = vec![Vec::new(); even.len()];
        let mut odd_adj = vec![Vec::new(); odd.len()];
        for &(e, o) in edges.keys() {
            even_adj[e].push(o);
            odd_adj[o].push(e);
        }
        let mut keep_even = vec![false; even.len()];
        let mut keep_odd = vec![false; odd.len()];
        keep_even[designated] = true;
        let mut queue = VecDeque::from([(true, designated)]);
        while let Some((is_even, v)) = queue.pop_front() {
            if is_even {
                for &o in &even_adj[v] {
                    if !keep_odd[o] {
                        keep_odd[o] = true;
                        queue.push_back((false, o));
                    }
                }
            } else {
                for &e in &odd_adj[v] {
                    if !keep_even[e] {
                        keep_even[e] = true;
                        queue.push_back((true, e));
                    }
                }
            }
        }
        if !keep_odd[designated_odd] {
            return Err(Error::InvariantViolation(
                "trivial odd vertex is not connected to the designated vertex".into(),
            ));
        }
        let remap = |keep: &[bool]| {
            let mut next = 0;
            keep.iter()
                .map(|&k| {
                    if k {
                        next += 1;
                        Some(next - 1)
                    } else {
                        None
                    }
                })
                .collect::<Vec<_>>()
        };
        let even_map = remap(&keep_even);
        let odd_map = remap(&keep_odd);
        let designated_label = even[designated].label.clone();
        let designated_odd_label = odd[designated_odd].label.clone();
        let mut graph = BipartiteMultiGraph {
            even: even
                .into_iter()
                .zip(&keep_even)
                .filter(|(_, &k)| k)
                .map(|(v, _)| v)
                .collect(),
            odd: odd
                .into_iter()
                .zip(&keep_odd)
                .filter(|(_, &k)| k)
                .map(|(v, _)| v)
                .collect(),
            edges: edges
                .into_iter()
                .filter_map(|((e, o), m)| Some((even_map[e]?, odd_map[o]?, m)))
                .collect(),
            designated: designated_label,
            designated_odd: designated_odd_label,
            norm_squared: 0.0,
        };
        graph.norm_squared = graph.compute_norm_squared()?;
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    /// Number of distinct adjacent pairs.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity(&self, even_label: &str, odd_label: &str) -> u32 {
        let e = self.even.iter().position(|v| v.label == even_label);
        let o = self.odd.iter().position(|v| v.label == odd_label);
        match (e, o) {
            (Some(e), Some(o)) => self
                .edges
                .iter()
                .find(|&&(a, b, _)| a == e && b == o)
                .map(|&(_, _, m)| m)
                .unwrap_or(0),
            _ => 0,
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        let off = self.even.len();
        for &(e, o, _) in &self.edges {
            adj[e].push(off + o);
            adj[off + o].push(e);
        }
        let mut seen = vec![false; adj.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Largest eigenvalue of `Λ Λ^T` by power iteration, i.e. `‖Λ‖²`.
    pub fn compute_norm_squared(&self) -> Result<f64> {
        let ne = self.even.len();
        let no = self.odd.len();
        let mut v = vec![1.0 / (ne as f64).sqrt(); ne];
        let mut lambda = 0.0;
        for _ in 0..NORM_MAX_ITERATIONS {
            let mut w_odd = vec![0.0; no];
            for &(e, o, m) in &self.edges {
                w_odd[o] += m as f64 * v[e];
            }
            let mut w = vec![0.0; ne];
            for &(e, o, m) in &self.edges {
                w[e] += m as f64 * w_odd[o];
            }
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 {
                return Ok(0.0);
            }
            for x in &mut w {
                *x /= norm;
            }
            let converged = (norm - lambda).abs() <= NORM_CONVERGENCE * norm;
            lambda = norm;
            v = w;
            if converged {
                return Ok(lambda);
            }
        }
        Err(Error::NumericalDegeneracy {
            message: "graph norm power iteration did not converge".into(),
            residual: NORM_CONVERGENCE,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Graphviz rendering with the two halves on separate ranks.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        out.push_str("  rankdir=TB;\n  node [shape=circle];\n");
        let node = |out: &mut String, v: &GraphVertex, shape: &str, designated: bool| {
            let extra = if designated { ", peripheries=2" } else { "" };
            let _ = writeln!(
                out,
                "    \"{}\" [label=\"{}\\nd={}\", shape={shape}{extra}];",
                v.label, v.label, v.degree
            );
        };
        out.push_str("  subgraph even {\n    rank=same;\n");
        for v in &self.even {
            node(&mut out, v, "circle", v.label == self.designated);
        }
        out.push_str("  }\n  subgraph odd {\n    rank=same;\n");
        for v in &self.odd {
            node(&mut out, v, "box", v.label == self.designated_odd);
        }
        out.push_str("  }\n");
        for &(e, o, m) in &self.edges {
            let label = if m > 1 { format!(" [label=\"{m}\"]") } else { String::new() };
            let _ = writeln!(out, "  \"{}\" -- \"{}\"{label};", self.even[e].label, self.odd[o].label);
        }
        out.push_str("}\n");
        out
    }
}

fn vertices(table: &CharacterTable, prefix: &str, group_index: usize) -> Vec<GraphVertex> {
    table
        .degrees
        .iter()
        .enumerate()
        .map(|(r, &d)| GraphVertex {
            label: format!("{prefix}.{r}"),
            group_index,
            irrep_index: r,
            degree: d,
        })
        .collect()
}

/// Even vertices: irreducibles of each `K_i = H ∩ g_i^-1 H g_i` over the double
/// coset representatives. Odd vertices: irreducibles of `H`. An edge of
/// multiplicity `m` joins `ρ₀ ∈ K̂_i` and `ρ₁ ∈ Ĥ` when `⟨Res_{K_i} ρ₁, ρ₀⟩ = m`.
pub fn principal_graph(group: &PermGroup, subgroup: &PermGroup, cfg: &Config) -> Result<BipartiteMultiGraph> {
    let dc = DoubleCosetData::new(group, subgroup)?;
    let h_table = CharacterTable::compute(subgroup, cfg)?;
    let odd = vertices(&h_table, "H", 0);
    let mut even = Vec::new();
    let mut edges = BTreeMap::new();
    for (i, k) in dc.stabilizers.iter().enumerate() {
        let k_table = CharacterTable::compute(k, cfg)?;
        let offset = even.len();
        even.extend(vertices(&k_table, &format!("K{}", i + 1), i + 1));
        for (o, rho1) in h_table.irreducibles.iter().enumerate() {
            let res = restrict(rho1, &k_table.classes)?;
            for (r, rho0) in k_table.irreducibles.iter().enumerate() {
                let m = multiplicity(&res, rho0, cfg.tol_mult)?;
                if m > 0 {
                    edges.insert((offset + r, o), m);
                }
            }
        }
    }
    BipartiteMultiGraph::component(even, odd, edges, 0, 0)
}

/// Even vertices: irreducibles of `G`; odd: irreducibles of `H`; edges by
/// `⟨Res_H ρ₀, ρ₁⟩`.
pub fn dual_principal_graph(group: &PermGroup, subgroup: &PermGroup, cfg: &Config) -> Result<BipartiteMultiGraph> {
    subgroup.ensure_subgroup_of(group, "dual principal graph")?;
    let g_table = CharacterTable::compute(group, cfg)?;
    let h_table = CharacterTable::compute(subgroup, cfg)?;
    let even = vertices(&g_table, "G", 0);
    let odd = vertices(&h_table, "H", 0);
    let mut edges = BTreeMap::new();
    for (e, rho0) in g_table.irreducibles.iter().enumerate() {
        let res = restrict(rho0, &h_table.classes)?;
        for (o, rho1) in h_table.irreducibles.iter().enumerate() {
            let m = multiplicity(&res, rho1, cfg.tol_mult)?;
            if m > 0 {
                edges.insert((e, o), m);
            }
        }
    }
    BipartiteMultiGraph::component(even, odd, edges, 0, 0)
}
