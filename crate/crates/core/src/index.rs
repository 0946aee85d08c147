//! Jones-index arithmetic.

use std::f64::consts::PI;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupHomomorphism, PermGroup};

/// Slack for the inequality checks below.
const CHECK_TOL: f64 = 1e-12;

/// `4 cos²(π/n)`.
pub fn jones_value(n: u64) -> f64 {
    4.0 * (PI / n as f64).cos().powi(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SpectrumKind {
    Discrete { n: u64 },
    Continuous,
    NotInSpectrum,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumVerdict {
    #[serde(flatten)]
    pub kind: SpectrumKind,
    pub value: f64,
    /// Distance to the matched or nearest spectrum point.
    pub residual: f64,
}

impl std::fmt::Display for SpectrumVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            SpectrumKind::Discrete { n } => write!(f, "discrete n={n} residual={:e}", self.residual),
            SpectrumKind::Continuous => write!(f, "continuous"),
            SpectrumKind::NotInSpectrum => write!(f, "not-in-spectrum residual={:e}", self.residual),
        }
    }
}

/// Locates `x` in `{4cos²(π/n) : n ≥ 3} ∪ [4, ∞)`.
///
/// Discrete points crowd towards 4, so for large `n` several of them can lie
/// within `tol` of `x`; the nearest wins and the residual is reported.
pub fn jones_spectrum_query(x: f64, tol: f64) -> Result<SpectrumVerdict> {
    if !x.is_finite() || !tol.is_finite() || tol < 0.0 {
        return Err(Error::Precondition(format!("spectrum query needs finite input, got x={x}, tol={tol}")));
    }
    let verdict = |kind, residual| SpectrumVerdict { kind, value: x, residual };
    if x >= 4.0 - CHECK_TOL {
        return Ok(verdict(SpectrumKind::Continuous, 0.0_f64.max(4.0 - x)));
    }
    // Scan until the values pass x; distances only grow after that.
    let mut best = (3, (x - jones_value(3)).abs());
    let mut n = 3;
    loop {
        let v = jones_value(n);
        let d = (x - v).abs();
        if d < best.1 {
            best = (n, d);
        }
        if v > x + tol || (v > x && d > best.1) {
            break;
        }
        n += 1;
    }
    if best.1 <= tol {
        Ok(verdict(SpectrumKind::Discrete { n: best.0 }, best.1))
    } else if x >= 4.0 - tol {
        Ok(verdict(SpectrumKind::Continuous, 4.0 - x))
    } else {
        Ok(verdict(SpectrumKind::NotInSpectrum, best.1.min(4.0 - x)))
    }
}

/// One summand `(s_i, [G:K_i], [H:γ_i(K_i)])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualPart {
    pub s: u64,
    pub index_g_k: u64,
    pub index_h_gamma_k: u64,
}

impl VirtualPart {
    /// Reads the indices off concrete data: `K ≤ G` and an injective `γ: K → H`.
    pub fn from_concrete(group: &PermGroup, gamma: &GroupHomomorphism, s: u64) -> Result<Self> {
        gamma.domain.ensure_subgroup_of(group, "virtual embedding part")?;
        if !gamma.is_injective() {
            return Err(Error::Precondition("gamma must be injective".into()));
        }
        let image = gamma.image()?;
        Ok(VirtualPart {
            s,
            index_g_k: (group.order() / gamma.domain.order()) as u64,
            index_h_gamma_k: (gamma.codomain.order() / image.order()) as u64,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualEmbeddingSpec {
    pub t: u64,
    pub parts: Vec<VirtualPart>,
}

/// `t Σ_i s_i [H:γ_i(K_i)]`, after checking `Σ_i s_i [G:K_i] = t`.
pub fn virtual_index(spec: &VirtualEmbeddingSpec) -> Result<u64> {
    if spec.t == 0 || spec.parts.is_empty() {
        return Err(Error::Precondition("t must be positive and at least one part is required".into()));
    }
    if spec
        .parts
        .iter()
        .any(|p| p.s == 0 || p.index_g_k == 0 || p.index_h_gamma_k == 0)
    {
        return Err(Error::Precondition("every part needs positive entries".into()));
    }
    let overflow = || Error::Precondition("index arithmetic overflows 64 bits".into());
    let mut lhs: u64 = 0;
    let mut sum: u64 = 0;
    for p in &spec.parts {
        lhs = p.s.checked_mul(p.index_g_k).and_then(|v| v.checked_add(lhs)).ok_or_else(overflow)?;
        sum = p.s.checked_mul(p.index_h_gamma_k).and_then(|v| v.checked_add(sum)).ok_or_else(overflow)?;
    }
    if lhs != spec.t {
        return Err(Error::ConstraintViolated(format!(
            "sum of s_i [G:K_i] is {lhs} but t is {}",
            spec.t
        )));
    }
    spec.t.checked_mul(sum).ok_or_else(overflow)
}

/// `Σ_i [p_i M p_i : N p_i] / tr(p_i)` over projections with traces summing to 1.
pub fn local_index_combine(parts: &[(Rational64, f64)]) -> Result<f64> {
    if parts.is_empty() {
        return Err(Error::Precondition("at least one projection is required".into()));
    }
    let mut total = Rational64::zero();
    for (tr, idx) in parts {
        if *tr <= Rational64::zero() || *tr > Rational64::one() {
            return Err(Error::Precondition(format!("trace {tr} is not in (0, 1]")));
        }
        if !idx.is_finite() || *idx <= 0.0 {
            return Err(Error::Precondition(format!("local index {idx} is not positive")));
        }
        total += tr;
    }
    if total != Rational64::one() {
        return Err(Error::ConstraintViolated(format!("traces sum to {total}, not 1")));
    }
    Ok(parts
        .iter()
        .map(|(tr, idx)| idx * *tr.denom() as f64 / *tr.numer() as f64)
        .sum())
}

/// `max([M:R], [R:N]) ≤ [M:N] ≤ [M:R][R:N]`.
pub fn index_chain_check(idx_mn: f64, idx_mr: f64, idx_rn: f64) -> bool {
    let valid = [idx_mn, idx_mr, idx_rn].iter().all(|v| v.is_finite() && *v > 0.0);
    valid && idx_mr.max(idx_rn) <= idx_mn + CHECK_TOL && idx_mn <= idx_mr * idx_rn + CHECK_TOL
}

/// `dim(N' ∩ M) ≤ [M:N] + 1`.
pub fn commutant_bound_check(dim: u64, idx: f64) -> bool {
    dim as f64 <= idx + 1.0 + CHECK_TOL
}
