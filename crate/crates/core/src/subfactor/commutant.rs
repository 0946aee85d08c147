//! Higher relative commutant dimensions.
//!
//! The character route decomposes the permutation action of `G₀` on `I^k`. The
//! brute-force route writes down the commutation equations against `Θ^(k)(u_g)`
//! entry by entry and takes an exact rational rank.
//!
//! Over a finite group the full commutant of the amplified algebra also contains
//! central group-algebra elements, which have no counterpart for ICC groups. The
//! oracle therefore uses the entry shape `x_ij = c_ij u_{g_i g_j^-1}` that carries
//! the whole commutant in the ICC setting.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraMatrix;
use crate::character::{inner_product, permutation_character, round_multiplicity, CharacterTable, ConjClasses};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{CosetData, GroupAction, PermGroup};
use crate::linalg::Echelon;
use crate::perm::Permutation;

use super::theta::ThetaMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// Inside the amplification of `L(G)`.
    InG,
    /// Inside the amplification of `L(H)`.
    InH,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "in-g" | "g" | "G" => Ok(Side::InG),
            "in-h" | "h" | "H" => Ok(Side::InH),
            other => Err(Error::Parse(format!("unknown side {other:?}, expected in-g or in-h"))),
        }
    }
}

fn check_chain(group: &PermGroup, g0: &PermGroup, subgroup: &PermGroup) -> Result<()> {
    subgroup.ensure_subgroup_of(g0, "relative commutant (H in G0)")?;
    g0.ensure_subgroup_of(group, "relative commutant (G0 in G)")
}

/// Number of orbits of `action` on ordered pairs, `⟨π, π⟩`.
fn pair_orbit_count(action: &GroupAction) -> Result<usize> {
    let classes = ConjClasses::new(&action.group);
    let pi = permutation_character(&classes, action)?;
    Ok(round_multiplicity(inner_product(&pi, &pi)?, 1e-6)? as usize)
}

/// Dimension of the `k`-th relative commutant of `L(G₀)` on the chosen side,
/// from character inner products.
pub fn relative_commutant_dim(
    group: &PermGroup,
    g0: &PermGroup,
    subgroup: &PermGroup,
    k: usize,
    side: Side,
    cfg: &Config,
) -> Result<usize> {
    check_chain(group, g0, subgroup)?;
    let cosets = CosetData::new(group, subgroup)?;
    match side {
        Side::InG => {
            let theta = ThetaMap::new(&cosets, k, cfg)?;
            let action = theta.tuple_action()?.restrict(g0)?;
            let table = CharacterTable::compute(g0, cfg)?;
            let pi = permutation_character(&table.classes, &action)?;
            Ok(table
                .decompose(&pi, cfg.tol_mult)?
                .into_iter()
                .map(|m| (m * m) as usize)
                .sum())
        }
        Side::InH => {
            // The tuple action is equivariant for `i ↦ H g_i` onto the k = 1 action;
            // the fibre over `m` is a copy of `I^{k-1}` acted on by the suffix action.
            let first = ThetaMap::new(&cosets, 1, cfg)?;
            ThetaMap::new(&cosets, k, cfg)?;
            let on_cosets = first.tuple_action()?.restrict(g0)?;
            let suffix = if k > 1 {
                Some(ThetaMap::new(&cosets, k - 1, cfg)?.tuple_action()?)
            } else {
                None
            };
            let mut total = 0;
            for m in on_cosets.orbit_representatives() {
                total += match &suffix {
                    Some(action) => {
                        let stab = on_cosets.stabilizer(m)?;
                        pair_orbit_count(&action.restrict(&stab)?)?
                    }
                    None => 1,
                };
            }
            Ok(total)
        }
    }
}

/// Symbolic group-algebra element: group element → (unknown → integer coefficient).
type Symbolic = BTreeMap<Permutation, BTreeMap<usize, i64>>;

fn integer_coefficients(m: &AlgebraMatrix, i: usize, j: usize) -> Result<Vec<(Permutation, i64)>> {
    m.get(i, j)
        .terms()
        .map(|(g, c)| {
            let r = c.re.round();
            if c.im != 0.0 || c.re != r {
                return Err(Error::InvariantViolation(format!("non-integer Θ coefficient {c}")));
            }
            Ok((g.clone(), r as i64))
        })
        .collect()
}

/// A nonzero matrix entry: its position and integer coefficients.
type Entry = (usize, Vec<(Permutation, i64)>);

/// Dimension of the solution space of `x Θ(u_g) = Θ(u_g) x` over generators `g` of
/// `G₀`, with `x_ij = c_ij u_{g_i g_j^-1}` and, on the `L(H)` side, `c_ij = 0`
/// unless `g_i g_j^-1 ∈ H`. The rank is exact.
pub fn brute_force_commutant_dim(
    group: &PermGroup,
    g0: &PermGroup,
    subgroup: &PermGroup,
    k: usize,
    side: Side,
    cfg: &Config,
) -> Result<usize> {
    check_chain(group, g0, subgroup)?;
    let cosets = CosetData::new(group, subgroup)?;
    let t = cosets.index();
    let size = (t as u128).pow(k as u32).saturating_mul(group.order() as u128);
    if size > cfg.oracle_cap as u128 {
        return Err(Error::CapExceeded {
            what: "oracle size |G|·t^k",
            limit: cfg.oracle_cap,
            actual: usize::try_from(size).unwrap_or(usize::MAX),
        });
    }
    let theta = ThetaMap::new(&cosets, k, cfg)?;
    let n = theta.tuple_count();

    // Unknown per admissible entry, and the group element it multiplies.
    let mut unknown = vec![None; n * n];
    let mut word = Vec::with_capacity(n * n);
    let mut count = 0;
    for i in 0..n {
        for j in 0..n {
            let w = theta.product(i) * &theta.product(j).inverse();
            if side == Side::InG || subgroup.contains(&w) {
                unknown[i * n + j] = Some(count);
                count += 1;
            }
            word.push(w);
        }
    }

    let mut echelon = Echelon::new();
    for g in g0.generators() {
        let m = theta.matrix(g)?;
        // Column `j` of Θ(u_g) and row `i` of Θ(u_g), as (position, coefficients).
        let mut cols: Vec<Vec<Entry>> = vec![Vec::new(); n];
        let mut rows: Vec<Vec<Entry>> = vec![Vec::new(); n];
        for (a, b) in m.nonzero_pattern() {
            let coeffs = integer_coefficients(&m, a, b)?;
            cols[b].push((a, coeffs.clone()));
            rows[a].push((b, coeffs));
        }
        for i in 0..n {
            for j in 0..n {
                let mut entry = Symbolic::new();
                let mut accumulate = |g: Permutation, var: usize, c: i64| {
                    let slot = entry.entry(g).or_default().entry(var).or_insert(0);
                    *slot += c;
                };
                // (x Θ)_ij = Σ_m x_im Θ_mj
                for (mid, coeffs) in &cols[j] {
                    if let Some(var) = unknown[i * n + mid] {
                        for (h, c) in coeffs {
                            accumulate(&word[i * n + mid] * h, var, *c);
                        }
                    }
                }
                // (Θ x)_ij = Σ_m Θ_im x_mj
                for (mid, coeffs) in &rows[i] {
                    if let Some(var) = unknown[mid * n + j] {
                        for (h, c) in coeffs {
                            accumulate(h * &word[mid * n + j], var, -*c);
                        }
                    }
                }
                for eq in entry.values() {
                    echelon.insert_integer_row(eq);
                }
            }
        }
    }
    Ok(count - echelon.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::from_cycles(3, &["(0 1)", "(0 1 2)"])
    }

    fn both(g: &PermGroup, g0: &PermGroup, h: &PermGroup, k: usize, side: Side) -> (usize, usize) {
        let cfg = Config::default();
        (
            relative_commutant_dim(g, g0, h, k, side, &cfg).unwrap(),
            brute_force_commutant_dim(g, g0, h, k, side, &cfg).unwrap(),
        )
    }

    #[test]
    fn transposition_examples() {
        let g = s3();
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        assert_eq!(both(&g, &h, &h, 1, Side::InH), (2, 2));
        assert_eq!(both(&g, &g, &h, 1, Side::InG), (2, 2));
    }

    #[test]
    fn trivial_inclusion_is_one_dimensional() {
        let g = s3();
        for k in 1..=3 {
            assert_eq!(relative_commutant_dim(&g, &g, &g, k, Side::InH, &Config::default()).unwrap(), 1);
        }
        assert_eq!(both(&g, &g, &g, 1, Side::InH), (1, 1));
        assert_eq!(both(&g, &g, &g, 1, Side::InG), (1, 1));
    }

    #[test]
    fn normal_subgroup_both_sides() {
        let g = s3();
        let a3 = PermGroup::from_cycles(3, &["(0 1 2)"]);
        for side in [Side::InG, Side::InH] {
            let (c, b) = both(&g, &g, &a3, 1, side);
            assert_eq!(c, b, "{side:?}");
        }
        let (c, b) = both(&g, &g, &a3, 2, Side::InG);
        assert_eq!(c, b);
    }

    #[test]
    fn chain_violation_is_a_precondition_error() {
        let g = s3();
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        let other = PermGroup::from_cycles(3, &["(1 2)"]);
        let err = relative_commutant_dim(&g, &other, &h, 1, Side::InG, &Config::default()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn oracle_respects_its_cap() {
        let g = s3();
        let h = PermGroup::from_cycles(3, &["(0 1)"]);
        let cfg = Config {
            oracle_cap: 10,
            ..Config::default()
        };
        let err = brute_force_commutant_dim(&g, &g, &h, 1, Side::InG, &cfg).unwrap_err();
        assert_eq!(err.exit_code(), 4);
    }
}
