use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Resource caps and numerical tolerances shared by every operation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Config {
    /// Largest group order that will be enumerated.
    pub order_cap: usize,
    /// Largest group order for which `Aut(G)` is searched.
    pub aut_cap: usize,
    /// Largest tuple length `k` for the `Θ^(k)` machinery.
    pub theta_k_cap: usize,
    /// Bound on `|G| * t^k` for the brute-force commutant oracle.
    pub oracle_cap: usize,
    /// Largest number of conjugacy classes for character tables.
    pub class_cap: usize,
    pub tol_char: f64,
    pub tol_mult: f64,
    pub tol_norm: f64,
    pub tol_spectrum: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order_cap: 5000,
            aut_cap: 300,
            theta_k_cap: 3,
            oracle_cap: 20000,
            class_cap: 64,
            tol_char: 1e-9,
            tol_mult: 1e-6,
            tol_norm: 1e-6,
            tol_spectrum: 1e-9,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        let caps = [
            ("order_cap", self.order_cap),
            ("aut_cap", self.aut_cap),
            ("theta_k_cap", self.theta_k_cap),
            ("oracle_cap", self.oracle_cap),
            ("class_cap", self.class_cap),
        ];
        for (name, v) in caps {
            if v == 0 {
                return Err(Error::Precondition(format!("{name} must be positive")));
            }
        }
        let tols = [
            ("tol_char", self.tol_char),
            ("tol_mult", self.tol_mult),
            ("tol_norm", self.tol_norm),
            ("tol_spectrum", self.tol_spectrum),
        ];
        for (name, v) in tols {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Precondition(format!("{name} must be positive and finite")));
            }
        }
        Ok(())
    }
}
