//! Sweeps comparing formulas with the brute-force oracle and with each
//! other. Used by the acceptance tests and the command-line `verify` and
//! `selftest` commands.

mod acceptance;
mod boundary;
mod chambers;
mod kernel;
mod lgv;
mod motzkin;
mod orthopoly;
mod plane;
mod qcount;
mod turns;

pub use acceptance::*;
pub use boundary::*;
pub use chambers::*;
pub use kernel::*;
pub use lgv::*;
pub use motzkin::*;
pub use orthopoly::*;
pub use plane::*;
pub use qcount::*;
pub use turns::*;

use std::fmt;
use std::time::Instant;

/// Outcome of a sweep: how many cases ran and which ones disagreed.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub name: String,
    pub cases: usize,
    pub mismatches: Vec<String>,
    /// Largest distance to the nearest integer seen by a rounded
    /// floating-point formula, if any ran.
    pub max_residual: Option<f64>,
    pub seconds: f64,
}

/// Mismatch lists are capped; the count keeps going.
const KEEP: usize = 20;

impl Report {
    pub fn new(name: &str) -> Self {
        Report { name: name.to_string(), ..Default::default() }
    }

    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn check(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.mismatches.len() < KEEP {
            self.mismatches.push(case());
        }
    }

    /// Record an equality, formatting both sides on failure.
    pub fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, case: impl FnOnce() -> String) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {:?}, expected {:?}", case(), got, want));
    }

    pub fn residual(&mut self, r: f64) {
        self.max_residual = Some(self.max_residual.map_or(r, |m| m.max(r)));
    }

    pub fn merge(&mut self, o: Report) {
        self.cases += o.cases;
        for m in o.mismatches {
            if self.mismatches.len() < KEEP {
                self.mismatches.push(format!("[{}] {}", o.name, m));
            }
        }
        if let Some(r) = o.max_residual {
            self.residual(r);
        }
    }

    pub(crate) fn timed(mut self, start: Instant) -> Self {
        self.seconds = start.elapsed().as_secs_f64();
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{} {} ({} cases", status, self.name, self.cases)?;
        if let Some(r) = self.max_residual {
            write!(f, ", max residual {:.1e}", r)?;
        }
        write!(f, ", {:.2}s)", self.seconds)?;
        for m in &self.mismatches {
            write!(f, "\n    {}", m)?;
        }
        Ok(())
    }
}

/// Integer weights drawn uniformly from `lo..=hi` for heights `0..=levels`.
pub(crate) fn random_weighting(
    rng: &mut impl rand::Rng,
    levels: usize,
    lo: i64,
    hi: i64,
) -> crate::motzkin::MotzkinWeighting<crate::Integer> {
    let b = (0..=levels).map(|_| crate::Integer::from(rng.gen_range(lo..=hi))).collect();
    let l = (0..levels).map(|_| crate::Integer::from(rng.gen_range(lo..=hi))).collect();
    crate::motzkin::MotzkinWeighting::new(b, l)
}
