//! The verification harness: the eigenvalue, quasi-idempotent and
//! trace-identity suites checked by brute force in the Hecke algebra, and
//! closed-form cross-checks of the Schur elements.

use std::fmt;

use num_bigint::BigInt;

use crate::combinatorics::{all_bipartitions, partitions, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::hecke::{
    oracle_f, oracle_f_mod, verify_quasi_idempotent, verify_trace_identity, ModularPoint,
};
use crate::par::Exec;
use crate::schur::{f_poly, f_poly_one_param, g_poly, schur_bipartition, schur_type_a};

/// Largest rank accepted for the type-B oracle suites.
pub const MAX_ORACLE_BOUND: usize = 5;

/// Ranks up to which the eigenvalue oracle runs in exact arithmetic; above
/// it the oracle is evaluated modulo a prime.
pub const EXACT_ORACLE_RANK: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Suite {
    /// The oracle eigenvalue equals `f_λ` from the Schur-element formula.
    Eigenvalue,
    /// `z_μ T_{w_{μ'}} z_μ = v^{ℓ(w_μ)} s_μ z_μ` in type A.
    QuasiIdempotent,
    /// The trace of the Specht generator against `T_{w_{λ̂'}}` is a monomial.
    TraceIdentity,
    /// Schur elements at `v = ṽ = 1`, `f_λ(1) = 2^n`, and `g_β² = f_{(β,β)}`.
    Schur,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Eigenvalue,
        Suite::QuasiIdempotent,
        Suite::TraceIdentity,
        Suite::Schur,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eigenvalue => "eigenvalue",
            Suite::QuasiIdempotent => "quasi-idempotent",
            Suite::TraceIdentity => "trace-identity",
            Suite::Schur => "schur",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest rank for every suite.
    pub max_n: usize,
    /// Largest rank for the type-B oracle suites (eigenvalue, trace).
    pub oracle_bound: usize,
    /// Run a single suite instead of all of them.
    pub only: Option<Suite>,
    pub exec: Exec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_n: 4,
            oracle_bound: 4,
            only: None,
            exec: Exec::default(),
        }
    }
}

/// One checked instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub instance: String,
    /// `None` on success, else what went wrong.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} {}", self.suite.name(), self.instance),
            Some(why) => write!(f, "FAIL {} {}: {why}", self.suite.name(), self.instance),
        }
    }
}

#[derive(Clone, Debug)]
enum Instance {
    Eigenvalue(Bipartition),
    QuasiIdempotent(Partition),
    TraceIdentity(Bipartition),
    SchurBipartition(Bipartition),
    SchurTypeA(Partition),
    SquareRoot(Partition),
}

fn check(instance: &Instance) -> CheckOutcome {
    let (suite, label, result) = match instance {
        Instance::Eigenvalue(l) => (Suite::Eigenvalue, l.to_string(), check_eigenvalue(l)),
        Instance::QuasiIdempotent(mu) => (
            Suite::QuasiIdempotent,
            mu.to_string(),
            expect(verify_quasi_idempotent(mu), "sides differ"),
        ),
        Instance::TraceIdentity(l) => (
            Suite::TraceIdentity,
            l.to_string(),
            expect(
                verify_trace_identity(l),
                "trace is not the predicted monomial",
            ),
        ),
        Instance::SchurBipartition(l) => (Suite::Schur, l.to_string(), check_schur_bipartition(l)),
        Instance::SchurTypeA(l) => (Suite::Schur, l.to_string(), check_schur_type_a(l)),
        Instance::SquareRoot(b) => (Suite::Schur, format!("g_{b}"), check_square_root(b)),
    };
    CheckOutcome {
        suite,
        instance: label,
        failure: result.err().map(|e| e.to_string()),
    }
}

fn expect(r: Result<bool>, why: &str) -> Result<()> {
    if r? {
        Ok(())
    } else {
        Err(Error::IdentityFailed(why.to_string()))
    }
}

fn check_eigenvalue(l: &Bipartition) -> Result<()> {
    let f = f_poly(l)?;
    if l.size() <= EXACT_ORACLE_RANK {
        let oracle = oracle_f(l)?;
        if oracle != f {
            return Err(Error::InconsistentEigenvalue(format!(
                "oracle gives {oracle}, formula gives {f}"
            )));
        }
    } else {
        let pt = ModularPoint::default();
        let (oracle, formula) = (oracle_f_mod(l, pt)?, pt.eval(&f));
        if oracle != formula {
            return Err(Error::InconsistentEigenvalue(format!(
                "mod p at (v, ṽ) = ({}, {}): oracle {oracle}, formula {formula}",
                pt.v, pt.tv
            )));
        }
    }
    Ok(())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn check_schur_bipartition(l: &Bipartition) -> Result<()> {
    let n = l.size();
    let order = BigInt::from(2).pow(n as u32) * factorial(n);
    let dim = factorial(n) / (factorial(l.a()) * factorial(n - l.a()))
        * BigInt::from(l.first.count_standard_tableaux())
        * BigInt::from(l.second.count_standard_tableaux());
    let s1 = schur_bipartition(l).eval_at_one();
    if s1 * &dim != order {
        return Err(Error::IdentityFailed(format!(
            "s_λ(1,1) · dim ≠ |W(B_{n})|"
        )));
    }
    let f1 = f_poly(l)?.eval_at_one();
    if f1 != BigInt::from(2).pow(n as u32) {
        return Err(Error::IdentityFailed(format!(
            "f_λ(1,1) = {f1}, expected 2^{n}"
        )));
    }
    Ok(())
}

fn check_schur_type_a(l: &Partition) -> Result<()> {
    let m = l.size();
    if schur_type_a(l).eval_at_one() * BigInt::from(l.count_standard_tableaux()) != factorial(m) {
        return Err(Error::IdentityFailed(format!("s_λ(1) · dim ≠ {m}!")));
    }
    Ok(())
}

fn check_square_root(b: &Partition) -> Result<()> {
    let g = g_poly(b)?;
    let f = f_poly_one_param(&Bipartition::new(b.clone(), b.clone()))?;
    if g.pow(2) != f {
        return Err(Error::NotASquare(format!("g² ≠ f for {b}")));
    }
    Ok(())
}

fn instances(cfg: &VerifyConfig, suite: Suite) -> Vec<Instance> {
    let oracle_n = cfg.max_n.min(cfg.oracle_bound);
    match suite {
        Suite::Eigenvalue => (1..=oracle_n)
            .flat_map(all_bipartitions)
            .map(Instance::Eigenvalue)
            .collect(),
        Suite::QuasiIdempotent => (1..=cfg.max_n)
            .flat_map(partitions)
            .map(Instance::QuasiIdempotent)
            .collect(),
        Suite::TraceIdentity => (1..=oracle_n)
            .flat_map(all_bipartitions)
            .map(Instance::TraceIdentity)
            .collect(),
        Suite::Schur => {
            let mut out: Vec<Instance> = (1..=cfg.max_n)
                .flat_map(partitions)
                .map(Instance::SchurTypeA)
                .collect();
            out.extend(
                (1..=cfg.max_n)
                    .flat_map(all_bipartitions)
                    .map(Instance::SchurBipartition),
            );
            out.extend(
                (1..=cfg.max_n / 2)
                    .flat_map(partitions)
                    .map(Instance::SquareRoot),
            );
            out
        }
    }
}

/// Runs the selected suites and returns one outcome per instance, in a fixed
/// order (suite, then rank, then label) independent of scheduling.
pub fn run_verify(cfg: &VerifyConfig) -> Result<Vec<CheckOutcome>> {
    if cfg.oracle_bound > MAX_ORACLE_BOUND {
        return Err(Error::InvalidInput(format!(
            "oracle bound {} exceeds {MAX_ORACLE_BOUND}",
            cfg.oracle_bound
        )));
    }
    let suites: Vec<Suite> = match cfg.only {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let all: Vec<Instance> = suites.into_iter().flat_map(|s| instances(cfg, s)).collect();
    Ok(cfg.exec.map(&all, check))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let out = run_verify(&VerifyConfig {
            max_n: 2,
            ..Default::default()
        })
        .unwrap();
        assert!(out.iter().all(CheckOutcome::passed));
        assert!(out.iter().any(|o| o.suite == Suite::Eigenvalue));
        assert_eq!(out[0].to_string(), "PASS eigenvalue ([1]|[])");
    }

    #[test]
    fn only_selects_a_suite() {
        let cfg = VerifyConfig {
            max_n: 3,
            only: Some(Suite::QuasiIdempotent),
            ..Default::default()
        };
        let out = run_verify(&cfg).unwrap();
        assert_eq!(out.len(), 1 + 2 + 3);
        assert!(out
            .iter()
            .all(|o| o.suite == Suite::QuasiIdempotent && o.passed()));
    }

    #[test]
    fn oracle_bound_is_capped() {
        assert!(run_verify(&VerifyConfig {
            oracle_bound: 6,
            ..Default::default()
        })
        .is_err());
    }
}
