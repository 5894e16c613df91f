use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::{hi_cyclic, oracle};
use crate::casimir::CasimirData;
use crate::fusion::FusionRing;
use crate::linalg::QuadExt;
use crate::reps::codegree_report_on;

/// A quantity compared between the computation and the closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Axioms,
    Casimir,
    Determinant,
    Codegrees,
    CodegreeSum,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Quantity::Axioms => "axioms",
            Quantity::Casimir => "casimir",
            Quantity::Determinant => "determinant",
            Quantity::Codegrees => "codegrees",
            Quantity::CodegreeSum => "codegree-sum",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub n: usize,
    pub casimir: Option<BigInt>,
    pub expected_casimir: BigInt,
    pub determinant: BigInt,
    pub expected_determinant: BigInt,
    /// Exact codegrees, descending; `None` when some codegree had no exact value.
    pub codegrees: Option<Vec<QuadExt>>,
    pub expected_codegrees: Vec<QuadExt>,
    pub codegree_sum: Option<QuadExt>,
    pub expected_codegree_sum: BigRational,
    /// Pseudo-unitarity verdict, when the codegree report could be built.
    pub verdict: Option<bool>,
    pub mismatches: Vec<Quantity>,
}

impl SweepRow {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares a ring claimed to be `HI_{Z_n}` against the closed forms for `n`.
pub fn check_ring_against_oracle(n: usize, ring: &Arc<FusionRing>) -> SweepRow {
    let o = oracle(n);
    let mut mismatches = Vec::new();
    if !ring.validate().is_empty() {
        mismatches.push(Quantity::Axioms);
    }
    let data = CasimirData::new(ring);
    let casimir = data.casimir_number().ok();
    if casimir.as_ref() != Some(&o.casimir) {
        mismatches.push(Quantity::Casimir);
    }
    let determinant = data.determinant();
    if determinant != o.determinant {
        mismatches.push(Quantity::Determinant);
    }
    let report = if ring.rank() == 2 * n {
        codegree_report_on(ring, n).ok()
    } else {
        None
    };
    let codegrees = report
        .as_ref()
        .and_then(|r| r.codegrees.iter().map(|f| f.exact.clone()).collect::<Option<Vec<_>>>());
    if codegrees.as_ref() != Some(&o.codegrees) {
        mismatches.push(Quantity::Codegrees);
    }
    let codegree_sum = report.as_ref().and_then(|r| r.sum_inverse_squares.clone());
    let sum_matches = codegree_sum
        .as_ref()
        .and_then(|s| s.as_rational())
        .is_some_and(|q| *q == o.codegree_sum);
    if !sum_matches {
        mismatches.push(Quantity::CodegreeSum);
    }
    SweepRow {
        n,
        casimir,
        expected_casimir: o.casimir,
        determinant,
        expected_determinant: o.determinant,
        codegrees,
        expected_codegrees: o.codegrees,
        codegree_sum,
        expected_codegree_sum: o.codegree_sum,
        verdict: report.map(|r| r.verdict),
        mismatches,
    }
}

/// Checks `HI_{Z_n}` for `n = 1..=n_max`.
pub fn sweep(n_max: usize) -> Vec<SweepRow> {
    (1..=n_max)
        .map(|n| check_ring_against_oracle(n, &Arc::new(hi_cyclic(n))))
        .collect()
}

/// [`sweep`] on `jobs` worker threads. Rows come back ordered by `n`.
pub fn sweep_par(n_max: usize, jobs: usize) -> Vec<SweepRow> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        (1..=n_max)
            .into_par_iter()
            .map(|n| check_ring_against_oracle(n, &Arc::new(hi_cyclic(n))))
            .collect()
    })
}
