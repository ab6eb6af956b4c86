//! The probability and estimate chain: case-conditional retention
//! factors, the telescoped retention product, the estimate
//! `tpe(n) = atpg_count(n) * tpr_ab(n)`, its expanded cubic product
//! form, and the simplified linear lower bound `3n + 3`.
//!
//! All products are accumulated in exact rational arithmetic; floating
//! point only appears at the display boundary and in the clearly-labeled
//! log-space approximation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::atp::{atpg_count, AtpPair, CaseKind};
use crate::error::{Error, Result};
use crate::ratio::{self, ExactRatio};

/// Retention factor for a classified pair: how much of the surviving
/// pair mass each case keeps under the 2/x exclusion model.
pub fn case_factor(pair: AtpPair, kind: CaseKind) -> ExactRatio {
    let a = BigInt::from(pair.a);
    let b = BigInt::from(pair.b);
    let one = ExactRatio::one();
    let fa = BigRational::new(&a - 2, a.clone());
    let fb = BigRational::new(&b - 2, b.clone());
    match kind {
        CaseKind::CaseI => fa * fb,
        CaseKind::CaseII => fa,
        CaseKind::CaseIII => fb,
        CaseKind::CaseIV => one,
    }
}

/// Incremental accumulator for the telescoped retention product
/// `prod_{i=1..n} (6i-3)/(6i+1)`, kept unreduced so each step is a
/// single small multiplication per side.
#[derive(Debug, Clone)]
pub struct TprAccumulator {
    next_i: u64,
    num: BigInt,
    den: BigInt,
}

impl TprAccumulator {
    pub fn new() -> Self {
        TprAccumulator { next_i: 1, num: BigInt::one(), den: BigInt::one() }
    }

    /// Fold in the next factor; returns the n the product now covers.
    pub fn step(&mut self) -> u64 {
        let i = self.next_i;
        self.num *= 6 * i - 3;
        self.den *= 6 * i + 1;
        self.next_i += 1;
        i
    }

    /// Current n covered by the product (0 before the first step).
    pub fn n(&self) -> u64 {
        self.next_i - 1
    }

    pub fn unreduced(&self) -> (&BigInt, &BigInt) {
        (&self.num, &self.den)
    }

    pub fn to_ratio(&self) -> ExactRatio {
        BigRational::new(self.num.clone(), self.den.clone())
    }
}

impl Default for TprAccumulator {
    fn default() -> Self {
        Self::new()
    }
}

/// The conservative retention probability `prod (6i-3)/(6i+1)`, exact
/// and in lowest terms.
pub fn tpr_ab(n: u64) -> Result<ExactRatio> {
    if n < 1 {
        return Err(Error::Domain("tpr_ab requires n >= 1".into()));
    }
    let mut acc = TprAccumulator::new();
    while acc.n() < n {
        acc.step();
    }
    Ok(acc.to_ratio())
}

/// Exact estimate `atpg_count(n) * tpr_ab(n)`.
pub fn tpe_exact(n: u64) -> Result<ExactRatio> {
    Ok(tpr_ab(n)? * BigInt::from(atpg_count(n)))
}

/// Floating view of the estimate.
pub fn tpe(n: u64) -> Result<f64> {
    Ok(ratio::to_f64(&tpe_exact(n)?))
}

/// Display value of the estimate: nearest integer, ties away from zero.
pub fn tpe_display(n: u64) -> Result<u64> {
    Ok(ratio::round_half_away(&tpe_exact(n)?)
        .to_u64()
        .expect("tpe is positive and small"))
}

/// The expanded cubic product `3 * prod (36i^3+42i^2-12i-9)/(36i^3-6i^2-8i-1)`.
/// Equals `tpe_exact(n)` identically.
pub fn tpe_expanded(n: u64) -> Result<ExactRatio> {
    if n < 1 {
        return Err(Error::Domain("tpe_expanded requires n >= 1".into()));
    }
    let mut num = BigInt::from(3);
    let mut den = BigInt::one();
    for i in 1..=n {
        let i = i as i64;
        num *= 36 * i * i * i + 42 * i * i - 12 * i - 9;
        den *= 36 * i * i * i - 6 * i * i - 8 * i - 1;
    }
    Ok(BigRational::new(num, den))
}

/// The simplified conservative bound `3n + 3`.
pub fn tpe_s(n: u64) -> u64 {
    3 * n + 3
}

/// Result of checking the per-step growth of the simplified bound and
/// of the exact estimate.
#[derive(Debug, Clone)]
pub struct SlopeReport {
    pub n_max: u64,
    /// True iff `tpe_s(n) - tpe_s(n-1) = 3` for every n <= n_max.
    pub tpe_s_slope_is_three: bool,
    pub min_tpe_increment: f64,
    pub max_tpe_increment: f64,
}

pub fn slope_check(n_max: u64) -> Result<SlopeReport> {
    if n_max < 2 {
        return Err(Error::Domain("slope_check requires n_max >= 2".into()));
    }
    let mut slope_ok = true;
    for n in 1..=n_max {
        if tpe_s(n) - tpe_s(n - 1) != 3 {
            slope_ok = false;
        }
    }
    let mut acc = TprAccumulator::new();
    acc.step();
    let mut prev = tpe_from_acc(&acc);
    let mut min_inc = f64::INFINITY;
    let mut max_inc = f64::NEG_INFINITY;
    for _ in 2..=n_max {
        acc.step();
        let cur = tpe_from_acc(&acc);
        let inc = ratio::to_f64(&(&cur - &prev));
        min_inc = min_inc.min(inc);
        max_inc = max_inc.max(inc);
        prev = cur;
    }
    Ok(SlopeReport {
        n_max,
        tpe_s_slope_is_three: slope_ok,
        min_tpe_increment: min_inc,
        max_tpe_increment: max_inc,
    })
}

fn tpe_from_acc(acc: &TprAccumulator) -> ExactRatio {
    let (num, den) = acc.unreduced();
    BigRational::new(num * BigInt::from(atpg_count(acc.n())), den.clone())
}

/// Log-space floating approximation of `tpr_ab(n)` for large-n trend
/// exploration. Approximate by construction; never used in identity
/// or golden-table checks.
pub fn tpr_log_approx(n: u64) -> f64 {
    let mut log_sum = 0.0f64;
    for i in 1..=n {
        log_sum += ((6 * i - 3) as f64).ln() - ((6 * i + 1) as f64).ln();
    }
    log_sum.exp()
}
