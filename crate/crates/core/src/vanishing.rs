//! Vanishing degrees for line bundles on the Bott-Samelson variety.
//!
//! For `D = Σ a_i Z_i`, index `i` satisfies `(C_i^+)` when every `C_i^ε` is
//! at least `−1` and `(C_i^-)` when every `C_i^ε` is at most `−1`. A sign
//! assignment `η ∈ {+, −, 0}^N` compatible with these conditions certifies
//! `H^k = 0` for `k < #{η_j = −}` and for `k > N − #{η_j = +}`, first on the
//! toric special fiber and then, by semicontinuity, on the Bott-Samelson
//! variety itself.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::bott::{check_len, BottData, DivisorCoeffs, LinearForm};
use crate::error::{Error, Result};
use crate::toric::{cohomology_table, CohomologyTable, TableOptions, ToricDivisor};

/// The conditions at one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IndexCondition {
    pub c_min: i64,
    pub c_max: i64,
    /// `(C_i^+)`: `c_min ≥ −1`.
    pub plus_ok: bool,
    /// `(C_i^-)`: `c_max ≤ −1`.
    pub minus_ok: bool,
}

impl IndexCondition {
    fn from_range(c_min: i64, c_max: i64) -> Self {
        IndexCondition {
            c_min,
            c_max,
            plus_ok: c_min >= -1,
            minus_ok: c_max <= -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ConditionProfile(pub Vec<IndexCondition>);

impl ConditionProfile {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every `η` compatible with the profile, in lexicographic order.
    pub fn admissible_certificates(&self) -> Vec<VanishingCertificate> {
        let mut out = vec![Vec::new()];
        for cond in &self.0 {
            let mut choices = vec![Eta::Zero];
            if cond.plus_ok {
                choices.push(Eta::Plus);
            }
            if cond.minus_ok {
                choices.push(Eta::Minus);
            }
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Eta>| {
                    choices.iter().map(move |&c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(VanishingCertificate::new).collect()
    }

    pub fn check_admissible(&self, cert: &VanishingCertificate) -> Result<()> {
        check_len(self.len(), cert.eta.len())?;
        for (i, (cond, &e)) in self.0.iter().zip(&cert.eta).enumerate() {
            let ok = match e {
                Eta::Zero => true,
                Eta::Plus => cond.plus_ok,
                Eta::Minus => cond.minus_ok,
            };
            if !ok {
                return Err(Error::NotAdmissible(i + 1));
            }
        }
        Ok(())
    }
}

/// The linear forms `C_i^ε` of a word, grouped by index. Independent of the
/// divisor, so scans over many divisors compute them once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionForms(Vec<Vec<LinearForm>>);

impl ConditionForms {
    pub fn new(bott: &BottData) -> Result<Self> {
        (0..bott.len())
            .map(|i| bott.c_forms(i).map(|s| s.into_iter().collect()))
            .collect::<Result<_>>()
            .map(ConditionForms)
    }

    pub fn forms(&self, i: usize) -> &[LinearForm] {
        &self.0[i]
    }

    pub fn profile(&self, coeffs: &DivisorCoeffs) -> Result<ConditionProfile> {
        check_len(self.0.len(), coeffs.0.len())?;
        self.0
            .iter()
            .map(|forms| {
                let mut range = (i64::MAX, i64::MIN);
                for f in forms {
                    let v = f.eval(&coeffs.0)?;
                    range = (range.0.min(v), range.1.max(v));
                }
                Ok(IndexCondition::from_range(range.0, range.1))
            })
            .collect::<Result<_>>()
            .map(ConditionProfile)
    }
}

/// Exact `min`/`max` of `C_i^ε` over all suffixes, per index.
pub fn condition_profile(bott: &BottData, coeffs: &DivisorCoeffs) -> Result<ConditionProfile> {
    ConditionForms::new(bott)?.profile(coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Eta {
    Plus,
    Minus,
    Zero,
}

impl Eta {
    pub fn symbol(self) -> char {
        match self {
            Eta::Plus => '+',
            Eta::Minus => '-',
            Eta::Zero => '0',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VanishingCertificate {
    pub eta: Vec<Eta>,
    pub eta_plus: usize,
    pub eta_minus: usize,
}

impl VanishingCertificate {
    pub fn new(eta: Vec<Eta>) -> Self {
        let eta_plus = eta.iter().filter(|&&e| e == Eta::Plus).count();
        let eta_minus = eta.iter().filter(|&&e| e == Eta::Minus).count();
        VanishingCertificate {
            eta,
            eta_plus,
            eta_minus,
        }
    }

    /// Degrees `k < η^-` and `N − η^+ < k ≤ N`.
    pub fn vanished_degrees(&self) -> BTreeSet<usize> {
        let n = self.eta.len();
        (0..=n)
            .filter(|&k| k < self.eta_minus || k + self.eta_plus > n)
            .collect()
    }
}

impl fmt::Display for VanishingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.eta.iter().try_for_each(|e| write!(f, "{}", e.symbol()))
    }
}

/// The certificate using every available `−` and the one using every
/// available `+`. Their conclusions together cover those of every
/// admissible `η`.
pub fn best_certificates(profile: &ConditionProfile) -> (VanishingCertificate, VanishingCertificate) {
    let pick = |want: fn(&IndexCondition) -> bool, e: Eta| {
        VanishingCertificate::new(
            profile
                .0
                .iter()
                .map(|c| if want(c) { e } else { Eta::Zero })
                .collect(),
        )
    };
    (pick(|c| c.minus_ok, Eta::Minus), pick(|c| c.plus_ok, Eta::Plus))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub profile: ConditionProfile,
    pub certificate_minus: VanishingCertificate,
    pub certificate_plus: VanishingCertificate,
    pub vanished_degrees: BTreeSet<usize>,
    /// Degrees `[lo, hi]` where cohomology may survive; `None` if none can.
    pub possible_window: Option<(usize, usize)>,
    pub single_degree: Option<usize>,
    pub everything_vanishes: bool,
    /// Toric-fiber dimensions; upper bounds for the Bott-Samelson variety.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub toric: Option<CohomologyTable>,
    /// Euler characteristic, constant along the degeneration.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<i64>,
}

/// Vanishing degrees for `D = Σ a_i Z_i`, optionally with the toric table.
pub fn vanishing_report(
    bott: &BottData,
    coeffs: &DivisorCoeffs,
    toric: Option<&TableOptions>,
) -> Result<VanishingReport> {
    let profile = condition_profile(bott, coeffs)?;
    let mut report = report_from_profile(profile);
    if let Some(opts) = toric {
        let table = cohomology_table(bott, &ToricDivisor::from(coeffs), opts)?;
        report.euler = Some(table.euler);
        report.toric = Some(table);
    }
    Ok(report)
}

/// The vanishing conclusions of a profile, without any toric table.
pub fn report_from_profile(profile: ConditionProfile) -> VanishingReport {
    let n = profile.len();
    let (minus, plus) = best_certificates(&profile);
    let vanished: BTreeSet<usize> = minus
        .vanished_degrees()
        .union(&plus.vanished_degrees())
        .copied()
        .collect();
    let lo = minus.eta_minus;
    let possible_window = (lo + plus.eta_plus <= n).then_some((lo, n - plus.eta_plus));
    let single_degree = match possible_window {
        Some((a, b)) if a == b => Some(a),
        _ => None,
    };
    VanishingReport {
        profile,
        certificate_minus: minus,
        certificate_plus: plus,
        vanished_degrees: vanished,
        possible_window,
        single_degree,
        everything_vanishes: possible_window.is_none(),
        toric: None,
        euler: None,
    }
}

/// Computes the toric table and checks it vanishes where `η` says it must.
pub fn check_toric_vanishing(
    bott: &BottData,
    coeffs: &DivisorCoeffs,
    cert: &VanishingCertificate,
    opts: &TableOptions,
) -> Result<bool> {
    let profile = condition_profile(bott, coeffs)?;
    profile.check_admissible(cert)?;
    let table = cohomology_table(bott, &ToricDivisor::from(coeffs), opts)?;
    Ok(certificate_holds(&table, cert))
}

/// Whether `table` is zero in every degree `cert` claims.
pub fn certificate_holds(table: &CohomologyTable, cert: &VanishingCertificate) -> bool {
    cert.vanished_degrees().iter().all(|&k| table.is_zero_in(k))
}
