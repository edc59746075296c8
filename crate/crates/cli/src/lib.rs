//! Batch front end for `bottsam-core`: problem documents in, reports out.
//!
//! Exit codes: 0 success, 2 invalid input, 3 enumeration or oracle size
//! limit exceeded, 4 oracle disagreement.

pub mod report;
pub mod spec;

use bottsam_core::{
    cech_weight, classify_weight, cohomology_table, demazure_weight, report_from_profile,
    weight_box, BottData, CohomologyDims, ConditionForms, DivisorCoeffs, Error, Ray, ToricDivisor,
    WeightClassification, MAX_ORACLE_LEN,
};

use report::{
    AlphaRange, ConditionRow, Int, Mismatch, OracleBlock, Report, ScanRecord, ToricBlock, VanishingBlock, WeightRow,
    WeightsDump, SCHEMA,
};
use spec::ProblemSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BoxTooLarge { .. } | Error::TooLarge { .. } | Error::Overflow) => EXIT_TOO_LARGE,
            _ => EXIT_INVALID,
        }
    }
}

fn alpha_summary(bott: &BottData) -> Result<Vec<AlphaRange>, CliError> {
    let n = bott.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (min, max) = bott.alpha_range(i, j)?;
            out.push(AlphaRange {
                i: i + 1,
                j: j + 1,
                min,
                max,
            });
        }
    }
    Ok(out)
}

const SEMICONTINUITY_NOTE: &str = "toric fiber dimensions are upper bounds for the Bott-Samelson dimensions \
     (semicontinuity in the flat degeneration), so toric vanishing implies vanishing on X";

/// Full analysis of `D = Σ a_i Z_i`: conditions, certificates and, unless
/// disabled, the toric table.
pub fn analyze(spec: &ProblemSpec) -> Result<Report, CliError> {
    let bott = spec.bott()?;
    let coeffs = spec.picard_coeffs()?;
    let forms = ConditionForms::new(&bott)?;
    let profile = forms.profile(&coeffs)?;
    let conditions = profile
        .0
        .iter()
        .enumerate()
        .map(|(i, c)| ConditionRow {
            index: i + 1,
            c_min: c.c_min,
            c_max: c.c_max,
            plus_ok: c.plus_ok,
            minus_ok: c.minus_ok,
            forms: forms.forms(i).iter().map(ToString::to_string).collect(),
        })
        .collect();
    let vanishing = report_from_profile(profile.clone());
    let mut notes = Vec::new();
    for (i, c) in profile.0.iter().enumerate() {
        if c.plus_ok && c.minus_ok {
            notes.push(format!(
                "index {} satisfies both conditions (every C is -1); both certificates use it",
                i + 1
            ));
        }
    }
    if vanishing.everything_vanishes {
        notes.push("every cohomology group vanishes".into());
    }
    let toric = if spec.options.no_toric {
        None
    } else {
        let div = ToricDivisor::from(&coeffs);
        let table = cohomology_table(&bott, &div, &spec.table_options())?;
        notes.push(SEMICONTINUITY_NOTE.into());
        notes.push(format!(
            "the Euler characteristic is constant in the family, so chi(X, D) = {}",
            table.euler
        ));
        let unresolved: Vec<String> = table
            .dims
            .iter()
            .enumerate()
            .filter(|&(k, &d)| k > 0 && d > 0)
            .map(|(k, d)| format!("h^{k} = {d}"))
            .collect();
        if !unresolved.is_empty() {
            notes.push(format!(
                "toric fiber has {}; no vanishing is claimed there, and since toric dimensions are only \
                 upper bounds, other vanishing theorems (e.g. for positive divisors) may still apply",
                unresolved.join(", ")
            ));
        }
        Some(ToricBlock::new(&weight_box(&bott, &div)?, &table))
    };
    let oracle = if spec.options.oracle {
        Some(oracle_block(&bott, &ToricDivisor::from(&coeffs), spec)?)
    } else {
        None
    };
    Ok(Report {
        schema: SCHEMA,
        input: spec.clone(),
        alpha_summary: Some(alpha_summary(&bott)?),
        conditions: Some(conditions),
        vanishing: Some(VanishingBlock::from(&vanishing)),
        toric,
        oracle,
        notes,
    })
}

/// Toric table of `(a, b)`; `b` may be nonzero.
pub fn toric(spec: &ProblemSpec) -> Result<Report, CliError> {
    let bott = spec.bott()?;
    let div = spec.toric_divisor()?;
    let table = cohomology_table(&bott, &div, &spec.table_options())?;
    let mut notes = vec![format!("euler characteristic {}", table.euler)];
    if div.is_picard() {
        notes.push(SEMICONTINUITY_NOTE.into());
    }
    Ok(Report {
        schema: SCHEMA,
        input: spec.clone(),
        alpha_summary: None,
        conditions: None,
        vanishing: None,
        toric: Some(ToricBlock::new(&weight_box(&bott, &div)?, &table)),
        oracle: None,
        notes,
    })
}

/// Three-way comparison of the closed form, the simplicial complexes and
/// the Čech complex.
pub fn oracle(spec: &ProblemSpec) -> Result<Report, CliError> {
    let bott = spec.bott()?;
    let div = spec.toric_divisor()?;
    let block = oracle_block(&bott, &div, spec)?;
    let table = cohomology_table(&bott, &div, &spec.table_options())?;
    let notes = vec![if block.agree {
        "closed form, simplicial and Čech computations agree".to_string()
    } else {
        "DISAGREEMENT between the computations; see first_mismatch".to_string()
    }];
    Ok(Report {
        schema: SCHEMA,
        input: spec.clone(),
        alpha_summary: None,
        conditions: None,
        vanishing: None,
        toric: Some(ToricBlock::new(&weight_box(&bott, &div)?, &table)),
        oracle: Some(block),
        notes,
    })
}

fn oracle_block(bott: &BottData, div: &ToricDivisor, spec: &ProblemSpec) -> Result<OracleBlock, CliError> {
    let n = bott.len();
    if n > MAX_ORACLE_LEN {
        return Err(Error::TooLarge {
            len: n,
            max: MAX_ORACLE_LEN,
        }
        .into());
    }
    let opts = spec.table_options();
    let closed_form = cohomology_table(bott, div, &opts)?.dims;
    let inner = weight_box(bott, div)?;
    let outer = inner.enlarged(1)?;
    if outer.volume() > u128::from(opts.cap) {
        return Err(Error::BoxTooLarge { cap: opts.cap }.into());
    }
    let mut simplicial = vec![0u64; n + 1];
    let mut cech_dims = vec![0u64; n + 1];
    let mut first_mismatch = None;
    let mut shell_nonzero = Vec::new();
    let mut checked = 0u64;
    for m in outer.points() {
        checked += 1;
        let closed = match classify_weight(bott, div, &m)? {
            WeightClassification::AllZero => CohomologyDims::zero(),
            WeightClassification::Concentrated(d) => CohomologyDims::single(d, 1),
        };
        let s = demazure_weight(bott, div, &m)?;
        let c = cech_weight(bott, div, &m)?;
        for (d, v) in s.iter() {
            simplicial[d] += v;
        }
        for (d, v) in c.iter() {
            cech_dims[d] += v;
        }
        if !inner.contains(&m) && !c.is_zero() {
            shell_nonzero.push(m.0.clone());
        }
        if first_mismatch.is_none() && (closed != s || closed != c) {
            first_mismatch = Some(Mismatch {
                weight: m.0.clone(),
                closed_form: closed,
                simplicial: s,
                cech: c,
            });
        }
    }
    let agree = first_mismatch.is_none()
        && shell_nonzero.is_empty()
        && closed_form == simplicial
        && closed_form == cech_dims;
    Ok(OracleBlock {
        closed_form,
        simplicial,
        cech: cech_dims,
        weights_checked: checked,
        agree,
        first_mismatch,
        shell_nonzero,
    })
}

/// Every weight of the box with its `φ` values; zero weights only if `all`.
pub fn weights(spec: &ProblemSpec, all: bool) -> Result<WeightsDump, CliError> {
    let bott = spec.bott()?;
    let div = spec.toric_divisor()?;
    let bx = weight_box(&bott, &div)?;
    let cap = spec.table_options().cap;
    if bx.volume() > u128::from(cap) {
        return Err(Error::BoxTooLarge { cap }.into());
    }
    let mut rows = Vec::new();
    for m in bx.points() {
        let degree = match classify_weight(&bott, &div, &m)? {
            WeightClassification::AllZero => None,
            WeightClassification::Concentrated(d) => Some(d),
        };
        if degree.is_none() && !all {
            continue;
        }
        let phi = |ray: Ray| bott.phi(&div, &m, ray).map(Int);
        rows.push(WeightRow {
            phi_plus: (0..bott.len()).map(|i| phi(Ray::plus(i))).collect::<Result<_, _>>()?,
            phi_minus: (0..bott.len()).map(|i| phi(Ray::minus(i))).collect::<Result<_, _>>()?,
            weight: m.0,
            degree,
        });
    }
    Ok(WeightsDump {
        schema: SCHEMA,
        input: spec.clone(),
        weight_box: (&bx).into(),
        weights: rows,
    })
}

/// Vanishing conclusions for every `a` in the scan ranges, in
/// lexicographic order.
pub fn scan(spec: &ProblemSpec) -> Result<Vec<ScanRecord>, CliError> {
    let bott = spec.bott()?;
    let ranges = spec.scan_ranges()?;
    if ranges.iter().any(|&(lo, hi)| lo > hi) {
        return Ok(Vec::new());
    }
    let volume = ranges
        .iter()
        .map(|&(lo, hi)| (i128::from(hi) - i128::from(lo) + 1) as u128)
        .fold(1u128, u128::saturating_mul);
    let cap = spec.table_options().cap;
    if volume > u128::from(cap) {
        return Err(Error::BoxTooLarge { cap }.into());
    }
    let forms = ConditionForms::new(&bott)?;
    let bx = bottsam_core::WeightBox {
        lo: ranges.iter().map(|r| r.0).collect(),
        hi: ranges.iter().map(|r| r.1).collect(),
    };
    bx.points()
        .map(|a| {
            let r = report_from_profile(forms.profile(&DivisorCoeffs(a.0.clone()))?);
            Ok(ScanRecord {
                a: a.0,
                vanished_degrees: r.vanished_degrees.into_iter().collect(),
                single_degree: r.single_degree,
                everything_vanishes: r.everything_vanishes,
            })
        })
        .collect()
}
