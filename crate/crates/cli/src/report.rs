//! Report types and their text rendering. Field order is fixed, so JSON
//! output is byte-for-byte reproducible.

use std::fmt::{self, Write as _};

use bottsam_core::{CohomologyDims, CohomologyTable, VanishingReport, WeightBox};
use serde::{Serialize, Serializer};

use crate::spec::{CartanSpec, ProblemSpec};

pub const SCHEMA: u32 = 1;

/// An integer written as a JSON number when it fits in 64 bits and as a
/// decimal string otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Int(pub i128);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub input: ProblemSpec,
    pub alpha_summary: Option<Vec<AlphaRange>>,
    pub conditions: Option<Vec<ConditionRow>>,
    pub vanishing: Option<VanishingBlock>,
    pub toric: Option<ToricBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleBlock>,
    pub notes: Vec<String>,
}

/// Range of `α_ij^ε` over all sign vectors; indices 1-based.
#[derive(Debug, Clone, Serialize)]
pub struct AlphaRange {
    pub i: usize,
    pub j: usize,
    pub min: i64,
    pub max: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionRow {
    pub index: usize,
    pub c_min: i64,
    pub c_max: i64,
    pub plus_ok: bool,
    pub minus_ok: bool,
    pub forms: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VanishingBlock {
    pub certificate_minus: String,
    pub eta_minus: usize,
    pub certificate_plus: String,
    pub eta_plus: usize,
    pub vanished_degrees: Vec<usize>,
    pub possible_window: Option<[usize; 2]>,
    pub single_degree: Option<usize>,
    pub everything_vanishes: bool,
}

impl From<&VanishingReport> for VanishingBlock {
    fn from(r: &VanishingReport) -> Self {
        VanishingBlock {
            certificate_minus: r.certificate_minus.to_string(),
            eta_minus: r.certificate_minus.eta_minus,
            certificate_plus: r.certificate_plus.to_string(),
            eta_plus: r.certificate_plus.eta_plus,
            vanished_degrees: r.vanished_degrees.iter().copied().collect(),
            possible_window: r.possible_window.map(|(a, b)| [a, b]),
            single_degree: r.single_degree,
            everything_vanishes: r.everything_vanishes,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoxBlock {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl From<&WeightBox> for BoxBlock {
    fn from(b: &WeightBox) -> Self {
        BoxBlock {
            lo: b.lo.clone(),
            hi: b.hi.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessRow {
    pub weight: Vec<i64>,
    pub degree: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ToricBlock {
    pub weight_box: BoxBlock,
    pub dims: Vec<u64>,
    pub euler: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessRow>>,
    pub witnesses_truncated: bool,
}

impl ToricBlock {
    pub fn new(bx: &WeightBox, t: &CohomologyTable) -> Self {
        ToricBlock {
            weight_box: bx.into(),
            dims: t.dims.clone(),
            euler: t.euler,
            witnesses: t.witnesses.as_ref().map(|ws| {
                ws.iter()
                    .map(|w| WitnessRow {
                        weight: w.weight.0.clone(),
                        degree: w.degree,
                    })
                    .collect()
            }),
            witnesses_truncated: t.witnesses_truncated,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleBlock {
    /// From the closed-form scan of the weight box.
    pub closed_form: Vec<u64>,
    /// Sums over the box and its one-layer shell, weight by weight.
    pub simplicial: Vec<u64>,
    pub cech: Vec<u64>,
    pub weights_checked: u64,
    pub agree: bool,
    pub first_mismatch: Option<Mismatch>,
    /// Shell weights with nonzero Čech cohomology.
    pub shell_nonzero: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub weight: Vec<i64>,
    pub closed_form: CohomologyDims,
    pub simplicial: CohomologyDims,
    pub cech: CohomologyDims,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightRow {
    pub weight: Vec<i64>,
    pub phi_plus: Vec<Int>,
    pub phi_minus: Vec<Int>,
    /// `None` when the weight has no cohomology.
    pub degree: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightsDump {
    pub schema: u32,
    pub input: ProblemSpec,
    pub weight_box: BoxBlock,
    pub weights: Vec<WeightRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub a: Vec<i64>,
    pub vanished_degrees: Vec<usize>,
    pub single_degree: Option<usize>,
    pub everything_vanishes: bool,
}

fn tuple<T: fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("({})", parts.join(","))
}

fn set<T: fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn describe_input(spec: &ProblemSpec) -> String {
    let cartan = match &spec.cartan {
        CartanSpec::Family { family, rank } => format!("type {family}{rank}"),
        CartanSpec::Matrix(rows) => format!("{0}x{0} Cartan matrix {rows:?}", rows.len()),
    };
    let mut s = format!("{cartan}, word {}", tuple(&spec.word));
    if let Some(a) = &spec.divisor {
        let _ = write!(s, ", divisor {}", tuple(a));
    }
    if let Some(b) = &spec.divisor_minus {
        let _ = write!(s, ", divisor_minus {}", tuple(b));
    }
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Report {
    /// 4 if an oracle block disagrees, otherwise 0.
    pub fn exit_code(&self) -> i32 {
        match &self.oracle {
            Some(o) if !o.agree => crate::EXIT_MISMATCH,
            _ => crate::EXIT_OK,
        }
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input: {}", describe_input(&self.input));
        if let Some(alpha) = &self.alpha_summary {
            if !alpha.is_empty() {
                let _ = writeln!(s, "\nalpha ranges (i,j: min..max):");
                for a in alpha {
                    let _ = writeln!(s, "  {},{}: {}..{}", a.i, a.j, a.min, a.max);
                }
            }
        }
        if let Some(rows) = &self.conditions {
            let _ = writeln!(s, "\nconditions:");
            let _ = writeln!(s, "  {:>3} {:>6} {:>6} {:>4} {:>4}  forms", "i", "c_min", "c_max", "C+", "C-");
            for r in rows {
                let _ = writeln!(
                    s,
                    "  {:>3} {:>6} {:>6} {:>4} {:>4}  {}",
                    r.index,
                    r.c_min,
                    r.c_max,
                    yes(r.plus_ok),
                    yes(r.minus_ok),
                    r.forms.join(", ")
                );
            }
        }
        if let Some(v) = &self.vanishing {
            let _ = writeln!(s, "\nvanishing:");
            let _ = writeln!(s, "  certificate -: {}  (eta^- = {})", v.certificate_minus, v.eta_minus);
            let _ = writeln!(s, "  certificate +: {}  (eta^+ = {})", v.certificate_plus, v.eta_plus);
            let _ = writeln!(s, "  vanished degrees: {}", set(&v.vanished_degrees));
            match v.possible_window {
                Some([lo, hi]) => {
                    let _ = writeln!(s, "  possibly nonzero: {lo}..{hi}");
                }
                None => {
                    let _ = writeln!(s, "  possibly nonzero: none");
                }
            }
            if let Some(d) = v.single_degree {
                let _ = writeln!(s, "  single degree: {d}");
            }
        }
        if let Some(t) = &self.toric {
            let _ = writeln!(s, "\ntoric fiber:");
            let _ = writeln!(s, "  weight box: {} .. {}", tuple(&t.weight_box.lo), tuple(&t.weight_box.hi));
            let _ = writeln!(s, "  h = {}  euler = {}", tuple(&t.dims), t.euler);
            if let Some(ws) = &t.witnesses {
                let more = if t.witnesses_truncated { " (truncated)" } else { "" };
                let _ = writeln!(s, "  witnesses{more}:");
                for w in ws {
                    let _ = writeln!(s, "    {} in degree {}", tuple(&w.weight), w.degree);
                }
            }
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(s, "\noracle ({} weights):", o.weights_checked);
            let _ = writeln!(s, "  closed form: {}", tuple(&o.closed_form));
            let _ = writeln!(s, "  simplicial:  {}", tuple(&o.simplicial));
            let _ = writeln!(s, "  Čech:        {}", tuple(&o.cech));
            let _ = writeln!(s, "  agreement: {}", yes(o.agree));
            if let Some(m) = &o.first_mismatch {
                let _ = writeln!(
                    s,
                    "  first mismatch at {}: closed form {}, simplicial {}, Čech {}",
                    tuple(&m.weight),
                    m.closed_form,
                    m.simplicial,
                    m.cech
                );
            }
            for w in &o.shell_nonzero {
                let _ = writeln!(s, "  shell weight with cohomology: {}", tuple(w));
            }
        }
        if !self.notes.is_empty() {
            let _ = writeln!(s, "\nnotes:");
            for n in &self.notes {
                let _ = writeln!(s, "  - {n}");
            }
        }
        s
    }
}

impl WeightsDump {
    pub fn render_text(&self) -> String {
        let mut s = format!("input: {}\n", describe_input(&self.input));
        let _ = writeln!(
            s,
            "weight box: {} .. {}",
            tuple(&self.weight_box.lo),
            tuple(&self.weight_box.hi)
        );
        for w in &self.weights {
            let degree = w.degree.map_or("zero".to_string(), |d| format!("H^{d}"));
            let _ = writeln!(
                s,
                "{}  phi+ {}  phi- {}  {degree}",
                tuple(&w.weight),
                tuple(&w.phi_plus),
                tuple(&w.phi_minus)
            );
        }
        s
    }
}

impl ScanRecord {
    pub fn render_text(&self) -> String {
        let single = self.single_degree.map_or("-".to_string(), |d| d.to_string());
        format!(
            "a={} vanished={} single={}{}",
            tuple(&self.a),
            set(&self.vanished_degrees),
            single,
            if self.everything_vanishes { " all-vanish" } else { "" }
        )
    }
}
