use casimir_kit::casimir::SpectrumCluster;
use casimir_kit::linalg::QuadExt;
use casimir_kit::reps::CodegreeReport;
use serde::Serialize;

/// Ten significant digits, switching to scientific notation outside `[1e-4, 1e10)`.
pub fn decimal(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..10).contains(&mag) {
        return format!("{x:.9e}");
    }
    let places = (9 - mag).max(0) as usize;
    format!("{x:.places$}")
}

#[derive(Serialize)]
pub struct ExactValue {
    pub exact: String,
    pub pretty: String,
    pub decimal: String,
}

impl ExactValue {
    pub fn from_quad(q: &QuadExt) -> Self {
        ExactValue {
            exact: q.to_string(),
            pretty: q.pretty(),
            decimal: decimal(q.to_f64()),
        }
    }
}

#[derive(Serialize)]
pub struct RingSummary {
    pub rank: usize,
    pub labels: Vec<String>,
    pub commutative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recognized: Option<String>,
}

#[derive(Serialize)]
pub struct SpectrumEntry {
    pub value: String,
    pub multiplicity: usize,
}

impl From<&SpectrumCluster> for SpectrumEntry {
    fn from(c: &SpectrumCluster) -> Self {
        SpectrumEntry {
            value: decimal(c.value),
            multiplicity: c.multiplicity,
        }
    }
}

#[derive(Serialize)]
pub struct CodegreeEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pretty: Option<String>,
    pub decimal: String,
    pub dim: usize,
    pub source: String,
}

#[derive(Serialize)]
pub struct Codegrees {
    /// `exact`, `characters` or `spectrum-only`.
    pub method: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<CodegreeEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum_inverse_squares: Option<ValueOrDecimal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fpdim: Option<ValueOrDecimal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudo_unitary_bound: Option<ValueOrDecimal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudo_unitary: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum ValueOrDecimal {
    Exact(ExactValue),
    Decimal { decimal: String },
}

impl ValueOrDecimal {
    fn new(exact: Option<&QuadExt>, approx: f64) -> Self {
        match exact {
            Some(q) => ValueOrDecimal::Exact(ExactValue::from_quad(q)),
            None => ValueOrDecimal::Decimal { decimal: decimal(approx) },
        }
    }

    pub fn shown(&self) -> String {
        match self {
            ValueOrDecimal::Exact(v) => format!("{}  ({})", v.pretty, v.decimal),
            ValueOrDecimal::Decimal { decimal } => format!("≈ {decimal}"),
        }
    }
}

impl Codegrees {
    pub fn from_report(method: &'static str, report: &CodegreeReport, fpdim_approx: f64) -> Self {
        let values = report
            .codegrees
            .iter()
            .map(|f| CodegreeEntry {
                exact: f.exact.as_ref().map(|q| q.to_string()),
                pretty: f.exact.as_ref().map(|q| q.pretty()),
                decimal: decimal(f.approx),
                dim: f.dim,
                source: f.source.to_string(),
            })
            .collect();
        Codegrees {
            method,
            values,
            sum_inverse_squares: Some(ValueOrDecimal::new(
                report.sum_inverse_squares.as_ref(),
                report.sum_inverse_squares_approx,
            )),
            fpdim: Some(ValueOrDecimal::new(report.fpdim.as_ref(), fpdim_approx)),
            pseudo_unitary_bound: Some(ValueOrDecimal::new(
                report.pseudo_unitary_bound_exact.as_ref(),
                report.pseudo_unitary_bound,
            )),
            pseudo_unitary: Some(report.verdict),
            note: None,
        }
    }

    pub fn spectrum_only(note: &str) -> Self {
        Codegrees {
            method: "spectrum-only",
            values: Vec::new(),
            sum_inverse_squares: None,
            fpdim: None,
            pseudo_unitary_bound: None,
            pseudo_unitary: None,
            note: Some(note.to_string()),
        }
    }
}

#[derive(Serialize, Default)]
pub struct Results {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub casimir_number: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<SpectrumEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codegrees: Option<Codegrees>,
}

#[derive(Serialize)]
pub struct InvariantsReport {
    pub command: String,
    pub ring: RingSummary,
    pub results: Results,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl InvariantsReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let ring = &self.ring;
        out.push_str(&format!("ring: rank {} ({})", ring.rank, ring.labels.join(", ")));
        if let Some(name) = &ring.recognized {
            out.push_str(&format!(", recognized as {name}"));
        }
        out.push('\n');
        let r = &self.results;
        if let Some(c) = &r.casimir_number {
            out.push_str(&format!("casimir number: {c}\n"));
        }
        if let Some(d) = &r.determinant {
            out.push_str(&format!("determinant: {d}\n"));
        }
        if let Some(spec) = &r.spectrum {
            out.push_str("spectrum of c(1):\n");
            for s in spec {
                out.push_str(&format!("  {}  x{}\n", s.value, s.multiplicity));
            }
        }
        if let Some(c) = &r.codegrees {
            out.push_str(&format!("codegrees ({}):\n", c.method));
            for v in &c.values {
                let shown = v.pretty.clone().unwrap_or_else(|| format!("≈ {}", v.decimal));
                out.push_str(&format!("  {shown}  ({})  dim {}  {}\n", v.decimal, v.dim, v.source));
            }
            if let Some(s) = &c.sum_inverse_squares {
                out.push_str(&format!("sum 1/f^2: {}\n", s.shown()));
            }
            if let Some(s) = &c.fpdim {
                out.push_str(&format!("FPdim: {}\n", s.shown()));
            }
            if let Some(s) = &c.pseudo_unitary_bound {
                out.push_str(&format!("bound (1+1/FPdim)/2: {}\n", s.shown()));
            }
            if let Some(v) = c.pseudo_unitary {
                out.push_str(&format!("pseudo-unitary inequality: {}\n", if v { "holds" } else { "fails" }));
            }
            if let Some(note) = &c.note {
                out.push_str(&format!("note: {note}\n"));
            }
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed: {ms} ms\n"));
        }
        out
    }
}

#[derive(Serialize)]
pub struct SweepReportRow {
    pub n: usize,
    pub casimir: Option<String>,
    pub expected_casimir: String,
    pub determinant: String,
    pub expected_determinant: String,
    pub codegrees: Option<Vec<String>>,
    pub expected_codegrees: Vec<String>,
    pub codegree_sum: Option<String>,
    pub expected_codegree_sum: String,
    pub pseudo_unitary: Option<bool>,
    pub all_match: bool,
    pub mismatches: Vec<String>,
}

#[derive(Serialize)]
pub struct SweepReport {
    pub command: String,
    pub rows: Vec<SweepReportRow>,
    pub all_match: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl SweepReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let codegrees = row
                .codegrees
                .as_ref()
                .map_or("-".to_string(), |c| c.join(", "));
            out.push_str(&format!(
                "n={:<3} casimir {:<8} det {}  codegrees [{}]  sum {}  pseudo-unitary {}  {}\n",
                row.n,
                row.casimir.as_deref().unwrap_or("-"),
                row.determinant,
                codegrees,
                row.codegree_sum.as_deref().unwrap_or("-"),
                row.pseudo_unitary.map_or("-", |v| if v { "yes" } else { "no" }),
                if row.all_match {
                    "match".to_string()
                } else {
                    format!("MISMATCH ({})", row.mismatches.join(", "))
                },
            ));
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed: {ms} ms\n"));
        }
        out
    }
}
