//! Result tables and the tolerance comparison.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::runner::CaseResult;
use crate::spec::QuantityClass;
use crate::BenchError;

/// Tolerance set used by [`compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    /// 0.1% on everything.
    Strict,
    /// Per-class defaults, overridable per reference.
    #[default]
    Paper,
}

impl Profile {
    pub fn class_default(self, class: QuantityClass) -> f64 {
        match self {
            Profile::Strict => 1e-3,
            Profile::Paper => match class {
                QuantityClass::Deflection => 0.005,
                QuantityClass::NormalStress => 0.01,
                QuantityClass::ShearStress => 0.02,
                QuantityClass::Frequency => 0.01,
            },
        }
    }

    fn tolerance(self, class: QuantityClass, over: Option<f64>) -> f64 {
        match self {
            Profile::Strict => self.class_default(class),
            Profile::Paper => over.unwrap_or_else(|| self.class_default(class)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unchecked,
}

/// One computed value against one reference (or against nothing).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub case: String,
    pub output: String,
    pub class: QuantityClass,
    pub computed: f64,
    pub reference: Option<f64>,
    pub citation: String,
    pub deviation: Option<f64>,
    pub tolerance: Option<f64>,
    pub status: Status,
}

pub fn deviation(computed: f64, reference: f64) -> f64 {
    (computed - reference).abs() / reference.abs()
}

fn percent(x: Option<f64>) -> String {
    x.map(|d| format!("{:.2}", 100.0 * d)).unwrap_or_default()
}

/// Target entries of one result. Outputs without a usable target reference
/// come back as unchecked.
pub fn entries(result: &CaseResult, profile: Profile) -> Vec<Entry> {
    let mut out = Vec::new();
    for o in &result.outputs {
        let targets: Vec<_> = result
            .references
            .iter()
            .filter(|r| r.target && r.output == o.label)
            .collect();
        let unchecked = |citation: String| Entry {
            case: result.name.clone(),
            output: o.label.clone(),
            class: o.class,
            computed: o.value,
            reference: None,
            citation,
            deviation: None,
            tolerance: None,
            status: Status::Unchecked,
        };
        if targets.is_empty() {
            out.push(unchecked("no reference".into()));
        }
        for r in targets {
            match r.value {
                None => out.push(unchecked(r.citation.clone())),
                Some(v) => {
                    let d = deviation(o.value, v);
                    let tol = profile.tolerance(o.class, r.tolerance);
                    out.push(Entry {
                        case: result.name.clone(),
                        output: o.label.clone(),
                        class: o.class,
                        computed: o.value,
                        reference: Some(v),
                        citation: r.citation.clone(),
                        deviation: Some(d),
                        tolerance: Some(tol),
                        status: if d <= tol { Status::Pass } else { Status::Fail },
                    });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub profile: Profile,
    pub entries: Vec<Entry>,
    /// Cases that did not produce a result.
    pub errors: Vec<String>,
}

impl Comparison {
    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn unchecked(&self) -> impl Iterator<Item = &Entry> {
        self.entries
            .iter()
            .filter(|e| e.status == Status::Unchecked)
    }

    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.failures().next().is_none()
    }

    /// 0 when everything passed, 1 on tolerance failures, 2 when a case
    /// failed to run.
    pub fn exit_code(&self) -> i32 {
        if !self.errors.is_empty() {
            2
        } else if self.passed() {
            0
        } else {
            1
        }
    }

    /// Checked entries sorted by deviation relative to tolerance, largest first.
    pub fn worst(&self, n: usize) -> Vec<&Entry> {
        let mut v: Vec<&Entry> = self
            .entries
            .iter()
            .filter(|e| e.deviation.is_some())
            .collect();
        let ratio = |e: &Entry| e.deviation.unwrap() / e.tolerance.unwrap();
        v.sort_by(|a, b| {
            ratio(b)
                .total_cmp(&ratio(a))
                .then_with(|| a.case.cmp(&b.case))
        });
        v.truncate(n);
        v
    }

    pub fn render(&self) -> String {
        let checked = self
            .entries
            .iter()
            .filter(|e| e.status != Status::Unchecked)
            .count();
        let failed = self.failures().count();
        let mut s = String::new();
        let _ = writeln!(s, "# Comparison ({:?} profile)\n", self.profile);
        let _ = writeln!(
            s,
            "{checked} checked, {} passed, {failed} failed, {} unchecked\n",
            checked - failed,
            self.unchecked().count()
        );
        let worst = self.worst(10);
        if !worst.is_empty() {
            let _ = writeln!(s, "## Worst offenders\n");
            let _ = writeln!(
                s,
                "| case | output | computed | reference | deviation % | tolerance % | status |"
            );
            let _ = writeln!(s, "|---|---|---|---|---|---|---|");
            for e in worst {
                let _ = writeln!(
                    s,
                    "| {} | {} | {:.4} | {:.4} | {} | {} | {:?} |",
                    e.case,
                    e.output,
                    e.computed,
                    e.reference.unwrap(),
                    percent(e.deviation),
                    percent(e.tolerance),
                    e.status
                );
            }
            s.push('\n');
        }
        if !self.errors.is_empty() {
            let _ = writeln!(s, "## Errors\n");
            for e in &self.errors {
                let _ = writeln!(s, "- {e}");
            }
            s.push('\n');
        }
        let unchecked: Vec<_> = self.unchecked().collect();
        if !unchecked.is_empty() {
            let _ = writeln!(s, "## Unchecked\n");
            for e in unchecked {
                let _ = writeln!(
                    s,
                    "- {} {} = {:.4} ({})",
                    e.case, e.output, e.computed, e.citation
                );
            }
            s.push('\n');
        }
        let _ = writeln!(s, "Result: {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}

pub fn compare(results: &[CaseResult], profile: Profile) -> Comparison {
    Comparison {
        profile,
        entries: results.iter().flat_map(|r| entries(r, profile)).collect(),
        errors: Vec::new(),
    }
}

const CSV_HEADER: [&str; 13] = [
    "table",
    "case",
    "row",
    "column",
    "output",
    "class",
    "computed",
    "reference",
    "citation",
    "target",
    "deviation_pct",
    "free_unknowns",
    "note",
];

fn class_name(c: QuantityClass) -> &'static str {
    match c {
        QuantityClass::Deflection => "deflection",
        QuantityClass::NormalStress => "normal-stress",
        QuantityClass::ShearStress => "shear-stress",
        QuantityClass::Frequency => "frequency",
    }
}

/// Long-form CSV: one row per (output, reference), plus a row with empty
/// reference columns for outputs that have none. Runtime is left out so the
/// bytes are reproducible.
pub fn to_csv(results: &[CaseResult]) -> Result<String, BenchError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in results {
        for o in &r.outputs {
            let refs: Vec<_> = r
                .references
                .iter()
                .filter(|x| x.output == o.label)
                .collect();
            let base = [
                r.table.clone(),
                r.name.clone(),
                r.row.clone(),
                r.column.clone(),
                o.label.clone(),
                class_name(o.class).into(),
                format!("{:.6}", o.value),
            ];
            let free = r.metadata.free_unknowns.to_string();
            if refs.is_empty() {
                w.write_record(base.iter().cloned().chain([
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    free.clone(),
                    String::new(),
                ]))?;
            }
            for x in refs {
                let dev = x.value.map(|v| deviation(o.value, v));
                w.write_record(
                    base.iter().cloned().chain([
                        x.value
                            .map(|v| format!("{v}"))
                            .unwrap_or_else(|| "-".into()),
                        x.citation.clone(),
                        x.target.to_string(),
                        percent(dev),
                        free.clone(),
                        x.note.clone().unwrap_or_default(),
                    ]),
                )?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| BenchError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv writer emits utf-8"))
}

/// Markdown grids, one per (table, output): rows and columns follow each
/// case's `row` and `column` labels in first-seen order. Cells show the
/// computed value, the target reference and the deviation.
pub fn to_markdown(results: &[CaseResult]) -> String {
    let mut groups: Vec<(String, String)> = Vec::new();
    for r in results {
        for o in &r.outputs {
            let key = (r.table.clone(), o.label.clone());
            if !groups.contains(&key) {
                groups.push(key);
            }
        }
    }
    let mut s = String::new();
    for (table, label) in groups {
        let members: Vec<&CaseResult> = results.iter().filter(|r| r.table == table).collect();
        let mut rows: Vec<&str> = Vec::new();
        let mut cols: Vec<&str> = Vec::new();
        let mut cells: BTreeMap<(&str, &str), String> = BTreeMap::new();
        for r in &members {
            let Some(v) = r.output(&label) else { continue };
            if !rows.contains(&r.row.as_str()) {
                rows.push(&r.row);
            }
            if !cols.contains(&r.column.as_str()) {
                cols.push(&r.column);
            }
            let target = r.references.iter().find(|x| x.target && x.output == label);
            let cell = match target.and_then(|t| t.value) {
                Some(rv) => format!("{v:.4} ({rv:.4}, {}%)", percent(Some(deviation(v, rv)))),
                None if target.is_some() => format!("{v:.4} (-)"),
                None => format!("{v:.4}"),
            };
            cells.insert((r.row.as_str(), r.column.as_str()), cell);
        }
        let _ = writeln!(s, "## {table}: {label}\n");
        let _ = writeln!(s, "| | {} |", cols.join(" | "));
        let _ = writeln!(s, "|---|{}", "---|".repeat(cols.len()));
        for row in &rows {
            let line: Vec<&str> = cols
                .iter()
                .map(|c| cells.get(&(*row, *c)).map(String::as_str).unwrap_or(""))
                .collect();
            let _ = writeln!(s, "| {row} | {} |", line.join(" | "));
        }
        s.push('\n');
    }
    s
}
