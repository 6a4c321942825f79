//! Command implementations. Each returns an [`Output`] so that `main` only
//! parses flags, picks a format and maps errors to exit codes.

use covolume_core::covolume::covolume;
use covolume_core::quadfield::fields_up_to;
use covolume_core::survey::{self, Certificate, DEFAULT_SAFETY_MARGIN};
use covolume_core::{ClassGroup, QuadField, SpecialValues};
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{Output, Table};
use crate::record::{format_float, round12, JsonRational, JsonRow, SurveyRow, SURVEY_HEADER};
use crate::selfcheck::{self, SelfcheckReport};

/// Invalid input; `main` reports it and exits with status 2.
#[derive(Debug, Clone, PartialEq)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

impl From<covolume_core::Error> for InputError {
    fn from(e: covolume_core::Error) -> Self {
        Self(e.to_string())
    }
}

pub type CommandResult<T> = Result<T, InputError>;

fn field_from_d(d: i64) -> CommandResult<QuadField> {
    if d <= 0 {
        return Err(InputError(format!("d must be a positive squarefree integer, got {d}")));
    }
    Ok(QuadField::from_squarefree_d(d)?)
}

fn check_n(n: u32) -> CommandResult<()> {
    if n < 2 {
        return Err(InputError(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

fn survey_table(rows: &[SurveyRow]) -> Table {
    let mut table = Table::new(&SURVEY_HEADER);
    for row in rows {
        let r = row.to_csv_record();
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        table.push(vec![
            r.d.to_string(),
            r.disc.to_string(),
            r.n.to_string(),
            r.nu,
            r.chi,
            r.volume,
            r.h.to_string(),
            r.h_torsion.to_string(),
            r.r.to_string(),
            r.epsilon,
            opt(r.mult_lo),
            opt(r.mult_hi),
            r.exact.to_string(),
        ]);
    }
    table
}

fn rows_output(rows: &[SurveyRow]) -> Output {
    Output { json: rows.iter().map(SurveyRow::to_json).collect(), tables: vec![survey_table(rows)] }
}

/// Full covolume record for `(Q(sqrt(-d)), n)`.
pub fn nu(d: i64, n: u32) -> CommandResult<Output> {
    check_n(n)?;
    let field = field_from_d(d)?;
    Ok(rows_output(&[SurveyRow::from_result(&covolume(&field, n)?)]))
}

/// One row per field with `Disc <= max_disc`, ascending.
pub fn scan_rows(n: u32, max_disc: u64) -> CommandResult<Vec<SurveyRow>> {
    check_n(n)?;
    if max_disc < 3 {
        return Err(InputError(format!("max-disc must be at least 3, got {max_disc}")));
    }
    let fields = fields_up_to(max_disc);
    let results: Vec<_> = fields.par_iter().map(|f| covolume(f, n)).collect();
    results.into_iter().map(|r| Ok(SurveyRow::from_result(&r?))).collect()
}

pub fn scan(n: u32, max_disc: u64) -> CommandResult<Output> {
    Ok(rows_output(&scan_rows(n, max_disc)?))
}

#[derive(Serialize)]
struct CandidateJson {
    d: u64,
    disc: u64,
    exact: bool,
    nu: JsonRational,
}

#[derive(Serialize)]
struct CertificateJson {
    n: u32,
    discriminant_bound: f64,
    search_limit: u64,
    candidates: Vec<CandidateJson>,
}

impl CertificateJson {
    fn new(c: &Certificate) -> Self {
        Self {
            n: c.n,
            discriminant_bound: round12(c.discriminant_bound.value),
            search_limit: c.search_limit,
            candidates: c
                .candidates
                .iter()
                .map(|x| CandidateJson {
                    d: x.field.d(),
                    disc: x.field.disc_abs(),
                    exact: x.nu.is_exact(),
                    nu: JsonRational::from_span(&x.nu),
                })
                .collect(),
        }
    }
}

fn certificate_table(c: &Certificate) -> Table {
    let title = format!(
        "certificate n={}: discriminant bound {}, searched Disc <= {}",
        c.n,
        format_float(c.discriminant_bound.value),
        c.search_limit
    );
    let mut table = Table::new(&["d", "disc", "nu", "exact"]).titled(title);
    for x in &c.candidates {
        let nu = match &x.nu {
            covolume_core::Span::Exact(v) => v.to_string(),
            covolume_core::Span::Interval { lower, upper } => format!("{lower}..{upper}"),
        };
        table.push(vec![x.field.d().to_string(), x.field.disc_abs().to_string(), nu, x.nu.is_exact().to_string()]);
    }
    table
}

#[derive(Serialize)]
struct MinimalJson {
    n: u32,
    result: JsonRow,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateJson>,
}

/// The minimal field in dimension `n`; the candidate certificate when `verbose`.
pub fn minimal(n: u32, verbose: bool) -> CommandResult<Output> {
    check_n(n)?;
    let found = survey::minimal_field(n, DEFAULT_SAFETY_MARGIN)?;
    let row = SurveyRow::from_result(&found.result);
    let mut out = Output::default();
    out.push_json(&MinimalJson {
        n,
        result: row.to_json_record(),
        certificate: verbose.then(|| CertificateJson::new(&found.certificate)),
    });
    out.tables.push(survey_table(&[row]));
    if verbose {
        out.tables.push(certificate_table(&found.certificate));
    }
    Ok(out)
}

#[derive(Serialize)]
struct GrowthJson {
    d: u64,
    n: u32,
    exact: bool,
    q: JsonRational,
    log_q_over_n: f64,
    closed_form: Option<f64>,
    closed_form_discrepancy: Option<f64>,
}

impl GrowthJson {
    fn new(field: &QuadField, g: &survey::GrowthReport) -> Self {
        Self {
            d: field.d(),
            n: g.n,
            exact: g.q.is_exact(),
            q: JsonRational::from_span(&g.q),
            log_q_over_n: round12(g.log_q_over_n),
            closed_form: g.closed_form.map(|c| round12(c.value)),
            closed_form_discrepancy: g.closed_form_discrepancy().map(round12),
        }
    }
}

const GROWTH_HEADER: [&str; 7] = ["d", "n", "q", "log_q_over_n", "closed_form", "closed_form_discrepancy", "exact"];

fn growth_table(field: &QuadField, reports: &[survey::GrowthReport]) -> Table {
    let mut table = Table::new(&GROWTH_HEADER);
    for g in reports {
        let q = match &g.q {
            covolume_core::Span::Exact(v) => v.to_string(),
            covolume_core::Span::Interval { lower, upper } => format!("{lower}..{upper}"),
        };
        let opt = |v: Option<f64>| v.map(format_float).unwrap_or_default();
        table.push(vec![
            field.d().to_string(),
            g.n.to_string(),
            q,
            format_float(g.log_q_over_n),
            opt(g.closed_form.map(|c| c.value)),
            opt(g.closed_form_discrepancy()),
            g.q.is_exact().to_string(),
        ]);
    }
    table
}

#[derive(Serialize)]
struct OverallJson {
    n_max: u32,
    n_star: u32,
    n_star_volume: u32,
    growth_threshold: Option<u32>,
    result: JsonRow,
    per_dimension: Vec<JsonRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    growth: Option<Vec<GrowthJson>>,
}

/// Dimension of smallest covolume over `2 <= n <= n_max`.
pub fn overall(n_max: u32, verbose: bool) -> CommandResult<Output> {
    if n_max < 10 {
        return Err(InputError(format!("n-max must be at least 10, got {n_max}")));
    }
    let found = survey::overall_minimum(n_max)?;
    let winner = found.result.field.clone();
    let rows: Vec<SurveyRow> = found.per_dimension.iter().map(|m| SurveyRow::from_result(&m.result)).collect();
    let mut out = Output::default();
    out.push_json(&OverallJson {
        n_max,
        n_star: found.n_star,
        n_star_volume: found.n_star_volume,
        growth_threshold: found.growth_threshold,
        result: SurveyRow::from_result(&found.result).to_json_record(),
        per_dimension: rows.iter().map(SurveyRow::to_json_record).collect(),
        growth: verbose.then(|| found.growth.iter().map(|g| GrowthJson::new(&winner, g)).collect()),
    });
    let mut summary = Table::new(&["n_max", "n_star", "n_star_volume", "growth_threshold", "d", "nu"]);
    summary.push(vec![
        n_max.to_string(),
        found.n_star.to_string(),
        found.n_star_volume.to_string(),
        found.growth_threshold.map(|t| t.to_string()).unwrap_or_default(),
        winner.d().to_string(),
        found.result.nu.lower().to_string(),
    ]);
    out.tables.push(summary);
    out.tables.push(survey_table(&rows));
    if verbose {
        out.tables.push(growth_table(&winner, &found.growth));
    }
    Ok(out)
}

/// `nu(n+1)/nu(n)` for `n_from <= n <= n_to`.
pub fn growth(d: i64, n_from: u32, n_to: u32) -> CommandResult<Output> {
    check_n(n_from)?;
    if n_to < n_from {
        return Err(InputError(format!("n-to ({n_to}) is below n-from ({n_from})")));
    }
    let field = field_from_d(d)?;
    let dims: Vec<u32> = (n_from..=n_to).collect();
    let reports = dims.par_iter().map(|&n| survey::growth_ratio(&field, n)).collect::<Result<Vec<_>, _>>()?;
    let mut out = Output::default();
    for g in &reports {
        out.push_json(&GrowthJson::new(&field, g));
    }
    out.tables.push(growth_table(&field, &reports));
    Ok(out)
}

#[derive(Serialize)]
struct HwangJson {
    n: u32,
    k: u64,
    p4: String,
    p2: String,
    bound: f64,
}

/// Cusped-manifold volume bound for `n_from <= n <= n_to`.
pub fn hwang(n_from: u32, n_to: u32, k: u64) -> CommandResult<Output> {
    check_n(n_from)?;
    if n_to < n_from {
        return Err(InputError(format!("n-to ({n_to}) is below n-from ({n_from})")));
    }
    let mut out = Output::default();
    let mut table = Table::new(&["n", "k", "p4", "p2", "bound"]);
    for n in n_from..=n_to {
        let bound = survey::hwang_bound(n, k)?;
        let p4 = survey::hwang_p(n, 4).to_string();
        let p2 = survey::hwang_p(n, 2).to_string();
        table.push(vec![n.to_string(), k.to_string(), p4.clone(), p2.clone(), format_float(bound.value)]);
        out.push_json(&HwangJson { n, k, p4, p2, bound: round12(bound.value) });
    }
    out.tables.push(table);
    Ok(out)
}

#[derive(Serialize)]
struct FormJson {
    form: String,
    order: u64,
}

#[derive(Serialize)]
struct TorsionJson {
    m: u64,
    count: u64,
}

#[derive(Serialize)]
struct ClassGroupJson {
    d: u64,
    disc: u64,
    h: u64,
    exponent: u64,
    forms: Vec<FormJson>,
    torsion: Vec<TorsionJson>,
}

/// Reduced forms of discriminant `-Disc` and `m`-torsion counts.
pub fn classgroup(d: i64, torsion: &[u64]) -> CommandResult<Output> {
    let field = field_from_d(d)?;
    if torsion.contains(&0) {
        return Err(InputError("torsion order must be positive".into()));
    }
    let group = ClassGroup::reduced_forms(&field);
    let forms: Vec<FormJson> = group.classes().iter().map(|f| FormJson { form: f.to_string(), order: f.order() }).collect();
    let torsion: Vec<TorsionJson> = torsion.iter().map(|&m| TorsionJson { m, count: group.torsion_count(m) }).collect();

    let mut summary = Table::new(&["d", "disc", "h", "exponent"]);
    summary.push(vec![field.d().to_string(), field.disc_abs().to_string(), group.h().to_string(), group.exponent().to_string()]);
    let mut form_table = Table::new(&["form", "order"]);
    for f in &forms {
        form_table.push(vec![f.form.clone(), f.order.to_string()]);
    }
    let mut tables = vec![summary, form_table];
    if !torsion.is_empty() {
        let mut t = Table::new(&["m", "count"]);
        for x in &torsion {
            t.push(vec![x.m.to_string(), x.count.to_string()]);
        }
        tables.push(t);
    }
    let mut out = Output { json: Vec::new(), tables };
    out.push_json(&ClassGroupJson { d: field.d(), disc: field.disc_abs(), h: group.h(), exponent: group.exponent(), forms, torsion });
    Ok(out)
}

/// Runs the cross-path consistency suite and renders its report.
pub fn selfcheck(values: &dyn SpecialValues, quick: bool, tolerance: f64) -> (SelfcheckReport, Output) {
    let cases = if quick { selfcheck::quick_cases() } else { selfcheck::full_cases() };
    let report = selfcheck::run(values, &cases, tolerance);
    let mut out = Output::default();
    let mut table = Table::new(&["d", "disc", "n", "discrepancy", "tolerance", "status"]);
    for line in &report.lines {
        out.push_json(line);
        table.push(vec![
            line.d.to_string(),
            line.disc.to_string(),
            line.n.to_string(),
            line.discrepancy.map(|g| format!("{g:.3e}")).unwrap_or_else(|| line.error.clone().unwrap_or_default()),
            format!("{:.1e}", line.tolerance),
            if line.pass { "pass" } else { "FAIL" }.to_string(),
        ]);
    }
    out.tables.push(table);
    (report, out)
}
