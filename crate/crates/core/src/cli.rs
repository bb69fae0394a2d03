//! Command-line front end.
//!
//! Six subcommands: `tf` and `bn` run the two enumerators, `chi` and
//! `cohom` evaluate the underlying numerics, `survey` sweeps a
//! parameter range emitting one JSON record per point, and `verify`
//! runs the independent oracles. Every flag can instead be supplied by
//! a `key=value` config file via `--config`; explicit flags win.
//!
//! Exit codes: 0 success, 2 invalid input, 3 arithmetic overflow,
//! 4 consistency failure (a `--check` or `verify` run that found a
//! mismatch).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bn::{bn_components, codim_two_path_check, serre_correspondence, BNKind};
use crate::cohomology::line_cohomology;
use crate::config::{config_bool, load_config};
use crate::euler::{chi_line_bundle, chi_self_pair, chi_sheaf};
use crate::oracle::{
    cross_ruling_diagnostic, hilbert_function, sample_component_configuration,
    sample_general_configuration, witness_in_reach,
};
use crate::output::{
    cell_bool, cell_opt, render_csv, render_kv, render_table, to_json_line, to_pretty_json,
    BNComponentRecord, BNRunRecord, BNSurveyRecord, CheckRecord, ChiRecord, CohomRecord,
    CrossRulingRecord, OutputFormat, TFComponentRecord, TFRunRecord, TFSurveyRecord,
    VerifyBNRecord, VerifyComponentRecord,
};
use crate::surface::{ChernData, SurfaceModel};
use crate::tf::{
    admissible_region_description, enumerate_nonprioritary, prioritary_component,
    prioritary_obstruction, Window,
};
use crate::{Error, Result};

const NO_WINDOW_NOTE: &str = "no --window given: nonprioritary components are not enumerated; \
                              the admissible region describes where they live";

#[derive(Parser)]
#[command(
    name = "sheafstrata",
    version,
    about = "Exact enumeration of rank-2 sheaf moduli components and Brill-Noether loci \
             on rational and ruled surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Components of the stack of rank-2 torsion-free sheaves
    Tf(TfArgs),
    /// Components of the Brill-Noether locus of point schemes
    Bn(BnArgs),
    /// Euler characteristic of a line bundle or sheaf
    Chi(ChiArgs),
    /// Cohomology of the generic line bundle in a class
    Cohom(CohomArgs),
    /// Sweep a parameter range, one record per point
    Survey(SurveyArgs),
    /// Independent verification oracles
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Key=value file supplying defaults for the other flags
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Output format: table, json, or csv
    #[arg(long, value_name = "FMT")]
    format: Option<String>,
    /// Write output here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Args)]
struct TfArgs {
    /// Surface: p2, quadric, product:g=G, or ruled:g=G,e=E,assert-no-negative-curves
    #[arg(long)]
    surface: Option<String>,
    /// First Chern class, comma-separated coefficients
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    /// Second Chern number
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Quotient-class box lo..hi[,lo..hi]; omit to skip enumeration
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct BnArgs {
    /// Surface: p2 or quadric
    #[arg(long)]
    surface: Option<String>,
    /// Class of the linear system, comma-separated coefficients
    #[arg(long, allow_hyphen_values = true)]
    e: Option<String>,
    /// Number of points
    #[arg(long = "N", allow_hyphen_values = true)]
    n: Option<String>,
    /// Re-derive each codimension through the sheaf stack and compare
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ChiArgs {
    #[arg(long)]
    surface: Option<String>,
    /// First Chern class, comma-separated coefficients
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    /// Second Chern number (default 0)
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Sheaf rank (default 1)
    #[arg(long, allow_hyphen_values = true)]
    rank: Option<String>,
    /// Also report the self-pairing chi(E,E)
    #[arg(long)]
    pair: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CohomArgs {
    #[arg(long)]
    surface: Option<String>,
    /// Line bundle class, comma-separated coefficients
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SurveyArgs {
    /// What to sweep: tf (over c2) or bn (over N)
    #[arg(value_name = "MODE")]
    mode: Option<String>,
    #[arg(long)]
    surface: Option<String>,
    /// First Chern class (tf mode)
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    /// c2 value or range lo..hi (tf mode)
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Class of the linear system (bn mode)
    #[arg(long, allow_hyphen_values = true)]
    e: Option<String>,
    /// N value or range lo..hi (bn mode)
    #[arg(long = "N", allow_hyphen_values = true)]
    n: Option<String>,
    /// Quotient-class box for the tf sweep
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Surface: p2 or quadric
    #[arg(long)]
    surface: Option<String>,
    /// Class of the linear system (Brill-Noether mode)
    #[arg(long, allow_hyphen_values = true)]
    e: Option<String>,
    /// Number of points (Brill-Noether mode)
    #[arg(long = "N", allow_hyphen_values = true)]
    n: Option<String>,
    /// Point configurations to draw per check (default 20)
    #[arg(long)]
    samples: Option<String>,
    /// Base RNG seed (default 0)
    #[arg(long)]
    seed: Option<String>,
    /// Compare the two ruling conventions on the quadric instead
    #[arg(long = "cross-ruling")]
    cross_ruling: bool,
    /// First Chern class (cross-ruling mode)
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    /// Second Chern number (cross-ruling mode)
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Quotient-class box (cross-ruling mode)
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

/// Flag values merged with the config file; flags win.
struct Params {
    file: BTreeMap<String, String>,
}

impl Params {
    fn new(config: &Option<PathBuf>) -> Result<Self> {
        let file = match config {
            Some(path) => load_config(path)?,
            None => BTreeMap::new(),
        };
        Ok(Params { file })
    }

    fn get(&self, flag: &Option<String>, key: &str) -> Option<String> {
        flag.clone().or_else(|| self.file.get(key).cloned())
    }

    fn require(&self, flag: &Option<String>, key: &str) -> Result<String> {
        self.get(flag, key).ok_or_else(|| {
            Error::InvalidInput(format!(
                "missing --{key}: pass the flag or set {key}= in the config file"
            ))
        })
    }

    fn get_switch(&self, flag: bool, key: &str) -> Result<bool> {
        if flag {
            return Ok(true);
        }
        match self.file.get(key) {
            Some(value) => config_bool(value),
            None => Ok(false),
        }
    }
}

fn parse_i64(text: &str, what: &str) -> Result<i64> {
    text.trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("{what} must be an integer, got {text:?}")))
}

fn parse_u64(text: &str, what: &str) -> Result<u64> {
    text.trim().parse().map_err(|_| {
        Error::InvalidInput(format!("{what} must be a nonnegative integer, got {text:?}"))
    })
}

fn parse_range(text: &str, what: &str) -> Result<(i64, i64)> {
    match text.split_once("..") {
        Some((lo, hi)) => Ok((parse_i64(lo, what)?, parse_i64(hi, what)?)),
        None => {
            let v = parse_i64(text, what)?;
            Ok((v, v))
        }
    }
}

fn resolve_format(p: &Params, common: &CommonArgs, default: OutputFormat) -> Result<OutputFormat> {
    match p.get(&common.format, "format") {
        Some(f) => OutputFormat::parse(&f),
        None => Ok(default),
    }
}

fn emit(p: &Params, common: &CommonArgs, text: &str) -> Result<()> {
    match p.get(&common.out, "out") {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

const TF_HEADER: [&str; 8] = [
    "kind",
    "d",
    "n1",
    "n2",
    "dim",
    "emb_codim",
    "locally_free",
    "sing_len",
];

fn tf_component_rows(components: &[TFComponentRecord]) -> Vec<Vec<String>> {
    components
        .iter()
        .map(|c| {
            vec![
                c.kind.clone(),
                cell_opt(&c.d),
                cell_opt(&c.n1),
                cell_opt(&c.n2),
                c.dimension.to_string(),
                cell_opt(&c.embedding_codim),
                cell_bool(c.generic_locally_free),
                c.singular_locus_length.to_string(),
            ]
        })
        .collect()
}

fn render_tf_table(r: &TFRunRecord) -> String {
    let mut head: Vec<(&str, String)> = vec![
        ("surface", r.surface.clone()),
        ("c1", r.c1.clone()),
        ("c2", r.c2.to_string()),
    ];
    if let Some(w) = &r.window {
        head.push(("window", w.clone()));
    }
    let mut out = render_kv(&head);
    out.push('\n');
    match &r.prioritary_obstruction {
        None => out.push_str("prioritary component: present\n"),
        Some(msg) => {
            out.push_str("prioritary component: none (");
            out.push_str(msg);
            out.push_str(")\n");
        }
    }
    out.push('\n');
    if r.components.is_empty() {
        out.push_str("components: none\n");
    } else {
        out.push_str(&render_table(&TF_HEADER, &tf_component_rows(&r.components)));
    }
    out.push('\n');
    out.push_str("admissible nonprioritary region (D, n1):\n");
    for line in &r.admissible_region {
        out.push_str("  ");
        out.push_str(line);
        out.push('\n');
    }
    if let Some(note) = &r.note {
        out.push('\n');
        out.push_str("note: ");
        out.push_str(note);
        out.push('\n');
    }
    out
}

fn cmd_tf(args: TfArgs) -> Result<i32> {
    let p = Params::new(&args.common.config)?;
    let s = SurfaceModel::parse(&p.require(&args.surface, "surface")?)?;
    let c1 = s.parse_class(&p.require(&args.c1, "c1")?)?;
    let c2 = parse_i64(&p.require(&args.c2, "c2")?, "c2")?;
    let window = match p.get(&args.window, "window") {
        Some(text) => Some(Window::parse(&text)?),
        None => None,
    };
    let chern = ChernData::new(2, c1.clone(), c2)?;
    let prioritary = prioritary_component(&s, &chern)?;
    let obstruction = prioritary_obstruction(&s, &chern)?;
    let nonprioritary = match &window {
        Some(w) => enumerate_nonprioritary(&s, &c1, c2, w)?,
        None => Vec::new(),
    };
    let region = admissible_region_description(&s, &c1, c2)?;
    let mut components: Vec<TFComponentRecord> =
        nonprioritary.iter().map(TFComponentRecord::from).collect();
    if let Some(pri) = &prioritary {
        components.push(TFComponentRecord::from(pri));
    }
    let record = TFRunRecord {
        surface: s.spec_string(),
        c1: c1.plain(),
        c2,
        window: window.as_ref().map(|w| w.to_string()),
        prioritary_present: prioritary.is_some(),
        prioritary_obstruction: obstruction,
        components,
        admissible_region: region.lines(),
        note: window.is_none().then(|| NO_WINDOW_NOTE.to_string()),
    };
    let format = resolve_format(&p, &args.common, OutputFormat::Table)?;
    let text = match format {
        OutputFormat::Json => to_pretty_json(&record)?,
        OutputFormat::Table => render_tf_table(&record),
        OutputFormat::Csv => render_csv(&TF_HEADER, &tf_component_rows(&record.components)),
    };
    emit(&p, &args.common, &text)?;
    Ok(0)
}

const BN_HEADER: [&str; 7] = ["kind", "d", "n", "gamma", "codim", "dim", "description"];

fn bn_component_rows(components: &[BNComponentRecord]) -> Vec<Vec<String>> {
    components
        .iter()
        .map(|c| {
            vec![
                c.kind.clone(),
                cell_opt(&c.d),
                cell_opt(&c.n),
                cell_opt(&c.gamma_degree),
                c.codim.to_string(),
                c.dim.to_string(),
                c.description.clone(),
            ]
        })
        .collect()
}

fn render_bn_table(r: &BNRunRecord) -> String {
    let mut out = render_kv(&[
        ("surface", r.surface.clone()),
        ("e", r.e.clone()),
        ("N", r.n_points.to_string()),
        ("chi", r.chi.to_string()),
    ]);
    out.push('\n');
    if r.components.is_empty() {
        out.push_str("components: none\n");
    } else {
        out.push_str(&render_table(&BN_HEADER, &bn_component_rows(&r.components)));
    }
    if let Some(checks) = &r.checks {
        out.push('\n');
        out.push_str("checks:\n");
        let rows: Vec<Vec<String>> = checks
            .iter()
            .map(|c| {
                vec![
                    c.component.to_string(),
                    cell_opt(&c.serre_dimension),
                    cell_opt(&c.serre_n2),
                    c.codim_closed_form.to_string(),
                    c.codim_stack_path.to_string(),
                    cell_bool(c.consistent),
                ]
            })
            .collect();
        out.push_str(&render_table(
            &[
                "component",
                "serre_dim",
                "serre_n2",
                "codim_closed",
                "codim_stack",
                "consistent",
            ],
            &rows,
        ));
    }
    out
}

fn cmd_bn(args: BnArgs) -> Result<i32> {
    let p = Params::new(&args.common.config)?;
    let s = SurfaceModel::parse(&p.require(&args.surface, "surface")?)?;
    let e = s.parse_class(&p.require(&args.e, "e")?)?;
    let n = parse_i64(&p.require(&args.n, "N")?, "N")?;
    let check = p.get_switch(args.check, "check")?;
    let comps = bn_components(&s, &e, n)?;
    let chi = chi_line_bundle(&s, &e)?;
    let mut checks = None;
    let mut all_consistent = true;
    if check {
        let mut rows = Vec::new();
        for (i, comp) in comps.iter().enumerate() {
            let (closed, stack) = codim_two_path_check(&s, &e, n, comp)?;
            let (serre_dimension, serre_n2) = match comp.kind {
                BNKind::CurveType => {
                    let tf = serre_correspondence(&s, &e, n, comp)?;
                    (Some(tf.dimension), tf.n2)
                }
                BNKind::PrioritaryType => (None, None),
            };
            let consistent = closed == stack;
            all_consistent &= consistent;
            rows.push(CheckRecord {
                component: i as i64,
                serre_dimension,
                serre_n2,
                codim_closed_form: closed,
                codim_stack_path: stack,
                consistent,
            });
        }
        checks = Some(rows);
    }
    let record = BNRunRecord {
        surface: s.spec_string(),
        e: e.plain(),
        n_points: n,
        chi,
        components: comps.iter().map(BNComponentRecord::from).collect(),
        checks,
    };
    let format = resolve_format(&p, &args.common, OutputFormat::Table)?;
    let text = match format {
        OutputFormat::Json => to_pretty_json(&record)?,
        OutputFormat::Table => render_bn_table(&record),
        OutputFormat::Csv => render_csv(&BN_HEADER, &bn_component_rows(&record.components)),
    };
    emit(&p, &args.common, &text)?;
    Ok(if all_consistent { 0 } else { 4 })
}

fn cmd_chi(args: ChiArgs) -> Result<i32> {
    let p = Params::new(&args.common.config)?;
    let s = SurfaceModel::parse(&p.require(&args.surface, "surface")?)?;
    let c1 = s.parse_class(&p.require(&args.c1, "c1")?)?;
    let c2 = match p.get(&args.c2, "c2") {
        Some(v) => parse_i64(&v, "c2")?,
        None => 0,
    };
    let rank = match p.get(&args.rank, "rank") {
        Some(v) => parse_i64(&v, "rank")?,
        None => 1,
    };
    let pair = p.get_switch(args.pair, "pair")?;
    let chern = ChernData::new(rank, c1.clone(), c2)?;
    let chi = chi_sheaf(&s, &chern)?;
    let chi_pair_self = if pair {
        Some(chi_self_pair(&s, &chern)?)
    } else {
        None
    };
    let record = ChiRecord {
        surface: s.spec_string(),
        rank,
        c1: c1.plain(),
        c2,
        chi,
        chi_pair_self,
    };
    let format = resolve_format(&p, &args.common, OutputFormat::Table)?;
    let text = match format {
        OutputFormat::Json => to_pretty_json(&record)?,
        OutputFormat::Table => {
            let mut pairs: Vec<(&str, String)> = vec![
                ("surface", record.surface.clone()),
                ("rank", record.rank.to_string()),
                ("c1", record.c1.clone()),
                ("c2", record.c2.to_string()),
                ("chi", record.chi.to_string()),
            ];
            if let Some(v) = record.chi_pair_self {
                pairs.push(("chi_pair_self", v.to_string()));
            }
            render_kv(&pairs)
        }
        OutputFormat::Csv => {
            let header = ["surface", "rank", "c1", "c2", "chi", "chi_pair_self"];
            let row = vec![
                record.surface.clone(),
                record.rank.to_string(),
                record.c1.clone(),
                record.c2.to_string(),
                record.chi.to_string(),
                cell_opt(&record.chi_pair_self),
            ];
            render_csv(&header, &[row])
        }
    };
    emit(&p, &args.common, &text)?;
    Ok(0)
}

fn cmd_cohom(args: CohomArgs) -> Result<i32> {
    let p = Params::new(&args.common.config)?;
    let s = SurfaceModel::parse(&p.require(&args.surface, "surface")?)?;
    let c1 = s.parse_class(&p.require(&args.c1, "c1")?)?;
    let triple = line_cohomology(&s, &c1)?;
    let record = CohomRecord {
        surface: s.spec_string(),
        c1: c1.plain(),
        h0: triple.h0,
        h1: triple.h1,
        h2: triple.h2,
        chi: triple.euler(),
    };
    let format = resolve_format(&p, &args.common, OutputFormat::Table)?;
    let text = match format {
        OutputFormat::Json => to_pretty_json(&record)?,
        OutputFormat::Table => render_kv(&[
            ("surface", record.surface.clone()),
            ("c1", record.c1.clone()),
            ("h0", record.h0.to_string()),
            ("h1", record.h1.to_string()),
            ("h2", record.h2.to_string()),
            ("chi", record.chi.to_string()),
        ]),
        OutputFormat::Csv => {
            let header = ["surface", "c1", "h0", "h1", "h2", "chi"];
            let row = vec![
                record.surface.clone(),
                record.c1.clone(),
                record.h0.to_string(),
                record.h1.to_string(),
                record.h2.to_string(),
                record.chi.to_string(),
            ];
            render_csv(&header, &[row])
        }
    };
    emit(&p, &args.common, &text)?;
    Ok(0)
}

fn cmd_survey(args: SurveyArgs) -> Result<i32> {
    let p = Params::new(&args.common.config)?;
    let mode = p.require(&args.mode, "mode")?;
    let format = resolve_format(&p, &args.common, OutputFormat::Json)?;
    let s = SurfaceModel::parse(&p.require(&args.surface, "surface")?)?;
    let text = match mode.as_str() {
        "tf" => {
            let c1 = s.parse_class(&p.require(&args.c1, "c1")?)?;
            let (lo, hi) = parse_range(&p.require(&args.c2, "c2")?, "c2")?;
            let window = match p.get(&args.window, "window") {
                Some(text) => Some(Window::parse(&text)?),
                None => None,
            };
            let mut records = Vec::new();
            for c2 in lo..=hi {
                let chern = ChernData::new(2, c1.clone(), c2)?;
                let prioritary = prioritary_component(&s, &chern)?;
                let mut components: Vec<TFComponentRecord> = match &window {
                    Some(w) => enumerate_nonprioritary(&s, &c1, c2, w)?
                        .iter()
                        .map(TFComponentRecord::from)
                        .collect(),
                    None => Vec::new(),
                };
                if let Some(pri) = &prioritary {
                    components.push(TFComponentRecord::from(pri));
                }
                records.push(TFSurveyRecord {
                    surface: s.spec_string(),
                    c1: c1.plain(),
                    c2,
                    window: window.as_ref().map(|w| w.to_string()),
                    prioritary_present: prioritary.is_some(),
                    components,
                });
            }
            match format {
                OutputFormat::Json => {
                    let mut text = String::new();
                    for r in &records {
                        text.push_str(&to_json_line(r)?);
                        text.push('\n');
                    }
                    text
                }
                OutputFormat::Table | OutputFormat::Csv => {
                    let header = ["c2", "prioritary", "components"];
                    let rows: Vec<Vec<String>> = records
                        .iter()
                        .map(|r| {
                            vec![
                                r.c2.to_string(),
                                cell_bool(r.prioritary_present),
                                r.components.len().to_string(),
                            ]
                        })
                        .collect();
                    if format == OutputFormat::Csv {
                        render_csv(&header, &rows)
                    } else {
                        render_table(&header, &rows)
                    }
                }
            }
        }
        "bn" => {
            let e = s.parse_class(&p.require(&args.e, "e")?)?;
            let (lo, hi) = parse_range(&p.require(&args.n, "N")?, "N")?;
            let chi = chi_line_bundle(&s, &e)?;
            let mut records = Vec::new();
            for n in lo..=hi {
                let comps = bn_components(&s, &e, n)?;
                records.push(BNSurveyRecord {
                    surface: s.spec_string(),
                    e: e.plain(),
                    n_points: n,
                    chi,
                    components: comps.iter().map(BNComponentRecord::from).collect(),
                });
            }
            match format {
                OutputFormat::Json => {
                    let mut text = String::new();
                    for r in &records {
                        text.push_str(&to_json_line(r)?);
                        text.push('\n');
                    }
                    text
                }
                OutputFormat::Table | OutputFormat::Csv => {
                    let header = ["N", "chi", "components", "prioritary_type"];
                    let rows: Vec<Vec<String>> = records
                        .iter()
                        .map(|r| {
                            vec![
                                r.n_points.to_string(),
                                r.chi.to_string(),
                                r.components.len().to_string(),
                                cell_bool(r.components.iter().any(|c| c.kind == "prioritary")),
                            ]
                        })
                        .collect();
                    if format == OutputFormat::Csv {
                        render_csv(&header, &rows)
                    } else {
                        render_table(&header, &rows)
                    }
                }
            }
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "survey mode must be tf or bn, got {other:?}"
            )))
        }
    };
    emit(&p, &args.common, &text)?;
    Ok(0)
}

fn verify_cross_ruling(p: &Params, args: &VerifyArgs) -> Result<i32> {
    let s = SurfaceModel::quadric();
    let c1 = s.parse_class(&p.require(&args.c1, "c1")?)?;
    let c2 = parse_i64(&p.require(&args.c2, "c2")?, "c2")?;
    let window = Window::parse(&p.require(&args.window, "window")?)?;
    let report = cross_ruling_diagnostic(&c1, c2, &window)?;
    let record = CrossRulingRecord {
        surface: s.spec_string(),
        c1: c1.plain(),
        c2,
        window: window.to_string(),
        primary_components: report.primary.len() as i64,
        swapped_components: report.swapped.len() as i64,
        matched: report.matched.len() as i64,
        unmatched_primary: report.unmatched_primary.len() as i64,
        unmatched_swapped: report.unmatched_swapped.len() as i64,
    };
    let format = resolve_format(p, &args.common, OutputFormat::Table)?;
    let text = match format {
        OutputFormat::Json => to_pretty_json(&record)?,
        OutputFormat::Table => render_kv(&[
            ("surface", record.surface.clone()),
            ("c1", record.c1.clone()),
            ("c2", record.c2.to_string()),
            ("window", record.window.clone()),
            ("primary_components", record.primary_components.to_string()),
            ("swapped_components", record.swapped_components.to_string()),
            ("matched", record.matched.to_string()),
            ("unmatched_primary", record.unmatched_primary.to_string()),
            ("unmatched_swapped", record.unmatched_swapped.to_string()),
        ]),
        OutputFormat::Csv => {
            let header = [
                "surface",
                "c1",
                "c2",
                "window",
                "primary_components",
                "swapped_components",
                "matched",
                "unmatched_primary",
                "unmatched_swapped",
            ];
            let row = vec![
                record.surface.clone(),
                record.c1.clone(),
                record.c2.to_string(),
                record.window.clone(),
                record.primary_components.to_string(),
                record.swapped_components.to_string(),
                record.matched.to_string(),
                record.unmatched_primary.to_string(),
                record.unmatched_swapped.to_string(),
            ];
            render_csv(&header, &[row])
        }
    };
    emit(p, &args.common, &text)?;
    Ok(0)
}

const VERIFY_HEADER: [&str; 10] = [
    "kind",
    "d",
    "n",
    "codim",
    "serre_dim",
    "codim_closed",
    "codim_stack",
    "witness_samples",
    "witness_min_h1",
    "passed",
];

fn verify_component_rows(components: &[VerifyComponentRecord]) -> Vec<Vec<String>> {
    components
        .iter()
        .map(|c| {
            vec![
                c.kind.clone(),
                cell_opt(&c.d),
                cell_opt(&c.n),
                c.codim.to_string(),
                cell_opt(&c.serre_dimension),
                c.codim_closed_form.to_string(),
                c.codim_stack_path.to_string(),
                cell_opt(&c.witness_samples),
                cell_opt(&c.witness_min_h1),
                cell_bool(c.passed),
            ]
        })
        .collect()
}

fn verify_bn(p: &Params, args: &VerifyArgs) -> Result<i32> {
    let s = SurfaceModel::parse(&p.require(&args.surface, "surface")?)?;
    let e = s.parse_class(&p.require(&args.e, "e")?)?;
    let n = parse_i64(&p.require(&args.n, "N")?, "N")?;
    let samples = match p.get(&args.samples, "samples") {
        Some(v) => parse_i64(&v, "samples")?,
        None => 20,
    };
    if samples < 1 {
        return Err(Error::InvalidInput(format!(
            "samples must be at least 1, got {samples}"
        )));
    }
    let seed = match p.get(&args.seed, "seed") {
        Some(v) => parse_u64(&v, "seed")?,
        None => 0,
    };
    let comps = bn_components(&s, &e, n)?;
    let mut all_passed = true;
    let mut component_records = Vec::new();
    for comp in &comps {
        let (closed, stack) = codim_two_path_check(&s, &e, n, comp)?;
        let mut passed = closed == stack;
        let mut serre_dimension = None;
        let mut witness_samples = None;
        let mut witness_min_h1 = None;
        if comp.kind == BNKind::CurveType {
            let tf = serre_correspondence(&s, &e, n, comp)?;
            serre_dimension = Some(tf.dimension);
            if witness_in_reach(&s, &e, comp)? {
                let mut drawn = 0i64;
                let mut min_h1: Option<i64> = None;
                for k in 0..samples {
                    match sample_component_configuration(&s, &e, comp, seed.wrapping_add(k as u64))
                    {
                        Ok(config) => {
                            let report = hilbert_function(&s, &e, &config)?;
                            drawn += 1;
                            min_h1 =
                                Some(min_h1.map_or(report.h1_ideal, |m| m.min(report.h1_ideal)));
                        }
                        Err(Error::SamplingFailure { .. }) => {}
                        Err(err) => return Err(err),
                    }
                }
                if drawn == 0 || min_h1.is_some_and(|m| m < 1) {
                    passed = false;
                }
                witness_samples = Some(drawn);
                witness_min_h1 = min_h1;
            }
        }
        all_passed &= passed;
        component_records.push(VerifyComponentRecord {
            kind: comp.kind.label().to_string(),
            d: comp.d.as_ref().map(|d| d.plain()),
            n: comp.n,
            codim: comp.codim,
            serre_dimension,
            codim_closed_form: closed,
            codim_stack_path: stack,
            witness_samples,
            witness_min_h1,
            passed,
        });
    }
    let mut general_ok = true;
    for k in 0..samples {
        let config = sample_general_configuration(
            &s,
            n,
            seed.wrapping_add(100_000).wrapping_add(k as u64),
        )?;
        let report = hilbert_function(&s, &e, &config)?;
        if report.h1_ideal != report.expected_h1 {
            general_ok = false;
        }
    }
    all_passed &= general_ok;
    let record = VerifyBNRecord {
        surface: s.spec_string(),
        e: e.plain(),
        n_points: n,
        samples,
        seed,
        components: component_records,
        general_samples: samples,
        general_h1_expected: general_ok,
        passed: all_passed,
    };
    let format = resolve_format(p, &args.common, OutputFormat::Table)?;
    let text = match format {
        OutputFormat::Json => to_pretty_json(&record)?,
        OutputFormat::Table => {
            let mut out = render_kv(&[
                ("surface", record.surface.clone()),
                ("e", record.e.clone()),
                ("N", record.n_points.to_string()),
                ("samples", record.samples.to_string()),
                ("seed", record.seed.to_string()),
            ]);
            out.push('\n');
            if record.components.is_empty() {
                out.push_str("components: none\n");
            } else {
                out.push_str(&render_table(
                    &VERIFY_HEADER,
                    &verify_component_rows(&record.components),
                ));
            }
            out.push('\n');
            out.push_str(&render_kv(&[
                ("general_samples", record.general_samples.to_string()),
                ("general_h1_expected", cell_bool(record.general_h1_expected)),
                (
                    "overall",
                    if record.passed { "PASS" } else { "FAIL" }.to_string(),
                ),
            ]));
            out
        }
        OutputFormat::Csv => {
            render_csv(&VERIFY_HEADER, &verify_component_rows(&record.components))
        }
    };
    emit(p, &args.common, &text)?;
    Ok(if all_passed { 0 } else { 4 })
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let p = Params::new(&args.common.config)?;
    if p.get_switch(args.cross_ruling, "cross-ruling")? {
        verify_cross_ruling(&p, &args)
    } else {
        verify_bn(&p, &args)
    }
}

/// Parse real process arguments and run; returns the process exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Run with explicit arguments (the first is the program name).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Tf(a) => cmd_tf(a),
        Command::Bn(a) => cmd_bn(a),
        Command::Chi(a) => cmd_chi(a),
        Command::Cohom(a) => cmd_cohom(a),
        Command::Survey(a) => cmd_survey(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
