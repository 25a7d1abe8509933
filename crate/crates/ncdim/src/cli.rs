//! Command-line dispatch. [`run`] is the whole program minus process exit, so
//! tests can drive it in-process.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand, ValueEnum};
use ncdim_core::classes::orlov_generator_classes;
use ncdim_core::curve::enumerate_negative_triples;
use ncdim_core::hn::hn_normalize;
use ncdim_core::quiver::{classify, gl_star_quiver, quiver_dimension_report};
use ncdim_core::stability::{
    check_support, min_h_for_epsilon, sampled_sup_gap, serre_twist_phase_gap, stab_space_dim,
    support_lower_bound,
};
use ncdim_core::{CrVector, KClass, NegativeFamily, QuiverKind, Rational, StabParams};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use crate::format::{
    parse_rational, rational_string, rational_unicode, real_string, slope_string, CrVectorOut, FilteredJson,
    FilteredOut, KClassJson, KClassOut, QuiverInput, QuiverJson, ReportJson, SignatureJson, SupportJson,
};
use crate::{table, CliError};

#[derive(Debug, Parser)]
#[command(name = "ncdim", version, about = "Dimension invariants of noncommutative curves")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension report, canonical degree and family of a curve signature.
    CurveReport {
        /// `{"genus": g, "orders": [...]}`, inline or `@file`.
        signature: String,
        /// Also list the four generator classes for a line bundle of this degree.
        #[arg(long, allow_negative_numbers = true)]
        generator_degree: Option<i64>,
    },
    /// Classification and dimension report of a quiver.
    QuiverReport {
        /// `{"vertices": n, "arrows": [[s, t], ...]}` or `{"star": [a, b, c]}`.
        quiver: String,
    },
    /// The dimension table for abelian categories of dimension at most one.
    Table,
    /// Arithmetic on K-classes.
    KOp {
        #[arg(value_enum)]
        op: KOp,
        /// Operand classes, inline or `@file`.
        #[arg(required = true, num_args = 1..=2)]
        operands: Vec<String>,
    },
    /// Exhaustive support-property check on a box of Chen–Ruan vectors.
    StabCheck {
        signature: String,
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
    /// Smallest H for which twisting by ω moves phases by less than ε.
    GldimH {
        signature: String,
        #[arg(long)]
        eps: String,
        /// Random classes sampled to confirm the bound.
        #[arg(long, default_value_t = 256)]
        samples: u32,
    },
    /// Normalize a list of semistable pieces into HN order.
    HnNormalize {
        /// `{"pieces": [...]}`, inline or `@file`.
        pieces: String,
    },
    /// Genus-0 triples with negative canonical degree, by family.
    TripleScan {
        #[arg(long, default_value_t = 50)]
        bound: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KOp {
    Add,
    Tensor,
    Dual,
    Chorb,
    Slope,
}

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut warnings = Vec::new();
    let result = dispatch(&cli, &mut warnings);
    let mut stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    match result {
        Ok(stdout) => Outcome { code: 0, stdout, stderr },
        Err(e) => {
            let body = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            stderr.push_str(&format!("{body}\n"));
            Outcome { code: e.exit_code(), stdout: String::new(), stderr }
        }
    }
}

/// Reads an argument that is inline JSON or `@path`.
fn input<T: DeserializeOwned>(arg: &str) -> Result<T, CliError> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| CliError::Malformed(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli, warnings: &mut Vec<String>) -> Result<String, CliError> {
    let md = cli.format == Format::Markdown;
    match &cli.command {
        Command::CurveReport { signature, generator_degree } => {
            let sig = input::<SignatureJson>(signature)?.to_core(warnings)?;
            let report = sig.dimension_report();
            let family = sig.negative_family();
            let generators = generator_degree
                .map(|d| orlov_generator_classes(&sig, d))
                .transpose()?
                .map(|g| g.iter().map(KClassOut::from).collect::<Vec<_>>());
            if md {
                let mut out = String::from("| signature | deg ω | family | hdim | rdim | ddim | Sdim | gldim |\n");
                out.push_str("|---|---|---|---|---|---|---|---|\n");
                out.push_str(&format!(
                    "| {sig} | {} | {} | {} | {} | {} | {} | {} |\n",
                    rational_unicode(sig.omega_degree()),
                    family.map_or("—".to_string(), |f| f.to_string()),
                    report.hdim,
                    report.rdim,
                    report.ddim,
                    rational_unicode(report.sdim),
                    rational_unicode(report.gldim),
                ));
                return Ok(out);
            }
            Ok(to_json(&json!({
                "signature": SignatureJson::from_core(&sig),
                "omega_degree": rational_string(sig.omega_degree()),
                "cr_rank": sig.cr_rank(),
                "stab_space_dim": stab_space_dim(&sig),
                "family": family.map(|f| f.name()),
                "family_triple": family.map(|f| f.triple()),
                "hn_split_threshold": sig.hn_split_threshold(),
                "generator_degree_bound": sig.generator_degree_bound(),
                "generators": generators,
                "report": ReportJson::from(&report),
            })))
        }
        Command::QuiverReport { quiver } => {
            let (q, star_type) = match input::<QuiverInput>(quiver)? {
                QuiverInput::Explicit(j) => (j.to_core()?, None),
                QuiverInput::Star { star } => {
                    let s = gl_star_quiver(star[0], star[1], star[2])?;
                    (s.quiver, Some(s.star_type))
                }
            };
            let class = classify(&q)?;
            let report = quiver_dimension_report(&q)?;
            let (kind, ade, coxeter) = match class.kind {
                QuiverKind::Dynkin { ade, coxeter } => ("dynkin", Some(ade.to_string()), Some(coxeter)),
                QuiverKind::Extended => ("extended", None, None),
                QuiverKind::Wild => ("wild", None, None),
            };
            if md {
                let label = ade.clone().unwrap_or_else(|| kind.to_string());
                let mut out = String::from("| quiver | type | hdim | rdim | ddim | Sdim | gldim |\n");
                out.push_str("|---|---|---|---|---|---|---|\n");
                out.push_str(&format!(
                    "| {} vertices, {} arrows | {label} | {} | {} | {} | {} | {} |\n",
                    q.vertex_count(),
                    q.arrows().len(),
                    report.hdim,
                    report.rdim,
                    report.ddim,
                    rational_unicode(report.sdim),
                    rational_unicode(report.gldim),
                ));
                return Ok(out);
            }
            Ok(to_json(&json!({
                "quiver": QuiverJson::from_core(&q),
                "kind": kind,
                "ade": ade,
                "coxeter": coxeter,
                "is_a1": class.is_a1,
                "star_type": star_type.map(|t| t.to_string()),
                "report": ReportJson::from(&report),
            })))
        }
        Command::Table => {
            let t = table::compute()?;
            Ok(if md { table::markdown(&t) } else { to_json(&t) })
        }
        Command::KOp { op, operands } => k_op(*op, operands, md, warnings),
        Command::StabCheck { signature, bound } => {
            let sig = input::<SignatureJson>(signature)?.to_core(warnings)?;
            let report = check_support(&sig, *bound)?;
            let out = SupportJson::new(&report, support_lower_bound(&sig));
            if md {
                return Ok(format!(
                    "| signature | bound | checked | min ratio | lower bound | ok |\n|---|---|---|---|---|---|\n| {sig} | {bound} | {} | {} | {} | {} |\n",
                    out.checked,
                    rational_unicode(report.min_ratio),
                    rational_unicode(support_lower_bound(&sig)),
                    out.ok
                ));
            }
            Ok(to_json(&json!({
                "signature": SignatureJson::from_core(&sig),
                "bound": bound,
                "checked": out.checked,
                "min_ratio": out.min_ratio,
                "lower_bound": out.lower_bound,
                "minimizer": out.minimizer,
                "ok": out.ok,
            })))
        }
        Command::GldimH { signature, eps, samples } => {
            let sig = input::<SignatureJson>(signature)?.to_core(warnings)?;
            let eps = parse_rational(eps)?;
            let h = min_h_for_epsilon(&sig, eps)?;
            let d = sig.omega_degree();
            let d_f = d.to_f64().unwrap_or(0.0);
            let check = sampled_check(&sig, h, eps, *samples, cli.seed)?;
            if md {
                return Ok(format!(
                    "| signature | deg ω | ε | H | max sampled gap |\n|---|---|---|---|---|\n| {sig} | {} | {} | {} | {} |\n",
                    rational_unicode(d),
                    rational_unicode(eps),
                    real_string(h),
                    real_string(check.max_gap)
                ));
            }
            let sup_above = (h > 0.0).then(|| real_string(sampled_sup_gap(d_f, h * (1.0 + 1e-6))));
            Ok(to_json(&json!({
                "signature": SignatureJson::from_core(&sig),
                "omega_degree": rational_string(d),
                "eps": rational_string(eps),
                "h": real_string(h),
                "sampled_sup_above_h": sup_above,
                "random_classes": {
                    "seed": cli.seed,
                    "count": check.count,
                    "h": rational_string(check.h),
                    "max_gap": real_string(check.max_gap),
                    "ok": check.ok,
                },
            })))
        }
        Command::HnNormalize { pieces } => {
            let parsed = input::<FilteredJson>(pieces)?;
            let classes: Vec<KClass> = parsed.pieces.iter().map(|p| p.to_core(warnings)).collect::<Result<_, _>>()?;
            let f = hn_normalize(&classes)?;
            if md {
                let mut out = String::from("| # | rank | degree | slope |\n|---|---|---|---|\n");
                for (i, (p, s)) in f.pieces().iter().zip(f.slopes()).enumerate() {
                    let slope = s.finite().map_or("∞".to_string(), rational_unicode);
                    out.push_str(&format!("| {} | {} | {} | {slope} |\n", i + 1, p.rank(), rational_unicode(p.degree())));
                }
                return Ok(out);
            }
            Ok(to_json(&FilteredOut::from(&f)))
        }
        Command::TripleScan { bound } => {
            let found = enumerate_negative_triples(*bound)?;
            let families = NegativeFamily::members_up_to(*bound);
            let mut by_family: BTreeMap<&str, usize> = BTreeMap::new();
            for t in &found {
                let f = NegativeFamily::of_triple(*t)
                    .ok_or_else(|| CliError::Core(ncdim_core::Error::Internal(format!("{t:?} has no family"))))?;
                *by_family.entry(f.name()).or_default() += 1;
            }
            if md {
                let mut out = String::from("| family | triples |\n|---|---|\n");
                for (name, n) in &by_family {
                    out.push_str(&format!("| {name} | {n} |\n"));
                }
                out.push_str(&format!("| total | {} |\n", found.len()));
                return Ok(out);
            }
            Ok(to_json(&json!({
                "bound": bound,
                "count": found.len(),
                "families": by_family,
                "matches_families": found == families,
                "triples": found,
            })))
        }
    }
}

fn k_op(op: KOp, operands: &[String], md: bool, warnings: &mut Vec<String>) -> Result<String, CliError> {
    let classes: Vec<KClass> = operands
        .iter()
        .map(|o| input::<KClassJson>(o)?.to_core(warnings))
        .collect::<Result<_, _>>()?;
    let arity = match op {
        KOp::Add | KOp::Tensor => 2,
        KOp::Dual | KOp::Chorb | KOp::Slope => 1,
    };
    if classes.len() != arity {
        return Err(CliError::Usage(format!("{op:?} takes {arity} operand(s), got {}", classes.len())));
    }
    let class_out = |c: &KClass| -> String {
        if md {
            format!(
                "| rank | degree | locals |\n|---|---|---|\n| {} | {} | {:?} |\n",
                c.rank(),
                rational_unicode(c.degree()),
                c.locals()
            )
        } else {
            to_json(&KClassOut::from(c))
        }
    };
    Ok(match op {
        KOp::Add => class_out(&classes[0].add(&classes[1])?),
        KOp::Tensor => class_out(&classes[0].tensor(&classes[1])?),
        KOp::Dual => class_out(&classes[0].dual()),
        KOp::Chorb => {
            let v: CrVector = classes[0].ch_orb();
            if md {
                format!("| ch_orb |\n|---|\n| {:?} |\n", v.flatten())
            } else {
                to_json(&CrVectorOut::from(&v))
            }
        }
        KOp::Slope => {
            let s = classes[0].slope()?;
            if md {
                format!("| slope |\n|---|\n| {} |\n", s.finite().map_or("∞".to_string(), rational_unicode))
            } else {
                to_json(&json!({ "slope": slope_string(s) }))
            }
        }
    })
}

struct SampledCheck {
    count: u32,
    h: Rational,
    max_gap: f64,
    ok: bool,
}

/// Draws random bundle and torsion classes and measures the largest
/// Serre-twist phase gap at a rational `H` just above the threshold.
fn sampled_check(
    sig: &ncdim_core::CurveSignature,
    h: f64,
    eps: Rational,
    count: u32,
    seed: u64,
) -> Result<SampledCheck, CliError> {
    const SCALE: i64 = 1_000_000_000;
    let above = if h > 0.0 { h * (1.0 + 1e-6) } else { 1.0 };
    let h_rational = Rational::new((above * SCALE as f64).ceil() as i64, SCALE);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_gap: f64 = 0.0;
    for _ in 0..count {
        let rank = rng.gen_range(0..=6);
        let coarse_degree = rng.gen_range(-50..=50);
        let locals = sig
            .orders()
            .iter()
            .map(|&e| (1..e).map(|_| rng.gen_range(0..=3)).collect())
            .collect();
        let class = KClass::from_ch_orb(&CrVector { rank, coarse_degree, locals })?;
        if !class.is_heart_effective() {
            continue;
        }
        let beta = Rational::new(rng.gen_range(-100..=100), 4);
        let params = StabParams::new(beta, h_rational)?;
        max_gap = max_gap.max(serre_twist_phase_gap(&params, &class, sig)?);
    }
    let eps_f = eps.to_f64().unwrap_or(0.0);
    Ok(SampledCheck { count, h: h_rational, max_gap, ok: max_gap < eps_f })
}
