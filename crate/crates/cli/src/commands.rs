use std::fs;
use std::path::Path;

use burau::cover::eigenspace_residual;
use burau::json::{bivariate_value, laurent_matrix_value, to_canonical_string};
use burau::nt::{EphCheck, KBound, SharpPrediction};
use burau::spectral::{SharpnessReport, UnitySlot};
use burau::{
    build_cover_action, burau_matrix, char_poly, eph_check, k_bound_check, parse_braid, predict_sharp_set, scan,
    sharpness, shift_commutation_check, unity_spectrum, verify_direct_sum, BraidWord, BurauMatrix, Error,
    ReductionData, SpectrumMethod,
};
use serde_json::{json, Value};

use crate::output::emit;
use crate::{Cli, Command, Format, Method};

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    fn compute(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::GeneratorOutOfRange { .. }
            | Error::BlockOutOfRange { .. }
            | Error::InvalidBlock(_)
            | Error::TooFewStrings(_)
            | Error::InvalidArgument(_) => CliError::usage(e.to_string()),
            _ => CliError::compute(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn word(cli: &Cli) -> Result<BraidWord> {
    let n = cli.n.ok_or_else(|| CliError::usage("--n is required for this subcommand"))?;
    let text = match (&cli.word, &cli.word_file) {
        (Some(w), None) => w.clone(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?,
        _ => return Err(CliError::usage("exactly one of --word or --word-file is required")),
    };
    Ok(parse_braid(text.trim(), n)?)
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = cli.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(CliError::usage(format!("format {f:?} is not available for this subcommand")));
    }
    Ok(f)
}

fn json_text(value: &Value) -> Result<String> {
    to_canonical_string(value).map_err(|e| CliError::compute(e.to_string()))
}

fn write(cli: &Cli, text: &str) -> Result<()> {
    emit(cli.out.as_deref(), text.as_bytes()).map_err(|e| CliError::compute(format!("write failed: {e}")))
}

fn pair(re: f64, im: f64) -> Value {
    json!([re, im])
}

fn read_reduction(path: &Path) -> Result<ReductionData> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    ReductionData::from_json(&text).map_err(|e| CliError::compute(e.to_string()))
}

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Burau => cmd_burau(cli),
        Command::Scan { resolution, loci } => cmd_scan(cli, *resolution, *loci),
        Command::Unity { k } => cmd_unity(cli, *k),
        Command::Sharp { lambda, kmax, tol, reduction } => cmd_sharp(cli, *lambda, *kmax, *tol, reduction.as_deref()),
        Command::CoverCheck { k, tol, method } => cmd_cover_check(cli, *k, *tol, *method),
        Command::Predict { reduction } => cmd_predict(cli, reduction),
        Command::Charpoly => cmd_charpoly(cli),
    }
}

fn cmd_burau(cli: &Cli) -> Result<()> {
    let w = word(cli)?;
    let m: BurauMatrix = burau_matrix(&w);
    let text = match format_or(cli, Format::Pretty, &[Format::Pretty, Format::Json])? {
        Format::Json => json_text(&laurent_matrix_value(&m))?,
        _ => format!("{m}\n"),
    };
    write(cli, &text)
}

fn cmd_scan(cli: &Cli, resolution: usize, loci: bool) -> Result<()> {
    let w = word(cli)?;
    let s = scan::<f64>(&w, resolution)?;
    let text = match format_or(cli, Format::Csv, &[Format::Csv, Format::Json])? {
        Format::Json => {
            let samples: Vec<Value> = s
                .samples
                .iter()
                .map(|p| {
                    let mut v = json!({ "theta": p.theta, "spectral_radius": p.radius });
                    if loci {
                        v["eigenvalues"] = p.eigenvalues.iter().map(|z| pair(z.re, z.im)).collect();
                    }
                    v
                })
                .collect();
            json_text(&json!({
                "n": w.strings(),
                "word": w.to_string(),
                "resolution": resolution,
                "max_radius": s.max_radius(),
                "samples": samples,
            }))?
        }
        _ => {
            let mut buf = Vec::new();
            s.write_csv(&mut buf, loci).map_err(|e| CliError::compute(e.to_string()))?;
            String::from_utf8(buf).expect("csv is ascii")
        }
    };
    write(cli, &text)
}

fn slot_value(slot: &UnitySlot<f64>, k: u64) -> Value {
    json!({
        "j": slot.j,
        "k": k,
        "eta": pair(slot.eta.re, slot.eta.im),
        "spectral_radius": slot.radius(),
        "eigenvalues": slot.eigenvalues.iter().map(|z| pair(z.re, z.im)).collect::<Vec<_>>(),
    })
}

fn cmd_unity(cli: &Cli, k: u64) -> Result<()> {
    let w = word(cli)?;
    let slots = unity_spectrum::<f64>(&w, k)?;
    let text = match format_or(cli, Format::Json, &[Format::Json, Format::Csv])? {
        Format::Csv => {
            let dim = w.strings() - 1;
            let mut out = String::from("j,k,spectral_radius");
            for i in 1..=dim {
                out += &format!(",re_{i},im_{i}");
            }
            out.push('\n');
            for s in &slots {
                out += &format!("{},{},{}", s.j, k, burau::format::fmt_sig(s.radius(), 12));
                for z in &s.eigenvalues {
                    out += &format!(",{},{}", burau::format::fmt_sig(z.re, 12), burau::format::fmt_sig(z.im, 12));
                }
                out.push('\n');
            }
            out
        }
        _ => json_text(&json!({
            "n": w.strings(),
            "k": k,
            "roots": slots.iter().map(|s| slot_value(s, k)).collect::<Vec<_>>(),
        }))?,
    };
    write(cli, &text)
}

fn sharp_value(report: &SharpnessReport, prediction: Option<&SharpPrediction>) -> Result<Value> {
    let mut v = serde_json::to_value(report).map_err(|e| CliError::compute(e.to_string()))?;
    if let Some(p) = prediction {
        v["predicted"] = serde_json::to_value(&p.sharp).map_err(|e| CliError::compute(e.to_string()))?;
        v["agrees_with_prediction"] = json!(p.sharp == report.fractions());
    }
    Ok(v)
}

fn cmd_sharp(cli: &Cli, lambda: f64, kmax: u64, tol: f64, reduction: Option<&Path>) -> Result<()> {
    format_or(cli, Format::Json, &[Format::Json])?;
    let w = word(cli)?;
    let prediction = match reduction {
        Some(path) => Some(predict_sharp_set(&read_reduction(path)?)?),
        None => None,
    };
    let report = sharpness(&w, lambda, kmax, tol)?;
    write(cli, &json_text(&sharp_value(&report, prediction.as_ref())?)?)
}

fn cmd_cover_check(cli: &Cli, k: usize, tol: f64, method: Method) -> Result<()> {
    format_or(cli, Format::Json, &[Format::Json])?;
    let w = word(cli)?;
    let m: BurauMatrix = burau_matrix(&w);
    let method = match method {
        Method::Exact => SpectrumMethod::Exact,
        Method::Dense => SpectrumMethod::Dense,
    };
    let verdict = verify_direct_sum::<f64>(&m, k, tol, method)?;
    let cover = build_cover_action(&m, k)?;
    let residual = (0..k)
        .map(|j| eigenspace_residual::<_, f64>(&cover, &m, j))
        .collect::<burau::Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let mut v = serde_json::to_value(&verdict).map_err(|e| CliError::compute(e.to_string()))?;
    v["method"] = json!(method);
    v["commutes_with_deck_shift"] = json!(shift_commutation_check(&cover));
    v["eigenspace_residual"] = json!(residual);
    write(cli, &json_text(&v)?)
}

fn cmd_predict(cli: &Cli, path: &Path) -> Result<()> {
    format_or(cli, Format::Json, &[Format::Json])?;
    let rd = read_reduction(path)?;
    let mut eph: Vec<(usize, EphCheck)> = Vec::new();
    for (i, c) in rd.components.iter().enumerate().filter(|(_, c)| c.is_pa) {
        let r = eph_check(c)?;
        if !r.pass {
            return Err(CliError::compute(format!(
                "inconsistent reduction file: component {i} fails Euler-Poincare-Hopf (2 - 2g = {}, sum = {})",
                r.lhs, r.rhs
            )));
        }
        eph.push((i, r));
    }
    let prediction = predict_sharp_set(&rd)?;
    let bound: KBound = k_bound_check(&rd)?;
    let v = json!({
        "n": rd.n,
        "sharp": prediction.sharp,
        "minimal_k": prediction.minimal_k,
        "common_k": prediction.common_k,
        "components": prediction.components,
        "eph": eph.iter().map(|(i, r)| json!({"component": i, "lhs": r.lhs, "rhs": r.rhs, "pass": r.pass})).collect::<Vec<_>>(),
        "k_bound": bound,
    });
    write(cli, &json_text(&v)?)
}

fn cmd_charpoly(cli: &Cli) -> Result<()> {
    let w = word(cli)?;
    let chi = char_poly(&burau_matrix::<num_bigint::BigInt>(&w));
    let text = match format_or(cli, Format::Json, &[Format::Json, Format::Pretty])? {
        Format::Pretty => format!("{chi}\n"),
        _ => json_text(&bivariate_value(&chi))?,
    };
    write(cli, &text)
}
