use clap::ValueEnum;
use num_bigint::BigInt;
use pathinv::hankel::{det_fraction_free, hankel_closed, hankel_matrix, HankelSpec};
use pathinv::motzkin::{
    banded_motzkin_gf, banded_motzkin_recursion_check, first_return_check, grand_column_gf, grand_matrix,
    inverse_motzkin_matrix, motzkin_matrix, orthogonality_check, verify_lemma,
};
use pathinv::oracle::{CountTable, Mode, PathSpec};
use pathinv::schroder::{
    banded_w_column_gf, banded_w_gf, delannoy_gf_check, delannoy_number, delannoy_recursion_check,
    delannoy_s_bridge_check, format_laurent, gould_identity_check, inverse_schroder_matrix,
    schroder_matrix_compressed, theorem_identity_check, theorem_schroeder, theorem_schroeder_check, w_column_gf,
};
use pathinv::{errata, Error, OmegaPoly, TSeries, Verdict};
use serde_json::{json, Value};

use crate::output::{self, at_omega, Format};
use crate::{
    BandFamily, HankelArgs, MatrixArgs, MatrixKind, Omega, Outcome, SeqArgs, SeqFamily, Suite, VerifyArgs,
    EXIT_MISMATCH,
};

fn name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn from_error(e: Error) -> Outcome {
    match e {
        Error::InvalidParameter(_) | Error::BandViolation { .. } | Error::IndexOutOfTriangle { .. } => {
            Outcome::usage(format!("error: {e}\n"))
        }
        other => Outcome { code: EXIT_MISMATCH, stdout: String::new(), stderr: format!("error: {other}\n") },
    }
}

fn csv_text(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

/// Coefficient `n` counts paths of length `n` ending at height `j`, for `n <= N`.
fn seq_coeffs(a: &SeqArgs) -> Result<Vec<OmegaPoly>, Outcome> {
    let (n, j) = (a.n, a.j);
    let w = a.w.unwrap_or(1);
    if a.w.is_some() && !matches!(a.family, SeqFamily::WPath | SeqFamily::Banded) {
        return Err(Outcome::usage("error: --w applies only to w-path and banded sequences\n"));
    }
    if a.k.is_some() && a.family != SeqFamily::Banded {
        return Err(Outcome::usage("error: --k applies only to banded sequences\n"));
    }
    let lift = |s: TSeries| s.shift(j).coeffs().to_vec();
    let series = match a.family {
        SeqFamily::Motzkin => lift(w_column_gf(j, 1, n).map_err(from_error)?),
        SeqFamily::WPath => lift(w_column_gf(j, w, n).map_err(from_error)?),
        SeqFamily::GrandMotzkin => grand_column_gf(j, n).coeffs().to_vec(),
        SeqFamily::SchroderCompressed => {
            let table = CountTable::build(PathSpec::schroder(), 2 * n);
            (0..=n)
                .map(|i| if i < j { OmegaPoly::zero() } else { table.compressed(i, j).expect("j <= i") })
                .collect()
        }
        SeqFamily::Delannoy => (0..=n).map(|i| delannoy_number(i, i + j)).collect(),
        SeqFamily::Banded => {
            let Some(k) = a.k else {
                return Err(Outcome::usage("error: banded sequences need --k (band height k >= 1)\n"));
            };
            if a.w.is_some() && a.family_in_band != BandFamily::WPath {
                return Err(Outcome::usage("error: --w inside a band needs --family w-path\n"));
            }
            banded_coeffs(a.family_in_band, k, j, w, n).map_err(from_error)?
        }
    };
    Ok(series)
}

fn banded_coeffs(family: BandFamily, k: usize, j: usize, w: usize, n: usize) -> pathinv::Result<Vec<OmegaPoly>> {
    if k == 0 {
        return Err(Error::InvalidParameter("band height k must be at least 1".into()));
    }
    if j >= k {
        return Err(Error::BandViolation { j: j as i64, k });
    }
    Ok(match (family, j) {
        (BandFamily::Motzkin, 0) => banded_motzkin_gf(k)?.gf.expand(n).coeffs().to_vec(),
        (BandFamily::Motzkin, _) => banded_w_column_gf(k, j, 1, n)?.shift(j).coeffs().to_vec(),
        (BandFamily::WPath, _) => banded_w_column_gf(k, j, w, n)?.shift(j).coeffs().to_vec(),
        (BandFamily::Schroder, 0) => {
            banded_w_gf(k, 2)?.compress().expect("even step").expand(n).coeffs().to_vec()
        }
        (BandFamily::Schroder, _) => {
            let table = CountTable::build(PathSpec::new(2, Mode::Banded(k))?, 2 * n);
            (0..=n)
                .map(|i| if i < j { Ok(OmegaPoly::zero()) } else { table.compressed(i, j) })
                .collect::<pathinv::Result<_>>()?
        }
    })
}

pub(crate) fn seq(a: &SeqArgs, format: Format) -> Outcome {
    match seq_coeffs(a) {
        Ok(coeffs) => {
            let mut meta = json!({ "family": name(a.family), "N": a.n, "j": a.j });
            if a.family == SeqFamily::Banded {
                meta["band_family"] = json!(name(a.family_in_band));
                meta["k"] = json!(a.k);
            }
            if let Some(w) = a.w {
                meta["w"] = json!(w);
            }
            Outcome::ok(output::sequence(&coeffs, &a.omega, format, meta))
        }
        Err(o) => o,
    }
}

pub(crate) fn matrix(a: &MatrixArgs, format: Format) -> Outcome {
    if a.n == 0 {
        return Outcome::usage("error: matrix dimension n must be at least 1\n");
    }
    let m = match a.kind {
        MatrixKind::Motzkin => motzkin_matrix(a.n),
        MatrixKind::MotzkinInverse => inverse_motzkin_matrix(a.n),
        MatrixKind::Schroder => schroder_matrix_compressed(a.n),
        MatrixKind::SchroderInverse => inverse_schroder_matrix(a.n),
        MatrixKind::Grand => grand_matrix(a.n),
    };
    let meta = json!({ "kind": name(a.kind), "n": a.n });
    Outcome::ok(output::matrix(m.rows(), &a.omega, format, meta))
}

pub(crate) fn hankel(a: &HankelArgs, format: Format) -> Outcome {
    if a.n == 0 {
        return Outcome::usage("error: determinant dimension n must be at least 1\n");
    }
    if a.shift > 0 && (a.alpha.is_some() || a.beta.is_some()) {
        return Outcome::usage("error: --alpha and --beta apply only with --shift 0\n");
    }
    let alpha = OmegaPoly::constant(a.alpha.clone().unwrap_or_else(|| BigInt::from(1)));
    let beta = OmegaPoly::constant(a.beta.clone().unwrap_or_default());
    let spec = if a.shift == 0 {
        HankelSpec::combination(alpha.clone(), beta.clone(), a.n)
    } else {
        HankelSpec::shifted(a.shift, a.n)
    };
    let m = match hankel_matrix(&spec) {
        Ok(m) => m,
        Err(e) => return from_error(e),
    };
    let m = match &a.omega {
        Omega::Symbolic => m,
        Omega::Value(x) => m.specialize(x),
    };
    let det = match det_fraction_free(&m) {
        Ok(d) => d,
        Err(e) => return from_error(e),
    };
    let closed = hankel_closed(&spec).map(|c| at_omega(&c, &a.omega)).expect("closed form for every accepted spec");
    let agree = closed == det;
    let stdout = match format {
        Format::Plain => format!("determinant: {det}\nclosed form: {closed}\nagree: {agree}\n"),
        Format::Csv => format!("determinant,closed_form,agree\n{},{},{agree}\n", csv_text(&det.to_string()), csv_text(&closed.to_string())),
        Format::Json => output::to_json(&json!({
            "n": a.n,
            "shift": a.shift,
            "alpha": alpha,
            "beta": beta,
            "omega": a.omega.to_string(),
            "determinant": det,
            "closed_form": closed,
            "agree": agree,
        })),
    };
    Outcome { code: if agree { 0 } else { EXIT_MISMATCH }, stdout, stderr: String::new() }
}

struct CheckResult {
    name: String,
    verdict: Verdict,
    details: Vec<(String, String)>,
}

fn check(name: impl Into<String>, verdict: Verdict) -> CheckResult {
    CheckResult { name: name.into(), verdict, details: Vec::new() }
}

fn first_failure(v: impl IntoIterator<Item = Verdict>) -> Verdict {
    v.into_iter().find(Result::is_err).unwrap_or(Ok(()))
}

fn run_suite(which: Suite, a: &VerifyArgs) -> pathinv::Result<Vec<CheckResult>> {
    let max = a.max;
    let horizon = a.n.unwrap_or(max);
    Ok(match which {
        Suite::Lemma => {
            let v = first_failure((0..=max).flat_map(|i| (0..=max).map(move |j| verify_lemma(i, j))));
            vec![check(format!("lemma (i, j <= {max})"), v)]
        }
        Suite::Orthogonality => vec![check(format!("orthogonality (j <= {max})"), orthogonality_check(max))],
        Suite::BandedRecursion => {
            let ks: Vec<usize> = a.k.map_or_else(|| (1..=6).collect(), |k| vec![k]);
            let mut out = Vec::new();
            for k in ks {
                out.push(check(format!("banded-recursion (k = {k}, n <= {horizon})"), banded_motzkin_recursion_check(k, horizon)?));
            }
            out
        }
        Suite::FirstReturn => vec![check(format!("first-return (n <= {horizon})"), first_return_check(horizon))],
        Suite::Delannoy => vec![
            check(format!("delannoy recursion (n, j <= {max})"), delannoy_recursion_check(max)),
            check(format!("delannoy generating function (degree <= {max})"), delannoy_gf_check(max)),
        ],
        Suite::Bridge => {
            let mut v = Ok(());
            for n in 1..=max {
                v = delannoy_s_bridge_check(n)?;
                if v.is_err() {
                    break;
                }
            }
            vec![check(format!("bridge (n <= {max})"), v)]
        }
        Suite::Gould => {
            let k = a.k.unwrap_or(max);
            let mut v = Ok(());
            'outer: for kk in 0..=k {
                for m in 0..=kk / 2 {
                    v = gould_identity_check(kk, m)?;
                    if v.is_err() {
                        break 'outer;
                    }
                }
            }
            vec![check(format!("gould (k <= {k})"), v)]
        }
        Suite::TheoremSchroeder => {
            let k = a.k.unwrap_or(4);
            let report = theorem_schroeder(k, horizon)?;
            let regular: Vec<String> = report.regular.eval(&BigInt::from(1)).iter().map(ToString::to_string).collect();
            let mut main = check(format!("theorem-schroeder (k = {k}, N = {horizon})"), theorem_schroeder_check(k, horizon)?);
            main.details.push(("principal part".into(), format_laurent(&report.principal)));
            main.details.push(("regular part".into(), regular.join(" ")));
            vec![main, check(format!("theorem identity (k = {k}, N = {horizon})"), theorem_identity_check(k, horizon)?)]
        }
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Lemma,
                Suite::Orthogonality,
                Suite::BandedRecursion,
                Suite::FirstReturn,
                Suite::Delannoy,
                Suite::Bridge,
                Suite::Gould,
                Suite::TheoremSchroeder,
            ] {
                out.extend(run_suite(s, a)?);
            }
            out
        }
    })
}

pub(crate) fn verify(a: &VerifyArgs, format: Format) -> Outcome {
    if a.max == 0 || a.n == Some(0) || a.k == Some(0) {
        return Outcome::usage("error: verification bounds must be positive\n");
    }
    let results = match run_suite(a.which, a) {
        Ok(r) => r,
        Err(e) => return from_error(e),
    };
    let pass = results.iter().all(|r| r.verdict.is_ok());
    let stdout = match format {
        Format::Plain => {
            let mut s = String::new();
            for r in &results {
                match &r.verdict {
                    Ok(()) => s.push_str(&format!("PASS {}\n", r.name)),
                    Err(m) => s.push_str(&format!("FAIL {}: {m}\n", r.name)),
                }
                for (k, v) in &r.details {
                    s.push_str(&format!("  {k}: {v}\n"));
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("check,status,counterexample\n");
            for r in &results {
                let (status, cx) = match &r.verdict {
                    Ok(()) => ("pass", String::new()),
                    Err(m) => ("fail", csv_text(&m.to_string())),
                };
                s.push_str(&format!("{},{status},{cx}\n", csv_text(&r.name)));
            }
            s
        }
        Format::Json => {
            let checks: Vec<Value> = results
                .iter()
                .map(|r| {
                    let details: serde_json::Map<String, Value> =
                        r.details.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                    json!({
                        "name": r.name,
                        "pass": r.verdict.is_ok(),
                        "counterexample": r.verdict.as_ref().err().map(ToString::to_string),
                        "details": details,
                    })
                })
                .collect();
            output::to_json(&json!({ "pass": pass, "checks": checks }))
        }
    };
    Outcome { code: if pass { 0 } else { EXIT_MISMATCH }, stdout, stderr: String::new() }
}

pub(crate) fn typo_ledger(format: Format) -> Outcome {
    let results = match errata::check_all() {
        Ok(r) => r,
        Err(e) => return from_error(e),
    };
    let proved = results.iter().all(|(_, v)| v.is_ok());
    let stdout = match format {
        Format::Plain => results
            .iter()
            .map(|(e, v)| {
                let status = match v {
                    Ok(()) => "proved by recomputation".to_string(),
                    Err(m) => format!("FAILED: {m}"),
                };
                format!(
                    "{}: {}\n  printed:  {}\n  resolved: {}\n  check:    {status}\n",
                    e.id, e.citation, e.printed, e.resolved
                )
            })
            .collect(),
        Format::Csv => {
            let mut s = String::from("id,citation,printed,resolved,proved\n");
            for (e, v) in &results {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    e.id,
                    csv_text(e.citation),
                    csv_text(e.printed),
                    csv_text(e.resolved),
                    v.is_ok()
                ));
            }
            s
        }
        Format::Json => {
            let entries: Vec<Value> = results
                .iter()
                .map(|(e, v)| {
                    let mut obj = serde_json::to_value(e).expect("erratum serializes");
                    obj["proved"] = json!(v.is_ok());
                    obj
                })
                .collect();
            output::to_json(&json!({ "typo_ledger": entries }))
        }
    };
    Outcome { code: if proved { 0 } else { EXIT_MISMATCH }, stdout, stderr: String::new() }
}
