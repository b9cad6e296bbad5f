use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::Value;
use superpi_core::constructions::{build_family, hom_dims, ut_star, UtSpec, UtStar};
use superpi_core::polynomials::{barred_capelli_set, CapelliSpec};
use superpi_core::{
    admissible_exponent, capelli_threshold, codim_graded, codim_ordinary, from_json,
    gamma_generators, is_reduced, jacobson_radical, satisfies_generator_set, to_json,
    AnalysisConfig, Diamond, FamilyTag, GeneratorSet, StarSuperAlgebra, VarKind,
};

use crate::args::{
    BuildArgs, Cli, CodimArgs, Command, DiamondArg, FamilyArg, IdentityArgs, SignArg,
    ThresholdArgs, UtArgs,
};
use crate::report::{write_rows, Row, Status};
use crate::{analysis_config, exit, verify, CheckFailed};

pub fn run(cli: &Cli) -> Result<u8> {
    let cfg = analysis_config(&cli.global)?;
    let out = cli.global.out.as_deref();
    let rows = match &cli.command {
        Command::Build(a) => return build(a, out),
        Command::Ut(a) => return ut(a, out),
        Command::Dims(a) => dims(&a.algebra)?,
        Command::Threshold(a) => threshold(a, &cfg)?,
        Command::Identity(a) => identity(a, &cfg)?,
        Command::Codim(a) => codim(a, &cfg)?,
        Command::Exponent(a) => exponent(&a.algebra)?,
        Command::VerifyPaper(a) => verify::run(a.suite, &cfg)?,
    };
    write_rows(&rows, out)?;
    let failed = rows.iter().filter(|r| r.status == Status::Fail).count();
    if failed > 0 {
        eprintln!("{failed} checks failed");
        return Ok(exit::FAILURE);
    }
    Ok(exit::SUCCESS)
}

/// Reads and validates an algebra file.
pub fn load_algebra(path: &Path) -> Result<StarSuperAlgebra> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let alg = from_json(&text)?;
    let report = alg.validate();
    if !report.is_empty() {
        bail!(CheckFailed(format!("{} is not a valid algebra: {report}", path.display())));
    }
    Ok(alg)
}

fn subject(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

/// Writes a document to `out`, or to stdout with the summary moved to
/// stderr.
fn emit(document: &str, summary: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => {
            fs::write(p, document).with_context(|| format!("writing {}", p.display()))?;
            println!("{summary}");
        }
        None => {
            println!("{document}");
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn dims_line(d: [usize; 4]) -> String {
    format!("dims (y+, y-, z+, z-) = ({}, {}, {}, {})", d[0], d[1], d[2], d[3])
}

fn family_tag(a: &BuildArgs) -> Result<FamilyTag> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| CheckFailed(format!("--{name} is required for this family")))
    };
    let diamond = match a.diamond {
        DiamondArg::T => Diamond::T,
        DiamondArg::S => Diamond::S,
    };
    Ok(match a.family {
        FamilyArg::MhlT => FamilyTag::MhlT { h: need(a.h, "h")?, l: a.l.unwrap_or(0) },
        FamilyArg::MhhS => FamilyTag::MhhS { h: need(a.h, "h")? },
        FamilyArg::MhlExc => FamilyTag::MhlExc { h: need(a.h, "h")?, l: a.l.unwrap_or(0) },
        FamilyArg::MnCmn => {
            let n = need(a.n, "n")?;
            match a.sign {
                SignArg::Plus => FamilyTag::MnCmnDagger { n, diamond },
                SignArg::Minus => FamilyTag::MnCmnStar { n, diamond },
            }
        }
        FamilyArg::MnCmnExc => FamilyTag::MnCmnExc { n: need(a.n, "n")? },
    })
}

fn build(a: &BuildArgs, out: Option<&Path>) -> Result<u8> {
    let tag = family_tag(a)?;
    let alg = build_family(tag)?;
    let summary = format!("{tag}: dim {}, {}", alg.dim(), dims_line(hom_dims(&alg)));
    emit(&to_json(&alg), &summary, out)?;
    Ok(exit::SUCCESS)
}

fn parse_grading(s: &str) -> Result<Vec<u8>> {
    s.split(',')
        .map(|x| match x.trim() {
            "0" => Ok(0),
            "1" => Ok(1),
            other => Err(CheckFailed(format!("grading entries must be 0 or 1, got {other:?}")).into()),
        })
        .collect()
}

fn ut_spec(a: &UtArgs) -> Result<UtSpec> {
    let (components, grading) = match &a.spec {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| CheckFailed(e.to_string()))?;
            let comps = v["components"]
                .as_array()
                .ok_or_else(|| CheckFailed("spec needs a \"components\" array".into()))?
                .iter()
                .map(|c| c.as_str().map(str::to_string))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| CheckFailed("components must be strings like \"MHL_T(1,0)\"".into()))?;
            let grading = match v.get("grading") {
                Some(g) => g
                    .as_array()
                    .and_then(|g| g.iter().map(|x| x.as_u64().map(|x| x as u8)).collect::<Option<Vec<_>>>())
                    .ok_or_else(|| CheckFailed("grading must be an array of 0/1".into()))?,
                None => vec![0; comps.len()],
            };
            (comps, grading)
        }
        None => {
            let grading = match &a.grading {
                Some(g) => parse_grading(g)?,
                None => vec![0; a.component.len()],
            };
            (a.component.clone(), grading)
        }
    };
    let tags = components
        .iter()
        .map(|c| c.parse::<FamilyTag>())
        .collect::<superpi_core::Result<Vec<_>>>()?;
    Ok(UtSpec::new(tags, grading)?)
}

fn layout_table(u: &UtStar) -> String {
    let mut s = String::from("k\ts_k\teta_k\tBl_k\n");
    for (k, size) in u.layout.sizes.iter().enumerate() {
        let (lo, hi) = (u.layout.eta[k] + 1, u.layout.eta[k + 1]);
        s.push_str(&format!("{}\t{size}\t{hi}\t{lo}..{hi}\n", k + 1));
    }
    s
}

fn ut(a: &UtArgs, out: Option<&Path>) -> Result<u8> {
    let spec = ut_spec(a)?;
    let u = ut_star(&spec)?;
    let rad = jacobson_radical(&u.algebra)?;
    let summary = format!(
        "{}dim {}, radical dim {}, {}",
        layout_table(&u),
        u.algebra.dim(),
        rad.dim(),
        dims_line(hom_dims(&u.algebra))
    );
    emit(&to_json(&u.algebra), &summary, out)?;
    Ok(exit::SUCCESS)
}

fn dims(path: &Path) -> Result<Vec<Row>> {
    let alg = load_algebra(path)?;
    let subj = subject(path);
    let mut rows = vec![Row::measured("dim", &subj, "", "", alg.dim())];
    for (kind, d) in VarKind::GRADED.into_iter().zip(hom_dims(&alg)) {
        rows.push(Row::measured("hom_dim", &subj, kind.symbol(), "", d));
    }
    Ok(rows)
}

fn threshold(a: &ThresholdArgs, cfg: &AnalysisConfig) -> Result<Vec<Row>> {
    let alg = load_algebra(&a.algebra)?;
    let kind: VarKind = a.kind.parse()?;
    let cfg = AnalysisConfig { barred: !a.unbarred, ..cfg.clone() };
    let r = capelli_threshold(&alg, kind, a.cap, &cfg)?;
    if let Some(w) = &r.witness {
        eprintln!("non-identity below the threshold: {}", w.poly.describe());
    }
    let t = r.threshold.to_string();
    Ok(vec![Row::measured("threshold", &subject(&a.algebra), kind.symbol(), &t, &t)])
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| CheckFailed(format!("not a number: {x:?}")).into()))
        .collect()
}

fn identity(a: &IdentityArgs, cfg: &AnalysisConfig) -> Result<Vec<Row>> {
    let alg = load_algebra(&a.algebra)?;
    let kind: VarKind = a.kind.parse()?;
    let (set, label, n) = match (&a.gamma, a.rank) {
        (Some(g), _) => {
            let r = parse_list(g)?;
            if r.len() != 4 {
                bail!(CheckFailed("--gamma needs four ranks M+,M-,L+,L-".into()));
            }
            (gamma_generators(r[0], r[1], r[2], r[3])?, format!("gamma({g})"), String::new())
        }
        (None, Some(m)) => {
            let set = if a.barred {
                barred_capelli_set(m, kind)?
            } else {
                let gaps = match &a.deleted {
                    Some(d) => parse_list(d)?
                        .into_iter()
                        .map(|g| g.checked_sub(1).ok_or_else(|| CheckFailed("gaps are 1-based".into())))
                        .collect::<std::result::Result<Vec<_>, _>>()?,
                    None => Vec::new(),
                };
                GeneratorSet::new(vec![CapelliSpec::new(m, kind, &gaps)?])?
            };
            (set, kind.symbol().to_string(), m.to_string())
        }
        (None, None) => bail!(CheckFailed("either --rank or --gamma is required".into())),
    };
    let r = satisfies_generator_set(&alg, &set, cfg)?;
    if let Some(w) = &r.witness {
        eprintln!("violated by {}", w.poly.describe());
    }
    let actual = if r.is_identity { "identity" } else { "violated" };
    Ok(vec![Row::measured("identity", &subject(&a.algebra), &label, &n, actual)])
}

fn codim(a: &CodimArgs, cfg: &AnalysisConfig) -> Result<Vec<Row>> {
    if a.n > cfg.cap_n {
        return Err(superpi_core::Error::CapExceeded {
            what: "codimension degree".into(),
            needed: a.n as u128,
            cap: cfg.cap_n as u128,
        }
        .into());
    }
    let alg = load_algebra(&a.algebra)?;
    let subj = subject(&a.algebra);
    let mut rows = Vec::new();
    for n in 1..=a.n {
        let (kind, value) = if a.ordinary {
            ("x", codim_ordinary(&alg, n, cfg)?)
        } else {
            ("graded", codim_graded(&alg, n, cfg)?.value)
        };
        let root = (value as f64).powf(1.0 / n as f64);
        rows.push(Row::measured("codim", &subj, kind, &n.to_string(), value));
        rows.push(Row::measured("codim_root", &subj, kind, &n.to_string(), format!("{root:.6}")));
    }
    Ok(rows)
}

fn exponent(path: &Path) -> Result<Vec<Row>> {
    let alg = load_algebra(path)?;
    let subj = subject(path);
    Ok(vec![
        Row::measured("exponent", &subj, "", "", admissible_exponent(&alg)?),
        Row::measured("reduced", &subj, "", "", is_reduced(&alg)?),
    ])
}
