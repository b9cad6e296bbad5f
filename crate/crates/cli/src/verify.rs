//! Verification suites: closed-form dimension formulas, Capelli thresholds
//! of simple and block-triangular algebras, codimension inequalities,
//! Peirce decompositions, exponents and the radical-extension
//! counterexamples. Every check becomes one report row.

use anyhow::Result;
use superpi_core::constructions::{
    build_family, commutative_nilpotent, hom_dims, noncommutative_nilpotent,
    one_sided_radical_extension, tensor_nilpotent_extension, ut_star, UtSpec,
};
use superpi_core::{
    admissible_exponent, capelli_threshold, codim_graded, codim_ordinary, gamma_generators,
    jacobson_radical, peirce_decompose, satisfies_generator_set, AnalysisConfig, Diamond,
    FamilyTag, StarSuperAlgebra, Subspace, VarKind,
};

use crate::args::Suite;
use crate::report::Row;

pub fn run(suite: Suite, cfg: &AnalysisConfig) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Dims {
        rows.extend(dims_suite()?);
    }
    if all || suite == Suite::Thresholds {
        rows.extend(thresholds_suite(cfg)?);
    }
    if all || suite == Suite::Sandwich {
        rows.extend(sandwich_suite(cfg)?);
    }
    if all || suite == Suite::Peirce {
        rows.extend(peirce_suite()?);
    }
    if all || suite == Suite::Exponent {
        rows.extend(exponent_suite()?);
    }
    if all || suite == Suite::Counterexamples {
        rows.extend(counterexample_suite(cfg)?);
    }
    Ok(rows)
}

/// `(M⁺, M⁻, L⁺, L⁻)` from the classification formulas.
pub fn expected_dims(tag: FamilyTag) -> [usize; 4] {
    let tri = |n: usize| n * (n + 1) / 2;
    let tri_minus = |n: usize| n * n.saturating_sub(1) / 2;
    match tag {
        FamilyTag::MhlT { h, l } => [tri(h) + tri(l), tri_minus(h) + tri_minus(l), h * l, h * l],
        FamilyTag::MhhS { h } => [h * h, h * h, h * (h - 1), h * (h + 1)],
        FamilyTag::MhlExc { h, l } => [h * h + l * l, h * h + l * l, 2 * h * l, 2 * h * l],
        FamilyTag::MnCmnStar { n, diamond } | FamilyTag::MnCmnDagger { n, diamond } => {
            let (p, m) = match diamond {
                Diamond::T => (tri(n), tri_minus(n)),
                Diamond::S => (tri_minus(n), tri(n)),
            };
            if matches!(tag, FamilyTag::MnCmnDagger { .. }) {
                [p, m, p, m]
            } else {
                [p, m, m, p]
            }
        }
        FamilyTag::MnCmnExc { n } => [n * n; 4],
    }
}

/// Families and parameters checked by the suites.
pub fn grid() -> Vec<FamilyTag> {
    let hl = [(1, 0), (1, 1), (2, 1), (2, 2)];
    let mut out: Vec<FamilyTag> = hl.iter().map(|&(h, l)| FamilyTag::MhlT { h, l }).collect();
    out.extend([1, 2].map(|h| FamilyTag::MhhS { h }));
    out.extend(hl.iter().map(|&(h, l)| FamilyTag::MhlExc { h, l }));
    for n in [1, 2] {
        out.push(FamilyTag::MnCmnDagger { n, diamond: Diamond::T });
        out.push(FamilyTag::MnCmnStar { n, diamond: Diamond::T });
    }
    out.push(FamilyTag::MnCmnDagger { n: 2, diamond: Diamond::S });
    out.push(FamilyTag::MnCmnStar { n: 2, diamond: Diamond::S });
    out.extend([1, 2].map(|n| FamilyTag::MnCmnExc { n }));
    out
}

fn dims_suite() -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for tag in grid() {
        let alg = build_family(tag)?;
        let subj = tag.to_string();
        for ((kind, e), a) in VarKind::GRADED.into_iter().zip(expected_dims(tag)).zip(hom_dims(&alg)) {
            rows.push(Row::compare("hom_dim", &subj, kind.symbol(), "", e, a));
        }
    }
    Ok(rows)
}

fn ut_algebra(components: &[FamilyTag], gtilde: &[u8]) -> Result<StarSuperAlgebra> {
    Ok(ut_star(&UtSpec::new(components.to_vec(), gtilde.to_vec())?)?.algebra)
}

fn summed_dims(components: &[FamilyTag]) -> [usize; 4] {
    let mut d = [0; 4];
    for &c in components {
        for (acc, x) in d.iter_mut().zip(expected_dims(c)) {
            *acc += x;
        }
    }
    d
}

fn ut_label(components: &[FamilyTag], gtilde: &[u8]) -> String {
    let names: Vec<String> = components.iter().map(ToString::to_string).collect();
    let g: Vec<String> = gtilde.iter().map(ToString::to_string).collect();
    format!("UT[{}]({})", names.join(" "), g.join(" "))
}

fn thresholds_suite(cfg: &AnalysisConfig) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for tag in grid() {
        let alg = build_family(tag)?;
        let d = expected_dims(tag);
        let subj = tag.to_string();
        if alg.dim() <= 9 {
            for (kind, dk) in VarKind::GRADED.into_iter().zip(d) {
                let r = capelli_threshold(&alg, kind, dk + 2, cfg)?;
                let witnessed = dk == 0 || r.witness.as_ref().is_some_and(|w| w.verify(&alg));
                rows.push(Row::checked(
                    "threshold",
                    &subj,
                    kind.symbol(),
                    "",
                    dk + 1,
                    r.threshold,
                    r.threshold == dk + 1 && witnessed,
                ));
            }
        }
        let set = gamma_generators(d[0] + 1, d[1] + 1, d[2] + 1, d[3] + 1)?;
        let ok = satisfies_generator_set(&alg, &set, cfg)?.is_identity;
        rows.push(Row::checked("gamma_containment", &subj, "", "", true, ok, ok));
    }
    // no trivially graded component: thresholds are d + m
    let comps = [FamilyTag::MhlT { h: 1, l: 1 }; 2];
    let alg = ut_algebra(&comps, &[0, 0])?;
    let subj = ut_label(&comps, &[0, 0]);
    for (kind, dk) in VarKind::GRADED.into_iter().zip(summed_dims(&comps)) {
        let want = dk + comps.len();
        let r = capelli_threshold(&alg, kind, want + 1, cfg)?;
        rows.push(Row::compare("ut_threshold", &subj, kind.symbol(), "", want, r.threshold));
    }
    // two trivially graded components forming one run: offsets r0 + r1 = 1
    let comps = [FamilyTag::MhlT { h: 1, l: 0 }; 2];
    for g in [[0u8, 0], [0, 1]] {
        let alg = ut_algebra(&comps, &g)?;
        let d = summed_dims(&comps);
        let mut off = [0i64; 4];
        for (i, kind) in VarKind::GRADED.into_iter().enumerate() {
            let r = capelli_threshold(&alg, kind, d[i] + 4, cfg)?;
            off[i] = r.threshold as i64 - d[i] as i64 - 1;
        }
        let ok = off[0] == off[1] && off[2] == off[3] && off[0] >= 0 && off[2] >= 0 && off[0] + off[2] == 1;
        let actual = format!("r0={} r1={}", off[0], off[2]);
        rows.push(Row::checked("ut_offsets", &ut_label(&comps, &g), "", "", "r0+r1=1", actual, ok));
    }
    Ok(rows)
}

fn sandwich_suite(cfg: &AnalysisConfig) -> Result<Vec<Row>> {
    let pool = [
        FamilyTag::MhlT { h: 1, l: 0 },
        FamilyTag::MhlT { h: 1, l: 1 },
        FamilyTag::MnCmnStar { n: 1, diamond: Diamond::T },
    ];
    let algs: Vec<StarSuperAlgebra> = pool.iter().map(|&t| build_family(t)).collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for i in 0..pool.len() {
        for j in i..pool.len() {
            let sum = algs[i].direct_sum(&algs[j]);
            let subj = format!("{}+{}", pool[i], pool[j]);
            for n in 1..=4usize {
                let ns = n.to_string();
                let a = codim_graded(&algs[i], n, cfg)?.value;
                let b = codim_graded(&algs[j], n, cfg)?.value;
                let s = codim_graded(&sum, n, cfg)?.value;
                let ok = a.max(b) <= s && s <= a + b;
                rows.push(Row::checked("direct_sum_codim", &subj, "graded", &ns, format!("[{}..{}]", a.max(b), a + b), s, ok));
                let o = codim_ordinary(&sum, n, cfg)?;
                let hi = 4u128.pow(n as u32) * o;
                rows.push(Row::checked("graded_vs_ordinary", &subj, "graded", &ns, format!("[{o}..{hi}]"), s, o <= s && s <= hi));
            }
        }
    }
    Ok(rows)
}

fn peirce_rows(name: &str, alg: &StarSuperAlgebra) -> Result<Vec<Row>> {
    let j = jacobson_radical(alg)?;
    let pd = peirce_decompose(alg)?;
    let spaces = [&pd.j11, &pd.j10, &pd.j01, &pd.j00];
    let pq = [(1, 1), (1, 0), (0, 1), (0, 0)];
    let mut sum = Subspace::zero(alg.dim());
    for s in spaces {
        sum = sum.sum(s)?;
    }
    let split = sum == j && pd.dims().iter().sum::<usize>() == j.dim();
    let mut laws = true;
    for (a, &(p, q)) in pq.iter().enumerate() {
        for (b, &(r, l)) in pq.iter().enumerate() {
            let prod = alg.subspace_product(spaces[a], spaces[b])?;
            laws &= if q == r {
                prod.is_subspace_of(spaces[pq.iter().position(|&t| t == (p, l)).unwrap()])
            } else {
                prod.is_zero()
            };
        }
    }
    let star = |s: &Subspace| s.map(|v| alg.star(v).expect("vector length matches"));
    let stable = star(&pd.j00) == pd.j00 && star(&pd.j11) == pd.j11 && star(&pd.j01) == pd.j10;
    let d = pd.dims();
    Ok(vec![
        Row::measured("peirce_dims", name, "", "", format!("{} {} {} {}", d[0], d[1], d[2], d[3])),
        Row::checked("peirce_split", name, "", "", true, split, split),
        Row::checked("peirce_module_laws", name, "", "", true, laws, laws),
        Row::checked("peirce_star", name, "", "", true, stable, stable),
    ])
}

fn extensions() -> Result<Vec<(String, StarSuperAlgebra)>> {
    let base = build_family(FamilyTag::MhlT { h: 1, l: 1 })?;
    Ok(vec![
        ("one_sided(MHL_T(1,1))".into(), one_sided_radical_extension(&base)?),
        ("tensor(MHL_T(1,1),N1)".into(), tensor_nilpotent_extension(&base, &commutative_nilpotent(1)?)?),
        (
            "tensor(MHL_T(1,1),noncommutative)".into(),
            tensor_nilpotent_extension(&base, &noncommutative_nilpotent()?)?,
        ),
    ])
}

fn peirce_suite() -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for (name, alg) in extensions()? {
        rows.extend(peirce_rows(&name, &alg)?);
    }
    let comps = [FamilyTag::MhlT { h: 1, l: 1 }, FamilyTag::MhlT { h: 1, l: 0 }];
    rows.extend(peirce_rows(&ut_label(&comps, &[0, 1]), &ut_algebra(&comps, &[0, 1])?)?);
    Ok(rows)
}

fn exponent_suite() -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for tag in grid() {
        let alg = build_family(tag)?;
        rows.push(Row::compare("exponent", &tag.to_string(), "", "", alg.dim(), admissible_exponent(&alg)?));
    }
    let uts: [(&[FamilyTag], &[u8]); 3] = [
        (&[FamilyTag::MhlT { h: 1, l: 1 }; 2], &[0, 0]),
        (&[FamilyTag::MhlT { h: 1, l: 0 }; 2], &[0, 1]),
        (&[FamilyTag::MhlT { h: 1, l: 1 }, FamilyTag::MhlT { h: 1, l: 0 }], &[0, 1]),
    ];
    for (comps, g) in uts {
        let want: usize = comps.iter().map(FamilyTag::dim).sum();
        let got = admissible_exponent(&ut_algebra(comps, g)?)?;
        rows.push(Row::compare("exponent", &ut_label(comps, g), "", "", want, got));
    }
    let pool = [
        FamilyTag::MhlT { h: 1, l: 0 },
        FamilyTag::MhlT { h: 1, l: 1 },
        FamilyTag::MhlExc { h: 1, l: 1 },
        FamilyTag::MnCmnStar { n: 1, diamond: Diamond::T },
    ];
    for (i, &a) in pool.iter().enumerate() {
        for &b in &pool[i + 1..] {
            let (x, y) = (build_family(a)?, build_family(b)?);
            let want = admissible_exponent(&x)?.max(admissible_exponent(&y)?);
            let got = admissible_exponent(&x.direct_sum(&y))?;
            rows.push(Row::compare("exponent", &format!("{a}+{b}"), "", "", want, got));
        }
    }
    Ok(rows)
}

fn counterexample_suite(cfg: &AnalysisConfig) -> Result<Vec<Row>> {
    let tag = FamilyTag::MhlT { h: 1, l: 1 };
    let base = build_family(tag)?;
    let d = expected_dims(tag);
    let set = gamma_generators(d[0] + 1, d[1] + 1, d[2] + 1, d[3] + 1)?;
    let mut rows = Vec::new();
    for (name, alg) in extensions()? {
        let r = satisfies_generator_set(&alg, &set, cfg)?;
        let violates = !r.is_identity && r.witness.as_ref().is_some_and(|w| w.verify(&alg));
        if name.starts_with("tensor(MHL_T(1,1),N1)") {
            rows.push(Row::compare("violates_gamma", &name, "", "", false, !r.is_identity));
            for n in 1..=3usize {
                let a = codim_graded(&base, n, cfg)?.value;
                let b = codim_graded(&alg, n, cfg)?.value;
                rows.push(Row::compare("codim_matches_base", &name, "graded", &n.to_string(), a, b));
            }
        } else {
            rows.push(Row::checked("violates_gamma", &name, "", "", true, violates, violates));
        }
    }
    Ok(rows)
}
