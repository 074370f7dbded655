use crate::{Command, Failure, Format, RunConfig};
use horosphere::bott::{line_bundle_cohomology, reports_to_markdown, verify_claims, ClaimsFile, CohomologyResult, Verdict};
use horosphere::exact::{parse_rational, Q};
use horosphere::horo::{chevalley_table, semisimplicity, BasisTag, ChevalleyTable, QuantumChevalley, Variety};
use horosphere::oddsymp::{FlatnessReport, QuotientRing};
use horosphere::rootsys::{RootSystem, Weight};
use serde::Serialize;
use std::fmt::Write;
use std::path::Path;

type Run = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn format_for(cfg: &RunConfig) -> Result<Format, Failure> {
    let hasse = cfg.command == Some(Command::Hasse);
    match (cfg.format, hasse) {
        (None, true) => Ok(Format::Dot),
        (None, false) => Ok(Format::Json),
        (Some(Format::Dot), false) => Err(usage("--format dot is only available for hasse")),
        (Some(Format::Markdown), true) => Err(usage("hasse supports --format dot or json")),
        (Some(f), _) => Ok(f),
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Run {
    match &cfg.out {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn variety(cfg: &RunConfig) -> Result<Variety, Failure> {
    let case = cfg.case.ok_or_else(|| usage("--case is required"))?;
    Ok(Variety::from_number(case, cfg.n, cfg.m)?)
}

fn q_value(cfg: &RunConfig) -> Result<Q, Failure> {
    match &cfg.q {
        None => Ok(Q::from_integer(1.into())),
        Some(s) => parse_rational(s).ok_or_else(|| usage(format!("--q {s} is not a rational number"))),
    }
}

fn n_m(cfg: &RunConfig) -> Result<(usize, usize), Failure> {
    match (cfg.n, cfg.m) {
        (Some(n), Some(m)) => Ok((n, m)),
        _ => Err(usage("--n and --m are required")),
    }
}

pub fn run(cfg: &RunConfig) -> Run {
    let command = cfg.command.ok_or_else(|| usage("no command given"))?;
    let format = format_for(cfg)?;
    match command {
        Command::Basis => basis(cfg, format),
        Command::Hasse => hasse(cfg, format),
        Command::Qchevalley => qchevalley(cfg, format),
        Command::Semisimple => semisimple(cfg, format),
        Command::OddsympPresent => oddsymp_present(cfg, format),
        Command::OddsympVerify => oddsymp_verify(cfg, format),
        Command::Bott => bott(cfg, format),
        Command::VerifyClaims => claims(cfg, format),
    }
}

#[derive(Serialize)]
struct BasisEntry {
    label: String,
    degree: usize,
}

#[derive(Serialize)]
struct BasisReport {
    variety: String,
    dim_x: usize,
    dim_y: usize,
    dim_z: usize,
    codim_y: usize,
    codim_z: usize,
    c1_x: usize,
    c1_y: usize,
    c1_z: usize,
    betti: Vec<usize>,
    basis_a: Vec<BasisEntry>,
    basis_b: Vec<BasisEntry>,
}

fn basis(cfg: &RunConfig, format: Format) -> Run {
    let x = variety(cfg)?;
    let entries = |tag| {
        x.basis(tag).iter().map(|l| BasisEntry { label: x.label_name(l), degree: x.degree(l) }).collect::<Vec<_>>()
    };
    let r = BasisReport {
        variety: x.description(),
        dim_x: x.dim_x,
        dim_y: x.dim_y,
        dim_z: x.dim_z,
        codim_y: x.codim_y,
        codim_z: x.codim_z,
        c1_x: x.c1_x,
        c1_y: x.c1_y,
        c1_z: x.c1_z,
        betti: x.betti_numbers(),
        basis_a: entries(BasisTag::A),
        basis_b: entries(BasisTag::B),
    };
    let text = match format {
        Format::Json => to_json(&r),
        _ => {
            let mut s = format!("# {}\n\n", r.variety);
            writeln!(s, "dim X = {}, codim Y = {}, codim Z = {}, c1(X) = {}\n", r.dim_x, r.codim_y, r.codim_z, r.c1_x)
                .unwrap();
            s += "| degree | basis A | basis B |\n|---|---|---|\n";
            for (a, b) in r.basis_a.iter().zip(&r.basis_b) {
                writeln!(s, "| {} | {} | {} |", a.degree, a.label, b.label).unwrap();
            }
            s
        }
    };
    emit(cfg, &text)
}

fn hasse(cfg: &RunConfig, format: Format) -> Run {
    let x = variety(cfg)?;
    let t = chevalley_table(&x, cfg.quantum)?;
    let text = match format {
        Format::Dot => t.to_dot(&x)?,
        _ => to_json(&t),
    };
    emit(cfg, &text)
}

fn qchevalley(cfg: &RunConfig, format: Format) -> Run {
    let x = variety(cfg)?;
    let t = chevalley_table(&x, true)?;
    let text = match format {
        Format::Json => to_json(&t),
        _ => t.to_markdown(),
    };
    emit(cfg, &text)?;
    if let Some(g) = &cfg.golden {
        let reference: ChevalleyTable =
            serde_json::from_str(&read(g)?).map_err(|e| usage(format!("{}: {e}", g.display())))?;
        let diff = t.diff(&reference);
        if !diff.is_empty() {
            return Err(Failure::Verification(diff.join("; ")));
        }
    }
    Ok(())
}

fn semisimple(cfg: &RunConfig, format: Format) -> Run {
    let x = variety(cfg)?;
    let r = semisimplicity(&x, &q_value(cfg)?)?;
    let text = match format {
        Format::Json => to_json(&r),
        _ => {
            let mut s = format!("# semisimplicity: {} at q = {}\n\n| property | value |\n|---|---|\n", r.case, r.q);
            writeln!(s, "| dimension | {} |", r.dimension).unwrap();
            writeln!(s, "| minimal polynomial | {} |", r.minimal_polynomial).unwrap();
            writeln!(s, "| squarefree | {} |", r.squarefree).unwrap();
            writeln!(s, "| distinct eigenvalues | {} |", r.distinct_eigenvalues).unwrap();
            writeln!(s, "| determinant nonzero | {} |", r.determinant_nonzero).unwrap();
            writeln!(s, "| nilpotent at q = 0 | {} |", r.nilpotent_at_q0).unwrap();
            s
        }
    };
    emit(cfg, &text)?;
    if r.passes() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} is not semisimple at q = {}", r.case, r.q)))
    }
}

fn oddsymp_present(cfg: &RunConfig, format: Format) -> Run {
    let (n, m) = n_m(cfg)?;
    let ring = QuotientRing::quantum(n, m)?;
    let text = match format {
        Format::Json => to_json(&ring.to_json()),
        _ => {
            let r = &ring.ring;
            let mut s = format!("# quantum presentation of IG({m}, {})\n\n", 2 * n + 1);
            let gens: Vec<String> = (1..=r.k).map(|p| format!("{} (deg {p})", r.var_name(p))).collect();
            writeln!(s, "generators: {}, q (deg {})\n", gens.join(", "), r.q_degree).unwrap();
            s += "| relation | lhs | rhs |\n|---|---|---|\n";
            for rel in &ring.relations {
                writeln!(s, "| {} | {} | {} |", rel.name, r.format(&rel.lhs), r.format(&rel.rhs)).unwrap();
            }
            writeln!(s, "\nrank {}, Hilbert series {:?}", ring.rank(), ring.hilbert_series()).unwrap();
            s
        }
    };
    emit(cfg, &text)
}

#[derive(Serialize)]
struct VerifyReport {
    flatness: FlatnessReport,
    q: String,
    tau1_minimal_polynomial: String,
    /// Agreement with the hyperplane operator of case (3), when that table is available.
    chevalley_bridge: Option<bool>,
    passes: bool,
}

fn oddsymp_verify(cfg: &RunConfig, format: Format) -> Run {
    let (n, m) = n_m(cfg)?;
    let q = q_value(cfg)?;
    let ring = QuotientRing::quantum(n, m)?;
    let flatness = ring.flatness()?;
    let minpoly = ring.minpoly_tau1(&q)?;
    let x = Variety::from_number(3, Some(n), Some(m))?;
    let chevalley_bridge = match QuantumChevalley::new(&x) {
        Ok(qc) => Some(horosphere::exact::minimal_polynomial(&qc.h_matrix(&q)?) == minpoly),
        Err(_) => None,
    };
    let passes = flatness.passes() && chevalley_bridge != Some(false);
    let r = VerifyReport { flatness, q: q.to_string(), tau1_minimal_polynomial: minpoly.to_string(), chevalley_bridge, passes };
    let text = match format {
        Format::Json => to_json(&r),
        _ => {
            let f = &r.flatness;
            let mut s = format!("# IG({m}, {}) presentation check\n\n| property | value |\n|---|---|\n", 2 * n + 1);
            writeln!(s, "| index sets | {} |", f.index_sets).unwrap();
            writeln!(s, "| rank over Q[q] | {} |", f.rank_generic).unwrap();
            writeln!(s, "| rank at q = 0 | {} |", f.rank_q0).unwrap();
            writeln!(s, "| rank at q = 1 | {} |", f.rank_q1).unwrap();
            writeln!(s, "| torsion-free | {} |", f.torsion_free).unwrap();
            writeln!(s, "| Hilbert series at q = 0 | {:?} |", f.hilbert_q0).unwrap();
            writeln!(s, "| palindromic | {} |", f.palindromic).unwrap();
            writeln!(s, "| tau'_1 minimal polynomial at q = {} | {} |", r.q, r.tau1_minimal_polynomial).unwrap();
            let bridge = r.chevalley_bridge.map_or("n/a".to_string(), |b| b.to_string());
            writeln!(s, "| agrees with hyperplane operator | {bridge} |").unwrap();
            writeln!(s, "| pass | {} |", r.passes).unwrap();
            s
        }
    };
    emit(cfg, &text)?;
    if r.passes {
        Ok(())
    } else {
        Err(Failure::Verification(format!("IG({m}, {}) presentation check failed", 2 * n + 1)))
    }
}

#[derive(Serialize)]
struct BottReport {
    group: String,
    weight: Weight,
    shifted: Weight,
    cohomology: CohomologyResult,
    euler_characteristic: i128,
}

fn bott(cfg: &RunConfig, format: Format) -> Run {
    let rs = RootSystem::from_name(cfg.group.as_deref().ok_or_else(|| usage("--group is required"))?)?;
    let weight = Weight(cfg.weight.clone().ok_or_else(|| usage("--weight is required"))?);
    let cohomology = line_bundle_cohomology(&rs, &weight)?;
    let r = BottReport {
        group: rs.name(),
        shifted: &weight + &rs.rho,
        euler_characteristic: cohomology.euler_characteristic(),
        weight,
        cohomology,
    };
    let text = match format {
        Format::Json => to_json(&r),
        _ => match &r.cohomology {
            CohomologyResult::AllZero => {
                format!("H^*({}/B, L{}) = 0 (chi + rho = {} is singular)\n", r.group, r.weight, r.shifted)
            }
            CohomologyResult::Concentrated { degree, highest_weight, dimension } => format!(
                "H^{degree}({}/B, L{}) = V{highest_weight} of dimension {dimension}, all other degrees vanish\n",
                r.group, r.weight
            ),
        },
    };
    emit(cfg, &text)
}

fn claims(cfg: &RunConfig, format: Format) -> Run {
    let path = cfg.claims.as_ref().ok_or_else(|| usage("--claims is required"))?;
    let claims = ClaimsFile::parse(&read(path)?)?;
    let reports = verify_claims(&claims)?;
    let text = match format {
        Format::Json => to_json(&reports),
        _ => reports_to_markdown(&reports),
    };
    emit(cfg, &text)?;
    let refuted: Vec<&str> = reports.iter().filter(|r| r.verdict == Verdict::Refuted).map(|r| r.id.as_str()).collect();
    if refuted.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("refuted claims: {}", refuted.join(", "))))
    }
}
