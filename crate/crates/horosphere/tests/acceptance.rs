//! Acceptance criteria: one PASS/FAIL line per criterion. Every check is exact;
//! the only tolerances are the wall-clock budgets below.

use horosphere::bott::{line_bundle_cohomology, verify_claims, ClaimsFile, CohomologyResult, Verdict};
use horosphere::exact::{minimal_polynomial, q_int};
use horosphere::horo::{chevalley_table, semisimplicity, BasisTag, ChevalleyTable, QuantumChevalley, Variety};
use horosphere::oddsymp::partitions::count_index_sets_brute_force;
use horosphere::oddsymp::{enumerate_index_sets, enumerate_partitions, index_to_partition, partition_to_index, QuotientRing};
use horosphere::rootsys::{RootSystem, Weight};
use horosphere::Result;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;
use std::time::{Duration, Instant};

const BUDGET_TABLES: Duration = Duration::from_secs(1);
const BUDGET_SEMISIMPLE: Duration = Duration::from_secs(1);
const BUDGET_INVARIANTS: Duration = Duration::from_secs(1);
const BUDGET_GROEBNER: Duration = Duration::from_secs(60);
const BUDGET_BOTT: Duration = Duration::from_secs(5);
const SERRE_SAMPLES: usize = 10_000;
const SERRE_RANGE: i64 = 10;
const SERRE_SEED: u64 = 2024;
/// Length of the exceptional collection on the case 5 variety.
const COLLECTION_LENGTH: usize = 12;

const SUPPORTED: [(u8, Option<usize>, Option<usize>, &str); 4] = [
    (1, Some(3), None, "case1_n3"),
    (2, None, None, "case2"),
    (3, Some(3), Some(3), "case3_n3_m3"),
    (5, None, None, "case5"),
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass, detail: detail.into() })
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn golden(name: &str) -> ChevalleyTable {
    let p = data_dir().join("golden").join(format!("{name}.json"));
    serde_json::from_str(&std::fs::read_to_string(p).expect("golden table")).expect("golden json")
}

fn variety(c: u8, n: Option<usize>, m: Option<usize>) -> Result<Variety> {
    Variety::from_number(c, n, m)
}

fn c1_golden_tables() -> Result<Outcome> {
    let mut lines = 0;
    let mut diffs = vec![];
    for (c, n, m, name) in SUPPORTED {
        let t = chevalley_table(&variety(c, n, m)?, true)?;
        let reference = golden(name);
        lines += reference.products.len();
        diffs.extend(t.diff(&reference).into_iter().map(|d| format!("{name}: {d}")));
    }
    outcome(diffs.is_empty(), format!("{lines} product lines, {} differences {diffs:?}", diffs.len()))
}

fn c2_semisimplicity() -> Result<Outcome> {
    let mut ok = true;
    let mut degs = vec![];
    for (c, n, m, _) in SUPPORTED {
        let r = semisimplicity(&variety(c, n, m)?, &q_int(1))?;
        ok &= r.squarefree && r.determinant_nonzero && r.nilpotent_at_q0;
        degs.push(r.minimal_polynomial_degree);
    }
    outcome(ok, format!("minimal polynomial degrees {degs:?}, all squarefree with nonzero determinant, nilpotent at q=0"))
}

fn c3_degree_two() -> Result<Outcome> {
    let mut ok = true;
    let mut found = vec![];
    for (c, n, m, _) in SUPPORTED {
        let x = variety(c, n, m)?;
        let qc = QuantumChevalley::new(&x)?;
        let table = qc.table()?;
        if c == 1 || c == 5 {
            let p = &table.iter().find(|(a, _)| *a == x.point()).expect("point class").1;
            let k = p.coeff(&x.one(), 2);
            ok &= k == 2 && p.terms.keys().filter(|(_, q)| *q == 2).count() == 1;
            found.push(format!("case {c}: q^2 coefficient {k}"));
        } else {
            let top = table.iter().map(|(_, p)| p.max_qpow()).max().unwrap_or(0);
            ok &= top <= 1;
            found.push(format!("case {c}: max q-power {top}"));
        }
    }
    outcome(ok, found.join(", "))
}

fn c4_invariants() -> Result<Outcome> {
    // (case, n, m, dim X, codim Y, codim Z, c1 X, c1 Y, c1 Z)
    let mut rows = vec![(2, None, None, 9, 4, 3, 7, 5, 6), (4, None, None, 23, 3, 3, 6, 5, 7), (5, None, None, 7, 2, 2, 4, 3, 5)];
    for n in 3..=8 {
        rows.push((1, Some(n), None, n * (n + 3) / 2, 2, n, n + 2, n + 1, 2 * n));
    }
    for n in 2..=8 {
        for m in 2..=n {
            let dim = m * (2 * n + 1 - m) - m * (m - 1) / 2;
            rows.push((3, Some(n), Some(m), dim, m, 2 * (n + 1 - m), 2 * n + 2 - m, 2 * n + 1 - m, 2 * n + 2 - m));
        }
    }
    let mut bad = vec![];
    for &(c, n, m, dim, cy, cz, c1x, c1y, c1z) in &rows {
        let x = variety(c, n, m)?;
        let got = (x.dim_x, x.codim_y, x.codim_z, x.c1_x, x.c1_y, x.c1_z);
        if got != (dim, cy, cz, c1x, c1y, c1z) || x.c1_x != x.codim_y + x.codim_z {
            bad.push(x.description());
        }
    }
    outcome(bad.is_empty(), format!("{} varieties, mismatches {bad:?}", rows.len()))
}

fn c5_poincare() -> Result<Outcome> {
    let mut params: Vec<(u8, Option<usize>, Option<usize>)> = vec![(2, None, None), (4, None, None), (5, None, None)];
    params.extend((3..=6).map(|n| (1, Some(n), None)));
    for n in 2..=5 {
        params.extend((2..=n).map(|m| (3, Some(n), Some(m))));
    }
    let mut bad = vec![];
    for &(c, n, m) in &params {
        let x = variety(c, n, m)?;
        let a = x.basis(BasisTag::A);
        let b = x.basis(BasisTag::B);
        let mut perm = a.len() == b.len();
        let mut col_hits = vec![0; b.len()];
        for r in &a {
            let mut ones = 0;
            for (j, s) in b.iter().enumerate() {
                match x.poincare_pairing(r, s)? {
                    0 => {}
                    1 => {
                        ones += 1;
                        col_hits[j] += 1;
                    }
                    _ => perm = false,
                }
            }
            perm &= ones == 1;
        }
        perm &= col_hits.iter().all(|&h| h == 1);
        if !perm {
            bad.push(x.description());
        }
    }
    outcome(bad.is_empty(), format!("{} varieties, non-permutation pairings {bad:?}", params.len()))
}

fn c6_presentation_ranks() -> Result<Outcome> {
    let mut ok = true;
    let mut ranks = vec![];
    let mut slowest = Duration::ZERO;
    for (n, m) in [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3)] {
        let t = Instant::now();
        let ring = QuotientRing::quantum(n, m)?;
        slowest = slowest.max(t.elapsed());
        let report = ring.flatness()?;
        ok &= report.passes() && ring.rank() == count_index_sets_brute_force(m, 2 * n + 1);
        if (n, m) == (3, 3) {
            ok &= report.hilbert_q0 == vec![1, 1, 2, 3, 3, 3, 3, 2, 1, 1];
        }
        ranks.push(format!("({n},{m}) rank {}", ring.rank()));
    }
    ok &= slowest < BUDGET_GROEBNER;
    outcome(ok, format!("{}, torsion-free and palindromic, slowest basis {slowest:.2?} < {BUDGET_GROEBNER:?}", ranks.join(", ")))
}

fn c7_bridge() -> Result<Outcome> {
    let x = variety(3, Some(3), Some(3))?;
    let chev = minimal_polynomial(&QuantumChevalley::new(&x)?.h_matrix(&q_int(1))?);
    let pres = QuotientRing::quantum(3, 3)?.minpoly_tau1(&q_int(1))?;
    outcome(chev == pres, format!("minimal polynomial {pres}"))
}

fn c8_bijections() -> Result<Outcome> {
    let mut cases = 0;
    let mut ok = true;
    for big_n in 2..=13usize {
        let max_m = if big_n % 2 == 0 { big_n / 2 } else { big_n / 2 + 1 };
        for m in 1..=max_m {
            let sets = enumerate_index_sets(m, big_n)?;
            let parts = enumerate_partitions(m, big_n)?;
            ok &= sets.len() == parts.len();
            for p in &sets {
                ok &= partition_to_index(&index_to_partition(p), big_n)? == *p;
            }
            for l in &parts {
                ok &= index_to_partition(&partition_to_index(l, big_n)?) == *l;
            }
            cases += sets.len();
        }
    }
    outcome(ok, format!("{cases} index sets, N = 2..13, both parities"))
}

fn c9_bott() -> Result<Outcome> {
    let text = std::fs::read_to_string(data_dir().join("claims/g2.json")).expect("claims file");
    let claims = ClaimsFile::parse(&text)?;
    let reports = verify_claims(&claims)?;
    let line_bundle: Vec<_> = claims.iter().zip(&reports).filter(|(c, _)| c.weights.len() == 1).collect();
    let mut ok = line_bundle.iter().all(|(_, r)| r.verdict == Verdict::Verified);
    ok &= reports.iter().all(|r| r.verdict != Verdict::Refuted);
    let g2 = RootSystem::from_name("G2")?;
    let w = |a, b| Weight(vec![a, b]);
    ok &= line_bundle_cohomology(&g2, &w(1, -1))? == CohomologyResult::AllZero;
    ok &= line_bundle_cohomology(&g2, &w(-1, -1))? == CohomologyResult::AllZero;
    let ext = line_bundle_cohomology(&g2, &-&g2.simple_root(0))?;
    ok &= ext.degree() == Some(1) && ext.dimension() == 1;
    let mut rng = ChaCha8Rng::seed_from_u64(SERRE_SEED);
    let two_rho = g2.rho.scale(2);
    let top = g2.positive_roots.len();
    let mut serre_ok = 0;
    for _ in 0..SERRE_SAMPLES {
        let chi = w(rng.random_range(-SERRE_RANGE..=SERRE_RANGE), rng.random_range(-SERRE_RANGE..=SERRE_RANGE));
        let a = line_bundle_cohomology(&g2, &chi)?;
        let b = line_bundle_cohomology(&g2, &(&(-&chi) - &two_rho))?;
        let dual = match (a.degree(), b.degree()) {
            (None, None) => true,
            (Some(i), Some(j)) => i + j == top && a.dimension() == b.dimension(),
            _ => false,
        };
        serre_ok += dual as usize;
    }
    ok &= serre_ok == SERRE_SAMPLES;
    outcome(
        ok,
        format!(
            "{} line-bundle claims verified, {} claims total, Serre duality {serre_ok}/{SERRE_SAMPLES}",
            line_bundle.len(),
            claims.len()
        ),
    )
}

fn c10_k_theory_rank() -> Result<Outcome> {
    let x = variety(5, None, None)?;
    let count = x.basis(BasisTag::A).len();
    let cells = x.poset_y.len() + x.poset_z.len();
    outcome(count == COLLECTION_LENGTH && cells == count, format!("basis count {count}, collection length {COLLECTION_LENGTH}"))
}

type Criterion = (u8, &'static str, fn() -> Result<Outcome>, Option<Duration>);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "quantum Chevalley golden tables", c1_golden_tables, Some(BUDGET_TABLES)),
        (2, "semisimplicity at q=1", c2_semisimplicity, Some(BUDGET_SEMISIMPLE)),
        (3, "degree-two invariant", c3_degree_two, None),
        (4, "numerical invariants", c4_invariants, Some(BUDGET_INVARIANTS)),
        (5, "Poincare duality", c5_poincare, None),
        (6, "presentation ranks and flatness", c6_presentation_ranks, None),
        (7, "presentation/Chevalley bridge", c7_bridge, None),
        (8, "index-set/partition bijections", c8_bijections, None),
        (9, "Bott ledger and Serre duality", c9_bott, Some(BUDGET_BOTT)),
        (10, "K-theory rank", c10_k_theory_rank, None),
    ];
    let mut failures = 0;
    for (k, name, f, budget) in criteria {
        let t = Instant::now();
        let result = f();
        let elapsed = t.elapsed();
        let (mut pass, detail) = match result {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let timing = match budget {
            Some(b) => {
                pass &= elapsed < b;
                format!("{elapsed:.2?} < {b:?}")
            }
            None => format!("{elapsed:.2?}"),
        };
        failures += !pass as usize;
        println!("criterion {k:>2} {}: {name}: {detail} [{timing}]", if pass { "PASS" } else { "FAIL" });
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
