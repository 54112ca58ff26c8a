//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lyndon_lz::domain::{CanonicalDecomposition, CanonicalPart, Domain};
use lyndon_lz::lyndon::oracle_lyndon_dp_bounded;
use lyndon_lz::{
    all_domains, boundary_budget, compute_domain, exhaustive_search, expected_counts, expected_lz_phrases,
    generate_family, lyndon_factorize, lz_factorize, oracle_lz_naive, SearchConfig, Span, Text,
};

const SAMPLE: &str = "abbabbababbababbbababbaba";

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn phrases(s: &Text) -> Vec<Text> {
    lz_factorize(s).phrase_bytes(s).into_iter().map(Text::from).collect()
}

fn family_exactness() -> Outcome {
    let start = Instant::now();
    for k in 2..=40usize {
        let s = generate_family(k);
        let m = lyndon_factorize(&s).m();
        let lz = lz_factorize(&s);
        let want = ((k * k + k) / 2 + 2, (k * k - k) / 2 + 4);
        ensure((m, lz.z()) == want, || {
            format!("k = {k}: (m, z) = ({m}, {}), want {want:?}", lz.z())
        })?;
        let expected = expected_lz_phrases(k).map_err(|e| e.to_string())?;
        ensure(phrases(&s) == expected, || {
            format!("k = {k}: phrase list differs from the recurrence")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || {
        format!("took {elapsed:?}, budget 5s")
    })?;
    Ok(format!("k = 2..40 exact in {elapsed:.2?}"))
}

fn known_fixtures() -> Outcome {
    let s2 = generate_family(2);
    let want2: Vec<Text> = ["b", "a", "ba", "aba", "baaba"].map(Text::from).to_vec();
    ensure(phrases(&s2) == want2, || format!("s_2 parses as {:?}", phrases(&s2)))?;

    let s3 = generate_family(3);
    let mut want3 = want2.clone();
    want3.extend(["aababaa", "abaabaaaba"].map(Text::from));
    ensure(phrases(&s3) == want3, || format!("s_3 parses as {:?}", phrases(&s3)))?;

    let lf = lyndon_factorize(&Text::from(SAMPLE));
    let spans: Vec<Span> = lf.runs().iter().map(|r| r.span).collect();
    let want_spans = [(1, 6), (7, 17), (18, 22), (23, 24), (25, 25)].map(|(a, b)| Span::new(a, b));
    ensure(spans == want_spans, || format!("runs {spans:?}"))?;

    let mut non_empty: Vec<(usize, usize, usize)> = all_domains(&lf)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|d| !d.is_empty())
        .map(|d| (d.i, d.d, d.j))
        .collect();
    non_empty.sort();
    let want_domains = vec![(3, 1, 2), (3, 2, 2), (3, 3, 2), (4, 1, 1), (4, 2, 2), (5, 1, 1)];
    ensure(non_empty == want_domains, || format!("non-empty domains {non_empty:?}"))?;

    let d42 = compute_domain(&lf, 4, 2).map_err(|e| e.to_string())?;
    ensure(d42.associated == Span::new(7, 9), || {
        format!("dom_2(F_4) associated {}", d42.associated)
    })?;
    let d33 = compute_domain(&lf, 3, 3).map_err(|e| e.to_string())?;
    ensure(d33.extended() == Span::new(7, 25), || {
        format!("extdom_3(F_3) = {}", d33.extended())
    })?;
    Ok("s_2, s_3 and the 25-symbol example match".into())
}

fn sweep(sigma: usize, max_len: usize) -> Result<(u64, usize), String> {
    let mut cfg = SearchConfig::new(sigma, max_len);
    cfg.verify = true;
    let summary = exhaustive_search(&cfg, |_| {}).map_err(|e| e.to_string())?;
    if let Some(v) = &summary.violation {
        return Err(format!("m < 2z violated by {} (m = {}, z = {})", v.string, v.m, v.z));
    }
    if summary.partition_failures > 0 {
        return Err(format!(
            "{} partition failures, first {:?}",
            summary.partition_failures, summary.first_partition_failure
        ));
    }
    let report = summary.lemma_report.ok_or("no lemma report")?;
    if let Some(c) = report.checks.iter().find(|c| c.failures > 0) {
        return Err(format!(
            "{}: {} failures, e.g. {:?}",
            c.name, c.failures, c.first_counterexample
        ));
    }
    let instances = report.checks.iter().map(|c| c.instances).sum();
    Ok((summary.strings, instances))
}

fn theorem_sweep() -> Outcome {
    let start = Instant::now();
    let (bin, bin_checks) = sweep(2, 16)?;
    ensure(bin == 131_070, || format!("binary sweep covered {bin} strings"))?;
    let (ter, ter_checks) = sweep(3, 10)?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || {
        format!("took {elapsed:?}, budget 10 min")
    })?;
    Ok(format!(
        "{bin} binary + {ter} ternary strings, {} check instances, {elapsed:.1?}",
        bin_checks + ter_checks
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut exhaustive = 0usize;
    for n in 0..=12u32 {
        for idx in 0..1u32 << n {
            let bytes: Vec<u8> = (0..n).rev().map(|b| b'a' + ((idx >> b) & 1) as u8).collect();
            let s = Text::new(bytes);
            check_oracles(&s)?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_501);
    for _ in 0..10_000 {
        let sigma = rng.gen_range(2..=4u8);
        let n = rng.gen_range(0..=200);
        let s = Text::new((0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect::<Vec<u8>>());
        check_oracles(&s)?;
    }
    Ok(format!("{exhaustive} exhaustive + 10000 random strings"))
}

fn check_oracles(s: &Text) -> Result<(), String> {
    let lf = oracle_lyndon_dp_bounded(s, 200).map_err(|e| format!("{s}: {e}"))?;
    ensure(lyndon_factorize(s) == lf, || {
        format!("Lyndon factorization differs on {s}")
    })?;
    let lz = oracle_lz_naive(s).map_err(|e| format!("{s}: {e}"))?;
    ensure(lz_factorize(s) == lz, || format!("LZ factorization differs on {s}"))
}

/// Domain over a layout where every run is one symbol long.
fn unit_domain(i: usize, d: usize, j: usize) -> Domain {
    Domain {
        i,
        d,
        j,
        span: if j == i { Span::empty(i) } else { Span::new(j, i - 1) },
        associated: Span::with_len(i, d),
    }
}

fn decomposition_budget() -> Outcome {
    let cluster = |members: &[(usize, usize)]| CanonicalPart::Cluster {
        members: members.iter().map(|&(i, d)| unit_domain(i, d, 1)).collect(),
    };
    let loose = |i, d, j| CanonicalPart::Loose {
        domain: unit_domain(i, d, j),
    };
    let cd = CanonicalDecomposition {
        root: unit_domain(15, 2, 1),
        parts: vec![
            cluster(&[(1, 3), (2, 2), (3, 1)]),
            loose(6, 2, 4),
            cluster(&[(7, 1)]),
            loose(9, 3, 8),
            cluster(&[(10, 2), (11, 1)]),
            loose(12, 5, 12),
            cluster(&[(13, 4), (14, 3), (15, 2)]),
        ],
    };
    let b = boundary_budget(&cd).map_err(|e| e.to_string())?;
    ensure(b.k == 14 && b.ell == 3 && b.t == 3, || {
        format!("k = {}, ℓ = {}, t = {}", b.k, b.ell, b.t)
    })?;
    ensure(b.k_h == [2, 1, 0] && b.d_h == [2, 3, 5], || {
        format!("k_h = {:?}, d_h = {:?}", b.k_h, b.d_h)
    })?;
    ensure((b.s, b.loose_total, b.total, b.lower_bound) == (5, 5, 11, 8), || {
        format!(
            "S = {}, loose = {}, total = {}, bound = {}",
            b.s, b.loose_total, b.total, b.lower_bound
        )
    })?;

    // F_1..F_3 followed by the loose extended domains covers the root's extended domain
    let mut cover = Span::new(1, 3);
    for l in cd.loose() {
        cover = cover
            .join(l.extended())
            .ok_or_else(|| format!("gap before {}", l.extended()))?;
    }
    ensure(cover == cd.root.extended(), || {
        format!("tiling covers {cover}, root {}", cd.root.extended())
    })?;
    Ok(format!(
        "S = {}, loose total {}, total {} ≥ {}",
        b.s, b.loose_total, b.total, b.lower_bound
    ))
}

fn lower_bound_asymptotics() -> Outcome {
    let mut out_of_band = Vec::new();
    for k in 2..=40usize {
        let s = generate_family(k);
        let m = lyndon_factorize(&s).m();
        let z = lz_factorize(&s).z();
        let counts = expected_counts(k).map_err(|e| e.to_string())?;
        ensure((m, z) == (counts.m_k, counts.z_k), || {
            format!("k = {k}: counts off the closed form")
        })?;
        ensure(m - z == k - 2, || format!("k = {k}: m - z = {}", m - z))?;
        let ratio = (m - z) as f64 / (z as f64).sqrt();
        if k >= 10 && !(1.2..=1.45).contains(&ratio) {
            out_of_band.push(format!("k={k}:{ratio:.4}"));
        }
    }
    if out_of_band.is_empty() {
        Ok("m - z = k - 2 and ratio within [1.2, 1.45] for k = 10..40".into())
    } else {
        Err(format!(
            "m - z = k - 2 holds, but (m - z)/√z is outside [1.2, 1.45] at {}",
            out_of_band.join(" ")
        ))
    }
}

fn main() {
    let criteria: [(&str, Check); 6] = [
        ("family exactness", family_exactness),
        ("fixtures", known_fixtures),
        ("m < 2z sweep", theorem_sweep),
        ("oracle equivalence", oracle_equivalence),
        ("decomposition budget", decomposition_budget),
        ("lower-bound asymptotics", lower_bound_asymptotics),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", n + 1)
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
