use std::io::Write;

use lyndon_lz::bounds::{expected_lz_phrases, SearchConfig};
use lyndon_lz::lyndon::oracle_lyndon_dp_bounded;
use lyndon_lz::lz::oracle_lz_naive_bounded;
use lyndon_lz::report::{AnalysisReport, BudgetEntry, Verdict};
use lyndon_lz::{
    all_domains, boundary_budget, check_theorem, compute_domain, exhaustive_search, expected_counts, find_p_groups,
    find_tandem_domains, generate_family, lyndon_factorize, lz_factorize, verify_lemmas, DomainTable, Text,
};

use crate::args::{Cli, Command, Format, SearchArgs};
use crate::input::read_input;
use crate::render;
use crate::Failure;

/// Inputs longer than this are rejected by `verify --oracle-check`.
const ORACLE_CHECK_BOUND: usize = 256;

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Lyndon(input) => {
            let report = analyze(&read_input(input)?);
            match fmt {
                Format::Json => render::json(out, &report),
                Format::Tsv => render::runs_tsv(out, &report),
                Format::Human => render::runs_human(out, &report),
            }
        }
        Command::Lz(input) => {
            let report = analyze(&read_input(input)?);
            match fmt {
                Format::Json => render::json(out, &report),
                Format::Tsv => render::phrases_tsv(out, &report),
                Format::Human => render::phrases_human(out, &report),
            }
        }
        Command::Domains(input) => domains(fmt, &read_input(input)?, out),
        Command::Canonical { run, order, input } => canonical(fmt, &read_input(input)?, *run, *order, out),
        Command::Verify { oracle_check, input } => verify(fmt, &read_input(input)?, *oracle_check, out),
        Command::Family { k, check } => family(fmt, *k, *check, out),
        Command::Search(args) => search(fmt, args, out),
        Command::Partition(input) => partition(fmt, &read_input(input)?, out),
    }
}

fn analyze(text: &Text) -> AnalysisReport {
    AnalysisReport::new(text, &lyndon_factorize(text), &lz_factorize(text))
}

fn domains(fmt: Format, text: &Text, out: &mut impl Write) -> Result<(), Failure> {
    let lf = lyndon_factorize(text);
    let mut report = AnalysisReport::new(text, &lf, &lz_factorize(text));
    report.domains = all_domains(&lf)?;
    report.tandems = find_tandem_domains(&lf)?;
    report.groups = find_p_groups(&lf)?;
    match fmt {
        Format::Json => render::json(out, &report),
        Format::Tsv => render::domains_tsv(out, &report),
        Format::Human => render::domains_human(out, &report),
    }
}

fn canonical(fmt: Format, text: &Text, run: usize, order: usize, out: &mut impl Write) -> Result<(), Failure> {
    let lf = lyndon_factorize(text);
    let lz = lz_factorize(text);
    let root = compute_domain(&lf, run, order)?;
    let cd = DomainTable::build(&lf)?.canonical_decomposition(&root)?;
    let budget = boundary_budget(&cd).map_err(|e| Failure::Defect(format!("{text}: {e}")))?;
    let boundaries = lz.count_boundaries(root.extended());
    let holds = boundaries >= budget.total;

    let mut report = AnalysisReport::new(text, &lf, &lz);
    report.canonical = Some(cd);
    report.budget.push(BudgetEntry {
        run,
        order,
        budget,
        boundaries,
    });
    report.verdicts.insert("budget".into(), Verdict::Flag(holds));
    match fmt {
        Format::Json => render::json(out, &report)?,
        Format::Tsv => render::canonical_tsv(out, &report)?,
        Format::Human => render::canonical_human(out, &report)?,
    }
    if !holds {
        return Err(Failure::Defect(format!(
            "{text}: extdom_{order}(F_{run}) holds {boundaries} phrase starts, budget {}",
            report.budget[0].budget.total
        )));
    }
    Ok(())
}

fn verify(fmt: Format, text: &Text, oracle_check: bool, out: &mut impl Write) -> Result<(), Failure> {
    let lemmas = verify_lemmas(text);
    let theorem = check_theorem(text)?;
    let lf = lyndon_factorize(text);
    let lz = lz_factorize(text);
    let oracles = if oracle_check {
        if text.len() > ORACLE_CHECK_BOUND {
            return Err(Failure::Usage(format!(
                "--oracle-check accepts inputs up to {ORACLE_CHECK_BOUND} symbols, got {}",
                text.len()
            )));
        }
        let same = oracle_lyndon_dp_bounded(text, ORACLE_CHECK_BOUND)? == lf
            && oracle_lz_naive_bounded(text, ORACLE_CHECK_BOUND)? == lz;
        Some(same)
    } else {
        None
    };

    let mut report = AnalysisReport::new(text, &lf, &lz);
    report.partition = theorem.partition.parts.clone();
    report.verdicts.insert("lemmas".into(), Verdict::Lemmas(lemmas.clone()));
    report
        .verdicts
        .insert("theorem".into(), Verdict::Theorem(theorem.clone()));
    if let Some(same) = oracles {
        report.verdicts.insert("oracles".into(), Verdict::Flag(same));
    }
    match fmt {
        Format::Json => render::json(out, &report)?,
        Format::Tsv => render::verify_tsv(out, &lemmas, &theorem, oracles)?,
        Format::Human => render::verify_human(out, &report, &lemmas, &theorem, oracles)?,
    }

    if let Some(c) = lemmas.checks.iter().find(|c| c.failures > 0) {
        let example = c.first_counterexample.as_deref().unwrap_or("no witness recorded");
        return Err(Failure::Defect(format!("{text}: {} failed ({example})", c.name)));
    }
    if !theorem.all_hold() {
        return Err(Failure::Defect(format!(
            "{text}: m = {}, z = {}, t = {}, partition parts hold: {}",
            theorem.m, theorem.z, theorem.t, theorem.parts_hold
        )));
    }
    if oracles == Some(false) {
        return Err(Failure::Defect(format!(
            "{text}: factorization differs from the oracle"
        )));
    }
    Ok(())
}

fn family(fmt: Format, k: usize, check: bool, out: &mut impl Write) -> Result<(), Failure> {
    let s = generate_family(k);
    let mut report = analyze(&s);
    let mut mismatch = None;
    if check {
        let counts = expected_counts(k)?;
        let expected: Vec<String> = expected_lz_phrases(k)?.iter().map(Text::to_string).collect();
        let actual: Vec<String> = report.phrases.iter().map(|p| p.text.clone()).collect();
        let counts_ok = (report.m, report.z) == (counts.m_k, counts.z_k);
        let phrases_ok = actual == expected;
        report.verdicts.insert("closed_form".into(), Verdict::Flag(counts_ok));
        report
            .verdicts
            .insert("phrase_recurrence".into(), Verdict::Flag(phrases_ok));
        if !counts_ok {
            mismatch = Some(format!(
                "s_{k}: (m, z) = ({}, {}), closed form gives ({}, {})",
                report.m, report.z, counts.m_k, counts.z_k
            ));
        } else if !phrases_ok {
            let at = actual
                .iter()
                .zip(&expected)
                .position(|(a, e)| a != e)
                .unwrap_or(actual.len().min(expected.len()));
            mismatch = Some(format!("s_{k}: phrase {} differs from the recurrence", at + 1));
        }
    }
    match fmt {
        Format::Json => render::json(out, &report)?,
        Format::Tsv => render::family_tsv(out, k, &report)?,
        Format::Human => render::family_human(out, k, &report)?,
    }
    match mismatch {
        Some(m) => Err(Failure::Defect(m)),
        None => Ok(()),
    }
}

fn search(fmt: Format, args: &SearchArgs, out: &mut impl Write) -> Result<(), Failure> {
    if args.min_len > args.max_len {
        return Err(Failure::Usage(format!(
            "--min-len {} exceeds --max-len {}",
            args.min_len, args.max_len
        )));
    }
    if args.jobs == Some(0) {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let mut cfg = SearchConfig::new(args.sigma as usize, args.max_len);
    cfg.min_len = args.min_len;
    cfg.dedupe = args.dedupe;
    cfg.verify = args.verify;
    cfg.jobs = args.jobs;

    let mut write_err = None;
    if fmt == Format::Tsv {
        writeln!(out, "sigma\tn\tstring\tm\tz\tslack")?;
    }
    let summary = exhaustive_search(&cfg, |rec| {
        if fmt == Format::Tsv && write_err.is_none() {
            if let Err(e) = writeln!(out, "{}", rec.to_tsv()) {
                write_err = Some(e);
            }
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    match fmt {
        Format::Json => render::json(out, &summary)?,
        Format::Tsv => {}
        Format::Human => render::search_human(out, &summary)?,
    }
    if let Some(v) = &summary.violation {
        return Err(Failure::Defect(format!("{} has m = {} and z = {}", v.string, v.m, v.z)));
    }
    if let Some(f) = &summary.first_partition_failure {
        return Err(Failure::Defect(format!("partition bound: {f}")));
    }
    if let Some(c) = summary
        .lemma_report
        .as_ref()
        .and_then(|r| r.checks.iter().find(|c| c.failures > 0))
    {
        let example = c.first_counterexample.as_deref().unwrap_or("no witness recorded");
        return Err(Failure::Defect(format!("{} failed ({example})", c.name)));
    }
    Ok(())
}

fn partition(fmt: Format, text: &Text, out: &mut impl Write) -> Result<(), Failure> {
    let theorem = check_theorem(text)?;
    let mut report = analyze(text);
    report.partition = theorem.partition.parts.clone();
    report
        .verdicts
        .insert("theorem".into(), Verdict::Theorem(theorem.clone()));
    match fmt {
        Format::Json => render::json(out, &report)?,
        Format::Tsv => render::partition_tsv(out, &theorem)?,
        Format::Human => render::partition_human(out, &theorem)?,
    }
    if !theorem.all_hold() {
        return Err(Failure::Defect(format!(
            "{text}: m = {}, z = {}, t = {}, parts hold: {}",
            theorem.m, theorem.z, theorem.t, theorem.parts_hold
        )));
    }
    Ok(())
}
