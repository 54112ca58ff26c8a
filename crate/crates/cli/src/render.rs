//! Text renderings of reports. JSON goes through serde; TSV output always
//! starts with a header line.

use std::io::{self, Write};

use serde::Serialize;

use lyndon_lz::bounds::TheoremReport;
use lyndon_lz::domain::{CanonicalPart, Domain, LemmaReport};
use lyndon_lz::report::AnalysisReport;
use lyndon_lz::SearchSummary;

use crate::Failure;

type Out = Result<(), Failure>;

pub fn json(out: &mut impl Write, value: &impl Serialize) -> Out {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn runs_human(out: &mut impl Write, r: &AnalysisReport) -> Out {
    writeln!(out, "input_len = {}, m = {}", r.input_len, r.m)?;
    for run in &r.runs {
        let power = if run.exponent > 1 {
            format!("^{}", run.exponent)
        } else {
            String::new()
        };
        writeln!(
            out,
            "F_{:<4} {:<12} ({}){power}",
            run.index,
            run.span.to_string(),
            run.factor_text
        )?;
    }
    Ok(())
}

pub fn runs_tsv(out: &mut impl Write, r: &AnalysisReport) -> Out {
    writeln!(out, "run\tstart\tend\tfactor\texponent")?;
    for run in &r.runs {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            run.index,
            run.span.start(),
            run.span.end(),
            run.factor_text,
            run.exponent
        )?;
    }
    Ok(())
}

pub fn phrases_human(out: &mut impl Write, r: &AnalysisReport) -> Out {
    writeln!(out, "input_len = {}, z = {}", r.input_len, r.z)?;
    for p in &r.phrases {
        writeln!(out, "{:<5} {:<12} {}", p.index, p.span.to_string(), p.text)?;
    }
    Ok(())
}

pub fn phrases_tsv(out: &mut impl Write, r: &AnalysisReport) -> Out {
    writeln!(out, "phrase\tstart\tend\ttext")?;
    for p in &r.phrases {
        writeln!(out, "{}\t{}\t{}\t{}", p.index, p.span.start(), p.span.end(), p.text)?;
    }
    Ok(())
}

fn domain_line(d: &Domain) -> String {
    let body = match d.i - d.j {
        0 => "ε".to_string(),
        1 => format!("F_{} {}", d.j, d.span),
        _ => format!("F_{}..F_{} {}", d.j, d.i - 1, d.span),
    };
    format!(
        "dom_{}(F_{}) = {body}, associated {}, extended {}",
        d.d,
        d.i,
        d.associated,
        d.extended()
    )
}

pub fn domains_human(out: &mut impl Write, r: &AnalysisReport) -> Out {
    writeln!(out, "input_len = {}, m = {}, z = {}", r.input_len, r.m, r.z)?;
    writeln!(out, "domains ({}):", r.domains.len())?;
    for d in &r.domains {
        writeln!(out, "  {}", domain_line(d))?;
    }
    writeln!(out, "tandem domains ({}):", r.tandems.len())?;
    for t in &r.tandems {
        writeln!(
            out,
            "  dom_{}(F_{}), dom_{}(F_{}): extended {}, associated {}",
            t.d + 1,
            t.i,
            t.d,
            t.i + 1,
            t.extended(),
            t.associated
        )?;
    }
    writeln!(out, "groups ({}):", r.groups.len())?;
    for g in &r.groups {
        let members: Vec<String> = g.members.iter().map(|m| format!("dom_{}(F_{})", m.d, m.i)).collect();
        writeln!(
            out,
            "  {}-group {}: extended {}, associated {}",
            g.p,
            members.join(" "),
            g.extended(),
            g.associated
        )?;
    }
    Ok(())
}

pub fn domains_tsv(out: &mut impl Write, r: &AnalysisReport) -> Out {
    writeln!(out, "kind\ti\td\tp\tj\tassoc_start\tassoc_end\text_start\text_end")?;
    for d in &r.domains {
        let (a, e) = (d.associated, d.extended());
        writeln!(
            out,
            "domain\t{}\t{}\t1\t{}\t{}\t{}\t{}\t{}",
            d.i,
            d.d,
            d.j,
            a.start(),
            a.end(),
            e.start(),
            e.end()
        )?;
    }
    for t in &r.tandems {
        let (a, e) = (t.associated, t.extended());
        writeln!(
            out,
            "tandem\t{}\t{}\t2\t{}\t{}\t{}\t{}\t{}",
            t.i,
            t.d,
            t.outer.j,
            a.start(),
            a.end(),
            e.start(),
            e.end()
        )?;
    }
    for g in &r.groups {
        let (a, e) = (g.associated, g.extended());
        let j = g.members.last().map_or(g.i, |m| m.j);
        writeln!(
            out,
            "group\t{}\t{}\t{}\t{j}\t{}\t{}\t{}\t{}",
            g.i,
            g.d,
            g.p,
            a.start(),
            a.end(),
            e.start(),
            e.end()
        )?;
    }
    Ok(())
}

pub fn canonical_human(out: &mut impl Write, r: &AnalysisReport) -> Out {
    let (Some(cd), Some(entry)) = (&r.canonical, r.budget.first()) else {
        return Ok(());
    };
    writeln!(out, "root {}", domain_line(&cd.root))?;
    for part in &cd.parts {
        match part {
            CanonicalPart::Cluster { members } => {
                let names: Vec<String> = members.iter().map(|m| format!("dom_{}(F_{})", m.d, m.i)).collect();
                writeln!(out, "  cluster of {}: {}", members.len(), names.join(" "))?;
            }
            CanonicalPart::Loose { domain } => writeln!(out, "  loose {}", domain_line(domain))?,
        }
    }
    let b = &entry.budget;
    writeln!(out, "k = {}, ℓ = {}, t = {}, d = {}", b.k, b.ell, b.t, b.d)?;
    writeln!(out, "k_h = {:?}, d_h = {:?}", b.k_h, b.d_h)?;
    writeln!(
        out,
        "S = {}, loose total = {}, budget = {} (⌈k/2⌉ + 1 = {})",
        b.s, b.loose_total, b.total, b.lower_bound
    )?;
    writeln!(
        out,
        "phrase starts in extended domain = {}, covers budget: {}",
        entry.boundaries,
        yes_no(entry.boundaries >= b.total)
    )?;
    Ok(())
}

pub fn canonical_tsv(out: &mut impl Write, r: &AnalysisReport) -> Out {
    let Some(cd) = &r.canonical else {
        return Ok(());
    };
    writeln!(out, "part\tkind\ti\td\tj\text_start\text_end")?;
    for (n, part) in cd.parts.iter().enumerate() {
        let (kind, doms): (&str, &[Domain]) = match part {
            CanonicalPart::Cluster { members } => ("cluster", members),
            CanonicalPart::Loose { domain } => ("loose", std::slice::from_ref(domain)),
        };
        for d in doms {
            let e = d.extended();
            writeln!(
                out,
                "{}\t{kind}\t{}\t{}\t{}\t{}\t{}",
                n + 1,
                d.i,
                d.d,
                d.j,
                e.start(),
                e.end()
            )?;
        }
    }
    Ok(())
}

fn theorem_lines(out: &mut impl Write, t: &TheoremReport) -> io::Result<()> {
    writeln!(out, "m < 2z: {} (slack 2z - m = {})", yes_no(t.passes), t.slack)?;
    writeln!(
        out,
        "z >= ⌈(m + t)/2⌉ with t = {}: {}",
        t.t,
        yes_no(t.partition_bound_holds)
    )?;
    writeln!(
        out,
        "every partition part holds ⌈k/2⌉ + 1 phrase starts: {}",
        yes_no(t.parts_hold)
    )
}

pub fn verify_human(
    out: &mut impl Write,
    r: &AnalysisReport,
    lemmas: &LemmaReport,
    theorem: &TheoremReport,
    oracles: Option<bool>,
) -> Out {
    writeln!(out, "input_len = {}, m = {}, z = {}", r.input_len, r.m, r.z)?;
    writeln!(out, "{:<34} {:>9} {:>8}", "check", "instances", "failures")?;
    for c in &lemmas.checks {
        writeln!(out, "{:<34} {:>9} {:>8}", c.name, c.instances, c.failures)?;
        if let Some(w) = &c.first_counterexample {
            writeln!(out, "  witness: {w}")?;
        }
    }
    theorem_lines(out, theorem)?;
    if let Some(same) = oracles {
        writeln!(out, "matches brute-force oracles: {}", yes_no(same))?;
    }
    let ok = lemmas.passed() && theorem.all_hold() && oracles != Some(false);
    writeln!(out, "verdict: {}", if ok { "PASS" } else { "FAIL" })?;
    Ok(())
}

pub fn verify_tsv(out: &mut impl Write, lemmas: &LemmaReport, t: &TheoremReport, oracles: Option<bool>) -> Out {
    writeln!(out, "check\tinstances\tfailures\twitness")?;
    for c in &lemmas.checks {
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            c.name,
            c.instances,
            c.failures,
            c.first_counterexample.as_deref().unwrap_or("")
        )?;
    }
    let flags = [
        ("m-below-2z", t.passes),
        ("partition-bound", t.partition_bound_holds),
        ("partition-parts", t.parts_hold),
    ];
    for (name, ok) in flags.into_iter().chain(oracles.map(|o| ("oracles", o))) {
        writeln!(out, "{name}\t1\t{}\t", u8::from(!ok))?;
    }
    Ok(())
}

pub fn family_human(out: &mut impl Write, k: usize, r: &AnalysisReport) -> Out {
    writeln!(out, "s_{k} = {}", r.input)?;
    writeln!(out, "input_len = {}, m = {}, z = {}", r.input_len, r.m, r.z)?;
    let phrases: Vec<&str> = r.phrases.iter().map(|p| p.text.as_str()).collect();
    writeln!(out, "phrases: {}", phrases.join(" "))?;
    for (name, v) in &r.verdicts {
        let ok = serde_json::to_value(v)?.as_bool().unwrap_or(false);
        writeln!(out, "{name}: {}", if ok { "matches" } else { "MISMATCH" })?;
    }
    Ok(())
}

pub fn family_tsv(out: &mut impl Write, k: usize, r: &AnalysisReport) -> Out {
    writeln!(out, "k\tn\tm\tz\tstring")?;
    writeln!(out, "{k}\t{}\t{}\t{}\t{}", r.input_len, r.m, r.z, r.input)?;
    Ok(())
}

pub fn search_human(out: &mut impl Write, s: &SearchSummary) -> Out {
    writeln!(
        out,
        "sigma = {}, lengths {}..={}, {} strings{}",
        s.sigma,
        s.min_len,
        s.max_len,
        s.strings,
        if s.dedupe { " (one per relabeling class)" } else { "" }
    )?;
    writeln!(
        out,
        "{:>4} {:>12} {:>9} {:>24} {:>9} {:>24}",
        "n", "strings", "max m-z", "witness", "max m/z", "witness"
    )?;
    for l in &s.lengths {
        writeln!(
            out,
            "{:>4} {:>12} {:>9} {:>24} {:>9.4} {:>24}",
            l.n,
            l.strings,
            l.max_difference,
            l.max_difference_witness.string.to_string(),
            l.max_ratio,
            l.max_ratio_witness.string.to_string()
        )?;
    }
    if let Some(r) = &s.lemma_report {
        writeln!(
            out,
            "lemma checks: {} instances, {} failures",
            r.checks.iter().map(|c| c.instances).sum::<usize>(),
            r.failures()
        )?;
        writeln!(
            out,
            "partition checks: {}, failures: {}",
            s.partition_checks, s.partition_failures
        )?;
    }
    match &s.violation {
        Some(v) => writeln!(out, "verdict: FAIL, {} has m = {}, z = {}", v.string, v.m, v.z)?,
        None => writeln!(out, "verdict: {}", if s.passed() { "PASS" } else { "FAIL" })?,
    }
    Ok(())
}

pub fn partition_human(out: &mut impl Write, t: &TheoremReport) -> Out {
    writeln!(out, "m = {}, z = {}, t = {}", t.m, t.z, t.t)?;
    for p in &t.partition.parts {
        writeln!(
            out,
            "  extdom_1(F_{}) = {} k = {} phrase starts = {} (need {})",
            p.run,
            p.span,
            p.k,
            p.boundaries,
            p.k.div_ceil(2) + 1
        )?;
    }
    theorem_lines(out, t)?;
    Ok(())
}

pub fn partition_tsv(out: &mut impl Write, t: &TheoremReport) -> Out {
    writeln!(out, "run\tstart\tend\tk\tboundaries\tneeded")?;
    for p in &t.partition.parts {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            p.run,
            p.span.start(),
            p.span.end(),
            p.k,
            p.boundaries,
            p.k.div_ceil(2) + 1
        )?;
    }
    Ok(())
}
