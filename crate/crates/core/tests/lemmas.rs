use lyndon_lz::bounds::{generate_family, SearchConfig};
use lyndon_lz::domain::{all_domains, canonical_decomposition, find_p_groups, find_tandem_domains, DomainTable};
use lyndon_lz::{exhaustive_search, lyndon_factorize, lz_factorize, verify_lemmas, Span, Text};

fn all_strings(sigma: u8, max_len: usize) -> Vec<Text> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..sigma).map(move |c| {
                    let mut w = w.clone();
                    w.push(b'a' + c);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().map(|w| Text::from(w.as_slice())));
    }
    out
}

#[test]
fn family_members_pass_every_check() {
    for k in 2..=10 {
        let report = verify_lemmas(&generate_family(k));
        assert!(report.passed(), "k = {k}: {report:#?}");
    }
}

#[test]
fn binary_strings_up_to_fourteen() {
    let mut cfg = SearchConfig::new(2, 14);
    cfg.verify = true;
    let summary = exhaustive_search(&cfg, |_| {}).unwrap();
    let report = summary.lemma_report.as_ref().unwrap();
    assert!(summary.passed(), "{report:#?} {:?}", summary.first_partition_failure);
    for check in &report.checks {
        assert!(check.instances > 0, "{} never exercised", check.name);
    }
}

#[test]
fn laminar_and_suffix_monotone() {
    for s in all_strings(3, 7) {
        let lf = lyndon_factorize(&s);
        let table = DomainTable::build(&lf).unwrap();
        let doms: Vec<_> = table.iter().filter(|d| !d.is_empty()).collect();
        for a in &doms {
            for b in &doms {
                let (x, y) = (a.span, b.span);
                assert!(!x.overlaps(y) || x.contains_span(y) || y.contains_span(x), "{s}");
            }
            for d2 in a.d + 1..=lf.m() - a.i + 1 {
                let hi = table.get(a.i, d2).unwrap();
                assert!(a.span.contains_span(hi.span) && hi.span.end() == a.span.end(), "{s}");
            }
        }
    }
}

#[test]
fn tandem_spans_stay_inside_their_extended_domain() {
    for s in all_strings(2, 11) {
        let lf = lyndon_factorize(&s);
        for td in find_tandem_domains(&lf).unwrap() {
            assert!(td.inner.extended().contains_span(td.associated), "{s}");
            assert_eq!(td.associated.len(), lf.run(td.i).span.len());
        }
    }
}

#[test]
fn domain_extended_boundaries_meet_the_bound() {
    for s in all_strings(2, 12) {
        let lf = lyndon_factorize(&s);
        let lz = lz_factorize(&s);
        for dom in all_domains(&lf).unwrap() {
            let needed = dom.size().div_ceil(2) + 1;
            assert!(lz.count_boundaries(dom.extended()) >= needed, "{s} {dom:?}");
        }
    }
}

#[test]
fn decompositions_tile_their_root() {
    for s in all_strings(2, 12).into_iter().chain((2..=8).map(generate_family)) {
        let lf = lyndon_factorize(&s);
        for dom in all_domains(&lf).unwrap().into_iter().filter(|d| !d.is_empty()) {
            let cd = canonical_decomposition(&lf, &dom).unwrap();
            let tiles = cd.extdom_tiling(&lf);
            let joined = tiles.iter().skip(1).try_fold(tiles[0], |acc, t| acc.join(*t));
            assert_eq!(joined, Some(dom.extended()), "{s} {dom:?}");
            let budget = lyndon_lz::boundary_budget(&cd).unwrap();
            assert!(budget.total >= budget.lower_bound);
        }
    }
}

#[test]
fn groups_share_one_extended_domain() {
    let mut largest = 0;
    for s in all_strings(2, 12) {
        let lf = lyndon_factorize(&s);
        for g in find_p_groups(&lf).unwrap() {
            let ext = g.extended();
            assert!(g.members.iter().all(|d| d.extended() == ext), "{s}");
            largest = largest.max(g.p);
        }
    }
    assert!(largest >= 3);
}

#[test]
fn sample_structures() {
    let s = Text::from("abbabbababbababbbababbaba");
    let lf = lyndon_factorize(&s);
    let tandems: Vec<(usize, usize)> = find_tandem_domains(&lf).unwrap().iter().map(|t| (t.i, t.d)).collect();
    assert!(tandems.contains(&(3, 2)));
    let root = lyndon_lz::compute_domain(&lf, 5, 1).unwrap();
    let cd = canonical_decomposition(&lf, &root).unwrap();
    let budget = lyndon_lz::boundary_budget(&cd).unwrap();
    let have = lz_factorize(&s).count_boundaries(Span::new(1, 25));
    assert_eq!(have, 8);
    assert!(have >= budget.total);
}
