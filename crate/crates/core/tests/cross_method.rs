use fibcat::catalog::{catalog, ClassCatalogEntry};
use fibcat::genfunc::{convergent_chain, fbark_gf, tk_gf, CatalanOracle, ChainKind};
use fibcat::perm_core::{eco_counts, Limits};
use fibcat::succession::{verify_rule, SuccessionRule};

#[test]
fn rules_match_generating_trees_label_by_label() {
    let limits = Limits::default();
    for &entry in catalog() {
        for k in entry.ks_within(2..=5) {
            let cls = entry.class(k).unwrap();
            let report = verify_rule(&entry.rule(k).unwrap(), &cls, 8, &limits).unwrap();
            assert!(report.all_agree(), "{}: {:?}", cls.name(), report.first_disagreement());
        }
    }
}

#[test]
fn generalized_fibonacci_three_ways() {
    for k in 2..=6 {
        let gf = tk_gf(k).unwrap().series(9).unwrap();
        assert_eq!(SuccessionRule::gfib(k).unwrap().level_counts(9).unwrap(), gf, "k={k}");
        assert_eq!(SuccessionRule::gfib2(k).unwrap().level_counts(9).unwrap(), gf, "k={k}");
    }
}

#[test]
fn fbar_k_three_ways() {
    for k in 3..=6 {
        let gf = fbark_gf(k).unwrap().series(9).unwrap();
        assert_eq!(SuccessionRule::evf1(k).unwrap().level_counts(9).unwrap(), gf, "k={k}");
        assert_eq!(SuccessionRule::evf2(k).unwrap().level_counts(9).unwrap(), gf, "k={k}");
    }
}

#[test]
fn sibling_classes_are_equinumerous() {
    let limits = Limits::default();
    let eco = |e: ClassCatalogEntry, k| eco_counts(&e.class(Some(k)).unwrap(), 9, &limits).unwrap();
    for k in 2..=5 {
        assert_eq!(eco(ClassCatalogEntry::Gfib, k), eco(ClassCatalogEntry::Gfib2, k), "k={k}");
        assert_eq!(eco(ClassCatalogEntry::Cat1, k), eco(ClassCatalogEntry::Cat2, k), "k={k}");
    }
    for k in 3..=5 {
        assert_eq!(eco(ClassCatalogEntry::Evf1, k), eco(ClassCatalogEntry::Evf2, k), "k={k}");
    }
    assert_eq!(
        eco(ClassCatalogEntry::Direct, 3),
        eco_counts(&ClassCatalogEntry::Pell.class(None).unwrap(), 9, &limits).unwrap()
    );
}

#[test]
fn convergent_chains_approach_catalan() {
    let catalan = CatalanOracle::terms(12).unwrap();
    for k in 3..=8u32 {
        let m = convergent_chain(ChainKind::M, k).unwrap().series(12).unwrap();
        assert_eq!(m.first_mismatch(&catalan), Some(k as usize + 1), "M chain, k={k}");
    }
    for k in 2..=8u32 {
        let d = convergent_chain(ChainKind::D, k).unwrap().series(12).unwrap();
        assert_eq!(d.first_mismatch(&catalan), Some(k as usize + 1), "D chain, k={k}");
    }
}

#[test]
fn fib_alt_is_not_fibonacci() {
    let limits = Limits::default();
    let alt = ClassCatalogEntry::FibAlt.class(None).unwrap();
    assert_eq!(eco_counts(&alt, 8, &limits).unwrap(), [1, 1, 2, 3, 4, 5, 6, 7, 8]);
    let report = verify_rule(&SuccessionRule::rsfibo(), &alt, 6, &limits).unwrap();
    let first = report.first_disagreement().unwrap();
    assert_eq!((first.n, first.counts_equal, first.labels_equal), (3, true, false));
    let count = report.levels.iter().find(|l| !l.counts_equal).unwrap();
    assert_eq!((count.n, count.rule_count, count.eco_count), (4, 5, 4));
}
