use endoaip::describe::{ModuleDesc, RingDesc};
use endoaip::harness::{generate_corpus, run_theorem_suite, CorpusSpec, TheoremId};
use endoaip::Caps;

fn small_spec() -> CorpusSpec {
    CorpusSpec {
        z_cyclic_max: 8,
        z_pair_max: 4,
        cyclic_ring_max: 8,
        rings: vec![RingDesc::triangular(RingDesc::cyclic(2), 2)],
        free_rank: 0,
        random_z_modules: 2,
        ..CorpusSpec::default()
    }
}

#[test]
fn reports_are_deterministic() {
    let spec = small_spec();
    let a = run_theorem_suite(&generate_corpus(&spec), TheoremId::ALL, &spec.caps);
    let b = run_theorem_suite(&generate_corpus(&spec), TheoremId::ALL, &spec.caps);
    assert_eq!(a.deterministic_json(), b.deterministic_json());
    assert!(a.passed(), "{}", a.to_text());
}

#[test]
fn cap_skips_are_listed() {
    let spec = CorpusSpec {
        modules: vec![ModuleDesc::Regular {
            ring: RingDesc::matrix(RingDesc::cyclic(2), 2),
        }],
        caps: Caps {
            ring: 64,
            ..Caps::default()
        },
        ..CorpusSpec::empty()
    };
    let corpus = generate_corpus(&spec);
    assert_eq!(corpus.len(), 1);
    let report = run_theorem_suite(&corpus, &[TheoremId::Copies], &spec.caps);
    let copies = &report.theorems[0];
    assert_eq!(copies.id, "COPIES");
    // End(M2(Z2)^2) has order 2^16, above the cap.
    assert_eq!(copies.skipped.len(), 1, "{copies:?}");
    assert_eq!(copies.skipped[0].structure, format!("{}^2", corpus.entries[0].name));
    assert!(report.passed());
}

#[test]
fn every_theorem_reports_a_statement() {
    let spec = small_spec();
    let report = run_theorem_suite(&generate_corpus(&spec), TheoremId::ALL, &spec.caps);
    assert_eq!(report.theorems.len(), 17);
    for t in &report.theorems {
        assert!(!t.statement.is_empty());
        assert!(t.hypothesis_met <= t.tested);
        for v in &t.violations {
            assert_eq!(v.severity, "implementation-suspect");
        }
    }
    assert!(!report.observations.is_empty());
}
