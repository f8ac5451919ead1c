use zforce_core::generators::{enumerate_connected_claw_free_cubic, necklace, prism};
use zforce_core::solvers::bounds_report;
use zforce_core::{are_isomorphic, build_certificate, verify_certificate, SolverConfig};

#[test]
fn corpus_counts_by_order() {
    let corpus = enumerate_connected_claw_free_cubic(14).unwrap();
    let mut counts = std::collections::BTreeMap::new();
    for g in &corpus {
        *counts.entry(g.n()).or_insert(0usize) += 1;
    }
    eprintln!("{counts:?}");
    assert_eq!(counts[&6], 1);
    assert_eq!(counts[&8], 1);
}

#[test]
fn every_certificate_verifies_up_to_14() {
    for g in enumerate_connected_claw_free_cubic(14).unwrap() {
        let c = build_certificate(&g).unwrap_or_else(|e| panic!("{e} on {:?}", g.edges()));
        let report = verify_certificate(&g, &c);
        assert!(
            report.passed(),
            "{:?} on {:?}",
            report.failures().collect::<Vec<_>>(),
            g.edges()
        );
    }
}

#[test]
fn every_report_is_clean_up_to_14() {
    let config = SolverConfig::default();
    let mut tight = Vec::new();
    for g in enumerate_connected_claw_free_cubic(14).unwrap() {
        let r = bounds_report(&g, &config).unwrap();
        assert!(
            r.violations().is_empty(),
            "{:?} on {:?}",
            r.violations(),
            g.edges()
        );
        if r.z_equals_alpha_plus_one {
            tight.push(g);
        }
    }
    let expected = [prism(), necklace(2).unwrap(), necklace(3).unwrap()];
    assert_eq!(tight.len(), 3);
    for h in &expected {
        assert!(tight.iter().any(|g| are_isomorphic(g, h)));
    }
}

#[test]
fn random_certificates_verify() {
    use zforce_core::generators::random_claw_free_cubic;
    use zforce_core::CertificateMode;
    let mut modes = std::collections::BTreeMap::new();
    for seed in 0..400u64 {
        let units = 2 + (seed % 30) as usize;
        let fraction = [0.0, 0.2, 0.5, 0.9][(seed % 4) as usize];
        let Ok(g) = random_claw_free_cubic(units, fraction, seed) else {
            continue;
        };
        let c = build_certificate(&g).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        let report = verify_certificate(&g, &c);
        assert!(report.passed(), "seed {seed}: {:?}", report.failures().collect::<Vec<_>>());
        *modes.entry(c.mode.as_str()).or_insert(0usize) += 1;
        if c.mode != CertificateMode::SmallCase {
            assert!(3 * c.s.len() <= g.n() + 6, "seed {seed}");
        }
    }
    for mode in ["diamond-start", "claim2", "cycle-chain"] {
        assert!(modes.get(mode).copied().unwrap_or(0) > 10, "{modes:?}");
    }
}
