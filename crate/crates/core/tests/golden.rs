use zforce_core::forcing::{is_forcing_set, zero_forcing_number};
use zforce_core::generators::{necklace, prism};
use zforce_core::solvers::{independence_number, matching_number};
use zforce_core::{build_certificate, CertificateMode, SolverConfig, VertexSet};

#[test]
fn golden_values() {
    let config = SolverConfig::default();
    let (p, n2, n3) = (prism(), necklace(2).unwrap(), necklace(3).unwrap());
    assert_eq!(zero_forcing_number(&p, &config).unwrap().0, 3);
    assert_eq!(zero_forcing_number(&n2, &config).unwrap().0, 4);
    assert_eq!(zero_forcing_number(&n3, &config).unwrap().0, 5);
    assert_eq!(independence_number(&p, 64).unwrap().0, 2);
    assert_eq!(matching_number(&p).0, 3);
    assert_eq!(independence_number(&n2, 64).unwrap().0, 3);
    assert_eq!(matching_number(&n2).0, 4);
    assert_eq!(independence_number(&n3, 64).unwrap().0, 4);
}

#[test]
fn drawn_witnesses_force() {
    // one triangle of the prism
    let tri: VertexSet = [0, 1, 2].iter().collect();
    assert!(is_forcing_set(&prism(), &tri));

    // necklace(2): diamond 0 has ends 0, 3 and interior 1, 2; end 0 meets end 7
    let n2 = necklace(2).unwrap();
    let w2: VertexSet = [1, 0, 7, 5].iter().collect();
    assert!(is_forcing_set(&n2, &w2));

    // necklace(3): both ends and an interior vertex of the first diamond, one
    // interior vertex of each other diamond
    let n3 = necklace(3).unwrap();
    let w3: VertexSet = [0, 3, 1, 5, 9].iter().collect();
    assert!(is_forcing_set(&n3, &w3));
}

#[test]
fn small_cases_use_fixed_witnesses() {
    let c = build_certificate(&prism()).unwrap();
    assert_eq!(
        (c.mode, c.s.len(), c.i.len()),
        (CertificateMode::SmallCase, 3, 2)
    );
    let c = build_certificate(&necklace(2).unwrap()).unwrap();
    assert_eq!(
        (c.mode, c.s.len(), c.i.len()),
        (CertificateMode::SmallCase, 4, 3)
    );
    let c = build_certificate(&necklace(3).unwrap()).unwrap();
    assert_eq!((c.mode, c.s.len()), (CertificateMode::DiamondStart, 5));
}
