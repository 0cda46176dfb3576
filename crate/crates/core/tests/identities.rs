use polycong_core::identities::{registry, verify_identity, IdentityError};

#[test]
fn registry_passes_through_n_25() {
    for case in registry() {
        let weights: Vec<Option<u32>> =
            if case.uses_s { vec![None, Some(1), Some(2), Some(3)] } else { vec![None] };
        for n in 1..=25 {
            for &s in &weights {
                let out = verify_identity(case.id, n, s).unwrap();
                assert!(out.passed(), "{} n={n} s={s:?}: {out:?}", case.id);
            }
        }
    }
}

#[test]
fn ids_are_unique_and_prefixed() {
    let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    assert!(ids.iter().all(|id| id.starts_with("ID-")));
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), registry().len());
}

#[test]
fn bad_arguments() {
    assert!(matches!(verify_identity("ID-NOPE", 3, None), Err(IdentityError::UnknownId(_))));
    assert!(matches!(verify_identity("ID-I3", 0, None), Err(IdentityError::BadN { .. })));
    assert!(matches!(verify_identity("ID-I6", 3, Some(0)), Err(IdentityError::BadS { .. })));
}
