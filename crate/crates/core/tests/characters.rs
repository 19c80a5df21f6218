use paradim::characters::{chi_closed, chi_closed_young, chi_series, principal_poly, WeightParams};

fn sweep() -> impl Iterator<Item = WeightParams> {
    (3..=60).flat_map(|k| (0..=60).step_by(2).map(move |j| WeightParams::new(k, j).unwrap()))
}

#[test]
fn closed_forms_match_series() {
    let mut bad = Vec::new();
    for i in 1..=17 {
        for w in sweep() {
            let closed = chi_closed(i, w).unwrap();
            let series = chi_series(i, w.f1(), w.f2()).unwrap();
            if closed != series {
                bad.push((i, w.k, w.j, closed, series));
            }
        }
    }
    assert!(
        bad.is_empty(),
        "{} mismatches, first: {:?}",
        bad.len(),
        &bad[..bad.len().min(20)]
    );
}

#[test]
fn sign_flip_invariance() {
    for i in 1..=17 {
        let phi = principal_poly(i).unwrap();
        let neg = phi.negated();
        for w in sweep() {
            assert_eq!(
                phi.character(w.f1(), w.f2()).unwrap(),
                neg.character(w.f1(), w.f2()).unwrap()
            );
        }
    }
}

#[test]
fn young_forms_match_weight_forms() {
    let mut bad = Vec::new();
    for i in [2, 6, 9, 11, 13] {
        for w in sweep() {
            let a = chi_closed_young(i, w.f1(), w.f2()).unwrap();
            let b = chi_closed(i, w).unwrap();
            if a != b {
                bad.push((i, w.k, w.j, a, b));
            }
        }
    }
    assert!(
        bad.is_empty(),
        "{} mismatches, first: {:?}",
        bad.len(),
        &bad[..bad.len().min(20)]
    );
}

#[test]
fn dimension_character_is_positive() {
    for w in sweep() {
        assert!(chi_closed(1, w).unwrap() >= 1);
    }
}
