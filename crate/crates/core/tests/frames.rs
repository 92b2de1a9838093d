use cayley_core::frames::{ExteriorForm, FrameData, StructureConstants};
use cayley_core::{QSqrt3, Rational};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = QSqrt3> {
    (-6i64..=6, -6i64..=6, 1i64..=4)
        .prop_map(|(a, b, d)| QSqrt3::new(Rational::frac(a, d), Rational::frac(b, d)))
}

fn form(degree: usize) -> impl Strategy<Value = ExteriorForm> {
    let monomials: Vec<Vec<usize>> = match degree {
        0 => vec![vec![]],
        1 => vec![vec![1], vec![2], vec![3]],
        2 => vec![vec![1, 2], vec![1, 3], vec![2, 3]],
        _ => vec![vec![1, 2, 3]],
    };
    prop::collection::vec(scalar(), monomials.len()).prop_map(move |cs| {
        cs.iter()
            .zip(&monomials)
            .fold(ExteriorForm::zero(degree), |acc, (c, idx)| {
                &acc + &ExteriorForm::monomial(c.clone(), idx)
            })
    })
}

fn pair() -> impl Strategy<Value = (ExteriorForm, ExteriorForm)> {
    (0usize..=3).prop_flat_map(|p| (0..=3 - p).prop_flat_map(move |r| (form(p), form(r))))
}

proptest! {
    #[test]
    fn graded_commutativity((x, y) in pair()) {
        let sign = if x.degree() * y.degree() % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(x.wedge(&y).unwrap(), y.wedge(&x).unwrap().scale(&QSqrt3::from(sign)));
    }

    #[test]
    fn wedge_is_associative(x in form(1), y in form(1), z in form(1)) {
        let left = x.wedge(&y).unwrap().wedge(&z).unwrap();
        let right = x.wedge(&y.wedge(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn d_squared_vanishes(x in form(1)) {
        let sc = StructureConstants::twisted_cubic_link();
        prop_assert!(sc.d(&sc.d(&x).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn leibniz(x in form(1), y in form(1)) {
        let sc = StructureConstants::twisted_cubic_link();
        let lhs = sc.d(&x.wedge(&y).unwrap()).unwrap();
        let rhs = &sc.d(&x).unwrap().wedge(&y).unwrap() - &x.wedge(&sc.d(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn twisted_cubic_frame() {
    let frame = FrameData::twisted_cubic_link();
    let report = frame.verify_structure_equations().unwrap();
    assert!(report.all_passed);
    let h = frame.second_fundamental_form().unwrap();
    for a in 4..=7 {
        for j in 1..=3 {
            assert!(h.get(a, 1, j).is_zero());
            for k in 1..=3 {
                assert_eq!(h.get(a, j, k), h.get(a, k, j));
            }
        }
    }
}
