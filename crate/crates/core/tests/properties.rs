use proptest::prelude::*;

use quandlekit::fpq::{
    enumerate_presented, parse_presentation, serialize_presentation, Presentation,
    QuandleExpression, Relation,
};
use quandlekit::quandle::{all_homomorphisms, QuandleOps};
use quandlekit::{FiniteQuandle, QuadraticNumber, Rational};

fn leaf() -> impl Strategy<Value = QuandleExpression> {
    prop::sample::select(vec!["a", "b"]).prop_map(QuandleExpression::generator)
}

fn expression() -> impl Strategy<Value = QuandleExpression> {
    leaf().prop_recursive(3, 6, 2, |inner| {
        (
            inner.clone(),
            inner,
            prop::sample::select(vec![-2i64, -1, 1, 2, 3]),
        )
            .prop_map(|(l, r, k)| QuandleExpression::op(l, r, k))
    })
}

fn presentation() -> impl Strategy<Value = Presentation> {
    prop::collection::vec((expression(), leaf()), 1..=2).prop_map(|rels| {
        Presentation::new(
            vec!["a".into(), "b".into()],
            rels.into_iter().map(|(l, r)| Relation::new(l, r)).collect(),
        )
        .unwrap()
    })
}

/// Assignments `{a, b} -> k` satisfying every relation, counted directly.
fn satisfying(p: &Presentation, k: &FiniteQuandle) -> usize {
    let mut n = 0;
    for x in 0..k.order() {
        for y in 0..k.order() {
            let images = [x, y];
            let assign = |s: &str| p.generator_index(s).map(|i| images[i]);
            let ok = p.relations().iter().all(|r| {
                r.lhs.evaluate(k, &assign).unwrap() == r.rhs.evaluate(k, &assign).unwrap()
            });
            n += usize::from(ok);
        }
    }
    n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closed_enumerations_are_universal(p in presentation()) {
        let result = enumerate_presented(&p, 1000).unwrap();
        if let Some(q) = result.quandle() {
            prop_assert!(q.validate_axioms().is_empty());
            let images = result.generator_images().unwrap();
            prop_assert!(q.generates(images));
            prop_assert!(p.failing_relations(q, images).unwrap().is_empty());
            for k in [FiniteQuandle::dihedral(3).unwrap(), FiniteQuandle::dihedral(5).unwrap()] {
                prop_assert_eq!(all_homomorphisms(q, &k).unwrap().len(), satisfying(&p, &k));
            }
        }
    }

    #[test]
    fn twist_families_are_universal(j in prop::sample::select(vec![-2i64, -1, 1, 2, 3]), k in 1i64..=5) {
        let p = parse_presentation(&format!("gens: a b\nrel: (a * b) *^{j} a = b\nrel: b *^{k} a = b")).unwrap();
        let result = enumerate_presented(&p, 1000).unwrap();
        let q = result.quandle().expect("family closes for k <= 5");
        prop_assert!(q.validate_axioms().is_empty());
        for k in [
            FiniteQuandle::trivial(2).unwrap(),
            FiniteQuandle::dihedral(3).unwrap(),
            FiniteQuandle::dihedral(5).unwrap(),
            FiniteQuandle::dihedral(7).unwrap(),
        ] {
            prop_assert_eq!(all_homomorphisms(q, &k).unwrap().len(), satisfying(&p, &k));
        }
    }

    #[test]
    fn presentation_text_round_trips(p in presentation()) {
        prop_assert_eq!(parse_presentation(&serialize_presentation(&p)).unwrap(), p);
    }

    #[test]
    fn dihedral_power_is_iteration(n in 3usize..9, x in 0usize..9, y in 0usize..9, k in -4i64..=4) {
        let q = FiniteQuandle::dihedral(n).unwrap();
        let (x, y) = (x % n, y % n);
        let mut it = x;
        for _ in 0..k.unsigned_abs() {
            it = if k > 0 { q.op(&it, &y) } else { q.op_inv(&it, &y) };
        }
        prop_assert_eq!(q.pow(x, y, k), it);
    }

    #[test]
    fn quadratic_field_laws(a in -20i64..20, b in -20i64..20, c in 1i64..9, d in -20i64..20) {
        let r = |p: i64, q: i64| Rational::new(p.into(), q.into());
        let x = QuadraticNumber::new(r(a, c), r(b, c));
        let y = QuadraticNumber::new(r(d, 3), r(a, 7));
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!((x.clone() + y.clone()) * x.clone(), x.clone() * x.clone() + y.clone() * x.clone());
        if x != QuadraticNumber::from_rational(r(0, 1)) {
            let inv = x.checked_inv().unwrap();
            prop_assert_eq!(x * inv, QuadraticNumber::from_rational(r(1, 1)));
        }
    }
}
