use diairesis_core::formula::{countermodel, valuations};
use diairesis_core::{entails, parse, Formula, TruthValue4, Valuation};
use proptest::prelude::*;

fn atom_name() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("p".to_string()),
        Just("q".to_string()),
        Just("r".to_string()),
        "[A-Za-z][A-Za-z0-9_]{0,6}",
    ]
}

fn formula(depth: u32) -> impl Strategy<Value = Formula> {
    atom_name()
        .prop_map(Formula::Atom)
        .prop_recursive(depth, 64, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| l.and(r)),
                (inner.clone(), inner).prop_map(|(l, r)| l.or(r)),
            ]
        })
}

/// Formulas over `p`, `q`, `r` only, for enumeration-based checks.
fn small_formula() -> impl Strategy<Value = Formula> {
    prop_oneof![Just("p"), Just("q"), Just("r")]
        .prop_map(Formula::atom)
        .prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| l.and(r)),
                (inner.clone(), inner).prop_map(|(l, r)| l.or(r)),
            ]
        })
}

fn positive_formula() -> impl Strategy<Value = Formula> {
    atom_name()
        .prop_map(Formula::Atom)
        .prop_recursive(6, 64, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| l.and(r)),
                (inner.clone(), inner).prop_map(|(l, r)| l.or(r)),
            ]
        })
}

fn all_atoms(f: &Formula, value: TruthValue4) -> Valuation {
    f.atoms().into_iter().map(|a| (a, value)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_then_parse_is_identity(f in formula(6)) {
        let text = f.to_string();
        prop_assert_eq!(parse(&text).unwrap(), f);
    }

    #[test]
    fn classical_inputs_stay_classical(f in formula(5), seed in any::<u64>()) {
        let v: Valuation = f
            .atoms()
            .into_iter()
            .enumerate()
            .map(|(i, a)| (a, TruthValue4::from(seed >> (i % 64) & 1 == 1)))
            .collect();
        prop_assert!(f.evaluate(&v).unwrap().as_classical().is_some());
    }

    #[test]
    fn neither_everywhere_is_neither(f in positive_formula()) {
        prop_assert_eq!(f.evaluate(&all_atoms(&f, TruthValue4::Neither)).unwrap(), TruthValue4::Neither);
    }

    #[test]
    fn extra_premises_keep_entailment(
        premises in proptest::collection::vec(small_formula(), 0..3),
        extra in small_formula(),
        conclusion in small_formula(),
    ) {
        if entails(&premises, &conclusion).unwrap() {
            let mut more = premises.clone();
            more.push(extra);
            prop_assert!(entails(&more, &conclusion).unwrap());
        }
    }

    #[test]
    fn entailment_matches_table_oracle(
        premises in proptest::collection::vec(small_formula(), 0..3),
        conclusion in small_formula(),
    ) {
        // oracle: evaluate over all 64 valuations of p, q, r regardless of
        // which atoms occur
        let names = ["p".to_string(), "q".to_string(), "r".to_string()];
        let designated = |v: TruthValue4| v == TruthValue4::True || v == TruthValue4::Both;
        let expected = valuations(&names).all(|v| {
            !premises.iter().all(|p| designated(p.evaluate(&v).unwrap()))
                || designated(conclusion.evaluate(&v).unwrap())
        });
        prop_assert_eq!(entails(&premises, &conclusion).unwrap(), expected);
    }
}

#[test]
fn contradiction_does_not_explode() {
    let premise = parse("p & ~p").unwrap();
    let q = parse("q").unwrap();
    assert!(!entails(std::slice::from_ref(&premise), &q).unwrap());
    let witness = countermodel(std::slice::from_ref(&premise), &q)
        .unwrap()
        .unwrap();
    assert_eq!(witness.get("p"), Some(TruthValue4::Both));
    assert_eq!(witness.get("q"), Some(TruthValue4::Neither));
    assert_eq!(premise.evaluate(&witness).unwrap(), TruthValue4::Both);
}

#[test]
fn classical_contradiction_is_never_designated_classically() {
    let premise = parse("p & ~p").unwrap();
    for b in [false, true] {
        let v = Valuation::new().with("p", TruthValue4::from(b));
        assert_eq!(premise.evaluate(&v).unwrap(), TruthValue4::False);
    }
}
