use monopow::ExponentVector;
use monopow_cli::parse::{
    default_vars, format_ideal, format_monomial, from_spec, parse_ideal, parse_monomial,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn monomials_round_trip(coords in prop::collection::vec(0u64..20, 1..5)) {
        let vars = default_vars(coords.len());
        let a = ExponentVector::new(coords);
        let text = format_monomial(&vars, &a);
        prop_assert_eq!(parse_monomial(&text, &vars).unwrap(), a);
    }

    #[test]
    fn ideals_round_trip_through_text_and_spec(
        gens in prop::collection::vec(prop::collection::vec(0u64..8, 3), 1..6)
    ) {
        let vars = default_vars(3);
        let list: Vec<String> = gens
            .iter()
            .map(|g| format_monomial(&vars, &ExponentVector::new(g.clone())))
            .collect();
        let parsed = parse_ideal(&list.join(", "), Some(&vars)).unwrap();
        let text = format_ideal(&vars, &parsed.ideal);
        let reparsed = parse_ideal(&text, Some(&vars)).unwrap();
        prop_assert_eq!(&reparsed.ideal, &parsed.ideal);
        let via_spec = from_spec(&parsed.to_spec(), None).unwrap();
        prop_assert_eq!(via_spec.ideal, parsed.ideal);
    }
}

#[test]
fn many_variables_sort_naturally() {
    let vars = default_vars(11);
    assert_eq!(vars[1], "x2");
    assert_eq!(vars[10], "x11");
    let parsed = parse_ideal("x11^2*x2, x1", None).unwrap();
    assert_eq!(parsed.vars, ["x1", "x2", "x11"]);
}

#[test]
fn implicit_multiplication_and_parentheses() {
    let a = parse_ideal("(xy^2, x^3)", None).unwrap();
    let b = parse_ideal("x*y^2, x^3", None).unwrap();
    assert_eq!(a.ideal, b.ideal);
}
