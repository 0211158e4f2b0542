use super::*;
use crate::poly::parse_polynomial;

fn ring3() -> Arc<Ring> {
    Ring::new(&["z1", "z2", "z3"], &[]).unwrap()
}

fn ring3t() -> Arc<Ring> {
    Ring::new(&["z1", "z2", "z3"], &["t"]).unwrap()
}

fn ring2() -> Arc<Ring> {
    Ring::new(&["z1", "z2"], &[]).unwrap()
}

fn cfg() -> Config {
    Config::default()
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::from_exponents(e)
}

#[test]
fn global_basis_of_variables_is_itself() {
    let r = ring2();
    let sb = standard_basis(&Ideal::parse(&r, &["z1", "z2"]).unwrap(), &MonomialOrder::Global, &cfg()).unwrap();
    assert_eq!(sb.basis().len(), 2);
    assert_eq!(sb.leading_monomials(), &[mono(&[0, 1]), mono(&[1])]);
}

#[test]
fn local_basis_textbook_example() {
    let r = ring2();
    let i = Ideal::parse(&r, &["2*z1^2 + 5*z2^3", "2*z1*z2^2"]).unwrap();
    let sb = standard_basis(&i, &MonomialOrder::Local, &cfg()).unwrap();
    let mut lead = sb.leading_monomials().to_vec();
    lead.sort();
    let mut want = vec![mono(&[2]), mono(&[1, 2]), mono(&[0, 5])];
    want.sort();
    assert_eq!(lead, want);
    assert_eq!(colength_at_origin(&i, &cfg()).unwrap().value(), Some(7));
    let z2_5 = parse_polynomial("z2^5", &r).unwrap();
    let z2_4 = parse_polynomial("z2^4", &r).unwrap();
    assert!(normal_form(&z2_5, &sb).unwrap().is_zero());
    assert_eq!(normal_form(&z2_4, &sb).unwrap(), z2_4);
    for g in i.generators() {
        assert!(normal_form(g, &sb).unwrap().is_zero());
    }
    assert!(verify_buchberger(&sb).unwrap());
}

#[test]
fn local_unit_collapses_basis() {
    let r = ring2();
    let i = Ideal::parse(&r, &["1 + z1"]).unwrap();
    let sb = standard_basis(&i, &MonomialOrder::Local, &cfg()).unwrap();
    assert!(sb.is_unit());
    assert_eq!(sb.basis(), &[Polynomial::one(&r)]);
    assert_eq!(dimension_at_origin(&i, &cfg()).unwrap(), LocalDimension::Empty);
    // globally (1 + z1) is a proper ideal
    let g = standard_basis(&i, &MonomialOrder::Global, &cfg()).unwrap();
    assert!(!g.is_unit());
}

#[test]
fn elimination_examples() {
    let r = ring2();
    let i = Ideal::parse(&r, &["z1 - z2^2"]).unwrap();
    assert!(eliminate(&i, &[0], &cfg()).unwrap().is_none());
    let i = Ideal::parse(&r, &["z1 - z2^2", "z1"]).unwrap();
    let e = eliminate(&i, &[0], &cfg()).unwrap().unwrap();
    assert!(ideals_equal(&e, &Ideal::parse(&r, &["z2^2"]).unwrap(), &cfg()).unwrap());
    let ru = Ring::new(&["u", "z1", "z2"], &[]).unwrap();
    let i = Ideal::parse(&ru, &["u*z1 - 1", "z1*z2"]).unwrap();
    let e = eliminate(&i, &[0], &cfg()).unwrap().unwrap();
    assert!(ideals_equal(&e, &Ideal::parse(&ru, &["z2"]).unwrap(), &cfg()).unwrap());
    assert!(eliminate(&i, &[0, 1, 2], &cfg()).is_err());
}

#[test]
fn quotient_examples() {
    let r = ring3t();
    let i = Ideal::parse(&r, &["z1*z2"]).unwrap();
    let q = ideal_quotient(&i, &Ideal::parse(&r, &["z1"]).unwrap(), &cfg()).unwrap();
    assert!(ideals_equal(&q, &Ideal::parse(&r, &["z2"]).unwrap(), &cfg()).unwrap());

    // With A = 3 + 4t z2: I : (z2) = (z2 A, z3^2) and I : (z3) = (z2^2 A, z3), whose
    // intersection is (z2^2 A, z2 z3 A, z3^2). Neither z2 A nor z3 survives a
    // single quotient; they only appear after saturating.
    let i = Ideal::parse(&r, &["z2^2*(3 + 4*t*z2)", "z3^2"]).unwrap();
    let k = Ideal::parse(&r, &["z2", "z3"]).unwrap();
    let q = ideal_quotient(&i, &k, &cfg()).unwrap();
    let want = Ideal::parse(&r, &["z2^2*(3 + 4*t*z2)", "z2*z3*(3 + 4*t*z2)", "z3^2"]).unwrap();
    assert!(ideals_equal(&q, &want, &cfg()).unwrap());
    let sb = standard_basis(&q, &MonomialOrder::Global, &cfg()).unwrap();
    assert!(!contains(&sb, &parse_polynomial("z2*(3 + 4*t*z2)", &r).unwrap()).unwrap());
    let s = saturate(&i, &k, &cfg()).unwrap();
    assert!(ideals_equal(&s, &Ideal::parse(&r, &["3 + 4*t*z2", "z3^2"]).unwrap(), &cfg()).unwrap());
    assert!(contains_local_unit(&s, &cfg()).unwrap());

    let q = ideal_quotient(&i, &Ideal::unit(&r), &cfg()).unwrap();
    assert!(ideals_equal(&q, &i, &cfg()).unwrap());
}

#[test]
fn saturation_of_worked_family_partials() {
    let r = ring3t();
    let i = Ideal::parse(&r, &["z2*(2*z1^2 + 5*z2^3 + 2*t*z1 + 2*t^2*z1^2)", "4*z3^3"]).unwrap();
    let k = Ideal::parse(&r, &["z2", "z3"]).unwrap();
    let s = saturate(&i, &k, &cfg()).unwrap();
    let want = Ideal::parse(&r, &["2*z1^2 + 5*z2^3 + 2*t*z1 + 2*t^2*z1^2", "z3^3"]).unwrap();
    assert!(ideals_equal(&s, &want, &cfg()).unwrap());
    let again = saturate(&s, &k, &cfg()).unwrap();
    assert!(ideals_equal(&again, &s, &cfg()).unwrap());
    assert!(is_subideal(&i, &s, &cfg()).unwrap());
}

#[test]
fn saturation_removes_component_inside() {
    let r = ring2();
    let s = saturate(&Ideal::parse(&r, &["z1^2"]).unwrap(), &Ideal::parse(&r, &["z1"]).unwrap(), &cfg()).unwrap();
    assert!(s.has_constant_generator());
}

#[test]
fn colength_examples() {
    let r = ring3();
    let c = |gens: &[&str]| colength_at_origin(&Ideal::parse(&r, gens).unwrap(), &cfg()).unwrap();
    assert_eq!(c(&["z1", "z2^3", "z3^3"]).value(), Some(9));
    assert_eq!(c(&["2*z1^2 + 5*z2^3", "2*z1*z2^2", "z3^3"]).value(), Some(21));
    assert_eq!(c(&["3*z2^2", "3*z3^2", "z1"]).value(), Some(4));
    assert_eq!(c(&["z1*z2", "z3"]), ColengthResult::Infinite);
    let oracle = truncation_colength(&Ideal::parse(&r, &["2*z1^2 + 5*z2^3", "2*z1*z2^2", "z3^3"]).unwrap(), &cfg()).unwrap();
    assert_eq!(oracle.value(), Some(21));
}

#[test]
fn colength_ignores_points_away_from_origin() {
    let r = ring2();
    // (z1 - 1) * z1 vanishes at the origin once, and again at z1 = 1
    let i = Ideal::parse(&r, &["(z1 - 1)*z1", "z2"]).unwrap();
    assert_eq!(colength_at_origin(&i, &cfg()).unwrap().value(), Some(1));
    assert_eq!(vector_space_dimension(&i, &cfg()).unwrap().value(), Some(2));
}

#[test]
fn dimension_examples() {
    let r = ring3t();
    let d = |gens: &[&str]| dimension_at_origin(&Ideal::parse(&r, gens).unwrap(), &cfg()).unwrap();
    assert_eq!(d(&["2*z1^2 + 5*z2^3 + 2*t*z1 + 2*t^2*z1^2", "z3^3"]), LocalDimension::Dim(1));
    assert_eq!(d(&["1 + z1"]), LocalDimension::Empty);
    assert_eq!(d(&["z3"]), LocalDimension::Dim(2));
}

#[test]
fn local_unit_examples() {
    let r = ring3t();
    let u = |gens: &[&str]| contains_local_unit(&Ideal::parse(&r, gens).unwrap(), &cfg()).unwrap();
    assert!(u(&["3 + 4*t*z2", "z3^2"]));
    assert!(!u(&["z1", "z2"]));
    assert!(u(&["z1 + 1", "z1"]));
}

#[test]
fn budget_is_enforced() {
    let r = ring3();
    let i = Ideal::parse(&r, &["z1^5 + z2^4*z3 + z1*z2*z3^2", "z2^5 - z1^3*z3", "z3^4 + z1^2*z2^2"]).unwrap();
    let tight = Config { budget: 5, ..Config::default() };
    assert_eq!(colength_at_origin(&i, &tight), Err(Error::BudgetExceeded { budget: 5 }));
    assert_eq!(standard_basis(&i, &MonomialOrder::Global, &tight).unwrap_err().code(), "BUDGET_EXCEEDED");
}

#[test]
fn staircase_of_monomial_ideal() {
    let lead = [mono(&[2]), mono(&[1, 2]), mono(&[0, 5])];
    let s = staircase(&lead, 2).unwrap();
    assert_eq!(s.len(), 7);
    assert!(staircase(&[mono(&[2])], 2).is_none());
    assert_eq!(monomial_dimension(&[mono(&[0, 0, 1])], 3), 2);
}

#[test]
fn parametric_local_basis() {
    let r = ring3t();
    // generic-t Jacobian data of the worked family
    let i = Ideal::parse(&r, &["2*z1^2 + 5*z2^3 + 2*t*z1 + 2*t^2*z1^2", "z3^3", "z2^2*((2 + 2*t^2)*z1 + t)"]).unwrap();
    assert_eq!(colength_at_origin(&i, &cfg()).unwrap().value(), Some(6));
    let j = Ideal::parse(&r, &["2*z1^2 + 5*z2^3 + 2*t*z1 + 2*t^2*z1^2", "z3^3", "z1"]).unwrap();
    assert_eq!(colength_at_origin(&j, &cfg()).unwrap().value(), Some(9));
}

#[test]
fn monomials_of_degree_count() {
    assert_eq!(monomials_of_degree(3, 4).len(), 15);
    assert_eq!(monomials_of_degree(1, 4), vec![mono(&[4])]);
}
