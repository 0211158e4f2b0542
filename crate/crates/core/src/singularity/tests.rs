use super::*;
use crate::ideal::ideals_equal;
use crate::poly::parse_polynomial;

const WORKED: &str = "z1^2*z2^2 + z2^5 + z3^4 + t*z1*z2^2 + t^2*z1^2*z2^2";
const SUSPENSION: &str = "z2^3 + z3^3 + t*z2^4";

fn ring3() -> Arc<Ring> {
    Ring::new(&["z1", "z2", "z3"], &[]).unwrap()
}

fn ring3t() -> Arc<Ring> {
    Ring::new(&["z1", "z2", "z3"], &["t"]).unwrap()
}

fn p(s: &str) -> Polynomial {
    parse_polynomial(s, &ring3()).unwrap()
}

fn pt(s: &str) -> Polynomial {
    parse_polynomial(s, &ring3t()).unwrap()
}

fn cfg() -> Config {
    Config::default()
}

#[test]
fn order_and_multiplicity() {
    assert_eq!(order_at_origin(&p("z1^2*z2^2 + z2^5 + z3^4")).unwrap(), 4);
    assert_eq!(order_at_origin(&pt(WORKED)).unwrap(), 3);
    assert_eq!(order_at_origin(&p("z1")).unwrap(), 1);
    assert_eq!(order_at_origin(&p("0")), Err(Error::ZeroInput("germ of the zero polynomial")));
    assert_eq!(order_at_origin(&p("1 + z1")), Err(Error::NotThroughOrigin));
    assert_eq!(multiplicity_at_origin(&p("z1^2*z2^2 + z2^5 + z3^4")).unwrap(), 4);
    assert_eq!(multiplicity_at_origin(&p("z1^2*z2")).unwrap_err().code(), "NON_REDUCED");
    let r2 = Ring::new(&["z2", "z3"], &[]).unwrap();
    assert_eq!(multiplicity_at_origin(&parse_polynomial("z2^5 + z3^4", &r2).unwrap()).unwrap(), 4);
}

#[test]
fn milnor_numbers() {
    assert_eq!(milnor_number(&p("z2^5 + z3^4"), &[1, 2], &cfg()).unwrap(), 12);
    assert_eq!(milnor_number(&p("z2^2 + z3^2"), &[1, 2], &cfg()).unwrap(), 1);
    assert_eq!(milnor_number(&p("z1^2*z2^2"), &[0, 1], &cfg()), Err(Error::NonIsolated));
    assert!(milnor_number(&p("z1 + z2^2"), &[1, 2], &cfg()).is_err());
}

#[test]
fn line_singularity_checks() {
    let c = is_line_singularity(&p("z1^2*z2^2 + z2^5 + z3^4"), &cfg()).unwrap();
    assert!(c.vanishes_on_axis && c.slice_isolated && !c.extra_critical_component_at_origin);
    assert_eq!(c.slice_milnor, Some(12));
    assert!(c.is_line_singularity());

    let c = is_line_singularity(&p("z1^2 + z2^2 + z3^2"), &cfg()).unwrap();
    assert!(!c.vanishes_on_axis);
    assert_eq!(c.failure(), Some("vanishes_on_axis"));

    let c = is_line_singularity(&p("z2^2*z3^2"), &cfg()).unwrap();
    assert!(!c.slice_isolated);
    assert!(!c.is_line_singularity());

    assert!(is_line_singularity(&pt(WORKED), &cfg()).unwrap().is_line_singularity());
    assert!(is_line_singularity(&pt(SUSPENSION), &cfg()).unwrap().is_line_singularity());
}

#[test]
fn polar_curve_of_worked_family() {
    let f = pt(WORKED);
    let g = polar_variety_1(&f, &cfg()).unwrap();
    assert!(!g.locally_empty);
    let want = Ideal::parse(&ring3t(), &["2*z1^2 + 5*z2^3 + 2*t*z1 + 2*t^2*z1^2", "z3^3"]).unwrap();
    assert!(ideals_equal(&g.ideal, &want, &cfg()).unwrap());
    assert_eq!(gamma1(&f, &g, &cfg()).unwrap(), 9);
    assert_eq!(lambda0(&f, &g, &cfg()).unwrap(), 6);
    assert_eq!(polar_intersection_number(&f, &g, &cfg()).unwrap(), 15);
}

#[test]
fn polar_curve_empty_for_suspension() {
    let g = polar_variety_1(&pt(SUSPENSION), &cfg()).unwrap();
    assert!(g.locally_empty);
    assert_eq!(gamma1(&pt(SUSPENSION), &g, &cfg()).unwrap(), 0);
    assert!(polar_variety_1(&p("z2^3 + z3^3"), &cfg()).unwrap().locally_empty);
}

#[test]
fn worked_family_records() {
    let r = invariants(&p("z1^2*z2^2 + z2^5 + z3^4"), &cfg()).unwrap();
    assert_eq!((r.order, r.multiplicity), (4, 4));
    assert_eq!((r.lambda0, r.lambda1, r.gamma1, r.mu_slice), (21, 3, 9, 12));
    assert_eq!(r.intersection_number, 30);
    assert_eq!(r.polar_ratio, Some(Rational::new(10, 3)));
    assert_eq!(r.euler_reduced, 18);
    assert_eq!(r.weights.as_ref().unwrap().weights(), &[6, 4, 5]);

    let r = invariants(&pt(WORKED), &cfg()).unwrap();
    assert_eq!(r.order, 3);
    assert_eq!((r.lambda0, r.lambda1, r.gamma1, r.mu_slice), (6, 3, 9, 12));
    assert_eq!(r.polar_ratio, Some(Rational::new(5, 3)));
    assert_eq!(r.euler_reduced, 3);
    assert!(r.weights.is_none());
    assert_eq!(r.lambda1_witnesses.len(), 2);
}

#[test]
fn suspension_record() {
    let r = invariants(&pt(SUSPENSION), &cfg()).unwrap();
    assert_eq!((r.order, r.lambda0, r.lambda1, r.gamma1), (3, 0, 4, 0));
    assert_eq!(r.polar_ratio, None);
    assert_eq!(r.euler_reduced, -4);
}

#[test]
fn invariants_refuse_bad_input() {
    assert_eq!(invariants(&p("z1^2*z2"), &cfg()).unwrap_err().code(), "NON_REDUCED");
    assert_eq!(invariants(&p("z1^2 + z2^2 + z3^2"), &cfg()).unwrap_err().code(), "NOT_LINE_SINGULARITY");
    let iso = isolated_record(&p("z1^2 + z2^2 + z3^2"), &cfg()).unwrap().unwrap();
    assert_eq!((iso.order, iso.milnor), (2, 1));
    assert!(isolated_record(&p("z2^5 + z3^4"), &cfg()).unwrap().is_none());
}

#[test]
fn higher_le_numbers_vanish() {
    assert!(lambda_k_vanishing(&pt(WORKED), 2, &cfg()).unwrap());
    assert!(lambda_k_vanishing(&pt(SUSPENSION), 2, &cfg()).unwrap());
    let r4 = Ring::new(&["z1", "z2", "z3", "z4"], &[]).unwrap();
    let f = parse_polynomial("z1*z2^2 + z2^3 + z3^3 + z4^2", &r4).unwrap();
    assert!(is_line_singularity(&f, &cfg()).unwrap().is_line_singularity());
    assert!(lambda_k_vanishing(&f, 2, &cfg()).unwrap());
    assert!(lambda_k_vanishing(&f, 3, &cfg()).unwrap());
    assert!(lambda_k_vanishing(&f, 1, &cfg()).is_err());
}

#[test]
fn euler_and_ratio() {
    assert_eq!(euler_reduced(21, 3, 3), 18);
    assert_eq!(euler_reduced(0, 0, 5), 0);
    assert_eq!(euler_reduced(6, 3, 3), 3);
    assert_eq!(polar_ratio(0, 4), None);
    assert_eq!(polar_ratio(9, 6), Some(Rational::new(5, 3)));
}

#[test]
fn monomial_curve_identity() {
    let f0 = p("z1^2*z2^2 + z2^5 + z3^4");
    let w = detect_weights(&f0).unwrap().unwrap();
    let rho = Rational::new(10, 3);
    let l = check_polar_ratio_lemma(&f0, &w, Some(&rho)).unwrap();
    assert!(l.substitution_identity);
    assert_eq!(l.ratio_confirmed(), Some(true));
    assert!(l.holds());

    let h = p("z1*z2^2 + z2^3 + z3^3");
    let wh = detect_weights(&h).unwrap().unwrap();
    assert_eq!(wh.weights(), &[1, 1, 1]);
    let r = invariants(&h, &cfg()).unwrap();
    let l = check_polar_ratio_lemma(&h, &wh, r.polar_ratio.as_ref()).unwrap();
    assert_eq!(l.expected_ratio, Rational::from_integer(3));
    assert_eq!(l.ratio_confirmed(), Some(true));

    let s = p("z2^3 + z3^3");
    let ws = detect_weights(&s).unwrap().unwrap();
    let l = check_polar_ratio_lemma(&s, &ws, None).unwrap();
    assert!(l.substitution_identity && l.ratio_confirmed().is_none());
    assert!(check_polar_ratio_lemma(&p("z2^3 + z3^2"), &ws, None).is_err());
}

#[test]
fn isolated_lambda0_is_milnor_number() {
    for s in ["z1^2 + z2^2 + z3^2", "z1^3 + z2^4 + z3^2", "z1^2 + z2^3 + z3^5 + z2*z3^3"] {
        let f = p(s);
        assert_eq!(lambda0_isolated(&f, &cfg()).unwrap(), milnor_number(&f, &[0, 1, 2], &cfg()).unwrap(), "{s}");
    }
}
