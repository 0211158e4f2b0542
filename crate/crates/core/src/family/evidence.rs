use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::ideal::Ideal;
use crate::poly::{sparse_content, sparse_gcd, sparse_gcd_all, Field, Monomial, Polynomial, RatFunc, Rational, SparsePoly};

/// Stamp carried by every evidence report.
pub const NOT_A_CERTIFICATE: &str = "NOT_A_CERTIFICATE";

/// Largest numerator or denominator tried as a rational root candidate.
const ROOT_CANDIDATE_BOUND: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvidenceKind {
    Supporting,
    Counter,
}

impl EvidenceKind {
    pub fn label(self) -> &'static str {
        match self {
            EvidenceKind::Supporting => "SUPPORTING",
            EvidenceKind::Counter => "COUNTER",
        }
    }
}

impl fmt::Display for EvidenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Factors found for one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorEvidence {
    pub generator: String,
    /// Distinct factors vanishing at the origin, with multiplicity.
    pub factors: Vec<(String, u32)>,
    /// Factors that are units in the local ring.
    pub units: Vec<String>,
}

/// Heuristic irreducibility report for a polar curve ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityEvidence {
    pub kind: EvidenceKind,
    pub generators: Vec<GeneratorEvidence>,
    pub stamp: &'static str,
}

type Sp = SparsePoly<RatFunc>;

fn is_unit_at_origin(p: &Sp) -> bool {
    !p.constant_term().is_zero()
}

/// Squarefree decomposition `p = prod q_k^k` (up to a constant).
fn squarefree_parts(p: &Sp) -> Vec<(Sp, u32)> {
    let n = p.support_len();
    let grads: Vec<Sp> = (0..n).map(|i| p.derivative(i)).collect();
    let mut a = sparse_gcd_all(std::iter::once(p).chain(grads.iter()));
    let mut b = p.div_exact(&a).expect("gcd divides");
    let mut out = Vec::new();
    let mut k = 1;
    while !b.is_constant() {
        let c = sparse_gcd(&a, &b);
        let q = b.div_exact(&c).expect("gcd divides");
        if !q.is_constant() {
            out.push((q, k));
        }
        a = a.div_exact(&c).expect("gcd divides");
        b = c;
        k += 1;
    }
    out
}

/// Splits off variables dividing `p`.
fn split_monomial_content(p: &Sp) -> (Vec<Sp>, Sp) {
    let mut content: Option<Monomial> = None;
    for m in p.terms().keys() {
        content = Some(match content {
            None => m.clone(),
            Some(c) => c.gcd(m),
        });
    }
    let content = content.unwrap_or_else(Monomial::one);
    let mut vars = Vec::new();
    for (i, &e) in content.exponents().iter().enumerate() {
        for _ in 0..e {
            vars.push(SparsePoly::var(i));
        }
    }
    let rest = SparsePoly::from_terms(
        p.terms().iter().map(|(m, c)| (content.quotient_of(m).expect("content divides"), c.clone())),
    );
    (vars, rest)
}

/// Splits `p` by its content with respect to each variable in turn.
fn split_contents(p: Sp, out: &mut Vec<Sp>) {
    if p.is_constant() {
        return;
    }
    for v in 0..p.support_len() {
        if !p.involves(v) {
            continue;
        }
        let c = sparse_content(&p, v);
        if !c.is_constant() {
            let rest = p.div_exact(&c).expect("content divides");
            split_contents(c, out);
            split_contents(rest, out);
            return;
        }
    }
    out.push(p);
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > ROOT_CANDIDATE_BOUND {
        return None;
    }
    Some((1..=n).filter(|d| n % d == 0).collect())
}

/// Clears denominators of rational coefficients, returning integers.
fn integer_coefficients(cs: &[Rational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in cs {
        l = l.lcm(c.denom());
    }
    cs.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

/// Finds a factor `x_v - r` with `r` rational, when the extreme
/// coefficients in `x_v` are rational constants.
fn rational_linear_factor(p: &Sp) -> Option<(Sp, Sp)> {
    for v in 0..p.support_len() {
        let parts = p.split_var(v);
        if parts.len() < 2 {
            continue;
        }
        let lead = parts.last().expect("nonempty").clone();
        let low = parts.iter().position(|q| !q.is_zero())?;
        if low > 0 {
            continue;
        }
        let (Some(lc), Some(c0)) = (
            lead.is_constant().then(|| lead.constant_term().as_rational()).flatten(),
            parts[0].is_constant().then(|| parts[0].constant_term().as_rational()).flatten(),
        ) else {
            continue;
        };
        let ints = integer_coefficients(&[lc, c0]);
        let (Some(den), Some(num)) = (small_divisors(&ints[0]), small_divisors(&ints[1])) else { continue };
        for &a in &num {
            for &b in &den {
                for sign in [1i64, -1] {
                    let r = Rational::new(sign * a as i64, b as i64);
                    let rf = RatFunc::from_rational(r.clone());
                    if p.eval_var(v, &rf).is_zero() {
                        let lin = SparsePoly::var(v).sub(&SparsePoly::constant(rf));
                        let rest = p.div_exact(&lin).expect("root gives a factor");
                        return Some((lin, rest));
                    }
                }
            }
        }
    }
    None
}

fn split_roots(p: Sp, out: &mut Vec<Sp>) {
    if p.is_constant() {
        return;
    }
    match rational_linear_factor(&p) {
        Some((lin, rest)) if !rest.is_constant() => {
            out.push(lin);
            split_roots(rest, out);
        }
        _ => out.push(p),
    }
}

fn factor_generator(g: &Polynomial) -> GeneratorEvidence {
    let ring = g.ring();
    let mut found: Vec<(Sp, u32)> = Vec::new();
    for (q, k) in squarefree_parts(g.sparse()) {
        let (vars, rest) = split_monomial_content(&q);
        let mut pieces = vars;
        let mut contents = Vec::new();
        split_contents(rest, &mut contents);
        for c in contents {
            split_roots(c, &mut pieces);
        }
        for piece in pieces {
            let piece = piece.monic();
            match found.iter_mut().find(|(f, _)| *f == piece) {
                Some(entry) => entry.1 += k,
                None => found.push((piece, k)),
            }
        }
    }
    let show = |p: &Sp| Polynomial::from_sparse(ring, p.clone()).to_string();
    let mut factors = Vec::new();
    let mut units = Vec::new();
    for (f, k) in &found {
        if is_unit_at_origin(f) {
            units.push(show(f));
        } else {
            factors.push((show(f), *k));
        }
    }
    GeneratorEvidence { generator: g.to_string(), factors, units }
}

/// Factors each generator by squarefree, content and rational-root
/// heuristics. A single non-unit factor per generator counts as supporting
/// evidence; anything else lists the factors as counter evidence.
pub fn irreducibility_evidence(i: &Ideal) -> IrreducibilityEvidence {
    let generators: Vec<GeneratorEvidence> = i.generators().iter().map(factor_generator).collect();
    let kind = if generators.iter().all(|g| g.factors.len() <= 1) {
        EvidenceKind::Supporting
    } else {
        EvidenceKind::Counter
    };
    IrreducibilityEvidence { kind, generators, stamp: NOT_A_CERTIFICATE }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::parse(&Ring::new(&["z1", "z2", "z3"], &["t"]).unwrap(), gens).unwrap()
    }

    #[test]
    fn worked_polar_curve_is_supported() {
        let e = irreducibility_evidence(&ideal(&["2*z1^2 + 5*z2^3 + 2*t*z1 + 2*t^2*z1^2", "z3^3"]));
        assert_eq!(e.kind, EvidenceKind::Supporting);
        assert_eq!(e.stamp, NOT_A_CERTIFICATE);
        assert_eq!(e.generators[1].factors, vec![("z3".to_string(), 3)]);
    }

    #[test]
    fn product_is_counter_evidence() {
        let e = irreducibility_evidence(&ideal(&["z2*z3", "z1"]));
        assert_eq!(e.kind, EvidenceKind::Counter);
        assert_eq!(e.generators[0].factors.len(), 2);
        assert_eq!(irreducibility_evidence(&ideal(&["z3"])).kind, EvidenceKind::Supporting);
    }

    #[test]
    fn heuristics_find_hidden_factors() {
        // (z1 - 2)(z1 + 3) z2 after expansion, and a repeated factor
        let e = irreducibility_evidence(&ideal(&["z1^2*z2 + z1*z2 - 6*z2"]));
        assert_eq!(e.generators[0].factors.len(), 1);
        assert_eq!(e.generators[0].units.len(), 2);
        let e = irreducibility_evidence(&ideal(&["(z1 + z2^2)^2*(z2 - z3)"]));
        assert_eq!(e.kind, EvidenceKind::Counter);
        assert!(e.generators[0].factors.iter().any(|(_, k)| *k == 2));
        // content in z1 over Q(t)
        let e = irreducibility_evidence(&ideal(&["(z2 + t*z3)*z1 + (z2 + t*z3)*z3^2"]));
        assert_eq!(e.kind, EvidenceKind::Counter);
    }
}
