//! Fundamental and monomial quasisymmetric polynomials, the F/M transforms,
//! and the M-basis Hopf operations used by the tensor presentation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::combinatorics::Composition;
use crate::error::{Error, Result};

/// An element of QSym written in a basis indexed by compositions.
pub type CompExpansion = BTreeMap<Composition, BigInt>;

/// `F_α(x_1..x_r)` by direct enumeration of index chains
/// `i_1 ≤ ... ≤ i_m` with strict steps at `Des(α)`.
pub fn fundamental(alpha: &Composition, r: usize) -> IntPolynomial {
    let m = alpha.size();
    let mut p = IntPolynomial::zero(r, 0);
    if alpha.len() > r {
        return p;
    }
    let mut strict = vec![false; m + 1];
    for d in alpha.descents() {
        strict[d] = true;
    }
    let mut exp = vec![0u32; r];
    fn go(pos: usize, m: usize, lo: usize, r: usize, strict: &[bool], exp: &mut Vec<u32>, p: &mut IntPolynomial) {
        if pos > m {
            p.add_term(exp.clone(), BigInt::one());
            return;
        }
        let start = if pos > 1 && strict[pos - 1] { lo + 1 } else { lo };
        for i in start..=r {
            exp[i - 1] += 1;
            go(pos + 1, m, i, r, strict, exp, p);
            exp[i - 1] -= 1;
        }
    }
    if m == 0 {
        return IntPolynomial::one(r, 0);
    }
    go(1, m, 1, r, &strict, &mut exp, &mut p);
    p
}

/// `M_α(x_1..x_r) = Σ_{i_1 < ... < i_ℓ} x_{i_1}^{α_1} ... x_{i_ℓ}^{α_ℓ}`.
pub fn monomial_qsym(alpha: &Composition, r: usize) -> IntPolynomial {
    let l = alpha.len();
    let mut p = IntPolynomial::zero(r, 0);
    if l > r {
        return p;
    }
    for idx in increasing_tuples(l, r) {
        let mut e = vec![0u32; r];
        for (k, &i) in idx.iter().enumerate() {
            e[i - 1] = alpha.parts()[k] as u32;
        }
        p.add_term(e, BigInt::one());
    }
    p
}

fn increasing_tuples(l: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l);
    fn go(l: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().map_or(1, |&x| x + 1);
        for i in lo..=r {
            cur.push(i);
            go(l, r, cur, out);
            cur.pop();
        }
    }
    go(l, r, &mut cur, &mut out);
    out
}

/// `F_α = Σ_{β refines α} M_β`, the oracle route to [`fundamental`].
pub fn fundamental_via_monomials(alpha: &Composition, r: usize) -> IntPolynomial {
    let mut p = IntPolynomial::zero(r, 0);
    if alpha.is_empty() {
        return IntPolynomial::one(r, 0);
    }
    for beta in alpha.refinements() {
        p = &p + &monomial_qsym(&beta, r);
    }
    p
}

/// `F_α` in the M-basis.
pub fn f_to_m(alpha: &Composition) -> CompExpansion {
    if alpha.is_empty() {
        return BTreeMap::from([(Composition::empty(), BigInt::one())]);
    }
    alpha.refinements().into_iter().map(|b| (b, BigInt::one())).collect()
}

/// M-coefficients to F-coefficients by Möbius inversion over coarsenings.
pub fn m_to_f(m: &CompExpansion) -> CompExpansion {
    let mut candidates: Vec<Composition> = m.keys().flat_map(|b| b.refinements()).collect();
    candidates.sort();
    candidates.dedup();
    let mut out = CompExpansion::new();
    for gamma in candidates {
        let mut c = BigInt::zero();
        for beta in gamma.coarsenings() {
            let Some(v) = m.get(&beta) else { continue };
            if (gamma.len() - beta.len()) % 2 == 0 {
                c += v;
            } else {
                c -= v;
            }
        }
        if !c.is_zero() {
            out.insert(gamma, c);
        }
    }
    out
}

/// The packed composition of an exponent vector (zeros removed).
pub fn flatten(exp: &[u32]) -> Composition {
    Composition::new(exp.iter().filter(|&&e| e > 0).map(|&e| e as usize).collect()).expect("positive parts")
}

fn packed_exponent(alpha: &Composition, r: usize) -> Vec<u32> {
    let mut e = vec![0u32; r];
    for (i, &p) in alpha.parts().iter().enumerate() {
        e[i] = p as u32;
    }
    e
}

/// Quasisymmetry by the coefficient pattern: every monomial has the
/// coefficient of its left-packed version.
pub fn is_qsym_pattern(f: &IntPolynomial, r: usize) -> bool {
    if !f.uses_only_x(r) {
        return false;
    }
    let f = match f.with_vars(r, 0) {
        Ok(f) => f,
        Err(_) => return false,
    };
    // every packing class must be constant, including monomials absent from f
    let classes: std::collections::BTreeSet<Composition> = f.terms().keys().map(|e| flatten(e)).collect();
    for alpha in &classes {
        let target = f.coeff(&packed_exponent(alpha, r));
        for idx in increasing_tuples(alpha.len(), r) {
            let mut e = vec![0u32; r];
            for (k, &i) in idx.iter().enumerate() {
                e[i - 1] = alpha.parts()[k] as u32;
            }
            if f.coeff(&e) != target {
                return false;
            }
        }
    }
    true
}

/// `f(x_1, ..., x_{i-1}, 0, x_i, ..., x_{r-1})` as a polynomial in `r - 1` variables.
fn bergeron_sottile(f: &IntPolynomial, i: usize, r: usize) -> IntPolynomial {
    let mut out = IntPolynomial::zero(r - 1, 0);
    for (e, c) in f.terms() {
        if e[i - 1] != 0 {
            continue;
        }
        let ne: Vec<u32> = e.iter().enumerate().filter(|&(v, _)| v != i - 1).map(|(_, &p)| p).collect();
        out.add_term(ne, c.clone());
    }
    out
}

/// Quasisymmetry by the Bergeron-Sottile criterion: dropping a zero into
/// slot `i` or slot `i + 1` gives the same polynomial, for all `i < r`.
pub fn is_qsym(f: &IntPolynomial, r: usize) -> bool {
    if !f.uses_only_x(r) || f.nt() > 0 && f.terms().keys().any(|e| e[f.nx()..].iter().any(|&p| p > 0)) {
        return false;
    }
    let Ok(f) = f.with_vars(r, 0) else { return false };
    if r <= 1 {
        return true;
    }
    (1..r).all(|i| bergeron_sottile(&f, i, r) == bergeron_sottile(&f, i + 1, r))
}

/// The M-expansion of a quasisymmetric polynomial, read off packed monomials.
pub fn m_expansion(f: &IntPolynomial, r: usize) -> Result<CompExpansion> {
    if !is_qsym(f, r) {
        return Err(Error::NotQuasisymmetric(r));
    }
    let f = f.with_vars(r, 0)?;
    let mut out = CompExpansion::new();
    for (e, c) in f.terms() {
        let alpha = flatten(e);
        if packed_exponent(&alpha, r) == *e {
            out.insert(alpha, c.clone());
        }
    }
    Ok(out)
}

/// The F-expansion of a quasisymmetric polynomial in `x_1..x_r`.
pub fn f_expansion(f: &IntPolynomial, r: usize) -> Result<CompExpansion> {
    let m = m_expansion(f, r)?;
    Ok(m_to_f(&m).into_iter().filter(|(a, _)| a.len() <= r).collect())
}

/// Reassembles `Σ c_α F_α(x_1..x_r)`.
pub fn from_f_expansion(exp: &CompExpansion, r: usize) -> IntPolynomial {
    let mut p = IntPolynomial::zero(r, 0);
    for (alpha, c) in exp {
        p = &p + &fundamental(alpha, r).scale(c);
    }
    p
}

/// Quasi-shuffle (stuffle) product `M_α M_β`, dropping terms with more than
/// `max_len` parts (they vanish in `max_len` variables).
pub fn stuffle(alpha: &Composition, beta: &Composition, max_len: usize) -> CompExpansion {
    let mut out = CompExpansion::new();
    let mut cur = Vec::new();
    stuffle_rec(alpha.parts(), beta.parts(), max_len, &mut cur, &mut out);
    out
}

fn stuffle_rec(a: &[usize], b: &[usize], max_len: usize, cur: &mut Vec<usize>, out: &mut CompExpansion) {
    if cur.len() + a.len().max(b.len()) > max_len {
        return;
    }
    if a.is_empty() || b.is_empty() {
        let mut parts = cur.clone();
        parts.extend_from_slice(a);
        parts.extend_from_slice(b);
        *out.entry(Composition::new(parts).expect("positive")).or_default() += 1;
        return;
    }
    cur.push(a[0]);
    stuffle_rec(&a[1..], b, max_len, cur, out);
    cur.pop();
    cur.push(b[0]);
    stuffle_rec(a, &b[1..], max_len, cur, out);
    cur.pop();
    cur.push(a[0] + b[0]);
    stuffle_rec(&a[1..], &b[1..], max_len, cur, out);
    cur.pop();
}

/// Coproduct of `M_α`: all deconcatenations `α = β · γ`.
pub fn m_coproduct(alpha: &Composition) -> Vec<(Composition, Composition)> {
    let p = alpha.parts();
    (0..=p.len())
        .map(|k| (Composition::new(p[..k].to_vec()).unwrap(), Composition::new(p[k..].to_vec()).unwrap()))
        .collect()
}

/// The F-basis product `F_β F_γ` in `r` variables, computed through polynomials.
pub fn f_product(beta: &Composition, gamma: &Composition, r: usize) -> CompExpansion {
    let p = &fundamental(beta, r) * &fundamental(gamma, r);
    f_expansion(&p, r).expect("products of quasisymmetric polynomials are quasisymmetric")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_fundamentals() {
        assert_eq!(fundamental(&c(&[1]), 2).to_string(), "x1 + x2");
        assert_eq!(fundamental(&c(&[1, 1]), 2).to_string(), "x1*x2");
        assert_eq!(fundamental(&c(&[2, 1]), 2).to_string(), "x1^2*x2");
        assert_eq!(monomial_qsym(&c(&[2]), 2).to_string(), "x1^2 + x2^2");
        assert!(monomial_qsym(&c(&[1, 1, 1]), 2).is_zero());
        assert_eq!(fundamental(&c(&[2]), 3), &monomial_qsym(&c(&[2]), 3) + &monomial_qsym(&c(&[1, 1]), 3));
    }

    #[test]
    fn qsym_criteria() {
        let x1 = IntPolynomial::x(2, 0, 1);
        let x2 = IntPolynomial::x(2, 0, 2);
        assert!(!is_qsym(&x1, 2));
        assert!(!is_qsym_pattern(&x1, 2));
        let f = &x1 * &x2.pow(2);
        assert!(is_qsym(&f, 2) && is_qsym_pattern(&f, 2));
        assert!(is_qsym(&(&x1 + &x2), 2));
    }

    #[test]
    fn expansions() {
        let a = c(&[1, 2]);
        let e = f_expansion(&fundamental(&a, 3), 3).unwrap();
        assert_eq!(e, BTreeMap::from([(a, BigInt::one())]));
        assert!(f_expansion(&IntPolynomial::zero(3, 0), 3).unwrap().is_empty());
        assert!(f_expansion(&IntPolynomial::x(2, 0, 1), 2).is_err());
    }

    #[test]
    fn stuffle_matches_polynomials() {
        let (a, b) = (c(&[1]), c(&[2, 1]));
        let r = 3;
        let prod = &monomial_qsym(&a, r) * &monomial_qsym(&b, r);
        let mut via = IntPolynomial::zero(r, 0);
        for (g, k) in stuffle(&a, &b, r) {
            via = &via + &monomial_qsym(&g, r).scale(&k);
        }
        assert_eq!(prod, via);
    }
}
