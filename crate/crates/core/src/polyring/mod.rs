//! Exact integer polynomials in `x_1..x_N, t_1..t_M`, and the quasisymmetric
//! and symmetric bases built on them.

mod qsym;
mod schur;

pub use qsym::*;
pub use schur::*;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// A polynomial with integer coefficients in `nx` x-variables followed by
/// `nt` t-variables; exponent vectors have length `nx + nt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    nx: usize,
    nt: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nx: usize,
    nt: usize,
    terms: Vec<TermJson>,
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|(e, c)| TermJson { exp: e.clone(), coef: c.to_string() }).collect();
        PolyJson { nx: self.nx, nt: self.nt, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PolyJson::deserialize(d)?;
        let mut p = IntPolynomial::zero(repr.nx, repr.nt);
        for t in repr.terms {
            if t.exp.len() != repr.nx + repr.nt {
                return Err(D::Error::custom("exponent vector has the wrong length"));
            }
            let c: BigInt = t.coef.parse().map_err(D::Error::custom)?;
            p.add_term(t.exp, c);
        }
        Ok(p)
    }
}

impl IntPolynomial {
    pub fn zero(nx: usize, nt: usize) -> Self {
        IntPolynomial { nx, nt, terms: BTreeMap::new() }
    }

    pub fn one(nx: usize, nt: usize) -> Self {
        Self::constant(nx, nt, BigInt::one())
    }

    pub fn constant(nx: usize, nt: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nx, nt);
        p.add_term(vec![0; nx + nt], c);
        p
    }

    /// `x_i`, 1-indexed.
    pub fn x(nx: usize, nt: usize, i: usize) -> Self {
        assert!((1..=nx).contains(&i), "x_{i} outside x_1..x_{nx}");
        Self::var(nx, nt, i - 1)
    }

    /// `t_i`, 1-indexed.
    pub fn t(nx: usize, nt: usize, i: usize) -> Self {
        assert!((1..=nt).contains(&i), "t_{i} outside t_1..t_{nt}");
        Self::var(nx, nt, nx + i - 1)
    }

    fn var(nx: usize, nt: usize, idx: usize) -> Self {
        let mut e = vec![0; nx + nt];
        e[idx] = 1;
        let mut p = Self::zero(nx, nt);
        p.add_term(e, BigInt::one());
        p
    }

    /// The monomial with the given exponent vector.
    pub fn monomial(nx: usize, nt: usize, exp: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero(nx, nt);
        p.add_term(exp, c);
        p
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    pub fn nvars(&self) -> usize {
        self.nx + self.nt
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · x^exp`, keeping the canonical form.
    pub fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        debug_assert_eq!(exp.len(), self.nvars());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Whether only `x_1..x_k` (and no t-variable) occur.
    pub fn uses_only_x(&self, k: usize) -> bool {
        self.terms.keys().all(|e| e.iter().enumerate().all(|(v, &p)| p == 0 || v < k.min(self.nx)))
    }

    fn check_same_vars(&self, other: &Self) {
        assert!(
            self.nx == other.nx && self.nt == other.nt,
            "variable sets differ: ({}, {}) vs ({}, {})",
            self.nx,
            self.nt,
            other.nx,
            other.nt
        );
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nx, self.nt);
        }
        IntPolynomial { nx: self.nx, nt: self.nt, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nx, self.nt);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Re-embeds into a larger (or equal) variable set, keeping indices.
    pub fn with_vars(&self, nx: usize, nt: usize) -> Result<Self> {
        let mut p = Self::zero(nx, nt);
        for (e, c) in &self.terms {
            let (ex, et) = e.split_at(self.nx);
            if ex.iter().skip(nx).any(|&v| v > 0) || et.iter().skip(nt).any(|&v| v > 0) {
                return Err(Error::InsufficientVariables { needed: self.nvars(), got: nx + nt });
            }
            let mut ne = vec![0; nx + nt];
            for (i, &v) in ex.iter().take(nx).enumerate() {
                ne[i] = v;
            }
            for (i, &v) in et.iter().take(nt).enumerate() {
                ne[nx + i] = v;
            }
            p.add_term(ne, c.clone());
        }
        Ok(p)
    }

    /// Substitutes a polynomial (over the same variable set) for the variable
    /// with flat index `var`.
    pub fn substitute(&self, var: usize, value: &IntPolynomial) -> Self {
        self.check_same_vars(value);
        let mut powers: Vec<IntPolynomial> = vec![Self::one(self.nx, self.nt)];
        let mut out = Self::zero(self.nx, self.nt);
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[var] = 0;
            let mono = Self::monomial(self.nx, self.nt, rest, c.clone());
            out = &out + &(&mono * &powers[k]);
        }
        out
    }

    /// Simultaneous substitution `x_i ↦ values[i-1]`, `t_i ↦ values[nx+i-1]`;
    /// the result lives in the variable set of the values.
    pub fn substitute_all(&self, values: &[IntPolynomial]) -> Self {
        assert_eq!(values.len(), self.nvars());
        let (nx, nt) = (values.first().map_or(0, |v| v.nx), values.first().map_or(0, |v| v.nt));
        let mut cache: BTreeMap<(usize, u32), IntPolynomial> = BTreeMap::new();
        let mut out = Self::zero(nx, nt);
        for (e, c) in &self.terms {
            let mut term = Self::constant(nx, nt, c.clone());
            for (v, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let pw = cache.entry((v, p)).or_insert_with(|| values[v].pow(p)).clone();
                term = &term * &pw;
            }
            out = &out + &term;
        }
        out
    }

    /// `t_i := t_j` (1-indexed t-variables). Linear on coefficients.
    pub fn set_t_equal(&self, i: usize, j: usize) -> Self {
        let (vi, vj) = (self.nx + i - 1, self.nx + j - 1);
        let mut out = Self::zero(self.nx, self.nt);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[vj] += ne[vi];
            ne[vi] = 0;
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Divisibility by `t_i - t_j`, tested by vanishing under `t_i := t_j`.
    pub fn divisible_by_t_diff(&self, i: usize, j: usize) -> bool {
        self.set_t_equal(i, j).is_zero()
    }

    /// `x_i ↦ t_{w(i)}` for `i ≤ nx`; the result has no x-variables.
    pub fn evaluate_at_perm(&self, w: &Permutation) -> Result<Self> {
        if self.nx > w.n() || self.nt < w.n() {
            return Err(Error::InsufficientVariables { needed: w.n(), got: self.nt });
        }
        let mut out = Self::zero(0, self.nt);
        for (e, c) in &self.terms {
            let mut ne: Vec<u32> = e[self.nx..].to_vec();
            for i in 0..self.nx {
                ne[w.apply(i + 1) - 1] += e[i];
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// `f(0)`: the constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.nvars()])
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        IntPolynomial {
            nx: self.nx,
            nt: self.nt,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Terms in graded lexicographic order, largest first, x before t.
    pub fn grlex_terms(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    fn var_name(&self, idx: usize) -> String {
        if idx < self.nx {
            format!("x{}", idx + 1)
        } else {
            format!("t{}", idx - self.nx + 1)
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.grlex_terms().into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(v, &p)| if p == 1 { self.var_name(v) } else { format!("{}^{p}", self.var_name(v)) })
                .collect();
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { nx: self.nx, nt: self.nt, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    // Exponent vectors add under multiplication.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.check_same_vars(rhs);
        let mut out = IntPolynomial::zero(self.nx, self.nt);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_rendering() {
        let x1 = IntPolynomial::x(2, 1, 1);
        let x2 = IntPolynomial::x(2, 1, 2);
        let t1 = IntPolynomial::t(2, 1, 1);
        let p = &(&x1 - &t1) * &(&x2 + &t1);
        assert_eq!(p.to_string(), "x1*x2 + x1*t1 - x2*t1 - t1^2");
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(2));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn perm_evaluation() {
        let x1 = IntPolynomial::x(1, 3, 1);
        let w = Permutation::identity(3);
        assert_eq!(x1.evaluate_at_perm(&w).unwrap(), IntPolynomial::t(0, 3, 1));
        let c = IntPolynomial::constant(1, 3, BigInt::from(7));
        assert_eq!(c.evaluate_at_perm(&w).unwrap().constant_term(), BigInt::from(7));
    }

    #[test]
    fn divisibility_by_label() {
        let (a, b) = (IntPolynomial::t(0, 3, 1), IntPolynomial::t(0, 3, 3));
        let d = &(&a - &b) * &IntPolynomial::t(0, 3, 2);
        assert!(d.divisible_by_t_diff(1, 3));
        assert!(!d.divisible_by_t_diff(1, 2));
    }

    #[test]
    fn json_round_trip() {
        let p = &IntPolynomial::x(2, 0, 1).pow(3) - &IntPolynomial::constant(2, 0, BigInt::from(5));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<IntPolynomial>(&s).unwrap(), p);
    }
}
