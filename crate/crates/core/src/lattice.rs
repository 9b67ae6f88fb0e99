//! Integer lattice algebra: row Hermite normal form, Smith invariant factors,
//! exact rank, and rank modulo a prime for large sparse systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix stored by rows.
pub type IntMatrix = Vec<Vec<BigInt>>;

fn first_nonzero(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

fn content(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Row-style Hermite normal form of the lattice spanned by the rows:
/// nonzero rows only, strictly increasing pivot columns, positive pivots,
/// and entries above each pivot reduced into `[0, pivot)`.
pub fn hnf(rows: &[Vec<BigInt>]) -> IntMatrix {
    let cols = rows.first().map_or(0, Vec::len);
    // basis[c] holds the row whose pivot is column c
    let mut basis: Vec<Option<Vec<BigInt>>> = vec![None; cols];
    for row in rows {
        let mut v = row.clone();
        while let Some(c) = first_nonzero(&v) {
            match basis[c].take() {
                None => {
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    basis[c] = Some(v);
                    break;
                }
                Some(b) => {
                    // unimodular combination putting gcd(b_c, v_c) in the pivot
                    let e = b[c].extended_gcd(&v[c]);
                    let (g, s, t) = (e.gcd, e.x, e.y);
                    let bq = &b[c] / &g;
                    let vq = &v[c] / &g;
                    let new_b: Vec<BigInt> = b.iter().zip(&v).map(|(x, y)| &s * x + &t * y).collect();
                    let new_v: Vec<BigInt> = b.iter().zip(&v).map(|(x, y)| &vq * x - &bq * y).collect();
                    let mut nb = new_b;
                    if nb[c].is_negative() {
                        nb.iter_mut().for_each(|x| *x = -&*x);
                    }
                    basis[c] = Some(nb);
                    v = new_v;
                }
            }
        }
    }
    let mut out: IntMatrix = basis.into_iter().flatten().collect();
    // reduce entries above pivots, bottom-up
    for k in (0..out.len()).rev() {
        let c = first_nonzero(&out[k]).expect("nonzero basis row");
        let p = out[k][c].clone();
        for above in 0..k {
            let q = out[above][c].div_floor(&p);
            if !q.is_zero() {
                let sub: Vec<BigInt> = out[k].iter().map(|x| x * &q).collect();
                for (x, y) in out[above].iter_mut().zip(sub) {
                    *x -= y;
                }
            }
        }
    }
    out
}

/// Row echelon basis over the rationals, kept primitive over the integers,
/// that accepts rows one at a time.
#[derive(Clone, Debug)]
pub struct IncrementalRank {
    basis: Vec<Option<Vec<BigInt>>>,
    rank: usize,
}

impl IncrementalRank {
    pub fn new(cols: usize) -> Self {
        IncrementalRank { basis: vec![None; cols], rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.basis.len()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: &[BigInt]) -> bool {
        let mut v = row.to_vec();
        while let Some(c) = first_nonzero(&v) {
            match &self.basis[c] {
                None => {
                    let g = content(&v);
                    v.iter_mut().for_each(|x| *x /= &g);
                    self.basis[c] = Some(v);
                    self.rank += 1;
                    return true;
                }
                Some(b) => {
                    let (bc, vc) = (b[c].clone(), v[c].clone());
                    v = b.iter().zip(&v).map(|(x, y)| &bc * y - &vc * x).collect();
                    let g = content(&v);
                    if !g.is_zero() && !g.is_one() {
                        v.iter_mut().for_each(|x| *x /= &g);
                    }
                }
            }
        }
        false
    }
}

/// Rank over the rationals by fraction-free elimination with content removal.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut acc = IncrementalRank::new(cols);
    for row in rows {
        if acc.is_full() {
            break;
        }
        acc.insert(row);
    }
    acc.rank()
}

/// Nonzero invariant factors of the row lattice (Smith normal form diagonal).
pub fn smith_diagonal(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut m = hnf(rows);
    let nr = m.len();
    if nr == 0 {
        return Vec::new();
    }
    let nc = m[0].len();
    let mut diag = Vec::new();
    for t in 0..nr {
        // find a nonzero entry of minimal absolute value in the trailing block
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..nr {
                for j in t..nc {
                    if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { return diag };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let p = m[t][t].clone();
            let mut clean = true;
            for i in t + 1..nr {
                let q = m[i][t].div_floor(&p);
                if !q.is_zero() {
                    let sub: Vec<BigInt> = m[t].iter().map(|x| x * &q).collect();
                    for (x, y) in m[i].iter_mut().zip(sub) {
                        *x -= y;
                    }
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..nc {
                let q = m[t][j].div_floor(&p);
                if !q.is_zero() {
                    for row in m.iter_mut() {
                        let s = &row[t] * &q;
                        row[j] -= s;
                    }
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // enforce divisibility into the trailing block
                let bad = (t + 1..nr).flat_map(|i| (t + 1..nc).map(move |j| (i, j))).find(|&(i, j)| !(&m[i][j] % &p).is_zero());
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let add = m[i].clone();
                        for (x, y) in m[t].iter_mut().zip(add) {
                            *x += y;
                        }
                    }
                }
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

/// Whether the row lattice is saturated in its rational span (all invariant factors 1).
pub fn is_saturated(rows: &[Vec<BigInt>]) -> bool {
    smith_diagonal(rows).iter().all(|d| d.is_one())
}

/// A large prime below 2^62 used for modular rank.
pub const PRIME: u64 = 4_611_686_018_427_387_847;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Reduces a signed integer into `[0, p)`.
pub fn to_mod(x: i64, p: u64) -> u64 {
    let m = x.rem_euclid(p as i64) as u64;
    m % p
}

/// Rank of a sparse matrix over `F_p`; rows are `(column, value)` lists with
/// values already reduced.
pub fn rank_mod_p(rows: &[Vec<(usize, u64)>], cols: usize, p: u64) -> usize {
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; cols];
    let mut r = 0;
    for row in rows {
        let mut v = vec![0u64; cols];
        for &(c, x) in row {
            v[c] = (v[c] + x) % p;
        }
        for c in 0..cols {
            if v[c] == 0 {
                continue;
            }
            match &pivots[c] {
                Some(b) => {
                    let f = v[c];
                    for k in c..cols {
                        if b[k] != 0 {
                            v[k] = (v[k] + p - mulmod(f, b[k], p)) % p;
                        }
                    }
                }
                None => {
                    let inv = powmod(v[c], p - 2, p);
                    for x in v.iter_mut().skip(c) {
                        *x = mulmod(*x, inv, p);
                    }
                    pivots[c] = Some(v);
                    r += 1;
                    break;
                }
            }
        }
        if r == cols {
            break;
        }
    }
    r
}
