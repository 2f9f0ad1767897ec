//! Exact dense linear algebra over the scalar domains used by the engine.
//!
//! Three routes are provided:
//!
//! * reduced row echelon form over any [`Field`], giving ranks and canonical
//!   kernel bases (kernel vectors are themselves RREF-normalized so the
//!   basis of a subspace is unique);
//! * fraction-free Bareiss elimination over Z[q, q^-1], giving ranks of
//!   generic-parameter matrices without ever forming fractions;
//! * an opt-in probabilistic route that evaluates q at a root of unity in a
//!   prime field GF(l), for callers that ask for speed over certainty.
//!
//! All pivot searches scan top-to-bottom and left-to-right, so every result
//! is deterministic.

use crate::laurent::{LaurentPoly, LaurentRing};
use crate::ring::{Field, Ring};

// --- matrices -------------------------------------------------------------

/// Dense row-major matrix.  The element type carries no arithmetic of its
/// own; operations take the ring context explicitly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn new(rows: usize, cols: usize, fill: E) -> Matrix<E> {
        Matrix { rows, cols, data: vec![fill; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Matrix<E> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn map<T, F: FnMut(&E) -> T>(&self, mut f: F) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R::Elem> {
    let mut m = Matrix::new(n, n, ring.zero());
    for i in 0..n {
        m.set(i, i, ring.one());
    }
    m
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch");
    let mut out = Matrix::new(a.rows, b.cols, ring.zero());
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if ring.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let v = ring.mul_add(out.get(i, j), aik, b.get(k, j));
                out.set(i, j, v);
            }
        }
    }
    out
}

pub fn mat_vec<R: Ring>(ring: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(a.cols, v.len(), "dimension mismatch");
    (0..a.rows)
        .map(|i| {
            let mut acc = ring.zero();
            for j in 0..a.cols {
                acc = ring.mul_add(&acc, a.get(i, j), &v[j]);
            }
            acc
        })
        .collect()
}

// --- reduced row echelon form --------------------------------------------

/// Bring `m` to reduced row echelon form in place; returns the pivot
/// columns in increasing order.  Pivot rows are scaled to leading 1 and all
/// other entries in a pivot column are eliminated.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !field.is_zero(m.get(i, c))) else {
            continue;
        };
        m.swap_rows(r, p);
        // Scale the pivot row to leading coefficient 1.
        let inv = field.inv(m.get(r, c)).expect("nonzero pivot");
        for j in c..m.cols {
            let v = field.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        // Eliminate the pivot column from every other row.
        for i in 0..m.rows {
            if i == r || field.is_zero(m.get(i, c)) {
                continue;
            }
            let f = field.neg(m.get(i, c));
            for j in c..m.cols {
                let v = field.mul_add(m.get(i, j), &f, m.get(r, j));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref(field, &mut work).len()
}

/// Basis of the right kernel {v : M v = 0}, one coordinate vector per basis
/// element.  The basis is canonical: assembling the vectors as rows yields a
/// matrix already in reduced row echelon form, so each vector has leading
/// coefficient 1 at its first nonzero coordinate.
pub fn kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut work = m.clone();
    let pivots = rref(field, &mut work);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut vectors = Vec::new();
    for f in 0..m.cols {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![field.zero(); m.cols];
        v[f] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(work.get(row, f));
        }
        vectors.push(v);
    }
    if vectors.is_empty() {
        return vectors;
    }
    // Re-normalize so the returned basis depends only on the subspace.
    let mut basis = Matrix::from_rows(vectors);
    rref(field, &mut basis);
    (0..basis.rows()).map(|i| basis.row(i).to_vec()).collect()
}

// --- fraction-free rank over Z[q, q^-1] ----------------------------------

/// Rank by single-step Bareiss elimination.  All divisions are exact by the
/// Sylvester identity, so the computation stays inside the Laurent ring.
pub fn bareiss_rank(ring: &LaurentRing, m: &Matrix<LaurentPoly>) -> usize {
    let mut w = m.clone();
    let mut prev = ring.one();
    let mut r = 0;
    for c in 0..w.cols() {
        if r == w.rows() {
            break;
        }
        let Some(p) = (r..w.rows()).find(|&i| !ring.is_zero(w.get(i, c))) else {
            continue;
        };
        w.swap_rows(r, p);
        let pivot = w.get(r, c).clone();
        for i in r + 1..w.rows() {
            for j in c + 1..w.cols() {
                let t = ring.sub(
                    &ring.mul(&pivot, w.get(i, j)),
                    &ring.mul(w.get(i, c), w.get(r, j)),
                );
                let q = t.exact_div(&prev).expect("Bareiss division is exact");
                w.set(i, j, q);
            }
            w.set(i, c, ring.zero());
        }
        prev = pivot;
        r += 1;
    }
    r
}

// --- prime fields and the probabilistic route ----------------------------

/// GF(l) for a prime l < 2^63, elements as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> PrimeField {
        assert!(is_prime_u64(p), "modulus must be prime");
        assert!(p < 1 << 63);
        PrimeField { p }
    }

    pub fn elem(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn pow_u64(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = ((acc as u128 * b as u128) % self.p as u128) as u64;
            }
            b = ((b as u128 * b as u128) % self.p as u128) as u64;
            e >>= 1;
        }
        acc
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow_u64(*a, self.p - 2))
        }
    }
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// SplitMix64: tiny deterministic generator for the probabilistic route.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from [0, bound) by rejection.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let limit = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < limit {
                return x % bound;
            }
        }
    }
}

/// Evaluation data for the probabilistic generic route: a prime field GF(l)
/// with l = 1 (mod p) together with an element omega of multiplicative
/// order exactly p.  Substituting q -> omega^r (r coprime to p, drawn from
/// the seeded generator) turns generic-parameter matrices into prime-field
/// matrices whose rank lower-bounds the generic rank; equality holds except
/// on a vanishing locus, which is why callers must opt in.
pub struct PrimeEval {
    pub field: PrimeField,
    pub omega: u64,
    pub order: u64,
}

impl PrimeEval {
    /// Deterministic setup for a given order p: the smallest prime
    /// l = k*p + 1 above 2^31, with omega derived from the smallest
    /// generator of GF(l)*.
    pub fn for_order(p: u64) -> PrimeEval {
        assert!(p >= 2);
        let mut k = (1u64 << 31) / p + 1;
        let l = loop {
            let cand = k * p + 1;
            if is_prime_u64(cand) {
                break cand;
            }
            k += 1;
        };
        let field = PrimeField::new(l);
        let factors = prime_factors(l - 1);
        let g = (2..l)
            .find(|&g| factors.iter().all(|&f| field.pow_u64(g, (l - 1) / f) != 1))
            .expect("GF(l)* is cyclic");
        let omega = field.pow_u64(g, (l - 1) / p);
        PrimeEval { field, omega, order: p }
    }

    /// A uniformly drawn primitive p-th root of unity.
    pub fn random_point(&self, rng: &mut SplitMix64) -> u64 {
        loop {
            let r = 1 + rng.next_below(self.order - 1);
            if num_integer::gcd(r, self.order) == 1 {
                return self.field.pow_u64(self.omega, r);
            }
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d as u128 * d as u128 <= n as u128 {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
