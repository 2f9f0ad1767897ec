//! q-integers, q-factorials and Gaussian binomials over an arbitrary ring.
//!
//! Everything is computed by addition and multiplication only — the
//! Gaussian binomial uses the Pascal recurrence
//! binom(n, k) = binom(n-1, k-1) + q^k * binom(n-1, k), never division —
//! so the same code serves Q(zeta_N) at a root of unity (where q-integers
//! vanish) and Z[q, q^-1] with q generic.

use crate::error::{EngineError, Result};
use crate::perm::all_permutations;
use crate::ring::Ring;

/// (n)_q = 1 + q + ... + q^(n-1); (0)_q = 0.
pub fn q_int<R: Ring>(ring: &R, q: &R::Elem, n: u64) -> R::Elem {
    let mut acc = ring.zero();
    let mut power = ring.one();
    for _ in 0..n {
        acc = ring.add(&acc, &power);
        power = ring.mul(&power, q);
    }
    acc
}

/// (n)_q! = (1)_q (2)_q ... (n)_q; empty product for n = 0.
pub fn q_factorial<R: Ring>(ring: &R, q: &R::Elem, n: u64) -> R::Elem {
    let mut acc = ring.one();
    for i in 1..=n {
        acc = ring.mul(&acc, &q_int(ring, q, i));
    }
    acc
}

/// Gaussian binomial binom(n, k)_q by the Pascal recurrence; zero outside
/// 0 <= k <= n.
pub fn q_binomial<R: Ring>(ring: &R, q: &R::Elem, n: u64, k: u64) -> R::Elem {
    if k > n {
        return ring.zero();
    }
    // row[j] = binom(m, j)_q for the current m, grown from m = 0.
    let mut row = vec![ring.one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(ring.one());
        let mut qpow = ring.one();
        for j in 1..row.len() {
            qpow = ring.mul(&qpow, q);
            next.push(ring.mul_add(&row[j - 1], &qpow, &row[j]));
        }
        next.push(ring.one());
        row = next;
    }
    row[k as usize].clone()
}

/// The inversion generating function of S_k, computed two independent ways:
/// as the literal sum over permutations of q^inversions, and as the closed
/// product (1)_q (2)_q ... (k)_q.  The two must agree; disagreement is a
/// bug, reported as [`EngineError::InternalMismatch`].  Exponential in k —
/// keep k small.
pub fn gauss_generating_function<R: Ring>(ring: &R, q: &R::Elem, k: u64) -> Result<R::Elem> {
    let mut sum = ring.zero();
    for p in all_permutations(k as usize) {
        sum = ring.add(&sum, &ring.pow(q, p.inversions() as u64));
    }
    let product = q_factorial(ring, q, k);
    if sum != product {
        return Err(EngineError::InternalMismatch(format!(
            "inversion sum and q-factorial disagree at k = {}",
            k
        )));
    }
    Ok(sum)
}
