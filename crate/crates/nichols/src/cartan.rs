//! Cartan matrices and reflections of diagonal braidings.
//!
//! A diagonal braiding is recorded by its exponent matrix: entry (i, j)
//! is the exponent e_ij with q_ij = zeta^e_ij (root-of-unity case, taken
//! mod the order) or q_ij = q^e_ij (generic case, over the integers).
//!
//! The Cartan entry c_ij (i != j) is -m for the smallest m >= 0 with
//!
//!   (m+1)_{q_ii} = 0   or   q_ii^m q_ij q_ji = 1,
//!
//! and c_ii = 2.  When no such m exists the braiding is not i-finite at
//! (i, j) and every operation that needs the Cartan matrix reports
//! [`EngineError::NotIFinite`].  The reflection R_i rewrites the
//! exponent matrix along alpha_k -> alpha_k - c_ik alpha_i, extending
//! the exponents bilinearly in the root coordinates.

use crate::error::{EngineError, Result};
use crate::perm::all_permutations;
use serde::{Deserialize, Serialize};

/// Exponent matrix of a diagonal braiding.  Root-of-unity exponents are
/// kept reduced to 0..order; generic exponents live in the integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum DiagonalBraiding {
    #[serde(rename = "diagonal_rou")]
    Rou {
        order: u32,
        #[serde(rename = "exponents")]
        exp: Vec<Vec<i64>>,
    },
    #[serde(rename = "diagonal_generic")]
    Generic {
        #[serde(rename = "exponents")]
        exp: Vec<Vec<i64>>,
    },
}

fn check_square(exp: &[Vec<i64>]) -> Result<()> {
    let n = exp.len();
    if n == 0 {
        return Err(EngineError::InvalidInput("exponent matrix is empty".into()));
    }
    if exp.iter().any(|row| row.len() != n) {
        return Err(EngineError::InvalidInput("exponent matrix is not square".into()));
    }
    Ok(())
}

impl DiagonalBraiding {
    /// Root-of-unity braiding with exponents reduced mod `order`.
    pub fn rou(order: u32, exp: &[Vec<i64>]) -> Result<DiagonalBraiding> {
        if order == 0 {
            return Err(EngineError::InvalidInput("root-of-unity order must be positive".into()));
        }
        check_square(exp)?;
        let n = i64::from(order);
        let exp = exp
            .iter()
            .map(|row| row.iter().map(|e| e.rem_euclid(n)).collect())
            .collect();
        Ok(DiagonalBraiding::Rou { order, exp })
    }

    /// Braiding with entries q^e_ij for a transcendental q.
    pub fn generic(exp: &[Vec<i64>]) -> Result<DiagonalBraiding> {
        check_square(exp)?;
        Ok(DiagonalBraiding::Generic { exp: exp.to_vec() })
    }

    pub fn rank(&self) -> usize {
        self.exponents().len()
    }

    pub fn exponents(&self) -> &[Vec<i64>] {
        match self {
            DiagonalBraiding::Rou { exp, .. } | DiagonalBraiding::Generic { exp } => exp,
        }
    }

    pub fn order(&self) -> Option<u32> {
        match self {
            DiagonalBraiding::Rou { order, .. } => Some(*order),
            DiagonalBraiding::Generic { .. } => None,
        }
    }

    /// Smallest m >= 0 admissible for the pair (i, j), or `NotIFinite`.
    fn pair_bound(&self, i: usize, j: usize) -> Result<i64> {
        let exp = self.exponents();
        match self {
            DiagonalBraiding::Rou { order, .. } => {
                let n = i64::from(*order);
                let e = exp[i][i].rem_euclid(n);
                let r = (-(exp[i][j] + exp[j][i])).rem_euclid(n);
                if e == 0 {
                    // q_ii = 1: no truncation ever fires, so only m = 0
                    // with q_ij q_ji = 1 qualifies.
                    return if r == 0 { Ok(0) } else { Err(EngineError::NotIFinite { i, j }) };
                }
                // Truncation: (m+1)_{q_ii} = 0 first at m + 1 = ord(q_ii).
                let m_trunc = n / gcd(e, n) - 1;
                // Cancellation: m e_ii = -(e_ij + e_ji) mod order.
                let m_cancel = solve_mod(e, r, n);
                Ok(match m_cancel {
                    Some(m) => m.min(m_trunc),
                    None => m_trunc,
                })
            }
            DiagonalBraiding::Generic { .. } => {
                let e = exp[i][i];
                let s = exp[i][j] + exp[j][i];
                if e == 0 {
                    return if s == 0 { Ok(0) } else { Err(EngineError::NotIFinite { i, j }) };
                }
                // q is transcendental: only m e_ii + e_ij + e_ji = 0 in Z
                // can make the pair scalar collapse to 1.
                if s % e == 0 && -(s / e) >= 0 {
                    Ok(-(s / e))
                } else {
                    Err(EngineError::NotIFinite { i, j })
                }
            }
        }
    }

    /// The (generalized) Cartan matrix: 2 on the diagonal, -m off it.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            for j in 0..n {
                if j != i {
                    c[i][j] = -self.pair_bound(i, j)?;
                }
            }
        }
        Ok(c)
    }

    /// Reflection at index i: transport the exponent matrix along
    /// alpha_k -> alpha_k - c_ik alpha_i.
    pub fn reflect(&self, i: usize) -> Result<DiagonalBraiding> {
        let n = self.rank();
        if i >= n {
            return Err(EngineError::LetterOutOfRange { letter: i, rank: n });
        }
        let c = self.cartan_matrix()?;
        let u: Vec<i64> = (0..n).map(|k| -c[i][k]).collect();
        let e = self.exponents();
        let mut out = vec![vec![0i64; n]; n];
        for k in 0..n {
            for l in 0..n {
                out[k][l] = e[k][l] + u[k] * e[i][l] + u[l] * e[k][i] + u[k] * u[l] * e[i][i];
            }
        }
        match self {
            DiagonalBraiding::Rou { order, .. } => DiagonalBraiding::rou(*order, &out),
            DiagonalBraiding::Generic { .. } => DiagonalBraiding::generic(&out),
        }
    }

    /// The symmetric diagram matrix: diagonal entries e_ii, off-diagonal
    /// entries e_ij + e_ji (mod the order in the root-of-unity case).
    /// Two diagonal braidings with equal diagrams have twist-equivalent
    /// braidings, so this is the right datum to classify by.
    pub fn diagram(&self) -> Vec<Vec<i64>> {
        let e = self.exponents();
        let n = self.rank();
        let reduce = |v: i64| match self {
            DiagonalBraiding::Rou { order, .. } => v.rem_euclid(i64::from(*order)),
            DiagonalBraiding::Generic { .. } => v,
        };
        let mut d = vec![vec![0i64; n]; n];
        for i in 0..n {
            d[i][i] = reduce(e[i][i]);
            for j in 0..n {
                if j != i {
                    d[i][j] = reduce(e[i][j] + e[j][i]);
                }
            }
        }
        d
    }
}

/// Lexicographically least relabeling of a square integer matrix under
/// simultaneous row/column permutation.  Used to count diagrams and
/// Cartan matrices up to isomorphism.
pub fn canonical_matrix_class(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut best: Option<Vec<Vec<i64>>> = None;
    for p in all_permutations(n) {
        let img = p.one_line();
        let candidate: Vec<Vec<i64>> = (0..n)
            .map(|k| (0..n).map(|l| m[img[k] - 1][img[l] - 1]).collect())
            .collect();
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    best.expect("rank is positive")
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smallest m >= 0 with m e = r (mod n), for n > 0 and 0 <= r < n.
fn solve_mod(e: i64, r: i64, n: i64) -> Option<i64> {
    let g = gcd(e, n);
    if r % g != 0 {
        return None;
    }
    let n2 = n / g;
    let inv = mod_inverse(e / g % n2, n2)?;
    Some((r / g % n2) * inv % n2)
}

/// Inverse of a mod n (n > 0), when gcd(a, n) = 1.
fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n, a.rem_euclid(n));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl3() -> DiagonalBraiding {
        DiagonalBraiding::rou(3, &[vec![2, 2], vec![2, 2]]).unwrap()
    }

    fn sl21() -> DiagonalBraiding {
        DiagonalBraiding::rou(6, &[vec![2, 5], vec![5, 3]]).unwrap()
    }

    #[test]
    fn cartan_matrix_of_small_quantum_sl3() {
        assert_eq!(sl3().cartan_matrix().unwrap(), vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn cartan_matrix_of_generic_b2() {
        let b = DiagonalBraiding::generic(&[vec![2, -2], vec![-2, 4]]).unwrap();
        assert_eq!(b.cartan_matrix().unwrap(), vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn trivial_self_scalar_with_nontrivial_pair_is_not_finite() {
        // q_11 = 1 but q_12 q_21 != 1: no admissible m exists.
        let b = DiagonalBraiding::rou(5, &[vec![0, 1], vec![1, 1]]).unwrap();
        let err = b.cartan_matrix().unwrap_err();
        assert!(matches!(err, EngineError::NotIFinite { i: 0, j: 1 }));
        let g = DiagonalBraiding::generic(&[vec![0, 1], vec![1, 1]]).unwrap();
        assert!(matches!(g.cartan_matrix().unwrap_err(), EngineError::NotIFinite { .. }));
    }

    #[test]
    fn generic_cartan_needs_an_integer_solution() {
        // m * 2 = 3 has no integer solution, and m * 2 = -2 only a
        // negative one: both pairs fail.
        let b = DiagonalBraiding::generic(&[vec![2, 1], vec![2, 2]]).unwrap();
        assert!(matches!(b.cartan_matrix().unwrap_err(), EngineError::NotIFinite { .. }));
        let b = DiagonalBraiding::generic(&[vec![2, 1], vec![1, 2]]).unwrap();
        assert!(matches!(b.cartan_matrix().unwrap_err(), EngineError::NotIFinite { .. }));
    }

    #[test]
    fn reflections_of_the_superalgebra_point() {
        // Reflecting at 0 fixes the matrix; reflecting at 1 produces the
        // symmetric companion, and reflecting that at 0 the third form.
        let b = sl21();
        assert_eq!(b.reflect(0).unwrap(), b);
        let r2 = b.reflect(1).unwrap();
        assert_eq!(r2.exponents(), &[vec![3, 4], vec![4, 3]]);
        let r12 = r2.reflect(0).unwrap();
        assert_eq!(r12.exponents(), &[vec![3, 5], vec![5, 2]]);
        assert_eq!(r12.reflect(1).unwrap(), r12);
    }

    #[test]
    fn reflections_are_involutive_here() {
        for b in [sl3(), sl21(), DiagonalBraiding::generic(&[vec![2, -2], vec![-2, 4]]).unwrap()] {
            for i in 0..b.rank() {
                assert_eq!(b.reflect(i).unwrap().reflect(i).unwrap(), b, "index {}", i);
            }
        }
    }

    #[test]
    fn diagram_folds_opposite_exponents() {
        let d = sl21().diagram();
        assert_eq!(d, vec![vec![2, 4], vec![4, 3]]);
    }

    #[test]
    fn canonical_class_is_permutation_invariant() {
        let a = vec![vec![3, 5], vec![5, 2]];
        let b = vec![vec![2, 5], vec![5, 3]];
        assert_eq!(canonical_matrix_class(&a), canonical_matrix_class(&b));
        assert_eq!(canonical_matrix_class(&b), b);
        let sym = vec![vec![3, 4], vec![4, 3]];
        assert_ne!(canonical_matrix_class(&sym), canonical_matrix_class(&a));
    }
}
