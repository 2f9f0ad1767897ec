//! Classification of rank-2 root systems by cyclic integer sequences.
//!
//! A sequence (c_1, ..., c_n) of positive integers is admissible when
//! the product of the companion matrices
//!
//!   eta(c) = [[c, -1], [1, 0]]
//!
//! over the whole sequence is -identity, and the first columns of all
//! proper partial products are componentwise nonnegative.  Such
//! sequences are exactly the vertex degree sequences of triangulations
//! of a convex n-gon by non-crossing diagonals, they are generated from
//! (1, 1, 1) by inserting 1 at a cyclic edge while incrementing both
//! neighbors, and each one determines a rank-2 root system: the i-th
//! positive root is the first column of the i-th partial product with
//! its two coordinates swapped.
//!
//! The classifier enumerates admissible sequences by edge insertion,
//! groups them into classes under rotation and reversal, reconstructs a
//! witnessing triangulation by repeatedly cutting ears, and matches
//! sequences against root systems computed independently by the chamber
//! walk.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{EngineError, Result};

pub type Mat2 = [[i64; 2]; 2];

pub fn eta(c: i64) -> Mat2 {
    [[c, -1], [1, 0]]
}

fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

const MAT2_ID: Mat2 = [[1, 0], [0, 1]];
const MAT2_NEG_ID: Mat2 = [[-1, 0], [0, -1]];

/// Partial products P_0 = id, P_i = eta(c_1) ... eta(c_i), all n + 1.
pub fn partial_products(seq: &[i64]) -> Vec<Mat2> {
    let mut out = Vec::with_capacity(seq.len() + 1);
    let mut p = MAT2_ID;
    out.push(p);
    for &c in seq {
        p = mat2_mul(&p, &eta(c));
        out.push(p);
    }
    out
}

/// Full admissibility check; the error spells out the first failure.
pub fn check_admissible(seq: &[i64]) -> Result<()> {
    if seq.len() < 3 {
        return Err(EngineError::NotInAPlus("sequence has fewer than 3 entries".into()));
    }
    if let Some(&c) = seq.iter().find(|&&c| c < 1) {
        return Err(EngineError::NotInAPlus(format!("entry {} is not positive", c)));
    }
    let partials = partial_products(seq);
    for (i, p) in partials.iter().enumerate().take(seq.len()).skip(1) {
        if p[0][0] < 0 || p[1][0] < 0 {
            return Err(EngineError::NotInAPlus(format!(
                "partial product {} has a negative first column ({}, {})",
                i, p[0][0], p[1][0]
            )));
        }
    }
    if partials[seq.len()] != MAT2_NEG_ID {
        return Err(EngineError::NotInAPlus(
            "full product is not minus the identity".into(),
        ));
    }
    Ok(())
}

pub fn is_admissible(seq: &[i64]) -> bool {
    check_admissible(seq).is_ok()
}

/// All cyclic rotations of a sequence.
fn rotations(seq: &[i64]) -> Vec<Vec<i64>> {
    (0..seq.len())
        .map(|r| {
            let mut v = Vec::with_capacity(seq.len());
            v.extend_from_slice(&seq[r..]);
            v.extend_from_slice(&seq[..r]);
            v
        })
        .collect()
}

/// Lexicographically least representative under rotation and reversal.
pub fn canonical_class(seq: &[i64]) -> Vec<i64> {
    let reversed: Vec<i64> = seq.iter().rev().cloned().collect();
    rotations(seq)
        .into_iter()
        .chain(rotations(&reversed))
        .min()
        .expect("sequence is nonempty")
}

/// Every admissible sequence of length n, generated from (1, 1, 1) by
/// inserting 1 at a cyclic edge and incrementing both edge endpoints.
pub fn enumerate_raw(n: usize) -> Result<Vec<Vec<i64>>> {
    if n < 3 {
        return Err(EngineError::InvalidInput(
            "admissible sequences have at least 3 entries".into(),
        ));
    }
    let mut level: BTreeSet<Vec<i64>> = BTreeSet::new();
    level.insert(vec![1, 1, 1]);
    for _ in 3..n {
        let mut next = BTreeSet::new();
        for seq in &level {
            let k = seq.len();
            for edge in 0..k {
                // Insert between positions edge and edge + 1 (cyclically).
                let mut grown = Vec::with_capacity(k + 1);
                grown.extend_from_slice(seq);
                grown[edge] += 1;
                grown[(edge + 1) % k] += 1;
                grown.insert(edge + 1, 1);
                next.insert(grown);
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// Class representatives (rotation + reversal) of the length-n
/// admissible sequences, sorted.
pub fn enumerate_classes(n: usize) -> Result<Vec<Vec<i64>>> {
    let classes: BTreeSet<Vec<i64>> = enumerate_raw(n)?
        .iter()
        .map(|s| canonical_class(s))
        .collect();
    Ok(classes.into_iter().collect())
}

/// The root system attached to a sequence: for i = 0..n-1 the first
/// column of P_i with swapped coordinates.
pub fn sequence_roots(seq: &[i64]) -> Vec<Vec<i64>> {
    partial_products(seq)
        .iter()
        .take(seq.len())
        .map(|p| vec![p[1][0], p[0][0]])
        .collect()
}

/// Whether the sequence's root set equals the given positive roots as
/// sets, directly or after swapping the two coordinates.
pub fn matches_root_set(seq: &[i64], positive_roots: &[Vec<i64>]) -> bool {
    let ours: BTreeSet<Vec<i64>> = sequence_roots(seq).into_iter().collect();
    let theirs: BTreeSet<Vec<i64>> = positive_roots.iter().cloned().collect();
    if ours == theirs {
        return true;
    }
    let swapped: BTreeSet<Vec<i64>> = theirs
        .iter()
        .map(|r| {
            let mut v = r.clone();
            v.reverse();
            v
        })
        .collect();
    ours == swapped
}

/// One triangle of a polygon triangulation, as vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangle(pub usize, pub usize, pub usize);

/// Reconstruct a triangulation of the n-gon whose vertex degree
/// sequence is `seq`, by repeatedly cutting an ear (a vertex lying in
/// exactly one triangle).  Fails with `NoConstructionPath` when no ear
/// exists or a count drops below 1, which happens exactly for
/// non-admissible input.
pub fn triangulation(seq: &[i64]) -> Result<Vec<Triangle>> {
    if seq.len() < 3 {
        return Err(EngineError::NoConstructionPath(
            "a polygon needs at least 3 vertices".into(),
        ));
    }
    let mut ring: Vec<(usize, i64)> = seq.iter().cloned().enumerate().collect();
    let mut triangles = Vec::with_capacity(seq.len() - 2);
    while ring.len() > 3 {
        let Some(k) = ring.iter().position(|&(_, c)| c == 1) else {
            return Err(EngineError::NoConstructionPath(
                "no vertex lies in exactly one triangle".into(),
            ));
        };
        let prev = (k + ring.len() - 1) % ring.len();
        let next = (k + 1) % ring.len();
        triangles.push(Triangle(ring[prev].0, ring[k].0, ring[next].0));
        ring[prev].1 -= 1;
        ring[next].1 -= 1;
        if ring[prev].1 < 1 || ring[next].1 < 1 {
            return Err(EngineError::NoConstructionPath(
                "cutting the ear empties a neighboring vertex".into(),
            ));
        }
        ring.remove(k);
    }
    if ring.iter().any(|&(_, c)| c != 1) {
        return Err(EngineError::NoConstructionPath(
            "the final triangle is not a triangle".into(),
        ));
    }
    triangles.push(Triangle(ring[0].0, ring[1].0, ring[2].0));
    Ok(triangles)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent route: scan all bounded tuples for the defining
    /// matrix conditions, with no reference to edge insertion.
    fn brute_force_sequences(n: usize) -> Vec<Vec<i64>> {
        let bound = (n as i64 - 2).max(1);
        let mut out = Vec::new();
        let mut cur = vec![1i64; n];
        loop {
            if is_admissible(&cur) {
                out.push(cur.clone());
            }
            // Odometer over {1..bound}^n.
            let mut pos = n;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if cur[pos] < bound {
                    cur[pos] += 1;
                    break;
                }
                cur[pos] = 1;
            }
        }
    }

    #[test]
    fn insertion_closure_agrees_with_brute_force() {
        for n in 3..=6 {
            let generated = enumerate_raw(n).unwrap();
            let brute = brute_force_sequences(n);
            assert_eq!(generated, brute, "length {}", n);
        }
    }

    #[test]
    fn raw_counts_follow_the_catalan_numbers() {
        let catalan = [1, 2, 5, 14];
        for (k, &expected) in catalan.iter().enumerate() {
            assert_eq!(enumerate_raw(k + 3).unwrap().len(), expected);
        }
    }

    #[test]
    fn class_counts_for_small_lengths() {
        let counts: Vec<usize> = (3..=6)
            .map(|n| enumerate_classes(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 3]);
        // Length 5 is a single class: every admissible sequence is a
        // rotation of this one.
        assert_eq!(enumerate_classes(5).unwrap(), vec![vec![1, 2, 2, 1, 3]]);
        assert!(enumerate_raw(5).unwrap().contains(&vec![3, 1, 2, 2, 1]));
    }

    #[test]
    fn admissibility_checks_partial_positivity() {
        assert!(is_admissible(&[1, 1, 1]));
        assert!(is_admissible(&[1, 2, 1, 2]));
        assert!(is_admissible(&[3, 1, 2, 2, 1]));
        assert!(!is_admissible(&[1, 1, 2]));
        assert!(!is_admissible(&[2, 2, 2]));
        let err = check_admissible(&[0, 1, 1]).unwrap_err();
        assert!(matches!(err, EngineError::NotInAPlus(_)));
    }

    #[test]
    fn roots_of_the_pentagon_sequence() {
        let roots = sequence_roots(&[3, 1, 2, 2, 1]);
        assert_eq!(
            roots,
            vec![vec![0, 1], vec![1, 3], vec![1, 2], vec![1, 1], vec![1, 0]]
        );
    }

    #[test]
    fn canonical_class_handles_rotation_and_reversal() {
        assert_eq!(canonical_class(&[3, 1, 2, 2, 1]), vec![1, 2, 2, 1, 3]);
        assert_eq!(canonical_class(&[2, 2, 1, 3, 1]), vec![1, 2, 2, 1, 3]);
        assert_eq!(canonical_class(&[2, 1, 2, 1]), vec![1, 2, 1, 2]);
    }

    #[test]
    fn root_set_matching_allows_a_coordinate_swap() {
        // The triangle sequence carries the three roots of the rank-2
        // simply-laced system in either coordinate order.
        let pos = vec![vec![0, 1], vec![1, 0], vec![1, 1]];
        assert!(matches_root_set(&[1, 1, 1], &pos));
        // The square sequence needs four roots with a doubled one.
        let pos_b2 = vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]];
        assert!(matches_root_set(&[1, 2, 1, 2], &pos_b2));
        assert!(!matches_root_set(&[1, 1, 1], &pos_b2));
    }

    #[test]
    fn triangulation_replay_recovers_the_degree_sequence() {
        for n in 3..=6 {
            for seq in enumerate_raw(n).unwrap() {
                let triangles = triangulation(&seq).unwrap();
                assert_eq!(triangles.len(), n - 2);
                let mut degree = vec![0i64; n];
                for Triangle(a, b, c) in &triangles {
                    degree[*a] += 1;
                    degree[*b] += 1;
                    degree[*c] += 1;
                }
                assert_eq!(degree, seq, "length {}", n);
            }
        }
    }

    #[test]
    fn triangulation_rejects_sequences_without_an_ear() {
        assert!(matches!(
            triangulation(&[2, 2, 2]).unwrap_err(),
            EngineError::NoConstructionPath(_)
        ));
        assert!(matches!(
            triangulation(&[2, 2, 1, 1]).unwrap_err(),
            EngineError::NoConstructionPath(_)
        ));
    }
}
