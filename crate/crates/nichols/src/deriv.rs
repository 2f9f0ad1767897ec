//! Skew derivations on tensor words over a diagonal braiding.
//!
//! For a diagonal braiding with scalars q_ij, the derivation d_i is the
//! linear map that deletes one occurrence of the letter i from a word,
//! weighting each deletion by the braiding scalars of the letters it was
//! commuted past:
//!
//!   d_i(w_1 ... w_n) = sum over positions m with w_m = i of
//!                      (prod_{l < m} q_{w_l, i}) * w_1 ... w_{m-1} w_{m+1} ... w_n.
//!
//! In particular d_i(x_j) = delta_ij.  These maps factor through the
//! quotient by the symmetrizer kernels, and jointly they detect it: a
//! homogeneous element of positive degree maps to zero in the quotient
//! algebra exactly when every d_i sends it to an element that itself
//! maps to zero.  [`is_zero_in_nichols`] runs that recursion, giving a
//! membership test for the defining ideal that is independent of any
//! rank or kernel computation on the symmetrizer itself.
//!
//! Only diagonal braidings are supported: the weights require the pair
//! map to be the plain swap.

use crate::braiding::BraidedSpace;
use crate::elements::{diagonal_scale, TensorElem};
use crate::error::{EngineError, Result};
use crate::ring::Ring;

/// The scalar q_ij of a diagonal braiding, or `Unsupported` for any
/// other kind of braiding.
fn pair_scalar<R: Ring>(space: &BraidedSpace<R>, i: usize, j: usize) -> Result<R::Elem> {
    diagonal_scale(space, i, j).ok_or_else(|| {
        EngineError::Unsupported("skew derivations need a diagonal braiding".into())
    })
}

/// Apply the skew derivation d_i to a homogeneous element.  The result
/// is homogeneous of one degree lower (zero stays zero; the derivation
/// of a degree-0 element is the zero element of "degree" 0).
pub fn skew_derivation<R: Ring>(
    space: &BraidedSpace<R>,
    i: u32,
    e: &TensorElem<R>,
) -> Result<TensorElem<R>> {
    if i as usize >= space.dim {
        return Err(EngineError::LetterOutOfRange { letter: i as usize, rank: space.dim });
    }
    let ring = &space.ring;
    let out_degree = e.degree().saturating_sub(1);
    let mut out = TensorElem::zero(out_degree);
    for (word, coeff) in e.terms() {
        // Running product of q_{w_l, i} over the prefix before position m.
        let mut prefix = ring.one();
        for (m, &letter) in word.iter().enumerate() {
            if letter == i {
                let mut shorter = Vec::with_capacity(word.len() - 1);
                shorter.extend_from_slice(&word[..m]);
                shorter.extend_from_slice(&word[m + 1..]);
                out.add_term(ring, shorter, ring.mul(coeff, &prefix));
            }
            prefix = ring.mul(&prefix, &pair_scalar(space, letter as usize, i as usize)?);
        }
    }
    Ok(out)
}

/// Whether a homogeneous element lies in the defining ideal, i.e. maps
/// to zero in the quotient algebra.  Degree 0 elements are zero exactly
/// when they are the zero element; in positive degree the element is
/// zero exactly when all of its skew derivatives are.  The recursion
/// refuses elements above `max_degree` rather than silently truncating.
pub fn is_zero_in_nichols<R: Ring>(
    space: &BraidedSpace<R>,
    e: &TensorElem<R>,
    max_degree: usize,
) -> Result<bool> {
    if e.degree() > max_degree {
        return Err(EngineError::DegreeTooLarge { got: e.degree(), bound: max_degree });
    }
    if e.is_zero() {
        return Ok(true);
    }
    if e.degree() == 0 {
        return Ok(false);
    }
    for i in 0..space.dim as u32 {
        let de = skew_derivation(space, i, e)?;
        if !is_zero_in_nichols(space, &de, max_degree)? {
            return Ok(false);
        }
    }
    Ok(true)
}
