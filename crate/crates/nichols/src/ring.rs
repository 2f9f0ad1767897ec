//! Ring and field contexts.
//!
//! Arithmetic runs in one of two coefficient domains: the cyclotomic field
//! Q(zeta_N) for braidings given at a root of unity, and the Laurent
//! polynomial ring Z[q, q^-1] (with fraction field Q(q)) for braidings with a
//! generic parameter.  Operations that work in either domain are generic over
//! a context object implementing [`Ring`]; the context owns whatever shared
//! state the element type needs (the order N, cached modulus, ...).

use std::fmt::Debug;

/// A commutative ring, presented as a context object over its element type.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, &self.one()))
    }

    /// `a + b*c`, the inner-loop shape of every elimination and operator sum.
    fn mul_add(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.add(a, &self.mul(b, c))
    }

    /// Small non-negative integer power.
    fn pow(&self, a: &Self::Elem, n: u64) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

/// A ring where every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}
