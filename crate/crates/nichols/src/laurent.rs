//! Laurent polynomials Z[q, q^-1] and the rational function field Q(q).
//!
//! Generic-parameter braidings have scalars that are monomials q^e with
//! integer exponents; sums of them (symmetrizer matrix entries) are Laurent
//! polynomials.  Ranks of such matrices are computed fraction-free, but
//! kernel bases need a field, so Q(q) is provided as reduced fractions of
//! Laurent polynomials.
//!
//! Representation: `coeffs[0]` multiplies q^lo and the vector is trimmed so
//! the first and last entries are nonzero; the zero polynomial is the empty
//! vector with lo = 0.  That makes equality structural and zero tests exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::ring::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(0)
    }

    /// q^e.
    pub fn monomial(e: i64) -> LaurentPoly {
        LaurentPoly { lo: e, coeffs: vec![BigInt::one()] }
    }

    pub fn from_int(n: i64) -> LaurentPoly {
        if n == 0 {
            LaurentPoly::zero()
        } else {
            LaurentPoly { lo: 0, coeffs: vec![BigInt::from(n)] }
        }
    }

    fn normalized(mut lo: i64, mut coeffs: Vec<BigInt>) -> LaurentPoly {
        let first_nz = coeffs.iter().position(|c| !c.is_zero());
        match first_nz {
            None => LaurentPoly::zero(),
            Some(s) => {
                let e = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                coeffs.truncate(e + 1);
                coeffs.drain(..s);
                lo += s as i64;
                LaurentPoly { lo, coeffs }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Exponent of the highest term, if nonzero.
    pub fn hi(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if self.is_zero() || e < self.lo || e >= self.lo + self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[(e - self.lo) as usize].clone()
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().unwrap().max(other.hi().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.lo - lo) as usize + i] += c;
        }
        LaurentPoly::normalized(lo, coeffs)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::normalized(self.lo + other.lo, coeffs)
    }

    /// Exact division in Z[q, q^-1]; `None` if the quotient does not exist.
    pub fn exact_div(&self, den: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!den.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if self.coeffs.len() < den.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = den.coeffs.len() - 1;
        let lead = &den.coeffs[dd];
        let qlen = rem.len() - dd;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            if (&c % lead) != BigInt::zero() {
                return None;
            }
            let f = &c / lead;
            for (j, dc) in den.coeffs.iter().enumerate() {
                let t = &f * dc;
                rem[i + j] -= t;
            }
            quot[i] = f;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::normalized(self.lo - den.lo, quot))
    }

    /// Evaluate at q = x in an arbitrary field (x must be invertible when
    /// negative exponents occur).
    pub fn eval<R: Field>(&self, ring: &R, x: &R::Elem) -> R::Elem {
        let mut acc = ring.zero();
        if self.is_zero() {
            return acc;
        }
        let xinv;
        let base_neg = if self.lo < 0 {
            xinv = ring.inv(x).expect("evaluation point not invertible");
            Some(xinv)
        } else {
            None
        };
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lo + i as i64;
            let p = if e >= 0 {
                ring.pow(x, e as u64)
            } else {
                ring.pow(base_neg.as_ref().unwrap(), (-e) as u64)
            };
            let c_elem = int_in_ring(ring, c);
            acc = ring.mul_add(&acc, &c_elem, &p);
        }
        acc
    }

    /// Integer content (gcd of coefficients), zero for the zero polynomial.
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.abs());
        }
        g
    }

    /// The ordinary-polynomial part (coefficients with lo forced to 0).
    fn poly_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.clone()
    }
}

/// Lift a BigInt into an arbitrary ring by binary expansion of |n|.
pub fn int_in_ring<R: Ring>(ring: &R, n: &BigInt) -> R::Elem {
    let mut acc = ring.zero();
    let two = ring.add(&ring.one(), &ring.one());
    for bit in n.magnitude().to_radix_be(2) {
        acc = ring.mul(&acc, &two);
        if bit == 1 {
            acc = ring.add(&acc, &ring.one());
        }
    }
    if n.is_negative() {
        acc = ring.neg(&acc);
    }
    acc
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lo + i as i64;
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{}", e),
            };
            let part = if var.is_empty() {
                format!("{}", c)
            } else if c.is_one() {
                var
            } else if (-c).is_one() {
                format!("-{}", var)
            } else {
                format!("{}*{}", c, var)
            };
            parts.push(part);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Z[q, q^-1] as a ring context.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentRing;

impl Ring for LaurentRing {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.add(b)
    }
    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.sub(b)
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.mul(b)
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        a.neg()
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
}

// --- polynomial gcd over Z[x] (primitive PRS) ----------------------------

fn zpoly_degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn zpoly_content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = num_integer::gcd(g, c.abs());
    }
    g
}

fn zpoly_primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = zpoly_content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of a by b: lead(b)^(da-db+1) * a mod b.
fn zpoly_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = zpoly_degree(b).expect("pseudo-remainder by zero");
    let lead = b[db].clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    loop {
        let da = match zpoly_degree(&rem) {
            Some(d) if d >= db => d,
            _ => return rem,
        };
        let c = rem[da].clone();
        for x in rem.iter_mut() {
            *x = &*x * &lead;
        }
        for j in 0..=db {
            let t = &c * &b[j];
            rem[da - db + j] -= t;
        }
    }
}

/// Gcd of integer polynomials, primitive with positive leading coefficient.
fn zpoly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r0 = zpoly_primitive(a);
    let mut r1 = zpoly_primitive(b);
    if zpoly_degree(&r0).is_none() {
        return normalize_sign(r1);
    }
    if zpoly_degree(&r1).is_none() {
        return normalize_sign(r0);
    }
    while zpoly_degree(&r1).is_some() {
        let rem = zpoly_pseudo_rem(&r0, &r1);
        r0 = std::mem::replace(&mut r1, zpoly_primitive(&rem));
    }
    // r0 is the last nonzero primitive remainder.
    normalize_sign(r0)
}

fn normalize_sign(mut p: Vec<BigInt>) -> Vec<BigInt> {
    if let Some(d) = zpoly_degree(&p) {
        if p[d].is_negative() {
            for c in p.iter_mut() {
                *c = -&*c;
            }
        }
        p.truncate(d + 1);
    } else {
        p.clear();
    }
    p
}

// --- the field Q(q) ------------------------------------------------------

/// A reduced fraction of Laurent polynomials.  Canonical form: denominator
/// is an ordinary polynomial (lowest exponent 0), primitive, with positive
/// leading coefficient, and coprime to the numerator; all monomial units are
/// absorbed into the numerator's lo.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RatFunc {
    pub fn from_poly(p: LaurentPoly) -> RatFunc {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        // Push the denominator's monomial unit into the numerator.
        let num = LaurentPoly { lo: num.lo - den.lo, coeffs: num.coeffs };
        let den = LaurentPoly { lo: 0, coeffs: den.coeffs };
        // Reduce by the polynomial gcd (numerator exponent shift is a unit
        // and does not participate).
        let g = zpoly_gcd(&num.poly_coeffs(), &den.poly_coeffs());
        let g = LaurentPoly::normalized(0, g);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        // Integer contents: make the denominator primitive and positive.
        let cd = den.content();
        let cn = num.content();
        let c = num_integer::gcd(cn, cd.clone());
        if !c.is_one() {
            num = LaurentPoly {
                lo: num.lo,
                coeffs: num.coeffs.iter().map(|x| x / &c).collect(),
            };
            den = LaurentPoly {
                lo: den.lo,
                coeffs: den.coeffs.iter().map(|x| x / &c).collect(),
            };
        }
        if den.coeffs.last().map(|l| l.is_negative()).unwrap_or(false) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Q(q) as a field context.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RatFuncField;

impl Ring for RatFuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::from_poly(LaurentPoly::zero())
    }
    fn one(&self) -> RatFunc {
        RatFunc::from_poly(LaurentPoly::one())
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
        RatFunc::new(num, a.den.mul(&b.den))
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        RatFunc::new(a.num.mul(&b.num), a.den.mul(&b.den))
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc { num: a.num.neg(), den: a.den.clone() }
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
}

impl Field for RatFuncField {
    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.is_zero() {
            None
        } else {
            Some(RatFunc::new(a.den.clone(), a.num.clone()))
        }
    }
}
