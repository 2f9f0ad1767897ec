//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! An element is a rational coefficient vector of length phi(N) representing
//! a polynomial in zeta_N reduced modulo the N-th cyclotomic polynomial
//! Phi_N.  Phi_N is irreducible over Q, so the representation is canonical:
//! an element is zero iff every coefficient is zero, and two elements are
//! equal iff their vectors are equal componentwise.
//!
//! Phi_N itself is computed by dividing x^N - 1 by the product of Phi_d over
//! the proper divisors d | N (exact integer division, monic divisors), and
//! cached per order.
//!
//! Elements of different orders never mix silently: operations demand equal
//! orders, and callers lift into a common field with [`Cyc::embed`] /
//! [`Cyc::unify`] (zeta_N = zeta_M^(M/N) when N | M).  Computations fix one
//! working order up front — the lcm of every order in sight — so all later
//! arithmetic stays in a single field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::ring::{Field, Ring};

/// Largest order accepted when constructing braidings or characters.  Keeps
/// phi(N)-sized vectors at desk scale; the engine never grows the order on
/// its own after construction.
pub const MAX_ORDER: u32 = 10_000;

/// Euler totient.
pub fn phi(n: u32) -> u32 {
    assert!(n >= 1, "phi of 0");
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Ascending divisor list.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of Phi_N, ascending, monic, length phi(N) + 1.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial of 0");
    if let Some(hit) = cyclotomic_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    // Divide out Phi_d for every proper divisor d | n.  All divisions are
    // exact with monic divisors, so plain synthetic division suffices.
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        num = divide_monic_exact(&num, &phi_d);
    }
    debug_assert_eq!(num.len(), phi(n) as usize + 1);
    cyclotomic_cache()
        .lock()
        .unwrap()
        .insert(n, num.clone());
    num
}

/// Exact division of integer polynomials by a monic divisor (ascending
/// coefficients).  Panics if the division leaves a remainder.
fn divide_monic_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false), "divisor not monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(rem.len() >= den.len());
    let qlen = rem.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = std::mem::replace(&mut rem[i + dd], BigInt::zero());
        if !c.is_zero() {
            for (j, dc) in den[..dd].iter().enumerate() {
                let t = &c * dc;
                rem[i + j] -= t;
            }
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// An element of Q(zeta_N): `coeffs[i]` multiplies zeta_N^i, and the vector
/// always has length phi(N).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cyc {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyc {
    pub fn zero(order: u32) -> Cyc {
        Cyc { order, coeffs: vec![BigRational::zero(); phi(order) as usize] }
    }

    pub fn one(order: u32) -> Cyc {
        Cyc::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u32, r: BigRational) -> Cyc {
        let mut c = Cyc::zero(order);
        c.coeffs[0] = r;
        c
    }

    pub fn from_integer(order: u32, n: i64) -> Cyc {
        Cyc::from_rational(order, BigRational::from(BigInt::from(n)))
    }

    /// zeta_N^e for any integer exponent (reduced mod N).
    pub fn zeta_pow(order: u32, e: i64) -> Cyc {
        let e = e.rem_euclid(order as i64) as u32;
        let deg = phi(order) as usize;
        if (e as usize) < deg {
            let mut c = Cyc::zero(order);
            c.coeffs[e as usize] = BigRational::one();
            return c;
        }
        // Reduce x^e mod Phi_N.
        let mut poly = vec![BigRational::zero(); e as usize + 1];
        poly[e as usize] = BigRational::one();
        Cyc { order, coeffs: reduce_mod_cyclotomic(poly, order) }
    }

    pub fn zeta(order: u32) -> Cyc {
        Cyc::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Construct from raw coefficients; shorter vectors are zero-padded,
    /// longer ones reduced mod Phi_N.
    pub fn from_coeffs(order: u32, mut coeffs: Vec<BigRational>) -> Cyc {
        let deg = phi(order) as usize;
        if coeffs.len() <= deg {
            coeffs.resize(deg, BigRational::zero());
            Cyc { order, coeffs }
        } else {
            Cyc { order, coeffs: reduce_mod_cyclotomic(coeffs, order) }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_order(&self, other: &Cyc) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic order mismatch ({} vs {}); lift with embed/unify first",
            self.order, other.order
        );
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyc { order: self.order, coeffs }
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Cyc { order: self.order, coeffs }
    }

    pub fn neg(&self) -> Cyc {
        Cyc { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Cyc) -> Cyc {
        self.assert_same_order(other);
        let n = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Cyc { order: self.order, coeffs: reduce_mod_cyclotomic(prod, self.order) }
    }

    pub fn scale(&self, r: &BigRational) -> Cyc {
        Cyc { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_N over Q[x].  `None` exactly for zero (Phi_N is irreducible).
    pub fn inv(&self) -> Option<Cyc> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.order)
            .into_iter()
            .map(BigRational::from)
            .collect();
        let (g, s) = poly_half_xgcd(&self.coeffs, &modulus);
        // g is a nonzero constant; the inverse is s / g.
        debug_assert!(poly_degree(&g) == Some(0));
        let ginv = g[0].recip();
        let coeffs = s.iter().map(|c| c * &ginv).collect();
        Some(Cyc::from_coeffs(self.order, coeffs))
    }

    /// Lift into Q(zeta_M) for a multiple M of the order, substituting
    /// zeta_N = zeta_M^(M/N).
    pub fn embed(&self, new_order: u32) -> Cyc {
        assert!(
            new_order % self.order == 0,
            "embed target {} is not a multiple of order {}",
            new_order,
            self.order
        );
        if new_order == self.order {
            return self.clone();
        }
        let step = (new_order / self.order) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i * step] = c.clone();
            }
        }
        Cyc::from_coeffs(new_order, poly)
    }

    /// Lift both elements into Q(zeta_lcm).
    pub fn unify(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        let l = num_integer::lcm(a.order, b.order);
        (a.embed(l), b.embed(l))
    }

    /// Multiplicative order if the element is a root of unity, else `None`.
    /// Only divisors of the ambient order N need to be checked.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        for t in divisors(self.order) {
            if self.pow(t as i64).is_one() {
                return Some(t);
            }
        }
        None
    }

    pub fn pow(&self, e: i64) -> Cyc {
        if e < 0 {
            return self.inv().expect("zero has no negative power").pow(-e);
        }
        let mut acc = Cyc::one(self.order);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl std::fmt::Display for Cyc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && i > 0 {
                String::new()
            } else if (-c).is_one() && i > 0 {
                "-".to_string()
            } else {
                format!("{}", c)
            };
            let var = match i {
                0 => String::new(),
                1 => format!("z{}", self.order),
                _ => format!("z{}^{}", self.order, i),
            };
            let sep = if !coeff.is_empty() && !var.is_empty() { "*" } else { "" };
            parts.push(format!("{}{}{}", coeff, sep, var));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Reduce an ascending-coefficient polynomial mod Phi_N and trim to length
/// phi(N).
fn reduce_mod_cyclotomic(mut poly: Vec<BigRational>, order: u32) -> Vec<BigRational> {
    let modulus = cyclotomic_polynomial(order);
    let deg = modulus.len() - 1;
    for i in (deg..poly.len()).rev() {
        let c = std::mem::replace(&mut poly[i], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        for (j, mc) in modulus[..deg].iter().enumerate() {
            let t = &c * mc;
            poly[i - deg + j] -= t;
        }
    }
    poly.truncate(deg);
    poly.resize(deg, BigRational::zero());
    poly
}

fn poly_degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Extended gcd over Q[x] returning (g, s) with s*a = g mod m.  Only the
/// first Bezout coefficient is tracked; that is all an inverse needs.
fn poly_half_xgcd(a: &[BigRational], m: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0: Vec<BigRational> = m.to_vec();
    let mut r1: Vec<BigRational> = a.to_vec();
    let mut s0: Vec<BigRational> = vec![BigRational::zero()];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = poly_degree(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem: Vec<BigRational> = num.to_vec();
    let nd = match poly_degree(&rem) {
        Some(d) if d >= dd => d,
        _ => return (vec![BigRational::zero()], rem),
    };
    let mut quot = vec![BigRational::zero(); nd - dd + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den[..=dd].iter().enumerate() {
            let t = &c * dc;
            rem[i + j] -= t;
        }
        quot[i] = c;
    }
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// The field Q(zeta_N) as a [`Ring`]/[`Field`] context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycField {
    pub order: u32,
}

impl CycField {
    pub fn new(order: u32) -> CycField {
        assert!(order >= 1 && order <= MAX_ORDER, "order out of range");
        // Warm the modulus cache so parallel workers never race to build it.
        cyclotomic_polynomial(order);
        CycField { order }
    }

    pub fn zeta_pow(&self, e: i64) -> Cyc {
        Cyc::zeta_pow(self.order, e)
    }

    pub fn from_int(&self, n: i64) -> Cyc {
        Cyc::from_integer(self.order, n)
    }
}

impl Ring for CycField {
    type Elem = Cyc;

    fn zero(&self) -> Cyc {
        Cyc::zero(self.order)
    }
    fn one(&self) -> Cyc {
        Cyc::one(self.order)
    }
    fn add(&self, a: &Cyc, b: &Cyc) -> Cyc {
        a.add(b)
    }
    fn sub(&self, a: &Cyc, b: &Cyc) -> Cyc {
        a.sub(b)
    }
    fn mul(&self, a: &Cyc, b: &Cyc) -> Cyc {
        a.mul(b)
    }
    fn neg(&self, a: &Cyc) -> Cyc {
        a.neg()
    }
    fn is_zero(&self, a: &Cyc) -> bool {
        a.is_zero()
    }
}

impl Field for CycField {
    fn inv(&self, a: &Cyc) -> Option<Cyc> {
        a.inv()
    }
}

// --- serialization -------------------------------------------------------
//
// {"order": N, "coeffs": [["num","den"], ...]} with decimal strings, so
// arbitrary-precision values survive JSON round-trips losslessly.

fn ratio_to_strings(r: &BigRational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

fn ratio_from_strings(num: &str, den: &str) -> Result<BigRational, String> {
    let n: BigInt = num.parse().map_err(|_| format!("bad numerator {:?}", num))?;
    let d: BigInt = den.parse().map_err(|_| format!("bad denominator {:?}", den))?;
    if d.is_zero() {
        return Err("zero denominator".to_string());
    }
    Ok(BigRational::new(n, d))
}

impl Serialize for Cyc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            order: u32,
            coeffs: Vec<(String, String)>,
            #[serde(skip)]
            _p: std::marker::PhantomData<&'a ()>,
        }
        let coeffs = self.coeffs.iter().map(ratio_to_strings).collect();
        Wire { order: self.order, coeffs, _p: std::marker::PhantomData }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Cyc, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            order: u32,
            coeffs: Vec<(String, String)>,
        }
        let wire = Wire::deserialize(deserializer)?;
        if wire.order < 1 || wire.order > MAX_ORDER {
            return Err(D::Error::custom(format!("order {} out of range", wire.order)));
        }
        let mut coeffs = Vec::with_capacity(wire.coeffs.len());
        for (n, d) in &wire.coeffs {
            coeffs.push(ratio_from_strings(n, d).map_err(D::Error::custom)?);
        }
        if coeffs.len() > phi(wire.order) as usize {
            return Err(D::Error::custom(format!(
                "expected at most {} coefficients for order {}",
                phi(wire.order),
                wire.order
            )));
        }
        Ok(Cyc::from_coeffs(wire.order, coeffs))
    }
}
