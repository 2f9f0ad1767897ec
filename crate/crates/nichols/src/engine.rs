//! The graded engine: degree blocks, quantum symmetrizer matrices, Hilbert
//! series, and defining relations.
//!
//! Degree k of the tensor algebra splits into blocks of words sharing a
//! degree key (multidegree, label sum, or group element); the braiding and
//! hence every braid-group lift preserves blocks, so the symmetrizer is
//! computed block by block.  Two construction routes exist and are tested
//! against each other:
//!
//! * the *sum route* walks the prefix tree of canonical reduced words over
//!   all of S_k, reusing partial products along the tree (factorial node
//!   count — used for small k);
//! * the *staged route* uses the coset factorization of the symmetrizer
//!   into one-strand shuffle sums, sym_k = Sh_1 o Sh_2 o ... o Sh_(k-1)
//!   with Sh_j acting on the first j + 1 strands, whose cost is polynomial
//!   in k per block entry.
//!
//! Ranks of the block matrices give graded dimensions; kernels give the
//! defining relations in each degree.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::braiding::{BraidOp, BraidedSpace, DegreeKey};
use crate::cyclotomic::CycField;
use crate::elements::{is_primitive, TensorElem};
use crate::error::{EngineError, Result};
use crate::laurent::{LaurentPoly, LaurentRing, RatFunc, RatFuncField};
use crate::linalg::{bareiss_rank, kernel_basis, mat_mul, rank, Matrix, PrimeEval, SplitMix64};
use crate::perm::{shuffles, Perm};
use crate::ring::Ring;

/// Largest strand count handled by the factorial sum route; beyond it the
/// staged route takes over.
const SUM_ROUTE_MAX: usize = 7;

/// One degree block: all words of a degree sharing a key, sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub key: DegreeKey,
    pub words: Vec<Vec<u32>>,
}

/// The blocks of degree 0: one block holding the empty word.
pub fn unit_blocks<R: Ring>(space: &BraidedSpace<R>) -> Vec<Block> {
    vec![Block { key: space.labels.key_of_word(space.dim, &[]), words: vec![Vec::new()] }]
}

/// Extend the blocks of degree k to degree k + 1 by appending every letter,
/// regrouping by key.  Fails once any single block outgrows `cap`.
pub fn extend_blocks<R: Ring>(
    space: &BraidedSpace<R>,
    prev: &[Block],
    cap: usize,
) -> Result<Vec<Block>> {
    let mut grouped: std::collections::BTreeMap<DegreeKey, Vec<Vec<u32>>> =
        std::collections::BTreeMap::new();
    for block in prev {
        for w in &block.words {
            for l in 0..space.dim as u32 {
                let mut nw = w.clone();
                nw.push(l);
                let key = space.labels.key_of_word(space.dim, &nw);
                let entry = grouped.entry(key).or_default();
                entry.push(nw);
                if entry.len() > cap {
                    return Err(EngineError::BlockTooLarge { size: entry.len(), cap });
                }
            }
        }
    }
    Ok(grouped
        .into_iter()
        .map(|(key, mut words)| {
            words.sort();
            Block { key, words }
        })
        .collect())
}

/// All blocks of a given degree.
pub fn blocks_for_degree<R: Ring>(
    space: &BraidedSpace<R>,
    degree: usize,
    cap: usize,
) -> Result<Vec<Block>> {
    let mut blocks = unit_blocks(space);
    for _ in 0..degree {
        blocks = extend_blocks(space, &blocks, cap)?;
    }
    Ok(blocks)
}

// --- operators restricted to a block -------------------------------------

/// A monomial operator on a block: position p maps to target[p] with the
/// given scale.
struct MonoOp<E> {
    target: Vec<u32>,
    scale: Vec<E>,
}

impl<E: Clone> MonoOp<E> {
    fn identity<R: Ring<Elem = E>>(ring: &R, size: usize) -> MonoOp<E> {
        MonoOp { target: (0..size as u32).collect(), scale: vec![ring.one(); size] }
    }
}

/// letter o op: apply `op` first, then the letter operator.
fn compose_letter<R: Ring>(ring: &R, letter: &MonoOp<R::Elem>, op: &MonoOp<R::Elem>) -> MonoOp<R::Elem> {
    let n = op.target.len();
    let mut target = Vec::with_capacity(n);
    let mut scale = Vec::with_capacity(n);
    for p in 0..n {
        let mid = op.target[p] as usize;
        target.push(letter.target[mid]);
        scale.push(ring.mul(&op.scale[p], &letter.scale[mid]));
    }
    MonoOp { target, scale }
}

/// The braiding letter at strand position `pos` (1-based) restricted to a
/// block of a monomial braiding.
fn letter_op_monomial<R: Ring>(
    space: &BraidedSpace<R>,
    block: &Block,
    index: &HashMap<&[u32], usize>,
    pos: usize,
) -> MonoOp<R::Elem> {
    let BraidOp::Monomial(braid) = &space.op else {
        unreachable!("monomial route on a dense braiding");
    };
    let mut target = Vec::with_capacity(block.words.len());
    let mut scale = Vec::with_capacity(block.words.len());
    for w in &block.words {
        let (a, b, s) = braid.entry(w[pos - 1] as usize, w[pos] as usize);
        let mut nw = w.clone();
        nw[pos - 1] = a as u32;
        nw[pos] = b as u32;
        let t = *index.get(nw.as_slice()).expect("braiding preserves blocks");
        target.push(t as u32);
        scale.push(s.clone());
    }
    MonoOp { target, scale }
}

/// Matsumoto lift of a permutation as a block operator, by composing letter
/// operators along the canonical reduced word, rightmost first.
fn lift_op<R: Ring>(ring: &R, letters: &[MonoOp<R::Elem>], size: usize, p: &Perm) -> MonoOp<R::Elem> {
    let mut op = MonoOp::identity(ring, size);
    for &letter in p.reduced_word().iter().rev() {
        op = compose_letter(ring, &letters[letter - 1], &op);
    }
    op
}

/// Sum route: accumulate the lift of every permutation of S_k by walking
/// the prefix tree of canonical reduced words, sharing partial products
/// along each branch.
fn symmetrizer_sum_route<R: Ring>(
    ring: &R,
    letters: &[MonoOp<R::Elem>],
    k: usize,
    size: usize,
) -> Matrix<R::Elem> {
    let mut acc = Matrix::new(size, size, ring.zero());
    fn walk<R: Ring>(
        ring: &R,
        letters: &[MonoOp<R::Elem>],
        k: usize,
        p: &Perm,
        op: &MonoOp<R::Elem>,
        acc: &mut Matrix<R::Elem>,
    ) {
        for c in 0..op.target.len() {
            let r = op.target[c] as usize;
            let v = ring.add(acc.get(r, c), &op.scale[c]);
            acc.set(r, c, v);
        }
        for i in 1..k {
            if p.is_left_descent(i) {
                continue;
            }
            let child = Perm::transposition(k, i).compose(p);
            if child.min_left_descent() == Some(i) {
                let child_op = compose_letter(ring, &letters[i - 1], op);
                walk(ring, letters, k, &child, &child_op, acc);
            }
        }
    }
    let id = Perm::identity(k);
    let id_op = MonoOp::identity(ring, size);
    walk(ring, letters, k, &id, &id_op, &mut acc);
    acc
}

/// Staged route: sym_k = Sh_1 o ... o Sh_(k-1), computed right to left as
/// a matrix product, where Sh_j is the sum of the lifts of the inverses of
/// the (j, 1)-shuffles embedded on the first j + 1 strands.
fn symmetrizer_staged_route<R: Ring>(
    ring: &R,
    letters: &[MonoOp<R::Elem>],
    k: usize,
    size: usize,
) -> Matrix<R::Elem> {
    let stage_ops = |j: usize| -> Vec<MonoOp<R::Elem>> {
        shuffles(j, 1)
            .into_iter()
            .map(|tau| {
                let inv = tau.inverse();
                // Embed into S_k fixing strands j + 2 ..= k.
                let mut images: Vec<usize> = (0..k).collect();
                for (t, x) in images.iter_mut().take(j + 1).enumerate() {
                    *x = inv.apply(t);
                }
                lift_op(ring, letters, size, &Perm::from_images_0based(images))
            })
            .collect()
    };
    // M starts as the matrix of Sh_(k-1) and absorbs the earlier stages.
    let mut m = Matrix::new(size, size, ring.zero());
    for op in stage_ops(k - 1) {
        for b in 0..size {
            let r = op.target[b] as usize;
            let v = ring.add(m.get(r, b), &op.scale[b]);
            m.set(r, b, v);
        }
    }
    for j in (1..k - 1).rev() {
        let mut next = Matrix::new(size, size, ring.zero());
        for op in stage_ops(j) {
            for b in 0..size {
                let r = op.target[b] as usize;
                let s = &op.scale[b];
                for c in 0..size {
                    let v = ring.mul_add(next.get(r, c), s, m.get(b, c));
                    next.set(r, c, v);
                }
            }
        }
        m = next;
    }
    m
}

/// Dense analogue of the staged route, for braidings without monomial
/// structure: letter operators are block matrices.
fn symmetrizer_dense<R: Ring>(space: &BraidedSpace<R>, block: &Block, k: usize) -> Matrix<R::Elem> {
    let ring = &space.ring;
    let size = block.words.len();
    let index: HashMap<&[u32], usize> =
        block.words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let BraidOp::Dense(cm) = &space.op else {
        unreachable!("dense route on a monomial braiding");
    };
    let d = space.dim;
    let letter_matrix = |pos: usize| -> Matrix<R::Elem> {
        let mut m = Matrix::new(size, size, ring.zero());
        for (col, w) in block.words.iter().enumerate() {
            let c = w[pos - 1] as usize * d + w[pos] as usize;
            for r in 0..d * d {
                let v = cm.get(r, c);
                if ring.is_zero(v) {
                    continue;
                }
                let mut nw = w.clone();
                nw[pos - 1] = (r / d) as u32;
                nw[pos] = (r % d) as u32;
                let row = *index.get(nw.as_slice()).expect("braiding preserves blocks");
                let acc = ring.add(m.get(row, col), v);
                m.set(row, col, acc);
            }
        }
        m
    };
    let letters: Vec<Matrix<R::Elem>> = (1..k).map(letter_matrix).collect();
    let lift_matrix = |p: &Perm| -> Matrix<R::Elem> {
        let mut m = crate::linalg::identity(ring, size);
        for &letter in p.reduced_word().iter() {
            m = mat_mul(ring, &m, &letters[letter - 1]);
        }
        m
    };
    let stage_matrix = |j: usize| -> Matrix<R::Elem> {
        let mut sum = Matrix::new(size, size, ring.zero());
        for tau in shuffles(j, 1) {
            let inv = tau.inverse();
            let mut images: Vec<usize> = (0..k).collect();
            for (t, x) in images.iter_mut().take(j + 1).enumerate() {
                *x = inv.apply(t);
            }
            let lm = lift_matrix(&Perm::from_images_0based(images));
            for r in 0..size {
                for c in 0..size {
                    let v = ring.add(sum.get(r, c), lm.get(r, c));
                    sum.set(r, c, v);
                }
            }
        }
        sum
    };
    let mut m = stage_matrix(k - 1);
    for j in (1..k - 1).rev() {
        m = mat_mul(ring, &stage_matrix(j), &m);
    }
    m
}

/// The quantum symmetrizer restricted to one block, as a square matrix over
/// the scalar ring (rows and columns indexed by the block's sorted words).
pub fn symmetrizer_matrix<R: Ring>(space: &BraidedSpace<R>, block: &Block) -> Matrix<R::Elem> {
    let ring = &space.ring;
    let size = block.words.len();
    let k = block.words.first().map(|w| w.len()).unwrap_or(0);
    if k <= 1 {
        return crate::linalg::identity(ring, size);
    }
    match &space.op {
        BraidOp::Monomial(_) => {
            let index: HashMap<&[u32], usize> =
                block.words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
            let letters: Vec<MonoOp<R::Elem>> =
                (1..k).map(|pos| letter_op_monomial(space, block, &index, pos)).collect();
            if k <= SUM_ROUTE_MAX {
                symmetrizer_sum_route(ring, &letters, k, size)
            } else {
                symmetrizer_staged_route(ring, &letters, k, size)
            }
        }
        BraidOp::Dense(_) => symmetrizer_dense(space, block, k),
    }
}

// --- Hilbert series -------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HilbertSeries {
    /// Graded dimensions from degree 0 up to the last degree computed.
    pub dims: Vec<u64>,
    /// True when two consecutive zero dimensions were seen, which for an
    /// algebra generated in degree one pins the series down completely.
    pub terminated: bool,
    /// Total dimension; present only when the series terminated.
    pub total: Option<u64>,
}

/// Compute graded dimensions degree by degree as ranks of block
/// symmetrizer matrices, using `rank_of` on each block matrix.  Stops at
/// `kmax` or after two consecutive zero degrees, whichever comes first.
pub fn hilbert_series<R, F>(
    space: &BraidedSpace<R>,
    kmax: usize,
    cap: usize,
    rank_of: F,
) -> Result<HilbertSeries>
where
    R: Ring,
    F: Fn(&Matrix<R::Elem>) -> usize + Sync,
{
    let mut dims: Vec<u64> = vec![1];
    let mut blocks = unit_blocks(space);
    let mut zero_run = 0usize;
    for _k in 1..=kmax {
        blocks = extend_blocks(space, &blocks, cap)?;
        let dim: u64 = blocks
            .par_iter()
            .map(|b| rank_of(&symmetrizer_matrix(space, b)) as u64)
            .sum();
        dims.push(dim);
        if dim == 0 {
            zero_run += 1;
            if zero_run >= 2 {
                break;
            }
        } else {
            zero_run = 0;
        }
    }
    let terminated = zero_run >= 2;
    let total = terminated.then(|| dims.iter().sum());
    Ok(HilbertSeries { dims, terminated, total })
}

/// Rank function for root-of-unity scalars: exact row reduction.
pub fn rou_rank(field: &CycField) -> impl Fn(&Matrix<crate::cyclotomic::Cyc>) -> usize + Sync + '_ {
    move |m| rank(field, m)
}

/// Rank function for the generic parameter: fraction-free elimination over
/// Z[q, q^-1].
pub fn generic_exact_rank() -> impl Fn(&Matrix<LaurentPoly>) -> usize + Sync {
    |m| bareiss_rank(&LaurentRing, m)
}

/// Probabilistic rank function: evaluate q at a seeded random root of unity
/// of large prime order in a prime field and row-reduce there.  The result
/// can only undershoot the generic rank, on a vanishing locus of parameter
/// choices; callers opt in explicitly.
pub fn generic_probabilistic_rank(order: u64, seed: u64) -> impl Fn(&Matrix<LaurentPoly>) -> usize + Sync {
    let ev = PrimeEval::for_order(order);
    let mut rng = SplitMix64::new(seed);
    let x = ev.random_point(&mut rng);
    let field = ev.field;
    move |m| {
        let mm = m.map(|p| p.eval(&field, &x));
        rank(&field, &mm)
    }
}

// --- Hilbert series factorization ----------------------------------------

/// One factor 1 + t^h + t^(2h) + ... + t^((l-1) h), i.e. the h-stretched
/// l-term geometric sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GeometricFactor {
    pub stretch: usize,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HilbertFactorization {
    pub factors: Vec<GeometricFactor>,
    /// Leftover polynomial coefficients when the greedy factorization gets
    /// stuck; `None` means fully factored.
    pub remainder: Option<Vec<u64>>,
}

/// Greedily factor a terminating Hilbert series into stretched geometric
/// sums.  Candidates are scanned in lexicographic (stretch, length) order
/// and accepted only when division is exact *and* the quotient has no
/// negative coefficient — the latter rejects spurious divisors like
/// (1 + t + t^2) | (1 + t^2 + t^4) whose quotient is not a dimension
/// sequence.
pub fn factor_hilbert(dims: &[u64]) -> HilbertFactorization {
    let mut p: Vec<i128> = dims.iter().map(|&d| d as i128).collect();
    while p.last() == Some(&0) {
        p.pop();
    }
    let mut factors = Vec::new();
    if p.is_empty() {
        return HilbertFactorization { factors, remainder: Some(vec![]) };
    }
    'outer: while p.len() > 1 {
        let deg = p.len() - 1;
        for stretch in 1..=deg {
            for length in 2..=deg / stretch + 1 {
                if let Some(q) = divide_geometric(&p, stretch, length) {
                    factors.push(GeometricFactor { stretch, length });
                    p = q;
                    continue 'outer;
                }
            }
        }
        // Nothing divides: report the leftover.
        return HilbertFactorization {
            factors,
            remainder: Some(p.iter().map(|&c| c as u64).collect()),
        };
    }
    let remainder = if p == vec![1] { None } else { Some(p.iter().map(|&c| c as u64).collect()) };
    HilbertFactorization { factors, remainder }
}

/// Divide by 1 + t^h + ... + t^((l-1)h); `Some(quotient)` only when the
/// division is exact with all quotient coefficients nonnegative.
fn divide_geometric(p: &[i128], h: usize, l: usize) -> Option<Vec<i128>> {
    let dd = h * (l - 1);
    if p.len() <= dd {
        return None;
    }
    let qlen = p.len() - dd;
    let mut rem = p.to_vec();
    let mut quot = vec![0i128; qlen];
    for i in 0..qlen {
        let c = rem[i];
        if c < 0 {
            return None;
        }
        quot[i] = c;
        if c != 0 {
            for t in 0..l {
                rem[i + t * h] -= c;
            }
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return None;
    }
    Some(quot)
}

// --- defining relations ---------------------------------------------------

/// A kernel element of the degree-`degree` symmetrizer: a linear
/// combination of tensor words, normalized so relations form a canonical
/// basis per block.
#[derive(Clone, Debug)]
pub struct Relation<R: Ring> {
    pub degree: usize,
    pub key: DegreeKey,
    pub terms: Vec<(Vec<u32>, R::Elem)>,
    /// Whether the element is primitive in the tensor algebra; `None` when
    /// the check was skipped.
    pub primitive: Option<bool>,
}

/// Defining relations in one degree over root-of-unity scalars: kernel
/// bases of the block symmetrizers, RREF-normalized, with a primitivity
/// flag per relation.
pub fn relations_rou(
    space: &BraidedSpace<CycField>,
    degree: usize,
    cap: usize,
) -> Result<Vec<Relation<CycField>>> {
    let blocks = blocks_for_degree(space, degree, cap)?;
    let per_block: Vec<Vec<Relation<CycField>>> = blocks
        .par_iter()
        .map(|block| {
            let m = symmetrizer_matrix(space, block);
            kernel_basis(&space.ring, &m)
                .into_iter()
                .map(|v| {
                    let terms: Vec<(Vec<u32>, crate::cyclotomic::Cyc)> = block
                        .words
                        .iter()
                        .zip(v.iter())
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(w, c)| (w.clone(), c.clone()))
                        .collect();
                    let elem = TensorElem::from_terms(&space.ring, degree, terms.clone());
                    let primitive = Some(is_primitive(space, &elem));
                    Relation { degree, key: block.key.clone(), terms, primitive }
                })
                .collect()
        })
        .collect();
    Ok(per_block.into_iter().flatten().collect())
}

/// Defining relations in one degree for the generic parameter: the block
/// symmetrizers live over Z[q, q^-1]; kernels are computed over the
/// fraction field Q(q).  Primitivity is checked after clearing
/// denominators (a unit rescaling, so it does not affect the answer).
pub fn relations_generic(
    space: &BraidedSpace<LaurentRing>,
    degree: usize,
    cap: usize,
) -> Result<Vec<Relation<RatFuncField>>> {
    let field = RatFuncField;
    let blocks = blocks_for_degree(space, degree, cap)?;
    let per_block: Vec<Vec<Relation<RatFuncField>>> = blocks
        .par_iter()
        .map(|block| {
            let m = symmetrizer_matrix(space, block);
            let mf = m.map(|p| RatFunc::from_poly(p.clone()));
            kernel_basis(&field, &mf)
                .into_iter()
                .map(|v| {
                    let terms: Vec<(Vec<u32>, RatFunc)> = block
                        .words
                        .iter()
                        .zip(v.iter())
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(w, c)| (w.clone(), c.clone()))
                        .collect();
                    let primitive = Some(relation_is_primitive_generic(space, degree, &terms));
                    Relation { degree, key: block.key.clone(), terms, primitive }
                })
                .collect()
        })
        .collect();
    Ok(per_block.into_iter().flatten().collect())
}

/// Clear denominators and run the primitivity check over Z[q, q^-1].
fn relation_is_primitive_generic(
    space: &BraidedSpace<LaurentRing>,
    degree: usize,
    terms: &[(Vec<u32>, RatFunc)],
) -> bool {
    let mut scaled: Vec<(Vec<u32>, RatFunc)> = terms.to_vec();
    let field = RatFuncField;
    loop {
        let Some(den) = scaled.iter().map(|(_, c)| c.den.clone()).find(|d| !d.is_one()) else {
            break;
        };
        let f = RatFunc::from_poly(den);
        for (_, c) in scaled.iter_mut() {
            *c = field.mul(c, &f);
        }
    }
    let elem = TensorElem::from_terms(
        &LaurentRing,
        degree,
        scaled.into_iter().map(|(w, c)| (w, c.num)),
    );
    is_primitive(space, &elem)
}
