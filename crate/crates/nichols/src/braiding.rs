//! Braided vector spaces: the input formats, their validation, and the
//! internal operator form the tensor-algebra machinery consumes.
//!
//! Four input kinds are supported:
//!
//! * `diagonal_rou` — diagonal braiding c(v_i (x) v_j) = q_ij v_j (x) v_i
//!   with q_ij = zeta_N^(e_ij) for a declared order N;
//! * `diagonal_generic` — diagonal with q_ij = q^(e_ij) for a formal
//!   parameter q, exponents in Z;
//! * `matrix_rou` — an arbitrary d^2 x d^2 braiding matrix over Q(zeta_N),
//!   checked against the Yang-Baxter equation and for invertibility at
//!   construction;
//! * `group_yd` — the conjugacy-class braiding attached to a finite
//!   permutation group, a class, and a linear character of the
//!   centralizer of its representative.
//!
//! Internally a braiding is either *monomial* — every c(v_i (x) v_j) is a
//! scalar times a single basis tensor, the case for diagonal and
//! conjugacy-class braidings — or a dense matrix.  Monomial form is kept
//! explicit because the operator algebra on it is radically cheaper.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{Cyc, CycField, MAX_ORDER};
use crate::error::{EngineError, Result};
use crate::group::{close_character, PermGroup};
use crate::laurent::{LaurentPoly, LaurentRing};
use crate::linalg::{kernel_basis, mat_mul, Matrix};
use crate::perm::Perm;
use crate::ring::{Field, Ring};

// --- wire format ----------------------------------------------------------

/// A matrix entry on the wire: either a plain integer or a full cyclotomic
/// element (which must live at an order dividing the declared one).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CycEntry {
    Int(i64),
    Exact(Cyc),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterValue {
    pub element: Perm,
    pub exponent: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterInput {
    /// Values are zeta_order^exponent.
    pub order: u32,
    pub values: Vec<CharacterValue>,
}

/// The parsed form of a braided-space description.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BraidingInput {
    DiagonalRou {
        order: u32,
        exponents: Vec<Vec<i64>>,
    },
    DiagonalGeneric {
        exponents: Vec<Vec<i64>>,
    },
    MatrixRou {
        order: u32,
        dim: usize,
        /// Row-major d^2 x d^2; entry[a*d+b][i*d+j] is the coefficient of
        /// v_a (x) v_b in c(v_i (x) v_j).
        entries: Vec<Vec<CycEntry>>,
        /// Optional integer multidegree per basis vector; omitted means
        /// the whole tensor algebra is treated as one block per degree.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<Vec<i64>>>,
    },
    GroupYd {
        points: usize,
        generators: Vec<Perm>,
        class_rep: Perm,
        character: CharacterInput,
    },
}

impl BraidingInput {
    pub fn from_json(text: &str) -> Result<BraidingInput> {
        serde_json::from_str(text)
            .map_err(|e| EngineError::InvalidInput(format!("cannot parse braiding: {}", e)))
    }
}

// --- internal operator form ----------------------------------------------

/// Monomial braiding data: c(v_i (x) v_j) = scale[i*d+j] * v_a (x) v_b
/// with (a, b) = target[i*d+j].
#[derive(Clone, Debug)]
pub struct MonomialBraid<R: Ring> {
    pub dim: usize,
    pub target: Vec<(u32, u32)>,
    pub scale: Vec<R::Elem>,
}

impl<R: Ring> MonomialBraid<R> {
    pub fn entry(&self, i: usize, j: usize) -> (usize, usize, &R::Elem) {
        let (a, b) = self.target[i * self.dim + j];
        (a as usize, b as usize, &self.scale[i * self.dim + j])
    }
}

#[derive(Clone, Debug)]
pub enum BraidOp<R: Ring> {
    Monomial(MonomialBraid<R>),
    Dense(Matrix<R::Elem>),
}

/// How basis vectors are graded, which determines the block decomposition
/// of each tensor degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeLabels {
    /// Basis vector i carries the i-th unit multidegree (diagonal case).
    Standard,
    /// Explicit integer vectors, added along a tensor word.
    Vectors(Vec<Vec<i64>>),
    /// Group elements, multiplied in word order (conjugacy-class case).
    GroupElems(Vec<Perm>),
    /// No grading: one block per degree.
    None,
}

/// Key identifying the block of a tensor word.  `Ord` gives blocks a
/// deterministic processing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegreeKey {
    Counts(Vec<u32>),
    Vector(Vec<i64>),
    Group(Perm),
    Unit,
}

impl DegreeLabels {
    pub fn key_of_word(&self, dim: usize, word: &[u32]) -> DegreeKey {
        match self {
            DegreeLabels::Standard => {
                let mut counts = vec![0u32; dim];
                for &l in word {
                    counts[l as usize] += 1;
                }
                DegreeKey::Counts(counts)
            }
            DegreeLabels::Vectors(vs) => {
                let r = vs.first().map(|v| v.len()).unwrap_or(0);
                let mut sum = vec![0i64; r];
                for &l in word {
                    for (s, x) in sum.iter_mut().zip(&vs[l as usize]) {
                        *s += x;
                    }
                }
                DegreeKey::Vector(sum)
            }
            DegreeLabels::GroupElems(hs) => {
                let points = hs.first().map(|h| h.n()).unwrap_or(0);
                let mut prod = Perm::identity(points);
                for &l in word {
                    prod = prod.compose(&hs[l as usize]);
                }
                DegreeKey::Group(prod)
            }
            DegreeLabels::None => DegreeKey::Unit,
        }
    }
}

/// A validated braided vector space over the scalar ring `R`.
#[derive(Clone, Debug)]
pub struct BraidedSpace<R: Ring> {
    pub ring: R,
    pub dim: usize,
    pub op: BraidOp<R>,
    pub labels: DegreeLabels,
}

impl<R: Ring> BraidedSpace<R> {
    /// Build from monomial data, checking invertibility, grading
    /// compatibility, and the Yang-Baxter equation on X (x) X (x) X.
    pub fn new_monomial(
        ring: R,
        braid: MonomialBraid<R>,
        labels: DegreeLabels,
    ) -> Result<BraidedSpace<R>> {
        let d = braid.dim;
        if d == 0 || braid.target.len() != d * d || braid.scale.len() != d * d {
            return Err(EngineError::InvalidInput("malformed monomial braiding".into()));
        }
        // Invertibility: the pair map must be a bijection and every scale
        // nonzero (all monomial scales produced here are units).
        let mut seen = vec![false; d * d];
        for idx in 0..d * d {
            let (a, b) = braid.target[idx];
            let t = a as usize * d + b as usize;
            if a as usize >= d || b as usize >= d || seen[t] {
                return Err(EngineError::NotInvertible);
            }
            seen[t] = true;
            if ring.is_zero(&braid.scale[idx]) {
                return Err(EngineError::NotInvertible);
            }
        }
        // Grading: targets must carry the same two-letter degree as sources.
        for i in 0..d {
            for j in 0..d {
                let (a, b, _) = braid.entry(i, j);
                let src = labels.key_of_word(d, &[i as u32, j as u32]);
                let dst = labels.key_of_word(d, &[a as u32, b as u32]);
                if src != dst {
                    return Err(EngineError::InvalidInput(format!(
                        "degree labels are not preserved: ({}, {}) -> ({}, {})",
                        i, j, a, b
                    )));
                }
            }
        }
        // Yang-Baxter on basis triples, both sides in monomial form.
        let apply = |pos: usize, state: (usize, usize, usize, R::Elem)| {
            let (x, y, z, s) = state;
            if pos == 0 {
                let (a, b, c) = braid.entry(x, y);
                (a, b, z, ring.mul(&s, c))
            } else {
                let (a, b, c) = braid.entry(y, z);
                (x, a, b, ring.mul(&s, c))
            }
        };
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let start = (x, y, z, ring.one());
                    let lhs = apply(0, apply(1, apply(0, start.clone())));
                    let rhs = apply(1, apply(0, apply(1, start)));
                    if lhs.0 != rhs.0 || lhs.1 != rhs.1 || lhs.2 != rhs.2 || lhs.3 != rhs.3 {
                        return Err(EngineError::YangBaxterViolation(format!(
                            "basis triple ({}, {}, {})",
                            x, y, z
                        )));
                    }
                }
            }
        }
        Ok(BraidedSpace { ring, dim: d, op: BraidOp::Monomial(braid), labels })
    }
}

impl<F: Field> BraidedSpace<F> {
    /// Build from a dense braiding matrix over a field.  Detects monomial
    /// structure (at most one nonzero per column) and lowers to the fast
    /// representation when possible.
    pub fn new_dense(
        field: F,
        dim: usize,
        matrix: Matrix<F::Elem>,
        labels: DegreeLabels,
    ) -> Result<BraidedSpace<F>> {
        let d2 = dim * dim;
        if dim == 0 || matrix.rows() != d2 || matrix.cols() != d2 {
            return Err(EngineError::InvalidInput(format!(
                "braiding matrix must be {} x {}",
                d2, d2
            )));
        }
        // Monomial detection.
        let mut monomial = true;
        'cols: for col in 0..d2 {
            let mut nonzero = 0;
            for row in 0..d2 {
                if !field.is_zero(matrix.get(row, col)) {
                    nonzero += 1;
                    if nonzero > 1 {
                        monomial = false;
                        break 'cols;
                    }
                }
            }
            if nonzero == 0 {
                return Err(EngineError::NotInvertible);
            }
        }
        if monomial {
            let mut target = Vec::with_capacity(d2);
            let mut scale = Vec::with_capacity(d2);
            for col in 0..d2 {
                let row = (0..d2).find(|&r| !field.is_zero(matrix.get(r, col))).unwrap();
                target.push(((row / dim) as u32, (row % dim) as u32));
                scale.push(matrix.get(row, col).clone());
            }
            return BraidedSpace::new_monomial(
                field,
                MonomialBraid { dim, target, scale },
                labels,
            );
        }
        // Invertibility via the kernel: trivial kernel means full rank.
        if !kernel_basis(&field, &matrix).is_empty() {
            return Err(EngineError::NotInvertible);
        }
        // Grading compatibility entry by entry.
        for col in 0..d2 {
            let src = labels.key_of_word(dim, &[(col / dim) as u32, (col % dim) as u32]);
            for row in 0..d2 {
                if field.is_zero(matrix.get(row, col)) {
                    continue;
                }
                let dst = labels.key_of_word(dim, &[(row / dim) as u32, (row % dim) as u32]);
                if src != dst {
                    return Err(EngineError::InvalidInput(format!(
                        "degree labels are not preserved by matrix entry ({}, {})",
                        row, col
                    )));
                }
            }
        }
        // Yang-Baxter on X^(x)3 by dense multiplication.
        let c12 = extend_left(&field, &matrix, dim);
        let c23 = extend_right(&field, &matrix, dim);
        let lhs = mat_mul(&field, &mat_mul(&field, &c12, &c23), &c12);
        let rhs = mat_mul(&field, &mat_mul(&field, &c23, &c12), &c23);
        if lhs != rhs {
            return Err(EngineError::YangBaxterViolation(
                "dense matrix fails on X^(x)3".into(),
            ));
        }
        Ok(BraidedSpace { ring: field, dim, op: BraidOp::Dense(matrix), labels })
    }
}

/// c (x) id on X^(x)3, as a d^3 x d^3 matrix.
fn extend_left<F: Field>(field: &F, c: &Matrix<F::Elem>, d: usize) -> Matrix<F::Elem> {
    let d3 = d * d * d;
    let mut m = Matrix::new(d3, d3, field.zero());
    for row in 0..d * d {
        for col in 0..d * d {
            let v = c.get(row, col);
            if field.is_zero(v) {
                continue;
            }
            for k in 0..d {
                m.set(row * d + k, col * d + k, v.clone());
            }
        }
    }
    m
}

/// id (x) c on X^(x)3.
fn extend_right<F: Field>(field: &F, c: &Matrix<F::Elem>, d: usize) -> Matrix<F::Elem> {
    let d3 = d * d * d;
    let mut m = Matrix::new(d3, d3, field.zero());
    for row in 0..d * d {
        for col in 0..d * d {
            let v = c.get(row, col);
            if field.is_zero(v) {
                continue;
            }
            for i in 0..d {
                m.set(i * d * d + row, i * d * d + col, v.clone());
            }
        }
    }
    m
}

// --- builders for each input kind ----------------------------------------

fn check_square(exponents: &[Vec<i64>]) -> Result<usize> {
    let n = exponents.len();
    if n == 0 || exponents.iter().any(|r| r.len() != n) {
        return Err(EngineError::InvalidInput(
            "exponent matrix must be square and nonempty".into(),
        ));
    }
    Ok(n)
}

/// Diagonal braiding with q_ij = zeta_order^(e_ij).
pub fn diagonal_rou_space(order: u32, exponents: &[Vec<i64>]) -> Result<BraidedSpace<CycField>> {
    if order == 0 || order > MAX_ORDER {
        return Err(EngineError::InvalidInput(format!(
            "root-of-unity order must be in 1..={}",
            MAX_ORDER
        )));
    }
    let n = check_square(exponents)?;
    let field = CycField::new(order);
    let mut target = Vec::with_capacity(n * n);
    let mut scale = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            target.push((j as u32, i as u32));
            scale.push(field.zeta_pow(exponents[i][j]));
        }
    }
    BraidedSpace::new_monomial(
        field,
        MonomialBraid { dim: n, target, scale },
        DegreeLabels::Standard,
    )
}

/// Diagonal braiding with q_ij = q^(e_ij) for a formal parameter q.
pub fn diagonal_generic_space(exponents: &[Vec<i64>]) -> Result<BraidedSpace<LaurentRing>> {
    let n = check_square(exponents)?;
    let mut target = Vec::with_capacity(n * n);
    let mut scale = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            target.push((j as u32, i as u32));
            scale.push(LaurentPoly::monomial(exponents[i][j]));
        }
    }
    BraidedSpace::new_monomial(
        LaurentRing,
        MonomialBraid { dim: n, target, scale },
        DegreeLabels::Standard,
    )
}

/// Dense braiding matrix over Q(zeta_order), with optional multidegree
/// labels.
pub fn matrix_rou_space(
    order: u32,
    dim: usize,
    entries: &[Vec<CycEntry>],
    labels: Option<&[Vec<i64>]>,
) -> Result<BraidedSpace<CycField>> {
    if order == 0 || order > MAX_ORDER {
        return Err(EngineError::InvalidInput(format!(
            "root-of-unity order must be in 1..={}",
            MAX_ORDER
        )));
    }
    let d2 = dim * dim;
    if dim == 0 || entries.len() != d2 || entries.iter().any(|r| r.len() != d2) {
        return Err(EngineError::InvalidInput(format!(
            "entries must form a {} x {} matrix",
            d2, d2
        )));
    }
    let field = CycField::new(order);
    let mut m = Matrix::new(d2, d2, field.zero());
    for (r, row) in entries.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            let v = match e {
                CycEntry::Int(k) => field.from_int(*k),
                CycEntry::Exact(cyc) => {
                    if order % cyc.order() != 0 {
                        return Err(EngineError::InvalidInput(format!(
                            "entry of order {} does not embed into order {}",
                            cyc.order(),
                            order
                        )));
                    }
                    cyc.embed(order)
                }
            };
            m.set(r, c, v);
        }
    }
    let labels = match labels {
        None => DegreeLabels::None,
        Some(ls) => {
            if ls.len() != dim {
                return Err(EngineError::InvalidInput(
                    "one label vector per basis element required".into(),
                ));
            }
            let r = ls.first().map(|v| v.len()).unwrap_or(0);
            if ls.iter().any(|v| v.len() != r) {
                return Err(EngineError::InvalidInput(
                    "label vectors must share a common length".into(),
                ));
            }
            DegreeLabels::Vectors(ls.to_vec())
        }
    };
    BraidedSpace::new_dense(field, dim, m, labels)
}

/// Conjugacy-class braiding: basis indexed by the class of `class_rep`,
/// braided through the character of the centralizer.
pub fn group_yd_space(
    points: usize,
    generators: &[Perm],
    class_rep: &Perm,
    character: &CharacterInput,
) -> Result<BraidedSpace<CycField>> {
    if character.order == 0 || character.order > MAX_ORDER {
        return Err(EngineError::InvalidInput(format!(
            "character order must be in 1..={}",
            MAX_ORDER
        )));
    }
    let group = PermGroup::new(points, generators.to_vec())?;
    if !group.contains(class_rep) {
        return Err(EngineError::InvalidInput(
            "class representative is not in the generated group".into(),
        ));
    }
    let class = group.conjugacy_class(class_rep)?;
    let reps = group.coset_representatives(&class);
    let given: Vec<(Perm, i64)> =
        character.values.iter().map(|v| (v.element.clone(), v.exponent)).collect();
    let chi = close_character(&group, class_rep, &given, character.order)?;
    let field = CycField::new(character.order);
    let d = class.len();
    let class_index: std::collections::HashMap<&Perm, usize> =
        class.iter().zip(0..).collect();
    let mut target = Vec::with_capacity(d * d);
    let mut scale = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            // c(v_i (x) v_j) = chi(t_l^-1 h_i t_j) v_l (x) v_i with
            // h_l = h_i h_j h_i^-1.
            let hl = class[i].compose(&class[j]).compose(&class[i].inverse());
            let l = *class_index.get(&hl).expect("class is closed under conjugation");
            let gamma = reps[l].inverse().compose(&class[i]).compose(&reps[j]);
            let e = chi
                .exponent(&gamma)
                .expect("gamma always lies in the centralizer");
            target.push((l as u32, i as u32));
            scale.push(field.zeta_pow(e));
        }
    }
    BraidedSpace::new_monomial(
        field,
        MonomialBraid { dim: d, target, scale },
        DegreeLabels::GroupElems(class),
    )
}

/// Lowered form of a parsed input: the scalar domain decides which engine
/// instantiation runs.
pub enum LoweredSpace {
    Rou(BraidedSpace<CycField>),
    Generic(BraidedSpace<LaurentRing>),
}

impl BraidingInput {
    pub fn lower(&self) -> Result<LoweredSpace> {
        match self {
            BraidingInput::DiagonalRou { order, exponents } => {
                Ok(LoweredSpace::Rou(diagonal_rou_space(*order, exponents)?))
            }
            BraidingInput::DiagonalGeneric { exponents } => {
                Ok(LoweredSpace::Generic(diagonal_generic_space(exponents)?))
            }
            BraidingInput::MatrixRou { order, dim, entries, labels } => Ok(LoweredSpace::Rou(
                matrix_rou_space(*order, *dim, entries, labels.as_deref())?,
            )),
            BraidingInput::GroupYd { points, generators, class_rep, character } => {
                Ok(LoweredSpace::Rou(group_yd_space(
                    *points, generators, class_rep, character,
                )?))
            }
        }
    }

    /// The diagonal exponent data, when this input is diagonal.
    pub fn diagonal_exponents(&self) -> Option<(&[Vec<i64>], Option<u32>)> {
        match self {
            BraidingInput::DiagonalRou { order, exponents } => Some((exponents, Some(*order))),
            BraidingInput::DiagonalGeneric { exponents } => Some((exponents, None)),
            _ => None,
        }
    }
}
