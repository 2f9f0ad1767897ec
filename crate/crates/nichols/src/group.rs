//! Finite permutation groups, conjugacy classes, centralizers, and linear
//! characters — the group-theoretic substrate for conjugacy-class braidings.
//!
//! Groups are given by permutation generators on at most [`MAX_POINTS`]
//! points and enumerated breadth-first in the declared generator order, so
//! every derived listing (elements, classes, coset representatives) is
//! deterministic.  The order cap [`MAX_GROUP_ORDER`] keeps all scans linear
//! in practice.

use std::collections::HashMap;

use crate::error::{EngineError, Result};
use crate::perm::Perm;

pub const MAX_POINTS: usize = 12;
pub const MAX_GROUP_ORDER: usize = 10_000;

#[derive(Clone, Debug)]
pub struct PermGroup {
    points: usize,
    generators: Vec<Perm>,
    /// Breadth-first from the identity, multiplying by generators on the
    /// right in declared order.
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    pub fn new(points: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if points > MAX_POINTS {
            return Err(EngineError::GroupTooLarge(format!(
                "{} points exceeds the supported maximum of {}",
                points, MAX_POINTS
            )));
        }
        for g in &generators {
            if g.n() != points {
                return Err(EngineError::InvalidInput(format!(
                    "generator {} does not act on {} points",
                    g, points
                )));
            }
        }
        let mut elements = vec![Perm::identity(points)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let g = elements[head].clone();
            head += 1;
            for gen in &generators {
                let h = g.compose(gen);
                if !index.contains_key(&h) {
                    if elements.len() == MAX_GROUP_ORDER {
                        return Err(EngineError::GroupTooLarge(format!(
                            "order exceeds the supported maximum of {}",
                            MAX_GROUP_ORDER
                        )));
                    }
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(PermGroup { points, generators, elements, index })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.index.contains_key(g)
    }

    /// The conjugacy class of `rep`, breadth-first: conjugate each
    /// discovered element by the generators in declared order.  `rep`
    /// itself is always entry 0.
    pub fn conjugacy_class(&self, rep: &Perm) -> Result<Vec<Perm>> {
        if !self.contains(rep) {
            return Err(EngineError::InvalidInput(format!(
                "class representative {} is not a group element",
                rep
            )));
        }
        let mut class = vec![rep.clone()];
        let mut seen = HashMap::new();
        seen.insert(rep.clone(), 0usize);
        let mut head = 0;
        while head < class.len() {
            let h = class[head].clone();
            head += 1;
            for gen in &self.generators {
                let conj = gen.compose(&h).compose(&gen.inverse());
                if !seen.contains_key(&conj) {
                    seen.insert(conj.clone(), class.len());
                    class.push(conj);
                }
            }
        }
        Ok(class)
    }

    /// Elements commuting with `h`, in group enumeration order (so the
    /// identity comes first).
    pub fn centralizer(&self, h: &Perm) -> Vec<Perm> {
        self.elements
            .iter()
            .filter(|g| g.compose(h) == h.compose(g))
            .cloned()
            .collect()
    }

    /// For each class element h_i, the first group element (in enumeration
    /// order) conjugating the class representative onto it:
    /// t_i . h_1 . t_i^-1 = h_i.  Entry 0 is always the identity.
    pub fn coset_representatives(&self, class: &[Perm]) -> Vec<Perm> {
        let rep = &class[0];
        let pos: HashMap<&Perm, usize> = class.iter().zip(0..).collect();
        let mut reps: Vec<Option<Perm>> = vec![None; class.len()];
        for g in &self.elements {
            let target = g.compose(rep).compose(&g.inverse());
            if let Some(&i) = pos.get(&target) {
                if reps[i].is_none() {
                    reps[i] = Some(g.clone());
                }
            }
        }
        reps.into_iter().map(|r| r.expect("class is a single orbit")).collect()
    }
}

/// A linear character of a subgroup, stored as exponents e(g) with value
/// zeta_order^e(g).
#[derive(Clone, Debug)]
pub struct Character {
    pub order: u32,
    exponents: HashMap<Perm, i64>,
}

impl Character {
    /// Exponent of the character value at `g`, reduced to [0, order).
    pub fn exponent(&self, g: &Perm) -> Option<i64> {
        self.exponents.get(g).copied()
    }

    pub fn domain_size(&self) -> usize {
        self.exponents.len()
    }
}

/// Extend character values given on generators of the centralizer of `h` to
/// the whole centralizer, multiplicatively.  Each `(g, e)` pair declares
/// the value zeta_order^e at g.  Fails with [`EngineError::NotACharacter`]
/// when a generator lies outside the centralizer, when the declared
/// generators do not generate it, or when the values are inconsistent with
/// any product relation (checked on every edge of the Cayley graph, which
/// pins the extension down completely).
pub fn close_character(
    group: &PermGroup,
    h: &Perm,
    given: &[(Perm, i64)],
    order: u32,
) -> Result<Character> {
    if order == 0 {
        return Err(EngineError::InvalidInput("character order must be positive".into()));
    }
    let centralizer = group.centralizer(h);
    let central: HashMap<&Perm, ()> = centralizer.iter().map(|g| (g, ())).collect();
    for (g, _) in given {
        if !central.contains_key(g) {
            return Err(EngineError::NotACharacter(format!(
                "{} does not commute with the class representative",
                g
            )));
        }
    }
    let m = order as i64;
    let mut exponents: HashMap<Perm, i64> = HashMap::new();
    let mut queue = vec![Perm::identity(group.points())];
    exponents.insert(queue[0].clone(), 0);
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head].clone();
        head += 1;
        let base = exponents[&g];
        for (gen, e) in given {
            let next = g.compose(gen);
            let val = (base + e).rem_euclid(m);
            match exponents.get(&next) {
                None => {
                    exponents.insert(next.clone(), val);
                    queue.push(next);
                }
                Some(&prev) if prev != val => {
                    return Err(EngineError::NotACharacter(format!(
                        "conflicting values at {}: exponent {} vs {}",
                        next, prev, val
                    )));
                }
                Some(_) => {}
            }
        }
    }
    if exponents.len() != centralizer.len() {
        return Err(EngineError::NotACharacter(format!(
            "given elements generate a subgroup of order {} inside a centralizer of order {}",
            exponents.len(),
            centralizer.len()
        )));
    }
    Ok(Character { order, exponents })
}
