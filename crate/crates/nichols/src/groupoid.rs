//! The reflection groupoid of a diagonal braiding and its root system.
//!
//! Objects are the exponent matrices reachable from a starting braiding
//! by reflections; the arrow at letter i sends an object to its
//! reflection at i.  On top of the object graph, chambers are tracked
//! as pairs (object, transport matrix): starting from the identity at
//! the base object, following letter i at object b multiplies the
//! transport on the right by the reflection matrix
//!
//!   S_i^b e_j = e_j - c^b_ij e_i,
//!
//! an involution built from row i of the Cartan matrix of b.  The
//! columns of all transport matrices, read in base coordinates, are the
//! (real) roots; transporting them back along a chamber at b yields the
//! root set of b.
//!
//! Both searches are bounded: too many objects, a Cartan entry beyond
//! the configured cap, too many chambers, or no closure within the
//! depth limit all stop the search with an `Infinite` status carrying
//! the reason, rather than an error - an unbounded system is a finding,
//! not a failure.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::cartan::{canonical_matrix_class, DiagonalBraiding};
use crate::error::{EngineError, Result};

/// Search bounds for the object graph.
#[derive(Clone, Debug)]
pub struct GroupoidOptions {
    pub max_objects: usize,
    pub max_cartan_entry: i64,
}

impl Default for GroupoidOptions {
    fn default() -> Self {
        GroupoidOptions { max_objects: 1024, max_cartan_entry: 8 }
    }
}

/// Search bounds for the chamber walk.
#[derive(Clone, Debug)]
pub struct RootOptions {
    pub max_depth: usize,
    pub max_chambers: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions { max_depth: 64, max_chambers: 100_000 }
    }
}

/// Outcome of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchStatus {
    Finite,
    Infinite { reason: String },
}

impl SearchStatus {
    pub fn is_finite(&self) -> bool {
        matches!(self, SearchStatus::Finite)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupoidObject {
    pub braiding: DiagonalBraiding,
    pub cartan: Vec<Vec<i64>>,
}

/// Arrow `from --letter--> to`; every object carries one arrow per
/// letter, and arrows come in involutive pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupoidEdge {
    pub from: usize,
    pub letter: usize,
    pub to: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylGroupoid {
    pub objects: Vec<GroupoidObject>,
    pub edges: Vec<GroupoidEdge>,
    pub status: SearchStatus,
    /// Distinct Cartan matrices up to simultaneous relabeling.
    pub cartan_types: usize,
    /// Distinct diagrams up to simultaneous relabeling.
    pub q_diagram_types: usize,
    /// Distinct diagrams counted with their labeling.
    pub q_diagram_types_labeled: usize,
}

/// Breadth-first closure of the starting braiding under reflections.
pub fn weyl_groupoid(start: &DiagonalBraiding, opts: &GroupoidOptions) -> Result<WeylGroupoid> {
    let rank = start.rank();
    let mut objects: Vec<GroupoidObject> = Vec::new();
    let mut edges: Vec<GroupoidEdge> = Vec::new();
    let mut index: HashMap<DiagonalBraiding, usize> = HashMap::new();
    let mut status = SearchStatus::Finite;

    let admit = |b: DiagonalBraiding,
                     objects: &mut Vec<GroupoidObject>,
                     index: &mut HashMap<DiagonalBraiding, usize>|
     -> Result<std::result::Result<usize, SearchStatus>> {
        if let Some(&k) = index.get(&b) {
            return Ok(Ok(k));
        }
        if objects.len() == opts.max_objects {
            return Ok(Err(SearchStatus::Infinite {
                reason: format!("more than {} objects", opts.max_objects),
            }));
        }
        let cartan = b.cartan_matrix()?;
        if let Some(big) = cartan.iter().flatten().find(|e| e.abs() > opts.max_cartan_entry) {
            return Ok(Err(SearchStatus::Infinite {
                reason: format!("Cartan entry {} exceeds bound {}", big, opts.max_cartan_entry),
            }));
        }
        index.insert(b.clone(), objects.len());
        objects.push(GroupoidObject { braiding: b, cartan });
        Ok(Ok(objects.len() - 1))
    };

    match admit(start.clone(), &mut objects, &mut index)? {
        Ok(_) => {}
        Err(s) => {
            return Ok(WeylGroupoid {
                objects,
                edges,
                status: s,
                cartan_types: 0,
                q_diagram_types: 0,
                q_diagram_types_labeled: 0,
            })
        }
    }

    let mut head = 0;
    'bfs: while head < objects.len() {
        for i in 0..rank {
            let image = objects[head].braiding.reflect(i)?;
            match admit(image, &mut objects, &mut index)? {
                Ok(to) => edges.push(GroupoidEdge { from: head, letter: i, to }),
                Err(s) => {
                    status = s;
                    break 'bfs;
                }
            }
        }
        head += 1;
    }

    let cartan_types = objects
        .iter()
        .map(|o| canonical_matrix_class(&o.cartan))
        .collect::<BTreeSet<_>>()
        .len();
    let diagrams: Vec<Vec<Vec<i64>>> = objects.iter().map(|o| o.braiding.diagram()).collect();
    let q_diagram_types_labeled = diagrams.iter().cloned().collect::<BTreeSet<_>>().len();
    let q_diagram_types = diagrams
        .iter()
        .map(|d| canonical_matrix_class(d))
        .collect::<BTreeSet<_>>()
        .len();

    Ok(WeylGroupoid {
        objects,
        edges,
        status,
        cartan_types,
        q_diagram_types,
        q_diagram_types_labeled,
    })
}

impl WeylGroupoid {
    /// Target of the arrow at `letter` out of object `from`.
    pub fn step(&self, from: usize, letter: usize) -> Option<usize> {
        self.edges
            .iter()
            .find(|e| e.from == from && e.letter == letter)
            .map(|e| e.to)
    }

    pub fn rank(&self) -> usize {
        self.objects.first().map_or(0, |o| o.cartan.len())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    /// Chambers discovered: pairs (object, transport matrix).
    pub chambers: usize,
    /// Positive roots in the coordinates of the base object, sorted.
    pub positive_roots: Vec<Vec<i64>>,
    /// Positive roots of every object in its own coordinates.
    pub roots_by_object: Vec<Vec<Vec<i64>>>,
    pub status: SearchStatus,
}

/// Reflection matrix S_i at an object with the given Cartan matrix:
/// column j is e_j - c_ij e_i.
fn reflection_matrix(cartan: &[Vec<i64>], i: usize) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut s = vec![vec![0i64; n]; n];
    for j in 0..n {
        s[j][j] = 1;
    }
    for j in 0..n {
        s[i][j] -= cartan[i][j];
    }
    s
}

/// Integer matrix product with overflow detection; entries must stay
/// within i64 or the chamber walk is declared unbounded.
fn checked_mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for r in 0..n {
        for c in 0..n {
            let mut acc: i128 = 0;
            for k in 0..n {
                acc += i128::from(a[r][k]) * i128::from(b[k][c]);
            }
            out[r][c] = i64::try_from(acc).ok()?;
        }
    }
    Some(out)
}

fn mat_vec_i64(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Walk the chamber graph of a finite object graph and collect roots.
pub fn root_system(groupoid: &WeylGroupoid, opts: &RootOptions) -> Result<RootSystem> {
    let n = groupoid.rank();
    if !groupoid.status.is_finite() {
        let SearchStatus::Infinite { reason } = &groupoid.status else { unreachable!() };
        return Ok(RootSystem {
            chambers: 0,
            positive_roots: Vec::new(),
            roots_by_object: Vec::new(),
            status: SearchStatus::Infinite { reason: format!("object graph: {}", reason) },
        });
    }

    let identity: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
        .collect();

    // Seen states keyed by (object, transport); the inverse transport is
    // carried along since each reflection matrix is an involution.
    let mut seen: HashMap<(usize, Vec<Vec<i64>>), ()> = HashMap::new();
    let mut witness: Vec<Option<Vec<Vec<i64>>>> = vec![None; groupoid.objects.len()];
    let mut queue: VecDeque<(usize, Vec<Vec<i64>>, Vec<Vec<i64>>, usize)> = VecDeque::new();
    let mut all_roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut status = SearchStatus::Finite;

    seen.insert((0, identity.clone()), ());
    witness[0] = Some(identity.clone());
    queue.push_back((0, identity.clone(), identity, 0));

    'walk: while let Some((obj, m, minv, depth)) = queue.pop_front() {
        if depth > opts.max_depth {
            status = SearchStatus::Infinite {
                reason: format!("no closure within depth {}", opts.max_depth),
            };
            break;
        }
        for j in 0..n {
            let root: Vec<i64> = (0..n).map(|r| m[r][j]).collect();
            all_roots.insert(root.iter().map(|x| -x).collect());
            all_roots.insert(root);
        }
        for i in 0..n {
            let s = reflection_matrix(&groupoid.objects[obj].cartan, i);
            let Some(m2) = checked_mat_mul(&m, &s) else {
                status = SearchStatus::Infinite { reason: "transport entries overflow".into() };
                break 'walk;
            };
            let Some(minv2) = checked_mat_mul(&s, &minv) else {
                status = SearchStatus::Infinite { reason: "transport entries overflow".into() };
                break 'walk;
            };
            let to = groupoid
                .step(obj, i)
                .ok_or_else(|| EngineError::InternalMismatch("object graph is missing an arrow".into()))?;
            let key = (to, m2.clone());
            if seen.contains_key(&key) {
                continue;
            }
            if seen.len() == opts.max_chambers {
                status = SearchStatus::Infinite {
                    reason: format!("more than {} chambers", opts.max_chambers),
                };
                break 'walk;
            }
            seen.insert(key, ());
            if witness[to].is_none() {
                witness[to] = Some(minv2.clone());
            }
            queue.push_back((to, m2, minv2, depth + 1));
        }
    }

    if !status.is_finite() {
        return Ok(RootSystem {
            chambers: seen.len(),
            positive_roots: Vec::new(),
            roots_by_object: Vec::new(),
            status,
        });
    }

    let positive_roots: Vec<Vec<i64>> = all_roots
        .iter()
        .filter(|r| r.iter().all(|&x| x >= 0))
        .cloned()
        .collect();
    if positive_roots.len() * 2 != all_roots.len() {
        return Err(EngineError::InternalMismatch(
            "roots do not split into opposite halves".into(),
        ));
    }

    // Transport the base root set into each object's coordinates along
    // the inverse of any chamber that reaches it.
    let mut roots_by_object = Vec::with_capacity(groupoid.objects.len());
    for w in &witness {
        let minv = w
            .as_ref()
            .ok_or_else(|| EngineError::InternalMismatch("object unreachable by chambers".into()))?;
        let local: BTreeSet<Vec<i64>> = all_roots.iter().map(|r| mat_vec_i64(minv, r)).collect();
        let pos: Vec<Vec<i64>> = local
            .iter()
            .filter(|r| r.iter().all(|&x| x >= 0))
            .cloned()
            .collect();
        if pos.len() * 2 != local.len() {
            return Err(EngineError::InternalMismatch(
                "transported roots do not split into opposite halves".into(),
            ));
        }
        roots_by_object.push(pos);
    }

    Ok(RootSystem {
        chambers: seen.len(),
        positive_roots,
        roots_by_object,
        status: SearchStatus::Finite,
    })
}

/// Check the defining properties of the object graph and root data,
/// treating both as untrusted input.  Returns human-readable
/// descriptions of every violation found (empty means consistent).
pub fn validate_axioms(groupoid: &WeylGroupoid, roots: &RootSystem) -> Vec<String> {
    let mut bad = Vec::new();
    let n = groupoid.rank();
    for (k, o) in groupoid.objects.iter().enumerate() {
        if o.cartan.len() != n || o.cartan.iter().any(|row| row.len() != n) {
            bad.push(format!("object {}: Cartan matrix is not {} x {}", k, n, n));
            continue;
        }
        for i in 0..n {
            if o.cartan[i][i] != 2 {
                bad.push(format!("object {}: diagonal Cartan entry at {} is not 2", k, i));
            }
            for j in 0..n {
                if i != j && o.cartan[i][j] > 0 {
                    bad.push(format!("object {}: off-diagonal Cartan entry ({}, {}) is positive", k, i, j));
                }
            }
        }
    }
    for k in 0..groupoid.objects.len() {
        for i in 0..n {
            let Some(to) = groupoid.step(k, i) else {
                bad.push(format!("object {}: no arrow for letter {}", k, i));
                continue;
            };
            match groupoid.step(to, i) {
                Some(back) if back == k => {}
                _ => bad.push(format!("arrow {} --{}--> {} has no inverse arrow", k, i, to)),
            }
            // Reflection preserves row i of the Cartan matrix.
            if groupoid.objects[to].cartan[i] != groupoid.objects[k].cartan[i] {
                bad.push(format!(
                    "arrow {} --{}--> {} changes row {} of the Cartan matrix",
                    k, i, to, i
                ));
            }
        }
    }
    if !groupoid.status.is_finite() || !roots.status.is_finite() {
        return bad;
    }
    if roots.roots_by_object.len() != groupoid.objects.len() {
        bad.push("root data does not cover every object".into());
        return bad;
    }
    for (k, pos) in roots.roots_by_object.iter().enumerate() {
        let full: BTreeSet<Vec<i64>> = pos
            .iter()
            .cloned()
            .chain(pos.iter().map(|r| r.iter().map(|x| -x).collect()))
            .collect();
        if full.len() != 2 * pos.len() {
            bad.push(format!("object {}: positive roots meet their negatives", k));
        }
        for i in 0..n {
            let simple: Vec<i64> = (0..n).map(|c| i64::from(c == i)).collect();
            if !pos.contains(&simple) {
                bad.push(format!("object {}: simple root {} is missing", k, i));
            }
        }
        // Reflecting the root set of the arrow target lands on this
        // object's root set.
        for i in 0..n {
            let Some(to) = groupoid.step(k, i) else { continue };
            let s = reflection_matrix(&groupoid.objects[k].cartan, i);
            let image: BTreeSet<Vec<i64>> = roots.roots_by_object[to]
                .iter()
                .flat_map(|r| {
                    let v = mat_vec_i64(&s, r);
                    let neg = v.iter().map(|x| -x).collect::<Vec<_>>();
                    [v, neg]
                })
                .collect();
            if image != full {
                bad.push(format!(
                    "object {}: reflection at {} does not carry the roots of object {} onto its own",
                    k, i, to
                ));
            }
        }
        // The Cartan entries measure root strings: -c_ij is the largest
        // m with e_j + m e_i a root.
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut m = 0i64;
                loop {
                    let candidate: Vec<i64> = (0..n)
                        .map(|c| i64::from(c == j) + m * i64::from(c == i))
                        .collect();
                    if full.contains(&candidate) {
                        m += 1;
                    } else {
                        break;
                    }
                }
                let longest = m - 1;
                if longest != -groupoid.objects[k].cartan[i][j] {
                    bad.push(format!(
                        "object {}: Cartan entry ({}, {}) disagrees with its root string",
                        k, i, j
                    ));
                }
            }
        }
    }
    bad
}

/// Graphviz rendering of the object graph.  Arrows are involutive, so
/// each pair is drawn as one undirected edge; loops are kept.
pub fn groupoid_dot(groupoid: &WeylGroupoid) -> String {
    use std::fmt::Write;
    let mut out = String::from("graph reflection_groupoid {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (k, o) in groupoid.objects.iter().enumerate() {
        let rows: Vec<String> = o
            .braiding
            .exponents()
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                cells.join(" ")
            })
            .collect();
        let _ = writeln!(out, "  o{} [label=\"#{}\\n{}\"];", k, k, rows.join("\\n"));
    }
    for e in &groupoid.edges {
        // Keep one representative per involutive pair.
        if e.from < e.to || (e.from == e.to) {
            let _ = writeln!(out, "  o{} -- o{} [label=\"{}\"];", e.from, e.to, e.letter + 1);
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rou(order: u32, exp: &[Vec<i64>]) -> DiagonalBraiding {
        DiagonalBraiding::rou(order, exp).unwrap()
    }

    #[test]
    fn small_quantum_sl3_has_one_object_and_six_chambers() {
        let g = weyl_groupoid(&rou(3, &[vec![2, 2], vec![2, 2]]), &GroupoidOptions::default())
            .unwrap();
        assert_eq!(g.objects.len(), 1);
        assert!(g.status.is_finite());
        assert_eq!(g.cartan_types, 1);
        let r = root_system(&g, &RootOptions::default()).unwrap();
        assert_eq!(r.chambers, 6);
        assert_eq!(r.positive_roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(validate_axioms(&g, &r).is_empty());
    }

    #[test]
    fn rank_one_has_two_chambers() {
        let g = weyl_groupoid(&rou(3, &[vec![1]]), &GroupoidOptions::default()).unwrap();
        assert_eq!(g.objects.len(), 1);
        let r = root_system(&g, &RootOptions::default()).unwrap();
        assert_eq!(r.chambers, 2);
        assert_eq!(r.positive_roots, vec![vec![1]]);
    }

    #[test]
    fn superalgebra_point_has_three_objects() {
        let g = weyl_groupoid(&rou(6, &[vec![2, 5], vec![5, 3]]), &GroupoidOptions::default())
            .unwrap();
        assert!(g.status.is_finite());
        assert_eq!(g.objects.len(), 3);
        assert_eq!(g.cartan_types, 1);
        assert_eq!(g.q_diagram_types_labeled, 3);
        assert_eq!(g.q_diagram_types, 2);
        let r = root_system(&g, &RootOptions::default()).unwrap();
        assert_eq!(r.chambers, 6);
        assert_eq!(r.positive_roots.len(), 3);
        for pos in &r.roots_by_object {
            assert_eq!(pos.len(), 3);
        }
        assert!(validate_axioms(&g, &r).is_empty());
    }

    #[test]
    fn triangle_point_has_four_objects_and_seven_roots() {
        let start = rou(6, &[vec![3, 1, 1], vec![1, 3, 1], vec![1, 1, 3]]);
        let g = weyl_groupoid(&start, &GroupoidOptions::default()).unwrap();
        assert!(g.status.is_finite());
        assert_eq!(g.objects.len(), 4);
        assert_eq!(g.cartan_types, 2);
        assert_eq!(g.q_diagram_types, 2);
        assert_eq!(g.q_diagram_types_labeled, 4);
        let r = root_system(&g, &RootOptions::default()).unwrap();
        assert_eq!(r.positive_roots.len(), 7);
        assert_eq!(r.chambers, 32);
        assert!(validate_axioms(&g, &r).is_empty());
    }

    #[test]
    fn affine_pattern_is_reported_unbounded() {
        let b = DiagonalBraiding::generic(&[vec![2, -2], vec![-2, 2]]).unwrap();
        let g = weyl_groupoid(&b, &GroupoidOptions::default()).unwrap();
        // One object, but the chamber walk never closes.
        assert_eq!(g.objects.len(), 1);
        let r = root_system(&g, &RootOptions::default()).unwrap();
        assert!(matches!(r.status, SearchStatus::Infinite { .. }));
        assert!(r.positive_roots.is_empty());
    }

    #[test]
    fn cartan_entry_bound_stops_the_object_search() {
        let b = DiagonalBraiding::generic(&[vec![2, -2], vec![-2, 4]]).unwrap();
        let opts = GroupoidOptions { max_cartan_entry: 1, ..GroupoidOptions::default() };
        let g = weyl_groupoid(&b, &opts).unwrap();
        assert!(matches!(g.status, SearchStatus::Infinite { .. }));
    }

    #[test]
    fn validation_flags_corrupted_data() {
        let g = weyl_groupoid(&rou(6, &[vec![2, 5], vec![5, 3]]), &GroupoidOptions::default())
            .unwrap();
        let r = root_system(&g, &RootOptions::default()).unwrap();

        let mut bad_cartan = g.clone();
        bad_cartan.objects[0].cartan[0][1] = -2;
        assert!(!validate_axioms(&bad_cartan, &r).is_empty());

        let mut bad_roots = r.clone();
        bad_roots.roots_by_object[1].pop();
        assert!(!validate_axioms(&g, &bad_roots).is_empty());
    }

    #[test]
    fn dot_output_names_every_object() {
        let g = weyl_groupoid(&rou(6, &[vec![2, 5], vec![5, 3]]), &GroupoidOptions::default())
            .unwrap();
        let dot = groupoid_dot(&g);
        assert!(dot.starts_with("graph reflection_groupoid {"));
        for k in 0..g.objects.len() {
            assert!(dot.contains(&format!("o{} [label", k)));
        }
        assert!(dot.trim_end().ends_with('}'));
    }
}
