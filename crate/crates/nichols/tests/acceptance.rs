//! End-to-end acceptance gate: nine numbered checks covering truncation,
//! braid combinatorics, the worked quotient algebras, reflection data,
//! root systems, the rank-2 classification, and the cross-route property
//! families.  Each check prints one line with its wall-clock time and must
//! finish inside its pinned budget.  Run with `--nocapture` to watch the
//! lines as they pass.

use std::time::{Duration, Instant};

use nichols::braiding::{
    diagonal_generic_space, diagonal_rou_space, BraidedSpace, BraidingInput, LoweredSpace,
};
use nichols::cartan::{canonical_matrix_class, DiagonalBraiding};
use nichols::cyclotomic::CycField;
use nichols::deriv::is_zero_in_nichols;
use nichols::elements::{
    coproduct_component, is_primitive, serre_element, serre_element_diagonal, symmetrize,
    TensorElem,
};
use nichols::engine::{
    blocks_for_degree, factor_hilbert, generic_exact_rank, hilbert_series, rou_rank,
    symmetrizer_matrix, GeometricFactor, HilbertSeries,
};
use nichols::error::EngineError;
use nichols::groupoid::{
    root_system, validate_axioms, weyl_groupoid, GroupoidOptions, RootOptions, RootSystem,
    WeylGroupoid,
};
use nichols::laurent::{LaurentPoly, LaurentRing};
use nichols::linalg::{kernel_basis, rank, rref};
use nichols::perm::all_permutations;
use nichols::qcalc::{q_binomial, q_factorial};
use nichols::rank2;
use nichols::ring::Ring;

// --- fixtures -------------------------------------------------------------

fn sl3_space() -> BraidedSpace<CycField> {
    diagonal_rou_space(3, &[vec![2, 2], vec![2, 2]]).unwrap()
}

fn sl21_space() -> BraidedSpace<CycField> {
    diagonal_rou_space(6, &[vec![2, 5], vec![5, 3]]).unwrap()
}

fn s3_space() -> BraidedSpace<CycField> {
    let text = r#"{
        "kind": "group_yd",
        "points": 3,
        "generators": [[2,1,3],[2,3,1]],
        "class_rep": [2,1,3],
        "character": {"order": 2, "values": [{"element": [2,1,3], "exponent": 1}]}
    }"#;
    match BraidingInput::from_json(text).unwrap().lower().unwrap() {
        LoweredSpace::Rou(s) => s,
        LoweredSpace::Generic(_) => unreachable!("group braidings live over a cyclotomic field"),
    }
}

fn rou_hilbert(space: &BraidedSpace<CycField>, kmax: usize) -> HilbertSeries {
    let field = space.ring.clone();
    hilbert_series(space, kmax, 100_000, rou_rank(&field)).unwrap()
}

fn diagonal_roots(braiding: &DiagonalBraiding) -> (WeylGroupoid, RootSystem) {
    let g = weyl_groupoid(braiding, &GroupoidOptions::default()).unwrap();
    let r = root_system(&g, &RootOptions::default()).unwrap();
    (g, r)
}

fn rank2_matches(positive_roots: &[Vec<i64>]) -> Vec<Vec<i64>> {
    rank2::enumerate_classes(positive_roots.len())
        .unwrap()
        .into_iter()
        .filter(|c| rank2::matches_root_set(c, positive_roots))
        .collect()
}

struct Gate {
    total: Duration,
}

impl Gate {
    fn run(&mut self, number: usize, label: &str, budget: Duration, check: impl FnOnce()) {
        let start = Instant::now();
        check();
        let elapsed = start.elapsed();
        self.total += elapsed;
        println!("criterion {}: {} ... PASS ({:.2?})", number, label, elapsed);
        assert!(
            elapsed <= budget,
            "criterion {} exceeded its {:?} budget: took {:.2?}",
            number,
            budget,
            elapsed
        );
    }
}

#[test]
fn acceptance() {
    let mut gate = Gate { total: Duration::ZERO };

    gate.run(1, "rank-1 truncation at orders 2, 3, 5", Duration::from_secs(1), || {
        for ell in [2u32, 3, 5] {
            let space = diagonal_rou_space(ell, &[vec![1]]).unwrap();
            let h = rou_hilbert(&space, 16);
            let mut want = vec![1u64; ell as usize];
            want.extend([0, 0]);
            assert_eq!(h.dims, want, "order {}", ell);
            assert!(h.terminated);
            assert_eq!(h.total, Some(u64::from(ell)));
        }
    });

    gate.run(2, "inversion sums factor into quantum integers", Duration::from_secs(5), || {
        for order in [5u32, 7, 12] {
            let field = CycField::new(order);
            let q = field.zeta_pow(1);
            for k in 0..=6u64 {
                let literal = all_permutations(k as usize)
                    .iter()
                    .fold(field.from_int(0), |acc, p| {
                        field.add(&acc, &field.pow(&q, p.inversions() as u64))
                    });
                assert_eq!(literal, q_factorial(&field, &q, k), "order {} k {}", order, k);
            }
        }
    });

    gate.run(3, "rank-2 Cartan quotient at a third root of unity", Duration::from_secs(60), || {
        let h = rou_hilbert(&sl3_space(), 12);
        assert_eq!(&h.dims[..9], &[1, 2, 4, 4, 5, 4, 4, 2, 1]);
        assert!(h.terminated);
        let b = DiagonalBraiding::rou(3, &[vec![2, 2], vec![2, 2]]).unwrap();
        let (_, roots) = diagonal_roots(&b);
        assert_eq!(roots.positive_roots.len(), 3);
        assert_eq!(h.total, Some(3u64.pow(3)), "one truncation factor per positive root");
    });

    gate.run(4, "mixed-sign rank-2 quotient and its reflections", Duration::from_secs(60), || {
        let h = rou_hilbert(&sl21_space(), 12);
        assert!(h.terminated);
        assert_eq!(h.total, Some(12), "4 * 3 from the three root-vector truncations");
        let b = DiagonalBraiding::rou(6, &[vec![2, 5], vec![5, 3]]).unwrap();
        let (g, roots) = diagonal_roots(&b);
        assert_eq!(roots.positive_roots.len(), 3, "same root system as the Cartan case");
        for obj in &g.objects {
            assert_eq!(obj.cartan, vec![vec![2, -1], vec![-1, 2]]);
        }
        assert_eq!(g.q_diagram_types, 2, "two diagram types across the reflections");
    });

    gate.run(5, "transposition-class quotient over the symmetric group", Duration::from_secs(30), || {
        let space = s3_space();
        let h = rou_hilbert(&space, 12);
        assert_eq!(&h.dims[..5], &[1, 3, 4, 3, 1]);
        assert_eq!(h.total, Some(12));
        let f = factor_hilbert(&h.dims);
        assert_eq!(
            f.factors,
            vec![
                GeometricFactor { stretch: 1, length: 2 },
                GeometricFactor { stretch: 1, length: 2 },
                GeometricFactor { stretch: 1, length: 3 },
            ]
        );
        assert_eq!(f.remainder, None);
        let kernel_dim: usize = blocks_for_degree(&space, 2, 100_000)
            .unwrap()
            .iter()
            .map(|block| {
                let m = symmetrizer_matrix(&space, block);
                block.words.len() - rank(&space.ring, &m)
            })
            .sum();
        assert_eq!(kernel_dim, 5, "nine degree-2 words, four survive");
    });

    gate.run(6, "rank-3 superalgebra point: roots and Cartan types", Duration::from_secs(30), || {
        let b =
            DiagonalBraiding::rou(6, &[vec![3, 1, 1], vec![1, 3, 1], vec![1, 1, 3]]).unwrap();
        let (g, roots) = diagonal_roots(&b);
        assert_eq!(roots.positive_roots.len(), 7);
        assert_eq!(g.cartan_types, 2);
        let classes: std::collections::BTreeSet<Vec<Vec<i64>>> =
            g.objects.iter().map(|o| canonical_matrix_class(&o.cartan)).collect();
        let all_minus_one =
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        let chain_type = vec![vec![2, -1, -1], vec![-1, 2, 0], vec![-1, 0, 2]];
        assert!(classes.contains(&canonical_matrix_class(&all_minus_one)));
        assert!(classes.contains(&canonical_matrix_class(&chain_type)));
        assert_eq!(validate_axioms(&g, &roots), Vec::<String>::new());
        for per_object in &roots.roots_by_object {
            assert_eq!(per_object.len(), 7, "same positive count in every chamber basis");
        }
    });

    gate.run(7, "reflection golden values and involutivity", Duration::from_secs(1), || {
        let b = DiagonalBraiding::rou(6, &[vec![2, 5], vec![5, 3]]).unwrap();
        let r = b.reflect(1).unwrap();
        assert_eq!(
            r.exponents(),
            &[vec![3, 4], vec![4, 3]],
            "both diagonal entries become -1; off-diagonals invert and flip sign"
        );
        let fixtures: [(Option<u32>, Vec<Vec<i64>>); 5] = [
            (Some(3), vec![vec![2, 2], vec![2, 2]]),
            (Some(6), vec![vec![2, 5], vec![5, 3]]),
            (Some(6), vec![vec![3, 1, 1], vec![1, 3, 1], vec![1, 1, 3]]),
            (Some(3), vec![vec![1]]),
            (None, vec![vec![2, -2], vec![-2, 4]]),
        ];
        for (order, exps) in fixtures {
            let b = match order {
                Some(n) => DiagonalBraiding::rou(n, &exps).unwrap(),
                None => DiagonalBraiding::generic(&exps).unwrap(),
            };
            for i in 0..b.rank() {
                let back = b.reflect(i).unwrap().reflect(i).unwrap();
                assert_eq!(back.diagram(), b.diagram(), "double reflection at {}", i);
            }
        }
    });

    gate.run(8, "rank-2 sequence classification", Duration::from_secs(5), || {
        let class_counts: Vec<usize> =
            (3..=6).map(|n| rank2::enumerate_classes(n).unwrap().len()).collect();
        assert_eq!(class_counts, vec![1, 1, 1, 3]);
        // Independent oracle for the length-5 count: walk every candidate
        // sequence with entries up to 6 and keep the admissible ones.
        let mut admissible = Vec::new();
        let mut odo = vec![1i64; 5];
        loop {
            if rank2::is_admissible(&odo) {
                admissible.push(odo.clone());
            }
            let mut pos = 0;
            loop {
                if pos == 5 {
                    break;
                }
                odo[pos] += 1;
                if odo[pos] <= 6 {
                    break;
                }
                odo[pos] = 1;
                pos += 1;
            }
            if pos == 5 {
                break;
            }
        }
        assert_eq!(admissible.len(), 5, "exactly the five rotations of one pentagon");
        assert!(admissible.contains(&vec![3, 1, 2, 2, 1]));
        for seq in &admissible {
            assert_eq!(rank2::canonical_class(seq), vec![1, 2, 2, 1, 3]);
        }
        assert!(rank2::enumerate_raw(5).unwrap().contains(&vec![3, 1, 2, 2, 1]));
        assert_eq!(
            rank2::sequence_roots(&[3, 1, 2, 2, 1]),
            vec![vec![0, 1], vec![1, 3], vec![1, 2], vec![1, 1], vec![1, 0]]
        );
        let sl3 = DiagonalBraiding::rou(3, &[vec![2, 2], vec![2, 2]]).unwrap();
        assert_eq!(rank2_matches(&diagonal_roots(&sl3).1.positive_roots), vec![vec![1, 1, 1]]);
        let b2 = DiagonalBraiding::generic(&[vec![2, -2], vec![-2, 4]]).unwrap();
        assert_eq!(rank2_matches(&diagonal_roots(&b2).1.positive_roots), vec![vec![1, 2, 1, 2]]);
        let sl21 = DiagonalBraiding::rou(6, &[vec![2, 5], vec![5, 3]]).unwrap();
        assert_eq!(rank2_matches(&diagonal_roots(&sl21).1.positive_roots), vec![vec![1, 1, 1]]);
    });

    gate.run(9, "cross-route property families", Duration::from_secs(300), || {
        // Block symmetrizers equal the literal sum over all lifts.
        for space in [sl3_space(), s3_space()] {
            for degree in 2..=4usize {
                for block in blocks_for_degree(&space, degree, 10_000).unwrap() {
                    let m = symmetrizer_matrix(&space, &block);
                    for (col, w) in block.words.iter().enumerate() {
                        let image =
                            symmetrize(&space, &TensorElem::word(&space.ring, w.clone()));
                        for (row, rw) in block.words.iter().enumerate() {
                            let want =
                                image.coeff(rw).cloned().unwrap_or_else(|| space.ring.zero());
                            assert_eq!(m.get(row, col), &want);
                        }
                    }
                }
            }
        }

        // Symmetrizer kernels and the derivation criterion agree both ways.
        for space in [sl3_space(), sl21_space()] {
            let field = space.ring.clone();
            for degree in 2..=4usize {
                for block in blocks_for_degree(&space, degree, 10_000).unwrap() {
                    let m = symmetrizer_matrix(&space, &block);
                    for v in kernel_basis(&field, &m) {
                        let e = TensorElem::from_terms(
                            &field,
                            degree,
                            block.words.iter().cloned().zip(v.iter().cloned()),
                        );
                        assert!(is_zero_in_nichols(&space, &e, 6).unwrap());
                    }
                    let mut reduced = m.clone();
                    for pivot in rref(&field, &mut reduced) {
                        let e = TensorElem::word(&field, block.words[pivot].clone());
                        assert!(!is_zero_in_nichols(&space, &e, 6).unwrap());
                    }
                }
            }
        }

        // Coproducts of generator powers carry quantum binomials.
        let line = diagonal_generic_space(&[vec![1]]).unwrap();
        let q = LaurentPoly::monomial(1);
        for n in 2..=6usize {
            let e = TensorElem::word(&line.ring, vec![0; n]);
            for i in 1..n {
                let comps = coproduct_component(&line, &e, i);
                assert_eq!(comps.len(), 1);
                assert_eq!(comps[0].2, q_binomial(&LaurentRing, &q, n as u64, i as u64));
            }
        }

        // Braided commutators are primitive exactly in the balanced case.
        let balanced = diagonal_generic_space(&[vec![2, 3], vec![-3, 4]]).unwrap();
        assert!(is_primitive(&balanced, &serre_element(&balanced, 0, 1, 1)));
        let unbalanced = diagonal_generic_space(&[vec![2, 3], vec![1, 4]]).unwrap();
        assert!(!is_primitive(&unbalanced, &serre_element(&unbalanced, 0, 1, 1)));

        // Adjoint powers die exactly at the Cartan bound, by both routes.
        for (space, braiding) in [
            (sl3_space(), DiagonalBraiding::rou(3, &[vec![2, 2], vec![2, 2]]).unwrap()),
            (sl21_space(), DiagonalBraiding::rou(6, &[vec![2, 5], vec![5, 3]]).unwrap()),
        ] {
            let cartan = braiding.cartan_matrix().unwrap();
            for (i, j) in [(0u32, 1u32), (1, 0)] {
                let n = (1 - cartan[i as usize][j as usize]) as usize;
                let e = serre_element_diagonal(&space, i, j, n).unwrap();
                assert!(symmetrize(&space, &e).is_zero());
                assert!(is_zero_in_nichols(&space, &e, 6).unwrap());
                let below = serre_element_diagonal(&space, i, j, n - 1).unwrap();
                assert!(!symmetrize(&space, &below).is_zero());
            }
        }

        // Kernels absorb multiplication by generators on both sides.
        let space = sl3_space();
        let field = space.ring.clone();
        for block in blocks_for_degree(&space, 3, 10_000).unwrap() {
            let m = symmetrizer_matrix(&space, &block);
            for v in kernel_basis(&field, &m) {
                let kappa = TensorElem::from_terms(
                    &field,
                    3,
                    block.words.iter().cloned().zip(v.iter().cloned()),
                );
                for i in 0..2u32 {
                    let x = TensorElem::generator(&field, i);
                    assert!(symmetrize(&space, &x.concat(&field, &kappa)).is_zero());
                    assert!(symmetrize(&space, &kappa.concat(&field, &x)).is_zero());
                }
            }
        }

        // Terminated series are palindromic.
        for (space, expect_total) in [
            (sl3_space(), 27u64),
            (sl21_space(), 12),
            (s3_space(), 12),
            (diagonal_rou_space(2, &[vec![1]]).unwrap(), 2),
            (diagonal_rou_space(5, &[vec![1]]).unwrap(), 5),
        ] {
            let h = rou_hilbert(&space, 16);
            assert_eq!(h.total, Some(expect_total));
            let mut dims = h.dims.clone();
            while dims.last() == Some(&0) {
                dims.pop();
            }
            let mut rev = dims.clone();
            rev.reverse();
            assert_eq!(dims, rev);
        }

        // Every constructed braiding passed its braid-relation check; a
        // sheared flip is rejected.
        let mut entries = vec![vec![0i64; 4]; 4];
        for j in 0..4 {
            entries[2 * (j % 2) + j / 2][j] = 1;
        }
        entries[1][0] = 1;
        let text = serde_json::json!({
            "kind": "matrix_rou", "order": 5, "dim": 2, "entries": entries,
        })
        .to_string();
        assert!(matches!(
            BraidingInput::from_json(&text).unwrap().lower(),
            Err(EngineError::YangBaxterViolation(_))
        ));

        // The generic-parameter route agrees with the worked values.
        let b2 = diagonal_generic_space(&[vec![2, -2], vec![-2, 4]]).unwrap();
        let h = hilbert_series(&b2, 4, 100_000, generic_exact_rank()).unwrap();
        assert_eq!(h.dims, vec![1, 2, 4, 7, 11]);
    });

    println!("acceptance total: {:.2?}", gate.total);
}
