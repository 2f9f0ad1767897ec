//! Cross-route and algebraic invariants: every computation with two
//! independent implementations is checked for agreement here, and the
//! structural laws (braid relations, coproduct identities, palindromy,
//! reflection involutivity) are exercised on randomized inputs.

use proptest::prelude::*;

use nichols::braiding::{
    diagonal_generic_space, diagonal_rou_space, BraidedSpace, BraidingInput, LoweredSpace,
};
use nichols::cartan::DiagonalBraiding;
use nichols::cyclotomic::CycField;
use nichols::deriv::{is_zero_in_nichols, skew_derivation};
use nichols::elements::{
    apply_letter, apply_lift, coproduct_component, is_primitive, serre_element,
    serre_element_diagonal, symmetrize, TensorElem,
};
use nichols::engine::{
    blocks_for_degree, factor_hilbert, hilbert_series, rou_rank, symmetrizer_matrix,
};
use nichols::error::EngineError;
use nichols::groupoid::{root_system, validate_axioms, weyl_groupoid, GroupoidOptions, RootOptions};
use nichols::laurent::{LaurentPoly, LaurentRing};
use nichols::linalg::{bareiss_rank, kernel_basis, rank, rref, Matrix};
use nichols::perm::{shuffles, Perm};
use nichols::qcalc::{gauss_generating_function, q_binomial, q_factorial};
use nichols::rank2;
use nichols::ring::Ring;

// --- fixtures -------------------------------------------------------------

fn sl3_space() -> BraidedSpace<CycField> {
    diagonal_rou_space(3, &[vec![2, 2], vec![2, 2]]).unwrap()
}

fn sl21_space() -> BraidedSpace<CycField> {
    diagonal_rou_space(6, &[vec![2, 5], vec![5, 3]]).unwrap()
}

fn rank1_space(order: u32) -> BraidedSpace<CycField> {
    diagonal_rou_space(order, &[vec![1]]).unwrap()
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

/// A permutation of {0, .., n-1} from an arbitrary integer vector: sort the
/// indices by key.  Surjective onto S_n, so proptest explores all of it.
fn perm_from_keys(keys: &[u32]) -> Perm {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by_key(|&i| (keys[i], i));
    let mut images = vec![0; keys.len()];
    for (rank_pos, &i) in idx.iter().enumerate() {
        images[i] = rank_pos;
    }
    Perm::from_images_0based(images)
}

// --- braid word combinatorics --------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Reduced-word length equals the inversion number.
    #[test]
    fn reduced_word_length_is_inversion_count(keys in prop::collection::vec(0u32..1000, 1..7)) {
        let p = perm_from_keys(&keys);
        prop_assert_eq!(p.reduced_word().len(), p.inversions());
        prop_assert_eq!(Perm::from_word(p.n(), &p.reduced_word()), p);
    }

    /// The lift of a permutation does not depend on the choice of reduced
    /// word, on a braiding with non-monomial operator entries.
    #[test]
    fn lift_is_independent_of_reduced_word(
        keys in prop::collection::vec(0u32..1000, 2..5),
        letters in prop::collection::vec(0u32..3, 2..5),
    ) {
        let n = keys.len().min(letters.len());
        let space = s3_space();
        let p = perm_from_keys(&keys[..n]);
        let e = TensorElem::word(&space.ring, letters[..n].to_vec());
        let reference = apply_lift(&space, &e, &p);
        for word in p.all_reduced_words().into_iter().take(12) {
            let mut cur = e.clone();
            for &letter in word.iter().rev() {
                cur = apply_letter(&space, &cur, letter);
            }
            prop_assert_eq!(&cur, &reference);
        }
    }

    /// Lifting is multiplicative when lengths add: splitting a reduced word
    /// splits the lift.
    #[test]
    fn lift_splits_along_reduced_words(
        keys in prop::collection::vec(0u32..1000, 2..6),
        letters in prop::collection::vec(0u32..2, 2..6),
        cut in 0usize..20,
    ) {
        let n = keys.len().min(letters.len());
        let space = sl21_space();
        let full = perm_from_keys(&keys[..n]);
        let word = full.reduced_word();
        let cut = cut % (word.len() + 1);
        let left = Perm::from_word(n, &word[..cut]);
        let right = Perm::from_word(n, &word[cut..]);
        prop_assert_eq!(left.inversions() + right.inversions(), full.inversions());
        let e = TensorElem::word(&space.ring, letters[..n].to_vec());
        let stepwise = apply_lift(&space, &apply_lift(&space, &e, &right), &left);
        prop_assert_eq!(stepwise, apply_lift(&space, &e, &full));
    }
}

#[test]
fn shuffles_are_the_block_order_preserving_permutations() {
    let binomial = |n: usize, k: usize| -> usize {
        (1..=k).fold(1usize, |acc, t| acc * (n - t + 1) / t)
    };
    for i in 0..=4usize {
        for j in 0..=4usize {
            if i + j == 0 {
                continue;
            }
            let all = shuffles(i, j);
            assert_eq!(all.len(), binomial(i + j, i));
            let mut seen = std::collections::BTreeSet::new();
            for tau in &all {
                assert!(seen.insert(tau.one_line()), "duplicate shuffle");
                let line: Vec<usize> = (0..i + j).map(|t| tau.apply(t)).collect();
                assert!(line[..i].windows(2).all(|w| w[0] < w[1]));
                assert!(line[i..].windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}

// --- q-combinatorics ------------------------------------------------------

#[test]
fn q_binomial_satisfies_the_factorial_identity() {
    let ring = LaurentRing;
    let q = LaurentPoly::monomial(1);
    for n in 0..=8u64 {
        for k in 0..=n {
            let lhs = ring.mul(
                &q_binomial(&ring, &q, n, k),
                &ring.mul(&q_factorial(&ring, &q, k), &q_factorial(&ring, &q, n - k)),
            );
            assert_eq!(lhs, q_factorial(&ring, &q, n));
        }
    }
}

#[test]
fn inversion_sum_matches_q_factorial_as_a_polynomial() {
    // A polynomial identity in q; every specialization follows from it.
    let ring = LaurentRing;
    let q = LaurentPoly::monomial(1);
    for k in 0..=5u64 {
        assert!(gauss_generating_function(&ring, &q, k).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Field axioms of the cyclotomic arithmetic on random elements.
    #[test]
    fn cyclotomic_field_axioms(
        order in 1u32..13,
        a in prop::collection::vec((0i64..24, -3i64..4), 0..4),
        b in prop::collection::vec((0i64..24, -3i64..4), 0..4),
        c in prop::collection::vec((0i64..24, -3i64..4), 0..4),
    ) {
        let field = CycField::new(order);
        let build = |parts: &[(i64, i64)]| {
            parts.iter().fold(field.from_int(0), |acc, &(e, coef)| {
                field.add(&acc, &field.mul(&field.from_int(coef), &field.zeta_pow(e)))
            })
        };
        let (a, b, c) = (build(&a), build(&b), build(&c));
        prop_assert_eq!(
            field.mul(&a, &field.add(&b, &c)),
            field.add(&field.mul(&a, &b), &field.mul(&a, &c))
        );
        prop_assert_eq!(field.mul(&a, &b), field.mul(&b, &a));
        if !field.is_zero(&a) {
            let inv = nichols::ring::Field::inv(&field, &a).unwrap();
            prop_assert!(field.is_one(&field.mul(&a, &inv)));
        }
        prop_assert_eq!(field.pow(&field.zeta_pow(1), order as u64), field.from_int(1));
    }

    /// Rank at a root-of-unity specialization never exceeds the generic
    /// rank computed fraction-free.
    #[test]
    fn specialized_rank_bounded_by_generic_rank(
        entries in prop::collection::vec((-2i64..3, -2i64..3), 12),
        order in prop::sample::select(vec![5u32, 7, 97]),
    ) {
        let m = Matrix::from_rows(
            entries
                .chunks(4)
                .map(|row| {
                    row.iter()
                        .map(|&(c, e)| LaurentRing.mul(&LaurentPoly::from_int(c), &LaurentPoly::monomial(e)))
                        .collect()
                })
                .collect(),
        );
        let generic = bareiss_rank(&LaurentRing, &m);
        let field = CycField::new(order);
        let zeta = field.zeta_pow(1);
        let spec = Matrix::from_rows(
            (0..3)
                .map(|r| (0..4).map(|c| m.get(r, c).eval(&field, &zeta)).collect())
                .collect(),
        );
        prop_assert!(rank(&field, &spec) <= generic);
    }

    /// Kernel vectors returned by elimination really are kernel vectors,
    /// and there are exactly cols - rank of them; reduction is idempotent.
    #[test]
    fn kernel_basis_is_correct_and_rref_idempotent(
        entries in prop::collection::vec(-3i64..4, 15),
        order in 1u32..13,
    ) {
        let field = CycField::new(order);
        let m = Matrix::from_rows(
            entries.chunks(5).map(|row| row.iter().map(|&x| field.from_int(x)).collect()).collect(),
        );
        let r = rank(&field, &m);
        let kern = kernel_basis(&field, &m);
        prop_assert_eq!(kern.len(), 5 - r);
        for v in &kern {
            for row in 0..3 {
                let mut acc = field.from_int(0);
                for col in 0..5 {
                    acc = field.mul_add(&acc, m.get(row, col), &v[col]);
                }
                prop_assert!(field.is_zero(&acc));
            }
        }
        let mut once = m.clone();
        rref(&field, &mut once);
        let mut twice = once.clone();
        rref(&field, &mut twice);
        prop_assert_eq!(once, twice);
    }

    /// Series built as products of stretched geometric factors come back
    /// fully factored, and the factors multiply back to the series.
    #[test]
    fn geometric_products_factor_completely(
        factors in prop::collection::vec((1u64..4, 2u64..5), 1..4),
    ) {
        let mut dims = vec![1u64];
        for &(stretch, length) in &factors {
            let mut next = vec![0u64; dims.len() + (stretch * (length - 1)) as usize];
            for (i, &d) in dims.iter().enumerate() {
                for rep in 0..length {
                    next[i + (rep * stretch) as usize] += d;
                }
            }
            dims = next;
        }
        let got = factor_hilbert(&dims);
        prop_assert!(got.remainder.is_none(), "unfactored remainder for {:?}", factors);
        let mut rebuilt = vec![1u64];
        for g in &got.factors {
            let mut next = vec![0u64; rebuilt.len() + (g.stretch * (g.length - 1)) as usize];
            for (i, &d) in rebuilt.iter().enumerate() {
                for rep in 0..g.length {
                    next[i + (rep * g.stretch) as usize] += d;
                }
            }
            rebuilt = next;
        }
        prop_assert_eq!(rebuilt, dims);
    }
}

// --- symmetrizer routes ---------------------------------------------------

/// The block-matrix symmetrizer against the literal sum over all lifts of
/// S_k, column by column.  Hits the shared-prefix route on the diagonal
/// fixture and the dense staged route on the group fixture.
#[test]
fn symmetrizer_matrix_matches_elementwise_sum() {
    for space in [sl3_space(), s3_space()] {
        for degree in 2..=4usize {
            for block in blocks_for_degree(&space, degree, 10_000).unwrap() {
                let m = symmetrizer_matrix(&space, &block);
                for (col, w) in block.words.iter().enumerate() {
                    let image = symmetrize(&space, &TensorElem::word(&space.ring, w.clone()));
                    for (row, rw) in block.words.iter().enumerate() {
                        let want = image.coeff(rw).cloned().unwrap_or_else(|| space.ring.zero());
                        assert_eq!(m.get(row, col), &want, "degree {} block mismatch", degree);
                    }
                }
            }
        }
    }
}

/// Same agreement in a degree high enough that the engine switches to the
/// staged coset factorization for monomial braidings.
#[test]
fn staged_factorization_agrees_with_the_literal_sum_in_high_degree() {
    let space = sl21_space();
    let blocks = blocks_for_degree(&space, 8, 100_000).unwrap();
    let block = blocks
        .iter()
        .find(|b| b.words.len() == 8)
        .expect("the (7,1) block has eight words");
    let m = symmetrizer_matrix(&space, block);
    for (col, w) in block.words.iter().enumerate() {
        let image = symmetrize(&space, &TensorElem::word(&space.ring, w.clone()));
        for (row, rw) in block.words.iter().enumerate() {
            let want = image.coeff(rw).cloned().unwrap_or_else(|| space.ring.zero());
            assert_eq!(m.get(row, col), &want);
        }
    }
}

// --- derivations against kernels ------------------------------------------

/// Dual-route agreement: symmetrizer kernels and the joint derivation
/// criterion recognize the same elements, checked in both directions on
/// every block up to degree four.
#[test]
fn derivation_oracle_agrees_with_symmetrizer_kernels() {
    for space in [sl3_space(), sl21_space(), rank1_space(3)] {
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
                    assert!(
                        is_zero_in_nichols(&space, &e, 6).unwrap(),
                        "kernel vector not annihilated by derivations"
                    );
                }
                let mut reduced = m.clone();
                for pivot_col in rref(&field, &mut reduced) {
                    let e = TensorElem::word(&field, block.words[pivot_col].clone());
                    assert!(
                        !is_zero_in_nichols(&space, &e, 6).unwrap(),
                        "pivot word wrongly annihilated by derivations"
                    );
                }
            }
        }
    }
}

#[test]
fn derivations_satisfy_the_twisted_leibniz_rule_on_random_words() {
    // d_i(uv) = d_i(u) v + (prod_l q_{u_l, i}) u d_i(v), checked over the
    // generic ring where the weights stay symbolic.
    let space = diagonal_generic_space(&[vec![1, 2], vec![3, 4]]).unwrap();
    let ring = &space.ring;
    let words: Vec<Vec<u32>> = vec![vec![0], vec![1], vec![0, 1], vec![1, 0, 0], vec![0, 0, 1]];
    for u in &words {
        for v in &words {
            let eu = TensorElem::word(ring, u.clone());
            let ev = TensorElem::word(ring, v.clone());
            let uv = eu.concat(ring, &ev);
            for i in 0..2u32 {
                let lhs = skew_derivation(&space, i, &uv).unwrap();
                let left = skew_derivation(&space, i, &eu).unwrap().concat(ring, &ev);
                let weight = u.iter().fold(ring.one(), |acc, &l| {
                    let exps = [[1i64, 2], [3, 4]];
                    ring.mul(&acc, &LaurentPoly::monomial(exps[l as usize][i as usize]))
                });
                let right = eu
                    .concat(ring, &skew_derivation(&space, i, &ev).unwrap())
                    .scale(ring, &weight);
                assert_eq!(lhs, left.add(ring, &right));
            }
        }
    }
}

// --- coproduct and primitivity --------------------------------------------

#[test]
fn powers_of_a_generator_have_q_binomial_coproduct() {
    let space = diagonal_generic_space(&[vec![1]]).unwrap();
    let ring = &space.ring;
    let q = LaurentPoly::monomial(1);
    for n in 2..=6usize {
        let e = TensorElem::word(ring, vec![0; n]);
        for i in 1..n {
            let comps = coproduct_component(&space, &e, i);
            assert_eq!(comps.len(), 1);
            let (left, right, coeff) = &comps[0];
            assert_eq!(left, &vec![0u32; i]);
            assert_eq!(right, &vec![0u32; n - i]);
            assert_eq!(coeff, &q_binomial(ring, &q, n as u64, i as u64));
        }
    }
}

#[test]
fn truncation_degree_power_is_primitive_at_a_root_of_unity() {
    // At q = zeta_3 every proper component of the cube carries a vanishing
    // q-binomial, so x^3 is primitive and dies in the quotient.
    let space = rank1_space(3);
    let cube = TensorElem::word(&space.ring, vec![0, 0, 0]);
    assert!(is_primitive(&space, &cube));
    assert!(symmetrize(&space, &cube).is_zero());
    let square = TensorElem::word(&space.ring, vec![0, 0]);
    assert!(!is_primitive(&space, &square));
}

#[test]
fn braided_commutator_is_primitive_exactly_when_the_pair_product_is_one() {
    let balanced = diagonal_generic_space(&[vec![2, 3], vec![-3, 4]]).unwrap();
    assert!(is_primitive(&balanced, &serre_element(&balanced, 0, 1, 1)));
    let unbalanced = diagonal_generic_space(&[vec![2, 3], vec![1, 4]]).unwrap();
    assert!(!is_primitive(&unbalanced, &serre_element(&unbalanced, 0, 1, 1)));
}

// --- defining relations ---------------------------------------------------

/// The iterated-adjoint elements vanish exactly at the Cartan bound: at
/// n = 1 - c_ij both routes certify zero, one step earlier both certify
/// nonzero.
#[test]
fn adjoint_powers_vanish_exactly_at_the_cartan_bound() {
    for (space, braiding) in [
        (sl3_space(), DiagonalBraiding::rou(3, &[vec![2, 2], vec![2, 2]]).unwrap()),
        (sl21_space(), DiagonalBraiding::rou(6, &[vec![2, 5], vec![5, 3]]).unwrap()),
    ] {
        let cartan = braiding.cartan_matrix().unwrap();
        for (i, j) in [(0u32, 1u32), (1, 0)] {
            let n = (1 - cartan[i as usize][j as usize]) as usize;
            let at_bound = serre_element_diagonal(&space, i, j, n).unwrap();
            assert!(symmetrize(&space, &at_bound).is_zero());
            assert!(is_zero_in_nichols(&space, &at_bound, 6).unwrap());
            let below = serre_element_diagonal(&space, i, j, n - 1).unwrap();
            assert!(!symmetrize(&space, &below).is_zero());
            assert!(!is_zero_in_nichols(&space, &below, 6).unwrap());
        }
    }
}

/// Multiplying a kernel element by generators on either side lands in the
/// kernel again: the defining relations generate a two-sided ideal.
#[test]
fn kernels_are_stable_under_multiplication_by_generators() {
    let space = sl3_space();
    let field = space.ring.clone();
    let mut checked = 0;
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
                for product in [x.concat(&field, &kappa), kappa.concat(&field, &x)] {
                    assert!(symmetrize(&space, &product).is_zero());
                    assert!(is_zero_in_nichols(&space, &product, 6).unwrap());
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 16, "sl3 has four independent cubic relations");

    let space = sl21_space();
    let field = space.ring.clone();
    let square = TensorElem::word(&field, vec![1, 1]);
    assert!(symmetrize(&space, &square).is_zero());
    for i in 0..2u32 {
        let x = TensorElem::generator(&field, i);
        assert!(symmetrize(&space, &x.concat(&field, &square)).is_zero());
        assert!(symmetrize(&space, &square.concat(&field, &x)).is_zero());
    }
}

// --- series shape ---------------------------------------------------------

#[test]
fn terminated_series_are_palindromic() {
    let check = |space: &BraidedSpace<CycField>| {
        let field = space.ring.clone();
        let h = hilbert_series(space, 16, 100_000, rou_rank(&field)).unwrap();
        assert!(h.terminated);
        let mut dims = h.dims.clone();
        while dims.last() == Some(&0) {
            dims.pop();
        }
        let mut rev = dims.clone();
        rev.reverse();
        assert_eq!(dims, rev, "series {:?} is not palindromic", h.dims);
    };
    check(&sl3_space());
    check(&sl21_space());
    check(&rank1_space(2));
    check(&rank1_space(5));
    check(&s3_space());
}

// --- braiding constructions -----------------------------------------------

#[test]
fn non_braiding_matrices_are_rejected_at_construction() {
    // An invertible shear of the flip: c(x0 (x) x0) = x0 (x) x0 + x0 (x) x1
    // and plain swaps elsewhere.  Fails the braid relation on three strands
    // (the two sides differ in the x0 x1 x1 coefficient) and must be refused.
    let mut entries = vec![vec![0i64; 4]; 4];
    for j in 0..4 {
        let swap = 2 * (j % 2) + j / 2;
        entries[swap][j] = 1;
    }
    entries[1][0] = 1;
    let text = serde_json::json!({
        "kind": "matrix_rou",
        "order": 5,
        "dim": 2,
        "entries": entries,
    })
    .to_string();
    match BraidingInput::from_json(&text).unwrap().lower() {
        Err(EngineError::YangBaxterViolation(_)) => {}
        Err(other) => panic!("expected a braid-relation rejection, got {:?}", other),
        Ok(_) => panic!("shear of the flip was accepted as a braiding"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Diagonal operators always braid; construction must accept them.
    #[test]
    fn diagonal_braidings_always_construct(
        order in 2u32..10,
        exps in prop::collection::vec(prop::collection::vec(0i64..10, 2), 2),
    ) {
        prop_assert!(diagonal_rou_space(order, &exps).is_ok());
    }

    /// Reflections are involutive on the invariant diagram, and preserve
    /// the Cartan row they reflect at.
    #[test]
    fn reflections_are_involutive_on_diagrams(
        order in 2u32..9,
        exps in prop::collection::vec(prop::collection::vec(0i64..9, 2), 2),
    ) {
        let b = DiagonalBraiding::rou(order, &exps).unwrap();
        let Ok(cartan) = b.cartan_matrix() else { return Ok(()) };
        prop_assume!(cartan.iter().flatten().all(|c| c.abs() <= 8));
        for i in 0..2 {
            let r = b.reflect(i).unwrap();
            if let Ok(rc) = r.cartan_matrix() {
                prop_assert_eq!(&rc[i], &cartan[i], "reflected Cartan row changed");
            }
            if let Ok(back) = r.reflect(i) {
                prop_assert_eq!(back.diagram(), b.diagram());
            }
        }
    }

    /// A generic braiding and a root-of-unity realization of the same
    /// exponents at a large prime order produce the same Cartan matrix.
    #[test]
    fn generic_and_large_order_cartan_agree(
        exps_off in prop::collection::vec(-2i64..3, 2),
        exps_diag in prop::collection::vec(1i64..3, 2),
    ) {
        let exps = vec![
            vec![exps_diag[0], exps_off[0]],
            vec![exps_off[1], exps_diag[1]],
        ];
        let generic = DiagonalBraiding::generic(&exps).unwrap();
        let Ok(c_generic) = generic.cartan_matrix() else { return Ok(()) };
        prop_assume!(c_generic.iter().flatten().all(|c| c.abs() <= 8));
        let realized = DiagonalBraiding::rou(101, &exps).unwrap();
        prop_assert_eq!(realized.cartan_matrix().unwrap(), c_generic);
    }
}

// --- root systems ---------------------------------------------------------

#[test]
fn computed_root_systems_pass_their_own_axioms() {
    let fixtures: [(u32, Vec<Vec<i64>>); 3] = [
        (3, vec![vec![2, 2], vec![2, 2]]),
        (6, vec![vec![2, 5], vec![5, 3]]),
        (6, vec![vec![3, 1, 1], vec![1, 3, 1], vec![1, 1, 3]]),
    ];
    for (order, exps) in fixtures {
        let b = DiagonalBraiding::rou(order, &exps).unwrap();
        let g = weyl_groupoid(&b, &GroupoidOptions::default()).unwrap();
        let r = root_system(&g, &RootOptions::default()).unwrap();
        assert!(r.status.is_finite());
        assert_eq!(validate_axioms(&g, &r), Vec::<String>::new());
    }
}

// --- rank-2 sequences -----------------------------------------------------

#[test]
fn admissible_sequences_are_closed_under_rotation_and_reversal() {
    for n in 3..=6usize {
        for seq in rank2::enumerate_raw(n).unwrap() {
            let class = rank2::canonical_class(&seq);
            for r in 0..n {
                let mut rot: Vec<i64> = seq[r..].to_vec();
                rot.extend_from_slice(&seq[..r]);
                assert!(rank2::is_admissible(&rot), "{:?} rotation not admissible", rot);
                assert_eq!(rank2::canonical_class(&rot), class);
            }
            let mut rev = seq.clone();
            rev.reverse();
            assert!(rank2::is_admissible(&rev), "{:?} reversal not admissible", rev);
            assert_eq!(rank2::canonical_class(&rev), class);
            assert_eq!(rank2::sequence_roots(&seq).len(), n);
            assert_eq!(rank2::triangulation(&seq).unwrap().len(), n - 2);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Sequences with an entry below one are never admissible.
    #[test]
    fn nonpositive_entries_are_rejected(
        seq in prop::collection::vec(1i64..5, 3..7),
        pos in 0usize..7,
        bad in -2i64..1,
    ) {
        let mut seq = seq;
        let pos = pos % seq.len();
        seq[pos] = bad;
        prop_assert!(!rank2::is_admissible(&seq));
    }
}
