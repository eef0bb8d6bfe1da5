//! Property tests for the module invariants, with independent oracles where
//! one exists: naive unpacked elimination against the bit-packed rank,
//! point-by-point evaluation against the doubling construction, and the
//! Kronecker-power row filter against the monomial generator matrix.

use num::{BigInt, BigUint};
use proptest::collection::vec;
use proptest::prelude::*;

use rmtpc_core::caps::Caps;
use rmtpc_core::ea::{css_check_matrix, ebit_count, symplectic_gram_schmidt};
use rmtpc_core::gf2::{Gf2Matrix, Gf2Vector, SymplecticVector};
use rmtpc_core::rate::{catalytic_count, decimal_string, positive_catalytic_test};
use rmtpc_core::rm::{
    eval_point, eval_vector, generator_matrix, min_distance_bruteforce, parity_check_matrix,
    rm_params, Monomial, Polynomial, RmSpec,
};

fn caps() -> Caps {
    Caps::default()
}

fn matrix_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Gf2Matrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(|(rows, cols)| {
        vec(any::<bool>(), rows * cols)
            .prop_map(move |bits| Gf2Matrix::from_fn(rows, cols, |i, j| bits[i * cols + j]))
    })
}

fn vector_strategy(len: usize) -> impl Strategy<Value = Gf2Vector> {
    vec(any::<bool>(), len).prop_map(|bits| Gf2Vector::from_bools(&bits))
}

fn symplectic_strategy(n: usize) -> impl Strategy<Value = SymplecticVector> {
    (vector_strategy(n), vector_strategy(n)).prop_map(|(x, z)| SymplecticVector::new(x, z).unwrap())
}

fn polynomial_strategy(m: u32) -> impl Strategy<Value = Polynomial> {
    vec(0u32..(1u32 << m), 0..6).prop_map(move |masks| {
        let mut p = Polynomial::zero(m);
        for mask in masks {
            let indices: Vec<u32> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            p.toggle(Monomial::new(m, &indices).unwrap());
        }
        p
    })
}

/// Plain `Vec<Vec<bool>>` Gaussian elimination, as an oracle for the
/// bit-packed rank.
fn naive_rank(m: &Gf2Matrix) -> usize {
    let mut rows: Vec<Vec<bool>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col]) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] {
                let (pivot, row) = if r > rank {
                    let (a, b) = rows.split_at_mut(r);
                    (&a[rank], &mut b[0])
                } else {
                    let (a, b) = rows.split_at_mut(rank);
                    (&b[0], &mut a[r])
                };
                for j in 0..pivot.len() {
                    row[j] ^= pivot[j];
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

proptest! {
    #[test]
    fn rank_matches_naive_elimination(a in matrix_strategy(20, 20)) {
        prop_assert_eq!(a.rank(), naive_rank(&a));
    }

    #[test]
    fn rank_is_transpose_invariant(a in matrix_strategy(64, 64)) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn kron_rank_is_multiplicative(a in matrix_strategy(12, 12), b in matrix_strategy(12, 12)) {
        let k = a.kron(&b).unwrap();
        prop_assert_eq!(k.rank(), a.rank() * b.rank());
    }

    #[test]
    fn kernel_is_orthogonal_and_complete(a in matrix_strategy(24, 32)) {
        let k = a.kernel_basis();
        prop_assert_eq!(k.rows(), a.cols() - a.rank());
        prop_assert!(a.mul_transpose(&k).unwrap().is_zero());
        // kernel rows are independent
        prop_assert_eq!(k.rank(), k.rows());
    }

    #[test]
    fn rref_is_idempotent(a in matrix_strategy(20, 24)) {
        let once = a.rref();
        prop_assert!(once.pivots.windows(2).all(|w| w[0] < w[1]));
        let twice = once.matrix.rref();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn matrix_text_roundtrip(a in matrix_strategy(12, 40)) {
        let parsed = Gf2Matrix::from_text(&a.to_text()).unwrap();
        prop_assert_eq!(parsed, a);
    }

    /// Dyadic rationals (every rate in this crate has a power-of-two
    /// denominator) reconstruct exactly from their rendered decimals when
    /// the expansion fits the significant-digit budget.
    #[test]
    fn decimal_rendering_roundtrips_dyadic_rationals(
        numer in -1_000_000i64..1_000_000,
        shift in 0u32..40,
    ) {
        let denom = BigUint::from(1u64) << shift as usize;
        let rendered = decimal_string(&BigInt::from(numer), &denom, 64);
        // reconstruct: sign, integer part, fraction digits
        let (sign, body) = match rendered.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1, rendered.as_str()),
        };
        let (int_part, frac) = body.split_once('.').unwrap_or((body, ""));
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_value = if frac.is_empty() {
            BigInt::from(0u32)
        } else {
            frac.parse::<BigInt>().unwrap()
        };
        let reconstructed =
            (int_part.parse::<BigInt>().unwrap() * &scale + frac_value) * BigInt::from(sign);
        // numer / denom == reconstructed / 10^digits
        prop_assert_eq!(
            BigInt::from(numer) * scale,
            reconstructed * BigInt::from(denom),
            "rendered {} for {}/2^{}", rendered, numer, shift
        );
    }

    #[test]
    fn symplectic_form_axioms(
        (u, v, w) in (1usize..=24).prop_flat_map(|n| {
            (symplectic_strategy(n), symplectic_strategy(n), symplectic_strategy(n))
        })
    ) {
        let mut uv = u.clone();
        uv.xor_assign(&v);
        prop_assert_eq!(
            uv.product(&w).unwrap(),
            u.product(&w).unwrap() ^ v.product(&w).unwrap()
        );
        prop_assert!(!u.product(&u).unwrap());
        prop_assert_eq!(u.product(&v).unwrap(), v.product(&u).unwrap());
    }

    #[test]
    fn eval_vector_matches_pointwise_oracle(
        (m, f) in (1u32..=8).prop_flat_map(|m| (Just(m), polynomial_strategy(m)))
    ) {
        let v = eval_vector(&f, &caps()).unwrap();
        for p in 0..1usize << m {
            let z: Vec<bool> = (0..m).map(|i| p >> (m - 1 - i) & 1 == 1).collect();
            prop_assert_eq!(v.get(p), eval_point(&f, &z).unwrap(), "point {}", p);
        }
    }

    #[test]
    fn eval_is_linear_and_multiplicative(
        (_m, f, g) in (1u32..=10).prop_flat_map(|m| {
            (Just(m), polynomial_strategy(m), polynomial_strategy(m))
        })
    ) {
        let ef = eval_vector(&f, &caps()).unwrap();
        let eg = eval_vector(&g, &caps()).unwrap();

        let mut sum = ef.clone();
        sum.xor_assign(&eg);
        prop_assert_eq!(eval_vector(&f.add(&g).unwrap(), &caps()).unwrap(), sum);

        let prod = ef.and(&eg).unwrap();
        prop_assert_eq!(eval_vector(&f.mul(&g).unwrap(), &caps()).unwrap(), prod);
    }

    #[test]
    fn eval_tensor_product_shifts_indices(
        (m1, m2, mask_a, mask_b) in (1u32..=8, 1u32..=8).prop_flat_map(|(m1, m2)| {
            let m2 = m2.min(16 - m1).max(1);
            (Just(m1), Just(m2), 0..1u32 << m1, 0..1u32 << m2)
        })
    ) {
        let idx = |mask: u32, m: u32| -> Vec<u32> {
            (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect()
        };
        let pa = Polynomial::from_monomials(m1, &[Monomial::new(m1, &idx(mask_a, m1)).unwrap()]).unwrap();
        let pb = Polynomial::from_monomials(m2, &[Monomial::new(m2, &idx(mask_b, m2)).unwrap()]).unwrap();
        let ra = Gf2Matrix::from_rows(1 << m1, &[eval_vector(&pa, &caps()).unwrap()]).unwrap();
        let rb = Gf2Matrix::from_rows(1 << m2, &[eval_vector(&pb, &caps()).unwrap()]).unwrap();
        let tensor = ra.kron(&rb).unwrap();

        let mut joined = idx(mask_a, m1);
        joined.extend(idx(mask_b, m2).iter().map(|i| i + m1));
        let big = Polynomial::from_monomials(m1 + m2, &[Monomial::new(m1 + m2, &joined).unwrap()]).unwrap();
        prop_assert_eq!(tensor.row(0), eval_vector(&big, &caps()).unwrap());
    }

    #[test]
    fn rm_nesting_and_duality((r, m) in (1u32..=10).prop_flat_map(|m| (0..m, Just(m)))) {
        let caps = caps();
        let inner = generator_matrix(RmSpec::new(r, m).unwrap(), &caps).unwrap();
        let outer = generator_matrix(RmSpec::new(r + 1, m).unwrap(), &caps).unwrap();
        prop_assert!(outer.row_space_contains(&inner).unwrap());

        let dual = generator_matrix(RmSpec::new(m - r - 1, m).unwrap(), &caps).unwrap();
        prop_assert!(inner.mul_transpose(&dual).unwrap().is_zero());
    }

    #[test]
    fn plotkin_rows_span_the_code((r, m) in (1u32..=8).prop_flat_map(|m| (0..=m, Just(m)))) {
        let caps = caps();
        let upper = Gf2Matrix::from_bit_rows(&["11", "01"]).unwrap();
        let mut power = Gf2Matrix::identity(1);
        for _ in 0..m {
            power = power.kron(&upper).unwrap();
        }
        let keep = 1usize << (m - r);
        let rows: Vec<Gf2Vector> = (0..power.rows())
            .filter(|&i| power.row_weight(i) >= keep)
            .map(|i| power.row(i))
            .collect();
        let filtered = Gf2Matrix::from_rows(1 << m, &rows).unwrap();
        let g = generator_matrix(RmSpec::new(r, m).unwrap(), &caps).unwrap();
        prop_assert!(filtered.row_space_contains(&g).unwrap());
        prop_assert!(g.row_space_contains(&filtered).unwrap());
    }

    #[test]
    fn kernel_of_generator_is_dual_generator((r, m) in (2u32..=8).prop_flat_map(|m| (0..m, Just(m)))) {
        let caps = caps();
        let g = generator_matrix(RmSpec::new(r, m).unwrap(), &caps).unwrap();
        let dual = generator_matrix(RmSpec::new(m - r - 1, m).unwrap(), &caps).unwrap();
        let kernel = g.kernel_basis();
        prop_assert!(kernel.row_space_contains(&dual).unwrap());
        prop_assert!(dual.row_space_contains(&kernel).unwrap());
    }

    #[test]
    fn small_rm_distance_matches_closed_form((r, m) in (1u32..=4).prop_flat_map(|m| (0..=m, Just(m)))) {
        let caps = caps();
        let spec = RmSpec::new(r, m).unwrap();
        let g = generator_matrix(spec, &caps).unwrap();
        let d = min_distance_bruteforce(&g, &caps).unwrap();
        let params = rm_params(spec);
        prop_assert_eq!(d.to_string(), params.d.to_string());
    }

    #[test]
    fn sgs_produces_a_symplectic_normal_form(
        (n, gens) in (1usize..=12).prop_flat_map(|n| {
            (Just(n), vec(symplectic_strategy(n), 0..=16))
        })
    ) {
        let sgs = symplectic_gram_schmidt(&gens).unwrap();
        for (a, b) in &sgs.pairs {
            prop_assert!(a.product(b).unwrap());
        }
        let mut finals: Vec<SymplecticVector> = Vec::new();
        for (a, b) in &sgs.pairs {
            finals.push(a.clone());
            finals.push(b.clone());
        }
        finals.extend(sgs.isotropic.iter().cloned());
        for i in 0..finals.len() {
            for j in i + 1..finals.len() {
                let paired = i % 2 == 0 && j == i + 1 && i / 2 < sgs.pairs.len();
                if !paired {
                    prop_assert!(!finals[i].product(&finals[j]).unwrap());
                }
            }
        }

        // span preserved
        let to_matrix = |vs: &[SymplecticVector]| {
            let rows: Vec<Gf2Vector> = vs.iter().map(SymplecticVector::to_check_row).collect();
            Gf2Matrix::from_rows(2 * n, &rows).unwrap()
        };
        let before = to_matrix(&gens);
        let after = to_matrix(&finals);
        prop_assert!(before.row_space_contains(&after).unwrap());
        prop_assert!(after.row_space_contains(&before).unwrap());

        // extensions restore commutativity for the original generators
        let extended: Vec<SymplecticVector> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                SymplecticVector::new(
                    g.x().concat(&sgs.h_ex.row(i)),
                    g.z().concat(&sgs.h_ez.row(i)),
                )
                .unwrap()
            })
            .collect();
        for i in 0..extended.len() {
            for j in i + 1..extended.len() {
                prop_assert!(!extended[i].product(&extended[j]).unwrap());
            }
        }
    }

    #[test]
    fn css_sgs_pair_count_is_ebit_count(h in matrix_strategy(8, 12)) {
        let css = css_check_matrix(&h, &h).unwrap();
        let gens: Vec<SymplecticVector> = (0..css.rows())
            .map(|i| SymplecticVector::from_check_row(&css.row(i)).unwrap())
            .collect();
        let sgs = symplectic_gram_schmidt(&gens).unwrap();
        prop_assert_eq!(sgs.pair_count(), ebit_count(&h));
    }

    #[test]
    fn tpc_dual_containment_transfer(
        (r1, m1, r2, m2) in (1u32..=4, 1u32..=4).prop_flat_map(|(m1, m2)| {
            (0..=m1, Just(m1), 0..=m2, Just(m2))
        })
    ) {
        let caps = caps();
        let h1 = parity_check_matrix(RmSpec::new(r1, m1).unwrap(), &caps).unwrap();
        let h2 = parity_check_matrix(RmSpec::new(r2, m2).unwrap(), &caps).unwrap();
        let h = h1.kron(&h2).unwrap();
        prop_assert_eq!(
            h.gram().is_zero(),
            h1.gram().is_zero() || h2.gram().is_zero()
        );
    }

    #[test]
    fn threshold_test_agrees_with_catalytic_count((r, s) in (1u64..=12, 1u64..=8)) {
        let spec = RmSpec::new(r as u32, (2 * r + s) as u32).unwrap();
        let count = catalytic_count(spec, spec);
        prop_assert_eq!(count > 0.into(), positive_catalytic_test(r, s));
    }
}
