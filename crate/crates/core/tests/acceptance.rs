//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its timing (visible under `cargo test --test acceptance -- --nocapture`).

use std::time::{Duration, Instant};

use num::{BigInt, BigUint, Signed, Zero};

use rmtpc_core::caps::Caps;
use rmtpc_core::ea::{build_css_extension, ea_rm_params, ebit_count, ebit_count_rm_closed_form};
use rmtpc_core::gf2::{Gf2Matrix, SymplecticVector};
use rmtpc_core::rate::{
    catalytic_count, containment_comparison, ea_rm_logical_qubits, positive_catalytic_test, rates,
    table_examples, table_l_r, ContainmentCase, LrRange,
};
use rmtpc_core::rm::{
    dual_quotient_basis, generator_matrix, min_distance_bruteforce, parity_check_matrix, RmSpec,
};
use rmtpc_core::verify;

fn caps() -> Caps {
    Caps::default()
}

/// All (r, m) with m <= max_m and r < (m-1)/2.
fn ea_range(max_m: u32) -> Vec<(u32, u32)> {
    (2..=max_m)
        .flat_map(|m| (0..m).filter(move |r| 2 * r + 1 < m).map(move |r| (r, m)))
        .collect()
}

fn pass(line: &str, elapsed: Duration) {
    println!("criterion {line}: PASS ({:.2}s)", elapsed.as_secs_f64());
}

#[test]
fn criterion_1_and_2_rank_identities() {
    let start = Instant::now();
    let caps = caps();
    let mut checked = 0;
    for (r, m) in ea_range(12) {
        let spec = RmSpec::new(r, m).unwrap();
        let h = parity_check_matrix(spec, &caps).unwrap();
        let matrix_ne = BigUint::from(h.gram().rank());
        assert_eq!(
            matrix_ne,
            ebit_count_rm_closed_form(spec),
            "gfrank(H H^T) != closed form for RM({r},{m})"
        );

        let q = dual_quotient_basis(spec, &caps).unwrap();
        assert!(
            !q.empty_quotient,
            "quotient unexpectedly empty for RM({r},{m})"
        );
        assert_eq!(
            q.matrix.gram().rank(),
            q.matrix.rows(),
            "quotient Gram matrix of RM({r},{m}) is rank-deficient"
        );
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(
        checked >= 36,
        "expected the full (r, m) sweep, ran {checked}"
    );
    assert!(
        elapsed < Duration::from_secs(60),
        "rank identity sweep took {elapsed:?}, budget 60s"
    );
    pass(
        &format!("1 (rank identity, {checked} codes, m <= 12)"),
        elapsed,
    );
    pass(
        &format!("2 (quotient Gram full rank, {checked} codes, same run)"),
        elapsed,
    );
}

#[test]
fn criterion_3_zero_logical_qubits() {
    let start = Instant::now();
    let caps = caps();
    // closed-form path, m <= 40
    for (r, m) in ea_range(40) {
        let v = ea_rm_logical_qubits(RmSpec::new(r, m).unwrap());
        assert!(
            v.is_zero(),
            "closed-form logical count for RM({r},{m}) is {v}"
        );
    }
    // matrix path, m <= 12
    for (r, m) in ea_range(12) {
        let spec = RmSpec::new(r, m).unwrap();
        let h = parity_check_matrix(spec, &caps).unwrap();
        let n = BigInt::from(1u32) << m as usize;
        let rho = BigInt::from(h.rank());
        let n_e = BigInt::from(ebit_count(&h));
        let k = n - BigInt::from(2u32) * rho + n_e;
        assert!(
            k.is_zero(),
            "matrix-path logical count for RM({r},{m}) is {k}"
        );
    }
    pass(
        "3 (zero logical qubits, closed form m <= 40 and matrix path m <= 12)",
        start.elapsed(),
    );
}

#[test]
fn criterion_4_examples_table() {
    let start = Instant::now();
    let specs: Vec<RmSpec> = [(1, 4), (2, 6), (3, 8), (4, 10), (5, 12)]
        .iter()
        .map(|&(r, m)| RmSpec::new(r, m).unwrap())
        .collect();
    let table = table_examples(&specs).unwrap();
    let expected = [
        (
            "[16, 5, 8]",
            "[[16, 0, >=8; 6]]",
            "[[256, 50, >=8; 36]]",
            "0.0546875",
        ),
        (
            "[64, 22, 16]",
            "[[64, 0, >=16; 20]]",
            "[[4096, 968, >=16; 400]]",
            "0.138671875",
        ),
        (
            "[256, 93, 32]",
            "[[256, 0, >=32; 70]]",
            "[[65536, 17298, >=32; 4900]]",
            "0.189178466796875",
        ),
        (
            "[1024, 386, 64]",
            "[[1024, 0, >=64; 252]]",
            "[[1048576, 297992, >=64; 63504]]",
            "0.22362518310546875",
        ),
        (
            "[4096, 1586, 128]",
            "[[4096, 0, >=128; 924]]",
            "[[16777216, 5030792, >=128; 853776]]",
            "0.24896955490112305",
        ),
    ];
    for (row, (classical, ea_rm, ea_tpc, decimal)) in table.rows.iter().zip(&expected) {
        assert_eq!(row.classical.to_string(), *classical);
        assert_eq!(row.ea_rm.to_string(), *ea_rm);
        assert_eq!(row.ea_tpc.to_string(), *ea_tpc);
        assert_eq!(row.catalytic.decimal(), *decimal);
        assert!(row.note.is_none(), "row {} unexpectedly flagged", row.spec);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "closed-form table took {elapsed:?}, budget 1s"
    );
    pass("4 (worked-examples table, five rows digit-exact)", elapsed);
}

#[test]
fn criterion_5_threshold_table() {
    let start = Instant::now();
    let table = table_l_r(162).unwrap();
    let expected = [
        (1, 5, 2),
        (6, 13, 3),
        (14, 24, 4),
        (25, 39, 5),
        (40, 57, 6),
        (58, 78, 7),
        (79, 103, 8),
        (104, 131, 9),
        (132, 162, 10),
    ];
    assert_eq!(table.ranges.len(), expected.len());
    for (range, &(r_lo, r_hi, l)) in table.ranges.iter().zip(&expected) {
        assert_eq!(*range, LrRange { r_lo, r_hi, l });
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "threshold table took {elapsed:?}, budget 10s"
    );
    pass(
        "5 (threshold table, nine ranges exact for r = 1..162)",
        elapsed,
    );
}

#[test]
fn criterion_6_worked_construction_bit_exact() {
    let start = Instant::now();
    let caps = caps();
    let spec = RmSpec::new(1, 4).unwrap();

    let h = parity_check_matrix(spec, &caps).unwrap();
    let expected_h = Gf2Matrix::from_bit_rows(&[
        "1111111111111111",
        "0000000011111111",
        "0000111100001111",
        "0011001100110011",
        "0101010101010101",
        "0000000000001111",
        "0000000000110011",
        "0000000001010101",
        "0000001100000011",
        "0000010100000101",
        "0001000100010001",
    ])
    .unwrap();
    assert_eq!(h, expected_h, "parity check of RM(1,4) not bit-exact");

    let ext = build_css_extension(&h).unwrap();
    assert_eq!(ext.ebit_count(), 6);
    assert_eq!(
        ext.x_extension_block().submatrix_rows(0, 5),
        Gf2Matrix::zeros(5, 6)
    );
    assert_eq!(
        ext.x_extension_block().submatrix_rows(5, 11),
        Gf2Matrix::identity(6),
        "X extension block is not the identity on the degree-2 rows"
    );
    assert_eq!(
        ext.z_extension_block().submatrix_rows(0, 5),
        Gf2Matrix::zeros(5, 6)
    );
    assert_eq!(
        ext.z_extension_block().submatrix_rows(5, 11),
        Gf2Matrix::from_fn(6, 6, |i, j| i + j == 5),
        "Z extension block is not the anti-diagonal identity"
    );

    // 22 rows over 2 * 22 columns, pairwise symplectically orthogonal
    assert_eq!(ext.matrix.shape(), (22, 44));
    let rows: Vec<SymplecticVector> = (0..22)
        .map(|i| SymplecticVector::from_check_row(&ext.matrix.row(i)).unwrap())
        .collect();
    for (i, u) in rows.iter().enumerate() {
        for v in rows.iter().skip(i) {
            assert!(!u.product(v).unwrap(), "extended rows anticommute");
        }
    }
    pass(
        "6 (RM(1,4) construction bit-exact, extension abelian over 22 qubits)",
        start.elapsed(),
    );
}

#[test]
fn criterion_7_rate_comparisons() {
    let start = Instant::now();

    // |rate - quoted| < 0.0005, in exact integer arithmetic
    let close3 = |numer: &BigInt, denom: &BigUint, milli: i64| {
        let lhs = (numer * BigInt::from(2000u32)
            - BigInt::from(2 * milli) * BigInt::from(denom.clone()))
        .abs();
        lhs < BigInt::from(denom.clone())
    };

    let (_, qrm) = ea_rm_params(RmSpec::new(7, 16).unwrap()).unwrap();
    let qrm_rates = rates(&qrm);
    assert_eq!(qrm_rates.catalytic.to_string(), "-12870/65536");
    assert!(close3(
        &qrm_rates.catalytic.numer,
        &qrm_rates.catalytic.denom,
        -196
    ));

    let report = containment_comparison(
        ContainmentCase::QrmInTpc {
            r1: 3,
            m1: 8,
            r2: 3,
            m2: 8,
        },
        &caps(),
    )
    .unwrap();
    assert_eq!(report.tpc_rates.catalytic.to_string(), "12398/65536");
    assert!(close3(
        &report.tpc_rates.catalytic.numer,
        &report.tpc_rates.catalytic.denom,
        189
    ));

    let report = containment_comparison(
        ContainmentCase::TpcInQrm {
            m1: 5,
            m2: 11,
            r: 7,
        },
        &caps(),
    )
    .unwrap();
    assert_eq!(report.qrm_rates.ea_rate.numer, BigInt::zero());
    assert_eq!(report.tpc.k_logical, BigUint::from(134u32));
    assert_eq!(report.tpc_rates.ea_rate.to_string(), "134/65536");
    assert!(close3(
        &report.tpc_rates.ea_rate.numer,
        &report.tpc_rates.ea_rate.denom,
        2
    ));
    assert_eq!(report.tpc_rates.catalytic.to_string(), "-57286/65536");
    assert!(close3(
        &report.tpc_rates.catalytic.numer,
        &report.tpc_rates.catalytic.denom,
        -874
    ));

    pass(
        "7 (rate comparisons: exact rationals, decimals to quoted precision)",
        start.elapsed(),
    );
}

#[test]
fn criterion_8_property_suites() {
    let start = Instant::now();
    let results = verify::run_suite("properties").unwrap();
    for check in &results {
        assert!(
            check.cases >= 200,
            "{} ran only {} cases",
            check.name,
            check.cases
        );
        assert!(
            check.passed(),
            "{} failed {} of {} cases: {:?}",
            check.name,
            check.failures,
            check.cases,
            check.detail
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "property suites took {elapsed:?}, budget 120s"
    );
    pass(
        &format!(
            "8 (property suites, {} checks x >=200 cases)",
            results.len()
        ),
        elapsed,
    );
}

#[test]
fn criterion_9_distance_oracles() {
    let start = Instant::now();
    let caps = caps();

    let g = generator_matrix(RmSpec::new(1, 4).unwrap(), &caps).unwrap();
    assert_eq!(min_distance_bruteforce(&g, &caps).unwrap(), 8);

    // [3,2,2] (x) [2,1,2] tensor product code
    let h1 = Gf2Matrix::from_bit_rows(&["111"]).unwrap();
    let h2 = Gf2Matrix::from_bit_rows(&["11"]).unwrap();
    let h = h1.kron(&h2).unwrap();
    let gen = h.kernel_basis();
    assert_eq!(gen.rows(), 5, "expected 2^5 = 32 codewords to enumerate");
    assert_eq!(min_distance_bruteforce(&gen, &caps).unwrap(), 2);

    pass(
        "9 (distance oracles: d(RM(1,4)) = 8, tensor product d = 2)",
        start.elapsed(),
    );
}

#[test]
fn criterion_10_threshold_consistency() {
    let start = Instant::now();

    for i in 1..=20u32 {
        let spec = RmSpec::new(i, 2 * i + 2).unwrap();
        assert!(
            catalytic_count(spec, spec).is_positive(),
            "catalytic count not positive at (i, 2i+2), i = {i}"
        );
    }

    for r in 1..=20u64 {
        let mut seen_false = false;
        for s in 1..=12u64 {
            let spec = RmSpec::new(r as u32, (2 * r + s) as u32).unwrap();
            let count = catalytic_count(spec, spec);
            let test = positive_catalytic_test(r, s);
            assert_eq!(
                count > BigInt::zero(),
                test,
                "sign disagreement at r={r}, s={s}"
            );
            if seen_false {
                assert!(
                    !test,
                    "threshold test recovered after failing at r={r}, s={s}"
                );
            }
            if !test {
                seen_false = true;
            }
        }
    }

    pass(
        "10 (catalytic count and threshold test agree, monotone failure)",
        start.elapsed(),
    );
}
