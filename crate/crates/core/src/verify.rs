//! Named invariant suites, runnable from the CLI (`verify --suite NAME`).
//!
//! Every randomized check uses a fixed ChaCha seed, so a suite run is fully
//! deterministic. Checks report case and failure counts instead of stopping
//! at the first failure, which keeps the output useful for regression
//! hunting.

use num::{BigInt, BigUint, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::binom::pow2;
use crate::caps::Caps;
use crate::ea::{
    build_css_extension, css_check_matrix, ebit_count, ebit_count_rm_closed_form,
    symplectic_gram_schmidt,
};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector, SymplecticVector};
use crate::rate::{
    catalytic_count, ea_rm_logical_qubits, ea_tpc_logical_qubits, l_of_r, positive_catalytic_test,
};
use crate::rm::{
    dual_quotient_basis, eval_vector, generator_matrix, parity_check_matrix, rm_params, Monomial,
    Polynomial, RmSpec,
};

const CASES: usize = 200;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Description of the first failure, when any.
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Check {
    name: &'static str,
    cases: usize,
    failures: usize,
    detail: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failures: 0,
            detail: None,
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(describe());
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            detail: self.detail,
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Gf2Matrix {
    Gf2Matrix::from_fn(rows, cols, |_, _| rng.gen_bool(0.5))
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize) -> Gf2Vector {
    let mut v = Gf2Vector::zeros(len);
    for i in 0..len {
        if rng.gen_bool(0.5) {
            v.set(i, true);
        }
    }
    v
}

fn random_symplectic(rng: &mut ChaCha8Rng, n: usize) -> SymplecticVector {
    SymplecticVector::new(random_vector(rng, n), random_vector(rng, n)).expect("equal lengths")
}

fn random_polynomial(rng: &mut ChaCha8Rng, m: u32) -> Polynomial {
    let mut p = Polynomial::zero(m);
    let terms = rng.gen_range(0..=6);
    for _ in 0..terms {
        let mask: u32 = rng.gen_range(0..1u32 << m);
        let indices: Vec<u32> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        p.toggle(Monomial::new(m, &indices).expect("indices in range"));
    }
    p
}

fn same_row_space(a: &Gf2Matrix, b: &Gf2Matrix) -> bool {
    a.row_space_contains(b).unwrap_or(false) && b.row_space_contains(a).unwrap_or(false)
}

// --- gf2 ---------------------------------------------------------------

pub fn check_rank_transpose() -> CheckResult {
    let mut c = Check::new("gf2/rank-transpose");
    let mut rng = rng(0x01);
    for _ in 0..CASES {
        let rows = rng.gen_range(0..=64);
        let cols = rng.gen_range(0..=64);
        let a = random_matrix(&mut rng, rows, cols);
        c.case(a.rank() == a.transpose().rank(), || {
            format!("rank mismatch on {rows}x{cols}")
        });
    }
    c.finish()
}

pub fn check_rank_kron_multiplicative() -> CheckResult {
    let mut c = Check::new("gf2/rank-kron-multiplicative");
    let mut rng = rng(0x02);
    for _ in 0..CASES {
        let (ar, ac) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
        let (br, bc) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
        let a = random_matrix(&mut rng, ar, ac);
        let b = random_matrix(&mut rng, br, bc);
        let k = a.kron(&b).expect("small shapes");
        c.case(k.rank() == a.rank() * b.rank(), || {
            format!("rank({:?} kron {:?})", a.shape(), b.shape())
        });
    }
    c.finish()
}

pub fn check_kernel_orthogonality() -> CheckResult {
    let mut c = Check::new("gf2/kernel-orthogonality");
    let mut rng = rng(0x03);
    for _ in 0..CASES {
        let rows = rng.gen_range(0..=24);
        let cols = rng.gen_range(0..=32);
        let a = random_matrix(&mut rng, rows, cols);
        let k = a.kernel_basis();
        let ok =
            k.rows() == cols - a.rank() && a.mul_transpose(&k).expect("widths match").is_zero();
        c.case(ok, || format!("kernel of {rows}x{cols}"));
    }
    c.finish()
}

pub fn check_rref_idempotent() -> CheckResult {
    let mut c = Check::new("gf2/rref-idempotent");
    let mut rng = rng(0x04);
    for _ in 0..CASES {
        let (rows, cols) = (rng.gen_range(0..=20), rng.gen_range(0..=24));
        let a = random_matrix(&mut rng, rows, cols);
        let once = a.rref();
        let twice = once.matrix.rref();
        let increasing = once.pivots.windows(2).all(|w| w[0] < w[1]);
        c.case(once == twice && increasing, || {
            "rref not stable".to_string()
        });
    }
    c.finish()
}

pub fn check_symplectic_form() -> CheckResult {
    let mut c = Check::new("gf2/symplectic-bilinear-alternating");
    let mut rng = rng(0x05);
    for _ in 0..CASES {
        let n = rng.gen_range(1..=32);
        let u = random_symplectic(&mut rng, n);
        let v = random_symplectic(&mut rng, n);
        let w = random_symplectic(&mut rng, n);
        let mut uv = u.clone();
        uv.xor_assign(&v);
        let bilinear = uv.product(&w).unwrap() == (u.product(&w).unwrap() ^ v.product(&w).unwrap());
        let alternating = !u.product(&u).unwrap();
        let symmetric = u.product(&v).unwrap() == v.product(&u).unwrap();
        c.case(bilinear && alternating && symmetric, || {
            format!("form axioms failed at n={n}")
        });
    }
    c.finish()
}

// --- rm ----------------------------------------------------------------

pub fn check_eval_linearity() -> CheckResult {
    let mut c = Check::new("rm/eval-linearity");
    let mut rng = rng(0x10);
    let caps = Caps::default();
    for _ in 0..CASES {
        let m = rng.gen_range(1..=10);
        let f = random_polynomial(&mut rng, m);
        let g = random_polynomial(&mut rng, m);
        let sum = f.add(&g).unwrap();
        let mut lhs = eval_vector(&f, &caps).unwrap();
        lhs.xor_assign(&eval_vector(&g, &caps).unwrap());
        c.case(eval_vector(&sum, &caps).unwrap() == lhs, || {
            format!("eval(f+g) != eval(f)+eval(g) for f={f}, g={g}")
        });
    }
    c.finish()
}

pub fn check_eval_product() -> CheckResult {
    let mut c = Check::new("rm/eval-product");
    let mut rng = rng(0x11);
    let caps = Caps::default();
    for _ in 0..CASES {
        let m = rng.gen_range(1..=10);
        let f = random_polynomial(&mut rng, m);
        let g = random_polynomial(&mut rng, m);
        let prod = f.mul(&g).unwrap();
        let lhs = eval_vector(&f, &caps)
            .unwrap()
            .and(&eval_vector(&g, &caps).unwrap())
            .unwrap();
        c.case(eval_vector(&prod, &caps).unwrap() == lhs, || {
            format!("eval(fg) != eval(f) AND eval(g) for f={f}, g={g}")
        });
    }
    c.finish()
}

pub fn check_eval_tensor() -> CheckResult {
    let mut c = Check::new("rm/eval-tensor");
    let mut rng = rng(0x12);
    let caps = Caps::default();
    for _ in 0..CASES {
        let m1 = rng.gen_range(1..=8);
        let m2 = rng.gen_range(1..=(16 - m1).min(8));
        let mask_a: u32 = rng.gen_range(0..1u32 << m1);
        let mask_b: u32 = rng.gen_range(0..1u32 << m2);
        let idx = |mask: u32, m: u32| -> Vec<u32> {
            (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect()
        };
        let a = Monomial::new(m1, &idx(mask_a, m1)).unwrap();
        let b = Monomial::new(m2, &idx(mask_b, m2)).unwrap();
        let ea = eval_vector(&Polynomial::from_monomials(m1, &[a]).unwrap(), &caps).unwrap();
        let eb = eval_vector(&Polynomial::from_monomials(m2, &[b]).unwrap(), &caps).unwrap();
        let row_a = Gf2Matrix::from_rows(1 << m1, &[ea]).unwrap();
        let row_b = Gf2Matrix::from_rows(1 << m2, &[eb]).unwrap();
        let tensor = row_a.kron(&row_b).unwrap();

        // x_A over m1 joined with x_B shifted into variables m1+1..m1+m2
        let mut joined: Vec<u32> = idx(mask_a, m1);
        joined.extend(idx(mask_b, m2).iter().map(|i| i + m1));
        let big = Monomial::new(m1 + m2, &joined).unwrap();
        let expected =
            eval_vector(&Polynomial::from_monomials(m1 + m2, &[big]).unwrap(), &caps).unwrap();
        c.case(tensor.row(0) == expected, || {
            format!("tensor of x_A over m1={m1} and x_B over m2={m2}")
        });
    }
    c.finish()
}

/// Rows of the Kronecker power of `[1 1; 0 1]` of weight at least `2^(m-r)`
/// span exactly `RM(r, m)`.
pub fn check_plotkin_span() -> CheckResult {
    let mut c = Check::new("rm/plotkin-span");
    let caps = Caps::default();
    let family: Vec<(u32, u32)> = (1..=8u32)
        .flat_map(|m| (0..=m).map(move |r| (r, m)))
        .collect();
    let upper = Gf2Matrix::from_bit_rows(&["11", "01"]).unwrap();
    for case_idx in 0..CASES.max(family.len()) {
        let (r, m) = family[case_idx % family.len()];
        let mut power = Gf2Matrix::identity(1);
        for _ in 0..m {
            power = power.kron(&upper).unwrap();
        }
        let threshold = 1usize << (m - r);
        let kept: Vec<Gf2Vector> = (0..power.rows())
            .filter(|&i| power.row_weight(i) >= threshold)
            .map(|i| power.row(i))
            .collect();
        let filtered = Gf2Matrix::from_rows(1 << m, &kept).unwrap();
        let g = generator_matrix(RmSpec::new(r, m).unwrap(), &caps).unwrap();
        c.case(same_row_space(&filtered, &g), || format!("RM({r},{m})"));
    }
    c.finish()
}

pub fn check_nesting() -> CheckResult {
    let mut c = Check::new("rm/nesting");
    let caps = Caps::default();
    let family: Vec<(u32, u32)> = (1..=10u32)
        .flat_map(|m| (0..m).map(move |r| (r, m)))
        .collect();
    for case_idx in 0..CASES.max(family.len()) {
        let (r, m) = family[case_idx % family.len()];
        let inner = generator_matrix(RmSpec::new(r, m).unwrap(), &caps).unwrap();
        let outer = generator_matrix(RmSpec::new(r + 1, m).unwrap(), &caps).unwrap();
        c.case(outer.row_space_contains(&inner).unwrap(), || {
            format!("RM({r},{m}) not inside RM({},{m})", r + 1)
        });
    }
    c.finish()
}

pub fn check_duality() -> CheckResult {
    let mut c = Check::new("rm/duality");
    let caps = Caps::default();
    let family: Vec<(u32, u32)> = (1..=10u32)
        .flat_map(|m| (0..m).map(move |r| (r, m)))
        .collect();
    for case_idx in 0..CASES.max(family.len()) {
        let (r, m) = family[case_idx % family.len()];
        let g = generator_matrix(RmSpec::new(r, m).unwrap(), &caps).unwrap();
        let dual = generator_matrix(RmSpec::new(m - r - 1, m).unwrap(), &caps).unwrap();
        c.case(g.mul_transpose(&dual).unwrap().is_zero(), || {
            format!("RM({r},{m}) not orthogonal to RM({},{m})", m - r - 1)
        });
    }
    c.finish()
}

/// The dual-quotient Gram matrix has full rank for every `r < (m-1)/2`.
pub fn check_quotient_full_rank() -> CheckResult {
    let mut c = Check::new("rm/quotient-full-rank");
    let caps = Caps::default();
    for m in 2..=12u32 {
        for r in 0..m {
            if 2 * r + 1 >= m {
                continue;
            }
            let q = dual_quotient_basis(RmSpec::new(r, m).unwrap(), &caps).unwrap();
            c.case(q.matrix.gram().rank() == q.matrix.rows(), || {
                format!("quotient Gram of RM({r},{m}) rank-deficient")
            });
        }
    }
    c.finish()
}

// --- tpc ---------------------------------------------------------------

pub fn check_dual_containment_transfer() -> CheckResult {
    let mut c = Check::new("tpc/dual-containment-transfer");
    let mut rng = rng(0x20);
    let caps = Caps::default();
    for _ in 0..CASES {
        let m1 = rng.gen_range(1..=4);
        let r1 = rng.gen_range(0..=m1);
        let m2 = rng.gen_range(1..=4);
        let r2 = rng.gen_range(0..=m2);
        let h1 = parity_check_matrix(RmSpec::new(r1, m1).unwrap(), &caps).unwrap();
        let h2 = parity_check_matrix(RmSpec::new(r2, m2).unwrap(), &caps).unwrap();
        let h = h1.kron(&h2).unwrap();
        let lhs = h.gram().is_zero();
        let rhs = h1.gram().is_zero() || h2.gram().is_zero();
        c.case(lhs == rhs, || {
            format!("transfer failed for RM({r1},{m1}) x RM({r2},{m2})")
        });
    }
    c.finish()
}

pub fn check_small_tpc_distances() -> CheckResult {
    let mut c = Check::new("tpc/small-distance-oracle");
    let caps = Caps::default();
    // (H1 rows, H2 rows, expected min(d1, d2))
    let cases: Vec<(Vec<&str>, Vec<&str>, usize)> = vec![
        (vec!["111"], vec!["11"], 2),
        (vec!["111"], vec!["111"], 2),
        (vec!["1111"], vec!["11"], 2),
    ];
    for (h1_rows, h2_rows, expected) in cases {
        let h1 = Gf2Matrix::from_bit_rows(&h1_rows).unwrap();
        let h2 = Gf2Matrix::from_bit_rows(&h2_rows).unwrap();
        let h = h1.kron(&h2).unwrap();
        let gen = h.kernel_basis();
        let d = crate::rm::min_distance_bruteforce(&gen, &caps).unwrap();
        c.case(d == expected, || format!("expected d={expected}, got {d}"));
    }
    c.finish()
}

// --- ea ----------------------------------------------------------------

pub fn check_sgs_invariants() -> CheckResult {
    let mut c = Check::new("ea/sgs-invariants");
    let mut rng = rng(0x30);
    for _ in 0..CASES {
        let n = rng.gen_range(1..=16);
        let count = rng.gen_range(0..=24);
        let gens: Vec<SymplecticVector> =
            (0..count).map(|_| random_symplectic(&mut rng, n)).collect();
        let sgs = symplectic_gram_schmidt(&gens).unwrap();

        let mut ok = true;
        // pair members anticommute; everything else commutes
        let mut finals: Vec<&SymplecticVector> = Vec::new();
        for (a, b) in &sgs.pairs {
            ok &= a.product(b).unwrap();
            finals.push(a);
            finals.push(b);
        }
        finals.extend(sgs.isotropic.iter());
        for (i, u) in finals.iter().enumerate() {
            for (j, v) in finals.iter().enumerate().skip(i + 1) {
                // finals are laid out pair-major: indices (2p, 2p+1) are pair p
                let paired = i % 2 == 0 && j == i + 1 && i / 2 < sgs.pairs.len();
                if !paired {
                    ok &= !u.product(v).unwrap();
                }
            }
        }

        // the span of the final generators equals the span of the input
        let to_rows = |vs: &[SymplecticVector]| -> Gf2Matrix {
            let rows: Vec<Gf2Vector> = vs.iter().map(SymplecticVector::to_check_row).collect();
            Gf2Matrix::from_rows(2 * n, &rows).unwrap()
        };
        let final_vecs: Vec<SymplecticVector> = finals.iter().map(|v| (*v).clone()).collect();
        ok &= same_row_space(&to_rows(&gens), &to_rows(&final_vecs));

        // pair count equals half the rank of the symplectic Gram matrix
        let gram = Gf2Matrix::from_fn(count, count, |i, j| gens[i].product(&gens[j]).unwrap());
        ok &= 2 * sgs.pair_count() == gram.rank();

        // extending the original generators by their h_ex / h_ez bits makes
        // the whole set commute
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
        for (i, u) in extended.iter().enumerate() {
            for v in extended.iter().skip(i + 1) {
                ok &= !u.product(v).unwrap();
            }
        }

        c.case(ok, || format!("SGS invariants failed at n={n}, k={count}"));
    }
    c.finish()
}

/// Matrix-path ebit count equals the closed form for every `r < (m-1)/2`.
pub fn check_ebit_closed_form(max_m: u32) -> CheckResult {
    let mut c = Check::new("ea/ebit-closed-form");
    let caps = Caps::default();
    for m in 2..=max_m {
        for r in 0..m {
            if 2 * r + 1 >= m {
                continue;
            }
            let spec = RmSpec::new(r, m).unwrap();
            let h = parity_check_matrix(spec, &caps).unwrap();
            let got = BigUint::from(ebit_count(&h));
            c.case(got == ebit_count_rm_closed_form(spec), || {
                format!("ebit count mismatch for RM({r},{m})")
            });
        }
    }
    c.finish()
}

pub fn check_ebit_kron_multiplicative() -> CheckResult {
    let mut c = Check::new("ea/ebit-kron-multiplicative");
    let caps = Caps::default();
    for m1 in 1..=5u32 {
        for r1 in 0..=m1 {
            for m2 in 1..=5u32 {
                for r2 in 0..=m2 {
                    let h1 = parity_check_matrix(RmSpec::new(r1, m1).unwrap(), &caps).unwrap();
                    let h2 = parity_check_matrix(RmSpec::new(r2, m2).unwrap(), &caps).unwrap();
                    let h = h1.kron(&h2).unwrap();
                    c.case(ebit_count(&h) == ebit_count(&h1) * ebit_count(&h2), || {
                        format!("RM({r1},{m1}) x RM({r2},{m2})")
                    });
                }
            }
        }
    }
    c.finish()
}

/// EA tensor-product ebit counts: closed-form product against the direct
/// Gram rank, below the audit cap on the product length.
pub fn check_ea_tpc_ebits_direct() -> CheckResult {
    let mut c = Check::new("ea/ea-tpc-ebits-direct");
    let caps = Caps::default();
    for m1 in 2..=6u32 {
        for r1 in 0..m1 {
            if 2 * r1 + 1 >= m1 {
                continue;
            }
            for m2 in 2..=6u32 {
                if pow2(u64::from(m1 + m2)) > BigUint::from(4096u32) {
                    continue;
                }
                for r2 in 0..m2 {
                    if 2 * r2 + 1 >= m2 {
                        continue;
                    }
                    let s1 = RmSpec::new(r1, m1).unwrap();
                    let s2 = RmSpec::new(r2, m2).unwrap();
                    let h1 = parity_check_matrix(s1, &caps).unwrap();
                    let h2 = parity_check_matrix(s2, &caps).unwrap();
                    let direct = BigUint::from(ebit_count(&h1.kron(&h2).unwrap()));
                    let closed = ebit_count_rm_closed_form(s1) * ebit_count_rm_closed_form(s2);
                    c.case(direct == closed, || {
                        format!("EA TPC ebits mismatch for RM({r1},{m1}) x RM({r2},{m2})")
                    });
                }
            }
        }
    }
    c.finish()
}

pub fn check_extended_matrix_commutes() -> CheckResult {
    let mut c = Check::new("ea/extended-matrix-commutes");
    let mut rng = rng(0x31);
    let caps = Caps::default();
    // Reed-Muller parity checks in the EA range, plus random parity checks
    let mut inputs: Vec<Gf2Matrix> = Vec::new();
    for m in 2..=6u32 {
        for r in 0..m {
            if 2 * r + 1 < m {
                inputs.push(parity_check_matrix(RmSpec::new(r, m).unwrap(), &caps).unwrap());
            }
        }
    }
    while inputs.len() < 60 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=12);
        inputs.push(random_matrix(&mut rng, rows, cols));
    }
    for h in &inputs {
        let ext = build_css_extension(h).unwrap();
        let rows: Vec<SymplecticVector> = (0..ext.matrix.rows())
            .map(|i| SymplecticVector::from_check_row(&ext.matrix.row(i)).unwrap())
            .collect();
        let mut ok = ext.matrix.cols() == 2 * (h.cols() + ext.ebit_count());
        for (i, u) in rows.iter().enumerate() {
            for v in rows.iter().skip(i + 1) {
                ok &= !u.product(v).unwrap();
            }
        }
        ok &= ext.ebit_count() == ebit_count(h);
        c.case(ok, || format!("extension of {:?} not abelian", h.shape()));
    }
    c.finish()
}

pub fn check_css_pair_count() -> CheckResult {
    let mut c = Check::new("ea/css-pair-count");
    let mut rng = rng(0x32);
    for _ in 0..CASES {
        let rows = rng.gen_range(0..=8);
        let cols = rng.gen_range(1..=12);
        let h = random_matrix(&mut rng, rows, cols);
        let css = css_check_matrix(&h, &h).unwrap();
        let gens: Vec<SymplecticVector> = (0..css.rows())
            .map(|i| SymplecticVector::from_check_row(&css.row(i)).unwrap())
            .collect();
        let sgs = symplectic_gram_schmidt(&gens).unwrap();
        c.case(sgs.pair_count() == ebit_count(&h), || {
            format!("pair count != gfrank(H H^T) for {:?}", h.shape())
        });
    }
    c.finish()
}

// --- rate --------------------------------------------------------------

pub fn check_zero_rate_closed_form(max_m: u32) -> CheckResult {
    let mut c = Check::new("rate/ea-rm-zero-logical");
    for m in 2..=max_m {
        for r in 0..m {
            if 2 * r + 1 >= m {
                continue;
            }
            let v = ea_rm_logical_qubits(RmSpec::new(r, m).unwrap());
            c.case(v.is_zero(), || {
                format!("RM({r},{m}) logical count {v} != 0")
            });
        }
    }
    c.finish()
}

pub fn check_tpc_positive_rate(max_m: u32) -> CheckResult {
    let mut c = Check::new("rate/ea-tpc-positive-logical");
    for m1 in 2..=max_m {
        for r1 in 0..m1 {
            if 2 * r1 + 1 >= m1 {
                continue;
            }
            for m2 in 2..=max_m {
                for r2 in 0..m2 {
                    if 2 * r2 + 1 >= m2 {
                        continue;
                    }
                    let k = ea_tpc_logical_qubits(
                        RmSpec::new(r1, m1).unwrap(),
                        RmSpec::new(r2, m2).unwrap(),
                    );
                    c.case(!k.is_zero(), || {
                        format!("zero logical count for RM({r1},{m1}) x RM({r2},{m2})")
                    });
                }
            }
        }
    }
    c.finish()
}

/// The closed-form logical count agrees with `n - 2 rho + n_e` computed from
/// the parameter formulas (two independent formula paths).
pub fn check_tpc_logical_two_paths(max_m: u32) -> CheckResult {
    let mut c = Check::new("rate/ea-tpc-logical-two-paths");
    for m1 in 2..=max_m {
        for r1 in 0..m1 {
            if 2 * r1 + 1 >= m1 {
                continue;
            }
            for m2 in 2..=max_m {
                for r2 in 0..m2 {
                    if 2 * r2 + 1 >= m2 {
                        continue;
                    }
                    let s1 = RmSpec::new(r1, m1).unwrap();
                    let s2 = RmSpec::new(r2, m2).unwrap();
                    let closed = BigInt::from(ea_tpc_logical_qubits(s1, s2));
                    let c1 = rm_params(s1);
                    let c2 = rm_params(s2);
                    let n = BigInt::from(&c1.n * &c2.n);
                    let rho = BigInt::from(c1.rho() * c2.rho());
                    let n_e =
                        BigInt::from(ebit_count_rm_closed_form(s1) * ebit_count_rm_closed_form(s2));
                    let direct = n - BigInt::from(2u32) * rho + n_e;
                    c.case(closed == direct, || {
                        format!("paths disagree for RM({r1},{m1}) x RM({r2},{m2})")
                    });
                }
            }
        }
    }
    c.finish()
}

pub fn check_threshold_sign_agreement() -> CheckResult {
    let mut c = Check::new("rate/threshold-sign-agreement");
    for r in 1..=20u64 {
        for s in 1..=12u64 {
            let spec = RmSpec::new(r as u32, (2 * r + s) as u32).unwrap();
            let count = catalytic_count(spec, spec);
            c.case(count.is_positive() == positive_catalytic_test(r, s), || {
                format!("sign disagreement at r={r}, s={s}")
            });
        }
    }
    c.finish()
}

pub fn check_threshold_monotone() -> CheckResult {
    let mut c = Check::new("rate/threshold-monotone");
    for r in 1..=20u64 {
        let mut failed = false;
        let mut ok = true;
        for s in 1..=30u64 {
            let t = positive_catalytic_test(r, s);
            if failed && t {
                ok = false;
            }
            if !t {
                failed = true;
            }
        }
        c.case(ok, || format!("test recovered after failing at r={r}"));
    }
    c.finish()
}

pub fn check_l_of_r_spots() -> CheckResult {
    let mut c = Check::new("rate/l-of-r-spots");
    for (r, expected) in [(1, 2), (5, 2), (6, 3), (13, 3), (14, 4), (162, 10)] {
        c.case(l_of_r(r) == expected, || format!("l({r}) != {expected}"));
    }
    c.finish()
}

// --- suites ------------------------------------------------------------

pub const SUITE_NAMES: &[&str] = &["gf2", "rm", "tpc", "ea", "rate", "properties", "all"];

fn gf2_suite() -> Vec<CheckResult> {
    vec![
        check_rank_transpose(),
        check_rank_kron_multiplicative(),
        check_kernel_orthogonality(),
        check_rref_idempotent(),
        check_symplectic_form(),
    ]
}

fn rm_suite() -> Vec<CheckResult> {
    vec![
        check_eval_linearity(),
        check_eval_product(),
        check_eval_tensor(),
        check_plotkin_span(),
        check_nesting(),
        check_duality(),
        check_quotient_full_rank(),
    ]
}

fn tpc_suite() -> Vec<CheckResult> {
    vec![
        check_dual_containment_transfer(),
        check_small_tpc_distances(),
    ]
}

fn ea_suite() -> Vec<CheckResult> {
    vec![
        check_sgs_invariants(),
        check_ebit_closed_form(12),
        check_ebit_kron_multiplicative(),
        check_ea_tpc_ebits_direct(),
        check_extended_matrix_commutes(),
        check_css_pair_count(),
    ]
}

fn rate_suite() -> Vec<CheckResult> {
    vec![
        check_zero_rate_closed_form(40),
        check_tpc_positive_rate(20),
        check_tpc_logical_two_paths(20),
        check_threshold_sign_agreement(),
        check_threshold_monotone(),
        check_l_of_r_spots(),
    ]
}

/// The randomized property families at their stated size caps.
fn properties_suite() -> Vec<CheckResult> {
    vec![
        check_eval_linearity(),
        check_eval_product(),
        check_eval_tensor(),
        check_plotkin_span(),
        check_nesting(),
        check_duality(),
        check_rank_kron_multiplicative(),
        check_sgs_invariants(),
        check_dual_containment_transfer(),
    ]
}

/// Run a named suite. `all` runs every module suite.
pub fn run_suite(name: &str) -> Result<Vec<CheckResult>> {
    match name {
        "gf2" => Ok(gf2_suite()),
        "rm" => Ok(rm_suite()),
        "tpc" => Ok(tpc_suite()),
        "ea" => Ok(ea_suite()),
        "rate" => Ok(rate_suite()),
        "properties" => Ok(properties_suite()),
        "all" => {
            let mut out = gf2_suite();
            out.extend(rm_suite());
            out.extend(tpc_suite());
            out.extend(ea_suite());
            out.extend(rate_suite());
            Ok(out)
        }
        other => Err(Error::Parse(format!(
            "unknown suite {other:?}; expected one of {SUITE_NAMES:?}"
        ))),
    }
}
