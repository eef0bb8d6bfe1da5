//! Entanglement-assisted CSS construction: ebit counting, CSS check-matrix
//! assembly, symplectic Gram-Schmidt orthogonalization, and the extension
//! columns that restore commutativity on fresh entangled qubits.
//!
//! The check matrix built from a single classical parity check `H` (used for
//! both the X and Z blocks) fails to describe an abelian group exactly where
//! `H H^T` is nonzero; the number of hyperbolic pairs found by symplectic
//! Gram-Schmidt equals `gfrank(H H^T)`, and each pair is neutralized by one
//! fresh qubit carrying an X extension bit on the pair's first member and a
//! Z extension bit on its second.

use num::{BigInt, BigUint};

use crate::binom::pow2;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, SymplecticVector};
use crate::params::{ClassicalCodeParams, EaCodeParams};
use crate::rm::{dual_quotient_dimension, parity_check_matrix, rm_params, RmSpec};
use crate::tpc::tpc_params;

/// Number of pre-shared entangled pairs needed by the EA CSS construction
/// from a classical code with parity check `h`: `gfrank(h h^T)`.
pub fn ebit_count(h: &Gf2Matrix) -> usize {
    h.gram().rank()
}

/// Closed-form ebit count for a Reed-Muller code:
/// `sum_{i=r+1}^{m-r-1} C(m, i)`, zero when the range is empty.
pub fn ebit_count_rm_closed_form(spec: RmSpec) -> BigUint {
    dual_quotient_dimension(spec)
}

/// Block-diagonal CSS check matrix `[h1 0; 0 h2]` over `2n` columns, X-type
/// rows first, then Z-type rows.
pub fn css_check_matrix(h1: &Gf2Matrix, h2: &Gf2Matrix) -> Result<Gf2Matrix> {
    if h1.cols() != h2.cols() {
        return Err(Error::DimensionMismatch {
            op: "css_check_matrix",
            lhs_rows: h1.rows(),
            lhs_cols: h1.cols(),
            rhs_rows: h2.rows(),
            rhs_cols: h2.cols(),
        });
    }
    let n = h1.cols();
    let top = Gf2Matrix::hstack(&[h1, &Gf2Matrix::zeros(h1.rows(), n)])?;
    let bottom = Gf2Matrix::hstack(&[&Gf2Matrix::zeros(h2.rows(), n), h2])?;
    Gf2Matrix::vstack(&[&top, &bottom])
}

/// Result of symplectic Gram-Schmidt orthogonalization.
///
/// `pairs` and `isotropic` hold the final (possibly updated) generators:
/// within a pair the symplectic product is 1, and any two generators not
/// forming a pair commute. `h_ex` and `h_ez` assign extension bits to the
/// *original* generators, one fresh qubit column per pair: original
/// generator `i` extended by X bits `h_ex` row `i` and Z bits `h_ez` row `i`
/// commutes with every other extended original generator.
#[derive(Debug, Clone)]
pub struct SgsResult {
    pub n: usize,
    pub pairs: Vec<(SymplecticVector, SymplecticVector)>,
    pub isotropic: Vec<SymplecticVector>,
    /// Input positions of each pair's (first, second) member.
    pub pair_positions: Vec<(usize, usize)>,
    /// Input positions of the isotropic generators, in processing order.
    pub isotropic_positions: Vec<usize>,
    /// `k x n_e`: X extension bits per original generator.
    pub h_ex: Gf2Matrix,
    /// `k x n_e`: Z extension bits per original generator.
    pub h_ez: Gf2Matrix,
}

impl SgsResult {
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

/// Symplectic Gram-Schmidt over the input generators, in input order.
///
/// At the first unprocessed generator `g`, scan forward for the first `g'`
/// anticommuting with it; if none exists `g` is isotropic, otherwise
/// `(g, g')` form the next pair and every other unprocessed `h` is replaced
/// by `h + <h,g'> g + <h,g> g'`. Row operations are tracked so that each
/// original generator can be expressed over the final basis; the extension
/// bits of an original generator are the XOR of the extension bits of the
/// final generators it decomposes into, which makes the extended original
/// set abelian.
pub fn symplectic_gram_schmidt(gens: &[SymplecticVector]) -> Result<SgsResult> {
    let n = gens.first().map_or(0, SymplecticVector::n);
    for g in gens {
        if g.n() != n {
            return Err(Error::SymplecticLengthMismatch { lhs: n, rhs: g.n() });
        }
    }
    let k = gens.len();
    let mut vecs: Vec<SymplecticVector> = gens.to_vec();
    // current = transform * original
    let mut transform = Gf2Matrix::identity(k);
    let mut processed = vec![false; k];
    let mut pair_positions = Vec::new();
    let mut isotropic_positions = Vec::new();

    for i in 0..k {
        if processed[i] {
            continue;
        }
        let partner = (i + 1..k).find(|&j| !processed[j] && vecs[i].product_unchecked(&vecs[j]));
        let Some(j) = partner else {
            processed[i] = true;
            isotropic_positions.push(i);
            continue;
        };
        processed[i] = true;
        processed[j] = true;
        pair_positions.push((i, j));
        for h in 0..k {
            if processed[h] {
                continue;
            }
            if vecs[h].product_unchecked(&vecs[j]) {
                let v = vecs[i].clone();
                vecs[h].xor_assign(&v);
                transform.add_row_into(i, h);
            }
            if vecs[h].product_unchecked(&vecs[i]) {
                let v = vecs[j].clone();
                vecs[h].xor_assign(&v);
                transform.add_row_into(j, h);
            }
        }
    }

    let n_e = pair_positions.len();
    let mut final_x = Gf2Matrix::zeros(k, n_e);
    let mut final_z = Gf2Matrix::zeros(k, n_e);
    for (p, &(i, j)) in pair_positions.iter().enumerate() {
        final_x.set(i, p, true);
        final_z.set(j, p, true);
    }
    let inverse = transform
        .inverse()
        .expect("row operations keep the transform invertible");
    let h_ex = inverse.multiply(&final_x)?;
    let h_ez = inverse.multiply(&final_z)?;

    Ok(SgsResult {
        n,
        pairs: pair_positions
            .iter()
            .map(|&(i, j)| (vecs[i].clone(), vecs[j].clone()))
            .collect(),
        isotropic: isotropic_positions
            .iter()
            .map(|&i| vecs[i].clone())
            .collect(),
        pair_positions,
        isotropic_positions,
        h_ex,
        h_ez,
    })
}

/// A CSS check matrix extended onto `n + n_e` qubits so that all rows
/// commute.
#[derive(Debug, Clone)]
pub struct CssExtension {
    /// Qubit count of the unextended code.
    pub n: usize,
    /// Row count of the classical parity check (X rows = Z rows).
    pub rho: usize,
    pub sgs: SgsResult,
    /// `2 rho` rows over `2 (n + n_e)` columns: `[H H_ex | 0 0; 0 0 H H_ez]`.
    pub matrix: Gf2Matrix,
}

impl CssExtension {
    pub fn ebit_count(&self) -> usize {
        self.sgs.pair_count()
    }

    /// X extension bits of the X-type rows (the `H_ex` block).
    pub fn x_extension_block(&self) -> Gf2Matrix {
        self.sgs.h_ex.submatrix_rows(0, self.rho)
    }

    /// Z extension bits of the Z-type rows (the `H_ez` block).
    pub fn z_extension_block(&self) -> Gf2Matrix {
        self.sgs.h_ez.submatrix_rows(self.rho, 2 * self.rho)
    }
}

/// Build the CSS check matrix of `h` against itself, orthogonalize, and
/// append one extension column per hyperbolic pair.
pub fn build_css_extension(h: &Gf2Matrix) -> Result<CssExtension> {
    let n = h.cols();
    let rho = h.rows();
    let css = css_check_matrix(h, h)?;
    let gens: Vec<SymplecticVector> = (0..css.rows())
        .map(|i| SymplecticVector::from_check_row(&css.row(i)).expect("even width"))
        .collect();
    let sgs = symplectic_gram_schmidt(&gens)?;
    let rows: Vec<_> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            g.x()
                .concat(&sgs.h_ex.row(i))
                .concat(g.z())
                .concat(&sgs.h_ez.row(i))
        })
        .collect();
    let matrix = Gf2Matrix::from_rows(2 * (n + sgs.pair_count()), &rows)?;
    Ok(CssExtension {
        n,
        rho,
        sgs,
        matrix,
    })
}

/// The extended check matrix alone; see [`build_css_extension`].
pub fn extended_check_matrix(h: &Gf2Matrix) -> Result<Gf2Matrix> {
    Ok(build_css_extension(h)?.matrix)
}

/// EA CSS parameters `[[n, n - 2 rho + n_e, >= d; n_e]]` from a classical
/// code and its ebit count. Errors when the logical count would be negative.
pub fn ea_css_params(c: &ClassicalCodeParams, n_e: &BigUint) -> Result<EaCodeParams> {
    let n = BigInt::from(c.n.clone());
    let rho = BigInt::from(c.rho());
    let k = &n - BigInt::from(2u32) * &rho + BigInt::from(n_e.clone());
    let k_logical = k.to_biguint().ok_or_else(|| {
        Error::Infeasible(format!(
            "negative logical qubit count {k} for [{}, {}, {}] with n_e = {n_e}",
            c.n, c.k, c.d
        ))
    })?;
    Ok(EaCodeParams {
        n: c.n.clone(),
        k_logical,
        d_lower: c.d.clone(),
        n_e: n_e.clone(),
    })
}

/// Closed-form classical and EA parameters of a Reed-Muller code.
pub fn ea_rm_params(spec: RmSpec) -> Result<(ClassicalCodeParams, EaCodeParams)> {
    let classical = rm_params(spec);
    let n_e = ebit_count_rm_closed_form(spec);
    let ea = ea_css_params(&classical, &n_e)?;
    Ok((classical, ea))
}

/// Closed-form EA parameters of the tensor product code of two Reed-Muller
/// codes: `n = 2^(m1+m2)`, `rho = rho1 rho2`, `n_e = n_e1 n_e2`,
/// `d >= min(d1, d2)`.
pub fn ea_tpc_params(spec1: RmSpec, spec2: RmSpec) -> Result<EaCodeParams> {
    let c1 = rm_params(spec1);
    let c2 = rm_params(spec2);
    let n_e = ebit_count_rm_closed_form(spec1) * ebit_count_rm_closed_form(spec2);
    ea_css_params(&tpc_params(&c1, &c2), &n_e)
}

/// Everything the Reed-Muller EA construction produces: parameters plus the
/// explicit parity check and its entanglement extension.
#[derive(Debug, Clone)]
pub struct EaRmConstruction {
    pub spec: RmSpec,
    pub classical: ClassicalCodeParams,
    pub params: EaCodeParams,
    pub parity: Gf2Matrix,
    pub extension: CssExtension,
}

pub fn build_ea_rm(spec: RmSpec, caps: &Caps) -> Result<EaRmConstruction> {
    let parity = parity_check_matrix(spec, caps)?;
    let extension = build_css_extension(&parity)?;
    let classical = rm_params(spec);
    let n_e = BigUint::from(extension.ebit_count());
    debug_assert_eq!(n_e, ebit_count_rm_closed_form(spec));
    let params = ea_css_params(&classical, &n_e)?;
    debug_assert_eq!(params.n, pow2(u64::from(spec.m())));
    Ok(EaRmConstruction {
        spec,
        classical,
        params,
        parity,
        extension,
    })
}
