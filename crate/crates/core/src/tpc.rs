//! Classical tensor product and product codes.
//!
//! A tensor product code is defined by its parity check matrix `H1 (x) H2`;
//! a product code by its generator `G1 (x) G2`. Parameters follow the closed
//! forms `[n1 n2, n1 n2 - rho1 rho2, min(d1, d2)]`; the distance is reported
//! from the closed form and never silently replaced by enumeration (the
//! brute-force oracle in [`crate::rm`] is a separate, capped check).

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::params::{ClassicalCodeParams, DistanceSource};
use crate::rm::{generator_matrix, RmSpec};

/// Parity check matrix `h1 (x) h2` of the tensor product code.
pub fn tpc_parity(h1: &Gf2Matrix, h2: &Gf2Matrix) -> Result<Gf2Matrix> {
    h1.kron(h2)
}

/// Generator matrix `g1 (x) g2` of the product code.
pub fn product_generator(g1: &Gf2Matrix, g2: &Gf2Matrix) -> Result<Gf2Matrix> {
    g1.kron(g2)
}

/// Closed-form parameters of the tensor product of two classical codes:
/// `[n1 n2, n1 n2 - rho1 rho2, min(d1, d2)]`.
pub fn tpc_params(c1: &ClassicalCodeParams, c2: &ClassicalCodeParams) -> ClassicalCodeParams {
    let n = &c1.n * &c2.n;
    let k = &n - c1.rho() * c2.rho();
    let d = c1.d.clone().min(c2.d.clone());
    ClassicalCodeParams::new(n, k, d, DistanceSource::ClosedForm).expect("rho1 rho2 <= n1 n2")
}

/// Outcome of the two Reed-Muller product-code containment checks.
///
/// `product_in_sum_code` verifies that the product code generated by
/// `RM(r1, m1)` and `RM(r2, m2)` lies inside `RM(r1+r2, m1+m2)`;
/// `sum_code_in_clamped_product` verifies the reverse containment of
/// `RM(r, m1+m2)` (with `r = r1+r2`) inside the product of the order-clamped
/// codes `RM(min(r, m1), m1)` and `RM(min(r, m2), m2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RmContainmentReport {
    pub product_in_sum_code: bool,
    pub sum_code_in_clamped_product: bool,
}

impl RmContainmentReport {
    pub fn both_hold(&self) -> bool {
        self.product_in_sum_code && self.sum_code_in_clamped_product
    }
}

/// Run both containment checks on explicit matrices. Refused when
/// `m1 + m2` exceeds the containment cap.
pub fn check_rm_tpc_containments(
    r1: u32,
    m1: u32,
    r2: u32,
    m2: u32,
    caps: &Caps,
) -> Result<RmContainmentReport> {
    let m_sum = m1 + m2;
    if m_sum > caps.containment_m_sum {
        return Err(Error::CapExceeded {
            what: "row-space containment check (m1 + m2)",
            required: u64::from(m_sum),
            cap: u64::from(caps.containment_m_sum),
        });
    }
    let r = r1 + r2;
    let g1 = generator_matrix(RmSpec::new(r1, m1)?, caps)?;
    let g2 = generator_matrix(RmSpec::new(r2, m2)?, caps)?;
    let product = product_generator(&g1, &g2)?;
    let sum_code = generator_matrix(RmSpec::new(r, m_sum)?, caps)?;

    let clamped1 = generator_matrix(RmSpec::new(r.min(m1), m1)?, caps)?;
    let clamped2 = generator_matrix(RmSpec::new(r.min(m2), m2)?, caps)?;
    let clamped_product = product_generator(&clamped1, &clamped2)?;

    Ok(RmContainmentReport {
        product_in_sum_code: sum_code.row_space_contains(&product)?,
        sum_code_in_clamped_product: clamped_product.row_space_contains(&sum_code)?,
    })
}
