//! Exact rate analysis: coding, trade-off, and catalytic rates of EA codes,
//! the integer threshold test behind the positive-catalytic-rate subclass,
//! classification of the (r, m) plane, superadditivity and bound checks, and
//! table generation.
//!
//! All arithmetic is exact. Rates are kept as integer numerator over the
//! code length (never reduced, so printed values match the parameter
//! algebra), and the irrational comparison `a > 2^n / (2 + sqrt 2)` is
//! replaced by the equivalent integer test on `2a^2` versus `(2^n - 2a)^2`.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigUint, Signed, ToPrimitive, Zero};

use crate::binom::{binomial_sum, pow2};
use crate::caps::Caps;
use crate::ea::{ea_rm_params, ea_tpc_params, ebit_count_rm_closed_form};
use crate::error::{Error, Result};
use crate::params::{ClassicalCodeParams, EaCodeParams};
use crate::rm::{generator_matrix, parity_check_matrix, rm_params, RmSpec};
use crate::tpc::product_generator;

/// Decimal digits carried by [`Rate::decimal`]; rationals with longer exact
/// expansions are rounded (half away from zero) at this many significant
/// digits.
pub const RATE_SIGNIFICANT_DIGITS: usize = 17;

/// An exact rational stored as `numer / denom` with the denominator kept as
/// given (the code length), never reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rate {
    pub numer: BigInt,
    pub denom: BigUint,
}

impl Rate {
    pub fn new(numer: BigInt, denom: BigUint) -> Self {
        assert!(!denom.is_zero(), "rate denominator must be positive");
        Self { numer, denom }
    }

    pub fn from_counts(numer: &BigUint, denom: &BigUint) -> Self {
        Self::new(BigInt::from(numer.clone()), denom.clone())
    }

    pub fn is_positive(&self) -> bool {
        self.numer.is_positive()
    }

    /// Exact value comparison by cross multiplication.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let lhs = &self.numer * BigInt::from(other.denom.clone());
        let rhs = &other.numer * BigInt::from(self.denom.clone());
        lhs.cmp(&rhs)
    }

    /// Decimal expansion: exact when it terminates within
    /// [`RATE_SIGNIFICANT_DIGITS`] significant digits, otherwise rounded at
    /// that many significant digits.
    pub fn decimal(&self) -> String {
        decimal_string(&self.numer, &self.denom, RATE_SIGNIFICANT_DIGITS)
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

/// Render `numer / denom` as a decimal string with at most `significant`
/// significant digits (rounded half away from zero when truncated).
pub fn decimal_string(numer: &BigInt, denom: &BigUint, significant: usize) -> String {
    assert!(significant > 0);
    assert!(!denom.is_zero());
    if numer.is_zero() {
        return "0".to_string();
    }
    let negative = numer.sign() == Sign::Minus;
    let magnitude = numer.magnitude();
    let mut int_part = magnitude / denom;
    let mut rem = magnitude % denom;
    let ten = BigUint::from(10u32);

    let mut sig = if int_part.is_zero() {
        0
    } else {
        int_part.to_string().len()
    };
    let mut frac: Vec<u8> = Vec::new();
    let mut round_up = false;
    while !rem.is_zero() {
        rem *= &ten;
        let digit = (&rem / denom).to_u8().expect("single decimal digit");
        rem %= denom;
        if sig >= significant {
            round_up = digit >= 5;
            break;
        }
        frac.push(digit);
        if sig > 0 || digit != 0 {
            sig += 1;
        }
    }
    if round_up {
        let mut carry = true;
        for d in frac.iter_mut().rev() {
            *d += 1;
            if *d == 10 {
                *d = 0;
            } else {
                carry = false;
                break;
            }
        }
        if carry {
            int_part += 1u32;
        }
        while frac.last() == Some(&0) {
            frac.pop();
        }
    }
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if !frac.is_empty() {
        out.push('.');
        for d in &frac {
            out.push(char::from(b'0' + d));
        }
    }
    out
}

/// The three rate interpretations of an EA code, all over the code length:
/// the entanglement-assisted rate `k/n`, the trade-off pair `(k/n, n_e/n)`,
/// and the catalytic rate `(k - n_e)/n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateReport {
    pub ea_rate: Rate,
    pub tradeoff: (Rate, Rate),
    pub catalytic: Rate,
    pub catalytic_count: BigInt,
}

pub fn rates(p: &EaCodeParams) -> RateReport {
    let catalytic_count = p.catalytic_count();
    RateReport {
        ea_rate: Rate::from_counts(&p.k_logical, &p.n),
        tradeoff: (
            Rate::from_counts(&p.k_logical, &p.n),
            Rate::from_counts(&p.n_e, &p.n),
        ),
        catalytic: Rate::new(catalytic_count.clone(), p.n.clone()),
        catalytic_count,
    }
}

/// Logical qubit count `n - 2 rho + n_e` of the EA code built from a single
/// Reed-Muller code, via exact binomial sums. Zero throughout the
/// entanglement-assisted range `r < (m-1)/2`.
pub fn ea_rm_logical_qubits(spec: RmSpec) -> BigInt {
    let classical = rm_params(spec);
    let n_e = ebit_count_rm_closed_form(spec);
    BigInt::from(classical.n.clone()) - BigInt::from(2u32) * BigInt::from(classical.rho())
        + BigInt::from(n_e)
}

/// Closed-form logical qubit count of the EA tensor product code of
/// `RM(r1, m1)` and `RM(r2, m2)`:
/// `(sum_{j<=r1} C(m1, j)) (sum_{i<=r2} C(m2, i) + sum_{i>=m2-r2} C(m2, i))`.
///
/// Valid in the entanglement-assisted range `r_i < (m_i - 1)/2`, where it
/// equals `n - 2 rho + n_e`.
pub fn ea_tpc_logical_qubits(spec1: RmSpec, spec2: RmSpec) -> BigUint {
    let (r1, m1) = (u64::from(spec1.r()), u64::from(spec1.m()));
    let (r2, m2) = (u64::from(spec2.r()), u64::from(spec2.m()));
    let left = binomial_sum(m1, 0, r1);
    let right = binomial_sum(m2, 0, r2) + binomial_sum(m2, m2 - r2, m2);
    left * right
}

/// `k - n_e` of the EA tensor product code:
/// `2 (sum_{j<=r1} C(m1, j)) (sum_{u<=r2} C(m2, u))
///  - (sum C(m1, r1+1 ..= m1-r1-1)) (sum C(m2, r2+1 ..= m2-r2-1))`.
pub fn catalytic_count(spec1: RmSpec, spec2: RmSpec) -> BigInt {
    let (r1, m1) = (u64::from(spec1.r()), u64::from(spec1.m()));
    let (r2, m2) = (u64::from(spec2.r()), u64::from(spec2.m()));
    let logical = BigInt::from(2u32)
        * BigInt::from(binomial_sum(m1, 0, r1))
        * BigInt::from(binomial_sum(m2, 0, r2));
    let ebits = BigInt::from(ebit_count_rm_closed_form(spec1))
        * BigInt::from(ebit_count_rm_closed_form(spec2));
    logical - ebits
}

/// Exact integer form of the threshold test
/// `sum_{u<=r} C(2r+s, u) > 2^(2r+s) / (2 + sqrt 2)`.
///
/// With `a` the partial sum and `b = 2^(2r+s) - 2a`, the inequality is
/// equivalent to `b < 0 or 2 a^2 > b^2`; no floating point is involved, so
/// boundary cases cannot be misclassified.
pub fn positive_catalytic_test(r: u64, s: u64) -> bool {
    let n = 2 * r + s;
    let a = binomial_sum(n, 0, r);
    let b = BigInt::from(pow2(n)) - BigInt::from(2u32) * BigInt::from(a.clone());
    if b.is_negative() {
        return true;
    }
    let a = BigInt::from(a);
    BigInt::from(2u32) * &a * &a > &b * &b
}

/// Largest `i >= 1` for which [`positive_catalytic_test`] holds. The test is
/// monotone in `s` (once false it stays false), so the search stops at the
/// first failure; `i = 1` always passes (the middle sum is empty there).
pub fn l_of_r(r: u64) -> u64 {
    debug_assert!(positive_catalytic_test(r, 1));
    let mut i = 1;
    while positive_catalytic_test(r, i + 1) {
        i += 1;
    }
    i
}

/// Region of the (r, m) plane a Reed-Muller code falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Dual-containing range `r >= (m-1)/2`: the plain CSS construction
    /// applies with no entanglement.
    Qrm,
    /// `2r + 2 <= m <= 2r + l(r)`: the square EA tensor product code has
    /// positive catalytic rate.
    EaTpcPositiveCatalytic,
    /// The remaining entanglement-assisted range: zero or negative catalytic
    /// rate.
    EaTpcNonpositiveCatalytic,
}

impl Region {
    pub fn label(&self) -> &'static str {
        match self {
            Region::Qrm => "QRM",
            Region::EaTpcPositiveCatalytic => "EA_TPC_POSITIVE_CATALYTIC",
            Region::EaTpcNonpositiveCatalytic => "EA_TPC_NONPOSITIVE_CATALYTIC",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify(r: u32, m: u32) -> Result<Region> {
    if r > m {
        return Err(Error::InvalidRmSpec { r, m });
    }
    if 2 * r + 1 >= m {
        return Ok(Region::Qrm);
    }
    let (r, m) = (u64::from(r), u64::from(m));
    if m >= 2 * r + 2 && m <= 2 * r + l_of_r(r) {
        Ok(Region::EaTpcPositiveCatalytic)
    } else {
        Ok(Region::EaTpcNonpositiveCatalytic)
    }
}

/// Superadditivity comparison: the EA rate of the tensor product code
/// against the component EA rates.
#[derive(Debug, Clone)]
pub struct SuperadditivityReport {
    /// `(n1 n2 + n_e1 n_e2 - 2 rho1 rho2) / (n1 n2)`.
    pub tpc_rate: Rate,
    pub component_rates: (Rate, Rate),
    /// Product rate is at least the larger component rate.
    pub holds: bool,
    /// Strictness applies when `n_e1 < rho1` and `n_e2 < rho2`.
    pub strict_expected: bool,
    /// Product rate strictly exceeds both component rates.
    pub strict_holds: bool,
}

pub fn superadditivity_check(
    c1: &ClassicalCodeParams,
    c2: &ClassicalCodeParams,
    n_e1: &BigUint,
    n_e2: &BigUint,
) -> SuperadditivityReport {
    let component = |c: &ClassicalCodeParams, ne: &BigUint| -> Rate {
        let numer = BigInt::from(c.n.clone()) + BigInt::from(ne.clone())
            - BigInt::from(2u32) * BigInt::from(c.rho());
        Rate::new(numer, c.n.clone())
    };
    let rate1 = component(c1, n_e1);
    let rate2 = component(c2, n_e2);
    let n = &c1.n * &c2.n;
    let numer = BigInt::from(n.clone()) + BigInt::from(n_e1 * n_e2)
        - BigInt::from(2u32) * BigInt::from(c1.rho() * c2.rho());
    let tpc_rate = Rate::new(numer, n);
    let best = if rate1.cmp_value(&rate2) == Ordering::Less {
        &rate2
    } else {
        &rate1
    };
    let holds = tpc_rate.cmp_value(best) != Ordering::Less;
    let strict_holds = tpc_rate.cmp_value(best) == Ordering::Greater;
    let strict_expected = n_e1 < &c1.rho() && n_e2 < &c2.rho();
    SuperadditivityReport {
        tpc_rate,
        component_rates: (rate1, rate2),
        holds,
        strict_expected,
        strict_holds,
    }
}

/// Net entanglement production bound `n - 2d + 2`; the catalytic rate is
/// necessarily negative when this is negative.
pub fn grassl_bound_margin(n: &BigUint, d: &BigUint) -> Result<BigInt> {
    if d.is_zero() {
        return Err(Error::Infeasible("distance must be at least 1".into()));
    }
    Ok(BigInt::from(n.clone()) - BigInt::from(2u32) * BigInt::from(d.clone()) + BigInt::from(2u32))
}

/// One row of the threshold table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LrRow {
    pub r: u64,
    pub l: u64,
}

/// A run of consecutive `r` sharing the same `l(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LrRange {
    pub r_lo: u64,
    pub r_hi: u64,
    pub l: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrTable {
    pub rows: Vec<LrRow>,
    pub ranges: Vec<LrRange>,
}

/// `l(r)` for `r = 1 ..= r_max`, with the range-compressed form alongside.
pub fn table_l_r(r_max: u64) -> Result<LrTable> {
    if r_max < 1 {
        return Err(Error::Infeasible("r_max must be at least 1".into()));
    }
    let rows: Vec<LrRow> = (1..=r_max).map(|r| LrRow { r, l: l_of_r(r) }).collect();
    let mut ranges: Vec<LrRange> = Vec::new();
    for row in &rows {
        match ranges.last_mut() {
            Some(range) if range.l == row.l => range.r_hi = row.r,
            _ => ranges.push(LrRange {
                r_lo: row.r,
                r_hi: row.r,
                l: row.l,
            }),
        }
    }
    Ok(LrTable { rows, ranges })
}

/// One row of the worked-examples table: a Reed-Muller code, its EA CSS
/// code, and the square EA tensor product code with its catalytic rate.
#[derive(Debug, Clone)]
pub struct ExampleRow {
    pub spec: RmSpec,
    pub classical: ClassicalCodeParams,
    pub ea_rm: EaCodeParams,
    pub ea_tpc: EaCodeParams,
    pub catalytic: Rate,
    /// Set when the spec falls outside the positive-catalytic-rate region.
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ExamplesTable {
    pub rows: Vec<ExampleRow>,
}

pub fn table_examples(specs: &[RmSpec]) -> Result<ExamplesTable> {
    let mut rows = Vec::with_capacity(specs.len());
    for &spec in specs {
        let (classical, ea_rm) = ea_rm_params(spec)?;
        let ea_tpc = ea_tpc_params(spec, spec)?;
        let catalytic = Rate::new(ea_tpc.catalytic_count(), ea_tpc.n.clone());
        let note = match classify(spec.r(), spec.m())? {
            Region::Qrm => Some("dual-containing: unassisted CSS construction applies".to_string()),
            Region::EaTpcNonpositiveCatalytic => {
                Some("outside the positive catalytic-rate region".to_string())
            }
            Region::EaTpcPositiveCatalytic => None,
        };
        rows.push(ExampleRow {
            spec,
            classical,
            ea_rm,
            ea_tpc,
            catalytic,
            note,
        });
    }
    Ok(ExamplesTable { rows })
}

/// Which containment relation to compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContainmentCase {
    /// The quantum RM code `QRM(r1+r2+1, m1+m2)` whose codespace sits inside
    /// the codespace of the tensor product of `RM(r1, m1)` and `RM(r2, m2)`:
    /// the TPC parity checks lie in the row space of the QRM parity check.
    QrmInTpc { r1: u32, m1: u32, r2: u32, m2: u32 },
    /// The tensor product of `RM(0, m1)` and `RM(r - m1, m2)` whose codespace
    /// sits inside the codespace of `QRM(r, m1+m2)`: the QRM parity checks
    /// lie in the row space of the order-clamped product
    /// `RM(min(q, m1), m1) (x) RM(min(q, m2), m2)` with `q = m1+m2-r-1`.
    TpcInQrm { m1: u32, m2: u32, r: u32 },
}

/// Rates of both constructions, plus the row-space containment verdict when
/// the matrices fit under the containment cap (`None` above it).
#[derive(Debug, Clone)]
pub struct ContainmentComparison {
    pub case: ContainmentCase,
    pub qrm_spec: RmSpec,
    pub qrm: EaCodeParams,
    pub qrm_rates: RateReport,
    pub tpc_specs: (RmSpec, RmSpec),
    pub tpc: EaCodeParams,
    pub tpc_rates: RateReport,
    pub containment_verified: Option<bool>,
}

pub fn containment_comparison(case: ContainmentCase, caps: &Caps) -> Result<ContainmentComparison> {
    let (qrm_spec, tpc_specs) = match case {
        ContainmentCase::QrmInTpc { r1, m1, r2, m2 } => (
            RmSpec::new(r1 + r2 + 1, m1 + m2)?,
            (RmSpec::new(r1, m1)?, RmSpec::new(r2, m2)?),
        ),
        ContainmentCase::TpcInQrm { m1, m2, r } => {
            if m2 <= m1 || r <= m1 {
                return Err(Error::Infeasible(format!(
                    "containment comparison requires m2 > m1 and r > m1, got m1={m1}, m2={m2}, r={r}"
                )));
            }
            (
                RmSpec::new(r, m1 + m2)?,
                (RmSpec::new(0, m1)?, RmSpec::new(r - m1, m2)?),
            )
        }
    };
    let (_, qrm) = ea_rm_params(qrm_spec)?;
    let tpc = ea_tpc_params(tpc_specs.0, tpc_specs.1)?;
    let m_sum = tpc_specs.0.m() + tpc_specs.1.m();
    let containment_verified = if m_sum <= caps.containment_m_sum {
        Some(verify_containment(case, qrm_spec, tpc_specs, caps)?)
    } else {
        None
    };
    Ok(ContainmentComparison {
        case,
        qrm_spec,
        qrm_rates: rates(&qrm),
        qrm,
        tpc_specs,
        tpc_rates: rates(&tpc),
        tpc,
        containment_verified,
    })
}

fn verify_containment(
    case: ContainmentCase,
    qrm_spec: RmSpec,
    tpc_specs: (RmSpec, RmSpec),
    caps: &Caps,
) -> Result<bool> {
    match case {
        ContainmentCase::QrmInTpc { .. } => {
            let h_qrm = parity_check_matrix(qrm_spec, caps)?;
            let h1 = parity_check_matrix(tpc_specs.0, caps)?;
            let h2 = parity_check_matrix(tpc_specs.1, caps)?;
            h_qrm.row_space_contains(&h1.kron(&h2)?)
        }
        ContainmentCase::TpcInQrm { m1, m2, r } => {
            let m_sum = m1 + m2;
            if r >= m_sum {
                return Ok(true);
            }
            let q = m_sum - r - 1;
            let a = generator_matrix(RmSpec::new(q.min(m1), m1)?, caps)?;
            let b = generator_matrix(RmSpec::new(q.min(m2), m2)?, caps)?;
            let clamped = product_generator(&a, &b)?;
            let h_qrm = generator_matrix(RmSpec::new(q, m_sum)?, caps)?;
            clamped.row_space_contains(&h_qrm)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(r: u32, m: u32) -> RmSpec {
        RmSpec::new(r, m).unwrap()
    }

    fn ea(n: u64, k: u64, d: u64, ne: u64) -> EaCodeParams {
        EaCodeParams {
            n: BigUint::from(n),
            k_logical: BigUint::from(k),
            d_lower: BigUint::from(d),
            n_e: BigUint::from(ne),
        }
    }

    #[test]
    fn rates_of_worked_examples() {
        let report = rates(&ea(256, 50, 8, 36));
        assert_eq!(report.ea_rate.to_string(), "50/256");
        assert_eq!(report.ea_rate.decimal(), "0.1953125");
        assert_eq!(report.catalytic.to_string(), "14/256");
        assert_eq!(report.catalytic.decimal(), "0.0546875");
        assert_eq!(report.tradeoff.1.to_string(), "36/256");

        // no entanglement: EA rate and catalytic rate coincide
        let report = rates(&ea(16, 14, 2, 0));
        assert_eq!(report.ea_rate.cmp_value(&report.catalytic), Ordering::Equal);

        let report = rates(&ea(16, 0, 8, 6));
        assert_eq!(report.ea_rate.numer, BigInt::from(0));
        assert_eq!(report.catalytic.to_string(), "-6/16");
    }

    #[test]
    fn decimal_rendering() {
        let d = |n: i64, den: u64| decimal_string(&BigInt::from(n), &BigUint::from(den), 17);
        assert_eq!(d(0, 5), "0");
        assert_eq!(d(14, 256), "0.0546875");
        assert_eq!(d(-6435, 32768), "-0.196380615234375");
        assert_eq!(d(1, 3), "0.33333333333333333");
        assert_eq!(d(2, 3), "0.66666666666666667");
        assert_eq!(d(5, 2), "2.5");
        // rounding that carries across the point
        assert_eq!(
            decimal_string(&BigInt::from(1999i32), &BigUint::from(1000u32), 3),
            "2"
        );
        // the one Table II value that exceeds 17 significant digits
        let exact = Rate::new(BigInt::from(4177016i64), BigUint::from(16777216u64));
        assert_eq!(exact.decimal(), "0.24896955490112305");
    }

    #[test]
    fn rate_comparison_is_by_value() {
        let rate = |n: i64, d: u64| Rate::new(BigInt::from(n), BigUint::from(d));
        assert_eq!(rate(50, 256).cmp_value(&rate(25, 128)), Ordering::Equal);
        assert_eq!(rate(1, 3).cmp_value(&rate(1, 2)), Ordering::Less);
        assert_eq!(rate(-1, 4).cmp_value(&rate(-1, 2)), Ordering::Greater);
    }

    #[test]
    fn ea_rm_logical_qubits_is_zero_in_ea_range() {
        assert_eq!(ea_rm_logical_qubits(spec(1, 4)), BigInt::from(0));
        assert_eq!(ea_rm_logical_qubits(spec(3, 8)), BigInt::from(0));
        assert_eq!(ea_rm_logical_qubits(spec(5, 12)), BigInt::from(0));
    }

    #[test]
    fn ea_tpc_logical_qubits_closed_form() {
        assert_eq!(
            ea_tpc_logical_qubits(spec(1, 4), spec(1, 4)),
            BigUint::from(50u32)
        );
        assert_eq!(
            ea_tpc_logical_qubits(spec(2, 6), spec(2, 6)),
            BigUint::from(968u32)
        );
        assert_eq!(
            ea_tpc_logical_qubits(spec(4, 10), spec(4, 10)),
            BigUint::from(297992u32)
        );
    }

    #[test]
    fn catalytic_count_cases() {
        assert_eq!(catalytic_count(spec(1, 4), spec(1, 4)), BigInt::from(14));
        assert_eq!(catalytic_count(spec(2, 6), spec(2, 6)), BigInt::from(568));
        for i in 1..=20u32 {
            let s = spec(i, 2 * i + 2);
            assert!(catalytic_count(s, s).is_positive(), "i = {i}");
        }
    }

    #[test]
    fn threshold_test_cases() {
        // (r=1, s=2): a=5, b=6, 50 > 36
        assert!(positive_catalytic_test(1, 2));
        // (r=1, s=3): a=6, b=20, 72 < 400
        assert!(!positive_catalytic_test(1, 3));
        // (r=1, s=1): b=0
        assert!(positive_catalytic_test(1, 1));
    }

    #[test]
    fn l_of_r_spot_values() {
        assert_eq!(l_of_r(1), 2);
        assert_eq!(l_of_r(5), 2);
        assert_eq!(l_of_r(14), 4);
        assert_eq!(l_of_r(78), 7);
        assert_eq!(l_of_r(131), 9);
        assert_eq!(l_of_r(162), 10);
    }

    #[test]
    fn classification() {
        assert_eq!(classify(1, 4).unwrap(), Region::EaTpcPositiveCatalytic);
        assert_eq!(classify(3, 7).unwrap(), Region::Qrm);
        assert_eq!(classify(1, 7).unwrap(), Region::EaTpcNonpositiveCatalytic);
        assert_eq!(classify(0, 2).unwrap(), Region::EaTpcNonpositiveCatalytic);
        assert_eq!(classify(0, 1).unwrap(), Region::Qrm);
        assert!(classify(3, 2).is_err());
    }

    #[test]
    fn superadditivity_on_rm_pairs() {
        let c = rm_params(spec(1, 4));
        let ne = ebit_count_rm_closed_form(spec(1, 4));
        let report = superadditivity_check(&c, &c, &ne, &ne);
        assert_eq!(report.tpc_rate.to_string(), "50/256");
        assert!(report.holds && report.strict_expected && report.strict_holds);
        assert_eq!(report.component_rates.0.numer, BigInt::from(0));

        let c = rm_params(spec(3, 8));
        let ne = ebit_count_rm_closed_form(spec(3, 8));
        let report = superadditivity_check(&c, &c, &ne, &ne);
        assert_eq!(report.tpc_rate.to_string(), "17298/65536");
        assert!(report.holds && report.strict_holds);
    }

    #[test]
    fn superadditivity_equality_boundary() {
        // c1 with n_e = rho (saturated): [2,1,1] with H = [1 0], H H^T = [1]
        let c1 = ClassicalCodeParams::new(
            BigUint::from(2u32),
            BigUint::from(1u32),
            BigUint::from(1u32),
            crate::params::DistanceSource::BruteForce,
        )
        .unwrap();
        let ne1 = BigUint::from(1u32);
        // c2 a zero-rate EA component: RM(1,4)
        let c2 = rm_params(spec(1, 4));
        let ne2 = ebit_count_rm_closed_form(spec(1, 4));
        let report = superadditivity_check(&c1, &c2, &ne1, &ne2);
        assert!(report.holds);
        assert!(!report.strict_expected);
        // equality: (n1 - rho1)/n1 = 1/2 on both sides
        assert_eq!(
            report.tpc_rate.cmp_value(&report.component_rates.0),
            Ordering::Equal
        );
    }

    #[test]
    fn grassl_margin() {
        let g = |n: u64, d: u64| grassl_bound_margin(&BigUint::from(n), &BigUint::from(d)).unwrap();
        assert_eq!(g(256, 8), BigInt::from(242));
        assert_eq!(g(4, 4), BigInt::from(-2));
        for r in 1..=6u64 {
            for s in 1..=6u64 {
                let n = pow2(4 * r + 2 * s);
                let d = pow2(r + s);
                assert!(grassl_bound_margin(&n, &d).unwrap().is_positive());
            }
        }
        assert!(grassl_bound_margin(&BigUint::from(4u32), &BigUint::from(0u32)).is_err());
    }

    #[test]
    fn lr_table_compression() {
        let table = table_l_r(30).unwrap();
        assert_eq!(table.rows.len(), 30);
        assert_eq!(table.rows[4], LrRow { r: 5, l: 2 });
        assert_eq!(
            table.ranges[..3],
            [
                LrRange {
                    r_lo: 1,
                    r_hi: 5,
                    l: 2
                },
                LrRange {
                    r_lo: 6,
                    r_hi: 13,
                    l: 3
                },
                LrRange {
                    r_lo: 14,
                    r_hi: 24,
                    l: 4
                },
            ]
        );
    }

    #[test]
    fn examples_table_rows() {
        let table = table_examples(&[spec(1, 4), spec(0, 2)]).unwrap();
        let row = &table.rows[0];
        assert_eq!(row.classical.to_string(), "[16, 5, 8]");
        assert_eq!(row.ea_rm.to_string(), "[[16, 0, >=8; 6]]");
        assert_eq!(row.ea_tpc.to_string(), "[[256, 50, >=8; 36]]");
        assert_eq!(row.catalytic.decimal(), "0.0546875");
        assert!(row.note.is_none());

        // boundary: RM(0,2) is EA-constructible but catalytically negative
        let row = &table.rows[1];
        assert_eq!(row.ea_tpc.to_string(), "[[16, 2, >=4; 4]]");
        assert!(row.note.is_some());
    }

    #[test]
    fn containment_comparisons_quoted_numbers() {
        let caps = Caps::default();
        let report = containment_comparison(
            ContainmentCase::QrmInTpc {
                r1: 3,
                m1: 8,
                r2: 3,
                m2: 8,
            },
            &caps,
        )
        .unwrap();
        assert_eq!(report.qrm_spec, spec(7, 16));
        assert_eq!(report.qrm_rates.catalytic.to_string(), "-12870/65536");
        assert_eq!(report.tpc_rates.catalytic.to_string(), "12398/65536");
        assert_eq!(report.containment_verified, None); // above the cap

        let report = containment_comparison(
            ContainmentCase::TpcInQrm {
                m1: 5,
                m2: 11,
                r: 7,
            },
            &caps,
        )
        .unwrap();
        assert_eq!(report.qrm_rates.ea_rate.numer, BigInt::from(0));
        assert_eq!(report.tpc.k_logical, BigUint::from(134u32));
        assert_eq!(report.tpc_rates.ea_rate.to_string(), "134/65536");
        assert_eq!(report.tpc_rates.catalytic.to_string(), "-57286/65536");
        assert_eq!(report.containment_verified, None);
    }

    #[test]
    fn containment_verified_on_small_instances() {
        let caps = Caps::default();
        let report = containment_comparison(
            ContainmentCase::QrmInTpc {
                r1: 1,
                m1: 2,
                r2: 1,
                m2: 2,
            },
            &caps,
        )
        .unwrap();
        assert_eq!(report.containment_verified, Some(true));

        let report =
            containment_comparison(ContainmentCase::TpcInQrm { m1: 2, m2: 6, r: 3 }, &caps)
                .unwrap();
        assert_eq!(report.containment_verified, Some(true));
    }
}
