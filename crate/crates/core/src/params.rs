//! Code parameter records shared by the classical and quantum constructions.

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigUint};

use crate::error::{Error, Result};

/// How a reported distance was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceSource {
    /// From an exact closed-form expression (Reed-Muller `2^(m-r)`, tensor
    /// product `min(d1, d2)`).
    ClosedForm,
    /// From exhaustive enumeration of the codebook.
    BruteForce,
}

/// Parameters `[n, k, d]` of a classical binary linear code, with
/// `rho = n - k` kept alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalCodeParams {
    pub n: BigUint,
    pub k: BigUint,
    pub d: BigUint,
    pub d_source: DistanceSource,
}

impl ClassicalCodeParams {
    pub fn new(n: BigUint, k: BigUint, d: BigUint, d_source: DistanceSource) -> Result<Self> {
        if k > n {
            return Err(Error::Infeasible(format!(
                "classical code dimension {k} exceeds length {n}"
            )));
        }
        Ok(Self { n, k, d, d_source })
    }

    /// Redundancy `rho = n - k`.
    pub fn rho(&self) -> BigUint {
        &self.n - &self.k
    }
}

impl fmt::Display for ClassicalCodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.n, self.k, self.d)
    }
}

/// Parameters `[[n, k, >=d; n_e]]` of an entanglement-assisted CSS code:
/// `n` physical qubits, `k` logical qubits, distance lower bound `d`, and
/// `n_e` pre-shared entangled qubit pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EaCodeParams {
    pub n: BigUint,
    pub k_logical: BigUint,
    pub d_lower: BigUint,
    pub n_e: BigUint,
}

impl EaCodeParams {
    /// `k - n_e`, the net logical qubit count once the code is charged for
    /// regenerating its own entanglement.
    pub fn catalytic_count(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.k_logical.clone())
            - BigInt::from_biguint(Sign::Plus, self.n_e.clone())
    }
}

impl fmt::Display for EaCodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}, >={}; {}]]",
            self.n, self.k_logical, self.d_lower, self.n_e
        )
    }
}
