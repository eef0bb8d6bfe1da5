use std::fmt;

use super::Gf2Vector;
use crate::error::{Error, Result};

/// A length-`2n` binary vector `(x | z)` describing an n-qubit Pauli operator
/// up to phase: bit `i` of `x` marks an X component on qubit `i`, bit `i` of
/// `z` a Z component.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticVector {
    x: Gf2Vector,
    z: Gf2Vector,
}

impl SymplecticVector {
    pub fn new(x: Gf2Vector, z: Gf2Vector) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::SymplecticLengthMismatch {
                lhs: x.len(),
                rhs: z.len(),
            });
        }
        Ok(Self { x, z })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            x: Gf2Vector::zeros(n),
            z: Gf2Vector::zeros(n),
        }
    }

    /// Split a `2n`-bit row `(x | z)` into a symplectic vector.
    pub fn from_check_row(row: &Gf2Vector) -> Result<Self> {
        if !row.len().is_multiple_of(2) {
            return Err(Error::Parse(format!(
                "check row length {} is odd; expected (x|z) layout",
                row.len()
            )));
        }
        let n = row.len() / 2;
        let mut x = Gf2Vector::zeros(n);
        let mut z = Gf2Vector::zeros(n);
        for i in 0..n {
            x.set(i, row.get(i));
            z.set(i, row.get(n + i));
        }
        Ok(Self { x, z })
    }

    /// The `(x | z)` row form.
    pub fn to_check_row(&self) -> Gf2Vector {
        self.x.concat(&self.z)
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &Gf2Vector {
        &self.x
    }

    pub fn z(&self) -> &Gf2Vector {
        &self.z
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Symplectic product `x . z' + z . x' (mod 2)`. Zero iff the two Pauli
    /// operators commute.
    pub fn product(&self, other: &Self) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SymplecticLengthMismatch {
                lhs: self.n(),
                rhs: other.n(),
            });
        }
        Ok(self.product_unchecked(other))
    }

    pub(crate) fn product_unchecked(&self, other: &Self) -> bool {
        let a = self.x.dot(&other.z).expect("lengths checked");
        let b = self.z.dot(&other.x).expect("lengths checked");
        a ^ b
    }

    /// In-place GF(2) addition (Pauli composition up to phase).
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.n(), other.n(), "xor_assign on different qubit counts");
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }
}

impl fmt::Display for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.x.to_bitstring(), self.z.to_bitstring())
    }
}

impl fmt::Debug for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymplecticVector({self})")
    }
}
