//! Reed-Muller code construction from monomial evaluation vectors.
//!
//! A Boolean polynomial in `m` variables is stored as a set of monomials
//! (GF(2) coefficients: presence means coefficient 1). Its evaluation vector
//! lists the polynomial's value at every point of `F_2^m` in increasing
//! binary order, with `x_1` the most significant bit of the point index.
//! The generator matrix of the order-`r` code collects the evaluation
//! vectors of all monomials of degree at most `r`, ordered by degree and
//! then lexicographically by index set; both orderings are fixed so matrices
//! reproduce bit for bit.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num::BigUint;

use crate::binom::{binomial_sum, pow2};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::params::{ClassicalCodeParams, DistanceSource};

/// A square-free monomial `x_A = prod_{i in A} x_i` over variables
/// `x_1 .. x_m`; the empty set is the constant monomial 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    m: u32,
    vars: u32,
}

impl Monomial {
    /// Build from 1-based variable indices; duplicates collapse (x_i^2 = x_i).
    pub fn new(m: u32, indices: &[u32]) -> Result<Self> {
        if m > 32 {
            return Err(Error::Parse(format!("variable count {m} exceeds 32")));
        }
        let mut vars = 0u32;
        for &i in indices {
            if i == 0 || i > m {
                return Err(Error::Parse(format!(
                    "variable index x{i} out of range 1..={m}"
                )));
            }
            vars |= 1 << (i - 1);
        }
        Ok(Self { m, vars })
    }

    pub fn constant(m: u32) -> Self {
        Self { m, vars: 0 }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> u32 {
        self.vars.count_ones()
    }

    /// Ascending 1-based variable indices.
    pub fn indices(&self) -> Vec<u32> {
        (1..=self.m)
            .filter(|i| self.vars >> (i - 1) & 1 == 1)
            .collect()
    }

    fn contains(&self, index_1based: u32) -> bool {
        self.vars >> (index_1based - 1) & 1 == 1
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(&other.indices()))
            .then_with(|| self.m.cmp(&other.m))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars == 0 {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("x{i}")).collect();
        f.write_str(&parts.join("*"))
    }
}

/// A polynomial over GF(2) in `m` variables: a set of monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    m: u32,
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero(m: u32) -> Self {
        Self {
            m,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(m: u32) -> Self {
        let mut p = Self::zero(m);
        p.toggle(Monomial::constant(m));
        p
    }

    pub fn from_monomials(m: u32, monomials: &[Monomial]) -> Result<Self> {
        let mut p = Self::zero(m);
        for mono in monomials {
            if mono.m() != m {
                return Err(Error::Parse(format!(
                    "monomial over {} variables in polynomial over {m}",
                    mono.m()
                )));
            }
            p.toggle(*mono);
        }
        Ok(p)
    }

    /// Parse from a string like `"1 + x1*x2 + x3"`. Whitespace is ignored and
    /// the `*` between variables is optional. Repeated terms cancel (GF(2)).
    pub fn parse(m: u32, text: &str) -> Result<Self> {
        let mut p = Self::zero(m);
        for term in text.split('+') {
            p.toggle(parse_term(m, term)?);
        }
        Ok(p)
    }

    /// GF(2) addition of a term: inserts the monomial, or removes it if
    /// already present.
    pub fn toggle(&mut self, mono: Monomial) {
        if !self.terms.remove(&mono) {
            self.terms.insert(mono);
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Sum over GF(2) (symmetric difference of term sets).
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::Parse(format!(
                "cannot add polynomials over {} and {} variables",
                self.m, other.m
            )));
        }
        let mut out = self.clone();
        for t in &other.terms {
            out.toggle(*t);
        }
        Ok(out)
    }

    /// Product over GF(2); monomial products take the union of index sets.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::Parse(format!(
                "cannot multiply polynomials over {} and {} variables",
                self.m, other.m
            )));
        }
        let mut out = Self::zero(self.m);
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(Monomial {
                    m: self.m,
                    vars: a.vars | b.vars,
                });
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(Monomial::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn parse_term(m: u32, term: &str) -> Result<Monomial> {
    let compact: String = term
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    if compact == "1" {
        return Ok(Monomial::constant(m));
    }
    let mut indices = Vec::new();
    let mut chars = compact.chars().peekable();
    while let Some(c) = chars.next() {
        if c != 'x' {
            return Err(Error::Parse(format!("unexpected {c:?} in term {term:?}")));
        }
        let mut digits = String::new();
        while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
            digits.push(chars.next().unwrap());
        }
        let idx: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("missing variable index in term {term:?}")))?;
        indices.push(idx);
    }
    Monomial::new(m, &indices)
}

/// Order and variable count of a Reed-Muller code `RM(r, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RmSpec {
    r: u32,
    m: u32,
}

impl RmSpec {
    pub fn new(r: u32, m: u32) -> Result<Self> {
        if r > m {
            return Err(Error::InvalidRmSpec { r, m });
        }
        Ok(Self { r, m })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// True when the code contains its dual (`r >= (m-1)/2`), so the CSS
    /// construction needs no entanglement.
    pub fn is_dual_containing(&self) -> bool {
        2 * self.r >= self.m.saturating_sub(1)
    }
}

impl fmt::Display for RmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RM({},{})", self.r, self.m)
    }
}

/// Value of `f` at a single point `z = (z_1, .., z_m)`.
pub fn eval_point(f: &Polynomial, z: &[bool]) -> Result<bool> {
    if z.len() != f.m() as usize {
        return Err(Error::VectorLength {
            expected: f.m() as usize,
            got: z.len(),
        });
    }
    let mut acc = false;
    for t in &f.terms {
        acc ^= (1..=f.m).all(|i| !t.contains(i) || z[(i - 1) as usize]);
    }
    Ok(acc)
}

fn check_m_cap(m: u32, caps: &Caps) -> Result<usize> {
    // 32 is the hard representation limit (monomial index masks); the
    // configurable cap guards memory below that.
    if m > caps.max_m.min(32) {
        return Err(Error::CapExceeded {
            what: "evaluation vector construction (variable count m)",
            required: u64::from(m),
            cap: u64::from(caps.max_m.min(32)),
        });
    }
    1usize
        .checked_shl(m)
        .ok_or(Error::ShapeOverflow { op: "eval_vector" })
}

/// Evaluation vector of a single monomial, built by successive doubling from
/// the innermost variable: prepending `x_i` maps `v` to `[0 v]` when `x_i`
/// is in the monomial and to `[v v]` otherwise.
fn monomial_eval(m: u32, mono: &Monomial) -> Gf2Vector {
    let mut v = Gf2Vector::from_bools(&[true]);
    for i in (1..=m).rev() {
        v = if mono.contains(i) {
            Gf2Vector::zeros(v.len()).concat(&v)
        } else {
            v.concat(&v)
        };
    }
    v
}

/// The length-`2^m` evaluation vector of `f` over all points of `F_2^m` in
/// increasing binary order (`z_1` most significant).
pub fn eval_vector(f: &Polynomial, caps: &Caps) -> Result<Gf2Vector> {
    let n = check_m_cap(f.m(), caps)?;
    let mut out = Gf2Vector::zeros(n);
    for t in &f.terms {
        out.xor_assign(&monomial_eval(f.m(), t));
    }
    Ok(out)
}

/// All monomials of degree `lo..=hi` over `m` variables, degree-major and
/// lexicographic by index set within each degree.
fn monomials_by_degree(m: u32, lo: u32, hi: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in lo..=hi.min(m) {
        for combo in (1..=m).combinations(d as usize) {
            out.push(Monomial::new(m, &combo).expect("indices in range"));
        }
    }
    out
}

fn eval_matrix(m: u32, monomials: &[Monomial], caps: &Caps) -> Result<Gf2Matrix> {
    let n = check_m_cap(m, caps)?;
    let rows: Vec<Gf2Vector> = monomials.iter().map(|t| monomial_eval(m, t)).collect();
    Gf2Matrix::from_rows(n, &rows)
}

/// Generator matrix of `RM(r, m)`: evaluation vectors of all monomials of
/// degree at most `r`. Shape `sum_{i<=r} C(m, i)` by `2^m`, full row rank.
pub fn generator_matrix(spec: RmSpec, caps: &Caps) -> Result<Gf2Matrix> {
    eval_matrix(spec.m(), &monomials_by_degree(spec.m(), 0, spec.r()), caps)
}

/// Parity check matrix of `RM(r, m)`, i.e. the generator of the dual code
/// `RM(m-r-1, m)`. For `r = m` the dual is trivial and the result is an
/// explicit empty (0-row) matrix.
pub fn parity_check_matrix(spec: RmSpec, caps: &Caps) -> Result<Gf2Matrix> {
    let n = check_m_cap(spec.m(), caps)?;
    if spec.r() == spec.m() {
        return Ok(Gf2Matrix::zeros(0, n));
    }
    generator_matrix(
        RmSpec::new(spec.m() - spec.r() - 1, spec.m()).expect("r < m"),
        caps,
    )
}

/// Basis of the quotient of the dual code by the code itself,
/// `RM(m-r-1, m) / RM(r, m)`: the evaluation vectors of the monomials of
/// degree `r+1 ..= m-r-1`. These rows are exactly the parity checks that
/// fail self-orthogonality, so their count is the ebit requirement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualQuotientBasis {
    pub matrix: Gf2Matrix,
    /// Set when the quotient is empty (`m <= 2r + 1`, the dual-containing
    /// range), in which case `matrix` has no rows.
    pub empty_quotient: bool,
}

pub fn dual_quotient_basis(spec: RmSpec, caps: &Caps) -> Result<DualQuotientBasis> {
    let n = check_m_cap(spec.m(), caps)?;
    if spec.m() <= 2 * spec.r() + 1 {
        return Ok(DualQuotientBasis {
            matrix: Gf2Matrix::zeros(0, n),
            empty_quotient: true,
        });
    }
    let monos = monomials_by_degree(spec.m(), spec.r() + 1, spec.m() - spec.r() - 1);
    Ok(DualQuotientBasis {
        matrix: eval_matrix(spec.m(), &monos, caps)?,
        empty_quotient: false,
    })
}

/// Closed-form parameters `[2^m, sum_{i<=r} C(m, i), 2^(m-r)]`.
pub fn rm_params(spec: RmSpec) -> ClassicalCodeParams {
    let n = pow2(u64::from(spec.m()));
    let k = binomial_sum(u64::from(spec.m()), 0, u64::from(spec.r()));
    let d = pow2(u64::from(spec.m() - spec.r()));
    ClassicalCodeParams::new(n, k, d, DistanceSource::ClosedForm).expect("k <= n")
}

/// Closed-form dimension of the dual quotient,
/// `sum_{i=r+1}^{m-r-1} C(m, i)` (zero when the range is empty).
pub fn dual_quotient_dimension(spec: RmSpec) -> BigUint {
    if spec.m() <= 2 * spec.r() + 1 {
        return BigUint::from(0u32);
    }
    binomial_sum(
        u64::from(spec.m()),
        u64::from(spec.r()) + 1,
        u64::from(spec.m() - spec.r() - 1),
    )
}

/// Minimum Hamming weight over all nonzero codewords of the code generated
/// by the rows of `g`, by Gray-code enumeration of all `2^rows - 1`
/// combinations. Refused when `rows` exceeds the enumeration cap.
pub fn min_distance_bruteforce(g: &Gf2Matrix, caps: &Caps) -> Result<usize> {
    let k = g.rows();
    // 63 keeps the Gray-code step counter in a u64 no matter the configured cap
    if k as u64 > u64::from(caps.bruteforce_log2.min(63)) {
        return Err(Error::CapExceeded {
            what: "brute-force distance enumeration (generator rows)",
            required: k as u64,
            cap: u64::from(caps.bruteforce_log2.min(63)),
        });
    }
    if k == 0 {
        return Err(Error::Infeasible("code has no nonzero codewords".into()));
    }
    let mut current = Gf2Vector::zeros(g.cols());
    let mut best = usize::MAX;
    for step in 1u64..1u64 << k {
        let flip = step.trailing_zeros() as usize;
        current.xor_assign(&g.row(flip));
        let w = current.weight();
        if w > 0 && w < best {
            best = w;
        }
    }
    if best == usize::MAX {
        return Err(Error::Infeasible("code has no nonzero codewords".into()));
    }
    Ok(best)
}
