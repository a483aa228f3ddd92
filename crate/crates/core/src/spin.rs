//! Spin-specific constructions: the diagonal `Sz` operator, projection
//! operators onto its eigenstates, and operator functions `f(Sz)`.
//!
//! Every eigenstate projector is a polynomial in `Sz`. With the spectrum
//! `m = S, S-1, ..., -S` as interpolation nodes, the projector onto `|m⟩`
//! has the closed form
//!
//! ```text
//! P_m(Sz) = (-1)^(S+m+α) / ((S-m)!·(S+m)!) · ∏_{n≠m} (Sz - n)
//! ```
//!
//! where `α` is 1 for half-odd-integer spin and 0 for integer spin. The
//! scalar prefactor equals `1/∏_{n≠m}(m - n)`, so `P_m` is exactly the
//! Lagrange basis polynomial for node `m` on the spectrum; the two routes
//! are computed independently here and cross-checked in the tests.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::{factorial, spin_range, HalfInt, Rational};
use crate::poly::{NodeSet, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinError {
    #[error("spin must be nonnegative, got {0}")]
    NegativeSpin(String),
    #[error("m = {m} lies outside -S..S for S = {s}")]
    OutOfRange { m: String, s: String },
    #[error("S - m must be an integer, got S = {s}, m = {m}")]
    ParityMismatch { m: String, s: String },
    #[error("expected {expected} values on the spectrum, got {got}")]
    ValueCount { expected: usize, got: usize },
    #[error("operators act on different spins ({left} vs {right})")]
    SpinMismatch { left: String, right: String },
}

/// A spin quantum number `S ∈ {0, 1/2, 1, 3/2, ...}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinQuantum {
    s: HalfInt,
}

impl SpinQuantum {
    pub fn new(s: HalfInt) -> Result<Self, SpinError> {
        if s.is_negative() {
            return Err(SpinError::NegativeSpin(s.to_string()));
        }
        Ok(SpinQuantum { s })
    }

    pub fn s(&self) -> &HalfInt {
        &self.s
    }

    /// `2S` as an exact integer.
    pub fn twice(&self) -> &BigInt {
        self.s.twice()
    }

    /// The dimension `2S + 1` of the spin representation.
    pub fn dim(&self) -> usize {
        (self.s.twice() + 1u32)
            .try_into()
            .expect("spin dimension exceeds addressable memory")
    }

    /// The parity flag of the sign factor: 1 for half-odd-integer spin,
    /// 0 for integer spin.
    pub fn alpha(&self) -> u32 {
        u32::from(self.s.is_half_odd_integer())
    }

    /// Eigenvalues `m = S, S-1, ..., -S` in descending basis order.
    pub fn spectrum(&self) -> Vec<HalfInt> {
        spin_range(&self.s).expect("spin is nonnegative by construction")
    }

    /// The spectrum as a node set for interpolation. The eigenvalues are
    /// pairwise distinct, so this cannot fail.
    pub fn node_set(&self) -> NodeSet {
        let nodes = self.spectrum().iter().map(HalfInt::to_rational).collect();
        NodeSet::new(nodes).expect("eigenvalues are pairwise distinct")
    }

    /// All `(S, m)` levels in descending order of `m`.
    pub fn levels(&self) -> Vec<MagneticQuantum> {
        self.spectrum()
            .into_iter()
            .map(|m| MagneticQuantum {
                spin: self.clone(),
                m,
            })
            .collect()
    }

    /// The diagonal `Sz` operator: `Sz|m⟩ = m|m⟩` on the descending basis.
    pub fn sz_operator(&self) -> DiagonalOperator {
        let diag = self.spectrum().iter().map(HalfInt::to_rational).collect();
        DiagonalOperator {
            spin: self.clone(),
            diag,
        }
    }
}

impl fmt::Display for SpinQuantum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.s.fmt(f)
    }
}

impl fmt::Debug for SpinQuantum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S={}", self.s)
    }
}

/// A valid `(S, m)` pair: `-S ≤ m ≤ S` with `S - m` a nonnegative integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MagneticQuantum {
    spin: SpinQuantum,
    m: HalfInt,
}

impl MagneticQuantum {
    pub fn new(spin: SpinQuantum, m: HalfInt) -> Result<Self, SpinError> {
        if m.twice().magnitude() > spin.twice().magnitude() {
            return Err(SpinError::OutOfRange {
                m: m.to_string(),
                s: spin.to_string(),
            });
        }
        if (spin.twice() - m.twice()).is_odd() {
            return Err(SpinError::ParityMismatch {
                m: m.to_string(),
                s: spin.to_string(),
            });
        }
        Ok(MagneticQuantum { spin, m })
    }

    pub fn spin(&self) -> &SpinQuantum {
        &self.spin
    }

    pub fn m(&self) -> &HalfInt {
        &self.m
    }

    /// The row/column of `|m⟩` in the descending basis: `S - m`.
    pub fn basis_index(&self) -> usize {
        let index: BigInt = (self.spin.twice() - self.m.twice()) / 2;
        index.try_into().expect("basis index fits in usize")
    }

    /// The scalar prefactor `(-1)^(S+m+α) / ((S-m)!·(S+m)!)`.
    ///
    /// `S + m + α` is always an integer: for integer spin `S + m` is an
    /// integer and `α = 0`; for half-odd-integer spin `S + m` is again an
    /// integer while `α = 1`.
    pub fn projector_coefficient(&self) -> Rational {
        let s_plus_m: BigInt = (self.spin.twice() + self.m.twice()) / 2;
        let s_minus_m: BigInt = (self.spin.twice() - self.m.twice()) / 2;
        let exponent = &s_plus_m + self.spin.alpha();
        let denom = factorial(as_u64(&s_minus_m)) * factorial(as_u64(&s_plus_m));
        let numer = if exponent.is_odd() { -1 } else { 1 };
        Rational::new(numer, denom).expect("factorials are positive")
    }

    /// The prefactor together with the roots `{n ≠ m}` in descending
    /// order; the projector is `coefficient · ∏ (x - root)`.
    pub fn projector_factors(&self) -> (Rational, Vec<Rational>) {
        let roots = self
            .spin
            .spectrum()
            .into_iter()
            .filter(|n| n != &self.m)
            .map(|n| n.to_rational())
            .collect();
        (self.projector_coefficient(), roots)
    }

    /// The projection operator onto `|m⟩` as a polynomial in `Sz`,
    /// expanded to canonical coefficients. Its degree is exactly `2S`,
    /// and it evaluates to 1 at `m` and to 0 at every other eigenvalue.
    pub fn projector_polynomial(&self) -> Polynomial {
        let (coefficient, roots) = self.projector_factors();
        let mut product = Polynomial::constant(coefficient);
        for root in &roots {
            product = &product * &Polynomial::from_coeffs(vec![-root, Rational::one()]);
        }
        product
    }
}

impl fmt::Debug for MagneticQuantum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(S={}, m={})", self.spin.s(), self.m)
    }
}

fn as_u64(n: &BigInt) -> u64 {
    n.try_into().expect("quantum number too large for a factorial")
}

/// An operator that is diagonal in the `Sz` eigenbasis.
///
/// Index `i` of the diagonal corresponds to the eigenstate with
/// `m = S - i` (descending order). `Sz` itself, every projector, and
/// every operator function `f(Sz)` are of this form.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagonalOperator {
    spin: SpinQuantum,
    diag: Vec<Rational>,
}

impl DiagonalOperator {
    pub fn new(spin: SpinQuantum, diag: Vec<Rational>) -> Result<Self, SpinError> {
        if diag.len() != spin.dim() {
            return Err(SpinError::ValueCount {
                expected: spin.dim(),
                got: diag.len(),
            });
        }
        Ok(DiagonalOperator { spin, diag })
    }

    pub fn identity(spin: &SpinQuantum) -> Self {
        DiagonalOperator {
            spin: spin.clone(),
            diag: vec![Rational::one(); spin.dim()],
        }
    }

    pub fn zero(spin: &SpinQuantum) -> Self {
        DiagonalOperator {
            spin: spin.clone(),
            diag: vec![Rational::zero(); spin.dim()],
        }
    }

    pub fn spin(&self) -> &SpinQuantum {
        &self.spin
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    pub fn entry(&self, i: usize) -> &Rational {
        &self.diag[i]
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.diag.iter().all(Rational::is_one)
    }

    fn same_spin(&self, other: &Self) -> Result<(), SpinError> {
        if self.spin != other.spin {
            return Err(SpinError::SpinMismatch {
                left: self.spin.to_string(),
                right: other.spin.to_string(),
            });
        }
        Ok(())
    }

    /// Operator product; diagonal operators commute, so this is the
    /// entrywise product.
    pub fn compose(&self, other: &Self) -> Result<Self, SpinError> {
        self.same_spin(other)?;
        let diag = self
            .diag
            .iter()
            .zip(&other.diag)
            .map(|(a, b)| a * b)
            .collect();
        Ok(DiagonalOperator {
            spin: self.spin.clone(),
            diag,
        })
    }

    /// Operator sum (entrywise).
    pub fn add(&self, other: &Self) -> Result<Self, SpinError> {
        self.same_spin(other)?;
        let diag = self
            .diag
            .iter()
            .zip(&other.diag)
            .map(|(a, b)| a + b)
            .collect();
        Ok(DiagonalOperator {
            spin: self.spin.clone(),
            diag,
        })
    }
}

impl fmt::Debug for DiagonalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::diag_text(&self.diag))
    }
}

impl Serialize for DiagonalOperator {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let two_s: i64 = self
            .spin
            .twice()
            .try_into()
            .map_err(|_| serde::ser::Error::custom("spin too large for JSON"))?;
        let mut state = serializer.serialize_struct("DiagonalOperator", 3)?;
        state.serialize_field("twoS", &two_s)?;
        state.serialize_field("basis", "m-descending")?;
        state.serialize_field("diag", &self.diag)?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for DiagonalOperator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            #[serde(rename = "twoS")]
            two_s: i64,
            basis: String,
            diag: Vec<Rational>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.basis != "m-descending" {
            return Err(serde::de::Error::custom(format!(
                "unsupported basis {:?}, expected \"m-descending\"",
                repr.basis
            )));
        }
        let spin = SpinQuantum::new(HalfInt::from_twice(repr.two_s))
            .map_err(serde::de::Error::custom)?;
        DiagonalOperator::new(spin, repr.diag).map_err(serde::de::Error::custom)
    }
}

/// The operator function `f(Sz) = Σ_m f(m)·P_m(Sz)` as a polynomial of
/// degree ≤ 2S, from a table of values indexed like the descending
/// spectrum.
///
/// This sums the explicit projector polynomials; interpolating the table
/// over the spectrum yields the identical polynomial, which the tests
/// check against [`NodeSet::interpolate`].
pub fn operator_function(spin: &SpinQuantum, values: &[Rational]) -> Result<Polynomial, SpinError> {
    if values.len() != spin.dim() {
        return Err(SpinError::ValueCount {
            expected: spin.dim(),
            got: values.len(),
        });
    }
    let mut sum = Polynomial::zero();
    for (level, value) in spin.levels().iter().zip(values) {
        if value.is_zero() {
            continue;
        }
        sum = &sum + &level.projector_polynomial().scale(value);
    }
    Ok(sum)
}

/// `x^n` reduced modulo the annihilating polynomial `∏_m (x - m)` of the
/// spectrum: the canonical degree-≤2S representative of the operator
/// power `Sz^n`. For `n ≤ 2S` the monomial is returned unchanged.
pub fn reduce_power(spin: &SpinQuantum, power: u64) -> Polynomial {
    let modulus = spin.node_set().node_polynomial();
    let reduce = |p: Polynomial| p.reduce_mod(&modulus).expect("modulus is monic, nonzero");
    // binary exponentiation on residues keeps every intermediate product
    // at degree < 2·(2S+1) regardless of n
    let mut result = reduce(Polynomial::one());
    let mut base = reduce(Polynomial::x());
    let mut remaining = power;
    while remaining > 0 {
        if remaining & 1 == 1 {
            result = reduce(&result * &base);
        }
        remaining >>= 1;
        if remaining > 0 {
            base = reduce(&base * &base);
        }
    }
    result
}
