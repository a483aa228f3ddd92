//! Univariate polynomials over exact rationals: ring arithmetic, Euclidean
//! division, and Lagrange interpolation on distinct nodes.
//!
//! Polynomials are kept in canonical dense form (coefficient of `x^i` at
//! index `i`, highest coefficient nonzero). The zero polynomial is the
//! empty coefficient list and its degree is `None`, which orders below
//! every actual degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::Rational;
use crate::render;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),
    #[error("basis index {index} out of range for {len} nodes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
}

/// A univariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending-power coefficients, trimming
    /// trailing zeros so the representation is canonical.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::monomial(1)
    }

    /// The monomial `x^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = Rational::one();
        Polynomial { coeffs }
    }

    /// `None` for the zero polynomial, which sorts below every `Some(d)`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Ascending-power coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's scheme.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division: returns `(q, r)` with `self = q·divisor + r`
    /// and `degree(r) < degree(divisor)`, all exactly.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        let Some(d) = divisor.degree() else {
            return Err(PolyError::DivisionByZeroPolynomial);
        };
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let factor = &rem[i] / &lead;
            for j in 0..d {
                rem[i - d + j] = &rem[i - d + j] - &(&factor * &divisor.coeffs[j]);
            }
            rem[i] = Rational::zero();
            quot[i - d] = factor;
        }
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// The remainder of [`Polynomial::div_rem`]; degree strictly below the
    /// divisor's.
    pub fn reduce_mod(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        self.div_rem(divisor).map(|(_, r)| r)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render::poly_text(self, "x"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut state = serializer.serialize_struct("Polynomial", 1)?;
        state.serialize_field("coeffs", &self.coeffs)?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<Rational>,
        }
        // re-canonicalize: stray trailing zeros are accepted but trimmed
        Ok(Polynomial::from_coeffs(Repr::deserialize(deserializer)?.coeffs))
    }
}

/// A set of pairwise-distinct interpolation nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSet {
    nodes: Vec<Rational>,
}

impl NodeSet {
    /// Duplicates are a construction-time error; ordering is preserved.
    pub fn new(nodes: Vec<Rational>) -> Result<Self, PolyError> {
        let mut sorted = nodes.clone();
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(PolyError::DuplicateNode(pair[0].to_string()));
            }
        }
        Ok(NodeSet { nodes })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Rational] {
        &self.nodes
    }

    pub fn node(&self, k: usize) -> Option<&Rational> {
        self.nodes.get(k)
    }

    /// The monic annihilating polynomial `∏ (x - x_ℓ)` over all nodes.
    ///
    /// With the nodes chosen as an operator's simple spectrum this is the
    /// operator's minimal polynomial. The empty product is 1.
    pub fn node_polynomial(&self) -> Polynomial {
        let mut product = Polynomial::one();
        for node in &self.nodes {
            product = &product * &Polynomial::from_coeffs(vec![-node, Rational::one()]);
        }
        product
    }

    /// The `k`-th Lagrange basis polynomial: 1 at node `k`, 0 at every
    /// other node, degree `len() - 1`.
    pub fn lagrange_basis(&self, k: usize) -> Result<Polynomial, PolyError> {
        let Some(x_k) = self.nodes.get(k) else {
            return Err(PolyError::IndexOutOfRange {
                index: k,
                len: self.nodes.len(),
            });
        };
        let mut numerator = Polynomial::one();
        let mut denominator = Rational::one();
        for (l, x_l) in self.nodes.iter().enumerate() {
            if l == k {
                continue;
            }
            numerator = &numerator * &Polynomial::from_coeffs(vec![-x_l, Rational::one()]);
            denominator = denominator * (x_k - x_l);
        }
        // the nodes are distinct, so the denominator is nonzero
        Ok(numerator.scale(&(Rational::one() / denominator)))
    }

    /// The unique polynomial of degree < `len()` through every
    /// `(node, value)` pair, as the sum of scaled Lagrange basis
    /// polynomials.
    pub fn interpolate(&self, values: &[Rational]) -> Result<Polynomial, PolyError> {
        if values.len() != self.nodes.len() {
            return Err(PolyError::LengthMismatch {
                expected: self.nodes.len(),
                got: values.len(),
            });
        }
        let mut sum = Polynomial::zero();
        for (k, value) in values.iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            sum = &sum + &self.lagrange_basis(k)?.scale(value);
        }
        Ok(sum)
    }
}
