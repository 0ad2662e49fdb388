//! Laurent polynomials in one formal variable `x` with integer coefficients,
//! and square matrices over them. Just enough to check matrix identities
//! such as `ρ(w) N ρ(w)^{-1} = ||w|| N` exactly, with `x` standing for `||w||`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

/// `Σ c_k x^k`, zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `coeff · x^exponent`
    pub fn monomial(coeff: i64, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exponent, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    fn add_term(&mut self, exponent: i64, coeff: i64) {
        let entry = self.terms.entry(exponent).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exponent);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}x^{e}")?;
        }
        Ok(())
    }
}

/// Dense square matrix with Laurent-polynomial entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(size: usize) -> Self {
        LaurentMatrix {
            size,
            entries: vec![LaurentPoly::zero(); size * size],
        }
    }

    /// `diag(x^{e_0}, x^{e_1}, …)`
    pub fn diagonal_monomials(exponents: &[i64]) -> Self {
        let mut out = LaurentMatrix::zero(exponents.len());
        for (i, &e) in exponents.iter().enumerate() {
            out.set(i, i, LaurentPoly::monomial(1, e));
        }
        out
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.size + col] = value;
    }

    pub fn scale(&self, factor: &LaurentPoly) -> Self {
        LaurentMatrix {
            size: self.size,
            entries: self.entries.iter().map(|e| factor * e).collect(),
        }
    }
}

impl Mul for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        let n = self.size;
        let mut out = LaurentMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}
