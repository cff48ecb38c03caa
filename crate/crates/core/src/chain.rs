//! Integer chains: formal sums of same-dimension generators.
//!
//! Coefficients are arbitrary-precision; iterated tensor and smash
//! constructions multiply multiplicities, so fixed-width integers are not
//! trusted here. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::name::GenName;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    dim: usize,
    coeffs: BTreeMap<GenName, BigInt>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Chain {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn singleton(dim: usize, name: GenName) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(name, BigInt::one());
        Chain { dim, coeffs }
    }

    pub fn from_coeffs(dim: usize, coeffs: impl IntoIterator<Item = (GenName, BigInt)>) -> Self {
        let mut c = Chain::zero(dim);
        for (name, coeff) in coeffs {
            c.add_term(name, coeff);
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, name: &GenName) -> BigInt {
        self.coeffs.get(name).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GenName, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &GenName> {
        self.coeffs.keys()
    }

    pub fn add_term(&mut self, name: GenName, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(name) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.dim, other.dim, "chain addition across dimensions");
        let mut out = self.clone();
        for (name, coeff) in &other.coeffs {
            out.add_term(name.clone(), coeff.clone());
        }
        out
    }

    pub fn neg(&self) -> Chain {
        Chain {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        self.add(&other.neg())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|v| !v.is_negative())
    }

    /// Sum of coefficients; the augmentation of a 0-chain.
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// The unique decomposition `self = pos - neg` with non-negative parts
    /// of disjoint support.
    pub fn pos_neg_parts(&self) -> (Chain, Chain) {
        let mut pos = Chain::zero(self.dim);
        let mut neg = Chain::zero(self.dim);
        for (name, coeff) in &self.coeffs {
            if coeff.is_negative() {
                neg.coeffs.insert(name.clone(), -coeff);
            } else {
                pos.coeffs.insert(name.clone(), coeff.clone());
            }
        }
        (pos, neg)
    }

    /// Bilinear tensor: each pair of generators maps to its pair name;
    /// dimensions add.
    pub fn tensor(&self, other: &Chain) -> Chain {
        let mut out = Chain::zero(self.dim + other.dim);
        for (x, cx) in &self.coeffs {
            for (y, cy) in &other.coeffs {
                out.add_term(GenName::tensor(x, y), cx * cy);
            }
        }
        out
    }

    /// Transport along a generator assignment. `f` returns the image name
    /// when the image has the same dimension, and `None` when the
    /// generator is crushed to a lower-dimensional cell.
    pub fn map_support(&self, mut f: impl FnMut(&GenName) -> Option<GenName>) -> Chain {
        let mut out = Chain::zero(self.dim);
        for (name, coeff) in &self.coeffs {
            if let Some(image) = f(name) {
                out.add_term(image, coeff.clone());
            }
        }
        out
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (name, coeff)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if coeff.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{coeff}{name}")?;
            }
        }
        Ok(())
    }
}
