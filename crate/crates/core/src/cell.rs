//! Cells of a free omega-category in double-chain (Steiner) form.
//!
//! A cell of dimension `n` is a table of non-negative chains `c^-_k`,
//! `c^+_k` for `0 <= k <= n`, equal at the top level. Truncation gives
//! borders, level-wise bookkeeping gives composition, and a signed
//! convolution gives the tensor of two cells. Two pastings with equal
//! tables are treated as equal; this is exact for loop-free presentations
//! and a documented sound abstraction for looped ones.

use std::fmt;

use crate::chain::Chain;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    /// The sign rule of the tensor product: factors of odd dimension
    /// reverse the sign used on their right-hand neighbour.
    pub fn twisted_by(self, dim: usize) -> Sign {
        if dim % 2 == 0 {
            self
        } else {
            self.flip()
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

pub const SIGNS: [Sign; 2] = [Sign::Minus, Sign::Plus];

/// A double chain: `levels[k] = (c^-_k, c^+_k)`.
///
/// Equality pads with zero chains, so a cell with trivial top levels is
/// equal to its truncation; identity cells are never constructed
/// explicitly, they are reached by truncation and padding.
#[derive(Clone, Debug)]
pub struct SteinerCell {
    levels: Vec<(Chain, Chain)>,
}

impl SteinerCell {
    /// Build from explicit levels. Only structural checks happen here
    /// (the chain-level border condition needs an ambient complex, see
    /// [`crate::computad::Computad::check_cell`]).
    pub fn from_levels(levels: Vec<(Chain, Chain)>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidCell("a cell needs at least level 0".into()));
        }
        for (k, (m, p)) in levels.iter().enumerate() {
            if m.dim() != k || p.dim() != k {
                return Err(Error::InvalidCell(format!(
                    "level {k} holds chains of dimension {}/{}",
                    m.dim(),
                    p.dim()
                )));
            }
        }
        let top = levels.len() - 1;
        if levels[top].0 != levels[top].1 {
            return Err(Error::InvalidCell(format!(
                "top components differ: {} vs {}",
                levels[top].0, levels[top].1
            )));
        }
        Ok(SteinerCell { levels })
    }

    pub(crate) fn from_levels_unchecked(levels: Vec<(Chain, Chain)>) -> Self {
        SteinerCell { levels }
    }

    pub fn dim(&self) -> usize {
        self.levels.len() - 1
    }

    /// Component chain at a level; zero above the cell's dimension.
    pub fn component(&self, level: usize, sign: Sign) -> Chain {
        match self.levels.get(level) {
            Some((m, p)) => match sign {
                Sign::Minus => m.clone(),
                Sign::Plus => p.clone(),
            },
            None => Chain::zero(level),
        }
    }

    pub fn top(&self) -> &Chain {
        &self.levels[self.dim()].0
    }

    pub fn levels(&self) -> &[(Chain, Chain)] {
        &self.levels
    }

    /// Append zero levels up to dimension `dim` (the identity cell on
    /// `self` of that dimension).
    pub fn pad_to(&self, dim: usize) -> SteinerCell {
        let mut levels = self.levels.clone();
        for k in self.dim() + 1..=dim {
            levels.push((Chain::zero(k), Chain::zero(k)));
        }
        SteinerCell { levels }
    }

    /// The `sign`-border at level `m`: keep levels below `m`, truncate the
    /// top to the chosen component. For `m >= dim` the cell is returned
    /// unchanged.
    pub fn border(&self, m: usize, sign: Sign) -> SteinerCell {
        if m >= self.dim() {
            return self.clone();
        }
        let mut levels: Vec<(Chain, Chain)> = self.levels[..m].to_vec();
        let top = self.component(m, sign);
        levels.push((top.clone(), top));
        SteinerCell { levels }
    }

    /// Composition along the `m`-border. Defined exactly when the
    /// `+`-border of `self` at `m` equals the `-`-border of `other`;
    /// shared levels are copied, level `m` keeps the outer components,
    /// higher levels add.
    pub fn compose(&self, other: &SteinerCell, m: usize) -> Result<SteinerCell> {
        let lhs = self.border(m, Sign::Plus);
        let rhs = other.border(m, Sign::Minus);
        if lhs != rhs {
            let (level, sign) = (0..=lhs.dim().max(rhs.dim()))
                .flat_map(|k| SIGNS.map(|s| (k, s)))
                .find(|&(k, s)| lhs.component(k, s) != rhs.component(k, s))
                .unwrap_or((m, Sign::Plus));
            return Err(Error::CompositionUndefined {
                level,
                left: lhs.component(level, sign).to_string(),
                right: rhs.component(level, sign).to_string(),
            });
        }
        let dim = self.dim().max(other.dim());
        if dim <= m {
            // both cells are identities at this level, so they coincide
            return Ok(self.clone());
        }
        let mut levels: Vec<(Chain, Chain)> = Vec::with_capacity(dim + 1);
        for k in 0..m {
            levels.push((
                self.component(k, Sign::Minus),
                self.component(k, Sign::Plus),
            ));
        }
        levels.push((
            self.component(m, Sign::Minus),
            other.component(m, Sign::Plus),
        ));
        for k in m + 1..=dim {
            levels.push((
                self.component(k, Sign::Minus)
                    .add(&other.component(k, Sign::Minus)),
                self.component(k, Sign::Plus)
                    .add(&other.component(k, Sign::Plus)),
            ));
        }
        Ok(SteinerCell { levels })
    }

    /// Tensor of two cells: a convolution of levels where every factor of
    /// odd dimension twists the sign used on the second argument.
    pub fn tensor(&self, other: &SteinerCell) -> SteinerCell {
        let dim = self.dim() + other.dim();
        let mut levels = Vec::with_capacity(dim + 1);
        for q in 0..=dim {
            let mut pair = (Chain::zero(q), Chain::zero(q));
            for (slot, sign) in [(&mut pair.0, Sign::Minus), (&mut pair.1, Sign::Plus)] {
                let mut acc = Chain::zero(q);
                for m in 0..=q.min(self.dim()) {
                    let p = q - m;
                    if p > other.dim() {
                        continue;
                    }
                    let left = self.component(m, sign);
                    let right = other.component(p, sign.twisted_by(m));
                    acc = acc.add(&left.tensor(&right));
                }
                *slot = acc;
            }
            levels.push(pair);
        }
        SteinerCell { levels }
    }
}

impl PartialEq for SteinerCell {
    fn eq(&self, other: &Self) -> bool {
        let dim = self.dim().max(other.dim());
        (0..=dim).all(|k| {
            self.component(k, Sign::Minus) == other.component(k, Sign::Minus)
                && self.component(k, Sign::Plus) == other.component(k, Sign::Plus)
        })
    }
}

impl Eq for SteinerCell {}

impl fmt::Display for SteinerCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cell[")?;
        for (k, (m, p)) in self.levels.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            if k == self.dim() {
                write!(f, "{k}: {m}")?;
            } else {
                write!(f, "{k}: {m} / {p}")?;
            }
        }
        write!(f, "]")
    }
}
