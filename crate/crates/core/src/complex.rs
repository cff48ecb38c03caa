//! Augmented directed complexes: the chain-level shadow of a computad.
//!
//! Each generator of positive dimension keeps only the top chains of its
//! two border cells. When the basis is unital, the cell presented by a
//! generator can be rebuilt from this data alone by descending through
//! positive/negative parts of boundaries; [`DirectedComplex::atom`] does
//! exactly that and reports a non-unital basis when the descent breaks an
//! invariant.

use std::collections::BTreeMap;

use crate::cell::{Sign, SteinerCell, SIGNS};
use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::name::GenName;

#[derive(Clone, Debug, Default)]
pub struct DirectedComplex {
    dims: Vec<Vec<GenName>>,
    /// dim and, for dim > 0, the `(minus, plus)` border chains.
    gens: BTreeMap<GenName, (usize, Option<(Chain, Chain)>)>,
}

impl DirectedComplex {
    pub fn new() -> Self {
        DirectedComplex::default()
    }

    pub(crate) fn push(&mut self, name: GenName, dim: usize, chains: Option<(Chain, Chain)>) {
        while self.dims.len() <= dim {
            self.dims.push(Vec::new());
        }
        self.dims[dim].push(name.clone());
        self.gens.insert(name, (dim, chains));
    }

    /// Build from explicit data; border chains must be non-negative and
    /// live one dimension below their generator.
    pub fn from_parts(
        gens: impl IntoIterator<Item = (GenName, usize, Option<(Chain, Chain)>)>,
    ) -> Result<Self> {
        let mut dc = DirectedComplex::new();
        for (name, dim, chains) in gens {
            if dc.gens.contains_key(&name) {
                return Err(Error::DuplicateGenerator(name));
            }
            if let Some((m, p)) = &chains {
                if dim == 0 {
                    return Err(Error::DimensionMismatch(format!(
                        "0-generator `{name}` cannot carry border chains"
                    )));
                }
                if m.dim() != dim - 1 || p.dim() != dim - 1 {
                    return Err(Error::DimensionMismatch(format!(
                        "border chains of `{name}` must have dimension {}",
                        dim - 1
                    )));
                }
                if !m.is_nonnegative() || !p.is_nonnegative() {
                    return Err(Error::InvalidCell(format!(
                        "border chains of `{name}` must be non-negative"
                    )));
                }
            } else if dim > 0 {
                return Err(Error::DimensionMismatch(format!(
                    "generator `{name}` of dimension {dim} needs border chains"
                )));
            }
            dc.push(name, dim, chains);
        }
        Ok(dc)
    }

    pub fn dim_of(&self, name: &GenName) -> Result<usize> {
        self.gens
            .get(name)
            .map(|(d, _)| *d)
            .ok_or_else(|| Error::UnknownGenerator(name.clone()))
    }

    pub fn generators(&self, dim: usize) -> &[GenName] {
        self.dims.get(dim).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn border_chain(&self, name: &GenName, sign: Sign) -> Result<Chain> {
        let (_, chains) = self
            .gens
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
        let (m, p) = chains.as_ref().ok_or_else(|| {
            Error::DimensionMismatch(format!("0-generator `{name}` has no border"))
        })?;
        Ok(match sign {
            Sign::Minus => m.clone(),
            Sign::Plus => p.clone(),
        })
    }

    /// Linear extension of `x -> plus(x) - minus(x)`.
    pub fn chain_boundary(&self, c: &Chain) -> Result<Chain> {
        if c.dim() == 0 {
            return Err(Error::DimensionMismatch(
                "chain boundary needs dimension >= 1".into(),
            ));
        }
        let mut out = Chain::zero(c.dim() - 1);
        for (name, coeff) in c.iter() {
            let plus = self.border_chain(name, Sign::Plus)?;
            let minus = self.border_chain(name, Sign::Minus)?;
            for (g, k) in plus.iter() {
                out.add_term(g.clone(), k * coeff);
            }
            for (g, k) in minus.iter() {
                out.add_term(g.clone(), -(k * coeff));
            }
        }
        Ok(out)
    }

    /// Rebuild the atom of `x` from chain data: top levels are the border
    /// chains, lower levels the negative (resp. positive) parts of
    /// iterated boundaries. Fails with a non-unital basis error when the
    /// result is not a valid cell.
    pub fn atom(&self, x: &GenName) -> Result<SteinerCell> {
        let dim = self.dim_of(x)?;
        let top = Chain::singleton(dim, x.clone());
        let mut levels = vec![(top.clone(), top)];
        if dim > 0 {
            let minus = self.border_chain(x, Sign::Minus)?;
            let plus = self.border_chain(x, Sign::Plus)?;
            levels.push((minus, plus));
            // levels is built top-down and reversed at the end
            for _ in (1..dim).rev() {
                let (m, p) = levels.last().unwrap();
                let next_minus = self.chain_boundary(m)?.pos_neg_parts().1;
                let next_plus = self.chain_boundary(p)?.pos_neg_parts().0;
                levels.push((next_minus, next_plus));
            }
        }
        levels.reverse();
        let cell = SteinerCell::from_levels_unchecked(levels);
        self.check_atom(x, &cell)?;
        Ok(cell)
    }

    fn check_atom(&self, x: &GenName, cell: &SteinerCell) -> Result<()> {
        let fail = |detail: String| Error::NonUnitalBasis {
            gen: x.clone(),
            detail,
        };
        for sign in SIGNS {
            let aug = cell.component(0, sign).coeff_sum();
            if aug != 1.into() {
                return Err(fail(format!("augmentation of level-0 {sign} part is {aug}")));
            }
        }
        for k in 1..=cell.dim() {
            let expected = cell
                .component(k - 1, Sign::Plus)
                .sub(&cell.component(k - 1, Sign::Minus));
            for sign in SIGNS {
                let got = self.chain_boundary(&cell.component(k, sign))?;
                if got != expected {
                    return Err(fail(format!(
                        "boundary of {sign}{k} component is {got}, expected {expected}"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::interval;
    use crate::tensor::tensor_product;

    fn g(s: &str) -> GenName {
        s.parse().unwrap()
    }

    #[test]
    fn complex_atom_matches_computad_atom() {
        let sq = tensor_product(&interval(), &interval()).unwrap();
        let dc = sq.directed_complex();
        for name in sq.all_generators() {
            assert_eq!(dc.atom(name).unwrap(), sq.atom(name).unwrap());
        }
    }

    #[test]
    fn non_unital_basis_is_detected_during_descent() {
        // f's negative border has augmentation 2, so its atom cannot exist
        let bad = DirectedComplex::from_parts([
            (g("p"), 0, None),
            (g("q"), 0, None),
            (
                g("f"),
                1,
                Some((
                    Chain::singleton(0, g("p")).add(&Chain::singleton(0, g("q"))),
                    Chain::singleton(0, g("q")),
                )),
            ),
        ])
        .unwrap();
        assert!(matches!(bad.atom(&g("f")), Err(Error::NonUnitalBasis { .. })));
        assert!(bad.atom(&g("p")).is_ok());
    }
}
