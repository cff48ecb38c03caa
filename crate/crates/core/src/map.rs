//! Generator-level maps of computads.
//!
//! An assignment sends each generator to a generator of the target of the
//! same or lower dimension; an image of lower dimension means the
//! generator is crushed onto an identity cell of the image (this is how
//! quotient and collapse projections are recorded). Validity is the
//! border-transport condition checked generator by generator.

use std::collections::BTreeMap;

use crate::cell::{SteinerCell, SIGNS};
use crate::computad::Computad;
use crate::error::{Error, Result};
use crate::name::GenName;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComputadMap {
    pub assignment: BTreeMap<GenName, GenName>,
}

impl ComputadMap {
    pub fn new(assignment: BTreeMap<GenName, GenName>) -> Self {
        ComputadMap { assignment }
    }

    pub fn identity_on(names: impl IntoIterator<Item = GenName>) -> Self {
        ComputadMap {
            assignment: names.into_iter().map(|n| (n.clone(), n)).collect(),
        }
    }

    pub fn apply(&self, name: &GenName) -> Result<&GenName> {
        self.assignment
            .get(name)
            .ok_or_else(|| Error::InvalidMap(format!("`{name}` is not in the map's domain")))
    }

    /// `other` after `self`.
    pub fn then(&self, other: &ComputadMap) -> Result<ComputadMap> {
        let mut assignment = BTreeMap::new();
        for (src, mid) in &self.assignment {
            assignment.insert(src.clone(), other.apply(mid)?.clone());
        }
        Ok(ComputadMap { assignment })
    }

    pub fn is_injective(&self) -> bool {
        let images: std::collections::BTreeSet<_> = self.assignment.values().collect();
        images.len() == self.assignment.len()
    }

    /// Transport a cell: in a chain of dimension `k`, a generator keeps
    /// its coefficient when its image still has dimension `k` and is
    /// dropped when the image is lower-dimensional.
    pub fn transport_cell(&self, target: &Computad, cell: &SteinerCell) -> Result<SteinerCell> {
        let mut levels = Vec::with_capacity(cell.dim() + 1);
        for k in 0..=cell.dim() {
            let mut pair = Vec::with_capacity(2);
            for sign in SIGNS {
                let chain = cell.component(k, sign);
                let mut out = crate::chain::Chain::zero(k);
                for (g, coeff) in chain.iter() {
                    let image = self.apply(g)?;
                    let d = target.dim_of(image)?;
                    if d == k {
                        out.add_term(image.clone(), coeff.clone());
                    } else if d > k {
                        return Err(Error::InvalidMap(format!(
                            "`{g}` at level {k} maps to `{image}` of higher dimension {d}"
                        )));
                    }
                }
                pair.push(out);
            }
            let plus = pair.pop().unwrap();
            let minus = pair.pop().unwrap();
            levels.push((minus, plus));
        }
        Ok(SteinerCell::from_levels_unchecked(levels))
    }

    /// Border compatibility, generator by generator: a dimension-preserved
    /// generator must hit a generator with the transported borders; a
    /// crushed generator's transported borders must both collapse onto the
    /// padded atom of its image.
    pub fn validate(&self, source: &Computad, target: &Computad) -> Result<()> {
        for name in source.all_generators() {
            let dim = source.dim_of(name)?;
            let image = self.apply(name)?;
            let image_dim = target.dim_of(image)?;
            if image_dim > dim {
                return Err(Error::InvalidMap(format!(
                    "`{name}` of dimension {dim} maps to `{image}` of dimension {image_dim}"
                )));
            }
            if dim == 0 {
                continue;
            }
            if image_dim == dim {
                for sign in SIGNS {
                    let transported = self.transport_cell(target, source.border(name, sign)?)?;
                    if &transported != target.border(image, sign)? {
                        return Err(Error::InvalidMap(format!(
                            "border {sign} of `{name}` does not transport to border of `{image}`"
                        )));
                    }
                }
            } else {
                let expected = target.atom(image)?.pad_to(dim - 1);
                for sign in SIGNS {
                    let transported = self.transport_cell(target, source.border(name, sign)?)?;
                    if transported != expected {
                        return Err(Error::InvalidMap(format!(
                            "`{name}` is crushed onto `{image}` but its {sign}-border does not degenerate onto it"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
