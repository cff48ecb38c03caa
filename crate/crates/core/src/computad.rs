//! Finite computads: graded generator tables where every generator of
//! positive dimension carries a pair of border cells over the lower
//! skeleton.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cell::{Sign, SteinerCell, SIGNS};
use crate::chain::Chain;
use crate::complex::DirectedComplex;
use crate::error::{Error, Result};
use crate::name::GenName;

#[derive(Clone, Debug)]
struct GenInfo {
    dim: usize,
    /// `(B^-, B^+)`; `None` exactly in dimension 0.
    border: Option<(SteinerCell, SteinerCell)>,
}

/// A computad presentation. Generators are stored in insertion order per
/// dimension; all constructions insert deterministically, so two runs of
/// the same recipe produce identical tables.
#[derive(Clone, Debug, Default)]
pub struct Computad {
    dims: Vec<Vec<GenName>>,
    gens: BTreeMap<GenName, GenInfo>,
}

impl Computad {
    pub fn new() -> Self {
        Computad::default()
    }

    /// The terminal computad: one 0-cell.
    pub fn point(name: impl Into<String>) -> Self {
        let mut c = Computad::new();
        c.add_point(GenName::atom(name)).unwrap();
        c
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn max_dim(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    /// Per-dimension generator counts.
    pub fn counts(&self) -> Vec<usize> {
        self.dims.iter().map(|v| v.len()).collect()
    }

    pub fn total_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn contains(&self, name: &GenName) -> bool {
        self.gens.contains_key(name)
    }

    pub fn dim_of(&self, name: &GenName) -> Result<usize> {
        self.gens
            .get(name)
            .map(|g| g.dim)
            .ok_or_else(|| Error::UnknownGenerator(name.clone()))
    }

    /// Generators of one dimension, in insertion order.
    pub fn generators(&self, dim: usize) -> &[GenName] {
        self.dims.get(dim).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// All generators, by dimension then insertion order.
    pub fn all_generators(&self) -> impl Iterator<Item = &GenName> {
        self.dims.iter().flatten()
    }

    pub fn border(&self, name: &GenName, sign: Sign) -> Result<&SteinerCell> {
        let info = self
            .gens
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
        let (m, p) = info.border.as_ref().ok_or_else(|| {
            Error::DimensionMismatch(format!("0-generator `{name}` has no border"))
        })?;
        Ok(match sign {
            Sign::Minus => m,
            Sign::Plus => p,
        })
    }

    /// Top chain of the border cell: the generator's entry in the induced
    /// directed complex.
    pub fn border_chain(&self, name: &GenName, sign: Sign) -> Result<Chain> {
        Ok(self.border(name, sign)?.top().clone())
    }

    pub fn add_point(&mut self, name: GenName) -> Result<()> {
        if self.gens.contains_key(&name) {
            return Err(Error::DuplicateGenerator(name));
        }
        if self.dims.is_empty() {
            self.dims.push(Vec::new());
        }
        self.dims[0].push(name.clone());
        self.gens.insert(name, GenInfo { dim: 0, border: None });
        Ok(())
    }

    /// Freely adjoin a generator with the given border cells. The cells
    /// must be valid over the current skeleton and globular against each
    /// other.
    pub fn add_generator(
        &mut self,
        name: GenName,
        minus: SteinerCell,
        plus: SteinerCell,
    ) -> Result<()> {
        if self.gens.contains_key(&name) {
            return Err(Error::DuplicateGenerator(name));
        }
        if minus.dim() != plus.dim() {
            return Err(Error::DimensionMismatch(format!(
                "border cells of `{name}` have dimensions {} and {}",
                minus.dim(),
                plus.dim()
            )));
        }
        let dim = minus.dim() + 1;
        self.check_cell(&minus)?;
        self.check_cell(&plus)?;
        if dim >= 2 {
            for sign in SIGNS {
                if minus.border(dim - 2, sign) != plus.border(dim - 2, sign) {
                    return Err(Error::Globularity {
                        gen: name,
                        level: dim - 2,
                    });
                }
            }
        }
        while self.dims.len() <= dim {
            self.dims.push(Vec::new());
        }
        self.dims[dim].push(name.clone());
        self.gens.insert(
            name,
            GenInfo {
                dim,
                border: Some((minus, plus)),
            },
        );
        Ok(())
    }

    /// Insert a generator without re-checking its border cells. Used by
    /// constructions whose output is valid by construction and re-checked
    /// wholesale afterwards; not part of the public surface.
    pub(crate) fn add_generator_unchecked(
        &mut self,
        name: GenName,
        border: Option<(SteinerCell, SteinerCell)>,
    ) {
        let dim = border.as_ref().map(|(m, _)| m.dim() + 1).unwrap_or(0);
        while self.dims.len() <= dim {
            self.dims.push(Vec::new());
        }
        self.dims[dim].push(name.clone());
        self.gens.insert(name, GenInfo { dim, border });
    }

    /// Linear extension of the border map: `c` maps to
    /// `sum coeff(x) (plus(x) - minus(x))`.
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

    /// The cell presented by a single generator.
    pub fn atom(&self, name: &GenName) -> Result<SteinerCell> {
        let info = self
            .gens
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
        let top = Chain::singleton(info.dim, name.clone());
        let mut levels = Vec::with_capacity(info.dim + 1);
        if let Some((minus, plus)) = &info.border {
            for k in 0..info.dim {
                levels.push((minus.component(k, Sign::Minus), plus.component(k, Sign::Plus)));
            }
        }
        levels.push((top.clone(), top));
        Ok(SteinerCell::from_levels_unchecked(levels))
    }

    /// Check every cell invariant against this computad: known generators
    /// of the right dimension, non-negative components, unit augmentation,
    /// and the border condition `d c^a_k = c^+_(k-1) - c^-_(k-1)`.
    pub fn check_cell(&self, cell: &SteinerCell) -> Result<()> {
        for k in 0..=cell.dim() {
            for sign in SIGNS {
                let c = cell.component(k, sign);
                if !c.is_nonnegative() {
                    return Err(Error::InvalidCell(format!(
                        "component {sign}{k} has a negative coefficient: {c}"
                    )));
                }
                for g in c.support() {
                    let d = self.dim_of(g)?;
                    if d != k {
                        return Err(Error::InvalidCell(format!(
                            "generator `{g}` of dimension {d} appears at level {k}"
                        )));
                    }
                }
            }
        }
        for sign in SIGNS {
            let aug = cell.component(0, sign).coeff_sum();
            if aug != 1.into() {
                return Err(Error::InvalidCell(format!(
                    "augmentation of component {sign}0 is {aug}, expected 1"
                )));
            }
        }
        for k in 1..=cell.dim() {
            let expected = cell
                .component(k - 1, Sign::Plus)
                .sub(&cell.component(k - 1, Sign::Minus));
            for sign in SIGNS {
                let got = self.chain_boundary(&cell.component(k, sign))?;
                if got != expected {
                    return Err(Error::InvalidCell(format!(
                        "boundary of component {sign}{k} is {got}, expected {expected}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Tagged coproduct: generators of `self` under tag 0, of `other`
    /// under tag 1, borders relabelled accordingly.
    pub fn disjoint_union(&self, other: &Computad) -> Computad {
        let mut out = Computad::new();
        for (tag, side) in [(0u32, self), (1u32, other)] {
            for name in side.all_generators() {
                let info = &side.gens[name];
                let border = info.border.as_ref().map(|(m, p)| {
                    (
                        rename_cell(m, |n| GenName::tagged(tag, n.clone())),
                        rename_cell(p, |n| GenName::tagged(tag, n.clone())),
                    )
                });
                out.add_generator_unchecked(GenName::tagged(tag, name.clone()), border);
            }
        }
        out
    }

    /// The smallest subcomputad containing the given cells, with its
    /// inclusion map.
    pub fn subcomputad_closure(
        &self,
        cells: &[SteinerCell],
    ) -> Result<(Computad, crate::map::ComputadMap)> {
        let mut members: BTreeSet<GenName> = BTreeSet::new();
        let mut frontier: Vec<GenName> = Vec::new();
        for cell in cells {
            self.check_cell(cell)?;
            for k in 0..=cell.dim() {
                for sign in SIGNS {
                    for g in cell.component(k, sign).support() {
                        if members.insert(g.clone()) {
                            frontier.push(g.clone());
                        }
                    }
                }
            }
        }
        while let Some(g) = frontier.pop() {
            if self.dim_of(&g)? == 0 {
                continue;
            }
            for sign in SIGNS {
                let cell = self.border(&g, sign)?;
                for k in 0..=cell.dim() {
                    for s in SIGNS {
                        for h in cell.component(k, s).support() {
                            if members.insert(h.clone()) {
                                frontier.push(h.clone());
                            }
                        }
                    }
                }
            }
        }
        Ok((
            self.restrict_to(&members)?,
            crate::map::ComputadMap::identity_on(members.iter().cloned()),
        ))
    }

    /// The subcomputad on exactly the given generator set; errors if the
    /// set is not closed under border support.
    pub fn restrict_to(&self, members: &BTreeSet<GenName>) -> Result<Computad> {
        for g in members {
            if self.dim_of(g)? == 0 {
                continue;
            }
            for sign in SIGNS {
                let cell = self.border(g, sign)?;
                for k in 0..=cell.dim() {
                    for s in SIGNS {
                        if cell.component(k, s).support().any(|h| !members.contains(h)) {
                            return Err(Error::NotSubcomputad(g.clone()));
                        }
                    }
                }
            }
        }
        let mut out = Computad::new();
        for name in self.all_generators() {
            if members.contains(name) {
                out.add_generator_unchecked(name.clone(), self.gens[name].border.clone());
            }
        }
        Ok(out)
    }

    /// Reverse the direction of `n`-cells for every `n` in `dims`:
    /// level-`(n-1)` component pairs swap throughout, and the border cells
    /// of reversed generators trade places. An involution.
    pub fn op_reverse(&self, dims: &BTreeSet<usize>) -> Computad {
        let mut out = Computad::new();
        for name in self.all_generators() {
            let info = &self.gens[name];
            let border = info.border.as_ref().map(|(m, p)| {
                let (first, second) = if dims.contains(&info.dim) {
                    (p, m)
                } else {
                    (m, p)
                };
                (op_cell(first, dims), op_cell(second, dims))
            });
            out.add_generator_unchecked(name.clone(), border);
        }
        out
    }

    /// `op` in every (relevant) dimension.
    pub fn op_all(&self) -> Computad {
        self.op_reverse(&(1..=self.max_dim().max(1)).collect())
    }

    /// Forget pasting data: basis plus top border chains.
    pub fn directed_complex(&self) -> DirectedComplex {
        let mut dc = DirectedComplex::new();
        for name in self.all_generators() {
            let info = &self.gens[name];
            let chains = info
                .border
                .as_ref()
                .map(|(m, p)| (m.top().clone(), p.top().clone()));
            dc.push(name.clone(), info.dim, chains);
        }
        dc
    }

    /// Run every axiom-level check and collect violations instead of
    /// failing fast.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for name in self.all_generators() {
            let info = &self.gens[name];
            let Some((minus, plus)) = info.border.as_ref() else {
                continue;
            };
            for (sign, cell) in [(Sign::Minus, minus), (Sign::Plus, plus)] {
                if let Err(e) = self.check_cell(cell) {
                    report.push(name, 0, "border-cell", format!("B{sign}: {e}"));
                }
            }
            if info.dim >= 2 {
                for sign in SIGNS {
                    if minus.border(info.dim - 2, sign) != plus.border(info.dim - 2, sign) {
                        report.push(
                            name,
                            info.dim - 2,
                            "globularity",
                            format!("{sign}-borders of B- and B+ differ"),
                        );
                    }
                }
                let boundary = plus.top().sub(minus.top());
                match self.chain_boundary(&boundary) {
                    Ok(dd) if dd.is_zero() => {}
                    Ok(dd) => report.push(
                        name,
                        info.dim - 2,
                        "dd-zero",
                        format!("boundary of boundary is {dd}"),
                    ),
                    Err(e) => report.push(name, info.dim - 1, "dd-zero", e.to_string()),
                }
            }
            if info.dim == 1 && minus.top().coeff_sum() != plus.top().coeff_sum() {
                report.push(
                    name,
                    0,
                    "augmentation",
                    format!(
                        "coefficient sums differ: {} vs {}",
                        minus.top().coeff_sum(),
                        plus.top().coeff_sum()
                    ),
                );
            }
            match self.atom(name) {
                Ok(atom) => {
                    if let Err(e) = self.check_cell(&atom) {
                        report.push(name, info.dim, "unitality", e.to_string());
                    }
                }
                Err(e) => report.push(name, info.dim, "unitality", e.to_string()),
            }
        }
        report
    }
}

/// Relabel every chain of a cell through a total, dimension-preserving
/// renaming.
pub fn rename_cell(cell: &SteinerCell, mut f: impl FnMut(&GenName) -> GenName) -> SteinerCell {
    let levels = cell
        .levels()
        .iter()
        .map(|(m, p)| {
            (
                m.map_support(|n| Some(f(n))),
                p.map_support(|n| Some(f(n))),
            )
        })
        .collect();
    SteinerCell::from_levels_unchecked(levels)
}

/// Swap the `(minus, plus)` pair at every level `k` with `k + 1` in `dims`.
fn op_cell(cell: &SteinerCell, dims: &BTreeSet<usize>) -> SteinerCell {
    let levels = cell
        .levels()
        .iter()
        .enumerate()
        .map(|(k, (m, p))| {
            if dims.contains(&(k + 1)) {
                (p.clone(), m.clone())
            } else {
                (m.clone(), p.clone())
            }
        })
        .collect();
    SteinerCell::from_levels_unchecked(levels)
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub gen: String,
    pub level: usize,
    pub kind: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn push(&mut self, gen: &GenName, level: usize, kind: &str, detail: String) {
        self.violations.push(Violation {
            gen: gen.to_string(),
            level,
            kind: kind.into(),
            detail,
        });
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_ok() {
            return write!(f, "ok: no violations");
        }
        for v in &self.violations {
            writeln!(f, "{} at `{}` level {}: {}", v.kind, v.gen, v.level, v.detail)?;
        }
        Ok(())
    }
}
