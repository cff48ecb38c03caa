//! Tensor product of computads, plus an independent oracle for its
//! low-dimensional borders.
//!
//! Generator borders in the product are defined uniformly by chain-level
//! truncation of the cell tensor. The explicit pasting expressions for
//! borders up to level 3 are transcribed verbatim in
//! [`explicit_border`] and replayed against the truncation definition
//! by [`check_tensor_borders`]; the two routes share no code beyond the
//! cell calculus, so agreement is a real cross-check.

use serde::Serialize;

use crate::cell::{Sign, SteinerCell, SIGNS};
use crate::computad::Computad;
use crate::error::{Error, Result};
use crate::name::GenName;

/// The tensor product. Generators are pairs `(σ.τ)` with added
/// dimensions, inserted by total dimension then by factor order; each
/// border is the truncated cell tensor of the factors' atoms.
pub fn tensor_product(x: &Computad, y: &Computad) -> Result<Computad> {
    let mut out = Computad::new();
    let max = x.max_dim() + y.max_dim();
    for n in 0..=max {
        for k in 0..=n.min(x.max_dim()) {
            let p = n - k;
            if p > y.max_dim() {
                continue;
            }
            for s in x.generators(k) {
                for t in y.generators(p) {
                    let name = GenName::tensor(s, t);
                    if n == 0 {
                        out.add_point(name)?;
                        continue;
                    }
                    let cell = x.atom(s)?.tensor(&y.atom(t)?);
                    let minus = cell.border(n - 1, Sign::Minus);
                    let plus = cell.border(n - 1, Sign::Plus);
                    out.add_generator(name, minus, plus)?;
                }
            }
        }
    }
    Ok(out)
}

/// The explicit pasting expression for the level-`m` border of a tensor
/// of cells, `m <= 3`. Composition subscripts in the source expressions
/// are read as composition along the border one level down.
pub fn explicit_border(
    x: &SteinerCell,
    y: &SteinerCell,
    m: usize,
    sign: Sign,
) -> Result<SteinerCell> {
    let t = |k: usize, a: Sign, p: usize, b: Sign| x.border(k, a).tensor(&y.border(p, b));
    let cp = |l: SteinerCell, r: SteinerCell, k: usize, clause: &str| {
        l.compose(&r, k - 1).map_err(|e| e.in_clause(clause.to_string()))
    };
    use Sign::{Minus as N, Plus as P};
    match (m, sign) {
        (0, N) => Ok(t(0, N, 0, N)),
        (0, P) => Ok(t(0, P, 0, P)),
        (1, N) => cp(t(0, N, 1, N), t(1, N, 0, P), 1, "-1"),
        (1, P) => cp(t(1, P, 0, N), t(0, P, 1, P), 1, "+1"),
        (2, N) => {
            let a = cp(t(0, N, 2, N), t(1, N, 0, P), 1, "-2.a")?;
            let c = cp(t(2, N, 0, N), t(0, P, 1, P), 1, "-2.c")?;
            let ab = cp(a, t(1, N, 1, P), 2, "-2.ab")?;
            cp(ab, c, 2, "-2.abc")
        }
        (2, P) => {
            let a = cp(t(0, N, 1, N), t(2, P, 0, P), 1, "+2.a")?;
            let c = cp(t(1, P, 0, N), t(0, P, 2, P), 1, "+2.c")?;
            let ab = cp(a, t(1, P, 1, N), 2, "+2.ab")?;
            cp(ab, c, 2, "+2.abc")
        }
        (3, N) => {
            let a = {
                let a1 = cp(t(0, N, 3, N), t(1, N, 0, P), 1, "-3.a1")?;
                let a3 = cp(t(2, N, 0, N), t(0, P, 1, P), 1, "-3.a3")?;
                let a12 = cp(a1, t(1, N, 1, P), 2, "-3.a12")?;
                cp(a12, a3, 2, "-3.a")?
            };
            let b = {
                let b2 = cp(t(2, N, 0, N), t(0, P, 1, P), 1, "-3.b2")?;
                cp(t(1, N, 2, P), b2, 2, "-3.b")?
            };
            let c = {
                let c2 = cp(t(1, P, 0, N), t(0, P, 2, P), 1, "-3.c2")?;
                cp(t(2, N, 1, N), c2, 2, "-3.c")?
            };
            let d = {
                let d1 = cp(t(0, N, 1, N), t(3, N, 0, P), 1, "-3.d1")?;
                let d3 = cp(t(1, P, 0, N), t(0, P, 2, P), 1, "-3.d3")?;
                let d12 = cp(d1, t(1, P, 1, N), 2, "-3.d12")?;
                cp(d12, d3, 2, "-3.d")?
            };
            let ab = cp(a, b, 3, "-3.ab")?;
            let abc = cp(ab, c, 3, "-3.abc")?;
            cp(abc, d, 3, "-3.abcd")
        }
        (3, P) => {
            let a = {
                let a1 = cp(t(0, N, 2, N), t(1, N, 0, P), 1, "+3.a1")?;
                let a3 = cp(t(3, P, 0, N), t(0, P, 1, P), 1, "+3.a3")?;
                let a12 = cp(a1, t(1, N, 1, P), 2, "+3.a12")?;
                cp(a12, a3, 2, "+3.a")?
            };
            let b = {
                let b1 = cp(t(0, N, 2, N), t(1, N, 0, P), 1, "+3.b1")?;
                cp(b1, t(2, P, 1, P), 2, "+3.b")?
            };
            let c = {
                let c1 = cp(t(0, N, 1, N), t(2, P, 0, P), 1, "+3.c1")?;
                cp(c1, t(1, P, 2, N), 2, "+3.c")?
            };
            let d = {
                let d1 = cp(t(0, N, 1, N), t(2, P, 0, P), 1, "+3.d1")?;
                let d3 = cp(t(1, P, 0, N), t(0, P, 3, P), 1, "+3.d3")?;
                let d12 = cp(d1, t(1, P, 1, N), 2, "+3.d12")?;
                cp(d12, d3, 2, "+3.d")?
            };
            let ab = cp(a, b, 3, "+3.ab")?;
            let abc = cp(ab, c, 3, "+3.abc")?;
            cp(abc, d, 3, "+3.abcd")
        }
        _ => Err(Error::DimensionMismatch(format!(
            "no explicit border expression at level {m}"
        ))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorBorderMismatch {
    pub left: String,
    pub right: String,
    pub level: usize,
    pub sign: char,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TensorBorderReport {
    pub pairs_checked: usize,
    pub comparisons: usize,
    pub mismatches: Vec<TensorBorderMismatch>,
}

impl TensorBorderReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl std::fmt::Display for TensorBorderReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} pairs, {} comparisons, {} mismatches",
            self.pairs_checked,
            self.comparisons,
            self.mismatches.len()
        )?;
        for m in &self.mismatches {
            write!(
                f,
                "\n  {} (x) {} at level {}{}: {}",
                m.left, m.right, m.level, m.sign, m.detail
            )?;
        }
        Ok(())
    }
}

/// Replay the explicit border expressions against the truncation
/// definition, over every generator pair of bounded total dimension and
/// every level up to 3, both signs.
pub fn check_tensor_borders(
    x: &Computad,
    y: &Computad,
    max_total_dim: usize,
) -> Result<TensorBorderReport> {
    let mut report = TensorBorderReport::default();
    for k in 0..=x.max_dim() {
        for p in 0..=y.max_dim() {
            if k + p > max_total_dim {
                continue;
            }
            for s in x.generators(k) {
                for t in y.generators(p) {
                    report.pairs_checked += 1;
                    let cell = x.atom(s)?.tensor(&y.atom(t)?);
                    for m in 0..=3usize {
                        for sign in SIGNS {
                            report.comparisons += 1;
                            let direct = cell.border(m, sign);
                            match explicit_border(&x.atom(s)?, &y.atom(t)?, m, sign) {
                                Ok(oracle) => {
                                    if oracle != direct {
                                        report.mismatches.push(TensorBorderMismatch {
                                            left: s.to_string(),
                                            right: t.to_string(),
                                            level: m,
                                            sign: sign.symbol(),
                                            detail: format!(
                                                "expression gives {oracle}, truncation gives {direct}"
                                            ),
                                        });
                                    }
                                }
                                Err(e) => report.mismatches.push(TensorBorderMismatch {
                                    left: s.to_string(),
                                    right: t.to_string(),
                                    level: m,
                                    sign: sign.symbol(),
                                    detail: e.to_string(),
                                }),
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{minimal_monoid, minimal_comonoid};
    use crate::constructions::{globe, interval};
    use crate::iso::find_isomorphism;

    #[test]
    fn tensor_with_a_point_is_the_same_shape() {
        let m = minimal_monoid();
        let pt = Computad::point("*");
        let left = tensor_product(&pt, &m).unwrap();
        let right = tensor_product(&m, &pt).unwrap();
        assert_eq!(left.counts(), m.counts());
        assert_eq!(right.counts(), m.counts());
        assert!(find_isomorphism(&left, &m).is_some());
        assert!(find_isomorphism(&right, &m).is_some());
    }

    #[test]
    fn square_counts_and_diagonal_borders() {
        let sq = tensor_product(&interval(), &interval()).unwrap();
        assert_eq!(sq.counts(), vec![4, 4, 1]);
        let top = sq.atom(&"(a.a)".parse().unwrap()).unwrap();
        let minus = top.component(1, Sign::Minus);
        let plus = top.component(1, Sign::Plus);
        assert_eq!(minus.support().count(), 2);
        assert_eq!(plus.support().count(), 2);
        assert!(minus.support().any(|g| g.to_string() == "(0.a)"));
        assert!(plus.support().any(|g| g.to_string() == "(a.0)"));
    }

    #[test]
    fn explicit_low_border_formulas_agree_with_truncation() {
        let pairs: [(&Computad, &Computad); 4] = [
            (&interval(), &interval()),
            (&minimal_monoid(), &interval()),
            (&globe(2), &globe(2)),
            (&minimal_monoid(), &minimal_comonoid()),
        ];
        for (x, y) in pairs {
            let report = check_tensor_borders(x, y, 4).unwrap();
            assert!(report.is_ok(), "mismatches: {:?}", report.mismatches);
            assert!(report.comparisons > 0);
        }
    }

    #[test]
    fn tensor_is_associative_up_to_isomorphism() {
        let i = interval();
        let m = minimal_monoid();
        let left = tensor_product(&tensor_product(&i, &m).unwrap(), &i).unwrap();
        let right = tensor_product(&i, &tensor_product(&m, &i).unwrap()).unwrap();
        assert_eq!(left.counts(), right.counts());
        assert!(find_isomorphism(&left, &right).is_some());
    }
}
