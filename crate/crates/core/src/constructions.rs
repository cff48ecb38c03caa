//! Directed-topology constructions over the core operations: globes,
//! cubes, cylinders, cones, orientals, and the pointed constructions
//! (wedge, smash, suspension, reduced cylinder, pushout).

use std::collections::BTreeSet;

use crate::cell::Sign;
use crate::computad::Computad;
use crate::error::{Error, Result};
use crate::map::ComputadMap;
use crate::name::GenName;
use crate::quotient::{collapse, quotient_by_relation, GeneratorRelation, QuotientMode};
use crate::tensor::tensor_product;

/// A computad with a distinguished 0-generator.
#[derive(Clone, Debug)]
pub struct PointedComputad {
    pub computad: Computad,
    pub basepoint: GenName,
}

impl PointedComputad {
    pub fn new(computad: Computad, basepoint: GenName) -> Result<Self> {
        if computad.dim_of(&basepoint)? != 0 {
            return Err(Error::DimensionMismatch(format!(
                "basepoint `{basepoint}` is not a 0-generator"
            )));
        }
        Ok(PointedComputad {
            computad,
            basepoint,
        })
    }
}

/// The directed interval: 0-generators `0`, `1` and an arrow `a`.
pub fn interval() -> Computad {
    let mut c = Computad::new();
    c.add_point(GenName::atom("0")).unwrap();
    c.add_point(GenName::atom("1")).unwrap();
    let zero = c.atom(&GenName::atom("0")).unwrap();
    let one = c.atom(&GenName::atom("1")).unwrap();
    c.add_generator(GenName::atom("a"), zero, one).unwrap();
    c
}

/// The `n`-globe: generators `k-`, `k+` for `k < n` and a top cell `top`.
pub fn globe(n: usize) -> Computad {
    let mut c = Computad::new();
    if n == 0 {
        c.add_point(GenName::atom("top")).unwrap();
        return c;
    }
    c.add_point(GenName::atom("0-")).unwrap();
    c.add_point(GenName::atom("0+")).unwrap();
    for k in 1..=n {
        let minus = c.atom(&GenName::atom(format!("{}-", k - 1))).unwrap();
        let plus = c.atom(&GenName::atom(format!("{}+", k - 1))).unwrap();
        if k == n {
            c.add_generator(GenName::atom("top"), minus, plus).unwrap();
        } else {
            c.add_generator(GenName::atom(format!("{k}-")), minus.clone(), plus.clone())
                .unwrap();
            c.add_generator(GenName::atom(format!("{k}+")), minus, plus)
                .unwrap();
        }
    }
    c
}

/// The `n`-cube, an iterated tensor of intervals; the 0-cube is a point.
pub fn cube(n: usize) -> Result<Computad> {
    if n == 0 {
        return Ok(Computad::point("*"));
    }
    let i = interval();
    let mut c = i.clone();
    for _ in 1..n {
        c = tensor_product(&c, &i)?;
    }
    Ok(c)
}

/// The cylinder on `X`: the tensor of the interval with `X`.
pub fn cylinder(x: &Computad) -> Result<Computad> {
    tensor_product(&interval(), x)
}

/// The cone on `X`: the cylinder with one end crushed. `Plus` crushes
/// the `1` end (future cone), `Minus` the `0` end (past cone).
pub fn cone(x: &Computad, sign: Sign) -> Result<(Computad, ComputadMap)> {
    let cyl = cylinder(x)?;
    let end = GenName::atom(match sign {
        Sign::Plus => "1",
        Sign::Minus => "0",
    });
    let members: BTreeSet<GenName> = x
        .all_generators()
        .map(|g| GenName::tensor(&end, g))
        .collect();
    collapse(&cyl, &members)
}

/// The `n`-oriental: the `n`-fold future cone of the point.
pub fn oriental(n: usize) -> Result<Computad> {
    let mut c = Computad::point("*");
    for _ in 0..n {
        c = cone(&c, Sign::Plus)?.0;
    }
    Ok(c)
}

/// Wedge: the coproduct with basepoints identified.
pub fn wedge(x: &PointedComputad, y: &PointedComputad) -> Result<PointedComputad> {
    let both = x.computad.disjoint_union(&y.computad);
    let members: BTreeSet<GenName> = [
        GenName::tagged(0, x.basepoint.clone()),
        GenName::tagged(1, y.basepoint.clone()),
    ]
    .into();
    let star = GenName::star(members.iter().next().unwrap().clone());
    let (quot, _) = collapse(&both, &members)?;
    PointedComputad::new(quot, star)
}

/// Smash: the tensor with the wedge image (all `σ⊗∗` and `∗⊗τ`) crushed.
pub fn smash(x: &PointedComputad, y: &PointedComputad) -> Result<PointedComputad> {
    let product = tensor_product(&x.computad, &y.computad)?;
    let mut members: BTreeSet<GenName> = BTreeSet::new();
    for g in x.computad.all_generators() {
        members.insert(GenName::tensor(g, &y.basepoint));
    }
    for g in y.computad.all_generators() {
        members.insert(GenName::tensor(&x.basepoint, g));
    }
    // same choice collapse makes for the star's inner name
    let base = members
        .iter()
        .find(|g| product.dim_of(g).map(|d| d == 0).unwrap_or(false))
        .unwrap()
        .clone();
    let (quot, _) = collapse(&product, &members)?;
    PointedComputad::new(quot, GenName::star(base))
}

/// The oriented 1-sphere: one 0-generator and one loop on it.
pub fn circle() -> Computad {
    let mut c = Computad::point("*");
    let p = c.atom(&GenName::atom("*")).unwrap();
    c.add_generator(GenName::atom("a"), p.clone(), p).unwrap();
    c
}

/// Iterated suspension: smash with the circle `k` times. Every positive
/// dimension is raised by `k`; 0-generators other than the basepoint
/// become 1-generators per suspension step.
pub fn suspension(x: &PointedComputad, k: usize) -> Result<PointedComputad> {
    let sphere = PointedComputad::new(circle(), GenName::atom("*"))?;
    let mut out = x.clone();
    for _ in 0..k {
        out = smash(&out, &sphere)?;
    }
    Ok(out)
}

/// The reduced cylinder: smash with the interval plus a disjoint point,
/// based at the extra point.
pub fn reduced_cylinder(x: &PointedComputad) -> Result<PointedComputad> {
    let with_point = interval().disjoint_union(&Computad::point("e"));
    let based = PointedComputad::new(with_point, GenName::tagged(1, GenName::atom("e")))?;
    smash(x, &based)
}

/// Pushout of `f: A -> X` and `g: A -> Y` in pointed computads: the
/// quotient of `X ⊕ Y` identifying `f(α) ~ g(α)` for every generator of
/// `A`, and the two basepoints. Legs must be dimension-preserving but
/// need not be injective. Returns the pushout with the two leg maps into
/// it; compatibility of the induced relation is checked, not assumed.
pub fn pushout(
    a: &Computad,
    x: &PointedComputad,
    y: &PointedComputad,
    f: &ComputadMap,
    g: &ComputadMap,
) -> Result<(PointedComputad, ComputadMap, ComputadMap)> {
    for (leg, target, label) in [(f, &x.computad, "left"), (g, &y.computad, "right")] {
        leg.validate(a, target)?;
        for gen in a.all_generators() {
            if target.dim_of(leg.apply(gen)?)? != a.dim_of(gen)? {
                return Err(Error::InvalidMap(format!(
                    "{label} leg crushes `{gen}`; pushout legs must preserve dimension"
                )));
            }
        }
    }
    let both = x.computad.disjoint_union(&y.computad);
    let mut rel = GeneratorRelation::new();
    rel.relate(
        GenName::tagged(0, x.basepoint.clone()),
        GenName::tagged(1, y.basepoint.clone()),
    );
    for gen in a.all_generators() {
        rel.relate(
            GenName::tagged(0, f.apply(gen)?.clone()),
            GenName::tagged(1, g.apply(gen)?.clone()),
        );
    }
    let (quot, proj) = quotient_by_relation(&both, &rel, QuotientMode::Reject)?;
    let into_x = ComputadMap::new(
        x.computad
            .all_generators()
            .map(|n| {
                Ok((
                    n.clone(),
                    proj.apply(&GenName::tagged(0, n.clone()))?.clone(),
                ))
            })
            .collect::<Result<_>>()?,
    );
    let into_y = ComputadMap::new(
        y.computad
            .all_generators()
            .map(|n| {
                Ok((
                    n.clone(),
                    proj.apply(&GenName::tagged(1, n.clone()))?.clone(),
                ))
            })
            .collect::<Result<_>>()?,
    );
    let base = into_x.apply(&x.basepoint)?.clone();
    Ok((PointedComputad::new(quot, base)?, into_x, into_y))
}
