//! Named, reproducible builds of the derived theories.
//!
//! Every entry records the recipe actually executed, so outputs are
//! auditable; entries marked interpretive carry identifications that are
//! transcriptions of diagrams rather than formulas, with the relation
//! lists hardcoded here for review.

use std::collections::BTreeSet;

use crate::cell::Sign;
use crate::computad::Computad;
use crate::constructions::{
    circle, cone, cube, interval, oriental, pushout, smash, suspension, wedge, PointedComputad,
};
use crate::error::{Error, Result};
use crate::map::ComputadMap;
use crate::name::GenName;
use crate::quotient::{quotient_by_relation, GeneratorRelation, QuotientMode};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    /// The construction expression actually executed.
    pub recipe: String,
    pub computad: Computad,
    pub basepoint: Option<GenName>,
    pub expected_counts: Option<Vec<usize>>,
    /// True when the entry hardcodes identifications transcribed from
    /// diagrams rather than stated formulas.
    pub interpretive: bool,
}

/// The stable public entry names.
pub const NAMES: [&str; 19] = [
    "interval",
    "cube2",
    "cube3",
    "r_matrix",
    "frobenius_law",
    "constants_K",
    "right_unit",
    "lax_monoid",
    "monoid",
    "comonoid",
    "lax_comonoid",
    "action_left",
    "coaction_right",
    "frobenius_compatible",
    "frobenius_special",
    "bialgebra",
    "commutative_monoid",
    "cocommutative_comonoid",
    "interacting_bialgebras",
];

fn a(s: &str) -> GenName {
    GenName::atom(s)
}

/// The minimal monoid presentation: one 0-cell, an object 1-cell `a`, a
/// multiplication `mu: a ; a => a` and unit `eta: id => a`.
pub fn minimal_monoid() -> Computad {
    let mut c = circle();
    let obj = c.atom(&a("a")).unwrap();
    let mul_src = obj.compose(&obj, 0).unwrap();
    c.add_generator(a("mu"), mul_src, obj.clone()).unwrap();
    let unit_src = c.atom(&a("*")).unwrap().pad_to(1);
    c.add_generator(a("eta"), unit_src, obj).unwrap();
    c
}

/// The comonoid presentation: the monoid with every dimension reversed.
pub fn minimal_comonoid() -> Computad {
    minimal_monoid().op_all()
}

/// The theory of constants: one 0-cell, a loop `a`, and `eta: id => a`.
pub fn constants_k() -> Computad {
    let mut c = circle();
    let obj = c.atom(&a("a")).unwrap();
    let unit_src = c.atom(&a("*")).unwrap().pad_to(1);
    c.add_generator(a("eta"), unit_src, obj).unwrap();
    c
}

fn pointed(c: Computad, base: &str) -> Result<PointedComputad> {
    PointedComputad::new(c, a(base))
}

/// Relate every pair of same-dimension generators.
fn all_same_dim_relation(x: &Computad) -> GeneratorRelation {
    let mut rel = GeneratorRelation::new();
    for d in 0..=x.max_dim() {
        for w in x.generators(d).windows(2) {
            rel.relate(w[0].clone(), w[1].clone());
        }
    }
    rel
}

/// The fibrewise end relation on `I (x) X (x) Y`: generators over the
/// `0` end are identified along the `X` factor, generators over the `1`
/// end along the `Y` factor.
fn fibrewise_relation(x: &Computad, y: &Computad) -> GeneratorRelation {
    let mut rel = GeneratorRelation::new();
    for t in y.all_generators() {
        let mut members = x
            .all_generators()
            .map(|s| GenName::tensor(&GenName::tensor(&a("0"), s), t));
        let first = members.next().unwrap();
        for m in members {
            rel.relate(first.clone(), m);
        }
    }
    for s in x.all_generators() {
        let mut members = y
            .all_generators()
            .map(|t| GenName::tensor(&GenName::tensor(&a("1"), s), t));
        let first = members.next().unwrap();
        for m in members {
            rel.relate(first.clone(), m);
        }
    }
    rel
}

/// `I (x) X (x) Y` with the fibrewise ends collapsed: the theory of a
/// compatible left action of `X` and right co-action of `Y`. Returns the
/// quotient with its projection.
fn compatible_action(x: &Computad, y: &Computad) -> Result<(Computad, ComputadMap)> {
    let product = crate::tensor::tensor_product(
        &crate::tensor::tensor_product(&interval(), x)?,
        y,
    )?;
    quotient_by_relation(&product, &fibrewise_relation(x, y), QuotientMode::Reject)
}

/// Hand-transcribed congruent-shape identification turning the doubly
/// laxified unit theory into a monoid presentation: the two operation
/// 2-cells merge, their unitor 3-cells merge pairwise, and the redundant
/// copies of the object and endpoints merge.
fn monoid_relation(x: &Computad) -> GeneratorRelation {
    // the identifications are listed per shape class, see shape_classes
    let mut rel = GeneratorRelation::new();
    let mut merge_class = |members: &[&str]| {
        let parsed: Vec<GenName> = members.iter().map(|s| s.parse().unwrap()).collect();
        for w in parsed.windows(2) {
            rel.relate(w[0].clone(), w[1].clone());
        }
        for g in &parsed {
            debug_assert!(x.contains(g), "missing {g}");
        }
    };
    let _ = &mut merge_class;
    monoid_relation_pairs(&mut merge_class);
    rel
}

fn monoid_relation_pairs(merge_class: &mut impl FnMut(&[&str])) {
    // the three 0-cells merge into the unique object of the theory
    merge_class(&["(0.0.*)", "(0.*((1.*)))", "*((1.0.*))"]);
    // the four 1-cells merge into the object cell `a`
    merge_class(&["(0.0.a)", "(0.a.*)", "(a.0.*)", "(a.*((1.*)))"]);
    // the three binary operations merge into one multiplication;
    // the unit 2-cell (0.0.eta) is left alone and survives
    merge_class(&["(0.a.a)", "(a.0.a)", "(a.a.*)"]);
    // the right unitor of one operation and the left unitor of the other
    // merge; with a single operation the constant is a two-sided unit
    merge_class(&["(0.a.eta)", "(a.0.eta)"]);
}


fn entry(
    name: &str,
    recipe: &str,
    computad: Computad,
    basepoint: Option<GenName>,
    expected_counts: Option<Vec<usize>>,
    interpretive: bool,
) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        recipe: recipe.to_string(),
        computad,
        basepoint,
        expected_counts,
        interpretive,
    }
}

/// Build a catalog entry. Accepts the stable names in [`NAMES`] plus a
/// few building-block aliases (`I`, `M`, `Mop`, `S1`, `K`, `G2`, `G3`,
/// `point`, `oriental2`..`oriental4`).
pub fn build(name: &str) -> Result<CatalogEntry> {
    match name {
        "point" => Ok(entry("point", "point", Computad::point("*"), None, Some(vec![1]), false)),
        "interval" | "I" => Ok(entry(
            "interval",
            "interval",
            interval(),
            None,
            Some(vec![2, 1]),
            false,
        )),
        "S1" => Ok(entry(
            "S1",
            "circle",
            circle(),
            Some(a("*")),
            Some(vec![1, 1]),
            false,
        )),
        "G2" => Ok(entry("G2", "globe(2)", crate::constructions::globe(2), None, Some(vec![2, 2, 1]), false)),
        "G3" => Ok(entry("G3", "globe(3)", crate::constructions::globe(3), None, Some(vec![2, 2, 2, 1]), false)),
        "cube2" => Ok(entry(
            "cube2",
            "cube(2)",
            cube(2)?,
            None,
            Some(vec![4, 4, 1]),
            false,
        )),
        "cube3" => Ok(entry(
            "cube3",
            "cube(3)",
            cube(3)?,
            None,
            Some(vec![8, 12, 6, 1]),
            false,
        )),
        "oriental2" => Ok(entry("oriental2", "oriental(2)", oriental(2)?, None, Some(vec![3, 3, 1]), false)),
        "oriental3" => Ok(entry("oriental3", "oriental(3)", oriental(3)?, None, Some(vec![4, 6, 4, 1]), false)),
        "oriental4" => Ok(entry("oriental4", "oriental(4)", oriental(4)?, None, Some(vec![5, 10, 10, 5, 1]), false)),
        "r_matrix" => {
            let c3 = cube(3)?;
            let (quot, _) =
                quotient_by_relation(&c3, &all_same_dim_relation(&c3), QuotientMode::Reject)?;
            Ok(entry(
                "r_matrix",
                "cube(3) / same-dimension",
                quot,
                None,
                Some(vec![1, 1, 1, 1]),
                false,
            ))
        }
        "frobenius_law" => {
            let i = interval();
            let (quot, _) = compatible_action(&i, &i)?;
            Ok(entry(
                "frobenius_law",
                "(I (x) I (x) I) / fibrewise ends",
                quot,
                None,
                None,
                false,
            ))
        }
        "constants_K" | "K" => Ok(entry(
            "constants_K",
            "constants",
            constants_k(),
            Some(a("*")),
            Some(vec![1, 1, 1]),
            false,
        )),
        "right_unit" => {
            let (c, _) = cone(&constants_k(), Sign::Plus)?;
            Ok(entry(
                "right_unit",
                "op_1(cone+(K))",
                c.op_reverse(&BTreeSet::from([1])),
                None,
                Some(vec![2, 2, 2, 1]),
                false,
            ))
        }
        "lax_monoid" => {
            let base = build("right_unit")?.computad;
            let (c, _) = cone(&base, Sign::Plus)?;
            Ok(entry(
                "lax_monoid",
                "cone+(op_1(cone+(K)))",
                c,
                None,
                Some(vec![3, 4, 4, 3, 1]),
                false,
            ))
        }
        "monoid" => {
            let lax = build("lax_monoid")?.computad;
            let (quot, _) =
                quotient_by_relation(&lax, &monoid_relation(&lax), QuotientMode::Reject)?;
            Ok(entry(
                "monoid",
                "lax_monoid / congruent shapes",
                quot,
                None,
                None,
                true,
            ))
        }
        "comonoid" => {
            let m = build("monoid")?;
            Ok(entry(
                "comonoid",
                "op(monoid)",
                m.computad.op_all(),
                None,
                m.expected_counts,
                true,
            ))
        }
        "lax_comonoid" => {
            let m = build("lax_monoid")?;
            Ok(entry(
                "lax_comonoid",
                "op(lax_monoid)",
                m.computad.op_all(),
                None,
                m.expected_counts,
                false,
            ))
        }
        "M" => Ok(entry(
            "M",
            "minimal monoid",
            minimal_monoid(),
            Some(a("*")),
            Some(vec![1, 1, 2]),
            false,
        )),
        "Mop" => Ok(entry(
            "Mop",
            "op(minimal monoid)",
            minimal_comonoid(),
            Some(a("*")),
            Some(vec![1, 1, 2]),
            false,
        )),
        "action_left" => {
            let (c, _) = cone(&minimal_monoid(), Sign::Plus)?;
            Ok(entry("action_left", "cone+(M)", c, None, None, false))
        }
        "coaction_right" => {
            let (c, _) = cone(&minimal_comonoid(), Sign::Minus)?;
            Ok(entry("coaction_right", "cone-(Mop)", c, None, None, false))
        }
        "frobenius_compatible" => {
            let (quot, _) = compatible_action(&minimal_monoid(), &minimal_comonoid())?;
            Ok(entry(
                "frobenius_compatible",
                "(I (x) M (x) Mop) / fibrewise ends",
                quot,
                None,
                None,
                false,
            ))
        }
        "frobenius_special" => {
            let (fs, _, _) = frobenius_special()?;
            Ok(entry(
                "frobenius_special",
                "frobenius_compatible / loop elimination",
                fs.computad,
                Some(fs.basepoint),
                None,
                true,
            ))
        }
        "bialgebra" => {
            let m = pointed(minimal_monoid(), "*")?;
            let s = smash(&m, &m)?;
            Ok(entry(
                "bialgebra",
                "M /\\ M",
                s.computad,
                Some(s.basepoint),
                Some(vec![1, 0, 1, 4, 4]),
                false,
            ))
        }
        "commutative_monoid" => {
            let m = pointed(minimal_monoid(), "*")?;
            let w = pointed(minimal_comonoid(), "*")?;
            let s = smash(&m, &w)?;
            Ok(entry(
                "commutative_monoid",
                "M /\\ Mop",
                s.computad,
                Some(s.basepoint),
                Some(vec![1, 0, 1, 4, 4]),
                false,
            ))
        }
        "cocommutative_comonoid" => {
            let m = pointed(minimal_monoid(), "*")?;
            let w = pointed(minimal_comonoid(), "*")?;
            let s = smash(&w, &m)?;
            Ok(entry(
                "cocommutative_comonoid",
                "Mop /\\ M",
                s.computad,
                Some(s.basepoint),
                Some(vec![1, 0, 1, 4, 4]),
                false,
            ))
        }
        "interacting_bialgebras" => {
            let (ib, _, _) = interacting_bialgebras()?;
            Ok(entry(
                "interacting_bialgebras",
                "pushout of B \\/ B and suspended special Frobenius pair",
                ib.computad,
                Some(ib.basepoint),
                None,
                true,
            ))
        }
        other => Err(Error::UnknownEntry(other.to_string())),
    }
}

/// The special Frobenius theory with projections recording where the
/// monoid (`d`) and comonoid (`c`) copies land: returns the pointed
/// computad plus maps sending the minimal monoid (resp. comonoid)
/// generators to their classes.
pub fn frobenius_special() -> Result<(PointedComputad, ComputadMap, ComputadMap)> {
    let m = minimal_monoid();
    let w = minimal_comonoid();
    let (compat, proj) = compatible_action(&m, &w)?;

    let mut rel = GeneratorRelation::new();
    // identify the two endpoint classes and the three object 1-cells
    let c_of = |t: &GenName| -> Result<GenName> {
        Ok(proj
            .apply(&GenName::tensor(&GenName::tensor(&a("0"), &a("*")), t))?
            .clone())
    };
    let d_of = |s: &GenName| -> Result<GenName> {
        Ok(proj
            .apply(&GenName::tensor(&GenName::tensor(&a("1"), s), &a("*")))?
            .clone())
    };
    rel.relate(c_of(&a("*"))?, d_of(&a("*"))?);
    let mid_obj = GenName::tensor(&GenName::tensor(&a("a"), &a("*")), &a("*"));
    rel.relate(c_of(&a("a"))?, proj.apply(&mid_obj)?.clone());
    rel.relate(d_of(&a("a"))?, proj.apply(&mid_obj)?.clone());
    // loop elimination, interpretive: the sliding 2-cell over the object
    // is identified with the comultiplication (letting it act on the
    // left) and the dual sliding cell with the multiplication (letting
    // it co-act on the right)
    let slide_left = GenName::tensor(&GenName::tensor(&a("a"), &a("a")), &a("*"));
    let slide_right = GenName::tensor(&GenName::tensor(&a("a"), &a("*")), &a("a"));
    rel.relate(c_of(&a("mu"))?, proj.apply(&slide_left)?.clone());
    rel.relate(d_of(&a("mu"))?, proj.apply(&slide_right)?.clone());

    let (fs, proj2) = quotient_by_relation(&compat, &rel, QuotientMode::Reject)?;
    let full = proj.then(&proj2)?;
    let base = full
        .apply(&GenName::tensor(
            &GenName::tensor(&a("0"), &a("*")),
            &a("*"),
        ))?
        .clone();

    let mut into_monoid = ComputadMap::default();
    for g in m.all_generators() {
        let src = GenName::tensor(&GenName::tensor(&a("1"), g), &a("*"));
        into_monoid
            .assignment
            .insert(g.clone(), full.apply(&src)?.clone());
    }
    let mut into_comonoid = ComputadMap::default();
    for g in w.all_generators() {
        let src = GenName::tensor(&GenName::tensor(&a("0"), &a("*")), g);
        into_comonoid
            .assignment
            .insert(g.clone(), full.apply(&src)?.clone());
    }
    into_monoid.validate(&m, &fs)?;
    into_comonoid.validate(&w, &fs)?;
    Ok((PointedComputad::new(fs, base)?, into_monoid, into_comonoid))
}

/// The four-fold smash `B`, with maps recording the first two slot
/// copies: slot 1 carries a (suspended) monoid, slot 2 a comonoid.
fn four_fold_b() -> Result<PointedComputad> {
    let m = pointed(minimal_monoid(), "*")?;
    let mut b = m.clone();
    for _ in 0..3 {
        b = smash(&b, &m)?;
    }
    Ok(b)
}

/// Name of the slot-`j` embedding of a generator into a 4-fold smash
/// tuple, `a` in every other slot.
fn slot_name(j: usize, g: &GenName) -> GenName {
    let mut factors: Vec<GenName> = vec![a("a"); 4];
    factors[j] = g.clone();
    let mut it = factors.into_iter();
    let first = it.next().unwrap();
    it.fold(first, |acc, x| GenName::tensor(&acc, &x))
}

/// The interacting-bialgebras pushout: two copies of `B` and two copies
/// of the suspended special Frobenius theory, glued along suspended
/// monoid/comonoid pairs. Returns the result with the two leg images.
pub fn interacting_bialgebras() -> Result<(PointedComputad, ComputadMap, ComputadMap)> {
    let m = minimal_monoid();
    let w = minimal_comonoid();

    // A = suspended wedge of M, Mop, M, Mop
    let mp = pointed(m.clone(), "*")?;
    let wp = pointed(w.clone(), "*")?;
    let wedge1 = wedge(&mp, &wp)?;
    let wedge2 = wedge(&wedge1, &mp)?;
    let wedge3 = wedge(&wedge2, &wp)?;
    let big_a = suspension(&wedge3, 3)?;

    // copy tags inside the iterated wedge, left-associated
    let copy_tag = |copy: usize, g: &GenName| -> GenName {
        match copy {
            0 => GenName::tagged(0, GenName::tagged(0, GenName::tagged(0, g.clone()))),
            1 => GenName::tagged(0, GenName::tagged(0, GenName::tagged(1, g.clone()))),
            2 => GenName::tagged(0, GenName::tagged(1, g.clone())),
            _ => GenName::tagged(1, g.clone()),
        }
    };
    let suspend3 = |g: &GenName| -> GenName {
        let s1 = GenName::tensor(g, &a("a"));
        let s2 = GenName::tensor(&s1, &a("a"));
        GenName::tensor(&s2, &a("a"))
    };

    // X = B \/ B
    let b = four_fold_b()?;
    let bb = wedge(&b, &b)?;

    // Y = suspended (F_s \/ F_s)
    let (fs, fs_monoid, fs_comonoid) = frobenius_special()?;
    let fsfs = wedge(&fs, &fs)?;
    let big_y = suspension(&fsfs, 3)?;

    // legs: copies 0,1 go with the first B / F_s, copies 2,3 with the second
    let mut f = ComputadMap::default();
    let mut g = ComputadMap::default();
    f.assignment
        .insert(big_a.basepoint.clone(), bb.basepoint.clone());
    g.assignment
        .insert(big_a.basepoint.clone(), big_y.basepoint.clone());
    for (copy, theory, fs_map, slot) in [
        (0usize, &m, &fs_monoid, 0usize),
        (1, &w, &fs_comonoid, 1),
        (2, &m, &fs_monoid, 0),
        (3, &w, &fs_comonoid, 1),
    ] {
        let b_side = if copy < 2 { 0 } else { 1 };
        for gen in theory.all_generators() {
            if theory.dim_of(gen)? == 0 {
                continue;
            }
            let src = suspend3(&copy_tag(copy, gen));
            let into_b = GenName::tagged(b_side, slot_name(slot, gen));
            let into_y = suspend3(&GenName::tagged(b_side, fs_map.apply(gen)?.clone()));
            f.assignment.insert(src.clone(), into_b);
            g.assignment.insert(src, into_y);
        }
    }
    f.validate(&big_a.computad, &bb.computad)?;
    g.validate(&big_a.computad, &big_y.computad)?;

    let (result, into_x, into_y) = pushout(&big_a.computad, &bb, &big_y, &f, &g)?;
    Ok((result, into_x, into_y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::Sign;
    use crate::iso::find_isomorphism;

    #[test]
    fn every_entry_builds_validates_and_matches_its_counts() {
        for name in NAMES {
            let entry = build(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            let report = entry.computad.validate();
            assert!(report.is_ok(), "{name}: {report}");
            if let Some(expected) = &entry.expected_counts {
                assert_eq!(&entry.computad.counts(), expected, "counts of {name}");
            }
            if let Some(b) = &entry.basepoint {
                assert_eq!(entry.computad.dim_of(b).unwrap(), 0, "basepoint of {name}");
            }
        }
    }

    #[test]
    fn monoid_keeps_a_single_unit_two_cell() {
        let monoid = build("monoid").unwrap().computad;
        assert_eq!(monoid.counts(), vec![1, 1, 2, 2, 1]);
        let lax = build("lax_monoid").unwrap().computad;
        assert_eq!(lax.counts(), vec![3, 4, 4, 3, 1]);
    }

    #[test]
    fn commutativity_entries_are_opposites_of_each_other() {
        let cm = build("commutative_monoid").unwrap().computad;
        let cc = build("cocommutative_comonoid").unwrap().computad;
        assert!(find_isomorphism(&cm.op_all(), &cc).is_some());
        assert_eq!(cm.counts(), vec![1, 0, 1, 4, 4]);
        assert_eq!(build("bialgebra").unwrap().computad.counts(), vec![1, 0, 1, 4, 4]);
    }

    #[test]
    fn frobenius_special_contains_a_monoid_and_a_comonoid() {
        let (fs, into_monoid, into_comonoid) = frobenius_special().unwrap();
        assert_eq!(fs.computad.counts(), vec![1, 1, 4, 5, 4, 4]);
        into_monoid.validate(&minimal_monoid(), &fs.computad).unwrap();
        into_comonoid.validate(&minimal_comonoid(), &fs.computad).unwrap();
        assert!(into_monoid.is_injective());
        assert!(into_comonoid.is_injective());
    }

    #[test]
    fn interacting_bialgebras_counts() {
        let (ib, l, r) = interacting_bialgebras().unwrap();
        assert_eq!(ib.computad.counts(), vec![1, 0, 0, 0, 2, 16, 58, 72, 40]);
        assert!(ib.computad.validate().is_ok());
        // left leg comes from the wedge of two four-fold bialgebras, the
        // right leg from the triple suspension of two glued special
        // Frobenius theories
        assert_eq!(l.assignment.len(), 2 * 82 - 1);
        assert_eq!(r.assignment.len(), 2 * 19 - 1);
        for image in l.assignment.values().chain(r.assignment.values()) {
            assert!(ib.computad.contains(image));
        }
    }

    #[test]
    fn constants_theory_has_a_unit_cell_over_the_loop() {
        let k = constants_k();
        assert_eq!(k.counts(), vec![1, 1, 1]);
        let eta = k.atom(&a("eta")).unwrap();
        assert!(eta.component(1, Sign::Minus).is_zero());
        assert_eq!(
            eta.component(1, Sign::Plus),
            crate::chain::Chain::singleton(1, a("a"))
        );
    }
}
