//! Quotients of computads by compatible generator relations, and the
//! collapse of a subcomputad onto a fresh basepoint.
//!
//! A class may span dimensions: the quotient generator takes the least
//! dimension in the class, and higher-dimensional members are crushed
//! onto its identities (collapse is the special case of a single class
//! containing a whole subcomputad). Compatibility is verified, never
//! assumed: same-dimension members must transport to identical border
//! cells, crushed members must degenerate cleanly.

use std::collections::{BTreeMap, BTreeSet};

use crate::cell::{Sign, SteinerCell, SIGNS};
use crate::chain::Chain;
use crate::computad::Computad;
use crate::error::{Error, Result};
use crate::map::ComputadMap;
use crate::name::GenName;

/// A set of generator identifications, kept as a union-find over names.
#[derive(Clone, Debug, Default)]
pub struct GeneratorRelation {
    parent: BTreeMap<GenName, GenName>,
}

impl GeneratorRelation {
    pub fn new() -> Self {
        GeneratorRelation::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (GenName, GenName)>) -> Self {
        let mut rel = GeneratorRelation::new();
        for (a, b) in pairs {
            rel.relate(a, b);
        }
        rel
    }

    pub fn relate(&mut self, a: GenName, b: GenName) {
        let ra = self.root(&a);
        let rb = self.root(&b);
        self.parent.entry(a).or_insert_with(|| ra.clone());
        self.parent.entry(b).or_insert_with(|| rb.clone());
        if ra != rb {
            // smaller root wins, keeps classes deterministic
            let (keep, fold) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(fold, keep);
        }
    }

    fn root(&self, name: &GenName) -> GenName {
        let mut cur = name;
        while let Some(next) = self.parent.get(cur) {
            if next == cur {
                break;
            }
            cur = next;
        }
        cur.clone()
    }

    /// Non-singleton classes, sorted members, deterministic order.
    pub fn classes(&self) -> Vec<Vec<GenName>> {
        let mut by_root: BTreeMap<GenName, Vec<GenName>> = BTreeMap::new();
        for name in self.parent.keys() {
            by_root.entry(self.root(name)).or_default().push(name.clone());
        }
        by_root
            .into_values()
            .filter(|v| v.len() > 1)
            .map(|mut v| {
                v.sort();
                v
            })
            .collect()
    }
}

/// What to do when the compatibility check fails: reject, or merge the
/// classes it forces (congruence closure) and retry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientMode {
    Reject,
    Refine,
}

pub fn quotient_by_relation(
    x: &Computad,
    rel: &GeneratorRelation,
    mode: QuotientMode,
) -> Result<(Computad, ComputadMap)> {
    let mut classes = rel.classes();
    for class in &classes {
        for g in class {
            x.dim_of(g)?;
        }
    }
    let limit = x.total_generators() * x.total_generators() + 1;
    for _ in 0..limit {
        match build_quotient(x, &classes, &class_name) {
            Ok(out) => return Ok(out),
            Err(e) => {
                if mode == QuotientMode::Reject {
                    return Err(e);
                }
                match forced_merge(x, &classes)? {
                    Some((a, b)) => {
                        let mut pairs: Vec<(GenName, GenName)> = Vec::new();
                        for class in &classes {
                            for w in class.windows(2) {
                                pairs.push((w[0].clone(), w[1].clone()));
                            }
                        }
                        pairs.push((a, b));
                        classes = GeneratorRelation::from_pairs(pairs).classes();
                    }
                    None => return Err(e),
                }
            }
        }
    }
    Err(Error::IncompatibleRelation {
        class: "<refinement>".into(),
        level: 0,
        detail: "congruence refinement did not terminate".into(),
    })
}

/// Crush the subcomputad on `members` to a fresh basepoint named after its
/// least 0-generator. The set must be closed under border support.
pub fn collapse(x: &Computad, members: &BTreeSet<GenName>) -> Result<(Computad, ComputadMap)> {
    if members.is_empty() {
        let identity = ComputadMap::identity_on(x.all_generators().cloned());
        return Ok((x.clone(), identity));
    }
    // restrict_to doubles as the closure check and produces the error
    x.restrict_to(members)?;
    let base = members
        .iter()
        .find(|g| x.dim_of(g).map(|d| d == 0).unwrap_or(false))
        .ok_or_else(|| {
            Error::NotSubcomputad(members.iter().next().unwrap().clone())
        })?;
    let star = GenName::star(base.clone());
    let class: Vec<GenName> = members.iter().cloned().collect();
    build_quotient(x, &[class], &|members_of_class, _| {
        debug_assert!(!members_of_class.is_empty());
        star.clone()
    })
}

fn class_name(members: &[GenName], _x: &Computad) -> GenName {
    GenName::class(members.to_vec())
}

struct Partition {
    /// generator -> (class index, class dim)
    lookup: BTreeMap<GenName, (usize, usize)>,
    /// per class: name, dim, sorted members
    classes: Vec<(GenName, usize, Vec<GenName>)>,
}

fn make_partition(
    x: &Computad,
    classes: &[Vec<GenName>],
    namer: &dyn Fn(&[GenName], &Computad) -> GenName,
) -> Result<Partition> {
    let mut lookup = BTreeMap::new();
    let mut out = Vec::new();
    for class in classes {
        let dim = class
            .iter()
            .map(|g| x.dim_of(g))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .min()
            .expect("class is non-empty");
        let name = if class.len() == 1 {
            class[0].clone()
        } else {
            namer(class, x)
        };
        let idx = out.len();
        for g in class {
            if lookup.insert(g.clone(), (idx, dim)).is_some() {
                return Err(Error::IncompatibleRelation {
                    class: name.to_string(),
                    level: 0,
                    detail: format!("generator `{g}` appears in two classes"),
                });
            }
        }
        out.push((name, dim, class.clone()));
    }
    for g in x.all_generators() {
        if !lookup.contains_key(g) {
            let idx = out.len();
            lookup.insert(g.clone(), (idx, x.dim_of(g)?));
            out.push((g.clone(), x.dim_of(g)?, vec![g.clone()]));
        }
    }
    Ok(Partition {
        lookup,
        classes: out,
    })
}

fn transport_chain(p: &Partition, chain: &Chain) -> Chain {
    chain.map_support(|g| {
        let (idx, dim) = p.lookup[g];
        if dim == chain.dim() {
            Some(p.classes[idx].0.clone())
        } else {
            None
        }
    })
}

fn transport_cell(p: &Partition, cell: &SteinerCell) -> SteinerCell {
    let levels = cell
        .levels()
        .iter()
        .map(|(m, p_)| (transport_chain(p, m), transport_chain(p, p_)))
        .collect();
    SteinerCell::from_levels_unchecked(levels)
}

fn first_diff_level(a: &SteinerCell, b: &SteinerCell) -> Option<(usize, Sign)> {
    (0..=a.dim().max(b.dim()))
        .flat_map(|k| SIGNS.map(|s| (k, s)))
        .find(|&(k, s)| a.component(k, s) != b.component(k, s))
}

fn build_quotient(
    x: &Computad,
    classes: &[Vec<GenName>],
    namer: &dyn Fn(&[GenName], &Computad) -> GenName,
) -> Result<(Computad, ComputadMap)> {
    let partition = make_partition(x, classes, namer)?;
    // first occurrence of any member, for a stable output order
    let position: BTreeMap<&GenName, usize> = x
        .all_generators()
        .enumerate()
        .map(|(i, g)| (g, i))
        .collect();
    let mut order: Vec<usize> = (0..partition.classes.len()).collect();
    order.sort_by_key(|&i| {
        let (_, dim, members) = &partition.classes[i];
        let first = members.iter().map(|g| position[g]).min().unwrap();
        (*dim, first)
    });

    let mut quotient = Computad::new();
    for &idx in &order {
        let (name, dim, members) = &partition.classes[idx];
        let reps: Vec<&GenName> = members
            .iter()
            .filter(|g| x.dim_of(g).unwrap() == *dim)
            .collect();
        let rep = reps
            .iter()
            .min_by_key(|g| position[**g])
            .expect("every class has a member of minimal dimension");
        if *dim == 0 {
            quotient.add_point(name.clone()).map_err(|e| wrap(name, 0, e))?;
            continue;
        }
        let minus = transport_cell(&partition, x.border(rep, Sign::Minus)?);
        let plus = transport_cell(&partition, x.border(rep, Sign::Plus)?);
        // all same-dimension members must agree after transport
        for other in &reps {
            for (sign, mine) in [(Sign::Minus, &minus), (Sign::Plus, &plus)] {
                let theirs = transport_cell(&partition, x.border(other, sign)?);
                if &theirs != mine {
                    let (level, s) = first_diff_level(&theirs, mine).unwrap();
                    return Err(Error::IncompatibleRelation {
                        class: name.to_string(),
                        level,
                        detail: format!(
                            "members `{rep}` and `{other}` transport to different {s}-chains"
                        ),
                    });
                }
            }
        }
        quotient
            .add_generator(name.clone(), minus, plus)
            .map_err(|e| wrap(name, dim.saturating_sub(1), e))?;
    }

    // crushed members must degenerate onto the identity of their class
    for (name, dim, members) in &partition.classes {
        for g in members {
            let gd = x.dim_of(g)?;
            if gd == *dim {
                continue;
            }
            let expected = quotient.atom(name)?.pad_to(gd - 1);
            for sign in SIGNS {
                let transported = transport_cell(&partition, x.border(g, sign)?);
                if transported != expected {
                    let (level, s) = first_diff_level(&transported, &expected).unwrap();
                    return Err(Error::IncompatibleRelation {
                        class: name.to_string(),
                        level,
                        detail: format!(
                            "crushed member `{g}` has a {sign}-border that does not degenerate (first differs in the {s}-chain)"
                        ),
                    });
                }
            }
        }
    }

    let assignment = partition
        .lookup
        .iter()
        .map(|(g, (idx, _))| (g.clone(), partition.classes[*idx].0.clone()))
        .collect();
    Ok((quotient, ComputadMap::new(assignment)))
}

fn wrap(class: &GenName, level: usize, e: Error) -> Error {
    match e {
        e @ Error::IncompatibleRelation { .. } => e,
        other => Error::IncompatibleRelation {
            class: class.to_string(),
            level,
            detail: other.to_string(),
        },
    }
}

/// Look for a merge forced by the current classes: two same-dimension
/// members whose transported borders differ in exactly one generator each
/// of matching class dimension. Returns `None` when no unambiguous merge
/// exists.
fn forced_merge(x: &Computad, classes: &[Vec<GenName>]) -> Result<Option<(GenName, GenName)>> {
    let partition = make_partition(x, classes, &class_name)?;
    for (_, dim, members) in &partition.classes {
        let reps: Vec<&GenName> = members
            .iter()
            .filter(|g| x.dim_of(g).unwrap() == *dim)
            .collect();
        if *dim == 0 {
            continue;
        }
        let pairs: Vec<(&GenName, &GenName)> = match reps.split_first() {
            Some((first, rest)) => rest.iter().map(|r| (*first, *r)).collect(),
            None => continue,
        };
        for (a, b) in pairs {
            for sign in SIGNS {
                let ca = transport_cell(&partition, x.border(a, sign)?);
                let cb = transport_cell(&partition, x.border(b, sign)?);
                if let Some((level, s)) = first_diff_level(&ca, &cb) {
                    let diff = ca.component(level, s).sub(&cb.component(level, s));
                    let (pos, neg) = diff.pos_neg_parts();
                    if pos.len() == 1 && neg.len() == 1 {
                        let p = pos.support().next().unwrap().clone();
                        let n = neg.support().next().unwrap().clone();
                        if p != n {
                            return Ok(Some((p, n)));
                        }
                    }
                }
            }
        }
        // crushed members forcing merges
        for g in members {
            let gd = x.dim_of(g)?;
            if gd == *dim {
                continue;
            }
            let cm = transport_cell(&partition, x.border(g, Sign::Minus)?);
            let cp = transport_cell(&partition, x.border(g, Sign::Plus)?);
            if let Some((level, s)) = first_diff_level(&cm, &cp) {
                let diff = cm.component(level, s).sub(&cp.component(level, s));
                let (pos, neg) = diff.pos_neg_parts();
                if pos.len() == 1 && neg.len() == 1 {
                    let p = pos.support().next().unwrap().clone();
                    let n = neg.support().next().unwrap().clone();
                    if p != n {
                        return Ok(Some((p, n)));
                    }
                }
            }
        }
    }
    Ok(None)
}
