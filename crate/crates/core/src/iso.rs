//! Generator-level isomorphism search.
//!
//! Colors are refined jointly over both computads (dimension first, then
//! iterated border fingerprints) until the partition stabilises; the
//! backtracking search then only matches generators of equal color,
//! ascending through dimensions so border support is always already
//! assigned and candidate checks are single cell comparisons.

use std::collections::BTreeMap;

use crate::cell::SIGNS;
use crate::computad::Computad;
use crate::map::ComputadMap;
use crate::name::GenName;

type Colors = BTreeMap<GenName, usize>;

/// Stable partition refinement run jointly on several computads so the
/// resulting color ids are comparable across them.
fn refine_jointly(computads: &[&Computad]) -> Vec<Colors> {
    let mut colors: Vec<Colors> = computads
        .iter()
        .map(|x| {
            x.all_generators()
                .map(|g| (g.clone(), x.dim_of(g).unwrap()))
                .collect()
        })
        .collect();
    let mut distinct = 0usize;
    loop {
        // signature of a generator under the current coloring
        let mut signatures: Vec<Vec<(GenName, String)>> = Vec::new();
        for (x, cols) in computads.iter().zip(&colors) {
            let mut sigs = Vec::new();
            for g in x.all_generators() {
                let mut sig = format!("c{}", cols[g]);
                if x.dim_of(g).unwrap() > 0 {
                    for sign in SIGNS {
                        let cell = x.border(g, sign).unwrap();
                        for k in 0..=cell.dim() {
                            for s in SIGNS {
                                let mut terms: Vec<String> = cell
                                    .component(k, s)
                                    .iter()
                                    .map(|(h, c)| format!("{}*{}", c, cols[h]))
                                    .collect();
                                terms.sort();
                                sig.push_str(&format!("|{sign}{k}{s}:{}", terms.join(",")));
                            }
                        }
                    }
                }
                sigs.push((g.clone(), sig));
            }
            signatures.push(sigs);
        }
        let mut intern: BTreeMap<&str, usize> = BTreeMap::new();
        for sigs in &signatures {
            for (_, sig) in sigs {
                intern.insert(sig, 0);
            }
        }
        for (i, v) in intern.values_mut().enumerate() {
            *v = i;
        }
        let next_distinct = intern.len();
        colors = signatures
            .iter()
            .map(|sigs| {
                sigs.iter()
                    .map(|(g, sig)| (g.clone(), intern[sig.as_str()]))
                    .collect()
            })
            .collect();
        if next_distinct == distinct {
            return colors;
        }
        distinct = next_distinct;
    }
}

/// Group the generators of one computad by refined color. Generators in
/// one group have congruent iterated border shapes, which makes the
/// groups the natural candidates when hunting for identifications.
pub fn shape_classes(x: &Computad) -> Vec<Vec<GenName>> {
    let colors = refine_jointly(&[x]).pop().unwrap();
    let mut by_color: BTreeMap<usize, Vec<GenName>> = BTreeMap::new();
    for g in x.all_generators() {
        by_color.entry(colors[g]).or_default().push(g.clone());
    }
    by_color.into_values().collect()
}

/// Search for a border-preserving bijection of generators. Returns `None`
/// when the computads are not isomorphic.
pub fn find_isomorphism(x: &Computad, y: &Computad) -> Option<ComputadMap> {
    if x.counts() != y.counts() {
        return None;
    }
    let mut colors = refine_jointly(&[x, y]);
    let cy = colors.pop().unwrap();
    let cx = colors.pop().unwrap();
    let mut hist_x: BTreeMap<usize, usize> = BTreeMap::new();
    let mut hist_y: BTreeMap<usize, usize> = BTreeMap::new();
    for c in cx.values() {
        *hist_x.entry(*c).or_default() += 1;
    }
    for c in cy.values() {
        *hist_y.entry(*c).or_default() += 1;
    }
    if hist_x != hist_y {
        return None;
    }

    // dimension-ascending order; within a dimension, rarest colors first
    let mut order: Vec<GenName> = x.all_generators().cloned().collect();
    order.sort_by_key(|g| (x.dim_of(g).unwrap(), hist_x[&cx[g]], cx[g]));

    let mut map = ComputadMap::default();
    let mut used: BTreeMap<GenName, ()> = BTreeMap::new();
    if assign(x, y, &cx, &cy, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn assign(
    x: &Computad,
    y: &Computad,
    cx: &Colors,
    cy: &Colors,
    order: &[GenName],
    idx: usize,
    map: &mut ComputadMap,
    used: &mut BTreeMap<GenName, ()>,
) -> bool {
    let Some(g) = order.get(idx) else {
        return true;
    };
    let dim = x.dim_of(g).unwrap();
    let candidates: Vec<GenName> = y
        .generators(dim)
        .iter()
        .filter(|h| !used.contains_key(*h) && cy[*h] == cx[g])
        .cloned()
        .collect();
    for h in candidates {
        if dim > 0 {
            // border support of g sits in lower dimensions, all assigned
            let ok = SIGNS.iter().all(|&sign| {
                match map.transport_cell(y, x.border(g, sign).unwrap()) {
                    Ok(t) => &t == y.border(&h, sign).unwrap(),
                    Err(_) => false,
                }
            });
            if !ok {
                continue;
            }
        }
        map.assignment.insert(g.clone(), h.clone());
        used.insert(h.clone(), ());
        if assign(x, y, cx, cy, order, idx + 1, map, used) {
            return true;
        }
        map.assignment.remove(g);
        used.remove(&h);
    }
    false
}
