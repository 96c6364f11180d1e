//! Exhaustive generation of finite spaces.
//!
//! A topology on a finite set is determined by the smallest open set around
//! each point: a subset is open exactly when it contains the minimal
//! neighbourhood of each of its points. The enumerator therefore walks
//! assignments `nbd[0..n]` with `x` in `nbd[x]`, pruned by the consistency
//! rule that whenever `y` lies in `nbd[x]` the whole of `nbd[y]` must too.
//! Candidates are tried in ascending mask order at every position, so the
//! walk is deterministic and the tuples come out in lexicographic order.

use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::maps::SpaceMap;
use crate::space::{FiniteSpace, GroundSet, SubsetMask};

fn consistent(up: &[SubsetMask], cand: SubsetMask, j: usize) -> bool {
    for (i, &ui) in up.iter().enumerate() {
        if ui.contains(j) && !cand.is_subset_of(ui) {
            return false;
        }
        if cand.contains(i) && !ui.is_subset_of(cand) {
            return false;
        }
    }
    true
}

fn dfs(n: usize, up: &mut Vec<SubsetMask>, f: &mut impl FnMut(&[SubsetMask])) {
    if up.len() == n {
        f(up);
        return;
    }
    let j = up.len();
    for bits in 0..(1u32 << n) {
        if bits >> j & 1 == 0 {
            continue;
        }
        let cand = SubsetMask::from_bits(bits);
        if consistent(up, cand, j) {
            up.push(cand);
            dfs(n, up, f);
            up.pop();
        }
    }
}

/// Visits every minimal-neighbourhood tuple on `n` points in lexicographic
/// order without materializing the whole list.
pub fn for_each_min_nbd_tuple(n: usize, mut f: impl FnMut(&[SubsetMask])) {
    assert!((1..=16).contains(&n), "point count out of range");
    let mut up = Vec::with_capacity(n);
    dfs(n, &mut up, &mut f);
}

/// All minimal-neighbourhood tuples, flattened with stride `n`.
pub fn min_nbd_tuples(n: usize) -> Vec<SubsetMask> {
    let mut flat = Vec::new();
    for_each_min_nbd_tuple(n, |tuple| flat.extend_from_slice(tuple));
    flat
}

/// Builds the space whose open sets are exactly the masks containing the
/// given minimal neighbourhood of each of their points.
pub fn space_from_min_nbds(nbds: &[SubsetMask]) -> FiniteSpace {
    let n = nbds.len();
    let ground = GroundSet::alphabetic(n).expect("alphabetic ground set");
    let opens: Vec<SubsetMask> = (0..(1u32 << n))
        .map(SubsetMask::from_bits)
        .filter(|m| m.points().all(|x| nbds[x].is_subset_of(*m)))
        .collect();
    FiniteSpace::from_opens_unchecked(ground, opens)
}

/// Number of labelled topologies on `n` points.
pub fn count_spaces(n: usize) -> u64 {
    let mut count = 0u64;
    for_each_min_nbd_tuple(n, |_| count += 1);
    count
}

/// Every labelled topology on `n` points, in the tuple order of the walk.
pub fn enumerate_spaces(n: usize) -> Vec<FiniteSpace> {
    let mut out = Vec::new();
    for_each_min_nbd_tuple(n, |tuple| out.push(space_from_min_nbds(tuple)));
    out
}

/// Runs `f` on every labelled topology on `n` points across the thread pool.
/// The index passed along is the position in the sequential walk, so callers
/// can reduce to the earliest hit deterministically.
pub fn par_for_each_space(n: usize, f: impl Fn(usize, &FiniteSpace) + Sync) {
    let flat = min_nbd_tuples(n);
    flat.par_chunks(n).enumerate().for_each(|(i, tuple)| {
        let sp = space_from_min_nbds(tuple);
        f(i, &sp);
    });
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

fn relabel(m: SubsetMask, perm: &[usize]) -> SubsetMask {
    let mut out = SubsetMask::EMPTY;
    for i in m.points() {
        out = out.union(SubsetMask::singleton(perm[i]));
    }
    out
}

/// The lexicographically least relabelling of the open family; equal for two
/// spaces exactly when some bijection of points carries one topology onto
/// the other.
pub fn canonical_open_family(sp: &FiniteSpace) -> Vec<SubsetMask> {
    let n = sp.size();
    let mut best: Option<Vec<SubsetMask>> = None;
    for perm in permutations(n) {
        let mut fam: Vec<SubsetMask> = sp.opens().iter().map(|&m| relabel(m, &perm)).collect();
        fam.sort();
        if best.as_ref().is_none_or(|b| fam < *b) {
            best = Some(fam);
        }
    }
    best.expect("at least the identity permutation")
}

/// One representative per homeomorphism class, each presented with its
/// canonical open family.
pub fn enumerate_up_to_homeo(n: usize) -> Vec<FiniteSpace> {
    assert!(
        n <= 7,
        "homeomorphism reduction permutes points, capped at 7"
    );
    let mut seen = std::collections::BTreeSet::new();
    let mut reps = Vec::new();
    for_each_min_nbd_tuple(n, |tuple| {
        let sp = space_from_min_nbds(tuple);
        let canon = canonical_open_family(&sp);
        if seen.insert(canon.clone()) {
            let ground = GroundSet::alphabetic(n).expect("alphabetic ground set");
            reps.push(FiniteSpace::from_opens_unchecked(ground, canon));
        }
    });
    reps
}

/// Filters applied while enumerating maps; all off means every table.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MapConstraints {
    pub surjective: bool,
    pub injective: bool,
    pub continuous: bool,
}

impl MapConstraints {
    fn admits(self, f: &SpaceMap) -> bool {
        if self.surjective && f.image(f.domain().full()) != f.codomain().full() {
            return false;
        }
        if self.injective {
            let mut seen = 0u32;
            for x in 0..f.domain().size() {
                let bit = 1u32 << f.apply(x);
                if seen & bit != 0 {
                    return false;
                }
                seen |= bit;
            }
        }
        if self.continuous {
            for &v in f.codomain().opens() {
                if !f.domain().is_open(f.preimage(v)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Raised when a map enumeration would exceed its table budget; nothing is
/// generated in that case.
#[derive(Debug, Error)]
#[error("enumerating {requested} map tables refused, budget is {budget}")]
pub struct MapBudgetError {
    pub requested: u64,
    pub budget: u64,
}

/// Every function table from `x` to `y` passing the constraints, in
/// lexicographic table order with the first point most significant. The
/// budget counts raw tables before filtering.
pub fn enumerate_maps(
    x: &Arc<FiniteSpace>,
    y: &Arc<FiniteSpace>,
    constraints: MapConstraints,
    budget: u64,
) -> Result<Vec<SpaceMap>, MapBudgetError> {
    let nx = x.size();
    let ny = y.size();
    let tables = (ny as u64).pow(nx as u32);
    if tables > budget {
        return Err(MapBudgetError {
            requested: tables,
            budget,
        });
    }
    let mut out = Vec::new();
    for ti in 0..tables {
        let mut rest = ti;
        let mut table = vec![0usize; nx];
        for slot in table.iter_mut().rev() {
            *slot = (rest % ny as u64) as usize;
            rest /= ny as u64;
        }
        let f = SpaceMap::new(x.clone(), y.clone(), table).expect("table digits stay in range");
        if constraints.admits(&f) {
            out.push(f);
        }
    }
    Ok(out)
}
