//! Definition-literal reference implementations.
//!
//! Everything in this module consults only [`FiniteSpace::is_open`] and scans
//! the full subset range for each query: no cached tables, no algebraic
//! shortcuts, no sharing with the fast path in [`crate::analysis`]. The two
//! implementations are written against the same definitions by different
//! routes, so equality between them on random spaces is meaningful evidence
//! that both are right.

use crate::operators::{ClosureKind, ClosureOutcome, SubsetClassification};
use crate::space::{FiniteSpace, SubsetMask};

fn masks(sp: &FiniteSpace) -> impl Iterator<Item = SubsetMask> {
    (0..(1u32 << sp.size())).map(SubsetMask::from_bits)
}

/// Union of all open subsets of `a`.
pub fn interior(sp: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    let mut acc = SubsetMask::EMPTY;
    for o in masks(sp) {
        if sp.is_open(o) && o.is_subset_of(a) {
            acc = acc.union(o);
        }
    }
    acc
}

/// Intersection of all closed supersets of `a`.
pub fn closure(sp: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    let mut acc = sp.full();
    for f in masks(sp) {
        if sp.is_open(sp.complement(f)) && a.is_subset_of(f) {
            acc = acc.intersect(f);
        }
    }
    acc
}

pub fn is_semi_open(sp: &FiniteSpace, a: SubsetMask) -> bool {
    a.is_subset_of(closure(sp, interior(sp, a)))
}

pub fn is_semi_closed(sp: &FiniteSpace, a: SubsetMask) -> bool {
    interior(sp, closure(sp, a)).is_subset_of(a)
}

pub fn is_cstar_open(sp: &FiniteSpace, a: SubsetMask) -> bool {
    is_semi_open(sp, a) && is_semi_closed(sp, a)
}

pub fn is_cstar_closed(sp: &FiniteSpace, a: SubsetMask) -> bool {
    is_cstar_open(sp, sp.complement(a))
}

pub fn is_regular_open(sp: &FiniteSpace, a: SubsetMask) -> bool {
    a == interior(sp, closure(sp, a))
}

pub fn is_regular_closed(sp: &FiniteSpace, a: SubsetMask) -> bool {
    is_regular_open(sp, sp.complement(a))
}

fn meet(sp: &FiniteSpace, a: SubsetMask, member: impl Fn(SubsetMask) -> bool) -> SubsetMask {
    let mut acc = sp.full();
    for f in masks(sp) {
        if a.is_subset_of(f) && member(f) {
            acc = acc.intersect(f);
        }
    }
    acc
}

pub fn semi_closure(sp: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    meet(sp, a, |f| is_semi_closed(sp, f))
}

pub fn cstar_closure(sp: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    meet(sp, a, |f| is_cstar_closed(sp, f))
}

/// The starred-closed test, quantifying over every c*-open superset.
pub fn is_scstar_closed(sp: &FiniteSpace, a: SubsetMask) -> bool {
    let scl = semi_closure(sp, a);
    for u in masks(sp) {
        if is_cstar_open(sp, u) && a.is_subset_of(u) && !scl.is_subset_of(u) {
            return false;
        }
    }
    true
}

pub fn is_scstar_open(sp: &FiniteSpace, a: SubsetMask) -> bool {
    is_scstar_closed(sp, sp.complement(a))
}

pub fn scstar_closure(sp: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    meet(sp, a, |f| is_scstar_closed(sp, f))
}

pub fn open_kernel(sp: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    meet(sp, a, |f| sp.is_open(f))
}

pub fn cstar_kernel(sp: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    meet(sp, a, |f| is_cstar_open(sp, f))
}

pub fn scstar_kernel(sp: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    meet(sp, a, |f| is_scstar_open(sp, f))
}

pub fn is_g_closed(sp: &FiniteSpace, a: SubsetMask) -> bool {
    closure(sp, a).is_subset_of(open_kernel(sp, a))
}

pub fn is_g_open(sp: &FiniteSpace, a: SubsetMask) -> bool {
    is_g_closed(sp, sp.complement(a))
}

pub fn is_gscstar_closed(sp: &FiniteSpace, a: SubsetMask) -> bool {
    scstar_closure(sp, a).is_subset_of(open_kernel(sp, a))
}

pub fn is_gscstar_open(sp: &FiniteSpace, a: SubsetMask) -> bool {
    is_gscstar_closed(sp, sp.complement(a))
}

pub fn is_scstar_g_closed(sp: &FiniteSpace, a: SubsetMask) -> bool {
    scstar_closure(sp, a).is_subset_of(scstar_kernel(sp, a))
}

pub fn is_scstar_g_open(sp: &FiniteSpace, a: SubsetMask) -> bool {
    is_scstar_g_closed(sp, sp.complement(a))
}

/// All sixteen flags straight from the definitions.
pub fn classify(sp: &FiniteSpace, a: SubsetMask) -> SubsetClassification {
    SubsetClassification {
        open: sp.is_open(a),
        closed: sp.is_open(sp.complement(a)),
        regular_open: is_regular_open(sp, a),
        regular_closed: is_regular_closed(sp, a),
        semi_open: is_semi_open(sp, a),
        semi_closed: is_semi_closed(sp, a),
        cstar_open: is_cstar_open(sp, a),
        cstar_closed: is_cstar_closed(sp, a),
        scstar_open: is_scstar_open(sp, a),
        scstar_closed: is_scstar_closed(sp, a),
        g_open: is_g_open(sp, a),
        g_closed: is_g_closed(sp, a),
        gscstar_open: is_gscstar_open(sp, a),
        gscstar_closed: is_gscstar_closed(sp, a),
        scstar_g_open: is_scstar_g_open(sp, a),
        scstar_g_closed: is_scstar_g_closed(sp, a),
    }
}

/// Generalized closure straight from the definitions.
pub fn gen_closure(sp: &FiniteSpace, kind: ClosureKind, a: SubsetMask) -> ClosureOutcome {
    let (value, kind_closed) = match kind {
        ClosureKind::Semi => {
            let v = semi_closure(sp, a);
            (v, is_semi_closed(sp, v))
        }
        ClosureKind::Cstar => {
            let v = cstar_closure(sp, a);
            (v, is_cstar_closed(sp, v))
        }
        ClosureKind::Scstar => {
            let v = scstar_closure(sp, a);
            (v, is_scstar_closed(sp, v))
        }
    };
    ClosureOutcome { value, kind_closed }
}

/// Whether a family of masks satisfies the topology axioms on `n` points.
pub fn is_topology_family(n: usize, family: &[SubsetMask]) -> bool {
    let full = SubsetMask::full(n);
    let member = |m: SubsetMask| family.contains(&m);
    if !member(SubsetMask::EMPTY) || !member(full) {
        return false;
    }
    for a in family {
        for b in family {
            if !member(a.union(*b)) || !member(a.intersect(*b)) {
                return false;
            }
        }
    }
    true
}

/// Every topology on `n` labelled points by raw family filtering.
///
/// The candidate count is `2^(2^n - 2)`, so this is only usable for `n <= 4`;
/// it exists to cross-check the structured enumerator.
pub fn filter_topologies(n: usize) -> Vec<Vec<SubsetMask>> {
    assert!(
        (1..=4).contains(&n),
        "family filter only supports 1..=4 points"
    );
    let full = SubsetMask::full(n);
    let middle: Vec<SubsetMask> = (1..full.bits()).map(SubsetMask::from_bits).collect();
    let mut out = Vec::new();
    for pick in 0..(1u64 << middle.len()) {
        let mut fam = vec![SubsetMask::EMPTY];
        for (i, m) in middle.iter().enumerate() {
            if pick >> i & 1 == 1 {
                fam.push(*m);
            }
        }
        fam.push(full);
        if is_topology_family(n, &fam) {
            out.push(fam);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators;
    use crate::testdata;

    #[test]
    fn naive_and_fast_agree_on_the_samples() {
        for sp in [
            testdata::ex15(),
            testdata::ex16(),
            testdata::ex23(),
            testdata::wedge3(),
        ] {
            for bits in 0..(1u32 << sp.size()) {
                let a = SubsetMask::from_bits(bits);
                assert_eq!(interior(&sp, a), sp.interior(a));
                assert_eq!(closure(&sp, a), sp.closure(a));
                assert_eq!(
                    classify(&sp, a),
                    operators::SubsetClassification::classify(&sp, a),
                    "classification mismatch on {} in {sp:?}",
                    sp.ground().format_subset(a)
                );
                for kind in ClosureKind::ALL {
                    assert_eq!(
                        gen_closure(&sp, kind, a),
                        operators::gen_closure(&sp, kind, a)
                    );
                }
                assert_eq!(open_kernel(&sp, a), operators::open_kernel(&sp, a));
                assert_eq!(cstar_kernel(&sp, a), operators::cstar_kernel(&sp, a));
                assert_eq!(scstar_kernel(&sp, a), operators::scstar_kernel(&sp, a));
            }
        }
    }

    #[test]
    fn filter_counts_match_known_values() {
        assert_eq!(filter_topologies(1).len(), 1);
        assert_eq!(filter_topologies(2).len(), 4);
        assert_eq!(filter_topologies(3).len(), 29);
    }

    #[test]
    fn family_check_rejects_missing_union() {
        let fam = vec![
            SubsetMask::EMPTY,
            SubsetMask::from_bits(0b001),
            SubsetMask::from_bits(0b010),
            SubsetMask::full(3),
        ];
        assert!(!is_topology_family(3, &fam));
    }
}
