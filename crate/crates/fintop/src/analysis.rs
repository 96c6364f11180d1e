//! Per-space derived tables, computed once and cached on the space.
//!
//! Everything indexed by subset works on the raw mask bits: a table is a
//! `Vec<u32>` of length `2^n` and a family of subsets is a bitset over the
//! same index range. Closures and kernels of every subset at once come from
//! a superset-AND sweep: seed `t[m]` with `m` when `m` belongs to the family
//! and with the full set otherwise, then for each bit AND every entry with
//! the entry one superset up. After the sweep `t[m]` is the intersection of
//! all family members containing `m`, in `O(2^n * n)` time.

use crate::space::{FiniteSpace, SubsetMask};

/// A family of subsets stored as one bit per mask.
#[derive(Clone)]
pub(crate) struct MaskFamily {
    words: Vec<u64>,
}

impl MaskFamily {
    fn from_pred(size: usize, pred: impl Fn(u32) -> bool) -> Self {
        let mut words = vec![0u64; size.div_ceil(64)];
        for m in 0..size {
            if pred(m as u32) {
                words[m / 64] |= 1 << (m % 64);
            }
        }
        MaskFamily { words }
    }

    pub(crate) fn contains(&self, m: SubsetMask) -> bool {
        let b = m.bits() as usize;
        self.words[b / 64] >> (b % 64) & 1 == 1
    }

    #[cfg(test)]
    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Members in ascending mask order.
    #[cfg(test)]
    pub(crate) fn members(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        (0..self.words.len() * 64)
            .filter(move |m| self.words[m / 64] >> (m % 64) & 1 == 1)
            .map(|m| SubsetMask::from_bits(m as u32))
    }
}

fn superset_and(n: usize, in_family: &MaskFamily) -> Vec<u32> {
    let size = 1usize << n;
    let full = SubsetMask::full(n).bits();
    let mut t: Vec<u32> = (0..size)
        .map(|m| {
            if in_family.contains(SubsetMask::from_bits(m as u32)) {
                m as u32
            } else {
                full
            }
        })
        .collect();
    for b in 0..n {
        let bit = 1usize << b;
        for m in 0..size {
            if m & bit == 0 {
                t[m] &= t[m | bit];
            }
        }
    }
    t
}

/// All derived tables for one space.
pub(crate) struct Analysis {
    pub(crate) int_t: Vec<u32>,
    pub(crate) cl_t: Vec<u32>,
    pub(crate) semi_open: MaskFamily,
    pub(crate) semi_closed: MaskFamily,
    pub(crate) cstar_open: MaskFamily,
    pub(crate) cstar_closed: MaskFamily,
    pub(crate) regular_open: MaskFamily,
    pub(crate) regular_closed: MaskFamily,
    pub(crate) scstar_open: MaskFamily,
    pub(crate) scstar_closed: MaskFamily,
    pub(crate) g_open: MaskFamily,
    pub(crate) g_closed: MaskFamily,
    pub(crate) gsc_open: MaskFamily,
    pub(crate) gsc_closed: MaskFamily,
    pub(crate) scg_open: MaskFamily,
    pub(crate) scg_closed: MaskFamily,
    /// Intersection of semi-closed supersets.
    pub(crate) scl_t: Vec<u32>,
    /// Intersection of c*-closed supersets.
    pub(crate) cstar_cl_t: Vec<u32>,
    /// Intersection of the starred-closed supersets.
    pub(crate) sccl_t: Vec<u32>,
    /// Intersection of open supersets.
    pub(crate) kernel_t: Vec<u32>,
    /// Intersection of c*-open supersets.
    pub(crate) cstar_ker_t: Vec<u32>,
    /// Intersection of starred-open supersets.
    pub(crate) sc_ker_t: Vec<u32>,
}

impl Analysis {
    pub(crate) fn compute(sp: &FiniteSpace) -> Analysis {
        let n = sp.size();
        let size = 1usize << n;
        let full = SubsetMask::full(n).bits();

        let int_t: Vec<u32> = (0..size)
            .map(|m| sp.interior(SubsetMask::from_bits(m as u32)).bits())
            .collect();
        let cl_t: Vec<u32> = (0..size)
            .map(|m| full ^ int_t[(full as usize) ^ m])
            .collect();

        let semi_open = MaskFamily::from_pred(size, |m| m & !cl_t[int_t[m as usize] as usize] == 0);
        let semi_closed =
            MaskFamily::from_pred(size, |m| int_t[cl_t[m as usize] as usize] & !m == 0);
        let cstar_open = MaskFamily::from_pred(size, |m| {
            let sm = SubsetMask::from_bits(m);
            semi_open.contains(sm) && semi_closed.contains(sm)
        });
        let cstar_closed = MaskFamily::from_pred(size, |m| {
            cstar_open.contains(SubsetMask::from_bits(full ^ m))
        });
        let regular_open = MaskFamily::from_pred(size, |m| m == int_t[cl_t[m as usize] as usize]);
        let regular_closed = MaskFamily::from_pred(size, |m| {
            regular_open.contains(SubsetMask::from_bits(full ^ m))
        });

        let scl_t = superset_and(n, &semi_closed);
        let cstar_cl_t = superset_and(n, &cstar_closed);
        let cstar_ker_t = superset_and(n, &cstar_open);

        let scstar_closed =
            MaskFamily::from_pred(size, |m| scl_t[m as usize] & !cstar_ker_t[m as usize] == 0);
        let scstar_open = MaskFamily::from_pred(size, |m| {
            scstar_closed.contains(SubsetMask::from_bits(full ^ m))
        });
        let sccl_t = superset_and(n, &scstar_closed);
        let sc_ker_t = superset_and(n, &scstar_open);

        let opens = MaskFamily::from_pred(size, |m| sp.is_open(SubsetMask::from_bits(m)));
        let kernel_t = superset_and(n, &opens);

        let g_closed =
            MaskFamily::from_pred(size, |m| cl_t[m as usize] & !kernel_t[m as usize] == 0);
        let g_open =
            MaskFamily::from_pred(size, |m| g_closed.contains(SubsetMask::from_bits(full ^ m)));
        let gsc_closed =
            MaskFamily::from_pred(size, |m| sccl_t[m as usize] & !kernel_t[m as usize] == 0);
        let gsc_open = MaskFamily::from_pred(size, |m| {
            gsc_closed.contains(SubsetMask::from_bits(full ^ m))
        });
        let scg_closed =
            MaskFamily::from_pred(size, |m| sccl_t[m as usize] & !sc_ker_t[m as usize] == 0);
        let scg_open = MaskFamily::from_pred(size, |m| {
            scg_closed.contains(SubsetMask::from_bits(full ^ m))
        });

        Analysis {
            int_t,
            cl_t,
            semi_open,
            semi_closed,
            cstar_open,
            cstar_closed,
            regular_open,
            regular_closed,
            scstar_open,
            scstar_closed,
            g_open,
            g_closed,
            gsc_open,
            gsc_closed,
            scg_open,
            scg_closed,
            scl_t,
            cstar_cl_t,
            sccl_t,
            kernel_t,
            cstar_ker_t,
            sc_ker_t,
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::space::SubsetMask;
    use crate::testdata;

    fn fam(sp: &crate::space::FiniteSpace, names: &[&str]) -> Vec<SubsetMask> {
        names
            .iter()
            .map(|s| sp.ground().parse_subset(s).unwrap())
            .collect()
    }

    #[test]
    fn g_closed_family_on_the_non_normal_sample() {
        let sp = testdata::ex15();
        let a = sp.analysis();
        let expect = fam(&sp, &["", "q", "s", "q,s", "q,r,s", "q,s,t", "*"]);
        let got: Vec<SubsetMask> = a.g_closed.members().collect();
        let mut sorted = expect;
        sorted.sort();
        assert_eq!(got, sorted);
    }

    #[test]
    fn g_closed_family_on_the_normal_sample() {
        let sp = testdata::ex16();
        let a = sp.analysis();
        let expect = fam(
            &sp,
            &["", "t", "q,t", "r,t", "q,r,t", "s,t", "q,s,t", "r,s,t", "*"],
        );
        let got: Vec<SubsetMask> = a.g_closed.members().collect();
        let mut sorted = expect;
        sorted.sort();
        assert_eq!(got, sorted);
    }

    #[test]
    fn starred_families_cover_every_subset_of_the_samples() {
        for sp in [testdata::ex15(), testdata::ex16(), testdata::ex23()] {
            let a = sp.analysis();
            assert_eq!(a.scstar_closed.count(), 16);
            assert_eq!(a.scstar_open.count(), 16);
            assert_eq!(a.gsc_closed.count(), 16);
            assert_eq!(a.scg_closed.count(), 16);
        }
    }

    #[test]
    fn cstar_families_match_the_samples() {
        let ex15 = testdata::ex15();
        let got: Vec<SubsetMask> = ex15.analysis().cstar_open.members().collect();
        assert_eq!(got, fam(&ex15, &["", "*"]));

        let ex16 = testdata::ex16();
        let mut expect = fam(&ex16, &["", "r", "q,s", "r,t", "q,s,t", "*"]);
        expect.sort();
        let got: Vec<SubsetMask> = ex16.analysis().cstar_open.members().collect();
        assert_eq!(got, expect);

        let ex23 = testdata::ex23();
        let mut expect = fam(&ex23, &["", "q", "r", "q,r", "s,t", "q,s,t", "r,s,t", "*"]);
        expect.sort();
        let got: Vec<SubsetMask> = ex23.analysis().cstar_open.members().collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn cstar_open_and_cstar_closed_families_coincide() {
        for sp in [
            testdata::ex15(),
            testdata::ex16(),
            testdata::ex23(),
            testdata::wedge3(),
            testdata::sierpinski(),
        ] {
            let a = sp.analysis();
            let opens: Vec<SubsetMask> = a.cstar_open.members().collect();
            let closeds: Vec<SubsetMask> = a.cstar_closed.members().collect();
            assert_eq!(opens, closeds);
        }
    }

    #[test]
    fn self_opens_equal_closeds_makes_g_closed_everything() {
        let sp = testdata::ex23();
        assert_eq!(sp.analysis().g_closed.count(), 16);
    }

    #[test]
    fn kernel_is_smallest_open_superset_intersection() {
        let sp = testdata::ex15();
        let g = sp.ground();
        let a = sp.analysis();
        let q = g.parse_subset("q").unwrap();
        // open supersets of {q}: {q,r,t}, X
        assert_eq!(
            a.kernel_t[q.bits() as usize],
            g.parse_subset("q,r,t").unwrap().bits()
        );
        assert_eq!(a.kernel_t[0], 0);
    }
}
