//! Independent validation of constructed diagrams: double-branched-cover
//! homology via Smith normal form of the Fox coloring matrix, coloring
//! counts over small moduli, alternation, and linking numbers.

use beadrack::diagram::LinkDiagram;
use beadrack::linalg::{smith_normal_form, ZmMatrix};

/// Fox coloring relation matrix over the semi-arcs: per crossing the rows
/// `e_under_in + e_under_out − 2·e_over_in` and `e_over_in − e_over_out`.
pub fn coloring_matrix(d: &LinkDiagram) -> Vec<Vec<i128>> {
    assert!(d.kinks().is_empty(), "coloring matrix expects a kink-free diagram");
    let n = d.n_arcs();
    let mut rows = Vec::with_capacity(2 * d.crossing_count());
    for c in d.crossings() {
        let mut r = vec![0i128; n];
        r[c.under_in - 1] += 1;
        r[c.under_out - 1] += 1;
        r[c.over_in - 1] -= 2;
        rows.push(r);
        let mut r = vec![0i128; n];
        r[c.over_in - 1] += 1;
        r[c.over_out - 1] -= 1;
        rows.push(r);
    }
    rows
}

/// `(torsion, nullity)` of the coloring module: the product of the nonzero
/// invariant factors and the count of zero ones. For a knot the torsion is
/// the determinant and the nullity is 1.
pub fn determinant_data(d: &LinkDiagram) -> (i128, usize) {
    let rows = coloring_matrix(d);
    if rows.is_empty() {
        return (1, d.n_arcs());
    }
    let snf = smith_normal_form(&rows);
    let (torsion, zero_diag) = snf.torsion_and_nullity();
    let nullity = zero_diag + d.n_arcs().saturating_sub(snf.diag.len());
    (torsion, nullity)
}

/// Number of Fox colorings mod `p` (labelings by the dihedral quandle).
pub fn colorings_mod(d: &LinkDiagram, p: u64) -> u128 {
    let rows: Vec<Vec<u64>> = coloring_matrix(d)
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.rem_euclid(p as i128) as u64).collect())
        .collect();
    if rows.is_empty() {
        return (p as u128).pow(d.n_arcs() as u32);
    }
    ZmMatrix::from_rows(p, &rows).unwrap().count_kernel()
}

/// True when every component alternates over/under passages.
pub fn is_alternating(d: &LinkDiagram) -> bool {
    use std::collections::BTreeMap;
    let mut over_of_in: BTreeMap<usize, bool> = BTreeMap::new();
    for c in d.crossings() {
        over_of_in.insert(c.under_in, false);
        over_of_in.insert(c.over_in, true);
    }
    for cycle in d.components() {
        let flags: Vec<bool> = cycle.iter().filter_map(|a| over_of_in.get(a).copied()).collect();
        if flags.len() != cycle.len() || flags.len() % 2 != 0 {
            return false;
        }
        for i in 0..flags.len() {
            if flags[i] == flags[(i + 1) % flags.len()] {
                return false;
            }
        }
    }
    true
}

/// Pairwise linking numbers (half the signed inter-component crossing count).
pub fn linking_numbers(d: &LinkDiagram) -> Vec<Vec<i64>> {
    let c = d.component_count();
    let mut sums = vec![vec![0i64; c]; c];
    for cr in d.crossings() {
        let a = d.component_of(cr.under_in);
        let b = d.component_of(cr.over_in);
        if a != b {
            sums[a.min(b)][a.max(b)] += cr.sign as i64;
        }
    }
    for i in 0..c {
        for j in i + 1..c {
            assert_eq!(sums[i][j] % 2, 0, "odd inter-component crossing sum");
            sums[i][j] /= 2;
            sums[j][i] = sums[i][j];
        }
    }
    sums
}

/// Sorted multiset of absolute pairwise linking numbers.
pub fn linking_profile(d: &LinkDiagram) -> Vec<i64> {
    let lk = linking_numbers(d);
    let c = d.component_count();
    let mut out = Vec::new();
    for i in 0..c {
        for j in i + 1..c {
            out.push(lk[i][j].abs());
        }
    }
    out.sort_unstable();
    out
}

/// Reverses the orientation of one component: its arcs' in/out roles swap,
/// and crossings between it and other components flip sign.
pub fn reverse_component(d: &LinkDiagram, ci: usize) -> LinkDiagram {
    let in_comp = |arc: usize| d.component_of(arc) == ci;
    let crossings: Vec<_> = d
        .crossings()
        .iter()
        .map(|c| {
            let mut c = c.clone();
            let u = in_comp(c.under_in);
            let o = in_comp(c.over_in);
            if u {
                std::mem::swap(&mut c.under_in, &mut c.under_out);
            }
            if o {
                std::mem::swap(&mut c.over_in, &mut c.over_out);
            }
            if u != o {
                c.sign = -c.sign;
            }
            c
        })
        .collect();
    let kinks: Vec<_> = d
        .kinks()
        .iter()
        .map(|k| {
            let mut k = k.clone();
            if k.component == ci {
                std::mem::swap(&mut k.arc_in, &mut k.arc_out);
            }
            k
        })
        .collect();
    LinkDiagram::from_parts(crossings, kinks, d.n_arcs(), d.is_virtual())
        .expect("component reversal preserves validity")
}
