//! Finite racks as operation tables.
//!
//! A rack structure on `{x_1, ..., x_n}` is stored as an n×n table whose
//! (i,j) entry is k when `x_k = x_i ▷ x_j`. Elements are 1-based indices
//! throughout, matching the usual matrix convention; constructors over `Z_m`
//! represent the residue 0 by index m.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite rack presented by its operation table.
///
/// Construction validates *structure* only (squareness, entries in `1..=n`).
/// The rack axioms are checked separately by [`RackTable::verify`], so that
/// invalid tables can still be inspected and reported on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RackTable {
    n: usize,
    /// Row-major, entries 1-based.
    table: Vec<usize>,
}

/// The diagonal permutation `π(x) = x ▷ x` together with its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KinkPermutation {
    /// `perm[i-1]` is `π(x_i)`, 1-based.
    pub perm: Vec<usize>,
    /// Least `N ≥ 1` with `π^N = id`; equals the lcm of the cycle lengths.
    pub order: usize,
}

impl KinkPermutation {
    pub fn apply(&self, x: usize) -> usize {
        self.perm[x - 1]
    }

    pub fn apply_inv(&self, x: usize) -> usize {
        // perm is a permutation whenever the rack is valid
        self.perm
            .iter()
            .position(|&y| y == x)
            .map(|p| p + 1)
            .expect("kink map is not a permutation")
    }

    /// `π^k(x)` for `k ≥ 0`.
    pub fn power(&self, x: usize, k: usize) -> usize {
        let mut y = x;
        for _ in 0..k % self.order.max(1) {
            y = self.apply(y);
        }
        y
    }
}

/// One violated rack axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RackViolation {
    /// Column `col` of the table is not a permutation of `1..=n`.
    ColumnNotPermutation { col: usize },
    /// `(x ▷ y) ▷ z ≠ (x ▷ z) ▷ (y ▷ z)` at the given triple.
    SelfDistributivity { x: usize, y: usize, z: usize },
}

impl fmt::Display for RackViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RackViolation::ColumnNotPermutation { col } => {
                write!(f, "column {col} is not a permutation")
            }
            RackViolation::SelfDistributivity { x, y, z } => {
                write!(f, "self-distributivity fails at (x,y,z)=({x},{y},{z})")
            }
        }
    }
}

/// Result of checking the rack axioms; lists every violated instance.
#[derive(Debug, Clone, Default)]
pub struct RackReport {
    pub violations: Vec<RackViolation>,
}

impl RackReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for RackReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid rack")
        } else {
            writeln!(f, "invalid rack ({} violations):", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
            Ok(())
        }
    }
}

impl RackTable {
    /// Builds a table from rows, validating shape and entry range.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Structure("empty rack table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Structure(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    n
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                if e < 1 || e > n {
                    return Err(Error::Structure(format!(
                        "entry ({},{}) = {} out of range 1..={}",
                        i + 1,
                        j + 1,
                        e,
                        n
                    )));
                }
                table.push(e);
            }
        }
        Ok(RackTable { n, table })
    }

    /// Parses the rack file format: first non-comment line `n`, then `n`
    /// lines of `n` integers. Lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = data_lines(text);
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty rack file".into()))?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad cardinality line: {header:?}")))?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {n} table rows")))?;
            rows.push(parse_usize_row(line)?);
        }
        Self::from_rows(&rows)
    }

    pub fn to_file_string(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.op(i, j).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.op(i, j)).collect())
            .collect()
    }

    /// `x_i ▷ x_j`.
    #[inline]
    pub fn op(&self, i: usize, j: usize) -> usize {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "index out of range");
        self.table[(i - 1) * self.n + (j - 1)]
    }

    /// `x_i ▷⁻¹ x_j`: the unique `a` with `a ▷ x_j = x_i`.
    ///
    /// Requires column `j` to be a permutation (rack axiom (i)).
    pub fn inv_op(&self, i: usize, j: usize) -> usize {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "index out of range");
        for a in 1..=self.n {
            if self.op(a, j) == i {
                return a;
            }
        }
        panic!("column {j} is not invertible; verify the rack first");
    }

    /// Checks both rack axioms, reporting every violated instance.
    pub fn verify(&self) -> RackReport {
        let mut violations = Vec::new();
        for j in 1..=self.n {
            let mut seen = vec![false; self.n];
            for i in 1..=self.n {
                seen[self.op(i, j) - 1] = true;
            }
            if seen.iter().any(|&b| !b) {
                violations.push(RackViolation::ColumnNotPermutation { col: j });
            }
        }
        for x in 1..=self.n {
            for y in 1..=self.n {
                for z in 1..=self.n {
                    if self.op(self.op(x, y), z) != self.op(self.op(x, z), self.op(y, z)) {
                        violations.push(RackViolation::SelfDistributivity { x, y, z });
                    }
                }
            }
        }
        RackReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_valid()
    }

    /// The diagonal permutation `π(x) = x ▷ x` and its order (the rack rank).
    pub fn kink_map(&self) -> KinkPermutation {
        let perm: Vec<usize> = (1..=self.n).map(|i| self.op(i, i)).collect();
        KinkPermutation {
            order: permutation_order(&perm),
            perm,
        }
    }

    /// Rack rank `N`: the order of the kink map.
    pub fn rank(&self) -> usize {
        self.kink_map().order
    }

    /// `x ▷ x = x` for all `x`.
    pub fn is_quandle(&self) -> bool {
        (1..=self.n).all(|i| self.op(i, i) == i)
    }

    /// Smallest superset of `seed` closed under `▷` and `▷⁻¹`, sorted.
    pub fn subrack_closure(&self, seed: &[usize]) -> Result<Vec<usize>> {
        if seed.is_empty() {
            return Err(Error::Precondition("subrack closure of empty seed".into()));
        }
        for &s in seed {
            if s < 1 || s > self.n {
                return Err(Error::Structure(format!("seed element {s} out of range")));
            }
        }
        let mut set: BTreeSet<usize> = seed.iter().copied().collect();
        loop {
            let mut next = set.clone();
            for &a in &set {
                for &b in &set {
                    next.insert(self.op(a, b));
                    next.insert(self.inv_op(a, b));
                }
            }
            if next.len() == set.len() {
                return Ok(set.into_iter().collect());
            }
            set = next;
        }
    }

    /// Restricts the table to a `▷`-closed subset, relabeling elements by
    /// their rank within the subset.
    pub fn restrict(&self, subset: &[usize]) -> Result<RackTable> {
        let index_of = |v: usize| subset.iter().position(|&s| s == v);
        let rows: Vec<Vec<usize>> = subset
            .iter()
            .map(|&a| {
                subset
                    .iter()
                    .map(|&b| {
                        index_of(self.op(a, b))
                            .map(|p| p + 1)
                            .ok_or_else(|| Error::Precondition("subset not closed under ▷".into()))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        RackTable::from_rows(&rows)
    }
}

/// Order of a permutation given in one-line notation (1-based).
fn permutation_order(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut order: usize = 1;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] - 1;
            len += 1;
        }
        order = order.lcm(&len);
    }
    order
}

/// The (t,s)-rack on `Z_m`: `x ▷ y = t·x + s·y`.
///
/// Requires `t` invertible mod `m` and `s·s ≡ (1−t)·s (mod m)`. Elements are
/// indexed `1..=m` with index `m` representing the residue 0.
pub fn ts_rack(m: u64, t: u64, s: u64) -> Result<RackTable> {
    if m == 0 {
        return Err(Error::Precondition("modulus must be positive".into()));
    }
    if t.gcd(&m) != 1 {
        return Err(Error::Precondition(format!("t = {t} is not a unit mod {m}")));
    }
    let sm = s % m;
    let tm = t % m;
    // s^2 ≡ (1 - t) s  (mod m), computed as s^2 + t s ≡ s
    if (sm * sm + tm * sm) % m != sm {
        return Err(Error::Precondition(format!(
            "s·s ≢ (1−t)·s mod {m} (s = {s}, t = {t})"
        )));
    }
    let n = m as usize;
    let val = |idx: usize| -> u64 { (idx as u64) % m }; // index m ↦ 0
    let idx = |v: u64| -> usize {
        let r = (v % m) as usize;
        if r == 0 {
            n
        } else {
            r
        }
    };
    let rows: Vec<Vec<usize>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| idx(tm * val(i) + sm * val(j)))
                .collect()
        })
        .collect();
    RackTable::from_rows(&rows)
}

/// The dihedral quandle of order `m`: `x ▷ y = 2y − x (mod m)`.
pub fn dihedral_quandle(m: u64) -> RackTable {
    assert!(m >= 1);
    let n = m as usize;
    let val = |idx: usize| -> u64 { (idx as u64) % m };
    let idx = |v: u64| -> usize {
        let r = (v % m) as usize;
        if r == 0 {
            n
        } else {
            r
        }
    };
    let rows: Vec<Vec<usize>> = (1..=n)
        .map(|i| (1..=n).map(|j| idx(2 * val(j) + 2 * m - val(i))).collect())
        .collect();
    RackTable::from_rows(&rows).expect("dihedral table is structurally valid")
}

/// Iterator over non-comment, non-empty lines.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_usize_row(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {tok:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_element_rack() -> RackTable {
        RackTable::from_rows(&[vec![2, 2], vec![1, 1]]).unwrap()
    }

    #[test]
    fn two_element_rack_is_valid_non_quandle() {
        let r = two_element_rack();
        assert!(r.verify().is_valid());
        assert!(!r.is_quandle());
        let k = r.kink_map();
        assert_eq!(k.perm, vec![2, 1]);
        assert_eq!(k.order, 2);
    }

    #[test]
    fn trivial_one_element_quandle() {
        let r = RackTable::from_rows(&[vec![1]]).unwrap();
        assert!(r.verify().is_valid());
        assert!(r.is_quandle());
        assert_eq!(r.op(1, 1), 1);
        assert_eq!(r.kink_map().order, 1);
    }

    #[test]
    fn non_permutation_column_reported() {
        let r = RackTable::from_rows(&[vec![1, 1], vec![1, 2]]).unwrap();
        let report = r.verify();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .contains(&RackViolation::ColumnNotPermutation { col: 1 }));
    }

    #[test]
    fn structural_errors_are_distinct_from_axiom_failures() {
        assert!(RackTable::from_rows(&[vec![1, 2]]).is_err()); // non-square
        assert!(RackTable::from_rows(&[vec![1, 3], vec![2, 1]]).is_err()); // out of range
    }

    #[test]
    fn ts_rack_z4_example() {
        let r = ts_rack(4, 1, 2).unwrap();
        assert_eq!(
            r.rows(),
            vec![
                vec![3, 1, 3, 1],
                vec![4, 2, 4, 2],
                vec![1, 3, 1, 3],
                vec![2, 4, 2, 4],
            ]
        );
        assert!(r.verify().is_valid());
        let k = r.kink_map();
        // diagonal (3,2,1,4): π = (13), rack rank 2
        assert_eq!(k.perm, vec![3, 2, 1, 4]);
        assert_eq!(k.order, 2);
        // row 1 col 2 of the table
        assert_eq!(r.op(1, 2), 1);
    }

    #[test]
    fn ts_rack_rejects_bad_parameters() {
        assert!(ts_rack(4, 2, 2).is_err()); // t not a unit
        assert!(ts_rack(5, 1, 2).is_err()); // s^2 ≠ (1-t)s
        assert_eq!(ts_rack(1, 1, 0).unwrap().rows(), vec![vec![1]]);
    }

    #[test]
    fn inv_op_inverts_op_exhaustively() {
        // exhaustive round-trip over all pairs of the Z_4 (t,s)-rack
        let r = ts_rack(4, 1, 2).unwrap();
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(r.inv_op(r.op(i, j), j), i);
                assert_eq!(r.op(r.inv_op(i, j), j), i);
            }
        }
    }

    #[test]
    fn dihedral_three_matches_known_table() {
        let r = dihedral_quandle(3);
        assert_eq!(r.rows(), vec![vec![1, 3, 2], vec![3, 2, 1], vec![2, 1, 3]]);
        assert!(r.verify().is_valid());
        assert!(r.is_quandle());
        assert_eq!(r.kink_map().order, 1);
    }

    #[test]
    fn dihedral_agrees_with_formula_oracle() {
        // direct evaluation of 2j−i mod m as an independent oracle
        for m in [1u64, 2, 3, 5, 7] {
            let r = dihedral_quandle(m);
            assert!(r.verify().is_valid());
            for i in 1..=m as usize {
                for j in 1..=m as usize {
                    let expect = (2 * (j as u64 % m) + 2 * m - (i as u64 % m)) % m;
                    let got = (r.op(i, j) % m as usize) as u64 % m;
                    assert_eq!(got, expect, "m={m} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn ts_rack_alexander_case_is_dihedral() {
        // s = 1 − t with t = 2 over Z_3 gives the dihedral quandle
        assert_eq!(ts_rack(3, 2, 2).unwrap(), dihedral_quandle(3));
    }

    #[test]
    fn subrack_closure_examples() {
        let d3 = dihedral_quandle(3);
        assert_eq!(d3.subrack_closure(&[1]).unwrap(), vec![1]);
        assert_eq!(d3.subrack_closure(&[1, 2, 3]).unwrap(), vec![1, 2, 3]);
        let r = two_element_rack();
        assert_eq!(r.subrack_closure(&[1]).unwrap(), vec![1, 2]);
        assert!(r.subrack_closure(&[]).is_err());
    }

    #[test]
    fn subrack_closure_is_monotone_idempotent_and_valid() {
        let r = ts_rack(4, 1, 2).unwrap();
        for seed in [vec![1], vec![2], vec![1, 2], vec![3]] {
            let c = r.subrack_closure(&seed).unwrap();
            assert!(seed.iter().all(|s| c.contains(s)));
            assert_eq!(r.subrack_closure(&c).unwrap(), c);
            assert!(r.restrict(&c).unwrap().verify().is_valid());
        }
    }

    #[test]
    fn column_maps_are_automorphisms() {
        // f_z(x ▷ y) = f_z(x) ▷ f_z(y), exhaustively for small racks
        for r in [two_element_rack(), dihedral_quandle(5), ts_rack(4, 1, 2).unwrap()] {
            let n = r.n();
            for x in 1..=n {
                for y in 1..=n {
                    for z in 1..=n {
                        assert_eq!(r.op(r.op(x, y), z), r.op(r.op(x, z), r.op(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn quandle_has_rank_one() {
        for m in 1..=7u64 {
            let q = dihedral_quandle(m);
            assert!(q.is_quandle());
            assert_eq!(q.kink_map().order, 1);
        }
    }

    #[test]
    fn parse_round_trip() {
        let r = ts_rack(4, 1, 2).unwrap();
        let text = r.to_file_string();
        assert_eq!(RackTable::parse(&text).unwrap(), r);
        let commented = format!("# a rack\n{text}");
        assert_eq!(RackTable::parse(&commented).unwrap(), r);
        assert!(RackTable::parse("2\n1 2\n").is_err());
    }

    #[test]
    fn kink_order_equals_lcm_of_cycle_lengths() {
        let k = ts_rack(4, 1, 2).unwrap().kink_map();
        assert_eq!(k.power(1, 2), 1);
        assert_eq!(k.apply(1), 3);
        assert_eq!(k.apply_inv(3), 1);
    }
}
