//! Seeded random and exhaustive generation of dynamical cocycles and
//! X-module structures over a fixed rack, filtered through the verifiers,
//! plus distinguishing-power reports over a link list.
//!
//! Random candidates are built column-permutation-wise, so the bijectivity
//! axiom holds by construction and only the mixed self-distributivity axiom
//! and the reduced condition are left to filtering. The generator is ChaCha8
//! seeded from the config; a fixed seed yields a bit-identical candidate
//! stream.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bead::{DynamicalCocycle, XModuleStructure};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::invariants::dynamical_invariant;
use crate::rack::RackTable;

/// Identity of the pseudo-random generator, recorded in output metadata.
pub const GENERATOR: &str = "chacha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Random,
    Exhaustive,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub seed: u64,
    pub mode: SearchMode,
    /// Random mode: candidates drawn. Exhaustive mode: cap on results.
    pub max_candidates: usize,
    pub require_n_reduced: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { seed: 0, mode: SearchMode::Random, max_candidates: 1000, require_n_reduced: true }
    }
}

fn check_config(cfg: &SearchConfig) -> Result<()> {
    if cfg.max_candidates == 0 {
        return Err(Error::Precondition("max_candidates must be positive".into()));
    }
    Ok(())
}

/// All permutations of `1..=k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    let mut used = vec![false; k + 1];
    fn rec(k: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in 1..=k {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(k, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(k, &mut current, &mut used, &mut out);
    out
}

/// Builds the block rows of a cocycle whose `(x,y,b)` column is the given
/// permutation (indexed as `columns[((x-1)n + (y-1))k + (b-1)]`).
fn cocycle_from_columns(n: usize, k: usize, columns: &[Vec<usize>]) -> DynamicalCocycle {
    let rows: Vec<Vec<usize>> = (0..n * k)
        .map(|ri| {
            let (x, a) = (ri / k, ri % k);
            (0..n * k)
                .map(|ci| {
                    let (y, b) = (ci / k, ci % k);
                    columns[(x * n + y) * k + b][a]
                })
                .collect()
        })
        .collect();
    DynamicalCocycle::from_block_rows(n, k, &rows).expect("columns are permutations")
}

/// Searches for verified dynamical cocycles on a `k`-element bead set.
pub fn search_cocycles(
    rack: &RackTable,
    k: usize,
    cfg: &SearchConfig,
) -> Result<Vec<DynamicalCocycle>> {
    check_config(cfg)?;
    if k == 0 {
        return Err(Error::Precondition("bead count must be positive".into()));
    }
    let n = rack.n();
    let keep = |alpha: &DynamicalCocycle| -> Result<bool> {
        Ok(alpha.verify(rack)?.is_valid()
            && (!cfg.require_n_reduced || alpha.verify_n_reduced(rack)?.is_valid()))
    };
    let mut found = Vec::new();
    match cfg.mode {
        SearchMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut base: Vec<usize> = (1..=k).collect();
            for _ in 0..cfg.max_candidates {
                let columns: Vec<Vec<usize>> = (0..n * n * k)
                    .map(|_| {
                        base.shuffle(&mut rng);
                        base.clone()
                    })
                    .collect();
                let alpha = cocycle_from_columns(n, k, &columns);
                if keep(&alpha)? {
                    found.push(alpha);
                }
            }
        }
        SearchMode::Exhaustive => {
            let perms = permutations(k);
            let n_cols = n * n * k;
            // depth-first over columns in (x, y, b) order, pruning on the
            // self-distributivity instances whose blocks are all decided
            let mut choice = vec![0usize; n_cols];
            let mut depth = 0usize;
            'outer: loop {
                if depth == n_cols {
                    let columns: Vec<Vec<usize>> =
                        choice.iter().map(|&ci| perms[ci].clone()).collect();
                    let alpha = cocycle_from_columns(n, k, &columns);
                    if keep(&alpha)? {
                        found.push(alpha);
                        if found.len() >= cfg.max_candidates {
                            break 'outer;
                        }
                    }
                    // backtrack
                    loop {
                        if depth == 0 {
                            break 'outer;
                        }
                        depth -= 1;
                        if choice[depth] + 1 < perms.len() {
                            choice[depth] += 1;
                            depth += 1;
                            continue 'outer;
                        }
                        choice[depth] = 0;
                    }
                }
                // prune when the block that just completed violates axiom (ii)
                if depth % k == 0 && depth > 0 && !prefix_consistent(rack, k, &choice, depth, &perms)
                {
                    loop {
                        if depth == 0 {
                            break 'outer;
                        }
                        depth -= 1;
                        if choice[depth] + 1 < perms.len() {
                            choice[depth] += 1;
                            depth += 1;
                            break;
                        }
                        choice[depth] = 0;
                    }
                    continue 'outer;
                }
                depth += 1;
                if depth <= n_cols {
                    continue;
                }
            }
        }
    }
    Ok(found)
}

/// Checks every mixed self-distributivity instance whose five blocks are all
/// within the first `decided / k` blocks.
fn prefix_consistent(
    rack: &RackTable,
    k: usize,
    choice: &[usize],
    decided: usize,
    perms: &[Vec<usize>],
) -> bool {
    let n = rack.n();
    let blocks_decided = decided / k;
    let have = |x: usize, y: usize| (x - 1) * n + (y - 1) < blocks_decided;
    let op = |x: usize, y: usize, a: usize, b: usize| -> usize {
        perms[choice[((x - 1) * n + (y - 1)) * k + (b - 1)]][a - 1]
    };
    for x in 1..=n {
        for y in 1..=n {
            for z in 1..=n {
                let (xy, xz, yz) = (rack.op(x, y), rack.op(x, z), rack.op(y, z));
                if !(have(x, y) && have(xy, z) && have(x, z) && have(xz, yz) && have(y, z)) {
                    continue;
                }
                for a in 1..=k {
                    for b in 1..=k {
                        for c in 1..=k {
                            let lhs = op(xy, z, op(x, y, a, b), c);
                            let rhs = op(xz, yz, op(x, z, a, c), op(y, z, b, c));
                            if lhs != rhs {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Searches for verified X-module structures over `Z_m`.
pub fn search_modules(
    rack: &RackTable,
    m: u64,
    cfg: &SearchConfig,
) -> Result<Vec<XModuleStructure>> {
    check_config(cfg)?;
    if m == 0 {
        return Err(Error::Precondition("modulus must be positive".into()));
    }
    let n = rack.n();
    let mut found = Vec::new();
    match cfg.mode {
        SearchMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let units: Vec<u64> =
                (1..=m).filter(|&t| num_integer::gcd(t, m) == 1).map(|t| t % m).collect();
            for _ in 0..cfg.max_candidates {
                let t: Vec<u64> = (0..n * n).map(|_| units[rng.gen_range(0..units.len())]).collect();
                let s: Vec<u64> = (0..n * n).map(|_| rng.gen_range(0..m)).collect();
                let module = XModuleStructure::new(n, m, t, s)?;
                if module.verify(rack)?.is_valid() {
                    found.push(module);
                }
            }
        }
        SearchMode::Exhaustive => {
            // odometer over all entry choices (t's then s's), ascending
            let slots = 2 * n * n;
            let mut v = vec![0u64; slots];
            loop {
                let module =
                    XModuleStructure::new(n, m, v[..n * n].to_vec(), v[n * n..].to_vec())?;
                if module.verify(rack)?.is_valid() {
                    found.push(module);
                    if found.len() >= cfg.max_candidates {
                        break;
                    }
                }
                let mut i = slots;
                loop {
                    if i == 0 {
                        return Ok(found);
                    }
                    i -= 1;
                    v[i] += 1;
                    if v[i] < m {
                        break;
                    }
                    v[i] = 0;
                }
            }
        }
    }
    Ok(found)
}

/// One row of the distinguishing report: how a candidate cocycle partitions
/// the link list by invariant value.
#[derive(Debug, Clone)]
pub struct DistinguishingRow {
    pub candidate_index: usize,
    pub separated_pairs: usize,
    /// Link ids grouped by equal invariant value, groups sorted by value.
    pub groups: Vec<(String, Vec<String>)>,
    pub values: Vec<(String, String)>,
}

/// Evaluates each cocycle across the link list, reporting the induced
/// partition and the number of link pairs separated. Rows are sorted by
/// separation count descending, ties by candidate index.
pub fn distinguishing_report(
    rack: &RackTable,
    cocycles: &[DynamicalCocycle],
    links: &[(String, LinkDiagram)],
) -> Result<Vec<DistinguishingRow>> {
    let mut rows = Vec::new();
    for (idx, alpha) in cocycles.iter().enumerate() {
        let mut values: Vec<(String, String)> = Vec::with_capacity(links.len());
        for (id, diagram) in links {
            let poly = dynamical_invariant(diagram, rack, alpha)?;
            values.push((id.clone(), poly.to_string()));
        }
        let mut by_value: std::collections::BTreeMap<String, Vec<String>> = Default::default();
        for (id, v) in &values {
            by_value.entry(v.clone()).or_default().push(id.clone());
        }
        let total_pairs = links.len() * links.len().saturating_sub(1) / 2;
        let same_pairs: usize =
            by_value.values().map(|g| g.len() * (g.len() - 1) / 2).sum();
        rows.push(DistinguishingRow {
            candidate_index: idx,
            separated_pairs: total_pairs - same_pairs,
            groups: by_value.into_iter().collect(),
            values,
        });
    }
    rows.sort_by(|a, b| {
        b.separated_pairs.cmp(&a.separated_pairs).then(a.candidate_index.cmp(&b.candidate_index))
    });
    Ok(rows)
}
