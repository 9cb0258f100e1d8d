//! Oriented link diagrams as semi-arc incidence structures.
//!
//! A diagram is a set of semi-arcs (edges cut at every crossing passage and
//! at every kink node) together with crossings, kink nodes, and the partition
//! of semi-arcs into oriented component cycles. Virtual crossings are never
//! represented: arcs pass through them untouched, so a Gauss code with
//! virtual crossings simply omits them.
//!
//! Three input formats are supported:
//!
//! * native — explicit crossing/kink/component lines, the committed corpus
//!   format;
//! * pd — planar diagram 4-tuples `X(a,b,c,d)` with `a` the incoming
//!   under-edge and edges listed counterclockwise;
//! * gauss — signed Gauss codes `O1+U2-…`, one component per line,
//!   sufficient for virtual knots.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rack::{data_lines, parse_usize_row};

/// A classical crossing. The under-strand runs `under_in → under_out`, the
/// over-strand `over_in → over_out`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub sign: i8,
    pub under_in: usize,
    pub over_in: usize,
    pub under_out: usize,
    pub over_out: usize,
}

/// A positive curl inserted to realize a framing; passing through it sends a
/// label `x` to `π(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KinkNode {
    pub arc_in: usize,
    pub arc_out: usize,
    pub component: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramFormat {
    Native,
    Pd,
    Gauss,
}

/// An oriented link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    n_arcs: usize,
    crossings: Vec<Crossing>,
    kinks: Vec<KinkNode>,
    /// Ordered cycles of semi-arc ids, one per component.
    components: Vec<Vec<usize>>,
    virtual_diagram: bool,
}

/// One labeling rule attached to a node of the diagram.
///
/// The same records drive both rack labelings (`out = input ▷ over`,
/// `out = π(input)`) and bead labelings (`out = input ·_{x,y} over`,
/// `out = ρ_x(input)`), so negative crossings are already expressed in their
/// solved form: for a negative crossing the `input` arc is the under-out arc
/// and the `out` arc is the under-in arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelConstraint {
    /// `label(to) = label(from)` (over-strand passage).
    Equal { from: usize, to: usize },
    /// `label(out) = label(input) ▷ label(over)`.
    Product { input: usize, over: usize, out: usize },
    /// `label(out) = π(label(input))`.
    KinkStep { input: usize, out: usize },
}

impl LinkDiagram {
    pub fn parse(code: &str, format: DiagramFormat) -> Result<LinkDiagram> {
        let d = match format {
            DiagramFormat::Native => parse_native(code)?,
            DiagramFormat::Pd => parse_pd(code)?,
            DiagramFormat::Gauss => parse_gauss(code)?,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn n_arcs(&self) -> usize {
        self.n_arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn kinks(&self) -> &[KinkNode] {
        &self.kinks
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_virtual(&self) -> bool {
        self.virtual_diagram
    }

    /// Component index containing a semi-arc.
    pub fn component_of(&self, arc: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.contains(&arc))
            .expect("arc not in any component")
    }

    /// Checks the incidence invariants: every semi-arc is consumed exactly
    /// once and produced exactly once (bare circles excepted), and the stored
    /// component cycles follow actual node transitions.
    pub fn validate(&self) -> Result<()> {
        let n = self.n_arcs;
        let check = |arc: usize, what: &str| -> Result<()> {
            if arc < 1 || arc > n {
                return Err(Error::Structure(format!("{what} arc {arc} out of range 1..={n}")));
            }
            Ok(())
        };
        // continuation[in] = out per node, plus production counts
        let mut cont: BTreeMap<usize, usize> = BTreeMap::new();
        let mut produced = vec![0usize; n + 1];
        {
            let mut add = |from: usize, to: usize| -> Result<()> {
                if cont.insert(from, to).is_some() {
                    return Err(Error::Structure(format!("arc {from} used as input twice")));
                }
                produced[to] += 1;
                Ok(())
            };
            for c in &self.crossings {
                for (a, w) in [
                    (c.under_in, "under_in"),
                    (c.over_in, "over_in"),
                    (c.under_out, "under_out"),
                    (c.over_out, "over_out"),
                ] {
                    check(a, w)?;
                }
                if c.sign != 1 && c.sign != -1 {
                    return Err(Error::Structure(format!("bad crossing sign {}", c.sign)));
                }
                add(c.under_in, c.under_out)?;
                add(c.over_in, c.over_out)?;
            }
            for k in &self.kinks {
                check(k.arc_in, "kink in")?;
                check(k.arc_out, "kink out")?;
                if k.component >= self.components.len() {
                    return Err(Error::Structure("kink component out of range".into()));
                }
                add(k.arc_in, k.arc_out)?;
            }
        }
        for (i, &p) in produced.iter().enumerate().skip(1) {
            if p > 1 {
                return Err(Error::Structure(format!("arc {i} produced {p} times")));
            }
        }
        // components partition 1..=n and follow node transitions
        let mut seen = vec![false; n + 1];
        for (ci, cycle) in self.components.iter().enumerate() {
            if cycle.is_empty() {
                return Err(Error::Structure(format!("component {ci} is empty")));
            }
            for &a in cycle {
                check(a, "component")?;
                if seen[a] {
                    return Err(Error::Structure(format!("arc {a} in two components")));
                }
                seen[a] = true;
            }
            for (pos, &a) in cycle.iter().enumerate() {
                let next = cycle[(pos + 1) % cycle.len()];
                match cont.get(&a) {
                    Some(&c) if c == next => {}
                    Some(&c) => {
                        return Err(Error::Structure(format!(
                            "component {ci}: arc {a} flows to {c}, cycle says {next}"
                        )))
                    }
                    None => {
                        // bare circle: single arc, no nodes
                        if !(cycle.len() == 1 && produced[a] == 0) {
                            return Err(Error::Structure(format!(
                                "arc {a} dangles (no node consumes it)"
                            )));
                        }
                    }
                }
            }
        }
        if let Some(a) = (1..=n).find(|&a| !seen[a]) {
            return Err(Error::Structure(format!("arc {a} not in any component")));
        }
        Ok(())
    }

    /// Per-component self-writhe: the signed count of crossings whose under
    /// and over strands both lie on the component, plus one per kink node.
    pub fn self_writhe(&self) -> Vec<i64> {
        let mut w = vec![0i64; self.components.len()];
        for c in &self.crossings {
            let cu = self.component_of(c.under_in);
            let co = self.component_of(c.over_in);
            if cu == co {
                w[cu] += c.sign as i64;
            }
        }
        for k in &self.kinks {
            w[k.component] += 1;
        }
        w
    }

    /// Total writhe over crossings and kinks.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum::<i64>() + self.kinks.len() as i64
    }

    /// Returns a copy whose self-writhe is congruent to `w` mod `rank`
    /// componentwise, by appending positive kinks at the end of each
    /// component cycle.
    pub fn with_framing(&self, w: &[u32], rank: usize) -> Result<LinkDiagram> {
        if w.len() != self.components.len() {
            return Err(Error::Precondition(format!(
                "framing vector length {} for {} components",
                w.len(),
                self.components.len()
            )));
        }
        if rank == 0 {
            return Err(Error::Precondition("rack rank must be positive".into()));
        }
        if let Some(&bad) = w.iter().find(|&&x| x as usize >= rank) {
            return Err(Error::Precondition(format!("framing entry {bad} not in 0..{rank}")));
        }
        let mut d = self.clone();
        let sw = d.self_writhe();
        for ci in 0..d.components.len() {
            let need = (w[ci] as i64 - sw[ci]).rem_euclid(rank as i64) as usize;
            for _ in 0..need {
                d.append_kink(ci);
            }
        }
        Ok(d)
    }

    /// Splits the last semi-arc of the component cycle with a new kink node.
    fn append_kink(&mut self, ci: usize) {
        let e = *self.components[ci].last().unwrap();
        // find the node slot consuming e, if any
        let mut slot: Option<&mut usize> = None;
        for c in &mut self.crossings {
            if c.under_in == e {
                slot = Some(&mut c.under_in);
                break;
            }
            if c.over_in == e {
                slot = Some(&mut c.over_in);
                break;
            }
        }
        if slot.is_none() {
            for k in &mut self.kinks {
                if k.arc_in == e {
                    slot = Some(&mut k.arc_in);
                    break;
                }
            }
        }
        match slot {
            Some(s) => {
                let new = self.n_arcs + 1;
                *s = new;
                self.n_arcs = new;
                self.kinks.push(KinkNode { arc_in: e, arc_out: new, component: ci });
                self.components[ci].push(new);
            }
            None => {
                // bare circle: the single arc loops through the new kink
                self.kinks.push(KinkNode { arc_in: e, arc_out: e, component: ci });
            }
        }
    }

    /// The labeling rules generated by every crossing and kink node.
    pub fn label_constraints(&self) -> Vec<LabelConstraint> {
        let mut out = Vec::new();
        for c in &self.crossings {
            out.push(LabelConstraint::Equal { from: c.over_in, to: c.over_out });
            if c.sign > 0 {
                out.push(LabelConstraint::Product {
                    input: c.under_in,
                    over: c.over_in,
                    out: c.under_out,
                });
            } else {
                out.push(LabelConstraint::Product {
                    input: c.under_out,
                    over: c.over_in,
                    out: c.under_in,
                });
            }
        }
        for k in &self.kinks {
            out.push(LabelConstraint::KinkStep { input: k.arc_in, out: k.arc_out });
        }
        out
    }

    /// Merges semi-arcs across over-passages into arcs (the columns of the
    /// module presentation matrix). Returns `(class_of, count)` where
    /// `class_of` is indexed by semi-arc id and classes are numbered by
    /// component and first appearance along the stored component cycle.
    pub fn merged_arc_classes(&self) -> (Vec<usize>, usize) {
        let n = self.n_arcs;
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for c in &self.crossings {
            let (a, b) = (find(&mut parent, c.over_in), find(&mut parent, c.over_out));
            if a != b {
                parent[a] = b;
            }
        }
        let mut class_of = vec![usize::MAX; n + 1];
        let mut count = 0usize;
        let mut rep_class: BTreeMap<usize, usize> = BTreeMap::new();
        for cycle in &self.components {
            for &a in cycle {
                let r = find(&mut parent, a);
                let entry = rep_class.entry(r).or_insert_with(|| {
                    let c = count;
                    count += 1;
                    c
                });
                class_of[a] = *entry;
            }
        }
        (class_of, count)
    }

    /// Serializes to the native format.
    pub fn to_native(&self) -> String {
        let mut s = String::new();
        if self.virtual_diagram {
            s.push_str("V\n");
        }
        for c in &self.crossings {
            let sign = if c.sign > 0 { '+' } else { '-' };
            let _ = writeln!(s, "C {sign} {} {} {} {}", c.under_in, c.over_in, c.under_out, c.over_out);
        }
        for k in &self.kinks {
            let _ = writeln!(s, "R {} {}", k.arc_in, k.arc_out);
        }
        for cycle in &self.components {
            let row: Vec<String> = cycle.iter().map(|a| a.to_string()).collect();
            let _ = writeln!(s, "K {}", row.join(" "));
        }
        s
    }

    /// Builds a diagram from parts, tracing components and validating.
    pub fn from_parts(
        crossings: Vec<Crossing>,
        kinks: Vec<KinkNode>,
        n_arcs: usize,
        virtual_diagram: bool,
    ) -> Result<LinkDiagram> {
        let components = trace_components(n_arcs, &crossings, &kinks)?;
        // recompute kink components from the traced cycles
        let kinks = kinks
            .into_iter()
            .map(|k| {
                let component = components
                    .iter()
                    .position(|c| c.contains(&k.arc_in))
                    .expect("traced components cover all arcs");
                KinkNode { component, ..k }
            })
            .collect();
        let d = LinkDiagram { n_arcs, crossings, kinks, components, virtual_diagram };
        d.validate()?;
        Ok(d)
    }
}

fn parse_native(code: &str) -> Result<LinkDiagram> {
    let mut crossings = Vec::new();
    let mut kink_pairs: Vec<(usize, usize)> = Vec::new();
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut virtual_diagram = false;
    for line in data_lines(code) {
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("V") => virtual_diagram = true,
            Some("C") => {
                let sign = match toks.next() {
                    Some("+") | Some("+1") | Some("1") => 1i8,
                    Some("-") | Some("-1") => -1i8,
                    other => return Err(Error::Parse(format!("bad crossing sign {other:?}"))),
                };
                let rest: Vec<usize> = parse_usize_row(&toks.collect::<Vec<_>>().join(" "))?;
                if rest.len() != 4 {
                    return Err(Error::Parse(format!(
                        "crossing line needs 4 semi-arcs, got {}",
                        rest.len()
                    )));
                }
                crossings.push(Crossing {
                    sign,
                    under_in: rest[0],
                    over_in: rest[1],
                    under_out: rest[2],
                    over_out: rest[3],
                });
            }
            Some("R") => {
                let rest: Vec<usize> = parse_usize_row(&toks.collect::<Vec<_>>().join(" "))?;
                if rest.len() != 2 {
                    return Err(Error::Parse("kink line needs 2 semi-arcs".into()));
                }
                kink_pairs.push((rest[0], rest[1]));
            }
            Some("K") => {
                let cycle: Vec<usize> = parse_usize_row(&toks.collect::<Vec<_>>().join(" "))?;
                if cycle.is_empty() {
                    return Err(Error::Parse("empty component line".into()));
                }
                components.push(cycle);
            }
            Some(other) => return Err(Error::Parse(format!("unknown line kind {other:?}"))),
            None => {}
        }
    }
    if components.is_empty() {
        return Err(Error::Parse("diagram has no components".into()));
    }
    let comp_of = |arc: usize| -> Result<usize> {
        components
            .iter()
            .position(|c| c.contains(&arc))
            .ok_or_else(|| Error::Structure(format!("kink arc {arc} not in any component")))
    };
    let kinks = kink_pairs
        .into_iter()
        .map(|(i, o)| Ok(KinkNode { arc_in: i, arc_out: o, component: comp_of(i)? }))
        .collect::<Result<Vec<_>>>()?;
    let n_arcs = components.iter().flatten().copied().max().unwrap_or(0);
    Ok(LinkDiagram { n_arcs, crossings, kinks, components, virtual_diagram })
}

/// Raw PD tuples (a, b, c, d): `a` incoming under-edge, counterclockwise.
fn pd_tuples(code: &str) -> Result<Vec<[usize; 4]>> {
    let mut tuples = Vec::new();
    let mut rest = code;
    while let Some(pos) = rest.find(['X', 'x']) {
        rest = &rest[pos + 1..];
        let open = rest
            .chars()
            .next()
            .ok_or_else(|| Error::Parse("dangling X at end of PD code".into()))?;
        let close = match open {
            '[' => ']',
            '(' => ')',
            _ => return Err(Error::Parse(format!("expected [ or ( after X, got {open:?}"))),
        };
        let end = rest.find(close).ok_or_else(|| Error::Parse("unclosed PD tuple".into()))?;
        let inner = &rest[1..end];
        let nums: Vec<usize> = inner
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad PD edge {t:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        if nums.len() != 4 {
            return Err(Error::Parse(format!("PD tuple with {} entries", nums.len())));
        }
        tuples.push([nums[0], nums[1], nums[2], nums[3]]);
        rest = &rest[end + 1..];
    }
    if tuples.is_empty() {
        return Err(Error::Parse("no PD tuples found".into()));
    }
    Ok(tuples)
}

fn parse_pd(code: &str) -> Result<LinkDiagram> {
    let tuples = pd_tuples(code)?;
    // remap edge ids to dense 1..=n
    let mut ids: Vec<usize> = tuples.iter().flatten().copied().collect();
    ids.sort_unstable();
    ids.dedup();
    let dense: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &e)| (e, i + 1)).collect();
    let n = ids.len();
    if n != 2 * tuples.len() {
        return Err(Error::Structure(format!(
            "{} distinct edges for {} crossings (each edge must appear exactly twice)",
            n,
            tuples.len()
        )));
    }
    let t: Vec<[usize; 4]> = tuples
        .iter()
        .map(|q| [dense[&q[0]], dense[&q[1]], dense[&q[2]], dense[&q[3]]])
        .collect();

    // Resolve over-strand directions: every edge is consumed once and
    // produced once over the whole diagram. Under roles are fixed (a in,
    // c out); propagate through the over pairs, seeding any leftover
    // all-over cycle at its smallest edge.
    let mut consumed = vec![false; n + 1];
    let mut produced = vec![false; n + 1];
    for q in &t {
        if consumed[q[0]] {
            return Err(Error::Structure(format!("edge {} consumed twice", q[0])));
        }
        consumed[q[0]] = true;
        if produced[q[2]] {
            return Err(Error::Structure(format!("edge {} produced twice", q[2])));
        }
        produced[q[2]] = true;
    }
    let mut over_in: Vec<Option<usize>> = vec![None; t.len()];
    loop {
        let mut progress = false;
        for (i, q) in t.iter().enumerate() {
            if over_in[i].is_some() {
                continue;
            }
            let (b, d) = (q[1], q[3]);
            let pick = if consumed[b] || produced[d] {
                Some(d)
            } else if consumed[d] || produced[b] {
                Some(b)
            } else {
                None
            };
            if let Some(oi) = pick {
                let oo = if oi == b { d } else { b };
                if consumed[oi] || produced[oo] {
                    return Err(Error::Structure(format!(
                        "inconsistent over-strand orientation at crossing {}",
                        i + 1
                    )));
                }
                consumed[oi] = true;
                produced[oo] = true;
                over_in[i] = Some(oi);
                progress = true;
            }
        }
        if over_in.iter().all(Option::is_some) {
            break;
        }
        if !progress {
            // seed: smallest unconsumed edge becomes over_in at its crossing
            let seed = (1..=n)
                .find(|&e| !consumed[e])
                .ok_or_else(|| Error::Structure("over-orientation deadlock".into()))?;
            let (i, q) = t
                .iter()
                .enumerate()
                .find(|(i, q)| over_in[*i].is_none() && (q[1] == seed || q[3] == seed))
                .ok_or_else(|| Error::Structure("over-orientation deadlock".into()))?;
            let oo = if q[1] == seed { q[3] } else { q[1] };
            consumed[seed] = true;
            produced[oo] = true;
            over_in[i] = Some(seed);
        }
    }

    let crossings: Vec<Crossing> = t
        .iter()
        .zip(&over_in)
        .map(|(q, oi)| {
            let oi = oi.unwrap();
            let oo = if oi == q[1] { q[3] } else { q[1] };
            // over running d→b is a positive crossing, b→d negative
            let sign = if oi == q[3] { 1 } else { -1 };
            Crossing { sign, under_in: q[0], over_in: oi, under_out: q[2], over_out: oo }
        })
        .collect();

    let components = trace_components(n, &crossings, &[])?;
    Ok(LinkDiagram { n_arcs: n, crossings, kinks: Vec::new(), components, virtual_diagram: false })
}

fn parse_gauss(code: &str) -> Result<LinkDiagram> {
    #[derive(Clone)]
    struct Passage {
        over: bool,
        id: usize,
        sign: Option<i8>,
        arc_in: usize,
        arc_out: usize,
    }
    let mut passages: Vec<Passage> = Vec::new();
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut next_arc = 1usize;
    for line in data_lines(code) {
        let mut line_passages = Vec::new();
        let mut chars = line.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(ch) = chars.next() {
            let over = match ch {
                'O' | 'o' => true,
                'U' | 'u' => false,
                ',' => continue,
                _ => return Err(Error::Parse(format!("unexpected {ch:?} in Gauss code"))),
            };
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            if digits.is_empty() {
                return Err(Error::Parse("crossing id missing in Gauss code".into()));
            }
            let id: usize = digits.parse().unwrap();
            let sign = match chars.peek() {
                Some('+') => {
                    chars.next();
                    Some(1i8)
                }
                Some('-') => {
                    chars.next();
                    Some(-1i8)
                }
                _ => None,
            };
            line_passages.push((over, id, sign));
        }
        if line_passages.is_empty() {
            continue;
        }
        let m = line_passages.len();
        let base = next_arc;
        next_arc += m;
        // arc base+i runs from passage i to passage i+1
        for (i, (over, id, sign)) in line_passages.into_iter().enumerate() {
            passages.push(Passage {
                over,
                id,
                sign,
                arc_in: base + (i + m - 1) % m,
                arc_out: base + i,
            });
        }
        components.push((base..base + m).collect());
    }
    if components.is_empty() {
        return Err(Error::Parse("no Gauss code components".into()));
    }
    let mut by_id: BTreeMap<usize, Vec<&Passage>> = BTreeMap::new();
    for p in &passages {
        by_id.entry(p.id).or_default().push(p);
    }
    let mut crossings = Vec::new();
    for (id, ps) in &by_id {
        if ps.len() != 2 || ps[0].over == ps[1].over {
            return Err(Error::Structure(format!(
                "crossing {id} must appear exactly once as O and once as U"
            )));
        }
        let over = if ps[0].over { ps[0] } else { ps[1] };
        let under = if ps[0].over { ps[1] } else { ps[0] };
        let sign = match (over.sign, under.sign) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Structure(format!("crossing {id} has conflicting signs")))
            }
            (Some(a), _) | (_, Some(a)) => a,
            (None, None) => return Err(Error::Parse(format!("crossing {id} is unsigned"))),
        };
        crossings.push(Crossing {
            sign,
            under_in: under.arc_in,
            over_in: over.arc_in,
            under_out: under.arc_out,
            over_out: over.arc_out,
        });
    }
    let n_arcs = next_arc - 1;
    Ok(LinkDiagram { n_arcs, crossings, kinks: Vec::new(), components, virtual_diagram: true })
}

/// Traces component cycles by following strand continuations. Components are
/// ordered by their smallest semi-arc id, starting each cycle at it.
fn trace_components(
    n: usize,
    crossings: &[Crossing],
    kinks: &[KinkNode],
) -> Result<Vec<Vec<usize>>> {
    let mut cont: BTreeMap<usize, usize> = BTreeMap::new();
    for c in crossings {
        cont.insert(c.under_in, c.under_out);
        cont.insert(c.over_in, c.over_out);
    }
    for k in kinks {
        cont.insert(k.arc_in, k.arc_out);
    }
    let mut seen = vec![false; n + 1];
    let mut components = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut a = start;
        loop {
            if seen[a] {
                return Err(Error::Structure(format!("arc {a} revisited while tracing")));
            }
            seen[a] = true;
            cycle.push(a);
            a = *cont
                .get(&a)
                .ok_or_else(|| Error::Structure(format!("arc {a} dangles while tracing")))?;
            if a == start {
                break;
            }
        }
        components.push(cycle);
    }
    Ok(components)
}
