//! Rational tangle assembly and closures.
//!
//! Tangles are built over abstract wires: each crossing exposes four ports in
//! clockwise order NW, NE, SE, SW; the NW–SE diagonal and the NE–SW diagonal
//! are the two strands through the crossing. Twisting, horizontal tangle sum,
//! and numerator closure are wire surgeries; the closure orients every strand
//! and emits a validated diagram.

use beadrack::diagram::{Crossing, KinkNode, LinkDiagram};

const NW: usize = 0;
const NE: usize = 1;
const SE: usize = 2;
const SW: usize = 3;

/// Planar positions of the four ports, for crossing signs.
const PORT_POS: [(i32, i32); 4] = [(-1, 1), (1, 1), (1, -1), (-1, -1)];

#[derive(Clone, Copy, Debug)]
struct TCrossing {
    /// Wire at each port.
    ports: [usize; 4],
    /// The NW–SE strand is the over strand.
    over_02: bool,
}

#[derive(Clone, Debug)]
pub struct Tangle {
    crossings: Vec<TCrossing>,
    joins: Vec<(usize, usize)>,
    nw: usize,
    ne: usize,
    sw: usize,
    se: usize,
    next: usize,
}

impl Tangle {
    /// Two horizontal strands.
    pub fn zero() -> Tangle {
        Tangle { crossings: Vec::new(), joins: vec![(0, 1), (2, 3)], nw: 0, ne: 1, sw: 2, se: 3, next: 4 }
    }

    fn fresh(&mut self) -> usize {
        let w = self.next;
        self.next += 1;
        w
    }

    /// Adds `|count|` crossings between the NE and SE endpoints; the sign of
    /// `count` selects the over strand.
    pub fn twist_right(&mut self, count: i64) {
        for _ in 0..count.unsigned_abs() {
            let a = self.fresh();
            let b = self.fresh();
            self.crossings.push(TCrossing {
                ports: [self.ne, a, b, self.se],
                over_02: count > 0,
            });
            self.ne = a;
            self.se = b;
        }
    }

    /// Adds `|count|` crossings between the SW and SE endpoints.
    pub fn twist_bottom(&mut self, count: i64) {
        for _ in 0..count.unsigned_abs() {
            let a = self.fresh();
            let b = self.fresh();
            self.crossings.push(TCrossing {
                ports: [self.sw, self.se, b, a],
                over_02: count < 0,
            });
            self.sw = a;
            self.se = b;
        }
    }

    /// Horizontal sum: glues `right`'s west side to this tangle's east side.
    pub fn sum(mut self, right: &Tangle) -> Tangle {
        let off = self.next;
        for c in &right.crossings {
            self.crossings.push(TCrossing {
                ports: [c.ports[0] + off, c.ports[1] + off, c.ports[2] + off, c.ports[3] + off],
                over_02: c.over_02,
            });
        }
        for &(a, b) in &right.joins {
            self.joins.push((a + off, b + off));
        }
        self.joins.push((self.ne, right.nw + off));
        self.joins.push((self.se, right.sw + off));
        self.ne = right.ne + off;
        self.se = right.se + off;
        self.next += right.next;
        self
    }

    /// Numerator closure: joins NW–NE and SW–SE.
    pub fn numerator(mut self) -> LinkDiagram {
        self.joins.push((self.nw, self.ne));
        self.joins.push((self.sw, self.se));
        self.resolve()
    }

    /// Denominator closure: joins NW–SW and NE–SE.
    pub fn denominator(mut self) -> LinkDiagram {
        self.joins.push((self.nw, self.sw));
        self.joins.push((self.ne, self.se));
        self.resolve()
    }

    fn resolve(self) -> LinkDiagram {
        // union-find over wires
        let mut parent: Vec<usize> = (0..self.next).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for &(a, b) in &self.joins {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        // wire root → the two (crossing, port) incidences
        let mut incidence: std::collections::BTreeMap<usize, Vec<(usize, usize)>> =
            Default::default();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (p, &w) in c.ports.iter().enumerate() {
                incidence.entry(find(&mut parent, w)).or_default().push((ci, p));
            }
        }
        assert!(
            incidence.values().all(|v| v.len() == 2),
            "tangle closure left open or overfull wires"
        );

        // trace strands: a passage enters a crossing at a port and exits at
        // the opposite port; the exit wire leads to the next passage
        let n_cross = self.crossings.len();
        let mut port_seen = vec![[false; 4]; n_cross];
        // per-component passage list: (crossing, in_port)
        let mut components: Vec<Vec<(usize, usize)>> = Vec::new();
        for start_c in 0..n_cross {
            for start_p in 0..4 {
                if port_seen[start_c][start_p] {
                    continue;
                }
                let mut passages = Vec::new();
                let (mut ci, mut p) = (start_c, start_p);
                loop {
                    port_seen[ci][p] = true;
                    let out = (p + 2) % 4;
                    port_seen[ci][out] = true;
                    passages.push((ci, p));
                    let w = find(&mut parent, self.crossings[ci].ports[out]);
                    let pair = &incidence[&w];
                    let (nci, np) =
                        if pair[0] == (ci, out) { pair[1] } else { pair[0] };
                    if (nci, np) == (start_c, start_p) {
                        break;
                    }
                    (ci, p) = (nci, np);
                }
                components.push(passages);
            }
        }

        // semi-arc ids: component by component, arc i follows passage i
        let mut arc_out = vec![[0usize; 4]; n_cross]; // indexed by in-port of the passage
        let mut arc_in = vec![[0usize; 4]; n_cross];
        let mut base = 1usize;
        for passages in &components {
            let m = passages.len();
            for (i, &(ci, p)) in passages.iter().enumerate() {
                arc_out[ci][p] = base + i;
                arc_in[ci][p] = base + (i + m - 1) % m;
            }
            base += m;
        }

        let mut crossings = Vec::with_capacity(n_cross);
        for (ci, c) in self.crossings.iter().enumerate() {
            // in-ports of the two passages through this crossing
            let in02 = if arc_in[ci][NW] != 0 { NW } else { SE };
            let in13 = if arc_in[ci][NE] != 0 { NE } else { SW };
            let (over_p, under_p) = if c.over_02 { (in02, in13) } else { (in13, in02) };
            let (ox, oy) = PORT_POS[over_p];
            let (ux, uy) = PORT_POS[under_p];
            // direction of entry is opposite the port position
            let det = ox * uy - oy * ux;
            let sign = if det > 0 { 1 } else { -1 };
            crossings.push(Crossing {
                sign,
                under_in: arc_in[ci][under_p],
                over_in: arc_in[ci][over_p],
                under_out: arc_out[ci][under_p],
                over_out: arc_out[ci][over_p],
            });
        }
        LinkDiagram::from_parts(crossings, Vec::<KinkNode>::new(), base - 1, false)
            .expect("tangle closure is a valid diagram")
    }
}

/// The rational tangle of `cf[0] + 1/(cf[1] + 1/(… + 1/cf[k−1]))`, built by
/// nesting from the innermost term outward, alternating horizontal and
/// vertical twist batches (the outermost batch is horizontal).
pub fn rational_tangle(cf: &[i64]) -> Tangle {
    let mut t = Tangle::zero();
    for (i, &a) in cf.iter().enumerate().rev() {
        if i % 2 == 0 {
            t.twist_right(a);
        } else {
            t.twist_bottom(a);
        }
    }
    t
}

/// Numerator closure of a horizontal sum of rational tangles.
pub fn montesinos(tangles: &[Vec<i64>]) -> LinkDiagram {
    assert!(!tangles.is_empty());
    let mut acc = rational_tangle(&tangles[0]);
    for cf in &tangles[1..] {
        acc = acc.sum(&rational_tangle(cf));
    }
    acc.numerator()
}

/// The 2-bridge link of the continued fraction.
pub fn rational_link(cf: &[i64]) -> LinkDiagram {
    rational_tangle(cf).numerator()
}
