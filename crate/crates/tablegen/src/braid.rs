//! Braid closures as link diagrams.
//!
//! Letters are nonzero integers: `+i` crosses the strand in position `i`
//! over the strand in position `i+1`, `-i` crosses it under. The closure
//! joins each bottom position to the same top position.

use beadrack::diagram::{Crossing, LinkDiagram};

pub fn braid_closure(strands: usize, word: &[i32]) -> LinkDiagram {
    assert!(strands >= 2);
    let mut crossings: Vec<Crossing> = Vec::with_capacity(word.len());
    let mut current: Vec<usize> = (1..=strands).collect();
    let mut next = strands + 1;
    for &letter in word {
        let i = letter.unsigned_abs() as usize;
        assert!(i >= 1 && i < strands, "letter {letter} out of range for {strands} strands");
        let (left, right) = (current[i - 1], current[i]);
        if letter > 0 {
            // left strand passes over, lands at position i+1
            let under_out = next;
            let over_out = next + 1;
            next += 2;
            crossings.push(Crossing {
                sign: 1,
                under_in: right,
                over_in: left,
                under_out,
                over_out,
            });
            current[i - 1] = under_out;
            current[i] = over_out;
        } else {
            let over_out = next;
            let under_out = next + 1;
            next += 2;
            crossings.push(Crossing {
                sign: -1,
                under_in: left,
                over_in: right,
                under_out,
                over_out,
            });
            current[i - 1] = over_out;
            current[i] = under_out;
        }
    }
    // close: bottom position p joins top arc p
    let mut replace = vec![usize::MAX; next];
    for (p, &bottom) in current.iter().enumerate() {
        replace[bottom] = p + 1;
    }
    let map_arc = |a: usize| if replace[a] != usize::MAX { replace[a] } else { a };
    for c in &mut crossings {
        c.under_in = map_arc(c.under_in);
        c.over_in = map_arc(c.over_in);
        c.under_out = map_arc(c.under_out);
        c.over_out = map_arc(c.over_out);
    }
    // renumber densely
    let mut used: Vec<usize> = crossings
        .iter()
        .flat_map(|c| [c.under_in, c.over_in, c.under_out, c.over_out])
        .collect();
    used.sort_unstable();
    used.dedup();
    assert_eq!(used.len(), 2 * word.len(), "every strand must meet a crossing");
    let dense = |a: usize| used.binary_search(&a).unwrap() + 1;
    for c in &mut crossings {
        c.under_in = dense(c.under_in);
        c.over_in = dense(c.over_in);
        c.under_out = dense(c.under_out);
        c.over_out = dense(c.over_out);
    }
    LinkDiagram::from_parts(crossings, Vec::new(), 2 * word.len(), false)
        .expect("braid closure is a valid diagram")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_trefoil() {
        let d = braid_closure(2, &[1, 1, 1]);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.self_writhe(), vec![3]);
    }

    #[test]
    fn torus_two_four() {
        let d = braid_closure(2, &[1, 1, 1, 1]);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.self_writhe(), vec![0, 0]);
        assert_eq!(d.writhe(), 4);
    }

    #[test]
    fn figure_eight() {
        let d = braid_closure(3, &[1, -2, 1, -2]);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 0);
    }

    #[test]
    fn borromean_rings_have_three_components() {
        let d = braid_closure(3, &[1, -2, 1, -2, 1, -2]);
        assert_eq!(d.component_count(), 3);
        assert_eq!(d.self_writhe(), vec![0, 0, 0]);
    }
}
