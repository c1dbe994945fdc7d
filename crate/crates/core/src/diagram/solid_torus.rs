//! Bordered genus-one diagrams of solid tori with a linear β-curve.
//!
//! The punctured torus is drawn as the unit square with opposite sides
//! identified and the puncture at the corners. The bottom/top side is the
//! α-arc `ah` (matched points 1, 3), the left/right side is the α-arc `av`
//! (matched points 2, 4), and the basepoint sits in the corner at the origin.
//! The β-circle is the straight line of direction `(q, p)`.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{BorderedDiagram, Curve, CurveKind, Edge, Region};
use crate::error::{Error, Result};
use crate::pmc::PointedMatchedCircle;
use crate::rational::{self, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side4 {
    Bottom,
    Right,
    Top,
    Left,
}

/// A crossing of β with one of the two α-arcs, seen from one side of the square.
#[derive(Debug, Clone)]
struct Hit {
    horizontal: bool,
    coord: Q,
    side: Side4,
}

impl Hit {
    fn position(&self) -> Q {
        match self.side {
            Side4::Bottom => self.coord.clone(),
            Side4::Right => rational::int(1) + &self.coord,
            Side4::Top => rational::int(3) - &self.coord,
            Side4::Left => rational::int(4) - &self.coord,
        }
    }
}

/// Bordered diagram of the solid torus whose β-curve has direction `(q, p)`.
///
/// `(1, 0)` is the horizontal β-curve, parallel to `ah`.
pub fn linear_solid_torus(q: i64, p: i64) -> Result<BorderedDiagram> {
    if q.gcd(&p) != 1 {
        return Err(Error::InvalidDiagram(format!(
            "direction ({q}, {p}) is not primitive"
        )));
    }
    let n = (p.abs() + q.abs()) as usize;
    let c = rational::q(1, 2 * n as i64 + 1);
    let in_unit = |v: &Q| v.is_positive() && *v < rational::int(1);
    let solutions = |k: i64, shift: &Q| -> Vec<Q> {
        if k == 0 {
            return Vec::new();
        }
        let mut out: Vec<Q> = (-k.abs() - 1..=k.abs() + 1)
            .map(|j| (shift + rational::int(j)) / rational::int(k))
            .filter(in_unit)
            .collect();
        out.sort();
        out
    };
    let h_coords = solutions(p, &c);
    let v_coords = solutions(-q, &c);

    // Walk once around β, recording each chord of the square.
    let dir = (rational::int(q), rational::int(p));
    let entry_of = |horizontal: bool, coord: &Q| -> (Hit, (Q, Q)) {
        if horizontal {
            let side = if p > 0 { Side4::Bottom } else { Side4::Top };
            let y = if p > 0 { Q::zero() } else { rational::int(1) };
            (
                Hit {
                    horizontal,
                    coord: coord.clone(),
                    side,
                },
                (coord.clone(), y),
            )
        } else {
            let side = if q > 0 { Side4::Left } else { Side4::Right };
            let x = if q > 0 { Q::zero() } else { rational::int(1) };
            (
                Hit {
                    horizontal,
                    coord: coord.clone(),
                    side,
                },
                (x, coord.clone()),
            )
        }
    };
    let time_to = |from: &Q, speed: &Q| -> Option<Q> {
        if speed.is_zero() {
            None
        } else if speed.is_positive() {
            Some((rational::int(1) - from) / speed)
        } else {
            Some(-from / speed)
        }
    };
    let start = if h_coords.is_empty() {
        (false, v_coords[0].clone())
    } else {
        (true, h_coords[0].clone())
    };
    let mut chords: Vec<(Hit, Hit)> = Vec::with_capacity(n);
    let mut crossings: Vec<(bool, Q)> = Vec::with_capacity(n);
    let mut cur = start.clone();
    loop {
        crossings.push(cur.clone());
        let (entry, (x0, y0)) = entry_of(cur.0, &cur.1);
        let tx = time_to(&x0, &dir.0);
        let ty = time_to(&y0, &dir.1);
        let exits_vertical = match (&tx, &ty) {
            (Some(a), Some(b)) => a < b,
            (Some(_), None) => true,
            _ => false,
        };
        let exit = if exits_vertical {
            let t = tx.expect("checked");
            let y = &y0 + &t * &dir.1;
            let side = if q > 0 { Side4::Right } else { Side4::Left };
            Hit {
                horizontal: false,
                coord: y,
                side,
            }
        } else {
            let t = ty.expect("checked");
            let x = &x0 + &t * &dir.0;
            let side = if p > 0 { Side4::Top } else { Side4::Bottom };
            Hit {
                horizontal: true,
                coord: x,
                side,
            }
        };
        let next = (exit.horizontal, exit.coord.clone());
        chords.push((entry, exit));
        if next == start {
            break;
        }
        cur = next;
    }

    let h_names: Vec<String> = (0..h_coords.len()).map(|i| format!("h{i}")).collect();
    let v_names: Vec<String> = (0..v_coords.len()).map(|i| format!("v{i}")).collect();
    let point_id = |horizontal: bool, coord: &Q| -> usize {
        if horizontal {
            h_coords
                .iter()
                .position(|h| h == coord)
                .expect("crossing lies on ah")
        } else {
            h_coords.len()
                + v_coords
                    .iter()
                    .position(|v| v == coord)
                    .expect("crossing lies on av")
        }
    };
    let beta_points: Vec<usize> = crossings.iter().map(|(h, c)| point_id(*h, c)).collect();
    let curves = vec![
        Curve {
            name: "ah".into(),
            kind: CurveKind::AlphaArc,
            points: (0..h_coords.len()).collect(),
            ends: Some([1, 3]),
        },
        Curve {
            name: "av".into(),
            kind: CurveKind::AlphaArc,
            points: (h_coords.len()..h_coords.len() + v_coords.len()).collect(),
            ends: Some([4, 2]),
        },
        Curve {
            name: "b".into(),
            kind: CurveKind::BetaCircle,
            points: beta_points,
            ends: None,
        },
    ];

    // Marked perimeter positions: four corners, then both ends of every chord.
    #[derive(Clone)]
    enum Mark {
        Corner(usize),
        ChordEnd { chord: usize, at_entry: bool },
    }
    let mut marks: Vec<(Q, Mark)> = (0..4)
        .map(|k| (rational::int(k as i64), Mark::Corner(k)))
        .collect();
    for (i, (a, b)) in chords.iter().enumerate() {
        marks.push((
            a.position(),
            Mark::ChordEnd {
                chord: i,
                at_entry: true,
            },
        ));
        marks.push((
            b.position(),
            Mark::ChordEnd {
                chord: i,
                at_entry: false,
            },
        ));
    }
    marks.sort_by(|a, b| a.0.cmp(&b.0));
    let m = marks.len();
    let count_le = |coords: &[Q], bound: &Q| coords.iter().filter(|c| *c <= bound).count();
    // The α-edge covering the perimeter piece from mark `i` to mark `i + 1`.
    let piece_edge = |i: usize| -> Edge {
        let a = &marks[i].0;
        let b = if i + 1 == m {
            rational::int(4)
        } else {
            marks[i + 1].0.clone()
        };
        let side = a
            .floor()
            .to_integer()
            .to_i64()
            .expect("perimeter position below 4");
        let (curve, forward, low) = match side {
            0 => (0, true, a.clone()),
            1 => (1, true, a - rational::int(1)),
            2 => (0, false, rational::int(3) - &b),
            _ => (1, false, rational::int(4) - &b),
        };
        let coords = if curve == 0 { &h_coords } else { &v_coords };
        Edge::Segment {
            curve,
            index: count_le(coords, &low),
            forward,
        }
    };
    let corner_interval = [0usize, 3, 2, 1];
    let mark_index = |chord: usize, at_entry: bool| -> usize {
        marks
            .iter()
            .position(|(_, mk)| matches!(mk, Mark::ChordEnd { chord: c, at_entry: e } if *c == chord && *e == at_entry))
            .expect("every chord end is marked")
    };

    let mut visited = vec![false; m];
    let mut regions = Vec::new();
    let mut z_region = 0;
    for first in 0..m {
        if visited[first] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = first;
        while !visited[i] {
            visited[i] = true;
            cycle.push(piece_edge(i));
            let j = (i + 1) % m;
            match &marks[j].1 {
                Mark::Corner(k) => {
                    cycle.push(Edge::Boundary {
                        interval: corner_interval[*k],
                    });
                    if *k == 0 {
                        z_region = regions.len();
                    }
                    i = j;
                }
                Mark::ChordEnd { chord, at_entry } => {
                    cycle.push(Edge::Segment {
                        curve: 2,
                        index: *chord,
                        forward: *at_entry,
                    });
                    i = mark_index(*chord, !*at_entry);
                }
            }
        }
        regions.push(Region {
            name: format!("R{}", regions.len()),
            cycles: vec![cycle],
            chi: 1,
        });
    }
    let names = h_names.into_iter().chain(v_names).collect();
    BorderedDiagram::new(
        1,
        Some(PointedMatchedCircle::torus()),
        curves,
        names,
        regions,
        z_region,
    )
}
