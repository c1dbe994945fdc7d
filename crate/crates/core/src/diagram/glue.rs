//! Gluing two bordered diagrams along boundary circles of opposite orientation.
//!
//! Point `i` of the first boundary is identified with point `4k + 1 - i` of the
//! second. Matched α-arcs join into α-circles, and regions that meet across the
//! boundary merge; a merged region loses one from its Euler characteristic for
//! every boundary interval it was glued along.

use std::collections::HashMap;

use super::{BorderedDiagram, Curve, CurveKind, Edge, Generator, Region, Vertex};
use crate::error::{Error, Result};

/// A generator of the glued diagram and the two halves it restricts to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedGenerator {
    pub glued: Generator,
    pub left: Generator,
    pub right: Generator,
}

#[derive(Debug, Clone)]
pub struct GluedDiagram {
    pub diagram: BorderedDiagram,
    pub generators: Vec<GluedGenerator>,
}

/// Where an old segment lands: new curve, new segment, and whether the
/// orientations agree.
type SegmentMap = HashMap<(usize, usize, usize), (usize, usize, bool)>;

struct Traversal {
    side: usize,
    curve: usize,
    segment: usize,
    forward: bool,
    /// Vertex reached at the end of the traversal, `None` on the boundary.
    end: Option<usize>,
}

fn find_union(parent: &mut [usize], i: usize) -> usize {
    let mut root = i;
    while parent[root] != root {
        root = parent[root];
    }
    let mut j = i;
    while parent[j] != root {
        let next = parent[j];
        parent[j] = root;
        j = next;
    }
    root
}

pub fn glue(d1: &BorderedDiagram, d2: &BorderedDiagram) -> Result<GluedDiagram> {
    let (c1, c2) = match (d1.circle(), d2.circle()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ClosedDiagramHasNoBoundary),
    };
    if c1.n_points != c2.n_points || !c2.reversed().same_as(c1) {
        return Err(Error::BoundaryMismatch(
            "the second boundary is not the reverse of the first".into(),
        ));
    }
    let n = c1.n_points;
    let sides = [d1, d2];
    let offsets = [0, d1.n_points()];
    let prefixes = ["L.", "R."];
    // Boundary point of side 1 glued to side `s` point `b`.
    let glued_point = |side: usize, b: usize| if side == 0 { b } else { n + 1 - b };

    let mut point_names = Vec::new();
    for (s, d) in sides.iter().enumerate() {
        point_names.extend(
            d.point_names()
                .iter()
                .map(|p| format!("{}{p}", prefixes[s])),
        );
    }

    let mut curves: Vec<Curve> = Vec::new();
    let mut seg_map: SegmentMap = HashMap::new();
    let copy_kind = |kind: CurveKind, curves: &mut Vec<Curve>, seg_map: &mut SegmentMap| {
        for (s, d) in sides.iter().enumerate() {
            for (ci, c) in d
                .curves()
                .iter()
                .enumerate()
                .filter(|(_, c)| c.kind == kind)
            {
                let new = curves.len();
                for seg in 0..c.segment_count() {
                    seg_map.insert((s, ci, seg), (new, seg, true));
                }
                curves.push(Curve {
                    name: format!("{}{}", prefixes[s], c.name),
                    kind,
                    points: c.points.iter().map(|p| p + offsets[s]).collect(),
                    ends: None,
                });
            }
        }
    };
    copy_kind(CurveKind::AlphaCircle, &mut curves, &mut seg_map);

    for (ai, a1) in d1.curves().iter().enumerate() {
        let Some([_, e1]) = a1.ends else { continue };
        let meet = n + 1 - e1;
        let (bi, a2) = d2
            .curves()
            .iter()
            .enumerate()
            .find(|(_, c)| c.ends.is_some_and(|[s, e]| s == meet || e == meet))
            .ok_or_else(|| Error::BoundaryMismatch(format!("no arc continues {}", a1.name)))?;
        let [s2, _] = a2.ends.expect("found by its ends");
        let mut trav: Vec<Traversal> = Vec::new();
        let m1 = a1.points.len();
        for j in 0..=m1 {
            let end = (j < m1).then(|| a1.points[j]);
            trav.push(Traversal {
                side: 0,
                curve: ai,
                segment: j,
                forward: true,
                end,
            });
        }
        let m2 = a2.points.len();
        if s2 == meet {
            for j in 0..=m2 {
                let end = (j < m2).then(|| a2.points[j] + offsets[1]);
                trav.push(Traversal {
                    side: 1,
                    curve: bi,
                    segment: j,
                    forward: true,
                    end,
                });
            }
        } else {
            for j in (0..=m2).rev() {
                let end = (j > 0).then(|| a2.points[j - 1] + offsets[1]);
                trav.push(Traversal {
                    side: 1,
                    curve: bi,
                    segment: j,
                    forward: false,
                    end,
                });
            }
        }
        let new = curves.len();
        let mut points = Vec::new();
        match trav.iter().position(|t| t.end.is_some()) {
            None => {
                for t in &trav {
                    seg_map.insert((t.side, t.curve, t.segment), (new, 0, t.forward));
                }
            }
            Some(k) => {
                let len = trav.len();
                points.push(trav[k].end.expect("chosen by position"));
                let mut run = 0;
                for step in 1..=len {
                    let t = &trav[(k + step) % len];
                    seg_map.insert((t.side, t.curve, t.segment), (new, run, t.forward));
                    if let Some(p) = t.end {
                        if step < len {
                            points.push(p);
                        }
                        run += 1;
                    }
                }
            }
        }
        curves.push(Curve {
            name: format!("L.{}|R.{}", a1.name, a2.name),
            kind: CurveKind::AlphaCircle,
            points,
            ends: None,
        });
    }
    copy_kind(CurveKind::BetaCircle, &mut curves, &mut seg_map);

    let map_edge = |side: usize, e: Edge| -> Edge {
        match e {
            Edge::Segment {
                curve,
                index,
                forward,
            } => {
                let (c, i, same) = seg_map[&(side, curve, index)];
                Edge::Segment {
                    curve: c,
                    index: i,
                    forward: forward == same,
                }
            }
            Edge::Boundary { .. } => unreachable!("boundary edges are cut out before mapping"),
        }
    };

    // Merge regions across the boundary.
    let r1 = d1.regions().len();
    let total = r1 + d2.regions().len();
    let mut parent: Vec<usize> = (0..total).collect();
    let mut by_interval = HashMap::new();
    for (ri, r) in d2.regions().iter().enumerate() {
        for e in r.cycles.iter().flatten() {
            if let Edge::Boundary { interval } = e {
                by_interval.insert(*interval, r1 + ri);
            }
        }
    }
    let mut glued_arcs = vec![0i64; total];
    for (ri, r) in d1.regions().iter().enumerate() {
        for e in r.cycles.iter().flatten() {
            if let Edge::Boundary { interval } = e {
                let other = by_interval[&((n - interval) % n)];
                glued_arcs[ri] += 1;
                let (a, b) = (find_union(&mut parent, ri), find_union(&mut parent, other));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let region_of = |i: usize| if i < r1 { (0, i) } else { (1, i - r1) };
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut group_of = vec![usize::MAX; total];
    for i in 0..total {
        let root = find_union(&mut parent, i);
        if group_of[root] == usize::MAX {
            group_of[root] = groups.len();
            groups.push(Vec::new());
        }
        group_of[i] = group_of[root];
        groups[group_of[i]].push(i);
    }

    let mut regions = Vec::new();
    for members in &groups {
        let mut chi = 0;
        let mut names = Vec::new();
        let mut cycles = Vec::new();
        // Pieces of boundary cycles between boundary edges: (side, start, end, edges).
        let mut pieces: Vec<(usize, usize, usize, Vec<Edge>)> = Vec::new();
        for &i in members {
            let (side, ri) = region_of(i);
            let region = &sides[side].regions()[ri];
            chi += region.chi - glued_arcs[i];
            names.push(format!("{}{}", prefixes[side], region.name));
            for cycle in &region.cycles {
                let cut: Vec<usize> = (0..cycle.len())
                    .filter(|&k| matches!(cycle[k], Edge::Boundary { .. }))
                    .collect();
                if cut.is_empty() {
                    cycles.push(cycle.iter().map(|&e| map_edge(side, e)).collect::<Vec<_>>());
                    continue;
                }
                for (ci, &k) in cut.iter().enumerate() {
                    let next_cut = cut[(ci + 1) % cut.len()];
                    let Vertex::Boundary(start) = sides[side].edge_ends(cycle[k]).1 else {
                        unreachable!("boundary intervals end on boundary points")
                    };
                    let Vertex::Boundary(end) = sides[side].edge_ends(cycle[next_cut]).0 else {
                        unreachable!("boundary intervals start on boundary points")
                    };
                    let mut edges = Vec::new();
                    let mut j = (k + 1) % cycle.len();
                    while j != next_cut {
                        edges.push(map_edge(side, cycle[j]));
                        j = (j + 1) % cycle.len();
                    }
                    pieces.push((
                        side,
                        glued_point(side, start),
                        glued_point(side, end),
                        edges,
                    ));
                }
            }
        }
        let starts: HashMap<(usize, usize), usize> = pieces
            .iter()
            .enumerate()
            .map(|(i, (s, st, _, _))| ((*s, *st), i))
            .collect();
        let mut used = vec![false; pieces.len()];
        for first in 0..pieces.len() {
            if used[first] {
                continue;
            }
            let mut cycle: Vec<Edge> = Vec::new();
            let mut i = first;
            while !used[i] {
                used[i] = true;
                let (side, _, end, edges) = &pieces[i];
                for (k, &e) in edges.iter().enumerate() {
                    if k == 0 && cycle.last() == Some(&e) {
                        continue;
                    }
                    cycle.push(e);
                }
                i = *starts.get(&(1 - side, *end)).ok_or_else(|| {
                    Error::BoundaryMismatch("regions do not match across the boundary".into())
                })?;
            }
            if cycle.len() > 1 && cycle.first() == cycle.last() {
                cycle.pop();
            }
            cycles.push(cycle);
        }
        regions.push(Region {
            name: names.join("+"),
            cycles,
            chi,
        });
    }

    let z_region = group_of[d1.z_region()];
    let diagram = BorderedDiagram::new(
        d1.genus() + d2.genus(),
        None,
        curves,
        point_names,
        regions,
        z_region,
    )?;
    let g1 = d1.genus();
    let generators = diagram
        .enumerate_generators()
        .into_iter()
        .map(|g| {
            let left = Generator(g.0[..g1].to_vec());
            let right = Generator(g.0[g1..].iter().map(|p| p - offsets[1]).collect());
            GluedGenerator {
                glued: g,
                left,
                right,
            }
        })
        .collect();
    Ok(GluedDiagram {
        diagram,
        generators,
    })
}
