//! Combinatorial Heegaard diagrams, bordered or closed.
//!
//! A diagram is stored as an edge complex: every α- and β-curve is cut at its
//! intersection points (and, for α-arcs, at its endpoints on the boundary
//! circle) into numbered segments, and every complementary region lists its
//! oriented boundary cycles as signed segment tokens. From this data the
//! corners of each region, the β-part of its boundary, and its boundary-circle
//! arcs are derived once at construction time.
//!
//! Token syntax inside region cycles: `a1:0` is segment 0 of curve `a1`
//! traversed along the curve's orientation, `-a1:0` against it, and `bd:j`
//! the boundary interval `j` (with `bd:0` the interval containing the
//! basepoint). Boundary intervals are always traversed along the boundary
//! orientation.

mod domains;
mod glue;
mod solid_torus;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pmc::PointedMatchedCircle;

pub use domains::{Domain, Pi2Solution, Ring};
pub use glue::{glue, GluedDiagram, GluedGenerator};
pub use solid_torus::linear_solid_torus;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    AlphaCircle,
    AlphaArc,
    BetaCircle,
}

impl CurveKind {
    pub fn is_alpha(self) -> bool {
        !matches!(self, CurveKind::BetaCircle)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertex {
    Point(usize),
    /// A marked point `1..=4k` of the boundary circle.
    Boundary(usize),
    /// Endpoint of a curve with no intersection points (a closed loop).
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    Segment {
        curve: usize,
        index: usize,
        forward: bool,
    },
    Boundary {
        interval: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeClass {
    Alpha,
    Beta,
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub name: String,
    pub kind: CurveKind,
    /// Intersection points in the order met along the curve.
    pub points: Vec<usize>,
    /// Boundary endpoints `[start, end]` of an α-arc.
    pub ends: Option<[usize; 2]>,
}

impl Curve {
    pub fn segment_count(&self) -> usize {
        match self.kind {
            CurveKind::AlphaArc => self.points.len() + 1,
            _ => self.points.len().max(1),
        }
    }

    /// Start and end vertex of segment `i`, along the curve's orientation.
    pub fn segment_ends(&self, i: usize) -> (Vertex, Vertex) {
        let pts = &self.points;
        match (self.kind, self.ends) {
            (CurveKind::AlphaArc, Some([s, e])) => {
                let start = if i == 0 {
                    Vertex::Boundary(s)
                } else {
                    Vertex::Point(pts[i - 1])
                };
                let end = if i == pts.len() {
                    Vertex::Boundary(e)
                } else {
                    Vertex::Point(pts[i])
                };
                (start, end)
            }
            _ if pts.is_empty() => (Vertex::Free, Vertex::Free),
            _ => (
                Vertex::Point(pts[i]),
                Vertex::Point(pts[(i + 1) % pts.len()]),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub name: String,
    pub cycles: Vec<Vec<Edge>>,
    pub chi: i64,
}

/// Quantities read off a region's boundary, used by every linear computation.
#[derive(Debug, Clone, Default)]
pub(crate) struct RegionData {
    pub corners: i64,
    pub point_corners: HashMap<usize, i64>,
    /// `∂(∂R ∩ β)` as a 0-chain on intersection points.
    pub beta_boundary: Vec<i64>,
    /// `∂R ∩ ∂Σ` as a 1-chain on the boundary intervals `1..4k-1`.
    pub del_boundary: Vec<i64>,
}

/// A set of intersection points, one per β-circle, listed in β-circle order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(pub Vec<usize>);

#[derive(Debug, Clone)]
pub struct BorderedDiagram {
    genus: usize,
    circle: Option<Arc<PointedMatchedCircle>>,
    curves: Vec<Curve>,
    point_names: Vec<String>,
    regions: Vec<Region>,
    z_region: usize,
    point_alpha: Vec<usize>,
    point_beta: Vec<usize>,
    data: Vec<RegionData>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidDiagram(msg.into())
}

impl BorderedDiagram {
    /// Build and validate a diagram. `curves` must list α-circles, α-arcs and
    /// β-circles in any order; β-circle order fixes generator point order.
    pub fn new(
        genus: usize,
        boundary: Option<PointedMatchedCircle>,
        curves: Vec<Curve>,
        point_names: Vec<String>,
        regions: Vec<Region>,
        z_region: usize,
    ) -> Result<Self> {
        if let Some(b) = &boundary {
            b.validate()?;
        }
        let mut d = BorderedDiagram {
            genus,
            circle: boundary.map(Arc::new),
            curves,
            point_names,
            regions,
            z_region,
            point_alpha: Vec::new(),
            point_beta: Vec::new(),
            data: Vec::new(),
        };
        d.validate_curves()?;
        d.validate_regions()?;
        Ok(d)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_closed(&self) -> bool {
        self.circle.is_none()
    }

    pub fn circle(&self) -> Option<&Arc<PointedMatchedCircle>> {
        self.circle.as_ref()
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn z_region(&self) -> usize {
        self.z_region
    }

    pub fn point_names(&self) -> &[String] {
        &self.point_names
    }

    pub fn n_points(&self) -> usize {
        self.point_names.len()
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.point_names.iter().position(|n| n == name)
    }

    fn boundary_points(&self) -> usize {
        self.circle.as_ref().map_or(0, |c| c.n_points)
    }

    pub fn beta_circles(&self) -> impl Iterator<Item = &Curve> {
        self.curves
            .iter()
            .filter(|c| c.kind == CurveKind::BetaCircle)
    }

    fn validate_curves(&mut self) -> Result<()> {
        let n = self.point_names.len();
        let mut names = std::collections::HashSet::new();
        for c in &self.curves {
            if c.name == "bd"
                || c.name.is_empty()
                || c.name.contains(':')
                || !names.insert(c.name.as_str())
            {
                return Err(invalid(format!("bad or repeated curve name {:?}", c.name)));
            }
        }
        let mut pnames = std::collections::HashSet::new();
        for p in &self.point_names {
            if !pnames.insert(p.as_str()) {
                return Err(invalid(format!("repeated point name {p:?}")));
            }
        }
        let mut alpha = vec![None; n];
        let mut beta = vec![None; n];
        for (ci, c) in self.curves.iter().enumerate() {
            let slot = if c.kind.is_alpha() {
                &mut alpha
            } else {
                &mut beta
            };
            for &p in &c.points {
                if p >= n {
                    return Err(invalid(format!("curve {} lists unknown point {p}", c.name)));
                }
                if slot[p].replace(ci).is_some() {
                    return Err(invalid(format!(
                        "point {} lies twice on one family of curves",
                        self.point_names[p]
                    )));
                }
            }
            if (c.kind == CurveKind::AlphaArc) != c.ends.is_some() {
                return Err(invalid(format!(
                    "curve {}: only α-arcs have boundary endpoints",
                    c.name
                )));
            }
        }
        for p in 0..n {
            if alpha[p].is_none() || beta[p].is_none() {
                return Err(invalid(format!(
                    "point {} is not on both an α- and a β-curve",
                    self.point_names[p]
                )));
            }
        }
        self.point_alpha = alpha.into_iter().map(Option::unwrap).collect();
        self.point_beta = beta.into_iter().map(Option::unwrap).collect();

        let count = |k: CurveKind| self.curves.iter().filter(|c| c.kind == k).count();
        let (circles, arcs, betas) = (
            count(CurveKind::AlphaCircle),
            count(CurveKind::AlphaArc),
            count(CurveKind::BetaCircle),
        );
        if betas != self.genus {
            return Err(invalid(format!(
                "genus {} but {betas} β-circles",
                self.genus
            )));
        }
        match &self.circle {
            None => {
                if arcs != 0 || circles != self.genus {
                    return Err(invalid("a closed diagram needs g α-circles and no α-arcs"));
                }
            }
            Some(pmc) => {
                let k = pmc.genus();
                if arcs != 2 * k || circles + k != self.genus {
                    return Err(invalid(format!(
                        "boundary of genus {k} needs {} α-arcs and g-k α-circles",
                        2 * k
                    )));
                }
                let mut ends: Vec<[usize; 2]> = self
                    .curves
                    .iter()
                    .filter_map(|c| c.ends)
                    .map(|[a, b]| [a.min(b), a.max(b)])
                    .collect();
                ends.sort();
                if ends != pmc.canonical_matching() {
                    return Err(invalid("α-arc endpoints do not realise the matching"));
                }
            }
        }
        Ok(())
    }

    fn edge_ends(&self, e: Edge) -> (Vertex, Vertex) {
        match e {
            Edge::Segment {
                curve,
                index,
                forward,
            } => {
                let (s, t) = self.curves[curve].segment_ends(index);
                if forward {
                    (s, t)
                } else {
                    (t, s)
                }
            }
            Edge::Boundary { interval } => {
                let n = self.boundary_points();
                if interval == 0 {
                    (Vertex::Boundary(n), Vertex::Boundary(1))
                } else {
                    (Vertex::Boundary(interval), Vertex::Boundary(interval + 1))
                }
            }
        }
    }

    fn edge_class(&self, e: Edge) -> EdgeClass {
        match e {
            Edge::Boundary { .. } => EdgeClass::Boundary,
            Edge::Segment { curve, .. } if self.curves[curve].kind.is_alpha() => EdgeClass::Alpha,
            Edge::Segment { .. } => EdgeClass::Beta,
        }
    }

    fn validate_regions(&mut self) -> Result<()> {
        let nb = self.boundary_points();
        if self.regions.is_empty() || self.z_region >= self.regions.len() {
            return Err(invalid("z_region is not a region"));
        }
        let mut seg_use: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        let mut bd_use = vec![0usize; nb];
        let mut point_total = vec![0i64; self.n_points()];
        let mut bd_point_total = vec![0i64; nb + 1];
        let mut data = Vec::with_capacity(self.regions.len());
        for region in &self.regions {
            if region.chi > 1 {
                return Err(invalid(format!("region {} has χ > 1", region.name)));
            }
            let mut rd = RegionData {
                beta_boundary: vec![0; self.n_points()],
                del_boundary: vec![0; nb.saturating_sub(1)],
                ..Default::default()
            };
            for cycle in &region.cycles {
                if cycle.is_empty() {
                    return Err(invalid(format!(
                        "region {} has an empty boundary cycle",
                        region.name
                    )));
                }
                for (i, &e) in cycle.iter().enumerate() {
                    match e {
                        Edge::Segment {
                            curve,
                            index,
                            forward,
                        } => {
                            if curve >= self.curves.len()
                                || index >= self.curves[curve].segment_count()
                            {
                                return Err(invalid(format!(
                                    "region {} names a missing segment",
                                    region.name
                                )));
                            }
                            let u = seg_use.entry((curve, index)).or_default();
                            if forward {
                                u.0 += 1
                            } else {
                                u.1 += 1
                            }
                            if self.edge_class(e) == EdgeClass::Beta {
                                if let (Vertex::Point(s), Vertex::Point(t)) = self.edge_ends(e) {
                                    rd.beta_boundary[t] += 1;
                                    rd.beta_boundary[s] -= 1;
                                }
                            }
                        }
                        Edge::Boundary { interval } => {
                            if interval >= nb {
                                return Err(invalid(format!(
                                    "region {} names a missing boundary interval",
                                    region.name
                                )));
                            }
                            bd_use[interval] += 1;
                            if interval > 0 {
                                rd.del_boundary[interval - 1] += 1;
                            }
                        }
                    }
                    let next = cycle[(i + 1) % cycle.len()];
                    let v = self.edge_ends(e).1;
                    if v != self.edge_ends(next).0 {
                        return Err(invalid(format!(
                            "region {}: consecutive edges do not meet",
                            region.name
                        )));
                    }
                    let turn = self.edge_class(e) != self.edge_class(next);
                    match v {
                        Vertex::Point(p) if turn => {
                            rd.corners += 1;
                            *rd.point_corners.entry(p).or_default() += 1;
                            point_total[p] += 1;
                        }
                        Vertex::Point(p) => {
                            return Err(invalid(format!(
                                "region {} passes straight through {}",
                                region.name, self.point_names[p]
                            )));
                        }
                        Vertex::Boundary(b) if turn => {
                            rd.corners += 1;
                            bd_point_total[b] += 1;
                        }
                        Vertex::Boundary(_) => {
                            return Err(invalid(format!(
                                "region {} runs along the boundary without a turn",
                                region.name
                            )));
                        }
                        Vertex::Free if cycle.len() != 1 => {
                            return Err(invalid(format!(
                                "region {}: a closed loop must form its own cycle",
                                region.name
                            )));
                        }
                        Vertex::Free => {}
                    }
                }
            }
            data.push(rd);
        }
        for (ci, c) in self.curves.iter().enumerate() {
            for s in 0..c.segment_count() {
                if seg_use.get(&(ci, s)).copied().unwrap_or_default() != (1, 1) {
                    return Err(invalid(format!(
                        "segment {}:{s} must bound exactly two regions with opposite orientations",
                        c.name
                    )));
                }
            }
        }
        if let Some(j) = bd_use.iter().position(|&u| u != 1) {
            return Err(invalid(format!(
                "boundary interval {j} must bound exactly one region"
            )));
        }
        if let Some(p) = point_total.iter().position(|&t| t != 4) {
            return Err(invalid(format!(
                "point {} has {} corners, expected 4",
                self.point_names[p], point_total[p]
            )));
        }
        if let Some(b) = (1..=nb).find(|&b| bd_point_total[b] != 2) {
            return Err(invalid(format!(
                "boundary point {b} has {} corners, expected 2",
                bd_point_total[b]
            )));
        }
        if nb > 0
            && !self.regions[self.z_region]
                .cycles
                .iter()
                .flatten()
                .any(|e| *e == Edge::Boundary { interval: 0 })
        {
            return Err(invalid("z_region does not touch the basepoint interval"));
        }
        self.data = data;
        Ok(())
    }

    /// All generators, ordered lexicographically by point choice along the β-circles.
    pub fn enumerate_generators(&self) -> Vec<Generator> {
        let betas: Vec<&Curve> = self.beta_circles().collect();
        let mut used_alpha = vec![false; self.curves.len()];
        let mut current = Vec::with_capacity(betas.len());
        let mut out = Vec::new();
        self.extend_generators(&betas, &mut used_alpha, &mut current, &mut out);
        out
    }

    fn extend_generators(
        &self,
        betas: &[&Curve],
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Generator>,
    ) {
        let Some(beta) = betas.get(current.len()) else {
            let all_circles = self
                .curves
                .iter()
                .enumerate()
                .all(|(i, c)| c.kind != CurveKind::AlphaCircle || used[i]);
            if all_circles {
                out.push(Generator(current.clone()));
            }
            return;
        };
        for &p in &beta.points {
            let a = self.point_alpha[p];
            if used[a] {
                continue;
            }
            used[a] = true;
            current.push(p);
            self.extend_generators(betas, used, current, out);
            current.pop();
            used[a] = false;
        }
    }

    /// Whether `points` (in any order) form a generator; returns it in canonical order.
    pub fn generator_from_points(&self, points: &[usize]) -> Result<Generator> {
        let betas: Vec<usize> = (0..self.curves.len())
            .filter(|&i| self.curves[i].kind == CurveKind::BetaCircle)
            .collect();
        let mut ordered = Vec::with_capacity(betas.len());
        for &b in &betas {
            let on: Vec<usize> = points
                .iter()
                .copied()
                .filter(|&p| p < self.n_points() && self.point_beta[p] == b)
                .collect();
            if on.len() != 1 {
                return Err(Error::UnknownGenerator(format!(
                    "need exactly one point on β-curve {}",
                    self.curves[b].name
                )));
            }
            ordered.push(on[0]);
        }
        if ordered.len() != points.len() {
            return Err(Error::UnknownGenerator("stray points".into()));
        }
        let g = Generator(ordered);
        if !self.enumerate_generators().contains(&g) {
            return Err(Error::UnknownGenerator(self.generator_name(&g)));
        }
        Ok(g)
    }

    /// Point names joined by commas, in β-circle order.
    pub fn generator_name(&self, g: &Generator) -> String {
        g.0.iter()
            .map(|&p| self.point_names[p].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse a comma-separated list of point names, in any order.
    pub fn find_generator(&self, name: &str) -> Result<Generator> {
        let pts = name
            .split(',')
            .map(|s| {
                self.point_index(s.trim())
                    .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.generator_from_points(&pts)
    }

    /// Indices into the boundary matching of the pairs whose α-arc carries a point of `g`.
    pub fn occupied_arcs(&self, g: &Generator) -> Vec<usize> {
        let Some(pmc) = &self.circle else {
            return Vec::new();
        };
        let mut pairs: Vec<usize> =
            g.0.iter()
                .filter_map(|&p| self.curves[self.point_alpha[p]].ends)
                .filter_map(|[s, _]| pmc.pair_of(s))
                .collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn point_alpha_curve(&self, p: usize) -> usize {
        self.point_alpha[p]
    }

    pub fn point_beta_curve(&self, p: usize) -> usize {
        self.point_beta[p]
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DiagramFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("diagram files always serialise")
    }

    pub fn from_file(file: &DiagramFile) -> Result<Self> {
        let point_index: HashMap<&str, usize> = file
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_str(), i))
            .collect();
        let lookup = |name: &String| {
            point_index
                .get(name.as_str())
                .copied()
                .ok_or_else(|| invalid(format!("unknown point {name:?}")))
        };
        let mut curves = Vec::new();
        let groups = [
            (CurveKind::AlphaCircle, &file.curves.alpha_circles),
            (CurveKind::BetaCircle, &file.curves.beta_circles),
        ];
        for (kind, list) in groups {
            for c in list {
                let points = c.points.iter().map(lookup).collect::<Result<Vec<_>>>()?;
                curves.push(Curve {
                    name: c.name.clone(),
                    kind,
                    points,
                    ends: None,
                });
            }
        }
        for a in &file.curves.alpha_arcs {
            let points = a.points.iter().map(lookup).collect::<Result<Vec<_>>>()?;
            curves.push(Curve {
                name: a.name.clone(),
                kind: CurveKind::AlphaArc,
                points,
                ends: Some(a.ends),
            });
        }
        let curve_index: HashMap<&str, usize> = curves
            .iter()
            .enumerate()
            .map(|(i, c)| (c.name.as_str(), i))
            .collect();
        let parse_token = |tok: &str| -> Result<Edge> {
            let (neg, body) = match tok.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, tok.strip_prefix('+').unwrap_or(tok)),
            };
            let (name, idx) = body
                .rsplit_once(':')
                .ok_or_else(|| invalid(format!("bad edge token {tok:?}")))?;
            let index: usize = idx
                .parse()
                .map_err(|_| invalid(format!("bad edge token {tok:?}")))?;
            if name == "bd" {
                if neg {
                    return Err(invalid(format!(
                        "boundary interval {tok:?} traversed backwards"
                    )));
                }
                return Ok(Edge::Boundary { interval: index });
            }
            let curve = *curve_index
                .get(name)
                .ok_or_else(|| invalid(format!("unknown curve in token {tok:?}")))?;
            Ok(Edge::Segment {
                curve,
                index,
                forward: !neg,
            })
        };
        let mut regions = Vec::new();
        for (i, r) in file.regions.iter().enumerate() {
            let cycles = r
                .edges
                .cycles()
                .iter()
                .map(|c| c.iter().map(|t| parse_token(t)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            if let Some(arcs) = &r.boundary_arcs {
                let mut listed = arcs.clone();
                listed.sort_unstable();
                let mut found: Vec<usize> = cycles
                    .iter()
                    .flatten()
                    .filter_map(|e| match e {
                        Edge::Boundary { interval } => Some(*interval),
                        _ => None,
                    })
                    .collect();
                found.sort_unstable();
                if listed != found {
                    return Err(invalid(format!(
                        "region {i}: boundary_arcs disagree with its edges"
                    )));
                }
            }
            let name = r.name.clone().unwrap_or_else(|| format!("R{i}"));
            regions.push(Region {
                name,
                cycles,
                chi: r.chi,
            });
        }
        Self::new(
            file.genus,
            file.boundary.clone(),
            curves,
            file.points.clone(),
            regions,
            file.z_region,
        )
    }

    pub fn edge_token(&self, e: Edge) -> String {
        match e {
            Edge::Boundary { interval } => format!("bd:{interval}"),
            Edge::Segment {
                curve,
                index,
                forward,
            } => {
                format!(
                    "{}{}:{index}",
                    if forward { "" } else { "-" },
                    self.curves[curve].name
                )
            }
        }
    }

    pub fn to_file(&self) -> DiagramFile {
        let names = |c: &Curve| {
            c.points
                .iter()
                .map(|&p| self.point_names[p].clone())
                .collect::<Vec<_>>()
        };
        let circles = |k: CurveKind| {
            self.curves
                .iter()
                .filter(|c| c.kind == k)
                .map(|c| CircleSpec {
                    name: c.name.clone(),
                    points: names(c),
                })
                .collect::<Vec<_>>()
        };
        let alpha_arcs = self
            .curves
            .iter()
            .filter_map(|c| {
                c.ends.map(|ends| ArcSpec {
                    name: c.name.clone(),
                    ends,
                    points: names(c),
                })
            })
            .collect();
        let regions = self
            .regions
            .iter()
            .map(|r| {
                let cycles: Vec<Vec<String>> = r
                    .cycles
                    .iter()
                    .map(|c| c.iter().map(|&e| self.edge_token(e)).collect())
                    .collect();
                let edges = if cycles.len() == 1 {
                    EdgeSpec::Cycle(cycles.into_iter().next().unwrap_or_default())
                } else {
                    EdgeSpec::Cycles(cycles)
                };
                RegionSpec {
                    name: Some(r.name.clone()),
                    edges,
                    chi: r.chi,
                    boundary_arcs: None,
                }
            })
            .collect();
        DiagramFile {
            genus: self.genus,
            boundary: self.circle.as_ref().map(|c| (**c).clone()),
            curves: CurvesSpec {
                alpha_circles: circles(CurveKind::AlphaCircle),
                alpha_arcs,
                beta_circles: circles(CurveKind::BetaCircle),
            },
            points: self.point_names.clone(),
            regions,
            z_region: self.z_region,
        }
    }
}

impl fmt::Display for BorderedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.is_closed() {
            "closed"
        } else {
            "bordered"
        };
        write!(
            f,
            "{kind} diagram of genus {} with {} points and {} regions",
            self.genus,
            self.n_points(),
            self.regions.len()
        )
    }
}

/// On-disk form of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub genus: usize,
    #[serde(default)]
    pub boundary: Option<PointedMatchedCircle>,
    pub curves: CurvesSpec,
    pub points: Vec<String>,
    pub regions: Vec<RegionSpec>,
    pub z_region: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurvesSpec {
    #[serde(default)]
    pub alpha_circles: Vec<CircleSpec>,
    #[serde(default)]
    pub alpha_arcs: Vec<ArcSpec>,
    pub beta_circles: Vec<CircleSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleSpec {
    pub name: String,
    pub points: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcSpec {
    pub name: String,
    pub ends: [usize; 2],
    pub points: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub edges: EdgeSpec,
    #[serde(default = "default_chi")]
    pub chi: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_arcs: Option<Vec<usize>>,
}

fn default_chi() -> i64 {
    1
}

/// One boundary cycle, or several for regions that are not disks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeSpec {
    Cycle(Vec<String>),
    Cycles(Vec<Vec<String>>),
}

impl EdgeSpec {
    fn cycles(&self) -> Vec<Vec<String>> {
        match self {
            EdgeSpec::Cycle(c) => vec![c.clone()],
            EdgeSpec::Cycles(cs) => cs.clone(),
        }
    }
}
