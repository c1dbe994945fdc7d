//! Domains: linear solving for `π₂(x, y)`, Euler and point measures, `g'(B)`,
//! periodic subgroups, diagram-derived gradings and the closed-diagram grading.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{BorderedDiagram, Generator};
use crate::error::{Error, Result};
use crate::grgroup::{DoubleCoset, GradingElement, SubgroupSpan};
use crate::linalg;
use crate::modules::Side;
use crate::pmc::H1Chain;
use crate::rational::{self, Q};

/// Rational multiplicities, one per region.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Domain(#[serde(with = "rational::serde_q_vec")] pub Vec<Q>);

impl Domain {
    pub fn zero(n_regions: usize) -> Self {
        Domain(vec![Q::zero(); n_regions])
    }

    pub fn region(n_regions: usize, r: usize) -> Self {
        let mut d = Self::zero(n_regions);
        d.0[r] = rational::one();
        d
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, q: &Q) -> Self {
        Domain(self.0.iter().map(|c| c * q).collect())
    }

    /// Concatenation `B₁ * B₂`, which on multiplicities is the sum.
    pub fn add(&self, other: &Self) -> Self {
        Domain(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Domain(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(rational::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ring {
    Z,
    Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi2Solution {
    pub particular: Domain,
    pub periodic_basis: Vec<Domain>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainBoundaries {
    pub is_connecting: bool,
    pub del_boundary: H1Chain,
}

impl BorderedDiagram {
    fn check_domain(&self, b: &Domain) -> Result<()> {
        if b.0.len() != self.regions.len() {
            return Err(Error::DimensionMismatch {
                expected: self.regions.len(),
                got: b.0.len(),
            });
        }
        Ok(())
    }

    fn check_generator(&self, x: &Generator) -> Result<()> {
        if x.0.len() != self.genus || x.0.iter().any(|&p| p >= self.n_points()) {
            return Err(Error::UnknownGenerator(format!("{:?}", x.0)));
        }
        Ok(())
    }

    /// `x - y` as a 0-chain on intersection points.
    fn corner_rhs(&self, x: &Generator, y: &Generator) -> Vec<i64> {
        let mut rhs = vec![0i64; self.n_points()];
        for &p in &x.0 {
            rhs[p] += 1;
        }
        for &p in &y.0 {
            rhs[p] -= 1;
        }
        rhs
    }

    /// Regions that carry an unknown: everything except the basepoint region.
    fn free_regions(&self) -> Vec<usize> {
        (0..self.regions.len())
            .filter(|&r| r != self.z_region)
            .collect()
    }

    fn corner_matrix(&self, cols: &[usize]) -> Vec<Vec<i64>> {
        (0..self.n_points())
            .map(|p| {
                cols.iter()
                    .map(|&r| self.data[r].beta_boundary[p])
                    .collect()
            })
            .collect()
    }

    fn embed(&self, cols: &[usize], values: Vec<Q>) -> Domain {
        let mut d = Domain::zero(self.regions.len());
        for (&r, v) in cols.iter().zip(values) {
            d.0[r] = v;
        }
        d
    }

    /// Connecting domains from `x` to `y` with `n_z = 0`, as an affine space.
    pub fn solve_pi2(&self, x: &Generator, y: &Generator, ring: Ring) -> Option<Pi2Solution> {
        let cols = self.free_regions();
        let matrix = self.corner_matrix(&cols);
        let rhs = self.corner_rhs(x, y);
        match ring {
            Ring::Q => {
                let mq: Vec<Vec<Q>> = matrix
                    .iter()
                    .map(|row| row.iter().map(|&v| rational::int(v)).collect())
                    .collect();
                let rq: Vec<Q> = rhs.iter().map(|&v| rational::int(v)).collect();
                let sol = linalg::solve_rational(&mq, cols.len(), &rq)?;
                Some(Pi2Solution {
                    particular: self.embed(&cols, sol.particular),
                    periodic_basis: sol
                        .kernel
                        .into_iter()
                        .map(|k| self.embed(&cols, k))
                        .collect(),
                })
            }
            Ring::Z => {
                let mz: Vec<Vec<BigInt>> = matrix
                    .iter()
                    .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                    .collect();
                let rz: Vec<BigInt> = rhs.iter().map(|&v| BigInt::from(v)).collect();
                let sol = linalg::solve_integer(&mz, cols.len(), &rz)?;
                let lift = |v: Vec<BigInt>| v.into_iter().map(Q::from_integer).collect::<Vec<_>>();
                Some(Pi2Solution {
                    particular: self.embed(&cols, lift(sol.particular)),
                    periodic_basis: sol
                        .kernel
                        .into_iter()
                        .map(|k| self.embed(&cols, lift(k)))
                        .collect(),
                })
            }
        }
    }

    /// Whether `b` satisfies `∂(∂B ∩ β) = x - y` and `n_z(B) = 0`.
    pub fn is_connecting(&self, b: &Domain, x: &Generator, y: &Generator) -> Result<bool> {
        self.check_domain(b)?;
        self.check_generator(x)?;
        self.check_generator(y)?;
        if !b.0[self.z_region].is_zero() {
            return Ok(false);
        }
        let rhs = self.corner_rhs(x, y);
        Ok((0..self.n_points()).all(|p| {
            let lhs: Q = self
                .data
                .iter()
                .zip(&b.0)
                .map(|(rd, c)| c * rational::int(rd.beta_boundary[p]))
                .sum();
            lhs == rational::int(rhs[p])
        }))
    }

    /// `∂^∂B`, the part of `∂B` on the boundary circle.
    pub fn del_boundary(&self, b: &Domain) -> Result<H1Chain> {
        self.check_domain(b)?;
        let circle = self
            .circle
            .as_ref()
            .ok_or(Error::ClosedDiagramHasNoBoundary)?;
        let mut out = vec![Q::zero(); circle.h1_dim()];
        for (rd, c) in self.data.iter().zip(&b.0) {
            for (slot, &k) in out.iter_mut().zip(&rd.del_boundary) {
                *slot += c * rational::int(k);
            }
        }
        Ok(H1Chain(out))
    }

    pub fn domain_boundaries(
        &self,
        b: &Domain,
        x: &Generator,
        y: &Generator,
    ) -> Result<DomainBoundaries> {
        let del_boundary = self.del_boundary(b)?;
        Ok(DomainBoundaries {
            is_connecting: self.is_connecting(b, x, y)?,
            del_boundary,
        })
    }

    /// `Σ_r B_r (χ_r - corners_r / 4)`.
    pub fn euler_measure(&self, b: &Domain) -> Result<Q> {
        self.check_domain(b)?;
        Ok(self
            .regions
            .iter()
            .zip(&self.data)
            .zip(&b.0)
            .map(|((r, rd), c)| c * (rational::int(r.chi) - rational::q(rd.corners, 4)))
            .sum())
    }

    /// Quadrant-averaged multiplicity of `b` at the points of `x`, summed.
    pub fn point_measure(&self, b: &Domain, x: &Generator) -> Result<Q> {
        self.check_domain(b)?;
        self.check_generator(x)?;
        Ok(x.0
            .iter()
            .flat_map(|p| {
                self.data.iter().zip(&b.0).map(move |(rd, c)| {
                    c * rational::q(rd.point_corners.get(p).copied().unwrap_or(0), 4)
                })
            })
            .sum())
    }

    /// `e(B) + n_x(B) + n_y(B)`.
    pub fn measure_sum(&self, b: &Domain, x: &Generator, y: &Generator) -> Result<Q> {
        Ok(self.euler_measure(b)? + self.point_measure(b, x)? + self.point_measure(b, y)?)
    }

    /// `g'(B) = (-e(B) - n_x(B) - n_y(B); ∂^∂B)`.
    pub fn g_prime(&self, b: &Domain, x: &Generator, y: &Generator) -> Result<GradingElement> {
        let circle = self
            .circle
            .as_ref()
            .ok_or(Error::ClosedDiagramHasNoBoundary)?;
        if !self.is_connecting(b, x, y)? {
            return Err(Error::NotConnecting);
        }
        GradingElement::new(
            circle.clone(),
            -self.measure_sum(b, x, y)?,
            self.del_boundary(b)?,
        )
    }

    /// Rational span of `g'` over the periodic domains at `x0`, passed through
    /// the reversal map on the D side.
    pub fn periodic_subgroup(&self, x0: &Generator, side: Side) -> Result<SubgroupSpan> {
        let circle = self
            .circle
            .as_ref()
            .ok_or(Error::ClosedDiagramHasNoBoundary)?;
        self.check_generator(x0)?;
        let basis = self
            .solve_pi2(x0, x0, Ring::Q)
            .map(|s| s.periodic_basis)
            .unwrap_or_default();
        let gens = basis
            .iter()
            .map(|p| self.g_prime(p, x0, x0))
            .collect::<Result<Vec<_>>>()?;
        match side {
            Side::A => SubgroupSpan::new(circle, gens),
            Side::D => {
                let target = Arc::new(circle.reversed());
                let gens = gens
                    .iter()
                    .map(|g| g.reverse_onto(&target))
                    .collect::<Result<Vec<_>>>()?;
                SubgroupSpan::new(&target, gens)
            }
        }
    }

    /// The grading of `x` relative to the base generator `x0`.
    ///
    /// Side A gives the coset `P'·g'(B)`; side D gives `R(g'(B))·R(P')`, living
    /// on the reversed circle.
    pub fn generator_grading(
        &self,
        x0: &Generator,
        x: &Generator,
        side: Side,
    ) -> Result<DoubleCoset> {
        let sol = self
            .solve_pi2(x0, x, Ring::Q)
            .ok_or_else(|| Error::NoConnectingDomain {
                from: self.generator_name(x0),
                to: self.generator_name(x),
            })?;
        let g = self.g_prime(&sol.particular, x0, x)?;
        let subgroup = self.periodic_subgroup(x0, side)?;
        match side {
            Side::A => DoubleCoset::right_coset(subgroup, g),
            Side::D => {
                let rep = g.reverse_onto(subgroup.circle())?;
                DoubleCoset::left_coset(rep, subgroup)
            }
        }
    }

    /// Same spin^c structure: an integral connecting domain exists.
    pub fn same_spinc(&self, x: &Generator, y: &Generator) -> bool {
        self.solve_pi2(x, y, Ring::Z).is_some()
    }

    /// Torsion difference of spin^c structures: a rational connecting domain exists.
    pub fn torsion_difference(&self, x: &Generator, y: &Generator) -> bool {
        self.solve_pi2(x, y, Ring::Q).is_some()
    }

    /// Generators grouped by the relation "connected by a domain over `ring`",
    /// each class in enumeration order.
    pub fn generator_classes(&self, ring: Ring) -> Vec<Vec<Generator>> {
        let mut classes: Vec<Vec<Generator>> = Vec::new();
        for g in self.enumerate_generators() {
            match classes
                .iter_mut()
                .find(|c| self.solve_pi2(&c[0], &g, ring).is_some())
            {
                Some(c) => c.push(g),
                None => classes.push(vec![g]),
            }
        }
        classes
    }

    /// `e(B) + n_x(B) + n_y(B)` for any rational `B ∈ π₂(x, y)` of a closed diagram.
    pub fn closed_relative_grading(&self, x: &Generator, y: &Generator) -> Result<Q> {
        if !self.is_closed() {
            return Err(Error::InvalidDiagram(
                "the closed grading formula needs a closed diagram".into(),
            ));
        }
        self.check_generator(x)?;
        self.check_generator(y)?;
        let sol = self
            .solve_pi2(x, y, Ring::Q)
            .ok_or_else(|| Error::NoRationalDomain {
                from: self.generator_name(x),
                to: self.generator_name(y),
            })?;
        for p in &sol.periodic_basis {
            if !self.measure_sum(p, x, y)?.is_zero() {
                return Err(Error::IndeterminateGrading);
            }
        }
        self.measure_sum(&sol.particular, x, y)
    }

    /// Number of corners of region `r` at intersection point `p`.
    pub fn corners_at(&self, r: usize, p: usize) -> usize {
        self.data[r]
            .point_corners
            .get(&p)
            .and_then(|c| c.to_usize())
            .unwrap_or(0)
    }

    pub fn corner_count(&self, r: usize) -> usize {
        self.data[r].corners.to_usize().unwrap_or(0)
    }
}
