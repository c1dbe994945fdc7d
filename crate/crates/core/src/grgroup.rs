//! The grading group `G'_Q(Z)`, its rationally generated subgroups, and the
//! double-coset solver that extracts relative λ-exponents.
//!
//! Elements are pairs `(m; α)` with `m ∈ Q` and `α ∈ H_1(Z, a; Q)`, multiplied by
//! `(m₁; α₁)·(m₂; α₂) = (m₁ + m₂ + μ(α₂, ∂α₁); α₁ + α₂)`. The central element
//! `λ = (1; 0)` acts on grading sets; the relative grading of two elements of
//! the same double coset space is the exponent of λ relating them.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, AffineSolution};
use crate::pmc::{H1Chain, PointedMatchedCircle};
use crate::rational::{self, Q};

pub type Circle = Arc<PointedMatchedCircle>;

fn same_circle(a: &Circle, b: &Circle) -> bool {
    Arc::ptr_eq(a, b) || a.same_as(b)
}

#[derive(Debug, Clone)]
pub struct GradingElement {
    circle: Circle,
    maslov: Q,
    h1: H1Chain,
}

impl PartialEq for GradingElement {
    fn eq(&self, other: &Self) -> bool {
        self.maslov == other.maslov
            && self.h1 == other.h1
            && same_circle(&self.circle, &other.circle)
    }
}

impl Eq for GradingElement {}

impl GradingElement {
    pub fn new(circle: Circle, maslov: Q, h1: H1Chain) -> Result<Self> {
        if h1.len() != circle.h1_dim() {
            return Err(Error::DimensionMismatch {
                expected: circle.h1_dim(),
                got: h1.len(),
            });
        }
        Ok(GradingElement { circle, maslov, h1 })
    }

    /// Convenience constructor from small integer fractions `(num, den)`.
    pub fn from_fracs(circle: &Circle, maslov: (i64, i64), h1: &[(i64, i64)]) -> Result<Self> {
        let h1 = H1Chain(h1.iter().map(|&(n, d)| rational::q(n, d)).collect());
        Self::new(circle.clone(), rational::q(maslov.0, maslov.1), h1)
    }

    pub fn identity(circle: &Circle) -> Self {
        GradingElement {
            circle: circle.clone(),
            maslov: Q::zero(),
            h1: H1Chain::zero(circle.h1_dim()),
        }
    }

    /// `λ^q = (q; 0)`.
    pub fn lambda_pow(circle: &Circle, q: Q) -> Self {
        GradingElement {
            circle: circle.clone(),
            maslov: q,
            h1: H1Chain::zero(circle.h1_dim()),
        }
    }

    pub fn circle(&self) -> &Circle {
        &self.circle
    }

    pub fn maslov(&self) -> &Q {
        &self.maslov
    }

    pub fn h1(&self) -> &H1Chain {
        &self.h1
    }

    pub fn is_identity(&self) -> bool {
        self.maslov.is_zero() && self.h1.is_zero()
    }

    pub fn is_central(&self) -> bool {
        self.h1.is_zero()
    }

    /// Whether the element lies in the integral group: `m ∈ ½Z`, `α` integral.
    pub fn is_integral(&self) -> bool {
        (&self.maslov * rational::int(2)).is_integer() && self.h1.is_integral()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !same_circle(&self.circle, &other.circle) {
            return Err(Error::CircleMismatch);
        }
        let twist = self.circle.twist(&self.h1, &other.h1)?;
        Ok(GradingElement {
            circle: self.circle.clone(),
            maslov: &self.maslov + &other.maslov + twist,
            h1: &self.h1 + &other.h1,
        })
    }

    pub fn inverse(&self) -> Self {
        let twist = self
            .circle
            .twist(&self.h1, &self.h1)
            .expect("dimension checked at construction");
        GradingElement {
            circle: self.circle.clone(),
            maslov: -&self.maslov + twist,
            h1: -&self.h1,
        }
    }

    /// `q·g`: every coefficient multiplied by `q`.
    pub fn scale(&self, q: &Q) -> Self {
        GradingElement {
            circle: self.circle.clone(),
            maslov: &self.maslov * q,
            h1: self.h1.scale(q),
        }
    }

    /// The anti-homomorphism `R: G'(-Z) → G'(Z)`, `R(m; α) = (m; r_*(α))`.
    ///
    /// `self` is read as living on `-Z`; the result lives on the reversed circle.
    pub fn reverse(&self) -> Self {
        let h1 = self
            .circle
            .reverse_orientation(&self.h1)
            .expect("dimension checked at construction");
        GradingElement {
            circle: Arc::new(self.circle.reversed()),
            maslov: self.maslov.clone(),
            h1,
        }
    }

    /// `R` with an explicit target circle, which must be the reverse of ours.
    pub fn reverse_onto(&self, target: &Circle) -> Result<Self> {
        if !self.circle.reversed().same_as(target) {
            return Err(Error::CircleMismatch);
        }
        let mut r = self.reverse();
        r.circle = target.clone();
        Ok(r)
    }

    /// Move to an equal circle object (used after parsing separate files).
    pub fn rebase(&self, circle: &Circle) -> Result<Self> {
        if !same_circle(&self.circle, circle) {
            return Err(Error::CircleMismatch);
        }
        Ok(GradingElement {
            circle: circle.clone(),
            ..self.clone()
        })
    }

    pub fn to_repr(&self) -> GradingRepr {
        GradingRepr {
            maslov: self.maslov.clone(),
            h1: self.h1.clone(),
        }
    }

    pub fn from_repr(circle: &Circle, repr: &GradingRepr) -> Result<Self> {
        Self::new(circle.clone(), repr.maslov.clone(), repr.h1.clone())
    }
}

impl fmt::Display for GradingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", rational::to_string(&self.maslov), self.h1)
    }
}

/// Text form `{"maslov":"3/2","h1":["0","2","1"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingRepr {
    #[serde(with = "rational::serde_q")]
    pub maslov: Q,
    pub h1: H1Chain,
}

/// Product `Π q_i·g_i` taken left to right, one factor per generator.
pub fn canonical_word(circle: &Circle, gens: &[GradingElement], coeffs: &[Q]) -> GradingElement {
    gens.iter()
        .zip(coeffs)
        .fold(GradingElement::identity(circle), |acc, (g, t)| {
            acc.mul(&g.scale(t)).expect("generators share the circle")
        })
}

/// Outcome of a membership query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Yes,
    No,
    /// The homology class is spanned and the subgroup contains every `λ^q`.
    IndeterminateYes,
}

impl Membership {
    pub fn holds(self) -> bool {
        !matches!(self, Membership::No)
    }
}

/// Subgroup of `G'_Q` generated by all rational multiples `q·g_i`.
#[derive(Debug, Clone)]
pub struct SubgroupSpan {
    circle: Circle,
    generators: Vec<GradingElement>,
    indeterminate: bool,
}

impl SubgroupSpan {
    pub fn new(circle: &Circle, generators: Vec<GradingElement>) -> Result<Self> {
        let generators = generators
            .into_iter()
            .map(|g| g.rebase(circle))
            .collect::<Result<Vec<_>>>()?;
        let indeterminate = Self::decide_indeterminate(circle, &generators);
        Ok(SubgroupSpan {
            circle: circle.clone(),
            generators,
            indeterminate,
        })
    }

    pub fn trivial(circle: &Circle) -> Self {
        SubgroupSpan {
            circle: circle.clone(),
            generators: Vec::new(),
            indeterminate: false,
        }
    }

    pub fn circle(&self) -> &Circle {
        &self.circle
    }

    pub fn generators(&self) -> &[GradingElement] {
        &self.generators
    }

    /// Whether the subgroup contains `λ^q` for every rational `q`.
    pub fn is_indeterminate(&self) -> bool {
        self.indeterminate
    }

    /// Central elements arise from a nonzero self-twist of a generator, from a
    /// nonzero commutator of two generators, or from a linear relation among the
    /// homology classes whose canonical word has nonzero Maslov component.
    fn decide_indeterminate(circle: &Circle, gens: &[GradingElement]) -> bool {
        let tw = |a: &H1Chain, b: &H1Chain| circle.twist(a, b).expect("dimension checked");
        for (i, g) in gens.iter().enumerate() {
            if !tw(&g.h1, &g.h1).is_zero() {
                return true;
            }
            for h in &gens[i + 1..] {
                if tw(&g.h1, &h.h1) != tw(&h.h1, &g.h1) {
                    return true;
                }
            }
        }
        let matrix = Self::h1_matrix(circle.h1_dim(), gens);
        let relations = linalg::Rref::new(&matrix, gens.len()).kernel();
        relations
            .iter()
            .any(|c| !canonical_word(circle, gens, c).maslov.is_zero())
    }

    /// Columns are the homology classes of `gens`.
    fn h1_matrix(dim: usize, gens: &[GradingElement]) -> Vec<Vec<Q>> {
        (0..dim)
            .map(|r| gens.iter().map(|g| g.h1.0[r].clone()).collect())
            .collect()
    }

    /// Coefficients `t` with `Σ t_i α_i = target`.
    pub fn solve_h1(&self, target: &H1Chain) -> Option<AffineSolution<Q>> {
        let matrix = Self::h1_matrix(self.circle.h1_dim(), &self.generators);
        linalg::solve_rational(&matrix, self.generators.len(), &target.0)
    }

    pub fn word(&self, coeffs: &[Q]) -> GradingElement {
        canonical_word(&self.circle, &self.generators, coeffs)
    }

    pub fn member(&self, g: &GradingElement) -> Result<Membership> {
        if !same_circle(&self.circle, &g.circle) {
            return Err(Error::CircleMismatch);
        }
        let Some(sol) = self.solve_h1(&g.h1) else {
            return Ok(Membership::No);
        };
        if self.indeterminate {
            return Ok(Membership::IndeterminateYes);
        }
        Ok(if self.word(&sol.particular).maslov == g.maslov {
            Membership::Yes
        } else {
            Membership::No
        })
    }

    /// Equality as subgroups, not as generating lists.
    pub fn same_subgroup(&self, other: &Self) -> bool {
        if !same_circle(&self.circle, &other.circle) || self.indeterminate != other.indeterminate {
            return false;
        }
        let contains_all = |p: &Self, q: &Self| {
            q.generators
                .iter()
                .all(|g| p.member(g).map(Membership::holds).unwrap_or(false))
        };
        contains_all(self, other) && contains_all(other, self)
    }

    pub fn to_repr(&self) -> Vec<GradingRepr> {
        self.generators
            .iter()
            .map(GradingElement::to_repr)
            .collect()
    }

    pub fn from_repr(circle: &Circle, reprs: &[GradingRepr]) -> Result<Self> {
        let gens = reprs
            .iter()
            .map(|r| GradingElement::from_repr(circle, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(circle, gens)
    }
}

impl fmt::Display for SubgroupSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Relative λ-exponent between two double cosets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RelativeGrading {
    /// Not in the same orbit of the λ-action.
    Distinct,
    Same {
        #[serde(with = "rational::serde_q")]
        q: Q,
    },
    /// Same orbit, but the orbit is fixed by a nontrivial `λ^q`.
    Indeterminate,
}

impl fmt::Display for RelativeGrading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelativeGrading::Distinct => write!(f, "Distinct"),
            RelativeGrading::Same { q } => write!(f, "Same({})", rational::to_string(q)),
            RelativeGrading::Indeterminate => write!(f, "Indeterminate"),
        }
    }
}

/// `left · rep · right`; a one-sided coset has the other subgroup trivial.
#[derive(Debug, Clone)]
pub struct DoubleCoset {
    pub left: SubgroupSpan,
    pub rep: GradingElement,
    pub right: SubgroupSpan,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DoubleCosetRepr {
    pub left: Vec<GradingRepr>,
    pub rep: GradingRepr,
    pub right: Vec<GradingRepr>,
}

impl DoubleCoset {
    pub fn new(left: SubgroupSpan, rep: GradingElement, right: SubgroupSpan) -> Result<Self> {
        if !same_circle(&left.circle, &rep.circle) || !same_circle(&right.circle, &rep.circle) {
            return Err(Error::CircleMismatch);
        }
        Ok(DoubleCoset { left, rep, right })
    }

    pub fn right_coset(subgroup: SubgroupSpan, rep: GradingElement) -> Result<Self> {
        let trivial = SubgroupSpan::trivial(&rep.circle);
        Self::new(subgroup, rep, trivial)
    }

    pub fn left_coset(rep: GradingElement, subgroup: SubgroupSpan) -> Result<Self> {
        let trivial = SubgroupSpan::trivial(&rep.circle);
        Self::new(trivial, rep, subgroup)
    }

    pub fn circle(&self) -> &Circle {
        &self.rep.circle
    }

    pub fn to_repr(&self) -> DoubleCosetRepr {
        DoubleCosetRepr {
            left: self.left.to_repr(),
            rep: self.rep.to_repr(),
            right: self.right.to_repr(),
        }
    }

    pub fn from_repr(circle: &Circle, repr: &DoubleCosetRepr) -> Result<Self> {
        Self::new(
            SubgroupSpan::from_repr(circle, &repr.left)?,
            GradingElement::from_repr(circle, &repr.rep)?,
            SubgroupSpan::from_repr(circle, &repr.right)?,
        )
    }

    fn same_grading_set(&self, other: &Self) -> bool {
        same_circle(self.circle(), other.circle())
            && self.left.same_subgroup(&other.left)
            && self.right.same_subgroup(&other.right)
    }

    /// Coefficients `(t, s)` with `Σ t_i α_{L,i} + rep.α + Σ s_j α_{R,j} = target`.
    fn solve_shift(&self, target: &H1Chain) -> Option<AffineSolution<Q>> {
        let nl = self.left.generators.len();
        let nr = self.right.generators.len();
        let rhs = target - &self.rep.h1;
        let matrix: Vec<Vec<Q>> = (0..self.circle().h1_dim())
            .map(|r| {
                self.left
                    .generators
                    .iter()
                    .chain(&self.right.generators)
                    .map(|g| g.h1.0[r].clone())
                    .collect()
            })
            .collect();
        linalg::solve_rational(&matrix, nl + nr, &rhs.0)
    }

    /// `word_L(t) · rep · word_R(s)` for stacked coefficients `(t, s)`.
    fn shifted(&self, coeffs: &[Q]) -> GradingElement {
        let nl = self.left.generators.len();
        let left = self.left.word(&coeffs[..nl]);
        let right = self.right.word(&coeffs[nl..]);
        left.mul(&self.rep)
            .and_then(|g| g.mul(&right))
            .expect("circles checked at construction")
    }

    /// Whether the Maslov component of `shifted` is constant on the solution set.
    fn maslov_is_determined(&self, sol: &AffineSolution<Q>) -> bool {
        if self.left.indeterminate || self.right.indeterminate {
            return false;
        }
        let base = self.shifted(&sol.particular).maslov;
        sol.kernel.iter().all(|k| {
            let moved: Vec<Q> = sol.particular.iter().zip(k).map(|(a, b)| a + b).collect();
            self.shifted(&moved).maslov == base
        })
    }

    /// The representative with homology class `target`.
    ///
    /// Uses the reduced-echelon solution with every free parameter set to zero.
    pub fn reduce(&self, target: &H1Chain) -> Result<GradingElement> {
        if target.len() != self.circle().h1_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.circle().h1_dim(),
                got: target.len(),
            });
        }
        let sol = self.solve_shift(target).ok_or(Error::NoSolution)?;
        if !self.maslov_is_determined(&sol) {
            return Err(Error::IndeterminateCoset);
        }
        Ok(self.shifted(&sol.particular))
    }

    /// The action of `λ^q` on the coset.
    pub fn lambda_shift(&self, q: &Q) -> Self {
        let lam = GradingElement::lambda_pow(self.circle(), q.clone());
        DoubleCoset {
            rep: lam.mul(&self.rep).expect("same circle"),
            ..self.clone()
        }
    }
}

impl fmt::Display for DoubleCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\\{}/{}", self.left, self.rep, self.right)
    }
}

/// The exponent `q` with `b = λ^q · a` as double cosets.
pub fn relative_lambda(a: &DoubleCoset, b: &DoubleCoset) -> Result<RelativeGrading> {
    if !a.same_grading_set(b) {
        return Err(Error::GradingSetMismatch);
    }
    let b_rep = b.rep.rebase(a.circle())?;
    let Some(sol) = a.solve_shift(&b_rep.h1) else {
        return Ok(RelativeGrading::Distinct);
    };
    if !a.maslov_is_determined(&sol) {
        return Ok(RelativeGrading::Indeterminate);
    }
    let moved = a.shifted(&sol.particular);
    Ok(RelativeGrading::Same {
        q: &b_rep.maslov - &moved.maslov,
    })
}

pub fn coset_reduce(dc: &DoubleCoset, target: &H1Chain) -> Result<GradingElement> {
    dc.reduce(target)
}

/// `λ^q` as a convenience for callers holding only a circle.
pub fn lambda(circle: &Circle) -> GradingElement {
    GradingElement::lambda_pow(circle, Q::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};

    fn torus() -> Circle {
        Arc::new(PointedMatchedCircle::torus())
    }

    fn el(c: &Circle, m: (i64, i64), h: [(i64, i64); 3]) -> GradingElement {
        GradingElement::from_fracs(c, m, &h).unwrap()
    }

    fn eli(c: &Circle, m: (i64, i64), h: [i64; 3]) -> GradingElement {
        el(c, m, [(h[0], 1), (h[1], 1), (h[2], 1)])
    }

    #[test]
    fn identity_and_lambda() {
        let c = torus();
        let e = GradingElement::identity(&c);
        assert_eq!(e.h1().len(), 3);
        assert!(e.is_identity());
        let g = eli(&c, (1, 1), [-1, 0, 0]);
        assert_eq!(e.mul(&g).unwrap(), g);
        assert_eq!(g.mul(&e).unwrap(), g);
        assert_eq!(
            GradingElement::lambda_pow(&c, int(1)),
            eli(&c, (1, 1), [0, 0, 0])
        );
        assert_eq!(GradingElement::lambda_pow(&c, int(0)), e);
        assert_eq!(
            GradingElement::lambda_pow(&c, q(3, 2)),
            eli(&c, (3, 2), [0, 0, 0])
        );
    }

    #[test]
    fn product_identity_from_trefoil_reduction() {
        let c = torus();
        let a = el(&c, (3, 4), [(-3, 2), (-3, 2), (0, 1)]);
        let b = eli(&c, (3, 2), [0, 2, 1]);
        let d = el(&c, (3, 4), [(1, 2), (-1, 2), (-1, 1)]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, el(&c, (0, 1), [(-3, 2), (1, 2), (1, 1)]));
        assert_eq!(ab.mul(&d).unwrap(), eli(&c, (1, 1), [-1, 0, 0]));
    }

    #[test]
    fn solid_torus_relation() {
        let c = torus();
        let p = eli(&c, (-1, 2), [0, 1, 0])
            .mul(&eli(&c, (-1, 2), [1, 0, 0]))
            .unwrap()
            .mul(&lambda(&c))
            .unwrap();
        assert_eq!(p, eli(&c, (-1, 2), [1, 1, 0]));
    }

    #[test]
    fn inverse_examples() {
        let c = torus();
        let e = GradingElement::identity(&c);
        assert_eq!(e.inverse(), e);
        assert_eq!(lambda(&c).inverse(), eli(&c, (-1, 1), [0, 0, 0]));
        let g = eli(&c, (-1, 2), [1, 1, 0]);
        assert_eq!(g.inverse(), eli(&c, (1, 2), [-1, -1, 0]));
        assert!(g.mul(&g.inverse()).unwrap().is_identity());
    }

    #[test]
    fn scale_examples() {
        let c = torus();
        assert_eq!(
            eli(&c, (-1, 2), [1, 1, 0]).scale(&q(-3, 2)),
            el(&c, (3, 4), [(-3, 2), (-3, 2), (0, 1)])
        );
        assert!(eli(&c, (5, 1), [1, 2, 3]).scale(&int(0)).is_identity());
        assert_eq!(
            eli(&c, (-3, 2), [-1, 1, 2]).scale(&q(-1, 2)),
            el(&c, (3, 4), [(1, 2), (-1, 2), (-1, 1)])
        );
    }

    #[test]
    fn reverse_examples() {
        let c = torus();
        assert_eq!(
            GradingElement::lambda_pow(&c, q(2, 3)).reverse(),
            GradingElement::lambda_pow(&c, q(2, 3))
        );
        assert_eq!(
            eli(&c, (-1, 2), [1, 0, 0]).reverse(),
            eli(&c, (-1, 2), [0, 0, -1])
        );
        let g = eli(&c, (1, 1), [2, 3, 4]);
        assert_eq!(g.reverse().reverse(), g);
        let other = Arc::new(PointedMatchedCircle::new(4, vec![[1, 2], [3, 4]]).unwrap());
        assert_eq!(g.reverse_onto(&other), Err(Error::CircleMismatch));
    }

    #[test]
    fn circle_mismatch() {
        let c = torus();
        let other = Arc::new(PointedMatchedCircle::new(4, vec![[1, 2], [3, 4]]).unwrap());
        let g = GradingElement::identity(&c);
        let h = GradingElement::identity(&other);
        assert_eq!(g.mul(&h), Err(Error::CircleMismatch));
    }

    #[test]
    fn span_indeterminacy_examples() {
        let c = torus();
        assert!(!SubgroupSpan::new(&c, vec![eli(&c, (-3, 2), [-1, 1, 2])])
            .unwrap()
            .is_indeterminate());
        assert!(!SubgroupSpan::new(&c, vec![eli(&c, (-1, 2), [1, 1, 0])])
            .unwrap()
            .is_indeterminate());
        assert!(SubgroupSpan::new(
            &c,
            vec![eli(&c, (0, 1), [1, 0, 0]), eli(&c, (0, 1), [0, 1, 0])]
        )
        .unwrap()
        .is_indeterminate());
        // A dependent pair whose relation word is central but not trivial.
        assert!(SubgroupSpan::new(
            &c,
            vec![eli(&c, (1, 1), [1, 0, 1]), eli(&c, (0, 1), [2, 0, 2])]
        )
        .unwrap()
        .is_indeterminate());
        assert!(!SubgroupSpan::new(
            &c,
            vec![eli(&c, (1, 1), [1, 0, 1]), eli(&c, (2, 1), [2, 0, 2])]
        )
        .unwrap()
        .is_indeterminate());
    }

    #[test]
    fn explicit_central_word_for_noncommuting_pair() {
        // The commutator of (0;1,0,0) and (0;0,1,0) is a nontrivial power of λ.
        let c = torus();
        let g = eli(&c, (0, 1), [1, 0, 0]);
        let h = eli(&c, (0, 1), [0, 1, 0]);
        let comm = g
            .mul(&h)
            .unwrap()
            .mul(&g.inverse())
            .unwrap()
            .mul(&h.inverse())
            .unwrap();
        assert!(comm.is_central());
        assert!(!comm.maslov().is_zero());
    }

    #[test]
    fn membership_examples() {
        let c = torus();
        let p = SubgroupSpan::new(&c, vec![eli(&c, (-1, 2), [1, 1, 0])]).unwrap();
        assert_eq!(
            p.member(&el(&c, (3, 4), [(-3, 2), (-3, 2), (0, 1)]))
                .unwrap(),
            Membership::Yes
        );
        assert_eq!(
            p.member(&GradingElement::identity(&c)).unwrap(),
            Membership::Yes
        );
        assert_eq!(
            p.member(&eli(&c, (0, 1), [1, 1, 0])).unwrap(),
            Membership::No
        );
        assert_eq!(
            p.member(&eli(&c, (0, 1), [1, 0, 0])).unwrap(),
            Membership::No
        );
        let ind = SubgroupSpan::new(
            &c,
            vec![eli(&c, (0, 1), [1, 0, 0]), eli(&c, (0, 1), [0, 1, 0])],
        )
        .unwrap();
        assert_eq!(
            ind.member(&eli(&c, (7, 1), [2, 1, 0])).unwrap(),
            Membership::IndeterminateYes
        );
        assert_eq!(
            ind.member(&eli(&c, (7, 1), [0, 0, 1])).unwrap(),
            Membership::No
        );
        assert_eq!(
            SubgroupSpan::trivial(&c)
                .member(&GradingElement::identity(&c))
                .unwrap(),
            Membership::Yes
        );
    }

    fn trefoil_cosets(c: &Circle) -> (DoubleCoset, DoubleCoset) {
        let left = SubgroupSpan::new(c, vec![eli(c, (-1, 2), [1, 1, 0])]).unwrap();
        let right = SubgroupSpan::new(c, vec![eli(c, (-3, 2), [-1, 1, 2])]).unwrap();
        let y2 =
            DoubleCoset::new(left.clone(), eli(c, (-1, 2), [-1, 0, 0]), right.clone()).unwrap();
        let y1 = DoubleCoset::new(left, eli(c, (3, 2), [0, 2, 1]), right).unwrap();
        (y2, y1)
    }

    #[test]
    fn relative_lambda_trefoil() {
        let c = torus();
        let (y2, y1) = trefoil_cosets(&c);
        assert_eq!(
            relative_lambda(&y2, &y1).unwrap(),
            RelativeGrading::Same { q: q(3, 2) }
        );
        assert_eq!(
            relative_lambda(&y1, &y2).unwrap(),
            RelativeGrading::Same { q: q(-3, 2) }
        );
        assert_eq!(
            relative_lambda(&y1, &y1).unwrap(),
            RelativeGrading::Same { q: int(0) }
        );
    }

    #[test]
    fn relative_lambda_unknot_magnitude() {
        let c = torus();
        let left = SubgroupSpan::new(&c, vec![eli(&c, (-1, 2), [1, 1, 0])]).unwrap();
        let right = SubgroupSpan::new(&c, vec![eli(&c, (1, 2), [-1, 1, 2])]).unwrap();
        let b1 =
            DoubleCoset::new(left.clone(), eli(&c, (-1, 2), [0, 1, 0]), right.clone()).unwrap();
        let b2 = DoubleCoset::new(left, eli(&c, (-1, 2), [0, 0, -1]), right).unwrap();
        let RelativeGrading::Same { q: r } = relative_lambda(&b1, &b2).unwrap() else {
            panic!()
        };
        assert_eq!(r, q(1, 2));
    }

    #[test]
    fn relative_lambda_mismatch_and_distinct() {
        let c = torus();
        let (y2, _) = trefoil_cosets(&c);
        let other =
            DoubleCoset::right_coset(SubgroupSpan::trivial(&c), GradingElement::identity(&c))
                .unwrap();
        assert_eq!(relative_lambda(&y2, &other), Err(Error::GradingSetMismatch));
        let a = DoubleCoset::right_coset(SubgroupSpan::trivial(&c), GradingElement::identity(&c))
            .unwrap();
        let b = DoubleCoset::right_coset(SubgroupSpan::trivial(&c), eli(&c, (0, 1), [1, 0, 0]))
            .unwrap();
        assert_eq!(relative_lambda(&a, &b).unwrap(), RelativeGrading::Distinct);
    }

    #[test]
    fn relative_lambda_indeterminate() {
        let c = torus();
        let ind = SubgroupSpan::new(
            &c,
            vec![eli(&c, (0, 1), [1, 0, 0]), eli(&c, (0, 1), [0, 1, 0])],
        )
        .unwrap();
        let a = DoubleCoset::right_coset(ind.clone(), GradingElement::identity(&c)).unwrap();
        let b = DoubleCoset::right_coset(ind, eli(&c, (5, 1), [1, 1, 0])).unwrap();
        assert_eq!(
            relative_lambda(&a, &b).unwrap(),
            RelativeGrading::Indeterminate
        );
        // Two commuting subgroups whose intersection twists the Maslov component.
        let l = SubgroupSpan::new(&c, vec![eli(&c, (0, 1), [1, 0, 0])]).unwrap();
        let r = SubgroupSpan::new(&c, vec![eli(&c, (1, 1), [1, 0, 0])]).unwrap();
        let a = DoubleCoset::new(l.clone(), GradingElement::identity(&c), r.clone()).unwrap();
        assert_eq!(
            relative_lambda(&a, &a).unwrap(),
            RelativeGrading::Indeterminate
        );
    }

    #[test]
    fn coset_reduce_examples() {
        let c = torus();
        let (_, y1) = trefoil_cosets(&c);
        assert_eq!(
            coset_reduce(&y1, &H1Chain::from_ints(&[-1, 0, 0])).unwrap(),
            eli(&c, (1, 1), [-1, 0, 0])
        );
        assert_eq!(
            coset_reduce(&y1, &H1Chain::from_ints(&[0, 2, 1])).unwrap(),
            y1.rep
        );
        let left = SubgroupSpan::new(&c, vec![eli(&c, (-1, 2), [1, 1, 0])]).unwrap();
        let right = SubgroupSpan::new(&c, vec![eli(&c, (1, 2), [-1, 1, 2])]).unwrap();
        let b1 = DoubleCoset::new(left, eli(&c, (-1, 2), [0, 1, 0]), right).unwrap();
        assert_eq!(
            coset_reduce(&b1, &H1Chain::from_ints(&[0, 0, -1])).unwrap(),
            eli(&c, (-1, 1), [0, 0, -1])
        );
        let one_sided =
            DoubleCoset::right_coset(SubgroupSpan::trivial(&c), GradingElement::identity(&c))
                .unwrap();
        assert_eq!(
            coset_reduce(&one_sided, &H1Chain::from_ints(&[1, 0, 0])),
            Err(Error::NoSolution)
        );
        let ind = SubgroupSpan::new(
            &c,
            vec![eli(&c, (0, 1), [1, 0, 0]), eli(&c, (0, 1), [0, 1, 0])],
        )
        .unwrap();
        let dc = DoubleCoset::right_coset(ind, GradingElement::identity(&c)).unwrap();
        assert_eq!(
            coset_reduce(&dc, &H1Chain::from_ints(&[1, 0, 0])),
            Err(Error::IndeterminateCoset)
        );
    }

    #[test]
    fn integrality_predicate() {
        let c = torus();
        assert!(eli(&c, (-1, 2), [1, 1, 0]).is_integral());
        assert!(!el(&c, (3, 4), [(-3, 2), (-3, 2), (0, 1)]).is_integral());
    }

    #[test]
    fn repr_roundtrip_text_form() {
        let c = torus();
        let g = eli(&c, (3, 2), [0, 2, 1]);
        let s = serde_json::to_string(&g.to_repr()).unwrap();
        assert_eq!(s, r#"{"maslov":"3/2","h1":["0","2","1"]}"#);
        let back: GradingRepr = serde_json::from_str(&s).unwrap();
        assert_eq!(GradingElement::from_repr(&c, &back).unwrap(), g);
    }
}
