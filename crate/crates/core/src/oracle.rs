//! Side-by-side comparison of the two routes to the relative rational
//! grading of a glued diagram: bordered pieces paired through the grading
//! group, and the closed-diagram domain formula.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{glue, BorderedDiagram, Generator, GluedDiagram, Ring};
use crate::error::{Error, Result};
use crate::grgroup::{relative_lambda, DoubleCoset, RelativeGrading};
use crate::modules::Side;
use crate::rational::{self, Q};

/// What the closed-diagram formula says about a pair of generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClosedOutcome {
    Value {
        #[serde(with = "rational::serde_q")]
        q: Q,
    },
    NoRationalDomain,
    Indeterminate,
}

impl fmt::Display for ClosedOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedOutcome::Value { q } => write!(f, "{}", rational::to_string(q)),
            ClosedOutcome::NoRationalDomain => write!(f, "no rational domain"),
            ClosedOutcome::Indeterminate => write!(f, "indeterminate"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRow {
    pub from: String,
    pub to: String,
    pub bordered: RelativeGrading,
    pub closed: ClosedOutcome,
}

impl OracleRow {
    pub fn agrees(&self) -> bool {
        match (&self.bordered, &self.closed) {
            (RelativeGrading::Same { q: a }, ClosedOutcome::Value { q: b }) => a == b,
            (RelativeGrading::Distinct, ClosedOutcome::NoRationalDomain) => true,
            (RelativeGrading::Indeterminate, ClosedOutcome::Indeterminate) => true,
            _ => false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub glued: GluedDiagram,
    pub rows: Vec<OracleRow>,
}

impl OracleReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(OracleRow::agrees)
    }
}

/// Base generator of the spin^c class containing `x`.
fn class_base<'a>(classes: &'a [Vec<Generator>], x: &Generator) -> &'a Generator {
    classes
        .iter()
        .find(|c| c.contains(x))
        .map(|c| &c[0])
        .expect("classes cover every generator")
}

fn same_class(classes: &[Vec<Generator>], x: &Generator, y: &Generator) -> bool {
    classes.iter().any(|c| c.contains(x) && c.contains(y))
}

/// Bordered grading of a glued generator, with the base generators of its
/// halves' spin^c classes as reference points.
fn tensor_grading(
    d1: &BorderedDiagram,
    d2: &BorderedDiagram,
    base1: &Generator,
    base2: &Generator,
    left: &Generator,
    right: &Generator,
) -> Result<DoubleCoset> {
    let a = d1.generator_grading(base1, left, Side::A)?;
    let d = d2.generator_grading(base2, right, Side::D)?;
    let circle = a.circle().clone();
    let rep = a.rep.mul(&d.rep.rebase(&circle)?)?;
    let right_sub = crate::grgroup::SubgroupSpan::new(&circle, d.right.generators().to_vec())?;
    DoubleCoset::new(a.left, rep, right_sub)
}

/// Glue `d1` (type-A side) to `d2` (type-D side) and compare, for every
/// ordered pair of distinct glued generators whose halves share spin^c
/// structures, the bordered λ-exponent with the closed formula.
///
/// The bordered exponent from `x` to `y` is `-(e + n_x + n_y)(B)` for
/// `B ∈ π₂(x, y)`, which is the closed formula evaluated from `y` to `x`.
pub fn glue_oracle(d1: &BorderedDiagram, d2: &BorderedDiagram) -> Result<OracleReport> {
    let glued = glue(d1, d2)?;
    let classes1 = d1.generator_classes(Ring::Z);
    let classes2 = d2.generator_classes(Ring::Z);
    let closed = &glued.diagram;
    let mut rows = Vec::new();
    for x in &glued.generators {
        for y in &glued.generators {
            if x == y
                || !same_class(&classes1, &x.left, &y.left)
                || !same_class(&classes2, &x.right, &y.right)
            {
                continue;
            }
            let b1 = class_base(&classes1, &x.left);
            let b2 = class_base(&classes2, &x.right);
            let tx = tensor_grading(d1, d2, b1, b2, &x.left, &x.right)?;
            let ty = tensor_grading(d1, d2, b1, b2, &y.left, &y.right)?;
            let bordered = relative_lambda(&tx, &ty)?;
            let closed_value = match closed.closed_relative_grading(&y.glued, &x.glued) {
                Ok(q) => ClosedOutcome::Value { q },
                Err(Error::NoRationalDomain { .. }) => ClosedOutcome::NoRationalDomain,
                Err(Error::IndeterminateGrading) => ClosedOutcome::Indeterminate,
                Err(e) => return Err(e),
            };
            rows.push(OracleRow {
                from: closed.generator_name(&x.glued),
                to: closed.generator_name(&y.glued),
                bordered,
                closed: closed_value,
            });
        }
    }
    Ok(OracleReport { glued, rows })
}
