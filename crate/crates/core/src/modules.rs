//! Graded type-A and type-D module presentations over the algebra of a
//! pointed matched circle: grading checks, box-tensor generators, and the
//! relative rational grading between tensor generators.
//!
//! Idempotents are recorded as the matched pairs whose α-arcs a generator
//! occupies. A type-A generator and a type-D generator pair up in the box
//! tensor product exactly when their occupied pairs are complementary.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grgroup::{
    relative_lambda, Circle, DoubleCoset, GradingElement, GradingRepr, RelativeGrading,
    SubgroupSpan,
};
use crate::pmc::{H1Chain, PointedMatchedCircle};
use crate::rational::{self, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    D,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::D => "D",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Side::A),
            "D" | "d" => Ok(Side::D),
            other => Err(Error::Parse(format!("side must be A or D, got {other:?}"))),
        }
    }
}

/// Strand endpoints `(start, end)` of a torus-algebra word such as `"12"`.
fn torus_word_span(word: &str) -> Result<(usize, usize)> {
    let digits: Vec<usize> = word
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as usize))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::UnknownWord(word.to_string()))?;
    let consecutive = digits.windows(2).all(|w| w[1] == w[0] + 1);
    match (digits.first(), digits.last()) {
        (Some(&s), Some(&e)) if consecutive && s >= 1 && e <= 3 => Ok((s, e + 1)),
        _ => Err(Error::UnknownWord(word.to_string())),
    }
}

/// Grading of `ρ_word` in the torus algebra: the product, in word order, of
/// the interval generators `(-1/2; e_i)`.
pub fn torus_algebra_grading(circle: &Circle, word: &str) -> Result<GradingElement> {
    if !circle.same_as(&PointedMatchedCircle::torus()) {
        return Err(Error::CircleMismatch);
    }
    let (start, end) = torus_word_span(word)?;
    (start..end).try_fold(GradingElement::identity(circle), |acc, i| {
        let step = GradingElement::new(
            circle.clone(),
            rational::q(-1, 2),
            H1Chain::interval(circle.h1_dim(), i),
        )?;
        acc.mul(&step)
    })
}

/// Word part of a torus-algebra element name: `rho12`, `ρ12` or `12`.
fn torus_word(name: &str) -> &str {
    name.strip_prefix("rho")
        .or_else(|| name.strip_prefix('ρ'))
        .unwrap_or(name)
}

#[derive(Debug, Clone)]
pub enum AlgebraTable {
    /// The built-in genus-one algebra; names are `rho1`, `rho2`, `rho3`, `rho12`, `rho23`, `rho123`.
    Torus,
    Table(Vec<(String, GradingElement)>),
}

#[derive(Debug, Clone)]
pub struct ModuleGenerator {
    pub name: String,
    pub idempotent: Vec<usize>,
    pub grading: GradingElement,
}

/// A differential or action: `from`, algebra inputs in order, `to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Operation {
    pub from: String,
    pub algebra: Vec<String>,
    pub to: String,
}

#[derive(Debug, Clone)]
pub struct GradedModulePresentation {
    pub side: Side,
    pub circle: Circle,
    /// For type D this is already the image under the reversal map.
    pub subgroup: SubgroupSpan,
    pub algebra: AlgebraTable,
    pub generators: Vec<ModuleGenerator>,
    pub operations: Vec<Operation>,
}

/// Outcome of checking one operation.
#[derive(Debug, Clone)]
pub struct OperationCheck {
    pub operation: Operation,
    /// The element that must lie in the subgroup for the gradings to agree.
    pub discrepancy: GradingElement,
    pub grading_ok: bool,
    /// Idempotent compatibility; only decided for the torus algebra.
    pub idempotent_ok: Option<bool>,
}

impl OperationCheck {
    pub fn passed(&self) -> bool {
        self.grading_ok && self.idempotent_ok != Some(false)
    }
}

#[derive(Debug, Clone)]
pub struct ConsistencyReport {
    pub side: Side,
    pub checks: Vec<OperationCheck>,
}

impl ConsistencyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(OperationCheck::passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            let idem = match c.idempotent_ok {
                Some(true) => "idempotents ok",
                Some(false) => "idempotents mismatch",
                None => "idempotents unchecked",
            };
            writeln!(
                f,
                "{status}  {} --[{}]--> {}  (discrepancy {}, {idem})",
                c.operation.from,
                c.operation.algebra.join(","),
                c.operation.to,
                c.discrepancy
            )?;
        }
        write!(
            f,
            "{}/{} operations consistent",
            self.passed_count(),
            self.checks.len()
        )
    }
}

impl GradedModulePresentation {
    pub fn generator(&self, name: &str) -> Result<&ModuleGenerator> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn algebra_grading(&self, name: &str) -> Result<GradingElement> {
        match &self.algebra {
            AlgebraTable::Torus => torus_algebra_grading(&self.circle, torus_word(name))
                .map_err(|_| Error::UnknownAlgebraElement(name.to_string())),
            AlgebraTable::Table(entries) => entries
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, g)| g.clone())
                .ok_or_else(|| Error::UnknownAlgebraElement(name.to_string())),
        }
    }

    /// Matched-pair indices at the two ends of a torus-algebra element.
    fn torus_idempotents(&self, name: &str) -> Option<(usize, usize)> {
        let (s, e) = torus_word_span(torus_word(name)).ok()?;
        Some((self.circle.pair_of(s)?, self.circle.pair_of(e)?))
    }

    fn complement(&self, idem: &[usize]) -> Vec<usize> {
        (0..self.circle.matching.len())
            .filter(|i| !idem.contains(i))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let mut names = BTreeSet::new();
        for g in &self.generators {
            if !names.insert(g.name.as_str()) {
                return Err(Error::InvalidModule(format!(
                    "generator {} listed twice",
                    g.name
                )));
            }
            if g.idempotent
                .iter()
                .any(|&i| i >= self.circle.matching.len())
            {
                return Err(Error::InvalidModule(format!(
                    "generator {} has an idempotent out of range",
                    g.name
                )));
            }
        }
        for op in &self.operations {
            self.generator(&op.from)?;
            self.generator(&op.to)?;
            for a in &op.algebra {
                self.algebra_grading(a)?;
            }
            if self.side == Side::D && op.algebra.len() != 1 {
                return Err(Error::InvalidModule(format!(
                    "type-D arrow {} -> {} must carry exactly one algebra element",
                    op.from, op.to
                )));
            }
        }
        Ok(())
    }

    fn check_idempotents(&self, op: &Operation) -> Result<Option<bool>> {
        if !matches!(self.algebra, AlgebraTable::Torus) {
            return Ok(None);
        }
        let from = &self.generator(&op.from)?.idempotent;
        let to = &self.generator(&op.to)?.idempotent;
        let spans: Option<Vec<(usize, usize)>> = op
            .algebra
            .iter()
            .map(|a| self.torus_idempotents(a))
            .collect();
        let Some(spans) = spans else {
            return Ok(Some(false));
        };
        let ok = match self.side {
            Side::D => {
                let (l, r) = spans[0];
                self.complement(from) == vec![l] && self.complement(to) == vec![r]
            }
            Side::A => match (spans.first(), spans.last()) {
                (Some(&(l, _)), Some(&(_, r))) => {
                    spans.windows(2).all(|w| w[0].1 == w[1].0) && *from == vec![l] && *to == vec![r]
                }
                _ => from == to,
            },
        };
        Ok(Some(ok))
    }

    /// Type D: every arrow `x → a ⊗ y` must satisfy `gr(a)·gr(y) ≡ λ⁻¹·gr(x)`
    /// modulo the subgroup acting on the right.
    pub fn check_graded_d(&self) -> Result<ConsistencyReport> {
        if self.side != Side::D {
            return Err(Error::InvalidModule("expected a type-D module".into()));
        }
        let lambda_inv = GradingElement::lambda_pow(&self.circle, rational::int(-1));
        let mut checks = Vec::new();
        for op in &self.operations {
            let x = &self.generator(&op.from)?.grading;
            let y = &self.generator(&op.to)?.grading;
            let a = self.algebra_grading(&op.algebra[0])?;
            let lhs = a.mul(y)?;
            let rhs = lambda_inv.mul(x)?;
            let discrepancy = lhs.inverse().mul(&rhs)?;
            let grading_ok = self.subgroup.member(&discrepancy)?.holds();
            checks.push(OperationCheck {
                operation: op.clone(),
                discrepancy,
                grading_ok,
                idempotent_ok: self.check_idempotents(op)?,
            });
        }
        Ok(ConsistencyReport {
            side: Side::D,
            checks,
        })
    }

    /// Type A: every action `m(x, a₁, …, a_k) = y` must satisfy
    /// `gr(y) ≡ λ^{k-1}·gr(x)·gr(a₁)⋯gr(a_k)` modulo the subgroup acting on the left.
    pub fn check_graded_a(&self) -> Result<ConsistencyReport> {
        if self.side != Side::A {
            return Err(Error::InvalidModule("expected a type-A module".into()));
        }
        let mut checks = Vec::new();
        for op in &self.operations {
            let x = &self.generator(&op.from)?.grading;
            let y = &self.generator(&op.to)?.grading;
            let k = op.algebra.len() as i64;
            let mut lhs = GradingElement::lambda_pow(&self.circle, rational::int(k - 1)).mul(x)?;
            for a in &op.algebra {
                lhs = lhs.mul(&self.algebra_grading(a)?)?;
            }
            let discrepancy = y.mul(&lhs.inverse())?;
            let grading_ok = self.subgroup.member(&discrepancy)?.holds();
            checks.push(OperationCheck {
                operation: op.clone(),
                discrepancy,
                grading_ok,
                idempotent_ok: self.check_idempotents(op)?,
            });
        }
        Ok(ConsistencyReport {
            side: Side::A,
            checks,
        })
    }

    pub fn check(&self) -> Result<ConsistencyReport> {
        match self.side {
            Side::A => self.check_graded_a(),
            Side::D => self.check_graded_d(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModuleFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("module files always serialise")
    }

    pub fn from_file(file: &ModuleFile) -> Result<Self> {
        file.pmc.validate()?;
        let circle: Circle = Arc::new(file.pmc.clone());
        let subgroup = SubgroupSpan::from_repr(&circle, &file.subgroup)?;
        let algebra = match &file.algebra {
            AlgebraSpec::Builtin(name) if name == "torus" => AlgebraTable::Torus,
            AlgebraSpec::Builtin(name) => {
                return Err(Error::InvalidModule(format!(
                    "unknown built-in algebra {name:?}"
                )))
            }
            AlgebraSpec::Table(entries) => AlgebraTable::Table(
                entries
                    .iter()
                    .map(|e| {
                        Ok((
                            e.name.clone(),
                            GradingElement::from_repr(&circle, &e.grading)?,
                        ))
                    })
                    .collect::<Result<_>>()?,
            ),
        };
        let generators = file
            .generators
            .iter()
            .map(|g| {
                let mut idempotent = g.idempotent.clone();
                idempotent.sort_unstable();
                idempotent.dedup();
                Ok(ModuleGenerator {
                    name: g.name.clone(),
                    idempotent,
                    grading: GradingElement::from_repr(&circle, &g.grading)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let m = GradedModulePresentation {
            side: file.side,
            circle,
            subgroup,
            algebra,
            generators,
            operations: file.operations.clone(),
        };
        m.validate()?;
        Ok(m)
    }

    pub fn to_file(&self) -> ModuleFile {
        ModuleFile {
            side: self.side,
            pmc: (*self.circle).clone(),
            subgroup: self.subgroup.to_repr(),
            algebra: match &self.algebra {
                AlgebraTable::Torus => AlgebraSpec::Builtin("torus".into()),
                AlgebraTable::Table(entries) => AlgebraSpec::Table(
                    entries
                        .iter()
                        .map(|(n, g)| AlgebraEntry {
                            name: n.clone(),
                            grading: g.to_repr(),
                        })
                        .collect(),
                ),
            },
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorSpec {
                    name: g.name.clone(),
                    idempotent: g.idempotent.clone(),
                    grading: g.grading.to_repr(),
                })
                .collect(),
            operations: self.operations.clone(),
        }
    }

    /// Replace every representative `g` by `g·p` (type A: `p·g`) for `p` in the subgroup.
    pub fn with_shifted_representatives(&self, shifts: &HashMap<String, Vec<Q>>) -> Result<Self> {
        let mut out = self.clone();
        for g in &mut out.generators {
            if let Some(coeffs) = shifts.get(&g.name) {
                let p = self.subgroup.word(coeffs);
                g.grading = match self.side {
                    Side::A => p.mul(&g.grading)?,
                    Side::D => g.grading.mul(&p)?,
                };
            }
        }
        Ok(out)
    }
}

/// On-disk form of a module presentation.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub side: Side,
    pub pmc: PointedMatchedCircle,
    #[serde(default)]
    pub subgroup: Vec<GradingRepr>,
    pub algebra: AlgebraSpec,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub operations: Vec<Operation>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Builtin(String),
    Table(Vec<AlgebraEntry>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraEntry {
    pub name: String,
    pub grading: GradingRepr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    #[serde(default)]
    pub idempotent: Vec<usize>,
    pub grading: GradingRepr,
}

/// `x₁ ⊗ x₂` with its grading in `P_A \ G' / P_D`.
#[derive(Debug, Clone)]
pub struct TensorGenerator {
    pub left_name: String,
    pub right_name: String,
    pub grading: DoubleCoset,
}

impl TensorGenerator {
    pub fn name(&self) -> String {
        format!("{}*{}", self.left_name, self.right_name)
    }
}

/// All complementary-idempotent pairs `x₁ ⊗ x₂`, A-generators outermost.
pub fn tensor_generators(
    ma: &GradedModulePresentation,
    md: &GradedModulePresentation,
) -> Result<Vec<TensorGenerator>> {
    if ma.side != Side::A || md.side != Side::D {
        return Err(Error::InvalidModule(
            "tensor products take a type-A and a type-D module".into(),
        ));
    }
    if !ma.circle.same_as(&md.circle) {
        return Err(Error::CircleMismatch);
    }
    let circle = &ma.circle;
    let right = SubgroupSpan::new(circle, md.subgroup.generators().to_vec())?;
    let all: Vec<usize> = (0..circle.matching.len()).collect();
    let mut out = Vec::new();
    for a in &ma.generators {
        for d in &md.generators {
            let mut union: Vec<usize> = a.idempotent.iter().chain(&d.idempotent).copied().collect();
            union.sort_unstable();
            if union != all {
                continue;
            }
            let rep = a.grading.mul(&d.grading.rebase(circle)?)?;
            out.push(TensorGenerator {
                left_name: a.name.clone(),
                right_name: d.name.clone(),
                grading: DoubleCoset::new(ma.subgroup.clone(), rep, right.clone())?,
            });
        }
    }
    Ok(out)
}

/// The relative rational grading from `t1` to `t2`.
pub fn relative_q_grading(t1: &TensorGenerator, t2: &TensorGenerator) -> Result<RelativeGrading> {
    relative_lambda(&t1.grading, &t2.grading)
}

/// Tensor generators in one λ-orbit, with offsets from the class base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitClass {
    pub base: String,
    pub members: Vec<(String, RelativeGrading)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingTable {
    pub classes: Vec<OrbitClass>,
}

impl GradingTable {
    pub fn generator_count(&self) -> usize {
        self.classes.iter().map(|c| c.members.len()).sum()
    }

    pub fn offset(&self, name: &str) -> Option<&RelativeGrading> {
        self.classes
            .iter()
            .flat_map(|c| &c.members)
            .find(|(n, _)| n == name)
            .map(|(_, r)| r)
    }
}

impl fmt::Display for GradingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            writeln!(f, "class {i} (base {}):", class.base)?;
            for (name, r) in &class.members {
                writeln!(f, "  {name}  {r}")?;
            }
        }
        write!(
            f,
            "{} generators in {} classes",
            self.generator_count(),
            self.classes.len()
        )
    }
}

/// Partition tensor generators into λ-orbits; within each orbit report the
/// exponent from the base generator (the first name in lexicographic order,
/// unless `base` names one).
pub fn grading_table(
    ma: &GradedModulePresentation,
    md: &GradedModulePresentation,
    base: Option<&str>,
) -> Result<GradingTable> {
    let mut tensors = tensor_generators(ma, md)?;
    tensors.sort_by_key(TensorGenerator::name);
    if let Some(b) = base {
        let pos = tensors
            .iter()
            .position(|t| t.name() == b)
            .ok_or_else(|| Error::UnknownGenerator(b.to_string()))?;
        let chosen = tensors.remove(pos);
        tensors.insert(0, chosen);
    }
    let mut classes: Vec<(TensorGenerator, OrbitClass)> = Vec::new();
    for t in tensors {
        let mut placed = false;
        for (base_t, class) in classes.iter_mut() {
            let r = relative_q_grading(base_t, &t)?;
            if r != RelativeGrading::Distinct {
                class.members.push((t.name(), r));
                placed = true;
                break;
            }
        }
        if !placed {
            let own = relative_q_grading(&t, &t)?;
            let class = OrbitClass {
                base: t.name(),
                members: vec![(t.name(), own)],
            };
            classes.push((t, class));
        }
    }
    let mut out: Vec<OrbitClass> = classes.into_iter().map(|(_, c)| c).collect();
    for c in &mut out {
        c.members.sort_by(|a, b| a.0.cmp(&b.0));
    }
    Ok(GradingTable { classes: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn torus() -> Circle {
        Arc::new(PointedMatchedCircle::torus())
    }

    #[test]
    fn torus_words() {
        let c = torus();
        let g = |w: &str| torus_algebra_grading(&c, w).unwrap();
        let e = |m: (i64, i64), h: [i64; 3]| {
            GradingElement::new(c.clone(), q(m.0, m.1), H1Chain::from_ints(&h)).unwrap()
        };
        assert_eq!(g("1"), e((-1, 2), [1, 0, 0]));
        assert_eq!(g("2"), e((-1, 2), [0, 1, 0]));
        assert_eq!(g("3"), e((-1, 2), [0, 0, 1]));
        assert_eq!(g("12"), e((-1, 2), [1, 1, 0]));
        assert_eq!(g("23"), e((-1, 2), [0, 1, 1]));
        assert_eq!(g("123"), e((-1, 2), [1, 1, 1]));
        for bad in ["", "13", "21", "4", "0", "x"] {
            assert!(
                matches!(torus_algebra_grading(&c, bad), Err(Error::UnknownWord(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn torus_words_multiply_along_concatenation() {
        let c = torus();
        let g = |w: &str| torus_algebra_grading(&c, w).unwrap();
        assert_eq!(g("1").mul(&g("2")).unwrap(), g("12"));
        assert_eq!(g("12").mul(&g("3")).unwrap(), g("123"));
        assert_eq!(g("1").mul(&g("23")).unwrap(), g("123"));
    }

    #[test]
    fn side_parsing() {
        assert_eq!("A".parse::<Side>().unwrap(), Side::A);
        assert_eq!("d".parse::<Side>().unwrap(), Side::D);
        assert!("B".parse::<Side>().is_err());
    }
}
