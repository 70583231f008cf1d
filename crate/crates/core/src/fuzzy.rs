//! Finite-image fuzzy sets on a Hom-Lie algebra, stored as level flags.
//!
//! A fuzzy set whose level cuts are subspaces is determined by its chain of
//! distinct cuts `V_1 ⊊ V_2 ⊊ … ⊊ V_k = L` and the levels
//! `t_1 > t_2 > … > t_k` attached to them: `μ(x) = t_i` for the smallest `i`
//! with `x ∈ V_i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{rational_is_unit_interval, FieldSpec};
use crate::hom_lie::{ClosureMode, ClosureViolation, HomLieAlgebra, Morphism};
use crate::linalg::{checked_power, Subspace, Vector, DEFAULT_ENUMERATION_CAP};

/// A membership level: an exact rational in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level(BigRational);

impl Level {
    pub fn new(value: BigRational) -> Result<Self> {
        if !rational_is_unit_interval(&value) {
            return Err(Error::invariant(format!("level {value} outside [0, 1]")));
        }
        Ok(Level(value))
    }

    pub fn ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Self::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Level(BigRational::zero())
    }

    pub fn one() -> Self {
        Level(BigRational::one())
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn meet(&self, other: &Level) -> Level {
        self.min(other).clone()
    }

    pub fn join(&self, other: &Level) -> Level {
        self.max(other).clone()
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            column: 0,
            message: format!("invalid level {s:?}"),
        };
        let (n, d) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Level::new(BigRational::new(n, d))
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite-image fuzzy set whose cuts are subspaces.
///
/// The last chain member is always the whole space; its level is the
/// baseline when there is more than one member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyFlag {
    field: FieldSpec,
    dim: usize,
    chain: Vec<(Subspace, Level)>,
}

/// Outcome of a flag-level subalgebra or ideal check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagReport {
    pub holds: bool,
    pub failure: Option<FlagFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagFailure {
    /// Position in the chain (0 = highest level).
    pub chain_index: usize,
    pub level: Level,
    pub violation: ClosureViolation,
}

impl FuzzyFlag {
    /// Builds a flag from strictly nested subspaces with strictly decreasing
    /// levels. `baseline` is required exactly when the last subspace is
    /// proper and must lie strictly below its level.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        chain: Vec<(Subspace, Level)>,
        baseline: Option<Level>,
    ) -> Result<Self> {
        let last = chain
            .last()
            .ok_or_else(|| Error::invariant("a flag needs at least one chain entry"))?;
        for (s, _) in &chain {
            if s.field() != field {
                return Err(Error::FieldMismatch);
            }
            if s.ambient_dim() != dim {
                return Err(Error::dims(dim, s.ambient_dim()));
            }
        }
        for (k, w) in chain.windows(2).enumerate() {
            if !(w[0].0.is_subspace_of(&w[1].0)? && w[0].0.rank() < w[1].0.rank()) {
                return Err(Error::invariant(format!(
                    "chain entries {k} and {} are not strictly nested",
                    k + 1
                )));
            }
            if w[0].1 <= w[1].1 {
                return Err(Error::invariant(format!(
                    "levels must strictly decrease ({} then {})",
                    w[0].1,
                    w[1].1
                )));
            }
        }
        let mut chain = chain.clone();
        match (last.0.is_full(), baseline) {
            (true, None) => {}
            (true, Some(_)) => {
                return Err(Error::invariant(
                    "baseline given but the chain already covers the whole space",
                ))
            }
            (false, None) => {
                return Err(Error::invariant(
                    "baseline required when the last subspace is proper",
                ))
            }
            (false, Some(b)) => {
                if b >= chain.last().unwrap().1 {
                    return Err(Error::invariant(format!(
                        "baseline {b} must be below the lowest chain level {}",
                        chain.last().unwrap().1
                    )));
                }
                chain.push((Subspace::full(field, dim), b));
            }
        }
        Ok(FuzzyFlag { field, dim, chain })
    }

    pub fn constant(field: FieldSpec, dim: usize, level: Level) -> Self {
        FuzzyFlag {
            field,
            dim,
            chain: vec![(Subspace::full(field, dim), level)],
        }
    }

    /// Normalizes nested entries with non-increasing levels: equal
    /// subspaces collapse to the first (highest) level.
    fn from_nested(field: FieldSpec, dim: usize, entries: Vec<(Subspace, Level)>) -> Self {
        let mut chain: Vec<(Subspace, Level)> = Vec::with_capacity(entries.len());
        for (s, t) in entries {
            match chain.last() {
                Some((prev, _)) if *prev == s => {}
                _ => chain.push((s, t)),
            }
        }
        debug_assert!(chain.last().is_some_and(|(s, _)| s.is_full()));
        debug_assert!(chain.windows(2).all(|w| w[0].1 > w[1].1));
        FuzzyFlag { field, dim, chain }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Full chain including the terminal whole-space entry.
    pub fn chain(&self) -> &[(Subspace, Level)] {
        &self.chain
    }

    /// Proper chain members, i.e. everything but the whole-space entry
    /// when a baseline exists.
    pub fn proper_chain(&self) -> &[(Subspace, Level)] {
        match self.baseline() {
            Some(_) => &self.chain[..self.chain.len() - 1],
            None => &self.chain,
        }
    }

    /// Level of vectors outside every proper chain member.
    pub fn baseline(&self) -> Option<&Level> {
        (self.chain.len() > 1).then(|| &self.chain.last().unwrap().1)
    }

    pub fn top_level(&self) -> &Level {
        &self.chain[0].1
    }

    /// `Im(μ)` in decreasing order.
    pub fn image_levels(&self) -> Vec<Level> {
        self.chain.iter().map(|(_, t)| t.clone()).collect()
    }

    pub fn evaluate(&self, x: &Vector) -> Result<Level> {
        x.check(self.field, self.dim)?;
        let (_, t) = self
            .chain
            .iter()
            .find(|(s, _)| s.contains_unchecked(x))
            .expect("last chain member is the whole space");
        Ok(t.clone())
    }

    /// `U(μ, t) = {x : μ(x) ≥ t}`, `None` when empty.
    pub fn upper_level(&self, t: &Level) -> Option<&Subspace> {
        self.chain.iter().rev().find(|(_, ti)| ti >= t).map(|(s, _)| s)
    }

    /// `U(μ^>, t) = {x : μ(x) > t}`, `None` when empty.
    pub fn strong_upper_level(&self, t: &Level) -> Option<&Subspace> {
        self.chain.iter().rev().find(|(_, ti)| ti > t).map(|(s, _)| s)
    }

    fn check_algebra(&self, a: &HomLieAlgebra) -> Result<()> {
        if a.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if a.dim() != self.dim {
            return Err(Error::dims(a.dim(), self.dim));
        }
        Ok(())
    }

    fn closure_report(&self, a: &HomLieAlgebra, mode: ClosureMode) -> Result<FlagReport> {
        self.check_algebra(a)?;
        for (chain_index, (s, t)) in self.chain.iter().enumerate() {
            if let Some(violation) = a.violation(s, mode)? {
                return Ok(FlagReport {
                    holds: false,
                    failure: Some(FlagFailure {
                        chain_index,
                        level: t.clone(),
                        violation,
                    }),
                });
            }
        }
        Ok(FlagReport {
            holds: true,
            failure: None,
        })
    }

    pub fn is_fuzzy_subalgebra(&self, a: &HomLieAlgebra) -> Result<FlagReport> {
        self.closure_report(a, ClosureMode::Subalgebra)
    }

    pub fn is_fuzzy_ideal(&self, a: &HomLieAlgebra) -> Result<FlagReport> {
        self.closure_report(a, ClosureMode::Ideal)
    }

    pub fn check(&self, a: &HomLieAlgebra, mode: ClosureMode) -> Result<FlagReport> {
        self.closure_report(a, mode)
    }

    /// Generalized Cartesian sum: `(x_1, …, x_n) ↦ min_i μ_i(x_i)`.
    pub fn direct_sum(flags: &[&FuzzyFlag]) -> Result<FuzzyFlag> {
        let field = flags.first().ok_or(Error::EmptyList)?.field;
        if flags.iter().any(|f| f.field != field) {
            return Err(Error::FieldMismatch);
        }
        let dim = flags.iter().map(|f| f.dim).sum();
        let mut levels: Vec<Level> = flags.iter().flat_map(|f| f.image_levels()).collect();
        levels.sort_by(|a, b| b.cmp(a));
        levels.dedup();
        let mut entries = Vec::new();
        for t in levels {
            let cuts: Option<Vec<Subspace>> =
                flags.iter().map(|f| f.upper_level(&t).cloned()).collect();
            if let Some(cuts) = cuts {
                entries.push((Subspace::direct_sum(&cuts)?, t));
            }
        }
        Ok(FuzzyFlag::from_nested(field, dim, entries))
    }

    /// `x ↦ μ_B(f(x))` on the source of `f`.
    pub fn pullback(&self, f: &Morphism) -> Result<FuzzyFlag> {
        if !f.is_certified() {
            return Err(Error::NotCertified);
        }
        self.check_algebra(f.target())?;
        let src = f.source();
        let entries = self
            .chain
            .iter()
            .map(|(w, s)| Ok((w.preimage(f.matrix())?, s.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(FuzzyFlag::from_nested(src.field(), src.dim(), entries))
    }

    /// `y ↦ sup { μ_A(x) : f(x) = y }`, and 0 off the image of `f`.
    ///
    /// The fiber over `y` meets `V_i` exactly when `y ∈ f(V_i)`, so the
    /// supremum is the highest level whose cut image contains `y`.
    pub fn pushforward(&self, f: &Morphism) -> Result<FuzzyFlag> {
        if !f.is_certified() {
            return Err(Error::NotCertified);
        }
        self.check_algebra(f.source())?;
        let tgt = f.target();
        let (field, dim) = (tgt.field(), tgt.dim());
        let mut entries = self
            .chain
            .iter()
            .map(|(v, t)| Ok((v.image(f.matrix())?, t.clone())))
            .collect::<Result<Vec<_>>>()?;
        // collapse duplicates first so the off-image rule sees the final image
        let mut chain: Vec<(Subspace, Level)> = Vec::new();
        for (s, t) in entries.drain(..) {
            if chain.last().map(|(p, _)| p != &s).unwrap_or(true) {
                chain.push((s, t));
            }
        }
        let image_is_full = chain.last().unwrap().0.is_full();
        if !image_is_full {
            let last = chain.last_mut().unwrap();
            if last.1 == Level::zero() {
                last.0 = Subspace::full(field, dim);
            } else {
                chain.push((Subspace::full(field, dim), Level::zero()));
            }
        }
        Ok(FuzzyFlag::from_nested(field, dim, chain))
    }
}

/// A fuzzy set on `GF(p)^n` given pointwise; entry `k` belongs to the
/// vector whose base-`p` digits (most significant first) are its
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyTable {
    field: FieldSpec,
    dim: usize,
    entries: Vec<Level>,
}

impl FuzzyTable {
    pub fn new(field: FieldSpec, dim: usize, entries: Vec<Level>) -> Result<Self> {
        let p = field.order().ok_or(Error::UnsupportedField)? as u128;
        let n = checked_power(p, dim, DEFAULT_ENUMERATION_CAP.max(entries.len() as u128))?;
        if n != entries.len() as u128 {
            return Err(Error::invariant(format!(
                "table over {field}^{dim} needs {n} entries, got {}",
                entries.len()
            )));
        }
        Ok(FuzzyTable {
            field,
            dim,
            entries,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Level] {
        &self.entries
    }

    pub fn get(&self, x: &Vector) -> Result<&Level> {
        x.check(self.field, self.dim)?;
        Ok(&self.entries[vector_index(x)])
    }

    pub fn vector_at(&self, index: usize) -> Vector {
        vector_at(self.field, self.dim, index)
    }
}

/// Position of a prime-field vector in lexicographic order.
pub fn vector_index(x: &Vector) -> usize {
    let p = x.field().order().expect("prime field") as usize;
    x.coords()
        .iter()
        .fold(0, |acc, c| acc * p + c.residue().unwrap() as usize)
}

/// Inverse of [`vector_index`].
pub fn vector_at(field: FieldSpec, dim: usize, mut index: usize) -> Vector {
    let p = field.order().expect("prime field") as usize;
    let mut digits = vec![0i64; dim];
    for d in digits.iter_mut().rev() {
        *d = (index % p) as i64;
        index /= p;
    }
    Vector::from_i64(field, &digits)
}

/// Recovers the flag of a pointwise fuzzy set whose cuts are subspaces.
pub fn flag_from_table(table: &FuzzyTable) -> Result<FuzzyFlag> {
    let (field, dim) = (table.field, table.dim);
    let mut levels = table.entries.clone();
    levels.sort_by(|a, b| b.cmp(a));
    levels.dedup();
    let mut chain = Vec::with_capacity(levels.len());
    for t in levels {
        let members: Vec<usize> = (0..table.entries.len())
            .filter(|&k| table.entries[k] >= t)
            .collect();
        let cut = Subspace::span(
            field,
            dim,
            members.iter().map(|&k| vector_at(field, dim, k)).collect(),
        )?;
        // the cut lies inside its span; equal sizes mean it is the span
        if cut.cardinality(u128::MAX)? != members.len() as u128 {
            return Err(Error::NotSubspaceLeveled {
                level: t.to_string(),
            });
        }
        chain.push((cut, t));
    }
    Ok(FuzzyFlag::from_nested(field, dim, chain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom_lie::paper_example;
    use crate::linalg::Matrix;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn lv(n: i64, d: i64) -> Level {
        Level::ratio(n, d).unwrap()
    }

    fn e(i: usize) -> Vector {
        Vector::unit(Q, 3, i)
    }

    fn span(field: FieldSpec, n: usize, vs: Vec<Vector>) -> Subspace {
        Subspace::span(field, n, vs).unwrap()
    }

    fn example_flag(field: FieldSpec) -> FuzzyFlag {
        let e12 = span(
            field,
            3,
            vec![Vector::unit(field, 3, 0), Vector::unit(field, 3, 1)],
        );
        FuzzyFlag::new(
            field,
            3,
            vec![(Subspace::zero(field, 3), lv(4, 5)), (e12, lv(2, 5))],
            Some(lv(1, 10)),
        )
        .unwrap()
    }

    fn e3_flag() -> FuzzyFlag {
        FuzzyFlag::new(
            Q,
            3,
            vec![
                (Subspace::zero(Q, 3), lv(4, 5)),
                (span(Q, 3, vec![e(2)]), lv(2, 5)),
            ],
            Some(lv(1, 10)),
        )
        .unwrap()
    }

    #[test]
    fn level_parsing() {
        assert_eq!("4/5".parse::<Level>().unwrap(), lv(4, 5));
        assert_eq!("8/10".parse::<Level>().unwrap().to_string(), "4/5");
        assert!("3/2".parse::<Level>().is_err());
        assert!("-1/2".parse::<Level>().is_err());
        assert_eq!(lv(1, 3).meet(&lv(1, 2)), lv(1, 3));
        assert_eq!(lv(1, 3).join(&lv(1, 2)), lv(1, 2));
    }

    #[test]
    fn evaluate_examples() {
        let mu = example_flag(Q);
        assert_eq!(mu.evaluate(&Vector::zero(Q, 3)).unwrap(), lv(4, 5));
        assert_eq!(mu.evaluate(&e(0)).unwrap(), lv(2, 5));
        assert_eq!(mu.evaluate(&e(0).add(&e(2))).unwrap(), lv(1, 10));
        assert_eq!(mu.baseline(), Some(&lv(1, 10)));
        assert_eq!(mu.image_levels(), vec![lv(4, 5), lv(2, 5), lv(1, 10)]);
    }

    #[test]
    fn cut_examples() {
        let mu = example_flag(Q);
        assert_eq!(
            mu.upper_level(&lv(2, 5)),
            Some(&span(Q, 3, vec![e(0), e(1)]))
        );
        assert!(mu.upper_level(&lv(1, 10)).unwrap().is_full());
        assert_eq!(mu.upper_level(&Level::one()), None);
        assert!(mu.strong_upper_level(&lv(2, 5)).unwrap().is_zero());
        assert!(mu.strong_upper_level(&Level::zero()).unwrap().is_full());
        assert_eq!(mu.strong_upper_level(&lv(4, 5)), None);
    }

    #[test]
    fn constructor_invariants() {
        let zero = Subspace::zero(Q, 3);
        let e12 = span(Q, 3, vec![e(0), e(1)]);
        let wrong_order = FuzzyFlag::new(
            Q,
            3,
            vec![(zero.clone(), lv(2, 5)), (e12.clone(), lv(4, 5))],
            Some(lv(1, 10)),
        );
        assert!(matches!(wrong_order, Err(Error::InvariantViolation(_))));
        let not_nested = FuzzyFlag::new(
            Q,
            3,
            vec![(e12.clone(), lv(4, 5)), (span(Q, 3, vec![e(2)]), lv(2, 5))],
            Some(lv(1, 10)),
        );
        assert!(matches!(not_nested, Err(Error::InvariantViolation(_))));
        let missing = FuzzyFlag::new(Q, 3, vec![(zero.clone(), lv(4, 5))], None);
        assert!(matches!(missing, Err(Error::InvariantViolation(_))));
        let high_baseline = FuzzyFlag::new(Q, 3, vec![(zero, lv(4, 5))], Some(lv(4, 5)));
        assert!(matches!(high_baseline, Err(Error::InvariantViolation(_))));
        let extra = FuzzyFlag::new(Q, 3, vec![(Subspace::full(Q, 3), lv(1, 2))], Some(Level::zero()));
        assert!(matches!(extra, Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn fuzzy_subalgebra_and_ideal_examples() {
        let a = paper_example(Q);
        assert!(example_flag(Q).is_fuzzy_subalgebra(&a).unwrap().holds);
        assert!(example_flag(Q).is_fuzzy_ideal(&a).unwrap().holds);
        let point = FuzzyFlag::new(Q, 3, vec![(Subspace::zero(Q, 3), Level::one())], Some(Level::zero()))
            .unwrap();
        assert!(point.is_fuzzy_subalgebra(&a).unwrap().holds);
        assert!(e3_flag().is_fuzzy_subalgebra(&a).unwrap().holds);
        let report = e3_flag().is_fuzzy_ideal(&a).unwrap();
        assert!(!report.holds);
        let failure = report.failure.unwrap();
        assert_eq!(failure.chain_index, 1);
        assert_eq!(failure.level, lv(2, 5));
        assert_eq!(failure.violation, ClosureViolation::Bracket { left: 0, right: 0 });
        assert!(FuzzyFlag::constant(Q, 3, lv(1, 2)).is_fuzzy_ideal(&a).unwrap().holds);
    }

    #[test]
    fn direct_sum_examples() {
        let mu = example_flag(Q);
        assert_eq!(FuzzyFlag::direct_sum(&[&mu]).unwrap(), mu);
        let s = FuzzyFlag::direct_sum(&[&mu, &mu]).unwrap();
        let x = Vector::concat(&[e(0), e(2)]).unwrap();
        assert_eq!(s.evaluate(&x).unwrap(), lv(1, 10));
        let a = FuzzyFlag::constant(Q, 2, lv(1, 3));
        let b = FuzzyFlag::constant(Q, 1, lv(1, 2));
        assert_eq!(
            FuzzyFlag::direct_sum(&[&a, &b]).unwrap(),
            FuzzyFlag::constant(Q, 3, lv(1, 3))
        );
        assert_eq!(FuzzyFlag::direct_sum(&[]), Err(Error::EmptyList));
    }

    #[test]
    fn pullback_examples() {
        let a = paper_example(Q);
        let mu = example_flag(Q);
        assert_eq!(mu.pullback(&Morphism::identity(&a)).unwrap(), mu);
        let b = HomLieAlgebra::abelian(Q, Matrix::zero(Q, 2, 2)).unwrap();
        let zero = Morphism::zero(&b, &a).unwrap();
        assert_eq!(
            mu.pullback(&zero).unwrap(),
            FuzzyFlag::constant(Q, 2, lv(4, 5))
        );
        let sum = HomLieAlgebra::direct_sum(&[&a, &b]).unwrap();
        let proj = Morphism::projection(&[&a, &b], 0, &sum).unwrap();
        let pulled = mu.pullback(&proj).unwrap();
        let x = Vector::from_i64(Q, &[1, 0, 0, 7, -3]);
        assert_eq!(pulled.evaluate(&x).unwrap(), lv(2, 5));
        let raw = Morphism::new(a.clone(), a.clone(), Matrix::identity(Q, 3));
        assert_eq!(mu.pullback(&raw), Err(Error::NotCertified));
    }

    #[test]
    fn pushforward_examples() {
        let a = paper_example(Q);
        let mu = example_flag(Q);
        assert_eq!(mu.pushforward(&Morphism::identity(&a)).unwrap(), mu);
        let b = HomLieAlgebra::abelian(Q, Matrix::zero(Q, 2, 2)).unwrap();
        let pushed = mu.pushforward(&Morphism::zero(&a, &b).unwrap()).unwrap();
        assert_eq!(pushed.evaluate(&Vector::zero(Q, 2)).unwrap(), lv(4, 5));
        assert_eq!(
            pushed.evaluate(&Vector::from_i64(Q, &[0, 1])).unwrap(),
            Level::zero()
        );
        let sum = HomLieAlgebra::direct_sum(&[&a, &b]).unwrap();
        let inc = Morphism::inclusion(&[&a, &b], 0, &sum).unwrap();
        let pushed = mu.pushforward(&inc).unwrap();
        assert_eq!(
            pushed.evaluate(&Vector::from_i64(Q, &[1, 0, 0, 0, 0])).unwrap(),
            lv(2, 5)
        );
        assert_eq!(
            pushed.evaluate(&Vector::from_i64(Q, &[0, 0, 0, 1, 0])).unwrap(),
            Level::zero()
        );
        assert_eq!(
            pushed.evaluate(&Vector::from_i64(Q, &[0, 0, 1, 0, 0])).unwrap(),
            lv(1, 10)
        );
    }

    #[test]
    fn pushforward_of_zero_level_merges_with_off_image() {
        let a = paper_example(Q);
        let b = HomLieAlgebra::abelian(Q, Matrix::zero(Q, 2, 2)).unwrap();
        let mu = FuzzyFlag::constant(Q, 3, Level::zero());
        let pushed = mu.pushforward(&Morphism::zero(&a, &b).unwrap()).unwrap();
        assert_eq!(pushed, FuzzyFlag::constant(Q, 2, Level::zero()));
    }

    #[test]
    fn table_round_trip_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let table = FuzzyTable::new(f2, 2, vec![Level::one(), Level::zero(), lv(1, 2), Level::zero()])
            .unwrap();
        let flag = flag_from_table(&table).unwrap();
        let expect = FuzzyFlag::new(
            f2,
            2,
            vec![
                (Subspace::zero(f2, 2), Level::one()),
                (span(f2, 2, vec![Vector::unit(f2, 2, 0)]), lv(1, 2)),
            ],
            Some(Level::zero()),
        )
        .unwrap();
        assert_eq!(flag, expect);

        let bad = FuzzyTable::new(f2, 2, vec![Level::one(), lv(1, 2), lv(1, 2), Level::zero()])
            .unwrap();
        assert_eq!(
            flag_from_table(&bad),
            Err(Error::NotSubspaceLeveled {
                level: "1/2".into()
            })
        );

        let constant = FuzzyTable::new(f2, 2, vec![lv(1, 3); 4]).unwrap();
        assert_eq!(flag_from_table(&constant).unwrap().chain().len(), 1);
    }

    #[test]
    fn vector_index_round_trip() {
        let f5 = FieldSpec::prime(5).unwrap();
        for k in 0..125 {
            assert_eq!(vector_index(&vector_at(f5, 3, k)), k);
        }
        assert_eq!(vector_at(f5, 3, 7), Vector::from_i64(f5, &[0, 1, 2]));
    }
}
