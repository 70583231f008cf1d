//! Exhaustive pointwise verification over small prime fields.
//!
//! Everything here works on raw residues and vector indices, independent
//! of the subspace machinery used by the flag-based checks, so that the two
//! can be compared against each other.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::format;
use crate::fuzzy::{flag_from_table, FuzzyFlag, FuzzyTable, Level};
use crate::hom_lie::{paper_example, ClosureMode, HomLieAlgebra, Morphism};
use crate::linalg::{checked_power, Matrix, Subspace, Vector, DEFAULT_ENUMERATION_CAP};

/// Attempts allowed when sampling Hom-Jacobi-valid algebras.
pub const DEFAULT_RETRY_BUDGET: usize = 10_000;

const LEVEL_GRID: i64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Any skew bracket with `α = 0`.
    ZeroAlpha,
    /// Any `α` with the zero bracket.
    ZeroBracket,
    /// The three-dimensional example algebra over GF(p).
    PaperExample,
    /// Sparse random brackets and `α`, resampled until Hom-Jacobi holds.
    RejectionSampled,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::ZeroAlpha,
        Family::ZeroBracket,
        Family::PaperExample,
        Family::RejectionSampled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::ZeroAlpha => "zero-alpha",
            Family::ZeroBracket => "zero-bracket",
            Family::PaperExample => "paper-example",
            Family::RejectionSampled => "rejection-sampled",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InstanceParams {
    pub p: u32,
    pub dim: usize,
    /// Maximum number of chain entries, whole space included.
    pub flag_depth: usize,
    pub seed: u64,
    pub family: Family,
}

impl InstanceParams {
    pub fn validate(&self) -> Result<FieldSpec> {
        if ![2, 3, 5].contains(&self.p) {
            return Err(Error::InvalidParams(format!("p = {} not in {{2, 3, 5}}", self.p)));
        }
        if !(1..=3).contains(&self.dim) {
            return Err(Error::InvalidParams(format!("dim = {} not in 1..=3", self.dim)));
        }
        if !(1..=self.dim + 1).contains(&self.flag_depth) {
            return Err(Error::InvalidParams(format!(
                "flag_depth = {} not in 1..={}",
                self.flag_depth,
                self.dim + 1
            )));
        }
        if self.family == Family::PaperExample && self.dim != 3 {
            return Err(Error::InvalidParams("the example family has dimension 3".into()));
        }
        FieldSpec::prime(self.p as u64)
    }
}

/// Which closure builds the chain members of a generated flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagKind {
    Subalgebra,
    Ideal,
    /// Random nested subspaces, no closure.
    Arbitrary,
}

/// splitmix64 step, used to derive independent seeds.
pub fn mix_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> crate::Scalar {
    field.from_i64(rng.gen_range(0..field.order().unwrap() as i64))
}

fn random_vector(field: FieldSpec, dim: usize, rng: &mut ChaCha8Rng) -> Vector {
    Vector::new(field, (0..dim).map(|_| random_scalar(field, rng)).collect()).unwrap()
}

fn random_matrix(field: FieldSpec, dim: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let rows = (0..dim).map(|_| random_vector(field, dim, rng)).collect();
    Matrix::from_rows(field, dim, rows).unwrap()
}

fn random_algebra(family: Family, field: FieldSpec, dim: usize, rng: &mut ChaCha8Rng) -> Result<HomLieAlgebra> {
    let pairs: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
        .collect();
    let algebra = match family {
        Family::ZeroAlpha => {
            let brackets = pairs
                .iter()
                .map(|&(i, j)| (i, j, random_vector(field, dim, rng)))
                .collect();
            HomLieAlgebra::new(field, dim, brackets, Matrix::zero(field, dim, dim), None)?
        }
        Family::ZeroBracket => HomLieAlgebra::abelian(field, random_matrix(field, dim, rng))?,
        Family::PaperExample => paper_example(field),
        Family::RejectionSampled => {
            let max_entries = dim.div_ceil(2);
            let p = field.order().unwrap() as i64;
            let mut found = None;
            for _ in 0..DEFAULT_RETRY_BUDGET {
                let mut table: Vec<(usize, usize, Vector)> = pairs
                    .iter()
                    .map(|&(i, j)| (i, j, Vector::zero(field, dim)))
                    .collect();
                if !table.is_empty() {
                    let entries = rng.gen_range(0..=max_entries);
                    for _ in 0..entries {
                        let slot = rng.gen_range(0..table.len());
                        let k = rng.gen_range(0..dim);
                        let mut coords = table[slot].2.coords().to_vec();
                        coords[k] = field.from_i64(rng.gen_range(1..p));
                        table[slot].2 = Vector::new(field, coords)?;
                    }
                }
                let alpha = random_matrix(field, dim, rng);
                let candidate = HomLieAlgebra::new(field, dim, table, alpha, None)?;
                if candidate.check_axioms().valid {
                    found = Some(candidate);
                    break;
                }
            }
            found.ok_or(Error::RetriesExhausted(DEFAULT_RETRY_BUDGET))?
        }
    };
    Ok(algebra)
}

/// Strictly decreasing levels drawn from the grid `{0, 1/10, …, 1}`.
fn random_levels(count: usize, rng: &mut ChaCha8Rng) -> Vec<Level> {
    let mut grid: Vec<i64> = (0..=LEVEL_GRID).collect();
    grid.shuffle(rng);
    let mut picked = grid[..count].to_vec();
    picked.sort_unstable_by(|a, b| b.cmp(a));
    picked
        .into_iter()
        .map(|k| Level::ratio(k, LEVEL_GRID).unwrap())
        .collect()
}

/// A random flag with at most `depth` entries whose members are closed
/// according to `kind`.
pub fn random_flag(a: &HomLieAlgebra, depth: usize, kind: FlagKind, rng: &mut ChaCha8Rng) -> Result<FuzzyFlag> {
    let (field, dim) = (a.field(), a.dim());
    let close = |gens: Vec<Vector>| -> Result<Subspace> {
        match kind {
            FlagKind::Subalgebra => a.closure(gens, ClosureMode::Subalgebra),
            FlagKind::Ideal => a.closure(gens, ClosureMode::Ideal),
            FlagKind::Arbitrary => Subspace::span(field, dim, gens),
        }
    };
    let mut proper: Vec<Subspace> = Vec::new();
    let mut current = if rng.gen_bool(0.5) {
        close(Vec::new())?
    } else {
        close(vec![random_vector(field, dim, rng)])?
    };
    while proper.len() + 1 < depth && !current.is_full() {
        if proper.last() != Some(&current) {
            proper.push(current.clone());
        }
        if proper.len() + 1 >= depth {
            break;
        }
        let mut gens = current.basis().to_vec();
        gens.push(random_vector(field, dim, rng));
        current = close(gens)?;
    }
    let levels = random_levels(proper.len() + 1, rng);
    if proper.is_empty() {
        return Ok(FuzzyFlag::constant(field, dim, levels[0].clone()));
    }
    let baseline = levels.last().cloned();
    let chain = proper.into_iter().zip(levels).collect();
    FuzzyFlag::new(field, dim, chain, baseline)
}

/// A seeded algebra and a flag of closure-built subalgebras on it.
pub fn random_instance(params: &InstanceParams) -> Result<(HomLieAlgebra, FuzzyFlag)> {
    random_instance_with(params, FlagKind::Subalgebra)
}

/// Like [`random_instance`]; the algebra depends only on `params`, not on
/// `kind`.
pub fn random_instance_with(params: &InstanceParams, kind: FlagKind) -> Result<(HomLieAlgebra, FuzzyFlag)> {
    let field = params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let algebra = random_algebra(params.family, field, params.dim, &mut rng)?;
    let mut flag_rng = ChaCha8Rng::seed_from_u64(mix_seed(params.seed, kind as u64 + 1));
    let flag = random_flag(&algebra, params.flag_depth, kind, &mut flag_rng)?;
    Ok((algebra, flag))
}

/// Pointwise table of `μ`, built by enumerating each chain subspace rather
/// than by membership tests.
pub fn table_from_flag(mu: &FuzzyFlag, cap: u128) -> Result<FuzzyTable> {
    let p = mu.field().order().ok_or(Error::UnsupportedField)? as u128;
    let n = checked_power(p, mu.dim(), cap)? as usize;
    let mut entries: Vec<Option<Level>> = vec![None; n];
    for (s, t) in mu.chain() {
        for v in s.vectors(cap)? {
            let slot = &mut entries[crate::fuzzy::vector_index(&v)];
            if slot.is_none() {
                *slot = Some(t.clone());
            }
        }
    }
    let entries = entries
        .into_iter()
        .map(|e| e.expect("the last chain member covers every vector"))
        .collect();
    FuzzyTable::new(mu.field(), mu.dim(), entries)
}

/// Residue-level copy of an algebra for fast exhaustive loops.
struct ResidueAlgebra {
    p: u64,
    dim: usize,
    brackets: Vec<(usize, usize, Vec<u64>)>,
    alpha: Vec<Vec<u64>>,
}

impl ResidueAlgebra {
    fn new(a: &HomLieAlgebra) -> Result<Self> {
        let p = a.field().order().ok_or(Error::UnsupportedField)?;
        let res = |v: &Vector| -> Vec<u64> {
            v.coords().iter().map(|c| c.residue().unwrap() as u64).collect()
        };
        Ok(ResidueAlgebra {
            p,
            dim: a.dim(),
            brackets: a.structure().map(|(i, j, v)| (i, j, res(v))).collect(),
            alpha: a.alpha().row_vectors().iter().map(res).collect(),
        })
    }

    fn bracket(&self, x: &[u64], y: &[u64], out: &mut [u64]) {
        out.iter_mut().for_each(|o| *o = 0);
        let p = self.p;
        for (i, j, c) in &self.brackets {
            let coeff = (x[*i] * y[*j] + (p - x[*j]) * y[*i]) % p;
            if coeff != 0 {
                for (o, ck) in out.iter_mut().zip(c) {
                    *o = (*o + coeff * ck) % p;
                }
            }
        }
    }

    fn twist(&self, x: &[u64], out: &mut [u64]) {
        for (o, row) in out.iter_mut().zip(&self.alpha) {
            *o = row.iter().zip(x).map(|(a, b)| a * b).sum::<u64>() % self.p;
        }
    }
}

/// All vectors of `GF(p)^dim` as residue rows, in index order.
struct VectorSpace {
    p: u64,
    dim: usize,
    coords: Vec<u64>,
}

impl VectorSpace {
    fn new(p: u64, dim: usize, cap: u128) -> Result<Self> {
        let n = checked_power(p as u128, dim, cap)? as usize;
        let mut coords = vec![0u64; n * dim];
        for k in 0..n {
            let mut rest = k as u64;
            for d in (0..dim).rev() {
                coords[k * dim + d] = rest % p;
                rest /= p;
            }
        }
        Ok(VectorSpace { p, dim, coords })
    }

    fn len(&self) -> usize {
        self.coords.len() / self.dim.max(1)
    }

    fn size(&self) -> usize {
        if self.dim == 0 {
            1
        } else {
            self.len()
        }
    }

    fn get(&self, k: usize) -> &[u64] {
        &self.coords[k * self.dim..(k + 1) * self.dim]
    }

    fn index(&self, x: &[u64]) -> usize {
        x.iter().fold(0, |acc, &c| acc * self.p as usize + c as usize)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// `μ(x + y) ≥ μ(x) ∧ μ(y)`
    Sum,
    /// `μ(c x) ≥ μ(x)`
    Scale,
    /// `μ([x, y]) ≥ μ(x) ∧ μ(y)`, or `∨` for ideals
    Bracket,
    /// `μ(α(x)) ≥ μ(x)`
    Twist,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Sum => "sum",
            Condition::Scale => "scale",
            Condition::Bracket => "bracket",
            Condition::Twist => "twist",
        };
        f.write_str(s)
    }
}

/// A violated pointwise inequality `lhs ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointwiseFailure {
    pub condition: Condition,
    pub x: Vec<u64>,
    pub y: Option<Vec<u64>>,
    pub scalar: Option<u64>,
    pub lhs: Level,
    pub rhs: Level,
}

impl fmt::Display for PointwiseFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} condition fails at x = {:?}", self.condition, self.x)?;
        if let Some(y) = &self.y {
            write!(f, ", y = {y:?}")?;
        }
        if let Some(c) = self.scalar {
            write!(f, ", c = {c}")?;
        }
        write!(f, ": {} < {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointwiseReport {
    pub holds: bool,
    pub failure: Option<PointwiseFailure>,
}

/// Checks the four defining inequalities of a fuzzy Hom-Lie subalgebra
/// (or ideal) by enumerating every vector, pair and scalar.
pub fn pointwise_check(table: &FuzzyTable, a: &HomLieAlgebra, mode: ClosureMode, cap: u128) -> Result<PointwiseReport> {
    if table.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    if table.dim() != a.dim() {
        return Err(Error::dims(a.dim(), table.dim()));
    }
    let alg = ResidueAlgebra::new(a)?;
    let space = VectorSpace::new(alg.p, alg.dim, cap)?;
    checked_power(space.size() as u128, 2, cap.saturating_mul(cap))?;
    let levels = table.entries();
    let mut distinct = levels.to_vec();
    distinct.sort();
    distinct.dedup();
    let rank: Vec<u32> = levels
        .iter()
        .map(|t| distinct.binary_search(t).unwrap() as u32)
        .collect();
    let n = space.size();
    let dim = alg.dim;
    let p = alg.p;
    let fail = |condition, x: usize, y: Option<usize>, scalar, lhs: usize, rhs: &Level| {
        Ok(PointwiseReport {
            holds: false,
            failure: Some(PointwiseFailure {
                condition,
                x: space.get(x).to_vec(),
                y: y.map(|y| space.get(y).to_vec()),
                scalar,
                lhs: levels[lhs].clone(),
                rhs: rhs.clone(),
            }),
        })
    };
    let mut buf = vec![0u64; dim];

    for x in 0..n {
        for y in 0..n {
            for (b, (u, v)) in buf.iter_mut().zip(space.get(x).iter().zip(space.get(y))) {
                *b = (u + v) % p;
            }
            let s = space.index(&buf);
            if rank[s] < rank[x].min(rank[y]) {
                let rhs = levels[x].meet(&levels[y]);
                return fail(Condition::Sum, x, Some(y), None, s, &rhs);
            }
        }
    }
    for c in 0..p {
        for x in 0..n {
            for (b, u) in buf.iter_mut().zip(space.get(x)) {
                *b = c * u % p;
            }
            let s = space.index(&buf);
            if rank[s] < rank[x] {
                return fail(Condition::Scale, x, None, Some(c), s, &levels[x]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            alg.bracket(space.get(x), space.get(y), &mut buf);
            let s = space.index(&buf);
            let bound = match mode {
                ClosureMode::Subalgebra => rank[x].min(rank[y]),
                ClosureMode::Ideal => rank[x].max(rank[y]),
            };
            if rank[s] < bound {
                let rhs = match mode {
                    ClosureMode::Subalgebra => levels[x].meet(&levels[y]),
                    ClosureMode::Ideal => levels[x].join(&levels[y]),
                };
                return fail(Condition::Bracket, x, Some(y), None, s, &rhs);
            }
        }
    }
    for x in 0..n {
        alg.twist(space.get(x), &mut buf);
        let s = space.index(&buf);
        if rank[s] < rank[x] {
            return fail(Condition::Twist, x, None, None, s, &levels[x]);
        }
    }
    Ok(PointwiseReport {
        holds: true,
        failure: None,
    })
}

fn residue_matrix(m: &Matrix) -> Vec<Vec<u64>> {
    m.row_vectors()
        .iter()
        .map(|r| r.coords().iter().map(|c| c.residue().unwrap() as u64).collect())
        .collect()
}

/// For each source index, the target index of `f(x)`.
fn map_indices(f: &Morphism, cap: u128) -> Result<(Vec<usize>, usize)> {
    let p = f.source().field().order().ok_or(Error::UnsupportedField)?;
    let src = VectorSpace::new(p, f.source().dim(), cap)?;
    let tgt = VectorSpace::new(p, f.target().dim(), cap)?;
    let m = residue_matrix(f.matrix());
    let mut buf = vec![0u64; f.target().dim()];
    let mut out = Vec::with_capacity(src.size());
    for x in 0..src.size() {
        for (b, row) in buf.iter_mut().zip(&m) {
            *b = row.iter().zip(src.get(x)).map(|(a, c)| a * c).sum::<u64>() % p;
        }
        out.push(tgt.index(&buf));
    }
    Ok((out, tgt.size()))
}

/// `y ↦ max { μ(x) : f(x) = y }`, 0 off the image, by fiber enumeration.
pub fn brute_pushforward(f: &Morphism, source: &FuzzyTable, cap: u128) -> Result<FuzzyTable> {
    let (images, n) = map_indices(f, cap)?;
    let mut best: Vec<Option<Level>> = vec![None; n];
    for (x, &y) in images.iter().enumerate() {
        let t = &source.entries()[x];
        if best[y].as_ref().is_none_or(|b| b < t) {
            best[y] = Some(t.clone());
        }
    }
    let entries = best.into_iter().map(|b| b.unwrap_or_else(Level::zero)).collect();
    FuzzyTable::new(f.target().field(), f.target().dim(), entries)
}

/// `x ↦ μ(f(x))`, pointwise.
pub fn brute_pullback(f: &Morphism, target: &FuzzyTable, cap: u128) -> Result<FuzzyTable> {
    let (images, _) = map_indices(f, cap)?;
    let entries = images.iter().map(|&y| target.entries()[y].clone()).collect();
    FuzzyTable::new(f.source().field(), f.source().dim(), entries)
}

/// `(x_1, …, x_n) ↦ min_i μ_i(x_i)`, pointwise.
pub fn brute_direct_sum(tables: &[&FuzzyTable], cap: u128) -> Result<FuzzyTable> {
    let field = tables.first().ok_or(Error::EmptyList)?.field();
    let p = field.order().ok_or(Error::UnsupportedField)? as usize;
    let dim: usize = tables.iter().map(|t| t.dim()).sum();
    let n = checked_power(p as u128, dim, cap)? as usize;
    let sizes: Vec<usize> = tables.iter().map(|t| t.entries().len()).collect();
    let mut entries = Vec::with_capacity(n);
    for k in 0..n {
        // the last component occupies the least significant digits
        let mut rest = k;
        let mut value: Option<Level> = None;
        for (t, &size) in tables.iter().zip(&sizes).rev() {
            let part = rest % size;
            rest /= size;
            let lv = &t.entries()[part];
            value = Some(match value {
                Some(v) => v.meet(lv),
                None => lv.clone(),
            });
        }
        entries.push(value.unwrap());
    }
    FuzzyTable::new(field, dim, entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FindingKind {
    Counterexample,
    Exhausted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub kind: FindingKind,
    pub checked_count: u64,
    /// Serialized components of the offending direct sum.
    pub instance: Option<String>,
    pub witness: Option<PointwiseFailure>,
}

fn component_params(params: &InstanceParams, seed: u64) -> InstanceParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = if params.family == Family::PaperExample {
        3
    } else {
        rng.gen_range(1..=params.dim)
    };
    let depth = rng.gen_range(1..=params.flag_depth.min(dim + 1));
    InstanceParams {
        p: params.p,
        dim,
        flag_depth: depth,
        seed: mix_seed(seed, 0xC0),
        family: params.family,
    }
}

/// Searches for two fuzzy ideals (or subalgebras, with
/// `ClosureMode::Subalgebra`) whose generalized Cartesian sum fails the
/// same property on the direct-sum algebra.
pub fn search_sum_counterexample(params: &InstanceParams, budget: u64, mode: ClosureMode, cap: u128) -> Result<Finding> {
    params.validate()?;
    if budget == 0 {
        return Err(Error::InvalidParams("budget must be positive".into()));
    }
    let kind = match mode {
        ClosureMode::Subalgebra => FlagKind::Subalgebra,
        ClosureMode::Ideal => FlagKind::Ideal,
    };
    for k in 0..budget {
        let mut parts = Vec::with_capacity(2);
        for side in 0..2u64 {
            let cp = component_params(params, mix_seed(params.seed, 2 * k + side));
            let (a, mu) = random_instance_with(&cp, kind)?;
            if !mu.check(&a, mode)?.holds {
                return Err(Error::invariant("generated flag fails its own closure mode"));
            }
            parts.push((a, mu));
        }
        let (a1, m1) = &parts[0];
        let (a2, m2) = &parts[1];
        let sum = HomLieAlgebra::direct_sum(&[a1, a2])?;
        let flag = FuzzyFlag::direct_sum(&[m1, m2])?;
        let report = pointwise_check(&table_from_flag(&flag, cap)?, &sum, mode, cap)?;
        if let Some(witness) = report.failure {
            let text = format::serialize_instance(&[(a1, m1), (a2, m2)]);
            if !reverify_sum(&text, mode, cap)? {
                return Err(Error::invariant("counterexample did not re-verify"));
            }
            return Ok(Finding {
                kind: FindingKind::Counterexample,
                checked_count: k + 1,
                instance: Some(text),
                witness: Some(witness),
            });
        }
    }
    Ok(Finding {
        kind: FindingKind::Exhausted,
        checked_count: budget,
        instance: None,
        witness: None,
    })
}

pub fn search_ideal_sum_counterexample(params: &InstanceParams, budget: u64) -> Result<Finding> {
    search_sum_counterexample(params, budget, ClosureMode::Ideal, DEFAULT_ENUMERATION_CAP)
}

/// Rebuilds a stored sum instance from text and confirms that every
/// component passes `mode` while the sum fails it pointwise.
pub fn reverify_sum(text: &str, mode: ClosureMode, cap: u128) -> Result<bool> {
    let parts = format::parse_instance(text)?;
    for (a, mu) in &parts {
        if !pointwise_check(&table_from_flag(mu, cap)?, a, mode, cap)?.holds {
            return Ok(false);
        }
    }
    let algebras: Vec<&HomLieAlgebra> = parts.iter().map(|(a, _)| a).collect();
    let flags: Vec<&FuzzyFlag> = parts.iter().map(|(_, m)| m).collect();
    let sum = HomLieAlgebra::direct_sum(&algebras)?;
    let flag = FuzzyFlag::direct_sum(&flags)?;
    Ok(!pointwise_check(&table_from_flag(&flag, cap)?, &sum, mode, cap)?.holds)
}

/// Stable identifiers of the tallied statements.
pub mod theorem {
    pub const UPPER_LEVEL_SUBALGEBRA: &str = "upper-level-subalgebra";
    pub const UPPER_LEVEL_IDEAL: &str = "upper-level-ideal";
    pub const STRONG_UPPER_LEVEL_SUBALGEBRA: &str = "strong-upper-level-subalgebra";
    pub const STRONG_UPPER_LEVEL_IDEAL: &str = "strong-upper-level-ideal";
    pub const FLAG_TABLE_COHERENCE: &str = "flag-table-coherence";
    pub const DIRECT_SUM_SUBALGEBRA: &str = "direct-sum-subalgebra";
    pub const DIRECT_SUM_IDEAL: &str = "direct-sum-ideal";
    pub const PULLBACK_LAW: &str = "pullback-law";
    pub const PULLBACK_SUBALGEBRA: &str = "pullback-subalgebra";
    pub const PULLBACK_IDEAL: &str = "pullback-ideal";
    pub const PUSHFORWARD_LAW: &str = "pushforward-law";
    pub const PUSHFORWARD_SUBALGEBRA_ONTO: &str = "pushforward-subalgebra-onto";
    pub const PUSHFORWARD_SUBALGEBRA_NOT_ONTO: &str = "pushforward-subalgebra-not-onto";
    pub const PUSHFORWARD_IDEAL_ONTO: &str = "pushforward-ideal-onto";
    pub const PUSHFORWARD_IDEAL_NOT_ONTO: &str = "pushforward-ideal-not-onto";

    /// `(id, asserted)`; unasserted tallies are reported for information.
    pub const ALL: [(&str, bool); 15] = [
        (UPPER_LEVEL_SUBALGEBRA, true),
        (UPPER_LEVEL_IDEAL, true),
        (STRONG_UPPER_LEVEL_SUBALGEBRA, true),
        (STRONG_UPPER_LEVEL_IDEAL, true),
        (FLAG_TABLE_COHERENCE, true),
        (DIRECT_SUM_SUBALGEBRA, true),
        (DIRECT_SUM_IDEAL, false),
        (PULLBACK_LAW, true),
        (PULLBACK_SUBALGEBRA, true),
        (PULLBACK_IDEAL, true),
        (PUSHFORWARD_LAW, true),
        (PUSHFORWARD_SUBALGEBRA_ONTO, true),
        (PUSHFORWARD_SUBALGEBRA_NOT_ONTO, true),
        (PUSHFORWARD_IDEAL_ONTO, true),
        (PUSHFORWARD_IDEAL_NOT_ONTO, false),
    ];
}

/// Per-statement counts. `agreements + disagreements == instances`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremTally {
    pub id: &'static str,
    pub asserted: bool,
    pub instances: u64,
    pub agreements: u64,
    pub disagreements: u64,
    /// The first few disagreement witnesses, in batch order.
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub tallies: Vec<TheoremTally>,
}

impl SuiteReport {
    pub fn tally(&self, id: &str) -> Option<&TheoremTally> {
        self.tallies.iter().find(|t| t.id == id)
    }

    /// True when every asserted statement has zero disagreements.
    pub fn all_agree(&self) -> bool {
        self.tallies
            .iter()
            .filter(|t| t.asserted)
            .all(|t| t.disagreements == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub cap: u128,
    /// Largest number of candidate matrices enumerated per algebra pair.
    pub morphism_cap: u128,
    /// Largest carrier (in vectors) for direct sums and canonical maps.
    pub sum_cap: u128,
    pub cut_theorems: bool,
    pub coherence: bool,
    pub direct_sums: bool,
    pub morphisms: bool,
    pub canonical_morphisms: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            cap: DEFAULT_ENUMERATION_CAP,
            morphism_cap: 4096,
            sum_cap: 729,
            cut_theorems: true,
            coherence: true,
            direct_sums: true,
            morphisms: true,
            canonical_morphisms: true,
        }
    }
}

const MAX_WITNESSES: usize = 5;

type Outcome = (&'static str, std::result::Result<(), String>);

/// A deterministic batch cycling through the families and primes.
/// The example family is skipped when `max_dim < 3`.
pub fn seeded_batch(count: usize, primes: &[u32], max_dim: usize, seed: u64) -> Vec<InstanceParams> {
    let families: Vec<Family> = Family::ALL
        .into_iter()
        .filter(|f| *f != Family::PaperExample || max_dim >= 3)
        .collect();
    (0..count)
        .map(|k| {
            let s = mix_seed(seed, k as u64);
            let family = families[k % families.len()];
            let p = primes[(k / families.len()) % primes.len()];
            let dim = if family == Family::PaperExample {
                3
            } else {
                1 + (s % max_dim as u64) as usize
            };
            let flag_depth = 1 + ((s >> 8) % (dim as u64 + 1)) as usize;
            InstanceParams {
                p,
                dim,
                flag_depth,
                seed: s,
                family,
            }
        })
        .collect()
}

/// Runs every enabled statement over the batch and tallies, for each, how
/// often the flag-based computation and the pointwise oracle agree.
pub fn theorem_suite(batch: &[InstanceParams], config: &SuiteConfig) -> Result<SuiteReport> {
    let per_instance: Vec<Vec<Outcome>> = batch
        .par_iter()
        .map(|params| run_instance(params, config))
        .collect::<Result<_>>()?;
    let mut tallies: Vec<TheoremTally> = theorem::ALL
        .iter()
        .map(|&(id, asserted)| TheoremTally {
            id,
            asserted,
            instances: 0,
            agreements: 0,
            disagreements: 0,
            witnesses: Vec::new(),
        })
        .collect();
    for (params, outcomes) in batch.iter().zip(per_instance) {
        for (id, outcome) in outcomes {
            let t = tallies.iter_mut().find(|t| t.id == id).expect("known id");
            t.instances += 1;
            match outcome {
                Ok(()) => t.agreements += 1,
                Err(w) => {
                    t.disagreements += 1;
                    if t.witnesses.len() < MAX_WITNESSES {
                        t.witnesses.push(format!("{params:?}: {w}"));
                    }
                }
            }
        }
    }
    Ok(SuiteReport { tallies })
}

fn bool_outcome(id: &'static str, ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    (id, if ok { Ok(()) } else { Err(witness()) })
}

fn run_instance(params: &InstanceParams, config: &SuiteConfig) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    let cap = config.cap;
    let (a, sub) = random_instance_with(params, FlagKind::Subalgebra)?;
    let (_, ideal) = random_instance_with(params, FlagKind::Ideal)?;
    let (_, arbitrary) = random_instance_with(params, FlagKind::Arbitrary)?;
    let flags = [&sub, &ideal, &arbitrary];

    if config.cut_theorems {
        for mu in flags {
            cut_theorems(&a, mu, cap, &mut out)?;
        }
    }
    if config.coherence {
        for mu in flags {
            let table = table_from_flag(mu, cap)?;
            let mut ok = true;
            for (k, t) in table.entries().iter().enumerate() {
                if &mu.evaluate(&table.vector_at(k))? != t {
                    ok = false;
                }
            }
            let round_trip = flag_from_table(&table)?;
            out.push(bool_outcome(theorem::FLAG_TABLE_COHERENCE, ok && &round_trip == mu, || {
                format!("flag {mu:?} vs table round trip {round_trip:?}")
            }));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(params.seed, 0x5EED));
    let p = params.p as u128;

    if config.direct_sums {
        let arity = rng.gen_range(2..=3);
        let mut parts = vec![(a.clone(), sub.clone(), ideal.clone())];
        let mut total = a.dim();
        for k in 0..arity - 1 {
            let budget_dim = (0..=6).rev().find(|&d| p.pow((total + d) as u32) <= config.sum_cap);
            let Some(room) = budget_dim.filter(|&d| d >= 1) else {
                break;
            };
            let cp = companion(params, &mut rng, room.min(3), 0x100 + k as u64);
            let (b, bs) = random_instance_with(&cp, FlagKind::Subalgebra)?;
            let (_, bi) = random_instance_with(&cp, FlagKind::Ideal)?;
            total += b.dim();
            parts.push((b, bs, bi));
        }
        if parts.len() >= 2 {
            direct_sum_theorems(&parts, cap, &mut out)?;
        }
    }

    if config.morphisms || config.canonical_morphisms {
        let cp = companion(params, &mut rng, params.dim, 0x200);
        let (b, bsub) = random_instance_with(&cp, FlagKind::Subalgebra)?;
        let (_, bideal) = random_instance_with(&cp, FlagKind::Ideal)?;
        let src_flags = [(&sub, ClosureMode::Subalgebra), (&ideal, ClosureMode::Ideal)];
        let tgt_flags = [(&bsub, ClosureMode::Subalgebra), (&bideal, ClosureMode::Ideal)];
        if config.morphisms && checked_power(p, a.dim() * b.dim(), config.morphism_cap).is_ok() {
            for f in a.morphisms_to(&b, config.morphism_cap)? {
                morphism_theorems(&f, &src_flags, &tgt_flags, cap, &mut out)?;
            }
        }
        if config.canonical_morphisms {
            morphism_theorems(&Morphism::identity(&a), &src_flags, &src_flags, cap, &mut out)?;
            morphism_theorems(&Morphism::zero(&a, &b)?, &src_flags, &tgt_flags, cap, &mut out)?;
            if checked_power(p, a.dim() + b.dim(), config.sum_cap).is_ok() {
                let sum = HomLieAlgebra::direct_sum(&[&a, &b])?;
                let sum_sub = FuzzyFlag::direct_sum(&[&sub, &bsub])?;
                let sum_ideal = FuzzyFlag::direct_sum(&[&ideal, &bideal])?;
                let sum_flags = [(&sum_sub, ClosureMode::Subalgebra), (&sum_ideal, ClosureMode::Ideal)];
                let inc = Morphism::inclusion(&[&a, &b], 0, &sum)?;
                let proj = Morphism::projection(&[&a, &b], 0, &sum)?;
                morphism_theorems(&inc, &src_flags, &sum_flags, cap, &mut out)?;
                morphism_theorems(&proj, &sum_flags, &src_flags, cap, &mut out)?;
            }
        }
    }
    Ok(out)
}

fn companion(params: &InstanceParams, rng: &mut ChaCha8Rng, max_dim: usize, salt: u64) -> InstanceParams {
    let families: Vec<Family> = Family::ALL
        .into_iter()
        .filter(|f| *f != Family::PaperExample || max_dim >= 3)
        .collect();
    let family = *families.choose(rng).unwrap();
    let dim = if family == Family::PaperExample {
        3
    } else {
        rng.gen_range(1..=max_dim)
    };
    InstanceParams {
        p: params.p,
        dim,
        flag_depth: rng.gen_range(1..=dim + 1),
        seed: mix_seed(params.seed, salt),
        family,
    }
}

fn cut_theorems(a: &HomLieAlgebra, mu: &FuzzyFlag, cap: u128, out: &mut Vec<Outcome>) -> Result<()> {
    let table = table_from_flag(mu, cap)?;
    let levels = mu.image_levels();
    for mode in [ClosureMode::Subalgebra, ClosureMode::Ideal] {
        let pointwise = pointwise_check(&table, a, mode, cap)?;
        let flag_path = mu.check(a, mode)?.holds;
        let mut weak = true;
        let mut strong = true;
        for t in &levels {
            if let Some(u) = mu.upper_level(t) {
                weak &= a.violation(u, mode)?.is_none();
            }
            // empty strong cuts are vacuous
            if let Some(u) = mu.strong_upper_level(t) {
                strong &= a.violation(u, mode)?.is_none();
            }
        }
        let (weak_id, strong_id) = match mode {
            ClosureMode::Subalgebra => (
                theorem::UPPER_LEVEL_SUBALGEBRA,
                theorem::STRONG_UPPER_LEVEL_SUBALGEBRA,
            ),
            ClosureMode::Ideal => (theorem::UPPER_LEVEL_IDEAL, theorem::STRONG_UPPER_LEVEL_IDEAL),
        };
        let describe = |cuts: bool| {
            format!(
                "pointwise {} ({:?}), cuts {cuts}, flag {flag_path}",
                pointwise.holds,
                pointwise.failure.as_ref().map(ToString::to_string)
            )
        };
        out.push(bool_outcome(
            weak_id,
            pointwise.holds == weak && weak == flag_path,
            || describe(weak),
        ));
        out.push(bool_outcome(
            strong_id,
            pointwise.holds == strong && strong == flag_path,
            || describe(strong),
        ));
    }
    Ok(())
}

fn direct_sum_theorems(
    parts: &[(HomLieAlgebra, FuzzyFlag, FuzzyFlag)],
    cap: u128,
    out: &mut Vec<Outcome>,
) -> Result<()> {
    let algebras: Vec<&HomLieAlgebra> = parts.iter().map(|(a, _, _)| a).collect();
    let sum = HomLieAlgebra::direct_sum(&algebras)?;
    for (mode, id) in [
        (ClosureMode::Subalgebra, theorem::DIRECT_SUM_SUBALGEBRA),
        (ClosureMode::Ideal, theorem::DIRECT_SUM_IDEAL),
    ] {
        let flags: Vec<&FuzzyFlag> = parts
            .iter()
            .map(|(_, s, i)| match mode {
                ClosureMode::Subalgebra => s,
                ClosureMode::Ideal => i,
            })
            .collect();
        let mut hypothesis = true;
        for (a, mu) in algebras.iter().zip(&flags) {
            hypothesis &= mu.check(a, mode)?.holds;
        }
        if !hypothesis {
            continue;
        }
        let tables = flags
            .iter()
            .map(|mu| table_from_flag(mu, cap))
            .collect::<Result<Vec<_>>>()?;
        let table_refs: Vec<&FuzzyTable> = tables.iter().collect();
        let brute = brute_direct_sum(&table_refs, cap)?;
        let flag = FuzzyFlag::direct_sum(&flags)?;
        let law = table_from_flag(&flag, cap)? == brute;
        let flag_path = flag.check(&sum, mode)?.holds;
        let pointwise = pointwise_check(&brute, &sum, mode, cap)?;
        out.push(bool_outcome(id, law && flag_path && pointwise.holds, || {
            format!(
                "law {law}, flag {flag_path}, pointwise {:?}",
                pointwise.failure.map(|f| f.to_string())
            )
        }));
    }
    Ok(())
}

fn morphism_theorems(
    f: &Morphism,
    source_flags: &[(&FuzzyFlag, ClosureMode)],
    target_flags: &[(&FuzzyFlag, ClosureMode)],
    cap: u128,
    out: &mut Vec<Outcome>,
) -> Result<()> {
    let onto = f.is_surjective();
    for &(mu, mode) in target_flags {
        if !mu.check(f.target(), mode)?.holds {
            continue;
        }
        let pulled = mu.pullback(f)?;
        let brute = brute_pullback(f, &table_from_flag(mu, cap)?, cap)?;
        let law = table_from_flag(&pulled, cap)? == brute;
        out.push(bool_outcome(theorem::PULLBACK_LAW, law, || {
            format!("pullback along {:?} disagrees with x -> mu(f(x))", f.matrix())
        }));
        let flag_path = pulled.check(f.source(), mode)?.holds;
        let pointwise = pointwise_check(&brute, f.source(), mode, cap)?;
        let id = match mode {
            ClosureMode::Subalgebra => theorem::PULLBACK_SUBALGEBRA,
            ClosureMode::Ideal => theorem::PULLBACK_IDEAL,
        };
        out.push(bool_outcome(id, flag_path && pointwise.holds, || {
            format!(
                "map {:?}: flag {flag_path}, pointwise {:?}",
                f.matrix(),
                pointwise.failure.map(|w| w.to_string())
            )
        }));
    }
    for &(mu, mode) in source_flags {
        if !mu.check(f.source(), mode)?.holds {
            continue;
        }
        let pushed = mu.pushforward(f)?;
        let brute = brute_pushforward(f, &table_from_flag(mu, cap)?, cap)?;
        let law = table_from_flag(&pushed, cap)? == brute;
        out.push(bool_outcome(theorem::PUSHFORWARD_LAW, law, || {
            format!("pushforward along {:?} disagrees with fiber maxima", f.matrix())
        }));
        let flag_path = pushed.check(f.target(), mode)?.holds;
        let pointwise = pointwise_check(&brute, f.target(), mode, cap)?;
        let id = match (mode, onto) {
            (ClosureMode::Subalgebra, true) => theorem::PUSHFORWARD_SUBALGEBRA_ONTO,
            (ClosureMode::Subalgebra, false) => theorem::PUSHFORWARD_SUBALGEBRA_NOT_ONTO,
            (ClosureMode::Ideal, true) => theorem::PUSHFORWARD_IDEAL_ONTO,
            (ClosureMode::Ideal, false) => theorem::PUSHFORWARD_IDEAL_NOT_ONTO,
        };
        out.push(bool_outcome(id, flag_path && pointwise.holds, || {
            format!(
                "map {:?}: flag {flag_path}, pointwise {:?}",
                f.matrix(),
                pointwise.failure.map(|w| w.to_string())
            )
        }));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;

    fn lv(n: i64, d: i64) -> Level {
        Level::ratio(n, d).unwrap()
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn example_flag(field: FieldSpec, top: Subspace) -> FuzzyFlag {
        FuzzyFlag::new(
            field,
            3,
            vec![(Subspace::zero(field, 3), lv(4, 5)), (top, lv(2, 5))],
            Some(lv(1, 10)),
        )
        .unwrap()
    }

    fn e12(field: FieldSpec) -> Subspace {
        Subspace::span(
            field,
            3,
            vec![Vector::unit(field, 3, 0), Vector::unit(field, 3, 1)],
        )
        .unwrap()
    }

    #[test]
    fn example_table_multiplicities() {
        let f5 = gf(5);
        let table = table_from_flag(&example_flag(f5, e12(f5)), DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(table.entries().len(), 125);
        let count = |t: Level| table.entries().iter().filter(|&e| *e == t).count();
        assert_eq!(count(lv(4, 5)), 1);
        assert_eq!(count(lv(2, 5)), 24);
        assert_eq!(count(lv(1, 10)), 100);
    }

    #[test]
    fn small_table_from_flag() {
        let f2 = gf(2);
        let mu = FuzzyFlag::new(
            f2,
            2,
            vec![
                (Subspace::zero(f2, 2), Level::one()),
                (
                    Subspace::span(f2, 2, vec![Vector::unit(f2, 2, 0)]).unwrap(),
                    lv(1, 2),
                ),
            ],
            Some(Level::zero()),
        )
        .unwrap();
        let table = table_from_flag(&mu, 100).unwrap();
        assert_eq!(
            table.entries(),
            &[Level::one(), Level::zero(), lv(1, 2), Level::zero()]
        );
        let constant = FuzzyFlag::constant(f2, 2, lv(1, 3));
        assert!(table_from_flag(&constant, 100)
            .unwrap()
            .entries()
            .iter()
            .all(|t| *t == lv(1, 3)));
        assert!(matches!(
            table_from_flag(&FuzzyFlag::constant(FieldSpec::Rationals, 1, lv(1, 3)), 100),
            Err(Error::UnsupportedField)
        ));
        assert!(matches!(
            table_from_flag(&FuzzyFlag::constant(f2, 4, lv(1, 3)), 15),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn pointwise_examples() {
        let f5 = gf(5);
        let a = paper_example(f5);
        let table = table_from_flag(&example_flag(f5, e12(f5)), DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(pointwise_check(&table, &a, ClosureMode::Ideal, DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .holds);

        let e3 = Subspace::span(f5, 3, vec![Vector::unit(f5, 3, 2)]).unwrap();
        let table = table_from_flag(&example_flag(f5, e3), DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(pointwise_check(&table, &a, ClosureMode::Subalgebra, DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .holds);
        let report = pointwise_check(&table, &a, ClosureMode::Ideal, DEFAULT_ENUMERATION_CAP).unwrap();
        let w = report.failure.unwrap();
        assert_eq!(w.condition, Condition::Bracket);
        assert_eq!(w.x, vec![0, 0, 1]);
        assert_eq!(w.y, Some(vec![1, 0, 0]));
        assert_eq!((w.lhs, w.rhs), (lv(1, 10), lv(2, 5)));
    }

    #[test]
    fn abelian_zero_twist_accepts_any_leveled_table() {
        let f3 = gf(3);
        let a = HomLieAlgebra::abelian(f3, Matrix::zero(f3, 2, 2)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mu = random_flag(&a, 3, FlagKind::Arbitrary, &mut rng).unwrap();
            let table = table_from_flag(&mu, 100).unwrap();
            for mode in [ClosureMode::Subalgebra, ClosureMode::Ideal] {
                assert!(pointwise_check(&table, &a, mode, 100).unwrap().holds);
            }
        }
    }

    #[test]
    fn pointwise_detects_non_subspace_cuts() {
        let f2 = gf(2);
        let a = HomLieAlgebra::abelian(f2, Matrix::zero(f2, 2, 2)).unwrap();
        let table = FuzzyTable::new(f2, 2, vec![Level::one(), lv(1, 2), lv(1, 2), Level::zero()]).unwrap();
        let w = pointwise_check(&table, &a, ClosureMode::Subalgebra, 100)
            .unwrap()
            .failure
            .unwrap();
        assert_eq!(w.condition, Condition::Sum);
    }

    #[test]
    fn instances_are_deterministic_and_valid() {
        for family in Family::ALL {
            for p in [2, 3, 5] {
                let dim = if family == Family::PaperExample { 3 } else { 2 };
                let params = InstanceParams {
                    p,
                    dim,
                    flag_depth: dim + 1,
                    seed: 42,
                    family,
                };
                let first = random_instance(&params).unwrap();
                assert_eq!(first, random_instance(&params).unwrap());
                assert!(first.0.check_axioms().valid);
                assert!(first.1.is_fuzzy_subalgebra(&first.0).unwrap().holds);
                let (b, ideal) = random_instance_with(&params, FlagKind::Ideal).unwrap();
                assert_eq!(b, first.0);
                assert!(ideal.is_fuzzy_ideal(&b).unwrap().holds);
            }
        }
    }

    #[test]
    fn invalid_params_are_rejected() {
        let ok = InstanceParams {
            p: 2,
            dim: 2,
            flag_depth: 2,
            seed: 0,
            family: Family::ZeroAlpha,
        };
        assert!(ok.validate().is_ok());
        for bad in [
            InstanceParams { p: 7, ..ok },
            InstanceParams { dim: 0, ..ok },
            InstanceParams { dim: 4, ..ok },
            InstanceParams { flag_depth: 4, ..ok },
            InstanceParams { family: Family::PaperExample, ..ok },
        ] {
            assert!(matches!(random_instance(&bad), Err(Error::InvalidParams(_))));
        }
    }

    #[test]
    fn search_with_constant_flags_exhausts() {
        let params = InstanceParams {
            p: 2,
            dim: 2,
            flag_depth: 1,
            seed: 3,
            family: Family::ZeroAlpha,
        };
        let finding = search_ideal_sum_counterexample(&params, 1).unwrap();
        assert_eq!(finding.kind, FindingKind::Exhausted);
        assert_eq!(finding.checked_count, 1);
        assert!(matches!(
            search_ideal_sum_counterexample(&params, 0),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn brute_transports_match_flag_transports() {
        let f2 = gf(2);
        let a = paper_example(f2);
        let b = HomLieAlgebra::abelian(f2, Matrix::zero(f2, 1, 1)).unwrap();
        let sum = HomLieAlgebra::direct_sum(&[&a, &b]).unwrap();
        let mu = example_flag(f2, e12(f2));
        let inc = Morphism::inclusion(&[&a, &b], 0, &sum).unwrap();
        let table = table_from_flag(&mu, 100).unwrap();
        let pushed = brute_pushforward(&inc, &table, 100).unwrap();
        assert_eq!(table_from_flag(&mu.pushforward(&inc).unwrap(), 100).unwrap(), pushed);
        let proj = Morphism::projection(&[&a, &b], 0, &sum).unwrap();
        let pulled = brute_pullback(&proj, &table, 100).unwrap();
        assert_eq!(table_from_flag(&mu.pullback(&proj).unwrap(), 100).unwrap(), pulled);
    }
}
