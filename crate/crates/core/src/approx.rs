//! Hilbert series prefixes of Nichols algebras and their covers, truncated
//! algebras `A_{≤d}`, and the free extension of a truncated algebra.
//!
//! The cover of degree `d` is the free algebra on `V` modulo the kernels of
//! `Q_2, …, Q_d`. The extension of a truncated algebra `A` is the free
//! algebra on `A_1 ⊕ … ⊕ A_d` modulo `x ⊗ y − m(x ⊗ y)` for
//! `deg x + deg y ≤ d`. Both are compared degree by degree with exact ranks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{pow_u128, quantum_symmetrizer, symmetrizer_rank, Braiding, Budget, Options};
use crate::error::{Error, Result};
use crate::linalg::{MatrixJson, RowEchelon, SparseMatrix, SparseVector};
use crate::scalar::ExactScalar;
use crate::tensor::{concat_index, ideal_spanning_vectors, quotient_dims, shuffle_matrix, word_basis, GradedGenerators, RelationSet, WordBasis};

/// Whether a degree of a [`HilbertPrefix`] was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeFlag {
    Exact,
    BudgetTruncated,
}

impl fmt::Display for DegreeFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeFlag::Exact => "exact",
            DegreeFlag::BudgetTruncated => "budget-truncated",
        })
    }
}

/// Graded dimensions in degrees `0..=N`; degrees past a budget stop are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertPrefix {
    dims: Vec<Option<usize>>,
}

impl HilbertPrefix {
    pub fn exact(dims: Vec<usize>) -> Self {
        debug_assert_eq!(dims.first(), Some(&1));
        HilbertPrefix { dims: dims.into_iter().map(Some).collect() }
    }

    /// The computed `dims`, padded with truncated entries up to `n_max`.
    pub fn partial(dims: Vec<usize>, n_max: usize) -> Self {
        let mut out: Vec<Option<usize>> = dims.into_iter().map(Some).collect();
        out.resize(n_max + 1, None);
        HilbertPrefix { dims: out }
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<usize> {
        self.dims.get(n).copied().flatten()
    }

    pub fn is_complete(&self) -> bool {
        self.dims.iter().all(Option::is_some)
    }

    /// All dimensions, if none was truncated.
    pub fn dims(&self) -> Option<Vec<usize>> {
        self.dims.iter().copied().collect()
    }

    pub fn entries(&self) -> &[Option<usize>] {
        &self.dims
    }

    pub fn flag(&self, n: usize) -> DegreeFlag {
        if self.get(n).is_some() {
            DegreeFlag::Exact
        } else {
            DegreeFlag::BudgetTruncated
        }
    }

    /// Tab-separated table with header `degree\tdim\tflag`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("degree\tdim\tflag\n");
        for (n, d) in self.dims.iter().enumerate() {
            match d {
                Some(d) => out.push_str(&format!("{n}\t{d}\t{}\n", DegreeFlag::Exact)),
                None => out.push_str(&format!("{n}\tNA\t{}\n", DegreeFlag::BudgetTruncated)),
            }
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let flags: Vec<String> = (0..self.dims.len()).map(|n| self.flag(n).to_string()).collect();
        serde_json::json!({ "dims": self.dims, "flags": flags })
    }
}

/// Runs `f` for degrees `1..=n_max`, turning a budget stop into a partial prefix.
fn degreewise(n_max: usize, mut f: impl FnMut(usize) -> Result<usize>) -> Result<HilbertPrefix> {
    let mut dims = vec![1];
    for n in 1..=n_max {
        match f(n) {
            Ok(d) => dims.push(d),
            Err(e) => return Err(e.with_partial(HilbertPrefix::partial(dims, n_max))),
        }
    }
    Ok(HilbertPrefix::exact(dims))
}

/// `dim B(V)_n = rank Q_n`.
pub fn nichols_dims(c: &Braiding, n_max: usize, opts: &Options) -> Result<HilbertPrefix> {
    degreewise(n_max, |n| symmetrizer_rank(c, n, opts))
}

/// Relations `ker Q_j` for `2 ≤ j ≤ d`.
pub fn nichols_relations(c: &Braiding, d: usize, opts: &Options) -> Result<RelationSet> {
    let mut rels = RelationSet::new();
    for j in 2..=d {
        rels.extend(j, quantum_symmetrizer(c, j, opts)?.nullspace_basis());
    }
    Ok(rels)
}

/// Dimensions of `T(V) / (ker Q_2 + … + ker Q_d)`.
pub fn cover_dims(c: &Braiding, d: usize, n_max: usize, opts: &Options) -> Result<HilbertPrefix> {
    if d == 0 {
        return Err(Error::Malformed("cover degree d must be at least 1".into()));
    }
    let rels = match nichols_relations(c, d.min(n_max.max(1)), opts) {
        Ok(r) => r,
        Err(e) => return Err(e.with_partial(HilbertPrefix::partial(vec![1], n_max))),
    };
    let gens = GradedGenerators::degree_one(c.dim());
    quotient_dims(&gens, &rels, n_max, &opts.budget).map(HilbertPrefix::exact)
}

/// Degree-by-degree comparison of a cover with the Nichols algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CoverVerdict {
    /// Equal dimensions in all degrees `≤ up_to`.
    Agree { up_to: usize },
    /// The first degree where the cover is larger.
    Mismatch { degree: usize, cover_dim: usize, nichols_dim: usize },
}

impl CoverVerdict {
    pub fn agrees(&self) -> bool {
        matches!(self, CoverVerdict::Agree { .. })
    }
}

impl fmt::Display for CoverVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverVerdict::Agree { up_to } => write!(f, "agree up to degree {up_to}"),
            CoverVerdict::Mismatch { degree, cover_dim, nichols_dim } => {
                write!(f, "mismatch at degree {degree}: cover {cover_dim}, nichols {nichols_dim}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub d: usize,
    pub verdict: CoverVerdict,
    pub cover: HilbertPrefix,
    pub nichols: HilbertPrefix,
}

pub fn cover_check(c: &Braiding, d: usize, n_max: usize, opts: &Options) -> Result<CoverReport> {
    let nichols = nichols_dims(c, n_max, opts)?;
    let cover = cover_dims(c, d, n_max, opts)?;
    let mut verdict = CoverVerdict::Agree { up_to: n_max };
    for n in 0..=n_max {
        let (a, b) = (cover.get(n).unwrap(), nichols.get(n).unwrap());
        if a != b {
            verdict = CoverVerdict::Mismatch { degree: n, cover_dim: a, nichols_dim: b };
            break;
        }
    }
    Ok(CoverReport { d, verdict, cover, nichols })
}

/// A connected graded algebra cut off above degree `d`: components
/// `A_1, …, A_d` and products `m[i][j] : A_i ⊗ A_j → A_{i+j}` for `i + j ≤ d`.
/// `A_i ⊗ A_j` uses the basis `a ⊗ b` at index `a · dim A_j + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBialgebra {
    d: usize,
    dims: Vec<usize>,
    modulus: u32,
    mult: BTreeMap<(usize, usize), SparseMatrix>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MultJson {
    pub i: usize,
    pub j: usize,
    pub matrix: MatrixJson,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TruncatedJson {
    pub d: usize,
    /// Dimensions of degrees `1..=d`.
    pub dims: Vec<usize>,
    pub mult: Vec<MultJson>,
}

impl TruncatedBialgebra {
    /// `dims[k]` is the dimension of degree `k + 1`. Checks shapes and associativity.
    pub fn new(d: usize, dims: Vec<usize>, mult: BTreeMap<(usize, usize), SparseMatrix>) -> Result<Self> {
        if d == 0 || dims.len() != d {
            return Err(Error::Shape(format!("need dimensions for degrees 1..={d}, got {}", dims.len())));
        }
        let moduli: Vec<u32> = mult.values().map(|m| m.modulus()).collect();
        let modulus = moduli.iter().copied().fold(1, crate::scalar::lcm_modulus);
        let mut mult = mult;
        for m in mult.values_mut() {
            if m.modulus() != modulus {
                *m = m.embed(modulus)?;
            }
        }
        let a = TruncatedBialgebra { d, dims, modulus, mult };
        for i in 1..d {
            for j in 1..=d - i {
                let m = a.mult.get(&(i, j)).ok_or_else(|| Error::Shape(format!("missing product table m[{i}][{j}]")))?;
                let (r, c) = (a.dim(i + j), a.dim(i) * a.dim(j));
                if m.rows() != r || m.cols() != c {
                    return Err(Error::Shape(format!(
                        "m[{i}][{j}] is {}x{}, expected {r}x{c}",
                        m.rows(),
                        m.cols()
                    )));
                }
            }
        }
        if let Some(&(i, j)) = a.mult.keys().find(|(i, j)| *i == 0 || *j == 0 || i + j > d) {
            return Err(Error::Shape(format!("unexpected product table m[{i}][{j}]")));
        }
        a.check_associative()?;
        Ok(a)
    }

    fn check_associative(&self) -> Result<()> {
        for i in 1..=self.d {
            for j in 1..=self.d {
                for k in 1..=self.d {
                    if i + j + k > self.d {
                        continue;
                    }
                    let id = |n: usize| SparseMatrix::identity(self.dim(n), self.modulus);
                    let left = self.mult[&(i + j, k)].mul(&self.mult[&(i, j)].kron(&id(k)));
                    let right = self.mult[&(i, j + k)].mul(&id(i).kron(&self.mult[&(j, k)]));
                    if left != right {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Dimension of degree `n`: 1 for `n = 0`, 0 above `d`.
    pub fn dim(&self, n: usize) -> usize {
        match n {
            0 => 1,
            n if n <= self.d => self.dims[n - 1],
            _ => 0,
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn mult(&self, i: usize, j: usize) -> Option<&SparseMatrix> {
        self.mult.get(&(i, j))
    }

    pub fn to_json(&self) -> TruncatedJson {
        TruncatedJson {
            d: self.d,
            dims: self.dims.clone(),
            mult: self.mult.iter().map(|(&(i, j), m)| MultJson { i, j, matrix: m.to_json() }).collect(),
        }
    }

    pub fn from_json(j: TruncatedJson) -> Result<Self> {
        let mut mult = BTreeMap::new();
        for m in j.mult {
            if mult.insert((m.i, m.j), SparseMatrix::from_json(m.matrix)?).is_some() {
                return Err(Error::Malformed(format!("duplicate product table m[{}][{}]", m.i, m.j)));
            }
        }
        Self::new(j.d, j.dims, mult)
    }
}

/// Which graded algebra built on a braided vector space to truncate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraTag {
    /// `T(V)` with concatenation.
    Tensor,
    /// `T(V)` with the braided shuffle product.
    Shuffle,
    /// The Nichols algebra `B(V)`.
    Nichols,
}

impl FromStr for AlgebraTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tensor" => Ok(AlgebraTag::Tensor),
            "shuffle" => Ok(AlgebraTag::Shuffle),
            "nichols" => Ok(AlgebraTag::Nichols),
            other => Err(Error::Unsupported(format!("algebra tag {other:?} (expected tensor, shuffle or nichols)"))),
        }
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraTag::Tensor => "tensor",
            AlgebraTag::Shuffle => "shuffle",
            AlgebraTag::Nichols => "nichols",
        })
    }
}

/// A graded quotient `V_n / K_n` with the basis of classes of free columns.
struct QuotientPiece {
    echelon: RowEchelon,
    free: Vec<usize>,
    slot: Vec<usize>,
}

impl QuotientPiece {
    fn new(kernel: Vec<SparseVector>, ambient: usize, modulus: u32) -> Self {
        let echelon = RowEchelon::new(kernel, ambient, modulus).into_reduced();
        let free = echelon.free_columns();
        let mut slot = vec![usize::MAX; ambient];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        QuotientPiece { echelon, free, slot }
    }

    /// Coordinates of the class of `v` in the free-column basis.
    fn coords(&self, v: &SparseVector) -> SparseVector {
        let r = self.echelon.reduce(v);
        SparseVector::from_entries(self.free.len(), v.modulus(), r.entries().iter().map(|(i, x)| (self.slot[*i], x.clone())))
    }
}

/// Products of classes are classes of products of representatives.
fn quotient_tables(
    pieces: &[QuotientPiece],
    d: usize,
    modulus: u32,
    product: impl Fn(usize, usize, usize, usize) -> SparseVector,
) -> BTreeMap<(usize, usize), SparseMatrix> {
    let mut mult = BTreeMap::new();
    for i in 1..d {
        for j in 1..=d - i {
            let cols: Vec<SparseVector> = pieces[i]
                .free
                .iter()
                .flat_map(|&a| pieces[j].free.iter().map(move |&b| (a, b)))
                .map(|(a, b)| pieces[i + j].coords(&product(i, a, j, b)))
                .collect();
            mult.insert((i, j), SparseMatrix::from_columns(pieces[i + j].free.len(), modulus, cols));
        }
    }
    mult
}

/// `A_{≤d}` for `A` = tensor, shuffle or Nichols algebra of `(V, c)`.
///
/// For the Nichols algebra, degree `n` is `V^{⊗n} / ker Q_n` with the basis
/// of free columns of the reduced kernel; since `ker Q` is an ideal of
/// `T(V)` the class of a concatenation depends only on the classes.
pub fn truncate_graded_algebra(c: &Braiding, tag: AlgebraTag, d: usize, opts: &Options) -> Result<TruncatedBialgebra> {
    if d == 0 {
        return Err(Error::Malformed("truncation degree d must be at least 1".into()));
    }
    let dim = c.dim();
    let m = c.modulus();
    opts.budget.check(&format!("truncation at degree {d}"), pow_u128(dim, d), pow_u128(dim, d))?;
    let dims: Vec<usize> = (1..=d).map(|n| dim.pow(n as u32)).collect();
    let mut mult = BTreeMap::new();
    match tag {
        AlgebraTag::Tensor => {
            for i in 1..d {
                for j in 1..=d - i {
                    mult.insert((i, j), SparseMatrix::identity(dim.pow((i + j) as u32), m));
                }
            }
            TruncatedBialgebra::new(d, dims, mult)
        }
        AlgebraTag::Shuffle => {
            for i in 1..d {
                for j in 1..=d - i {
                    mult.insert((i, j), shuffle_matrix(c, i, j, &opts.budget)?);
                }
            }
            TruncatedBialgebra::new(d, dims, mult)
        }
        AlgebraTag::Nichols => {
            let mut pieces = vec![QuotientPiece::new(Vec::new(), 1, m)];
            for n in 1..=d {
                let kernel = if n == 1 { Vec::new() } else { quantum_symmetrizer(c, n, opts)?.nullspace_basis() };
                pieces.push(QuotientPiece::new(kernel, dim.pow(n as u32), m));
            }
            let mult = quotient_tables(&pieces, d, m, |i, a, j, b| {
                let (da, db) = (dim.pow(i as u32), dim.pow(j as u32));
                SparseVector::basis(da * db, m, a * db + b)
            });
            let dims = pieces[1..].iter().map(|p| p.free.len()).collect();
            TruncatedBialgebra::new(d, dims, mult)
        }
    }
}

/// `(T(W) / (rels))_{≤d}` for homogeneous relations.
pub fn truncate_presentation(gens: &GradedGenerators, rels: &RelationSet, d: usize, budget: &Budget) -> Result<TruncatedBialgebra> {
    if d == 0 {
        return Err(Error::Malformed("truncation degree d must be at least 1".into()));
    }
    let bases: Vec<WordBasis> = (0..=d).map(|n| word_basis(gens, n)).collect();
    let modulus = rels.degrees().flat_map(|(_, vs)| vs.iter().map(|v| v.modulus())).fold(1, crate::scalar::lcm_modulus);
    let mut pieces = vec![QuotientPiece::new(Vec::new(), 1, modulus)];
    for n in 1..=d {
        let span = ideal_spanning_vectors(gens, rels, n, budget)?;
        pieces.push(QuotientPiece::new(span, bases[n].dim(), modulus));
    }
    let mult = quotient_tables(&pieces, d, modulus, |i, a, j, b| {
        SparseVector::basis(bases[i + j].dim(), modulus, concat_index(&bases, i, a, j, b))
    });
    let dims = pieces[1..].iter().map(|p| p.free.len()).collect();
    TruncatedBialgebra::new(d, dims, mult)
}

/// Relations `x ⊗ y − m(x ⊗ y)` for basis elements with `deg x + deg y ≤ d`,
/// in the free algebra on `A_1 ⊕ … ⊕ A_d`.
pub fn extension_relations(a: &TruncatedBialgebra) -> (GradedGenerators, RelationSet) {
    let gens = GradedGenerators::new(a.dims.clone()).expect("d ≥ 1");
    let m = a.modulus;
    let mut rels = RelationSet::new();
    for n in 2..=a.d {
        let basis = word_basis(&gens, n);
        let single = basis.composition_index(&[n]).expect("composition (n)");
        let single_off = basis.block(single).start;
        for i in 1..n {
            let j = n - i;
            let pair = basis.block(basis.composition_index(&[i, j]).expect("composition (i, j)")).start;
            let table = &a.mult[&(i, j)];
            for col in 0..a.dim(i) * a.dim(j) {
                let mut entries = vec![(pair + col, ExactScalar::one(m))];
                entries.extend(table.column(col).entries().iter().map(|(r, x)| (single_off + r, -x)));
                rels.push(n, SparseVector::from_entries(basis.dim(), m, entries));
            }
        }
    }
    (gens, rels)
}

/// Graded dimensions of the free extension of `a`.
pub fn extension_dims(a: &TruncatedBialgebra, n_max: usize, budget: &Budget) -> Result<HilbertPrefix> {
    a.check_associative()?;
    let (gens, rels) = extension_relations(a);
    quotient_dims(&gens, &rels, n_max, budget).map(HilbertPrefix::exact)
}

/// Extension of the truncation: the `d`-th approximation of the chosen algebra.
pub fn approximation_dims(c: &Braiding, tag: AlgebraTag, d: usize, n_max: usize, opts: &Options) -> Result<HilbertPrefix> {
    let a = truncate_graded_algebra(c, tag, d, opts)?;
    extension_dims(&a, n_max, &opts.budget)
}

/// Dimensions of the free algebra on `dim` degree-one generators.
pub fn free_dims(dim: usize, n_max: usize) -> HilbertPrefix {
    HilbertPrefix::exact((0..=n_max).map(|n| dim.pow(n as u32)).collect())
}

/// Two readings of the second approximation of the shuffle algebra on `n`
/// letters under the flip, side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShuffleSecondApproximation {
    /// Extension of the degree-2 truncation (relations from products of total degree ≤ 2 only).
    pub extension: HilbertPrefix,
    /// Generators `x_i` (degree 1), `x_ij` (degree 2) with relations
    /// `x_i x_j = x_ij + x_ji` and `x_ij x_kl = x_ij x_l = x_l x_ij = 0`.
    pub presented: HilbertPrefix,
}

/// Relations of the presented algebra described in [`ShuffleSecondApproximation`].
pub fn shuffle_second_presentation(n: usize) -> (GradedGenerators, RelationSet) {
    let gens = GradedGenerators::new(vec![n, n * n]).expect("two degrees");
    let mut rels = RelationSet::new();
    let b2 = word_basis(&gens, 2);
    let (xx, t) = (b2.block(b2.composition_index(&[1, 1]).unwrap()).start, b2.block(b2.composition_index(&[2]).unwrap()).start);
    for i in 0..n {
        for j in 0..n {
            let es = vec![
                (xx + i * n + j, ExactScalar::one(1)),
                (t + i * n + j, ExactScalar::from_integer(1, -1)),
                (t + j * n + i, ExactScalar::from_integer(1, -1)),
            ];
            rels.push(2, SparseVector::from_entries(b2.dim(), 1, es));
        }
    }
    let b3 = word_basis(&gens, 3);
    for comp in [[1usize, 2], [2, 1]] {
        let block = b3.block(b3.composition_index(&comp).unwrap());
        rels.extend(3, block.map(|k| SparseVector::basis(b3.dim(), 1, k)));
    }
    let b4 = word_basis(&gens, 4);
    let block = b4.block(b4.composition_index(&[2, 2]).unwrap());
    rels.extend(4, block.map(|k| SparseVector::basis(b4.dim(), 1, k)));
    (gens, rels)
}

pub fn shuffle_second_approximation(flip: &Braiding, n_max: usize, opts: &Options) -> Result<ShuffleSecondApproximation> {
    let extension = approximation_dims(flip, AlgebraTag::Shuffle, 2, n_max, opts)?;
    let (gens, rels) = shuffle_second_presentation(flip.dim());
    let presented = HilbertPrefix::exact(quotient_dims(&gens, &rels, n_max, &opts.budget)?);
    Ok(ShuffleSecondApproximation { extension, presented })
}

/// A seeded random associative truncated algebra with every `dim A_i ≤ max_dim`:
/// a free algebra on random generators cut down by random sparse integer
/// relations until small enough.
pub fn random_truncated_bialgebra(seed: u64, max_d: usize, max_dim: usize) -> TruncatedBialgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = rng.gen_range(1..=max_d);
    let mut gdims: Vec<usize> = (0..d).map(|i| if i == 0 { rng.gen_range(1..=max_dim) } else { rng.gen_range(0..=2) }).collect();
    gdims[0] = gdims[0].max(1);
    let gens = GradedGenerators::new(gdims).unwrap();
    let mut rels = RelationSet::new();
    let budget = Budget::unlimited();
    loop {
        let a = truncate_presentation(&gens, &rels, d, &budget).expect("presentation truncation");
        let Some(n) = (1..=d).find(|&n| a.dim(n) > max_dim) else { return a };
        // Add a random relation in the first oversized degree.
        let ambient = word_basis(&gens, n).dim();
        let nnz = rng.gen_range(1..=3.min(ambient));
        let entries: Vec<(usize, ExactScalar)> = (0..nnz)
            .map(|_| {
                let v = loop {
                    let v = rng.gen_range(-3i64..=3);
                    if v != 0 {
                        break v;
                    }
                };
                (rng.gen_range(0..ambient), ExactScalar::from_integer(1, v))
            })
            .collect();
        rels.push(n, SparseVector::from_entries(ambient, 1, entries));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::braiding_diagonal;

    fn int(v: i64) -> ExactScalar {
        ExactScalar::from_integer(1, v)
    }

    fn line(q: i64) -> Braiding {
        braiding_diagonal(&[vec![int(q)]]).unwrap()
    }

    fn flip(dim: usize) -> Braiding {
        braiding_diagonal(&vec![vec![int(1); dim]; dim]).unwrap()
    }

    #[test]
    fn nichols_examples() {
        let o = Options::default();
        assert_eq!(nichols_dims(&line(-1), 4, &o).unwrap().dims().unwrap(), vec![1, 1, 0, 0, 0]);
        assert_eq!(nichols_dims(&flip(2), 4, &o).unwrap().dims().unwrap(), vec![1, 2, 3, 4, 5]);
        let ext = braiding_diagonal(&vec![vec![int(-1); 3]; 3]).unwrap();
        assert_eq!(nichols_dims(&ext, 4, &o).unwrap().dims().unwrap(), vec![1, 3, 3, 1, 0]);
    }

    #[test]
    fn cover_examples() {
        let o = Options::default();
        assert_eq!(cover_dims(&flip(2), 1, 3, &o).unwrap().dims().unwrap(), vec![1, 2, 4, 8]);
        assert_eq!(cover_dims(&line(-1), 2, 4, &o).unwrap().dims().unwrap(), vec![1, 1, 0, 0, 0]);
        assert_eq!(cover_check(&line(-1), 2, 5, &o).unwrap().verdict, CoverVerdict::Agree { up_to: 5 });
        assert!(cover_check(&flip(2), 2, 5, &o).unwrap().verdict.agrees());
        assert_eq!(
            cover_check(&flip(2), 1, 3, &o).unwrap().verdict,
            CoverVerdict::Mismatch { degree: 2, cover_dim: 4, nichols_dim: 3 }
        );
    }

    #[test]
    fn budget_stop_keeps_partial_prefix() {
        let o = Options { budget: Budget { ambient: 20, work: 1_000_000 }, ..Options::default() };
        match nichols_dims(&flip(2), 6, &o) {
            Err(Error::Budget { partial: Some(p), .. }) => {
                assert_eq!(p.entries(), &[Some(1), Some(2), Some(3), Some(4), Some(5), None, None]);
                assert!(p.to_tsv().contains("5\tNA\tbudget-truncated"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn truncation_examples() {
        let o = Options::default();
        let t = truncate_graded_algebra(&flip(2), AlgebraTag::Tensor, 2, &o).unwrap();
        assert_eq!(*t.mult(1, 1).unwrap(), SparseMatrix::identity(4, 1));
        let s = truncate_graded_algebra(&flip(1), AlgebraTag::Shuffle, 2, &o).unwrap();
        assert_eq!(s.mult(1, 1).unwrap().get(0, 0), int(2));
        let s1 = truncate_graded_algebra(&flip(1), AlgebraTag::Shuffle, 1, &o).unwrap();
        assert!(s1.mult.is_empty());
        let n = truncate_graded_algebra(&line(-1), AlgebraTag::Nichols, 3, &o).unwrap();
        assert_eq!(n.dims(), &[1, 0, 0]);
        assert!(matches!("free".parse::<AlgebraTag>(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn extension_examples() {
        let o = Options::default();
        let s = truncate_graded_algebra(&flip(1), AlgebraTag::Shuffle, 2, &o).unwrap();
        assert_eq!(extension_dims(&s, 3, &o.budget).unwrap().dims().unwrap(), vec![1, 1, 1, 1]);
        for dim in 1..=2 {
            for d in 1..=3 {
                let t = truncate_graded_algebra(&flip(dim), AlgebraTag::Tensor, d, &o).unwrap();
                assert_eq!(extension_dims(&t, 4, &o.budget).unwrap(), free_dims(dim, 4));
            }
        }
        assert_eq!(
            approximation_dims(&line(-1), AlgebraTag::Nichols, 2, 4, &o).unwrap().dims().unwrap(),
            vec![1, 1, 0, 0, 0]
        );
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // dim A_1 = 1, A_2 = 1, A_3 = 1 with x·x = t, x·t = t', t·x = 2t'.
        let mut mult = BTreeMap::new();
        mult.insert((1, 1), SparseMatrix::from_dense(1, &[vec![int(1)]]));
        mult.insert((1, 2), SparseMatrix::from_dense(1, &[vec![int(1)]]));
        mult.insert((2, 1), SparseMatrix::from_dense(1, &[vec![int(2)]]));
        assert!(matches!(TruncatedBialgebra::new(3, vec![1, 1, 1], mult), Err(Error::NotAssociative { i: 1, j: 1, k: 1 })));
    }

    #[test]
    fn shuffle_second_approximation_side_by_side() {
        let r = shuffle_second_approximation(&flip(1), 4, &Options::default()).unwrap();
        assert_eq!(r.extension.dims().unwrap(), vec![1, 1, 1, 1, 1]);
        assert_eq!(r.presented.dims().unwrap(), vec![1, 1, 1, 0, 0]);
    }

    #[test]
    fn random_fixtures_are_small_and_associative() {
        for seed in 0..10 {
            let a = random_truncated_bialgebra(seed, 3, 3);
            assert!(a.dims().iter().all(|&x| x <= 3));
            let back = TruncatedBialgebra::from_json(serde_json::from_value(serde_json::to_value(a.to_json()).unwrap()).unwrap()).unwrap();
            assert_eq!(back, a);
        }
    }
}
