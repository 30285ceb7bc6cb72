//! Braided vector spaces, the tensor representations `ρ_n` of the braid
//! group, Matsumoto lifts of permutations, and quantum symmetrizers.
//!
//! Basis conventions: `V^{⊗n}` has basis `e_{i_1} ⊗ … ⊗ e_{i_n}` at index
//! `Σ i_k dim^{n-k}` (first factor most significant). The generator `σ_j`
//! (1-based) acts by `c` on factors `j` and `j + 1`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cocycle::{RackCocycle, RackCocycleJson};
use crate::error::{Error, Result};
use crate::linalg::{rank, Accumulator, SparseMatrix, SparseVector};
use crate::rack::permutations_lex;
use crate::scalar::{embed_common, ExactScalar};

/// Resource limits for the exponential-size computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest ambient dimension `dim^n` of a single graded piece.
    pub ambient: u128,
    /// Largest operation count, e.g. `n! · dim^n` for a symmetrizer.
    pub work: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { ambient: 500_000, work: 50_000_000 }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { ambient: u128::MAX, work: u128::MAX }
    }

    pub fn check(&self, what: &str, ambient: u128, work: u128) -> Result<()> {
        if ambient > self.ambient {
            return Err(Error::Budget { what: format!("{what} (ambient dimension)"), required: ambient, limit: self.ambient, partial: None });
        }
        if work > self.work {
            return Err(Error::Budget { what: format!("{what} (work)"), required: work, limit: self.work, partial: None });
        }
        Ok(())
    }
}

/// Knobs shared by the graded computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub budget: Budget,
    /// Assemble independent columns on the rayon pool.
    pub parallel: bool,
    /// Compute symmetrizer ranks block by block (see [`tensor_blocks`]).
    pub blocked: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { budget: Budget::default(), parallel: true, blocked: false }
    }
}

pub(crate) fn pow_u128(base: usize, exp: usize) -> u128 {
    (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX)
}

pub(crate) fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, |a, b| a.checked_mul(b)).unwrap_or(u128::MAX)
}

pub(crate) fn binomial_u128(n: usize, k: usize) -> u128 {
    let k = k.min(n - k.min(n));
    (0..k as u128).fold(1u128, |acc, i| acc.saturating_mul(n as u128 - i) / (i + 1))
}

/// Where a braiding came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Rack(Box<RackCocycle>),
    Diagonal(Vec<Vec<ExactScalar>>),
    Explicit,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ProvenanceJson {
    Rack { cocycle: RackCocycleJson },
    Diagonal { q: Vec<Vec<ExactScalar>> },
    Explicit,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BraidingJson {
    pub dim: usize,
    pub entries: Vec<(usize, usize, ExactScalar)>,
    #[serde(default = "explicit")]
    pub provenance: ProvenanceJson,
}

fn explicit() -> ProvenanceJson {
    ProvenanceJson::Explicit
}

/// An invertible solution `c` of the braid equation on `V ⊗ V`.
#[derive(Clone, Debug)]
pub struct Braiding {
    dim: usize,
    c: SparseMatrix,
    c_inv: SparseMatrix,
    provenance: Provenance,
    /// For monomial `c`: column `k` ↦ its single (row, value), and the same for `c⁻¹`.
    monomial: Option<(Vec<(usize, ExactScalar)>, Vec<(usize, ExactScalar)>)>,
}

impl PartialEq for Braiding {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.c == other.c
    }
}

fn monomial_columns(m: &SparseMatrix) -> Option<Vec<(usize, ExactScalar)>> {
    m.columns()
        .iter()
        .map(|col| match col.entries() {
            [(r, v)] => Some((*r, v.clone())),
            _ => None,
        })
        .collect()
}

fn square_root_dim(rows: usize, cols: usize) -> Result<usize> {
    if rows != cols {
        return Err(Error::Shape(format!("braiding must be square, got {rows}x{cols}")));
    }
    let d = (rows as f64).sqrt().round() as usize;
    if d * d != rows {
        return Err(Error::Shape(format!("size {rows} is not dim² for any dim")));
    }
    Ok(d)
}

/// `c` acting on factors `j, j+1` (1-based `j`) of `V^{⊗n}`.
fn apply_local(c: &SparseMatrix, dim: usize, n: usize, j: usize, v: &SparseVector) -> SparseVector {
    let lo = pow_u128(dim, n - 1 - j) as usize;
    let hi = lo * dim;
    let mut acc = Accumulator::new(v.modulus());
    for (idx, x) in v.entries() {
        let a = (idx / hi) % dim;
        let b = (idx / lo) % dim;
        let base = idx - a * hi - b * lo;
        for (r, y) in c.column(a * dim + b).entries() {
            acc.add(base + (r / dim) * hi + (r % dim) * lo, x * y);
        }
    }
    acc.into_vector(v.dim())
}

/// Result of an exhaustive braid-equation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum YangBaxterVerdict {
    Ok,
    /// `(c⊗id)(id⊗c)(c⊗id)` and `(id⊗c)(c⊗id)(id⊗c)` differ on this basis vector of `V^{⊗3}`.
    Violation { basis_index: usize },
}

impl YangBaxterVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, YangBaxterVerdict::Ok)
    }
}

/// Compares both sides of the braid equation column by column on `V^{⊗3}`.
pub fn check_yang_baxter(c: &SparseMatrix) -> Result<YangBaxterVerdict> {
    let dim = square_root_dim(c.rows(), c.cols())?;
    let n3 = dim * dim * dim;
    for k in 0..n3 {
        let e = SparseVector::basis(n3, c.modulus(), k);
        let l = apply_local(c, dim, 3, 2, &apply_local(c, dim, 3, 1, &apply_local(c, dim, 3, 2, &e)));
        let r = apply_local(c, dim, 3, 1, &apply_local(c, dim, 3, 2, &apply_local(c, dim, 3, 1, &e)));
        if l != r {
            return Ok(YangBaxterVerdict::Violation { basis_index: k });
        }
    }
    Ok(YangBaxterVerdict::Ok)
}

impl Braiding {
    /// Validates invertibility and the braid equation.
    pub fn from_matrix(dim: usize, c: SparseMatrix, provenance: Provenance) -> Result<Self> {
        if let YangBaxterVerdict::Violation { basis_index } = check_yang_baxter(&c)? {
            return Err(Error::NotYangBaxter { basis_index });
        }
        Self::invertible_operator(dim, c, provenance)
    }

    /// An invertible operator on `V ⊗ V` that need not satisfy the braid
    /// equation; only the generator actions are meaningful then.
    pub(crate) fn invertible_operator(dim: usize, c: SparseMatrix, provenance: Provenance) -> Result<Self> {
        let d = square_root_dim(c.rows(), c.cols())?;
        if d != dim {
            return Err(Error::Shape(format!("matrix of size {} does not act on V⊗V with dim V = {dim}", c.rows())));
        }
        let monomial = monomial_columns(&c);
        let c_inv = match &monomial {
            Some(cols) => {
                let mut inv = vec![None; cols.len()];
                for (k, (r, v)) in cols.iter().enumerate() {
                    if inv[*r].is_some() {
                        return Err(Error::Singular);
                    }
                    inv[*r] = Some((k, v.inverse()?));
                }
                SparseMatrix::from_triplets(
                    c.rows(),
                    c.cols(),
                    c.modulus(),
                    inv.into_iter().enumerate().map(|(r, e)| {
                        let (k, v) = e.expect("bijective");
                        (k, r, v)
                    }),
                )
            }
            None => c.inverse()?,
        };
        let monomial = monomial.map(|fwd| (fwd, monomial_columns(&c_inv).expect("inverse of monomial is monomial")));
        Ok(Braiding { dim, c, c_inv, provenance, monomial })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u32 {
        self.c.modulus()
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.c
    }

    pub fn inverse_matrix(&self) -> &SparseMatrix {
        &self.c_inv
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Exactly one nonzero entry per column (rack and diagonal braidings).
    pub fn is_monomial(&self) -> bool {
        self.monomial.is_some()
    }

    /// The same braiding over `Q(ζ_target)`.
    pub fn embed(&self, target: u32) -> Result<Self> {
        let provenance = match &self.provenance {
            Provenance::Rack(q) => Provenance::Rack(Box::new(q.embed(target)?)),
            Provenance::Diagonal(q) => Provenance::Diagonal(
                q.iter().map(|r| r.iter().map(|v| v.embed(target)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?,
            ),
            Provenance::Explicit => Provenance::Explicit,
        };
        let emb = |m: &Option<(Vec<(usize, ExactScalar)>, Vec<(usize, ExactScalar)>)>| -> Result<_> {
            Ok(match m {
                None => None,
                Some((a, b)) => {
                    let f = |v: &Vec<(usize, ExactScalar)>| -> Result<Vec<_>> {
                        v.iter().map(|(r, x)| Ok((*r, x.embed(target)?))).collect()
                    };
                    Some((f(a)?, f(b)?))
                }
            })
        };
        Ok(Braiding {
            dim: self.dim,
            c: self.c.embed(target)?,
            c_inv: self.c_inv.embed(target)?,
            provenance,
            monomial: emb(&self.monomial)?,
        })
    }

    /// Applies `σ_j^{±1}` (1-based `j`) to a vector of `V^{⊗n}`.
    pub fn apply_generator(&self, n: usize, j: usize, inverse: bool, v: &SparseVector) -> SparseVector {
        let m = if inverse { &self.c_inv } else { &self.c };
        apply_local(m, self.dim, n, j, v)
    }

    /// Image of a single weighted basis vector under `σ_j^{±1}`; monomial braidings only.
    fn step_monomial(&self, n: usize, j: usize, inverse: bool, idx: usize) -> (usize, &ExactScalar) {
        let (fwd, inv) = self.monomial.as_ref().expect("monomial braiding");
        let table = if inverse { inv } else { fwd };
        let lo = pow_u128(self.dim, n - 1 - j) as usize;
        let hi = lo * self.dim;
        let a = (idx / hi) % self.dim;
        let b = (idx / lo) % self.dim;
        let (r, s) = &table[a * self.dim + b];
        (idx - a * hi - b * lo + (r / self.dim) * hi + (r % self.dim) * lo, s)
    }

    pub fn to_json(&self) -> BraidingJson {
        let provenance = match &self.provenance {
            Provenance::Rack(q) => ProvenanceJson::Rack { cocycle: q.to_json() },
            Provenance::Diagonal(q) => ProvenanceJson::Diagonal { q: q.clone() },
            Provenance::Explicit => ProvenanceJson::Explicit,
        };
        BraidingJson { dim: self.dim, entries: self.c.triplets(), provenance }
    }

    /// Rebuilds from JSON. A rack or diagonal provenance is rebuilt from its
    /// data and must reproduce the listed entries.
    pub fn from_json(j: BraidingJson) -> Result<Self> {
        let values: Vec<ExactScalar> = j.entries.iter().map(|(_, _, v)| v.clone()).collect();
        let (modulus, values) = if values.is_empty() { (1, values) } else { embed_common(&values)? };
        let n = j.dim * j.dim;
        for (r, c, _) in &j.entries {
            if *r >= n || *c >= n {
                return Err(Error::Shape(format!("entry ({r}, {c}) outside a {n}x{n} matrix")));
            }
        }
        let m = SparseMatrix::from_triplets(n, n, modulus, j.entries.iter().zip(values).map(|((r, c, _), v)| (*r, *c, v)));
        let rebuilt = match j.provenance {
            ProvenanceJson::Explicit => return Braiding::from_matrix(j.dim, m, Provenance::Explicit),
            ProvenanceJson::Rack { cocycle } => braiding_from_rack(&RackCocycle::from_json(cocycle)?)?,
            ProvenanceJson::Diagonal { q } => braiding_diagonal(&q)?,
        };
        let target = num_integer::lcm(rebuilt.modulus(), modulus);
        if rebuilt.dim != j.dim || rebuilt.c.embed(target)? != m.embed(target)? {
            return Err(Error::Malformed("braiding entries do not match the stated provenance".into()));
        }
        Ok(rebuilt)
    }
}

fn rack_matrix(q: &RackCocycle) -> SparseMatrix {
    let rack = q.rack();
    let n = rack.size();
    SparseMatrix::from_triplets(
        n * n,
        n * n,
        q.modulus(),
        (0..n).flat_map(|x| (0..n).map(move |y| (rack.act(x, y) * n + x, x * n + y, q.value(x, y).clone()))),
    )
}

/// `c(e_x ⊗ e_y) = q(x, y) e_{x▷y} ⊗ e_x`.
pub fn braiding_from_rack(q: &RackCocycle) -> Result<Braiding> {
    Braiding::from_matrix(q.rack().size(), rack_matrix(q), Provenance::Rack(Box::new(q.clone())))
}

/// The operator `c_q` for a table that may fail the cocycle identity.
pub(crate) fn rack_operator_unchecked(q: &RackCocycle) -> Result<Braiding> {
    Braiding::invertible_operator(q.rack().size(), rack_matrix(q), Provenance::Rack(Box::new(q.clone())))
}

/// `c(e_i ⊗ e_j) = Q[i][j] e_j ⊗ e_i`.
pub fn braiding_diagonal(q: &[Vec<ExactScalar>]) -> Result<Braiding> {
    let n = q.len();
    if q.iter().any(|r| r.len() != n) {
        return Err(Error::Shape(format!("diagonal braiding table must be {n}x{n}")));
    }
    for (i, row) in q.iter().enumerate() {
        if let Some(j) = row.iter().position(|v| v.is_zero()) {
            return Err(Error::ZeroEntry { row: i, col: j });
        }
    }
    let flat: Vec<ExactScalar> = q.iter().flatten().cloned().collect();
    let (modulus, flat) = if flat.is_empty() { (1, flat) } else { embed_common(&flat)? };
    let table: Vec<Vec<ExactScalar>> = flat.chunks(n.max(1)).map(|c| c.to_vec()).collect();
    let m = SparseMatrix::from_triplets(
        n * n,
        n * n,
        modulus,
        (0..n).flat_map(|i| {
            let table = &table;
            (0..n).map(move |j| (j * n + i, i * n + j, table[i][j].clone()))
        }),
    );
    Braiding::from_matrix(n, m, Provenance::Diagonal(table))
}

/// A permutation of `0..n` in one-line notation: `i ↦ w[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &i in &one_line {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Malformed(format!("{one_line:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The Coxeter generator `s_i = (i i+1)`, 1-based.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(i - 1, i);
        Permutation(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w] = i;
        }
        Permutation(inv)
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }
}

/// A word in the generators `σ_1, …, σ_{n-1}`; letter `-j` stands for `σ_j⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::Malformed(format!("letter {l} out of range for {strands} strands")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::Shape("braid words on different strand counts".into()));
        }
        Ok(BraidWord { strands: self.strands, letters: self.letters.iter().chain(&other.letters).copied().collect() })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// The permutation obtained by sending every `σ_j^{±1}` to `s_j`.
    pub fn permutation(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(self.strands), |p, &l| p.compose(&Permutation::simple(self.strands, l.unsigned_abs() as usize)))
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("s{l}") } else { format!("s{}^-1", -l) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Reduced word for `w` by the smallest-descent rule: repeatedly take the
/// least `i` with `w(i) > w(i+1)` and pass to `w s_i`. With `w s_{a_1}⋯s_{a_k} = e`
/// the word is `σ_{a_k} ⋯ σ_{a_1}`.
pub fn matsumoto_word(w: &Permutation) -> BraidWord {
    let mut p = w.0.clone();
    let mut emitted = Vec::new();
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        p.swap(i, i + 1);
        emitted.push(i as i32 + 1);
    }
    emitted.reverse();
    BraidWord { strands: w.len(), letters: emitted }
}

fn check_tensor_dim(c: &Braiding, n: usize, v: &SparseVector) -> Result<()> {
    let expected = pow_u128(c.dim(), n);
    if v.dim() as u128 != expected || v.modulus() != c.modulus() {
        return Err(Error::Shape(format!(
            "vector of length {} (modulus {}) is not in V^⊗{n} of dimension {expected} over Q(ζ_{})",
            v.dim(),
            v.modulus(),
            c.modulus()
        )));
    }
    Ok(())
}

/// `ρ_n(w) v`, applying the rightmost letter first.
pub fn braid_rep_apply(c: &Braiding, n: usize, w: &BraidWord, v: &SparseVector) -> Result<SparseVector> {
    if w.strands() != n {
        return Err(Error::Shape(format!("word on {} strands applied to V^⊗{n}", w.strands())));
    }
    check_tensor_dim(c, n, v)?;
    Ok(apply_letters(c, n, w.letters(), v))
}

pub(crate) fn apply_letters(c: &Braiding, n: usize, letters: &[i32], v: &SparseVector) -> SparseVector {
    let mut out = v.clone();
    for &l in letters.iter().rev() {
        out = c.apply_generator(n, l.unsigned_abs() as usize, l < 0, &out);
    }
    out
}

/// `Σ_w ρ_n(M(w)) e_b` for the given positive words; monomial braidings track
/// one (index, scalar) pair per word.
fn sum_of_words(c: &Braiding, n: usize, words: &[BraidWord], b: usize) -> SparseVector {
    let total = pow_u128(c.dim(), n) as usize;
    let mut acc = Accumulator::new(c.modulus());
    if c.is_monomial() {
        for w in words {
            let mut idx = b;
            let mut s = ExactScalar::one(c.modulus());
            for &l in w.letters().iter().rev() {
                let (next, f) = c.step_monomial(n, l.unsigned_abs() as usize, l < 0, idx);
                idx = next;
                if !f.is_one() {
                    s = &s * f;
                }
            }
            acc.add(idx, s);
        }
    } else {
        let e = SparseVector::basis(total, c.modulus(), b);
        for w in words {
            acc.add_vector(&apply_letters(c, n, w.letters(), &e), &ExactScalar::one(c.modulus()));
        }
    }
    acc.into_vector(total)
}

pub(crate) fn map_columns<F>(cols: &[usize], parallel: bool, f: F) -> Vec<SparseVector>
where
    F: Fn(usize) -> SparseVector + Sync + Send,
{
    if parallel {
        cols.par_iter().map(|&b| f(b)).collect()
    } else {
        cols.iter().map(|&b| f(b)).collect()
    }
}

fn symmetrizer_words(n: usize) -> Vec<BraidWord> {
    permutations_lex(n).into_iter().map(|p| matsumoto_word(&Permutation(p))).collect()
}

fn symmetrizer_budget(c: &Braiding, n: usize, budget: &Budget) -> Result<()> {
    let ambient = pow_u128(c.dim(), n);
    budget.check(&format!("quantum symmetrizer Q_{n}"), ambient, factorial_u128(n).saturating_mul(ambient))
}

/// The matrix of `Q_n = Σ_{w ∈ S_n} ρ_n(M(w))` on `V^{⊗n}`, built column by column.
pub fn quantum_symmetrizer(c: &Braiding, n: usize, opts: &Options) -> Result<SparseMatrix> {
    symmetrizer_budget(c, n, &opts.budget)?;
    let total = pow_u128(c.dim(), n) as usize;
    let words = symmetrizer_words(n);
    let cols: Vec<usize> = (0..total).collect();
    let columns = map_columns(&cols, opts.parallel, |b| sum_of_words(c, n, &words, b));
    Ok(SparseMatrix::from_columns(total, c.modulus(), columns))
}

/// Connected components of the basis of `V^{⊗n}` under the generators
/// `σ_j`: `e_k` and `e_l` are linked when `e_l` occurs in some `σ_j e_k`.
///
/// Every `ρ_n(b)` preserves the span of each component. For a diagonal
/// braiding the components are the multisets of letters; for a rack
/// braiding they are the `B_n`-orbits on `X^n`.
pub fn tensor_blocks(c: &Braiding, n: usize, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let ambient = pow_u128(c.dim(), n);
    budget.check(&format!("block decomposition of V^⊗{n}"), ambient, ambient.saturating_mul(n as u128))?;
    let total = ambient as usize;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let dim = c.dim();
    for j in 1..n {
        let lo = pow_u128(dim, n - 1 - j) as usize;
        let hi = lo * dim;
        for idx in 0..total {
            let a = (idx / hi) % dim;
            let b = (idx / lo) % dim;
            let base = idx - a * hi - b * lo;
            for (r, _) in c.matrix().column(a * dim + b).entries() {
                let other = base + (r / dim) * hi + (r % dim) * lo;
                let (x, y) = (find(&mut parent, idx), find(&mut parent, other));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for idx in 0..total {
        let r = find(&mut parent, idx);
        by_root.entry(r).or_default().push(idx);
    }
    Ok(by_root.into_values().collect())
}

/// `rank Q_n`, either from the whole matrix or as a sum over [`tensor_blocks`].
pub fn symmetrizer_rank(c: &Braiding, n: usize, opts: &Options) -> Result<usize> {
    if !opts.blocked {
        return Ok(rank(&quantum_symmetrizer(c, n, opts)?));
    }
    symmetrizer_budget(c, n, &opts.budget)?;
    let words = symmetrizer_words(n);
    let blocks = tensor_blocks(c, n, &opts.budget)?;
    let total = pow_u128(c.dim(), n) as usize;
    let mut pos = vec![0usize; total];
    let block_rank = |block: &Vec<usize>, pos: &[usize]| {
        let cols: Vec<SparseVector> = block
            .iter()
            .map(|&b| {
                let v = sum_of_words(c, n, &words, b);
                SparseVector::from_entries(block.len(), c.modulus(), v.entries().iter().map(|(i, x)| (pos[*i], x.clone())))
            })
            .collect();
        rank(&SparseMatrix::from_columns(block.len(), c.modulus(), cols))
    };
    for block in &blocks {
        for (k, &i) in block.iter().enumerate() {
            pos[i] = k;
        }
    }
    let ranks: Vec<usize> = if opts.parallel {
        blocks.par_iter().map(|b| block_rank(b, &pos)).collect()
    } else {
        blocks.iter().map(|b| block_rank(b, &pos)).collect()
    };
    Ok(ranks.into_iter().sum())
}
