//! Free graded algebras on graded generator spaces, homogeneous two-sided
//! ideals, and the braided shuffle product on `T(V)`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::approx::HilbertPrefix;
use crate::braid::{apply_letters, binomial_u128, matsumoto_word, pow_u128, quantum_symmetrizer, Braiding, Budget, Options, Permutation};
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, RowEchelon, SparseMatrix, SparseVector};
use crate::scalar::lcm_modulus;

/// Generator dimensions by degree: `dims[i - 1]` generators in degree `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedGenerators {
    dims: Vec<usize>,
}

impl GradedGenerators {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Malformed("at least one generator degree is required".into()));
        }
        Ok(GradedGenerators { dims })
    }

    /// All generators in degree 1.
    pub fn degree_one(k: usize) -> Self {
        GradedGenerators { dims: vec![k] }
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len()
    }

    /// Number of generators of degree `i` (zero outside `1..=d`).
    pub fn dim(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.dims.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}

/// Basis of the degree-`n` piece of the free algebra: compositions of `n` in
/// lexicographic order, each followed by its product block in lexicographic
/// order of generator indices.
#[derive(Clone, Debug)]
pub struct WordBasis {
    degree: usize,
    compositions: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    sizes: Vec<usize>,
    lookup: HashMap<Vec<usize>, usize>,
    dim: usize,
}

fn compositions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=max_part.min(n) {
        for mut rest in compositions(n - first, max_part) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn word_basis(gens: &GradedGenerators, n: usize) -> WordBasis {
    let comps = compositions(n, gens.max_degree());
    let mut offsets = Vec::with_capacity(comps.len());
    let mut sizes = Vec::with_capacity(comps.len());
    let mut total = 0usize;
    for c in &comps {
        offsets.push(total);
        let size: usize = c.iter().map(|&p| gens.dim(p)).product();
        sizes.push(size);
        total += size;
    }
    let lookup = comps.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    WordBasis { degree: n, compositions: comps, offsets, sizes, lookup, dim: total }
}

impl WordBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn compositions(&self) -> &[Vec<usize>] {
        &self.compositions
    }

    /// Index range of the block belonging to composition number `k`.
    pub fn block(&self, k: usize) -> std::ops::Range<usize> {
        self.offsets[k]..self.offsets[k] + self.sizes[k]
    }

    pub fn composition_index(&self, comp: &[usize]) -> Option<usize> {
        self.lookup.get(comp).copied()
    }

    /// `(composition number, position inside its block)` of a basis index.
    pub fn locate(&self, index: usize) -> (usize, usize) {
        let k = self.offsets.partition_point(|&o| o <= index) - 1;
        // Skip empty blocks sharing the same offset.
        let k = (k..self.offsets.len()).find(|&k| index < self.offsets[k] + self.sizes[k]).expect("index in range");
        (k, index - self.offsets[k])
    }

    /// Generator indices of a basis word, one per part.
    pub fn word(&self, gens: &GradedGenerators, index: usize) -> (Vec<usize>, Vec<usize>) {
        let (k, mut pos) = self.locate(index);
        let comp = self.compositions[k].clone();
        let mut letters = vec![0; comp.len()];
        for (slot, &p) in comp.iter().enumerate().rev() {
            let d = gens.dim(p);
            letters[slot] = pos % d;
            pos /= d;
        }
        (comp, letters)
    }
}

/// The concatenation `a · b · c` of three words, given as composition
/// numbers and in-block positions of their respective bases.
struct Concat<'a> {
    bases: &'a [WordBasis],
}

impl Concat<'_> {
    fn index(&self, parts: &[(usize, usize, usize)]) -> usize {
        // parts: (degree, composition number, position)
        let mut comp = Vec::new();
        let mut pos = 0usize;
        for &(deg, k, p) in parts {
            let b = &self.bases[deg];
            comp.extend_from_slice(&b.compositions[k]);
            pos = pos * b.sizes[k] + p;
        }
        let total: usize = parts.iter().map(|p| p.0).sum();
        let target = &self.bases[total];
        let k = target.lookup[&comp];
        target.offsets[k] + pos
    }
}

/// Homogeneous relations: `by_degree[j]` lives in the degree-`j` word basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    by_degree: BTreeMap<usize, Vec<SparseVector>>,
}

impl RelationSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, degree: usize, v: SparseVector) {
        self.by_degree.entry(degree).or_default().push(v);
    }

    pub fn extend(&mut self, degree: usize, vs: impl IntoIterator<Item = SparseVector>) {
        self.by_degree.entry(degree).or_default().extend(vs);
    }

    pub fn degrees(&self) -> impl Iterator<Item = (usize, &[SparseVector])> {
        self.by_degree.iter().map(|(d, v)| (*d, v.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.by_degree.values().map(|v| v.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn modulus(&self) -> u32 {
        self.by_degree.values().flatten().map(|v| v.modulus()).fold(1, lcm_modulus)
    }

    /// Each degree present must match its word-basis dimension.
    fn check(&self, gens: &GradedGenerators) -> Result<()> {
        for (&j, vs) in &self.by_degree {
            if j == 0 {
                return Err(Error::Malformed("relations of degree 0 are not allowed".into()));
            }
            let dim = word_basis(gens, j).dim();
            if let Some(v) = vs.iter().find(|v| v.dim() != dim) {
                return Err(Error::Malformed(format!(
                    "inhomogeneous relation: vector of length {} declared in degree {j}, whose word basis has dimension {dim}",
                    v.dim()
                )));
            }
        }
        Ok(())
    }
}

/// Spanning set of the degree-`n` component of the ideal: every `u · r · v`
/// with `r` a relation and `u, v` basis words. In a free algebra the ideal
/// generated by a homogeneous subspace `R` is exactly the span of such
/// placements, so the rank of this set is the component dimension.
fn ideal_spanning_set(
    rels: &RelationSet,
    n: usize,
    bases: &[WordBasis],
    modulus: u32,
) -> Result<Vec<SparseVector>> {
    let cat = Concat { bases };
    let mut out = Vec::new();
    for (j, vs) in rels.degrees() {
        if j > n || vs.is_empty() {
            continue;
        }
        // Reduce the relations of this degree to a basis first.
        let vs: Vec<SparseVector> = vs.iter().map(|v| v.embed(modulus)).collect::<Result<_>>()?;
        let basis: Vec<SparseVector> = RowEchelon::new(vs, bases[j].dim(), modulus).rows().cloned().collect();
        let decoded: Vec<Vec<(usize, usize, crate::scalar::ExactScalar)>> = basis
            .iter()
            .map(|r| {
                r.entries()
                    .iter()
                    .map(|(i, x)| {
                        let (k, p) = bases[j].locate(*i);
                        (k, p, x.clone())
                    })
                    .collect()
            })
            .collect();
        for a in 0..=n - j {
            let b = n - j - a;
            let (ba, bb) = (&bases[a], &bases[b]);
            for ka in 0..ba.compositions.len() {
                for pa in 0..ba.sizes[ka] {
                    for kb in 0..bb.compositions.len() {
                        for pb in 0..bb.sizes[kb] {
                            for r in &decoded {
                                let entries = r.iter().map(|(k, p, x)| (cat.index(&[(a, ka, pa), (j, *k, *p), (b, kb, pb)]), x.clone()));
                                out.push(SparseVector::from_entries(bases[n].dim(), modulus, entries));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn bases_up_to(gens: &GradedGenerators, n: usize) -> Vec<WordBasis> {
    (0..=n).map(|k| word_basis(gens, k)).collect()
}

fn ideal_budget(bases: &[WordBasis], rels: &RelationSet, n: usize, budget: &Budget) -> Result<()> {
    let ambient = bases[n].dim() as u128;
    let mut work = 0u128;
    for (j, vs) in rels.degrees() {
        if j <= n {
            for a in 0..=n - j {
                work = work.saturating_add((bases[a].dim() as u128) * (bases[n - j - a].dim() as u128) * vs.len() as u128);
            }
        }
    }
    budget.check(&format!("ideal component in degree {n}"), ambient, work)
}

/// Spanning vectors of the degree-`n` ideal component, after the budget check.
pub(crate) fn ideal_spanning_vectors(gens: &GradedGenerators, rels: &RelationSet, n: usize, budget: &Budget) -> Result<Vec<SparseVector>> {
    rels.check(gens)?;
    let bases = bases_up_to(gens, n);
    ideal_budget(&bases, rels, n, budget)?;
    ideal_spanning_set(rels, n, &bases, rels.modulus())
}

/// Index of the concatenation of basis word `a` of degree `i` with basis word `b` of degree `j`.
pub(crate) fn concat_index(bases: &[WordBasis], i: usize, a: usize, j: usize, b: usize) -> usize {
    let (ka, pa) = bases[i].locate(a);
    let (kb, pb) = bases[j].locate(b);
    Concat { bases }.index(&[(i, ka, pa), (j, kb, pb)])
}

/// Dimension of the degree-`n` component of the two-sided ideal generated by `rels`.
pub fn ideal_component_dim(gens: &GradedGenerators, rels: &RelationSet, n: usize, budget: &Budget) -> Result<usize> {
    rels.check(gens)?;
    let bases = bases_up_to(gens, n);
    ideal_budget(&bases, rels, n, budget)?;
    let modulus = rels.modulus();
    let span = ideal_spanning_set(rels, n, &bases, modulus)?;
    Ok(RowEchelon::new(span, bases[n].dim(), modulus).rank())
}

/// Graded dimensions of `T(W) / (rels)` in degrees `0..=n_max`.
pub fn quotient_dims(gens: &GradedGenerators, rels: &RelationSet, n_max: usize, budget: &Budget) -> Result<Vec<usize>> {
    rels.check(gens)?;
    let bases = bases_up_to(gens, n_max);
    let modulus = rels.modulus();
    let mut dims = vec![1];
    for n in 1..=n_max {
        let step = ideal_budget(&bases, rels, n, budget).and_then(|_| ideal_spanning_set(rels, n, &bases, modulus));
        match step {
            Ok(span) => dims.push(bases[n].dim() - RowEchelon::new(span, bases[n].dim(), modulus).rank()),
            Err(e) => return Err(e.with_partial(HilbertPrefix::partial(dims, n_max))),
        }
    }
    Ok(dims)
}

/// The `(p, q)`-shuffles: permutations increasing on `0..p` and on `p..p+q`,
/// in lexicographic order of the image of the first block.
pub fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == p {
            out.push(chosen.clone());
            return;
        }
        for i in start..n {
            chosen.push(i);
            rec(i + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    let mut subsets = Vec::new();
    rec(0, n, p, &mut chosen, &mut subsets);
    for s in subsets {
        let rest: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();
        out.push(Permutation::new(s.into_iter().chain(rest).collect()).expect("shuffle is a permutation"));
    }
    out
}

/// `u ш v = Σ_τ ρ_{p+q}(M(τ)) (u ⊗ v)` over the `(p, q)`-shuffles `τ`.
///
/// Under the flip the factor in position `m` of `u ⊗ v` lands in position
/// `τ(m)`. With this choice `Q_{p+q}(u ⊗ v) = Q_p(u) ш Q_q(v)`.
pub fn shuffle_product(c: &Braiding, p: usize, u: &SparseVector, q: usize, v: &SparseVector, budget: &Budget) -> Result<SparseVector> {
    let dim = c.dim();
    for (deg, w) in [(p, u), (q, v)] {
        if w.dim() as u128 != pow_u128(dim, deg) || w.modulus() != c.modulus() {
            return Err(Error::Shape(format!("vector of length {} is not in V^⊗{deg}", w.dim())));
        }
    }
    let ambient = pow_u128(dim, p + q);
    budget.check(&format!("shuffle product of degrees {p} and {q}"), ambient, binomial_u128(p + q, p).saturating_mul(ambient))?;
    let uv = u.tensor(v);
    let mut acc = Accumulator::new(c.modulus());
    let one = crate::scalar::ExactScalar::one(c.modulus());
    for tau in shuffles(p, q) {
        let w = matsumoto_word(&tau);
        acc.add_vector(&apply_letters(c, p + q, w.letters(), &uv), &one);
    }
    Ok(acc.into_vector(ambient as usize))
}

/// Matrix of `ш : V^{⊗p} ⊗ V^{⊗q} → V^{⊗(p+q)}` in the product basis.
pub fn shuffle_matrix(c: &Braiding, p: usize, q: usize, budget: &Budget) -> Result<SparseMatrix> {
    let (dp, dq) = (pow_u128(c.dim(), p) as usize, pow_u128(c.dim(), q) as usize);
    let total = pow_u128(c.dim(), p + q) as usize;
    budget.check(
        &format!("shuffle matrix of degrees {p} and {q}"),
        total as u128,
        binomial_u128(p + q, p).saturating_mul(total as u128),
    )?;
    let mut cols = Vec::with_capacity(dp * dq);
    for a in 0..dp {
        for b in 0..dq {
            let u = SparseVector::basis(dp, c.modulus(), a);
            let v = SparseVector::basis(dq, c.modulus(), b);
            cols.push(shuffle_product(c, p, &u, q, &v, &Budget::unlimited())?);
        }
    }
    Ok(SparseMatrix::from_columns(total, c.modulus(), cols))
}

/// Degree-`n` component of `Ω : T(V) → T_*(V)`, which is `Q_n`.
pub fn omega_component(c: &Braiding, n: usize, opts: &Options) -> Result<SparseMatrix> {
    quantum_symmetrizer(c, n, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::braiding_diagonal;
    use crate::scalar::ExactScalar;

    fn int(v: i64) -> ExactScalar {
        ExactScalar::from_integer(1, v)
    }

    #[test]
    fn word_basis_examples() {
        assert_eq!(word_basis(&GradedGenerators::degree_one(3), 3).dim(), 27);
        let b = word_basis(&GradedGenerators::new(vec![1, 1]).unwrap(), 3);
        assert_eq!(b.compositions(), &[vec![1, 1, 1], vec![1, 2], vec![2, 1]]);
        assert_eq!(b.dim(), 3);
        let b = word_basis(&GradedGenerators::new(vec![2, 4]).unwrap(), 2);
        assert_eq!(b.dim(), 8);
        assert_eq!(word_basis(&GradedGenerators::degree_one(2), 0).dim(), 1);
    }

    #[test]
    fn degree_one_words_are_base_k_digits() {
        let g = GradedGenerators::degree_one(3);
        let b = word_basis(&g, 3);
        for i in 0..27 {
            assert_eq!(b.word(&g, i).1, vec![i / 9, (i / 3) % 3, i % 3]);
        }
    }

    #[test]
    fn ideal_examples() {
        let budget = Budget::default();
        let g = GradedGenerators::degree_one(2);
        let mut full = RelationSet::new();
        full.extend(2, (0..4).map(|i| SparseVector::basis(4, 1, i)));
        assert_eq!(ideal_component_dim(&g, &full, 3, &budget).unwrap(), 8);
        assert_eq!(quotient_dims(&g, &full, 4, &budget).unwrap(), vec![1, 2, 0, 0, 0]);
        assert_eq!(quotient_dims(&g, &RelationSet::new(), 4, &budget).unwrap(), vec![1, 2, 4, 8, 16]);

        // x in degree 1, t in degree 2, relation x⊗x − 2t; degree-2 basis is [xx, t].
        let g = GradedGenerators::new(vec![1, 1]).unwrap();
        let mut rels = RelationSet::new();
        rels.push(2, SparseVector::from_dense(1, &[int(1), int(-2)]));
        assert_eq!(ideal_component_dim(&g, &rels, 3, &budget).unwrap(), 2);
        assert_eq!(quotient_dims(&g, &rels, 3, &budget).unwrap(), vec![1, 1, 1, 1]);

        let mut bad = RelationSet::new();
        bad.push(2, SparseVector::basis(3, 1, 0));
        assert!(matches!(ideal_component_dim(&g, &bad, 3, &budget), Err(Error::Malformed(_))));
    }

    #[test]
    fn shuffle_examples() {
        let budget = Budget::default();
        let flip1 = braiding_diagonal(&[vec![int(1)]]).unwrap();
        let x = SparseVector::basis(1, 1, 0);
        let unit = SparseVector::basis(1, 1, 0);
        assert_eq!(shuffle_product(&flip1, 0, &unit, 1, &x, &budget).unwrap(), x);
        assert_eq!(shuffle_product(&flip1, 1, &x, 1, &x, &budget).unwrap(), SparseVector::from_dense(1, &[int(2)]));
        let minus = braiding_diagonal(&[vec![int(-1)]]).unwrap();
        assert!(shuffle_product(&minus, 1, &x, 1, &x, &budget).unwrap().is_zero());
        assert_eq!(shuffles(2, 2).len(), 6);
    }

    #[test]
    fn mixed_tensor_is_not_a_shuffle_of_degree_one() {
        // e_0 ⊗ e_1 is not in the image of V ⊗ V under the flip shuffle.
        let flip = braiding_diagonal(&vec![vec![int(1); 2]; 2]).unwrap();
        let m = shuffle_matrix(&flip, 1, 1, &Budget::default()).unwrap();
        let ech = RowEchelon::new(m.columns().to_vec(), 4, 1).into_reduced();
        assert!(!ech.contains(&SparseVector::basis(4, 1, 1)));
    }
}
