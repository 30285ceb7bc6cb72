//! Reference implementations that share nothing with the library beyond
//! scalar arithmetic: dense elimination, brute-force symmetrizers built from
//! bubble-sort words, and exhaustive word enumeration.

#![allow(dead_code)]

use std::collections::BTreeMap;

use nichols::ExactScalar;

pub type Dense = Vec<Vec<ExactScalar>>;

pub fn int(m: u32, v: i64) -> ExactScalar {
    ExactScalar::from_integer(m, v)
}

/// Rank by textbook Gaussian elimination on a dense copy.
pub fn dense_rank(mat: &Dense) -> usize {
    let mut a = mat.clone();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].inverse().unwrap();
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let f = &a[r][col] * &inv;
                for c in col..cols {
                    if !a[rank][c].is_zero() {
                        a[r][c] = &a[r][c] - &(&f * &a[rank][c]);
                    }
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// All permutations of `0..n` (order irrelevant).
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

/// Adjacent swaps (0-based positions) that bubble-sort `p`; a reduced word.
pub fn bubble_word(p: &[usize]) -> Vec<usize> {
    let mut a = p.to_vec();
    let mut word = Vec::new();
    for end in (1..a.len()).rev() {
        for i in 0..end {
            if a[i] > a[i + 1] {
                a.swap(i, i + 1);
                word.push(i);
            }
        }
    }
    word
}

/// Arrangement obtained from the identity by swapping the given positions in order.
pub fn word_arrangement(n: usize, word: &[usize]) -> Vec<usize> {
    let mut a: Vec<usize> = (0..n).collect();
    for &i in word {
        a.swap(i, i + 1);
    }
    a
}

/// All words of length `inversions` for every element of `S_n`, grouped by
/// the element they spell; each group is the full set of reduced words.
pub fn reduced_words(n: usize) -> BTreeMap<Vec<usize>, Vec<Vec<usize>>> {
    let mut groups: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    let max_len = n * n.saturating_sub(1) / 2;
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for len in 0..=max_len {
        for w in &frontier {
            let a = word_arrangement(n, w);
            if inversions(&a) == len {
                groups.entry(a).or_default().push(w.clone());
            }
        }
        if len < max_len {
            frontier = frontier
                .iter()
                .flat_map(|w| (0..n.saturating_sub(1)).map(move |i| [w.as_slice(), &[i]].concat()))
                .collect();
        }
    }
    groups
}

/// A braiding that sends `e_x ⊗ e_y` to `s · e_a ⊗ e_b`.
#[derive(Clone, Debug)]
pub struct Monomial {
    pub dim: usize,
    pub modulus: u32,
    /// Indexed by `x * dim + y`: (s, a, b).
    pub map: Vec<(ExactScalar, usize, usize)>,
}

impl Monomial {
    pub fn rack(op: &[Vec<usize>], q: &[Vec<ExactScalar>], modulus: u32) -> Self {
        let dim = op.len();
        let map = (0..dim * dim).map(|k| (k / dim, k % dim)).map(|(x, y)| (q[x][y].embed(modulus).unwrap(), op[x][y], x)).collect();
        Monomial { dim, modulus, map }
    }

    pub fn diagonal(q: &[Vec<ExactScalar>], modulus: u32) -> Self {
        let dim = q.len();
        let map = (0..dim * dim).map(|k| (k / dim, k % dim)).map(|(x, y)| (q[x][y].embed(modulus).unwrap(), y, x)).collect();
        Monomial { dim, modulus, map }
    }

    pub fn dense_c(&self) -> Dense {
        let n = self.dim * self.dim;
        let mut m = vec![vec![int(self.modulus, 0); n]; n];
        for (col, (s, a, b)) in self.map.iter().enumerate() {
            m[a * self.dim + b][col] = s.clone();
        }
        m
    }

    fn tuple(&self, n: usize, mut index: usize) -> Vec<usize> {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = index % self.dim;
            index /= self.dim;
        }
        t
    }

    fn index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.dim + x)
    }

    /// Image of a basis tuple under the generators at `word` positions,
    /// applied first to last.
    pub fn apply(&self, t: &[usize], word: &[usize]) -> (ExactScalar, Vec<usize>) {
        let mut t = t.to_vec();
        let mut s = int(self.modulus, 1);
        for &i in word {
            let (c, a, b) = &self.map[t[i] * self.dim + t[i + 1]];
            s = &s * c;
            t[i] = *a;
            t[i + 1] = *b;
        }
        (s, t)
    }

    /// Σ over `S_n` of the bubble-sort lifts, as a dense matrix.
    pub fn symmetrizer(&self, n: usize) -> Dense {
        let size = self.dim.pow(n as u32);
        let mut m = vec![vec![int(self.modulus, 0); size]; size];
        let words: Vec<Vec<usize>> = all_perms(n).iter().map(|p| bubble_word(p)).collect();
        for col in 0..size {
            let t = self.tuple(n, col);
            for w in &words {
                let (s, out) = self.apply(&t, w);
                let row = self.index(&out);
                m[row][col] = &m[row][col] + &s;
            }
        }
        m
    }

    pub fn nichols_dims(&self, n_max: usize) -> Vec<usize> {
        (0..=n_max).map(|n| if n == 0 { 1 } else { dense_rank(&self.symmetrizer(n)) }).collect()
    }
}

/// Dense matrix product.
pub fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let m = b[0][0].modulus();
    let (r, k, c) = (a.len(), b.len(), b[0].len());
    let mut out = vec![vec![int(m, 0); c]; r];
    for i in 0..r {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..c {
                if !b[l][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][l] * &b[l][j]);
                }
            }
        }
    }
    out
}

pub fn dense_kron(a: &Dense, b: &Dense) -> Dense {
    let m = a[0][0].modulus();
    let (ar, ac, br, bc) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = vec![vec![int(m, 0); ac * bc]; ar * br];
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

pub fn dense_identity(n: usize, m: u32) -> Dense {
    (0..n).map(|i| (0..n).map(|j| int(m, (i == j) as i64)).collect()).collect()
}

/// First column (basis index of V⊗V⊗V) where the two sides of the braid
/// equation differ.
pub fn first_ybe_violation(c: &Dense, dim: usize) -> Option<usize> {
    let m = c[0][0].modulus();
    let id = dense_identity(dim, m);
    let c12 = dense_kron(c, &id);
    let c23 = dense_kron(&id, c);
    let lhs = dense_mul(&c12, &dense_mul(&c23, &c12));
    let rhs = dense_mul(&c23, &dense_mul(&c12, &c23));
    (0..dim * dim * dim).find(|&j| (0..dim * dim * dim).any(|i| lhs[i][j] != rhs[i][j]))
}

/// Transpositions of `S_3` in the order (1 2), (1 3), (2 3) and their
/// conjugation table, computed from permutation arrays.
pub fn s3_transposition_table() -> Vec<Vec<usize>> {
    let ts: [[usize; 3]; 3] = [[1, 0, 2], [2, 1, 0], [0, 2, 1]];
    let compose = |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] { [a[b[0]], a[b[1]], a[b[2]]] };
    (0..3)
        .map(|x| {
            (0..3)
                .map(|y| {
                    // transpositions are involutions: x y x⁻¹ = x y x
                    let c = compose(&ts[x], &compose(&ts[y], &ts[x]));
                    ts.iter().position(|t| *t == c).unwrap()
                })
                .collect()
        })
        .collect()
}

/// Independent descriptions of the built-in fixtures.
pub fn oracle_fixture(name: &str) -> Monomial {
    let trivial = |n: usize| -> Vec<Vec<usize>> { (0..n).map(|_| (0..n).collect()).collect() };
    let constant = |n: usize, v: i64| -> Vec<Vec<ExactScalar>> { vec![vec![int(1, v); n]; n] };
    match name {
        "trivial-rack-dim1-minus1" => Monomial::rack(&trivial(1), &constant(1, -1), 1),
        "flip-dim2" | "shuffle-flip-dim2" => Monomial::rack(&trivial(2), &constant(2, 1), 1),
        "shuffle-flip-dim1" => Monomial::rack(&trivial(1), &constant(1, 1), 1),
        "diagonal-minus1-dim3" => Monomial::diagonal(&constant(3, -1), 1),
        "s3-transpositions-minus1" => Monomial::rack(&s3_transposition_table(), &constant(3, -1), 1),
        "diagonal-zeta3-dim2" => {
            let z = ExactScalar::zeta(3);
            Monomial::diagonal(&[vec![int(3, -1), z.clone()], vec![&z * &z, int(3, -1)]], 3)
        }
        other => panic!("no oracle for {other}"),
    }
}

/// Σ over S_n of (−1)^{inversions}.
pub fn sign_sum(n: usize) -> i64 {
    all_perms(n).iter().map(|p| if inversions(p).is_multiple_of(2) { 1 } else { -1 }).sum()
}
