//! The diagonal intertwiner between the braid-group representations of a
//! rack cocycle `q` and its twist `q'`, and the resulting invariance of
//! Nichols dimensions and cover verdicts.

use serde::Serialize;

use crate::approx::{cover_check, CoverVerdict, HilbertPrefix};
use crate::braid::{braiding_from_rack, pow_u128, rack_operator_unchecked, Braiding, Budget, Options};
use crate::cocycle::{twist_rack_cocycle, GroupCocycle, RackCocycle};
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVector};
use crate::scalar::ExactScalar;

/// `f(e_{x_1} ⊗ … ⊗ e_{x_n}) = ∏_{i<n} σ(x_i, x_{i+1} ⋯ x_n) e_{x_1} ⊗ … ⊗ e_{x_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    n: usize,
    diagonal: Vec<ExactScalar>,
}

impl Intertwiner {
    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn diagonal(&self) -> &[ExactScalar] {
        &self.diagonal
    }

    pub fn entry(&self, index: usize) -> &ExactScalar {
        &self.diagonal[index]
    }

    pub fn modulus(&self) -> u32 {
        self.diagonal.first().map_or(1, |v| v.modulus())
    }

    pub fn to_matrix(&self) -> SparseMatrix {
        let n = self.diagonal.len();
        SparseMatrix::from_triplets(n, n, self.modulus(), self.diagonal.iter().enumerate().map(|(i, v)| (i, i, v.clone())))
    }

    pub fn apply(&self, v: &SparseVector) -> SparseVector {
        SparseVector::from_entries(v.dim(), v.modulus(), v.entries().iter().map(|(i, x)| (*i, x * &self.diagonal[*i])))
    }

    pub fn inverse(&self) -> Result<Intertwiner> {
        Ok(Intertwiner { n: self.n, diagonal: self.diagonal.iter().map(|v| v.inverse()).collect::<Result<_>>()? })
    }

    fn embed(&self, target: u32) -> Result<Intertwiner> {
        Ok(Intertwiner { n: self.n, diagonal: self.diagonal.iter().map(|v| v.embed(target)).collect::<Result<_>>()? })
    }
}

fn digits(mut index: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in (0..n).rev() {
        out[slot] = index % base;
        index /= base;
    }
    out
}

/// Builds `f` on `(kX)^{⊗n}`; group products are taken left to right.
pub fn intertwiner_matrix(q: &RackCocycle, sigma: &GroupCocycle, n: usize, budget: &Budget) -> Result<Intertwiner> {
    let rack = q.rack();
    let emb = rack.embedding().ok_or(Error::MissingEmbedding)?;
    if *emb.group != **sigma.group() {
        return Err(Error::Malformed("σ is defined on a different group than the rack's embedding".into()));
    }
    let size = rack.size();
    let total = pow_u128(size, n);
    budget.check(&format!("intertwiner on (kX)^⊗{n}"), total, total.saturating_mul(n as u128))?;
    let g = &emb.group;
    let one = ExactScalar::one(sigma.modulus());
    let diagonal = (0..total as usize)
        .map(|idx| {
            let xs: Vec<usize> = digits(idx, size, n).into_iter().map(|x| emb.elements[x]).collect();
            let mut entry = one.clone();
            for i in 0..n.saturating_sub(1) {
                let tail = g.product(xs[i + 1..].iter().copied());
                entry = &entry * sigma.value(xs[i], tail);
            }
            entry
        })
        .collect();
    Ok(Intertwiner { n, diagonal })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum IntertwiningVerdict {
    Ok,
    /// `ρ(σ_j) f e_w ≠ f ρ'(σ_j) e_w` for the basis word `w` (rack indices).
    Violation { generator: usize, basis_index: usize, word: Vec<usize> },
}

impl IntertwiningVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, IntertwiningVerdict::Ok)
    }
}

fn common_braidings(q: &RackCocycle, qprime: &RackCocycle, f: &Intertwiner) -> Result<(Braiding, Braiding, Intertwiner)> {
    let target = num_integer::lcm(num_integer::lcm(q.modulus(), qprime.modulus()), f.modulus());
    Ok((rack_operator_unchecked(&q.embed(target)?)?, rack_operator_unchecked(&qprime.embed(target)?)?, f.embed(target)?))
}

/// Checks `ρ_n(σ_j) f = f ρ'_n(σ_j)` for `j = 1, …, n − 1` on every basis word.
pub fn verify_intertwining(
    q: &RackCocycle,
    qprime: &RackCocycle,
    sigma: &GroupCocycle,
    n: usize,
    budget: &Budget,
) -> Result<IntertwiningVerdict> {
    if q.rack() != qprime.rack() {
        return Err(Error::Malformed("q and q' live on different racks".into()));
    }
    let f = intertwiner_matrix(q, sigma, n, budget)?;
    let (c, cp, f) = common_braidings(q, qprime, &f)?;
    let size = q.rack().size();
    let total = f.diagonal.len();
    for j in 1..n {
        for b in 0..total {
            let e = SparseVector::basis(total, c.modulus(), b);
            let lhs = c.apply_generator(n, j, false, &f.apply(&e));
            let rhs = f.apply(&cp.apply_generator(n, j, false, &e));
            if lhs != rhs {
                return Ok(IntertwiningVerdict::Violation { generator: j, basis_index: b, word: digits(b, size, n) });
            }
        }
    }
    Ok(IntertwiningVerdict::Ok)
}

/// Braidings of `q` and `q'` over a common field, plus `f`, for conjugation checks.
pub fn twisted_pair(q: &RackCocycle, sigma: &GroupCocycle, n: usize, budget: &Budget) -> Result<(Braiding, Braiding, Intertwiner)> {
    let t = twist_rack_cocycle(q, sigma)?;
    let f = intertwiner_matrix(q, sigma, n, budget)?;
    common_braidings(q, &t.cocycle, &f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverVerdicts {
    pub q: CoverVerdict,
    pub qprime: CoverVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistReport {
    pub d: usize,
    pub q_dims: HilbertPrefix,
    pub qprime_dims: HilbertPrefix,
    pub q_cover_dims: HilbertPrefix,
    pub qprime_cover_dims: HilbertPrefix,
    pub cover_verdicts: CoverVerdicts,
    /// Largest `n` with the intertwining identity verified for all `2 ≤ m ≤ n`.
    pub intertwiner_verified_up_to_n: usize,
    pub intertwining_violation: Option<IntertwiningVerdict>,
    /// Nichols dimensions, cover dimensions and verdicts coincide, and no intertwining failure.
    pub invariant: bool,
}

/// Twists `q` by `σ` and compares everything computed from `q` and `q'`.
pub fn twist_invariance_check(q: &RackCocycle, sigma: &GroupCocycle, d: usize, n_max: usize, opts: &Options) -> Result<TwistReport> {
    let t = twist_rack_cocycle(q, sigma)?;
    if let Some(v) = &t.violation {
        return Err(Error::Malformed(format!("twisted table is not a cocycle: {v}")));
    }
    let qprime = t.cocycle;
    let c = braiding_from_rack(q)?;
    let cp = braiding_from_rack(&qprime)?;
    let rq = cover_check(&c, d, n_max, opts)?;
    let rp = cover_check(&cp, d, n_max, opts)?;
    let mut verified = 1;
    let mut violation = None;
    for n in 2..=n_max.max(2) {
        let ambient = pow_u128(q.rack().size(), n);
        if ambient > opts.budget.ambient {
            break;
        }
        match verify_intertwining(q, &qprime, sigma, n, &opts.budget)? {
            IntertwiningVerdict::Ok => verified = n,
            v => {
                violation = Some(v);
                break;
            }
        }
    }
    let invariant =
        rq.nichols == rp.nichols && rq.cover == rp.cover && rq.verdict == rp.verdict && violation.is_none();
    Ok(TwistReport {
        d,
        q_dims: rq.nichols,
        qprime_dims: rp.nichols,
        q_cover_dims: rq.cover,
        qprime_cover_dims: rp.cover,
        cover_verdicts: CoverVerdicts { q: rq.verdict, qprime: rp.verdict },
        intertwiner_verified_up_to_n: verified,
        intertwining_violation: violation,
        invariant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::coboundary;
    use crate::rack::{conjugation_rack, symmetric_group, GroupTable};
    use std::sync::Arc;

    fn s3() -> (Arc<GroupTable>, RackCocycle) {
        let g = Arc::new(symmetric_group(3).unwrap());
        let t: Vec<usize> = ["(1 2)", "(1 3)", "(2 3)"].iter().map(|l| g.find_label(l).unwrap()).collect();
        let r = conjugation_rack(&g, &t).unwrap();
        (g, RackCocycle::constant(r, ExactScalar::from_integer(1, -1)).unwrap())
    }

    fn mu(g: &GroupTable) -> Vec<ExactScalar> {
        (0..g.order()).map(|i| if i == g.identity() { ExactScalar::one(12) } else { ExactScalar::zeta_pow(12, (7 * i + 3) as i64) }).collect()
    }

    #[test]
    fn trivial_sigma_gives_identity() {
        let (g, q) = s3();
        let f = intertwiner_matrix(&q, &GroupCocycle::trivial(g.clone()), 3, &Budget::default()).unwrap();
        assert!(f.diagonal().iter().all(|v| v.is_one()));
        assert!(verify_intertwining(&q, &q, &GroupCocycle::trivial(g), 3, &Budget::default()).unwrap().is_ok());
    }

    #[test]
    fn entries_match_defining_product() {
        let (g, q) = s3();
        let sigma = coboundary(&g, &mu(&g)).unwrap();
        let emb = q.rack().embedding().unwrap().elements.clone();
        let f2 = intertwiner_matrix(&q, &sigma, 2, &Budget::default()).unwrap();
        let f3 = intertwiner_matrix(&q, &sigma, 3, &Budget::default()).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(f2.entry(x * 3 + y), sigma.value(emb[x], emb[y]));
                for z in 0..3 {
                    let yz = g.mul(emb[y], emb[z]);
                    let expected = sigma.value(emb[x], yz) * sigma.value(emb[y], emb[z]);
                    assert_eq!(*f3.entry(x * 9 + y * 3 + z), expected);
                }
            }
        }
    }

    #[test]
    fn coboundary_twist_intertwines_and_corruption_is_caught() {
        let (g, q) = s3();
        let sigma = coboundary(&g, &mu(&g)).unwrap();
        let qp = twist_rack_cocycle(&q, &sigma).unwrap().cocycle;
        for n in 2..=4 {
            assert!(verify_intertwining(&q, &qp, &sigma, n, &Budget::default()).unwrap().is_ok());
        }
        let mut table = qp.table().to_vec();
        table[1][2] = -&table[1][2];
        let bad = RackCocycle::new_unchecked(q.rack().clone(), table).unwrap();
        match verify_intertwining(&q, &bad, &sigma, 3, &Budget::default()).unwrap() {
            IntertwiningVerdict::Violation { word, .. } => assert_eq!(word.len(), 3),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn invariance_report() {
        let (g, q) = s3();
        let sigma = coboundary(&g, &mu(&g)).unwrap();
        let r = twist_invariance_check(&q, &sigma, 2, 4, &Options::default()).unwrap();
        assert!(r.invariant);
        assert_eq!(r.q_dims.dims().unwrap(), vec![1, 3, 4, 3, 1]);
        assert_eq!(r.intertwiner_verified_up_to_n, 4);
    }
}
