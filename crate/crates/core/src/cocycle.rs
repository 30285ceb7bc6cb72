//! Scalar 2-cocycles on racks and groups, coboundaries, and twisting a rack
//! cocycle by a group cocycle.
//!
//! Every table holds scalars of one common modulus. Inputs with mixed moduli
//! are embedded into `Q(ζ_lcm)` when a table is built.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rack::{GroupJson, GroupTable, Rack, RackJson};
use crate::scalar::{embed_common, ExactScalar};

fn normalize_table(table: Vec<Vec<ExactScalar>>, n: usize) -> Result<(u32, Vec<Vec<ExactScalar>>)> {
    if table.len() != n || table.iter().any(|r| r.len() != n) {
        return Err(Error::Shape(format!("cocycle table must be {n}x{n}")));
    }
    for (r, row) in table.iter().enumerate() {
        if let Some(c) = row.iter().position(|v| v.is_zero()) {
            return Err(Error::ZeroEntry { row: r, col: c });
        }
    }
    let flat: Vec<ExactScalar> = table.into_iter().flatten().collect();
    let (m, flat) = embed_common(&flat)?;
    Ok((m, flat.chunks(n.max(1)).map(|c| c.to_vec()).collect()))
}

/// A degree-1 2-cocycle `q : X × X → k^×` on a rack.
///
/// Equality compares values, so the same table over `Q(ζ_N)` and `Q(ζ_M)` is equal.
#[derive(Clone, Debug)]
pub struct RackCocycle {
    rack: Rack,
    modulus: u32,
    q: Vec<Vec<ExactScalar>>,
}

impl PartialEq for RackCocycle {
    fn eq(&self, other: &Self) -> bool {
        self.rack == other.rack && self.q == other.q
    }
}

impl Eq for RackCocycle {}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct RackCocycleJson {
    pub rack: RackJson,
    pub q: Vec<Vec<ExactScalar>>,
    /// Matrix-valued cocycles (degree > 1) are rejected.
    #[serde(default = "default_degree", skip_serializing_if = "is_degree_one")]
    pub degree: usize,
}

fn default_degree() -> usize {
    1
}

fn is_degree_one(d: &usize) -> bool {
    *d == 1
}

/// Checks `q(x, y▷z) q(y, z) = q(x▷y, x▷z) q(x, z)` for all triples.
pub fn validate_rack_cocycle(rack: &Rack, q: &[Vec<ExactScalar>]) -> Result<()> {
    let n = rack.size();
    let (_, q) = normalize_table(q.to_vec(), n)?;
    check_rack_identity(rack, &q)
}

fn check_rack_identity(rack: &Rack, q: &[Vec<ExactScalar>]) -> Result<()> {
    let n = rack.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = &q[x][rack.act(y, z)] * &q[y][z];
                let rhs = &q[rack.act(x, y)][rack.act(x, z)] * &q[x][z];
                if lhs != rhs {
                    return Err(Error::CocycleIdentity { x, y, z, lhs: lhs.to_string(), rhs: rhs.to_string() });
                }
            }
        }
    }
    Ok(())
}

impl RackCocycle {
    pub fn new(rack: Rack, q: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let (modulus, q) = normalize_table(q, rack.size())?;
        check_rack_identity(&rack, &q)?;
        Ok(RackCocycle { rack, modulus, q })
    }

    pub fn constant(rack: Rack, value: ExactScalar) -> Result<Self> {
        let n = rack.size();
        Self::new(rack, vec![vec![value; n]; n])
    }

    /// Builds without checking the cocycle identity (zero entries and shape
    /// are still rejected).
    pub fn new_unchecked(rack: Rack, q: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let (modulus, q) = normalize_table(q, rack.size())?;
        Ok(RackCocycle { rack, modulus, q })
    }

    pub fn rack(&self) -> &Rack {
        &self.rack
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn value(&self, x: usize, y: usize) -> &ExactScalar {
        &self.q[x][y]
    }

    pub fn table(&self) -> &[Vec<ExactScalar>] {
        &self.q
    }

    pub fn validate(&self) -> Result<()> {
        check_rack_identity(&self.rack, &self.q)
    }

    /// The same cocycle with every value embedded into `Q(ζ_target)`.
    pub fn embed(&self, target: u32) -> Result<Self> {
        let q = self
            .q
            .iter()
            .map(|r| r.iter().map(|v| v.embed(target)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(RackCocycle { rack: self.rack.clone(), modulus: target, q })
    }

    pub fn to_json(&self) -> RackCocycleJson {
        RackCocycleJson { rack: self.rack.to_json(), q: self.q.clone(), degree: 1 }
    }

    pub fn from_json(j: RackCocycleJson) -> Result<Self> {
        if j.degree != 1 {
            return Err(Error::Unsupported(format!(
                "rack cocycles of degree {} (only scalar, degree-1 cocycles are implemented)",
                j.degree
            )));
        }
        Self::new(Rack::from_json(j.rack)?, j.q)
    }
}

/// A normalized 2-cocycle `σ : G × G → k^×`.
#[derive(Clone, Debug)]
pub struct GroupCocycle {
    group: Arc<GroupTable>,
    modulus: u32,
    sigma: Vec<Vec<ExactScalar>>,
}

impl PartialEq for GroupCocycle {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.sigma == other.sigma
    }
}

impl Eq for GroupCocycle {}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GroupCocycleJson {
    pub group: GroupJson,
    pub sigma: Vec<Vec<ExactScalar>>,
}

/// Checks normalization `σ(x, e) = σ(e, x) = 1` and the cocycle identity
/// `σ(x, y) σ(xy, z) = σ(y, z) σ(x, yz)`.
pub fn validate_group_cocycle(group: &GroupTable, sigma: &[Vec<ExactScalar>]) -> Result<()> {
    let (_, sigma) = normalize_table(sigma.to_vec(), group.order())?;
    check_group_identity(group, &sigma)
}

fn check_group_identity(g: &GroupTable, s: &[Vec<ExactScalar>]) -> Result<()> {
    let m = g.order();
    let e = g.identity();
    for x in 0..m {
        if !s[x][e].is_one() || !s[e][x].is_one() {
            return Err(Error::Normalization(format!(
                "σ({x}, e) = {}, σ(e, {x}) = {}; both must be 1",
                s[x][e], s[e][x]
            )));
        }
    }
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let lhs = &s[x][y] * &s[g.mul(x, y)][z];
                let rhs = &s[y][z] * &s[x][g.mul(y, z)];
                if lhs != rhs {
                    return Err(Error::CocycleIdentity { x, y, z, lhs: lhs.to_string(), rhs: rhs.to_string() });
                }
            }
        }
    }
    Ok(())
}

impl GroupCocycle {
    pub fn new(group: Arc<GroupTable>, sigma: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let (modulus, sigma) = normalize_table(sigma, group.order())?;
        check_group_identity(&group, &sigma)?;
        Ok(GroupCocycle { group, modulus, sigma })
    }

    pub fn trivial(group: Arc<GroupTable>) -> Self {
        let m = group.order();
        GroupCocycle { group, modulus: 1, sigma: vec![vec![ExactScalar::one(1); m]; m] }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn value(&self, x: usize, y: usize) -> &ExactScalar {
        &self.sigma[x][y]
    }

    pub fn table(&self) -> &[Vec<ExactScalar>] {
        &self.sigma
    }

    /// Pointwise inverse; again a normalized cocycle.
    pub fn inverse(&self) -> Self {
        let sigma = self
            .sigma
            .iter()
            .map(|r| r.iter().map(|v| v.inverse().expect("cocycle values are nonzero")).collect())
            .collect();
        GroupCocycle { group: self.group.clone(), modulus: self.modulus, sigma }
    }

    /// Pointwise product of two cocycles on the same group.
    pub fn pointwise_mul(&self, other: &GroupCocycle) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::Malformed("cocycles live on different groups".into()));
        }
        let m = self.modulus.max(1);
        let target = num_integer::lcm(m, other.modulus);
        let sigma = self
            .sigma
            .iter()
            .zip(&other.sigma)
            .map(|(a, b)| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| Ok(&x.embed(target)? * &y.embed(target)?))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GroupCocycle::new(self.group.clone(), sigma)
    }

    pub fn to_json(&self) -> GroupCocycleJson {
        GroupCocycleJson { group: self.group.to_json(), sigma: self.sigma.clone() }
    }

    pub fn from_json(j: GroupCocycleJson) -> Result<Self> {
        Self::new(Arc::new(GroupTable::from_json(j.group)?), j.sigma)
    }
}

/// `σ(x, y) = μ(x) μ(y) μ(xy)⁻¹`; requires `μ(e) = 1`.
pub fn coboundary(group: &Arc<GroupTable>, mu: &[ExactScalar]) -> Result<GroupCocycle> {
    let m = group.order();
    if mu.len() != m {
        return Err(Error::Shape(format!("μ has {} values for a group of order {m}", mu.len())));
    }
    if let Some(i) = mu.iter().position(|v| v.is_zero()) {
        return Err(Error::ZeroEntry { row: i, col: 0 });
    }
    if !mu[group.identity()].is_one() {
        return Err(Error::Normalization(format!("μ(e) = {}, must be 1", mu[group.identity()])));
    }
    let (_, mu) = embed_common(mu)?;
    let inv: Vec<ExactScalar> = mu.iter().map(|v| v.inverse()).collect::<Result<_>>()?;
    let sigma = (0..m)
        .map(|x| (0..m).map(|y| &(&mu[x] * &mu[y]) * &inv[group.mul(x, y)]).collect())
        .collect();
    GroupCocycle::new(group.clone(), sigma)
}

/// Result of [`twist_rack_cocycle`]: the twisted table and whether it
/// satisfies the rack cocycle identity.
#[derive(Clone, Debug)]
pub struct TwistedCocycle {
    pub cocycle: RackCocycle,
    pub violation: Option<String>,
}

impl TwistedCocycle {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// `q'(x, y) = σ(x, y) q(x, y) σ(x ▷ y, x)⁻¹`, with rack elements read in
/// `G` through the rack's embedding.
///
/// Values are embedded into `Q(ζ_lcm)` of the two input moduli.
pub fn twist_rack_cocycle(q: &RackCocycle, sigma: &GroupCocycle) -> Result<TwistedCocycle> {
    let rack = q.rack();
    let emb = rack.embedding().ok_or(Error::MissingEmbedding)?;
    if *emb.group != **sigma.group() {
        return Err(Error::Malformed("σ is defined on a different group than the rack's embedding".into()));
    }
    let target = num_integer::lcm(q.modulus(), sigma.modulus());
    let n = rack.size();
    let g = &emb.elements;
    let mut table = vec![Vec::with_capacity(n); n];
    for x in 0..n {
        for y in 0..n {
            let s_xy = sigma.value(g[x], g[y]).embed(target)?;
            let s_back = sigma.value(g[rack.act(x, y)], g[x]).embed(target)?.inverse()?;
            let qv = q.value(x, y).embed(target)?;
            table[x].push(&(&s_xy * &qv) * &s_back);
        }
    }
    let cocycle = RackCocycle::new_unchecked(rack.clone(), table)?;
    let violation = cocycle.validate().err().map(|e| e.to_string());
    Ok(TwistedCocycle { cocycle, violation })
}
