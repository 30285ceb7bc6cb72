//! Finite racks, finite groups as multiplication tables, and conjugation
//! racks on subsets of groups.
//!
//! Groups compose right to left: `mul(a, b)` is `a ∘ b`, and for symmetric
//! groups `(a ∘ b)(i) = a(b(i))`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, RackViolation, Result};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    size: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GroupJson {
    pub size: usize,
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroupTable {
    /// Validates the table: entries in range, two-sided identity, inverses,
    /// associativity.
    pub fn new(mul: Vec<Vec<usize>>, identity: usize, labels: Option<Vec<String>>) -> Result<Self> {
        let m = mul.len();
        if m == 0 {
            return Err(Error::Malformed("empty group".into()));
        }
        if identity >= m {
            return Err(Error::Malformed(format!("identity {identity} out of range {m}")));
        }
        if let Some(l) = &labels {
            if l.len() != m {
                return Err(Error::Malformed(format!("{} labels for {m} elements", l.len())));
            }
        }
        let mut flat = Vec::with_capacity(m * m);
        for (a, row) in mul.iter().enumerate() {
            if row.len() != m {
                return Err(Error::Malformed(format!("row {a} has length {}, expected {m}", row.len())));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= m {
                    return Err(Error::Malformed(format!("entry ({a}, {b}) = {v} out of range {m}")));
                }
            }
            flat.extend_from_slice(row);
        }
        let at = |a: usize, b: usize| flat[a * m + b];
        for a in 0..m {
            if at(identity, a) != a || at(a, identity) != a {
                return Err(Error::Malformed(format!("{identity} is not a two-sided identity at {a}")));
            }
        }
        let mut inverse = vec![usize::MAX; m];
        for a in 0..m {
            let inv = (0..m)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::Malformed(format!("element {a} has no inverse")))?;
            inverse[a] = inv;
        }
        for a in 0..m {
            for b in 0..m {
                let ab = at(a, b);
                for c in 0..m {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::Malformed(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(GroupTable { size: m, mul: flat, identity, inverse, labels })
    }

    pub fn order(&self) -> usize {
        self.size
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `g · x · g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    /// Left-to-right product `x_1 ⋯ x_k`; the identity for an empty list.
    pub fn product(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != self.identity {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    pub fn label(&self, a: usize) -> String {
        self.labels.as_ref().map_or_else(|| a.to_string(), |l| l[a].clone())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// The conjugacy class of `a`, sorted.
    pub fn conjugacy_class(&self, a: usize) -> Vec<usize> {
        let mut class: Vec<usize> = (0..self.size).map(|g| self.conjugate(g, a)).collect();
        class.sort_unstable();
        class.dedup();
        class
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            size: self.size,
            mul: self.mul.chunks(self.size).map(|r| r.to_vec()).collect(),
            identity: self.identity,
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(j: GroupJson) -> Result<Self> {
        if j.size != j.mul.len() {
            return Err(Error::Malformed(format!("size {} but {} rows", j.size, j.mul.len())));
        }
        Self::new(j.mul, j.identity, j.labels)
    }
}

/// Largest `n` accepted by [`symmetric_group`].
pub const MAX_SYMMETRIC_DEGREE: usize = 7;

/// All permutations of `0..n` in lexicographic order of one-line notation.
pub fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

fn cycle_label(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut i = p[start];
        while i != start {
            seen[i] = true;
            cycle.push(i + 1);
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// `S_n` with elements enumerated lexicographically by one-line notation
/// (identity at index 0), labelled in 1-based cycle notation such as `(1 2)`.
pub fn symmetric_group(n: usize) -> Result<GroupTable> {
    if n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::Budget {
            what: format!("multiplication table of S_{n}"),
            required: n as u128,
            limit: MAX_SYMMETRIC_DEGREE as u128,
            partial: None,
        });
    }
    let perms = permutations_lex(n);
    let index: std::collections::HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mul = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let ab: Vec<usize> = b.iter().map(|&i| a[i]).collect();
                    index[&ab]
                })
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    GroupTable::new(mul, 0, Some(labels))
}

/// Cyclic group `Z_m` with element `k` at index `k`.
pub fn cyclic_group(m: usize) -> Result<GroupTable> {
    let mul = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
    GroupTable::new(mul, 0, None)
}

/// Where a rack sits inside a group: rack element `i` is `elements[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupEmbedding {
    pub group: Arc<GroupTable>,
    pub elements: Vec<usize>,
}

/// A finite rack on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rack {
    op: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    embedding: Option<GroupEmbedding>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct RackJson {
    pub size: usize,
    pub op: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct EmbeddingJson {
    pub group: GroupJson,
    pub elements: Vec<usize>,
}

/// Checks both rack axioms exhaustively.
///
/// Reports the first non-injective row, or the first triple `(x, y, z)` in
/// lexicographic order where self-distributivity fails.
pub fn validate_rack(op: &[Vec<usize>]) -> Result<()> {
    let n = op.len();
    if n == 0 {
        return Err(Error::Malformed("empty rack".into()));
    }
    for (x, row) in op.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!("row {x} has length {}, expected {n}", row.len())));
        }
        if let Some((y, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::Malformed(format!("entry ({x}, {y}) = {v} out of range {n}")));
        }
    }
    for (x, row) in op.iter().enumerate() {
        let mut preimage = vec![usize::MAX; n];
        for (y, &img) in row.iter().enumerate() {
            if preimage[img] != usize::MAX {
                return Err(Error::RackAxiom(RackViolation::NotBijective {
                    x,
                    y1: preimage[img],
                    y2: y,
                    image: img,
                }));
            }
            preimage[img] = y;
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = op[x][op[y][z]];
                let rhs = op[op[x][y]][op[x][z]];
                if lhs != rhs {
                    return Err(Error::RackAxiom(RackViolation::SelfDistributivity { x, y, z, lhs, rhs }));
                }
            }
        }
    }
    Ok(())
}

impl Rack {
    pub fn new(op: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        validate_rack(&op)?;
        if let Some(l) = &labels {
            if l.len() != op.len() {
                return Err(Error::Malformed(format!("{} labels for {} elements", l.len(), op.len())));
            }
        }
        Ok(Rack { op, labels, embedding: None })
    }

    /// `x ▷ y = y`.
    pub fn trivial(n: usize) -> Self {
        Rack { op: (0..n).map(|_| (0..n).collect()).collect(), labels: None, embedding: None }
    }

    pub fn size(&self) -> usize {
        self.op.len()
    }

    /// `x ▷ y`.
    pub fn act(&self, x: usize, y: usize) -> usize {
        self.op[x][y]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.op
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        self.labels.as_ref().map_or_else(|| x.to_string(), |l| l[x].clone())
    }

    pub fn embedding(&self) -> Option<&GroupEmbedding> {
        self.embedding.as_ref()
    }

    /// Attaches a group embedding after checking `x ▷ y = x y x⁻¹` in `G`.
    pub fn with_embedding(mut self, group: Arc<GroupTable>, elements: Vec<usize>) -> Result<Self> {
        if elements.len() != self.size() {
            return Err(Error::Malformed(format!(
                "embedding lists {} elements for a rack of size {}",
                elements.len(),
                self.size()
            )));
        }
        for (i, &g) in elements.iter().enumerate() {
            if g >= group.order() {
                return Err(Error::Malformed(format!("embedded element {g} out of range")));
            }
            if elements[..i].contains(&g) {
                return Err(Error::Malformed(format!("embedding repeats group element {g}")));
            }
        }
        for x in 0..self.size() {
            for y in 0..self.size() {
                if elements[self.act(x, y)] != group.conjugate(elements[x], elements[y]) {
                    return Err(Error::Malformed(format!(
                        "embedding does not intertwine {x}▷{y} with conjugation"
                    )));
                }
            }
        }
        self.embedding = Some(GroupEmbedding { group, elements });
        Ok(self)
    }

    /// Orbits of the group generated by the left translations `y ↦ x ▷ y`,
    /// each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (find(&mut parent, y), find(&mut parent, self.act(x, y)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for y in 0..n {
            let r = find(&mut parent, y);
            groups.entry(r).or_default().push(y);
        }
        groups.into_values().collect()
    }

    pub fn is_quandle(&self) -> bool {
        (0..self.size()).all(|x| self.act(x, x) == x)
    }

    pub fn to_json(&self) -> RackJson {
        RackJson {
            size: self.size(),
            op: self.op.clone(),
            labels: self.labels.clone(),
            embedding: self.embedding.as_ref().map(|e| EmbeddingJson {
                group: e.group.to_json(),
                elements: e.elements.clone(),
            }),
        }
    }

    pub fn from_json(j: RackJson) -> Result<Self> {
        if j.size != j.op.len() {
            return Err(Error::Malformed(format!("size {} but {} rows", j.size, j.op.len())));
        }
        let rack = Rack::new(j.op, j.labels)?;
        match j.embedding {
            Some(e) => rack.with_embedding(Arc::new(GroupTable::from_json(e.group)?), e.elements),
            None => Ok(rack),
        }
    }
}

/// The rack `x ▷ y = x y x⁻¹` on a conjugation-closed subset of `G`.
///
/// Elements are relabelled `0..subset.len()` in the given order; group labels
/// carry over and the embedding is recorded on the rack.
pub fn conjugation_rack(group: &Arc<GroupTable>, subset: &[usize]) -> Result<Rack> {
    if subset.is_empty() {
        return Err(Error::Malformed("empty subset".into()));
    }
    let mut pos = vec![usize::MAX; group.order()];
    for (i, &g) in subset.iter().enumerate() {
        if g >= group.order() {
            return Err(Error::Malformed(format!("element {g} out of range {}", group.order())));
        }
        if pos[g] != usize::MAX {
            return Err(Error::Malformed(format!("element {g} listed twice")));
        }
        pos[g] = i;
    }
    let mut op = vec![vec![0; subset.len()]; subset.len()];
    for (i, &x) in subset.iter().enumerate() {
        for (j, &y) in subset.iter().enumerate() {
            let c = group.conjugate(x, y);
            if pos[c] == usize::MAX {
                return Err(Error::NotClosed { conjugator: x, element: y, result: c });
            }
            op[i][j] = pos[c];
        }
    }
    let labels = group.labels().map(|_| subset.iter().map(|&g| group.label(g)).collect());
    Rack::new(op, labels)?.with_embedding(group.clone(), subset.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<GroupTable> {
        Arc::new(symmetric_group(3).unwrap())
    }

    fn transpositions(g: &GroupTable) -> Vec<usize> {
        ["(1 2)", "(1 3)", "(2 3)"].iter().map(|l| g.find_label(l).unwrap()).collect()
    }

    #[test]
    fn symmetric_group_conventions() {
        let s1 = symmetric_group(1).unwrap();
        assert_eq!(s1.order(), 1);
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        assert_eq!(s3.label(0), "()");
        let involutions = (0..6).filter(|&a| s3.element_order(a) == 2).count();
        assert_eq!(involutions, 3);
        assert!(matches!(symmetric_group(MAX_SYMMETRIC_DEGREE + 1), Err(Error::Budget { .. })));
    }

    #[test]
    fn trivial_rack_is_valid() {
        assert!(validate_rack(Rack::trivial(4).table()).is_ok());
    }

    #[test]
    fn swap_permutation_rack_is_valid() {
        // x ▷ y = φ(y) with φ the swap: every row is φ, so both axioms hold.
        assert!(validate_rack(&[vec![1, 0], vec![1, 0]]).is_ok());
    }

    #[test]
    fn self_distributivity_violation_is_located() {
        let err = validate_rack(&[vec![0, 1, 2], vec![0, 1, 2], vec![0, 2, 1]]).unwrap_err();
        match err {
            Error::RackAxiom(RackViolation::SelfDistributivity { x, y, z, lhs, rhs }) => {
                assert_eq!((x, y, z, lhs, rhs), (2, 1, 1, 2, 1));
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn non_bijective_row_and_out_of_range() {
        assert!(matches!(
            validate_rack(&[vec![0, 0], vec![0, 1]]),
            Err(Error::RackAxiom(RackViolation::NotBijective { x: 0, y1: 0, y2: 1, image: 0 }))
        ));
        assert!(matches!(validate_rack(&[vec![0, 2], vec![0, 1]]), Err(Error::Malformed(_))));
    }

    #[test]
    fn s3_transposition_rack() {
        let g = s3();
        let t = transpositions(&g);
        let rack = conjugation_rack(&g, &t).unwrap();
        assert_eq!(rack.size(), 3);
        // (12) ▷ (13) = (12)(13)(12) = (23)
        assert_eq!(rack.label(rack.act(0, 1)), "(2 3)");
        assert!(rack.is_quandle());
        assert_eq!(rack.orbits(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn singleton_classes() {
        let g = s3();
        let r = conjugation_rack(&g, &[g.identity()]).unwrap();
        assert_eq!(r.table(), &[vec![0]]);
        // A transposition alone is closed under conjugation by itself.
        let t = transpositions(&g);
        assert_eq!(conjugation_rack(&g, &t[..1]).unwrap().size(), 1);
    }

    #[test]
    fn non_closed_subset_names_escaping_conjugate() {
        let g = s3();
        let t = transpositions(&g);
        match conjugation_rack(&g, &t[..2]).unwrap_err() {
            Error::NotClosed { conjugator, element, result } => {
                assert_eq!(g.label(conjugator), "(1 2)");
                assert_eq!(g.label(element), "(1 3)");
                assert_eq!(g.label(result), "(2 3)");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn conjugation_racks_of_all_classes_are_valid_quandles() {
        for n in 1..=4 {
            let g = Arc::new(symmetric_group(n).unwrap());
            for a in 0..g.order() {
                let class = g.conjugacy_class(a);
                let rack = conjugation_rack(&g, &class).unwrap();
                assert!(validate_rack(rack.table()).is_ok());
                assert!(rack.is_quandle());
                let orbits = rack.orbits();
                assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), class.len());
                for o in &orbits {
                    assert!(o.iter().all(|&y| (0..class.len()).all(|x| o.contains(&rack.act(x, y)))));
                }
            }
        }
    }

    #[test]
    fn orbits_are_stable_under_relabelling() {
        // Union of two classes of S_3: transpositions and 3-cycles.
        let g = s3();
        let mut subset = g.conjugacy_class(g.find_label("(1 2)").unwrap());
        subset.extend(g.conjugacy_class(g.find_label("(1 2 3)").unwrap()));
        let rack = conjugation_rack(&g, &subset).unwrap();
        let sizes: Vec<usize> = rack.orbits().iter().map(|o| o.len()).collect();
        assert_eq!(sizes, vec![3, 2]);
        let mut reversed = subset.clone();
        reversed.reverse();
        let rack2 = conjugation_rack(&g, &reversed).unwrap();
        let mut sizes2: Vec<usize> = rack2.orbits().iter().map(|o| o.len()).collect();
        sizes2.sort_unstable();
        assert_eq!(sizes2, vec![2, 3]);
    }

    #[test]
    fn json_round_trip() {
        let g = s3();
        let rack = conjugation_rack(&g, &transpositions(&g)).unwrap();
        let j = serde_json::to_string(&rack.to_json()).unwrap();
        let back = Rack::from_json(serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, rack);
    }
}
