use alloc::vec;
use alloc::vec::Vec;

use super::{coverable, InstanceError, PcrpInstance, RequiredPair};
use crate::graph::ReachabilityIndex;

/// Which argument of [`classify_overlap`] a `Nested` result refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRole {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapKind {
    /// Some path meets the vertices as `u', u'', v', v''`.
    Alternated,
    /// Some path meets the vertices as `u', u'', v'', v'` and `inner` is the
    /// pair `(u'', v'')`.
    Nested { inner: PairRole },
    /// The pairs never overlap; this includes pairs that only touch at a
    /// shared vertex, as in `(x, y)` and `(y, z)`.
    Separate,
}

impl OverlapKind {
    pub fn overlaps(self) -> bool {
        !matches!(self, OverlapKind::Separate)
    }
}

/// Classifies two oriented, coverable pairs.
///
/// An order is realisable when the four vertices, taken in that order, form
/// a reachability chain (a vertex reaches itself, so shared vertices are
/// allowed except that the first pair's second vertex may not coincide with
/// the second pair's first vertex). When both an alternated and a nested
/// order are realisable the result is `Alternated`.
pub fn classify_overlap(
    p: RequiredPair,
    q: RequiredPair,
    reach: &ReachabilityIndex,
) -> Result<OverlapKind, InstanceError> {
    for pair in [p, q] {
        if !coverable(pair, reach) {
            return Err(InstanceError::NotCoverable { a: pair.first, b: pair.second });
        }
    }
    Ok(classify_oriented(orient(p, reach), orient(q, reach), reach))
}

fn orient(p: RequiredPair, reach: &ReachabilityIndex) -> RequiredPair {
    if reach.reaches(p.first, p.second) {
        p
    } else {
        RequiredPair::new(p.second, p.first)
    }
}

pub(crate) fn classify_oriented(
    p: RequiredPair,
    q: RequiredPair,
    reach: &ReachabilityIndex,
) -> OverlapKind {
    if p == q {
        return OverlapKind::Separate;
    }
    let r = |u, v| reach.reaches(u, v);
    let (a, b, c, d) = (p.first, p.second, q.first, q.second);
    let p_then_q = r(a, c) && r(c, b) && r(b, d) && b != c;
    let q_then_p = r(c, a) && r(a, d) && r(d, b) && d != a;
    if p_then_q || q_then_p {
        return OverlapKind::Alternated;
    }
    if r(a, c) && r(d, b) {
        return OverlapKind::Nested { inner: PairRole::Second };
    }
    if r(c, a) && r(b, d) {
        return OverlapKind::Nested { inner: PairRole::First };
    }
    OverlapKind::Separate
}

/// `inner` is nested in `outer`: some path meets `outer.first`,
/// `inner.first`, `inner.second`, `outer.second` in that order. Both pairs
/// must be oriented. A pair is not nested in itself here.
#[inline]
pub fn is_nested_in(inner: RequiredPair, outer: RequiredPair, reach: &ReachabilityIndex) -> bool {
    inner != outer && reach.reaches(outer.first, inner.first) && reach.reaches(inner.second, outer.second)
}

/// Pairwise overlap structure of an instance's pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapSummary {
    kinds: Vec<Vec<OverlapKind>>,
    degrees: Vec<usize>,
}

impl OverlapSummary {
    /// Requires every pair to be coverable.
    pub fn new(pairs: &[RequiredPair], reach: &ReachabilityIndex) -> Result<Self, InstanceError> {
        let m = pairs.len();
        let mut oriented = Vec::with_capacity(m);
        for &p in pairs {
            if !coverable(p, reach) {
                return Err(InstanceError::NotCoverable { a: p.first, b: p.second });
            }
            oriented.push(orient(p, reach));
        }
        let mut kinds = vec![vec![OverlapKind::Separate; m]; m];
        let mut degrees = vec![0; m];
        for i in 0..m {
            for j in i + 1..m {
                let k = classify_oriented(oriented[i], oriented[j], reach);
                kinds[i][j] = k;
                kinds[j][i] = match k {
                    OverlapKind::Nested { inner: PairRole::First } => {
                        OverlapKind::Nested { inner: PairRole::Second }
                    }
                    OverlapKind::Nested { inner: PairRole::Second } => {
                        OverlapKind::Nested { inner: PairRole::First }
                    }
                    other => other,
                };
                if k.overlaps() {
                    degrees[i] += 1;
                    degrees[j] += 1;
                }
            }
        }
        Ok(OverlapSummary { kinds, degrees })
    }

    pub fn kind(&self, i: usize, j: usize) -> OverlapKind {
        self.kinds[i][j]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Maximum overlapping degree `p` (0 for an empty pair list).
    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Number of unordered pair-pairs classified as alternated.
    pub fn alternated_count(&self) -> usize {
        self.count_where(|k| k == OverlapKind::Alternated)
    }

    /// Number of unordered pair-pairs classified as nested.
    pub fn nested_count(&self) -> usize {
        self.count_where(|k| matches!(k, OverlapKind::Nested { .. }))
    }

    fn count_where(&self, pred: impl Fn(OverlapKind) -> bool) -> usize {
        let m = self.kinds.len();
        (0..m).map(|i| (i + 1..m).filter(|&j| pred(self.kinds[i][j])).count()).sum()
    }
}

/// Number of other pairs of `inst` that overlap `inst.pairs()[index]`.
pub fn overlap_degree(index: usize, inst: &PcrpInstance) -> Result<usize, InstanceError> {
    Ok(OverlapSummary::new(inst.pairs(), inst.reach())?.degrees()[index])
}

/// The maximum overlapping degree over all pairs of `inst`.
pub fn max_overlap_degree(inst: &PcrpInstance) -> Result<usize, InstanceError> {
    Ok(OverlapSummary::new(inst.pairs(), inst.reach())?.max_degree())
}
