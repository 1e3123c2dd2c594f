//! Backtracking search for structure-preserving maps between two algebras.
//!
//! One engine serves three queries: embeddings (injective), isomorphisms
//! (bijective), and plain homomorphisms. Candidates are pruned by invariant
//! vectors, and every assignment propagates meet/join/implication closure
//! over the already-assigned elements, so the search space collapses after a
//! handful of choices. The search is exhaustive: a `None` answer is a proof
//! that no map of the requested kind exists.

use crate::kernel::{AlgebraMap, ElementId, HeytingAlgebra, MapKind};

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Embedding,
    Isomorphism,
    Homomorphism,
}

struct Invariants {
    height: Vec<usize>,
    depth: Vec<usize>,
    dense: Vec<bool>,
    regular: Vec<bool>,
    down_deg: Vec<usize>,
    up_deg: Vec<usize>,
}

impl Invariants {
    fn of(alg: &HeytingAlgebra) -> Self {
        let n = alg.size();
        let mut down_deg = vec![0usize; n];
        let mut up_deg = vec![0usize; n];
        for &(l, u) in alg.covers() {
            up_deg[l.index()] += 1;
            down_deg[u.index()] += 1;
        }
        Invariants {
            height: alg.heights(),
            depth: alg.depths(),
            dense: alg.elements().map(|x| alg.is_dense(x)).collect(),
            regular: alg.elements().map(|x| alg.is_regular(x)).collect(),
            down_deg,
            up_deg,
        }
    }
}

struct Searcher<'a> {
    src: &'a HeytingAlgebra,
    dst: &'a HeytingAlgebra,
    mode: Mode,
    si: Invariants,
    di: Invariants,
    /// forbidden (source, target) pairs, used by callers that need a value
    /// constraint on top of structure preservation
    forbidden: &'a [(ElementId, ElementId)],
    assign: Vec<Option<ElementId>>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn compatible(&self, x: usize, c: usize) -> bool {
        if self.forbidden.iter().any(|&(fx, fc)| fx.index() == x && fc.index() == c) {
            return false;
        }
        match self.mode {
            Mode::Embedding => {
                self.si.dense[x] == self.di.dense[c]
                    && self.si.regular[x] == self.di.regular[c]
                    && self.si.height[x] <= self.di.height[c]
                    && self.si.depth[x] <= self.di.depth[c]
            }
            Mode::Isomorphism => {
                self.si.dense[x] == self.di.dense[c]
                    && self.si.regular[x] == self.di.regular[c]
                    && self.si.height[x] == self.di.height[c]
                    && self.si.depth[x] == self.di.depth[c]
                    && self.si.down_deg[x] == self.di.down_deg[c]
                    && self.si.up_deg[x] == self.di.up_deg[c]
            }
            Mode::Homomorphism => {
                (!self.si.dense[x] || self.di.dense[c])
                    && (!self.si.regular[x] || self.di.regular[c])
            }
        }
    }

    /// Assigns `x -> c` and closes under the operation tables; returns false
    /// (leaving the trail for the caller to unwind) on any conflict.
    fn propagate(&mut self, x: usize, c: usize) -> bool {
        let mut queue = vec![(x, c)];
        while let Some((x, c)) = queue.pop() {
            if let Some(prev) = self.assign[x] {
                if prev.index() != c {
                    return false;
                }
                continue;
            }
            if !self.compatible(x, c) {
                return false;
            }
            let injective = self.mode != Mode::Homomorphism;
            if injective && self.used[c] {
                return false;
            }
            let xe = ElementId(x as u32);
            let ce = ElementId(c as u32);
            // order consistency against everything already assigned
            for u in 0..self.src.size() {
                let Some(fu) = self.assign[u] else { continue };
                let ue = ElementId(u as u32);
                if self.src.leq(xe, ue) && !self.dst.leq(ce, fu) {
                    return false;
                }
                if self.src.leq(ue, xe) && !self.dst.leq(fu, ce) {
                    return false;
                }
                if injective {
                    // injective lattice maps reflect the order
                    if self.dst.leq(ce, fu) && !self.src.leq(xe, ue) {
                        return false;
                    }
                    if self.dst.leq(fu, ce) && !self.src.leq(ue, xe) {
                        return false;
                    }
                }
            }
            self.assign[x] = Some(ce);
            if injective {
                self.used[c] = true;
            }
            self.trail.push(x);
            for u in 0..self.src.size() {
                let Some(fu) = self.assign[u] else { continue };
                let ue = ElementId(u as u32);
                queue.push((self.src.meet(xe, ue).index(), self.dst.meet(ce, fu).index()));
                queue.push((self.src.join(xe, ue).index(), self.dst.join(ce, fu).index()));
                queue.push((self.src.imp(xe, ue).index(), self.dst.imp(ce, fu).index()));
                queue.push((self.src.imp(ue, xe).index(), self.dst.imp(fu, ce).index()));
            }
        }
        true
    }

    fn unwind(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            if let Some(c) = self.assign[x].take() {
                if self.mode != Mode::Homomorphism {
                    self.used[c.index()] = false;
                }
            }
        }
    }

    fn solve(&mut self) -> bool {
        // most-constrained unassigned source element first
        let mut pick: Option<(usize, Vec<usize>)> = None;
        for x in 0..self.src.size() {
            if self.assign[x].is_some() {
                continue;
            }
            let cands: Vec<usize> = (0..self.dst.size())
                .filter(|&c| self.candidate_ok(x, c))
                .collect();
            if pick.as_ref().is_none_or(|(_, best)| cands.len() < best.len()) {
                let empty = cands.is_empty();
                pick = Some((x, cands));
                if empty {
                    break;
                }
            }
        }
        let Some((x, cands)) = pick else { return true };
        for c in cands {
            let mark = self.trail.len();
            if self.propagate(x, c) && self.solve() {
                return true;
            }
            self.unwind(mark);
        }
        false
    }

    fn candidate_ok(&self, x: usize, c: usize) -> bool {
        if !self.compatible(x, c) {
            return false;
        }
        let injective = self.mode != Mode::Homomorphism;
        if injective && self.used[c] {
            return false;
        }
        let xe = ElementId(x as u32);
        let ce = ElementId(c as u32);
        for u in 0..self.src.size() {
            let Some(fu) = self.assign[u] else { continue };
            let ue = ElementId(u as u32);
            if self.src.leq(xe, ue) != self.dst.leq(ce, fu) && injective {
                return false;
            }
            if self.src.leq(ue, xe) != self.dst.leq(fu, ce) && injective {
                return false;
            }
            if !injective {
                if self.src.leq(xe, ue) && !self.dst.leq(ce, fu) {
                    return false;
                }
                if self.src.leq(ue, xe) && !self.dst.leq(fu, ce) {
                    return false;
                }
            }
        }
        true
    }
}

fn run(
    src: &HeytingAlgebra,
    dst: &HeytingAlgebra,
    mode: Mode,
    forbidden: &[(ElementId, ElementId)],
) -> Option<Vec<ElementId>> {
    let mut s = Searcher {
        src,
        dst,
        mode,
        si: Invariants::of(src),
        di: Invariants::of(dst),
        forbidden,
        assign: vec![None; src.size()],
        used: vec![false; dst.size()],
        trail: Vec::new(),
    };
    // the constants are pinned
    if !s.propagate(src.bottom().index(), dst.bottom().index()) {
        return None;
    }
    if !s.propagate(src.top().index(), dst.top().index()) {
        return None;
    }
    if s.solve() {
        Some(s.assign.iter().map(|a| a.unwrap()).collect())
    } else {
        None
    }
}

pub(crate) fn embedding(src: &HeytingAlgebra, dst: &HeytingAlgebra) -> Option<AlgebraMap> {
    if src.size() > dst.size() {
        return None;
    }
    run(src, dst, Mode::Embedding, &[]).map(|assign| {
        AlgebraMap::new(src.clone(), dst.clone(), assign, MapKind::Embedding)
    })
}

pub(crate) fn isomorphism(src: &HeytingAlgebra, dst: &HeytingAlgebra) -> Option<AlgebraMap> {
    if src.size() != dst.size() {
        return None;
    }
    // quick reject on invariant multisets
    let (si, di) = (Invariants::of(src), Invariants::of(dst));
    let key = |inv: &Invariants, i: usize| {
        (inv.height[i], inv.depth[i], inv.down_deg[i], inv.up_deg[i], inv.dense[i], inv.regular[i])
    };
    let mut ks: Vec<_> = (0..src.size()).map(|i| key(&si, i)).collect();
    let mut kd: Vec<_> = (0..dst.size()).map(|i| key(&di, i)).collect();
    ks.sort_unstable();
    kd.sort_unstable();
    if ks != kd {
        return None;
    }
    run(src, dst, Mode::Isomorphism, &[]).map(|assign| {
        AlgebraMap::new(src.clone(), dst.clone(), assign, MapKind::Isomorphism)
    })
}

/// A homomorphism avoiding the given (source, target) value pairs, if any
/// exists. Used for characteristic-formula countermodel search, where the
/// image of the source coatom must differ from the target top.
pub(crate) fn homomorphism_avoiding(
    src: &HeytingAlgebra,
    dst: &HeytingAlgebra,
    forbidden: &[(ElementId, ElementId)],
) -> Option<Vec<ElementId>> {
    run(src, dst, Mode::Homomorphism, forbidden)
}
