//! Finite Heyting algebras with fully tabulated operations.
//!
//! An algebra is constructed once — from cover data, from a closed order
//! relation, or as a sum/product of existing algebras — and is immutable
//! afterwards. Implication is always derived from the order: `a -> b` is the
//! greatest `c` with `a /\ c <= b`, and construction fails loudly when that
//! greatest element does not exist (equivalently, when the lattice is not
//! distributive).

use std::fmt;
use thiserror::Error;

/// Default cap on the element count of a [`product`].
pub const DEFAULT_PRODUCT_CAP: usize = 4096;

/// Index of an element of one [`HeytingAlgebra`].
///
/// Ids are dense, start at 0, and are only meaningful relative to the algebra
/// that produced them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("cover list references element {index} but the size is {size}")]
    IndexOutOfBounds { index: usize, size: usize },
    #[error("cover relation contains a cycle")]
    CyclicCovers,
    #[error("order has {0} minimal elements, a bounded lattice needs exactly one")]
    NoBoundedBottom(usize),
    #[error("order has {0} maximal elements, a bounded lattice needs exactly one")]
    NoBoundedTop(usize),
    #[error("elements {a} and {b} have no {kind}")]
    NotALattice { a: u32, b: u32, kind: &'static str },
    #[error("lattice is not distributive, witness a={a} b={b} c={c}")]
    NotDistributive { a: u32, b: u32, c: u32 },
    #[error("requested {requested} elements, over the cap of {cap}")]
    SizeLimitExceeded { requested: usize, cap: usize },
}

/// A finite Heyting algebra: a bounded distributive lattice together with the
/// tables of its meet, join, relative pseudocomplement and pseudocomplement.
#[derive(Clone)]
pub struct HeytingAlgebra {
    size: usize,
    /// Row-major `size * size` order relation, reflexive and transitive.
    leq: Vec<bool>,
    /// Transitive reduction of `leq`, sorted by (lower, upper).
    covers: Vec<(ElementId, ElementId)>,
    meet: Vec<u32>,
    join: Vec<u32>,
    imp: Vec<u32>,
    neg: Vec<u32>,
    bottom: ElementId,
    top: ElementId,
    name: Option<String>,
}

impl fmt::Debug for HeytingAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HeytingAlgebra({}, size {})",
            self.name.as_deref().unwrap_or("?"),
            self.size
        )
    }
}

impl HeytingAlgebra {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.size as u32).map(ElementId)
    }

    /// The element with index `i`. Panics if `i >= size`.
    pub fn element(&self, i: usize) -> ElementId {
        assert!(i < self.size, "element index {i} out of range {}", self.size);
        ElementId(i as u32)
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a.index() * self.size + b.index()]
    }

    #[inline]
    pub fn lt(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: ElementId, b: ElementId) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    #[inline]
    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.meet[a.index() * self.size + b.index()])
    }

    #[inline]
    pub fn join(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.join[a.index() * self.size + b.index()])
    }

    #[inline]
    pub fn imp(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.imp[a.index() * self.size + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        ElementId(self.neg[a.index()])
    }

    /// `(a -> b) /\ (b -> a)`.
    #[inline]
    pub fn equiv(&self, a: ElementId, b: ElementId) -> ElementId {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    #[inline]
    pub fn is_dense(&self, a: ElementId) -> bool {
        self.neg(a) == self.bottom
    }

    #[inline]
    pub fn is_regular(&self, a: ElementId) -> bool {
        self.neg(self.neg(a)) == a
    }

    /// Cover pairs `(lower, upper)`, the transitive reduction of the order.
    pub fn covers(&self) -> &[(ElementId, ElementId)] {
        &self.covers
    }

    pub fn upper_covers(&self, a: ElementId) -> Vec<ElementId> {
        self.covers.iter().filter(|&&(l, _)| l == a).map(|&(_, u)| u).collect()
    }

    pub fn lower_covers(&self, a: ElementId) -> Vec<ElementId> {
        self.covers.iter().filter(|&&(_, u)| u == a).map(|&(l, _)| l).collect()
    }

    pub fn is_coatom(&self, a: ElementId) -> bool {
        self.covers.contains(&(a, self.top))
    }

    /// Length of the longest chain below each element (bottom has height 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.size];
        // element ids are not sorted by height in general, so fixpoint
        let mut changed = true;
        while changed {
            changed = false;
            for &(l, u) in &self.covers {
                if h[u.index()] < h[l.index()] + 1 {
                    h[u.index()] = h[l.index()] + 1;
                    changed = true;
                }
            }
        }
        h
    }

    /// Length of the longest chain above each element (top has depth 0).
    pub fn depths(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.size];
        let mut changed = true;
        while changed {
            changed = false;
            for &(l, u) in &self.covers {
                if d[l.index()] < d[u.index()] + 1 {
                    d[l.index()] = d[u.index()] + 1;
                    changed = true;
                }
            }
        }
        d
    }

    /// Checks every type invariant by brute force; test support.
    pub fn verify_invariants(&self) -> Result<(), String> {
        let n = self.size;
        for a in self.elements() {
            if !self.leq(self.bottom, a) || !self.leq(a, self.top) {
                return Err(format!("bounds fail at {a}"));
            }
            if self.neg(a) != self.imp(a, self.bottom) {
                return Err(format!("neg({a}) != {a} -> 0"));
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                let m = self.meet(a, b);
                if !self.leq(m, a) || !self.leq(m, b) {
                    return Err(format!("meet({a},{b}) not a lower bound"));
                }
                for c in self.elements() {
                    // residuation: a /\ c <= b  iff  c <= a -> b
                    let lhs = self.leq(self.meet(a, c), b);
                    let rhs = self.leq(c, self.imp(a, b));
                    if lhs != rhs {
                        return Err(format!("residuation fails at ({a},{b},{c})"));
                    }
                    let d1 = self.meet(a, self.join(b, c));
                    let d2 = self.join(self.meet(a, b), self.meet(a, c));
                    if d1 != d2 {
                        return Err(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        // covers must be exactly the transitive reduction
        for a in self.elements() {
            for b in self.elements() {
                let is_cover = self.lt(a, b)
                    && !self
                        .elements()
                        .any(|c| self.lt(a, c) && self.lt(c, b));
                if is_cover != self.covers.contains(&(a, b)) {
                    return Err(format!("cover list wrong at ({a},{b})"));
                }
            }
        }
        let _ = n;
        Ok(())
    }
}

/// Builds an algebra from a Hasse diagram.
///
/// Element order in the result is canonicalized, sorted by
/// (height, degree, neighbor code), so that equal inputs give identical
/// tables.
pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<HeytingAlgebra, LatticeError> {
    from_covers_traced(size, covers).map(|(a, _)| a)
}

/// Like [`from_covers`], additionally returning where each input index ended
/// up: `trace[i]` is the id of input element `i` in the canonicalized result.
pub fn from_covers_traced(
    size: usize,
    covers: &[(usize, usize)],
) -> Result<(HeytingAlgebra, Vec<ElementId>), LatticeError> {
    assert!(size > 0, "algebra size must be positive");
    for &(l, u) in covers {
        for ix in [l, u] {
            if ix >= size {
                return Err(LatticeError::IndexOutOfBounds { index: ix, size });
            }
        }
    }
    // cycle check via Kahn's algorithm on the cover digraph
    let mut indeg = vec![0usize; size];
    for &(_, u) in covers {
        indeg[u] += 1;
    }
    let mut queue: Vec<usize> = (0..size).filter(|&i| indeg[i] == 0).collect();
    let mut seen = 0;
    let mut cursor = 0;
    while cursor < queue.len() {
        let v = queue[cursor];
        cursor += 1;
        seen += 1;
        for &(l, u) in covers {
            if l == v {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    queue.push(u);
                }
            }
        }
    }
    if seen != size {
        return Err(LatticeError::CyclicCovers);
    }

    // reflexive-transitive closure
    let mut leq = vec![false; size * size];
    for i in 0..size {
        leq[i * size + i] = true;
    }
    for &(l, u) in covers {
        leq[l * size + u] = true;
    }
    for k in 0..size {
        for i in 0..size {
            if leq[i * size + k] {
                for j in 0..size {
                    if leq[k * size + j] {
                        leq[i * size + j] = true;
                    }
                }
            }
        }
    }

    let order = canonical_element_order(size, &leq);
    // order[i] = old index placed at new position i; invert for relabeling
    let mut new_of_old = vec![0usize; size];
    for (new, &old) in order.iter().enumerate() {
        new_of_old[old] = new;
    }
    let mut leq2 = vec![false; size * size];
    for i in 0..size {
        for j in 0..size {
            if leq[i * size + j] {
                leq2[new_of_old[i] * size + new_of_old[j]] = true;
            }
        }
    }
    let alg = from_leq(size, leq2, None)?;
    let trace = new_of_old.iter().map(|&i| ElementId(i as u32)).collect();
    Ok((alg, trace))
}

/// Deterministic element order: sort by (height, in/out cover degree,
/// iterated neighbor code), ties broken by the input index.
#[allow(clippy::needless_range_loop)]
fn canonical_element_order(size: usize, leq: &[bool]) -> Vec<usize> {
    let lt = |i: usize, j: usize| i != j && leq[i * size + j];
    // cover adjacency from the closed relation
    let mut down: Vec<Vec<usize>> = vec![Vec::new(); size];
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); size];
    for i in 0..size {
        for j in 0..size {
            if lt(i, j) && !(0..size).any(|k| lt(i, k) && lt(k, j)) {
                down[j].push(i);
                up[i].push(j);
            }
        }
    }
    let mut height = vec![0usize; size];
    let mut changed = true;
    while changed {
        changed = false;
        for j in 0..size {
            let grow = down[j]
                .iter()
                .map(|&i| height[i] + 1)
                .max()
                .unwrap_or(0);
            if height[j] < grow {
                height[j] = grow;
                changed = true;
            }
        }
    }
    let mut code: Vec<u64> = (0..size)
        .map(|i| mix3(height[i] as u64, down[i].len() as u64, up[i].len() as u64))
        .collect();
    for _ in 0..3 {
        let mut next = code.clone();
        for i in 0..size {
            let mut lo: Vec<u64> = down[i].iter().map(|&j| code[j]).collect();
            let mut hi: Vec<u64> = up[i].iter().map(|&j| code[j]).collect();
            lo.sort_unstable();
            hi.sort_unstable();
            let mut acc = code[i];
            for v in lo {
                acc = mix3(acc, 0x1d, v);
            }
            for v in hi {
                acc = mix3(acc, 0x2e, v);
            }
            next[i] = acc;
        }
        code = next;
    }
    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by_key(|&i| (height[i], down[i].len(), up[i].len(), code[i], i));
    order
}

fn mix3(a: u64, b: u64, c: u64) -> u64 {
    let mut x = a
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(b.rotate_left(17))
        .wrapping_add(c.wrapping_mul(0xbf58_476d_1ce4_e5b9));
    x ^= x >> 31;
    x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 29)
}

/// Builds the algebra of a reflexive-transitive `leq` relation, checking the
/// lattice, bound and distributivity requirements and tabulating the
/// operations. Element order is kept as given.
pub(crate) fn from_leq(
    size: usize,
    leq: Vec<bool>,
    name: Option<String>,
) -> Result<HeytingAlgebra, LatticeError> {
    let le = |i: usize, j: usize| leq[i * size + j];
    let minimals: Vec<usize> = (0..size)
        .filter(|&i| (0..size).all(|j| j == i || !le(j, i)))
        .collect();
    if minimals.len() != 1 {
        return Err(LatticeError::NoBoundedBottom(minimals.len()));
    }
    let maximals: Vec<usize> = (0..size)
        .filter(|&i| (0..size).all(|j| j == i || !le(i, j)))
        .collect();
    if maximals.len() != 1 {
        return Err(LatticeError::NoBoundedTop(maximals.len()));
    }
    let bottom = minimals[0];
    let top = maximals[0];
    if !(0..size).all(|i| le(bottom, i) && le(i, top)) {
        // unreachable for a finite partial order with unique extremes
        return Err(LatticeError::NoBoundedBottom(0));
    }

    let mut meet = vec![0u32; size * size];
    let mut join = vec![0u32; size * size];
    for a in 0..size {
        for b in a..size {
            let mut best: Option<usize> = None;
            for c in 0..size {
                if le(c, a) && le(c, b) && best.is_none_or(|m| le(m, c)) {
                    best = Some(c);
                }
            }
            let m = best.expect("bottom is a common lower bound");
            if !(0..size).all(|c| !(le(c, a) && le(c, b)) || le(c, m)) {
                return Err(LatticeError::NotALattice { a: a as u32, b: b as u32, kind: "meet" });
            }
            meet[a * size + b] = m as u32;
            meet[b * size + a] = m as u32;

            let mut best: Option<usize> = None;
            for c in 0..size {
                if le(a, c) && le(b, c) && best.is_none_or(|m| le(c, m)) {
                    best = Some(c);
                }
            }
            let j = best.expect("top is a common upper bound");
            if !(0..size).all(|c| !(le(a, c) && le(b, c)) || le(j, c)) {
                return Err(LatticeError::NotALattice { a: a as u32, b: b as u32, kind: "join" });
            }
            join[a * size + b] = j as u32;
            join[b * size + a] = j as u32;
        }
    }

    for a in 0..size {
        for b in 0..size {
            for c in 0..size {
                let lhs = meet[a * size + join[b * size + c] as usize];
                let rhs = join[(meet[a * size + b] as usize) * size + meet[a * size + c] as usize];
                if lhs != rhs {
                    return Err(LatticeError::NotDistributive {
                        a: a as u32,
                        b: b as u32,
                        c: c as u32,
                    });
                }
            }
        }
    }

    // a -> b is the greatest c with a /\ c <= b; in a finite distributive
    // lattice the candidates are closed under join, so folding them works
    let mut imp = vec![0u32; size * size];
    for a in 0..size {
        for b in 0..size {
            let mut acc = bottom;
            for c in 0..size {
                if le(meet[a * size + c] as usize, b) {
                    acc = join[acc * size + c] as usize;
                }
            }
            debug_assert!(le(meet[a * size + acc] as usize, b));
            imp[a * size + b] = acc as u32;
        }
    }
    let neg: Vec<u32> = (0..size).map(|a| imp[a * size + bottom]).collect();

    let covers = covers_of_leq(size, &leq);

    Ok(HeytingAlgebra {
        size,
        leq,
        covers,
        meet,
        join,
        imp,
        neg,
        bottom: ElementId(bottom as u32),
        top: ElementId(top as u32),
        name,
    })
}

fn covers_of_leq(size: usize, leq: &[bool]) -> Vec<(ElementId, ElementId)> {
    let lt = |i: usize, j: usize| i != j && leq[i * size + j];
    let mut covers = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if lt(i, j) && !(0..size).any(|k| lt(i, k) && lt(k, j)) {
                covers.push((ElementId(i as u32), ElementId(j as u32)));
            }
        }
    }
    covers.sort_unstable();
    covers
}

/// Used by constructions that compute every table directly.
#[allow(clippy::too_many_arguments)]
pub(crate) fn from_tables(
    size: usize,
    leq: Vec<bool>,
    meet: Vec<u32>,
    join: Vec<u32>,
    imp: Vec<u32>,
    bottom: usize,
    top: usize,
    name: Option<String>,
) -> HeytingAlgebra {
    let neg: Vec<u32> = (0..size).map(|a| imp[a * size + bottom]).collect();
    let covers = covers_of_leq(size, &leq);
    HeytingAlgebra {
        size,
        leq,
        covers,
        meet,
        join,
        imp,
        neg,
        bottom: ElementId(bottom as u32),
        top: ElementId(top as u32),
        name,
    }
}

/// Coalesced ordinal sum: stacks `b` on top of `a`, identifying the top of
/// `a` with the bottom of `b`.
///
/// Elements of `a` keep their ids; the non-bottom elements of `b` follow in
/// their own order.
pub fn sum(a: &HeytingAlgebra, b: &HeytingAlgebra) -> HeytingAlgebra {
    let na = a.size;
    let size = na + b.size - 1;
    // position of a b-element in the result
    let bpos = |y: usize| -> usize {
        let yb = ElementId(y as u32);
        if yb == b.bottom {
            a.top.index()
        } else {
            let skipped = if y > b.bottom.index() { 1 } else { 0 };
            na + y - skipped
        }
    };
    let mut leq = vec![false; size * size];
    for i in 0..na {
        for j in 0..na {
            if a.leq[i * na + j] {
                leq[i * size + j] = true;
            }
        }
    }
    for i in 0..b.size {
        for j in 0..b.size {
            if b.leq[i * b.size + j] {
                leq[bpos(i) * size + bpos(j)] = true;
            }
        }
    }
    for i in 0..na {
        for j in 0..b.size {
            // everything in the lower part sits below everything upstairs
            leq[i * size + bpos(j)] = true;
        }
    }
    let name = match (a.name(), b.name()) {
        (Some(x), Some(y)) => Some(format!("{x}+{y}")),
        _ => None,
    };
    from_leq(size, leq, name).expect("sum of valid algebras is a valid algebra")
}

/// Sum of a whole sequence, left to right.
pub fn sum_all(parts: &[HeytingAlgebra]) -> HeytingAlgebra {
    assert!(!parts.is_empty(), "sum_all needs at least one part");
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = sum(&acc, p);
    }
    acc
}

/// Direct product with componentwise operations, capped at
/// [`DEFAULT_PRODUCT_CAP`] elements. Element `(x, y)` has id `x * |b| + y`.
pub fn product(a: &HeytingAlgebra, b: &HeytingAlgebra) -> Result<HeytingAlgebra, LatticeError> {
    product_with_cap(a, b, DEFAULT_PRODUCT_CAP)
}

pub fn product_with_cap(
    a: &HeytingAlgebra,
    b: &HeytingAlgebra,
    cap: usize,
) -> Result<HeytingAlgebra, LatticeError> {
    let size = a.size * b.size;
    if size > cap {
        return Err(LatticeError::SizeLimitExceeded { requested: size, cap });
    }
    let nb = b.size;
    let pair = |x: usize, y: usize| x * nb + y;
    let mut leq = vec![false; size * size];
    let mut meet = vec![0u32; size * size];
    let mut join = vec![0u32; size * size];
    let mut imp = vec![0u32; size * size];
    for x1 in 0..a.size {
        for y1 in 0..nb {
            let p = pair(x1, y1);
            for x2 in 0..a.size {
                for y2 in 0..nb {
                    let q = pair(x2, y2);
                    leq[p * size + q] = a.leq[x1 * a.size + x2] && b.leq[y1 * nb + y2];
                    meet[p * size + q] = pair(
                        a.meet[x1 * a.size + x2] as usize,
                        b.meet[y1 * nb + y2] as usize,
                    ) as u32;
                    join[p * size + q] = pair(
                        a.join[x1 * a.size + x2] as usize,
                        b.join[y1 * nb + y2] as usize,
                    ) as u32;
                    imp[p * size + q] = pair(
                        a.imp[x1 * a.size + x2] as usize,
                        b.imp[y1 * nb + y2] as usize,
                    ) as u32;
                }
            }
        }
    }
    let bottom = pair(a.bottom.index(), b.bottom.index());
    let top = pair(a.top.index(), b.top.index());
    let name = match (a.name(), b.name()) {
        (Some(x), Some(y)) => Some(format!("{x}x{y}")),
        _ => None,
    };
    Ok(from_tables(size, leq, meet, join, imp, bottom, top, name))
}

/// The two projection surjections of a product built by [`product`].
pub fn product_projections(
    prod: &HeytingAlgebra,
    a: &HeytingAlgebra,
    b: &HeytingAlgebra,
) -> (AlgebraMap, AlgebraMap) {
    assert_eq!(prod.size, a.size * b.size);
    let left: Vec<ElementId> =
        (0..prod.size).map(|p| ElementId((p / b.size) as u32)).collect();
    let right: Vec<ElementId> =
        (0..prod.size).map(|p| ElementId((p % b.size) as u32)).collect();
    (
        AlgebraMap::new(prod.clone(), a.clone(), left, MapKind::Surjection),
        AlgebraMap::new(prod.clone(), b.clone(), right, MapKind::Surjection),
    )
}

/// Id of the pair `(x, y)` inside a product built by [`product`].
pub fn pair_id(b_size: usize, x: ElementId, y: ElementId) -> ElementId {
    ElementId((x.index() * b_size + y.index()) as u32)
}

/// Searches for an isomorphism; `None` is an exhaustive-search proof that
/// none exists. Deterministic for fixed inputs.
pub fn is_isomorphic(a: &HeytingAlgebra, b: &HeytingAlgebra) -> Option<AlgebraMap> {
    crate::search::isomorphism(a, b)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapKind {
    Embedding,
    Surjection,
    Isomorphism,
}

/// A total map between two algebras, tagged with what it preserves.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    source: HeytingAlgebra,
    target: HeytingAlgebra,
    assign: Vec<ElementId>,
    kind: MapKind,
}

impl AlgebraMap {
    pub fn new(
        source: HeytingAlgebra,
        target: HeytingAlgebra,
        assign: Vec<ElementId>,
        kind: MapKind,
    ) -> Self {
        debug_assert_eq!(source.size(), assign.len());
        let map = AlgebraMap { source, target, assign, kind };
        debug_assert_eq!(map.verify(), Ok(()), "constructed map must preserve structure");
        map
    }

    pub fn source(&self) -> &HeytingAlgebra {
        &self.source
    }

    pub fn target(&self) -> &HeytingAlgebra {
        &self.target
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    #[inline]
    pub fn apply(&self, x: ElementId) -> ElementId {
        self.assign[x.index()]
    }

    pub fn assignments(&self) -> &[ElementId] {
        &self.assign
    }

    /// Checks preservation of meet, join, implication and both bounds, plus
    /// the injectivity/surjectivity promised by the kind.
    pub fn verify(&self) -> Result<(), String> {
        let (s, t) = (&self.source, &self.target);
        if self.apply(s.bottom()) != t.bottom() || self.apply(s.top()) != t.top() {
            return Err("bounds not preserved".into());
        }
        for x in s.elements() {
            for y in s.elements() {
                let fx = self.apply(x);
                let fy = self.apply(y);
                if self.apply(s.meet(x, y)) != t.meet(fx, fy) {
                    return Err(format!("meet not preserved at ({x},{y})"));
                }
                if self.apply(s.join(x, y)) != t.join(fx, fy) {
                    return Err(format!("join not preserved at ({x},{y})"));
                }
                if self.apply(s.imp(x, y)) != t.imp(fx, fy) {
                    return Err(format!("implication not preserved at ({x},{y})"));
                }
            }
        }
        let injective = {
            let mut seen = vec![false; t.size()];
            self.assign.iter().all(|&v| {
                let fresh = !seen[v.index()];
                seen[v.index()] = true;
                fresh
            })
        };
        let onto = {
            let mut seen = vec![false; t.size()];
            for &v in &self.assign {
                seen[v.index()] = true;
            }
            seen.iter().all(|&s| s)
        };
        match self.kind {
            MapKind::Embedding if !injective => Err("embedding is not injective".into()),
            MapKind::Surjection if !onto => Err("surjection is not onto".into()),
            MapKind::Isomorphism if !(injective && onto) => {
                Err("isomorphism is not bijective".into())
            }
            _ => Ok(()),
        }
    }
}
