//! The named algebras used throughout the crate, plus a brute-force corpus.
//!
//! `Z1..Z10` is the one-generated family; `P1..P5` are the five prohibited
//! algebras whose omission characterizes the primitive varieties; `P1*..P5*`
//! are their homomorphic preimages witnessing total non-projectivity. The
//! corpus enumerates, up to isomorphism, every finite Heyting algebra whose
//! join-irreducible poset has at most a given number of elements: these are
//! exactly the down-set lattices of small posets, and they serve as the
//! exhaustive oracle for the property suites.

use std::collections::HashSet;
use std::sync::OnceLock;

use thiserror::Error;

use crate::kernel::{
    self, from_covers, from_covers_traced, is_isomorphic, sum, ElementId, HeytingAlgebra,
};
use crate::morphisms;
use crate::structure;

/// Posets larger than this are refused by [`corpus`].
pub const MAX_POSET_SIZE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("{what} takes values in [{min}, {max}], got {got}")]
    OutOfRange { what: &'static str, got: usize, min: usize, max: usize },
    #[error("poset size {got} exceeds the corpus cap of {max}")]
    SizeLimitExceeded { got: usize, max: usize },
}

// ---------------------------------------------------------------------------
// transcribed Hasse diagrams
// ---------------------------------------------------------------------------

fn build(name: &str, size: usize, covers: &[(usize, usize)]) -> HeytingAlgebra {
    from_covers(size, covers)
        .unwrap_or_else(|e| panic!("catalog algebra {name} failed to build: {e}"))
        .with_name(name)
}

fn build_traced(
    name: &str,
    size: usize,
    covers: &[(usize, usize)],
) -> (HeytingAlgebra, Vec<ElementId>) {
    let (alg, trace) = from_covers_traced(size, covers)
        .unwrap_or_else(|e| panic!("catalog algebra {name} failed to build: {e}"));
    (alg.with_name(name), trace)
}

const Z6_COVERS: &[(usize, usize)] =
    &[(0, 1), (0, 2), (2, 3), (2, 4), (1, 3), (3, 5), (4, 5)];
const Z7_COVERS: &[(usize, usize)] =
    &[(0, 1), (0, 2), (2, 3), (2, 4), (1, 3), (3, 5), (4, 5), (5, 6)];
const Z8_COVERS: &[(usize, usize)] =
    &[(0, 1), (0, 2), (2, 3), (2, 4), (1, 3), (3, 5), (3, 6), (4, 6), (5, 7), (6, 7)];

/// The unique one-generated algebra with `n` elements, `1 <= n <= 10`.
///
/// `Z1..Z8` are stored as explicit cover lists; `Z9` and `Z10` are located by
/// the one-generated search over the corpus, which doubles as a check that
/// they exist and are unique at their size.
pub fn zn(n: usize) -> Result<HeytingAlgebra, CatalogError> {
    if !(1..=10).contains(&n) {
        return Err(CatalogError::OutOfRange { what: "zn", got: n, min: 1, max: 10 });
    }
    Ok(match n {
        1 => build("Z1", 1, &[]),
        2 => build("Z2", 2, &[(0, 1)]),
        3 => build("Z3", 3, &[(0, 1), (1, 2)]),
        4 => build("Z4", 4, &[(0, 1), (0, 2), (1, 3), (2, 3)]),
        5 => build("Z5", 5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]),
        6 => build("Z6", 6, Z6_COVERS),
        7 => build("Z7", 7, Z7_COVERS),
        8 => build("Z8", 8, Z8_COVERS),
        9 => one_generated_of_size(9).clone().with_name("Z9"),
        10 => one_generated_of_size(10).clone().with_name("Z10"),
        _ => unreachable!(),
    })
}

fn is_one_generated(a: &HeytingAlgebra) -> bool {
    a.size() == 1
        || a.elements().any(|x| structure::subuniverse(a, &[x]).len() == a.size())
}

fn one_generated_of_size(n: usize) -> &'static HeytingAlgebra {
    static Z9: OnceLock<HeytingAlgebra> = OnceLock::new();
    static Z10: OnceLock<HeytingAlgebra> = OnceLock::new();
    let cell = match n {
        9 => &Z9,
        10 => &Z10,
        _ => unreachable!(),
    };
    cell.get_or_init(|| {
        let hits: Vec<HeytingAlgebra> = corpus(5)
            .expect("5 is under the poset cap")
            .filter(|a| a.size() == n && is_one_generated(a))
            .collect();
        assert_eq!(
            hits.len(),
            1,
            "expected exactly one one-generated algebra with {n} elements"
        );
        hits.into_iter().next().unwrap()
    })
}

/// The two-element Boolean algebra.
pub fn two() -> HeytingAlgebra {
    build("2", 2, &[(0, 1)])
}

/// The Boolean algebra with `2^k` elements.
pub fn bool_cube(k: usize) -> HeytingAlgebra {
    let mut covers = Vec::new();
    for lo in 0usize..(1 << k) {
        for b in 0..k {
            if lo & (1 << b) == 0 {
                covers.push((lo, lo | (1 << b)));
            }
        }
    }
    build(&format!("B{k}"), 1 << k, &covers)
}

const P1_COVERS: &[(usize, usize)] =
    &[(0, 1), (0, 2), (2, 4), (2, 3), (1, 3), (3, 5), (4, 5), (5, 6)];
const P2_COVERS: &[(usize, usize)] =
    &[(0, 1), (1, 2), (1, 3), (3, 5), (3, 4), (2, 4), (4, 6), (5, 6), (6, 7)];
#[rustfmt::skip]
const P5_COVERS: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3),
    (1, 4), (1, 5), (2, 4), (2, 6), (3, 5), (3, 6),
    (4, 7), (4, 8), (5, 8), (6, 8), (6, 9),
    (7, 10), (8, 10), (8, 11), (9, 11),
    (10, 12), (11, 12), (12, 13),
];
/// The two atoms of `P5` that generate it, as drawn.
const P5_GENERATORS: (usize, usize) = (1, 3);

/// The prohibited algebra `Pi`, `1 <= i <= 5`.
///
/// `P1`, `P2` and `P5` are transcribed cover lists; `P3` and `P4` use the
/// closed forms `B3 + Z2` and `Z2 + B3 + Z2`, which are less error-prone
/// than coordinate transcription. Each entry carries verification checks,
/// run by [`entries`].
pub fn prohibited(i: usize) -> Result<HeytingAlgebra, CatalogError> {
    if !(1..=5).contains(&i) {
        return Err(CatalogError::OutOfRange { what: "prohibited", got: i, min: 1, max: 5 });
    }
    Ok(match i {
        1 => build("P1", 7, P1_COVERS),
        2 => build("P2", 8, P2_COVERS),
        3 => sum(&bool_cube(3), &two()).with_name("P3"),
        4 => sum(&two(), &sum(&bool_cube(3), &two())).with_name("P4"),
        5 => build("P5", 14, P5_COVERS),
        _ => unreachable!(),
    })
}

#[rustfmt::skip]
const P1S_COVERS: &[(usize, usize)] = &[
    (0, 1), (0, 2), (2, 3), (2, 4), (1, 3),
    (3, 5), (3, 6), (4, 6), (5, 7), (6, 7), (6, 8), (7, 9), (8, 9),
];
const P1S_WITNESSES: (usize, usize) = (5, 8);
#[rustfmt::skip]
const P2S_COVERS: &[(usize, usize)] = &[
    (0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (2, 4),
    (4, 6), (4, 7), (5, 7), (6, 8), (7, 8), (7, 9), (8, 10), (9, 10),
];
const P2S_WITNESSES: (usize, usize) = (6, 9);
#[rustfmt::skip]
const P3S_COVERS: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3),
    (1, 4), (1, 5), (2, 4), (2, 6), (3, 5), (3, 6),
    (4, 7), (5, 7), (5, 8), (6, 7),
    (7, 9), (7, 10), (8, 10), (9, 11), (10, 11),
];
const P3S_WITNESSES: (usize, usize) = (8, 9);
#[rustfmt::skip]
const P4S_COVERS: &[(usize, usize)] = &[
    (0, 1),
    (1, 2), (1, 3), (1, 4),
    (2, 5), (2, 6), (3, 5), (3, 7), (4, 6), (4, 7),
    (5, 8), (6, 8), (6, 9), (7, 8),
    (8, 10), (8, 11), (9, 11), (10, 12), (11, 12),
];
const P4S_WITNESSES: (usize, usize) = (9, 10);
#[rustfmt::skip]
const P5S_COVERS: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3),
    (1, 4), (1, 5), (2, 4), (2, 6), (3, 5), (3, 6),
    (4, 7), (4, 8), (5, 8), (5, 10), (6, 8), (6, 9),
    (7, 11), (8, 11), (8, 12), (8, 13), (9, 12), (10, 13),
    (11, 14), (11, 15), (12, 14), (12, 16), (13, 15), (13, 16),
    (14, 17), (15, 17), (16, 17), (16, 18), (17, 19), (18, 19),
];
const P5S_WITNESSES: (usize, usize) = (7, 18);

#[allow(clippy::type_complexity)]
fn star_data(i: usize) -> (&'static str, usize, &'static [(usize, usize)], (usize, usize)) {
    match i {
        1 => ("P1*", 10, P1S_COVERS, P1S_WITNESSES),
        2 => ("P2*", 11, P2S_COVERS, P2S_WITNESSES),
        3 => ("P3*", 12, P3S_COVERS, P3S_WITNESSES),
        4 => ("P4*", 13, P4S_COVERS, P4S_WITNESSES),
        5 => ("P5*", 20, P5S_COVERS, P5S_WITNESSES),
        _ => unreachable!(),
    }
}

/// The homomorphic preimage `Pi*` of the prohibited algebra `Pi`.
pub fn star(i: usize) -> Result<HeytingAlgebra, CatalogError> {
    if !(1..=5).contains(&i) {
        return Err(CatalogError::OutOfRange { what: "star", got: i, min: 1, max: 5 });
    }
    let (name, size, covers, _) = star_data(i);
    Ok(build_traced(name, size, covers).0)
}

/// The elements `(a, b)` of `Pi*` whose principal-filter congruences
/// intersect trivially: the quotient at `a` is `Z5` (`Z5'` for `i` 2 and 4),
/// the quotient at `b` is `Pi` itself.
pub fn star_witnesses(i: usize) -> Result<(ElementId, ElementId), CatalogError> {
    if !(1..=5).contains(&i) {
        return Err(CatalogError::OutOfRange { what: "star_witnesses", got: i, min: 1, max: 5 });
    }
    let (name, size, covers, (a, b)) = star_data(i);
    let (_, trace) = build_traced(name, size, covers);
    Ok((trace[a], trace[b]))
}

/// The `P5` generators `(a, b)` as element ids of [`prohibited`]`(5)`.
pub fn p5_generators() -> (ElementId, ElementId) {
    let (_, trace) = build_traced("P5", 14, P5_COVERS);
    (trace[P5_GENERATORS.0], trace[P5_GENERATORS.1])
}

/// The six-element algebra `Z5'`: a pendant bottom under the diamond-plus-top.
pub fn z5_prime() -> HeytingAlgebra {
    build("Z5'", 6, &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)])
}

/// Looks an algebra up by its command-line name.
pub fn by_name(name: &str) -> Option<HeytingAlgebra> {
    match name {
        "2" => Some(two()),
        "B3" => Some(bool_cube(3)),
        "Z5'" => Some(z5_prime()),
        _ => {
            if let Some(rest) = name.strip_prefix('Z') {
                if let Ok(n) = rest.parse::<usize>() {
                    return zn(n).ok();
                }
            }
            if let Some(rest) = name.strip_prefix('P') {
                if let Some(idx) = rest.strip_suffix('*') {
                    if let Ok(i) = idx.parse::<usize>() {
                        return star(i).ok();
                    }
                } else if let Ok(i) = rest.parse::<usize>() {
                    return prohibited(i).ok();
                }
            }
            None
        }
    }
}

/// Every name [`by_name`] accepts.
pub fn names() -> Vec<&'static str> {
    vec![
        "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "2", "B3", "Z5'", "P1",
        "P2", "P3", "P4", "P5", "P1*", "P2*", "P3*", "P4*", "P5*",
    ]
}

// ---------------------------------------------------------------------------
// corpus: down-set lattices of all small posets
// ---------------------------------------------------------------------------

/// A poset on `n <= 8` points; `below[i]` is the bitmask of points strictly
/// below `i`.
#[derive(Clone, Debug)]
struct Poset {
    n: usize,
    below: Vec<u16>,
}

impl Poset {
    /// Canonical certificate: the minimal strict-order bitstring over all
    /// relabelings compatible with the invariant classes.
    fn certificate(&self) -> u64 {
        let n = self.n;
        if n == 0 {
            return 0;
        }
        let above: Vec<u16> = (0..n)
            .map(|i| {
                let mut m = 0u16;
                for j in 0..n {
                    if self.below[j] & (1 << i) != 0 {
                        m |= 1 << j;
                    }
                }
                m
            })
            .collect();
        // iterated invariant refinement
        let mut code: Vec<u64> = (0..n)
            .map(|i| {
                ((self.below[i].count_ones() as u64) << 8) | above[i].count_ones() as u64
            })
            .collect();
        for _ in 0..3 {
            let snapshot = code.clone();
            for i in 0..n {
                let mut lo: Vec<u64> = (0..n)
                    .filter(|&j| self.below[i] & (1 << j) != 0)
                    .map(|j| snapshot[j])
                    .collect();
                let mut hi: Vec<u64> = (0..n)
                    .filter(|&j| above[i] & (1 << j) != 0)
                    .map(|j| snapshot[j])
                    .collect();
                lo.sort_unstable();
                hi.sort_unstable();
                let mut acc = snapshot[i];
                for v in lo {
                    acc = acc.wrapping_mul(0x100000001b3).wrapping_add(v ^ 0x55);
                }
                for v in hi {
                    acc = acc.wrapping_mul(0x100000001b3).wrapping_add(v ^ 0xaa);
                }
                code[i] = acc;
            }
        }
        // group elements into classes sorted by code
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (code[i], i));
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &i in &order {
            match classes.last() {
                Some(c) if code[c[0]] == code[i] => classes.last_mut().unwrap().push(i),
                _ => classes.push(vec![i]),
            }
        }
        // enumerate class-respecting relabelings, take the minimal bitstring
        let mut best = u64::MAX;
        let mut perm = vec![usize::MAX; n]; // perm[old] = new
        fn assign(
            classes: &[Vec<usize>],
            ci: usize,
            offset: usize,
            taken: &mut Vec<bool>,
            perm: &mut Vec<usize>,
            poset: &Poset,
            best: &mut u64,
        ) {
            if ci == classes.len() {
                let n = poset.n;
                let mut bits = 0u64;
                for i in 0..n {
                    for j in 0..n {
                        if poset.below[i] & (1 << j) != 0 {
                            // j < i in the poset
                            bits |= 1 << (perm[j] * n + perm[i]);
                        }
                    }
                }
                if bits < *best {
                    *best = bits;
                }
                return;
            }
            let class = &classes[ci];
            // permutations of this class over positions offset..offset+len
            #[allow(clippy::too_many_arguments)]
            fn rec(
                class: &[usize],
                k: usize,
                offset: usize,
                taken: &mut Vec<bool>,
                perm: &mut Vec<usize>,
                classes: &[Vec<usize>],
                ci: usize,
                poset: &Poset,
                best: &mut u64,
            ) {
                if k == class.len() {
                    assign(classes, ci + 1, offset + class.len(), taken, perm, poset, best);
                    return;
                }
                for slot in 0..class.len() {
                    if !taken[offset + slot] {
                        taken[offset + slot] = true;
                        perm[class[k]] = offset + slot;
                        rec(class, k + 1, offset, taken, perm, classes, ci, poset, best);
                        taken[offset + slot] = false;
                    }
                }
            }
            rec(class, 0, offset, taken, perm, classes, ci, poset, best);
        }
        let mut taken = vec![false; n];
        assign(&classes, 0, 0, &mut taken, &mut perm, self, &mut best);
        best
    }

    /// The lattice of down-sets, masks sorted by (popcount, value).
    fn downset_lattice(&self, name: String) -> HeytingAlgebra {
        let n = self.n;
        let mut downsets: Vec<u16> = (0u32..(1 << n))
            .map(|m| m as u16)
            .filter(|&m| {
                (0..n).all(|i| m & (1 << i) == 0 || self.below[i] & !m == 0)
            })
            .collect();
        downsets.sort_by_key(|&m| (m.count_ones(), m));
        let k = downsets.len();
        let mut rank = std::collections::HashMap::new();
        for (i, &m) in downsets.iter().enumerate() {
            rank.insert(m, i);
        }
        // down_incl[i] = i together with everything below it
        let down_incl: Vec<u16> = (0..n).map(|i| self.below[i] | (1 << i)).collect();
        let mut leq = vec![false; k * k];
        let mut meet = vec![0u32; k * k];
        let mut join = vec![0u32; k * k];
        let mut imp = vec![0u32; k * k];
        for (i, &a) in downsets.iter().enumerate() {
            for (j, &b) in downsets.iter().enumerate() {
                leq[i * k + j] = a & !b == 0;
                meet[i * k + j] = rank[&(a & b)] as u32;
                join[i * k + j] = rank[&(a | b)] as u32;
                // a -> b = the points whose inclusive down-set meets a only
                // inside b; this is the largest down-set c with c /\ a <= b
                let mut c = 0u16;
                for (p, &di) in down_incl.iter().enumerate() {
                    if di & a & !b == 0 {
                        c |= 1 << p;
                    }
                }
                imp[i * k + j] = rank[&c] as u32;
            }
        }
        let bottom = rank[&0];
        let top = rank[&(((1u32 << n) - 1) as u16)];
        kernel::from_tables(k, leq, meet, join, imp, bottom, top, Some(name))
    }
}

/// All posets on `n` labeled points whose identity labeling is a linear
/// extension; every isomorphism class appears at least once.
fn naturally_labeled_posets(n: usize) -> Vec<Poset> {
    let mut out = Vec::new();
    let mut below: Vec<u16> = Vec::new();
    fn rec(n: usize, below: &mut Vec<u16>, out: &mut Vec<Poset>) {
        let i = below.len();
        if i == n {
            out.push(Poset { n, below: below.clone() });
            return;
        }
        // the new element is maximal; its strict down-set may be any
        // down-closed subset of the existing elements
        for s in 0u32..(1 << i) {
            let s = s as u16;
            if (0..i).all(|j| s & (1 << j) == 0 || below[j] & !s == 0) {
                below.push(s);
                rec(n, below, out);
                below.pop();
            }
        }
    }
    rec(n, &mut below, &mut out);
    out
}

/// Streams, up to isomorphism, the down-set lattice of every poset with at
/// most `max_poset_size` elements: exactly the finite Heyting algebras whose
/// join-irreducible poset is that small. Deterministic order, no two items
/// isomorphic.
pub fn corpus(max_poset_size: usize) -> Result<CorpusIter, CatalogError> {
    if max_poset_size > MAX_POSET_SIZE {
        return Err(CatalogError::SizeLimitExceeded {
            got: max_poset_size,
            max: MAX_POSET_SIZE,
        });
    }
    Ok(CorpusIter { max: max_poset_size, stage: 0, pending: Vec::new(), emitted: 0 })
}

pub struct CorpusIter {
    max: usize,
    stage: usize,
    pending: Vec<(usize, Poset)>,
    emitted: usize,
}

impl Iterator for CorpusIter {
    type Item = HeytingAlgebra;

    fn next(&mut self) -> Option<HeytingAlgebra> {
        loop {
            if let Some((idx, poset)) = self.pending.pop() {
                let name = format!("C{}.{}", poset.n, idx);
                self.emitted += 1;
                return Some(poset.downset_lattice(name));
            }
            if self.stage > self.max {
                return None;
            }
            let mut seen: HashSet<u64> = HashSet::new();
            let mut classes: Vec<(u64, Poset)> = Vec::new();
            for p in naturally_labeled_posets(self.stage) {
                let cert = p.certificate();
                if seen.insert(cert) {
                    classes.push((cert, p));
                }
            }
            classes.sort_by_key(|&(c, _)| c);
            // pending is a stack, so push in reverse to emit in cert order
            self.pending = classes
                .into_iter()
                .enumerate()
                .map(|(i, (_, p))| (i, p))
                .rev()
                .collect();
            self.stage += 1;
        }
    }
}

/// Number of isomorphism classes of posets with exactly `n` points, for the
/// sizes the corpus supports.
pub fn poset_class_count(n: usize) -> Option<usize> {
    // A000112
    [1, 1, 2, 5, 16, 63, 318, 2045, 16999].get(n).copied()
}

// ---------------------------------------------------------------------------
// catalog entries with load-time verification
// ---------------------------------------------------------------------------

/// One named algebra with its provenance and verification results.
pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: HeytingAlgebra,
    pub provenance: &'static str,
    pub verification: Vec<Check>,
}

/// One verification check, already evaluated.
pub struct Check {
    pub label: String,
    pub passed: bool,
}

fn check(label: impl Into<String>, passed: bool) -> Check {
    Check { label: label.into(), passed }
}

fn zn_checks(n: usize, a: &HeytingAlgebra) -> Vec<Check> {
    let mut v = vec![
        check(format!("has {n} elements"), a.size() == n),
        check("tables satisfy the algebra invariants", a.verify_invariants().is_ok()),
        check("one-generated", is_one_generated(a)),
    ];
    if n == 7 {
        v.push(check(
            "isomorphic to Z6 + Z2",
            is_isomorphic(a, &sum(&zn(6).unwrap(), &two())).is_some(),
        ));
    }
    v
}

fn prohibited_checks(i: usize, a: &HeytingAlgebra) -> Vec<Check> {
    let mut v = vec![check(
        "tables satisfy the algebra invariants",
        a.verify_invariants().is_ok(),
    )];
    match i {
        1 => v.push(check("isomorphic to Z7", is_isomorphic(a, &zn(7).unwrap()).is_some())),
        2 => v.push(check(
            "isomorphic to 2 + Z7",
            is_isomorphic(a, &sum(&two(), &zn(7).unwrap())).is_some(),
        )),
        3 => {
            v.push(check("9 elements", a.size() == 9));
            v.push(check("subdirectly irreducible", structure::is_si(a) == Ok(true)));
        }
        4 => {
            v.push(check("10 elements", a.size() == 10));
            v.push(check("subdirectly irreducible", structure::is_si(a) == Ok(true)));
        }
        5 => {
            v.push(check("14 elements", a.size() == 14));
            v.push(check("subdirectly irreducible", structure::is_si(a) == Ok(true)));
            let regulars = a.elements().filter(|&x| a.is_regular(x)).count();
            v.push(check("exactly eight regular elements", regulars == 8));
            let (ga, gb) = p5_generators();
            let both_atoms = a.lower_covers(ga) == vec![a.bottom()]
                && a.lower_covers(gb) == vec![a.bottom()];
            v.push(check("labeled generators are atoms", both_atoms));
            v.push(check(
                "generated by the labeled atom pair",
                structure::subuniverse(a, &[ga, gb]).len() == a.size(),
            ));
        }
        _ => unreachable!(),
    }
    v
}

fn star_checks(i: usize, a: &HeytingAlgebra) -> Vec<Check> {
    let p = prohibited(i).unwrap();
    let small_factor = match i {
        2 | 4 => z5_prime(),
        _ => zn(5).unwrap(),
    };
    let (wa, wb) = star_witnesses(i).unwrap();
    let mut v = vec![
        check("tables satisfy the algebra invariants", a.verify_invariants().is_ok()),
        check(
            format!("quotient at witness a is {}", small_factor.name().unwrap()),
            is_isomorphic(&structure::ideal_algebra(a, wa), &small_factor).is_some(),
        ),
        check(
            format!("quotient at witness b is P{i}"),
            is_isomorphic(&structure::ideal_algebra(a, wb), &p).is_some(),
        ),
        check(
            format!("P{i} does not embed"),
            morphisms::embeds(&p, a).is_none(),
        ),
        check(
            "witness filter congruences intersect trivially",
            morphisms::subdirect_witness(a, wa, wb),
        ),
    ];
    if i == 5 {
        let regulars = a.elements().filter(|&x| a.is_regular(x)).count();
        v.push(check("exactly eight regular elements", regulars == 8));
    }
    v
}

/// Builds and verifies the full catalog. Every entry must pass all its
/// checks; [`verify_all`] reports any that do not.
pub fn entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        let mut out = Vec::new();
        let zn_provenance: [&'static str; 10] = [
            "trivial algebra",
            "two-element chain",
            "three-element chain",
            "transcribed diagram of the one-generated family",
            "transcribed diagram of the one-generated family",
            "transcribed diagram of the one-generated family",
            "transcribed diagram of the one-generated family",
            "transcribed diagram of the one-generated family",
            "located by the one-generated corpus search",
            "located by the one-generated corpus search",
        ];
        for n in 1..=10 {
            let a = zn(n).unwrap();
            let verification = zn_checks(n, &a);
            out.push(CatalogEntry {
                name: names_zn(n),
                algebra: a,
                provenance: zn_provenance[n - 1],
                verification,
            });
        }
        let a = two();
        out.push(CatalogEntry {
            name: "2",
            provenance: "two-element Boolean algebra",
            verification: vec![check(
                "isomorphic to Z2",
                is_isomorphic(&a, &zn(2).unwrap()).is_some(),
            )],
            algebra: a,
        });
        let a = bool_cube(3);
        out.push(CatalogEntry {
            name: "B3",
            provenance: "eight-element Boolean cube",
            verification: vec![
                check("8 elements", a.size() == 8),
                check("every element regular", a.elements().all(|x| a.is_regular(x))),
            ],
            algebra: a,
        });
        let a = z5_prime();
        out.push(CatalogEntry {
            name: "Z5'",
            provenance: "diamond-plus-top with a pendant bottom",
            verification: vec![check(
                "isomorphic to 2 + Z5",
                is_isomorphic(&a, &sum(&two(), &zn(5).unwrap())).is_some(),
            )],
            algebra: a,
        });
        let p_provenance: [&'static str; 5] = [
            "transcribed Hasse diagram",
            "transcribed Hasse diagram",
            "closed form: B3 + Z2",
            "closed form: Z2 + B3 + Z2",
            "transcribed Hasse diagram",
        ];
        for i in 1..=5 {
            let a = prohibited(i).unwrap();
            let verification = prohibited_checks(i, &a);
            out.push(CatalogEntry {
                name: names_p(i),
                algebra: a,
                provenance: p_provenance[i - 1],
                verification,
            });
        }
        for i in 1..=5 {
            let a = star(i).unwrap();
            let verification = star_checks(i, &a);
            out.push(CatalogEntry {
                name: names_star(i),
                algebra: a,
                provenance: "transcribed Hasse diagram of the homomorphic preimage",
                verification,
            });
        }
        out
    })
}

fn names_zn(n: usize) -> &'static str {
    ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10"][n - 1]
}
fn names_p(i: usize) -> &'static str {
    ["P1", "P2", "P3", "P4", "P5"][i - 1]
}
fn names_star(i: usize) -> &'static str {
    ["P1*", "P2*", "P3*", "P4*", "P5*"][i - 1]
}

/// Every failed check across the catalog, as `"name: label"` lines.
pub fn verify_all() -> Result<(), Vec<String>> {
    let failures: Vec<String> = entries()
        .iter()
        .flat_map(|e| {
            e.verification
                .iter()
                .filter(|c| !c.passed)
                .map(move |c| format!("{}: {}", e.name, c.label))
        })
        .collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}
