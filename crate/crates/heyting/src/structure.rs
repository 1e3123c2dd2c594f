//! Structural queries on one algebra: element classification, the strong
//! order, dense elements, filter/ideal/interval algebras, generated
//! subalgebras, subdirect irreducibility, and nodeless decompositions.

use thiserror::Error;

use crate::kernel::{self, ElementId, HeytingAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("operation requires a nontrivial algebra")]
    TrivialAlgebra,
    #[error("interval endpoints {lo} and {hi} are not comparable in that order")]
    NotComparable { lo: ElementId, hi: ElementId },
}

/// Per-element classification flags.
///
/// Dense means `~a = 0`, regular means `~~a = a`, ordinary means neither.
/// A node is comparable with every element; a coatom is covered by the top.
#[derive(Clone, Debug)]
pub struct ElementClass {
    dense: Vec<bool>,
    regular: Vec<bool>,
    ordinary: Vec<bool>,
    coatom: Vec<bool>,
    node: Vec<bool>,
}

impl ElementClass {
    pub fn is_dense(&self, x: ElementId) -> bool {
        self.dense[x.index()]
    }
    pub fn is_regular(&self, x: ElementId) -> bool {
        self.regular[x.index()]
    }
    pub fn is_ordinary(&self, x: ElementId) -> bool {
        self.ordinary[x.index()]
    }
    pub fn is_coatom(&self, x: ElementId) -> bool {
        self.coatom[x.index()]
    }
    pub fn is_node(&self, x: ElementId) -> bool {
        self.node[x.index()]
    }

    fn select(v: &[bool]) -> Vec<ElementId> {
        v.iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(i, _)| ElementId(i as u32))
            .collect()
    }

    pub fn dense_elements(&self) -> Vec<ElementId> {
        Self::select(&self.dense)
    }
    pub fn regular_elements(&self) -> Vec<ElementId> {
        Self::select(&self.regular)
    }
    pub fn ordinary_elements(&self) -> Vec<ElementId> {
        Self::select(&self.ordinary)
    }
    pub fn coatoms(&self) -> Vec<ElementId> {
        Self::select(&self.coatom)
    }
    pub fn nodes(&self) -> Vec<ElementId> {
        Self::select(&self.node)
    }
}

pub fn classify(a: &HeytingAlgebra) -> ElementClass {
    let dense: Vec<bool> = a.elements().map(|x| a.is_dense(x)).collect();
    let regular: Vec<bool> = a.elements().map(|x| a.is_regular(x)).collect();
    let ordinary: Vec<bool> =
        a.elements().map(|x| !a.is_dense(x) && !a.is_regular(x)).collect();
    let coatom: Vec<bool> = a.elements().map(|x| a.is_coatom(x)).collect();
    let node: Vec<bool> = a
        .elements()
        .map(|x| a.elements().all(|y| a.comparable(x, y)))
        .collect();
    ElementClass { dense, regular, ordinary, coatom, node }
}

/// `a << b`: `a <= b` and `b -> a = a`.
pub fn strongly_below(alg: &HeytingAlgebra, a: ElementId, b: ElementId) -> bool {
    alg.leq(a, b) && alg.imp(b, a) == a
}

/// The minimum of the dense elements, which equals the meet of `x \/ ~x`
/// over all `x`.
pub fn smallest_dense(a: &HeytingAlgebra) -> Result<ElementId, StructureError> {
    if a.is_trivial() {
        return Err(StructureError::TrivialAlgebra);
    }
    let mut d = a.top();
    for x in a.elements() {
        if a.is_dense(x) {
            d = a.meet(d, x);
        }
    }
    debug_assert!(a.is_dense(d), "dense elements of a finite algebra form a filter");
    Ok(d)
}

/// All nodes in ascending order. Nodes are pairwise comparable, so the
/// ascending order is total; this is asserted, not assumed.
pub fn nodes(a: &HeytingAlgebra) -> Vec<ElementId> {
    let mut ns: Vec<ElementId> = a
        .elements()
        .filter(|&x| a.elements().all(|y| a.comparable(x, y)))
        .collect();
    ns.sort_by(|&x, &y| {
        use std::cmp::Ordering;
        if x == y {
            Ordering::Equal
        } else if a.leq(x, y) {
            Ordering::Less
        } else {
            assert!(a.leq(y, x), "nodes must form a chain");
            Ordering::Greater
        }
    });
    ns
}

pub fn coatoms(a: &HeytingAlgebra) -> Vec<ElementId> {
    a.elements().filter(|&x| a.is_coatom(x)).collect()
}

/// Builds an algebra on the listed elements of `a` (which must be closed
/// under meet and join), with the given implication rule.
fn induced_algebra(
    a: &HeytingAlgebra,
    universe: Vec<ElementId>,
    imp_of: impl Fn(ElementId, ElementId) -> ElementId,
) -> HeytingAlgebra {
    let k = universe.len();
    let mut pos = vec![usize::MAX; a.size()];
    for (i, &x) in universe.iter().enumerate() {
        pos[x.index()] = i;
    }
    let rank = |x: ElementId| -> usize {
        debug_assert_ne!(pos[x.index()], usize::MAX, "universe not closed");
        pos[x.index()]
    };
    let mut leq = vec![false; k * k];
    let mut meet = vec![0u32; k * k];
    let mut join = vec![0u32; k * k];
    let mut imp = vec![0u32; k * k];
    for (i, &x) in universe.iter().enumerate() {
        for (j, &y) in universe.iter().enumerate() {
            leq[i * k + j] = a.leq(x, y);
            meet[i * k + j] = rank(a.meet(x, y)) as u32;
            join[i * k + j] = rank(a.join(x, y)) as u32;
            imp[i * k + j] = rank(imp_of(x, y)) as u32;
        }
    }
    let bottom = (0..k).find(|&i| (0..k).all(|j| leq[i * k + j])).expect("bounded");
    let top = (0..k).find(|&i| (0..k).all(|j| leq[j * k + i])).expect("bounded");
    let alg = kernel::from_tables(k, leq, meet, join, imp, bottom, top, None);
    debug_assert_eq!(alg.verify_invariants(), Ok(()));
    alg
}

/// The principal filter of `e` as an algebra. Meet, join and implication all
/// restrict; the bottom becomes `e`.
pub fn filter_algebra(a: &HeytingAlgebra, e: ElementId) -> HeytingAlgebra {
    let universe: Vec<ElementId> = a.elements().filter(|&x| a.leq(e, x)).collect();
    induced_algebra(a, universe, |x, y| a.imp(x, y))
}

/// The principal ideal of `e` as an algebra, isomorphic to the quotient by
/// the filter of `e`. Implication is relativized: `x -> y` becomes
/// `(x -> y) /\ e`.
pub fn ideal_algebra(a: &HeytingAlgebra, e: ElementId) -> HeytingAlgebra {
    let universe: Vec<ElementId> = a.elements().filter(|&x| a.leq(x, e)).collect();
    induced_algebra(a, universe, |x, y| a.meet(a.imp(x, y), e))
}

/// Ascending element list of the principal ideal of `e`; the element order
/// used by [`ideal_algebra`].
pub fn ideal_universe(a: &HeytingAlgebra, e: ElementId) -> Vec<ElementId> {
    a.elements().filter(|&x| a.leq(x, e)).collect()
}

/// The interval `[lo, hi]` as an algebra.
pub fn interval_algebra(
    a: &HeytingAlgebra,
    lo: ElementId,
    hi: ElementId,
) -> Result<HeytingAlgebra, StructureError> {
    if !a.leq(lo, hi) {
        return Err(StructureError::NotComparable { lo, hi });
    }
    let universe: Vec<ElementId> =
        a.elements().filter(|&x| a.leq(lo, x) && a.leq(x, hi)).collect();
    Ok(induced_algebra(a, universe, |x, y| a.meet(a.imp(x, y), hi)))
}

/// The least subset containing `seed`, bottom and top that is closed under
/// meet, join and implication, in ascending id order.
pub fn subuniverse(a: &HeytingAlgebra, seed: &[ElementId]) -> Vec<ElementId> {
    let n = a.size();
    let mut member = vec![false; n];
    member[a.bottom().index()] = true;
    member[a.top().index()] = true;
    let mut worklist: Vec<ElementId> = vec![a.bottom(), a.top()];
    for &s in seed {
        if !member[s.index()] {
            member[s.index()] = true;
            worklist.push(s);
        }
    }
    let mut settled: Vec<ElementId> = Vec::new();
    while let Some(x) = worklist.pop() {
        // pair the new element against everything already in, itself included
        for &u in &settled {
            for v in [
                a.meet(x, u),
                a.join(x, u),
                a.imp(x, u),
                a.imp(u, x),
            ] {
                if !member[v.index()] {
                    member[v.index()] = true;
                    worklist.push(v);
                }
            }
        }
        let self_imp = a.imp(x, x);
        if !member[self_imp.index()] {
            member[self_imp.index()] = true;
            worklist.push(self_imp);
        }
        settled.push(x);
    }
    (0..n).filter(|&i| member[i]).map(|i| ElementId(i as u32)).collect()
}

/// The subalgebra generated by `seed`, with its induced structure.
pub fn generated_subalgebra(a: &HeytingAlgebra, seed: &[ElementId]) -> HeytingAlgebra {
    let universe = subuniverse(a, seed);
    induced_algebra(a, universe, |x, y| a.imp(x, y))
}

/// Subdirect irreducibility: a finite nontrivial algebra is s.i. exactly
/// when it has a unique coatom.
pub fn is_si(a: &HeytingAlgebra) -> Result<bool, StructureError> {
    if a.is_trivial() {
        return Err(StructureError::TrivialAlgebra);
    }
    Ok(coatoms(a).len() == 1)
}

/// A nodeless decomposition: the input is the coalesced sum of the listed
/// components, junctions at the interior nodes.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub components: Vec<HeytingAlgebra>,
    /// The interior nodes where consecutive components are glued, ascending;
    /// empty when the algebra is itself nodeless.
    pub junction_nodes: Vec<ElementId>,
}

/// Splits the algebra at its nodes into nodeless nontrivial components.
/// The component count is one less than the number of nodes.
pub fn nodeless_decomposition(a: &HeytingAlgebra) -> Result<Decomposition, StructureError> {
    if a.is_trivial() {
        return Err(StructureError::TrivialAlgebra);
    }
    let ns = nodes(a);
    let mut components = Vec::new();
    for w in ns.windows(2) {
        let comp = interval_algebra(a, w[0], w[1]).expect("consecutive nodes are comparable");
        debug_assert!(comp.size() > 1);
        debug_assert!(
            nodes(&comp).len() == 2,
            "components of a nodeless decomposition are nodeless"
        );
        components.push(comp);
    }
    let junction_nodes = ns[1..ns.len() - 1].to_vec();
    Ok(Decomposition { components, junction_nodes })
}
