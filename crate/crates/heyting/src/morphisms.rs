//! Embeddings, principal-filter quotients, the generated-variety membership
//! test, subdirect-product witnesses, and total-non-projectivity
//! certificates.

use crate::kernel::{AlgebraMap, ElementId, HeytingAlgebra, MapKind};
use crate::search;
use crate::structure;

/// Searches for an embedding of `a` into `b`: an injective map preserving
/// meet, join, implication and both bounds. The search is exhaustive, so
/// `None` is a proof that no embedding exists.
pub fn embeds(a: &HeytingAlgebra, b: &HeytingAlgebra) -> Option<AlgebraMap> {
    search::embedding(a, b)
}

/// A quotient of `base` by the principal filter of `generator`, realized on
/// the principal ideal, together with the projection.
#[derive(Clone, Debug)]
pub struct FilterQuotient {
    pub generator: ElementId,
    pub quotient: HeytingAlgebra,
    /// The surjection `x -> x /\ generator`; its source is the base algebra.
    pub projection: AlgebraMap,
}

impl FilterQuotient {
    pub fn base(&self) -> &HeytingAlgebra {
        self.projection.source()
    }
}

fn filter_quotient(b: &HeytingAlgebra, g: ElementId) -> FilterQuotient {
    let quotient = structure::ideal_algebra(b, g);
    let universe = structure::ideal_universe(b, g);
    let mut rank = vec![u32::MAX; b.size()];
    for (i, &x) in universe.iter().enumerate() {
        rank[x.index()] = i as u32;
    }
    let assign: Vec<ElementId> = b
        .elements()
        .map(|x| ElementId(rank[b.meet(x, g).index()]))
        .collect();
    let projection = AlgebraMap::new(b.clone(), quotient.clone(), assign, MapKind::Surjection);
    FilterQuotient { generator: g, quotient, projection }
}

/// All homomorphic images of `b`: one quotient per element, since every
/// congruence of a finite Heyting algebra is the congruence of a principal
/// filter. The quotient at the top is `b` itself; at the bottom it is the
/// trivial algebra.
pub fn homomorphic_images(b: &HeytingAlgebra) -> Vec<FilterQuotient> {
    b.elements().map(|g| filter_quotient(b, g)).collect()
}

/// Whether `a` lies in the variety generated by `b`, tested as "some
/// homomorphic image of `b` has a subalgebra isomorphic to `a`".
///
/// For subdirectly irreducible `a` this is the membership test behind the
/// quasi-order on finite s.i. algebras; a warning is logged when `a` is not
/// s.i., since the variety-semantics reading needs irreducibility.
pub fn in_hs(a: &HeytingAlgebra, b: &HeytingAlgebra) -> bool {
    if structure::is_si(a) != Ok(true) {
        log::warn!(
            "in_hs called with a non-subdirectly-irreducible left argument {:?}",
            a
        );
    }
    b.elements()
        .filter(|&g| structure::ideal_universe(b, g).len() >= a.size())
        .any(|g| embeds(a, &structure::ideal_algebra(b, g)).is_some())
}

/// Whether `w` belongs to the variety generated by `p`: every subdirectly
/// irreducible homomorphic image of `w` must lie in HS of `p`. Sound because
/// `w` is a subdirect product of its s.i. images and the s.i. members of a
/// finitely generated congruence-distributive variety are bounded by HS of
/// the generator.
pub fn in_generated_variety(w: &HeytingAlgebra, p: &HeytingAlgebra) -> bool {
    homomorphic_images(w)
        .into_iter()
        .filter(|q| structure::is_si(&q.quotient) == Ok(true))
        .all(|q| in_hs(&q.quotient, p))
}

/// Whether the filter congruences at `x` and `y` intersect trivially, which
/// makes `a` a subdirect product of the quotients at `x` and `y`.
pub fn subdirect_witness(a: &HeytingAlgebra, x: ElementId, y: ElementId) -> bool {
    debug_assert!(x != a.top() && y != a.top(), "witnesses must lie below the top");
    for u in a.elements() {
        for v in a.elements() {
            if u == v {
                continue;
            }
            let e = a.equiv(u, v);
            if a.leq(x, e) && a.leq(y, e) {
                return false;
            }
        }
    }
    true
}

/// Certifies that `p` is totally non-projective, with `w` as the witness:
/// `p` must be a homomorphic image of `w`, must not embed into `w`, and `w`
/// must lie in the variety `p` generates.
pub fn totally_nonprojective_certificate(p: &HeytingAlgebra, w: &HeytingAlgebra) -> bool {
    if structure::is_si(p) != Ok(true) {
        log::warn!("total-non-projectivity certificate needs a subdirectly irreducible {:?}", p);
        return false;
    }
    let image = w
        .elements()
        .filter(|&g| structure::ideal_universe(w, g).len() == p.size())
        .any(|g| crate::kernel::is_isomorphic(p, &structure::ideal_algebra(w, g)).is_some());
    image && embeds(p, w).is_none() && in_generated_variety(w, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{prohibited, star, star_witnesses, two, zn};
    use crate::kernel::{is_isomorphic, product, sum};

    #[test]
    fn two_embeds_into_every_nontrivial_algebra() {
        for n in 2..=8 {
            let a = zn(n).unwrap();
            let m = embeds(&two(), &a).expect("the bounds always form a subalgebra");
            assert_eq!(m.verify(), Ok(()));
        }
    }

    #[test]
    fn z5_embeds_into_p1() {
        let m = embeds(&zn(5).unwrap(), &prohibited(1).unwrap()).unwrap();
        assert_eq!(m.verify(), Ok(()));
    }

    #[test]
    fn prohibited_do_not_embed_into_their_preimages() {
        for i in 1..=5 {
            assert!(embeds(&prohibited(i).unwrap(), &star(i).unwrap()).is_none());
        }
    }

    #[test]
    fn embedding_respects_cardinality() {
        assert!(embeds(&zn(6).unwrap(), &zn(5).unwrap()).is_none());
    }

    #[test]
    fn hom_images_count_and_contents() {
        let z10 = zn(10).unwrap();
        let images = homomorphic_images(&z10);
        assert_eq!(images.len(), 10);
        for q in &images {
            assert_eq!(q.projection.verify(), Ok(()));
            // the projection collapses x and y exactly when their
            // biconditional lies in the filter of the generator
            for x in z10.elements() {
                for y in z10.elements() {
                    let collapsed = q.projection.apply(x) == q.projection.apply(y);
                    assert_eq!(collapsed, z10.leq(q.generator, z10.equiv(x, y)));
                }
            }
        }
        assert!(images
            .iter()
            .any(|q| is_isomorphic(&q.quotient, &zn(7).unwrap()).is_some()));
        // the top gives the algebra itself, the bottom the trivial algebra
        assert!(images
            .iter()
            .any(|q| q.generator == z10.top() && is_isomorphic(&q.quotient, &z10).is_some()));
        assert!(images
            .iter()
            .any(|q| q.generator == z10.bottom() && q.quotient.is_trivial()));
    }

    #[test]
    fn p2_quotient_at_its_atom_is_two() {
        // the filter congruence of the atom of 2 + Z7 collapses everything
        // above the atom, leaving the two-element algebra
        let p2 = prohibited(2).unwrap();
        let atom = p2.upper_covers(p2.bottom())[0];
        let q = homomorphic_images(&p2)
            .into_iter()
            .find(|q| q.generator == atom)
            .unwrap();
        assert!(is_isomorphic(&q.quotient, &two()).is_some());
    }

    #[test]
    fn in_hs_diamond_in_z5() {
        assert!(in_hs(&zn(4).unwrap(), &zn(5).unwrap()));
    }

    #[test]
    fn in_hs_is_reflexive() {
        for i in 1..=5 {
            let p = prohibited(i).unwrap();
            assert!(in_hs(&p, &p));
        }
    }

    #[test]
    fn z7_is_not_in_hs_of_p2() {
        // every image of 2 + Z7 either keeps the pendant bottom or is small,
        // and no subalgebra of an image has two atoms meeting at the bottom
        assert!(!in_hs(&prohibited(1).unwrap(), &prohibited(2).unwrap()));
    }

    #[test]
    fn generated_variety_examples() {
        for i in 1..=5 {
            assert!(
                in_generated_variety(&star(i).unwrap(), &prohibited(i).unwrap()),
                "P{i}* must lie in the variety of P{i}"
            );
        }
        assert!(in_generated_variety(&zn(4).unwrap(), &zn(2).unwrap()));
        assert!(!in_generated_variety(&zn(3).unwrap(), &zn(4).unwrap()));
    }

    #[test]
    fn subdirect_witness_examples() {
        for i in 1..=5 {
            let s = star(i).unwrap();
            let (a, b) = star_witnesses(i).unwrap();
            assert!(subdirect_witness(&s, a, b), "P{i}* witness pair");
        }
        // the same coatom twice only works when the quotient is the algebra
        let z5 = zn(5).unwrap();
        let c = structure::coatoms(&z5)[0];
        assert!(!subdirect_witness(&z5, c, c));
        // diamond top against an atom: the pair (d, 1) is collapsed by both
        // filter congruences, so the intersection is not trivial
        let atom = z5.upper_covers(z5.bottom())[0];
        assert!(!subdirect_witness(&z5, c, atom));
    }

    #[test]
    fn subdirect_witness_yields_an_actual_subdirect_embedding() {
        // a true witness pair makes x |-> (x /\ a, x /\ b) injective into
        // the product of the two quotients, with both coordinates onto
        for i in 1..=5 {
            let s = star(i).unwrap();
            let (wa, wb) = star_witnesses(i).unwrap();
            let qa = homomorphic_images(&s)
                .into_iter()
                .find(|q| q.generator == wa)
                .unwrap();
            let qb = homomorphic_images(&s)
                .into_iter()
                .find(|q| q.generator == wb)
                .unwrap();
            let prod = product(&qa.quotient, &qb.quotient).unwrap();
            let assign: Vec<_> = s
                .elements()
                .map(|x| {
                    crate::kernel::pair_id(
                        qb.quotient.size(),
                        qa.projection.apply(x),
                        qb.projection.apply(x),
                    )
                })
                .collect();
            let emb = crate::kernel::AlgebraMap::new(
                s.clone(),
                prod,
                assign,
                crate::kernel::MapKind::Embedding,
            );
            assert_eq!(emb.verify(), Ok(()), "P{i}* subdirect embedding");
        }
    }

    #[test]
    fn tnp_certificates() {
        for i in 1..=5 {
            assert!(
                totally_nonprojective_certificate(&prohibited(i).unwrap(), &star(i).unwrap()),
                "P{i} with witness P{i}*"
            );
        }
        // Z2 embeds into the diamond, so the diamond is no witness
        assert!(!totally_nonprojective_certificate(&zn(2).unwrap(), &zn(4).unwrap()));
    }

    #[test]
    fn projective_z5_admits_no_witness_in_small_corpus() {
        let z5 = zn(5).unwrap();
        for b in crate::catalog::corpus(3).unwrap() {
            assert!(!totally_nonprojective_certificate(&z5, &b));
        }
    }

    #[test]
    fn embeds_is_transitive_on_a_sample() {
        let a = zn(3).unwrap();
        let b = zn(5).unwrap();
        let c = sum(&zn(5).unwrap(), &zn(2).unwrap());
        assert!(embeds(&a, &b).is_some());
        assert!(embeds(&b, &c).is_some());
        assert!(embeds(&a, &c).is_some());
    }

    #[test]
    fn product_projections_are_homomorphic_images_too() {
        let z3 = zn(3).unwrap();
        let z4 = zn(4).unwrap();
        let p = product(&z3, &z4).unwrap();
        // both factors appear among the quotients of the product
        let images = homomorphic_images(&p);
        assert!(images
            .iter()
            .any(|q| is_isomorphic(&q.quotient, &z3).is_some()));
        assert!(images
            .iter()
            .any(|q| is_isomorphic(&q.quotient, &z4).is_some()));
    }
}
