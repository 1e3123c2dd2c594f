//! Order-theoretic properties of the projective shapes: stretching laws,
//! the recorded answer for the one undominated pair of the examples, and
//! the exhaustively computed maximal antichain among the small shapes.

use heyting::catalog::zn;
use heyting::kernel::{sum, HeytingAlgebra};
use heyting::morphisms::embeds;
use heyting::wqo::{block_algebra, fast_embeds, sum_of_blocks, FastEmbed};

#[test]
fn undominated_pair_decided_by_full_search() {
    // domination fails between the two-diamond block and the split pair,
    // and the exhaustive search shows there is genuinely no embedding
    let a2 = sum_of_blocks(&[2]);
    let a11 = sum_of_blocks(&[1, 1]);
    assert_eq!(fast_embeds(&a2, &a11), FastEmbed::Unknown);
    assert!(embeds(&a2, &a11).is_none());
}

#[test]
fn stretching_over_a_later_summand() {
    let samples: Vec<HeytingAlgebra> =
        [2, 4, 5, 6, 7].iter().map(|&n| zn(n).unwrap()).collect();
    for n in 0..=2usize {
        let block = block_algebra(n);
        for a in &samples {
            if embeds(&block, a).is_none() {
                continue;
            }
            for b in &samples {
                assert!(
                    embeds(&block, &sum(a, b)).is_some(),
                    "A({n}) into {a:?} + {b:?}"
                );
            }
        }
    }
}

#[test]
fn stretching_across_a_middle_summand() {
    let pairs: Vec<(HeytingAlgebra, HeytingAlgebra)> = vec![
        (zn(2).unwrap(), zn(5).unwrap()),
        (zn(5).unwrap(), zn(7).unwrap()),
        (zn(4).unwrap(), heyting::catalog::bool_cube(3)),
        (zn(3).unwrap(), zn(5).unwrap()),
    ];
    let middles: Vec<HeytingAlgebra> = [2, 4, 6].iter().map(|&n| zn(n).unwrap()).collect();
    let z2 = zn(2).unwrap();
    for (a, a2) in &pairs {
        assert!(embeds(a, a2).is_some(), "sample pair must embed");
        for (b, b2) in &pairs {
            let lhs = sum(&sum(a, &z2), b);
            for c in &middles {
                let rhs = sum(&sum(a2, c), b2);
                assert!(
                    embeds(&lhs, &rhs).is_some(),
                    "{a:?}+Z2+{b:?} into {a2:?}+{c:?}+{b2:?}"
                );
            }
        }
    }
}

/// The converse of the fast path is not claimed: this search looks for an
/// embedding without domination among the small shapes and reports what it
/// finds, asserting nothing about the outcome.
#[test]
fn converse_domination_search_is_reported_only() {
    let mut words: Vec<Vec<usize>> = Vec::new();
    fn gen(prefix: &mut Vec<usize>, budget: i64, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let lo = if prefix.is_empty() { 1 } else { 0 };
        for n in lo..=4usize {
            let w = 3 * n as i64 + 1;
            if w <= budget {
                prefix.push(n);
                gen(prefix, budget - w, out);
                prefix.pop();
            }
        }
    }
    gen(&mut Vec::new(), 13, &mut words); // shapes of at most 15 elements
    let algs: Vec<HeytingAlgebra> = words.iter().map(|w| sum_of_blocks(w)).collect();
    let sigs: Vec<_> = algs
        .iter()
        .map(|a| heyting::wqo::block_signature(a).unwrap())
        .collect();
    let mut found = 0usize;
    for i in 0..algs.len() {
        for j in 0..algs.len() {
            if !heyting::wqo::dominates(&sigs[i], &sigs[j])
                && embeds(&algs[i], &algs[j]).is_some()
            {
                found += 1;
                if found <= 3 {
                    println!(
                        "embedding without domination: {:?} into {:?}",
                        words[i], words[j]
                    );
                }
            }
        }
    }
    println!("embeddings without domination among shapes <= 15 elements: {found}");
}

/// Exhaustive pairwise embedding over every diamond-headed projective shape
/// with at most 18 elements; the relation is a partial order (the shapes
/// are pairwise non-isomorphic), so the maximal antichain size comes out of
/// the minimum chain cover. The value is frozen from that exhaustive run.
#[test]
fn maximal_antichain_among_small_shapes() {
    let mut words: Vec<Vec<usize>> = Vec::new();
    fn gen(prefix: &mut Vec<usize>, budget: i64, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let lo = if prefix.is_empty() { 1 } else { 0 };
        for n in lo..=5usize {
            let w = 3 * n as i64 + 1;
            if w <= budget {
                prefix.push(n);
                gen(prefix, budget - w, out);
                prefix.pop();
            }
        }
    }
    gen(&mut Vec::new(), 17, &mut words);
    assert_eq!(words.len(), 276);
    let algs: Vec<HeytingAlgebra> = words.iter().map(|w| sum_of_blocks(w)).collect();
    let n = algs.len();
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            lt[i][j] = i != j && embeds(&algs[i], &algs[j]).is_some();
        }
    }
    fn augment(
        u: usize,
        lt: &[Vec<bool>],
        seen: &mut [bool],
        match_right: &mut [usize],
    ) -> bool {
        for v in 0..lt.len() {
            if lt[u][v] && !seen[v] {
                seen[v] = true;
                if match_right[v] == usize::MAX
                    || augment(match_right[v], lt, seen, match_right)
                {
                    match_right[v] = u;
                    return true;
                }
            }
        }
        false
    }
    let mut match_right = vec![usize::MAX; n];
    let mut matching = 0;
    for u in 0..n {
        let mut seen = vec![false; n];
        if augment(u, &lt, &mut seen, &mut match_right) {
            matching += 1;
        }
    }
    let antichain = n - matching;
    assert_eq!(antichain, 88, "frozen exhaustive-search value");
    println!("maximal antichain among the 276 shapes: {antichain}");
}
