//! Projective shapes, block signatures, the domination quasi-order on
//! signatures, and the sound embedding fast path it yields.
//!
//! The finite projective algebras are the subdirectly irreducible sums of
//! two-element chains and diamonds. Those whose first summand is a diamond
//! decompose uniquely into maximal blocks `A(n)` (n diamonds and a closing
//! two-element chain); the block indices form a word, and domination of
//! words is a sufficient condition for embeddability.

use thiserror::Error;

use crate::kernel::{from_covers, sum, HeytingAlgebra};
use crate::structure;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WqoError {
    #[error("operation requires a nontrivial algebra")]
    TrivialAlgebra,
    #[error("algebra is not a subdirectly irreducible sum of chains and diamonds")]
    NotProjectiveShape,
    #[error("block signatures require the first summand to be a diamond")]
    HeadNotZ4,
}

/// A summand of a projective-shaped algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentTag {
    /// Two-element chain.
    Z2,
    /// Four-element diamond.
    Z4,
}

/// Returns the nodeless-decomposition tags when the algebra is subdirectly
/// irreducible and every component is a two-element chain or a diamond,
/// which characterizes the finite projective algebras. `None` otherwise.
pub fn projective_shape(
    a: &HeytingAlgebra,
) -> Result<Option<Vec<ComponentTag>>, WqoError> {
    if a.is_trivial() {
        return Err(WqoError::TrivialAlgebra);
    }
    if structure::is_si(a) != Ok(true) {
        return Ok(None);
    }
    let dec = structure::nodeless_decomposition(a).expect("nontrivial");
    let mut tags = Vec::with_capacity(dec.components.len());
    for c in &dec.components {
        match c.size() {
            2 => tags.push(ComponentTag::Z2),
            4 if c.upper_covers(c.bottom()).len() == 2 => tags.push(ComponentTag::Z4),
            _ => return Ok(None),
        }
    }
    Ok(Some(tags))
}

/// The signature of a diamond-headed projective algebra: the first block
/// index together with the full block word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature {
    head: usize,
    word: Vec<usize>,
}

impl Signature {
    /// Word must be nonempty with a positive first entry.
    pub fn new(word: Vec<usize>) -> Self {
        assert!(!word.is_empty() && word[0] > 0, "head block index must be positive");
        Signature { head: word[0], word }
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let word: Vec<String> = self.word.iter().map(|n| n.to_string()).collect();
        write!(f, "({}; {})", self.head, word.join(" "))
    }
}

/// Groups the component list of a projective-shaped, diamond-headed algebra
/// into maximal blocks: each block is a run of diamonds closed by one
/// two-element chain, and a bare chain is the zero block.
pub fn block_signature(a: &HeytingAlgebra) -> Result<Signature, WqoError> {
    let tags = projective_shape(a)?.ok_or(WqoError::NotProjectiveShape)?;
    if tags[0] != ComponentTag::Z4 {
        return Err(WqoError::HeadNotZ4);
    }
    let mut word = Vec::new();
    let mut run = 0usize;
    for t in &tags {
        match t {
            ComponentTag::Z4 => run += 1,
            ComponentTag::Z2 => {
                word.push(run);
                run = 0;
            }
        }
    }
    // subdirect irreducibility forces a closing chain
    assert_eq!(run, 0, "projective s.i. shapes end with a chain");
    Ok(Signature::new(word))
}

/// Domination: the head indices compare and the left word maps onto an
/// increasing subsequence of the right word with pointwise smaller-or-equal
/// entries. Checked by greedy leftmost matching, which is complete for
/// subsequence domination.
pub fn dominates(lhs: &Signature, rhs: &Signature) -> bool {
    lhs.head <= rhs.head && word_dominated(&lhs.word, &rhs.word)
}

fn word_dominated(u: &[usize], v: &[usize]) -> bool {
    let mut j = 0;
    'outer: for &a in u {
        while j < v.len() {
            let b = v[j];
            j += 1;
            if a <= b {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Exhaustive reference for [`word_dominated`]; test support.
pub fn word_dominated_exhaustive(u: &[usize], v: &[usize]) -> bool {
    fn rec(u: &[usize], v: &[usize]) -> bool {
        if u.is_empty() {
            return true;
        }
        if v.is_empty() {
            return false;
        }
        (u[0] <= v[0] && rec(&u[1..], &v[1..])) || rec(u, &v[1..])
    }
    rec(u, v)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FastEmbed {
    /// Both signatures exist and the left dominates into the right, so an
    /// embedding exists.
    Yes,
    /// No information; fall back to the full embedding search.
    Unknown,
}

/// Sound one-direction embedding test via signature domination. Never
/// answers "no": absence of domination carries no information, and shapes
/// headed by a chain are left to the full search rather than rewritten.
pub fn fast_embeds(a: &HeytingAlgebra, b: &HeytingAlgebra) -> FastEmbed {
    match (block_signature(a), block_signature(b)) {
        (Ok(sa), Ok(sb)) if dominates(&sa, &sb) => FastEmbed::Yes,
        _ => FastEmbed::Unknown,
    }
}

/// The block `A(n)`: `n` diamonds and one closing two-element chain.
pub fn block_algebra(n: usize) -> HeytingAlgebra {
    let chain = from_covers(2, &[(0, 1)]).unwrap();
    let diamond = from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    let mut acc: Option<HeytingAlgebra> = None;
    for _ in 0..n {
        acc = Some(match acc {
            None => diamond.clone(),
            Some(a) => sum(&a, &diamond),
        });
    }
    match acc {
        None => chain,
        Some(a) => sum(&a, &chain),
    }
}

/// The sum `A(n0) + A(n1) + ...` of the given block word.
pub fn sum_of_blocks(word: &[usize]) -> HeytingAlgebra {
    assert!(!word.is_empty());
    let mut acc = block_algebra(word[0]);
    for &n in &word[1..] {
        acc = sum(&acc, &block_algebra(n));
    }
    acc
}
