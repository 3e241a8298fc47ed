//! Exhaustive generation of all numerical semigroups of a fixed genus.
//!
//! Every semigroup of genus `g + 1` arises from exactly one semigroup of
//! genus `g` by removing a single minimal generator larger than the
//! Frobenius number; putting the removed element back recovers the parent.
//! This gives a tree rooted at the naturals whose depth-`g` layer is the set
//! of semigroups of genus `g`, which we walk depth first.
//!
//! Subtrees hanging below depth [`SPLIT_DEPTH`] are independent and run on
//! the rayon pool. Results are sorted back into lexicographic gap order, so
//! output never depends on scheduling.

use rayon::prelude::*;

use crate::binomial::{catalan, central_binomial_bound};
use crate::error::{SemigroupError, MAX_GENUS};
use crate::semigroup::{is_minimal_generator, NumericalSemigroup};

/// Depth at which the tree is split into parallel work units.
pub const SPLIT_DEPTH: u32 = 2;

/// Largest genus [`brute_force_oracle`] accepts.
pub const ORACLE_MAX_GENUS: u32 = 8;

#[derive(Debug, Clone, Copy)]
struct Node {
    mask: u64,
    /// Largest gap, or 0 for the naturals.
    frobenius: u32,
    genus: u32,
}

impl Node {
    fn root() -> Self {
        Self {
            mask: u64::MAX,
            frobenius: 0,
            genus: 0,
        }
    }

    fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_mask(self.mask, self.genus)
    }

    fn is_symmetric(&self) -> bool {
        // Conductor is frobenius + 1, or 0 for the naturals.
        let c = if self.genus == 0 {
            0
        } else {
            self.frobenius + 1
        };
        c == 2 * self.genus
    }

    fn for_each_child(&self, mut f: impl FnMut(Node)) {
        // The child's Frobenius number m satisfies m + 1 <= 2 * (genus + 1).
        for m in self.frobenius + 1..=2 * self.genus + 1 {
            if is_minimal_generator(self.mask, m) {
                f(Node {
                    mask: self.mask & !(1 << m),
                    frobenius: m,
                    genus: self.genus + 1,
                });
            }
        }
    }

    fn children(&self) -> Vec<Node> {
        let mut out = Vec::new();
        self.for_each_child(|c| out.push(c));
        out
    }
}

fn check_genus(g: u32) -> Result<(), SemigroupError> {
    if g > MAX_GENUS {
        Err(SemigroupError::GenusOutOfRange { genus: g.into() })
    } else {
        Ok(())
    }
}

/// Nodes at depth `min(g, SPLIT_DEPTH)`.
fn frontier(g: u32) -> Vec<Node> {
    let mut layer = vec![Node::root()];
    for _ in 0..g.min(SPLIT_DEPTH) {
        layer = layer.iter().flat_map(Node::children).collect();
    }
    layer
}

fn walk(node: Node, target: u32, visit: &mut impl FnMut(&Node)) {
    if node.genus == target {
        visit(&node);
        return;
    }
    node.for_each_child(|c| walk(c, target, visit));
}

/// All semigroups of genus `g`, each exactly once, in lexicographic order of
/// their gap sequences.
///
/// ```
/// use squarediagram::enumeration::enumerate_genus;
///
/// let gaps: Vec<Vec<u32>> = enumerate_genus(3)
///     .unwrap()
///     .iter()
///     .map(|s| s.gaps().to_vec())
///     .collect();
/// assert_eq!(
///     gaps,
///     vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5], vec![1, 3, 5]]
/// );
/// ```
pub fn enumerate_genus(g: u32) -> Result<Vec<NumericalSemigroup>, SemigroupError> {
    check_genus(g)?;
    let mut all: Vec<NumericalSemigroup> = frontier(g)
        .into_par_iter()
        .flat_map_iter(|node| {
            let mut out = Vec::new();
            walk(node, g, &mut |n| out.push(n.semigroup()));
            out
        })
        .collect();
    all.sort_unstable();
    Ok(all)
}

/// Single-threaded variant of [`enumerate_genus`] with identical output.
pub fn enumerate_genus_sequential(g: u32) -> Result<Vec<NumericalSemigroup>, SemigroupError> {
    check_genus(g)?;
    let mut all = Vec::new();
    walk(Node::root(), g, &mut |n| all.push(n.semigroup()));
    all.sort_unstable();
    Ok(all)
}

/// Number of semigroups of genus `g` and how many of them are symmetric,
/// without materializing them.
pub fn count_genus(g: u32) -> Result<(u64, u64), SemigroupError> {
    check_genus(g)?;
    let counts = frontier(g)
        .into_par_iter()
        .map(|node| {
            let (mut total, mut symmetric) = (0u64, 0u64);
            walk(node, g, &mut |n| {
                total += 1;
                symmetric += u64::from(n.is_symmetric());
            });
            (total, symmetric)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(counts)
}

/// Per-genus counts next to the two upper bounds they must respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsRecord {
    pub genus: u32,
    pub total_count: u64,
    pub symmetric_count: u64,
    /// `C_g = binom(2g, g) / (g + 1)`.
    pub catalan_bound: u64,
    /// `binom(g - 1, ceil((g - 1) / 2))`, taken as 1 at genus 0.
    pub central_binomial_bound: u64,
}

impl BoundsRecord {
    pub fn total_within_catalan(&self) -> bool {
        self.total_count <= self.catalan_bound
    }

    pub fn symmetric_within_central_binomial(&self) -> bool {
        self.symmetric_count <= self.central_binomial_bound
    }

    pub fn holds(&self) -> bool {
        self.total_within_catalan() && self.symmetric_within_central_binomial()
    }
}

/// Counts semigroups of genus `g` and pairs them with both bounds.
pub fn census(g: u32) -> Result<BoundsRecord, SemigroupError> {
    let (total_count, symmetric_count) = count_genus(g)?;
    let g64 = u64::from(g);
    Ok(BoundsRecord {
        genus: g,
        total_count,
        symmetric_count,
        // Both fit in u64 for g <= 30.
        catalan_bound: catalan(g64).expect("C_g fits in u64 for g <= 30"),
        central_binomial_bound: central_binomial_bound(g64).expect("fits in u64 for g <= 30"),
    })
}

/// Counts genus-`g` semigroups by testing every `g`-subset of `{1, ..., 2g}`
/// as a gap set. Shares no code with the tree walk.
///
/// Cost is `2^(2g)`, so `g` is capped at [`ORACLE_MAX_GENUS`].
pub fn brute_force_oracle(g: u32) -> Result<u64, SemigroupError> {
    if g > ORACLE_MAX_GENUS {
        return Err(SemigroupError::GenusOutOfRange { genus: g.into() });
    }
    let n = 2 * g as usize;
    let mut count = 0;
    for gap_bits in 0u32..(1 << n) {
        if gap_bits.count_ones() != g {
            continue;
        }
        // member[i] for i in 0..=n; everything above n is a member.
        let member: Vec<bool> = (0..=n)
            .map(|i| i == 0 || gap_bits & (1 << (i - 1)) == 0)
            .collect();
        let closed =
            (1..=n).all(|a| !member[a] || (a..=n - a).all(|b| !member[b] || member[a + b]));
        if closed {
            count += 1;
        }
    }
    Ok(count)
}
