//! Numerical semigroups described by their gap sets.
//!
//! A numerical semigroup is a submonoid of the non-negative integers with
//! finite complement. Because the conductor never exceeds twice the genus,
//! a semigroup of genus `g` is completely determined by which integers in
//! `[0, 2g]` it contains. With the genus capped at [`MAX_GENUS`] that window
//! fits inside a single `u64`, which is what [`NumericalSemigroup`] stores.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::gcd;

use crate::error::{SemigroupError, MAX_GENUS};

/// Membership bits for `[0, 64)`. Every bit at or above the conductor is set.
type Mask = u64;

const ALL: Mask = u64::MAX;

/// A numerical semigroup of genus at most [`MAX_GENUS`].
///
/// Values are immutable once built. Ordering is lexicographic on the gap
/// sequence, which is the canonical order used by
/// [`enumerate_genus`](crate::enumeration::enumerate_genus).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    gaps: Vec<u32>,
    members: Mask,
}

/// The sequences attached to a semigroup: its smallest elements, the partial
/// genus at each of them, the gaps, and the weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedProfile {
    /// `lambda[i]` is the `i`-th smallest element, for `0 <= i <= 2g`.
    pub lambda: Vec<u32>,
    /// `partial_genus[i] = lambda[i] - i`, the number of gaps below `lambda[i]`.
    pub partial_genus: Vec<u32>,
    pub gaps: Vec<u32>,
    /// Sum of `l_i - i` over the gaps `l_1 < ... < l_g`.
    pub weight: u64,
}

impl NumericalSemigroup {
    /// The semigroup of all non-negative integers (genus 0).
    pub fn naturals() -> Self {
        Self {
            gaps: Vec::new(),
            members: ALL,
        }
    }

    /// Builds the semigroup whose complement is exactly `candidate_gaps`.
    ///
    /// Duplicates in the input are ignored. Fails with
    /// [`SemigroupError::NotClosed`] carrying the first offending pair
    /// (smallest gap first, then smallest summand) when the complement is not
    /// closed under addition.
    ///
    /// ```
    /// use squarediagram::{NumericalSemigroup, SemigroupError};
    ///
    /// let s = NumericalSemigroup::from_gaps([1, 2, 4]).unwrap();
    /// assert_eq!(s.conductor(), 5);
    ///
    /// let err = NumericalSemigroup::from_gaps([2]).unwrap_err();
    /// assert_eq!(err, SemigroupError::NotClosed { a: 1, b: 1 });
    /// ```
    pub fn from_gaps<I>(candidate_gaps: I) -> Result<Self, SemigroupError>
    where
        I: IntoIterator<Item = u64>,
    {
        let gaps: BTreeSet<u64> = candidate_gaps.into_iter().collect();
        if gaps.contains(&0) {
            return Err(SemigroupError::ZeroGap);
        }
        if gaps.len() as u64 > u64::from(MAX_GENUS) {
            return Err(SemigroupError::GenusOutOfRange {
                genus: gaps.len() as u64,
            });
        }
        if let Some((a, b)) = closure_witness(&gaps) {
            return Err(SemigroupError::NotClosed { a, b });
        }
        // Closed with genus <= 30, so every gap is below 2 * 30.
        let mut members = ALL;
        for &l in &gaps {
            members &= !(1 << l);
        }
        Ok(Self {
            gaps: gaps.into_iter().map(|l| l as u32).collect(),
            members,
        })
    }

    /// The smallest numerical semigroup containing every generator.
    ///
    /// Fails with [`SemigroupError::NotCofinite`] when the generators share a
    /// common factor, and with [`SemigroupError::GenusOutOfRange`] when the
    /// result would have genus above [`MAX_GENUS`].
    ///
    /// ```
    /// use squarediagram::NumericalSemigroup;
    ///
    /// let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
    /// assert_eq!(s.gaps(), &[1, 2, 4, 7]);
    /// ```
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let d = gens.iter().copied().fold(0, gcd);
        if d != 1 {
            return Err(SemigroupError::NotCofinite { gcd: d });
        }
        let min = *gens.iter().min().expect("non-empty");
        let max = *gens.iter().max().expect("non-empty");
        // 1..min are all gaps.
        if min - 1 > u64::from(MAX_GENUS) {
            return Err(SemigroupError::GenusOutOfRange { genus: min - 1 });
        }

        // Membership stabilizes below max * min + 1. When the genus is in
        // range the conductor is at most 2 * MAX_GENUS, so a run of `min`
        // consecutive members must start by then; no wider window is needed.
        let cap = 2 * u64::from(MAX_GENUS) + min;
        let bound = max.saturating_mul(min).saturating_add(1).min(cap) as usize;
        let mut member = vec![false; bound + 1];
        member[0] = true;
        for n in 1..=bound {
            member[n] = gens
                .iter()
                .any(|&x| x as usize <= n && member[n - x as usize]);
        }

        let run = min as usize;
        let mut streak = 0;
        let mut conductor = None;
        for (n, &m) in member.iter().enumerate() {
            streak = if m { streak + 1 } else { 0 };
            if streak == run {
                conductor = Some(n + 1 - run);
                break;
            }
        }
        let gap_count = member.iter().filter(|m| !**m).count() as u64;
        let Some(conductor) = conductor else {
            // No run inside the window: the conductor exceeds 2 * MAX_GENUS.
            return Err(SemigroupError::GenusOutOfRange {
                genus: gap_count.max(u64::from(MAX_GENUS) + 1),
            });
        };
        let gaps: Vec<u64> = (1..conductor)
            .filter(|&n| !member[n])
            .map(|n| n as u64)
            .collect();
        Self::from_gaps(gaps)
    }

    /// Rebuilds a semigroup from a membership mask whose bits at and above
    /// `2 * genus + 1` are all set. The caller guarantees closure.
    pub(crate) fn from_mask(members: Mask, genus: u32) -> Self {
        let gaps: Vec<u32> = (1..=2 * genus)
            .filter(|&i| members & (1 << i) == 0)
            .collect();
        debug_assert_eq!(gaps.len() as u32, genus);
        Self { gaps, members }
    }

    #[cfg(test)]
    pub(crate) fn mask(&self) -> Mask {
        self.members
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    /// Largest gap plus one; 0 for the naturals.
    pub fn conductor(&self) -> u32 {
        self.gaps.last().map_or(0, |l| l + 1)
    }

    /// The largest gap, if any.
    pub fn frobenius(&self) -> Option<u32> {
        self.gaps.last().copied()
    }

    /// Membership test. Negative integers are never members.
    pub fn contains(&self, n: i64) -> bool {
        match n {
            n if n < 0 => false,
            n if n >= 64 => true,
            n => self.members & (1 << n) != 0,
        }
    }

    /// Elements of the semigroup in increasing order, starting at 0.
    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        (0u32..).filter(move |&n| self.contains(i64::from(n)))
    }

    /// `conductor == 2 * genus`. The naturals count as symmetric.
    pub fn is_symmetric(&self) -> bool {
        self.conductor() == 2 * self.genus()
    }

    /// Whether `c - 1 - i` is a member for every gap `i`.
    ///
    /// This is an independent characterization of symmetry and agrees with
    /// [`is_symmetric`](Self::is_symmetric) on every semigroup.
    pub fn check_gap_pairing(&self) -> bool {
        let c = i64::from(self.conductor());
        self.gaps
            .iter()
            .all(|&i| self.contains(c - 1 - i64::from(i)))
    }

    /// Sum of `l_i - i` over the gaps.
    pub fn weight(&self) -> u64 {
        self.gaps
            .iter()
            .zip(1u64..)
            .map(|(&l, i)| u64::from(l) - i)
            .sum()
    }

    pub fn profile(&self) -> DerivedProfile {
        let len = 2 * self.genus() as usize + 1;
        let lambda: Vec<u32> = self.elements().take(len).collect();
        let partial_genus = lambda.iter().zip(0u32..).map(|(&l, i)| l - i).collect();
        DerivedProfile {
            lambda,
            partial_genus,
            gaps: self.gaps.clone(),
            weight: self.weight(),
        }
    }
}

/// Whether `m` is a member of `members` that is not the sum of two non-zero
/// members.
pub(crate) fn is_minimal_generator(members: Mask, m: u32) -> bool {
    debug_assert!(m < 64);
    if m == 0 || members & (1 << m) == 0 {
        return false;
    }
    // Non-zero members below m; bit a of `rev` is set iff m - a is one.
    let low = members & ((1u64 << m) - 1) & !1;
    let rev = low.reverse_bits() >> (63 - m);
    low & rev == 0
}

/// First pair of members summing to a gap, scanning gaps in increasing
/// order and summands `a <= b` with `a` increasing.
///
/// For a genus-`g` gap set, any gap `l` has at most `2g` values of `a` ruled
/// out, so the scan for each gap is short even when `l` is huge.
pub(crate) fn closure_witness(gaps: &BTreeSet<u64>) -> Option<(u64, u64)> {
    gaps.iter().find_map(|&l| {
        (1..=l / 2)
            .find(|&a| !gaps.contains(&a) && !gaps.contains(&(l - a)))
            .map(|a| (a, l - a))
    })
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps.cmp(&other.gaps)
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("gaps", &self.gaps)
            .field("conductor", &self.conductor())
            .finish()
    }
}

/// Formats as `N0 \ {1, 2, 4}`.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N0 \\ {{")?;
        for (i, l) in self.gaps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}
