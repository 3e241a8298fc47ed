//! Dyck paths and the square diagram of a numerical semigroup.
//!
//! The square diagram of a semigroup of genus `g` is the lattice path whose
//! `i`-th step, for `1 <= i <= 2g`, goes up when `i` is a gap and right when
//! `i` is a member. It always ends at `(g, g)` and never dips below the
//! diagonal, so it is a Dyck path of order `g`. Distinct semigroups give
//! distinct paths, and [`decode`] recovers the semigroup from any path in the
//! image.
//!
//! Paths serialize as strings over `U` (up, a gap) and `R` (right, a member).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{SemigroupError, MAX_GENUS};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Right,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Right => 'R',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("invalid character {ch:?} at position {index}")]
    InvalidChar { index: usize, ch: char },
    #[error("path has odd length {len}")]
    OddLength { len: usize },
    #[error("path has {ups} up steps but {rights} right steps")]
    Unbalanced { ups: usize, rights: usize },
    /// The prefix of this many steps has more right than up steps.
    #[error("prefix of length {prefix_index} goes below the diagonal")]
    BelowDiagonal { prefix_index: usize },
}

/// Parses a `U`/`R` string into raw steps without checking the Dyck
/// condition.
pub fn parse_steps(s: &str) -> Result<Vec<Step>, PathError> {
    s.chars()
        .enumerate()
        .map(|(index, ch)| match ch {
            'U' => Ok(Step::Up),
            'R' => Ok(Step::Right),
            ch => Err(PathError::InvalidChar { index, ch }),
        })
        .collect()
}

/// A lattice path from `(0, 0)` to `(n, n)` with unit up and right steps
/// that never goes below the diagonal `x = y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn empty() -> Self {
        Self { steps: Vec::new() }
    }

    /// Checks length parity, balance, then the prefix condition, in that
    /// order.
    ///
    /// ```
    /// use squarediagram::dyck::{parse_steps, DyckPath, PathError};
    ///
    /// let steps = parse_steps("RU").unwrap();
    /// assert_eq!(
    ///     DyckPath::validate(steps),
    ///     Err(PathError::BelowDiagonal { prefix_index: 1 })
    /// );
    /// ```
    pub fn validate(steps: Vec<Step>) -> Result<Self, PathError> {
        if !steps.len().is_multiple_of(2) {
            return Err(PathError::OddLength { len: steps.len() });
        }
        let ups = steps.iter().filter(|s| **s == Step::Up).count();
        let rights = steps.len() - ups;
        if ups != rights {
            return Err(PathError::Unbalanced { ups, rights });
        }
        let mut height: isize = 0;
        for (i, step) in steps.iter().enumerate() {
            height += match step {
                Step::Up => 1,
                Step::Right => -1,
            };
            if height < 0 {
                return Err(PathError::BelowDiagonal {
                    prefix_index: i + 1,
                });
            }
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of up steps, equal to the number of right steps.
    pub fn order(&self) -> usize {
        self.steps.len() / 2
    }

    /// The step `e(i)` for `1 <= i <= 2n`.
    pub fn step(&self, i: usize) -> Option<Step> {
        i.checked_sub(1).and_then(|j| self.steps.get(j)).copied()
    }

    /// Every lattice point visited, starting at the origin.
    pub fn lattice_points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        std::iter::once((0, 0)).chain(self.steps.iter().scan((0, 0), |p, step| {
            match step {
                Step::Up => p.1 += 1,
                Step::Right => p.0 += 1,
            }
            Some(*p)
        }))
    }

    /// For each column `x`, the number of up steps taken before the
    /// `(x + 1)`-th right step: the height of the path over that column.
    pub fn column_heights(&self) -> Vec<usize> {
        let mut ups = 0;
        let mut heights = Vec::with_capacity(self.order());
        for step in &self.steps {
            match step {
                Step::Up => ups += 1,
                Step::Right => heights.push(ups),
            }
        }
        heights
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps
            .iter()
            .try_for_each(|s| fmt::Write::write_char(f, s.as_char()))
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::validate(parse_steps(s)?)
    }
}

/// The square diagram of `s`: step `i` is right iff `i` belongs to `s`.
///
/// ```
/// use squarediagram::{dyck::tau, NumericalSemigroup};
///
/// let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
/// assert_eq!(tau(&s).to_string(), "UR");
/// ```
pub fn tau(s: &NumericalSemigroup) -> DyckPath {
    let n = 2 * s.genus() as i64;
    let steps = (1..=n)
        .map(|i| if s.contains(i) { Step::Right } else { Step::Up })
        .collect();
    let path = DyckPath { steps };
    debug_assert!(DyckPath::validate(path.steps.clone()).is_ok());
    path
}

/// Why a path is not the square diagram of any semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// `a` and `b` are in the candidate set but `a + b` is not.
    NotClosed { a: u64, b: u64 },
    /// The raw steps do not form a Dyck path.
    Structural(PathError),
    /// The induced semigroup would have genus above the supported maximum.
    OrderOutOfRange { order: usize },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotClosed { a, b } => write!(
                f,
                "not a numerical semigroup: {a} + {b} = {} is missing",
                a + b
            ),
            Rejection::Structural(e) => write!(f, "not a Dyck path: {e}"),
            Rejection::OrderOutOfRange { order } => {
                write!(f, "order {order} exceeds the supported maximum {MAX_GENUS}")
            }
        }
    }
}

/// Result of inverting the square-diagram map on an arbitrary path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathDecodeOutcome {
    Accepted(NumericalSemigroup),
    Rejected(Rejection),
}

impl PathDecodeOutcome {
    pub fn semigroup(&self) -> Option<&NumericalSemigroup> {
        match self {
            PathDecodeOutcome::Accepted(s) => Some(s),
            PathDecodeOutcome::Rejected(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            PathDecodeOutcome::Accepted(_) => None,
            PathDecodeOutcome::Rejected(r) => Some(r),
        }
    }
}

/// Left inverse of [`tau`].
///
/// Takes the up-step indices as the candidate gap set. Everything above
/// `2n` is a member, so closure only needs checking on `[0, 2n]`; when it
/// holds the semigroup has genus exactly `n` and its square diagram is `p`.
///
/// ```
/// use squarediagram::dyck::{decode, DyckPath, Rejection};
///
/// let p: DyckPath = "URUURRURUR".parse().unwrap();
/// let r = decode(&p);
/// assert_eq!(r.rejection(), Some(&Rejection::NotClosed { a: 2, b: 2 }));
/// ```
pub fn decode(p: &DyckPath) -> PathDecodeOutcome {
    if p.order() > MAX_GENUS as usize {
        return PathDecodeOutcome::Rejected(Rejection::OrderOutOfRange { order: p.order() });
    }
    let candidate_gaps: Vec<u64> = (1..=p.steps.len())
        .filter(|&i| p.step(i) == Some(Step::Up))
        .map(|i| i as u64)
        .collect();
    match NumericalSemigroup::from_gaps(candidate_gaps) {
        Ok(s) => {
            debug_assert!(p.order() == 0 || p.step(2 * p.order()) == Some(Step::Right));
            PathDecodeOutcome::Accepted(s)
        }
        Err(SemigroupError::NotClosed { a, b }) => {
            PathDecodeOutcome::Rejected(Rejection::NotClosed { a, b })
        }
        Err(e) => unreachable!("validated path produced {e:?}"),
    }
}

/// Validates raw steps, then decodes.
pub fn decode_steps(steps: Vec<Step>) -> PathDecodeOutcome {
    match DyckPath::validate(steps) {
        Ok(p) => decode(&p),
        Err(e) => PathDecodeOutcome::Rejected(Rejection::Structural(e)),
    }
}

/// Unit cells of the `n x n` square lying above the path.
///
/// Column `x` has `column_heights()[x]` cells below the path, so the area
/// above is `n^2` minus their sum.
pub fn area_above(p: &DyckPath) -> u64 {
    let n = p.order() as u64;
    let below: u64 = p.column_heights().iter().map(|&h| h as u64).sum();
    n * n - below
}

/// Whether the part of the path inside the square `[0, n-1] x [0, n-1]` is
/// invariant under reflection in the antidiagonal from `(0, n-1)` to
/// `(n-1, 0)`.
///
/// Compares lattice-point sets, so steps leaving the square are ignored.
/// The empty path is symmetric.
pub fn is_antidiagonal_symmetric(p: &DyckPath) -> bool {
    let n = p.order();
    if n == 0 {
        return true;
    }
    let m = n - 1;
    let inside: BTreeSet<(usize, usize)> = p
        .lattice_points()
        .filter(|&(x, y)| x <= m && y <= m)
        .collect();
    inside
        .iter()
        .all(|&(x, y)| inside.contains(&(m - y, m - x)))
}
