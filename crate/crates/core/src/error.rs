use thiserror::Error;

/// Largest genus any constructor accepts.
pub const MAX_GENUS: u32 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    /// `a` and `b` are both members but their sum was declared a gap.
    #[error("not closed under addition: {a} + {b} = {} is a gap", a + b)]
    NotClosed { a: u64, b: u64 },

    /// The generators share a common factor, so the complement is infinite.
    #[error("generators have gcd {gcd}; the complement is infinite")]
    NotCofinite { gcd: u64 },

    #[error("0 cannot be a gap")]
    ZeroGap,

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("0 is not a valid generator")]
    ZeroGenerator,

    #[error("genus {genus} is outside the supported range 0..={max}", max = MAX_GENUS)]
    GenusOutOfRange { genus: u64 },
}
