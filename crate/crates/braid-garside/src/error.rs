use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    /// Two words from different ambient groups were combined or compared.
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u16, right: u16 },

    /// An Artin index fell outside `1..=rank`.
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: i64, rank: u16 },

    /// Rank outside the supported window.
    #[error("rank {0} not in 1..={max}", max = crate::word::MAX_RANK)]
    RankOutOfRange(u16),

    /// A rule was instantiated with parameters violating its side conditions.
    #[error("invalid rule parameters: {0}")]
    InvalidRuleParams(String),

    /// A match no longer agrees with the letters of the host word.
    #[error("stale match: letters at [{start}, {end}) do not form the rule's left-hand side")]
    StaleMatch { start: usize, end: usize },

    /// The rewrite loop exceeded its step guard. Termination is guaranteed by
    /// the deg-lex order, so this signals an implementation defect.
    #[error("step guard of {guard} rewrite steps exceeded (internal bug)")]
    StepGuardExceeded { guard: u64 },

    /// An operation that requires a positive, delta-free word got one with
    /// delta letters.
    #[error("word contains delta letters where a positive Artin word is required")]
    NotPositive,

    /// A breadth-first equivalence-class search outgrew its cap.
    #[error("equivalence class exceeded cap of {cap} words")]
    ClassCapExceeded { cap: usize },

    /// Instance enumeration outgrew its budget.
    #[error("instance budget of {budget} exceeded (reached {reached})")]
    BudgetExceeded { budget: usize, reached: usize },

    /// Malformed normal-form text.
    #[error("malformed normal form: {0}")]
    MalformedNormalForm(String),
}
