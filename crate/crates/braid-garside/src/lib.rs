//! Normal forms for braid groups `B_{n+1}` in the Artin-Garside generators
//! `a_1, ..., a_n, Δ, Δ^{-1}`.
//!
//! The seven rule schemas in [`rules`] form a Gröbner-Shirshov basis:
//! rewriting any word with them terminates (every step drops in deg-lex)
//! and ends in a unique irreducible word, which is exactly the Garside
//! `Δ^k · A` normal form. On top of the engine sit:
//!
//! * [`normal_form`]: signed words in, canonical `Δ^k · A` out, plus group
//!   equality and inversion;
//! * [`oracle`]: independent ground truths (the Artin action on a free
//!   group, breadth-first positive classes, a brute-force Garside form)
//!   that the engine is tested against;
//! * [`confluence`]: bounded re-verification that all compositions of the
//!   rules are joinable, and a randomized suite for the derived word
//!   identities.

pub mod confluence;
pub mod error;
pub mod families;
pub mod normal_form;
pub mod oracle;
pub mod rules;
pub mod word;

pub use error::BraidError;
pub use families::{
    ascending_tower, delta_ladder, descending_run, e_word, flip, lambda_word, shift,
    LambdaVariant,
};
pub use normal_form::{
    desugar_inverses, equal, invert, normal_form, normal_form_with_guard, NormalForm,
};
pub use oracle::{
    artin_automorphism, garside_oracle, oracle_equal, positive_class, positive_min_rep,
    FreeGroupAut, FreeGroupElem,
};
pub use rules::{
    apply_match, find_matches, first_match, instantiate_lhs, instantiate_rhs, is_irreducible,
    normalize, normalize_with_guard, normalize_word, normalize_word_with_guard, Policy,
    RewriteTrace, RuleId, RuleMatch, RuleParams, TraceStep, DEFAULT_STEP_GUARD,
};
pub use word::{cmp_deglex, Generator, Sign, SignedLetter, SignedWord, Word, MAX_RANK};
