//! Identity verification over a built-in graph corpus and the
//! strongly-regular-graph discrimination experiment.

mod corpus;
mod distinguish;
mod operator;
mod suite;

pub use corpus::{builtin_corpus, random_connected_graph, CorpusEntry, CorpusTags, SrgParams, DEFAULT_SEED};
pub use distinguish::{srg_distinguish, Distinction, LevelDetail};
pub use operator::Operator;
pub use suite::{
    apply_lambda_prefactor, run_identity_suite, Identity, IdentityOutcome, SuiteConfig, VerificationReport,
    Witness,
};
