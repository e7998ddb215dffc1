//! Instance generators and the structural-lemma registry.

mod families;
mod lemmas;

pub use families::{exhaustive_instances, generate, FamilyKind, Instance, InstanceFamily, Params};
pub use lemmas::{
    registry, run_lemma_suite, write_bundle, Conclusion, Hypothesis, Lemma, LemmaCheck,
    LemmaReport, Requirement, SuiteSummary, ViolationWitness,
};
