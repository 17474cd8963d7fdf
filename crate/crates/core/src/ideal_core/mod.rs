//! Ideal functions, terms over them and presented groups.

mod function;
mod group;
mod term;

pub use function::{Conv, IdealFunction, Nested};
pub use group::{continuous_term, Base, MembershipVerdict, PresentedGroup, SearchBudget, TermPool, ValidationReport};
pub use term::Term;
