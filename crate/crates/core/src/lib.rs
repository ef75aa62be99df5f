//! Decision procedure for categorical syllogisms.
//!
//! * [`model`]: terms, propositions, syllogisms, figures, moods.
//! * [`notation`]: the `MAP,SAM=>SAP` string notation.
//! * [`diagram`]: jigsaw pieces and the interlock decider.
//! * [`semantics`]: finite-model oracle, square of opposition, equivalence
//!   transformations and reduction to the first figure.
//! * [`batch`]: bulk evaluation, parallel when the `parallel` feature is on.
//! * [`game`]: arcade and quiz sessions, scoring, rankings, learning pages.

pub mod batch;
pub mod diagram;
pub mod game;
pub mod model;
pub mod notation;
pub mod semantics;

pub use diagram::{decide, encode, Decision, Diagram, FailureReason, Verdict};
pub use model::{enumerate_all, Figure, Form, Mood, Proposition, Syllogism, Term};
pub use notation::{parse_proposition, parse_syllogism, parse_syllogism_or_name, print_syllogism};
pub use semantics::{oracle_decide, reduce_to_figure1, Model};
