use serde::{Deserialize, Serialize};

use super::{eval, models, Model, SemanticsError};
use crate::model::{Form, Position, Proposition, Quantity, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityClass {
    LogicalTruth,
    Contingent,
    Contradiction,
}

/// Classifies the self-predication `form(M, M)` by evaluating it in every model.
pub fn classify_identity(form: Form) -> IdentityClass {
    let m = Term::m();
    let p = Proposition::new(form, m.clone(), m.clone());
    let (mut seen_true, mut seen_false) = (false, false);
    for model in models(&[m]) {
        if eval(&p, &model).expect("bound") {
            seen_true = true;
        } else {
            seen_false = true;
        }
    }
    match (seen_true, seen_false) {
        (true, false) => IdentityClass::LogicalTruth,
        (false, true) => IdentityClass::Contradiction,
        _ => IdentityClass::Contingent,
    }
}

/// Classical relations between corners of the square of opposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SquareRelation {
    /// Never both true, never both false.
    Contradictory,
    /// Never both true.
    Contrary,
    /// Never both false.
    Subcontrary,
    /// The universal implies the particular of the same quality.
    Subaltern,
}

impl SquareRelation {
    pub fn classify(f1: Form, f2: Form) -> Option<SquareRelation> {
        use Form::*;
        let pair = if f1 <= f2 { (f1, f2) } else { (f2, f1) };
        match pair {
            (A, O) | (E, I) => Some(SquareRelation::Contradictory),
            (A, E) => Some(SquareRelation::Contrary),
            (I, O) => Some(SquareRelation::Subcontrary),
            (A, I) | (E, O) => Some(SquareRelation::Subaltern),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SquareVerdict {
    pub relation: SquareRelation,
    pub holds_in_modern: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub countermodel: Option<Model>,
}

/// Classical label for the pair plus whether the relation survives in every
/// finite model, with the first model that breaks it.
pub fn square_relation(f1: Form, f2: Form) -> Result<SquareVerdict, SemanticsError> {
    let relation = SquareRelation::classify(f1, f2).ok_or(SemanticsError::SameForm(f1))?;
    let (s, p) = (Term::s(), Term::p());
    let first = Proposition::new(f1, s.clone(), p.clone());
    let second = Proposition::new(f2, s.clone(), p.clone());
    // the universal corner comes first for subalternation
    let (upper, lower) = if f1.quantity() == Quantity::Particular && f2.quantity() == Quantity::Universal {
        (&second, &first)
    } else {
        (&first, &second)
    };
    let broken = |m: &Model| {
        let a = eval(upper, m).expect("bound");
        let b = eval(lower, m).expect("bound");
        match relation {
            SquareRelation::Contradictory => a == b,
            SquareRelation::Contrary => a && b,
            SquareRelation::Subcontrary => !a && !b,
            SquareRelation::Subaltern => a && !b,
        }
    };
    let countermodel = models(&[s, p]).into_iter().find(broken);
    Ok(SquareVerdict {
        relation,
        holds_in_modern: countermodel.is_none(),
        countermodel,
    })
}

/// Whether the truth of `form` survives shrinking the extension of the term
/// at `position`, in every model. This is the semantic content of
/// distribution.
pub fn preserved_under_shrinking(form: Form, position: Position) -> bool {
    let (s, p) = (Term::s(), Term::p());
    let prop = Proposition::new(form, s.clone(), p.clone());
    let target = prop.term_at(position).clone();
    models(&[s, p]).iter().all(|m| {
        if !eval(&prop, m).expect("bound") {
            return true;
        }
        let ext = m.extension(&target).expect("bound");
        // every submask of ext
        let mut sub = ext;
        loop {
            if !eval(&prop, &m.with_extension(&target, sub)).expect("bound") {
                return false;
            }
            if sub == 0 {
                return true;
            }
            sub = (sub - 1) & ext;
        }
    })
}
