use std::fmt;

use serde::{Deserialize, Serialize};

use super::SemanticsError;
use crate::model::{Form, Proposition, Syllogism};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransformKind {
    /// Swap subject and predicate (E and I only).
    Converse,
    /// Flip quality and complement the predicate (all four forms).
    Obverse,
    /// Swap and complement both terms (A and O only).
    Contrapositive,
    /// Exchange the two premises.
    TransposePremises,
}

impl TransformKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TransformKind::Converse => "converse",
            TransformKind::Obverse => "obverse",
            TransformKind::Contrapositive => "contrapositive",
            TransformKind::TransposePremises => "transpose-premises",
        }
    }

    /// Forms for which this is a truth-preserving equivalence.
    pub fn applies_to(self, form: Form) -> bool {
        match self {
            TransformKind::Converse => matches!(form, Form::E | Form::I),
            TransformKind::Obverse => true,
            TransformKind::Contrapositive => matches!(form, Form::A | Form::O),
            TransformKind::TransposePremises => false,
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Major,
    Minor,
    Conclusion,
    Premises,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Major => "major",
            Target::Minor => "minor",
            Target::Conclusion => "conclusion",
            Target::Premises => "premises",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Transformation {
    pub kind: TransformKind,
    pub applied_to: Target,
}

impl Transformation {
    pub fn new(kind: TransformKind, applied_to: Target) -> Self {
        Transformation { kind, applied_to }
    }

    pub fn transpose() -> Self {
        Transformation::new(TransformKind::TransposePremises, Target::Premises)
    }

    pub fn apply(&self, s: &Syllogism) -> Result<Syllogism, SemanticsError> {
        let invalid_target = || SemanticsError::InvalidTarget {
            kind: self.kind,
            target: self.applied_to,
        };
        let mut out = s.clone();
        match (self.kind, self.applied_to) {
            (TransformKind::TransposePremises, Target::Premises) => {
                std::mem::swap(&mut out.major, &mut out.minor);
            }
            (TransformKind::TransposePremises, _) | (_, Target::Premises) => return Err(invalid_target()),
            (kind, Target::Major) => out.major = transform(&s.major, kind)?,
            (kind, Target::Minor) => out.minor = transform(&s.minor, kind)?,
            (kind, Target::Conclusion) => out.conclusion = transform(&s.conclusion, kind)?,
        }
        Ok(out)
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.applied_to)
    }
}

/// Applies an equivalence transformation to a single proposition.
pub fn transform(p: &Proposition, kind: TransformKind) -> Result<Proposition, SemanticsError> {
    if !kind.applies_to(p.form) {
        return Err(SemanticsError::InvalidTransformation { kind, form: p.form });
    }
    Ok(match kind {
        TransformKind::Converse => Proposition::new(p.form, p.predicate.clone(), p.subject.clone()),
        TransformKind::Obverse => {
            let flipped = match p.form {
                Form::A => Form::E,
                Form::E => Form::A,
                Form::I => Form::O,
                Form::O => Form::I,
            };
            Proposition::new(flipped, p.subject.clone(), p.predicate.complement())
        }
        TransformKind::Contrapositive => {
            Proposition::new(p.form, p.predicate.complement(), p.subject.complement())
        }
        TransformKind::TransposePremises => unreachable!("rejected by applies_to"),
    })
}
