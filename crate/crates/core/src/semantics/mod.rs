//! Finite-model semantics.
//!
//! Propositions are read as Boolean set relations with no existential
//! import: `A` is inclusion, `E` disjointness, `I` overlap, `O` non-inclusion.
//! Models have at most three elements; extensions are bitsets.

mod oracle;
mod reduce;
mod square;
mod transform;

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::model::{Form, MalformedSyllogism, Proposition, Term};

pub use oracle::{equivalent, oracle_decide, OracleVerdict};
pub use reduce::{reduce_to_figure1, Reduction, ReductionStep, MAX_REDUCTION_DEPTH};
pub use square::{classify_identity, preserved_under_shrinking, square_relation, IdentityClass, SquareRelation, SquareVerdict};
pub use transform::{transform, Target, TransformKind, Transformation};

/// Largest domain the oracle searches.
pub const MAX_DOMAIN: u8 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("term {0} has no extension in the model")]
    UnboundTerm(Term),
    #[error("square relations need two different forms, got {0} twice")]
    SameForm(Form),
    #[error("{kind} is not an equivalence for {form} propositions")]
    InvalidTransformation { kind: TransformKind, form: Form },
    #[error("{kind} cannot be applied to the {target}")]
    InvalidTarget { kind: TransformKind, target: Target },
    #[error("the syllogism is not valid, so there is nothing to reduce")]
    NotValid,
    #[error("no equivalence derivation to a figure-1 mood within {0} steps")]
    ReductionNotFound(usize),
    #[error(transparent)]
    Malformed(#[from] MalformedSyllogism),
}

/// A finite interpretation: a domain `{0, .., domain-1}` and one extension per
/// base term. Complemented terms are interpreted relative to the domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Model {
    domain: u8,
    extensions: Vec<(Term, u8)>,
}

impl Model {
    /// `extensions` are bitsets over the domain; bit `i` set means element `i`
    /// is in the extension.
    pub fn new(domain: u8, extensions: Vec<(Term, u8)>) -> Self {
        assert!(domain <= 8, "bitset domain limited to 8 elements");
        let full = full_mask(domain);
        let extensions = extensions
            .into_iter()
            .map(|(t, mask)| {
                assert!(mask & !full == 0, "extension of {t} outside domain {domain}");
                (t.base(), mask)
            })
            .collect();
        Model { domain, extensions }
    }

    pub fn domain(&self) -> u8 {
        self.domain
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.extensions.iter().map(|(t, _)| t)
    }

    /// Bitset extension of `term`, complement applied.
    pub fn extension(&self, term: &Term) -> Result<u8, SemanticsError> {
        let base = self
            .extensions
            .iter()
            .find(|(t, _)| t.name() == term.name())
            .map(|&(_, mask)| mask)
            .ok_or_else(|| SemanticsError::UnboundTerm(term.clone()))?;
        Ok(if term.is_complemented() {
            full_mask(self.domain) & !base
        } else {
            base
        })
    }

    /// Elements of the extension of `term`, ascending.
    pub fn elements(&self, term: &Term) -> Result<Vec<u8>, SemanticsError> {
        let mask = self.extension(term)?;
        Ok((0..self.domain).filter(|i| mask & (1 << i) != 0).collect())
    }

    /// Same model with the extension of the base term `term` replaced.
    pub fn with_extension(&self, term: &Term, mask: u8) -> Model {
        let mut out = self.clone();
        for (t, m) in &mut out.extensions {
            if t.name() == term.name() {
                *m = mask;
            }
        }
        out
    }

    fn has_empty_extension(&self) -> bool {
        self.extensions.iter().any(|&(_, m)| m == 0)
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let domain: Vec<String> = (0..self.domain).map(|i| i.to_string()).collect();
        write!(f, "domain {{{}}}", domain.join(","))?;
        for (t, _) in &self.extensions {
            let elems: Vec<String> = self
                .elements(t)
                .expect("own term")
                .iter()
                .map(|i| i.to_string())
                .collect();
            write!(f, ", {t}={{{}}}", elems.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for Model {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(1 + self.extensions.len()))?;
        map.serialize_entry("domain", &self.domain)?;
        for (t, _) in &self.extensions {
            map.serialize_entry(t.name(), &self.elements(t).expect("own term"))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Model {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ModelVisitor;

        impl<'de> Visitor<'de> for ModelVisitor {
            type Value = Model;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a countermodel object {domain: n, TERM: [indices], ...}")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Model, A::Error> {
                use serde::de::Error;
                let mut domain = None;
                let mut extensions = Vec::new();
                while let Some(key) = access.next_key::<String>()? {
                    if key == "domain" {
                        domain = Some(access.next_value::<u8>()?);
                    } else {
                        let term = Term::new(&key).map_err(A::Error::custom)?;
                        let elems: Vec<u8> = access.next_value()?;
                        extensions.push((term, elems));
                    }
                }
                let domain = domain.ok_or_else(|| A::Error::missing_field("domain"))?;
                if domain > MAX_DOMAIN {
                    return Err(A::Error::custom(format!("domain {domain} exceeds {MAX_DOMAIN}")));
                }
                let mut out = Vec::with_capacity(extensions.len());
                for (term, elems) in extensions {
                    let mut mask = 0u8;
                    for e in elems {
                        if e >= domain {
                            return Err(A::Error::custom(format!("element {e} outside domain {domain}")));
                        }
                        mask |= 1 << e;
                    }
                    out.push((term, mask));
                }
                Ok(Model::new(domain, out))
            }
        }

        deserializer.deserialize_map(ModelVisitor)
    }
}

fn full_mask(domain: u8) -> u8 {
    ((1u16 << domain) - 1) as u8
}

/// Truth of `p` in `m`.
pub fn eval(p: &Proposition, m: &Model) -> Result<bool, SemanticsError> {
    let s = m.extension(&p.subject)?;
    let q = m.extension(&p.predicate)?;
    Ok(match p.form {
        Form::A => s & !q == 0,
        Form::E => s & q == 0,
        Form::I => s & q != 0,
        Form::O => s & !q != 0,
    })
}

/// Every model over `terms` with domain size up to [`MAX_DOMAIN`].
///
/// Order: models in which every term has a nonempty extension come first,
/// then the rest; within each group by domain size, then by the extension
/// bitsets compared in `terms` order. The first countermodel found is
/// therefore the smallest one that does not lean on an empty term when such
/// a countermodel exists.
pub fn models(terms: &[Term]) -> Vec<Model> {
    let terms: Vec<Term> = terms.iter().map(Term::base).collect();
    let mut out = Vec::new();
    for domain in 0..=MAX_DOMAIN {
        let subsets = 1usize << domain;
        let total = subsets.pow(terms.len() as u32);
        for code in 0..total {
            // first term is the most significant digit
            let mut rest = code;
            let mut masks = vec![0u8; terms.len()];
            for slot in masks.iter_mut().rev() {
                *slot = (rest % subsets) as u8;
                rest /= subsets;
            }
            out.push(Model {
                domain,
                extensions: terms.iter().cloned().zip(masks).collect(),
            });
        }
    }
    // stable: keeps (domain, masks) order inside each group
    out.sort_by_key(Model::has_empty_extension);
    out
}
