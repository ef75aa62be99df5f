//! The jigsaw calculus.
//!
//! Each proposition becomes a piece with two term edges. An edge is a
//! *knob* when the proposition speaks about the whole extension of that term
//! (the occurrence is distributed) and a *socket* otherwise; every edge
//! carries the proposition's quality as its sign, and the piece carries the
//! proposition's quantity.
//!
//! | form | subject edge | predicate edge | quantity   |
//! |------|--------------|----------------|------------|
//! | A    | knob         | socket         | universal  |
//! | E    | knob         | knob           | universal  |
//! | I    | socket       | socket         | particular |
//! | O    | socket       | knob           | particular |
//!
//! A syllogism is decided by stacking the two premise pieces: the middle
//! term edges must interlock (one knob into one socket, which forms the
//! identity piece `All M is M`), and the conclusion piece must then fit the
//! remaining S and P edges.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Form, MalformedSyllogism, Position, Proposition, Quality, Quantity, Syllogism, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Knob,
    Socket,
}

impl Polarity {
    /// Polarity of the edge at `position` of a proposition with this form.
    pub fn of(form: Form, position: Position) -> Polarity {
        use Polarity::*;
        match (form, position) {
            (Form::A, Position::Subject) | (Form::E, _) | (Form::O, Position::Predicate) => Knob,
            (Form::A, Position::Predicate) | (Form::I, _) | (Form::O, Position::Subject) => Socket,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub term: Term,
    pub polarity: Polarity,
    pub sign: Quality,
}

impl Edge {
    pub fn is_knob(&self) -> bool {
        self.polarity == Polarity::Knob
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = match self.polarity {
            Polarity::Knob => "knob",
            Polarity::Socket => "socket",
        };
        let sign = match self.sign {
            Quality::Affirmative => '+',
            Quality::Negative => '-',
        };
        write!(f, "{}:{shape}{sign}", self.term)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("edge signs differ: a piece has a single quality")]
    MixedSigns,
    #[error("{0:?}/{1:?} edges do not match the {2} piece")]
    IllFormed(Polarity, Polarity, Form),
    #[error("term {0} does not occur in the diagram")]
    MissingTerm(Term),
    #[error("middle term {0} does not occur in both premises")]
    MissingMiddleTerm(Term),
}

/// A well-formed piece. Only the four proposition encodings can be built.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Diagram {
    subject: Edge,
    predicate: Edge,
    quantity: Quantity,
}

impl Diagram {
    /// Checks the edge pair against the four well-formed pieces.
    pub fn from_parts(subject: Edge, predicate: Edge, quantity: Quantity) -> Result<Diagram, DiagramError> {
        if subject.sign != predicate.sign {
            return Err(DiagramError::MixedSigns);
        }
        let form = Form::from_parts(quantity, subject.sign);
        if subject.polarity != Polarity::of(form, Position::Subject)
            || predicate.polarity != Polarity::of(form, Position::Predicate)
        {
            return Err(DiagramError::IllFormed(subject.polarity, predicate.polarity, form));
        }
        Ok(Diagram {
            subject,
            predicate,
            quantity,
        })
    }

    pub fn subject(&self) -> &Edge {
        &self.subject
    }

    pub fn predicate(&self) -> &Edge {
        &self.predicate
    }

    pub fn quantity(&self) -> Quantity {
        self.quantity
    }

    pub fn sign(&self) -> Quality {
        self.subject.sign
    }

    pub fn form(&self) -> Form {
        Form::from_parts(self.quantity, self.subject.sign)
    }

    pub fn proposition(&self) -> Proposition {
        Proposition::new(self.form(), self.subject.term.clone(), self.predicate.term.clone())
    }

    pub fn edge_for(&self, term: &Term) -> Option<&Edge> {
        if &self.subject.term == term {
            Some(&self.subject)
        } else if &self.predicate.term == term {
            Some(&self.predicate)
        } else {
            None
        }
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            subject: Edge,
            predicate: Edge,
            quantity: Quantity,
        }
        let raw = Raw::deserialize(deserializer)?;
        Diagram::from_parts(raw.subject, raw.predicate, raw.quantity).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = match self.quantity {
            Quantity::Universal => "universal",
            Quantity::Particular => "particular",
        };
        write!(f, "[{}]=[{}] {q}", self.subject, self.predicate)
    }
}

pub fn encode(p: &Proposition) -> Diagram {
    let edge = |term: &Term, position| Edge {
        term: term.clone(),
        polarity: Polarity::of(p.form, position),
        sign: p.form.quality(),
    };
    Diagram {
        subject: edge(&p.subject, Position::Subject),
        predicate: edge(&p.predicate, Position::Predicate),
        quantity: p.form.quantity(),
    }
}

/// Why pieces fail to fit. Exactly one is reported per failure: the first
/// rule broken in the order middle junction, then conclusion sign, S edge,
/// P edge, conclusion quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureReason {
    NoKnob,
    TwoKnobs,
    TwoNegatives,
    SignMismatch,
    IllicitMajor,
    IllicitMinor,
    UniversalPremisesParticularConclusion,
}

impl FailureReason {
    pub fn as_str(self) -> &'static str {
        match self {
            FailureReason::NoKnob => "no-knob",
            FailureReason::TwoKnobs => "two-knobs",
            FailureReason::TwoNegatives => "two-negatives",
            FailureReason::SignMismatch => "sign-mismatch",
            FailureReason::IllicitMajor => "illicit-major",
            FailureReason::IllicitMinor => "illicit-minor",
            FailureReason::UniversalPremisesParticularConclusion => {
                "universal-premises-particular-conclusion"
            }
        }
    }

    pub fn explanation(self) -> &'static str {
        match self {
            FailureReason::NoKnob => "both middle edges are sockets, so nothing locks them together",
            FailureReason::TwoKnobs => "both middle edges are knobs and cannot lock into each other",
            FailureReason::TwoNegatives => "both premises are negative",
            FailureReason::SignMismatch => {
                "the conclusion must be negative exactly when one premise is negative"
            }
            FailureReason::IllicitMajor => "the conclusion needs a knob on P but the major premise offers a socket",
            FailureReason::IllicitMinor => "the conclusion needs a knob on S but the minor premise offers a socket",
            FailureReason::UniversalPremisesParticularConclusion => {
                "two universal pieces cannot produce a particular conclusion"
            }
        }
    }
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The middle-term junction of two premise pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Junction {
    pub major_edge: Edge,
    pub minor_edge: Edge,
    pub failure: Option<FailureReason>,
}

impl Junction {
    pub fn interlocks(&self) -> bool {
        self.failure.is_none()
    }
}

/// Holds iff exactly one middle edge is a knob and not both premises are
/// negative. A successful junction is the identity piece A(M, M).
pub fn middle_interlocks(major: &Diagram, minor: &Diagram, middle: &Term) -> Result<Junction, DiagramError> {
    let missing = || DiagramError::MissingMiddleTerm(middle.clone());
    let major_edge = major.edge_for(middle).ok_or_else(missing)?.clone();
    let minor_edge = minor.edge_for(middle).ok_or_else(missing)?.clone();
    let failure = if major.sign() == Quality::Negative && minor.sign() == Quality::Negative {
        Some(FailureReason::TwoNegatives)
    } else {
        match (major_edge.is_knob(), minor_edge.is_knob()) {
            (false, false) => Some(FailureReason::NoKnob),
            (true, true) => Some(FailureReason::TwoKnobs),
            _ => None,
        }
    };
    Ok(Junction {
        major_edge,
        minor_edge,
        failure,
    })
}

/// Checks that the conclusion piece fits the S and P edges left over by the
/// premises. `None` means it fits.
pub fn conclusion_fits(
    major: &Diagram,
    minor: &Diagram,
    conclusion: &Diagram,
) -> Result<Option<FailureReason>, DiagramError> {
    let negatives = [major, minor]
        .iter()
        .filter(|d| d.sign() == Quality::Negative)
        .count();
    if (conclusion.sign() == Quality::Negative) != (negatives == 1) {
        return Ok(Some(FailureReason::SignMismatch));
    }
    let s_edge = &conclusion.subject;
    let premise_s = minor
        .edge_for(&s_edge.term)
        .ok_or_else(|| DiagramError::MissingTerm(s_edge.term.clone()))?;
    if s_edge.is_knob() && !premise_s.is_knob() {
        return Ok(Some(FailureReason::IllicitMinor));
    }
    let p_edge = &conclusion.predicate;
    let premise_p = major
        .edge_for(&p_edge.term)
        .ok_or_else(|| DiagramError::MissingTerm(p_edge.term.clone()))?;
    if p_edge.is_knob() && !premise_p.is_knob() {
        return Ok(Some(FailureReason::IllicitMajor));
    }
    if major.quantity == Quantity::Universal
        && minor.quantity == Quantity::Universal
        && conclusion.quantity == Quantity::Particular
    {
        return Ok(Some(FailureReason::UniversalPremisesParticularConclusion));
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Valid,
    Invalid,
}

impl Verdict {
    pub fn from_bool(valid: bool) -> Self {
        if valid {
            Verdict::Valid
        } else {
            Verdict::Invalid
        }
    }

    pub fn is_valid(self) -> bool {
        self == Verdict::Valid
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Valid => "valid",
            Verdict::Invalid => "invalid",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InterlockTrace {
    pub middle_edges: (Edge, Edge),
    pub ip_formed: bool,
    pub conclusion_fit: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_reason: Option<FailureReason>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub syllogism: Syllogism,
    pub verdict: Verdict,
    pub trace: InterlockTrace,
    pub pieces: [Diagram; 3],
}

impl Decision {
    /// Multi-line text rendering of the assembly.
    pub fn render_trace(&self) -> String {
        let [major, minor, conclusion] = &self.pieces;
        let (me, ne) = &self.trace.middle_edges;
        let mut out = String::new();
        let _ = writeln!(out, "major       {:<14} {major}", self.syllogism.major.to_string());
        let _ = writeln!(out, "minor       {:<14} {minor}", self.syllogism.minor.to_string());
        let middle = &me.term;
        if self.trace.ip_formed {
            let _ = writeln!(
                out,
                "middle      {me} + {ne} interlock => identity piece {middle}A{middle} formed",
            );
        } else {
            let reason = self.trace.failure_reason.expect("failure reason on broken junction");
            let _ = writeln!(out, "middle      {me} + {ne} do not interlock: {}", reason.explanation());
            let _ = writeln!(out, "            ({reason})");
            let _ = write!(out, "result      invalid");
            return out;
        }
        let _ = writeln!(out, "conclusion  {:<14} {conclusion}", self.syllogism.conclusion.to_string());
        match self.trace.failure_reason {
            None => {
                let _ = writeln!(out, "            S and P edges fit the remaining premise edges");
                let _ = write!(out, "result      ⊢ {}  valid", self.syllogism.conclusion);
            }
            Some(reason) => {
                let _ = writeln!(out, "            conclusion does not fit: {}", reason.explanation());
                let _ = writeln!(out, "            ({reason})");
                let _ = write!(out, "result      invalid");
            }
        }
        out
    }
}

/// Decides a standard-form syllogism by assembling its pieces.
pub fn decide(s: &Syllogism) -> Result<Decision, MalformedSyllogism> {
    let roles = s.roles()?;
    let major = encode(&s.major);
    let minor = encode(&s.minor);
    let conclusion = encode(&s.conclusion);
    let junction = middle_interlocks(&major, &minor, &roles.middle_term)
        .expect("standard form guarantees the middle term in both premises");
    let ip_formed = junction.interlocks();
    let failure = if ip_formed {
        conclusion_fits(&major, &minor, &conclusion).expect("standard form guarantees S and P edges")
    } else {
        junction.failure
    };
    let conclusion_fit = ip_formed && failure.is_none();
    Ok(Decision {
        syllogism: s.clone(),
        verdict: Verdict::from_bool(conclusion_fit),
        trace: InterlockTrace {
            middle_edges: (junction.major_edge, junction.minor_edge),
            ip_formed,
            conclusion_fit,
            failure_reason: failure,
        },
        pieces: [major, minor, conclusion],
    })
}

/// Verdict only, without building the trace.
pub fn verdict(s: &Syllogism) -> Result<Verdict, MalformedSyllogism> {
    decide(s).map(|d| d.verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{enumerate_all, Mood};
    use crate::notation::{parse_proposition, parse_syllogism};

    fn diagram(text: &str) -> Diagram {
        encode(&parse_proposition(text).unwrap())
    }

    fn edge(term: Term, polarity: Polarity, sign: Quality) -> Edge {
        Edge { term, polarity, sign }
    }

    #[test]
    fn encodings() {
        use Polarity::*;
        use Quality::*;
        let a = diagram("SAP");
        assert_eq!(a.subject(), &edge(Term::s(), Knob, Affirmative));
        assert_eq!(a.predicate(), &edge(Term::p(), Socket, Affirmative));
        assert_eq!(a.quantity(), Quantity::Universal);
        let e = diagram("SEP");
        assert_eq!(e.subject(), &edge(Term::s(), Knob, Negative));
        assert_eq!(e.predicate(), &edge(Term::p(), Knob, Negative));
        let i = diagram("SIP");
        assert_eq!(i.subject(), &edge(Term::s(), Socket, Affirmative));
        assert_eq!(i.predicate(), &edge(Term::p(), Socket, Affirmative));
        assert_eq!(i.quantity(), Quantity::Particular);
        let o = diagram("SOP");
        assert_eq!(o.subject().polarity, Socket);
        assert_eq!(o.predicate().polarity, Knob);
    }

    #[test]
    fn only_four_pieces_are_well_formed() {
        use Polarity::*;
        let mut well_formed = 0;
        for sp in [Knob, Socket] {
            for pp in [Knob, Socket] {
                for sign in [Quality::Affirmative, Quality::Negative] {
                    for q in [Quantity::Universal, Quantity::Particular] {
                        let d = Diagram::from_parts(edge(Term::s(), sp, sign), edge(Term::p(), pp, sign), q);
                        if let Ok(d) = d {
                            well_formed += 1;
                            assert_eq!(encode(&d.proposition()), d);
                        }
                    }
                }
            }
        }
        assert_eq!(well_formed, 4);
        assert_eq!(
            Diagram::from_parts(
                edge(Term::s(), Knob, Quality::Affirmative),
                edge(Term::p(), Knob, Quality::Negative),
                Quantity::Universal
            ),
            Err(DiagramError::MixedSigns)
        );
    }

    #[test]
    fn diagram_json_field_names() {
        let json = serde_json::to_value(diagram("MAP")).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "subject": {"term": "M", "polarity": "knob", "sign": "affirmative"},
                "predicate": {"term": "P", "polarity": "socket", "sign": "affirmative"},
                "quantity": "universal"
            })
        );
        let back: Diagram = serde_json::from_value(json).unwrap();
        assert_eq!(back, diagram("MAP"));
        let bad = serde_json::json!({
            "subject": {"term": "M", "polarity": "socket", "sign": "affirmative"},
            "predicate": {"term": "P", "polarity": "knob", "sign": "affirmative"},
            "quantity": "universal"
        });
        assert!(serde_json::from_value::<Diagram>(bad).is_err());
    }

    #[test]
    fn middle_junctions() {
        let barbara = middle_interlocks(&diagram("MAP"), &diagram("SAM"), &Term::m()).unwrap();
        assert!(barbara.interlocks());
        let iii = middle_interlocks(&diagram("MIP"), &diagram("SIM"), &Term::m()).unwrap();
        assert_eq!(iii.failure, Some(FailureReason::NoKnob));
        for (maj, min) in [("MEP", "SEM"), ("PEM", "SEM"), ("MEP", "MES"), ("PEM", "MES")] {
            let j = middle_interlocks(&diagram(maj), &diagram(min), &Term::m()).unwrap();
            assert_eq!(j.failure, Some(FailureReason::TwoNegatives), "{maj} {min}");
        }
        assert_eq!(
            middle_interlocks(&diagram("MAP"), &diagram("SAQ"), &Term::m()),
            Err(DiagramError::MissingMiddleTerm(Term::m()))
        );
    }

    #[test]
    fn conclusion_fit() {
        let fit = |maj: &str, min: &str, con: &str| {
            conclusion_fits(&diagram(maj), &diagram(min), &diagram(con)).unwrap()
        };
        assert_eq!(fit("MAP", "SAM", "SAP"), None);
        assert_eq!(
            fit("MEP", "SAM", "SOP"),
            Some(FailureReason::UniversalPremisesParticularConclusion)
        );
        assert_eq!(fit("PIM", "MES", "SOP"), Some(FailureReason::IllicitMajor));
        assert_eq!(fit("MEP", "SAM", "SAP"), Some(FailureReason::SignMismatch));
        assert_eq!(fit("PAM", "MES", "SEP"), None);
    }

    #[test]
    fn decisions() {
        let valid = |t: &str| decide(&parse_syllogism(t).unwrap()).unwrap().verdict;
        assert_eq!(valid("MAP,SAM=>SAP"), Verdict::Valid);
        assert_eq!(valid("PAM,SAM=>SAP"), Verdict::Invalid);
        let aaa2 = decide(&parse_syllogism("PAM,SAM=>SAP").unwrap()).unwrap();
        assert_eq!(aaa2.trace.failure_reason, Some(FailureReason::NoKnob));
        assert!(!aaa2.trace.ip_formed);
    }

    #[test]
    fn exactly_the_named_moods_are_valid() {
        for s in enumerate_all() {
            let d = decide(&s).unwrap();
            let named = s.mood().unwrap().mnemonic().is_some();
            assert_eq!(d.verdict.is_valid(), named, "{s}");
            assert_eq!(d.trace.failure_reason.is_none(), d.verdict.is_valid());
            assert_eq!(d.trace.ip_formed && d.trace.conclusion_fit, d.verdict.is_valid());
            assert_eq!(decide(&s).unwrap(), d);
        }
    }

    #[test]
    fn traces_render() {
        let d = decide(&Mood::from_mnemonic("Barbara").unwrap().syllogism()).unwrap();
        let text = d.render_trace();
        assert!(text.contains("identity piece MAM formed"), "{text}");
        assert!(text.ends_with("valid"));
        let d = decide(&parse_syllogism("MIP,SIM=>SIP").unwrap()).unwrap();
        assert!(d.render_trace().contains("(no-knob)"));
    }

    #[test]
    fn trace_json() {
        let d = decide(&parse_syllogism("MIP,SIM=>SIP").unwrap()).unwrap();
        let json = serde_json::to_value(&d.trace).unwrap();
        assert_eq!(json["failureReason"], "no-knob");
        assert_eq!(json["ipFormed"], false);
        assert_eq!(json["middleEdges"][0]["polarity"], "socket");
        let back: InterlockTrace = serde_json::from_value(json).unwrap();
        assert_eq!(back, d.trace);
    }
}
