//! Terms, categorical propositions, syllogisms, figures and moods.
//!
//! Everything here is an immutable value. A [`Syllogism`] is just three
//! propositions; whether it is in standard form (three terms, middle term in
//! both premises, absent from the conclusion) is checked on demand by
//! [`Syllogism::roles`], because the equivalence reductions pass through
//! triples that are not.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid term name {0:?}: expected an uppercase letter followed by uppercase letters or digits")]
    InvalidTermName(String),
    #[error("unknown mood name {0:?}")]
    UnknownName(String),
    #[error("invalid mood {0:?}: expected three form letters, a dash and a figure, e.g. AAA-1")]
    InvalidMood(String),
}

/// A term occurrence. `complemented` marks "non-X" and only arises from
/// obversion and contraposition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    name: Arc<str>,
    complemented: bool,
}

impl Term {
    pub fn new(name: &str) -> Result<Self, ModelError> {
        if is_valid_term_name(name) {
            Ok(Term {
                name: Arc::from(name),
                complemented: false,
            })
        } else {
            Err(ModelError::InvalidTermName(name.to_owned()))
        }
    }

    pub(crate) fn from_valid(name: &str) -> Self {
        debug_assert!(is_valid_term_name(name));
        Term {
            name: Arc::from(name),
            complemented: false,
        }
    }

    /// The minor term `S`.
    pub fn s() -> Self {
        Term::from_valid("S")
    }

    /// The middle term `M`.
    pub fn m() -> Self {
        Term::from_valid("M")
    }

    /// The major term `P`.
    pub fn p() -> Self {
        Term::from_valid("P")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_complemented(&self) -> bool {
        self.complemented
    }

    pub fn complement(&self) -> Self {
        Term {
            name: Arc::clone(&self.name),
            complemented: !self.complemented,
        }
    }

    /// The uncomplemented term with the same name.
    pub fn base(&self) -> Self {
        Term {
            name: Arc::clone(&self.name),
            complemented: false,
        }
    }

    /// True when the printed form is a single character (`S`, not `~S` or `DOG`).
    pub fn is_single_letter(&self) -> bool {
        !self.complemented && self.name.len() == 1
    }
}

pub(crate) fn is_valid_term_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_uppercase())
        && chars.all(|c| c.is_ascii_uppercase() || c.is_ascii_digit())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complemented {
            write!(f, "~{}", self.name)
        } else {
            f.write_str(&self.name)
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({self})")
    }
}

impl FromStr for Term {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_prefix('~') {
            Some(rest) => Term::new(rest).map(|t| t.complement()),
            None => Term::new(s),
        }
    }
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Term {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Universal,
    Particular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quality {
    Affirmative,
    Negative,
}

/// Which slot of a proposition a term occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Position {
    Subject,
    Predicate,
}

impl Position {
    pub const BOTH: [Position; 2] = [Position::Subject, Position::Predicate];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Form {
    A,
    E,
    I,
    O,
}

impl Form {
    pub const ALL: [Form; 4] = [Form::A, Form::E, Form::I, Form::O];

    pub fn letter(self) -> char {
        match self {
            Form::A => 'A',
            Form::E => 'E',
            Form::I => 'I',
            Form::O => 'O',
        }
    }

    pub fn from_letter(c: char) -> Option<Form> {
        match c {
            'A' => Some(Form::A),
            'E' => Some(Form::E),
            'I' => Some(Form::I),
            'O' => Some(Form::O),
            _ => None,
        }
    }

    pub fn quantity(self) -> Quantity {
        match self {
            Form::A | Form::E => Quantity::Universal,
            Form::I | Form::O => Quantity::Particular,
        }
    }

    pub fn quality(self) -> Quality {
        match self {
            Form::A | Form::I => Quality::Affirmative,
            Form::E | Form::O => Quality::Negative,
        }
    }

    pub fn from_parts(quantity: Quantity, quality: Quality) -> Form {
        match (quantity, quality) {
            (Quantity::Universal, Quality::Affirmative) => Form::A,
            (Quantity::Universal, Quality::Negative) => Form::E,
            (Quantity::Particular, Quality::Affirmative) => Form::I,
            (Quantity::Particular, Quality::Negative) => Form::O,
        }
    }

    /// English reading with placeholder terms.
    pub fn reading(self, subject: &str, predicate: &str) -> String {
        match self {
            Form::A => format!("All {subject} is {predicate}"),
            Form::E => format!("No {subject} is {predicate}"),
            Form::I => format!("Some {subject} are {predicate}"),
            Form::O => format!("Some {subject} are not {predicate}"),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Proposition {
    pub form: Form,
    pub subject: Term,
    pub predicate: Term,
}

impl Proposition {
    pub fn new(form: Form, subject: Term, predicate: Term) -> Self {
        Proposition {
            form,
            subject,
            predicate,
        }
    }

    pub fn term_at(&self, position: Position) -> &Term {
        match position {
            Position::Subject => &self.subject,
            Position::Predicate => &self.predicate,
        }
    }

    pub fn position_of(&self, term: &Term) -> Option<Position> {
        if &self.subject == term {
            Some(Position::Subject)
        } else if &self.predicate == term {
            Some(Position::Predicate)
        } else {
            None
        }
    }

    pub fn contains(&self, term: &Term) -> bool {
        self.position_of(term).is_some()
    }

    /// The term that is not `term`, if `term` occurs here.
    pub fn other_term(&self, term: &Term) -> Option<&Term> {
        match self.position_of(term)? {
            Position::Subject => Some(&self.predicate),
            Position::Predicate => Some(&self.subject),
        }
    }
}

impl fmt::Debug for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Proposition({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Figure {
    One = 1,
    Two = 2,
    Three = 3,
    Four = 4,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::One, Figure::Two, Figure::Three, Figure::Four];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(n: u8) -> Option<Figure> {
        Figure::ALL.get(usize::from(n).checked_sub(1)?).copied()
    }

    /// Figure from the position of the middle term in (major, minor).
    pub fn from_middle_positions(in_major: Position, in_minor: Position) -> Figure {
        match (in_major, in_minor) {
            (Position::Subject, Position::Predicate) => Figure::One,
            (Position::Predicate, Position::Predicate) => Figure::Two,
            (Position::Subject, Position::Subject) => Figure::Three,
            (Position::Predicate, Position::Subject) => Figure::Four,
        }
    }

    pub fn middle_positions(self) -> (Position, Position) {
        match self {
            Figure::One => (Position::Subject, Position::Predicate),
            Figure::Two => (Position::Predicate, Position::Predicate),
            Figure::Three => (Position::Subject, Position::Subject),
            Figure::Four => (Position::Predicate, Position::Subject),
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for Figure {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.number())
    }
}

impl<'de> Deserialize<'de> for Figure {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let n = u8::deserialize(deserializer)?;
        Figure::from_number(n).ok_or_else(|| serde::de::Error::custom(format!("no figure {n}")))
    }
}

/// Which rule of standard form a triple of propositions breaks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MalformedSyllogism {
    #[error("the {0} uses the same term as subject and predicate")]
    RepeatedTerm(Slot),
    #[error("the major premise does not contain the conclusion's predicate {0}")]
    MajorLacksPredicate(Term),
    #[error("the minor premise does not contain the conclusion's subject {0}")]
    MinorLacksSubject(Term),
    #[error("the middle term {0} occurs in the conclusion")]
    MiddleInConclusion(Term),
    #[error("the premises share no middle term ({0} in the major, {1} in the minor): four terms")]
    NoCommonMiddle(Term, Term),
}

/// One of the three propositions of a syllogism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    Major,
    Minor,
    Conclusion,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::Major => "major premise",
            Slot::Minor => "minor premise",
            Slot::Conclusion => "conclusion",
        })
    }
}

/// Structural roles of a standard-form syllogism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Roles {
    pub minor_term: Term,
    pub middle_term: Term,
    pub major_term: Term,
    pub figure: Figure,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Syllogism {
    pub major: Proposition,
    pub minor: Proposition,
    pub conclusion: Proposition,
}

impl Syllogism {
    pub fn new(major: Proposition, minor: Proposition, conclusion: Proposition) -> Self {
        Syllogism {
            major,
            minor,
            conclusion,
        }
    }

    pub fn get(&self, slot: Slot) -> &Proposition {
        match slot {
            Slot::Major => &self.major,
            Slot::Minor => &self.minor,
            Slot::Conclusion => &self.conclusion,
        }
    }

    pub fn propositions(&self) -> [&Proposition; 3] {
        [&self.major, &self.minor, &self.conclusion]
    }

    /// Checks standard form and assigns S, M, P and the figure.
    pub fn roles(&self) -> Result<Roles, MalformedSyllogism> {
        for slot in [Slot::Major, Slot::Minor, Slot::Conclusion] {
            let p = self.get(slot);
            if p.subject == p.predicate {
                return Err(MalformedSyllogism::RepeatedTerm(slot));
            }
        }
        let minor_term = &self.conclusion.subject;
        let major_term = &self.conclusion.predicate;
        let from_major = self
            .major
            .other_term(major_term)
            .ok_or_else(|| MalformedSyllogism::MajorLacksPredicate(major_term.clone()))?;
        let from_minor = self
            .minor
            .other_term(minor_term)
            .ok_or_else(|| MalformedSyllogism::MinorLacksSubject(minor_term.clone()))?;
        if from_major == minor_term {
            return Err(MalformedSyllogism::MiddleInConclusion(from_major.clone()));
        }
        if from_minor == major_term {
            return Err(MalformedSyllogism::MiddleInConclusion(from_minor.clone()));
        }
        if from_major != from_minor {
            return Err(MalformedSyllogism::NoCommonMiddle(
                from_major.clone(),
                from_minor.clone(),
            ));
        }
        let middle = from_major;
        let figure = Figure::from_middle_positions(
            self.major.position_of(middle).expect("middle term in major"),
            self.minor.position_of(middle).expect("middle term in minor"),
        );
        Ok(Roles {
            minor_term: minor_term.clone(),
            middle_term: middle.clone(),
            major_term: major_term.clone(),
            figure,
        })
    }

    pub fn figure(&self) -> Result<Figure, MalformedSyllogism> {
        self.roles().map(|r| r.figure)
    }

    pub fn mood(&self) -> Result<Mood, MalformedSyllogism> {
        let figure = self.figure()?;
        Ok(Mood::new(
            self.major.form,
            self.minor.form,
            self.conclusion.form,
            figure,
        ))
    }

    pub fn is_standard_form(&self) -> bool {
        self.roles().is_ok()
    }

    /// Every distinct base term name, in order of first appearance.
    pub fn base_terms(&self) -> Vec<Term> {
        let mut out: Vec<Term> = Vec::with_capacity(3);
        for p in self.propositions() {
            for t in [&p.subject, &p.predicate] {
                let base = t.base();
                if !out.contains(&base) {
                    out.push(base);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Syllogism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syllogism({self})")
    }
}

/// Convenience: the figure of a standard-form syllogism.
pub fn figure_of(s: &Syllogism) -> Result<Figure, MalformedSyllogism> {
    s.figure()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mood {
    pub figure: Figure,
    pub major: Form,
    pub minor: Form,
    pub conclusion: Form,
}

/// Medieval names of the valid moods, by figure.
const MNEMONICS: [(&str, [Form; 3], Figure); 15] = {
    use Figure::*;
    use Form::*;
    [
        ("Barbara", [A, A, A], One),
        ("Celarent", [E, A, E], One),
        ("Darii", [A, I, I], One),
        ("Ferio", [E, I, O], One),
        ("Cesare", [E, A, E], Two),
        ("Camestres", [A, E, E], Two),
        ("Festino", [E, I, O], Two),
        ("Baroco", [A, O, O], Two),
        ("Disamis", [I, A, I], Three),
        ("Datisi", [A, I, I], Three),
        ("Bocardo", [O, A, O], Three),
        ("Ferison", [E, I, O], Three),
        ("Camenes", [A, E, E], Four),
        ("Dimaris", [I, A, I], Four),
        ("Fresison", [E, I, O], Four),
    ]
};

impl Mood {
    pub fn new(major: Form, minor: Form, conclusion: Form, figure: Figure) -> Self {
        Mood {
            figure,
            major,
            minor,
            conclusion,
        }
    }

    /// All 256 moods: figure-major, then forms in A<E<I<O order.
    pub fn all() -> impl Iterator<Item = Mood> {
        Figure::ALL.into_iter().flat_map(|figure| {
            Form::ALL.into_iter().flat_map(move |major| {
                Form::ALL.into_iter().flat_map(move |minor| {
                    Form::ALL
                        .into_iter()
                        .map(move |conclusion| Mood::new(major, minor, conclusion, figure))
                })
            })
        })
    }

    /// The 15 named moods, in table order (by figure, then row).
    pub fn named() -> impl Iterator<Item = (&'static str, Mood)> {
        MNEMONICS
            .iter()
            .map(|&(name, [a, b, c], fig)| (name, Mood::new(a, b, c, fig)))
    }

    pub fn mnemonic(&self) -> Option<&'static str> {
        Mood::named().find(|(_, m)| m == self).map(|(name, _)| name)
    }

    pub fn from_mnemonic(name: &str) -> Result<Mood, ModelError> {
        Mood::named()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, m)| m)
            .ok_or_else(|| ModelError::UnknownName(name.to_owned()))
    }

    /// The mood instantiated over S, M, P.
    pub fn syllogism(&self) -> Syllogism {
        self.instantiate(&Term::s(), &Term::m(), &Term::p())
    }

    pub fn instantiate(&self, minor_term: &Term, middle: &Term, major_term: &Term) -> Syllogism {
        let (m_major, m_minor) = self.figure.middle_positions();
        let major = match m_major {
            Position::Subject => Proposition::new(self.major, middle.clone(), major_term.clone()),
            Position::Predicate => Proposition::new(self.major, major_term.clone(), middle.clone()),
        };
        let minor = match m_minor {
            Position::Subject => Proposition::new(self.minor, middle.clone(), minor_term.clone()),
            Position::Predicate => Proposition::new(self.minor, minor_term.clone(), middle.clone()),
        };
        let conclusion = Proposition::new(self.conclusion, minor_term.clone(), major_term.clone());
        Syllogism::new(major, minor, conclusion)
    }
}

impl fmt::Display for Mood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}-{}", self.major, self.minor, self.conclusion, self.figure)
    }
}

impl FromStr for Mood {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ModelError::InvalidMood(s.to_owned());
        let chars: Vec<char> = s.trim().chars().collect();
        if chars.len() != 5 || chars[3] != '-' {
            return Err(bad());
        }
        let form = |c: char| Form::from_letter(c.to_ascii_uppercase()).ok_or_else(bad);
        let figure = chars[4]
            .to_digit(10)
            .and_then(|d| Figure::from_number(d as u8))
            .ok_or_else(bad)?;
        Ok(Mood::new(form(chars[0])?, form(chars[1])?, form(chars[2])?, figure))
    }
}

impl Serialize for Mood {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Mood {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

pub fn mnemonic_of(mood: &Mood) -> Option<&'static str> {
    mood.mnemonic()
}

pub fn mood_of(name: &str) -> Result<Mood, ModelError> {
    Mood::from_mnemonic(name)
}

/// The full space of 256 standard-form syllogisms over S, M, P.
pub fn enumerate_all() -> Vec<Syllogism> {
    Mood::all().map(|m| m.syllogism()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prop(form: Form, s: &str, p: &str) -> Proposition {
        Proposition::new(form, Term::new(s).unwrap(), Term::new(p).unwrap())
    }

    #[test]
    fn term_names() {
        assert!(Term::new("DOG").is_ok());
        assert!(Term::new("X1").is_ok());
        assert!(Term::new("").is_err());
        assert!(Term::new("dog").is_err());
        assert!(Term::new("1X").is_err());
        let t = Term::m();
        assert_eq!(t.complement().complement(), t);
        assert_eq!(t.complement().to_string(), "~M");
        assert_eq!("~M".parse::<Term>().unwrap(), t.complement());
    }

    #[test]
    fn quantity_and_quality() {
        use Quality::*;
        use Quantity::*;
        let table = [
            (Form::A, Universal, Affirmative),
            (Form::E, Universal, Negative),
            (Form::I, Particular, Affirmative),
            (Form::O, Particular, Negative),
        ];
        for (form, quantity, quality) in table {
            assert_eq!(form.quantity(), quantity);
            assert_eq!(form.quality(), quality);
            assert_eq!(Form::from_parts(quantity, quality), form);
        }
    }

    #[test]
    fn figures_from_table() {
        let barbara = Syllogism::new(
            prop(Form::A, "M", "P"),
            prop(Form::A, "S", "M"),
            prop(Form::A, "S", "P"),
        );
        assert_eq!(figure_of(&barbara), Ok(Figure::One));
        let camenes = Syllogism::new(
            prop(Form::A, "P", "M"),
            prop(Form::E, "M", "S"),
            prop(Form::E, "S", "P"),
        );
        assert_eq!(figure_of(&camenes), Ok(Figure::Four));
        let aaa3 = Syllogism::new(
            prop(Form::A, "M", "P"),
            prop(Form::A, "M", "S"),
            prop(Form::A, "S", "P"),
        );
        assert_eq!(figure_of(&aaa3), Ok(Figure::Three));
    }

    #[test]
    fn malformed_syllogisms() {
        let middle_in_conclusion = Syllogism::new(
            prop(Form::A, "M", "P"),
            prop(Form::A, "S", "M"),
            prop(Form::A, "M", "P"),
        );
        assert!(matches!(
            middle_in_conclusion.roles(),
            Err(MalformedSyllogism::MiddleInConclusion(t)) if t.name() == "M"
        ));
        let four_terms = Syllogism::new(
            prop(Form::A, "M", "P"),
            prop(Form::A, "S", "N"),
            prop(Form::A, "S", "P"),
        );
        assert!(matches!(
            four_terms.roles(),
            Err(MalformedSyllogism::NoCommonMiddle(_, _))
        ));
        let no_p = Syllogism::new(
            prop(Form::A, "M", "Q"),
            prop(Form::A, "S", "M"),
            prop(Form::A, "S", "P"),
        );
        assert!(matches!(
            no_p.roles(),
            Err(MalformedSyllogism::MajorLacksPredicate(_))
        ));
        let repeated = Syllogism::new(
            prop(Form::A, "M", "M"),
            prop(Form::A, "S", "M"),
            prop(Form::A, "S", "P"),
        );
        assert_eq!(
            repeated.roles(),
            Err(MalformedSyllogism::RepeatedTerm(Slot::Major))
        );
    }

    #[test]
    fn mnemonics() {
        let barbara = "AAA-1".parse::<Mood>().unwrap();
        assert_eq!(mnemonic_of(&barbara), Some("Barbara"));
        assert_eq!(mnemonic_of(&"AOO-2".parse().unwrap()), Some("Baroco"));
        assert_eq!(mnemonic_of(&"AAA-2".parse().unwrap()), None);
        assert_eq!(mood_of("barbara"), Ok(barbara));
        assert!(matches!(mood_of("Barbari"), Err(ModelError::UnknownName(_))));
        for (name, _) in Mood::named() {
            assert_eq!(mood_of(name).unwrap().mnemonic(), Some(name));
        }
    }

    #[test]
    fn enumeration() {
        let all = enumerate_all();
        assert_eq!(all.len(), 256);
        assert_eq!(all[0].mood().unwrap().to_string(), "AAA-1");
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 256);
        let named = all
            .iter()
            .filter(|s| s.mood().unwrap().mnemonic().is_some())
            .count();
        assert_eq!(named, 15);
        for (s, mood) in all.iter().zip(Mood::all()) {
            assert_eq!(s.mood().unwrap(), mood);
            assert_eq!(mood.syllogism(), *s);
        }
    }

    #[test]
    fn mood_text() {
        assert!("AAA-5".parse::<Mood>().is_err());
        assert!("AXA-1".parse::<Mood>().is_err());
        assert_eq!("eio-4".parse::<Mood>().unwrap().mnemonic(), Some("Fresison"));
    }
}
