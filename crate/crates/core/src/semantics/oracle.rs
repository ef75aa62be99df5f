use serde::{Deserialize, Serialize};

use super::{eval, models, Model};
use crate::model::{Proposition, Syllogism, Term};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub countermodel: Option<Model>,
}

/// Exhaustive semantic check: the premises entail the conclusion in every
/// model of at most three elements. Terms are ordered S, M, P for standard
/// syllogisms (order of first appearance otherwise), which fixes which
/// countermodel is reported first.
pub fn oracle_decide(s: &Syllogism) -> OracleVerdict {
    let terms = match s.roles() {
        Ok(r) => vec![r.minor_term.base(), r.middle_term.base(), r.major_term.base()],
        Err(_) => s.base_terms(),
    };
    let countermodel = models(&terms).into_iter().find(|m| {
        let holds = |p: &Proposition| eval(p, m).expect("model binds every term");
        holds(&s.major) && holds(&s.minor) && !holds(&s.conclusion)
    });
    OracleVerdict {
        valid: countermodel.is_none(),
        countermodel,
    }
}

/// Two propositions agree in every model over their terms.
pub fn equivalent(a: &Proposition, b: &Proposition) -> bool {
    let mut terms: Vec<Term> = Vec::new();
    for t in [&a.subject, &a.predicate, &b.subject, &b.predicate] {
        if !terms.iter().any(|u| u.name() == t.name()) {
            terms.push(t.base());
        }
    }
    models(&terms)
        .iter()
        .all(|m| eval(a, m).expect("bound") == eval(b, m).expect("bound"))
}
