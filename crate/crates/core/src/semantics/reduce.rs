use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::{SemanticsError, Target, TransformKind, Transformation};
use crate::diagram;
use crate::model::{Figure, Mood, Syllogism};

/// Search depth cap for [`reduce_to_figure1`].
pub const MAX_REDUCTION_DEPTH: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub transformation: Transformation,
    pub result: Syllogism,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub start: Syllogism,
    pub steps: Vec<ReductionStep>,
    /// The figure-1 mood reached, up to renaming of terms.
    pub target: Mood,
}

impl Reduction {
    pub fn end(&self) -> &Syllogism {
        self.steps.last().map(|s| &s.result).unwrap_or(&self.start)
    }

    /// One line per step: `step k: kind(target) ⊢ canonical-string`.
    pub fn lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .enumerate()
            .map(|(k, step)| format!("step {}: {} ⊢ {}", k + 1, step.transformation, step.result))
            .collect()
    }
}

/// Moves tried from each state, in this order. The order decides which of
/// several equally short derivations is returned.
fn moves() -> Vec<Transformation> {
    use Target::*;
    use TransformKind::*;
    vec![
        Transformation::new(Converse, Major),
        Transformation::new(Converse, Minor),
        Transformation::new(Contrapositive, Major),
        Transformation::new(Contrapositive, Minor),
        Transformation::transpose(),
        Transformation::new(Converse, Conclusion),
        Transformation::new(Contrapositive, Conclusion),
        Transformation::new(Obverse, Conclusion),
        Transformation::new(Obverse, Minor),
        Transformation::new(Obverse, Major),
    ]
}

fn figure_one_target(s: &Syllogism) -> Option<Mood> {
    let mood = s.mood().ok()?;
    (mood.figure == Figure::One && mood.mnemonic().is_some()).then_some(mood)
}

/// Breadth-first search for a chain of equivalence transformations that
/// turns a valid syllogism into one of the four valid figure-1 moods,
/// complemented terms allowed along the way. Returns a shortest chain.
pub fn reduce_to_figure1(s: &Syllogism) -> Result<Reduction, SemanticsError> {
    if !diagram::decide(s)?.verdict.is_valid() {
        return Err(SemanticsError::NotValid);
    }
    if let Some(target) = figure_one_target(s) {
        return Ok(Reduction {
            start: s.clone(),
            steps: Vec::new(),
            target,
        });
    }
    let moves = moves();
    // state -> (parent, move that produced it)
    let mut parents: HashMap<Syllogism, Option<(Syllogism, Transformation)>> = HashMap::new();
    parents.insert(s.clone(), None);
    let mut queue = VecDeque::from([(s.clone(), 0usize)]);
    while let Some((state, depth)) = queue.pop_front() {
        if depth == MAX_REDUCTION_DEPTH {
            continue;
        }
        for mv in &moves {
            let Ok(next) = mv.apply(&state) else { continue };
            if parents.contains_key(&next) {
                continue;
            }
            parents.insert(next.clone(), Some((state.clone(), *mv)));
            if let Some(target) = figure_one_target(&next) {
                return Ok(Reduction {
                    start: s.clone(),
                    steps: rebuild(&parents, next),
                    target,
                });
            }
            queue.push_back((next, depth + 1));
        }
    }
    Err(SemanticsError::ReductionNotFound(MAX_REDUCTION_DEPTH))
}

fn rebuild(
    parents: &HashMap<Syllogism, Option<(Syllogism, Transformation)>>,
    end: Syllogism,
) -> Vec<ReductionStep> {
    let mut steps = Vec::new();
    let mut cursor = end;
    while let Some(Some((parent, mv))) = parents.get(&cursor) {
        steps.push(ReductionStep {
            transformation: *mv,
            result: cursor.clone(),
        });
        cursor = parent.clone();
    }
    steps.reverse();
    steps
}
