//! Game modes built on the decider.
//!
//! Arcade sessions hand out the two premise pieces of a valid syllogism and
//! ask the player to assemble a valid syllogism from them. Quiz sessions show
//! a syllogism and ask whether it is valid. Both are graded by
//! [`crate::diagram::decide`] and scored by [`score_delta`].

mod learning;
mod ranking;
mod session;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use learning::{learning_content, LearningPage, Section, Topic};
pub use ranking::{rank, RankingError, RankingStore, ScoreEntry};
pub use session::{
    draw_syllogism, finish_session, new_session, recompute_score, AnswerOutcome, AnswerRecord, Challenge,
    ChallengeView, GameSession, SessionState, MAX_CHALLENGES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Arcade,
    LearningQuiz,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Arcade => "arcade",
            Mode::LearningQuiz => "learning-quiz",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "arcade" => Ok(Mode::Arcade),
            "learning-quiz" => Ok(Mode::LearningQuiz),
            other => Err(GameError::UnknownMode(other.to_owned())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChallengeKind {
    /// Decide valid or invalid.
    Judge,
    /// Assemble a valid syllogism from the given premise pieces.
    Assemble,
}

/// A player's answer: a verdict for judge challenges, a syllogism string for
/// assemble challenges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Answer {
    Verdict(crate::diagram::Verdict),
    Assembly(String),
}

impl FromStr for Answer {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use crate::diagram::Verdict;
        let t = s.trim();
        Ok(match t.to_ascii_lowercase().as_str() {
            "valid" | "v" => Answer::Verdict(Verdict::Valid),
            "invalid" | "i" => Answer::Verdict(Verdict::Invalid),
            _ => Answer::Assembly(t.to_owned()),
        })
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Verdict(v) => write!(f, "{v}"),
            Answer::Assembly(s) => f.write_str(s),
        }
    }
}

impl Serialize for Answer {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Answer {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        Ok(raw.parse().expect("infallible"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("challenge count must be between 1 and {max}, got {0}", max = MAX_CHALLENGES)]
    BadCount(usize),
    #[error("unknown mode {0:?}: expected arcade or learning-quiz")]
    UnknownMode(String),
    #[error("no challenge {0:?} in this session")]
    UnknownChallenge(String),
    #[error("challenge {0:?} was already answered")]
    DuplicateAnswer(String),
    #[error("the session is finished")]
    SessionFinished,
    #[error("{0} challenges are still unanswered; answer them or abandon the session")]
    SessionNotComplete(usize),
    #[error("a {0:?} challenge needs a {expected} answer", expected = match .0 { ChallengeKind::Judge => "valid/invalid", ChallengeKind::Assemble => "syllogism" })]
    AnswerKindMismatch(ChallengeKind),
    #[error("player name must be 1 to {max} visible characters", max = session::MAX_PLAYER_NAME)]
    BadPlayerName,
    #[error("unknown learning topic {0:?}")]
    UnknownTopic(String),
}

pub const BASE_POINTS: u64 = 100;
pub const MAX_SPEED_BONUS: u64 = 50;
/// Bonus lost per whole second taken.
pub const SPEED_BONUS_STEP: u64 = 5;
pub const STREAK_CAP: u32 = 5;

/// Points for one answer. `streak` counts consecutive correct answers
/// including this one.
pub fn score_delta(correct: bool, elapsed_ms: u64, streak: u32) -> u64 {
    if !correct {
        return 0;
    }
    let bonus = MAX_SPEED_BONUS.saturating_sub((elapsed_ms / 1000).saturating_mul(SPEED_BONUS_STEP));
    (BASE_POINTS + bonus) * u64::from(streak.clamp(1, STREAK_CAP))
}
