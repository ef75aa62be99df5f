use std::time::{SystemTime, UNIX_EPOCH};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{score_delta, Answer, ChallengeKind, GameError, Mode, ScoreEntry};
use crate::diagram::{self, Diagram, Verdict};
use crate::model::{Mood, Proposition, Syllogism};
use crate::notation::parse_syllogism;

pub const MAX_CHALLENGES: usize = 100;
pub(super) const MAX_PLAYER_NAME: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Challenge {
    pub id: String,
    pub kind: ChallengeKind,
    pub syllogism: Syllogism,
    /// Premise pieces in the order they are dealt (assemble only).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub pieces: Vec<Proposition>,
}

/// What the player gets to see: the syllogism for judge challenges, only the
/// pieces for assemble challenges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChallengeView {
    pub id: String,
    pub kind: ChallengeKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syllogism: Option<Syllogism>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub pieces: Vec<Proposition>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub piece_diagrams: Vec<Diagram>,
}

impl Challenge {
    pub fn view(&self) -> ChallengeView {
        ChallengeView {
            id: self.id.clone(),
            kind: self.kind,
            syllogism: (self.kind == ChallengeKind::Judge).then(|| self.syllogism.clone()),
            pieces: self.pieces.clone(),
            piece_diagrams: self.pieces.iter().map(diagram::encode).collect(),
        }
    }

    /// Grades an answer with the decider.
    pub fn grade(&self, answer: &Answer) -> Result<bool, GameError> {
        match (self.kind, answer) {
            (ChallengeKind::Judge, Answer::Verdict(v)) => Ok(*v == self.expected_verdict()),
            (ChallengeKind::Assemble, Answer::Assembly(text)) => Ok(self.accepts_assembly(text)),
            (kind, _) => Err(GameError::AnswerKindMismatch(kind)),
        }
    }

    pub fn expected_verdict(&self) -> Verdict {
        diagram::verdict(&self.syllogism).expect("challenges are standard form")
    }

    fn accepts_assembly(&self, text: &str) -> bool {
        let Ok(s) = parse_syllogism(text) else {
            return false;
        };
        let same_pieces = (s.major == self.pieces[0] && s.minor == self.pieces[1])
            || (s.major == self.pieces[1] && s.minor == self.pieces[0]);
        same_pieces && matches!(diagram::verdict(&s), Ok(Verdict::Valid))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SessionState {
    Active,
    Finished,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnswerRecord {
    pub challenge_id: String,
    pub answer: Answer,
    pub elapsed_ms: u64,
    pub correct: bool,
    pub delta: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnswerOutcome {
    pub challenge_id: String,
    pub correct: bool,
    /// The decider's verdict on the challenge syllogism.
    pub expected: Verdict,
    pub delta: u64,
    pub score: u64,
    pub streak: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GameSession {
    id: String,
    mode: Mode,
    seed: u64,
    challenges: Vec<Challenge>,
    answers: Vec<AnswerRecord>,
    score: u64,
    streak: u32,
    state: SessionState,
    abandoned: bool,
}

fn pools() -> (Vec<Syllogism>, Vec<Syllogism>) {
    Mood::all()
        .map(|m| m.syllogism())
        .partition(|s| s.mood().expect("standard").mnemonic().is_some())
}

/// A seeded draw: valid and invalid with equal probability when `valid` is
/// `None`, uniform within the chosen pool.
pub fn draw_syllogism(seed: u64, valid: Option<bool>) -> Syllogism {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (valid_pool, invalid_pool) = pools();
    draw(&mut rng, &valid_pool, &invalid_pool, valid)
}

fn draw(rng: &mut ChaCha8Rng, valid_pool: &[Syllogism], invalid_pool: &[Syllogism], valid: Option<bool>) -> Syllogism {
    let pick_valid = valid.unwrap_or_else(|| rng.gen_bool(0.5));
    let pool = if pick_valid { valid_pool } else { invalid_pool };
    pool[rng.gen_range(0..pool.len())].clone()
}

impl GameSession {
    /// Deterministic in `(mode, seed, count)`; only the id is fresh.
    pub fn new(mode: Mode, seed: u64, count: usize) -> Result<GameSession, GameError> {
        Self::with_id(uuid::Uuid::new_v4().to_string(), mode, seed, count)
    }

    pub fn with_id(id: String, mode: Mode, seed: u64, count: usize) -> Result<GameSession, GameError> {
        if !(1..=MAX_CHALLENGES).contains(&count) {
            return Err(GameError::BadCount(count));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (valid_pool, invalid_pool) = pools();
        let challenges = (0..count)
            .map(|i| {
                let id = format!("c{i}");
                match mode {
                    Mode::LearningQuiz => Challenge {
                        id,
                        kind: ChallengeKind::Judge,
                        syllogism: draw(&mut rng, &valid_pool, &invalid_pool, None),
                        pieces: Vec::new(),
                    },
                    Mode::Arcade => {
                        let syllogism = draw(&mut rng, &valid_pool, &invalid_pool, Some(true));
                        let mut pieces = vec![syllogism.major.clone(), syllogism.minor.clone()];
                        pieces.shuffle(&mut rng);
                        Challenge {
                            id,
                            kind: ChallengeKind::Assemble,
                            syllogism,
                            pieces,
                        }
                    }
                }
            })
            .collect();
        Ok(GameSession {
            id,
            mode,
            seed,
            challenges,
            answers: Vec::new(),
            score: 0,
            streak: 0,
            state: SessionState::Active,
            abandoned: false,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn challenges(&self) -> &[Challenge] {
        &self.challenges
    }

    pub fn answers(&self) -> &[AnswerRecord] {
        &self.answers
    }

    pub fn score(&self) -> u64 {
        self.score
    }

    pub fn streak(&self) -> u32 {
        self.streak
    }

    pub fn state(&self) -> SessionState {
        self.state
    }

    pub fn is_abandoned(&self) -> bool {
        self.abandoned
    }

    pub fn challenge(&self, id: &str) -> Option<&Challenge> {
        self.challenges.iter().find(|c| c.id == id)
    }

    pub fn pending(&self) -> impl Iterator<Item = &Challenge> {
        self.challenges
            .iter()
            .filter(|c| !self.answers.iter().any(|a| a.challenge_id == c.id))
    }

    pub fn submit_answer(&mut self, challenge_id: &str, answer: Answer, elapsed_ms: u64) -> Result<AnswerOutcome, GameError> {
        if self.state == SessionState::Finished {
            return Err(GameError::SessionFinished);
        }
        let challenge = self
            .challenge(challenge_id)
            .ok_or_else(|| GameError::UnknownChallenge(challenge_id.to_owned()))?;
        if self.answers.iter().any(|a| a.challenge_id == challenge_id) {
            return Err(GameError::DuplicateAnswer(challenge_id.to_owned()));
        }
        let correct = challenge.grade(&answer)?;
        let expected = challenge.expected_verdict();
        self.streak = if correct { self.streak + 1 } else { 0 };
        let delta = score_delta(correct, elapsed_ms, self.streak);
        self.score += delta;
        self.answers.push(AnswerRecord {
            challenge_id: challenge_id.to_owned(),
            answer,
            elapsed_ms,
            correct,
            delta,
        });
        Ok(AnswerOutcome {
            challenge_id: challenge_id.to_owned(),
            correct,
            expected,
            delta,
            score: self.score,
            streak: self.streak,
        })
    }

    /// Closes the session. Unanswered challenges are an error unless
    /// `abandon` is set, in which case only answered challenges count.
    pub fn finish(&mut self, player: &str, abandon: bool) -> Result<ScoreEntry, GameError> {
        if self.state == SessionState::Finished {
            return Err(GameError::SessionFinished);
        }
        let player = player.trim();
        if player.is_empty() || player.chars().count() > MAX_PLAYER_NAME || player.chars().any(char::is_control) {
            return Err(GameError::BadPlayerName);
        }
        let unanswered = self.pending().count();
        if unanswered > 0 && !abandon {
            return Err(GameError::SessionNotComplete(unanswered));
        }
        self.state = SessionState::Finished;
        self.abandoned = unanswered > 0;
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_millis() as u64)
            .unwrap_or(0);
        Ok(ScoreEntry {
            player: player.to_owned(),
            score: self.score,
            mode: self.mode,
            timestamp,
            session_id: self.id.clone(),
        })
    }
}

pub fn new_session(mode: Mode, seed: u64, count: usize) -> Result<GameSession, GameError> {
    GameSession::new(mode, seed, count)
}

/// Finishes the session and appends its entry to `store`.
pub fn finish_session(
    session: &mut GameSession,
    store: &super::RankingStore,
    player: &str,
    abandon: bool,
) -> Result<ScoreEntry, super::RankingError> {
    let entry = session.finish(player, abandon)?;
    store.append(&entry)?;
    Ok(entry)
}

/// Replays answers against a freshly generated session.
pub fn recompute_score(
    mode: Mode,
    seed: u64,
    count: usize,
    answers: &[(String, Answer, u64)],
) -> Result<u64, GameError> {
    let mut session = GameSession::with_id("replay".into(), mode, seed, count)?;
    for (id, answer, elapsed) in answers {
        session.submit_answer(id, answer.clone(), *elapsed)?;
    }
    Ok(session.score())
}
