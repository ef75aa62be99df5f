use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{GameError, Mode};
use crate::model::{Figure, Mood};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Topic {
    WhatIsLogic,
    WhatIsASyllogism,
    WhatIsDasasap,
    SoYouThinkYouAreLogical,
}

impl Topic {
    pub const ALL: [Topic; 4] = [
        Topic::WhatIsLogic,
        Topic::WhatIsASyllogism,
        Topic::WhatIsDasasap,
        Topic::SoYouThinkYouAreLogical,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            Topic::WhatIsLogic => "what-is-logic",
            Topic::WhatIsASyllogism => "what-is-a-syllogism",
            Topic::WhatIsDasasap => "what-is-dasasap",
            Topic::SoYouThinkYouAreLogical => "so-you-think-you-are-logical",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Topic::WhatIsLogic => "What's logic about?",
            Topic::WhatIsASyllogism => "What's a syllogism?",
            Topic::WhatIsDasasap => "What's dasasap?",
            Topic::SoYouThinkYouAreLogical => "So you think you are logical?",
        }
    }
}

impl fmt::Display for Topic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for Topic {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Topic::ALL
            .into_iter()
            .find(|t| t.slug() == s)
            .ok_or_else(|| GameError::UnknownTopic(s.to_owned()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub heading: String,
    pub body: String,
}

fn section(heading: &str, body: impl Into<String>) -> Section {
    Section {
        heading: heading.to_owned(),
        body: body.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum LearningPage {
    Page {
        topic: Topic,
        title: String,
        sections: Vec<Section>,
    },
    #[serde(rename_all = "camelCase")]
    Quiz {
        topic: Topic,
        title: String,
        description: String,
        mode: Mode,
        default_count: usize,
    },
}

pub fn learning_content(topic: &str) -> Result<LearningPage, GameError> {
    let topic: Topic = topic.parse()?;
    let page = |sections| LearningPage::Page {
        topic,
        title: topic.title().to_owned(),
        sections,
    };
    Ok(match topic {
        Topic::WhatIsLogic => page(vec![
            section(
                "Proposition",
                "A proposition is a sentence that is either true or false. \
                 \"All dogs are mammals\" is one; \"Close the door\" is not.",
            ),
            section(
                "Argument",
                "An argument is a list of propositions, the premises, offered as support \
                 for one more proposition, the conclusion.",
            ),
            section(
                "Form-content distinction",
                "The content of an argument is what it talks about: dogs, mammals, numbers. \
                 Its form is the pattern left when the content words are replaced by letters. \
                 \"All M is P, all S is M, so all S is P\" is a form with many contents.",
            ),
            section(
                "Truth-validity distinction",
                "Truth belongs to propositions; validity belongs to arguments. An argument is \
                 valid when its form guarantees that true premises give a true conclusion. \
                 A valid argument can have false premises, and an invalid one can happen to \
                 have a true conclusion.",
            ),
        ]),
        Topic::WhatIsASyllogism => {
            let mut table = String::new();
            for figure in Figure::ALL {
                let names: Vec<String> = Mood::named()
                    .filter(|(_, m)| m.figure == figure)
                    .map(|(name, m)| format!("{name} {}", m.syllogism()))
                    .collect();
                table.push_str(&format!("Figure {figure}: {}. ", names.join(", ")));
            }
            page(vec![
                section(
                    "Four kinds of proposition",
                    format!(
                        "A: {}. E: {}. I: {}. O: {}.",
                        crate::model::Form::A.reading("S", "P"),
                        crate::model::Form::E.reading("S", "P"),
                        crate::model::Form::I.reading("S", "P"),
                        crate::model::Form::O.reading("S", "P"),
                    ),
                ),
                section(
                    "Three terms",
                    "A categorical syllogism has two premises and a conclusion built from three \
                     terms. The conclusion relates S to P; the middle term M appears in both \
                     premises and links them.",
                ),
                section(
                    "Notation",
                    "Each proposition is written subject, form letter, predicate: MAP means \
                     \"All M is P\". A syllogism is major premise, minor premise, then the \
                     conclusion after ∴ (or =>): MAP,SAM=>SAP.",
                ),
                section(
                    "Figures",
                    "The figure records where M sits. Figure 1: subject of the major, predicate \
                     of the minor. Figure 2: predicate of both. Figure 3: subject of both. \
                     Figure 4: predicate of the major, subject of the minor.",
                ),
                section("The fifteen valid moods", table.trim_end().to_owned()),
            ])
        }
        Topic::WhatIsDasasap => page(vec![
            section(
                "Pieces",
                "Every proposition is a puzzle piece with two edges, one per term. An edge is \
                 a knob when the proposition says something about everything the term covers, \
                 and a socket otherwise. Solid pieces are affirmative, dashed ones negative, \
                 and particular pieces are half height.",
            ),
            section(
                "Snapping the middle",
                "Stack the two premises. The middle-term edges snap together only when one is \
                 a knob and the other a socket, and at most one premise is negative. A snapped \
                 middle is the piece \"All M is M\".",
            ),
            section(
                "Fitting the conclusion",
                "Once the middle holds, the conclusion piece must fit the leftover S and P \
                 edges: a knob in the conclusion needs a knob in its premise, the conclusion \
                 is negative exactly when one premise is, and two universal premises give a \
                 universal conclusion.",
            ),
            section(
                "Arcade",
                "You are dealt premise pieces and race the clock to assemble a valid \
                 syllogism. Quick correct answers and streaks score more.",
            ),
            section(
                "Learning",
                "Read these pages, then try the valid-or-invalid quiz and see where you land \
                 in the ranking.",
            ),
        ]),
        Topic::SoYouThinkYouAreLogical => LearningPage::Quiz {
            topic,
            title: topic.title().to_owned(),
            description: "Random syllogisms, one at a time: decide valid or invalid. \
                          Half of them are valid. Your score goes on the ranking."
                .to_owned(),
            mode: Mode::LearningQuiz,
            default_count: 10,
        },
    })
}
