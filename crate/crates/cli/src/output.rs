use std::io::IsTerminal;

use serde::{Deserialize, Serialize};
use syllogism_core::diagram::{self, Verdict};
use syllogism_core::model::Mood;

/// ANSI colouring, on only for a terminal stdout without `NO_COLOR`.
#[derive(Debug, Clone, Copy)]
pub struct Style {
    color: bool,
}

impl Style {
    pub fn detect() -> Style {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Style {
            color: !no_color && std::io::stdout().is_terminal(),
        }
    }

    fn paint(self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_owned()
        }
    }

    pub fn good(self, text: &str) -> String {
        self.paint("32", text)
    }

    pub fn bad(self, text: &str) -> String {
        self.paint("31", text)
    }

    pub fn verdict(self, v: Verdict) -> String {
        match v {
            Verdict::Valid => self.good("valid"),
            Verdict::Invalid => self.bad("invalid"),
        }
    }
}

/// One `enumerate` row; the JSON and CSV schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumRow {
    pub mood: String,
    pub figure: u8,
    pub syllogism: String,
    pub verdict: Verdict,
    pub mnemonic: Option<String>,
}

impl EnumRow {
    pub fn new(mood: Mood) -> EnumRow {
        let s = mood.syllogism();
        EnumRow {
            mood: mood.to_string(),
            figure: mood.figure.number(),
            verdict: diagram::verdict(&s).expect("moods are standard form"),
            syllogism: s.to_string(),
            mnemonic: mood.mnemonic().map(str::to_owned),
        }
    }

    pub fn text_line(&self, style: Style) -> String {
        let verdict = format!("{:<7}", self.verdict);
        let verdict = match self.verdict {
            Verdict::Valid => style.good(&verdict),
            Verdict::Invalid => style.bad(&verdict),
        };
        format!(
            "{:<6} {:<14} {verdict} {}",
            self.mood,
            self.syllogism,
            self.mnemonic.as_deref().unwrap_or("")
        )
        .trim_end()
        .to_owned()
    }
}
