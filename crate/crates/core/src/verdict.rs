use serde::{Deserialize, Serialize};

/// A named yes/no decision with the reason it came out that way.
///
/// `basis` names the statement the check implements, in words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    pub reason: String,
    pub basis: String,
}

impl Verdict {
    pub fn new(
        name: impl Into<String>,
        holds: bool,
        reason: impl Into<String>,
        basis: impl Into<String>,
    ) -> Self {
        Verdict {
            name: name.into(),
            holds,
            reason: reason.into(),
            basis: basis.into(),
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = if self.holds { "yes" } else { "no" };
        write!(f, "{}: {} ({})", self.name, mark, self.reason)
    }
}
